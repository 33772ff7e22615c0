//! Witt vectors of the Lawvere quantale.
//!
//! - [`partition`]: integer partitions, Young-lattice covers, hook lengths.
//! - [`symfunc`]: Λ over ℕ in the monomial basis, with both coproducts and
//!   plethysm; [`poly`] is the explicit-polynomial oracle behind it.
//! - [`quantale`]: the Lawvere quantale `([0, ∞], min, +)`.
//! - [`witt`]: the Witt rig 𝕎(𝕃), θ, τ and the sub-poset 𝕎(𝕃)ₗ.
//! - [`enriched`]: 𝕃- and 𝕎(𝕃)-enriched categories and their slices.
//! - [`plancherel`]: Plancherel measure and growth process.
//! - [`suite`]: the named property suites run by `wittl suite run`.

pub mod enriched;
pub mod error;
pub mod partition;
pub mod plancherel;
pub mod poly;
pub mod quantale;
pub mod sample;
pub mod suite;
pub mod symfunc;
pub mod witt;

pub use enriched::{LCategory, WCategory};
pub use error::{Error, Result};
pub use partition::Partition;
pub use quantale::LValue;
pub use symfunc::{SymFunc, TensorSymFunc, DEFAULT_DEGREE_BOUND};
pub use witt::WittElem;
