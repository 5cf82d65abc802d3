//! Skew constacyclic codes over `R = F_q + vF_q + v^2F_q` (`v^3 = v`), their
//! Gray images, and non-binary quantum codes from the CSS construction.
//!
//! All arithmetic is exact. The pipeline is:
//!
//! 1. pick `δ ∈ R` whose CRT coordinates `λ0, λ1, λ2` are `±1`;
//! 2. pick monic right divisors `fi` of `x^n - λi` in `F_q[x; Θ]`;
//! 3. check `C^⊥ ⊆ C` through the skew-reciprocal criterion ([`quantum`]);
//! 4. map `C` to `F_q^{3n}` with a Gray matrix ([`gray`]) and certify its
//!    minimum distance ([`distance`]);
//! 5. read off `[[3n, 2k - 3n, d]]`.

pub mod cli;
pub mod distance;
pub mod error;
pub mod finite_field;
pub mod gray;
pub mod linear_code;
pub mod matrix;
pub mod par;
pub mod quantum;
pub mod ring_r;
pub mod skew_poly;

pub use error::{Error, Result};
pub use finite_field::{Field, FieldElement, FieldParams};
pub use gray::{GrayMatrix, GrayOrder};
pub use linear_code::{LinearCode, RCode};
pub use par::Execution;
pub use quantum::{CodeContext, QuantumCodeRecord, QuantumParams};
pub use ring_r::{CrtCoords, RingElement, RingR};
pub use skew_poly::{SkewPoly, SkewRing};
