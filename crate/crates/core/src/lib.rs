//! Exact computational algebra for invariant theory of `GL_g`, graded
//! commutative algebras and the spectral-sequence models built from them.
//!
//! Everything is computed exactly; the scalar type is generic over
//! [`Field`], with [`Rational`] as the working field and a prime field
//! [`Mersenne61`] used for cross-checks.
//!
//! ```
//! use invalg::invariants::{Group, TensorSpaceSpec};
//! use invalg::model::{diff_cohomology, ModelParams};
//!
//! let inv = TensorSpaceSpec::new(2, 2, 3)?.invariant_basis(Group::GL)?;
//! assert_eq!(inv.ncols(), 2);
//!
//! let p = ModelParams::new(9, 30, 6, 5)?;
//! assert_eq!(diff_cohomology(&p)?.dims(), [1, 0, 0, 0, 0, 1]);
//! # Ok::<(), invalg::Error>(())
//! ```

pub mod error;
pub mod field;
pub mod gca;
pub mod invariants;
pub mod linalg;
pub mod model;
pub mod schur;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Field, Fp};

pub type Rational = num_rational::BigRational;
pub type RationalMatrix = linalg::Matrix<Rational>;
/// The prime field of order `2^61 - 1`.
pub type Mersenne61 = Fp<2305843009213693951>;
