//! Exact Hilbert functions, reductions and depth bounds for the associated
//! graded ring of an 𝔪-primary ideal.
//!
//! ```
//! use hsdepth_core::{analyze, AnalysisOptions, NumericalSemigroup, PrimeField, SemigroupIdeal, SemigroupRing};
//!
//! let ring = SemigroupRing::new(NumericalSemigroup::new(&[3, 4, 5]).unwrap(), PrimeField::default());
//! let ideal = SemigroupIdeal::monomial(&ring, &[3, 4]).unwrap();
//! let a = analyze(ideal, &AnalysisOptions::default()).unwrap();
//! assert_eq!(a.profile.unwrap().e, vec![3, 2]);
//! ```

#![allow(clippy::wrong_self_convention)]

pub mod error;
pub mod field;
pub mod analysis;
pub mod criteria;
pub mod graded;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod reduction;
pub mod sally;
pub mod semigroup;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use analysis::{analyze, Analysis, AnalysisOptions, Bounds, Diagnostic, QuotientSummary};
pub use criteria::{CheckOutcome, DepthKind, DepthVerdict, HmSums, VvResult, Witness};
pub use graded::{GradedIdeal, GradedRing};
pub use groebner::GroebnerBasis;
pub use hilbert::{HilbertProfile, PolynomialFit};
pub use ideal::LocalIdeal;
pub use poly::{Monomial, MonomialOrder, PolyRing, SparsePolynomial};
pub use quotient::QuotientIdeal;
pub use reduction::{ReductionCertificate, SuperficialCertificate};
pub use sally::SallyProfile;
pub use semigroup::{NumericalSemigroup, SemigroupElement, SemigroupIdeal, SemigroupRing};
