//! Exact asymptotic slope spectra of vector bundles on curves.
//!
//! Input is the Harder-Narasimhan type of a bundle `V` (ranks and degrees of
//! its semistable factors, each assumed strongly semistable). From it the
//! crate computes the supremum `nu_s(V)` of the spectrum of normalized
//! maximal rank-`s` subbundle slopes under finite pullbacks, strong
//! semistability and isolation criteria, and the intersection numbers on
//! Grassmann bundles that produce spectrum values approaching `mu(V)`.
//!
//! All arithmetic is exact. The library is generic over an integer scalar
//! (see [`scalar::Scalar`]); the aliases below fix it to [`BigInt`].

pub mod audit;
pub mod bundle_file;
pub mod error;
pub mod grassmann;
pub mod hn;
pub mod oracles;
pub mod polygon;
pub mod report;
pub mod scalar;
pub mod spectrum;

pub use num_bigint::BigInt;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision reduced fraction.
pub type Rational = num_rational::BigRational;
pub type HnBlock = hn::HnBlock<BigInt>;
pub type HnType = hn::HnType<BigInt>;
pub type HnPolygon = polygon::HnPolygon<BigInt>;
pub type SpectrumRow = spectrum::SpectrumRow<BigInt>;
pub type SpectrumReport = spectrum::SpectrumReport<BigInt>;
pub type GrassmannSetup = grassmann::GrassmannSetup<BigInt>;
pub type WeylBundleData = grassmann::WeylBundleData<BigInt>;
pub type CiCurveData = grassmann::CiCurveData<BigInt>;
pub type CoverGenus = grassmann::CoverGenus<BigInt>;
pub type AllocationWitness = oracles::AllocationWitness<BigInt>;

pub use spectrum::Isolation;
