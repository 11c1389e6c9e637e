//! The sl₂ triple of the deformed setting: radial sectors and their
//! orthonormal Laguerre-type basis, the operators {H, E±} and their Cayley
//! transform {K, N±}, the discrete spectrum of the deformed Laplacian, and
//! the spectral (coefficient-wise) action of the holomorphic semigroup and
//! of the deformed Fourier transform.

mod bargmann;
mod error;
mod ops;
mod sector;
mod spectral;

pub use bargmann::{segal_bargmann_apply, SegalBargmannImage};
pub use error::Sl2Error;
pub use ops::{
    kmat_oracle, nminus_oracle, nplus_oracle, operator_matrix, skew_symmetry_residual,
    sl2_operators_apply, sl2_relation_check, Sl2Op, Sl2RelationReport,
};
pub use sector::{phi_basis, phi_norm_sq_unnormalized, RadialSector, SectorFunction};
pub use spectral::{
    expand, fka_apply_spectral, semigroup_apply, spectrum, DefectPolicy, EigenvalueEntry,
    SectorSample, SpectralFunction, Truncation,
};

pub use kaf_quadrature::DeformParams;
pub use kaf_specfun::Cplx;

/// Parseval defect above which spectral operations refuse a truncated
/// expansion under `DefectPolicy::Refuse`.
pub const DEFECT_LIMIT: f64 = 1e-6;
