//! The deformed Fourier transform as an integral operator: closed-form
//! kernels B(x,y), quadrature application on ℝᴺ, the one-variable Hankel
//! transform it factors through on harmonic sectors, and executable checks
//! of the identities it satisfies — Hecke, Bochner, the master formula,
//! the kernel PDE system, the Heisenberg inequality, exact inversion and
//! finite order, and the ladder-matrix intertwining relations.

mod ambient;
mod bkernel;
mod error;
mod fka;
mod hankel;
mod heisenberg;
mod identities;
mod intertwine;
mod inversion;

pub use ambient::{weighted_sphere_rule, AmbientGrid};
pub use bkernel::{b_kernel, b_kernel_via_semigroup, BKernelSpec, BScope};
pub use error::TransformError;
pub use fka::{fka_apply_kernel, plancherel_residual};
pub use hankel::hankel;
pub use heisenberg::heisenberg_product;
pub use identities::{
    bochner_check, hecke_check, master_formula_check, pde_residuals, PdeReport,
};
pub use intertwine::{intertwining_residuals, IntertwineReport};
pub use inversion::{inversion_check, phase_exponent_mod2, InversionReport, SquareBehavior};

pub use kaf_quadrature::DeformParams;
pub use kaf_specfun::Cplx;
