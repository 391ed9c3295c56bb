//! Generalized Bessel functions `aB_{b,p,c}`, zeros of Bessel and Dini
//! functions, and solvers for the radius-of-starlikeness and
//! starlikeness-threshold equations of the normalized families
//! `f_{a,nu}`, `g_{a,nu}` and `h_{a,nu}`.
//!
//! All functions are pure; none hold shared state.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bessel;
pub mod config;
pub mod disk;
pub mod error;
pub mod gamma;
pub mod identities;
pub mod roots;
pub mod series;
pub mod starlike;
pub mod tables;
pub mod zeros;

pub use bessel::{
    eval_bessel_i, eval_bessel_j, eval_bessel_j_deriv, eval_gbessel, ComplexValue, GBesselParams,
};
pub use config::SeriesConfig;
pub use disk::{eval_f, eval_g, eval_h, starlike_functional, verify_starlike_on_disk, DiskReport, GridSpec, Verdict};
pub use error::{Error, Result};
pub use gamma::gamma_fn;
pub use identities::{
    eval_gbessel_via_product, log_deriv_gbessel_normalized, recurrence_residuals, weierstrass_log_deriv,
    ProductPrefactor,
};
pub use roots::{EquationId, RootResult};
pub use starlike::{
    condition_asum, in_disk_radius, nu_tilde, radius, radius_f, radius_g, radius_h, threshold_nu_f,
    threshold_nu_g, Family, RadiusQuery,
};
pub use tables::{compute_table, Table, TableCell, TableId};
pub use zeros::{
    bessel_j_zero, dini_imaginary_zero_bound, dini_smallest_positive_root,
    gbessel_smallest_positive_zero, modified_dini_root, BesselZero, DiniSpec,
};
