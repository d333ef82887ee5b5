//! Numerical kernels: Jacobi elliptic functions, partial fractions, Newton
//! continuation in a real parameter, adaptive Gauss-Kronrod quadrature.

pub mod continuation;
pub mod elliptic;
pub mod partial_fractions;
pub mod quadrature;

pub use continuation::{newton_continuation, ContinuationOptions};
pub use elliptic::{carlson_rf, inverse_sn, jacobi_sn_cn_dn, JacobiTriple};
pub use partial_fractions::{partial_fractions, QuadratureData};
pub use quadrature::{adaptive_quadrature, integrate_real};
