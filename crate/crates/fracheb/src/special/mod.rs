//! Foundational special functions: log-Gamma, Gamma ratios, digamma,
//! Pochhammer, Gauss ₂F₁ and classical orthogonal polynomials.

pub mod gamma;
pub mod hyp;
pub mod poly;

pub use gamma::{digamma, gamma, gamma_ratio, ln_gamma, pochhammer};
pub use hyp::{hyp2f1, Hyp2F1Args, DEFAULT_TOL};
pub use poly::{chebyshev_t, gegenbauer, jacobi_p};
