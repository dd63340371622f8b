//! Generalised Gegenbauer functions of fractional degree (GGF-Fs),
//! Riemann–Liouville fractional calculus on power/log families, Chebyshev
//! expansion coefficients of singular functions, and sharp coefficient and
//! truncation bounds — every closed formula cross-verified against an
//! independent numerical oracle.
//!
//! Layout mirrors the math:
//! - [`special`]: log-Gamma, Gamma ratios, digamma, ₂F₁, classical polynomials
//! - [`ggf`]: the fractional-degree Gegenbauer functions and their uniform bounds
//! - [`fractional`]: Riemann–Liouville operators and the GGF-F transform identities
//! - [`cheb`]: Chebyshev coefficients of singular families (oracle, exact, asymptotic)
//! - [`bounds`]: coefficient/truncation bound evaluators and prior-art comparisons
//! - [`verify`]: the self-check suites behind `fracheb verify`
//! - [`cli`]: CSV/SVG emitting command implementations
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, or the `fracheb` binary for the command-line front end.

pub mod bounds;
pub mod cheb;
pub mod cli;
pub mod error;
pub mod fractional;
pub mod ggf;
pub mod output;
pub mod quad;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
