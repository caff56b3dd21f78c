//! Numerical machinery for one-dimensional Lévy processes with exponentially
//! tempered jumps: characteristic exponents for the standard model catalog,
//! Stieltjes–Lévy measure densities read off the cuts of ψ, Wiener–Hopf
//! factors through several contour representations, survival probabilities
//! P[X̄_t < x] by double Laplace–Fourier inversion, and the closed-form
//! asymptotic coefficients of the lower-tail (x ↓ 0) and long-horizon
//! (t → ∞) regimes.
//!
//! Entry points:
//! - [`models::LevyModel`] — the model catalog and ψ, ψ', cut values, traits;
//! - [`slmeasure`] — SL-measure densities, Lévy-density reconstruction;
//! - [`roots`] — zeros of q + ψ on the imaginary axis;
//! - [`whf`] — Wiener–Hopf factors φ_q^± (direct, normalized, SL-cut forms);
//! - [`inversion`] — P[X̄_t < x] and P[X̄_t ≥ x];
//! - [`asymptotics`] — κ_k(t), p_∞(x), p_{∞,0}(x) and regime classification;
//! - [`mc`] — Monte Carlo validation oracle;
//! - [`cli`] — the `levywh` command-line driver.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod asymptotics;
pub mod cli;
pub mod error;
pub mod inversion;
pub mod io;
pub mod mc;
pub mod models;
pub mod quad;
pub mod roots;
pub mod slmeasure;
pub mod whf;

pub use error::{LevyError, Result};
pub use models::{Bank, CutSide, FactorAsym, JumpTerm, LevyModel, ProcessOrder, ProcessTraits, SlKind};
