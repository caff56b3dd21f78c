//! Lévy model catalog: characteristic exponents, analytic continuations and
//! process metadata.
//!
//! The sign convention throughout is `E[exp(i ξ X_t)] = exp(-t ψ(ξ))` with
//! `ψ(ξ) = -i μ ξ + ψ⁰(ξ)`, so `Re ψ(ξ) ≥ 0` on the real axis and ψ is real
//! on the imaginary segment of its analyticity strip.  All fractional powers
//! and logarithms use the principal branch of the respective factor, which
//! places the cuts of ψ exactly on `i((-∞, μ₋] ∪ [μ₊, +∞))`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{LevyError, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// One exponential jump term of an HEJD model: intensity weight `p` and
/// tempering rate `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JumpTerm {
    pub p: f64,
    pub alpha: f64,
}

/// The model catalog.  Each variant stores validated parameters and is the
/// single source of the characteristic exponent ψ.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "lowercase")]
pub enum LevyModel {
    /// Brownian motion with drift: ψ⁰(ξ) = σ²ξ²/2.
    #[serde(rename = "bm")]
    BrownianDrift { sigma2: f64, mu: f64 },
    /// Merton jump diffusion: ψ⁰(ξ) = σ²ξ²/2 + λ(1 − e^{imξ − s²ξ²/2}).
    Merton {
        sigma: f64,
        lambda: f64,
        m: f64,
        s: f64,
        mu: f64,
    },
    /// Hyper-exponential jump diffusion.
    #[serde(rename = "hejd")]
    Hejd {
        sigma: f64,
        mu: f64,
        pos_terms: Vec<JumpTerm>,
        neg_terms: Vec<JumpTerm>,
    },
    /// Variance Gamma: ψ⁰(ξ) = c[ln(α² − (β+iξ)²) − ln(α² − β²)].
    #[serde(rename = "vg")]
    Vg { c: f64, alpha: f64, beta: f64, mu: f64 },
    /// Normal tempered stable (NIG for ν = 1):
    /// ψ⁰(ξ) = δ[(α² − (β+iξ)²)^{ν/2} − (α² − β²)^{ν/2}].
    #[serde(rename = "nts")]
    Nts {
        delta: f64,
        nu: f64,
        alpha: f64,
        beta: f64,
        mu: f64,
    },
    /// Two-sided tempered stable (KoBoL/CGMY family).  Orders `nu_plus`,
    /// `nu_minus` in [0, 2); the 0 and 1 cases use the log forms.
    #[serde(rename = "kobol")]
    Kobol {
        nu_plus: f64,
        nu_minus: f64,
        c_plus: f64,
        c_minus: f64,
        lambda_minus: f64,
        lambda_plus: f64,
        mu: f64,
    },
    /// Meixner process: ψ⁰(ξ) = 2δ[ln cosh((aξ − ib)/2) − ln cos(b/2)].
    Meixner { delta: f64, a: f64, b: f64, mu: f64 },
}

/// Growth order of ψ⁰ at infinity inside the analyticity domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProcessOrder {
    /// Logarithmic growth (VG-type).
    ZeroPlus,
    /// Power growth ρ^ν, ν ∈ (0, 2).
    Fractional(f64),
    /// ρ ln ρ growth (asymmetric order-1 tempered stable).
    OnePlus,
    /// Quadratic growth (diffusion component present).
    Two,
}

impl ProcessOrder {
    pub fn exponent(&self) -> f64 {
        match self {
            ProcessOrder::ZeroPlus => 0.0,
            ProcessOrder::Fractional(v) => *v,
            ProcessOrder::OnePlus => 1.0,
            ProcessOrder::Two => 2.0,
        }
    }
}

/// Stieltjes–Lévy classification of the model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlKind {
    /// Nonnegative SL measures; all zeros of q+ψ (q ≥ 0) lie on iℝ.
    Sl,
    /// Signed SL measures (Meixner); zeros may leave the imaginary axis.
    Ssl,
    /// Not an (s)SL process (Merton).
    NotSl,
}

/// Power-law data of ψ at infinity: ψ(ξ) ≈ c e^{±iφ} |ξ|^ν as ξ → ±∞ along
/// the real axis.  `DriftDominated` covers order < 1 with nonzero drift,
/// where the linear drift term leads instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FactorAsym {
    PowerLaw { c: f64, phi: f64, nu: f64 },
    DriftDominated { mu: f64 },
    None,
}

/// Analyticity and asymptotics metadata for a model.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessTraits {
    /// Lower strip bound μ₋ < 0 (−∞ for entire exponents).
    pub strip_lo: f64,
    /// Upper strip bound μ₊ > 0 (+∞ for entire exponents).
    pub strip_hi: f64,
    pub order: ProcessOrder,
    /// Decay exponent of φ_q^+ at i∞ (lower-tail exponent), in [0, 1].
    pub nu_plus: f64,
    /// Decay exponent of φ_q^- at −i∞, in [0, 1].
    pub nu_minus: f64,
    /// First instantaneous moment μ₁ = iψ'(0).
    pub mu1: f64,
    /// Second instantaneous moment μ₂ = ψ''(0).
    pub mu2: f64,
    pub sl_kind: SlKind,
    /// Linear drift μ of the ψ = −iμξ + ψ⁰ split.
    pub drift_mu: f64,
    pub asym: FactorAsym,
}

impl ProcessTraits {
    /// The coefficient c of ψ(ξ) ~ c e^{±iφ}|ξ|^ν, when a power law applies.
    pub fn asym_c(&self) -> Option<f64> {
        match self.asym {
            FactorAsym::PowerLaw { c, .. } => Some(c),
            _ => None,
        }
    }

    /// The phase φ of the power law, when it applies.
    pub fn asym_phi(&self) -> Option<f64> {
        match self.asym {
            FactorAsym::PowerLaw { phi, .. } => Some(phi),
            _ => None,
        }
    }

    /// Classification tolerance for treating μ₁ as zero.
    pub fn mu1_zero_tol(&self) -> f64 {
        1e-12 * (1.0 + self.mu2)
    }
}

/// Which cut of the analyticity domain a boundary value refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    /// i(−∞, μ₋]; points ξ = −iw with w > −μ₋.  Carrier of 𝒢₊.
    Lower,
    /// i[μ₊, +∞); points ξ = iw with w > μ₊.  Carrier of 𝒢₋.
    Upper,
}

/// Bank of a cut: the sign of Re ξ in the one-sided limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bank {
    Plus,
    Minus,
}

impl Bank {
    fn sign(self) -> f64 {
        match self {
            Bank::Plus => 1.0,
            Bank::Minus => -1.0,
        }
    }
}

/// Principal-branch power of a negative real approached from bank σ:
/// ((−m) + iσ0)^a = m^a e^{iσπa}.
fn cpow_neg_bank(mag: f64, a: f64, sigma: f64) -> Complex64 {
    let r = mag.powf(a);
    Complex64::new(r * (sigma * std::f64::consts::PI * a).cos(), r * (sigma * std::f64::consts::PI * a).sin())
}

/// ln of a negative real approached from bank σ: ln m + iσπ.
fn cln_neg_bank(mag: f64, sigma: f64) -> Complex64 {
    Complex64::new(mag.ln(), sigma * std::f64::consts::PI)
}

/// ln cosh(z) continued analytically off the imaginary axis (cuts only where
/// cosh vanishes).  Uses ln cosh z = z − ln 2 + ln(1 + e^{−2z}) for Re z ≥ 0
/// and evenness otherwise.
fn ln_cosh(z: Complex64) -> Complex64 {
    let w = if z.re >= 0.0 { z } else { -z };
    w - std::f64::consts::LN_2 + (Complex64::new(1.0, 0.0) + (-2.0 * w).exp()).ln()
}

/// One KoBoL side: tempering rate `lam` > 0, order `nu`, weight `c`.
/// Returns the ψ⁰-contribution as a function of ζ = lam ∓ iξ·(sign handled by
/// caller): specifically f(z) where z = lam − iξ for the positive-jump side
/// and z = lam + iξ for the negative-jump side.
fn kobol_side(c: f64, nu: f64, lam: f64, z: Complex64) -> Complex64 {
    if c == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if nu == 0.0 {
        c * (z / lam).ln()
    } else if nu == 1.0 {
        // Log-corrected order-1 form; reproduces Im ψ = πc(w − lam) on the cut.
        -c * (z * (z / lam).ln() - (z - lam))
    } else {
        c * gamma(-nu) * (Complex64::new(lam.powf(nu), 0.0) - z.powf(nu))
    }
}

/// Derivative of `kobol_side` with respect to ξ, given dz/dξ = s·(−i) where
/// s = +1 for the positive-jump side (z = lam − iξ) and s = −1 otherwise.
fn kobol_side_dxi(c: f64, nu: f64, lam: f64, z: Complex64, s: f64) -> Complex64 {
    if c == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let dz_dxi = Complex64::new(0.0, -s);
    let df_dz = if nu == 0.0 {
        c / z
    } else if nu == 1.0 {
        -c * (z / lam).ln()
    } else {
        -c * gamma(-nu) * nu * z.powf(nu - 1.0)
    };
    df_dz * dz_dxi
}

impl LevyModel {
    // Convenience constructors (validating).
    pub fn bm(sigma2: f64, mu: f64) -> Result<Self> {
        let m = LevyModel::BrownianDrift { sigma2, mu };
        m.validate()?;
        Ok(m)
    }

    pub fn merton(sigma: f64, lambda: f64, m: f64, s: f64, mu: f64) -> Result<Self> {
        let model = LevyModel::Merton { sigma, lambda, m, s, mu };
        model.validate()?;
        Ok(model)
    }

    pub fn hejd(sigma: f64, mu: f64, pos_terms: Vec<JumpTerm>, neg_terms: Vec<JumpTerm>) -> Result<Self> {
        let m = LevyModel::Hejd { sigma, mu, pos_terms, neg_terms };
        m.validate()?;
        Ok(m)
    }

    pub fn vg(c: f64, alpha: f64, beta: f64, mu: f64) -> Result<Self> {
        let m = LevyModel::Vg { c, alpha, beta, mu };
        m.validate()?;
        Ok(m)
    }

    pub fn nts(delta: f64, nu: f64, alpha: f64, beta: f64, mu: f64) -> Result<Self> {
        let m = LevyModel::Nts { delta, nu, alpha, beta, mu };
        m.validate()?;
        Ok(m)
    }

    /// NIG is NTS with ν = 1.
    pub fn nig(delta: f64, alpha: f64, beta: f64, mu: f64) -> Result<Self> {
        Self::nts(delta, 1.0, alpha, beta, mu)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn kobol(
        nu_plus: f64,
        nu_minus: f64,
        c_plus: f64,
        c_minus: f64,
        lambda_minus: f64,
        lambda_plus: f64,
        mu: f64,
    ) -> Result<Self> {
        let m = LevyModel::Kobol { nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, mu };
        m.validate()?;
        Ok(m)
    }

    pub fn meixner(delta: f64, a: f64, b: f64, mu: f64) -> Result<Self> {
        let m = LevyModel::Meixner { delta, a, b, mu };
        m.validate()?;
        Ok(m)
    }

    /// Checks every construction-time parameter constraint.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(LevyError::InvalidModel(msg));
        match self {
            LevyModel::BrownianDrift { sigma2, mu } => {
                if !(sigma2.is_finite() && *sigma2 >= 0.0 && mu.is_finite()) {
                    return bad(format!("bm requires sigma2 >= 0 finite, got sigma2={sigma2}, mu={mu}"));
                }
            }
            LevyModel::Merton { sigma, lambda, m, s, mu } => {
                if !(*sigma > 0.0 && *lambda > 0.0 && *s > 0.0 && m.is_finite() && mu.is_finite()) {
                    return bad(format!(
                        "merton requires sigma>0, lambda>0, s>0; got sigma={sigma}, lambda={lambda}, s={s}"
                    ));
                }
            }
            LevyModel::Hejd { sigma, pos_terms, neg_terms, mu } => {
                if !(*sigma >= 0.0 && mu.is_finite()) {
                    return bad(format!("hejd requires sigma >= 0, got {sigma}"));
                }
                if pos_terms.is_empty() || neg_terms.is_empty() {
                    return bad("hejd requires nonempty pos_terms and neg_terms".into());
                }
                for list in [pos_terms, neg_terms] {
                    for t in list {
                        if !(t.p > 0.0 && t.alpha > 0.0) {
                            return bad(format!("hejd term requires p>0, alpha>0, got p={}, alpha={}", t.p, t.alpha));
                        }
                    }
                    let mut alphas: Vec<f64> = list.iter().map(|t| t.alpha).collect();
                    alphas.sort_by(|a, b| a.partial_cmp(b).unwrap());
                    if alphas.windows(2).any(|w| w[0] == w[1]) {
                        return bad("hejd alphas must be distinct within each list".into());
                    }
                }
            }
            LevyModel::Vg { c, alpha, beta, mu } => {
                if !(*c > 0.0 && *alpha > 0.0 && beta.abs() < *alpha && mu.is_finite()) {
                    return bad(format!("vg requires c>0, alpha>0, |beta|<alpha; got c={c}, alpha={alpha}, beta={beta}"));
                }
            }
            LevyModel::Nts { delta, nu, alpha, beta, mu } => {
                if !(*delta > 0.0 && *nu > 0.0 && *nu < 2.0 && *alpha > 0.0 && beta.abs() < *alpha && mu.is_finite()) {
                    return bad(format!(
                        "nts requires delta>0, nu in (0,2), alpha>0, |beta|<alpha; got delta={delta}, nu={nu}, alpha={alpha}, beta={beta}"
                    ));
                }
            }
            LevyModel::Kobol { nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, mu } => {
                let nu_ok = |v: f64| (0.0..2.0).contains(&v);
                if !(nu_ok(*nu_plus) && nu_ok(*nu_minus)) {
                    return bad(format!("kobol requires nu_pm in [0,2); got {nu_plus}, {nu_minus}"));
                }
                if !(*c_plus >= 0.0 && *c_minus >= 0.0 && c_plus + c_minus > 0.0) {
                    return bad(format!("kobol requires c_pm >= 0 with c_plus+c_minus>0; got {c_plus}, {c_minus}"));
                }
                if !(*lambda_minus < 0.0 && *lambda_plus > 0.0 && mu.is_finite()) {
                    return bad(format!(
                        "kobol requires lambda_minus<0<lambda_plus; got {lambda_minus}, {lambda_plus}"
                    ));
                }
            }
            LevyModel::Meixner { delta, a, b, mu } => {
                if !(*delta > 0.0 && *a > 0.0 && b.abs() < std::f64::consts::PI && mu.is_finite()) {
                    return bad(format!("meixner requires delta>0, a>0, b in (-pi,pi); got delta={delta}, a={a}, b={b}"));
                }
            }
        }
        Ok(())
    }

    /// Linear drift μ of the ψ = −iμξ + ψ⁰ split.
    pub fn drift(&self) -> f64 {
        match self {
            LevyModel::BrownianDrift { mu, .. }
            | LevyModel::Merton { mu, .. }
            | LevyModel::Hejd { mu, .. }
            | LevyModel::Vg { mu, .. }
            | LevyModel::Nts { mu, .. }
            | LevyModel::Kobol { mu, .. }
            | LevyModel::Meixner { mu, .. } => *mu,
        }
    }

    /// Analyticity strip (μ₋, μ₊); ±∞ for entire exponents.
    pub fn strip(&self) -> (f64, f64) {
        match self {
            LevyModel::BrownianDrift { .. } | LevyModel::Merton { .. } => (f64::NEG_INFINITY, f64::INFINITY),
            LevyModel::Hejd { pos_terms, neg_terms, .. } => {
                let lo = -pos_terms.iter().map(|t| t.alpha).fold(f64::INFINITY, f64::min);
                let hi = neg_terms.iter().map(|t| t.alpha).fold(f64::INFINITY, f64::min);
                (lo, hi)
            }
            LevyModel::Vg { alpha, beta, .. } | LevyModel::Nts { alpha, beta, .. } => (-alpha + beta, alpha + beta),
            LevyModel::Kobol { lambda_minus, lambda_plus, .. } => (*lambda_minus, *lambda_plus),
            LevyModel::Meixner { a, b, .. } => {
                ((-std::f64::consts::PI + b) / a, (std::f64::consts::PI + b) / a)
            }
        }
    }

    fn check_domain(&self, xi: Complex64) -> Result<()> {
        if !(xi.re.is_finite() && xi.im.is_finite()) {
            return Err(LevyError::Argument(format!("nonfinite xi {xi}")));
        }
        if xi.re != 0.0 {
            return Ok(());
        }
        match self {
            LevyModel::Hejd { pos_terms, neg_terms, .. } => {
                let hit = pos_terms.iter().any(|t| xi.im == -t.alpha)
                    || neg_terms.iter().any(|t| xi.im == t.alpha);
                if hit {
                    return Err(LevyError::Domain {
                        what: format!("xi = {xi} is a pole of the HEJD exponent"),
                        location: format!("{}", xi.im),
                    });
                }
                Ok(())
            }
            LevyModel::BrownianDrift { .. } | LevyModel::Merton { .. } => Ok(()),
            _ => {
                let (lo, hi) = self.strip();
                if xi.im <= lo || xi.im >= hi {
                    Err(LevyError::Domain {
                        what: format!("xi = {xi} lies on a cut of the analyticity domain"),
                        location: format!("i({lo:.6}, {hi:.6}) strip"),
                    })
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Drift-free part ψ⁰(ξ) of the characteristic exponent.
    pub fn psi0(&self, xi: Complex64) -> Result<Complex64> {
        self.check_domain(xi)?;
        Ok(self.psi0_unchecked(xi))
    }

    fn psi0_unchecked(&self, xi: Complex64) -> Complex64 {
        match self {
            LevyModel::BrownianDrift { sigma2, .. } => 0.5 * sigma2 * xi * xi,
            LevyModel::Merton { sigma, lambda, m, s, .. } => {
                0.5 * sigma * sigma * xi * xi
                    + lambda * (Complex64::new(1.0, 0.0) - (I * m * xi - 0.5 * s * s * xi * xi).exp())
            }
            LevyModel::Hejd { sigma, pos_terms, neg_terms, .. } => {
                let mut v = 0.5 * sigma * sigma * xi * xi;
                for t in pos_terms {
                    v += t.p * (-I * xi) / (t.alpha - I * xi);
                }
                for t in neg_terms {
                    v += t.p * (I * xi) / (t.alpha + I * xi);
                }
                v
            }
            LevyModel::Vg { c, alpha, beta, .. } => {
                let w = alpha * alpha - (beta + I * xi) * (beta + I * xi);
                c * (w.ln() - (alpha * alpha - beta * beta).ln())
            }
            LevyModel::Nts { delta, nu, alpha, beta, .. } => {
                let w = alpha * alpha - (beta + I * xi) * (beta + I * xi);
                delta * (w.powf(nu / 2.0) - (alpha * alpha - beta * beta).powf(nu / 2.0))
            }
            LevyModel::Kobol { nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, .. } => {
                let lp = -lambda_minus; // tempering of positive jumps
                kobol_side(*c_plus, *nu_plus, lp, lp - I * xi)
                    + kobol_side(*c_minus, *nu_minus, *lambda_plus, lambda_plus + I * xi)
            }
            LevyModel::Meixner { delta, a, b, .. } => {
                let z = (a * xi - I * b) / 2.0;
                2.0 * delta * (ln_cosh(z) - Complex64::new((b / 2.0).cos().ln(), 0.0))
            }
        }
    }

    /// Characteristic exponent ψ(ξ) = −iμξ + ψ⁰(ξ).
    pub fn psi(&self, xi: Complex64) -> Result<Complex64> {
        Ok(-I * self.drift() * xi + self.psi0(xi)?)
    }

    /// Analytic derivative ψ'(ξ).
    pub fn psi_prime(&self, xi: Complex64) -> Result<Complex64> {
        self.check_domain(xi)?;
        Ok(self.psi_prime_unchecked(xi))
    }

    fn psi_prime_unchecked(&self, xi: Complex64) -> Complex64 {
        let drift = Complex64::new(0.0, -self.drift());
        drift
            + match self {
                LevyModel::BrownianDrift { sigma2, .. } => sigma2 * xi,
                LevyModel::Merton { sigma, lambda, m, s, .. } => {
                    let g = I * m * xi - 0.5 * s * s * xi * xi;
                    sigma * sigma * xi - lambda * (I * m - s * s * xi) * g.exp()
                }
                LevyModel::Hejd { sigma, pos_terms, neg_terms, .. } => {
                    let mut v: Complex64 = sigma * sigma * xi;
                    for t in pos_terms {
                        let d = t.alpha - I * xi;
                        v += -I * t.p * t.alpha / (d * d);
                    }
                    for t in neg_terms {
                        let d = t.alpha + I * xi;
                        v += I * t.p * t.alpha / (d * d);
                    }
                    v
                }
                LevyModel::Vg { c, alpha, beta, .. } => {
                    let bix = beta + I * xi;
                    let w = alpha * alpha - bix * bix;
                    -2.0 * c * I * bix / w
                }
                LevyModel::Nts { delta, nu, alpha, beta, .. } => {
                    let bix = beta + I * xi;
                    let w = alpha * alpha - bix * bix;
                    -I * delta * nu * bix * w.powf(nu / 2.0 - 1.0)
                }
                LevyModel::Kobol { nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, .. } => {
                    let lp = -lambda_minus;
                    kobol_side_dxi(*c_plus, *nu_plus, lp, lp - I * xi, 1.0)
                        + kobol_side_dxi(*c_minus, *nu_minus, *lambda_plus, lambda_plus + I * xi, -1.0)
                }
                LevyModel::Meixner { delta, a, .. } => {
                    let b = match self {
                        LevyModel::Meixner { b, .. } => *b,
                        _ => unreachable!(),
                    };
                    let z = (a * xi - I * b) / 2.0;
                    a * delta * z.tanh()
                }
            }
    }

    /// ψ(−iβ) for real β inside the strip: a real quantity.
    pub fn psi_im_axis(&self, beta: f64) -> f64 {
        self.psi_unchecked_c(Complex64::new(0.0, -beta)).re
    }

    /// d/dβ ψ(−iβ) = −iψ'(−iβ), real on the strip.
    pub fn psi_im_axis_deriv(&self, beta: f64) -> f64 {
        (-I * self.psi_prime_unchecked(Complex64::new(0.0, -beta))).re
    }

    pub(crate) fn psi_unchecked_c(&self, xi: Complex64) -> Complex64 {
        -I * self.drift() * xi + self.psi0_unchecked(xi)
    }

    /// One-sided boundary value ψ(−iw ∓ 0) (lower cut) or ψ(iw ± 0) (upper
    /// cut), computed from closed-form continuations rather than finite-ε
    /// limits.
    pub fn psi_cut(&self, cut: CutSide, bank: Bank, w: f64) -> Result<Complex64> {
        let (lo, hi) = self.strip();
        // Approach bank ±0 in ξ maps to the ∓ side of the factor's own cut on
        // the lower cut and to the ± side on the upper cut.
        let sigma = match cut {
            CutSide::Lower => -bank.sign(),
            CutSide::Upper => bank.sign(),
        };
        match cut {
            CutSide::Lower => {
                if !lo.is_finite() {
                    return Err(LevyError::Domain {
                        what: "model has no lower cut".into(),
                        location: "entire or meromorphic exponent".into(),
                    });
                }
                if w <= -lo {
                    return Err(LevyError::Domain {
                        what: format!("w = {w} lies inside the strip; lower cut starts at {}", -lo),
                        location: format!("{}", -lo),
                    });
                }
            }
            CutSide::Upper => {
                if !hi.is_finite() {
                    return Err(LevyError::Domain {
                        what: "model has no upper cut".into(),
                        location: "entire or meromorphic exponent".into(),
                    });
                }
                if w <= hi {
                    return Err(LevyError::Domain {
                        what: format!("w = {w} lies inside the strip; upper cut starts at {hi}"),
                        location: format!("{hi}"),
                    });
                }
            }
        }
        let xi = match cut {
            CutSide::Lower => Complex64::new(0.0, -w),
            CutSide::Upper => Complex64::new(0.0, w),
        };
        let drift = -I * self.drift() * xi;
        let val = match self {
            LevyModel::Hejd { .. } | LevyModel::BrownianDrift { .. } | LevyModel::Merton { .. } => {
                return Err(LevyError::Domain {
                    what: "model has no branch cut".into(),
                    location: "meromorphic/entire exponent".into(),
                })
            }
            LevyModel::Kobol { nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, .. } => {
                let lp = -lambda_minus;
                match cut {
                    CutSide::Lower => {
                        // (lp − iξ) = −(w − lp) + iσ0; other side regular.
                        let singular = kobol_side_cut(*c_plus, *nu_plus, lp, w - lp, sigma, w);
                        let regular = kobol_side(*c_minus, *nu_minus, *lambda_plus, Complex64::new(lambda_plus + w, 0.0));
                        singular + regular
                    }
                    CutSide::Upper => {
                        let singular = kobol_side_cut(*c_minus, *nu_minus, *lambda_plus, w - lambda_plus, sigma, w);
                        let regular = kobol_side(*c_plus, *nu_plus, lp, Complex64::new(lp + w, 0.0));
                        singular + regular
                    }
                }
            }
            LevyModel::Vg { c, alpha, beta, .. } => {
                let mag = match cut {
                    CutSide::Lower => (w + beta) * (w + beta) - alpha * alpha,
                    CutSide::Upper => (w - beta) * (w - beta) - alpha * alpha,
                };
                c * (cln_neg_bank(mag, sigma) - Complex64::new((alpha * alpha - beta * beta).ln(), 0.0))
            }
            LevyModel::Nts { delta, nu, alpha, beta, .. } => {
                let mag = match cut {
                    CutSide::Lower => (w + beta) * (w + beta) - alpha * alpha,
                    CutSide::Upper => (w - beta) * (w - beta) - alpha * alpha,
                };
                delta
                    * (cpow_neg_bank(mag, nu / 2.0, sigma)
                        - Complex64::new((alpha * alpha - beta * beta).powf(nu / 2.0), 0.0))
            }
            LevyModel::Meixner { delta, a, b, .. } => {
                let y = match cut {
                    CutSide::Lower => (a * w + b) / 2.0,
                    CutSide::Upper => (a * w - b) / 2.0,
                };
                let c = y.cos();
                let re = 2.0 * delta * (c.abs().ln() - (b / 2.0).cos().ln());
                let im = if c < 0.0 {
                    2.0 * delta * std::f64::consts::PI * sigma * y.sin().signum()
                } else {
                    0.0
                };
                Complex64::new(re, im)
            }
        };
        Ok(drift + val)
    }

    /// One-sided boundary value of ψ' on a cut bank, mirroring `psi_cut`.
    pub fn psi_prime_cut(&self, cut: CutSide, bank: Bank, w: f64) -> Result<Complex64> {
        // Reuse the domain checks.
        self.psi_cut(cut, bank, w)?;
        let sigma = match cut {
            CutSide::Lower => -bank.sign(),
            CutSide::Upper => bank.sign(),
        };
        let xi = match cut {
            CutSide::Lower => Complex64::new(0.0, -w),
            CutSide::Upper => Complex64::new(0.0, w),
        };
        let drift = Complex64::new(0.0, -self.drift());
        let val = match self {
            LevyModel::Kobol { nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, .. } => {
                let lp = -lambda_minus;
                match cut {
                    CutSide::Lower => {
                        kobol_side_cut_dxi(*c_plus, *nu_plus, lp, w - lp, sigma, 1.0)
                            + kobol_side_dxi(*c_minus, *nu_minus, *lambda_plus, Complex64::new(lambda_plus + w, 0.0), -1.0)
                    }
                    CutSide::Upper => {
                        kobol_side_cut_dxi(*c_minus, *nu_minus, *lambda_plus, w - lambda_plus, sigma, -1.0)
                            + kobol_side_dxi(*c_plus, *nu_plus, lp, Complex64::new(lp + w, 0.0), 1.0)
                    }
                }
            }
            LevyModel::Vg { c, alpha, beta, .. } => {
                // ψ⁰' = −2ci(β+iξ)/W is continuous across the (logarithmic) cut.
                let (bw, mag) = match cut {
                    CutSide::Lower => (beta + w, (w + beta) * (w + beta) - alpha * alpha),
                    CutSide::Upper => (beta - w, (w - beta) * (w - beta) - alpha * alpha),
                };
                -2.0 * c * I * bw / Complex64::new(-mag, 0.0)
            }
            LevyModel::Nts { delta, nu, alpha, beta, .. } => {
                let (bw, mag) = match cut {
                    CutSide::Lower => (beta + w, (w + beta) * (w + beta) - alpha * alpha),
                    CutSide::Upper => (beta - w, (w - beta) * (w - beta) - alpha * alpha),
                };
                -I * delta * nu * bw * cpow_neg_bank(mag, nu / 2.0 - 1.0, sigma)
            }
            LevyModel::Meixner { delta, a, .. } => {
                let b = match self {
                    LevyModel::Meixner { b, .. } => *b,
                    _ => unreachable!(),
                };
                let z = (a * xi - I * b) / 2.0;
                // tanh is meromorphic; away from its poles the boundary value
                // coincides with the two-sided value.
                a * delta * z.tanh()
            }
            _ => unreachable!("psi_cut rejected cut-free models"),
        };
        Ok(drift + val)
    }

    /// Second instantaneous moment μ₂ = ψ''(0), in closed form per family.
    pub fn mu2(&self) -> f64 {
        match self {
            LevyModel::BrownianDrift { sigma2, .. } => *sigma2,
            LevyModel::Merton { sigma, lambda, m, s, .. } => sigma * sigma + lambda * (m * m + s * s),
            LevyModel::Hejd { sigma, pos_terms, neg_terms, .. } => {
                sigma * sigma
                    + pos_terms.iter().map(|t| 2.0 * t.p / (t.alpha * t.alpha)).sum::<f64>()
                    + neg_terms.iter().map(|t| 2.0 * t.p / (t.alpha * t.alpha)).sum::<f64>()
            }
            LevyModel::Vg { c, alpha, beta, .. } => {
                let d = alpha * alpha - beta * beta;
                2.0 * c * (alpha * alpha + beta * beta) / (d * d)
            }
            LevyModel::Nts { delta, nu, alpha, beta, .. } => {
                let d = alpha * alpha - beta * beta;
                delta * nu * d.powf(nu / 2.0 - 2.0) * (alpha * alpha + (1.0 - nu) * beta * beta)
            }
            LevyModel::Kobol { nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, .. } => {
                let lp = -lambda_minus;
                c_plus * gamma(2.0 - nu_plus) * lp.powf(nu_plus - 2.0)
                    + c_minus * gamma(2.0 - nu_minus) * lambda_plus.powf(nu_minus - 2.0)
            }
            LevyModel::Meixner { delta, a, b, .. } => {
                let c = (b / 2.0).cos();
                a * a * delta / (2.0 * c * c)
            }
        }
    }

    /// First instantaneous moment μ₁ = iψ'(0).
    pub fn mu1(&self) -> f64 {
        (I * self.psi_prime_unchecked(Complex64::new(0.0, 0.0))).re
    }

    /// Full analyticity/asymptotics metadata.
    pub fn traits(&self) -> ProcessTraits {
        let (strip_lo, strip_hi) = self.strip();
        let mu = self.drift();
        let mu1 = self.mu1();
        let mu2 = self.mu2();
        let sl_kind = match self {
            LevyModel::Meixner { .. } => SlKind::Ssl,
            LevyModel::Merton { .. } => SlKind::NotSl,
            _ => SlKind::Sl,
        };

        let (order, asym) = self.order_and_asym();
        let (nu_plus, nu_minus) = match asym {
            FactorAsym::PowerLaw { phi, nu, .. } => {
                let p = (nu / 2.0 - phi / std::f64::consts::PI).clamp(0.0, 1.0);
                let m = (nu / 2.0 + phi / std::f64::consts::PI).clamp(0.0, 1.0);
                (p, m)
            }
            FactorAsym::DriftDominated { mu } => {
                if mu > 0.0 {
                    (1.0, 0.0)
                } else {
                    (0.0, 1.0)
                }
            }
            FactorAsym::None => match order {
                ProcessOrder::OnePlus => (0.5, 0.5),
                _ => (0.0, 0.0),
            },
        };

        ProcessTraits {
            strip_lo,
            strip_hi,
            order,
            nu_plus,
            nu_minus,
            mu1,
            mu2,
            sl_kind,
            drift_mu: mu,
            asym,
        }
    }

    fn order_and_asym(&self) -> (ProcessOrder, FactorAsym) {
        let mu = self.drift();
        match self {
            LevyModel::BrownianDrift { sigma2, .. } => {
                if *sigma2 > 0.0 {
                    (ProcessOrder::Two, FactorAsym::PowerLaw { c: sigma2 / 2.0, phi: 0.0, nu: 2.0 })
                } else if mu != 0.0 {
                    (ProcessOrder::ZeroPlus, FactorAsym::DriftDominated { mu })
                } else {
                    (ProcessOrder::ZeroPlus, FactorAsym::None)
                }
            }
            LevyModel::Merton { sigma, .. } => (
                ProcessOrder::Two,
                FactorAsym::PowerLaw { c: sigma * sigma / 2.0, phi: 0.0, nu: 2.0 },
            ),
            LevyModel::Hejd { sigma, .. } => {
                if *sigma > 0.0 {
                    (ProcessOrder::Two, FactorAsym::PowerLaw { c: sigma * sigma / 2.0, phi: 0.0, nu: 2.0 })
                } else if mu != 0.0 {
                    (ProcessOrder::ZeroPlus, FactorAsym::DriftDominated { mu })
                } else {
                    (ProcessOrder::ZeroPlus, FactorAsym::None)
                }
            }
            LevyModel::Vg { .. } => {
                if mu != 0.0 {
                    (ProcessOrder::ZeroPlus, FactorAsym::DriftDominated { mu })
                } else {
                    (ProcessOrder::ZeroPlus, FactorAsym::None)
                }
            }
            LevyModel::Nts { delta, nu, .. } => {
                let ord = ProcessOrder::Fractional(*nu);
                if *nu > 1.0 {
                    (ord, FactorAsym::PowerLaw { c: *delta, phi: 0.0, nu: *nu })
                } else if *nu == 1.0 {
                    let cc = Complex64::new(*delta, -mu);
                    (ord, FactorAsym::PowerLaw { c: cc.norm(), phi: cc.arg(), nu: 1.0 })
                } else if mu == 0.0 {
                    (ord, FactorAsym::PowerLaw { c: *delta, phi: 0.0, nu: *nu })
                } else {
                    (ord, FactorAsym::DriftDominated { mu })
                }
            }
            LevyModel::Kobol { nu_plus, nu_minus, c_plus, c_minus, lambda_minus, lambda_plus, .. } => {
                // Effective order: the larger active side.
                let np = if *c_plus > 0.0 { *nu_plus } else { 0.0 };
                let nm = if *c_minus > 0.0 { *nu_minus } else { 0.0 };
                let nu = np.max(nm);
                if nu == 0.0 {
                    return if mu != 0.0 {
                        (ProcessOrder::ZeroPlus, FactorAsym::DriftDominated { mu })
                    } else {
                        (ProcessOrder::ZeroPlus, FactorAsym::None)
                    };
                }
                if nu == 1.0 {
                    // Order-1 sides grow like ρ ln ρ; the log terms cancel only
                    // when both sides are order 1 with equal weights.
                    let both = np == 1.0 && nm == 1.0 && c_plus == c_minus;
                    if both {
                        let lp = -lambda_minus;
                        let cc = Complex64::new(
                            c_plus * std::f64::consts::PI,
                            c_plus * (lambda_plus / lp).ln() - mu,
                        );
                        return (ProcessOrder::Fractional(1.0), FactorAsym::PowerLaw { c: cc.norm(), phi: cc.arg(), nu: 1.0 });
                    }
                    return (ProcessOrder::OnePlus, FactorAsym::None);
                }
                // Leading coefficient along the positive real axis.
                let half = std::f64::consts::FRAC_PI_2 * nu;
                let mut a = Complex64::new(0.0, 0.0);
                if np == nu && *c_plus > 0.0 && nu != 1.0 {
                    a += -c_plus * gamma(-nu) * Complex64::new(half.cos(), -half.sin());
                }
                if nm == nu && *c_minus > 0.0 && nu != 1.0 {
                    a += -c_minus * gamma(-nu) * Complex64::new(half.cos(), half.sin());
                }
                if nu < 1.0 && mu != 0.0 {
                    (ProcessOrder::Fractional(nu), FactorAsym::DriftDominated { mu })
                } else {
                    (ProcessOrder::Fractional(nu), FactorAsym::PowerLaw { c: a.norm(), phi: a.arg(), nu })
                }
            }
            LevyModel::Meixner { delta, a, .. } => {
                let cc = Complex64::new(a * delta, -mu);
                (ProcessOrder::Fractional(1.0), FactorAsym::PowerLaw { c: cc.norm(), phi: cc.arg(), nu: 1.0 })
            }
        }
    }
}

/// KoBoL side on its own cut: the argument lam∓iξ equals −m + iσ0 with
/// m = w − lam > 0.  `w` is the cut coordinate (needed by the ν = 1 form).
fn kobol_side_cut(c: f64, nu: f64, lam: f64, m: f64, sigma: f64, w: f64) -> Complex64 {
    if c == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if nu == 0.0 {
        c * (cln_neg_bank(m, sigma) - Complex64::new(lam.ln(), 0.0))
    } else if nu == 1.0 {
        let z = Complex64::new(-m, 0.0);
        let lnz = cln_neg_bank(m, sigma) - Complex64::new(lam.ln(), 0.0);
        -c * (z * lnz - Complex64::new(-w, 0.0))
    } else {
        c * gamma(-nu) * (Complex64::new(lam.powf(nu), 0.0) - cpow_neg_bank(m, nu, sigma))
    }
}

/// ξ-derivative of the KoBoL side on its own cut; s = +1 for the positive
/// side (z = lam − iξ), −1 for the negative side.
fn kobol_side_cut_dxi(c: f64, nu: f64, lam: f64, m: f64, sigma: f64, s: f64) -> Complex64 {
    if c == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let dz_dxi = Complex64::new(0.0, -s);
    let df_dz = if nu == 0.0 {
        c / Complex64::new(-m, 0.0)
    } else if nu == 1.0 {
        -c * (cln_neg_bank(m, sigma) - Complex64::new(lam.ln(), 0.0))
    } else {
        -c * gamma(-nu) * nu * cpow_neg_bank(m, nu - 1.0, sigma)
    };
    df_dz * dz_dxi
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn catalog() -> Vec<LevyModel> {
        vec![
            LevyModel::bm(1.0, -0.3).unwrap(),
            LevyModel::merton(0.3, 1.0, -0.1, 0.25, 0.1).unwrap(),
            LevyModel::hejd(
                0.4,
                -0.2,
                vec![JumpTerm { p: 1.5, alpha: 3.0 }],
                vec![JumpTerm { p: 1.0, alpha: 2.0 }],
            )
            .unwrap(),
            LevyModel::vg(1.0, 3.0, 0.4, 0.2).unwrap(),
            LevyModel::nig(1.0, 2.0, 0.0, 0.0).unwrap(),
            LevyModel::kobol(1.2, 1.2, 1.0, 1.0, -3.0, 3.0, 0.0).unwrap(),
            LevyModel::kobol(0.5, 0.5, 1.0, 1.0, -1.0, 3.0, 0.0).unwrap(),
            LevyModel::meixner(0.8, 1.2, 0.5, 0.1).unwrap(),
        ]
    }

    #[test]
    fn bm_psi_is_quadratic() {
        let m = LevyModel::bm(2.0, 0.0).unwrap();
        let v = m.psi(c(1.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn psi_vanishes_at_zero() {
        for m in catalog() {
            let v = m.psi(c(0.0, 0.0)).unwrap();
            assert_abs_diff_eq!(v.norm(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn kobol_large_xi_asymptotics() {
        // Symmetric KoBoL of order 0.5: psi(rho)/rho^0.5 -> 2 sqrt(2 pi).
        let m = LevyModel::kobol(0.5, 0.5, 1.0, 1.0, -1.0, 1.0, 0.0).unwrap();
        let rho = 1e6;
        let v = m.psi(c(rho, 0.0)).unwrap();
        let lim = 2.0 * (2.0 * std::f64::consts::PI).sqrt();
        assert_relative_eq!(v.re / rho.sqrt(), lim, max_relative = 1e-2);
    }

    #[test]
    fn cgmy_asymptotic_coefficient_invariant() {
        // |psi(rho)/(c_inf rho^nu) - 1| < 1e-2 at rho = 1e4.
        let m = LevyModel::kobol(1.2, 1.2, 1.0, 1.0, -3.0, 3.0, 0.0).unwrap();
        let tr = m.traits();
        let cinf = tr.asym_c().unwrap();
        let rho = 1e4;
        let v = m.psi(c(rho, 0.0)).unwrap();
        assert!((v / (cinf * rho.powf(1.2)) - 1.0).norm() < 1e-2);
    }

    #[test]
    fn kobol_lower_cut_value() {
        // Symmetric order-0.5 KoBoL, lambda = ∓1: Im psi(-2i - 0) = 2 sqrt(pi).
        let m = LevyModel::kobol(0.5, 0.5, 1.0, 1.0, -1.0, 1.0, 0.0).unwrap();
        let v = m.psi_cut(CutSide::Lower, Bank::Minus, 2.0).unwrap();
        assert_relative_eq!(v.im, 2.0 * std::f64::consts::PI.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn meixner_upper_cut_real_where_cos_positive() {
        let m = LevyModel::meixner(1.0, 1.0, 0.0, 0.0).unwrap();
        // upper cut starts at pi; pick w with cos(w/2) > 0, e.g. w in (3pi, 4pi) -> w/2 in (1.5pi, 2pi)
        let w = 3.5 * std::f64::consts::PI;
        let v = m.psi_cut(CutSide::Upper, Bank::Plus, w).unwrap();
        assert_abs_diff_eq!(v.im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn nts_upper_cut_value() {
        let m = LevyModel::nts(1.0, 1.0, 2.0, 0.0, 0.0).unwrap();
        let v = m.psi_cut(CutSide::Upper, Bank::Plus, 3.0).unwrap();
        assert_relative_eq!(v.im, 5.0_f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn cut_values_match_eps_limits() {
        // Closed-form bank values agree with finite-ε evaluation of psi.
        let eps = 1e-9;
        let cases: Vec<(LevyModel, f64)> = vec![
            (LevyModel::kobol(0.5, 0.5, 1.0, 1.0, -1.0, 1.0, 0.3).unwrap(), 2.0),
            (LevyModel::kobol(1.0, 1.0, 1.0, 1.0, -1.0, 2.0, 0.0).unwrap(), 2.5),
            (LevyModel::kobol(0.0, 0.0, 1.0, 2.0, -1.0, 1.0, 0.0).unwrap(), 3.0),
            (LevyModel::nts(1.0, 1.3, 2.0, 0.5, -0.2).unwrap(), 3.0),
            (LevyModel::vg(1.0, 3.0, 0.4, 0.2).unwrap(), 4.0),
            (LevyModel::meixner(0.8, 1.2, 0.5, 0.1).unwrap(), 4.0),
        ];
        for (m, w) in cases {
            for (cut, bank) in [
                (CutSide::Lower, Bank::Minus),
                (CutSide::Lower, Bank::Plus),
                (CutSide::Upper, Bank::Plus),
                (CutSide::Upper, Bank::Minus),
            ] {
                let exact = m.psi_cut(cut, bank, w).unwrap();
                let xi = match cut {
                    CutSide::Lower => c(bank.sign() * eps, -w),
                    CutSide::Upper => c(bank.sign() * eps, w),
                };
                let approxv = m.psi(xi).unwrap();
                assert_relative_eq!(exact.re, approxv.re, max_relative = 1e-5, epsilon = 1e-7);
                assert_relative_eq!(exact.im, approxv.im, max_relative = 1e-4, epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn prime_cut_matches_eps_limits() {
        let eps = 1e-9;
        let cases: Vec<(LevyModel, f64)> = vec![
            (LevyModel::kobol(0.5, 0.5, 1.0, 1.0, -1.0, 1.0, 0.3).unwrap(), 2.0),
            (LevyModel::nts(1.0, 1.3, 2.0, 0.5, -0.2).unwrap(), 3.0),
            (LevyModel::vg(1.0, 3.0, 0.4, 0.2).unwrap(), 4.0),
            (LevyModel::kobol(1.0, 1.0, 1.0, 1.0, -1.0, 2.0, 0.0).unwrap(), 2.5),
        ];
        for (m, w) in cases {
            let exact = m.psi_prime_cut(CutSide::Lower, Bank::Minus, w).unwrap();
            let approxv = m.psi_prime(c(-eps, -w)).unwrap();
            assert_relative_eq!(exact.re, approxv.re, max_relative = 1e-4, epsilon = 1e-6);
            assert_relative_eq!(exact.im, approxv.im, max_relative = 1e-4, epsilon = 1e-6);
        }
    }

    #[test]
    fn psi_prime_matches_finite_differences() {
        for m in catalog() {
            let (lo, hi) = m.strip();
            let ymax = if hi.is_finite() { 0.4 * hi } else { 1.0 };
            let ymin = if lo.is_finite() { 0.4 * lo } else { -1.0 };
            for k in 0..20 {
                let t = k as f64 / 19.0;
                let xi = c(-3.0 + 6.0 * t, ymin + (ymax - ymin) * t);
                let h = 1e-6 * (1.0 + xi.norm());
                let d = (m.psi(xi + c(h, 0.0)).unwrap() - m.psi(xi - c(h, 0.0)).unwrap()) / (2.0 * h);
                let p = m.psi_prime(xi).unwrap();
                assert_relative_eq!(d.re, p.re, max_relative = 1e-6, epsilon = 1e-8);
                assert_relative_eq!(d.im, p.im, max_relative = 1e-6, epsilon = 1e-8);
            }
        }
    }

    #[test]
    fn traits_bm() {
        let m = LevyModel::bm(1.0, -0.3).unwrap();
        let t = m.traits();
        assert_relative_eq!(t.mu1, -0.3, epsilon = 1e-14);
        assert_relative_eq!(t.mu2, 1.0, epsilon = 1e-14);
        assert_relative_eq!(t.nu_plus, 1.0, epsilon = 1e-14);
        assert_relative_eq!(t.nu_minus, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn traits_symmetric_kobol() {
        let m = LevyModel::kobol(1.2, 1.2, 1.0, 1.0, -3.0, 3.0, 0.0).unwrap();
        let t = m.traits();
        assert_abs_diff_eq!(t.asym_phi().unwrap(), 0.0, epsilon = 1e-14);
        assert_relative_eq!(t.nu_plus, 0.6, epsilon = 1e-14);
        assert_relative_eq!(t.nu_minus, 0.6, epsilon = 1e-14);
        assert_abs_diff_eq!(t.mu1, 0.0, epsilon = 1e-13);
    }

    #[test]
    fn traits_kobol_mu1_matches_finite_differences() {
        // mu1 = i psi'(0); for these parameters the heavier negative tail wins.
        let m = LevyModel::kobol(0.5, 0.5, 1.0, 1.0, -2.0, 1.0, 0.0).unwrap();
        let t = m.traits();
        let g = gamma(0.5);
        let expect = g * (0.5_f64.sqrt() - 1.0); // c+Γ(1-ν)(−λ₋)^{ν-1} − c−Γ(1-ν)λ₊^{ν-1}
        assert_relative_eq!(t.mu1, expect, max_relative = 1e-12);
        assert!(t.mu1 < 0.0);
        // finite-difference confirmation
        let h = 1e-6;
        let fd = (m.psi(c(h, 0.0)).unwrap() - m.psi(c(-h, 0.0)).unwrap()) / (2.0 * h);
        assert_relative_eq!((Complex64::new(0.0, 1.0) * fd).re, t.mu1, max_relative = 1e-6);
    }

    #[test]
    fn traits_nig_with_drift() {
        let m = LevyModel::nig(1.0, 2.0, 0.0, 0.3).unwrap();
        let t = m.traits();
        let cc = Complex64::new(1.0, -0.3);
        assert_relative_eq!(t.asym_c().unwrap(), cc.norm(), epsilon = 1e-14);
        assert_relative_eq!(t.nu_plus, 0.5 - cc.arg() / std::f64::consts::PI, epsilon = 1e-14);
    }

    #[test]
    fn mu2_matches_finite_differences() {
        for m in catalog() {
            let h = 1e-5;
            let f = |x: f64| m.psi(c(x, 0.0)).unwrap();
            let d2 = (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
            assert_relative_eq!(d2.re, m.mu2(), max_relative = 1e-4);
            assert!(m.mu2() > 0.0);
        }
    }

    #[test]
    fn hermitian_symmetry_and_nonnegative_real_part() {
        for m in catalog() {
            for k in 0..50 {
                let xi = -20.0 + 40.0 * (k as f64 + 0.31) / 50.0;
                let a = m.psi(c(xi, 0.0)).unwrap();
                let b = m.psi(c(-xi, 0.0)).unwrap();
                assert_relative_eq!(a.re, b.re, max_relative = 1e-12, epsilon = 1e-12);
                assert_relative_eq!(a.im, -b.im, max_relative = 1e-12, epsilon = 1e-12);
                assert!(a.re >= -1e-12, "Re psi >= 0 violated for {m:?} at {xi}");
            }
        }
    }

    #[test]
    fn reality_on_strip() {
        for m in catalog() {
            let (lo, hi) = m.strip();
            let lo = if lo.is_finite() { lo } else { -2.0 };
            let hi = if hi.is_finite() { hi } else { 2.0 };
            for k in 1..20 {
                let y = lo + (hi - lo) * k as f64 / 20.0;
                if let LevyModel::Hejd { .. } = m {
                    // skip exact pole hits (none on this grid, but guard anyway)
                }
                let v = m.psi(c(0.0, y)).unwrap();
                assert!(v.im.abs() < 1e-12, "psi not real on strip for {m:?} at iy={y}: {v}");
            }
        }
    }

    #[test]
    fn cut_bank_conjugacy() {
        let m = LevyModel::kobol(0.7, 1.4, 0.8, 1.1, -1.5, 2.0, 0.25).unwrap();
        for w in [1.7, 2.3, 5.0, 11.0] {
            let a = m.psi_cut(CutSide::Lower, Bank::Plus, w).unwrap();
            let b = m.psi_cut(CutSide::Lower, Bank::Minus, w).unwrap();
            assert_relative_eq!(a.re, b.re, max_relative = 1e-14);
            assert_relative_eq!(a.im, -b.im, max_relative = 1e-14);
        }
    }

    #[test]
    fn domain_errors() {
        let m = LevyModel::kobol(0.5, 0.5, 1.0, 1.0, -1.0, 1.0, 0.0).unwrap();
        assert!(m.psi(c(0.0, 2.0)).is_err());
        assert!(m.psi_cut(CutSide::Lower, Bank::Minus, 0.5).is_err());
        let h = LevyModel::hejd(0.1, 0.0, vec![JumpTerm { p: 1.0, alpha: 2.0 }], vec![JumpTerm { p: 1.0, alpha: 3.0 }]).unwrap();
        assert!(h.psi(c(0.0, -2.0)).is_err());
        assert!(h.psi(c(0.0, -1.9)).is_ok());
    }

    #[test]
    fn invalid_models_rejected() {
        assert!(LevyModel::kobol(0.5, 0.5, 0.0, 0.0, -1.0, 1.0, 0.0).is_err());
        assert!(LevyModel::vg(1.0, 1.0, 1.5, 0.0).is_err());
        assert!(LevyModel::meixner(1.0, 1.0, 3.5, 0.0).is_err());
        assert!(LevyModel::hejd(0.1, 0.0, vec![], vec![JumpTerm { p: 1.0, alpha: 1.0 }]).is_err());
        assert!(LevyModel::nts(1.0, 2.0, 1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn model_json_round_trip() {
        for m in catalog() {
            let s = serde_json::to_string(&m).unwrap();
            let back: LevyModel = serde_json::from_str(&s).unwrap();
            assert_eq!(m, back);
            let s2 = serde_json::to_string(&back).unwrap();
            assert_eq!(s, s2);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn prop_hermitian_on_reals(xi in -50.0f64..50.0) {
            for m in catalog() {
                let a = m.psi(c(xi, 0.0)).unwrap();
                let b = m.psi(c(-xi, 0.0)).unwrap();
                prop_assert!((a - b.conj()).norm() <= 1e-11 * (1.0 + a.norm()));
                prop_assert!(a.re >= -1e-11 * (1.0 + a.norm()));
            }
        }
    }
}
