//! Quadrature engine used throughout the crate.
//!
//! The workhorse is a Filon-type panel rule: on each panel the smooth part of
//! the integrand is expanded in Legendre polynomials from Gauss-Legendre
//! samples and the oscillatory kernel e^{iωu} is integrated exactly against
//! that basis (the moments are spherical Bessel functions).  With ω = 0 the
//! rule degenerates to plain Gauss-Legendre.  Half-line integrals use
//! geometrically growing panels, capped at a few oscillation periods, with a
//! power-law fit of the integrand tail supplying the truncation correction
//! (one integration by parts per series term).

use num_complex::Complex64;

use crate::error::{LevyError, Result};

/// Gauss-Legendre nodes on (-1, 1), n = 16.
const GL_X: [f64; 16] = [
    -0.9894009349916499,
    -0.9445750230732326,
    -0.8656312023878318,
    -0.7554044083550030,
    -0.6178762444026438,
    -0.4580167776572274,
    -0.2816035507792589,
    -0.0950125098376374,
    0.0950125098376374,
    0.2816035507792589,
    0.4580167776572274,
    0.6178762444026438,
    0.7554044083550030,
    0.8656312023878318,
    0.9445750230732326,
    0.9894009349916499,
];

const GL_W: [f64; 16] = [
    0.0271524594117541,
    0.0622535239386479,
    0.0951585116824928,
    0.1246289712555339,
    0.1495959888165767,
    0.1691565193950025,
    0.1826034150449236,
    0.1894506104550685,
    0.1894506104550685,
    0.1826034150449236,
    0.1691565193950025,
    0.1495959888165767,
    0.1246289712555339,
    0.0951585116824928,
    0.0622535239386479,
    0.0271524594117541,
];

const NGL: usize = 16;

/// P_l(GL_X[i]) for l = 0..NGL, computed once.
fn legendre_table() -> &'static [[f64; NGL]; NGL] {
    use std::sync::OnceLock;
    static TABLE: OnceLock<[[f64; NGL]; NGL]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0.0; NGL]; NGL];
        for (i, &x) in GL_X.iter().enumerate() {
            let mut pm1 = 1.0;
            let mut p = x;
            t[0][i] = 1.0;
            t[1][i] = x;
            for l in 1..NGL - 1 {
                let pn = ((2 * l + 1) as f64 * x * p - l as f64 * pm1) / (l + 1) as f64;
                pm1 = p;
                p = pn;
                t[l + 1][i] = pn;
            }
        }
        t
    })
}

/// Spherical Bessel functions j_0..j_lmax at θ (θ may be negative:
/// j_l(-θ) = (-1)^l j_l(θ)).
fn sph_bessel(lmax: usize, theta: f64) -> Vec<f64> {
    let t = theta.abs();
    let mut out;
    if t < 1e-6 {
        // series: j_l = t^l / (2l+1)!! (1 - t²/(2(2l+3)) + ...)
        out = vec![0.0; lmax + 1];
        let mut dfact = 1.0; // (2l+1)!!
        let mut tp = 1.0; // t^l
        for (l, o) in out.iter_mut().enumerate() {
            *o = tp / dfact * (1.0 - t * t / (2.0 * (2.0 * l as f64 + 3.0)));
            tp *= t;
            dfact *= 2.0 * l as f64 + 3.0;
        }
    } else if t > lmax as f64 + 10.0 {
        // oscillatory regime l < θ: forward recurrence is stable
        out = vec![0.0; lmax + 1];
        let j0 = t.sin() / t;
        out[0] = j0;
        if lmax >= 1 {
            out[1] = t.sin() / (t * t) - t.cos() / t;
            for l in 1..lmax {
                out[l + 1] = (2 * l + 1) as f64 / t * out[l] - out[l - 1];
            }
        }
    } else {
        // downward (Miller) recurrence, normalized by j_0 = sin t / t
        let start = lmax + 16 + (1.5 * t) as usize;
        let mut jp1 = 0.0_f64;
        let mut j = 1e-280_f64;
        let mut keep = vec![0.0; lmax + 1];
        for l in (1..=start).rev() {
            let jm1 = (2 * l + 1) as f64 / t * j - jp1;
            if l - 1 <= lmax {
                keep[l - 1] = jm1;
            }
            jp1 = j;
            j = jm1;
            if j.abs() > 1e250 {
                let s = 1e-250;
                j *= s;
                jp1 *= s;
                for k in keep.iter_mut() {
                    *k *= s;
                }
            }
        }
        let j0 = t.sin() / t;
        let scale = j0 / keep[0];
        for k in keep.iter_mut() {
            *k *= scale;
        }
        out = keep;
    }
    if theta < 0.0 {
        for (l, o) in out.iter_mut().enumerate() {
            if l % 2 == 1 {
                *o = -*o;
            }
        }
    }
    out
}

/// Result of a quadrature.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: Complex64,
    pub err: f64,
    pub nodes: usize,
    /// Outermost abscissa reached (half-line integrals).
    pub extent: f64,
}

/// One Filon panel: ∫_a^b e^{iωs} f(s) ds with error estimate from the decay
/// of the Legendre coefficients of f.
fn filon_panel<F: Fn(f64) -> Complex64 + ?Sized>(f: &F, a: f64, b: f64, omega: f64) -> (Complex64, f64) {
    let m = 0.5 * (a + b);
    let r = 0.5 * (b - a);
    let tbl = legendre_table();
    let mut fx = [Complex64::new(0.0, 0.0); NGL];
    for (i, &x) in GL_X.iter().enumerate() {
        fx[i] = f(m + r * x);
    }
    // Legendre coefficients c_l = (2l+1)/2 Σ w_i P_l(x_i) f(x_i)
    let mut c = [Complex64::new(0.0, 0.0); NGL];
    for l in 0..NGL {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..NGL {
            s += GL_W[i] * tbl[l][i] * fx[i];
        }
        c[l] = s * ((2 * l + 1) as f64 / 2.0);
    }
    let theta = omega * r;
    let js = sph_bessel(NGL - 1, theta);
    let mut val = Complex64::new(0.0, 0.0);
    let mut il = Complex64::new(1.0, 0.0);
    for l in 0..NGL {
        val += c[l] * il * (2.0 * js[l]);
        il *= Complex64::new(0.0, 1.0);
    }
    let phase = Complex64::new(0.0, omega * m).exp();
    let value = r * phase * val;
    let err = 2.0 * r * (c[NGL - 2].norm() + c[NGL - 1].norm());
    (value, err)
}

/// Adaptive Filon on a finite interval.
pub fn integrate_interval<F: Fn(f64) -> Complex64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    omega: f64,
    tol: f64,
) -> Result<QuadResult> {
    let mut nodes = 0usize;
    let value = adaptive_panel(f, a, b, omega, tol, 0, &mut nodes)?;
    Ok(QuadResult { value: value.0, err: value.1, nodes, extent: b })
}

fn adaptive_panel<F: Fn(f64) -> Complex64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    omega: f64,
    tol: f64,
    depth: usize,
    nodes: &mut usize,
) -> Result<(Complex64, f64)> {
    let (v, e) = filon_panel(f, a, b, omega);
    *nodes += NGL;
    if e <= tol || depth >= 14 {
        return Ok((v, e));
    }
    let m = 0.5 * (a + b);
    let left = adaptive_panel(f, a, m, omega, 0.5 * tol, depth + 1, nodes)?;
    let right = adaptive_panel(f, m, b, omega, 0.5 * tol, depth + 1, nodes)?;
    Ok((left.0 + right.0, left.1 + right.1))
}

/// Options for the half-line and full-line drivers.
#[derive(Debug, Clone, Copy)]
pub struct PanelSpec {
    /// Width of the first panel.
    pub inner_scale: f64,
    /// Cap on panel width, in oscillation periods (ignored when ω = 0).
    pub cap_periods: f64,
    /// Hard budget on the number of panels.
    pub max_panels: usize,
}

impl Default for PanelSpec {
    fn default() -> Self {
        PanelSpec { inner_scale: 0.25, cap_periods: 2.0, max_panels: 4000 }
    }
}

/// Tail model fitted from the last panels; ∫_Ξ^∞ e^{iωu} Ĥ(u) du.
fn tail_correction(omega: f64, xi_end: f64, probes: &[(f64, Complex64)]) -> Option<(Complex64, f64)> {
    if probes.len() < 3 {
        return None;
    }
    let n = probes.len();
    let (u1, f1) = probes[n - 3];
    let (u2, f2) = probes[n - 2];
    let (u3, f3) = probes[n - 1];
    let m1 = f1.norm();
    let m2 = f2.norm();
    let m3 = f3.norm();
    if m3 == 0.0 {
        return Some((Complex64::new(0.0, 0.0), 0.0));
    }
    if !(m1 > 0.0 && m2 > 0.0) {
        return None;
    }
    let p12 = (m1 / m2).ln() / (u2 / u1).ln();
    let p23 = (m2 / m3).ln() / (u3 / u2).ln();
    let p = p23;
    let dp = (p12 - p23).abs();
    if omega == 0.0 {
        if p < 1.1 {
            return None;
        }
        // ∫_Ξ^∞ f3 (u/Ξ)^{-p} du = f3 Ξ / (p - 1)
        let t = f3 * xi_end / (p - 1.0);
        let err = t.norm() * (3.0 * dp / (p - 1.0) + 0.02);
        Some((t, err))
    } else {
        let theta = omega * xi_end;
        if theta.abs() < (5.0f64).max(2.0 * p.abs()) {
            return None;
        }
        // ∫_1^∞ e^{iθv} v^{-p} dv ≈ -e^{iθ}/(iθ) [1 + p/(iθ) + p(p+1)/(iθ)²]
        let ith = Complex64::new(0.0, theta);
        let e = ith.exp();
        let series = Complex64::new(1.0, 0.0) + p / ith + p * (p + 1.0) / (ith * ith);
        let j = -e / ith * series;
        let t = f3 * xi_end * j;
        let next = (p * (p + 1.0) * (p + 2.0)).abs() / theta.abs().powi(3);
        let err = (f3 * xi_end).norm() * (next / theta.abs()) + t.norm() * (2.0 * dp + 0.02);
        Some((t, err))
    }
}

/// ∫_{a0}^{∞} e^{iωu} f(u) du for smooth f with power-like decay.
pub fn integrate_half_line<F: Fn(f64) -> Complex64 + ?Sized>(
    f: &F,
    a0: f64,
    omega: f64,
    tol: f64,
    spec: &PanelSpec,
) -> Result<QuadResult> {
    let cap = if omega != 0.0 {
        spec.cap_periods * 2.0 * std::f64::consts::PI / omega.abs()
    } else {
        f64::INFINITY
    };
    let mut a = a0;
    let mut h = spec.inner_scale.min(cap);
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut nodes = 0usize;
    let mut probes: Vec<(f64, Complex64)> = Vec::new();
    let mut smallish = 0usize;
    let panel_tol = 0.02 * tol;
    for k in 0..spec.max_panels {
        let b = a + h;
        let (v, e) = adaptive_panel(f, a, b, omega, panel_tol, 0, &mut nodes)?;
        total += v;
        err += e;
        let up = a + 0.9 * h;
        probes.push((up, f(up)));
        nodes += 1;
        if probes.len() > 4 {
            probes.remove(0);
        }
        if k >= 3 {
            if let Some((t, te)) = tail_correction(omega, b, &probes) {
                if te < 0.5 * tol {
                    return Ok(QuadResult { value: total + t, err: err + te, nodes, extent: b });
                }
            }
            // integrand numerically dead
            let pm = probes.iter().map(|p| p.1.norm()).fold(0.0, f64::max);
            if pm * b < 1e-3 * tol {
                smallish += 1;
                if smallish >= 3 {
                    return Ok(QuadResult { value: total, err: err + pm * b, nodes, extent: b });
                }
            } else {
                smallish = 0;
            }
        }
        a = b;
        h = (2.0 * h).min(cap);
    }
    Err(LevyError::Quadrature { achieved: err.max(tol), tol })
}

/// ∫_{-∞}^{∞} e^{iωu} f(u) du.
pub fn integrate_line<F: Fn(f64) -> Complex64 + ?Sized>(
    f: &F,
    omega: f64,
    tol: f64,
    spec: &PanelSpec,
) -> Result<QuadResult> {
    let right = integrate_half_line(f, 0.0, omega, 0.5 * tol, spec)?;
    let neg = |v: f64| f(-v);
    let left = integrate_half_line(&neg, 0.0, -omega, 0.5 * tol, spec)?;
    Ok(QuadResult {
        value: right.value + left.value,
        err: right.err + left.err,
        nodes: right.nodes + left.nodes,
        extent: right.extent.max(left.extent),
    })
}

// ---------------------------------------------------------------------------
// Fixed log-value tables on a horizontal line, for Wiener-Hopf factor
// integrals: nodes are generated once, the (possibly branch-tracked) log of
// the integrand factor is stored, and many Cauchy-kernel integrals against ξ
// reuse the same table.
// ---------------------------------------------------------------------------

/// Sampled values of L(η) = log F(η) on the line Im η = `line_im`.
#[derive(Debug, Clone)]
pub struct LineTable {
    pub line_im: f64,
    /// Node abscissas u (ascending), η = u + i·line_im.
    pub us: Vec<f64>,
    /// Quadrature weights for ∫ du.
    pub ws: Vec<f64>,
    /// L(η_j).
    pub vals: Vec<Complex64>,
    pub extent: f64,
}

/// Continuous-branch logs of `raw` at the given points (ascending u),
/// unwrapped outward from the center node and checked against the principal
/// branch at both ends.
pub fn walked_logs(etas: &[Complex64], raw: &dyn Fn(Complex64) -> Complex64) -> Result<Vec<Complex64>> {
    let n = etas.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    let mut ci = 0;
    for (i, e) in etas.iter().enumerate() {
        if e.re.abs() < etas[ci].re.abs() {
            ci = i;
        }
    }
    let unwrap = |target: f64, prev: f64| -> f64 {
        let mut a = target;
        while a - prev > std::f64::consts::PI {
            a -= 2.0 * std::f64::consts::PI;
        }
        while a - prev < -std::f64::consts::PI {
            a += 2.0 * std::f64::consts::PI;
        }
        a
    };
    let v0 = raw(etas[ci]);
    if v0.norm() == 0.0 {
        return Err(LevyError::Contour("log argument vanished on the contour".into()));
    }
    let mut arg_prev = v0.arg();
    out[ci] = Complex64::new(v0.norm().ln(), arg_prev);
    for i in ci + 1..n {
        let v = raw(etas[i]);
        if v.norm() == 0.0 {
            return Err(LevyError::Contour("log argument vanished on the contour".into()));
        }
        let a = unwrap(v.arg(), arg_prev);
        out[i] = Complex64::new(v.norm().ln(), a);
        arg_prev = a;
    }
    let end_right = arg_prev;
    arg_prev = out[ci].im;
    for i in (0..ci).rev() {
        let v = raw(etas[i]);
        if v.norm() == 0.0 {
            return Err(LevyError::Contour("log argument vanished on the contour".into()));
        }
        let a = unwrap(v.arg(), arg_prev);
        out[i] = Complex64::new(v.norm().ln(), a);
        arg_prev = a;
    }
    let end_left = arg_prev;
    if end_right.abs() > 0.98 * std::f64::consts::PI || end_left.abs() > 0.98 * std::f64::consts::PI {
        return Err(LevyError::Contour(format!(
            "branch winding detected on the contour (end args {end_left:.3}, {end_right:.3}); move the line"
        )));
    }
    Ok(out)
}

/// Builds a symmetric table of L(η) = log F(η) on Im η = `line_im`, with
/// panels doubling in width from `inner` out to at least `extent`.
pub fn build_log_table(
    raw: &dyn Fn(Complex64) -> Complex64,
    line_im: f64,
    inner: f64,
    extent: f64,
) -> Result<LineTable> {
    let mut edges = vec![0.0, inner];
    let mut h = inner;
    while *edges.last().unwrap() < extent && edges.len() < 300 {
        h *= 2.0;
        let next = edges.last().unwrap() + h;
        edges.push(next);
    }
    let mut panels: Vec<(f64, f64)> = Vec::new();
    for w in edges.windows(2).rev() {
        panels.push((-w[1], -w[0]));
    }
    for w in edges.windows(2) {
        panels.push((w[0], w[1]));
    }
    let mut us = Vec::with_capacity(panels.len() * NGL);
    let mut ws = Vec::with_capacity(panels.len() * NGL);
    for (a, b) in panels {
        let m = 0.5 * (a + b);
        let r = 0.5 * (b - a);
        for (&x, &w) in GL_X.iter().zip(GL_W.iter()) {
            us.push(m + r * x);
            ws.push(w * r);
        }
    }
    let etas: Vec<Complex64> = us.iter().map(|&u| Complex64::new(u, line_im)).collect();
    let vals = walked_logs(&etas, raw)?;
    let ext = *edges.last().unwrap();
    Ok(LineTable { line_im, us, ws, vals, extent: ext })
}

impl LineTable {
    /// ∫_line L(η) ξ / (η (η − ξ)) dη plus a fitted tail correction.
    /// This kernel realizes differences b(ξ) − b(0) of Cauchy transforms.
    pub fn cauchy_diff(&self, xi: Complex64) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for ((&u, &w), &l) in self.us.iter().zip(self.ws.iter()).zip(self.vals.iter()) {
            let eta = Complex64::new(u, self.line_im);
            s += w * l * xi / (eta * (eta - xi));
        }
        s + self.tail_diff(xi)
    }

    fn end_samples(&self, right: bool) -> [(f64, Complex64); 2] {
        let n = self.us.len();
        if right {
            [(self.us[n - 24], self.vals[n - 24]), (self.us[n - 8], self.vals[n - 8])]
        } else {
            [(self.us[23], self.vals[23]), (self.us[7], self.vals[7])]
        }
    }

    /// Tail of the ξ/(η(η−ξ)) kernel with L modeled as a + b·ln|u| on each
    /// flank: ∫_Ξ^∞ L(u) ξ/η² du ≈ ξ (a + b(ln Ξ + 1))/Ξ per flank.
    fn tail_diff(&self, xi: Complex64) -> Complex64 {
        let mut t = Complex64::new(0.0, 0.0);
        for right in [true, false] {
            let [(u1, l1), (u2, l2)] = self.end_samples(right);
            let (u1, u2) = (u1.abs(), u2.abs());
            if l2.norm() == 0.0 && l1.norm() == 0.0 {
                continue;
            }
            let xi_end = self.extent;
            let b = (l2 - l1) / (u2 / u1).ln();
            let a = l2 - b * u2.ln();
            let integral = (a + b * (xi_end.ln() + 1.0)) / xi_end;
            t += xi * integral;
        }
        t
    }

    /// ∫_line L(η) / (η − ξ0) dη with power-fit flank tails (for decaying L).
    pub fn cauchy_at(&self, xi0: Complex64) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for ((&u, &w), &l) in self.us.iter().zip(self.ws.iter()).zip(self.vals.iter()) {
            let eta = Complex64::new(u, self.line_im);
            s += w * l / (eta - xi0);
        }
        for right in [true, false] {
            let [(u1, l1), (u2, l2)] = self.end_samples(right);
            let (u1a, u2a) = (u1.abs(), u2.abs());
            if l1.norm() == 0.0 || l2.norm() == 0.0 {
                continue;
            }
            let p = (l1.norm() / l2.norm()).ln() / (u2a / u1a).ln();
            if !(p > 0.05) {
                continue;
            }
            let sgn = if right { 1.0 } else { -1.0 };
            let scale = (self.extent / u2a).powf(-p);
            s += sgn * l2 * scale / p;
        }
        s
    }
}
