//! Adaptive Gauss–Legendre quadrature. Nodes are generated by Newton
//! iteration on the Legendre recurrence; refinement is globally greedy
//! (always split the interval with the worst error estimate), which
//! keeps algebraic endpoint singularities at a linear number of panels.

use crate::error::{Error, Result};
use std::collections::BinaryHeap;
use std::sync::OnceLock;

const GL_ORDER: usize = 15;

/// Gauss–Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0) * x * p1 - kf * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

fn gl15() -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    CACHE.get_or_init(|| gauss_legendre(GL_ORDER))
}

fn panel<F: Fn(f64) -> f64 + ?Sized>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let (nodes, weights) = gl15();
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = 0.0;
    let mut acc_abs = 0.0;
    for (x, w) in nodes.iter().zip(weights) {
        let v = f(c + h * x);
        acc += w * v;
        acc_abs += w * v.abs();
    }
    (acc * h, acc_abs * h.abs())
}

/// Interval record: refined value (two halves), error vs the one-panel
/// value, and the halves for later splitting.
struct Interval {
    lo: f64,
    hi: f64,
    left: f64,
    right: f64,
    refined: f64,
    abs: f64,
    err: f64,
}

impl Interval {
    fn build<F: Fn(f64) -> f64 + ?Sized>(f: &F, lo: f64, hi: f64, whole: f64) -> Self {
        let mid = 0.5 * (lo + hi);
        let (l, la) = panel(f, lo, mid);
        let (r, ra) = panel(f, mid, hi);
        let refined = l + r;
        Interval { lo, hi, left: l, right: r, refined, abs: la + ra, err: (refined - whole).abs() }
    }
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Integral of `f` over the union of consecutive breakpoint intervals,
/// to absolute tolerance `tol_abs` within `max_evals` evaluations.
pub fn adaptive_multi<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    breakpoints: &[f64],
    tol_abs: f64,
    max_evals: usize,
) -> Result<f64> {
    if breakpoints.len() < 2 {
        return Err(Error::InvalidInput("need at least one interval".into()));
    }
    let span: f64 = (breakpoints[breakpoints.len() - 1] - breakpoints[0]).abs();
    if span == 0.0 {
        return Ok(0.0);
    }
    let mut heap = BinaryHeap::new();
    let mut total = 0.0;
    let mut err_tot = 0.0;
    let mut abs_tot = 0.0;
    let mut evals = 0usize;
    for w in breakpoints.windows(2) {
        let (whole, _) = panel(f, w[0], w[1]);
        let iv = Interval::build(f, w[0], w[1], whole);
        evals += 3 * GL_ORDER;
        total += iv.refined;
        err_tot += iv.err;
        abs_tot += iv.abs;
        heap.push(iv);
    }
    loop {
        let noise = 256.0 * f64::EPSILON * abs_tot;
        if err_tot <= tol_abs.max(noise) {
            return Ok(total);
        }
        let worst = match heap.pop() {
            Some(iv) => iv,
            None => return Ok(total),
        };
        let width_floor = (worst.hi - worst.lo).abs() <= span * 1e-14;
        if width_floor || evals >= max_evals {
            // put it back mentally: nothing more to gain from this interval
            let err = worst.err;
            heap.push(worst);
            if evals >= max_evals && err_tot > 10.0 * tol_abs.max(noise) {
                return Err(Error::Accuracy(format!(
                    "quadrature budget of {max_evals} evaluations exhausted (err ≈ {err_tot:.2e}, worst panel {err:.2e})"
                )));
            }
            return Ok(total);
        }
        total -= worst.refined;
        err_tot -= worst.err;
        abs_tot -= worst.abs;
        let mid = 0.5 * (worst.lo + worst.hi);
        for (lo, hi, whole) in
            [(worst.lo, mid, worst.left), (mid, worst.hi, worst.right)]
        {
            let iv = Interval::build(f, lo, hi, whole);
            evals += 2 * GL_ORDER;
            total += iv.refined;
            err_tot += iv.err;
            abs_tot += iv.abs;
            heap.push(iv);
        }
    }
}

/// Integral of `f` over [a, b] to absolute tolerance `tol_abs`.
pub fn adaptive<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    tol_abs: f64,
    max_evals: usize,
) -> Result<f64> {
    adaptive_multi(f, &[a, b], tol_abs, max_evals)
}

/// Like [`adaptive`] but pre-split into `panels` equal pieces so a known
/// oscillation scale is resolved before refinement starts.
pub fn adaptive_oscillatory<F: Fn(f64) -> f64 + ?Sized>(
    f: &F,
    a: f64,
    b: f64,
    panels: usize,
    tol_abs: f64,
    max_evals: usize,
) -> Result<f64> {
    let panels = panels.max(1);
    let pts: Vec<f64> = (0..=panels)
        .map(|i| a + (b - a) * i as f64 / panels as f64)
        .collect();
    adaptive_multi(f, &pts, tol_abs, max_evals)
}
