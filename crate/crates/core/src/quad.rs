//! Quadrature rules shared by the assemblers and solvers.

use gauss_quad::legendre::GaussLegendre;

use crate::error::{Error, Result};

/// Gauss-Legendre nodes and weights mapped to `[0, 1]`.
#[derive(Debug, Clone)]
pub struct UnitRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl UnitRule {
    pub fn gauss_legendre(points: usize) -> Self {
        let points = points.max(2);
        let rule = GaussLegendre::new(points).expect("degree >= 2");
        let mut pairs: Vec<(f64, f64)> = rule
            .as_node_weight_pairs()
            .iter()
            .map(|&(x, w)| (0.5 * (x + 1.0), 0.5 * w))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let (nodes, weights) = pairs.into_iter().unzip();
        Self { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn on(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let h = b - a;
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (a + h * x, h * w))
    }

    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.on(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

// Gauss-Kronrod 10/21 abscissae and weights (QUADPACK qk21).
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600525106086,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs_value: f64,
}

fn gk21(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> Segment {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    let mut abs_value = WGK[10] * fc.abs();
    for (j, (&x, &w)) in XGK[..10].iter().zip(&WGK[..10]).enumerate() {
        let f1 = f(c - h * x);
        let f2 = f(c + h * x);
        kronrod += w * (f1 + f2);
        abs_value += w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    Segment {
        a,
        b,
        value: kronrod * h,
        error: ((kronrod - gauss) * h).abs(),
        abs_value: abs_value * h.abs(),
    }
}

/// Globally adaptive Gauss-Kronrod integration of `f` over the consecutive
/// intervals of `breaks`. Stops when the summed error estimate is below
/// `max(abs_tol, rel_tol |I|)` or at the rounding floor of the integrand.
pub fn integrate_adaptive(
    f: impl Fn(f64) -> f64,
    breaks: &[f64],
    abs_tol: f64,
    rel_tol: f64,
) -> Result<f64> {
    const MAX_SEGMENTS: usize = 4000;
    if breaks.len() < 2 {
        return Ok(0.0);
    }
    let mut segments: Vec<Segment> = breaks
        .windows(2)
        .filter(|w| w[1] != w[0])
        .map(|w| gk21(&f, w[0], w[1]))
        .collect();
    loop {
        let value: f64 = segments.iter().map(|s| s.value).sum();
        let error: f64 = segments.iter().map(|s| s.error).sum();
        let abs_value: f64 = segments.iter().map(|s| s.abs_value).sum();
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::Quadrature("non-finite integrand".into()));
        }
        let floor = 50.0 * f64::EPSILON * abs_value;
        if error <= abs_tol.max(rel_tol * value.abs()).max(floor) {
            return Ok(value);
        }
        if segments.len() >= MAX_SEGMENTS {
            return Err(Error::Quadrature(format!(
                "adaptive rule on [{}, {}]: error {:e} after {} segments",
                breaks[0],
                breaks[breaks.len() - 1],
                error,
                segments.len()
            )));
        }
        let (worst, _) = segments
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("non-empty");
        let s = segments.swap_remove(worst);
        let mid = 0.5 * (s.a + s.b);
        if mid <= s.a.min(s.b) || mid >= s.a.max(s.b) {
            // interval exhausted at machine resolution
            return Ok(value);
        }
        segments.push(gk21(&f, s.a, mid));
        segments.push(gk21(&f, mid, s.b));
    }
}

/// `∫_a^b w^(mu-1) dw = (b^mu - a^mu)/mu`, continuous through `mu = 0`
/// where it becomes `ln(b/a)`. Requires `0 <= a <= b`.
pub(crate) fn power_primitive(a: f64, b: f64, mu: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    if a == 0.0 {
        debug_assert!(mu > 0.0);
        return b.powf(mu) / mu;
    }
    let log_ratio = (b / a).ln();
    if mu.abs() * log_ratio.abs() < 1e-8 {
        // series of expm1(mu L)/mu
        let x = mu * log_ratio;
        return a.powf(mu) * log_ratio * (1.0 + x / 2.0 + x * x / 6.0);
    }
    a.powf(mu) * (mu * log_ratio).exp_m1() / mu
}
