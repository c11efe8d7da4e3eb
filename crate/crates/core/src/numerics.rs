//! Small numerical building blocks: compensated summation, bisection and
//! golden-section search.

/// Neumaier-compensated accumulator.
///
/// Additions are order dependent, so callers that need reproducible totals
/// must feed terms in a fixed order.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.carry += (self.sum - t) + value;
        } else {
            self.carry += (value - t) + self.sum;
        }
        self.sum = t;
    }

    /// Merges another accumulator, carrying both error terms.
    pub fn merge(&mut self, other: &CompensatedSum) {
        self.add(other.sum);
        self.add(other.carry);
    }

    pub fn total(&self) -> f64 {
        self.sum + self.carry
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

/// Outcome of a bisection run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bisection {
    pub root: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Bisection for a sign change of `f` on `[lo, hi]`.
///
/// Stops once `|f(x)| <= ftol`, the bracket shrinks below one ulp-scale width,
/// or `max_iter` is reached. Returns `None` when the endpoints do not bracket
/// a root.
pub fn bisect<F>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    ftol: f64,
    max_iter: usize,
) -> Option<Bisection>
where
    F: FnMut(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Some(Bisection {
            root: lo,
            value: 0.0,
            iterations: 0,
        });
    }
    if f_hi == 0.0 {
        return Some(Bisection {
            root: hi,
            value: 0.0,
            iterations: 0,
        });
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return None;
    }
    let mut best = Bisection {
        root: lo,
        value: f_lo,
        iterations: 0,
    };
    for it in 1..=max_iter {
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid.abs() < best.value.abs() {
            best = Bisection {
                root: mid,
                value: f_mid,
                iterations: it,
            };
        }
        best.iterations = it;
        if f_mid.abs() <= ftol || mid <= lo || mid >= hi {
            break;
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some(best)
}

/// Golden-section minimization of a unimodal `f` on `[a, b]` down to a
/// bracket of width `tol`.
pub fn golden_section_min<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// `n` evenly spaced points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 { (b - a) / (n - 1) as f64 } else { 0.0 };
    (0..n).map(move |i| {
        if i + 1 == n && n > 1 {
            b
        } else {
            a + step * i as f64
        }
    })
}

/// Centers of `n` equal cells spanning `[a, b]`.
pub fn cell_centers(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    let h = (b - a) / n as f64;
    (0..n).map(move |i| a + (i as f64 + 0.5) * h)
}

/// Evaluates `f(0..n)` and returns the results in index order. Runs on the
/// rayon pool when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}
