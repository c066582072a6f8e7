//! Sparse multivariate polynomials over the eight formal displacement
//! variables `(a1..a4, b1..b4)`, with degree-truncated products and a
//! truncated exponential of the purity kernel's quadratic form.
//!
//! Coefficients are `f64`; the polynomial structure (integer multidegrees,
//! term bookkeeping) is exact. Truncation discards every term whose total
//! degree exceeds the declared cap, which turns the exponential series into
//! a finite sum: the quadratic form is homogeneous of degree two, so powers
//! beyond `cap/2` cannot contribute.

use std::collections::HashMap;

/// Exponents of one monomial in the eight variables `a1..a4, b1..b4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub [u8; 8]);

impl MultiDegree {
    pub const ZERO: MultiDegree = MultiDegree([0; 8]);

    /// Degree `n1` in each `a`-variable and `n2` in each `b`-variable: the
    /// monomial extracted for the `(n1, n2)` number-state purity.
    pub fn uniform(n1: u8, n2: u8) -> Self {
        MultiDegree([n1, n1, n1, n1, n2, n2, n2, n2])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn checked_add(&self, other: &MultiDegree) -> MultiDegree {
        let mut out = [0u8; 8];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a + b;
        }
        MultiDegree(out)
    }
}

/// Polynomial as a map from multidegree to coefficient; zero coefficients
/// are never stored and all stored terms respect the degree cap.
#[derive(Debug, Clone)]
pub struct SparsePoly {
    terms: HashMap<MultiDegree, f64>,
    cap: u32,
}

impl SparsePoly {
    pub fn zero(cap: u32) -> Self {
        Self {
            terms: HashMap::new(),
            cap,
        }
    }

    pub fn constant(value: f64, cap: u32) -> Self {
        let mut p = Self::zero(cap);
        p.add_term(MultiDegree::ZERO, value);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiDegree, f64)>>(terms: I, cap: u32) -> Self {
        let mut p = Self::zero(cap);
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiDegree, &f64)> {
        self.terms.iter()
    }

    fn add_term(&mut self, degree: MultiDegree, coeff: f64) {
        if coeff == 0.0 || degree.total() > self.cap {
            return;
        }
        let slot = self.terms.entry(degree).or_insert(0.0);
        *slot += coeff;
        if *slot == 0.0 {
            self.terms.remove(&degree);
        }
    }

    /// In-place `self += factor * other`.
    pub fn add_scaled(&mut self, other: &SparsePoly, factor: f64) {
        for (d, c) in &other.terms {
            self.add_term(*d, factor * c);
        }
    }
}

/// Product of two polynomials with every term of total degree above `cap`
/// discarded.
pub fn poly_mul(a: &SparsePoly, b: &SparsePoly, cap: u32) -> SparsePoly {
    let mut out = SparsePoly::zero(cap);
    // iterate the smaller operand on the outside
    let (small, large) = if a.terms.len() <= b.terms.len() {
        (a, b)
    } else {
        (b, a)
    };
    for (da, ca) in &small.terms {
        let headroom = cap.saturating_sub(da.total());
        for (db, cb) in &large.terms {
            if db.total() > headroom {
                continue;
            }
            out.add_term(da.checked_add(db), ca * cb);
        }
    }
    out
}

/// Coefficient stored for `degree`, or 0 when absent. Realizing a derivative
/// at zero is the caller's job: multiply by the factorials of the requested
/// orders.
pub fn extract_coefficient(p: &SparsePoly, degree: &MultiDegree) -> f64 {
    p.terms.get(degree).copied().unwrap_or(0.0)
}

/// Which of the five kernel scalars a quadratic-form monomial carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelFactor {
    U,
    V,
    W,
    T,
    S,
}

/// One monomial of the quadratic form: `sign * weight * x/rho * var_a var_b`
/// where `weight` is 1 for the diagonal `u`-terms (`var_a == var_b`) and 2
/// otherwise, and `x` is the kernel scalar selected by `factor`.
#[derive(Debug, Clone, Copy)]
pub struct FormMonomial {
    pub var_a: usize,
    pub var_b: usize,
    pub factor: KernelFactor,
    pub negative: bool,
}

impl FormMonomial {
    pub fn is_diagonal(&self) -> bool {
        self.var_a == self.var_b
    }
}

const A1: usize = 0;
const A2: usize = 1;
const A3: usize = 2;
const A4: usize = 3;
const B1: usize = 4;
const B2: usize = 5;
const B3: usize = 6;
const B4: usize = 7;

macro_rules! fm {
    ($a:ident, $b:ident, $f:ident, $neg:literal) => {
        FormMonomial {
            var_a: $a,
            var_b: $b,
            factor: KernelFactor::$f,
            negative: $neg,
        }
    };
}

/// The 36 monomials of the purity generating exponent. The `u` scalar enters
/// through all eight squares (positively for `a`-variables, negatively for
/// `b`-variables) and through four cross terms; `v`, `w` pair variables
/// within the `a`- and `b`-blocks; `t`, `s` couple the blocks.
pub const FORM_MONOMIALS: [FormMonomial; 36] = [
    // u: cross pairs, then diagonals
    fm!(A1, A3, U, true),
    fm!(A2, A4, U, true),
    fm!(B1, B3, U, false),
    fm!(B2, B4, U, false),
    fm!(A1, A1, U, false),
    fm!(A2, A2, U, false),
    fm!(A3, A3, U, false),
    fm!(A4, A4, U, false),
    fm!(B1, B1, U, true),
    fm!(B2, B2, U, true),
    fm!(B3, B3, U, true),
    fm!(B4, B4, U, true),
    // v
    fm!(A1, A2, V, false),
    fm!(A3, A4, V, false),
    fm!(B1, B4, V, false),
    fm!(B2, B3, V, false),
    // w
    fm!(A1, A4, W, false),
    fm!(A2, A3, W, false),
    fm!(B1, B2, W, false),
    fm!(B3, B4, W, false),
    // t
    fm!(A1, B2, T, true),
    fm!(A1, B4, T, false),
    fm!(A2, B1, T, true),
    fm!(A2, B3, T, false),
    fm!(A3, B2, T, false),
    fm!(A3, B4, T, true),
    fm!(A4, B1, T, false),
    fm!(A4, B3, T, true),
    // s
    fm!(A1, B1, S, false),
    fm!(A1, B3, S, true),
    fm!(A2, B2, S, false),
    fm!(A2, B4, S, true),
    fm!(A3, B1, S, true),
    fm!(A3, B3, S, false),
    fm!(A4, B2, S, true),
    fm!(A4, B4, S, false),
];

/// The quadratic form of the purity generating exponent, parameterized by
/// the dimensionless ratios `u/rho .. s/rho`. Its term structure is fixed
/// ([`FORM_MONOMIALS`]); only the five scalars vary.
#[derive(Debug, Clone, Copy)]
pub struct QuadraticForm8 {
    pub u_over_rho: f64,
    pub v_over_rho: f64,
    pub w_over_rho: f64,
    pub t_over_rho: f64,
    pub s_over_rho: f64,
}

impl QuadraticForm8 {
    fn scalar(&self, factor: KernelFactor) -> f64 {
        match factor {
            KernelFactor::U => self.u_over_rho,
            KernelFactor::V => self.v_over_rho,
            KernelFactor::W => self.w_over_rho,
            KernelFactor::T => self.t_over_rho,
            KernelFactor::S => self.s_over_rho,
        }
    }

    /// The form as a degree-2 polynomial.
    pub fn to_poly(&self, cap: u32) -> SparsePoly {
        let mut p = SparsePoly::zero(cap);
        for m in &FORM_MONOMIALS {
            let mut degree = [0u8; 8];
            degree[m.var_a] += 1;
            degree[m.var_b] += 1;
            let weight = if m.is_diagonal() { 1.0 } else { 2.0 };
            let sign = if m.negative { -1.0 } else { 1.0 };
            p.add_term(MultiDegree(degree), sign * weight * self.scalar(m.factor));
        }
        p
    }
}

/// Truncated exponential `sum_{p=0}^{cap/2} q^p / p!`, with all terms of
/// total degree above `cap` discarded along the way.
pub fn exp_truncated(q: &QuadraticForm8, cap: u32) -> SparsePoly {
    exp_truncated_poly(&q.to_poly(cap), cap)
}

/// Same series for an arbitrary polynomial argument (used by tests for the
/// disjoint-variable product identity).
pub fn exp_truncated_poly(q: &SparsePoly, cap: u32) -> SparsePoly {
    let mut result = SparsePoly::constant(1.0, cap);
    let mut power = SparsePoly::constant(1.0, cap);
    let mut factorial = 1.0;
    for p in 1..=(cap / 2).max(0) {
        power = poly_mul(&power, &q.to_cap(cap), cap);
        if power.term_count() == 0 {
            break;
        }
        factorial *= p as f64;
        result.add_scaled(&power, 1.0 / factorial);
    }
    result
}

impl SparsePoly {
    fn to_cap(&self, cap: u32) -> SparsePoly {
        if cap == self.cap {
            self.clone()
        } else {
            SparsePoly::from_terms(self.terms.iter().map(|(d, c)| (*d, *c)), cap)
        }
    }
}
