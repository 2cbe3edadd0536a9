//! Sparse multivariate polynomials with real coefficients over a fixed number
//! of variables. Just enough algebra to expand ⟨(classical + operator)^k⟩.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

/// Exponent vector.
pub type Monomial<const N: usize> = [u8; N];

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<Monomial<N>, f64>,
}

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: f64) -> Self {
        let mut p = Self::zero();
        p.add_term([0; N], c);
        p
    }

    /// The single variable x_i.
    pub fn var(i: usize) -> Self {
        let mut m = [0u8; N];
        m[i] = 1;
        let mut p = Self::zero();
        p.add_term(m, 1.0);
        p
    }

    pub fn add_term(&mut self, m: Monomial<N>, c: f64) {
        if c == 0.0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0.0);
        *e += c;
        if *e == 0.0 {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, *c);
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = [0u8; N];
                for k in 0..N {
                    m[k] = ma[k] + mb[k];
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial<N>, &f64)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial<N>) -> f64 {
        self.terms.get(m).copied().unwrap_or(0.0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, x: &[f64; N]) -> f64 {
        let mut s = 0.0;
        for (m, c) in &self.terms {
            let mut t = *c;
            for k in 0..N {
                for _ in 0..m[k] {
                    t *= x[k];
                }
            }
            s += t;
        }
        s
    }
}

/// Total degree of an exponent slice.
pub fn degree(m: &[u8]) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

/// Collect the terms of `p` into a map keyed by their exponents restricted to
/// `keep`, applying `reduce` to the complementary exponents. `reduce` returns
/// a weight (or `None` when the factor is not supported).
pub fn partial_expectation<const N: usize, K: Ord + Copy, F>(
    p: &Poly<N>,
    split: usize,
    mut reduce: F,
) -> Option<BTreeMap<(Vec<u8>, K), f64>>
where
    F: FnMut(&[u8]) -> Option<(f64, K)>,
{
    let mut out: BTreeMap<(Vec<u8>, K), f64> = BTreeMap::new();
    for (m, c) in p.terms() {
        let (classical, operator) = m.split_at(split);
        let (w, tag) = reduce(operator)?;
        if w == 0.0 {
            continue;
        }
        *out.entry((classical.to_vec(), tag)).or_insert(0.0) += c * w;
    }
    out.retain(|_, v| *v != 0.0);
    Some(out)
}
