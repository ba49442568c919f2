use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::MultiIndex;

/// Multivariate polynomial in `d ∈ ℝ^m` with real coefficients, stored sparsely
/// by exponent vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Vec<u32>, f64>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: f64) -> Self {
        let mut p = Self::zero(dim);
        if c != 0.0 {
            p.terms.insert(vec![0; dim], c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(exponents, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], f64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    /// Value of the constant term, i.e. the polynomial at `d = 0`.
    pub fn constant_term(&self) -> f64 {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&a| a == 0))
            .map_or(0.0, |(_, &c)| c)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: f64) {
        if c == 0.0 {
            return;
        }
        let entry = self.terms.entry(exps).or_insert(0.0);
        *entry += c;
        if *entry == 0.0 {
            self.terms.retain(|_, v| *v != 0.0);
        }
    }

    pub fn add_assign(&mut self, other: &Polynomial) {
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), c);
        }
    }

    pub fn partial(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (e, &c) in &self.terms {
            if e[i] > 0 {
                let mut ne = e.clone();
                ne[i] -= 1;
                out.add_term(ne, c * f64::from(e[i]));
            }
        }
        out
    }

    /// `c · d_i · p`.
    pub fn times_coordinate(&self, i: usize, c: f64) -> Polynomial {
        let mut out = Polynomial::zero(self.dim);
        for (e, &coef) in &self.terms {
            let mut ne = e.clone();
            ne[i] += 1;
            out.add_term(ne, coef * c);
        }
        out
    }

    pub fn eval(&self, d: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, &c)| {
                c * e
                    .iter()
                    .zip(d)
                    .map(|(&a, &x)| pow_u(x, a))
                    .product::<f64>()
            })
            .sum()
    }
}

fn pow_u(x: f64, n: u32) -> f64 {
    (0..n).fold(1.0, |acc, _| acc * x)
}

/// Symbolic form of `∂^α f(d)` for a radial `f(d) = g̃(‖d‖²)`:
/// `Σ_k poly_k(d) · g̃^{(k)}(‖d‖²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialJet {
    dim: usize,
    terms: BTreeMap<usize, Polynomial>,
}

impl RadialJet {
    /// The order-0 jet `f` itself.
    pub fn identity(dim: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(0, Polynomial::constant(dim, 1.0));
        Self { dim, terms }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Jet of `∂^α f`.
    pub fn for_multi_index(alpha: &MultiIndex) -> Self {
        let dim = alpha.dim();
        let mut jet = Self::identity(dim);
        for (i, &a) in alpha.components().iter().enumerate() {
            for _ in 0..a {
                jet = jet.differentiate(i);
            }
        }
        jet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(poly_k, k)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Polynomial, usize)> {
        self.terms.iter().map(|(&k, p)| (p, k))
    }

    pub fn max_order(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    /// Chain rule in coordinate `i` (0-based):
    /// `∂_i[q·g̃^{(k)}] = (∂_i q)·g̃^{(k)} + 2 d_i q·g̃^{(k+1)}`.
    pub fn differentiate(&self, i: usize) -> RadialJet {
        let mut out = RadialJet::zero(self.dim);
        for (&k, q) in &self.terms {
            let dq = q.partial(i);
            if !dq.is_zero() {
                out.accumulate(k, &dq);
            }
            out.accumulate(k + 1, &q.times_coordinate(i, 2.0));
        }
        out
    }

    fn accumulate(&mut self, k: usize, p: &Polynomial) {
        let slot = self
            .terms
            .entry(k)
            .or_insert_with(|| Polynomial::zero(self.dim));
        slot.add_assign(p);
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Evaluates the jet at `d` given `g̃^{(k)}(‖d‖²)` for `k = 0..`.
    pub fn eval(&self, d: &[f64], sjet: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(&k, p)| p.eval(d) * sjet[k])
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_derivative() {
        let j = RadialJet::identity(2).differentiate(0);
        let terms: Vec<_> = j.terms().collect();
        assert_eq!(terms.len(), 1);
        let (p, k) = terms[0];
        assert_eq!(k, 1);
        assert_eq!(p.terms().collect::<Vec<_>>(), vec![(&[1u32, 0][..], 2.0)]);
    }

    #[test]
    fn second_derivative_same_coordinate() {
        let j = RadialJet::identity(1).differentiate(0).differentiate(0);
        let terms: Vec<_> = j.terms().map(|(p, k)| (k, p.terms().map(|(e, c)| (e.to_vec(), c)).collect::<Vec<_>>())).collect();
        assert_eq!(terms, vec![(1, vec![(vec![0], 2.0)]), (2, vec![(vec![2], 4.0)])]);
    }

    #[test]
    fn zero_jet_stays_zero() {
        let z = RadialJet::zero(3);
        assert!(z.differentiate(1).is_zero());
    }

    #[test]
    fn order_bound() {
        let a = MultiIndex::new(alloc::vec![2, 1, 1]);
        let j = RadialJet::for_multi_index(&a);
        assert!(j.max_order().unwrap() <= a.order());
    }
}
