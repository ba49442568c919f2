use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Multi-index `α ∈ ℤ₊^m` addressing a mixed partial derivative `∂^α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(components: Vec<u32>) -> Self {
        Self(components)
    }

    pub fn zero(m: usize) -> Self {
        Self(vec![0; m])
    }

    /// `e_i` in dimension `m` (0-based `i`).
    pub fn unit(m: usize, i: usize) -> Self {
        let mut c = vec![0; m];
        c[i] = 1;
        Self(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn order(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn checked_add(&self, other: &MultiIndex) -> Result<MultiIndex> {
        if self.dim() != other.dim() {
            return Err(Error::InvalidPoint(alloc::format!(
                "multi-index dimensions differ: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }

    /// `α! = Π α_i!`.
    pub fn factorial(&self) -> f64 {
        self.0
            .iter()
            .map(|&a| (1..=a).map(f64::from).product::<f64>())
            .product()
    }

    /// All multi-indices of dimension `m` with order at most `q`, in graded
    /// lexicographic order: by increasing order, then by decreasing first
    /// component, then second, and so on. For `m = 2, q = 2` this is
    /// `(0,0), (1,0), (0,1), (2,0), (1,1), (0,2)`.
    pub fn graded_lex(m: usize, q: usize) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for k in 0..=q {
            let mut cur = vec![0u32; m];
            compositions(k as u32, 0, &mut cur, &mut out);
        }
        out
    }
}

fn compositions(rest: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    let m = cur.len();
    if m == 0 {
        if rest == 0 {
            out.push(MultiIndex(Vec::new()));
        }
        return;
    }
    if pos == m - 1 {
        cur[pos] = rest;
        out.push(MultiIndex(cur.clone()));
        return;
    }
    for a in (0..=rest).rev() {
        cur[pos] = a;
        compositions(rest - a, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}
