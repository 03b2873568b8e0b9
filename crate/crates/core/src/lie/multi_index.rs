use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// An exponent vector in ℕⁿ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultiIndex(SmallVec<[u32; 4]>);

impl MultiIndex {
    pub fn new(entries: impl IntoIterator<Item = u32>) -> Self {
        MultiIndex(entries.into_iter().collect())
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, n))
    }

    /// The unit vector `1_k` (1-based direction).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut m = Self::zero(n);
        m.0[k - 1] = 1;
        m
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry at 1-based position `k`.
    pub fn get(&self, k: usize) -> u32 {
        self.0[k - 1]
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - 1_k`, or `None` on underflow.
    pub fn dec(&self, k: usize) -> Option<MultiIndex> {
        let mut out = self.clone();
        let slot = &mut out.0[k - 1];
        *slot = slot.checked_sub(1)?;
        Some(out)
    }

    pub fn inc(&self, k: usize) -> MultiIndex {
        self.inc_by(k, 1)
    }

    pub fn inc_by(&self, k: usize, r: u32) -> MultiIndex {
        let mut out = self.clone();
        out.0[k - 1] += r;
        out
    }

    /// Componentwise `self ≤ other`.
    pub fn dominated_by(&self, other: &MultiIndex) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `self < other` (dominated and distinct).
    pub fn strictly_dominated_by(&self, other: &MultiIndex) -> bool {
        self.dominated_by(other) && self != other
    }

    /// Lexicographic comparison of `(i_n, …, i_1)`.
    pub fn cmp_reverse_lex(&self, other: &MultiIndex) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }

    /// All multi-indices of length `n` with entry sum exactly `total`, in
    /// ascending reverse-lex order.
    pub fn with_total(n: usize, total: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fill_with_total(&mut cur, 0, total, &mut out);
        out.sort_by(|a, b| a.cmp_reverse_lex(b));
        out
    }

    /// All multi-indices of length `n` with every entry at most `bound`.
    pub fn boxed(n: usize, bound: u32) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex::zero(n)];
        for pos in 0..n {
            let mut next = Vec::with_capacity(out.len() * (bound as usize + 1));
            for m in &out {
                for v in 0..=bound {
                    let mut m2 = m.clone();
                    m2.0[pos] = v;
                    next.push(m2);
                }
            }
            out = next;
        }
        out
    }
}

fn fill_with_total(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<MultiIndex>) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(MultiIndex::new(cur.iter().copied()));
        return;
    }
    if cur.is_empty() {
        return;
    }
    for v in 0..=remaining {
        cur[pos] = v;
        fill_with_total(cur, pos + 1, remaining - v, out);
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, e) in self.0.iter().enumerate() {
            if pos > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl From<&[u32]> for MultiIndex {
    fn from(v: &[u32]) -> Self {
        MultiIndex::new(v.iter().copied())
    }
}

impl<const N: usize> From<[u32; N]> for MultiIndex {
    fn from(v: [u32; N]) -> Self {
        MultiIndex::new(v)
    }
}
