//! Partitions, the shifted-sequence concatenation, and the terms of the
//! Lascoux resolution of a determinantal variety.
//!
//! Partitions are stored weakly increasing, `0 <= i_1 <= ... <= i_r`.
//! Leading zeros are insignificant for equality, but the stored length is
//! kept so that padded tuples such as `O_r` can be fed to [`conc`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("parts must be weakly increasing")]
    NotIncreasing,
    #[error("partition has {len} parts, at most {max} allowed")]
    TooLong { len: usize, max: usize },
    #[error("part {part} exceeds the bound {max}")]
    PartTooLarge { part: u32, max: u32 },
    #[error("need m >= n > r >= 0, got m={m}, n={n}, r={r}")]
    BadRanks { m: u32, n: u32, r: u32 },
}

#[derive(Clone, Debug, Eq)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(PartitionError::NotIncreasing);
        }
        Ok(Partition { parts })
    }

    /// Builds from parts listed in decreasing order (Ferrer rows, top first).
    pub fn from_decreasing(mut rows: Vec<u32>) -> Result<Self, PartitionError> {
        rows.reverse();
        Self::new(rows)
    }

    /// The zero partition with `r` explicit zero parts.
    pub fn zeros(r: usize) -> Self {
        Partition { parts: vec![0; r] }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Stored parts, including leading zeros.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Nonzero parts in increasing order.
    pub fn nonzero_parts(&self) -> &[u32] {
        let first = self.parts.iter().position(|&p| p > 0).unwrap_or(self.parts.len());
        &self.parts[first..]
    }

    /// Ferrer rows, longest first, zeros dropped.
    pub fn to_decreasing(&self) -> Vec<u32> {
        self.nonzero_parts().iter().rev().copied().collect()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.nonzero_parts().len()
    }

    pub fn largest(&self) -> u32 {
        self.parts.last().copied().unwrap_or(0)
    }

    /// Left-pads with zeros to `len` parts; never truncates.
    pub fn padded(&self, len: usize) -> Partition {
        let nz = self.nonzero_parts();
        let zeros = len.saturating_sub(nz.len());
        let mut parts = vec![0; zeros];
        parts.extend_from_slice(nz);
        Partition { parts }
    }

    /// Ferrer diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        let a = self.to_decreasing();
        let b = other.to_decreasing();
        b.len() <= a.len() && b.iter().zip(&a).all(|(x, y)| x <= y)
    }

    /// Side of the largest square fitting in the Ferrer diagram.
    pub fn durfee_size(&self) -> u32 {
        self.to_decreasing()
            .iter()
            .enumerate()
            .take_while(|(i, &row)| row as usize > *i)
            .count() as u32
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero_parts() == other.nonzero_parts()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.nonzero_parts().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str(")")
    }
}

/// Dual partition: the transposed Ferrer diagram.
pub fn dual(i: &Partition) -> Partition {
    let largest = i.largest();
    // column k of the diagram has as many boxes as there are parts >= k
    let parts = (1..=largest)
        .rev()
        .map(|k| i.parts.iter().filter(|&&p| p >= k).count() as u32)
        .collect();
    Partition { parts }
}

/// Result of [`conc`]: either a partition with its ampleness, or the empty
/// value (`S_∅ = 0`, infinite ampleness).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Concatenation {
    Partition { h: Partition, ampleness: u32 },
    Empty,
}

/// Generalized concatenation of `i ∈ Z^r` and `j ∈ Z^q`.
///
/// Forms the shifted sequence `i_1, i_2+1, …, i_r+r−1, j_1+r, …, j_q+r+q−1`.
/// If its entries are distinct and non-negative, sorting them yields
/// `h_t + t − 1` for a unique partition `h`; the ampleness is the number of
/// inversions removed by the sort, i.e. the minimal count of adjacent
/// transpositions.
pub fn conc(i: &[i64], j: &[i64]) -> Concatenation {
    let shifted: Vec<i64> = i
        .iter()
        .chain(j.iter())
        .enumerate()
        .map(|(t, v)| v + t as i64)
        .collect();
    if shifted.iter().any(|&s| s < 0) {
        return Concatenation::Empty;
    }
    let mut sorted = shifted.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Concatenation::Empty;
    }
    let mut inversions = 0u32;
    for a in 0..shifted.len() {
        for b in a + 1..shifted.len() {
            if shifted[a] > shifted[b] {
                inversions += 1;
            }
        }
    }
    let parts = sorted
        .iter()
        .enumerate()
        .map(|(t, s)| (s - t as i64) as u32)
        .collect();
    Concatenation::Partition {
        h: Partition { parts },
        ampleness: inversions,
    }
}

/// Output of [`lascoux_shape`]: the partition `I'` (or `None` for the empty
/// value) together with `n(I)` and the square size `p(I)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LascouxShape {
    pub i_prime: Option<Partition>,
    pub ampleness: u32,
    pub square: u32,
}

fn check_ranks(m: u32, n: u32, r: u32) -> Result<(), PartitionError> {
    if m >= n && n > r {
        Ok(())
    } else {
        Err(PartitionError::BadRanks { m, n, r })
    }
}

/// Explicit `(I', n(I))` for a partition `I` of length at most `q = n − r`.
///
/// With `p` the side of the largest square in the diagram of `I` (padded to
/// `q` parts): `I'` is empty when `i_{q−p+1} < p + r`; otherwise
/// `n(I) = p·r` and
/// `I' = (i_1, …, i_{q−p}, p (r times), i_{q−p+1} − r, …, i_q − r)`.
pub fn lascoux_shape(i: &Partition, m: u32, n: u32, r: u32) -> Result<LascouxShape, PartitionError> {
    check_ranks(m, n, r)?;
    let q = (n - r) as usize;
    if i.length() > q {
        return Err(PartitionError::TooLong {
            len: i.length(),
            max: q,
        });
    }
    if i.largest() > m {
        return Err(PartitionError::PartTooLarge {
            part: i.largest(),
            max: m,
        });
    }
    let parts = i.padded(q).parts;
    let p = i.durfee_size() as usize;
    if p == 0 {
        let mut prime = parts.clone();
        prime.extend(core::iter::repeat_n(0, r as usize));
        return Ok(LascouxShape {
            i_prime: Some(Partition { parts: prime }),
            ampleness: 0,
            square: 0,
        });
    }
    // parts[q - p] is i_{q-p+1} in 1-based indexing
    if parts[q - p] < p as u32 + r {
        return Ok(LascouxShape {
            i_prime: None,
            ampleness: 0,
            square: p as u32,
        });
    }
    let mut prime: Vec<u32> = parts[..q - p].to_vec();
    prime.extend(core::iter::repeat_n(p as u32, r as usize));
    prime.extend(parts[q - p..].iter().map(|v| v - r));
    Ok(LascouxShape {
        i_prime: Some(Partition { parts: prime }),
        ampleness: p as u32 * r,
        square: p as u32,
    })
}

/// One summand `∧_I E ⊗ S_{I'} F*` of the term `L^p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexTerm {
    pub i: Partition,
    pub i_prime: Partition,
    pub ampleness: u32,
    pub homological_index: i64,
}

/// All summands of `L^p`, ordered lexicographically on the parts of `I`
/// (as `q`-tuples). Indices outside `[q·r − m·q, 0]` give no terms.
pub fn complex_terms(m: u32, n: u32, r: u32, p: i64) -> Result<Vec<ComplexTerm>, PartitionError> {
    check_ranks(m, n, r)?;
    let q = (n - r) as usize;
    let lowest = (q as i64) * (r as i64) - (m as i64) * (q as i64);
    let mut out = Vec::new();
    if p > 0 || p < lowest {
        return Ok(out);
    }
    for parts in increasing_tuples(q, m) {
        let i = Partition { parts };
        let shape = lascoux_shape(&i, m, n, r)?;
        let Some(i_prime) = shape.i_prime else {
            continue;
        };
        let index = shape.ampleness as i64 - i.weight() as i64;
        if index == p {
            out.push(ComplexTerm {
                i,
                i_prime,
                ampleness: shape.ampleness,
                homological_index: index,
            });
        }
    }
    Ok(out)
}

/// Weakly increasing tuples of length `len` with entries in `0..=max`, in
/// lexicographic order.
fn increasing_tuples(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn go(cur: &mut Vec<u32>, len: usize, lo: u32, max: u32, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=max {
            cur.push(v);
            go(cur, len, v, max, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(len), len, 0, max, &mut out);
    out
}

/// Number of semistandard Young tableaux of shape `i` with entries in
/// `1..=rank`, by the hook-content formula. Zero when `length(i) > rank`.
pub fn schur_dim(i: &Partition, rank: u32) -> BigUint {
    let rows = i.to_decreasing();
    if rows.len() > rank as usize {
        return BigUint::zero();
    }
    let cols = dual(i).to_decreasing();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (a, &row) in rows.iter().enumerate() {
        for b in 0..row as usize {
            let content = rank as i64 + b as i64 - a as i64;
            num *= content as u64;
            let hook = (row as usize - b) + (cols[b] as usize - a) - 1;
            den *= hook as u64;
        }
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn dual_of_124() {
        assert_eq!(dual(&part(&[1, 2, 4])), part(&[1, 1, 2, 3]));
        assert_eq!(dual(&part(&[5])), part(&[1, 1, 1, 1, 1]));
        assert_eq!(dual(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn leading_zeros_ignored() {
        assert_eq!(part(&[0, 0, 1, 2]), part(&[1, 2]));
        assert_ne!(part(&[1, 2]), part(&[2, 2]));
    }

    #[test]
    fn rejects_decreasing() {
        assert_eq!(Partition::new(vec![2, 1]), Err(PartitionError::NotIncreasing));
    }

    #[test]
    fn plain_concatenation() {
        assert_eq!(
            conc(&[1, 2], &[3, 4]),
            Concatenation::Partition {
                h: part(&[1, 2, 3, 4]),
                ampleness: 0
            }
        );
    }

    #[test]
    fn colliding_concatenation_is_empty() {
        // shifted sequence 1, 1
        assert_eq!(conc(&[1], &[0]), Concatenation::Empty);
        assert_eq!(conc(&[-2], &[0]), Concatenation::Empty);
    }

    #[test]
    fn line_against_zeros() {
        for r in 1..5u32 {
            for q in 1..4usize {
                let mut i = vec![0i64; q];
                i[q - 1] = r as i64 + 1;
                let o = vec![0i64; r as usize];
                match conc(&i, &o) {
                    Concatenation::Partition { h, ampleness } => {
                        assert_eq!(ampleness, r);
                        assert_eq!(h, Partition::new(vec![1; r as usize + 1]).unwrap());
                    }
                    Concatenation::Empty => panic!("expected a partition"),
                }
            }
        }
    }

    #[test]
    fn shape_line_partition() {
        // I = (r+1) gives a column of length r+1
        for (m, n, r) in [(4u32, 3u32, 1u32), (5, 4, 2), (6, 6, 3)] {
            let q = (n - r) as usize;
            let i = part(&[r + 1]).padded(q);
            let s = lascoux_shape(&i, m, n, r).unwrap();
            assert_eq!(s.ampleness, r);
            assert_eq!(s.i_prime.unwrap(), Partition::new(vec![1; r as usize + 1]).unwrap());
        }
    }

    #[test]
    fn shape_far_left() {
        let (m, n, r) = (5u32, 3u32, 1u32);
        let q = (n - r) as usize;
        let i = part(&vec![m; q]);
        let s = lascoux_shape(&i, m, n, r).unwrap();
        assert_eq!(s.ampleness, q as u32 * r);
        assert_eq!(s.ampleness as i64 - i.weight() as i64, (q as i64) * (r as i64 - m as i64));
    }

    #[test]
    fn shape_rejects_malformed() {
        assert!(matches!(
            lascoux_shape(&part(&[1, 1, 1]), 4, 3, 1),
            Err(PartitionError::TooLong { .. })
        ));
        assert!(matches!(
            lascoux_shape(&part(&[9]), 4, 3, 1),
            Err(PartitionError::PartTooLarge { .. })
        ));
        assert!(matches!(
            lascoux_shape(&part(&[1]), 2, 3, 1),
            Err(PartitionError::BadRanks { .. })
        ));
    }

    #[test]
    fn complex_ends() {
        let (m, n, r) = (5u32, 3u32, 1u32);
        let zero = complex_terms(m, n, r, 0).unwrap();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].i, Partition::empty());
        let minus_one = complex_terms(m, n, r, -1).unwrap();
        assert_eq!(minus_one.len(), 1);
        assert_eq!(minus_one[0].i, part(&[r + 1]));
        let q = (n - r) as i64;
        let low = complex_terms(m, n, r, q * r as i64 - m as i64 * q).unwrap();
        assert_eq!(low.len(), 1);
        assert_eq!(low[0].i, part(&[m, m]));
        assert!(complex_terms(m, n, r, 1).unwrap().is_empty());
        assert!(complex_terms(m, n, r, q * r as i64 - m as i64 * q - 1).unwrap().is_empty());
    }

    #[test]
    fn schur_small_cases() {
        assert_eq!(schur_dim(&part(&[1, 1]), 2), BigUint::from(1u32));
        assert_eq!(schur_dim(&part(&[2]), 2), BigUint::from(3u32));
        assert_eq!(schur_dim(&part(&[1, 2]), 2), BigUint::from(2u32));
        assert_eq!(schur_dim(&part(&[1, 1, 1]), 2), BigUint::zero());
        assert_eq!(schur_dim(&Partition::empty(), 3), BigUint::one());
    }
}
