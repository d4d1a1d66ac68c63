use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

/// A determinantal resultant problem on `P^N`, `N = (m−r)(n−r) − 1`:
/// morphisms `⊕ O(−d_i) → ⊕ O(−k_j)` (`m` sources, `n` targets) and the
/// condition `rank ≤ r` somewhere on `P^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProblemSpec {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub d: Vec<i64>,
    pub k: Vec<i64>,
}

/// Verdict of [`ProblemSpec::existence_check`] with the failed conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Existence {
    pub exists: bool,
    pub failures: Vec<String>,
}

impl ProblemSpec {
    pub fn new(m: usize, n: usize, r: usize, d: Vec<i64>, k: Vec<i64>) -> Self {
        ProblemSpec { m, n, r, d, k }
    }

    /// `(m − r)(n − r) − 1`, saturating at zero for invalid ranks.
    pub fn ambient_dim(&self) -> usize {
        (self.m.saturating_sub(self.r) * self.n.saturating_sub(self.r)).saturating_sub(1)
    }

    pub fn is_principal(&self) -> bool {
        self.r + 1 == self.n
    }

    /// Checks `m ≥ n > r ≥ 0`, `d_i > k_j` for all pairs, matching tuple
    /// lengths and `N ≥ 1`.
    pub fn existence_check(&self) -> Existence {
        let mut failures = Vec::new();
        if self.d.len() != self.m {
            failures.push(format!("d has {} entries, expected m = {}", self.d.len(), self.m));
        }
        if self.k.len() != self.n {
            failures.push(format!("k has {} entries, expected n = {}", self.k.len(), self.n));
        }
        if self.m < self.n {
            failures.push(format!("m >= n fails: m = {}, n = {}", self.m, self.n));
        }
        if self.n <= self.r {
            failures.push(format!("n > r fails: n = {}, r = {}", self.n, self.r));
        }
        for (i, di) in self.d.iter().enumerate() {
            for (j, kj) in self.k.iter().enumerate() {
                if di <= kj {
                    failures.push(format!(
                        "d_{} > k_{} fails: {} <= {}",
                        i + 1,
                        j + 1,
                        di,
                        kj
                    ));
                }
            }
        }
        if self.n > self.r && self.m >= self.n && (self.m - self.r) * (self.n - self.r) < 2 {
            failures.push(String::from("(m - r)(n - r) = 1 leaves no projective space of dimension >= 1"));
        }
        Existence {
            exists: failures.is_empty(),
            failures,
        }
    }

    /// Degree of entry `(j, i)` of a morphism: `d_i − k_j` (0-based indices).
    pub fn entry_degree(&self, j: usize, i: usize) -> i64 {
        self.d[i] - self.k[j]
    }

    /// The same problem twisted by `O(l)`: `d_i + l`, `k_j + l`.
    pub fn twisted(&self, l: i64) -> ProblemSpec {
        ProblemSpec {
            m: self.m,
            n: self.n,
            r: self.r,
            d: self.d.iter().map(|v| v + l).collect(),
            k: self.k.iter().map(|v| v + l).collect(),
        }
    }

    /// Twist with `min(k) = 0`.
    pub fn normalized(&self) -> ProblemSpec {
        let l = self.k.iter().copied().min().unwrap_or(0);
        self.twisted(-l)
    }
}
