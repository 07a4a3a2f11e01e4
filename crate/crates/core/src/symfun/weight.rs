use std::cmp::Ordering;
use std::fmt;

/// An A_n weight `m = (m_1, ..., m_n)` in the basis of fundamental weights.
///
/// Doubles as the exponent vector of a z-monomial `z_1^{m_1} ... z_n^{m_n}`.
/// Ordering is graded by the weighted degree `Σ i·m_i`, ties broken
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight(pub Vec<u32>);

impl Weight {
    pub fn new(m: Vec<u32>) -> Self {
        Weight(m)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The i-th fundamental weight (0-based), i.e. the exponent of `z_{i+1}`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut m = vec![0; rank];
        m[i] = 1;
        Weight(m)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `Σ i·m_i`, the x-degree of the lifted monomial.
    pub fn weighted_degree(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &m)| (i as u32 + 1) * m).sum()
    }

    /// `Σ m_i`.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Adds a signed shift; `None` if any entry would become negative.
    pub fn shifted(&self, s: &[i64]) -> Option<Weight> {
        self.0.iter().zip(s).map(|(&m, &d)| u32::try_from(m as i64 + d).ok()).collect::<Option<Vec<_>>>().map(Weight)
    }

    pub fn signed(&self) -> Vec<i64> {
        self.0.iter().map(|&m| m as i64).collect()
    }

    /// Row lengths of the associated partition with N = rank+1 parts:
    /// `row_j = Σ_{k≥j} m_k`, last row 0.
    pub fn partition(&self) -> Vec<u32> {
        let mut rows = vec![0; self.rank() + 1];
        for j in (0..self.rank()).rev() {
            rows[j] = rows[j + 1] + self.0[j];
        }
        rows
    }

    /// Inverse of [`Weight::partition`]; `None` unless the rows are
    /// non-increasing with last part 0.
    pub fn from_partition(rows: &[u32]) -> Option<Weight> {
        if rows.is_empty() || *rows.last()? != 0 {
            return None;
        }
        rows.windows(2).map(|w| w[0].checked_sub(w[1])).collect::<Option<Vec<_>>>().map(Weight)
    }

    /// Root-lattice coordinates of `self - lower`: the `c` with
    /// `self - lower = Σ c_i α_i`. Returns `None` when the difference is not
    /// in the root lattice.
    pub fn root_coordinates(&self, lower: &Weight) -> Option<Vec<i64>> {
        let n = self.rank();
        let big_n = n as i64 + 1;
        let d: Vec<i64> = self.0.iter().zip(&lower.0).map(|(&a, &b)| a as i64 - b as i64).collect();
        (1..=n as i64)
            .map(|i| {
                let s: i64 = (1..=n as i64).map(|k| (big_n * i.min(k) - i * k) * d[k as usize - 1]).sum();
                (s % big_n == 0).then_some(s / big_n)
            })
            .collect()
    }

    /// `self ≥ other` in the dominance order.
    pub fn dominates(&self, other: &Weight) -> bool {
        self.root_coordinates(other).is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// All weights μ ≥ 0 with `self - μ` a non-negative integer combination of
    /// simple roots, `self` included. Sorted by increasing height of `self - μ`.
    pub fn dominated_weights(&self) -> Vec<Weight> {
        let n = self.rank();
        let big_n = n as i64 + 1;
        // c_i ≤ (A^{-1} λ)_i because A^{-1} μ ≥ 0 for μ ≥ 0
        let bounds: Vec<i64> = (1..=n as i64)
            .map(|i| {
                (1..=n as i64).map(|k| (big_n * i.min(k) - i * k) * self.0[k as usize - 1] as i64).sum::<i64>() / big_n
            })
            .collect();
        let mut out = Vec::new();
        let mut c = vec![0i64; n];
        loop {
            let mu: Vec<i64> = (0..n)
                .map(|i| {
                    let mut v = self.0[i] as i64 - 2 * c[i];
                    if i > 0 {
                        v += c[i - 1];
                    }
                    if i + 1 < n {
                        v += c[i + 1];
                    }
                    v
                })
                .collect();
            if mu.iter().all(|&v| v >= 0) {
                let h: i64 = c.iter().sum();
                out.push((h, Weight(mu.into_iter().map(|v| v as u32).collect())));
            }
            let mut i = 0;
            loop {
                if i == n {
                    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
                    return out.into_iter().map(|(_, w)| w).collect();
                }
                if c[i] < bounds[i] {
                    c[i] += 1;
                    break;
                }
                c[i] = 0;
                i += 1;
            }
        }
    }

    /// Every weight of the given rank with `Σ m_i ≤ max_total`.
    pub fn all_up_to_total(rank: usize, max_total: u32) -> Vec<Weight> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; rank];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Weight>) {
            if i == cur.len() {
                out.push(Weight(cur.clone()));
                return;
            }
            for v in 0..=left {
                cur[i] = v;
                rec(i + 1, left - v, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, max_total, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Every weight with `Σ i·m_i ≤ max_degree`.
    pub fn all_up_to_weighted(rank: usize, max_degree: u32) -> Vec<Weight> {
        let mut out: Vec<Weight> =
            Self::all_up_to_total(rank, max_degree).into_iter().filter(|w| w.weighted_degree() <= max_degree).collect();
        out.sort();
        out
    }

    /// Componentwise bounded weights `0 ≤ m_i ≤ max`.
    pub fn box_up_to(rank: usize, max: u32) -> Vec<Weight> {
        let mut out = vec![Weight(vec![])];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..=max).map(move |v| {
                        let mut m = w.0.clone();
                        m.push(v);
                        Weight(m)
                    })
                })
                .collect();
        }
        out
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weighted_degree().cmp(&other.weighted_degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl From<&[u32]> for Weight {
    fn from(m: &[u32]) -> Self {
        Weight(m.to_vec())
    }
}
