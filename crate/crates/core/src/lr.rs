//! Littlewood–Richardson coefficients, σ(α) hook diagrams and the
//! orthogonal tensor-product and branching expansions built from them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{AlgebraId, Weight};
use crate::partitions::{partitions_of, subpartitions, Partition};

/// Counts LR tableaux of shape `λ/μ` and content `ν`.
pub fn lr_coefficient(mu: &Partition, nu: &Partition, lambda: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    if nu.is_empty() {
        return 1;
    }
    // cells in reading order: rows top to bottom, each row right to left
    let rows = lambda.len();
    let mut cells = Vec::with_capacity(nu.size());
    for r in 0..rows {
        for c in (mu.get(r)..lambda.get(r)).rev() {
            cells.push((r, c));
        }
    }
    let content: Vec<usize> = nu.shape().to_vec();
    let mut filling = vec![vec![0usize; lambda.first()]; rows];
    let mut count = vec![0usize; content.len() + 1];
    let mut total = 0u64;
    fill(
        &cells, 0, mu, lambda, &content, &mut filling, &mut count, &mut total,
    );
    total
}

#[allow(clippy::too_many_arguments)]
fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    mu: &Partition,
    lambda: &Partition,
    content: &[usize],
    filling: &mut [Vec<usize>],
    count: &mut [usize],
    total: &mut u64,
) {
    if idx == cells.len() {
        *total += 1;
        return;
    }
    let (r, c) = cells[idx];
    // weakly increasing along rows: bounded by the already placed right neighbour
    let hi = if c + 1 < lambda.get(r) {
        filling[r][c + 1]
    } else {
        content.len()
    };
    // strictly increasing down columns
    let lo = if r > 0 && c >= mu.get(r - 1) {
        filling[r - 1][c] + 1
    } else {
        1
    };
    for v in lo..=hi {
        if count[v] >= content[v - 1] {
            continue;
        }
        if v > 1 && count[v] + 1 > count[v - 1] {
            continue;
        }
        count[v] += 1;
        filling[r][c] = v;
        fill(cells, idx + 1, mu, lambda, content, filling, count, total);
        count[v] -= 1;
    }
}

/// All `λ` with `LR^λ_{μ,ν} > 0`, with their coefficients.
pub fn lr_product(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let n = mu.size() + nu.size();
    let rows = mu.len() + nu.len();
    let width = mu.first() + nu.first();
    let mut out = BTreeMap::new();
    for lam in partitions_of(n, rows, width) {
        if !lam.contains(mu) || !lam.contains(nu) {
            continue;
        }
        let c = lr_coefficient(mu, nu, &lam);
        if c > 0 {
            out.insert(lam, c);
        }
    }
    out
}

/// All `ν` with `LR^λ_{μ,ν} > 0` (the skew Schur expansion of `λ/μ`).
pub fn lr_skew(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if !lambda.contains(mu) {
        return out;
    }
    let size = lambda.size() - mu.size();
    for nu in subpartitions(lambda) {
        if nu.size() != size {
            continue;
        }
        let c = lr_coefficient(mu, &nu, lambda);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusHook {
    alpha: Vec<usize>,
}

impl FrobeniusHook {
    pub fn new(alpha: Vec<usize>) -> Result<Self> {
        if alpha.contains(&0) || alpha.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Precondition(format!(
                "{alpha:?} is not strictly decreasing and positive"
            )));
        }
        Ok(FrobeniusHook { alpha })
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn weight(&self) -> usize {
        self.alpha.iter().sum()
    }

    /// All hooks with `σ(α)` inside `outer`.
    pub fn fitting_in(outer: &Partition) -> Vec<FrobeniusHook> {
        let mut out = Vec::new();
        fn rec(max: usize, cur: &mut Vec<usize>, outer: &Partition, out: &mut Vec<FrobeniusHook>) {
            let h = FrobeniusHook { alpha: cur.clone() };
            match sigma_alpha(&h) {
                Ok(s) if outer.contains(&s) => out.push(h),
                _ => return,
            }
            for a in (1..max).rev() {
                cur.push(a);
                rec(a, cur, outer, out);
                cur.pop();
            }
        }
        rec(outer.first() + 1, &mut Vec::new(), outer, &mut out);
        out
    }
}

/// The diagram whose `i`-th row has `α_i + i` boxes and `i`-th column `α_i + i − 1` boxes.
pub fn sigma_alpha(h: &FrobeniusHook) -> Result<Partition> {
    let a = &h.alpha;
    let s = a.len();
    let col = |i: usize| a[i] + i; // (1-based) column i+1 has a_i + (i+1) - 1 boxes
    let mut parts: Vec<usize> = (0..s).map(|i| a[i] + i + 1).collect();
    let depth = if s == 0 { 0 } else { col(0) };
    for r in s..depth {
        parts.push((0..s).filter(|&j| col(j) > r).count());
    }
    let p = Partition::new(parts)
        .map_err(|_| Error::Precondition(format!("no diagram for α = {a:?}")))?;
    let t = p.transpose();
    let ok = (0..s).all(|i| p.get(i) == a[i] + i + 1 && t.get(i) == a[i] + i);
    if !ok {
        return Err(Error::Precondition(format!("no diagram for α = {a:?}")));
    }
    Ok(p)
}

/// Labels of the orthogonal tensor product `[μ] ⊗ [ν]` inside the stable range.
pub fn tensor_so(mu: &Partition, nu: &Partition, n: usize) -> Result<BTreeMap<Partition, u64>> {
    if mu.size() + nu.size() > n || mu.len() > n || nu.len() > n {
        return Err(Error::OutsideStableRange(format!(
            "[{mu}] ⊗ [{nu}] with rank {n}: need |μ|+|ν| ≤ {n}"
        )));
    }
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    for tau in subpartitions(mu) {
        if !nu.contains(&tau) {
            continue;
        }
        let mus = lr_skew(mu, &tau);
        let nus = lr_skew(nu, &tau);
        for (m1, c1) in &mus {
            for (n1, c2) in &nus {
                for (lam, c3) in lr_product(m1, n1) {
                    *out.entry(lam).or_default() += c1 * c2 * c3;
                }
            }
        }
    }
    Ok(out)
}

/// All partitions of `size` with even rows, i.e. `2κ` for `|κ| = size/2`.
fn even_row_partitions(size: usize, max_rows: usize, max_part: usize) -> Vec<Partition> {
    if size % 2 == 1 {
        return Vec::new();
    }
    partitions_of(size / 2, max_rows, max_part / 2)
        .into_iter()
        .map(|k| Partition::new(k.parts().iter().map(|x| 2 * x).collect()).expect("doubled"))
        .collect()
}

/// The `2κ`-expansion: all `λ'` with `Σ_{2κ} LR^λ_{2κ,λ'} > 0`, with that sum.
pub fn trace_expansion(lambda: &Partition) -> BTreeMap<Partition, u64> {
    let mut out: BTreeMap<Partition, u64> = BTreeMap::new();
    for s in (0..=lambda.size()).step_by(2) {
        for k2 in even_row_partitions(s, lambda.len(), lambda.first()) {
            if !lambda.contains(&k2) {
                continue;
            }
            for (lp, c) in lr_skew(lambda, &k2) {
                *out.entry(lp).or_default() += c;
            }
        }
    }
    out
}

/// True when an orthogonal-group label is standard for `O(2k)`: its first two
/// columns together have at most `2k` boxes.
pub fn is_o_standard(mu: &Partition, k: usize) -> bool {
    let t = mu.transpose();
    t.get(0) + t.get(1) <= 2 * k
}

/// Branching of the `so(2k+2ℓ)` label `λ` to `so(2k) ⊕ so(2ℓ)` labels
/// (orthogonal-group labels, multiplicities `Σ LR^λ_{2κ,λ'} LR^{λ'}_{μ,ν}`).
pub fn branch_so_to_pair(
    lambda: &Partition,
    k: usize,
    l: usize,
) -> Result<BTreeMap<(Partition, Partition), u64>> {
    if lambda.len() > k + l {
        return Err(Error::OutsideStableRange(format!(
            "{lambda} has more than {} rows",
            k + l
        )));
    }
    let mut out: BTreeMap<(Partition, Partition), u64> = BTreeMap::new();
    for (lp, c1) in trace_expansion(lambda) {
        for mu in subpartitions(&lp) {
            for (nu, c2) in lr_skew(&lp, &mu) {
                if !is_o_standard(&mu, k) || !is_o_standard(&nu, l) {
                    return Err(Error::OutsideStableRange(format!(
                        "{lambda} produces the non-standard pair ({mu}, {nu}) for k={k}, ℓ={l}"
                    )));
                }
                *out.entry((mu.trimmed(), nu)).or_default() += c1 * c2;
            }
        }
    }
    Ok(out)
}

/// The `so(2k)` highest weights making up the `O(2k)` label `μ` (one weight,
/// or a ± pair when `μ` has exactly `k` rows). Labels with more than `k`
/// rows are replaced by their associate.
pub fn o_label_to_so(mu: &Partition, k: usize) -> Result<Vec<Weight>> {
    let a = AlgebraId::so_even(k);
    if !is_o_standard(mu, k) {
        return Err(Error::Precondition(format!("{mu} is not an O({}) label", 2 * k)));
    }
    let label = if mu.len() > k {
        let mut t = mu.transpose().parts().to_vec();
        t[0] = 2 * k - t[0];
        Partition::new(t)
            .map_err(|e| Error::Inconsistent(e.to_string()))?
            .transpose()
    } else {
        mu.clone()
    };
    if label.len() == k && k > 0 {
        Ok(vec![
            Weight::signed(&label, a, false)?,
            Weight::signed(&label, a, true)?,
        ])
    } else {
        Ok(vec![Weight::from_partition(&label, a)?])
    }
}
