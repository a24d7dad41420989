//! Spinor weights of Grassmannians projected to `so(m) ⊕ so(n)`, peeled
//! into irreducibles, and compared with the conjectured decompositions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dims::{dim, dim_so_even, dim_so_odd, dim_sp};
use crate::error::{Error, Result};
use crate::lie::{character_multiset, fmt_coords, AlgebraId, Family, Weight, WeightMultiset};
use crate::partitions::{partitions_in_box, Partition};
use crate::report::IdentityReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    /// `so(2k) ⊕ so(2ℓ) ⊂ so(4kℓ)`
    Even,
    /// `so(2k+1) ⊕ so(2ℓ+1) ⊂ so((2k+1)(2ℓ+1))`
    Odd,
    /// `so(2k) ⊕ so(2ℓ+1) ⊂ so(2k(2ℓ+1))`
    Mixed,
    Generic,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::Even => "even",
            Case::Odd => "odd",
            Case::Mixed => "mixed",
            Case::Generic => "generic",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Case {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "even" => Ok(Case::Even),
            "odd" => Ok(Case::Odd),
            "mixed" => Ok(Case::Mixed),
            _ => Err(crate::error::parse_err("case", s)),
        }
    }
}

/// Expresses the Cartan generators of the subalgebra through the Cartan
/// coordinates of the big orthogonal algebra: images of spinor weights are
/// `½·A·(±1,…,±1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionMatrix {
    rows: Vec<Vec<i64>>,
    case: Case,
    k: usize,
    l: usize,
}

impl ProjectionMatrix {
    pub fn generic(rows: Vec<Vec<i64>>) -> Result<Self> {
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::Precondition("matrix rows differ in length".into()));
        }
        if width > 40 {
            return Err(Error::Precondition(format!(
                "{width} columns means 2^{width} sign vectors; refusing"
            )));
        }
        Ok(ProjectionMatrix {
            rows,
            case: Case::Generic,
            k: 0,
            l: 0,
        })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Number of columns, i.e. the rank of the big orthogonal algebra.
    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// The two factor algebras (empty for generic matrices).
    pub fn factors(&self) -> Vec<AlgebraId> {
        match self.case {
            Case::Even => vec![AlgebraId::so_even(self.k), AlgebraId::so_even(self.l)],
            Case::Odd => vec![AlgebraId::so_odd(self.k), AlgebraId::so_odd(self.l)],
            Case::Mixed => vec![AlgebraId::so_even(self.k), AlgebraId::so_odd(self.l)],
            Case::Generic => vec![],
        }
    }

    fn column(&self, c: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[c]).collect()
    }
}

pub fn projection_matrix(k: usize, l: usize, case: Case) -> Result<ProjectionMatrix> {
    if k == 0 || l == 0 {
        return Err(Error::Precondition("k and ℓ must be positive".into()));
    }
    if matches!(case, Case::Even | Case::Odd) && k < l {
        return Err(Error::Precondition(format!("need k ≥ ℓ, got k={k}, ℓ={l}")));
    }
    // e-blocks have `eb` columns each, f-blocks `l`; the odd case adds one
    // extra f-block at the end
    let (eb, f_blocks) = match case {
        Case::Even => (l, k),
        Case::Odd => (l + 1, k + 1),
        Case::Mixed => (l + 1, k),
        Case::Generic => {
            return Err(Error::Precondition(
                "generic matrices are built with ProjectionMatrix::generic".into(),
            ))
        }
    };
    let n = k * eb + f_blocks * l;
    let e_col = |i: usize, j: usize| i * eb + j;
    let f_col = |i: usize, j: usize| k * eb + i * l + j;
    let mut rows = vec![vec![0i64; n]; k + l];
    for i in 0..k {
        for j in 0..eb {
            rows[i][e_col(i, j)] = 1;
        }
        for j in 0..l {
            rows[i][f_col(i, j)] = -1;
        }
    }
    for j in 0..l {
        for i in 0..k {
            rows[k + j][e_col(i, j)] = -1;
        }
        for i in 0..f_blocks {
            rows[k + j][f_col(i, j)] = -1;
        }
    }
    Ok(ProjectionMatrix { rows, case, k, l })
}

/// Image multiset in doubled coordinates, without an algebra attached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageMultiset {
    dim: usize,
    entries: BTreeMap<Vec<i64>, BigUint>,
}

impl ImageMultiset {
    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &BigUint)> {
        self.entries.iter()
    }

    pub fn get(&self, w2: &[i64]) -> BigUint {
        self.entries.get(w2).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    /// Attaches factor algebras after dividing every doubled coordinate by `divisor`.
    pub fn into_weights(self, factors: Vec<AlgebraId>, divisor: i64) -> Result<WeightMultiset> {
        let width: usize = factors.iter().map(|a| a.rank()).sum();
        if width != self.dim {
            return Err(Error::Precondition(format!(
                "factors have rank {width}, images have {} coordinates",
                self.dim
            )));
        }
        let mut out = WeightMultiset::new(factors.clone());
        for (w, m) in self.entries {
            out.add(w, m);
        }
        if divisor == 1 {
            Ok(out)
        } else {
            out.divide_coords(divisor)
        }
    }
}

const CHUNK_BITS: u32 = 12;

/// Counts `A·σ` over all sign vectors `σ ∈ {±1}^N`, split by the parity of
/// the number of minus signs (even first).
fn enumerate_images(m: &ProjectionMatrix) -> (HashMap<Vec<i64>, u64>, HashMap<Vec<i64>, u64>) {
    let n = m.width();
    let r = m.rows.len();
    let cols: Vec<Vec<i64>> = (0..n).map(|c| m.column(c)).collect();
    let all_plus: Vec<i64> = (0..r).map(|i| m.rows[i].iter().sum()).collect();
    let chunk_bits = CHUNK_BITS.min(n as u32);
    let chunks = 1u64 << (n as u32 - chunk_bits);
    let per_chunk = 1u64 << chunk_bits;
    type Maps = (HashMap<Vec<i64>, u64>, HashMap<Vec<i64>, u64>);
    let merge = |mut a: Maps, b: Maps| -> Maps {
        for (w, c) in b.0 {
            *a.0.entry(w).or_default() += c;
        }
        for (w, c) in b.1 {
            *a.1.entry(w).or_default() += c;
        }
        a
    };
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut even = HashMap::new();
            let mut odd = HashMap::new();
            for low in 0..per_chunk {
                let mask = chunk << chunk_bits | low;
                let mut img = all_plus.clone();
                let mut bits = mask;
                while bits != 0 {
                    let c = bits.trailing_zeros() as usize;
                    for (x, y) in img.iter_mut().zip(&cols[c]) {
                        *x -= 2 * y;
                    }
                    bits &= bits - 1;
                }
                let target = if mask.count_ones() % 2 == 0 { &mut even } else { &mut odd };
                *target.entry(img).or_insert(0) += 1;
            }
            (even, odd)
        })
        .reduce(|| (HashMap::new(), HashMap::new()), merge)
}

/// Images of all spinor weights, split into the two half-spin modules
/// (an even number of minus signs goes to `S⁺`).
pub fn project_spin_weights(m: &ProjectionMatrix) -> Result<(WeightMultiset, WeightMultiset)> {
    if m.case == Case::Generic {
        return Err(Error::Precondition(
            "generic matrices have no factor algebras; use project_generic".into(),
        ));
    }
    let (even, odd) = enumerate_images(m);
    Ok((
        WeightMultiset::from_counts(m.factors(), even),
        WeightMultiset::from_counts(m.factors(), odd),
    ))
}

/// Images of the sign vectors under an arbitrary integer matrix. With
/// `half_spin` only the vectors with an even number of minus signs are used.
pub fn project_generic(rows: &[Vec<i64>], half_spin: bool) -> Result<ImageMultiset> {
    let m = ProjectionMatrix::generic(rows.to_vec())?;
    let (even, odd) = enumerate_images(&m);
    let mut entries: BTreeMap<Vec<i64>, BigUint> = BTreeMap::new();
    let sources = if half_spin { vec![even] } else { vec![even, odd] };
    for src in sources {
        for (w, c) in src {
            *entries.entry(w).or_default() += BigUint::from(c);
        }
    }
    Ok(ImageMultiset {
        dim: rows.len(),
        entries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Chirality {
    Plus,
    Minus,
    None,
}

impl fmt::Display for Chirality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chirality::Plus => "+",
            Chirality::Minus => "-",
            Chirality::None => "none",
        })
    }
}

/// One irreducible summand `(μ | ν)` of a decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    #[serde(rename = "factor1")]
    pub mu: Weight,
    /// Absent for single-factor decompositions.
    #[serde(rename = "factor2")]
    pub nu: Option<Weight>,
    pub multiplicity: u64,
    /// Which half-spin module the summand lives in.
    pub chirality: Chirality,
    #[serde(with = "crate::bigjson::nat")]
    pub dim1: BigUint,
    #[serde(with = "crate::bigjson::nat")]
    pub dim2: BigUint,
}

impl Summand {
    fn key(&self) -> (Chirality, Vec<i64>, Vec<i64>) {
        (
            self.chirality,
            self.mu.doubled().to_vec(),
            self.nu.as_ref().map(|w| w.doubled().to_vec()).unwrap_or_default(),
        )
    }

    pub fn dim(&self) -> BigUint {
        &self.dim1 * &self.dim2 * self.multiplicity
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.nu {
            Some(nu) => write!(f, "({} | {})", self.mu, nu)?,
            None => write!(f, "{}", self.mu)?,
        }
        if self.multiplicity != 1 {
            write!(f, " x{}", self.multiplicity)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    #[serde(with = "crate::bigjson::nat")]
    pub total_dim: BigUint,
}

impl Decomposition {
    fn from_summands(mut summands: Vec<Summand>) -> Self {
        // S⁺ before S⁻, then weights in decreasing order
        summands.sort_by(|a, b| a.chirality.cmp(&b.chirality).then(b.key().cmp(&a.key())));
        let total_dim = summands.iter().map(Summand::dim).sum();
        Decomposition {
            summands,
            total_dim,
        }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Total dimension of the summands with the given chirality.
    pub fn dim_of(&self, c: Chirality) -> BigUint {
        self.summands
            .iter()
            .filter(|s| s.chirality == c)
            .map(Summand::dim)
            .sum()
    }

    fn with_chirality(self, c: Chirality) -> Vec<Summand> {
        self.summands
            .into_iter()
            .map(|mut s| {
                s.chirality = c;
                s
            })
            .collect()
    }

    /// Whether `Σ multiplicity·dim1·dim2` equals the recorded total.
    pub fn is_consistent(&self) -> bool {
        self.summands.iter().map(Summand::dim).sum::<BigUint>() == self.total_dim
    }
}

/// Splits a Weyl-invariant multiset over a product algebra into irreducible
/// characters by repeatedly removing the character of the greatest weight.
pub fn peel(ws: &WeightMultiset) -> Result<Decomposition> {
    let factors = ws.factors().to_vec();
    let mut rest = ws.clone();
    let mut cache: HashMap<Vec<i64>, WeightMultiset> = HashMap::new();
    let mut found: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    while let Some(top) = rest.max_weight().cloned() {
        let m = rest.get(&top);
        let mut offset = 0;
        let mut chars: Vec<WeightMultiset> = Vec::new();
        for a in &factors {
            let block = top[offset..offset + a.rank()].to_vec();
            offset += a.rank();
            let mut key = block.clone();
            key.push(a.family as i64);
            key.push(a.n as i64);
            if !cache.contains_key(&key) {
                let w = Weight::from_doubled(block, *a)?;
                cache.insert(key.clone(), character_multiset(&w)?);
            }
            chars.push(cache[&key].clone());
        }
        let mut ch = chars
            .into_iter()
            .reduce(|x, y| x.outer(&y))
            .unwrap_or_else(|| WeightMultiset::new(vec![]));
        if !m.is_one() {
            let mut scaled = WeightMultiset::new(ch.factors().to_vec());
            for (w, c) in ch.iter() {
                scaled.add(w.clone(), c * &m);
            }
            ch = scaled;
        }
        rest.subtract(&ch).map_err(|e| match e {
            Error::Peel(msg) => Error::Peel(format!("removing {}: {msg}", fmt_coords(&top))),
            other => other,
        })?;
        let count: u64 = (&m)
            .try_into()
            .map_err(|_| Error::Peel("multiplicity exceeds u64".into()))?;
        *found.entry(top).or_default() += count;
    }
    let mut summands = Vec::new();
    for (w, mult) in found {
        let (mu, nu) = split_pair(&w, &factors)?;
        let dim1 = dim(&mu)?;
        let dim2 = match &nu {
            Some(nu) => dim(nu)?,
            None => BigUint::one(),
        };
        summands.push(Summand {
            mu,
            nu,
            multiplicity: mult,
            chirality: Chirality::None,
            dim1,
            dim2,
        });
    }
    Ok(Decomposition::from_summands(summands))
}

fn split_pair(w: &[i64], factors: &[AlgebraId]) -> Result<(Weight, Option<Weight>)> {
    match factors {
        [a] => Ok((Weight::from_doubled(w.to_vec(), *a)?, None)),
        [a, b] => Ok((
            Weight::from_doubled(w[..a.rank()].to_vec(), *a)?,
            Some(Weight::from_doubled(w[a.rank()..].to_vec(), *b)?),
        )),
        _ => Err(Error::Precondition(format!(
            "peel supports one or two factors, got {}",
            factors.len()
        ))),
    }
}

/// Projects and peels the spinor module for `(k, ℓ, case)`. Even and mixed
/// cases peel `S⁺` and `S⁻` separately; the odd case peels the whole module.
pub fn decompose(k: usize, l: usize, case: Case) -> Result<Decomposition> {
    let a = projection_matrix(k, l, case)?;
    let (plus, minus) = project_spin_weights(&a)?;
    let summands = if case == Case::Odd {
        let mut all = plus;
        for (w, m) in minus.iter() {
            all.add(w.clone(), m.clone());
        }
        peel(&all)?.with_chirality(Chirality::None)
    } else {
        let (p, m) = rayon::join(|| peel(&plus), || peel(&minus));
        let mut s = p?.with_chirality(Chirality::Plus);
        s.extend(m?.with_chirality(Chirality::Minus));
        s
    };
    Ok(Decomposition::from_summands(summands))
}

/// The decomposition predicted by the pairing `λ ↔ λ^c` inside the `ℓ × k` box.
pub fn conjectured_decomposition(k: usize, l: usize, case: Case) -> Result<Decomposition> {
    if k == 0 || l == 0 {
        return Err(Error::Precondition("k and ℓ must be positive".into()));
    }
    if matches!(case, Case::Even | Case::Odd) && k < l {
        return Err(Error::Precondition(format!("need k ≥ ℓ, got k={k}, ℓ={l}")));
    }
    let a1 = AlgebraId { family: Family::SoEven, n: k };
    let mut summands = Vec::new();
    let mut push = |mu: Weight, nu: Weight, chirality: Chirality| -> Result<()> {
        let dim1 = dim(&mu)?;
        let dim2 = dim(&nu)?;
        summands.push(Summand {
            mu,
            nu: Some(nu),
            multiplicity: 1,
            chirality,
            dim1,
            dim2,
        });
        Ok(())
    };
    for lam in partitions_in_box(k, l) {
        let mu = lam.conjugate_lm(k, l)?;
        match case {
            Case::Even => {
                let b = AlgebraId::so_even(l);
                let chir = even_case_chirality(k, l, lam.size());
                // exactly one of λ_k, μ_ℓ is nonzero; that factor carries the ± pair
                for neg in [false, true] {
                    let (w1, w2) = if lam.get(k - 1) != 0 {
                        (Weight::signed(&lam, a1, neg)?, Weight::from_partition(&mu, b)?)
                    } else {
                        (Weight::from_partition(&lam, a1)?, Weight::signed(&mu, b, neg)?)
                    };
                    push(w1, w2, chir)?;
                }
            }
            Case::Odd => {
                let (x, y) = (AlgebraId::so_odd(k), AlgebraId::so_odd(l));
                push(
                    Weight::half_shifted(&lam, x, false)?,
                    Weight::half_shifted(&mu, y, false)?,
                    Chirality::None,
                )?;
            }
            Case::Mixed => {
                let y = AlgebraId::so_odd(l);
                for neg in [false, true] {
                    push(
                        Weight::half_shifted(&lam, a1, neg)?,
                        Weight::from_partition(&mu, y)?,
                        mixed_case_chirality(lam.size(), neg),
                    )?;
                }
            }
            Case::Generic => return Err(Error::Precondition("no conjecture for generic".into())),
        }
    }
    Ok(Decomposition::from_summands(summands))
}

/// Half-spin module of an even-case summand whose `so(2k)` part has `|λ| = s`:
/// for `kℓ` even both box counts have equal parity and `S⁺` takes the even
/// ones; for `kℓ` odd `S⁺` takes `|λ|` even and `|μ|` odd.
pub fn even_case_chirality(k: usize, l: usize, lambda_size: usize) -> Chirality {
    let mu_size = k * l - lambda_size;
    let plus = if (k * l) % 2 == 0 {
        lambda_size % 2 == 0 && mu_size % 2 == 0
    } else {
        lambda_size % 2 == 0 && mu_size % 2 == 1
    };
    if plus {
        Chirality::Plus
    } else {
        Chirality::Minus
    }
}

/// Half-spin module of the mixed-case summand `(λ+½e^± | λ^c)`: the sign of
/// the last `so(2k)` coordinate in `S⁺` alternates with the parity of `|λ|`.
/// (Putting every `+` sign into `S⁺` would give the `so(2)` centre a nonzero
/// trace on `S⁺` already for `k = ℓ = 1`.)
pub fn mixed_case_chirality(lambda_size: usize, negative: bool) -> Chirality {
    if (lambda_size % 2 == 1) == negative {
        Chirality::Plus
    } else {
        Chirality::Minus
    }
}

/// The sign vector `w⃗` built from blocks `f⃗_i = ½(−1^i, 1^{ℓ−i})` whose image
/// under the even-case matrix is `(λ^{c(ℓ,k)} | λ)`; returned doubled (entries ±1).
pub fn conjecture_preimage(lambda: &Partition, k: usize, l: usize) -> Result<Vec<i64>> {
    if lambda.len() > l || lambda.first() > k {
        return Err(Error::Precondition(format!(
            "{lambda} does not fit in {l} rows of length {k}"
        )));
    }
    let p = lambda.padded(l)?;
    let block = |i: usize| -> Vec<i64> { (0..l).map(|j| if j < i { -1 } else { 1 }).collect() };
    let mut reps = vec![k - p[0]];
    for i in 1..l {
        reps.push(p[i - 1] - p[i]);
    }
    reps.push(k + p[l - 1]);
    let mut w = Vec::with_capacity(2 * k * l);
    for (i, r) in reps.into_iter().enumerate() {
        for _ in 0..r {
            w.extend(block(i));
        }
    }
    Ok(w)
}

/// `A·w` for a doubled sign vector.
pub fn apply(a: &ProjectionMatrix, w: &[i64]) -> Vec<i64> {
    a.rows.iter().map(|r| r.iter().zip(w).map(|(x, y)| x * y).sum()).collect()
}

/// Whether `G_{m,n}` carries a spin structure.
pub fn has_spin_structure(m: usize, n: usize) -> bool {
    (m + n) % 2 == 0 || m == 1 || n == 1
}

/// Checks `Σ_{λ ⊆ (ℓ^k)} dim·dim` against the spinor dimension: `2^{2kℓ−1}`
/// (even case, one chirality each) or `2^{2kℓ}` (odd case, via `sp`).
pub fn verify_dimension_identity(k: usize, l: usize, case: Case) -> Result<IdentityReport> {
    if k == 0 || l == 0 || k < l {
        return Err(Error::Precondition(format!("need k ≥ ℓ ≥ 1, got k={k}, ℓ={l}")));
    }
    let mut lhs = BigUint::zero();
    let (name, rhs) = match case {
        Case::Even => {
            for lam in partitions_in_box(k, l) {
                let mu = lam.conjugate_lm(k, l)?;
                let d1 = dim_so_even(&Weight::from_partition(&lam, AlgebraId::so_even(k))?)?;
                let d2 = dim_so_even(&Weight::from_partition(&mu, AlgebraId::so_even(l))?)?;
                lhs += d1 * d2;
            }
            ("master", BigUint::one() << (2 * k * l - 1))
        }
        Case::Odd => {
            let mut spin_total = BigUint::zero();
            for lam in partitions_in_box(k, l) {
                let mu = lam.conjugate_lm(k, l)?;
                let prod = dim_sp(&lam, k)? * dim_sp(&mu, l)?;
                lhs += &prod;
                let d1 = dim_so_odd(&Weight::half_shifted(&lam, AlgebraId::so_odd(k), false)?)?;
                let d2 = dim_so_odd(&Weight::half_shifted(&mu, AlgebraId::so_odd(l), false)?)?;
                spin_total += d1 * d2;
            }
            if spin_total != &lhs << (k + l) {
                return Err(Error::Inconsistent(format!(
                    "so(odd) total {spin_total} is not 2^(k+ℓ) times the sp total {lhs}"
                )));
            }
            ("master2", BigUint::one() << (2 * k * l))
        }
        _ => {
            return Err(Error::Precondition(format!(
                "no dimension identity for the {case} case"
            )))
        }
    };
    Ok(IdentityReport::new(name, format!("k={k},l={l}"), lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn printed_matrices() {
        let a = projection_matrix(2, 2, Case::Even).unwrap();
        assert_eq!(
            a.rows(),
            &[
                vec![1, 1, 0, 0, -1, -1, 0, 0],
                vec![0, 0, 1, 1, 0, 0, -1, -1],
                vec![-1, 0, -1, 0, -1, 0, -1, 0],
                vec![0, -1, 0, -1, 0, -1, 0, -1],
            ]
        );
        let a = projection_matrix(1, 1, Case::Odd).unwrap();
        assert_eq!(a.rows(), &[vec![1, 1, -1, 0], vec![-1, 0, -1, -1]]);
        let a = projection_matrix(2, 1, Case::Odd).unwrap();
        assert_eq!(
            a.rows(),
            &[
                vec![1, 1, 0, 0, -1, 0, 0],
                vec![0, 0, 1, 1, 0, -1, 0],
                vec![-1, 0, -1, 0, -1, -1, -1],
            ]
        );
        let a = projection_matrix(2, 2, Case::Odd).unwrap();
        assert_eq!(a.rows()[2], vec![-1, 0, 0, -1, 0, 0, -1, 0, -1, 0, -1, 0]);
        assert_eq!(projection_matrix(2, 1, Case::Mixed).unwrap().width(), 6);
        assert!(projection_matrix(1, 2, Case::Even).is_err());
    }

    #[test]
    fn named_images() {
        let a = projection_matrix(2, 2, Case::Even).unwrap();
        assert_eq!(apply(&a, &[-1; 8]), vec![0, 0, 4, 4]);
        assert_eq!(apply(&a, &[1, 1, 1, 1, -1, -1, -1, -1]), vec![4, 4, 0, 0]);
        let (p, m) = project_spin_weights(&a).unwrap();
        assert_eq!(p.total(), BigUint::from(128u32));
        assert_eq!(m.total(), BigUint::from(128u32));
        assert!(p.iter().all(|(w, _)| w.iter().all(|x| x % 2 == 0)));
    }

    #[test]
    fn odd_images_are_half_integral() {
        let a = projection_matrix(2, 1, Case::Odd).unwrap();
        let (p, m) = project_spin_weights(&a).unwrap();
        assert!(p.iter().chain(m.iter()).all(|(w, _)| w.iter().all(|x| x % 2 != 0)));
    }

    #[test]
    fn peel_vector_representation() {
        let so4 = AlgebraId::so_even(2);
        let mut ws = WeightMultiset::new(vec![so4]);
        for w in [[2, 0], [-2, 0], [0, 2], [0, -2]] {
            ws.add(w.to_vec(), BigUint::one());
        }
        let d = peel(&ws).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.summands[0].mu.doubled(), &[2, 0]);
        assert_eq!(d.summands[0].multiplicity, 1);
    }

    #[test]
    fn peel_rejects_non_characters() {
        let so4 = AlgebraId::so_even(2);
        let mut ws = WeightMultiset::new(vec![so4]);
        ws.add(vec![2, 0], BigUint::one());
        assert!(matches!(peel(&ws), Err(Error::Peel(_))));
    }

    #[test]
    fn generic_projection_small() {
        let z = project_generic(&[vec![0]], false).unwrap();
        assert_eq!(z.get(&[0]), BigUint::from(2u32));
        let id = project_generic(&[vec![1]], false).unwrap();
        assert_eq!(id.len(), 2);
        assert_eq!(id.get(&[1]), BigUint::one());
        assert_eq!(id.get(&[-1]), BigUint::one());
    }

    #[test]
    fn preimage_small_cases() {
        let a = projection_matrix(2, 2, Case::Even).unwrap();
        let w = conjecture_preimage(&part![2, 2], 2, 2).unwrap();
        assert_eq!(apply(&a, &w), vec![0, 0, 4, 4]);
        let w = conjecture_preimage(&part![], 3, 2).unwrap();
        let a = projection_matrix(3, 2, Case::Even).unwrap();
        assert_eq!(&w[..6], &[1; 6]);
        assert_eq!(&w[6..], &[-1; 6]);
        assert_eq!(apply(&a, &w), vec![4, 4, 4, 0, 0]);
    }

    #[test]
    fn spin_structure_predicate() {
        assert!(has_spin_structure(2, 4));
        assert!(has_spin_structure(1, 6));
        assert!(!has_spin_structure(2, 3));
        assert!(has_spin_structure(3, 5));
    }

    #[test]
    fn chirality_rule_examples() {
        // (0^k | k^ℓ) is in S⁺; (ℓ^k | 0^ℓ) follows kℓ's parity
        assert_eq!(even_case_chirality(2, 2, 0), Chirality::Plus);
        assert_eq!(even_case_chirality(2, 2, 4), Chirality::Plus);
        assert_eq!(even_case_chirality(3, 3, 0), Chirality::Plus);
        assert_eq!(even_case_chirality(3, 3, 9), Chirality::Minus);
    }
}
