//! Dirac operator data on the even Grassmannians `SO(2k+2ℓ)/SO(2k)×SO(2ℓ)`:
//! Casimir values, the smallest eigenvalue, and the eigenvalue enumeration
//! through Littlewood–Richardson expansions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{AlgebraId, Weight};
use crate::lr::lr_product;
use crate::partitions::{partitions_in_box, partitions_of, Partition};
use crate::spinor::{decompose, Case};

/// Largest `2kℓ` for which the spin weights are projected explicitly.
pub const MAX_DECOMPOSITION_COLUMNS: usize = 24;

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Serde helper writing exact rationals as `"p/q"`.
pub mod ratio_str {
    use num_rational::BigRational;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", x.numer(), x.denom()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| D::Error::custom(format!("bad rational {s:?}")))
    }
}

pub mod ratio_opt {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => super::ratio_str::serialize(v, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigRational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| {
            s.parse()
                .map_err(|_| serde::de::Error::custom(format!("bad rational {s:?}")))
        })
        .transpose()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannEven {
    k: usize,
    l: usize,
}

impl GrassmannEven {
    pub fn new(k: usize, l: usize) -> Result<Self> {
        if l < 2 || k < l {
            return Err(Error::Precondition(format!("need k ≥ ℓ ≥ 2, got k={k}, ℓ={l}")));
        }
        Ok(GrassmannEven { k, l })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    /// Rank of `so(2k+2ℓ)`.
    pub fn rank(&self) -> usize {
        self.k + self.l
    }

    pub fn algebra(&self) -> AlgebraId {
        AlgebraId::so_even(self.rank())
    }

    pub fn subalgebras(&self) -> (AlgebraId, AlgebraId) {
        (AlgebraId::so_even(self.k), AlgebraId::so_even(self.l))
    }

    /// Euclidean products are divided by this to get the Killing-induced metric.
    pub fn metric_denominator(&self) -> i64 {
        4 * (self.k + self.l - 1) as i64
    }

    /// `kℓ/4`, added to the Casimir to get the square of the Dirac operator.
    pub fn curvature_shift(&self) -> BigRational {
        BigRational::new(BigInt::from(self.k * self.l), BigInt::from(4))
    }

    /// `α_𝔤 = (n−1, …, 1, 0)` with `n = k+ℓ`.
    fn rho_g(&self) -> Vec<i64> {
        (0..self.rank()).rev().map(|i| i as i64).collect()
    }

    /// `α_𝔨 = (k−1, …, 0 | ℓ−1, …, 0)`.
    fn rho_k(&self) -> Vec<i64> {
        let mut v: Vec<i64> = (0..self.k).rev().map(|i| i as i64).collect();
        v.extend((0..self.l).rev().map(|i| i as i64));
        v
    }

    fn to_b(&self, eucl: &BigRational) -> BigRational {
        eucl / rat(self.metric_denominator())
    }
}

/// A chain `μ → λ' → λ` from the expansion procedure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub mu: Partition,
    pub lambda_prime: Partition,
    pub two_kappa: Partition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub lambda: Partition,
    pub casimir_eucl: i64,
    #[serde(with = "ratio_str")]
    pub casimir_b: BigRational,
    #[serde(with = "ratio_str")]
    pub eigenvalue_sq: BigRational,
    pub witnesses: Vec<Witness>,
}

/// `c_λ = ⟨λ+2α_𝔤, λ⟩`, checked against `‖λ+α_𝔤‖² − ‖α_𝔤‖²`.
pub fn casimir(lambda: &Partition, space: &GrassmannEven) -> Result<SpectrumEntry> {
    let n = space.rank();
    let lam: Vec<i64> = lambda
        .padded(n)
        .map_err(|_| Error::NotDominant {
            weight: lambda.to_string(),
            algebra: space.algebra().to_string(),
        })?
        .into_iter()
        .map(|x| x as i64)
        .collect();
    let rho = space.rho_g();
    let bilinear: i64 = lam.iter().zip(&rho).map(|(l, r)| (l + 2 * r) * l).sum();
    let norms: i64 = lam
        .iter()
        .zip(&rho)
        .map(|(l, r)| (l + r) * (l + r) - r * r)
        .sum();
    if bilinear != norms {
        return Err(Error::Inconsistent(format!(
            "Casimir of {lambda}: {bilinear} vs {norms}"
        )));
    }
    let casimir_b = space.to_b(&rat(bilinear));
    let eigenvalue_sq = &casimir_b + space.curvature_shift();
    Ok(SpectrumEntry {
        lambda: lambda.trimmed(),
        casimir_eucl: bilinear,
        casimir_b,
        eigenvalue_sq,
        witnesses: Vec::new(),
    })
}

/// Positive roots `γ` of `so(2k+2ℓ)` with `⟨γ, α_𝔨⟩ < 0`.
pub fn psi_set(space: &GrassmannEven) -> Result<Vec<Weight>> {
    let (k, l, n) = (space.k, space.l, space.rank());
    let rk = space.rho_k();
    let mut scanned = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            for sign in [-1i64, 1] {
                let mut g = vec![0i64; n];
                g[i] = 1;
                g[j] = sign;
                if g.iter().zip(&rk).map(|(a, b)| a * b).sum::<i64>() < 0 {
                    scanned.insert(g);
                }
            }
        }
    }
    let mut listed = BTreeSet::new();
    for i in 1..=k {
        for j in 1..=l {
            if i + l > k + j {
                let mut g = vec![0i64; n];
                g[i - 1] = 1;
                g[k + j - 1] = -1;
                listed.insert(g);
            }
        }
    }
    if scanned != listed {
        return Err(Error::Inconsistent(format!(
            "Ψ from the inequality {scanned:?} differs from {listed:?}"
        )));
    }
    listed
        .into_iter()
        .rev()
        .map(|g| Weight::from_ints(&g, space.algebra()))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinEigenvalue {
    #[serde(with = "ratio_str")]
    pub value: BigRational,
    /// `2·min‖β‖² + kℓ/2` over the computed decomposition, when it was computed.
    #[serde(with = "ratio_opt")]
    pub via_decomposition: Option<BigRational>,
    #[serde(with = "ratio_str")]
    pub via_psi: BigRational,
    #[serde(with = "ratio_str")]
    pub closed_form: BigRational,
    /// Set when the decomposition was too large and only two routes were compared.
    pub fallback: bool,
}

fn decomposition_available(space: &GrassmannEven) -> bool {
    2 * space.k * space.l <= MAX_DECOMPOSITION_COLUMNS
}

/// Euclidean norms of all summands of the computed decomposition, keyed by the
/// unsigned pair of labels.
fn summand_norms(space: &GrassmannEven) -> Result<Vec<(i64, (Partition, Partition))>> {
    let d = decompose(space.k, space.l, Case::Even)?;
    let unsigned = |w: &Weight| -> Result<Partition> {
        let ints = w
            .to_ints()
            .ok_or_else(|| Error::Inconsistent(format!("half-integral weight {w}")))?;
        Partition::new(ints.iter().map(|x| x.unsigned_abs() as usize).collect())
    };
    d.summands
        .iter()
        .map(|s| {
            let nu = s
                .nu
                .as_ref()
                .ok_or_else(|| Error::Inconsistent("single-factor summand".into()))?;
            let norm = (s.mu.dot4(&s.mu) + nu.dot4(nu)) / 4;
            Ok((norm, (unsigned(&s.mu)?, unsigned(nu)?)))
        })
        .collect()
}

/// Square of the smallest Dirac eigenvalue, by three routes which must agree.
pub fn min_eigenvalue_sq(space: &GrassmannEven) -> Result<MinEigenvalue> {
    let (k, l) = (space.k as i64, space.l as i64);
    let half_kl = BigRational::new(BigInt::from(k * l), BigInt::from(2));

    let rg = space.rho_g();
    let rk = space.rho_k();
    let diff: i64 = rg.iter().zip(&rk).map(|(a, b)| (a - b) * (a - b)).sum();
    let psi_sum: i64 = psi_set(space)?
        .iter()
        .map(|g| {
            let g = g.to_ints().expect("roots are integral");
            g.iter().zip(&rk).map(|(a, b)| a * b).sum::<i64>()
        })
        .sum();
    let via_psi = space.to_b(&rat(2 * diff + 4 * psi_sum)) + &half_kl;

    let closed_form = BigRational::new(
        BigInt::from(3 * k * l * l - (l * l - 1) * l),
        BigInt::from(6 * (k + l - 1)),
    ) + &half_kl;

    let via_decomposition = if decomposition_available(space) {
        let min = summand_norms(space)?
            .iter()
            .map(|(n, _)| *n)
            .min()
            .ok_or_else(|| Error::Inconsistent("empty decomposition".into()))?;
        Some(space.to_b(&rat(2 * min)) + &half_kl)
    } else {
        None
    };

    let agree = via_psi == closed_form && via_decomposition.as_ref().is_none_or(|v| *v == via_psi);
    if !agree {
        return Err(Error::Inconsistent(format!(
            "smallest eigenvalue routes disagree: decomposition {via_decomposition:?}, Ψ {via_psi}, closed {closed_form}"
        )));
    }
    Ok(MinEigenvalue {
        value: via_psi.clone(),
        fallback: via_decomposition.is_none(),
        via_decomposition,
        via_psi,
        closed_form,
    })
}

/// The `2^ℓ` pairs `(λ^c | λ)` with `λ_j ∈ {ℓ−j+1, ℓ−j}`; when the
/// decomposition is computable they are checked to be exactly the
/// summands of minimal Euclidean norm.
pub fn minimal_weights(space: &GrassmannEven) -> Result<Vec<(Partition, Partition)>> {
    let mut out = minimal_weights_unchecked(space.k, space.l)?;
    out.sort_by(|a, b| b.cmp(a));
    if decomposition_available(space) {
        let norms = summand_norms(space)?;
        let min = norms.iter().map(|(n, _)| *n).min().unwrap_or(0);
        let argmin: BTreeSet<_> = norms
            .into_iter()
            .filter(|(n, _)| *n == min)
            .map(|(_, p)| p)
            .collect();
        let listed: BTreeSet<_> = out.iter().cloned().collect();
        if argmin != listed {
            return Err(Error::Inconsistent(format!(
                "minimal summands {argmin:?} differ from {listed:?}"
            )));
        }
    }
    Ok(out)
}

/// Eigenvalue candidates from the expansion procedure: every `μ ⊆ (ℓ^k)`
/// gives the `λ'` in `μ ⊗ μ^c`, and every `λ` in `2κ ⊗ λ'` with at most
/// `k+ℓ` rows and `c_λ ≤ casimir_bound` is kept. `max_trace` bounds `|2κ|`.
pub fn enumerate_spectrum(
    space: &GrassmannEven,
    casimir_bound: i64,
    max_trace: Option<usize>,
) -> Result<Vec<SpectrumEntry>> {
    let (k, l, n) = (space.k, space.l, space.rank());
    if casimir_bound < 0 {
        return Ok(Vec::new());
    }
    let mut primes: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for mu in partitions_in_box(k, l) {
        let mc = mu.conjugate_lm(k, l)?;
        for (lp, c) in lr_product(&mu, &mc) {
            if c > 0 {
                primes.entry(lp).or_default().push(mu.clone());
            }
        }
    }
    // c_λ ≥ Σ λ_i² ≥ |λ|²/n
    let max_size = ((casimir_bound as f64 * n as f64).sqrt().floor() as usize) + 1;
    let mut found: BTreeMap<Partition, BTreeSet<Witness>> = BTreeMap::new();
    for (lp, mus) in &primes {
        let room = max_size.saturating_sub(lp.size());
        let room = max_trace.map_or(room, |t| room.min(t));
        for half in 0..=room / 2 {
            for kappa in partitions_of(half, n, half) {
                let two_kappa = Partition::new(kappa.parts().iter().map(|p| 2 * p).collect())?;
                for (lam, c) in lr_product(&two_kappa, lp) {
                    if c == 0 || lam.len() > n || casimir(&lam, space)?.casimir_eucl > casimir_bound {
                        continue;
                    }
                    let set = found.entry(lam).or_default();
                    for mu in mus {
                        set.insert(Witness {
                            mu: mu.clone(),
                            lambda_prime: lp.clone(),
                            two_kappa: two_kappa.clone(),
                        });
                    }
                }
            }
        }
    }
    let mut out = found
        .into_iter()
        .map(|(lam, ws)| {
            let mut e = casimir(&lam, space)?;
            e.witnesses = ws.into_iter().collect();
            Ok(e)
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.casimir_eucl.cmp(&b.casimir_eucl).then(b.lambda.cmp(&a.lambda)));
    Ok(out)
}

/// `c^Eucl` of the smallest contribution: `3kℓ² + k²ℓ − kℓ − (2/3)ℓ(ℓ²−1)`.
pub fn smallest_contribution_casimir(k: i64, l: i64) -> i64 {
    3 * k * l * l + k * k * l - k * l - 2 * l * (l * l - 1) / 3
}

/// `λ⁰ = (ℓ^{k−ℓ+1}, (ℓ−1)², …, 1², 0)` with its Casimir.
pub fn smallest_contribution(space: &GrassmannEven) -> Result<SpectrumEntry> {
    let (k, l) = (space.k, space.l);
    let mut parts = vec![l; k - l + 1];
    for j in (1..l).rev() {
        parts.extend([j, j]);
    }
    parts.push(0);
    let lam = Partition::new(parts)?;
    let e = casimir(&lam, space)?;
    let expected = smallest_contribution_casimir(k as i64, l as i64);
    let l2_ok = l != 2 || e.casimir_eucl == 2 * (k * k) as i64 + 10 * k as i64 - 4;
    if e.casimir_eucl != expected || !l2_ok {
        return Err(Error::Inconsistent(format!(
            "c({lam}) = {} but the closed form gives {expected}",
            e.casimir_eucl
        )));
    }
    Ok(e)
}

/// One row of the `ℓ = 2` table of tensor-product contributions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct L2Row {
    pub lambda: Partition,
    pub casimir_eucl: i64,
    pub closed_form: i64,
}

/// The eight tabulated `λ` for `ℓ = 2` (needs `k ≥ 4`), each checked against
/// its closed-form Casimir and against the LR products of the minimal pairs.
/// Also checks that `λ⁰` is the unique minimum among all product terms.
pub fn l2_table(k: usize) -> Result<Vec<L2Row>> {
    if k < 4 {
        return Err(Error::Precondition(format!("the ℓ=2 table needs k ≥ 4, got {k}")));
    }
    let space = GrassmannEven::new(k, 2)?;
    let ki = k as i64;
    let row = |head: &[usize], twos: usize, tail: &[usize], c: i64| -> Result<(Partition, i64)> {
        let mut p = head.to_vec();
        p.extend(std::iter::repeat_n(2, twos));
        p.extend_from_slice(tail);
        Ok((Partition::new(p)?, c))
    };
    let q = 2 * ki * ki;
    let rows = [
        row(&[4, 3], k - 4, &[1, 0, 0, 0], q + 16 * ki)?,
        row(&[4], k - 2, &[0, 0, 0], q + 14 * ki + 4)?,
        row(&[4], k - 3, &[1, 1, 0, 0], q + 14 * ki)?,
        row(&[3, 3], k - 3, &[0, 0, 0], q + 14 * ki)?,
        row(&[3], k - 2, &[1, 0, 0], q + 12 * ki)?,
        row(&[3], k - 3, &[1, 1, 1, 0], q + 12 * ki - 6)?,
        row(&[], k, &[0, 0], q + 10 * ki)?,
        row(&[], k - 1, &[1, 1, 0], q + 10 * ki - 4)?,
    ];
    let mut products: BTreeSet<Partition> = BTreeSet::new();
    for (mu, nu) in minimal_weights_unchecked(k, 2)? {
        products.extend(lr_product(&mu, &nu).into_iter().filter(|(_, c)| *c > 0).map(|(p, _)| p));
    }
    let mut out = Vec::new();
    for (lam, closed) in rows {
        let c = casimir(&lam, &space)?.casimir_eucl;
        if c != closed || !products.contains(&lam) {
            return Err(Error::Inconsistent(format!(
                "row {lam}: c = {c}, closed form {closed}, in products: {}",
                products.contains(&lam)
            )));
        }
        out.push(L2Row {
            lambda: lam,
            casimir_eucl: c,
            closed_form: closed,
        });
    }
    let lam0 = smallest_contribution(&space)?;
    let mut cs = products
        .iter()
        .filter(|p| p.len() <= space.rank())
        .map(|p| casimir(p, &space).map(|e| (e.casimir_eucl, p.clone())))
        .collect::<Result<Vec<_>>>()?;
    cs.sort();
    if cs.first().map(|c| &c.1) != Some(&lam0.lambda) || cs.get(1).is_some_and(|c| c.0 == cs[0].0) {
        return Err(Error::Inconsistent(format!(
            "{} is not the unique smallest product term",
            lam0.lambda
        )));
    }
    Ok(out)
}

fn minimal_weights_unchecked(k: usize, l: usize) -> Result<Vec<(Partition, Partition)>> {
    (0..(1usize << l))
        .map(|mask| {
            let lam = Partition::new(
                (1..=l)
                    .map(|j| l - j + usize::from(mask >> (j - 1) & 1 == 0))
                    .collect(),
            )?;
            Ok((lam.conjugate_lm(l, k)?, lam))
        })
        .collect()
}
