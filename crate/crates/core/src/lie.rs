//! Classical root data, weights in doubled coordinates, and Freudenthal characters.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    Gl,
    SoEven,
    SoOdd,
    Sp,
}

/// A classical Lie algebra of rank `n`: gl(n), so(2n), so(2n+1) or sp(2n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraId {
    pub family: Family,
    pub n: usize,
}

impl AlgebraId {
    pub fn gl(n: usize) -> Self {
        AlgebraId { family: Family::Gl, n }
    }
    pub fn so_even(n: usize) -> Self {
        AlgebraId { family: Family::SoEven, n }
    }
    pub fn so_odd(n: usize) -> Self {
        AlgebraId { family: Family::SoOdd, n }
    }
    pub fn sp(n: usize) -> Self {
        AlgebraId { family: Family::Sp, n }
    }

    /// Number of Cartan coordinates.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Whether half-odd-integer weights are allowed (spin representations).
    pub fn allows_half_integers(&self) -> bool {
        matches!(self.family, Family::SoEven | Family::SoOdd)
    }

    /// Positive roots in doubled coordinates.
    pub(crate) fn roots2(&self) -> Vec<Vec<i64>> {
        let n = self.n;
        let mut out = Vec::new();
        let unit = |i: usize, c: i64| {
            let mut v = vec![0i64; n];
            v[i] = c;
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                let mut v = vec![0i64; n];
                v[i] = 2;
                v[j] = -2;
                out.push(v);
                if self.family != Family::Gl {
                    let mut w = vec![0i64; n];
                    w[i] = 2;
                    w[j] = 2;
                    out.push(w);
                }
            }
        }
        match self.family {
            Family::SoOdd => out.extend((0..n).map(|i| unit(i, 2))),
            Family::Sp => out.extend((0..n).map(|i| unit(i, 4))),
            _ => {}
        }
        out
    }

    /// Sorts a doubled coordinate vector into the dominant chamber.
    pub fn dominant_conjugate(&self, w: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = match self.family {
            Family::Gl => w.to_vec(),
            _ => w.iter().map(|x| x.abs()).collect(),
        };
        if self.family == Family::SoEven && self.n == 1 {
            return w.to_vec();
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        if self.family == Family::SoEven {
            let negatives = w.iter().filter(|&&x| x < 0).count();
            let has_zero = w.contains(&0);
            if !has_zero && negatives % 2 == 1 {
                let last = v.len() - 1;
                v[last] = -v[last];
            }
        }
        v
    }

    /// Whether a doubled coordinate vector lies in the closed dominant chamber.
    pub fn is_dominant2(&self, w: &[i64]) -> bool {
        let n = w.len();
        let decreasing = |s: &[i64]| s.windows(2).all(|p| p[0] >= p[1]);
        match self.family {
            Family::Gl => decreasing(w),
            Family::SoOdd | Family::Sp => decreasing(w) && w.last().is_none_or(|&x| x >= 0),
            Family::SoEven => {
                if n <= 1 {
                    return true;
                }
                decreasing(&w[..n - 1]) && w[n - 2] >= w[n - 1].abs()
            }
        }
    }

    /// The Weyl-group orbit of a doubled coordinate vector (distinct points only).
    pub fn orbit(&self, w: &[i64]) -> Vec<Vec<i64>> {
        if self.family == Family::SoEven && self.n == 1 {
            return vec![w.to_vec()];
        }
        let dom = self.dominant_conjugate(w);
        if self.family == Family::Gl {
            return distinct_permutations(&dom);
        }
        let abs: Vec<i64> = dom.iter().map(|x| x.abs()).collect();
        let parity_neg = dom.iter().filter(|&&x| x < 0).count() % 2;
        let has_zero = abs.contains(&0);
        let mut out = Vec::new();
        for p in distinct_permutations(&abs) {
            let nz: Vec<usize> = (0..p.len()).filter(|&i| p[i] != 0).collect();
            for mask in 0u64..(1u64 << nz.len()) {
                if self.family == Family::SoEven
                    && !has_zero
                    && (mask.count_ones() as usize) % 2 != parity_neg
                {
                    continue;
                }
                let mut v = p.clone();
                for (b, &i) in nz.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        v[i] = -v[i];
                    }
                }
                out.push(v);
            }
        }
        out
    }

    /// Images of `w` under the simple reflections.
    pub(crate) fn simple_reflections(&self, w: &[i64]) -> Vec<Vec<i64>> {
        let n = w.len();
        let mut out = Vec::new();
        if self.family == Family::SoEven && n == 1 {
            return out;
        }
        for i in 0..n.saturating_sub(1) {
            let mut v = w.to_vec();
            v.swap(i, i + 1);
            out.push(v);
        }
        match self.family {
            Family::SoOdd | Family::Sp => {
                let mut v = w.to_vec();
                v[n - 1] = -v[n - 1];
                out.push(v);
            }
            Family::SoEven => {
                let mut v = w.to_vec();
                v[n - 2] = -w[n - 1];
                v[n - 1] = -w[n - 2];
                out.push(v);
            }
            Family::Gl => {}
        }
        out
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Gl => write!(f, "gl({})", self.n),
            Family::SoEven => write!(f, "so({})", 2 * self.n),
            Family::SoOdd => write!(f, "so({})", 2 * self.n + 1),
            Family::Sp => write!(f, "sp({})", 2 * self.n),
        }
    }
}

impl std::str::FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let (name, rest) = t.split_once('(').ok_or_else(|| parse_err("algebra", s))?;
        let d: usize = rest
            .strip_suffix(')')
            .and_then(|x| x.trim().parse().ok())
            .filter(|&d| d > 0)
            .ok_or_else(|| parse_err("algebra", s))?;
        match name.trim() {
            "gl" => Ok(AlgebraId::gl(d)),
            "so" if d % 2 == 0 => Ok(AlgebraId::so_even(d / 2)),
            "so" if d >= 3 => Ok(AlgebraId::so_odd(d / 2)),
            "sp" if d % 2 == 0 => Ok(AlgebraId::sp(d / 2)),
            _ => Err(parse_err("algebra", s)),
        }
    }
}

/// A weight stored as twice its coordinates in the standard `e_i` basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Weight {
    coords2: Vec<i64>,
    algebra: AlgebraId,
}

impl Weight {
    /// Builds a weight from doubled coordinates, checking length and the
    /// all-integer / all-half-integer dichotomy.
    pub fn from_doubled(coords2: Vec<i64>, algebra: AlgebraId) -> Result<Self> {
        if coords2.len() != algebra.rank() {
            return Err(Error::Precondition(format!(
                "weight of length {} for {algebra} of rank {}",
                coords2.len(),
                algebra.rank()
            )));
        }
        let w = Weight { coords2, algebra };
        if !w.same_parity() {
            return Err(Error::NotIntegral {
                weight: w.to_string(),
                algebra: algebra.to_string(),
            });
        }
        Ok(w)
    }

    pub fn from_ints(coords: &[i64], algebra: AlgebraId) -> Result<Self> {
        Weight::from_doubled(coords.iter().map(|c| 2 * c).collect(), algebra)
    }

    /// The partition padded to the rank of `algebra`.
    pub fn from_partition(p: &Partition, algebra: AlgebraId) -> Result<Self> {
        let v = p.padded(algebra.rank())?;
        Weight::from_doubled(v.iter().map(|&c| 2 * c as i64).collect(), algebra)
    }

    /// `p + ½(1,…,1)`, with the last coordinate negated when `negative` is set.
    pub fn half_shifted(p: &Partition, algebra: AlgebraId, negative: bool) -> Result<Self> {
        let v = p.padded(algebra.rank())?;
        let mut c: Vec<i64> = v.iter().map(|&c| 2 * c as i64 + 1).collect();
        if negative {
            if let Some(l) = c.last_mut() {
                *l = -*l;
            }
        }
        Weight::from_doubled(c, algebra)
    }

    /// `p` with its last coordinate negated when `negative` is set.
    pub fn signed(p: &Partition, algebra: AlgebraId, negative: bool) -> Result<Self> {
        let mut w = Weight::from_partition(p, algebra)?;
        if negative {
            if let Some(l) = w.coords2.last_mut() {
                *l = -*l;
            }
        }
        Ok(w)
    }

    pub fn doubled(&self) -> &[i64] {
        &self.coords2
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn is_integral(&self) -> bool {
        self.coords2.iter().all(|c| c % 2 == 0)
    }

    fn same_parity(&self) -> bool {
        let odd = self.coords2.iter().filter(|c| *c % 2 != 0).count();
        if odd == 0 {
            return true;
        }
        odd == self.coords2.len() && self.algebra.allows_half_integers()
    }

    /// Four times the Euclidean inner product (exact in doubled coordinates).
    pub fn dot4(&self, other: &Weight) -> i64 {
        dot(&self.coords2, &other.coords2)
    }

    /// Integer coordinates when the weight is integral.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.is_integral()
            .then(|| self.coords2.iter().map(|c| c / 2).collect())
    }

    /// Reads `[3/2,1/2]` or `[2,1,-1]`.
    pub fn parse(s: &str, algebra: AlgebraId) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| parse_err("weight", s))?;
        let mut c2 = Vec::new();
        if !inner.trim().is_empty() {
            for tok in inner.split(',') {
                let tok = tok.trim();
                let v = match tok.split_once('/') {
                    Some((num, "2")) => num.trim().parse::<i64>().ok(),
                    Some(_) => None,
                    None => tok.parse::<i64>().ok().map(|x| 2 * x),
                };
                c2.push(v.ok_or_else(|| parse_err("weight", s))?);
            }
        }
        Weight::from_doubled(c2, algebra)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords2.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fmt_half(*c))?;
        }
        write!(f, "]")
    }
}

impl From<Weight> for String {
    fn from(w: Weight) -> String {
        format!("{}{}", w.algebra, w)
    }
}

/// Reads the serialized form `so(4)[1,-1]`.
impl TryFrom<String> for Weight {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        let i = s.find('[').ok_or_else(|| parse_err("weight", &s))?;
        Weight::parse(&s[i..], s[..i].parse()?)
    }
}

/// Renders a doubled coordinate as an integer or a half, e.g. `3/2`.
pub fn fmt_half(c2: i64) -> String {
    if c2 % 2 == 0 {
        (c2 / 2).to_string()
    } else {
        format!("{c2}/2")
    }
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Weight → multiplicity map over a product of algebras; coordinates of
/// the factors are concatenated, all doubled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightMultiset {
    factors: Vec<AlgebraId>,
    entries: BTreeMap<Vec<i64>, BigUint>,
}

impl WeightMultiset {
    pub fn new(factors: Vec<AlgebraId>) -> Self {
        WeightMultiset {
            factors,
            entries: BTreeMap::new(),
        }
    }

    pub fn factors(&self) -> &[AlgebraId] {
        &self.factors
    }

    pub fn width(&self) -> usize {
        self.factors.iter().map(|a| a.rank()).sum()
    }

    pub fn add(&mut self, w2: Vec<i64>, m: BigUint) {
        debug_assert_eq!(w2.len(), self.width());
        if m.is_zero() {
            return;
        }
        *self.entries.entry(w2).or_default() += m;
    }

    pub fn get(&self, w2: &[i64]) -> BigUint {
        self.entries.get(w2).cloned().unwrap_or_default()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<i64>, &BigUint)> {
        self.entries.iter()
    }

    /// The lexicographically greatest weight.
    pub fn max_weight(&self) -> Option<&Vec<i64>> {
        self.entries.keys().next_back()
    }

    /// Subtracts `other` entrywise; fails (leaving `self` partly modified)
    /// if any multiplicity would go negative.
    pub fn subtract(&mut self, other: &WeightMultiset) -> Result<()> {
        for (w, m) in &other.entries {
            match self.entries.get_mut(w) {
                Some(cur) if *cur >= *m => {
                    *cur -= m;
                    if cur.is_zero() {
                        self.entries.remove(w);
                    }
                }
                cur => {
                    return Err(Error::Peel(format!(
                        "multiplicity of {} would become negative ({} - {m})",
                        fmt_coords(w),
                        cur.map(|c| c.to_string()).unwrap_or_else(|| "0".into())
                    )))
                }
            }
        }
        Ok(())
    }

    /// Tensor product of characters of the two factor groups.
    pub fn outer(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        let mut out = WeightMultiset::new(factors);
        for (a, ma) in &self.entries {
            for (b, mb) in &other.entries {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.entries.insert(w, ma * mb);
            }
        }
        out
    }

    /// Scales every coordinate down by `d`; all coordinates must be divisible.
    pub fn divide_coords(&self, d: i64) -> Result<WeightMultiset> {
        if d == 0 {
            return Err(Error::Precondition("divisor must be nonzero".into()));
        }
        let mut out = WeightMultiset::new(self.factors.clone());
        for (w, m) in &self.entries {
            if w.iter().any(|c| c % d != 0) {
                return Err(Error::Precondition(format!(
                    "coordinate of {} not divisible by {d}",
                    fmt_coords(w)
                )));
            }
            out.add(w.iter().map(|c| c / d).collect(), m.clone());
        }
        Ok(out)
    }

    /// Replaces the factor tags without touching coordinates.
    pub fn with_factors(mut self, factors: Vec<AlgebraId>) -> Result<WeightMultiset> {
        let width: usize = factors.iter().map(|a| a.rank()).sum();
        if width != self.width() {
            return Err(Error::Precondition(format!(
                "factor ranks sum to {width}, weights have width {}",
                self.width()
            )));
        }
        self.factors = factors;
        Ok(self)
    }

    /// Checks invariance under every simple reflection of every factor.
    pub fn is_weyl_invariant(&self) -> bool {
        let mut offset = 0;
        for a in &self.factors {
            let r = a.rank();
            for (w, m) in &self.entries {
                for img in a.simple_reflections(&w[offset..offset + r]) {
                    let mut v = w.clone();
                    v[offset..offset + r].copy_from_slice(&img);
                    if self.entries.get(&v) != Some(m) {
                        return false;
                    }
                }
            }
            offset += r;
        }
        true
    }

    pub(crate) fn from_counts(factors: Vec<AlgebraId>, counts: HashMap<Vec<i64>, u64>) -> Self {
        let mut out = WeightMultiset::new(factors);
        for (w, c) in counts {
            out.add(w, BigUint::from(c));
        }
        out
    }
}

pub(crate) fn fmt_coords(w: &[i64]) -> String {
    let parts: Vec<String> = w.iter().map(|&c| fmt_half(c)).collect();
    format!("[{}]", parts.join(","))
}

pub fn is_dominant(w: &Weight) -> bool {
    w.algebra.is_dominant2(&w.coords2)
}

pub fn positive_roots(a: AlgebraId) -> WeightMultiset {
    let mut out = WeightMultiset::new(vec![a]);
    for r in a.roots2() {
        out.add(r, BigUint::one());
    }
    out
}

/// Half the sum of the positive roots.
pub fn weyl_vector(a: AlgebraId) -> Weight {
    let mut sum = vec![0i64; a.rank()];
    for r in a.roots2() {
        for (s, x) in sum.iter_mut().zip(&r) {
            *s += x;
        }
    }
    Weight {
        coords2: sum.into_iter().map(|s| s / 2).collect(),
        algebra: a,
    }
}

fn check_highest(lambda: &Weight) -> Result<()> {
    if !is_dominant(lambda) {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
            algebra: lambda.algebra.to_string(),
        });
    }
    if !lambda.same_parity() {
        return Err(Error::NotIntegral {
            weight: lambda.to_string(),
            algebra: lambda.algebra.to_string(),
        });
    }
    Ok(())
}

/// Multiplicities of the dominant weights of `V_λ` via Freudenthal's formula.
pub fn dominant_multiplicities(lambda: &Weight) -> Result<BTreeMap<Vec<i64>, BigUint>> {
    check_highest(lambda)?;
    let a = lambda.algebra;
    let roots = a.roots2();
    let rho = weyl_vector(a).coords2;
    let top = lambda.coords2.clone();

    // Every dominant weight below λ is reached through dominant weights by
    // subtracting one positive root at a time.
    let mut seen: HashSet<Vec<i64>> = HashSet::from([top.clone()]);
    let mut queue = VecDeque::from([top.clone()]);
    while let Some(mu) = queue.pop_front() {
        for r in &roots {
            let nu: Vec<i64> = mu.iter().zip(r).map(|(x, y)| x - y).collect();
            if a.is_dominant2(&nu) && !seen.contains(&nu) {
                seen.insert(nu.clone());
                queue.push_back(nu);
            }
        }
    }
    let mut order: Vec<Vec<i64>> = seen.into_iter().collect();
    order.sort_by(|x, y| dot(y, &rho).cmp(&dot(x, &rho)).then_with(|| y.cmp(x)));

    let shifted_norm = |w: &[i64]| -> i64 {
        w.iter().zip(&rho).map(|(x, r)| (x + r) * (x + r)).sum()
    };
    let top_norm = shifted_norm(&top);
    let mut mult: HashMap<Vec<i64>, BigInt> = HashMap::new();
    mult.insert(top.clone(), BigInt::one());
    for mu in order.iter().skip_while(|w| **w == top) {
        let mut sum = BigInt::zero();
        for r in &roots {
            let mut w: Vec<i64> = mu.clone();
            loop {
                for (x, y) in w.iter_mut().zip(r) {
                    *x += y;
                }
                let m = match mult.get(&a.dominant_conjugate(&w)) {
                    Some(m) if !m.is_zero() => m,
                    _ => break,
                };
                sum += m * dot(&w, r);
            }
        }
        let denom = top_norm - shifted_norm(mu);
        if denom <= 0 {
            return Err(Error::Inconsistent(format!(
                "Freudenthal denominator {denom} at {}",
                fmt_coords(mu)
            )));
        }
        let (q, rem) = (sum * BigInt::from(2)).div_rem(&BigInt::from(denom));
        if !rem.is_zero() || q.is_negative() {
            return Err(Error::Inconsistent(format!(
                "non-integral multiplicity at {}",
                fmt_coords(mu)
            )));
        }
        mult.insert(mu.clone(), q);
    }
    Ok(mult
        .into_iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(w, m)| (w, m.to_biguint().expect("nonnegative")))
        .collect())
}

/// The full weight multiset of the irreducible representation with highest weight `λ`.
pub fn character_multiset(lambda: &Weight) -> Result<WeightMultiset> {
    let a = lambda.algebra;
    let dom = dominant_multiplicities(lambda)?;
    let mut out = WeightMultiset::new(vec![a]);
    for (mu, m) in dom {
        for w in a.orbit(&mu) {
            out.add(w, m.clone());
        }
    }
    Ok(out)
}

/// Number of weights (with multiplicity) as a machine integer, for tests and reports.
pub fn total_u64(ws: &WeightMultiset) -> Option<u64> {
    ws.total().to_u64()
}

fn distinct_permutations(v: &[i64]) -> Vec<Vec<i64>> {
    let mut cur: Vec<i64> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // lexicographic next-permutation over the sorted multiset
    loop {
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn keys(ws: &WeightMultiset) -> Vec<Vec<i64>> {
        ws.iter().map(|(w, _)| w.clone()).collect()
    }

    #[test]
    fn roots_of_small_algebras() {
        let r = positive_roots(AlgebraId::so_odd(2));
        let mut got = keys(&r);
        got.sort();
        let mut want = vec![vec![2, 0], vec![0, 2], vec![2, -2], vec![2, 2]];
        want.sort();
        assert_eq!(got, want);
        assert!(positive_roots(AlgebraId::so_even(1)).is_empty());
        let sp = positive_roots(AlgebraId::sp(2));
        assert_eq!(sp.len(), 4);
        assert!(sp.get(&[4, 0]) == BigUint::one() && sp.get(&[0, 4]) == BigUint::one());
        // dim sp(4) = rank + 2·|Φ⁺|
        assert_eq!(2 + 2 * sp.len(), 10);
    }

    #[test]
    fn weyl_vectors() {
        assert_eq!(weyl_vector(AlgebraId::so_even(4)).doubled(), &[6, 4, 2, 0]);
        assert_eq!(weyl_vector(AlgebraId::so_odd(3)).doubled(), &[5, 3, 1]);
        assert_eq!(weyl_vector(AlgebraId::gl(1)).doubled(), &[0]);
        assert_eq!(weyl_vector(AlgebraId::sp(2)).doubled(), &[4, 2]);
    }

    #[test]
    fn dominance() {
        let so8 = AlgebraId::so_even(4);
        assert!(is_dominant(&Weight::from_ints(&[2, 1, 1, -1], so8).unwrap()));
        assert!(!is_dominant(&Weight::from_ints(&[1, 2], AlgebraId::sp(2)).unwrap()));
        assert!(is_dominant(&Weight::from_doubled(vec![1, 1, 1, -1], so8).unwrap()));
        assert!(Weight::from_doubled(vec![1, 2], AlgebraId::so_even(2)).is_err());
        assert!(Weight::from_doubled(vec![1], AlgebraId::sp(1)).is_err());
    }

    #[test]
    fn vector_and_adjoint_like_characters() {
        let so4 = AlgebraId::so_even(2);
        let v = character_multiset(&Weight::from_ints(&[1, 0], so4).unwrap()).unwrap();
        let mut got = keys(&v);
        got.sort();
        assert_eq!(got, vec![vec![-2, 0], vec![0, -2], vec![0, 2], vec![2, 0]]);
        let c = character_multiset(&Weight::from_ints(&[1, 1], so4).unwrap()).unwrap();
        assert_eq!(c.total(), BigUint::from(3u32));
        assert_eq!(c.get(&[0, 0]), BigUint::one());
        assert_eq!(c.get(&[-2, -2]), BigUint::one());
        let s = character_multiset(&Weight::from_ints(&[3], AlgebraId::so_odd(1)).unwrap()).unwrap();
        assert_eq!(s.len(), 7);
        assert!(s.iter().all(|(_, m)| m.is_one()));
    }

    #[test]
    fn adjoint_zero_weight_multiplicity_is_rank() {
        let so8 = AlgebraId::so_even(4);
        let adj = character_multiset(&Weight::from_ints(&[1, 1, 0, 0], so8).unwrap()).unwrap();
        assert_eq!(adj.total(), BigUint::from(28u32));
        assert_eq!(adj.get(&[0, 0, 0, 0]), BigUint::from(4u32));
        let sp4 = AlgebraId::sp(2);
        let adj = character_multiset(&Weight::from_ints(&[2, 0], sp4).unwrap()).unwrap();
        assert_eq!(adj.total(), BigUint::from(10u32));
        assert_eq!(adj.get(&[0, 0]), BigUint::from(2u32));
    }

    #[test]
    fn spin_representations() {
        let so8 = AlgebraId::so_even(4);
        let sp = character_multiset(&Weight::from_doubled(vec![1, 1, 1, -1], so8).unwrap()).unwrap();
        assert_eq!(sp.total(), BigUint::from(8u32));
        assert!(sp
            .iter()
            .all(|(w, _)| w.iter().filter(|&&x| x < 0).count() % 2 == 1));
        let so7 = AlgebraId::so_odd(3);
        let sp = character_multiset(&Weight::from_doubled(vec![1, 1, 1], so7).unwrap()).unwrap();
        assert_eq!(sp.total(), BigUint::from(8u32));
    }

    #[test]
    fn gl_characters() {
        let gl3 = AlgebraId::gl(3);
        let c = character_multiset(&Weight::from_ints(&[2, 1, 0], gl3).unwrap()).unwrap();
        assert_eq!(c.total(), BigUint::from(8u32));
        assert_eq!(c.get(&[2, 2, 2]), BigUint::from(2u32));
    }

    #[test]
    fn rejects_bad_highest_weights() {
        let so4 = AlgebraId::so_even(2);
        assert!(matches!(
            character_multiset(&Weight::from_ints(&[0, 1], so4).unwrap()),
            Err(Error::NotDominant { .. })
        ));
    }

    #[test]
    fn text_forms() {
        let a: AlgebraId = "so(8)".parse().unwrap();
        assert_eq!(a, AlgebraId::so_even(4));
        assert_eq!("so(7)".parse::<AlgebraId>().unwrap(), AlgebraId::so_odd(3));
        assert_eq!("sp(4)".parse::<AlgebraId>().unwrap(), AlgebraId::sp(2));
        assert_eq!("gl(4)".parse::<AlgebraId>().unwrap(), AlgebraId::gl(4));
        assert!("sp(3)".parse::<AlgebraId>().is_err());
        let w = Weight::parse("[3/2,1/2]", AlgebraId::so_odd(2)).unwrap();
        assert_eq!(w.doubled(), &[3, 1]);
        assert_eq!(w.to_string(), "[3/2,1/2]");
        assert_eq!(Weight::parse("[2,1,-1]", AlgebraId::so_even(3)).unwrap().to_string(), "[2,1,-1]");
        assert!(Weight::parse("[1/3]", AlgebraId::so_odd(1)).is_err());
    }

    #[test]
    fn orbit_sizes() {
        let so6 = AlgebraId::so_even(3);
        // half-spin of so(6): 4 weights
        assert_eq!(so6.orbit(&[1, 1, 1]).len(), 4);
        assert_eq!(so6.orbit(&[2, 0, 0]).len(), 6);
        assert_eq!(AlgebraId::sp(2).orbit(&[2, 2]).len(), 4);
        assert_eq!(AlgebraId::gl(3).orbit(&[2, 2, 0]).len(), 3);
    }
}
