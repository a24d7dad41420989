//! Exact dimension formulas for gl, so and sp representations.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lie::{dot, is_dominant, weyl_vector, AlgebraId, Family, Weight};
use crate::lr::{lr_coefficient, sigma_alpha, FrobeniusHook};
use crate::partitions::{subpartitions, Partition};

/// Binomial coefficient with `C(n, r) = 0` whenever `r < 0` or `n < r`
/// (negative `n` included).
pub fn binom(n: i64, r: i64) -> BigInt {
    if r < 0 || n < r {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn to_natural(x: BigRational, what: &str) -> Result<BigUint> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::Inconsistent(format!("{what} evaluated to {x}")));
    }
    Ok(x.to_integer().to_biguint().expect("nonnegative"))
}

fn nonneg(x: BigInt, what: &str) -> Result<BigUint> {
    x.to_biguint()
        .ok_or_else(|| Error::Inconsistent(format!("{what} evaluated to {x}")))
}

/// Weyl's formula `∏_{α>0} ⟨λ+ρ,α⟩ / ⟨ρ,α⟩` for any supported algebra.
pub fn weyl_dimension(lambda: &Weight) -> Result<BigUint> {
    if !is_dominant(lambda) {
        return Err(Error::NotDominant {
            weight: lambda.to_string(),
            algebra: lambda.algebra().to_string(),
        });
    }
    let a = lambda.algebra();
    let rho = weyl_vector(a);
    let shifted: Vec<i64> = lambda
        .doubled()
        .iter()
        .zip(rho.doubled())
        .map(|(x, r)| x + r)
        .collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for r in a.roots2() {
        num *= dot(&shifted, &r);
        den *= dot(rho.doubled(), &r);
    }
    to_natural(BigRational::new(num, den), "Weyl dimension")
}

pub fn dim_gl(lambda: &Partition, n: usize) -> Result<BigUint> {
    if lambda.len() > n {
        return Err(Error::Precondition(format!(
            "{lambda} has more than {n} rows for gl({n})"
        )));
    }
    let p = lambda.padded(n)?;
    let mut acc = BigRational::one();
    for i in 0..n {
        for j in i + 1..n {
            let num = p[i] as i64 - p[j] as i64 + (j - i) as i64;
            acc *= BigRational::new(num.into(), ((j - i) as i64).into());
        }
    }
    to_natural(acc, "gl dimension")
}

/// `f(k,p,q) = (p−q+1)/(2k+1) · C(2k+1, k−q+1) · C(2k+1, k−p)`, the
/// `gl(2k)` dimension of `(2^{k−p} 1^{p−q} 0^q)`; zero once a binomial vanishes.
pub fn f_kpq(k: i64, p: i64, q: i64) -> Result<BigUint> {
    if k < 1 || q < 0 || q > p {
        return Err(Error::Precondition(format!(
            "f(k,p,q) needs k ≥ 1 and 0 ≤ q ≤ p, got ({k},{p},{q})"
        )));
    }
    let n = 2 * k + 1;
    let num = BigInt::from(p - q + 1) * binom(n, k - q + 1) * binom(n, k - p);
    to_natural(BigRational::new(num, n.into()), "f(k,p,q)")
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..n {
        if m[c][c].is_zero() {
            match (c + 1..n).find(|&r| !m[r][c].is_zero()) {
                Some(r) => {
                    m.swap(r, c);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in c + 1..n {
            for j in c + 1..n {
                let v = &m[i][j] * &m[c][c] - &m[i][c] * &m[c][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[c][c].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// The determinant `d(λ) = det[C(2k+λ_i−i+j−1, 2k−1) − C(2k+λ_i−i−j−1, 2k−1)]`,
/// which is the `O(2k)` dimension of `(λ_1,…,|λ_k|)`.
pub fn so_even_determinant(lambda: &[i64]) -> BigInt {
    let k = lambda.len() as i64;
    let m = (1..=k)
        .map(|i| {
            let li = lambda[(i - 1) as usize].abs();
            (1..=k)
                .map(|j| binom(2 * k + li - i + j - 1, 2 * k - 1) - binom(2 * k + li - i - j - 1, 2 * k - 1))
                .collect()
        })
        .collect();
    bareiss_det(m)
}

fn product_so_even(c2: &[i64]) -> BigRational {
    // ∏_{i<j} ((λ_i+k−i)² − (λ_j+k−j)²) / ((k−i)² − (k−j)²), in doubled units
    let k = c2.len() as i64;
    let mut acc = BigRational::one();
    for i in 0..k {
        for j in i + 1..k {
            let li = c2[i as usize].abs() + 2 * (k - 1 - i);
            let lj = c2[j as usize].abs() + 2 * (k - 1 - j);
            let ri = 2 * (k - 1 - i);
            let rj = 2 * (k - 1 - j);
            acc *= BigRational::new((li * li - lj * lj).into(), (ri * ri - rj * rj).into());
        }
    }
    acc
}

/// Dimension of one `so(2k)` irreducible; a negative last entry names the
/// other chirality and has the same dimension.
pub fn dim_so_even(lambda: &Weight) -> Result<BigUint> {
    let a = lambda.algebra();
    if a.family != Family::SoEven {
        return Err(Error::Precondition(format!("{a} is not so(2k)")));
    }
    let weyl = weyl_dimension(lambda)?;
    let prod = to_natural(product_so_even(lambda.doubled()), "so(2k) product formula")?;
    if prod != weyl {
        return Err(Error::Inconsistent(format!(
            "so(2k) product formula {prod} vs Weyl {weyl} at {lambda}"
        )));
    }
    if let Some(ints) = lambda.to_ints() {
        let det = nonneg(so_even_determinant(&ints), "d(λ)")?;
        let last_nonzero = ints.last().is_some_and(|&x| x != 0);
        let expected = if last_nonzero { &prod * 2u32 } else { prod.clone() };
        if det != expected {
            return Err(Error::Inconsistent(format!(
                "determinant {det} vs product {prod} at {lambda}"
            )));
        }
    }
    Ok(prod)
}

fn weyl_sp(p: &[usize]) -> BigRational {
    let k = p.len();
    let l: Vec<i64> = (0..k).map(|i| (p[i] + k - i) as i64).collect();
    let r: Vec<i64> = (0..k).map(|i| (k - i) as i64).collect();
    let mut acc = BigRational::one();
    for i in 0..k {
        acc *= BigRational::new(l[i].into(), r[i].into());
        for j in i + 1..k {
            acc *= BigRational::new(
                ((l[i] - l[j]) * (l[i] + l[j])).into(),
                ((r[i] - r[j]) * (r[i] + r[j])).into(),
            );
        }
    }
    acc
}

/// The closed `sp(4)` form `(p−q+1)(p+q+3)(p+2)(q+1)/6`.
pub fn dim_sp4(p: u64, q: u64) -> Result<BigUint> {
    if q > p {
        return Err(Error::Precondition(format!("({p},{q}) is not dominant")));
    }
    let v = BigUint::from((p - q + 1) * (p + q + 3)) * (p + 2) * (q + 1);
    let (d, r) = v.div_rem(&BigUint::from(6u32));
    if !r.is_zero() {
        return Err(Error::Inconsistent(format!("sp(4) closed form at ({p},{q})")));
    }
    Ok(d)
}

pub fn dim_sp(lambda: &Partition, k: usize) -> Result<BigUint> {
    if k == 0 || lambda.len() > k {
        return Err(Error::Precondition(format!(
            "{lambda} does not fit sp({})",
            2 * k
        )));
    }
    let p = lambda.padded(k)?;
    let d = to_natural(weyl_sp(&p), "sp dimension")?;
    if k == 2 {
        let closed = dim_sp4(p[0] as u64, p[1] as u64)?;
        if closed != d {
            return Err(Error::Inconsistent(format!(
                "sp(4) closed form {closed} vs Weyl {d} at {lambda}"
            )));
        }
    }
    Ok(d)
}

/// Dimension of an `so(2k+1)` irreducible; half-integral weights `λ+½e`
/// go through `2^k · dim_sp(λ)`.
pub fn dim_so_odd(lambda: &Weight) -> Result<BigUint> {
    let a = lambda.algebra();
    if a.family != Family::SoOdd {
        return Err(Error::Precondition(format!("{a} is not so(2k+1)")));
    }
    let weyl = weyl_dimension(lambda)?;
    if lambda.is_integral() {
        return Ok(weyl);
    }
    let parts: Vec<usize> = lambda.doubled().iter().map(|&c| ((c - 1) / 2) as usize).collect();
    let sp = dim_sp(&Partition::new(parts)?, a.rank())? << a.rank();
    if sp != weyl {
        return Err(Error::Inconsistent(format!(
            "2^k·dim sp {sp} vs Weyl {weyl} at {lambda}"
        )));
    }
    Ok(sp)
}

/// Dimension of any supported irreducible (dispatches on the family).
pub fn dim(lambda: &Weight) -> Result<BigUint> {
    match lambda.algebra().family {
        Family::SoEven => dim_so_even(lambda),
        Family::SoOdd => dim_so_odd(lambda),
        Family::Sp => {
            let ints = lambda.to_ints().ok_or_else(|| Error::NotIntegral {
                weight: lambda.to_string(),
                algebra: lambda.algebra().to_string(),
            })?;
            if !is_dominant(lambda) {
                return Err(Error::NotDominant {
                    weight: lambda.to_string(),
                    algebra: lambda.algebra().to_string(),
                });
            }
            let p = Partition::new(ints.iter().map(|&x| x as usize).collect())?;
            dim_sp(&p, lambda.algebra().rank())
        }
        Family::Gl => weyl_dimension(lambda),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LittlewoodFamily {
    SoEven,
    Sp,
}

/// Signed sum `Σ_α (−1)^{|α|} Σ_μ LR^λ_{σ(α),μ} dim_gl(μ, 2k)`.
fn littlewood_sum(lambda: &Partition, k: usize, transpose: bool) -> Result<BigInt> {
    let target = if transpose { lambda.transpose() } else { lambda.clone() };
    let mut acc = BigInt::zero();
    for h in FrobeniusHook::fitting_in(&target) {
        let s = sigma_alpha(&h)?;
        for mu in subpartitions(&target) {
            if mu.size() + s.size() != target.size() {
                continue;
            }
            let c = lr_coefficient(&s, &mu, &target);
            if c == 0 {
                continue;
            }
            let m = if transpose { mu.transpose() } else { mu };
            if m.len() > 2 * k {
                continue;
            }
            let term = BigInt::from(dim_gl(&m, 2 * k)?) * c;
            if h.weight() % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    Ok(acc)
}

/// The symplectic two-column dimension written through `f`:
/// `f(p,q) − f(p+3,q+3) + Σ_{b} f(p+b,q+4−b) − Σ_{b} f(p+b,q+2−b)`.
pub fn sp_two_column_via_f(k: usize, p: usize, q: usize) -> Result<BigInt> {
    let (k, p, q) = (k as i64, p as i64, q as i64);
    let f = |p: i64, q: i64| -> Result<BigInt> { Ok(BigInt::from(f_kpq(k, p, q)?)) };
    let d = p - q;
    let mut acc = f(p, q)? - f(p + 3, q + 3)?;
    for b in (3 - d).max(1)..=3 {
        acc += f(p + b, q + 4 - b)?;
    }
    for b in (2 - d).max(0)..=2 {
        acc -= f(p + b, q + 2 - b)?;
    }
    Ok(acc)
}

/// Dimension of a two-column diagram `λ ⊆ (2^k)` through Littlewood's
/// trace-subtraction formula, checked against the Weyl formula.
pub fn dim_via_littlewood(lambda: &Partition, k: usize, family: LittlewoodFamily) -> Result<BigUint> {
    if lambda.first() > 2 || lambda.len() > k {
        return Err(Error::Precondition(format!(
            "{lambda} is not inside (2^{k})"
        )));
    }
    match family {
        LittlewoodFamily::SoEven => {
            let o_dim = nonneg(littlewood_sum(lambda, k, false)?, "Littlewood sum")?;
            let a = AlgebraId::so_even(k);
            let w = Weight::from_partition(lambda, a)?;
            let d = dim_so_even(&w)?;
            let single = if lambda.len() == k { &o_dim / 2u32 } else { o_dim.clone() };
            if single != d {
                return Err(Error::Inconsistent(format!(
                    "Littlewood {o_dim} vs Weyl {d} at {lambda} in so({})",
                    2 * k
                )));
            }
            Ok(single)
        }
        LittlewoodFamily::Sp => {
            let v = nonneg(littlewood_sum(lambda, k, true)?, "Littlewood sum")?;
            let d = dim_sp(lambda, k)?;
            // λ = (2^{k−p} 1^{p−q} 0^q)
            let p = k - lambda.parts().iter().filter(|&&x| x == 2).count();
            let q = k - lambda.len();
            let table = sp_two_column_via_f(k, p, q)?;
            if v != d || BigInt::from(d.clone()) != table {
                return Err(Error::Inconsistent(format!(
                    "symplectic Littlewood {v}, table {table}, Weyl {d} at {lambda}"
                )));
            }
            Ok(d)
        }
    }
}

/// Parts as `u64` for quick assertions in reports.
pub fn as_u64(x: &BigUint) -> Option<u64> {
    x.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::character_multiset;
    use crate::part;
    use crate::partitions::partitions_in_box;

    fn so(k: usize, c: &[i64]) -> Weight {
        Weight::from_ints(c, AlgebraId::so_even(k)).unwrap()
    }

    fn b(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomial_convention() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(-1, 3), BigInt::zero());
        assert_eq!(binom(2, 3), BigInt::zero());
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
    }

    #[test]
    fn gl_examples() {
        assert_eq!(dim_gl(&part![2, 1], 4).unwrap(), b(20));
        assert_eq!(dim_gl(&part![1], 7).unwrap(), b(7));
        assert!(dim_gl(&part![1, 1, 1], 2).is_err());
    }

    /// Hook-content formula as an independent oracle.
    fn hook_content(lambda: &Partition, n: i64) -> BigUint {
        let t = lambda.transpose();
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for i in 0..lambda.len() {
            for j in 0..lambda.get(i) {
                num *= n + j as i64 - i as i64;
                den *= (lambda.get(i) - j + t.get(j) - i - 1) as i64;
            }
        }
        (num / den).to_biguint().unwrap()
    }

    #[test]
    fn gl_matches_hook_content() {
        for lam in partitions_in_box(4, 4) {
            for n in lam.len().max(1)..7 {
                assert_eq!(dim_gl(&lam, n).unwrap(), hook_content(&lam, n as i64));
            }
        }
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_kpq(2, 1, 0).unwrap(), b(20));
        assert_eq!(f_kpq(2, 2, 2).unwrap(), b(1));
        for k in 1..6 {
            for q in 0..=k + 1 {
                assert!(f_kpq(k, k + 1, q).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn f_is_a_gl_dimension() {
        for k in 1..=5usize {
            for p in 0..=k {
                for q in 0..=p {
                    let mut parts = vec![2; k - p];
                    parts.extend(std::iter::repeat_n(1, p - q));
                    let lam = Partition::new(parts).unwrap();
                    assert_eq!(
                        dim_gl(&lam, 2 * k).unwrap(),
                        f_kpq(k as i64, p as i64, q as i64).unwrap(),
                        "k={k} p={p} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn so_even_examples() {
        assert_eq!(dim_so_even(&so(4, &[2, 2, 2, 0])).unwrap(), b(840));
        assert_eq!(dim_so_even(&so(3, &[1, 1, 0])).unwrap(), b(15));
        assert_eq!(dim_so_even(&so(4, &[2, 2, 2, 2])).unwrap(), b(294));
        assert_eq!(dim_so_even(&so(4, &[2, 2, 2, -2])).unwrap(), b(294));
        assert_eq!(dim_so_even(&so(1, &[5])).unwrap(), b(1));
        let half = Weight::from_doubled(vec![1, 1, 1, -1], AlgebraId::so_even(4)).unwrap();
        assert_eq!(dim_so_even(&half).unwrap(), b(8));
        assert!(dim_so_even(&so(2, &[0, 1])).is_err());
    }

    #[test]
    fn determinant_hand_values() {
        // k=2: λ=(1,0) gives the vector representation
        assert_eq!(so_even_determinant(&[1, 0]), BigInt::from(4));
        assert_eq!(so_even_determinant(&[1]), BigInt::from(2));
        assert_eq!(so_even_determinant(&[0]), BigInt::from(1));
        assert_eq!(so_even_determinant(&[1, 1]), BigInt::from(6));
    }

    #[test]
    fn chirality_pairs_give_f_difference() {
        // dim(2^{k−p}1^p)^+ + dim(...)^- = f(k,p,0) − f(k,p+1,1)
        for k in 1..=5usize {
            for p in 0..=k {
                let mut c = vec![2i64; k - p];
                c.extend(std::iter::repeat_n(1, p));
                let plus = dim_so_even(&so(k, &c)).unwrap();
                *c.last_mut().unwrap() *= -1;
                let minus = dim_so_even(&so(k, &c)).unwrap();
                let want = BigInt::from(f_kpq(k as i64, p as i64, 0).unwrap())
                    - BigInt::from(f_kpq(k as i64, p as i64 + 1, 1).unwrap());
                assert_eq!(BigInt::from(plus + minus), want, "k={k} p={p}");
            }
        }
    }

    #[test]
    fn so_even_f_difference_without_last_row() {
        for k in 1..=5usize {
            for p in 1..=k {
                for q in 1..=p {
                    let mut c = vec![2i64; k - p];
                    c.extend(std::iter::repeat_n(1, p - q));
                    c.extend(std::iter::repeat_n(0, q));
                    let d = dim_so_even(&so(k, &c)).unwrap();
                    let want = BigInt::from(f_kpq(k as i64, p as i64, q as i64).unwrap())
                        - BigInt::from(f_kpq(k as i64, p as i64 + 1, q as i64 + 1).unwrap());
                    assert_eq!(BigInt::from(d), want);
                }
            }
        }
    }

    #[test]
    fn sp_examples() {
        assert_eq!(dim_sp(&part![1], 2).unwrap(), b(4));
        assert_eq!(dim_sp(&part![2, 1], 2).unwrap(), b(16));
        assert_eq!(dim_sp4(2, 1).unwrap(), b(16));
        assert_eq!(dim_sp(&part![], 1).unwrap(), b(1));
        assert!(dim_sp(&part![1, 1, 1], 2).is_err());
        for k in 1..=6usize {
            for m in 0..=k {
                let lam = Partition::new(vec![1; m]).unwrap();
                let want = BigRational::new(
                    BigInt::from((k + 1 - m) as i64) * binom(2 * k as i64 + 2, m as i64),
                    BigInt::from(k as i64 + 1),
                );
                assert_eq!(BigRational::from(BigInt::from(dim_sp(&lam, k).unwrap())), want);
            }
        }
    }

    #[test]
    fn so_odd_examples() {
        let a1 = AlgebraId::so_odd(1);
        assert_eq!(dim_so_odd(&Weight::from_doubled(vec![1], a1).unwrap()).unwrap(), b(2));
        assert_eq!(dim_so_odd(&Weight::from_ints(&[3], a1).unwrap()).unwrap(), b(7));
        let a2 = AlgebraId::so_odd(2);
        assert_eq!(dim_so_odd(&Weight::from_doubled(vec![3, 1], a2).unwrap()).unwrap(), b(16));
        assert_eq!(dim_so_odd(&Weight::from_ints(&[1, 0], a2).unwrap()).unwrap(), b(5));
    }

    #[test]
    fn littlewood_both_families() {
        for k in 1..=5usize {
            for lam in partitions_in_box(k, 2) {
                dim_via_littlewood(&lam, k, LittlewoodFamily::SoEven).unwrap();
                dim_via_littlewood(&lam, k, LittlewoodFamily::Sp).unwrap();
            }
        }
        assert_eq!(dim_via_littlewood(&part![], 3, LittlewoodFamily::Sp).unwrap(), b(1));
        assert_eq!(dim_via_littlewood(&part![], 3, LittlewoodFamily::SoEven).unwrap(), b(1));
        assert!(dim_via_littlewood(&part![3], 3, LittlewoodFamily::SoEven).is_err());
    }

    #[test]
    fn characters_total_the_weyl_dimension() {
        // every dominant weight with entries ≤ 3 and rank ≤ 4, all families
        for n in 1..=4usize {
            for lam in partitions_in_box(n, 3) {
                for a in [
                    AlgebraId::gl(n),
                    AlgebraId::so_even(n),
                    AlgebraId::so_odd(n),
                    AlgebraId::sp(n),
                ] {
                    let w = Weight::from_partition(&lam, a).unwrap();
                    let d = dim(&w).unwrap();
                    if d > b(3000) {
                        continue;
                    }
                    assert_eq!(character_multiset(&w).unwrap().total(), d, "{lam} {a}");
                }
            }
        }
    }
}
