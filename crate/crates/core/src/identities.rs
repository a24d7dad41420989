//! Binomial moment sums `B(n,k)`, `B̃(n,k)`, the polynomials `P_n`, their
//! generating function `Q`, and checks of the closed forms built on them.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dims::{binom, dim_sp, dim_sp4};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::report::IdentityReport;

fn rat(x: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(x.into())
}

fn pow2(e: i64) -> BigRational {
    if e >= 0 {
        rat(BigInt::one() << e as usize)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-e) as usize)
    }
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `B(n,k) = Σ_{j=0}^{n} j^k C(2n, n−j)`.
pub fn bnk(n: u64, k: u32) -> BigUint {
    let n = n as i64;
    let s: BigInt = (0..=n)
        .map(|j| BigInt::from(j).pow(k) * binom(2 * n, n - j))
        .sum();
    s.to_biguint().expect("sum of nonnegative terms")
}

/// `B̃(n,k) = Σ_{j=0}^{n} j^k C(2n−1, n−j)`.
pub fn btilde(n: u64, k: u32) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Precondition("B̃(n,k) needs n ≥ 1".into()));
    }
    let n = n as i64;
    let s: BigInt = (0..=n)
        .map(|j| BigInt::from(j).pow(k) * binom(2 * n - 1, n - j))
        .sum();
    Ok(s.to_biguint().expect("sum of nonnegative terms"))
}

/// Closed forms of `B(n,k)` for `k ≤ 5`.
pub fn bnk_closed(n: u64, k: u32) -> Result<BigRational> {
    let c = rat(binom(2 * n as i64, n as i64));
    let nn = rat(n);
    let half = BigRational::new(1.into(), 2.into());
    let e = 2 * n as i64;
    Ok(match k {
        0 => pow2(e - 1) + &half * c,
        1 => &half * c * nn,
        2 => pow2(e - 2) * nn,
        3 => &half * c * &nn * &nn,
        4 => pow2(e - 3) * &nn * (rat(3) * &nn - rat(1)),
        5 => &half * c * &nn * &nn * (rat(2) * &nn - rat(1)),
        _ => return Err(Error::Precondition(format!("no closed form for k={k}"))),
    })
}

/// Checks all six closed forms at one `n`.
pub fn check_bnk(n: u64) -> Vec<IdentityReport> {
    (0..=5)
        .map(|k| {
            let lhs = rat(BigInt::from(bnk(n, k)));
            let rhs = bnk_closed(n, k).expect("k ≤ 5");
            let mut r = IdentityReport::new(
                format!("B(n,{k}) closed form"),
                format!("n={n}"),
                lhs.to_integer(),
                rhs.to_integer(),
            );
            r.pass = lhs == rhs;
            r
        })
        .collect()
}

/// Checks `2n·B̃(n,k) = n·B(n,k) + B(n,k+1)`.
pub fn check_btilde(n: u64, k: u32) -> Result<IdentityReport> {
    let lhs = BigInt::from(btilde(n, k)?) * (2 * n);
    let rhs = BigInt::from(bnk(n, k)) * n + BigInt::from(bnk(n, k + 1));
    Ok(IdentityReport::new("B~ relation", format!("n={n},k={k}"), lhs, rhs))
}

/// Dense truncated power series (or polynomial) with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigRationalSeries {
    coefficients: Vec<BigRational>,
    /// Coefficients of degree `≥ order` are unknown.
    order: usize,
}

impl BigRationalSeries {
    pub fn new(mut coefficients: Vec<BigRational>, order: usize) -> Self {
        coefficients.truncate(order);
        BigRationalSeries {
            coefficients,
            order,
        }
    }

    /// An exact polynomial: known to every order up to `order`.
    pub fn polynomial(coefficients: Vec<BigRational>, order: usize) -> Result<Self> {
        if coefficients.len() > order {
            return Err(Error::Precondition(format!(
                "degree {} exceeds order {order}",
                coefficients.len() - 1
            )));
        }
        Ok(BigRationalSeries::new(coefficients, order))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> Result<BigRational> {
        if i >= self.order {
            return Err(Error::Precondition(format!(
                "coefficient {i} beyond truncation order {}",
                self.order
            )));
        }
        Ok(self.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero))
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let c = (0..order)
            .map(|i| {
                self.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero)
                    + other.coefficients.get(i).cloned().unwrap_or_else(BigRational::zero)
            })
            .collect();
        BigRationalSeries::new(c, order).trimmed()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut c = vec![BigRational::zero(); order];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                if i + j < order {
                    c[i + j] += a * b;
                }
            }
        }
        BigRationalSeries::new(c, order).trimmed()
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        let c = self.coefficients.iter().map(|a| a * s).collect();
        BigRationalSeries::new(c, self.order).trimmed()
    }

    /// `k`-th derivative evaluated at `x`.
    pub fn derivative_at(&self, k: usize, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut pw = BigRational::one();
        for (i, a) in self.coefficients.iter().enumerate().skip(k) {
            let falling: BigInt = ((i - k + 1)..=i).fold(BigInt::one(), |p, t| p * t);
            acc += a * rat(falling) * &pw;
            pw *= x;
        }
        acc
    }

    fn trimmed(mut self) -> Self {
        while self.coefficients.last().is_some_and(|c| c.is_zero()) {
            self.coefficients.pop();
        }
        self
    }
}

/// `P_n(x) = Σ_{i=0}^{n} C(2n, n−i) x^i`, as an exact polynomial of order `n+3`.
pub fn p_n(n: u64) -> BigRationalSeries {
    let c = (0..=n)
        .map(|i| rat(binom(2 * n as i64, n as i64 - i as i64)))
        .collect();
    BigRationalSeries::new(c, n as usize + 3)
}

/// Checks `x·P_{n+1} = (x+1)²·P_n + (x−1)·C(2n,n) − x·C(2n,n)/(n+1)`.
pub fn check_p_recursion(n: u64) -> bool {
    let ord = n as usize + 4;
    let poly = |c: Vec<BigRational>| BigRationalSeries::polynomial(c, ord).expect("fits");
    let x = poly(vec![rat(0), rat(1)]);
    let xp1_sq = poly(vec![rat(1), rat(2), rat(1)]);
    let c = rat(binom(2 * n as i64, n as i64));
    let pn = BigRationalSeries::new(p_n(n).coefficients, ord);
    let pn1 = BigRationalSeries::new(p_n(n + 1).coefficients, ord);
    let lhs = x.mul(&pn1);
    let rhs = xp1_sq
        .mul(&pn)
        .add(&poly(vec![-c.clone(), c.clone()]))
        .add(&x.scale(&(-(c / rat(n + 1)))));
    lhs == rhs
}

/// Signed Stirling numbers of the first kind `s(k, j)`.
fn stirling1(k: usize) -> Vec<i64> {
    let mut row = vec![1i64];
    for m in 0..k {
        // x(x−1)…(x−m): multiply by (x − m)
        let mut next = vec![0i64; row.len() + 1];
        for (j, &c) in row.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= m as i64 * c;
        }
        row = next;
    }
    row
}

/// `P_n^{(k)}(1)` recovered from the moments: `Σ_j s(k,j) B(n,j)`.
pub fn bp_ladder(n: u64, k: usize) -> BigInt {
    stirling1(k)
        .iter()
        .enumerate()
        .map(|(j, &s)| BigInt::from(s) * BigInt::from(bnk(n, j as u32)))
        .sum()
}

/// One term `c · y^m (1−4y)^{−ℓ}` with `ℓ = two_l / 2`.
struct QTerm {
    coeff: i64,
    m: u64,
    two_l: u64,
}

/// `∂^k_x Q(1, y)` as a list of `y^m (1−4y)^{−ℓ}` terms, for `k ≤ 5`.
fn q_x_derivative(k: usize) -> Vec<QTerm> {
    let t = |coeff, m, two_l| QTerm { coeff, m, two_l };
    match k {
        // the k = 0 row has coefficients ½, handled by doubling below
        0 => vec![t(1, 0, 1), t(1, 0, 2)],
        1 => vec![t(1, 1, 3)],
        2 => vec![t(-1, 1, 3), t(1, 1, 4)],
        3 => vec![t(3, 1, 3), t(6, 2, 5), t(-3, 1, 4)],
        4 => vec![t(-3, 1, 3), t(-9, 1, 5), t(9, 1, 4), t(3, 1, 6)],
        5 => vec![t(120, 3, 7), t(-60, 1, 4), t(60, 1, 5), t(-120, 2, 6)],
        _ => unreachable!(),
    }
}

/// `d^n/dy^n (1−4y)^{−ℓ}` at `y = 0`, `ℓ = two_l/2`.
fn d_power(n: u64, two_l: u64) -> BigRational {
    if two_l % 2 == 0 {
        let l = two_l / 2;
        rat((BigInt::one() << (2 * n) as usize) * factorial(l + n - 1) / factorial(l - 1))
    } else {
        // (2n+2ℓ−1)! (ℓ−½)! / ((n+ℓ−½)! (2ℓ−1)!)
        let lm = (two_l - 1) / 2;
        BigRational::new(
            factorial(2 * n + two_l - 1) * factorial(lm),
            factorial(n + lm) * factorial(two_l - 1),
        )
    }
}

/// `d^n/dy^n (y^m (1−4y)^{−ℓ})` at `y = 0`.
fn d_term(n: u64, m: u64, two_l: u64) -> BigRational {
    if m > n {
        return BigRational::zero();
    }
    rat(binom(n as i64, m as i64) * factorial(m)) * d_power(n - m, two_l)
}

/// The tabulated closed forms of `∂^{n+k}Q/∂y^n∂x^k (1,0)`.
fn q_table(n: u64, k: usize) -> BigRational {
    let c = BigRational::new(factorial(2 * n), factorial(n));
    let f = rat(factorial(n));
    let nn = rat(n);
    let half = BigRational::new(1.into(), 2.into());
    let p = |e: i64| pow2(2 * n as i64 + e);
    match k {
        0 => p(-1) * &f + &half * &c,
        1 => &half * &c * &nn,
        2 => -(&half * &c * &nn) + p(-2) * &f * &nn,
        3 => &half * &c * &nn * (&nn + rat(2)) - rat(3) * p(-2) * &f * &nn,
        4 => -rat(3) * &c * &nn * (&nn + rat(1)) + rat(3) * p(-3) * &f * &nn * (&nn + rat(7)),
        5 => &c * &nn * (&nn * &nn + rat(17) * &nn + rat(12)) - rat(15) * p(-2) * &f * &nn * (&nn + rat(3)),
        _ => unreachable!(),
    }
}

/// `∂^{n+k}Q/∂x^k∂y^n (1,0)` from the `y^m (1−4y)^{−ℓ}` expansion.
pub fn q_derivative(n: u64, k: usize) -> Result<BigRational> {
    if k > 5 {
        return Err(Error::Precondition(format!("derivative order {k} > 5")));
    }
    let mut d = BigRational::zero();
    for term in q_x_derivative(k) {
        d += rat(term.coeff) * d_term(n, term.m, term.two_l);
    }
    if k == 0 {
        d /= rat(2);
    }
    Ok(d)
}

/// Coefficient of `y^n` in `∂^k_x Q(1,y)`, i.e. `P_n^{(k)}(1)`, computed from
/// the `y^m (1−4y)^{−ℓ}` expansion and cross-checked against the tabulated
/// closed form, direct differentiation of `P_n`, and the moment ladder.
pub fn q_coefficient(n: u64, k: usize) -> Result<BigRational> {
    let d = q_derivative(n, k)?;
    let table = q_table(n, k);
    let coeff = &d / rat(factorial(n));
    let direct = p_n(n).derivative_at(k, &rat(1));
    let ladder = rat(bp_ladder(n, k));
    if d != table || coeff != direct || coeff != ladder {
        return Err(Error::Inconsistent(format!(
            "Q coefficient n={n} k={k}: expansion {d}, table {table}, P_n {direct}, ladder {ladder}"
        )));
    }
    Ok(coeff)
}

/// Both forms of the quartic moment identity at `n`.
pub fn check_lemma4(n: u64) -> Vec<IdentityReport> {
    let ni = n as i64;
    let rhs = rat(BigInt::from(n) * (2 * n - 1)) * pow2(4 * ni - 3);
    let b = |i: i64| binom(2 * ni, ni - i);
    let mut double = BigInt::zero();
    for i in 0..=ni {
        for j in 0..=ni {
            let d = i * i - j * j;
            double += BigInt::from(d * d) * b(i) * b(j);
        }
    }
    let fourth: BigInt = (0..=ni).map(|j| BigInt::from(j).pow(4) * b(j)).sum();
    double -= b(0) * fourth;
    let (b0, b2, b4) = (
        BigInt::from(bnk(n, 0)),
        BigInt::from(bnk(n, 2)),
        BigInt::from(bnk(n, 4)),
    );
    let bform = BigInt::from(2) * &b4 * &b0 - BigInt::from(2) * &b2 * &b2 - b(0) * &b4;
    let mk = |name: &str, lhs: BigInt| {
        let mut r = IdentityReport::new(name, format!("n={n}"), lhs.clone(), rhs.to_integer());
        r.pass = rat(lhs) == rhs;
        r
    };
    vec![mk("lemma4 double sum", double), mk("lemma4 B-form", bform)]
}

/// `Σ_{0≤q≤p≤k} dim sp(2k)_{(2^{k−p},1^{p−q})} · dim sp(4)_{(p,q)} = 2^{4k}`.
pub fn check_odd_l2(k: usize) -> Result<IdentityReport> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let mut lhs = BigUint::zero();
    for p in 0..=k {
        for q in 0..=p {
            let mut parts = vec![2; k - p];
            parts.extend(std::iter::repeat_n(1, p - q));
            let lam = Partition::new(parts)?;
            lhs += dim_sp(&lam, k)? * dim_sp4(p as u64, q as u64)?;
        }
    }
    Ok(IdentityReport::new(
        "odd l=2",
        format!("k={k}"),
        lhs,
        BigUint::one() << (4 * k),
    ))
}

/// Whether any report failed.
pub fn all_pass(reports: &[IdentityReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bnk_examples() {
        assert_eq!(bnk(2, 0), BigUint::from(11u32));
        assert_eq!(bnk_closed(2, 0).unwrap(), rat(11));
        for k in 1..6 {
            assert!(bnk(0, k).is_zero());
        }
        for n in 0..=12u64 {
            assert_eq!(rat(BigInt::from(bnk(n, 2))), pow2(2 * n as i64 - 2) * rat(n));
        }
    }

    #[test]
    fn btilde_examples() {
        assert_eq!(btilde(1, 0).unwrap(), BigUint::from(2u32));
        assert_eq!(btilde(1, 2).unwrap(), BigUint::one());
        assert!(check_btilde(1, 0).unwrap().pass);
        assert!(btilde(0, 1).is_err());
    }

    #[test]
    fn q_examples() {
        // the raw derivative is 12; dividing by 2! gives P_2'(1) = 4 + 2
        assert_eq!(q_derivative(2, 1).unwrap(), rat(12));
        assert_eq!(q_coefficient(2, 1).unwrap(), rat(6));
        assert_eq!(rat(BigInt::from(bnk(2, 1))), rat(6));
        for n in 0..=12 {
            for k in 0..=5 {
                q_coefficient(n, k).unwrap();
            }
        }
        for k in 1..=5 {
            assert!(q_coefficient(0, k).unwrap().is_zero());
        }
        assert!(q_coefficient(3, 6).is_err());
    }

    #[test]
    fn half_integer_power_series() {
        // (1−4y)^{−1/2} = Σ C(2m,m) y^m
        for n in 0..8u64 {
            assert_eq!(d_power(n, 1) / rat(factorial(n)), rat(binom(2 * n as i64, n as i64)));
        }
        // (1−4y)^{−3/2}: derivative of the above divided by 2
        for n in 0..8u64 {
            assert_eq!(d_power(n, 3), d_power(n + 1, 1) / rat(2));
        }
    }

    #[test]
    fn stirling_rows() {
        assert_eq!(stirling1(2), vec![0, -1, 1]);
        assert_eq!(stirling1(5), vec![0, 24, -50, 35, -10, 1]);
    }

    #[test]
    fn lemma4_small() {
        let r = check_lemma4(1);
        assert_eq!(r[0].lhs, BigInt::from(2));
        assert!(r.iter().all(|x| x.pass));
        assert!(check_lemma4(2).iter().all(|x| x.pass));
    }

    #[test]
    fn odd_l2_small() {
        let r = check_odd_l2(2).unwrap();
        assert_eq!(r.lhs, BigInt::from(256));
        assert!(r.pass);
        assert!(check_odd_l2(3).unwrap().pass);
        assert_eq!(check_odd_l2(1).unwrap().lhs, BigInt::from(16));
    }

    #[test]
    fn recursion_and_series() {
        for n in 0..=10 {
            assert!(check_p_recursion(n), "n={n}");
        }
        let s = BigRationalSeries::new(vec![rat(1), rat(1)], 2);
        assert!(s.mul(&s).coeff(2).is_err());
        assert_eq!(s.mul(&s).coeff(1).unwrap(), rat(2));
    }
}
