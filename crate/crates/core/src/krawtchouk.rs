//! Symmetric Krawtchouk polynomials, the `q_{mn}` basis and the series
//! `A_n(u; κ)`, `B_n(u; κ)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dunkl::DunklContext;
use crate::error::{Error, Result};
use crate::field::{binomial, factorial, pochhammer_q, rational, sign, Rational, Scalar};
use crate::jackbasis::{PBasis, PExpansion};
use crate::polyring::Polynomial;

/// Parameters of `K_m(t; n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrawtchoukParams {
    pub n: usize,
    pub m: usize,
    pub t: Rational,
}

impl KrawtchoukParams {
    pub fn new(m: usize, t: Rational, n: usize) -> Result<Self> {
        if m > n {
            return Err(Error::Range(format!(
                "Krawtchouk degree {m} exceeds n = {n}"
            )));
        }
        Ok(KrawtchoukParams { n, m, t })
    }

    pub fn eval(&self) -> Rational {
        let (m, n) = (self.m, self.n);
        let t = &self.t;
        let tn = t - Rational::from_integer(BigInt::from(n));
        let neg_t = -t.clone();
        let mut acc = Rational::zero();
        for j in 0..=m {
            let term = pochhammer_q(&tn, m - j) * pochhammer_q(&neg_t, j)
                / Rational::from_integer(factorial(m - j) * factorial(j));
            acc += term * Rational::from_integer(sign(m - j).into());
        }
        acc / Rational::from_integer(binomial(n, m as i64))
    }
}

/// `K_m(t; n) = binom(n,m)^{-1} Σ_j (t-n)_{m-j} (-t)_j / ((m-j)! j!) (-1)^{m-j}`.
pub fn krawtchouk(m: usize, t: &Rational, n: usize) -> Result<Rational> {
    Ok(KrawtchoukParams::new(m, t.clone(), n)?.eval())
}

/// `[u^m v^n] (u+v)^i (u-v)^j`, for `i + j = m + n`.
pub fn q_coefficient(i: usize, j: usize, m: usize, n: usize) -> BigInt {
    if i + j != m + n {
        return BigInt::zero();
    }
    // r = power of u taken from (u-v)^j
    (0..=j.min(m))
        .map(|r| binomial(i, (m - r) as i64) * binomial(j, r as i64) * sign(j - r))
        .sum()
}

/// `q_{mn}` written in the `p`-basis.
pub fn q_p_expansion(m: usize, n: usize) -> PExpansion {
    let d = m + n;
    let mut e = PExpansion::new();
    for j in 0..=d {
        let c = q_coefficient(d - j, j, m, n);
        e.add((d - j, j), &Scalar::from_bigint(c));
    }
    e
}

impl PBasis {
    pub fn q(&self, m: usize, n: usize) -> Result<Polynomial> {
        self.expand(&q_p_expansion(m, n))
    }
}

/// `q_{mn}`, homogeneous of degree `m + n`.
pub fn q_poly(m: usize, n: usize, ctx: &DunklContext) -> Result<Polynomial> {
    PBasis::new(ctx).q(m, n)
}

/// Converts the coefficients `c_i` of `p_{n-i,i}` into the coefficients
/// `d_i` of `q_{n-i,i}`: `d_i = 2^{-n} Σ_j binom(n,j) c_j K_i(j; n)`.
pub fn p_to_q(c: &[Scalar]) -> Vec<Scalar> {
    if c.is_empty() {
        return Vec::new();
    }
    let n = c.len() - 1;
    let scale = Scalar::from_rational(&Rational::new(BigInt::one(), BigInt::from(2).pow(n as u32)));
    (0..=n)
        .map(|i| {
            let mut acc = Scalar::zero();
            for (j, cj) in c.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let k = krawtchouk(i, &Rational::from_integer(j.into()), n).expect("i <= n")
                    * Rational::from_integer(binomial(n, j as i64));
                acc += &(cj * &Scalar::from_rational(&k));
            }
            &acc * &scale
        })
        .collect()
}

/// Truncated power series in one variable `u` over Q(κ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateSeries {
    coeffs: Vec<Scalar>,
    truncation: usize,
}

impl UnivariateSeries {
    pub fn new(mut coeffs: Vec<Scalar>, truncation: usize) -> Self {
        coeffs.truncate(truncation + 1);
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UnivariateSeries { coeffs, truncation }
    }

    pub fn zero(truncation: usize) -> Self {
        Self::new(Vec::new(), truncation)
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest power with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Same series cut at a lower truncation.
    pub fn truncate(&self, t: usize) -> Self {
        Self::new(self.coeffs.clone(), t.min(self.truncation))
    }

    pub fn map_coeffs<F: Fn(&Scalar) -> Result<Scalar>>(&self, g: F) -> Result<Self> {
        let c = self.coeffs.iter().map(g).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(c, self.truncation))
    }

    fn mul(&self, other: &Self) -> Self {
        let t = self.truncation.min(other.truncation);
        let mut out = vec![Scalar::zero(); (self.coeffs.len() + other.coeffs.len()).min(t + 1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > t {
                    break;
                }
                out[i + j] += &(a * b);
            }
        }
        Self::new(out, t)
    }

    fn add(&self, other: &Self) -> Self {
        let t = self.truncation.min(other.truncation);
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..len).map(|k| &self.coeff(k) + &other.coeff(k)).collect(),
            t,
        )
    }
}

impl fmt::Display for UnivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*u")?,
                _ => write!(f, "({c})*u^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.truncation + 1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbKind {
    A,
    B,
}

impl fmt::Display for AbKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbKind::A => "A",
            AbKind::B => "B",
        })
    }
}

/// `[v^n] (1 - (u ± v))^{-a}` as a series in `u`: coefficient of `u^e` is
/// `(a)_{e+n}/(e+n)! · binom(e+n, n) · (±1)^n`.
fn shifted_factor(a: &Scalar, n: usize, minus: bool, trunc: usize) -> UnivariateSeries {
    let mut coeffs = Vec::with_capacity(trunc + 1);
    let sgn = if minus { sign(n) } else { 1 };
    // (a)_k / k! built incrementally up to k = n + trunc
    let mut nb = Scalar::one();
    for k in 0..n {
        nb = &(&nb * &(a + &Scalar::from_int(k as i64))) * &Scalar::ratio(1, k as i64 + 1);
    }
    for e in 0..=trunc {
        let k = e + n;
        if e > 0 {
            nb = &(&nb * &(a + &Scalar::from_int(k as i64 - 1))) * &Scalar::ratio(1, k as i64);
        }
        coeffs.push(nb.mul_int(sgn) * Scalar::from_bigint(binomial(k, n as i64)));
    }
    UnivariateSeries::new(coeffs, trunc)
}

/// `A_n(u; κ)` or `B_n(u; κ)` from the bivariate definition, with κ taken
/// from the context and the result truncated at `u^trunc`.
pub fn ab_series(
    kind: AbKind,
    n: usize,
    ctx: &DunklContext,
    trunc: usize,
) -> Result<UnivariateSeries> {
    let kappa = ctx.kappa();
    let a_plus = match kind {
        AbKind::A => kappa.clone(),
        AbKind::B => &kappa + &Scalar::one(),
    };
    let mut out = UnivariateSeries::zero(trunc);
    for b in 0..=n {
        let f = shifted_factor(&a_plus, b, false, trunc);
        let g = shifted_factor(&kappa, n - b, true, trunc);
        out = out.add(&f.mul(&g));
    }
    out.map_coeffs(|c| ctx.eval(c))
}

/// Closed forms at `κ = -l - 1/2`, valid for `n <= 2l`:
/// `A_{2j} = (-l-1/2)_j/j! (1-u)^{2l+1-2j}`, `A_{odd} = 0`,
/// `B_n = (-l+1/2)_{⌊n/2⌋}/⌊n/2⌋! (1-u)^{2l-n}`.
pub fn ab_closed(kind: AbKind, n: usize, l: usize) -> Result<UnivariateSeries> {
    if n > 2 * l {
        return Err(Error::Range(format!(
            "closed form needs n <= 2l, got n = {n}, l = {l}"
        )));
    }
    let half = rational(1, 2);
    let li = Rational::from_integer(BigInt::from(l));
    let (lead, power) = match kind {
        AbKind::A => {
            if n % 2 == 1 {
                return Ok(UnivariateSeries::zero(2 * l + 1 - n));
            }
            let j = n / 2;
            (
                pochhammer_q(&(-li - half), j) / Rational::from_integer(factorial(j)),
                2 * l + 1 - n,
            )
        }
        AbKind::B => {
            let j = n / 2;
            (
                pochhammer_q(&(half - li), j) / Rational::from_integer(factorial(j)),
                2 * l - n,
            )
        }
    };
    let coeffs = (0..=power)
        .map(|k| {
            let b = Rational::from_integer(binomial(power, k as i64) * sign(k));
            Scalar::from_rational(&(&lead * b))
        })
        .collect();
    Ok(UnivariateSeries::new(coeffs, power))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jackbasis::p_poly;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn krawtchouk_examples() {
        for n in 1..6 {
            for m in 0..=n {
                assert_eq!(krawtchouk(m, &q(0), n).unwrap(), q(1));
            }
        }
        assert_eq!(krawtchouk(1, &q(1), 2).unwrap(), q(0));
        assert_eq!(
            krawtchouk(2, &q(3), 4).unwrap(),
            krawtchouk(2, &q(1), 4).unwrap()
        );
        assert!(krawtchouk(3, &q(0), 2).is_err());
    }

    #[test]
    fn first_degree_matches_linear_formula() {
        // K_1(t; n) = 1 - 2t/n
        for n in 1..8usize {
            for t in 0..=n as i64 {
                let want = q(1) - rational(2 * t, n as i64);
                assert_eq!(krawtchouk(1, &q(t), n).unwrap(), want);
            }
        }
    }

    #[test]
    fn q_low_degree() {
        let ctx = DunklContext::generic(3).unwrap();
        assert_eq!(q_poly(0, 0, &ctx).unwrap(), Polynomial::one(3));
        let p10 = p_poly(1, 0, &ctx).unwrap();
        let p01 = p_poly(0, 1, &ctx).unwrap();
        assert_eq!(q_poly(1, 0, &ctx).unwrap(), &p10 + &p01);
        assert_eq!(q_poly(0, 1, &ctx).unwrap(), &p10 - &p01);
    }

    #[test]
    fn q20_vanishes_at_half() {
        let ctx = DunklContext::specialized(3, rational(-1, 2)).unwrap();
        assert!(q_poly(2, 0, &ctx).unwrap().is_zero());
    }

    #[test]
    fn p_to_q_examples() {
        let d = p_to_q(&[Scalar::one(), Scalar::zero()]);
        assert_eq!(d, vec![Scalar::ratio(1, 2), Scalar::ratio(1, 2)]);
        let z = p_to_q(&vec![Scalar::zero(); 4]);
        assert!(z.iter().all(Scalar::is_zero));
    }

    #[test]
    fn ab_examples() {
        let ctx = DunklContext::specialized(2, rational(-1, 2)).unwrap();
        let a0 = ab_series(AbKind::A, 0, &ctx, 4).unwrap();
        assert_eq!(a0.coeffs(), &[Scalar::one(), Scalar::from_int(-1)]);
        let b0 = ab_series(AbKind::B, 0, &ctx, 4).unwrap();
        assert_eq!(b0.coeffs(), &[Scalar::one()]);
        let ctx3 = DunklContext::specialized(2, rational(-3, 2)).unwrap();
        assert!(ab_series(AbKind::A, 1, &ctx3, 6).unwrap().is_zero());
        assert_eq!(
            ab_closed(AbKind::A, 0, 0).unwrap().coeffs(),
            &[Scalar::one(), Scalar::from_int(-1)]
        );
        assert!(ab_closed(AbKind::A, 1, 1).unwrap().is_zero());
        assert_eq!(
            ab_closed(AbKind::B, 2, 1).unwrap().coeffs(),
            &[Scalar::ratio(-1, 2)]
        );
        assert!(ab_closed(AbKind::B, 3, 1).is_err());
    }

    #[test]
    fn generic_a0_low_order() {
        // (1-u)^{-2κ} = 1 + 2κu + κ(2κ+1)u² + ...
        let ctx = DunklContext::generic(2).unwrap();
        let a0 = ab_series(AbKind::A, 0, &ctx, 2).unwrap();
        let k = Scalar::kappa();
        assert_eq!(a0.coeff(1), k.mul_int(2));
        assert_eq!(a0.coeff(2), &k * &(&k.mul_int(2) + &Scalar::one()));
    }
}
