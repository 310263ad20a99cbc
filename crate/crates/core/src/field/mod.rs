//! Exact scalar arithmetic in Q and Q(κ).

mod intpoly;
mod scalar;

pub use intpoly::IntPoly;
pub use scalar::Scalar;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Formats a rational as `"p/q"`, always including the denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: format!("{msg} in rational {s:?}"),
    };
    let (p, q) = match t.split_once('/') {
        Some((p, q)) => (p.trim(), Some((q.trim(), p.len() + 1))),
        None => (t, None),
    };
    let num: BigInt = p.parse().map_err(|_| bad(0, "bad numerator"))?;
    let den: BigInt = match q {
        Some((q, pos)) => q.parse().map_err(|_| bad(pos, "bad denominator"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad(t.len(), "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`.
pub fn pochhammer(a: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::one();
    let mut term = a.clone();
    let one = Scalar::one();
    for _ in 0..n {
        acc = &acc * &term;
        term = &term + &one;
    }
    acc
}

/// Rising factorial of a rational argument.
pub fn pochhammer_q(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Terminating hypergeometric sum
/// `Σ_{j=0}^{k_max} Π(a_i)_j / Π(b_i)_j · z^j / j!`.
///
/// Stops early once a numerator factor vanishes identically; a denominator
/// factor vanishing while the running numerator is nonzero is an error.
pub fn hyp_terminating(
    numer: &[Scalar],
    denom: &[Scalar],
    z: &Scalar,
    k_max: usize,
) -> Result<Scalar> {
    let mut sum = Scalar::one();
    let mut term = Scalar::one();
    for j in 1..=k_max {
        let shift = Scalar::from_int(j as i64 - 1);
        let mut num_factor = z.clone();
        for a in numer {
            num_factor = &num_factor * &(a + &shift);
        }
        if num_factor.is_zero() {
            break;
        }
        let mut den_factor = Scalar::from_int(j as i64);
        for b in denom {
            let f = b + &shift;
            if f.is_zero() {
                return Err(Error::DegenerateParameter { term: j });
            }
            den_factor = &den_factor * &f;
        }
        term = &term * &(&num_factor / &den_factor);
        sum += &term;
    }
    Ok(sum)
}

/// Sign `(-1)^k`.
pub fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub(crate) fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub(crate) fn is_neg_integer(r: &Rational) -> bool {
    is_integer(r) && r.is_negative()
}
