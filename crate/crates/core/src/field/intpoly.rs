//! Dense univariate polynomials in the parameter κ with integer coefficients.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so the
//! zero polynomial is the empty vector.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = IntPoly(vec![c]);
        p.trim();
        p
    }

    /// The monomial κ.
    pub fn kappa() -> Self {
        IntPoly(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly(coeffs);
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn lead(&self) -> &BigInt {
        self.0
            .last()
            .expect("leading coefficient of zero polynomial")
    }

    /// The constant coefficient, zero for the zero polynomial.
    pub fn constant_term(&self) -> BigInt {
        self.0.first().cloned().unwrap_or_default()
    }

    pub fn neg(&self) -> Self {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, s) in out.iter_mut().zip(&short.0) {
            *o += s;
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.0.get(k);
            let b = other.0.get(k);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            });
        }
        IntPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if other.0.len() == 1 {
            return self.scale(&other.0[0]);
        }
        if self.0.len() == 1 {
            return other.scale(&self.0[0]);
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_int(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        IntPoly(
            self.0
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero(), "inexact integer division");
                    a / c
                })
                .collect(),
        )
    }

    /// Multiply by κ^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.0.iter().cloned());
        IntPoly(out)
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.lead().is_negative() {
            c = -c;
        }
        self.div_int(&c)
    }

    /// Pseudo-remainder of `self` by `b`, up to a nonzero constant factor.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree();
        let lb = b.lead();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= db {
            let lr = r.lead().clone();
            let shift = r.degree() - db;
            let g = lr.gcd(lb);
            let (fr, fb) = (lb / &g, &lr / &g);
            r = r.scale(&fr).sub(&b.scale(&fb).shift(shift));
        }
        r.primitive()
    }

    /// Greatest common divisor over Q[κ], returned primitive with positive
    /// leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        if self.is_constant() || other.is_constant() {
            return IntPoly::one();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            if r.is_constant() {
                return IntPoly::one();
            }
            a = b;
            b = r;
        }
    }

    /// Least common multiple over Q[κ], primitive with positive leading
    /// coefficient.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_constant() {
            return other.primitive();
        }
        if other.is_constant() {
            return self.primitive();
        }
        let g = self.gcd(other);
        self.primitive().mul(&other.primitive().exact_div(&g))
    }

    /// Exact quotient `self / b`, where `b` is primitive and divides `self`
    /// in Q[κ].
    pub fn exact_div(&self, b: &Self) -> Self {
        assert!(!b.is_zero(), "division by zero polynomial");
        if b.is_one() {
            return self.clone();
        }
        if b.is_constant() {
            return self.div_int(&b.0[0]);
        }
        if self.is_zero() {
            return IntPoly::zero();
        }
        let db = b.degree();
        let lb = b.lead();
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); self.degree() + 1 - db];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(lb);
            debug_assert!(rem.is_zero(), "inexact polynomial division");
            for (j, bj) in b.0.iter().enumerate() {
                r[k + j] -= &c * bj;
            }
            q[k] = c;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "nonzero remainder");
        IntPoly::from_coeffs(q)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + Rational::from_integer(c.clone());
        }
        acc
    }

    pub fn write_with_var(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{var}^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_with_var(f, "κ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // (k+1)(k+2) and (k+1)(2k-3)
        let a = p(&[2, 3, 1]);
        let b = p(&[-3, -1, 2]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(p(&[1, 1]).gcd(&p(&[2, 1])), IntPoly::one());
        assert_eq!(p(&[0, 6]).gcd(&p(&[4])), IntPoly::one());
    }

    #[test]
    fn exact_division_recovers_factor() {
        let a = p(&[1, 1]);
        let b = p(&[-3, 0, 2, 5]);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&a), b);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), 1);
        assert_eq!(p(&[3, -3]).sub(&p(&[3, -3])), IntPoly::zero());
    }
}
