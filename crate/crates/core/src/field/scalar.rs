use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::intpoly::IntPoly;
use super::Rational;
use crate::error::{Error, Result};

/// An element of Q(κ): a reduced quotient of integer polynomials in κ.
///
/// Canonical form: numerator and denominator share no polynomial factor, the
/// integer content of the pair is 1 and the denominator's leading coefficient
/// is positive. Zero is `0/1`. Equality is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
}

impl Scalar {
    /// The formal parameter κ.
    pub fn kappa() -> Self {
        Scalar {
            num: IntPoly::kappa(),
            den: IntPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            num: IntPoly::constant(BigInt::from(n)),
            den: IntPoly::one(),
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar {
            num: IntPoly::constant(n),
            den: IntPoly::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Scalar {
            num: IntPoly::constant(r.numer().clone()),
            den: IntPoly::constant(r.denom().clone()),
        }
    }

    /// `p/q` with small integers; panics on `q = 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::from_rational(&Rational::new(p.into(), q.into()))
    }

    /// Builds a scalar from an arbitrary numerator/denominator pair.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Range("zero denominator".into()));
        }
        Ok(Self::reduce(num, den))
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational when the scalar does not depend on κ.
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.is_constant() {
            return None;
        }
        Some(Rational::new(
            self.num.constant_term(),
            self.den.constant_term(),
        ))
    }

    /// Full reduction: polynomial gcd, then integer content, then sign.
    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_constant() || num.is_constant() {
            return Self::reduce_content(num, den);
        }
        let g = num.gcd(&den);
        if g.is_one() {
            Self::reduce_content(num, den)
        } else {
            Self::reduce_content(num.exact_div(&g), den.exact_div(&g))
        }
    }

    /// Reduction for pairs already known to be coprime over Q[κ].
    fn reduce_content(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let mut c = den.content();
        if !c.is_one() {
            c = c.gcd(&num.content());
        }
        if den.lead().is_negative() {
            c = -c;
        }
        if c.is_one() {
            Scalar { num, den }
        } else {
            Scalar {
                num: num.div_int(&c),
                den: den.div_int(&c),
            }
        }
    }

    /// Primitive part of the denominator (1 when the denominator is constant).
    pub fn denom_primitive(&self) -> IntPoly {
        if self.den.is_constant() {
            IntPoly::one()
        } else {
            self.den.primitive()
        }
    }

    /// `self · l`, where `l` is a multiple of the denominator's primitive
    /// part; the result has a constant denominator.
    pub fn mul_clearing(&self, l: &IntPoly) -> Self {
        if self.is_zero() {
            return Scalar::zero();
        }
        let q = l.exact_div(&self.denom_primitive());
        let content = IntPoly::constant(self.den.content());
        Self::reduce_content(self.num.mul(&q), content)
    }

    /// `self / l` for a nonzero polynomial `l`.
    pub fn div_poly(&self, l: &IntPoly) -> Self {
        if l.is_one() {
            return self.clone();
        }
        Self::reduce(self.num.clone(), self.den.mul(l))
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero scalar");
        Self::reduce_content(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            None
        } else {
            Some(self * &other.inv())
        }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        if k == 0 || self.is_zero() {
            return Scalar::zero();
        }
        if k == 1 {
            return self.clone();
        }
        Self::reduce_content(self.num.scale(&BigInt::from(k)), self.den.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at `κ = κ0`.
    pub fn specialize(&self, kappa0: &Rational) -> Result<Rational> {
        let d = self.den.eval(kappa0);
        if d.is_zero() {
            return Err(Error::Pole {
                kappa: kappa0.clone(),
            });
        }
        Ok(self.num.eval(kappa0) / d)
    }

    pub fn to_json(&self) -> Value {
        let list =
            |p: &IntPoly| -> Value { Value::Array(p.coeffs().iter().map(bigint_json).collect()) };
        json!({ "num": list(&self.num), "den": list(&self.den) })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |name: &str| -> Result<IntPoly> {
            let arr = v
                .get(name)
                .and_then(Value::as_array)
                .ok_or_else(|| parse_err(format!("scalar missing \"{name}\" list")))?;
            let coeffs = arr.iter().map(json_bigint).collect::<Result<Vec<_>>>()?;
            Ok(IntPoly::from_coeffs(coeffs))
        };
        let num = field("num")?;
        let den = field("den")?;
        if den.is_zero() {
            return Err(parse_err("scalar with zero denominator".into()));
        }
        Ok(Scalar::reduce(num, den))
    }
}

fn parse_err(msg: String) -> Error {
    Error::Parse { pos: 0, msg }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    let n: serde_json::Number = c
        .to_string()
        .parse()
        .expect("integer literal is a JSON number");
    Value::Number(n)
}

pub(crate) fn json_bigint(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse()
            .map_err(|_| parse_err(format!("expected integer, found {n}"))),
        Value::String(s) => s
            .parse()
            .map_err(|_| parse_err(format!("expected integer, found {s:?}"))),
        other => Err(parse_err(format!("expected integer, found {other}"))),
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<&Rational> for Scalar {
    fn from(r: &Rational) -> Self {
        Scalar::from_rational(r)
    }
}

fn add_impl(a: &Scalar, b: &Scalar, negate_b: bool) -> Scalar {
    let bn = if negate_b { b.num.neg() } else { b.num.clone() };
    if a.is_zero() {
        return Scalar {
            num: bn,
            den: b.den.clone(),
        };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den.is_constant() && b.den.is_constant() {
        let (d1, d2) = (&a.den.coeffs()[0], &b.den.coeffs()[0]);
        if d1 == d2 {
            return Scalar::reduce_content(a.num.add(&bn), a.den.clone());
        }
        let g = d1.gcd(d2);
        let (f1, f2) = (d2 / &g, d1 / &g);
        let num = a.num.scale(&f1).add(&bn.scale(&f2));
        return Scalar::reduce_content(num, IntPoly::constant(d1 * f1));
    }
    if a.den == b.den {
        return Scalar::reduce(a.num.add(&bn), a.den.clone());
    }
    let g = a.den.gcd(&b.den);
    let (fa, fb) = (b.den.exact_div(&g), a.den.exact_div(&g));
    let num = a.num.mul(&fa).add(&bn.mul(&fb));
    Scalar::reduce(num, a.den.mul(&fa))
}

fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
    if a.is_zero() || b.is_zero() {
        return Scalar::zero();
    }
    if a.den.is_constant() && b.den.is_constant() {
        return Scalar::reduce_content(a.num.mul(&b.num), a.den.mul(&b.den));
    }
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let num = a.num.exact_div(&g1).mul(&b.num.exact_div(&g2));
    let den = a.den.exact_div(&g2).mul(&b.den.exact_div(&g1));
    Scalar::reduce_content(num, den)
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        add_impl(self, rhs, false)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        add_impl(self, rhs, true)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        mul_impl(self, rhs)
    }
}

impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = add_impl(self, rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = add_impl(self, rhs, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = mul_impl(self, rhs);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paren = |p: &IntPoly| p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1;
        if paren(&self.num) && !self.den.is_one() {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if !self.den.is_one() {
            if paren(&self.den) || !self.den.is_constant() {
                write!(f, "/({})", self.den)?;
            } else {
                write!(f, "/{}", self.den)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> Scalar {
        Scalar::kappa()
    }

    #[test]
    fn cancels_common_factor() {
        let one = Scalar::one();
        // (k^2 - 1)/(k + 1) = k - 1
        let a = (&k() * &k() - &one) / (&k() + &one);
        assert_eq!(a, &k() - &one);
        assert!(a.denom().is_one());
    }

    #[test]
    fn denominator_sign_normalized() {
        let a = Scalar::one() / (Scalar::from_int(-2) * k());
        assert!(a.denom().lead() > &BigInt::zero());
        assert_eq!(a.numer().coeffs()[0], BigInt::from(-1));
    }

    #[test]
    fn content_reduced_across_pair() {
        let a = Scalar::from_parts(
            IntPoly::from_coeffs(vec![2.into(), 4.into()]),
            IntPoly::from_coeffs(vec![6.into()]),
        )
        .unwrap();
        assert_eq!(a.numer().coeffs(), &[BigInt::from(1), BigInt::from(2)]);
        assert_eq!(a.denom().coeffs(), &[BigInt::from(3)]);
    }

    #[test]
    fn constant_round_trips_to_rational() {
        let r = Rational::new((-3).into(), 7.into());
        assert_eq!(Scalar::from_rational(&r).as_rational(), Some(r));
        assert_eq!(k().as_rational(), None);
    }

    #[test]
    fn specialize_examples() {
        let s = &k() * &k() + k();
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(
            s.specialize(&half).unwrap(),
            Rational::new(3.into(), 4.into())
        );
        let pole = Scalar::one() / (&k() + &Scalar::one());
        let minus_one = Rational::from_integer((-1).into());
        assert!(matches!(
            pole.specialize(&minus_one),
            Err(Error::Pole { .. })
        ));
        assert_eq!(
            Scalar::from_int(7).specialize(&half).unwrap(),
            Rational::from_integer(7.into())
        );
    }

    #[test]
    fn json_round_trip() {
        let a =
            (&k() * &k() - Scalar::from_int(3)) / (Scalar::from_int(2) * k() + Scalar::from_int(5));
        assert_eq!(Scalar::from_json(&a.to_json()).unwrap(), a);
        let big = Scalar::from_bigint("123456789012345678901234567890".parse().unwrap());
        assert_eq!(Scalar::from_json(&big.to_json()).unwrap(), big);
    }
}
