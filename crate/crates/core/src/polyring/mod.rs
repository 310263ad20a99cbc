//! Sparse multivariate polynomials over Q(κ) with the S_N action.
//!
//! Variables are addressed 1-based (`x_1, ..., x_N`) in every public
//! function; exponent vectors are stored 0-based.

mod perm;
mod serial;

pub use perm::Permutation;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{IntPoly, Rational, Scalar};

/// Exponent vector `α ∈ N_0^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(SmallVec<[u16; 8]>);

impl MultiIndex {
    pub fn new(exps: &[u16]) -> Self {
        MultiIndex(SmallVec::from_slice(exps))
    }

    pub fn zeros(n: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, n))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|α|`.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    /// Exponent of the 0-based variable `k`.
    pub fn get(&self, k: usize) -> u16 {
        self.0[k]
    }

    pub(crate) fn set(&mut self, k: usize, e: u16) {
        self.0[k] = e;
    }

    /// `wα` with `(wα)_{w(k)} = α_k`.
    pub fn permuted(&self, w: &Permutation) -> Self {
        let mut out = self.clone();
        for (k, &e) in self.0.iter().enumerate() {
            out.0[w.image0(k)] = e;
        }
        out
    }

    fn add(&self, other: &Self) -> Self {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Sparse polynomial in `nvars` variables with `Scalar` coefficients.
/// No stored coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(MultiIndex::zeros(nvars), &c);
        p
    }

    /// `c · x^α`.
    pub fn monomial(exps: &[u16], c: Scalar) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(MultiIndex::new(exps), &c);
        p
    }

    /// The variable `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Result<Self> {
        check_index(i, nvars)?;
        let mut exps = vec![0u16; nvars];
        exps[i - 1] = 1;
        Ok(Self::monomial(&exps, Scalar::one()))
    }

    /// `x_1 + ... + x_N`.
    pub fn power_sum1(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        for k in 0..nvars {
            let mut a = MultiIndex::zeros(nvars);
            a.set(k, 1);
            p.add_term(a, &Scalar::one());
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, Scalar)>>(
        nvars: usize,
        terms: I,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (a, c) in terms {
            if a.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: a.len(),
                });
            }
            p.add_term(a, &c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u16]) -> Scalar {
        self.terms
            .get(&MultiIndex::new(exps))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Adds `c · x^α` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, a: MultiIndex, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(a.len(), self.nvars);
        match self.terms.entry(a) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    /// True when every stored term has the same degree (vacuously for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(MultiIndex::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.degree().unwrap_or(0) == 0
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    /// Applies `g` to every coefficient.
    pub fn map_coeffs<F>(&self, g: F) -> Result<Self>
    where
        F: Fn(&Scalar) -> Result<Scalar>,
    {
        let mut out = Self::zero(self.nvars);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), &g(c)?);
        }
        Ok(out)
    }

    /// Substitutes `κ = κ0` in every coefficient.
    pub fn specialize(&self, kappa0: &Rational) -> Result<Self> {
        self.map_coeffs(|c| c.specialize(kappa0).map(|r| Scalar::from_rational(&r)))
    }

    /// `x_i · f` (1-based).
    pub fn mul_var(&self, i: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| {
                    let mut b = a.clone();
                    b.set(i - 1, a.get(i - 1) + 1);
                    (b, c.clone())
                })
                .collect(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    /// The S_N action `x^α ↦ x^{wα}`.
    pub fn permute(&self, w: &Permutation) -> Result<Self> {
        if w.degree() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: w.degree(),
            });
        }
        Ok(Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.permuted(w), c.clone()))
                .collect(),
        })
    }

    /// Applies the transposition `(i, j)` (1-based).
    pub fn swap_vars(&self, i: usize, j: usize) -> Result<Self> {
        self.permute(&Permutation::transposition(self.nvars, i, j)?)
    }

    /// `(f - (i,j) f) / (x_i - x_j)`, computed termwise by the closed
    /// monomial rule.
    pub fn divided_difference(&self, i: usize, j: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        check_index(j, self.nvars)?;
        if i == j {
            return Err(Error::SameIndex(i));
        }
        let mut out = Self::zero(self.nvars);
        for (a, c) in &self.terms {
            divided_difference_term(a, c, i - 1, j - 1, &mut |b, v| out.add_term(b, v));
        }
        Ok(out)
    }

    /// Formal partial derivative in `x_i`.
    pub fn partial(&self, i: usize) -> Result<Self> {
        check_index(i, self.nvars)?;
        let k = i - 1;
        let mut out = Self::zero(self.nvars);
        for (a, c) in &self.terms {
            let e = a.get(k);
            if e == 0 {
                continue;
            }
            let mut b = a.clone();
            b.set(k, e - 1);
            out.add_term(b, &c.mul_int(e as i64));
        }
        Ok(out)
    }

    /// Substitutes a rational point; the result may still depend on κ.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Scalar> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let mut sum = Scalar::zero();
        for (a, c) in &self.terms {
            let mut v = Rational::one();
            for (x, &e) in point.iter().zip(a.exps()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            if !v.is_zero() {
                sum += &(c * &Scalar::from_rational(&v));
            }
        }
        Ok(sum)
    }

    /// Evaluation at `(1, ..., 1)`.
    pub fn eval_ones(&self) -> Scalar {
        let mut sum = Scalar::zero();
        for c in self.terms.values() {
            sum += c;
        }
        sum
    }

    /// Lcm of the coefficient denominators, as a primitive polynomial in κ.
    pub fn denominator_lcm(&self) -> IntPoly {
        self.terms
            .values()
            .filter(|c| !c.denom().is_constant())
            .fold(IntPoly::one(), |l, c| l.lcm(&c.denom_primitive()))
    }

    /// Splits `self = g / l` where every coefficient of `g` has a constant
    /// denominator. Linear operations on `g` then avoid polynomial gcds.
    pub fn cleared(&self) -> (IntPoly, Polynomial) {
        let l = self.denominator_lcm();
        if l.is_one() {
            return (l, self.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| (a.clone(), c.mul_clearing(&l)))
            .collect();
        (
            l,
            Polynomial {
                nvars: self.nvars,
                terms,
            },
        )
    }

    /// Divides every coefficient by the polynomial `l`.
    pub fn div_by(&self, l: &IntPoly) -> Polynomial {
        if l.is_one() {
            return self.clone();
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.div_poly(l)))
                .collect(),
        }
    }

    /// `Σ c_k f_k`, computed over a common denominator.
    pub fn linear_combination(nvars: usize, items: &[(Scalar, &Polynomial)]) -> Result<Polynomial> {
        let mut parts = Vec::with_capacity(items.len());
        let mut common = IntPoly::one();
        for (c, f) in items {
            if f.nvars != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    found: f.nvars,
                });
            }
            if c.is_zero() || f.is_zero() {
                continue;
            }
            let (l, g) = f.cleared();
            let s = c.div_poly(&l);
            common = common.lcm(&s.denom_primitive());
            parts.push((s, g));
        }
        let mut out = Polynomial::zero(nvars);
        for (s, g) in &parts {
            let m = s.mul_clearing(&common);
            for (a, v) in &g.terms {
                out.add_term(a.clone(), &(v * &m));
            }
        }
        Ok(out.div_by(&common))
    }

    /// If `self = c · other` for a single scalar `c`, returns `c`.
    pub fn ratio_to(&self, other: &Self) -> Option<Scalar> {
        if self.nvars != other.nvars || self.len() != other.len() || other.is_zero() {
            return None;
        }
        let mut ratio: Option<Scalar> = None;
        for ((a, c), (b, d)) in self.terms.iter().zip(&other.terms) {
            if a != b {
                return None;
            }
            let r = c / d;
            match &ratio {
                None => ratio = Some(r),
                Some(q) if *q == r => {}
                Some(_) => return None,
            }
        }
        ratio
    }
}

pub(crate) fn check_index(i: usize, nvars: usize) -> Result<()> {
    if i == 0 || i > nvars {
        Err(Error::Index { index: i, nvars })
    } else {
        Ok(())
    }
}

/// Emits the terms of `c · (x^α - x^{(i,j)α}) / (x_i - x_j)` (0-based i, j).
pub(crate) fn divided_difference_term<F>(
    a: &MultiIndex,
    c: &Scalar,
    i: usize,
    j: usize,
    emit: &mut F,
) where
    F: FnMut(MultiIndex, &Scalar),
{
    let (ai, aj) = (a.get(i), a.get(j));
    if ai == aj {
        return;
    }
    let (lo, hi) = (ai.min(aj), ai.max(aj));
    let coef = if ai > aj { c.clone() } else { -c };
    let top = hi - lo - 1;
    let mut b = a.clone();
    for k in 0..=top {
        b.set(i, lo + top - k);
        b.set(j, lo + k);
        emit(b.clone(), &coef);
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs)
            .expect("adding polynomials in different dimensions");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c);
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs)
            .expect("subtracting polynomials in different dimensions");
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), &-c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_same(rhs)
            .expect("multiplying polynomials in different dimensions");
        let mut out = Polynomial::zero(self.nvars);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.add(b), &(c * d));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (a, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let mono: Vec<String> = a
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| {
                    if e == 1 {
                        format!("x{}", k + 1)
                    } else {
                        format!("x{}^{}", k + 1, e)
                    }
                })
                .collect();
            let cs = c.to_string();
            let needs_paren = cs.contains([' ', '/']);
            if mono.is_empty() {
                write!(f, "{cs}")?;
            } else if c.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else if needs_paren {
                write!(f, "({cs})*{}", mono.join("*"))?;
            } else {
                write!(f, "{cs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i).unwrap()
    }

    #[test]
    fn transposition_swaps_exponents() {
        let f = Polynomial::monomial(&[2, 1], Scalar::one());
        let g = f.swap_vars(1, 2).unwrap();
        assert_eq!(g, Polynomial::monomial(&[1, 2], Scalar::one()));
        assert_eq!(g.swap_vars(1, 2).unwrap(), f);
        assert_eq!(f.permute(&Permutation::identity(2)).unwrap(), f);
    }

    #[test]
    fn divided_difference_examples() {
        let n = 3;
        let one = Polynomial::one(n);
        assert_eq!(x(n, 1).divided_difference(1, 2).unwrap(), one);
        let sq = &x(n, 1) * &x(n, 1);
        assert_eq!(sq.divided_difference(1, 2).unwrap(), &x(n, 1) + &x(n, 2));
        let sym = &(&x(n, 1) * &x(n, 2)) + &x(n, 3);
        assert!(sym.divided_difference(1, 2).unwrap().is_zero());
        assert!(matches!(
            sq.divided_difference(1, 1),
            Err(Error::SameIndex(1))
        ));
        assert!(matches!(
            sq.divided_difference(1, 4),
            Err(Error::Index { .. })
        ));
    }

    #[test]
    fn partial_examples() {
        let cube = Polynomial::monomial(&[3, 0], Scalar::one());
        assert_eq!(
            cube.partial(1).unwrap(),
            Polynomial::monomial(&[2, 0], Scalar::from_int(3))
        );
        assert!(Polynomial::constant(2, Scalar::from_int(5))
            .partial(2)
            .unwrap()
            .is_zero());
        assert!(x(2, 2).partial(1).unwrap().is_zero());
        assert!(x(2, 2).partial(3).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let ones = vec![Rational::one(), Rational::one()];
        assert_eq!(
            (&x(2, 1) * &x(2, 2)).evaluate(&ones).unwrap(),
            Scalar::one()
        );
        let k = Scalar::kappa();
        let f = &x(2, 1) + &(&x(2, 1) + &x(2, 2)).scale(&k);
        assert_eq!(f.evaluate(&ones).unwrap(), Scalar::one() + k.mul_int(2));
        let origin = vec![Rational::zero(); 2];
        assert!(f.evaluate(&origin).unwrap().is_zero());
        assert!(f.evaluate(&ones[..1]).is_err());
    }

    #[test]
    fn ratio_detects_scalar_multiples() {
        let f = &x(2, 1) - &x(2, 2);
        let g = f.scale(&Scalar::ratio(-3, 2));
        assert_eq!(g.ratio_to(&f), Some(Scalar::ratio(-3, 2)));
        assert_eq!((&g + &x(2, 1)).ratio_to(&f), None);
    }
}
