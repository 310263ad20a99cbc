//! Dunkl operators of the symmetric group and related operators.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{binomial, is_neg_integer, Rational, Scalar};
use crate::polyring::{check_index, divided_difference_term, Permutation, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KappaMode {
    /// κ kept as a formal symbol.
    Generic,
    /// κ fixed to an exact rational value.
    Specialized(Rational),
}

/// Ambient dimension `N` together with the κ-mode.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DunklContext {
    nvars: usize,
    mode: KappaMode,
}

impl DunklContext {
    pub fn new(nvars: usize, mode: KappaMode) -> Result<Self> {
        if nvars < 2 {
            return Err(Error::Range(format!("N must be at least 2, got {nvars}")));
        }
        Ok(DunklContext { nvars, mode })
    }

    pub fn generic(nvars: usize) -> Result<Self> {
        Self::new(nvars, KappaMode::Generic)
    }

    pub fn specialized(nvars: usize, kappa: Rational) -> Result<Self> {
        Self::new(nvars, KappaMode::Specialized(kappa))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mode(&self) -> &KappaMode {
        &self.mode
    }

    /// The specialized value, if any.
    pub fn kappa_value(&self) -> Option<&Rational> {
        match &self.mode {
            KappaMode::Generic => None,
            KappaMode::Specialized(k) => Some(k),
        }
    }

    /// κ as a scalar: the symbol in generic mode, the constant otherwise.
    pub fn kappa(&self) -> Scalar {
        match &self.mode {
            KappaMode::Generic => Scalar::kappa(),
            KappaMode::Specialized(k) => Scalar::from_rational(k),
        }
    }

    /// Substitutes the specialized κ into a κ-dependent scalar; identity in
    /// generic mode.
    pub fn eval(&self, s: &Scalar) -> Result<Scalar> {
        match &self.mode {
            KappaMode::Generic => Ok(s.clone()),
            KappaMode::Specialized(k) => s.specialize(k).map(|r| Scalar::from_rational(&r)),
        }
    }

    /// Same dimension, different κ-mode.
    pub fn with_mode(&self, mode: KappaMode) -> Self {
        DunklContext {
            nvars: self.nvars,
            mode,
        }
    }

    pub fn with_nvars(&self, nvars: usize) -> Result<Self> {
        Self::new(nvars, self.mode.clone())
    }

    /// True when κ is specialized to a negative integer.
    pub fn kappa_is_neg_integer(&self) -> bool {
        self.kappa_value().is_some_and(is_neg_integer)
    }

    pub(crate) fn check(&self, f: &Polynomial) -> Result<()> {
        if f.nvars() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: f.nvars(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for DunklContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mode {
            KappaMode::Generic => write!(f, "N={} kappa=generic", self.nvars),
            KappaMode::Specialized(k) => write!(f, "N={} kappa={}", self.nvars, k),
        }
    }
}

/// `D_i f = ∂f/∂x_i + κ Σ_{j≠i} (f - (i,j)f)/(x_i - x_j)`.
pub fn dunkl(i: usize, f: &Polynomial, ctx: &DunklContext) -> Result<Polynomial> {
    ctx.check(f)?;
    check_index(i, ctx.nvars)?;
    let n = ctx.nvars;
    let k = i - 1;
    let (common, f) = f.cleared();
    let mut deriv = Polynomial::zero(n);
    let mut diffs = Polynomial::zero(n);
    for (a, c) in f.terms() {
        let e = a.get(k);
        if e > 0 {
            let mut b = a.clone();
            b.set(k, e - 1);
            deriv.add_term(b, &c.mul_int(e as i64));
        }
        for j in (0..n).filter(|&j| j != k) {
            divided_difference_term(a, c, k, j, &mut |b, v| diffs.add_term(b, v));
        }
    }
    Ok((&deriv + &diffs.scale(&ctx.kappa())).div_by(&common))
}

/// All `D_1 f, ..., D_N f`.
pub fn dunkl_all(f: &Polynomial, ctx: &DunklContext) -> Result<Vec<Polynomial>> {
    (1..=ctx.nvars).map(|i| dunkl(i, f, ctx)).collect()
}

/// `Σ_i x_i D_i f`.
pub fn euler_dunkl(f: &Polynomial, ctx: &DunklContext) -> Result<Polynomial> {
    ctx.check(f)?;
    let mut out = Polynomial::zero(ctx.nvars);
    for i in 1..=ctx.nvars {
        out = &out + &dunkl(i, f, ctx)?.mul_var(i)?;
    }
    Ok(out)
}

/// `D_i x_i f - κ Σ_{j<i} (i,j) f`.
pub fn cherednik(i: usize, f: &Polynomial, ctx: &DunklContext) -> Result<Polynomial> {
    ctx.check(f)?;
    check_index(i, ctx.nvars)?;
    let mut out = dunkl(i, &f.mul_var(i)?, ctx)?;
    let kappa = ctx.kappa();
    for j in 1..i {
        out = &out - &f.swap_vars(i, j)?.scale(&kappa);
    }
    Ok(out)
}

/// Integer partition, parts weakly decreasing and positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition {
                parts,
                reason: "empty".into(),
            });
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "zero part".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be nonincreasing".into(),
            });
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Eigenvalue of `Σ_{i<j} (1 - (i,j))` on isotype `τ`:
/// `binom(N,2) - ½ Σ_j τ_j (τ_j + 1 - 2j)`.
pub fn mu(tau: &Partition) -> i64 {
    let n = tau.size();
    let pairs: i64 = binomial(n, 2).try_into().expect("binom(N,2) fits in i64");
    let twice: i64 = tau
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &t)| t as i64 * (t as i64 + 1 - 2 * (j as i64 + 1)))
        .sum();
    // Σ τ_j(τ_j+1-2j) is always even.
    pairs - twice / 2
}

/// `a_N^power` with `a_N = Π_{i<j} (x_i - x_j)`; odd powers only.
pub fn alternating(nvars: usize, power: u32) -> Result<Polynomial> {
    if nvars < 2 {
        return Err(Error::Range(format!("N must be at least 2, got {nvars}")));
    }
    if power.is_multiple_of(2) {
        return Err(Error::EvenPower(power));
    }
    let mut a = Polynomial::one(nvars);
    for i in 1..=nvars {
        for j in i + 1..=nvars {
            let diff = &Polynomial::var(nvars, i)? - &Polynomial::var(nvars, j)?;
            a = &a * &diff;
        }
    }
    Ok(a.pow(power))
}

/// `deg + κ μ(τ)` as a scalar in the context's κ.
pub fn euler_eigenvalue(degree: usize, tau: &Partition, ctx: &DunklContext) -> Scalar {
    Scalar::from_int(degree as i64) + ctx.kappa().mul_int(mu(tau))
}

/// True when every `D_i f` vanishes.
pub fn annihilated(f: &Polynomial, ctx: &DunklContext) -> Result<bool> {
    for i in 1..=ctx.nvars {
        if !dunkl(i, f, ctx)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(i, j) f` summed over all transpositions, i.e. `Σ_{i<j} (1 - (i,j)) f`.
pub fn transposition_sum(f: &Polynomial) -> Result<Polynomial> {
    let n = f.nvars();
    let mut out = Polynomial::zero(n);
    for i in 1..=n {
        for j in i + 1..=n {
            out = &out + &(f - &f.permute(&Permutation::transposition(n, i, j)?)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;
    use num_traits::One;

    fn generic(n: usize) -> DunklContext {
        DunklContext::generic(n).unwrap()
    }

    #[test]
    fn dunkl_examples() {
        for n in 2..=5 {
            let ctx = generic(n);
            assert!(dunkl(1, &Polynomial::one(n), &ctx).unwrap().is_zero());
            let x1 = Polynomial::var(n, 1).unwrap();
            let expect = Scalar::one() + Scalar::kappa().mul_int(n as i64 - 1);
            assert_eq!(
                dunkl(1, &x1, &ctx).unwrap(),
                Polynomial::constant(n, expect)
            );
            assert_eq!(
                dunkl(1, &Polynomial::power_sum1(n), &ctx).unwrap(),
                Polynomial::one(n)
            );
        }
    }

    #[test]
    fn dunkl_rejects_bad_input() {
        let ctx = generic(3);
        assert!(matches!(
            dunkl(4, &Polynomial::one(3), &ctx),
            Err(Error::Index { .. })
        ));
        assert!(matches!(
            dunkl(1, &Polynomial::one(2), &ctx),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn euler_examples() {
        let ctx = generic(4);
        assert!(euler_dunkl(&Polynomial::one(4), &ctx).unwrap().is_zero());
        let e = Polynomial::power_sum1(4);
        assert_eq!(euler_dunkl(&e, &ctx).unwrap(), e);
        for n in 2..=4 {
            let ctx = generic(n);
            let a = alternating(n, 1).unwrap();
            let nn = (n * (n - 1)) as i64;
            let c = Scalar::from_int(nn / 2) + Scalar::kappa().mul_int(nn);
            assert_eq!(euler_dunkl(&a, &ctx).unwrap(), a.scale(&c));
        }
    }

    #[test]
    fn mu_values() {
        for n in 4..=9usize {
            let ni = n as i64;
            let p = |v: Vec<usize>| Partition::new(v).unwrap();
            assert_eq!(mu(&p(vec![n - 1, 1])), ni);
            assert_eq!(mu(&p(vec![n - 2, 1, 1])), 2 * ni);
            assert_eq!(mu(&p(vec![n - 2, 2])), 2 * ni - 2);
            assert_eq!(mu(&p(vec![n])), 0);
            assert_eq!(mu(&p(vec![1; n])), ni * (ni - 1));
        }
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![]).is_err());
        assert_eq!(Partition::all(5).len(), 7);
    }

    #[test]
    fn cherednik_on_constant() {
        for n in 2..=4 {
            let ctx = generic(n);
            let c = cherednik(1, &Polynomial::one(n), &ctx).unwrap();
            let expect = Scalar::one() + Scalar::kappa().mul_int(n as i64 - 1);
            assert_eq!(c, Polynomial::constant(n, expect));
        }
    }

    #[test]
    fn alternating_examples() {
        let a2 = alternating(2, 1).unwrap();
        assert_eq!(
            a2,
            &Polynomial::var(2, 1).unwrap() - &Polynomial::var(2, 2).unwrap()
        );
        let a4 = alternating(4, 1).unwrap();
        for (i, j) in [(1, 2), (1, 4), (2, 3), (3, 4)] {
            assert_eq!(a4.swap_vars(i, j).unwrap(), -&a4);
        }
        assert_eq!(alternating(3, 3).unwrap().degree(), Some(9));
        assert!(matches!(alternating(3, 2), Err(Error::EvenPower(2))));
        let half = DunklContext::specialized(3, rational(-1, 2)).unwrap();
        let a3 = alternating(3, 1).unwrap();
        assert!(annihilated(&a3, &half).unwrap());
        let one = DunklContext::specialized(3, Rational::one()).unwrap();
        assert!(!annihilated(&a3, &one).unwrap());
    }
}
