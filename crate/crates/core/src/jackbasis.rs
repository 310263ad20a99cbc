//! The basic polynomials `p_{mn}`, the Jack-type polynomials `ω_{mn}` and the
//! two-variable family `f_{mn}`.
//!
//! The generating function of `p_{mn}` factors as `F(s) G(t)` with
//! `F(s) = (1 - s x_1)^{-1} Π_i (1 - s x_i)^{-κ}` and `G` the same series with
//! `x_1` replaced by `x_2`, so `p_{mn} = [s^m]F · (1,2)[s^n]F`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, RwLock};

use num_traits::{One, Zero};

use crate::dunkl::DunklContext;
use crate::error::{Error, Result};
use crate::field::{factorial, pochhammer, Rational, Scalar};
use crate::polyring::{MultiIndex, Permutation, Polynomial};

/// Truncated power series in one formal variable with polynomial
/// coefficients; the coefficient of `s^k` is homogeneous of degree `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesFactor {
    coeffs: Vec<Polynomial>,
}

impl SeriesFactor {
    /// `(1 - s x_i)^{-1}` truncated at degree `trunc`.
    pub fn geometric(nvars: usize, i: usize, trunc: usize) -> Result<Self> {
        Self::from_weights(nvars, i, trunc, |_| Scalar::one())
    }

    /// `(1 - s x_i)^{-κ} = Σ_k (κ)_k / k! (s x_i)^k` truncated at `trunc`.
    pub fn neg_binomial(nvars: usize, i: usize, kappa: &Scalar, trunc: usize) -> Result<Self> {
        let mut poch = Scalar::one();
        let mut weights = vec![Scalar::one()];
        for k in 1..=trunc {
            poch = &poch * &(kappa + &Scalar::from_int(k as i64 - 1));
            weights.push(&poch / &Scalar::from_bigint(factorial(k)));
        }
        Self::from_weights(nvars, i, trunc, |k| weights[k].clone())
    }

    fn from_weights<W>(nvars: usize, i: usize, trunc: usize, w: W) -> Result<Self>
    where
        W: Fn(usize) -> Scalar,
    {
        crate::polyring::check_index(i, nvars)?;
        let coeffs = (0..=trunc)
            .map(|k| {
                let mut exps = vec![0u16; nvars];
                exps[i - 1] = k as u16;
                Polynomial::monomial(&exps, w(k))
            })
            .collect();
        Ok(SeriesFactor { coeffs })
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Polynomial {
        &self.coeffs[k]
    }

    /// Product truncated at the smaller truncation degree.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.truncation().min(other.truncation());
        let coeffs = (0..=trunc)
            .map(|k| {
                let mut acc = Polynomial::zero(self.coeffs[0].nvars());
                for a in 0..=k {
                    let (p, q) = (&self.coeffs[a], &other.coeffs[k - a]);
                    if !p.is_zero() && !q.is_zero() {
                        acc = &acc + &(p * q);
                    }
                }
                acc
            })
            .collect();
        SeriesFactor { coeffs }
    }
}

/// `F(s) = (1 - s x_1)^{-1} Π_{i=1}^N (1 - s x_i)^{-κ}` truncated at `trunc`.
pub fn s_series(ctx: &DunklContext, trunc: usize) -> Result<SeriesFactor> {
    let n = ctx.nvars();
    let kappa = ctx.kappa();
    let mut f = SeriesFactor::geometric(n, 1, trunc)?;
    for i in 1..=n {
        f = f.mul(&SeriesFactor::neg_binomial(n, i, &kappa, trunc)?);
    }
    Ok(f)
}

/// Memoizing source of `p_{mn}` for one context. Safe to share across threads.
#[derive(Debug)]
pub struct PBasis {
    ctx: DunklContext,
    series: RwLock<Arc<SeriesFactor>>,
    cache: Mutex<HashMap<(usize, usize), Arc<Polynomial>>>,
}

impl PBasis {
    pub fn new(ctx: &DunklContext) -> Self {
        let empty = SeriesFactor {
            coeffs: vec![Polynomial::one(ctx.nvars())],
        };
        PBasis {
            ctx: ctx.clone(),
            series: RwLock::new(Arc::new(empty)),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn ctx(&self) -> &DunklContext {
        &self.ctx
    }

    /// `[s^k] F`.
    fn s_coeff(&self, k: usize) -> Result<Polynomial> {
        {
            let s = self.series.read().expect("series lock");
            if k <= s.truncation() {
                return Ok(s.coeff(k).clone());
            }
        }
        let trunc = k.max(2 * self.series.read().expect("series lock").truncation());
        let fresh = Arc::new(s_series(&self.ctx, trunc)?);
        let out = fresh.coeff(k).clone();
        let mut s = self.series.write().expect("series lock");
        if s.truncation() < fresh.truncation() {
            *s = fresh;
        }
        Ok(out)
    }

    /// `p_{mn}`: coefficient of `s^m t^n` in the generating function.
    pub fn p(&self, m: usize, n: usize) -> Result<Arc<Polynomial>> {
        if let Some(p) = self.cache.lock().expect("cache lock").get(&(m, n)) {
            return Ok(p.clone());
        }
        let swap = Permutation::transposition(self.ctx.nvars(), 1, 2)?;
        let fm = self.s_coeff(m)?;
        let gn = self.s_coeff(n)?.permute(&swap)?;
        let p = Arc::new(&fm * &gn);
        self.cache
            .lock()
            .expect("cache lock")
            .insert((m, n), p.clone());
        Ok(p)
    }

    /// Expands `Σ c_{ij} p_{ij}` into monomials.
    pub fn expand(&self, e: &PExpansion) -> Result<Polynomial> {
        let ps =
            e.0.keys()
                .map(|&(i, j)| self.p(i, j))
                .collect::<Result<Vec<_>>>()?;
        let items: Vec<(Scalar, &Polynomial)> =
            e.0.values()
                .cloned()
                .zip(ps.iter().map(|p| p.as_ref()))
                .collect();
        Polynomial::linear_combination(self.ctx.nvars(), &items)
    }

    pub fn omega(&self, m: usize, n: usize) -> Result<Polynomial> {
        if m >= n {
            self.expand(&omega_p_expansion(m, n, &self.ctx)?)
        } else {
            self.omega(n, m)?
                .permute(&Permutation::transposition(self.ctx.nvars(), 1, 2)?)
        }
    }
}

/// `p_{mn}` in a fresh context (no sharing of the series cache).
pub fn p_poly(m: usize, n: usize, ctx: &DunklContext) -> Result<Polynomial> {
    Ok((*PBasis::new(ctx).p(m, n)?).clone())
}

/// A finite combination `Σ c_{ij} p_{ij}` keyed by the label `(i, j)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PExpansion(BTreeMap<(usize, usize), Scalar>);

impl PExpansion {
    pub fn new() -> Self {
        PExpansion(BTreeMap::new())
    }

    pub fn add(&mut self, label: (usize, usize), c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(label).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&label);
        }
    }

    pub fn get(&self, label: (usize, usize)) -> Scalar {
        self.0.get(&label).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Applies `g` to every coefficient.
    pub fn map<F: Fn(&Scalar) -> Result<Scalar>>(&self, g: F) -> Result<Self> {
        let mut out = PExpansion::new();
        for (&l, c) in &self.0 {
            out.add(l, &g(c)?);
        }
        Ok(out)
    }

    /// Applies `(1,2)`, which sends `p_{ij}` to `p_{ji}`.
    pub fn swapped(&self) -> Self {
        PExpansion(
            self.0
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        )
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&l, c) in &other.0 {
            out.add(l, c);
        }
        out
    }

    /// Coefficients `c_j` of `p_{d-j, j}`, `j = 0..=d`, for a homogeneous
    /// combination of total degree `d`.
    pub fn degree_vector(&self, d: usize) -> Result<Vec<Scalar>> {
        if let Some((&(i, j), _)) = self.0.iter().find(|(&(i, j), _)| i + j != d) {
            return Err(Error::Range(format!("p_({i},{j}) is not of degree {d}")));
        }
        Ok((0..=d).map(|j| self.get((d - j, j))).collect())
    }
}

/// `(κ + m - n + 1)_j` is nonzero for `j = 1..=n` at a specialized κ.
fn check_omega_poles(m: usize, n: usize, ctx: &DunklContext) -> Result<()> {
    if let Some(k) = ctx.kappa_value() {
        for j in 1..=n {
            let factor = k + Rational::from_integer((m - n + j).into());
            if factor.is_zero() {
                return Err(Error::Pole { kappa: k.clone() });
            }
        }
    }
    Ok(())
}

/// `ω_{mn}` written in the `p`-basis:
/// `p_{mn} + Σ_{j=1}^n (-κ)_j (m-n+1)_{j-1} / ((κ+m-n+1)_j j!)
///  · ((m-n+j) p_{m+j,n-j} + j p_{n-j,m+j})` for `m >= n`, and the `(1,2)`
/// image of `ω_{nm}` otherwise.
pub fn omega_p_expansion(m: usize, n: usize, ctx: &DunklContext) -> Result<PExpansion> {
    if m < n {
        return Ok(omega_p_expansion(n, m, ctx)?.swapped());
    }
    check_omega_poles(m, n, ctx)?;
    let kappa = ctx.kappa();
    let d = (m - n) as i64;
    let mut e = PExpansion::new();
    e.add((m, n), &Scalar::one());
    let mut num = Scalar::one(); // (-κ)_j (d+1)_{j-1}
    let mut den = Scalar::one(); // (κ+d+1)_j j!
    for j in 1..=n {
        let jj = j as i64;
        num = &num * &(&Scalar::from_int(jj - 1) - &kappa);
        if j > 1 {
            num = num.mul_int(d + jj - 1);
        }
        den = &den * &(&kappa + &Scalar::from_int(d + jj));
        den = den.mul_int(jj);
        let c = &num / &den;
        e.add((m + j, n - j), &c.mul_int(d + jj));
        e.add((n - j, m + j), &c.mul_int(jj));
    }
    Ok(e)
}

/// `ω_{mn}`; defined whenever a specialized κ is not a negative integer.
pub fn omega(m: usize, n: usize, ctx: &DunklContext) -> Result<Polynomial> {
    PBasis::new(ctx).omega(m, n)
}

/// Closed form of `ω_{mn}(1^N)` for `m >= n`:
/// `(Nκ+1)_m ((N-1)κ+1)_n / ((m-n)! n! (κ+m-n+1)_n)`.
pub fn omega_at_ones(m: usize, n: usize, ctx: &DunklContext) -> Result<Scalar> {
    if m < n {
        return Err(Error::Order { m, n });
    }
    let big_n = ctx.nvars() as i64;
    let k = Scalar::kappa();
    let one = Scalar::one();
    let num = &pochhammer(&(&k.mul_int(big_n) + &one), m)
        * &pochhammer(&(&k.mul_int(big_n - 1) + &one), n);
    let den = &pochhammer(&(&k + &Scalar::from_int((m - n + 1) as i64)), n)
        * &Scalar::from_bigint(factorial(m - n) * factorial(n));
    ctx.eval(&(&num / &den))
}

/// `f_{mn}(x_1, x_2) = (x_1 x_2)^n Σ_{j=0}^{m-n} (κ+1)_{m-n-j} (κ)_j /
/// ((m-n-j)! j!) x_1^{m-n-j} x_2^j`, with κ generic.
pub fn f_poly(m: usize, n: usize) -> Result<Polynomial> {
    if m < n {
        return Err(Error::Order { m, n });
    }
    let k = Scalar::kappa();
    let k1 = &k + &Scalar::one();
    let d = m - n;
    let mut out = Polynomial::zero(2);
    for j in 0..=d {
        let c = &(&pochhammer(&k1, d - j) * &pochhammer(&k, j))
            / &Scalar::from_bigint(factorial(d - j) * factorial(j));
        out.add_term(MultiIndex::new(&[(n + d - j) as u16, (n + j) as u16]), &c);
    }
    Ok(out)
}

/// Sets `x_i = 0` for `i > 2` and drops to two variables.
pub fn restrict_to_2(f: &Polynomial) -> Result<Polynomial> {
    if f.nvars() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: f.nvars(),
        });
    }
    let mut out = Polynomial::zero(2);
    for (a, c) in f.terms() {
        if a.exps()[2..].iter().all(|&e| e == 0) {
            out.add_term(MultiIndex::new(&a.exps()[..2]), c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    fn generic(n: usize) -> DunklContext {
        DunklContext::generic(n).unwrap()
    }

    #[test]
    fn p_examples() {
        for n in 2..=4 {
            let ctx = generic(n);
            assert_eq!(p_poly(0, 0, &ctx).unwrap(), Polynomial::one(n));
            let expect = &Polynomial::var(n, 1).unwrap()
                + &Polynomial::power_sum1(n).scale(&Scalar::kappa());
            assert_eq!(p_poly(1, 0, &ctx).unwrap(), expect);
        }
        let zero = DunklContext::specialized(3, rational(0, 1)).unwrap();
        for (m, n) in [(2, 1), (0, 3), (3, 3)] {
            let expect = Polynomial::monomial(&[m as u16, n as u16, 0], Scalar::one());
            assert_eq!(p_poly(m, n, &zero).unwrap(), expect);
        }
    }

    #[test]
    fn p_is_homogeneous() {
        let basis = PBasis::new(&generic(3));
        for (m, n) in [(3, 1), (1, 4), (2, 2)] {
            let p = basis.p(m, n).unwrap();
            assert!(p.is_homogeneous());
            assert_eq!(p.degree(), Some(m + n));
        }
    }

    #[test]
    fn omega_m0_is_p() {
        let basis = PBasis::new(&generic(3));
        for m in 0..=4 {
            assert_eq!(basis.omega(m, 0).unwrap(), *basis.p(m, 0).unwrap());
        }
    }

    #[test]
    fn omega_pole_detection() {
        let ctx = DunklContext::specialized(3, rational(-1, 1)).unwrap();
        assert!(matches!(omega(1, 1, &ctx), Err(Error::Pole { .. })));
        assert!(omega(2, 0, &ctx).is_ok());
        assert!(omega(2, 1, &ctx).is_ok());
        let ctx = DunklContext::specialized(3, rational(-3, 1)).unwrap();
        assert!(matches!(omega(3, 1, &ctx), Err(Error::Pole { .. })));
    }

    #[test]
    fn omega_11_vanishes_at_minus_half() {
        let ctx = DunklContext::specialized(3, rational(-1, 2)).unwrap();
        assert!(omega(1, 1, &ctx).unwrap().is_zero());
    }

    #[test]
    fn f_examples() {
        assert_eq!(
            f_poly(2, 2).unwrap(),
            Polynomial::monomial(&[2, 2], Scalar::one())
        );
        let k = Scalar::kappa();
        let expect =
            &Polynomial::monomial(&[1, 0], &k + &Scalar::one()) + &Polynomial::monomial(&[0, 1], k);
        assert_eq!(f_poly(1, 0).unwrap(), expect);
        assert!(matches!(f_poly(0, 1), Err(Error::Order { m: 0, n: 1 })));
    }

    #[test]
    fn restrict_examples() {
        let f = &Polynomial::monomial(&[1, 0, 1], Scalar::one())
            + &Polynomial::monomial(&[1, 1, 0], Scalar::one());
        assert_eq!(
            restrict_to_2(&f).unwrap(),
            Polynomial::monomial(&[1, 1], Scalar::one())
        );
        let g = f_poly(3, 1).unwrap();
        assert_eq!(restrict_to_2(&g).unwrap(), g);
    }

    #[test]
    fn omega_at_ones_small() {
        let ctx = generic(4);
        assert_eq!(omega_at_ones(0, 0, &ctx).unwrap(), Scalar::one());
        assert_eq!(
            omega_at_ones(1, 0, &ctx).unwrap(),
            Scalar::kappa().mul_int(4) + Scalar::one()
        );
        assert!(matches!(
            omega_at_ones(0, 1, &ctx),
            Err(Error::Order { .. })
        ));
    }
}
