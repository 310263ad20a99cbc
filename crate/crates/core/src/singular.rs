//! Singular polynomials: verification, the candidate parameter values, the
//! three constructed families, and exact module-rank analysis.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::dunkl::{dunkl, euler_dunkl, euler_eigenvalue, mu, DunklContext, Partition};
use crate::error::{Error, Result};
use crate::field::{
    factorial, format_rational, parse_rational, pochhammer_q, rational, Rational, Scalar,
};
use crate::jackbasis::PBasis;
use crate::polyring::{MultiIndex, Permutation, Polynomial};

/// Outcome of applying every Dunkl operator to a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub singular: bool,
    /// Nonzero `D_i f`, keyed by 1-based `i`.
    pub residuals: BTreeMap<usize, Polynomial>,
    pub degree: usize,
    pub nonzero: bool,
    /// Set for constants, which every operator kills trivially.
    pub degenerate: bool,
}

impl Verdict {
    /// `D_i f = 0`, in operator order.
    pub fn dunkl_zero(&self, nvars: usize) -> Vec<bool> {
        (1..=nvars)
            .map(|i| !self.residuals.contains_key(&i))
            .collect()
    }
}

/// Applies `D_1, ..., D_N` (in parallel) at a specialized κ.
pub fn is_singular(f: &Polynomial, ctx: &DunklContext) -> Result<Verdict> {
    if f.nvars() != ctx.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ctx.nvars(),
            found: f.nvars(),
        });
    }
    if ctx.kappa_value().is_none() {
        return Err(Error::GenericKappa);
    }
    let images = (1..=ctx.nvars())
        .into_par_iter()
        .map(|i| dunkl(i, f, ctx).map(|d| (i, d)))
        .collect::<Result<Vec<_>>>()?;
    let residuals: BTreeMap<_, _> = images.into_iter().filter(|(_, d)| !d.is_zero()).collect();
    let nonzero = !f.is_zero();
    Ok(Verdict {
        singular: nonzero && residuals.is_empty(),
        residuals,
        degree: f.degree().unwrap_or(0),
        nonzero,
        degenerate: f.is_constant(),
    })
}

/// `{-j/n : 2 <= n <= N, 1 <= j <= jMax, n ∤ j}`.
pub fn singular_values(nvars: usize, j_max: usize) -> BTreeSet<Rational> {
    let mut out = BTreeSet::new();
    for n in 2..=nvars {
        for j in 1..=j_max {
            if j % n != 0 {
                out.insert(rational(-(j as i64), n as i64));
            }
        }
    }
    out
}

/// Rank of the `S_N`-span of `f`, its Euler eigenvalue and the isotypes
/// consistent with that eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRank {
    pub rank: usize,
    pub euler_eigen: Option<Scalar>,
    pub isotype_candidates: BTreeSet<Partition>,
}

/// Largest `N` for which [`module_rank`] enumerates `S_N`.
pub const MODULE_RANK_LIMIT: usize = 5;

pub fn module_rank(f: &Polynomial, ctx: &DunklContext) -> Result<ModuleRank> {
    module_rank_up_to(f, ctx, MODULE_RANK_LIMIT)
}

/// [`module_rank`] with an explicit bound on `N`.
pub fn module_rank_up_to(f: &Polynomial, ctx: &DunklContext, limit: usize) -> Result<ModuleRank> {
    let n = f.nvars();
    if n != ctx.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ctx.nvars(),
            found: n,
        });
    }
    if n > limit {
        return Err(Error::TooLarge(n));
    }
    if f.is_zero() {
        return Err(Error::Range("module rank of the zero polynomial".into()));
    }
    let images: Vec<Polynomial> = Permutation::all(n)
        .par_iter()
        .map(|w| f.permute(w))
        .collect::<Result<_>>()?;
    let mut seen = HashSet::new();
    let mut echelon = Echelon::default();
    for g in images {
        if seen.insert(g.clone()) {
            echelon.insert(&g);
        }
    }
    let euler = euler_dunkl(f, ctx)?;
    let euler_eigen = if euler.is_zero() {
        Some(Scalar::zero())
    } else {
        euler.ratio_to(f)
    };
    let deg = f.degree().unwrap_or(0);
    let isotype_candidates = match &euler_eigen {
        Some(c) if f.is_homogeneous() => Partition::all(n)
            .into_iter()
            .filter(|tau| euler_eigenvalue(deg, tau, ctx) == *c)
            .collect(),
        _ => BTreeSet::new(),
    };
    Ok(ModuleRank {
        rank: echelon.rows.len(),
        euler_eigen,
        isotype_candidates,
    })
}

/// Row echelon form over the coefficient field, rows keyed by their pivot.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<MultiIndex, BTreeMap<MultiIndex, Scalar>>,
}

impl Echelon {
    fn insert(&mut self, f: &Polynomial) {
        let mut v: BTreeMap<MultiIndex, Scalar> =
            f.terms().map(|(a, c)| (a.clone(), c.clone())).collect();
        loop {
            let Some((pivot, lead)) = v.iter().next().map(|(a, c)| (a.clone(), c.clone())) else {
                return;
            };
            match self.rows.get(&pivot) {
                None => {
                    let inv = lead.inv();
                    let row = v.into_iter().map(|(a, c)| (a, &c * &inv)).collect();
                    self.rows.insert(pivot, row);
                    return;
                }
                Some(row) => {
                    for (a, c) in row {
                        let e = v.entry(a.clone()).or_insert_with(Scalar::zero);
                        *e -= &(c * &lead);
                        if e.is_zero() {
                            v.remove(a);
                        }
                    }
                }
            }
        }
    }
}

/// Which construction produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `ω_{n,0}` at `κ = -n/N`.
    N0,
    /// `ω_{n,n}` at `κ = -n/(N-1)`.
    Nn,
    /// `ω_{(2l+1)(m+1),(2l+1)m}` at `κ = -l-1/2`, `N = 2m+1`.
    Half,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::N0 => "n0",
            Family::Nn => "nn",
            Family::Half => "half",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        match s {
            "n0" => Ok(Family::N0),
            "nn" => Ok(Family::Nn),
            "half" => Ok(Family::Half),
            other => Err(Error::Certificate(format!("unknown family {other:?}"))),
        }
    }

    /// The isotype the family lives in.
    pub fn isotype(self, nvars: usize) -> Result<Partition> {
        match self {
            Family::N0 => Partition::new(vec![nvars - 1, 1]),
            Family::Nn => Partition::new(vec![nvars - 2, 2]),
            Family::Half => Partition::new(vec![nvars - 2, 1, 1]),
        }
    }
}

/// Named checks carried by a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checks {
    pub dunkl_zero: Vec<bool>,
    pub nonzero: bool,
    /// `(1 + (1,2)) f = 0`; only recorded for the half-integer family.
    pub antisymmetric_12: Option<bool>,
    /// `Σ x_i D_i f = (deg + κ μ(τ)) f` for the family's isotype τ.
    pub euler_match: bool,
    pub rank: Option<usize>,
}

impl Checks {
    pub fn all_pass(&self) -> bool {
        self.dunkl_zero.iter().all(|&b| b)
            && self.nonzero
            && self.antisymmetric_12.unwrap_or(true)
            && self.euler_match
    }
}

/// A self-contained, re-checkable record of one family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub family: Family,
    pub params: Vec<usize>,
    pub nvars: usize,
    pub kappa: Rational,
    pub label: (usize, usize),
    pub verdict: Verdict,
    pub checks: Checks,
    pub polynomial: Polynomial,
}

impl Certificate {
    pub fn singular(&self) -> bool {
        self.verdict.singular && self.checks.all_pass()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.name(),
            "params": self.params,
            "N": self.nvars,
            "kappa": format_rational(&self.kappa),
            "label": [self.label.0, self.label.1],
            "degree": self.verdict.degree,
            "checks": {
                "dunkl_zero": self.checks.dunkl_zero,
                "nonzero": self.checks.nonzero,
                "antisymmetric_12": self.checks.antisymmetric_12,
                "euler_match": self.checks.euler_match,
                "rank": self.checks.rank,
            },
            "polynomial": self.polynomial.to_json(),
            "polynomial_sha256": polynomial_hash(&self.polynomial),
        })
    }
}

/// SHA-256 of the canonical serialization.
pub fn polynomial_hash(f: &Polynomial) -> String {
    hex::encode(Sha256::digest(f.serialize().as_bytes()))
}

/// Result of re-checking a serialized certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reverification {
    pub hash_ok: bool,
    pub recomputed: Checks,
    pub recorded: Checks,
}

impl Reverification {
    /// Recorded claims agree with the recomputation and all pass.
    pub fn ok(&self) -> bool {
        self.hash_ok
            && self.recomputed.all_pass()
            && self.recomputed.dunkl_zero == self.recorded.dunkl_zero
            && self.recomputed.nonzero == self.recorded.nonzero
            && self.recomputed.antisymmetric_12 == self.recorded.antisymmetric_12
            && self.recomputed.euler_match == self.recorded.euler_match
            && (self.recorded.rank.is_none() || self.recomputed.rank == self.recorded.rank)
    }
}

/// Re-verifies a certificate from its serialized polynomial alone.
pub fn verify_certificate(v: &Value) -> Result<Reverification> {
    let bad = |what: &str| Error::Certificate(format!("missing or malformed {what:?}"));
    let family = Family::from_name(
        v.get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("family"))?,
    )?;
    let nvars = v.get("N").and_then(Value::as_u64).ok_or_else(|| bad("N"))? as usize;
    let kappa = parse_rational(
        v.get("kappa")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("kappa"))?,
    )?;
    let poly = Polynomial::from_json(v.get("polynomial").ok_or_else(|| bad("polynomial"))?)?;
    if poly.nvars() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            found: poly.nvars(),
        });
    }
    let hash_ok =
        v.get("polynomial_sha256").and_then(Value::as_str) == Some(&polynomial_hash(&poly));
    let c = v.get("checks").ok_or_else(|| bad("checks"))?;
    let flag = |k: &str| c.get(k).and_then(Value::as_bool).ok_or_else(|| bad(k));
    let recorded = Checks {
        dunkl_zero: c
            .get("dunkl_zero")
            .and_then(Value::as_array)
            .and_then(|a| a.iter().map(Value::as_bool).collect::<Option<Vec<_>>>())
            .ok_or_else(|| bad("dunkl_zero"))?,
        nonzero: flag("nonzero")?,
        antisymmetric_12: c.get("antisymmetric_12").and_then(Value::as_bool),
        euler_match: flag("euler_match")?,
        rank: c.get("rank").and_then(Value::as_u64).map(|r| r as usize),
    };
    let ctx = DunklContext::specialized(nvars, kappa)?;
    let verdict = is_singular(&poly, &ctx)?;
    let recomputed = compute_checks(family, &poly, &verdict, &ctx, recorded.rank.is_some())?;
    Ok(Reverification {
        hash_ok,
        recomputed,
        recorded,
    })
}

fn compute_checks(
    family: Family,
    f: &Polynomial,
    verdict: &Verdict,
    ctx: &DunklContext,
    with_rank: bool,
) -> Result<Checks> {
    let n = ctx.nvars();
    let tau = family.isotype(n)?;
    let eigen = euler_eigenvalue(verdict.degree, &tau, ctx);
    let euler = euler_dunkl(f, ctx)?;
    let euler_match = euler == f.scale(&eigen);
    let antisymmetric_12 = match family {
        Family::Half => {
            let swapped = f.permute(&Permutation::transposition(n, 1, 2)?)?;
            Some((f + &swapped).is_zero())
        }
        _ => None,
    };
    let rank = if with_rank && n <= MODULE_RANK_LIMIT && !f.is_zero() {
        Some(module_rank(f, ctx)?.rank)
    } else {
        None
    };
    Ok(Checks {
        dunkl_zero: verdict.dunkl_zero(n),
        nonzero: verdict.nonzero,
        antisymmetric_12,
        euler_match,
        rank,
    })
}

fn certify(
    family: Family,
    params: Vec<usize>,
    label: (usize, usize),
    ctx: &DunklContext,
) -> Result<Certificate> {
    let f = PBasis::new(ctx).omega(label.0, label.1)?;
    let verdict = is_singular(&f, ctx)?;
    let checks = compute_checks(family, &f, &verdict, ctx, true)?;
    Ok(Certificate {
        family,
        params,
        nvars: ctx.nvars(),
        kappa: ctx.kappa_value().expect("specialized").clone(),
        label,
        verdict,
        checks,
        polynomial: f,
    })
}

/// `ω_{n,0}` at `κ = -n/N`, singular whenever `N ∤ n`.
pub fn family_n0(n: usize, nvars: usize) -> Result<Certificate> {
    if nvars < 2 || n < 1 {
        return Err(Error::Range(format!(
            "family n0 needs N >= 2 and n >= 1, got N = {nvars}, n = {n}"
        )));
    }
    if n.is_multiple_of(nvars) {
        return Err(Error::Divisibility { n, modulus: nvars });
    }
    let kappa = rational(-(n as i64), nvars as i64);
    if n0_witness(n, &kappa).is_zero() {
        return Err(Error::Certificate(format!(
            "p_({n},0) vanishes at (1,0,...,0)"
        )));
    }
    let ctx = DunklContext::specialized(nvars, kappa)?;
    certify(Family::N0, vec![n, nvars], (n, 0), &ctx)
}

/// Value of `p_{n,0}(1,0,...,0) = (κ+1)_n / n!`, the nonvanishing witness
/// used by [`family_n0`].
pub fn n0_witness(n: usize, kappa: &Rational) -> Rational {
    pochhammer_q(&(kappa + Rational::one()), n) / Rational::from_integer(factorial(n))
}

/// `ω_{n,n}` at `κ = -n/(N-1)`, singular when `gcd(N-1, n) < (N-1)/2`.
pub fn family_nn(n: usize, nvars: usize) -> Result<Certificate> {
    if nvars < 4 || n < 1 {
        return Err(Error::Range(format!(
            "family nn needs N >= 4 and n >= 1, got N = {nvars}, n = {n}"
        )));
    }
    let g = (nvars - 1).gcd(&n);
    if 2 * g >= nvars - 1 {
        return Err(Error::Gcd { n, nvars, gcd: g });
    }
    let ctx = DunklContext::specialized(nvars, rational(-(n as i64), nvars as i64 - 1))?;
    certify(Family::Nn, vec![n, nvars], (n, n), &ctx)
}

/// `ω_{(2l+1)(m+1),(2l+1)m}` at `κ = -l-1/2` with `N = 2m+1`.
pub fn family_half(l: usize, m: usize) -> Result<Certificate> {
    if m < 1 {
        return Err(Error::Range("family half needs m >= 1".into()));
    }
    let nvars = 2 * m + 1;
    let kappa = Rational::new(BigInt::from(-(2 * l as i64) - 1), BigInt::from(2));
    let ctx = DunklContext::specialized(nvars, kappa)?;
    let a = (2 * l + 1) * (m + 1);
    let b = (2 * l + 1) * m;
    certify(Family::Half, vec![l, m], (a, b), &ctx)
}

/// `μ(τ)` for every partition of `N`, for isotype exclusion arguments.
pub fn mu_table(nvars: usize) -> Vec<(Partition, i64)> {
    Partition::all(nvars)
        .into_iter()
        .map(|t| {
            let v = mu(&t);
            (t, v)
        })
        .collect()
}
