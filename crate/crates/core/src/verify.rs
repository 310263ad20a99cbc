//! Property suites: every identity the library relies on, checked exactly.
//!
//! Each check produces a list of [`Case`]s in a canonical order that does
//! not depend on scheduling, so reports are reproducible from the seed.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::dunkl::{
    alternating, cherednik, dunkl, euler_dunkl, mu, transposition_sum, DunklContext, KappaMode,
    Partition,
};
use crate::error::{Error, Result};
use crate::field::{
    binomial, factorial, format_rational, hyp_terminating, pochhammer, rational, sign, Rational,
    Scalar,
};
use crate::jackbasis::{
    f_poly, omega_at_ones, omega_p_expansion, restrict_to_2, PBasis, PExpansion,
};
use crate::krawtchouk::{ab_closed, ab_series, krawtchouk, p_to_q, q_p_expansion, AbKind};
use crate::polyring::{MultiIndex, Permutation, Polynomial};
use crate::singular::{
    family_half, family_n0, family_nn, is_singular, module_rank, singular_values,
    verify_certificate, Certificate, Family,
};

/// One checked instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub key: String,
    pub pass: bool,
    /// Counterexample or recorded values.
    pub detail: Option<String>,
}

impl Case {
    fn check(key: impl Into<String>, pass: bool) -> Self {
        Case {
            key: key.into(),
            pass,
            detail: None,
        }
    }

    fn with(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Compares two polynomials; on mismatch records the difference.
    fn equal(key: impl Into<String>, lhs: &Polynomial, rhs: &Polynomial) -> Self {
        let c = Case::check(key, lhs == rhs);
        if c.pass {
            c
        } else {
            c.with(format!("lhs - rhs = {}", (lhs - rhs).serialize()))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Commute,
    Recurrences,
    Dwmn,
    Val1n,
    N2,
    Krawtchouk,
    Qexpand,
    Q2z,
    Families,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Commute,
        Suite::Recurrences,
        Suite::Dwmn,
        Suite::Val1n,
        Suite::N2,
        Suite::Krawtchouk,
        Suite::Qexpand,
        Suite::Q2z,
        Suite::Families,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Commute => "commute",
            Suite::Recurrences => "recurrences",
            Suite::Dwmn => "dwmn",
            Suite::Val1n => "val1n",
            Suite::N2 => "n2",
            Suite::Krawtchouk => "krawtchouk",
            Suite::Qexpand => "qexpand",
            Suite::Q2z => "q2z",
            Suite::Families => "families",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Run parameters shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub nvars: usize,
    /// `None` for generic κ.
    pub kappa: Option<Rational>,
    pub max_degree: Option<usize>,
    pub seed: u64,
    /// Random instances per randomized check.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            nvars: 3,
            kappa: None,
            max_degree: None,
            seed: 0,
            samples: 100,
        }
    }
}

impl VerifyConfig {
    /// Degree bound: 4 for generic κ, 6 for a fixed κ unless overridden.
    pub fn degree_cap(&self) -> usize {
        self.max_degree
            .unwrap_or(if self.kappa.is_none() { 4 } else { 6 })
    }

    pub fn mode(&self) -> KappaMode {
        match &self.kappa {
            None => KappaMode::Generic,
            Some(k) => KappaMode::Specialized(k.clone()),
        }
    }

    pub fn ctx(&self, nvars: usize) -> Result<DunklContext> {
        DunklContext::new(nvars, self.mode())
    }

    fn kappa_label(&self) -> String {
        self.kappa
            .as_ref()
            .map_or_else(|| "generic".to_string(), format_rational)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub cases: Vec<Case>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.pass).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }

    pub fn first_failure(&self) -> Option<&Case> {
        self.cases.iter().find(|c| !c.pass)
    }
}

/// Reports for one invocation, with the configuration that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteReport>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteReport::ok)
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "# verify N={} kappa={} max-degree={} seed={}\n",
            c.nvars,
            c.kappa_label(),
            c.degree_cap(),
            c.seed
        );
        for s in &self.suites {
            for case in &s.cases {
                out.push_str(if case.pass { "PASS " } else { "FAIL " });
                out.push_str(&format!("{} {}", s.suite, case.key));
                if let Some(d) = &case.detail {
                    out.push_str(&format!(" :: {d}"));
                }
                out.push('\n');
            }
            out.push_str(&format!(
                "suite {}: {} passed, {} failed\n",
                s.suite,
                s.passed(),
                s.failed()
            ));
        }
        out.push_str(if self.ok() {
            "result: PASS\n"
        } else {
            "result: FAIL\n"
        });
        out
    }

    pub fn to_json(&self) -> Value {
        let c = &self.config;
        json!({
            "N": c.nvars,
            "kappa": c.kappa_label(),
            "max_degree": c.degree_cap(),
            "seed": c.seed,
            "pass": self.ok(),
            "suites": self.suites.iter().map(|s| json!({
                "suite": s.suite.name(),
                "passed": s.passed(),
                "failed": s.failed(),
                "cases": s.cases.iter().map(|k| json!({
                    "key": k.key,
                    "pass": k.pass,
                    "detail": k.detail,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Result<Report> {
    let reports = suites
        .iter()
        .map(|&s| {
            Ok(SuiteReport {
                suite: s,
                cases: run_suite(s, cfg)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Report {
        config: cfg.clone(),
        suites: reports,
    })
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<Vec<Case>> {
    let n = cfg.nvars;
    let deg = cfg.degree_cap();
    let mut out = Vec::new();
    match suite {
        Suite::Commute => {
            let ctx = cfg.ctx(n)?;
            out.extend(commutativity(&ctx, deg, cfg.samples, cfg.seed)?);
            out.extend(product_rule(&ctx, deg, cfg.samples.min(20), cfg.seed)?);
            out.extend(euler_decomposition(
                &ctx,
                deg,
                cfg.samples.min(20),
                cfg.seed,
            )?);
            out.extend(homogeneity(&ctx, deg, cfg.samples.min(20), cfg.seed)?);
            if n <= 4 {
                for l in 0..=usize::from(n == 3) {
                    out.extend(alternating_identity(&ctx, l)?);
                }
            }
        }
        Suite::Recurrences => {
            let ctx = cfg.ctx(n)?;
            out.extend(p_recurrences(&ctx, deg)?);
            out.extend(p_boundary(&ctx, deg)?);
            out.extend(p_at_ones(&ctx, deg)?);
        }
        Suite::Dwmn => {
            let ctx = cfg.ctx(n)?;
            out.extend(omega_recurrences(&ctx, deg)?);
            out.extend(omega_eigen(&ctx, deg)?);
            out.extend(nonvanishing(n, deg)?);
        }
        Suite::Val1n => {
            let ctx = cfg.ctx(n)?;
            out.extend(val1n(&ctx, deg)?);
            out.extend(dougall(20, cfg.seed)?);
        }
        Suite::N2 => {
            out.extend(n2(&cfg.ctx(2)?, deg)?);
            if n > 2 {
                out.extend(restriction(&cfg.ctx(n)?, deg.min(4))?);
            }
        }
        Suite::Krawtchouk => out.extend(krawtchouk_properties(10)?),
        Suite::Qexpand => {
            out.extend(basis_transform(n, deg, cfg.samples.min(50), 3, cfg.seed)?);
            out.extend(q_even_vanishing(10)?);
            out.extend(q_odd_vanishing(11)?);
        }
        Suite::Q2z => {
            out.extend(ab_closed_forms(3)?);
            let lmax = match n {
                2 | 3 => 1,
                _ => 0,
            };
            for l in 0..=lmax {
                out.extend(q_vanishing(n, l)?);
            }
        }
        Suite::Families => {
            out.extend(families(cfg.seed)?);
            out.extend(alternating_family()?);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- sampling

/// Deterministic generator for a named stream of cases.
pub fn case_rng(seed: u64, tag: &str, index: usize) -> ChaCha8Rng {
    // FNV-1a over the tag, mixed with the seed and index
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in tag.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h);
    rng.set_stream(index as u64);
    rng
}

/// Sparse polynomial with integer coefficients in `{-3..3} \ {0}`, at most
/// six terms, total degree at most `max_deg`. Never zero.
pub fn random_polynomial<R: Rng>(rng: &mut R, nvars: usize, max_deg: usize) -> Polynomial {
    loop {
        let mut f = Polynomial::zero(nvars);
        let terms = rng.gen_range(1..=6);
        for _ in 0..terms {
            let d = rng.gen_range(0..=max_deg);
            let mut exps = vec![0u16; nvars];
            for _ in 0..d {
                exps[rng.gen_range(0..nvars)] += 1;
            }
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-3..=3);
            }
            f.add_term(MultiIndex::new(&exps), &Scalar::from_int(c));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Homogeneous version of [`random_polynomial`] of exact degree `d`.
fn random_homogeneous<R: Rng>(rng: &mut R, nvars: usize, d: usize) -> Polynomial {
    loop {
        let mut f = Polynomial::zero(nvars);
        for _ in 0..rng.gen_range(1..=6) {
            let mut exps = vec![0u16; nvars];
            for _ in 0..d {
                exps[rng.gen_range(0..nvars)] += 1;
            }
            f.add_term(
                MultiIndex::new(&exps),
                &Scalar::from_int(rng.gen_range(1..=3)),
            );
        }
        if !f.is_zero() {
            return f;
        }
    }
}

/// Small rational `p/q` that is not a negative integer and avoids `bad`.
pub fn random_kappa<R: Rng, F: Fn(&Rational) -> bool>(rng: &mut R, bad: F) -> Rational {
    loop {
        let k = rational(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        if !(k.is_integer() && k < Rational::zero()) && !bad(&k) {
            return k;
        }
    }
}

fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Permutation::new(&images).expect("shuffled identity is a permutation")
}

// ---------------------------------------------------------------- dunkl

/// `D_i D_j f = D_j D_i f` for all pairs, on seeded random `f`.
pub fn commutativity(
    ctx: &DunklContext,
    max_deg: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<Case>> {
    let n = ctx.nvars();
    (0..samples)
        .into_par_iter()
        .map(|s| {
            let f = random_polynomial(&mut case_rng(seed, "commute", s), n, max_deg);
            let d = (1..=n)
                .map(|i| dunkl(i, &f, ctx))
                .collect::<Result<Vec<_>>>()?;
            for i in 1..=n {
                for j in i + 1..=n {
                    let ij = dunkl(i, &d[j - 1], ctx)?;
                    let ji = dunkl(j, &d[i - 1], ctx)?;
                    if ij != ji {
                        return Ok(Case::check(format!("commute N={n} #{s}"), false)
                            .with(format!("D_{i}D_{j} != D_{j}D_{i} on f = {}", f.serialize())));
                    }
                }
            }
            Ok(Case::check(format!("commute N={n} #{s}"), true))
        })
        .collect()
}

/// `D_i(fg) = f D_i g + ∂_i f g + κ Σ_{j≠i} [(f - (i,j)f)/(x_i - x_j)] (i,j)g`.
pub fn product_rule(
    ctx: &DunklContext,
    max_deg: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<Case>> {
    let n = ctx.nvars();
    let k = ctx.kappa();
    (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = case_rng(seed, "product", s);
            let f = random_polynomial(&mut rng, n, max_deg.div_ceil(2));
            let g = random_polynomial(&mut rng, n, max_deg / 2);
            let fg = &f * &g;
            let mut ok = true;
            for i in 1..=n {
                let lhs = dunkl(i, &fg, ctx)?;
                let mut rhs = &(&f * &dunkl(i, &g, ctx)?) + &(&f.partial(i)? * &g);
                for j in (1..=n).filter(|&j| j != i) {
                    let w = Permutation::transposition(n, i, j)?;
                    rhs = &rhs + &(&f.divided_difference(i, j)? * &g.permute(&w)?).scale(&k);
                }
                ok &= lhs == rhs;
            }
            let c = Case::check(format!("product-rule N={n} #{s}"), ok);
            Ok(if ok {
                c
            } else {
                c.with(format!("f = {}, g = {}", f.serialize(), g.serialize()))
            })
        })
        .collect()
}

/// `Σ x_i D_i f = Σ x_i ∂_i f + κ Σ_{i<j} (1 - (i,j)) f`.
pub fn euler_decomposition(
    ctx: &DunklContext,
    max_deg: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<Case>> {
    let n = ctx.nvars();
    (0..samples)
        .into_par_iter()
        .map(|s| {
            let f = random_polynomial(&mut case_rng(seed, "euler", s), n, max_deg);
            let lhs = euler_dunkl(&f, ctx)?;
            let mut rhs = transposition_sum(&f)?.scale(&ctx.kappa());
            for i in 1..=n {
                rhs = &rhs + &f.partial(i)?.mul_var(i)?;
            }
            Ok(Case::equal(
                format!("euler-decomposition N={n} #{s}"),
                &lhs,
                &rhs,
            ))
        })
        .collect()
}

/// A homogeneous input of degree `d` maps to a homogeneous output of degree `d-1`.
pub fn homogeneity(
    ctx: &DunklContext,
    max_deg: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<Case>> {
    let n = ctx.nvars();
    (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = case_rng(seed, "homogeneity", s);
            let d = rng.gen_range(1..=max_deg.max(1));
            let f = random_homogeneous(&mut rng, n, d);
            let mut ok = true;
            for i in 1..=n {
                let g = dunkl(i, &f, ctx)?;
                ok &= g.is_homogeneous() && (g.is_zero() || g.degree() == Some(d - 1));
            }
            Ok(Case::check(format!("homogeneity N={n} #{s} deg={d}"), ok))
        })
        .collect()
}

/// `D_i a_N^{2l+1} = (2l+1+2κ)/(2l+1) · ∂_i a_N^{2l+1}`.
pub fn alternating_identity(ctx: &DunklContext, l: usize) -> Result<Vec<Case>> {
    let n = ctx.nvars();
    let p = 2 * l as u32 + 1;
    let a = alternating(n, p)?;
    let factor = ctx.eval(
        &(&(&Scalar::from_int(p.into()) + &ctx.kappa().mul_int(2)) * &Scalar::ratio(1, p.into())),
    )?;
    (1..=n)
        .into_par_iter()
        .map(|i| {
            let lhs = dunkl(i, &a, ctx)?;
            let rhs = a.partial(i)?.scale(&factor);
            Ok(Case::equal(
                format!("alternating N={n} power={p} i={i}"),
                &lhs,
                &rhs,
            ))
        })
        .collect()
}

// ---------------------------------------------------------------- p basis

/// `D_1 p_{mn}` by the two recurrences, all `m, n <= max`.
pub fn p_recurrences(ctx: &DunklContext, max: usize) -> Result<Vec<Case>> {
    let basis = PBasis::new(ctx);
    let n_ = ctx.nvars() as i64;
    let k = ctx.kappa();
    let labels: Vec<(usize, usize)> = (1..=max)
        .flat_map(|m| (0..=max).map(move |n| (m, n)))
        .collect();
    labels
        .into_par_iter()
        .map(|(m, n)| {
            let lhs = dunkl(1, basis.p(m, n)?.as_ref(), ctx)?;
            let mut e = PExpansion::new();
            let tail_len = if m > n { n } else { m - 1 };
            if m > n {
                e.add((m - 1, n), &(&k.mul_int(n_) + &Scalar::from_int(m as i64)));
            } else {
                e.add(
                    (m - 1, n),
                    &(&k.mul_int(n_ - 1) + &Scalar::from_int(m as i64)),
                );
                e.add((n, m - 1), &k);
            }
            for i in 0..tail_len {
                e.add((m + n - 1 - i, i), &k);
                e.add((i, m + n - 1 - i), &(-&k));
            }
            let rhs = basis.expand(&e.map(|c| ctx.eval(c))?)?;
            let which = if m > n { "D1p(m>n)" } else { "D1p(n>=m)" };
            Ok(Case::equal(
                format!("{which} N={} m={m} n={n}", ctx.nvars()),
                &lhs,
                &rhs,
            ))
        })
        .collect()
}

/// `D_i p_{mn} = 0` for `i > 2`, `D_2 p_{m0} = 0`, `D_1 p_{0n} = 0`.
pub fn p_boundary(ctx: &DunklContext, max: usize) -> Result<Vec<Case>> {
    let basis = PBasis::new(ctx);
    let nv = ctx.nvars();
    let labels: Vec<(usize, usize)> = (0..=max)
        .flat_map(|m| (0..=max).map(move |n| (m, n)))
        .collect();
    labels
        .into_par_iter()
        .map(|(m, n)| {
            let p = basis.p(m, n)?;
            let mut ok = true;
            for i in 3..=nv {
                ok &= dunkl(i, &p, ctx)?.is_zero();
            }
            if n == 0 {
                ok &= dunkl(2, &p, ctx)?.is_zero();
            }
            if m == 0 {
                ok &= dunkl(1, &p, ctx)?.is_zero();
            }
            Ok(Case::check(format!("boundary N={nv} m={m} n={n}"), ok))
        })
        .collect()
}

/// `p_{ij}(1^N) = (Nκ+1)_i (Nκ+1)_j / (i! j!)` and
/// `p_{n,0}(1,0,...,0) = (κ+1)_n / n!`.
pub fn p_at_ones(ctx: &DunklContext, max: usize) -> Result<Vec<Case>> {
    let basis = PBasis::new(ctx);
    let nv = ctx.nvars();
    let k = ctx.kappa();
    let nk1 = &k.mul_int(nv as i64) + &Scalar::one();
    let mut out = Vec::new();
    for i in 0..=max {
        for j in 0..=max {
            let want = ctx.eval(
                &(&(&pochhammer(&nk1, i) * &pochhammer(&nk1, j))
                    * &Scalar::from_rational(&Rational::new(
                        BigInt::one(),
                        factorial(i) * factorial(j),
                    ))),
            )?;
            out.push(Case::check(
                format!("p-at-ones N={nv} i={i} j={j}"),
                basis.p(i, j)?.eval_ones() == want,
            ));
        }
        let mut point = vec![Rational::zero(); nv];
        point[0] = Rational::one();
        let want = ctx.eval(
            &(&pochhammer(&(&k + &Scalar::one()), i)
                * &Scalar::from_rational(&Rational::new(BigInt::one(), factorial(i)))),
        )?;
        out.push(Case::check(
            format!("p-at-e1 N={nv} n={i}"),
            basis.p(i, 0)?.evaluate(&point)? == want,
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------- ω

/// All `ω_{ab}` with `a, b <= max`, computed once.
fn omega_table(basis: &PBasis, max: usize) -> Result<HashMap<(usize, usize), Arc<Polynomial>>> {
    let labels: Vec<(usize, usize)> = (0..=max)
        .flat_map(|m| (0..=m).map(move |n| (m, n)))
        .collect();
    let swap = Permutation::transposition(basis.ctx().nvars(), 1, 2)?;
    let built = labels
        .into_par_iter()
        .map(|(m, n)| Ok(((m, n), basis.omega(m, n)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut table = HashMap::new();
    for ((m, n), w) in built {
        if m != n {
            table.insert((n, m), Arc::new(w.permute(&swap)?));
        }
        table.insert((m, n), Arc::new(w));
    }
    Ok(table)
}

/// `ω` lookup treating a negative index as the zero polynomial.
fn omega_at(
    table: &HashMap<(usize, usize), Arc<Polynomial>>,
    nvars: usize,
    m: i64,
    n: i64,
) -> Polynomial {
    if m < 0 || n < 0 {
        return Polynomial::zero(nvars);
    }
    (*table[&(m as usize, n as usize)]).clone()
}

/// The three parts of the `D_1`, `D_2` action on `ω_{mn}`.
pub fn omega_recurrences(ctx: &DunklContext, max: usize) -> Result<Vec<Case>> {
    let basis = PBasis::new(ctx);
    let table = omega_table(&basis, max)?;
    let nv = ctx.nvars();
    let k = ctx.kappa();
    let nk = |c: i64| k.mul_int(nv as i64 + c); // (N + c) κ
    let sc = |v: i64| Scalar::from_int(v);
    let labels: Vec<(usize, usize)> = (0..=max)
        .flat_map(|m| (0..=m).map(move |n| (m, n)))
        .collect();
    let cases = labels
        .into_par_iter()
        .map(|(m, n)| {
            let (mi, ni) = (m as i64, n as i64);
            let w = |a: i64, b: i64| omega_at(&table, nv, a, b);
            let mut out = Vec::new();
            let a = &nk(-1) + &sc(ni); // (N-1)κ + n
            let d = mi - ni;
            if m > n {
                let lhs = dunkl(1, &table[&(m, n)], ctx)?;
                let c0 = &nk(0) + &sc(mi);
                let c1 = &(&a * &k) / &(&k + &sc(d));
                let c2 = &(&(-&c1) * &k) / &(&k + &sc(d + 1));
                let rhs = Polynomial::linear_combination(
                    nv,
                    &[
                        (ctx.eval(&c0)?, &w(mi - 1, ni)),
                        (ctx.eval(&c1)?, &w(ni - 1, mi)),
                        (ctx.eval(&c2)?, &w(mi, ni - 1)),
                    ],
                )?;
                out.push(Case::equal(
                    format!("omega-rec1 N={nv} m={m} n={n}"),
                    &lhs,
                    &rhs,
                ));
            }
            {
                let lhs = dunkl(2, &table[&(m, n)], ctx)?;
                let c2 = &(-&(&a * &k)) / &(&k + &sc(d + 1));
                let rhs = Polynomial::linear_combination(
                    nv,
                    &[
                        (ctx.eval(&a)?, &w(mi, ni - 1)),
                        (ctx.eval(&c2)?, &w(ni - 1, mi)),
                    ],
                )?;
                out.push(Case::equal(
                    format!("omega-rec2 N={nv} m={m} n={n}"),
                    &lhs,
                    &rhs,
                ));
            }
            if m == n {
                let lhs = dunkl(1, &table[&(n, n)], ctx)?;
                let c2 = &(-&(&a * &k)) / &(&k + &sc(1));
                let rhs = Polynomial::linear_combination(
                    nv,
                    &[
                        (ctx.eval(&a)?, &w(ni - 1, ni)),
                        (ctx.eval(&c2)?, &w(ni, ni - 1)),
                    ],
                )?;
                out.push(Case::equal(format!("omega-rec3 N={nv} n={n}"), &lhs, &rhs));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(cases.into_iter().flatten().collect())
}

/// Eigenvalues of the Cherednik-type operators on `ω_{mn}` (`m >= n`) and
/// the symmetry `(i,j) ω_{mn} = ω_{mn}` for `2 < i < j`.
pub fn omega_eigen(ctx: &DunklContext, max: usize) -> Result<Vec<Case>> {
    let basis = PBasis::new(ctx);
    let nv = ctx.nvars();
    let k = ctx.kappa();
    let labels: Vec<(usize, usize)> = (0..=max)
        .flat_map(|m| (0..=m).map(move |n| (m, n)))
        .collect();
    let cases = labels
        .into_par_iter()
        .map(|(m, n)| {
            let w = basis.omega(m, n)?;
            let mut ok = true;
            for i in 1..=nv {
                let eig = match i {
                    1 => &k.mul_int(nv as i64 - 1) + &Scalar::from_int(m as i64 + 1),
                    2 => &k.mul_int(nv as i64 - 2) + &Scalar::from_int(n as i64 + 1),
                    _ => &k.mul_int((nv - i) as i64) + &Scalar::one(),
                };
                ok &= cherednik(i, &w, ctx)? == w.scale(&ctx.eval(&eig)?);
            }
            let mut sym = true;
            for i in 3..=nv {
                for j in i + 1..=nv {
                    sym &= w.permute(&Permutation::transposition(nv, i, j)?)? == w;
                }
            }
            Ok(vec![
                Case::check(format!("cherednik-eigen N={nv} m={m} n={n}"), ok),
                Case::check(format!("symmetry N={nv} m={m} n={n}"), sym),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(cases.into_iter().flatten().collect())
}

/// `ω_{mn} != 0` at sampled κ with `2κ` outside `{-(m-n+1), ..., -m}`.
pub fn nonvanishing(nvars: usize, max: usize) -> Result<Vec<Case>> {
    let samples = [
        rational(1, 3),
        rational(-1, 3),
        rational(-3, 2),
        rational(2, 5),
        rational(-7, 4),
    ];
    let mut labels = Vec::new();
    for m in 0..=max {
        for n in 0..=m {
            for kappa in &samples {
                let two_k = kappa * Rational::from_integer(2.into());
                let excluded = two_k.is_integer()
                    && (m - n + 1..=m).any(|j| two_k == Rational::from_integer(-BigInt::from(j)));
                if !excluded {
                    labels.push((m, n, kappa.clone()));
                }
            }
        }
    }
    labels
        .into_par_iter()
        .map(|(m, n, kappa)| {
            let ctx = DunklContext::specialized(nvars, kappa.clone())?;
            let w = PBasis::new(&ctx).omega(m, n)?;
            Ok(Case::check(
                format!(
                    "nonvanishing N={nvars} m={m} n={n} kappa={}",
                    format_rational(&kappa)
                ),
                !w.is_zero(),
            ))
        })
        .collect()
}

/// Closed-form `ω_{mn}(1^N)` against direct evaluation, `m >= n`, plus the
/// `m < n` values through the `(1,2)` symmetry.
pub fn val1n(ctx: &DunklContext, max: usize) -> Result<Vec<Case>> {
    let basis = PBasis::new(ctx);
    let nv = ctx.nvars();
    let labels: Vec<(usize, usize)> = (0..=max)
        .flat_map(|m| (0..=max).map(move |n| (m, n)))
        .collect();
    labels
        .into_par_iter()
        .map(|(m, n)| {
            let direct = basis.omega(m, n)?.eval_ones();
            let closed = omega_at_ones(m.max(n), m.min(n), ctx)?;
            let key = format!("val1n N={nv} m={m} n={n}");
            Ok(if direct == closed {
                Case::check(key, true)
            } else {
                Case::check(key, false).with(format!("direct {direct} vs closed {closed}"))
            })
        })
        .collect()
}

/// Dougall's terminating well-poised `5F4` sum at seeded parameters.
pub fn dougall(samples: usize, seed: u64) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    let mut attempt = 0;
    while out.len() < samples {
        let mut rng = case_rng(seed, "dougall", attempt);
        attempt += 1;
        let nv = rng.gen_range(2..=6) as i64;
        let m = rng.gen_range(1..=7) as i64;
        let n = rng.gen_range(0..m);
        let kappa = random_kappa(&mut rng, |_| false);
        let k = Scalar::from_rational(&kappa);
        let s = |v: i64| Scalar::from_int(v);
        let half = |v: i64| Scalar::ratio(v, 2);
        let numer = [
            s(-n),
            -&k,
            &k.mul_int(nv) + &s(1 + m),
            s(m - n),
            half(m - n + 2),
        ];
        let denom = [
            s(m + 1),
            &k + &s(m - n + 1),
            &(-&k.mul_int(nv)) - &s(n),
            half(m - n),
        ];
        let Ok(sum) = hyp_terminating(&numer, &denom, &s(1), n as usize) else {
            continue;
        };
        let den = &pochhammer(&(&k + &s(m - n + 1)), n as usize)
            * &pochhammer(&(&(-&k.mul_int(nv)) - &s(n)), n as usize);
        if den.is_zero() {
            continue;
        }
        let num = &pochhammer(&s(m - n + 1), n as usize)
            * &pochhammer(&(&k.mul_int(1 - nv) - &s(n)), n as usize);
        let closed = &num / &den;
        out.push(Case::check(
            format!(
                "dougall #{} N={nv} m={m} n={n} kappa={}",
                out.len(),
                format_rational(&kappa)
            ),
            sum == closed,
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------- N = 2

/// Eigen-relations of `f_{mn}`, its value at `(1,1)`, and the proportionality
/// between `ω_{mn}` and `f_{mn}` at `N = 2`.
pub fn n2(ctx: &DunklContext, max: usize) -> Result<Vec<Case>> {
    if ctx.nvars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: ctx.nvars(),
        });
    }
    let basis = PBasis::new(ctx);
    let k = Scalar::kappa();
    let labels: Vec<(usize, usize)> = (0..=max)
        .flat_map(|m| (0..=m).map(move |n| (m, n)))
        .collect();
    let cases = labels
        .into_par_iter()
        .map(|(m, n)| {
            let (mi, ni) = (m as i64, n as i64);
            let f = f_poly(m, n)?.map_coeffs(|c| ctx.eval(c))?;
            let e1 = ctx.eval(&(&k + &Scalar::from_int(mi + 1)))?;
            let eig1 = cherednik(1, &f, ctx)? == f.scale(&e1);
            let eig2 = cherednik(2, &f, ctx)? == f.scale(&Scalar::from_int(ni + 1));
            let at11 = ctx.eval(
                &(&pochhammer(&(&k.mul_int(2) + &Scalar::one()), m - n)
                    * &Scalar::from_rational(&Rational::new(BigInt::one(), factorial(m - n)))),
            )?;
            let c = ctx.eval(
                &(&(&pochhammer(&(&k.mul_int(2) + &Scalar::from_int(mi - ni + 1)), n)
                    * &pochhammer(&(&k + &Scalar::one()), n))
                    / &(&pochhammer(&(&k + &Scalar::from_int(mi - ni + 1)), n)
                        * &Scalar::from_bigint(factorial(n)))),
            )?;
            let w = basis.omega(m, n)?;
            Ok(vec![
                Case::check(format!("f-eigen N=2 m={m} n={n}"), eig1 && eig2),
                Case::check(format!("f-at-ones N=2 m={m} n={n}"), f.eval_ones() == at11),
                Case::equal(format!("omega-vs-f N=2 m={m} n={n}"), &w, &f.scale(&c)),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(cases.into_iter().flatten().collect())
}

/// Restricting `ω_{mn}` from `N` variables to two gives the native `N = 2`
/// polynomial.
pub fn restriction(ctx: &DunklContext, max: usize) -> Result<Vec<Case>> {
    let big = PBasis::new(ctx);
    let small = PBasis::new(&ctx.with_nvars(2)?);
    let mut out = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            let r = restrict_to_2(&big.omega(m, n)?)?;
            out.push(Case::equal(
                format!("restrict N={}->2 m={m} n={n}", ctx.nvars()),
                &r,
                &small.omega(m, n)?,
            ));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- Krawtchouk

/// Normalization, generating function, orthogonality, hypergeometric form,
/// symmetry and parity for all `n <= nmax`.
pub fn krawtchouk_properties(nmax: usize) -> Result<Vec<Case>> {
    let q = |v: usize| Rational::from_integer(BigInt::from(v));
    let mut out = Vec::new();
    for n in 1..=nmax {
        let k = |m: usize, t: usize| krawtchouk(m, &q(t), n);
        let mut norm = true;
        let mut genf = true;
        let mut orth = true;
        let mut hyp = true;
        let mut symm = true;
        let mut par = true;
        for m in 0..=n {
            norm &= k(m, 0)? == Rational::one();
            for l in 0..=n {
                // [s^m] (1-s)^l (1+s)^{n-l}
                let coeff: BigInt = (0..=m)
                    .map(|a| binomial(l, a as i64) * sign(a) * binomial(n - l, (m - a) as i64))
                    .sum();
                genf &= Rational::from_integer(coeff)
                    == Rational::from_integer(binomial(n, m as i64)) * k(m, l)?;
                let mut inner = Rational::zero();
                for t in 0..=n {
                    inner += Rational::from_integer(binomial(n, t as i64)) * k(m, t)? * k(l, t)?;
                }
                inner /= Rational::from_integer(BigInt::from(2).pow(n as u32));
                let want = if m == l {
                    Rational::new(BigInt::one(), binomial(n, m as i64))
                } else {
                    Rational::zero()
                };
                orth &= inner == want;
                let f21 = hyp_terminating(
                    &[Scalar::from_int(-(l as i64)), Scalar::from_int(-(m as i64))],
                    &[Scalar::from_int(-(n as i64))],
                    &Scalar::from_int(2),
                    n,
                )?;
                hyp &= f21 == Scalar::from_rational(&k(m, l)?);
                symm &= k(m, l)? == k(l, m)?;
            }
            for t in 0..=n {
                par &= k(m, n - t)? == k(m, t)? * Rational::from_integer(sign(m).into());
            }
        }
        // rational arguments: parity is a polynomial identity in t
        for (a, b) in [(1, 3), (-5, 2), (7, 4)] {
            let t = rational(a, b);
            for m in 0..=n {
                let lhs = krawtchouk(m, &(q(n) - &t), n)?;
                par &= lhs == krawtchouk(m, &t, n)? * Rational::from_integer(sign(m).into());
            }
        }
        for (name, ok) in [
            ("normalization", norm),
            ("generating-function", genf),
            ("orthogonality", orth),
            ("hypergeometric", hyp),
            ("symmetry", symm),
            ("parity", par),
        ] {
            out.push(Case::check(format!("krawtchouk {name} n={n}"), ok));
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- q basis

/// `Σ c_i p_{d-i,i} = Σ d_i q_{d-i,i}` with `d = p_to_q(c)`, for random
/// integer `c`, checked at several sampled κ.
pub fn basis_transform(
    nvars: usize,
    max_deg: usize,
    samples: usize,
    kappas: usize,
    seed: u64,
) -> Result<Vec<Case>> {
    let mut rng = case_rng(seed, "qexpand-kappa", 0);
    let ks: Vec<Rational> = (0..kappas)
        .map(|_| random_kappa(&mut rng, |_| false))
        .collect();
    let bases: Vec<PBasis> = ks
        .iter()
        .map(|k| Ok(PBasis::new(&DunklContext::specialized(nvars, k.clone())?)))
        .collect::<Result<_>>()?;
    (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = case_rng(seed, "qexpand", s);
            let d = rng.gen_range(0..=max_deg);
            let c: Vec<Scalar> = (0..=d)
                .map(|_| Scalar::from_int(rng.gen_range(-3..=3)))
                .collect();
            let dq = p_to_q(&c);
            // the identity in the p-basis itself
            let mut back = PExpansion::new();
            for (i, di) in dq.iter().enumerate() {
                for (label, coef) in q_p_expansion(d - i, i).iter() {
                    back.add(*label, &(di * coef));
                }
            }
            let mut ok = back.degree_vector(d)? == c;
            for b in &bases {
                let mut lhs = PExpansion::new();
                for (i, ci) in c.iter().enumerate() {
                    lhs.add((d - i, i), ci);
                }
                let lhs = b.expand(&lhs)?;
                let qs = (0..=d).map(|i| b.q(d - i, i)).collect::<Result<Vec<_>>>()?;
                let items: Vec<(Scalar, &Polynomial)> = dq.iter().cloned().zip(qs.iter()).collect();
                ok &= Polynomial::linear_combination(nvars, &items)? == lhs;
            }
            Ok(Case::check(format!("p-to-q N={nvars} #{s} deg={d}"), ok))
        })
        .collect()
}

fn q_coefficients(e: &PExpansion, d: usize) -> Result<Vec<Scalar>> {
    Ok(p_to_q(&e.degree_vector(d)?))
}

fn format_vector(v: &[Scalar]) -> String {
    let items: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// Even `n`, `1 <= i <= n/2`, `κ = -(n-2i+1)/2`: the `q`-coefficients of
/// `ω_{n-i,i}` vanish beyond `n-2i` and are rational.
pub fn q_even_vanishing(nmax: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for n in (2..=nmax).step_by(2) {
        for i in 1..=n / 2 {
            let kappa = rational(-((n - 2 * i + 1) as i64), 2);
            let ctx = DunklContext::specialized(2, kappa)?;
            let c = q_coefficients(&omega_p_expansion(n - i, i, &ctx)?, n)?;
            let ok = c
                .iter()
                .enumerate()
                .all(|(l, cl)| cl.as_rational().is_some() && (l <= n - 2 * i || cl.is_zero()));
            out.push(Case::check(format!("q-even n={n} i={i}"), ok).with(format_vector(&c)));
        }
    }
    Ok(out)
}

/// Odd `n`, `0 <= i < n/2`, `κ = -(n-2i)/2`: the `q`-coefficients of
/// `ω_{n-i,i} + ω_{i,n-i}` vanish beyond `n-2i-1` and at odd positions.
pub fn q_odd_vanishing(nmax: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for n in (1..=nmax).step_by(2) {
        for i in 0..=(n - 1) / 2 {
            let kappa = rational(-((n - 2 * i) as i64), 2);
            let ctx = DunklContext::specialized(2, kappa)?;
            let e = omega_p_expansion(n - i, i, &ctx)?.plus(&omega_p_expansion(i, n - i, &ctx)?);
            let c = q_coefficients(&e, n)?;
            let ok = c.iter().enumerate().all(|(l, cl)| {
                cl.as_rational().is_some() && ((l < n - 2 * i && l % 2 == 0) || cl.is_zero())
            });
            out.push(Case::check(format!("q-odd n={n} i={i}"), ok).with(format_vector(&c)));
        }
    }
    Ok(out)
}

/// Closed forms of `A_n`, `B_n` at `κ = -l-1/2` against the bivariate
/// expansion, `l <= lmax`, `n <= 2l`; and `A_n = 0` for odd `n`.
pub fn ab_closed_forms(lmax: usize) -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for l in 0..=lmax {
        let kappa = rational(-(2 * l as i64) - 1, 2);
        let ctx = DunklContext::specialized(2, kappa)?;
        for n in 0..=2 * l {
            for kind in [AbKind::A, AbKind::B] {
                let closed = ab_closed(kind, n, l)?;
                let trunc = 2 * l + 4;
                let series = ab_series(kind, n, &ctx, trunc)?;
                let ok = (0..=trunc).all(|e| closed.coeff(e) == series.coeff(e));
                out.push(Case::check(format!("ab-closed {kind}_{n} l={l}"), ok));
            }
        }
    }
    let generic = DunklContext::generic(2)?;
    for n in (1..=5).step_by(2) {
        out.push(Case::check(
            format!("a-odd-vanishes n={n} generic"),
            ab_series(AbKind::A, n, &generic, 4)?.is_zero(),
        ));
    }
    Ok(out)
}

/// `q_{mn} = 0` at `κ = -l-1/2` for `n <= 2l` and
/// `N(2l+1) - 1 <= m + n <= N(2l+1)`.
pub fn q_vanishing(nvars: usize, l: usize) -> Result<Vec<Case>> {
    let kappa = rational(-(2 * l as i64) - 1, 2);
    let basis = PBasis::new(&DunklContext::specialized(nvars, kappa)?);
    let top = nvars * (2 * l + 1);
    let mut labels = Vec::new();
    for total in top - 1..=top {
        for n in 0..=(2 * l).min(total) {
            labels.push((total - n, n));
        }
    }
    labels
        .into_par_iter()
        .map(|(m, n)| {
            Ok(Case::check(
                format!("q-vanishes N={nvars} l={l} m={m} n={n}"),
                basis.q(m, n)?.is_zero(),
            ))
        })
        .collect()
}

// ---------------------------------------------------------------- families

/// Dimension of the irreducible `S_N` module for a hook or two-row shape,
/// as used by the family checks.
fn family_dimension(family: Family, nvars: usize) -> usize {
    match family {
        Family::N0 => nvars - 1,
        Family::Nn => nvars * (nvars - 3) / 2,
        Family::Half => (nvars - 1) * (nvars - 2) / 2,
    }
}

fn certificate_cases(c: &Certificate, seed: u64) -> Result<Vec<Case>> {
    let tag = format!(
        "{} {:?} N={} kappa={}",
        c.family.name(),
        c.params,
        c.nvars,
        format_rational(&c.kappa)
    );
    let ctx = DunklContext::specialized(c.nvars, c.kappa.clone())?;
    let f = &c.polynomial;
    let mut out = vec![Case::check(format!("certificate {tag}"), c.singular())];
    let tau = c.family.isotype(c.nvars)?;
    let deg = c.verdict.degree as i64;
    // necessity: deg + κ μ(τ) = 0 and the rank pins the isotype
    let r = module_rank(f, &ctx)?;
    let eig = Scalar::from_int(deg) + Scalar::from_rational(&c.kappa).mul_int(mu(&tau));
    out.push(
        Case::check(
            format!("isotype {tag}"),
            eig.is_zero()
                && r.isotype_candidates.contains(&tau)
                && r.rank == family_dimension(c.family, c.nvars),
        )
        .with(format!("rank {} tau {}", r.rank, tau)),
    );
    // singularity is preserved by the group action
    let mut inv = true;
    for s in 0..10 {
        let w = random_permutation(&mut case_rng(seed, &tag, s), c.nvars);
        inv &= is_singular(&f.permute(&w)?, &ctx)?.singular;
    }
    out.push(Case::check(format!("group-invariance {tag}"), inv));
    // κ is among the candidate singular values
    let jmax = c.kappa.numer().magnitude().try_into().unwrap_or(usize::MAX);
    out.push(Case::check(
        format!("singular-value {tag}"),
        singular_values(c.nvars, jmax.max(1)).contains(&c.kappa),
    ));
    out.push(Case::check(
        format!("reverify {tag}"),
        verify_certificate(&c.to_json())?.ok(),
    ));
    Ok(out)
}

/// The certified family instances and their boundary rejections.
pub fn families(seed: u64) -> Result<Vec<Case>> {
    let mut certs = Vec::new();
    for (n, nv) in [(1, 2), (2, 3), (1, 3), (3, 4)] {
        certs.push(family_n0(n, nv)?);
    }
    for (n, nv) in [(1, 4), (1, 5), (3, 5)] {
        certs.push(family_nn(n, nv)?);
    }
    for (l, m) in [(0, 1), (1, 1), (0, 2)] {
        certs.push(family_half(l, m)?);
    }
    let mut out = Vec::new();
    for c in &certs {
        out.extend(certificate_cases(c, seed)?);
    }
    for c in certs.iter().filter(|c| c.family == Family::Half) {
        let (l, m) = (c.params[0], c.params[1]);
        let nv = c.nvars;
        let tag = format!("half [{l}, {m}]");
        let ctx = DunklContext::specialized(nv, c.kappa.clone())?;
        // the route through the D_1 formula: ω_{a-1,b} vanishes
        let core = PBasis::new(&ctx).omega(c.label.0 - 1, c.label.1)?;
        out.push(Case::check(format!("core-vanishing {tag}"), core.is_zero()));
        // the other candidate isotypes cannot hold singular polynomials
        let mut excl = true;
        // (N-2, 2) is not a shape when N = 3
        for tau in [vec![nv - 2, 2], vec![nv - 1, 1], vec![nv]]
            .into_iter()
            .filter_map(|parts| Partition::new(parts).ok())
        {
            let e = Rational::from_integer(BigInt::from(nv * (2 * l + 1)))
                + &c.kappa * Rational::from_integer(mu(&tau).into());
            excl &= !e.is_zero();
        }
        out.push(Case::check(format!("isotype-exclusion {tag}"), excl));
        out.push(Case::check(
            format!("antisymmetric-12 {tag}"),
            c.checks.antisymmetric_12 == Some(true),
        ));
        if nv == 3 {
            out.push(Case::check(
                format!("proportional-to-a3 {tag}"),
                c.polynomial
                    .ratio_to(&alternating(3, 1)?.pow(2 * l as u32 + 1))
                    .is_some(),
            ));
        }
    }
    let rejected_n0 = matches!(family_n0(3, 3), Err(Error::Divisibility { .. }));
    out.push(Case::check("reject n0 [3, 3]", rejected_n0));
    let rejected_nn = matches!(family_nn(2, 5), Err(Error::Gcd { .. }));
    out.push(Case::check("reject nn [2, 5]", rejected_nn));
    Ok(out)
}

/// `a_N^{2l+1}` is singular at `κ = -l-1/2` and not at `κ = 1`.
pub fn alternating_family() -> Result<Vec<Case>> {
    vec![(3usize, 0usize), (3, 1), (4, 0)]
        .into_par_iter()
        .map(|(nv, l)| {
            let a = alternating(nv, 2 * l as u32 + 1)?;
            let half = DunklContext::specialized(nv, rational(-(2 * l as i64) - 1, 2))?;
            let yes = is_singular(&a, &half)?;
            let one = DunklContext::specialized(nv, Rational::one())?;
            let no = is_singular(&a, &one)?;
            Ok(vec![
                Case::check(format!("alternating-singular N={nv} l={l}"), yes.singular),
                Case::check(
                    format!("alternating-not-singular N={nv} l={l} kappa=1"),
                    !no.singular && no.residuals.len() == nv,
                ),
            ])
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let cfg = VerifyConfig {
            nvars: 3,
            kappa: None,
            max_degree: Some(3),
            seed: 1,
            samples: 5,
        };
        for s in [Suite::Commute, Suite::Recurrences, Suite::Dwmn, Suite::N2] {
            let cases = run_suite(s, &cfg).unwrap();
            assert!(!cases.is_empty());
            for c in cases {
                assert!(c.pass, "{s} {} {:?}", c.key, c.detail);
            }
        }
    }

    #[test]
    fn sampling_is_reproducible() {
        let a = random_polynomial(&mut case_rng(9, "x", 3), 4, 5);
        let b = random_polynomial(&mut case_rng(9, "x", 3), 4, 5);
        assert_eq!(a, b);
        let c = random_polynomial(&mut case_rng(9, "x", 4), 4, 5);
        assert_ne!(a, c);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
    }
}
