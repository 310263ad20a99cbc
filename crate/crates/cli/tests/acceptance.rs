//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
//! Every comparison is exact.

use std::process::Command;
use std::time::Instant;

use dunkl_core::dunkl::{alternating, euler_dunkl};
use dunkl_core::singular::{family_half, family_n0, family_nn, is_singular, module_rank};
use dunkl_core::verify::{self, Case};
use dunkl_core::{DunklContext, Result};

const SEED: u64 = 7;

type Criterion = (&'static str, fn() -> (bool, String));

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dunkl"))
}

/// Collects cases, reporting the first failure.
fn cases(batches: Vec<Result<Vec<Case>>>) -> (bool, String) {
    let mut n = 0;
    for b in batches {
        match b {
            Ok(cs) => {
                n += cs.len();
                if let Some(c) = cs.iter().find(|c| !c.pass) {
                    return (
                        false,
                        format!("{} {}", c.key, c.detail.clone().unwrap_or_default()),
                    );
                }
            }
            Err(e) => return (false, format!("error: {e}")),
        }
    }
    (n > 0, format!("{n} cases"))
}

fn generic(nvars: usize) -> DunklContext {
    DunklContext::generic(nvars).expect("context")
}

fn c1() -> (bool, String) {
    cases(
        [3, 4, 5]
            .map(|nv| verify::commutativity(&generic(nv), 5, 100, SEED))
            .into(),
    )
}

fn c2() -> (bool, String) {
    let mut v = Vec::new();
    for nv in [3, 4, 5] {
        v.push(verify::p_recurrences(&generic(nv), 6));
        v.push(verify::p_boundary(&generic(nv), 6));
    }
    cases(v)
}

fn c3() -> (bool, String) {
    cases(
        [3, 4, 5]
            .map(|nv| verify::omega_recurrences(&generic(nv), 6))
            .into(),
    )
}

fn c4() -> (bool, String) {
    let mut v: Vec<_> = [2, 3, 4, 5].map(|nv| verify::val1n(&generic(nv), 5)).into();
    v.push(verify::dougall(20, SEED));
    cases(v)
}

fn c5() -> (bool, String) {
    cases(vec![verify::n2(&generic(2), 6)])
}

fn c6() -> (bool, String) {
    cases(vec![verify::krawtchouk_properties(10)])
}

fn c7() -> (bool, String) {
    cases(vec![verify::basis_transform(3, 6, 50, 3, SEED)])
}

fn c8() -> (bool, String) {
    cases(vec![
        verify::q_even_vanishing(10),
        verify::q_odd_vanishing(11),
    ])
}

fn c9() -> (bool, String) {
    cases(vec![verify::ab_closed_forms(3)])
}

fn c10() -> (bool, String) {
    cases(vec![
        verify::q_vanishing(3, 0),
        verify::q_vanishing(3, 1),
        verify::q_vanishing(5, 0),
    ])
}

fn c11() -> (bool, String) {
    let run = || -> Result<(bool, String)> {
        for (l, m) in [(0, 1), (1, 1), (0, 2)] {
            let c = family_half(l, m)?;
            let f = &c.polynomial;
            let ctx = DunklContext::specialized(c.nvars, c.kappa.clone())?;
            let v = is_singular(f, &ctx)?;
            let anti = (f + &f.swap_vars(1, 2)?).is_zero();
            let euler = euler_dunkl(f, &ctx)?.is_zero();
            if !(v.singular && !f.is_zero() && anti && euler && c.singular()) {
                return Ok((false, format!("half [{l}, {m}]")));
            }
            if (l, m) == (0, 1) && f.ratio_to(&alternating(3, 1)?).is_none() {
                return Ok((false, "half [0, 1] not proportional to a_3".into()));
            }
            if (l, m) == (0, 2) {
                let r = module_rank(f, &ctx)?.rank;
                if r != 6 {
                    return Ok((false, format!("half [0, 2] rank {r}")));
                }
            }
        }
        Ok((true, "3 instances, rank 6".into()))
    };
    run().unwrap_or_else(|e| (false, format!("error: {e}")))
}

fn c12() -> (bool, String) {
    let run = || -> Result<(bool, String)> {
        let mut certs = Vec::new();
        for (n, nv) in [(1, 2), (2, 3), (1, 3), (3, 4)] {
            certs.push(family_n0(n, nv)?);
        }
        for (n, nv) in [(1, 4), (1, 5), (3, 5)] {
            certs.push(family_nn(n, nv)?);
        }
        if let Some(c) = certs.iter().find(|c| !c.singular()) {
            return Ok((
                false,
                format!("{} {:?} not singular", c.family.name(), c.params),
            ));
        }
        for args in [["n0", "3", "3"], ["nn", "2", "5"]] {
            let out = bin().arg("family").args(args).output().expect("run dunkl");
            if out.status.code() != Some(3) {
                return Ok((
                    false,
                    format!("family {args:?} exit {:?}", out.status.code()),
                ));
            }
        }
        Ok((true, format!("{} certificates, 2 rejections", certs.len())))
    };
    run().unwrap_or_else(|e| (false, format!("error: {e}")))
}

fn c13() -> (bool, String) {
    cases(vec![verify::alternating_family()])
}

fn c14() -> (bool, String) {
    let run = || {
        bin()
            .args(["verify", "all", "--seed", "7"])
            .output()
            .expect("run dunkl")
    };
    let (a, b) = (run(), run());
    let ok =
        a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    (ok, format!("{} bytes", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 14] = [
        ("commutativity", c1),
        ("p recurrences", c2),
        ("omega recurrences", c3),
        ("omega at 1^N and Dougall", c4),
        ("N = 2", c5),
        ("Krawtchouk properties", c6),
        ("p to q transform", c7),
        ("q coefficient vanishing", c8),
        ("A/B closed forms", c9),
        ("q vanishing", c10),
        ("half-integer family", c11),
        ("n0 and nn families", c12),
        ("alternating family", c13),
        ("determinism", c14),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = f();
        failed += usize::from(!ok);
        println!(
            "{} {:>2} {name}: {detail} ({:.2}s)",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            t.elapsed().as_secs_f64()
        );
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
