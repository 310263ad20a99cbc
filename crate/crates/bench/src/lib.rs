//! Fixtures shared by the criterion benchmarks.

use dunkl_core::{DunklContext, Polynomial, Rational};

/// Generic-κ context in `n` variables.
pub fn generic(n: usize) -> DunklContext {
    DunklContext::generic(n).expect("n >= 2")
}

/// Context with κ fixed to `p/q`.
pub fn specialized(n: usize, p: i64, q: i64) -> DunklContext {
    DunklContext::specialized(n, Rational::new(p.into(), q.into())).expect("n >= 2")
}

/// A dense-ish homogeneous test polynomial: `(x_1 + 2 x_2 + ... + n x_n)^d`.
pub fn weighted_power(n: usize, d: u32) -> Polynomial {
    let mut lin = Polynomial::zero(n);
    for i in 1..=n {
        let xi = Polynomial::var(n, i).expect("index in range");
        lin = &lin + &xi.scale(&dunkl_core::Scalar::from_int(i as i64));
    }
    lin.pow(d)
}
