//! Shared oracle: second divided differences computed through the complete
//! homogeneous symmetric polynomials, entirely independent of the library's
//! denominator-clearing evaluation path.
//!
//! For three points the divided difference of `y^m` is `h_{m-2}(l0, l1, l2)`.
//! With `e1 = 0` the `h` recurrence collapses to
//! `h_m = -c2 * h_{m-2} - c3 * h_{m-3}` over `Z[c2, c3]`, so any relation
//! whose fixed-point numerators come from a single polynomial `g(y)` can be
//! assembled directly from the coefficients of `g`.

use chowgen::ring::{Coeff, IntPoly, Var};

/// `h_0..=h_max` at `e1 = 0`, expressed in `c2, c3`.
pub fn h_polys(max: usize) -> Vec<IntPoly> {
    let c2 = IntPoly::var(Var::C2);
    let c3 = IntPoly::var(Var::C3);
    let mut h = Vec::with_capacity(max + 1);
    for m in 0..=max {
        let value = match m {
            0 => IntPoly::one(),
            1 => IntPoly::zero(),
            2 => c2.negated(),
            _ => -(&c2 * &h[m - 2]) - &c3 * &h[m - 3],
        };
        h.push(value);
    }
    h
}

/// Exact binomial coefficient.
pub fn binom(n: u32, k: u32) -> Coeff {
    if k > n {
        return Coeff::ZERO;
    }
    let mut out = Coeff::ONE;
    for i in 0..k {
        out = out
            .mul(&Coeff::from((n - i) as i64))
            .div_exact(&Coeff::from((i + 1) as i64))
            .expect("binomial coefficients are integers");
    }
    out
}

/// Divided-difference oracle for the first-component relation: numerators
/// `2 l^(k+1) (T + l)^(r+1)` give `sum_m 2 C(r+1, m) T^(r+1-m) h_{k+m-1}`.
pub fn oracle_alpha1(r: u32, k: u8) -> IntPoly {
    let t = IntPoly::var(Var::T);
    let h = h_polys((r + k as u32 + 2) as usize);
    let mut out = IntPoly::zero();
    for m in 0..=r + 1 {
        let idx = k as i64 + m as i64 - 1;
        if idx < 0 {
            continue;
        }
        let coeff = binom(r + 1, m).mul(&Coeff::from(2));
        let term = t.pow(r + 1 - m).scale(&coeff).mul(&h[idx as usize]);
        out = out + term;
    }
    out
}

/// Divided-difference oracle for the second-component relation. At `e1 = 0`
/// the paired numerator collapses to a single-variable form
/// `y^k ((T^2 + c2) - T y + y^2)^(r+1)`, expanded multinomially.
pub fn oracle_alpha2(r: u32, k: u8) -> IntPoly {
    let t = IntPoly::var(Var::T);
    let a_poly = t.pow(2) + IntPoly::var(Var::C2);
    let n = r + 1;
    let h = h_polys((k as u32 + 2 * n) as usize);
    let mut a_powers = vec![IntPoly::one()];
    for _ in 0..n {
        a_powers.push(a_powers.last().unwrap().mul(&a_poly));
    }
    let mut out = IntPoly::zero();
    for a in 0..=n {
        for b in 0..=n - a {
            let c = n - a - b;
            let idx = k as i64 + b as i64 + 2 * c as i64 - 2;
            if idx < 0 {
                continue;
            }
            let mut coeff = binom(n, a).mul(&binom(n - a, b));
            if b % 2 == 1 {
                coeff = coeff.neg();
            }
            let term = a_powers[a as usize]
                .mul(&t.pow(b))
                .scale(&coeff)
                .mul(&h[idx as usize]);
            out = out + term;
        }
    }
    out
}
