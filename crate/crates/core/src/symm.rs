//! Rewriting S3-symmetric polynomials in `l0, l1, l2` in Chern classes.
//!
//! Sign convention: `(x - l0)(x - l1)(x - l2) = x^3 + c1*x^2 + c2*x + c3`,
//! so the elementary symmetric polynomials map as `e1 -> -c1`, `e2 -> c2`,
//! `e3 -> -c3`. `T`, `Q` and `H` pass through as inert coefficient variables.
//!
//! The general rewriting is the classical Gauss elimination on lex-leading
//! monomials. When the caller immediately sets `c1 = 0` there is an exact
//! shortcut: specialize `l2 := -l0 - l1` (forcing `e1 = 0`) and reconstruct
//! the image from the two-variable specializations of `c2` and `c3`, which
//! are algebraically independent. Both paths verify their output by
//! resubstitution, so a wrong answer cannot escape silently.

use std::collections::BTreeMap;
use std::fmt;

use crate::ring::{Coeff, IntPoly, Monomial, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymmError {
    /// Input is not invariant under all six permutations of `l0, l1, l2`.
    NotSymmetric,
    /// Input already mentions a Chern-class variable.
    ChernVariablePresent(Var),
}

impl fmt::Display for SymmError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmError::NotSymmetric => write!(f, "polynomial is not symmetric in l0, l1, l2"),
            SymmError::ChernVariablePresent(v) => {
                write!(f, "polynomial already mentions Chern variable {v}")
            }
        }
    }
}

impl std::error::Error for SymmError {}

/// True iff `a` is invariant under all six permutations of `(l0, l1, l2)`.
///
/// Invariance under a transposition and a 3-cycle forces invariance under
/// the group they generate, which is all of S3, so two checks suffice.
pub fn is_symmetric(a: &IntPoly) -> bool {
    [[1, 0, 2], [1, 2, 0]].iter().all(|p| &a.permute_ls(p) == a)
}

/// The elementary symmetric polynomial `e_k(l0, l1, l2)` for `k = 1, 2, 3`.
pub fn elementary(k: usize) -> IntPoly {
    let l = |i: usize| IntPoly::var(Var::l(i));
    match k {
        1 => l(0) + l(1) + l(2),
        2 => l(0) * l(1) + l(0) * l(2) + l(1) * l(2),
        3 => l(0) * l(1) * l(2),
        _ => panic!("elementary symmetric index must be 1..=3"),
    }
}

/// The image of `c_k` in the l-variables: `-e1`, `e2`, `-e3`.
pub fn chern_in_ls(k: usize) -> IntPoly {
    match k {
        1 | 3 => elementary(k).negated(),
        2 => elementary(2),
        _ => panic!("chern index must be 1..=3"),
    }
}

/// Substitutes `c1, c2, c3` by their expansions in the l-variables.
pub fn chern_to_ls(a: &IntPoly) -> IntPoly {
    a.substitute(Var::C1, &chern_in_ls(1))
        .substitute(Var::C2, &chern_in_ls(2))
        .substitute(Var::C3, &chern_in_ls(3))
}

/// Rewrites a symmetric polynomial in terms of `c1, c2, c3` (then sets
/// `c1 = 0` when requested). `T`, `Q`, `H` are treated as scalars.
pub fn to_chern(a: &IntPoly, set_c1_zero: bool) -> Result<IntPoly, SymmError> {
    if let Some(v) = a.foreign_variable(&[Var::T, Var::Q, Var::H, Var::L0, Var::L1, Var::L2]) {
        return Err(SymmError::ChernVariablePresent(v));
    }
    if !is_symmetric(a) {
        return Err(SymmError::NotSymmetric);
    }
    if set_c1_zero {
        to_chern_e1_zero(a)
    } else {
        to_chern_general(a)
    }
}

/// Lex-greatest l-exponent triple occurring in `p`, with l0 > l1 > l2.
fn leading_l_triple(p: &IntPoly) -> Option<[u16; 3]> {
    let mut best: Option<[u16; 3]> = None;
    for (m, _) in p.terms_desc() {
        let t = [m.exp(Var::L0), m.exp(Var::L1), m.exp(Var::L2)];
        if t == [0, 0, 0] {
            continue;
        }
        if best.map_or(true, |b| t > b) {
            best = Some(t);
        }
    }
    best
}

/// Terms of `p` whose l-exponents equal `triple`, with the l-part stripped.
fn coefficient_at_l_triple(p: &IntPoly, triple: [u16; 3]) -> IntPoly {
    IntPoly::from_terms(p.terms_desc().filter_map(|(m, c)| {
        if [m.exp(Var::L0), m.exp(Var::L1), m.exp(Var::L2)] == triple {
            let stripped = m
                .with_exp(Var::L0, 0)
                .with_exp(Var::L1, 0)
                .with_exp(Var::L2, 0);
            Some((c.clone(), stripped))
        } else {
            None
        }
    }))
}

fn to_chern_general(a: &IntPoly) -> Result<IntPoly, SymmError> {
    let e = [elementary(1), elementary(2), elementary(3)];
    let c = [
        IntPoly::var(Var::C1),
        IntPoly::var(Var::C2),
        IntPoly::var(Var::C3),
    ];
    // e1 -> -c1, e2 -> c2, e3 -> -c3.
    let sign = [Coeff::from(-1), Coeff::from(1), Coeff::from(-1)];

    let mut work = a.clone();
    let mut out = IntPoly::zero();
    while let Some(triple) = leading_l_triple(&work) {
        let [ea, eb, ec] = triple;
        if !(ea >= eb && eb >= ec) {
            return Err(SymmError::NotSymmetric);
        }
        let coeff_poly = coefficient_at_l_triple(&work, triple);
        let exps = [ea - eb, eb - ec, ec];
        let mut subtract = coeff_poly.clone();
        let mut record = coeff_poly.clone();
        for k in 0..3 {
            if exps[k] > 0 {
                subtract = subtract.mul(&e[k].pow(exps[k] as u32));
                // e_k contributes sign[k]^exp * c_k^exp in the Chern image.
                let mut factor = c[k].pow(exps[k] as u32);
                if exps[k] % 2 == 1 && sign[k] == Coeff::from(-1) {
                    factor = factor.negated();
                }
                record = record.mul(&factor);
            }
        }
        work.sub_assign_scaled(&subtract, &Coeff::ONE);
        out.add_assign(&record);
    }
    // Remaining part is l-free and passes through unchanged.
    out.add_assign(&work);

    // Resubstitution round trip.
    if chern_to_ls(&out) != *a {
        return Err(SymmError::NotSymmetric);
    }
    Ok(out)
}

/// Specializations of `c2`, `c3` under `l2 := -l0 - l1` (i.e. at `e1 = 0`):
/// `c2 -> -(l0^2 + l0 l1 + l1^2)`, `c3 -> l0^2 l1 + l0 l1^2`.
fn c2_hat() -> IntPoly {
    let l0 = IntPoly::var(Var::L0);
    let l1 = IntPoly::var(Var::L1);
    (l0.pow(2) + &l0 * &l1 + l1.pow(2)).negated()
}

fn c3_hat() -> IntPoly {
    let l0 = IntPoly::var(Var::L0);
    let l1 = IntPoly::var(Var::L1);
    &l0 * &l1 * (&l0 + &l1)
}

struct HatPowers {
    c2h: IntPoly,
    c3h: IntPoly,
    cache: BTreeMap<(u16, u16), IntPoly>,
}

impl HatPowers {
    fn new() -> Self {
        let mut cache = BTreeMap::new();
        cache.insert((0, 0), IntPoly::one());
        HatPowers {
            c2h: c2_hat(),
            c3h: c3_hat(),
            cache,
        }
    }

    fn get(&mut self, b: u16, c: u16) -> &IntPoly {
        self.ensure(b, c);
        &self.cache[&(b, c)]
    }

    fn ensure(&mut self, b: u16, c: u16) {
        if self.cache.contains_key(&(b, c)) {
            return;
        }
        let p = if b > 0 {
            self.ensure(b - 1, c);
            self.cache[&(b - 1, c)].mul(&self.c2h)
        } else {
            self.ensure(b, c - 1);
            self.cache[&(b, c - 1)].mul(&self.c3h)
        };
        self.cache.insert((b, c), p);
    }
}

fn to_chern_e1_zero(a: &IntPoly) -> Result<IntPoly, SymmError> {
    // Binomial rows for expanding l2^e = (-(l0 + l1))^e.
    let max_e = a.max_exp(Var::L2) as usize;
    let mut binom: Vec<Vec<Coeff>> = Vec::with_capacity(max_e + 1);
    binom.push(vec![Coeff::ONE]);
    for e in 1..=max_e {
        let prev = &binom[e - 1];
        let mut row = Vec::with_capacity(e + 1);
        row.push(Coeff::ONE);
        for j in 1..e {
            row.push(prev[j - 1].add(&prev[j]));
        }
        row.push(Coeff::ONE);
        binom.push(row);
    }

    // Expand l2 term by term, accumulating directly into slices keyed by the
    // inert (T, Q, H) part.
    let mut slices: BTreeMap<Monomial, IntPoly> = BTreeMap::new();
    for (m, c) in a.terms_desc() {
        let inert = m
            .with_exp(Var::L0, 0)
            .with_exp(Var::L1, 0)
            .with_exp(Var::L2, 0);
        let slice = slices.entry(inert).or_default();
        let e = m.exp(Var::L2) as usize;
        let e0 = m.exp(Var::L0);
        let e1 = m.exp(Var::L1);
        if e == 0 {
            let lpart = Monomial::ONE.with_exp(Var::L0, e0).with_exp(Var::L1, e1);
            slice.add_term_mut(c, &lpart);
        } else {
            let signed = if e % 2 == 1 { c.neg() } else { c.clone() };
            for j in 0..=e {
                let lpart = Monomial::ONE
                    .with_exp(Var::L0, e0 + j as u16)
                    .with_exp(Var::L1, e1 + (e - j) as u16);
                slice.add_term_mut(&signed.mul(&binom[e][j]), &lpart);
            }
        }
    }

    let mut powers = HatPowers::new();
    let mut out = IntPoly::zero();
    for (inert, mut slice) in slices {
        while let Some((lead_m, lead_c)) = slice.leading().map(|(m, c)| (*m, c.clone())) {
            let a0 = lead_m.exp(Var::L0);
            let a1 = lead_m.exp(Var::L1);
            // Leading monomial of c2h^b * c3h^c is (-1)^b l0^(2b+2c) l1^c.
            if a0 < 2 * a1 || (a0 - 2 * a1) % 2 != 0 {
                return Err(SymmError::NotSymmetric);
            }
            let b = (a0 - 2 * a1) / 2;
            let c = a1;
            let u = if b % 2 == 1 { lead_c.neg() } else { lead_c };
            let basis = powers.get(b, c);
            slice.sub_assign_scaled(basis, &u);
            let cm = inert.with_exp(Var::C2, b).with_exp(Var::C3, c);
            out.add_term_mut(&u, &cm);
        }
    }
    Ok(out)
}
