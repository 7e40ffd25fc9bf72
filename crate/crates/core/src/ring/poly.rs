//! Sparse multivariate polynomials over the integers.
//!
//! Representation: `BTreeMap<Monomial, Coeff>` keyed by the graded-lex term
//! order. Invariants:
//! - no stored zero coefficients (canonical sparse form);
//! - equality is term-map equality, and equal polynomials render identically;
//! - the zero polynomial is the empty map, and its degree is undefined
//!   (`degree()` returns `None`).
//!
//! All values are immutable after construction and every operation is a pure
//! function, so polynomials can be shared across threads freely.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::Coeff;
use super::monomial::{Monomial, Var};

/// Errors from exact ring operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingError {
    /// `exact_div` found no integer-polynomial quotient.
    NotDivisible,
    /// A binomial division left a nonzero remainder (a pole is present).
    NonzeroRemainder,
    /// The modulus of a univariate reduction is not monic in the chosen variable.
    NotMonic(Var),
    /// The operand mentions a variable outside the operation's domain.
    ForeignVariable(Var),
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::NotDivisible => write!(f, "no exact integer-polynomial quotient exists"),
            RingError::NonzeroRemainder => {
                write!(f, "binomial division left a nonzero remainder")
            }
            RingError::NotMonic(v) => write!(f, "modulus is not monic in {v}"),
            RingError::ForeignVariable(v) => write!(f, "operand mentions foreign variable {v}"),
        }
    }
}

impl std::error::Error for RingError {}

/// A sparse polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl IntPoly {
    pub fn zero() -> IntPoly {
        IntPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(Coeff::ONE)
    }

    pub fn constant(c: impl Into<Coeff>) -> IntPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::ONE, c);
        }
        IntPoly { terms }
    }

    pub fn var(v: Var) -> IntPoly {
        IntPoly::term(Coeff::ONE, Monomial::var(v))
    }

    pub fn term(c: impl Into<Coeff>, m: Monomial) -> IntPoly {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        IntPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Coeff, Monomial)>) -> IntPoly {
        let mut p = IntPoly::zero();
        for (c, m) in it {
            p.add_term(&c, &m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending canonical order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or(Coeff::ZERO)
    }

    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.last_key_value()
    }

    pub(crate) fn add_term_mut(&mut self, c: &Coeff, m: &Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(*m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn add_term(&mut self, c: &Coeff, m: &Monomial) {
        self.add_term_mut(c, m);
    }

    pub(crate) fn add_assign(&mut self, other: &IntPoly) {
        for (m, c) in &other.terms {
            self.add_term_mut(c, m);
        }
    }

    /// Subtracts `factor * other` in place.
    pub(crate) fn sub_assign_scaled(&mut self, other: &IntPoly, factor: &Coeff) {
        for (m, c) in &other.terms {
            self.add_term_mut(&c.mul(factor).neg(), m);
        }
    }

    /// Builds a polynomial from unsorted (monomial, coefficient) pairs by
    /// sorting, merging duplicates and bulk-loading the term map.
    pub(crate) fn from_pairs_vec(mut pairs: Vec<(Monomial, Coeff)>) -> IntPoly {
        pairs.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Monomial, Coeff)> = Vec::with_capacity(pairs.len());
        for (m, c) in pairs {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = lc.add(&c);
                }
                _ => merged.push((m, c)),
            }
        }
        IntPoly {
            terms: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c, m);
        }
        out
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(&c.neg(), m);
        }
        out
    }

    pub fn negated(&self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        // Iterate the smaller operand outermost.
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = IntPoly::zero();
        for (ms, cs) in &small.terms {
            for (ml, cl) in &large.terms {
                out.add_term(&cs.mul(cl), &ms.mul(ml));
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Coeff) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Maximum weighted degree over the terms; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.weighted_degree()).max()
    }

    /// Sum of the terms of weighted degree exactly `d`.
    pub fn homogeneous_part(&self, d: u64) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.weighted_degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// True when every term has weighted degree `d` (vacuously true for 0).
    pub fn is_homogeneous_of(&self, d: u64) -> bool {
        self.terms.keys().all(|m| m.weighted_degree() == d)
    }

    /// `Some(d)` when the polynomial is nonzero and concentrated in one degree.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let d = self.degree()?;
        self.is_homogeneous_of(d).then_some(d)
    }

    pub fn uses_only(&self, allowed: &[Var]) -> bool {
        self.terms.keys().all(|m| m.uses_only(allowed))
    }

    /// First variable outside `allowed` mentioned by the polynomial, if any.
    pub fn foreign_variable(&self, allowed: &[Var]) -> Option<Var> {
        for m in self.terms.keys() {
            for v in Var::ALL {
                if m.exp(v) > 0 && !allowed.contains(&v) {
                    return Some(v);
                }
            }
        }
        None
    }

    pub fn max_exp(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Coefficient of `v^e`, as a polynomial with `v` removed.
    pub fn coeff_of_power(&self, v: Var, e: u16) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == e)
                .map(|(m, c)| (m.with_exp(v, 0), c.clone()))
                .collect(),
        }
    }

    /// Replaces every occurrence of `v` by `s`, expanded to canonical form.
    pub fn substitute(&self, v: Var, s: &IntPoly) -> IntPoly {
        let max = self.max_exp(v);
        if max == 0 {
            return self.clone();
        }
        // Powers of s, computed once per exponent in use.
        let mut powers: Vec<Option<IntPoly>> = vec![None; max as usize + 1];
        powers[0] = Some(IntPoly::one());
        let mut out = IntPoly::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            if e == 0 {
                out.add_term(c, m);
                continue;
            }
            if powers[e].is_none() {
                let mut p = IntPoly::one();
                let mut have = 0usize;
                // Reuse the highest computed power below e.
                for k in (0..e).rev() {
                    if let Some(q) = &powers[k] {
                        p = q.clone();
                        have = k;
                        break;
                    }
                }
                for _ in have..e {
                    p = p.mul(s);
                }
                powers[e] = Some(p);
            }
            let stripped = m.with_exp(v, 0);
            for (pm, pc) in &powers[e].as_ref().unwrap().terms {
                out.add_term(&c.mul(pc), &stripped.mul(pm));
            }
        }
        out
    }

    /// Applies a permutation to `l0, l1, l2` simultaneously.
    pub fn permute_ls(&self, perm: &[usize; 3]) -> IntPoly {
        IntPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permute_ls(perm), c.clone()))
                .collect(),
        }
    }

    /// Exact division: returns `q` with `q * b == self`, or `NotDivisible`.
    pub fn exact_div(&self, b: &IntPoly) -> Result<IntPoly, RingError> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let (lead_m, lead_c) = b.leading().ok_or(RingError::NotDivisible)?;
        let mut rem = self.clone();
        let mut quot = IntPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if !lead_m.divides(rm) {
                return Err(RingError::NotDivisible);
            }
            let qc = rc.div_exact(lead_c).ok_or(RingError::NotDivisible)?;
            let qm = lead_m.div_into(rm);
            quot.add_term(&qc, &qm);
            rem = rem.sub(&b.mul_monomial(&qm, &qc));
        }
        Ok(quot)
    }

    /// Quotient of `self` by `(l_i - l_j)` via synthetic division, treating the
    /// polynomial as univariate in `l_i`. The remainder equals `self` at
    /// `l_i := l_j` and must vanish.
    pub fn div_linear_binomial(&self, i: usize, j: usize) -> Result<IntPoly, RingError> {
        assert!(i < 3 && j < 3 && i != j, "distinct l-indices required");
        let vi = Var::l(i);
        let vj = Var::l(j);
        let top = self.max_exp(vi) as usize;
        // One pass: slice the polynomial by the exponent of l_i.
        let mut slices: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); top + 1];
        for (m, c) in &self.terms {
            slices[m.exp(vi) as usize].push((m.with_exp(vi, 0), c.clone()));
        }
        // Horner descent: carry_d = A_d + carry_{d+1} * l_j. Distinct d give
        // distinct l_i-exponents in the quotient, so pairs need no merge pass
        // across iterations.
        let vj_m = Monomial::var(vj);
        let mut carry = IntPoly::zero();
        let mut quot_pairs: Vec<(Monomial, Coeff)> = Vec::new();
        for d in (0..=top).rev() {
            carry = carry.mul_monomial(&vj_m, &Coeff::ONE);
            for (m, c) in std::mem::take(&mut slices[d]) {
                carry.add_term_mut(&c, &m);
            }
            if d > 0 {
                let shift = Monomial::ONE.with_exp(vi, d as u16 - 1);
                quot_pairs.extend(carry.terms.iter().map(|(m, c)| (m.mul(&shift), c.clone())));
            }
        }
        if carry.is_zero() {
            Ok(IntPoly::from_pairs_vec(quot_pairs))
        } else {
            Err(RingError::NonzeroRemainder)
        }
    }

    /// Remainder of `self` modulo `m`, viewed as univariate in `v` with
    /// polynomial coefficients. `m` must be monic in `v`.
    pub fn reduce_mod_univariate(&self, v: Var, m: &IntPoly) -> Result<IntPoly, RingError> {
        let dm = m.max_exp(v);
        if dm == 0 || m.coeff_of_power(v, dm) != IntPoly::one() {
            return Err(RingError::NotMonic(v));
        }
        let mut rem = self.clone();
        loop {
            let d = rem.max_exp(v);
            if d < dm {
                return Ok(rem);
            }
            let lead = rem.coeff_of_power(v, d);
            let shift = Monomial::ONE.with_exp(v, d - dm);
            rem = rem.sub(&lead.mul(&m.mul_monomial(&shift, &Coeff::ONE)));
        }
    }

    /// Canonical representative modulo the ideal `(2c3)` in `Z[T, c2, c3]`:
    /// the coefficient of every monomial containing `c3` is reduced mod 2
    /// into `{0, 1}`; `c3`-free terms are untouched.
    pub fn normal_form_mod_2c3(&self) -> Result<IntPoly, RingError> {
        if let Some(v) = self.foreign_variable(&[Var::T, Var::C2, Var::C3]) {
            return Err(RingError::ForeignVariable(v));
        }
        let mut out = IntPoly::zero();
        for (m, c) in &self.terms {
            if m.exp(Var::C3) > 0 {
                if !c.is_even() {
                    out.add_term(&Coeff::ONE, m);
                }
            } else {
                out.add_term(c, m);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}{m}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for IntPoly {
    fn from(v: i64) -> Self {
        IntPoly::constant(v)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inherent:ident) => {
        impl $trait for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                self.$inherent(rhs)
            }
        }
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$inherent(&rhs)
            }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$inherent(rhs)
            }
        }
        impl $trait<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$inherent(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.negated()
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        self.negated()
    }
}

impl Mul<i64> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: i64) -> IntPoly {
        self.scale(&Coeff::from(rhs))
    }
}

impl Mul<&IntPoly> for i64 {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        rhs.scale(&Coeff::from(self))
    }
}

impl Mul<IntPoly> for i64 {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        rhs.scale(&Coeff::from(self))
    }
}
