//! Three-fixed-point localization sums on the plane and their pushforward
//! relation polynomials.
//!
//! A `LocalizationSum` carries one numerator per fixed point; the denominators
//! are the pairwise differences of the torus weights `l0, l1, l2` in the
//! pattern of the chosen convention. Evaluation places all three summands
//! over the common Vandermonde denominator `(l1-l0)(l2-l0)(l2-l1)` and then
//! performs three exact synthetic divisions. A nonzero remainder in any of
//! the divisions means the sum has a pole along some `l_i = l_j` and the
//! input was invalid; a clean run is an executable regularity proof.

use std::fmt;

use crate::ring::{IntPoly, RingError, Var};
use crate::symm::{self, SymmError};

/// Sign pattern of the fixed-point denominators.
///
/// `Z1` uses the pattern `(l_j - l_i)` for `j != i` (pushforwards from the
/// universal-conic component), `Z2` the pattern `(l_i - l_j)` (pushforwards
/// from the dual-plane component). For three fixed points each summand's two
/// factors flip sign together, so the two conventions evaluate identically;
/// both are kept so each source equation is transcribed literally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Z1,
    Z2,
}

impl Convention {
    /// Ordered denominator factors of summand `i`, as pairs `(a, b)` meaning
    /// `(l_a - l_b)`.
    fn denominator_factors(self, i: usize) -> [(usize, usize); 2] {
        match self {
            Convention::Z1 => match i {
                0 => [(1, 0), (2, 0)],
                1 => [(0, 1), (2, 1)],
                _ => [(0, 2), (1, 2)],
            },
            Convention::Z2 => match i {
                0 => [(0, 1), (0, 2)],
                1 => [(1, 0), (1, 2)],
                _ => [(2, 0), (2, 1)],
            },
        }
    }
}

/// A sum over the three torus fixed points.
#[derive(Clone, Debug)]
pub struct LocalizationSum {
    pub numerators: [IntPoly; 3],
    pub convention: Convention,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocError {
    Ring(RingError),
    Symm(SymmError),
}

impl fmt::Display for LocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocError::Ring(e) => write!(f, "{e}"),
            LocError::Symm(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for LocError {}

impl From<RingError> for LocError {
    fn from(e: RingError) -> Self {
        LocError::Ring(e)
    }
}

impl From<SymmError> for LocError {
    fn from(e: SymmError) -> Self {
        LocError::Symm(e)
    }
}

fn l(i: usize) -> IntPoly {
    IntPoly::var(Var::l(i))
}

fn binomial(a: usize, b: usize) -> IntPoly {
    l(a) - l(b)
}

/// The Vandermonde factor `(l1 - l0)(l2 - l0)(l2 - l1)`.
pub fn vandermonde() -> IntPoly {
    binomial(1, 0) * binomial(2, 0) * binomial(2, 1)
}

/// Numerator of the sum over the common Vandermonde denominator.
pub fn cleared_numerator(s: &LocalizationSum) -> Result<IntPoly, RingError> {
    let v = vandermonde();
    let mut n = IntPoly::zero();
    for i in 0..3 {
        let [f1, f2] = s.convention.denominator_factors(i);
        let den = binomial(f1.0, f1.1) * binomial(f2.0, f2.1);
        let cofactor = v.exact_div(&den)?;
        n.add_assign(&s.numerators[i].mul(&cofactor));
    }
    Ok(n)
}

/// Evaluates the sum exactly: clears denominators, then divides the cleared
/// numerator by `(l1 - l0)`, `(l2 - l0)`, `(l2 - l1)` in turn. Each division
/// must leave remainder zero.
pub fn eval_loc_sum(s: &LocalizationSum) -> Result<IntPoly, RingError> {
    cleared_numerator(s)?
        .div_linear_binomial(1, 0)?
        .div_linear_binomial(2, 0)?
        .div_linear_binomial(2, 1)
}

/// Fixed-point numerators `l_i^k (Q + 2 l_i) (T + l_i)^(r+1)` for the
/// universal-conic component.
pub fn z1_numerators(r: u32, k: u8) -> [IntPoly; 3] {
    let t = IntPoly::var(Var::T);
    let q = IntPoly::var(Var::Q);
    std::array::from_fn(|i| l(i).pow(k as u32) * (&q + 2 * l(i)) * (&t + l(i)).pow(r + 1))
}

/// Fixed-point numerators `l_i^k (T + l_j)^(r+1) (T + l_k)^(r+1)` for the
/// dual-plane component, `{i, j, k} = {0, 1, 2}`.
pub fn z2_numerators(r: u32, k: u8) -> [IntPoly; 3] {
    let t = IntPoly::var(Var::T);
    let powers: [IntPoly; 3] = std::array::from_fn(|i| (&t + l(i)).pow(r + 1));
    std::array::from_fn(|i| {
        let (j, kk) = match i {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        l(i).pow(k as u32) * powers[j].mul(&powers[kk])
    })
}

/// The relation `alpha_{1,k}^r` from the first envelope component, as an
/// exact integer polynomial in `T, c2, c3` (and `Q` when `keep_q`), with
/// `c1 = 0`. No mod-2c3 normalization is applied.
pub fn alpha1(r: u32, k: u8, keep_q: bool) -> Result<IntPoly, LocError> {
    assert!(k <= 2, "k must be 0, 1 or 2");
    let sum = LocalizationSum {
        numerators: z1_numerators(r, k),
        convention: Convention::Z1,
    };
    let in_ls = eval_loc_sum(&sum)?;
    let chern = symm::to_chern(&in_ls, true)?;
    let out = if keep_q {
        chern
    } else {
        chern.substitute(Var::Q, &IntPoly::zero())
    };
    assert!(
        out.is_homogeneous_of(r as u64 + k as u64),
        "alpha1({r},{k}) degree bookkeeping failed"
    );
    Ok(out)
}

/// The relation `alpha_{2,k}^r` from the second envelope component, exact,
/// with `c1 = 0` and no mod-2c3 normalization.
pub fn alpha2(r: u32, k: u8) -> Result<IntPoly, LocError> {
    assert!(k <= 2, "k must be 0, 1 or 2");
    let sum = LocalizationSum {
        numerators: z2_numerators(r, k),
        convention: Convention::Z2,
    };
    let in_ls = eval_loc_sum(&sum)?;
    let out = symm::to_chern(&in_ls, true)?;
    assert!(
        out.is_homogeneous_of(2 * r as u64 + k as u64),
        "alpha2({r},{k}) degree bookkeeping failed"
    );
    Ok(out)
}

/// A named closed-form relation.
#[derive(Clone, Debug)]
pub struct AlphaRelation {
    pub component: u8,
    pub k: u8,
    pub r: u32,
    pub value: IntPoly,
}

impl AlphaRelation {
    pub fn compute(component: u8, k: u8, r: u32) -> Result<AlphaRelation, LocError> {
        let value = match component {
            1 => alpha1(r, k, false)?,
            2 => alpha2(r, k)?,
            _ => panic!("component must be 1 or 2"),
        };
        Ok(AlphaRelation {
            component,
            k,
            r,
            value,
        })
    }

    pub fn degree(&self) -> u64 {
        match self.component {
            1 => self.r as u64 + self.k as u64,
            _ => 2 * self.r as u64 + self.k as u64,
        }
    }
}

/// The total equivariant Chern product `P_d` evaluated at `at_q`:
/// the product of `(at_q + i*l0 + j*l1 + k*l2)` over all `i + j + k = d`.
pub fn chern_product_p(d: u32, at_q: &IntPoly) -> IntPoly {
    assert!(d >= 1);
    let mut out = IntPoly::one();
    for i in 0..=d {
        for j in 0..=d - i {
            let k = d - i - j;
            let factor = at_q + (i as i64) * l(0) + (j as i64) * l(1) + (k as i64) * l(2);
            out = out.mul(&factor);
        }
    }
    out
}

/// The class of the singular locus in the universal curve: the product
/// `(H - l1 - l2)(H - l0 - l2)(H - l0 - l1)` reduced modulo
/// `(H - l0)(H - l1)(H - l2)` and rewritten in Chern classes. Equals
/// `c1*H^2 + c1^2*H + c1*c2 - 2c3`.
pub fn complement_class() -> Result<IntPoly, LocError> {
    let h = IntPoly::var(Var::H);
    let j_product = (&h - l(1) - l(2)) * (&h - l(0) - l(2)) * (&h - l(0) - l(1));
    let modulus = (&h - l(0)) * (&h - l(1)) * (&h - l(2));
    let reduced = j_product.reduce_mod_univariate(Var::H, &modulus)?;
    Ok(symm::to_chern(&reduced, false)?)
}
