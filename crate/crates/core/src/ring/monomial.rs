//! The fixed variable alphabet and exponent vectors over it.
//!
//! The alphabet is immutable: nine graded variables with fixed weights.
//! `T`, `c1`, `l0..l2`, `Q`, `H` have weight 1; `c2` has weight 2 and `c3`
//! weight 3. Variable identity is positional.

use std::cmp::Ordering;
use std::fmt;

/// A variable of the fixed alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    C1,
    C2,
    C3,
    L0,
    L1,
    L2,
    Q,
    H,
}

pub const NVARS: usize = 9;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::T,
        Var::C1,
        Var::C2,
        Var::C3,
        Var::L0,
        Var::L1,
        Var::L2,
        Var::Q,
        Var::H,
    ];

    /// The torus parameters `l0, l1, l2`.
    pub const LS: [Var; 3] = [Var::L0, Var::L1, Var::L2];

    /// The Chern-class variables `c1, c2, c3`.
    pub const CS: [Var; 3] = [Var::C1, Var::C2, Var::C3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn weight(self) -> u64 {
        match self {
            Var::C2 => 2,
            Var::C3 => 3,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "T",
            Var::C1 => "c1",
            Var::C2 => "c2",
            Var::C3 => "c3",
            Var::L0 => "l0",
            Var::L1 => "l1",
            Var::L2 => "l2",
            Var::Q => "Q",
            Var::H => "H",
        }
    }

    pub fn latex(self) -> &'static str {
        match self {
            Var::T => "T",
            Var::C1 => "c_1",
            Var::C2 => "c_2",
            Var::C3 => "c_3",
            Var::L0 => "l_0",
            Var::L1 => "l_1",
            Var::L2 => "l_2",
            Var::Q => "Q",
            Var::H => "H",
        }
    }

    pub fn l(i: usize) -> Var {
        Var::LS[i]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Tie-break precedence for the term order: T > c2 > c3 > c1 > Q > H > l0 > l1 > l2.
const ORDER_PRECEDENCE: [Var; NVARS] = [
    Var::T,
    Var::C2,
    Var::C3,
    Var::C1,
    Var::Q,
    Var::H,
    Var::L0,
    Var::L1,
    Var::L2,
];

/// Order in which variables are printed inside a monomial (`c2c3T`, `c1H^2`, ...).
pub(crate) const PRINT_ORDER: [Var; NVARS] = [
    Var::C1,
    Var::C2,
    Var::C3,
    Var::L0,
    Var::L1,
    Var::L2,
    Var::Q,
    Var::H,
    Var::T,
];

/// An exponent vector over the fixed alphabet.
///
/// The weighted degree is additive under multiplication. `Ord` is the
/// graded-lexicographic term order used everywhere: weighted degree first,
/// ties broken lexicographically by `ORDER_PRECEDENCE`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; NVARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; NVARS] };

    pub fn var(v: Var) -> Monomial {
        Monomial::ONE.with_exp(v, 1)
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: u16) -> Monomial {
        self.exps[v.index()] = e;
        self
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0; NVARS]
    }

    pub fn weighted_degree(&self) -> u64 {
        Var::ALL
            .iter()
            .map(|v| self.exps[v.index()] as u64 * v.weight())
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; NVARS];
        for i in 0..NVARS {
            exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .expect("monomial exponent overflow");
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..NVARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`; caller must have checked `self.divides(other)`.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        let mut exps = [0u16; NVARS];
        for i in 0..NVARS {
            exps[i] = other.exps[i] - self.exps[i];
        }
        Monomial { exps }
    }

    /// Applies a permutation to the exponents of `l0, l1, l2`; all other
    /// variables are untouched. `perm[i]` is the image slot of `l_i`.
    pub fn permute_ls(&self, perm: &[usize; 3]) -> Monomial {
        let mut m = *self;
        let base = Var::L0.index();
        for i in 0..3 {
            m.exps[base + perm[i]] = self.exps[base + i];
        }
        m
    }

    pub fn uses_only(&self, allowed: &[Var]) -> bool {
        Var::ALL
            .iter()
            .all(|v| self.exps[v.index()] == 0 || allowed.contains(v))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.weighted_degree().cmp(&other.weighted_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for v in ORDER_PRECEDENCE {
            match self.exps[v.index()].cmp(&other.exps[v.index()]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for v in PRINT_ORDER {
            match self.exp(v) {
                0 => {}
                1 => write!(f, "{}", v.name())?,
                e => write!(f, "{}^{}", v.name(), e)?,
            }
        }
        Ok(())
    }
}
