//! Assembly of the two equivalent presentations of the relation ideal for a
//! given `r >= 1`, the ideal-equality certificates between them, and the
//! reference table for `r = 1, 2, 3`.
//!
//! Ideal equality is certified by the explicit two-way rewriting identities
//! modulo `2c3`, never by search: each generator of one form is written as an
//! explicit combination of the other form's generators, so both inclusions
//! are exhibited.

use std::fmt;

use crate::localization::{alpha1, alpha2, chern_product_p, complement_class};
use crate::ring::{ambient_cubic, IntPoly, Var};
use crate::series::RhoCache;
use crate::symm;

/// Which shape of the presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Closed,
    Gf,
}

impl Form {
    pub fn name(self) -> &'static str {
        match self {
            Form::Closed => "closed",
            Form::Gf => "gf",
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresentationError {
    /// The presentation is stated for positive `r` only.
    InvalidR(u32),
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::InvalidR(r) => {
                write!(f, "presentation requires r >= 1, got {r}")
            }
        }
    }
}

impl std::error::Error for PresentationError {}

/// An ordered list of named relation generators in `Z[T, c2, c3]`, stored in
/// mod-2c3 normal form (the `2c3` generator itself is kept literally).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationIdeal {
    pub r: u32,
    pub form: Form,
    pub generators: Vec<(String, IntPoly)>,
}

fn nf(p: &IntPoly) -> IntPoly {
    p.normal_form_mod_2c3()
        .expect("generator lives in Z[T,c2,c3]")
}

fn two_c3() -> IntPoly {
    2 * IntPoly::var(Var::C3)
}

/// The closed-form presentation: ambient relations plus the six localization
/// pushforwards with `Q = 0`.
pub fn closed_form_ideal(r: u32) -> Result<PresentationIdeal, PresentationError> {
    if r < 1 {
        return Err(PresentationError::InvalidR(r));
    }
    let mut generators = vec![
        ("2c3".to_string(), two_c3()),
        (
            format!("ambient^{}", r + 1),
            nf(&ambient_cubic().pow(r + 1)),
        ),
    ];
    for component in [1u8, 2u8] {
        for k in 0..=2u8 {
            let value = match component {
                1 => alpha1(r, k, false),
                _ => alpha2(r, k),
            }
            .expect("localization sums are polynomial for r >= 1");
            generators.push((format!("alpha_{component},{k}"), nf(&value)));
        }
    }
    let ideal = PresentationIdeal {
        r,
        form: Form::Closed,
        generators,
    };
    ideal.assert_invariants();
    Ok(ideal)
}

/// The generating-function presentation: ambient relations plus five
/// coefficients of `R1`, `R2` (one multiplied by the ambient cubic).
pub fn gf_form_ideal(r: u32) -> Result<PresentationIdeal, PresentationError> {
    if r < 1 {
        return Err(PresentationError::InvalidR(r));
    }
    let rr = r as i64;
    let cache = RhoCache::new(2 * r as usize + 2);
    let amb = ambient_cubic();
    let generators = vec![
        ("2c3".to_string(), two_c3()),
        (format!("ambient^{}", r + 1), nf(&amb.pow(r + 1))),
        (format!("rho_1,{}", rr), nf(&cache.rho(1, rr))),
        (format!("rho_1,{}", rr + 1), nf(&cache.rho(1, rr + 1))),
        (
            format!("amb*rho_2,{}", 2 * rr - 2),
            nf(&amb.mul(&cache.rho(2, 2 * rr - 2))),
        ),
        (format!("rho_2,{}", 2 * rr), nf(&cache.rho(2, 2 * rr))),
        (
            format!("rho_2,{}", 2 * rr + 2),
            nf(&cache.rho(2, 2 * rr + 2)),
        ),
    ];
    let ideal = PresentationIdeal {
        r,
        form: Form::Gf,
        generators,
    };
    ideal.assert_invariants();
    Ok(ideal)
}

impl PresentationIdeal {
    /// Expected homogeneous degree of each generator, in order.
    fn expected_degrees(&self) -> Vec<u64> {
        let r = self.r as u64;
        match self.form {
            Form::Closed => vec![3, 3 * (r + 1), r, r + 1, r + 2, 2 * r, 2 * r + 1, 2 * r + 2],
            Form::Gf => vec![3, 3 * (r + 1), r, r + 1, 2 * r + 1, 2 * r, 2 * r + 2],
        }
    }

    fn assert_invariants(&self) {
        let degrees = self.expected_degrees();
        assert_eq!(self.generators.len(), degrees.len());
        for ((name, poly), d) in self.generators.iter().zip(degrees) {
            assert!(
                poly.is_homogeneous_of(d),
                "generator {name} is not homogeneous of degree {d}"
            );
            if name != "2c3" {
                assert_eq!(poly, &nf(poly), "generator {name} is not in normal form");
            }
        }
    }
}

/// Certificate for the equality of the first-component ideals: the three
/// closed-form relations and the two series coefficients generate the same
/// ideal in `Z[T, c2, c3] / (2c3)`, via explicit rewritings both ways.
pub fn verify_claim_z1(r: u32) -> bool {
    assert!(r >= 1);
    let rr = r as i64;
    let cache = RhoCache::new(r as usize + 2);
    let t = IntPoly::var(Var::T);
    let c2 = IntPoly::var(Var::C2);
    let a: Vec<IntPoly> = (0..=2u8)
        .map(|k| alpha1(r, k, false).expect("polynomial"))
        .collect();
    let rho_r = cache.rho(1, rr);
    let rho_r1 = cache.rho(1, rr + 1);

    // Forward: each alpha in terms of the rho's.
    let forward = nf(&a[0]) == nf(&rho_r)
        && nf(&a[1]) == nf(&(&rho_r1 - &t * &rho_r))
        && nf(&a[2]) == nf(&(-(&c2 * &rho_r)));
    // Reverse: each rho in terms of the alphas.
    let reverse = nf(&rho_r) == nf(&a[0]) && nf(&rho_r1) == nf(&(&a[1] + &t * &a[0]));
    forward && reverse
}

/// Certificate for the equality of the second-component ideals, both ways.
pub fn verify_claim_z2(r: u32) -> bool {
    assert!(r >= 1);
    let rr = r as i64;
    let cache = RhoCache::new(2 * r as usize + 2);
    let t = IntPoly::var(Var::T);
    let c2 = IntPoly::var(Var::C2);
    let amb = ambient_cubic();
    let a: Vec<IntPoly> = (0..=2u8)
        .map(|k| alpha2(r, k).expect("polynomial"))
        .collect();
    let rho_lo = cache.rho(2, 2 * rr - 2);
    let rho_mid = cache.rho(2, 2 * rr);
    let rho_hi = cache.rho(2, 2 * rr + 2);
    let t2c2 = t.pow(2) + &c2;

    let forward = nf(&a[0]) == nf(&rho_mid)
        && nf(&a[1]) == nf(&(&amb * &rho_lo - &t * &rho_mid))
        && nf(&a[2]) == nf(&(&t * &a[1] - &t2c2 * &rho_mid + &rho_hi));
    let reverse = nf(&rho_mid) == nf(&a[0])
        && nf(&(&amb * &rho_lo)) == nf(&(&a[1] + &t * &a[0]))
        && nf(&rho_hi) == nf(&(&a[2] - &t * &a[1] + &t2c2 * &a[0]));
    forward && reverse
}

/// The ambient relation `P_2(0)` is redundant: at `c1 = 0` it equals
/// `-8c3^2`, an integer multiple of `2c3`.
pub fn verify_ambient_redundancy() -> bool {
    let p2 = chern_product_p(2, &IntPoly::zero());
    let reduced = match symm::to_chern(&p2, true) {
        Ok(p) => p,
        Err(_) => return false,
    };
    let c3 = IntPoly::var(Var::C3);
    if reduced != -8 * c3.pow(2) {
        return false;
    }
    match reduced.exact_div(&(2 * &c3)) {
        Ok(q) => q == -4 * c3,
        Err(_) => false,
    }
}

/// The complement class comes out exactly as `c1*H^2 + c1^2*H + c1*c2 - 2c3`.
pub fn verify_complement_class() -> bool {
    let expected = {
        let c1 = IntPoly::var(Var::C1);
        let c2 = IntPoly::var(Var::C2);
        let c3 = IntPoly::var(Var::C3);
        let h = IntPoly::var(Var::H);
        &c1 * h.pow(2) + c1.pow(2) * &h + &c1 * &c2 - 2 * &c3
    };
    complement_class().map(|v| v == expected).unwrap_or(false)
}

/// One row of the reference table: a closed-form relation on the left and
/// its generating-function counterpart on the right.
#[derive(Clone, Debug)]
pub struct TableRow {
    pub left_label: String,
    pub left: IntPoly,
    pub right_label: String,
    pub right: IntPoly,
}

/// One block of the reference table (fixed `r`).
#[derive(Clone, Debug)]
pub struct TableBlock {
    pub r: u32,
    pub ambient: String,
    pub z1: Vec<TableRow>,
    pub z2: Vec<TableRow>,
}

/// Computes the table block for `r` (all entries in mod-2c3 normal form).
pub fn table_block(r: u32) -> TableBlock {
    assert!((1..=3).contains(&r));
    let rr = r as i64;
    let cache = RhoCache::new(2 * r as usize + 2);
    let amb = ambient_cubic();
    let alpha = |component: u8, k: u8| -> IntPoly {
        let value = match component {
            1 => alpha1(r, k, false),
            _ => alpha2(r, k),
        }
        .expect("polynomial");
        nf(&value)
    };
    let amb_str = amb.to_string();
    let z1 = vec![
        TableRow {
            left_label: format!("alpha_1,0^{r}"),
            left: alpha(1, 0),
            right_label: format!("rho_1,{rr}"),
            right: nf(&cache.rho(1, rr)),
        },
        TableRow {
            left_label: format!("alpha_1,1^{r}"),
            left: alpha(1, 1),
            right_label: format!("rho_1,{}", rr + 1),
            right: nf(&cache.rho(1, rr + 1)),
        },
    ];
    let z2 = vec![
        TableRow {
            left_label: format!("alpha_2,0^{r}"),
            left: alpha(2, 0),
            right_label: format!("rho_2,{}", 2 * rr),
            right: nf(&cache.rho(2, 2 * rr)),
        },
        TableRow {
            left_label: format!("alpha_2,1^{r}"),
            left: alpha(2, 1),
            right_label: format!("rho_2,{}({amb_str})", 2 * rr - 2),
            right: nf(&amb.mul(&cache.rho(2, 2 * rr - 2))),
        },
        TableRow {
            left_label: format!("alpha_2,2^{r}"),
            left: alpha(2, 2),
            right_label: format!("rho_2,{}", 2 * rr + 2),
            right: nf(&cache.rho(2, 2 * rr + 2)),
        },
    ];
    TableBlock {
        r,
        ambient: format!("2c3, ({amb_str})^{}", r + 1),
        z1,
        z2,
    }
}

/// A cell of the computed table that disagrees with the reference corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellMismatch {
    pub r: u32,
    pub cell: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MismatchReport {
    pub mismatches: Vec<CellMismatch>,
}

impl fmt::Display for MismatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.mismatches {
            writeln!(
                f,
                "r={} cell {}: expected `{}`, got `{}`",
                m.r, m.cell, m.expected, m.got
            )?;
        }
        Ok(())
    }
}

/// Reference strings for the table, one tuple per row:
/// (left label, left value, right label, right value).
pub mod golden {
    pub const AMBIENT: [&str; 3] = [
        "2c3, (T^3 + c2T + c3)^2",
        "2c3, (T^3 + c2T + c3)^3",
        "2c3, (T^3 + c2T + c3)^4",
    ];

    pub const Z1: [[(&str, &str, &str, &str); 2]; 3] = [
        [
            ("alpha_1,0^1", "4T", "rho_1,1", "4T"),
            ("alpha_1,1^1", "2T^2 - 2c2", "rho_1,2", "6T^2 - 2c2"),
        ],
        [
            ("alpha_1,0^2", "6T^2 - 2c2", "rho_1,2", "6T^2 - 2c2"),
            ("alpha_1,1^2", "2T^3 - 6c2T", "rho_1,3", "8T^3 - 8c2T"),
        ],
        [
            ("alpha_1,0^3", "8T^3 - 8c2T", "rho_1,3", "8T^3 - 8c2T"),
            (
                "alpha_1,1^3",
                "2T^4 - 12c2T^2 + 2c2^2",
                "rho_1,4",
                "10T^4 - 20c2T^2 + 2c2^2",
            ),
        ],
    ];

    pub const Z2: [[(&str, &str, &str, &str); 3]; 3] = [
        [
            ("alpha_2,0^1", "3T^2 + c2", "rho_2,2", "3T^2 + c2"),
            (
                "alpha_2,1^1",
                "-2T^3 + c3",
                "rho_2,0(T^3 + c2T + c3)",
                "T^3 + c2T + c3",
            ),
            (
                "alpha_2,2^1",
                "T^4 - c2T^2",
                "rho_2,4",
                "6T^4 + 3c2T^2 + c3T + c2^2",
            ),
        ],
        [
            (
                "alpha_2,0^2",
                "6T^4 + 3c2T^2 + c3T + c2^2",
                "rho_2,4",
                "6T^4 + 3c2T^2 + c3T + c2^2",
            ),
            (
                "alpha_2,1^2",
                "-3T^5 + c2T^3 + c2c3",
                "rho_2,2(T^3 + c2T + c3)",
                "3T^5 + 4c2T^3 + c3T^2 + c2^2T + c2c3",
            ),
            (
                "alpha_2,2^2",
                "T^6 - 3c2T^4 + c3T^3 + c3^2",
                "rho_2,6",
                "10T^6 + 5c2T^4 + 4c2^2T^2 + c2^3 + c3^2",
            ),
        ],
        [
            (
                "alpha_2,0^3",
                "10T^6 + 5c2T^4 + 4c2^2T^2 + c2^3 + c3^2",
                "rho_2,6",
                "10T^6 + 5c2T^4 + 4c2^2T^2 + c2^3 + c3^2",
            ),
            (
                "alpha_2,1^3",
                "-4T^7 + 4c2T^5 + c3T^4 + c2^2c3",
                "rho_2,4(T^3 + c2T + c3)",
                "6T^7 + 9c2T^5 + c3T^4 + 4c2^2T^3 + c2^3T + c3^2T + c2^2c3",
            ),
            (
                "alpha_2,2^3",
                "T^8 - 6c2T^6 + c2^2T^4 + c2c3^2",
                "rho_2,8",
                "15T^8 + 5c2T^6 + c3T^5 + 10c2^2T^4 + 5c2^3T^2 + c3^2T^2 + c2^2c3T + c2^4",
            ),
        ],
    ];
}

/// Computes the table block for `r` and compares every cell against the
/// reference corpus (canonical rendering of mod-2c3 normal forms).
pub fn reproduce_table(r: u32) -> Result<TableBlock, MismatchReport> {
    assert!((1..=3).contains(&r));
    let block = table_block(r);
    let idx = (r - 1) as usize;
    let mut report = MismatchReport::default();
    let mut check = |cell: &str, expected: &str, got: &str| {
        if expected != got {
            report.mismatches.push(CellMismatch {
                r,
                cell: cell.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    };
    check("ambient", golden::AMBIENT[idx], &block.ambient);
    for (row, (ll, lv, rl, rv)) in block.z1.iter().zip(golden::Z1[idx]) {
        check(ll, ll, &row.left_label);
        check(&format!("{ll} value"), lv, &row.left.to_string());
        check(rl, rl, &row.right_label);
        check(&format!("{rl} value"), rv, &row.right.to_string());
    }
    for (row, (ll, lv, rl, rv)) in block.z2.iter().zip(golden::Z2[idx]) {
        check(ll, ll, &row.left_label);
        check(&format!("{ll} value"), lv, &row.left.to_string());
        check(rl, rl, &row.right_label);
        check(&format!("{rl} value"), rv, &row.right.to_string());
    }
    if report.mismatches.is_empty() {
        Ok(block)
    } else {
        Err(report)
    }
}

/// All three reference blocks, or the combined mismatch report.
pub fn reproduce_full_table() -> Result<Vec<TableBlock>, MismatchReport> {
    let mut blocks = Vec::new();
    let mut report = MismatchReport::default();
    for r in 1..=3 {
        match reproduce_table(r) {
            Ok(b) => blocks.push(b),
            Err(e) => report.mismatches.extend(e.mismatches),
        }
    }
    if report.mismatches.is_empty() {
        Ok(blocks)
    } else {
        Err(report)
    }
}
