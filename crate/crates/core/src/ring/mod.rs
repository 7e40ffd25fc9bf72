//! Exact sparse polynomial arithmetic over the fixed graded alphabet
//! `T, c1, c2, c3, l0, l1, l2, Q, H`.

mod coeff;
mod monomial;
mod poly;

pub use coeff::Coeff;
pub use monomial::{Monomial, Var, NVARS};
pub use poly::{IntPoly, RingError};

/// The ambient cubic `T^3 + c2*T + c3`.
pub fn ambient_cubic() -> IntPoly {
    IntPoly::var(Var::T).pow(3)
        + IntPoly::var(Var::C2) * IntPoly::var(Var::T)
        + IntPoly::var(Var::C3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> IntPoly {
        IntPoly::var(Var::T)
    }
    fn c2() -> IntPoly {
        IntPoly::var(Var::C2)
    }
    fn c3() -> IntPoly {
        IntPoly::var(Var::C3)
    }
    fn l(i: usize) -> IntPoly {
        IntPoly::var(Var::l(i))
    }

    #[test]
    fn add_examples() {
        assert_eq!(t() + t().negated(), IntPoly::zero());
        assert_eq!((t().pow(2) + c2()) + c2(), t().pow(2) + 2 * c2());
        let rho12 = 6 * t().pow(2) - 2 * c2();
        assert_eq!(&rho12 + &rho12, 12 * t().pow(2) - 4 * c2());
    }

    #[test]
    fn mul_examples() {
        let one = IntPoly::one();
        assert_eq!((&one + &t()) * (&one - &t()), &one - &t().pow(2));
        assert_eq!(ambient_cubic() * IntPoly::one(), ambient_cubic());
        assert_eq!(
            (t().pow(2) + c2()) * (3 * t().pow(2) + c2()),
            3 * t().pow(4) + 4 * c2() * t().pow(2) + c2().pow(2)
        );
    }

    #[test]
    fn pow_examples() {
        assert_eq!(ambient_cubic().pow(0), IntPoly::one());
        let expected = t().pow(6)
            + 2 * c2() * t().pow(4)
            + 2 * c3() * t().pow(3)
            + c2().pow(2) * t().pow(2)
            + 2 * c2() * c3() * t()
            + c3().pow(2);
        assert_eq!(ambient_cubic().pow(2), expected);
        assert_eq!(IntPoly::constant(2).pow(3), IntPoly::constant(8));
    }

    #[test]
    fn homogeneous_part_examples() {
        let p = IntPoly::one() + 4 * t() + 6 * t().pow(2) - 2 * c2();
        assert_eq!(p.homogeneous_part(2), 6 * t().pow(2) - 2 * c2());
        assert_eq!(c3().homogeneous_part(3), c3());
        assert_eq!(c3().homogeneous_part(1), IntPoly::zero());
        // Components sum back to the whole.
        let mut sum = IntPoly::zero();
        for d in 0..=2 {
            sum = sum + p.homogeneous_part(d);
        }
        assert_eq!(sum, p);
    }

    #[test]
    fn degree_of_zero_is_undefined() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(c3().degree(), Some(3));
    }

    #[test]
    fn substitute_examples() {
        let c1 = IntPoly::var(Var::C1);
        let h = IntPoly::var(Var::H);
        let p = &c1 * h.pow(2) + c1.pow(2) * &h + &c1 * c2() - 2 * c3();
        assert_eq!(p.substitute(Var::C1, &IntPoly::zero()), -2 * c3());
        assert_eq!(t().substitute(Var::T, &t()), t());
        let q = IntPoly::var(Var::Q);
        let p = (&q + 2 * l(0)) * (t() + l(0)).pow(2);
        assert_eq!(
            p.substitute(Var::Q, &IntPoly::zero()),
            2 * l(0) * (t() + l(0)).pow(2)
        );
    }

    #[test]
    fn exact_div_examples() {
        let num = l(1).pow(2) - l(0).pow(2);
        let den = l(1) - l(0);
        assert_eq!(num.exact_div(&den).unwrap(), l(1) + l(0));
        assert_eq!(
            (2 * t().pow(2) + 2 * c2())
                .exact_div(&IntPoly::constant(2))
                .unwrap(),
            t().pow(2) + c2()
        );
        assert_eq!(
            (ambient_cubic() - ambient_cubic())
                .exact_div(&(l(1) - l(0)))
                .unwrap(),
            IntPoly::zero()
        );
        assert_eq!(t().exact_div(&c2()), Err(RingError::NotDivisible));
        assert_eq!(
            (3 * t()).exact_div(&IntPoly::constant(2)),
            Err(RingError::NotDivisible)
        );
    }

    #[test]
    fn div_linear_binomial_examples() {
        let a = l(0) * l(1) - l(1).pow(2);
        assert_eq!(a.div_linear_binomial(0, 1).unwrap(), l(1));
        let a = (l(0) - l(1)) * (t() + l(2));
        assert_eq!(a.div_linear_binomial(0, 1).unwrap(), t() + l(2));
        assert_eq!(
            l(0).div_linear_binomial(0, 1),
            Err(RingError::NonzeroRemainder)
        );
    }

    /// `(H - l0)(H - l1)(H - l2)`, the modulus for reduction in the universal curve.
    fn h_modulus() -> IntPoly {
        let h = IntPoly::var(Var::H);
        (&h - l(0)) * (&h - l(1)) * (&h - l(2))
    }

    #[test]
    fn reduce_mod_univariate_examples() {
        let h = IntPoly::var(Var::H);
        // (H - l1 - l2)(H - l0 - l2)(H - l0 - l1) reduced mod (H - l0)(H - l1)(H - l2)
        // equals c1*H^2 + c1^2*H + c1*c2 - 2c3 with the c's expanded in the l's.
        let j = (&h - l(1) - l(2)) * (&h - l(0) - l(2)) * (&h - l(0) - l(1));
        let red = j.reduce_mod_univariate(Var::H, &h_modulus()).unwrap();
        let e1 = l(0) + l(1) + l(2);
        let e2 = l(0) * l(1) + l(0) * l(2) + l(1) * l(2);
        let e3 = l(0) * l(1) * l(2);
        let c1l = e1.negated();
        let expected = &c1l * h.pow(2) + c1l.pow(2) * &h + &c1l * &e2 - 2 * e3.negated();
        assert_eq!(red, expected);

        assert_eq!(
            h.pow(3).reduce_mod_univariate(Var::H, &h.pow(3)).unwrap(),
            IntPoly::zero()
        );
        assert_eq!(h.reduce_mod_univariate(Var::H, &h.pow(2)).unwrap(), h);
        assert_eq!(
            h.reduce_mod_univariate(Var::H, &(2 * h.pow(2))),
            Err(RingError::NotMonic(Var::H))
        );
    }

    #[test]
    fn normal_form_examples() {
        assert_eq!(
            (2 * c3() * t()).normal_form_mod_2c3().unwrap(),
            IntPoly::zero()
        );
        assert_eq!((3 * c3()).normal_form_mod_2c3().unwrap(), c3());
        assert_eq!(
            (t().pow(4) - c2() * t().pow(2) + 2 * c3() * t())
                .normal_form_mod_2c3()
                .unwrap(),
            t().pow(4) - c2() * t().pow(2)
        );
        // Negative odd coefficients land on +1.
        assert_eq!(
            (-IntPoly::var(Var::C3)).normal_form_mod_2c3().unwrap(),
            c3()
        );
        assert_eq!(
            l(0).normal_form_mod_2c3(),
            Err(RingError::ForeignVariable(Var::L0))
        );
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!((6 * t().pow(2) - 2 * c2()).to_string(), "6T^2 - 2c2");
        assert_eq!((-2 * t().pow(3) + c3()).to_string(), "-2T^3 + c3");
        assert_eq!(ambient_cubic().to_string(), "T^3 + c2T + c3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(
            (6 * t().pow(4) + 3 * c2() * t().pow(2) + c3() * t() + c2().pow(2)).to_string(),
            "6T^4 + 3c2T^2 + c3T + c2^2"
        );
        assert_eq!((t() - IntPoly::one()).to_string(), "T - 1");
    }

    // Random polynomials in T, c2, c3, l0 with small support.
    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        let term = (-9i64..=9, 0u16..4, 0u16..3, 0u16..2, 0u16..3);
        proptest::collection::vec(term, 0..8).prop_map(|terms| {
            IntPoly::from_terms(terms.into_iter().map(|(c, et, ec2, ec3, el0)| {
                let m = Monomial::ONE
                    .with_exp(Var::T, et)
                    .with_exp(Var::C2, ec2)
                    .with_exp(Var::C3, ec3)
                    .with_exp(Var::L0, el0);
                (Coeff::from(c), m)
            }))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(a.mul(&b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn reduction_is_congruent(a in arb_poly(), lower in arb_poly(), d in 1u16..4) {
            // Monic modulus in T with random lower-order part.
            let m = IntPoly::term(1, Monomial::ONE.with_exp(Var::T, d))
                .add(&lower.substitute(Var::T, &IntPoly::zero()));
            let rem = a.reduce_mod_univariate(Var::T, &m).unwrap();
            prop_assert!(rem.max_exp(Var::T) < d || rem.is_zero());
            // a - rem is exactly divisible by m.
            let diff = a.sub(&rem);
            let q = diff.exact_div(&m);
            prop_assert!(q.is_ok());
            prop_assert_eq!(q.unwrap().mul(&m), diff);
        }

        #[test]
        fn normal_form_idempotent_and_additive(a in arb_poly(), b in arb_poly()) {
            let a = a.substitute(Var::L0, &IntPoly::zero());
            let b = b.substitute(Var::L0, &IntPoly::zero());
            let nf = |p: &IntPoly| p.normal_form_mod_2c3().unwrap();
            prop_assert_eq!(nf(&nf(&a)), nf(&a));
            prop_assert_eq!(nf(&a.add(&b)), nf(&nf(&a).add(&nf(&b))));
        }

        #[test]
        fn homogeneous_degree_additive(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            // Top homogeneous components multiply to the top component.
            let (d1, d2) = (a.degree().unwrap(), b.degree().unwrap());
            let ha = a.homogeneous_part(d1);
            let hb = b.homogeneous_part(d2);
            let prod = ha.mul(&hb);
            prop_assert_eq!(&prod.homogeneous_part(d1 + d2), &prod);
            prop_assert!(prod.is_homogeneous_of(d1 + d2));
        }

        #[test]
        fn rendering_is_injective_on_support(a in arb_poly(), b in arb_poly()) {
            if a == b {
                prop_assert_eq!(a.to_string(), b.to_string());
            }
        }
    }
}
