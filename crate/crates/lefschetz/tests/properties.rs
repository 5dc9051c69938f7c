//! Randomized invariants: ring axioms, division/multiplication round
//! trips, Smith normal form certificates, Fox product-rule bookkeeping,
//! free-reduction stability, and section symmetry transfer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use lefschetz::intlinalg::{smith_normal_form, IntMatrix};
use lefschetz::laurent::LaurentPoly;
use lefschetz::pipeline::{sections_with_degree, zeta_of_endomorphism};
use lefschetz::unipoly::{largest_real_root, UniPoly};
use lefschetz::words::{verify_identity, FreeEndomorphism, Word};

fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(
        (
            prop::collection::vec(-3i64..=3, 2),
            -4i64..=4,
        ),
        0..5,
    )
    .prop_map(|terms| {
        let mut p = LaurentPoly::zero(2);
        for (e, c) in terms {
            p = p.add(&LaurentPoly::monomial(2, e, c.into())).unwrap();
        }
        p
    })
}

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4)
        .prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-5i64..=5, c), r)
        })
        .prop_map(|rows| IntMatrix::from_rows(&rows))
}

fn word_strategy(rank: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..rank, prop::bool::ANY), 0..10).prop_map(|ls| {
        let letters: Vec<(usize, i8)> = ls
            .into_iter()
            .map(|(i, s)| (i, if s { 1 } else { -1 }))
            .collect();
        Word::reduce(&letters)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent_strategy(), b in laurent_strategy(), c in laurent_strategy()) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(p in laurent_strategy(), q in laurent_strategy()) {
        prop_assume!(!q.is_zero());
        let prod = p.mul(&q).unwrap();
        let back = prod.exact_div(&q).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn smith_normal_form_certificate(m in matrix_strategy()) {
        let snf = smith_normal_form(&m);
        prop_assert_eq!(snf.u.mul(&m).unwrap().mul(&snf.v).unwrap(), snf.d.clone());
        prop_assert!(snf.u.determinant().unwrap().abs().is_one());
        prop_assert!(snf.v.determinant().unwrap().abs().is_one());
        let factors = snf.invariant_factors();
        for w in factors.windows(2) {
            prop_assert!(!w[0].is_negative());
            if !w[1].is_zero() {
                prop_assert!(!w[0].is_zero());
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn free_reduction_is_stable(w in word_strategy(4), u in word_strategy(4)) {
        // inserting x x^-1 anywhere does not change the reduced word
        let mut letters = w.letters().to_vec();
        letters.push((2, 1));
        letters.push((2, -1));
        letters.extend_from_slice(u.letters());
        let spliced = Word::reduce(&letters);
        prop_assert!(verify_identity(&spliced, &w.concat(&u)));
        // inverse anti-homomorphism
        prop_assert_eq!(w.concat(&u).invert(), u.invert().concat(&w.invert()));
        prop_assert!(w.concat(&w.invert()).is_empty());
    }

    #[test]
    fn fox_product_rule_via_composition(w in word_strategy(3), u in word_strategy(3)) {
        // d(wu) = dw + w du, checked through a projection that kills the
        // abelianization so every endomorphism qualifies
        let gens: Vec<String> = (0..3).map(|i| format!("x{i}")).collect();
        let psi = IntMatrix::zero(1, 3);
        let as_endo = |first: &Word| {
            FreeEndomorphism::new(
                gens.clone(),
                vec![first.clone(), Word::generator(1), Word::generator(2)],
            )
            .unwrap()
        };
        let jw = as_endo(&w).fox_jacobian(&psi).unwrap();
        let ju = as_endo(&u).fox_jacobian(&psi).unwrap();
        let jwu = as_endo(&w.concat(&u)).fox_jacobian(&psi).unwrap();
        // with the trivial projection, w acts as 1 on coefficients
        for i in 0..3 {
            let sum = jw.entries[i][0].add(&ju.entries[i][0]).unwrap();
            prop_assert_eq!(&jwu.entries[i][0], &sum);
        }
    }

    #[test]
    fn product_root_is_max_of_factor_roots(
        a in prop::collection::vec(-4i64..=4, 2..4),
        b in prop::collection::vec(-4i64..=4, 2..4),
    ) {
        let p = UniPoly::from_i64(&a);
        let q = UniPoly::from_i64(&b);
        prop_assume!(!p.is_zero() && !q.is_zero());
        prop_assume!(p.degree() >= 1 && q.degree() >= 1);
        let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000u64));
        let rp = largest_real_root(&p, &tol).ok();
        let rq = largest_real_root(&q, &tol).ok();
        let rprod = largest_real_root(&p.mul(&q), &tol).ok();
        let expect = match (rp, rq) {
            (Some(x), Some(y)) => Some(if x >= y { x } else { y }),
            (Some(x), None) => Some(x),
            (None, Some(y)) => Some(y),
            (None, None) => None,
        };
        match (rprod, expect) {
            (Some(got), Some(want)) => {
                prop_assert!((got - want).abs() <= BigRational::new(BigInt::from(2), BigInt::from(1_000_000u64)));
            }
            (None, None) => {}
            (got, want) => prop_assert!(false, "root mismatch: {:?} vs {:?}", got, want),
        }
    }
}

#[test]
fn section_symmetry_transfer() {
    // t^deg * poly(1/t) = +- poly(t) for every enumerated section of the
    // bundled zeta function up to degree 20
    let phi = FreeEndomorphism::parse(include_str!("../data/arnoux_yoccoz.endo")).unwrap();
    let (_, z) = zeta_of_endomorphism(&phi).unwrap();
    let mut seen = 0;
    for d in 1..=20usize {
        for s in sections_with_degree(&z, d).unwrap() {
            seen += 1;
            let coeffs = s.poly.coeffs();
            let reversed = UniPoly::new(coeffs.iter().rev().cloned().collect());
            let negated = reversed.neg();
            assert!(
                reversed == s.poly || negated == s.poly,
                "section ({},{}) polynomial is not palindromic: {}",
                s.class.a[0],
                s.class.b,
                s.poly
            );
        }
    }
    assert!(seen > 0, "no sections enumerated");
}
