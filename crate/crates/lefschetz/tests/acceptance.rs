//! End-to-end acceptance gate: one test per criterion, each printing a
//! single pass/fail line before asserting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lefschetz::intlinalg::{cokernel, normalize_projection, smith_normal_form, IntMatrix};
use lefschetz::laurent::{det_ring, ExponentFunctional, LaurentPoly};
use lefschetz::pipeline::{
    build_model, genus_search, min_section_degree, sections_with_degree,
    zeta_of_endomorphism,
};
use lefschetz::surface::{
    apply_h, classify_region, stretch_factor_certificate, x0, RegionId,
};
use lefschetz::unipoly::{divides, largest_real_root, UniPoly};
use lefschetz::words::{FreeEndomorphism, WordIdentitySet};

const MATRIX_FILE: &str = include_str!("../data/action_minus_id.matrix");
const ENDO_FILE: &str = include_str!("../data/arnoux_yoccoz.endo");
const WORDS_FILE: &str = include_str!("../data/word_identities.txt");

fn verdict(n: usize, ok: bool) {
    println!("criterion {n}: {}", if ok { "PASS" } else { "FAIL" });
}

fn action_matrix() -> IntMatrix {
    IntMatrix::parse(MATRIX_FILE).expect("bundled matrix parses")
}

fn endomorphism() -> FreeEndomorphism {
    FreeEndomorphism::parse(ENDO_FILE).expect("bundled endomorphism parses")
}

#[test]
fn criterion_1_smith_normal_form() {
    let m = action_matrix();
    let snf = smith_normal_form(&m);
    let umv = snf.u.mul(&m).unwrap().mul(&snf.v).unwrap();
    let expect: Vec<BigInt> = [1, 1, 1, 1, 1, 2, 0].iter().map(|&x| x.into()).collect();
    let ok = umv == snf.d
        && snf.u.determinant().unwrap().abs().is_one()
        && snf.v.determinant().unwrap().abs().is_one()
        && snf.invariant_factors() == expect;
    verdict(1, ok);
    assert!(ok, "invariant factors {:?}", snf.invariant_factors());
}

#[test]
fn criterion_2_free_quotient_projection() {
    let coker = cokernel(&action_matrix());
    let normalized = normalize_projection(&coker, 6).expect("G generates the free quotient");
    let row: Vec<i64> = (0..7)
        .map(|j| normalized.projection.get(0, j).to_i64().unwrap())
        .collect();
    let expect = vec![0, 1, 0, 0, 1, 0, 1];
    let ok = row == expect;
    verdict(2, ok);
    assert!(ok, "expected {expect:?}, got {row:?}");
}

#[test]
fn criterion_3_edge_action_matrix() {
    let model = build_model(&endomorphism()).expect("model builds");
    let t = |exps: &[i64], c: i64| -> Vec<(Vec<i64>, BigInt)> {
        vec![(exps.to_vec(), BigInt::from(c))]
    };
    let poly = |terms: Vec<Vec<(Vec<i64>, BigInt)>>| -> LaurentPoly {
        let mut p = LaurentPoly::zero(1);
        for group in terms {
            for (e, c) in group {
                p = p.add(&LaurentPoly::monomial(1, e, c)).unwrap();
            }
        }
        p
    };
    let z = || poly(vec![]);
    let one = || poly(vec![t(&[0], 1)]);
    let two = || poly(vec![t(&[0], 2)]);
    let v = || poly(vec![t(&[1], 1)]);
    let neg_vinv = || poly(vec![t(&[-1], -1)]);
    let neg_one = || poly(vec![t(&[0], -1)]);
    let expect = vec![
        vec![z(), z(), z(), z(), v(), z(), z()],
        vec![z(), z(), z(), z(), z(), v(), z()],
        vec![one(), z(), z(), one(), v(), z(), v()],
        vec![z(), one(), z(), z(), z(), z(), z()],
        vec![z(), z(), one(), z(), z(), z(), z()],
        vec![one(), one(), one(), two(), z(), z(), z()],
        vec![z(), neg_vinv(), neg_one(), z(), one(), one(), one()],
    ];
    let ok = model.f1.entries == expect;
    verdict(3, ok);
    assert!(ok, "edge action matrix mismatch");
}

#[test]
fn criterion_4_zeta_function() {
    let (_, z) = zeta_of_endomorphism(&endomorphism()).unwrap();
    let num = LaurentPoly::from_terms(
        2,
        &[
            (&[0, 0], 1),
            (&[0, 1], -1),
            (&[1, 2], -1),
            (&[1, 3], -3),
            (&[1, 4], 3),
            (&[1, 5], 1),
            (&[2, 6], 1),
            (&[2, 7], -1),
        ],
    );
    let den = LaurentPoly::from_terms(2, &[(&[0, 0], 1), (&[0, 1], -1)]);
    let reduced = LaurentPoly::from_terms(
        2,
        &[
            (&[0, 0], 1),
            (&[1, 2], -1),
            (&[1, 3], -4),
            (&[1, 4], -1),
            (&[2, 6], 1),
        ],
    );
    let ok = z.numerator == num
        && z.denominator == den
        && z.reduced.as_ref() == Some(&reduced);
    verdict(4, ok);
    assert!(ok, "zeta mismatch: numerator {:?}", z.numerator);
}

#[test]
fn criterion_5_no_euler_minus_two_section() {
    let (_, z) = zeta_of_endomorphism(&endomorphism()).unwrap();
    let empty = sections_with_degree(&z, 2).unwrap().is_empty();
    let min = min_section_degree(&z).unwrap();
    let exe = env!("CARGO_BIN_EXE_lefschetz");
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data/arnoux_yoccoz.endo");
    let status = std::process::Command::new(exe)
        .args(["sections", data, "--euler", "-2"])
        .output()
        .expect("binary runs");
    let ok = empty && min == 4 && status.status.success();
    verdict(5, ok);
    assert!(
        ok,
        "degree-2 empty: {empty}, min degree: {min}, exit ok: {}",
        status.status.success()
    );
}

#[test]
fn criterion_6_genus_search() {
    let (_, z) = zeta_of_endomorphism(&endomorphism()).unwrap();
    let reports = genus_search(&z, 4, 10).unwrap();
    let mut ok = reports.len() == 7;
    for r in &reports {
        let g = r.genus as i64;
        let mut expect: Vec<(i64, i64)> = (1..g).map(|b| (g - 3 * b, b)).collect();
        expect.sort();
        let got: Vec<(i64, i64)> = r
            .entries
            .iter()
            .map(|(s, _)| (s.class.a[0], s.class.b))
            .collect();
        ok &= got == expect && r.entries.iter().all(|(_, div)| !div);
    }
    verdict(6, ok);
    assert!(ok, "genus search mismatch");
}

#[test]
fn criterion_7_fiber_stretch_factor() {
    let p01 = UniPoly::from_i64(&[1, 0, -1, -4, -1, 0, 1]);
    let m = UniPoly::from_i64(&[-1, -1, -1, 1]);
    let quotient = p01.div_exact(&m);
    let div_ok = divides(&p01, &m)
        && quotient.as_ref().map(|q| q.mul(&m) == p01) == Some(true);
    let tol = BigRational::new(BigInt::one(), BigInt::from(1_000_000_000_000u64));
    let r1 = largest_real_root(&p01, &tol).unwrap();
    let r2 = largest_real_root(&m, &tol).unwrap();
    let close = (&r1 - &r2).abs()
        <= BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64));
    let approx_ok = (r2.to_f64().unwrap() - 1.839286755).abs() < 1e-8;
    let ok = div_ok && close && approx_ok;
    verdict(7, ok);
    assert!(ok, "divides: {div_ok}, roots close: {close}, approx: {approx_ok}");
}

#[test]
fn criterion_8_surface_dynamics() {
    let p0 = x0();
    let in_r3 = classify_region(&p0).unwrap() == RegionId::R3;
    let p1 = apply_h(&p0).unwrap();
    let moved = p1 != p0;
    let p2 = apply_h(&p1).unwrap();
    let period_two = p2 == p0;
    let cert = stretch_factor_certificate();
    let cert_ok = matches!(cert, Ok(ref p) if *p == UniPoly::from_i64(&[-1, -1, -1, 1]));
    let ok = in_r3 && moved && period_two && cert_ok;
    verdict(8, ok);
    assert!(ok, "region: {in_r3}, moved: {moved}, period two: {period_two}");
}

#[test]
fn criterion_9_word_identities() {
    let set = WordIdentitySet::parse(WORDS_FILE).unwrap();
    let results = set.verify_all();
    let ok = results.len() == 6 && results.iter().all(|(_, _, v)| *v);
    verdict(9, ok);
    for (lhs, rhs, v) in &results {
        assert!(*v, "identity failed: {lhs} == {rhs}");
    }
    assert!(ok, "expected six verified identities, got {}", results.len());
}

fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
        .collect();
    IntMatrix::from_rows(&data)
}

fn snf_certificate_holds(m: &IntMatrix) -> bool {
    let snf = smith_normal_form(m);
    if snf.u.mul(m).unwrap().mul(&snf.v).unwrap() != snf.d {
        return false;
    }
    if !snf.u.determinant().unwrap().abs().is_one()
        || !snf.v.determinant().unwrap().abs().is_one()
    {
        return false;
    }
    let factors = snf.invariant_factors();
    factors.windows(2).all(|w| {
        !w[0].is_negative()
            && (w[1].is_zero()
                || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()))
    })
}

fn random_laurent(rng: &mut StdRng) -> LaurentPoly {
    let mut p = LaurentPoly::zero(2);
    for _ in 0..rng.gen_range(0..4) {
        let e = vec![rng.gen_range(0..3i64), rng.gen_range(0..3i64)];
        let c = rng.gen_range(-3..=3i64);
        p = p.add(&LaurentPoly::monomial(2, e, c.into())).unwrap();
    }
    p
}

fn random_word(rng: &mut StdRng, rank: usize) -> Vec<(usize, i8)> {
    (0..rng.gen_range(0..8))
        .map(|_| {
            (
                rng.gen_range(0..rank),
                if rng.gen_bool(0.5) { 1i8 } else { -1i8 },
            )
        })
        .collect()
}

#[test]
fn criterion_10_property_suites() {
    let mut rng = StdRng::seed_from_u64(0x5eed);

    // 500 random Smith normal form certificates
    let snf_ok = (0..500).all(|_| {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        snf_certificate_holds(&random_matrix(&mut rng, rows, cols))
    });

    // 200 determinant/specialize homomorphism checks at t = 2 and t = 3
    let det_ok = (0..200).all(|_| {
        let m: Vec<Vec<LaurentPoly>> = (0..3)
            .map(|_| (0..3).map(|_| random_laurent(&mut rng)).collect())
            .collect();
        let u = ExponentFunctional::new(vec![
            rng.gen_range(0..3i64),
            rng.gen_range(0..3i64),
        ]);
        let d = det_ring(&m).unwrap();
        let ds = d.specialize(&u).unwrap();
        [2i64, 3].iter().all(|&t| {
            let mut num = IntMatrix::zero(3, 3);
            for i in 0..3 {
                for j in 0..3 {
                    let entry = m[i][j]
                        .specialize(&u)
                        .unwrap()
                        .eval_int(&BigInt::from(t));
                    num.set(i, j, entry);
                }
            }
            num.determinant().unwrap() == ds.eval_int(&BigInt::from(t))
        })
    });

    // 200 Fox augmentation identities on random endomorphisms of rank <= 5
    let fox_ok = (0..200).all(|_| {
        let rank = rng.gen_range(1..=5);
        let gens = (0..rank).map(|i| format!("x{i}")).collect();
        let images = (0..rank)
            .map(|_| lefschetz::words::Word::reduce(&random_word(&mut rng, rank)))
            .collect();
        let phi = FreeEndomorphism::new(gens, images).unwrap();
        // the zero projection annihilates everything, so the Jacobian is
        // defined and its augmentation must equal the abelianization
        let psi = IntMatrix::zero(1, rank);
        let jac = phi.fox_jacobian(&psi).unwrap();
        jac.augmentation() == phi.abelianization()
    });

    // symmetry witness of the bundled zeta function
    let (_, z) = zeta_of_endomorphism(&endomorphism()).unwrap();
    let sym_ok =
        z.reduced.as_ref().unwrap().symmetry_witness() == Some((1, vec![2, 6]));

    let ok = snf_ok && det_ok && fox_ok && sym_ok;
    verdict(10, ok);
    assert!(
        ok,
        "snf: {snf_ok}, det/specialize: {det_ok}, fox: {fox_ok}, symmetry: {sym_ok}"
    );
}
