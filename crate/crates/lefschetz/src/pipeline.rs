//! End-to-end computation: free-group endomorphism -> free quotient and
//! deck projection -> chain maps F0, F1 -> multivariable zeta function ->
//! section classes, Euler characteristics, stretch factors, and
//! divisibility searches against candidate minimal polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::intlinalg::{cokernel, normalize_projection, IntMatrix};
use crate::laurent::{det_ring, zeta_var_names, ExponentFunctional, LaurentPoly};
use crate::unipoly::{self, UniPoly};
use crate::words::{FreeEndomorphism, GroupRingMatrix};

/// Default width of root-isolating intervals: 10^-9.
pub fn default_tol() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
}

/// Deck projection together with the chain maps of the mapping torus:
/// F0 on vertices (trivial) and F1 on edges (the Fox Jacobian).
#[derive(Clone, Debug)]
pub struct Model {
    pub psi: IntMatrix,
    pub f0: GroupRingMatrix,
    pub f1: GroupRingMatrix,
}

/// Compute the free-quotient projection of `coker(ab(phi) - Id)` and the
/// induced chain maps.  The projection is sign-normalized; when the free
/// rank is one and the last generator maps to a unit it is rescaled so
/// that generator maps to +1.
///
/// Errors with `DegenerateQuotient` when the free rank is zero: the zeta
/// function then collapses to a single-variable Lefschetz function and
/// carries no deck variables.
pub fn build_model(phi: &FreeEndomorphism) -> Result<Model> {
    let m = phi
        .abelianization()
        .sub(&IntMatrix::identity(phi.rank))?;
    let coker = cokernel(&m);
    if coker.free_rank == 0 {
        return Err(Error::DegenerateQuotient);
    }
    let coker = if coker.free_rank == 1
        && coker.projection.get(0, phi.rank - 1).magnitude().is_one()
    {
        normalize_projection(&coker, phi.rank - 1)?
    } else {
        coker
    };
    let f1 = phi.fox_jacobian(&coker.projection)?;
    let f0 = GroupRingMatrix::identity(1, coker.free_rank);
    Ok(Model {
        psi: coker.projection,
        f0,
        f1,
    })
}

/// The zeta function of the suspension flow on the free quotient:
/// `det(Id - tau F1) / det(Id - tau F0)`, both with constant term 1.
#[derive(Clone, Debug)]
pub struct ZetaFunction {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
    pub reduced: Option<LaurentPoly>,
    pub num_deck_vars: usize,
}

impl ZetaFunction {
    pub fn var_names(&self) -> Vec<String> {
        zeta_var_names(self.num_deck_vars)
    }

    pub fn render(&self, p: &LaurentPoly) -> String {
        let names = self.var_names();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        p.render(&refs)
    }
}

/// Append the suspension variable: embed an `r`-variable polynomial into
/// the `(r+1)`-variable ring with tau exponent zero.
fn lift(p: &LaurentPoly) -> LaurentPoly {
    let r = p.num_vars();
    let mut out = LaurentPoly::zero(r + 1);
    for (e, c) in p.terms() {
        let mut exps = e.clone();
        exps.push(0);
        out = out
            .add(&LaurentPoly::monomial(r + 1, exps, c.clone()))
            .expect("matching variable count");
    }
    out
}

fn id_minus_tau(f: &GroupRingMatrix) -> Vec<Vec<LaurentPoly>> {
    let r = f.num_vars;
    let mut tau_exps = vec![0i64; r + 1];
    tau_exps[r] = 1;
    let tau = LaurentPoly::monomial(r + 1, tau_exps, BigInt::one());
    let mut m = vec![vec![LaurentPoly::zero(r + 1); f.size]; f.size];
    for i in 0..f.size {
        for j in 0..f.size {
            let scaled = tau.mul(&lift(&f.entries[i][j])).expect("lifted entry");
            m[i][j] = if i == j {
                LaurentPoly::one(r + 1).sub(&scaled).expect("same ring")
            } else {
                scaled.negate()
            };
        }
    }
    m
}

/// Assemble the zeta function from the chain maps; the reduced form is
/// recorded whenever the denominator divides the numerator exactly.
pub fn zeta(f0: &GroupRingMatrix, f1: &GroupRingMatrix) -> Result<ZetaFunction> {
    if f0.num_vars != f1.num_vars {
        return Err(Error::DimensionMismatch(format!(
            "F0 over {} deck variables, F1 over {}",
            f0.num_vars, f1.num_vars
        )));
    }
    let numerator = det_ring(&id_minus_tau(f1))?;
    let denominator = det_ring(&id_minus_tau(f0))?;
    let reduced = numerator.exact_div(&denominator).ok();
    Ok(ZetaFunction {
        numerator,
        denominator,
        reduced,
        num_deck_vars: f1.num_vars,
    })
}

/// Compute the zeta function of an endomorphism in one step.
pub fn zeta_of_endomorphism(phi: &FreeEndomorphism) -> Result<(Model, ZetaFunction)> {
    let model = build_model(phi)?;
    let z = zeta(&model.f0, &model.f1)?;
    Ok((model, z))
}

/// Integral cohomology class `(a, b)`: values on the deck generators and
/// on the suspension class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub a: Vec<i64>,
    pub b: i64,
}

impl CohomologyClass {
    pub fn new(a: Vec<i64>, b: i64) -> Self {
        CohomologyClass { a, b }
    }

    pub fn functional(&self) -> ExponentFunctional {
        let mut w = self.a.clone();
        w.push(self.b);
        ExponentFunctional::new(w)
    }
}

/// A section class with its specialization polynomial, degree (minus the
/// Euler characteristic of the section), and an isolating interval for
/// the largest real root when one exists.
#[derive(Clone, Debug)]
pub struct SectionClass {
    pub class: CohomologyClass,
    pub poly: UniPoly,
    pub degree: usize,
    pub leading_root: Option<(BigRational, BigRational)>,
}

/// A class is a section class iff it assigns a strictly positive value to
/// every non-identity monomial of both the numerator and the denominator,
/// before reduction.
pub fn is_section(z: &ZetaFunction, u: &CohomologyClass) -> bool {
    if u.a.len() != z.num_deck_vars {
        return false;
    }
    let f = u.functional();
    [&z.numerator, &z.denominator].iter().all(|p| {
        p.terms()
            .filter(|(e, _)| e.iter().any(|&x| x != 0))
            .all(|(e, _)| f.apply(e) >= 1)
    })
}

/// Specialize the reduced zeta function along a section class.
pub fn section(z: &ZetaFunction, u: &CohomologyClass) -> Result<SectionClass> {
    if !is_section(z, u) {
        return Err(Error::NotASection);
    }
    let reduced = z.reduced.as_ref().ok_or(Error::NotReduced)?;
    let poly = reduced.specialize(&u.functional())?;
    let degree = poly.degree();
    let leading_root = unipoly::largest_real_root_interval(&poly, &default_tol()).ok();
    Ok(SectionClass {
        class: u.clone(),
        poly,
        degree,
        leading_root,
    })
}

/// Largest absolute deck exponent over the support of numerator and
/// denominator; the positivity constraints confine section classes of
/// degree `d` to `1 <= b <= d`, `|a| <= d * (this + 1)`.
fn deck_exponent_bound(z: &ZetaFunction) -> i64 {
    [&z.numerator, &z.denominator]
        .iter()
        .flat_map(|p| p.terms())
        .map(|(e, _)| e[0].abs())
        .max()
        .unwrap_or(0)
}

/// Enumerate section classes of degree `d` with `1 <= b <= d` and
/// `|a| <= a_bound`, sorted by `(a, b)`.
pub fn sections_with_degree_in_box(
    z: &ZetaFunction,
    d: usize,
    a_bound: i64,
) -> Result<Vec<SectionClass>> {
    if z.num_deck_vars != 1 {
        return Err(Error::DeckRankUnsupported(z.num_deck_vars));
    }
    if z.reduced.is_none() {
        return Err(Error::NotReduced);
    }
    let reduced = z.reduced.as_ref().expect("checked above");
    let mut out = Vec::new();
    for a in -a_bound..=a_bound {
        for b in 1..=d as i64 {
            let u = CohomologyClass::new(vec![a], b);
            if !is_section(z, &u) {
                continue;
            }
            // cheap degree check first; root isolation only on matches
            let poly = reduced.specialize(&u.functional())?;
            if poly.degree() != d {
                continue;
            }
            let leading_root =
                unipoly::largest_real_root_interval(&poly, &default_tol()).ok();
            out.push(SectionClass {
                class: u,
                poly,
                degree: d,
                leading_root,
            });
        }
    }
    out.sort_by_key(|s| (s.class.a[0], s.class.b));
    Ok(out)
}

/// All section classes whose specialization polynomial has degree `d`,
/// sorted by `(a, b)`.  Requires a single deck variable and a reduced
/// zeta function.
pub fn sections_with_degree(z: &ZetaFunction, d: usize) -> Result<Vec<SectionClass>> {
    let a_bound = d as i64 * (deck_exponent_bound(z) + 1);
    sections_with_degree_in_box(z, d, a_bound)
}

/// Same enumeration over a doubled search box; used to confirm the
/// standard box already captures every class of the requested degree.
pub fn sections_with_degree_doubled_box(
    z: &ZetaFunction,
    d: usize,
) -> Result<Vec<SectionClass>> {
    let a_bound = 2 * d as i64 * (deck_exponent_bound(z) + 1);
    sections_with_degree_in_box(z, d, a_bound)
}

const MIN_DEGREE_CAP: usize = 256;

/// Smallest degree carried by any section class, scanning d = 1, 2, ...
pub fn min_section_degree(z: &ZetaFunction) -> Result<usize> {
    for d in 1..=MIN_DEGREE_CAP {
        if !sections_with_degree(z, d)?.is_empty() {
            return Ok(d);
        }
    }
    Err(Error::Invalid(format!(
        "no section class of degree up to {MIN_DEGREE_CAP}"
    )))
}

pub use crate::unipoly::{divides, largest_real_root, largest_real_root_interval};

/// `m_g(x) = x^g - x^{g-1} - ... - x - 1`, the minimal polynomial
/// candidate for the stretch factor of a genus-g map with orientable
/// foliations and a single singularity.
pub fn genus_polynomial(g: usize) -> UniPoly {
    let mut coeffs = vec![BigInt::from(-1); g + 1];
    coeffs[g] = BigInt::one();
    UniPoly::new(coeffs)
}

/// One genus worth of search results: every section class of degree `2g`
/// and whether `m_g` divides its polynomial.
#[derive(Clone, Debug)]
pub struct GenusReport {
    pub genus: usize,
    pub modulus: UniPoly,
    pub entries: Vec<(SectionClass, bool)>,
}

/// Run the divisibility search for each genus in `g_lo..=g_hi`.
pub fn genus_search(z: &ZetaFunction, g_lo: usize, g_hi: usize) -> Result<Vec<GenusReport>> {
    if g_lo < 2 || g_lo > g_hi {
        return Err(Error::Invalid(format!(
            "genus range {g_lo}..{g_hi} must be nonempty with lower end >= 2"
        )));
    }
    let mut reports = Vec::new();
    for g in g_lo..=g_hi {
        let modulus = genus_polynomial(g);
        let entries = sections_with_degree(z, 2 * g)?
            .into_iter()
            .map(|s| {
                let verdict = divides(&s.poly, &modulus);
                (s, verdict)
            })
            .collect();
        reports.push(GenusReport {
            genus: g,
            modulus,
            entries,
        });
    }
    Ok(reports)
}
