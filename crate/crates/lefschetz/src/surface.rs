//! Exact model of the slitted-polygon translation surface and its affine
//! pseudo-Anosov diffeomorphism over the cubic field Q(alpha), where
//! alpha is the positive real root of x^3 + x^2 + x - 1.
//!
//! Arithmetic is exact: elements are rational triples c0 + c1 a + c2 a^2
//! reduced modulo a^3 = 1 - a - a^2, and signs are decided by refining a
//! rational isolating interval of alpha against the minimal polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::unipoly::UniPoly;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Element c0 + c1*alpha + c2*alpha^2 of Q(alpha).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubicFieldElt {
    pub c: [BigRational; 3],
}

impl CubicFieldElt {
    pub fn new(c0: BigRational, c1: BigRational, c2: BigRational) -> Self {
        CubicFieldElt { c: [c0, c1, c2] }
    }

    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        CubicFieldElt {
            c: [q, BigRational::zero(), BigRational::zero()],
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(BigRational::from(BigInt::from(n)))
    }

    pub fn alpha() -> Self {
        CubicFieldElt {
            c: [BigRational::zero(), BigRational::one(), BigRational::zero()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        CubicFieldElt {
            c: [
                &self.c[0] + &other.c[0],
                &self.c[1] + &other.c[1],
                &self.c[2] + &other.c[2],
            ],
        }
    }

    pub fn neg(&self) -> Self {
        CubicFieldElt {
            c: [-&self.c[0], -&self.c[1], -&self.c[2]],
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CubicFieldElt {
            c: [&self.c[0] * q, &self.c[1] * q, &self.c[2] * q],
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // convolve, then fold a^3 = 1 - a - a^2 and
        // a^4 = a - a^2 - a^3 = 2a - 1
        let mut raw = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for i in 0..3 {
            for j in 0..3 {
                raw[i + j] = &raw[i + j] + &self.c[i] * &other.c[j];
            }
        }
        let [r0, r1, r2, r3, r4] = raw;
        CubicFieldElt {
            c: [
                &r0 + &r3 - &r4,
                &r1 - &r3 + &r4 + &r4,
                &r2 - &r3,
            ],
        }
    }

    /// Multiplicative inverse, by solving the 3x3 rational linear system
    /// for multiplication by `self` (Cramer's rule).
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // columns of the multiplication-by-self matrix: self * a^j
        let cols = [
            self.clone(),
            self.mul(&Self::alpha()),
            self.mul(&Self::alpha().mul(&Self::alpha())),
        ];
        let m = |i: usize, j: usize| -> &BigRational { &cols[j].c[i] };
        let det3 = |a: &BigRational,
                    b: &BigRational,
                    c: &BigRational,
                    d: &BigRational,
                    e: &BigRational,
                    f: &BigRational,
                    g: &BigRational,
                    h: &BigRational,
                    i: &BigRational|
         -> BigRational {
            a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
        };
        let det = det3(
            m(0, 0), m(0, 1), m(0, 2),
            m(1, 0), m(1, 1), m(1, 2),
            m(2, 0), m(2, 1), m(2, 2),
        );
        if det.is_zero() {
            // cannot happen in a field; defensive
            return Err(Error::DivisionByZero);
        }
        // right-hand side is (1, 0, 0)
        let one = BigRational::one();
        let zero = BigRational::zero();
        let x0 = det3(
            &one, m(0, 1), m(0, 2),
            &zero, m(1, 1), m(1, 2),
            &zero, m(2, 1), m(2, 2),
        );
        let x1 = det3(
            m(0, 0), &one, m(0, 2),
            m(1, 0), &zero, m(1, 2),
            m(2, 0), &zero, m(2, 2),
        );
        let x2 = det3(
            m(0, 0), m(0, 1), &one,
            m(1, 0), m(1, 1), &zero,
            m(2, 0), m(2, 1), &zero,
        );
        Ok(CubicFieldElt {
            c: [x0 / &det, x1 / &det, x2 / &det],
        })
    }

    /// Sign of the real number this element represents: -1, 0, or +1.
    ///
    /// Determined by interval arithmetic on a rational isolating interval
    /// of alpha, bisected against the (strictly increasing) minimal
    /// polynomial until the value interval excludes zero.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        // p(1/2) < 0 < p(9/16), so alpha lies strictly between
        let mut lo = rat(1, 2);
        let mut hi = rat(9, 16);
        loop {
            let (vlo, vhi) = self.value_interval(&lo, &hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            // bisect: p(x) = x^3 + x^2 + x - 1 is increasing, so the sign
            // at the midpoint tells which half contains alpha
            let mid = (&lo + &hi) / rat(2, 1);
            let p = &mid * &mid * &mid + &mid * &mid + &mid - BigRational::one();
            if p.is_negative() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
    }

    /// Interval enclosure of c0 + c1 x + c2 x^2 for x in [lo, hi], 0 < lo.
    fn value_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let mut vlo = self.c[0].clone();
        let mut vhi = self.c[0].clone();
        let pows = [
            (lo.clone(), hi.clone()),
            (lo * lo, hi * hi),
        ];
        for (coef, (plo, phi)) in [&self.c[1], &self.c[2]].into_iter().zip(&pows) {
            if coef.is_negative() {
                vlo = vlo + coef * phi;
                vhi = vhi + coef * plo;
            } else {
                vlo = vlo + coef * plo;
                vhi = vhi + coef * phi;
            }
        }
        (vlo, vhi)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    /// Nearest-double approximation, for display only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        const ALPHA: f64 = 0.5436890126920764;
        self.c[0].to_f64().unwrap_or(f64::NAN)
            + self.c[1].to_f64().unwrap_or(f64::NAN) * ALPHA
            + self.c[2].to_f64().unwrap_or(f64::NAN) * ALPHA * ALPHA
    }

    /// Print as the rational triple `(c0,c1,c2)`.
    pub fn render(&self) -> String {
        format!("({},{},{})", self.c[0], self.c[1], self.c[2])
    }
}

/// Evaluate an integer polynomial at a field element.
pub fn eval_poly(p: &UniPoly, x: &CubicFieldElt) -> CubicFieldElt {
    let mut acc = CubicFieldElt::zero();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x).add(&CubicFieldElt::from_rational(BigRational::from(c.clone())));
    }
    acc
}

/// Minimal polynomial of alpha: x^3 + x^2 + x - 1.
pub fn minimal_polynomial() -> UniPoly {
    UniPoly::from_i64(&[-1, 1, 1, 1])
}

/// The stretch factor's minimal polynomial x^3 - x^2 - x - 1, checked to
/// vanish exactly at 1/alpha.
pub fn stretch_factor_certificate() -> Result<UniPoly> {
    let p = UniPoly::from_i64(&[-1, -1, -1, 1]);
    let lambda = CubicFieldElt::alpha().inv()?;
    if !eval_poly(&p, &lambda).is_zero() {
        return Err(Error::Invalid(
            "stretch factor polynomial does not vanish at 1/alpha".into(),
        ));
    }
    Ok(p)
}

/// Point of the slitted polygon, with exact coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointAY {
    pub x: CubicFieldElt,
    pub y: CubicFieldElt,
}

impl PointAY {
    pub fn new(x: CubicFieldElt, y: CubicFieldElt) -> Self {
        PointAY { x, y }
    }

    pub fn render(&self) -> String {
        format!("{} {}", self.x.render(), self.y.render())
    }
}

/// Subregion labels; `Boundary` marks slit points, which would need the
/// edge identifications to map onward and are refused instead.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RegionId {
    R1,
    R2,
    R3,
    R4,
    Boundary,
}

fn alpha() -> CubicFieldElt {
    CubicFieldElt::alpha()
}

fn alpha2() -> CubicFieldElt {
    alpha().mul(&alpha())
}

fn alpha3() -> CubicFieldElt {
    alpha2().mul(&alpha())
}

fn half() -> BigRational {
    rat(1, 2)
}

/// x-coordinate separating the left and right halves: (alpha + alpha^2)/2.
fn split_x() -> CubicFieldElt {
    alpha().add(&alpha2()).scale(&half())
}

/// The three interior slits: vertical segments from the bottom edge,
/// (x position, top height).  Read off the polygon's translation
/// structure: each sits midway across a cylinder of the horizontal
/// foliation.
fn slits() -> [(CubicFieldElt, CubicFieldElt); 3] {
    let one = CubicFieldElt::one();
    [
        // x = (alpha - alpha^3)/2, height (1 - alpha^2)/2
        (
            alpha().sub(&alpha3()).scale(&half()),
            one.sub(&alpha2()).scale(&half()),
        ),
        // x = (alpha + alpha^2)/2, height (1 + alpha^2)/2
        (split_x(), one.add(&alpha2()).scale(&half())),
        // x = (1 + alpha)/2, height (alpha - alpha^3)/2
        (
            one.add(&alpha()).scale(&half()),
            alpha().sub(&alpha3()).scale(&half()),
        ),
    ]
}

/// True for points of the closed staircase polygon (slits included).
pub fn in_polygon(p: &PointAY) -> bool {
    let x = &p.x;
    let y = &p.y;
    if x.sign() < 0 || y.sign() < 0 {
        return false;
    }
    if CubicFieldElt::one().sub(x).sign() < 0 {
        return false;
    }
    // staircase top: 1 on [0, alpha], alpha + alpha^2 on (alpha,
    // alpha + alpha^2], alpha on (alpha + alpha^2, 1]
    let top = if alpha().sub(x).sign() >= 0 {
        CubicFieldElt::one()
    } else if alpha().add(&alpha2()).sub(x).sign() >= 0 {
        alpha().add(&alpha2())
    } else {
        alpha()
    };
    top.sub(y).sign() >= 0
}

fn on_slit(p: &PointAY) -> bool {
    slits().iter().any(|(sx, sh)| {
        p.x == *sx && p.y.sign() >= 0 && sh.sub(&p.y).sign() >= 0
    })
}

/// Classify a point of the polygon.  The four regions partition the
/// closed polygon by `x` against (alpha + alpha^2)/2 and `y` against
/// alpha; slit points come back as `Boundary` since mapping them onward
/// would require the edge identifications.
pub fn classify_region(p: &PointAY) -> Result<RegionId> {
    if !in_polygon(p) {
        return Err(Error::OutsidePolygon);
    }
    if on_slit(p) {
        return Ok(RegionId::Boundary);
    }
    let left = split_x().sub(&p.x).sign() >= 0;
    let low = alpha().sub(&p.y).sign() >= 0;
    Ok(match (left, low) {
        (false, true) => RegionId::R1,
        (false, false) => RegionId::R2,
        (true, false) => RegionId::R3,
        (true, true) => RegionId::R4,
    })
}

/// Apply the affine diffeomorphism: contract horizontally by alpha,
/// stretch vertically by 1/alpha, then translate the piece into place.
/// Uses (alpha - alpha^4)/2 = (1 - alpha)/2 for the R1/R4 branch.
pub fn apply_h(p: &PointAY) -> Result<PointAY> {
    let region = classify_region(p)?;
    let ax = alpha().mul(&p.x);
    let ay = alpha().inv().expect("alpha is nonzero").mul(&p.y);
    let image = match region {
        RegionId::R1 | RegionId::R4 => {
            let shift = CubicFieldElt::one().sub(&alpha()).scale(&half());
            PointAY::new(ax.sub(&shift), ay)
        }
        RegionId::R2 | RegionId::R3 => PointAY::new(
            ax.add(&alpha()),
            ay.sub(&CubicFieldElt::one()),
        ),
        RegionId::Boundary => return Err(Error::BoundaryPoint),
    };
    Ok(image)
}

/// The period-two base point
/// x0 = ((alpha - alpha^2) / (2 (1 + alpha^2)), 1 / (1/alpha - alpha)).
pub fn x0() -> PointAY {
    let a = alpha();
    let a2 = alpha2();
    let num = a.sub(&a2);
    let den = CubicFieldElt::one().add(&a2).scale(&rat(2, 1));
    let x = num.mul(&den.inv().expect("nonzero"));
    let y = a.inv().expect("nonzero").sub(&a).inv().expect("nonzero");
    PointAY::new(x, y)
}
