//! Single-variable polynomials over the integers: exact division and
//! real-root isolation by Sturm sequences over rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, constant term first, leading coefficient nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::from_i64(&[1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Exact division over Z; `None` when the remainder is nonzero or a
    /// leading-coefficient division fails.
    pub fn div_exact(&self, divisor: &UniPoly) -> Option<UniPoly> {
        if divisor.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(divisor.coeffs.len()) + 1];
        let dlead = divisor.leading();
        while !rem.is_zero() && rem.degree() >= divisor.degree() {
            let (q, r) = num_integer::Integer::div_rem(&rem.leading(), &dlead);
            if !r.is_zero() {
                return None;
            }
            let shift = rem.degree() - divisor.degree();
            quot[shift] = q.clone();
            let mut term = vec![BigInt::zero(); shift + 1];
            term[shift] = q;
            rem = rem.sub(&UniPoly::new(term).mul(divisor));
        }
        if rem.is_zero() {
            Some(UniPoly::new(quot))
        } else {
            None
        }
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Render with the given variable name, highest degree first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("t"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

/// True iff `m` divides `p` exactly over Z.
pub fn divides(p: &UniPoly, m: &UniPoly) -> bool {
    !m.is_zero() && p.div_exact(m).is_some()
}

// --- Sturm sequences over BigRational -------------------------------------

fn rational_poly(p: &UniPoly) -> Vec<BigRational> {
    p.coeffs().iter().map(|c| BigRational::from(c.clone())).collect()
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Remainder of polynomial division over the rationals.
fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    while r.len() > db {
        let q = r.last().unwrap() / lead;
        let shift = r.len() - 1 - db;
        for i in 0..=db {
            let v = &r[shift + i] - &q * &b[i];
            r[shift + i] = v;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Rescale by a positive rational so the coefficients become coprime
/// integers; positive scaling preserves signs, hence Sturm counts.
fn make_primitive(p: &mut [BigRational]) {
    use num_integer::Integer as _;
    if p.is_empty() {
        return;
    }
    let mut denom_lcm = BigInt::one();
    for c in p.iter() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let mut num_gcd = BigInt::zero();
    for c in p.iter() {
        num_gcd = num_gcd.gcd(&(c.numer() * &denom_lcm / c.denom()));
    }
    if num_gcd.is_zero() {
        return;
    }
    let scale = BigRational::new(denom_lcm, num_gcd);
    for c in p.iter_mut() {
        *c = &*c * &scale;
    }
}

struct SturmChain {
    chain: Vec<Vec<BigRational>>,
}

/// Quotient of polynomial division over the rationals.
fn quo(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db)];
    while r.len() > db {
        let c = r.last().unwrap() / lead;
        let shift = r.len() - 1 - db;
        q[shift] = c.clone();
        for i in 0..=db {
            let v = &r[shift + i] - &c * &b[i];
            r[shift + i] = v;
        }
        trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    q
}

/// Square-free part p / gcd(p, p'): same root set, all roots simple.
fn squarefree_part(p: &UniPoly) -> Vec<BigRational> {
    let mut a = rational_poly(p);
    trim(&mut a);
    if a.len() <= 2 {
        return a;
    }
    let mut b = rational_poly(&p.derivative());
    trim(&mut b);
    while !b.is_empty() && b.len() > 1 {
        let r = rem(&a, &b);
        a = std::mem::replace(&mut b, r);
        trim(&mut b);
        make_primitive(&mut b);
    }
    if b.is_empty() {
        // a is (a scalar multiple of) gcd(p, p') with positive degree
        let mut sf = quo(&rational_poly(p), &a);
        trim(&mut sf);
        make_primitive(&mut sf);
        sf
    } else {
        // gcd is constant: p was already square-free
        rational_poly(p)
    }
}

impl SturmChain {
    fn new(p: &UniPoly) -> SturmChain {
        let mut chain = Vec::new();
        let mut p0 = squarefree_part(p);
        trim(&mut p0);
        if p0.is_empty() || p0.len() == 1 {
            return SturmChain { chain };
        }
        // derivative of the square-free part
        let mut p1: Vec<BigRational> = p0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
            .collect();
        trim(&mut p1);
        make_primitive(&mut p1);
        chain.push(p0);
        while !p1.is_empty() {
            chain.push(p1.clone());
            let prev = &chain[chain.len() - 2];
            let mut next = rem(prev, &p1);
            for c in next.iter_mut() {
                *c = -c.clone();
            }
            trim(&mut next);
            make_primitive(&mut next);
            p1 = next;
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = eval(p, x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if let Some(l) = last {
                if l != pos {
                    count += 1;
                }
            }
            last = Some(pos);
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    fn roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// Isolating interval `[lo, hi]` of width at most `tol` around the
/// largest real root of `p`.
pub fn largest_real_root_interval(
    p: &UniPoly,
    tol: &BigRational,
) -> Result<(BigRational, BigRational)> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::NoRealRoot);
    }
    if !tol.is_positive() {
        return Err(Error::Invalid("tolerance must be positive".into()));
    }
    let chain = SturmChain::new(p);
    // Cauchy bound: all roots lie in [-B, B]
    let lead = BigRational::from(p.leading()).abs();
    let max_c = p
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()).abs())
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    let bound = BigRational::one() + max_c / lead;
    let mut lo = -bound.clone();
    let mut hi = bound.clone();
    if chain.roots_in(&lo, &hi) == 0 {
        return Err(Error::NoRealRoot);
    }
    // keep the invariant: at least one root in (lo, hi], none in (hi, B]
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        if chain.roots_in(&mid, &bound) > 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Midpoint approximation of the largest real root.
pub fn largest_real_root(p: &UniPoly, tol: &BigRational) -> Result<BigRational> {
    let (lo, hi) = largest_real_root_interval(p, tol)?;
    Ok((lo + hi) / BigRational::from(BigInt::from(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn tol9() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(1_000_000_000u64))
    }

    #[test]
    fn division_examples() {
        // long-division oracle, checked by re-multiplication
        let p = UniPoly::from_i64(&[1, 0, -1, -4, -1, 0, 1]); // t^6 - t^4 - 4t^3 - t^2 + 1
        let m = UniPoly::from_i64(&[-1, -1, -1, 1]); // t^3 - t^2 - t - 1
        let q = p.div_exact(&m).expect("divides");
        assert_eq!(q, UniPoly::from_i64(&[-1, 1, 1, 1])); // t^3 + t^2 + t - 1
        assert_eq!(q.mul(&m), p);

        let p8 = UniPoly::from_i64(&[1, 0, 0, -1, -4, -1, 0, 0, 1]); // t^8 - t^5 - 4t^4 - t^3 + 1
        let m4 = UniPoly::from_i64(&[-1, -1, -1, -1, 1]); // t^4 - t^3 - t^2 - t - 1
        assert!(!divides(&p8, &m4));

        assert!(divides(&p, &UniPoly::one()));
        assert!(!divides(&p, &UniPoly::zero()));
    }

    #[test]
    fn simple_roots() {
        let p = UniPoly::from_i64(&[-2, 1]); // t - 2
        let r = largest_real_root(&p, &tol9()).unwrap();
        assert!((r - BigRational::from(BigInt::from(2))).abs() <= tol9());
    }

    #[test]
    fn tribonacci_like_root() {
        let p = UniPoly::from_i64(&[-1, -1, -1, 1]);
        let r = largest_real_root(&p, &tol9()).unwrap();
        let approx = r.to_f64().unwrap();
        assert!((approx - 1.8392867552141612).abs() < 1e-8);
    }

    #[test]
    fn no_real_root() {
        let p = UniPoly::from_i64(&[1, 0, 1]); // t^2 + 1
        assert!(matches!(
            largest_real_root(&p, &tol9()),
            Err(Error::NoRealRoot)
        ));
    }

    #[test]
    fn root_of_product_is_max_of_roots() {
        let a = UniPoly::from_i64(&[-3, 1]); // root 3
        let b = UniPoly::from_i64(&[-1, -1, 1]); // golden ratio ~1.618
        let prod = a.mul(&b);
        let r = largest_real_root(&prod, &tol9()).unwrap();
        assert!((r.to_f64().unwrap() - 3.0).abs() < 1e-8);
    }

    #[test]
    fn rendering() {
        let p = UniPoly::from_i64(&[1, 0, -1, -4, -1, 0, 1]);
        assert_eq!(p.to_string(), "t^6 - t^4 - 4*t^3 - t^2 + 1");
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_i64(&[-1]).to_string(), "-1");
    }
}
