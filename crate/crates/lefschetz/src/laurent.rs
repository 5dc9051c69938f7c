//! Sparse multivariate Laurent polynomials over the integers.
//!
//! This is the group ring Z[G] for G free abelian: exponent vectors are
//! integers of either sign.  Beyond ring arithmetic the module provides
//! exact division, determinants of matrices over the ring, specialization
//! along an integral functional, and symmetry analysis of the support.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::unipoly::UniPoly;

/// Integral functional on exponent vectors: the values a cohomology class
/// assigns to each variable's generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentFunctional {
    pub weights: Vec<i64>,
}

impl ExponentFunctional {
    pub fn new(weights: Vec<i64>) -> Self {
        ExponentFunctional { weights }
    }

    pub fn apply(&self, exps: &[i64]) -> i64 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }
}

/// Sparse Laurent polynomial; stored coefficients are never zero and all
/// exponent vectors have length `num_vars`.  Equality is term-set equality.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(num_vars: usize) -> Self {
        LaurentPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(num_vars, BigInt::one())
    }

    pub fn constant(num_vars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(num_vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; num_vars], c);
        }
        p
    }

    pub fn monomial(num_vars: usize, exps: Vec<i64>, coeff: BigInt) -> Self {
        assert_eq!(exps.len(), num_vars);
        let mut p = Self::zero(num_vars);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    /// Build from (exponent vector, coefficient) pairs, merging duplicates.
    pub fn from_terms(num_vars: usize, terms: &[(&[i64], i64)]) -> Self {
        let mut p = Self::zero(num_vars);
        for (exps, c) in terms {
            p.add_term(exps.to_vec(), BigInt::from(*c));
        }
        p
    }

    fn add_term(&mut self, exps: Vec<i64>, coeff: BigInt) {
        assert_eq!(exps.len(), self.num_vars);
        if coeff.is_zero() {
            return;
        }
        let key = exps.clone();
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.num_vars])
    }

    fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.num_vars != other.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "polynomials in {} and {} variables",
                self.num_vars, other.num_vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn negate(&self) -> LaurentPoly {
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut out = LaurentPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.num_vars);
        }
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Negate every exponent vector (the group-ring antipode g -> g^{-1}).
    pub fn invert_vars(&self) -> LaurentPoly {
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    fn min_exps(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.num_vars];
        for e in self.terms.keys() {
            for (mi, &ei) in m.iter_mut().zip(e) {
                *mi = (*mi).min(ei);
            }
        }
        m
    }

    fn shift(&self, by: &[i64]) -> LaurentPoly {
        LaurentPoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(x, s)| x + s).collect(), c.clone()))
                .collect(),
        }
    }

    /// Graded-lex leading term (largest), among nonnegative exponents.
    fn leading_term(&self) -> (&Vec<i64>, &BigInt) {
        self.terms
            .iter()
            .max_by(|(ea, _), (eb, _)| {
                let ga: i64 = ea.iter().sum();
                let gb: i64 = eb.iter().sum();
                ga.cmp(&gb).then_with(|| ea.cmp(eb))
            })
            .expect("nonzero polynomial")
    }

    /// Exact division: returns `r` with `q * r = self`, or `NotExact`.
    ///
    /// Both operands are shifted to ordinary polynomials; exactness makes
    /// the leading term of the remainder divisible by the leading term of
    /// the divisor at every step, so any failure certifies inexactness.
    pub fn exact_div(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(q)?;
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(self.num_vars));
        }
        let sp: Vec<i64> = self.min_exps().iter().map(|x| -x).collect();
        let sq: Vec<i64> = q.min_exps().iter().map(|x| -x).collect();
        let mut rem = self.shift(&sp);
        let qq = q.shift(&sq);
        let (lt_e, lt_c) = {
            let (e, c) = qq.leading_term();
            (e.clone(), c.clone())
        };
        let mut quot = LaurentPoly::zero(self.num_vars);
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading_term();
                (e.clone(), c.clone())
            };
            if re.iter().zip(&lt_e).any(|(a, b)| a < b) {
                return Err(Error::NotExact);
            }
            let (qc, r) = rc.div_rem(&lt_c);
            if !r.is_zero() {
                return Err(Error::NotExact);
            }
            let me: Vec<i64> = re.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
            let mono = LaurentPoly::monomial(self.num_vars, me, qc);
            rem = rem.sub(&mono.mul(&qq)?)?;
            quot = quot.add(&mono)?;
        }
        // undo the shifts: quotient picked up sp - sq
        let unshift: Vec<i64> = sp.iter().zip(&sq).map(|(a, b)| b - a).collect();
        Ok(quot.shift(&unshift))
    }

    /// Push the polynomial through an integral functional: each monomial
    /// becomes `c * t^{u(exponents)}`.  Errors on a negative image.
    pub fn specialize(&self, u: &ExponentFunctional) -> Result<UniPoly> {
        if u.weights.len() != self.num_vars {
            return Err(Error::DimensionMismatch(format!(
                "functional has {} weights, polynomial {} variables",
                u.weights.len(),
                self.num_vars
            )));
        }
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let w = u.apply(e);
            if w < 0 {
                return Err(Error::NegativeSpecialization {
                    monomial: render_monomial(e, &default_names(self.num_vars)),
                    value: w,
                });
            }
            *acc.entry(w).or_insert_with(BigInt::zero) += c;
        }
        let deg = acc.keys().next_back().copied().unwrap_or(0) as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (w, c) in acc {
            coeffs[w as usize] = c;
        }
        Ok(UniPoly::new(coeffs))
    }

    /// Substitute concrete integers for every variable.
    pub fn eval_int(&self, xs: &[BigInt]) -> Result<BigInt> {
        if xs.len() != self.num_vars {
            return Err(Error::DimensionMismatch("evaluation point".into()));
        }
        if xs.iter().any(|x| x.is_zero()) {
            return Err(Error::Invalid("cannot evaluate Laurent monomials at zero".into()));
        }
        // evaluate over rationals to honor negative exponents, then the
        // result must clear to an integer only for honest polynomials --
        // here we instead clear denominators by shifting.
        let shift: Vec<i64> = self.min_exps().iter().map(|x| (-x).max(0)).collect();
        let shifted = self.shift(&shift);
        let mut num = BigInt::zero();
        for (e, c) in &shifted.terms {
            let mut t = c.clone();
            for (x, &k) in xs.iter().zip(e) {
                t *= x.pow(k as u32);
            }
            num += t;
        }
        let mut den = BigInt::one();
        for (x, &k) in xs.iter().zip(&shift) {
            den *= x.pow(k as u32);
        }
        let (q, r) = num.div_rem(&den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotExact)
        }
    }

    /// Witness of monomial symmetry: `(s, h)` with
    /// `s * x^h * invert_vars(p) = p`, if it exists.  The only candidate
    /// is the per-variable sum of the minimum and maximum exponents over
    /// the support, since a symmetry must center the Newton polytope.
    pub fn symmetry_witness(&self) -> Option<(i8, Vec<i64>)> {
        if self.is_zero() {
            return None;
        }
        let mut h = vec![0i64; self.num_vars];
        for i in 0..self.num_vars {
            let mut lo = i64::MAX;
            let mut hi = i64::MIN;
            for e in self.terms.keys() {
                lo = lo.min(e[i]);
                hi = hi.max(e[i]);
            }
            h[i] = lo + hi;
        }
        let mirrored = self.invert_vars().shift(&h);
        if mirrored == *self {
            return Some((1, h));
        }
        if mirrored.negate() == *self {
            return Some((-1, h));
        }
        None
    }

    /// Convex hull of the support of a two-variable polynomial, listed
    /// counterclockwise from the lexicographically smallest vertex.
    pub fn support_hull_2d(&self) -> Result<Vec<(i64, i64)>> {
        if self.num_vars != 2 {
            return Err(Error::DimensionMismatch(format!(
                "support_hull_2d needs 2 variables, got {}",
                self.num_vars
            )));
        }
        if self.is_zero() {
            return Err(Error::Invalid("zero polynomial has no Newton polytope".into()));
        }
        let mut pts: Vec<(i64, i64)> = self.terms.keys().map(|e| (e[0], e[1])).collect();
        pts.sort();
        pts.dedup();
        if pts.len() == 1 {
            return Ok(pts);
        }
        let cross = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| -> i64 {
            (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
        };
        // Andrew's monotone chain; strict turns drop collinear points.
        let mut lower: Vec<(i64, i64)> = Vec::new();
        for &p in &pts {
            while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<(i64, i64)> = Vec::new();
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        if lower.len() < 2 {
            // all points collinear: hull degenerates to a segment
            let mut seg = vec![pts[0], *pts.last().unwrap()];
            seg.dedup();
            return Ok(seg);
        }
        // rotate so the lex-min point comes first (it is on the hull)
        let start = lower
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| **p)
            .map(|(i, _)| i)
            .unwrap();
        lower.rotate_left(start);
        Ok(lower)
    }

    /// Render in canonical order: graded lex on exponent vectors, ties
    /// broken lexicographically, ascending.
    pub fn render(&self, names: &[&str]) -> String {
        assert_eq!(names.len(), self.num_vars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let ga: i64 = a.iter().sum();
            let gb: i64 = b.iter().sum();
            ga.cmp(&gb).then_with(|| a.cmp(b))
        });
        let mut out = String::new();
        for e in keys {
            let c = &self.terms[e];
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
            let mono = render_monomial(e, names);
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }

    /// Parse the textual form produced by [`render`](Self::render).
    pub fn parse(text: &str, names: &[&str]) -> Result<LaurentPoly> {
        let num_vars = names.len();
        let mut p = LaurentPoly::zero(num_vars);
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(p);
        }
        // split into signed terms
        let mut terms: Vec<(i8, String)> = Vec::new();
        let mut sign: i8 = 1;
        let mut cur = String::new();
        let mut chars = text.chars().peekable();
        if let Some('-') = chars.peek() {
            chars.next();
            sign = -1;
        } else if let Some('+') = chars.peek() {
            chars.next();
        }
        while let Some(ch) = chars.next() {
            if ch == ' ' {
                match chars.next() {
                    Some(op @ ('+' | '-')) => {
                        if chars.next() != Some(' ') {
                            return Err(Error::Parse {
                                line: 1,
                                msg: "expected space after operator".into(),
                            });
                        }
                        terms.push((sign, std::mem::take(&mut cur)));
                        sign = if op == '+' { 1 } else { -1 };
                    }
                    _ => {
                        return Err(Error::Parse {
                            line: 1,
                            msg: "dangling whitespace".into(),
                        })
                    }
                }
            } else {
                cur.push(ch);
            }
        }
        terms.push((sign, cur));

        for (s, term) in terms {
            let mut coeff = BigInt::one();
            let mut exps = vec![0i64; num_vars];
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::Parse {
                        line: 1,
                        msg: "empty factor".into(),
                    });
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let exp: i64 = e.parse().map_err(|_| Error::Parse {
                            line: 1,
                            msg: format!("invalid exponent `{e}`"),
                        })?;
                        (b, exp)
                    }
                    None => (factor, 1),
                };
                if let Some(idx) = names.iter().position(|n| *n == base) {
                    exps[idx] += exp;
                } else if let Ok(c) = base.parse::<BigInt>() {
                    if exp != 1 {
                        coeff *= c.pow(exp as u32);
                    } else {
                        coeff *= c;
                    }
                } else {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("unknown factor `{base}`"),
                    });
                }
            }
            p.add_term(exps, coeff * BigInt::from(s));
        }
        Ok(p)
    }
}

fn render_monomial(e: &[i64], names: &[&str]) -> String {
    let mut parts = Vec::new();
    for (&k, name) in e.iter().zip(names) {
        if k == 0 {
            continue;
        }
        if k == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{name}^{k}"));
        }
    }
    parts.join("*")
}

fn default_names(num_vars: usize) -> Vec<&'static str> {
    // only used for error messages
    match num_vars {
        1 => vec!["t"],
        2 => vec!["v", "t"],
        _ => vec!["x"; num_vars],
    }
}

/// Variable names for `r` deck variables followed by the suspension
/// variable `t`: `v, t` or `v1, ..., vk, t`.
pub fn zeta_var_names(deck_vars: usize) -> Vec<String> {
    let mut names = deck_var_names(deck_vars);
    names.push("t".to_string());
    names
}

/// Names for the deck variables alone.
pub fn deck_var_names(deck_vars: usize) -> Vec<String> {
    if deck_vars == 1 {
        vec!["v".to_string()]
    } else {
        (1..=deck_vars).map(|i| format!("v{i}")).collect()
    }
}

/// Determinant of a square matrix over the Laurent ring.
///
/// Laplace expansion memoized over column subsets: exact, deterministic,
/// and adequate at desk scale (n <= 12).
pub fn det_ring(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            cols: m.first().map_or(0, |r| r.len()),
        });
    }
    if n == 0 {
        return Err(Error::Invalid("empty matrix".into()));
    }
    let num_vars = m[0][0].num_vars();
    if m.iter().flatten().any(|p| p.num_vars() != num_vars) {
        return Err(Error::DimensionMismatch("matrix entries".into()));
    }
    assert!(n <= 16, "determinant expansion limited to small matrices");
    // minors[mask] = det of rows 0..popcount(mask) on column set mask
    let mut memo: Vec<Option<LaurentPoly>> = vec![None; 1 << n];
    memo[0] = Some(LaurentPoly::one(num_vars));
    fn minor(
        m: &[Vec<LaurentPoly>],
        memo: &mut Vec<Option<LaurentPoly>>,
        mask: usize,
        num_vars: usize,
    ) -> Result<LaurentPoly> {
        if let Some(p) = &memo[mask] {
            return Ok(p.clone());
        }
        let row = mask.count_ones() as usize - 1;
        let mut acc = LaurentPoly::zero(num_vars);
        // cofactor sign is (-1)^(row + column position within the mask)
        let mut sign_pos = row % 2 == 0;
        for j in 0..m.len() {
            if mask & (1 << j) == 0 {
                continue;
            }
            let sub = minor(m, memo, mask & !(1 << j), num_vars)?;
            let term = m[row][j].mul(&sub)?;
            acc = if sign_pos { acc.add(&term)? } else { acc.sub(&term)? };
            sign_pos = !sign_pos;
        }
        memo[mask] = Some(acc.clone());
        Ok(acc)
    }
    minor(m, &mut memo, (1 << n) - 1, num_vars)
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.num_vars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        write!(f, "LaurentPoly({})", self.render(&refs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names2() -> Vec<&'static str> {
        vec!["v", "t"]
    }

    /// The reduced zeta function of the collapsed Arnoux-Yoccoz model:
    /// 1 - v*t^2 - 4*v*t^3 - v*t^4 + v^2*t^6.
    fn zeta_reduced() -> LaurentPoly {
        LaurentPoly::from_terms(
            2,
            &[
                (&[0, 0], 1),
                (&[1, 2], -1),
                (&[1, 3], -4),
                (&[1, 4], -1),
                (&[2, 6], 1),
            ],
        )
    }

    #[test]
    fn ring_basics() {
        let one = LaurentPoly::one(1);
        let nu = LaurentPoly::monomial(1, vec![1], 1.into());
        let a = one.add(&nu).unwrap(); // 1 + v
        let b = one.sub(&nu).unwrap(); // 1 - v
        let prod = a.mul(&b).unwrap();
        let expect = LaurentPoly::from_terms(1, &[(&[0], 1), (&[2], -1)]);
        assert_eq!(prod, expect);

        assert!(a.sub(&a).unwrap().is_zero());

        let unit = LaurentPoly::monomial(2, vec![1, 1], 1.into());
        let inv = LaurentPoly::monomial(2, vec![-1, -1], 1.into());
        assert_eq!(unit.mul(&inv).unwrap(), LaurentPoly::one(2));
    }

    #[test]
    fn mismatched_vars_rejected() {
        let a = LaurentPoly::one(1);
        let b = LaurentPoly::one(2);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn exact_div_reproduces_reduced_zeta() {
        // (1 - t - v t^2 - 3 v t^3 + 3 v t^4 + v t^5 + v^2 t^6 - v^2 t^7) / (1 - t)
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
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, zeta_reduced());
        assert_eq!(den.mul(&q).unwrap(), num);
    }

    #[test]
    fn exact_div_edge_cases() {
        let p = zeta_reduced();
        assert_eq!(p.exact_div(&LaurentPoly::one(2)).unwrap(), p);
        // (1 + v t) / (1 + t) is not exact
        let a = LaurentPoly::from_terms(2, &[(&[0, 0], 1), (&[1, 1], 1)]);
        let b = LaurentPoly::from_terms(2, &[(&[0, 0], 1), (&[0, 1], 1)]);
        assert!(matches!(a.exact_div(&b), Err(Error::NotExact)));
        assert!(matches!(a.exact_div(&LaurentPoly::zero(2)), Err(Error::DivisionByZero)));
        // Laurent support: division by a unit monomial always succeeds
        let unit = LaurentPoly::monomial(2, vec![1, 1], 1.into());
        let q = a.exact_div(&unit).unwrap();
        assert_eq!(q.mul(&unit).unwrap(), a);
    }

    #[test]
    fn det_ring_small() {
        let one = LaurentPoly::one(2);
        let nu = LaurentPoly::monomial(2, vec![1, 0], 1.into());
        let tau = LaurentPoly::monomial(2, vec![0, 1], 1.into());
        let m = vec![vec![one.clone(), nu.clone()], vec![tau.clone(), one.clone()]];
        let d = det_ring(&m).unwrap();
        let expect = LaurentPoly::from_terms(2, &[(&[0, 0], 1), (&[1, 1], -1)]);
        assert_eq!(d, expect);

        let diag = vec![
            vec![nu.clone(), LaurentPoly::zero(2), LaurentPoly::zero(2)],
            vec![LaurentPoly::zero(2), tau.clone(), LaurentPoly::zero(2)],
            vec![LaurentPoly::zero(2), LaurentPoly::zero(2), one.clone()],
        ];
        assert_eq!(det_ring(&diag).unwrap(), nu.mul(&tau).unwrap());

        assert!(det_ring(&[vec![one.clone()], vec![one]]).is_err());
    }

    #[test]
    fn specialization_examples() {
        let z = zeta_reduced();
        let p = z.specialize(&ExponentFunctional::new(vec![0, 1])).unwrap();
        assert_eq!(p, UniPoly::from_i64(&[1, 0, -1, -4, -1, 0, 1]));
        let p = z.specialize(&ExponentFunctional::new(vec![-1, 1])).unwrap();
        assert_eq!(p, UniPoly::from_i64(&[1, -1, -4, -1, 1]));
        // all-zero functional sums the coefficients
        let p = z.specialize(&ExponentFunctional::new(vec![0, 0])).unwrap();
        assert_eq!(p, UniPoly::from_i64(&[-4]));
        // negative image is a hard error
        assert!(matches!(
            z.specialize(&ExponentFunctional::new(vec![-3, 1])),
            Err(Error::NegativeSpecialization { .. })
        ));
    }

    #[test]
    fn invert_vars_examples() {
        let m = LaurentPoly::monomial(2, vec![2, 6], 1.into());
        assert_eq!(m.invert_vars(), LaurentPoly::monomial(2, vec![-2, -6], 1.into()));
        assert_eq!(LaurentPoly::one(2).invert_vars(), LaurentPoly::one(2));
        let z = zeta_reduced();
        assert_eq!(z.invert_vars().invert_vars(), z);
        let expect = LaurentPoly::from_terms(
            2,
            &[
                (&[0, 0], 1),
                (&[-1, -2], -1),
                (&[-1, -3], -4),
                (&[-1, -4], -1),
                (&[-2, -6], 1),
            ],
        );
        assert_eq!(z.invert_vars(), expect);
    }

    #[test]
    fn symmetry_witness_examples() {
        let z = zeta_reduced();
        assert_eq!(z.symmetry_witness(), Some((1, vec![2, 6])));
        let p = LaurentPoly::from_terms(1, &[(&[0], 1), (&[1], 1)]);
        assert_eq!(p.symmetry_witness(), Some((1, vec![1])));
        let q = LaurentPoly::from_terms(1, &[(&[0], 1), (&[1], 1), (&[3], 1)]);
        assert_eq!(q.symmetry_witness(), None);
        let anti = LaurentPoly::from_terms(1, &[(&[0], -1), (&[2], 1)]);
        assert_eq!(anti.symmetry_witness(), Some((-1, vec![2])));
    }

    #[test]
    fn support_hull_examples() {
        let z = zeta_reduced();
        assert_eq!(
            z.support_hull_2d().unwrap(),
            vec![(0, 0), (1, 2), (2, 6), (1, 4)]
        );
        let m = LaurentPoly::monomial(2, vec![3, -2], 5.into());
        assert_eq!(m.support_hull_2d().unwrap(), vec![(3, -2)]);
        let seg = LaurentPoly::from_terms(2, &[(&[0, 0], 1), (&[1, 1], 1)]);
        assert_eq!(seg.support_hull_2d().unwrap(), vec![(0, 0), (1, 1)]);
        assert!(LaurentPoly::one(1).support_hull_2d().is_err());
    }

    #[test]
    fn canonical_rendering_and_parsing() {
        let z = zeta_reduced();
        let s = z.render(&names2());
        assert_eq!(s, "1 - v*t^2 - 4*v*t^3 - v*t^4 + v^2*t^6");
        assert_eq!(LaurentPoly::parse(&s, &names2()).unwrap(), z);

        let neg = LaurentPoly::monomial(2, vec![-1, 0], (-1).into());
        assert_eq!(neg.render(&names2()), "-v^-1");
        assert_eq!(LaurentPoly::parse("-v^-1", &names2()).unwrap(), neg);

        assert!(LaurentPoly::parse("1 + q^2", &names2()).is_err());
        assert_eq!(LaurentPoly::parse("0", &names2()).unwrap(), LaurentPoly::zero(2));
    }
}
