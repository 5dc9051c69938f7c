//! Exact integer linear algebra: determinants, Smith normal form with
//! unimodular transformation certificates, and cokernel invariants.
//!
//! The Smith normal form of an integer matrix `M` is a diagonal matrix
//! `D = U * M * V` with `|det U| = |det V| = 1` and `d_1 | d_2 | ...`
//! (zeros last).  The diagonal entries determine the cokernel
//! `Z^n / im(M)` as a direct sum of cyclic groups; the rows of `U`
//! attached to zero invariant factors give an explicit projection onto
//! the free part of the cokernel.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix with arbitrary-precision entries, row major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} - {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = out.get(i, j) - other.get(i, j);
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    // Bareiss: division by the previous pivot is exact.
                    a[i][j] = num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        Ok(sign * a[n - 1][n - 1].clone())
    }

    /// Parse from text: one row per line, space-separated integers.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<IntMatrix> {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut width: Option<usize> = None;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                let v: BigInt = tok.parse().map_err(|_| Error::Parse {
                    line: idx + 1,
                    msg: format!("invalid integer `{tok}`"),
                })?;
                row.push(v);
            }
            if let Some(w) = width {
                if row.len() != w {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("row has {} entries, expected {}", row.len(), w),
                    });
                }
            } else {
                width = Some(row.len());
            }
            rows.push(row);
        }
        let cols = width.unwrap_or(0);
        let r = rows.len();
        Ok(IntMatrix {
            rows: r,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})\n{}", self.rows, self.cols, self)
    }
}

/// Smith normal form `U * M * V = D` with unimodular `U`, `V`.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d_1, ..., d_min(r,c)`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d.get(i, i).clone()).collect()
    }
}

/// Structure of `Z^n / im(M)`: torsion invariants, free rank, and the
/// projection of the ambient basis onto the free quotient.
#[derive(Clone, Debug)]
pub struct CokernelStructure {
    pub torsion_invariants: Vec<BigInt>,
    pub free_rank: usize,
    /// `free_rank x n` matrix; each row annihilates `M` on the right and
    /// is sign-normalized so its first nonzero entry is positive.
    pub projection: IntMatrix,
}

struct SnfState {
    d: IntMatrix,
    u: IntMatrix,
    v: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.d.cols() {
            let ta = self.d.get(a, j).clone();
            let tb = self.d.get(b, j).clone();
            self.d.set(a, j, tb);
            self.d.set(b, j, ta);
        }
        for j in 0..self.u.cols() {
            let ta = self.u.get(a, j).clone();
            let tb = self.u.get(b, j).clone();
            self.u.set(a, j, tb);
            self.u.set(b, j, ta);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.d.rows() {
            let ta = self.d.get(i, a).clone();
            let tb = self.d.get(i, b).clone();
            self.d.set(i, a, tb);
            self.d.set(i, b, ta);
        }
        for i in 0..self.v.rows() {
            let ta = self.v.get(i, a).clone();
            let tb = self.v.get(i, b).clone();
            self.v.set(i, a, tb);
            self.v.set(i, b, ta);
        }
    }

    /// row[a] -= q * row[b]
    fn addmul_row(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.d.cols() {
            let v = self.d.get(a, j) - q * self.d.get(b, j);
            self.d.set(a, j, v);
        }
        for j in 0..self.u.cols() {
            let v = self.u.get(a, j) - q * self.u.get(b, j);
            self.u.set(a, j, v);
        }
    }

    /// col[a] -= q * col[b]
    fn addmul_col(&mut self, a: usize, b: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.d.rows() {
            let v = self.d.get(i, a) - q * self.d.get(i, b);
            self.d.set(i, a, v);
        }
        for i in 0..self.v.rows() {
            let v = self.v.get(i, a) - q * self.v.get(i, b);
            self.v.set(i, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.d.cols() {
            let v = -self.d.get(a, j);
            self.d.set(a, j, v);
        }
        for j in 0..self.u.cols() {
            let v = -self.u.get(a, j);
            self.u.set(a, j, v);
        }
    }
}

/// Compute the Smith normal form of `m`.
///
/// Pivots are chosen with least absolute value to limit coefficient
/// growth; arbitrary-precision entries absorb the intermediate blow-up.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (r, c) = (m.rows(), m.cols());
    let mut st = SnfState {
        d: m.clone(),
        u: IntMatrix::identity(r),
        v: IntMatrix::identity(c),
    };
    let k = r.min(c);

    for t in 0..k {
        loop {
            // least-absolute-value nonzero pivot in the trailing block
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if st.d.get(i, j).is_zero() {
                        continue;
                    }
                    match pivot {
                        Some((pi, pj)) if st.d.get(pi, pj).abs() <= st.d.get(i, j).abs() => {}
                        _ => pivot = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // trailing block is zero; done with this and all later steps
                break;
            };
            st.swap_rows(t, pi);
            st.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..r {
                let q = st.d.get(i, t).div_floor(st.d.get(t, t));
                st.addmul_row(i, t, &q);
                if !st.d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..c {
                let q = st.d.get(t, j).div_floor(st.d.get(t, t));
                st.addmul_col(j, t, &q);
                if !st.d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // divisibility repair: pivot must divide the whole block
            let p = st.d.get(t, t).clone();
            let offender = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !st.d.get(i, j).mod_floor(&p).is_zero());
            match offender {
                Some((i, _)) => {
                    let minus_one = -BigInt::one();
                    st.addmul_row(t, i, &minus_one); // row_t += row_i
                }
                None => break,
            }
        }
        if st.d.get(t, t).is_negative() {
            st.negate_row(t);
        }
        if st.d.get(t, t).is_zero() {
            break;
        }
    }

    SnfResult {
        u: st.u,
        d: st.d,
        v: st.v,
    }
}

/// Invariants of `Z^rows / im(M)` read off the Smith normal form.
pub fn cokernel(m: &IntMatrix) -> CokernelStructure {
    let snf = smith_normal_form(m);
    let k = m.rows().min(m.cols());
    let factors = snf.invariant_factors();
    let torsion: Vec<BigInt> = factors.iter().filter(|d| **d > BigInt::one()).cloned().collect();
    let zero_rows: Vec<usize> = (0..k)
        .filter(|&i| factors[i].is_zero())
        .chain(k..m.rows())
        .collect();
    let free_rank = zero_rows.len();
    let mut projection = IntMatrix::zero(free_rank, m.rows());
    for (out, &i) in zero_rows.iter().enumerate() {
        let flip = (0..m.rows())
            .map(|j| snf.u.get(i, j))
            .find(|e| !e.is_zero())
            .map_or(false, |e| e.is_negative());
        for j in 0..m.rows() {
            let e = snf.u.get(i, j).clone();
            projection.set(out, j, if flip { -e } else { e });
        }
    }
    CokernelStructure {
        torsion_invariants: torsion,
        free_rank,
        projection,
    }
}

/// Rescale a rank-one projection by `±1` so the designated basis element
/// maps to `+1`.
pub fn normalize_projection(
    c: &CokernelStructure,
    designated: usize,
) -> Result<CokernelStructure> {
    if c.free_rank != 1 {
        return Err(Error::Invalid(format!(
            "free rank is {}, expected 1",
            c.free_rank
        )));
    }
    let val = c.projection.get(0, designated);
    if val.abs() != BigInt::one() {
        return Err(Error::NotAGenerator(val.to_string()));
    }
    let mut out = c.clone();
    if val.is_negative() {
        for j in 0..out.projection.cols() {
            let e = -out.projection.get(0, j);
            out.projection.set(0, j, e);
        }
    }
    Ok(out)
}
