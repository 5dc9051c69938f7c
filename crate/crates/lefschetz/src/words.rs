//! Free-group words and endomorphisms: free reduction, identity
//! verification, abelianization, and Fox Jacobians pushed through a
//! projection onto a free abelian quotient.
//!
//! The Fox derivative follows the usual rules
//! `d(x)/dx = 1`, `d(x^-1)/dx = -x^-1`, `d(uv)/dx = du/dx + u dv/dx`;
//! pushing each group element through the projection replaces it by a
//! monomial in the deck variables.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;
use crate::laurent::LaurentPoly;

/// Freely reduced word: letters are (generator index, sign).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word {
    letters: Vec<(usize, i8)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(i: usize) -> Self {
        Word {
            letters: vec![(i, 1)],
        }
    }

    /// Build from raw letters, cancelling adjacent inverse pairs.
    pub fn reduce(letters: &[(usize, i8)]) -> Self {
        let mut stack: Vec<(usize, i8)> = Vec::with_capacity(letters.len());
        for &(idx, sign) in letters {
            assert!(sign == 1 || sign == -1, "letter sign must be ±1");
            match stack.last() {
                Some(&(top, tsign)) if top == idx && tsign == -sign => {
                    stack.pop();
                }
                _ => stack.push((idx, sign)),
            }
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::reduce(&letters)
    }

    pub fn invert(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(i, s)| (i, -s))
                .collect(),
        }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(i, _)| i).max()
    }

    pub fn render(&self, gens: &[String]) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|&(i, s)| {
                if s > 0 {
                    gens[i].clone()
                } else {
                    format!("{}^-1", gens[i])
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// True iff the freely reduced forms agree.
pub fn verify_identity(lhs: &Word, rhs: &Word) -> bool {
    lhs == rhs
}

/// Endomorphism of a free group of the given rank: generator `i` maps to
/// `images[i]`, a word over the same generators.
#[derive(Clone, Debug)]
pub struct FreeEndomorphism {
    pub rank: usize,
    pub gens: Vec<String>,
    pub images: Vec<Word>,
}

impl FreeEndomorphism {
    pub fn new(gens: Vec<String>, images: Vec<Word>) -> Result<Self> {
        let rank = gens.len();
        if images.len() != rank {
            return Err(Error::Invalid(format!(
                "{} generators but {} images",
                rank,
                images.len()
            )));
        }
        for w in &images {
            if let Some(m) = w.max_generator() {
                if m >= rank {
                    return Err(Error::Invalid(format!(
                        "image uses generator index {m} beyond rank {rank}"
                    )));
                }
            }
        }
        Ok(FreeEndomorphism { rank, gens, images })
    }

    pub fn identity(rank: usize) -> Self {
        let gens = (0..rank).map(|i| format!("x{}", i + 1)).collect();
        let images = (0..rank).map(Word::generator).collect();
        FreeEndomorphism::new(gens, images).unwrap()
    }

    /// Abelianized matrix: entry (i, j) is the signed count of generator
    /// `i` in the image of generator `j` (columns are images).
    pub fn abelianization(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.rank, self.rank);
        for (j, w) in self.images.iter().enumerate() {
            for &(i, s) in w.letters() {
                let v = m.get(i, j) + BigInt::from(s);
                m.set(i, j, v);
            }
        }
        m
    }

    /// Fox Jacobian through the projection `psi` (an `r x rank` integer
    /// matrix): entry (i, j) is the image of the Fox derivative of
    /// `images[j]` with respect to generator `i`, each group element
    /// replaced by the deck monomial of its `psi`-value.
    ///
    /// Requires `psi * (abelianization - Id) = 0`: the induced action on
    /// the quotient must be trivial so the elevation fixes the deck group.
    pub fn fox_jacobian(&self, psi: &IntMatrix) -> Result<GroupRingMatrix> {
        if psi.cols() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "projection has {} columns, endomorphism rank {}",
                psi.cols(),
                self.rank
            )));
        }
        let ab = self.abelianization();
        let m_minus_id = ab.sub(&IntMatrix::identity(self.rank))?;
        if !psi.mul(&m_minus_id)?.is_zero() {
            return Err(Error::QuotientActionNontrivial);
        }
        let r = psi.rows();
        let mut entries =
            vec![vec![LaurentPoly::zero(r); self.rank]; self.rank];
        for (j, w) in self.images.iter().enumerate() {
            // prefix = psi-value of the part of the word already consumed
            let mut prefix = vec![0i64; r];
            for &(i, s) in w.letters() {
                let col: Vec<i64> = (0..r)
                    .map(|k| {
                        i64::try_from(psi.get(k, i)).expect("projection entry fits i64")
                    })
                    .collect();
                if s > 0 {
                    let mono = LaurentPoly::monomial(r, prefix.clone(), BigInt::one());
                    entries[i][j] = entries[i][j].add(&mono)?;
                    for (p, c) in prefix.iter_mut().zip(&col) {
                        *p += c;
                    }
                } else {
                    for (p, c) in prefix.iter_mut().zip(&col) {
                        *p -= c;
                    }
                    let mono = LaurentPoly::monomial(r, prefix.clone(), BigInt::one());
                    entries[i][j] = entries[i][j].sub(&mono)?;
                }
            }
        }
        Ok(GroupRingMatrix {
            size: self.rank,
            num_vars: r,
            entries,
        })
    }

    /// Parse the endomorphism text format: first non-comment line lists
    /// the generator names; each following line is `g -> w1 w2 ...` with
    /// tokens `name` or `name^-1`.  Lines starting with `#` are comments.
    pub fn parse(text: &str) -> Result<FreeEndomorphism> {
        let mut gens: Option<Vec<String>> = None;
        let mut images: Vec<Option<Word>> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match &gens {
                None => {
                    let names: Vec<String> =
                        line.split_whitespace().map(|s| s.to_string()).collect();
                    images = vec![None; names.len()];
                    gens = Some(names);
                }
                Some(names) => {
                    let (lhs, rhs) = line.split_once("->").ok_or_else(|| Error::Parse {
                        line: idx + 1,
                        msg: "expected `gen -> word`".into(),
                    })?;
                    let lhs = lhs.trim();
                    let gi = names.iter().position(|n| n == lhs).ok_or_else(|| {
                        Error::Parse {
                            line: idx + 1,
                            msg: format!("unknown generator `{lhs}`"),
                        }
                    })?;
                    let word = parse_word(rhs, names, idx + 1)?;
                    if images[gi].is_some() {
                        return Err(Error::Parse {
                            line: idx + 1,
                            msg: format!("duplicate image for `{lhs}`"),
                        });
                    }
                    images[gi] = Some(word);
                }
            }
        }
        let gens = gens.ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing generator list".into(),
        })?;
        let images: Vec<Word> = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| Error::Parse {
                    line: 1,
                    msg: format!("missing image for `{}`", gens[i]),
                })
            })
            .collect::<Result<_>>()?;
        FreeEndomorphism::new(gens, images)
    }
}

/// Parse a whitespace-separated word over the given generator names;
/// tokens are `name` or `name^-1`.
pub fn parse_word(text: &str, gens: &[String], line: usize) -> Result<Word> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let (name, sign) = match tok.strip_suffix("^-1") {
            Some(base) => (base, -1i8),
            None => (tok, 1i8),
        };
        if name == "1" && sign == 1 {
            continue; // the empty word
        }
        let idx = gens.iter().position(|g| g == name).ok_or_else(|| Error::Parse {
            line,
            msg: format!("unknown generator token `{tok}`"),
        })?;
        letters.push((idx, sign));
    }
    Ok(Word::reduce(&letters))
}

/// Square matrix over the group ring of the deck quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingMatrix {
    pub size: usize,
    pub num_vars: usize,
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl GroupRingMatrix {
    pub fn identity(size: usize, num_vars: usize) -> Self {
        let mut entries = vec![vec![LaurentPoly::zero(num_vars); size]; size];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = LaurentPoly::one(num_vars);
        }
        GroupRingMatrix {
            size,
            num_vars,
            entries,
        }
    }

    /// Set every deck variable to 1, leaving an integer matrix.
    pub fn augmentation(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.size, self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                let sum = self.entries[i][j]
                    .terms()
                    .fold(BigInt::zero(), |acc, (_, c)| acc + c);
                m.set(i, j, sum);
            }
        }
        m
    }

    pub fn render(&self, names: &[&str]) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|p| p.render(names)).collect();
            out.push_str(&format!("[ {} ]\n", cells.join(", ")));
        }
        out
    }
}

/// One named abbreviation in a word-identity dataset.
#[derive(Clone, Debug)]
pub struct WordCheck {
    pub lhs_text: String,
    pub rhs_text: String,
    pub lhs: Word,
    pub rhs: Word,
}

/// Word-identity dataset: generators, named abbreviations (expanded in
/// order of definition), and equations to check.
///
/// Format: `gens a b c`, `def Name = tokens`, `check tokens == tokens`.
/// Tokens may reference generators or earlier defs, optionally `^-1`.
#[derive(Clone, Debug)]
pub struct WordIdentitySet {
    pub gens: Vec<String>,
    pub defs: Vec<(String, Word)>,
    pub checks: Vec<WordCheck>,
}

impl WordIdentitySet {
    pub fn parse(text: &str) -> Result<WordIdentitySet> {
        let mut gens: Vec<String> = Vec::new();
        let mut defs: Vec<(String, Word)> = Vec::new();
        let mut checks: Vec<WordCheck> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("gens ") {
                gens = rest.split_whitespace().map(|s| s.to_string()).collect();
            } else if let Some(rest) = line.strip_prefix("def ") {
                let (name, body) = rest.split_once('=').ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: "expected `def Name = tokens`".into(),
                })?;
                let word = expand(body, &gens, &defs, lineno)?;
                defs.push((name.trim().to_string(), word));
            } else if let Some(rest) = line.strip_prefix("check ") {
                let (lhs, rhs) = rest.split_once("==").ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: "expected `check lhs == rhs`".into(),
                })?;
                checks.push(WordCheck {
                    lhs_text: lhs.trim().to_string(),
                    rhs_text: rhs.trim().to_string(),
                    lhs: expand(lhs, &gens, &defs, lineno)?,
                    rhs: expand(rhs, &gens, &defs, lineno)?,
                });
            } else {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unrecognized directive `{line}`"),
                });
            }
        }
        Ok(WordIdentitySet { gens, defs, checks })
    }

    /// Verify every check; returns (lhs, rhs, verified) triples.
    pub fn verify_all(&self) -> Vec<(String, String, bool)> {
        self.checks
            .iter()
            .map(|c| {
                (
                    c.lhs_text.clone(),
                    c.rhs_text.clone(),
                    verify_identity(&c.lhs, &c.rhs),
                )
            })
            .collect()
    }
}

fn expand(
    text: &str,
    gens: &[String],
    defs: &[(String, Word)],
    line: usize,
) -> Result<Word> {
    let mut acc = Word::empty();
    for tok in text.split_whitespace() {
        let (name, inverted) = match tok.strip_suffix("^-1") {
            Some(base) => (base, true),
            None => (tok, false),
        };
        let word = if let Some(idx) = gens.iter().position(|g| g == name) {
            Word::generator(idx)
        } else if let Some((_, w)) = defs.iter().find(|(n, _)| n == name) {
            w.clone()
        } else {
            return Err(Error::Parse {
                line,
                msg: format!("unknown token `{tok}`"),
            });
        };
        acc = acc.concat(&if inverted { word.invert() } else { word });
    }
    Ok(acc)
}
