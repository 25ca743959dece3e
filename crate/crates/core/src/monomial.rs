//! Exponent vectors and the `x1*x2^3` text form.
//!
//! A [`Monomial`] is the exponent vector `a` of `x^a` over a fixed number of
//! variables. Variables are 1-indexed in text and 0-indexed in memory.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn variable(n: usize, index: usize) -> Self {
        let mut exps = vec![0; n];
        exps[index] = 1;
        Monomial { exps }
    }

    /// Square-free monomial `x_S` for a set of 0-based variable indices.
    pub fn squarefree(n: usize, support: &[usize]) -> Self {
        let mut exps = vec![0; n];
        for &i in support {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_dim(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::Dimension {
                expected: self.exps.len(),
                found: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn try_lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(self.lcm(other))
    }

    pub fn try_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(self.gcd(other))
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.divides(other))
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Componentwise max. Callers guarantee equal variable counts.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// `self | other`, i.e. `self <= other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Strict divisibility: divides and differs.
    pub fn strictly_divides(&self, other: &Monomial) -> bool {
        self.divides(other) && self != other
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("exponent overflow")
    }

    /// `self / other`, assuming `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// `self / gcd(self, other)`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - a.min(b))
                .collect(),
        }
    }

    pub fn pow(&self, s: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|e| e.checked_mul(s).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Applies a variable relabelling: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial { exps }
    }

    /// Parses `x1*x2^2` style text over `n` variables. `1` is the unit.
    ///
    /// Errors carry line 1 and the 1-based column inside `text`.
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        let err = |col: usize, message: String| Error::Parse {
            line: 1,
            column: col + 1,
            message,
        };
        let mut exps = vec![0u32; n];
        if text.trim() == "1" {
            return Ok(Monomial { exps });
        }
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let read_int = |pos: &mut usize| -> Option<(u64, usize)> {
            let start = *pos;
            let mut value: u64 = 0;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                value = value
                    .saturating_mul(10)
                    .saturating_add(u64::from(bytes[*pos] - b'0'));
                *pos += 1;
            }
            (*pos > start).then_some((value, start))
        };
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() || bytes[pos] != b'x' {
                return Err(err(pos, "expected a factor `x<index>`".into()));
            }
            pos += 1;
            let (index, at) =
                read_int(&mut pos).ok_or_else(|| err(pos, "expected a variable index".into()))?;
            if index == 0 {
                return Err(err(at, "variable indices start at 1".into()));
            }
            if index > n as u64 {
                return Err(err(
                    at,
                    format!("variable index {index} exceeds variable count {n}"),
                ));
            }
            skip_ws(&mut pos);
            let mut exp = 1u64;
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                skip_ws(&mut pos);
                let (e, at) =
                    read_int(&mut pos).ok_or_else(|| err(pos, "expected an exponent".into()))?;
                if e < 1 {
                    return Err(err(at, "exponents must be at least 1".into()));
                }
                exp = e;
            }
            let slot = &mut exps[(index - 1) as usize];
            *slot = u32::try_from(exp)
                .ok()
                .and_then(|e| slot.checked_add(e))
                .ok_or_else(|| err(pos, "exponent overflow".into()))?;
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'*' {
                return Err(err(pos, "expected `*` between factors".into()));
            }
            pos += 1;
        }
        Ok(Monomial { exps })
    }

    /// Degree first, then lexicographic; a linear extension of divisibility.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Shorthand used in tests and fixtures: `mono(4, "x1*x2")`.
pub fn mono(n: usize, text: &str) -> Monomial {
    Monomial::parse(text, n).unwrap_or_else(|e| panic!("bad monomial {text:?}: {e}"))
}
