//! Monomial ideals represented by their minimal generators.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A proper monomial ideal, stored as its minimal generating set `G(I)`
/// sorted lexicographically by exponent vector. The zero ideal has no
/// generators; the unit ideal is not representable.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Result of `I : u`. The colon is the whole ring exactly when `u ∈ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quotient {
    Unit,
    Proper(MonomialIdeal),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub is_squarefree: bool,
    pub contains_variable: bool,
    pub min_degree: Option<u32>,
    pub max_degree: Option<u32>,
}

/// Divisibility-minimal elements of `monomials`, deduplicated and sorted
/// lexicographically.
pub fn minimal_elements(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    monomials.sort_by(|a, b| a.graded_cmp(b));
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monomials.len());
    for m in monomials {
        // Anything dividing `m` has degree <= deg m, so it is already kept.
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort();
    kept
}

/// All monomials of total degree `degree` in `n` variables, lexicographically
/// descending (`x1^d` first).
pub fn monomials_of_degree(n: usize, degree: u32) -> Vec<Monomial> {
    fn go(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            go(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if degree == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    go(n, 0, degree, &mut vec![0; n], &mut out);
    out
}

impl MonomialIdeal {
    /// Builds the ideal generated by `monomials`, keeping the minimal ones.
    pub fn minimalize<I>(n: usize, monomials: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let monomials: Vec<Monomial> = monomials.into_iter().collect();
        if let Some(bad) = monomials.iter().find(|m| m.nvars() != n) {
            return Err(Error::Dimension {
                expected: n,
                found: bad.nvars(),
            });
        }
        if monomials.iter().any(Monomial::is_one) {
            return Err(Error::Domain("the unit ideal is not supported".into()));
        }
        Ok(MonomialIdeal {
            n,
            gens: minimal_elements(monomials),
        })
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// Wraps a list already known to be a sorted antichain without the unit.
    pub(crate) fn from_minimal_unchecked(n: usize, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        MonomialIdeal { n, gens }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `lcm(G(I))`, or `None` for the zero ideal.
    pub fn lcm_of_gens(&self) -> Option<Monomial> {
        let mut it = self.gens.iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, g| acc.lcm(g)))
    }

    /// The common generator degree, if all generators share one.
    pub fn generating_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn flags(&self) -> StructuralFlags {
        StructuralFlags {
            is_squarefree: self.gens.iter().all(Monomial::is_squarefree),
            contains_variable: self.gens.iter().any(|g| g.degree() == 1),
            min_degree: self.gens.iter().map(Monomial::degree).min(),
            max_degree: self.gens.iter().map(Monomial::degree).max(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.flags().is_squarefree
    }

    pub fn product(&self, other: &MonomialIdeal, gens_cap: usize) -> Result<MonomialIdeal> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                products.push(a.try_mul(b)?);
            }
        }
        let gens = minimal_elements(products);
        if gens.len() > gens_cap {
            return Err(Error::resource("generators", gens_cap, gens.len()));
        }
        Ok(MonomialIdeal { n: self.n, gens })
    }

    /// Minimal generators of `I^s`, by repeated multiplication with `I`.
    pub fn power(&self, s: u32, gens_cap: usize) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::Precondition(
                "power exponent must be at least 1".into(),
            ));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self, gens_cap)?;
        }
        Ok(acc)
    }

    /// `I_<j>`: the ideal generated by every degree-`j` monomial of `I`.
    pub fn componentwise_piece(&self, j: u32, gens_cap: usize) -> Result<MonomialIdeal> {
        let mut seen = HashSet::new();
        for g in &self.gens {
            let d = g.degree();
            if d > j {
                continue;
            }
            for m in monomials_of_degree(self.n, j - d) {
                seen.insert(g.try_mul(&m)?);
                if seen.len() > gens_cap {
                    return Err(Error::resource("generators", gens_cap, seen.len()));
                }
            }
        }
        let mut gens: Vec<Monomial> = seen.into_iter().collect();
        gens.sort();
        Ok(MonomialIdeal { n: self.n, gens })
    }

    /// `I : u`, generated by `g / gcd(g, u)` for `g ∈ G(I)`.
    pub fn colon(&self, u: &Monomial) -> Result<Quotient> {
        if u.nvars() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: u.nvars(),
            });
        }
        Ok(colon_of_gens(self.n, &self.gens, u))
    }

    /// Relabels variables: `x_i` becomes `x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = self.gens.iter().map(|g| g.permute(perm)).collect();
        gens.sort();
        MonomialIdeal { n: self.n, gens }
    }
}

/// `(gens) : u` for an arbitrary generator list (not necessarily minimal).
pub(crate) fn colon_of_gens(n: usize, gens: &[Monomial], u: &Monomial) -> Quotient {
    let quotients: Vec<Monomial> = gens.iter().map(|g| g.quotient_by_gcd(u)).collect();
    if quotients.iter().any(Monomial::is_one) {
        return Quotient::Unit;
    }
    Quotient::Proper(MonomialIdeal {
        n,
        gens: minimal_elements(quotients),
    })
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.n)
    }
}

/// Test and fixture shorthand: `ideal(4, &["x1*x2", "x3*x4"])`.
pub fn ideal(n: usize, gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::minimalize(n, gens.iter().map(|g| crate::monomial::mono(n, g)))
        .expect("valid fixture ideal")
}
