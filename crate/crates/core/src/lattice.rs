//! The lcm lattice `L_I`: all lcms of subsets of `G(I)` under divisibility,
//! with `1` as the lcm of the empty set.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::complex::{ChainPoset, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone)]
pub struct LcmLattice {
    /// Sorted by (degree, exponents); the bottom `1` is at index 0.
    elements: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    atoms: Vec<usize>,
}

impl LcmLattice {
    /// Join-closure of the generators. Every lattice element is a join of
    /// atoms, so closing the worklist under joins with atoms is enough.
    pub fn build(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::Precondition(
                "the lcm lattice of the zero ideal is not defined".into(),
            ));
        }
        let atoms: Vec<Monomial> = ideal.gens().to_vec();
        let mut seen: HashMap<Monomial, ()> = HashMap::new();
        seen.insert(Monomial::one(ideal.nvars()), ());
        let mut work: Vec<Monomial> = Vec::new();
        for a in &atoms {
            if seen.insert(a.clone(), ()).is_none() {
                work.push(a.clone());
            }
        }
        while let Some(p) = work.pop() {
            for a in &atoms {
                let j = p.lcm(a);
                if !seen.contains_key(&j) {
                    seen.insert(j.clone(), ());
                    if seen.len() > cap {
                        return Err(Error::resource("lattice", cap, seen.len()));
                    }
                    work.push(j);
                }
            }
        }
        let mut elements: Vec<Monomial> = seen.into_keys().collect();
        elements.sort_by(|a, b| a.graded_cmp(b));
        let index: HashMap<Monomial, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut atom_ix: Vec<usize> = atoms.iter().map(|a| index[a]).collect();
        atom_ix.sort_unstable();
        Ok(LcmLattice {
            elements,
            index,
            atoms: atom_ix,
        })
    }

    pub fn elements(&self) -> &[Monomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bottom(&self) -> &Monomial {
        &self.elements[0]
    }

    pub fn top(&self) -> &Monomial {
        self.elements.last().expect("lattice is never empty")
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Monomial> {
        self.atoms.iter().map(|&i| &self.elements[i])
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.index.contains_key(m)
    }

    pub fn is_atom(&self, m: &Monomial) -> bool {
        self.index
            .get(m)
            .is_some_and(|i| self.atoms.binary_search(i).is_ok())
    }

    /// Elements strictly between `1` and `m`, in (degree, lex) order.
    pub fn open_interval(&self, m: &Monomial) -> Result<Vec<Monomial>> {
        if !self.contains(m) {
            return Err(Error::Domain(format!("{m} is not in the lcm lattice")));
        }
        Ok(self.elements[1..]
            .iter()
            .filter(|p| *p != m && p.divides(m))
            .cloned()
            .collect())
    }

    /// Elements covered by each element, for the text dump.
    pub fn lower_covers(&self) -> Vec<Vec<usize>> {
        (0..self.elements.len())
            .map(|i| {
                let m = &self.elements[i];
                let below: Vec<usize> = (0..i)
                    .filter(|&j| self.elements[j].strictly_divides(m))
                    .collect();
                below
                    .iter()
                    .copied()
                    .filter(|&j| {
                        !below.iter().any(|&k| {
                            k != j && self.elements[j].strictly_divides(&self.elements[k])
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// One line per element: `element: cover, cover, ...`.
    pub fn dump(&self) -> String {
        let covers = self.lower_covers();
        let mut out = String::new();
        for (i, m) in self.elements.iter().enumerate() {
            let list: Vec<String> = covers[i]
                .iter()
                .map(|&j| self.elements[j].to_string())
                .collect();
            let _ = writeln!(out, "{m}: {}", list.join(", "));
        }
        out
    }
}

/// Order complex of a set of monomials under divisibility.
pub fn order_complex(interval: &[Monomial]) -> SimplicialComplex {
    let mut elems: Vec<&Monomial> = interval.iter().collect();
    elems.sort_by(|a, b| a.graded_cmp(b));
    elems.dedup();
    let above: Vec<Vec<u32>> = (0..elems.len())
        .map(|i| {
            (i + 1..elems.len())
                .filter(|&j| elems[i].strictly_divides(elems[j]))
                .map(|j| j as u32)
                .collect()
        })
        .collect();
    SimplicialComplex::order_complex(ChainPoset::new(above))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal;
    use crate::monomial::mono;

    fn elems(l: &LcmLattice) -> Vec<String> {
        l.elements().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn build_examples() {
        let l = LcmLattice::build(&ideal(4, &["x1*x2", "x3*x4"]), 1 << 20).unwrap();
        assert_eq!(elems(&l), ["1", "x3*x4", "x1*x2", "x1*x2*x3*x4"]);
        let l = LcmLattice::build(&ideal(3, &["x1*x2", "x1*x3", "x2*x3"]), 1 << 20).unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l.top(), &mono(3, "x1*x2*x3"));
        let l = LcmLattice::build(&ideal(1, &["x1"]), 1 << 20).unwrap();
        assert_eq!(elems(&l), ["1", "x1"]);
        assert!(LcmLattice::build(&MonomialIdeal::zero(2), 10).is_err());
    }

    #[test]
    fn lattice_cap() {
        let i = ideal(4, &["x1", "x2", "x3", "x4"]);
        let err = LcmLattice::build(&i, 8).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn intervals() {
        let l = LcmLattice::build(&ideal(4, &["x1*x2", "x3*x4"]), 1 << 20).unwrap();
        let iv = l.open_interval(&mono(4, "x1*x2*x3*x4")).unwrap();
        assert_eq!(iv, vec![mono(4, "x3*x4"), mono(4, "x1*x2")]);
        assert!(l.open_interval(&mono(4, "x1*x2")).unwrap().is_empty());
        assert!(l.open_interval(&mono(4, "x1")).is_err());

        let l = LcmLattice::build(&ideal(3, &["x1*x2", "x1*x3", "x2*x3"]), 1 << 20).unwrap();
        assert_eq!(l.open_interval(l.top()).unwrap().len(), 3);
    }

    #[test]
    fn order_complex_examples() {
        let c = order_complex(&[mono(4, "x1*x2"), mono(4, "x3*x4")]);
        assert_eq!(c.facets(), vec![vec![0], vec![1]]);
        let c = order_complex(&[mono(3, "x1*x2"), mono(3, "x1*x2*x3")]);
        assert_eq!(c.facets(), vec![vec![0, 1]]);
        assert!(order_complex(&[]).is_void());
    }

    #[test]
    fn dump_lists_covers() {
        let l = LcmLattice::build(&ideal(4, &["x1*x2", "x3*x4"]), 1 << 20).unwrap();
        let d = l.dump();
        assert!(d.contains("x1*x2*x3*x4: x3*x4, x1*x2"));
        assert!(d.starts_with("1: \n"));
    }
}
