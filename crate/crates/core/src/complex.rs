//! Finite simplicial complexes.
//!
//! Two degenerate states are kept apart: the *void* complex has no faces at
//! all, the *empty* complex has exactly the empty face. Their reduced homology
//! differs in degree -1.
//!
//! Order complexes are stored as the underlying poset; chains are enumerated
//! on demand.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Void,
    Facets {
        vertex_count: usize,
        facets: Vec<Vec<u32>>,
    },
    Chains(ChainPoset),
}

/// A finite poset on `0..len` whose index order is a linear extension.
/// `above[i]` lists, ascending, every `j > i` with `i < j` in the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainPoset {
    above: Vec<Vec<u32>>,
}

impl ChainPoset {
    pub fn new(above: Vec<Vec<u32>>) -> Self {
        for (i, ups) in above.iter().enumerate() {
            assert!(
                ups.windows(2).all(|w| w[0] < w[1]) && ups.iter().all(|&j| j as usize > i),
                "poset relation must follow the index order"
            );
        }
        ChainPoset { above }
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn less(&self, i: u32, j: u32) -> bool {
        self.above[i as usize].binary_search(&j).is_ok()
    }

    /// `j` covers `i`: `i < j` with nothing strictly between.
    fn covers(&self, i: u32, j: u32) -> bool {
        self.less(i, j)
            && !self.above[i as usize]
                .iter()
                .any(|&k| k < j && self.less(k, j))
    }
}

impl SimplicialComplex {
    pub fn void() -> Self {
        SimplicialComplex { repr: Repr::Void }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex {
            repr: Repr::Facets {
                vertex_count: 0,
                facets: vec![Vec::new()],
            },
        }
    }

    /// The complex generated by `facets` on vertices `0..vertex_count`.
    /// Non-maximal entries are dropped; no facets at all gives the void
    /// complex.
    pub fn from_facets(vertex_count: usize, facets: Vec<Vec<u32>>) -> Self {
        if facets.is_empty() {
            return Self::void();
        }
        let mut sets: Vec<Vec<u32>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                assert!(
                    f.iter().all(|&v| (v as usize) < vertex_count),
                    "facet vertex out of range"
                );
                f
            })
            .collect();
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        sets.dedup();
        let mut kept: Vec<Vec<u32>> = Vec::new();
        for f in sets {
            if !kept.iter().any(|k| is_subset(&f, k)) {
                kept.push(f);
            }
        }
        kept.sort();
        SimplicialComplex {
            repr: Repr::Facets {
                vertex_count,
                facets: kept,
            },
        }
    }

    /// Order complex of a poset. An empty poset gives the void complex.
    pub fn order_complex(poset: ChainPoset) -> Self {
        if poset.is_empty() {
            return Self::void();
        }
        SimplicialComplex {
            repr: Repr::Chains(poset),
        }
    }

    pub fn is_void(&self) -> bool {
        matches!(self.repr, Repr::Void)
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        match &self.repr {
            Repr::Facets { facets, .. } => facets.len() == 1 && facets[0].is_empty(),
            _ => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        match &self.repr {
            Repr::Void => 0,
            Repr::Facets { vertex_count, .. } => *vertex_count,
            Repr::Chains(p) => p.len(),
        }
    }

    /// Maximal faces, sorted lexicographically.
    pub fn facets(&self) -> Vec<Vec<u32>> {
        match &self.repr {
            Repr::Void => Vec::new(),
            Repr::Facets { facets, .. } => facets.clone(),
            Repr::Chains(p) => maximal_chains(p),
        }
    }

    /// Dimension (max face size - 1); `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        match &self.repr {
            Repr::Void => None,
            Repr::Facets { facets, .. } => {
                facets.iter().map(|f| f.len() as isize - 1).max()
            }
            Repr::Chains(p) => Some(longest_chain(p) as isize - 1),
        }
    }

    /// Non-empty faces grouped by dimension: entry `k` holds the `k`-faces as
    /// ascending vertex lists, sorted lexicographically.
    pub fn faces_by_dimension(&self, cap: usize) -> Result<Vec<Vec<Vec<u32>>>> {
        let mut out: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut total = 0usize;
        let mut push = |face: &[u32], out: &mut Vec<Vec<Vec<u32>>>| -> Result<()> {
            total += 1;
            if total > cap {
                return Err(Error::resource("faces", cap, total));
            }
            let k = face.len() - 1;
            if out.len() <= k {
                out.resize_with(k + 1, Vec::new);
            }
            out[k].push(face.to_vec());
            Ok(())
        };
        match &self.repr {
            Repr::Void => {}
            Repr::Facets { facets, .. } => {
                let mut all = BTreeSet::new();
                for f in facets {
                    let len = f.len();
                    for mask in 1u64..(1u64 << len) {
                        let face: Vec<u32> = (0..len)
                            .filter(|b| mask >> b & 1 == 1)
                            .map(|b| f[b])
                            .collect();
                        all.insert(face);
                    }
                    if all.len() > cap {
                        return Err(Error::resource("faces", cap, all.len()));
                    }
                }
                for face in &all {
                    push(face, &mut out)?;
                }
                for level in &mut out {
                    level.sort();
                }
            }
            Repr::Chains(p) => {
                // Depth-first from each vertex in index order emits chains of
                // each fixed length in lexicographic order.
                let mut stack: Vec<u32> = Vec::new();
                fn dfs(
                    p: &ChainPoset,
                    stack: &mut Vec<u32>,
                    emit: &mut dyn FnMut(&[u32]) -> Result<()>,
                ) -> Result<()> {
                    emit(stack)?;
                    let last = *stack.last().expect("non-empty chain") as usize;
                    for &j in &p.above[last] {
                        stack.push(j);
                        dfs(p, stack, emit)?;
                        stack.pop();
                    }
                    Ok(())
                }
                let mut emit = |face: &[u32]| push(face, &mut out);
                for v in 0..p.len() as u32 {
                    stack.push(v);
                    dfs(p, &mut stack, &mut emit)?;
                    stack.pop();
                }
            }
        }
        Ok(out)
    }

    /// Relabels vertex `v` as `perm[v]`; used by invariance tests.
    pub fn relabel(&self, perm: &[u32]) -> SimplicialComplex {
        match &self.repr {
            Repr::Void => Self::void(),
            Repr::Facets {
                vertex_count,
                facets,
            } => Self::from_facets(
                *vertex_count,
                facets
                    .iter()
                    .map(|f| f.iter().map(|&v| perm[v as usize]).collect())
                    .collect(),
            ),
            Repr::Chains(_) => Self::from_facets(
                self.vertex_count(),
                self.facets()
                    .iter()
                    .map(|f| f.iter().map(|&v| perm[v as usize]).collect())
                    .collect(),
            ),
        }
    }
}

fn is_subset(small: &[u32], big: &[u32]) -> bool {
    small.iter().all(|v| big.binary_search(v).is_ok())
}

fn longest_chain(p: &ChainPoset) -> usize {
    // Index order is a linear extension, so a reverse sweep suffices.
    let mut best = vec![1usize; p.len()];
    for i in (0..p.len()).rev() {
        best[i] = 1 + p.above[i]
            .iter()
            .map(|&j| best[j as usize])
            .max()
            .unwrap_or(0);
    }
    best.into_iter().max().unwrap_or(0)
}

fn maximal_chains(p: &ChainPoset) -> Vec<Vec<u32>> {
    let n = p.len() as u32;
    let has_below: Vec<bool> = {
        let mut v = vec![false; p.len()];
        for ups in &p.above {
            for &j in ups {
                v[j as usize] = true;
            }
        }
        v
    };
    let cover_lists: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            p.above[i as usize]
                .iter()
                .copied()
                .filter(|&j| p.covers(i, j))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn walk(covers: &[Vec<u32>], stack: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let last = *stack.last().expect("non-empty") as usize;
        if covers[last].is_empty() {
            out.push(stack.clone());
            return;
        }
        for &j in &covers[last] {
            stack.push(j);
            walk(covers, stack, out);
            stack.pop();
        }
    }
    for v in (0..n).filter(|&v| !has_below[v as usize]) {
        stack.push(v);
        walk(&cover_lists, &mut stack, &mut out);
        stack.pop();
    }
    out.sort();
    out
}
