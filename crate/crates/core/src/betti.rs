//! Multigraded Betti numbers of monomial ideals.
//!
//! For `m` in the lcm lattice and `i >= 1`,
//! `β_{i,m}(I) = dim H̃_{i-1}(Δ(1,m))`, the reduced homology of the order
//! complex of the open interval below `m`; `β_{0,m}` is `1` exactly on the
//! minimal generators, and every `m` outside the lattice has no Betti numbers.
//!
//! [`taylor_strand_betti`] recomputes a single entry from the Taylor complex
//! and shares nothing with the lattice path except field arithmetic.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::homology::{reduced_homology, ReducedHomology};
use crate::ideal::MonomialIdeal;
use crate::lattice::{order_complex, LcmLattice};
use crate::linalg::dense_rank;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// Non-zero `β_{i,m}` only.
    fine: BTreeMap<(usize, Monomial), u64>,
    field: FieldSpec,
    subject: MonomialIdeal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FineEntry {
    pub i: usize,
    pub multidegree: Monomial,
    pub value: u64,
}

impl BettiTable {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn subject(&self) -> &MonomialIdeal {
        &self.subject
    }

    pub fn get(&self, i: usize, m: &Monomial) -> u64 {
        self.fine.get(&(i, m.clone())).copied().unwrap_or(0)
    }

    pub fn fine(&self) -> impl Iterator<Item = (usize, &Monomial, u64)> {
        self.fine.iter().map(|((i, m), v)| (*i, m, *v))
    }

    pub fn fine_entries(&self) -> Vec<FineEntry> {
        self.fine()
            .map(|(i, m, value)| FineEntry {
                i,
                multidegree: m.clone(),
                value,
            })
            .collect()
    }

    /// `β_{i,j} = Σ_{|m| = j} β_{i,m}`, non-zero entries only.
    pub fn coarse(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for ((i, m), v) in &self.fine {
            *out.entry((*i, m.degree())).or_insert(0) += v;
        }
        out
    }

    pub fn coarse_get(&self, i: usize, j: u32) -> u64 {
        self.fine
            .iter()
            .filter(|((k, m), _)| *k == i && m.degree() == j)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.fine.keys().map(|(i, _)| *i).max()
    }

    /// `max { j - i : β_{i,j} != 0 }`.
    pub fn regularity(&self) -> Option<i64> {
        self.fine
            .keys()
            .map(|(i, m)| i64::from(m.degree()) - *i as i64)
            .max()
    }

    /// Betti diagram: columns `i`, rows `j - i`, `.` for zero. With
    /// `quotient` the table of `S/I` is shown instead (`β_{i+1,j}(S/I) =
    /// β_{i,j}(I)` plus `β_{0,0}(S/I) = 1`).
    pub fn diagram(&self, quotient: bool) -> String {
        let mut cells: BTreeMap<(i64, usize), u64> = BTreeMap::new();
        for ((i, j), v) in self.coarse() {
            let (col, row) = if quotient {
                (i + 1, i64::from(j) - i as i64 - 1)
            } else {
                (i, i64::from(j) - i as i64)
            };
            cells.insert((row, col), v);
        }
        if quotient {
            cells.insert((0, 0), 1);
        }
        let mut out = String::new();
        if cells.is_empty() {
            out.push_str("(zero ideal)\n");
            return out;
        }
        let ncols = cells.keys().map(|(_, c)| c + 1).max().unwrap_or(0);
        let rows: Vec<i64> = {
            let lo = cells.keys().map(|(r, _)| *r).min().unwrap_or(0);
            let hi = cells.keys().map(|(r, _)| *r).max().unwrap_or(0);
            (lo..=hi).collect()
        };
        let totals: Vec<u64> = (0..ncols)
            .map(|c| cells.iter().filter(|((_, k), _)| *k == c).map(|(_, v)| v).sum())
            .collect();
        let width = totals
            .iter()
            .map(|t| t.to_string().len())
            .chain((0..ncols).map(|c| c.to_string().len()))
            .max()
            .unwrap_or(1);
        let label_width = rows
            .iter()
            .map(|r| r.to_string().len() + 1)
            .max()
            .unwrap_or(0)
            .max("total:".len());
        let cell = |v: Option<u64>| match v {
            Some(v) if v > 0 => v.to_string(),
            _ => ".".to_string(),
        };
        let _ = write!(out, "{:>label_width$}", "");
        for c in 0..ncols {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label_width$}", "total:");
        for t in &totals {
            let _ = write!(out, " {t:>width$}");
        }
        out.push('\n');
        for r in rows {
            let _ = write!(out, "{:>label_width$}", format!("{r}:"));
            for c in 0..ncols {
                let _ = write!(out, " {:>width$}", cell(cells.get(&(r, c)).copied()));
            }
            out.push('\n');
        }
        out
    }
}

/// `H̃(Δ(1,m))` for a lattice element `m`.
pub fn interval_homology(
    lattice: &LcmLattice,
    m: &Monomial,
    field: FieldSpec,
    caps: &Caps,
) -> Result<ReducedHomology> {
    let interval = lattice.open_interval(m)?;
    reduced_homology(&order_complex(&interval), field, caps.faces)
}

/// The upper Koszul simplicial complex of `ideal` at `m`: vertices the
/// support of `m`, faces the `F` with `m / x_F ∈ I`. Its reduced homology
/// gives the same Betti numbers as the lcm interval below `m`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, m: &Monomial, face_cap: usize) -> Result<SimplicialComplex> {
    let support = m.support();
    let k = support.len();
    if k >= usize::BITS as usize - 1 || 1usize << k > face_cap {
        return Err(Error::resource("faces", face_cap, 1usize.checked_shl(k as u32).unwrap_or(usize::MAX)));
    }
    let is_face = |mask: usize| {
        let mut exps = m.exps().to_vec();
        for (bit, &v) in support.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                exps[v] -= 1;
            }
        }
        ideal.contains(&Monomial::new(exps))
    };
    let faces: Vec<bool> = (0..1usize << k).map(is_face).collect();
    let facets: Vec<Vec<u32>> = (0..1usize << k)
        .filter(|&f| faces[f] && (0..k).all(|j| f >> j & 1 == 1 || !faces[f | 1 << j]))
        .map(|f| (0..k as u32).filter(|&j| f >> j & 1 == 1).collect())
        .collect();
    Ok(SimplicialComplex::from_facets(k, facets))
}

/// `H̃(K^m(I))`; `β_{i,m}(I)` is its dimension in degree `i - 1`.
pub fn koszul_homology(
    ideal: &MonomialIdeal,
    m: &Monomial,
    field: FieldSpec,
    caps: &Caps,
) -> Result<ReducedHomology> {
    reduced_homology(&upper_koszul_complex(ideal, m, caps.faces)?, field, caps.faces)
}

fn require_nonzero(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::Precondition("the ideal must be non-zero".into()));
    }
    Ok(())
}

/// Homology of every non-atom element in `elements`, in parallel.
fn homology_of(
    lattice: &LcmLattice,
    elements: &[&Monomial],
    field: FieldSpec,
    caps: &Caps,
) -> Result<Vec<ReducedHomology>> {
    elements
        .par_iter()
        .map(|m| interval_homology(lattice, m, field, caps))
        .collect()
}

fn insert_homology(
    fine: &mut BTreeMap<(usize, Monomial), u64>,
    m: &Monomial,
    h: &ReducedHomology,
) {
    for (&k, &v) in &h.dims {
        if k >= 0 {
            fine.insert((k as usize + 1, m.clone()), v);
        }
    }
}

/// All multigraded Betti numbers of `ideal`.
pub fn multigraded_betti(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<BettiTable> {
    require_nonzero(ideal)?;
    let lattice = LcmLattice::build(ideal, caps.lattice_elements)?;
    let targets: Vec<&Monomial> = lattice.elements()[1..]
        .iter()
        .filter(|m| !lattice.is_atom(m))
        .collect();
    let homologies = homology_of(&lattice, &targets, field, caps)?;
    let mut fine = BTreeMap::new();
    for g in ideal.gens() {
        fine.insert((0, g.clone()), 1);
    }
    for (m, h) in targets.iter().zip(&homologies) {
        insert_homology(&mut fine, m, h);
    }
    Ok(BettiTable {
        fine,
        field,
        subject: ideal.clone(),
    })
}

/// `β_{i,m}` from the degree-`m` strand of the Taylor complex tensored with
/// the field: basis the subsets `S ⊆ G(I)` with `lcm(S) = m`, differential
/// dropping one generator and keeping only terms whose lcm is still `m`.
pub fn taylor_strand_betti(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    m: &Monomial,
    i: usize,
    caps: &Caps,
) -> Result<u64> {
    if m.nvars() != ideal.nvars() {
        return Err(Error::Dimension {
            expected: ideal.nvars(),
            found: m.nvars(),
        });
    }
    let below: Vec<&Monomial> = ideal.gens().iter().filter(|g| g.divides(m)).collect();
    if below.len() > caps.taylor_generators {
        return Err(Error::resource(
            "taylor-generators",
            caps.taylor_generators,
            below.len(),
        ));
    }
    match field {
        FieldSpec::Prime(p) => Ok(taylor_strand_in(&PrimeField::new(p), &below, m, i)),
        FieldSpec::Rational => Ok(taylor_strand_in(&Rationals, &below, m, i)),
    }
}

fn taylor_strand_in<F: Field>(field: &F, gens: &[&Monomial], m: &Monomial, i: usize) -> u64 {
    let d = gens.len();
    if d == 0 {
        return 0;
    }
    // Subsets (as bit masks) of each size whose lcm is exactly m.
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); d + 2];
    for mask in 1u32..(1u32 << d) {
        let lcm = (0..d)
            .filter(|b| mask >> b & 1 == 1)
            .fold(Monomial::one(m.nvars()), |acc, b| acc.lcm(gens[b]));
        if &lcm == m {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    let position: HashMap<u32, usize> = by_size
        .iter()
        .flat_map(|level| level.iter().enumerate().map(|(k, &mask)| (mask, k)))
        .collect();
    // ∂ from subsets of size `size` to size `size - 1`, as dense rows.
    let rank_of = |size: usize| -> usize {
        if size < 2 || size > d {
            return 0;
        }
        let (src, dst) = (&by_size[size], &by_size[size - 1]);
        if src.is_empty() || dst.is_empty() {
            return 0;
        }
        let mut rows = vec![vec![field.zero(); src.len()]; dst.len()];
        for (c, &mask) in src.iter().enumerate() {
            let mut sign = 1i64;
            for b in 0..d {
                if mask >> b & 1 == 0 {
                    continue;
                }
                if let Some(&r) = position.get(&(mask & !(1 << b))) {
                    rows[r][c] = field.from_i64(sign);
                }
                sign = -sign;
            }
        }
        dense_rank(field, rows)
    };
    let size = i + 1;
    if size > d {
        return 0;
    }
    let chains = by_size[size].len();
    (chains - rank_of(size) - rank_of(size + 1)) as u64
}

/// `β_{i,j}(I)` for a single total degree `j`, keyed by `i`, non-zero only.
pub fn betti_in_degree(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    degree: u32,
    caps: &Caps,
) -> Result<BTreeMap<usize, u64>> {
    require_nonzero(ideal)?;
    let lattice = LcmLattice::build(ideal, caps.lattice_elements)?;
    let mut out = BTreeMap::new();
    let atoms_here = ideal.gens().iter().filter(|g| g.degree() == degree).count() as u64;
    if atoms_here > 0 {
        out.insert(0, atoms_here);
    }
    let targets: Vec<&Monomial> = lattice.elements()[1..]
        .iter()
        .filter(|m| m.degree() == degree && !lattice.is_atom(m))
        .collect();
    for h in homology_of(&lattice, &targets, field, caps)? {
        for (&k, &v) in &h.dims {
            if k >= 0 {
                *out.entry(k as usize + 1).or_insert(0) += v;
            }
        }
    }
    Ok(out)
}

pub fn regularity(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<i64> {
    let table = multigraded_betti(ideal, field, caps)?;
    Ok(table.regularity().expect("non-zero ideal has generators"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Linearity {
    pub linear: bool,
    /// Common generator degree, when there is one.
    pub degree: Option<u32>,
    /// A non-zero `β_{i,j}` off the linear strand `j = i + d`.
    pub witness: Option<(usize, u32)>,
}

/// Decides whether `ideal` has a linear resolution. Lattice elements are
/// processed by ascending degree and the search stops at the first degree
/// carrying an off-strand Betti number; the witness is the smallest `i` at
/// that degree. Betti numbers at each element are read from the upper
/// Koszul complex, which has at most `2^|supp m|` faces.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec, caps: &Caps) -> Result<Linearity> {
    require_nonzero(ideal)?;
    let flags = ideal.flags();
    let (lo, hi) = (flags.min_degree.unwrap(), flags.max_degree.unwrap());
    if lo != hi {
        return Ok(Linearity {
            linear: false,
            degree: None,
            witness: Some((0, hi)),
        });
    }
    let d = lo;
    let lattice = LcmLattice::build(ideal, caps.lattice_elements)?;
    let mut levels: BTreeMap<u32, Vec<&Monomial>> = BTreeMap::new();
    for m in &lattice.elements()[1..] {
        if !lattice.is_atom(m) {
            levels.entry(m.degree()).or_default().push(m);
        }
    }
    for (j, elements) in levels {
        let homologies: Vec<ReducedHomology> = elements
            .par_iter()
            .map(|m| koszul_homology(ideal, m, field, caps))
            .collect::<Result<_>>()?;
        let off_strand = homologies
            .iter()
            .flat_map(|h| h.dims.keys())
            .map(|&k| (k + 1) as usize)
            .filter(|&i| j != i as u32 + d)
            .min();
        if let Some(i) = off_strand {
            return Ok(Linearity {
                linear: false,
                degree: Some(d),
                witness: Some((i, j)),
            });
        }
    }
    Ok(Linearity {
        linear: true,
        degree: Some(d),
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PieceReport {
    pub degree: u32,
    pub generators: usize,
    /// `None` when skipped after an earlier failure.
    pub linearity: Option<Linearity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentwiseReport {
    pub componentwise_linear: bool,
    pub pieces: Vec<PieceReport>,
    /// Only degrees up to the top generator degree are examined; above it,
    /// linearity of the pieces follows from the top piece.
    pub assumes_linearity_above_top_degree: bool,
}

/// Checks `I_<j>` for every `j` from the lowest to the highest generator
/// degree. With `stop_early` the remaining pieces are skipped after the first
/// failure.
pub fn is_componentwise_linear(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    caps: &Caps,
    stop_early: bool,
) -> Result<ComponentwiseReport> {
    require_nonzero(ideal)?;
    let flags = ideal.flags();
    let (lo, hi) = (flags.min_degree.unwrap(), flags.max_degree.unwrap());
    let mut pieces = Vec::new();
    let mut all = true;
    for j in lo..=hi {
        let at = |e: Error| Error::AtDegree {
            degree: j,
            source: Box::new(e),
        };
        let piece = ideal.componentwise_piece(j, caps.generators).map_err(at)?;
        let linearity = if all || !stop_early {
            let l = has_linear_resolution(&piece, field, caps).map_err(at)?;
            all &= l.linear;
            Some(l)
        } else {
            None
        };
        pieces.push(PieceReport {
            degree: j,
            generators: piece.len(),
            linearity,
        });
    }
    Ok(ComponentwiseReport {
        componentwise_linear: all,
        pieces,
        assumes_linearity_above_top_degree: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::ideal;
    use crate::monomial::mono;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn two_coprime_generators() {
        let i = ideal(4, &["x1*x2", "x3*x4"]);
        let t = multigraded_betti(&i, FieldSpec::GF2, &caps()).unwrap();
        assert_eq!(t.get(1, &mono(4, "x1*x2*x3*x4")), 1);
        assert_eq!(t.coarse().into_iter().collect::<Vec<_>>(), [((0, 2), 2), ((1, 4), 1)]);
        assert_eq!(t.regularity(), Some(3));
    }

    #[test]
    fn principal_ideal() {
        let t = multigraded_betti(&ideal(1, &["x1"]), FieldSpec::Rational, &caps()).unwrap();
        assert_eq!(t.fine().count(), 1);
        assert_eq!(t.get(0, &mono(1, "x1")), 1);
        assert_eq!(regularity(&ideal(3, &["x1*x2*x3"]), FieldSpec::GF2, &caps()).unwrap(), 3);
    }

    #[test]
    fn triangle() {
        let tri = ideal(3, &["x1*x2", "x1*x3", "x2*x3"]);
        let t = multigraded_betti(&tri, FieldSpec::GF2, &caps()).unwrap();
        assert_eq!(t.coarse().into_iter().collect::<Vec<_>>(), [((0, 2), 3), ((1, 3), 2)]);
        let top = mono(3, "x1*x2*x3");
        assert_eq!(taylor_strand_betti(&tri, FieldSpec::GF2, &top, 1, &caps()).unwrap(), 2);
        assert_eq!(taylor_strand_betti(&tri, FieldSpec::GF2, &top, 2, &caps()).unwrap(), 0);
    }

    #[test]
    fn taylor_outside_lattice_is_zero() {
        let i = ideal(4, &["x1*x2", "x3*x4"]);
        for m in ["x1*x2*x3", "x1^2*x2", "x4"] {
            for k in 0..3 {
                assert_eq!(taylor_strand_betti(&i, FieldSpec::GF2, &mono(4, m), k, &caps()).unwrap(), 0);
            }
        }
    }

    #[test]
    fn linearity_examples() {
        let i = ideal(4, &["x1*x2", "x3*x4"]);
        let l = has_linear_resolution(&i, FieldSpec::GF2, &caps()).unwrap();
        assert!(!l.linear);
        assert_eq!(l.witness, Some((1, 4)));
        let tri = ideal(3, &["x1*x2", "x1*x3", "x2*x3"]);
        assert!(has_linear_resolution(&tri, FieldSpec::GF2, &caps()).unwrap().linear);
        let mixed = ideal(3, &["x1", "x2*x3"]);
        assert!(!has_linear_resolution(&mixed, FieldSpec::GF2, &caps()).unwrap().linear);
    }

    #[test]
    fn componentwise_examples() {
        let tri = ideal(3, &["x1*x2", "x1*x3", "x2*x3"]);
        assert!(is_componentwise_linear(&tri, FieldSpec::GF2, &caps(), false).unwrap().componentwise_linear);
        let r = is_componentwise_linear(&ideal(4, &["x1*x2", "x3*x4"]), FieldSpec::GF2, &caps(), false).unwrap();
        assert!(!r.componentwise_linear);
        assert_eq!(r.pieces.len(), 1);
        let r = is_componentwise_linear(&ideal(3, &["x1", "x2*x3"]), FieldSpec::GF2, &caps(), false).unwrap();
        assert_eq!(r.pieces.iter().map(|p| p.degree).collect::<Vec<_>>(), [1, 2]);
        // (x1) is linear; (x1^2, x1x2, x1x3, x2x3) has linear quotients.
        assert!(r.componentwise_linear);
    }

    #[test]
    fn diagram_layout() {
        let tri = ideal(3, &["x1*x2", "x1*x3", "x2*x3"]);
        let t = multigraded_betti(&tri, FieldSpec::GF2, &caps()).unwrap();
        assert_eq!(t.diagram(false), "       0 1\ntotal: 3 2\n    2: 3 2\n");
        assert_eq!(
            t.diagram(true),
            "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n"
        );
    }
}
