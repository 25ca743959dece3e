//! Reduced simplicial homology over a field.
//!
//! Dimensions come from ranks of the augmented chain complex:
//! `dim H̃_k = f_k - rank ∂_k - rank ∂_{k+1}`, where `f_{-1} = 1` for every
//! non-void complex and `∂_0` is the augmentation. Ranks are computed from the
//! top dimension down so that pivot rows of `∂_{k+1}` can be cleared from
//! `∂_k`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::linalg::{sparse_rank, SparseColumn};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ReducedHomology {
    /// Non-zero `dim H̃_i`, keyed by `i >= -1`.
    pub dims: BTreeMap<i32, u64>,
    /// `f_k` for `k = 0, 1, ...`.
    pub face_counts: Vec<usize>,
}

impl ReducedHomology {
    pub fn dim(&self, i: i32) -> u64 {
        self.dims.get(&i).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.is_empty()
    }
}

pub fn reduced_homology(
    complex: &SimplicialComplex,
    field: FieldSpec,
    face_cap: usize,
) -> Result<ReducedHomology> {
    match field {
        FieldSpec::Prime(p) => reduced_homology_in(complex, &PrimeField::new(p), face_cap),
        FieldSpec::Rational => reduced_homology_in(complex, &Rationals, face_cap),
    }
}

pub fn reduced_homology_in<F: Field>(
    complex: &SimplicialComplex,
    field: &F,
    face_cap: usize,
) -> Result<ReducedHomology> {
    if complex.is_void() {
        return Ok(ReducedHomology::default());
    }
    let faces = complex.faces_by_dimension(face_cap)?;
    let face_counts: Vec<usize> = faces.iter().map(Vec::len).collect();
    let top = faces.len();

    check_boundary_squares_to_zero(&faces);

    // ranks[k] = rank ∂_k for k in 1..=top-1; ∂_0 is the augmentation.
    let mut ranks = vec![0usize; top + 1];
    let mut cleared: Vec<u32> = Vec::new();
    for k in (1..top).rev() {
        let mut skip = vec![false; faces[k].len()];
        for &row in &cleared {
            skip[row as usize] = true;
        }
        let columns = boundary_columns(field, &faces[k], &faces[k - 1], &skip);
        let r = sparse_rank(field, faces[k - 1].len(), columns);
        ranks[k] = r.rank;
        cleared = r.pivot_rows;
    }
    if top > 0 {
        ranks[0] = usize::from(!faces[0].is_empty());
    }

    let mut dims = BTreeMap::new();
    // Alternating sums start in degree -1, where f_{-1} = 1.
    let h_minus_one = 1 - ranks[0] as i64;
    assert!(h_minus_one >= 0);
    if h_minus_one > 0 {
        dims.insert(-1, h_minus_one as u64);
    }
    let mut euler_faces: i64 = -1;
    let mut euler_homology: i64 = -h_minus_one;
    for k in 0..top {
        let f = face_counts[k] as i64;
        let h = f - ranks[k] as i64 - ranks[k + 1] as i64;
        assert!(h >= 0, "negative homology rank in dimension {k}");
        let sign = if k % 2 == 0 { 1 } else { -1 };
        euler_faces += sign * f;
        euler_homology += sign * h;
        if h > 0 {
            dims.insert(k as i32, h as u64);
        }
    }
    assert_eq!(euler_faces, euler_homology, "Euler characteristic mismatch");
    Ok(ReducedHomology { dims, face_counts })
}

fn boundary_columns<F: Field>(
    field: &F,
    faces: &[Vec<u32>],
    lower: &[Vec<u32>],
    skip: &[bool],
) -> Vec<SparseColumn<F::Elem>> {
    let plus = field.one();
    let minus = field.from_i64(-1);
    let mut buf = Vec::new();
    faces
        .iter()
        .zip(skip)
        .filter(|(_, &s)| !s)
        .map(|(face, _)| {
            let mut col: Vec<(u32, F::Elem)> = (0..face.len())
                .map(|i| {
                    buf.clear();
                    buf.extend(face.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v));
                    let row = lower
                        .binary_search(&buf)
                        .expect("face family is closed under subsets");
                    let v = if i % 2 == 0 { plus.clone() } else { minus.clone() };
                    (row as u32, v)
                })
                .filter(|(_, v)| !field.is_zero(v))
                .collect();
            col.sort_by_key(|e| e.0);
            col
        })
        .collect()
}

/// Verifies `∂_k ∘ ∂_{k+1} = 0` over the integers for every `k >= 1`.
fn check_boundary_squares_to_zero(faces: &[Vec<Vec<u32>>]) {
    let mut acc: Vec<(usize, i64)> = Vec::new();
    let mut tau = Vec::new();
    let mut rho = Vec::new();
    for k in 1..faces.len().saturating_sub(1) {
        for sigma in &faces[k + 1] {
            acc.clear();
            for i in 0..sigma.len() {
                tau.clear();
                tau.extend(sigma.iter().enumerate().filter(|&(a, _)| a != i).map(|(_, &v)| v));
                assert!(faces[k].binary_search(&tau).is_ok(), "missing boundary face");
                for j in 0..tau.len() {
                    rho.clear();
                    rho.extend(tau.iter().enumerate().filter(|&(a, _)| a != j).map(|(_, &v)| v));
                    let row = faces[k - 1]
                        .binary_search(&rho)
                        .expect("missing boundary face");
                    let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                    acc.push((row, sign));
                }
            }
            acc.sort_unstable_by_key(|e| e.0);
            let mut idx = 0;
            while idx < acc.len() {
                let row = acc[idx].0;
                let mut total = 0;
                while idx < acc.len() && acc[idx].0 == row {
                    total += acc[idx].1;
                    idx += 1;
                }
                assert_eq!(total, 0, "boundary of a boundary is non-zero");
            }
        }
    }
}
