//! Named ideals used by tests, the self-test and documentation.

use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

fn squarefree(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        n,
        gens.iter()
            .map(|g| Monomial::squarefree(n, &g.iter().map(|v| v - 1).collect::<Vec<_>>())),
    )
    .expect("fixture generators are valid")
}

/// `(x1x2, x1x3, x2x3)`.
pub fn triangle() -> MonomialIdeal {
    squarefree(3, &[&[1, 2], &[1, 3], &[2, 3]])
}

/// `(x1x2, x3x4)`.
pub fn two_disjoint_edges() -> MonomialIdeal {
    squarefree(4, &[&[1, 2], &[3, 4]])
}

/// Sturmfels' cubic ideal in six variables: linear resolution, while its
/// square has none.
pub fn sturmfels() -> MonomialIdeal {
    squarefree(
        6,
        &[
            &[4, 5, 6],
            &[3, 5, 6],
            &[3, 4, 6],
            &[3, 4, 5],
            &[2, 5, 6],
            &[2, 3, 4],
            &[1, 3, 6],
            &[1, 4, 5],
        ],
    )
}

/// Stanley–Reisner ideal of the six-vertex triangulation of the real
/// projective plane: its generators are the ten triangles that are not
/// faces. Linear resolution exactly when the characteristic is not 2.
pub fn projective_plane() -> MonomialIdeal {
    squarefree(
        6,
        &[
            &[1, 2, 3],
            &[1, 2, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 4],
            &[2, 4, 6],
            &[2, 5, 6],
            &[3, 4, 5],
            &[3, 5, 6],
        ],
    )
}
