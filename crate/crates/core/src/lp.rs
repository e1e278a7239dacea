//! Exact rational feasibility of the Newton-polyhedron membership system.
//!
//! Decides whether `{ lambda >= 0, sum lambda_i = n, sum lambda_i v_i <= a }`
//! has a solution, by a phase-1 simplex over `BigRational` with Bland's rule.
//! No floating point and no tolerances anywhere: the verdict is exact.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Feasibility of `lambda >= 0`, `sum lambda_i = level`, `sum lambda_i v_i <= target`
/// componentwise, where `vertices` supplies the `v_i`.
pub(crate) fn cone_membership_feasible(
    vertices: &[Vec<BigUint>],
    target: &[BigUint],
    level: u64,
) -> bool {
    let g = vertices.len();
    let d = target.len();
    debug_assert!(g > 0 && level > 0);

    let rat = |u: &BigUint| BigRational::from_integer(BigInt::from(u.clone()));

    // Columns: g lambdas, d slacks, one artificial, rhs.
    let cols = g + d + 2;
    let art = g + d;
    let rhs = g + d + 1;
    let rows = d + 1;

    let mut t = vec![vec![BigRational::zero(); cols]; rows];
    for i in 0..g {
        t[0][i] = BigRational::one();
    }
    t[0][art] = BigRational::one();
    t[0][rhs] = BigRational::from_integer(BigInt::from(level));
    for j in 0..d {
        for i in 0..g {
            t[j + 1][i] = rat(&vertices[i][j]);
        }
        t[j + 1][g + j] = BigRational::one();
        t[j + 1][rhs] = rat(&target[j]);
    }

    // Slacks start basic in the coordinate rows, the artificial in the
    // equality row; phase 1 minimizes the artificial.
    let mut basis: Vec<usize> = Vec::with_capacity(rows);
    basis.push(art);
    basis.extend((0..d).map(|j| g + j));

    let mut obj: Vec<BigRational> = (0..cols).map(|q| -t[0][q].clone()).collect();
    obj[art] = BigRational::zero();

    loop {
        // Bland: entering column is the lowest-index negative reduced cost.
        let entering = match (0..g + d + 1).find(|&q| obj[q].is_negative()) {
            Some(q) => q,
            None => break,
        };

        // Ratio test; ties leave the smallest basic variable (Bland again).
        let mut pivot_row: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for r in 0..rows {
            if t[r][entering].is_positive() {
                let ratio = &t[r][rhs] / &t[r][entering];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[r] < basis[pivot_row.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    pivot_row = Some(r);
                }
            }
        }
        let p = pivot_row.expect("phase-1 objective is bounded below by zero");

        let pivot = t[p][entering].clone();
        for q in 0..cols {
            t[p][q] /= &pivot;
        }
        for r in 0..rows {
            if r != p && !t[r][entering].is_zero() {
                let factor = t[r][entering].clone();
                for q in 0..cols {
                    let delta = &factor * &t[p][q];
                    t[r][q] -= delta;
                }
            }
        }
        if !obj[entering].is_zero() {
            let factor = obj[entering].clone();
            for q in 0..cols {
                let delta = &factor * &t[p][q];
                obj[q] -= delta;
            }
        }
        basis[p] = entering;
    }

    // Residual objective value = value of the artificial variable.
    let mut value = BigRational::zero();
    for r in 0..rows {
        if basis[r] == art {
            value = t[r][rhs].clone();
        }
    }
    value.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(rows: &[&[u64]]) -> Vec<Vec<BigUint>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigUint::from(x)).collect())
            .collect()
    }

    fn pt(coords: &[u64]) -> Vec<BigUint> {
        coords.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn midpoint_of_two_vertices_is_feasible() {
        // lambda = (1/2, 1/2) puts (1,1) in the polyhedron of (x^2, y^2).
        assert!(cone_membership_feasible(&v(&[&[2, 0], &[0, 2]]), &pt(&[1, 1]), 1));
    }

    #[test]
    fn low_degree_point_is_infeasible() {
        assert!(!cone_membership_feasible(&v(&[&[2, 0], &[0, 2]]), &pt(&[1, 0]), 1));
        assert!(!cone_membership_feasible(&v(&[&[2, 0], &[0, 2]]), &pt(&[0, 0]), 1));
    }

    #[test]
    fn fractional_combination_is_found() {
        // (2,1) = (2/3)*(3,0) + (1/3)*(0,3).
        assert!(cone_membership_feasible(&v(&[&[3, 0], &[0, 3]]), &pt(&[2, 1]), 1));
        assert!(!cone_membership_feasible(&v(&[&[3, 0], &[0, 3]]), &pt(&[2, 0]), 1));
    }

    #[test]
    fn level_scales_the_simplex() {
        let verts = v(&[&[2, 0], &[0, 2]]);
        assert!(cone_membership_feasible(&verts, &pt(&[3, 1]), 2));
        assert!(!cone_membership_feasible(&verts, &pt(&[3, 0]), 2));
        assert!(cone_membership_feasible(&verts, &pt(&[4, 0]), 2));
    }

    #[test]
    fn slack_coordinates_are_free() {
        // Single vertex (1,0) at level 5: needs a_1 >= 5, a_2 unconstrained.
        assert!(cone_membership_feasible(&v(&[&[1, 0]]), &pt(&[5, 17]), 5));
        assert!(!cone_membership_feasible(&v(&[&[1, 0]]), &pt(&[4, 17]), 5));
    }
}
