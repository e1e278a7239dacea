//! The Newton polyhedron of a monomial ideal.
//!
//! For a monomial ideal `I` with generator exponents `v_1, ..., v_g`, the
//! Newton polyhedron `P` is the convex hull of the `v_i` plus the positive
//! orthant. A monomial `x^a` lies in the integral closure of `I^n` exactly
//! when `a` lies in the dilate `nP`, i.e. when there are rational
//! `lambda_i >= 0` with `sum lambda_i = n` and `sum lambda_i v_i <= a`
//! componentwise. Membership is decided by exact rational feasibility; no
//! facet description is ever computed.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::lp;

/// Newton polyhedron of a non-zero monomial ideal.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    dim: usize,
    vertices: Vec<Vec<BigUint>>,
    min_degree: BigUint,
}

impl NewtonPolyhedron {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(NewtonPolyhedron {
            dim: ideal.dim(),
            vertices: ideal
                .gens()
                .iter()
                .map(|g| g.coords().to_vec())
                .collect(),
            min_degree: ideal.min_total_degree().expect("non-zero ideal"),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Decides `a` in `n * P` exactly.
    ///
    /// Two shortcuts avoid the simplex on most points of a sweep without
    /// changing the verdict: any feasible combination has total degree at
    /// least `n * min_degree`, and `a >= n * v_i` is itself a witness.
    pub fn membership_level(&self, a: &ExponentVector, n: u32) -> Result<bool> {
        Error::check_dims(self.dim, a.dim())?;
        if n == 0 {
            return Err(Error::NonPositivePower(n as i64));
        }
        let n_big = BigUint::from(n);
        if a.total_degree() < &self.min_degree * &n_big {
            return Ok(false);
        }
        for v in &self.vertices {
            if v.iter()
                .zip(a.coords())
                .all(|(vi, ai)| &(vi * &n_big) <= ai)
            {
                return Ok(true);
            }
        }
        Ok(lp::cone_membership_feasible(
            &self.vertices,
            a.coords(),
            n as u64,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&[u64]], dim: usize) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            gens.iter().map(|g| ExponentVector::from_u64s(g)).collect(),
            dim,
        )
        .unwrap()
    }

    #[test]
    fn closure_membership_level_one() {
        let np = NewtonPolyhedron::of(&ideal(&[&[2, 0], &[0, 2]], 2)).unwrap();
        assert!(np.membership_level(&ExponentVector::from_u64s(&[1, 1]), 1).unwrap());
        assert!(!np.membership_level(&ExponentVector::from_u64s(&[1, 0]), 1).unwrap());

        let np3 = NewtonPolyhedron::of(&ideal(&[&[3, 0], &[0, 3]], 2)).unwrap();
        assert!(np3.membership_level(&ExponentVector::from_u64s(&[2, 1]), 1).unwrap());
    }

    #[test]
    fn zero_ideal_and_level_zero_are_rejected() {
        assert!(matches!(
            NewtonPolyhedron::of(&MonomialIdeal::zero(2)),
            Err(Error::ZeroIdeal)
        ));
        let np = NewtonPolyhedron::of(&MonomialIdeal::maximal(2)).unwrap();
        assert!(matches!(
            np.membership_level(&ExponentVector::from_u64s(&[1, 1]), 0),
            Err(Error::NonPositivePower(0))
        ));
        assert!(matches!(
            np.membership_level(&ExponentVector::from_u64s(&[1]), 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn membership_is_monotone() {
        let np = NewtonPolyhedron::of(&ideal(&[&[2, 0], &[0, 2]], 2)).unwrap();
        for ax in 0..6u64 {
            for ay in 0..6u64 {
                for n in 1..4u32 {
                    let a = ExponentVector::from_u64s(&[ax, ay]);
                    if np.membership_level(&a, n).unwrap() {
                        let above = ExponentVector::from_u64s(&[ax + 1, ay]);
                        assert!(np.membership_level(&above, n).unwrap());
                    }
                }
            }
        }
    }
}
