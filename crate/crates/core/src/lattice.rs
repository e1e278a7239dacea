//! Enumeration of lattice points in finite boxes.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;

/// Hard cap on enumerated points; beyond this the computation would not be
/// desk-scale anyway.
const MAX_BOX_POINTS: u64 = 1 << 26;

fn box_size(bounds_exclusive: &[BigUint]) -> Result<u64> {
    let mut size = BigUint::one();
    for b in bounds_exclusive {
        size *= b;
    }
    size.to_u64()
        .filter(|&s| s <= MAX_BOX_POINTS)
        .ok_or_else(|| Error::Scope(format!("enumeration box of {size} points is too large")))
}

/// All points `a` with `0 <= a_j < bounds_exclusive[j]`, in odometer order
/// (lexicographic with the last coordinate fastest). Empty if any bound is 0.
pub fn points_below(bounds_exclusive: &[BigUint]) -> Result<Vec<ExponentVector>> {
    let size = box_size(bounds_exclusive)?;
    let dim = bounds_exclusive.len();
    let mut out = Vec::with_capacity(size as usize);
    if size == 0 {
        return Ok(out);
    }
    let mut current = vec![BigUint::zero(); dim];
    loop {
        out.push(ExponentVector::new(current.clone()));
        // Increment the odometer.
        let mut j = dim;
        loop {
            if j == 0 {
                return Ok(out);
            }
            j -= 1;
            current[j] += 1u32;
            if current[j] < bounds_exclusive[j] {
                break;
            }
            current[j] = BigUint::zero();
        }
    }
}

/// All points `a` with `0 <= a_j <= bounds_inclusive[j]`.
pub fn points_in_box(bounds_inclusive: &[BigUint]) -> Result<Vec<ExponentVector>> {
    let exclusive: Vec<BigUint> = bounds_inclusive.iter().map(|b| b + 1u32).collect();
    points_below(&exclusive)
}

/// Points of the inclusive box grouped by total degree, ascending; points of
/// equal degree are pairwise incomparable under componentwise order.
pub fn points_by_degree(bounds_inclusive: &[BigUint]) -> Result<Vec<Vec<ExponentVector>>> {
    let mut points = points_in_box(bounds_inclusive)?;
    points.sort_by_key(|p| p.total_degree());
    let mut shells: Vec<Vec<ExponentVector>> = Vec::new();
    let mut current_degree: Option<BigUint> = None;
    for p in points {
        let deg = p.total_degree();
        if current_degree.as_ref() != Some(&deg) {
            current_degree = Some(deg);
            shells.push(Vec::new());
        }
        shells.last_mut().expect("shell exists").push(p);
    }
    Ok(shells)
}
