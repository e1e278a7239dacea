//! Intersection conditions, normal reduction numbers, and the graded
//! quotient lengths of the normal filtration.

use crate::closure::ClosureCache;
use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::hilbert::colength;
use crate::ideal::MonomialIdeal;
use crate::lattice;

/// Outcome of testing `I^n ∩ closure(n + r) == I^n * closure(r)` over a
/// window of `n`. A witness is a monomial in the intersection that escapes
/// the product, at the first failing `n`.
#[derive(Clone, Debug)]
pub struct HiReport {
    pub r: u32,
    pub n_max: u32,
    pub passed: bool,
    pub witness: Option<HiWitness>,
}

#[derive(Clone, Debug)]
pub struct HiWitness {
    pub n: u32,
    pub monomial: ExponentVector,
}

/// Tests the intersection condition at index `r`: for each `0 <= n <= n_max`,
/// `I^n` meet `closure(n + r)` must equal `I^n * closure(r)`.
pub fn hi_check(cache: &mut ClosureCache, r: u32, n_max: u32) -> Result<HiReport> {
    if r == 0 {
        return Err(Error::NonPositivePower(0));
    }
    let base = cache.base().clone();
    let closure_r = cache.closure(r)?;
    let mut power = MonomialIdeal::unit(base.dim());
    for n in 0..=n_max {
        let closure_nr = cache.closure(n + r)?;
        let lhs = power.intersect(&closure_nr)?;
        let rhs = power.multiply(&closure_r)?;
        if !lhs.contains_ideal(&rhs)? {
            return Err(Error::Internal(format!(
                "product escapes the intersection at n = {n}, r = {r}"
            )));
        }
        if !lhs.equals(&rhs)? {
            // rhs is contained in lhs and both are monomial ideals, so the
            // lexicographically smallest monomial of the difference is the
            // first generator of lhs that is not a member of rhs.
            let monomial = lhs
                .gens()
                .iter()
                .find(|g| !rhs.contains_monomial(g).expect("dimensions agree"))
                .cloned()
                .ok_or_else(|| Error::Internal("unequal ideals with no witness".into()))?;
            return Ok(HiReport {
                r,
                n_max,
                passed: false,
                witness: Some(HiWitness { n, monomial }),
            });
        }
        power = power.multiply(&base)?;
    }
    Ok(HiReport {
        r,
        n_max,
        passed: true,
        witness: None,
    })
}

/// Window-limited certification of the normal reduction number with respect
/// to a reduction ideal `J`.
#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub reduction_ideal: MonomialIdeal,
    /// Smallest `r` with `J * closure(n) == closure(n+1)` for all
    /// `r <= n <= n_max`; `None` when the window is exhausted (the last
    /// tested level still fails, so nothing can be certified).
    pub r_bar: Option<u32>,
    pub n_max: u32,
    pub failures: Vec<u32>,
}

/// Computes the failures of `J * closure(n) == closure(n+1)` for
/// `0 <= n < n_max` (with `closure(0)` the unit ideal) and certifies the
/// reduction number on the window. `J` defaults to the base ideal.
pub fn reduction_number(
    cache: &mut ClosureCache,
    reduction_ideal: Option<&MonomialIdeal>,
    n_max: u32,
) -> Result<ReductionReport> {
    let base = cache.base().clone();
    let j = reduction_ideal.cloned().unwrap_or_else(|| base.clone());
    if !base.contains_ideal(&j)? {
        return Err(Error::ReductionNotContained);
    }

    let mut failures = Vec::new();
    for n in 0..n_max {
        let lhs = j.multiply(&cache.closure(n)?)?;
        let rhs = cache.closure(n + 1)?;
        if !rhs.contains_ideal(&lhs)? {
            return Err(Error::Internal(format!(
                "J * closure({n}) escapes closure({})",
                n + 1
            )));
        }
        if !lhs.equals(&rhs)? {
            failures.push(n);
        }
    }
    let r_bar = match failures.last() {
        Some(&last) if last == n_max - 1 => None,
        Some(&last) => Some(last + 1),
        None => Some(0),
    };
    Ok(ReductionReport {
        reduction_ideal: j,
        r_bar,
        n_max,
        failures,
    })
}

/// The lengths `l(closure(i+1) / I * closure(i))` for `i = 0..=i_max`: the
/// number of monomials in the closure that miss the product. These are the
/// building blocks of every coefficient formula downstream.
pub fn graded_quotient_lengths(cache: &mut ClosureCache, i_max: u32) -> Result<Vec<u64>> {
    let base = cache.base().clone();
    // Finiteness needs m-primariness; surface the failure before sweeping.
    base.pure_power_bounds()?;

    let mut lengths = Vec::with_capacity(i_max as usize + 1);
    for i in 0..=i_max {
        let product = base.multiply(&cache.closure(i)?)?;
        let cl = cache.closure(i + 1)?;
        if !cl.contains_ideal(&product)? {
            return Err(Error::Internal(format!(
                "I * closure({i}) escapes closure({})",
                i + 1
            )));
        }
        // Every monomial of closure(i+1) \ product is a standard monomial of
        // the product, so the product's box covers the difference.
        let bounds = product.pure_power_bounds()?;
        let points = lattice::points_below(&bounds)?;
        let count = crate::exec::count_where(&points, |p| {
            cl.contains_monomial(p).expect("dimensions agree")
                && !product.contains_monomial(p).expect("dimensions agree")
        });
        lengths.push(count);
    }
    Ok(lengths)
}

/// Cross-check used by the tests: for nested m-primary ideals the difference
/// count must match the colength difference.
pub fn quotient_length_by_colength(
    inner: &MonomialIdeal,
    outer: &MonomialIdeal,
) -> Result<u64> {
    if !outer.contains_ideal(inner)? {
        return Err(Error::Internal("quotient of non-nested ideals".into()));
    }
    Ok(colength(inner)? - colength(outer)?)
}
