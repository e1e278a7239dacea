//! Normal Hilbert functions and exact fitting of the normal Hilbert
//! polynomial in the binomial basis.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::binom::binomial;
use crate::closure::ClosureCache;
use crate::error::{Error, Result};
use crate::exec;
use crate::ideal::MonomialIdeal;
use crate::lattice;

/// `l(R/J)` for an m-primary monomial ideal: the number of standard
/// monomials, counted over the box cut out by the pure-power generators.
pub fn colength(ideal: &MonomialIdeal) -> Result<u64> {
    let bounds = ideal.pure_power_bounds()?;
    let points = lattice::points_below(&bounds)?;
    Ok(exec::count_where(&points, |p| {
        !ideal.contains_monomial(p).expect("dimensions agree")
    }))
}

/// Values of the normal Hilbert function `H(n) = l(R/closure(base^n))` for
/// `n = 0..=n_max`, with `H(0) = 0`.
#[derive(Clone, Debug)]
pub struct HilbertTable {
    pub base: MonomialIdeal,
    pub values: Vec<u64>,
}

pub fn normal_table(cache: &mut ClosureCache, n_max: u32) -> Result<HilbertTable> {
    let mut values = vec![0u64];
    for n in 1..=n_max {
        let cl = cache.closure(n)?;
        values.push(colength(&cl)?);
    }
    Ok(HilbertTable {
        base: cache.base().clone(),
        values,
    })
}

/// The fitted polynomial `P(x) = e_0 C(x+d-1, d) - e_1 C(x+d-2, d-1) + ...
/// + (-1)^d e_d`, plus the largest tabulated `n` where it still misses the
/// table (`None` when the two agree at every computed point).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialPolynomial {
    pub dim: usize,
    pub coeffs: Vec<BigInt>,
    pub postulation: Option<i64>,
}

impl BinomialPolynomial {
    pub fn evaluate(&self, n: i64) -> BigInt {
        let d = self.dim as i64;
        let mut acc = BigInt::zero();
        for (i, e) in self.coeffs.iter().enumerate() {
            let i = i as i64;
            let term = e * binomial(&BigInt::from(n + d - 1 - i), d - i);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

/// Fits the normal Hilbert polynomial from the tail of the table.
///
/// The paper gives no a-priori bound on where the Hilbert function becomes
/// polynomial, so detection is by double-window agreement: the last `d + 1`
/// values determine the candidate exactly (linear algebra over rationals in
/// the binomial basis), and the preceding `d + 1` values must reproduce it.
/// Disagreement means the table is still pre-polynomial and the window must
/// grow.
pub fn fit(table: &HilbertTable) -> Result<BinomialPolynomial> {
    let d = table.base.dim();
    let needed = 2 * (d + 1);
    if table.values.len() < needed {
        return Err(Error::TableTooShort {
            dim: d,
            got: table.values.len(),
            needed,
        });
    }
    let n_max = table.values.len() - 1;
    let fit_start = n_max - d;

    // Row for n: sum_i (-1)^i e_i C(n+d-1-i, d-i) = H(n).
    let mut matrix = Vec::with_capacity(d + 1);
    let mut rhs = Vec::with_capacity(d + 1);
    for n in fit_start..=n_max {
        let row: Vec<BigRational> = (0..=d)
            .map(|i| {
                let c = binomial(
                    &BigInt::from((n + d - 1 - i) as i64),
                    (d - i) as i64,
                );
                let signed = if i % 2 == 0 { c } else { -c };
                BigRational::from_integer(signed)
            })
            .collect();
        matrix.push(row);
        rhs.push(BigRational::from_integer(BigInt::from(table.values[n])));
    }
    let solution = solve_exact(matrix, rhs)
        .ok_or_else(|| Error::Internal("binomial fit system is singular".into()))?;
    let coeffs: Vec<BigInt> = solution
        .iter()
        .map(|x| {
            if !x.is_integer() {
                // Interpolation of integer values at consecutive integers is
                // integral in this basis; a fraction here is a bug.
                panic!("non-integral normal Hilbert coefficient {x}");
            }
            x.to_integer()
        })
        .collect();

    let mut candidate = BinomialPolynomial {
        dim: d,
        coeffs,
        postulation: None,
    };

    // The preceding window must agree, else the tail is not yet polynomial.
    let check_start = fit_start - (d + 1);
    for n in check_start..fit_start {
        if candidate.evaluate(n as i64) != BigInt::from(table.values[n]) {
            return Err(Error::FitWindowDisagreement { first_mismatch: n });
        }
    }

    candidate.postulation = (0..=n_max)
        .filter(|&n| candidate.evaluate(n as i64) != BigInt::from(table.values[n]))
        .map(|n| n as i64)
        .max();
    Ok(candidate)
}

/// For a parameter ideal, the leading coefficient must equal the product of
/// the pure-power exponents (the ordinary multiplicity). `None` = not a
/// parameter ideal, check skipped.
pub fn multiplicity_check(ideal: &MonomialIdeal, fitted: &BinomialPolynomial) -> Option<bool> {
    if !ideal.is_parameter() {
        return None;
    }
    let mut product = BigInt::from(1);
    for g in ideal.gens() {
        product *= BigInt::from(g.total_degree());
    }
    Some(fitted.coeffs[0] == product)
}

fn solve_exact(
    mut a: Vec<Vec<BigRational>>,
    mut b: Vec<BigRational>,
) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] / &a[col][col];
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
                let delta = &factor * &b[col];
                b[r] -= delta;
            }
        }
    }
    Some((0..n).map(|r| &b[r] / &a[r][r]).collect())
}
