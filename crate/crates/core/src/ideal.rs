//! Monomial ideals with divisibility-minimal generating sets.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;

/// A monomial ideal in `dim` variables, stored by its unique minimal
/// generating set, sorted lexicographically.
///
/// The zero ideal is the empty generator set; the unit ideal is generated by
/// the zero vector. Values are immutable after construction and every
/// operation is a pure function.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw_gens`, reducing to the minimal
    /// generating set. The generated ideal is unchanged by the reduction.
    pub fn minimalize(raw_gens: Vec<ExponentVector>, dim: usize) -> Result<Self> {
        for g in &raw_gens {
            Error::check_dims(dim, g.dim())?;
        }
        Ok(Self::minimalize_unchecked(raw_gens, dim))
    }

    fn minimalize_unchecked(mut raw_gens: Vec<ExponentVector>, dim: usize) -> Self {
        // Sorting by total degree first makes the divisibility scan one-way:
        // a generator can only be dominated by one of equal or lower degree.
        raw_gens.sort_by(|a, b| {
            (a.total_degree(), a).cmp(&(b.total_degree(), b))
        });
        raw_gens.dedup();
        let mut minimal: Vec<ExponentVector> = Vec::new();
        for g in raw_gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort();
        MonomialIdeal { dim, gens: minimal }
    }

    /// Constructs directly from a set already known to be a sorted antichain.
    pub(crate) fn from_minimal_sorted(gens: Vec<ExponentVector>, dim: usize) -> Self {
        debug_assert!(gens.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(!gens
            .iter()
            .enumerate()
            .any(|(i, g)| gens.iter().enumerate().any(|(j, h)| i != j && g.divides(h))));
        MonomialIdeal { dim, gens }
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: vec![] }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![ExponentVector::zero(dim)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_d)`.
    pub fn maximal(dim: usize) -> Self {
        let gens = (0..dim)
            .map(|j| {
                let mut coords = vec![BigUint::zero(); dim];
                coords[j] = BigUint::one();
                ExponentVector::new(coords)
            })
            .collect();
        MonomialIdeal { dim, gens }
    }

    /// The parameter ideal `(x_1^{a_1}, ..., x_d^{a_d})`.
    pub fn parameter(exponents: &[u64]) -> Self {
        let dim = exponents.len();
        let gens = exponents
            .iter()
            .enumerate()
            .map(|(j, &a)| {
                let mut coords = vec![BigUint::zero(); dim];
                coords[j] = BigUint::from(a);
                ExponentVector::new(coords)
            })
            .collect();
        Self::minimalize_unchecked(gens, dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// True iff the monomial `x^a` lies in the ideal, i.e. some generator
    /// divides it.
    pub fn contains_monomial(&self, a: &ExponentVector) -> Result<bool> {
        Error::check_dims(self.dim, a.dim())?;
        Ok(self.gens.iter().any(|g| g.divides(a)))
    }

    /// Ideal containment: every generator of `other` is a member of `self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        Error::check_dims(self.dim, other.dim)?;
        for g in &other.gens {
            if !self.contains_monomial(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Product ideal, generated by all pairwise sums of generators.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.dim, other.dim)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.add(b));
            }
        }
        Ok(Self::minimalize_unchecked(raw, self.dim))
    }

    /// `self^n`, with `self^0` the unit ideal.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(self.dim);
        for _ in 0..n {
            acc = acc.multiply(self).expect("same dimension");
        }
        acc
    }

    /// Intersection, generated by the pairwise lcm exponents. Membership in
    /// the result is exactly simultaneous membership in both operands.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.dim, other.dim)?;
        let mut raw = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                raw.push(a.lcm(b));
            }
        }
        Ok(Self::minimalize_unchecked(raw, self.dim))
    }

    /// Equality of ideals; with minimal sorted generators this is set
    /// equality of the generator lists.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        Error::check_dims(self.dim, other.dim)?;
        Ok(self.gens == other.gens)
    }

    /// True iff every variable has a pure power among the generators, so the
    /// radical is the maximal ideal and all colengths are finite.
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|j| self.gens.iter().any(|g| g.is_pure_power(j)))
    }

    /// True iff the ideal is `(x_1^{a_1}, ..., x_d^{a_d})` with all `a_i >= 1`.
    pub fn is_parameter(&self) -> bool {
        self.gens.len() == self.dim
            && self.is_m_primary()
            && self.gens.iter().all(|g| !g.is_zero())
            && (0..self.dim).all(|j| self.gens.iter().any(|g| g.is_pure_power(j) && !g.is_zero()))
    }

    /// For an m-primary ideal, the minimal pure-power exponent of each
    /// variable. Every standard monomial of the quotient has `a_j` strictly
    /// below the `j`-th bound.
    pub fn pure_power_bounds(&self) -> Result<Vec<BigUint>> {
        (0..self.dim)
            .map(|j| {
                self.gens
                    .iter()
                    .filter(|g| g.is_pure_power(j))
                    .map(|g| g.coords()[j].clone())
                    .min()
                    .ok_or(Error::NotMPrimary { missing: j + 1 })
            })
            .collect()
    }

    /// Componentwise maximum of the generator exponents along each axis.
    pub fn max_coord_per_axis(&self) -> Vec<BigUint> {
        (0..self.dim)
            .map(|j| {
                self.gens
                    .iter()
                    .map(|g| g.coords()[j].clone())
                    .max()
                    .unwrap_or_else(BigUint::zero)
            })
            .collect()
    }

    /// Minimal total degree over the generators (None for the zero ideal).
    pub fn min_total_degree(&self) -> Option<BigUint> {
        self.gens.iter().map(|g| g.total_degree()).min()
    }

    /// Renders e.g. `(x^2, y^2)`; generators are listed with the
    /// x-dominant ones first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .rev()
            .map(|g| g.monomial_string())
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal[d={}] {:?}", self.dim, self.gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

// Input generators need not be minimal; they are minimalized on load.
impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            dim: usize,
            gens: Vec<ExponentVector>,
        }
        let raw = Raw::deserialize(deserializer)?;
        MonomialIdeal::minimalize(raw.gens, raw.dim).map_err(serde::de::Error::custom)
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
    fn minimalize_drops_dominated_generators() {
        let i = ideal(&[&[2, 0], &[0, 2], &[2, 1]], 2);
        assert_eq!(i.gens().len(), 2);
        assert_eq!(i, ideal(&[&[2, 0], &[0, 2]], 2));

        assert!(ideal(&[&[0, 0]], 2).is_unit());

        let j = ideal(&[&[1, 2], &[2, 1], &[3, 3]], 2);
        assert_eq!(j, ideal(&[&[1, 2], &[2, 1]], 2));
    }

    #[test]
    fn minimalize_rejects_dimension_mismatch() {
        let gens = vec![
            ExponentVector::from_u64s(&[1, 2]),
            ExponentVector::from_u64s(&[1, 2, 3]),
        ];
        assert!(matches!(
            MonomialIdeal::minimalize(gens, 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn membership() {
        let i = ideal(&[&[2, 0], &[0, 2]], 2);
        assert!(!i.contains_monomial(&ExponentVector::from_u64s(&[1, 1])).unwrap());
        assert!(i.contains_monomial(&ExponentVector::from_u64s(&[2, 5])).unwrap());
        assert!(MonomialIdeal::unit(2)
            .contains_monomial(&ExponentVector::from_u64s(&[0, 0]))
            .unwrap());
        assert!(matches!(
            i.contains_monomial(&ExponentVector::from_u64s(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn products() {
        let x = ideal(&[&[1, 0]], 2);
        let y = ideal(&[&[0, 1]], 2);
        assert_eq!(x.multiply(&y).unwrap(), ideal(&[&[1, 1]], 2));

        let i = ideal(&[&[2, 0], &[0, 2]], 2);
        assert_eq!(i.multiply(&MonomialIdeal::unit(2)).unwrap(), i);

        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.power(2), ideal(&[&[2, 0], &[1, 1], &[0, 2]], 2));
        assert!(m.power(0).is_unit());
    }

    #[test]
    fn intersections() {
        let i = ideal(&[&[2, 0], &[0, 2]], 2);
        let xy = ideal(&[&[1, 1]], 2);
        assert_eq!(i.intersect(&xy).unwrap(), ideal(&[&[2, 1], &[1, 2]], 2));
        assert_eq!(i.intersect(&MonomialIdeal::unit(2)).unwrap(), i);

        let x = ideal(&[&[1, 0]], 2);
        let y = ideal(&[&[0, 1]], 2);
        assert_eq!(x.intersect(&y).unwrap(), ideal(&[&[1, 1]], 2));
    }

    #[test]
    fn equality_is_canonical() {
        let i = ideal(&[&[2, 0], &[0, 2]], 2);
        let j = ideal(&[&[2, 0], &[0, 2], &[3, 3]], 2);
        assert!(i.equals(&j).unwrap());
        assert!(!ideal(&[&[1, 0], &[0, 1]], 2)
            .equals(&ideal(&[&[2, 0], &[0, 1]], 2))
            .unwrap());
        assert!(MonomialIdeal::unit(2).equals(&MonomialIdeal::unit(2)).unwrap());
    }

    #[test]
    fn m_primary_predicate() {
        assert!(ideal(&[&[2, 0], &[0, 2]], 2).is_m_primary());
        assert!(!ideal(&[&[1, 1]], 2).is_m_primary());
        assert!(MonomialIdeal::maximal(3).is_m_primary());
        assert!(MonomialIdeal::parameter(&[2, 3]).is_parameter());
        assert!(!ideal(&[&[2, 0], &[1, 1], &[0, 2]], 2).is_parameter());
    }

    #[test]
    fn pure_power_bounds_need_m_primary() {
        let i = ideal(&[&[2, 0], &[0, 3]], 2);
        let bounds = i.pure_power_bounds().unwrap();
        assert_eq!(bounds, vec![BigUint::from(2u32), BigUint::from(3u32)]);
        assert!(matches!(
            ideal(&[&[1, 1]], 2).pure_power_bounds(),
            Err(Error::NotMPrimary { missing: 1 })
        ));
    }

    #[test]
    fn json_load_minimalizes() {
        let text = r#"{"dim": 2, "gens": [[2,0],[0,2],[2,1]]}"#;
        let i: MonomialIdeal = serde_json::from_str(text).unwrap();
        assert_eq!(i, ideal(&[&[2, 0], &[0, 2]], 2));
        let back = serde_json::to_string(&i).unwrap();
        let again: MonomialIdeal = serde_json::from_str(&back).unwrap();
        assert_eq!(again, i);
    }

    #[test]
    fn renders_readably() {
        assert_eq!(ideal(&[&[2, 0], &[0, 2]], 2).render(), "(x^2, y^2)");
        assert_eq!(MonomialIdeal::unit(2).render(), "(1)");
        assert_eq!(MonomialIdeal::zero(2).render(), "(0)");
    }
}
