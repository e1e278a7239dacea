//! Face vectors of simplicial complexes and rational Hilbert series of the
//! associated graded rings, for instances where the normal filtration of a
//! parameter ideal coincides with the powers of the maximal ideal.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize};

use crate::binom::binom;
use crate::error::{Error, Result};

/// A simplicial complex given by its facets, on vertices `1..=vertex_count`.
/// Facets are stored sorted and pairwise non-contained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn new(vertices: usize, facets: Vec<Vec<usize>>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let mut cleaned: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for facet in facets {
            let set: BTreeSet<usize> = facet.into_iter().collect();
            for &v in &set {
                if v == 0 || v > vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        vertex_count: vertices,
                    });
                }
            }
            if set.len() > 20 {
                return Err(Error::Scope("facets of more than 20 vertices are not supported".into()));
            }
            cleaned.push(set.into_iter().collect());
        }
        // Keep only maximal faces; the generated complex is unchanged.
        let mut maximal: Vec<Vec<usize>> = Vec::new();
        for f in &cleaned {
            let dominated = cleaned
                .iter()
                .any(|g| g.len() > f.len() && f.iter().all(|v| g.contains(v)));
            if !dominated && !maximal.contains(f) {
                maximal.push(f.clone());
            }
        }
        Ok(SimplicialComplex {
            vertices,
            facets: maximal,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Dimension of the complex: largest facet size minus one.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64).max().unwrap_or(0) - 1
    }

    /// Returns the common facet size, or the first two facets of different
    /// sizes as the error.
    pub fn check_pure(&self) -> Result<usize> {
        let size = self.facets[0].len();
        for f in &self.facets {
            if f.len() != size {
                return Err(Error::NotPure {
                    first: self.facets[0].clone(),
                    second: f.clone(),
                });
            }
        }
        Ok(size)
    }

    /// Face counts `(f_{-1}, f_0, ..., f_dim)`, enumerated from facet
    /// subsets with deduplication; `f_{-1} = 1` for the empty face.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        for facet in &self.facets {
            let k = facet.len();
            for mask in 0u32..(1 << k) {
                let face: Vec<usize> = (0..k)
                    .filter(|&b| mask & (1 << b) != 0)
                    .map(|b| facet[b])
                    .collect();
                faces.insert(face);
            }
        }
        let top = (self.dimension() + 1) as usize;
        let mut f = vec![0u64; top + 1];
        for face in faces {
            f[face.len()] += 1;
        }
        f
    }
}

impl<'de> Deserialize<'de> for SimplicialComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: usize,
            facets: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        SimplicialComplex::new(raw.vertices, raw.facets).map_err(serde::de::Error::custom)
    }
}

/// The f-to-h transform `h_j = sum_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}`
/// with `d = len(f) - 1`; input is `(f_{-1}, f_0, ...)`, output `(h_0..h_d)`.
pub fn h_vector(f: &[u64]) -> Vec<BigInt> {
    let d = f.len() as i64 - 1;
    (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| {
                    let term = binom(d - i, j - i) * BigInt::from(f[i as usize]);
                    if (j - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// Inverse transform, `f_{j-1} = sum_i C(d-i, j-i) h_i`; used to round-trip.
pub fn f_from_h(h: &[BigInt]) -> Vec<BigInt> {
    let d = h.len() as i64 - 1;
    (0..=d)
        .map(|j| (0..=j).map(|i| binom(d - i, j - i) * &h[i as usize]).sum())
        .collect()
}

/// A rational Hilbert series `numerator(t) / (1-t)^dim`. Trailing zeros of
/// the numerator are kept for display and dropped for degree computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub dim: usize,
    pub numerator: Vec<BigInt>,
}

impl HilbertSeries {
    pub fn from_h(numerator: Vec<BigInt>, dim: usize) -> Self {
        HilbertSeries { dim, numerator }
    }

    /// Series of the diagonal hypersurface instance: numerator
    /// `1 + t + ... + t^{n-1}` over `(1-t)^d`. The source construction
    /// needs `n <= d`; larger `n` is the caller's scope warning.
    pub fn diagonal_hypersurface(d: usize, n: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::NonPositivePower(n as i64));
        }
        Ok(HilbertSeries {
            dim: d,
            numerator: vec![BigInt::from(1); n as usize],
        })
    }

    fn degree(&self) -> Result<i64> {
        self.numerator
            .iter()
            .rposition(|h| !h.is_zero())
            .map(|p| p as i64)
            .ok_or(Error::ZeroSeries)
    }

    /// Hilbert coefficients read off the numerator: `e_i = sum_j C(j,i) h_j`.
    pub fn coefficients(&self) -> Vec<BigInt> {
        (0..=self.dim as i64)
            .map(|i| {
                self.numerator
                    .iter()
                    .enumerate()
                    .map(|(j, h)| binom(j as i64, i) * h)
                    .sum()
            })
            .collect()
    }

    /// Postulation number `deg(numerator) - dim`, and the reduction number
    /// `deg(numerator)` when the associated graded ring is asserted
    /// Cohen-Macaulay (the flag is the caller's assertion, not computed).
    pub fn postulation_and_reduction(&self, cm: bool) -> Result<(i64, Option<i64>)> {
        let degree = self.degree()?;
        let postulation = degree - self.dim as i64;
        let reduction = if cm { Some(degree) } else { None };
        Ok((postulation, reduction))
    }

    /// Values `l(R/m^n)` for `n = 0..=n_max`, by expanding the series.
    pub fn hilbert_function(&self, n_max: usize) -> Vec<BigInt> {
        let graded_piece = |t: i64| -> BigInt {
            self.numerator
                .iter()
                .enumerate()
                .filter(|(j, _)| *j as i64 <= t)
                .map(|(j, h)| h * binom(t - j as i64 + self.dim as i64 - 1, self.dim as i64 - 1))
                .sum()
        };
        let mut acc = BigInt::zero();
        let mut out = Vec::with_capacity(n_max + 1);
        out.push(BigInt::zero());
        for t in 0..n_max as i64 {
            acc += graded_piece(t);
            out.push(acc.clone());
        }
        out
    }

    /// Renders e.g. `(1 + 4t + 5t^2 + 2t^3) / (1 - t)^4`, keeping trailing
    /// zero terms out of the numerator display.
    pub fn render(&self) -> String {
        let mut terms = Vec::new();
        for (j, h) in self.numerator.iter().enumerate() {
            if h.is_zero() {
                continue;
            }
            let coeff = if *h == BigInt::from(1) && j > 0 {
                String::new()
            } else {
                h.to_string()
            };
            let power = match j {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{j}"),
            };
            terms.push(format!("{coeff}{power}"));
        }
        if terms.is_empty() {
            terms.push("0".to_string());
        }
        format!("({}) / (1 - t)^{}", terms.join(" + "), self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn full_simplex_f_and_h() {
        let simplex = SimplicialComplex::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(simplex.f_vector(), vec![1, 3, 3, 1]);
        assert_eq!(h_vector(&simplex.f_vector()), big(&[1, 0, 0, 0]));
    }

    #[test]
    fn triangle_boundary_is_gorenstein_symmetric() {
        let boundary =
            SimplicialComplex::new(3, vec![vec![1, 2], vec![2, 3], vec![1, 3]]).unwrap();
        assert_eq!(boundary.f_vector(), vec![1, 3, 3]);
        assert_eq!(h_vector(&boundary.f_vector()), big(&[1, 1, 1]));
    }

    #[test]
    fn disjoint_edges_f_vector() {
        let two_edges = SimplicialComplex::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(two_edges.f_vector(), vec![1, 4, 2]);
    }

    #[test]
    fn purity_failure_names_facets() {
        let complex = SimplicialComplex::new(4, vec![vec![1, 2, 3], vec![3, 4]]).unwrap();
        match complex.check_pure() {
            Err(Error::NotPure { first, second }) => {
                assert_eq!(first, vec![1, 2, 3]);
                assert_eq!(second, vec![3, 4]);
            }
            other => panic!("expected purity failure, got {other:?}"),
        }
    }

    #[test]
    fn non_maximal_facets_are_dropped() {
        let complex =
            SimplicialComplex::new(3, vec![vec![1, 2], vec![1, 2, 3], vec![2]]).unwrap();
        assert_eq!(complex.facets(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn f_h_round_trip() {
        let f = vec![1u64, 8, 23, 28, 12];
        let h = h_vector(&f);
        let f_back = f_from_h(&h);
        assert_eq!(f_back, big(&[1, 8, 23, 28, 12]));
    }

    #[test]
    fn hypersurface_series() {
        let s = HilbertSeries::diagonal_hypersurface(4, 3).unwrap();
        assert_eq!(s.numerator, big(&[1, 1, 1]));
        let coeffs = s.coefficients();
        assert_eq!(coeffs[3], BigInt::zero());
        assert_eq!(coeffs[4], BigInt::zero());
        assert_eq!(s.postulation_and_reduction(true).unwrap(), (-2, Some(2)));

        let poly_ring = HilbertSeries::diagonal_hypersurface(3, 1).unwrap();
        assert_eq!(poly_ring.coefficients(), big(&[1, 0, 0, 0]));
        assert_eq!(poly_ring.postulation_and_reduction(true).unwrap(), (-3, Some(0)));
    }

    #[test]
    fn series_coefficients_from_h() {
        let s = HilbertSeries::from_h(big(&[1, 4, 5, 2, 0]), 4);
        let e = s.coefficients();
        assert_eq!(e[0], BigInt::from(12));
        assert_eq!(e[4], BigInt::zero());
        assert_eq!(s.postulation_and_reduction(true).unwrap(), (-1, Some(3)));
    }

    #[test]
    fn expansion_matches_binomial_count() {
        // h = (1): the polynomial ring, l(R/m^n) = C(n+d-1, d).
        let s = HilbertSeries::from_h(big(&[1]), 3);
        let values = s.hilbert_function(5);
        for n in 0..=5i64 {
            assert_eq!(values[n as usize], binom(n + 2, 3));
        }
    }

    #[test]
    fn render_series() {
        let s = HilbertSeries::from_h(big(&[1, 4, 5, 2, 0]), 4);
        assert_eq!(s.render(), "(1 + 4t + 5t^2 + 2t^3) / (1 - t)^4");
    }
}
