//! The normal filtration: integral closures of powers of a monomial ideal.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exec;
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;
use crate::lattice;
use crate::newton::NewtonPolyhedron;

/// Computed closures of powers of a fixed base ideal.
///
/// `closure(n)` returns the minimal monomial generators of the integral
/// closure of `base^n`, caching every level it computes. The cache is
/// single-writer: concurrent use requires external synchronization, but the
/// sweep inside each level is data-parallel on its own.
pub struct ClosureCache {
    base: MonomialIdeal,
    newton: NewtonPolyhedron,
    closures: BTreeMap<u32, MonomialIdeal>,
}

impl ClosureCache {
    pub fn new(base: MonomialIdeal) -> Result<Self> {
        let newton = NewtonPolyhedron::of(&base)?;
        Ok(ClosureCache {
            base,
            newton,
            closures: BTreeMap::new(),
        })
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn newton(&self) -> &NewtonPolyhedron {
        &self.newton
    }

    pub fn cached_levels(&self) -> Vec<u32> {
        self.closures.keys().copied().collect()
    }

    /// Integral closure of `base^n`, with `n = 0` giving the unit ideal.
    ///
    /// Minimal generators of the closure are found by sweeping the box
    /// `0 <= a_j <= n * M_j`, where `M_j` is the largest `j`-th exponent
    /// among the generators: if `a_j > n * M_j` then every feasible
    /// combination leaves the `j`-th constraint slack by at least one, so
    /// `a - e_j` is still a member and `a` is not a minimal generator. The
    /// sweep runs in ascending total degree; a point is a new generator
    /// exactly when it is a member and no lower-degree generator divides it
    /// (equal-degree points are incomparable).
    pub fn closure(&mut self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Ok(MonomialIdeal::unit(self.base.dim()));
        }
        if let Some(found) = self.closures.get(&n) {
            return Ok(found.clone());
        }
        let computed = self.compute_closure(n)?;
        self.closures.insert(n, computed.clone());
        Ok(computed)
    }

    fn compute_closure(&self, n: u32) -> Result<MonomialIdeal> {
        let n_big = BigUint::from(n);
        let bounds: Vec<BigUint> = self
            .base
            .max_coord_per_axis()
            .iter()
            .map(|m| m * &n_big)
            .collect();
        let shells = lattice::points_by_degree(&bounds)?;

        let mut generators: Vec<ExponentVector> = Vec::new();
        for shell in shells {
            let mut new_gens = exec::filter_collect(shell, |p| {
                !generators.iter().any(|g| g.divides(p))
                    && self
                        .newton
                        .membership_level(p, n)
                        .expect("dimensions agree and n >= 1")
            });
            generators.append(&mut new_gens);
        }
        generators.sort();
        Ok(MonomialIdeal::from_minimal_sorted(generators, self.base.dim()))
    }

    /// Checks the filtration laws on every cached level: each closure
    /// contains the corresponding power, consecutive closures descend, and
    /// `closure(a) * closure(b)` lands inside `closure(a+b)`.
    pub fn verify_filtration(&self) -> Result<()> {
        let levels = self.cached_levels();
        for &n in &levels {
            let cl = &self.closures[&n];
            if !cl.contains_ideal(&self.base.power(n))? {
                return Err(Error::Internal(format!(
                    "closure({n}) does not contain the {n}-th power"
                )));
            }
            if let Some(next) = self.closures.get(&(n + 1)) {
                if !cl.contains_ideal(next)? {
                    return Err(Error::Internal(format!(
                        "closure({}) is not contained in closure({n})",
                        n + 1
                    )));
                }
            }
        }
        for &a in &levels {
            for &b in &levels {
                if let Some(sum) = self.closures.get(&(a + b)) {
                    let product = self.closures[&a].multiply(&self.closures[&b])?;
                    if !sum.contains_ideal(&product)? {
                        return Err(Error::Internal(format!(
                            "closure({a}) * closure({b}) escapes closure({})",
                            a + b
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Smallest `h` with `closure(n + h)` contained in `base^n` for every
    /// `1 <= n <= n_max`, searching `h <= n_max`; `None` if the window has no
    /// such `h`.
    pub fn rees_gap(&mut self, n_max: u32) -> Result<Option<u32>> {
        let powers: Vec<MonomialIdeal> = (0..=n_max).map(|n| self.base.power(n)).collect();
        for h in 0..=n_max {
            let mut ok = true;
            for n in 1..=n_max {
                let cl = self.closure(n + h)?;
                if !powers[n as usize].contains_ideal(&cl)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                return Ok(Some(h));
            }
        }
        Ok(None)
    }

    /// Stable cache key: hash of the canonical (sorted, minimal) generator set.
    pub fn cache_key(base: &MonomialIdeal) -> String {
        let canonical = serde_json::to_string(base).expect("ideal serializes");
        let digest = Sha256::digest(canonical.as_bytes());
        let mut key = String::with_capacity(16);
        for byte in digest.iter().take(8) {
            key.push_str(&format!("{byte:02x}"));
        }
        key
    }

    fn cache_path(base: &MonomialIdeal, dir: &Path) -> PathBuf {
        dir.join(format!("closure-{}.json", Self::cache_key(base)))
    }

    /// Loads cached closures for `base` from `dir` when a readable, matching
    /// cache file exists; otherwise starts empty. Corrupt or mismatched
    /// files are ignored and will be recomputed.
    pub fn load_or_new(base: MonomialIdeal, dir: &Path) -> Result<Self> {
        let mut cache = Self::new(base)?;
        let path = Self::cache_path(&cache.base, dir);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(file) = serde_json::from_str::<CacheFile>(&text) {
                if file.base == cache.base {
                    cache.closures = file.closures;
                }
            }
        }
        Ok(cache)
    }

    pub fn save(&self, dir: &Path) -> io::Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = Self::cache_path(&self.base, dir);
        let file = CacheFile {
            base: self.base.clone(),
            closures: self.closures.clone(),
        };
        let text = serde_json::to_string_pretty(&file).expect("cache serializes");
        fs::write(&path, text)?;
        Ok(path)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    base: MonomialIdeal,
    closures: BTreeMap<u32, MonomialIdeal>,
}

/// One-sided power test for closure membership: `x^a` lies in the closure of
/// `I^n` iff `x^{ka}` lies in `I^{kn}` for some `k >= 1`. A `true` answer is
/// conclusive; `false` only says no witness exists up to `k_max`. This is the
/// independent oracle used to cross-validate the polyhedral route.
pub fn oracle_membership(
    ideal: &MonomialIdeal,
    a: &ExponentVector,
    n: u32,
    k_max: u32,
) -> Result<bool> {
    Ok(OracleTable::build(ideal, n, k_max)?.witness(a)?.is_some())
}

/// Precomputed powers `I^{kn}` for `k = 1..=k_max`, so a sweep over many
/// points pays for the power chain once.
pub struct OracleTable {
    dim: usize,
    powers: Vec<MonomialIdeal>,
}

impl OracleTable {
    pub fn build(ideal: &MonomialIdeal, n: u32, k_max: u32) -> Result<Self> {
        if n == 0 || k_max == 0 {
            return Err(Error::NonPositivePower(0));
        }
        let step = ideal.power(n);
        let mut powers = Vec::with_capacity(k_max as usize);
        let mut power = step.clone();
        for _ in 1..=k_max {
            powers.push(power.clone());
            power = power.multiply(&step)?;
        }
        Ok(OracleTable {
            dim: ideal.dim(),
            powers,
        })
    }

    /// Smallest `k` with `x^{ka}` in `I^{kn}`, if any up to the table bound.
    pub fn witness(&self, a: &ExponentVector) -> Result<Option<u32>> {
        Error::check_dims(self.dim, a.dim())?;
        for (index, power) in self.powers.iter().enumerate() {
            let k = index as u32 + 1;
            if power.contains_monomial(&a.scale(k as u64))? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

/// Default witness bound for the power oracle.
pub const DEFAULT_ORACLE_K_MAX: u32 = 12;
