//! Verification grids and check records shared by the CLI and the test suites.

use num_bigint::BigInt;
use serde::Serialize;

use crate::charvar::{self, CharVarQuery};
use crate::engine::{self, EngineError, PunctureClass, SurfaceSpec};
use crate::ff_oracle::{self, OracleError};
use crate::generators;

/// Specs with `1 ≤ g ≤ max_genus` and `r_plus, r_minus, t ≤ 3` summing to at
/// most `max_punctures`.
pub fn engine_grid(max_genus: u32, max_punctures: usize) -> Vec<SurfaceSpec> {
    let mut out = Vec::new();
    for g in 1..=max_genus {
        for rp in 0..=3 {
            for rm in 0..=3 {
                for t in 0..=3 {
                    if rp + rm + t <= max_punctures {
                        out.push(SurfaceSpec::with_counts(g, rp, rm, t));
                    }
                }
            }
        }
    }
    out
}

/// All puncture multisets over the four classes with at most `max` elements.
pub fn puncture_multisets(max: usize) -> Vec<Vec<PunctureClass>> {
    fn extend(start: usize, left: usize, cur: &mut Vec<PunctureClass>, out: &mut Vec<Vec<PunctureClass>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for i in start..PunctureClass::ALL.len() {
            cur.push(PunctureClass::ALL[i]);
            extend(i, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    extend(0, max, &mut Vec::new(), &mut out);
    out
}

/// Specs with `1 ≤ g ≤ max_genus` and every multiset of at most `max_punctures` classes.
pub fn ff_grid(max_genus: u32, max_punctures: usize) -> Vec<SurfaceSpec> {
    (1..=max_genus)
        .flat_map(|g| puncture_multisets(max_punctures).into_iter().map(move |ps| SurfaceSpec::new(g, ps)))
        .collect()
}

/// Free groups `n ≤ max_rank`, surfaces `g ≤ max_genus`, and parabolic
/// surfaces `g ≤ max_parabolic_genus` with `r ≤ 3`, `t ≤ 2` (both σ signs).
pub fn charvar_grid(max_rank: u32, max_genus: u32, max_parabolic_genus: u32) -> Vec<CharVarQuery> {
    let mut out: Vec<CharVarQuery> = (1..=max_rank).map(CharVarQuery::FreeGroup).collect();
    for n in 1..=max_rank.min(4) {
        for s in 1..=3 {
            out.push(CharVarQuery::FreeParabolic(n, s));
        }
        out.push(CharVarQuery::Abelian(n));
    }
    out.extend((1..=max_genus).map(CharVarQuery::Surface));
    for genus in 1..=max_parabolic_genus {
        for r_plus in 0..=3 {
            for r_minus in 0..=3 - r_plus {
                for t in 0..=2 {
                    out.push(CharVarQuery::ParabolicSurface { genus, r_plus, r_minus, t });
                }
            }
        }
    }
    out
}

/// Engine and closed form on one spec.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngineCheck {
    pub spec: SurfaceSpec,
    pub engine: Result<crate::Poly, EngineError>,
    pub closed_form: Result<crate::Poly, EngineError>,
}

impl EngineCheck {
    pub fn run(spec: &SurfaceSpec) -> Self {
        Self {
            spec: spec.clone(),
            engine: engine::evaluate(spec),
            closed_form: engine::closed_form(spec),
        }
    }

    pub fn agree(&self) -> bool {
        matches!((&self.engine, &self.closed_form), (Ok(a), Ok(b)) if a == b)
    }
}

/// Polynomial value at `q = p` against the brute-force count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FfCheck {
    pub p: u32,
    #[serde(serialize_with = "as_string")]
    pub expected: BigInt,
    #[serde(serialize_with = "as_string")]
    pub counted: BigInt,
    pub agree: bool,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CheckError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Poly(#[from] crate::PolyError),
}

impl FfCheck {
    pub fn run(spec: &SurfaceSpec, p: u32) -> Result<Self, CheckError> {
        let poly = engine::evaluate(spec)?;
        Self::against(&poly, spec, p)
    }

    /// Compares an already evaluated polynomial with the count.
    pub fn against(poly: &crate::Poly, spec: &SurfaceSpec, p: u32) -> Result<Self, CheckError> {
        let expected = poly.eval_int(i64::from(p))?;
        let counted = ff_oracle::count(spec, p)?;
        let agree = expected == counted;
        Ok(Self { p, expected, counted, agree })
    }
}

/// One line of a verification report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub suite: &'static str,
    pub item: String,
    pub pass: bool,
    pub detail: String,
}

/// Runs the matrix identities, the engine grid, the character-variety grid
/// and the finite-field grid.
///
/// `max_genus = 0` runs only the matrix identities.
pub fn run_all(max_genus: u32, max_punctures: usize, primes: &[u32]) -> Vec<Outcome> {
    let mut out = Vec::new();
    for c in generators::identity_checks() {
        out.push(Outcome { suite: "matrices", item: c.name.to_string(), pass: c.pass, detail: String::new() });
    }
    if max_genus == 0 {
        return out;
    }
    for spec in engine_grid(max_genus, max_punctures) {
        let check = EngineCheck::run(&spec);
        let detail = match (&check.engine, &check.closed_form) {
            (Ok(a), Ok(b)) if a == b => a.to_string(),
            (Ok(a), Ok(b)) => format!("engine {a} != closed form {b}"),
            (Err(e), _) | (_, Err(e)) => e.to_string(),
        };
        out.push(Outcome { suite: "engine", item: spec.to_string(), pass: check.agree(), detail });
    }
    for query in charvar_grid(2 * max_genus + 2, max_genus, max_genus) {
        let (pass, detail) = match charvar::consistency_check(&query) {
            Ok(ok) => (ok, String::new()),
            Err(e) => (false, e.to_string()),
        };
        out.push(Outcome { suite: "charvar", item: query.to_string(), pass, detail });
    }
    for spec in ff_grid(max_genus.min(2), max_punctures.min(2)) {
        for &p in primes {
            let (pass, detail) = match FfCheck::run(&spec, p) {
                Ok(c) => (c.agree, format!("polynomial {} vs count {}", c.expected, c.counted)),
                Err(e) => (false, e.to_string()),
            };
            out.push(Outcome { suite: "finite-field", item: format!("{spec} p={p}"), pass, detail });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(puncture_multisets(2).len(), 15);
        assert_eq!(ff_grid(2, 2).len(), 30);
        assert_eq!(engine_grid(4, 4).len(), 4 * 32);
        assert!(engine_grid(1, 0).iter().all(|s| s.punctures.is_empty()));
    }

    #[test]
    fn matrix_suite_only_at_genus_zero() {
        let out = run_all(0, 4, &[3]);
        assert!(out.iter().all(|o| o.suite == "matrices" && o.pass));
    }
}
