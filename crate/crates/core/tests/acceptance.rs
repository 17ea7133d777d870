//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use sl2_tqft::charvar::{self, CharVarQuery};
use sl2_tqft::engine::{closed_form, evaluate, SurfaceSpec};
use sl2_tqft::ff_oracle::count;
use sl2_tqft::generators::{self, Generator};
use sl2_tqft::verify::{charvar_grid, engine_grid, ff_grid, FfCheck};
use sl2_tqft::{LocalizedScalar, Poly};

type Outcome = Result<String, Vec<String>>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn poly(s: &str) -> Poly {
    s.parse().expect("literal")
}

fn scalar(s: &str) -> LocalizedScalar {
    s.parse().expect("literal")
}

fn ensure(ok: bool, what: impl Into<String>) -> Outcome {
    if ok {
        Ok(String::new())
    } else {
        Err(vec![what.into()])
    }
}

fn matrix_cross_identity() -> Outcome {
    ensure(generators::check_m_identity(), "(q^3-q)·M != eta_inv·Z(L)")
}

fn reduction_identity() -> Outcome {
    ensure(generators::check_jplus_reduction(), "Z(L_[J+])·eta_inv != printed reduced matrix")
}

fn diagonalization() -> Outcome {
    match generators::diag_check() {
        Ok(true) => Ok(String::new()),
        Ok(false) => Err(vec!["P·D·P^-1 != rz_jplus".into()]),
        Err(e) => Err(vec![e.to_string()]),
    }
}

fn commutativity() -> Outcome {
    let (l, j, s) = (generators::rz_genus(), generators::rz_jplus(), generators::sigma());
    let mut errs = Vec::new();
    if !l.commutes_with(j) {
        errs.push("Z(L)·eta_inv and rz_jplus do not commute".into());
    }
    if !l.commutes_with(s) {
        errs.push("Z(L)·eta_inv and sigma do not commute".into());
    }
    if !j.commutes_with(s) {
        errs.push("rz_jplus and sigma do not commute".into());
    }
    if errs.is_empty() {
        Ok(String::new())
    } else {
        Err(errs)
    }
}

fn engine_vs_closed_form() -> Outcome {
    let grid = engine_grid(4, 4);
    let mut errs = Vec::new();
    for spec in &grid {
        match (evaluate(spec), closed_form(spec)) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(a), Ok(b)) => errs.push(format!("{spec}: engine {a} vs closed form {b}")),
            (Err(e), _) | (_, Err(e)) => errs.push(format!("{spec}: {e}")),
        }
    }
    if errs.is_empty() {
        Ok(format!("{} specs", grid.len()))
    } else {
        Err(errs)
    }
}

fn specific_values() -> Outcome {
    let cases = [
        (SurfaceSpec::closed(1), poly("q^4 + 4*q^3 - q^2 - 4*q")),
        (SurfaceSpec::with_counts(1, 0, 0, 1), poly("q^3 - q")),
        (SurfaceSpec::with_counts(1, 1, 0, 0), poly("q*(q + 1)^2*(q - 1)*(q - 3)")),
        (SurfaceSpec::closed(0), poly("1")),
    ];
    let errs: Vec<String> = cases
        .iter()
        .filter_map(|(spec, want)| match evaluate(spec) {
            Ok(got) if &got == want => None,
            Ok(got) => Some(format!("{spec}: got {got}, want {want}")),
            Err(e) => Some(format!("{spec}: {e}")),
        })
        .collect();
    if errs.is_empty() {
        Ok(String::new())
    } else {
        Err(errs)
    }
}

fn finite_field_agreement() -> Outcome {
    let mut errs = Vec::new();
    let anchors = [
        (SurfaceSpec::closed(1), 3, 168),
        (SurfaceSpec::closed(1), 5, 1080),
        (SurfaceSpec::with_counts(1, 0, 0, 1), 3, 24),
        (SurfaceSpec::with_counts(1, 1, 0, 0), 3, 0),
    ];
    for (spec, p, want) in anchors {
        match count(&spec, p) {
            Ok(n) if n == BigInt::from(want) => {}
            Ok(n) => errs.push(format!("anchor {spec} p={p}: counted {n}, want {want}")),
            Err(e) => errs.push(format!("anchor {spec} p={p}: {e}")),
        }
    }
    let grid = ff_grid(2, 2);
    let mut rows = 0;
    for spec in &grid {
        for p in [3, 5] {
            rows += 1;
            match FfCheck::run(spec, p) {
                Ok(c) if c.agree => {}
                Ok(c) => errs.push(format!(
                    "{spec} p={p}: polynomial gives {}, count is {}",
                    c.expected, c.counted
                )),
                Err(e) => errs.push(format!("{spec} p={p}: {e}")),
            }
        }
    }
    if errs.is_empty() {
        Ok(format!("{rows} rows"))
    } else {
        errs.push(format!("{} of {rows} rows disagree", errs.len()));
        Err(errs)
    }
}

fn measure_consistency() -> Outcome {
    let unit = generators::measure(&generators::eta().mul_vec(&generators::unit_class()));
    let hd = Generator::Bt
        .unit()
        .scale(&scalar("q^2"))
        .add(&Generator::S2SNeg2.unit().scale(&scalar("q")));
    let mut errs = Vec::new();
    if unit != scalar("q^3 - q") {
        errs.push(format!("measure(eta·unit) = {unit}"));
    }
    let m = generators::measure(&hd);
    if m != scalar("q^3 - 2*q^2 - q") {
        errs.push(format!("measure(q^2 e5 + q e8) = {m}"));
    }
    if errs.is_empty() {
        Ok(String::new())
    } else {
        Err(errs)
    }
}

fn charvar_consistency() -> Outcome {
    let mut errs = Vec::new();
    let mut queries: Vec<CharVarQuery> = (1..=6).map(CharVarQuery::FreeGroup).collect();
    queries.extend((1..=4).map(CharVarQuery::Surface));
    for genus in 1..=3 {
        for r_plus in 0..=3u32 {
            for r_minus in 0..=3 - r_plus {
                for t in 0..=1 {
                    queries.push(CharVarQuery::ParabolicSurface { genus, r_plus, r_minus, t });
                }
            }
        }
    }
    for q in &queries {
        match charvar::consistency_check(q) {
            Ok(true) => {}
            Ok(false) => errs.push(format!("{q}: E(X) != E(X^red) + E(X^irr)")),
            Err(e) => errs.push(format!("{q}: {e}")),
        }
    }
    for n in 1..=5 {
        if !matches!(charvar::free_group_reconstruction(n), Ok(true)) {
            errs.push(format!("free group strata do not rebuild (q^3-q)^{n}"));
        }
    }
    let spots = [
        (CharVarQuery::FreeGroup(1), poly("q")),
        (CharVarQuery::Surface(1), poly("q^2 + 1")),
    ];
    for (q, want) in spots {
        if charvar::e_char(&q).ok().as_ref() != Some(&want) {
            errs.push(format!("{q}: want {want}"));
        }
    }
    for n in 1..=6 {
        let want = (poly("q - 1").pow(n) + poly("q + 1").pow(n)).div_int(2).expect("even");
        if charvar::e_char(&CharVarQuery::Abelian(n)).ok().as_ref() != Some(&want) {
            errs.push(format!("abelian rank {n}: want {want}"));
        }
    }
    if errs.is_empty() {
        Ok(format!("{} queries", queries.len()))
    } else {
        Err(errs)
    }
}

fn divisibility() -> Outcome {
    let mut errs = Vec::new();
    let mut divisions = 0;
    for spec in engine_grid(4, 4).iter().chain(ff_grid(2, 2).iter()) {
        divisions += 1;
        if let Err(e) = evaluate(spec) {
            errs.push(format!("engine {spec}: {e}"));
        }
    }
    for q in charvar_grid(6, 4, 3) {
        divisions += 1;
        if let Err(e) = charvar::e_irreducible_quotient(&q) {
            errs.push(format!("charvar {q}: {e}"));
        }
    }
    if errs.is_empty() {
        Ok(format!("{divisions} normalizations"))
    } else {
        Err(errs)
    }
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "matrix cross-identity (q^3-q)·M = eta_inv·Z(L)", limit: Some(Duration::from_secs(1)), run: matrix_cross_identity },
    Criterion { id: 2, name: "reduction identity rz_jplus = Z(L_[J+])·eta_inv", limit: Some(Duration::from_secs(1)), run: reduction_identity },
    Criterion { id: 3, name: "diagonalization P·D·P^-1 = rz_jplus", limit: Some(Duration::from_secs(1)), run: diagonalization },
    Criterion { id: 4, name: "Z(L)·eta_inv, rz_jplus, sigma pairwise commute", limit: Some(Duration::from_secs(1)), run: commutativity },
    Criterion { id: 5, name: "engine equals closed form on g <= 4, r+, r-, t <= 3, s <= 4", limit: Some(Duration::from_secs(10)), run: engine_vs_closed_form },
    Criterion { id: 6, name: "specific engine values", limit: None, run: specific_values },
    Criterion { id: 7, name: "finite-field counts match at p = 3, 5 (g <= 2, s <= 2)", limit: Some(Duration::from_secs(60)), run: finite_field_agreement },
    Criterion { id: 8, name: "measure consistency", limit: None, run: measure_consistency },
    Criterion { id: 9, name: "character-variety consistency and spot values", limit: Some(Duration::from_secs(5)), run: charvar_consistency },
    Criterion { id: 10, name: "every exact division succeeds", limit: None, run: divisibility },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|l| elapsed <= l);
        let pass = outcome.is_ok() && in_time;
        let budget = c.limit.map_or(String::new(), |l| format!(" / limit {l:?}"));
        let note = match &outcome {
            Ok(s) if !s.is_empty() => format!(", {s}"),
            _ => String::new(),
        };
        println!(
            "{} criterion {:>2}: {} [{elapsed:.2?}{budget}{note}]",
            if pass { "PASS" } else { "FAIL" },
            c.id,
            c.name
        );
        if let Err(errs) = &outcome {
            for e in errs {
                println!("      {e}");
            }
        }
        if !in_time {
            println!("      exceeded time limit");
        }
        if !pass {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
