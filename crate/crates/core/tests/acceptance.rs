//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

use std::ops::ControlFlow;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thurston::cli::{self, TableRow};
use thurston::filling::{
    double_bigon, for_each_filling, i_min, search_filling, validate_filling, FillingSearch, Perm,
    SearchOutcome,
};
use thurston::multitwist::{mu, multitwist_classify, IntersectionMatrix};
use thurston::search::{enumerate, search_report, verify_congruence_closure, SearchConfig};
use thurston::thurston::{min_dilatation, ThurstonRep};
use thurston::TwistWord;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn closed_form_values() -> Check {
    let four = min_dilatation(4).map_err(err)?.dilatation;
    ensure(
        (four.p(), four.q(), four.radicand())
            == (&BigInt::from(14), &BigInt::from(8), &BigInt::from(3)),
        format!("min_dilatation(4) = {four:?}"),
    )?;
    ensure(four.to_string() == "7 + 4√3", four.to_string())?;
    ensure(
        (four.to_f64() - 13.928203230275509).abs() <= 1e-9,
        format!("{}", four.to_f64()),
    )?;
    let one = min_dilatation(1).map_err(err)?.dilatation;
    ensure(
        (one.p(), one.q(), one.radicand())
            == (&BigInt::from(3), &BigInt::from(1), &BigInt::from(5)),
        format!("min_dilatation(1) = {one:?}"),
    )?;
    ensure(
        one.is_root_of_monic(&BigInt::from(-3), &BigInt::from(1)),
        "not a root of x² − 3x + 1",
    )?;
    Ok(format!("λ(4) = {four} ≈ {}, λ(1) = {one}", four.decimal()))
}

fn oracle_min_trace() -> Check {
    let start = Instant::now();
    let mut summary = Vec::new();
    for n in 3..=6u64 {
        let report = search_report(n, 8, &SearchConfig::default()).map_err(err)?;
        let expected = BigInt::from(n * n - 2);
        ensure(
            report.min_trace.as_ref() == Some(&expected),
            format!(
                "n = {n}: min |trace| {:?}, expected {expected}",
                report.min_trace
            ),
        )?;
        ensure(
            report.has_product_witness(),
            format!("n = {n}: no a b witness"),
        )?;
        summary.push(format!("n={n}:{expected}"));
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, format!("took {secs:.1}s"))?;
    Ok(format!("{} in {secs:.2}s", summary.join(" ")))
}

fn congruence_closure() -> Check {
    let mut sizes = Vec::new();
    for n in 3..=5u64 {
        ensure(
            verify_congruence_closure(n, 8, &SearchConfig::default()).map_err(err)?,
            format!("n = {n}: an element failed congruence_decompose"),
        )?;
        sizes.push(n.to_string());
    }
    Ok(format!(
        "zero failures for n ∈ {{{}}} to length 8",
        sizes.join(",")
    ))
}

fn free_group_counts() -> Check {
    let mut counts = Vec::new();
    for len in 1..=6u32 {
        let e = enumerate(3, len as usize, &SearchConfig::default()).map_err(err)?;
        let expected = 1 + 4 * (3usize.pow(len) - 1) / 2;
        ensure(
            e.len() == expected,
            format!("L = {len}: {} elements, expected {expected}", e.len()),
        )?;
        counts.push(expected.to_string());
    }
    Ok(format!("counts {}", counts.join(", ")))
}

fn euler_identity(sigma: &Perm, genus: usize) -> bool {
    let m = sigma.m() as i64;
    m - 2 * m + sigma.cycle_count() as i64 == 2 - 2 * genus as i64
}

fn filling_suite() -> Check {
    let torus: Perm = "(1,2,3,4)".parse().map_err(err)?;
    ensure(
        validate_filling(&torus, 1, 0).valid_for == Some((1, 0, 1)),
        "torus does not validate",
    )?;

    // every permutation of four symbols
    let mut s4 = Vec::new();
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                for d in 1..=4 {
                    if let Ok(p) = Perm::from_images(&[a, b, c, d]) {
                        s4.push(p);
                    }
                }
            }
        }
    }
    ensure(s4.len() == 24, "S₄ enumeration")?;
    let brute: Vec<&Perm> = s4
        .iter()
        .filter(|p| validate_filling(p, 1, 0).is_valid())
        .collect();
    ensure(
        brute.contains(&&torus),
        "exhaustive S₄ scan missed (1,2,3,4)",
    )?;
    let spec = FillingSearch::for_surface(1, 0, 1, u64::MAX).map_err(err)?;
    let mut searched = Vec::new();
    let (complete, _) = for_each_filling(&spec, |p| {
        searched.push(p.clone());
        ControlFlow::Continue(())
    });
    ensure(
        complete && searched.contains(&torus),
        "backtracking over S₄ missed (1,2,3,4)",
    )?;
    ensure(
        searched.len() == brute.len(),
        "backtracking and S₄ scan disagree",
    )?;

    let outcome = search_filling(2, 0, 4, 10_000_000).map_err(err)?;
    let sigma = outcome
        .found()
        .ok_or(format!("search_filling(2,0,4): {outcome:?}"))?;
    ensure(
        validate_filling(sigma, 2, 0).is_valid(),
        "search output fails validation",
    )?;

    for (p, g) in brute
        .iter()
        .map(|p| (*p, 1))
        .chain(searched.iter().map(|p| (p, 1)))
        .chain([(sigma, 2)])
    {
        ensure(
            euler_identity(p, g),
            format!("Euler identity fails for {p}"),
        )?;
    }
    Ok(format!(
        "{} torus solutions in S₄; Σ_{{2,0}}: {sigma}",
        brute.len()
    ))
}

fn genus_two_lower_bound() -> Check {
    match search_filling(2, 0, 3, 10_000_000).map_err(err)? {
        SearchOutcome::Exhausted { nodes } => Ok(format!(
            "search_filling(2,0,3) exhausted after {nodes} nodes"
        )),
        other => Err(format!("expected a conclusive none, got {other:?}")),
    }
}

fn double_bigon_chain() -> Check {
    let mut sigma: Perm = "(1,2,3,4)".parse().map_err(err)?;
    ensure(
        validate_filling(&sigma, 1, 1).is_valid(),
        "start does not validate for (1,1,1)",
    )?;
    let mut n = 1usize;
    let mut seen = Vec::new();
    for _ in 0..2 {
        sigma = double_bigon(&sigma, 1, n).map_err(err)?;
        n += 2;
        let v = validate_filling(&sigma, 1, n);
        ensure(v.valid_for == Some((1, n, n)), format!("(1,{n}): {v:?}"))?;
        ensure(
            sigma.m() as u64 == i_min(1, n as u64).map_err(err)?,
            "m differs from i_min",
        )?;
        seen.push(format!("(1,{n},{})", sigma.m()));
    }
    Ok(seen.join(" → "))
}

fn multitwist_reduction() -> Check {
    let words: Vec<TwistWord> = ["a b", "a b^-1", "a^2 b^-1", "a b a^-1 b^2", "b^-2 a^3 b"]
        .iter()
        .map(|w| w.parse().unwrap())
        .collect();
    for n in 1..=20u64 {
        let rep = ThurstonRep::new(n).map_err(err)?;
        let single = IntersectionMatrix::single(n).map_err(err)?;
        for w in &words {
            let exact = rep.matrix(w).trace().to_f64().unwrap();
            let r = multitwist_classify(w, &single).map_err(err)?;
            ensure(
                (r.trace - exact).abs() <= 1e-9 * exact.abs().max(1.0),
                format!("n = {n}, {w}: trace {} vs {exact}", r.trace),
            )?;
            if let Ok(lambda) = rep.dilatation(w) {
                let d = r
                    .dilatation
                    .ok_or(format!("n = {n}, {w}: no float dilatation"))?;
                let l = lambda.to_f64();
                ensure(
                    (d - l).abs() <= 1e-9 * l,
                    format!("n = {n}, {w}: {d} vs {l}"),
                )?;
            }
        }
    }
    let m =
        mu(&IntersectionMatrix::new(vec![vec![2, 1], vec![1, 2]]).map_err(err)?).map_err(err)?;
    ensure((m - 9.0).abs() <= 1e-12, format!("μ = {m}"))?;
    Ok(format!(
        "n = 1..20 × {} words; μ([[2,1],[1,2]]) = {m}",
        words.len()
    ))
}

fn monotonicity() -> Check {
    let mut prev = min_dilatation(3).map_err(err)?.dilatation;
    for n in 4..=100 {
        let next = min_dilatation(n).map_err(err)?.dilatation;
        ensure(prev < next, format!("λ({}) ≥ λ({n})", n - 1))?;
        prev = next;
    }
    Ok(format!(
        "strictly increasing for n = 3..100, λ(100) = {prev}"
    ))
}

/// Minimal intersection numbers, written out case by case.
fn expected_intersection(g: u64, n: u64) -> Option<u64> {
    match (g, n) {
        (0, n) if n < 4 => None,
        (0, n) if n % 2 == 0 => Some(n - 2),
        (0, n) => Some(n - 1),
        (2, n) if n <= 2 => Some(4),
        (g, 0) => Some(2 * g - 1),
        (g, n) => Some(2 * g + n - 2),
    }
}

fn table_regeneration() -> Check {
    let args = [
        "thurston",
        "table",
        "--g-range",
        "0,2,3,4,5",
        "--n-range",
        "0..=6",
        "--format",
        "csv",
    ];
    let (mut out, mut errout) = (Vec::new(), Vec::new());
    let code = cli::run(args, &mut out, &mut errout);
    ensure(
        code == cli::EXIT_OK,
        format!("exit {code}: {}", String::from_utf8_lossy(&errout)),
    )?;
    let rows: Vec<TableRow> = csv::Reader::from_reader(out.as_slice())
        .deserialize()
        .collect::<std::result::Result<_, _>>()
        .map_err(err)?;
    ensure(rows.len() == 35, format!("{} rows", rows.len()))?;

    let (mut defined, mut inapplicable) = (0, 0);
    for r in &rows {
        let (g, n) = (r.genus, r.punctures);
        let cell = format!("(g, n) = ({g}, {n})");
        let expected_i = expected_intersection(g, n);
        ensure(
            r.intersection == expected_i,
            format!("{cell}: i = {:?}, expected {expected_i:?}", r.intersection),
        )?;
        match expected_i {
            Some(i) if i > 2 => {
                let i = BigInt::from(i);
                let p: BigInt = r.p.as_deref().unwrap_or("").parse().map_err(err)?;
                let q: BigInt = r.q.as_deref().unwrap_or("").parse().map_err(err)?;
                let d: BigInt = r.d.as_deref().unwrap_or("").parse().map_err(err)?;
                ensure(p == &i * &i - 2, format!("{cell}: p = {p}"))?;
                ensure(
                    &q * &q * &d == &i * &i * (&i * &i - 4),
                    format!("{cell}: q²D = {}", &q * &q * &d),
                )?;
                let i = i.to_f64().unwrap();
                let lambda = (i * i - 2.0 + i * (i * i - 4.0).sqrt()) / 2.0;
                let decimal: f64 = r.decimal.as_deref().unwrap_or("").parse().map_err(err)?;
                ensure(
                    (decimal - lambda).abs() <= 1e-9 * lambda,
                    format!("{cell}: {decimal} vs {lambda}"),
                )?;
                ensure(r.status == "ok", format!("{cell}: status {}", r.status))?;
                defined += 1;
            }
            _ => {
                let code = if expected_i.is_none() {
                    "no-intersecting-pair"
                } else {
                    "theorem-inapplicable"
                };
                ensure(
                    r.status == code,
                    format!("{cell}: status {}, expected {code}", r.status),
                )?;
                ensure(
                    r.p.is_none() && r.decimal.is_none(),
                    format!("{cell}: value present"),
                )?;
                let (g, n) = (g.to_string(), n.to_string());
                let args = [
                    "thurston",
                    "min-dilatation",
                    "--genus",
                    &g,
                    "--punctures",
                    &n,
                ];
                let exit = cli::run(args, &mut Vec::new(), &mut Vec::new());
                ensure(
                    exit == cli::EXIT_DOMAIN,
                    format!("{cell}: min-dilatation exit {exit}"),
                )?;
                inapplicable += 1;
            }
        }
    }
    Ok(format!(
        "{defined} rows match, {inapplicable} inapplicable cells tagged"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("closed-form values", closed_form_values),
        ("oracle minimal trace, n = 3..6, length 8", oracle_min_trace),
        ("congruence closure, n = 3..5, length 8", congruence_closure),
        ("free-group counts, n = 3, L = 1..6", free_group_counts),
        ("filling permutation suite", filling_suite),
        (
            "no closed genus-2 filling pair with 3 intersections",
            genus_two_lower_bound,
        ),
        (
            "double bigon (1,1,1) → (1,3,3) → (1,5,5)",
            double_bigon_chain,
        ),
        ("multitwist reduction and μ", multitwist_reduction),
        ("monotonicity, n = 3..100", monotonicity),
        ("table regeneration", table_regeneration),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
