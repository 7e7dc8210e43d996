//! Acceptance suite: one PASS/FAIL line per criterion, then a single
//! assertion over all of them so that `cargo test` fails if any line does.
//!
//! Run with `cargo test -p ke-core --test acceptance`.

use std::io::Write;
use std::time::{Duration, Instant};

use ke_core::explorer::{stress, StressReport, TheoremId, TrialConfig};
use ke_core::graph::{alpha_graph, induced_subgraph, is_ke_graph, mu, Graph};
use ke_core::{
    alpha, collection, compute_m, e_value, is_hke_bruteforce, is_ke, set, FiniteSet, SetCollection,
};

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn run(id: u32, budget: Duration, body: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let (mut pass, mut detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if elapsed > budget {
        pass = false;
        detail = format!("{detail}; over the {budget:?} budget");
    }
    Outcome {
        id,
        pass,
        detail,
        elapsed,
    }
}

fn check(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(format!("failed: {what}"))
    }
}

fn clean(reports: &[StressReport]) -> Result<String, String> {
    let mut parts = Vec::new();
    for r in reports {
        if !r.passed() {
            return Err(format!(
                "{}: {} violation(s), first: {}",
                r.theorem_id,
                r.violations.len(),
                r.violations[0].assertion
            ));
        }
        parts.push(format!("{} checked {}", r.theorem_id, r.instances_checked));
    }
    Ok(parts.join(", "))
}

fn sweep() -> TrialConfig {
    TrialConfig {
        universe_max: 6,
        alpha_max: 3,
        collection_size_max: 4,
        ..TrialConfig::default()
    }
}

fn seven_vertex() -> Graph {
    Graph::new(
        7,
        [
            (1, 4),
            (1, 5),
            (1, 6),
            (1, 7),
            (2, 4),
            (3, 6),
            (4, 6),
            (4, 7),
            (5, 7),
            (6, 7),
        ],
    )
    .unwrap()
}

fn criterion_1() -> Result<String, String> {
    let c = collection![[1], [2], [3]];
    let r = compute_m(&c).map_err(|e| e.to_string())?;
    check(alpha(&c) == Ok(1), "alpha = 1")?;
    check(e_value(&c) == Ok(3), "e = 3")?;
    for s in &c {
        check(e_value(&c.without(s).unwrap()) == Ok(2), "e(Γ − S) = 2")?;
    }
    check(r.m == 1, "m = 1")?;
    check(is_ke(&c) == Ok(false), "not KE")?;
    Ok("alpha=1 e=3 beta=2 m=1 is_ke=false".into())
}

fn criterion_2() -> Result<String, String> {
    let c = collection![[1, 2, 3, 4, 5], [4, 5, 6, 7, 8], [3, 6, 7, 8, 9]];
    check(alpha(&c) == Ok(5), "alpha = 5")?;
    let r = compute_m(&c).map_err(|e| e.to_string())?;
    check(r.m == -1, "m = -1")?;
    for s in &c {
        check(
            is_hke_bruteforce(&c.without(s).unwrap()) == Ok(true),
            "pair is hke",
        )?;
    }
    check(is_ke(&c) == Ok(false), "triple not KE")?;
    Ok("alpha=5 m=-1 pairs hke, triple not KE".into())
}

fn criterion_3() -> Result<String, String> {
    let g = seven_vertex();
    check(alpha_graph(&g) == Ok(3), "alpha(G) = 3")?;
    check(mu(&g).unwrap().size == 3, "mu(G) = 3")?;
    check(is_ke_graph(&g) == Ok(false), "G not KE")?;
    let g1 = induced_subgraph(&g, &set![1, 2, 3, 4, 5, 6]).unwrap().graph;
    check(is_ke_graph(&g1) == Ok(true), "G1 KE")?;
    check(mu(&g1).unwrap().size == 3, "mu(G1) = 3")?;
    let sub2 = induced_subgraph(&g, &set![1, 2, 3, 4, 5, 7]).unwrap();
    let g2 = &sub2.graph;
    check(is_ke_graph(g2) == Ok(false), "G2 not KE")?;
    check(mu(g2).unwrap().size == 2, "mu(G2) = 2")?;
    let three = sub2.labels.iter().position(|&l| l == 3).unwrap() as u32 + 1;
    check(g2.degree(three) == 0, "vertex 3 isolated in G2")?;
    Ok("G: alpha=3 mu=3 not KE; G1 KE mu=3; G2 not KE mu=2, 3 isolated".into())
}

fn criterion_5() -> Result<String, String> {
    // every distinct relevant triple over {1..6}, all set sizes
    let config = TrialConfig {
        alpha_max: 6,
        collection_size_max: 3,
        ..sweep()
    };
    let r = stress(TheoremId::Triangle, &config).map_err(|e| e.to_string())?;
    let expected: u64 = (1..=6u64)
        .map(|a| {
            let m = binomial(6, a);
            m * m.saturating_sub(1) * m.saturating_sub(2) / 6
        })
        .sum();
    check(r.instances_checked == expected, "every triple visited")?;
    clean(&[r])
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn criterion_8() -> Result<String, String> {
    let exhaustive = stress(
        TheoremId::Dam26,
        &TrialConfig {
            graph_n_min: 1,
            graph_n_max: 5,
            ..TrialConfig::default()
        },
    )
    .map_err(|e| e.to_string())?;
    let graphs: u64 = (1..=5u64).map(|n| 1 << (n * (n - 1) / 2)).sum();
    check(
        exhaustive.instances_checked == graphs,
        "every graph on n <= 5 visited",
    )?;
    let random = stress(
        TheoremId::Dam26,
        &TrialConfig {
            seed: 2024,
            trials: 1000,
            graph_n_min: 6,
            graph_n_max: 7,
            exhaustive: false,
            ..TrialConfig::default()
        },
    )
    .map_err(|e| e.to_string())?;
    check(
        random.instances_checked == 1000,
        "1000 random graphs visited",
    )?;
    clean(&[exhaustive, random])
}

fn criterion_10() -> Result<String, String> {
    let config = TrialConfig {
        graph_n_min: 1,
        graph_n_max: 5,
        ..TrialConfig::default()
    };
    let mono = stress(TheoremId::Monotone, &config).map_err(|e| e.to_string())?;
    let nonneg = stress(TheoremId::NonnegM, &config).map_err(|e| e.to_string())?;
    check(
        mono.instances_checked > 0 && nonneg.instances_checked > 0,
        "instances consumed",
    )?;
    clean(&[mono, nonneg])
}

fn criterion_11() -> Result<String, String> {
    let random = TrialConfig {
        seed: 7,
        trials: 300,
        universe_max: 9,
        alpha_max: 4,
        collection_size_max: 5,
        graph_n_min: 4,
        graph_n_max: 8,
        exhaustive: false,
        ..TrialConfig::default()
    };
    let small = TrialConfig {
        universe_max: 5,
        graph_n_max: 4,
        ..TrialConfig::default()
    };
    for theorem in TheoremId::ALL {
        for config in [&random, &small] {
            let a = stress(theorem, config)
                .map_err(|e| e.to_string())?
                .to_jsonl();
            let b = stress(theorem, config)
                .map_err(|e| e.to_string())?
                .to_jsonl();
            check(a == b, &format!("{theorem} reports identical"))?;
        }
    }
    Ok("all ten suites, random and exhaustive, byte-identical twice".into())
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let swept = |ids: &'static [TheoremId]| {
        move || {
            let reports = ids
                .iter()
                .map(|&t| stress(t, &sweep()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            clean(&reports)
        }
    };
    let outcomes = [
        run(1, secs(1), criterion_1),
        run(2, secs(1), criterion_2),
        run(3, secs(1), criterion_3),
        run(
            4,
            secs(120),
            swept(&[TheoremId::Duality, TheoremId::Existential]),
        ),
        run(5, secs(120), criterion_5),
        run(6, secs(120), swept(&[TheoremId::Signed])),
        run(7, secs(120), swept(&[TheoremId::Even])),
        run(8, secs(600), criterion_8),
        run(9, secs(120), swept(&[TheoremId::Hke63])),
        run(10, secs(600), criterion_10),
        run(11, secs(600), criterion_11),
    ];
    // written to the stdout handle directly so the lines show even when
    // the harness captures output
    let mut stdout = std::io::stdout().lock();
    for o in &outcomes {
        writeln!(
            stdout,
            "criterion {:>2}: {} ({:.2?}) {}",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.elapsed,
            o.detail
        )
        .unwrap();
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn fixtures_are_well_formed() {
    let s: FiniteSet = set![3, 1, 2];
    assert_eq!(s.elements(), &[1, 2, 3]);
    let c: SetCollection = collection![[2], [1]];
    assert_eq!(c.members()[0], set![1]);
}
