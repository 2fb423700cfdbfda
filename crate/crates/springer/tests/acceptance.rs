//! Acceptance suite: one PASS/FAIL line per criterion on stderr.
//!
//! Run with `cargo test -p springer --test acceptance`; the lines are
//! written directly to stderr so they show without `--nocapture`.

use std::io::Write;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use springer::constructibility::{construct_hook, construct_two_col, construct_two_row, Failure, FailureKind};
use springer::diagrams::YoungDiagram;
use springer::jdt::{quotient_shape_t, quotient_shape_tau, rectify_with, schuetzenberger, skew_subtableau, SlideOrder};
use springer::meanders::{cup_diagram, meander, ComponentKind};
use springer::membership::{dominance_member, two_col_eta, two_row_eta};
use springer::oracle::{
    check_codim_one_membership, check_codim_one_two_column, check_codim_one_two_row, check_hook_intersections,
    check_intersection_graph_meander, check_strict_separation, enumerate_rho, enumerate_row_standard,
    enumerate_standard, family_shapes, membership_checks, r_minus_k_pair, rho_sweep_check, stability_checks, Check,
    ShapeData,
};
use springer::vogan::{vogan_set, vogan_t_ab, vogan_t_i};
use springer::{RowStandardTableau, StandardTableau};

fn rs(s: &str) -> RowStandardTableau {
    s.parse().unwrap()
}

fn st(s: &str) -> StandardTableau {
    s.parse().unwrap()
}

fn y(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn report(id: usize, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let in_time = limit.map_or(true, |l| elapsed <= l);
    let ok = out.ok && in_time;
    let limit_note = limit.map_or(String::new(), |l| format!(", limit {l:.0?}"));
    let line = format!(
        "{} criterion {id}: {name} ({}; {elapsed:.2?}{limit_note})\n",
        if ok { "PASS" } else { "FAIL" },
        out.detail
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    ok
}

fn from_checks(checks: &[Check]) -> Outcome {
    let population: usize = checks.iter().map(|c| c.population).sum();
    let bad: Vec<String> = checks
        .iter()
        .filter(|c| !c.passed())
        .map(|c| format!("{}: {}", c.name, c.failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ")))
        .collect();
    Outcome {
        ok: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} checks, population {population}, 0 failures", checks.len())
        } else {
            bad.join(" | ")
        },
    }
}

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(f)
}

fn worked_examples() -> Outcome {
    let mut failed = Vec::new();
    let mut count = 0;
    let mut expect = |what: &str, ok: bool| {
        count += 1;
        if !ok {
            failed.push(what.to_string());
        }
    };

    expect("standardization", rs("3,4,8/1,6,7/2,5").standardize() == st("1,4,7/2,5,8/3,6"));
    expect("schuetzenberger", schuetzenberger(&st("1,3,4/2,5,7/6")) == st("1,2,6/3,5,7/4"));
    expect("s-dual", rs("3,4,7/1,5,6/2").s_dual() == rs("1,4,5/2,3,7/6"));
    expect("Y_7/3(τ)", quotient_shape_tau(&rs("2,3,7/4,6,8/1,5"), 3, 7).unwrap() == y("2,1,1"));
    expect("Y^T_7/3", quotient_shape_t(&st("1,3,4/2,5,7/6"), 3, 7).unwrap() == y("2,1,1"));
    expect("Y^T_6/2", quotient_shape_t(&st("1,2,4/3,5,8/6,7"), 2, 6).unwrap() == y("2,1,1"));
    expect("R-pair", dominance_member(&rs("1,2,5/4,6/3"), &st("1,2,5/3,4/6")).unwrap().member);

    expect(
        "two-row η chain",
        two_row_eta(&rs("2,3,5/1,4"), &st("1,3,4/2,5")).unwrap()
            == vec![(rs("2/1"), st("1/2")), (rs("1,3/2"), st("1,2/3"))],
    );
    let t = st("1,2/3,4/5,6/7/8");
    let a = two_col_eta(&rs("2,4/1,7/3,6/8/5"), &t).unwrap();
    let b = two_col_eta(&a, &t).unwrap();
    let c = two_col_eta(&b, &t).unwrap();
    expect(
        "two-column η chain",
        a == rs("3,4/1,7/2,6/8/5") && b == rs("3,4/1,7/5,6/8/2") && c == rs("3,4/1,2/5,6/8/7") && c.standardize() == t,
    );

    let t2 = st("1,2,3,4,7/5,6,8,9");
    let f = construct_two_row(&rs("2,3,6,8,9/1,4,5,7"), &t2).unwrap().failure();
    expect("two-row algorithm failure", f == Some(Failure { step: 5, kind: FailureKind::LastColumnOccupied }));
    expect("two-row algorithm success", construct_two_row(&rs("1,4,6,8,9/2,3,5,7"), &t2).unwrap().succeeded());
    expect("two-column algorithm success", construct_two_col(&rs("3,5/1,4/2"), &st("1,2/3,4/5")).unwrap().succeeded());
    let f = construct_two_col(&rs("2,6/3,5/4/1"), &st("1,2/3,4/5/6")).unwrap().failure();
    expect("two-column algorithm failure", f == Some(Failure { step: 6, kind: FailureKind::Second }));
    let th = st("1,3,4/2/5");
    let f = construct_hook(&rs("2,4,5/3/1"), &th).unwrap().failure();
    expect("hook algorithm first failure", f == Some(Failure { step: 4, kind: FailureKind::First }));
    let f = construct_hook(&rs("1,3,4/5/2"), &st("1,2,5/3/4")).unwrap().failure();
    expect("hook algorithm second failure", f == Some(Failure { step: 4, kind: FailureKind::Second }));
    expect("hook algorithm success", construct_hook(&rs("2,3,5/4/1"), &th).unwrap().succeeded());

    let (tt, ss, rr) = (st("1,2,4,6,7/3,5,8,9"), st("1,2,5,6,7/3,4,8,9"), st("1,2,3,4,7/5,6,8,9"));
    expect("cup diagram", cup_diagram(&tt).unwrap().word() == "•()()(())");
    let m = meander(&tt, &ss).unwrap();
    expect("meander T,S", m.is_even() && m.loops() == 3 && m.intervals() == vec![2]);
    expect("meander T,R", meander(&tt, &rr).unwrap().loops() == 3);
    expect("meander S,R", meander(&ss, &rr).unwrap().loops() == 2);

    let q = st("1,2,4,5,7/3,6,8,9");
    expect("(T, T_4 T)", vogan_t_i(&tt, 4).unwrap() == ss);
    let q3 = vogan_t_i(&q, 3).unwrap();
    expect(
        "(T, R) from Q",
        vogan_t_ab(&q, 4, true).unwrap() == tt && vogan_t_ab(&q3, 4, true).unwrap() == rr,
    );
    let keys: Vec<_> = vogan_set(&y("5,4")).iter().map(|p| p.key()).collect();
    let has = |a: &StandardTableau, b: &StandardTableau| keys.iter().any(|(x, z)| (x == a && z == b) || (x == b && z == a));
    expect("pairs in the Vogan set", has(&tt, &ss) && has(&tt, &rr));

    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() { format!("{count} examples") } else { format!("mismatched: {}", failed.join(", ")) },
    }
}

fn shapes_data(max: usize) -> Vec<ShapeData> {
    family_shapes(max).iter().map(ShapeData::new).collect()
}

fn intersections(data: &[ShapeData]) -> Outcome {
    let mut checks = Vec::new();
    for n in 1..=10 {
        for shape in YoungDiagram::partitions(n).into_iter().filter(|s| s.num_rows() <= 2) {
            let d = ShapeData::new(&shape);
            checks.push(check_intersection_graph_meander(&d));
            checks.push(check_codim_one_two_row(&d));
        }
    }
    for d in data {
        let fam = d.shape.classify();
        if fam.hook {
            checks.extend(check_hook_intersections(d));
        }
        if fam.two_column {
            checks.push(check_codim_one_two_column(d));
        }
        checks.push(check_codim_one_membership(d));
    }
    from_checks(&checks)
}

fn rho_sweep_pair() -> Outcome {
    let rho = enumerate_rho(6);
    Outcome {
        ok: rho_sweep_check() && rho.len() == 64 && rho.iter().all(|r| r.is_valid()),
        detail: format!("{} sequences in R_6", rho.len()),
    }
}

fn family_strategy(family: usize) -> BoxedStrategy<YoungDiagram> {
    match family {
        0 => (1usize..=8)
            .prop_flat_map(|n| (Just(n), 1..=n))
            .prop_map(|(n, s)| {
                let mut rows = vec![s];
                rows.extend(std::iter::repeat(1).take(n - s));
                YoungDiagram::new(rows).unwrap()
            })
            .boxed(),
        1 => (1usize..=8)
            .prop_flat_map(|n| (Just(n), 0..=n / 2))
            .prop_map(|(n, b)| YoungDiagram::new(if b == 0 { vec![n] } else { vec![n - b, b] }).unwrap())
            .boxed(),
        _ => (1usize..=8)
            .prop_flat_map(|n| (Just(n), 0..=n / 2))
            .prop_map(|(n, b)| {
                let rows = if b == 0 { vec![n] } else { vec![n - b, b] };
                YoungDiagram::new(rows).unwrap().transpose()
            })
            .boxed(),
    }
}

fn instance(family: usize) -> impl Strategy<Value = (StandardTableau, StandardTableau, RowStandardTableau, usize, usize)> {
    family_strategy(family).prop_flat_map(|shape| {
        let std = enumerate_standard(&shape);
        let rows = enumerate_row_standard(&shape);
        let n = shape.n();
        (0..std.len(), 0..std.len(), 0..rows.len(), 0..n, 0..n).prop_map(move |(a, b, c, i, j)| {
            let (i, j) = if i < j { (i, j) } else { (j, (i + 1).min(n)) };
            let (i, j) = if i < j { (i, j) } else { (0, n) };
            (std[a].clone(), std[b].clone(), rows[c].clone(), i, j)
        })
    })
}

fn structure_properties() -> Outcome {
    let mut total = 0;
    let mut failures = Vec::new();
    for (family, name) in [(0, "hook"), (1, "two-row"), (2, "two-column")] {
        let mut runner = TestRunner::new(Config { cases: 1000, failure_persistence: None, ..Config::default() });
        let result = runner.run(&instance(family), |(t, s, tau, i, j)| {
            prop_assert_eq!(schuetzenberger(&schuetzenberger(&t)), t.clone());
            prop_assert_eq!(tau.s_dual().s_dual(), tau.clone());
            prop_assert_eq!(t.transpose().transpose(), t.clone());
            let skew = skew_subtableau(&t, i, j).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let a = rectify_with(&skew, SlideOrder::BottomFirst);
            let b = rectify_with(&skew, SlideOrder::TopFirst);
            prop_assert_eq!(a.outer(), b.outer());
            if t.shape().num_rows() <= 2 {
                for c in [cup_diagram(&t), cup_diagram(&s)] {
                    let arcs = c.map_err(|e| TestCaseError::fail(e.to_string()))?.arcs;
                    for &(p, q) in &arcs {
                        for &(u, v) in &arcs {
                            prop_assert!(!(p < u && u < q && q < v), "crossing arcs {:?} {:?}", (p, q), (u, v));
                        }
                    }
                }
                let m = meander(&t, &s).map_err(|e| TestCaseError::fail(e.to_string()))?;
                for comp in m.components.iter().filter(|c| c.kind == ComponentKind::Loop) {
                    prop_assert!(comp.length % 2 == 0, "odd loop in meander of {} and {}", t, s);
                }
            }
            Ok(())
        });
        total += 1000;
        if let Err(e) = result {
            failures.push(format!("{name}: {e}"));
        }
    }
    Outcome {
        ok: failures.is_empty(),
        detail: if failures.is_empty() { format!("{total} random instances over 3 families") } else { failures.join(" | ") },
    }
}

#[test]
fn acceptance() {
    let data = single_threaded(|| shapes_data(8));
    let mut results = Vec::new();

    results.push(report(1, "worked examples", Some(Duration::from_secs(1)), worked_examples));
    results.push(report(2, "equivalence of the three criteria, family shapes <= 8 boxes", Some(Duration::from_secs(60)), || {
        single_threaded(|| from_checks(&data.iter().flat_map(membership_checks).collect::<Vec<_>>()))
    }));
    results.push(report(3, "stability properties, family shapes <= 8 boxes", Some(Duration::from_secs(120)), || {
        from_checks(&data.iter().flat_map(stability_checks).collect::<Vec<_>>())
    }));
    results.push(report(4, "intersections and codimension one", Some(Duration::from_secs(120)), || intersections(&data)));
    results.push(report(5, "strict quotient separation of distinct standard tableaux", None, || {
        from_checks(&data.iter().map(check_strict_separation).collect::<Vec<_>>())
    }));
    results.push(report(6, "shape (3,2,1) pair and R_6 sweep", Some(Duration::from_secs(1)), rho_sweep_pair));
    results.push(report(7, "involution and structure properties", None, structure_properties));

    let counterexample = r_minus_k_pair(&y("3,2,1")).unwrap();
    assert_eq!(counterexample, (rs("1,2,5/4,6/3"), st("1,2,5/3,4/6")));
    assert!(results.iter().all(|&ok| ok), "acceptance criteria failed: {results:?}");
}
