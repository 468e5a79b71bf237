//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

mod common;

use std::sync::Arc;
use std::time::Instant;

use cayley::aut::{check_propagation, colour_group, full_aut, left_translations};
use cayley::classify::{check_boolean_factor_lemma, find_a0, find_dicyclic_witness};
use cayley::families::smallsuite;
use cayley::presentation::h_presentation;
use cayley::rigidity::{
    k_example, optimality_example_h, optimality_example_k, optimality_example_product,
    optimality_example_q8, q8_example, SearchMode, SearchOptions,
};
use cayley::{
    build_group, cayley_index_search, classify, cyclic, h_group, in_stabilizer, quaternion,
    todd_coxeter, verify_quantitative, xi_of_group, xi_stabilizer, Case, CayleyGraph, FiniteGroup,
    GeneratingSet, Permutation,
};
use common::*;
use itertools::Itertools;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: cayley::Error) -> String {
    e.to_string()
}

fn genset(g: &Arc<FiniteGroup>, elems: &[usize]) -> Result<GeneratingSet, String> {
    GeneratingSet::new(g.clone(), elems, true).map_err(err)
}

fn classification_suite() -> Outcome {
    let start = Instant::now();
    let suite = smallsuite();
    for spec in &suite {
        let g = Arc::new(spec.build().map_err(err)?);
        let c = classify(&g);
        let xi = xi_of_group(&g).map_err(err)?;
        ensure(xi.order() == c.predicted_xi_order, || {
            format!(
                "{spec}: |xi_G| = {} but predicted {}",
                xi.order(),
                c.predicted_xi_order
            )
        })?;
        let id = Permutation::identity(g.order());
        let expected = match c.case {
            Case::Boolean | Case::Neither => vec![id],
            Case::AbelianOrderGe3 => sorted(vec![id, inverse_map(&g)]),
            Case::OtherGeneralizedDicyclic => {
                let w = c.witness.as_ref().ok_or(format!("{spec}: no witness"))?;
                sorted(vec![id, psi(&g, w.abelian_subgroup())])
            }
            Case::Q8TimesBoolean => {
                let d = c
                    .decomposition
                    .as_ref()
                    .ok_or(format!("{spec}: no decomposition"))?;
                sign_maps(&g, d.i, d.j, &d.boolean_factor)
            }
        };
        ensure(xi.elements() == expected.as_slice(), || {
            format!("{spec}: xi_G differs from the predicted maps")
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 120.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{} groups in {secs:.2}s", suite.len()))
}

fn brute_force_oracle() -> Outcome {
    let mut checked = 0;
    for spec in smallsuite() {
        let g = Arc::new(spec.build().map_err(err)?);
        if g.order() > 8 {
            continue;
        }
        let all = all_symmetric_gensets(&g);
        let smallest = all.iter().min_by_key(|s| s.len()).unwrap().clone();
        let full: Vec<usize> = g.elements().filter(|&x| x != g.identity()).collect();
        for s in [smallest, full] {
            let gs = genset(&g, &s)?;
            let graph = CayleyGraph::new(&gs);
            let xi = xi_stabilizer(&graph).map_err(err)?;
            ensure(xi.elements() == brute_xi(&g, &s).as_slice(), || {
                format!("{spec} S={{{}}}: xi differs from brute force", gs.spec())
            })?;
            let aut = full_aut(&graph).map_err(err)?.order();
            let oracle = brute_aut_order(&g, &s);
            ensure(aut == oracle, || {
                format!(
                    "{spec} S={{{}}}: |Aut| {aut} vs brute force {oracle}",
                    gs.spec()
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs"))
}

fn q8_universality() -> Outcome {
    let q8 = Arc::new(quaternion());
    let i = q8.resolve("i").map_err(err)?;
    let j = q8.resolve("j").map_err(err)?;
    let expected = sign_maps(&q8, i, j, &[q8.identity()]);
    let sets = all_symmetric_gensets(&q8);
    for s in &sets {
        let graph = CayleyGraph::new(&genset(&q8, s)?);
        let xi = xi_stabilizer(&graph).map_err(err)?;
        ensure(xi.elements() == expected.as_slice(), || {
            format!(
                "S={{{}}}: xi is not the eight sign maps",
                graph.genset().spec()
            )
        })?;
        let big = colour_group(&graph).map_err(err)?.order();
        ensure(big == 64, || {
            format!("S={{{}}}: |Xi_S| = {big}", graph.genset().spec())
        })?;
    }
    Ok(format!("{} generating sets", sets.len()))
}

fn quantitative_suite() -> Outcome {
    let start = Instant::now();
    let named = |spec: &str, gens: &str| -> Result<GeneratingSet, String> {
        let g = Arc::new(build_group(spec).map_err(err)?);
        GeneratingSet::parse(g, gens).map_err(err)
    };
    let cases: Vec<(&str, GeneratingSet, usize)> = vec![
        (
            "(Z/2)^3",
            named("abelian:2,2,2", "(1,0,0),(0,1,0),(0,0,1)")?,
            1,
        ),
        ("Z/6", named("cyclic:6", "1")?, 2),
        ("Z/3xZ/3", named("abelian:3,3", "(1,0),(0,1)")?, 2),
        ("Q8xZ/2", q8_example(1).map_err(err)?.0, 3),
        ("H_3", h_group(3).map_err(err)?.1, 3),
        ("K_1", k_example(1).map_err(err)?, 3),
        ("H_4", h_group(4).map_err(err)?.1, 3),
        ("H_5", h_group(5).map_err(err)?.1, 3),
        ("S4", named("symmetric:4", "(1 2),(1 2 3 4)")?, 3),
    ];
    for (name, s, k) in &cases {
        let r = verify_quantitative(s).map_err(err)?;
        ensure(r.pass && r.radius == *k, || {
            format!("{name}: pass {} radius {} (want {k})", r.pass, r.radius)
        })?;
        let g = s.group();
        let b = ball(g, s.elements(), *k);
        let xi_ball = xi_stabilizer(&CayleyGraph::new(&genset(g, &b)?)).map_err(err)?;
        let xi_g = xi_of_group(g).map_err(err)?;
        ensure(xi_ball.elements() == xi_g.elements(), || {
            format!("{name}: xi of the radius-{k} ball differs from xi_G")
        })?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 300.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{} pairs in {secs:.2}s", cases.len()))
}

fn optimality_regressions() -> Outcome {
    for (m, n) in [(3, 3), (3, 4), (4, 5)] {
        let r = optimality_example_product(m, n).map_err(err)?;
        ensure(r.xi_s_order >= 4 && r.xi_ball2_order == 2, || {
            format!(
                "Z/{m}xZ/{n}: |xi_S| {} |xi_S^<=2| {}",
                r.xi_s_order, r.xi_ball2_order
            )
        })?;
    }
    for n in 1..=2 {
        let (s, mixed) = q8_example(n).map_err(err)?;
        let g = s.group();
        let b2 = ball(g, s.elements(), 2);
        let full: Vec<usize> = g.elements().filter(|&x| x != g.identity()).collect();
        let oracle =
            is_colour_aut(g, &b2, mixed.images()) && !is_colour_aut(g, &full, mixed.images());
        let r = optimality_example_q8(n).map_err(err)?;
        ensure(
            oracle && r.mixed_map_in_ball2 && !r.mixed_map_in_xi_group,
            || format!("Q8x(Z/2)^{n}: mixed map not in xi_S^<=2 \\ xi_G"),
        )?;
    }
    for n in 2..=5 {
        let (g, s) = h_group(n).map_err(err)?;
        let b2 = ball(&g, s.elements(), 2);
        let eta = inverse_map(&g);
        let r = optimality_example_h(n).map_err(err)?;
        ensure(
            is_colour_aut(&g, &b2, eta.images()) && r.eta_in_ball2,
            || format!("H_{n}: eta not in xi_S^<=2"),
        )?;
        if n >= 4 {
            ensure(r.xi_ball3_order == 1, || {
                format!("H_{n}: |xi_S^<=3| = {}", r.xi_ball3_order)
            })?;
        }
    }
    for n in 1..=2 {
        let t = k_example(n).map_err(err)?;
        let g = t.group();
        let eta = inverse_map(g);
        let r = optimality_example_k(n).map_err(err)?;
        ensure(
            is_colour_aut(g, t.elements(), eta.images()) && r.eta_in_xi_t,
            || format!("K_{n}: eta not in xi_T"),
        )?;
    }
    Ok("product 3x3 3x4 4x5, q8 1-2, h 2-5, k 1-2".into())
}

fn coset_enumeration() -> Outcome {
    for n in 2..=6 {
        let (g, _) = todd_coxeter(&h_presentation(n), 1 << 20).map_err(err)?;
        ensure(g.order() == 1 << (n + 1), || {
            format!("|H_{n}| = {}", g.order())
        })?;
    }
    let (h2, _) = todd_coxeter(&h_presentation(2), 1 << 20).map_err(err)?;
    let q8 = quaternion();
    let src: Vec<usize> = h2.elements().filter(|&x| x != h2.identity()).collect();
    let dst: Vec<usize> = q8.elements().filter(|&x| x != q8.identity()).collect();
    let iso = dst.iter().copied().permutations(dst.len()).find(|imgs| {
        let mut f = vec![q8.identity(); h2.order()];
        for (&x, &y) in src.iter().zip(imgs) {
            f[x] = y;
        }
        h2.elements()
            .all(|a| h2.elements().all(|b| f[h2.mul(a, b)] == q8.mul(f[a], f[b])))
    });
    ensure(iso.is_some(), || "H_2 is not isomorphic to Q8".into())?;
    Ok("|H_n| = 2^(n+1) for n = 2..6, H_2 ~ Q8".into())
}

fn lemma_suite() -> Outcome {
    let z2 = cyclic(2).map_err(err)?;
    let h3 = h_group(3).map_err(err)?.0;
    for (name, g) in [
        ("Q8", quaternion()),
        ("Z/5", cyclic(5).map_err(err)?),
        ("H_3", h3),
    ] {
        ensure(check_boolean_factor_lemma(&g, &z2).map_err(err)?, || {
            format!("boolean factor lemma fails for {name} x Z/2")
        })?;
    }
    let mut a0_groups = 0;
    for spec in smallsuite() {
        let g = spec.build().map_err(err)?;
        let c = classify(&g);
        let Some(w) = find_dicyclic_witness(&g) else {
            continue;
        };
        let a0 = find_a0(&g, &w);
        match c.case {
            Case::OtherGeneralizedDicyclic => {
                let a = a0.map_err(|e| format!("{spec}: find_a0 failed: {e}"))?;
                let (a2, x2) = (g.mul(a, a), g.mul(w.x(), w.x()));
                ensure(
                    w.abelian_subgroup().contains(&a) && a2 != g.identity() && a2 != x2,
                    || format!("{spec}: a0 does not satisfy a0^2 outside {{1, x^2}}"),
                )?;
                a0_groups += 1;
            }
            Case::Q8TimesBoolean => ensure(a0.is_err(), || {
                format!("{spec}: find_a0 succeeded on a Q8 x Boolean group")
            })?,
            other => return Err(format!("{spec}: witness found for case {other:?}")),
        }
    }

    let (s1, _) = q8_example(1).map_err(err)?;
    let g = s1.group().clone();
    let (s, t) = (
        g.resolve("(i,1)").map_err(err)?,
        g.resolve("(j,1)").map_err(err)?,
    );
    let t_graph = CayleyGraph::new(&s1.ball(3));
    ensure(
        check_propagation(&t_graph, &s1, &[s, t, g.mul(s, t)]).map_err(err)?,
        || "propagation fails for Q8 x Z/2 with S_1^<=3".into(),
    )?;

    let z6 = Arc::new(cyclic(6).map_err(err)?);
    let s = GeneratingSet::parse(z6, "1").map_err(err)?;
    ensure(
        check_propagation(&CayleyGraph::new(&s.ball(2)), &s, &[1]).map_err(err)?,
        || "propagation fails for Z/6".into(),
    )?;

    let (h4, s4) = h_group(4).map_err(err)?;
    let t4 = CayleyGraph::new(&s4.ball(2));
    ensure(!check_propagation(&t4, &s4, &[]).map_err(err)?, || {
        "propagation premise should fail for H_4 with S0 empty".into()
    })?;
    ensure(in_stabilizer(&t4, &inverse_map(&h4)), || {
        "eta not in xi of H_4 ball".into()
    })?;

    Ok(format!(
        "3 lemma pairs, a0 on {a0_groups} groups, 3 propagation instances"
    ))
}

fn cayley_index() -> Outcome {
    let mut parts = Vec::new();
    for (spec, pinned) in [
        ("cyclic:5", Some(2)),
        ("abelian:2,2", Some(2)),
        ("cyclic:2", Some(1)),
        ("cyclic:6", None),
    ] {
        let g = Arc::new(build_group(spec).map_err(err)?);
        let oracle = all_symmetric_gensets(&g)
            .iter()
            .map(|s| brute_aut_order(&g, s) / g.order() as u128)
            .min()
            .unwrap();
        let start = Instant::now();
        let opts = SearchOptions {
            mode: SearchMode::Exhaustive,
            ..SearchOptions::default()
        };
        let r = cayley_index_search(&g, opts).map_err(err)?;
        let secs = start.elapsed().as_secs_f64();
        ensure(r.exhaustive && r.best_index == oracle, || {
            format!("{spec}: search {} vs oracle {oracle}", r.best_index)
        })?;
        if let Some(p) = pinned {
            ensure(oracle == p, || {
                format!("{spec}: oracle {oracle}, expected {p}")
            })?;
        }
        ensure(secs < 30.0, || format!("{spec}: took {secs:.1}s"))?;
        parts.push(format!("{spec}={}", r.best_index));
    }
    Ok(parts.join(" "))
}

fn invariants_one(g: &Arc<FiniteGroup>, mask: u64, extra: u64) -> Result<(), String> {
    let n = g.order();
    for x in g.elements() {
        let row: Vec<usize> = g.elements().map(|y| g.mul(x, y)).sorted().collect();
        let col: Vec<usize> = g.elements().map(|y| g.mul(y, x)).sorted().collect();
        ensure(row == (0..n).collect::<Vec<_>>() && col == row, || {
            "not a Latin square".into()
        })?;
    }

    let classes = inverse_classes(g);
    let pick = |m: u64| -> Vec<usize> {
        classes
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> (i % 64) & 1 == 1)
            .flat_map(|(_, c)| c.iter().copied())
            .collect()
    };
    let mut s = pick(mask);
    for c in &classes {
        if generates(g, &s) {
            break;
        }
        s.extend(c);
    }
    let mut t = s.clone();
    t.extend(pick(extra));
    let gs = genset(g, &s)?;
    let gt = genset(g, &t)?;

    let graph = CayleyGraph::new(&gs);
    let xi = xi_stabilizer(&graph).map_err(err)?;
    let id = Permutation::identity(n);
    ensure(xi.contains(&id), || "xi lacks the identity".into())?;
    for p in xi.elements() {
        ensure(
            p.fixes(g.identity()) && is_colour_aut(g, gs.elements(), p.images()),
            || "xi element is not a colour automorphism fixing 1".into(),
        )?;
        ensure(xi.contains(&p.inverse()), || {
            "xi not closed under inverse".into()
        })?;
        for q in xi.elements() {
            ensure(xi.contains(&p.compose(q)), || {
                "xi not closed under composition".into()
            })?;
        }
    }

    let colour = colour_group(&graph).map_err(err)?;
    ensure(colour.order() == (n * xi.order()) as u128, || {
        format!(
            "|Xi_S| = {} but |G||xi_S| = {}",
            colour.order(),
            n * xi.order()
        )
    })?;
    let full = full_aut(&graph).map_err(err)?;
    ensure(
        colour.order() <= full.order() && full.order() % n as u128 == 0,
        || "order chain broken".into(),
    )?;
    let colour_elems = colour.elements().ok_or("colour group not explicit")?;
    for p in left_translations(&graph).elements().unwrap() {
        ensure(colour_elems.binary_search(p).is_ok(), || {
            "translation not colour-preserving".into()
        })?;
    }
    for p in colour_elems {
        ensure(is_colour_aut(g, gs.elements(), p.images()), || {
            "bad colour automorphism".into()
        })?;
        let in_full = full
            .contains(p)
            .unwrap_or_else(|| is_graph_aut(g, gs.elements(), p.images()));
        ensure(in_full, || {
            "colour automorphism outside the full group".into()
        })?;
    }

    let xi_t = xi_stabilizer(&CayleyGraph::new(&gt)).map_err(err)?;
    ensure(xi_t.is_subset_of(&xi), || {
        "anti-monotonicity violated".into()
    })?;
    Ok(())
}

fn structural_invariants() -> Outcome {
    let groups: Vec<Arc<FiniteGroup>> = smallsuite()
        .iter()
        .map(|s| s.build().map(Arc::new))
        .filter_ok(|g| g.order() <= 16)
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let config = Config {
        cases: 200,
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner =
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let strategy = (0..groups.len(), any::<u64>(), any::<u64>());
    runner
        .run(&strategy, |(gi, mask, extra)| {
            invariants_one(&groups[gi], mask, extra)
                .map_err(|e| TestCaseError::fail(format!("{}: {e}", groups[gi].label())))
        })
        .map_err(|e| e.to_string())?;
    Ok("200 random pairs, 0 violations".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("classification suite", classification_suite),
        ("brute-force oracle equivalence", brute_force_oracle),
        ("Q8 stabilizer universality", q8_universality),
        ("quantitative suite", quantitative_suite),
        ("optimality regressions", optimality_regressions),
        ("coset enumeration", coset_enumeration),
        ("lemma suite", lemma_suite),
        ("Cayley index desk results", cayley_index),
        ("structural invariants", structural_invariants),
    ];
    let mut failed = 0;
    for (no, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.2}s]", no + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{secs:.2}s]", no + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
