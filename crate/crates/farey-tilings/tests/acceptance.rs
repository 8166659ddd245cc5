//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::*;
use farey_tilings::cube::stabilizer_search;
use farey_tilings::farey::reconstruct_path;
use farey_tilings::fibonacci::h_orbit;
use farey_tilings::hypertiling::{cross_sections, synchronisation_violations};
use farey_tilings::tiling::{gamma0_witness, recurrence_coefficients, scale_down};
use farey_tilings::*;
use num_traits::Signed;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Debug>(e: E) -> String {
    format!("{e:?}")
}

fn criterion1() -> Outcome {
    let t = construct_tiling(&int(1), &int(3), &nine_gamma(), &nine_delta()).map_err(err)?;
    ensure!(t == nine_tiling(), "constructed tiling differs from the reference 9-tiling");
    let p = tameness_parameters(&t).map_err(err)?;
    ensure!(p == TamenessParams::from_i64(1, 3, 1, 3), "parameters {p}");
    let (n, rt) = scale_down(&t).map_err(err)?;
    ensure!(n == int(3), "scale factor {n}");
    for (p, row) in nine_tiling_sl2_thirds().iter().enumerate() {
        for (q, &v) in row.iter().enumerate() {
            let (i, j) = (p as i64 - 3, q as i64 - 3);
            ensure!(*rt.get(i, j) == rat(v, 3), "entry ({i},{j}) is {}", rt.get(i, j));
        }
    }
    ensure!(rt.block_determinant() == Some(rat(1, 1)), "scaled tiling is not SL2");
    Ok(())
}

fn random_construction(rng: &mut StdRng) -> (TamenessParams, FareyPath, FareyPath, Tiling) {
    let k = rng.gen_range(1..=3);
    let l = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
    let (r, s) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
    let (m, n) = (rng.gen_range(3..=8), rng.gen_range(3..=8));
    let gamma = random_path(rng, r, m);
    let delta = random_path(rng, s, n);
    let t = construct_tiling(&int(k), &int(l), &gamma, &delta).expect("minimal paths");
    (TamenessParams::from_i64(k, l, r, s), gamma, delta, t)
}

fn criterion2() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2);
    for case in 0..200 {
        let (params, gamma, delta, t) = random_construction(&mut rng);
        let d = decompose_tiling(&t).map_err(|e| format!("case {case}: {e:?}"))?;
        ensure!(d.params == params, "case {case}: parameters {} vs {}", d.params, params);
        let back = construct_tiling(&d.params.k, &d.params.l, &d.gamma, &d.delta).map_err(err)?;
        ensure!(back == t, "case {case}: reconstruction differs");
        ensure!(
            gamma0_witness(&params.l, (&gamma, &delta), (&d.gamma, &d.delta)).is_some(),
            "case {case}: no Γ0(L) element relates the path pairs"
        );
    }
    Ok(())
}

fn rs_identity(t: &Tiling) -> Outcome {
    let n = verify_n_tiling(t).map_err(err)?;
    let p = tameness_parameters(t).map_err(err)?;
    ensure!(&p.r * &p.s * t.all_minors_gcd() == n.abs(), "R S gcd(minors) != |N| for {p}");
    Ok(())
}

fn criterion3() -> Outcome {
    rs_identity(&nine_tiling())?;
    let f = frieze_from_path(&width7_path(), &int(1)).map_err(err)?;
    rs_identity(&f.scaled_tiling((0, 9), (-4, 5)).map_err(err)?)?;
    for axis in 0..3 {
        for t in cross_sections(&unit_hyper(), axis).map_err(err)? {
            rs_identity(&t)?;
        }
    }
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..100 {
        rs_identity(&random_construction(&mut rng).3)?;
    }
    Ok(())
}

fn criterion4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let (mut engineered, mut signed) = (0, 0);
    for case in 0..100 {
        let k = int(rng.gen_range(1..=3));
        let l = int(rng.gen_range(1..=4));
        let (gamma, delta) = if case % 2 == 0 {
            // Rejection sampling for (γ, Lδ) compatible and clockwise.
            let mut tries = 0;
            loop {
                tries += 1;
                ensure!(tries < 100_000, "case {case}: no compatible pair found");
                let (r, m) = (rng.gen_range(1..=3), rng.gen_range(3..=6));
                let g = random_clockwise_path(&mut rng, r, m);
                let (s, n) = (rng.gen_range(1..=3), rng.gen_range(3..=6));
                let d = random_clockwise_path(&mut rng, s, n);
                if farey_tilings::farey::are_strictly_compatible(&g, &d.scaled(&l).map_err(err)?) {
                    engineered += 1;
                    break (g, d);
                }
            }
        } else {
            let (r, m, s, n) = (rng.gen_range(1..=3), rng.gen_range(3..=6), rng.gen_range(1..=3), rng.gen_range(3..=6));
            (random_path(&mut rng, r, m), random_path(&mut rng, s, n))
        };
        let t = construct_tiling(&k, &l, &gamma, &delta).map_err(err)?;
        let from_paths = positivity_from_paths(&k, &l, &gamma, &delta).map_err(err)?;
        let direct = classify_sign(&t);
        ensure!(from_paths == direct, "case {case}: paths say {from_paths}, entries say {direct}");
        if case % 2 == 0 {
            ensure!(direct != SignClass::Mixed, "case {case}: engineered pair gives mixed signs");
            signed += 1;
        }
    }
    ensure!(engineered == 50 && signed == 50, "engineered {engineered}, signed {signed}");
    let fig = positivity_from_paths(&int(1), &int(3), &nine_gamma(), &nine_delta()).map_err(err)?;
    ensure!(fig == SignClass::Positive, "reference path pair gives {fig}");
    Ok(())
}

/// Compares `entry` with the doubled printed rows of the rational frieze, trying every
/// horizontal shift and both reading directions.
fn matches_doubled_rows(entry: impl Fn(i64, i64) -> Rat) -> bool {
    let rows = width7_rows_doubled();
    (-20..=20).step_by(2).any(|c: i64| {
        [1i64, -1].iter().any(|&dir| {
            rows.iter().enumerate().all(|(r, row)| {
                let off = if r % 2 == 0 { 2 } else { 1 };
                row.iter().enumerate().all(|(t, &v)| {
                    let s = dir * (off + 2 * t as i64) + c;
                    let d = r as i64;
                    entry((s + d) / 2, (s - d) / 2) == rat(v, 1)
                })
            })
        })
    })
}

fn criterion5() -> Outcome {
    let f = frieze_from_path(&width7_path(), &int(1)).map_err(err)?;
    let want: Vec<Rat> =
        [(1, 1), (3, 2), (5, 1), (1, 1), (5, 2), (1, 1), (6, 1)].iter().map(|&(n, d)| rat(n, d)).collect();
    ensure!(f.quiddity_cycle() == want, "quiddity {:?}", f.quiddity_cycle());
    ensure!(matches_doubled_rows(|i, j| f.entry(i, j) * rat(2, 1)), "frieze differs from the reference width-7 frieze");
    ensure!(!matches_doubled_rows(|i, j| f.entry(i, j) * rat(3, 1)), "row matcher accepts a wrong frieze");
    let p = path_from_frieze(&f).map_err(err)?;
    ensure!(
        p.canonical_form().map_err(err)?.0 == width7_path().canonical_form().map_err(err)?.0,
        "recovered path is not SL2-equivalent"
    );
    ensure!(frieze_from_path(&p, &int(1)).map_err(err)? == f, "round trip changes the frieze");
    let n = f.width() as i64;
    for i in -n..2 * n {
        for j in -n..2 * n {
            ensure!(f.entry(i + n, j) == -f.entry(i, j), "anti-periodicity fails at ({i},{j})");
            ensure!(f.entry(i, j) == f.entry(j, i - n), "glide fails at ({i},{j})");
        }
    }
    Ok(())
}

fn decagon() -> WeightedPolygon {
    let poly = TriangulatedPolygon::new(10, &[(1, 9), (1, 8), (2, 8), (2, 5), (5, 8), (5, 7), (3, 5)]).unwrap();
    let marked = [(0, 1), (1, 2), (2, 1), (4, 1), (5, 2), (6, 1), (8, 1)];
    WeightedPolygon::new(poly, marked.iter().map(|&(v, w)| (v, int(w))).collect()).unwrap()
}

fn criterion6() -> Outcome {
    let (n, labels) = weighted_polygon_quiddity(&decagon()).map_err(err)?;
    ensure!(n == int(2), "N = {n}");
    ensure!(labels == [2, 3, 10, 2, 5, 2, 12].map(int).to_vec(), "labels {labels:?}");
    let f = frieze_from_weighted_polygon(&decagon()).map_err(err)?;
    ensure!(*f.denom() == int(2), "denominator {}", f.denom());
    ensure!(
        matches_doubled_rows(|i, j| Rat::from_integer(f.scaled_entry(i, j))),
        "integer frieze is not twice the reference frieze"
    );
    Ok(())
}

fn criterion7() -> Outcome {
    let [g1, g2, g3] = unit_hyper_paths();
    let h = construct_hypertiling(&BhargavaCube::unit(), [&g1, &g2, &g3]).map_err(err)?;
    ensure!(h == unit_hyper(), "constructed hypertiling differs from the reference unit-cube hypertiling");
    ensure!(verify_hypertiling(&h).map_err(err)? == int(1), "hyperdeterminant is not 1");
    // The printed cross sections are the layers of fixed third index.
    let ns: Vec<Int> =
        cross_sections(&h, 2).map_err(err)?.iter().map(verify_n_tiling).collect::<Result<_, _>>().map_err(err)?;
    ensure!(ns == [1, 6, 15, 2, 10].map(int).to_vec(), "cross-section determinants {ns:?}");
    let paths = decompose_unit_hypertiling(&h).map_err(err)?;
    let back = construct_hypertiling(&BhargavaCube::unit(), [&paths[0], &paths[1], &paths[2]]).map_err(err)?;
    ensure!(back == h, "decomposition does not reconstruct");
    let related = unit_cube_stabilizer()
        .iter()
        .any(|t| (0..3).all(|a| [&g1, &g2, &g3][a].apply(&t.0[a].transpose()).map_or(false, |p| p == paths[a])));
    ensure!(related, "recovered paths are not related by a stabilizer element");
    Ok(())
}

fn criterion8() -> Outcome {
    let h = sixty_five_array();
    for axis in 0..3 {
        for t in cross_sections(&h, axis).map_err(err)? {
            ensure!(is_tame(&t), "a cross section along axis {axis} is not tame");
        }
    }
    ensure!(!is_synchronised(&h), "array is synchronised");
    let witness = [[8, -1], [1, -1], [4, -7]];
    let swapped = witness.map(|[x, y]| [y, x]);
    let found =
        synchronisation_violations(&h).iter().any(|v| v.stack_i64() == Some(witness) || v.stack_i64() == Some(swapped));
    ensure!(found, "witness stack (8,-1;1,-1;4,-7) not reported");
    match verify_hypertiling(&h) {
        Ok(n) => ensure!(n == int(65), "common hyperdeterminant {n}, expected 65"),
        Err(e) => {
            let (b0, b1) = (h.block(0, 0, 0).hyperdet(), h.block(0, 0, 1).hyperdet());
            return Err(format!("expected hyperdeterminant 65 on every block; blocks give {b0} and {b1} ({e})"));
        }
    }
    Ok(())
}

fn criterion9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    for case in 0..200 {
        let c = random_unit_cube(&mut rng);
        let t = normalize_unit_cube(&c).map_err(|e| format!("case {case} {c}: {e:?}"))?;
        ensure!(t.is_sl2(), "case {case}: witness not in SL2^3");
        ensure!(act_triple(&t, &BhargavaCube::unit()) == c, "case {case}: witness does not reproduce {c}");
    }
    Ok(())
}

fn criterion10() -> Outcome {
    let found: BTreeSet<Triple> = stabilizer_search(2)
        .iter()
        .map(|t| {
            Triple::new(
                Mat2::from_i64(t[0][0], t[0][1], t[0][2], t[0][3]),
                Mat2::from_i64(t[1][0], t[1][1], t[1][2], t[1][3]),
                Mat2::from_i64(t[2][0], t[2][1], t[2][2], t[2][3]),
            )
        })
        .collect();
    let listed: BTreeSet<Triple> = unit_cube_stabilizer().into_iter().collect();
    ensure!(found == listed, "search found {} triples: {:?}", found.len(), found);
    Ok(())
}

fn criterion11() -> Outcome {
    let h = fibonacci_hypertiling(-4, [(0, 5), (0, 5), (0, 2)]).map_err(err)?;
    let want = Hypertiling::from_layers_i64([0, 0, 0], &fib_layers()).map_err(err)?;
    ensure!(h == want, "Fibonacci window differs");
    for axis in 0..3 {
        let ns: BTreeSet<Int> = cross_sections(&h, axis)
            .map_err(err)?
            .iter()
            .map(verify_n_tiling)
            .collect::<Result<_, _>>()
            .map_err(err)?;
        ensure!(ns.len() == 1 && ns.iter().all(|n| n.abs() == int(1)), "axis {axis} determinants {ns:?}");
    }
    let [d0, d1, d2] = h.dims();
    for p in 0..d0 - 1 {
        for q in 0..d1 - 1 {
            for r in 0..d2 - 1 {
                ensure!(h.block(p, q, r).hyperdet() == int(5), "block ({p},{q},{r})");
            }
        }
    }
    ensure!(
        fib_pair_oracle(1000) == farey_tilings::fibonacci::fibonacci_pairs(1000),
        "solution pairs differ from Fibonacci pairs"
    );
    let found: BTreeSet<BhargavaCube> = sl2_cross_section_cubes(100).into_iter().collect();
    let mut predicted = BTreeSet::new();
    for n in -4..=4 {
        for c in h_orbit(&make_an(n)) {
            if c.entries().iter().all(|v| v.abs() <= int(100)) {
                predicted.insert(c);
            }
        }
    }
    let stray: Vec<_> = found.difference(&predicted).collect();
    ensure!(stray.is_empty(), "{} cubes outside the orbits, e.g. {}", stray.len(), stray[0]);
    ensure!(found == predicted, "enumeration misses {} orbit points", predicted.len() - found.len());
    Ok(())
}

fn run_property<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config { cases: 128, failure_persistence: None, ..Config::default() });
    runner.run(&strategy, test).map_err(|e| format!("{name}: {e}"))
}

fn criterion12() -> Outcome {
    let seed = any::<u64>();
    run_property("itinerary round trip", seed.clone(), |s| {
        let mut rng = StdRng::seed_from_u64(s);
        let (r, n) = (rng.gen_range(1..=6), rng.gen_range(3..=10));
        let p = random_path(&mut rng, r, n);
        let e = p.base() + rng.gen_range(0..p.len() as i64 - 1);
        let back = reconstruct_path(&p.itinerary(), e, p.get(e).unwrap(), p.get(e + 1).unwrap())
            .map_err(|e| TestCaseError::fail(err(e)))?;
        prop_assert_eq!(back, p);
        Ok(())
    })?;
    run_property("canonical form invariance", seed.clone(), |s| {
        let mut rng = StdRng::seed_from_u64(s);
        let (r, n) = (rng.gen_range(1..=6), rng.gen_range(3..=10));
        let p = random_path(&mut rng, r, n);
        let q = p.apply(&random_sl2(&mut rng, 30)).unwrap();
        let (cp, x) = p.canonical_form().unwrap();
        prop_assert_eq!(&cp, &q.canonical_form().unwrap().0);
        prop_assert_eq!(p.apply(&x).unwrap(), cp);
        Ok(())
    })?;
    run_property("recurrence equals itinerary", seed.clone(), |s| {
        let mut rng = StdRng::seed_from_u64(s);
        let (_, gamma, delta, t) = random_construction(&mut rng);
        let rec = recurrence_coefficients(&t).unwrap();
        prop_assert_eq!(rec.rows, gamma.itinerary().values);
        prop_assert_eq!(rec.cols, delta.itinerary().values);
        Ok(())
    })?;
    let matrix = (1usize..=5, 1usize..=5)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-30i64..=30, r * c)));
    run_property("Smith normal form", matrix, |(r, c, data)| {
        let m = IntMatrix::new(r, c, data.into_iter().map(int).collect()).unwrap();
        let sm = smith_normal_form(&m);
        prop_assert_eq!(&sm.u.mul(&sm.s).unwrap().mul(&sm.v).unwrap(), &m);
        prop_assert_eq!(&sm.u_inv.mul(&m).unwrap().mul(&sm.v_inv).unwrap(), &sm.s);
        prop_assert_eq!(sm.u.mul(&sm.u_inv).unwrap(), IntMatrix::identity(r));
        prop_assert_eq!(sm.v.mul(&sm.v_inv).unwrap(), IntMatrix::identity(c));
        let diag = sm.diagonal();
        for a in 0..r {
            for b in 0..c {
                prop_assert!(a == b || sm.s.get(a, b) == &int(0));
            }
        }
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative() && !w[1].is_negative());
            let divides = if w[0] == int(0) { w[1] == int(0) } else { (&w[1] % &w[0]) == int(0) };
            prop_assert!(divides);
        }
        Ok(())
    })?;
    run_property("JSON round trip", seed, |s| {
        let mut rng = StdRng::seed_from_u64(s);
        let limits = Limits::default();
        let (params, gamma, delta, t) = random_construction(&mut rng);
        let cube = random_nonsingular_cube(&mut rng, 1_000_000);
        let big = cube.act_axis(0, &random_sl2(&mut rng, 1_000_000_000));
        let h = construct_hypertiling(&big, [&gamma, &delta, &gamma]).unwrap();
        let dec = TilingDecomposition { params, gamma: gamma.clone(), delta };
        fn check<T: JsonCodec + PartialEq + std::fmt::Debug>(x: &T, limits: &Limits) -> Result<(), TestCaseError> {
            let text = encode(x);
            let back: T = decode(&text, limits).map_err(|e| TestCaseError::fail(err(e)))?;
            prop_assert_eq!(&back, x);
            prop_assert_eq!(encode(&back), text);
            Ok(())
        }
        check(&gamma, &limits)?;
        check(&t, &limits)?;
        check(&big, &limits)?;
        check(&h, &limits)?;
        check(&dec, &limits)?;
        Ok(())
    })
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("1 tiling from paths reproduces the reference 9-tiling", criterion1),
        ("2 tiling decomposition round trip", criterion2),
        ("3 R S gcd(minors) = |N|", criterion3),
        ("4 sign class from paths", criterion4),
        ("5 frieze from closed path", criterion5),
        ("6 weighted decagon frieze", criterion6),
        ("7 unit-cube hypertiling", criterion7),
        ("8 synchronisation counterexample", criterion8),
        ("9 unit cube normalization", criterion9),
        ("10 unit cube stabilizer search", criterion10),
        ("11 Fibonacci hypertiling and orbits", criterion11),
        ("12 property suites", criterion12),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {name} ({secs:.2}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
