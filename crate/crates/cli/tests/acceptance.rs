//! One PASS/FAIL line per acceptance criterion, then a single assertion that
//! every criterion passed.

use std::time::Instant;

use hilbert_cli::bench::{self, Suite};
use hilbert_core::engine::{count_in_ideal, MonomialsOfDegree, DEFAULT_ENUM_CAP};
use hilbert_core::parser::{parse_ideal, parse_order, parse_ring};
use hilbert_core::pascal::hf_two_generators;
use hilbert_core::{
    annihilator_decomposition, build_lcm_lattice, expand_series, hf, hf_lcm_lattice, hf_table,
    pascal_f, pascal_table, series_numerator, Count, EngineConfig, MethodKind, Monomial,
    MonomialIdeal, VariableOrder,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn seq(v: &[u64]) -> Vec<Count> {
    v.iter().map(|&x| Count::from(x)).collect()
}

fn show(v: &[Count]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn load(ring: &str, ideal: &str) -> MonomialIdeal {
    let r = parse_ring(ring).unwrap();
    parse_ideal(ideal, &r).unwrap()
}

fn all_methods(ideal: &MonomialIdeal, b_max: usize, expected: &[u64]) -> Outcome {
    let expected = seq(expected);
    for method in [
        MethodKind::Oracle,
        MethodKind::LcmLattice,
        MethodKind::Syzygy,
        MethodKind::Table,
    ] {
        let got = hf(ideal, b_max, method).map_err(|e| format!("{method}: {e}"))?;
        ensure(got == expected, || {
            format!("{method}: got {} expected {}", show(&got), show(&expected))
        })?;
    }
    Ok(())
}

fn pascal_rows() -> Outcome {
    let expected: [[u64; 8]; 8] = [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, 2, 3, 4, 5, 6, 7, 8],
        [1, 3, 6, 10, 15, 21, 28, 36],
        [1, 4, 10, 20, 35, 56, 84, 120],
        [1, 5, 15, 35, 70, 126, 210, 330],
        [1, 6, 21, 56, 126, 252, 462, 792],
        [1, 7, 28, 84, 210, 462, 924, 1716],
        [1, 8, 36, 120, 330, 792, 1716, 3432],
    ];
    let table = pascal_table(8, 7);
    for (a, row) in expected.iter().enumerate() {
        let got = table.row(a + 1).ok_or("missing row")?;
        ensure(got == seq(row).as_slice(), || {
            format!("row {}: {}", a + 1, show(got))
        })?;
    }
    Ok(())
}

fn principal_x5() -> Outcome {
    let i = load("x,y,z", "x^5");
    all_methods(&i, 9, &[1, 3, 6, 10, 15, 20, 25, 30, 35, 40])?;
    let auto = hf(&i, 9, MethodKind::Auto).map_err(|e| e.to_string())?;
    ensure(auto == seq(&[1, 3, 6, 10, 15, 20, 25, 30, 35, 40]), || {
        show(&auto)
    })
}

fn principal_xy2() -> Outcome {
    all_methods(&load("x,y,z", "x*y^2"), 6, &[1, 3, 6, 9, 12, 15, 18])
}

fn two_generators() -> Outcome {
    let expected = [1, 3, 6, 8, 9, 10, 11];
    let closed: Vec<Count> = (0..=6)
        .map(|b| hf_two_generators(3, 3, 3, 5, b).unwrap())
        .collect();
    ensure(closed == seq(&expected), || {
        format!("closed form: {}", show(&closed))
    })?;
    all_methods(&load("x,y,z", "x^2*y, x*z^2"), 6, &expected)
}

fn pure_powers() -> Outcome {
    all_methods(
        &load("x,y,z", "x^2, y^3"),
        9,
        &[1, 3, 5, 6, 6, 6, 6, 6, 6, 6],
    )
}

fn three_generators_with_cancellation() -> Outcome {
    let i = load("x,y,z", "x*z, y*z, x^2*y");
    all_methods(&i, 11, &[1, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4])?;
    let lattice = build_lcm_lattice(&i, 20).map_err(|e| e.to_string())?;
    let pairs: Vec<(usize, u64)> = lattice
        .cancel_adjacent()
        .pairs
        .iter()
        .map(|p| (p.layer, p.degree))
        .collect();
    ensure(pairs == [(1, 3), (2, 4)], || {
        format!("cancelled pairs {pairs:?}")
    })?;
    let with = hf_lcm_lattice(&i, 11, true, 20).map_err(|e| e.to_string())?;
    let without = hf_lcm_lattice(&i, 11, false, 20).map_err(|e| e.to_string())?;
    ensure(with == without, || "cancellation changed the result".into())
}

fn four_generators() -> Outcome {
    all_methods(
        &load("x,y,z", "x^2*y^3*z, x*z^3, x*y^4*z, x^2*z^2"),
        10,
        &[1, 3, 6, 10, 13, 16, 17, 18, 20, 22, 24],
    )
}

fn stanley_reisner_table() -> Outcome {
    let ring = parse_ring("x,xh,y,z,w").unwrap();
    let i = parse_ideal("x*xh, y*z*w", &ring).unwrap();
    let order = parse_order("x,xh,y,z,w", &ring).unwrap();
    let t = hf_table(&i, &order, 5, 7).map_err(|e| e.to_string())?;
    let row4 = seq(&[1, 4, 9, 16, 25, 36, 49, 64]);
    let row5 = seq(&[1, 5, 14, 29, 50, 77, 110, 149]);
    ensure(t.row(4) == Some(row4.as_slice()), || {
        format!("row 4: {:?}", t.row(4))
    })?;
    ensure(t.row(5) == Some(row5.as_slice()), || {
        format!("row 5: {:?}", t.row(5))
    })?;
    // (0:w) is M_1 = k[x,xh,y,z]/<x*xh> shifted by 2, i.e. row 4 moved right twice
    let mut shifted = seq(&[0, 0]);
    shifted.extend_from_slice(&row4[..6]);
    let ann = &t.rows()[4].annihilator;
    ensure(*ann == shifted, || format!("(0:w) = {}", show(ann)))
}

fn decomposition_over_yxz() -> Outcome {
    let ring = parse_ring("x,y,z").unwrap();
    let i = parse_ideal("y^6, x^3*y^5, x^2*y^2*z^2, x^3*z, x^2*y*z^3", &ring).unwrap();
    let order = parse_order("y,x,z", &ring).unwrap();
    let r = i.reindex_for_table(&order).map_err(|e| e.to_string())?;
    let err = |e: hilbert_core::HfError| e.to_string();

    let d1 = annihilator_decomposition(&r, &order, 1).map_err(err)?;
    ensure(
        d1.delta() == 1 && d1.leading_shift == Some(5) && d1.terms.is_empty(),
        || format!("stage y: {d1:?}"),
    )?;

    let d2 = annihilator_decomposition(&r, &order, 2).map_err(err)?;
    let y = MonomialIdeal::from_exponents(1, [vec![1]]).unwrap();
    ensure(
        d2.delta() == 0 && d2.terms.len() == 1 && d2.terms[0].ideal == y && d2.terms[0].shift == 7,
        || format!("stage x: {d2:?}"),
    )?;
    let mut engine = hilbert_core::Engine::default();
    let v = d2.evaluate(&mut engine, 9).map_err(err)?;
    let mut k7 = seq(&[0; 10]);
    k7[7] = Count::from(1u32);
    ensure(v == k7, || format!("HF((0:x)) = {}", show(&v)))?;

    // sub-ideals in (y, x) coordinates
    let d3 = annihilator_decomposition(&r, &order, 3).map_err(err)?;
    let shifts: Vec<u64> = d3.terms.iter().map(|t| t.shift).collect();
    ensure(d3.delta() == 0 && shifts == [3, 5, 5], || {
        format!("stage z shifts {shifts:?}")
    })?;
    let expected = [
        MonomialIdeal::from_exponents(2, [vec![5, 0]]).unwrap(),
        MonomialIdeal::from_exponents(2, [vec![4, 0], vec![0, 1]]).unwrap(),
        MonomialIdeal::from_exponents(2, [vec![0, 1], vec![1, 0]]).unwrap(),
    ];
    for (t, e) in d3.terms.iter().zip(&expected) {
        ensure(t.ideal.canonical() == e.canonical(), || {
            format!("stage z term {}: {:?}", t.generator, t.ideal)
        })?;
    }
    Ok(())
}

/// Generator count `0..=6`, exponents `0..=6`.
fn random_ideal(rng: &mut ChaCha8Rng, arity: usize) -> MonomialIdeal {
    let n = rng.gen_range(0..=6);
    MonomialIdeal::from_exponents(
        arity,
        (0..n).map(|_| {
            (0..arity)
                .map(|_| rng.gen_range(0..=6))
                .collect::<Vec<u32>>()
        }),
    )
    .unwrap()
}

fn property_suite() -> Outcome {
    const CASES: usize = 500;
    const B: usize = 15;
    let mut rng = ChaCha8Rng::seed_from_u64(0x4846);
    for case in 0..CASES {
        let arity = rng.gen_range(1..=5);
        let i = random_ideal(&mut rng, arity);
        let ctx = |what: &str| format!("case {case} {i:?}: {what}");

        let oracle = hf(&i, B, MethodKind::Oracle).map_err(|e| e.to_string())?;
        for m in [
            MethodKind::LcmLattice,
            MethodKind::Syzygy,
            MethodKind::Table,
        ] {
            ensure(hf(&i, B, m).unwrap() == oracle, || ctx(m.name()))?;
        }
        for (b, v) in oracle.iter().enumerate() {
            let inside = count_in_ideal(&i, b, DEFAULT_ENUM_CAP).unwrap();
            ensure(v + inside == pascal_f(arity, b as i64), || {
                ctx("rank-nullity")
            })?;
        }

        let mut gens = i.generators().to_vec();
        let n = gens.len();
        for k in (1..n).rev() {
            gens.swap(k, rng.gen_range(0..=k));
        }
        let shuffled = i.with_generators(gens).unwrap();
        let mut perm: Vec<usize> = (0..arity).collect();
        for k in (1..arity).rev() {
            perm.swap(k, rng.gen_range(0..=k));
        }
        let relabelled = i.relabel(&perm);
        for (name, other) in [
            ("generator permutation", &shuffled),
            ("variable relabel", &relabelled),
            ("minimalization", &i.minimalize()),
        ] {
            ensure(hf(other, B, MethodKind::Syzygy).unwrap() == oracle, || {
                ctx(name)
            })?;
            ensure(
                hf(other, B, MethodKind::LcmLattice).unwrap() == oracle,
                || ctx(name),
            )?;
        }

        let num = series_numerator(&i, 20).unwrap();
        ensure(expand_series(&num, B).unwrap() == oracle, || ctx("series"))?;

        let order = VariableOrder::new(perm).unwrap();
        let table = hf_table(&i, &order, arity + 2, B).unwrap();
        for a in arity + 1..=arity + 2 {
            let (prev, row) = (table.row(a - 1).unwrap(), table.row(a).unwrap());
            for b in 0..=B {
                let expect = if b == 0 {
                    prev[0].clone()
                } else {
                    &prev[b] + &row[b - 1]
                };
                ensure(row[b] == expect, || ctx("recurrence past the last stage"))?;
            }
        }
        for row in table.rows().iter().take(arity) {
            let a = row.stage;
            for b in 0..=10usize {
                let brute = MonomialsOfDegree::new(a, b as u32)
                    .filter(|g| {
                        let mut e = g.exponents().to_vec();
                        e[a - 1] += 1;
                        let xg = Monomial::new(e).unwrap();
                        !row.ideal.contains(g).unwrap() && row.ideal.contains(&xg).unwrap()
                    })
                    .count();
                ensure(row.annihilator[b] == Count::from(brute), || {
                    ctx(&format!("annihilator stage {a} degree {b}"))
                })?;
            }
        }
    }
    Ok(())
}

fn discrepancy_guard() -> Outcome {
    // A printed table gives 12 at degree 4; direct enumeration of the 15
    // degree-4 monomials finds 13 outside the ideal, so 12 is taken as a typo.
    let i = load("x,y,z", "x^2*y*z^3, x^3*z, y^2*z^2");
    for method in [
        MethodKind::Oracle,
        MethodKind::LcmLattice,
        MethodKind::Syzygy,
        MethodKind::Table,
    ] {
        let v = hf(&i, 4, method).map_err(|e| e.to_string())?;
        ensure(v[4] == Count::from(13u32), || format!("{method}: {}", v[4]))?;
    }
    Ok(())
}

fn bench_determinism() -> Outcome {
    let config = EngineConfig::default();
    let first = bench::run_bench(Suite::Quick, 42, 1, 10, config);
    let second = bench::run_bench(Suite::Quick, 42, 1, 10, config);
    for (a, b) in first.cases.iter().zip(&second.cases) {
        ensure(a.ideal == b.ideal, || format!("{}: ideals differ", a.id))?;
        for (ra, rb) in a.results.iter().zip(&b.results) {
            ensure(ra.values == rb.values, || {
                format!("{} {}: values differ", a.id, ra.method)
            })?;
        }
        let lattice = a
            .results
            .iter()
            .find(|r| r.method == "lcm")
            .ok_or("no lcm result")?;
        let n = a.generators as u32;
        ensure(lattice.subsets == Some((1u64 << n) - 1), || {
            format!("{}: {:?} subsets", a.id, lattice.subsets)
        })?;
    }
    ensure(
        first.cases.len() == second.cases.len() && !first.cases.is_empty(),
        || "case counts".into(),
    )?;
    let standard = bench::generate_suite(Suite::Standard, 42);
    ensure(
        standard == bench::generate_suite(Suite::Standard, 42),
        || "standard suite not reproducible".into(),
    )?;
    for case in standard.iter().filter(|c| c.ideal.len() == 12) {
        let l = build_lcm_lattice(&case.ideal, 20).map_err(|e| e.to_string())?;
        ensure(l.subset_count() == 4095, || {
            format!("{}: {}", case.id, l.subset_count())
        })?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("Pascal table rows 1..8, degrees 0..7", pascal_rows),
        ("<x^5> in k[x,y,z], degrees 0..9", principal_x5),
        ("<x*y^2> in k[x,y,z], degrees 0..6", principal_xy2),
        (
            "<x^2*y, x*z^2>: closed form and all methods",
            two_generators,
        ),
        ("<x^2, y^3>: all methods", pure_powers),
        (
            "<x*z, y*z, x^2*y>: all methods and cancelled pairs",
            three_generators_with_cancellation,
        ),
        ("four-generator ideal through degree 10", four_generators),
        (
            "Stanley-Reisner table rows 4, 5 and (0:w)",
            stanley_reisner_table,
        ),
        (
            "annihilator decomposition over (y, x, z)",
            decomposition_over_yxz,
        ),
        ("seeded property suite, 500 ideals", property_suite),
        (
            "degree-4 value 13 for <x^2*y*z^3, x^3*z, y^2*z^2>",
            discrepancy_guard,
        ),
        ("bench determinism and subset counts", bench_determinism),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match &result {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({ms} ms)", k + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
