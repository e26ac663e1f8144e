//! Seeded benchmark suites.
//!
//! Each case is a random ideal drawn from a ChaCha stream seeded by the
//! suite seed and the case's (generator count, arity), so a case does not
//! depend on which other cases the suite contains.

use std::time::Instant;

use clap::ValueEnum;
use hilbert_core::{
    build_lcm_lattice, Count, Engine, EngineConfig, MethodKind, Monomial, MonomialIdeal,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub const EXPONENT_BOUND: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// 2..=6 generators in 3..=4 variables.
    Quick,
    /// 2..=16 generators in 3..=6 variables.
    Standard,
    /// The four-generator ideal whose syzygy recursion revisits sub-ideals.
    Memo,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Quick => "quick",
            Suite::Standard => "standard",
            Suite::Memo => "memo",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchCase {
    pub id: String,
    pub ideal: MonomialIdeal,
}

/// A random ideal with `n` generators in `arity` variables, exponents in
/// `0..=EXPONENT_BOUND`, no generator equal to 1.
pub fn random_ideal<R: Rng>(rng: &mut R, arity: usize, n: usize) -> MonomialIdeal {
    let gens = (0..n)
        .map(|_| loop {
            let e: Vec<u32> = (0..arity)
                .map(|_| rng.gen_range(0..=EXPONENT_BOUND))
                .collect();
            if e.iter().any(|&x| x > 0) {
                break Monomial::new(e).expect("small degree");
            }
        })
        .collect();
    MonomialIdeal::new(arity, gens).expect("uniform arity")
}

fn case_seed(seed: u64, n: usize, arity: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((n as u64) << 8 | arity as u64)
}

pub fn generate_suite(suite: Suite, seed: u64) -> Vec<BenchCase> {
    let (counts, arities) = match suite {
        Suite::Quick => (2..=6, 3..=4),
        Suite::Standard => (2..=16, 3..=6),
        Suite::Memo => {
            let ideal = MonomialIdeal::from_exponents(
                3,
                [vec![2, 3, 1], vec![1, 0, 3], vec![1, 4, 1], vec![2, 0, 2]],
            )
            .expect("valid");
            return vec![BenchCase {
                id: "memo".into(),
                ideal,
            }];
        }
    };
    let mut cases = Vec::new();
    for n in counts {
        for arity in arities.clone() {
            let mut rng = ChaCha8Rng::seed_from_u64(case_seed(seed, n, arity));
            cases.push(BenchCase {
                id: format!("n{n}-a{arity}"),
                ideal: random_ideal(&mut rng, arity, n),
            });
        }
    }
    cases
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MethodResult {
    pub method: String,
    /// Fastest of the repetitions, in milliseconds.
    pub time_ms: f64,
    /// Nonempty generator subsets in the lcm lattice (lattice method only).
    pub subsets: Option<u64>,
    /// Largest syzygy memo size (syzygy and table methods).
    pub peak_memo: Option<usize>,
    pub memo_hit_rate: Option<f64>,
    #[serde(serialize_with = "decimal_strings")]
    pub values: Vec<Count>,
    pub error: Option<String>,
}

fn decimal_strings<S: serde::Serializer>(v: &[Count], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub arity: usize,
    pub generators: usize,
    #[serde(skip)]
    pub ideal: MonomialIdeal,
    pub results: Vec<MethodResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub suite: String,
    pub seed: u64,
    pub repetitions: usize,
    pub max_degree: usize,
    pub cases: Vec<CaseResult>,
}

pub const BENCH_METHODS: [MethodKind; 3] = [
    MethodKind::LcmLattice,
    MethodKind::Syzygy,
    MethodKind::Table,
];

fn run_method(
    ideal: &MonomialIdeal,
    method: MethodKind,
    reps: usize,
    b_max: usize,
    config: EngineConfig,
) -> MethodResult {
    let mut best = f64::INFINITY;
    let mut outcome = None;
    let mut stats = None;
    for _ in 0..reps {
        let mut engine = Engine::new(config);
        let start = Instant::now();
        let r = engine.hf(ideal, b_max, method);
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        stats = Some(engine.syzygy_stats());
        outcome = Some(r);
    }
    let outcome = outcome.expect("at least one repetition");
    let subsets = match method {
        MethodKind::LcmLattice => build_lcm_lattice(ideal, config.lattice_cap)
            .ok()
            .map(|l| l.subset_count() as u64),
        _ => None,
    };
    let stats = stats.filter(|s| s.calls > 0);
    let (values, error) = match outcome {
        Ok(v) => (v, None),
        Err(e) => (Vec::new(), Some(e.to_string())),
    };
    MethodResult {
        method: method.name().to_string(),
        time_ms: best,
        subsets,
        peak_memo: stats.map(|s| s.peak_entries),
        memo_hit_rate: stats.map(|s| s.hit_rate()),
        values,
        error,
    }
}

pub fn run_bench(
    suite: Suite,
    seed: u64,
    reps: usize,
    b_max: usize,
    config: EngineConfig,
) -> BenchReport {
    let cases = generate_suite(suite, seed)
        .into_iter()
        .map(|case| CaseResult {
            id: case.id,
            arity: case.ideal.arity(),
            generators: case.ideal.len(),
            results: BENCH_METHODS
                .iter()
                .map(|&m| run_method(&case.ideal, m, reps, b_max, config))
                .collect(),
            ideal: case.ideal,
        })
        .collect();
    BenchReport {
        suite: suite.name().to_string(),
        seed,
        repetitions: reps,
        max_degree: b_max,
        cases,
    }
}
