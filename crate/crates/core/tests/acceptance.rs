//! Acceptance criteria, one line each.
//!
//! Runs without the libtest harness so the summary is always printed:
//!
//! ```bash
//! cargo test -p median-descent --release --test acceptance
//! ```

use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::Instant;

use median_descent::arith::ratio;
use median_descent::audit::cubic::{cubic_sum, cubic_sum_check};
use median_descent::audit::lemmas::{lemma2_check, lemma3_mod3};
use median_descent::audit::quartic::{xyzw_profile, QuarticProfile};
use median_descent::audit::{eight_conditions, eight_conditions_squared};
use median_descent::companion::{companion, similarity_check};
use median_descent::io::{read_records, run_search};
use median_descent::search::{counterexample_scan, enumerate, CertifiedMedianTriangle, EvenFilterMode, SearchConfig};
use median_descent::{IntTriangle, RatTriangle};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome + 'a>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn random_triangle(rng: &mut ChaCha8Rng, max: u64) -> IntTriangle {
    loop {
        let (a, b, c) = (rng.gen_range(1..=max), rng.gen_range(1..=max), rng.gen_range(1..=max));
        if let Ok(t) = IntTriangle::from_u64(a, b, c) {
            return t;
        }
    }
}

fn c1_smallest(work: &Path) -> Outcome {
    let out = work.join("smallest.jsonl");
    let status = Command::new(env!("CARGO_BIN_EXE_medtri"))
        .args(["search", "--max-side", "174", "--out"])
        .arg(&out)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(0), format!("exit code {:?}", status.status.code()))?;
    let records = read_records(&out).map_err(|e| e.to_string())?;
    ensure(records.len() == 1, format!("{} records", records.len()))?;
    let r = &records[0];
    ensure(
        [r.a, r.b, r.c, r.ma, r.mb, r.mc] == [136, 170, 174, 158, 131, 127],
        format!("got {}", r.to_line()),
    )?;
    Ok("(136, 170, 174) with medians (158, 131, 127), nothing else".into())
}

fn c2_open_problem(found: &[CertifiedMedianTriangle]) -> Outcome {
    let bad = counterexample_scan(found);
    ensure(bad.is_empty(), format!("{} triangles with rational area", bad.len()))?;
    Ok(format!("{} hits up to 1000, none with rational area", found.len()))
}

fn c3_eight_conditions(rng: &mut ChaCha8Rng) -> Outcome {
    let t = IntTriangle::from_u64(136, 170, 174).unwrap();
    let medians = t.integer_medians().unwrap();
    let report = eight_conditions(t.sides(), &medians).map_err(|e| e.to_string())?;
    let expected = big(16_605_388_800);
    ensure(report.normalized.iter().all(|v| *v == expected), "smallest triangle values")?;
    for _ in 0..1000 {
        let t = random_triangle(rng, 1_000_000);
        let r = eight_conditions_squared(t.sides());
        ensure(r.all_equal, format!("not equal on {t}"))?;
        ensure(r.common() == Some(&(t.heron16() * 9)), format!("not 144*S^2 on {t}"))?;
    }
    Ok("16605388800 on the smallest triangle; 1000 random triangles equal".into())
}

fn rational_t_zero(t: &RatTriangle) -> Result<(), String> {
    let [ma, mb, mc] = t.exact_medians().ok_or_else(|| format!("{t} has irrational medians"))?;
    let (profile, checks) = xyzw_profile(&ma, &mb, &mc, t.c()).map_err(|e| e.to_string())?;
    ensure(checks.t_zero && checks.all(), format!("T = {} on {t}", profile.t_value))
}

fn c4_t_vanishing(found: &[CertifiedMedianTriangle], rng: &mut ChaCha8Rng) -> Outcome {
    for r in found {
        let [ma, mb, mc] = &r.medians;
        let (_, checks) = xyzw_profile(ma, mb, mc, &r.sides()[2]).map_err(|e| e.to_string())?;
        ensure(checks.t_zero, format!("T nonzero on {}", r.triangle))?;
    }
    let bases: Vec<RatTriangle> = found.iter().map(|r| companion(&r.triangle).unwrap()).collect();
    for _ in 0..500 {
        let base = &bases[rng.gen_range(0..bases.len())];
        let k = ratio(rng.gen_range(1..=97), rng.gen_range(1..=97));
        let mut t = base.scale(&k);
        if rng.gen_bool(0.5) {
            t = companion(&t).map_err(|e| e.to_string())?;
        }
        rational_t_zero(&t)?;
    }
    Ok(format!("{} found triangles and 500 rational companions", found.len()))
}

fn c5_companion_laws(found: &[CertifiedMedianTriangle]) -> Outcome {
    let third = ratio(1, 3);
    for r in found {
        let t = &r.triangle;
        let once = companion(t).map_err(|e| e.to_string())?;
        let twice = companion(&once).map_err(|e| e.to_string())?;
        ensure(once.heron16() * ratio(9, 1) == t.to_rational().heron16(), format!("area ratio on {t}"))?;
        ensure(twice == t.to_rational().scale(&third), format!("double companion on {t}"))?;
        ensure(!similarity_check(t, &once), format!("similar companion on {t}"))?;
    }
    Ok(format!("{} found triangles", found.len()))
}

fn c6_vieta(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..1000 {
        let [ma, mb, mc, c] = [(); 4].map(|_| big(rng.gen_range(-100_000..=100_000)));
        let p = QuarticProfile::new(ma.clone(), mb, mc, c);
        ensure(p.coeff_cubic == big(16) * &ma, format!("cubic coefficient at m_a = {ma}"))?;
        ensure(p.quad_identity_holds(), format!("quadratic coefficient at m_a = {ma}"))?;
    }
    Ok("1000 random (m_a, m_c, c)".into())
}

fn c7_pinned() -> Outcome {
    let p = QuarticProfile::new(big(158), big(131), big(127), big(174));
    let values = [0, -108, 108, -2528].map(|d| p.quartic(&big(d)));
    let expected = [0, 0, 40_455_604_224, 10_609_468_334_080].map(big);
    ensure(values == expected, format!("T values {values:?}"))?;
    let unit = QuarticProfile::new(big(1), big(1), big(1), big(1));
    ensure(unit.coeff_lin == big(48), format!("linear coefficient {}", unit.coeff_lin))?;
    ensure(unit.lin_factored() == big(1120), format!("factored {}", unit.lin_factored()))?;
    ensure(unit.lin_residual() == big(-1072), format!("residual {}", unit.lin_residual()))?;
    Ok("T(0) = T(-108) = 0, T(108) = 40455604224, T(-2528) = 10609468334080; 48 vs 1120".into())
}

fn c8_cubic_sum(rng: &mut ChaCha8Rng) -> Outcome {
    let pinned = cubic_sum(&big(1), &big(1), &big(0), &big(0), &big(1));
    ensure(
        pinned.p_a == big(369) && pinned.q_b == big(175) && pinned.r == big(17) && pinned.holds,
        format!("pinned case {pinned:?}"),
    )?;
    for _ in 0..1000 {
        let [ma, mb, mc, c, d] = [(); 5].map(|_| big(rng.gen_range(-10_000..=10_000)));
        ensure(cubic_sum_check(&ma, &mb, &mc, &c, &d), format!("fails at ({ma}, {mb}, {mc}, {c}, {d})"))?;
    }
    Ok("369 + 175 = 544 = 32*17 and 1000 random tuples".into())
}

fn c9_lemmas(found: &[CertifiedMedianTriangle], rng: &mut ChaCha8Rng) -> Outcome {
    for r in found {
        let report = lemma2_check(&r.triangle).map_err(|e| e.to_string())?;
        ensure(report.implication_holds, format!("all-or-none fails on {}", r.triangle))?;
    }
    let mut squares = 0;
    let mut attempts = 0u64;
    while squares < 1000 {
        attempts += 1;
        ensure(attempts < 50_000_000, "could not sample enough square cases")?;
        let [ma, mc, c] = [(); 3].map(|_| big(rng.gen_range(1..=60)));
        let report = lemma3_mod3(&ma, &mc, &c);
        if report.has_integer_delta() {
            squares += 1;
            ensure(report.m_c_residue == 0, format!("m_c = {mc} not divisible by 3"))?;
        }
    }
    Ok(format!("{} found triangles; 1000 square cases in {attempts} draws", found.len()))
}

fn c10_determinism(work: &Path) -> Outcome {
    let mut files = Vec::new();
    for shards in [1, 4, 8] {
        let mut config = SearchConfig::new(400).with_shards(shards);
        config.output_path = work.join(format!("shards-{shards}.jsonl"));
        run_search(&config, EvenFilterMode::Auto).map_err(|e| e.to_string())?;
        files.push(std::fs::read(&config.output_path).map_err(|e| e.to_string())?);
    }
    ensure(files.windows(2).all(|w| w[0] == w[1]), "record files differ")?;
    ensure(!files[0].is_empty(), "record file is empty")?;
    Ok(format!("1, 4 and 8 shards give the same {} bytes", files[0].len()))
}

fn main() -> ExitCode {
    let work = tempfile::tempdir().expect("temp dir");
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d65_6469_616e);
    let found = enumerate(&SearchConfig::new(1000).with_shards(8))
        .expect("search to 1000")
        .records;

    let criteria: Vec<(&str, Check)> = vec![
        ("smallest solution", Box::new(|_| c1_smallest(work.path()))),
        ("no rational area up to 1000", Box::new(|_| c2_open_problem(&found))),
        ("eight conditions", Box::new(c3_eight_conditions)),
        ("T vanishes", Box::new(|rng| c4_t_vanishing(&found, rng))),
        ("companion laws", Box::new(|_| c5_companion_laws(&found))),
        ("Vieta coefficients", Box::new(c6_vieta)),
        ("pinned quartic values", Box::new(|_| c7_pinned())),
        ("cubic-sum identity", Box::new(c8_cubic_sum)),
        ("mod-3 lemmas", Box::new(|rng| c9_lemmas(&found, rng))),
        ("shard determinism", Box::new(|_| c10_determinism(work.path()))),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let result = check(&mut rng);
        let secs = started.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
