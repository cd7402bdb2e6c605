//! Acceptance run: one PASS/FAIL line per criterion. Built without the
//! libtest harness so the lines always reach stdout.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use uhg::census::census;
use uhg::metric::{quadrance, quadrance_cr, spread, spread_cr};
use uhg::script::{evaluate, parse, print};
use uhg::theorems::{canonical_cubic, jumping_jack_cubic, quadrangle_spreads, reciprocal_sum_48, run_check, Gen};
use uhg::{FieldCtx, ProjLine, ProjPoint};

type Outcome = Result<String, String>;

const SEED: u64 = 20_240_611;

fn fields(primes: &[u64]) -> Vec<FieldCtx> {
    std::iter::once(FieldCtx::rational()).chain(primes.iter().map(|&p| FieldCtx::prime(p).unwrap())).collect()
}

/// Runs theorem checks and demands zero failures and `trials` passes each.
fn suite(ids: &[&str], trials: u64, ctxs: &[FieldCtx]) -> Outcome {
    let mut runs = 0;
    for ctx in ctxs {
        for id in ids {
            let r = run_check(id, trials, SEED, *ctx).map_err(|e| e.to_string())?;
            if !r.ok() || r.passes != trials {
                return Err(format!("{ctx}: {}\n{r}", r.summary()));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} runs of {trials} trials, no failures"))
}

fn within(limit: Duration, start: Instant, detail: String) -> Outcome {
    let took = start.elapsed();
    if took > limit {
        Err(format!("{detail}, but took {took:.2?} (limit {limit:?})"))
    } else {
        Ok(detail)
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `1 − ⟨a,b⟩² / (⟨a,a⟩⟨b,b⟩)` straight from the rational coordinates.
fn oracle_measure(a: &[uhg::FieldElement; 3], b: &[uhg::FieldElement; 3]) -> BigRational {
    let r = |v: &[uhg::FieldElement; 3]| v.iter().map(|x| x.as_rational().unwrap().clone()).collect::<Vec<_>>();
    let (a, b) = (r(a), r(b));
    let form = |u: &[BigRational], v: &[BigRational]| &u[0] * &v[0] + &u[1] * &v[1] - &u[2] * &v[2];
    BigRational::one() - form(&a, &b).pow(2) / (form(&a, &a) * form(&b, &b))
}

fn metric_agreement() -> Outcome {
    let start = Instant::now();
    let detail = suite(&["metric_agreement"], 1000, &fields(&[]))?;
    let ctx = FieldCtx::rational();
    for trial in 0..1000u64 {
        let mut g = Gen::new(ctx, SEED ^ trial);
        let (a, b) = (g.point().map_err(|e| e.to_string())?, g.point().map_err(|e| e.to_string())?);
        if a == b {
            continue;
        }
        let want = oracle_measure(a.coords(), b.coords());
        let closed = quadrance(&a, &b).map_err(|e| e.to_string())?;
        let cr = quadrance_cr(&a, &b).map_err(|e| e.to_string())?;
        if closed.as_rational() != Some(&want) || cr != closed {
            return Err(format!("q({a}, {b}): oracle {want}, closed form {closed}, cross-ratio {cr}"));
        }
        let (l, m) = (ProjLine::from_coords(a.coords().clone()).unwrap(), ProjLine::from_coords(b.coords().clone()).unwrap());
        let (s, scr) = (spread(&l, &m).map_err(|e| e.to_string())?, spread_cr(&l, &m).map_err(|e| e.to_string())?);
        if s.as_rational() != Some(&want) || scr != s {
            return Err(format!("S({l}, {m}): oracle {want}, closed form {s}, cross-ratio {scr}"));
        }
    }
    within(Duration::from_secs(5), start, format!("{detail}; 1000 pairs match a coordinate oracle"))
}

fn law_suite() -> Outcome {
    let start = Instant::now();
    let laws = [
        "triple_quad",
        "triple_spread",
        "pythagoras",
        "pythagoras_dual",
        "spread_law",
        "spread_dual",
        "cross_law",
        "cross_dual",
    ];
    let detail = suite(&laws, 1000, &fields(&[7, 11, 101]))?;
    within(Duration::from_secs(60), start, detail)
}

fn forty_eight_sixty_four() -> Outcome {
    let detail = suite(&["theorem_48_64", "theorem_48_64_dual"], 1000, &fields(&[]))?;
    let ctx = FieldCtx::rational();
    let a: Vec<ProjPoint> =
        [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1]].iter().map(|&c| ProjPoint::from_ints(ctx, c).unwrap()).collect();
    let v = quadrangle_spreads([&a[0], &a[1], &a[2], &a[3]]).map_err(|e| e.to_string())?;
    let want = [ctx.int(1), ctx.int(-8), ctx.int(-8)];
    if v != want {
        return Err(format!("hand instance gives ({}, {}, {})", v[0], v[1], v[2]));
    }
    let rs = reciprocal_sum_48(&v[0], &v[1], &v[2]).map_err(|e| e.to_string())?;
    if !rs.value.is_zero() {
        return Err(format!("reciprocal sum residual {}", rs.value));
    }
    Ok(format!("{detail}; hand instance (1, -8, -8), reciprocal sum 3/4"))
}

fn constants() -> Outcome {
    suite(&["pentagon_null_product", "cevian_thinness", "altitude_thinness", "null_subtended"], 100, &fields(&[]))
}

fn cubics() -> Outcome {
    let a = suite(&["canonical_points", "canonical_cubic"], 100, &fields(&[]))?;
    let b = suite(&["jumping_jack"], 1000, &fields(&[]))?;
    // Direct substitution, independent of the kernel polynomials.
    let (x, y) = (rat(9, 8), rat(9, 8));
    let four = rat(4, 1);
    let canon = (&x - &four * &y).pow(2) - rat(8, 1) * &x * &y * (rat(2, 1) * &y - &x);
    let (u, v) = (rat(1, 4), rat(1, 4));
    let jack = rat(16, 1) * &u * &v * (rat(3, 1) - &four * (&u + &v)) - BigRational::one();
    if !canon.is_zero() || !jack.is_zero() {
        return Err(format!("curve points: canonical {canon}, jumping jack {jack}"));
    }
    let ctx = FieldCtx::rational();
    let k = canonical_cubic(&ctx.ratio(9, 8).unwrap(), &ctx.ratio(9, 8).unwrap());
    let j = jumping_jack_cubic(&ctx.ratio(1, 4).unwrap(), &ctx.ratio(1, 4).unwrap());
    if !k.is_zero() || !j.is_zero() {
        return Err(format!("kernel cubics at the curve points: {k}, {j}"));
    }
    Ok(format!("{a}; {b}; [9/8,9/8] and [1/4,1/4] on their curves"))
}

fn constructions() -> Outcome {
    let a = suite(&["orthocenter"], 1000, &fields(&[]))?;
    let b = suite(&["circumcircles", "double_median", "double_point", "second_double_point"], 100, &fields(&[]))?;
    Ok(format!("{a}; {b}"))
}

fn reflection() -> Outcome {
    suite(&["reflection"], 1000, &fields(&[]))
}

fn parabola() -> Outcome {
    suite(&["parabola", "parabola_chords"], 100, &fields(&[]))
}

fn bolyai() -> Outcome {
    suite(&["bolyai"], 100, &fields(&[]))
}

/// Affine solutions of x² + y² = z² over F_p, minus the origin, per projective point.
fn brute_null_count(p: u64) -> u64 {
    let mut n = 0;
    for x in 0..p {
        for y in 0..p {
            for z in 0..p {
                if (x, y, z) != (0, 0, 0) && (x * x + y * y) % p == z * z % p {
                    n += 1;
                }
            }
        }
    }
    n / (p - 1)
}

fn census_counts() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for p in [3u64, 5, 7, 11, 13, 101] {
        let c = census(FieldCtx::prime(p).unwrap(), false).map_err(|e| e.to_string())?;
        if c.null_points != p + 1 || c.points != p * p + p + 1 {
            return Err(format!("p = {p}: {} null points of {}", c.null_points, c.points));
        }
        let brute = brute_null_count(p);
        if brute != c.null_points {
            return Err(format!("p = {p}: census {} but brute force {brute}", c.null_points));
        }
        seen.push(format!("{p}:{}", c.null_points));
    }
    within(Duration::from_secs(10), start, format!("null points {}", seen.join(" ")))
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn script_corpus() -> Outcome {
    let mut files: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .map_err(|e| e.to_string())?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "uhg"))
        .collect();
    files.sort();
    let mut asserts = 0;
    for f in &files {
        let src = std::fs::read_to_string(f).map_err(|e| e.to_string())?;
        let program = parse(&src).map_err(|d| format!("{}: {d:?}", f.display()))?;
        if parse(&print::program(&program)).ok().as_ref() != Some(&program) {
            return Err(format!("{} does not round-trip", f.display()));
        }
        let ev = evaluate(&program);
        if !ev.ok() {
            return Err(format!("{}:\n{ev}", f.display()));
        }
        asserts += ev.assertions().count();
    }
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_uhg"))
        .args(["check", "--theorem", "all", "--seed", "1"])
        .output()
        .map_err(|e| e.to_string())?;
    if !status.status.success() {
        return Err(format!("check --theorem all exited {:?}", status.status.code()));
    }
    within(
        Duration::from_secs(600),
        start,
        format!("{} scripts, {asserts} assertions; check --theorem all exit 0 in {:.1?}", files.len(), start.elapsed()),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("metric agreement", metric_agreement),
        ("law suite", law_suite),
        ("48/64", forty_eight_sixty_four),
        ("constants", constants),
        ("cubics", cubics),
        ("constructions", constructions),
        ("reflection", reflection),
        ("parabola", parabola),
        ("bolyai", bolyai),
        ("census", census_counts),
        ("script corpus", script_corpus),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({secs:.2}s)\n{why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
