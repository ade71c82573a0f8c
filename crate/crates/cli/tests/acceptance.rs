//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails. Every comparison is exact.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use horadam_core::verify::{binet_grid, genfunc_grid, oracle_grid, Grid, Report, Scale};
use horadam_core::{
    binomial, brute_sum, gf_power, lemma1_sum, lemma2_power_sum, series_coeffs, sum_power,
    HoradamParams, LemmaArgs, QuadExt, Rational, SeqKind, SumSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn grid_outcome(report: &Report, elapsed: Duration, budget: Duration) -> Outcome {
    let mut detail = format!("{report} in {:.1}s", elapsed.as_secs_f64());
    if elapsed > budget {
        detail.push_str(&format!(" (budget {}s)", budget.as_secs()));
    }
    if let Some(first) = report.failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    Outcome { pass: report.passed() && report.checks > 0 && elapsed <= budget, detail }
}

// Lucas terms straight from the recurrence, stepping backwards for negative
// indices.
struct Lucas {
    p: Rational,
    q: Rational,
}

impl Lucas {
    fn term(&self, first: (i64, i64), n: i64) -> Rational {
        let (mut a, mut b) = (Rational::from(first.0), Rational::from(first.1));
        if first == (2, 0) {
            b = self.p.clone();
        }
        if n >= 0 {
            for _ in 0..n {
                let next = &self.p * &b - &self.q * &a;
                a = std::mem::replace(&mut b, next);
            }
            a
        } else {
            for _ in 0..-n {
                let prev = (&self.p * &a - &b) / &self.q;
                b = std::mem::replace(&mut a, prev);
            }
            a
        }
    }

    fn u(&self, n: i64) -> Rational {
        self.term((0, 1), n)
    }

    fn v(&self, n: i64) -> Rational {
        self.term((2, 0), n)
    }

    fn qp(&self, e: i64) -> Rational {
        self.q.pow(e).unwrap()
    }

    fn disc(&self) -> Rational {
        &self.p * &self.p - Rational::from(4) * &self.q
    }
}

fn zp(z: &Rational, e: i64) -> Rational {
    z.pow(e).unwrap()
}

fn sign(i: i64) -> Rational {
    Rational::from(if i % 2 == 0 { 1 } else { -1 })
}

fn c(n: i64, i: i64) -> Rational {
    binomial(n as u32, i as u32)
}

/// Sum of `num_i / den_i`, or `None` if some `den_i` is zero.
fn quotient_sum(terms: impl Iterator<Item = (Rational, Rational)>) -> Option<Rational> {
    let mut acc = Rational::zero();
    for (num, den) in terms {
        acc = acc + num * den.recip()?;
    }
    Some(acc)
}

/// Even powers of u, finite: value of the sum itself (left side divided out).
fn even_u_finite(l: &Lucas, n: i64, k: i64, z: &Rational) -> Option<Rational> {
    let m = 2 * n;
    let rhs = quotient_sum((0..=m).map(|i| {
        let den = l.qp(m) * z * z - l.qp(i) * l.v(m - 2 * i) * z + Rational::one();
        let top = l.qp(m + k * i) * l.v(k * (m - 2 * i)) * zp(z, k + 2)
            - l.qp(i * (k + 1)) * l.v((k + 1) * (m - 2 * i)) * zp(z, k + 1);
        let bottom = l.qp(i) * l.v(m - 2 * i) * z - Rational::from(2);
        (sign(i) * c(m, i) * (top - bottom), den)
    }))?;
    Some(rhs / (Rational::from(2) * l.disc().pow(n).unwrap()))
}

fn odd_u_finite(l: &Lucas, n: i64, k: i64, z: &Rational) -> Option<Rational> {
    let m = 2 * n - 1;
    let rhs = quotient_sum((0..=m).map(|i| {
        let den = l.qp(m) * z * z - l.qp(i) * l.v(m - 2 * i) * z + Rational::one();
        let top = l.qp(m + k * i) * l.u(k * (m - 2 * i)) * zp(z, k + 2)
            - l.qp(i * (k + 1)) * l.u((k + 1) * (m - 2 * i)) * zp(z, k + 1);
        let bottom = l.qp(i) * l.u(m - 2 * i) * z;
        (sign(i) * c(m, i) * (top + bottom), den)
    }))?;
    Some(rhs / (Rational::from(2) * l.disc().pow(n - 1).unwrap()))
}

fn v_finite(l: &Lucas, n: i64, k: i64, z: &Rational) -> Option<Rational> {
    let rhs = quotient_sum((0..=n).map(|i| {
        let den = l.qp(n) * z * z - l.qp(i) * l.v(n - 2 * i) * z + Rational::one();
        let top = l.qp(n + k * i) * l.v(k * (n - 2 * i)) * zp(z, k + 2)
            - l.qp(i * (k + 1)) * l.v((k + 1) * (n - 2 * i)) * zp(z, k + 1);
        let bottom = l.qp(i) * l.v(n - 2 * i) * z - Rational::from(2);
        (c(n, i) * (top - bottom), den)
    }))?;
    Some(rhs / Rational::from(2))
}

fn even_u_infinite(l: &Lucas, n: i64, z: &Rational) -> Option<Rational> {
    let m = 2 * n;
    let rhs = quotient_sum((0..=m).map(|i| {
        let den = l.qp(m) * z * z - l.qp(i) * l.v(m - 2 * i) * z + Rational::one();
        let top = Rational::from(2) - l.qp(i) * l.v(m - 2 * i) * z;
        (sign(i) * c(m, i) * top, den)
    }))?;
    Some(rhs / (Rational::from(2) * l.disc().pow(n).unwrap()))
}

fn odd_u_infinite(l: &Lucas, n: i64, z: &Rational) -> Option<Rational> {
    let m = 2 * n - 1;
    let rhs = quotient_sum((0..=m).map(|i| {
        let den = l.qp(m) * z * z - l.qp(i) * l.v(m - 2 * i) * z + Rational::one();
        (sign(i) * c(m, i) * l.qp(i) * l.u(m - 2 * i) * z, den)
    }))?;
    Some(rhs / (Rational::from(2) * l.disc().pow(n - 1).unwrap()))
}

fn v_infinite(l: &Lucas, n: i64, z: &Rational) -> Option<Rational> {
    let rhs = quotient_sum((0..=n).map(|i| {
        let den = l.qp(n) * z * z - l.qp(i) * l.v(n - 2 * i) * z + Rational::one();
        (c(n, i) * (Rational::from(2) - l.qp(i) * l.v(n - 2 * i) * z), den)
    }))?;
    Some(rhs / Rational::from(2))
}

fn special_cases(grid: &Grid) -> Outcome {
    let (mut checks, mut skipped) = (0u64, 0u64);
    let mut failures = Vec::new();
    let ks: Vec<i64> = (-1..=8).collect();
    for &p in &grid.p {
        for &q in &grid.q {
            let Ok(params) = HoradamParams::from_ints(0, 1, p, q) else { continue };
            let l = Lucas { p: Rational::from(p), q: Rational::from(q) };
            // (kind, power, finite display, infinite display)
            let mut cases: Vec<(SeqKind, u32, i64, u8)> = Vec::new();
            for n in 0..=2 {
                cases.push((SeqKind::U, 2 * n as u32, n, 0));
            }
            for n in 1..=3 {
                cases.push((SeqKind::U, 2 * n as u32 - 1, n, 1));
            }
            for n in 0..=5 {
                cases.push((SeqKind::V, n as u32, n, 2));
            }
            for (kind, power, n, shape) in cases {
                for z in &grid.z {
                    for &k in &ks {
                        let display = match shape {
                            0 => even_u_finite(&l, n, k, z),
                            1 => odd_u_finite(&l, n, k, z),
                            _ => v_finite(&l, n, k, z),
                        };
                        let spec = SumSpec::new(kind, power, 1, 0, k, z.clone()).unwrap();
                        let Some(display) = display else {
                            skipped += 1;
                            continue;
                        };
                        checks += 1;
                        let general = sum_power(&params, &spec);
                        let oracle = brute_sum(&params, &spec);
                        if general.as_ref() != Ok(&display) || display != oracle {
                            failures.push(format!(
                                "finite {kind}^{power} p={p} q={q} k={k} z={z}: display {display}, general {general:?}, direct {oracle}"
                            ));
                        }
                    }
                    let display = match shape {
                        0 => even_u_infinite(&l, n, z),
                        1 => odd_u_infinite(&l, n, z),
                        _ => v_infinite(&l, n, z),
                    };
                    let Some(display) = display else {
                        skipped += 1;
                        continue;
                    };
                    checks += 1;
                    let rf = gf_power(&params, kind, power, 1, 0).unwrap();
                    let general = rf.num().eval(z) / rf.den().eval(z);
                    if general != display {
                        failures.push(format!(
                            "infinite {kind}^{power} p={p} q={q} z={z}: display {display}, general {general}"
                        ));
                    }
                }
            }
        }
    }
    let mut detail = format!(
        "{checks} display evaluations agree, {skipped} skipped with a zero display denominator, {} failures",
        failures.len()
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    Outcome { pass: failures.is_empty() && checks > 0, detail }
}

fn direct(args: &LemmaArgs) -> QuadExt {
    let mut acc = QuadExt::zero(args.f.disc());
    for j in 0..=args.k {
        let e = args.r * j + args.s;
        let t = &args.f * &args.x.pow(e).unwrap() + &args.g * &args.y.pow(e).unwrap();
        acc = acc + t.pow(i64::from(args.n)).unwrap().scale(&zp(&args.z, j));
    }
    acc
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

fn invertible(rng: &mut ChaCha8Rng, disc: &Rational, rational: bool) -> QuadExt {
    loop {
        let c1 = if rational { Rational::zero() } else { small(rng) };
        let x = QuadExt::new(small(rng), c1, disc.clone()).unwrap();
        if !x.norm().is_zero() {
            return x;
        }
    }
}

/// Whether some geometric ratio of the expanded power sum equals one.
fn has_unit_ratio(args: &LemmaArgs) -> bool {
    let n = i64::from(args.n);
    (0..=n).any(|i| {
        let ratio = (&args.x.pow(args.r * (n - i)).unwrap() * &args.y.pow(args.r * i).unwrap())
            .scale(&args.z);
        ratio.is_one()
    })
}

fn lemma_engine() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let discs = [2, 3, 5, 7, -1, -3, 4, 9];
    let (mut sets, mut degenerate) = (0u32, 0u32);
    let mut failures = Vec::new();
    while sets < 200 {
        let disc = Rational::from(discs[rng.gen_range(0..discs.len())]);
        let force = sets % 8 == 0;
        let x = invertible(&mut rng, &disc, force);
        let y = invertible(&mut rng, &disc, false);
        let n: u32 = rng.gen_range(0..=3);
        let r = rng.gen_range(-2..=2);
        let z = if force {
            // Makes the i = 0 ratio x^{rn} z exactly one.
            x.to_rational().unwrap().pow(-r * i64::from(n)).unwrap()
        } else {
            small(&mut rng)
        };
        let mut args = LemmaArgs {
            f: QuadExt::new(small(&mut rng), small(&mut rng), disc.clone()).unwrap(),
            g: QuadExt::new(small(&mut rng), small(&mut rng), disc.clone()).unwrap(),
            x,
            y,
            r,
            s: rng.gen_range(-3..=3),
            k: rng.gen_range(-1..=6),
            z,
            n,
        };
        sets += 1;
        if has_unit_ratio(&args) {
            degenerate += 1;
        }
        match lemma2_power_sum(&args) {
            Ok(v) if v == direct(&args) => {}
            other => failures.push(format!("power sum {args:?}: {other:?}")),
        }
        args.n = 1;
        if force {
            args.z = args.x.to_rational().unwrap().pow(-args.r).unwrap();
        }
        match lemma1_sum(&args) {
            Ok(v) if v == direct(&args) => {}
            other => failures.push(format!("linear sum {args:?}: {other:?}")),
        }
    }
    let mut detail = format!(
        "{sets} random argument sets, {degenerate} with a unit ratio, {} failures",
        failures.len()
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    Outcome { pass: failures.is_empty() && degenerate >= 10, detail }
}

fn fibonacci_squares() -> bool {
    let rf = gf_power(&HoradamParams::fibonacci(), SeqKind::U, 2, 1, 0).unwrap();
    let want: Vec<Rational> = [0, 1, 1, 4, 9, 25, 64].into_iter().map(Rational::from).collect();
    series_coeffs(&rf, 7) == want
}

struct Golden {
    args: &'static [&'static str],
    stdout: &'static str,
    stderr_contains: Option<&'static str>,
    code: i32,
}

const GOLDEN: &[Golden] = &[
    Golden {
        args: &["sum", "--kind", "u", "-p", "1", "-q", "-1", "-a", "0", "-b", "1", "--n", "1", "--r", "1", "--s", "0", "--k", "4", "--z", "1"],
        stdout: "7\n",
        stderr_contains: None,
        code: 0,
    },
    Golden {
        args: &["series", "--kind", "u", "-p", "1", "-q", "-1", "--n", "1", "--r", "1", "--s", "0", "--m", "7"],
        stdout: "0 1 1 2 3 5 8\n",
        stderr_contains: None,
        code: 0,
    },
    Golden {
        args: &["sum", "--kind", "u", "-p", "3", "-q", "2", "--n", "1", "--r", "1", "--s", "0", "--k", "3", "--z", "1/2"],
        stdout: "17/8\n",
        stderr_contains: Some("degenerate denominator"),
        code: 0,
    },
];

fn cli_golden() -> Outcome {
    let mut failures = Vec::new();
    for g in GOLDEN {
        let out = Command::new(env!("CARGO_BIN_EXE_horadam"))
            .args(g.args)
            .env_remove("HORADAM_NO_FALLBACK")
            .output()
            .expect("binary runs");
        let stdout = String::from_utf8_lossy(&out.stdout);
        let stderr = String::from_utf8_lossy(&out.stderr);
        let stderr_ok = match g.stderr_contains {
            Some(text) => stderr.contains(text),
            None => stderr.is_empty(),
        };
        if stdout != g.stdout || out.status.code() != Some(g.code) || !stderr_ok {
            failures.push(format!(
                "horadam {}: stdout {stdout:?}, stderr {stderr:?}, status {:?}",
                g.args.join(" "),
                out.status.code()
            ));
        }
    }
    let mut detail = format!("{} invocations, {} failures", GOLDEN.len(), failures.len());
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    Outcome { pass: failures.is_empty(), detail }
}

fn main() -> ExitCode {
    let grid = Grid::new(Scale::Full);
    let mut lines: Vec<(&str, Outcome)> = Vec::new();

    let (oracle, t_oracle) = timed(|| oracle_grid(&grid));
    lines.push(("oracle grid", grid_outcome(&oracle, t_oracle, Duration::from_secs(60))));

    let (binet, t_binet) = timed(|| binet_grid(&grid));
    lines.push(("Binet and negative-index agreement", grid_outcome(&binet, t_binet, Duration::from_secs(5))));

    lines.push(("lemma engine", lemma_engine()));

    let (gf, t_gf) = timed(|| genfunc_grid(&grid, 12));
    let mut gf_line = grid_outcome(&gf, t_gf, Duration::from_secs(30));
    let fib = fibonacci_squares();
    gf_line.pass &= fib;
    gf_line.detail.push_str(if fib { "; Fibonacci squares 0 1 1 4 9 25 64" } else { "; Fibonacci squares wrong" });
    lines.push(("generating-function round-trip", gf_line));

    lines.push(("special-case displays", special_cases(&grid)));

    let reports = [&oracle, &binet, &gf];
    let residues: u64 = reports.iter().map(|r| r.surd_residues).sum();
    let evaluated: u64 = reports.iter().map(|r| r.checks).sum();
    lines.push((
        "surd cancellation",
        Outcome {
            pass: residues == 0 && reports.iter().all(|r| r.passed()),
            detail: format!("{evaluated} rational-valued evaluations, {residues} surd residues"),
        },
    ));

    lines.push(("CLI golden outputs", cli_golden()));

    let failed = lines.iter().filter(|(_, o)| !o.pass).count();
    for (name, o) in &lines {
        println!("{} {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", lines.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
