//! Verification harness: checks the closed forms, Binet evaluation and
//! generating functions against the recurrence over a fixed parameter grid.

use std::fmt;

use crate::closed_forms::{sum_linear, sum_power_with, SumSpec};
use crate::error::Error;
use crate::genfunc::{gf_power, series_coeffs};
use crate::rational::Rational;
use crate::sequence::{
    term_by_binet, term_by_recurrence, HoradamParams, LucasTerms, SeqKind, TermTable,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    /// A few seconds; exercises every code path.
    Small,
    /// The full grid.
    Full,
}

/// Grid axes. `Full` is `p in {1,2,3,-1}`, `q in {-1,1,2,-2}`,
/// `(a,b) in {(0,1),(2,p),(3,2),(-1,4)}`, `r in [-3,3]`, `s in [-4,4]`,
/// `k in [-1,8]`, `n in [0,5]`, `z in {1,-1,1/2,-2/3}`.
#[derive(Clone, Debug)]
pub struct Grid {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub ab: Vec<(i64, Option<i64>)>,
    pub r: Vec<i64>,
    pub s: Vec<i64>,
    pub k: Vec<i64>,
    pub n: Vec<u32>,
    pub z: Vec<Rational>,
}

impl Grid {
    pub fn new(scale: Scale) -> Self {
        // `None` for b means "b = p", the v-kind initial values.
        let ab = vec![(0, Some(1)), (2, None), (3, Some(2)), (-1, Some(4))];
        let z = vec![Rational::one(), Rational::from(-1), Rational::new(1, 2), Rational::new(-2, 3)];
        match scale {
            Scale::Full => Grid {
                p: vec![1, 2, 3, -1],
                q: vec![-1, 1, 2, -2],
                ab,
                r: (-3..=3).collect(),
                s: (-4..=4).collect(),
                k: (-1..=8).collect(),
                n: (0..=5).collect(),
                z,
            },
            Scale::Small => Grid {
                p: vec![1, 3],
                q: vec![-1, 2],
                ab,
                r: vec![-2, 0, 1, 3],
                s: vec![-3, 0, 2],
                k: vec![-1, 0, 4],
                n: (0..=3).collect(),
                z,
            },
        }
    }

    /// One `(params, kind)` per `(p, q, a, b)`: `(0, 1)` runs as kind `u`,
    /// `(2, p)` as kind `v` and every other pair as kind `w`. Degenerate
    /// `(p, q)` are skipped.
    pub fn families(&self) -> Vec<(HoradamParams, SeqKind)> {
        let mut out = Vec::new();
        for &p in &self.p {
            for &q in &self.q {
                for &(a, b) in &self.ab {
                    let (kind, b) = match (a, b) {
                        (0, Some(1)) => (SeqKind::U, 1),
                        (2, None) => (SeqKind::V, p),
                        (_, b) => (SeqKind::W, b.unwrap_or(p)),
                    };
                    let Ok(params) = HoradamParams::from_ints(a, b, p, q) else { continue };
                    out.push((params, kind));
                }
            }
        }
        out
    }
}

/// Outcome of one verification pass.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: &'static str,
    pub checks: u64,
    /// Cells where the closed form correctly reported a vanishing denominator.
    pub vanishing: u64,
    /// Results that could not be reduced to a rational.
    pub surd_residues: u64,
    pub failures: Vec<String>,
}

impl Report {
    fn new(name: &'static str) -> Self {
        Report { name, ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail_with<T>(&mut self, got: &crate::Result<T>, msg: String) {
        if matches!(got, Err(Error::SurdResidue(_))) {
            self.surd_residues += 1;
        }
        self.fail(msg);
    }

    fn fail(&mut self, msg: String) {
        // Keep the report bounded if something is badly broken.
        if self.failures.len() < 50 {
            self.failures.push(msg);
        } else if self.failures.len() == 50 {
            self.failures.push("...".into());
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checks, {} failures, {} vanishing denominators",
            self.name,
            self.checks,
            self.failures.iter().filter(|m| *m != "...").count(),
            self.vanishing
        )
    }
}

/// Whether `q^{rn} z^2 - q^{ri} v_{r(n-2i)} z + 1` is zero for some `i`,
/// computed straight from recurrence terms.
fn any_denominator_vanishes(params: &HoradamParams, n: i64, r: i64, z: &Rational) -> bool {
    let qp = |e: i64| params.q().pow(e).expect("q is nonzero");
    (0..=n).any(|i| {
        let v = term_by_recurrence(params, SeqKind::V, r * (n - 2 * i));
        (qp(r * n) * z * z - qp(r * i) * v * z + Rational::one()).is_zero()
    })
}

/// Closed-form sums against direct partial sums on every grid cell.
pub fn oracle_grid(grid: &Grid) -> Report {
    let mut report = Report::new("closed forms vs direct summation");
    let max_abs = |v: &[i64]| v.iter().map(|x| x.abs()).max().unwrap_or(0);
    let n_max = i64::from(grid.n.iter().copied().max().unwrap_or(0));
    let k_max = grid.k.iter().copied().max().unwrap_or(0);
    let window = n_max * (max_abs(&grid.r) * (k_max + 2) + max_abs(&grid.s));
    for (params, kind) in grid.families() {
        let terms = LucasTerms::new(&params, -window, window);
        let table = TermTable::new(&params, kind, -window, window);
        for &r in &grid.r {
            for &n in &grid.n {
                for z in &grid.z {
                    let expect_vanish = any_denominator_vanishes(&params, i64::from(n), r, z);
                    for &s in &grid.s {
                        // Direct partial sums for k = -1, 0, 1, ..., k_max.
                        let mut prefix = vec![Rational::zero()];
                        let mut zj = Rational::one();
                        for j in 0..=k_max {
                            let t = table.get(r * j + s).pow(i64::from(n)).expect("n >= 0");
                            let next = &prefix[prefix.len() - 1] + &(t * &zj);
                            prefix.push(next);
                            zj *= z;
                        }
                        for &k in &grid.k {
                            let spec = SumSpec::new(kind, n, r, s, k, z.clone()).expect("k >= -1");
                            let oracle = &prefix[(k + 1) as usize];
                            let mut check = |label: &str, got: crate::Result<Rational>| {
                                report.checks += 1;
                                match got {
                                    Ok(v) if !expect_vanish && &v == oracle => {}
                                    Err(Error::DenominatorVanishes(_)) if expect_vanish => {
                                        report.vanishing += 1
                                    }
                                    other => {
                                        let msg = format!(
                                            "{label} {kind} (a,b,p,q)=({},{},{},{}) n={n} r={r} s={s} k={k} z={z}: got {other:?}, oracle {oracle}",
                                            params.a(), params.b(), params.p(), params.q()
                                        );
                                        report.fail_with(&other, msg)
                                    }
                                }
                            };
                            check("sum_power", sum_power_with(&terms, &spec));
                            if n == 1 {
                                check("sum_linear", sum_linear(&params, &spec));
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Binet evaluation against the recurrence for `n in [-20, 20]`, and the
/// negative-index identity `w_{-n} q^n = a v_n - w_n` for `n in [0, 20]`.
pub fn binet_grid(grid: &Grid) -> Report {
    let mut report = Report::new("Binet form vs recurrence");
    for (params, kind) in grid.families() {
        let table = TermTable::new(&params, kind, -20, 20);
        let v = TermTable::new(&params, SeqKind::V, 0, 20);
        let (a, _) = params.initial_values(kind);
        for n in -20..=20 {
            report.checks += 1;
            match term_by_binet(&params, kind, n) {
                Ok(x) if &x == table.get(n) => {}
                other => {
                    let msg = format!("binet {kind} {params:?} n={n}: {other:?}");
                    report.fail_with(&other, msg)
                }
            }
            if n >= 0 {
                report.checks += 1;
                let lhs = table.get(-n) * params.q().pow(n).expect("q is nonzero");
                let rhs = &a * v.get(n) - table.get(n);
                if lhs != rhs {
                    report.fail(format!("negative index {kind} {params:?} n={n}: {lhs} != {rhs}"));
                }
            }
        }
    }
    report
}

/// Series expansion of [`gf_power`] against recurrence terms for
/// `n in [0, 4]` (capped by the grid) and `r, s in [-2, 2]`.
pub fn genfunc_grid(grid: &Grid, coeffs: usize) -> Report {
    let mut report = Report::new("generating functions vs recurrence");
    let rs: Vec<i64> = (-2..=2).collect();
    for (params, kind) in grid.families() {
        for n in grid.n.iter().copied().filter(|&n| n <= 4) {
            for &r in &rs {
                for &s in &rs {
                    report.checks += 1;
                    let last = r * (coeffs as i64 - 1) + s;
                    let table = TermTable::new(&params, kind, s.min(last), s.max(last));
                    let expected: Vec<Rational> = (0..coeffs as i64)
                        .map(|j| table.get(r * j + s).pow(i64::from(n)).expect("n >= 0"))
                        .collect();
                    match gf_power(&params, kind, n, r, s) {
                        Ok(rf) if series_coeffs(&rf, coeffs) == expected => {}
                        other => {
                            let msg = format!(
                                "gf {kind} {params:?} n={n} r={r} s={s}: {}",
                                other.as_ref().map(|rf| rf.to_string()).unwrap_or_else(|e| e.to_string())
                            );
                            report.fail_with(&other, msg)
                        }
                    }
                }
            }
        }
    }
    report
}

/// All three passes.
pub fn run(scale: Scale) -> Vec<Report> {
    let grid = Grid::new(scale);
    vec![binet_grid(&grid), oracle_grid(&grid), genfunc_grid(&grid, 12)]
}
