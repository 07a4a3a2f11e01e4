//! Verification suites. Each suite is a list of named exact checks; the
//! report keeps them in the order they were produced, so output is stable.

use std::fmt::Display;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use gegenlab::gegenbauer::{
    char_eigenvalue, coeff_a, coeff_c, coeff_d, coeff_f, coeff_g, epsilon2, expand_product, gen_eigen, gen_recurrence,
    recurrence_row, sigma_closed_form, step, tabulated_shifts, ShiftVector, Z2Reading,
};
use gegenlab::integrals::{apply_integral, char_apply, commutator_residual, engine_operator, transcribed_operator};
use gegenlab::{rat, KappaPoly, KappaRational, Weight, ZPolynomial};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::golden::GoldenSet;

type K = KappaRational;
type Poly = ZPolynomial<K>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The literal comparison failed and an independent oracle accounts for
    /// the difference. Still counts as a failure for the exit code.
    Adjudicated,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check { name: name.into(), status: Status::Pass, expected: None, actual: None, note: None }
    }

    pub fn fail(name: impl Into<String>, expected: impl Display, actual: impl Display) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            expected: Some(expected.to_string()),
            actual: Some(actual.to_string()),
            note: None,
        }
    }

    /// Pass when the two sides agree, otherwise a failure listing both.
    pub fn compare<T: PartialEq + Display>(name: impl Into<String>, expected: &T, actual: &T) -> Self {
        if expected == actual {
            Self::pass(name)
        } else {
            Self::fail(name, expected, actual)
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub rank: usize,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Adjudicated => "ADJUDICATED",
            };
            out.push_str(&format!("{tag} {}\n", c.name));
            if let Some(e) = &c.expected {
                out.push_str(&format!("  expected: {e}\n"));
            }
            if let Some(a) = &c.actual {
                out.push_str(&format!("  actual:   {a}\n"));
            }
            if let Some(n) = &c.note {
                out.push_str(&format!("  note:     {n}\n"));
            }
        }
        out.push_str(&format!(
            "{} (rank {}): {}/{} pass, {} fail, {} adjudicated\n",
            self.suite,
            self.rank,
            self.count(Status::Pass),
            self.checks.len(),
            self.count(Status::Fail),
            self.count(Status::Adjudicated)
        ));
        out
    }
}

/// Options shared by the suites. `None` picks the default for the rank.
#[derive(Clone, Copy, Debug, Default)]
pub struct Limits {
    pub max_degree: Option<u32>,
    pub max_components: Option<u32>,
}

pub const SUITES: [&str; 7] = ["appendix", "eigen", "recurrence", "commutators", "sigma", "duality", "kappa1"];

/// Runs a named suite. `all` runs every suite that supports the rank.
pub fn run(suite: &str, rank: usize, limits: Limits) -> Result<Report> {
    let start = Instant::now();
    let checks = match suite {
        "all" => {
            let mut checks = Vec::new();
            for s in SUITES {
                if supports(s, rank) {
                    checks.extend(run(s, rank, limits)?.checks.into_iter().map(|mut c| {
                        c.name = format!("{s}: {}", c.name);
                        c
                    }));
                }
            }
            checks
        }
        s if !SUITES.contains(&s) => bail!(usage(format!("unknown suite '{s}'"))),
        s if !supports(s, rank) => {
            bail!(usage(format!("suite '{s}' does not support rank {rank}")))
        }
        "appendix" => appendix()?,
        "eigen" => {
            let max = limits.max_degree.unwrap_or(match rank {
                1 | 2 => 6,
                3 => 4,
                _ => 2,
            });
            let mut checks = eigen_equation(rank, max)?;
            if rank <= 3 {
                let side = limits.max_components.unwrap_or(if rank == 3 { 1 } else { 2 });
                checks.extend(characteristic(rank, side)?);
            }
            checks.extend(transcription(rank, 4)?);
            checks.extend(first_order(rank)?);
            checks
        }
        "recurrence" => recurrence(rank, limits.max_degree.unwrap_or(if rank == 3 { 4 } else { 6 }))?,
        "commutators" => commutators(rank, limits.max_degree.unwrap_or(4))?,
        "sigma" => sigma(rank, limits.max_components.unwrap_or(if rank == 3 { 1 } else { 2 }))?,
        "duality" => duality(rank, limits.max_degree.unwrap_or(if rank == 3 { 3 } else { 4 }))?,
        "kappa1" => kappa1(limits.max_degree.unwrap_or(6) as i64),
        _ => unreachable!(),
    };
    Ok(Report { suite: suite.to_string(), rank, checks, elapsed: start.elapsed() })
}

/// Marker for errors that should map to the usage exit code.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct UsageError(pub String);

fn usage(msg: String) -> UsageError {
    UsageError(msg)
}

pub fn supports(suite: &str, rank: usize) -> bool {
    match suite {
        "appendix" => rank == 3,
        "eigen" => (1..=4).contains(&rank),
        "recurrence" | "duality" => (1..=3).contains(&rank),
        "commutators" | "sigma" => rank == 2 || rank == 3,
        "kappa1" | "all" => true,
        _ => false,
    }
}

fn eigen_residual(p: &Poly, m: &Weight, n_vars: usize) -> Result<Poly> {
    let lhs = apply_integral(2, p, n_vars, &K::kappa())?;
    Ok(lhs.sub(&p.scale(&K::from_poly(epsilon2(m, n_vars)))))
}

/// Golden appendix entries against the eigen-solve. A mismatch is
/// adjudicated by the eigen equation: whichever side satisfies it wins.
pub fn appendix() -> Result<Vec<Check>> {
    let golden = GoldenSet::appendix_a3()?;
    let n_vars = golden.rank + 1;
    let mut checks = Vec::new();
    for (m, expected) in &golden.entries {
        let actual = gen_eigen(m, n_vars)?;
        let name = format!("P{m}");
        if &actual == expected {
            checks.push(Check::pass(name));
            continue;
        }
        let golden_ok = eigen_residual(expected, m, n_vars)?.is_zero();
        let computed_ok = eigen_residual(&actual, m, n_vars)?.is_zero();
        let check = Check::fail(name, expected, &actual);
        checks.push(if computed_ok && !golden_ok {
            Check { status: Status::Adjudicated, ..check }
                .with_note("bundled entry violates the eigen equation; the generated polynomial satisfies it")
        } else {
            check.with_note(format!("eigen equation holds for bundled: {golden_ok}, for generated: {computed_ok}"))
        });
    }
    Ok(checks)
}

/// The eigen equation for every weight with `Σ m_i ≤ max_total`. Each
/// weight also gets a shape check: leading coefficient 1 and support inside
/// the dominance cone.
pub fn eigen_equation(rank: usize, max_total: u32) -> Result<Vec<Check>> {
    let n_vars = rank + 1;
    let mut checks = Vec::new();
    for m in Weight::all_up_to_total(rank, max_total) {
        let p = gen_eigen(&m, n_vars)?;
        let residual = eigen_residual(&p, &m, n_vars)?;
        checks.push(Check::compare(format!("eigen equation P{m}"), &Poly::zero(rank), &residual));
        let stray: Vec<String> = p.support().filter(|w| !m.dominates(w)).map(|w| w.to_string()).collect();
        let shape = if p.coeff(&m).is_one() && stray.is_empty() {
            Check::pass(format!("triangularity P{m}"))
        } else {
            Check::fail(
                format!("triangularity P{m}"),
                "leading coefficient 1, support below m",
                format!("leading {}, outside cone [{}]", p.coeff(&m), stray.join(", ")),
            )
        };
        checks.push(shape);
    }
    Ok(checks)
}

/// `Δ(t)P_m = Π(t - l_m^{(j)}) P_m` coefficient by coefficient in t, over the
/// box `0 ≤ m_i ≤ side`.
pub fn characteristic(rank: usize, side: u32) -> Result<Vec<Check>> {
    let n_vars = rank + 1;
    let mut checks = Vec::new();
    for m in Weight::box_up_to(rank, side) {
        let p = gen_eigen(&m, n_vars)?;
        let got = char_apply(&p, n_vars)?;
        let expected: Vec<Poly> = char_eigenvalue(&m, n_vars).iter().map(|c| p.scale(c)).collect();
        let name = format!("characteristic product P{m}");
        checks.push(if got == expected {
            Check::pass(name)
        } else {
            let show = |v: &[Poly]| v.iter().map(|q| format!("[{q}]")).collect::<Vec<_>>().join(" ");
            Check::fail(name, show(&expected), show(&got)).with_note("coefficients listed by ascending power of t")
        });
    }
    Ok(checks)
}

/// The printed z-space operators against the engine, on every monomial of
/// total degree ≤ `max_total`.
pub fn transcription(rank: usize, max_total: u32) -> Result<Vec<Check>> {
    let n_vars = rank + 1;
    let orders: &[usize] = match n_vars {
        3 => &[2, 3],
        4 => &[2],
        _ => &[],
    };
    let mut checks = Vec::new();
    for &j in orders {
        let op = transcribed_operator(n_vars, j)?;
        let mut bad = Vec::new();
        for w in Weight::all_up_to_total(rank, max_total) {
            let mono = Poly::monomial(w.clone(), K::one());
            if op.apply(&mono)? != apply_integral(j, &mono, n_vars, &K::kappa())? {
                bad.push(w.to_string());
            }
        }
        let name = format!("printed order-{j} operator equals engine (N = {n_vars})");
        checks.push(if bad.is_empty() {
            Check::pass(name)
        } else {
            Check::fail(name, "equal action on every monomial", format!("differs on {}", bad.join(", ")))
        });
    }
    Ok(checks)
}

/// First-order part of the second integral: `(2/N)(1+Nκ) j(N-j) z_j ∂_j`.
pub fn first_order(rank: usize) -> Result<Vec<Check>> {
    let n_vars = rank + 1;
    let op = engine_operator(2, n_vars)?;
    let n = n_vars as i64;
    Ok((1..n_vars)
        .map(|j| {
            let c = rat(2 * (j as i64) * (n - j as i64), n);
            let coeff = K::from_poly(KappaPoly::affine(&c, &(c.clone() * rat(n, 1))));
            let expected = Poly::var(rank, j - 1).scale(&coeff);
            let got = op.coefficient(&Weight::unit(rank, j - 1));
            Check::compare(format!("first-order coefficient of d/dz{j} (N = {n_vars})"), &expected, &got)
        })
        .collect())
}

fn row_residual(r: usize, m: &Weight, n_vars: usize) -> Result<Poly> {
    let rank = n_vars - 1;
    let mut rhs = Poly::zero(rank);
    for (c, shift) in recurrence_row(r, m, Z2Reading::Corrected)? {
        if let Some(target) = m.shifted(&shift) {
            rhs = rhs.add(&gen_eigen(&target, n_vars)?.scale(&c));
        }
    }
    Ok(gen_eigen(m, n_vars)?.mul(&Poly::var(rank, r - 1)).sub(&rhs))
}

/// Recurrence route against the eigen route, plus every recurrence row as an
/// identity between eigen-generated polynomials.
pub fn recurrence(rank: usize, max_total: u32) -> Result<Vec<Check>> {
    let n_vars = rank + 1;
    let mut checks = Vec::new();
    for m in Weight::all_up_to_total(rank, max_total) {
        let by_eigen = gen_eigen(&m, n_vars)?;
        let by_rec = gen_recurrence(&m, n_vars)?;
        checks.push(Check::compare(format!("routes agree P{m}"), &by_eigen, &by_rec));
    }
    for m in Weight::all_up_to_total(rank, max_total.saturating_sub(1)) {
        for r in 1..=rank {
            let residual = row_residual(r, &m, n_vars)?;
            checks.push(Check::compare(format!("z{r} row at {m}"), &Poly::zero(rank), &residual));
        }
    }
    Ok(checks)
}

pub fn commutators(rank: usize, max_weighted: u32) -> Result<Vec<Check>> {
    let n_vars = rank + 1;
    let pairs: &[(usize, usize)] = if n_vars == 3 { &[(2, 3)] } else { &[(2, 3), (2, 4), (3, 4)] };
    let mut checks = Vec::new();
    for &(j, k) in pairs {
        let report = commutator_residual(j, k, n_vars, max_weighted)?;
        let name = format!("[D{j}, D{k}] = 0 on {} monomials (N = {n_vars})", report.checked);
        checks.push(if report.is_zero() {
            Check::pass(name)
        } else {
            let bad: Vec<String> = report.failures.iter().map(|w| w.to_string()).collect();
            Check::fail(name, "zero residual", format!("nonzero on {}", bad.join(", ")))
        });
    }
    Ok(checks)
}

fn shift_label(s: &ShiftVector, n_vars: usize) -> String {
    let v: Vec<String> = s.vector(n_vars).iter().map(|x| x.to_string()).collect();
    format!("S({})", v.join(","))
}

/// Extracted σ against the literal printed tables. A mismatch that the
/// corrected reading of the A_3 `z_2` row resolves is marked adjudicated.
pub fn sigma(rank: usize, side: u32) -> Result<Vec<Check>> {
    let n_vars = rank + 1;
    let mut checks = Vec::new();
    for s in tabulated_shifts(n_vars) {
        for m in Weight::box_up_to(rank, side) {
            if s.apply(&m, n_vars).is_none() {
                continue;
            }
            let (_, got) = step(&m, &s, n_vars)?;
            let printed = sigma_closed_form(&m, &s, n_vars, Z2Reading::Printed)?;
            let name = format!("sigma {} at {m}", shift_label(&s, n_vars));
            if got == printed {
                checks.push(Check::pass(name));
                continue;
            }
            let corrected = sigma_closed_form(&m, &s, n_vars, Z2Reading::Corrected)?;
            let check = Check::fail(name, &printed, &got);
            checks.push(if got == corrected {
                Check { status: Status::Adjudicated, ..check }
                    .with_note("matches the table once a_{l,m} and a_{l,n} are exchanged, as in the z2 recurrence row")
            } else {
                check
            });
        }
    }
    Ok(checks)
}

/// `b_I = a_{I^c}` between the lowering expansion of `z_{N-r}` and the raising
/// expansion of the same product, and the extracted `z_r` tables against the
/// closed-form recurrence rows.
pub fn duality(rank: usize, max_total: u32) -> Result<Vec<Check>> {
    let n_vars = rank + 1;
    let mut checks = Vec::new();
    for m in Weight::all_up_to_total(rank, max_total) {
        for r in 1..n_vars {
            let lowering = expand_product(r, false, &m, n_vars)?;
            let raising = expand_product(n_vars - r, true, &m, n_vars)?;
            for (s, b) in &lowering {
                let complement: Vec<usize> = (1..=n_vars).filter(|i| !s.indices().contains(i)).collect();
                let a = raising
                    .iter()
                    .find(|(t, _)| t.indices() == complement.as_slice())
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(K::zero);
                let name = format!("b{:?} = a{:?} for z{} at {m}", s.indices(), complement, n_vars - r);
                checks.push(Check::compare(name, &a, b));
            }
        }
        for r in 1..n_vars {
            let table = expand_product(r, true, &m, n_vars)?;
            for (c, shift) in recurrence_row(r, &m, Z2Reading::Corrected)? {
                let Some(target) = m.shifted(&shift) else {
                    continue;
                };
                let extracted = table
                    .iter()
                    .find(|(s, _)| s.apply(&m, n_vars).as_ref() == Some(&target))
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(K::zero);
                checks.push(Check::compare(format!("z{r} P{m} coefficient of P{target}"), &c, &extracted));
            }
        }
    }
    Ok(checks)
}

/// Every recurrence coefficient with a nonzero leading index factor equals 1
/// at κ = 1, for indices in `0..=max`.
pub fn kappa1(max: i64) -> Vec<Check> {
    let one = rat(1, 1);
    let mut checks = Vec::new();
    let mut check = |name: String, lead: i64, c: K| {
        if lead == 0 {
            return;
        }
        checks.push(match c.eval(&one) {
            Ok(v) => Check::compare(name, &one, &v),
            Err(e) => Check::fail(name, "1", e),
        });
    };
    for m in 0..=max {
        check(format!("c({m})"), m, coeff_c(m));
        for n in 0..=max {
            check(format!("a({m},{n})"), n, coeff_a(m, n));
        }
    }
    for m in 0..=max {
        for l in 0..=max {
            for n in 0..=max {
                check(format!("d({m},{l},{n})"), n, coeff_d(m, l, n));
                check(format!("f({m},{l},{n})"), m * n, coeff_f(m, l, n));
                check(format!("g({m},{l},{n})"), l, coeff_g(m, l, n));
            }
        }
    }
    checks
}
