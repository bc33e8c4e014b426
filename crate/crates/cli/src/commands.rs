use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use invlab::checks::{erratum_control, jacobi_identity_rows, watson_cases, watson_violations};
use invlab::discrepancy::{
    lambda_monte_carlo, verify_l1_invariance, verify_l2_invariance_with, InvarianceReport,
    L1Report, MonteCarloEstimate,
};
use invlab::harmonic::{coefficient_table, dim_m, KernelExpansion};
use invlab::optimize::{optimize_points, OptimizerConfig};
use invlab::spaces::{
    avg_sym_diff, avg_tau, gamma_const, gamma_exact, sample, Family, PointSet, PointSetFile,
    RadialMeasure, Sampler, SpaceDescriptor,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;
use crate::output::{csv_float, csv_opt, to_json, write_text, Format, Table};

/// Whether a verification command passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

impl From<bool> for Outcome {
    fn from(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Constants(a) => constants(a),
        Command::Verify(a) => verify(a),
        Command::JacobiCheck(a) => jacobi_check(a),
        Command::WatsonCheck(a) => watson_check(a),
        Command::Discrepancy(a) => discrepancy(a),
        Command::Optimize(a) => optimize(a),
        Command::DimsTable(a) => dims_table(a),
        Command::Coeffs(a) => coeffs(a),
        Command::Sample(a) => sample_cmd(a),
    }
}

fn emit<T: Serialize + ?Sized>(out: &OutputArgs, default: Format, value: &T, table: &Table) -> Result<()> {
    let text = match out.format.unwrap_or(default) {
        Format::Json => to_json(value)?,
        Format::Csv => table.render(),
    };
    write_text(out.output.as_deref(), &text)
}

fn default_sampler(space: &SpaceDescriptor) -> Sampler {
    if space.family() == Family::OctProj {
        Sampler::Chart
    } else {
        Sampler::Uniform
    }
}

pub fn parse_xi(spec: &str) -> Result<RadialMeasure> {
    let xi = match spec.strip_prefix("table:") {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
            RadialMeasure::from_table_csv(&text)?
        }
        None => spec.parse::<RadialMeasure>()?,
    };
    xi.validate()?;
    Ok(xi)
}

fn read_points(path: &Path) -> Result<PointSet> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    PointSet::from_json_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn standard_spaces() -> Vec<SpaceDescriptor> {
    let mut out = Vec::new();
    for d in 2..=4 {
        out.push(SpaceDescriptor::sphere(d).expect("valid sphere"));
    }
    for family in [Family::RealProj, Family::ComplexProj, Family::QuatProj] {
        for n in 2..=5 {
            out.push(SpaceDescriptor::projective(family, n).expect("valid space"));
        }
    }
    out.push(SpaceDescriptor::projective(Family::OctProj, 2).expect("valid space"));
    out
}

#[derive(Debug, Serialize)]
struct ConstantsRow {
    space: String,
    d: u32,
    d0: u32,
    kappa: f64,
    gamma: f64,
    gamma_exact: String,
    avg_tau: f64,
    avg_sym_diff: f64,
    m1: String,
}

fn constants(a: ConstantsArgs) -> Result<Outcome> {
    let spaces = if a.all || a.spaces.is_empty() {
        standard_spaces()
    } else {
        a.spaces
    };
    let natural = RadialMeasure::natural();
    let mut rows = Vec::new();
    let mut table = Table::new(&[
        "space", "d", "d0", "kappa", "gamma", "gamma_exact", "avg_tau", "avg_sym_diff", "m1",
    ]);
    for s in &spaces {
        let row = ConstantsRow {
            space: s.label(),
            d: s.d(),
            d0: s.d0(),
            kappa: s.kappa(),
            gamma: gamma_const(s),
            gamma_exact: gamma_exact(s).to_string(),
            avg_tau: avg_tau(s),
            avg_sym_diff: avg_sym_diff(s, &natural)?,
            m1: dim_m(s, 1)?.to_string(),
        };
        table.push(vec![
            row.space.clone(),
            row.d.to_string(),
            row.d0.to_string(),
            csv_float(row.kappa),
            csv_float(row.gamma),
            row.gamma_exact.clone(),
            csv_float(row.avg_tau),
            csv_float(row.avg_sym_diff),
            row.m1.clone(),
        ]);
        rows.push(row);
    }
    emit(&a.out, Format::Json, &rows, &table)?;
    Ok(Outcome::Pass)
}

#[derive(Debug, Serialize)]
struct VerifyOutput {
    #[serde(flatten)]
    report: InvarianceReport,
    sampler: &'static str,
    seed: u64,
    threshold: f64,
    pass: bool,
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    if a.n_points == 0 {
        bail!("--n-points must be at least 1");
    }
    if a.trunc == 0 {
        bail!("--trunc must be at least 1");
    }
    let mut outputs = Vec::new();
    let mut table = Table::new(&[
        "space", "N", "L", "tau_sum", "lambda_series", "residual_rel", "tail_bound", "runtime_ms",
    ]);
    for space in &a.spaces {
        let start = Instant::now();
        let sampler = a.sampler.unwrap_or_else(|| default_sampler(space));
        let ps = sample(space, sampler, a.n_points, a.seed)?;
        let kernel = KernelExpansion::build(space, &RadialMeasure::natural(), a.trunc)?;
        let report = verify_l2_invariance_with(&ps, &kernel, a.mc_samples.map(|k| (k, a.seed)))?;
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        table.push(vec![
            report.space.clone(),
            report.n.to_string(),
            report.truncation.to_string(),
            csv_float(report.tau_sum),
            csv_float(report.lambda_series),
            csv_float(report.residual_rel),
            csv_float(report.tail_bound),
            if a.timing { format!("{elapsed:.0}") } else { String::new() },
        ]);
        let pass = report.passes(a.threshold);
        outputs.push(VerifyOutput {
            report,
            sampler: sampler.name(),
            seed: a.seed,
            threshold: a.threshold,
            pass,
        });
    }
    let pass = outputs.iter().all(|o| o.pass);
    if outputs.len() == 1 {
        emit(&a.out, Format::Json, &outputs[0], &table)?;
    } else {
        emit(&a.out, Format::Json, &outputs, &table)?;
    }
    Ok(pass.into())
}

fn jacobi_check(a: JacobiArgs) -> Result<Outcome> {
    let rows = jacobi_identity_rows(&a.alpha, &a.beta, a.lmax, a.tolerance)?;
    let control = erratum_control(0.0, 0.0, 1, a.tolerance)?;
    let failures = rows.iter().filter(|r| !r.pass).count();
    let mut table = Table::new(&["kind", "alpha", "beta", "l", "quadrature", "closed", "rel_err", "pass"]);
    for r in &rows {
        table.push(vec![
            "identity".into(),
            csv_float(r.alpha),
            csv_float(r.beta),
            r.l.to_string(),
            csv_float(r.quadrature),
            csv_float(r.closed),
            csv_float(r.rel_err),
            r.pass.to_string(),
        ]);
    }
    table.push(vec![
        "printed-control".into(),
        csv_float(control.alpha),
        csv_float(control.beta),
        control.l.to_string(),
        csv_float(control.quadrature),
        csv_float(control.printed),
        csv_float((control.ratio - 1.0).abs()),
        control.printed_fails.to_string(),
    ]);
    let value = json!({
        "tolerance": a.tolerance,
        "cases": rows.len(),
        "failures": failures,
        "rows": rows,
        "printed_control": control,
    });
    emit(&a.out, Format::Json, &value, &table)?;
    Ok((failures == 0 && control.printed_fails).into())
}

fn watson_check(a: WatsonArgs) -> Result<Outcome> {
    let cases = watson_cases(a.cases, a.seed, a.lmax, a.tolerance)?;
    let violations = watson_violations(a.violations, a.seed);
    let failures = cases.iter().filter(|c| !c.pass).count();
    let unrejected = violations.iter().filter(|v| !v.rejected).count();
    let mut table = Table::new(&[
        "kind", "l", "a", "b", "c", "condition", "brute", "closed", "rel_err", "pass",
    ]);
    for c in &cases {
        table.push(vec![
            "admissible".into(),
            c.l.to_string(),
            csv_float(c.a),
            csv_float(c.b),
            csv_float(c.c),
            csv_float(2.0 * c.c - c.a - c.b + 1.0),
            csv_float(c.brute),
            csv_float(c.closed),
            csv_float(c.rel_err),
            c.pass.to_string(),
        ]);
    }
    for v in &violations {
        table.push(vec![
            "violation".into(),
            String::new(),
            csv_float(v.a),
            csv_float(v.b),
            csv_float(v.c),
            csv_float(v.condition),
            String::new(),
            String::new(),
            String::new(),
            v.rejected.to_string(),
        ]);
    }
    let value = json!({
        "seed": a.seed,
        "tolerance": a.tolerance,
        "failures": failures,
        "unrejected": unrejected,
        "cases": cases,
        "violations": violations,
    });
    emit(&a.out, Format::Json, &value, &table)?;
    Ok((failures == 0 && unrejected == 0).into())
}

#[derive(Debug, Serialize)]
struct DiscrepancyOutput {
    xi: String,
    l1: L1Report,
    l2: Option<InvarianceReport>,
    lambda_mc: Option<MonteCarloEstimate>,
}

fn discrepancy(a: DiscrepancyArgs) -> Result<Outcome> {
    if a.trunc == 0 {
        bail!("--trunc must be at least 1");
    }
    let ps = read_points(&a.points)?;
    let xi = parse_xi(&a.xi)?;
    let l1 = verify_l1_invariance(&ps, &xi, a.trunc)?;
    let l2 = if xi.is_natural() {
        let kernel = KernelExpansion::build(ps.space(), &xi, a.trunc)?;
        Some(verify_l2_invariance_with(&ps, &kernel, None)?)
    } else {
        None
    };
    let lambda_mc = a
        .mc_samples
        .map(|k| lambda_monte_carlo(&ps, &xi, k, a.seed))
        .transpose()?;
    let mut table = Table::new(&[
        "space",
        "N",
        "L",
        "xi",
        "lambda_series",
        "sym_diff_series",
        "avg_sym_diff",
        "tail_bound",
        "l1_residual_rel",
        "tau_sum",
        "l2_residual_rel",
        "lambda_mc",
        "lambda_mc_std_error",
    ]);
    table.push(vec![
        l1.space.clone(),
        l1.n.to_string(),
        l1.truncation.to_string(),
        a.xi.clone(),
        csv_float(l1.lambda_series),
        csv_float(l1.sym_diff_series),
        csv_float(l1.avg_sym_diff),
        csv_float(l1.tail_bound),
        csv_float(l1.residual_rel),
        csv_opt(l2.as_ref().map(|r| r.tau_sum)),
        csv_opt(l2.as_ref().map(|r| r.residual_rel)),
        csv_opt(lambda_mc.map(|m| m.estimate)),
        csv_opt(lambda_mc.map(|m| m.std_error)),
    ]);
    let out = DiscrepancyOutput {
        xi: a.xi.clone(),
        l1,
        l2,
        lambda_mc,
    };
    emit(&a.out, Format::Json, &out, &table)?;
    Ok(Outcome::Pass)
}

fn optimize(a: OptimizeArgs) -> Result<Outcome> {
    let cfg = OptimizerConfig {
        iterations: a.iterations,
        step_size: a.step_size,
        restarts: a.restarts,
        seed: a.seed,
        tolerance: a.tolerance,
        check_every: a.check_every,
        check_truncation: a.trunc,
    };
    let result = optimize_points(&a.space, a.n_points, &cfg)?;
    let mut history = Table::new(&["iteration", "tau_sum", "residual_rel"]);
    for h in &result.history {
        history.push(vec![h.iteration.to_string(), csv_float(h.tau_sum), csv_opt(h.residual_rel)]);
    }
    if let Some(path) = &a.history {
        write_text(Some(path), &history.render())?;
    }
    let file = PointSetFile::from(&result.points);
    write_text(a.output.as_deref(), &to_json(&file)?)?;
    Ok(Outcome::Pass)
}

fn coefficient_output(space: &SpaceDescriptor, xi: &RadialMeasure, lmax: usize, out: &OutputArgs) -> Result<()> {
    let rows = coefficient_table(space, xi, lmax)?;
    let mut table = Table::new(&["l", "m_l", "M_l", "C_l", "A_l", "b_l"]);
    let mut values = Vec::with_capacity(rows.len());
    for r in &rows {
        table.push(vec![
            r.l.to_string(),
            r.m.to_string(),
            csv_float(r.big_m),
            csv_opt(r.c),
            csv_opt(r.a),
            csv_opt(r.b),
        ]);
        let m: Value = match u64::try_from(&r.m) {
            Ok(m) => m.into(),
            Err(_) => r.m.to_string().into(),
        };
        values.push(json!({
            "l": r.l,
            "m_l": m,
            "M_l": r.big_m,
            "C_l": r.c,
            "A_l": r.a,
            "b_l": r.b,
        }));
    }
    emit(out, Format::Csv, &values, &table)
}

fn dims_table(a: DimsArgs) -> Result<Outcome> {
    coefficient_output(&a.space, &RadialMeasure::natural(), a.lmax, &a.out)?;
    Ok(Outcome::Pass)
}

fn coeffs(a: CoeffsArgs) -> Result<Outcome> {
    let xi = parse_xi(&a.xi)?;
    coefficient_output(&a.space, &xi, a.trunc, &a.out)?;
    Ok(Outcome::Pass)
}

fn sample_cmd(a: SampleArgs) -> Result<Outcome> {
    let sampler = a.sampler.unwrap_or_else(|| default_sampler(&a.space));
    let ps = sample(&a.space, sampler, a.n_points, a.seed)?;
    write_text(a.output.as_deref(), &to_json(&PointSetFile::from(&ps))?)?;
    Ok(Outcome::Pass)
}
