use std::path::Path;
use std::sync::Arc;
use std::time::Instant;

use qexpand_core::coeffring::{collect_symbols, parse_ratfun};
use qexpand_core::exec::Exec;
use qexpand_core::identities::{self, gn_specialization, CheckInput, IdentityReport};
use qexpand_core::inversion::{base_matrix, expand_theorem15, expand_triangular, gn_polynomials, lt_inverse};
use qexpand_core::numeric::{self, BigReal, NumericReport};
use qexpand_core::series::{base_element, partial_theta, QCtx, TruncSeries};
use qexpand_core::{RatFun, SymbolTable};
use serde::Serialize;
use serde_json::{json, Value};

use crate::render::{emit, emit_json, numeric_line, symbolic_line};
use crate::{Builtin, CliError, Common, Output, Params, Precision, Which};

fn exec(common: &Common) -> Exec {
    if common.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

/// Symbol table holding `q`, `a`, `b` and every other name used in `literals`.
fn table_for(literals: &[&str]) -> Result<Arc<SymbolTable>, CliError> {
    let mut extra: Vec<String> = Vec::new();
    for lit in literals {
        for name in collect_symbols(lit)? {
            if name == "z" {
                return Err(CliError::Usage("`z` is the series variable and cannot appear in a parameter".into()));
            }
            if !["q", "a", "b"].contains(&name.as_str()) && !extra.contains(&name) {
                extra.push(name);
            }
        }
    }
    Ok(SymbolTable::standard(&extra)?)
}

fn parse_params(params: &Params, more: &[&str]) -> Result<(QCtx, RatFun, RatFun), CliError> {
    let mut lits = vec![params.a.as_str(), params.b.as_str()];
    lits.extend_from_slice(more);
    let table = table_for(&lits)?;
    let ctx = QCtx::new(&table)?;
    let a = parse_ratfun(&params.a, &table)?;
    let b = parse_ratfun(&params.b, &table)?;
    Ok((ctx, a, b))
}

pub fn matrix(common: &Common, params: &Params, which: Which) -> Result<(), CliError> {
    let (ctx, a, b) = parse_params(params, &[])?;
    let m = base_matrix(&ctx, &a, &b, common.n);
    let m = match which {
        Which::A => m,
        Which::B => lt_inverse(&m)?,
    };
    let text = || {
        let mut s = String::new();
        for (n, row) in m.rows().iter().enumerate() {
            for (k, x) in row.iter().enumerate() {
                s.push_str(&format!("({n},{k}) {x}\n"));
            }
        }
        s
    };
    emit(common.output, &m.to_json(), text);
    Ok(())
}

fn builtin_series(ctx: &QCtx, which: Builtin, k: usize, a: &RatFun, b: &RatFun, order: usize) -> Result<TruncSeries, CliError> {
    match which {
        Builtin::One => Ok(TruncSeries::one(ctx.table(), order)),
        Builtin::CooganOno => {
            let mut f = partial_theta(ctx, 2, ctx.q(), 2, order);
            f.mul_binomial(&ctx.int(-1), 1);
            Ok(f)
        }
        Builtin::Basek => {
            if k > order {
                return Err(CliError::Usage(format!("--k {k} exceeds --n {order}")));
            }
            Ok(base_element(ctx, k, a, b, order)?)
        }
    }
}

#[derive(Serialize)]
struct ExpandJson {
    n: usize,
    a: String,
    b: String,
    f: Vec<String>,
    triangular: Vec<String>,
    theorem15: Vec<String>,
    agree: bool,
    first_difference: Option<usize>,
}

pub fn expand(
    common: &Common,
    params: &Params,
    builtin: Option<Builtin>,
    k: usize,
    coeffs: Option<&str>,
) -> Result<(), CliError> {
    let lits: Vec<&str> = coeffs.map(|c| c.split(',').collect()).unwrap_or_default();
    let (ctx, a, b) = parse_params(params, &lits)?;
    let order = common.n;
    let f = match (builtin, coeffs) {
        (Some(which), _) => builtin_series(&ctx, which, k, &a, &b, order)?,
        (None, Some(_)) => {
            let cs = lits.iter().map(|s| parse_ratfun(s.trim(), ctx.table())).collect::<Result<Vec<_>, _>>()?;
            TruncSeries::from_poly(ctx.table(), &cs, order)
        }
        (None, None) => return Err(CliError::Usage("expand needs --builtin or --coeffs".into())),
    };
    let tri = expand_triangular(&ctx, &f, &a, &b);
    let thm = expand_theorem15(&ctx, &f, &a, &b);
    let diff = tri.first_difference(&thm);
    let strs = |v: &[RatFun]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let out = ExpandJson {
        n: order,
        a: a.to_string(),
        b: b.to_string(),
        f: strs(f.coeffs()),
        triangular: strs(&tri.coeffs),
        theorem15: strs(&thm.coeffs),
        agree: diff.is_none(),
        first_difference: diff,
    };
    let text = || {
        let mut s = String::new();
        for (n, c) in out.triangular.iter().enumerate() {
            s.push_str(&format!("c_{n} = {c}\n"));
        }
        match diff {
            None => s.push_str("methods agree\n"),
            Some(i) => s.push_str(&format!("methods DISAGREE at n = {i}: {} vs {}\n", out.triangular[i], out.theorem15[i])),
        }
        s
    };
    emit(common.output, &serde_json::to_value(&out).expect("expand json"), text);
    if diff.is_some() {
        return Err(CliError::Failed);
    }
    Ok(())
}

pub fn gn(common: &Common) -> Result<(), CliError> {
    let ctx = QCtx::new(&SymbolTable::new(&["q"])?)?;
    let g: Vec<String> = gn_polynomials(&ctx, common.n).iter().map(|x| x.to_string()).collect();
    let check = gn_specialization(common.n)?;
    let holds = check.failure.is_none();
    let v = json!({ "n": common.n, "g": g, "specialization_holds": holds });
    let text = || {
        let mut s = String::new();
        for (i, x) in g.iter().enumerate() {
            s.push_str(&format!("g_{} = {x}\n", i + 1));
        }
        s.push_str(&format!("B_(n,1)(a, aq) = g_n a^(n-1): {}\n", if holds { "holds" } else { "FAILS" }));
        s
    };
    emit(common.output, &v, text);
    if holds {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn unknown_check(name: &str) -> CliError {
    CliError::Usage(format!("unknown check `{name}`; registered checks: {}", identities::names().join(", ")))
}

fn finish(all_passed: bool) -> Result<(), CliError> {
    if all_passed {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

pub fn verify(common: &Common, names: &[String]) -> Result<(), CliError> {
    let checks = names
        .iter()
        .map(|n| identities::find(n).ok_or_else(|| unknown_check(n)))
        .collect::<Result<Vec<_>, _>>()?;
    let reports = identities::run_checks(&checks, CheckInput { order: common.n, seed: common.seed }, exec(common));
    match common.output {
        Output::Json => emit_json(&serde_json::to_value(&reports).expect("report json")),
        Output::Text => reports.iter().for_each(|r| print!("{}", symbolic_line(r))),
    }
    finish(reports.iter().all(|r| r.passed))
}

fn tagged<T: Serialize>(kind: &str, report: &T) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("kind".into(), Value::String(kind.into()));
    if let Value::Object(fields) = serde_json::to_value(report).expect("report json") {
        map.extend(fields);
    }
    Value::Object(map)
}

pub fn verify_all(common: &Common, precision: &Precision, symbolic_only: bool) -> Result<(), CliError> {
    let mode = exec(common);
    let symbolic: Vec<IdentityReport> = identities::run_all(common.n, None, common.seed, mode);
    let numeric: Vec<NumericReport> = if symbolic_only {
        Vec::new()
    } else {
        numeric::run_grid(precision.precision, &precision.tol, mode)?
    };
    match common.output {
        Output::Json => {
            let all: Vec<Value> = symbolic
                .iter()
                .map(|r| tagged("symbolic", r))
                .chain(numeric.iter().map(|r| tagged("numeric", r)))
                .collect();
            emit_json(&Value::Array(all));
        }
        Output::Text => {
            symbolic.iter().for_each(|r| print!("{}", symbolic_line(r)));
            numeric.iter().for_each(|r| print!("{}", numeric_line(r)));
            let failed = symbolic.iter().filter(|r| !r.passed).count() + numeric.iter().filter(|r| !r.passed).count();
            println!("{} checks, {failed} failed", symbolic.len() + numeric.len());
        }
    }
    finish(symbolic.iter().all(|r| r.passed) && numeric.iter().all(|r| r.passed))
}

fn read_points(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn qqq_reports(precision: &Precision, points: Option<&Path>, tol: &BigReal) -> Result<Vec<NumericReport>, CliError> {
    let bits = precision.precision;
    let cases: Vec<(u32, BigReal)> = match points {
        None => numeric::QQQ_GRID
            .iter()
            .map(|(m, q)| Ok((*m, BigReal::parse(q, bits)?)))
            .collect::<Result<_, qexpand_core::Error>>()?,
        Some(p) => {
            let v: Value = serde_json::from_str(&read_points(p)?)
                .map_err(|e| CliError::Usage(format!("points file: {e}")))?;
            let arr = v.as_array().ok_or_else(|| CliError::Usage("points file must hold a JSON array".into()))?;
            arr.iter()
                .map(|pt| {
                    let m = pt["m"]
                        .as_u64()
                        .and_then(|m| u32::try_from(m).ok())
                        .ok_or_else(|| CliError::Usage("each qqq point needs an integer `m`".into()))?;
                    let q = numeric::parse_value(&pt["q"], bits)?;
                    if !q.im.is_zero() {
                        return Err(CliError::Usage("qqq needs a real `q`".into()));
                    }
                    Ok((m, q.re))
                })
                .collect::<Result<_, _>>()?
        }
    };
    cases.iter().map(|(m, q)| Ok(numeric::check_qqq(*m, q, tol)?)).collect()
}

pub fn numeric_verify(
    common: &Common,
    precision: &Precision,
    identity: &str,
    points: Option<&Path>,
) -> Result<(), CliError> {
    let bits = precision.precision;
    if bits < 16 {
        return Err(CliError::Usage(format!("--precision {bits} is too small")));
    }
    let tol = BigReal::parse(&precision.tol, bits)?;
    let reports = if identity == "qqq" {
        qqq_reports(precision, points, &tol)?
    } else {
        if !numeric::NUMERIC_IDENTITIES.contains(&identity) {
            return Err(CliError::Usage(format!(
                "unknown numeric identity `{identity}`; known: {}, qqq",
                numeric::NUMERIC_IDENTITIES.join(", ")
            )));
        }
        let pts = match points {
            Some(p) => numeric::parse_points(&read_points(p)?, bits)?,
            None => numeric::default_points(identity, bits),
        };
        pts.iter().map(|p| numeric::check_identity_numeric(identity, p, &tol)).collect::<Result<Vec<_>, _>>()?
    };
    match common.output {
        Output::Json => emit_json(&serde_json::to_value(&reports).expect("report json")),
        Output::Text => reports.iter().for_each(|r| print!("{}", numeric_line(r))),
    }
    finish(reports.iter().all(|r| r.passed))
}

pub fn bench(common: &Common, repeats: usize) -> Result<(), CliError> {
    let repeats = repeats.max(1);
    let mut rows = Vec::new();
    let mut reference: Option<Vec<IdentityReport>> = None;
    for (label, mode) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        let mut best = f64::INFINITY;
        for _ in 0..repeats {
            let t = Instant::now();
            let r = identities::run_all(common.n, None, common.seed, mode);
            best = best.min(t.elapsed().as_secs_f64());
            match &reference {
                None => reference = Some(r),
                Some(prev) if *prev != r => {
                    return Err(CliError::Usage("sequential and parallel runs disagree".into()));
                }
                Some(_) => {}
            }
        }
        rows.push((label, best));
    }
    let v = json!({
        "n": common.n,
        "parallel_available": Exec::parallel_available(),
        "threads": std::thread::available_parallelism().map_or(1, |n| n.get()),
        "seconds": rows.iter().map(|(l, s)| json!({ "mode": l, "best": s })).collect::<Vec<_>>(),
    });
    let text = || rows.iter().map(|(l, s)| format!("{l:<10} {s:.3} s\n")).collect::<String>();
    emit(common.output, &v, text);
    Ok(())
}
