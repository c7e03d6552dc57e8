use qexpand_core::identities::IdentityReport;
use qexpand_core::numeric::NumericReport;
use serde_json::Value;

use crate::Output;

pub fn emit_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json rendering"));
}

pub fn emit(output: Output, v: &Value, text: impl FnOnce() -> String) {
    match output {
        Output::Json => emit_json(v),
        Output::Text => print!("{}", text()),
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn symbolic_line(r: &IdentityReport) -> String {
    let mut s = format!("{} {} (N={})", verdict(r.passed), r.name, r.order);
    if let Some(f) = &r.first_failure {
        s.push_str(&format!("\n    first failure at {}: lhs = {}, rhs = {}", f.index, f.lhs, f.rhs));
        if let Some(note) = &f.note {
            s.push_str(&format!(" [{note}]"));
        }
    }
    s.push('\n');
    s
}

pub fn numeric_line(r: &NumericReport) -> String {
    let point: Vec<String> = r.point.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let status = serde_json::to_value(r.status).expect("status json");
    format!(
        "{} {} at {} |diff| = {} (tol {}, {})\n",
        verdict(r.passed),
        r.name,
        point.join(" "),
        r.abs_diff,
        r.tolerance,
        status.as_str().unwrap_or("")
    )
}
