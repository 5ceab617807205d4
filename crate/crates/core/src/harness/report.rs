//! Line-oriented report records.
//!
//! One line per group, space-separated `key=value` fields in fixed order:
//! name, order, center size, abelian, P₂ as `p/q`, the six verdicts, the
//! six predictions and the mismatch list. Verdict triples are ordered
//! Γ, Γ*, Γ**.

use super::TheoremReport;

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report_header() -> &'static str {
    "# name order center abelian p2 line=Γ,Γ*,Γ** coline=Γ,Γ*,Γ** predicted_line predicted_coline mismatches"
}

pub fn report_line(r: &TheoremReport) -> String {
    let mismatches = if r.mismatches.is_empty() {
        "none".to_string()
    } else {
        r.mismatches.join("; ")
    };
    format!(
        "name={} order={} center={} abelian={} p2={}/{} line={},{},{} coline={},{},{} predicted_line={},{},{} predicted_coline={},{},{} mismatches={}",
        r.name,
        r.order,
        r.center_size,
        yn(r.abelian),
        r.p2.numer(),
        r.p2.denom(),
        yn(r.verdict_gamma_line),
        yn(r.verdict_gamma_star_line),
        yn(r.verdict_gamma_dstar_line),
        yn(r.verdict_gamma_complement_line),
        yn(r.verdict_gamma_star_complement_line),
        yn(r.verdict_gamma_dstar_complement_line),
        yn(r.predicted_gamma_line),
        yn(r.predicted_gamma_star_line),
        yn(r.predicted_gamma_dstar_line),
        yn(r.predicted_complement_line),
        yn(r.predicted_complement_line),
        yn(r.predicted_complement_line),
        mismatches,
    )
}
