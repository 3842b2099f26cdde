//! Row formatting: CSV (one row per detail, reports without details get a
//! single status row) and JSON (one object per report).

use serde_json::{json, Value};
use stardom_core::domination::DominationValue;
use stardom_core::star_sets::StarPartition;
use stardom_core::verify::TheoremReport;
use stardom_core::{AlgebraicNumber, DominationVariant, Graph, SpectrumSummary};

pub const CSV_HEADER: &str = "graph6,n,check,lambda_poly,lambda_approx,mult,n_minus_mult,\
                              gamma_variant,gamma_value,slack,status,class";

pub fn variant_text(variant: DominationVariant) -> String {
    match variant {
        DominationVariant::Domination => "gamma".to_string(),
        DominationVariant::TotalDomination => "gamma_t".to_string(),
        DominationVariant::PDomination(p) => format!("gamma_{p}"),
    }
}

fn value_text(value: DominationValue) -> String {
    match value.finite() {
        Some(v) => v.to_string(),
        None => "infinite".to_string(),
    }
}

fn approx_text(lambda: &AlgebraicNumber) -> String {
    format!("{:.9}", lambda.approx_f64())
}

fn vertices(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

pub fn csv_rows(report: &TheoremReport, out: &mut Vec<String>) {
    let base = format!("{},{},{}", report.graph6, report.n, report.check);
    if report.details.is_empty() {
        out.push(format!("{base},,,,,,,,{},", report.status));
        return;
    }
    for row in &report.details {
        let gamma_variant = row.gamma_variant.map(variant_text).unwrap_or_default();
        let gamma_value = row.gamma_value.map(value_text).unwrap_or_default();
        let slack = row.slack.map(|s| s.to_string()).unwrap_or_default();
        let class = row.class.map(|c| c.to_string()).unwrap_or_default();
        out.push(format!(
            "{base},{},{},{},{},{gamma_variant},{gamma_value},{slack},{},{class}",
            row.lambda.sf_poly(),
            approx_text(&row.lambda),
            row.mult,
            row.n_minus_mult,
            row.status,
        ));
    }
}

pub fn report_json(report: &TheoremReport) -> Value {
    let details: Vec<Value> = report
        .details
        .iter()
        .map(|row| {
            json!({
                "matrix": row.kind.to_string(),
                "lambda": row.lambda.to_string(),
                "lambda_poly": row.lambda.sf_poly().to_string(),
                "lambda_approx": row.lambda.approx_f64(),
                "mult": row.mult,
                "n_minus_mult": row.n_minus_mult,
                "gamma_variant": row.gamma_variant.map(variant_text),
                "gamma_value": row.gamma_value.map(|v| match v.finite() {
                    Some(k) => json!(k),
                    None => json!("infinite"),
                }),
                "slack": row.slack,
                "witness": row.witness.map(vertices),
                "status": row.status.to_string(),
                "class": row.class.map(|c| c.to_string()),
            })
        })
        .collect();
    json!({
        "graph6": report.graph6,
        "n": report.n,
        "check": report.check.to_string(),
        "p": report.p,
        "status": report.status.to_string(),
        "details": details,
        "notes": report.notes,
    })
}

pub fn spectrum_csv_header() -> &'static str {
    "graph6,n,matrix,lambda_poly,lambda_approx,multiplicity"
}

pub fn spectrum_csv_rows(graph6: &str, n: usize, summary: &SpectrumSummary, out: &mut Vec<String>) {
    for (lambda, mult) in &summary.eigenvalues {
        out.push(format!(
            "{graph6},{n},{},{},{},{mult}",
            summary.kind,
            lambda.sf_poly(),
            approx_text(lambda),
        ));
    }
}

pub fn spectrum_json(graph6: &str, n: usize, summary: &SpectrumSummary) -> Value {
    let eigenvalues: Vec<Value> = summary
        .eigenvalues
        .iter()
        .map(|(lambda, mult)| {
            json!({
                "lambda": lambda.to_string(),
                "lambda_poly": lambda.sf_poly().to_string(),
                "lambda_approx": lambda.approx_f64(),
                "multiplicity": mult,
            })
        })
        .collect();
    json!({
        "graph6": graph6,
        "n": n,
        "matrix": summary.kind.to_string(),
        "charpoly": summary.charpoly.to_string(),
        "eigenvalues": eigenvalues,
    })
}

pub fn domination_csv_header() -> &'static str {
    "graph6,n,variant,value,witness"
}

pub fn domination_csv_row(
    graph6: &str,
    g: &Graph,
    variant: DominationVariant,
    value: DominationValue,
    witness: Option<u64>,
) -> String {
    let witness = witness
        .map(|w| {
            vertices(w)
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default();
    format!(
        "{graph6},{},{},{},{witness}",
        g.n(),
        variant_text(variant),
        value_text(value)
    )
}

pub fn domination_json(
    graph6: &str,
    g: &Graph,
    variant: DominationVariant,
    value: DominationValue,
    witness: Option<u64>,
) -> Value {
    json!({
        "graph6": graph6,
        "n": g.n(),
        "variant": variant_text(variant),
        "value": match value.finite() {
            Some(k) => json!(k),
            None => json!("infinite"),
        },
        "witness": witness.map(vertices),
    })
}

pub fn star_set_csv_header() -> &'static str {
    "graph6,n,matrix,lambda,star_set,complement,complement_connected"
}

fn mask_text(mask: u64) -> String {
    vertices(mask)
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn star_set_csv_row(graph6: &str, g: &Graph, part: &StarPartition) -> String {
    format!(
        "{graph6},{},{},{},{},{},{}",
        g.n(),
        part.kind,
        part.lambda,
        mask_text(part.star_set),
        mask_text(part.complement),
        complement_connected(g, part),
    )
}

pub fn star_set_json(graph6: &str, g: &Graph, part: &StarPartition) -> Value {
    json!({
        "graph6": graph6,
        "lambda": part.lambda.to_string(),
        "star_set": vertices(part.star_set),
        "complement": vertices(part.complement),
        "complement_connected": complement_connected(g, part),
    })
}

fn complement_connected(g: &Graph, part: &StarPartition) -> bool {
    part.complement != 0 && g.is_connected_subset(part.complement)
}
