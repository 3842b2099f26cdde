//! Check execution over a graph stream: chunked so memory stays bounded on
//! large enumerations, parallel inside each chunk when --jobs allows, output
//! written in input order regardless of worker scheduling.

use std::io::Write;

use stardom_core::verify::{run_check, Census, CheckKind, Status, TheoremReport};
use stardom_core::Graph;

use crate::input::GraphItem;
use crate::report;
use crate::OutputFormat;

const CHUNK: usize = 512;

pub struct VerifyOutcome {
    pub graphs: usize,
    pub reports: usize,
    pub violated: usize,
    pub aborted: bool,
    pub census: Census,
}

pub struct VerifyJob {
    pub checks: Vec<CheckKind>,
    pub p_values: Vec<usize>,
    pub shard: Option<(usize, usize)>,
    pub keep_going: bool,
    pub jobs: usize,
    pub format: OutputFormat,
}

fn run_graph(g: &Graph, job: &VerifyJob) -> Result<Vec<TheoremReport>, String> {
    let mut reports = Vec::new();
    for &check in &job.checks {
        if check.needs_p() {
            for &p in &job.p_values {
                reports.push(run_check(g, check, p).map_err(|e| e.to_string())?);
            }
        } else {
            reports.push(run_check(g, check, 1).map_err(|e| e.to_string())?);
        }
    }
    Ok(reports)
}

pub fn run_verify(
    stream: impl Iterator<Item = GraphItem>,
    job: &VerifyJob,
    out: &mut dyn Write,
) -> Result<VerifyOutcome, String> {
    let mut outcome = VerifyOutcome {
        graphs: 0,
        reports: 0,
        violated: 0,
        aborted: false,
        census: Census::new(),
    };
    let mut json_first = true;
    match job.format {
        OutputFormat::Csv => writeln!(out, "{}", report::CSV_HEADER).map_err(io_err)?,
        OutputFormat::Json => write!(out, "[").map_err(io_err)?,
    }

    let mut stream = stream.filter(|item| match (item, job.shard) {
        (Ok((ordinal, _)), Some((k, m))) => ordinal % m == k,
        _ => true,
    });
    'outer: loop {
        let mut chunk: Vec<(usize, Graph)> = Vec::with_capacity(CHUNK);
        for item in stream.by_ref() {
            chunk.push(item?);
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<Result<Vec<TheoremReport>, String>> = if job.jobs > 1 {
            use rayon::prelude::*;
            chunk.par_iter().map(|(_, g)| run_graph(g, job)).collect()
        } else {
            chunk.iter().map(|(_, g)| run_graph(g, job)).collect()
        };
        for ((ordinal, g), result) in chunk.iter().zip(results) {
            let reports = result.map_err(|e| {
                let g6 = stardom_core::graph6::encode_graph6(g).unwrap_or_default();
                format!("graph {} ({g6}): {e}", ordinal + 1)
            })?;
            outcome.graphs += 1;
            for r in &reports {
                outcome.reports += 1;
                if r.status == Status::Violated {
                    outcome.violated += 1;
                }
                outcome.census.absorb(r);
                match job.format {
                    OutputFormat::Csv => {
                        let mut rows = Vec::new();
                        report::csv_rows(r, &mut rows);
                        for row in rows {
                            writeln!(out, "{row}").map_err(io_err)?;
                        }
                    }
                    OutputFormat::Json => {
                        if !json_first {
                            writeln!(out, ",").map_err(io_err)?;
                        }
                        json_first = false;
                        let text = serde_json::to_string(&report::report_json(r))
                            .expect("report serialization cannot fail");
                        write!(out, "{text}").map_err(io_err)?;
                    }
                }
            }
            if outcome.violated > 0 && !job.keep_going {
                outcome.aborted = true;
                break 'outer;
            }
        }
    }

    if job.format == OutputFormat::Json {
        writeln!(out, "]").map_err(io_err)?;
    }
    out.flush().map_err(io_err)?;
    Ok(outcome)
}

fn io_err(e: std::io::Error) -> String {
    format!("cannot write output: {e}")
}
