//! Graph sources: a graph6 literal, a file of graph6 records, a builtin
//! family, or exhaustive enumeration. All sources yield graphs tagged with
//! 0-based ordinals so sharding and report order stay deterministic.

use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;

use stardom_core::graph6::parse_graph6;
use stardom_core::{enumerate_connected, Graph, GraphFamily};

#[derive(clap::Args, Debug)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// A single graph as a graph6 record
    #[arg(short = 'g', value_name = "GRAPH6")]
    pub graph6: Option<String>,

    /// File with one graph6 record per line (blank lines skipped)
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,

    /// Builtin family: K:n, K:r,s, C:n, P:n, or S:n
    #[arg(long, value_name = "SPEC")]
    pub family: Option<String>,

    /// Every connected graph on N vertices (1..=7)
    #[arg(long, value_name = "N")]
    pub enumerate: Option<usize>,
}

pub type GraphItem = Result<(usize, Graph), String>;

pub fn stream(input: &InputArgs) -> Result<Box<dyn Iterator<Item = GraphItem> + Send>, String> {
    if let Some(record) = &input.graph6 {
        let g = parse_graph6(record).map_err(|e| format!("-g {record:?}: {e}"))?;
        return Ok(Box::new(std::iter::once(Ok((0, g)))));
    }
    if let Some(path) = &input.file {
        let file = File::open(path).map_err(|e| format!("cannot open {}: {e}", path.display()))?;
        let name = path.display().to_string();
        let mut ordinal = 0usize;
        let iter = BufReader::new(file)
            .lines()
            .enumerate()
            .filter_map(move |(index, line)| {
                let line = match line {
                    Ok(line) => line,
                    Err(e) => return Some(Err(format!("{name} line {}: {e}", index + 1))),
                };
                let record = line.trim();
                if record.is_empty() {
                    return None;
                }
                match parse_graph6(record) {
                    Ok(g) => {
                        let item = Ok((ordinal, g));
                        ordinal += 1;
                        Some(item)
                    }
                    Err(e) => Some(Err(format!("{name} line {}: {e}", index + 1))),
                }
            });
        return Ok(Box::new(iter));
    }
    if let Some(spec) = &input.family {
        let g = parse_family(spec)?;
        return Ok(Box::new(std::iter::once(Ok((0, g)))));
    }
    if let Some(n) = input.enumerate {
        let graphs = enumerate_connected(n).map_err(|e| format!("--enumerate {n}: {e}"))?;
        return Ok(Box::new(graphs.enumerate().map(|(i, g)| Ok((i, g)))));
    }
    Err("no input source given".to_string())
}

fn parse_family(spec: &str) -> Result<Graph, String> {
    let bad = |why: &str| format!("--family {spec:?}: {why}");
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad("expected FORM:ARGS, e.g. K:5, K:2,3, C:6, P:4, S:5"))?;
    let parse_n = |text: &str| {
        text.trim()
            .parse::<usize>()
            .map_err(|_| bad("size must be a positive integer"))
    };
    let family = match (kind, rest.split_once(',')) {
        ("K", Some((r, s))) => GraphFamily::CompleteBipartite(parse_n(r)?, parse_n(s)?),
        ("K", None) => GraphFamily::Complete(parse_n(rest)?),
        ("C", None) => GraphFamily::Cycle(parse_n(rest)?),
        ("P", None) => GraphFamily::Path(parse_n(rest)?),
        ("S", None) => GraphFamily::Star(parse_n(rest)?),
        _ => return Err(bad("unknown form; use K:n, K:r,s, C:n, P:n, or S:n")),
    };
    family.generate().map_err(|e| bad(&e.to_string()))
}

/// Parse "k/m" into (k, m) with 0 <= k < m.
pub fn parse_shard(text: &str) -> Result<(usize, usize), String> {
    let bad = || format!("--shard {text:?}: expected K/M with 0 <= K < M");
    let (k, m) = text.split_once('/').ok_or_else(bad)?;
    let k: usize = k.trim().parse().map_err(|_| bad())?;
    let m: usize = m.trim().parse().map_err(|_| bad())?;
    if m == 0 || k >= m {
        return Err(bad());
    }
    Ok((k, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_specs_parse() {
        assert_eq!(parse_family("K:4").unwrap().edge_count(), 6);
        assert_eq!(parse_family("K:2,3").unwrap().edge_count(), 6);
        assert_eq!(parse_family("C:5").unwrap().edge_count(), 5);
        assert_eq!(parse_family("P:4").unwrap().edge_count(), 3);
        let star = parse_family("S:6").unwrap();
        assert_eq!(star.n(), 6);
        assert_eq!(star.degree(0), 5);
        assert!(parse_family("K4").is_err());
        assert!(parse_family("X:3").is_err());
        assert!(parse_family("C:x").is_err());
    }

    #[test]
    fn shard_specs_parse() {
        assert_eq!(parse_shard("0/4").unwrap(), (0, 4));
        assert_eq!(parse_shard("3/4").unwrap(), (3, 4));
        assert!(parse_shard("4/4").is_err());
        assert!(parse_shard("1").is_err());
        assert!(parse_shard("a/b").is_err());
        assert!(parse_shard("0/0").is_err());
    }
}
