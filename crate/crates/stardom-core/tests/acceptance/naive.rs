//! Brute-force domination oracle: scan every vertex subset and keep the
//! smallest one satisfying the variant's predicate, written directly from
//! the definitions so it shares no code with the library's search.

use stardom_core::{DominationVariant, Graph};

fn subset_satisfies(g: &Graph, s: u64, variant: DominationVariant) -> bool {
    match variant {
        DominationVariant::Domination => {
            (0..g.n()).all(|v| s >> v & 1 == 1 || g.neighbors(v) & s != 0)
        }
        DominationVariant::TotalDomination => (0..g.n()).all(|v| g.neighbors(v) & s != 0),
        DominationVariant::PDomination(p) => (0..g.n())
            .all(|v| s >> v & 1 == 1 || (g.neighbors(v) & s).count_ones() as usize >= p),
    }
}

pub fn naive_domination_number(g: &Graph, variant: DominationVariant) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..1u64 << g.n() {
        if subset_satisfies(g, s, variant) {
            let k = s.count_ones() as usize;
            if best.map_or(true, |b| k < b) {
                best = Some(k);
            }
        }
    }
    best
}
