//! Exact domination numbers with witness sets.
//!
//! All searches are exhaustive by cardinality, so returned values are exact
//! minima. Feasibility scans subsets in colex order (ascending bitmask);
//! the reported witness is the lexicographically least minimum set under
//! ascending-vertex-tuple order, found by a second scan, so reports are
//! reproducible.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{bits, Error, Result};

/// Which domination parameter to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DominationVariant {
    /// Every vertex outside the set has a neighbor inside. Same as
    /// `PDomination(1)`.
    Domination,
    /// Every vertex of the graph, including members of the set, has a
    /// neighbor inside the set.
    TotalDomination,
    /// Every vertex outside the set has at least `p` neighbors inside.
    PDomination(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominationValue {
    Finite(usize),
    /// No set of any size satisfies the predicate. Happens exactly for
    /// total domination of the one-vertex graph among connected inputs.
    Infinite,
}

impl DominationValue {
    pub fn finite(&self) -> Option<usize> {
        match self {
            DominationValue::Finite(v) => Some(*v),
            DominationValue::Infinite => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationCertificate {
    pub variant: DominationVariant,
    pub value: DominationValue,
    /// Lexicographically least minimum set; `None` iff the value is
    /// infinite.
    pub witness: Option<u64>,
}

/// True iff every vertex outside `s` has at least `p` neighbors in `s`.
pub fn is_p_dominating(g: &Graph, s: u64, p: usize) -> bool {
    debug_assert_eq!(s & !g.vertex_mask(), 0);
    bits(g.vertex_mask() & !s).all(|v| (g.neighbors(v) & s).count_ones() as usize >= p)
}

/// True iff every vertex of the graph has a neighbor in `s`.
pub fn is_total_dominating(g: &Graph, s: u64) -> bool {
    debug_assert_eq!(s & !g.vertex_mask(), 0);
    (0..g.n()).all(|v| g.neighbors(v) & s != 0)
}

fn satisfies(g: &Graph, variant: DominationVariant, s: u64) -> bool {
    match variant {
        DominationVariant::Domination => is_p_dominating(g, s, 1),
        DominationVariant::PDomination(p) => is_p_dominating(g, s, p),
        DominationVariant::TotalDomination => is_total_dominating(g, s),
    }
}

/// Exact domination number of a connected graph, with the lexicographically
/// least witness. Disconnected input is rejected; `PDomination(0)` is
/// rejected (p must be positive).
pub fn domination_number(g: &Graph, variant: DominationVariant) -> Result<DominationCertificate> {
    if let DominationVariant::PDomination(0) = variant {
        return Err(Error::InvalidArgument("p must be positive"));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    for k in 0..=n {
        if colex_subsets(n, k).any(|s| satisfies(g, variant, s)) {
            let witness = lex_subsets(n, k)
                .find(|&s| satisfies(g, variant, s))
                .expect("feasible size has a lex witness");
            return Ok(DominationCertificate {
                variant,
                value: DominationValue::Finite(k),
                witness: Some(witness),
            });
        }
    }
    Ok(DominationCertificate { variant, value: DominationValue::Infinite, witness: None })
}

/// All external private neighbors: pairs `(T, u)` with `u` outside `s` and
/// `N(u) ∩ s = T` of size exactly `p`. Ordered by `u` ascending; `T` is
/// determined by `u`.
pub fn epn_witnesses(g: &Graph, s: u64, p: usize) -> Vec<(u64, usize)> {
    debug_assert_eq!(s & !g.vertex_mask(), 0);
    let mut out = Vec::new();
    for u in bits(g.vertex_mask() & !s) {
        let t = g.neighbors(u) & s;
        if t.count_ones() as usize == p {
            out.push((t, u));
        }
    }
    out
}

/// Outcome of the external-private-neighbor hypothesis search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpnReport {
    pub p: usize,
    pub gamma_p: usize,
    /// Some minimum p-dominating set S has an external private neighbor for
    /// EVERY p-element subset of S. This is the hypothesis strong enough to
    /// force eigenvector coordinates on S to vanish: subtracting the
    /// relations of two subsets differing in one vertex equates any two
    /// coordinates, and any single relation then zeroes them all.
    pub holds: bool,
    /// First qualifying minimum set in colex order.
    pub witness: Option<u64>,
    /// Set when the search was skipped outright.
    pub skip_reason: Option<&'static str>,
    /// Some minimum set passes a weaker reading: every vertex lies in an
    /// EPN-witnessed p-subset and the witnessed subsets chain together
    /// through (p-1)-overlaps. That reading admits graphs on which the
    /// multiplicity bound is FALSE (six vertices suffice, see the tests),
    /// so it is reported for diagnostics only.
    pub weaker_reading_holds: bool,
    pub minimum_sets_examined: usize,
}

/// Search all minimum p-dominating sets for one in which every p-element
/// subset has a common external private neighbor. Requires `gamma_p > p` to
/// be meaningful; otherwise reports a skip.
pub fn epn_hypothesis(g: &Graph, p: usize) -> Result<EpnReport> {
    let cert = domination_number(g, DominationVariant::PDomination(p))?;
    let gamma_p = cert.value.finite().expect("p-domination is always finite");
    if gamma_p <= p {
        return Ok(EpnReport {
            p,
            gamma_p,
            holds: false,
            witness: None,
            skip_reason: Some("gamma_p <= p"),
            weaker_reading_holds: false,
            minimum_sets_examined: 0,
        });
    }
    let n = g.n();
    let mut weaker = false;
    let mut examined = 0;
    for s in colex_subsets(n, gamma_p) {
        if !is_p_dominating(g, s, p) {
            continue;
        }
        examined += 1;
        let witnessed: BTreeSet<u64> = epn_witnesses(g, s, p).into_iter().map(|(t, _)| t).collect();
        let union = witnessed.iter().fold(0u64, |acc, t| acc | t);
        if union == s && overlap_connected(&witnessed, p) {
            weaker = true;
        }
        if all_p_subsets_witnessed(s, p, &witnessed) {
            return Ok(EpnReport {
                p,
                gamma_p,
                holds: true,
                witness: Some(s),
                skip_reason: None,
                weaker_reading_holds: true,
                minimum_sets_examined: examined,
            });
        }
    }
    Ok(EpnReport {
        p,
        gamma_p,
        holds: false,
        witness: None,
        skip_reason: None,
        weaker_reading_holds: weaker,
        minimum_sets_examined: examined,
    })
}

/// Does `witnessed` contain every p-element subset of the set `s`?
fn all_p_subsets_witnessed(s: u64, p: usize, witnessed: &BTreeSet<u64>) -> bool {
    let verts: Vec<usize> = bits(s).collect();
    colex_subsets(verts.len(), p).all(|index_mask| {
        let t = bits(index_mask).fold(0u64, |acc, j| acc | 1u64 << verts[j]);
        witnessed.contains(&t)
    })
}

/// Is the graph on the witnessed p-subsets connected, where two subsets are
/// adjacent iff they share exactly p-1 vertices?
fn overlap_connected(witnessed: &BTreeSet<u64>, p: usize) -> bool {
    let nodes: Vec<u64> = witnessed.iter().copied().collect();
    if nodes.len() <= 1 {
        return true;
    }
    let mut seen = alloc::vec![false; nodes.len()];
    let mut stack = alloc::vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for j in 0..nodes.len() {
            if !seen[j] && (nodes[i] & nodes[j]).count_ones() as usize == p - 1 {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    reached == nodes.len()
}

/// All k-subsets of `{0..n}` as bitmasks in colex order, which is exactly
/// ascending numeric order (Gosper's hack).
pub(crate) fn colex_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n <= 64 && k <= 64);
    let first = if k == 0 {
        Some(0u64)
    } else if k > n {
        None
    } else if k == 64 {
        Some(u64::MAX)
    } else {
        Some((1u64 << k) - 1)
    };
    ColexSubsets { n, cur: first }
}

struct ColexSubsets {
    n: usize,
    cur: Option<u64>,
}

impl Iterator for ColexSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.cur?;
        self.cur = (|| {
            if cur == 0 {
                return None; // the empty set is alone in its size class
            }
            let c = cur & cur.wrapping_neg();
            let r = cur.checked_add(c)?;
            let next = (((r ^ cur) >> 2) / c) | r;
            if self.n < 64 && next >> self.n != 0 {
                return None;
            }
            Some(next)
        })();
        Some(cur)
    }
}

/// All k-subsets in lexicographic order of their ascending vertex tuples:
/// {0,1}, {0,2}, ..., {0,n-1}, {1,2}, ...
pub(crate) fn lex_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let first: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    LexSubsets { n, k, cur: first }
}

struct LexSubsets {
    n: usize,
    k: usize,
    cur: Option<Vec<usize>>,
}

impl Iterator for LexSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.cur.as_mut()?;
        let mask = cur.iter().fold(0u64, |acc, &v| acc | 1u64 << v);
        // Advance: bump the rightmost index that still has room.
        let mut advanced = false;
        for i in (0..self.k).rev() {
            if cur[i] < self.n - self.k + i {
                cur[i] += 1;
                for j in i + 1..self.k {
                    cur[j] = cur[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.cur = None;
        }
        Some(mask)
    }
}
