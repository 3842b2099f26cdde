//! Star sets and star complements.
//!
//! A star set for an eigenvalue λ of G is a vertex set X with |X| equal to
//! the multiplicity of λ such that λ is not an eigenvalue of G with X
//! removed; the removed graph is a star complement. Everything here works
//! with the adjacency matrix.

use alloc::vec::Vec;

use crate::algebraic::AlgebraicNumber;
use crate::domination::colex_subsets;
use crate::graph::Graph;
use crate::spectra::{is_eigenvalue_of, multiplicity, MatrixKind};
use crate::{bits, Error, Result};

/// A star set together with its complement.
#[derive(Debug, Clone)]
pub struct StarPartition {
    pub lambda: AlgebraicNumber,
    pub star_set: u64,
    pub complement: u64,
    pub kind: MatrixKind,
}

/// True iff λ is absent from the subgraph left after deleting `x`. An empty
/// remainder has no eigenvalues at all.
fn complement_lambda_free(g: &Graph, lambda: &AlgebraicNumber, x: u64) -> bool {
    let rest = g.vertex_mask() & !x;
    if rest == 0 {
        return true;
    }
    let (h, _) = g.induced(rest).expect("nonempty vertex set");
    !is_eigenvalue_of(&h, MatrixKind::Adjacency, lambda)
}

/// True iff `x` is a star set for λ: its size equals the multiplicity of λ
/// and deleting it removes λ from the spectrum.
pub fn is_star_set(g: &Graph, lambda: &AlgebraicNumber, x: u64) -> bool {
    debug_assert_eq!(x & !g.vertex_mask(), 0);
    let m = multiplicity(g, MatrixKind::Adjacency, lambda);
    x.count_ones() as usize == m && complement_lambda_free(g, lambda, x)
}

/// Every star set for λ, in ascending bitmask order. Empty iff λ is not an
/// eigenvalue.
pub fn all_star_sets(g: &Graph, lambda: &AlgebraicNumber) -> Vec<u64> {
    let m = multiplicity(g, MatrixKind::Adjacency, lambda);
    if m == 0 {
        return Vec::new();
    }
    colex_subsets(g.n(), m)
        .filter(|&x| complement_lambda_free(g, lambda, x))
        .collect()
}

/// Build a star set greedily: repeatedly delete the lowest-index vertex
/// whose removal drops the multiplicity of λ by one. Interlacing bounds the
/// drop by one, and star-set existence guarantees some vertex achieves it,
/// so the greedy always lands on a star set.
pub fn find_star_set(g: &Graph, lambda: &AlgebraicNumber) -> Result<StarPartition> {
    let m = multiplicity(g, MatrixKind::Adjacency, lambda);
    if m == 0 {
        return Err(Error::NotAnEigenvalue);
    }
    let mut star_set = 0u64;
    let mut remaining = g.vertex_mask();
    let mut cur = m;
    while cur > 0 {
        let v = bits(remaining)
            .find(|&v| {
                let rest = remaining & !(1u64 << v);
                let sub_mult = if rest == 0 {
                    0
                } else {
                    let (h, _) = g.induced(rest).expect("nonempty vertex set");
                    multiplicity(&h, MatrixKind::Adjacency, lambda)
                };
                sub_mult == cur - 1
            })
            .expect("some vertex drops the multiplicity");
        star_set |= 1u64 << v;
        remaining &= !(1u64 << v);
        cur -= 1;
    }
    Ok(StarPartition {
        lambda: lambda.clone(),
        star_set,
        complement: g.vertex_mask() & !star_set,
        kind: MatrixKind::Adjacency,
    })
}

/// Find a star complement that induces a connected subgraph, optionally
/// containing a non-empty seed set `k` (which must itself induce a
/// connected, λ-free subgraph no larger than the complement).
///
/// The search grows connected supersets of the seed depth-first in
/// ascending vertex order and tests λ-freeness only once a candidate
/// reaches full complement size. Intermediate sets are allowed to carry λ:
/// in C_6 with λ = 1 every valid complement induces P_4, yet every
/// two-vertex connected subgraph is an edge with eigenvalue 1, so a search
/// that insisted on λ-free growth would find nothing.
///
/// The one-vertex graph with λ = 0 is the degenerate case where the
/// multiplicity exhausts the order; the complement comes back empty.
pub fn find_connected_star_complement(
    g: &Graph,
    lambda: &AlgebraicNumber,
    k: Option<u64>,
) -> Result<StarPartition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = multiplicity(g, MatrixKind::Adjacency, lambda);
    if m == 0 {
        return Err(Error::NotAnEigenvalue);
    }
    let n = g.n();
    let target = n - m;

    let seed = match k {
        Some(seed) => {
            if seed == 0 {
                return Err(Error::InvalidArgument("seed must be nonempty"));
            }
            if seed & !g.vertex_mask() != 0 {
                return Err(Error::InvalidArgument("seed contains out-of-range vertices"));
            }
            if seed.count_ones() as usize > target {
                return Err(Error::InvalidArgument("seed is larger than the complement"));
            }
            if !g.is_connected_subset(seed) {
                return Err(Error::InvalidArgument("seed must induce a connected subgraph"));
            }
            let (h, _) = g.induced(seed).expect("nonempty vertex set");
            if is_eigenvalue_of(&h, MatrixKind::Adjacency, lambda) {
                return Err(Error::InvalidArgument("seed must not carry the eigenvalue"));
            }
            Some(seed)
        }
        None if target == 0 => None,
        None if lambda.is_integer(0) => {
            // A single vertex has eigenvalue 0, so seed with the lowest
            // edge instead (an edge has spectrum ±1).
            let u = bits(g.neighbors(0)).next().expect("connected graph with n >= 2 has edges");
            Some(0b1 | 1u64 << u)
        }
        None => Some(0b1),
    };

    let complement = match seed {
        None => 0,
        Some(seed) => grow_connected(g, lambda, target, seed, 0)
            .expect("a connected star complement always exists"),
    };
    Ok(StarPartition {
        lambda: lambda.clone(),
        star_set: g.vertex_mask() & !complement,
        complement,
        kind: MatrixKind::Adjacency,
    })
}

/// Depth-first enumeration of connected supersets of `cur` that avoid
/// `banned`, candidates taken in ascending vertex order. Each superset is
/// visited at most once (the classic include-then-ban branching). Returns
/// the first set of size `target` whose induced subgraph is λ-free.
fn grow_connected(
    g: &Graph,
    lambda: &AlgebraicNumber,
    target: usize,
    cur: u64,
    banned: u64,
) -> Option<u64> {
    if cur.count_ones() as usize == target {
        let (h, _) = g.induced(cur).expect("nonempty vertex set");
        return (!is_eigenvalue_of(&h, MatrixKind::Adjacency, lambda)).then_some(cur);
    }
    let hull = bits(cur).fold(0u64, |acc, v| acc | g.neighbors(v));
    let mut banned = banned;
    for v in bits(hull & !cur & !banned) {
        if let Some(found) = grow_connected(g, lambda, target, cur | 1u64 << v, banned) {
            return Some(found);
        }
        banned |= 1u64 << v;
    }
    None
}

/// True iff the `s`-neighborhoods of the vertices outside `s` are pairwise
/// distinct and all nonempty.
pub fn is_location_dominating(g: &Graph, s: u64) -> bool {
    debug_assert_eq!(s & !g.vertex_mask(), 0);
    let mut seen: Vec<u64> = Vec::new();
    for v in bits(g.vertex_mask() & !s) {
        let t = g.neighbors(v) & s;
        if t == 0 || seen.contains(&t) {
            return false;
        }
        seen.push(t);
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphFamily;
    use crate::poly::IntPolynomial;
    use crate::spectra::spectrum;
    use alloc::vec;
    use num_bigint::BigInt;

    fn graph(family: GraphFamily) -> Graph {
        family.generate().unwrap()
    }

    /// The golden-ratio eigenvalue (−1+√5)/2 of C_5.
    fn c5_golden() -> AlgebraicNumber {
        let s = spectrum(&graph(GraphFamily::Cycle(5)), MatrixKind::Adjacency);
        // Eigenvalues come back ascending: [(−1−√5)/2, (−1+√5)/2, 2].
        assert_eq!(s.eigenvalues.len(), 3);
        s.eigenvalues[1].0.clone()
    }

    fn int(k: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_integer(BigInt::from(k))
    }

    #[test]
    fn star_set_membership() {
        let c5 = graph(GraphFamily::Cycle(5));
        let golden = c5_golden();
        // Complement of two adjacent vertices is P_3 (spectrum 0, ±√2).
        assert!(is_star_set(&c5, &golden, 0b00011));
        // Complement of two vertices at distance two is K_2 ∪ K_1
        // (spectrum ±1, 0).
        assert!(is_star_set(&c5, &golden, 0b00101));
        // Wrong size: m = 2 but |X| = 1.
        assert!(!is_star_set(&c5, &golden, 0b00001));
        // The simple eigenvalue 2 has singleton star sets: deleting any
        // vertex leaves P_4, whose spectrum never contains 2.
        assert!(is_star_set(&c5, &int(2), 0b00001));

        let k4 = graph(GraphFamily::Complete(4));
        assert!(!is_star_set(&k4, &int(-1), 0b0001)); // m = 3, size 1
        assert!(is_star_set(&k4, &int(-1), 0b0111)); // complement K_1
    }

    #[test]
    fn all_star_sets_counts() {
        let c5 = graph(GraphFamily::Cycle(5));
        // Every 2-subset of C_5 leaves either P_3 or K_2 ∪ K_1, and neither
        // carries a golden eigenvalue, so all 10 pairs are star sets.
        assert_eq!(all_star_sets(&c5, &c5_golden()).len(), 10);
        // Deleting any single vertex leaves P_4, which never has 2.
        assert_eq!(all_star_sets(&c5, &int(2)).len(), 5);
        // Not an eigenvalue at all.
        assert_eq!(all_star_sets(&c5, &int(1)), vec![]);

        // P_3 at √2: all three singletons work (complements K_2, 2K_1, K_2).
        let p3 = graph(GraphFamily::Path(3));
        let sqrt2 = AlgebraicNumber::roots_of(&IntPolynomial::from(&[-2, 0, 1][..]))
            .unwrap()
            .pop()
            .unwrap();
        assert_eq!(all_star_sets(&p3, &sqrt2), vec![0b001, 0b010, 0b100]);
    }

    #[test]
    fn greedy_star_set_is_lowest_index() {
        let k4 = graph(GraphFamily::Complete(4));
        let part = find_star_set(&k4, &int(-1)).unwrap();
        assert_eq!(part.star_set, 0b0111);
        assert_eq!(part.complement, 0b1000);

        // K_{2,3} at 0 (multiplicity 3): the greedy removes 0, then 2, then
        // 3, leaving the edge {1, 4} whose spectrum ±1 avoids 0.
        let k23 = graph(GraphFamily::CompleteBipartite(2, 3));
        let part = find_star_set(&k23, &int(0)).unwrap();
        assert_eq!(part.star_set, 0b01101);
        assert_eq!(part.complement, 0b10010);
        assert!(is_star_set(&k23, &int(0), part.star_set));

        let p3 = graph(GraphFamily::Path(3));
        let sqrt2 = AlgebraicNumber::roots_of(&IntPolynomial::from(&[-2, 0, 1][..]))
            .unwrap()
            .pop()
            .unwrap();
        let part = find_star_set(&p3, &sqrt2).unwrap();
        assert_eq!(part.star_set, 0b001);

        assert_eq!(
            find_star_set(&graph(GraphFamily::Cycle(4)), &int(1)).unwrap_err(),
            Error::NotAnEigenvalue
        );
    }

    #[test]
    fn connected_complement_examples() {
        let c5 = graph(GraphFamily::Cycle(5));
        let part = find_connected_star_complement(&c5, &c5_golden(), None).unwrap();
        assert_eq!(part.complement, 0b00111); // {0,1,2} induces P_3
        assert_eq!(part.star_set, 0b11000);
        assert!(c5.is_connected_subset(part.complement));

        let k4 = graph(GraphFamily::Complete(4));
        let part = find_connected_star_complement(&k4, &int(-1), None).unwrap();
        assert_eq!(part.complement, 0b0001);

        // λ = 0 seeds with the lowest edge; in K_{2,3} that is {0, 2},
        // an edge across the bipartition, and its size already matches.
        let k23 = graph(GraphFamily::CompleteBipartite(2, 3));
        let part = find_connected_star_complement(&k23, &int(0), None).unwrap();
        assert_eq!(part.complement, 0b00101);
        assert!(is_star_set(&k23, &int(0), part.star_set));
    }

    #[test]
    fn growth_is_not_blocked_by_intermediate_eigenvalues() {
        // C_6 at λ = 1: every valid complement induces P_4 (1-free), but
        // every connected 2-vertex stage is an edge with spectrum ±1. If the
        // search rejected intermediate sets carrying λ, no branch could ever
        // reach size 4.
        let c6 = graph(GraphFamily::Cycle(6));
        let part = find_connected_star_complement(&c6, &int(1), None).unwrap();
        assert_eq!(part.complement, 0b001111); // {0,1,2,3} induces P_4
        assert!(is_star_set(&c6, &int(1), part.star_set));
        assert!(c6.is_connected_subset(part.complement));

        // Same search from a user seed on the far side.
        let part = find_connected_star_complement(&c6, &int(1), Some(0b001000)).unwrap();
        assert!(part.complement & 0b001000 != 0);
        assert_eq!(part.complement.count_ones(), 4);
        assert!(c6.is_connected_subset(part.complement));
        assert!(is_star_set(&c6, &int(1), part.star_set));
    }

    #[test]
    fn seed_preconditions_are_checked() {
        let c6 = graph(GraphFamily::Cycle(6));
        assert_eq!(
            find_connected_star_complement(&c6, &int(1), Some(0)).unwrap_err(),
            Error::InvalidArgument("seed must be nonempty")
        );
        assert_eq!(
            find_connected_star_complement(&c6, &int(1), Some(0b010100)).unwrap_err(),
            Error::InvalidArgument("seed must induce a connected subgraph")
        );
        // An edge carries 1 as an eigenvalue.
        assert_eq!(
            find_connected_star_complement(&c6, &int(1), Some(0b000011)).unwrap_err(),
            Error::InvalidArgument("seed must not carry the eigenvalue")
        );
        let k4 = graph(GraphFamily::Complete(4));
        assert_eq!(
            find_connected_star_complement(&k4, &int(-1), Some(0b0011)).unwrap_err(),
            Error::InvalidArgument("seed is larger than the complement")
        );
        assert_eq!(
            find_connected_star_complement(&c6, &int(1), Some(1 << 6)).unwrap_err(),
            Error::InvalidArgument("seed contains out-of-range vertices")
        );

        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            find_connected_star_complement(&split, &int(1), None).unwrap_err(),
            Error::Disconnected
        );
    }

    #[test]
    fn one_vertex_graph_has_empty_complement() {
        let k1 = graph(GraphFamily::Complete(1));
        let part = find_star_set(&k1, &int(0)).unwrap();
        assert_eq!(part.star_set, 0b1);
        assert_eq!(part.complement, 0);
        assert!(is_star_set(&k1, &int(0), 0b1));

        let part = find_connected_star_complement(&k1, &int(0), None).unwrap();
        assert_eq!(part.complement, 0);
        assert_eq!(part.star_set, 0b1);
    }

    #[test]
    fn location_domination_examples() {
        let c5 = graph(GraphFamily::Cycle(5));
        // Three consecutive vertices: the two outside vertices see {4} and
        // {2} respectively.
        assert!(is_location_dominating(&c5, 0b11100));

        let k4 = graph(GraphFamily::Complete(4));
        // All three outside vertices share the neighborhood {0}.
        assert!(!is_location_dominating(&k4, 0b0001));
        assert!(is_location_dominating(&k4, k4.vertex_mask()));

        // Empty neighborhood fails: P_4 with S = {0}.
        let p4 = graph(GraphFamily::Path(4));
        assert!(!is_location_dominating(&p4, 0b0001));
    }

    #[test]
    fn small_sweep_constructions_verify() {
        // For every eigenvalue of every connected graph on up to 4
        // vertices: the greedy star set verifies, appears in the exhaustive
        // list, and the connected complement search returns a connected,
        // λ-free complement of the right size.
        for n in 1..=4 {
            for g in crate::graph::enumerate_connected(n).unwrap() {
                let summary = spectrum(&g, MatrixKind::Adjacency);
                for (lambda, mult) in &summary.eigenvalues {
                    let part = find_star_set(&g, lambda).unwrap();
                    assert_eq!(part.star_set.count_ones() as usize, *mult);
                    assert!(is_star_set(&g, lambda, part.star_set));
                    assert!(all_star_sets(&g, lambda).contains(&part.star_set));

                    let part = find_connected_star_complement(&g, lambda, None).unwrap();
                    assert_eq!(part.complement.count_ones() as usize, n - mult);
                    assert!(is_star_set(&g, lambda, part.star_set));
                    if part.complement != 0 {
                        assert!(g.is_connected_subset(part.complement));
                    }
                }
            }
        }
    }
}
