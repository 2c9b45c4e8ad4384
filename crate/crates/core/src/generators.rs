//! Deterministic constructors for the named graph families.
//!
//! Every generator documents its vertex numbering so downstream tests can be
//! bit-exact. Path and cycle vertices follow the order (w_1, ..., w_m) with
//! w_k at index k-1.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path P_n with edges (i, i+1).
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(Graph::from_predicate(n, |i, j| j == i + 1))
}

/// Cycle C_n with edges (i, i+1) plus (n-1, 0). Requires n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    Ok(Graph::from_predicate(n, |i, j| {
        j == i + 1 || (i == 0 && j == n - 1)
    }))
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(Graph::from_predicate(n, |_, _| true))
}

/// Edgeless graph on n vertices.
pub fn empty(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(Graph::from_predicate(n, |_, _| false))
}

/// Complete multipartite graph. Vertices are grouped consecutively by part,
/// in the given part order; edges run exactly between different parts.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::NoParts);
    }
    if parts.contains(&0) {
        return Err(Error::ZeroPart);
    }
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(size));
    }
    Ok(Graph::from_predicate(n, |i, j| part_of[i] != part_of[j]))
}

/// Kneser graph KG(k, r): vertices are the r-subsets of {1..k} in
/// lexicographic order, adjacent when disjoint. Only the regime
/// k >= 2r+1, r >= 1 is accepted.
pub fn kneser(k: usize, r: usize) -> Result<Graph> {
    if r == 0 || k < 2 * r + 1 {
        return Err(Error::KneserRegime { k, r });
    }
    let subsets = r_subsets(k, r);
    let masks: Vec<u64> = subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x))
        .collect();
    let g = Graph::from_predicate(subsets.len(), |i, j| masks[i] & masks[j] == 0);
    let labels = subsets
        .iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    Ok(g.with_labels(labels))
}

/// The Petersen graph, defined through KG(5, 2) so the line-graph identity
/// L(K_5) = complement(KG(5,2)) is exercised through one code path.
pub fn petersen() -> Graph {
    kneser(5, 2).expect("KG(5,2) is within the accepted regime")
}

/// All r-subsets of {1..k} in lexicographic order.
fn r_subsets(k: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=r).collect();
    loop {
        out.push(cur.clone());
        // advance to the lexicographic successor
        let mut i = r;
        while i > 0 && cur[i - 1] == k - (r - i) {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for j in i..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_2_is_k2() {
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
    }

    #[test]
    fn cycle_3_is_k3() {
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
    }

    #[test]
    fn empty_has_no_edges() {
        assert_eq!(empty(4).unwrap().size(), 0);
    }

    #[test]
    fn cycle_rejects_small_orders() {
        assert_eq!(cycle(2), Err(Error::CycleTooSmall(2)));
    }

    #[test]
    fn edge_counts_match_the_formulas() {
        for n in 1..10 {
            assert_eq!(path(n).unwrap().size(), n - 1);
            assert_eq!(complete(n).unwrap().size(), n * (n - 1) / 2);
        }
        for n in 3..10 {
            assert_eq!(cycle(n).unwrap().size(), n);
        }
    }

    #[test]
    fn multipartite_layouts() {
        assert_eq!(
            complete_multipartite(&[1, 1, 1]).unwrap(),
            complete(3).unwrap()
        );
        // [2,2]: parts {0,1} and {2,3} fully joined
        let g = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(
            g.edges(),
            vec![(0, 2), (0, 3), (1, 2), (1, 3)]
        );
        assert_eq!(complete_multipartite(&[]), Err(Error::NoParts));
        assert_eq!(complete_multipartite(&[2, 0]), Err(Error::ZeroPart));
    }

    #[test]
    fn multipartite_edge_count_is_sum_of_part_products() {
        let cases: &[&[usize]] = &[&[2, 2], &[3, 1], &[2, 2, 1], &[4, 3, 2, 1]];
        for parts in cases {
            let mut expect = 0;
            for i in 0..parts.len() {
                for j in (i + 1)..parts.len() {
                    expect += parts[i] * parts[j];
                }
            }
            assert_eq!(complete_multipartite(parts).unwrap().size(), expect);
        }
    }

    /// Independent oracle for KG(5,2): count disjoint pairs by brute force
    /// over explicit subsets.
    #[test]
    fn kneser_5_2_counts() {
        let mut pairs = Vec::new();
        for a in 1..=5u32 {
            for b in (a + 1)..=5 {
                pairs.push((a, b));
            }
        }
        let mut disjoint = 0;
        for i in 0..pairs.len() {
            for j in (i + 1)..pairs.len() {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                if a != c && a != d && b != c && b != d {
                    disjoint += 1;
                }
            }
        }
        let g = kneser(5, 2).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), disjoint);
        assert_eq!(disjoint, 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn kneser_labels_are_lexicographic_subsets() {
        let g = kneser(5, 2).unwrap();
        assert_eq!(g.label(0), Some("{1,2}"));
        assert_eq!(g.label(1), Some("{1,3}"));
        assert_eq!(g.label(9), Some("{4,5}"));
    }

    #[test]
    fn kneser_regularity() {
        // KG(k,r) is C(k-r, r)-regular
        let binom = |n: usize, k: usize| -> usize {
            let mut r = 1usize;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        };
        for &(k, r) in &[(5, 2), (7, 2), (7, 3), (9, 4)] {
            let g = kneser(k, r).unwrap();
            let expected = binom(k - r, r);
            assert!(g.vertices().all(|v| g.degree(v) == expected), "KG({k},{r})");
        }
    }

    #[test]
    fn kneser_rejects_out_of_regime() {
        assert_eq!(kneser(4, 2), Err(Error::KneserRegime { k: 4, r: 2 }));
        assert_eq!(kneser(5, 0), Err(Error::KneserRegime { k: 5, r: 0 }));
    }

    #[test]
    fn kneser_7_3_shape() {
        let g = kneser(7, 3).unwrap();
        assert_eq!(g.order(), 35);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
    }

    #[test]
    fn petersen_shape() {
        let p = petersen();
        assert_eq!(p.order(), 10);
        assert_eq!(p.size(), 15);
        assert_eq!(p.diameter().unwrap(), 2);
        assert_eq!(p, kneser(5, 2).unwrap());
    }

    /// L(K_n) must equal complement(KG(n,2)) row-for-row under the
    /// lexicographic edge numbering, for n = 4, 5, 6.
    #[test]
    fn line_of_complete_is_kneser_complement() {
        for n in [4, 5, 6] {
            let lg = complete(n).unwrap().line_graph().unwrap();
            let kg_bar = kneser(n, 2).unwrap().complement();
            assert_eq!(lg, kg_bar, "n = {n}");
            // labels agree under the 0-based -> 1-based ground-set shift
            for v in 0..lg.order() {
                let shifted: String = lg
                    .label(v)
                    .unwrap()
                    .chars()
                    .map(|c| match c.to_digit(10) {
                        Some(d) => char::from_digit(d + 1, 10).unwrap(),
                        None => c,
                    })
                    .collect();
                assert_eq!(shifted, kg_bar.label(v).unwrap());
            }
        }
    }
}
