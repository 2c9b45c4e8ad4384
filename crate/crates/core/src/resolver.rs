//! Metric and adjacency representations, resolving-set checks, exact
//! dimension search, adjacency-basis enumeration, and gap analysis.
//!
//! The dimension search scans subset sizes in increasing order and, within
//! a size, subsets in lexicographic order, so the reported witness is the
//! lexicographically first one. Representation vectors are packed into
//! machine words and collision-checked through hash-set insertions; large
//! search spaces are partitioned across parallel workers in a way that
//! preserves the sequential first-witness semantics.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::graph::{Distance, Graph};
use crate::twins;

/// Which representation the solver works with: full hop distances or
/// distances truncated at 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Mode {
    Metric,
    Adjacency,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Metric => write!(f, "metric"),
            Mode::Adjacency => write!(f, "adjacency"),
        }
    }
}

/// The four hypothesis patterns on the adjacency bases of a graph, as used
/// by the product theorems.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum TheoremCase {
    /// Some basis has no all-ones vertex and some basis has no all-twos
    /// vertex (possibly the same one).
    BothAvoidable,
    /// Every basis has both an all-ones and an all-twos vertex.
    AllBasesBoth,
    /// Every basis has an all-ones vertex; some basis has no all-twos vertex.
    AllBasesOnes,
    /// Every basis has an all-twos vertex; some basis has no all-ones vertex.
    AllBasesTwos,
}

impl std::fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TheoremCase::BothAvoidable => "BothAvoidable",
            TheoremCase::AllBasesBoth => "AllBasesBoth",
            TheoremCase::AllBasesOnes => "AllBasesOnes",
            TheoremCase::AllBasesTwos => "AllBasesTwos",
        };
        write!(f, "{s}")
    }
}

/// One adjacency basis with its hypothesis flags.
#[derive(Clone, Debug, Serialize)]
pub struct BasisInfo {
    pub vertices: Vec<usize>,
    /// Some vertex is adjacent to every landmark (representation all 1s).
    pub has_all_ones: bool,
    /// Some vertex is at truncated distance 2 from every landmark.
    pub has_all_twos: bool,
}

/// Exhaustive list of the adjacency bases of a graph plus the derived
/// theorem case.
#[derive(Clone, Debug, Serialize)]
pub struct BasisReport {
    pub order: usize,
    pub adim: usize,
    pub bases: Vec<BasisInfo>,
    pub case: TheoremCase,
}

/// Gaps of a landmark set: connected components of the graph induced on the
/// non-landmarks, plus which gap pairs can be joined through one landmark.
#[derive(Clone, Debug, Serialize)]
pub struct GapDecomposition {
    pub landmarks: Vec<usize>,
    pub gaps: Vec<Vec<usize>>,
    /// Index pairs (i, j), i < j, of neighboring gaps.
    pub neighboring: Vec<(usize, usize)>,
}

impl GapDecomposition {
    pub fn are_neighbors(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.neighboring.contains(&key)
    }

    pub fn neighbors_of(&self, i: usize) -> Vec<usize> {
        self.neighboring
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }
}

/// The representation of `v` with respect to the ordered landmark list:
/// hop distances in metric mode, min{2, d} in adjacency mode.
///
/// Metric mode errors when an unreachable pair is encountered.
pub fn representation(g: &Graph, v: usize, landmarks: &[usize], mode: Mode) -> Result<Vec<u32>> {
    check_vertices(g, landmarks)?;
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    match mode {
        Mode::Adjacency => Ok(landmarks
            .iter()
            .map(|&w| adjacency_entry(g, v, w))
            .collect()),
        Mode::Metric => {
            let dist = g.bfs_distances();
            landmarks
                .iter()
                .map(|&w| match dist.get(v, w) {
                    Distance::Finite(d) => Ok(d),
                    Distance::Unreachable => Err(Error::Disconnected {
                        context: "metric representation needs finite distances",
                    }),
                })
                .collect()
        }
    }
}

/// True when all vertices get pairwise distinct representations with
/// respect to the landmark list.
pub fn is_resolving(g: &Graph, landmarks: &[usize], mode: Mode) -> Result<bool> {
    check_vertices(g, landmarks)?;
    let mut seen = HashSet::with_capacity(g.order());
    for v in g.vertices() {
        if !seen.insert(representation(g, v, landmarks, mode)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The exact dimension in the given mode, plus the lexicographically first
/// witness set of that size.
///
/// Metric mode rejects disconnected graphs. The search scans subset sizes
/// upward starting from cheap exact lower bounds.
pub fn dimension(g: &Graph, mode: Mode) -> Result<(usize, Vec<usize>)> {
    let n = g.order();
    if n == 1 {
        // empty-set convention for the one-vertex graph
        return Ok((0, Vec::new()));
    }
    let space = SearchSpace::build(g, mode)?;
    let lower = lower_bound(g, &space, mode);
    for k in lower..n {
        if let Some(witness) = space.first_resolving(k) {
            return Ok((k, witness));
        }
    }
    unreachable!("every graph of order n >= 2 is resolved by some (n-1)-set")
}

/// Every minimum adjacency resolving set of `g`, with per-basis all-ones /
/// all-twos flags and the derived theorem case.
pub fn all_adjacency_bases(g: &Graph) -> BasisReport {
    let n = g.order();
    let (adim, _) =
        dimension(g, Mode::Adjacency).expect("adjacency dimension is defined for every graph");
    let space = SearchSpace::build(g, Mode::Adjacency).expect("adjacency entries are total");
    let mut bases = Vec::new();
    let mut subset: Vec<usize> = (0..adim).collect();
    let mut seen = HashSet::with_capacity(2 * n);
    loop {
        if space.resolves(&subset, &mut seen) {
            let row = BitRow::from_indices(n, &subset);
            let has_all_ones = (0..n).any(|v| !row.contains(v) && g.row(v).contains_all(&row));
            let has_all_twos = (0..n).any(|v| !row.contains(v) && !g.row(v).intersects(&row));
            bases.push(BasisInfo {
                vertices: subset.clone(),
                has_all_ones,
                has_all_twos,
            });
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    let case = classify_case(&bases);
    BasisReport {
        order: n,
        adim,
        bases,
        case,
    }
}

/// Derives the theorem case from the basis flags. Exactly one case holds:
/// the four conditions are the truth table of (every basis has all-ones,
/// every basis has all-twos).
pub fn classify_case(bases: &[BasisInfo]) -> TheoremCase {
    let every_ones = bases.iter().all(|b| b.has_all_ones);
    let every_twos = bases.iter().all(|b| b.has_all_twos);
    match (every_ones, every_twos) {
        (false, false) => TheoremCase::BothAvoidable,
        (true, true) => TheoremCase::AllBasesBoth,
        (true, false) => TheoremCase::AllBasesOnes,
        (false, true) => TheoremCase::AllBasesTwos,
    }
}

/// Decomposes the non-landmark vertices into gaps and computes the
/// neighboring relation. Requires at least two landmarks.
pub fn gaps(g: &Graph, landmarks: &[usize]) -> Result<GapDecomposition> {
    if landmarks.len() < 2 {
        return Err(Error::GapSetTooSmall(landmarks.len()));
    }
    check_vertices(g, landmarks)?;
    let n = g.order();
    let landmark_row = BitRow::from_indices(n, landmarks);
    if landmark_row.count() != landmarks.len() {
        let mut seen = BitRow::new(n);
        for &v in landmarks {
            if seen.contains(v) {
                return Err(Error::DuplicateLandmark(v));
            }
            seen.set(v);
        }
    }

    let mut allowed = BitRow::full(n);
    allowed.subtract(&landmark_row);
    let mut assigned = BitRow::new(n);
    let mut gap_sets: Vec<BitRow> = Vec::new();
    for v in 0..n {
        if allowed.contains(v) && !assigned.contains(v) {
            let comp = g.component_within(v, &allowed);
            assigned.union_with(&comp);
            gap_sets.push(comp);
        }
    }

    let mut neighboring = Vec::new();
    for i in 0..gap_sets.len() {
        for j in (i + 1)..gap_sets.len() {
            let joinable = landmarks.iter().any(|&x| {
                let mut region = gap_sets[i].clone();
                region.union_with(&gap_sets[j]);
                region.set(x);
                let start = region.iter_ones().next().expect("region is nonempty");
                g.component_within(start, &region).count() == region.count()
            });
            if joinable {
                neighboring.push((i, j));
            }
        }
    }

    Ok(GapDecomposition {
        landmarks: landmarks.to_vec(),
        gaps: gap_sets.iter().map(|s| s.iter_ones().collect()).collect(),
        neighboring,
    })
}

#[inline]
fn adjacency_entry(g: &Graph, v: usize, w: usize) -> u32 {
    if v == w {
        0
    } else if g.has_edge(v, w) {
        1
    } else {
        2
    }
}

fn check_vertices(g: &Graph, vertices: &[usize]) -> Result<()> {
    for &v in vertices {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
    }
    Ok(())
}

/// Exact lower bounds for the dimension search.
///
/// Information bound: non-landmark vertices must receive distinct vectors
/// over the available entry values, so (diam+1)^k >= n-k in metric mode and
/// 2^k >= n-k in adjacency mode (non-landmark entries lie in {1,2}).
/// Twin bound: a resolving set misses at most one vertex of each twin
/// class, so k >= n - iota.
fn lower_bound(g: &Graph, space: &SearchSpace, mode: Mode) -> usize {
    let n = g.order();
    let base = match mode {
        Mode::Metric => space.max_entry as u128 + 1,
        Mode::Adjacency => 2,
    };
    let mut info = 1usize;
    let mut reach = base;
    while reach < (n - info) as u128 {
        info += 1;
        reach = reach.saturating_mul(base);
    }
    let twin = n - twins::twin_partition(g).iota;
    info.max(twin).max(1)
}

/// Precomputed per-vertex entry matrix for one search mode.
struct SearchSpace {
    n: usize,
    /// entries[v * n + w]: representation entry of vertex v for landmark w.
    entries: Vec<u32>,
    max_entry: u32,
    /// Bits needed per packed entry.
    bits: u32,
}

impl SearchSpace {
    fn build(g: &Graph, mode: Mode) -> Result<Self> {
        let n = g.order();
        let mut entries = vec![0u32; n * n];
        match mode {
            Mode::Adjacency => {
                for v in 0..n {
                    for w in 0..n {
                        entries[v * n + w] = adjacency_entry(g, v, w);
                    }
                }
            }
            Mode::Metric => {
                let dist = g.bfs_distances();
                if !dist.all_finite() {
                    return Err(Error::Disconnected {
                        context: "metric dimension is defined for connected graphs",
                    });
                }
                for v in 0..n {
                    for w in 0..n {
                        entries[v * n + w] = dist.raw(v, w);
                    }
                }
            }
        }
        let max_entry = entries.iter().copied().max().unwrap_or(0);
        let bits = 32 - max_entry.leading_zeros().min(31);
        Ok(SearchSpace {
            n,
            entries,
            max_entry,
            bits,
        })
    }

    /// Collision check via packed keys; falls back to whole vectors when a
    /// packed key would not fit in 128 bits.
    fn resolves(&self, subset: &[usize], seen: &mut HashSet<u128>) -> bool {
        let k = subset.len();
        if k as u32 * self.bits <= 128 {
            seen.clear();
            for v in 0..self.n {
                let mut key = 0u128;
                for (i, &w) in subset.iter().enumerate() {
                    key |= (self.entries[v * self.n + w] as u128) << (i as u32 * self.bits);
                }
                if !seen.insert(key) {
                    return false;
                }
            }
            true
        } else {
            let mut vectors: Vec<Vec<u32>> = (0..self.n)
                .map(|v| subset.iter().map(|&w| self.entries[v * self.n + w]).collect())
                .collect();
            vectors.sort_unstable();
            vectors.windows(2).all(|w| w[0] != w[1])
        }
    }

    /// Lexicographically first resolving k-subset, if any.
    ///
    /// Large spaces are split into rank chunks scanned in parallel;
    /// `find_map_first` keeps the result identical to a sequential scan.
    fn first_resolving(&self, k: usize) -> Option<Vec<usize>> {
        const CHUNK: u128 = 8192;
        const HUGE: u128 = 1 << 60;
        let total = binomial(self.n, k);
        if total <= 4 * CHUNK || total >= HUGE {
            self.scan(first_combination(k), total)
        } else {
            let chunks = total.div_ceil(CHUNK) as u64;
            (0..chunks).into_par_iter().find_map_first(|ci| {
                let start = ci as u128 * CHUNK;
                let end = (start + CHUNK).min(total);
                self.scan(unrank_combination(self.n, k, start), end - start)
            })
        }
    }

    fn scan(&self, mut subset: Vec<usize>, count: u128) -> Option<Vec<usize>> {
        let mut seen = HashSet::with_capacity(2 * self.n);
        let mut remaining = count;
        while remaining > 0 {
            if self.resolves(&subset, &mut seen) {
                return Some(subset);
            }
            if !next_combination(&mut subset, self.n) {
                break;
            }
            remaining -= 1;
        }
        None
    }
}

fn first_combination(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// Advances a sorted index combination to its lexicographic successor over
/// ground set 0..n. Returns false when the input was the last combination.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in (i + 1)..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Binomial coefficient, saturating at u128::MAX.
fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 1..=k {
        match r.checked_mul((n - k + i) as u128) {
            Some(v) => r = v / i as u128,
            None => return u128::MAX,
        }
    }
    r
}

/// The combination of the given rank in lexicographic order.
fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut subset = Vec::with_capacity(k);
    let mut v = 0;
    for slot in 0..k {
        loop {
            let c = binomial(n - 1 - v, k - 1 - slot);
            if rank < c {
                break;
            }
            rank -= c;
            v += 1;
        }
        subset.push(v);
        v += 1;
    }
    subset
}
