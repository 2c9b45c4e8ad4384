//! Twin relation, twin classes, and the associated count vector.
//!
//! Vertices u, v are twins when N(u)\{v} = N(v)\{u}. Together with equality
//! this is an equivalence relation; every class of size >= 2 induces either
//! a clique (adjacent twins) or an independent set (non-adjacent twins).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Kind of a twin class: a singleton, a clique of adjacent twins, or an
/// independent set of non-adjacent twins.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ClassKind {
    Singleton,
    Clique,
    Independent,
}

#[derive(Clone, Debug, Serialize)]
pub struct TwinClass {
    pub vertices: Vec<usize>,
    pub kind: ClassKind,
}

/// The twin-class partition of a graph together with its counts:
/// `a`/`b` vertices in clique/independent classes, `iota` classes in total,
/// `iota_k`/`iota_n` clique/independent classes.
#[derive(Clone, Debug, Serialize)]
pub struct TwinSummary {
    pub n: usize,
    pub classes: Vec<TwinClass>,
    pub a: usize,
    pub b: usize,
    pub iota: usize,
    pub iota_k: usize,
    pub iota_n: usize,
}

impl TwinSummary {
    pub fn is_twin_free(&self) -> bool {
        self.classes.iter().all(|c| c.vertices.len() == 1)
    }
}

/// True when u and v are twins: N(u)\{v} = N(v)\{u}. Errors when u = v.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return Err(Error::TwinOfItself(u));
    }
    if u >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            order: g.order(),
        });
    }
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    Ok(g.row(u).eq_ignoring(g.row(v), u, v))
}

/// Groups the vertices into twin classes and fills in the count vector.
///
/// Grouping compares neighbor bit rows masked at the two candidate
/// positions; transitivity of the relation makes a single representative
/// comparison per class sufficient. Panics if a class of size >= 2 turns
/// out neither clique nor independent, which would signal a bug.
pub fn twin_partition(g: &Graph) -> TwinSummary {
    let n = g.order();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'vertex: for v in 0..n {
        for class in classes.iter_mut() {
            let rep = class[0];
            if g.row(rep).eq_ignoring(g.row(v), rep, v) {
                class.push(v);
                continue 'vertex;
            }
        }
        classes.push(vec![v]);
    }

    let classes: Vec<TwinClass> = classes
        .into_iter()
        .map(|vertices| {
            let kind = if vertices.len() == 1 {
                ClassKind::Singleton
            } else {
                let adjacent = g.has_edge(vertices[0], vertices[1]);
                for i in 0..vertices.len() {
                    for j in (i + 1)..vertices.len() {
                        assert_eq!(
                            g.has_edge(vertices[i], vertices[j]),
                            adjacent,
                            "twin class {vertices:?} is neither a clique nor an independent set"
                        );
                    }
                }
                if adjacent {
                    ClassKind::Clique
                } else {
                    ClassKind::Independent
                }
            };
            TwinClass { vertices, kind }
        })
        .collect();

    let a = classes
        .iter()
        .filter(|c| c.kind == ClassKind::Clique)
        .map(|c| c.vertices.len())
        .sum();
    let b = classes
        .iter()
        .filter(|c| c.kind == ClassKind::Independent)
        .map(|c| c.vertices.len())
        .sum();
    let iota = classes.len();
    let iota_k = classes.iter().filter(|c| c.kind == ClassKind::Clique).count();
    let iota_n = classes
        .iter()
        .filter(|c| c.kind == ClassKind::Independent)
        .count();
    // identity relating the counts; must hold for every graph
    assert_eq!(iota, n - a - b + iota_n + iota_k);

    TwinSummary {
        n,
        classes,
        a,
        b,
        iota,
        iota_k,
        iota_n,
    }
}
