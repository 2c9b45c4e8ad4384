//! Lexicographic product construction, theorem-based prediction of the
//! product's metric dimension, and the verification harness that checks
//! predictions (and closed-form table values) against brute force.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::resolver::{self, Mode, TheoremCase};
use crate::tables::{self, FamilyDescriptor};
use crate::twins;

/// A predicted dim(G[H]) value together with the theorem case that applied
/// and the numbers that were plugged in.
#[derive(Clone, Debug, Serialize)]
pub struct Prediction {
    pub value: usize,
    pub case: TheoremCase,
    pub trace: PredictionTrace,
}

/// The inputs of the applied formula: order and twin counts of G, adjacency
/// dimension of H, and the formula rendered with those numbers.
#[derive(Clone, Debug, Serialize)]
pub struct PredictionTrace {
    pub n: usize,
    pub adim_h: usize,
    pub a: usize,
    pub b: usize,
    pub iota: usize,
    pub iota_k: usize,
    pub iota_n: usize,
    pub formula: String,
}

impl PredictionTrace {
    /// Recomputes the predicted value from the recorded numbers; used to
    /// keep the trace honest.
    pub fn recompute(&self, case: TheoremCase) -> usize {
        let base = self.n * self.adim_h;
        match case {
            TheoremCase::BothAvoidable => base,
            TheoremCase::AllBasesBoth => self.n * (self.adim_h + 1) - self.iota,
            TheoremCase::AllBasesOnes => base + self.a - self.iota_k,
            TheoremCase::AllBasesTwos => base + self.b - self.iota_n,
        }
    }
}

/// One verified (G, H) pair: prediction, optional table value, optional
/// brute-force value, and the agreement flags.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub g: String,
    pub h: String,
    pub n: usize,
    pub m: usize,
    pub case: TheoremCase,
    pub predicted: usize,
    pub closed_form: Option<usize>,
    pub brute_force: Option<usize>,
    pub agree_pred: Option<bool>,
    pub agree_table: Option<bool>,
    pub millis: u64,
}

impl VerificationReport {
    /// The line-oriented JSON record format.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest product order that is still brute-forced.
    pub budget: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: 24 }
    }
}

/// The lexicographic product G[H]: vertex (v, u) gets index
/// v * |V(H)| + u; (v, u) ~ (v', u') iff v ~ v' in G, or v = v' and
/// u ~ u' in H. Labels record the pair.
pub fn lex_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    let product = Graph::from_predicate(g.order() * m, |x, y| {
        let (vx, ux) = (x / m, x % m);
        let (vy, uy) = (y / m, y % m);
        if vx == vy {
            h.has_edge(ux, uy)
        } else {
            g.has_edge(vx, vy)
        }
    });
    let name = |graph: &Graph, v: usize| match graph.label(v) {
        Some(l) => l.to_string(),
        None => v.to_string(),
    };
    let labels = (0..g.order() * m)
        .map(|x| format!("({},{})", name(g, x / m), name(h, x % m)))
        .collect();
    product.with_labels(labels)
}

/// Predicts dim(G[H]) from first principles: enumerate the adjacency bases
/// of H, classify the theorem case, and combine the twin counts of G.
///
/// Requires G connected of order >= 2 and H of order >= 2.
pub fn predict_dim_lex(g: &Graph, h: &Graph) -> Result<Prediction> {
    if g.order() < 2 {
        return Err(Error::ProductOrderTooSmall { side: "first" });
    }
    if h.order() < 2 {
        return Err(Error::ProductOrderTooSmall { side: "second" });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected {
            context: "the product theorems require a connected first factor",
        });
    }
    let report = resolver::all_adjacency_bases(h);
    let summary = twins::twin_partition(g);
    Ok(prediction_from_parts(&summary, report.adim, report.case))
}

fn prediction_from_parts(
    summary: &twins::TwinSummary,
    adim_h: usize,
    case: TheoremCase,
) -> Prediction {
    let n = summary.n;
    let (value, formula) = match case {
        TheoremCase::BothAvoidable => (
            n * adim_h,
            format!("n*adim(H) = {n}*{adim_h}"),
        ),
        TheoremCase::AllBasesBoth => (
            n * (adim_h + 1) - summary.iota,
            format!(
                "n*(adim(H)+1) - iota(G) = {n}*{} - {}",
                adim_h + 1,
                summary.iota
            ),
        ),
        TheoremCase::AllBasesOnes => (
            n * adim_h + summary.a - summary.iota_k,
            format!(
                "n*adim(H) + a(G) - iota_K(G) = {n}*{adim_h} + {} - {}",
                summary.a, summary.iota_k
            ),
        ),
        TheoremCase::AllBasesTwos => (
            n * adim_h + summary.b - summary.iota_n,
            format!(
                "n*adim(H) + b(G) - iota_N(G) = {n}*{adim_h} + {} - {}",
                summary.b, summary.iota_n
            ),
        ),
    };
    let trace = PredictionTrace {
        n,
        adim_h,
        a: summary.a,
        b: summary.b,
        iota: summary.iota,
        iota_k: summary.iota_k,
        iota_n: summary.iota_n,
        formula,
    };
    debug_assert_eq!(trace.recompute(case), value);
    debug_assert!(value >= 1);
    Prediction { value, case, trace }
}

/// Whether the second factor is a path or a cycle.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathOrCycle {
    Path,
    Cycle,
}

/// Predicts dim(G[H]) for H a path or cycle of order m (or its complement)
/// by the residue of m mod 5, without enumerating bases:
/// r even gives n*floor((2m+2)/5) for H and its complement; m = 6 adds
/// a(G)+b(G)-iota_K(G)-iota_N(G); odd r with m != 6 adds b(G)-iota_N(G)
/// for H and a(G)-iota_K(G) for the complement. Undefined for m in {2, 3}.
pub fn predict_family_path_cycle(
    g: &Graph,
    m: usize,
    which: PathOrCycle,
    complemented: bool,
) -> Result<Prediction> {
    if m == 2 || m == 3 || m < 2 {
        return Err(Error::FamilyOrderExcluded(m));
    }
    if which == PathOrCycle::Cycle && m < 3 {
        return Err(Error::CycleTooSmall(m));
    }
    if g.order() < 2 {
        return Err(Error::ProductOrderTooSmall { side: "first" });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected {
            context: "the product theorems require a connected first factor",
        });
    }
    let summary = twins::twin_partition(g);
    let n = summary.n;
    let adim = (2 * m + 2) / 5;
    let r = m % 5;

    let (value, case, formula) = if r % 2 == 0 {
        (
            n * adim,
            TheoremCase::BothAvoidable,
            format!("n*floor((2m+2)/5) = {n}*{adim}"),
        )
    } else if m == 6 {
        (
            n * adim + summary.a + summary.b - summary.iota_k - summary.iota_n,
            TheoremCase::AllBasesBoth,
            format!(
                "n*floor((2m+2)/5) + a+b-iota_K-iota_N = {n}*{adim} + {}+{}-{}-{}",
                summary.a, summary.b, summary.iota_k, summary.iota_n
            ),
        )
    } else if !complemented {
        (
            n * adim + summary.b - summary.iota_n,
            TheoremCase::AllBasesTwos,
            format!(
                "n*floor((2m+2)/5) + b - iota_N = {n}*{adim} + {} - {}",
                summary.b, summary.iota_n
            ),
        )
    } else {
        (
            n * adim + summary.a - summary.iota_k,
            TheoremCase::AllBasesOnes,
            format!(
                "n*floor((2m+2)/5) + a - iota_K = {n}*{adim} + {} - {}",
                summary.a, summary.iota_k
            ),
        )
    };
    // For m = 6 the case applies to both H and its complement; the residue
    // formulas already account for complementation, so iota terms match the
    // AllBasesBoth identity a+b-iota_K-iota_N = n - iota only through the
    // twin counts of G.
    let trace = PredictionTrace {
        n,
        adim_h: adim,
        a: summary.a,
        b: summary.b,
        iota: summary.iota,
        iota_k: summary.iota_k,
        iota_n: summary.iota_n,
        formula,
    };
    Ok(Prediction { value, case, trace })
}

/// Builds the product, brute-forces its metric dimension when it fits the
/// budget, and compares against the first-principles prediction and (when
/// both factors are named families) the closed-form tables.
pub fn verify(
    g: &Graph,
    h: &Graph,
    names: (&str, &str),
    families: Option<(&FamilyDescriptor, &FamilyDescriptor)>,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let prediction = predict_dim_lex(g, h)?;
    let closed_form = families
        .and_then(|(fg, fh)| tables::closed_form_dim_lex(fg, fh).ok())
        .map(|cf| cf.value);

    let product_order = g.order() * h.order();
    let brute_force = if product_order <= options.budget {
        let product = lex_product(g, h);
        Some(resolver::dimension(&product, Mode::Metric)?.0)
    } else {
        None
    };

    Ok(VerificationReport {
        g: names.0.to_string(),
        h: names.1.to_string(),
        n: g.order(),
        m: h.order(),
        case: prediction.case,
        predicted: prediction.value,
        closed_form,
        brute_force,
        agree_pred: brute_force.map(|bf| bf == prediction.value),
        agree_table: match (closed_form, brute_force) {
            (Some(cf), Some(bf)) => Some(cf == bf),
            _ => None,
        },
        millis: start.elapsed().as_millis() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::graph::Distance;

    #[test]
    fn product_of_two_edges_is_k4() {
        let k2 = generators::path(2).unwrap();
        assert_eq!(lex_product(&k2, &k2), generators::complete(4).unwrap());
    }

    #[test]
    fn product_of_edge_and_empty_pair_is_c4() {
        let g = lex_product(
            &generators::path(2).unwrap(),
            &generators::empty(2).unwrap(),
        );
        // C_4 up to the product numbering: 0-2, 0-3, 1-2, 1-3
        assert_eq!(g, generators::complete_multipartite(&[2, 2]).unwrap());
        assert!(g.vertices().all(|v| g.degree(v) == 2));
    }

    #[test]
    fn product_distance_law() {
        // d((v,u),(v',u')) = d_G(v,v') if v != v', else min(d_H(u,u'), 2)
        let g = generators::cycle(3).unwrap();
        let h = generators::path(4).unwrap();
        let product = lex_product(&g, &h);
        assert_eq!(product.order(), 12);
        let dp = product.bfs_distances();
        let dg = g.bfs_distances();
        let dh = h.bfs_distances();
        let m = h.order();
        for x in product.vertices() {
            for y in product.vertices() {
                let (vx, ux) = (x / m, x % m);
                let (vy, uy) = (y / m, y % m);
                let expect = if vx != vy {
                    match dg.get(vx, vy) {
                        Distance::Finite(d) => d,
                        Distance::Unreachable => unreachable!(),
                    }
                } else {
                    match dh.get(ux, uy) {
                        Distance::Finite(d) => d.min(2),
                        Distance::Unreachable => 2,
                    }
                };
                assert_eq!(dp.get(x, y), Distance::Finite(expect));
            }
        }
    }

    #[test]
    fn prediction_examples_from_the_case_formulas() {
        let k3 = generators::complete(3).unwrap();
        let c3 = generators::cycle(3).unwrap();
        let p = predict_dim_lex(&k3, &c3).unwrap();
        assert_eq!(p.case, TheoremCase::AllBasesOnes);
        assert_eq!(p.value, 8); // 3*2 + 3 - 1

        let p3 = generators::path(3).unwrap();
        let p = predict_dim_lex(&p3, &c3).unwrap();
        assert_eq!(p.case, TheoremCase::AllBasesOnes);
        assert_eq!(p.value, 6); // 3*2 + 0 - 0

        let p4 = generators::path(4).unwrap();
        let p5 = generators::path(5).unwrap();
        let p = predict_dim_lex(&p4, &p5).unwrap();
        assert_eq!(p.case, TheoremCase::BothAvoidable);
        assert_eq!(p.value, 8); // 4*floor(12/5)

        let k2 = generators::complete(2).unwrap();
        let p2 = generators::path(2).unwrap();
        let p = predict_dim_lex(&k2, &p2).unwrap();
        assert_eq!(p.case, TheoremCase::AllBasesOnes);
        assert_eq!(p.value, 3); // 2*1 + 2 - 1
    }

    #[test]
    fn predict_rejects_bad_inputs() {
        let k3 = generators::complete(3).unwrap();
        let e3 = generators::empty(3).unwrap();
        let k1 = generators::complete(1).unwrap();
        assert!(predict_dim_lex(&e3, &k3).is_err());
        assert!(predict_dim_lex(&k1, &k3).is_err());
        assert!(predict_dim_lex(&k3, &k1).is_err());
    }

    #[test]
    fn family_formula_examples() {
        let p3 = generators::path(3).unwrap();
        let p = predict_family_path_cycle(&p3, 7, PathOrCycle::Path, false).unwrap();
        assert_eq!(p.value, 10); // 3*3 + 2 - 1

        let p = predict_family_path_cycle(&p3, 7, PathOrCycle::Path, true).unwrap();
        assert_eq!(p.value, 9); // 3*3 + 0 - 0

        let k2 = generators::complete(2).unwrap();
        let p = predict_family_path_cycle(&k2, 6, PathOrCycle::Cycle, false).unwrap();
        assert_eq!(p.value, 5); // 2*2 + 2+0-1-0
    }

    #[test]
    fn family_formula_rejects_m_2_and_3() {
        let k2 = generators::complete(2).unwrap();
        assert_eq!(
            predict_family_path_cycle(&k2, 2, PathOrCycle::Path, false),
            Err(Error::FamilyOrderExcluded(2))
        );
        assert_eq!(
            predict_family_path_cycle(&k2, 3, PathOrCycle::Cycle, false),
            Err(Error::FamilyOrderExcluded(3))
        );
    }

    /// The residue formulas must agree with the general case engine on
    /// concrete small products.
    #[test]
    fn family_formula_agrees_with_case_engine() {
        let gs = [
            generators::path(3).unwrap(),
            generators::complete(2).unwrap(),
            generators::cycle(4).unwrap(),
        ];
        for g in &gs {
            for m in 4..=9 {
                let h = generators::path(m).unwrap();
                assert_eq!(
                    predict_family_path_cycle(g, m, PathOrCycle::Path, false)
                        .unwrap()
                        .value,
                    predict_dim_lex(g, &h).unwrap().value,
                    "P_{m}"
                );
                assert_eq!(
                    predict_family_path_cycle(g, m, PathOrCycle::Path, true)
                        .unwrap()
                        .value,
                    predict_dim_lex(g, &h.complement()).unwrap().value,
                    "comp P_{m}"
                );
                let h = generators::cycle(m).unwrap();
                assert_eq!(
                    predict_family_path_cycle(g, m, PathOrCycle::Cycle, false)
                        .unwrap()
                        .value,
                    predict_dim_lex(g, &h).unwrap().value,
                    "C_{m}"
                );
                assert_eq!(
                    predict_family_path_cycle(g, m, PathOrCycle::Cycle, true)
                        .unwrap()
                        .value,
                    predict_dim_lex(g, &h.complement()).unwrap().value,
                    "comp C_{m}"
                );
            }
        }
    }

    #[test]
    fn verify_small_products_against_brute_force() {
        let opts = VerifyOptions::default();
        let k3 = generators::complete(3).unwrap();
        let c3 = generators::cycle(3).unwrap();
        let report = verify(&k3, &c3, ("K3", "C3"), None, &opts).unwrap();
        assert_eq!(report.predicted, 8);
        assert_eq!(report.brute_force, Some(8));
        assert_eq!(report.agree_pred, Some(true));

        let p2 = generators::path(2).unwrap();
        let report = verify(&p2, &p2, ("P2", "P2"), None, &opts).unwrap();
        assert_eq!(report.predicted, 3);
        assert_eq!(report.brute_force, Some(3));

        let c4 = generators::cycle(4).unwrap();
        let p5 = generators::path(5).unwrap();
        let report = verify(&c4, &p5, ("C4", "P5"), None, &opts).unwrap();
        assert_eq!(report.predicted, 8);
        assert_eq!(report.brute_force, Some(8));
        assert_eq!(report.agree_pred, Some(true));
    }

    #[test]
    fn verify_flags_over_budget_products_as_unverified() {
        let opts = VerifyOptions { budget: 10 };
        let k3 = generators::complete(3).unwrap();
        let c4 = generators::cycle(4).unwrap();
        let report = verify(&k3, &c4, ("K3", "C4"), None, &opts).unwrap();
        assert_eq!(report.brute_force, None);
        assert_eq!(report.agree_pred, None);
    }
}
