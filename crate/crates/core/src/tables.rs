//! Family descriptors and the closed-form tables for dim(G[H]) when both
//! factors are named families.
//!
//! The table path is kept independent of the first-principles case engine
//! in `lex`, so every verified pair is a three-way cross-check: prediction
//! vs. table vs. brute force. Tables are transcribed as printed; where a
//! row admits two readings, both are carried and the verification harness
//! reports which one the brute-force oracle supports.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators;
use crate::graph::Graph;

/// A named graph family, optionally complemented. The empty graph on m
/// vertices is `Complement(Complete(m))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDescriptor {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Multipartite(Vec<usize>),
    Petersen,
    Complement(Box<FamilyDescriptor>),
}

impl FamilyDescriptor {
    /// Removes double complements.
    pub fn normalize(self) -> Self {
        match self {
            FamilyDescriptor::Complement(inner) => match inner.normalize() {
                FamilyDescriptor::Complement(x) => *x,
                other => FamilyDescriptor::Complement(Box::new(other)),
            },
            other => other,
        }
    }

    pub fn order(&self) -> usize {
        match self {
            FamilyDescriptor::Path(n)
            | FamilyDescriptor::Cycle(n)
            | FamilyDescriptor::Complete(n) => *n,
            FamilyDescriptor::Multipartite(parts) => parts.iter().sum(),
            FamilyDescriptor::Petersen => 10,
            FamilyDescriptor::Complement(inner) => inner.order(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilyDescriptor::Path(n) => generators::path(*n),
            FamilyDescriptor::Cycle(n) => generators::cycle(*n),
            FamilyDescriptor::Complete(n) => generators::complete(*n),
            FamilyDescriptor::Multipartite(parts) => generators::complete_multipartite(parts),
            FamilyDescriptor::Petersen => Ok(generators::petersen()),
            FamilyDescriptor::Complement(inner) => Ok(inner.build()?.complement()),
        }
    }
}

impl std::fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FamilyDescriptor::Path(n) => write!(f, "P{n}"),
            FamilyDescriptor::Cycle(n) => write!(f, "C{n}"),
            FamilyDescriptor::Complete(n) => write!(f, "K{n}"),
            FamilyDescriptor::Multipartite(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "K({})", inner.join(","))
            }
            FamilyDescriptor::Petersen => write!(f, "petersen"),
            FamilyDescriptor::Complement(inner) => write!(f, "comp({inner})"),
        }
    }
}

/// A table value plus the selected row, and the alternate reading when the
/// printed row is ambiguous.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedForm {
    pub value: usize,
    pub row: String,
    pub alternate: Option<AlternateReading>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlternateReading {
    pub value: usize,
    pub row: String,
}

impl ClosedForm {
    fn plain(value: usize, row: &str) -> Self {
        ClosedForm {
            value,
            row: row.to_string(),
            alternate: None,
        }
    }
}

/// The first factor of a table lookup.
enum GSide {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    /// n = total order, t = parts, j = parts of size >= 2.
    Multi { n: usize, t: usize, j: usize },
}

impl GSide {
    fn order(&self) -> usize {
        match self {
            GSide::Complete(n) | GSide::Path(n) | GSide::Cycle(n) => *n,
            GSide::Multi { n, .. } => *n,
        }
    }
}

fn g_side(desc: &FamilyDescriptor) -> Result<GSide> {
    let side = match desc {
        FamilyDescriptor::Complete(n) => GSide::Complete(*n),
        FamilyDescriptor::Path(n) => GSide::Path(*n),
        FamilyDescriptor::Cycle(n) => {
            if *n < 3 {
                return Err(Error::CycleTooSmall(*n));
            }
            GSide::Cycle(*n)
        }
        FamilyDescriptor::Multipartite(parts) => {
            if parts.is_empty() {
                return Err(Error::NoParts);
            }
            if parts.contains(&0) {
                return Err(Error::ZeroPart);
            }
            if parts.len() < 2 {
                return Err(Error::TableNotCovered(
                    "a one-part multipartite first factor is disconnected".into(),
                ));
            }
            GSide::Multi {
                n: parts.iter().sum(),
                t: parts.len(),
                j: parts.iter().filter(|&&p| p >= 2).count(),
            }
        }
        other => {
            return Err(Error::TableNotCovered(format!(
                "first factor {other} is outside the tables (K_n, P_n, C_n, multipartite)"
            )))
        }
    };
    if side.order() < 2 {
        return Err(Error::ProductOrderTooSmall { side: "first" });
    }
    Ok(side)
}

/// The second factor of a table lookup, after complement normalization.
enum HSide {
    /// A path or cycle of order m, or its complement.
    PathCycle {
        m: usize,
        is_cycle: bool,
        complemented: bool,
    },
    /// K_m or its complement (the empty graph).
    CompleteH { m: usize, complemented: bool },
    /// Complete multipartite (m total, s parts, q parts >= 2) or complement.
    MultiH {
        m: usize,
        s: usize,
        q: usize,
        complemented: bool,
    },
    PetersenH { complemented: bool },
}

fn h_side(desc: &FamilyDescriptor) -> Result<HSide> {
    let norm = desc.clone().normalize();
    let (base, complemented) = match norm {
        FamilyDescriptor::Complement(inner) => (*inner, true),
        other => (other, false),
    };
    let side = match base {
        FamilyDescriptor::Path(m) => HSide::PathCycle {
            m,
            is_cycle: false,
            complemented,
        },
        FamilyDescriptor::Cycle(m) => {
            if m < 3 {
                return Err(Error::CycleTooSmall(m));
            }
            HSide::PathCycle {
                m,
                is_cycle: true,
                complemented,
            }
        }
        FamilyDescriptor::Complete(m) => HSide::CompleteH { m, complemented },
        FamilyDescriptor::Multipartite(parts) => {
            if parts.is_empty() {
                return Err(Error::NoParts);
            }
            if parts.contains(&0) {
                return Err(Error::ZeroPart);
            }
            HSide::MultiH {
                m: parts.iter().sum(),
                s: parts.len(),
                q: parts.iter().filter(|&&p| p >= 2).count(),
                complemented,
            }
        }
        FamilyDescriptor::Petersen => HSide::PetersenH { complemented },
        FamilyDescriptor::Complement(_) => unreachable!("normalized"),
    };
    let order = match &side {
        HSide::PathCycle { m, .. } | HSide::CompleteH { m, .. } | HSide::MultiH { m, .. } => *m,
        HSide::PetersenH { .. } => 10,
    };
    if order < 2 {
        return Err(Error::ProductOrderTooSmall { side: "second" });
    }
    Ok(side)
}

#[inline]
fn fl(m: usize) -> usize {
    (2 * m + 2) / 5
}

/// Looks up dim(G[H]) in the corollary tables. Errors when the pair is not
/// covered or a side condition fails.
pub fn closed_form_dim_lex(g: &FamilyDescriptor, h: &FamilyDescriptor) -> Result<ClosedForm> {
    let g = g_side(g)?;
    match h_side(h)? {
        HSide::PathCycle {
            m,
            is_cycle,
            complemented: false,
        } => Ok(table_path_cycle(&g, m, is_cycle)),
        HSide::PathCycle {
            m,
            is_cycle,
            complemented: true,
        } => Ok(table_path_cycle_bar(&g, m, is_cycle)),
        HSide::CompleteH { m, complemented } => Ok(table_complete(&g, m, complemented)),
        HSide::MultiH {
            m,
            s,
            q,
            complemented,
        } => Ok(table_multipartite(&g, m, s, q, complemented)),
        HSide::PetersenH { complemented } => Ok(table_petersen(&g, complemented)),
    }
}

/// H in {P_m, C_m}.
fn table_path_cycle(g: &GSide, m: usize, is_cycle: bool) -> ClosedForm {
    let r = m % 5;
    let is_c3 = is_cycle && m == 3;
    // H in {P_2, P_3, P_6, C_6}
    let in_short_list = (!is_cycle && (m == 2 || m == 3)) || m == 6;
    match *g {
        GSide::Complete(n) => {
            if !is_cycle && (m == 2 || m == 3) {
                ClosedForm::plain(2 * n - 1, "K_n[H] = 2n-1 (H = P2 or P3)")
            } else if is_c3 || m == 6 {
                ClosedForm::plain(3 * n - 1, "K_n[H] = 3n-1 (H in {C3, P6, C6})")
            } else {
                ClosedForm::plain(n * fl(m), "K_n[H] = n*floor((2m+2)/5)")
            }
        }
        GSide::Path(n) => {
            if is_c3 {
                if n == 2 {
                    ClosedForm::plain(5, "P_n[H] = 5 (n = 2, H = C3)")
                } else {
                    ClosedForm::plain(2 * n, "P_n[H] = 2n (n != 2, H = C3)")
                }
            } else if n == 2 && in_short_list {
                ClosedForm::plain(n * fl(m) + 1, "P_n[H] = n*floor((2m+2)/5)+1 (n = 2)")
            } else if n == 3 && r % 2 == 1 {
                ClosedForm::plain(
                    n * fl(m) + 1,
                    "P_n[H] = n*floor((2m+2)/5)+1 (n = 3, r odd, H != C3)",
                )
            } else {
                ClosedForm::plain(n * fl(m), "P_n[H] = n*floor((2m+2)/5)")
            }
        }
        GSide::Cycle(n) => {
            if is_c3 {
                if n == 3 {
                    ClosedForm::plain(8, "C_n[H] = 8 (n = 3, H = C3)")
                } else {
                    ClosedForm::plain(2 * n, "C_n[H] = 2n (n != 3, H = C3)")
                }
            } else if n == 3 && in_short_list {
                ClosedForm::plain(n * fl(m) + 2, "C_n[H] = n*floor((2m+2)/5)+2 (n = 3)")
            } else if n == 4 && r % 2 == 1 {
                ClosedForm::plain(
                    n * fl(m) + 2,
                    "C_n[H] = n*floor((2m+2)/5)+2 (n = 4, r odd, H != C3)",
                )
            } else {
                ClosedForm::plain(n * fl(m), "C_n[H] = n*floor((2m+2)/5)")
            }
        }
        GSide::Multi { n, t, j } => {
            let in_p3p6c6 = (!is_cycle && m == 3) || m == 6;
            if !is_cycle && m == 2 && j != t {
                ClosedForm::plain(
                    n * fl(m) + t - j - 1,
                    "K_(n_i)[H] = n*floor((2m+2)/5)+t-j-1 (H = P2, j != t)",
                )
            } else if is_c3 && j != t {
                ClosedForm::plain(
                    n * (m - 1) + t - j - 1,
                    "K_(n_i)[H] = n(m-1)+t-j-1 (H = C3, j != t)",
                )
            } else if is_c3 {
                ClosedForm::plain(n * (m - 1), "K_(n_i)[H] = n(m-1) (H = C3, j = t)")
            } else if in_p3p6c6 && j != t {
                // the printed row uses n-j-1 where the parallel P2 row uses
                // t-j-1; both readings are carried for reconciliation
                ClosedForm {
                    value: n * fl(m) + n - j - 1,
                    row: "K_(n_i)[H] = n*floor((2m+2)/5)+n-j-1 (H in {P3,P6,C6}, j != t; printed reading)".into(),
                    alternate: Some(AlternateReading {
                        value: n * fl(m) + t - j - 1,
                        row: "K_(n_i)[H] = n*floor((2m+2)/5)+t-j-1 (H in {P3,P6,C6}, j != t; alternate reading)".into(),
                    }),
                }
            } else if in_p3p6c6 {
                ClosedForm::plain(
                    n * fl(m) + n - t,
                    "K_(n_i)[H] = n*floor((2m+2)/5)+n-t (H in {P3,P6,C6}, j = t)",
                )
            } else if m >= 7 && r % 2 == 1 {
                ClosedForm::plain(
                    n * fl(m) + n - t,
                    "K_(n_i)[H] = n*floor((2m+2)/5)+n-t (m >= 7, r odd)",
                )
            } else {
                ClosedForm::plain(n * fl(m), "K_(n_i)[H] = n*floor((2m+2)/5)")
            }
        }
    }
}

/// H in {complement(P_m), complement(C_m)}.
fn table_path_cycle_bar(g: &GSide, m: usize, is_cycle: bool) -> ClosedForm {
    let r = m % 5;
    let is_c3bar = is_cycle && m == 3;
    // H in {comp(P2), comp(P3), comp(P6), comp(C6)}
    let in_bar_list = (!is_cycle && (m == 2 || m == 3)) || m == 6;
    match *g {
        GSide::Complete(n) => {
            if !is_c3bar && r % 2 == 1 {
                ClosedForm::plain(
                    n * fl(m) + n - 1,
                    "K_n[comp H] = n*floor((2m+2)/5)+n-1 (H != comp C3, r odd)",
                )
            } else if is_c3bar {
                ClosedForm::plain(2 * n, "K_n[comp H] = 2n (H = comp C3)")
            } else {
                ClosedForm::plain(n * fl(m), "K_n[comp H] = n*floor((2m+2)/5)")
            }
        }
        GSide::Path(n) => {
            if n == 2 && is_c3bar {
                ClosedForm::plain(4, "P_n[comp H] = 4 (n = 2, H = comp C3)")
            } else if n == 2 && r % 2 == 1 {
                ClosedForm::plain(
                    n * fl(m) + 1,
                    "P_n[comp H] = n*floor((2m+2)/5)+1 (n = 2, r odd)",
                )
            } else if n == 3 && in_bar_list {
                ClosedForm::plain(
                    n * fl(m) + 1,
                    "P_n[comp H] = n*floor((2m+2)/5)+1 (n = 3, H in {comp P2, comp P3, comp P6, comp C6})",
                )
            } else if n == 3 && is_c3bar {
                ClosedForm::plain(7, "P_n[comp H] = 7 (n = 3, H = comp C3)")
            } else if n >= 4 && is_c3bar {
                ClosedForm::plain(n * (m - 1), "P_n[comp H] = n(m-1) (n >= 4, H = comp C3)")
            } else {
                ClosedForm::plain(n * fl(m), "P_n[comp H] = n*floor((2m+2)/5)")
            }
        }
        GSide::Cycle(n) => {
            if n == 3 && is_c3bar {
                ClosedForm::plain(6, "C_n[comp H] = 6 (n = 3, H = comp C3)")
            } else if n == 3 {
                // transcribed as printed; disagrees with the brute-force
                // oracle for even residues, which the verification harness
                // reports as a table discrepancy
                ClosedForm::plain(
                    n * fl(m) + 2,
                    "C_n[comp H] = n*floor((2m+2)/5)+2 (n = 3, H != comp C3)",
                )
            } else if n == 4 && in_bar_list {
                ClosedForm::plain(
                    n * fl(m) + 2,
                    "C_n[comp H] = n*floor((2m+2)/5)+2 (n = 4, H in {comp P2, comp P3, comp P6, comp C6})",
                )
            } else if n == 4 && is_c3bar {
                ClosedForm::plain(10, "C_n[comp H] = 10 (n = 4, H = comp C3)")
            } else if n >= 5 && is_c3bar {
                ClosedForm::plain(n * (m - 1), "C_n[comp H] = n(m-1) (n >= 5, H = comp C3)")
            } else {
                ClosedForm::plain(n * fl(m), "C_n[comp H] = n*floor((2m+2)/5)")
            }
        }
        GSide::Multi { n, t, j } => {
            let in_bar_p3p6c6 = (!is_cycle && m == 3) || m == 6;
            if !is_cycle && m == 2 {
                ClosedForm::plain(
                    n * fl(m) + n - t,
                    "K_(n_i)[comp H] = n*floor((2m+2)/5)+n-t (H = comp P2)",
                )
            } else if is_c3bar {
                ClosedForm::plain(
                    n * (m - 1) + n - t,
                    "K_(n_i)[comp H] = n(m-1)+n-t (H = comp C3)",
                )
            } else if in_bar_p3p6c6 && j != t {
                ClosedForm {
                    value: n * fl(m) + n - j - 1,
                    row: "K_(n_i)[comp H] = n*floor((2m+2)/5)+n-j-1 (H in {comp P3, comp P6, comp C6}, j != t; printed reading)".into(),
                    alternate: Some(AlternateReading {
                        value: n * fl(m) + t - j - 1,
                        row: "K_(n_i)[comp H] = n*floor((2m+2)/5)+t-j-1 (H in {comp P3, comp P6, comp C6}, j != t; alternate reading)".into(),
                    }),
                }
            } else if in_bar_p3p6c6 {
                ClosedForm::plain(
                    n * fl(m) + n - t,
                    "K_(n_i)[comp H] = n*floor((2m+2)/5)+n-t (H in {comp P3, comp P6, comp C6}, j = t)",
                )
            } else if m >= 7 && r % 2 == 1 && j != t {
                ClosedForm::plain(
                    n * fl(m) + t - j - 1,
                    "K_(n_i)[comp H] = n*floor((2m+2)/5)+t-j-1 (m >= 7, r odd, j != t)",
                )
            } else {
                ClosedForm::plain(n * fl(m), "K_(n_i)[comp H] = n*floor((2m+2)/5)")
            }
        }
    }
}

/// H = K_m or its complement.
fn table_complete(g: &GSide, m: usize, complemented: bool) -> ClosedForm {
    match (g, complemented) {
        (GSide::Complete(n), false) => ClosedForm::plain(n * m - 1, "K_n[K_m] = nm-1"),
        (GSide::Path(n), false) => {
            if *n >= 3 {
                ClosedForm::plain(n * (m - 1), "P_n[K_m] = n(m-1) (n >= 3)")
            } else {
                ClosedForm::plain(n * (m - 1) + 1, "P_n[K_m] = n(m-1)+1 (n = 2)")
            }
        }
        (GSide::Cycle(n), false) => {
            if *n >= 4 {
                ClosedForm::plain(n * (m - 1), "C_n[K_m] = n(m-1) (n >= 4)")
            } else {
                ClosedForm::plain(n * (m - 1) + 2, "C_n[K_m] = n(m-1)+2 (n = 3)")
            }
        }
        (GSide::Multi { n, t, j }, false) => {
            if j != t {
                ClosedForm::plain(
                    n * (m - 1) + t - j - 1,
                    "K_(n_i)[K_m] = n(m-1)+t-j-1 (j != t)",
                )
            } else {
                ClosedForm::plain(n * (m - 1), "K_(n_i)[K_m] = n(m-1) (j = t)")
            }
        }
        (GSide::Complete(n), true) => ClosedForm::plain(n * (m - 1), "K_n[comp K_m] = n(m-1)"),
        (GSide::Path(n), true) => {
            if *n != 3 {
                ClosedForm::plain(n * (m - 1), "P_n[comp K_m] = n(m-1) (n != 3)")
            } else {
                ClosedForm::plain(n * (m - 1) + 1, "P_n[comp K_m] = n(m-1)+1 (n = 3)")
            }
        }
        (GSide::Cycle(n), true) => {
            if *n != 4 {
                ClosedForm::plain(n * (m - 1), "C_n[comp K_m] = n(m-1) (n != 4)")
            } else {
                ClosedForm::plain(n * (m - 1) + 2, "C_n[comp K_m] = n(m-1)+2 (n = 4)")
            }
        }
        (GSide::Multi { n, t, .. }, true) => {
            ClosedForm::plain(n * (m - 1) + n - t, "K_(n_i)[comp K_m] = n(m-1)+n-t")
        }
    }
}

/// H complete multipartite (m total vertices, s parts, q parts of size
/// >= 2) or its complement.
fn table_multipartite(g: &GSide, m: usize, s: usize, q: usize, complemented: bool) -> ClosedForm {
    match (g, complemented) {
        (GSide::Complete(n), false) => {
            if q == s {
                ClosedForm::plain(n * (m - q), "K_n[K_(m_i)] = n(m-q) (q = s)")
            } else {
                ClosedForm::plain(n * (m - q) - 1, "K_n[K_(m_i)] = n(m-q)-1 (q != s)")
            }
        }
        (GSide::Path(n), false) => {
            if q == s {
                ClosedForm::plain(n * (m - q), "P_n[K_(m_i)] = n(m-q) (q = s)")
            } else if *n >= 3 {
                ClosedForm::plain(
                    n * (m - q - 1),
                    "P_n[K_(m_i)] = n(m-q-1) (q != s, n >= 3)",
                )
            } else {
                ClosedForm::plain(n * (m - q - 1) + 1, "P_n[K_(m_i)] = n(m-q-1)+1 (n = 2)")
            }
        }
        (GSide::Cycle(n), false) => {
            if q == s {
                ClosedForm::plain(n * (m - q), "C_n[K_(m_i)] = n(m-q) (q = s)")
            } else if *n >= 4 {
                ClosedForm::plain(
                    n * (m - q - 1),
                    "C_n[K_(m_i)] = n(m-q-1) (q != s, n >= 4)",
                )
            } else {
                ClosedForm::plain(n * (m - q - 1) + 2, "C_n[K_(m_i)] = n(m-q-1)+2 (n = 3)")
            }
        }
        (GSide::Multi { n, t, j }, false) => {
            if q == s {
                ClosedForm::plain(n * (m - q), "K_(n_i)[K_(m_i)] = n(m-q) (q = s)")
            } else if j == t {
                ClosedForm::plain(
                    n * (m - q - 1),
                    "K_(n_i)[K_(m_i)] = n(m-q-1) (q != s, j = t)",
                )
            } else {
                ClosedForm::plain(
                    n * (m - q - 1) + t - j - 1,
                    "K_(n_i)[K_(m_i)] = n(m-q-1)+t-j-1 (q != s, j != t)",
                )
            }
        }
        (GSide::Complete(n), true) => {
            if q == s {
                ClosedForm::plain(n * (m - q), "K_n[comp K_(m_i)] = n(m-q) (q = s)")
            } else {
                ClosedForm::plain(n * (m - q - 1), "K_n[comp K_(m_i)] = n(m-q-1) (q != s)")
            }
        }
        (GSide::Path(n), true) => {
            if q == s {
                ClosedForm::plain(n * (m - q), "P_n[comp K_(m_i)] = n(m-q) (q = s)")
            } else if *n != 3 {
                ClosedForm::plain(
                    n * (m - q - 1),
                    "P_n[comp K_(m_i)] = n(m-q-1) (q != s, n != 3)",
                )
            } else {
                ClosedForm::plain(
                    n * (m - q - 1) + 1,
                    "P_n[comp K_(m_i)] = n(m-q-1)+1 (n = 3)",
                )
            }
        }
        (GSide::Cycle(n), true) => {
            if q == s {
                ClosedForm::plain(n * (m - q), "C_n[comp K_(m_i)] = n(m-q) (q = s)")
            } else if *n != 4 {
                ClosedForm::plain(
                    n * (m - q - 1),
                    "C_n[comp K_(m_i)] = n(m-q-1) (q != s, n != 4)",
                )
            } else {
                ClosedForm::plain(
                    n * (m - q - 1) + 2,
                    "C_n[comp K_(m_i)] = n(m-q-1)+2 (n = 4)",
                )
            }
        }
        (GSide::Multi { n, t, .. }, true) => {
            if q == s {
                ClosedForm::plain(n * (m - q), "K_(n_i)[comp K_(m_i)] = n(m-q) (q = s)")
            } else {
                ClosedForm::plain(
                    n * (m - q) - t,
                    "K_(n_i)[comp K_(m_i)] = n(m-q)-t (q != s)",
                )
            }
        }
    }
}

/// H the Petersen graph or its complement.
fn table_petersen(g: &GSide, complemented: bool) -> ClosedForm {
    match (g, complemented) {
        (GSide::Complete(n), false) => ClosedForm::plain(3 * n, "K_n[P] = 3n"),
        (GSide::Path(n), false) => {
            if *n != 3 {
                ClosedForm::plain(3 * n, "P_n[P] = 3n (n != 3)")
            } else {
                ClosedForm::plain(3 * n + 1, "P_n[P] = 3n+1 (n = 3)")
            }
        }
        (GSide::Cycle(n), false) => {
            if *n != 4 {
                ClosedForm::plain(3 * n, "C_n[P] = 3n (n != 4)")
            } else {
                ClosedForm::plain(3 * n + 2, "C_n[P] = 3n+2 (n = 4)")
            }
        }
        (GSide::Multi { n, t, .. }, false) => {
            ClosedForm::plain(4 * n - t, "K_(n_i)[P] = 4n-t")
        }
        (GSide::Complete(n), true) => ClosedForm::plain(4 * n - 1, "K_n[comp P] = 4n-1"),
        (GSide::Path(n), true) => {
            if *n >= 3 {
                ClosedForm::plain(3 * n, "P_n[comp P] = 3n (n >= 3)")
            } else {
                ClosedForm::plain(7, "P_n[comp P] = 7 (n = 2)")
            }
        }
        (GSide::Cycle(n), true) => {
            if *n >= 4 {
                ClosedForm::plain(3 * n, "C_n[comp P] = 3n (n >= 4)")
            } else {
                ClosedForm::plain(11, "C_n[comp P] = 11 (n = 3)")
            }
        }
        (GSide::Multi { n, t, j }, true) => {
            if j != t {
                ClosedForm::plain(3 * n + t - j - 1, "K_(n_i)[comp P] = 3n+t-j-1 (j != t)")
            } else {
                ClosedForm::plain(3 * n, "K_(n_i)[comp P] = 3n (j = t)")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use FamilyDescriptor as F;

    fn cf(g: F, h: F) -> usize {
        closed_form_dim_lex(&g, &h).unwrap().value
    }

    #[test]
    fn complete_in_complete() {
        assert_eq!(cf(F::Complete(2), F::Complete(3)), 5); // nm-1
        assert_eq!(cf(F::Cycle(3), F::Complete(2)), 5); // n(m-1)+2
        assert_eq!(cf(F::Complete(3), F::Petersen), 9); // 3n
        assert_eq!(
            cf(F::Path(3), F::Complement(Box::new(F::Complete(4)))),
            10
        ); // n(m-1)+1
    }

    #[test]
    fn path_cycle_rows() {
        assert_eq!(cf(F::Complete(2), F::Path(2)), 3); // 2n-1
        assert_eq!(cf(F::Complete(2), F::Path(6)), 5); // 3n-1
        assert_eq!(cf(F::Complete(3), F::Cycle(3)), 8);
        assert_eq!(cf(F::Path(3), F::Cycle(3)), 6); // 2n
        assert_eq!(cf(F::Path(2), F::Cycle(3)), 5);
        assert_eq!(cf(F::Path(4), F::Path(5)), 8); // n*floor(12/5)
        assert_eq!(cf(F::Cycle(4), F::Cycle(7)), 4 * 3 + 2); // n=4, r odd
    }

    #[test]
    fn complemented_path_cycle_rows() {
        let bar = |f: F| F::Complement(Box::new(f));
        assert_eq!(cf(F::Complete(3), bar(F::Cycle(3))), 6); // 2n
        assert_eq!(cf(F::Complete(3), bar(F::Path(7))), 3 * 3 + 2); // n fl + n-1
        assert_eq!(cf(F::Path(2), bar(F::Cycle(3))), 4);
        assert_eq!(cf(F::Path(3), bar(F::Cycle(3))), 7);
        assert_eq!(cf(F::Path(5), bar(F::Cycle(3))), 10); // n(m-1)
    }

    #[test]
    fn multipartite_h_rows() {
        // K_2[K_{2,2}] with q = s: n(m-q) = 2*(4-2) = 4
        assert_eq!(cf(F::Complete(2), F::Multipartite(vec![2, 2])), 4);
        // K_2[K_{2,1}]: q != s: n(m-q)-1 = 2*(3-1)-1 = 3
        assert_eq!(cf(F::Complete(2), F::Multipartite(vec![2, 1])), 3);
    }

    #[test]
    fn ambiguous_multipartite_g_row_carries_both_readings() {
        let out =
            closed_form_dim_lex(&F::Multipartite(vec![2, 1]), &F::Path(3)).unwrap();
        // printed reading n-j-1, alternate t-j-1
        assert_eq!(out.value, 3 * 1 + 3 - 1 - 1);
        let alt = out.alternate.expect("ambiguous row has an alternate");
        assert_eq!(alt.value, 3 * 1 + 2 - 1 - 1);
    }

    #[test]
    fn uncovered_pairs_are_rejected() {
        assert!(matches!(
            closed_form_dim_lex(&F::Petersen, &F::Path(4)),
            Err(Error::TableNotCovered(_))
        ));
        assert!(matches!(
            closed_form_dim_lex(&F::Multipartite(vec![3]), &F::Path(4)),
            Err(Error::TableNotCovered(_))
        ));
    }

    #[test]
    fn descriptor_normalization_and_build() {
        let double = F::Complement(Box::new(F::Complement(Box::new(F::Path(4))))).normalize();
        assert_eq!(double, F::Path(4));
        let e3 = F::Complement(Box::new(F::Complete(3)));
        assert_eq!(e3.build().unwrap().size(), 0);
        assert_eq!(e3.order(), 3);
        assert_eq!(format!("{e3}"), "comp(K3)");
        assert_eq!(format!("{}", F::Multipartite(vec![2, 2, 1])), "K(2,2,1)");
    }
}
