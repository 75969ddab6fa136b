//! PD-code parsing and oriented diagram construction: components, crossing
//! signs, Wirtinger arcs, linking matrix, and the per-component walk data
//! that drives the invariant engine.
//!
//! A PD code lists one `X(a,b,c,d)` tuple per crossing, the four edge labels
//! counterclockwise starting at the incoming under-strand (so the
//! under-strand runs `a → c`). The over-strand direction is not part of the
//! code; it is recovered by propagating the constraint that every edge label
//! is entered exactly once and exited exactly once.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Validated PD code: arc-label quadruples, each label appearing twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PdError {
    #[error("empty PD code")]
    Empty,
    #[error("malformed token `{0}`: expected X(a,b,c,d)")]
    BadToken(String),
    #[error("label {label} appears {count} times, expected exactly 2")]
    LabelCount { label: u32, count: usize },
    #[error("labels must be positive integers")]
    ZeroLabel,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("no consistent orientation: edge {0} would be entered twice")]
    NoOrientation(u32),
    #[error("over-strand direction at crossing {0} is forced both ways")]
    OrientationConflict(usize),
}

impl PdCode {
    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "X({},{},{},{})", x[0], x[1], x[2], x[3])?;
        }
        Ok(())
    }
}

/// Parse whitespace-separated `X(a,b,c,d)` tokens.
pub fn parse_pd(text: &str) -> Result<PdCode, PdError> {
    let mut crossings = Vec::new();
    for token in text.split_whitespace() {
        let inner = token
            .strip_prefix("X(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| PdError::BadToken(token.to_string()))?;
        let labels: Vec<u32> = inner
            .split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| PdError::BadToken(token.to_string()))?;
        if labels.len() != 4 {
            return Err(PdError::BadToken(token.to_string()));
        }
        if labels.contains(&0) {
            return Err(PdError::ZeroLabel);
        }
        crossings.push([labels[0], labels[1], labels[2], labels[3]]);
    }
    if crossings.is_empty() {
        return Err(PdError::Empty);
    }
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for x in &crossings {
        for &label in x {
            *counts.entry(label).or_default() += 1;
        }
    }
    for (label, count) in counts {
        if count != 2 {
            return Err(PdError::LabelCount { label, count });
        }
    }
    Ok(PdCode { crossings })
}

/// A crossing with its over-strand direction resolved and its sign assigned.
#[derive(Clone, Debug)]
pub struct Crossing {
    pub under_in: usize,
    pub under_out: usize,
    pub over_in: usize,
    pub over_out: usize,
    /// +1 when the under-strand passes from the right of the over-strand's
    /// orientation to its left.
    pub sign: i8,
    pub over_arc: usize,
    pub under_in_arc: usize,
    pub under_out_arc: usize,
}

/// A Wirtinger arc: a maximal run of edges glued at over-passages,
/// terminated (on both sides) by under-passages.
#[derive(Clone, Debug)]
pub struct DiagramArc {
    /// 1-based component index.
    pub component: usize,
    /// Edge indices in traversal order.
    pub edges: Vec<usize>,
}

/// One under-passage along a component's walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkStep {
    /// The arc arriving at the crossing.
    pub alpha: usize,
    /// The over-arc there.
    pub beta: usize,
    /// The crossing sign.
    pub epsilon: i8,
}

/// Built oriented diagram. Components are numbered 1.. by their smallest
/// edge label; each component's base arc (its meridian) is the arc containing
/// that smallest edge, and its walk starts there.
#[derive(Clone, Debug)]
pub struct Diagram {
    labels: Vec<u32>,
    crossings: Vec<Crossing>,
    arcs: Vec<DiagramArc>,
    /// Per component (0-based slot for component j+1): base arc and walk.
    components: Vec<ComponentData>,
}

#[derive(Clone, Debug)]
struct ComponentData {
    base_arc: usize,
    walk: Vec<WalkStep>,
}

impl Diagram {
    /// Number of link components.
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[DiagramArc] {
        &self.arcs
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// The original edge label of an edge index.
    pub fn edge_label(&self, edge: usize) -> u32 {
        self.labels[edge]
    }

    /// The meridian arc of component `j` (1-based).
    pub fn base_arc(&self, j: usize) -> usize {
        self.components[j - 1].base_arc
    }

    /// The walk of component `j` (1-based): its under-passages in traversal
    /// order starting at the base arc.
    pub fn walk(&self, j: usize) -> &[WalkStep] {
        &self.components[j - 1].walk
    }

    /// Linking matrix: half-sum of inter-component crossing signs off the
    /// diagonal, per-component writhe on the diagonal.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let q = self.num_components();
        let mut twice = vec![vec![0i64; q]; q];
        for c in &self.crossings {
            let under = self.arcs[c.under_in_arc].component - 1;
            let over = self.arcs[c.over_arc].component - 1;
            if under == over {
                twice[under][under] += 2 * c.sign as i64;
            } else {
                twice[under][over] += c.sign as i64;
                twice[over][under] += c.sign as i64;
            }
        }
        twice
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| {
                        debug_assert!(v % 2 == 0, "odd crossing sum");
                        v / 2
                    })
                    .collect()
            })
            .collect()
    }

    /// Total linking number for 2-component links.
    pub fn linking_number(&self) -> Option<i64> {
        (self.num_components() == 2).then(|| self.linking_matrix()[0][1])
    }
}

/// Slot roles while resolving orientations: `true` = the edge in this slot
/// points into the crossing.
fn slot_is_incoming(slot: usize, over_in_slot: usize) -> bool {
    match slot {
        0 => true,
        2 => false,
        s => s == over_in_slot,
    }
}

/// Build the oriented diagram from a validated PD code.
pub fn build(pd: &PdCode) -> Result<Diagram, BuildError> {
    let n = pd.len();

    // Dense edge indices in label order.
    let mut labels: Vec<u32> = pd.crossings.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    let edge_of = |label: u32| labels.binary_search(&label).expect("validated label");

    // occurrences[e] = the two (crossing, slot) positions of edge e.
    let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); labels.len()];
    for (ci, x) in pd.crossings.iter().enumerate() {
        for (slot, &label) in x.iter().enumerate() {
            occurrences[edge_of(label)].push((ci, slot));
        }
    }

    // Resolve over-strand directions: over_in[c] ∈ {1, 3} once known.
    let mut over_in: Vec<Option<usize>> = vec![None; n];
    loop {
        let mut progress = false;
        for (e, occ) in occurrences.iter().enumerate() {
            let (c1, s1) = occ[0];
            let (c2, s2) = occ[1];
            let known = |c: usize, s: usize| -> Option<bool> {
                match s {
                    0 => Some(true),
                    2 => Some(false),
                    s => over_in[c].map(|oi| s == oi),
                }
            };
            match (known(c1, s1), known(c2, s2)) {
                (Some(a), Some(b)) => {
                    if a == b {
                        return Err(BuildError::NoOrientation(labels[e]));
                    }
                }
                (Some(a), None) => {
                    // Occurrence 2 sits in an over slot; force its direction.
                    over_in[c2] = Some(if a { if s2 == 1 { 3 } else { 1 } } else { s2 });
                    progress = true;
                }
                (None, Some(b)) => {
                    over_in[c1] = Some(if b { if s1 == 1 { 3 } else { 1 } } else { s1 });
                    progress = true;
                }
                (None, None) => {}
            }
        }
        if !progress {
            // Components that never dive under leave free choices; fix the
            // first undecided crossing and keep propagating.
            match over_in.iter().position(|d| d.is_none()) {
                Some(c) => {
                    over_in[c] = Some(3);
                }
                None => break,
            }
        }
    }
    let over_in: Vec<usize> = over_in.into_iter().map(|d| d.expect("resolved")).collect();

    // Heads: for every edge, where it enters a crossing.
    let mut head: Vec<Option<(usize, usize)>> = vec![None; labels.len()];
    for (ci, x) in pd.crossings.iter().enumerate() {
        for (slot, &label) in x.iter().enumerate() {
            if slot_is_incoming(slot, over_in[ci]) {
                let e = edge_of(label);
                if head[e].replace((ci, slot)).is_some() {
                    return Err(BuildError::NoOrientation(label));
                }
            }
        }
    }
    let head: Vec<(usize, usize)> = match head.into_iter().collect::<Option<Vec<_>>>() {
        Some(h) => h,
        None => {
            // Some edge is never entered; its label is exited twice.
            let e = occurrences
                .iter()
                .position(|occ| {
                    occ.iter().all(|&(c, s)| !slot_is_incoming(s, over_in[c]))
                })
                .expect("an unentered edge exists");
            return Err(BuildError::NoOrientation(labels[e]));
        }
    };

    // Successor of an edge along its strand.
    let successor = |e: usize| -> usize {
        let (c, slot) = head[e];
        let out_slot = match slot {
            0 => 2,
            s if s == over_in[c] => 4 - s, // 1 ↔ 3
            _ => unreachable!("head slot is incoming"),
        };
        edge_of(pd.crossings[c][out_slot])
    };

    // Components: cycles of the successor map, numbered by smallest label.
    let mut component_of_edge: Vec<usize> = vec![0; labels.len()];
    let mut component_cycles: Vec<Vec<usize>> = Vec::new();
    for start in 0..labels.len() {
        if component_of_edge[start] != 0 {
            continue;
        }
        let id = component_cycles.len() + 1;
        let mut cycle = Vec::new();
        let mut e = start;
        loop {
            component_of_edge[e] = id;
            cycle.push(e);
            e = successor(e);
            if e == start {
                break;
            }
        }
        component_cycles.push(cycle);
    }

    // Arcs: cut each component's cycle after every edge that dives under.
    let ends_under = |e: usize| head[e].1 == 0;
    let mut arcs: Vec<DiagramArc> = Vec::new();
    let mut arc_of_edge: Vec<usize> = vec![usize::MAX; labels.len()];
    // Per component: its arcs in traversal order starting at the base arc.
    let mut arc_orders: Vec<Vec<usize>> = Vec::new();
    for (idx, cycle) in component_cycles.iter().enumerate() {
        let id = idx + 1;
        if !cycle.iter().any(|&e| ends_under(e)) {
            // Fully-over component: one closed arc, empty walk.
            let arc_id = arcs.len();
            for &e in cycle {
                arc_of_edge[e] = arc_id;
            }
            arcs.push(DiagramArc { component: id, edges: cycle.clone() });
            arc_orders.push(vec![arc_id]);
            continue;
        }
        // Rotate back to the arc boundary preceding the smallest edge
        // (cycle[0] is the smallest, by the trace above).
        let len = cycle.len();
        let mut start_pos = 0;
        while !ends_under(cycle[(start_pos + len - 1) % len]) {
            start_pos = (start_pos + len - 1) % len;
        }
        let mut current: Vec<usize> = Vec::new();
        let mut component_arcs: Vec<usize> = Vec::new();
        for offset in 0..len {
            let e = cycle[(start_pos + offset) % len];
            current.push(e);
            if ends_under(e) {
                let arc_id = arcs.len();
                for &edge in &current {
                    arc_of_edge[edge] = arc_id;
                }
                component_arcs.push(arc_id);
                arcs.push(DiagramArc { component: id, edges: std::mem::take(&mut current) });
            }
        }
        debug_assert!(current.is_empty());
        arc_orders.push(component_arcs);
    }

    // Crossing records with arcs attached.
    let mut crossings = Vec::with_capacity(n);
    for (ci, x) in pd.crossings.iter().enumerate() {
        let under_in = edge_of(x[0]);
        let under_out = edge_of(x[2]);
        let (oi, oo) = if over_in[ci] == 1 { (1, 3) } else { (3, 1) };
        let over_in_edge = edge_of(x[oi]);
        let over_out_edge = edge_of(x[oo]);
        crossings.push(Crossing {
            under_in,
            under_out,
            over_in: over_in_edge,
            over_out: over_out_edge,
            sign: if over_in[ci] == 3 { 1 } else { -1 },
            over_arc: arc_of_edge[over_in_edge],
            under_in_arc: arc_of_edge[under_in],
            under_out_arc: arc_of_edge[under_out],
        });
    }

    // Walks: the under-passages terminating each arc, in traversal order.
    let components = arc_orders
        .into_iter()
        .map(|order| {
            let base_arc = order[0];
            let walk = order
                .iter()
                .filter_map(|&arc| {
                    let last_edge = *arcs[arc].edges.last().expect("arcs are non-empty");
                    crossings.iter().find(|c| c.under_in == last_edge).map(|c| WalkStep {
                        alpha: arc,
                        beta: c.over_arc,
                        epsilon: c.sign,
                    })
                })
                .collect();
            ComponentData { base_arc, walk }
        })
        .collect();

    Ok(Diagram { labels, crossings, arcs, components })
}

#[cfg(test)]
mod tests {
    use super::*;

    const HOPF: &str = "X(1,3,2,4) X(3,1,4,2)";
    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

    #[test]
    fn parse_rejects_malformed_input() {
        assert_eq!(parse_pd(""), Err(PdError::Empty));
        assert!(matches!(parse_pd("X(1,2,3)"), Err(PdError::BadToken(_))));
        assert!(matches!(parse_pd("Y(1,2,3,4)"), Err(PdError::BadToken(_))));
        assert_eq!(
            parse_pd("X(1,3,2,4) X(3,1,4,5)"),
            Err(PdError::LabelCount { label: 2, count: 1 })
        );
        assert_eq!(parse_pd("X(0,1,1,0)"), Err(PdError::ZeroLabel));
    }

    #[test]
    fn parse_round_trips() {
        let pd = parse_pd(HOPF).unwrap();
        assert_eq!(pd.len(), 2);
        assert_eq!(parse_pd(&pd.to_string()).unwrap(), pd);
    }

    #[test]
    fn hopf_builds_two_components() {
        let d = build(&parse_pd(HOPF).unwrap()).unwrap();
        assert_eq!(d.num_components(), 2);
        assert_eq!(d.num_arcs(), 2);
        assert_eq!(d.walk(1).len(), 1);
        assert_eq!(d.walk(2).len(), 1);
        let signs: Vec<i8> = d.crossings().iter().map(|c| c.sign).collect();
        assert_eq!(signs[0], signs[1]);
        let lk = d.linking_matrix();
        assert_eq!(lk[0][1], lk[1][0]);
        assert_eq!(lk[0][1].abs(), 1);
        assert_eq!((lk[0][0], lk[1][1]), (0, 0));
    }

    #[test]
    fn trefoil_builds_one_component() {
        let d = build(&parse_pd(TREFOIL).unwrap()).unwrap();
        assert_eq!(d.num_components(), 1);
        assert_eq!(d.num_arcs(), 3);
        assert_eq!(d.walk(1).len(), 3);
        assert_eq!(d.linking_matrix()[0][0].abs(), 3);
    }

    #[test]
    fn walk_lengths_sum_to_crossing_count() {
        for text in [HOPF, TREFOIL] {
            let d = build(&parse_pd(text).unwrap()).unwrap();
            let total: usize = (1..=d.num_components()).map(|j| d.walk(j).len()).sum();
            assert_eq!(total, d.num_crossings());
        }
    }

    #[test]
    fn walks_start_at_base_arcs() {
        for text in [HOPF, TREFOIL] {
            let d = build(&parse_pd(text).unwrap()).unwrap();
            for j in 1..=d.num_components() {
                assert_eq!(d.walk(j)[0].alpha, d.base_arc(j));
                for step in d.walk(j) {
                    assert_eq!(d.arcs()[step.alpha].component, j);
                }
            }
        }
    }

    #[test]
    fn build_is_deterministic() {
        let a = build(&parse_pd(TREFOIL).unwrap()).unwrap();
        let b = build(&parse_pd(TREFOIL).unwrap()).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn relabeling_preserves_linking_matrix() {
        // Shift every Hopf label by 10.
        let shifted = "X(11,13,12,14) X(13,11,14,12)";
        let a = build(&parse_pd(HOPF).unwrap()).unwrap();
        let b = build(&parse_pd(shifted).unwrap()).unwrap();
        assert_eq!(a.linking_matrix(), b.linking_matrix());
    }

    #[test]
    fn kink_has_a_self_crossing() {
        // One-crossing unknot diagram: a single R1 kink.
        let d = build(&parse_pd("X(1,2,2,1)").unwrap()).unwrap();
        assert_eq!(d.num_components(), 1);
        assert_eq!(d.walk(1).len(), 1);
        assert_eq!(d.linking_matrix()[0][0].abs(), 1);
    }
}
