//! Seifert's algorithm on oriented link diagrams in PD notation, and the
//! pipeline that turns a canonical Seifert surface into arc-presentation
//! data: a 4-valent guide graph around the diagram, a smoothing of it into a
//! single planar unknot, and page labels for its edges.
//!
//! A crossing `X(a,b,c,d)` lists its four edge ends counterclockwise
//! starting from the incoming under-strand; edges are numbered `1..=2c`
//! increasing cyclically along each component. No coordinate geometry is
//! kept anywhere: planarity travels as a rotation system derived from the
//! PD data.

use std::collections::{HashMap, VecDeque};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
    #[error("edge label {label} appears {count} times, expected exactly 2 (crossing {crossing})")]
    BadEdgeCount { label: usize, count: usize, crossing: usize },
    #[error("edge label {label} is out of range 1..={max} (crossing {crossing})")]
    LabelOutOfRange { label: usize, max: usize, crossing: usize },
    #[error("orientation violation: edge {edge} has inconsistent in/out ends")]
    InconsistentOrientation { edge: usize },
    #[error("orientation violation: edge numbering is not cyclic along the component of edge {edge}")]
    NumberingNotCyclic { edge: usize },
    #[error("diagram has {components} components; genus is stated for knots (first Betti number {betti})")]
    MultiComponent { components: usize, betti: i64 },
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("operation needs at least one crossing")]
    EmptyDiagram,
    #[error("smoothing search limited to {bound} vertices, graph has {vertices}")]
    SmoothingTooLarge { vertices: usize, bound: usize },
    #[error("no single-curve smoothing found")]
    NoSmoothing,
}

/// Oriented link diagram in PD notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<[usize; 4]>,
    /// Per crossing: true when the over strand runs d -> b, false for b -> d.
    over_in_is_d: Vec<bool>,
    /// Edge partition into components, each listed along the orientation.
    components: Vec<Vec<usize>>,
}

impl PlanarDiagram {
    pub fn crossings(&self) -> &[[usize; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Link components as edge lists. The empty diagram is one unknot.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        if self.crossings.is_empty() {
            1
        } else {
            self.components.len()
        }
    }

    /// Crossing sign: positive when the over strand runs d -> b.
    pub fn crossing_sign(&self, crossing: usize) -> i8 {
        if self.over_in_is_d[crossing] {
            1
        } else {
            -1
        }
    }

    pub fn to_text(&self) -> String {
        let body = self
            .crossings
            .iter()
            .map(|x| format!("X({},{},{},{})", x[0], x[1], x[2], x[3]))
            .collect::<Vec<_>>()
            .join(",");
        format!("PD[{body}]")
    }

    pub fn parse(text: &str) -> Result<Self, SeifertError> {
        let tuples = parse_pd_text(text)?;
        Self::from_crossings(tuples)
    }

    pub fn from_crossings(crossings: Vec<[usize; 4]>) -> Result<Self, SeifertError> {
        let c = crossings.len();
        let max = 2 * c;
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for (ci, x) in crossings.iter().enumerate() {
            for &label in x {
                if label < 1 || label > max {
                    return Err(SeifertError::LabelOutOfRange { label, max, crossing: ci + 1 });
                }
                *counts.entry(label).or_insert(0) += 1;
            }
        }
        for (ci, x) in crossings.iter().enumerate() {
            for &label in x {
                if counts[&label] != 2 {
                    return Err(SeifertError::BadEdgeCount {
                        label,
                        count: counts[&label],
                        crossing: ci + 1,
                    });
                }
            }
        }
        let over_in_is_d = resolve_over_directions(&crossings)?;
        let components = trace_components(&crossings, &over_in_is_d)?;
        Ok(PlanarDiagram { crossings, over_in_is_d, components })
    }
}

impl std::fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn parse_pd_text(text: &str) -> Result<Vec<[usize; 4]>, SeifertError> {
    let src = text.trim();
    let err = |at: usize, message: &str| SeifertError::Parse { at, message: message.to_string() };
    let inner = src
        .strip_prefix("PD[")
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| err(0, "expected `PD[...]`"))?;
    let mut tuples = Vec::new();
    let mut rest = inner.trim();
    let mut offset = 3usize;
    while !rest.is_empty() {
        let open = rest.strip_prefix('X').and_then(|s| s.trim_start().strip_prefix('('));
        let open = match open {
            Some(open) => open,
            None => return Err(err(offset, "expected `X(a,b,c,d)`")),
        };
        let close = open.find(')').ok_or_else(|| err(offset, "missing `)`"))?;
        let nums: Vec<&str> = open[..close].split(',').map(|s| s.trim()).collect();
        if nums.len() != 4 {
            return Err(err(offset, "crossing needs exactly 4 edge labels"));
        }
        let mut tuple = [0usize; 4];
        for (slot, tok) in nums.iter().enumerate() {
            tuple[slot] = tok
                .parse()
                .map_err(|_| err(offset, &format!("bad edge label `{tok}`")))?;
        }
        tuples.push(tuple);
        let consumed = rest.len() - open.len() + close + 1;
        offset += consumed;
        rest = open[close + 1..].trim_start();
        if let Some(tail) = rest.strip_prefix(',') {
            rest = tail.trim_start();
        } else if !rest.is_empty() {
            return Err(err(offset, "expected `,` between crossings"));
        }
    }
    Ok(tuples)
}

/// Works out which end of each over strand is incoming. Head/tail
/// constraints propagate from the under strands; wholly-over components
/// fall back to the edge-numbering rule.
fn resolve_over_directions(crossings: &[[usize; 4]]) -> Result<Vec<bool>, SeifertError> {
    let c = crossings.len();
    // status[(crossing, slot)] = true when that occurrence is an incoming end.
    let mut status: HashMap<(usize, usize), bool> = HashMap::new();
    let mut occurrences: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
    for (ci, x) in crossings.iter().enumerate() {
        for (slot, &label) in x.iter().enumerate() {
            occurrences.entry(label).or_default().push((ci, slot));
        }
        status.insert((ci, 0), true);
        status.insert((ci, 2), false);
    }
    let propagate = |status: &mut HashMap<(usize, usize), bool>| loop {
        let mut changed = false;
        for occs in occurrences.values() {
            if occs.len() == 2 {
                let (a, b) = (occs[0], occs[1]);
                match (status.get(&a).copied(), status.get(&b).copied()) {
                    (Some(v), None) => {
                        status.insert(b, !v);
                        changed = true;
                    }
                    (None, Some(v)) => {
                        status.insert(a, !v);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        for ci in 0..c {
            match (status.get(&(ci, 1)).copied(), status.get(&(ci, 3)).copied()) {
                (Some(v), None) => {
                    status.insert((ci, 3), !v);
                    changed = true;
                }
                (None, Some(v)) => {
                    status.insert((ci, 1), !v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    };
    propagate(&mut status);
    for ci in 0..c {
        if status.contains_key(&(ci, 1)) {
            continue;
        }
        // Numbering fallback: b -> d when d = b + 1, d -> b when b = d + 1,
        // otherwise the larger label wraps around to the smaller one.
        let (b, d) = (crossings[ci][1], crossings[ci][3]);
        let d_is_in = if d == b + 1 {
            false
        } else if b == d + 1 {
            true
        } else {
            b < d
        };
        status.insert((ci, 3), d_is_in);
        status.insert((ci, 1), !d_is_in);
        propagate(&mut status);
    }
    for (label, occs) in &occurrences {
        if occs.len() == 2 {
            let heads = occs.iter().filter(|o| status[o]).count();
            if heads != 1 {
                return Err(SeifertError::InconsistentOrientation { edge: *label });
            }
        }
    }
    for (ci, x) in crossings.iter().enumerate() {
        if status[&(ci, 1)] == status[&(ci, 3)] {
            return Err(SeifertError::InconsistentOrientation { edge: x[1] });
        }
    }
    Ok((0..c).map(|ci| status[&(ci, 3)]).collect())
}

fn trace_components(
    crossings: &[[usize; 4]],
    over_in_is_d: &[bool],
) -> Result<Vec<Vec<usize>>, SeifertError> {
    let edge_count = 2 * crossings.len();
    // succ[e] = edge after e along the link orientation.
    let mut succ: HashMap<usize, usize> = HashMap::new();
    for (ci, x) in crossings.iter().enumerate() {
        let pairs = if over_in_is_d[ci] {
            [(x[0], x[2]), (x[3], x[1])]
        } else {
            [(x[0], x[2]), (x[1], x[3])]
        };
        for (from, to) in pairs {
            if succ.insert(from, to).is_some() {
                return Err(SeifertError::InconsistentOrientation { edge: from });
            }
        }
    }
    let mut components = Vec::new();
    let mut seen = vec![false; edge_count + 1];
    for start in 1..=edge_count {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            cycle.push(e);
            e = *succ.get(&e).ok_or(SeifertError::InconsistentOrientation { edge: e })?;
        }
        if e != start {
            return Err(SeifertError::InconsistentOrientation { edge: start });
        }
        // Numbering must increase cyclically along the component.
        let min = *cycle.iter().min().expect("nonempty cycle");
        let max = *cycle.iter().max().expect("nonempty cycle");
        if max - min + 1 != cycle.len() {
            return Err(SeifertError::NumberingNotCyclic { edge: min });
        }
        for window in cycle.windows(2) {
            let expected = if window[0] == max { min } else { window[0] + 1 };
            if window[1] != expected {
                return Err(SeifertError::NumberingNotCyclic { edge: window[0] });
            }
        }
        components.push(cycle);
    }
    Ok(components)
}

/// Seifert circles of a diagram: every crossing is smoothed respecting
/// orientation and the resulting cycles are collected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertCircles {
    pub count: usize,
    /// Edge labels of each circle.
    pub circles: Vec<Vec<usize>>,
}

pub fn seifert_circles(diagram: &PlanarDiagram) -> SeifertCircles {
    if diagram.crossing_count() == 0 {
        return SeifertCircles { count: 1, circles: vec![Vec::new()] };
    }
    let mut succ: HashMap<usize, usize> = HashMap::new();
    for (ci, x) in diagram.crossings.iter().enumerate() {
        if diagram.over_in_is_d[ci] {
            // over d -> b: smoothed arcs a -> b and d -> c.
            succ.insert(x[0], x[1]);
            succ.insert(x[3], x[2]);
        } else {
            // over b -> d: smoothed arcs a -> d and b -> c.
            succ.insert(x[0], x[3]);
            succ.insert(x[1], x[2]);
        }
    }
    let edge_count = diagram.edge_count();
    let mut circles = Vec::new();
    let mut seen = vec![false; edge_count + 1];
    for start in 1..=edge_count {
        if seen[start] {
            continue;
        }
        let mut circle = Vec::new();
        let mut e = start;
        while !seen[e] {
            seen[e] = true;
            circle.push(e);
            e = succ[&e];
        }
        circles.push(circle);
    }
    SeifertCircles { count: circles.len(), circles }
}

/// Genus of the canonical Seifert surface of a knot diagram, from
/// `chi = s - c` with one boundary component. Multi-component diagrams are
/// rejected and report the surface's first Betti number instead.
pub fn canonical_genus(diagram: &PlanarDiagram) -> Result<i64, SeifertError> {
    let s = seifert_circles(diagram).count as i64;
    let c = diagram.crossing_count() as i64;
    let betti = 1 - s + c;
    if diagram.component_count() != 1 {
        return Err(SeifertError::MultiComponent { components: diagram.component_count(), betti });
    }
    debug_assert!(betti >= 0 && betti % 2 == 0, "knot diagram bookkeeping");
    Ok(betti / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuideEdgeKind {
    Short,
    Long,
    Parallel,
}

impl std::fmt::Display for GuideEdgeKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GuideEdgeKind::Short => f.write_str("short"),
            GuideEdgeKind::Long => f.write_str("long"),
            GuideEdgeKind::Parallel => f.write_str("parallel"),
        }
    }
}

/// Where a guide edge comes from in the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GuideEdgeTag {
    /// Side `side` of the closed loop around `crossing` (between attachment
    /// points `side` and `side + 1 mod 4`).
    Loop { crossing: usize, side: usize },
    /// One of the two parallel edges enclosing diagram edge `edge`;
    /// `left_of_orientation` tells the side.
    Parallel { edge: usize, left_of_orientation: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuideEdge {
    pub ends: (usize, usize),
    pub kind: GuideEdgeKind,
    pub tag: GuideEdgeTag,
}

/// The 4-valent planar graph drawn around the diagram: one attachment-point
/// vertex per crossing corner, a 4-edge loop per crossing and a 2-edge loop
/// per diagram edge, with the planar embedding kept as a rotation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuideGraph {
    pub vertex_count: usize,
    pub edges: Vec<GuideEdge>,
    /// Counterclockwise edge order at each vertex.
    pub rotations: Vec<[usize; 4]>,
    pub crossing_count: usize,
}

impl GuideGraph {
    /// Checks that every vertex meets one short, one long and two parallel
    /// edges.
    pub fn vertex_incidence_ok(&self) -> bool {
        for rotation in &self.rotations {
            let mut short = 0;
            let mut long = 0;
            let mut parallel = 0;
            for &e in rotation {
                match self.edges[e].kind {
                    GuideEdgeKind::Short => short += 1,
                    GuideEdgeKind::Long => long += 1,
                    GuideEdgeKind::Parallel => parallel += 1,
                }
            }
            if short != 1 || long != 1 || parallel != 2 {
                return false;
            }
        }
        true
    }

    fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return false;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &self.rotations[v] {
                let (x, y) = self.edges[e].ends;
                let other = if x == v { y } else { x };
                if !seen[other] {
                    seen[other] = true;
                    reached += 1;
                    queue.push_back(other);
                }
            }
        }
        reached == self.vertex_count
    }
}

/// Builds the guide graph of a connected diagram with at least one
/// crossing: 4c vertices and 8c edges, classified short/long/parallel.
pub fn build_guide_graph(diagram: &PlanarDiagram) -> Result<GuideGraph, SeifertError> {
    let c = diagram.crossing_count();
    if c == 0 {
        return Err(SeifertError::EmptyDiagram);
    }
    let circles = seifert_circles(diagram);
    let mut circle_of: HashMap<usize, usize> = HashMap::new();
    for (idx, circle) in circles.circles.iter().enumerate() {
        for &e in circle {
            circle_of.insert(e, idx);
        }
    }
    let vertex = |crossing: usize, slot: usize| 4 * crossing + slot;
    let mut edges: Vec<GuideEdge> = Vec::with_capacity(8 * c);
    // Crossing loops; a side is long when its two attachment points sit on
    // distinct Seifert circles.
    let mut loop_edge_ids = vec![[0usize; 4]; c];
    for (ci, x) in diagram.crossings.iter().enumerate() {
        for side in 0..4 {
            let kind = if circle_of[&x[side]] == circle_of[&x[(side + 1) % 4]] {
                GuideEdgeKind::Short
            } else {
                GuideEdgeKind::Long
            };
            loop_edge_ids[ci][side] = edges.len();
            edges.push(GuideEdge {
                ends: (vertex(ci, side), vertex(ci, (side + 1) % 4)),
                kind,
                tag: GuideEdgeTag::Loop { crossing: ci, side },
            });
        }
    }
    // Parallel loops around each diagram edge, from its outgoing end to its
    // incoming end.
    let mut tail_of: HashMap<usize, (usize, usize)> = HashMap::new();
    let mut head_of: HashMap<usize, (usize, usize)> = HashMap::new();
    for (ci, x) in diagram.crossings.iter().enumerate() {
        let (over_in, over_out) = if diagram.over_in_is_d[ci] { (3, 1) } else { (1, 3) };
        head_of.insert(x[0], (ci, 0));
        tail_of.insert(x[2], (ci, 2));
        head_of.insert(x[over_in], (ci, over_in));
        tail_of.insert(x[over_out], (ci, over_out));
    }
    let mut parallel_edge_ids: HashMap<usize, [usize; 2]> = HashMap::new();
    for e in 1..=diagram.edge_count() {
        let (tc, ts) = tail_of[&e];
        let (hc, hs) = head_of[&e];
        let left_id = edges.len();
        edges.push(GuideEdge {
            ends: (vertex(tc, ts), vertex(hc, hs)),
            kind: GuideEdgeKind::Parallel,
            tag: GuideEdgeTag::Parallel { edge: e, left_of_orientation: true },
        });
        let right_id = edges.len();
        edges.push(GuideEdge {
            ends: (vertex(tc, ts), vertex(hc, hs)),
            kind: GuideEdgeKind::Parallel,
            tag: GuideEdgeTag::Parallel { edge: e, left_of_orientation: false },
        });
        parallel_edge_ids.insert(e, [left_id, right_id]);
    }
    // Rotation at the attachment point of slot t, counterclockwise:
    // loop side (t -> t+1), loop side (t-1 -> t), then the two parallel
    // edges of the strand, right-of-outbound before left-of-outbound.
    let mut rotations = vec![[0usize; 4]; 4 * c];
    for (ci, x) in diagram.crossings.iter().enumerate() {
        for slot in 0..4 {
            let e = x[slot];
            let [left, right] = parallel_edge_ids[&e];
            let outgoing = tail_of[&e] == (ci, slot);
            // Leaving along the strand, "left of the orientation" is left of
            // outbound at the tail end and right of outbound at the head end.
            let (right_out, left_out) = if outgoing { (right, left) } else { (left, right) };
            rotations[vertex(ci, slot)] = [
                loop_edge_ids[ci][slot],
                loop_edge_ids[ci][(slot + 3) % 4],
                right_out,
                left_out,
            ];
        }
    }
    let graph = GuideGraph { vertex_count: 4 * c, edges, rotations, crossing_count: c };
    if !graph.is_connected() {
        return Err(SeifertError::Disconnected);
    }
    Ok(graph)
}

/// Per-vertex smoothing choice, named after which rotation neighbours get
/// joined: `PairWithNext` joins rotation slots (0,1) and (2,3),
/// `PairWithPrev` joins (1,2) and (3,0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothChoice {
    PairWithNext,
    PairWithPrev,
}

impl std::fmt::Display for SmoothChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SmoothChoice::PairWithNext => f.write_str("next"),
            SmoothChoice::PairWithPrev => f.write_str("prev"),
        }
    }
}

pub const DEFAULT_SMOOTHING_VERTEX_BOUND: usize = 64;

/// Finds a non-crossing smoothing of every vertex turning the graph into a
/// single closed curve. Backtracking with union-find pruning; the seed only
/// permutes the search order, every returned smoothing is valid.
pub fn smooth_to_unknot(graph: &GuideGraph) -> Result<Vec<SmoothChoice>, SeifertError> {
    smooth_to_unknot_seeded(graph, 0, DEFAULT_SMOOTHING_VERTEX_BOUND)
}

pub fn smooth_to_unknot_seeded(
    graph: &GuideGraph,
    seed: u64,
    vertex_bound: usize,
) -> Result<Vec<SmoothChoice>, SeifertError> {
    let v = graph.vertex_count;
    if v > vertex_bound {
        return Err(SeifertError::SmoothingTooLarge { vertices: v, bound: vertex_bound });
    }
    // Breadth-first vertex order from a seed-chosen root keeps the partial
    // curve connected, which is what makes the cycle pruning effective.
    let root = (seed % v as u64) as usize;
    let mut order = Vec::with_capacity(v);
    let mut seen = vec![false; v];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for &e in &graph.rotations[x] {
            let (a, b) = graph.edges[e].ends;
            let other = if a == x { b } else { a };
            if !seen[other] {
                seen[other] = true;
                queue.push_back(other);
            }
        }
    }
    if order.len() != v {
        return Err(SeifertError::Disconnected);
    }
    let first_choice = if seed & 1 == 0 { SmoothChoice::PairWithNext } else { SmoothChoice::PairWithPrev };
    let total_pairings = 2 * v;
    let mut uf = UndoUf::new(graph.edges.len());
    let mut choices: Vec<Option<SmoothChoice>> = vec![None; v];
    if search(graph, &order, 0, total_pairings, first_choice, &mut uf, &mut choices) {
        Ok(choices.into_iter().map(|c| c.expect("search fills every vertex")).collect())
    } else {
        Err(SeifertError::NoSmoothing)
    }
}

fn pairings(rotation: &[usize; 4], choice: SmoothChoice) -> [(usize, usize); 2] {
    match choice {
        SmoothChoice::PairWithNext => [(rotation[0], rotation[1]), (rotation[2], rotation[3])],
        SmoothChoice::PairWithPrev => [(rotation[1], rotation[2]), (rotation[3], rotation[0])],
    }
}

fn search(
    graph: &GuideGraph,
    order: &[usize],
    idx: usize,
    total_pairings: usize,
    first_choice: SmoothChoice,
    uf: &mut UndoUf,
    choices: &mut Vec<Option<SmoothChoice>>,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let vtx = order[idx];
    let second_choice = match first_choice {
        SmoothChoice::PairWithNext => SmoothChoice::PairWithPrev,
        SmoothChoice::PairWithPrev => SmoothChoice::PairWithNext,
    };
    'choices: for choice in [first_choice, second_choice] {
        let mark = uf.mark();
        for (k, (x, y)) in pairings(&graph.rotations[vtx], choice).into_iter().enumerate() {
            let pairing_index = 2 * idx + k;
            if !uf.union(x, y) {
                // Closing a curve is only allowed at the very last pairing,
                // where it necessarily closes the full Eulerian circuit.
                if pairing_index != total_pairings - 1 {
                    uf.rollback(mark);
                    continue 'choices;
                }
            }
        }
        choices[vtx] = Some(choice);
        if search(graph, order, idx + 1, total_pairings, first_choice, uf, choices) {
            return true;
        }
        choices[vtx] = None;
        uf.rollback(mark);
    }
    false
}

/// Union-find without path compression so unions can be rolled back.
struct UndoUf {
    parent: Vec<usize>,
    size: Vec<usize>,
    trail: Vec<usize>,
}

impl UndoUf {
    fn new(n: usize) -> Self {
        UndoUf { parent: (0..n).collect(), size: vec![1; n], trail: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        self.trail.push(ry);
        true
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let ry = self.trail.pop().expect("trail nonempty");
            let rx = self.parent[ry];
            self.parent[ry] = ry;
            self.size[rx] -= self.size[ry];
        }
    }
}

/// Certified output of the arc-presentation pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcPresentationReport {
    pub crossing_count: usize,
    pub smoothing: Vec<SmoothChoice>,
    pub unknot_edge_count: usize,
    pub link_arc_count: usize,
    /// Page label of every guide edge, a multiple of the lens parameter in
    /// `{-2,-1,0,1,2}`, in guide-edge order.
    pub page_labels: Vec<i8>,
}

impl ArcPresentationReport {
    pub fn distinct_labels(&self) -> usize {
        let mut seen = [false; 5];
        for &l in &self.page_labels {
            seen[(l + 2) as usize] = true;
        }
        seen.iter().filter(|&&b| b).count()
    }
}

/// Runs the whole pipeline: guide graph, single-curve smoothing, page
/// labels. Long edges sink into the half-twisted band of their crossing
/// (label +-2 by crossing sign); of each parallel pair the edge left of the
/// orientation stays on the surface (0) and the other is rotated below its
/// Seifert disk (-1); short edges stay on the surface (0).
pub fn arc_presentation(diagram: &PlanarDiagram) -> Result<ArcPresentationReport, SeifertError> {
    arc_presentation_seeded(diagram, 0)
}

pub fn arc_presentation_seeded(
    diagram: &PlanarDiagram,
    seed: u64,
) -> Result<ArcPresentationReport, SeifertError> {
    let graph = build_guide_graph(diagram)?;
    let smoothing = smooth_to_unknot_seeded(&graph, seed, DEFAULT_SMOOTHING_VERTEX_BOUND)?;
    let page_labels = graph
        .edges
        .iter()
        .map(|edge| match (edge.kind, edge.tag) {
            (GuideEdgeKind::Long, GuideEdgeTag::Loop { crossing, .. }) => {
                2 * diagram.crossing_sign(crossing)
            }
            (GuideEdgeKind::Short, _) => 0,
            (_, GuideEdgeTag::Parallel { left_of_orientation, .. }) => {
                if left_of_orientation {
                    0
                } else {
                    -1
                }
            }
            (kind, tag) => unreachable!("edge kind {kind:?} with tag {tag:?}"),
        })
        .collect();
    Ok(ArcPresentationReport {
        crossing_count: diagram.crossing_count(),
        smoothing,
        unknot_edge_count: graph.edges.len(),
        link_arc_count: graph.edges.len(),
        page_labels,
    })
}

/// Line-oriented text form of a report, mirroring its fields.
pub fn report_text(graph: &GuideGraph, report: &ArcPresentationReport) -> String {
    use std::fmt::Write as _;
    let mut out = String::new();
    let _ = writeln!(out, "crossings {}", report.crossing_count);
    let _ = writeln!(out, "link_arc_count {}", report.link_arc_count);
    let _ = writeln!(out, "unknot_edge_count {}", report.unknot_edge_count);
    let _ = writeln!(out, "distinct_page_labels {}", report.distinct_labels());
    for (v, choice) in report.smoothing.iter().enumerate() {
        let _ = writeln!(out, "smoothing {v} {choice}");
    }
    for (edge, label) in graph.edges.iter().zip(report.page_labels.iter()) {
        match edge.tag {
            GuideEdgeTag::Loop { crossing, side } => {
                let _ = writeln!(out, "page loop {} {} {} {}", crossing, side, edge.kind, label);
            }
            GuideEdgeTag::Parallel { edge: e, left_of_orientation } => {
                let side = if left_of_orientation { "left" } else { "right" };
                let _ = writeln!(out, "page parallel {} {} {}", e, side, label);
            }
        }
    }
    out
}

/// Number of closed curves after smoothing every vertex with the given
/// choices. Used by tests to certify single-curve smoothings.
pub fn smoothed_component_count(graph: &GuideGraph, choices: &[SmoothChoice]) -> usize {
    let mut uf = UndoUf::new(graph.edges.len());
    let mut closures = 0usize;
    for (v, &choice) in choices.iter().enumerate() {
        for (x, y) in pairings(&graph.rotations[v], choice) {
            if !uf.union(x, y) {
                closures += 1;
            }
        }
    }
    closures
}
