//! Event-sequence encoding of Rampichini diagrams: labeled link diagrams on
//! the torus whose vertical cuts spell band words of braided fiber surfaces.
//!
//! The square is swept by a vertical line moving right from the cut circle.
//! A state is the ordered list (bottom to top) of intersection points, each
//! carrying a transposition label, the letter sign `eps` used when reading a
//! band word off the cut, and the constant vertical drift `d` of its strand.
//! Monotonicity of the curves (no horizontal and no vertical tangencies)
//! makes this order data a complete combinatorial encoding: every curve
//! crosses each vertical circle the same number of times, so the sweep sees
//! only two kinds of events. `cross p over` swaps the entries at positions
//! `p, p+1` and conjugates the under label by the over label; `wrap up`
//! carries the topmost entry over the horizontal seam to the bottom (and
//! symmetrically for `wrap down`). The top/bottom label equality of the
//! torus is automatic in this encoding. Replaying the full event list must
//! reproduce the start state with every label shifted by one, which is the
//! seam condition on the left and right edges.

use crate::braid::{BandLetter, BklWord, Sign};
use crate::plumb::{Merger, PlumbError};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RampError {
    #[error("event {event}: cross position {pos} out of range 1..{max}")]
    CrossOutOfRange { event: usize, pos: usize, max: usize },
    #[error("event {event}: wrap on an empty state")]
    WrapOnEmpty { event: usize },
    #[error("event {event}: wrap direction does not match the moved strand")]
    WrapDirectionMismatch { event: usize },
    #[error("cut {cut} out of range 0..={max}")]
    CutOutOfRange { cut: usize, max: usize },
    #[error("input diagram {which} is invalid: {summary}")]
    InvalidInput { which: &'static str, summary: String },
    #[error("merger sizes ({l1},{l2}) do not match entry counts ({e1},{e2})")]
    SizeMismatch { l1: usize, l2: usize, e1: usize, e2: usize },
    #[error("plumbing needs at least 2 strands per diagram, got {0} and {1}")]
    TooFewStrands(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Plumb(#[from] PlumbError),
    #[error("label ({i},{j}) cannot be read as a band letter on {strands} strands")]
    BadLabel { i: usize, j: usize, strands: usize },
}

/// Constant vertical drift of a strand point under the rightward sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerticalDir {
    Up,
    Down,
}

impl VerticalDir {
    fn as_str(self) -> &'static str {
        match self {
            VerticalDir::Up => "up",
            VerticalDir::Down => "down",
        }
    }
}

/// Which of the two strands of a crossing runs on top.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossSide {
    Lower,
    Upper,
}

impl CrossSide {
    fn as_str(self) -> &'static str {
        match self {
            CrossSide::Lower => "lower",
            CrossSide::Upper => "upper",
        }
    }
}

/// One intersection point of the diagram with a vertical circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StrandEntry {
    /// Transposition `(i j)`, stored with `i < j`, 1-based.
    pub label: (usize, usize),
    /// Letter sign contributed when a word is read off at this point.
    pub sign: Sign,
    /// Vertical drift of the strand; wraps are validated against it.
    pub dir: VerticalDir,
}

impl StrandEntry {
    pub fn new(i: usize, j: usize, sign: Sign, dir: VerticalDir) -> Self {
        StrandEntry { label: normalize(i, j), sign, dir }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Event {
    Cross { pos: usize, over: CrossSide },
    Wrap { dir: VerticalDir },
}

/// A link diagram on the torus in the event-sequence encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RampichiniDiagram {
    pub n: usize,
    pub start: Vec<StrandEntry>,
    pub events: Vec<Event>,
}

/// A structured validation report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub violations: Vec<Violation>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn summary(&self) -> String {
        self.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A label leaves `1 <= i < j <= n`.
    LabelOutOfRange { position: usize, i: usize, j: usize },
    /// The replay itself failed (bad cross position or wrap direction).
    ReplayFailed { detail: String },
    /// Number of wrap events differs from `n - 1`.
    WrapCountMismatch { expected: usize, found: usize },
    /// The final state is not the start state with labels shifted by one.
    FinalEntryMismatch { position: usize },
    /// Replaying changed the number of entries (cannot happen structurally).
    FinalLengthMismatch { expected: usize, found: usize },
    /// Wrap-time labels fail to multiply to the forward n-cycle.
    WrapProductMismatch,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::LabelOutOfRange { position, i, j } => {
                write!(f, "entry {position}: label ({i} {j}) out of range")
            }
            Violation::ReplayFailed { detail } => write!(f, "replay failed: {detail}"),
            Violation::WrapCountMismatch { expected, found } => {
                write!(f, "wrap count {found}, expected n-1 = {expected}")
            }
            Violation::FinalEntryMismatch { position } => {
                write!(f, "final state at position {position} is not the start shifted by one")
            }
            Violation::FinalLengthMismatch { expected, found } => {
                write!(f, "final state has {found} entries, expected {expected}")
            }
            Violation::WrapProductMismatch => {
                write!(f, "wrap-time labels do not multiply to the forward n-cycle")
            }
        }
    }
}

fn normalize(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

/// Conjugates the transposition `under` by the transposition `over`.
fn conjugate(over: (usize, usize), under: (usize, usize)) -> (usize, usize) {
    let swap = |x: usize| {
        if x == over.0 {
            over.1
        } else if x == over.1 {
            over.0
        } else {
            x
        }
    };
    normalize(swap(under.0), swap(under.1))
}

fn shift_label(label: (usize, usize), n: usize) -> (usize, usize) {
    let step = |x: usize| x % n + 1;
    normalize(step(label.0), step(label.1))
}

fn apply_event(state: &mut Vec<StrandEntry>, event: &Event, event_idx: usize) -> Result<(), RampError> {
    match event {
        Event::Cross { pos, over } => {
            let p = *pos;
            if p < 1 || p >= state.len() {
                return Err(RampError::CrossOutOfRange {
                    event: event_idx,
                    pos: p,
                    max: state.len().saturating_sub(1),
                });
            }
            let (lo, hi) = (p - 1, p);
            match over {
                CrossSide::Lower => {
                    state[hi].label = conjugate(state[lo].label, state[hi].label);
                }
                CrossSide::Upper => {
                    state[lo].label = conjugate(state[hi].label, state[lo].label);
                }
            }
            state.swap(lo, hi);
        }
        Event::Wrap { dir: VerticalDir::Up } => {
            let top = state.pop().ok_or(RampError::WrapOnEmpty { event: event_idx })?;
            if top.dir != VerticalDir::Up {
                return Err(RampError::WrapDirectionMismatch { event: event_idx });
            }
            state.insert(0, top);
        }
        Event::Wrap { dir: VerticalDir::Down } => {
            if state.is_empty() {
                return Err(RampError::WrapOnEmpty { event: event_idx });
            }
            let bottom = state.remove(0);
            if bottom.dir != VerticalDir::Down {
                return Err(RampError::WrapDirectionMismatch { event: event_idx });
            }
            state.push(bottom);
        }
    }
    Ok(())
}

struct RunData {
    states: Vec<Vec<StrandEntry>>,
    wrap_labels: Vec<(usize, usize)>,
}

impl RampichiniDiagram {
    pub fn new(n: usize, start: Vec<StrandEntry>, events: Vec<Event>) -> Self {
        RampichiniDiagram { n, start, events }
    }

    fn run(&self) -> Result<RunData, RampError> {
        let mut states = Vec::with_capacity(self.events.len() + 1);
        let mut wrap_labels = Vec::new();
        let mut state = self.start.clone();
        states.push(state.clone());
        for (idx, event) in self.events.iter().enumerate() {
            if let Event::Wrap { dir } = event {
                let moved = match dir {
                    VerticalDir::Up => state.last(),
                    VerticalDir::Down => state.first(),
                };
                if let Some(entry) = moved {
                    wrap_labels.push(entry.label);
                }
            }
            apply_event(&mut state, event, idx)?;
            states.push(state.clone());
        }
        Ok(RunData { states, wrap_labels })
    }

    /// States after each event prefix; `replay()[k]` is the vertical cut
    /// after `k` events.
    pub fn replay(&self) -> Result<Vec<Vec<StrandEntry>>, RampError> {
        Ok(self.run()?.states)
    }

    /// Checks every defining condition and reports all violations.
    pub fn validate(&self) -> Validation {
        let mut violations = Vec::new();
        for (position, entry) in self.start.iter().enumerate() {
            let (i, j) = entry.label;
            if i < 1 || i >= j || j > self.n {
                violations.push(Violation::LabelOutOfRange { position: position + 1, i, j });
            }
        }
        let wrap_count = self
            .events
            .iter()
            .filter(|e| matches!(e, Event::Wrap { .. }))
            .count();
        if wrap_count + 1 != self.n {
            violations.push(Violation::WrapCountMismatch {
                expected: self.n.saturating_sub(1),
                found: wrap_count,
            });
        }
        let run = match self.run() {
            Ok(run) => run,
            Err(err) => {
                violations.push(Violation::ReplayFailed { detail: err.to_string() });
                return Validation { violations };
            }
        };
        let finish = run.states.last().expect("at least the start state");
        if finish.len() != self.start.len() {
            violations.push(Violation::FinalLengthMismatch {
                expected: self.start.len(),
                found: finish.len(),
            });
        } else {
            for (position, (start, end)) in self.start.iter().zip(finish.iter()).enumerate() {
                let expected = StrandEntry {
                    label: shift_label(start.label, self.n),
                    sign: start.sign,
                    dir: start.dir,
                };
                if *end != expected {
                    violations.push(Violation::FinalEntryMismatch { position: position + 1 });
                }
            }
        }
        // Product of the wrap-time labels, in event order with the first
        // wrap acting first, must be the forward cycle x -> x+1 (mod n).
        let mut product_ok = true;
        for x in 1..=self.n {
            let mut y = x;
            for &(i, j) in &run.wrap_labels {
                if y == i {
                    y = j;
                } else if y == j {
                    y = i;
                }
            }
            if y != x % self.n + 1 {
                product_ok = false;
                break;
            }
        }
        if !product_ok {
            violations.push(Violation::WrapProductMismatch);
        }
        Validation { violations }
    }

    /// Band word read off the vertical cut after `cut` events, bottom to top.
    pub fn extract_word(&self, cut: usize) -> Result<BklWord, RampError> {
        if cut > self.events.len() {
            return Err(RampError::CutOutOfRange { cut, max: self.events.len() });
        }
        let states = self.replay()?;
        let state = &states[cut];
        let mut letters = Vec::with_capacity(state.len());
        for entry in state {
            let (i, j) = entry.label;
            if i < 1 || i >= j || j > self.n {
                return Err(RampError::BadLabel { i, j, strands: self.n });
            }
            letters.push(BandLetter::new(i, j, entry.sign));
        }
        Ok(BklWord::new(letters, self.n).expect("labels checked above"))
    }

    /// Moves the cut circle `k` events to the right: the new start is the
    /// state after `k` events and the event list is rotated by `k`.
    pub fn translate(&self, k: usize) -> Result<RampichiniDiagram, RampError> {
        let validation = self.validate();
        if !validation.is_valid() {
            return Err(RampError::InvalidInput { which: "translate", summary: validation.summary() });
        }
        if k > self.events.len() {
            return Err(RampError::CutOutOfRange { cut: k, max: self.events.len() });
        }
        let states = self.replay()?;
        let mut events = self.events[k..].to_vec();
        events.extend_from_slice(&self.events[..k]);
        Ok(RampichiniDiagram::new(self.n, states[k].clone(), events))
    }

    /// Canonical file text. `#` lines are comments on input only.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        for entry in &self.start {
            let sign = match entry.sign {
                Sign::Positive => "+",
                Sign::Negative => "-",
            };
            let _ = writeln!(out, "entry {} {} {} {}", entry.label.0, entry.label.1, sign, entry.dir.as_str());
        }
        for event in &self.events {
            match event {
                Event::Cross { pos, over } => {
                    let _ = writeln!(out, "cross {} {}", pos, over.as_str());
                }
                Event::Wrap { dir } => {
                    let _ = writeln!(out, "wrap {}", dir.as_str());
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<RampichiniDiagram, RampError> {
        let mut n: Option<usize> = None;
        let mut start = Vec::new();
        let mut events = Vec::new();
        let mut seen_event = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| RampError::Parse { line: line_no, message: message.to_string() };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens[0] {
                "n" => {
                    if n.is_some() {
                        return Err(err("duplicate n line"));
                    }
                    if tokens.len() != 2 {
                        return Err(err("expected `n <int>`"));
                    }
                    n = Some(tokens[1].parse().map_err(|_| err("expected `n <int>`"))?);
                }
                "entry" => {
                    if n.is_none() {
                        return Err(err("entry before n line"));
                    }
                    if seen_event {
                        return Err(err("entry after first event line"));
                    }
                    if tokens.len() != 5 {
                        return Err(err("expected `entry <i> <j> <+|-> <up|down>`"));
                    }
                    let i: usize = tokens[1].parse().map_err(|_| err("bad entry index"))?;
                    let j: usize = tokens[2].parse().map_err(|_| err("bad entry index"))?;
                    let sign = match tokens[3] {
                        "+" => Sign::Positive,
                        "-" => Sign::Negative,
                        _ => return Err(err("sign must be + or -")),
                    };
                    let dir = match tokens[4] {
                        "up" => VerticalDir::Up,
                        "down" => VerticalDir::Down,
                        _ => return Err(err("direction must be up or down")),
                    };
                    start.push(StrandEntry { label: (i, j), sign, dir });
                }
                "cross" => {
                    if n.is_none() {
                        return Err(err("cross before n line"));
                    }
                    seen_event = true;
                    if tokens.len() != 3 {
                        return Err(err("expected `cross <p> <lower|upper>`"));
                    }
                    let pos: usize = tokens[1].parse().map_err(|_| err("bad cross position"))?;
                    let over = match tokens[2] {
                        "lower" => CrossSide::Lower,
                        "upper" => CrossSide::Upper,
                        _ => return Err(err("over strand must be lower or upper")),
                    };
                    events.push(Event::Cross { pos, over });
                }
                "wrap" => {
                    if n.is_none() {
                        return Err(err("wrap before n line"));
                    }
                    seen_event = true;
                    if tokens.len() != 2 {
                        return Err(err("expected `wrap <up|down>`"));
                    }
                    let dir = match tokens[1] {
                        "up" => VerticalDir::Up,
                        "down" => VerticalDir::Down,
                        _ => return Err(err("direction must be up or down")),
                    };
                    events.push(Event::Wrap { dir });
                }
                other => {
                    return Err(RampError::Parse {
                        line: line_no,
                        message: format!("unknown directive `{other}`"),
                    })
                }
            }
        }
        let n = n.ok_or(RampError::Parse { line: 0, message: "missing n line".to_string() })?;
        Ok(RampichiniDiagram::new(n, start, events))
    }
}

/// Result of gluing two diagrams: the combined diagram, cut at the gluing
/// circle, and the index of the cut that sits on the old seam between them
/// (the state after all first-phase events).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbedDiagram {
    pub diagram: RampichiniDiagram,
    pub seam_cut: usize,
}

/// Glues `r2` (labels shifted by `n1 - 1`) to `r1` along a merger and cuts
/// the result at the gluing circle, so the cut word is the plumbed band
/// word. Both inputs must be translated so that their own cut reads the
/// word being plumbed.
///
/// The sweep first replays `r1`'s events with the `r2`-origin entries held
/// at fixed levels, inserting a crossing (with the `r2` entry as the under
/// strand) whenever an `r1` strand passes one, and then does the same with
/// the roles swapped. At the end of each phase the interleaving pattern of
/// the merger is restored, which corresponds to the strands arriving at
/// their seam heights.
pub fn plumb_diagrams(
    r1: &RampichiniDiagram,
    r2: &RampichiniDiagram,
    merger: &Merger,
) -> Result<PlumbedDiagram, RampError> {
    for (which, r) in [("1", r1), ("2", r2)] {
        let validation = r.validate();
        if !validation.is_valid() {
            return Err(RampError::InvalidInput {
                which: if which == "1" { "1" } else { "2" },
                summary: validation.summary(),
            });
        }
    }
    let (l1, l2) = merger.sizes();
    if r1.start.len() != l1 || r2.start.len() != l2 {
        return Err(RampError::SizeMismatch { l1, l2, e1: r1.start.len(), e2: r2.start.len() });
    }
    let (n1, n2) = (r1.n, r2.n);
    if n1 < 2 || n2 < 2 {
        return Err(RampError::TooFewStrands(n1, n2));
    }
    let n_out = n1 + n2 - 1;
    let total = l1 + l2;
    let mut start: Vec<Option<(u8, StrandEntry)>> = vec![None; total];
    for (t, entry) in r1.start.iter().enumerate() {
        start[merger.apply(t + 1) - 1] = Some((0, *entry));
    }
    for (t, entry) in r2.start.iter().enumerate() {
        let shifted = StrandEntry {
            label: (entry.label.0 + n1 - 1, entry.label.1 + n1 - 1),
            sign: entry.sign,
            dir: entry.dir,
        };
        start[merger.apply(l1 + t + 1) - 1] = Some((1, shifted));
    }
    let merged: Vec<(u8, StrandEntry)> = start.into_iter().map(|slot| slot.expect("merger is onto")).collect();
    let pattern: Vec<u8> = merged.iter().map(|(origin, _)| *origin).collect();
    let mut origins: Vec<u8> = pattern.clone();
    let mut state: Vec<StrandEntry> = merged.iter().map(|(_, entry)| *entry).collect();
    let mut events = Vec::new();

    simulate_phase(&mut state, &mut origins, &mut events, &r1.events, 0, &pattern)?;
    let seam_cut = events.len();
    simulate_phase(&mut state, &mut origins, &mut events, &r2.events, 1, &pattern)?;

    let diagram = RampichiniDiagram::new(
        n_out,
        merged.into_iter().map(|(_, entry)| entry).collect(),
        events,
    );
    Ok(PlumbedDiagram { diagram, seam_cut })
}

fn emit(
    state: &mut Vec<StrandEntry>,
    origins: &mut Vec<u8>,
    events: &mut Vec<Event>,
    event: Event,
) -> Result<(), RampError> {
    apply_event(state, &event, events.len())?;
    match event {
        Event::Cross { pos, .. } => origins.swap(pos - 1, pos),
        Event::Wrap { dir: VerticalDir::Up } => {
            let top = origins.pop().expect("state nonempty");
            origins.insert(0, top);
        }
        Event::Wrap { dir: VerticalDir::Down } => {
            let bottom = origins.remove(0);
            origins.push(bottom);
        }
    }
    events.push(event);
    Ok(())
}

fn active_positions(origins: &[u8], active: u8) -> Vec<usize> {
    origins
        .iter()
        .enumerate()
        .filter_map(|(idx, &origin)| (origin == active).then_some(idx))
        .collect()
}

fn simulate_phase(
    state: &mut Vec<StrandEntry>,
    origins: &mut Vec<u8>,
    events: &mut Vec<Event>,
    phase_events: &[Event],
    active: u8,
    pattern: &[u8],
) -> Result<(), RampError> {
    for event in phase_events {
        let acts = active_positions(origins, active);
        match event {
            Event::Cross { pos, over } => {
                let a = acts[pos - 1];
                let b = acts[*pos];
                // Lower active strand rises over the passive entries between.
                for q in a..b - 1 {
                    emit(state, origins, events, Event::Cross { pos: q + 1, over: CrossSide::Lower })?;
                }
                emit(state, origins, events, Event::Cross { pos: b, over: *over })?;
                // The displaced strand descends back past the same entries.
                for q in ((a + 1)..=(b - 1)).rev() {
                    emit(state, origins, events, Event::Cross { pos: q, over: CrossSide::Upper })?;
                }
            }
            Event::Wrap { dir: VerticalDir::Up } => {
                let t = *acts.last().expect("wrap needs an active entry");
                for q in t..state.len() - 1 {
                    emit(state, origins, events, Event::Cross { pos: q + 1, over: CrossSide::Lower })?;
                }
                emit(state, origins, events, Event::Wrap { dir: VerticalDir::Up })?;
            }
            Event::Wrap { dir: VerticalDir::Down } => {
                let t = acts[0];
                for q in (1..=t).rev() {
                    emit(state, origins, events, Event::Cross { pos: q, over: CrossSide::Upper })?;
                }
                emit(state, origins, events, Event::Wrap { dir: VerticalDir::Down })?;
            }
        }
    }
    // Strands arrive at their seam heights: restore the merger interleaving
    // with the active entries in their current relative order.
    let slots: Vec<usize> = pattern
        .iter()
        .enumerate()
        .filter_map(|(idx, &origin)| (origin == active).then_some(idx))
        .collect();
    // Descents first (bottom-up), then ascents (top-down), so every move
    // passes passive entries only.
    for (k, &target) in slots.iter().enumerate() {
        let current = active_positions(origins, active)[k];
        if current > target {
            for q in ((target + 1)..=current).rev() {
                emit(state, origins, events, Event::Cross { pos: q, over: CrossSide::Upper })?;
            }
        }
    }
    for (k, &target) in slots.iter().enumerate().rev() {
        let current = active_positions(origins, active)[k];
        if current < target {
            for q in current..target {
                emit(state, origins, events, Event::Cross { pos: q + 1, over: CrossSide::Lower })?;
            }
        }
    }
    debug_assert_eq!(origins, pattern, "phase must restore the merger pattern");
    Ok(())
}

/// Ready-made diagrams used by the test-suite and the documentation.
pub mod samples {
    use super::*;

    fn entry(i: usize, j: usize, sign: Sign, dir: VerticalDir) -> StrandEntry {
        StrandEntry::new(i, j, sign, dir)
    }

    /// Positive Hopf band: one strand, one upward wrap; cut word `a(1,2)`.
    pub fn hopf_positive() -> RampichiniDiagram {
        RampichiniDiagram::new(
            2,
            vec![entry(1, 2, Sign::Positive, VerticalDir::Up)],
            vec![Event::Wrap { dir: VerticalDir::Up }],
        )
    }

    /// Negative Hopf band: cut word `A(1,2)`.
    pub fn hopf_negative() -> RampichiniDiagram {
        RampichiniDiagram::new(
            2,
            vec![entry(1, 2, Sign::Negative, VerticalDir::Down)],
            vec![Event::Wrap { dir: VerticalDir::Down }],
        )
    }

    /// Three-strand diagram whose cut reads `a(1,3) a(1,2) a(1,3) a(1,2)`.
    pub fn four_band_a() -> RampichiniDiagram {
        RampichiniDiagram::new(
            3,
            vec![
                entry(1, 3, Sign::Positive, VerticalDir::Up),
                entry(1, 2, Sign::Positive, VerticalDir::Up),
                entry(1, 3, Sign::Positive, VerticalDir::Up),
                entry(1, 2, Sign::Positive, VerticalDir::Up),
            ],
            vec![
                Event::Cross { pos: 3, over: CrossSide::Lower },
                Event::Wrap { dir: VerticalDir::Up },
                Event::Wrap { dir: VerticalDir::Up },
                Event::Cross { pos: 1, over: CrossSide::Lower },
                Event::Cross { pos: 3, over: CrossSide::Upper },
            ],
        )
    }

    /// Three-strand diagram whose cut reads `a(1,3) a(2,3) a(1,3) a(2,3)`.
    pub fn four_band_b() -> RampichiniDiagram {
        RampichiniDiagram::new(
            3,
            vec![
                entry(1, 3, Sign::Positive, VerticalDir::Up),
                entry(2, 3, Sign::Positive, VerticalDir::Up),
                entry(1, 3, Sign::Positive, VerticalDir::Up),
                entry(2, 3, Sign::Positive, VerticalDir::Up),
            ],
            vec![
                Event::Wrap { dir: VerticalDir::Up },
                Event::Cross { pos: 3, over: CrossSide::Upper },
                Event::Wrap { dir: VerticalDir::Up },
                Event::Cross { pos: 2, over: CrossSide::Upper },
            ],
        )
    }

    /// Three-strand diagram reading `a(1,2) a(1,3) a(1,2) a(1,3)` at its cut
    /// and `a(2,3) a(1,2) a(2,3) a(1,2)` at its final cut, so every
    /// translation keeps that marked word on some vertical line.
    pub fn four_band_c() -> RampichiniDiagram {
        RampichiniDiagram::new(
            3,
            vec![
                entry(1, 2, Sign::Positive, VerticalDir::Up),
                entry(1, 3, Sign::Positive, VerticalDir::Up),
                entry(1, 2, Sign::Positive, VerticalDir::Up),
                entry(1, 3, Sign::Positive, VerticalDir::Up),
            ],
            vec![
                Event::Wrap { dir: VerticalDir::Up },
                Event::Cross { pos: 3, over: CrossSide::Upper },
                Event::Wrap { dir: VerticalDir::Up },
                Event::Cross { pos: 2, over: CrossSide::Upper },
            ],
        )
    }

    /// Four-strand example with a negative band: its nine cuts spell eight
    /// distinct band words, the first being `a(1,2) A(3,4) a(2,3)`.
    pub fn mixed_sign_example() -> RampichiniDiagram {
        RampichiniDiagram::new(
            4,
            vec![
                entry(1, 2, Sign::Positive, VerticalDir::Up),
                entry(3, 4, Sign::Negative, VerticalDir::Down),
                entry(2, 3, Sign::Positive, VerticalDir::Up),
            ],
            vec![
                Event::Cross { pos: 1, over: CrossSide::Lower },
                Event::Wrap { dir: VerticalDir::Down },
                Event::Cross { pos: 1, over: CrossSide::Upper },
                Event::Cross { pos: 2, over: CrossSide::Lower },
                Event::Wrap { dir: VerticalDir::Up },
                Event::Cross { pos: 2, over: CrossSide::Lower },
                Event::Cross { pos: 1, over: CrossSide::Upper },
                Event::Wrap { dir: VerticalDir::Up },
            ],
        )
    }

    /// The cut indices of [`mixed_sign_example`] that spell its eight words.
    pub fn mixed_sign_cuts() -> Vec<usize> {
        vec![0, 1, 3, 4, 5, 6, 7, 8]
    }
}
