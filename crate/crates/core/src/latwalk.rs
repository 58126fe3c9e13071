//! The two reduction procedures on integer tuples and walks between them.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// One row of a shift vector.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LatticeState(pub Vec<i64>);

impl LatticeState {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticeState(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Positions grouped by equal coordinate, each group sorted, groups
    /// ordered by their first position.
    pub fn stabilizer_pattern(&self) -> Vec<Vec<usize>> {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (p, v) in self.0.iter().enumerate() {
            match groups.iter_mut().find(|g| self.0[g[0]] == *v) {
                Some(g) => g.push(p),
                None => groups.push(vec![p]),
            }
        }
        groups
    }

    fn others_at(&self, skip: usize, value: i64) -> bool {
        self.0.iter().enumerate().any(|(p, &v)| p != skip && v == value)
    }

    fn moved(&self, pos: usize, delta: i64) -> LatticeState {
        let mut c = self.0.clone();
        c[pos] += delta;
        LatticeState(c)
    }

    /// Parses `(a,b,c)`.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Validation(format!("expected a tuple, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(LatticeState(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Validation(format!("bad coordinate {t:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(LatticeState)
    }
}

impl fmt::Display for LatticeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", c.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    /// The stabilizer shrinks or stays the same.
    Reduction1,
    /// The stabilizer strictly grows.
    Reduction2,
    /// The stabilizers are incomparable.
    Invalid,
}

impl MoveKind {
    pub fn label(self) -> Option<u8> {
        match self {
            MoveKind::Reduction1 => Some(1),
            MoveKind::Reduction2 => Some(2),
            MoveKind::Invalid => None,
        }
    }
}

/// Classifies a single `±1` step.
pub fn classify_move(from: &LatticeState, to: &LatticeState) -> Result<MoveKind> {
    if from.0.len() != to.0.len() {
        return Err(Error::InvalidMove(format!("{from} and {to} have different lengths")));
    }
    let diffs: Vec<usize> = (0..from.0.len()).filter(|&p| from.0[p] != to.0[p]).collect();
    if diffs.len() != 1 || (from.0[diffs[0]] - to.0[diffs[0]]).abs() != 1 {
        return Err(Error::InvalidMove(format!("{from} -> {to} is not a unit step")));
    }
    let p = diffs[0];
    let leaves = from.others_at(p, from.0[p]);
    let joins = to.others_at(p, to.0[p]);
    Ok(match (leaves, joins) {
        (true, true) => MoveKind::Invalid,
        (false, true) => MoveKind::Reduction2,
        _ => MoveKind::Reduction1,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Move {
    pub from: LatticeState,
    pub to: LatticeState,
    pub kind: MoveKind,
}

/// A sequence of valid moves from `start` to `target`; empty when equal.
pub fn find_path(start: &LatticeState, target: &LatticeState) -> Result<Vec<Move>> {
    let n = start.0.len();
    if target.0.len() != n {
        return Err(Error::InvalidMove("tuples of different lengths".into()));
    }
    if start == target {
        return Ok(Vec::new());
    }
    if let Ok(kind) = classify_move(start, target) {
        if kind != MoveKind::Invalid {
            return Ok(vec![Move { from: start.clone(), to: target.clone(), kind }]);
        }
    }
    let top = start.0.iter().chain(&target.0).copied().max().unwrap_or(0);
    let low_band = top + 1;
    let high_band = low_band + 2 * n as i64 + 1;
    let mut walk = Walker { cur: start.clone(), moves: Vec::new() };

    // spread to distinct values, two apart, largest current coordinate highest
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(start.0[p]), p));
    for (rank, &p) in order.iter().enumerate() {
        walk.climb(p, low_band + 2 * (n - 1 - rank) as i64);
    }

    // reorder by target: the coordinate to be placed first sits lowest
    let mut by_target: Vec<usize> = (0..n).collect();
    by_target.sort_by_key(|&p| (target.0[p], p));
    for (rank, &p) in by_target.iter().enumerate().rev() {
        walk.climb(p, high_band + 2 * rank as i64);
    }

    for &p in &by_target {
        walk.descend(p, target.0[p]);
    }
    debug_assert_eq!(&walk.cur, target);
    Ok(walk.moves)
}

struct Walker {
    cur: LatticeState,
    moves: Vec<Move>,
}

impl Walker {
    fn step(&mut self, p: usize, delta: i64) {
        let next = self.cur.moved(p, delta);
        let kind = classify_move(&self.cur, &next).expect("unit step");
        debug_assert_ne!(kind, MoveKind::Invalid);
        self.moves.push(Move { from: std::mem::replace(&mut self.cur, next.clone()), to: next, kind });
    }

    fn climb(&mut self, p: usize, height: i64) {
        while self.cur.0[p] < height {
            self.step(p, 1);
        }
    }

    fn descend(&mut self, p: usize, height: i64) {
        while self.cur.0[p] > height {
            self.step(p, -1);
        }
    }
}

/// An arrow `from -label-> to` as written in a walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledStep {
    pub from: LatticeState,
    pub label: u8,
    pub to: LatticeState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepStatus {
    Valid,
    /// The two states coincide: not a move at all.
    RepeatedState,
    NotUnitStep,
    Mislabeled,
    Invalid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub from: LatticeState,
    pub to: LatticeState,
    pub claimed: u8,
    pub actual: Option<u8>,
    pub status: StepStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkReport {
    pub steps: Vec<StepReport>,
    /// Indices of steps whose status is not `valid`.
    pub flagged: Vec<usize>,
    /// True iff each step starts where the previous one ended.
    pub chained: bool,
}

impl WalkReport {
    pub fn is_valid(&self) -> bool {
        self.flagged.is_empty() && self.chained
    }
}

pub fn validate_walk(steps: &[LabeledStep]) -> WalkReport {
    let mut reports = Vec::new();
    let mut flagged = Vec::new();
    for (index, s) in steps.iter().enumerate() {
        let (actual, status) = if s.from == s.to {
            (None, StepStatus::RepeatedState)
        } else {
            match classify_move(&s.from, &s.to) {
                Err(_) => (None, StepStatus::NotUnitStep),
                Ok(MoveKind::Invalid) => (None, StepStatus::Invalid),
                Ok(k) if k.label() == Some(s.label) => (k.label(), StepStatus::Valid),
                Ok(k) => (k.label(), StepStatus::Mislabeled),
            }
        };
        if status != StepStatus::Valid {
            flagged.push(index);
        }
        reports.push(StepReport { index, from: s.from.clone(), to: s.to.clone(), claimed: s.label, actual, status });
    }
    let chained = steps.windows(2).all(|w| w[0].to == w[1].from);
    WalkReport { steps: reports, flagged, chained }
}

pub fn moves_to_steps(moves: &[Move]) -> Vec<LabeledStep> {
    moves
        .iter()
        .map(|m| LabeledStep { from: m.from.clone(), label: m.kind.label().unwrap_or(0), to: m.to.clone() })
        .collect()
}

/// Renders as `(a,b) -1-> (c,d) -2-> …`; a lone state when there are no moves.
pub fn render_walk(start: &LatticeState, moves: &[Move]) -> String {
    let mut out = start.to_string();
    for m in moves {
        out.push_str(&format!(" -{}-> {}", m.kind.label().unwrap_or(0), m.to));
    }
    out
}

/// Parses the arrow notation produced by [`render_walk`].
pub fn parse_walk(s: &str) -> Result<Vec<LabeledStep>> {
    let mut steps = Vec::new();
    let mut rest = s.trim();
    let close = rest.find(')').ok_or_else(|| Error::Validation("missing state".into()))?;
    let mut cur = LatticeState::parse(&rest[..=close])?;
    rest = rest[close + 1..].trim_start();
    while !rest.is_empty() {
        let arrow =
            rest.strip_prefix('-').ok_or_else(|| Error::Validation(format!("expected an arrow at {rest:?}")))?;
        let (label, tail) =
            arrow.split_once("->").ok_or_else(|| Error::Validation(format!("expected an arrow at {rest:?}")))?;
        let label: u8 = label.trim().parse().map_err(|_| Error::Validation(format!("bad label {label:?}")))?;
        let tail = tail.trim_start();
        let close = tail.find(')').ok_or_else(|| Error::Validation("missing state".into()))?;
        let next = LatticeState::parse(&tail[..=close])?;
        steps.push(LabeledStep { from: cur, label, to: next.clone() });
        cur = next;
        rest = tail[close + 1..].trim_start();
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(c: &[i64]) -> LatticeState {
        LatticeState::new(c.to_vec())
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_move(&st(&[1, 0, 0, 0]), &st(&[2, 0, 0, 0])).unwrap(), MoveKind::Reduction1);
        assert_eq!(classify_move(&st(&[6, 5, 2, 1]), &st(&[6, 5, 1, 1])).unwrap(), MoveKind::Reduction2);
        assert!(matches!(classify_move(&st(&[0, 0, 0, 0]), &st(&[0, 0, 0, 2])), Err(Error::InvalidMove(_))));
        assert_eq!(classify_move(&st(&[1, 0, 0]), &st(&[1, 1, 0])).unwrap(), MoveKind::Invalid);
        assert_eq!(classify_move(&st(&[6, 5, 1, 1]), &st(&[6, 4, 1, 1])).unwrap(), MoveKind::Reduction1);
    }

    #[test]
    fn path_examples() {
        assert!(find_path(&st(&[1, 2]), &st(&[1, 2])).unwrap().is_empty());
        let p = find_path(&st(&[0, 0]), &st(&[1, 0])).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[0].kind, MoveKind::Reduction1);
        let p = find_path(&st(&[0, 0, 0, 0]), &st(&[2, 2, 1, 1])).unwrap();
        let r = validate_walk(&moves_to_steps(&p));
        assert!(r.is_valid());
        assert_eq!(p.last().unwrap().to, st(&[2, 2, 1, 1]));
    }

    #[test]
    fn walk_text_round_trip() {
        let start = st(&[0, 0]);
        let p = find_path(&start, &st(&[1, 1])).unwrap();
        let text = render_walk(&start, &p);
        assert_eq!(parse_walk(&text).unwrap(), moves_to_steps(&p));
        assert!(validate_walk(&[]).is_valid());
    }

    #[test]
    fn mislabel_is_flagged() {
        let steps = vec![LabeledStep { from: st(&[6, 5, 2, 1]), label: 1, to: st(&[6, 5, 1, 1]) }];
        let r = validate_walk(&steps);
        assert_eq!(r.flagged, vec![0]);
        assert_eq!(r.steps[0].status, StepStatus::Mislabeled);
    }

    #[test]
    fn exhaustive_small_cube() {
        let cube: Vec<LatticeState> = (0..81)
            .map(|mut k| {
                let mut c = vec![0; 4];
                for x in c.iter_mut() {
                    *x = k % 3;
                    k /= 3;
                }
                LatticeState::new(c)
            })
            .collect();
        for a in &cube {
            for b in &cube {
                let p = find_path(a, b).unwrap();
                let steps = moves_to_steps(&p);
                assert!(validate_walk(&steps).is_valid(), "{a} -> {b}");
                assert_eq!(p.last().map_or(a, |m| &m.to), b);
                if let Some(first) = p.first() {
                    assert_eq!(&first.from, a);
                }
            }
        }
    }
}
