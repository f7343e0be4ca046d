//! Relative position of alternative Q-polynomial orderings.
//!
//! With `m_1 > 2`, any second Q-ordering, written in positions of a
//! reference ordering `E_0..E_d`, is one of five patterns:
//!
//! ```text
//! 1: 0, 2, 4, 6, ..., 5, 3, 1
//! 2: 0, d, 1, d-1, 2, d-2, 3, d-3, ...
//! 3: 0, d, 2, d-2, 4, d-4, ..., d-5, 5, d-3, 3, d-1, 1
//! 4: 0, d-1, 2, d-3, 4, d-5, ..., 5, d-4, 3, d-2, 1, d
//! 5: 0, 5, 3, 2, 4, 1            (d = 5 only)
//! ```

use serde::Serialize;

use super::{OrderingWitness, PolyKind};

/// Pattern `id` (1..=5) for class `d`, or `None` when the rule does not
/// produce a permutation of `0..=d` (patterns 3 and 4 need odd and even `d`
/// respectively; pattern 5 needs `d = 5`).
pub fn suzuki_pattern(d: usize, id: u8) -> Option<Vec<usize>> {
    let seq: Vec<usize> = match id {
        1 => (0..=d).step_by(2).chain((1..=d).rev().filter(|h| h % 2 == 1)).collect(),
        2 => (0..=d).map(|h| if h % 2 == 0 { h / 2 } else { d - (h - 1) / 2 }).collect(),
        3 => (0..=d).map(|h| if h % 2 == 0 { h } else { d + 1 - h }).collect(),
        4 => (0..=d).map(|h| if h % 2 == 0 { h } else { d - h }).collect(),
        5 if d == 5 => vec![0, 5, 3, 2, 4, 1],
        _ => return None,
    };
    let mut seen = vec![false; d + 1];
    for &v in &seq {
        if v > d || std::mem::replace(&mut seen[v], true) {
            return None;
        }
    }
    Some(seq)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SuzukiStatus {
    NoWitness,
    UniqueOrdering,
    /// `m_1 <= 2`: the n-gons, where the classification does not apply.
    Excluded,
    Checked,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuzukiComparison {
    pub order: Vec<usize>,
    /// The alternative ordering in positions of the reference one.
    pub relative: Vec<usize>,
    /// Matching pattern id, `None` for a violation.
    pub pattern: Option<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuzukiReport {
    pub status: SuzukiStatus,
    pub reference: Option<Vec<usize>>,
    pub comparisons: Vec<SuzukiComparison>,
    pub note: Option<String>,
}

impl SuzukiReport {
    pub fn violations(&self) -> usize {
        self.comparisons.iter().filter(|c| c.pattern.is_none()).count()
    }
}

/// Compares every Q-witness against the first one. `m1` is the rank of the
/// reference witness's `E_e`.
pub fn suzuki_consistency(witnesses: &[OrderingWitness], d: usize, m1: usize) -> SuzukiReport {
    let mut distinct: Vec<&OrderingWitness> = Vec::new();
    for w in witnesses.iter().filter(|w| w.kind == PolyKind::Q) {
        if !distinct.iter().any(|o| o.order == w.order) {
            distinct.push(w);
        }
    }
    let report = |status, reference: Option<&OrderingWitness>, note: Option<&str>| SuzukiReport {
        status,
        reference: reference.map(|w| w.order.clone()),
        comparisons: Vec::new(),
        note: note.map(String::from),
    };
    let Some((reference, others)) = distinct.split_first() else {
        return report(SuzukiStatus::NoWitness, None, None);
    };
    if others.is_empty() {
        return report(SuzukiStatus::UniqueOrdering, Some(reference), Some("unique ordering"));
    }
    if m1 <= 2 {
        return report(SuzukiStatus::Excluded, Some(reference), Some("m_1 = 2 excluded"));
    }

    let mut position = vec![0; d + 1];
    for (pos, &idx) in reference.order.iter().enumerate() {
        position[idx] = pos;
    }
    let patterns: Vec<(u8, Vec<usize>)> =
        (1..=5).filter_map(|id| suzuki_pattern(d, id).map(|p| (id, p))).collect();
    let comparisons = others
        .iter()
        .map(|w| {
            let relative: Vec<usize> = w.order.iter().map(|&i| position[i]).collect();
            let pattern = patterns.iter().find(|(_, p)| *p == relative).map(|(id, _)| *id);
            SuzukiComparison { order: w.order.clone(), relative, pattern }
        })
        .collect();
    SuzukiReport {
        status: SuzukiStatus::Checked,
        reference: Some(reference.order.clone()),
        comparisons,
        note: None,
    }
}
