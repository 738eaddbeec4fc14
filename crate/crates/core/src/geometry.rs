//! The intersection predicate and the representation verifier.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::model::{Instance, Representation, Side, Vertex};
use crate::{Error, Rational};

/// Whether the vertical stick with foot `a_foot` and the horizontal stick with
/// foot `b_foot` meet.
///
/// The horizontal stick runs along height `-b_foot` from `x = b_foot`, the
/// vertical one sits at `x = a_foot` starting at height `-a_foot`. They share a
/// point iff the vertical lies strictly right of the horizontal foot and both
/// reach the crossing `(a_foot, -b_foot)`. Endpoint contact counts.
pub fn intersects(a_foot: Rational, a_len: Rational, b_foot: Rational, b_len: Rational) -> bool {
    let gap = a_foot - b_foot;
    gap > Rational::zero() && gap <= a_len.min(b_len)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    /// An edge whose sticks do not meet.
    MissingIntersection { a: usize, b: usize },
    /// A non-edge whose sticks meet.
    SpuriousIntersection { a: usize, b: usize },
    DuplicateFoot(Vertex, Vertex),
    NonPositiveLength(Vertex),
    /// `first` precedes `second` in the prescribed order but not on the ground line.
    OrderViolation { first: Vertex, second: Vertex },
    LengthMismatch { vertex: Vertex, expected: Rational, actual: Rational },
}

/// Everything wrong with a representation; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub issues: Vec<Issue>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Checks `rep` against every pair of sticks, the prescribed orders and the
/// prescribed lengths of `inst`.
pub fn verify_representation(inst: &Instance, rep: &Representation) -> Result<VerifyReport, Error> {
    if rep.foot_a.len() < inst.num_a() || rep.len_a.len() < inst.num_a() {
        return Err(Error::MissingVertex(Vertex::a(rep.foot_a.len().min(rep.len_a.len()))));
    }
    if rep.foot_b.len() < inst.num_b() || rep.len_b.len() < inst.num_b() {
        return Err(Error::MissingVertex(Vertex::b(rep.foot_b.len().min(rep.len_b.len()))));
    }
    let mut issues = Vec::new();

    for v in inst.vertices() {
        if rep.length(v) <= Rational::zero() {
            issues.push(Issue::NonPositiveLength(v));
        }
    }

    let mut by_foot: Vec<Vertex> = inst.vertices().collect();
    by_foot.sort_by(|&u, &v| rep.foot(u).cmp(&rep.foot(v)).then(u.cmp(&v)));
    for w in by_foot.windows(2) {
        if rep.foot(w[0]) == rep.foot(w[1]) {
            issues.push(Issue::DuplicateFoot(w[0], w[1]));
        }
    }

    // Only horizontals with a foot in `[p_a - len_a, p_a)` can meet `a`.
    let mut b_by_foot: Vec<usize> = (0..inst.num_b()).collect();
    b_by_foot.sort_by_key(|&b| rep.foot_b[b]);
    let mut row = Vec::new();
    for a in 0..inst.num_a() {
        let (p, len) = (rep.foot_a[a], rep.len_a[a]);
        let lo = b_by_foot.partition_point(|&b| rep.foot_b[b] < p - len);
        let hi = b_by_foot.partition_point(|&b| rep.foot_b[b] < p);
        row.clear();
        for &b in &b_by_foot[lo..hi.max(lo)] {
            if intersects(p, len, rep.foot_b[b], rep.len_b[b]) && !inst.has_edge(a, b) {
                row.push((b, Issue::SpuriousIntersection { a, b }));
            }
        }
        for &b in inst.nbrs_of_a(a) {
            if !intersects(p, len, rep.foot_b[b], rep.len_b[b]) {
                row.push((b, Issue::MissingIntersection { a, b }));
            }
        }
        row.sort_by_key(|(b, _)| *b);
        issues.extend(row.drain(..).map(|(_, issue)| issue));
    }

    let mut check_order = |order: &[usize], side: Side| {
        let make = |i| Vertex { side, index: i };
        for w in order.windows(2) {
            let (first, second) = (make(w[0]), make(w[1]));
            if rep.foot(first) >= rep.foot(second) {
                issues.push(Issue::OrderViolation { first, second });
            }
        }
    };
    if let Some(order) = inst.sigma_a() {
        check_order(order, Side::A);
    }
    if let Some(order) = inst.sigma_b() {
        check_order(order, Side::B);
    }

    if let Some(lengths) = inst.lengths() {
        for v in inst.vertices() {
            let (expected, actual) = (lengths.get(v), rep.length(v));
            if expected != actual {
                issues.push(Issue::LengthMismatch { vertex: v, expected, actual });
            }
        }
    }

    Ok(VerifyReport { issues })
}

/// Connected components, each listed `A` before `B` by index.
///
/// Components are ordered by the earliest position of one of their vertical
/// sticks in `sigma_A` when that order is present, otherwise by their first
/// vertex in input order (`A` before `B`). Components without vertical sticks
/// come after those with one when `sigma_A` is present.
pub fn components(inst: &Instance) -> Vec<Vec<Vertex>> {
    let na = inst.num_a();
    let id = |v: Vertex| if v.is_a() { v.index } else { na + v.index };
    let mut label = vec![usize::MAX; inst.num_vertices()];
    let mut comps: Vec<Vec<Vertex>> = Vec::new();
    for start in inst.vertices() {
        if label[id(start)] != usize::MAX {
            continue;
        }
        let c = comps.len();
        let mut members = Vec::new();
        let mut queue = VecDeque::from([start]);
        label[id(start)] = c;
        while let Some(v) = queue.pop_front() {
            members.push(v);
            let next: Vec<Vertex> = match v.side {
                Side::A => inst.nbrs_of_a(v.index).iter().map(|&b| Vertex::b(b)).collect(),
                Side::B => inst.nbrs_of_b(v.index).iter().map(|&a| Vertex::a(a)).collect(),
            };
            for w in next {
                if label[id(w)] == usize::MAX {
                    label[id(w)] = c;
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    if let Some(sigma) = inst.sigma_a() {
        let mut rank = vec![0; na];
        for (r, &a) in sigma.iter().enumerate() {
            rank[a] = r;
        }
        // Members are sorted with A first, so the key is stable for B-only parts.
        comps.sort_by_key(|members| {
            members.iter().filter(|v| v.is_a()).map(|v| rank[v.index]).min().unwrap_or(usize::MAX)
        });
    }
    comps
}
