//! Prescribed stick lengths.
//!
//! For a fixed left-to-right order of all feet, the instance is realizable
//! iff a system of difference constraints `x_to − x_from ≤ bound` over the
//! foot coordinates is feasible. The sparse system built here has at most
//! `3n − 1` constraints for `n` sticks:
//!
//! * consecutive feet are at least `ε` apart;
//! * a vertical stick `a` reaches its farthest neighbor among those at least
//!   as long as `a`, and stays more than `ℓ_a` away from the nearest
//!   non-neighbor to its left that is at least as long;
//! * a horizontal stick `b` reaches its farthest neighbor among those
//!   strictly longer than `b`, and stays more than `ℓ_b` away from the
//!   nearest strictly longer non-neighbor to its right.
//!
//! Pairs not covered directly follow from these together with the order.
//! `ε` stays symbolic ([`EpsilonValue`]) until a solution is turned into
//! coordinates.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::epsilon::EpsilonValue;
use crate::geometry::verify_representation;
use crate::model::{Instance, Representation, Side, Vertex};
use crate::sweep_ab::{ground_order, GroundOrder};
use crate::{Error, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    /// Consecutive feet in the order.
    Separation,
    /// A vertical stick and a horizontal neighbor must meet.
    Edge,
    /// A vertical stick and a horizontal non-neighbor must not meet.
    NonEdge,
    /// A horizontal neighbor lies right of its vertical stick; the bound
    /// contradicts the order.
    Misplaced,
}

/// `x[to] − x[from] ≤ bound`, with variables indexed by order position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub from: usize,
    pub to: usize,
    pub bound: EpsilonValue,
    pub kind: ConstraintKind,
}

impl Constraint {
    /// Human-readable form using the instance's vertex names.
    pub fn describe(&self, sys: &ConstraintSystem, inst: &Instance) -> String {
        format!(
            "x[{}] - x[{}] <= {}",
            inst.name(sys.vars[self.to]),
            inst.name(sys.vars[self.from]),
            self.bound
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintSystem {
    /// Variable `i` is the foot of `vars[i]`, the `i`-th stick of the order.
    pub vars: Vec<Vertex>,
    pub constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemSolution {
    Feasible(Vec<EpsilonValue>),
    /// Constraints along a cycle whose bounds sum to a negative value.
    NegativeCycle(Vec<Constraint>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedOutcome {
    Realized(Representation),
    /// The constraint system of the order has this negative cycle.
    Infeasible(Vec<Constraint>),
    /// Both orders were given but no ground order realizes them; `at` is the
    /// rejecting vertical stick.
    NoGroundOrder { at: usize },
}

impl FixedOutcome {
    pub fn representation(&self) -> Option<&Representation> {
        match self {
            FixedOutcome::Realized(rep) => Some(rep),
            _ => None,
        }
    }
}

/// Position of every vertex in `order`, checking that it lists each vertex once.
pub(crate) fn positions(inst: &Instance, order: &[Vertex]) -> Result<(Vec<usize>, Vec<usize>), Error> {
    if order.len() != inst.num_vertices() {
        return Err(Error::NotATotalOrder);
    }
    let mut pos_a = vec![usize::MAX; inst.num_a()];
    let mut pos_b = vec![usize::MAX; inst.num_b()];
    for (i, v) in order.iter().enumerate() {
        let slot = match v.side {
            Side::A => pos_a.get_mut(v.index),
            Side::B => pos_b.get_mut(v.index),
        };
        match slot {
            Some(p) if *p == usize::MAX => *p = i,
            _ => return Err(Error::NotATotalOrder),
        }
    }
    Ok((pos_a, pos_b))
}

pub(crate) fn separations(n: usize) -> impl Iterator<Item = Constraint> {
    (1..n).map(|i| Constraint {
        from: i,
        to: i - 1,
        bound: EpsilonValue::epsilon(-1),
        kind: ConstraintKind::Separation,
    })
}

/// The sparse system for `order`; see the module docs.
pub fn build_system(inst: &Instance, order: &[Vertex]) -> Result<ConstraintSystem, Error> {
    let lengths = inst.lengths().ok_or(Error::MissingLengths)?;
    let (pos_a, pos_b) = positions(inst, order)?;
    let n = order.len();
    let mut constraints: Vec<Constraint> = separations(n).collect();

    for a in 0..inst.num_a() {
        let (pa, la) = (pos_a[a], lengths.a[a]);
        let nbrs = inst.nbrs_of_a(a);
        if let Some(&late) = nbrs.iter().find(|&&b| pos_b[b] > pa) {
            constraints.push(Constraint {
                from: pa,
                to: pos_b[late],
                bound: EpsilonValue::epsilon(-1),
                kind: ConstraintKind::Misplaced,
            });
        } else if let Some(far) =
            nbrs.iter().copied().filter(|&b| lengths.b[b] >= la).min_by_key(|&b| pos_b[b])
        {
            constraints.push(Constraint {
                from: pos_b[far],
                to: pa,
                bound: EpsilonValue::standard(la),
                kind: ConstraintKind::Edge,
            });
        }
        let near = (0..inst.num_b())
            .filter(|&b| pos_b[b] < pa && lengths.b[b] >= la && !inst.has_edge(a, b))
            .max_by_key(|&b| pos_b[b]);
        if let Some(b) = near {
            constraints.push(Constraint {
                from: pa,
                to: pos_b[b],
                bound: EpsilonValue::new(-la, -1),
                kind: ConstraintKind::NonEdge,
            });
        }
    }

    for b in 0..inst.num_b() {
        let (pb, lb) = (pos_b[b], lengths.b[b]);
        let far = inst
            .nbrs_of_b(b)
            .iter()
            .copied()
            .filter(|&a| pos_a[a] > pb && lengths.a[a] > lb)
            .max_by_key(|&a| pos_a[a]);
        if let Some(a) = far {
            constraints.push(Constraint {
                from: pb,
                to: pos_a[a],
                bound: EpsilonValue::standard(lb),
                kind: ConstraintKind::Edge,
            });
        }
        let near = (0..inst.num_a())
            .filter(|&a| pos_a[a] > pb && lengths.a[a] > lb && !inst.has_edge(a, b))
            .min_by_key(|&a| pos_a[a]);
        if let Some(a) = near {
            constraints.push(Constraint {
                from: pos_a[a],
                to: pb,
                bound: EpsilonValue::new(-lb, -1),
                kind: ConstraintKind::NonEdge,
            });
        }
    }

    debug_assert!(constraints.len() < 3 * n.max(1));
    Ok(ConstraintSystem { vars: order.to_vec(), constraints })
}

/// Shortest-path potentials from a virtual source joined to every variable
/// by a zero-weight arc.
///
/// Arcs are `(from, to, weight)`. Returns the potentials, which satisfy
/// `p[to] − p[from] ≤ weight` for every arc and are componentwise maximal
/// among solutions that are `≤ 0`, or the indices of the arcs on a negative
/// cycle.
pub fn shortest_paths(n: usize, arcs: &[(usize, usize, EpsilonValue)]) -> Result<Vec<EpsilonValue>, Vec<usize>> {
    let mut dist = vec![EpsilonValue::zero(); n];
    let mut pred: Vec<Option<usize>> = vec![None; n];
    let mut last_relaxed = None;
    for _ in 0..=n {
        last_relaxed = None;
        for (k, &(from, to, w)) in arcs.iter().enumerate() {
            let cand = dist[from] + w;
            if cand < dist[to] {
                dist[to] = cand;
                pred[to] = Some(k);
                last_relaxed = Some(to);
            }
        }
        if last_relaxed.is_none() {
            return Ok(dist);
        }
    }
    // A relaxation in round n + 1 means the predecessor graph has a cycle
    // reachable backwards from the relaxed vertex.
    let mut v = last_relaxed.unwrap();
    for _ in 0..n {
        v = arcs[pred[v].unwrap()].0;
    }
    let start = v;
    let mut cycle = Vec::new();
    loop {
        let k = pred[v].unwrap();
        cycle.push(k);
        v = arcs[k].0;
        if v == start {
            break;
        }
    }
    cycle.reverse();
    Err(cycle)
}

/// Bellman–Ford on the constraint graph.
pub fn solve_system(sys: &ConstraintSystem) -> SystemSolution {
    let arcs: Vec<(usize, usize, EpsilonValue)> =
        sys.constraints.iter().map(|c| (c.from, c.to, c.bound)).collect();
    match shortest_paths(sys.vars.len(), &arcs) {
        Ok(x) => SystemSolution::Feasible(x),
        Err(cycle) => SystemSolution::NegativeCycle(cycle.into_iter().map(|k| sys.constraints[k].clone()).collect()),
    }
}

/// A positive rational for `ε` under which every constraint of `sys` still
/// holds at `x`: half the smallest ratio between a standard slack and the
/// infinitesimal excess it has to absorb.
pub fn instantiation_epsilon(sys: &ConstraintSystem, x: &[EpsilonValue]) -> Rational {
    let mut eps = Rational::one();
    for c in &sys.constraints {
        let diff = x[c.to] - x[c.from];
        let slack = c.bound.standard - diff.standard;
        let excess = diff.infinitesimal - c.bound.infinitesimal;
        if slack.is_positive() && excess.is_positive() {
            eps = eps.min(slack / excess);
        }
    }
    eps / Rational::from_integer(2)
}

/// Solves the system of `order` and turns the solution into a
/// representation with the prescribed lengths, leftmost foot at 0.
pub fn solve_fixed_with_order(inst: &Instance, order: &[Vertex]) -> Result<FixedOutcome, Error> {
    let sys = build_system(inst, order)?;
    let x = match solve_system(&sys) {
        SystemSolution::Feasible(x) => x,
        SystemSolution::NegativeCycle(cycle) => return Ok(FixedOutcome::Infeasible(cycle)),
    };
    let eps = instantiation_epsilon(&sys, &x);
    let lengths = inst.lengths().ok_or(Error::MissingLengths)?;
    let mut rep = Representation::zeroed(inst.num_a(), inst.num_b());
    for (i, &v) in order.iter().enumerate() {
        rep.set(v, x[i].instantiate(eps), lengths.get(v));
    }
    if let Some(&first) = order.first() {
        let shift = -rep.foot(first);
        rep.translate(shift);
    }
    debug_assert!(verify_representation(inst, &rep).map(|r| r.is_valid()).unwrap_or(false));
    Ok(FixedOutcome::Realized(rep))
}

/// Both orders and all lengths given, no isolated sticks: the ground order
/// is forced, so a single constraint system decides the instance.
pub fn solve_stick_fix_ab(inst: &Instance) -> Result<FixedOutcome, Error> {
    if inst.lengths().is_none() {
        return Err(Error::MissingLengths);
    }
    match ground_order(inst)? {
        GroundOrder::Unique(order) => solve_fixed_with_order(inst, &order),
        GroundOrder::Infeasible { at } => Ok(FixedOutcome::NoGroundOrder { at }),
    }
}

/// Sum of a cycle's bounds; negative for certificates.
pub fn cycle_weight(cycle: &[Constraint]) -> EpsilonValue {
    cycle.iter().fold(EpsilonValue::zero(), |acc, c| acc + c.bound)
}
