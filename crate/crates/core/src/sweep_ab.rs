//! Linear-time recognition when both ground orders are prescribed.
//!
//! A vertical sweep line visits the vertical sticks in `sigma_A` order. Each
//! stick `a_i` has an enter event, where the horizontal sticks up to the
//! largest-ranked neighbor seen so far receive their feet and the neighbors
//! of `a_i` must form a suffix of the still-active horizontal sticks, and an
//! exit event, where horizontal sticks whose last neighbor is `a_i` are cut
//! off half a unit past it. Feet are the integers `1..=|A|+|B|`.

use alloc::vec;
use alloc::vec::Vec;

use crate::model::{Instance, Representation, Vertex};
use crate::rational::{frac, int};
use crate::Error;

const NIL: usize = usize::MAX;

/// Result of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbOutcome {
    Realized(Representation),
    /// The neighbors of vertical stick `at` (an `A` index) were not a suffix
    /// of the active horizontal sticks at its enter event.
    Infeasible { at: usize },
}

impl AbOutcome {
    pub fn representation(&self) -> Option<&Representation> {
        match self {
            AbOutcome::Realized(rep) => Some(rep),
            AbOutcome::Infeasible { .. } => None,
        }
    }
}

/// Sweep state between events.
///
/// `active` is a linked list over `sigma_B` ranks holding the placed
/// horizontal sticks that still have a neighbor at or after the sweep line.
#[derive(Clone, Debug)]
pub struct SweepState<'a> {
    inst: &'a Instance,
    sigma_a: &'a [usize],
    sigma_b: &'a [usize],
    /// Per `A` index, neighbor ranks in `sigma_B` order.
    nbr_ranks: Vec<Vec<usize>>,
    /// Per `B` index, sweep position of the last neighbor.
    last: Vec<Option<usize>>,
    /// Number of horizontal sticks placed so far (the largest neighbor rank + 1).
    pub beta: usize,
    /// Events processed: enter of `sigma_a[i]` is step `2i`, its exit `2i+1`.
    events: usize,
    prev: Vec<usize>,
    next: Vec<usize>,
    tail: usize,
    pub partial: Representation,
    placed_a: Vec<bool>,
    placed_b: Vec<bool>,
    finished_b: Vec<bool>,
    /// Elementary steps executed, for complexity instrumentation.
    pub work: u64,
}

impl<'a> SweepState<'a> {
    /// Orders are taken as given; they must be permutations of `A` and `B`.
    pub fn new(inst: &'a Instance, sigma_a: &'a [usize], sigma_b: &'a [usize]) -> Self {
        let (na, nb) = (inst.num_a(), inst.num_b());
        let mut pos_a = vec![0; na];
        for (i, &a) in sigma_a.iter().enumerate() {
            pos_a[a] = i;
        }
        let mut nbr_ranks = vec![Vec::new(); na];
        let mut last = vec![None; nb];
        let mut work = 0u64;
        for (r, &b) in sigma_b.iter().enumerate() {
            for &a in inst.nbrs_of_b(b) {
                nbr_ranks[a].push(r);
                last[b] = last[b].max(Some(pos_a[a]));
                work += 1;
            }
        }
        // head sentinel at index nb
        let mut next = vec![NIL; nb + 1];
        let prev = vec![NIL; nb + 1];
        next[nb] = NIL;
        SweepState {
            inst,
            sigma_a,
            sigma_b,
            nbr_ranks,
            last,
            beta: 0,
            events: 0,
            prev,
            next,
            tail: nb,
            partial: Representation::zeroed(na, nb),
            placed_a: vec![false; na],
            placed_b: vec![false; nb],
            finished_b: vec![false; nb],
            work: work + (na + nb) as u64,
        }
    }

    fn head(&self) -> usize {
        self.sigma_b.len()
    }

    fn push_back(&mut self, r: usize) {
        self.prev[r] = self.tail;
        self.next[r] = NIL;
        self.next[self.tail] = r;
        self.tail = r;
    }

    fn unlink(&mut self, r: usize) {
        let (p, n) = (self.prev[r], self.next[r]);
        self.next[p] = n;
        if n == NIL {
            self.tail = p;
        } else {
            self.prev[n] = p;
        }
    }

    /// Active horizontal sticks (`B` indices) in ground order.
    pub fn active(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut r = self.next[self.head()];
        while r != NIL {
            out.push(self.sigma_b[r]);
            r = self.next[r];
        }
        out
    }

    /// Number of vertical sticks entered so far.
    pub fn entered(&self) -> usize {
        self.events.div_ceil(2)
    }

    pub fn is_done(&self) -> bool {
        self.events == 2 * self.sigma_a.len()
    }

    /// Processes the next enter or exit event.
    pub fn step(&mut self) -> Result<(), usize> {
        let i = self.events / 2;
        let a = self.sigma_a[i];
        if self.events.is_multiple_of(2) {
            self.enter(i, a)?;
        } else {
            self.exit(i, a);
        }
        self.events += 1;
        Ok(())
    }

    fn enter(&mut self, i: usize, a: usize) -> Result<(), usize> {
        self.work += 1;
        let ranks = core::mem::take(&mut self.nbr_ranks[a]);
        let new_beta = ranks.last().map_or(self.beta, |&r| self.beta.max(r + 1));
        for r in self.beta..new_beta {
            let b = self.sigma_b[r];
            let foot = int((r + 1 + i) as i128);
            self.placed_b[b] = true;
            self.work += 1;
            match self.last[b] {
                Some(_) => {
                    self.partial.foot_b[b] = foot;
                    self.push_back(r);
                }
                None => {
                    self.partial.set(Vertex::b(b), foot, frac(1, 2));
                    self.finished_b[b] = true;
                }
            }
        }
        self.beta = new_beta;
        let foot_a = int((new_beta + i + 1) as i128);

        // neighbors must be exactly the last |ranks| active sticks
        let mut cursor = self.tail;
        for &r in ranks.iter().rev() {
            self.work += 1;
            if cursor != r {
                self.nbr_ranks[a] = ranks;
                return Err(a);
            }
            cursor = self.prev[cursor];
        }
        let length = match ranks.first() {
            Some(&r) => foot_a - self.partial.foot_b[self.sigma_b[r]] + frac(1, 2),
            None => frac(1, 2),
        };
        self.partial.set(Vertex::a(a), foot_a, length);
        self.placed_a[a] = true;
        self.nbr_ranks[a] = ranks;
        Ok(())
    }

    fn exit(&mut self, i: usize, a: usize) {
        self.work += 1;
        let right_end = int((self.beta + i + 1) as i128) + frac(1, 2);
        for k in 0..self.nbr_ranks[a].len() {
            self.work += 1;
            let r = self.nbr_ranks[a][k];
            let b = self.sigma_b[r];
            if self.last[b] == Some(i) {
                self.partial.len_b[b] = right_end - self.partial.foot_b[b];
                self.finished_b[b] = true;
                self.unlink(r);
            }
        }
    }

    /// Places trailing isolated horizontal sticks once every event ran.
    fn finish(mut self) -> (Representation, u64) {
        let na = self.sigma_a.len();
        for r in self.beta..self.sigma_b.len() {
            let b = self.sigma_b[r];
            self.work += 1;
            self.partial.set(Vertex::b(b), int((r + 1 + na) as i128), frac(1, 2));
        }
        (self.partial, self.work)
    }

    /// The placed part of the drawing with every unfinished horizontal stick
    /// cut half a unit past the sweep line, plus the vertices it covers.
    pub fn snapshot(&self) -> (Representation, Vec<Vertex>) {
        let mut rep = self.partial.clone();
        let line = int((self.beta + self.entered()) as i128) + frac(1, 2);
        let mut covered = Vec::new();
        for (a, &placed) in self.placed_a.iter().enumerate() {
            if placed {
                covered.push(Vertex::a(a));
            }
        }
        for b in 0..self.inst.num_b() {
            if self.placed_b[b] {
                covered.push(Vertex::b(b));
                if !self.finished_b[b] {
                    rep.len_b[b] = line - rep.foot_b[b];
                }
            }
        }
        (rep, covered)
    }
}

/// Runs the sweep with explicit orders. Returns the outcome and the work count.
pub fn solve_with_orders(inst: &Instance, sigma_a: &[usize], sigma_b: &[usize]) -> (AbOutcome, u64) {
    let mut state = SweepState::new(inst, sigma_a, sigma_b);
    while !state.is_done() {
        if let Err(at) = state.step() {
            return (AbOutcome::Infeasible { at }, state.work);
        }
    }
    let (rep, work) = state.finish();
    (AbOutcome::Realized(rep), work)
}

fn orders(inst: &Instance) -> Result<(&[usize], &[usize]), Error> {
    if inst.lengths().is_some() {
        return Err(Error::UnexpectedLengths);
    }
    let sa = inst.sigma_a().ok_or(Error::MissingOrder("sigma_A"))?;
    let sb = inst.sigma_b().ok_or(Error::MissingOrder("sigma_B"))?;
    Ok((sa, sb))
}

/// Decides the instance with both orders and builds a representation.
/// Isolated sticks get length 1/2.
pub fn solve_stick_ab(inst: &Instance) -> Result<AbOutcome, Error> {
    solve_stick_ab_counted(inst).map(|(outcome, _)| outcome)
}

/// [`solve_stick_ab`] together with the number of elementary steps.
pub fn solve_stick_ab_counted(inst: &Instance) -> Result<(AbOutcome, u64), Error> {
    let (sa, sb) = orders(inst)?;
    Ok(solve_with_orders(inst, sa, sb))
}

/// Ground order of an instance without isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroundOrder {
    Unique(Vec<Vertex>),
    Infeasible { at: usize },
}

/// The left-to-right order of all feet, shared by every representation
/// respecting both orders. Lengths, if present, are ignored.
pub fn ground_order(inst: &Instance) -> Result<GroundOrder, Error> {
    if let Some(v) = inst.isolated_vertices().next() {
        return Err(Error::IsolatedVertexPresent(v));
    }
    let sa = inst.sigma_a().ok_or(Error::MissingOrder("sigma_A"))?;
    let sb = inst.sigma_b().ok_or(Error::MissingOrder("sigma_B"))?;
    Ok(match solve_with_orders(inst, sa, sb).0 {
        AbOutcome::Realized(rep) => GroundOrder::Unique(rep.ground_order()),
        AbOutcome::Infeasible { at } => GroundOrder::Infeasible { at },
    })
}

/// Convenience for callers that only care about feasibility.
pub fn is_realizable(inst: &Instance, sigma_a: &[usize], sigma_b: &[usize]) -> bool {
    matches!(solve_with_orders(inst, sigma_a, sigma_b).0, AbOutcome::Realized(_))
}
