//! Exponential reference solvers for small instances.
//!
//! Every variant is decided by trying the total ground orders of `A ∪ B`
//! that are consistent with the prescribed orders. With free lengths, an
//! order is realizable iff
//!
//! * every neighbor of a vertical stick `a` lies left of `a`, and
//! * no horizontal non-neighbor `b` left of `a` lies right of `a`'s leftmost
//!   neighbor while having a neighbor right of `a`.
//!
//! (Lengths only need to reach the farthest neighbor, and shorter sticks
//! never create intersections.) With fixed lengths each order is decided by
//! the full quadratic system of difference constraints.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::epsilon::EpsilonValue;
use crate::fixed_length::{
    positions, separations, shortest_paths, solve_fixed_with_order, Constraint, ConstraintKind,
    ConstraintSystem, FixedOutcome, SystemSolution,
};
use crate::model::{Instance, Representation, Side, Vertex};
use crate::rational::{frac, int};
use crate::{Error, Rational};

/// Default bound on `|A| + |B|`.
pub const DEFAULT_MAX_SIZE: usize = 10;

/// Which prescribed orders restrict the enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderFilter {
    pub sigma_a: bool,
    pub sigma_b: bool,
}

impl OrderFilter {
    pub const NONE: Self = OrderFilter { sigma_a: false, sigma_b: false };
    pub const A: Self = OrderFilter { sigma_a: true, sigma_b: false };
    pub const AB: Self = OrderFilter { sigma_a: true, sigma_b: true };
    /// Whatever orders the instance carries.
    pub fn of(inst: &Instance) -> Self {
        OrderFilter { sigma_a: inst.sigma_a().is_some(), sigma_b: inst.sigma_b().is_some() }
    }
}

/// Total orders of `A ∪ B` that contain the selected prescribed orders as
/// subsequences, in lexicographic order of [`Vertex`] sequences.
pub struct OrderEnumerator<'a> {
    inst: &'a Instance,
    sigma_a: Option<&'a [usize]>,
    sigma_b: Option<&'a [usize]>,
    order: Vec<Vertex>,
    /// Candidate lists per depth and the index of the current choice.
    frames: Vec<(Vec<Vertex>, usize)>,
    used_a: Vec<bool>,
    used_b: Vec<bool>,
    placed_a: usize,
    placed_b: usize,
    started: bool,
}

impl<'a> OrderEnumerator<'a> {
    pub fn new(inst: &'a Instance, filter: OrderFilter) -> Result<Self, Error> {
        let sigma_a = match filter.sigma_a {
            true => Some(inst.sigma_a().ok_or(Error::MissingOrder("sigma_A"))?),
            false => None,
        };
        let sigma_b = match filter.sigma_b {
            true => Some(inst.sigma_b().ok_or(Error::MissingOrder("sigma_B"))?),
            false => None,
        };
        Ok(OrderEnumerator {
            inst,
            sigma_a,
            sigma_b,
            order: Vec::new(),
            frames: Vec::new(),
            used_a: vec![false; inst.num_a()],
            used_b: vec![false; inst.num_b()],
            placed_a: 0,
            placed_b: 0,
            started: false,
        })
    }

    fn candidates(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        match self.sigma_a {
            Some(s) => out.extend(s.get(self.placed_a).map(|&a| Vertex::a(a))),
            None => out.extend((0..self.inst.num_a()).filter(|&a| !self.used_a[a]).map(Vertex::a)),
        }
        match self.sigma_b {
            Some(s) => out.extend(s.get(self.placed_b).map(|&b| Vertex::b(b))),
            None => out.extend((0..self.inst.num_b()).filter(|&b| !self.used_b[b]).map(Vertex::b)),
        }
        out
    }

    fn push(&mut self, v: Vertex) {
        match v.side {
            Side::A => {
                self.used_a[v.index] = true;
                self.placed_a += 1;
            }
            Side::B => {
                self.used_b[v.index] = true;
                self.placed_b += 1;
            }
        }
        self.order.push(v);
    }

    fn pop(&mut self) {
        let v = self.order.pop().unwrap();
        match v.side {
            Side::A => {
                self.used_a[v.index] = false;
                self.placed_a -= 1;
            }
            Side::B => {
                self.used_b[v.index] = false;
                self.placed_b -= 1;
            }
        }
    }

    /// Advances to the next order whose every prefix passes `keep`, which is
    /// asked about the current prefix and the vertex about to be appended.
    pub fn next_pruned(&mut self, keep: &mut dyn FnMut(&[Vertex], Vertex) -> bool) -> Option<Vec<Vertex>> {
        let n = self.inst.num_vertices();
        if !self.started {
            self.started = true;
            let c = self.candidates();
            self.frames.push((c, 0));
        } else if self.frames.is_empty() {
            return None;
        } else {
            // Resume after the order returned last time.
            self.frames.pop();
            if let Some(top) = self.frames.last_mut() {
                top.1 += 1;
            }
            if !self.order.is_empty() {
                self.pop();
            }
        }
        while let Some((cands, idx)) = self.frames.last() {
            if self.order.len() == n {
                return Some(self.order.clone());
            }
            if *idx >= cands.len() {
                self.frames.pop();
                if self.frames.is_empty() {
                    return None;
                }
                self.pop();
                self.frames.last_mut().unwrap().1 += 1;
                continue;
            }
            let v = cands[*idx];
            if keep(&self.order, v) {
                self.push(v);
                let c = self.candidates();
                self.frames.push((c, 0));
            } else {
                self.frames.last_mut().unwrap().1 += 1;
            }
        }
        None
    }
}

impl Iterator for OrderEnumerator<'_> {
    type Item = Vec<Vertex>;

    fn next(&mut self) -> Option<Vec<Vertex>> {
        self.next_pruned(&mut |_, _| true)
    }
}

fn check_size(inst: &Instance, max_size: usize) -> Result<(), Error> {
    let size = inst.num_vertices();
    if size > max_size {
        return Err(Error::TooLarge { size, bound: max_size });
    }
    Ok(())
}

/// Positions of each vertical stick's leftmost and each horizontal stick's
/// rightmost neighbor in `order`.
fn extreme_neighbors(inst: &Instance, pos_a: &[usize], pos_b: &[usize]) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let lm = (0..inst.num_a()).map(|a| inst.nbrs_of_a(a).iter().map(|&b| pos_b[b]).min()).collect();
    let rm = (0..inst.num_b()).map(|b| inst.nbrs_of_b(b).iter().map(|&a| pos_a[a]).max()).collect();
    (lm, rm)
}

/// Whether some choice of lengths realizes `inst` with feet in `order`.
pub fn order_realizable_variable(inst: &Instance, order: &[Vertex]) -> Result<bool, Error> {
    let (pos_a, pos_b) = positions(inst, order)?;
    let (lm, rm) = extreme_neighbors(inst, &pos_a, &pos_b);
    for a in 0..inst.num_a() {
        let pa = pos_a[a];
        if inst.nbrs_of_a(a).iter().any(|&b| pos_b[b] > pa) {
            return Ok(false);
        }
        for b in 0..inst.num_b() {
            let pb = pos_b[b];
            if pb < pa && !inst.has_edge(a, b) && lm[a].is_some_and(|l| l < pb) && rm[b].is_some_and(|r| r > pa) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Incremental form of [`order_realizable_variable`]: rejects appending `v`
/// to `prefix` as soon as a violation is certain.
struct VariablePrefixCheck<'a> {
    inst: &'a Instance,
}

impl VariablePrefixCheck<'_> {
    fn keep(&self, prefix: &[Vertex], v: Vertex) -> bool {
        let inst = self.inst;
        match v.side {
            Side::B => !prefix.iter().any(|u| u.is_a() && inst.has_edge(u.index, v.index)),
            Side::A => {
                let a = v.index;
                let placed_b = |b: usize| prefix.contains(&Vertex::b(b));
                if !inst.nbrs_of_a(a).iter().all(|&b| placed_b(b)) {
                    return false;
                }
                let Some(first_nbr) = prefix.iter().position(|u| !u.is_a() && inst.has_edge(a, u.index)) else {
                    return true;
                };
                prefix[first_nbr + 1..].iter().filter(|u| !u.is_a() && !inst.has_edge(a, u.index)).all(|u| {
                    inst.nbrs_of_b(u.index).iter().all(|&a2| prefix.contains(&Vertex::a(a2)))
                })
            }
        }
    }
}

fn search_variable(inst: &Instance, filter: OrderFilter) -> Result<Option<Vec<Vertex>>, Error> {
    let check = VariablePrefixCheck { inst };
    let mut it = OrderEnumerator::new(inst, filter)?;
    Ok(it.next_pruned(&mut |p, v| check.keep(p, v)))
}

/// Free orders and lengths. Returns the lexicographically first realizable
/// ground order.
pub fn oracle_stick(inst: &Instance, max_size: usize) -> Result<Option<Vec<Vertex>>, Error> {
    check_size(inst, max_size)?;
    search_variable(inst, OrderFilter::NONE)
}

/// `sigma_A` prescribed.
pub fn oracle_stick_a(inst: &Instance, max_size: usize) -> Result<Option<Vec<Vertex>>, Error> {
    check_size(inst, max_size)?;
    search_variable(inst, OrderFilter::A)
}

/// Both orders prescribed.
pub fn oracle_stick_ab(inst: &Instance, max_size: usize) -> Result<Option<Vec<Vertex>>, Error> {
    check_size(inst, max_size)?;
    search_variable(inst, OrderFilter::AB)
}

/// Every `sigma_B` that, together with the instance's `sigma_A`, admits a
/// representation. Sorted.
pub fn realizable_sigma_b(inst: &Instance, max_size: usize) -> Result<Vec<Vec<usize>>, Error> {
    check_size(inst, max_size)?;
    let sigma_a = inst.sigma_a().ok_or(Error::MissingOrder("sigma_A"))?.to_vec();
    let mut out = Vec::new();
    for sb in permutations(inst.num_b()) {
        let with_b = inst.clone().with_sigma_b(sb.clone())?.with_sigma_a(sigma_a.clone())?;
        if search_variable(&with_b, OrderFilter::AB)?.is_some() {
            out.push(sb);
        }
    }
    Ok(out)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// A representation for a realizable order: unit spacing, every stick just
/// long enough for its farthest neighbor, isolated sticks of length 1/2.
pub fn variable_representation(inst: &Instance, order: &[Vertex]) -> Result<Option<Representation>, Error> {
    if !order_realizable_variable(inst, order)? {
        return Ok(None);
    }
    let (pos_a, pos_b) = positions(inst, order)?;
    let (lm, rm) = extreme_neighbors(inst, &pos_a, &pos_b);
    let mut rep = Representation::zeroed(inst.num_a(), inst.num_b());
    let to_len = |d: Option<usize>| d.map_or(frac(1, 2), |d| int(d as i128));
    for a in 0..inst.num_a() {
        rep.set(Vertex::a(a), int(pos_a[a] as i128), to_len(lm[a].map(|l| pos_a[a] - l)));
    }
    for b in 0..inst.num_b() {
        rep.set(Vertex::b(b), int(pos_b[b] as i128), to_len(rm[b].map(|r| r - pos_b[b])));
    }
    Ok(Some(rep))
}

/// The quadratic system for `order`: one constraint per consecutive pair and
/// per pair of a vertical and a horizontal stick.
pub fn dense_system(inst: &Instance, order: &[Vertex]) -> Result<ConstraintSystem, Error> {
    let lengths = inst.lengths().ok_or(Error::MissingLengths)?;
    let (pos_a, pos_b) = positions(inst, order)?;
    let mut constraints: Vec<Constraint> = separations(order.len()).collect();
    for a in 0..inst.num_a() {
        for b in 0..inst.num_b() {
            let (pa, pb) = (pos_a[a], pos_b[b]);
            let reach = lengths.a[a].min(lengths.b[b]);
            let c = match (inst.has_edge(a, b), pb < pa) {
                (true, true) => Constraint { from: pb, to: pa, bound: EpsilonValue::standard(reach), kind: ConstraintKind::Edge },
                (true, false) => Constraint { from: pa, to: pb, bound: EpsilonValue::epsilon(-1), kind: ConstraintKind::Misplaced },
                (false, true) => Constraint { from: pa, to: pb, bound: EpsilonValue::new(-reach, -1), kind: ConstraintKind::NonEdge },
                (false, false) => continue,
            };
            constraints.push(c);
        }
    }
    Ok(ConstraintSystem { vars: order.to_vec(), constraints })
}

/// Feasibility of [`dense_system`].
pub fn dense_feasible(inst: &Instance, order: &[Vertex]) -> Result<bool, Error> {
    let sys = dense_system(inst, order)?;
    Ok(matches!(crate::fixed_length::solve_system(&sys), SystemSolution::Feasible(_)))
}

/// Fixed lengths; the instance's prescribed orders restrict the search.
/// Returns the first feasible order with its representation.
pub fn oracle_fixed(inst: &Instance, max_size: usize) -> Result<Option<(Vec<Vertex>, Representation)>, Error> {
    check_size(inst, max_size)?;
    if inst.lengths().is_none() {
        return Err(Error::MissingLengths);
    }
    for order in OrderEnumerator::new(inst, OrderFilter::of(inst))? {
        if let FixedOutcome::Realized(rep) = solve_fixed_with_order(inst, &order)? {
            return Ok(Some((order, rep)));
        }
    }
    Ok(None)
}

/// Smallest `E` such that some placement with feet in `order` and the
/// prescribed lengths has bounding-box width and height at most `E`, or
/// `None` if the order is infeasible. `extra` constraints are added to the
/// dense system.
///
/// The leftmost point of a drawing is the first foot and the lowest point
/// the last foot, so the extent bound is a difference constraint per stick.
/// Starting from `E = 0`, every negative cycle `c + k·E < 0` raises `E` to
/// `−c/k`; the first feasible value is the minimum.
pub fn min_extent_for_order(inst: &Instance, order: &[Vertex], extra: &[Constraint]) -> Result<Option<EpsilonValue>, Error> {
    let lengths = inst.lengths().ok_or(Error::MissingLengths)?;
    let sys = dense_system(inst, order)?;
    let n = order.len();
    if n == 0 {
        return Ok(Some(EpsilonValue::zero()));
    }
    let mut arcs: Vec<(usize, usize, EpsilonValue)> =
        sys.constraints.iter().chain(extra).map(|c| (c.from, c.to, c.bound)).collect();
    let fixed = arcs.len();
    // Parametric arcs: weight = E − offset.
    let mut offsets = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let (horizontal, vertical) = match v.side {
            Side::A => (Rational::zero(), lengths.get(v)),
            Side::B => (lengths.get(v), Rational::zero()),
        };
        offsets.push((0, i, horizontal));
        offsets.push((i, n - 1, vertical));
    }
    let mut e = EpsilonValue::zero();
    loop {
        arcs.truncate(fixed);
        arcs.extend(offsets.iter().map(|&(f, t, off)| (f, t, e - EpsilonValue::standard(off))));
        match shortest_paths(n, &arcs) {
            Ok(_) => return Ok(Some(e)),
            Err(cycle) => {
                let k = cycle.iter().filter(|&&i| i >= fixed).count();
                if k == 0 {
                    return Ok(None);
                }
                let c = cycle.iter().fold(EpsilonValue::zero(), |acc, &i| {
                    acc + if i >= fixed { -EpsilonValue::standard(offsets[i - fixed].2) } else { arcs[i].2 }
                });
                let next = (-c).scale(frac(1, k as i128));
                debug_assert!(next > e);
                e = next;
            }
        }
    }
}

/// Minimum of [`min_extent_for_order`] over all orders consistent with the
/// instance's prescribed orders, with the lexicographically first order
/// attaining it.
pub fn min_extent(inst: &Instance, max_size: usize, extra: &[Constraint]) -> Result<Option<(EpsilonValue, Vec<Vertex>)>, Error> {
    check_size(inst, max_size)?;
    let mut best: Option<(EpsilonValue, Vec<Vertex>)> = None;
    for order in OrderEnumerator::new(inst, OrderFilter::of(inst))? {
        // Cheap rejection before the parametric search.
        if !order_realizable_variable(inst, &order)? {
            continue;
        }
        if let Some(e) = min_extent_for_order(inst, &order, extra)? {
            if best.as_ref().is_none_or(|(b, _)| e < *b) {
                best = Some((e, order));
            }
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::verify_representation;
    use crate::model::Lengths;
    use alloc::collections::BTreeSet;
    use proptest::prelude::*;

    fn inst(na: usize, nb: usize, edges: &[(usize, usize)]) -> Instance {
        Instance::with_counts(na, nb, edges.iter().copied()).unwrap()
    }

    fn order(items: &[(char, usize)]) -> Vec<Vertex> {
        items.iter().map(|&(s, i)| if s == 'a' { Vertex::a(i) } else { Vertex::b(i) }).collect()
    }

    #[test]
    fn enumerator_respects_prescribed_orders() {
        let g = inst(2, 2, &[]).with_sigma_a(vec![1, 0]).unwrap().with_sigma_b(vec![0, 1]).unwrap();
        let all: Vec<_> = OrderEnumerator::new(&g, OrderFilter::NONE).unwrap().collect();
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), 24);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        let ab: Vec<_> = OrderEnumerator::new(&g, OrderFilter::AB).unwrap().collect();
        assert_eq!(ab.len(), 6);
        for o in &ab {
            let a_seq: Vec<_> = o.iter().filter(|v| v.is_a()).map(|v| v.index).collect();
            assert_eq!(a_seq, vec![1, 0]);
        }
        assert_eq!(OrderEnumerator::new(&g, OrderFilter::A).unwrap().count(), 12);
        assert_eq!(OrderEnumerator::new(&inst(0, 0, &[]), OrderFilter::NONE).unwrap().count(), 1);
        let bare = inst(1, 1, &[]);
        assert!(matches!(OrderEnumerator::new(&bare, OrderFilter::A), Err(Error::MissingOrder(_))));
    }

    #[test]
    fn pruned_enumeration_keeps_order() {
        let g = inst(2, 1, &[]);
        let mut it = OrderEnumerator::new(&g, OrderFilter::NONE).unwrap();
        let mut keep = |p: &[Vertex], v: Vertex| !(p.is_empty() && v == Vertex::a(0));
        let mut got = Vec::new();
        while let Some(o) = it.next_pruned(&mut keep) {
            got.push(o);
        }
        assert_eq!(got.len(), 4);
        assert!(got.iter().all(|o| o[0] != Vertex::a(0)));
    }

    #[test]
    fn ordinal_examples() {
        let e = inst(1, 1, &[(0, 0)]);
        assert!(order_realizable_variable(&e, &order(&[('b', 0), ('a', 0)])).unwrap());
        assert!(!order_realizable_variable(&e, &order(&[('a', 0), ('b', 0)])).unwrap());
        let g = inst(3, 2, &[(0, 0), (0, 1), (1, 0), (2, 1)]);
        let o = order(&[('b', 0), ('b', 1), ('a', 0), ('a', 1), ('a', 2)]);
        assert!(!order_realizable_variable(&g, &o).unwrap());
        assert_eq!(order_realizable_variable(&g, &o[..3]), Err(Error::NotATotalOrder));
    }

    #[test]
    fn oracle_examples() {
        let k22 = inst(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(
            oracle_stick(&k22, DEFAULT_MAX_SIZE).unwrap(),
            Some(order(&[('b', 0), ('b', 1), ('a', 0), ('a', 1)]))
        );
        let alternating = inst(4, 2, &[(0, 0), (2, 0), (1, 1), (3, 1)]).with_sigma_a(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(oracle_stick_a(&alternating, DEFAULT_MAX_SIZE).unwrap(), None);
        assert!(oracle_stick(&alternating, DEFAULT_MAX_SIZE).unwrap().is_some());
        assert!(oracle_stick(&inst(0, 0, &[]), DEFAULT_MAX_SIZE).unwrap().is_some());
        assert_eq!(
            oracle_stick(&inst(6, 5, &[]), DEFAULT_MAX_SIZE),
            Err(Error::TooLarge { size: 11, bound: DEFAULT_MAX_SIZE })
        );
    }

    fn with_lengths(g: Instance, a: &[i128], b: &[i128]) -> Instance {
        g.with_lengths(Lengths { a: a.iter().map(|&x| int(x)).collect(), b: b.iter().map(|&x| int(x)).collect() })
            .unwrap()
    }

    #[test]
    fn fixed_oracle_examples() {
        let e = with_lengths(inst(1, 1, &[(0, 0)]), &[1], &[1]);
        let (o, rep) = oracle_fixed(&e, DEFAULT_MAX_SIZE).unwrap().unwrap();
        assert_eq!(o, order(&[('b', 0), ('a', 0)]));
        assert!(verify_representation(&e, &rep).unwrap().is_valid());

        // Order (b1, b2, a1) is infeasible, the free search finds another.
        let g = with_lengths(inst(1, 2, &[(0, 0)]), &[10], &[10, 10]);
        assert!(!dense_feasible(&g, &order(&[('b', 0), ('b', 1), ('a', 0)])).unwrap());
        let (o, rep) = oracle_fixed(&g, DEFAULT_MAX_SIZE).unwrap().unwrap();
        assert!(o == order(&[('b', 0), ('a', 0), ('b', 1)]) || o == order(&[('b', 1), ('b', 0), ('a', 0)]));
        assert!(verify_representation(&g, &rep).unwrap().is_valid());
        assert!(dense_feasible(&g, &order(&[('b', 1), ('b', 0), ('a', 0)])).unwrap());
    }

    #[test]
    fn variable_representation_verifies() {
        let g = inst(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        let o = oracle_stick(&g, DEFAULT_MAX_SIZE).unwrap().unwrap();
        let rep = variable_representation(&g, &o).unwrap().unwrap();
        assert!(verify_representation(&g, &rep).unwrap().is_valid());
    }

    #[test]
    fn extent_of_a_single_cross() {
        // b at 0 and a at p: width max(p, ℓ_b), height max(p, ℓ_a) with p ≤ 1.
        let g = with_lengths(inst(1, 1, &[(0, 0)]), &[1], &[1]);
        let (e, o) = min_extent(&g, DEFAULT_MAX_SIZE, &[]).unwrap().unwrap();
        assert_eq!(e, EpsilonValue::standard(int(1)));
        assert_eq!(o, order(&[('b', 0), ('a', 0)]));
        // Two horizontals of length 2 below one vertical of length 1.
        let g = with_lengths(inst(1, 2, &[(0, 0), (0, 1)]), &[1], &[2, 2]);
        let (e, _) = min_extent(&g, DEFAULT_MAX_SIZE, &[]).unwrap().unwrap();
        // Width: first foot to the end of a horizontal, at least 2 + ε.
        assert_eq!(e, EpsilonValue::new(int(2), 1));
    }

    /// Independent check of the ordinal criterion: unit-spaced feet and
    /// every length in `{1/2, 1, 2, ..., n}` (0 encodes 1/2).
    fn brute_force_variable(g: &Instance, o: &[Vertex]) -> bool {
        let n = o.len();
        let (pos_a, pos_b) = positions(g, o).unwrap();
        let sticks: Vec<Vertex> = g.vertices().collect();
        let mut lens = vec![0usize; sticks.len()];
        loop {
            let ok = (0..g.num_a()).all(|a| {
                (0..g.num_b()).all(|b| {
                    let la = lens[a];
                    let lb = lens[g.num_a() + b];
                    let meet = pos_a[a] > pos_b[b] && pos_a[a] - pos_b[b] <= la.min(lb);
                    meet == g.has_edge(a, b)
                })
            });
            if ok {
                return true;
            }
            let mut k = 0;
            loop {
                if k == lens.len() {
                    return false;
                }
                lens[k] += 1;
                if lens[k] <= n.max(1) {
                    break;
                }
                lens[k] = 0;
                k += 1;
            }
        }
    }

    fn arb_graph(max_a: usize, max_b: usize) -> impl Strategy<Value = Instance> {
        (1..=max_a, 1..=max_b)
            .prop_flat_map(|(na, nb)| (Just(na), Just(nb), prop::collection::vec(any::<bool>(), na * nb)))
            .prop_map(|(na, nb, bits)| {
                let edges = (0..na * nb).filter(|&k| bits[k]).map(|k| (k / nb, k % nb));
                Instance::with_counts(na, nb, edges).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn ordinal_criterion_matches_length_search(g in arb_graph(3, 2), seed in any::<u64>()) {
            let orders: Vec<_> = OrderEnumerator::new(&g, OrderFilter::NONE).unwrap().collect();
            let o = &orders[(seed % orders.len() as u64) as usize];
            prop_assert_eq!(order_realizable_variable(&g, o).unwrap(), brute_force_variable(&g, o));
        }

        #[test]
        fn pruned_search_matches_full_scan(g in arb_graph(3, 3)) {
            let full = OrderEnumerator::new(&g, OrderFilter::NONE)
                .unwrap()
                .find(|o| order_realizable_variable(&g, o).unwrap());
            prop_assert_eq!(oracle_stick(&g, DEFAULT_MAX_SIZE).unwrap(), full);
        }

        #[test]
        fn minimal_representation_is_valid(g in arb_graph(3, 3)) {
            if let Some(o) = oracle_stick(&g, DEFAULT_MAX_SIZE).unwrap() {
                let rep = variable_representation(&g, &o).unwrap().unwrap();
                prop_assert!(verify_representation(&g, &rep).unwrap().is_valid());
            }
        }
    }
}
