//! Recognition when only the order of the vertical sticks is prescribed.
//!
//! The sweep visits the vertical sticks in `sigma_A` order and maintains a
//! [`SemiOrderedForest`] with one tree per connected component of the graph
//! seen so far, in component order. At the enter event of `a`, the active
//! neighbors of `a` must form a suffix of the active horizontal sticks. The
//! trees are classified as unmarked (no active neighbor), marked (every active
//! leaf is a neighbor) or half-marked; the sequence must read
//! `unmarked* half? marked*` with fully dead trees matching anything.
//!
//! * A half-marked tree is split along its path of half-marked nodes so that
//!   every node puts its unmarked parts before the half-marked child and its
//!   marked parts after it. The result becomes the first child of a new root
//!   whose second child collects the following trees and the entering sticks.
//! * Without a half-marked tree, the trees after the last unmarked one are
//!   collected together with the entering sticks under a single new root.
//!
//! At the exit event, horizontal sticks without later neighbors become dead.
//!
//! Disconnected graphs are split into components. If two components
//! alternate as `x y x y` along `sigma_A`, there is no representation;
//! otherwise every component is solved on its own and nested into the
//! enclosing one right after its preceding vertical stick.

use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::components;
use crate::model::{Instance, Representation, Vertex};
use crate::semi_ordered_tree::{NodeId, SemiOrderedForest};
use crate::sweep_ab::{solve_with_orders, AbOutcome};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Status {
    Unmarked,
    Marked,
    Half,
    /// No active leaf; fits either side.
    Dead,
}

fn status(active: usize, marked: usize) -> Status {
    match (active, marked) {
        (0, _) => Status::Dead,
        (a, m) if a == m => Status::Marked,
        (_, 0) => Status::Unmarked,
        _ => Status::Half,
    }
}

/// Whether the non-dead statuses read `unmarked* half? marked*`.
fn is_suffix_pattern(statuses: impl Iterator<Item = Status>) -> bool {
    let mut phase = 0;
    for s in statuses {
        let p = match s {
            Status::Dead => continue,
            Status::Unmarked => 0,
            Status::Half => 1,
            Status::Marked => 2,
        };
        if p < phase || (p == 1 && phase == 1) {
            return false;
        }
        phase = phase.max(p);
        if p == 1 {
            phase = 1;
        }
    }
    true
}

/// Sweep state between events.
#[derive(Clone, Debug)]
pub struct StickASweepState<'a> {
    inst: &'a Instance,
    sigma_a: &'a [usize],
    pub forest: SemiOrderedForest,
    leaf: Vec<Option<NodeId>>,
    /// Horizontal sticks introduced so far.
    pub seen_b: Vec<bool>,
    /// Horizontal sticks without a neighbor at or after the sweep line.
    pub dead_b: Vec<bool>,
    /// Per `B` index, sweep position of the last neighbor.
    last: Vec<Option<usize>>,
    is_nbr: Vec<bool>,
    events: usize,
    /// Elementary steps executed, for complexity instrumentation.
    pub work: u64,
}

impl<'a> StickASweepState<'a> {
    pub fn new(inst: &'a Instance, sigma_a: &'a [usize]) -> Self {
        let mut last = vec![None; inst.num_b()];
        for (i, &a) in sigma_a.iter().enumerate() {
            for &b in inst.nbrs_of_a(a) {
                last[b] = Some(i);
            }
        }
        StickASweepState {
            inst,
            sigma_a,
            forest: SemiOrderedForest::new(),
            leaf: vec![None; inst.num_b()],
            seen_b: vec![false; inst.num_b()],
            dead_b: vec![false; inst.num_b()],
            last,
            is_nbr: vec![false; inst.num_b()],
            events: 0,
            work: 0,
        }
    }

    pub fn is_done(&self) -> bool {
        self.events == 2 * self.sigma_a.len()
    }

    /// Processes the next event. An error carries the `A` index of the
    /// vertical stick whose neighbors cannot be made a suffix.
    pub fn step(&mut self) -> Result<(), usize> {
        let i = self.events / 2;
        let a = self.sigma_a[i];
        if self.events.is_multiple_of(2) {
            self.enter_event(a).map_err(|()| a)?;
        } else {
            self.exit_event(i, a);
        }
        self.events += 1;
        let seen = self.seen_b.iter().filter(|&&s| s).count();
        assert!(self.forest.num_nodes() <= 3 * seen + 1, "forest larger than 3|B| + 1");
        Ok(())
    }

    /// Active and marked leaf counts for every node of the tree at `root`.
    fn count(&mut self, root: NodeId, active: &mut [usize], marked: &mut [usize]) {
        let order = self.forest.preorder(root);
        for &v in order.iter().rev() {
            self.work += 1;
            let n = self.forest.node(v);
            let (mut act, mut mk) = (0, 0);
            if let Some(b) = n.leaf_label {
                if !self.dead_b[b] {
                    act = 1;
                    mk = usize::from(self.is_nbr[b]);
                }
            } else {
                for c in n.children() {
                    act += active[c];
                    mk += marked[c];
                }
            }
            active[v] = act;
            marked[v] = mk;
        }
    }

    fn enter_event(&mut self, a: usize) -> Result<(), ()> {
        let nbrs = self.inst.nbrs_of_a(a);
        for &b in nbrs {
            self.is_nbr[b] = true;
        }
        let result = self.enter_marked(nbrs);
        for &b in nbrs {
            self.is_nbr[b] = false;
        }
        result
    }

    fn enter_marked(&mut self, nbrs: &[usize]) -> Result<(), ()> {
        let size = self.forest_capacity();
        let mut active = vec![0; size];
        let mut marked = vec![0; size];
        let roots = self.forest.roots.clone();
        for &r in &roots {
            self.count(r, &mut active, &mut marked);
        }
        let st = |v: NodeId| status(active[v], marked[v]);
        let tree_status: Vec<Status> = roots.iter().map(|&r| st(r)).collect();
        if !is_suffix_pattern(tree_status.iter().copied()) {
            return Err(());
        }

        let entering: Vec<usize> = nbrs.iter().copied().filter(|&b| !self.seen_b[b]).collect();
        let half = tree_status.iter().position(|&s| s == Status::Half);
        let (keep, t) = match half {
            Some(h) => {
                let t = self.split_tree(roots[h], &active, &marked)?;
                (h, Some(t))
            }
            None => {
                let keep = tree_status.iter().rposition(|&s| s == Status::Unmarked).map_or(0, |u| u + 1);
                (keep, None)
            }
        };
        let tail_start = keep + usize::from(t.is_some());
        let tail: Vec<NodeId> = roots[tail_start..].to_vec();

        let mut leaves = Vec::with_capacity(entering.len());
        for b in entering {
            self.work += 1;
            let id = self.forest.add_leaf(b);
            self.leaf[b] = Some(id);
            self.seen_b[b] = true;
            leaves.push(id);
        }
        let z = match (tail.len(), leaves.len()) {
            (0, 0) => None,
            (1, 0) => Some(tail[0]),
            _ => Some(self.forest.add_internal(tail, leaves)),
        };
        let new_root = match (t, z) {
            (Some(t), Some(z)) => Some(self.forest.add_internal(vec![t, z], Vec::new())),
            (Some(t), None) => Some(t),
            (None, z) => z,
        };
        self.forest.roots.truncate(keep);
        if let Some(r) = new_root {
            self.forest.node_mut(r).parent = None;
            self.forest.node_mut(r).dead = false;
            self.forest.roots.push(r);
        }
        Ok(())
    }

    fn forest_capacity(&self) -> usize {
        self.forest.roots.iter().flat_map(|&r| self.forest.preorder(r)).max().map_or(0, |m| m + 1)
    }

    /// Restructures the half-marked tree at `root` so that it expresses
    /// exactly its permutations with the marked leaves as an active suffix.
    /// Returns the new root.
    fn split_tree(&mut self, root: NodeId, active: &[usize], marked: &[usize]) -> Result<NodeId, ()> {
        let st = |v: NodeId| status(active[v], marked[v]);
        // Half-marked path from the root.
        let mut path = vec![root];
        loop {
            let x = *path.last().unwrap();
            self.work += 1;
            let n = self.forest.node(x);
            if !is_suffix_pattern(n.ordered_children.iter().map(|&c| st(c))) {
                return Err(());
            }
            let halves: Vec<NodeId> = n.children().filter(|&c| st(c) == Status::Half).collect();
            match halves.as_slice() {
                [] => break,
                [y] if !self.forest.node(*y).is_leaf() => path.push(*y),
                _ => return Err(()),
            }
        }

        let mut below: Option<NodeId> = None;
        for &x in path.iter().rev() {
            let (ordered, unordered) = {
                let n = self.forest.node_mut(x);
                (core::mem::take(&mut n.ordered_children), core::mem::take(&mut n.unordered_children))
            };
            self.work += (ordered.len() + unordered.len()) as u64;
            // `y` sits at the old half-marked child's slot, possibly replaced
            // by its contraction.
            let (pre, post, y) = match below {
                Some(y) => {
                    let at = ordered.iter().position(|&c| st(c) == Status::Half).unwrap();
                    (ordered[..at].to_vec(), ordered[at + 1..].to_vec(), Some(y))
                }
                None => {
                    let at = ordered.iter().position(|&c| st(c) == Status::Marked).unwrap_or(ordered.len());
                    (ordered[..at].to_vec(), ordered[at..].to_vec(), None)
                }
            };
            let mut unmarked_leaves = Vec::new();
            let mut marked_leaves = Vec::new();
            let mut dead_leaves = Vec::new();
            for c in unordered {
                match st(c) {
                    Status::Unmarked => unmarked_leaves.push(c),
                    Status::Marked => marked_leaves.push(c),
                    _ => dead_leaves.push(c),
                }
            }
            let mut children = Vec::new();
            if let Some(lo) = self.group(pre, unmarked_leaves) {
                children.push(lo);
            }
            children.extend(y);
            if let Some(hi) = self.group(post, marked_leaves) {
                children.push(hi);
            }
            {
                let n = self.forest.node_mut(x);
                n.ordered_children = children;
                n.unordered_children = dead_leaves;
            }
            self.forest.adopt_children(x);
            below = Some(self.forest.contract(x));
        }
        Ok(below.unwrap())
    }

    /// A node holding `ordered` in order and `leaves` free, or the single
    /// non-leaf child itself, or nothing when both are empty.
    fn group(&mut self, ordered: Vec<NodeId>, leaves: Vec<NodeId>) -> Option<NodeId> {
        match (ordered.len(), leaves.len()) {
            (0, 0) => None,
            (1, 0) => Some(ordered[0]),
            _ => Some(self.forest.add_internal(ordered, leaves)),
        }
    }

    fn exit_event(&mut self, i: usize, a: usize) {
        for &b in self.inst.nbrs_of_a(a) {
            self.work += 1;
            if self.last[b] != Some(i) {
                continue;
            }
            self.dead_b[b] = true;
            let mut v = self.leaf[b].expect("neighbors are placed at enter");
            self.forest.node_mut(v).dead = true;
            while let Some(p) = self.forest.node(v).parent {
                self.work += 1;
                let n = self.forest.node(p);
                if n.dead || !n.children().all(|c| self.forest.node(c).dead) {
                    break;
                }
                self.forest.node_mut(p).dead = true;
                v = p;
            }
        }
    }
}

/// Result of [`solve_stick_a`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StickAOutcome {
    Realized { sigma_b: Vec<usize>, representation: Representation },
    /// The neighbors of vertical stick `at` (an `A` index) cannot form a
    /// suffix of the active horizontal sticks.
    Rejected { at: usize },
    /// Positions `i < j < k < l` in `sigma_A` where two components alternate.
    Alternation { positions: [usize; 4] },
}

#[derive(Clone, Debug)]
pub struct StickASolution {
    pub outcome: StickAOutcome,
    /// Final forest per component with vertical sticks, in component order,
    /// labelled by `B` index. Empty unless realized.
    pub forests: Vec<SemiOrderedForest>,
    pub work: u64,
}

/// Runs the sweep on `inst` as a whole. The forest is meaningful for
/// connected graphs; components of a disconnected graph are kept in sequence
/// and never nested.
pub fn sweep_forest(inst: &Instance) -> Result<(Result<SemiOrderedForest, usize>, u64), Error> {
    let sigma_a = checked_sigma_a(inst)?;
    let mut state = StickASweepState::new(inst, sigma_a);
    while !state.is_done() {
        if let Err(at) = state.step() {
            return Ok((Err(at), state.work));
        }
    }
    let mut forest = state.forest;
    for b in 0..inst.num_b() {
        if !state.seen_b[b] {
            let leaf = forest.add_leaf(b);
            forest.roots.push(leaf);
        }
    }
    Ok((Ok(forest), state.work))
}

fn checked_sigma_a(inst: &Instance) -> Result<&[usize], Error> {
    if inst.lengths().is_some() {
        return Err(Error::UnexpectedLengths);
    }
    inst.sigma_a().ok_or(Error::MissingOrder("sigma_A"))
}

/// First alternation `x y x y` of component ids along `word`, as positions.
pub fn find_alternation(word: &[usize]) -> Option<[usize; 4]> {
    let n_comp = word.iter().copied().max().map_or(0, |m| m + 1);
    let mut last_seen = vec![usize::MAX; n_comp];
    let mut open = vec![false; n_comp];
    // Component that closed each component, and where.
    let mut closed_by: Vec<Option<(usize, usize)>> = vec![None; n_comp];
    let mut stack: Vec<usize> = Vec::new();
    for (p, &c) in word.iter().enumerate() {
        if let Some((x, k)) = closed_by[c] {
            let j = last_seen[c];
            let i = word[..j].iter().rposition(|&w| w == x).unwrap();
            return Some([i, j, k, p]);
        }
        if open[c] {
            while let Some(&top) = stack.last() {
                if top == c {
                    break;
                }
                stack.pop();
                open[top] = false;
                closed_by[top] = Some((c, p));
            }
        } else {
            stack.push(c);
            open[c] = true;
        }
        last_seen[c] = p;
    }
    None
}

/// Decides the instance with `sigma_A` prescribed and builds a
/// representation through the two-order sweep.
pub fn solve_stick_a(inst: &Instance) -> Result<StickASolution, Error> {
    let sigma_a = checked_sigma_a(inst)?;
    let comps = components(inst);
    let with_a: Vec<&Vec<Vertex>> = comps.iter().filter(|c| c.iter().any(Vertex::is_a)).collect();
    let mut comp_of_a = vec![0; inst.num_a()];
    for (k, c) in with_a.iter().enumerate() {
        for v in c.iter().filter(|v| v.is_a()) {
            comp_of_a[v.index] = k;
        }
    }
    let word: Vec<usize> = sigma_a.iter().map(|&a| comp_of_a[a]).collect();
    if let Some(positions) = find_alternation(&word) {
        return Ok(StickASolution { outcome: StickAOutcome::Alternation { positions }, forests: Vec::new(), work: 0 });
    }

    let mut work = 0;
    let mut forests = Vec::new();
    // Ground order of every component, in global indices.
    let mut local_orders: Vec<Vec<Vertex>> = Vec::new();
    for comp in &with_a {
        let (sub, a_orig, b_orig) = inst.induced(comp);
        let (forest, w) = sweep_forest(&sub)?;
        work += w;
        let mut forest = match forest {
            Ok(f) => f,
            Err(at) => {
                let outcome = StickAOutcome::Rejected { at: a_orig[at] };
                return Ok(StickASolution { outcome, forests: Vec::new(), work });
            }
        };
        let sigma_b = forest.canonical_forest_permutation();
        let (ab, w) = solve_with_orders(&sub, sub.sigma_a().unwrap(), &sigma_b);
        work += w;
        let AbOutcome::Realized(rep) = ab else {
            unreachable!("every permutation expressed by the forest is realizable")
        };
        local_orders.push(
            rep.ground_order()
                .into_iter()
                .map(|v| if v.is_a() { Vertex::a(a_orig[v.index]) } else { Vertex::b(b_orig[v.index]) })
                .collect(),
        );
        forest.map_labels(|l| b_orig[l]);
        forests.push(forest);
    }

    let ground = nest(&word, &local_orders);
    let mut sigma_b: Vec<usize> = ground.iter().filter(|v| !v.is_a()).map(|v| v.index).collect();
    for c in comps.iter().filter(|c| c.iter().all(|v| !v.is_a())) {
        sigma_b.extend(c.iter().map(|v| v.index));
    }
    let (ab, w) = solve_with_orders(inst, sigma_a, &sigma_b);
    work += w;
    let outcome = match ab {
        AbOutcome::Realized(representation) => StickAOutcome::Realized { sigma_b, representation },
        AbOutcome::Infeasible { .. } => unreachable!("nested components are realizable"),
    };
    Ok(StickASolution { outcome, forests, work })
}

/// Global ground order from per-component ground orders. A component whose
/// first vertical stick comes after some stick `a` of an enclosing open
/// component is inserted right after `a`. `word` gives the component of
/// every `sigma_A` position and contains no alternation.
fn nest(word: &[usize], local: &[Vec<Vertex>]) -> Vec<Vertex> {
    // Children attached after each (component, position in its local order).
    let n = local.len();
    let mut attached: Vec<Vec<Vec<usize>>> = local.iter().map(|o| vec![Vec::new(); o.len()]).collect();
    let mut top_level = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut seen = vec![false; n];
    // Number of vertical sticks of each component passed so far.
    let mut passed = vec![0usize; n];
    let a_slots: Vec<Vec<usize>> =
        local.iter().map(|o| o.iter().enumerate().filter(|(_, v)| v.is_a()).map(|(k, _)| k).collect()).collect();
    for &c in word {
        if !seen[c] {
            seen[c] = true;
            match stack.last() {
                Some(&parent) => {
                    let slot = a_slots[parent][passed[parent] - 1];
                    attached[parent][slot].push(c);
                }
                None => top_level.push(c),
            }
            stack.push(c);
        } else {
            while stack.last() != Some(&c) {
                stack.pop();
            }
        }
        passed[c] += 1;
    }

    fn emit(c: usize, local: &[Vec<Vertex>], attached: &[Vec<Vec<usize>>], out: &mut Vec<Vertex>) {
        for (k, &v) in local[c].iter().enumerate() {
            out.push(v);
            for &child in &attached[c][k] {
                emit(child, local, attached, out);
            }
        }
    }
    let mut out = Vec::new();
    for c in top_level {
        emit(c, local, &attached, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::verify_representation;
    use crate::oracle::{oracle_stick_a, realizable_sigma_b, DEFAULT_MAX_SIZE};
    use proptest::prelude::*;
    use crate::semi_ordered_tree::DEFAULT_ENUMERATION_BOUND;
    use alloc::collections::BTreeSet;
    use alloc::string::String;
    use alloc::format;

    fn inst(na: usize, nb: usize, edges: &[(usize, usize)]) -> Instance {
        Instance::with_counts(na, nb, edges.iter().copied()).unwrap().with_sigma_a((0..na).collect()).unwrap()
    }

    fn name(l: usize) -> String {
        format!("b{}", l + 1)
    }

    fn expressed(f: &SemiOrderedForest) -> BTreeSet<Vec<usize>> {
        f.enumerate_forest(DEFAULT_ENUMERATION_BOUND).unwrap().into_iter().collect()
    }

    fn run_events(g: &Instance, events: usize) -> StickASweepState<'_> {
        let mut s = StickASweepState::new(g, g.sigma_a().unwrap());
        for _ in 0..events {
            s.step().unwrap();
        }
        s
    }

    #[test]
    fn first_enter_is_a_single_node() {
        let g = inst(1, 2, &[(0, 0), (0, 1)]);
        let s = run_events(&g, 1);
        assert_eq!(s.forest.format_forest(&name), "(unord: {b1, b2})");
    }

    #[test]
    fn star_keeps_both_orders_once_b1_is_dead() {
        // b1 ends at a1 and cannot block b2 from reaching a2.
        let g = inst(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        let s = run_events(&g, 3);
        assert_eq!(expressed(&s.forest), BTreeSet::from([vec![0, 1], vec![1, 0]]));
        assert_eq!(realizable_sigma_b(&g, DEFAULT_MAX_SIZE).unwrap(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn exit_marks_dead() {
        let g = inst(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        let s = run_events(&g, 2);
        assert!(s.dead_b[0] && !s.dead_b[1]);
        let single = inst(1, 1, &[(0, 0)]);
        let s = run_events(&single, 2);
        assert!(s.dead_b[0]);
        let root = s.forest.roots[0];
        assert!(s.forest.node(root).dead);
    }

    #[test]
    fn joining_vertex_builds_root_with_tree_then_collector() {
        // a1~{b1,b2}, a2~{b3,b4} form two trees; a3 sees b2 from the first
        // and all of the second, and brings b5.
        let g = inst(4, 5, &[(0, 0), (0, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (2, 4), (3, 0), (3, 4)]);
        let s = run_events(&g, 4);
        assert_eq!(s.forest.roots.len(), 2);
        let s = run_events(&g, 5);
        assert_eq!(s.forest.format_forest(&name), "(ord: [(ord: [(unord: {b1}), (unord: {b2})]), (ord: [(unord: {b3, b4})], unord: {b5})])");
    }

    #[test]
    fn path_expresses_both_orders() {
        let g = inst(1, 2, &[(0, 0), (0, 1)]);
        let sol = solve_stick_a(&g).unwrap();
        assert_eq!(expressed(&sol.forests[0]), BTreeSet::from([vec![0, 1], vec![1, 0]]));
        assert_eq!(realizable_sigma_b(&g, DEFAULT_MAX_SIZE).unwrap(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn fully_marked_first_tree_can_follow_entering_sticks() {
        let g = inst(4, 3, &[(0, 0), (1, 1), (2, 1), (2, 2), (3, 0), (3, 1)]);
        let want: BTreeSet<Vec<usize>> = realizable_sigma_b(&g, DEFAULT_MAX_SIZE).unwrap().into_iter().collect();
        assert!(want.contains(&vec![0, 2, 1]));
        let sol = solve_stick_a(&g).unwrap();
        assert_eq!(expressed(&sol.forests[0]), want);
    }

    #[test]
    fn disjoint_edges() {
        let g = inst(2, 2, &[(0, 0), (1, 1)]);
        let sol = solve_stick_a(&g).unwrap();
        let StickAOutcome::Realized { representation, .. } = sol.outcome else { panic!() };
        assert!(verify_representation(&g, &representation).unwrap().is_valid());
    }

    #[test]
    fn alternating_components_are_rejected() {
        let g = inst(4, 2, &[(0, 0), (2, 0), (1, 1), (3, 1)]);
        let sol = solve_stick_a(&g).unwrap();
        assert_eq!(sol.outcome, StickAOutcome::Alternation { positions: [0, 1, 2, 3] });
    }

    #[test]
    fn alternation_witnesses() {
        assert_eq!(find_alternation(&[0, 1, 1, 0, 2, 2, 0]), None);
        assert_eq!(find_alternation(&[0, 1, 0, 1]), Some([0, 1, 2, 3]));
        assert_eq!(find_alternation(&[0, 1, 0, 2, 1]), Some([0, 1, 2, 4]));
        assert_eq!(find_alternation(&[0, 1, 2, 1, 0, 2]), Some([1, 2, 3, 5]));
        let w = [0, 0, 1, 2, 2, 1, 0, 3, 0, 3];
        let [i, j, k, l] = find_alternation(&w).unwrap();
        assert!(i < j && j < k && k < l && w[i] == w[k] && w[j] == w[l] && w[i] != w[j]);
    }

    #[test]
    fn nesting_produces_valid_drawings() {
        // Component {a2, b2} sits between the sticks of component {a1, a3, b1}.
        let g = inst(3, 3, &[(0, 0), (2, 0), (1, 1), (2, 2)]);
        let sol = solve_stick_a(&g).unwrap();
        let StickAOutcome::Realized { representation, sigma_b } = sol.outcome else { panic!() };
        assert_eq!(sigma_b.len(), 3);
        assert!(verify_representation(&g, &representation).unwrap().is_valid());
    }

    #[test]
    fn rejection_names_the_vertical_stick() {
        // a2 sees b1 and b3 while b2 stays active for a3.
        let g = inst(3, 3, &[(0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 1)]);
        let want = realizable_sigma_b(&g, DEFAULT_MAX_SIZE).unwrap();
        let sol = solve_stick_a(&g).unwrap();
        match sol.outcome {
            StickAOutcome::Rejected { at } => {
                assert!(want.is_empty());
                assert_eq!(at, 1);
            }
            StickAOutcome::Realized { .. } => assert!(!want.is_empty()),
            _ => panic!(),
        }
    }

    #[test]
    fn contract_errors() {
        let g = Instance::with_counts(1, 1, [(0, 0)]).unwrap();
        assert_eq!(solve_stick_a(&g).err(), Some(Error::MissingOrder("sigma_A")));
    }

    fn arb_instance() -> impl Strategy<Value = Instance> {
        (1usize..=5, 1usize..=4)
            .prop_flat_map(|(na, nb)| {
                (Just(na), Just(nb), proptest::collection::vec(any::<bool>(), na * nb), Just((0..na).collect::<Vec<_>>()).prop_shuffle())
            })
            .prop_map(|(na, nb, bits, sa)| {
                let edges = (0..na * nb).filter(|&k| bits[k]).map(|k| (k / nb, k % nb));
                Instance::with_counts(na, nb, edges).unwrap().with_sigma_a(sa).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn verdict_matches_oracle(g in arb_instance()) {
            let want = oracle_stick_a(&g, DEFAULT_MAX_SIZE).unwrap().is_some();
            let sol = solve_stick_a(&g).unwrap();
            match sol.outcome {
                StickAOutcome::Realized { representation, sigma_b } => {
                    prop_assert!(want);
                    prop_assert!(verify_representation(&g, &representation).unwrap().is_valid());
                    let placed: Vec<usize> = representation.ground_order().iter().filter(|v| !v.is_a()).map(|v| v.index).collect();
                    prop_assert_eq!(placed, sigma_b);
                }
                _ => prop_assert!(!want),
            }
        }

        #[test]
        fn every_expressed_order_is_realizable(g in arb_instance()) {
            let comps = components(&g);
            let largest = comps.iter().max_by_key(|c| c.len()).unwrap();
            let (g, _, _) = g.induced(largest);
            if let (Ok(forest), _) = sweep_forest(&g).unwrap() {
                let want: BTreeSet<Vec<usize>> = realizable_sigma_b(&g, DEFAULT_MAX_SIZE).unwrap().into_iter().collect();
                prop_assert!(expressed(&forest).is_subset(&want));
            }
        }
    }
}

