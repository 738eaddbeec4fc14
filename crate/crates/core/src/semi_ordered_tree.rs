//! Semi-ordered trees.
//!
//! Every internal node fixes the relative order of its *ordered* children and
//! leaves its *unordered* children free to be interleaved anywhere between
//! them. A permutation of the leaf labels is expressed by a tree if some way of
//! interleaving the unordered children at every node yields that permutation
//! as the pre-order leaf sequence. Equivalently, the leaves of every subtree
//! form a contiguous block and the blocks of ordered siblings appear in their
//! fixed order; [`SemiOrderedForest::expresses`] checks exactly that.
//!
//! Nodes live in an arena addressed by [`NodeId`]; removed nodes are recycled.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::Error;

pub type NodeId = usize;

/// Leaf-count bound for [`SemiOrderedForest::enumerate_expressed`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiOrderedNode {
    pub ordered_children: Vec<NodeId>,
    pub unordered_children: Vec<NodeId>,
    /// Set exactly on leaves.
    pub leaf_label: Option<usize>,
    pub dead: bool,
    pub parent: Option<NodeId>,
}

impl SemiOrderedNode {
    pub fn is_leaf(&self) -> bool {
        self.leaf_label.is_some()
    }

    pub fn num_children(&self) -> usize {
        self.ordered_children.len() + self.unordered_children.len()
    }

    pub fn children(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.ordered_children.iter().chain(&self.unordered_children).copied()
    }
}

/// An ordered tree obtained by fixing every interleaving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderedTree {
    Leaf(usize),
    Node(Vec<OrderedTree>),
}

impl OrderedTree {
    /// Pre-order leaf sequence.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            match t {
                OrderedTree::Leaf(l) => out.push(*l),
                OrderedTree::Node(ch) => stack.extend(ch.iter().rev()),
            }
        }
        out
    }
}

/// A sequence of semi-ordered trees over disjoint label sets.
///
/// The forest expresses the concatenations of permutations expressed by its
/// trees, in root order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SemiOrderedForest {
    nodes: Vec<SemiOrderedNode>,
    free: Vec<NodeId>,
    pub roots: Vec<NodeId>,
}

impl SemiOrderedForest {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node(&self, id: NodeId) -> &SemiOrderedNode {
        &self.nodes[id]
    }

    pub fn node_mut(&mut self, id: NodeId) -> &mut SemiOrderedNode {
        &mut self.nodes[id]
    }

    /// Number of nodes currently allocated, reachable or not.
    pub fn num_nodes(&self) -> usize {
        self.nodes.len() - self.free.len()
    }

    fn alloc(&mut self, node: SemiOrderedNode) -> NodeId {
        match self.free.pop() {
            Some(id) => {
                self.nodes[id] = node;
                id
            }
            None => {
                self.nodes.push(node);
                self.nodes.len() - 1
            }
        }
    }

    pub fn add_leaf(&mut self, label: usize) -> NodeId {
        self.alloc(SemiOrderedNode {
            ordered_children: Vec::new(),
            unordered_children: Vec::new(),
            leaf_label: Some(label),
            dead: false,
            parent: None,
        })
    }

    /// New internal node adopting the given children.
    pub fn add_internal(&mut self, ordered: Vec<NodeId>, unordered: Vec<NodeId>) -> NodeId {
        let id = self.alloc(SemiOrderedNode {
            ordered_children: ordered,
            unordered_children: unordered,
            leaf_label: None,
            dead: false,
            parent: None,
        });
        self.adopt_children(id);
        id
    }

    /// Points the parent links of `id`'s children at `id`.
    pub fn adopt_children(&mut self, id: NodeId) {
        let children: Vec<NodeId> = self.nodes[id].children().collect();
        for c in children {
            self.nodes[c].parent = Some(id);
        }
    }

    /// Returns `id` to the free list without touching its children.
    pub fn release(&mut self, id: NodeId) {
        debug_assert!(!self.free.contains(&id));
        self.free.push(id);
    }

    /// Rewrites every leaf label through `f`.
    pub fn map_labels(&mut self, f: impl Fn(usize) -> usize) {
        for n in &mut self.nodes {
            if let Some(l) = n.leaf_label.as_mut() {
                *l = f(*l);
            }
        }
    }

    /// Labels in the subtree of `id`, in canonical pre-order.
    pub fn leaves(&self, id: NodeId) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(v) = stack.pop() {
            let n = &self.nodes[v];
            if let Some(l) = n.leaf_label {
                out.push(l);
            }
            stack.extend(n.children().collect::<Vec<_>>().into_iter().rev());
        }
        out
    }

    /// Nodes of the subtree of `id` with every node before its descendants.
    pub fn preorder(&self, id: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![id];
        while let Some(v) = stack.pop() {
            out.push(v);
            let n = &self.nodes[v];
            stack.extend(n.children().collect::<Vec<_>>().into_iter().rev());
        }
        out
    }

    /// Pre-order leaf sequence with unordered children placed after the
    /// ordered ones, in insertion order.
    pub fn canonical_permutation(&self, id: NodeId) -> Vec<usize> {
        self.leaves(id)
    }

    /// Canonical permutations of all trees, concatenated.
    pub fn canonical_forest_permutation(&self) -> Vec<usize> {
        self.roots.iter().flat_map(|&r| self.leaves(r)).collect()
    }

    /// Fixes the child order of every node. `choices` maps a node to the full
    /// sequence of its children; nodes without an entry use the canonical
    /// order. A choice must list every child once and keep the ordered
    /// children in their fixed order.
    pub fn obtain_ordered(
        &self,
        id: NodeId,
        choices: &BTreeMap<NodeId, Vec<NodeId>>,
    ) -> Result<OrderedTree, Error> {
        let n = &self.nodes[id];
        if let Some(l) = n.leaf_label {
            return Ok(OrderedTree::Leaf(l));
        }
        let order: Vec<NodeId> = match choices.get(&id) {
            None => n.children().collect(),
            Some(order) => {
                let mut expected: Vec<NodeId> = n.children().collect();
                let mut given = order.clone();
                expected.sort_unstable();
                given.sort_unstable();
                let fixed: Vec<NodeId> =
                    order.iter().copied().filter(|c| n.ordered_children.contains(c)).collect();
                if expected != given || fixed != n.ordered_children {
                    return Err(Error::InvalidChoice(id));
                }
                order.clone()
            }
        };
        let children =
            order.into_iter().map(|c| self.obtain_ordered(c, choices)).collect::<Result<_, _>>()?;
        Ok(OrderedTree::Node(children))
    }

    /// Whether the tree rooted at `id` expresses `pi`.
    pub fn expresses(&self, id: NodeId, pi: &[usize]) -> Result<bool, Error> {
        let labels = self.leaves(id);
        let max = labels.iter().chain(pi).copied().max().map_or(0, |m| m + 1);
        let mut pos = vec![usize::MAX; max];
        for (i, &l) in pi.iter().enumerate() {
            if pos[l] != usize::MAX {
                return Err(Error::LabelMismatch);
            }
            pos[l] = i;
        }
        if labels.len() != pi.len() || labels.iter().any(|&l| pos[l] == usize::MAX) {
            return Err(Error::LabelMismatch);
        }
        Ok(self.block(id, &pos).is_some())
    }

    /// Span `(first, count)` of the subtree of `id` in the permutation given
    /// by `pos`, or `None` if some block inside it is broken.
    fn block(&self, id: NodeId, pos: &[usize]) -> Option<(usize, usize)> {
        let n = &self.nodes[id];
        if let Some(l) = n.leaf_label {
            return Some((pos[l], 1));
        }
        let (mut lo, mut hi, mut count) = (usize::MAX, 0, 0);
        let mut last_ordered = None;
        for (k, c) in n.children().enumerate() {
            let (first, len) = self.block(c, pos)?;
            if k < n.ordered_children.len() {
                if last_ordered.is_some_and(|p| p > first) {
                    return None;
                }
                last_ordered = Some(first);
            }
            lo = lo.min(first);
            hi = hi.max(first + len);
            count += len;
        }
        (hi - lo == count).then_some((lo, count))
    }

    /// Every permutation the tree rooted at `id` expresses, in no particular
    /// order. Fails when the tree has more than `bound` leaves.
    pub fn enumerate_expressed(&self, id: NodeId, bound: usize) -> Result<Vec<Vec<usize>>, Error> {
        let size = self.leaves(id).len();
        if size > bound {
            return Err(Error::TooLarge { size, bound });
        }
        Ok(self.enumerate_node(id))
    }

    /// Every permutation the forest expresses.
    pub fn enumerate_forest(&self, bound: usize) -> Result<Vec<Vec<usize>>, Error> {
        let size: usize = self.roots.iter().map(|&r| self.leaves(r).len()).sum();
        if size > bound {
            return Err(Error::TooLarge { size, bound });
        }
        let mut acc = vec![Vec::new()];
        for &r in &self.roots {
            acc = concat_product(&acc, &self.enumerate_node(r));
        }
        Ok(acc)
    }

    fn enumerate_node(&self, id: NodeId) -> Vec<Vec<usize>> {
        let n = &self.nodes[id];
        if let Some(l) = n.leaf_label {
            return vec![vec![l]];
        }
        let per_child: BTreeMap<NodeId, Vec<Vec<usize>>> =
            n.children().map(|c| (c, self.enumerate_node(c))).collect();
        let mut out = Vec::new();
        for arrangement in interleavings(&n.ordered_children, &n.unordered_children) {
            let mut acc = vec![Vec::new()];
            for c in arrangement {
                acc = concat_product(&acc, &per_child[&c]);
            }
            out.extend(acc);
        }
        out
    }

    /// Merges every internal node in the subtree of `id` that has a single
    /// child and no leaf children into its parent. Returns the (possibly new)
    /// subtree root.
    pub fn normalize(&mut self, id: NodeId) -> NodeId {
        let children: Vec<NodeId> = self.nodes[id].children().collect();
        for c in children {
            let merged = self.normalize(c);
            if merged != c {
                replace_in(&mut self.nodes[id], c, merged);
                self.nodes[merged].parent = Some(id);
            }
        }
        self.contract(id)
    }

    /// If `id` is internal with exactly one child and that child is not a
    /// leaf, frees `id` and returns the child; otherwise returns `id`.
    pub fn contract(&mut self, id: NodeId) -> NodeId {
        let n = &self.nodes[id];
        if n.is_leaf() || n.num_children() != 1 {
            return id;
        }
        let child = n.children().next().unwrap();
        if self.nodes[child].is_leaf() {
            return id;
        }
        self.nodes[child].parent = n.parent;
        self.release(id);
        child
    }

    /// Renders the subtree of `id`, e.g. `(ord: [x, (ord: [y, z])], unord: {w})`.
    pub fn format_tree(&self, id: NodeId, name: &dyn Fn(usize) -> String) -> String {
        let mut out = String::new();
        self.write_node(id, name, &mut out);
        out
    }

    fn write_node(&self, id: NodeId, name: &dyn Fn(usize) -> String, out: &mut String) {
        let n = &self.nodes[id];
        if let Some(l) = n.leaf_label {
            out.push_str(&name(l));
            return;
        }
        out.push('(');
        let mut sep = "";
        for (key, open, close, list) in [
            ("ord", '[', ']', &n.ordered_children),
            ("unord", '{', '}', &n.unordered_children),
        ] {
            if list.is_empty() {
                continue;
            }
            let _ = write!(out, "{sep}{key}: {open}");
            for (k, &c) in list.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                self.write_node(c, name, out);
            }
            out.push(close);
            sep = ", ";
        }
        out.push(')');
    }

    /// Renders all trees separated by ` | `.
    pub fn format_forest(&self, name: &dyn Fn(usize) -> String) -> String {
        let parts: Vec<String> = self.roots.iter().map(|&r| self.format_tree(r, name)).collect();
        parts.join(" | ")
    }

    /// Parses the text form produced by [`format_tree`](Self::format_tree)
    /// and appends the tree as a new root. A bare name is a single leaf.
    pub fn parse_tree(
        &mut self,
        text: &str,
        label: &mut dyn FnMut(&str) -> Option<usize>,
    ) -> Result<NodeId, Error> {
        let mut p = Parser { s: text.as_bytes(), i: 0 };
        let root = p.node(self, label)?;
        p.skip_ws();
        if p.i != p.s.len() {
            return Err(Error::Parse(format_err("trailing input", p.i)));
        }
        self.roots.push(root);
        Ok(root)
    }
}

fn format_err(what: &str, at: usize) -> String {
    let mut s = what.to_string();
    let _ = write!(s, " at byte {at}");
    s
}

fn replace_in(n: &mut SemiOrderedNode, old: NodeId, new: NodeId) {
    for list in [&mut n.ordered_children, &mut n.unordered_children] {
        if let Some(slot) = list.iter_mut().find(|c| **c == old) {
            *slot = new;
        }
    }
}

fn concat_product(left: &[Vec<usize>], right: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for l in left {
        for r in right {
            let mut v = l.clone();
            v.extend_from_slice(r);
            out.push(v);
        }
    }
    out
}

/// All child sequences that keep `ordered` in order and place every element
/// of `unordered` somewhere.
fn interleavings(ordered: &[NodeId], unordered: &[NodeId]) -> Vec<Vec<NodeId>> {
    let mut out = vec![ordered.to_vec()];
    for &u in unordered {
        let mut next = Vec::new();
        for seq in &out {
            for slot in 0..=seq.len() {
                let mut s = seq.clone();
                s.insert(slot, u);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

struct Parser<'s> {
    s: &'s [u8],
    i: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            let mut msg = String::from("expected `");
            msg.push(c as char);
            msg.push('`');
            Err(Error::Parse(format_err(&msg, self.i)))
        }
    }

    fn ident(&mut self) -> Result<&str, Error> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len()
            && (self.s[self.i].is_ascii_alphanumeric() || b"_#.-".contains(&self.s[self.i]))
        {
            self.i += 1;
        }
        if start == self.i {
            return Err(Error::Parse(format_err("expected a name", start)));
        }
        core::str::from_utf8(&self.s[start..self.i]).map_err(|_| Error::Parse(format_err("bad utf-8", start)))
    }

    fn node(
        &mut self,
        forest: &mut SemiOrderedForest,
        label: &mut dyn FnMut(&str) -> Option<usize>,
    ) -> Result<NodeId, Error> {
        if self.peek() != Some(b'(') {
            let name = self.ident()?;
            let l = label(name).ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
            return Ok(forest.add_leaf(l));
        }
        self.i += 1;
        let (mut ordered, mut unordered) = (Vec::new(), Vec::new());
        loop {
            let key = self.ident()?.to_string();
            self.expect(b':')?;
            let (list, close) = match key.as_str() {
                "ord" if ordered.is_empty() => {
                    self.expect(b'[')?;
                    (&mut ordered, b']')
                }
                "unord" if unordered.is_empty() => {
                    self.expect(b'{')?;
                    (&mut unordered, b'}')
                }
                _ => return Err(Error::Parse(format_err("expected `ord` or `unord`", self.i))),
            };
            if self.peek() != Some(close) {
                loop {
                    list.push(self.node(forest, label)?);
                    if self.peek() == Some(b',') {
                        self.i += 1;
                    } else {
                        break;
                    }
                }
            }
            self.expect(close)?;
            match self.peek() {
                Some(b',') => self.i += 1,
                _ => break,
            }
        }
        self.expect(b')')?;
        if ordered.is_empty() && unordered.is_empty() {
            return Err(Error::Parse(format_err("internal node without children", self.i)));
        }
        Ok(forest.add_internal(ordered, unordered))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::format;
    use proptest::prelude::*;

    const NAMES: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];

    fn parse(text: &str) -> (SemiOrderedForest, NodeId) {
        let mut f = SemiOrderedForest::new();
        let root = f.parse_tree(text, &mut |n| NAMES.iter().position(|m| *m == n)).unwrap();
        (f, root)
    }

    fn name(l: usize) -> String {
        NAMES[l].to_string()
    }

    fn word(pi: &[usize]) -> String {
        pi.iter().map(|&l| NAMES[l]).collect()
    }

    fn all_permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in 0..items.len() {
            let mut rest = items.to_vec();
            let head = rest.remove(k);
            for mut tail in all_permutations(&rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }

    /// Brute force over every obtainable ordered tree.
    fn obtainable(f: &SemiOrderedForest, id: NodeId) -> BTreeSet<Vec<usize>> {
        let mut choice_sets: Vec<(NodeId, Vec<Vec<NodeId>>)> = Vec::new();
        for v in f.preorder(id) {
            let n = f.node(v);
            if !n.is_leaf() {
                let all: Vec<NodeId> = n.children().collect();
                let valid = all_permutations(&all)
                    .into_iter()
                    .filter(|p| {
                        let fixed: Vec<NodeId> =
                            p.iter().copied().filter(|c| n.ordered_children.contains(c)).collect();
                        fixed == n.ordered_children
                    })
                    .collect();
                choice_sets.push((v, valid));
            }
        }
        let mut out = BTreeSet::new();
        let mut idx = vec![0; choice_sets.len()];
        loop {
            let choices: BTreeMap<NodeId, Vec<NodeId>> =
                choice_sets.iter().zip(&idx).map(|((v, opts), &k)| (*v, opts[k].clone())).collect();
            out.insert(f.obtain_ordered(id, &choices).unwrap().leaves());
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < choice_sets[k].1.len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    #[test]
    fn unordered_leaves_permute_freely() {
        let (f, r) = parse("(unord: {x, y})");
        assert!(f.expresses(r, &[0, 1]).unwrap());
        assert!(f.expresses(r, &[1, 0]).unwrap());
        assert_eq!(f.enumerate_expressed(r, 8).unwrap().len(), 2);
    }

    #[test]
    fn ordered_children_are_fixed() {
        let (f, r) = parse("(ord: [x, y])");
        assert!(f.expresses(r, &[0, 1]).unwrap());
        assert!(!f.expresses(r, &[1, 0]).unwrap());
    }

    #[test]
    fn interleaving_ruins_a_block() {
        // Two ordered subtrees and a free leaf; no order may put a leaf of
        // one subtree between leaves of the other.
        let (f, r) = parse("(ord: [(unord: {x, y}), (unord: {z, w})], unord: {u})");
        assert!(f.expresses(r, &[1, 0, 4, 3, 2]).unwrap());
        assert!(!f.expresses(r, &[0, 2, 1, 3, 4]).unwrap());
        assert!(!f.expresses(r, &[2, 3, 0, 1, 4]).unwrap());
        assert!(!f.expresses(r, &[0, 4, 1, 2, 3]).unwrap());
    }

    #[test]
    fn obtaining_with_a_choice() {
        let (f, r) = parse("(ord: [(unord: {x, y}), (unord: {z, w})], unord: {u})");
        let root = f.node(r);
        let (left, right, u) = (root.ordered_children[0], root.ordered_children[1], root.unordered_children[0]);
        let choices = BTreeMap::from([(r, vec![left, u, right]), (left, vec![f.node(left).unordered_children[1], f.node(left).unordered_children[0]])]);
        let t = f.obtain_ordered(r, &choices).unwrap();
        assert_eq!(word(&t.leaves()), "yxuzw");
        assert!(f.expresses(r, &t.leaves()).unwrap());

        let bad = BTreeMap::from([(r, vec![right, u, left])]);
        assert_eq!(f.obtain_ordered(r, &bad), Err(Error::InvalidChoice(r)));
        let missing = BTreeMap::from([(r, vec![left, right])]);
        assert_eq!(f.obtain_ordered(r, &missing), Err(Error::InvalidChoice(r)));
    }

    #[test]
    fn obtaining_without_unordered_children_keeps_the_skeleton() {
        let (f, r) = parse("(ord: [x, (ord: [y, z])])");
        let t = f.obtain_ordered(r, &BTreeMap::new()).unwrap();
        assert_eq!(
            t,
            OrderedTree::Node(vec![
                OrderedTree::Leaf(0),
                OrderedTree::Node(vec![OrderedTree::Leaf(1), OrderedTree::Leaf(2)])
            ])
        );
    }

    #[test]
    fn three_slots_for_a_free_leaf() {
        let (f, r) = parse("(ord: [x, y], unord: {z})");
        let got: BTreeSet<String> = f.enumerate_expressed(r, 8).unwrap().iter().map(|p| word(p)).collect();
        let want: BTreeSet<String> = ["zxy", "xzy", "xyz"].iter().map(|s| s.to_string()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn single_leaf() {
        let (f, r) = parse("x");
        assert_eq!(f.enumerate_expressed(r, 8).unwrap(), vec![vec![0]]);
        assert_eq!(f.canonical_permutation(r), vec![0]);
    }

    #[test]
    fn label_mismatch_and_bound() {
        let (f, r) = parse("(unord: {x, y, z})");
        assert_eq!(f.expresses(r, &[0, 1]), Err(Error::LabelMismatch));
        assert_eq!(f.expresses(r, &[0, 1, 3]), Err(Error::LabelMismatch));
        assert_eq!(f.expresses(r, &[0, 0, 1]), Err(Error::LabelMismatch));
        assert_eq!(f.enumerate_expressed(r, 2), Err(Error::TooLarge { size: 3, bound: 2 }));
    }

    #[test]
    fn text_form_round_trips() {
        let text = "(ord: [x, (ord: [y, z])], unord: {w})";
        let (f, r) = parse(text);
        assert_eq!(f.format_tree(r, &name), text);
        let mut g = SemiOrderedForest::new();
        assert!(matches!(g.parse_tree("(ord: [x,", &mut |_| Some(0)), Err(Error::Parse(_))));
        assert!(matches!(g.parse_tree("(ord: [q])", &mut |_| None), Err(Error::UnknownVertex(_))));
        assert!(matches!(g.parse_tree("x y", &mut |_| Some(0)), Err(Error::Parse(_))));
    }

    #[test]
    fn normalize_merges_single_child_chains() {
        let (mut f, r) = parse("(ord: [(ord: [(ord: [x, y], unord: {z})])], unord: {w})");
        let before: BTreeSet<_> = f.enumerate_expressed(r, 8).unwrap().into_iter().collect();
        let r2 = f.normalize(r);
        assert_eq!(f.format_tree(r2, &name), "(ord: [(ord: [x, y], unord: {z})], unord: {w})");
        let after: BTreeSet<_> = f.enumerate_expressed(r2, 8).unwrap().into_iter().collect();
        assert_eq!(before, after);

        let (mut f, r) = parse("(ord: [(ord: [x, y])])");
        let r2 = f.normalize(r);
        assert_eq!(f.format_tree(r2, &name), "(ord: [x, y])");
        assert_eq!(f.node(r2).parent, None);
        assert_eq!(f.num_nodes(), 3);
    }

    #[test]
    fn forest_concatenates_trees() {
        let mut f = SemiOrderedForest::new();
        let mut lookup = |n: &str| NAMES.iter().position(|m| *m == n);
        f.parse_tree("(unord: {x, y})", &mut lookup).unwrap();
        f.parse_tree("z", &mut lookup).unwrap();
        let all: BTreeSet<String> = f.enumerate_forest(8).unwrap().iter().map(|p| word(p)).collect();
        assert_eq!(all, ["xyz", "yxz"].iter().map(|s| s.to_string()).collect());
        assert_eq!(f.format_forest(&name), "(unord: {x, y}) | z");
    }

    fn arb_tree(leaves: usize) -> impl Strategy<Value = String> {
        // Random nesting over the first `leaves` names.
        let leaf = (0..leaves).prop_map(|l| NAMES[l].to_string()).boxed();
        leaf.prop_recursive(3, 12, 4, |inner| {
            (prop::collection::vec(inner.clone(), 0..3), prop::collection::vec(inner, 0..3)).prop_map(
                |(o, u)| {
                    let mut parts = Vec::new();
                    if !o.is_empty() {
                        parts.push(format!("ord: [{}]", o.join(", ")));
                    }
                    if !u.is_empty() {
                        parts.push(format!("unord: {{{}}}", u.join(", ")));
                    }
                    if parts.is_empty() {
                        "x".to_string()
                    } else {
                        format!("({})", parts.join(", "))
                    }
                },
            )
        })
    }

    /// Relabels leaves in pre-order so that labels are distinct.
    fn distinct(text: &str) -> Option<(SemiOrderedForest, NodeId)> {
        let mut counter = 0usize;
        let mut f = SemiOrderedForest::new();
        let r = f
            .parse_tree(text, &mut |_| {
                counter += 1;
                Some(counter - 1)
            })
            .ok()?;
        (counter <= 6).then_some((f, r))
    }

    proptest! {
        #[test]
        fn canonical_permutation_is_expressed(text in arb_tree(6)) {
            if let Some((f, r)) = distinct(&text) {
                prop_assert!(f.expresses(r, &f.canonical_permutation(r)).unwrap());
            }
        }

        #[test]
        fn enumeration_matches_exhaustive_checks(text in arb_tree(6)) {
            if let Some((f, r)) = distinct(&text) {
                let labels = f.leaves(r);
                let enumerated: BTreeSet<Vec<usize>> =
                    f.enumerate_expressed(r, 8).unwrap().into_iter().collect();
                let checked: BTreeSet<Vec<usize>> = all_permutations(&labels)
                    .into_iter()
                    .filter(|p| f.expresses(r, p).unwrap())
                    .collect();
                prop_assert_eq!(&enumerated, &checked);
                prop_assert_eq!(&enumerated, &obtainable(&f, r));
            }
        }

        #[test]
        fn normalization_preserves_the_expressed_set(text in arb_tree(6)) {
            if let Some((mut f, r)) = distinct(&text) {
                let before: BTreeSet<_> = f.enumerate_expressed(r, 8).unwrap().into_iter().collect();
                let r2 = f.normalize(r);
                let after: BTreeSet<_> = f.enumerate_expressed(r2, 8).unwrap().into_iter().collect();
                prop_assert_eq!(before, after);
            }
        }
    }
}
