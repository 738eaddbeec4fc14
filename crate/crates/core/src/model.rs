//! Instances and representations.
//!
//! Vertices are addressed by side and index into the instance's name lists;
//! names only matter at the serialization boundary.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::{Error, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Vertical sticks.
    A,
    /// Horizontal sticks.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub side: Side,
    pub index: usize,
}

impl Vertex {
    pub const fn a(index: usize) -> Self {
        Vertex { side: Side::A, index }
    }

    pub const fn b(index: usize) -> Self {
        Vertex { side: Side::B, index }
    }

    pub fn is_a(&self) -> bool {
        self.side == Side::A
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::A => write!(f, "a#{}", self.index),
            Side::B => write!(f, "b#{}", self.index),
        }
    }
}

/// Prescribed stick lengths, indexed like the vertex lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lengths {
    pub a: Vec<Rational>,
    pub b: Vec<Rational>,
}

impl Lengths {
    pub fn get(&self, v: Vertex) -> Rational {
        match v.side {
            Side::A => self.a[v.index],
            Side::B => self.b[v.index],
        }
    }
}

/// A bipartite graph with optional ground orders and fixed lengths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    a_names: Vec<String>,
    b_names: Vec<String>,
    nbrs_a: Vec<Vec<usize>>,
    nbrs_b: Vec<Vec<usize>>,
    sigma_a: Option<Vec<usize>>,
    sigma_b: Option<Vec<usize>>,
    lengths: Option<Lengths>,
}

fn check_permutation(order: &[usize], n: usize, what: &'static str) -> Result<(), Error> {
    if order.len() != n {
        return Err(Error::NotAPermutation(what));
    }
    let mut seen = vec![false; n];
    for &i in order {
        if i >= n || core::mem::replace(&mut seen[i], true) {
            return Err(Error::NotAPermutation(what));
        }
    }
    Ok(())
}

impl Instance {
    /// Builds an instance from names and `(a, b)` index pairs.
    pub fn new(
        a_names: Vec<String>,
        b_names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let mut names = BTreeSet::new();
        for name in a_names.iter().chain(&b_names) {
            if !names.insert(name.as_str()) {
                return Err(Error::DuplicateVertex(name.clone()));
            }
        }
        let mut nbrs_a = vec![Vec::new(); a_names.len()];
        let mut nbrs_b = vec![Vec::new(); b_names.len()];
        let mut seen = BTreeSet::new();
        for (a, b) in edges {
            if a >= a_names.len() || b >= b_names.len() {
                return Err(Error::EdgeOutOfRange(a, b));
            }
            if !seen.insert((a, b)) {
                return Err(Error::DuplicateEdge(a, b));
            }
            nbrs_a[a].push(b);
            nbrs_b[b].push(a);
        }
        nbrs_a.iter_mut().for_each(|n| n.sort_unstable());
        nbrs_b.iter_mut().for_each(|n| n.sort_unstable());
        Ok(Instance { a_names, b_names, nbrs_a, nbrs_b, sigma_a: None, sigma_b: None, lengths: None })
    }

    /// Instance with generated names `a1..`, `b1..`.
    pub fn with_counts(
        num_a: usize,
        num_b: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        use alloc::format;
        let a = (1..=num_a).map(|i| format!("a{i}")).collect();
        let b = (1..=num_b).map(|i| format!("b{i}")).collect();
        Self::new(a, b, edges)
    }

    pub fn with_sigma_a(mut self, order: Vec<usize>) -> Result<Self, Error> {
        check_permutation(&order, self.num_a(), "sigma_A")?;
        self.sigma_a = Some(order);
        Ok(self)
    }

    pub fn with_sigma_b(mut self, order: Vec<usize>) -> Result<Self, Error> {
        check_permutation(&order, self.num_b(), "sigma_B")?;
        self.sigma_b = Some(order);
        Ok(self)
    }

    pub fn with_lengths(mut self, lengths: Lengths) -> Result<Self, Error> {
        if lengths.a.len() != self.num_a() {
            return Err(Error::BadLength(Vertex::a(lengths.a.len().min(self.num_a()))));
        }
        if lengths.b.len() != self.num_b() {
            return Err(Error::BadLength(Vertex::b(lengths.b.len().min(self.num_b()))));
        }
        for v in self.vertices() {
            if lengths.get(v) <= Rational::zero() {
                return Err(Error::BadLength(v));
            }
        }
        self.lengths = Some(lengths);
        Ok(self)
    }

    pub fn without_orders(mut self) -> Self {
        self.sigma_a = None;
        self.sigma_b = None;
        self
    }

    pub fn without_lengths(mut self) -> Self {
        self.lengths = None;
        self
    }

    pub fn num_a(&self) -> usize {
        self.a_names.len()
    }

    pub fn num_b(&self) -> usize {
        self.b_names.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_a() + self.num_b()
    }

    pub fn num_edges(&self) -> usize {
        self.nbrs_a.iter().map(Vec::len).sum()
    }

    pub fn a_names(&self) -> &[String] {
        &self.a_names
    }

    pub fn b_names(&self) -> &[String] {
        &self.b_names
    }

    pub fn name(&self, v: Vertex) -> &str {
        match v.side {
            Side::A => &self.a_names[v.index],
            Side::B => &self.b_names[v.index],
        }
    }

    pub fn find(&self, name: &str) -> Option<Vertex> {
        if let Some(i) = self.a_names.iter().position(|n| n == name) {
            return Some(Vertex::a(i));
        }
        self.b_names.iter().position(|n| n == name).map(Vertex::b)
    }

    /// Neighbors of a vertical stick, sorted by `B` index.
    pub fn nbrs_of_a(&self, a: usize) -> &[usize] {
        &self.nbrs_a[a]
    }

    /// Neighbors of a horizontal stick, sorted by `A` index.
    pub fn nbrs_of_b(&self, b: usize) -> &[usize] {
        &self.nbrs_b[b]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v.side {
            Side::A => self.nbrs_a[v.index].len(),
            Side::B => self.nbrs_b[v.index].len(),
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.nbrs_a[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbrs_a.iter().enumerate().flat_map(|(a, n)| n.iter().map(move |&b| (a, b)))
    }

    /// All vertices, `A` before `B`.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        let (na, nb) = (self.num_a(), self.num_b());
        (0..na).map(Vertex::a).chain((0..nb).map(Vertex::b))
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(move |&v| self.degree(v) == 0)
    }

    pub fn sigma_a(&self) -> Option<&[usize]> {
        self.sigma_a.as_deref()
    }

    pub fn sigma_b(&self) -> Option<&[usize]> {
        self.sigma_b.as_deref()
    }

    pub fn lengths(&self) -> Option<&Lengths> {
        self.lengths.as_ref()
    }

    /// The subgraph induced by `keep`, with orders and lengths restricted.
    /// Returns the instance and, per side, the original index of each kept vertex.
    pub fn induced(&self, keep: &[Vertex]) -> (Instance, Vec<usize>, Vec<usize>) {
        let mut a_map = vec![usize::MAX; self.num_a()];
        let mut b_map = vec![usize::MAX; self.num_b()];
        let mut a_orig = Vec::new();
        let mut b_orig = Vec::new();
        let mut sorted: Vec<Vertex> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for v in sorted {
            match v.side {
                Side::A => {
                    a_map[v.index] = a_orig.len();
                    a_orig.push(v.index);
                }
                Side::B => {
                    b_map[v.index] = b_orig.len();
                    b_orig.push(v.index);
                }
            }
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .filter(|&(a, b)| a_map[a] != usize::MAX && b_map[b] != usize::MAX)
            .map(|(a, b)| (a_map[a], b_map[b]))
            .collect();
        let restrict = |order: &[usize], map: &[usize]| -> Vec<usize> {
            order.iter().filter(|&&i| map[i] != usize::MAX).map(|&i| map[i]).collect()
        };
        let inst = Instance {
            a_names: a_orig.iter().map(|&i| self.a_names[i].clone()).collect(),
            b_names: b_orig.iter().map(|&i| self.b_names[i].clone()).collect(),
            nbrs_a: Vec::new(),
            nbrs_b: Vec::new(),
            sigma_a: self.sigma_a.as_ref().map(|o| restrict(o, &a_map)),
            sigma_b: self.sigma_b.as_ref().map(|o| restrict(o, &b_map)),
            lengths: self.lengths.as_ref().map(|l| Lengths {
                a: a_orig.iter().map(|&i| l.a[i]).collect(),
                b: b_orig.iter().map(|&i| l.b[i]).collect(),
            }),
        };
        let mut nbrs_a = vec![Vec::new(); a_orig.len()];
        let mut nbrs_b = vec![Vec::new(); b_orig.len()];
        for (a, b) in edges {
            nbrs_a[a].push(b);
            nbrs_b[b].push(a);
        }
        nbrs_a.iter_mut().for_each(|n| n.sort_unstable());
        nbrs_b.iter_mut().for_each(|n| n.sort_unstable());
        (Instance { nbrs_a, nbrs_b, ..inst }, a_orig, b_orig)
    }
}

/// Foot position and length of every stick.
///
/// The foot of a stick is the point `(p, -p)` on the ground line; `p` grows
/// left to right. A vertical stick rises from its foot, a horizontal stick
/// extends rightwards from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub foot_a: Vec<Rational>,
    pub len_a: Vec<Rational>,
    pub foot_b: Vec<Rational>,
    pub len_b: Vec<Rational>,
}

impl Representation {
    pub fn zeroed(num_a: usize, num_b: usize) -> Self {
        Representation {
            foot_a: vec![Rational::zero(); num_a],
            len_a: vec![Rational::zero(); num_a],
            foot_b: vec![Rational::zero(); num_b],
            len_b: vec![Rational::zero(); num_b],
        }
    }

    pub fn foot(&self, v: Vertex) -> Rational {
        match v.side {
            Side::A => self.foot_a[v.index],
            Side::B => self.foot_b[v.index],
        }
    }

    pub fn length(&self, v: Vertex) -> Rational {
        match v.side {
            Side::A => self.len_a[v.index],
            Side::B => self.len_b[v.index],
        }
    }

    pub fn set(&mut self, v: Vertex, foot: Rational, length: Rational) {
        match v.side {
            Side::A => {
                self.foot_a[v.index] = foot;
                self.len_a[v.index] = length;
            }
            Side::B => {
                self.foot_b[v.index] = foot;
                self.len_b[v.index] = length;
            }
        }
    }

    /// Vertices sorted by foot position; ties broken by vertex id.
    pub fn ground_order(&self) -> Vec<Vertex> {
        let mut all: Vec<Vertex> = (0..self.foot_a.len())
            .map(Vertex::a)
            .chain((0..self.foot_b.len()).map(Vertex::b))
            .collect();
        all.sort_by(|&u, &v| self.foot(u).cmp(&self.foot(v)).then(u.cmp(&v)));
        all
    }

    /// Shifts every foot by `delta`.
    pub fn translate(&mut self, delta: Rational) {
        self.foot_a.iter_mut().chain(self.foot_b.iter_mut()).for_each(|p| *p += delta);
    }

    /// Bounding-box width and height of the drawing.
    ///
    /// Foot `p` sits at `(p, -p)`; verticals add `length` upwards and
    /// horizontals add it rightwards. Returns `None` when there are no sticks.
    pub fn bounding_box(&self) -> Option<(Rational, Rational)> {
        let mut xs: Option<(Rational, Rational)> = None;
        let mut ys: Option<(Rational, Rational)> = None;
        let grow = |acc: &mut Option<(Rational, Rational)>, lo: Rational, hi: Rational| {
            *acc = Some(match *acc {
                None => (lo, hi),
                Some((l, h)) => (l.min(lo), h.max(hi)),
            });
        };
        for (p, l) in self.foot_a.iter().zip(&self.len_a) {
            grow(&mut xs, *p, *p);
            grow(&mut ys, -*p, -*p + *l);
        }
        for (p, l) in self.foot_b.iter().zip(&self.len_b) {
            grow(&mut xs, *p, *p + *l);
            grow(&mut ys, -*p, -*p);
        }
        Some((xs?.1 - xs?.0, ys?.1 - ys?.0))
    }

    /// The larger of bounding-box width and height.
    pub fn extent(&self) -> Option<Rational> {
        self.bounding_box().map(|(w, h)| w.max(h))
    }
}
