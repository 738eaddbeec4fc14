//! Instance generators for the hardness constructions.
//!
//! Every generator returns the instance together with a witness
//! representation when a certificate (a partition, a satisfying assignment)
//! is supplied. Witnesses are laid out directly from the construction; no
//! solver is involved. All coordinates are exact.
//!
//! Coordinates below are foot positions `p` on the ground line. A smaller
//! `p` is further up and further left.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::model::{Instance, Lengths, Representation};
use crate::rational::{frac, int, Rational};
use crate::Error;

pub mod sat;

pub use sat::{gen_monotone3sat, Clause, ClauseGadget, MonotoneCnf, SatVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetParams {
    /// Length of the short sticks.
    pub epsilon: Rational,
    /// Slack of compressed paths.
    pub delta: Rational,
}

impl Default for GadgetParams {
    fn default() -> Self {
        let epsilon = frac(1, 64);
        GadgetParams { epsilon, delta: epsilon / int(8) }
    }
}

impl GadgetParams {
    fn check(&self) -> Result<(), Error> {
        if self.epsilon <= Rational::zero() || self.delta <= Rational::zero() {
            return Err(Error::InvalidInput(String::from("epsilon and delta must be positive")));
        }
        Ok(())
    }
}

/// A generated instance, with a witness when a certificate was supplied.
#[derive(Clone, Debug)]
pub struct GadgetInstance {
    pub instance: Instance,
    pub witness: Option<Representation>,
}

/// Collects named sticks with lengths, edges and witness feet.
#[derive(Default)]
pub(crate) struct Builder {
    a_names: Vec<String>,
    b_names: Vec<String>,
    len_a: Vec<Rational>,
    len_b: Vec<Rational>,
    foot_a: Vec<Rational>,
    foot_b: Vec<Rational>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    pub(crate) fn vertical(&mut self, name: String, len: Rational, foot: Rational) -> usize {
        self.a_names.push(name);
        self.len_a.push(len);
        self.foot_a.push(foot);
        self.a_names.len() - 1
    }

    pub(crate) fn horizontal(&mut self, name: String, len: Rational, foot: Rational) -> usize {
        self.b_names.push(name);
        self.len_b.push(len);
        self.foot_b.push(foot);
        self.b_names.len() - 1
    }

    pub(crate) fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }

    /// The instance with fixed lengths, and the collected feet as a
    /// representation.
    pub(crate) fn finish(self) -> Result<(Instance, Representation), Error> {
        let lengths = Lengths { a: self.len_a.clone(), b: self.len_b.clone() };
        let inst = Instance::new(self.a_names, self.b_names, self.edges)?.with_lengths(lengths)?;
        let rep = Representation { foot_a: self.foot_a, len_a: self.len_a, foot_b: self.foot_b, len_b: self.len_b };
        Ok((inst, rep))
    }
}

/// Foot heights of the compressed layout of a path with `2n` sticks, first
/// stick vertical, measured upwards from the first foot.
fn compressed_heights(n: usize, eps: Rational, delta: Rational) -> Vec<Rational> {
    let third = eps / int(3);
    let k = int(n as i128 - 2);
    let mut y = vec![Rational::zero(); 2 * n + 1];
    y[1] = Rational::zero();
    y[3] = third;
    for i in 2..n {
        let ii = int(i as i128);
        y[2 * i - 2] = ii * third + int(i as i128 - 2) * delta / k;
        y[2 * i + 1] = ii * third + int(i as i128 - 1) * delta / k;
    }
    y[2 * n - 2] = int(n as i128) * third + delta;
    y[2 * n] = int(n as i128 + 1) * third + delta;
    y
}

/// Adds a path of `2n` sticks of length `eps`, odd sticks vertical, in the
/// compressed layout with its first foot at `p0`. Returns the vertical and
/// horizontal indices in path order.
fn add_compressed_path(
    bld: &mut Builder,
    prefix: &str,
    n: usize,
    eps: Rational,
    delta: Rational,
    p0: Rational,
) -> (Vec<usize>, Vec<usize>) {
    let y = compressed_heights(n, eps, delta);
    add_path(bld, prefix, n, eps, |k| p0 - y[k])
}

/// Adds the sticks `1..=2n` of a path with feet given by `foot(k)`.
fn add_path(
    bld: &mut Builder,
    prefix: &str,
    n: usize,
    eps: Rational,
    foot: impl Fn(usize) -> Rational,
) -> (Vec<usize>, Vec<usize>) {
    let mut vs = Vec::with_capacity(n);
    let mut hs = Vec::with_capacity(n);
    for k in 1..=2 * n {
        if k % 2 == 1 {
            vs.push(bld.vertical(format!("{prefix}{k}"), eps, foot(k)));
        } else {
            hs.push(bld.horizontal(format!("{prefix}{k}"), eps, foot(k)));
        }
    }
    for (i, &v) in vs.iter().enumerate() {
        if i > 0 {
            bld.edge(v, hs[i - 1]);
        }
        bld.edge(v, hs[i]);
    }
    (vs, hs)
}

fn check_path_len(n: usize) -> Result<(), Error> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("an epsilon-path needs n >= 3, got {n}")));
    }
    Ok(())
}

/// The path `s1 - s2 - ... - s(2n)` of sticks of length `ε`, odd sticks
/// vertical. Lengths are fixed; no orders.
pub fn gen_epsilon_path(n: usize, params: &GadgetParams) -> Result<Instance, Error> {
    Ok(layout_compressed(n, params)?.0)
}

/// Stretched layout: every vertical touches the end of the preceding
/// horizontal, and the feet of the other adjacent pairs sit `η` apart with
/// `η = δ/(n-1)`. The extent is `nε - δ`; touching feet would reach `nε`
/// but feet must be distinct.
pub fn layout_stretched(n: usize, params: &GadgetParams) -> Result<(Instance, Representation), Error> {
    params.check()?;
    check_path_len(n)?;
    let eps = params.epsilon;
    let eta = params.delta / int(n as i128 - 1);
    if eta * int(2) >= eps {
        return Err(Error::InvalidInput(String::from("delta too large for a stretched path")));
    }
    let step = eps - eta;
    let mut bld = Builder::default();
    add_path(&mut bld, "s", n, eps, |k| {
        if k == 1 {
            return eta;
        }
        let j = int((k / 2) as i128 - 1);
        if k % 2 == 0 { j * step } else { j * step + eps }
    });
    bld.finish()
}

/// Compressed layout with extent `(n+2)/3·ε + δ`.
pub fn layout_compressed(n: usize, params: &GadgetParams) -> Result<(Instance, Representation), Error> {
    params.check()?;
    check_path_len(n)?;
    if params.delta * int(3) >= params.epsilon {
        return Err(Error::InvalidInput(String::from("delta must be below epsilon/3")));
    }
    let mut bld = Builder::default();
    add_compressed_path(&mut bld, "s", n, params.epsilon, params.delta, Rational::zero());
    bld.finish()
}

/// A multiset of `3m` integers strictly between `C/4` and `C/2` summing to
/// `mC`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreePartition {
    values: Vec<i128>,
    m: usize,
    c: i128,
}

impl ThreePartition {
    pub fn new(values: Vec<i128>) -> Result<Self, Error> {
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        if values.is_empty() || !values.len().is_multiple_of(3) {
            return bad(format!("need 3m numbers, got {}", values.len()));
        }
        let m = values.len() / 3;
        let total: i128 = values.iter().sum();
        if total % m as i128 != 0 {
            return bad(format!("sum {total} is not divisible by m = {m}"));
        }
        let c = total / m as i128;
        if let Some(s) = values.iter().find(|&&s| 4 * s <= c || 2 * s >= c) {
            return bad(format!("{s} is not strictly between C/4 and C/2 for C = {c}"));
        }
        Ok(ThreePartition { values, m, c })
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn target(&self) -> i128 {
        self.c
    }

    /// Checks that `triples` partitions the indices into groups summing to `C`.
    pub fn check_partition(&self, triples: &[[usize; 3]]) -> Result<(), Error> {
        let mut used = vec![false; self.values.len()];
        if triples.len() != self.m {
            return Err(Error::InvalidInput(format!("need {} triples, got {}", self.m, triples.len())));
        }
        for t in triples {
            for &i in t {
                if i >= used.len() || core::mem::replace(&mut used[i], true) {
                    return Err(Error::InvalidInput(format!("index {i} is out of range or repeated")));
                }
            }
            let sum: i128 = t.iter().map(|&i| self.values[i]).sum();
            if sum != self.c {
                return Err(Error::InvalidInput(format!("triple {t:?} sums to {sum}, not {}", self.c)));
            }
        }
        Ok(())
    }

    /// Triples used to lay out gadgets when no partition is given.
    fn placeholder(&self) -> Vec<[usize; 3]> {
        (0..self.m).map(|j| [3 * j, 3 * j + 1, 3 * j + 2]).collect()
    }
}

/// Frame with separators and one gadget per number, lengths fixed and no
/// orders. With a valid partition the witness stacks each triple of gadgets
/// in its own pocket.
///
/// Sticks: `w`, `x`, `y`, `z`, `o`, separators `p1..p(m+1)` and per number
/// `r_i`, `b_i`, `h_i`, `v_i`.
pub fn gen_3partition(
    tp: &ThreePartition,
    partition: Option<&[[usize; 3]]>,
    params: &GadgetParams,
) -> Result<GadgetInstance, Error> {
    params.check()?;
    if let Some(p) = partition {
        tp.check_partition(p)?;
    }
    let eps = params.epsilon;
    if eps >= frac(1, 4) {
        return Err(Error::InvalidInput(String::from("epsilon must be below 1/4")));
    }
    let m = tp.m as i128;
    let c = int(tp.c);
    let mc = int(m) * c;
    let long = mc + int(1) + eps * int(2);
    let gap = c + eps / int(m);
    let theta = eps / int(4 * m);
    let kappa = eps / int(8);

    let mut bld = Builder::default();
    let w = bld.horizontal("w".into(), eps, Rational::zero());
    let x = bld.vertical("x".into(), Rational::one(), eps / int(4));
    let y = bld.vertical("y".into(), long, eps / int(2));
    let z = bld.vertical("z".into(), long, eps * frac(3, 4));
    for a in [x, y, z] {
        bld.edge(a, w);
    }
    let sep_foot = |j: usize| eps / int(4) - int(1) - int(j as i128) * gap;
    let mut seps = Vec::new();
    for j in 0..=tp.m {
        let f = sep_foot(j);
        let p = bld.horizontal(format!("p{}", j + 1), eps / int(2) - f + eps / int(8), f);
        bld.edge(y, p);
        seps.push(p);
    }
    bld.edge(x, seps[0]);
    let o = bld.vertical("o".into(), c * int(2), sep_foot(tp.m) + eps / int(8));
    bld.edge(o, seps[tp.m]);

    let triples = partition.map_or_else(|| tp.placeholder(), <[_]>::to_vec);
    let mut r_foot = vec![Rational::zero(); tp.values.len()];
    for (j, t) in triples.iter().enumerate() {
        let mut p = sep_foot(j) - theta;
        for &i in t {
            r_foot[i] = p;
            p -= int(tp.values[i]);
        }
    }
    for (i, &s) in tp.values.iter().enumerate() {
        let p = r_foot[i];
        let r = bld.vertical(format!("r{}", i + 1), int(s), p);
        let b = bld.horizontal(format!("b{}", i + 1), mc + int(2), p - kappa * int(3));
        let h = bld.horizontal(format!("h{}", i + 1), eps, p - kappa * int(2));
        let v = bld.vertical(format!("v{}", i + 1), eps, p - kappa);
        for (a, bb) in [(r, b), (r, h), (v, h), (v, b), (y, b), (z, b)] {
            bld.edge(a, bb);
        }
    }
    let (instance, rep) = bld.finish()?;
    Ok(GadgetInstance { instance, witness: partition.map(|_| rep) })
}

/// Variant using only the lengths `ε`, `Cm` and `3Cm`. Requires `C/ε` and
/// every `s_i/ε` to be integers.
///
/// Each separator `p_j` has its own pair `y_j`, `z_j` tied by `e_j`; pairs are
/// joined by paths `c{j}_1..` of `2C/ε` sticks and every number becomes a path
/// `n{i}_1..` of `6s_i/ε - 4` sticks hanging from a long stick `b_i`.
pub fn gen_3partition_three_lengths(
    tp: &ThreePartition,
    partition: Option<&[[usize; 3]]>,
    params: &GadgetParams,
) -> Result<GadgetInstance, Error> {
    params.check()?;
    if let Some(p) = partition {
        tp.check_partition(p)?;
    }
    let (eps, delta) = (params.epsilon, params.delta);
    let per_eps = |v: i128| {
        let q = int(v) / eps;
        if q.is_integer() { Ok(*q.numer()) } else { Err(Error::InvalidInput(format!("epsilon does not divide {v}"))) }
    };
    let c_steps = per_eps(tp.c)?;
    for &s in &tp.values {
        per_eps(s)?;
    }
    if delta * int(3) >= eps || eps > frac(1, 4) {
        return Err(Error::InvalidInput(String::from("need delta < epsilon/3 and epsilon <= 1/4")));
    }
    let m = tp.m;
    let c = int(tp.c);
    let mc = int(m as i128) * c;
    let long = mc * int(3);
    // Consecutive gadgets in a pocket overlap by `ov`; the first one starts
    // `theta` above the lower separator and `sigma` is left at the top.
    let ov = eps * frac(15, 48);
    let theta = eps / int(96);
    let sigma = eps / int(96);
    let pocket = c + delta * int(3) - ov * int(2) + theta + sigma;
    if (c - pocket) * int(m as i128) <= eps / int(3) - theta {
        return Err(Error::InvalidInput(String::from("delta too large for the pocket layout")));
    }

    let mut bld = Builder::default();
    let y_foot = |j: usize| -int(j as i128) * pocket;
    let e_foot = |j: usize| y_foot(j) - eps / int(32);
    let sep_foot = |j: usize| y_foot(j) - mc;
    let mut ys = Vec::new();
    let mut zs = Vec::new();
    let mut es = Vec::new();
    for j in 0..=m {
        let e = bld.horizontal(format!("e{}", j + 1), eps, e_foot(j));
        let y = bld.vertical(format!("y{}", j + 1), long, y_foot(j));
        let z = bld.vertical(format!("z{}", j + 1), long, e_foot(j) + eps * frac(31, 32));
        bld.edge(y, e);
        bld.edge(z, e);
        ys.push(y);
        zs.push(z);
        es.push(e);
    }
    let mut seps = Vec::new();
    for j in 0..=m {
        let p = bld.horizontal(format!("p{}", j + 1), mc, sep_foot(j));
        bld.edge(ys[j], p);
        for k in j + 1..=m {
            bld.edge(ys[k], p);
            bld.edge(zs[k], p);
        }
        seps.push(p);
    }
    let o = bld.vertical("o".into(), long, sep_foot(m) + eps / int(128));
    bld.edge(o, seps[m]);

    // Connector j runs from just right of e_j up to just left of y_(j+1).
    let n_c = c_steps as usize;
    for j in 0..m {
        let start = e_foot(j) + eps / int(128);
        let end = e_foot(j + 1) + eps / int(64);
        let eta = (end - start + int(n_c as i128) * eps) / int(n_c as i128 - 1);
        let (vs, hs) = add_path(&mut bld, &format!("c{}_", j + 1), n_c, eps, |k| {
            let half = int((k / 2) as i128);
            if k % 2 == 1 { start - half * eps + half * eta } else { start - half * eps + (half - int(1)) * eta }
        });
        bld.edge(vs[0], es[j]);
        let last = *hs.last().unwrap();
        bld.edge(ys[j + 1], last);
        bld.edge(zs[j + 1], last);
    }

    let triples = partition.map_or_else(|| tp.placeholder(), <[_]>::to_vec);
    let mut first_foot = vec![Rational::zero(); tp.values.len()];
    for (j, t) in triples.iter().enumerate() {
        let mut p = sep_foot(j) - theta;
        for &i in t {
            first_foot[i] = p;
            p = p - int(tp.values[i]) - delta + ov;
        }
    }
    for (i, &s) in tp.values.iter().enumerate() {
        let p0 = first_foot[i];
        let n = (3 * per_eps(s)? - 2) as usize;
        let b = bld.horizontal(format!("b{}", i + 1), long, p0 - eps / int(3) + eps / int(96));
        let (vs, _) = add_compressed_path(&mut bld, &format!("n{}_", i + 1), n, eps, delta, p0);
        bld.edge(vs[0], b);
        for j in 0..=m {
            bld.edge(ys[j], b);
            bld.edge(zs[j], b);
        }
    }
    let (instance, rep) = bld.finish()?;
    Ok(GadgetInstance { instance, witness: partition.map(|_| rep) })
}
