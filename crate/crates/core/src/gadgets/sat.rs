//! Monotone 3-SAT: variable cages, clause stripes and their witness layout.
//!
//! Variables sit in a chain of cages running up-left from the clause column.
//! In cage `i` the long horizontal `g{i}` lies either above the isolated
//! `r{i}` (true) or below it (false), which moves the pair `y{i}`, `z{i}`
//! by about one unit. Clauses are stripes of height `4 + 2ε` between
//! horizontals `s{j}`; each literal owns a horizontal `o{j}_{i}` ending
//! between `y{i}` and `z{i}`, and the isolated vertical `u{j}` of length 2
//! fits into the stripe iff the clause is satisfied.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{Builder, GadgetInstance, GadgetParams};
use crate::fixed_length::{solve_fixed_with_order, FixedOutcome};
use crate::model::{Instance, Representation, Side, Vertex};
use crate::rational::{frac, int, Rational};
use crate::Error;

/// A clause over three distinct variables, all positive or all negative.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Clause {
    /// Zero-based variable indices.
    pub vars: [usize; 3],
    pub positive: bool,
}

/// A CNF formula whose clauses are monotone with exactly three literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneCnf {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl MonotoneCnf {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self, Error> {
        for (j, c) in clauses.iter().enumerate() {
            let [x, y, z] = c.vars;
            if x == y || y == z || x == z {
                return Err(Error::InvalidInput(format!("clause {} repeats a variable", j + 1)));
            }
            if c.vars.iter().any(|&v| v >= num_vars) {
                return Err(Error::InvalidInput(format!("clause {} uses an unknown variable", j + 1)));
            }
        }
        if num_vars == 0 {
            return Err(Error::InvalidInput(String::from("formula without variables")));
        }
        Ok(MonotoneCnf { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn clause_satisfied(c: &Clause, assignment: &[bool]) -> bool {
        c.vars.iter().any(|&v| assignment[v] == c.positive)
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars && self.clauses.iter().all(|c| Self::clause_satisfied(c, assignment))
    }
}

/// Which orders come with the generated instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SatVariant {
    /// `σ_A` only; `r{i}` and `u{j}` stay isolated.
    IsolatedAOrderOnly,
    /// Both `σ_A` and `σ_B`; isolated sticks as above.
    BothOrders,
    /// `σ_A` only; every isolated stick gets a short horizontal partner.
    NoIsolated,
}

struct Layout {
    inst: Instance,
    rep: Representation,
    /// A-index of the vertical of each clause, in input order.
    blues: Vec<usize>,
    satisfied: Vec<bool>,
}

/// Lays out the gadget for `assignment`. Blue sticks of unsatisfied clauses
/// are parked in the middle of their stripe, so only the order is usable.
fn layout(phi: &MonotoneCnf, assignment: &[bool], params: &GadgetParams, variant: SatVariant) -> Result<Layout, Error> {
    params.check()?;
    let e = params.epsilon;
    if e > frac(1, 8) {
        return Err(Error::InvalidInput(String::from("epsilon must be at most 1/8")));
    }
    if assignment.len() != phi.num_vars {
        return Err(Error::InvalidInput(String::from("assignment length differs from the variable count")));
    }
    let n = phi.num_vars;
    let one = int(1);
    let u = one + e / int(2);
    let cage = one + e * int(2);
    let step = cage - e / int(32);
    let isolated = variant != SatVariant::NoIsolated;

    // Stripes: positive clauses first, so a negative stripe never sits on
    // top of a positive one.
    let mut stripes: Vec<usize> = (0..phi.clauses.len()).filter(|&j| phi.clauses[j].positive).collect();
    stripes.extend((0..phi.clauses.len()).filter(|&j| !phi.clauses[j].positive));
    let m = stripes.len();
    let bnd = |c: usize| int(4 * c as i128) * u;

    let h_foot = |i: usize| -int(i as i128) * step;
    let g_foot = |i: usize, val: bool| {
        if val {
            h_foot(i) + e * frac(5, 32)
        } else {
            h_foot(i) + one + e * frac(13, 32)
        }
    };
    let mut ell = vec![Rational::zero(); n + 1];
    ell[1] = bnd(m) + int(2) - h_foot(1);
    for i in 2..=n {
        ell[i] = ell[i - 1] + int(2) + e * int(4);
    }
    let y_foot = |i: usize, val: bool| g_foot(i, val) + ell[i];
    let xq = y_foot(n, false) + e / int(4) + int(2);

    let mut bld = Builder::default();
    let mut s = Vec::new();
    for c in 0..=m {
        s.push(bld.horizontal(format!("s{c}"), xq - bnd(c), bnd(c)));
    }
    let q1 = bld.vertical("q1".into(), xq, xq);
    let q2 = bld.vertical("q2".into(), xq, xq + e / int(2));
    let kq = bld.horizontal("kq".into(), e, xq - e / int(4));
    bld.edge(q1, kq);
    bld.edge(q2, kq);
    for &b in &s {
        bld.edge(q1, b);
    }

    let mut h = vec![s[0]];
    let mut ys = Vec::new();
    let mut zs = Vec::new();
    for i in 1..=n {
        let val = assignment[i - 1];
        let hi = h_foot(i);
        let hv = bld.horizontal(format!("h{i}"), cage, hi);
        let v = bld.vertical(format!("v{i}"), cage, hi + cage);
        let a = bld.vertical(format!("a{i}"), e, h_foot(i - 1) + e / int(64));
        let r_foot = hi + one + e / int(4);
        let r = bld.vertical(format!("r{i}"), one, r_foot);
        let g = bld.horizontal(format!("g{i}"), ell[i], g_foot(i, val));
        let yf = y_foot(i, val);
        let y = bld.vertical(format!("y{i}"), ell[i], yf);
        let z = bld.vertical(format!("z{i}"), ell[i], yf + e / int(4));
        let k = bld.horizontal(format!("k{i}"), e, yf - e / int(4));
        for (aa, bb) in [(v, hv), (v, g), (v, h[i - 1]), (a, h[i - 1]), (y, g), (y, k), (z, k)] {
            bld.edge(aa, bb);
        }
        for &b in &s {
            bld.edge(y, b);
            bld.edge(z, b);
        }
        if !isolated {
            let w = bld.horizontal(format!("w{i}"), e, r_foot - e / int(8));
            bld.edge(r, w);
        }
        h.push(hv);
        ys.push(y);
        zs.push(z);
    }

    let mut blues = vec![0; phi.clauses.len()];
    let mut satisfied = vec![false; phi.clauses.len()];
    for (c, &j) in stripes.iter().enumerate() {
        let cl = phi.clauses[j];
        let top = bnd(c);
        let bottom = bnd(c + 1);
        let below_positive = stripes.get(c + 1).is_some_and(|&k| phi.clauses[k].positive);
        let sb_foot = if below_positive { bottom + e / int(64) } else { bottom + e * frac(7, 16) };
        let sb = bld.vertical(format!("t{}", c + 1), e / int(2), sb_foot);
        bld.edge(sb, s[c + 1]);

        let mut obstacles = vec![top, bottom];
        for (slot, &var) in cl.vars.iter().enumerate() {
            let sub = int(slot as i128 + if cl.positive { 1 } else { 2 });
            let foot_of = |val: bool| {
                if val {
                    top + (sub - one) * u + e / int(8)
                } else {
                    top + sub * u - e / int(8)
                }
            };
            let len = y_foot(var + 1, true) + e / int(8) - foot_of(true);
            let foot = foot_of(assignment[var]);
            obstacles.push(foot);
            let o = bld.horizontal(format!("o{}_{}", j + 1, var + 1), len, foot);
            bld.edge(ys[var], o);
            for p in 0..var {
                bld.edge(ys[p], o);
                bld.edge(zs[p], o);
            }
        }
        obstacles.sort();
        let window = obstacles.windows(2).find(|w| w[1] - w[0] > int(2) + e / int(16));
        satisfied[j] = MonotoneCnf::clause_satisfied(&cl, assignment);
        debug_assert_eq!(window.is_some(), satisfied[j]);
        let p = match window {
            Some(w) => w[0] + int(2) + e / int(16),
            None => top + int(2) * u,
        };
        let blue = bld.vertical(format!("u{}", j + 1), int(2), p);
        if !isolated {
            let w = bld.horizontal(format!("wu{}", j + 1), e, p - e / int(16));
            bld.edge(blue, w);
        }
        blues[j] = blue;
    }

    let (inst, rep) = bld.finish()?;
    let by_foot = |side: Side, count: usize| {
        let mut idx: Vec<usize> = (0..count).collect();
        idx.sort_by(|&x, &y| {
            let (vx, vy) = match side {
                Side::A => (Vertex::a(x), Vertex::a(y)),
                Side::B => (Vertex::b(x), Vertex::b(y)),
            };
            rep.foot(vx).cmp(&rep.foot(vy))
        });
        idx
    };
    let mut inst = inst.with_sigma_a(by_foot(Side::A, rep.foot_a.len()))?;
    if variant == SatVariant::BothOrders {
        inst = inst.with_sigma_b(by_foot(Side::B, rep.foot_b.len()))?;
    }
    Ok(Layout { inst, rep, blues, satisfied })
}

/// Generates the instance for `phi`. With a satisfying `assignment` the
/// witness is its layout.
///
/// Variable `i` (one-based) contributes `h{i}`, `v{i}`, `a{i}`, `r{i}`,
/// `g{i}`, `y{i}`, `z{i}`, `k{i}`; clause `j` contributes the orange sticks
/// `o{j}_{i}` and the vertical `u{j}`. Stripe boundaries are `s0..s{M}` with
/// short verticals `t1..t{M}`, held at fixed distance by `q1`, `q2`, `kq`.
/// [`SatVariant::NoIsolated`] adds `w{i}` and `wu{j}`.
pub fn gen_monotone3sat(
    phi: &MonotoneCnf,
    assignment: Option<&[bool]>,
    params: &GadgetParams,
    variant: SatVariant,
) -> Result<GadgetInstance, Error> {
    if let Some(x) = assignment {
        if !phi.satisfied_by(x) {
            return Err(Error::InvalidInput(String::from("assignment does not satisfy the formula")));
        }
    }
    let all_true = vec![true; phi.num_vars];
    let lay = layout(phi, assignment.unwrap_or(&all_true), params, variant)?;
    let witness = assignment.map(|_| lay.rep);
    Ok(GadgetInstance { instance: lay.inst, witness })
}

/// One clause together with the three variable gadgets it reads.
#[derive(Clone, Debug)]
pub struct ClauseGadget {
    phi: MonotoneCnf,
    params: GadgetParams,
}

impl ClauseGadget {
    pub fn new(positive: bool, params: GadgetParams) -> Self {
        let phi = MonotoneCnf::new(3, vec![Clause { vars: [0, 1, 2], positive }]).expect("fixed clause");
        ClauseGadget { phi, params }
    }

    pub fn formula(&self) -> &MonotoneCnf {
        &self.phi
    }

    /// Whether the clause vertical fits. All other sticks keep the ground
    /// order of the layout for `values`; the vertical is tried at every
    /// position allowed by `σ_A`, each one checked with fixed lengths.
    pub fn blue_fits(&self, values: [bool; 3]) -> Result<bool, Error> {
        let lay = layout(&self.phi, &values, &self.params, SatVariant::IsolatedAOrderOnly)?;
        let blue = Vertex::a(lay.blues[0]);
        let rest: Vec<Vertex> = lay.rep.ground_order().into_iter().filter(|&v| v != blue).collect();
        let sigma_a = lay.inst.sigma_a().ok_or(Error::MissingOrder("sigma_A"))?;
        let rank = sigma_a.iter().position(|&a| a == blue.index).expect("blue in sigma_A");
        let verticals_before = |k: usize| rest[..k].iter().filter(|v| v.is_a()).count();
        for k in 0..=rest.len() {
            if verticals_before(k) != rank {
                continue;
            }
            let mut order = rest.clone();
            order.insert(k, blue);
            if let FixedOutcome::Realized(_) = solve_fixed_with_order(&lay.inst, &order)? {
                return Ok(true);
            }
        }
        debug_assert!(!lay.satisfied[0]);
        Ok(false)
    }
}
