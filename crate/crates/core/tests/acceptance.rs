//! Acceptance criteria 1 to 8. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::thread;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stickkit_core::epsilon::EpsilonValue;
use stickkit_core::fixed_length::{build_system, solve_fixed_with_order, FixedOutcome};
use stickkit_core::gadgets::{
    gen_3partition, gen_3partition_three_lengths, gen_epsilon_path, gen_monotone3sat, layout_compressed,
    layout_stretched, Clause, ClauseGadget, GadgetParams, MonotoneCnf, SatVariant, ThreePartition,
};
use stickkit_core::oracle::{
    dense_feasible, min_extent, oracle_fixed, oracle_stick_a, oracle_stick_ab, permutations, realizable_sigma_b,
    OrderEnumerator, OrderFilter, DEFAULT_MAX_SIZE,
};
use stickkit_core::rational::{format as show, int};
use stickkit_core::stick_a::{solve_stick_a, StickAOutcome};
use stickkit_core::sweep_ab::{solve_stick_ab, solve_stick_ab_counted, AbOutcome};
use stickkit_core::{components, intersects, verify_representation, Instance, Lengths, Rational, Representation};

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn graph(na: usize, nb: usize, mask: u32) -> Instance {
    let edges = (0..na * nb).filter(|k| mask >> k & 1 == 1).map(|k| (k / nb, k % nb));
    Instance::with_counts(na, nb, edges).unwrap()
}

fn connected(g: &Instance) -> bool {
    components(g).len() == 1
}

/// Runs `f` over `0..n` on all cores and sums the returned counters.
fn par_sum<const K: usize>(n: u32, f: impl Fn(u32) -> [u64; K] + Sync) -> [u64; K] {
    let threads = thread::available_parallelism().map_or(4, |p| p.get()) as u32;
    thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let f = &f;
                s.spawn(move || {
                    let mut acc = [0u64; K];
                    let mut i = t;
                    while i < n {
                        for (x, y) in acc.iter_mut().zip(f(i)) {
                            *x += y;
                        }
                        i += threads;
                    }
                    acc
                })
            })
            .collect();
        handles.into_iter().fold([0u64; K], |mut acc, h| {
            for (x, y) in acc.iter_mut().zip(h.join().unwrap()) {
                *x += y;
            }
            acc
        })
    })
}

fn criterion_1() -> Verdict {
    let perms = permutations(3);
    let [checked, mismatches] = par_sum(512, |mask| {
        let g = graph(3, 3, mask);
        let mut out = [0, 0];
        for sa in &perms {
            for sb in &perms {
                let inst = g.clone().with_sigma_a(sa.clone()).unwrap().with_sigma_b(sb.clone()).unwrap();
                let got = matches!(solve_stick_ab(&inst).unwrap(), AbOutcome::Realized(_));
                let want = oracle_stick_ab(&inst, DEFAULT_MAX_SIZE).unwrap().is_some();
                out[0] += 1;
                out[1] += (got != want) as u64;
            }
        }
        out
    });
    verdict(mismatches == 0 && checked == 512 * 36, format!("{checked} cases, {mismatches} verdict mismatches"))
}

/// Every labelled graph is enumerated, so fixing `σ_A` to the identity
/// covers every pair of graph and `σ_A` up to renaming the vertical sticks.
fn criterion_2() -> Verdict {
    let mut graphs = Vec::new();
    for na in 1..=4 {
        for nb in 1..=4 {
            for mask in 0..1u32 << (na * nb) {
                graphs.push((na, nb, mask));
            }
        }
    }
    let [cases, verdict_bad, set_bad, unsound] = par_sum(graphs.len() as u32, |k| {
        let (na, nb, mask) = graphs[k as usize];
        let g = graph(na, nb, mask);
        if !connected(&g) {
            return [0; 4];
        }
        let mut out = [0; 4];
        for sa in permutations(na) {
            let inst = g.clone().with_sigma_a(sa).unwrap();
            let want = oracle_stick_a(&inst, DEFAULT_MAX_SIZE).unwrap().is_some();
            let sol = solve_stick_a(&inst).unwrap();
            let got = matches!(sol.outcome, StickAOutcome::Realized { .. });
            out[0] += 1;
            out[1] += (got != want) as u64;
            let realizable: BTreeSet<Vec<usize>> =
                realizable_sigma_b(&inst, DEFAULT_MAX_SIZE).unwrap().into_iter().collect();
            let expressed: BTreeSet<Vec<usize>> = match sol.forests.first() {
                Some(f) if got => f.enumerate_forest(40_320).unwrap().into_iter().collect(),
                _ => BTreeSet::new(),
            };
            out[2] += (expressed != realizable) as u64;
            out[3] += !expressed.is_subset(&realizable) as u64;
        }
        out
    });
    let pass = verdict_bad == 0 && set_bad == 0;
    verdict(
        pass,
        format!("{cases} (graph, sigma_A) cases; (a) {verdict_bad} verdict mismatches; (b) {set_bad} expressed-set mismatches, {unsound} with a non-realizable expressed order"),
    )
}

fn random_representation(rng: &mut ChaCha8Rng, na: usize, nb: usize, max_len: i128) -> Representation {
    let mut feet: Vec<i128> = (0..(na + nb) as i128).collect();
    feet.shuffle(rng);
    let mut rep = Representation::zeroed(na, nb);
    for a in 0..na {
        rep.foot_a[a] = int(feet[a]);
        rep.len_a[a] = int(rng.gen_range(1..=max_len));
    }
    for b in 0..nb {
        rep.foot_b[b] = int(feet[na + b]);
        rep.len_b[b] = int(rng.gen_range(1..=max_len));
    }
    rep
}

fn instance_of(rep: &Representation) -> Instance {
    let (na, nb) = (rep.foot_a.len(), rep.foot_b.len());
    let mut by_foot: Vec<usize> = (0..nb).collect();
    by_foot.sort_by_key(|&b| rep.foot_b[b]);
    let mut edges = Vec::new();
    for a in 0..na {
        // Only horizontal feet in [p - len, p) can meet the vertical at p.
        let p = rep.foot_a[a];
        let start = by_foot.partition_point(|&b| rep.foot_b[b] < p - rep.len_a[a]);
        for &b in by_foot[start..].iter().take_while(|&&b| rep.foot_b[b] < p) {
            if intersects(p, rep.len_a[a], rep.foot_b[b], rep.len_b[b]) {
                edges.push((a, b));
            }
        }
    }
    Instance::with_counts(na, nb, edges).unwrap()
}

fn criterion_3() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut bound_bad, mut verdict_bad, mut feasible) = (0, 0, 0);
    for k in 0..1000 {
        let n = rng.gen_range(2..=50);
        let na = rng.gen_range(1..n);
        let nb = n - na;
        let rep = random_representation(&mut rng, na, nb, 10);
        let mut inst = instance_of(&rep);
        let mut order = rep.ground_order();
        if k % 2 == 1 {
            // A random graph and order: almost always infeasible.
            let mask: Vec<(usize, usize)> =
                (0..na).flat_map(|a| (0..nb).map(move |b| (a, b))).filter(|_| rng.gen_bool(0.2)).collect();
            inst = Instance::with_counts(na, nb, mask).unwrap();
            order.shuffle(&mut rng);
        }
        let inst = inst.with_lengths(Lengths { a: rep.len_a.clone(), b: rep.len_b.clone() }).unwrap();
        let sys = build_system(&inst, &order).unwrap();
        bound_bad += (sys.constraints.len() > 3 * n - 1) as u32;
        let sparse = solve_fixed_with_order(&inst, &order).unwrap().representation().is_some();
        verdict_bad += (sparse != dense_feasible(&inst, &order).unwrap()) as u32;
        feasible += sparse as u32;
    }
    verdict(
        bound_bad == 0 && verdict_bad == 0,
        format!("1000 instances ({feasible} feasible); {bound_bad} over 3n-1 constraints; {verdict_bad} verdict mismatches"),
    )
}

fn criterion_4() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let samples: Vec<Instance> = (0..500)
        .map(|_| {
            let n = rng.gen_range(2..=7);
            let na = rng.gen_range(1..n);
            let nb = n - na;
            let edges: Vec<(usize, usize)> =
                (0..na).flat_map(|a| (0..nb).map(move |b| (a, b))).filter(|_| rng.gen_bool(0.5)).collect();
            let la = (0..na).map(|_| int(rng.gen_range(1..=3))).collect();
            let lb = (0..nb).map(|_| int(rng.gen_range(1..=3))).collect();
            Instance::with_counts(na, nb, edges).unwrap().with_lengths(Lengths { a: la, b: lb }).unwrap()
        })
        .collect();
    let [bad, yes] = par_sum(samples.len() as u32, |k| {
        let inst = &samples[k as usize];
        let oracle = oracle_fixed(inst, DEFAULT_MAX_SIZE).unwrap();
        let mut sparse = false;
        let mut dense = false;
        for order in OrderEnumerator::new(inst, OrderFilter::NONE).unwrap() {
            sparse |= matches!(solve_fixed_with_order(inst, &order).unwrap(), FixedOutcome::Realized(_));
            dense |= dense_feasible(inst, &order).unwrap();
        }
        let witness_ok = oracle.as_ref().is_none_or(|(_, rep)| verify_representation(inst, rep).unwrap().is_valid());
        let agree = oracle.is_some() == sparse && sparse == dense && witness_ok;
        [(!agree) as u64, sparse as u64]
    });
    verdict(bad == 0, format!("500 instances ({yes} feasible), {bad} disagreements"))
}

fn criterion_5() -> Verdict {
    let params = GadgetParams::default();
    let (eps, delta) = (params.epsilon, params.delta);
    let mut notes = Vec::new();
    let mut pass = true;
    for n in [3usize, 4] {
        let nn = int(n as i128);
        let (inst, rep) = layout_stretched(n, &params).unwrap();
        let ok = verify_representation(&inst, &rep).unwrap().is_valid();
        let ext = rep.extent().unwrap();
        let stretched = ok && ext == nn * eps;
        let (inst, rep) = layout_compressed(n, &params).unwrap();
        let ok = verify_representation(&inst, &rep).unwrap().is_valid();
        let cext = rep.extent().unwrap();
        let compressed = ok && cext == (nn + int(2)) / int(3) * eps + delta;
        let path = gen_epsilon_path(n, &params).unwrap();
        let (min, _) = min_extent(&path, DEFAULT_MAX_SIZE, &[]).unwrap().unwrap();
        let lower = min > EpsilonValue::standard(nn / int(3) * eps);
        pass &= stretched && compressed && lower;
        notes.push(format!(
            "n={n}: stretched {} (extent {}·ε), compressed {} (extent {}), min extent {} ({} plus {} infinitesimals)",
            ok_str(stretched),
            show(&(ext / eps)),
            ok_str(compressed),
            show(&cext),
            ok_str(lower),
            show(&min.standard),
            show(&min.infinitesimal)
        ));
    }
    verdict(pass, notes.join("; "))
}

fn ok_str(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

fn distinct_lengths(inst: &Instance) -> usize {
    let l = inst.lengths().unwrap();
    l.a.iter().chain(&l.b).collect::<BTreeSet<&Rational>>().len()
}

fn criterion_6() -> Verdict {
    let params = GadgetParams::default();
    let tp = ThreePartition::new(vec![5; 6]).unwrap();
    let part = [[0, 1, 2], [3, 4, 5]];
    let valid = |inst: &Instance, rep: &Representation| verify_representation(inst, rep).unwrap().is_valid();

    let g = gen_3partition(&tp, Some(&part), &params).unwrap();
    let plain = valid(&g.instance, g.witness.as_ref().unwrap());
    let g3 = gen_3partition_three_lengths(&tp, Some(&part), &params).unwrap();
    let lengths3 = distinct_lengths(&g3.instance);
    let three = valid(&g3.instance, g3.witness.as_ref().unwrap()) && lengths3 == 3;

    let phi = MonotoneCnf::new(3, vec![Clause { vars: [0, 1, 2], positive: true }]).unwrap();
    let mut sat = true;
    for variant in [SatVariant::IsolatedAOrderOnly, SatVariant::BothOrders, SatVariant::NoIsolated] {
        let g = gen_monotone3sat(&phi, Some(&[true; 3]), &params, variant).unwrap();
        sat &= valid(&g.instance, g.witness.as_ref().unwrap());
        if variant == SatVariant::NoIsolated {
            sat &= g.instance.isolated_vertices().next().is_none();
        }
    }
    verdict(
        plain && three && sat,
        format!(
            "3-partition {}; three-length {} ({} sticks, {lengths3} lengths); monotone 3-SAT {}",
            ok_str(plain),
            ok_str(three),
            g3.instance.num_vertices(),
            ok_str(sat)
        ),
    )
}

fn criterion_7() -> Verdict {
    let mut pass = true;
    let mut notes = Vec::new();
    for positive in [true, false] {
        let gadget = ClauseGadget::new(positive, GadgetParams::default());
        let mut fits = Vec::new();
        for mask in 0..8u8 {
            let x = [mask & 1 == 1, mask & 2 == 2, mask & 4 == 4];
            let ok = gadget.blue_fits(x).unwrap();
            pass &= ok == x.contains(&positive);
            fits.push(if ok { '1' } else { '0' });
        }
        let count = fits.iter().filter(|&&c| c == '1').count();
        pass &= count == 7;
        notes.push(format!("{} clause fits {count}/8 [{}]", if positive { "positive" } else { "negative" }, fits.iter().collect::<String>()));
    }
    verdict(pass, notes.join("; "))
}

/// A realizable instance with both orders and roughly `target` edges.
fn positive_instance(rng: &mut ChaCha8Rng, target: usize) -> Instance {
    // Lengths up to 20 over a shuffled line give about 3.4 edges per stick.
    let n = target * 3 / 10;
    let rep = random_representation(rng, n, n, 20);
    let inst = instance_of(&rep);
    let by_foot = |feet: &[Rational]| {
        let mut idx: Vec<usize> = (0..feet.len()).collect();
        idx.sort_by_key(|&i| feet[i]);
        idx
    };
    inst.with_sigma_a(by_foot(&rep.foot_a)).unwrap().with_sigma_b(by_foot(&rep.foot_b)).unwrap()
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut ab = Vec::new();
    let mut a = Vec::new();
    let mut notes = Vec::new();
    for target in [1_000, 10_000, 100_000] {
        let inst = positive_instance(&mut rng, target);
        let (outcome, work) = solve_stick_ab_counted(&inst).unwrap();
        assert!(matches!(outcome, AbOutcome::Realized(_)));
        let size = inst.num_vertices() + inst.num_edges();
        ab.push(work as f64 / size as f64);
        let without_b = inst.clone().without_orders().with_sigma_a(inst.sigma_a().unwrap().to_vec()).unwrap();
        let sol = solve_stick_a(&without_b).unwrap();
        assert!(matches!(sol.outcome, StickAOutcome::Realized { .. }));
        let cells = inst.num_a() * inst.num_b();
        a.push(sol.work as f64 / cells as f64);
        notes.push(format!(
            "|E|={}: ab work/size {:.3}, a work/(|A||B|) {:.4}",
            inst.num_edges(),
            ab.last().unwrap(),
            a.last().unwrap()
        ));
    }
    let linear = ab.iter().all(|r| r / ab[0] <= 1.3 && ab[0] / r <= 1.3);
    let quadratic = a.iter().all(|r| r / a[0] <= 1.3);
    verdict(linear && quadratic, notes.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("1 exhaustive STICK_AB oracle agreement", criterion_1),
        ("2 exhaustive STICK_A oracle agreement", criterion_2),
        ("3 difference-constraint bounds", criterion_3),
        ("4 fixed-length oracle agreement", criterion_4),
        ("5 epsilon-path extents", criterion_5),
        ("6 gadget witnesses", criterion_6),
        ("7 clause-gadget truth table", criterion_7),
        ("8 complexity instrumentation", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let v = run();
        let secs = start.elapsed().as_secs_f64();
        println!("criterion {name}: {} ({:.1}s) {}", if v.pass { "PASS" } else { "FAIL" }, secs, v.detail);
        failed += !v.pass as u32;
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
