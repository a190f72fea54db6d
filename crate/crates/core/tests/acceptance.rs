//! Acceptance criteria 1 to 10. Every check prints one PASS/FAIL line.
//! All comparisons are exact rational (or exactly scaled integer)
//! comparisons; the only tolerances are the wall-clock budgets below.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use common::*;
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::Rng;
use topdiff::aggregation::{
    aggregate_exact, aggregate_footrule, aggregate_myopic, assignment_brute_force, hungarian, ilp_export,
    ilp_objective_eval, ptas_depth, guarantee_inv_epsilon, BetaRule,
};
use topdiff::audit::{
    brute_force_classification, check_axiom, check_property, condorcet_candidates, confirm_property_witness,
    find_semimetric_violation, is_graphic, recover_pairwise_weights, Axiom, Property, Verdict, Witness,
};
use topdiff::distance::{dist_fast, dist_naive, footrule_params, profile_cost};
use topdiff::ranking::all_permutations;
use topdiff::weights::{beta_to_phi, classify, footrule_bound, gamma, phi_to_beta, Classification, Preset};
use topdiff::{BetaWeights, DistanceParams, Measure, Permutation, PhiWeights, Profile};

/// Exact comparisons only: the allowed absolute error is zero.
const EXACT_TOLERANCE: i64 = 0;
const ORACLE_BUDGET: Duration = Duration::from_secs(60);
const SUITE_BUDGET: Duration = Duration::from_secs(300);

fn line(id: &str, what: &str, pass: bool, detail: impl AsRef<str>) -> bool {
    println!("criterion {id} [{what}]: {} ({})", if pass { "PASS" } else { "FAIL" }, detail.as_ref());
    pass
}

fn ints64(beta: Vec<i64>, mu: Vec<i64>) -> DistanceParams<i64> {
    DistanceParams::new(BetaWeights::new(beta).unwrap(), Measure::new(mu).unwrap()).unwrap()
}

#[test]
fn criterion_01_oracle_equivalence() {
    let start = Instant::now();
    let mut r = rng(101);
    let mut pairs = 0u64;
    let mut ok = true;
    for n in 2..=6 {
        let perms: Vec<Permutation> = all_permutations(n).collect();
        let draws: Vec<_> = (0..50).map(|_| random_params(&mut r, n)).collect();
        for d in &draws {
            // the distance is linear in β and in μ, so integer scaling is exact
            let (di, _) = scaled(d);
            for a in &perms {
                for b in &perms {
                    ok &= dist_fast(&di, a, b).unwrap() == dist_naive(&di, a, b).unwrap();
                }
            }
        }
        pairs += (draws.len() * perms.len() * perms.len()) as u64;
        for d in draws.iter().take(3) {
            for a in perms.iter().step_by((perms.len() / 24).max(1)) {
                for b in &perms {
                    ok &= dist_fast(d, a, b).unwrap() == dist_naive(d, a, b).unwrap();
                }
            }
        }
    }
    for n in [7, 8, 10] {
        for _ in 0..50 {
            let d = random_params(&mut r, n);
            for _ in 0..10 {
                let (a, b) = (random_perm(&mut r, n), random_perm(&mut r, n));
                ok &= dist_fast(&d, &a, &b).unwrap() == dist_naive(&d, &a, &b).unwrap();
                pairs += 1;
            }
        }
    }
    let took = start.elapsed();
    let pass = line(
        "1",
        "oracle equivalence",
        ok && took < ORACLE_BUDGET,
        format!("{pairs} pairs, 50 draws per n, {:.1}s of {}s budget", took.as_secs_f64(), ORACLE_BUDGET.as_secs()),
    );
    assert!(pass);
}

#[test]
fn criterion_02_beta_phi_bijection() {
    let mut r = rng(102);
    let mut ok = true;
    for _ in 0..500 {
        let n = r.gen_range(2..=12);
        let b: Vec<Q> = (2..=n).map(|_| q(r.gen_range(-20..20), r.gen_range(1..9))).collect();
        let beta = BetaWeights::new(b).unwrap();
        ok &= phi_to_beta(&beta_to_phi(&beta)) == beta;
    }
    let round = line("2a", "roundtrip", ok, "500 random rational β, n ≤ 12");
    let mut exp_ok = true;
    for alpha in [2i64, 3] {
        for c in [1i64, 5] {
            for n in 2..=12 {
                let a = int(alpha);
                let phi = PhiWeights::new((1..n).map(|k| int(c) / a.pow(k)).collect()).unwrap();
                let beta: Vec<Q> =
                    (2..=n).map(|k| int(c) * a.pow(1 - n) * (&a - int(1)).pow(k - 2)).collect();
                exp_ok &= phi_to_beta(&phi).values() == beta.as_slice();
                exp_ok &= beta_to_phi(&BetaWeights::new(beta).unwrap()) == phi;
            }
        }
    }
    let exp = line("2b", "exponential correspondence", exp_ok, "α ∈ {2,3}, c ∈ {1,5}, n ≤ 12");
    assert!(round && exp);
}

#[test]
fn criterion_03_diaconis_graham() {
    let presets = [
        Preset::Kendall,
        Preset::OkNishimura,
        Preset::Linear,
        Preset::Binomial { p: q(1, 3) },
        Preset::Binomial { p: q(1, 2) },
        Preset::Gilbert { cutoff: 3 },
        Preset::UnavailableCandidate { alpha: int(3) },
    ];
    let mut sandwich = true;
    let mut bounded = true;
    for pr in &presets {
        for n in 2..=6 {
            let d = counting(pr.beta_exact(n).unwrap());
            let g = gamma(d.beta()).unwrap();
            let c = footrule_bound(pr);
            let (gn, gd) = (g.numer().to_i128().unwrap(), g.denom().to_i128().unwrap());
            let (di, _) = scaled(&d);
            let perms: Vec<Permutation> = all_permutations(n).collect();
            for a in &perms {
                for b in &perms {
                    let (dist, f) = (dist_fast(&di, a, b).unwrap(), footrule_params(&di, a, b).unwrap());
                    sandwich &= f <= dist && dist * gd <= gn * f;
                    if let Some(c) = &c {
                        let (cn, cd) = (c.numer().to_i128().unwrap(), c.denom().to_i128().unwrap());
                        bounded &= dist * cd <= cn * f;
                    }
                }
            }
        }
    }
    let s = line("3a", "footrule ≤ d ≤ γ·footrule", sandwich, "all pairs, n ≤ 6, seven presets");
    let c = line("3b", "closed-form footrule bounds", bounded, "d ≤ c·footrule with c = 2, 3/2, 3/2, 1+p");

    // the closed-form bounds read as values of γ_β itself
    let mut lines = Vec::new();
    let mut exact = true;
    for n in 3..=6 {
        let gk = gamma(&Preset::Kendall.beta_exact(n).unwrap()).unwrap();
        let go = gamma(&Preset::OkNishimura.beta_exact(n).unwrap()).unwrap();
        let gl = gamma(&Preset::Linear.beta_exact(n).unwrap()).unwrap();
        let p = q(1, 3);
        let gb = gamma(&Preset::Binomial { p: p.clone() }.beta_exact(n).unwrap()).unwrap();
        exact &= gk == int(2) && go == q(3, 2) && gl == q(3, 2) && gb <= int(1) + &p;
        lines.push(format!("n={n}: kendall {gk}, all-ones {go}, β_k=k {gl}, binomial(1/3) {gb}"));
    }
    let g = line("3c", "γ_β equals the closed-form bounds", exact && EXACT_TOLERANCE == 0, lines.join("; "));
    assert!(s && c && g, "γ_β differs from the closed-form bounds");
}

#[test]
fn criterion_04_worked_examples() {
    // (a) relabeling example, μ = (1,1,2), c = 2(μ1+μ2+μ3)
    let d = int_params(&[1, 0], &[1, 1, 2]);
    let v = Profile::from_rankings(vec![perm(&[1, 2, 3]), perm(&[3, 1, 2]), perm(&[2, 3, 1])]).unwrap();
    let (m1, m2, m3) = (int(1), int(1), int(2));
    let c = int(2) * (&m1 + &m2 + &m3);
    let forms = [
        ([1, 2, 3], &c + &m1 + &m3),
        ([3, 1, 2], &c + &m2 + &m3),
        ([2, 3, 1], &c + &m1 + &m2),
        ([3, 2, 1], &c + &m1 + int(2) * &m2 + &m3),
        ([2, 1, 3], &c + int(2) * &m1 + &m2 + &m3),
        ([1, 3, 2], &c + &m1 + &m2 + int(2) * &m3),
    ];
    let tau = perm(&[3, 2, 1]);
    let tv = v.relabel(&tau).unwrap();
    let relabeled = [
        ([1, 2, 3], &c + &m1 + int(2) * &m2 + &m3),
        ([3, 2, 1], &c + &m1 + &m3),
        ([3, 1, 2], &c + int(2) * &m1 + &m2 + &m3),
        ([2, 1, 3], &c + &m2 + &m3),
        ([2, 3, 1], &c + &m1 + &m2 + int(2) * &m3),
        ([1, 3, 2], &c + &m1 + &m2),
    ];
    let mut ok = forms.iter().all(|(s, w)| profile_cost(&d, &perm(s), &v).unwrap() == *w);
    ok &= relabeled.iter().all(|(s, w)| profile_cost(&d, &perm(s), &tv).unwrap() == *w);
    let costs: Vec<String> = forms.iter().map(|(s, _)| profile_cost(&d, &perm(s), &v).unwrap().to_string()).collect();
    ok &= aggregate_exact(&d, &v).unwrap().minimizers == vec![perm(&[2, 3, 1])];
    ok &= aggregate_exact(&d, &tv).unwrap().minimizers == vec![perm(&[1, 3, 2])];
    let rep = check_property(&d, &v, Property::NeutralityP, None).unwrap();
    ok &= rep.verdict == Verdict::Fails;
    ok &= confirm_property_witness(&d, &v, Property::NeutralityP, &Witness::Relabeling(tau)).unwrap();
    let a = line("4a", "relabeling computation", ok, format!("costs {} ; τ = (3,2,1) violates", costs.join(", ")));

    // (b) cyclic profile under Kendall
    let cyc = Profile::from_rankings(vec![perm(&[1, 2, 3]), perm(&[2, 3, 1]), perm(&[3, 1, 2])]).unwrap();
    let got = aggregate_exact(&int_params(&[1, 0], &[1, 1, 1]), &cyc).unwrap();
    let b = line(
        "4b",
        "cyclic consensus set",
        got.minimizers == vec![perm(&[1, 2, 3]), perm(&[2, 3, 1]), perm(&[3, 1, 2])],
        format!("{} minimizers at cost {}", got.minimizers.len(), got.optimum),
    );

    // (c) interval-block example
    let v = Profile::from_rankings(vec![perm(&[1, 2, 3, 4]), perm(&[3, 2, 1, 4]), perm(&[4, 2, 3, 1])]).unwrap();
    let got = aggregate_exact(&int_params(&[1, 1, 1], &[1, 1, 1, 1]), &v).unwrap();
    let shown: Vec<String> = got.minimizers.iter().map(ToString::to_string).collect();
    let cc = line(
        "4c",
        "interval-block consensus",
        got.minimizers == vec![perm(&[2, 3, 1, 4])],
        format!("expected {{(2,3,1,4)}}, got {{{}}} at cost {}", shown.join(", "), got.optimum),
    );
    assert!(a && b && cc, "the interval-block example yields a tie under the stated menu convention");
}

#[test]
fn criterion_05_condorcet() {
    let mut r = rng(105);
    let mut ok = true;
    for i in 0..200 {
        let n = r.gen_range(3..=5);
        let mut beta = vec![int(0); n - 1];
        beta[0] = int(1);
        let mu = if i % 2 == 0 { vec![int(1); n] } else { (0..n).map(|_| rational(&mut r, 4, 3) + q(1, 3)).collect() };
        let d = params(beta, mu);
        let m = r.gen_range(1..=7);
        let v = random_profile(&mut r, n, m);
        for p in [Property::CondorcetP, Property::CondorcetW] {
            ok &= check_property(&d, &v, p, None).unwrap().verdict == Verdict::Holds;
        }
    }
    let a = line("5a", "pair weights pass", ok, "200 random profiles, n ≤ 5");
    let mut broken = true;
    for n in 3..=6 {
        let ext = |head: &[usize]| {
            let mut v = head.to_vec();
            v.extend(4..=n);
            perm(&v)
        };
        let v = Profile::new(n, vec![(5, ext(&[1, 2, 3])), (4, ext(&[3, 2, 1])), (1, ext(&[2, 3, 1]))]).unwrap();
        let mut beta = vec![int(0); n - 1];
        beta[0] = int(1);
        beta[1] = int(1);
        let d = params(beta, vec![int(1); n]);
        let winners = aggregate_exact(&d, &v).unwrap().winners;
        broken &= condorcet_candidates(&v).contains(&1) && !winners.contains(&1);
        broken &= check_property(&d, &v, Property::CondorcetW, None).unwrap().witness == Some(Witness::Candidate(1));
    }
    let b = line("5b", "β = (1,1,0,…) excludes Condorcet candidate 2", broken, "n = 3..6");
    assert!(a && b);
}

#[test]
fn criterion_06_footrule_approximation() {
    let mut r = rng(106);
    let mut ok = true;
    let mut worst = q(1, 1);
    for _ in 0..200 {
        let n = r.gen_range(2..=7);
        let d = counting(random_params(&mut r, n).beta().clone());
        let m = r.gen_range(1..=5);
        let v = random_profile(&mut r, n, m);
        let cert = aggregate_footrule(d.beta(), d.mu(), &v).unwrap().certificate.unwrap();
        let opt = aggregate_exact(&d, &v).unwrap().optimum;
        ok &= cert <= gamma(d.beta()).unwrap() * &opt;
        if opt > int(0) {
            worst = worst.max(&cert / &opt);
        }
    }
    let a = line("6a", "footrule median within γ_β", ok, format!("200 profiles, n ≤ 7, m ≤ 5, worst ratio {worst}"));
    let mut same = true;
    for n in 1..=7 {
        for _ in 0..20 {
            let cost: Vec<Vec<Q>> = (0..n).map(|_| (0..n).map(|_| rational(&mut r, 50, 7)).collect()).collect();
            same &= hungarian(&cost).1 == assignment_brute_force(&cost).1;
        }
    }
    let b = line("6b", "Hungarian equals enumeration", same, "20 matrices per n ≤ 7");
    assert!(a && b);
}

#[test]
fn criterion_07_ptas() {
    let mut r = rng(107);
    let rules = [("β_j = j+1", BetaRule::PlusOne), ("unavailable-candidate α=2", BetaRule::Exponential { alpha: int(2) })];
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, rule) in &rules {
        for eps in [q(1, 2), q(1, 4)] {
            let mut worst = int(1);
            let mut depth = 0;
            for _ in 0..100 {
                let n = r.gen_range(2..=8);
                let mu: Measure<Q> = Measure::counting(n);
                let d = DistanceParams::new(rule.weights(n).unwrap(), mu.clone()).unwrap();
                let m = r.gen_range(1..=6);
                let v = random_profile(&mut r, n, m);
                let k = ptas_depth(rule, &guarantee_inv_epsilon(&mu, &eps).unwrap(), None).unwrap();
                depth = k;
                let got = aggregate_myopic(&d, &v, k).unwrap().certificate.unwrap();
                let opt = aggregate_exact(&d, &v).unwrap().optimum;
                ok &= got <= (int(1) + &eps) * &opt;
                if opt > int(0) {
                    worst = worst.max(&got / &opt);
                }
            }
            detail.push(format!("{name} ε={eps}: K={depth}, worst {worst}"));
        }
    }
    let a = line("7a", "MyopicTop within 1+ε", ok, detail.join("; "));
    let g4 = ptas_depth(&BetaRule::PlusOne, &int(4), None).unwrap();
    let b = line("7b", "g(4) = 4 for β_j = j+1", g4 == 4, format!("g(4) = {g4}"));
    assert!(a && b);
}

#[test]
fn criterion_08_ilp() {
    let mut r = rng(108);
    let mut ok = true;
    let mut checked = 0;
    for _ in 0..20 {
        let n = r.gen_range(2..=6);
        let d = random_params(&mut r, n);
        let m = r.gen_range(1..=4);
        let v = random_profile(&mut r, n, m);
        let model = ilp_export(&d, &v).unwrap();
        let constant: Q = v
            .entries()
            .iter()
            .map(|(k, b)| int(*k as i64) * (0..n).map(|x| d.mu().get(x) * d.f(n - 1 - b.position(x))).sum::<Q>())
            .sum();
        let mut best: Option<Q> = None;
        let mut argmin = Vec::new();
        for (i, s) in all_permutations(n).enumerate() {
            let x = model.assignment(&s);
            let obj = model.objective_value(&x);
            match &best {
                Some(b) if obj > *b => {}
                Some(b) if obj == *b => argmin.push(s.clone()),
                _ => {
                    best = Some(obj.clone());
                    argmin = vec![s.clone()];
                }
            }
            ok &= model.is_feasible(&x);
            ok &= &obj - (profile_cost(&d, &s, &v).unwrap() - &constant) == int(EXACT_TOLERANCE);
            if i % 37 == 0 {
                ok &= ilp_objective_eval(&d, &v, &s).unwrap() == obj;
            }
            checked += 1;
        }
        argmin.sort();
        ok &= argmin == aggregate_exact(&d, &v).unwrap().minimizers;
    }
    let a = line("8a", "objective equals shifted cost", ok, format!("{checked} (profile, σ) points, n ≤ 6, argmin matches exact minimizers"));
    let formula = |n: usize, m: usize| {
        let vars = n * n + m * n * n * n;
        let rows = n + n * (n - 1) / 2 + n * (n - 1) * (n - 2) + 4 * m * n * n * n + m * n;
        (vars, rows)
    };
    let mut counts = true;
    let mut shown = Vec::new();
    for (n, m) in [(4, 3), (5, 4)] {
        let v = random_profile(&mut r, n, m);
        let model = ilp_export(&counting(Preset::Linear.beta_exact(n).unwrap()), &v).unwrap();
        let got = (model.variable_count(), model.constraint_count());
        counts &= got == formula(n, m);
        shown.push(format!("(n,m)=({n},{m}): {} vars, {} rows", got.0, got.1));
    }
    let b = line("8b", "model size formula", counts, shown.join("; "));
    assert!(a && b);
}

#[test]
fn criterion_09_axioms() {
    // A.3 over a full grid of small nonnegative parameters, random at n = 5
    let mut ok = true;
    let mut count = 0;
    let mut r = rng(109);
    for n in 2..=4 {
        let digits = |mut c: usize, len: usize| -> Vec<i64> {
            (0..len)
                .map(|_| {
                    let d = (c % 3) as i64;
                    c /= 3;
                    d
                })
                .collect()
        };
        for cb in 0..3usize.pow(n as u32 - 1) {
            for cm in 0..3usize.pow(n as u32) {
                let d = ints64(digits(cb, n - 1), digits(cm, n));
                if classify(d.beta(), d.mu()).is_semimetric() {
                    ok &= check_axiom(&d, Axiom::A3).unwrap().verdict == Verdict::Holds;
                    count += 1;
                }
            }
        }
    }
    for _ in 0..25 {
        let d = ints64((0..4).map(|_| r.gen_range(0..4)).collect(), (0..5).map(|_| r.gen_range(0..4)).collect());
        if classify(d.beta(), d.mu()).is_semimetric() {
            ok &= check_axiom(&d, Axiom::A3).unwrap().verdict == Verdict::Holds;
            ok &= is_graphic(&d).unwrap();
            count += 1;
        }
    }
    let a = line("9a", "A.3 for nonnegative semimetrics", ok, format!("{count} parameter sets, n ≤ 5"));

    let mut rec = true;
    for n in 2..=5 {
        for _ in 0..10 {
            // μ in M^≥: pairwise sums nonnegative, one coordinate may be negative
            let mut mu: Vec<i64> = (0..n).map(|_| r.gen_range(1..5)).collect();
            let low = *mu.iter().min().unwrap();
            if r.gen_bool(0.5) {
                let i = r.gen_range(0..n);
                mu[i] = -r.gen_range(0..=low);
            }
            let d = ints64((0..n - 1).map(|k| (k == 0) as i64).collect(), mu);
            rec &= recover_pairwise_weights(&d).unwrap().reproduces();
        }
    }
    let b = line("9b", "pairwise recovery for β = (1,0,…)", rec, "10 measures in M^≥ per n ≤ 5");

    let mut labels = true;
    let mut tally = [0usize; 5];
    for n in 2..=5 {
        for _ in 0..if n == 5 { 40 } else { 200 } {
            let beta: Vec<i64> = (0..n - 1).map(|_| r.gen_range(-2..=3)).collect();
            let mu: Vec<i64> = (0..n).map(|_| r.gen_range(-1..=3)).collect();
            let d = ints64(beta, mu);
            let label = classify(d.beta(), d.mu());
            let truth = brute_force_classification(&d).unwrap();
            tally[label as usize] += 1;
            labels &= match label {
                Classification::Metric => truth == Classification::Metric,
                Classification::NotSemimetric => find_semimetric_violation(&d).unwrap().is_some(),
                Classification::SemimetricOnly => truth == Classification::SemimetricOnly,
                Classification::TrivialZero => truth == Classification::SemimetricOnly,
                Classification::Unresolved => false,
            };
        }
    }
    let c = line(
        "9c",
        "labels confirmed by brute force",
        labels,
        format!("metric {}, semimetric {}, zero {}, not semimetric {}", tally[0], tally[1], tally[2], tally[3]),
    );
    assert!(a && b && c);
}

fn within_blocks(r: &mut impl Rng, base: &Permutation, cuts: &[usize]) -> Permutation {
    let mut v = base.as_slice().to_vec();
    let mut lo = 0;
    for &hi in cuts {
        v[lo..hi].shuffle(r);
        lo = hi;
    }
    Permutation::new(v).unwrap()
}

fn suite(id: &str, name: &str, trials: usize, mut run: impl FnMut(&mut rand_chacha::ChaCha8Rng) -> bool) -> bool {
    let mut r = rng(110 + id.len() as u64 * 7 + name.len() as u64);
    let start = Instant::now();
    let ok = (0..trials).all(|_| run(&mut r));
    let took = start.elapsed();
    line(id, name, ok && took < SUITE_BUDGET, format!("{trials} profiles in {:.2}s", took.as_secs_f64()))
}

#[test]
fn criterion_10_social_choice() {
    let holds = |d: &topdiff::ExactParams, v: &Profile, p: Property, second: Option<&Profile>| {
        check_property(d, v, p, second).unwrap().verdict == Verdict::Holds
    };
    let a = suite("10a", "majority", 200, |r| {
        let n = r.gen_range(2..=6);
        let d = random_params(r, n);
        let m = r.gen_range(1..=7);
        holds(&d, &random_profile(r, n, m), Property::Majority, None)
    });
    let b = suite("10b", "monotonicity", 100, |r| {
        let n = r.gen_range(2..=5);
        let d = random_params(r, n);
        let m = r.gen_range(1..=5);
        holds(&d, &random_profile(r, n, m), Property::Monotonicity, None)
    });
    let c = suite("10c", "reinforcing", 150, |r| {
        let n = r.gen_range(2..=5);
        let d = random_params(r, n);
        let m = r.gen_range(1..=4);
        let v1 = random_profile(r, n, m);
        let p1 = aggregate_exact(&d, &v1).unwrap().minimizers;
        let v2 = if r.gen_bool(0.6) {
            Profile::new(n, vec![(r.gen_range(1..=3), p1.choose(r).unwrap().clone())]).unwrap()
        } else {
            random_profile(r, n, m)
        };
        let p2: BTreeSet<Permutation> = aggregate_exact(&d, &v2).unwrap().minimizers.into_iter().collect();
        let both: BTreeSet<Permutation> = p1.into_iter().filter(|s| p2.contains(s)).collect();
        let joint: BTreeSet<Permutation> = aggregate_exact(&d, &v1.concat(&v2).unwrap()).unwrap().minimizers.into_iter().collect();
        holds(&d, &v1, Property::Reinforcing, Some(&v2)) && (both.is_empty() || joint == both)
    });
    let e = suite("10d", "blockwise Pareto", 200, |r| {
        let n = r.gen_range(2..=6);
        let d = counting(random_params(r, n).beta().clone());
        let k = r.gen_range(1..=n);
        let base = random_perm(r, n);
        let m = r.gen_range(1..=5);
        let v = Profile::from_rankings((0..m).map(|_| within_blocks(r, &base, &[k, n])).collect()).unwrap();
        holds(&d, &v, Property::BlockwisePareto, None)
    });
    let f = suite("10e", "partitionwise Pareto", 200, |r| {
        let n = r.gen_range(2..=6);
        let d = counting(random_params(r, n).beta().clone());
        let mut cuts: Vec<usize> = (1..n).filter(|_| r.gen_bool(0.4)).collect();
        cuts.push(n);
        let base = random_perm(r, n);
        let m = r.gen_range(1..=5);
        let v = Profile::from_rankings((0..m).map(|_| within_blocks(r, &base, &cuts)).collect()).unwrap();
        holds(&d, &v, Property::PartitionwisePareto, None)
    });
    assert!(a && b && c && e && f);
}
