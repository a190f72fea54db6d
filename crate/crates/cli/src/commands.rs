use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use topdiff::aggregation::{
    aggregate_exact_threads, aggregate_footrule, aggregate_myopic, ilp_export, ptas_depth, ptas_depth_finite,
    guarantee_inv_epsilon, BetaRule,
};
use topdiff::audit::{check_axiom, check_property, Axiom, Property, Verdict};
use topdiff::distance::{dist_fast, dist_naive, footrule_params};
use topdiff::weights::{footrule_bound, gamma};
use topdiff::{classify, BetaWeights, DistanceParams, ExactParams, Measure, Permutation, Profile, Rational};

use crate::inputs::{
    dimension, exact_params, load_profile, measure_ratio, params_spec, ranking, rational, rule, show, Outcome,
};
use crate::{Cli, Command, MethodArg, ParamArgs, Report};

fn resolve(p: &ParamArgs, n: usize) -> Outcome<ExactParams> {
    exact_params(&params_spec(&p.params, p.mu.as_deref())?, n)
}

fn core<T>(r: topdiff::Result<T>) -> Outcome<T> {
    r.map_err(|e| e.to_string())
}

pub fn execute(cli: &Cli) -> Outcome<Report> {
    match &cli.command {
        Command::Dist { params, a, b, naive } => {
            let (a, b) = (ranking("a", a)?, ranking("b", b)?);
            let d = resolve(params, a.n())?;
            let v = if *naive { core(dist_naive(&d, &a, &b))? } else { core(dist_fast(&d, &a, &b))? };
            Ok(Report::ok(format!("{v}\n")))
        }
        Command::Footrule { params, a, b } => {
            let (a, b) = (ranking("a", a)?, ranking("b", b)?);
            let d = resolve(params, a.n())?;
            Ok(Report::ok(format!("{}\n", core(footrule_params(&d, &a, &b))?)))
        }
        Command::Gamma { params, n } => gamma_report(params, *n),
        Command::Classify { params, n } => {
            let spec = params_spec(&params.params, params.mu.as_deref())?;
            let d = exact_params(&spec, dimension(&spec, *n)?)?;
            Ok(Report::ok(format!("classification: {}\n", classify(d.beta(), d.mu()))))
        }
        Command::Aggregate { params, profile, method, k, epsilon } => {
            let profile = load_profile(profile)?;
            let d = resolve(params, profile.n())?;
            aggregate(&d, &profile, *method, *k, epsilon.as_deref(), cli.threads)
        }
        Command::PtasDepth { rule: name, epsilon, guarantee, ratio, params, n } => {
            let eps = rational("ε", epsilon)?;
            if eps <= Rational::from_integer(0.into()) {
                return Err(format!("ε must be positive, got {eps}"));
            }
            let spec = params_spec(&params.params, params.mu.as_deref())?;
            let rule = rule(name, Some(&spec), *n)?;
            let mut inv = Rational::from_integer(1.into()) / &eps;
            if *guarantee {
                inv *= Rational::from_integer(12.into()) * rational("ratio", ratio)?;
            }
            let k = match &rule {
                BetaRule::Explicit(b) => core(ptas_depth_finite(&rule, &inv, b.n()))?,
                _ => core(ptas_depth(&rule, &inv, None))?,
            };
            Ok(Report::ok(format!("{k}\n")))
        }
        Command::IlpExport { params, profile } => {
            let profile = load_profile(profile)?;
            let d = resolve(params, profile.n())?;
            Ok(Report::ok(core(ilp_export(&d, &profile))?.to_lp()))
        }
        Command::Check { params, axiom, property, profile, second, n } => {
            let spec = params_spec(&params.params, params.mu.as_deref())?;
            let report = if let Some(a) = axiom {
                let axiom: Axiom = core(a.parse())?;
                let n = match profile {
                    Some(p) => load_profile(p)?.n(),
                    None => dimension(&spec, *n)?,
                };
                core(check_axiom(&exact_params(&spec, n)?, axiom))?
            } else {
                let property: Property = core(property.as_deref().unwrap_or_default().parse())?;
                let path = profile.as_ref().ok_or("checking a property needs --profile")?;
                let v = load_profile(path)?;
                let w = second.as_deref().map(load_profile).transpose()?;
                core(check_property(&exact_params(&spec, v.n())?, &v, property, w.as_ref()))?
            };
            let code = if report.verdict == Verdict::Fails { 1 } else { 0 };
            Ok(Report { text: format!("{report}\n"), code })
        }
        Command::VerifyOracle { n, trials, seed, params } => verify_oracle(*n, *trials, *seed, params.as_deref()),
        Command::Bench { params, n, m, trials, seed, k } => bench(params, *n, *m, *trials, *seed, *k),
    }
}

fn gamma_report(params: &ParamArgs, n: Option<usize>) -> Outcome<Report> {
    let spec = params_spec(&params.params, params.mu.as_deref())?;
    let d = exact_params(&spec, dimension(&spec, n)?)?;
    let g = core(gamma(d.beta()))?;
    let mut out = format!("gamma: {g}\n");
    if !d.mu().is_constant() {
        let r = measure_ratio(d.mu())?;
        writeln!(out, "U/u: {r}\nweighted factor: {}", &g * &r).unwrap();
    }
    if let Some(c) = spec.preset.as_ref().and_then(footrule_bound) {
        writeln!(out, "closed-form bound: {c}").unwrap();
    }
    Ok(Report::ok(out))
}

fn aggregate(
    d: &ExactParams,
    profile: &Profile,
    method: MethodArg,
    k: Option<usize>,
    epsilon: Option<&str>,
    threads: usize,
) -> Outcome<Report> {
    let mut out = String::new();
    let result = match method {
        MethodArg::Exact => core(aggregate_exact_threads(d, profile, threads.max(1)))?,
        MethodArg::Footrule => core(aggregate_footrule(d.beta(), d.mu(), profile))?,
        MethodArg::Myopic => {
            let k = match (k, epsilon) {
                (Some(k), _) => k,
                (None, Some(e)) => {
                    let inv = core(guarantee_inv_epsilon(d.mu(), &rational("ε", e)?))?;
                    core(ptas_depth_finite(&BetaRule::Explicit(d.beta().clone()), &inv, d.n()))?
                }
                (None, None) => return Err("MyopicTop needs --k or --epsilon".to_owned()),
            };
            writeln!(out, "K: {k}").unwrap();
            core(aggregate_myopic(d, profile, k))?
        }
    };
    writeln!(out, "method: {}", result.method).unwrap();
    match &result.certificate {
        None => writeln!(out, "optimum: {}", result.optimum).unwrap(),
        Some(c) => writeln!(out, "surrogate: {}\ncost: {c}", result.optimum).unwrap(),
    }
    writeln!(out, "minimizers: {}", result.minimizers.len()).unwrap();
    for s in &result.minimizers {
        writeln!(out, "{}", show(profile, s)).unwrap();
    }
    let winners: Vec<String> = result.winners.iter().map(|&c| profile.label(c)).collect();
    writeln!(out, "winners: {}", winners.join(" ")).unwrap();
    Ok(Report::ok(out))
}

fn random_rational(r: &mut ChaCha8Rng) -> Rational {
    Rational::new(r.gen_range(0..10).into(), r.gen_range(1..5).into())
}

fn random_params(r: &mut ChaCha8Rng, n: usize) -> ExactParams {
    let beta = BetaWeights::new((2..=n).map(|_| random_rational(r)).collect()).expect("n >= 1");
    let mu = Measure::new((0..n).map(|_| random_rational(r)).collect()).expect("n >= 1");
    DistanceParams::new(beta, mu).expect("matching dimensions")
}

fn random_perm(r: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(r);
    Permutation::new(v).expect("shuffle of 0..n")
}

fn verify_oracle(n: usize, trials: usize, seed: u64, params: Option<&str>) -> Outcome<Report> {
    if n == 0 {
        return Err("--n must be positive".to_owned());
    }
    let fixed = params.map(|p| exact_params(&params_spec(p, None)?, n)).transpose()?;
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = 0;
    let mut first = None;
    for _ in 0..trials {
        let d = fixed.clone().unwrap_or_else(|| random_params(&mut r, n));
        let (a, b) = (random_perm(&mut r, n), random_perm(&mut r, n));
        let (fast, naive) = (core(dist_fast(&d, &a, &b))?, core(dist_naive(&d, &a, &b))?);
        if fast == naive {
            ok += 1;
        } else if first.is_none() {
            first = Some(format!("{a} {b}: closed form {fast}, menu sum {naive}"));
        }
    }
    match first {
        None => Ok(Report::ok(format!("OK {ok}/{trials}\n"))),
        Some(w) => Ok(Report { text: format!("MISMATCH {ok}/{trials}\nfirst: {w}\n"), code: 1 }),
    }
}

#[derive(Default)]
struct Ratios {
    worst: Option<Rational>,
    sum: Rational,
    optimal: usize,
    counted: usize,
}

impl Ratios {
    fn push(&mut self, cost: &Rational, opt: &Rational) {
        let zero = Rational::from_integer(0.into());
        if *opt == zero {
            if *cost == zero {
                self.record(Rational::from_integer(1.into()));
            }
            return;
        }
        self.record(cost / opt);
    }

    fn record(&mut self, q: Rational) {
        if q == Rational::from_integer(1.into()) {
            self.optimal += 1;
        }
        self.sum += &q;
        self.counted += 1;
        if self.worst.as_ref().is_none_or(|w| q > *w) {
            self.worst = Some(q);
        }
    }

    fn row(&self, name: &str) -> String {
        let worst = self.worst.as_ref().map_or("-".to_owned(), ToString::to_string);
        let mean = if self.counted == 0 {
            "-".to_owned()
        } else {
            (&self.sum / Rational::from_integer(self.counted.into())).to_string()
        };
        format!("{name:<10} {worst:<12} {mean:<24} {}/{}", self.optimal, self.counted)
    }
}

fn bench(params: &ParamArgs, n: usize, m: u64, trials: usize, seed: u64, k: usize) -> Outcome<Report> {
    if m == 0 || n == 0 {
        return Err("--n and --m must be positive".to_owned());
    }
    let d = resolve(params, n)?;
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let (mut foot, mut myopic) = (Ratios::default(), Ratios::default());
    for _ in 0..trials {
        let ballots = (0..m).map(|_| random_perm(&mut r, n)).collect();
        let v = core(Profile::from_rankings(ballots))?;
        let opt = core(aggregate_exact_threads(&d, &v, 1))?.optimum;
        let f = core(aggregate_footrule(d.beta(), d.mu(), &v))?;
        foot.push(f.certificate.as_ref().expect("footrule certifies"), &opt);
        let g = core(aggregate_myopic(&d, &v, k))?;
        myopic.push(g.certificate.as_ref().expect("myopic certifies"), &opt);
    }
    let mut out = format!("bench: n = {n}, m = {m}, trials = {trials}, seed = {seed}, params = {}\n", params.params);
    writeln!(out, "gamma: {}", core(gamma(d.beta()))?).unwrap();
    writeln!(out, "{:<10} {:<12} {:<24} optimal", "method", "worst", "mean").unwrap();
    writeln!(out, "{}", foot.row("footrule")).unwrap();
    writeln!(out, "{}", myopic.row(&format!("myopic:{k}"))).unwrap();
    Ok(Report::ok(out))
}
