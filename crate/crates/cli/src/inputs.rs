//! Reading profiles and weights from the command line.

use std::path::Path;

use topdiff::aggregation::BetaRule;
use topdiff::weights::{parse_rational, ParamsSpec};
use topdiff::{BetaWeights, ExactParams, Measure, Permutation, Preset, Profile, Rational};

pub type Outcome<T> = std::result::Result<T, String>;

fn read(what: &str, path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read {what} `{}`: {e}", path.display()))
}

pub fn load_profile(path: &Path) -> Outcome<Profile> {
    let text = read("profile", path)?;
    Profile::parse(&text).map_err(|e| format!("malformed profile `{}`: {e}", path.display()))
}

pub fn rational(what: &str, s: &str) -> Outcome<Rational> {
    parse_rational(s).ok_or_else(|| format!("{what} `{s}` is not an integer or p/q rational"))
}

pub fn ranking(what: &str, s: &str) -> Outcome<Permutation> {
    Permutation::parse(s).map_err(|e| format!("ranking --{what}: {e}"))
}

/// A params file when the path exists, otherwise `name[:param]`.
pub fn params_spec(arg: &str, mu: Option<&str>) -> Outcome<ParamsSpec> {
    let path = Path::new(arg);
    let mut spec = if path.is_file() {
        let text = read("params file", path)?;
        ParamsSpec::parse(&text).map_err(|e| format!("invalid params file `{arg}`: {e}"))?
    } else {
        let (name, param) = match arg.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (arg, None),
        };
        let preset = Preset::parse(name, param)
            .map_err(|e| format!("invalid params `{arg}` (neither a readable file nor a preset): {e}"))?;
        ParamsSpec { beta: None, preset: Some(preset), mu: None }
    };
    if let Some(m) = mu {
        let vals = m.split_whitespace().map(|t| rational("μ entry", t)).collect::<Outcome<Vec<_>>>()?;
        spec.mu = Some(vals);
    }
    Ok(spec)
}

pub fn exact_params(spec: &ParamsSpec, n: usize) -> Outcome<ExactParams> {
    spec.params(n).map_err(|e| format!("invalid params for n = {n}: {e}"))
}

/// Dimension from `--n`, falling back to the params themselves.
pub fn dimension(spec: &ParamsSpec, n: Option<usize>) -> Outcome<usize> {
    n.or(spec.dimension()).ok_or_else(|| "this preset needs --n".to_owned())
}

pub fn rule(name: &str, explicit: Option<&ParamsSpec>, n: Option<usize>) -> Outcome<BetaRule> {
    let (head, param) = match name.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (name, None),
    };
    match (head, param) {
        ("plus-one", None) => Ok(BetaRule::PlusOne),
        ("alternating", None) => Ok(BetaRule::Alternating),
        ("exponential", Some(a)) => Ok(BetaRule::Exponential { alpha: rational("α", a)? }),
        ("explicit", None) => {
            let spec = explicit.ok_or("explicit rule needs --params")?;
            let n = dimension(spec, n)?;
            let beta: BetaWeights<Rational> = spec.weights(n).map_err(|e| format!("invalid params: {e}"))?.0;
            Ok(BetaRule::Explicit(beta))
        }
        _ => Err(format!("unknown rule `{name}`; expected plus-one, alternating, exponential:α or explicit")),
    }
}

/// `(a,b,c)` with profile labels when present, 1-based numbers otherwise.
pub fn show(profile: &Profile, sigma: &Permutation) -> String {
    if profile.labels().is_none() {
        return sigma.to_string();
    }
    let names: Vec<String> = sigma.as_slice().iter().map(|&c| profile.label(c)).collect();
    format!("({})", names.join(","))
}

pub fn measure_ratio(mu: &Measure<Rational>) -> Outcome<Rational> {
    let u = mu.min();
    if u <= Rational::from_integer(0.into()) {
        return Err("the U/u factor needs μ > 0".to_owned());
    }
    Ok(mu.max() / u)
}
