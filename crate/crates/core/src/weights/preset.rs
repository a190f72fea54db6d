use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::{f_beta_values, BetaWeights, DistanceParams, Measure};

/// Named weight families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    /// `β = (1, 0, …, 0)`.
    Kendall,
    /// All ones.
    OkNishimura,
    /// Ones on menus of size `<= cutoff`, zeros above.
    Gilbert { cutoff: usize },
    /// `β_k = (α − 1)^{k−2}`, `α > 1`.
    UnavailableCandidate { alpha: BigRational },
    /// `β_k = k`.
    Linear,
    /// `β_k = p^{n−k} (1 − p)^k`, `0 < p < 1`.
    Binomial { p: BigRational },
}

impl Preset {
    pub fn parse(name: &str, param: Option<&str>) -> Result<Preset> {
        let rational = |what: &str| -> Result<BigRational> {
            let s = param.ok_or_else(|| Error::InvalidParameter(format!("preset `{name}` needs {what}")))?;
            parse_rational(s).ok_or_else(|| Error::InvalidParameter(format!("`{s}` is not a rational")))
        };
        let preset = match name {
            "kendall" => Preset::Kendall,
            "ok-nishimura" | "ones" => Preset::OkNishimura,
            "linear" => Preset::Linear,
            "gilbert" => {
                let c = rational("a cutoff")?;
                if !c.is_integer() || c < BigRational::from_integer(2.into()) {
                    return Err(Error::InvalidParameter(format!("gilbert cutoff must be an integer >= 2, got {c}")));
                }
                let cutoff = c.to_integer().try_into().map_err(|_| Error::InvalidParameter("cutoff too large".into()))?;
                Preset::Gilbert { cutoff }
            }
            "unavailable-candidate" => {
                let alpha = rational("α")?;
                if alpha <= BigRational::one() {
                    return Err(Error::InvalidParameter(format!("α must exceed 1, got {alpha}")));
                }
                Preset::UnavailableCandidate { alpha }
            }
            "binomial" => {
                let p = rational("p")?;
                if !(p > BigRational::zero() && p < BigRational::one()) {
                    return Err(Error::InvalidParameter(format!("p must lie in (0, 1), got {p}")));
                }
                Preset::Binomial { p }
            }
            other => return Err(Error::UnknownPreset(other.to_owned())),
        };
        Ok(preset)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Kendall => "kendall",
            Preset::OkNishimura => "ok-nishimura",
            Preset::Gilbert { .. } => "gilbert",
            Preset::UnavailableCandidate { .. } => "unavailable-candidate",
            Preset::Linear => "linear",
            Preset::Binomial { .. } => "binomial",
        }
    }

    pub fn beta_exact(&self, n: usize) -> Result<BetaWeights<BigRational>> {
        let int = |v: i64| BigRational::from_integer(v.into());
        BetaWeights::from_fn(n, |k| match self {
            Preset::Kendall => int((k == 2) as i64),
            Preset::OkNishimura => int(1),
            Preset::Gilbert { cutoff } => int((k <= *cutoff) as i64),
            Preset::UnavailableCandidate { alpha } => (alpha - BigRational::one()).pow((k - 2) as i32),
            Preset::Linear => int(k as i64),
            Preset::Binomial { p } => p.clone().pow((n - k) as i32) * (BigRational::one() - p).pow(k as i32),
        })
    }

    pub fn beta<T: Scalar>(&self, n: usize) -> Result<BetaWeights<T>> {
        let exact = self.beta_exact(n)?;
        BetaWeights::new(exact.values().iter().map(convert).collect::<Result<Vec<T>>>()?)
    }
}

/// Builds the named `(β, μ)` pair at dimension `n` with the counting measure.
pub fn preset<T: Scalar>(name: &str, n: usize, param: Option<&str>) -> Result<(BetaWeights<T>, Measure<T>)> {
    let p = Preset::parse(name, param)?;
    Ok((p.beta(n)?, Measure::counting(n)))
}

/// The n-independent bound on `γ_β` for the families that have one:
/// 2 (Kendall), 3/2 (all ones and `β_k = k`) and `1 + p` (binomial).
pub fn footrule_bound(preset: &Preset) -> Option<BigRational> {
    let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
    match preset {
        Preset::Kendall => Some(r(2, 1)),
        Preset::OkNishimura | Preset::Linear => Some(r(3, 2)),
        Preset::Binomial { p } => Some(BigRational::one() + p),
        _ => None,
    }
}

/// `γ_β = max_{h ∈ [n]} (1 + f_β(n−h) / f_β(n−h+1))`. The `h = 1` term
/// reaches `f_β(n)`, one step past the distance table.
pub fn gamma<T: Scalar>(beta: &BetaWeights<T>) -> Result<T> {
    if !beta.is_nonnegative() {
        return Err(Error::InvalidParameter("γ needs β >= 0".into()));
    }
    if *beta.get(2) <= T::zero() {
        return Err(Error::InvalidParameter("γ needs β_2 > 0".into()));
    }
    let n = beta.n();
    let f = f_beta_values(beta, n);
    let mut best = T::one();
    for h in 1..=n {
        let g = T::one() + f[n - h].clone() / f[n - h + 1].clone();
        if g > best {
            best = g;
        }
    }
    Ok(best)
}

/// Parses an integer or `p/q` token.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a = BigInt::from_str(a.trim()).ok()?;
        let b = BigInt::from_str(b.trim()).ok()?;
        if b.is_zero() {
            return None;
        }
        Some(BigRational::new(a, b))
    } else {
        BigInt::from_str(s).ok().map(BigRational::from_integer)
    }
}

fn convert<T: Scalar>(r: &BigRational) -> Result<T> {
    T::from_ratio(r).ok_or_else(|| Error::Unrepresentable(r.to_string()))
}

/// Contents of a params file: explicit `beta:`/`mu:` lines or a
/// `preset: <name> [param]` line with an optional `mu:` override.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamsSpec {
    pub beta: Option<Vec<BigRational>>,
    pub preset: Option<Preset>,
    pub mu: Option<Vec<BigRational>>,
}

impl ParamsSpec {
    pub fn parse(text: &str) -> Result<ParamsSpec> {
        let mut spec = ParamsSpec { beta: None, preset: None, mu: None };
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let ln = i + 1;
            let (key, rest) = line
                .split_once(':')
                .ok_or(Error::Parse { line: ln, msg: "expected `beta:`, `mu:` or `preset:`".into() })?;
            let tokens = || -> Result<Vec<BigRational>> {
                rest.split_whitespace()
                    .map(|t| parse_rational(t).ok_or(Error::Parse { line: ln, msg: format!("`{t}` is not a rational") }))
                    .collect()
            };
            match key.trim() {
                "beta" => spec.beta = Some(tokens()?),
                "mu" => spec.mu = Some(tokens()?),
                "preset" => {
                    let mut it = rest.split_whitespace();
                    let name = it.next().ok_or(Error::Parse { line: ln, msg: "missing preset name".into() })?;
                    spec.preset = Some(Preset::parse(name, it.next())?);
                }
                other => return Err(Error::Parse { line: ln, msg: format!("unknown key `{other}`") }),
            }
        }
        match (&spec.beta, &spec.preset) {
            (Some(_), Some(_)) => Err(Error::Parse { line: 1, msg: "give either `beta:` or `preset:`, not both".into() }),
            (None, None) => Err(Error::Parse { line: 1, msg: "missing `beta:` or `preset:`".into() }),
            _ => Ok(spec),
        }
    }

    /// Dimension fixed by the file itself, if any.
    pub fn dimension(&self) -> Option<usize> {
        self.beta.as_ref().map(|b| b.len() + 1).or(self.mu.as_ref().map(Vec::len))
    }

    pub fn weights<T: Scalar>(&self, n: usize) -> Result<(BetaWeights<T>, Measure<T>)> {
        let beta: BetaWeights<T> = match (&self.beta, &self.preset) {
            (Some(b), _) => BetaWeights::new(b.iter().map(convert).collect::<Result<_>>()?)?,
            (None, Some(p)) => p.beta(n)?,
            (None, None) => unreachable!("rejected by parse"),
        };
        if beta.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: beta.n() });
        }
        let mu = match &self.mu {
            Some(m) => Measure::new(m.iter().map(convert).collect::<Result<_>>()?)?,
            None => Measure::counting(n),
        };
        if mu.n() != n {
            return Err(Error::DimensionMismatch { expected: n, found: mu.n() });
        }
        Ok((beta, mu))
    }

    pub fn params<T: Scalar>(&self, n: usize) -> Result<DistanceParams<T>> {
        let (b, m) = self.weights(n)?;
        DistanceParams::new(b, m)
    }
}
