//! Binary program for the median problem over order variables `P_i_j`
//! (`i` above `j`) and linearization indicators `Q_v_i_r_s`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::ranking::Permutation;
use crate::scalar::{two, Scalar};
use crate::weights::DistanceParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
}

/// `Σ coef · x  (<= | =)  rhs` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<(usize, i64)>,
    pub sense: Sense,
    pub rhs: i64,
}

impl Constraint {
    fn holds(&self, x: &[u8]) -> bool {
        let lhs: i64 = self.terms.iter().map(|&(v, c)| c * x[v] as i64).sum();
        match self.sense {
            Sense::Le => lhs <= self.rhs,
            Sense::Eq => lhs == self.rhs,
        }
    }
}

#[derive(Clone, Debug)]
pub struct IlpModel<T> {
    pub n: usize,
    /// Number of distinct ballots; each carries its multiplicity in the objective.
    pub ballots: usize,
    pub names: Vec<String>,
    /// Objective coefficient of every variable (zero for `P`).
    pub objective: Vec<T>,
    pub constraints: Vec<Constraint>,
    /// The first `order_rows` constraints are the linear-order system.
    pub order_rows: usize,
    ballot_orders: Vec<Permutation>,
}

impl<T: Scalar> IlpModel<T> {
    pub fn p_index(&self, i: usize, j: usize) -> usize {
        i * self.n + j
    }

    /// Index of `Q^{v,i}_{r,s}`; `v`, `i` 0-based, `r, s` in `0..n`.
    pub fn q_index(&self, v: usize, i: usize, r: usize, s: usize) -> usize {
        let n = self.n;
        n * n + ((v * n + i) * n + r) * n + s
    }

    pub fn variable_count(&self) -> usize {
        self.names.len()
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// The 0/1 point induced by `σ`: `P = P^σ` and the matching indicators.
    pub fn assignment(&self, sigma: &Permutation) -> Vec<u8> {
        let n = self.n;
        let mut x = vec![0u8; self.variable_count()];
        for i in 0..n {
            for j in 0..n {
                if i != j && sigma.prefers(i, j) {
                    x[self.p_index(i, j)] = 1;
                }
            }
        }
        for (v, ballot) in self.ballot_orders.iter().enumerate() {
            for i in 0..n {
                let (r, s) = split_counts(sigma, ballot, i);
                x[self.q_index(v, i, r, s)] = 1;
            }
        }
        x
    }

    pub fn is_feasible(&self, x: &[u8]) -> bool {
        self.constraints.iter().all(|c| c.holds(x))
    }

    /// Whether the `P` block alone satisfies the linear-order system.
    pub fn order_system_holds(&self, p: &[Vec<u8>]) -> bool {
        let mut x = vec![0u8; self.variable_count()];
        for i in 0..self.n {
            for j in 0..self.n {
                x[self.p_index(i, j)] = p[i][j];
            }
        }
        self.constraints[..self.order_rows].iter().all(|c| c.holds(&x))
    }

    pub fn objective_value(&self, x: &[u8]) -> T {
        self.objective
            .iter()
            .zip(x)
            .filter(|(_, &b)| b == 1)
            .fold(T::zero(), |acc, (c, _)| acc + c.clone())
    }

    /// Objective at the point induced by `σ`, touching only the active `Q`.
    pub fn objective_at(&self, sigma: &Permutation) -> T {
        let mut total = T::zero();
        for (v, ballot) in self.ballot_orders.iter().enumerate() {
            for i in 0..self.n {
                let (r, s) = split_counts(sigma, ballot, i);
                total = total + self.objective[self.q_index(v, i, r, s)].clone();
            }
        }
        total
    }

    /// CPLEX-LP text. Exact objectives are multiplied by the least common
    /// denominator so every coefficient is an integer.
    pub fn to_lp(&self) -> String {
        let ratios: Option<Vec<_>> = self.objective.iter().map(Scalar::to_ratio).collect();
        let mut out = String::new();
        writeln!(out, "\\ median ranking program: n = {}, ballots = {}", self.n, self.ballots).unwrap();
        let coefs: Vec<String> = match ratios {
            Some(rs) => {
                let scale = rs.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                writeln!(out, "\\ objective multiplied by {scale}").unwrap();
                rs.iter().map(|r| (r.numer() * (&scale / r.denom())).to_string()).collect()
            }
            None => self.objective.iter().map(ToString::to_string).collect(),
        };
        out.push_str("Minimize\n obj:");
        let mut written = 0;
        for (v, c) in coefs.iter().enumerate() {
            if c == "0" {
                continue;
            }
            push_term(&mut out, c, &self.names[v], written == 0);
            written += 1;
            if written % 8 == 0 {
                out.push_str("\n     ");
            }
        }
        if written == 0 {
            write!(out, " 0 {}", self.names[0]).unwrap();
        }
        out.push_str("\nSubject To\n");
        for c in &self.constraints {
            write!(out, " {}:", c.name).unwrap();
            for (k, &(v, coef)) in c.terms.iter().enumerate() {
                push_term(&mut out, &coef.to_string(), &self.names[v], k == 0);
            }
            let op = match c.sense {
                Sense::Le => "<=",
                Sense::Eq => "=",
            };
            writeln!(out, " {op} {}", c.rhs).unwrap();
        }
        out.push_str("Binary\n");
        for chunk in self.names.chunks(10) {
            writeln!(out, " {}", chunk.join(" ")).unwrap();
        }
        out.push_str("End\n");
        out
    }
}

fn push_term(out: &mut String, coef: &str, name: &str, first: bool) {
    let (neg, mag) = match coef.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, coef),
    };
    let sign = match (first, neg) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => "+ ",
        (false, true) => "- ",
    };
    if mag == "1" {
        write!(out, " {sign}{name}").unwrap();
    } else {
        write!(out, " {sign}{mag} {name}").unwrap();
    }
}

/// `(r, s)`: how many candidates `σ` puts below `i` among those the ballot
/// puts above `i` (`r`) and below `i` (`s`).
fn split_counts(sigma: &Permutation, ballot: &Permutation, i: usize) -> (usize, usize) {
    let n = sigma.n();
    let (mut r, mut s) = (0, 0);
    for j in 0..n {
        if j != i && sigma.prefers(i, j) {
            if ballot.prefers(i, j) {
                s += 1;
            } else {
                r += 1;
            }
        }
    }
    (r, s)
}

/// Builds the full program: the order system on `P` and, for every ballot
/// `v`, candidate `i` and pair `(r, s)`, the four linking rows (scaled by
/// `n`) plus one selection row per `(v, i)`.
pub fn ilp_export<T: Scalar>(params: &DistanceParams<T>, profile: &Profile) -> Result<IlpModel<T>> {
    let n = params.n();
    if profile.n() != n {
        return Err(Error::DimensionMismatch { expected: n, found: profile.n() });
    }
    let m = profile.entries().len();
    let ni = n as i64;
    let mut names = Vec::with_capacity(n * n + m * n * n * n);
    for i in 0..n {
        for j in 0..n {
            names.push(format!("P_{}_{}", i + 1, j + 1));
        }
    }
    for v in 0..m {
        for i in 0..n {
            for r in 0..n {
                for s in 0..n {
                    names.push(format!("Q_{}_{}_{}_{}", v + 1, i + 1, r, s));
                }
            }
        }
    }
    let mut model = IlpModel {
        n,
        ballots: m,
        objective: vec![T::zero(); names.len()],
        names,
        constraints: Vec::new(),
        order_rows: 0,
        ballot_orders: profile.entries().iter().map(|(_, v)| v.clone()).collect(),
    };

    let mut rows = Vec::new();
    for i in 0..n {
        rows.push(Constraint {
            name: format!("diag_{}", i + 1),
            terms: vec![(model.p_index(i, i), 1)],
            sense: Sense::Eq,
            rhs: 0,
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            rows.push(Constraint {
                name: format!("comp_{}_{}", i + 1, j + 1),
                terms: vec![(model.p_index(i, j), 1), (model.p_index(j, i), 1)],
                sense: Sense::Eq,
                rhs: 1,
            });
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                rows.push(Constraint {
                    name: format!("trans_{}_{}_{}", i + 1, j + 1, k + 1),
                    terms: vec![(model.p_index(i, j), 1), (model.p_index(j, k), 1), (model.p_index(i, k), -1)],
                    sense: Sense::Le,
                    rhs: 1,
                });
            }
        }
    }
    model.order_rows = rows.len();

    for (v, (mult, ballot)) in profile.entries().iter().enumerate() {
        let weight = T::from_u64(*mult);
        for i in 0..n {
            let above: Vec<usize> = (0..n).filter(|&j| !ballot.prefers(i, j)).collect();
            let below: Vec<usize> = (0..n).filter(|&j| j != i && ballot.prefers(i, j)).collect();
            let mut pick = Vec::with_capacity(n * n);
            for r in 0..n {
                for s in 0..n {
                    let q = model.q_index(v, i, r, s);
                    pick.push((q, 1));
                    let coef = (params.f(r + s).clone() - two::<T>() * params.f(s).clone())
                        * params.mu().get(i).clone()
                        * weight.clone();
                    model.objective[q] = coef;
                    for (tag, group, count) in [("a", &above, r as i64), ("b", &below, s as i64)] {
                        for (dir, sign) in [("lo", -1i64), ("hi", 1)] {
                            let mut terms = vec![(q, ni)];
                            terms.extend(group.iter().map(|&j| (model.p_index(i, j), sign)));
                            rows.push(Constraint {
                                name: format!("link{tag}{dir}_{}_{}_{}_{}", v + 1, i + 1, r, s),
                                terms,
                                sense: Sense::Le,
                                rhs: ni + sign * count,
                            });
                        }
                    }
                }
            }
            rows.push(Constraint { name: format!("pick_{}_{}", v + 1, i + 1), terms: pick, sense: Sense::Eq, rhs: 1 });
        }
    }
    model.constraints = rows;
    Ok(model)
}

/// Objective of the program at the point induced by `σ`. Equals
/// `d(σ, V) − Σ_v Σ_i f(|i↓v|) μ(i)`.
pub fn ilp_objective_eval<T: Scalar>(params: &DistanceParams<T>, profile: &Profile, sigma: &Permutation) -> Result<T> {
    let model = ilp_export(params, profile)?;
    if sigma.n() != model.n {
        return Err(Error::DimensionMismatch { expected: model.n, found: sigma.n() });
    }
    Ok(model.objective_at(sigma))
}
