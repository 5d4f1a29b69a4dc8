//! Closed-form factorizations for three and four branch points.
//!
//! Four-point factorizations come in two families, distinguished by whether
//! `σ_3σ_4` has at most one nontrivial cycle (case I, parameters `k, ℓ`) or
//! exactly two (case II, parameters `k, m`). Points are 1-based here, as in
//! the formulas.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::braid::{pure_braid_generator, Letter};
use crate::error::{Error, Result};
use crate::factorization::{canonical_form, cycle_pair_decompose, Factorization, HurwitzProblem};
use crate::perm::Permutation;

/// `i, i+1, …, j`; empty when `j = i - 1`.
fn asc(i: i64, j: i64) -> Result<Vec<i64>> {
    if j < i - 1 {
        return Err(Error::InvariantViolation(format!(
            "ascending run {i}..{j} has negative length"
        )));
    }
    Ok((i..=j).collect())
}

/// `i, i-1, …, j`; empty when `j = i + 1`.
fn desc(i: i64, j: i64) -> Result<Vec<i64>> {
    if j > i + 1 {
        return Err(Error::InvariantViolation(format!(
            "descending run {i}..{j} has negative length"
        )));
    }
    Ok((j..=i).rev().collect())
}

fn cycle(d: usize, parts: &[Vec<i64>], expected: usize) -> Result<Permutation> {
    let points: Vec<usize> = parts
        .iter()
        .flatten()
        .map(|&x| {
            usize::try_from(x)
                .map_err(|_| Error::InvariantViolation(format!("point {x} out of range")))
        })
        .collect::<Result<_>>()?;
    if points.len() != expected {
        return Err(Error::InvariantViolation(format!(
            "constructed cycle {points:?} has length {}, expected {expected}",
            points.len()
        )));
    }
    Permutation::from_cycles(&[points], d)
}

/// The factorization of the unique class with three branch points:
/// `σ_1 = (d-e_2, …, 1, e_3, …, d)`, `σ_2 = (d, …, d-e_2+1)`,
/// `σ_3 = (1, …, e_3)`.
pub fn three_point_factorization(
    d: usize,
    e1: usize,
    e2: usize,
    e3: usize,
) -> Result<Factorization> {
    let problem = HurwitzProblem::genus_zero(d, vec![e1, e2, e3])?;
    let (d_, e2_, e3_) = (d as i64, e2 as i64, e3 as i64);
    let s1 = cycle(d, &[desc(d_ - e2_, 1)?, asc(e3_, d_)?], e1)?;
    let s2 = cycle(d, &[desc(d_, d_ - e2_ + 1)?], e2)?;
    let s3 = cycle(d, &[asc(1, e3_)?], e3)?;
    Factorization::new(problem, vec![s1, s2, s3])
}

/// A genus-0 problem with four branch points and `e_1 <= … <= e_4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourPointProblem {
    pub d: usize,
    pub e: [usize; 4],
}

impl FourPointProblem {
    pub fn new(d: usize, e: [usize; 4]) -> Result<Self> {
        if !e.windows(2).all(|w| w[0] <= w[1]) {
            return Err(Error::InvalidProblem(format!("e = {e:?} is not ascending")));
        }
        if e[0] < 2 || e[3] > d {
            return Err(Error::InvalidProblem(format!(
                "need 2 <= e_i <= d, got {e:?} with d = {d}"
            )));
        }
        if e.iter().map(|x| x - 1).sum::<usize>() + 2 != 2 * d {
            return Err(Error::InvalidProblem(format!(
                "e = {e:?} violates Riemann-Hurwitz for d = {d}"
            )));
        }
        let [e1, e2, e3, e4] = e;
        let ok = e1 + e3 <= d + 1 && e2 + e4 > d && e1 + e2 <= d + 1 && e3 + e4 > d;
        if !ok {
            return Err(Error::InvariantViolation(format!(
                "derived inequalities fail for {e:?}, d = {d}"
            )));
        }
        Ok(FourPointProblem { d, e })
    }

    pub fn from_problem(problem: &HurwitzProblem) -> Result<Self> {
        if problem.r() != 4 || problem.genus() != 0 || problem.simple_count() != 0 {
            return Err(Error::NotApplicable(format!(
                "{problem} is not a genus-0 four-point problem"
            )));
        }
        let e = problem.e();
        Self::new(problem.d(), [e[0], e[1], e[2], e[3]])
    }

    pub fn hurwitz_problem(&self) -> HurwitzProblem {
        HurwitzProblem::genus_zero(self.d, self.e.to_vec()).expect("validated at construction")
    }

    fn signed(&self) -> (i64, [i64; 4]) {
        (self.d as i64, self.e.map(|x| x as i64))
    }

    /// Smallest `k` of case I.
    pub fn k_min(&self) -> usize {
        self.e[2] + self.e[3] - self.d
    }

    /// Largest `k` of case II; zero when case II is empty.
    pub fn k_max_case_two(&self) -> usize {
        self.e[2] + self.e[3] - self.d - 1
    }

    pub fn base_params(&self) -> FourPointParams {
        FourPointParams {
            case: Case::I,
            k: self.k_min(),
            second: self.k_min(),
        }
    }

    pub fn validate(&self, params: FourPointParams) -> Result<()> {
        let (d, [e1, e2, e3, e4]) = self.signed();
        let (k, s) = (params.k as i64, params.second as i64);
        let ok = match params.case {
            Case::I => e3 + e4 - d <= k && k <= e3 && k <= d + 1 - e2 && k <= s && s <= e3 + e4 - k,
            Case::II => 1 <= k && k < e3 + e4 - d && e4 - e1 < s && s <= d + 1 - e1 && s <= e4,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "{params} is out of range for d = {}, e = {:?}",
                self.d, self.e
            )))
        }
    }
}

impl fmt::Display for FourPointProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, e] = self.e;
        write!(f, "({}; {a},{b},{c},{e})", self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    I,
    II,
}

/// `(case, k, ℓ)` in case I, `(case, k, m)` in case II.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FourPointParams {
    pub case: Case,
    pub k: usize,
    pub second: usize,
}

impl FourPointParams {
    pub fn new(case: Case, k: usize, second: usize) -> Self {
        FourPointParams { case, k, second }
    }
}

impl fmt::Display for FourPointParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.case {
            Case::I => write!(f, "I,{},{}", self.k, self.second),
            Case::II => write!(f, "II,{},{}", self.k, self.second),
        }
    }
}

impl FromStr for FourPointParams {
    type Err = Error;

    /// Parses `I,k,l` or `II,k,m`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::Parse(format!("expected I,k,l or II,k,m, got {s:?}"));
        let [case, k, second] = parts[..] else {
            return Err(bad());
        };
        let case = match case {
            "I" | "i" | "1" => Case::I,
            "II" | "ii" | "2" => Case::II,
            _ => return Err(bad()),
        };
        Ok(FourPointParams {
            case,
            k: k.parse().map_err(|_| bad())?,
            second: second.parse().map_err(|_| bad())?,
        })
    }
}

/// The factorization with the given parameters.
pub fn four_point_construct(
    problem: &FourPointProblem,
    params: FourPointParams,
) -> Result<Factorization> {
    problem.validate(params)?;
    let (d, [e1, _, e3, e4]) = problem.signed();
    let du = problem.d;
    let k = params.k as i64;
    let sigma4 = cycle(du, &[asc(1, e4)?], problem.e[3])?;
    let tuple = match params.case {
        Case::I => {
            let l = params.second;
            let sigma3 = cycle(du, &[desc(k, 1)?, asc(e4 + 1, e3 + e4 - k)?], problem.e[2])?;
            let sigma = &sigma3 * &sigma4;
            let sigma_inv = sigma.inverse();
            // σ^{-t}(ℓ) for t = 0..=e_3+e_4+1-2k
            let mut orbit = vec![(l - 1) as i64 + 1];
            let mut x = l - 1;
            for _ in 0..(e3 + e4 + 1 - 2 * k).max(0) {
                x = sigma_inv.apply(x);
                orbit.push(x as i64 + 1);
            }
            let back = |from: i64, to: i64| -> Result<Vec<i64>> {
                if to < from - 1 {
                    return Err(Error::InvariantViolation("negative run of σ powers".into()));
                }
                Ok((from..=to).map(|t| orbit[t as usize]).collect())
            };
            let s1 = cycle(
                du,
                &[
                    desc(d, e3 + e4 + 1 - k)?,
                    back(d + 2 - k - e1, e3 + e4 + 1 - 2 * k)?,
                ],
                problem.e[0],
            )?;
            let s2 = cycle(
                du,
                &[asc(e3 + e4 + 1 - k, d)?, back(0, d + 1 - k - e1)?],
                problem.e[1],
            )?;
            let expected = if 2 * k == e3 + e4 {
                Permutation::identity(du)
            } else {
                cycle(du, &[asc(k, e3 + e4 - k)?], (e3 + e4 - 2 * k + 1) as usize)?
            };
            if sigma != expected {
                return Err(Error::InvariantViolation(format!(
                    "σ_3σ_4 = {sigma}, expected {expected}"
                )));
            }
            vec![s1, s2, sigma3, sigma4]
        }
        Case::II => {
            let m = params.second as i64;
            let s1 = cycle(du, &[desc(m + e1 - 1, m)?], problem.e[0])?;
            let s2 = cycle(
                du,
                &[desc(d, m + e1)?, desc(m + d + k - e3 - e4, k)?],
                problem.e[1],
            )?;
            let s3 = cycle(
                du,
                &[
                    desc(k, 1)?,
                    asc(e4 + 1, m + e1 - 1)?,
                    desc(m, m + d + 1 + k - e3 - e4)?,
                    asc(m + e1, d)?,
                ],
                problem.e[2],
            )?;
            let prod = &s3 * &sigma4;
            if prod.cycles().len() != 2 {
                return Err(Error::InvariantViolation(format!(
                    "σ_3σ_4 = {prod} is not two cycles"
                )));
            }
            vec![s1, s2, s3, sigma4]
        }
    };
    Factorization::new(problem.hurwitz_problem(), tuple).map_err(|e| {
        Error::InvariantViolation(format!("{params} does not give a factorization: {e}"))
    })
}

/// All parameters, case I then case II, each ordered by `(k, second)`.
pub fn four_point_params(problem: &FourPointProblem) -> Vec<FourPointParams> {
    let [e1, e2, e3, e4] = problem.e;
    let d = problem.d;
    let mut out = Vec::new();
    for k in (e3 + e4 - d)..=e3.min(d + 1 - e2) {
        for l in k..=e3 + e4 - k {
            out.push(FourPointParams::new(Case::I, k, l));
        }
    }
    for k in 1..e3 + e4 - d {
        for m in (e4 + 1 - e1)..=(d + 1 - e1).min(e4) {
            out.push(FourPointParams::new(Case::II, k, m));
        }
    }
    out
}

pub fn four_point_enumerate(
    problem: &FourPointProblem,
) -> Result<Vec<(FourPointParams, Factorization)>> {
    four_point_params(problem)
        .into_iter()
        .map(|p| Ok((p, four_point_construct(problem, p)?)))
        .collect()
}

/// Predicted sizes of case I and case II.
pub fn four_point_case_counts(problem: &FourPointProblem) -> (usize, usize) {
    let [e1, e2, e3, e4] = problem.e;
    let d = problem.d;
    if e4 + e1 > d {
        (
            (d + 1 - e3) * (d + 1 - e4),
            (e3 + e4 - d - 1) * (d + 1 - e4),
        )
    } else {
        (e1 * e2, e1 * (d + 1 - e1 - e2))
    }
}

/// `min_i e_i (d + 1 - e_i)`.
pub fn four_point_number(problem: &FourPointProblem) -> usize {
    problem
        .e
        .iter()
        .map(|&e| e * (problem.d + 1 - e))
        .min()
        .unwrap()
}

fn only_point(set: crate::perm::PointSet, what: &str) -> Result<usize> {
    if set.len() != 1 {
        return Err(Error::InvariantViolation(format!(
            "expected one {what}, found {set:?}"
        )));
    }
    Ok(set.min().unwrap())
}

/// Parameters of the constructed factorization equivalent to `f`.
///
/// `f` must be a genus-0 four-point factorization with `e` ascending.
pub fn four_point_classify(f: &Factorization) -> Result<FourPointParams> {
    let problem = FourPointProblem::from_problem(f.problem())?;
    let [s1, s2, s3, s4] = f.sigma() else {
        return Err(Error::InvariantViolation("four entries expected".into()));
    };
    let sigma = s3 * s4;
    let overlap34 = s3.support().intersection(s4.support());
    let params = match sigma.cycles().len() {
        0 | 1 => {
            let k = overlap34.len();
            let l = if sigma.is_identity() {
                k
            } else {
                let anchor = only_point(
                    overlap34.intersection(sigma.support()),
                    "point moved by σ_3, σ_4, σ",
                )?;
                let target = only_point(
                    s1.support()
                        .intersection(s2.support())
                        .intersection(sigma.support()),
                    "point moved by σ_1, σ_2, σ",
                )?;
                let mut x = anchor;
                let mut t = 0;
                while x != target {
                    x = sigma.apply(x);
                    t += 1;
                }
                k + t
            };
            FourPointParams::new(Case::I, k, l)
        }
        2 => {
            let m = problem.e[3] + 1 - s1.support().intersection(s4.support()).len();
            let dec = cycle_pair_decompose(s3, s4)?;
            let meeting: Vec<&Vec<usize>> = dec
                .w
                .iter()
                .filter(|w| w.iter().any(|&x| s2.support().contains(x)))
                .collect();
            let [w] = meeting[..] else {
                return Err(Error::InvariantViolation(format!(
                    "{} overlap words of σ_3, σ_4 meet σ_2",
                    meeting.len()
                )));
            };
            FourPointParams::new(Case::II, w.len(), m)
        }
        n => {
            return Err(Error::InvariantViolation(format!("σ_3σ_4 has {n} cycles")));
        }
    };
    problem
        .validate(params)
        .map_err(|e| Error::InvariantViolation(e.to_string()))?;
    let built = four_point_construct(&problem, params)?;
    if canonical_form(built.sigma()) != canonical_form(f.sigma()) {
        return Err(Error::InvariantViolation(format!(
            "classified as {params}, but the constructed tuple is not equivalent"
        )));
    }
    Ok(params)
}

/// A move connecting parameter values by a pure braid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Move {
    /// `A_12` in case I: `ℓ` advances along `σ`.
    Ell,
    /// `A_23` in case I with `ℓ = k`: `k` drops by one.
    KDown,
    /// `A_23` in case II below the top `k`: `k` rises by one.
    KUp,
    /// `A_23` in case II at the top `k`: lands in case I.
    Cross,
}

impl Move {
    pub fn letter(self) -> Letter {
        match self {
            Move::Ell => Letter::Pure {
                i: 1,
                j: 2,
                inverse: false,
            },
            _ => Letter::Pure {
                i: 2,
                j: 3,
                inverse: false,
            },
        }
    }

    /// Predicted parameters after the move, where determined.
    /// `KDown` predicts only `k`.
    pub fn predict(
        self,
        problem: &FourPointProblem,
        p: FourPointParams,
    ) -> Result<FourPointParams> {
        let not_applicable = || Error::NotApplicable(format!("{self:?} does not apply at {p}"));
        let [_, _, e3, e4] = problem.e;
        match (self, p.case) {
            (Move::Ell, Case::I) => {
                let top = e3 + e4 - p.k;
                let second = if p.second == top { p.k } else { p.second + 1 };
                Ok(FourPointParams::new(Case::I, p.k, second))
            }
            (Move::KDown, Case::I) if p.second == p.k && p.k > problem.k_min() => {
                Ok(FourPointParams::new(Case::I, p.k - 1, 0))
            }
            (Move::KUp, Case::II) if p.k < problem.k_max_case_two() => {
                Ok(FourPointParams::new(Case::II, p.k + 1, p.second))
            }
            (Move::Cross, Case::II) if p.k == problem.k_max_case_two() => {
                Ok(FourPointParams::new(Case::I, problem.k_min(), p.second))
            }
            _ => Err(not_applicable()),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::Ell => "ELL",
            Move::KDown => "KDOWN",
            Move::KUp => "KUP",
            Move::Cross => "CROSS",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub mv: Move,
    pub from: FourPointParams,
    pub to: FourPointParams,
    pub factorization: Factorization,
}

/// Applies `mv` to the constructed factorization at `from` and classifies the
/// result, failing if it disagrees with the prediction.
pub fn four_point_orbit_step(
    problem: &FourPointProblem,
    from: FourPointParams,
    mv: Move,
) -> Result<Step> {
    let predicted = mv.predict(problem, from)?;
    let f = four_point_construct(problem, from)?;
    let Letter::Pure { i, j, .. } = mv.letter() else {
        unreachable!()
    };
    let moved = pure_braid_generator(f.sigma(), i, j)?;
    let moved = Factorization::new(problem.hurwitz_problem(), moved)?;
    let to = four_point_classify(&moved)?;
    let matches = match mv {
        Move::KDown => to.case == predicted.case && to.k == predicted.k,
        _ => to == predicted,
    };
    if !matches {
        return Err(Error::InvariantViolation(format!(
            "{mv} from {from} gave {to}, predicted {predicted}"
        )));
    }
    Ok(Step {
        mv,
        from,
        to,
        factorization: moved,
    })
}

/// Moves from `from` to the base point `(I, k_min, k_min)`.
pub fn four_point_path(problem: &FourPointProblem, from: FourPointParams) -> Result<Vec<Step>> {
    problem.validate(from)?;
    let base = problem.base_params();
    let mut steps = Vec::new();
    let mut cur = from;
    let limit = 4 * problem.d * problem.d + 8;
    while cur != base {
        let mv = match cur.case {
            Case::II if cur.k < problem.k_max_case_two() => Move::KUp,
            Case::II => Move::Cross,
            Case::I if cur.second != cur.k => Move::Ell,
            Case::I if cur.k > problem.k_min() => Move::KDown,
            Case::I => Move::Ell,
        };
        let step = four_point_orbit_step(problem, cur, mv)?;
        cur = step.to;
        steps.push(step);
        if steps.len() > limit {
            return Err(Error::InvariantViolation(format!(
                "no path from {from} to {base}"
            )));
        }
    }
    Ok(steps)
}
