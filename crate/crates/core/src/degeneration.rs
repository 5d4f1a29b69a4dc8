//! Ramification indices of limit series on a chain of `r-2` lines.
//!
//! Component `i` (1-based) carries the marked point `e_{i+1}` and meets its
//! neighbours at nodes with indices `a_i` and `a_{i+1}`, where `a_1 = e_1`,
//! `a_{r-1} = e_r` and the interior indices `a_2, …, a_{r-2}` are the data of
//! a [`NodeIndexSequence`]. Each component's triple must satisfy the triangle
//! inequalities, have odd sum, and give an aspect of degree at most `d`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::HurwitzProblem;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NodeIndexSequence {
    pub interior: Vec<usize>,
}

impl NodeIndexSequence {
    pub fn new(interior: Vec<usize>) -> Self {
        NodeIndexSequence { interior }
    }
}

impl fmt::Display for NodeIndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.interior.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegenConfig {
    /// Require every aspect degree to be at most `d`.
    pub degree_bound: bool,
}

impl Default for DegenConfig {
    fn default() -> Self {
        DegenConfig { degree_bound: true }
    }
}

/// First failed condition; components are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    Length {
        expected: usize,
        found: usize,
    },
    ZeroIndex {
        position: usize,
    },
    Triangle {
        component: usize,
        triple: [usize; 3],
    },
    Parity {
        component: usize,
        triple: [usize; 3],
    },
    AspectDegree {
        component: usize,
        degree: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Length { expected, found } => {
                write!(f, "expected {expected} interior indices, found {found}")
            }
            Violation::ZeroIndex { position } => write!(f, "interior index {position} is zero"),
            Violation::Triangle { component, triple } => {
                write!(
                    f,
                    "component {component}: triple {triple:?} fails a triangle inequality"
                )
            }
            Violation::Parity { component, triple } => {
                write!(f, "component {component}: triple {triple:?} has even sum")
            }
            Violation::AspectDegree { component, degree } => {
                write!(f, "component {component}: aspect degree {degree} exceeds d")
            }
        }
    }
}

fn check_problem(problem: &HurwitzProblem) -> Result<()> {
    if problem.genus() != 0 || problem.simple_count() != 0 {
        return Err(Error::NotApplicable(
            "degenerations are for genus-0 pure-cycle problems".into(),
        ));
    }
    if problem.r() < 3 {
        return Err(Error::NotApplicable(
            "need at least three branch points".into(),
        ));
    }
    Ok(())
}

/// `a_1, …, a_{r-1}`.
fn node_chain(problem: &HurwitzProblem, interior: &[usize]) -> Vec<usize> {
    let e = problem.e();
    let mut a = Vec::with_capacity(interior.len() + 2);
    a.push(e[0]);
    a.extend_from_slice(interior);
    a.push(e[e.len() - 1]);
    a
}

fn check_triple(
    component: usize,
    triple: [usize; 3],
    d: usize,
    config: DegenConfig,
) -> Option<Violation> {
    let [a, b, c] = triple;
    if a > b + c || b > a + c || c > a + b {
        return Some(Violation::Triangle { component, triple });
    }
    if (a + b + c) % 2 == 0 {
        return Some(Violation::Parity { component, triple });
    }
    let degree = (a + b + c - 1) / 2;
    if config.degree_bound && degree > d {
        return Some(Violation::AspectDegree { component, degree });
    }
    None
}

fn first_violation(
    problem: &HurwitzProblem,
    interior: &[usize],
    config: DegenConfig,
) -> Option<Violation> {
    let r = problem.r();
    if interior.len() != r - 3 {
        return Some(Violation::Length {
            expected: r - 3,
            found: interior.len(),
        });
    }
    if let Some(i) = interior.iter().position(|&x| x == 0) {
        return Some(Violation::ZeroIndex { position: i + 2 });
    }
    let a = node_chain(problem, interior);
    let e = problem.e();
    (0..r - 2).find_map(|i| check_triple(i + 1, [a[i], e[i + 1], a[i + 1]], problem.d(), config))
}

/// `Ok(())` when valid, otherwise the first violated condition.
pub fn is_valid_sequence(
    problem: &HurwitzProblem,
    seq: &NodeIndexSequence,
    config: DegenConfig,
) -> Result<std::result::Result<(), Violation>> {
    check_problem(problem)?;
    Ok(match first_violation(problem, &seq.interior, config) {
        None => Ok(()),
        Some(v) => Err(v),
    })
}

fn valid(problem: &HurwitzProblem, interior: &[usize], config: DegenConfig) -> bool {
    first_violation(problem, interior, config).is_none()
}

/// Largest interior index worth scanning.
fn index_cap(problem: &HurwitzProblem, config: DegenConfig) -> usize {
    if config.degree_bound {
        problem.d()
    } else {
        problem.e().iter().sum()
    }
}

/// All valid sequences in lexicographic order. For three branch points this
/// is the empty sequence alone when the single triple is valid.
pub fn enumerate_sequences(
    problem: &HurwitzProblem,
    config: DegenConfig,
) -> Result<Vec<NodeIndexSequence>> {
    check_problem(problem)?;
    let r = problem.r();
    let e = problem.e();
    let cap = index_cap(problem, config);
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r - 3);
    // components are checked as soon as both of their nodes are known
    fn rec(
        problem: &HurwitzProblem,
        e: &[usize],
        cap: usize,
        config: DegenConfig,
        cur: &mut Vec<usize>,
        out: &mut Vec<NodeIndexSequence>,
    ) {
        let r = e.len();
        if cur.len() == r - 3 {
            if valid(problem, cur, config) {
                out.push(NodeIndexSequence::new(cur.clone()));
            }
            return;
        }
        let i = cur.len();
        let left = if i == 0 { e[0] } else { cur[i - 1] };
        for x in 1..=cap {
            if check_triple(i + 1, [left, e[i + 1], x], problem.d(), config).is_some() {
                continue;
            }
            cur.push(x);
            rec(problem, e, cap, config, cur, out);
            cur.pop();
        }
    }
    rec(problem, e, cap, config, &mut cur, &mut out);
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

/// Aspect degree of each component, `(a_i + e_{i+1} + a_{i+1} - 1) / 2`.
pub fn aspect_degrees(problem: &HurwitzProblem, seq: &NodeIndexSequence) -> Result<Vec<usize>> {
    check_problem(problem)?;
    if seq.interior.len() != problem.r() - 3 {
        return Err(Error::InvalidParams(format!(
            "expected {} interior indices",
            problem.r() - 3
        )));
    }
    let a = node_chain(problem, &seq.interior);
    let e = problem.e();
    (0..problem.r() - 2)
        .map(|i| {
            let sum = a[i] + e[i + 1] + a[i + 1];
            if sum.is_multiple_of(2) {
                return Err(Error::InvariantViolation(format!(
                    "component {} has even index sum {sum}",
                    i + 1
                )));
            }
            Ok((sum - 1) / 2)
        })
        .collect()
}

fn require_valid(
    problem: &HurwitzProblem,
    seq: &NodeIndexSequence,
    config: DegenConfig,
) -> Result<()> {
    match first_violation(problem, &seq.interior, config) {
        None => Ok(()),
        Some(v) => Err(Error::InvalidParams(format!("{seq} is not valid: {v}"))),
    }
}

/// A path of single-index `±2` changes from `from` to `to` through valid
/// sequences, excluding `from` and ending at `to`.
///
/// At the first differing index the lower side is raised; when it is
/// blocked, the search moves forward along the chain to the next index that
/// can be raised, which always exists.
pub fn connect_sequences(
    problem: &HurwitzProblem,
    from: &NodeIndexSequence,
    to: &NodeIndexSequence,
    config: DegenConfig,
) -> Result<Vec<NodeIndexSequence>> {
    check_problem(problem)?;
    require_valid(problem, from, config)?;
    require_valid(problem, to, config)?;
    let mut a = from.interior.clone();
    let mut b = to.interior.clone();
    let mut forward = Vec::new();
    let mut backward = Vec::new();
    while a != b {
        let i0 = (0..a.len()).find(|&i| a[i] != b[i]).unwrap();
        let a_low = a[i0] < b[i0];
        let (low, high) = if a_low { (&mut a, &b) } else { (&mut b, &a) };
        let mut raised = false;
        for i in i0..low.len() {
            if low[i] >= high[i] {
                continue;
            }
            low[i] += 2;
            if valid(problem, low, config) {
                raised = true;
                break;
            }
            low[i] -= 2;
        }
        if !raised {
            return Err(Error::InvariantViolation(format!(
                "no index can be raised between {} and {}",
                NodeIndexSequence::new(a.clone()),
                NodeIndexSequence::new(b.clone())
            )));
        }
        if a_low {
            forward.push(NodeIndexSequence::new(a.clone()));
        } else {
            backward.push(NodeIndexSequence::new(b.clone()));
        }
    }
    // both sides end at the meeting point; walk the raises of `to` backwards
    let mut path = forward;
    if backward.pop().is_some() {
        path.extend(backward.into_iter().rev());
        path.push(to.clone());
    }
    Ok(path)
}

/// Shortest path in the `±2` step graph, by breadth-first search.
pub fn connect_bfs(
    problem: &HurwitzProblem,
    from: &NodeIndexSequence,
    to: &NodeIndexSequence,
    config: DegenConfig,
) -> Result<Option<Vec<NodeIndexSequence>>> {
    check_problem(problem)?;
    require_valid(problem, from, config)?;
    require_valid(problem, to, config)?;
    let mut prev: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut queue = VecDeque::from([from.interior.clone()]);
    prev.insert(from.interior.clone(), from.interior.clone());
    while let Some(cur) = queue.pop_front() {
        if cur == to.interior {
            let mut path = Vec::new();
            let mut x = cur;
            while x != from.interior {
                let p = prev[&x].clone();
                path.push(NodeIndexSequence::new(x));
                x = p;
            }
            path.reverse();
            return Ok(Some(path));
        }
        for i in 0..cur.len() {
            for up in [true, false] {
                let mut next = cur.clone();
                if up {
                    next[i] += 2;
                } else if next[i] > 2 {
                    next[i] -= 2;
                } else {
                    continue;
                }
                if !prev.contains_key(&next) && valid(problem, &next, config) {
                    prev.insert(next.clone(), cur.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(None)
}

/// `min_i min(e_i, d + 1 - e_i)`.
pub fn four_point_sequence_count(problem: &HurwitzProblem) -> usize {
    let d = problem.d();
    problem
        .e()
        .iter()
        .map(|&e| e.min(d + 1 - e))
        .min()
        .unwrap_or(0)
}
