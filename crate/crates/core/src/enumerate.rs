//! Exhaustive enumeration of Hurwitz factorizations and their classes.
//!
//! One entry of maximal length (the pivot, the last such entry) is fixed to
//! the standard cycle `(1 2 … e)`. Another entry is solved for from the
//! trivial-product condition, and the rest range over their full conjugacy
//! classes. Partial tuples are abandoned when the remaining entries cannot
//! cover every point twice, which a trivial product with a transitive action
//! requires. Work is split on the first free entry; results are merged into
//! a sorted set, so the output does not depend on the worker count.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::factorization::{canonical_form, is_transitive, EquivalenceClass, HurwitzProblem};
use crate::perm::{Permutation, PointSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub max_degree: usize,
    /// Bound on `r + simple_count`.
    pub max_tuple_len: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            max_degree: 8,
            max_tuple_len: 7,
            workers: None,
        }
    }
}

impl EnumConfig {
    pub fn check(&self, problem: &HurwitzProblem) -> Result<()> {
        if problem.d() > self.max_degree {
            return Err(Error::BoundExceeded(format!(
                "degree {} above the configured bound {}",
                problem.d(),
                self.max_degree
            )));
        }
        if problem.tuple_len() > self.max_tuple_len {
            return Err(Error::BoundExceeded(format!(
                "tuple length {} above the configured bound {}",
                problem.tuple_len(),
                self.max_tuple_len
            )));
        }
        Ok(())
    }

    /// Runs `f` on a pool with the configured number of workers.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            Some(n) => rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool")
                .install(f),
            None => f(),
        }
    }
}

/// All `e`-cycles of `S_d`, each listed once.
pub fn cycles_of_length(e: usize, d: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    if e < 2 || e > d {
        return out;
    }
    let mut subset: Vec<usize> = (0..e).collect();
    loop {
        // cycles on `subset` starting at its least point
        let mut rest: Vec<usize> = subset[1..].to_vec();
        loop {
            let mut images: Vec<u8> = (0..d as u8).collect();
            let mut prev = subset[0];
            for &x in &rest {
                images[prev] = x as u8;
                prev = x;
            }
            images[prev] = subset[0] as u8;
            out.push(Permutation::from_raw(images));
            if !next_permutation(&mut rest) {
                break;
            }
        }
        // next e-subset of 0..d
        let Some(i) = (0..e).rev().find(|&i| subset[i] < d - e + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..e {
            subset[j] = subset[j - 1] + 1;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

fn class_size(e: usize, d: usize) -> u128 {
    // d! / (e (d-e)!)
    let falling: u128 = ((d - e + 1)..=d).map(|x| x as u128).product();
    falling / e as u128
}

/// Search layout for one problem.
struct Plan {
    d: usize,
    lengths: Vec<usize>,
    pivot: usize,
    forced: Option<usize>,
    /// free positions in search order
    free: Vec<usize>,
    /// candidate lists, indexed like `free`
    choices: Vec<Vec<Permutation>>,
    /// sum of lengths of entries after free level i (forced included)
    capacity_after: Vec<usize>,
}

impl Plan {
    fn new(problem: &HurwitzProblem) -> Plan {
        let d = problem.d();
        let lengths = problem.cycle_lengths();
        let n = lengths.len();
        let max = *lengths.iter().max().unwrap();
        let pivot = (0..n).rev().find(|&i| lengths[i] == max).unwrap();
        let mut others: Vec<usize> = (0..n).filter(|&i| i != pivot).collect();
        // largest class is solved for, the rest searched smallest first
        others.sort_by_key(|&i| (class_size(lengths[i], d), i));
        let forced = others.pop();
        let free = others;
        let mut cache: Vec<Option<Vec<Permutation>>> = vec![None; d + 1];
        let choices = free
            .iter()
            .map(|&i| {
                cache[lengths[i]]
                    .get_or_insert_with(|| cycles_of_length(lengths[i], d))
                    .clone()
            })
            .collect();
        let forced_len = forced.map_or(0, |f| lengths[f]);
        let capacity_after = (0..free.len())
            .map(|lvl| free[lvl + 1..].iter().map(|&i| lengths[i]).sum::<usize>() + forced_len)
            .collect();
        Plan {
            d,
            lengths,
            pivot,
            forced,
            free,
            choices,
            capacity_after,
        }
    }

    /// Whether every point can still end up in at least two supports.
    fn coverable(&self, once: PointSet, twice: PointSet, capacity: usize) -> bool {
        let uncovered = self.d - once.len();
        let single = once.len() - twice.len();
        2 * uncovered + single <= capacity
    }

    fn search<F: FnMut(&[Permutation])>(&self, first: Option<usize>, emit: &mut F) {
        let n = self.lengths.len();
        let mut tuple = vec![Permutation::identity(self.d); n];
        tuple[self.pivot] = Permutation::standard_cycle(self.lengths[self.pivot], self.d);
        let pivot_support = tuple[self.pivot].support();
        if self.free.is_empty() {
            let capacity = self.forced.map_or(0, |f| self.lengths[f]);
            if self.coverable(pivot_support, PointSet::empty(), capacity) {
                self.finish(&mut tuple, emit);
            }
            return;
        }
        let c = &self.choices[0];
        let range = match first {
            Some(i) => i..i + 1,
            None => 0..c.len(),
        };
        for i in range {
            let s = c[i].support();
            let twice = pivot_support.intersection(s);
            let once = pivot_support.union(s);
            if !self.coverable(once, twice, self.capacity_after[0]) {
                continue;
            }
            tuple[self.free[0]] = c[i].clone();
            self.descend(1, once, twice, &mut tuple, emit);
        }
    }

    fn descend<F: FnMut(&[Permutation])>(
        &self,
        level: usize,
        once: PointSet,
        twice: PointSet,
        tuple: &mut Vec<Permutation>,
        emit: &mut F,
    ) {
        if level == self.free.len() {
            self.finish(tuple, emit);
            return;
        }
        for p in &self.choices[level] {
            let s = p.support();
            let t = twice.union(once.intersection(s));
            let o = once.union(s);
            if !self.coverable(o, t, self.capacity_after[level]) {
                continue;
            }
            tuple[self.free[level]] = p.clone();
            self.descend(level + 1, o, t, tuple, emit);
        }
    }

    fn finish<F: FnMut(&[Permutation])>(&self, tuple: &mut [Permutation], emit: &mut F) {
        if let Some(f) = self.forced {
            let id = Permutation::identity(self.d);
            let before = tuple[..f].iter().fold(id.clone(), |acc, p| &acc * p);
            let after = tuple[f + 1..].iter().fold(id, |acc, p| &acc * p);
            let solved = &before.inverse() * &after.inverse();
            if !solved.is_single_cycle(self.lengths[f]) {
                return;
            }
            tuple[f] = solved;
        } else if !tuple
            .iter()
            .fold(Permutation::identity(self.d), |acc, p| &acc * p)
            .is_identity()
        {
            return;
        }
        if is_transitive(tuple, self.d) {
            emit(tuple);
        }
    }

    fn work_units(&self) -> Vec<Option<usize>> {
        if self.free.is_empty() {
            vec![None]
        } else {
            (0..self.choices[0].len()).map(Some).collect()
        }
    }
}

fn prepare(problem: &HurwitzProblem, config: &EnumConfig) -> Result<Option<Plan>> {
    config.check(problem)?;
    if !problem.satisfies_riemann_hurwitz() {
        return Ok(None);
    }
    Ok(Some(Plan::new(problem)))
}

/// Every valid tuple with the pivot entry (the last entry of maximal length)
/// equal to the standard cycle, sorted.
pub fn enumerate_raw(
    problem: &HurwitzProblem,
    config: &EnumConfig,
) -> Result<Vec<Vec<Permutation>>> {
    let Some(plan) = prepare(problem, config)? else {
        return Ok(Vec::new());
    };
    let mut out: Vec<Vec<Permutation>> = config.install(|| {
        plan.work_units()
            .into_par_iter()
            .flat_map_iter(|unit| {
                let mut local = Vec::new();
                plan.search(unit, &mut |t: &[Permutation]| local.push(t.to_vec()));
                local
            })
            .collect()
    });
    out.sort_unstable();
    Ok(out)
}

/// Position fixed to the standard cycle by [`enumerate_raw`].
pub fn pivot_position(problem: &HurwitzProblem) -> usize {
    let lengths = problem.cycle_lengths();
    let max = *lengths.iter().max().unwrap();
    (0..lengths.len())
        .rev()
        .find(|&i| lengths[i] == max)
        .unwrap()
}

/// One canonical representative per equivalence class, sorted.
pub fn enumerate_classes(
    problem: &HurwitzProblem,
    config: &EnumConfig,
) -> Result<Vec<EquivalenceClass>> {
    let Some(plan) = prepare(problem, config)? else {
        return Ok(Vec::new());
    };
    let merged: BTreeSet<Vec<Permutation>> = config.install(|| {
        plan.work_units()
            .into_par_iter()
            .map(|unit| {
                let mut local = BTreeSet::new();
                plan.search(unit, &mut |t: &[Permutation]| {
                    local.insert(canonical_form(t));
                });
                local
            })
            .reduce(BTreeSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    });
    Ok(merged
        .into_iter()
        .map(EquivalenceClass::from_canonical)
        .collect())
}

pub fn hurwitz_number(problem: &HurwitzProblem, config: &EnumConfig) -> Result<usize> {
    Ok(enumerate_classes(problem, config)?.len())
}

/// All genus-0 pure-cycle problems with `r` branch points and degree `d`,
/// with `ē` sorted ascending, in lexicographic order.
pub fn genus_zero_problems(d: usize, r: usize) -> Vec<HurwitzProblem> {
    let target = (2 * d).saturating_sub(2);
    let mut out = Vec::new();
    let mut e = Vec::with_capacity(r);
    fn rec(
        d: usize,
        r: usize,
        left: usize,
        min: usize,
        e: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if e.len() == r {
            if left == 0 {
                out.push(e.clone());
            }
            return;
        }
        for x in min..=d {
            if x - 1 > left {
                break;
            }
            e.push(x);
            rec(d, r, left - (x - 1), x, e, out);
            e.pop();
        }
    }
    let mut lists = Vec::new();
    if d >= 2 && r >= 2 {
        rec(d, r, target, 2, &mut e, &mut lists);
    }
    for e in lists {
        out.push(HurwitzProblem::genus_zero(d, e).expect("constructed to satisfy Riemann-Hurwitz"));
    }
    out
}
