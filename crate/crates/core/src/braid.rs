//! Braid and pure braid actions on tuples, and orbits on equivalence classes.
//!
//! Positions are 1-based, matching the generator names `β_i` and `A_ij`.
//! `β_i` replaces `(σ_i, σ_{i+1})` by `(σ_{i+1}, σ_{i+1}⁻¹ σ_i σ_{i+1})`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factorization::{canonical_form, EquivalenceClass};
use crate::perm::Permutation;

fn check_position(len: usize, i: usize) -> Result<()> {
    if i == 0 || i >= len {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    Ok(())
}

fn step(tuple: &mut [Permutation], i: usize) {
    let a = tuple[i - 1].clone();
    let b = tuple[i].clone();
    tuple[i] = a.conjugate_by(&b);
    tuple[i - 1] = b;
}

fn step_inv(tuple: &mut [Permutation], i: usize) {
    let a = tuple[i - 1].clone();
    let b = tuple[i].clone();
    tuple[i - 1] = b.conjugate_by(&a.inverse());
    tuple[i] = a;
}

/// `β_i`, for `1 <= i < len`.
pub fn braid_move(tuple: &[Permutation], i: usize) -> Result<Vec<Permutation>> {
    check_position(tuple.len(), i)?;
    let mut out = tuple.to_vec();
    step(&mut out, i);
    Ok(out)
}

/// `β_i⁻¹`: `(a, b) ↦ (a b a⁻¹, a)`.
pub fn braid_move_inv(tuple: &[Permutation], i: usize) -> Result<Vec<Permutation>> {
    check_position(tuple.len(), i)?;
    let mut out = tuple.to_vec();
    step_inv(&mut out, i);
    Ok(out)
}

fn check_pair(len: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || i >= j {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    if j > len {
        return Err(Error::IndexOutOfRange { index: j, len });
    }
    Ok(())
}

/// `A_ij = β_{j-1} ⋯ β_{i+1} β_i² β_{i+1}⁻¹ ⋯ β_{j-1}⁻¹`, for `1 <= i < j <= len`.
///
/// The word is read as a composite of maps, so the rightmost letter acts
/// first: entry `j` is carried down to position `i+1`, braided twice around
/// entry `i`, and carried back.
pub fn pure_braid_generator(tuple: &[Permutation], i: usize, j: usize) -> Result<Vec<Permutation>> {
    check_pair(tuple.len(), i, j)?;
    let mut t = tuple.to_vec();
    for p in (i + 1..j).rev() {
        step_inv(&mut t, p);
    }
    step(&mut t, i);
    step(&mut t, i);
    for p in i + 1..j {
        step(&mut t, p);
    }
    Ok(t)
}

pub fn pure_braid_generator_inv(
    tuple: &[Permutation],
    i: usize,
    j: usize,
) -> Result<Vec<Permutation>> {
    check_pair(tuple.len(), i, j)?;
    let mut t = tuple.to_vec();
    for p in (i + 1..j).rev() {
        step_inv(&mut t, p);
    }
    step_inv(&mut t, i);
    step_inv(&mut t, i);
    for p in i + 1..j {
        step(&mut t, p);
    }
    Ok(t)
}

/// One generator or inverse generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    Braid { i: usize, inverse: bool },
    Pure { i: usize, j: usize, inverse: bool },
}

impl Letter {
    pub fn apply(self, tuple: &[Permutation]) -> Result<Vec<Permutation>> {
        match self {
            Letter::Braid { i, inverse: false } => braid_move(tuple, i),
            Letter::Braid { i, inverse: true } => braid_move_inv(tuple, i),
            Letter::Pure {
                i,
                j,
                inverse: false,
            } => pure_braid_generator(tuple, i, j),
            Letter::Pure {
                i,
                j,
                inverse: true,
            } => pure_braid_generator_inv(tuple, i, j),
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::Braid { i, inverse } => Letter::Braid {
                i,
                inverse: !inverse,
            },
            Letter::Pure { i, j, inverse } => Letter::Pure {
                i,
                j,
                inverse: !inverse,
            },
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, inverse) = match *self {
            Letter::Braid { i, inverse } => (format!("b{i}"), inverse),
            Letter::Pure { i, j, inverse } => (format!("A{i}{j}"), inverse),
        };
        if inverse {
            write!(f, "{name}^-1")
        } else {
            write!(f, "{name}")
        }
    }
}

/// Which generators act.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generators {
    /// all `A_ij`
    Pure,
    /// only `A_{i,i+1} = β_i²`
    AdjacentSquares,
    /// all `β_i`
    Braid,
}

impl Generators {
    pub fn letters(self, len: usize) -> Vec<Letter> {
        let mut out = Vec::new();
        match self {
            Generators::Pure => {
                for i in 1..len {
                    for j in i + 1..=len {
                        out.push(Letter::Pure {
                            i,
                            j,
                            inverse: false,
                        });
                    }
                }
            }
            Generators::AdjacentSquares => {
                for i in 1..len {
                    out.push(Letter::Pure {
                        i,
                        j: i + 1,
                        inverse: false,
                    });
                }
            }
            Generators::Braid => {
                for i in 1..len {
                    out.push(Letter::Braid { i, inverse: false });
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Bfs,
    Dfs,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitConfig {
    pub strategy: Strategy,
    pub record_witnesses: bool,
    /// Refuse to hold more than this many classes.
    pub max_states: Option<usize>,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig {
            strategy: Strategy::Bfs,
            record_witnesses: false,
            max_states: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub orbit_count: usize,
    /// ascending
    pub orbit_sizes: Vec<usize>,
    pub generator_applications: u64,
    /// Each orbit, sorted, starting from its base point (the least input
    /// class in it). Orbits are ordered by base point.
    pub orbits: Vec<Vec<EquivalenceClass>>,
    /// Word taking each class to its orbit's base point, letters applied left
    /// to right.
    pub witness_paths: Option<HashMap<EquivalenceClass, Vec<Letter>>>,
    /// Classes reached by the action that were not in the input.
    pub outside_input: usize,
}

fn orbits(
    classes: &[EquivalenceClass],
    generators: Generators,
    config: &OrbitConfig,
) -> Result<OrbitReport> {
    let mut inputs: Vec<&EquivalenceClass> = classes.iter().collect();
    inputs.sort();
    inputs.dedup();
    let input_set: std::collections::HashSet<&[Permutation]> =
        inputs.iter().map(|c| c.sigma()).collect();

    let mut orbit_of: HashMap<Vec<Permutation>, usize> = HashMap::new();
    // class -> (letter, target) with letter(class) = target
    let mut parent: HashMap<Vec<Permutation>, (Letter, Vec<Permutation>)> = HashMap::new();
    let mut orbits: Vec<Vec<Vec<Permutation>>> = Vec::new();
    let mut applications = 0u64;

    for base in inputs {
        if orbit_of.contains_key(base.sigma()) {
            continue;
        }
        let id = orbits.len();
        let letters = generators.letters(base.sigma().len());
        let mut members = vec![base.sigma().to_vec()];
        orbit_of.insert(base.sigma().to_vec(), id);
        let mut frontier: VecDeque<Vec<Permutation>> = VecDeque::from([base.sigma().to_vec()]);
        while let Some(cur) = match config.strategy {
            Strategy::Bfs => frontier.pop_front(),
            Strategy::Dfs => frontier.pop_back(),
        } {
            for &letter in &letters {
                // walk backwards so that the recorded letter leads toward the base
                let next = canonical_form(&letter.inverse().apply(&cur)?);
                applications += 1;
                if orbit_of.contains_key(&next) {
                    continue;
                }
                if config.max_states.is_some_and(|m| orbit_of.len() >= m) {
                    return Err(Error::BoundExceeded(format!(
                        "orbit search exceeded {} classes",
                        orbit_of.len()
                    )));
                }
                orbit_of.insert(next.clone(), id);
                if config.record_witnesses {
                    parent.insert(next.clone(), (letter, cur.clone()));
                }
                members.push(next.clone());
                frontier.push_back(next);
            }
        }
        orbits.push(members);
    }

    let outside_input = orbit_of
        .keys()
        .filter(|k| !input_set.contains(k.as_slice()))
        .count();
    let witness_paths = config.record_witnesses.then(|| {
        orbit_of
            .keys()
            .map(|k| {
                let mut word = Vec::new();
                let mut cur = k;
                while let Some((letter, next)) = parent.get(cur) {
                    word.push(*letter);
                    cur = next;
                }
                (EquivalenceClass::from_canonical(k.clone()), word)
            })
            .collect()
    });
    let orbits: Vec<Vec<EquivalenceClass>> = orbits
        .into_iter()
        .map(|members| {
            let mut rest: Vec<EquivalenceClass> = members[1..]
                .iter()
                .cloned()
                .map(EquivalenceClass::from_canonical)
                .collect();
            rest.sort();
            let mut out = vec![EquivalenceClass::from_canonical(members[0].clone())];
            out.extend(rest);
            out
        })
        .collect();
    let mut orbit_sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    orbit_sizes.sort_unstable();
    Ok(OrbitReport {
        orbit_count: orbits.len(),
        orbit_sizes,
        generator_applications: applications,
        orbits,
        witness_paths,
        outside_input,
    })
}

/// Orbits of the pure braid group, generated by all `A_ij`.
pub fn pure_braid_orbits(
    classes: &[EquivalenceClass],
    config: &OrbitConfig,
) -> Result<OrbitReport> {
    orbits(classes, Generators::Pure, config)
}

/// Orbits under the adjacent squares `β_i²` alone.
pub fn adjacent_square_orbits(
    classes: &[EquivalenceClass],
    config: &OrbitConfig,
) -> Result<OrbitReport> {
    orbits(classes, Generators::AdjacentSquares, config)
}

/// Orbits of the full braid group; entries may be permuted, so classes of
/// reordered problems fall into common orbits.
pub fn full_braid_orbits(
    classes: &[EquivalenceClass],
    config: &OrbitConfig,
) -> Result<OrbitReport> {
    orbits(classes, Generators::Braid, config)
}

/// Applies a word, letters left to right.
pub fn apply_word(tuple: &[Permutation], word: &[Letter]) -> Result<Vec<Permutation>> {
    let mut t = tuple.to_vec();
    for letter in word {
        t = letter.apply(&t)?;
    }
    Ok(t)
}
