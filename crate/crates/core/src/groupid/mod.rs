//! Monodromy groups of factorizations.

mod schreier;

use std::fmt;

use serde::Serialize;

use crate::enumerate::{enumerate_classes, EnumConfig};
use crate::error::{Error, Result};
use crate::factorization::{is_transitive, HurwitzProblem};
use crate::perm::Permutation;

use schreier::{closure, closure_order, StabilizerChain};

/// Orders up to this size are also computed by plain closure. This covers
/// every group of degree at most 7.
pub const CLOSURE_LIMIT: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupTag {
    Cyclic(usize),
    Alternating(usize),
    Symmetric(usize),
    S5InS6,
    Other,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Cyclic(d) => write!(f, "CYCLIC({d})"),
            GroupTag::Alternating(d) => write!(f, "ALTERNATING({d})"),
            GroupTag::Symmetric(d) => write!(f, "SYMMETRIC({d})"),
            GroupTag::S5InS6 => f.write_str("S5_IN_S6"),
            GroupTag::Other => f.write_str("OTHER"),
        }
    }
}

impl GroupTag {
    /// Name without the degree, as used in tables.
    pub fn name(&self) -> &'static str {
        match self {
            GroupTag::Cyclic(_) => "CYCLIC",
            GroupTag::Alternating(_) => "ALTERNATING",
            GroupTag::Symmetric(_) => "SYMMETRIC",
            GroupTag::S5InS6 => "S5_IN_S6",
            GroupTag::Other => "OTHER",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupClass {
    pub degree: usize,
    pub tag: GroupTag,
    pub order: u128,
    pub transitive: bool,
    pub primitive: bool,
    pub doubly_transitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupConfig {
    pub max_degree: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig { max_degree: 10 }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Order of the group generated by `gens` in `S_d`.
pub fn group_order(gens: &[Permutation], d: usize) -> u128 {
    StabilizerChain::new(gens, d).order()
}

/// Order by closure, when at most `limit` elements.
pub fn group_order_by_closure(gens: &[Permutation], d: usize, limit: usize) -> Option<u128> {
    closure_order(gens, d, limit)
}

fn check_degree(gens: &[Permutation], d: usize) -> Result<()> {
    for g in gens {
        if g.degree() != d {
            return Err(Error::DegreeMismatch {
                left: d,
                right: g.degree(),
            });
        }
    }
    Ok(())
}

pub fn generated_group(gens: &[Permutation], d: usize) -> Result<GroupClass> {
    generated_group_with(gens, d, &GroupConfig::default())
}

pub fn generated_group_with(
    gens: &[Permutation],
    d: usize,
    config: &GroupConfig,
) -> Result<GroupClass> {
    if d > config.max_degree {
        return Err(Error::BoundExceeded(format!(
            "degree {d} above the group bound {}",
            config.max_degree
        )));
    }
    check_degree(gens, d)?;
    let order = group_order(gens, d);
    if (order as usize) <= CLOSURE_LIMIT {
        let by_closure = closure_order(gens, d, CLOSURE_LIMIT);
        if by_closure != Some(order) {
            return Err(Error::InvariantViolation(format!(
                "stabilizer chain order {order} disagrees with closure {by_closure:?}"
            )));
        }
    }
    let transitive = is_transitive(gens, d);
    let primitive = transitive && matches!(block_system(gens, d)?, Primitivity::Primitive);
    let doubly_transitive = transitive && pair_orbit_is_full(gens, d);
    let tag = if order == d as u128 && has_element_of_order(gens, d, order) {
        GroupTag::Cyclic(d)
    } else if order == factorial(d) {
        GroupTag::Symmetric(d)
    } else if d >= 2 && order == factorial(d) / 2 {
        GroupTag::Alternating(d)
    } else if d == 6 && order == 120 && doubly_transitive {
        GroupTag::S5InS6
    } else {
        GroupTag::Other
    };
    Ok(GroupClass {
        degree: d,
        tag,
        order,
        transitive,
        primitive,
        doubly_transitive,
    })
}

fn has_element_of_order(gens: &[Permutation], d: usize, order: u128) -> bool {
    closure(gens, d, CLOSURE_LIMIT).is_some_and(|set| set.iter().any(|g| g.order() == order))
}

fn pair_orbit_is_full(gens: &[Permutation], d: usize) -> bool {
    if d < 2 {
        return true;
    }
    let mut seen = vec![false; d * d];
    let mut stack = vec![(0usize, 1usize)];
    seen[1] = true;
    let mut count = 1;
    while let Some((x, y)) = stack.pop() {
        for g in gens {
            let (a, b) = (g.apply(x), g.apply(y));
            if !seen[a * d + b] {
                seen[a * d + b] = true;
                count += 1;
                stack.push((a, b));
            }
        }
    }
    count == d * (d - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primitivity {
    Primitive,
    /// A nontrivial block system, blocks sorted, points 0-based.
    Imprimitive(Vec<Vec<usize>>),
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Finest block system in which `0` and `b` share a block.
fn minimal_blocks(gens: &[Permutation], d: usize, b: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..d).collect();
    let mut pending = vec![(0usize, b)];
    parent[b] = 0;
    while let Some((x, y)) = pending.pop() {
        for g in gens {
            let (rx, ry) = (find(&mut parent, g.apply(x)), find(&mut parent, g.apply(y)));
            if rx != ry {
                parent[rx.max(ry)] = rx.min(ry);
                pending.push((g.apply(x), g.apply(y)));
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; d];
    for x in 0..d {
        let r = find(&mut parent, x);
        if index[r] == usize::MAX {
            index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[r]].push(x);
    }
    blocks
}

fn block_system(gens: &[Permutation], d: usize) -> Result<Primitivity> {
    if !is_transitive(gens, d) {
        return Err(Error::Precondition("group is not transitive".into()));
    }
    for b in 1..d {
        let blocks = minimal_blocks(gens, d, b);
        if blocks.len() > 1 {
            return Ok(Primitivity::Imprimitive(blocks));
        }
    }
    Ok(Primitivity::Primitive)
}

/// Primitivity of a transitive group, with a block system when imprimitive.
pub fn is_primitive(gens: &[Permutation], d: usize) -> Result<Primitivity> {
    check_degree(gens, d)?;
    block_system(gens, d)
}

/// The group predicted for a pure-cycle problem.
pub fn parity_prediction(problem: &HurwitzProblem) -> GroupTag {
    let d = problem.d();
    let lengths = problem.cycle_lengths();
    let mut sorted = lengths.clone();
    sorted.sort_unstable();
    if lengths.len() == 2 {
        GroupTag::Cyclic(d)
    } else if d == 6 && sorted == [4, 4, 5] {
        GroupTag::S5InS6
    } else if lengths.iter().all(|e| e % 2 == 1) {
        GroupTag::Alternating(d)
    } else {
        GroupTag::Symmetric(d)
    }
}

/// Some `c` with `c⁻¹ to c = from`, for permutations of equal cycle type.
pub fn conjugator(from: &Permutation, to: &Permutation) -> Option<Permutation> {
    if from.cycle_type() != to.cycle_type() {
        return None;
    }
    let with_fixed = |p: &Permutation| {
        let mut cs = p.cycles();
        let moved = p.support();
        cs.extend(
            (0..p.degree())
                .filter(|&x| !moved.contains(x))
                .map(|x| vec![x]),
        );
        cs.sort_by_key(|c| c.len());
        cs
    };
    let mut images = vec![0usize; from.degree()];
    for (a, b) in with_fixed(from).iter().zip(with_fixed(to).iter()) {
        for (x, y) in a.iter().zip(b) {
            images[*x] = *y;
        }
    }
    Permutation::from_images(&images).ok()
}

/// Whether the `A_d`-class of an `e`-cycle differs from its `S_d`-class.
pub fn splits_in_alternating(e: usize, d: usize) -> bool {
    e % 2 == 1 && d - e <= 1 && d >= 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NielsenReport {
    pub class_count: usize,
    pub groups: Vec<GroupClass>,
    /// all classes generate isomorphic groups with equal invariants
    pub same_group: bool,
    /// positions whose class splits in the alternating group
    pub split_positions: Vec<usize>,
    /// the split positions can be aligned simultaneously for every class
    pub alternating_aligned: bool,
    pub unique: bool,
}

/// Checks that every class of `problem` lies in one Nielsen class.
pub fn nielsen_uniqueness_check(
    problem: &HurwitzProblem,
    enum_config: &EnumConfig,
    group_config: &GroupConfig,
) -> Result<NielsenReport> {
    let classes = enumerate_classes(problem, enum_config)?;
    let d = problem.d();
    let groups: Vec<GroupClass> = classes
        .iter()
        .map(|c| generated_group_with(c.sigma(), d, group_config))
        .collect::<Result<_>>()?;
    let mut distinct = groups.clone();
    distinct.dedup();
    let same_group = distinct.len() <= 1;
    let lengths = problem.cycle_lengths();
    let alternating = groups
        .first()
        .is_some_and(|g| g.tag == GroupTag::Alternating(d));
    let split_positions: Vec<usize> = if alternating {
        (0..lengths.len())
            .filter(|&i| splits_in_alternating(lengths[i], d))
            .collect()
    } else {
        Vec::new()
    };
    // With G = A_d on both sides, an aligning conjugation exists iff the
    // conjugators at the split positions all have one parity.
    let mut alternating_aligned = true;
    if split_positions.len() > 1 {
        let reference = classes[0].sigma();
        for c in &classes[1..] {
            let parities: Vec<bool> = split_positions
                .iter()
                .map(|&i| {
                    conjugator(&reference[i], &c.sigma()[i])
                        .map(|g| g.is_even())
                        .ok_or_else(|| Error::InvariantViolation("cycle types differ".into()))
                })
                .collect::<Result<_>>()?;
            if parities.iter().any(|&p| p != parities[0]) {
                alternating_aligned = false;
            }
        }
    }
    Ok(NielsenReport {
        class_count: classes.len(),
        unique: same_group && alternating_aligned,
        groups: distinct,
        same_group,
        split_positions,
        alternating_aligned,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::explicit::three_point_factorization;
    use crate::factorization::parse_tuple;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    #[test]
    fn examples() {
        let g = generated_group(&parse_tuple("(1 2);(1 3);(1 3);(1 2)", 3).unwrap(), 3).unwrap();
        assert_eq!((g.tag, g.order), (GroupTag::Symmetric(3), 6));

        let f = three_point_factorization(4, 3, 3, 3).unwrap();
        let g = generated_group(f.sigma(), 4).unwrap();
        assert_eq!((g.tag, g.order), (GroupTag::Alternating(4), 12));

        let f = three_point_factorization(6, 4, 4, 5).unwrap();
        let g = generated_group(f.sigma(), 6).unwrap();
        assert_eq!(g.tag, GroupTag::S5InS6);
        assert_eq!(g.order, 120);
        assert!(g.doubly_transitive && g.primitive);

        let c = Permutation::standard_cycle(5, 5);
        let g = generated_group(&[c.clone(), c.inverse()], 5).unwrap();
        assert_eq!(g.tag, GroupTag::Cyclic(5));
    }

    #[test]
    fn primitivity() {
        let c4 = p("(1 2 3 4)", 4);
        match is_primitive(&[c4], 4).unwrap() {
            Primitivity::Imprimitive(blocks) => assert_eq!(blocks, vec![vec![0, 2], vec![1, 3]]),
            Primitivity::Primitive => panic!("cyclic group of order 4 is imprimitive"),
        }
        let s3 = [p("(1 2)", 3), p("(1 2 3)", 3)];
        assert_eq!(is_primitive(&s3, 3).unwrap(), Primitivity::Primitive);
        assert!(matches!(
            is_primitive(&[p("(1 2)", 3)], 3),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn predictions() {
        let g0 = |d, e: &[usize]| HurwitzProblem::genus_zero(d, e.to_vec()).unwrap();
        assert_eq!(
            parity_prediction(&g0(4, &[3, 3, 3])),
            GroupTag::Alternating(4)
        );
        assert_eq!(
            parity_prediction(&g0(5, &[2, 3, 3, 4])),
            GroupTag::Symmetric(5)
        );
        assert_eq!(parity_prediction(&g0(6, &[4, 4, 5])), GroupTag::S5InS6);
        assert_eq!(parity_prediction(&g0(6, &[6, 6])), GroupTag::Cyclic(6));
    }

    #[test]
    fn nielsen_examples() {
        let g0 = |d, e: &[usize]| HurwitzProblem::genus_zero(d, e.to_vec()).unwrap();
        let r = nielsen_uniqueness_check(
            &g0(3, &[2, 2, 2, 2]),
            &EnumConfig::default(),
            &GroupConfig::default(),
        )
        .unwrap();
        assert!(r.unique);
        assert_eq!(r.groups[0].tag, GroupTag::Symmetric(3));
        let r = nielsen_uniqueness_check(
            &g0(4, &[4, 4]),
            &EnumConfig::default(),
            &GroupConfig::default(),
        )
        .unwrap();
        assert!(r.unique);
        assert_eq!(r.groups[0].tag, GroupTag::Cyclic(4));
        let r = nielsen_uniqueness_check(
            &g0(5, &[3, 3, 3, 3]),
            &EnumConfig::default(),
            &GroupConfig::default(),
        )
        .unwrap();
        assert!(r.unique);
        assert_eq!(r.groups[0].tag, GroupTag::Alternating(5));
    }

    #[test]
    fn conjugators() {
        let a = p("(1 2 3)", 4);
        let b = p("(2 4 3)", 4);
        let c = conjugator(&a, &b).unwrap();
        assert_eq!(b.conjugate(&c).unwrap(), a);
        assert!(conjugator(&a, &p("(1 2)", 4)).is_none());
        assert!(splits_in_alternating(5, 5) && splits_in_alternating(5, 6));
        assert!(!splits_in_alternating(5, 7) && !splits_in_alternating(4, 4));
    }

    #[test]
    fn degree_bound() {
        let c = Permutation::standard_cycle(11, 11);
        assert!(matches!(
            generated_group(&[c], 11),
            Err(Error::BoundExceeded(_))
        ));
    }
}
