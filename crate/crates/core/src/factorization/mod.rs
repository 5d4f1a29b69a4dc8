//! Hurwitz problems, factorizations, and the predicates and normal forms
//! defined on tuples of permutations.

mod canonical;
mod pair;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, PointSet, MAX_DEGREE};

pub use canonical::canonical_form;
pub use pair::{cycle_pair_decompose, overlap_cycle_count, PairDecomposition};

/// The data `(d, r, g, ē)` of a pure-cycle Hurwitz problem, optionally
/// extended by `simple_count` trailing transpositions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HurwitzProblem {
    d: usize,
    genus: usize,
    e: Vec<usize>,
    simple_count: usize,
}

impl HurwitzProblem {
    /// Validates ranges and the Riemann–Hurwitz relation
    /// `2d - 2 + 2g = Σ(e_i - 1) + simple_count`.
    pub fn new(d: usize, e: Vec<usize>, genus: usize, simple_count: usize) -> Result<Self> {
        let p = Self::new_unchecked(d, e, genus, simple_count)?;
        if !p.satisfies_riemann_hurwitz() {
            return Err(Error::InvalidProblem(format!(
                "Riemann-Hurwitz fails: 2d-2+2g = {} but the indices sum to {}",
                2 * d + 2 * genus - 2,
                p.index_sum()
            )));
        }
        if simple_count > 0 && simple_count != 3 * genus {
            return Err(Error::InvalidProblem(format!(
                "simple_count must be 0 or 3g = {}, got {simple_count}",
                3 * genus
            )));
        }
        Ok(p)
    }

    pub fn genus_zero(d: usize, e: Vec<usize>) -> Result<Self> {
        Self::new(d, e, 0, 0)
    }

    /// Checks ranges only; the Riemann–Hurwitz relation may fail, in which
    /// case the problem simply has no factorizations.
    pub fn new_unchecked(
        d: usize,
        e: Vec<usize>,
        genus: usize,
        simple_count: usize,
    ) -> Result<Self> {
        if d == 0 || d > MAX_DEGREE {
            return Err(Error::InvalidDegree(d));
        }
        if e.len() < 2 {
            return Err(Error::InvalidProblem(format!(
                "need r >= 2 cycles, got {}",
                e.len()
            )));
        }
        if let Some(&bad) = e.iter().find(|&&x| x < 2 || x > d) {
            return Err(Error::InvalidProblem(format!(
                "cycle length {bad} outside 2..={d}"
            )));
        }
        if simple_count > 0 && d < 2 {
            return Err(Error::InvalidProblem("transpositions need d >= 2".into()));
        }
        Ok(HurwitzProblem {
            d,
            genus,
            e,
            simple_count,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> usize {
        self.e.len()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn e(&self) -> &[usize] {
        &self.e
    }

    pub fn simple_count(&self) -> usize {
        self.simple_count
    }

    /// Cycle lengths of every tuple entry: `ē` followed by `simple_count` twos.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut out = self.e.clone();
        out.extend(std::iter::repeat_n(2, self.simple_count));
        out
    }

    pub fn tuple_len(&self) -> usize {
        self.e.len() + self.simple_count
    }

    pub fn index_sum(&self) -> usize {
        self.cycle_lengths().iter().map(|e| e - 1).sum()
    }

    pub fn satisfies_riemann_hurwitz(&self) -> bool {
        self.index_sum() == 2 * self.d + 2 * self.genus - 2
    }

    /// The same problem with `ē` permuted; `order[i]` is the old position of
    /// the new `i`-th length.
    pub fn reordered(&self, order: &[usize]) -> HurwitzProblem {
        HurwitzProblem {
            e: order.iter().map(|&i| self.e[i]).collect(),
            ..self.clone()
        }
    }
}

impl fmt::Display for HurwitzProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.e.iter().map(ToString::to_string).collect();
        write!(f, "d={} g={} e=({})", self.d, self.genus, e.join(","))?;
        if self.simple_count > 0 {
            write!(f, " +{} transpositions", self.simple_count)?;
        }
        Ok(())
    }
}

/// First condition a tuple fails, in checking order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    WrongLength {
        expected: usize,
        found: usize,
    },
    /// 1-based position whose entry is not a cycle of the required length.
    ClassMismatch {
        position: usize,
        expected: usize,
    },
    ProductNotIdentity,
    NotTransitive,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::WrongLength { expected, found } => {
                write!(f, "wrong tuple length: expected {expected}, found {found}")
            }
            Diagnostic::ClassMismatch { position, expected } => {
                write!(
                    f,
                    "class mismatch: entry {position} is not a {expected}-cycle"
                )
            }
            Diagnostic::ProductNotIdentity => f.write_str("product is not the identity"),
            Diagnostic::NotTransitive => f.write_str("not transitive"),
        }
    }
}

/// Product `t[0] * t[1] * ... * t[n-1]` (the last entry acts first).
pub fn product(tuple: &[Permutation]) -> Option<Permutation> {
    let mut it = tuple.iter().rev();
    let mut acc = it.next()?.clone();
    for p in it {
        acc = p * &acc;
    }
    Some(acc)
}

/// Orbit of point 0 under the group generated by `tuple` covers all points.
pub fn is_transitive(tuple: &[Permutation], d: usize) -> bool {
    let mut orbit = PointSet::empty();
    orbit.insert(0);
    let mut stack = vec![0usize];
    while let Some(x) = stack.pop() {
        for p in tuple {
            let y = p.apply(x);
            if !orbit.contains(y) {
                orbit.insert(y);
                stack.push(y);
            }
        }
    }
    orbit.len() == d
}

fn check_degrees(d: usize, tuple: &[Permutation]) -> Result<()> {
    match tuple.iter().find(|p| p.degree() != d) {
        Some(p) => Err(Error::DegreeMismatch {
            left: d,
            right: p.degree(),
        }),
        None => Ok(()),
    }
}

/// Validity of `tuple` as a factorization for `problem`; `Err(diagnostic)`
/// names the first violated condition.
pub fn is_hurwitz_factorization(
    problem: &HurwitzProblem,
    tuple: &[Permutation],
) -> Result<std::result::Result<(), Diagnostic>> {
    check_degrees(problem.d(), tuple)?;
    let lengths = problem.cycle_lengths();
    if tuple.len() != lengths.len() {
        return Ok(Err(Diagnostic::WrongLength {
            expected: lengths.len(),
            found: tuple.len(),
        }));
    }
    for (i, (p, &e)) in tuple.iter().zip(&lengths).enumerate() {
        if !p.is_single_cycle(e) {
            return Ok(Err(Diagnostic::ClassMismatch {
                position: i + 1,
                expected: e,
            }));
        }
    }
    if !product(tuple).is_some_and(|p| p.is_identity()) {
        return Ok(Err(Diagnostic::ProductNotIdentity));
    }
    if !is_transitive(tuple, problem.d()) {
        return Ok(Err(Diagnostic::NotTransitive));
    }
    Ok(Ok(()))
}

/// A validated factorization.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    problem: HurwitzProblem,
    sigma: Vec<Permutation>,
}

impl Factorization {
    pub fn new(problem: HurwitzProblem, sigma: Vec<Permutation>) -> Result<Self> {
        if let Err(diag) = is_hurwitz_factorization(&problem, &sigma)? {
            return Err(Error::Precondition(format!(
                "not a Hurwitz factorization for {problem}: {diag}"
            )));
        }
        Ok(Factorization { problem, sigma })
    }

    pub fn problem(&self) -> &HurwitzProblem {
        &self.problem
    }

    pub fn sigma(&self) -> &[Permutation] {
        &self.sigma
    }

    pub fn into_sigma(self) -> Vec<Permutation> {
        self.sigma
    }

    pub fn canonical(&self) -> EquivalenceClass {
        EquivalenceClass::of(&self.sigma)
    }

    pub fn to_json(&self) -> FactorizationJson {
        FactorizationJson {
            d: self.problem.d(),
            genus: self.problem.genus(),
            e: self.problem.e().to_vec(),
            sigma: self.sigma.iter().map(Permutation::cycles_1based).collect(),
        }
    }

    pub fn from_json(json: &FactorizationJson) -> Result<Self> {
        let simple = json.sigma.len().saturating_sub(json.e.len());
        let problem = HurwitzProblem::new(json.d, json.e.clone(), json.genus, simple)?;
        let sigma = json
            .sigma
            .iter()
            .map(|cycles| Permutation::from_cycles(cycles, json.d))
            .collect::<Result<Vec<_>>>()?;
        Factorization::new(problem, sigma)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.sigma))
    }
}

/// `(1 2);(1 3);...`, the tuple form accepted on the command line.
pub fn format_tuple(tuple: &[Permutation]) -> String {
    tuple
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_tuple(s: &str, d: usize) -> Result<Vec<Permutation>> {
    s.split(';')
        .map(|part| Permutation::parse(part, d))
        .collect()
}

/// Wire form: `{"d":int, "genus":int, "e":[int], "sigma":[[[int]]]}`, with
/// 1-based points and each permutation written as its list of cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub d: usize,
    pub genus: usize,
    pub e: Vec<usize>,
    pub sigma: Vec<Vec<Vec<usize>>>,
}

/// A class of tuples under simultaneous conjugation, stored as its
/// canonical representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EquivalenceClass {
    sigma: Vec<Permutation>,
}

impl EquivalenceClass {
    pub fn of(tuple: &[Permutation]) -> Self {
        EquivalenceClass {
            sigma: canonical_form(tuple),
        }
    }

    /// Wraps a tuple already in canonical form.
    pub(crate) fn from_canonical(sigma: Vec<Permutation>) -> Self {
        debug_assert_eq!(canonical_form(&sigma), sigma);
        EquivalenceClass { sigma }
    }

    pub fn sigma(&self) -> &[Permutation] {
        &self.sigma
    }

    pub fn degree(&self) -> usize {
        self.sigma.first().map_or(0, Permutation::degree)
    }

    /// Cycle lengths per position (entries are assumed to be single cycles).
    pub fn lengths(&self) -> Vec<usize> {
        self.sigma.iter().map(|p| p.support().len()).collect()
    }
}

impl fmt::Display for EquivalenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_tuple(&self.sigma))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProfileKind {
    /// Every point in exactly two supports except one point in all four.
    AllTwoPlusOneQuad,
    /// Every point in exactly two supports except two points in three each.
    AllTwoPlusTwoTriple,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportProfile {
    /// `counts[x]` = number of entries whose support contains point `x`.
    pub counts: Vec<usize>,
    pub kind: ProfileKind,
}

/// Support multiplicities of a four-entry tuple and their shape.
pub fn support_profile(tuple: &[Permutation]) -> SupportProfile {
    let d = tuple.first().map_or(0, Permutation::degree);
    let mut counts = vec![0usize; d];
    for p in tuple {
        for x in p.support().iter() {
            counts[x] += 1;
        }
    }
    let mut hist = [0usize; 5];
    let mut other = false;
    for &c in &counts {
        if c <= 4 {
            hist[c] += 1;
        } else {
            other = true;
        }
    }
    let kind = if other || hist[0] > 0 || hist[1] > 0 || tuple.len() != 4 {
        ProfileKind::Other
    } else if hist[4] == 1 && hist[3] == 0 {
        ProfileKind::AllTwoPlusOneQuad
    } else if hist[4] == 0 && hist[3] == 2 {
        ProfileKind::AllTwoPlusTwoTriple
    } else {
        ProfileKind::Other
    };
    SupportProfile { counts, kind }
}
