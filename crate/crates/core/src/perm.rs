//! Permutations of small degree.
//!
//! Points are 0-based inside the Rust API (`apply`, `images`, `cycles`) and
//! 1-based in every external format: the cycle notation produced by
//! `Display` and accepted by [`Permutation::parse`], and the JSON list-of-cycles
//! form.
//!
//! Products act rightmost-first: `(p * q)(x) = p(q(x))`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 64;

/// A set of points of {0, .., 63} stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u64);

impl PointSet {
    pub const fn empty() -> Self {
        PointSet(0)
    }

    /// All points `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u64 << x;
    }

    pub fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Points in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let x = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(x)
        })
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::empty();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|x| x + 1)).finish()
    }
}

/// The cycle type of a permutation: nontrivial cycle lengths, ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    pub degree: usize,
    pub parts: Vec<usize>,
}

impl CycleType {
    /// Sum of `(part - 1)`, the contribution to Riemann–Hurwitz.
    pub fn index(&self) -> usize {
        self.parts.iter().map(|a| a - 1).sum()
    }

    pub fn fixed_points(&self) -> usize {
        self.degree - self.parts.iter().sum::<usize>()
    }
}

/// An exact bijection of `{0, .., d-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

fn check_degree(d: usize) -> Result<()> {
    if d == 0 || d > MAX_DEGREE {
        Err(Error::InvalidDegree(d))
    } else {
        Ok(())
    }
}

impl Permutation {
    /// # Panics
    /// Panics if `d` is 0 or above [`MAX_DEGREE`].
    pub fn identity(d: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&d), "degree {d} out of range");
        Permutation {
            images: (0..d as u8).collect(),
        }
    }

    /// The cycle `(0 1 .. e-1)` in degree `d`.
    pub fn standard_cycle(e: usize, d: usize) -> Self {
        let mut p = Self::identity(d);
        for x in 0..e {
            p.images[x] = ((x + 1) % e) as u8;
        }
        p
    }

    /// Builds a permutation from 0-based one-line images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let d = images.len();
        check_degree(d)?;
        let mut seen = PointSet::empty();
        for &y in images {
            if y >= d {
                return Err(Error::PointOutOfRange {
                    point: y + 1,
                    degree: d,
                });
            }
            if seen.contains(y) {
                return Err(Error::RepeatedPoint(y + 1));
            }
            seen.insert(y);
        }
        Ok(Permutation {
            images: images.iter().map(|&y| y as u8).collect(),
        })
    }

    pub(crate) fn from_raw(images: Vec<u8>) -> Self {
        debug_assert!(
            Self::from_images(&images.iter().map(|&y| y as usize).collect::<Vec<_>>()).is_ok()
        );
        Permutation { images }
    }

    /// Builds a permutation from cycles given with 1-based points.
    pub fn from_cycles<C: AsRef<[usize]>>(cycles: &[C], d: usize) -> Result<Self> {
        check_degree(d)?;
        let mut images: Vec<u8> = (0..d as u8).collect();
        let mut seen = PointSet::empty();
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &x in cycle {
                if x == 0 || x > d {
                    return Err(Error::PointOutOfRange {
                        point: x,
                        degree: d,
                    });
                }
                if seen.contains(x - 1) {
                    return Err(Error::RepeatedPoint(x));
                }
                seen.insert(x - 1);
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x - 1] = (cycle[(i + 1) % cycle.len()] - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `(1 4 5)(2 3)` or `()`.
    pub fn parse(s: &str, d: usize) -> Result<Self> {
        Self::from_cycles(&parse_cycles(s)?, d)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    fn check_same_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self * q`, with `q` acting first.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        self.check_same_degree(q)?;
        Ok(self * q)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u8;
        }
        Permutation { images: inv }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        self.check_same_degree(g)?;
        Ok(self.conjugate_by(g))
    }

    pub(crate) fn conjugate_by(&self, g: &Permutation) -> Permutation {
        // (g⁻¹ p g)(x) = g⁻¹(p(g(x))); relabel through g⁻¹.
        self.relabel(&g.inverse())
    }

    /// `pi · self · pi⁻¹`: the permutation obtained by renaming each point
    /// `x` to `pi(x)`.
    pub fn relabel(&self, pi: &Permutation) -> Permutation {
        let mut out = vec![0u8; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            out[pi.apply(x)] = pi.images[y as usize];
        }
        Permutation { images: out }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &y)| x == y as usize)
    }

    pub fn support(&self) -> PointSet {
        self.images
            .iter()
            .enumerate()
            .filter(|&(x, &y)| x != y as usize)
            .map(|(x, _)| x)
            .collect()
    }

    /// Nontrivial cycles, 0-based, each rotated to start at its least point,
    /// ordered by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = PointSet::empty();
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen.contains(start) || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut x = self.apply(start);
            while x != start {
                seen.insert(x);
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Nontrivial cycles with 1-based points, as used by the JSON format.
    pub fn cycles_1based(&self) -> Vec<Vec<usize>> {
        self.cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|x| x + 1).collect())
            .collect()
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        parts.sort_unstable();
        CycleType {
            degree: self.degree(),
            parts,
        }
    }

    pub fn index(&self) -> usize {
        self.degree() - self.cycle_count_with_fixed()
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count_with_fixed(&self) -> usize {
        let mut seen = PointSet::empty();
        let mut count = 0;
        for start in 0..self.degree() {
            if seen.contains(start) {
                continue;
            }
            count += 1;
            let mut x = start;
            loop {
                seen.insert(x);
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
        }
        count
    }

    /// True iff `self` is a single cycle of length `e` (plus fixed points).
    pub fn is_single_cycle(&self, e: usize) -> bool {
        let support = self.support();
        if support.len() != e || e < 2 {
            return false;
        }
        let start = support.min().unwrap();
        let mut x = self.apply(start);
        let mut len = 1;
        while x != start {
            len += 1;
            x = self.apply(x);
        }
        len == e
    }

    pub fn is_even(&self) -> bool {
        self.index().is_multiple_of(2)
    }

    /// Element order, the lcm of the cycle lengths.
    pub fn order(&self) -> u128 {
        fn gcd(a: u128, b: u128) -> u128 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycle_type()
            .parts
            .iter()
            .fold(1u128, |acc, &a| acc / gcd(acc, a as u128) * a as u128)
    }

    pub fn pow(&self, n: usize) -> Permutation {
        let mut out = Permutation::identity(self.degree());
        for _ in 0..n {
            out = self * &out;
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// # Panics
    /// Panics on degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, q: &Permutation) -> Permutation {
        assert_eq!(self.degree(), q.degree(), "degree mismatch");
        Permutation {
            images: q.images.iter().map(|&y| self.images[y as usize]).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses cycle notation into 1-based cycles. Points inside a cycle may be
/// separated by whitespace or commas.
pub fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
        let close = body
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad point {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        } else if points.len() == 1 && points[0] == 0 {
            return Err(Error::PointOutOfRange {
                point: 0,
                degree: 0,
            });
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}
