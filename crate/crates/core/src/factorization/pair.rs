//! Structure of a product of two overlapping cycles.

use crate::error::{Error, Result};
use crate::perm::{Permutation, PointSet};

/// `σ = (w_1, v_1, …, w_m, v_m)` and `σ' = (w'_1, v'_1, …, w'_m, v'_m)`
/// where each `w_i` is `w'_{τ(i)}` reversed and the first points of the
/// `w_i` are exactly the points moved by `σ`, `σ'` and `σσ'`.
///
/// All points are 0-based; the decomposition is anchored so that `w_1`
/// starts at the least anchor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDecomposition {
    pub w: Vec<Vec<usize>>,
    pub v: Vec<Vec<usize>>,
    pub w_prime: Vec<Vec<usize>>,
    pub v_prime: Vec<Vec<usize>>,
    /// `tau[i] = j` means `w[i]` is `w_prime[j]` reversed.
    pub tau: Vec<usize>,
    pub anchors: Vec<usize>,
}

impl PairDecomposition {
    pub fn m(&self) -> usize {
        self.anchors.len()
    }
}

fn single_cycle(p: &Permutation) -> Option<Vec<usize>> {
    let cycles = p.cycles();
    (cycles.len() == 1).then(|| cycles.into_iter().next().unwrap())
}

/// The cycle of `p` through `start`, beginning at `start`.
fn walk(p: &Permutation, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut x = p.apply(start);
    while x != start {
        out.push(x);
        x = p.apply(x);
    }
    out
}

fn triple_overlap(s: &Permutation, t: &Permutation) -> (PointSet, Permutation) {
    let prod = s * t;
    let set = s
        .support()
        .intersection(t.support())
        .intersection(prod.support());
    (set, prod)
}

/// Splits two non-disjoint cycles with nontrivial product into the words of
/// the unique expression relating them.
pub fn cycle_pair_decompose(
    sigma: &Permutation,
    sigma_p: &Permutation,
) -> Result<PairDecomposition> {
    if sigma.degree() != sigma_p.degree() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: sigma_p.degree(),
        });
    }
    if single_cycle(sigma).is_none() || single_cycle(sigma_p).is_none() {
        return Err(Error::Precondition(
            "both permutations must be single cycles".into(),
        ));
    }
    let supp = sigma.support();
    let supp_p = sigma_p.support();
    if supp.intersection(supp_p).is_empty() {
        return Err(Error::Precondition("cycles are disjoint".into()));
    }
    let (anchor_set, prod) = triple_overlap(sigma, sigma_p);
    if prod.is_identity() {
        return Err(Error::Precondition("product is trivial".into()));
    }
    let k1 = anchor_set.min().ok_or_else(|| {
        Error::InvariantViolation("no point moved by both cycles and their product".into())
    })?;

    // σ read from k1, cut at every anchor.
    let seq = walk(sigma, k1);
    let mut anchors = Vec::new();
    let mut w = Vec::new();
    let mut v = Vec::new();
    let mut i = 0;
    while i < seq.len() {
        let k = seq[i];
        anchors.push(k);
        let mut j = i + 1;
        while j < seq.len() && !anchor_set.contains(seq[j]) {
            j += 1;
        }
        let chunk = &seq[i..j];
        let split = chunk
            .iter()
            .position(|&x| !supp_p.contains(x))
            .unwrap_or(chunk.len());
        w.push(chunk[..split].to_vec());
        v.push(chunk[split..].to_vec());
        i = j;
    }
    for vi in &v {
        if vi.iter().any(|&x| supp_p.contains(x)) {
            return Err(Error::InvariantViolation(format!(
                "v word {vi:?} meets the support of σ'"
            )));
        }
    }

    // σ' read from the end of w_1, so that w'_1 = reverse(w_1).
    let seq_p = walk(sigma_p, *w[0].last().unwrap());
    let mut starts: Vec<(usize, usize)> = Vec::new();
    for (idx, wi) in w.iter().enumerate() {
        let rev: Vec<usize> = wi.iter().rev().copied().collect();
        let pos = seq_p.iter().position(|&x| x == rev[0]).ok_or_else(|| {
            Error::InvariantViolation(format!("point {} of w missing from σ'", rev[0] + 1))
        })?;
        if pos + rev.len() > seq_p.len() || seq_p[pos..pos + rev.len()] != rev[..] {
            return Err(Error::InvariantViolation(format!(
                "reversed w word {rev:?} is not contiguous in σ'"
            )));
        }
        starts.push((pos, idx));
    }
    starts.sort_unstable();
    let m = starts.len();
    let mut tau = vec![0usize; m];
    let mut w_prime = Vec::with_capacity(m);
    let mut v_prime = Vec::with_capacity(m);
    for (j, &(pos, idx)) in starts.iter().enumerate() {
        tau[idx] = j;
        let len = w[idx].len();
        let end = if j + 1 < m {
            starts[j + 1].0
        } else {
            seq_p.len()
        };
        if pos + len > end {
            return Err(Error::InvariantViolation("w' words overlap".into()));
        }
        w_prime.push(seq_p[pos..pos + len].to_vec());
        v_prime.push(seq_p[pos + len..end].to_vec());
    }
    for vi in &v_prime {
        if vi.iter().any(|&x| supp.contains(x)) {
            return Err(Error::InvariantViolation(format!(
                "v' word {vi:?} meets the support of σ"
            )));
        }
    }
    Ok(PairDecomposition {
        w,
        v,
        w_prime,
        v_prime,
        tau,
        anchors,
    })
}

/// `S = supp σ ∩ supp σ' ∩ supp σσ'` and the number of nontrivial cycles of
/// `σσ'`, which equal `#S` whenever `#S <= 2`.
pub fn overlap_cycle_count(
    sigma: &Permutation,
    sigma_p: &Permutation,
) -> Result<(PointSet, usize)> {
    if sigma.degree() != sigma_p.degree() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: sigma_p.degree(),
        });
    }
    if sigma.support().intersection(sigma_p.support()).is_empty() {
        return Err(Error::Precondition("cycles are disjoint".into()));
    }
    let (set, prod) = triple_overlap(sigma, sigma_p);
    if set.len() > 2 {
        return Err(Error::Precondition(format!("#S = {} exceeds 2", set.len())));
    }
    let cycles = prod.cycles();
    let one_each = cycles
        .iter()
        .all(|c| c.iter().filter(|&&x| set.contains(x)).count() == 1);
    if cycles.len() != set.len() || !one_each {
        return Err(Error::InvariantViolation(format!(
            "{sigma} * {sigma_p} = {prod} does not have one cycle per point of S = {set:?}"
        )));
    }
    Ok((set, cycles.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, d: usize) -> Permutation {
        Permutation::parse(s, d).unwrap()
    }

    fn one_based(words: &[Vec<usize>]) -> Vec<Vec<usize>> {
        words
            .iter()
            .map(|w| w.iter().map(|x| x + 1).collect())
            .collect()
    }

    #[test]
    fn single_anchor() {
        let dec = cycle_pair_decompose(&p("(3 1 2)", 5), &p("(3 4 5)", 5)).unwrap();
        assert_eq!(dec.m(), 1);
        assert_eq!(dec.anchors, vec![2]);
        assert_eq!(one_based(&dec.w), vec![vec![3]]);
        assert_eq!(one_based(&dec.v), vec![vec![1, 2]]);
        assert_eq!(one_based(&dec.w_prime), vec![vec![3]]);
        assert_eq!(one_based(&dec.v_prime), vec![vec![4, 5]]);
        assert_eq!(dec.tau, vec![0]);
    }

    #[test]
    fn trivial_product_rejected() {
        assert!(matches!(
            cycle_pair_decompose(&p("(1 2)", 3), &p("(1 2)", 3)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            cycle_pair_decompose(&p("(1 2)", 4), &p("(3 4)", 4)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn transposition_pair() {
        let dec = cycle_pair_decompose(&p("(1 3)", 3), &p("(1 2)", 3)).unwrap();
        assert_eq!(dec.m(), 1);
        assert_eq!(dec.anchors, vec![0]);
    }

    #[test]
    fn two_anchors() {
        let s3 = p("(1 3 5)", 5);
        let s4 = p("(1 2 3 4)", 5);
        let dec = cycle_pair_decompose(&s3, &s4).unwrap();
        assert_eq!(dec.anchors, vec![0, 2]);
        for (i, wi) in dec.w.iter().enumerate() {
            let mut rev = dec.w_prime[dec.tau[i]].clone();
            rev.reverse();
            assert_eq!(*wi, rev);
        }
    }

    #[test]
    fn overlap_counts() {
        let (s, n) = overlap_cycle_count(&p("(1 3)", 3), &p("(1 2)", 3)).unwrap();
        assert_eq!((s.iter().collect::<Vec<_>>(), n), (vec![0], 1));

        let c = p("(1 2 3 4)", 5);
        let (s, n) = overlap_cycle_count(&c, &c.inverse()).unwrap();
        assert!(s.is_empty());
        assert_eq!(n, 0);

        let s3 = p("(1 3 5)", 5);
        let s4 = p("(1 2 3 4)", 5);
        assert_eq!(&s3 * &s4, p("(1 2 5)(3 4)", 5));
        let (s, n) = overlap_cycle_count(&s3, &s4).unwrap();
        assert_eq!((s.iter().collect::<Vec<_>>(), n), (vec![0, 2], 2));
    }

    #[test]
    fn overlap_scope_errors() {
        // product (1 4 5 2 3 6) moves all of {1, 3, 5}
        let a = p("(1 2 3 4 5 6)", 6);
        let b = p("(1 3 5)", 6);
        assert_eq!(triple_overlap(&a, &b).0.len(), 3);
        assert!(matches!(
            overlap_cycle_count(&a, &b),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            overlap_cycle_count(&p("(1 2)", 4), &p("(3 4)", 4)),
            Err(Error::Precondition(_))
        ));
    }
}
