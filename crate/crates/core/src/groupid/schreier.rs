//! Stabilizer chains by the deterministic Schreier–Sims algorithm.

use std::collections::HashSet;

use crate::perm::Permutation;

struct Level {
    base: usize,
    gens: Vec<Permutation>,
    /// `transversal[x]` maps the base point to `x`
    transversal: Vec<Option<Permutation>>,
    orbit: Vec<usize>,
}

pub(crate) struct StabilizerChain {
    d: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub(crate) fn new(gens: &[Permutation], d: usize) -> Self {
        let mut chain = StabilizerChain {
            d,
            levels: Vec::new(),
        };
        for g in gens {
            chain.insert(g.clone());
        }
        chain
    }

    fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate() {
            let x = h.apply(level.base);
            match &level.transversal[x] {
                Some(u) => h = &u.inverse() * &h,
                None => return (h, j),
            }
        }
        (h, self.levels.len())
    }

    #[cfg(test)]
    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        self.sift(g).0.is_identity()
    }

    fn insert(&mut self, g: Permutation) {
        let (h, j) = self.sift(&g);
        if h.is_identity() {
            return;
        }
        if j == self.levels.len() {
            let base = h.support().min().expect("nonidentity moves a point");
            let mut transversal = vec![None; self.d];
            transversal[base] = Some(Permutation::identity(self.d));
            self.levels.push(Level {
                base,
                gens: Vec::new(),
                transversal,
                orbit: vec![base],
            });
        }
        for level in &mut self.levels[..=j] {
            level.gens.push(h.clone());
        }
        for l in (0..=j).rev() {
            self.close(l);
        }
    }

    /// Extends the orbit at level `l` and inserts every Schreier generator.
    fn close(&mut self, l: usize) {
        let mut i = 0;
        while i < self.levels[l].orbit.len() {
            let x = self.levels[l].orbit[i];
            let gens = self.levels[l].gens.clone();
            for s in &gens {
                let level = &mut self.levels[l];
                let ux = level.transversal[x]
                    .clone()
                    .expect("orbit point has a transversal");
                let y = s.apply(x);
                match &level.transversal[y] {
                    None => {
                        level.transversal[y] = Some(s * &ux);
                        level.orbit.push(y);
                    }
                    Some(uy) => {
                        let schreier = &(&uy.inverse() * s) * &ux;
                        if !schreier.is_identity() {
                            self.insert(schreier);
                        }
                    }
                }
            }
            i += 1;
        }
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }
}

/// Group order by closing the generators under multiplication, or `None`
/// once more than `limit` elements are found.
pub(crate) fn closure_order(gens: &[Permutation], d: usize, limit: usize) -> Option<u128> {
    closure(gens, d, limit).map(|s| s.len() as u128)
}

pub(crate) fn closure(
    gens: &[Permutation],
    d: usize,
    limit: usize,
) -> Option<HashSet<Permutation>> {
    let id = Permutation::identity(d);
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(p) = queue.pop() {
        for g in gens {
            let q = g * &p;
            if seen.insert(q.clone()) {
                if seen.len() > limit {
                    return None;
                }
                queue.push(q);
            }
        }
    }
    Some(seen)
}
