//! Canonical representatives under simultaneous conjugation.
//!
//! The canonical form of a tuple is the lexicographically least tuple, over
//! all relabelings `π ∈ S_d`, of the concatenated one-line images of
//! `(π t_1 π⁻¹, …, π t_n π⁻¹)`.
//!
//! The least first entry depends only on the cycle type of `t_1`: fixed
//! points take the first labels, then cycles in order of increasing length,
//! each cycle labelled consecutively along its direction. The search is over
//! the relabelings that produce this first entry, i.e. over a coset of the
//! centralizer of `t_1`. Cycles of `t_1` are assigned to label slots lazily:
//! a point whose label is first needed as a value takes the earliest free
//! slot of its cycle length, which is the unique way to minimise that value.
//! Branching happens only when a free slot start is needed as a position.

use crate::perm::Permutation;

const NONE: u8 = u8::MAX;

struct Layout {
    d: usize,
    /// cycles of the first entry, fixed points included
    cycles: Vec<Vec<u8>>,
    cycle_of: Vec<u8>,
    /// length group of each cycle
    group_of_cycle: Vec<usize>,
    /// slot starts per length group, ascending
    group_slots: Vec<Vec<u8>>,
    /// length group owning each label
    group_of_label: Vec<usize>,
    first: Permutation,
}

impl Layout {
    fn new(first: &Permutation) -> Layout {
        let d = first.degree();
        let mut seen = vec![false; d];
        let mut cycles: Vec<Vec<u8>> = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut c = vec![start as u8];
            seen[start] = true;
            let mut x = first.apply(start);
            while x != start {
                seen[x] = true;
                c.push(x as u8);
                x = first.apply(x);
            }
            cycles.push(c);
        }
        let mut cycle_of = vec![0u8; d];
        for (i, c) in cycles.iter().enumerate() {
            for &x in c {
                cycle_of[x as usize] = i as u8;
            }
        }
        let mut lengths: Vec<usize> = cycles.iter().map(Vec::len).collect();
        lengths.sort_unstable();
        lengths.dedup();
        let group_of_cycle: Vec<usize> = cycles
            .iter()
            .map(|c| lengths.binary_search(&c.len()).unwrap())
            .collect();
        let mut group_slots = vec![Vec::new(); lengths.len()];
        let mut group_of_label = vec![0usize; d];
        let mut images = vec![0u8; d];
        let mut next = 0usize;
        for (g, &len) in lengths.iter().enumerate() {
            let count = group_of_cycle.iter().filter(|&&h| h == g).count();
            for _ in 0..count {
                group_slots[g].push(next as u8);
                for i in 0..len {
                    group_of_label[next + i] = g;
                    images[next + i] = (next + (i + 1) % len) as u8;
                }
                next += len;
            }
        }
        Layout {
            d,
            cycles,
            cycle_of,
            group_of_cycle,
            group_slots,
            group_of_label,
            first: Permutation::from_raw(images),
        }
    }
}

#[derive(Clone)]
struct State {
    label_of: Vec<u8>,
    point_of: Vec<u8>,
    /// slots already used per length group
    used: Vec<usize>,
}

impl State {
    /// Labels cycle `c` into the next free slot of its group, starting at `x`.
    fn place(&mut self, layout: &Layout, x: u8) {
        let c = layout.cycle_of[x as usize] as usize;
        let g = layout.group_of_cycle[c];
        let start = layout.group_slots[g][self.used[g]];
        self.used[g] += 1;
        let cycle = &layout.cycles[c];
        let offset = cycle.iter().position(|&p| p == x).unwrap();
        for i in 0..cycle.len() {
            let p = cycle[(offset + i) % cycle.len()];
            let label = start + i as u8;
            self.label_of[p as usize] = label;
            self.point_of[label as usize] = p;
        }
    }

    fn next_free_start(&self, layout: &Layout, x: u8) -> u8 {
        let g = layout.group_of_cycle[layout.cycle_of[x as usize] as usize];
        layout.group_slots[g][self.used[g]]
    }
}

struct Search<'a> {
    layout: Layout,
    rest: &'a [Permutation],
    best: Option<Vec<u8>>,
    current: Vec<u8>,
}

impl Search<'_> {
    fn total(&self) -> usize {
        self.rest.len() * self.layout.d
    }

    fn dfs(&mut self, mut state: State, mut pos: usize) {
        let d = self.layout.d;
        let mut tight = self
            .best
            .as_ref()
            .is_some_and(|b| b[..pos] == self.current[..pos]);
        while pos < self.total() {
            let perm = &self.rest[pos / d];
            let y = pos % d;
            let x = state.point_of[y];
            if x == NONE {
                self.branch(state, pos, tight);
                return;
            }
            let z = perm.apply(x as usize) as u8;
            if state.label_of[z as usize] == NONE {
                state.place(&self.layout, z);
            }
            let v = state.label_of[z as usize];
            if tight {
                let b = self.best.as_ref().unwrap()[pos];
                if v > b {
                    return;
                }
                if v < b {
                    tight = false;
                }
            }
            self.current[pos] = v;
            pos += 1;
        }
        if !tight {
            self.best = Some(self.current.clone());
        }
    }

    /// Position `pos` needs the point labelled `y`, the start of a free slot.
    fn branch(&mut self, state: State, pos: usize, tight: bool) {
        let d = self.layout.d;
        let y = pos % d;
        let perm = &self.rest[pos / d];
        let g = self.layout.group_of_label[y];
        debug_assert_eq!(self.layout.group_slots[g][state.used[g]] as usize, y);

        let mut candidates: Vec<(u8, u8)> = Vec::new();
        for (c, cycle) in self.layout.cycles.iter().enumerate() {
            if self.layout.group_of_cycle[c] != g || state.label_of[cycle[0] as usize] != NONE {
                continue;
            }
            for &x in cycle {
                let z = perm.apply(x as usize) as u8;
                let v = if self.layout.cycle_of[z as usize] == c as u8 {
                    // z lies on the cycle being placed at y
                    let len = cycle.len();
                    let ix = cycle.iter().position(|&p| p == x).unwrap();
                    let iz = cycle.iter().position(|&p| p == z).unwrap();
                    y as u8 + ((iz + len - ix) % len) as u8
                } else if state.label_of[z as usize] != NONE {
                    state.label_of[z as usize]
                } else {
                    let mut probe = state.clone();
                    probe.place(&self.layout, x);
                    probe.next_free_start(&self.layout, z)
                };
                candidates.push((v, x));
            }
        }
        let min = candidates
            .iter()
            .map(|c| c.0)
            .min()
            .expect("free slot without a free cycle");
        if tight && min > self.best.as_ref().unwrap()[pos] {
            return;
        }
        for &(v, x) in &candidates {
            if v != min {
                continue;
            }
            let mut next = state.clone();
            next.place(&self.layout, x);
            self.dfs(next, pos);
        }
    }
}

/// The canonical representative of `tuple` under simultaneous conjugation.
/// Two tuples are conjugate iff their canonical forms are equal.
///
/// # Panics
/// Panics if the entries do not share one degree.
pub fn canonical_form(tuple: &[Permutation]) -> Vec<Permutation> {
    let Some(first) = tuple.first() else {
        return Vec::new();
    };
    let d = first.degree();
    assert!(
        tuple.iter().all(|p| p.degree() == d),
        "degree mismatch in tuple"
    );
    let layout = Layout::new(first);
    let mut out = vec![layout.first.clone()];
    if tuple.len() == 1 {
        return out;
    }
    let groups = layout.group_slots.len();
    let state = State {
        label_of: vec![NONE; d],
        point_of: vec![NONE; d],
        used: vec![0; groups],
    };
    let rest = &tuple[1..];
    let mut search = Search {
        current: vec![0; rest.len() * d],
        layout,
        rest,
        best: None,
    };
    search.dfs(state, 0);
    let best = search.best.expect("search always completes one labelling");
    out.extend(
        best.chunks(d)
            .map(|images| Permutation::from_raw(images.to_vec())),
    );
    out
}
