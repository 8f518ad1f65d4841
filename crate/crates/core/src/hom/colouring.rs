use crate::graph::Graph;

use super::{greedy_clique, twin_classes};

/// A proper colouring with colours `0..k`, or `None` if none exists.
///
/// Vertices with identical neighbourhoods are merged first (they can always
/// share a colour). The search is DSATUR: colour the vertex with the most
/// distinct neighbouring colours next, ties by degree then index, and only
/// open one new colour per step.
pub fn colouring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if g.is_empty() {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let (reps, class_of) = twin_classes(g);
    let q = g.induced_subgraph(&reps);
    if greedy_clique(&q).len() > k {
        return None;
    }
    let colours = if k >= q.order() {
        (0..q.order()).collect()
    } else {
        Dsatur::new(&q, k).run()?
    };
    Some(class_of.iter().map(|&c| colours[c]).collect())
}

pub fn is_k_colorable(g: &Graph, k: usize) -> bool {
    colouring(g, k).is_some()
}

/// Least `k` with a proper `k`-colouring; 0 for the empty graph.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.is_empty() {
        return 0;
    }
    let lower = greedy_clique(g).len();
    (lower..=g.order())
        .find(|&k| is_k_colorable(g, k))
        .expect("every graph is |V|-colourable")
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    degree: Vec<usize>,
    colour: Vec<Option<usize>>,
    /// `conflicts[v * k + c]`: coloured neighbours of `v` with colour `c`.
    conflicts: Vec<u32>,
    saturation: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.order();
        Dsatur {
            g,
            k,
            degree: g.degrees(),
            colour: vec![None; n],
            conflicts: vec![0; n * k],
            saturation: vec![0; n],
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.extend(0, 0) {
            Some(self.colour.into_iter().map(|c| c.expect("all coloured")).collect())
        } else {
            None
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.order())
            .filter(|&v| self.colour[v].is_none())
            .max_by(|&a, &b| {
                (self.saturation[a], self.degree[a])
                    .cmp(&(self.saturation[b], self.degree[b]))
                    .then(b.cmp(&a))
            })
    }

    fn set(&mut self, v: usize, c: usize) {
        self.colour[v] = Some(c);
        let k = self.k;
        for u in self.g.neighbors(v) {
            let slot = &mut self.conflicts[u * k + c];
            if *slot == 0 {
                self.saturation[u] += 1;
            }
            *slot += 1;
        }
    }

    fn unset(&mut self, v: usize, c: usize) {
        self.colour[v] = None;
        let k = self.k;
        for u in self.g.neighbors(v) {
            let slot = &mut self.conflicts[u * k + c];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[u] -= 1;
            }
        }
    }

    fn extend(&mut self, coloured: usize, used: usize) -> bool {
        if coloured == self.g.order() {
            return true;
        }
        let v = self.pick().expect("uncoloured vertex remains");
        if self.saturation[v] >= self.k {
            return false;
        }
        for c in 0..self.k.min(used + 1) {
            if self.conflicts[v * self.k + c] != 0 {
                continue;
            }
            self.set(v, c);
            if self.extend(coloured + 1, used.max(c + 1)) {
                return true;
            }
            self.unset(v, c);
        }
        false
    }
}
