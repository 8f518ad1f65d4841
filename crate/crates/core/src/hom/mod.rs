//! Exact decision procedures: homomorphisms, colourings and cliques.

mod cliques;
mod colouring;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

pub use cliques::{
    clique_number, cliques_of_size, for_each_clique, greedy_clique, is_a_locally_bipartite,
    local_bipartite_violation,
};
pub use colouring::{chromatic_number, colouring, is_k_colorable};

/// A vertex map `pattern -> target` that sends edges to edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomWitness {
    pub mapping: Vec<usize>,
}

impl HomWitness {
    /// Checks the map edge by edge.
    pub fn validate(&self, pattern: &Graph, target: &Graph) -> bool {
        self.mapping.len() == pattern.order()
            && self.mapping.iter().all(|&x| x < target.order())
            && pattern
                .edges()
                .all(|(u, v)| target.has_edge(self.mapping[u], self.mapping[v]))
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &HomWitness) -> HomWitness {
        HomWitness {
            mapping: self.mapping.iter().map(|&x| next.mapping[x]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomOutcome {
    pub witness: Option<HomWitness>,
    /// Assignments tried during the search.
    pub nodes: u64,
}

/// Backtracking search for a homomorphism with arc consistency maintained
/// after every assignment.
///
/// Variables are pattern vertices and domains are target vertex sets. The
/// next variable is the one with the smallest domain (lowest index on ties),
/// and values are tried in increasing order. Pattern vertices with identical
/// neighbourhoods are merged first and connected components are solved
/// independently; both steps preserve existence.
#[derive(Debug, Clone)]
pub struct HomSearch<'a> {
    pattern: &'a Graph,
    target: &'a Graph,
    orbit_rep: Option<Vec<usize>>,
}

impl<'a> HomSearch<'a> {
    pub fn new(pattern: &'a Graph, target: &'a Graph) -> Self {
        HomSearch {
            pattern,
            target,
            orbit_rep: None,
        }
    }

    /// Restricts the first vertex of each pattern component to one
    /// representative per orbit. `orbits` must be the orbits of a group of
    /// automorphisms of the target; only the partition shape is checked.
    pub fn with_target_orbits(mut self, orbits: &[Vec<usize>]) -> Result<Self> {
        let n = self.target.order();
        let mut rep = vec![usize::MAX; n];
        for orbit in orbits {
            let Some(&min) = orbit.iter().min() else {
                return Err(Error::invalid("empty orbit"));
            };
            for &t in orbit {
                if t >= n || rep[t] != usize::MAX {
                    return Err(Error::invalid(format!("orbit partition repeats or overflows at {t}")));
                }
                rep[t] = min;
            }
        }
        if rep.contains(&usize::MAX) {
            return Err(Error::invalid("orbits do not cover the target"));
        }
        self.orbit_rep = Some(rep);
        Ok(self)
    }

    pub fn run(&self) -> HomOutcome {
        let mut nodes = 0;
        let witness = self.solve(&mut nodes);
        debug_assert!(witness.as_ref().is_none_or(|w| w.validate(self.pattern, self.target)));
        HomOutcome { witness, nodes }
    }

    fn solve(&self, nodes: &mut u64) -> Option<HomWitness> {
        if self.pattern.is_empty() {
            return Some(HomWitness { mapping: Vec::new() });
        }
        if self.target.is_empty() {
            return None;
        }
        let (reps, class_of) = twin_classes(self.pattern);
        let quotient = self.pattern.induced_subgraph(&reps);
        let mut images = vec![usize::MAX; quotient.order()];
        let mut csp = Csp::new(&quotient, self.target, self.orbit_rep.as_deref());
        for component in components(&quotient) {
            let found = csp.solve_component(&component, nodes)?;
            for (v, t) in found {
                images[v] = t;
            }
        }
        Some(HomWitness {
            mapping: class_of.iter().map(|&c| images[c]).collect(),
        })
    }
}

/// Returns a witness iff `pattern -> target`; `None` means the search was exhausted.
pub fn has_homomorphism(pattern: &Graph, target: &Graph) -> Option<HomWitness> {
    HomSearch::new(pattern, target).run().witness
}

/// Groups vertices with identical neighbourhoods (necessarily non-adjacent).
/// Returns the lowest member of each class, ascending, and each vertex's class.
pub(crate) fn twin_classes(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut seen: std::collections::HashMap<&[u64], usize> = std::collections::HashMap::new();
    let mut reps = Vec::new();
    let mut class_of = Vec::with_capacity(g.order());
    for v in 0..g.order() {
        let next = reps.len();
        let class = *seen.entry(g.row(v)).or_insert(next);
        if class == next {
            reps.push(v);
        }
        class_of.push(class);
    }
    (reps, class_of)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub(crate) fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for s in 0..g.order() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

struct Csp<'a> {
    pattern: &'a Graph,
    target: &'a Graph,
    orbit_rep: Option<&'a [usize]>,
    domains: Vec<Vec<u64>>,
    queued: Vec<bool>,
}

impl<'a> Csp<'a> {
    fn new(pattern: &'a Graph, target: &'a Graph, orbit_rep: Option<&'a [usize]>) -> Self {
        Csp {
            pattern,
            target,
            orbit_rep,
            domains: vec![Vec::new(); pattern.order()],
            queued: vec![false; pattern.order()],
        }
    }

    fn solve_component(&mut self, component: &[usize], nodes: &mut u64) -> Option<Vec<(usize, usize)>> {
        let all = bits::full(self.target.order());
        let mut non_isolated = vec![0u64; all.len()];
        for t in 0..self.target.order() {
            if self.target.degree(t) > 0 {
                bits::insert(&mut non_isolated, t);
            }
        }
        for &v in component {
            self.domains[v] = if self.pattern.degree(v) > 0 {
                non_isolated.clone()
            } else {
                all.clone()
            };
            if bits::is_empty(&self.domains[v]) {
                return None;
            }
        }
        if !self.propagate(component.iter().copied()) {
            return None;
        }
        if !self.search(component, true, nodes) {
            return None;
        }
        Some(
            component
                .iter()
                .map(|&v| (v, bits::first(&self.domains[v]).expect("assigned")))
                .collect(),
        )
    }

    /// Arc consistency over the edges touching `changed` and, transitively,
    /// everything it prunes. Returns false on a wipe-out.
    fn propagate(&mut self, changed: impl IntoIterator<Item = usize>) -> bool {
        let mut queue = VecDeque::new();
        for v in changed {
            if !self.queued[v] {
                self.queued[v] = true;
                queue.push_back(v);
            }
        }
        let words = self.target.words();
        let mut support = vec![0u64; words];
        let mut ok = true;
        while let Some(x) = queue.pop_front() {
            self.queued[x] = false;
            if !ok {
                continue;
            }
            support.iter_mut().for_each(|w| *w = 0);
            for b in bits::iter(&self.domains[x]) {
                for (s, r) in support.iter_mut().zip(self.target.row(b)) {
                    *s |= r;
                }
            }
            for y in self.pattern.neighbors(x) {
                let dom = &mut self.domains[y];
                let mut changed = false;
                for (d, s) in dom.iter_mut().zip(&support) {
                    let next = *d & s;
                    changed |= next != *d;
                    *d = next;
                }
                if changed {
                    if bits::is_empty(dom) {
                        ok = false;
                        break;
                    }
                    if !self.queued[y] {
                        self.queued[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        ok
    }

    fn search(&mut self, component: &[usize], first: bool, nodes: &mut u64) -> bool {
        // Singleton domains after propagation are already decided.
        let pick = component
            .iter()
            .copied()
            .map(|v| (bits::count(&self.domains[v]), v))
            .filter(|&(size, _)| size > 1)
            .min();
        let Some((_, var)) = pick else {
            return true;
        };
        let values: Vec<usize> = bits::iter(&self.domains[var])
            .filter(|&t| match (first, self.orbit_rep) {
                (true, Some(rep)) => rep[t] == t,
                _ => true,
            })
            .collect();
        for t in values {
            *nodes += 1;
            let saved: Vec<Vec<u64>> = component.iter().map(|&v| self.domains[v].clone()).collect();
            let dom = &mut self.domains[var];
            dom.iter_mut().for_each(|w| *w = 0);
            bits::insert(dom, t);
            if self.propagate([var]) && self.search(component, false, nodes) {
                return true;
            }
            for (&v, d) in component.iter().zip(saved) {
                self.domains[v] = d;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::GraphKind;

    fn g(kind: GraphKind) -> Graph {
        Graph::construct(kind).unwrap()
    }

    /// Tries all |target|^|pattern| maps.
    fn brute_force(pattern: &Graph, target: &Graph) -> bool {
        let n = pattern.order();
        let t = target.order();
        if n == 0 {
            return true;
        }
        if t == 0 {
            return false;
        }
        let mut map = vec![0usize; n];
        loop {
            if pattern.edges().all(|(u, v)| target.has_edge(map[u], map[v])) {
                return true;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                map[i] += 1;
                if map[i] < t {
                    break;
                }
                map[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn spec_examples() {
        let c5 = g(GraphKind::Cycle(5));
        let k3 = g(GraphKind::Complete(3));
        let w = has_homomorphism(&c5, &k3).expect("C5 is 3-colourable");
        assert!(w.validate(&c5, &k3));
        assert!(has_homomorphism(&k3, &c5).is_none());
        assert!(has_homomorphism(&Graph::petersen(), &c5).is_none());
        let c7 = g(GraphKind::Cycle(7));
        let w = has_homomorphism(&c7, &c5).unwrap();
        assert!(w.validate(&c7, &c5));
    }

    #[test]
    fn brute_force_agrees_on_named_pairs() {
        // C7 -> C5 checked over all 5^7 maps; C5 -/-> C7 over all 7^5.
        let c5 = g(GraphKind::Cycle(5));
        let c7 = g(GraphKind::Cycle(7));
        assert!(brute_force(&c7, &c5));
        assert!(!brute_force(&c5, &c7));
        assert!(!brute_force(&g(GraphKind::Complete(3)), &c5));
        assert!(has_homomorphism(&c5, &c7).is_none());
    }

    #[test]
    fn edge_cases() {
        let empty = Graph::empty(0);
        let k2 = g(GraphKind::Complete(2));
        assert_eq!(has_homomorphism(&empty, &empty), Some(HomWitness { mapping: vec![] }));
        assert_eq!(has_homomorphism(&empty, &k2), Some(HomWitness { mapping: vec![] }));
        assert!(has_homomorphism(&k2, &Graph::empty(3)).is_none());
        assert!(has_homomorphism(&Graph::empty(2), &empty).is_none());
        // isolated vertices map to the lowest target vertex
        let w = has_homomorphism(&Graph::empty(3), &Graph::empty(2)).unwrap();
        assert_eq!(w.mapping, vec![0, 0, 0]);
    }

    #[test]
    fn disconnected_patterns() {
        // C5 plus a disjoint triangle cannot go to C5 but can go to K3.
        let p = g(GraphKind::Cycle(5))
            .with_vertices(3)
            .with_edges([(5, 6), (6, 7), (5, 7)])
            .unwrap();
        assert!(has_homomorphism(&p, &g(GraphKind::Cycle(5))).is_none());
        let w = has_homomorphism(&p, &g(GraphKind::Complete(3))).unwrap();
        assert!(w.validate(&p, &g(GraphKind::Complete(3))));
    }

    #[test]
    fn twins_are_expanded() {
        let blown = Graph::cycle(5).unwrap().balanced_blow_up(17).unwrap();
        let c5 = g(GraphKind::Cycle(5));
        let w = has_homomorphism(&blown, &c5).unwrap();
        assert!(w.validate(&blown, &c5));
        assert!(has_homomorphism(&blown, &g(GraphKind::Cycle(7))).is_none());
    }

    #[test]
    fn orbits_restrict_first_choice() {
        let c5 = g(GraphKind::Cycle(5));
        let c7 = g(GraphKind::Cycle(7));
        let orbits = vec![(0..5).collect::<Vec<_>>()];
        let out = HomSearch::new(&c7, &c5).with_target_orbits(&orbits).unwrap().run();
        let w = out.witness.unwrap();
        assert!(w.validate(&c7, &c5));
        assert_eq!(w.mapping[0], 0);
        assert!(HomSearch::new(&c7, &c5).with_target_orbits(&[vec![0, 1]]).is_err());
        assert!(HomSearch::new(&c7, &c5)
            .with_target_orbits(&[vec![0, 1, 2, 3, 4], vec![4]])
            .is_err());
    }

    #[test]
    fn composition_validates() {
        let c9 = g(GraphKind::Cycle(9));
        let c7 = g(GraphKind::Cycle(7));
        let c5 = g(GraphKind::Cycle(5));
        let a = has_homomorphism(&c9, &c7).unwrap();
        let b = has_homomorphism(&c7, &c5).unwrap();
        assert!(a.compose(&b).validate(&c9, &c5));
    }

    #[test]
    fn witness_validation_rejects_bad_maps() {
        let k2 = g(GraphKind::Complete(2));
        assert!(!HomWitness { mapping: vec![0, 0] }.validate(&k2, &k2));
        assert!(!HomWitness { mapping: vec![0] }.validate(&k2, &k2));
        assert!(!HomWitness { mapping: vec![0, 2] }.validate(&k2, &k2));
        assert!(HomWitness { mapping: vec![1, 0] }.validate(&k2, &k2));
    }

    #[test]
    fn twin_classes_and_components() {
        let k23 = Graph::complete(2).unwrap().complement().join(&Graph::empty(3));
        let (reps, class_of) = twin_classes(&k23);
        assert_eq!(reps, vec![0, 2]);
        assert_eq!(class_of, vec![0, 0, 1, 1, 1]);
        let two = Graph::from_edges(5, [(0, 3), (1, 4)]).unwrap();
        assert_eq!(components(&two), vec![vec![0, 3], vec![1, 4], vec![2]]);
    }
}
