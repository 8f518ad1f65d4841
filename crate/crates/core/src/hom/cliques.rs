use std::ops::ControlFlow;

use crate::graph::{bits, Graph};

/// Visits every `a`-clique as an ascending vertex list, in lexicographic
/// order, until `visit` breaks.
pub fn for_each_clique<F>(g: &Graph, a: usize, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut chosen = Vec::with_capacity(a);
    extend(g, a, &bits::full(g.order()), &mut chosen, &mut visit)
}

fn extend<F>(g: &Graph, a: usize, candidates: &[u64], chosen: &mut Vec<usize>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if chosen.len() == a {
        return visit(chosen);
    }
    if bits::count(candidates) < a - chosen.len() {
        return ControlFlow::Continue(());
    }
    for v in bits::iter(candidates) {
        let mut next: Vec<u64> = candidates.iter().zip(g.row(v)).map(|(c, r)| c & r).collect();
        // keep only vertices after v so each clique is produced once
        for u in 0..=v {
            bits::remove(&mut next, u);
        }
        chosen.push(v);
        let flow = extend(g, a, &next, chosen, visit);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// All vertex sets of size `a` inducing complete subgraphs. `a = 0` yields
/// the single empty clique.
pub fn cliques_of_size(g: &Graph, a: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = for_each_clique(g, a, |k| {
        out.push(k.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// A maximal clique grown greedily from each start vertex; the largest found.
/// Only a lower bound on the clique number.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..g.order() {
        let mut clique = vec![start];
        let mut candidates = g.row(start).to_vec();
        while !bits::is_empty(&candidates) {
            let v = bits::iter(&candidates)
                .max_by_key(|&v| {
                    let common: usize = candidates.iter().zip(g.row(v)).map(|(c, r)| (c & r).count_ones() as usize).sum();
                    (common, std::cmp::Reverse(v))
                })
                .expect("non-empty");
            clique.push(v);
            for (c, r) in candidates.iter_mut().zip(g.row(v)) {
                *c &= r;
            }
        }
        if clique.len() > best.len() {
            clique.sort_unstable();
            best = clique;
        }
    }
    best
}

/// Size of a largest clique, by exhaustive search.
pub fn clique_number(g: &Graph) -> usize {
    let mut size = greedy_clique(g).len();
    while for_each_clique(g, size + 1, |_| ControlFlow::Break(())).is_break() {
        size += 1;
    }
    size
}

/// The first `a`-clique (lexicographically) whose common neighbourhood
/// induces a non-bipartite graph, or `None` if `g` is `a`-locally bipartite.
pub fn local_bipartite_violation(g: &Graph, a: usize) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = for_each_clique(g, a, |clique| {
        let mut common = bits::full(g.order());
        for &v in clique {
            for (c, r) in common.iter_mut().zip(g.row(v)) {
                *c &= r;
            }
        }
        if g.two_colouring_within(&common).is_none() {
            found = Some(clique.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

pub fn is_a_locally_bipartite(g: &Graph, a: usize) -> bool {
    local_bipartite_violation(g, a).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subsets(n: usize, a: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == a)
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
            .collect()
    }

    #[test]
    fn clique_listing() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            cliques_of_size(&c5, 2),
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        assert_eq!(cliques_of_size(&c5, 0), vec![Vec::<usize>::new()]);
        assert_eq!(cliques_of_size(&Graph::complete(4).unwrap(), 3).len(), 4);
        assert!(cliques_of_size(&Graph::empty(0), 1).is_empty());
    }

    #[test]
    fn c7_complement_has_no_4_clique() {
        let g = Graph::cycle_complement(7).unwrap();
        // brute force over all 35 four-subsets
        let all = subsets(7, 4);
        assert_eq!(all.len(), 35);
        assert!(all.iter().all(|s| s.iter().enumerate().any(|(i, &u)| s[i + 1..].iter().any(|&v| !g.has_edge(u, v)))));
        assert!(cliques_of_size(&g, 4).is_empty());
        assert_eq!(clique_number(&g), 3);
    }

    #[test]
    fn clique_enumeration_matches_subsets() {
        let p = Graph::petersen().with_edges([(0, 2), (5, 6)]).unwrap();
        for a in 0..=4 {
            let mut brute: Vec<Vec<usize>> = subsets(10, a)
                .into_iter()
                .filter(|s| s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| p.has_edge(u, v))))
                .collect();
            brute.sort();
            assert_eq!(cliques_of_size(&p, a), brute, "a = {a}");
        }
    }

    #[test]
    fn local_bipartiteness() {
        assert_eq!(local_bipartite_violation(&Graph::wheel(5).unwrap(), 1), Some(vec![5]));
        assert!(is_a_locally_bipartite(&Graph::cycle_complement(7).unwrap(), 1));
        assert!(!is_a_locally_bipartite(&Graph::complete(4).unwrap(), 1));
        assert!(is_a_locally_bipartite(&Graph::wheel(6).unwrap(), 1));
        // K5 neighbourhoods of edges are triangles
        assert_eq!(local_bipartite_violation(&Graph::complete(5).unwrap(), 2), Some(vec![0, 1]));
        assert!(is_a_locally_bipartite(&Graph::complete(4).unwrap(), 2));
    }

    #[test]
    fn greedy_is_a_clique() {
        let g = Graph::cycle_complement(9).unwrap();
        let k = greedy_clique(&g);
        assert!(k.iter().enumerate().all(|(i, &u)| k[i + 1..].iter().all(|&v| g.has_edge(u, v))));
        assert_eq!(clique_number(&g), 4);
    }
}
