//! Brute-force oracles and corpus checks for the structural lemmas the
//! classifier depends on.

mod corpus;

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

pub use corpus::{CorpusSpec, MAX_EXHAUSTIVE_ORDER};

use crate::delta::{f_join, k_threshold};
use crate::error::{Error, Result};
use crate::gallery::GalleryId;
use crate::graph::{encode, Format, Graph};
use crate::hom::{chromatic_number, has_homomorphism, is_a_locally_bipartite, is_k_colorable};
use crate::rational::Rational;
use crate::witness::{gallery_join_witness, regular_join_witness};

/// Largest `k^n` the edit oracle will enumerate.
pub const EDIT_BUDGET: u128 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    /// graph6 encoding.
    pub graph: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checked: usize,
    /// Graphs meeting the hypothesis of the check.
    pub applicable: usize,
    /// Sorted by index.
    pub violations: Vec<Violation>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

enum Verdict {
    Vacuous,
    Holds,
    Fails(String),
}

fn g6(g: &Graph) -> String {
    encode(g, Format::Graph6).unwrap_or_else(|_| format!("<order {}>", g.order()))
}

fn run_suite<F>(spec: &CorpusSpec, check: F) -> VerificationReport
where
    F: Fn(&Graph) -> Verdict + Sync,
{
    let start = Instant::now();
    let (applicable, mut violations) = (0..spec.len())
        .into_par_iter()
        .fold(
            || (0usize, Vec::new()),
            |(mut applicable, mut violations), index| {
                let g = spec.graph(index);
                match check(&g) {
                    Verdict::Vacuous => {}
                    Verdict::Holds => applicable += 1,
                    Verdict::Fails(detail) => {
                        applicable += 1;
                        violations.push(Violation { index, graph: g6(&g), detail });
                    }
                }
                (applicable, violations)
            },
        )
        .reduce(
            || (0, Vec::new()),
            |(a, mut va), (b, vb)| {
                va.extend(vb);
                (a + b, va)
            },
        );
    violations.sort_by_key(|v| v.index);
    VerificationReport {
        checked: spec.len(),
        applicable,
        violations,
        elapsed: start.elapsed(),
    }
}

/// Fewest edges whose removal leaves `g` `k`-partite, i.e. the fewest
/// intra-part edges over all partitions into `k` (possibly empty) parts.
pub fn brute_min_edits_to_k_partite(g: &Graph, k: usize) -> Result<u64> {
    if k == 0 {
        return Err(Error::invalid("k must be at least 1"));
    }
    let n = g.order();
    let work = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if work > EDIT_BUDGET {
        return Err(Error::Resource(format!(
            "{k}^{n} partitions exceed the enumeration budget of {EDIT_BUDGET}"
        )));
    }
    if k == 1 || n == 0 {
        return Ok(g.edge_count() as u64);
    }
    // k ≥ 2 and k^n ≤ 10^8 keep n ≤ 26, so parts fit in a word.
    let rows: Vec<u64> = (0..n).map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u)).collect();
    let mut parts = vec![0u64; k];
    let mut best = g.edge_count() as u64;
    partition_search(&rows, 0, 0, 0, &mut parts, &mut best);
    Ok(best)
}

/// Depth-first over part assignments with parts opened in order (vertex `v`
/// may start at most one new part), pruned by the best count so far.
fn partition_search(rows: &[u64], v: usize, used: usize, cost: u64, parts: &mut [u64], best: &mut u64) {
    if cost >= *best {
        return;
    }
    if v == rows.len() {
        *best = cost;
        return;
    }
    for p in 0..parts.len().min(used + 1) {
        let extra = (rows[v] & parts[p]).count_ones() as u64;
        parts[p] |= 1 << v;
        partition_search(rows, v + 1, used.max(p + 1), cost + extra, parts, best);
        parts[p] &= !(1 << v);
    }
}

/// A graph mapping to `C_{2g+1}` has no odd cycle shorter than `2g + 1`.
pub fn check_hom_odd_girth(spec: &CorpusSpec, g_max: usize) -> VerificationReport {
    let cycles: Vec<Graph> = (1..=g_max).map(|g| Graph::cycle(2 * g + 1).expect("length >= 3")).collect();
    run_suite(spec, |graph| {
        let girth = graph.odd_girth();
        let mut applicable = false;
        for c in &cycles {
            if has_homomorphism(graph, c).is_some() {
                applicable = true;
                if let Some(len) = girth.filter(|&len| len < c.order()) {
                    return Verdict::Fails(format!("maps to C{} but has odd girth {len}", c.order()));
                }
            }
        }
        if applicable {
            Verdict::Holds
        } else {
            Verdict::Vacuous
        }
    })
}

/// A non-bipartite graph with `δ > 2|G|/(2g+1)` has an odd cycle shorter
/// than `2g + 1`.
pub fn check_haggkvist(spec: &CorpusSpec, g: usize) -> Result<VerificationReport> {
    if g < 2 {
        return Err(Error::invalid(format!("check needs g >= 2, got {g}")));
    }
    let threshold = Rational::new(2, 2 * g as i64 + 1);
    Ok(run_suite(spec, |graph| {
        let Some(girth) = graph.odd_girth() else {
            return Verdict::Vacuous;
        };
        let delta = graph.min_degree().unwrap_or(0) as u64;
        if threshold.cmp_scaled(delta, graph.order() as u64).is_le() {
            return Verdict::Vacuous;
        }
        if girth < 2 * g + 1 {
            Verdict::Holds
        } else {
            Verdict::Fails(format!("min degree {delta} but odd girth {girth}"))
        }
    }))
}

/// The join chain is not `r`-colourable, and the blow-up of the `(g+1)`-th
/// member reaches density `k_g` exactly.
pub fn check_properties(r: usize, g_max: usize) -> Result<VerificationReport> {
    if !(3..=5).contains(&r) {
        return Err(Error::invalid(format!("properties are checked for r in 3..=5, got {r}")));
    }
    if g_max > 11 {
        return Err(Error::invalid(format!("g_max is at most 11, got {g_max}")));
    }
    let start = Instant::now();
    let mut checked = 0;
    let mut violations = Vec::new();
    for j in 1..=(g_max + 1).min(12) {
        let l = f_join(r, j)?;
        let chi = chromatic_number(&l);
        checked += 1;
        if chi != r + 1 {
            violations.push(Violation {
                index: j,
                graph: g6(&l),
                detail: format!("chromatic number of L{j} is {chi}, expected {}", r + 1),
            });
        }
    }
    for g in 1..=g_max {
        let id = GalleryId::f(g + 1)?;
        let w = match id.wheel_rim() {
            Some(rim) => regular_join_witness(r, (rim - 1) / 2)?,
            None => gallery_join_witness(r, id)?,
        };
        let want = k_threshold(r, g)?;
        let delta = w.min_degree().expect("non-empty") as u64;
        checked += 1;
        if !want.cmp_scaled(delta, w.order() as u64).is_eq() {
            violations.push(Violation {
                index: g + 1,
                graph: g6(&w),
                detail: format!("blow-up of L{} has density {delta}/{}, expected {want}", g + 1, w.order()),
            });
        }
    }
    Ok(VerificationReport {
        checked,
        applicable: checked,
        violations,
        elapsed: start.elapsed(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundHit {
    pub index: usize,
    pub graph: String,
    pub ratio: Rational,
}

/// A corpus graph that `h` does not map to, with chromatic number above `k`
/// and `δ ≥ c·|G|`. Returns the densest one (lowest index on ties).
pub fn search_hom_free_lower_bound(h: &Graph, k: usize, c: Rational, spec: &CorpusSpec) -> Option<LowerBoundHit> {
    (0..spec.len())
        .into_par_iter()
        .filter_map(|index| {
            let g = spec.graph(index);
            let delta = g.min_degree()? as u64;
            if c.cmp_scaled(delta, g.order() as u64).is_lt() || is_k_colorable(&g, k) || has_homomorphism(h, &g).is_some() {
                return None;
            }
            Some(LowerBoundHit {
                index,
                ratio: Rational::new(delta as i64, g.order() as i64),
                graph: g6(&g),
            })
        })
        .max_by(|a, b| a.ratio.cmp(&b.ratio).then(b.index.cmp(&a.index)))
}

/// An `a`-locally bipartite graph with `δ > (1 − 1/(a + 4/3))·|G|` is
/// `(a+2)`-colourable.
pub fn check_locally_bipartite_claims(a: usize, spec: &CorpusSpec) -> Result<VerificationReport> {
    if a == 0 {
        return Err(Error::invalid("a must be at least 1"));
    }
    let threshold = Rational::new(3 * a as i64 + 1, 3 * a as i64 + 4);
    Ok(run_suite(spec, |graph| {
        let Some(delta) = graph.min_degree() else {
            return Verdict::Vacuous;
        };
        if threshold.cmp_scaled(delta as u64, graph.order() as u64).is_le() || !is_a_locally_bipartite(graph, a) {
            return Verdict::Vacuous;
        }
        if is_k_colorable(graph, a + 2) {
            Verdict::Holds
        } else {
            Verdict::Fails(format!("not {}-colourable", a + 2))
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Weighting;

    /// Direct enumeration of all k^n labelings.
    fn naive_edits(g: &Graph, k: usize) -> u64 {
        let n = g.order();
        (0..(k as u64).pow(n as u32))
            .map(|mut code| {
                let part: Vec<u64> = (0..n)
                    .map(|_| {
                        let p = code % k as u64;
                        code /= k as u64;
                        p
                    })
                    .collect();
                g.edges().filter(|&(u, v)| part[u] == part[v]).count() as u64
            })
            .min()
            .unwrap()
    }

    #[test]
    fn edit_oracle_examples() {
        let c5_2 = Weighting::new(Graph::cycle(5).unwrap(), vec![2; 5]).unwrap().blow_up();
        assert_eq!(brute_min_edits_to_k_partite(&c5_2, 2).unwrap(), 4);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(brute_min_edits_to_k_partite(&k4, 4).unwrap(), 0);
        assert_eq!(brute_min_edits_to_k_partite(&k4, 2).unwrap(), 2);
        assert_eq!(brute_min_edits_to_k_partite(&k4, 1).unwrap(), 6);
        assert!(brute_min_edits_to_k_partite(&k4, 0).is_err());
        assert!(matches!(brute_min_edits_to_k_partite(&Graph::empty(27), 2), Err(Error::Resource(_))));
    }

    #[test]
    fn edit_oracle_matches_naive() {
        let spec = CorpusSpec::random(40, 7, 0.5, 3).unwrap();
        for i in 0..spec.len() {
            let g = spec.graph(i);
            for k in 1..=3 {
                assert_eq!(brute_min_edits_to_k_partite(&g, k).unwrap(), naive_edits(&g, k), "graph {i} k {k}");
            }
        }
    }

    #[test]
    fn odd_girth_suite() {
        let rep = check_hom_odd_girth(&CorpusSpec::exhaustive(5).unwrap(), 3);
        assert!(rep.passed());
        assert_eq!(rep.checked, 1 + 2 + 8 + 64 + 1024);
        let rep = check_hom_odd_girth(&CorpusSpec::Explicit(vec![Graph::petersen()]), 2);
        assert!(rep.passed());
        assert_eq!(rep.applicable, 1); // maps to C3 only
        let rep = check_hom_odd_girth(&CorpusSpec::Explicit(vec![Graph::cycle(9).unwrap()]), 4);
        assert!(rep.passed());
        assert_eq!(rep.applicable, 1);
    }

    #[test]
    fn haggkvist_suite() {
        assert!(check_haggkvist(&CorpusSpec::exhaustive(6).unwrap(), 2).unwrap().passed());
        let blow = Graph::cycle(5).unwrap().balanced_blow_up(10).unwrap();
        let rep = check_haggkvist(&CorpusSpec::Explicit(vec![blow]), 2).unwrap();
        assert_eq!((rep.applicable, rep.violations.len()), (0, 0));
        assert!(check_haggkvist(&CorpusSpec::random(200, 9, 0.5, 7).unwrap(), 2).unwrap().passed());
        assert!(check_haggkvist(&CorpusSpec::Explicit(vec![]), 1).is_err());
    }

    #[test]
    fn properties_suite() {
        for r in 3..=4 {
            let rep = check_properties(r, 11).unwrap();
            assert!(rep.passed(), "{:?}", rep.violations);
            assert_eq!(rep.checked, 12 + 11);
        }
        let rep = check_properties(3, 3).unwrap();
        assert_eq!(rep.checked, 4 + 3);
        assert!(check_properties(6, 3).is_err());
        assert!(check_properties(3, 12).is_err());
    }

    #[test]
    fn lower_bound_search() {
        let k3 = Graph::complete(3).unwrap();
        let hit = search_hom_free_lower_bound(&k3, 2, Rational::new(2, 5), &CorpusSpec::Explicit(vec![Graph::cycle(5).unwrap()])).unwrap();
        assert_eq!((hit.index, hit.ratio), (0, Rational::new(2, 5)));
        let small = CorpusSpec::exhaustive(6).unwrap();
        assert!(search_hom_free_lower_bound(&k3, 2, Rational::new(1, 2), &small).is_none());
        let k4 = Graph::complete(4).unwrap();
        assert!(search_hom_free_lower_bound(&k4, 3, Rational::new(5, 8), &small).is_none());
    }

    #[test]
    fn locally_bipartite_suite() {
        assert!(check_locally_bipartite_claims(1, &CorpusSpec::exhaustive(6).unwrap()).unwrap().passed());
        let rep = check_locally_bipartite_claims(1, &CorpusSpec::Explicit(vec![Graph::cycle_complement(7).unwrap()])).unwrap();
        assert_eq!(rep.applicable, 0);
        assert!(check_locally_bipartite_claims(2, &CorpusSpec::random(500, 9, 0.6, 11).unwrap()).unwrap().passed());
        assert!(check_locally_bipartite_claims(0, &CorpusSpec::Explicit(vec![])).is_err());
    }
}
