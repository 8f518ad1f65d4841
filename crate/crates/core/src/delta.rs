//! Exact computation of the minimum-degree stability threshold `δ_H`.
//!
//! With `χ(H) = r + 1`:
//!
//! * `r = 2`: `δ_H = 2/(2g+1)` where `g` is least with `H ↛ C_{2g+1}`.
//! * `r ≥ 3`: scan `L_j = K_{r−3} + F_j` for `j = 1..=12`; at the first `j`
//!   with `H ↛ L_j`, `δ_H = 1 − 1/(r − 1 + c_{j−1})`.
//! * if `H` maps to all twelve, only bounds are known: with `g` least such
//!   that `H ↛ K_{r−2} + C_{2g+1}`,
//!   `1 − 1/(r − 1 + 2/(2g−1)) ≤ δ_H ≤ 1 − 1/(r − 1 + 1/7)`.
//!
//! Every passing homomorphism is kept as a certificate. Failures carry no
//! certificate beyond the exhausted search.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallery::{gallery_graph, GalleryId};
use crate::graph::Graph;
use crate::hom::{chromatic_number, HomSearch, HomWitness};
use crate::rational::Rational;

/// Numerators and denominators of `c_1..c_11`.
const C_TABLE: [(i64, i64); 11] = [
    (2, 3),
    (2, 5),
    (1, 3),
    (2, 7),
    (1, 4),
    (2, 9),
    (1, 5),
    (2, 11),
    (1, 6),
    (2, 13),
    (1, 7),
];

pub fn c_table(g: usize) -> Result<Rational> {
    g.checked_sub(1)
        .and_then(|i| C_TABLE.get(i))
        .map(|&(p, q)| Rational::new(p, q))
        .ok_or_else(|| Error::invalid(format!("c_g is tabulated for 1 <= g <= 11, got {g}")))
}

/// `1 − 1/(r − 1 + c)`.
fn shifted_threshold(r: usize, c: Rational) -> Rational {
    Rational::ONE - (Rational::from_integer(r as i64 - 1) + c).recip()
}

/// `k_g = 1 − 1/(r − 1 + c_g)` for `r ≥ 3`, `1 ≤ g ≤ 11`.
pub fn k_threshold(r: usize, g: usize) -> Result<Rational> {
    if r < 3 {
        return Err(Error::invalid(format!("k_g needs r >= 3, got {r}")));
    }
    Ok(shifted_threshold(r, c_table(g)?))
}

/// `1 − 1/(r − 1 + 2/(2g + 1))`: the threshold attached to the cycle joins
/// `K_{r−2} + C_{2g+1}`. `g = 0` gives `r/(r+1)`.
pub fn cycle_join_threshold(r: usize, g: usize) -> Result<Rational> {
    if r < 2 {
        return Err(Error::invalid(format!("cycle-join threshold needs r >= 2, got {r}")));
    }
    Ok(shifted_threshold(r, Rational::new(2, 2 * g as i64 + 1)))
}

/// Upper end of the interval branch: `k_11`.
pub fn interval_upper(r: usize) -> Result<Rational> {
    k_threshold(r, 11)
}

fn clique_or_empty(k: usize) -> Graph {
    if k == 0 {
        Graph::empty(0)
    } else {
        Graph::complete(k).expect("k >= 1")
    }
}

/// `K_{r−3} + F_j`.
pub fn f_join(r: usize, j: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::invalid(format!("F-joins need r >= 3, got {r}")));
    }
    Ok(clique_or_empty(r - 3).join(&gallery_graph(GalleryId::f(j)?)))
}

/// `K_{r−2} + C_{2g+1}`.
pub fn cycle_join(r: usize, g: usize) -> Result<Graph> {
    if r < 2 || g < 1 {
        return Err(Error::invalid(format!("cycle join needs r >= 2 and g >= 1, got r = {r}, g = {g}")));
    }
    Ok(clique_or_empty(r - 2).join(&Graph::cycle(2 * g + 1)?))
}

/// The target graph a certificate entry maps into.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HomTarget {
    OddCycle { length: usize },
    FJoin { r: usize, index: usize },
    CycleJoin { r: usize, g: usize },
}

impl HomTarget {
    pub fn graph(&self) -> Result<Graph> {
        match *self {
            HomTarget::OddCycle { length } if length % 2 == 1 => Graph::cycle(length),
            HomTarget::OddCycle { length } => Err(Error::invalid(format!("cycle length {length} is even"))),
            HomTarget::FJoin { r, index } => f_join(r, index),
            HomTarget::CycleJoin { r, g } => cycle_join(r, g),
        }
    }
}

impl fmt::Display for HomTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HomTarget::OddCycle { length } => write!(f, "C{length}"),
            HomTarget::FJoin { r, index } => write!(f, "K{} + F{index}", r - 3),
            HomTarget::CycleJoin { r, g } => write!(f, "K{} + C{}", r - 2, 2 * g + 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateEntry {
    pub target: HomTarget,
    pub witness: HomWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "kebab-case")]
pub enum Outcome {
    /// 3-chromatic `H`: `value = 2/(2g+1)`.
    OddCycle { g: usize, value: Rational },
    /// `j = g + 1` is the first F-index with `H ↛ K_{r−3} + F_j`.
    FSequence { j: usize, g: usize, c_g: Rational, value: Rational },
    /// `H` maps to every F-join; `g` is least with `H ↛ K_{r−2} + C_{2g+1}`.
    Interval { g: usize, lower: Rational, upper: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaResult {
    /// `χ(H) − 1`.
    pub r: usize,
    pub outcome: Outcome,
    /// One witness per target that `H` maps to before the failure point.
    pub certificate: Vec<CertificateEntry>,
    /// Search nodes expanded over all homomorphism tests.
    pub nodes: u64,
}

impl DeltaResult {
    /// Exact value, or the lower end of the interval.
    pub fn value(&self) -> Rational {
        match self.outcome {
            Outcome::OddCycle { value, .. } | Outcome::FSequence { value, .. } => value,
            Outcome::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> Rational {
        match self.outcome {
            Outcome::Interval { upper, .. } => upper,
            _ => self.value(),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self.outcome, Outcome::Interval { .. })
    }

    pub fn branch_name(&self) -> &'static str {
        match self.outcome {
            Outcome::OddCycle { .. } => "odd-cycle",
            Outcome::FSequence { .. } => "F-sequence",
            Outcome::Interval { .. } => "interval",
        }
    }

    /// Re-checks every certificate witness against `h` and the internal
    /// consistency of the stored values.
    pub fn validate(&self, h: &Graph) -> bool {
        let witnesses_ok = self.certificate.iter().all(|entry| {
            entry
                .target
                .graph()
                .is_ok_and(|t| entry.witness.validate(h, &t))
        });
        let values_ok = match self.outcome {
            Outcome::OddCycle { g, value } => {
                self.r == 2 && g >= 1 && value == Rational::new(2, 2 * g as i64 + 1)
            }
            Outcome::FSequence { j, g, c_g, value } => {
                (2..=12).contains(&j)
                    && g + 1 == j
                    && c_table(g).is_ok_and(|c| c == c_g)
                    && k_threshold(self.r, g).is_ok_and(|k| k == value)
            }
            Outcome::Interval { g, lower, upper } => {
                g >= 2
                    && cycle_join_threshold(self.r, g - 1).is_ok_and(|k| k == lower)
                    && interval_upper(self.r).is_ok_and(|k| k == upper)
            }
        };
        witnesses_ok && values_ok
    }
}

/// graph6 of an 18-vertex 4-critical graph that lands on the interval branch
/// (`g = 8`). It was cut out of the categorical product `T0 × H1++ × H2 × W15`
/// by a SAT-based criticality search; the projections map it into every
/// `F_g`, and it does not map to `W17`.
pub const INTERVAL_EXAMPLE_G6: &str = "Q?BB@_OAGO?@?@??o?G?x?FR~}?";

/// Result of scanning the F-joins.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FScan {
    FailsAt(usize),
    AllPass,
}

struct Scan {
    certificate: Vec<CertificateEntry>,
    nodes: u64,
}

impl Scan {
    fn new() -> Self {
        Scan {
            certificate: Vec::new(),
            nodes: 0,
        }
    }

    /// Records a witness on success.
    fn maps(&mut self, h: &Graph, target: HomTarget) -> Result<bool> {
        let graph = target.graph()?;
        let out = HomSearch::new(h, &graph).run();
        self.nodes += out.nodes;
        Ok(match out.witness {
            Some(witness) => {
                self.certificate.push(CertificateEntry { target, witness });
                true
            }
            None => false,
        })
    }

    fn odd_cycles(&mut self, h: &Graph) -> Result<usize> {
        // h has an odd cycle, so h ↛ C_{2g+1} once 2g+1 exceeds its odd girth.
        let limit = h.odd_girth().expect("non-bipartite").div_ceil(2);
        for g in 1..=limit {
            if !self.maps(h, HomTarget::OddCycle { length: 2 * g + 1 })? {
                return Ok(g);
            }
        }
        unreachable!("a graph mapped to an odd cycle longer than its odd girth")
    }

    fn f_joins(&mut self, h: &Graph, r: usize) -> Result<FScan> {
        // No monotonicity along the sequence: every index is tested in order.
        for j in 1..=12 {
            if !self.maps(h, HomTarget::FJoin { r, index: j })? {
                return Ok(FScan::FailsAt(j));
            }
        }
        Ok(FScan::AllPass)
    }

    fn cycle_joins(&mut self, h: &Graph, r: usize) -> Result<usize> {
        // A map into K_{r−2} + C_{2g+1} forces an odd cycle of length at least
        // 2g + 1 inside h, so g <= |h|/2.
        for g in 1..=h.order().div_ceil(2) + 1 {
            if !self.maps(h, HomTarget::CycleJoin { r, g })? {
                return Ok(g);
            }
        }
        unreachable!("cycle-join scan exceeded the order bound")
    }
}

fn require_chromatic(h: &Graph, expected: usize) -> Result<()> {
    let chi = chromatic_number(h);
    if chi != expected {
        return Err(Error::WrongBranch(format!(
            "expected a {expected}-chromatic graph, got chromatic number {chi}"
        )));
    }
    Ok(())
}

/// Least `g >= 1` with `h ↛ C_{2g+1}`; `h` must be 3-chromatic.
pub fn least_non_hom_odd_cycle(h: &Graph) -> Result<usize> {
    require_chromatic(h, 3)?;
    Scan::new().odd_cycles(h)
}

/// Least `j` with `h ↛ K_{r−3} + F_j`; `h` must be `(r+1)`-chromatic.
pub fn least_non_hom_f_index(h: &Graph, r: usize) -> Result<FScan> {
    if r < 3 {
        return Err(Error::invalid(format!("F-scan needs r >= 3, got {r}")));
    }
    require_chromatic(h, r + 1)?;
    Scan::new().f_joins(h, r)
}

/// Least `g` with `h ↛ K_{r−2} + C_{2g+1}`; `h` must be `(r+1)`-chromatic.
pub fn least_non_hom_cycle_join(h: &Graph, r: usize) -> Result<usize> {
    if r < 3 {
        return Err(Error::invalid(format!("cycle-join scan needs r >= 3, got {r}")));
    }
    require_chromatic(h, r + 1)?;
    Scan::new().cycle_joins(h, r)
}

pub fn classify(h: &Graph) -> Result<DeltaResult> {
    let chi = chromatic_number(h);
    if chi < 3 {
        return Err(Error::UndefinedThreshold(format!(
            "the threshold is defined for chromatic number at least 3, got {chi}"
        )));
    }
    let r = chi - 1;
    let mut scan = Scan::new();
    let outcome = if r == 2 {
        let g = scan.odd_cycles(h)?;
        Outcome::OddCycle {
            g,
            value: Rational::new(2, 2 * g as i64 + 1),
        }
    } else {
        match scan.f_joins(h, r)? {
            FScan::FailsAt(j) => {
                // K_{r−3} + F_1 = K_{r+1} takes every (r+1)-chromatic graph.
                assert!(j >= 2, "an (r+1)-chromatic graph failed to map to K_(r+1)");
                let g = j - 1;
                Outcome::FSequence {
                    j,
                    g,
                    c_g: c_table(g)?,
                    value: k_threshold(r, g)?,
                }
            }
            FScan::AllPass => {
                let g = scan.cycle_joins(h, r)?;
                Outcome::Interval {
                    g,
                    lower: cycle_join_threshold(r, g - 1)?,
                    upper: interval_upper(r)?,
                }
            }
        }
    };
    Ok(DeltaResult {
        r,
        outcome,
        certificate: scan.certificate,
        nodes: scan.nodes,
    })
}
