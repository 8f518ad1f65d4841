//! The fixed target graphs `F_1..F_12` and their extremal weightings.
//!
//! The non-wheel graphs are built on a 7-cycle `v0..v6` (vertices `0..7`)
//! with extra vertices appended:
//!
//! | graph   | edges beyond the 7-cycle                                         |
//! |---------|------------------------------------------------------------------|
//! | `C̄7`    | every distance-2 chord                                           |
//! | `H2`    | `C̄7` without the chord `v1v6`                                    |
//! | `H2+`   | `H2` plus `u = 7` adjacent to `v0, v2, v5`                        |
//! | `T0`    | `u1 = 7` to all `v` except `v1`; `u6 = 8` to all except `v6`;     |
//! |         | `t = 9` adjacent to `v0, u1, u6`                                  |
//! | `H1++`  | chords `v3v5, v5v0, v0v2, v2v4, v6v1`; `ul = 7` to `v0, v2, v3`;  |
//! |         | `ur = 8` to `v0, v3, v5`                                          |
//!
//! Wheels use [`Graph::wheel`] (rim `0..k`, hub `k`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Weighting};
use crate::hom::chromatic_number;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GalleryId {
    K4,
    W5,
    W7,
    C7bar,
    W9,
    H2plus,
    W11,
    H2,
    W13,
    T0,
    W15,
    H1plusplus,
    Petersen,
}

/// `F_1..F_12` in table order.
pub const F_SEQUENCE: [GalleryId; 12] = [
    GalleryId::K4,
    GalleryId::W5,
    GalleryId::W7,
    GalleryId::C7bar,
    GalleryId::W9,
    GalleryId::H2plus,
    GalleryId::W11,
    GalleryId::H2,
    GalleryId::W13,
    GalleryId::T0,
    GalleryId::W15,
    GalleryId::H1plusplus,
];

/// The four graphs that come with an extremal weighting.
pub const WEIGHTED: [GalleryId; 4] = [GalleryId::H2plus, GalleryId::H2, GalleryId::T0, GalleryId::H1plusplus];

impl GalleryId {
    pub const ALL: [GalleryId; 13] = [
        GalleryId::K4,
        GalleryId::W5,
        GalleryId::W7,
        GalleryId::C7bar,
        GalleryId::W9,
        GalleryId::H2plus,
        GalleryId::W11,
        GalleryId::H2,
        GalleryId::W13,
        GalleryId::T0,
        GalleryId::W15,
        GalleryId::H1plusplus,
        GalleryId::Petersen,
    ];

    /// `F_index` for `index` in `1..=12`.
    pub fn f(index: usize) -> Result<GalleryId> {
        index
            .checked_sub(1)
            .and_then(|i| F_SEQUENCE.get(i))
            .copied()
            .ok_or_else(|| Error::invalid(format!("F-sequence index {index} outside 1..=12")))
    }

    /// Position in the F-sequence, if any.
    pub fn f_index(self) -> Option<usize> {
        F_SEQUENCE.iter().position(|&id| id == self).map(|i| i + 1)
    }

    /// Rim length for the odd wheels.
    pub fn wheel_rim(self) -> Option<usize> {
        match self {
            GalleryId::W5 => Some(5),
            GalleryId::W7 => Some(7),
            GalleryId::W9 => Some(9),
            GalleryId::W11 => Some(11),
            GalleryId::W13 => Some(13),
            GalleryId::W15 => Some(15),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GalleryId::K4 => "K4",
            GalleryId::W5 => "W5",
            GalleryId::W7 => "W7",
            GalleryId::C7bar => "C7bar",
            GalleryId::W9 => "W9",
            GalleryId::H2plus => "H2plus",
            GalleryId::W11 => "W11",
            GalleryId::H2 => "H2",
            GalleryId::W13 => "W13",
            GalleryId::T0 => "T0",
            GalleryId::W15 => "W15",
            GalleryId::H1plusplus => "H1plusplus",
            GalleryId::Petersen => "Petersen",
        }
    }
}

impl fmt::Display for GalleryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GalleryId {
    type Err = Error;

    /// Accepts the names above (case-insensitive) and `F1`..`F12`.
    fn from_str(s: &str) -> Result<Self> {
        if let Some(index) = s.strip_prefix(['F', 'f']).and_then(|i| i.parse::<usize>().ok()) {
            return GalleryId::f(index);
        }
        GalleryId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::invalid(format!("unknown gallery graph {s:?}")))
    }
}

fn seven_cycle() -> impl Iterator<Item = (usize, usize)> {
    (0..7).map(|i| (i, (i + 1) % 7))
}

fn distance_two_chords() -> impl Iterator<Item = (usize, usize)> {
    (0..7).map(|i| (i, (i + 2) % 7))
}

fn h2_edges() -> impl Iterator<Item = (usize, usize)> {
    seven_cycle().chain(distance_two_chords().filter(|&e| e != (6, 1)))
}

pub fn gallery_graph(id: GalleryId) -> Graph {
    if let Some(k) = id.wheel_rim() {
        return Graph::wheel(k).expect("rim is at least 5");
    }
    let built = match id {
        GalleryId::K4 => Graph::complete(4),
        GalleryId::Petersen => Ok(Graph::petersen()),
        GalleryId::C7bar => Graph::from_edges(7, seven_cycle().chain(distance_two_chords())),
        GalleryId::H2 => Graph::from_edges(7, h2_edges()),
        GalleryId::H2plus => Graph::from_edges(8, h2_edges().chain([(7, 0), (7, 2), (7, 5)])),
        GalleryId::T0 => {
            let u1 = (0..7).filter(|&v| v != 1).map(|v| (7, v));
            let u6 = (0..7).filter(|&v| v != 6).map(|v| (8, v));
            Graph::from_edges(10, seven_cycle().chain(u1).chain(u6).chain([(9, 0), (9, 7), (9, 8)]))
        }
        GalleryId::H1plusplus => {
            let chords = [(3, 5), (5, 0), (0, 2), (2, 4), (6, 1)];
            let extra = [(7, 0), (7, 2), (7, 3), (8, 0), (8, 5), (8, 3)];
            Graph::from_edges(9, seven_cycle().chain(chords).chain(extra))
        }
        _ => unreachable!("wheels handled above"),
    };
    built.expect("static edge list")
}

/// Extremal weighting of `H2plus`, `H2`, `T0` or `H1plusplus`.
///
/// Weights run around the 7-cycle from `v0`, then the extra vertices in
/// index order. Blowing up gives minimum degree / order equal to 5/9, 6/11,
/// 7/13 and 8/15 respectively.
pub fn gallery_weighting(id: GalleryId) -> Result<Weighting> {
    let weights: Vec<u64> = match id {
        GalleryId::H2plus => vec![2, 0, 2, 1, 1, 2, 0, 1],
        GalleryId::H2 => vec![3, 1, 2, 1, 1, 2, 1],
        GalleryId::T0 => vec![4, 0, 0, 1, 1, 0, 0, 3, 3, 1],
        GalleryId::H1plusplus => vec![5, 0, 3, 2, 0, 3, 0, 1, 1],
        other => {
            return Err(Error::Unsupported(format!("{other} has no extremal weighting")));
        }
    };
    let w = Weighting::new(gallery_graph(id), weights)?;
    let (m, d) = weighted_ratio(id).expect("weighted id");
    // The weighted degree identities pin the transcription of the edge lists.
    assert_eq!(w.total(), m, "{id} weighting total");
    assert_eq!(
        w.support().iter().map(|&v| w.weighted_degree(v)).min(),
        Some(d),
        "{id} weighting minimum degree"
    );
    Ok(w)
}

/// `(order, minimum degree)` of the blown-up extremal weighting.
pub fn weighted_ratio(id: GalleryId) -> Option<(u64, u64)> {
    match id {
        GalleryId::H2plus => Some((9, 5)),
        GalleryId::H2 => Some((11, 6)),
        GalleryId::T0 => Some((13, 7)),
        GalleryId::H1plusplus => Some((15, 8)),
        _ => None,
    }
}

/// Sanity checks for the whole gallery: every `F_g` is 4-chromatic and the
/// weighting ratios hold. Returns the first failure.
pub fn self_check() -> Result<()> {
    for id in F_SEQUENCE {
        let chi = chromatic_number(&gallery_graph(id));
        if chi != 4 {
            return Err(Error::invalid(format!("{id} has chromatic number {chi}, expected 4")));
        }
    }
    for id in WEIGHTED {
        let w = gallery_weighting(id)?;
        let g = w.blow_up();
        let (m, d) = weighted_ratio(id).expect("weighted");
        if (g.order() as u64, g.min_degree().unwrap_or(0) as u64) != (m, d) {
            return Err(Error::invalid(format!("{id} blow-up ratio is not {d}/{m}")));
        }
    }
    Ok(())
}

/// `δ/|·|` of the blown-up extremal weighting as an exact fraction.
pub fn weighted_ratio_value(id: GalleryId) -> Option<Rational> {
    weighted_ratio(id).map(|(m, d)| Rational::new(d as i64, m as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{is_a_locally_bipartite, HomWitness};

    #[test]
    fn sizes() {
        let expect = [
            (GalleryId::K4, 4, 6),
            (GalleryId::W5, 6, 10),
            (GalleryId::C7bar, 7, 14),
            (GalleryId::H2, 7, 13),
            (GalleryId::H2plus, 8, 16),
            (GalleryId::T0, 10, 22),
            (GalleryId::H1plusplus, 9, 18),
            (GalleryId::W15, 16, 30),
            (GalleryId::Petersen, 10, 15),
        ];
        for (id, n, m) in expect {
            let g = gallery_graph(id);
            assert_eq!((g.order(), g.edge_count()), (n, m), "{id}");
        }
    }

    #[test]
    fn t0_degrees() {
        let t0 = gallery_graph(GalleryId::T0);
        assert_eq!((t0.degree(7), t0.degree(8), t0.degree(9)), (7, 7, 3));
        assert!(!t0.has_edge(7, 1) && !t0.has_edge(8, 6));
    }

    #[test]
    fn w9_is_join_of_k1_and_c9() {
        let w9 = gallery_graph(GalleryId::W9);
        let joined = Graph::cycle(9).unwrap().join(&Graph::complete(1).unwrap());
        assert_eq!(w9, joined);
    }

    #[test]
    fn f_sequence_is_four_chromatic() {
        self_check().unwrap();
    }

    #[test]
    fn wheels_and_k4_are_not_locally_bipartite() {
        for id in F_SEQUENCE {
            let expected = matches!(
                id,
                GalleryId::C7bar | GalleryId::H2plus | GalleryId::H2 | GalleryId::T0 | GalleryId::H1plusplus
            );
            assert_eq!(is_a_locally_bipartite(&gallery_graph(id), 1), expected, "{id}");
        }
    }

    #[test]
    fn edge_deletion_relations() {
        let c7bar = gallery_graph(GalleryId::C7bar);
        let h2 = gallery_graph(GalleryId::H2);
        let h2plus = gallery_graph(GalleryId::H2plus);
        let h1pp = gallery_graph(GalleryId::H1plusplus);
        assert!(h2.is_subgraph_of(&c7bar));
        assert_eq!(c7bar.edge_count() - h2.edge_count(), 1);
        assert_eq!(h2plus.induced_subgraph(&(0..7).collect::<Vec<_>>()), h2);
        let identity = |n: usize| HomWitness { mapping: (0..n).collect() };
        assert!(identity(7).validate(&h2, &c7bar));
        assert!(identity(7).validate(&h2, &h2plus));
        // The seven-cycle part of H1++ is H2 minus the chord v2v4, rotated by
        // two steps: a bijection preserving edges between equal edge counts.
        let core = h1pp.induced_subgraph(&(0..7).collect::<Vec<_>>());
        assert!(core.is_subgraph_of(&c7bar));
        let h2_minus = h2.without_edges([(2, 4)]);
        assert_eq!(core.edge_count(), 12);
        assert_eq!(h2_minus.edge_count(), 12);
        let rotate = HomWitness { mapping: (0..7).map(|i| (i + 2) % 7).collect() };
        assert!(rotate.validate(&h2_minus, &core));
    }

    #[test]
    fn c7bar_matches_cycle_complement_up_to_relabeling() {
        let square = gallery_graph(GalleryId::C7bar);
        let complement = Graph::cycle_complement(7).unwrap();
        let relabel = HomWitness { mapping: (0..7).map(|i| 2 * i % 7).collect() };
        assert!(relabel.validate(&square, &complement));
        assert_eq!(square.edge_count(), complement.edge_count());
    }

    #[test]
    fn weightings() {
        for id in WEIGHTED {
            let g = gallery_weighting(id).unwrap().blow_up();
            let (m, d) = weighted_ratio(id).unwrap();
            assert_eq!((g.order() as u64, g.min_degree().unwrap() as u64), (m, d), "{id}");
        }
        assert!(matches!(gallery_weighting(GalleryId::W5), Err(Error::Unsupported(_))));
        assert!(matches!(gallery_weighting(GalleryId::C7bar), Err(Error::Unsupported(_))));
    }

    #[test]
    fn ids_parse() {
        assert_eq!("F6".parse::<GalleryId>().unwrap(), GalleryId::H2plus);
        assert_eq!("c7bar".parse::<GalleryId>().unwrap(), GalleryId::C7bar);
        assert_eq!("Petersen".parse::<GalleryId>().unwrap(), GalleryId::Petersen);
        assert!("F13".parse::<GalleryId>().is_err());
        assert!("F0".parse::<GalleryId>().is_err());
        assert!("W6".parse::<GalleryId>().is_err());
        for (i, id) in F_SEQUENCE.iter().enumerate() {
            assert_eq!(id.f_index(), Some(i + 1));
        }
        assert_eq!(GalleryId::Petersen.f_index(), None);
    }
}
