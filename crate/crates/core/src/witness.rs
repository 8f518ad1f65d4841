//! Lower-bound constructions: dense graphs that avoid `H` but are far from
//! `r`-partite, and a certifier that checks one against a classification.

use serde::Serialize;

use crate::delta::{DeltaResult, Outcome};
use crate::error::{Error, Result};
use crate::gallery::{gallery_graph, gallery_weighting, GalleryId};
use crate::graph::{Graph, Weighting};
use crate::hom::{chromatic_number, HomSearch};
use crate::rational::Rational;

/// Balanced blow-up of `C_{2g+1}` on `n` vertices.
pub fn odd_cycle_witness(g: usize, n: usize) -> Result<Graph> {
    if g == 0 {
        return Err(Error::invalid("odd_cycle_witness needs g >= 1"));
    }
    let len = 2 * g + 1;
    if n < len {
        return Err(Error::invalid(format!("n = {n} is smaller than the cycle length {len}")));
    }
    Graph::cycle(len)?.balanced_blow_up(n)
}

fn clique_or_empty(k: usize) -> Graph {
    if k == 0 {
        Graph::empty(0)
    } else {
        Graph::complete(k).expect("k >= 1")
    }
}

/// `K_{r−2}(2g−1) + C_{2g+1}`: every clique vertex becomes a class of
/// `2g − 1` vertices. Regular of degree `(2g−1)(r−2) + 2`.
pub fn regular_join_witness(r: usize, g: usize) -> Result<Graph> {
    if r < 3 || g < 1 {
        return Err(Error::invalid(format!("regular_join_witness needs r >= 3 and g >= 1, got r = {r}, g = {g}")));
    }
    let base = clique_or_empty(r - 2).join(&Graph::cycle(2 * g + 1)?);
    let mut weights = vec![2 * g as u64 - 1; r - 2];
    weights.extend(std::iter::repeat_n(1, 2 * g + 1));
    Ok(Weighting::new(base, weights)?.blow_up())
}

/// The weighting of `F` used inside the join. `C̄7` is taken unweighted.
fn gallery_part(id: GalleryId) -> Result<Weighting> {
    match id {
        GalleryId::C7bar => Weighting::new(gallery_graph(id), vec![1; 7]),
        GalleryId::H2plus | GalleryId::H2 | GalleryId::T0 | GalleryId::H1plusplus => gallery_weighting(id),
        other => Err(Error::invalid(format!("{other} has no join witness"))),
    }
}

/// `K_{r−3}(m − d) + F′` where `F′` is the weighted gallery graph with total
/// weight `m` and weighted minimum degree `d`.
pub fn gallery_join_witness(r: usize, id: GalleryId) -> Result<Graph> {
    gallery_join_witness_scaled(r, id, 1, false)
}

/// As [`gallery_join_witness`] with every weight multiplied by `scale`; with
/// `strict`, zero weights become 1 so all of `F` is blown up.
pub fn gallery_join_witness_scaled(r: usize, id: GalleryId, scale: u64, strict: bool) -> Result<Graph> {
    if r < 3 {
        return Err(Error::invalid(format!("gallery_join_witness needs r >= 3, got {r}")));
    }
    let part = gallery_part(id)?.scaled(scale, strict)?;
    let m = part.total();
    let d = part
        .support()
        .into_iter()
        .map(|v| part.weighted_degree(v))
        .min()
        .expect("non-empty support");
    let base = clique_or_empty(r - 3).join(part.base());
    let mut weights = vec![m - d; r - 3];
    weights.extend_from_slice(part.weights());
    Ok(Weighting::new(base, weights)?.blow_up())
}

/// `⌊n / base_order⌋²`: edges that must go before a balanced blow-up of a
/// base that is not `k`-colourable becomes `k`-partite. Zero for an empty base.
pub fn edit_lower_bound(base_order: usize, n: usize) -> u64 {
    if base_order == 0 {
        return 0;
    }
    let q = (n / base_order) as u64;
    q * q
}

/// The unbalanced graph `L′` whose blow-ups realise the lower bound for
/// `result`. Its shape follows the failing target of the scan.
pub fn witness_base(result: &DeltaResult) -> Result<Graph> {
    match result.outcome {
        Outcome::OddCycle { g, .. } => Graph::cycle(2 * g + 1),
        Outcome::FSequence { j, .. } => {
            let id = GalleryId::f(j)?;
            match id.wheel_rim() {
                Some(rim) => regular_join_witness(result.r, (rim - 1) / 2),
                None => gallery_join_witness(result.r, id),
            }
        }
        Outcome::Interval { g, .. } => regular_join_witness(result.r, g),
    }
}

/// Balanced blow-up of [`witness_base`] on `n` vertices.
pub fn witness(result: &DeltaResult, n: usize) -> Result<Graph> {
    let base = witness_base(result)?;
    if n < base.order() {
        return Err(Error::invalid(format!(
            "n = {n} is below the witness base order {}",
            base.order()
        )));
    }
    base.balanced_blow_up(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificationReport {
    pub base_order: usize,
    pub witness_order: usize,
    pub min_degree: usize,
    /// The classified value the witness should approach.
    pub target: Rational,
    /// `base_order / n`, allowance for uneven parts.
    pub slack: Rational,
    /// `h` has no homomorphism into the base.
    pub hom_free: bool,
    /// `min_degree / n ≥ target − slack`.
    pub ratio_ok: bool,
    pub edit_bound: u64,
    pub edit_ok: bool,
    pub nodes: u64,
}

impl CertificationReport {
    pub fn passed(&self) -> bool {
        self.hom_free && self.ratio_ok && self.edit_ok
    }
}

/// Builds the witness for `result` at order `n` and checks it is `h`-free,
/// dense enough and far from `r`-partite.
pub fn certify(h: &Graph, result: &DeltaResult, n: usize) -> Result<CertificationReport> {
    if chromatic_number(h) != result.r + 1 || !result.validate(h) {
        return Err(Error::invalid("the classification does not belong to this graph"));
    }
    let base = witness_base(result)?;
    let w = witness(result, n)?;
    let (hom, min_degree) = rayon::join(
        || HomSearch::new(h, &base).run(),
        || w.min_degree().expect("n >= base order >= 1"),
    );
    let target = result.value();
    let slack = Rational::new(base.order() as i64, n as i64);
    // min_degree ≥ (target − slack)·n
    let ratio_ok = (target - slack).cmp_scaled(min_degree as u64, n as u64).is_ge();
    let edit_bound = edit_lower_bound(base.order(), n);
    Ok(CertificationReport {
        base_order: base.order(),
        witness_order: w.order(),
        min_degree,
        target,
        slack,
        hom_free: hom.witness.is_none(),
        ratio_ok,
        edit_bound,
        edit_ok: edit_bound > 0,
        nodes: hom.nodes,
    })
}
