use crate::error::{Error, Result};

use super::Graph;

/// Nonnegative integer vertex weights on a base graph.
///
/// Blowing up replaces vertex `v` by an independent set of `weights[v]`
/// vertices. A zero weight drops the vertex, so the result is a blow-up of the
/// subgraph induced by the positive-weight vertices rather than of `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weighting {
    base: Graph,
    weights: Vec<u64>,
}

impl Weighting {
    pub fn new(base: Graph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != base.order() {
            return Err(Error::invalid(format!(
                "{} weights for a base of order {}",
                weights.len(),
                base.order()
            )));
        }
        if weights.iter().all(|&w| w == 0) {
            return Err(Error::invalid("weighting has total weight zero"));
        }
        Ok(Weighting { base, weights })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Base vertices with positive weight, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len()).filter(|&v| self.weights[v] > 0).collect()
    }

    /// Weights multiplied by `scale`; when `strict`, zero weights become 1 so
    /// the blow-up covers every base vertex.
    pub fn scaled(&self, scale: u64, strict: bool) -> Result<Self> {
        if scale == 0 {
            return Err(Error::invalid("scale factor must be positive"));
        }
        let weights = self
            .weights
            .iter()
            .map(|&w| if w == 0 && strict { 1 } else { w * scale })
            .collect();
        Weighting::new(self.base.clone(), weights)
    }

    /// Weighted degree of base vertex `v`: the degree of any of its copies.
    pub fn weighted_degree(&self, v: usize) -> u64 {
        self.base.neighbors(v).map(|u| self.weights[u]).sum()
    }

    pub fn blow_up(&self) -> Graph {
        self.blow_up_with_classes().0
    }

    /// The blow-up together with, for each new vertex, the base vertex it copies.
    /// Copies of `v` are consecutive and classes appear in base order.
    pub fn blow_up_with_classes(&self) -> (Graph, Vec<usize>) {
        let class: Vec<usize> = self
            .weights
            .iter()
            .enumerate()
            .flat_map(|(v, &w)| std::iter::repeat_n(v, w as usize))
            .collect();
        let n = class.len();
        let mut g = Graph::empty(n);
        for a in 0..n {
            for b in a + 1..n {
                if self.base.has_edge(class[a], class[b]) {
                    g.insert_edge(a, b);
                }
            }
        }
        (g, class)
    }
}
