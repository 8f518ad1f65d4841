use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the exhaustive corpus accepts.
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

/// A finite, indexable family of graphs.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSpec {
    /// Every labeled graph on `1..=max_order` vertices.
    Exhaustive { max_order: usize },
    /// `count` samples of `G(order, p)`; sample `i` depends only on
    /// `(seed, i)`.
    Random { count: usize, order: usize, p: f64, seed: u64 },
    Explicit(Vec<Graph>),
}

/// Vertex pairs in graph6 bit order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn labeled_count(n: usize) -> usize {
    1usize << (n * n.saturating_sub(1) / 2)
}

impl CorpusSpec {
    pub fn exhaustive(max_order: usize) -> Result<Self> {
        if max_order > MAX_EXHAUSTIVE_ORDER {
            return Err(Error::invalid(format!(
                "exhaustive corpora stop at order {MAX_EXHAUSTIVE_ORDER}, got {max_order}"
            )));
        }
        Ok(CorpusSpec::Exhaustive { max_order })
    }

    pub fn random(count: usize, order: usize, p: f64, seed: u64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::invalid(format!("edge probability must lie in [0, 1], got {p}")));
        }
        Ok(CorpusSpec::Random { count, order, p, seed })
    }

    pub fn len(&self) -> usize {
        match self {
            CorpusSpec::Exhaustive { max_order } => (1..=*max_order).map(labeled_count).sum(),
            CorpusSpec::Random { count, .. } => *count,
            CorpusSpec::Explicit(graphs) => graphs.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The graph at `index`. Exhaustive corpora list orders ascending and,
    /// within an order, edge masks ascending in graph6 bit order.
    pub fn graph(&self, index: usize) -> Graph {
        assert!(index < self.len(), "corpus index {index} out of range");
        match self {
            CorpusSpec::Exhaustive { .. } => {
                let mut rest = index;
                let mut n = 1;
                while rest >= labeled_count(n) {
                    rest -= labeled_count(n);
                    n += 1;
                }
                let edges = pairs(n).enumerate().filter(|(b, _)| rest >> b & 1 == 1).map(|(_, e)| e);
                Graph::from_edges(n, edges).expect("pairs are in range")
            }
            CorpusSpec::Random { order, p, seed, .. } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                rng.set_stream(index as u64);
                let edges: Vec<_> = pairs(*order).filter(|_| rng.gen_bool(*p)).collect();
                Graph::from_edges(*order, edges).expect("pairs are in range")
            }
            CorpusSpec::Explicit(graphs) => graphs[index].clone(),
        }
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Exhaustive { max_order } => write!(f, "exhaustive:{max_order}"),
            CorpusSpec::Random { count, order, p, seed } => write!(f, "random:{count},{order},{p},{seed}"),
            CorpusSpec::Explicit(graphs) => write!(f, "explicit({} graphs)", graphs.len()),
        }
    }
}

/// `exhaustive:K` or `random:COUNT,ORDER,P,SEED`.
impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::invalid(format!("bad corpus `{s}`: {why}"));
        let (mode, args) = s.split_once(':').ok_or_else(|| bad("expected MODE:ARGS"))?;
        match mode {
            "exhaustive" => CorpusSpec::exhaustive(args.trim().parse().map_err(|_| bad("order is not a number"))?),
            "random" => {
                let parts: Vec<&str> = args.split(',').map(str::trim).collect();
                let [count, order, p, seed] = parts[..] else {
                    return Err(bad("expected COUNT,ORDER,P,SEED"));
                };
                CorpusSpec::random(
                    count.parse().map_err(|_| bad("count is not a number"))?,
                    order.parse().map_err(|_| bad("order is not a number"))?,
                    p.parse().map_err(|_| bad("probability is not a number"))?,
                    seed.parse().map_err(|_| bad("seed is not a number"))?,
                )
            }
            _ => Err(bad("mode must be exhaustive or random")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_sizes_and_order() {
        let c = CorpusSpec::exhaustive(4).unwrap();
        assert_eq!(c.len(), 1 + 2 + 8 + 64);
        assert_eq!(c.graph(0), Graph::empty(1));
        assert_eq!(c.graph(1), Graph::empty(2));
        assert_eq!(c.graph(2), Graph::complete(2).unwrap());
        // order 3, mask 0b011 = {(0,1), (0,2)}
        assert_eq!(c.graph(3 + 3).edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
        assert_eq!(c.graph(c.len() - 1), Graph::complete(4).unwrap());
        assert_eq!(CorpusSpec::exhaustive(7).unwrap().len(), 2_097_152 + 32_768 + 1024 + 64 + 8 + 2 + 1);
        assert!(CorpusSpec::exhaustive(8).is_err());
    }

    #[test]
    fn exhaustive_is_distinct() {
        let c = CorpusSpec::exhaustive(5).unwrap();
        let set: std::collections::HashSet<_> = (0..c.len()).map(|i| crate::graph::encode(&c.graph(i), crate::graph::Format::Graph6).unwrap()).collect();
        assert_eq!(set.len(), c.len());
    }

    #[test]
    fn random_is_reproducible() {
        let a = CorpusSpec::random(20, 9, 0.5, 7).unwrap();
        let b: CorpusSpec = "random:20,9,0.5,7".parse().unwrap();
        assert_eq!(a, b);
        for i in 0..20 {
            assert_eq!(a.graph(i), b.graph(i));
        }
        // independent of which other samples were drawn
        let big = CorpusSpec::random(100, 9, 0.5, 7).unwrap();
        assert_eq!(big.graph(13), a.graph(13));
        let other = CorpusSpec::random(20, 9, 0.5, 8).unwrap();
        assert!((0..20).any(|i| other.graph(i) != a.graph(i)));
        assert!(CorpusSpec::random(1, 3, 1.5, 0).is_err());
        assert_eq!(CorpusSpec::random(1, 5, 1.0, 0).unwrap().graph(0), Graph::complete(5).unwrap());
    }

    #[test]
    fn parsing() {
        assert_eq!("exhaustive:6".parse::<CorpusSpec>().unwrap(), CorpusSpec::Exhaustive { max_order: 6 });
        assert!("exhaustive:x".parse::<CorpusSpec>().is_err());
        assert!("random:1,2,3".parse::<CorpusSpec>().is_err());
        assert!("grid:3".parse::<CorpusSpec>().is_err());
        assert_eq!(CorpusSpec::random(5, 6, 0.25, 3).unwrap().to_string(), "random:5,6,0.25,3");
    }
}
