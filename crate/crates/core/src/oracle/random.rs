use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{is_bridgeless, UndirectedGraph};

const MAX_ATTEMPTS: usize = 10_000;

/// Samples G(n, p) with a seeded generator until the draw is bridgeless.
pub fn random_bridgeless(n: usize, edge_probability: f64, seed: u64) -> Result<UndirectedGraph> {
    if n < 3 {
        return Err(Error::Argument(format!(
            "bridgeless graphs need n >= 3, got {n}"
        )));
    }
    if !(0.0..=1.0).contains(&edge_probability) {
        return Err(Error::Argument(format!(
            "edge probability {edge_probability} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(edge_probability))
            .collect();
        let g = UndirectedGraph::new(n, edges)?;
        if is_bridgeless(&g) {
            return Ok(g);
        }
    }
    Err(Error::Sampling(format!(
        "no bridgeless sample in {MAX_ATTEMPTS} draws of G({n}, {edge_probability})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_probability_gives_complete_graph() {
        assert_eq!(
            random_bridgeless(5, 1.0, 99).unwrap(),
            UndirectedGraph::complete(5)
        );
    }

    #[test]
    fn sample_is_bridgeless_and_reproducible() {
        let a = random_bridgeless(8, 0.4, 42).unwrap();
        assert!(is_bridgeless(&a));
        assert_eq!(a, random_bridgeless(8, 0.4, 42).unwrap());
    }

    #[test]
    fn hopeless_probability_fails() {
        assert!(matches!(
            random_bridgeless(6, 0.0, 1),
            Err(Error::Sampling(_))
        ));
        assert!(random_bridgeless(2, 0.5, 1).is_err());
    }
}
