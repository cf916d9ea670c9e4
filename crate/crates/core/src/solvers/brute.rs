use super::{Algorithm, CoverResult, SolveError, SolveTrace};
use crate::graph::Graph;

pub const BRUTE_FORCE_MAX_N: usize = 24;

/// Minimum cover by enumerating vertex subsets in order of increasing size.
/// The first subset that covers every edge is returned.
pub fn brute_force_vertex_cover(g: &Graph) -> Result<CoverResult, SolveError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(SolveError::TooLarge(n));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u)))
        .collect();
    // `set` covers iff every vertex outside it has all neighbors inside it.
    let covers = |set: u32| (0..n).all(|v| set >> v & 1 == 1 || adj[v] & !set == 0);

    for k in 0..=n {
        if let Some(set) = subsets_of_size(n, k).find(|&s| covers(s)) {
            return Ok(CoverResult {
                cover: (0..n).filter(|&v| set >> v & 1 == 1).collect(),
                trace: SolveTrace::default(),
                algorithm: Algorithm::BruteForce,
                proven_optimal: true,
            });
        }
    }
    unreachable!("the full vertex set is always a cover")
}

/// All `k`-bit masks below `2^n`, in increasing numeric order (Gosper's hack).
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = (k <= n).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            let succ = (((ripple ^ cur) >> 2) / low) | ripple;
            (succ < limit).then_some(succ)
        };
        Some(cur as u32)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn subset_enumeration_counts() {
        for n in 0..=10 {
            for k in 0..=n {
                let all: Vec<_> = subsets_of_size(n, k).collect();
                assert_eq!(all.len() as u64, binom(n as u64, k as u64), "n={n} k={k}");
                assert!(all.iter().all(|s| s.count_ones() as usize == k));
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn trivial_graphs() {
        assert!(brute_force_vertex_cover(&Graph::empty(0))
            .unwrap()
            .is_empty());
        let edge = Graph::from_edge_list(2, [(0, 1)]).unwrap();
        assert_eq!(brute_force_vertex_cover(&edge).unwrap().len(), 1);
        assert_eq!(
            brute_force_vertex_cover(&Graph::empty(25)),
            Err(SolveError::TooLarge(25))
        );
    }

    #[test]
    fn fig1_optimum_is_three() {
        let g = fig1();
        let r = brute_force_vertex_cover(&g).unwrap();
        assert_eq!(r.len(), 3);
        assert!(super::super::is_vertex_cover(&g, &r.cover));
    }
}
