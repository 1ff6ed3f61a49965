//! Subdegree profiles and the arithmetic checks run on them.

use std::collections::BTreeSet;

use crate::arith::{gcd, is_prime};
use crate::coprime::mu;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Suborbit {
    /// Smallest point of the suborbit.
    pub representative: usize,
    pub length: usize,
}

/// Orbits of a point stabilizer, sorted by length then representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuborbitProfile {
    pub base_point: usize,
    pub suborbits: Vec<Suborbit>,
}

impl SuborbitProfile {
    pub fn rank(&self) -> usize {
        self.suborbits.len()
    }

    /// Subdegrees as a sorted multiset.
    pub fn subdegrees(&self) -> Vec<usize> {
        self.suborbits.iter().map(|s| s.length).collect()
    }

    /// Distinct subdegrees other than 1, ascending.
    pub fn distinct_nontrivial(&self) -> Vec<usize> {
        self.suborbits
            .iter()
            .map(|s| s.length)
            .filter(|&d| d > 1)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn largest(&self) -> usize {
        self.suborbits.last().map_or(0, |s| s.length)
    }
}

impl PermGroup {
    /// Orbits of the stabilizer of `point`. Requires a transitive group.
    pub fn subdegrees(&self, point: usize) -> Result<SuborbitProfile> {
        self.check_point(point)?;
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let stab = self.point_stabilizer(point)?;
        let mut suborbits: Vec<Suborbit> = stab
            .orbits()
            .into_iter()
            .map(|o| Suborbit {
                representative: o[0],
                length: o.len(),
            })
            .collect();
        suborbits.sort_by_key(|s| (s.length, s.representative));
        Ok(SuborbitProfile {
            base_point: point,
            suborbits,
        })
    }
}

/// A maximum set of pairwise coprime values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeClique {
    /// Ascending; the lexicographically least among maximum sets.
    pub values: Vec<u64>,
    /// How many maximum sets exist.
    pub maximum_count: usize,
}

impl CoprimeClique {
    pub fn size(&self) -> usize {
        self.values.len()
    }
}

/// Maximum pairwise-coprime subset of the distinct values `> 1` in `values`.
///
/// Depth-first search over ascending values visits cliques in lexicographic
/// order, so the first maximum found is the lexicographically least.
pub fn max_coprime_subset(values: &[u64]) -> CoprimeClique {
    let vals: Vec<u64> = values
        .iter()
        .copied()
        .filter(|&v| v > 1)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    struct Search<'a> {
        vals: &'a [u64],
        current: Vec<u64>,
        best: Vec<u64>,
        count: usize,
    }

    impl Search<'_> {
        fn extend(&mut self, candidates: &[usize]) {
            match self.current.len().cmp(&self.best.len()) {
                std::cmp::Ordering::Greater => {
                    self.best = self.current.clone();
                    self.count = 1;
                }
                std::cmp::Ordering::Equal => self.count += 1,
                std::cmp::Ordering::Less => {}
            }
            for (pos, &i) in candidates.iter().enumerate() {
                // Even taking every remaining candidate cannot tie the best.
                if self.current.len() + candidates.len() - pos < self.best.len() {
                    return;
                }
                let v = self.vals[i];
                let next: Vec<usize> = candidates[pos + 1..]
                    .iter()
                    .copied()
                    .filter(|&j| gcd(v, self.vals[j]) == 1)
                    .collect();
                self.current.push(v);
                self.extend(&next);
                self.current.pop();
            }
        }
    }

    let mut search = Search {
        vals: &vals,
        current: Vec::new(),
        best: Vec::new(),
        count: 0,
    };
    let all: Vec<usize> = (0..vals.len()).collect();
    search.extend(&all);
    CoprimeClique {
        values: search.best,
        maximum_count: search.count,
    }
}

/// Largest set of pairwise coprime non-trivial subdegrees.
pub fn max_coprime_set(profile: &SuborbitProfile) -> CoprimeClique {
    let vals: Vec<u64> = profile.subdegrees().iter().map(|&d| d as u64).collect();
    max_coprime_subset(&vals)
}

/// The largest subdegree shares a factor with every non-trivial subdegree.
pub fn weiss_check(profile: &SuborbitProfile) -> bool {
    let top = profile.largest() as u64;
    profile
        .distinct_nontrivial()
        .iter()
        .all(|&d| gcd(top, d as u64) > 1)
}

/// `rank >= 2^k` for `k` pairwise coprime non-trivial subdegrees.
pub fn neumann_check(profile: &SuborbitProfile, clique: &CoprimeClique) -> bool {
    let k = clique.size() as u32;
    k < usize::BITS - 1 && profile.rank() >= 1usize << k
}

/// Distinct non-trivial subdegrees joined when they share a factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommonDivisorGraph {
    pub vertices: Vec<usize>,
    /// Neighbour indices into `vertices`, ascending.
    pub adjacency: Vec<Vec<usize>>,
}

impl CommonDivisorGraph {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            for &j in nbrs {
                if i < j {
                    out.push((self.vertices[i], self.vertices[j]));
                }
            }
        }
        out
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (Some(i), Some(j)) = (
            self.vertices.iter().position(|&v| v == a),
            self.vertices.iter().position(|&v| v == b),
        ) else {
            return false;
        };
        self.adjacency[i].contains(&j)
    }

    /// Size of a maximum independent set, by exhaustive search over vertex
    /// subsets. Meant for consistency checks on small graphs.
    pub fn independence_number(&self) -> usize {
        let n = self.vertices.len();
        assert!(n <= 24, "exhaustive search only for small graphs");
        let mask_of: Vec<u32> = self
            .adjacency
            .iter()
            .map(|nbrs| nbrs.iter().fold(0u32, |m, &j| m | (1 << j)))
            .collect();
        (0u32..1 << n)
            .filter(|&s| (0..n).all(|i| s & (1 << i) == 0 || mask_of[i] & s == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
}

pub fn common_divisor_graph(profile: &SuborbitProfile) -> CommonDivisorGraph {
    let vertices = profile.distinct_nontrivial();
    let adjacency = vertices
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            vertices
                .iter()
                .enumerate()
                .filter(|&(j, &b)| i != j && gcd(a as u64, b as u64) > 1)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    CommonDivisorGraph {
        vertices,
        adjacency,
    }
}

/// Outcome of a hypothesis-then-conclusion check on a concrete group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<T> {
    /// The hypothesis fails, so nothing is asserted.
    NotApplicable,
    Checked { holds: bool, detail: T },
}

impl<T> Verdict<T> {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Verdict::NotApplicable => None,
            Verdict::Checked { holds, .. } => Some(*holds),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowDetail {
    pub sylow_order: u64,
    pub normalizer_order: u64,
    /// Non-trivial subdegrees not divisible by `p`.
    pub offending: Vec<usize>,
}

/// If the stabilizer of `point` contains the normalizer of a Sylow
/// `p`-subgroup, checks that `p` divides every non-trivial subdegree.
///
/// For transitive `G` the stabilizer of `point` contains some conjugate of
/// `N = N_G(P)` exactly when `N` fixes a point, so the hypothesis is tested
/// on `fixed_points(N)`.
pub fn sylow_divisibility_check(
    group: &PermGroup,
    point: usize,
    p: u64,
    caps: &Caps,
) -> Result<Verdict<SylowDetail>> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let profile = group.subdegrees(point)?;
    let sylow = group.sylow_subgroup_small(p, caps.elements)?;
    let normalizer = group.normalizer_small(&sylow, caps.elements)?;
    if normalizer.fixed_points().is_empty() {
        return Ok(Verdict::NotApplicable);
    }
    let offending: Vec<usize> = profile
        .distinct_nontrivial()
        .into_iter()
        .filter(|&d| !(d as u64).is_multiple_of(p))
        .collect();
    let order_u64 = |g: &PermGroup| -> u64 {
        num_traits::ToPrimitive::to_u64(&g.order()).expect("under the element cap")
    };
    Ok(Verdict::Checked {
        holds: offending.is_empty(),
        detail: SylowDetail {
            sylow_order: order_u64(&sylow),
            normalizer_order: order_u64(&normalizer),
            offending,
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundDetail {
    pub clique_size: usize,
    pub mu: usize,
}

/// When `n`, normal in the stabilizer of `point`, fixes only `point`, checks
/// that the coprime clique of the subdegrees is at most `mu(n)`.
pub fn check_mu_bound(
    group: &PermGroup,
    point: usize,
    n: &PermGroup,
    caps: &Caps,
) -> Result<Verdict<BoundDetail>> {
    let stab = group.point_stabilizer(point)?;
    if !n.is_normal_in(&stab)? {
        return Err(Error::NotNormal);
    }
    if n.fixed_points() != [point] {
        return Ok(Verdict::NotApplicable);
    }
    let clique = max_coprime_set(&group.subdegrees(point)?);
    let mu = mu(n, caps.subgroups)?;
    Ok(Verdict::Checked {
        holds: clique.size() <= mu,
        detail: BoundDetail {
            clique_size: clique.size(),
            mu,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alternating, ksubsets_action, psl2};
    use crate::Permutation;

    fn profile(lengths: &[usize]) -> SuborbitProfile {
        SuborbitProfile {
            base_point: 0,
            suborbits: lengths
                .iter()
                .enumerate()
                .map(|(i, &length)| Suborbit {
                    representative: i,
                    length,
                })
                .collect(),
        }
    }

    const J1: &[usize] = &[1, 11, 12, 110, 132];

    #[test]
    fn subdegree_examples() {
        let a5 = alternating(5).unwrap();
        assert_eq!(a5.subdegrees(0).unwrap().subdegrees(), vec![1, 4]);
        let p = ksubsets_action(5, 2).unwrap().subdegrees(0).unwrap();
        assert_eq!(p.subdegrees(), vec![1, 3, 6]);
        assert_eq!(p.suborbits[0].representative, 0);
        assert_eq!(p.rank(), 3);
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::new(4, vec![Permutation::parse_cycles("(1,2)", 4).unwrap()]).unwrap();
        assert!(matches!(g.subdegrees(0), Err(Error::NotTransitive)));
    }

    #[test]
    fn coprime_cliques() {
        let c = max_coprime_set(&profile(J1));
        assert_eq!(c.values, vec![11, 12]);
        assert_eq!(c.maximum_count, 1);
        assert_eq!(max_coprime_set(&profile(&[1, 4])).values, vec![4]);
        let c = max_coprime_set(&profile(&[1, 6, 10, 15]));
        assert_eq!(c.values, vec![6]);
        assert_eq!(c.maximum_count, 3);
        assert_eq!(max_coprime_set(&profile(&[1, 1, 1])).size(), 0);
        assert_eq!(max_coprime_subset(&[2, 3, 5, 7, 4, 9]).values, vec![2, 3, 5, 7]);
        // Repeated values are never coprime to each other.
        assert_eq!(max_coprime_subset(&[1, 5, 5, 5]).values, vec![5]);
    }

    #[test]
    fn weiss_examples() {
        assert!(weiss_check(&profile(J1)));
        assert!(weiss_check(&profile(&[1, 7])));
        assert!(!weiss_check(&profile(&[1, 3, 5])));
    }

    #[test]
    fn neumann_examples() {
        let p = profile(J1);
        assert!(neumann_check(&p, &max_coprime_set(&p)));
        let p = profile(&[1, 4]);
        assert!(neumann_check(&p, &max_coprime_set(&p)));
        let p = profile(&[1, 2, 3]);
        assert!(!neumann_check(&p, &max_coprime_set(&p)));
    }

    #[test]
    fn divisor_graphs() {
        let g = common_divisor_graph(&profile(J1));
        assert_eq!(g.vertices, vec![11, 12, 110, 132]);
        let mut edges = g.edges();
        edges.sort();
        assert_eq!(
            edges,
            vec![(11, 110), (11, 132), (12, 110), (12, 132), (110, 132)]
        );
        assert!(!g.has_edge(11, 12));
        assert_eq!(g.independence_number(), 2);

        let g = common_divisor_graph(&profile(&[1, 4]));
        assert_eq!((g.vertices.clone(), g.edges()), (vec![4], vec![]));
        let g = common_divisor_graph(&profile(&[1, 3, 6]));
        assert_eq!(g.edges(), vec![(3, 6)]);
    }

    #[test]
    fn sylow_checks() {
        let caps = Caps::default();
        let v = sylow_divisibility_check(&psl2(7).unwrap(), 0, 7, &caps).unwrap();
        match v {
            Verdict::Checked { holds, detail } => {
                assert!(holds);
                assert_eq!((detail.sylow_order, detail.normalizer_order), (7, 21));
            }
            _ => panic!("hypothesis should hold"),
        }
        let v = sylow_divisibility_check(&alternating(5).unwrap(), 0, 2, &caps).unwrap();
        assert_eq!(v.holds(), Some(true));
        let v = sylow_divisibility_check(&ksubsets_action(5, 2).unwrap(), 0, 5, &caps).unwrap();
        assert_eq!(v, Verdict::NotApplicable);
    }

    #[test]
    fn mu_bound_checks() {
        let caps = Caps::default();
        let a5 = alternating(5).unwrap();
        let a4 = a5.point_stabilizer(0).unwrap();
        let v = check_mu_bound(&a5, 0, &a4, &caps).unwrap();
        assert_eq!(
            v,
            Verdict::Checked {
                holds: true,
                detail: BoundDetail { clique_size: 1, mu: 2 }
            }
        );
        // The trivial subgroup is normal but fixes every point.
        let t = PermGroup::trivial(5);
        assert_eq!(check_mu_bound(&a5, 0, &t, &caps).unwrap(), Verdict::NotApplicable);
        // A 3-cycle subgroup of A4 is not normal in it.
        let c3 = PermGroup::new(5, vec![Permutation::parse_cycles("(2,3,4)", 5).unwrap()]).unwrap();
        assert!(matches!(check_mu_bound(&a5, 0, &c3, &caps), Err(Error::NotNormal)));
    }
}
