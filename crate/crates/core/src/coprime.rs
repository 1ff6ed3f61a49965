//! Subgroup lattices of small groups, `mu(G)`, and coprime factorizations.
//!
//! `mu(G)` is the largest number of proper subgroups with pairwise coprime
//! indices. Any such family can be swapped for maximal overgroups without
//! losing coprimality, so it is computed over maximal subgroups only.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::{big_prime_factors, gcd};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subdegree::{max_coprime_subset, Verdict};

/// Fixed-size bitset over the parent's element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct ElementSet(Vec<u64>);

impl ElementSet {
    fn empty(n: usize) -> Self {
        ElementSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) -> bool {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// Parent elements with a multiplication table.
struct Table {
    elements: Vec<Permutation>,
    identity: usize,
    mul: Vec<u32>,
}

impl Table {
    fn new(elements: Vec<Permutation>) -> Self {
        let n = elements.len();
        let index: HashMap<&Permutation, u32> =
            elements.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mul.push(index[&a.mul_unchecked(b)]);
            }
        }
        let identity = elements.iter().position(|e| e.is_identity()).expect("identity");
        Table {
            elements,
            identity,
            mul,
        }
    }

    fn product(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    /// Subgroup generated by `gens`: closure under right multiplication.
    fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.elements.len());
        set.insert(self.identity);
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.product(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }
}

#[derive(Clone, Debug)]
pub struct LatticeSubgroup {
    pub generators: Vec<Permutation>,
    pub order: u64,
    members: ElementSet,
}

impl LatticeSubgroup {
    pub fn to_group(&self, degree: usize) -> PermGroup {
        PermGroup::normalized(degree, self.generators.clone())
    }
}

/// Every subgroup of a small group, each exactly once, ordered by order
/// then discovery.
pub struct SubgroupLattice {
    pub parent_order: BigUint,
    pub degree: usize,
    pub subgroups: Vec<LatticeSubgroup>,
    pub maximal: Vec<bool>,
}

impl SubgroupLattice {
    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn parent_order_u64(&self) -> u64 {
        self.parent_order.to_u64().expect("lattice parents are small")
    }

    pub fn index_of(&self, i: usize) -> u64 {
        self.parent_order_u64() / self.subgroups[i].order
    }

    pub fn is_proper(&self, i: usize) -> bool {
        self.subgroups[i].order != self.parent_order_u64()
    }

    /// `H_i <= H_j`.
    pub fn is_contained(&self, i: usize, j: usize) -> bool {
        self.subgroups[i].members.is_subset(&self.subgroups[j].members)
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.maximal[i]).collect()
    }
}

/// Fixpoint closure: cyclic subgroups first, then joins `<H, g>` with single
/// elements until nothing new appears.
pub fn all_subgroups_small(group: &PermGroup, cap: usize) -> Result<SubgroupLattice> {
    let order = group.order();
    if order.to_usize().is_none_or(|o| o > cap) {
        return Err(Error::cap("subgroup-lattice group order", cap, order));
    }
    let table = Table::new(group.elements(cap)?);
    let n = table.elements.len();

    let mut seen: HashSet<ElementSet> = HashSet::new();
    let mut found: Vec<(Vec<usize>, ElementSet)> = Vec::new();
    for g in 0..n {
        let gens = if g == table.identity { vec![] } else { vec![g] };
        let set = table.closure(&gens);
        if seen.insert(set.clone()) {
            found.push((gens, set));
        }
    }
    let mut next = 0;
    while next < found.len() {
        let (gens, set) = found[next].clone();
        next += 1;
        for g in 0..n {
            if set.contains(g) {
                continue;
            }
            let mut joined = gens.clone();
            joined.push(g);
            let bigger = table.closure(&joined);
            if seen.insert(bigger.clone()) {
                found.push((joined, bigger));
            }
        }
    }

    let mut subgroups: Vec<LatticeSubgroup> = found
        .into_iter()
        .map(|(gens, members)| LatticeSubgroup {
            generators: gens.iter().map(|&i| table.elements[i].clone()).collect(),
            order: members.len() as u64,
            members,
        })
        .collect();
    subgroups.sort_by_key(|s| s.order);

    let full = n as u64;
    let maximal = subgroups
        .iter()
        .map(|h| {
            h.order != full
                && !subgroups.iter().any(|k| {
                    k.order > h.order && k.order != full && h.members.is_subset(&k.members)
                })
        })
        .collect();
    Ok(SubgroupLattice {
        parent_order: order,
        degree: group.degree(),
        subgroups,
        maximal,
    })
}

/// `mu` from a finished lattice, as a maximum coprime clique over the
/// indices of maximal subgroups.
pub fn mu_from_lattice(lattice: &SubgroupLattice) -> usize {
    let indices: Vec<u64> = lattice
        .maximal_indices()
        .into_iter()
        .map(|i| lattice.index_of(i))
        .collect();
    max_coprime_subset(&indices).size()
}

pub fn mu(group: &PermGroup, cap: usize) -> Result<usize> {
    Ok(mu_from_lattice(&all_subgroups_small(group, cap)?))
}

/// Number of distinct primes dividing `order`, an upper bound for `mu`.
pub fn mu_prime_bound(order: &BigUint) -> usize {
    big_prime_factors(order).len()
}

/// `G = AB` with `gcd(|G:A|, |G:B|) = 1`; `a` and `b` index the lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeFactorization {
    pub a: usize,
    pub b: usize,
    pub index_a: u64,
    pub index_b: u64,
    pub intersection_order: u64,
    pub maximal: bool,
}

/// All unordered pairs of proper subgroups with coprime indices, each
/// verified to satisfy `|A||B| = |G||A n B|`. `A n B` is computed by sifting
/// the elements of the smaller subgroup through the larger one.
pub fn coprime_factorizations(
    group: &PermGroup,
    lattice: &SubgroupLattice,
) -> Result<Vec<CoprimeFactorization>> {
    let parent = lattice.parent_order_u64();
    let proper: Vec<usize> = (0..lattice.len()).filter(|&i| lattice.is_proper(i)).collect();
    let groups: HashMap<usize, PermGroup> = proper
        .iter()
        .map(|&i| (i, lattice.subgroups[i].to_group(group.degree())))
        .collect();
    let mut out = Vec::new();
    for (x, &i) in proper.iter().enumerate() {
        for &j in &proper[x + 1..] {
            let (index_a, index_b) = (lattice.index_of(i), lattice.index_of(j));
            if gcd(index_a, index_b) != 1 {
                continue;
            }
            let (small, large) = if lattice.subgroups[i].order <= lattice.subgroups[j].order {
                (i, j)
            } else {
                (j, i)
            };
            let small_elems = groups[&small].elements(lattice.subgroups[small].order as usize)?;
            let intersection_order = small_elems
                .iter()
                .filter(|e| groups[&large].bsgs().contains(e))
                .count() as u64;
            let (oa, ob) = (lattice.subgroups[i].order, lattice.subgroups[j].order);
            assert_eq!(
                oa * ob,
                parent * intersection_order,
                "coprime indices force AB = G"
            );
            out.push(CoprimeFactorization {
                a: i,
                b: j,
                index_a,
                index_b,
                intersection_order,
                maximal: lattice.maximal[i] && lattice.maximal[j],
            });
        }
    }
    Ok(out)
}

/// `mu(K) <= 2` for a caller-asserted central product of quasisimple groups
/// with isomorphic simple quotients.
pub fn check_quasisimple_mu(k: &PermGroup, cap: usize) -> Result<Verdict<usize>> {
    let mu = mu(k, cap)?;
    Ok(Verdict::Checked {
        holds: mu <= 2,
        detail: mu,
    })
}
