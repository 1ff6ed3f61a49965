#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subdeg::{PermGroup, Permutation};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_perm(n: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

pub fn perm(images: &[usize]) -> Permutation {
    Permutation::from_images(images.to_vec()).unwrap()
}

pub fn cycles(text: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(text, n).unwrap()
}

pub fn group(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::new(n, gens.iter().map(|g| cycles(g, n)).collect()).unwrap()
}

/// Every element, by breadth-first closure under right multiplication by
/// generators. Independent of the stabilizer chain.
pub fn enumerate(gens: &[Permutation], n: usize) -> Vec<Vec<usize>> {
    let as_vec = |p: &Permutation| (0..n).map(|x| p.image(x)).collect::<Vec<_>>();
    let id: Vec<usize> = (0..n).collect();
    let gv: Vec<Vec<usize>> = gens.iter().map(as_vec).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &gv {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
    out.sort();
    out
}

/// All subgroups of the group with the given elements, as sorted element
/// lists, found as closures of every pair of elements. Complete for groups
/// whose subgroups are all 2-generated.
pub fn two_generated_subgroups(elements: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let n = elements[0].len();
    let mut found: HashSet<Vec<Vec<usize>>> = HashSet::new();
    for a in elements {
        for b in elements {
            let gens = [perm(a), perm(b)];
            found.insert(enumerate(&gens, n));
        }
    }
    let mut out: Vec<_> = found.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Largest pairwise coprime subset of the distinct values above 1, by
/// checking every subset.
pub fn brute_coprime_clique(values: &[u64]) -> usize {
    let mut v: Vec<u64> = values.iter().copied().filter(|&x| x > 1).collect();
    v.sort();
    v.dedup();
    assert!(v.len() <= 20);
    (0u32..1 << v.len())
        .filter(|mask| {
            let chosen: Vec<u64> = (0..v.len()).filter(|i| mask >> i & 1 == 1).map(|i| v[i]).collect();
            chosen
                .iter()
                .enumerate()
                .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| gcd(a, b) == 1))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap()
}

/// Orbits of the subgroup fixing `point`, found from the element list.
pub fn brute_subdegrees(elements: &[Vec<usize>], point: usize) -> Vec<usize> {
    let n = elements[0].len();
    let stab: Vec<&Vec<usize>> = elements.iter().filter(|e| e[point] == point).collect();
    let mut done = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if done[x] {
            continue;
        }
        let orbit: HashSet<usize> = stab.iter().map(|e| e[x]).collect();
        for &y in &orbit {
            done[y] = true;
        }
        out.push(orbit.len());
    }
    out.sort();
    out
}
