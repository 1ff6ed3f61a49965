//! Deterministic constructors for the example families.

mod field;

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

pub use field::{FiniteField, ProjectiveLine, MAX_FIELD_SIZE};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

pub const PARTITION_DEGREE_CAP: usize = 100_000;
pub const AGL_DEGREE_CAP: usize = 10_000;

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn cycle(n: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<usize> = (0..n).collect();
    for (i, &p) in pts.iter().enumerate() {
        images[p] = pts[(i + 1) % pts.len()];
    }
    Permutation::from_fn(n, |x| images[x])
}

/// Alt(n) on `n` points: `(0 1 2)` together with `(0 1 .. n-1)` for odd `n`
/// or `(1 2 .. n-1)` for even `n`.
pub fn alternating(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(invalid(format!("alt needs n >= 3, got {n}")));
    }
    Ok(PermGroup::new(n, alternating_generators(n))?.with_label(format!("alt({n})")))
}

fn alternating_generators(n: usize) -> Vec<Permutation> {
    let mut gens = vec![cycle(n, 0..3)];
    if n >= 4 {
        gens.push(if n % 2 == 1 { cycle(n, 0..n) } else { cycle(n, 1..n) });
    }
    gens
}

/// Sym(n): the Alt(n) generators plus the transposition `(0 1)`.
pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(invalid(format!("sym needs n >= 3, got {n}")));
    }
    let mut gens = alternating_generators(n);
    gens.push(cycle(n, 0..2));
    Ok(PermGroup::new(n, gens)?.with_label(format!("sym({n})")))
}

/// Regular cyclic group on `n >= 2` points.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n < 2 {
        return Err(invalid(format!("cyclic needs n >= 2, got {n}")));
    }
    Ok(PermGroup::new(n, vec![cycle(n, 0..n)])?.with_label(format!("cyclic({n})")))
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon, `n >= 3`.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if n < 3 {
        return Err(invalid(format!("dihedral needs n >= 3, got {n}")));
    }
    let rotation = cycle(n, 0..n);
    let reflection = Permutation::from_fn(n, |x| (n - x) % n);
    Ok(PermGroup::new(n, vec![rotation, reflection])?.with_label(format!("dihedral({n})")))
}

/// The `k`-subsets of `0..n` in lexicographic order.
pub fn ksubset_labels(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..n).combinations(k).collect()
}

/// Induced action of permutations of `0..n` on labelled objects, where
/// `act` maps an object to its canonical image.
fn induced_action<T: Clone + Eq + std::hash::Hash>(
    labels: &[T],
    gens: &[Permutation],
    act: impl Fn(&T, &Permutation) -> T,
) -> Vec<Permutation> {
    let index: HashMap<&T, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    gens.iter()
        .map(|g| {
            Permutation::from_fn(labels.len(), |i| index[&act(&labels[i], g)])
        })
        .collect()
}

/// Alt(n) on `k`-subsets, `1 <= k < n/2`.
pub fn ksubsets_action(n: usize, k: usize) -> Result<PermGroup> {
    if k < 1 || 2 * k >= n || n < 3 {
        return Err(invalid(format!("ksubsets needs 1 <= k < n/2, got n={n}, k={k}")));
    }
    let labels = ksubset_labels(n, k);
    let gens = induced_action(&labels, &alternating_generators(n), apply_to_set);
    Ok(PermGroup::new(labels.len(), gens)?.with_label(format!("ksubsets({n},{k})")))
}

pub(crate) fn apply_to_set(set: &Vec<usize>, g: &Permutation) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().map(|&x| g.image(x)).collect();
    out.sort_unstable();
    out
}

fn apply_to_partition(part: &Vec<Vec<usize>>, g: &Permutation) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = part.iter().map(|b| apply_to_set(b, g)).collect();
    out.sort_unstable();
    out
}

/// Number of partitions of `n` points into `n/k` blocks of size `k`.
pub fn partition_count(n: usize, k: usize) -> BigUint {
    let fact = |m: usize| (1..=m).fold(BigUint::one(), |acc, i| acc * BigUint::from(i));
    let blocks = n / k;
    fact(n) / (fact(k).pow(blocks as u32) * fact(blocks))
}

/// Partitions of `0..n` into blocks of size `k`, each a sorted list of sorted
/// blocks, in lexicographic order.
pub fn partition_labels(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(rest: &[usize], k: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&first, others)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for combo in others.iter().copied().combinations(k - 1) {
            let mut block = vec![first];
            block.extend(&combo);
            let remaining: Vec<usize> =
                others.iter().copied().filter(|x| !combo.contains(x)).collect();
            acc.push(block);
            rec(&remaining, k, acc, out);
            acc.pop();
        }
    }
    let points: Vec<usize> = (0..n).collect();
    let mut out = Vec::new();
    rec(&points, k, &mut Vec::new(), &mut out);
    out
}

/// Alt(n) on partitions into blocks of size `k`, `1 < k < n`, `k | n`.
pub fn partition_action(n: usize, k: usize) -> Result<PermGroup> {
    partition_action_capped(n, k, PARTITION_DEGREE_CAP)
}

pub fn partition_action_capped(n: usize, k: usize, cap: usize) -> Result<PermGroup> {
    if k <= 1 || k >= n || !n.is_multiple_of(k) {
        return Err(invalid(format!("partitions needs 1 < k < n with k | n, got n={n}, k={k}")));
    }
    let count = partition_count(n, k);
    if count.to_usize().is_none_or(|c| c > cap) {
        return Err(Error::cap("partition-action degree", cap, count));
    }
    let labels = partition_labels(n, k);
    let gens = induced_action(&labels, &alternating_generators(n), apply_to_partition);
    Ok(PermGroup::new(labels.len(), gens)?.with_label(format!("partitions({n},{k})")))
}

/// Smallest primitive root modulo the prime `p`.
fn primitive_root(p: usize) -> usize {
    if p == 2 {
        return 1;
    }
    let factors = crate::arith::prime_factors((p - 1) as u64);
    (2..p)
        .find(|&g| {
            factors.iter().all(|&r| {
                let mut acc = 1;
                for _ in 0..(p - 1) / r as usize {
                    acc = acc * g % p;
                }
                acc != 1
            })
        })
        .expect("primitive roots exist modulo primes")
}

/// AGL(d, p) on the `p^d` vectors of `GF(p)^d`. Vector `v` is the point
/// `sum v_i p^i`.
pub fn agl(d: usize, p: usize) -> Result<PermGroup> {
    agl_capped(d, p, AGL_DEGREE_CAP)
}

pub fn agl_capped(d: usize, p: usize, cap: usize) -> Result<PermGroup> {
    if d < 1 || !is_prime(p as u64) {
        return Err(invalid(format!("agl needs d >= 1 and p prime, got d={d}, p={p}")));
    }
    let n = BigUint::from(p).pow(d as u32);
    let n = match n.to_usize() {
        Some(n) if n <= cap => n,
        _ => return Err(Error::cap("agl degree", cap, n)),
    };
    let digits = |x: usize| -> Vec<usize> {
        let mut v = Vec::with_capacity(d);
        let mut x = x;
        for _ in 0..d {
            v.push(x % p);
            x /= p;
        }
        v
    };
    let point = |v: &[usize]| v.iter().rev().fold(0, |acc, &c| acc * p + c);
    let affine = |f: &dyn Fn(&mut Vec<usize>)| {
        Permutation::from_fn(n, |x| {
            let mut v = digits(x);
            f(&mut v);
            point(&v)
        })
    };

    let mut gens = Vec::new();
    for i in 0..d {
        gens.push(affine(&|v| v[i] = (v[i] + 1) % p));
    }
    for i in 0..d {
        for j in 0..d {
            if i != j {
                gens.push(affine(&|v| v[j] = (v[j] + v[i]) % p));
            }
        }
    }
    let beta = primitive_root(p);
    gens.push(affine(&|v| v[0] = v[0] * beta % p));
    Ok(PermGroup::new(n, gens)?.with_label(format!("agl({d},{p})")))
}

/// PSL(2, q) on the `q + 1` points of the projective line, `4 <= q <= 1024`.
/// Generated by the transvections with entries `beta^i`, `0 <= i < f`.
pub fn psl2(q: usize) -> Result<PermGroup> {
    if !(4..=MAX_FIELD_SIZE).contains(&q) {
        return Err(invalid(format!("psl2 needs 4 <= q <= {MAX_FIELD_SIZE}, got {q}")));
    }
    let field = FiniteField::new(q)?;
    let f = field.degree();
    let line = ProjectiveLine::new(field);
    let mut gens = Vec::with_capacity(2 * f);
    for i in 0..f {
        let t = line.field().primitive_power(i);
        gens.push(Permutation::from_fn(line.len(), |x| line.apply(x, [1, t, 0, 1])));
    }
    for i in 0..f {
        let t = line.field().primitive_power(i);
        gens.push(Permutation::from_fn(line.len(), |x| line.apply(x, [1, 0, t, 1])));
    }
    Ok(PermGroup::new(line.len(), gens)?.with_label(format!("psl2({q})")))
}

/// Family names accepted by [`construct`].
pub const FAMILIES: &[&str] = &[
    "alt", "sym", "ksubsets", "partitions", "agl", "psl2", "dihedral", "cyclic",
];

/// Builds a group from a family name and its integer parameters.
pub fn construct(family: &str, params: &[usize]) -> Result<PermGroup> {
    let arity = match family {
        "alt" | "sym" | "psl2" | "dihedral" | "cyclic" => 1,
        "ksubsets" | "partitions" | "agl" => 2,
        _ => {
            return Err(invalid(format!(
                "unknown family {family:?}; expected one of {}",
                FAMILIES.join(", ")
            )))
        }
    };
    if params.len() != arity {
        return Err(invalid(format!(
            "{family} takes {arity} parameter(s), got {}",
            params.len()
        )));
    }
    match family {
        "alt" => alternating(params[0]),
        "sym" => symmetric(params[0]),
        "psl2" => psl2(params[0]),
        "dihedral" => dihedral(params[0]),
        "cyclic" => cyclic(params[0]),
        "ksubsets" => ksubsets_action(params[0], params[1]),
        "partitions" => partition_action(params[0], params[1]),
        "agl" => agl(params[0], params[1]),
        _ => unreachable!(),
    }
}
