//! Writes the 266-point J1 fixture.
//!
//! J1 is generated by two 7x7 matrices over GF(11). It acts on the 4180
//! projective points in the orbit of the all-ones vector; the 266-point
//! action is on the cosets of a PSL(2,11) subgroup found by random search.
//!
//! Usage: cargo run --release -p subdeg --example j1_fixture [OUT]

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use subdeg::corpus::GroupFile;
use subdeg::{PermGroup, Permutation};

const P: i64 = 11;
const DIM: usize = 7;

type Vector = [i64; DIM];
type Matrix = [[i64; DIM]; DIM];

fn y_matrix() -> Matrix {
    let mut m = [[0; DIM]; DIM];
    for (i, row) in m.iter_mut().enumerate() {
        row[(i + 1) % DIM] = 1;
    }
    m
}

fn z_matrix() -> Matrix {
    let rows = [
        [-3, 2, -1, -1, -3, -1, -3],
        [-2, 1, 1, 3, 1, 3, 3],
        [-1, -1, -3, -1, -3, -3, 2],
        [-1, -3, -1, -3, -3, 2, -1],
        [-3, -1, -3, -3, 2, -1, -1],
        [1, 3, 3, -2, 1, 1, 3],
        [3, 3, -2, 1, 1, 3, 1],
    ];
    rows.map(|r| r.map(|x: i64| x.rem_euclid(P)))
}

fn apply(v: &Vector, m: &Matrix) -> Vector {
    let mut out = [0; DIM];
    for (j, o) in out.iter_mut().enumerate() {
        *o = (0..DIM).map(|i| v[i] * m[i][j]).sum::<i64>().rem_euclid(P);
    }
    out
}

fn inverse_mod(a: i64) -> i64 {
    (1..P).find(|b| a * b % P == 1).expect("nonzero")
}

fn normalize(v: Vector) -> Vector {
    let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
    let s = inverse_mod(lead);
    v.map(|x| x * s % P)
}

fn projective_action(mats: &[Matrix]) -> Vec<Permutation> {
    let start = normalize([1; DIM]);
    let mut points = vec![start];
    let mut index = HashMap::from([(start, 0usize)]);
    let mut i = 0;
    while i < points.len() {
        for m in mats {
            let w = normalize(apply(&points[i], m));
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(w) {
                e.insert(points.len());
                points.push(w);
            }
        }
        i += 1;
    }
    mats.iter()
        .map(|m| {
            let images = points
                .iter()
                .map(|v| index[&normalize(apply(v, m))])
                .collect();
            Permutation::from_images(images).expect("bijection on the orbit")
        })
        .collect()
}

fn random_element(gens: &[Permutation], rng: &mut ChaCha8Rng) -> Permutation {
    let mut x = Permutation::identity(gens[0].degree());
    for _ in 0..60 {
        x = x.compose(&gens[rng.random_range(0..gens.len())]).unwrap();
    }
    x
}

fn element_of_order(gens: &[Permutation], k: u64, rng: &mut ChaCha8Rng) -> Permutation {
    loop {
        let x = random_element(gens, rng);
        let n: u64 = x.order().try_into().unwrap();
        if n.is_multiple_of(k) {
            return x.pow(n / k);
        }
    }
}

fn main() {
    let out = std::env::args().nth(1).unwrap_or_else(|| "crates/core/fixtures/j1.json".into());
    let gens = projective_action(&[y_matrix(), z_matrix()]);
    let big = PermGroup::new(gens[0].degree(), gens.clone()).unwrap();
    assert_eq!(big.order(), BigUint::from(175_560u32));
    eprintln!("J1 on {} points", big.degree());

    let mut rng = ChaCha8Rng::seed_from_u64(266);
    let a = element_of_order(&gens, 2, &mut rng);
    let c = element_of_order(&gens, 3, &mut rng);
    let sub = loop {
        let g = random_element(&gens, &mut rng);
        let h = PermGroup::new(big.degree(), vec![a.clone(), c.conjugate_by(&g)]).unwrap();
        if h.order() == BigUint::from(660u32) {
            break h;
        }
    };
    let action = big.coset_action(&sub, 1_000).unwrap();
    assert_eq!(action.degree(), 266);
    let file = GroupFile::from_group(
        "J1",
        &action,
        Some("Janko's GF(11) matrices, action on cosets of PSL(2,11)".into()),
    );
    std::fs::write(&out, file.to_json()).unwrap();
    eprintln!("wrote {out}");
}
