mod common;

use std::collections::HashSet;

use common::{brute_subdegrees, cycles, enumerate, group, perm, random_perm, rng};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::Rng;
use subdeg::constructions::{agl, alternating, cyclic, dihedral, ksubsets_action, partition_action, psl2, symmetric};
use subdeg::{PermGroup, Permutation};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(big(1), |acc, i| acc * big(i))
}

fn arb_group() -> impl Strategy<Value = PermGroup> {
    (1usize..=6, 1usize..=3).prop_flat_map(|(n, k)| {
        proptest::collection::vec(
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            k,
        )
        .prop_map(move |gens| {
            PermGroup::new(n, gens.into_iter().map(|g| Permutation::from_images(g).unwrap()).collect())
                .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn order_and_membership_match_enumeration(g in arb_group(), seed in any::<u64>()) {
        let n = g.degree();
        let elems = enumerate(g.generators(), n);
        prop_assert_eq!(g.order(), big(elems.len() as u64));
        let set: HashSet<Vec<usize>> = elems.into_iter().collect();
        let mut r = rng(seed);
        for _ in 0..20 {
            let p = random_perm(n, &mut r);
            let v: Vec<usize> = (0..n).map(|x| p.image(x)).collect();
            prop_assert_eq!(g.contains(&p).unwrap(), set.contains(&v));
        }
    }

    #[test]
    fn chain_invariants(g in arb_group()) {
        let bsgs = g.bsgs();
        let product = bsgs.levels().iter().fold(big(1), |acc, l| acc * big(l.orbit().len() as u64));
        prop_assert_eq!(product, g.order());
        for s in bsgs.strong_generators() {
            prop_assert!(bsgs.sift(s).0.is_identity());
        }
        for (i, &b) in bsgs.base().iter().enumerate() {
            for level in &bsgs.levels()[i + 1..] {
                for &s in level.generators() {
                    prop_assert!(bsgs.strong_generators()[s].fixes(b));
                }
            }
        }
    }

    #[test]
    fn orbit_stabilizer(g in arb_group(), point in 0usize..6) {
        let point = point % g.degree();
        let orbit = g.orbit(point).unwrap().len();
        let stab = g.point_stabilizer(point).unwrap();
        prop_assert_eq!(big(orbit as u64) * stab.order(), g.order());
        let fixing = enumerate(g.generators(), g.degree()).iter().filter(|e| e[point] == point).count();
        prop_assert_eq!(stab.order(), big(fixing as u64));
    }
}

#[test]
fn membership_against_enumeration_for_moderate_groups() {
    let groups = [
        agl(3, 2).unwrap(),
        psl2(7).unwrap(),
        psl2(11).unwrap(),
        group(8, &["(1,2,3,4)", "(1,3)", "(5,6,7,8)", "(1,5)(2,6)(3,7)(4,8)"]),
        partition_action(6, 2).unwrap(),
    ];
    let mut r = rng(3);
    for g in &groups {
        let n = g.degree();
        let elems = enumerate(g.generators(), n);
        assert!(elems.len() <= 5000);
        assert_eq!(g.order(), big(elems.len() as u64));
        let set: HashSet<Vec<usize>> = elems.iter().cloned().collect();
        for i in 0..500 {
            // mix members and random permutations so both answers occur
            let p = if i % 2 == 0 {
                perm(&elems[r.random_range(0..elems.len())])
            } else {
                random_perm(n, &mut r)
            };
            let v: Vec<usize> = (0..n).map(|x| p.image(x)).collect();
            assert_eq!(g.contains(&p).unwrap(), set.contains(&v));
        }
    }
}

#[test]
fn random_pair_generates_full_group() {
    let mut r = rng(4);
    for n in [12, 50] {
        let (a, b, g) = loop {
            let (a, b) = (random_perm(n, &mut r), random_perm(n, &mut r));
            let g = PermGroup::new(n, vec![a.clone(), b.clone()]).unwrap();
            if g.is_transitive() {
                break (a, b, g);
            }
        };
        let even = |p: &Permutation| p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0;
        let expected = if even(&a) && even(&b) { factorial(n as u64) / big(2) } else { factorial(n as u64) };
        assert_eq!(g.order(), expected);
        assert!(g.contains(&a.compose(&b).unwrap()).unwrap());
    }
}

#[test]
fn order_examples() {
    assert_eq!(alternating(5).unwrap().order(), big(60));
    assert_eq!(agl(3, 2).unwrap().order(), big(1344));
    assert_eq!(psl2(7).unwrap().order(), big(168));
    assert_eq!(enumerate(agl(3, 2).unwrap().generators(), 8).len(), 1344);
    assert_eq!(enumerate(psl2(7).unwrap().generators(), 8).len(), 168);
    let a5 = alternating(5).unwrap();
    assert!(a5.contains(&cycles("(1,2,3)", 5)).unwrap());
    assert!(!a5.contains(&cycles("(1,2)", 5)).unwrap());
}

#[test]
fn orbits_and_stabilizers() {
    assert_eq!(alternating(5).unwrap().orbit(0).unwrap().len(), 5);
    assert_eq!(PermGroup::trivial(5).orbit(2).unwrap().points, vec![2]);
    assert_eq!(group(4, &["(1,2,3,4)", "(1,3)"]).orbit(0).unwrap().len(), 4);
    let stab = alternating(5).unwrap().point_stabilizer(4).unwrap();
    assert_eq!(stab.order(), big(12));
    assert!(cyclic(7).unwrap().point_stabilizer(3).unwrap().is_trivial());
    assert_eq!(PermGroup::trivial(5).fixed_points(), vec![0, 1, 2, 3, 4]);
    assert_eq!(alternating(5).unwrap().point_stabilizer(0).unwrap().fixed_points(), vec![0]);
}

#[test]
fn coset_action_examples() {
    let a5 = alternating(5).unwrap();
    let natural = a5.coset_action(&a5.point_stabilizer(0).unwrap(), 1000).unwrap();
    assert_eq!(natural.degree(), 5);
    assert_eq!(natural.subdegrees(0).unwrap().subdegrees(), vec![1, 4]);

    let s3 = group(5, &["(1,2,3)", "(1,2)(4,5)"]);
    let petersen = a5.coset_action(&s3, 1000).unwrap();
    assert_eq!(petersen.degree(), 10);
    assert!(petersen.is_transitive());
    assert_eq!(petersen.subdegrees(0).unwrap().subdegrees(), vec![1, 3, 6]);

    let d10 = group(5, &["(1,2,3,4,5)", "(2,5)(3,4)"]);
    let six = a5.coset_action(&d10, 1000).unwrap();
    assert_eq!(six.degree(), 6);
    assert_eq!(six.subdegrees(0).unwrap().subdegrees(), vec![1, 5]);
    assert_eq!(six.order(), big(60));
}

#[test]
fn coset_action_on_stabilizer_preserves_subdegrees() {
    let groups = [
        psl2(7).unwrap(),
        ksubsets_action(7, 3).unwrap(),
        dihedral(6).unwrap(),
        agl(2, 3).unwrap(),
        partition_action(6, 2).unwrap(),
    ];
    for g in &groups {
        let elems = enumerate(g.generators(), g.degree());
        let expected = brute_subdegrees(&elems, 0);
        assert_eq!(g.subdegrees(0).unwrap().subdegrees(), expected);
        let h = g.coset_action(&g.point_stabilizer(0).unwrap(), 1000).unwrap();
        assert_eq!(h.degree(), g.degree());
        assert_eq!(h.order(), g.order());
        assert_eq!(h.subdegrees(0).unwrap().subdegrees(), expected);
    }
}

#[test]
fn coset_action_rejects_non_subgroups_and_caps() {
    let a5 = alternating(5).unwrap();
    assert!(a5.coset_action(&group(5, &["(1,2)"]), 1000).is_err());
    assert!(a5.coset_action(&PermGroup::trivial(5), 10).is_err());
}

/// Smallest block containing `a` and `b`, by testing every subset that
/// contains both against every element.
fn brute_minimal_block(elements: &[Vec<usize>], a: usize, b: usize) -> Vec<usize> {
    let n = elements[0].len();
    let others: Vec<usize> = (0..n).filter(|&x| x != a && x != b).collect();
    let mut best: Option<Vec<usize>> = None;
    for mask in 0u32..1 << others.len() {
        let mut set: Vec<usize> = vec![a, b];
        set.extend((0..others.len()).filter(|i| mask >> i & 1 == 1).map(|i| others[i]));
        if best.as_ref().is_some_and(|s| s.len() <= set.len()) {
            continue;
        }
        let members: HashSet<usize> = set.iter().copied().collect();
        let is_block = elements.iter().all(|e| {
            let hits = set.iter().filter(|&&x| members.contains(&e[x])).count();
            hits == 0 || hits == set.len()
        });
        if is_block {
            set.sort();
            best = Some(set);
        }
    }
    best.unwrap()
}

#[test]
fn block_closure_matches_brute_force() {
    let mut groups = vec![
        group(6, &["(1,2)", "(1,3,5)(2,4,6)"]),
        group(8, &["(1,2,3,4)", "(1,3)", "(5,6,7,8)", "(1,5)(2,6)(3,7)(4,8)"]),
        ksubsets_action(5, 2).unwrap(),
        partition_action(6, 3).unwrap(),
        psl2(5).unwrap(),
        agl(1, 11).unwrap(),
        alternating(6).unwrap(),
    ];
    for n in 3..=12 {
        groups.push(cyclic(n).unwrap());
        groups.push(dihedral(n).unwrap());
    }
    for g in &groups {
        let elems = enumerate(g.generators(), g.degree());
        let mut all_trivial = true;
        for b in 1..g.degree() {
            let sys = g.minimal_block_system(0, b).unwrap();
            assert!(sys.is_invariant_under(g));
            assert_eq!(sys.block_size * sys.num_blocks, g.degree());
            let block = sys.blocks().into_iter().find(|blk| blk.contains(&0)).unwrap();
            assert_eq!(block, brute_minimal_block(&elems, 0, b));
            all_trivial &= block.len() == g.degree();
        }
        assert_eq!(g.is_primitive(), all_trivial && g.degree() > 1);
    }
}

#[test]
fn block_examples() {
    let d4 = group(4, &["(1,2,3,4)", "(1,3)"]);
    assert_eq!(d4.minimal_block_system(0, 2).unwrap().blocks(), vec![vec![0, 2], vec![1, 3]]);
    assert!(!d4.is_primitive());
    let a5 = alternating(5).unwrap();
    assert_eq!(a5.minimal_block_system(1, 3).unwrap().num_blocks, 1);
    let c6 = cyclic(6).unwrap();
    assert_eq!(
        c6.minimal_block_system(0, 3).unwrap().blocks(),
        vec![vec![0, 3], vec![1, 4], vec![2, 5]]
    );
    assert!(ksubsets_action(5, 2).unwrap().is_primitive());
    assert!(cyclic(5).unwrap().is_primitive());
    assert!(alternating(9).unwrap().is_primitive());
}

#[test]
fn derived_series() {
    let s4 = symmetric(4).unwrap();
    let d = s4.derived_subgroup();
    assert_eq!(d.order(), big(12));
    assert!(d.is_normal_in(&s4).unwrap());
    assert_eq!(alternating(5).unwrap().derived_subgroup().order(), big(60));
    let d4 = group(4, &["(1,2,3,4)", "(1,3)"]);
    let dd4 = d4.derived_subgroup();
    assert_eq!(dd4.order(), big(2));
    assert!(dd4.contains(&cycles("(1,3)(2,4)", 4)).unwrap());
    assert!(s4.last_derived_term().is_trivial());
    assert_eq!(alternating(5).unwrap().last_derived_term().order(), big(60));
    let s3_a5 = group(8, &["(1,2,3)", "(1,2)", "(4,5,6)", "(4,5,6,7,8)"]);
    assert_eq!(s3_a5.order(), big(360));
    let last = s3_a5.last_derived_term();
    assert_eq!(last.order(), big(60));
    assert_eq!(last.fixed_points(), vec![0, 1, 2]);
    for g in [psl2(7).unwrap(), agl(2, 3).unwrap(), dihedral(8).unwrap()] {
        assert!(g.derived_subgroup().is_normal_in(&g).unwrap());
    }
}

#[test]
fn small_group_helpers() {
    let a4 = alternating(4).unwrap();
    assert_eq!(a4.elements(1000).unwrap().len(), 12);
    let c6 = cyclic(6).unwrap();
    let e = c6.elements(1000).unwrap();
    assert_eq!(e.len(), 6);
    assert!(e.iter().all(|x| e.iter().all(|y| e.contains(&x.compose(y).unwrap()))));
    let a5 = alternating(5).unwrap();
    assert!(a5.elements(1000).unwrap().iter().all(|x| a5.contains(x).unwrap()));
    assert!(a5.elements(10).is_err());

    let s4 = symmetric(4).unwrap();
    assert_eq!(s4.normalizer_small(&group(4, &["(1,2,3,4)"]), 1000).unwrap().order(), big(8));
    assert_eq!(a5.normalizer_small(&group(5, &["(1,2,3,4,5)"]), 1000).unwrap().order(), big(10));
    assert_eq!(s4.normalizer_small(&a4, 1000).unwrap().order(), big(24));

    assert_eq!(a5.sylow_subgroup_small(5, 1000).unwrap().order(), big(5));
    assert_eq!(a5.sylow_subgroup_small(2, 1000).unwrap().order(), big(4));
    let l27 = psl2(7).unwrap();
    let p7 = l27.sylow_subgroup_small(7, 1000).unwrap();
    assert_eq!(p7.order(), big(7));
    assert_eq!(l27.normalizer_small(&p7, 1000).unwrap().order(), big(21));
}

#[test]
fn chains_are_deterministic() {
    for _ in 0..2 {
        let a = psl2(13).unwrap();
        let b = psl2(13).unwrap();
        assert_eq!(a.bsgs().base(), b.bsgs().base());
        assert_eq!(a.bsgs().strong_generators(), b.bsgs().strong_generators());
    }
}
