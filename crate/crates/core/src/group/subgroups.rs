use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::bsgs::Bsgs;
use super::PermGroup;
use crate::error::{Error, Result};
use crate::perm::Permutation;

impl PermGroup {
    /// Stabilizer of `point`, from a chain whose first base point is `point`.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        self.check_point(point)?;
        let chain = if self.bsgs().base().first() == Some(&point) {
            self.bsgs().clone()
        } else {
            Bsgs::build(self.degree, &self.generators, &[point])
        };
        let tail = chain.stabilizer_tail();
        let gens = tail.strong_generators().to_vec();
        Ok(PermGroup::with_bsgs(self.degree, gens, tail))
    }

    /// Action of `self` on the right cosets of `sub`, with at most `cap` cosets.
    ///
    /// Coset `Hg` is keyed by its canonical element: the member of `Hg` whose
    /// images of the base of `H` are lexicographically least. Coset 0 is `H`,
    /// the rest are numbered in breadth-first order over the generators.
    pub fn coset_action(&self, sub: &PermGroup, cap: usize) -> Result<PermGroup> {
        if sub.degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: sub.degree,
            });
        }
        for (i, h) in sub.generators.iter().enumerate() {
            if !self.bsgs().contains(h) {
                return Err(Error::NotSubgroup(i));
            }
        }
        let index = self.order() / sub.order();
        let m = match index.to_usize() {
            Some(m) if m <= cap => m,
            _ => return Err(Error::cap("coset-action index", cap, index)),
        };

        let hb = sub.bsgs();
        let transversals: Vec<Vec<Permutation>> =
            (0..hb.levels().len()).map(|l| hb.transversal(l)).collect();
        let canonical = |g: Permutation| -> Permutation {
            let mut x = g;
            for (lvl, reps) in hb.levels().iter().zip(&transversals) {
                let (best, _) = lvl
                    .orbit()
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, &d)| x.image(d))
                    .expect("non-empty orbit");
                x = reps[best].mul_unchecked(&x);
            }
            x
        };
        // Canonical elements lie in G, so their images on a base of G identify them.
        let gbase = self.bsgs().base().to_vec();
        let key = |c: &Permutation| -> Vec<u32> { gbase.iter().map(|&b| c.image(b) as u32).collect() };

        let start = canonical(Permutation::identity(self.degree));
        let mut index_of: HashMap<Vec<u32>, usize> = HashMap::new();
        index_of.insert(key(&start), 0);
        let mut queue = vec![start];
        let mut images: Vec<Vec<u32>> = vec![Vec::with_capacity(m); self.generators.len()];
        let mut head = 0;
        while head < queue.len() {
            let c = std::mem::replace(&mut queue[head], Permutation::identity(1));
            head += 1;
            for (gi, g) in self.generators.iter().enumerate() {
                let d = canonical(c.mul_unchecked(g));
                let k = key(&d);
                let next = index_of.len();
                let idx = *index_of.entry(k).or_insert_with(|| {
                    queue.push(d);
                    next
                });
                images[gi].push(idx as u32);
            }
        }
        debug_assert_eq!(index_of.len(), m);
        let gens = images.into_iter().map(Permutation::from_raw).collect();
        Ok(PermGroup::normalized(m, gens))
    }

    /// Smallest normal subgroup of `self` containing `gens`.
    pub fn normal_closure(&self, gens: &[Permutation]) -> Result<PermGroup> {
        for g in gens {
            self.check_degree(g)?;
        }
        let mut current: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut bsgs = Bsgs::build(self.degree, &current, &[]);
        let mut i = 0;
        while i < current.len() {
            for g in &self.generators {
                let c = current[i].conjugate_by(g);
                if !bsgs.contains(&c) {
                    current.push(c);
                    let mut seed = bsgs.strong_generators().to_vec();
                    seed.push(current.last().expect("pushed").clone());
                    bsgs = Bsgs::build(self.degree, &seed, bsgs.base());
                }
            }
            i += 1;
        }
        Ok(PermGroup::with_bsgs(self.degree, current, bsgs))
    }

    /// `[G, G]`: normal closure of commutators of generator pairs.
    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = &self.generators;
        let mut comms = Vec::new();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let c = Permutation::commutator(&gens[i], &gens[j]);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms).expect("same degree")
    }

    /// Last term of the derived series.
    pub fn last_derived_term(&self) -> PermGroup {
        let mut g = self.clone();
        loop {
            let d = g.derived_subgroup();
            if d.order() == g.order() {
                return g;
            }
            g = d;
        }
    }

    /// True when `self` is a subgroup of `parent` normalized by its generators.
    pub fn is_normal_in(&self, parent: &PermGroup) -> Result<bool> {
        if !self.is_subgroup_of(parent)? {
            return Ok(false);
        }
        for g in &parent.generators {
            for n in &self.generators {
                if !self.bsgs().contains(&n.conjugate_by(g)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}
