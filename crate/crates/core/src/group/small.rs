//! Brute-force machinery for groups small enough to enumerate.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::bsgs::Bsgs;
use super::PermGroup;
use crate::arith::{is_prime, p_part};
use crate::error::{Error, Result};
use crate::perm::Permutation;

impl PermGroup {
    /// Every element, as products of transversal elements down the chain.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        match order.to_usize() {
            Some(o) if o <= cap => {}
            _ => return Err(Error::cap("group order", cap, order)),
        }
        let b = self.bsgs();
        let mut elems = vec![Permutation::identity(self.degree)];
        for l in (0..b.levels().len()).rev() {
            let reps = b.transversal(l);
            let mut next = Vec::with_capacity(elems.len() * reps.len());
            for u in &reps {
                for e in &elems {
                    next.push(e.mul_unchecked(u));
                }
            }
            elems = next;
        }
        Ok(elems)
    }

    /// Subgroup generated by `elements`, keeping only those not already
    /// generated by their predecessors.
    pub fn generated_by<'a>(
        degree: usize,
        elements: impl IntoIterator<Item = &'a Permutation>,
    ) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut bsgs = Bsgs::build(degree, &[], &[]);
        for e in elements {
            if !bsgs.contains(e) {
                gens.push(e.clone());
                let mut seed = bsgs.strong_generators().to_vec();
                seed.push(e.clone());
                bsgs = Bsgs::build(degree, &seed, bsgs.base());
            }
        }
        PermGroup::with_bsgs(degree, gens, bsgs)
    }

    /// `N_G(H)` by filtering the elements of `G` through a conjugation test
    /// against the element set of `H`.
    pub fn normalizer_small(&self, sub: &PermGroup, cap: usize) -> Result<PermGroup> {
        self.require_subgroup(sub)?;
        let members: HashSet<Permutation> = sub.elements(cap)?.into_iter().collect();
        let elems = self.elements(cap)?;
        let normalizing = elems.iter().filter(|g| {
            sub.generators()
                .iter()
                .all(|h| members.contains(&h.conjugate_by(g)))
        });
        Ok(PermGroup::generated_by(
            self.degree,
            sub.generators().iter().chain(normalizing),
        ))
    }

    /// A Sylow `p`-subgroup by greedy growth inside successive normalizers.
    /// Returns the trivial group when `p` does not divide the order.
    pub fn sylow_subgroup_small(&self, p: u64, cap: usize) -> Result<PermGroup> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let order = self.order();
        let target = p_part(&order, p);
        if target.is_one() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let elems = self.elements(cap)?;
        let is_p_power = |x: &BigUint| p_part(x, p) == *x;
        let p_elements: Vec<&Permutation> = elems
            .iter()
            .filter(|g| !g.is_identity() && is_p_power(&g.order()))
            .collect();
        let top = p_elements
            .iter()
            .map(|g| g.order())
            .max()
            .expect("Cauchy: p divides the order");
        let start = p_elements
            .iter()
            .find(|g| g.order() == top)
            .expect("maximum is attained");
        let mut sylow = PermGroup::generated_by(self.degree, [*start]);
        while sylow.order() != target {
            let members: HashSet<Permutation> = sylow.elements(cap)?.into_iter().collect();
            let grow = p_elements.iter().find(|y| {
                !members.contains(**y)
                    && sylow
                        .generators()
                        .iter()
                        .all(|h| members.contains(&h.conjugate_by(y)))
            });
            let y = grow.expect("a p-subgroup that is not Sylow has a p-element in N(P)\\P");
            sylow = PermGroup::generated_by(self.degree, sylow.generators().iter().chain([*y]));
        }
        Ok(sylow)
    }

    pub(crate) fn require_subgroup(&self, sub: &PermGroup) -> Result<()> {
        if sub.degree != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: sub.degree,
            });
        }
        for (i, h) in sub.generators().iter().enumerate() {
            if !self.bsgs().contains(h) {
                return Err(Error::NotSubgroup(i));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alternating, cyclic, psl2, symmetric};

    fn perm(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn element_counts() {
        let a4 = alternating(4).unwrap();
        assert_eq!(a4.elements(1000).unwrap().len(), 12);
        let c6 = cyclic(6).unwrap();
        let els = c6.elements(1000).unwrap();
        assert_eq!(els.len(), 6);
        let set: HashSet<_> = els.iter().cloned().collect();
        assert_eq!(set.len(), 6);
        for a in &els {
            for b in &els {
                assert!(set.contains(&(a * b)));
            }
        }
        let a5 = alternating(5).unwrap();
        let els = a5.elements(1000).unwrap();
        assert_eq!(els.iter().collect::<HashSet<_>>().len(), 60);
        assert!(els.iter().all(|e| a5.contains(e).unwrap()));
    }

    #[test]
    fn element_cap_reports_order() {
        let a5 = alternating(5).unwrap();
        match a5.elements(59) {
            Err(Error::CapExceeded { bound, actual, .. }) => {
                assert_eq!(bound, 59);
                assert_eq!(actual, "60");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn normalizers() {
        let s4 = symmetric(4).unwrap();
        let c4 = PermGroup::new(4, vec![perm("(1,2,3,4)", 4)]).unwrap();
        assert_eq!(s4.normalizer_small(&c4, 1000).unwrap().order(), BigUint::from(8u32));
        let a5 = alternating(5).unwrap();
        let c5 = PermGroup::new(5, vec![perm("(1,2,3,4,5)", 5)]).unwrap();
        assert_eq!(a5.normalizer_small(&c5, 1000).unwrap().order(), BigUint::from(10u32));
        let a4 = alternating(4).unwrap();
        assert_eq!(s4.normalizer_small(&a4, 1000).unwrap().order(), BigUint::from(24u32));
    }

    #[test]
    fn sylow_subgroups() {
        let a5 = alternating(5).unwrap();
        assert_eq!(a5.sylow_subgroup_small(5, 1000).unwrap().order(), BigUint::from(5u32));
        assert_eq!(a5.sylow_subgroup_small(2, 1000).unwrap().order(), BigUint::from(4u32));
        assert!(a5.sylow_subgroup_small(7, 1000).unwrap().is_trivial());
        assert!(a5.sylow_subgroup_small(4, 1000).is_err());
        let l = psl2(7).unwrap();
        let p7 = l.sylow_subgroup_small(7, 1000).unwrap();
        assert_eq!(p7.order(), BigUint::from(7u32));
        assert_eq!(l.normalizer_small(&p7, 1000).unwrap().order(), BigUint::from(21u32));
        let s4 = symmetric(4).unwrap();
        assert_eq!(s4.sylow_subgroup_small(2, 1000).unwrap().order(), BigUint::from(8u32));
    }
}
