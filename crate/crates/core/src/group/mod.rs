//! Permutation groups given by generators.

mod blocks;
mod bsgs;
mod small;
mod subgroups;

use std::sync::OnceLock;

use num_bigint::BigUint;

pub use blocks::BlockSystem;
pub use bsgs::{Bsgs, Level, SchreierVector};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A permutation group with a lazily computed BSGS.
///
/// Generators are normalized on construction: identities are dropped, and the
/// trivial group keeps a single identity generator.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    label: Option<String>,
    bsgs: OnceLock<Bsgs>,
}

/// An orbit with its Schreier vector over the group's generators.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub points: Vec<usize>,
    pub schreier: SchreierVector,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Element of `group` mapping the orbit root to `point`, rebuilt from the
    /// Schreier vector.
    pub fn transversal_element(&self, group: &PermGroup, point: usize) -> Option<Permutation> {
        let word = self.schreier.word(point)?;
        let mut u = Permutation::identity(group.degree());
        for g in word {
            u.mul_assign_right(&group.generators[g]);
        }
        Some(u)
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidParameter("degree must be at least 1".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        Ok(Self::normalized(degree, generators))
    }

    pub(crate) fn normalized(degree: usize, generators: Vec<Permutation>) -> Self {
        let mut gens: Vec<Permutation> = Vec::with_capacity(generators.len());
        for g in generators {
            if !g.is_identity() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(degree));
        }
        PermGroup {
            degree,
            generators: gens,
            label: None,
            bsgs: OnceLock::new(),
        }
    }

    pub(crate) fn with_bsgs(degree: usize, generators: Vec<Permutation>, bsgs: Bsgs) -> Self {
        let g = Self::normalized(degree, generators);
        let _ = g.bsgs.set(bsgs);
        g
    }

    pub fn trivial(degree: usize) -> Self {
        Self::normalized(degree, Vec::new())
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators[0].is_identity()
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs
            .get_or_init(|| Bsgs::build(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> BigUint {
        self.bsgs().order()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        self.check_degree(p)?;
        Ok(self.bsgs().contains(p))
    }

    /// True when every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool> {
        for g in &self.generators {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn orbit(&self, point: usize) -> Result<Orbit> {
        self.check_point(point)?;
        let gens: Vec<(usize, &Permutation)> = self.generators.iter().enumerate().collect();
        let (points, schreier) = SchreierVector::build(self.degree, point, &gens);
        Ok(Orbit { points, schreier })
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if seen[x] {
                continue;
            }
            let mut orb = self.orbit(x).expect("in range").points;
            for &y in &orb {
                seen[y] = true;
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).expect("degree >= 1").len() == self.degree
    }

    /// Points fixed by every generator.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree)
            .filter(|&x| self.generators.iter().all(|g| g.fixes(x)))
            .collect()
    }

    pub(crate) fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    pub(crate) fn check_degree(&self, p: &Permutation) -> Result<()> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("label", &self.label)
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}
