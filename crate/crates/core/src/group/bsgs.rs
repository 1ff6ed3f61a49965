//! Deterministic Schreier-Sims.

use num_bigint::BigUint;
use num_traits::One;

use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Entry {
    Outside,
    Root,
    Edge { generator: u32, predecessor: u32 },
}

/// Spanning tree of an orbit: each non-root point records the generator that
/// reached it and the point it was reached from.
#[derive(Clone, Debug)]
pub struct SchreierVector {
    root: usize,
    entries: Vec<Entry>,
}

impl SchreierVector {
    /// Breadth-first orbit of `root` under `gens`, given as `(id, generator)`
    /// pairs. Returns the orbit in discovery order.
    pub(crate) fn build(
        degree: usize,
        root: usize,
        gens: &[(usize, &Permutation)],
    ) -> (Vec<usize>, SchreierVector) {
        let mut entries = vec![Entry::Outside; degree];
        entries[root] = Entry::Root;
        let mut orbit = vec![root];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &(id, g) in gens {
                let y = g.image(x);
                if entries[y] == Entry::Outside {
                    entries[y] = Entry::Edge {
                        generator: id as u32,
                        predecessor: x as u32,
                    };
                    orbit.push(y);
                }
            }
        }
        (orbit, SchreierVector { root, entries })
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn contains(&self, x: usize) -> bool {
        self.entries[x] != Entry::Outside
    }

    /// `(generator id, predecessor)` for a non-root orbit point.
    pub fn edge(&self, x: usize) -> Option<(usize, usize)> {
        match self.entries[x] {
            Entry::Edge {
                generator,
                predecessor,
            } => Some((generator as usize, predecessor as usize)),
            _ => None,
        }
    }

    /// Generator ids along the tree path from the root to `x`, root end first.
    /// `None` if `x` is not in the orbit.
    pub fn word(&self, x: usize) -> Option<Vec<usize>> {
        if !self.contains(x) {
            return None;
        }
        let mut word = Vec::new();
        let mut y = x;
        while let Some((g, pred)) = self.edge(y) {
            word.push(g);
            y = pred;
        }
        word.reverse();
        Some(word)
    }
}

#[derive(Clone, Debug)]
pub struct Level {
    base_point: usize,
    /// Indices into the strong generators fixing every earlier base point.
    generators: Vec<usize>,
    orbit: Vec<usize>,
    schreier: SchreierVector,
}

impl Level {
    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Fundamental orbit in breadth-first discovery order.
    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    pub fn schreier_vector(&self) -> &SchreierVector {
        &self.schreier
    }
}

/// Base and strong generating set with per-level Schreier vectors.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    base: Vec<usize>,
    strong: Vec<Permutation>,
    strong_inv: Vec<Permutation>,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Coset representative at `level` mapping the base point to `point`.
    pub fn transversal_element(&self, level: usize, point: usize) -> Option<Permutation> {
        let word = self.levels[level].schreier.word(point)?;
        let mut u = Permutation::identity(self.degree);
        for g in word {
            u.mul_assign_right(&self.strong[g]);
        }
        Some(u)
    }

    /// All coset representatives of `level`, aligned with [`Level::orbit`].
    pub fn transversal(&self, level: usize) -> Vec<Permutation> {
        let lvl = &self.levels[level];
        let mut reps: Vec<Option<Permutation>> = vec![None; self.degree];
        reps[lvl.base_point] = Some(Permutation::identity(self.degree));
        // BFS order guarantees predecessors come first.
        for &x in &lvl.orbit {
            if let Some((g, pred)) = lvl.schreier.edge(x) {
                let u = reps[pred].as_ref().expect("predecessor visited").mul_unchecked(&self.strong[g]);
                reps[x] = Some(u);
            }
        }
        lvl.orbit
            .iter()
            .map(|&x| reps[x].take().expect("orbit point"))
            .collect()
    }

    /// Sifts `g` through the chain. Returns the residue and the level at which
    /// sifting stopped (`levels().len()` when it went all the way through).
    /// `g` is a member iff the residue is the identity at the last level.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g.clone(), 0)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, level) = self.sift(g);
        level == self.levels.len() && h.is_identity()
    }

    fn sift_from(&self, mut h: Permutation, start: usize) -> (Permutation, usize) {
        for (l, lvl) in self.levels.iter().enumerate().skip(start) {
            let mut y = h.image(lvl.base_point);
            if !lvl.schreier.contains(y) {
                return (h, l);
            }
            while let Some((g, pred)) = lvl.schreier.edge(y) {
                h.mul_assign_right(&self.strong_inv[g]);
                y = pred;
            }
        }
        (h, self.levels.len())
    }

    fn build_level(&self, l: usize) -> Level {
        let prefix = &self.base[..l];
        let generators: Vec<usize> = (0..self.strong.len())
            .filter(|&i| prefix.iter().all(|&b| self.strong[i].fixes(b)))
            .collect();
        let gens: Vec<(usize, &Permutation)> =
            generators.iter().map(|&i| (i, &self.strong[i])).collect();
        let (orbit, schreier) = SchreierVector::build(self.degree, self.base[l], &gens);
        Level {
            base_point: self.base[l],
            generators,
            orbit,
            schreier,
        }
    }

    fn push_strong(&mut self, g: Permutation) {
        self.strong_inv.push(g.inverse());
        self.strong.push(g);
    }

    /// First Schreier generator at level `l` that does not sift through the
    /// levels below, with the level where its sift stopped.
    fn schreier_residue(&self, l: usize) -> Option<(Permutation, usize)> {
        let lvl = &self.levels[l];
        for &delta in &lvl.orbit {
            let u = self
                .transversal_element(l, delta)
                .expect("orbit point has a transversal element");
            for &s in &lvl.generators {
                let gamma = self.strong[s].image(delta);
                if lvl.schreier.edge(gamma) == Some((s, delta)) {
                    continue;
                }
                let (h, j) = self.sift_from(u.mul_unchecked(&self.strong[s]), l);
                if !h.is_identity() {
                    return Some((h, j));
                }
            }
        }
        None
    }

    /// Classical deterministic Schreier-Sims. The base starts with
    /// `base_prefix` and is extended by smallest moved points.
    pub(crate) fn build(degree: usize, gens: &[Permutation], base_prefix: &[usize]) -> Bsgs {
        let mut b = Bsgs {
            degree,
            base: base_prefix.to_vec(),
            strong: Vec::new(),
            strong_inv: Vec::new(),
            levels: Vec::new(),
        };
        for g in gens {
            if !g.is_identity() && !b.strong.contains(g) {
                b.push_strong(g.clone());
            }
        }
        for i in 0..b.strong.len() {
            if b.base.iter().all(|&x| b.strong[i].fixes(x)) {
                let x = b.strong[i].smallest_moved_point().expect("non-identity");
                b.base.push(x);
            }
        }
        b.levels = (0..b.base.len()).map(|l| b.build_level(l)).collect();

        let mut i = b.levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            b.levels[l] = b.build_level(l);
            match b.schreier_residue(l) {
                Some((h, j)) => {
                    if j == b.levels.len() {
                        let x = h.smallest_moved_point().expect("non-identity residue");
                        b.base.push(x);
                        b.push_strong(h);
                        b.levels.push(b.build_level(j));
                    } else {
                        b.push_strong(h);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        b.trim_trivial_tail();
        b
    }

    /// Drops forced base points whose fundamental orbit is trivial and that
    /// no generator of any level moves; keeps the forced first point.
    fn trim_trivial_tail(&mut self) {
        while self.levels.len() > 1 && self.levels.last().is_some_and(|l| l.orbit.len() == 1) {
            self.levels.pop();
            self.base.pop();
        }
    }

    /// Chain for the stabilizer of the first base point.
    pub(crate) fn stabilizer_tail(&self) -> Bsgs {
        if self.levels.len() <= 1 {
            return Bsgs {
                degree: self.degree,
                base: Vec::new(),
                strong: Vec::new(),
                strong_inv: Vec::new(),
                levels: Vec::new(),
            };
        }
        let keep = &self.levels[1].generators;
        let mut remap = vec![usize::MAX; self.strong.len()];
        for (new, &old) in keep.iter().enumerate() {
            remap[old] = new;
        }
        let levels = self.levels[1..]
            .iter()
            .map(|lvl| {
                let generators = lvl.generators.iter().map(|&g| remap[g]).collect();
                let mut schreier = lvl.schreier.clone();
                for e in schreier.entries.iter_mut() {
                    if let Entry::Edge { generator, .. } = e {
                        *generator = remap[*generator as usize] as u32;
                    }
                }
                Level {
                    base_point: lvl.base_point,
                    generators,
                    orbit: lvl.orbit.clone(),
                    schreier,
                }
            })
            .collect();
        Bsgs {
            degree: self.degree,
            base: self.base[1..].to_vec(),
            strong: keep.iter().map(|&g| self.strong[g].clone()).collect(),
            strong_inv: keep.iter().map(|&g| self.strong_inv[g].clone()).collect(),
            levels,
        }
    }
}
