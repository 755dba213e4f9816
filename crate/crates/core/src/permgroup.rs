//! Permutations and permutation groups given by generators.
//!
//! Points are `0..n`. Composition follows the function convention
//! `(p ∘ q)(x) = p(q(x))`: the right-hand factor acts first.
//!
//! A [`PermGroup`] builds its stabilizer chain lazily with the deterministic
//! Schreier–Sims algorithm. Base points are chosen as the smallest point
//! moved by the first strong generator that fixes the current base, so the
//! chain depends only on the generator list.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::rng::SplitMix64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("image list is not a bijection of 0..{0}")]
    NotBijection(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("a permutation group needs at least one generator")]
    NoGenerators,
    #[error("degree must be positive")]
    ZeroDegree,
}

/// A bijection of `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2], &[3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= n || b >= n || touched[a] {
                    return Err(PermError::NotBijection(n));
                }
                touched[a] = true;
                images[a] = b;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked `self ∘ other`; degrees must agree.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Result<Permutation, PermError> {
        Ok(g.compose(self)?.mul(&g.inverse()))
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Disjoint cycles including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// Order as an element: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .lengths()
            .iter()
            .fold(1u64, |acc, &l| num_integer::lcm(acc, l as u64))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.images.serialize(s)
    }
}

/// Multiset of cycle lengths, stored in non-increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct CycleType {
    lengths: Vec<usize>,
}

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { lengths }
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn degree(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Parity of a permutation with this cycle type.
    pub fn is_even(&self) -> bool {
        self.lengths.iter().map(|l| l - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.lengths.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

#[derive(Debug, Clone)]
struct Level {
    base_point: usize,
    /// Indices into the strong generating set: the generators fixing all earlier base points.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// Schreier vector: `label[x] = s` means `x = strong[s](parent)`.
    label: Vec<u32>,
}

/// Base and strong generating set with Schreier-vector transversals.
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    strong: Vec<Permutation>,
    strong_inv: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabChain {
    fn build(degree: usize, generators: &[Permutation]) -> StabChain {
        let mut chain = StabChain {
            degree,
            strong: Vec::new(),
            strong_inv: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators {
            if g.is_identity() || chain.strong.contains(g) {
                continue;
            }
            chain.strong.push(g.clone());
            chain.strong_inv.push(g.inverse());
        }
        for s in 0..chain.strong.len() {
            let g = &chain.strong[s];
            if chain.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let b = g.first_moved_point().expect("identity filtered above");
                chain.push_level(b);
            }
        }
        for i in 0..chain.levels.len() {
            chain.levels[i].gens = chain.fixing_gens(i);
            chain.rebuild_orbit(i);
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            match chain.find_missing_schreier_generator(i as usize) {
                Some((y, j)) => {
                    let idx = chain.strong.len();
                    chain.strong_inv.push(y.inverse());
                    chain.strong.push(y);
                    if j == chain.levels.len() {
                        let b = chain.strong[idx]
                            .first_moved_point()
                            .expect("sifted residue is not the identity");
                        chain.push_level(b);
                    }
                    for l in (i as usize + 1)..=j {
                        chain.levels[l].gens.push(idx);
                        chain.rebuild_orbit(l);
                    }
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        chain
    }

    fn push_level(&mut self, base_point: usize) {
        self.levels.push(Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            label: Vec::new(),
        });
    }

    fn fixing_gens(&self, level: usize) -> Vec<usize> {
        (0..self.strong.len())
            .filter(|&s| {
                self.levels[..level]
                    .iter()
                    .all(|l| self.strong[s].apply(l.base_point) == l.base_point)
            })
            .collect()
    }

    fn rebuild_orbit(&mut self, level: usize) {
        let n = self.degree;
        let base = self.levels[level].base_point;
        let mut label = vec![NOT_IN_ORBIT; n];
        let mut orbit = vec![base];
        label[base] = ROOT;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &s in &self.levels[level].gens {
                let y = self.strong[s].apply(x);
                if label[y] == NOT_IN_ORBIT {
                    label[y] = s as u32;
                    orbit.push(y);
                }
            }
        }
        let l = &mut self.levels[level];
        l.orbit = orbit;
        l.label = label;
    }

    /// Explicit coset representative `u` with `u(base) = point`.
    fn transversal_element(&self, level: usize, point: usize) -> Permutation {
        let l = &self.levels[level];
        // The walk towards the root meets the last-applied generator first.
        let mut path = Vec::new();
        let mut x = point;
        while l.label[x] != ROOT {
            let s = l.label[x] as usize;
            path.push(s);
            x = self.strong_inv[s].apply(x);
        }
        let mut u = Permutation::identity(self.degree);
        for &s in path.iter().rev() {
            u = self.strong[s].mul(&u);
        }
        u
    }

    /// Replaces `g` by `u⁻¹ ∘ g` where `u` is the representative of `point`.
    fn strip_level(&self, level: usize, point: usize, mut g: Permutation) -> Permutation {
        let l = &self.levels[level];
        let mut x = point;
        while l.label[x] != ROOT {
            let s = l.label[x] as usize;
            g = self.strong_inv[s].mul(&g);
            x = self.strong_inv[s].apply(x);
        }
        g
    }

    /// Sifts `g` through the levels from `start`; returns the residue and the
    /// level where sifting stopped (`levels.len()` when it went all the way).
    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for level in start..self.levels.len() {
            let beta = g.apply(self.levels[level].base_point);
            if self.levels[level].label[beta] == NOT_IN_ORBIT {
                return (g, level);
            }
            g = self.strip_level(level, beta, g);
        }
        (g, self.levels.len())
    }

    fn find_missing_schreier_generator(&self, level: usize) -> Option<(Permutation, usize)> {
        let l = &self.levels[level];
        let reps: Vec<Permutation> = l
            .orbit
            .iter()
            .map(|&beta| self.transversal_element(level, beta))
            .collect();
        let mut rep_of = vec![usize::MAX; self.degree];
        for (k, &beta) in l.orbit.iter().enumerate() {
            rep_of[beta] = k;
        }
        for (k, &beta) in l.orbit.iter().enumerate() {
            for &s in &l.gens {
                let gamma = self.strong[s].apply(beta);
                let xu = self.strong[s].mul(&reps[k]);
                if xu == reps[rep_of[gamma]] {
                    continue;
                }
                let h = self.strip_level(level, gamma, xu);
                let (y, j) = self.strip(h, level + 1);
                if j < self.levels.len() || !y.is_identity() {
                    return Some((y, j));
                }
            }
        }
        None
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Basic orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, level) = self.strip(p.clone(), 0);
        level == self.levels.len() && residue.is_identity()
    }

    /// Visits every group element exactly once, as `u_0 ∘ u_1 ∘ … ∘ u_{k-1}`.
    pub fn for_each_element<F: FnMut(&Permutation)>(&self, mut visit: F) {
        let k = self.levels.len();
        if k == 0 {
            visit(&Permutation::identity(self.degree));
            return;
        }
        let reps: Vec<Vec<Permutation>> = (0..k)
            .map(|i| {
                self.levels[i]
                    .orbit
                    .iter()
                    .map(|&b| self.transversal_element(i, b))
                    .collect()
            })
            .collect();
        let mut idx = vec![0usize; k];
        let mut partial: Vec<Permutation> = Vec::with_capacity(k);
        partial.push(reps[0][0].clone());
        for i in 1..k {
            let next = partial[i - 1].mul(&reps[i][0]);
            partial.push(next);
        }
        loop {
            visit(&partial[k - 1]);
            // odometer: advance the deepest index that can move
            let mut i = k;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < reps[i].len() {
                    break;
                }
                idx[i] = 0;
            }
            for j in i..k {
                let rep = &reps[j][idx[j]];
                partial[j] = if j == 0 { rep.clone() } else { partial[j - 1].mul(rep) };
            }
        }
    }
}

/// A permutation group presented by generators.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(generators: Vec<Permutation>) -> Result<Self, PermError> {
        let first = generators.first().ok_or(PermError::NoGenerators)?;
        let degree = first.degree();
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                left: degree,
                right: bad.degree(),
            });
        }
        Ok(PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: vec![Permutation::identity(degree)],
            chain: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        let mut queue = VecDeque::from([point]);
        let mut orbit = Vec::new();
        seen[point] = true;
        while let Some(x) = queue.pop_front() {
            orbit.push(x);
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Largest `t` such that the group is transitive on ordered `t`-tuples of
    /// distinct points.
    ///
    /// Level `i` of the stabilizer chain is the pointwise stabilizer of the
    /// first `i` base points, so the group is `t`-transitive exactly when the
    /// first `t` basic orbits have lengths `n, n-1, …, n-t+1`.
    pub fn transitivity_degree(&self) -> usize {
        let n = self.degree;
        let lengths = self.chain().orbit_lengths();
        let mut t = 0;
        while t < lengths.len() && lengths[t] == n - t {
            t += 1;
        }
        // A trivial stabilizer of n-1 points is transitive on the last point.
        if t == lengths.len() && n - t <= 1 {
            t = n;
        }
        t
    }

    pub fn for_each_element<F: FnMut(&Permutation)>(&self, visit: F) {
        self.chain().for_each_element(visit)
    }

    /// One product-replacement sample for `seed`.
    pub fn random_element(&self, seed: u64) -> Permutation {
        ProductReplacement::new(self, seed).next_element()
    }

    pub fn sampler(&self, seed: u64) -> ProductReplacement {
        ProductReplacement::new(self, seed)
    }
}

/// Rattle-style product replacement: a pool of at least ten slots seeded
/// cyclically with the generators, an accumulator multiplied by the updated
/// slot at every step, and ten full mixing passes before the first sample.
#[derive(Debug, Clone)]
pub struct ProductReplacement {
    slots: Vec<Permutation>,
    accumulator: Permutation,
    rng: SplitMix64,
}

impl ProductReplacement {
    const MIN_SLOTS: usize = 10;
    const MIXING_PASSES: usize = 10;

    pub fn new(group: &PermGroup, seed: u64) -> Self {
        let gens = &group.generators;
        let len = Self::MIN_SLOTS.max(gens.len());
        let slots = (0..len).map(|i| gens[i % gens.len()].clone()).collect();
        let mut pr = ProductReplacement {
            slots,
            accumulator: Permutation::identity(group.degree),
            rng: SplitMix64::new(seed),
        };
        for _ in 0..Self::MIXING_PASSES * len {
            pr.step();
        }
        pr
    }

    fn step(&mut self) {
        let r = self.slots.len() as u64;
        let i = self.rng.below(r) as usize;
        let mut j = self.rng.below(r - 1) as usize;
        if j >= i {
            j += 1;
        }
        self.slots[i] = if self.rng.coin() {
            self.slots[i].mul(&self.slots[j])
        } else {
            self.slots[j].mul(&self.slots[i])
        };
        self.accumulator = self.accumulator.mul(&self.slots[i]);
    }

    pub fn next_element(&mut self) -> Permutation {
        self.step();
        self.accumulator.clone()
    }
}

impl Iterator for ProductReplacement {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        Some(self.next_element())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_convention() {
        let p = cyc(3, &[&[0, 1, 2]]);
        let q = cyc(3, &[&[0, 1]]);
        // p(q(0)) = p(1) = 2, p(q(1)) = p(0) = 1, p(q(2)) = p(2) = 0
        assert_eq!(p.compose(&q).unwrap().images(), vec![2, 1, 0]);
        // the other convention would give 0→1→?…: q(p(x)) = [0, 2, 1]
        assert_eq!(q.compose(&p).unwrap().images(), vec![0, 2, 1]);
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&p).unwrap(), p);
        assert!(q.compose(&q).unwrap().is_identity());
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, PermError::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn new_rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(5).cycle_type().lengths(), &[1, 1, 1, 1, 1]);
        let p = cyc(5, &[&[0, 1, 2], &[3, 4]]);
        assert_eq!(p.cycle_type().lengths(), &[3, 2]);
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
    }

    #[test]
    fn small_group_orders() {
        let s5 = PermGroup::new(vec![cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(s5.order(), 120);
        assert_eq!(s5.transitivity_degree(), 5);
        let a5 = PermGroup::new(vec![cyc(5, &[&[0, 1, 2]]), cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!a5.contains(&cyc(5, &[&[0, 1]])));
        assert!(a5.contains(&cyc(5, &[&[2, 3, 4]])));
        let c5 = PermGroup::new(vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(c5.transitivity_degree(), 1);
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(4);
        assert_eq!(g.order(), 1);
        assert_eq!(g.transitivity_degree(), 0);
        assert!(g.random_element(99).is_identity());
        let mut count = 0;
        g.for_each_element(|_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn element_enumeration_matches_order() {
        let s4 = PermGroup::new(vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        let mut seen = std::collections::HashSet::new();
        s4.for_each_element(|p| {
            seen.insert(p.clone());
        });
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn random_elements_are_members_and_seeded() {
        let s3 = PermGroup::new(vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]).unwrap();
        for seed in 0..20 {
            let g = s3.random_element(seed);
            assert!(s3.contains(&g));
            assert_eq!(g, s3.random_element(seed));
        }
    }
}
