//! Group modules over `F_ℓ` given by generator images: permutation modules,
//! the sum-zero hyperplane, the heart, endomorphism algebras, the MeatAxe
//! irreducibility test and an idempotent search for indecomposability.
//!
//! Vectors are rows and a generator acts by `v ↦ v·A`.

use serde::Serialize;
use thiserror::Error;

use crate::modlinalg::{spin, LinalgError, ModMatrix, Subspace, Vector};
use crate::permgroup::PermGroup;
use crate::polyfp::PolyFp;
use crate::rng::SplitMix64;

/// MeatAxe attempts before giving up.
pub const MEATAXE_ATTEMPTS: usize = 200;

/// Largest endomorphism dimension for which idempotents are enumerated.
pub const IDEMPOTENT_SEARCH_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("generator image {0} is not a square matrix of the module dimension")]
    BadShape(usize),
    #[error("generator image {0} is singular")]
    Singular(usize),
    #[error("subspace is not invariant under the generators")]
    NotInvariant,
    #[error("heart needs degree at least 3, got {0}")]
    DegreeTooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Permutation,
    SumZero,
    Heart,
    Submodule,
    Quotient,
    DirectSum,
    Explicit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GModuleRep {
    dim: usize,
    modulus: u32,
    generators: Vec<ModMatrix>,
    provenance: Provenance,
}

impl GModuleRep {
    pub fn new(
        dim: usize,
        modulus: u32,
        generators: Vec<ModMatrix>,
        provenance: Provenance,
    ) -> Result<GModuleRep, RepError> {
        ModMatrix::zeros(0, 0, modulus)?;
        for (i, a) in generators.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim || a.modulus() != modulus {
                return Err(RepError::BadShape(i));
            }
            if a.rank() != dim {
                return Err(RepError::Singular(i));
            }
        }
        Ok(GModuleRep {
            dim,
            modulus,
            generators,
            provenance,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn generators(&self) -> &[ModMatrix] {
        &self.generators
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `dim`-dimensional module on which `count` generators act trivially.
    pub fn trivial(dim: usize, modulus: u32, count: usize) -> Result<GModuleRep, RepError> {
        let id = ModMatrix::identity(dim, modulus)?;
        GModuleRep::new(dim, modulus, vec![id; count], Provenance::Explicit)
    }

    /// Block-diagonal sum; both modules must have the same number of generators.
    pub fn direct_sum(&self, other: &GModuleRep) -> Result<GModuleRep, RepError> {
        if self.generators.len() != other.generators.len() || self.modulus != other.modulus {
            return Err(RepError::BadShape(0));
        }
        let d = self.dim + other.dim;
        let gens = self
            .generators
            .iter()
            .zip(&other.generators)
            .map(|(a, b)| {
                let mut m = ModMatrix::zeros(d, d, self.modulus)?;
                for i in 0..self.dim {
                    for j in a.row(i).support() {
                        m.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..other.dim {
                    for j in b.row(i).support() {
                        m.set(self.dim + i, self.dim + j, b.get(i, j));
                    }
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>, RepError>>()?;
        GModuleRep::new(d, self.modulus, gens, Provenance::DirectSum)
    }

    /// Action on an invariant subspace, in the coordinates of its echelon basis.
    pub fn submodule(&self, w: &Subspace) -> Result<GModuleRep, RepError> {
        self.submodule_tagged(w, Provenance::Submodule)
    }

    fn submodule_tagged(&self, w: &Subspace, tag: Provenance) -> Result<GModuleRep, RepError> {
        let gens = self
            .generators
            .iter()
            .map(|a| {
                let rows = w
                    .basis()
                    .iter()
                    .map(|b| w.coordinates(&b.mul_matrix(a)).ok_or(RepError::NotInvariant))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ModMatrix::from_vectors(rows, w.dim(), self.modulus)?)
            })
            .collect::<Result<Vec<_>, RepError>>()?;
        GModuleRep::new(w.dim(), self.modulus, gens, tag)
    }

    /// Action on `V/W`, with the standard basis vectors on the non-pivot
    /// columns of `W` as coset representatives.
    pub fn quotient(&self, w: &Subspace) -> Result<GModuleRep, RepError> {
        self.quotient_tagged(w, Provenance::Quotient)
    }

    fn quotient_tagged(&self, w: &Subspace, tag: Provenance) -> Result<GModuleRep, RepError> {
        if !w.is_invariant_under(&self.generators) {
            return Err(RepError::NotInvariant);
        }
        let cols = w.complement_columns();
        let gens = self
            .generators
            .iter()
            .map(|a| {
                let rows = cols
                    .iter()
                    .map(|&c| {
                        let image = w.reduce(a.row(c));
                        let mut v = Vector::zeros(cols.len(), self.modulus);
                        for (k, &cc) in cols.iter().enumerate() {
                            v.set(k, image.get(cc));
                        }
                        v
                    })
                    .collect();
                Ok(ModMatrix::from_vectors(rows, cols.len(), self.modulus)?)
            })
            .collect::<Result<Vec<_>, RepError>>()?;
        GModuleRep::new(cols.len(), self.modulus, gens, tag)
    }

    /// Does every generator image commute with `x`?
    pub fn commutes_with(&self, x: &ModMatrix) -> bool {
        self.generators
            .iter()
            .all(|a| x.mul(a).ok() == a.mul(x).ok())
    }
}

/// `F_ℓ^n` with generators acting as permutation matrices, `e_i·P = e_{π(i)}`.
pub fn permutation_module(group: &PermGroup, modulus: u32) -> Result<GModuleRep, RepError> {
    let gens = group
        .generators()
        .iter()
        .map(|g| ModMatrix::permutation(&g.images(), modulus))
        .collect::<Result<Vec<_>, _>>()?;
    GModuleRep::new(group.degree(), modulus, gens, Provenance::Permutation)
}

/// The sum-zero hyperplane of `F_ℓ^n`.
pub fn sum_zero_subspace(n: usize, modulus: u32) -> Subspace {
    let vectors = (0..n.saturating_sub(1)).map(|i| {
        let mut v = Vector::unit(n, i, modulus);
        v.set(n - 1, modulus - 1);
        v
    });
    Subspace::from_vectors(n, modulus, vectors).expect("vectors live in the ambient space")
}

/// Constant functions.
pub fn constants_line(n: usize, modulus: u32) -> Subspace {
    let ones = Vector::from_entries(&vec![1; n], modulus).expect("entries are in range");
    Subspace::from_vectors(n, modulus, [ones]).expect("vector lives in the ambient space")
}

pub fn sum_zero_module(group: &PermGroup, modulus: u32) -> Result<GModuleRep, RepError> {
    let perm = permutation_module(group, modulus)?;
    perm.submodule_tagged(&sum_zero_subspace(group.degree(), modulus), Provenance::SumZero)
}

/// The heart over `F_2`: the sum-zero module for odd degree, its quotient by
/// the constants for even degree.
pub fn heart(group: &PermGroup) -> Result<GModuleRep, RepError> {
    let n = group.degree();
    if n < 3 {
        return Err(RepError::DegreeTooSmall(n));
    }
    let sum_zero = sum_zero_module(group, 2)?;
    if n % 2 == 1 {
        return Ok(GModuleRep {
            provenance: Provenance::Heart,
            ..sum_zero
        });
    }
    // the all-ones vector in the echelon coordinates of the sum-zero space
    let ones = Vector::from_entries(&vec![1; n - 1], 2)?;
    let line = Subspace::from_vectors(n - 1, 2, [ones])?;
    sum_zero.quotient_tagged(&line, Provenance::Heart)
}

/// A basis of `End_G(V)`: matrices commuting with every generator image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoAlgebra {
    dim: usize,
    modulus: u32,
    basis: Vec<ModMatrix>,
}

impl EndoAlgebra {
    /// Canonical basis: reduced echelon form of the row-major flattenings.
    fn from_matrices(dim: usize, modulus: u32, matrices: Vec<ModMatrix>) -> EndoAlgebra {
        let space = Subspace::from_vectors(dim * dim, modulus, matrices.iter().map(ModMatrix::flatten))
            .expect("flattened matrices live in the ambient space");
        EndoAlgebra::from_subspace(dim, &space)
    }

    fn from_subspace(dim: usize, space: &Subspace) -> EndoAlgebra {
        EndoAlgebra {
            dim,
            modulus: space.modulus(),
            basis: space
                .basis()
                .iter()
                .map(|v| ModMatrix::unflatten(v, dim, dim))
                .collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ModMatrix] {
        &self.basis
    }

    pub fn module_dim(&self) -> usize {
        self.dim
    }

    pub fn contains(&self, x: &ModMatrix) -> bool {
        let space = Subspace::from_vectors(
            self.dim * self.dim,
            self.modulus,
            self.basis.iter().map(ModMatrix::flatten),
        )
        .expect("flattened matrices live in the ambient space");
        x.rows() == self.dim && x.cols() == self.dim && space.contains(&x.flatten())
    }

    pub fn contains_identity(&self) -> bool {
        ModMatrix::identity(self.dim, self.modulus)
            .map(|id| self.contains(&id))
            .unwrap_or(false)
    }
}

/// Endomorphism algebra through a spanning tree of images of seed vectors.
///
/// A standard basis `b_j = s_r·A_{i1}⋯A_{ik}` is spun from unit seeds; an
/// endomorphism is fixed by the images `U_r` of the seeds, with `b_j·X = U_r·L_j`
/// for the path product `L_j`. Each non-tree step `b_j·A_i = Σ c_k b_k`
/// contributes the linear condition `Σ c_k U_{r(k)} L_k = U_{r(j)} L_j A_i`.
pub fn endomorphism_algebra(rep: &GModuleRep) -> EndoAlgebra {
    let (d, l) = (rep.dim, rep.modulus);
    if d == 0 {
        return EndoAlgebra {
            dim: 0,
            modulus: l,
            basis: Vec::new(),
        };
    }
    let gens = &rep.generators;

    struct Node {
        vector: Vector,
        root: usize,
        path: ModMatrix,
    }
    let identity = ModMatrix::identity(d, l).expect("modulus already validated");
    let mut nodes: Vec<Node> = Vec::with_capacity(d);
    let mut span = Subspace::zero(d, l);
    let mut roots = 0;
    let mut tree_edges = std::collections::HashSet::new();
    for seed in 0..d {
        let e = Vector::unit(d, seed, l);
        if !span.insert(e.clone()) {
            continue;
        }
        nodes.push(Node {
            vector: e,
            root: roots,
            path: identity.clone(),
        });
        roots += 1;
        let mut next = nodes.len() - 1;
        while next < nodes.len() {
            for (i, a) in gens.iter().enumerate() {
                let image = nodes[next].vector.mul_matrix(a);
                if span.insert(image.clone()) {
                    let path = nodes[next].path.mul(a).expect("square matrices of equal size");
                    tree_edges.insert((next, i));
                    let root = nodes[next].root;
                    nodes.push(Node {
                        vector: image,
                        root,
                        path,
                    });
                }
            }
            next += 1;
        }
        if nodes.len() == d {
            break;
        }
    }

    let basis = ModMatrix::from_vectors(nodes.iter().map(|n| n.vector.clone()).collect(), d, l)
        .expect("basis rows have the module dimension");
    let basis_inv = basis.inverse().expect("spun vectors form a basis");

    // coefficient matrix: rows are the unknowns (root r, coordinate t), columns the equations
    let unknowns = roots * d;
    let mut blocks: Vec<ModMatrix> = Vec::new();
    for (j, node) in nodes.iter().enumerate() {
        for (i, a) in gens.iter().enumerate() {
            if tree_edges.contains(&(j, i)) {
                continue;
            }
            let coords = node.vector.mul_matrix(a).mul_matrix(&basis_inv);
            let mut rows = vec![Vector::zeros(d, l); unknowns];
            for k in coords.support() {
                let c = coords.get(k);
                let r = nodes[k].root;
                for t in 0..d {
                    rows[r * d + t].axpy(c, nodes[k].path.row(t));
                }
            }
            let lhs = node.path.mul(a).expect("square matrices of equal size");
            for t in 0..d {
                rows[node.root * d + t].axpy(l - 1, lhs.row(t));
            }
            blocks.push(ModMatrix::from_vectors(rows, d, l).expect("block rows have width d"));
        }
    }
    let width = blocks.len() * d;
    let system_rows = (0..unknowns)
        .map(|u| {
            let mut row = Vector::zeros(width, l);
            for (b, block) in blocks.iter().enumerate() {
                for t in block.row(u).support() {
                    row.set(b * d + t, block.get(u, t));
                }
            }
            row
        })
        .collect();
    let system = ModMatrix::from_vectors(system_rows, width, l).expect("rows have the system width");
    let solutions = system.left_kernel();

    let matrices = solutions
        .basis()
        .iter()
        .map(|u| {
            let images = nodes
                .iter()
                .map(|node| {
                    let mut ur = Vector::zeros(d, l);
                    for t in 0..d {
                        ur.set(t, u.get(node.root * d + t));
                    }
                    ur.mul_matrix(&node.path)
                })
                .collect();
            let y = ModMatrix::from_vectors(images, d, l).expect("image rows have width d");
            basis_inv.mul(&y).expect("square matrices of equal size")
        })
        .collect();
    EndoAlgebra::from_matrices(d, l, matrices)
}

/// Endomorphism algebra as the kernel of the full commutation system
/// `X·A_i − A_i·X = 0` in `d²` unknowns.
pub fn commutant_direct(rep: &GModuleRep) -> EndoAlgebra {
    let (d, l) = (rep.dim, rep.modulus);
    let mut rows = Vec::with_capacity(rep.generators.len() * d * d);
    for a in &rep.generators {
        for r in 0..d {
            for c in 0..d {
                // coefficient of X[u][v] in (XA − AX)[r][c]
                let mut row = Vector::zeros(d * d, l);
                for v in 0..d {
                    let x = a.get(v, c);
                    if x != 0 {
                        row.set(r * d + v, x);
                    }
                }
                for u in 0..d {
                    let x = a.get(r, u);
                    if x != 0 {
                        let idx = u * d + c;
                        row.set(idx, (row.get(idx) + l - x) % l);
                    }
                }
                rows.push(row);
            }
        }
    }
    let system = ModMatrix::from_vectors(rows, d * d, l).expect("rows have width d²");
    EndoAlgebra::from_subspace(d, &system.kernel())
}

/// Characteristic polynomial `det(xI − M)` by reduction to Hessenberg form.
pub fn char_poly(m: &ModMatrix) -> PolyFp {
    assert!(m.is_square());
    let n = m.rows();
    let p = m.modulus() as u64;
    let mut h: Vec<Vec<u64>> = m.to_rows().into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect();
    let inv = |a: u64| crate::modlinalg::inv_mod(a as u32, p as u32) as u64;
    for col in 0..n.saturating_sub(2) {
        let Some(i) = (col + 1..n).find(|&i| h[i][col] != 0) else {
            continue;
        };
        if i != col + 1 {
            h.swap(i, col + 1);
            for row in h.iter_mut() {
                row.swap(i, col + 1);
            }
        }
        let t_inv = inv(h[col + 1][col]);
        for j in col + 2..n {
            let u = h[j][col] * t_inv % p;
            if u == 0 {
                continue;
            }
            let pivot_row = h[col + 1].clone();
            // row_j -= u·row_{col+1}
            for (x, &y) in h[j].iter_mut().zip(&pivot_row) {
                *x = (*x + p - u * y % p) % p;
            }
            // col_{col+1} += u·col_j
            for row in h.iter_mut() {
                row[col + 1] = (row[col + 1] + u * row[j]) % p;
            }
        }
    }
    let mut polys: Vec<PolyFp> = vec![PolyFp::one(p)];
    for k in 1..=n {
        let linear = PolyFp::new(vec![(p - h[k - 1][k - 1]) % p, 1], p);
        let mut pk = linear.mul(&polys[k - 1]);
        let mut t = 1u64;
        for i in 1..k {
            t = t * h[k - i][k - i - 1] % p;
            let c = t * h[k - i - 1][k - 1] % p;
            if c != 0 {
                pk = pk.sub(&polys[k - i - 1].scale(c));
            }
        }
        polys.push(pk);
    }
    polys.pop().expect("at least the constant polynomial")
}

/// `f(M)` by Horner's rule.
pub fn eval_poly_matrix(f: &PolyFp, m: &ModMatrix) -> ModMatrix {
    let n = m.rows();
    let l = m.modulus();
    let id = ModMatrix::identity(n, l).expect("modulus already validated");
    let mut acc = ModMatrix::zeros(n, n, l).expect("modulus already validated");
    for &c in f.coeffs().iter().rev() {
        acc = acc.mul(m).expect("square").axpy(c as u32, &id).expect("same shape");
    }
    acc
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    /// A proper nonzero invariant subspace, checked exactly.
    Reducible { witness: Subspace },
    Inconclusive { attempts: usize },
}

impl Irreducibility {
    pub fn is_conclusive(&self) -> bool {
        !matches!(self, Irreducibility::Inconclusive { .. })
    }
}

struct AlgebraSampler<'a> {
    gens: &'a [ModMatrix],
    inverses: Vec<ModMatrix>,
    modulus: u32,
    rng: SplitMix64,
}

impl AlgebraSampler<'_> {
    fn word(&mut self, max_len: u64) -> ModMatrix {
        let len = 1 + self.rng.below(max_len) as usize;
        let mut w = self.gens[self.rng.below(self.gens.len() as u64) as usize].clone();
        for _ in 1..len {
            let g = &self.gens[self.rng.below(self.gens.len() as u64) as usize];
            w = w.mul(g).expect("square");
        }
        w
    }

    fn coefficient(&mut self) -> u32 {
        1 + self.rng.below(self.modulus as u64 - 1) as u32
    }

    /// Random combination of short words, plus sometimes a conjugated generator.
    fn next(&mut self) -> ModMatrix {
        let terms = 1 + self.rng.below(3);
        let mut theta = self.word(4).scaled(self.coefficient());
        for _ in 1..terms {
            let c = self.coefficient();
            let w = self.word(4);
            theta = theta.axpy(c, &w).expect("same shape");
        }
        if self.rng.coin() {
            let k = self.rng.below(self.gens.len() as u64) as usize;
            let j = self.rng.below(self.gens.len() as u64) as usize;
            let conj = self.gens[k]
                .mul(&self.gens[j])
                .and_then(|x| x.mul(&self.inverses[k]))
                .expect("square");
            let c = self.coefficient();
            theta = theta.axpy(c, &conj).expect("same shape");
        }
        theta
    }
}

/// MeatAxe: decides irreducibility with Norton's criterion, deterministic in `seed`.
pub fn is_irreducible(rep: &GModuleRep, seed: u64) -> Irreducibility {
    let d = rep.dim;
    if d <= 1 {
        return Irreducibility::Irreducible;
    }
    let gens = &rep.generators;
    if gens.is_empty() {
        let witness = Subspace::from_vectors(d, rep.modulus, [Vector::unit(d, 0, rep.modulus)])
            .expect("unit vector lives in the ambient space");
        return Irreducibility::Reducible { witness };
    }
    let transposes: Vec<ModMatrix> = gens.iter().map(ModMatrix::transpose).collect();
    let mut sampler = AlgebraSampler {
        gens,
        inverses: gens.iter().map(|a| a.inverse().expect("generators are invertible")).collect(),
        modulus: rep.modulus,
        rng: SplitMix64::new(seed),
    };
    for attempt in 0..MEATAXE_ATTEMPTS {
        let theta = sampler.next();
        let cp = char_poly(&theta);
        for (f, _) in cp.factor(seed ^ attempt as u64) {
            let deg = f.degree().unwrap_or(0);
            let n = eval_poly_matrix(&f, &theta);
            let kernel = n.left_kernel();
            for v in kernel.basis().iter().take(3) {
                let s = spin(std::slice::from_ref(v), gens).expect("shapes agree");
                if s.dim() < d {
                    return Irreducibility::Reducible { witness: s };
                }
            }
            if kernel.dim() != deg {
                continue;
            }
            let dual_kernel = n.kernel();
            let w = &dual_kernel.basis()[0];
            let s = spin(std::slice::from_ref(w), &transposes).expect("shapes agree");
            if s.dim() < d {
                let witness = s.annihilator();
                if witness.dim() > 0 && witness.is_invariant_under(gens) {
                    return Irreducibility::Reducible { witness };
                }
                continue;
            }
            return Irreducibility::Irreducible;
        }
    }
    Irreducibility::Inconclusive {
        attempts: MEATAXE_ATTEMPTS,
    }
}

/// Irreducible with only scalar endomorphisms; `None` when the MeatAxe gave up.
pub fn is_absolutely_irreducible(rep: &GModuleRep, seed: u64) -> Option<bool> {
    match is_irreducible(rep, seed) {
        Irreducibility::Irreducible => Some(endomorphism_algebra(rep).dimension() == 1),
        Irreducibility::Reducible { .. } => Some(false),
        Irreducibility::Inconclusive { .. } => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposability {
    Indecomposable,
    /// A nontrivial idempotent endomorphism; `image ⊕ kernel` is the whole space.
    Decomposable {
        idempotent: ModMatrix,
        image: Subspace,
        kernel: Subspace,
    },
    Inconclusive { endo_dimension: usize },
}

impl Decomposability {
    pub fn is_conclusive(&self) -> bool {
        !matches!(self, Decomposability::Inconclusive { .. })
    }
}

/// Searches the whole endomorphism algebra for a nontrivial idempotent.
pub fn is_indecomposable(rep: &GModuleRep) -> Decomposability {
    indecomposable_in(rep, &endomorphism_algebra(rep))
}

pub fn indecomposable_in(rep: &GModuleRep, endo: &EndoAlgebra) -> Decomposability {
    let (d, l) = (rep.dim, rep.modulus);
    let k = endo.dimension();
    let size = (l as f64).powi(k as i32);
    if size > (1u64 << IDEMPOTENT_SEARCH_CAP) as f64 {
        return Decomposability::Inconclusive { endo_dimension: k };
    }
    let id = ModMatrix::identity(d, l).expect("modulus already validated");
    let mut x = ModMatrix::zeros(d, d, l).expect("modulus already validated");
    let mut digits = vec![0u32; k];
    loop {
        // odometer step: adding E_i either bumps digit i or wraps it to zero
        let mut i = 0;
        while i < k {
            x = x.add(&endo.basis[i]).expect("same shape");
            digits[i] = (digits[i] + 1) % l;
            if digits[i] != 0 {
                break;
            }
            i += 1;
        }
        if i == k {
            return Decomposability::Indecomposable;
        }
        if x.is_zero() || x == id {
            continue;
        }
        if x.mul(&x).expect("square") == x {
            let image = x.row_space();
            let kernel = x.left_kernel();
            return Decomposability::Decomposable {
                idempotent: x,
                image,
                kernel,
            };
        }
    }
}

/// Exact check that `a` and `b` are invariant, meet trivially and span `F_ℓ^d`.
pub fn is_invariant_decomposition(rep: &GModuleRep, a: &Subspace, b: &Subspace) -> bool {
    let sum = Subspace::from_vectors(
        rep.dim,
        rep.modulus,
        a.basis().iter().chain(b.basis()).cloned(),
    );
    a.dim() > 0
        && b.dim() > 0
        && a.dim() + b.dim() == rep.dim
        && sum.map(|s| s.dim() == rep.dim).unwrap_or(false)
        && a.is_invariant_under(&rep.generators)
        && b.is_invariant_under(&rep.generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupzoo::{alternating, cyclic, mathieu, symmetric};

    fn m(rows: &[Vec<u32>], l: u32) -> ModMatrix {
        ModMatrix::from_rows(rows, l).unwrap()
    }

    #[test]
    fn permutation_module_of_s3() {
        let g = symmetric(3).unwrap();
        let rep = permutation_module(&g, 2).unwrap();
        assert_eq!(rep.dim(), 3);
        assert_eq!(rep.generators()[0], m(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]], 2));
        let ones = constants_line(3, 2);
        assert!(ones.is_invariant_under(rep.generators()));
    }

    #[test]
    fn heart_dimensions() {
        for n in 3..10 {
            let h = heart(&symmetric(n).unwrap()).unwrap();
            assert_eq!(h.dim(), if n % 2 == 1 { n - 1 } else { n - 2 });
            assert_eq!(h.provenance(), Provenance::Heart);
        }
        assert!(heart(&symmetric(2).unwrap()).is_err());
    }

    #[test]
    fn sum_zero_is_invariant_for_m11() {
        let rep = permutation_module(&mathieu(11).unwrap(), 2).unwrap();
        assert!(sum_zero_subspace(11, 2).is_invariant_under(rep.generators()));
    }

    #[test]
    fn trivial_action_has_full_commutant() {
        let rep = GModuleRep::trivial(3, 2, 1).unwrap();
        assert_eq!(endomorphism_algebra(&rep).dimension(), 9);
        assert_eq!(commutant_direct(&rep).dimension(), 9);
        let none = GModuleRep::new(3, 2, Vec::new(), Provenance::Explicit).unwrap();
        assert_eq!(endomorphism_algebra(&none).dimension(), 9);
    }

    #[test]
    fn routes_agree_on_small_groups() {
        for g in [symmetric(5), alternating(6), cyclic(7), cyclic(6), mathieu(11)] {
            let g = g.unwrap();
            for rep in [heart(&g).unwrap(), permutation_module(&g, 2).unwrap(), permutation_module(&g, 3).unwrap()] {
                let fast = endomorphism_algebra(&rep);
                let direct = commutant_direct(&rep);
                assert_eq!(fast, direct);
                assert!(fast.contains_identity());
                assert!(fast.basis().iter().all(|x| rep.commutes_with(x)));
            }
        }
    }

    #[test]
    fn cayley_hamilton() {
        let mut rng = SplitMix64::new(5);
        for l in [2u32, 3, 7] {
            for n in 1..9 {
                let rows: Vec<Vec<u32>> = (0..n)
                    .map(|_| (0..n).map(|_| rng.below(l as u64) as u32).collect())
                    .collect();
                let a = m(&rows, l);
                let cp = char_poly(&a);
                assert_eq!(cp.degree(), Some(n));
                assert_eq!(cp.lead(), 1);
                assert!(eval_poly_matrix(&cp, &a).is_zero());
            }
        }
        let a = m(&[vec![1, 2], vec![3, 4]], 7);
        // x² − 5x − 2
        assert_eq!(char_poly(&a), PolyFp::new(vec![5, 2, 1], 7));
    }

    #[test]
    fn meataxe_small_cases() {
        assert_eq!(is_irreducible(&heart(&symmetric(5).unwrap()).unwrap(), 0), Irreducibility::Irreducible);
        let perm = permutation_module(&symmetric(5).unwrap(), 2).unwrap();
        match is_irreducible(&perm, 0) {
            Irreducibility::Reducible { witness } => {
                assert!(witness.dim() > 0 && witness.dim() < 5);
                assert!(witness.is_invariant_under(perm.generators()));
            }
            other => panic!("expected reducible, got {other:?}"),
        }
        // heart of C_7 over F_2 splits as 3 + 3
        let c7 = heart(&cyclic(7).unwrap()).unwrap();
        assert!(matches!(is_irreducible(&c7, 1), Irreducibility::Reducible { .. }));
    }

    #[test]
    fn trivial_direct_sum_decomposes() {
        let rep = GModuleRep::trivial(1, 2, 1).unwrap();
        let sum = rep.direct_sum(&rep).unwrap();
        match is_indecomposable(&sum) {
            Decomposability::Decomposable { idempotent, image, kernel } => {
                assert_eq!(idempotent, m(&[vec![1, 0], vec![0, 0]], 2));
                assert!(is_invariant_decomposition(&sum, &image, &kernel));
            }
            other => panic!("expected decomposable, got {other:?}"),
        }
        assert_eq!(is_indecomposable(&heart(&mathieu(11).unwrap()).unwrap()), Decomposability::Indecomposable);
    }

    #[test]
    fn quotient_and_submodule_shapes() {
        let perm = permutation_module(&symmetric(4).unwrap(), 2).unwrap();
        let q = perm.quotient(&constants_line(4, 2)).unwrap();
        assert_eq!(q.dim(), 3);
        assert!(perm.quotient(&Subspace::from_vectors(4, 2, [Vector::unit(4, 0, 2)]).unwrap()).is_err());
        let s = perm.submodule(&sum_zero_subspace(4, 2)).unwrap();
        assert_eq!(s.dim(), 3);
    }
}
