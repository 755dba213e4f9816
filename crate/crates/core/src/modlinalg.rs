//! Dense linear algebra over prime fields `F_ℓ` with `ℓ ≤ 257`.
//!
//! Rows over `F_2` are packed into 64-bit words and eliminated with word-level
//! XOR; odd `ℓ` uses one `u16` per entry behind the same API. Vectors are rows
//! and matrices act on the right: `v ↦ v·A`.
//!
//! Every echelon form produced here is fully reduced (pivots equal to one,
//! zeros above and below), so two [`Subspace`]s are equal exactly when their
//! stored bases are.

use std::fmt;

use thiserror::Error;

use crate::finitefield::is_prime;

pub const MAX_MODULUS: u32 = 257;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("modulus {0} is not a prime in 2..=257")]
    BadModulus(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("entry {0} out of range for the field")]
    EntryOutOfRange(u32),
}

fn check_modulus(modulus: u32) -> Result<(), LinalgError> {
    if modulus <= MAX_MODULUS && is_prime(modulus as u64) {
        Ok(())
    } else {
        Err(LinalgError::BadModulus(modulus))
    }
}

fn mismatch(what: impl Into<String>) -> LinalgError {
    LinalgError::DimensionMismatch(what.into())
}

/// Multiplicative inverse in `F_ℓ`.
pub fn inv_mod(a: u32, modulus: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(modulus));
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (modulus as i64, (a % modulus) as i64);
    while new_r != 0 {
        let quotient = r / new_r;
        (t, new_t) = (new_t, t - quotient * new_t);
        (r, new_r) = (new_r, r - quotient * new_r);
    }
    t.rem_euclid(modulus as i64) as u32
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Data {
    Bits(Vec<u64>),
    Dense(Vec<u16>),
}

/// A row vector over `F_ℓ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    modulus: u32,
    len: usize,
    data: Data,
}

impl Vector {
    pub fn zeros(len: usize, modulus: u32) -> Vector {
        let data = if modulus == 2 {
            Data::Bits(vec![0; len.div_ceil(64)])
        } else {
            Data::Dense(vec![0; len])
        };
        Vector { modulus, len, data }
    }

    pub fn unit(len: usize, i: usize, modulus: u32) -> Vector {
        let mut v = Vector::zeros(len, modulus);
        v.set(i, 1);
        v
    }

    pub fn from_entries(entries: &[u32], modulus: u32) -> Result<Vector, LinalgError> {
        check_modulus(modulus)?;
        let mut v = Vector::zeros(entries.len(), modulus);
        for (i, &x) in entries.iter().enumerate() {
            if x >= modulus {
                return Err(LinalgError::EntryOutOfRange(x));
            }
            v.set(i, x);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        match &self.data {
            Data::Bits(w) => ((w[i / 64] >> (i % 64)) & 1) as u32,
            Data::Dense(d) => d[i] as u32,
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u32) {
        debug_assert!(i < self.len);
        match &mut self.data {
            Data::Bits(w) => {
                let mask = 1u64 << (i % 64);
                if value & 1 == 1 {
                    w[i / 64] |= mask;
                } else {
                    w[i / 64] &= !mask;
                }
            }
            Data::Dense(d) => d[i] = (value % self.modulus) as u16,
        }
    }

    pub fn entries(&self) -> Vec<u32> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Data::Bits(w) => w.iter().all(|&x| x == 0),
            Data::Dense(d) => d.iter().all(|&x| x == 0),
        }
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        match &self.data {
            Data::Bits(w) => w
                .iter()
                .enumerate()
                .find(|(_, &x)| x != 0)
                .map(|(k, &x)| k * 64 + x.trailing_zeros() as usize),
            Data::Dense(d) => d.iter().position(|&x| x != 0),
        }
    }

    /// Indices of nonzero entries, ascending.
    pub fn support(&self) -> Vec<usize> {
        match &self.data {
            Data::Bits(w) => {
                let mut out = Vec::new();
                for (k, &word) in w.iter().enumerate() {
                    let mut x = word;
                    while x != 0 {
                        out.push(k * 64 + x.trailing_zeros() as usize);
                        x &= x - 1;
                    }
                }
                out
            }
            Data::Dense(d) => (0..d.len()).filter(|&i| d[i] != 0).collect(),
        }
    }

    /// `self += c · other`.
    pub fn axpy(&mut self, c: u32, other: &Vector) {
        debug_assert_eq!(self.len, other.len);
        let c = c % self.modulus;
        if c == 0 {
            return;
        }
        match (&mut self.data, &other.data) {
            (Data::Bits(a), Data::Bits(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
            (Data::Dense(a), Data::Dense(b)) => {
                let m = self.modulus;
                for (x, &y) in a.iter_mut().zip(b) {
                    *x = ((*x as u32 + c * y as u32) % m) as u16;
                }
            }
            _ => unreachable!("vectors over different fields"),
        }
    }

    pub fn scale(&mut self, c: u32) {
        let c = c % self.modulus;
        match &mut self.data {
            Data::Bits(w) => {
                if c == 0 {
                    w.iter_mut().for_each(|x| *x = 0);
                }
            }
            Data::Dense(d) => {
                let m = self.modulus;
                d.iter_mut().for_each(|x| *x = ((*x as u32 * c) % m) as u16);
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> u32 {
        debug_assert_eq!(self.len, other.len);
        match (&self.data, &other.data) {
            (Data::Bits(a), Data::Bits(b)) => {
                a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum::<u32>() & 1
            }
            (Data::Dense(a), Data::Dense(b)) => {
                let m = self.modulus as u64;
                (a.iter().zip(b).map(|(&x, &y)| x as u64 * y as u64).sum::<u64>() % m) as u32
            }
            _ => unreachable!("vectors over different fields"),
        }
    }

    /// `v·M`.
    pub fn mul_matrix(&self, m: &ModMatrix) -> Vector {
        debug_assert_eq!(self.len, m.rows());
        let mut out = Vector::zeros(m.cols, self.modulus);
        match &self.data {
            Data::Bits(_) => {
                for i in self.support() {
                    out.axpy(1, &m.rows[i]);
                }
            }
            Data::Dense(d) => {
                for (i, &c) in d.iter().enumerate() {
                    if c != 0 {
                        out.axpy(c as u32, &m.rows[i]);
                    }
                }
            }
        }
        out
    }

    /// Hex string of the entries over `F_2`: coordinate 0 is the most
    /// significant bit of the first digit; the tail is zero-padded to a nibble.
    pub fn to_hex_bits(&self) -> Option<String> {
        if self.modulus != 2 {
            return None;
        }
        let mut s = String::with_capacity(self.len.div_ceil(4));
        for chunk in 0..self.len.div_ceil(4) {
            let mut nibble = 0u32;
            for k in 0..4 {
                let i = chunk * 4 + k;
                nibble <<= 1;
                if i < self.len {
                    nibble |= self.get(i);
                }
            }
            s.push(char::from_digit(nibble, 16).unwrap());
        }
        Some(s)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries())
    }
}

/// A dense `rows × cols` matrix over `F_ℓ`, stored as row vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    modulus: u32,
    cols: usize,
    rows: Vec<Vector>,
}

impl fmt::Debug for ModMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ModMatrix {}x{} over F_{}", self.rows(), self.cols, self.modulus)?;
        for r in &self.rows {
            writeln!(f, "  {:?}", r.entries())?;
        }
        Ok(())
    }
}

/// Result of a full row reduction.
struct Reduced {
    matrix: ModMatrix,
    pivots: Vec<usize>,
}

impl ModMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u32) -> Result<ModMatrix, LinalgError> {
        check_modulus(modulus)?;
        Ok(ModMatrix {
            modulus,
            cols,
            rows: vec![Vector::zeros(cols, modulus); rows],
        })
    }

    pub fn identity(n: usize, modulus: u32) -> Result<ModMatrix, LinalgError> {
        let mut m = ModMatrix::zeros(n, n, modulus)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<u32>], modulus: u32) -> Result<ModMatrix, LinalgError> {
        check_modulus(modulus)?;
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(mismatch("ragged rows"));
        }
        let rows = rows
            .iter()
            .map(|r| Vector::from_entries(r, modulus))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ModMatrix { modulus, cols, rows })
    }

    /// Matrix with the given row vectors; `cols` is needed when `rows` is empty.
    pub fn from_vectors(rows: Vec<Vector>, cols: usize, modulus: u32) -> Result<ModMatrix, LinalgError> {
        check_modulus(modulus)?;
        if rows.iter().any(|r| r.len() != cols || r.modulus != modulus) {
            return Err(mismatch("row length or field differs"));
        }
        Ok(ModMatrix { modulus, cols, rows })
    }

    /// The matrix with `e_i · P = e_{π(i)}`.
    pub fn permutation(images: &[usize], modulus: u32) -> Result<ModMatrix, LinalgError> {
        let n = images.len();
        let mut m = ModMatrix::zeros(n, n, modulus)?;
        for (i, &j) in images.iter().enumerate() {
            m.set(i, j, 1);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.rows[i].set(j, value)
    }

    pub fn row(&self, i: usize) -> &Vector {
        &self.rows[i]
    }

    pub fn row_vectors(&self) -> &[Vector] {
        &self.rows
    }

    pub fn into_row_vectors(self) -> Vec<Vector> {
        self.rows
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows.iter().map(Vector::entries).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vector::is_zero)
    }

    pub fn transpose(&self) -> ModMatrix {
        let mut t = ModMatrix {
            modulus: self.modulus,
            cols: self.rows(),
            rows: vec![Vector::zeros(self.rows(), self.modulus); self.cols],
        };
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                t.rows[j].set(i, row.get(j));
            }
        }
        t
    }

    pub fn mul(&self, other: &ModMatrix) -> Result<ModMatrix, LinalgError> {
        if self.cols != other.rows() || self.modulus != other.modulus {
            return Err(mismatch(format!(
                "{}x{} times {}x{}",
                self.rows(),
                self.cols,
                other.rows(),
                other.cols
            )));
        }
        Ok(ModMatrix {
            modulus: self.modulus,
            cols: other.cols,
            rows: self.rows.iter().map(|r| r.mul_matrix(other)).collect(),
        })
    }

    pub fn add(&self, other: &ModMatrix) -> Result<ModMatrix, LinalgError> {
        self.axpy(1, other)
    }

    pub fn sub(&self, other: &ModMatrix) -> Result<ModMatrix, LinalgError> {
        self.axpy(self.modulus - 1, other)
    }

    /// `self + c · other`.
    pub fn axpy(&self, c: u32, other: &ModMatrix) -> Result<ModMatrix, LinalgError> {
        if self.rows() != other.rows() || self.cols != other.cols || self.modulus != other.modulus {
            return Err(mismatch("matrix sum of different shapes"));
        }
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.axpy(c, b);
        }
        Ok(out)
    }

    pub fn scaled(&self, c: u32) -> ModMatrix {
        let mut out = self.clone();
        out.rows.iter_mut().for_each(|r| r.scale(c));
        out
    }

    /// Row-major flattening into a vector of length `rows·cols`.
    pub fn flatten(&self) -> Vector {
        let mut v = Vector::zeros(self.rows() * self.cols, self.modulus);
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                v.set(i * self.cols + j, row.get(j));
            }
        }
        v
    }

    pub fn unflatten(v: &Vector, rows: usize, cols: usize) -> ModMatrix {
        assert_eq!(v.len(), rows * cols);
        let mut m = ModMatrix {
            modulus: v.modulus,
            cols,
            rows: vec![Vector::zeros(cols, v.modulus); rows],
        };
        for k in v.support() {
            m.rows[k / cols].set(k % cols, v.get(k));
        }
        m
    }

    fn reduce(&self) -> Reduced {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == m.rows() {
                break;
            }
            let Some(p) = (rank..m.rows()).find(|&r| m.rows[r].get(col) != 0) else {
                continue;
            };
            m.rows.swap(rank, p);
            let lead = m.rows[rank].get(col);
            if lead != 1 {
                m.rows[rank].scale(inv_mod(lead, self.modulus));
            }
            let pivot_row = m.rows[rank].clone();
            for r in 0..m.rows() {
                if r != rank {
                    let c = m.rows[r].get(col);
                    if c != 0 {
                        m.rows[r].axpy(self.modulus - c, &pivot_row);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Reduced { matrix: m, pivots }
    }

    /// Fully reduced row echelon form.
    pub fn rref(&self) -> ModMatrix {
        self.reduce().matrix
    }

    pub fn rank(&self) -> usize {
        self.reduce().pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Right kernel `{x : M xᵀ = 0}` as a subspace of `F_ℓ^cols`.
    pub fn kernel(&self) -> Subspace {
        let Reduced { matrix, pivots } = self.reduce();
        let mut is_pivot = vec![false; self.cols];
        pivots.iter().for_each(|&c| is_pivot[c] = true);
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = Vector::zeros(self.cols, self.modulus);
            x.set(free, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let c = matrix.rows[i].get(free);
                if c != 0 {
                    x.set(pc, self.modulus - c);
                }
            }
            basis.push(x);
        }
        Subspace::from_vectors(self.cols, self.modulus, basis)
            .expect("kernel vectors live in the ambient space")
    }

    /// Left kernel `{v : v·M = 0}` as a subspace of `F_ℓ^rows`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().kernel()
    }

    /// Row space as a subspace of `F_ℓ^cols`.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.cols, self.modulus, self.rows.clone())
            .expect("rows live in the ambient space")
    }

    /// Some `x` with `M xᵀ = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>, LinalgError> {
        if b.len() != self.rows() {
            return Err(mismatch(format!("right-hand side of length {} for {} rows", b.len(), self.rows())));
        }
        let mut aug = ModMatrix::zeros(self.rows(), self.cols + 1, self.modulus)?;
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                aug.set(i, j, row.get(j));
            }
            aug.set(i, self.cols, b[i] % self.modulus);
        }
        let Reduced { matrix, pivots } = aug.reduce();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = matrix.get(i, self.cols);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<ModMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.cols;
        let mut aug = ModMatrix::zeros(n, 2 * n, self.modulus).ok()?;
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                aug.set(i, j, row.get(j));
            }
            aug.set(i, n + i, 1);
        }
        let Reduced { matrix, pivots } = aug.reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = ModMatrix::zeros(n, n, self.modulus).ok()?;
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, matrix.get(i, n + j));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.cols
    }
}

/// A subspace of `F_ℓ^n` held as a fully reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    modulus: u32,
    /// Sorted by pivot column.
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {})", self.dim(), self.ambient)
    }
}

impl Subspace {
    pub fn zero(ambient: usize, modulus: u32) -> Subspace {
        Subspace {
            ambient,
            modulus,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize, modulus: u32) -> Subspace {
        Subspace {
            ambient,
            modulus,
            basis: (0..ambient).map(|i| Vector::unit(ambient, i, modulus)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors(
        ambient: usize,
        modulus: u32,
        vectors: impl IntoIterator<Item = Vector>,
    ) -> Result<Subspace, LinalgError> {
        check_modulus(modulus)?;
        let mut s = Subspace::zero(ambient, modulus);
        for v in vectors {
            if v.len() != ambient || v.modulus != modulus {
                return Err(mismatch("vector outside the ambient space"));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> ModMatrix {
        ModMatrix {
            modulus: self.modulus,
            cols: self.ambient,
            rows: self.basis.clone(),
        }
    }

    /// `v` minus its projection along the pivots: zero iff `v` lies in the span.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = r.get(pc);
            if c != 0 {
                r.axpy(self.modulus - c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        let mut c = Vector::zeros(self.dim(), self.modulus);
        for (k, &pc) in self.pivots.iter().enumerate() {
            c.set(k, v.get(pc));
        }
        Some(c)
    }

    /// Adds `v` to the span keeping the basis fully reduced; returns whether
    /// the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut r = self.reduce(&v);
        let Some(pc) = r.first_nonzero() else {
            return false;
        };
        let lead = r.get(pc);
        if lead != 1 {
            r.scale(inv_mod(lead, self.modulus));
        }
        for row in &mut self.basis {
            let c = row.get(pc);
            if c != 0 {
                row.axpy(self.modulus - c, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pc);
        self.pivots.insert(at, pc);
        self.basis.insert(at, r);
        true
    }

    /// Exact check that `w·A ∈ W` for every basis row `w` and every action `A`.
    pub fn is_invariant_under(&self, actions: &[ModMatrix]) -> bool {
        actions
            .iter()
            .all(|a| self.basis.iter().all(|w| self.contains(&w.mul_matrix(a))))
    }

    /// `{u : u·w = 0 for all w ∈ W}`.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient, self.modulus);
        }
        self.basis_matrix().kernel()
    }

    /// Non-pivot columns: the standard basis vectors on them span a complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        self.pivots.iter().for_each(|&c| is_pivot[c] = true);
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn to_hex_rows(&self) -> Option<Vec<String>> {
        self.basis.iter().map(Vector::to_hex_bits).collect()
    }
}

/// Smallest subspace containing `seeds` and closed under `v ↦ v·A` for every action.
pub fn spin(seeds: &[Vector], actions: &[ModMatrix]) -> Result<Subspace, LinalgError> {
    let Some(first) = seeds.first().or_else(|| actions.first().and_then(|a| a.rows.first())) else {
        return Err(mismatch("spin needs a seed or an action to fix the ambient space"));
    };
    let (n, modulus) = (first.len(), first.modulus);
    if actions.iter().any(|a| a.rows() != n || a.cols != n || a.modulus != modulus) {
        return Err(mismatch("actions must be square of the ambient dimension"));
    }
    if seeds.iter().any(|s| s.len() != n || s.modulus != modulus) {
        return Err(mismatch("seed outside the ambient space"));
    }
    let mut space = Subspace::zero(n, modulus);
    let mut work = Vec::new();
    for s in seeds {
        if space.insert(s.clone()) {
            work.push(s.clone());
        }
    }
    while let Some(w) = work.pop() {
        if space.dim() == n {
            break;
        }
        for a in actions {
            let image = w.mul_matrix(a);
            if space.insert(image.clone()) {
                work.push(image);
            }
        }
    }
    Ok(space)
}
