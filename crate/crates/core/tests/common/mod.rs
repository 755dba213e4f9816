//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use heartlab::modlinalg::ModMatrix;
use heartlab::permgroup::Permutation;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Breadth-first closure of the generated group, stored as image vectors.
pub fn bfs_closure(gens: &[Permutation]) -> HashSet<Vec<u8>> {
    let n = gens.first().map_or(0, |g| g.degree());
    assert!(n <= 256);
    let images: Vec<Vec<u8>> = gens
        .iter()
        .map(|g| g.images().into_iter().map(|i| i as u8).collect())
        .collect();
    let start: Vec<u8> = (0..n).map(|i| i as u8).collect();
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for g in &images {
            let y: Vec<u8> = x.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Largest k such that the group acts transitively on ordered k-tuples, by brute force.
pub fn transitivity_by_tuples(elements: &HashSet<Vec<u8>>, n: usize) -> usize {
    let mut k = 0;
    while k < n {
        let base: Vec<usize> = (0..=k).collect();
        let images: HashSet<Vec<u8>> = elements
            .iter()
            .map(|g| base.iter().map(|&i| g[i]).collect())
            .collect();
        let tuples = (0..=k).fold(1usize, |acc, j| acc * (n - j));
        if images.len() != tuples {
            break;
        }
        k += 1;
    }
    k
}

/// Cycle type of an image vector, lengths in decreasing order.
pub fn cycle_lengths(images: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut lengths = Vec::new();
    for start in 0..images.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = images[x] as usize;
            len += 1;
        }
        if len > 0 {
            lengths.push(len);
        }
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

/// Dimension of the commutant over GF(2) by enumerating all 2^(d*d) matrices.
pub fn brute_commutant_dimension(gens: &[ModMatrix]) -> usize {
    let d = gens[0].rows();
    assert!(d <= 4, "brute force only for d <= 4");
    let g: Vec<Vec<u32>> = gens.iter().map(bits_of).collect();
    let mut count = 0u64;
    for x in 0u32..(1u32 << (d * d)) {
        let xm: Vec<u32> = (0..d).map(|i| (x >> (i * d)) & ((1 << d) - 1)).collect();
        if g.iter().all(|a| mul_rows(&xm, a, d) == mul_rows(a, &xm, d)) {
            count += 1;
        }
    }
    assert!(count.is_power_of_two());
    count.trailing_zeros() as usize
}

fn bits_of(m: &ModMatrix) -> Vec<u32> {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(0, |acc, j| acc | (m.get(i, j) << j)))
        .collect()
}

fn mul_rows(a: &[u32], b: &[u32], d: usize) -> Vec<u32> {
    a.iter()
        .map(|&row| (0..d).filter(|&k| row >> k & 1 == 1).fold(0, |acc, k| acc ^ b[k]))
        .collect()
}

/// Value of an integer polynomial (constant term first) at `x` modulo `p`.
pub fn eval_mod(coeffs: &[i64], x: u64, p: u64) -> u64 {
    coeffs
        .iter()
        .rev()
        .fold(0u64, |acc, &c| (acc * x + c.rem_euclid(p as i64) as u64) % p)
}

/// Factor degrees of a squarefree polynomial of degree at most 5 modulo `p`,
/// found by stripping roots and then searching monic quadratic divisors.
pub fn small_factor_degrees(coeffs: &[i64], p: u64) -> Vec<usize> {
    let mut f: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
    assert!(f.len() <= 6 && *f.last().unwrap() != 0);
    let mut degrees = Vec::new();
    'roots: loop {
        for r in 0..p {
            if horner(&f, r, p) == 0 {
                f = divide_monic(&f, &[(p - r) % p, 1], p);
                degrees.push(1);
                continue 'roots;
            }
        }
        break;
    }
    'quads: while f.len() > 4 {
        for a in 0..p {
            for b in 0..p {
                let q = [b, a, 1];
                let quotient = divide_monic(&f, &q, p);
                if multiply(&quotient, &q, p) == f {
                    f = quotient;
                    degrees.push(2);
                    continue 'quads;
                }
            }
        }
        break;
    }
    if f.len() > 1 {
        degrees.push(f.len() - 1);
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    degrees
}

fn horner(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn divide_monic(f: &[u64], d: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dn = d.len() - 1;
    let mut q = vec![0; f.len() - dn];
    let lead_inv = inv(*d.last().unwrap(), p);
    for i in (0..q.len()).rev() {
        let c = r[i + dn] * lead_inv % p;
        q[i] = c;
        for (j, &dj) in d.iter().enumerate() {
            r[i + j] = (r[i + j] + p - c * dj % p) % p;
        }
    }
    q
}

fn multiply(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

/// Whether `f` has a divisor of degree at most 2 modulo `p`.
pub fn has_small_divisor(coeffs: &[i64], p: u64) -> bool {
    let f: Vec<u64> = coeffs.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect();
    if (0..p).any(|r| horner(&f, r, p) == 0) {
        return true;
    }
    (0..p).any(|a| {
        (0..p).any(|b| {
            let q = [b, a, 1];
            multiply(&divide_monic(&f, &q, p), &q, p) == f
        })
    })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant of two integer polynomials via the Sylvester matrix.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

/// Discriminant up to sign: the resultant of `f` and `f'` divided by the leading coefficient.
pub fn discriminant_abs(f: &[BigInt]) -> BigInt {
    let df: Vec<BigInt> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect();
    let r = resultant(f, &df) / f.last().unwrap();
    if r < BigInt::zero() {
        -r
    } else {
        r
    }
}
