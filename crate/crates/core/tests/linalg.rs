use heartlab::modlinalg::{spin, ModMatrix, Vector};
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize, modulus: u32) -> impl Strategy<Value = ModMatrix> {
    prop::collection::vec(prop::collection::vec(0..modulus, cols), rows)
        .prop_map(move |r| ModMatrix::from_rows(&r, modulus).unwrap())
}

fn modulus() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7, 257])
}

fn left_inverse_by_augmented_rref(m: &ModMatrix) -> Option<ModMatrix> {
    let n = m.rows();
    let rows: Vec<Vec<u32>> = m
        .to_rows()
        .into_iter()
        .enumerate()
        .map(|(i, mut r)| {
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let r = ModMatrix::from_rows(&rows, m.modulus()).unwrap().rref();
    let left: Vec<Vec<u32>> = r.to_rows().iter().map(|row| row[..n].to_vec()).collect();
    if ModMatrix::from_rows(&left, m.modulus()).unwrap() != ModMatrix::identity(n, m.modulus()).unwrap() {
        return None;
    }
    let right: Vec<Vec<u32>> = r.to_rows().iter().map(|row| row[n..].to_vec()).collect();
    Some(ModMatrix::from_rows(&right, m.modulus()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_of_product((a, b) in (1usize..9, 1usize..9, 1usize..9).prop_flat_map(|(r, k, c)| {
        (matrix(r, k, 2), matrix(k, c, 2))
    })) {
        let ab = a.mul(&b).unwrap();
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn rank_of_product_odd(l in modulus(), seed in any::<u64>()) {
        let mut rng = heartlab::rng::SplitMix64::new(seed);
        let mut random = |r: usize, c: usize| {
            let rows: Vec<Vec<u32>> = (0..r).map(|_| (0..c).map(|_| rng.below(l as u64) as u32).collect()).collect();
            ModMatrix::from_rows(&rows, l).unwrap()
        };
        let a = random(5, 7);
        let b = random(7, 4);
        prop_assert!(a.mul(&b).unwrap().rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn spin_is_invariant(actions in prop::collection::vec(matrix(10, 10, 2), 1..3),
                         seed in prop::collection::vec(0u32..2, 10)) {
        let v = Vector::from_entries(&seed, 2).unwrap();
        let w = spin(std::slice::from_ref(&v), &actions).unwrap();
        prop_assert!(w.contains(&v));
        for b in w.basis() {
            for a in &actions {
                prop_assert!(w.contains(&b.mul_matrix(a)));
            }
        }
    }

    #[test]
    fn augmented_rref_inverts(m in matrix(8, 8, 2)) {
        match left_inverse_by_augmented_rref(&m) {
            Some(inv) => {
                prop_assert!(m.is_invertible());
                prop_assert_eq!(inv.mul(&m).unwrap(), ModMatrix::identity(8, 2).unwrap());
                prop_assert_eq!(m.inverse(), Some(inv));
            }
            None => prop_assert!(!m.is_invertible()),
        }
    }

    #[test]
    fn kernel_and_rank(m in matrix(6, 9, 2)) {
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), 9);
        let t = m.transpose();
        for v in k.basis() {
            prop_assert!(v.mul_matrix(&t).is_zero());
        }
    }
}
