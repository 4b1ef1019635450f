//! Signed shuffles, the arity-local spectral operator and its eigenspaces.

use std::sync::Arc;

use hochhodge::linalg::Matrix;
use hochhodge::shuffle::{
    component_dims, eulerian_projectors, shuffle_eigenvalue, signed_shuffle_operator,
};
use hochhodge::tensor::Tensor;
use hochhodge::{corpus, int, Rat};

fn arc(name: &str) -> Arc<hochhodge::algebra::Algebra<Rat>> {
    Arc::new(corpus::by_name::<Rat>(name).unwrap())
}

#[test]
fn eigenvalue_sequence() {
    let values: Vec<Rat> = (1..=5).map(shuffle_eigenvalue::<Rat>).collect();
    let expected: Vec<Rat> = [0i64, 2, 6, 14, 30].into_iter().map(int).collect();
    assert_eq!(values, expected);
}

#[test]
fn two_letter_shuffle_is_signed_swap() {
    let a = arc("dual-numbers");
    let t0 = Tensor::basis(a.clone(), &[0]);
    let t1 = Tensor::basis(a.clone(), &[1]);
    let s = t0.shuffle_product(&t1).unwrap();
    // Letters count as odd, so the swapped interleaving picks up a sign.
    let plus = Tensor::basis(a.clone(), &[0, 1]);
    let minus = Tensor::basis(a.clone(), &[1, 0]).scale(&int::<Rat>(-1));
    assert_eq!(s.coeffs(), plus.add(&minus).unwrap().coeffs());
    // A letter against itself cancels outright.
    assert!(t1.shuffle_product(&t1).unwrap().is_zero());
}

#[test]
fn three_letter_shuffle_signs() {
    let a = arc("split-triple");
    let u = Tensor::basis(a.clone(), &[0]);
    let v = Tensor::basis(a.clone(), &[1, 2]);
    let s = u.shuffle_product(&v).unwrap();
    let expected = Tensor::basis(a.clone(), &[0, 1, 2])
        .add(&Tensor::basis(a.clone(), &[1, 0, 2]).scale(&int::<Rat>(-1)))
        .unwrap()
        .add(&Tensor::basis(a.clone(), &[1, 2, 0]))
        .unwrap();
    assert_eq!(s.coeffs(), expected.coeffs());
}

#[test]
fn shuffle_rejects_mixed_algebras() {
    let a = arc("dual-numbers");
    let b = arc("split-pair");
    let ta = Tensor::basis(a, &[0]);
    let tb = Tensor::basis(b, &[0]);
    assert!(ta.shuffle_product(&tb).is_err());
}

#[test]
fn operator_satisfies_its_minimal_polynomial() {
    for (name, algebra) in corpus::all::<Rat>() {
        let algebra = Arc::new(algebra);
        for n in 1..=3 {
            let s = signed_shuffle_operator(&algebra, n).unwrap();
            let mut product = Matrix::identity(s.rows());
            for p in 1..=n {
                let shifted = s.sub(&Matrix::identity(s.rows()).scale(&shuffle_eigenvalue(p)));
                product = product.mul(&shifted.unwrap()).unwrap();
            }
            assert!(product.is_zero(), "{name} arity {n}");
        }
    }
}

#[test]
fn component_dims_match_kernel_dimensions() {
    // Independent route: the dimension of each eigenspace is the kernel
    // dimension of the shifted operator.
    for (name, algebra) in corpus::all::<Rat>() {
        let algebra = Arc::new(algebra);
        for n in 1..=3 {
            let dims = component_dims(&algebra, n).unwrap();
            let s = signed_shuffle_operator(&algebra, n).unwrap();
            for (idx, dim) in dims.iter().enumerate() {
                let shifted = s
                    .sub(&Matrix::identity(s.rows()).scale(&shuffle_eigenvalue(idx + 1)))
                    .unwrap();
                assert_eq!(
                    shifted.kernel_basis().rows(),
                    *dim,
                    "{name} arity {n} piece {}",
                    idx + 1
                );
            }
            let total: usize = dims.iter().sum();
            assert_eq!(total, algebra.dim().pow(n as u32), "{name} arity {n}");
        }
    }
}

#[test]
fn arity_two_split_is_symmetric_versus_antisymmetric() {
    for (name, algebra) in corpus::all::<Rat>() {
        let m = algebra.dim();
        let algebra = Arc::new(algebra);
        let dims = component_dims(&algebra, 2).unwrap();
        assert_eq!(dims, vec![m * (m + 1) / 2, m * (m - 1) / 2], "{name}");
    }
}

#[test]
fn one_dimensional_cube_sits_in_the_middle_piece() {
    let a = arc("rationals");
    assert_eq!(component_dims(&a, 3).unwrap(), vec![0, 1, 0]);
}

#[test]
fn projectors_resolve_the_identity() {
    let a = arc("planar-fat-point");
    let projs = eulerian_projectors(&a, 2).unwrap();
    assert_eq!(projs.len(), 2);
    let sum = projs[0].add(&projs[1]).unwrap();
    assert_eq!(sum, Matrix::identity(9));
    assert_eq!(projs[0].mul(&projs[1]).unwrap(), Matrix::zero(9, 9));
    for p in &projs {
        assert_eq!(&p.mul(p).unwrap(), p);
    }
}
