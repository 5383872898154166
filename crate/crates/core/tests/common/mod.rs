#![allow(dead_code)]

use std::sync::Arc;

use pwt_core::modrep::{enumerate_indecomposables, sum_of, Bounds, EnumerationStrategy, ModCategory, Representation};
use pwt_core::quivalg::{BoundQuiverAlgebra, Quiver};
use pwt_core::{Field, Matrix};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub const CAP: usize = pwt_core::homology::DEFAULT_SYZYGY_CAP;

/// `2 → 3 → 4` with the composite zero.
pub fn lambda0(f: Field) -> BoundQuiverAlgebra {
    let q = Quiver::new(&["2", "3", "4"], &[("a", "2", "3"), ("b", "3", "4")]).unwrap();
    BoundQuiverAlgebra::new(q, &[vec!["a", "b"]], f, 0).unwrap()
}

pub fn a2(f: Field) -> BoundQuiverAlgebra {
    let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
    BoundQuiverAlgebra::new(q, &[] as &[Vec<&str>], f, 0).unwrap()
}

pub fn c3(f: Field) -> BoundQuiverAlgebra {
    let q = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]).unwrap();
    BoundQuiverAlgebra::new(q, &[vec!["a", "b"], vec!["b", "c"], vec!["c", "a"]], f, 0).unwrap()
}

pub fn indecs(alg: &BoundQuiverAlgebra) -> Vec<Representation> {
    enumerate_indecomposables(alg.category(), EnumerationStrategy::Auto, Bounds::default()).unwrap()
}

pub fn random_matrix(f: Field, rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> Matrix {
    let p = f.order().unwrap_or(7) as i64;
    let data = (0..rows * cols).map(|_| f.from_i64(rng.gen_range(0..p))).collect();
    Matrix::from_vec(f, rows, cols, data)
}

pub fn random_invertible(f: Field, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = random_matrix(f, n, n, rng);
        if m.is_invertible() {
            return m;
        }
    }
}

/// `x` transported along random vertexwise base changes; isomorphic to `x`.
pub fn conjugate(x: &Representation, rng: &mut ChaCha8Rng) -> Representation {
    let cat = x.category();
    let f = x.field();
    let g: Vec<Matrix> = x.dims().iter().map(|&d| random_invertible(f, d, rng)).collect();
    let maps = cat
        .links()
        .iter()
        .zip(x.maps())
        .map(|(l, m)| {
            let src = g[l.source].kron(&Matrix::identity(f, l.coeff_dim));
            let inv = src.inverse().unwrap();
            &(&g[l.target] * m) * &inv
        })
        .collect();
    Representation::new(cat, x.dims().to_vec(), maps).unwrap()
}

/// A random direct sum of listed modules, each taken at most twice, then
/// conjugated.
pub fn random_module(cat: &Arc<ModCategory>, list: &[Representation], rng: &mut ChaCha8Rng) -> Representation {
    let mut parts = Vec::new();
    for x in list {
        for _ in 0..rng.gen_range(0..3) {
            parts.push(x.clone());
        }
    }
    conjugate(&sum_of(cat, &parts), rng)
}
