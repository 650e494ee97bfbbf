// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#![allow(dead_code)]

use kron_triangles::factor::{gen_er, RngSeed};
use kron_triangles::{
    idx_join, idx_split, BlockRange, EmitMode, Graph, MaterializeGuard, ProductHandle, ProductStats, SparseMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, n: usize, density: f64) -> SparseMatrix {
    let mut t = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if rng.random_bool(density) {
                t.push((i, j, rng.random_range(1..5u64)));
            }
        }
    }
    SparseMatrix::from_triplets(n, t).unwrap()
}

pub fn kron(x: &SparseMatrix, y: &SparseMatrix) -> SparseMatrix {
    x.kron(y, &MaterializeGuard::default()).unwrap()
}

pub fn materialize(a: &Graph, b: &Graph) -> Graph {
    Graph::undirected(kron(a.adj(), b.adj())).unwrap()
}

/// Kronecker and Hadamard product identities on random integer matrices.
pub fn kron_hadamard_algebra(seed: u64) -> Check {
    let mut r = rng(seed);
    let (n1, n2) = (r.random_range(1..=4), r.random_range(1..=4));
    let x1 = random_matrix(&mut r, n1, 0.5);
    let x2 = random_matrix(&mut r, n2, 0.5);
    let x3 = random_matrix(&mut r, n1, 0.5);
    let x4 = random_matrix(&mut r, n2, 0.5);
    let (a1, a2) = (r.random_range(0..4u64), r.random_range(0..4u64));

    ensure!(
        kron(&x1, &x2).scale(a1 * a2).unwrap() == kron(&x1.scale(a1).unwrap(), &x2.scale(a2).unwrap()),
        "kron scalar"
    );
    ensure!(
        kron(&x1.add(&x3).unwrap(), &x2) == kron(&x1, &x2).add(&kron(&x3, &x2)).unwrap(),
        "kron left distributivity"
    );
    ensure!(
        kron(&x1, &x2.add(&x4).unwrap()) == kron(&x1, &x2).add(&kron(&x1, &x4)).unwrap(),
        "kron right distributivity"
    );
    ensure!(
        kron(&x1, &x2).transpose() == kron(&x1.transpose(), &x2.transpose()),
        "kron transposition"
    );
    ensure!(
        kron(&x1, &x2).mat_mul(&kron(&x3, &x4)).unwrap() == kron(&x1.mat_mul(&x3).unwrap(), &x2.mat_mul(&x4).unwrap()),
        "mixed product"
    );

    ensure!(
        x1.hadamard(&x3).unwrap() == x3.hadamard(&x1).unwrap(),
        "hadamard commutativity"
    );
    ensure!(
        x1.hadamard(&x3).unwrap().scale(a1 * a2).unwrap()
            == x1.scale(a1).unwrap().hadamard(&x3.scale(a2).unwrap()).unwrap(),
        "hadamard scalar"
    );
    let x5 = random_matrix(&mut r, n1, 0.5);
    ensure!(
        x1.add(&x3).unwrap().hadamard(&x5).unwrap()
            == x1.hadamard(&x5).unwrap().add(&x3.hadamard(&x5).unwrap()).unwrap(),
        "hadamard distributivity"
    );
    ensure!(
        x1.hadamard(&x3).unwrap().transpose() == x1.transpose().hadamard(&x3.transpose()).unwrap(),
        "hadamard transposition"
    );
    ensure!(
        kron(&x1, &x2).hadamard(&kron(&x3, &x4)).unwrap()
            == kron(&x1.hadamard(&x3).unwrap(), &x2.hadamard(&x4).unwrap()),
        "hadamard-kronecker distributivity"
    );
    let d1 = x1.diag();
    let d2 = x2.diag();
    let outer: Vec<u64> = d1.iter().flat_map(|&a| d2.iter().map(move |&b| a * b)).collect();
    ensure!(kron(&x1, &x2).diag() == outer, "diagonal-kronecker distributivity");
    Ok(())
}

pub fn index_round_trip(n_b: u64, p: u64) -> Check {
    let (block, intra) = idx_split(p, n_b).map_err(|e| e.to_string())?;
    ensure!(intra >= 1 && intra <= n_b, "intra {intra} outside 1..={n_b}");
    ensure!(
        idx_join(block, intra, n_b).map_err(|e| e.to_string())? == p,
        "round trip of {p} with n_B={n_b}"
    );
    Ok(())
}

/// `t_C = 2 t_A ⊗ t_B` is even everywhere for loop-free factors.
pub fn loop_free_parity(seed: u64) -> Check {
    let mut r = rng(seed);
    let a = gen_er(r.random_range(3..=12), 0.5, RngSeed(r.random()), false, false).unwrap();
    let b = gen_er(r.random_range(3..=12), 0.5, RngSeed(r.random()), false, false).unwrap();
    let s = ProductStats::new(&a, &b).unwrap();
    for p in 1..=s.n() {
        ensure!(s.tri_vertex(p).unwrap() % 2 == 0, "odd t_C at {p}");
    }
    ensure!(s.tri_total().unwrap() % 6 == 0, "τ_C not a multiple of 6");
    Ok(())
}

fn stream(h: &ProductHandle, range: BlockRange) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    h.stream_edges(range, EmitMode::All, |p, q| {
        out.push((p, q));
        Ok(())
    })
    .unwrap();
    out
}

/// Streams over a random partition concatenate to the full stream, which
/// in turn holds exactly the materialized entries.
pub fn stream_partition(seed: u64) -> Check {
    let mut r = rng(seed);
    let na = r.random_range(1..=10);
    let a = gen_er(na, 0.4, RngSeed(r.random()), false, false).unwrap();
    let b = gen_er(r.random_range(1..=8), 0.4, RngSeed(r.random()), false, true).unwrap();
    let h = ProductHandle::new(a.clone(), b.clone()).unwrap();
    let full = stream(&h, BlockRange::full(na as u64).unwrap());
    let mut cuts: Vec<u64> = (1..na as u64).filter(|_| r.random_bool(0.3)).collect();
    cuts.push(na as u64);
    let mut lo = 1;
    let mut joined = Vec::new();
    for hi in cuts {
        joined.extend(stream(&h, BlockRange::new(lo, hi, na as u64).unwrap()));
        lo = hi + 1;
    }
    ensure!(joined == full, "partition stream differs from full stream");
    let mut sorted = full;
    sorted.sort_unstable();
    let want: Vec<(u64, u64)> = kron(a.adj(), b.adj())
        .iter()
        .map(|(u, v, _)| (u as u64 + 1, v as u64 + 1))
        .collect();
    ensure!(sorted == want, "stream differs from materialized product");
    Ok(())
}

/// Same seed, same bytes.
pub fn determinism(seed: u64) -> Check {
    let make = || {
        let a = gen_er(9, 0.4, RngSeed(seed), false, false).unwrap();
        let b = kron_triangles::factor::gen_trianglecap_pa(15, RngSeed(seed ^ 1)).unwrap();
        let h = ProductHandle::new(a, b).unwrap();
        let mut text = String::new();
        h.stream_edges(BlockRange::full(9).unwrap(), EmitMode::Canonical, |p, q| {
            text.push_str(&format!("{p} {q}\n"));
            Ok(())
        })
        .unwrap();
        text
    };
    ensure!(make() == make(), "stream not deterministic for seed {seed}");
    Ok(())
}
