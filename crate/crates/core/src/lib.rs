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

//! Kronecker product graphs `C = A ⊗ B` with exact ground-truth triangle
//! statistics and truss decompositions computed from the factors alone.

pub mod directed;
pub mod error;
pub mod factor;
pub mod graph;
pub mod io;
pub mod kron;
pub mod labeled;
pub mod manifest;
pub mod oracle;
pub mod sparse;
pub mod stream;
pub mod truss;
pub mod undirected;
pub mod validate;

pub use error::{Error, Result};
pub use graph::{Graph, Labels};
pub use kron::{
    product_manifest, product_stats, product_tri_total, FactorStats, FactorSummary, LoopRegime, ProductStats,
    ProductSummary,
};
pub use sparse::{idx_join, idx_split, IndexMap, MaterializeGuard, SparseMatrix};
pub use stream::{BlockRange, EmitMode, ProductHandle};
pub use truss::{product_truss, truss_decompose, ProductTruss, TrussDecomposition};
