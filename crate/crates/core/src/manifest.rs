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

//! JSON manifests: factor files with checksums plus the exact product
//! totals. A manifest and its two factor files are the whole product.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{read_edge_list_path, read_labels_path, ReadOptions};
use crate::kron::{FactorSummary, LoopRegime, ProductSummary};
use crate::stream::ProductHandle;

pub const FORMAT: &str = "kron-triangles-manifest/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileRef {
    /// Relative paths resolve against the manifest's directory.
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRef {
    pub edges: FileRef,
    #[serde(default)]
    pub options: ReadOptions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<FileRef>,
    pub summary: FactorSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub format: String,
    pub tool_version: String,
    pub index_map: String,
    pub left: FactorRef,
    pub right: FactorRef,
    #[serde(default)]
    pub seeds: Vec<u64>,
    pub regime: LoopRegime,
    pub totals: ProductSummary,
}

/// Where to load a factor from.
#[derive(Clone, Debug, Default)]
pub struct FactorSource {
    pub path: PathBuf,
    pub options: ReadOptions,
    pub labels: Option<PathBuf>,
}

impl FactorSource {
    pub fn new(path: impl Into<PathBuf>, options: ReadOptions) -> Self {
        FactorSource {
            path: path.into(),
            options,
            labels: None,
        }
    }

    pub fn load(&self) -> Result<Graph> {
        load_factor(&self.path, &self.options, self.labels.as_deref())
    }
}

fn load_factor(path: &Path, options: &ReadOptions, labels: Option<&Path>) -> Result<Graph> {
    let g = read_edge_list_path(path, options)?;
    match labels {
        Some(l) => {
            let labels = read_labels_path(l, g.n(), None)?;
            g.with_labels(labels)
        }
        None => Ok(g),
    }
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let bytes = fs::read(path)?;
    Ok(hex::encode(Sha256::digest(&bytes)))
}

fn relative_to(path: &Path, base: &Path) -> String {
    let abs = |p: &Path| fs::canonicalize(p).unwrap_or_else(|_| p.to_path_buf());
    let (p, b) = (abs(path), abs(base));
    match p.strip_prefix(&b) {
        Ok(rel) => rel.to_string_lossy().into_owned(),
        Err(_) => p.to_string_lossy().into_owned(),
    }
}

fn file_ref(path: &Path, base: &Path) -> Result<FileRef> {
    Ok(FileRef {
        path: relative_to(path, base),
        sha256: sha256_file(path)?,
    })
}

/// A manifest together with its loaded factors.
#[derive(Clone, Debug)]
pub struct LoadedProduct {
    pub manifest: Manifest,
    pub left: Graph,
    pub right: Graph,
}

impl LoadedProduct {
    pub fn handle(&self) -> Result<ProductHandle> {
        ProductHandle::new(self.left.clone(), self.right.clone())
    }
}

impl Manifest {
    /// Loads both factors and computes every total from them. File paths
    /// are recorded relative to `manifest_dir` when they lie inside it.
    pub fn build(
        left: &FactorSource,
        right: &FactorSource,
        manifest_dir: &Path,
        seeds: Vec<u64>,
    ) -> Result<LoadedProduct> {
        let a = left.load()?;
        let b = right.load()?;
        let handle = ProductHandle::new(a.clone(), b.clone())?;
        let stats = handle.stats();
        let factor = |src: &FactorSource, summary: FactorSummary| -> Result<FactorRef> {
            Ok(FactorRef {
                edges: file_ref(&src.path, manifest_dir)?,
                options: src.options,
                labels: src.labels.as_deref().map(|l| file_ref(l, manifest_dir)).transpose()?,
                summary,
            })
        };
        let manifest = Manifest {
            format: FORMAT.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            index_map: "p = (i - 1) * n_B + k".to_string(),
            left: factor(left, stats.left().summary())?,
            right: factor(right, stats.right().summary())?,
            seeds,
            regime: stats.regime(),
            totals: handle.summary()?,
        };
        Ok(LoadedProduct {
            manifest,
            left: a,
            right: b,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Manifest(e.to_string()))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        let m: Manifest = serde_json::from_str(&text).map_err(|e| Error::Manifest(e.to_string()))?;
        if m.format != FORMAT {
            return Err(Error::Manifest(format!("unsupported manifest format '{}'", m.format)));
        }
        Ok(m)
    }

    /// Reads a manifest, verifies the factor checksums and recomputes the
    /// totals from the factors.
    pub fn open(path: &Path) -> Result<LoadedProduct> {
        let m = Self::read(path)?;
        let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
        let resolve = |r: &FileRef| -> Result<PathBuf> {
            let p = Path::new(&r.path);
            let p = if p.is_absolute() { p.to_path_buf() } else { base.join(p) };
            let actual = sha256_file(&p)?;
            if actual != r.sha256 {
                return Err(Error::Manifest(format!(
                    "checksum mismatch for {}: manifest has {}, file has {actual}",
                    p.display(),
                    r.sha256
                )));
            }
            Ok(p)
        };
        let load = |f: &FactorRef| -> Result<Graph> {
            let edges = resolve(&f.edges)?;
            let labels = f.labels.as_ref().map(&resolve).transpose()?;
            load_factor(&edges, &f.options, labels.as_deref())
        };
        let left = load(&m.left)?;
        let right = load(&m.right)?;
        let handle = ProductHandle::new(left.clone(), right.clone())?;
        let totals = handle.summary()?;
        if totals != m.totals || handle.regime() != m.regime {
            return Err(Error::Manifest("recorded totals do not match the factors".into()));
        }
        Ok(LoadedProduct {
            manifest: m,
            left,
            right,
        })
    }
}
