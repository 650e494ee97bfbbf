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

//! Plain-text edge lists, label files and trussness exports.
//!
//! Edge lists hold one `u v` pair per line with 1-based ids unless
//! `zero_based` is set; lines starting with `#` or `%` are comments. A
//! comment of the form `# vertices: N` fixes the vertex count, which is how
//! isolated trailing vertices survive a round trip.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Labels};
use crate::sparse::SparseMatrix;
use crate::truss::TrussDecomposition;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ReadOptions {
    /// Vertex count; otherwise the header or the largest id.
    pub n: Option<usize>,
    /// Keep arcs as given; otherwise every edge is symmetrized.
    pub directed: bool,
    pub zero_based: bool,
    pub strip_loops: bool,
    /// Add a self loop at every vertex (`A + I`), after stripping.
    pub add_loops: bool,
}

fn parse_id(tok: &str, line: usize, zero_based: bool) -> Result<usize> {
    let v: u64 = tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("'{tok}' is not a vertex id"),
    })?;
    if zero_based {
        Ok(v as usize)
    } else if v == 0 {
        Err(Error::Parse {
            line,
            msg: "vertex ids are 1-based".into(),
        })
    } else {
        Ok(v as usize - 1)
    }
}

fn header_vertices(line: &str) -> Option<usize> {
    line.trim_start_matches(['#', '%'])
        .trim()
        .strip_prefix("vertices:")
        .and_then(|rest| rest.trim().parse().ok())
}

pub fn read_edge_list<R: BufRead>(reader: R, opts: &ReadOptions) -> Result<Graph> {
    let mut pairs = Vec::new();
    let mut header_n = None;
    let mut max_id = None::<usize>;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if t.starts_with('#') || t.starts_with('%') {
            header_n = header_n.or(header_vertices(t));
            continue;
        }
        let mut toks = t.split_whitespace();
        let (Some(a), Some(b)) = (toks.next(), toks.next()) else {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "expected two vertex ids".into(),
            });
        };
        let u = parse_id(a, idx + 1, opts.zero_based)?;
        let v = parse_id(b, idx + 1, opts.zero_based)?;
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        if opts.strip_loops && u == v {
            continue;
        }
        pairs.push((u, v));
    }
    let n = match opts.n.or(header_n) {
        Some(n) => {
            if let Some(m) = max_id.filter(|&m| m >= n) {
                return Err(Error::InvalidGraph(format!("vertex id {} exceeds n = {n}", m + 1)));
            }
            n
        }
        None => max_id.map_or(0, |m| m + 1),
    };
    if opts.add_loops {
        pairs.extend((0..n).map(|u| (u, u)));
    }
    if opts.directed {
        Graph::directed(SparseMatrix::from_pattern(n, pairs)?)
    } else {
        let both: Vec<(usize, usize)> = pairs.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        Graph::undirected(SparseMatrix::from_pattern(n, both)?)
    }
}

pub fn read_edge_list_path(path: &Path, opts: &ReadOptions) -> Result<Graph> {
    read_edge_list(BufReader::new(File::open(path)?), opts)
}

/// Undirected graphs list each edge once as `u ≤ v`.
pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> Result<()> {
    writeln!(w, "# vertices: {}", g.n())?;
    for (u, v, _) in g.adj().iter() {
        if g.is_directed() || u <= v {
            writeln!(w, "{} {}", u + 1, v + 1)?;
        }
    }
    w.flush()?;
    Ok(())
}

pub fn write_edge_list_path(g: &Graph, path: &Path) -> Result<()> {
    write_edge_list(g, BufWriter::new(File::create(path)?))
}

/// `vertex label` lines covering every vertex `1..=n` exactly once.
pub fn read_labels<R: BufRead>(reader: R, n: usize, count: Option<u32>) -> Result<Labels> {
    let mut ids = vec![0u32; n];
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') || t.starts_with('%') {
            continue;
        }
        let toks: Vec<&str> = t.split_whitespace().collect();
        if toks.len() < 2 {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "expected 'vertex label'".into(),
            });
        }
        let v = parse_id(toks[0], idx + 1, false)?;
        let q: u32 = toks[1].parse().map_err(|_| Error::Parse {
            line: idx + 1,
            msg: format!("'{}' is not a label", toks[1]),
        })?;
        if v >= n {
            return Err(Error::InvalidGraph(format!("label for vertex {} but n = {n}", v + 1)));
        }
        if ids[v] != 0 {
            return Err(Error::InvalidGraph(format!("vertex {} labeled twice", v + 1)));
        }
        if q == 0 {
            return Err(Error::InvalidGraph(format!(
                "vertex {} has label 0; labels are 1-based",
                v + 1
            )));
        }
        ids[v] = q;
    }
    if let Some(v) = ids.iter().position(|&q| q == 0) {
        return Err(Error::InvalidGraph(format!("vertex {} has no label", v + 1)));
    }
    let count = count.unwrap_or_else(|| ids.iter().copied().max().unwrap_or(1));
    Labels::new(ids, count)
}

pub fn read_labels_path(path: &Path, n: usize, count: Option<u32>) -> Result<Labels> {
    read_labels(BufReader::new(File::open(path)?), n, count)
}

pub fn write_labels<W: Write>(labels: &Labels, mut w: W) -> Result<()> {
    for (v, q) in labels.ids().iter().enumerate() {
        writeln!(w, "{} {q}", v + 1)?;
    }
    w.flush()?;
    Ok(())
}

/// `u v trussness` per edge, 1-based, `u < v`.
pub fn write_trussness<W: Write>(d: &TrussDecomposition, mut w: W) -> Result<()> {
    for (&(u, v), t) in d.edges().iter().zip(d.values()) {
        writeln!(w, "{} {} {t}", u + 1, v + 1)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_trussness<R: BufRead>(reader: R) -> Result<Vec<(usize, usize, u32)>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.is_empty() || toks[0].starts_with('#') {
            continue;
        }
        if toks.len() != 3 {
            return Err(Error::Parse {
                line: idx + 1,
                msg: "expected 'u v trussness'".into(),
            });
        }
        let t = toks[2].parse().map_err(|_| Error::Parse {
            line: idx + 1,
            msg: format!("'{}' is not a trussness", toks[2]),
        })?;
        out.push((
            parse_id(toks[0], idx + 1, false)?,
            parse_id(toks[1], idx + 1, false)?,
            t,
        ));
    }
    Ok(out)
}

/// Tab-separated table with a header row.
pub fn write_tsv<W: Write>(mut w: W, header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<()> {
    writeln!(w, "{}", header.join("\t"))?;
    for row in rows {
        writeln!(w, "{}", row.join("\t"))?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{gen_er, make_hub_cycle, RngSeed};

    fn read(text: &str, opts: ReadOptions) -> Result<Graph> {
        read_edge_list(text.as_bytes(), &opts)
    }

    #[test]
    fn comments_and_symmetrization() {
        let g = read("# a comment\n% another\n1 2\n2 3\n\n3 1\n", ReadOptions::default()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (3, 3));
        assert!(g.adj().is_symmetric());
        let g = read("1 2\n2 1\n", ReadOptions::default()).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn options() {
        let g = read(
            "0 1\n1 1\n",
            ReadOptions {
                zero_based: true,
                strip_loops: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!((g.n(), g.edge_count(), g.loop_count()), (2, 1, 0));
        let g = read(
            "1 2\n",
            ReadOptions {
                n: Some(4),
                add_loops: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!((g.n(), g.loop_count()), (4, 4));
        let g = read(
            "1 2\n",
            ReadOptions {
                directed: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(g.is_directed() && !g.adj().is_symmetric());
        assert!(read(
            "1 5\n",
            ReadOptions {
                n: Some(3),
                ..Default::default()
            }
        )
        .is_err());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = read("1 2\nx 3\n", ReadOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(read("0 1\n", ReadOptions::default()).is_err());
        assert!(read("1\n", ReadOptions::default()).is_err());
    }

    #[test]
    fn round_trips() {
        for g in [
            make_hub_cycle(),
            gen_er(9, 0.3, RngSeed(4), true, false).unwrap(),
            gen_er(9, 0.3, RngSeed(5), false, true).unwrap(),
            Graph::from_edges(6, &[(0, 1)], false).unwrap(),
        ] {
            let mut buf = Vec::new();
            write_edge_list(&g, &mut buf).unwrap();
            let opts = ReadOptions {
                directed: g.is_directed(),
                ..Default::default()
            };
            let back = read_edge_list(buf.as_slice(), &opts).unwrap();
            assert_eq!(back, g);
        }
    }

    #[test]
    fn labels() {
        let l = read_labels("2 1\n1 3\n3 2\n".as_bytes(), 3, None).unwrap();
        assert_eq!((l.ids(), l.count()), (&[3, 1, 2][..], 3));
        let mut buf = Vec::new();
        write_labels(&l, &mut buf).unwrap();
        assert_eq!(read_labels(buf.as_slice(), 3, Some(3)).unwrap(), l);
        assert!(read_labels("1 1\n".as_bytes(), 2, None).is_err());
        assert!(read_labels("1 1\n1 2\n".as_bytes(), 1, None).is_err());
        assert!(read_labels("1 0\n".as_bytes(), 1, None).is_err());
    }

    #[test]
    fn trussness_export() {
        let d = crate::truss::truss_decompose(&make_hub_cycle()).unwrap();
        let mut buf = Vec::new();
        write_trussness(&d, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().count(), 8);
        assert!(text.lines().all(|l| l.ends_with(" 3")));
        let back = read_trussness(buf.as_slice()).unwrap();
        assert_eq!(back.len(), 8);
        assert_eq!(back[0], (0, 1, 3));
    }
}
