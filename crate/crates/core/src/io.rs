//! JSON interchange: posets, graphs, embeddings and certificates.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::embedding::PlaneEmbedding;
use crate::error::{Error, Result};
use crate::graph::{CoverGraph, Graph};
use crate::poset::{Poset, Realizer};
use crate::witness::IntervalCertificate;

/// `{"elements": [..], "cover": [["x","y"], ..]}`: `y` covers `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub cover: Vec<(String, String)>,
}

impl PosetFile {
    pub fn of(p: &Poset) -> Self {
        let cover = p
            .covers()
            .into_iter()
            .map(|(x, y)| (p.label(x).to_string(), p.label(y).to_string()))
            .collect();
        PosetFile {
            elements: p.labels().to_vec(),
            cover,
        }
    }

    pub fn to_poset(&self) -> Result<Poset> {
        Poset::from_cover_pairs(&self.elements, &self.cover)
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_labelled_edges(&self.elements, &self.cover)
    }
}

pub fn poset_to_json(p: &Poset) -> String {
    serde_json::to_string_pretty(&PosetFile::of(p)).expect("serializable")
}

pub fn poset_from_json(s: &str) -> Result<Poset> {
    serde_json::from_str::<PosetFile>(s)?.to_poset()
}

pub fn read_poset(path: impl AsRef<Path>) -> Result<Poset> {
    poset_from_json(&fs::read_to_string(path)?)
}

pub fn write_poset(p: &Poset, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, poset_to_json(p) + "\n")?;
    Ok(())
}

/// Reads the poset format as an undirected graph (orientation ignored).
pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph> {
    serde_json::from_str::<PosetFile>(&fs::read_to_string(path)?)?.to_graph()
}

/// `{"rotation": {"v": [["u","up"|"down"], ..]}, "outer_face": [..], "e_infinity": "x0"}`.
///
/// Rotations are clockwise. `outer_face` is the walk of the outer face;
/// when `e_infinity` is set the walk starts at `x0` and its first step
/// marks the corner holding `e_∞`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingFile {
    pub rotation: BTreeMap<String, Vec<(String, String)>>,
    pub outer_face: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e_infinity: Option<String>,
}

impl EmbeddingFile {
    pub fn of(emb: &PlaneEmbedding, cover: &CoverGraph) -> Self {
        let g = emb.graph();
        let mut rotation = BTreeMap::new();
        for v in 0..g.len() {
            let entries = emb
                .rotation(v)
                .iter()
                .map(|&w| {
                    let dir = if cover.is_up(v, w) { "up" } else { "down" };
                    (g.label(w).to_string(), dir.to_string())
                })
                .collect();
            rotation.insert(g.label(v).to_string(), entries);
        }
        let outer_face = emb
            .outer_face_vertices()
            .into_iter()
            .map(|v| g.label(v).to_string())
            .collect();
        let e_infinity = emb.x0().map(|v| g.label(v).to_string());
        EmbeddingFile {
            rotation,
            outer_face,
            e_infinity,
        }
    }

    /// Rebuilds the embedding of `p`'s cover graph.
    pub fn to_embedding(&self, p: &Poset) -> Result<PlaneEmbedding> {
        let cover = CoverGraph::of(p);
        let g = cover.graph.clone();
        let mut rot = vec![Vec::new(); g.len()];
        for (v, entries) in &self.rotation {
            let vi = p.index_of(v)?;
            for (w, dir) in entries {
                let wi = p.index_of(w)?;
                let ok = match dir.as_str() {
                    "up" => cover.is_up(vi, wi),
                    "down" => cover.is_up(wi, vi),
                    other => return Err(Error::Format(format!("unknown direction `{other}`"))),
                };
                if !ok {
                    return Err(Error::InvalidEmbedding(format!(
                        "`{v}`-`{w}` is not a `{dir}` cover edge"
                    )));
                }
                rot[vi].push(wi);
            }
        }
        let outer: Vec<usize> = self
            .outer_face
            .iter()
            .map(|l| p.index_of(l))
            .collect::<Result<_>>()?;
        let dart = (outer.len() >= 2).then(|| (outer[0], outer[1]));
        let emb = PlaneEmbedding::from_rotation(g, rot, dart)?;
        let walk: Vec<usize> = emb.outer_face_vertices();
        if dart.is_some() && walk != outer {
            return Err(Error::InvalidEmbedding(
                "outer_face is not a face walk".into(),
            ));
        }
        match &self.e_infinity {
            None => Ok(emb),
            Some(x0) => {
                let x = p.index_of(x0)?;
                match dart {
                    Some((a, b)) if a == x => {
                        let k = emb.position(a, b).expect("dart checked");
                        emb.with_e_infinity_corner(a, k)
                    }
                    Some(_) => Err(Error::InvalidEmbedding(
                        "outer_face must start at e_infinity".into(),
                    )),
                    None => emb.with_e_infinity_at(x),
                }
            }
        }
    }
}

pub fn embedding_to_json(emb: &PlaneEmbedding, p: &Poset) -> String {
    serde_json::to_string_pretty(&EmbeddingFile::of(emb, &CoverGraph::of(p))).expect("serializable")
}

pub fn embedding_from_json(s: &str, p: &Poset) -> Result<PlaneEmbedding> {
    serde_json::from_str::<EmbeddingFile>(s)?.to_embedding(p)
}

pub fn read_embedding(path: impl AsRef<Path>, p: &Poset) -> Result<PlaneEmbedding> {
    embedding_from_json(&fs::read_to_string(path)?, p)
}

/// `{"dimension": t, "extensions": [[..], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizerFile {
    pub dimension: usize,
    pub extensions: Vec<Vec<String>>,
}

impl RealizerFile {
    pub fn of(p: &Poset, r: &Realizer) -> Self {
        let extensions: Vec<Vec<String>> = r
            .extensions
            .iter()
            .map(|l| {
                l.as_slice()
                    .iter()
                    .map(|&v| p.label(v).to_string())
                    .collect()
            })
            .collect();
        RealizerFile {
            dimension: extensions.len(),
            extensions,
        }
    }
}

/// Labelled Lemma certificate: `{"x", "y", "w", "w_prime", "a", "b"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub x: String,
    pub y: String,
    pub w: Vec<String>,
    pub w_prime: Vec<String>,
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl CertificateFile {
    pub fn of(p: &Poset, c: &IntervalCertificate) -> Self {
        let l = |v: &[usize]| v.iter().map(|&i| p.label(i).to_string()).collect();
        CertificateFile {
            x: p.label(c.x).into(),
            y: p.label(c.y).into(),
            w: l(&c.w),
            w_prime: l(&c.w_prime),
            a: l(&c.a),
            b: l(&c.b),
        }
    }

    pub fn resolve(&self, p: &Poset) -> Result<IntervalCertificate> {
        let idx = |s: &str| {
            p.index_of(s)
                .map_err(|_| Error::MalformedCertificate(format!("unknown element `{s}`")))
        };
        let list = |v: &[String]| v.iter().map(|s| idx(s)).collect::<Result<Vec<_>>>();
        Ok(IntervalCertificate {
            x: idx(&self.x)?,
            y: idx(&self.y)?,
            w: list(&self.w)?,
            w_prime: list(&self.w_prime)?,
            a: list(&self.a)?,
            b: list(&self.b)?,
        })
    }
}

pub fn read_certificate(path: impl AsRef<Path>, p: &Poset) -> Result<IntervalCertificate> {
    let text = fs::read_to_string(path)?;
    let file: CertificateFile =
        serde_json::from_str(&text).map_err(|e| Error::MalformedCertificate(e.to_string()))?;
    file.resolve(p)
}

pub fn write_json<T: Serialize>(value: &T, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(value)? + "\n")?;
    Ok(())
}
