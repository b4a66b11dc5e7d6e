//! The Holt-Klee conditions: acyclicity, a unique source and sink on every
//! face, and `k` internally disjoint monotone paths across every `k`-face.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::face::{faces_from, Face};
use crate::flow::{max_disjoint_paths, separator_is_valid, PathPacking};
use crate::orientation::{Digraph, Orientation, TopoOrder};
use crate::par::{map_slice, Exec};
use crate::polytope::Polytope;

/// Evidence that an orientation is not Holt-Klee. Vertex lists hold polytope
/// vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Cycle(Vec<usize>),
    MultipleSources { face: Face, vertices: Vec<usize> },
    MultipleSinks { face: Face, vertices: Vec<usize> },
    PathDeficit {
        face: Face,
        k: usize,
        achieved: usize,
        /// Minimum separator between the face's source and sink.
        cut: Vec<usize>,
        direct: bool,
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Cycle(_) => "cycle",
            Violation::MultipleSources { .. } => "multiple_sources",
            Violation::MultipleSinks { .. } => "multiple_sinks",
            Violation::PathDeficit { .. } => "path_deficit",
        }
    }

    /// Single-line `kind key=value ...` record.
    pub fn describe(&self, p: Polytope) -> String {
        let names = |vs: &[usize]| {
            vs.iter()
                .map(|&v| p.vertex_name(v))
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut s = self.kind().to_string();
        match self {
            Violation::Cycle(c) => {
                let _ = write!(s, " face={} vertices={}", Face::whole(p), names(c));
            }
            Violation::MultipleSources { face, vertices } | Violation::MultipleSinks { face, vertices } => {
                let _ = write!(s, " face={face} vertices={}", names(vertices));
            }
            Violation::PathDeficit {
                face,
                k,
                achieved,
                cut,
                direct,
            } => {
                let _ = write!(
                    s,
                    " face={face} k={k} achieved={achieved} cut={} direct={direct}",
                    if cut.is_empty() { "-".to_string() } else { names(cut) }
                );
            }
        }
        s
    }

    /// Re-checks the certificate against `o` from scratch.
    pub fn validate(&self, o: &Orientation) -> bool {
        match self {
            Violation::Cycle(c) => o.digraph().is_cycle(c),
            Violation::MultipleSources { face, vertices } => {
                matches!(face_source_sink(o, face), Ok((src, _)) if src.len() > 1 && &src == vertices)
            }
            Violation::MultipleSinks { face, vertices } => {
                matches!(face_source_sink(o, face), Ok((_, snk)) if snk.len() > 1 && &snk == vertices)
            }
            Violation::PathDeficit {
                face,
                k,
                achieved,
                cut,
                direct,
            } => {
                if face.dim() != *k || achieved >= k {
                    return false;
                }
                let Ok(g) = o.face_subdigraph(face) else {
                    return false;
                };
                let Some((s, t)) = unique_terminals(&g) else {
                    return false;
                };
                let Some(local_cut) = cut
                    .iter()
                    .map(|v| g.vertices().iter().position(|w| w == v))
                    .collect::<Option<Vec<_>>>()
                else {
                    return false;
                };
                let packing = PathPacking {
                    count: *achieved,
                    cut: local_cut,
                    direct: *direct,
                };
                separator_is_valid(&g, s, t, &packing)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkVerdict {
    pub passed: bool,
    pub violation: Option<Violation>,
}

impl HkVerdict {
    fn pass() -> Self {
        HkVerdict {
            passed: true,
            violation: None,
        }
    }

    fn fail(v: Violation) -> Self {
        HkVerdict {
            passed: false,
            violation: Some(v),
        }
    }

    /// `HK: PASS` or `HK: FAIL <record>`.
    pub fn report(&self, p: Polytope) -> String {
        match &self.violation {
            None => "HK: PASS".to_string(),
            Some(v) => format!("HK: FAIL {}", v.describe(p)),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct HkOptions {
    /// On acyclic crosspolytope orientations every proper face is a
    /// transitive tournament, so only the whole polytope needs a flow check.
    pub simplex_fast_path: bool,
    pub exec: Exec,
}

impl HkOptions {
    pub fn sequential() -> Self {
        HkOptions {
            simplex_fast_path: false,
            exec: Exec::Sequential,
        }
    }
}

/// `Ok(())` if acyclic, otherwise a directed cycle of polytope vertices.
pub fn is_acyclic(o: &Orientation) -> std::result::Result<(), Vec<usize>> {
    match o.digraph().topological_order() {
        TopoOrder::Labels(_) => Ok(()),
        // whole digraph: local index = polytope vertex
        TopoOrder::Cycle(c) => Err(c),
    }
}

/// Sources and sinks of the face digraph, as polytope vertices.
pub fn face_source_sink(o: &Orientation, face: &Face) -> Result<(Vec<usize>, Vec<usize>)> {
    let g = o.face_subdigraph(face)?;
    let to_global = |l: Vec<usize>| l.into_iter().map(|i| g.vertex(i)).collect();
    Ok((to_global(g.sources()), to_global(g.sinks())))
}

fn unique_terminals(g: &Digraph) -> Option<(usize, usize)> {
    match (g.sources().as_slice(), g.sinks().as_slice()) {
        (&[s], &[t]) if s != t => Some((s, t)),
        _ => None,
    }
}

/// Maximum number of source-to-sink paths across `face`, pairwise disjoint
/// except at the endpoints.
pub fn disjoint_monotone_paths(o: &Orientation, face: &Face) -> Result<usize> {
    face_path_packing(o, face).map(|(_, p)| p.count)
}

fn face_path_packing(o: &Orientation, face: &Face) -> Result<(Digraph, PathPacking)> {
    let g = o.face_subdigraph(face)?;
    let (s, t) = unique_terminals(&g).ok_or(Error::NoUniqueSourceSink)?;
    let packing = max_disjoint_paths(&g, s, t);
    Ok((g, packing))
}

fn check_face(o: &Orientation, face: &Face) -> Option<Violation> {
    let g = o.face_subdigraph(face).expect("face of this polytope");
    let sinks = g.sinks();
    if sinks.len() != 1 {
        return Some(Violation::MultipleSinks {
            face: face.clone(),
            vertices: sinks.into_iter().map(|i| g.vertex(i)).collect(),
        });
    }
    let sources = g.sources();
    if sources.len() != 1 {
        return Some(Violation::MultipleSources {
            face: face.clone(),
            vertices: sources.into_iter().map(|i| g.vertex(i)).collect(),
        });
    }
    let k = face.dim();
    if k < 2 {
        return None;
    }
    let packing = max_disjoint_paths(&g, sources[0], sinks[0]);
    (packing.count < k).then(|| Violation::PathDeficit {
        face: face.clone(),
        k,
        achieved: packing.count,
        cut: packing.cut.iter().map(|&i| g.vertex(i)).collect(),
        direct: packing.direct,
    })
}

/// Faces the conditions are checked on, in reporting order.
fn checked_faces(p: Polytope, fast: bool) -> Vec<Face> {
    match p {
        // the two vertices of the 1-crosspolytope are antipodal, so its graph
        // has no edge to carry a source/sink condition
        Polytope::Cross(1) => Vec::new(),
        Polytope::Cross(_) if fast => vec![Face::whole(p)],
        _ => faces_from(p, 1),
    }
}

pub fn is_holt_klee(o: &Orientation) -> HkVerdict {
    is_holt_klee_with(o, HkOptions::sequential())
}

pub fn is_holt_klee_with(o: &Orientation, opts: HkOptions) -> HkVerdict {
    if let Err(cycle) = is_acyclic(o) {
        return HkVerdict::fail(Violation::Cycle(cycle));
    }
    let faces = checked_faces(o.polytope(), opts.simplex_fast_path);
    let first = if opts.exec.is_parallel() {
        map_slice(opts.exec, &faces, |f| check_face(o, f))
            .into_iter()
            .flatten()
            .next()
    } else {
        faces.iter().find_map(|f| check_face(o, f))
    };
    match first {
        None => HkVerdict::pass(),
        Some(v) => HkVerdict::fail(v),
    }
}
