//! Simplicial complexes given by facets, and their Stanley-Reisner ideals.
//!
//! Faces are all subsets of facets (the empty set included). The
//! Stanley-Reisner ideal is generated by the square-free monomials of the
//! minimal non-faces.

use std::fmt;

use thiserror::Error;

use crate::monomial::{Monomial, MonomialIdeal};

/// Largest vertex count accepted by [`minimal_nonfaces`].
pub const MAX_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<String>>,
}

/// One problem found by [`validate_complex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnknownVertex {
        facet: Vec<String>,
        vertex: String,
    },
    RepeatedVertex {
        facet: Vec<String>,
        vertex: String,
    },
    DuplicateVertexName {
        vertex: String,
    },
    ContainedFacet {
        facet: Vec<String>,
        container: Vec<String>,
    },
    UncoveredVertex {
        vertex: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[String]| format!("{{{}}}", v.join(","));
        match self {
            Violation::UnknownVertex { facet, vertex } => {
                write!(f, "facet {} uses unknown vertex `{vertex}`", show(facet))
            }
            Violation::RepeatedVertex { facet, vertex } => {
                write!(f, "facet {} lists vertex `{vertex}` twice", show(facet))
            }
            Violation::DuplicateVertexName { vertex } => {
                write!(f, "vertex `{vertex}` is declared twice")
            }
            Violation::ContainedFacet { facet, container } => write!(
                f,
                "facet {} is contained in facet {}",
                show(facet),
                show(container)
            ),
            Violation::UncoveredVertex { vertex } => {
                write!(f, "vertex `{vertex}` lies in no facet")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("invalid simplicial complex: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("{vertices} vertices exceed the cap of {cap}")]
    TooManyVertices { vertices: usize, cap: usize },
}

impl SimplicialComplex {
    /// Stores the data as given; call [`validate_complex`] before use.
    pub fn new(vertices: Vec<String>, facets: Vec<Vec<String>>) -> Self {
        Self { vertices, facets }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<String>] {
        &self.facets
    }

    /// The full simplex on `vertices`.
    pub fn simplex(vertices: Vec<String>) -> Self {
        let facets = vec![vertices.clone()];
        Self { vertices, facets }
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Facets as vertex bitmasks. Only meaningful after validation.
    fn facet_masks(&self) -> Vec<u32> {
        self.facets
            .iter()
            .map(|f| {
                f.iter()
                    .filter_map(|v| self.index_of(v))
                    .fold(0u32, |m, i| m | (1 << i))
            })
            .collect()
    }

    /// True when `face` (vertex names) is a face of the complex.
    pub fn is_face(&self, face: &[&str]) -> bool {
        face.iter().all(|v| self.index_of(v).is_some())
            && (face.is_empty()
                || self
                    .facets
                    .iter()
                    .any(|f| face.iter().all(|v| f.iter().any(|w| w == v))))
    }

    /// Dimension `|F| - 1` of the largest facet; -1 for the complex {∅}.
    pub fn dimension(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }
}

fn is_face_mask(facets: &[u32], mask: u32) -> bool {
    mask == 0 || facets.iter().any(|&f| mask & f == mask)
}

/// Checks that facets name known vertices without repeats, form an antichain,
/// and cover every vertex. Every violation is reported.
pub fn validate_complex(c: &SimplicialComplex) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    for (i, v) in c.vertices.iter().enumerate() {
        if c.vertices[..i].contains(v) {
            violations.push(Violation::DuplicateVertexName { vertex: v.clone() });
        }
    }
    for facet in &c.facets {
        for (i, v) in facet.iter().enumerate() {
            if c.index_of(v).is_none() {
                violations.push(Violation::UnknownVertex {
                    facet: facet.clone(),
                    vertex: v.clone(),
                });
            } else if facet[..i].contains(v) {
                violations.push(Violation::RepeatedVertex {
                    facet: facet.clone(),
                    vertex: v.clone(),
                });
            }
        }
    }
    for (i, f) in c.facets.iter().enumerate() {
        for (j, g) in c.facets.iter().enumerate() {
            let contained = f.iter().all(|v| g.contains(v));
            // equal facets: report the later copy only
            let equal = contained && g.iter().all(|v| f.contains(v));
            if i != j && contained && (!equal || j < i) {
                violations.push(Violation::ContainedFacet {
                    facet: f.clone(),
                    container: g.clone(),
                });
                break;
            }
        }
    }
    for v in &c.vertices {
        if !c.facets.iter().any(|f| f.contains(v)) {
            violations.push(Violation::UncoveredVertex { vertex: v.clone() });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Vertex index lists of the minimal non-faces, ascending by size and then
/// lexicographically in vertex order.
fn minimal_nonface_masks(c: &SimplicialComplex) -> Result<Vec<u32>, ComplexError> {
    validate_complex(c).map_err(ComplexError::Invalid)?;
    let n = c.vertices.len();
    if n > MAX_VERTICES {
        return Err(ComplexError::TooManyVertices {
            vertices: n,
            cap: MAX_VERTICES,
        });
    }
    let facets = c.facet_masks();
    let mut found: Vec<u32> = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if found.iter().any(|&m| m & !mask == 0) {
            continue;
        }
        if is_face_mask(&facets, mask) {
            continue;
        }
        let mut bits = mask;
        let mut minimal = true;
        while bits != 0 {
            let low = bits & bits.wrapping_neg();
            if !is_face_mask(&facets, mask & !low) {
                minimal = false;
                break;
            }
            bits &= !low;
        }
        if minimal {
            found.push(mask);
        }
    }
    let key = |m: &u32| {
        let idx: Vec<u32> = (0..n as u32).filter(|i| m & (1 << i) != 0).collect();
        (idx.len(), idx)
    };
    found.sort_by_key(key);
    Ok(found)
}

/// The minimal non-faces as lists of vertex names.
pub fn minimal_nonfaces(c: &SimplicialComplex) -> Result<Vec<Vec<String>>, ComplexError> {
    Ok(minimal_nonface_masks(c)?
        .into_iter()
        .map(|m| {
            (0..c.vertices.len())
                .filter(|i| m & (1 << i) != 0)
                .map(|i| c.vertices[i].clone())
                .collect()
        })
        .collect())
}

/// The Stanley-Reisner ideal in one variable per vertex, one square-free
/// generator per minimal non-face.
pub fn stanley_reisner_ideal(c: &SimplicialComplex) -> Result<MonomialIdeal, ComplexError> {
    let n = c.vertices.len();
    let gens = minimal_nonface_masks(c)?
        .into_iter()
        .map(|m| {
            let e = (0..n).map(|i| (m >> i) & 1).collect();
            Monomial::new(e).expect("square-free")
        })
        .collect();
    Ok(MonomialIdeal::new(n, gens).expect("uniform arity"))
}
