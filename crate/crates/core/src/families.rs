//! Generators for the twelve cycle-derived families.
//!
//! Every generator uses the same vertex layout so that explicit colourings
//! can be written down by position:
//!
//! * rim (or inner cycle) vertices `v_1..v_n` are `0..n`, with `v_i` at `i - 1`;
//! * outer vertices `u_1..u_n`, when present, are `n..2n`, with `u_i` at `n + i - 1`;
//! * the centre, when present, is the last vertex.
//!
//! Rim and outer cycles join index `i` to `i + 1 (mod n)`. In the
//! triangle-based families (sunflower, closed sunflower, blossom,
//! antiprism) outer vertex `u_i` is adjacent to rim vertices `v_{i-1}` and
//! `v_i`, indices mod n. For pendant-based families (helm, closed helm,
//! flower) and the prism in the djembe, `u_i` is adjacent to `v_i` only.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} needs n >= {min}, got {n}")]
    ParameterTooSmall { family: Family, n: usize, min: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    Path,
    Cycle,
    Wheel,
    DoubleWheel,
    Helm,
    ClosedHelm,
    Flower,
    Djembe,
    Sunflower,
    ClosedSunflower,
    Antiprism,
    Blossom,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Path,
        Family::Cycle,
        Family::Wheel,
        Family::DoubleWheel,
        Family::Helm,
        Family::ClosedHelm,
        Family::Flower,
        Family::Djembe,
        Family::Sunflower,
        Family::ClosedSunflower,
        Family::Antiprism,
        Family::Blossom,
    ];

    pub fn min_order(self) -> usize {
        match self {
            Family::Path => 1,
            _ => 3,
        }
    }

    /// Lower-case name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::DoubleWheel => "double-wheel",
            Family::Helm => "helm",
            Family::ClosedHelm => "closed-helm",
            Family::Flower => "flower",
            Family::Djembe => "djembe",
            Family::Sunflower => "sunflower",
            Family::ClosedSunflower => "closed-sunflower",
            Family::Antiprism => "antiprism",
            Family::Blossom => "blossom",
        }
    }

    /// Conventional symbol for the member of order `n`, e.g. `W_6` for the
    /// wheel with a 5-vertex rim.
    pub fn symbol(self, n: usize) -> String {
        match self {
            Family::Path => format!("P_{n}"),
            Family::Cycle => format!("C_{n}"),
            Family::Wheel => format!("W_{}", n + 1),
            Family::DoubleWheel => format!("DW_{n}"),
            Family::Helm => format!("H_{n}"),
            Family::ClosedHelm => format!("CH_{n}"),
            Family::Flower => format!("F_{n}"),
            Family::Djembe => format!("Dj_{n}"),
            Family::Sunflower => format!("SF_{n}"),
            Family::ClosedSunflower => format!("CSF_{n}"),
            Family::Antiprism => format!("A_{n}"),
            Family::Blossom => format!("Bl_{n}"),
        }
    }

    fn has_outer(self) -> bool {
        !matches!(self, Family::Path | Family::Cycle | Family::Wheel)
    }

    fn has_centre(self) -> bool {
        !matches!(self, Family::Path | Family::Cycle | Family::Antiprism)
    }

    /// Total vertex count of the member of order `n`.
    pub fn vertex_count(self, n: usize) -> usize {
        n + if self.has_outer() { n } else { 0 } + usize::from(self.has_centre())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Family::ALL
            .into_iter()
            .find(|f| f.name().replace('-', "") == key)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Result<Self, FamilyError> {
        if n < family.min_order() {
            return Err(FamilyError::ParameterTooSmall {
                family,
                n,
                min: family.min_order(),
            });
        }
        Ok(FamilySpec { family, n })
    }
}

/// Named vertex groups of a generated graph. Together they partition
/// `0..total`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexLayout {
    pub rim: Range<usize>,
    pub outer: Option<Range<usize>>,
    pub centre: Option<usize>,
}

impl VertexLayout {
    pub fn total(&self) -> usize {
        self.rim.len() + self.outer.as_ref().map_or(0, |r| r.len()) + usize::from(self.centre.is_some())
    }
}

pub fn vertex_layout(spec: FamilySpec) -> Result<VertexLayout, FamilyError> {
    let FamilySpec { family, n } = FamilySpec::new(spec.family, spec.n)?;
    let outer = family.has_outer().then(|| n..2 * n);
    let centre = family
        .has_centre()
        .then(|| n + outer.as_ref().map_or(0, |r| r.len()));
    Ok(VertexLayout {
        rim: 0..n,
        outer,
        centre,
    })
}

pub fn generate(spec: FamilySpec) -> Result<Graph, FamilyError> {
    let layout = vertex_layout(spec)?;
    let n = spec.n;
    let total = layout.total();
    let rim = |i: usize| i % n;
    let outer = |i: usize| n + i % n;
    let centre = layout.centre.unwrap_or(usize::MAX);

    let mut edges = Vec::new();
    if spec.family == Family::Path {
        edges.extend((1..n).map(|i| (i - 1, i)));
    } else {
        edges.extend((0..n).map(|i| (rim(i), rim(i + 1))));
    }

    match spec.family {
        Family::Path | Family::Cycle => {}
        Family::Wheel => {
            edges.extend((0..n).map(|i| (rim(i), centre)));
        }
        Family::DoubleWheel => {
            edges.extend((0..n).map(|i| (outer(i), outer(i + 1))));
            edges.extend((0..n).map(|i| (rim(i), centre)));
            edges.extend((0..n).map(|i| (outer(i), centre)));
        }
        Family::Helm | Family::ClosedHelm | Family::Flower => {
            edges.extend((0..n).map(|i| (rim(i), centre)));
            edges.extend((0..n).map(|i| (rim(i), outer(i))));
            if spec.family == Family::ClosedHelm {
                edges.extend((0..n).map(|i| (outer(i), outer(i + 1))));
            }
            if spec.family == Family::Flower {
                edges.extend((0..n).map(|i| (outer(i), centre)));
            }
        }
        Family::Djembe => {
            edges.extend((0..n).map(|i| (outer(i), outer(i + 1))));
            edges.extend((0..n).map(|i| (rim(i), outer(i))));
            edges.extend((0..n).map(|i| (rim(i), centre)));
            edges.extend((0..n).map(|i| (outer(i), centre)));
        }
        Family::Sunflower | Family::ClosedSunflower | Family::Blossom | Family::Antiprism => {
            // u_i sits on the rim edge v_{i-1} v_i.
            edges.extend((0..n).map(|i| (outer(i), rim(i + n - 1))));
            edges.extend((0..n).map(|i| (outer(i), rim(i))));
            if spec.family != Family::Antiprism {
                edges.extend((0..n).map(|i| (rim(i), centre)));
            }
            if spec.family != Family::Sunflower {
                edges.extend((0..n).map(|i| (outer(i), outer(i + 1))));
            }
            if spec.family == Family::Blossom {
                edges.extend((0..n).map(|i| (outer(i), centre)));
            }
        }
    }

    Ok(Graph::new(total, edges).expect("family layouts produce simple graphs"))
}
