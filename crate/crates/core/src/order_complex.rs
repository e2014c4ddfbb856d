//! Faces of the order complex of the pure-diagram poset: facets, the
//! boundary test for faces missing one vertex, and coordinates of a diagram
//! in the basis given by a chain.

use num_traits::Zero;

use crate::diagram::{BettiDiagram, ShiftBounds};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::pure::{self, enumerate_poset, maximal_chains_with, pure_diagram, DegreeSequence};
use crate::rational::Rational;

/// A chain of degree sequences, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Face {
    chain: Vec<DegreeSequence>,
}

impl Face {
    pub fn new(chain: Vec<DegreeSequence>) -> Result<Self> {
        if !pure::is_chain(&chain) {
            return Err(Error::InvalidDecomposition(
                "face elements do not form a chain".to_string(),
            ));
        }
        Ok(Self { chain })
    }

    pub fn chain(&self) -> &[DegreeSequence] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// Runs from `low` to `high` through cover relations.
    pub fn is_maximal_in(&self, bounds: &ShiftBounds) -> bool {
        self.chain.first() == Some(bounds.low())
            && self.chain.last() == Some(bounds.high())
            && self
                .chain
                .windows(2)
                .all(|w| w[1].weight() == w[0].weight() + 1)
    }
}

pub fn facets(bounds: &ShiftBounds) -> Result<Vec<Face>> {
    facets_with(bounds, Exec::default())
}

pub fn facets_with(bounds: &ShiftBounds, exec: Exec) -> Result<Vec<Face>> {
    let view = enumerate_poset(bounds)?;
    Ok(maximal_chains_with(&view, exec)
        .into_iter()
        .map(|chain| Face { chain })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryCase {
    /// The first or last vertex was removed.
    EndpointRemoved,
    /// The neighbours differ by two in a single position.
    OnePositionGap,
    /// The neighbours differ in positions `k, k+1` and the lower one has
    /// consecutive values there.
    AdjacentStaircase,
    Interior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryVerdict {
    pub on_boundary: bool,
    pub case: BoundaryCase,
    /// `(k, j)`: the face spans the diagrams with a zero entry at `(k, j)`.
    /// Only set for endpoint and one-position cases.
    pub halfspace: Option<(usize, i64)>,
}

fn differing_positions(a: &DegreeSequence, b: &DegreeSequence) -> Vec<usize> {
    (0..a.len()).filter(|&k| a[k] != b[k]).collect()
}

/// Decides whether removing vertex `removed_index` from the maximal chain
/// `face` leaves a face contained in only one facet.
pub fn classify_boundary(
    face: &Face,
    removed_index: usize,
    bounds: &ShiftBounds,
) -> Result<BoundaryVerdict> {
    if !face.is_maximal_in(bounds) {
        return Err(Error::NotMaximalChain);
    }
    let chain = face.chain();
    let n = chain.len();
    if removed_index >= n {
        return Err(Error::IndexOutOfRange {
            index: removed_index,
            len: n,
        });
    }
    let endpoint = |k: usize, removed: &DegreeSequence| BoundaryVerdict {
        on_boundary: true,
        case: BoundaryCase::EndpointRemoved,
        halfspace: Some((k, removed[k])),
    };
    if n == 1 {
        return Ok(endpoint(0, &chain[0]));
    }
    if removed_index == 0 || removed_index == n - 1 {
        let (a, b) = if removed_index == 0 {
            (&chain[0], &chain[1])
        } else {
            (&chain[n - 2], &chain[n - 1])
        };
        let k = differing_positions(a, b)[0];
        return Ok(endpoint(k, &chain[removed_index]));
    }
    let prev = &chain[removed_index - 1];
    let next = &chain[removed_index + 1];
    let verdict = match *differing_positions(prev, next).as_slice() {
        [k] => BoundaryVerdict {
            on_boundary: true,
            case: BoundaryCase::OnePositionGap,
            halfspace: Some((k, chain[removed_index][k])),
        },
        [k, l] if l == k + 1 && prev[l] == prev[k] + 1 => BoundaryVerdict {
            on_boundary: true,
            case: BoundaryCase::AdjacentStaircase,
            halfspace: None,
        },
        _ => BoundaryVerdict {
            on_boundary: false,
            case: BoundaryCase::Interior,
            halfspace: None,
        },
    };
    Ok(verdict)
}

/// One row of a boundary table: facet index, removed vertex, verdict.
pub type BoundaryRow = (usize, usize, BoundaryVerdict);

/// Classifies every codimension-one face of every facet.
pub fn boundary_table(bounds: &ShiftBounds, exec: Exec) -> Result<Vec<BoundaryRow>> {
    let faces = facets_with(bounds, exec)?;
    let indexed: Vec<(usize, &Face)> = faces.iter().enumerate().collect();
    let rows = exec.flat_map(&indexed, |&(f, face)| {
        (0..face.len())
            .map(|i| {
                (
                    f,
                    i,
                    classify_boundary(face, i, bounds).expect("facet is maximal"),
                )
            })
            .collect()
    });
    Ok(rows)
}

/// Coordinates of `d` in the basis `pi(c)` for `c` in `face`, in chain order.
///
/// Each vertex has a position where it is non-zero and every later vertex is
/// zero, so the coordinates are read off one vertex at a time.
pub fn chain_coordinates(d: &BettiDiagram, face: &Face) -> Result<Vec<Rational>> {
    if let Some(c) = face.chain().first() {
        if c.codim() != d.codim() {
            return Err(Error::CodimMismatch(d.codim(), c.codim()));
        }
    }
    let chain = face.chain();
    let mut rest = d.clone();
    let mut coords = Vec::with_capacity(chain.len());
    for (m, c) in chain.iter().enumerate() {
        let k = chain
            .get(m + 1)
            .map_or(0, |next| differing_positions(c, next)[0]);
        let pi = pure_diagram(c);
        let x = rest.get(k, c[k]) / pi.get(k, c[k]);
        if !x.is_zero() {
            rest = rest.sub(&pi.scale(&x))?;
        }
        coords.push(x);
    }
    if rest.is_zero() {
        Ok(coords)
    } else {
        Err(Error::NotInSpan {
            residual: Box::new(rest),
        })
    }
}
