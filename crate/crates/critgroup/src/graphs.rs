//! Multigraphs with integer edge multiplicities, the constructions that
//! generate every family swept by the harness (edge duplication, cones,
//! two-part coupled families), and their exact Laplacians.
//!
//! Vertex order is fixed by construction — for coupled families the left
//! part comes first, then the right part, and a cone apex is always appended
//! last and marked as the sink — so matrix-level comparisons against the
//! parametric families are entrywise, not merely up to permutation.

use crate::exactlin::IntMatrix;
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("{family} needs at least {min} vertices, got {got}")]
    UndersizedFamily { family: &'static str, min: u64, got: u64 },
    #[error("edge duplication factor must be >= 1")]
    ZeroDuplication,
    #[error("graph has no sink; reduced Laplacian undefined")]
    NoSink,
    #[error("sink index {sink} out of range for {vertices} vertices")]
    SinkOutOfRange { sink: usize, vertices: usize },
    #[error("multiplicity matrix must be symmetric with zero diagonal")]
    MalformedMultiplicity,
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

/// Whether a part of a coupled family carries its internal complete graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartKind {
    /// Independent set (the lowercase `m` block).
    Empty,
    /// Clique (the uppercase `M` block).
    Clique,
}

/// Cross-edge pattern between the two parts of a coupled family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coupling {
    /// Every left-right pair.
    AllPairs,
    /// Every left-right pair except the matching `i = j`.
    AllButMatching,
    /// Only the perfect matching `i = j`.
    Matching,
}

/// Finite multigraph: symmetric nonnegative edge multiplicities, no loops,
/// and an optional distinguished sink vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    vertex_count: usize,
    mult: Vec<u64>,
    sink: Option<usize>,
}

impl Multigraph {
    pub fn from_multiplicity(
        vertex_count: usize,
        mult: Vec<u64>,
        sink: Option<usize>,
    ) -> Result<Self, GraphError> {
        if mult.len() != vertex_count * vertex_count {
            return Err(GraphError::MalformedMultiplicity);
        }
        for i in 0..vertex_count {
            if mult[i * vertex_count + i] != 0 {
                return Err(GraphError::MalformedMultiplicity);
            }
            for j in 0..i {
                if mult[i * vertex_count + j] != mult[j * vertex_count + i] {
                    return Err(GraphError::MalformedMultiplicity);
                }
            }
        }
        if let Some(s) = sink {
            if s >= vertex_count {
                return Err(GraphError::SinkOutOfRange { sink: s, vertices: vertex_count });
            }
        }
        Ok(Multigraph { vertex_count, mult, sink })
    }

    fn simple(vertex_count: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut mult = vec![0u64; vertex_count * vertex_count];
        for i in 0..vertex_count {
            for j in 0..vertex_count {
                if i != j && edge(i.min(j), i.max(j)) {
                    mult[i * vertex_count + j] = 1;
                }
            }
        }
        Multigraph { vertex_count, mult, sink: None }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn sink(&self) -> Option<usize> {
        self.sink
    }

    pub fn with_sink(mut self, sink: usize) -> Result<Self, GraphError> {
        if sink >= self.vertex_count {
            return Err(GraphError::SinkOutOfRange { sink, vertices: self.vertex_count });
        }
        self.sink = Some(sink);
        Ok(self)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u64 {
        self.mult[u * self.vertex_count + v]
    }

    /// Sum of edge multiplicities at `u`.
    pub fn degree(&self, u: usize) -> u64 {
        (0..self.vertex_count).map(|v| self.multiplicity(u, v)).sum()
    }

    /// Replaces every edge by `l` parallel copies; scales the Laplacian by `l`.
    pub fn duplicate(&self, l: u64) -> Result<Self, GraphError> {
        if l == 0 {
            return Err(GraphError::ZeroDuplication);
        }
        Ok(Multigraph {
            vertex_count: self.vertex_count,
            mult: self.mult.iter().map(|m| m * l).collect(),
            sink: self.sink,
        })
    }

    /// Appends an apex joined to every existing vertex by `k` parallel edges
    /// and marks it as the sink. `k = 0` leaves the apex isolated, which is
    /// allowed: the critical group then picks up a free factor.
    pub fn cone(&self, k: u64) -> Self {
        let n = self.vertex_count;
        let nn = n + 1;
        let mut mult = vec![0u64; nn * nn];
        for i in 0..n {
            for j in 0..n {
                mult[i * nn + j] = self.mult[i * n + j];
            }
            mult[i * nn + n] = k;
            mult[n * nn + i] = k;
        }
        Multigraph { vertex_count: nn, mult, sink: Some(n) }
    }

    /// Degree matrix minus adjacency, over exact integers.
    pub fn laplacian(&self) -> IntMatrix {
        IntMatrix::from_fn(self.vertex_count, self.vertex_count, |i, j| {
            if i == j {
                BigInt::from(self.degree(i))
            } else {
                -BigInt::from(self.multiplicity(i, j))
            }
        })
    }

    /// Laplacian with the sink row and column removed.
    pub fn reduced_laplacian(&self) -> Result<IntMatrix, GraphError> {
        let s = self.sink.ok_or(GraphError::NoSink)?;
        Ok(self.laplacian().delete_row_col(s, s))
    }

    /// Number of spanning trees, as the determinant of the reduced
    /// Laplacian. A disconnected graph yields 0; that is a result, not an
    /// error.
    pub fn spanning_tree_count(&self) -> Result<BigInt, GraphError> {
        let rl = self.reduced_laplacian()?;
        let d = crate::exactlin::det(&rl).expect("reduced Laplacian is square");
        debug_assert!(d >= BigInt::from(0));
        Ok(d)
    }
}

/// Path on `n >= 2` vertices, edges between consecutive indices.
pub fn path(n: u64) -> Result<Multigraph, GraphError> {
    if n < 2 {
        return Err(GraphError::UndersizedFamily { family: "path", min: 2, got: n });
    }
    Ok(Multigraph::simple(n as usize, |i, j| j == i + 1))
}

/// Cycle on `n >= 3` vertices; also closes `n-1` back to 0.
pub fn cycle(n: u64) -> Result<Multigraph, GraphError> {
    if n < 3 {
        return Err(GraphError::UndersizedFamily { family: "cycle", min: 3, got: n });
    }
    let last = n as usize - 1;
    Ok(Multigraph::simple(n as usize, |i, j| j == i + 1 || (i == 0 && j == last)))
}

/// Complete graph on `n >= 2` vertices.
pub fn complete(n: u64) -> Result<Multigraph, GraphError> {
    if n < 2 {
        return Err(GraphError::UndersizedFamily { family: "complete", min: 2, got: n });
    }
    Ok(Multigraph::simple(n as usize, |_, _| true))
}

/// Two-part coupled family on `2m` vertices (`m >= 2`): vertices `0..m` form
/// the left part, `m..2m` the right part, each part internally empty or
/// complete, with cross edges given by the coupling pattern.
pub fn coupled(
    coupling: Coupling,
    left: PartKind,
    right: PartKind,
    m: u64,
) -> Result<Multigraph, GraphError> {
    if m < 2 {
        return Err(GraphError::UndersizedFamily { family: "coupled", min: 2, got: m });
    }
    let m = m as usize;
    Ok(Multigraph::simple(2 * m, |a, b| {
        // a < b by construction
        if b < m {
            left == PartKind::Clique
        } else if a >= m {
            right == PartKind::Clique
        } else {
            let (i, j) = (a, b - m);
            match coupling {
                Coupling::AllPairs => true,
                Coupling::AllButMatching => i != j,
                Coupling::Matching => i == j,
            }
        }
    }))
}

/// One of the named graph families the harness sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Coupled { coupling: Coupling, left: PartKind, right: PartKind },
}

/// A concrete family member: base size, edge duplication, cone multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: Family,
    /// Path/cycle/complete order, or part size of a coupled family.
    pub size: u64,
    /// Parallel-edge multiplier, `>= 1`.
    pub duplication: u64,
    /// Cone edge multiplicity, `0` for an isolated apex.
    pub cone: u64,
}

impl FamilyInstance {
    /// Cone of the duplicated base graph, sink last.
    pub fn build(&self) -> Result<Multigraph, GraphError> {
        let base = match self.family {
            Family::Path => path(self.size)?,
            Family::Cycle => cycle(self.size)?,
            Family::Complete => complete(self.size)?,
            Family::Coupled { coupling, left, right } => coupled(coupling, left, right, self.size)?,
        };
        Ok(base.duplicate(self.duplication)?.cone(self.cone))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path => write!(f, "path"),
            Family::Cycle => write!(f, "cycle"),
            Family::Complete => write!(f, "complete"),
            Family::Coupled { coupling, left, right } => {
                let c = match coupling {
                    Coupling::AllPairs => 'K',
                    Coupling::AllButMatching => 'L',
                    Coupling::Matching => 'M',
                };
                let part = |p: &PartKind| if *p == PartKind::Clique { 'M' } else { 'm' };
                write!(f, "{}{}{}", c, part(left), part(right))
            }
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Accepts `path`, `cycle`, `complete` (with optional `cone-` prefix)
    /// and the coupled ids `Kmm`, `LmM`, `MMM`, ... — coupling letter first,
    /// then the two part kinds, case significant.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        match s.strip_prefix("cone-").unwrap_or(s) {
            "path" => return Ok(Family::Path),
            "cycle" => return Ok(Family::Cycle),
            "complete" => return Ok(Family::Complete),
            _ => {}
        }
        let chars: Vec<char> = s.chars().collect();
        if chars.len() == 3 {
            let coupling = match chars[0] {
                'K' | 'k' => Some(Coupling::AllPairs),
                'L' | 'l' => Some(Coupling::AllButMatching),
                _ => {
                    // an initial `M`/`m` is ambiguous with the part kinds, so
                    // only the exact uppercase coupling letter is accepted
                    if chars[0] == 'M' { Some(Coupling::Matching) } else { None }
                }
            };
            let part = |c: char| match c {
                'm' => Some(PartKind::Empty),
                'M' => Some(PartKind::Clique),
                _ => None,
            };
            if let (Some(coupling), Some(left), Some(right)) =
                (coupling, part(chars[1]), part(chars[2]))
            {
                return Ok(Family::Coupled { coupling, left, right });
            }
        }
        Err(GraphError::UnknownFamily(s.to_string()))
    }
}
