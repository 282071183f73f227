//! Pieces and the concurrency relation between them.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A piece, identified by its position in the alphabet's declaration order.
///
/// The derived ordering is the declaration order, which is also the order
/// used for canonical words.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Piece(pub usize);

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// A finite set of named pieces with a symmetric, reflexive concurrency
/// relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceAlphabet {
    names: Vec<String>,
    index: HashMap<String, usize>,
    concurrent: Vec<FixedBitSet>,
}

impl PieceAlphabet {
    /// An alphabet where every piece is concurrent only with itself.
    pub fn new<I, S>(pieces: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = pieces.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicatePiece(name.clone()));
            }
        }
        let n = names.len();
        let concurrent = (0..n)
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(n);
                row.insert(i);
                row
            })
            .collect();
        Ok(Self {
            names,
            index,
            concurrent,
        })
    }

    /// Declares `pieces` and makes each listed pair concurrent.
    pub fn from_edges<I, S, E, T>(pieces: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let mut alphabet = Self::new(pieces)?;
        for (a, b) in edges {
            alphabet.add_edge(a.as_ref(), b.as_ref())?;
        }
        Ok(alphabet)
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let (a, b) = (self.lookup(a)?, self.lookup(b)?);
        self.connect(a, b);
        Ok(())
    }

    pub fn connect(&mut self, a: Piece, b: Piece) {
        self.concurrent[a.0].insert(b.0);
        self.concurrent[b.0].insert(a.0);
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn pieces(&self) -> impl Iterator<Item = Piece> + '_ {
        (0..self.names.len()).map(Piece)
    }

    pub fn name(&self, piece: Piece) -> &str {
        &self.names[piece.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn piece(&self, name: &str) -> Option<Piece> {
        self.index.get(name).copied().map(Piece)
    }

    pub fn lookup(&self, name: &str) -> Result<Piece> {
        self.piece(name)
            .ok_or_else(|| Error::UnknownPiece(name.to_string()))
    }

    pub fn contains(&self, piece: Piece) -> bool {
        piece.0 < self.names.len()
    }

    pub fn concurrent(&self, a: Piece, b: Piece) -> bool {
        self.concurrent[a.0].contains(b.0)
    }

    /// Concurrent pairs of distinct pieces, each listed once with the
    /// smaller piece first.
    pub fn edges(&self) -> Vec<(Piece, Piece)> {
        let mut out = Vec::new();
        for (i, row) in self.concurrent.iter().enumerate() {
            out.extend(row.ones().filter(|&j| j > i).map(|j| (Piece(i), Piece(j))));
        }
        out
    }

    /// The concurrency graph on all pieces.
    pub fn concurrency_graph(&self) -> ConcurrencyGraph {
        ConcurrencyGraph::induced(self, self.pieces())
    }
}

/// Simple graph on pieces with an edge between distinct concurrent pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcurrencyGraph {
    pub vertices: Vec<Piece>,
    pub edges: Vec<(Piece, Piece)>,
}

impl ConcurrencyGraph {
    /// The full subgraph of the concurrency graph on `vertices`.
    pub fn induced(alphabet: &PieceAlphabet, vertices: impl IntoIterator<Item = Piece>) -> Self {
        let vertices: Vec<Piece> = vertices
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &vertices[i + 1..] {
                if alphabet.concurrent(v, w) {
                    edges.push((v, w));
                }
            }
        }
        Self { vertices, edges }
    }

    fn neighbours(&self) -> HashMap<Piece, Vec<Piece>> {
        let mut adj: HashMap<Piece, Vec<Piece>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(v, w) in &self.edges {
            adj.entry(v).or_default().push(w);
            adj.entry(w).or_default().push(v);
        }
        for list in adj.values_mut() {
            list.sort_unstable();
        }
        adj
    }

    /// A simple cycle of length at least three, if one exists.
    ///
    /// Depth-first search from the smallest vertex with neighbours visited in
    /// ascending order; the cycle is reported from the ancestor closing it.
    pub fn find_circuit(&self) -> Option<Vec<Piece>> {
        let adj = self.neighbours();
        let mut visited = BTreeSet::new();
        let mut path = Vec::new();
        let mut on_path = HashMap::new();
        for &root in &self.vertices {
            if visited.contains(&root) {
                continue;
            }
            if let Some(c) = circuit_dfs(root, None, &adj, &mut visited, &mut path, &mut on_path) {
                return Some(c);
            }
        }
        None
    }

    pub fn is_circuit_free(&self) -> bool {
        self.find_circuit().is_none()
    }
}

fn circuit_dfs(
    v: Piece,
    parent: Option<Piece>,
    adj: &HashMap<Piece, Vec<Piece>>,
    visited: &mut BTreeSet<Piece>,
    path: &mut Vec<Piece>,
    on_path: &mut HashMap<Piece, usize>,
) -> Option<Vec<Piece>> {
    visited.insert(v);
    on_path.insert(v, path.len());
    path.push(v);
    for &w in &adj[&v] {
        if Some(w) == parent {
            continue;
        }
        if let Some(&start) = on_path.get(&w) {
            return Some(path[start..].to_vec());
        }
        if !visited.contains(&w) {
            if let Some(c) = circuit_dfs(w, Some(v), adj, visited, path, on_path) {
                return Some(c);
            }
        }
    }
    path.pop();
    on_path.remove(&v);
    None
}
