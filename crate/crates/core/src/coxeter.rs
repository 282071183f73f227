//! Coxeter graphs and heaps of fully commutative elements.
//!
//! Group elements are never multiplied: a fully commutative element is
//! represented only by its heap over the concurrency relation
//! `s C t <=> m(s, t) != 2`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::alphabet::{Piece, PieceAlphabet};
use crate::error::{Error, Result};
use crate::heap::{Elem, Heap};

/// Bond label `m(s, t)` of an edge; absent edges mean `m = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    pub fn finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => f.write_str("inf"),
        }
    }
}

/// One of the irreducible FC-finite families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        Some(match s {
            "A" => Family::A,
            "B" => Family::B,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "H" => Family::H,
            "I2" => Family::I2,
            _ => return None,
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::H => "H",
            Family::I2 => "I2",
        })
    }
}

/// Generators with bonds over unordered pairs. Generator `i` becomes
/// piece `Piece(i)` of the induced alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    names: Vec<String>,
    bonds: BTreeMap<(usize, usize), Bond>,
}

fn key(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

impl CoxeterGraph {
    /// Generators with every pair commuting.
    pub fn new<I, S>(generators: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = generators.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicatePiece(n.clone()));
            }
        }
        Ok(Self {
            names,
            bonds: BTreeMap::new(),
        })
    }

    /// Generators `"1"..="n"`.
    pub fn numbered(n: usize) -> Self {
        Self::new((1..=n).map(|i| i.to_string())).expect("distinct names")
    }

    pub fn add_bond(&mut self, a: &str, b: &str, bond: Bond) -> Result<()> {
        let (i, j) = (self.lookup(a)?, self.lookup(b)?);
        self.set_bond(i, j, bond)
    }

    pub fn set_bond(&mut self, i: usize, j: usize, bond: Bond) -> Result<()> {
        if i == j {
            return Err(Error::SelfBond(self.names[i].clone()));
        }
        if let Bond::Finite(m) = bond {
            if m < 3 {
                return Err(Error::InvalidBond(m));
            }
        }
        self.bonds.insert(key(i, j), bond);
        Ok(())
    }

    fn with_path_bonds(n: usize, special: &[(usize, u32)]) -> Self {
        let mut g = Self::numbered(n);
        for i in 1..n {
            let m = special
                .iter()
                .find(|&&(edge, _)| edge == i)
                .map_or(3, |&(_, m)| m);
            g.set_bond(i - 1, i, Bond::Finite(m)).expect("valid bond");
        }
        g
    }

    /// Path `1 - 2 - ... - n`.
    pub fn type_a(n: usize) -> Self {
        Self::with_path_bonds(n, &[])
    }

    /// Path with `m(1, 2) = 4`.
    pub fn type_b(n: usize) -> Self {
        Self::with_path_bonds(n, &[(1, 4)])
    }

    /// `1` and `2` both bonded to `3`, then the path `3 - 4 - ... - n`.
    pub fn type_d(n: usize) -> Self {
        let mut g = Self::numbered(n);
        g.set_bond(0, 2, Bond::Finite(3)).expect("valid bond");
        g.set_bond(1, 2, Bond::Finite(3)).expect("valid bond");
        for i in 3..n {
            g.set_bond(i - 1, i, Bond::Finite(3)).expect("valid bond");
        }
        g
    }

    /// Path `1 - 3 - 4 - ... - n` with `2` attached to `4`.
    pub fn type_e(n: usize) -> Self {
        let mut g = Self::numbered(n);
        g.set_bond(0, 2, Bond::Finite(3)).expect("valid bond");
        g.set_bond(1, 3, Bond::Finite(3)).expect("valid bond");
        for i in 3..n {
            g.set_bond(i - 1, i, Bond::Finite(3)).expect("valid bond");
        }
        g
    }

    /// Path with `m(2, 3) = 4`.
    pub fn type_f(n: usize) -> Self {
        Self::with_path_bonds(n, &[(2, 4)])
    }

    /// Path with `m(1, 2) = 5`.
    pub fn type_h(n: usize) -> Self {
        Self::with_path_bonds(n, &[(1, 5)])
    }

    /// Two generators with `m(1, 2) = m`.
    pub fn dihedral(m: Bond) -> Result<Self> {
        let mut g = Self::numbered(2);
        g.set_bond(0, 1, m)?;
        Ok(g)
    }

    /// Cycle `1 - 2 - ... - n - 1` with all bonds 3.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::type_a(n);
        if n >= 3 {
            g.set_bond(n - 1, 0, Bond::Finite(3)).expect("valid bond");
        }
        g
    }

    /// The standard graph of a family; for `I2` the parameter is `m`.
    pub fn from_family(family: Family, n: u32) -> Result<Self> {
        let size = n as usize;
        let ok = match family {
            Family::A => n >= 1,
            Family::B => n >= 2,
            Family::D => n >= 4,
            Family::E => n >= 6,
            Family::F => n >= 4,
            Family::H => n >= 3,
            Family::I2 => n >= 3,
        };
        if !ok {
            return Err(Error::UnknownFamily(family.to_string(), n));
        }
        Ok(match family {
            Family::A => Self::type_a(size),
            Family::B => Self::type_b(size),
            Family::D => Self::type_d(size),
            Family::E => Self::type_e(size),
            Family::F => Self::type_f(size),
            Family::H => Self::type_h(size),
            Family::I2 => Self::dihedral(Bond::Finite(n))?,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn bond(&self, i: usize, j: usize) -> Option<Bond> {
        self.bonds.get(&key(i, j)).copied()
    }

    /// Bonds `((i, j), m)` with `i < j`.
    pub fn bonds(&self) -> impl Iterator<Item = ((usize, usize), Bond)> + '_ {
        self.bonds.iter().map(|(&k, &b)| (k, b))
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&j| j != i && self.bond(i, j).is_some())
            .collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbours(i).len()
    }

    /// Full subgraph on `vertices`, which keep their names and relative order.
    pub fn full_subgraph(&self, vertices: &[usize]) -> CoxeterGraph {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let position: HashMap<usize, usize> =
            keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let bonds = self
            .bonds
            .iter()
            .filter_map(|(&(i, j), &b)| Some((key(*position.get(&i)?, *position.get(&j)?), b)))
            .collect();
        CoxeterGraph {
            names: keep.iter().map(|&v| self.names[v].clone()).collect(),
            bonds,
        }
    }

    /// Vertex sets of connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for root in 0..self.len() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

/// The alphabet of generators with `s C t` iff `m(s, t) != 2`.
pub fn concurrency_from_coxeter(g: &CoxeterGraph) -> PieceAlphabet {
    let mut alphabet = PieceAlphabet::new(g.names().iter().cloned()).expect("distinct generators");
    for ((i, j), _) in g.bonds() {
        alphabet.connect(Piece(i), Piece(j));
    }
    alphabet
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FcViolationKind {
    AlternatingConvexChain,
    EqualLabelCover,
}

impl fmt::Display for FcViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FcViolationKind::AlternatingConvexChain => "AlternatingConvexChain",
            FcViolationKind::EqualLabelCover => "EqualLabelCover",
        })
    }
}

/// Why a heap is not the heap of a fully commutative element. The witness
/// is the offending chain, bottom to top, or the offending cover pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FcViolation {
    pub kind: FcViolationKind,
    pub witness: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FcCheck {
    FullyCommutative,
    Violation(FcViolation),
}

impl FcCheck {
    pub fn is_fc(&self) -> bool {
        matches!(self, FcCheck::FullyCommutative)
    }
}

/// Checks whether `heap` is the heap of a fully commutative element of
/// the Coxeter group of `g`.
pub fn is_fc_heap(heap: &Heap, g: &CoxeterGraph) -> Result<FcCheck> {
    if **heap.alphabet() != concurrency_from_coxeter(g) {
        return Err(Error::AlphabetMismatch);
    }
    Ok(match find_fc_violation(heap, g) {
        None => FcCheck::FullyCommutative,
        Some(v) => FcCheck::Violation(v),
    })
}

/// Like [`is_fc_heap`] without the alphabet check; the heap's pieces must
/// be the generators of `g` in order.
pub fn find_fc_violation(heap: &Heap, g: &CoxeterGraph) -> Option<FcViolation> {
    if let Some(&(a, b)) = heap
        .covers()
        .iter()
        .find(|&&(a, b)| heap.label(a) == heap.label(b))
    {
        return Some(FcViolation {
            kind: FcViolationKind::EqualLabelCover,
            witness: vec![a, b],
        });
    }
    for ((s, t), bond) in g.bonds() {
        let Some(m) = bond.finite() else { continue };
        let m = m as usize;
        let (s, t) = (Piece(s), Piece(t));
        // s C t, so these occurrences form a chain
        let mut merged: Vec<Elem> = heap
            .elements()
            .filter(|&e| heap.label(e) == s || heap.label(e) == t)
            .collect();
        if merged.len() < m {
            continue;
        }
        merged.sort_by_key(|&e| heap.below(e).count_ones(..));
        for run in merged.windows(m) {
            let alternating = run.windows(2).all(|w| heap.label(w[0]) != heap.label(w[1]));
            if !alternating {
                continue;
            }
            let (lo, hi) = (run[0], run[m - 1]);
            let between = heap.above(lo).intersection(heap.below(hi)).count();
            if between == m - 2 {
                return Some(FcViolation {
                    kind: FcViolationKind::AlternatingConvexChain,
                    witness: run.to_vec(),
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;

    fn heap(g: &CoxeterGraph, word: &[&str]) -> Heap {
        Heap::from_word(Arc::new(concurrency_from_coxeter(g)), word).unwrap()
    }

    #[test]
    fn induced_concurrency() {
        let a2 = concurrency_from_coxeter(&CoxeterGraph::type_a(2));
        assert_eq!(a2.edges(), vec![(Piece(0), Piece(1))]);

        let d5 = concurrency_from_coxeter(&CoxeterGraph::type_d(5));
        let named: Vec<(&str, &str)> = d5
            .edges()
            .into_iter()
            .map(|(a, b)| (d5.name(a), d5.name(b)))
            .collect();
        assert_eq!(named, vec![("1", "3"), ("2", "3"), ("3", "4"), ("4", "5")]);

        let commuting = CoxeterGraph::numbered(2);
        let alpha = concurrency_from_coxeter(&commuting);
        assert!(alpha.edges().is_empty());
        let h = heap(&commuting, &["1", "2", "1", "2"]);
        assert_eq!(h.covers().len(), 2);
        assert!(!h.comparable(Elem(0), Elem(1)));
    }

    #[test]
    fn bond_validation() {
        let mut g = CoxeterGraph::numbered(2);
        assert_eq!(
            g.add_bond("1", "2", Bond::Finite(2)),
            Err(Error::InvalidBond(2))
        );
        assert_eq!(
            g.add_bond("1", "1", Bond::Finite(3)),
            Err(Error::SelfBond("1".into()))
        );
        assert_eq!(
            g.add_bond("1", "9", Bond::Finite(3)),
            Err(Error::UnknownGenerator("9".into()))
        );
        g.add_bond("2", "1", Bond::Infinite).unwrap();
        assert_eq!(g.bond(0, 1), Some(Bond::Infinite));
        assert_eq!(
            CoxeterGraph::from_family(Family::D, 3),
            Err(Error::UnknownFamily("D".into(), 3))
        );
    }

    #[test]
    fn a2_words() {
        let g = CoxeterGraph::type_a(2);
        let bad = is_fc_heap(&heap(&g, &["1", "2", "1"]), &g).unwrap();
        assert_eq!(
            bad,
            FcCheck::Violation(FcViolation {
                kind: FcViolationKind::AlternatingConvexChain,
                witness: vec![Elem(0), Elem(1), Elem(2)],
            })
        );
        assert!(is_fc_heap(&heap(&g, &["1", "2"]), &g).unwrap().is_fc());
        let repeat = is_fc_heap(&heap(&g, &["2", "2"]), &g).unwrap();
        assert_eq!(
            repeat,
            FcCheck::Violation(FcViolation {
                kind: FcViolationKind::EqualLabelCover,
                witness: vec![Elem(0), Elem(1)],
            })
        );
    }

    #[test]
    fn d5_reference_heap_is_fc() {
        let g = CoxeterGraph::type_d(5);
        let h = heap(&g, &["4", "3", "5", "1", "2", "3", "4"]);
        assert!(is_fc_heap(&h, &g).unwrap().is_fc());
        // the 3,1,3 chain e2 < e4 < e6 is blocked by e5
        let between: Vec<usize> = h.above(Elem(1)).intersection(h.below(Elem(5))).collect();
        assert_eq!(between, vec![3, 4]);
        assert_eq!(h.label_name(Elem(4)), "2");
    }

    #[test]
    fn infinite_bonds_never_violate_condition_one() {
        let g = CoxeterGraph::dihedral(Bond::Infinite).unwrap();
        let h = heap(&g, &["1", "2", "1", "2", "1", "2", "1"]);
        assert!(is_fc_heap(&h, &g).unwrap().is_fc());
    }

    #[test]
    fn higher_bonds_need_longer_chains() {
        let g = CoxeterGraph::type_b(2);
        assert!(is_fc_heap(&heap(&g, &["1", "2", "1"]), &g).unwrap().is_fc());
        assert!(!is_fc_heap(&heap(&g, &["1", "2", "1", "2"]), &g)
            .unwrap()
            .is_fc());
    }

    #[test]
    fn alphabet_must_match() {
        let g = CoxeterGraph::type_a(3);
        let h = heap(&CoxeterGraph::type_a(2), &["1"]);
        assert_eq!(is_fc_heap(&h, &g), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn family_shapes() {
        let e8 = CoxeterGraph::type_e(8);
        assert_eq!(e8.degree(3), 3);
        assert_eq!(e8.bonds().count(), 7);
        let f4 = CoxeterGraph::type_f(4);
        assert_eq!(f4.bond(1, 2), Some(Bond::Finite(4)));
        assert!(CoxeterGraph::cycle(5).is_connected());
        assert_eq!(CoxeterGraph::numbered(3).components().len(), 3);
    }
}
