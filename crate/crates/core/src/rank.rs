//! Rank functions, connected components and intervals of heaps.
//!
//! A rank function assigns integers so that every cover `x < y` has
//! `rank(y) = rank(x) + 1`. One exists iff every closed walk in the
//! undirected cover graph has signed length zero, which is what the
//! breadth-first propagation in [`rank`] decides.

use std::collections::VecDeque;
use std::fmt;

use crate::alphabet::Piece;
use crate::error::{Error, Result};
use crate::heap::{Elem, Heap};

/// Integer ranks per element together with the connected components of
/// the cover graph.
///
/// Assignments returned by [`rank`] have minimum 0 on each component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankAssignment {
    ranks: Vec<i64>,
    components: Vec<Vec<Elem>>,
    component_of: Vec<usize>,
}

impl RankAssignment {
    pub fn rank(&self, e: Elem) -> i64 {
        self.ranks[e.0]
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    pub fn components(&self) -> &[Vec<Elem>] {
        &self.components
    }

    pub fn component_of(&self, e: Elem) -> usize {
        self.component_of[e.0]
    }

    /// Adds `delta[c]` to every rank in component `c`. Shifting by a
    /// constant per component preserves the cover condition.
    ///
    /// # Panics
    ///
    /// If `delta` does not have one entry per component.
    pub fn shifted(&self, delta: &[i64]) -> RankAssignment {
        assert_eq!(
            delta.len(),
            self.components.len(),
            "one shift per component"
        );
        let ranks = self
            .ranks
            .iter()
            .zip(&self.component_of)
            .map(|(r, &c)| r + delta[c])
            .collect();
        RankAssignment {
            ranks,
            components: self.components.clone(),
            component_of: self.component_of.clone(),
        }
    }

    /// Restriction of the ranks to `elements`, in the given order.
    pub fn restrict(&self, elements: &[Elem]) -> Vec<i64> {
        elements.iter().map(|e| self.ranks[e.0]).collect()
    }

    /// Does every cover of `heap` go up by exactly one?
    pub fn is_valid_for(&self, heap: &Heap) -> bool {
        self.ranks.len() == heap.len()
            && heap
                .covers()
                .iter()
                .all(|&(a, b)| self.ranks[b.0] == self.ranks[a.0] + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

impl Direction {
    pub fn sign(self) -> i64 {
        match self {
            Direction::Up => 1,
            Direction::Down => -1,
        }
    }

    fn reversed(self) -> Self {
        match self {
            Direction::Up => Direction::Down,
            Direction::Down => Direction::Up,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Up => "up",
            Direction::Down => "down",
        })
    }
}

/// One traversal of a cover, upwards (`from < to`) or downwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkStep {
    pub from: Elem,
    pub dir: Direction,
    pub to: Elem,
}

/// A closed walk along covers whose signed length is nonzero, so no rank
/// function can exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnrankedCertificate {
    pub walk: Vec<WalkStep>,
    pub signed_sum: i64,
}

impl UnrankedCertificate {
    /// Checks the certificate against `heap`: every step is a cover in the
    /// stated direction, steps chain, the walk is closed and the signed sum
    /// is the nonzero sum of the step signs.
    pub fn verify(&self, heap: &Heap) -> bool {
        let Some(first) = self.walk.first() else {
            return false;
        };
        let chained = self.walk.windows(2).all(|w| w[0].to == w[1].from);
        let closed = self.walk.last().map(|s| s.to) == Some(first.from);
        let steps_ok = self.walk.iter().all(|s| match s.dir {
            Direction::Up => heap.is_cover(s.from, s.to),
            Direction::Down => heap.is_cover(s.to, s.from),
        });
        let sum: i64 = self.walk.iter().map(|s| s.dir.sign()).sum();
        chained && closed && steps_ok && sum == self.signed_sum && sum != 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankOutcome {
    Ranked(RankAssignment),
    Unranked(UnrankedCertificate),
}

impl RankOutcome {
    pub fn is_ranked(&self) -> bool {
        matches!(self, RankOutcome::Ranked(_))
    }
}

/// Undirected cover neighbours of `e`, sorted by element, with the
/// direction of travel.
fn neighbours(heap: &Heap, e: Elem) -> Vec<(Elem, Direction)> {
    let mut out: Vec<(Elem, Direction)> = heap
        .upper_covers(e)
        .iter()
        .map(|&y| (y, Direction::Up))
        .chain(heap.lower_covers(e).iter().map(|&y| (y, Direction::Down)))
        .collect();
    out.sort_by_key(|&(y, _)| y);
    out
}

/// The covering pairs of the heap's order.
pub fn covers(heap: &Heap) -> Vec<(Elem, Elem)> {
    heap.covers().to_vec()
}

/// Components of the undirected cover graph, each sorted, ordered by their
/// smallest element.
pub fn connected_components(heap: &Heap) -> Vec<Vec<Elem>> {
    let n = heap.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for root in heap.elements() {
        if seen[root.0] {
            continue;
        }
        seen[root.0] = true;
        let mut comp = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for (y, _) in neighbours(heap, x) {
                if !seen[y.0] {
                    seen[y.0] = true;
                    comp.push(y);
                    queue.push_back(y);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Decides whether `heap` is ranked.
///
/// Ranks propagate breadth-first from the smallest unvisited element of
/// each component. The first inconsistent cover yields a certificate: the
/// two tree paths from their common ancestor plus the offending step.
pub fn rank(heap: &Heap) -> RankOutcome {
    let n = heap.len();
    let mut ranks: Vec<Option<i64>> = vec![None; n];
    let mut parent: Vec<Option<(Elem, Direction)>> = vec![None; n];
    let mut components = Vec::new();
    let mut component_of = vec![0; n];

    for root in heap.elements() {
        if ranks[root.0].is_some() {
            continue;
        }
        let cid = components.len();
        let mut comp = vec![root];
        ranks[root.0] = Some(0);
        component_of[root.0] = cid;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let rx = ranks[x.0].expect("queued elements are ranked");
            for (y, dir) in neighbours(heap, x) {
                let expected = rx + dir.sign();
                match ranks[y.0] {
                    None => {
                        ranks[y.0] = Some(expected);
                        parent[y.0] = Some((x, dir));
                        component_of[y.0] = cid;
                        comp.push(y);
                        queue.push_back(y);
                    }
                    Some(ry) if ry != expected => {
                        return RankOutcome::Unranked(certificate(&parent, x, dir, y));
                    }
                    Some(_) => {}
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }

    let mut ranks: Vec<i64> = ranks.into_iter().map(|r| r.expect("all visited")).collect();
    for comp in &components {
        let low = comp.iter().map(|e| ranks[e.0]).min().unwrap_or(0);
        for e in comp {
            ranks[e.0] -= low;
        }
    }
    RankOutcome::Ranked(RankAssignment {
        ranks,
        components,
        component_of,
    })
}

/// Tree steps from the BFS root down to `e`.
fn tree_path(parent: &[Option<(Elem, Direction)>], mut e: Elem) -> Vec<WalkStep> {
    let mut steps = Vec::new();
    while let Some((p, dir)) = parent[e.0] {
        steps.push(WalkStep {
            from: p,
            dir,
            to: e,
        });
        e = p;
    }
    steps.reverse();
    steps
}

fn certificate(
    parent: &[Option<(Elem, Direction)>],
    x: Elem,
    dir: Direction,
    y: Elem,
) -> UnrankedCertificate {
    let to_x = tree_path(parent, x);
    let to_y = tree_path(parent, y);
    let shared = to_x.iter().zip(&to_y).take_while(|(a, b)| a == b).count();
    let mut walk: Vec<WalkStep> = to_x[shared..].to_vec();
    walk.push(WalkStep {
        from: x,
        dir,
        to: y,
    });
    walk.extend(to_y[shared..].iter().rev().map(|s| WalkStep {
        from: s.to,
        dir: s.dir.reversed(),
        to: s.from,
    }));
    let signed_sum = walk.iter().map(|s| s.dir.sign()).sum();
    debug_assert_ne!(signed_sum, 0);
    UnrankedCertificate { walk, signed_sum }
}

/// A sequence of elements from `a` to `b` in which consecutive elements
/// share a cover, if `a` and `b` lie in the same component.
pub fn cover_path(heap: &Heap, a: Elem, b: Elem) -> Option<Vec<Elem>> {
    let mut prev: Vec<Option<Elem>> = vec![None; heap.len()];
    let mut seen = vec![false; heap.len()];
    seen[a.0] = true;
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        if x == b {
            let mut path = vec![b];
            let mut cur = b;
            while let Some(p) = prev[cur.0] {
                path.push(p);
                cur = p;
            }
            path.reverse();
            return Some(path);
        }
        for (y, _) in neighbours(heap, x) {
            if !seen[y.0] {
                seen[y.0] = true;
                prev[y.0] = Some(x);
                queue.push_back(y);
            }
        }
    }
    None
}

/// The order interval `{x : bottom <= x <= top}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub bottom: Elem,
    pub top: Elem,
    /// Sorted by element.
    pub elements: Vec<Elem>,
}

impl Interval {
    pub fn label(&self, heap: &Heap) -> Piece {
        heap.label(self.bottom)
    }

    pub fn is_balanced(&self, heap: &Heap) -> bool {
        heap.label(self.bottom) == heap.label(self.top)
    }

    /// Balanced, nontrivial, and no interior element repeats the end label.
    pub fn is_minimal_balanced(&self, heap: &Heap) -> bool {
        let label = heap.label(self.bottom);
        self.is_balanced(heap)
            && self.bottom != self.top
            && self
                .elements
                .iter()
                .all(|&e| e == self.bottom || e == self.top || heap.label(e) != label)
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// The interval as a subheap.
    pub fn subheap(&self, heap: &Heap) -> Heap {
        heap.subheap(&self.elements)
    }
}

pub fn interval(heap: &Heap, bottom: Elem, top: Elem) -> Result<Interval> {
    if !heap.le(bottom, top) {
        return Err(Error::NotComparable(
            heap.name(bottom).to_string(),
            heap.name(top).to_string(),
        ));
    }
    let elements = heap
        .elements()
        .filter(|&x| heap.le(bottom, x) && heap.le(x, top))
        .collect();
    Ok(Interval {
        bottom,
        top,
        elements,
    })
}

/// Intervals between consecutive occurrences of each piece, sorted by
/// `(bottom, top)`.
pub fn minimal_balanced_subintervals(heap: &Heap) -> Vec<Interval> {
    let mut out = Vec::new();
    for piece in heap.alphabet().pieces() {
        for pair in heap.occurrences(piece).windows(2) {
            out.push(interval(heap, pair[0], pair[1]).expect("occurrences form a chain"));
        }
    }
    out.sort_by_key(|iv| (iv.bottom, iv.top));
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalVerdict {
    Ranked,
    Unranked(Interval),
}

/// Rankedness via minimal balanced subintervals.
///
/// Only sound when the heap's concurrency subgraph has no circuit, so a
/// circuit is reported as an error instead of a verdict.
pub fn balanced_interval_criterion(heap: &Heap) -> Result<IntervalVerdict> {
    if let Some(circuit) = heap.concurrency_subgraph().find_circuit() {
        let names = circuit
            .into_iter()
            .map(|p| heap.alphabet().name(p).to_string())
            .collect();
        return Err(Error::CircuitInConcurrencySubgraph(names));
    }
    for iv in minimal_balanced_subintervals(heap) {
        if !rank(&iv.subheap(heap)).is_ranked() {
            return Ok(IntervalVerdict::Unranked(iv));
        }
    }
    Ok(IntervalVerdict::Ranked)
}
