//! Recognition of FC-finite Coxeter graphs and branch subgraphs.
//!
//! A Coxeter group has finitely many fully commutative elements iff each
//! connected component of its graph is one of `A_n`, `B_n`, `D_n`, `E_n`,
//! `F_n`, `H_n` or `I_2(m)`. Each family is matched as a shape: a path
//! with at most one special bond, or a fork with prescribed arm lengths.

use std::fmt;

use crate::coxeter::{Bond, CoxeterGraph, Family};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyTag {
    pub family: Family,
    /// Number of vertices, or `m` for `I2`.
    pub n: u32,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.family, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentClass {
    pub generators: Vec<String>,
    pub tag: Option<FamilyTag>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub components: Vec<ComponentClass>,
}

impl Classification {
    pub fn is_fc_finite(&self) -> bool {
        self.components.iter().all(|c| c.tag.is_some())
    }

    pub fn tags(&self) -> Vec<Option<FamilyTag>> {
        self.components.iter().map(|c| c.tag).collect()
    }
}

pub fn classify(g: &CoxeterGraph) -> Classification {
    let components = g
        .components()
        .into_iter()
        .map(|vs| {
            let sub = g.full_subgraph(&vs);
            ComponentClass {
                generators: sub.names().to_vec(),
                tag: classify_connected(&sub),
            }
        })
        .collect();
    Classification { components }
}

pub fn is_fc_finite(g: &CoxeterGraph) -> bool {
    classify(g).is_fc_finite()
}

fn tag(family: Family, n: usize) -> Option<FamilyTag> {
    Some(FamilyTag {
        family,
        n: n as u32,
    })
}

/// Walks away from `from` through `start` along degree-2 vertices and
/// returns the vertices visited.
fn arm(g: &CoxeterGraph, from: usize, start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let (mut prev, mut cur) = (from, start);
    loop {
        let next: Vec<usize> = g
            .neighbours(cur)
            .into_iter()
            .filter(|&w| w != prev)
            .collect();
        match next.as_slice() {
            [w] => {
                out.push(*w);
                prev = cur;
                cur = *w;
            }
            _ => return out,
        }
    }
}

/// Family of a connected Coxeter graph, if it is FC-finite.
pub fn classify_connected(g: &CoxeterGraph) -> Option<FamilyTag> {
    let k = g.len();
    if k == 0 || !g.is_connected() {
        return None;
    }
    if k == 1 {
        return tag(Family::A, 1);
    }
    let bonds: Vec<Bond> = g.bonds().map(|(_, b)| b).collect();
    if bonds.len() != k - 1 || bonds.contains(&Bond::Infinite) {
        return None;
    }
    let degrees: Vec<usize> = (0..k).map(|v| g.degree(v)).collect();
    if k == 2 {
        return match bonds[0] {
            Bond::Finite(3) => tag(Family::A, 2),
            Bond::Finite(4) => tag(Family::B, 2),
            Bond::Finite(m) => Some(FamilyTag {
                family: Family::I2,
                n: m,
            }),
            Bond::Infinite => None,
        };
    }
    let branch: Vec<usize> = (0..k).filter(|&v| degrees[v] >= 3).collect();
    match branch.as_slice() {
        [] => {
            let end = (0..k).find(|&v| degrees[v] == 1)?;
            let mut path = vec![end];
            path.extend(arm(g, end, g.neighbours(end)[0]));
            let special: Vec<(usize, u32)> = path
                .windows(2)
                .enumerate()
                .filter_map(|(i, w)| match g.bond(w[0], w[1])? {
                    Bond::Finite(3) => None,
                    Bond::Finite(m) => Some((i, m)),
                    Bond::Infinite => Some((i, 0)),
                })
                .collect();
            match special.as_slice() {
                [] => tag(Family::A, k),
                &[(edge, m)] => {
                    let from_end = edge.min(k - 2 - edge);
                    match (m, from_end) {
                        (4, 0) => tag(Family::B, k),
                        (4, 1) if k >= 4 => tag(Family::F, k),
                        (5, 0) => tag(Family::H, k),
                        _ => None,
                    }
                }
                _ => None,
            }
        }
        &[centre] if degrees[centre] == 3 => {
            if bonds.iter().any(|&b| b != Bond::Finite(3)) {
                return None;
            }
            let mut arms: Vec<usize> = g
                .neighbours(centre)
                .into_iter()
                .map(|t| arm(g, centre, t).len())
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => tag(Family::D, k),
                [1, 2, c] if *c >= 2 => tag(Family::E, k),
                _ => None,
            }
        }
        _ => None,
    }
}

/// `n` if `g` is a simple path on `n` vertices with every bond equal to 3.
pub fn type_a_rank(g: &CoxeterGraph) -> Option<usize> {
    let t = classify_connected(g)?;
    (t.family == Family::A).then_some(t.n as usize)
}

fn adjacent_pair(g: &CoxeterGraph, s: &str, t: &str) -> Result<(usize, usize)> {
    let (i, j) = (g.lookup(s)?, g.lookup(t)?);
    if i == j || g.bond(i, j).is_none() {
        return Err(Error::NotAdjacent(s.to_string(), t.to_string()));
    }
    Ok((i, j))
}

fn delete_components(g: &CoxeterGraph, s: usize) -> Vec<Vec<usize>> {
    let rest: Vec<usize> = (0..g.len()).filter(|&v| v != s).collect();
    let sub = g.full_subgraph(&rest);
    sub.components()
        .into_iter()
        .map(|comp| comp.into_iter().map(|v| rest[v]).collect())
        .collect()
}

/// Components of `g` with `s` and its bonds removed.
pub fn gamma_delete(g: &CoxeterGraph, s: &str) -> Result<Vec<CoxeterGraph>> {
    let i = g.lookup(s)?;
    Ok(delete_components(g, i)
        .iter()
        .map(|vs| g.full_subgraph(vs))
        .collect())
}

/// The component of `g` without `s` that contains `t`.
pub fn gamma_component(g: &CoxeterGraph, s: &str, t: &str) -> Result<CoxeterGraph> {
    let (i, j) = adjacent_pair(g, s, t)?;
    let comp = delete_components(g, i)
        .into_iter()
        .find(|c| c.contains(&j))
        .expect("t survives deleting s");
    Ok(g.full_subgraph(&comp))
}

/// The full subgraph on `s` together with [`gamma_component`].
pub fn gamma_arrow(g: &CoxeterGraph, s: &str, t: &str) -> Result<CoxeterGraph> {
    let (i, j) = adjacent_pair(g, s, t)?;
    let mut comp = delete_components(g, i)
        .into_iter()
        .find(|c| c.contains(&j))
        .expect("t survives deleting s");
    comp.push(i);
    Ok(g.full_subgraph(&comp))
}

/// Neighbours `t` of `s` whose branch `gamma_arrow(g, s, t)` is not a
/// type A path.
pub fn non_a_branches(g: &CoxeterGraph, s: &str) -> Result<Vec<String>> {
    let i = g.lookup(s)?;
    let degree = g.degree(i);
    if degree < 2 {
        return Err(Error::DegreeTooSmall(s.to_string(), degree));
    }
    let mut out = Vec::new();
    for j in g.neighbours(i) {
        let t = g.name(j);
        if type_a_rank(&gamma_arrow(g, s, t)?).is_none() {
            out.push(t.to_string());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single(g: &CoxeterGraph) -> Option<FamilyTag> {
        let c = classify(g);
        assert_eq!(c.components.len(), 1);
        c.components[0].tag
    }

    #[test]
    fn standard_families_round_trip() {
        for (family, range) in [
            (Family::A, 1..=9),
            (Family::B, 2..=9),
            (Family::D, 4..=9),
            (Family::E, 6..=11),
            (Family::F, 4..=9),
            (Family::H, 3..=9),
            (Family::I2, 5..=12),
        ] {
            for n in range {
                let g = CoxeterGraph::from_family(family, n).unwrap();
                assert_eq!(single(&g), Some(FamilyTag { family, n }), "{family} {n}");
            }
        }
    }

    #[test]
    fn small_dihedral_tags() {
        let a2 = CoxeterGraph::from_family(Family::I2, 3).unwrap();
        assert_eq!(single(&a2).unwrap().to_string(), "A 2");
        let b2 = CoxeterGraph::from_family(Family::I2, 4).unwrap();
        assert_eq!(single(&b2).unwrap().to_string(), "B 2");
        assert_eq!(
            single(&CoxeterGraph::dihedral(Bond::Infinite).unwrap()),
            None
        );
    }

    #[test]
    fn reversed_numbering_still_matches() {
        // B_4 drawn with the 4-bond at the far end
        let mut g = CoxeterGraph::numbered(4);
        g.add_bond("1", "2", Bond::Finite(3)).unwrap();
        g.add_bond("2", "3", Bond::Finite(3)).unwrap();
        g.add_bond("3", "4", Bond::Finite(4)).unwrap();
        assert_eq!(single(&g).unwrap().to_string(), "B 4");
    }

    #[test]
    fn not_fc_finite() {
        assert!(!is_fc_finite(&CoxeterGraph::cycle(5)));
        assert!(!is_fc_finite(&CoxeterGraph::cycle(4)));
        assert!(!is_fc_finite(&CoxeterGraph::cycle(3)));
        // affine C_2: two 4-bonds
        let mut c2 = CoxeterGraph::numbered(3);
        c2.add_bond("1", "2", Bond::Finite(4)).unwrap();
        c2.add_bond("2", "3", Bond::Finite(4)).unwrap();
        assert!(!is_fc_finite(&c2));
        // 4-bond in the middle of a 6-path
        let mut g = CoxeterGraph::type_a(6);
        g.add_bond("3", "4", Bond::Finite(4)).unwrap();
        assert!(!is_fc_finite(&g));
        // star with four arms
        let mut star = CoxeterGraph::numbered(5);
        for leaf in ["2", "3", "4", "5"] {
            star.add_bond("1", leaf, Bond::Finite(3)).unwrap();
        }
        assert!(!is_fc_finite(&star));
        // fork with arms (2, 2, 2): affine E_6
        let mut e6t = CoxeterGraph::numbered(7);
        for (a, b) in [
            ("1", "2"),
            ("2", "3"),
            ("3", "4"),
            ("4", "5"),
            ("3", "6"),
            ("6", "7"),
        ] {
            e6t.add_bond(a, b, Bond::Finite(3)).unwrap();
        }
        assert!(!is_fc_finite(&e6t));
    }

    #[test]
    fn disconnected_graphs_classify_per_component() {
        let mut g = CoxeterGraph::numbered(3);
        g.add_bond("1", "3", Bond::Finite(3)).unwrap();
        let c = classify(&g);
        assert!(c.is_fc_finite());
        let tags: Vec<String> = c.tags().iter().map(|t| t.unwrap().to_string()).collect();
        assert_eq!(tags, vec!["A 2", "A 1"]);
        assert_eq!(c.components[0].generators, vec!["1", "3"]);
    }

    #[test]
    fn branches_of_e8() {
        let e8 = CoxeterGraph::type_e(8);
        let parts = gamma_delete(&e8, "4").unwrap();
        let mut tags: Vec<String> = parts
            .iter()
            .map(|p| single(p).unwrap().to_string())
            .collect();
        tags.sort();
        assert_eq!(tags, vec!["A 1", "A 2", "A 4"]);
        let comp = gamma_component(&e8, "4", "5").unwrap();
        assert_eq!(comp.names(), &["5", "6", "7", "8"]);
        assert_eq!(type_a_rank(&comp), Some(4));
        let arrow = gamma_arrow(&e8, "4", "5").unwrap();
        assert_eq!(arrow.names(), &["4", "5", "6", "7", "8"]);
        assert_eq!(type_a_rank(&arrow), Some(5));
    }

    #[test]
    fn branches_of_small_graphs() {
        let a3 = CoxeterGraph::type_a(3);
        let arrow = gamma_arrow(&a3, "2", "3").unwrap();
        assert_eq!(arrow.names(), &["2", "3"]);
        assert_eq!(type_a_rank(&arrow), Some(2));
        assert_eq!(
            gamma_arrow(&a3, "1", "3").unwrap_err(),
            Error::NotAdjacent("1".into(), "3".into())
        );

        let d5 = CoxeterGraph::type_d(5);
        let parts: Vec<Vec<String>> = gamma_delete(&d5, "3")
            .unwrap()
            .iter()
            .map(|p| p.names().to_vec())
            .collect();
        assert_eq!(parts, vec![vec!["1"], vec!["2"], vec!["4", "5"]]);
        assert_eq!(
            gamma_arrow(&d5, "3", "4").unwrap().names(),
            &["3", "4", "5"]
        );
        assert!(non_a_branches(&d5, "3").unwrap().is_empty());

        let b4 = CoxeterGraph::type_b(4);
        assert_eq!(non_a_branches(&b4, "3").unwrap(), vec!["2"]);
        assert_eq!(
            non_a_branches(&b4, "4").unwrap_err(),
            Error::DegreeTooSmall("4".into(), 1)
        );
        let e8 = CoxeterGraph::type_e(8);
        assert!(non_a_branches(&e8, "4").unwrap().is_empty());
    }
}
