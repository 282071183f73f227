//! Independent reference implementations used by the integration tests.
//! Nothing here calls into the order, rank or FC logic of the library;
//! everything works directly on words and adjacency matrices.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use heaprank::{concurrency_from_coxeter, CoxeterGraph, Heap, Piece, PieceAlphabet};

/// Symmetric reflexive concurrency relation as a matrix.
pub type Conc = Vec<Vec<bool>>;

pub fn conc_from_edges(n: usize, edges: &[(usize, usize)]) -> Conc {
    let mut c = vec![vec![false; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in edges {
        c[a][b] = true;
        c[b][a] = true;
    }
    c
}

pub fn alphabet_from_conc(c: &Conc) -> Arc<PieceAlphabet> {
    let names: Vec<String> = (1..=c.len()).map(|i| i.to_string()).collect();
    let mut alpha = PieceAlphabet::new(names).unwrap();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if c[i][j] {
                alpha.connect(Piece(i), Piece(j));
            }
        }
    }
    Arc::new(alpha)
}

pub fn path(n: usize) -> Conc {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    conc_from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Conc {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    conc_from_edges(n, &edges)
}

pub fn complete(n: usize) -> Conc {
    vec![vec![true; n]; n]
}

pub fn star(leaves: usize) -> Conc {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    conc_from_edges(leaves + 1, &edges)
}

/// All words of length exactly `len` over `0..k`.
pub fn words_of_length(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn words_up_to(k: usize, max_len: usize) -> Vec<Vec<usize>> {
    (0..=max_len)
        .flat_map(|len| words_of_length(k, len))
        .collect()
}

pub fn heap_of(alpha: &Arc<PieceAlphabet>, word: &[usize]) -> Heap {
    let pieces: Vec<Piece> = word.iter().map(|&s| Piece(s)).collect();
    Heap::from_pieces(alpha.clone(), &pieces).unwrap()
}

/// Strict order of the heap of `word` straight from the definition:
/// position i precedes j (i < j) when their letters are concurrent, closed
/// transitively by Floyd-Warshall.
pub fn naive_order(c: &Conc, word: &[usize]) -> Vec<Vec<bool>> {
    let n = word.len();
    let mut lt = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            lt[i][j] = c[word[i]][word[j]];
        }
    }
    for k in 0..n {
        for i in 0..n {
            if lt[i][k] {
                for j in 0..n {
                    if lt[k][j] {
                        lt[i][j] = true;
                    }
                }
            }
        }
    }
    lt
}

pub fn naive_covers(lt: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = lt.len();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt[a][b] && !(0..n).any(|m| lt[a][m] && lt[m][b]) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Rank function by difference constraints: every cover a < b imposes
/// r(b) - r(a) = 1. Floyd-Warshall over the constraint graph detects a
/// negative cycle (no rank function); otherwise distances from the least
/// vertex of each component give the ranks, shifted to minimum 0.
pub fn oracle_rank(n: usize, covers: &[(usize, usize)]) -> Option<Vec<i64>> {
    const INF: i64 = i64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(a, b) in covers {
        d[a][b] = d[a][b].min(1);
        d[b][a] = d[b][a].min(-1);
    }
    for k in 0..n {
        for i in 0..n {
            if d[i][k] == INF {
                continue;
            }
            for j in 0..n {
                if d[k][j] != INF && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    if (0..n).any(|i| d[i][i] < 0) {
        return None;
    }
    let mut ranks = vec![0i64; n];
    let mut done = vec![false; n];
    for root in 0..n {
        if done[root] {
            continue;
        }
        let comp: Vec<usize> = (0..n).filter(|&v| d[root][v] != INF).collect();
        let low = comp.iter().map(|&v| d[root][v]).min().unwrap();
        for &v in &comp {
            ranks[v] = d[root][v] - low;
            done[v] = true;
        }
    }
    Some(ranks)
}

/// Every linear extension of a strict order, as position sequences.
pub fn linear_extensions(lt: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn go(lt: &[Vec<bool>], used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = lt.len();
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] && (0..n).all(|u| !lt[u][v] || used[u]) {
                used[v] = true;
                cur.push(v);
                go(lt, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(lt, &mut vec![false; lt.len()], &mut Vec::new(), &mut out);
    out
}

/// Labelled-poset isomorphism by trying every permutation.
pub fn brute_isomorphic(la: &[usize], lta: &[Vec<bool>], lb: &[usize], ltb: &[Vec<bool>]) -> bool {
    fn go(
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        la: &[usize],
        lta: &[Vec<bool>],
        lb: &[usize],
        ltb: &[Vec<bool>],
    ) -> bool {
        let n = la.len();
        if i == n {
            return (0..n).all(|x| (0..n).all(|y| lta[x][y] == ltb[perm[x]][perm[y]]));
        }
        for j in 0..n {
            if !used[j] && la[i] == lb[j] {
                used[j] = true;
                perm.push(j);
                if go(i + 1, perm, used, la, lta, lb, ltb) {
                    return true;
                }
                perm.pop();
                used[j] = false;
            }
        }
        false
    }
    la.len() == lb.len()
        && go(
            0,
            &mut Vec::new(),
            &mut vec![false; la.len()],
            la,
            lta,
            lb,
            ltb,
        )
}

/// Coxeter matrix entry; 0 stands for infinity, 2 for commuting.
pub fn coxeter_matrix(g: &CoxeterGraph) -> Vec<Vec<u32>> {
    let n = g.len();
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for ((i, j), bond) in g.bonds() {
        let v = bond.finite().unwrap_or(0);
        m[i][j] = v;
        m[j][i] = v;
    }
    m
}

/// Commutation class of a word: all words reachable by swapping adjacent
/// commuting letters.
pub fn commutation_class(m: &[Vec<u32>], word: &[usize]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([word.to_vec()]);
    let mut queue = VecDeque::from([word.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in 1..w.len() {
            if m[w[i - 1]][w[i]] == 2 {
                let mut v = w.clone();
                v.swap(i - 1, i);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// Does `w` contain `ss`, or an alternating factor `sts...` of length
/// m(s, t) for a finite bond m >= 3?
fn has_forbidden_factor(m: &[Vec<u32>], w: &[usize]) -> bool {
    if w.windows(2).any(|p| p[0] == p[1]) {
        return true;
    }
    for start in 0..w.len() {
        if start + 1 >= w.len() {
            break;
        }
        let (s, t) = (w[start], w[start + 1]);
        let bond = m[s][t];
        if bond < 3 {
            continue;
        }
        let len = bond as usize;
        if start + len <= w.len()
            && (0..len).all(|k| w[start + k] == if k % 2 == 0 { s } else { t })
        {
            return true;
        }
    }
    false
}

/// Fully commutative elements grouped by length, straight from the word
/// definition: a word is a reduced word of an FC element iff no word in
/// its commutation class has a factor `ss` or a braid factor of length
/// m(s, t). Each element is reported by the least word of its class.
pub fn fc_elements_by_words(g: &CoxeterGraph, max_len: usize) -> Vec<BTreeSet<Vec<usize>>> {
    let m = coxeter_matrix(g);
    let n = g.len();
    let mut levels = vec![BTreeSet::from([Vec::new()])];
    for _ in 0..max_len {
        let mut next = BTreeSet::new();
        for w in levels.last().unwrap() {
            for s in 0..n {
                let mut v = w.clone();
                v.push(s);
                let class = commutation_class(&m, &v);
                if class.iter().all(|u| !has_forbidden_factor(&m, u)) {
                    next.insert(class.into_iter().next().unwrap());
                }
            }
        }
        if next.is_empty() {
            break;
        }
        levels.push(next);
    }
    levels
}

pub fn coxeter_alphabet(g: &CoxeterGraph) -> Arc<PieceAlphabet> {
    Arc::new(concurrency_from_coxeter(g))
}

/// The FC-finite groups exercised across the suites.
pub fn fc_finite_battery() -> Vec<(String, CoxeterGraph)> {
    use heaprank::{Bond, Family};
    let mut out = Vec::new();
    let mut push = |fam: Family, range: std::ops::RangeInclusive<u32>| {
        for n in range {
            out.push((
                format!("{fam}{n}"),
                CoxeterGraph::from_family(fam, n).unwrap(),
            ));
        }
    };
    push(Family::A, 1..=6);
    push(Family::B, 2..=5);
    push(Family::D, 4..=6);
    push(Family::E, 6..=8);
    push(Family::F, 4..=4);
    push(Family::H, 3..=4);
    for m in 5..=8 {
        out.push((
            format!("I2({m})"),
            CoxeterGraph::dihedral(Bond::Finite(m)).unwrap(),
        ));
    }
    out
}
