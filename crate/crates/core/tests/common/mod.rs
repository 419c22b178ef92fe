//! Brute-force reference implementations on adjacency matrices. Nothing
//! here calls the library's solvers; only plain accessors are used to read
//! inputs.

#![allow(dead_code)]

use dirdom::{Digraph, Graph};

pub type Matrix = Vec<Vec<bool>>;

pub fn arc_matrix(d: &Digraph) -> Matrix {
    let n = d.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in d.arcs() {
        m[u][v] = true;
    }
    m
}

pub fn edge_matrix(g: &Graph) -> Matrix {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// All-pairs directed distances (`usize::MAX` when unreachable).
pub fn distances(a: &Matrix) -> Vec<Vec<usize>> {
    let n = a.len();
    let mut dist = vec![vec![usize::MAX; n]; n];
    for u in 0..n {
        dist[u][u] = 0;
        for v in 0..n {
            if a[u][v] {
                dist[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if dist[i][k] != usize::MAX && dist[k][j] != usize::MAX {
                    dist[i][j] = dist[i][j].min(dist[i][k] + dist[k][j]);
                }
            }
        }
    }
    dist
}

/// Next `k`-combination of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Every `k`-subset of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut c: Vec<usize> = (0..k).collect();
    let mut out = vec![c.clone()];
    while next_combination(&mut c, n) {
        out.push(c.clone());
    }
    out
}

/// A vertex outside `s` needs at least `r` members of `s` within distance
/// `radius`.
pub fn dominates(dist: &[Vec<usize>], s: &[usize], r: usize, radius: usize) -> bool {
    (0..dist.len()).all(|v| {
        s.contains(&v) || s.iter().filter(|&&u| dist[u][v] <= radius).count() >= r
    })
}

/// Smallest dominating set by increasing cardinality; the first found is
/// the lexicographically least.
pub fn brute_gamma(d: &Digraph, r: usize, radius: usize) -> (usize, Vec<usize>) {
    let dist = distances(&arc_matrix(d));
    let n = d.order();
    for k in 0..=n {
        let mut c: Vec<usize> = (0..k).collect();
        loop {
            if dominates(&dist, &c, r, radius) {
                return (k, c);
            }
            if !next_combination(&mut c, n) {
                break;
            }
        }
    }
    unreachable!("the whole vertex set dominates")
}

fn edge_list(a: &Matrix) -> Vec<(usize, usize)> {
    let n = a.len();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| a[u][v])
        .collect()
}

/// Every orientation of a graph as an arc matrix.
pub fn all_orientations(g: &Graph) -> Vec<Matrix> {
    let a = edge_matrix(g);
    let edges = edge_list(&a);
    let n = a.len();
    (0u64..1 << edges.len())
        .map(|mask| {
            let mut m = vec![vec![false; n]; n];
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    m[u][v] = true;
                } else {
                    m[v][u] = true;
                }
            }
            m
        })
        .collect()
}

pub fn matrix_digraph(m: &Matrix) -> Digraph {
    let n = m.len();
    let arcs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| m[u][v]);
    Digraph::from_arcs(n, arcs).expect("valid arcs")
}

/// Maximum over all orientations of the brute-force domination number.
pub fn brute_gamma_max(g: &Graph, r: usize, radius: usize) -> usize {
    all_orientations(g)
        .iter()
        .map(|m| brute_gamma(&matrix_digraph(m), r, radius).0)
        .max()
        .unwrap()
}

pub fn brute_alpha(g: &Graph) -> usize {
    let a = edge_matrix(g);
    let n = a.len();
    (0u64..1 << n)
        .filter(|&mask| {
            (0..n).all(|u| (0..n).all(|v| !(mask >> u & 1 == 1 && mask >> v & 1 == 1 && a[u][v])))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn brute_min_max_outdegree(g: &Graph) -> usize {
    all_orientations(g)
        .iter()
        .map(|m| m.iter().map(|row| row.iter().filter(|&&b| b).count()).max().unwrap_or(0))
        .min()
        .unwrap()
}

pub fn is_independent(a: &Matrix, s: &[usize]) -> bool {
    s.iter().all(|&u| s.iter().all(|&v| !a[u][v]))
}
