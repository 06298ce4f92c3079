#![allow(dead_code)]

use gfaith_core::graph::{EdgeKind, MixedGraph};
use gfaith_core::nodeset::Ground;
use rand::Rng;

pub fn ground(n: usize) -> Ground {
    Ground::new((0..n).map(|i| char::from(b'a' + i as u8).to_string())).unwrap()
}

/// Simple graph from a code with one base-5 digit per pair `i < j` (none,
/// line, arrow `i -> j`, arrow `j -> i`, arc).
pub fn simple_graph(n: usize, mut code: u64) -> MixedGraph {
    let mut g = MixedGraph::new(ground(n));
    for i in 0..n {
        for j in i + 1..n {
            let d = code % 5;
            code /= 5;
            match d {
                1 => g.add_edge(i, j, EdgeKind::Line),
                2 => g.add_edge(i, j, EdgeKind::Arrow),
                3 => g.add_edge(j, i, EdgeKind::Arrow),
                4 => g.add_edge(i, j, EdgeKind::Arc),
                _ => continue,
            }
            .unwrap();
        }
    }
    g
}

pub fn simple_graph_count(n: usize) -> u64 {
    5u64.pow((n * n.saturating_sub(1) / 2) as u32)
}

/// Every simple mixed graph on `n` nodes.
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = MixedGraph> {
    (0..simple_graph_count(n)).map(move |c| simple_graph(n, c))
}

pub fn random_simple_graph<R: Rng>(rng: &mut R, n: usize, density: f64) -> MixedGraph {
    let mut g = MixedGraph::new(ground(n));
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                let (u, v, k) = match rng.gen_range(0..4) {
                    0 => (i, j, EdgeKind::Line),
                    1 => (i, j, EdgeKind::Arrow),
                    2 => (j, i, EdgeKind::Arrow),
                    _ => (i, j, EdgeKind::Arc),
                };
                g.add_edge(u, v, k).unwrap();
            }
        }
    }
    g
}

/// Random anterial graph by rejection sampling over simple graphs whose
/// arrows follow a random node order.
pub fn random_ang<R: Rng>(rng: &mut R, n: usize, density: f64) -> MixedGraph {
    loop {
        let mut order: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            order.swap(k, rng.gen_range(0..=k));
        }
        let mut g = MixedGraph::new(ground(n));
        for x in 0..n {
            for y in x + 1..n {
                if rng.gen_bool(density) {
                    let (i, j) = (order[x], order[y]);
                    let k = match rng.gen_range(0..3) {
                        0 => EdgeKind::Line,
                        1 => EdgeKind::Arrow,
                        _ => EdgeKind::Arc,
                    };
                    g.add_edge(i, j, k).unwrap();
                }
            }
        }
        if g.is_anterial() {
            return g;
        }
    }
}

pub fn random_dag<R: Rng>(rng: &mut R, n: usize, density: f64) -> MixedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    for k in (1..n).rev() {
        order.swap(k, rng.gen_range(0..=k));
    }
    let mut g = MixedGraph::new(ground(n));
    for x in 0..n {
        for y in x + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(order[x], order[y], EdgeKind::Arrow).unwrap();
            }
        }
    }
    g
}

pub fn random_connected_ug<R: Rng>(rng: &mut R, n: usize, density: f64) -> MixedGraph {
    loop {
        let mut g = MixedGraph::new(ground(n));
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(density) {
                    g.add_edge(i, j, EdgeKind::Line).unwrap();
                }
            }
        }
        if connected(&g) {
            return g;
        }
    }
}

pub fn connected(g: &MixedGraph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in g.neighbours(v).iter() {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `J` with the elementary statement `<i, j | C>` (and its mirror) toggled,
/// set statements rebuilt from the elementary ones.
pub fn flip(
    j: &gfaith_core::IndependenceModel,
    i: usize,
    k: usize,
    c: gfaith_core::NodeSet,
) -> gfaith_core::IndependenceModel {
    let (i, k) = (i.min(k), i.max(k));
    gfaith_core::IndependenceModel::from_elementary(j.ground().clone(), |a, b, d| {
        j.contains_elementary(a, b, d) ^ (a == i && b == k && d == c)
    })
    .unwrap()
}

/// A uniformly random elementary triple `(i, j, C)` with `i < j`.
pub fn random_triple<R: Rng>(rng: &mut R, n: usize) -> (usize, usize, gfaith_core::NodeSet) {
    let i = rng.gen_range(0..n);
    let k = (i + rng.gen_range(1..n)) % n;
    let c = (0..n).filter(|&v| v != i && v != k && rng.gen_bool(0.5)).collect();
    (i.min(k), i.max(k), c)
}
