//! Test drawings: hand-built fixtures, spiral prefixes and seeded random
//! connected lattice subgraphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::construct::{spiral_graph, unit_pairs};
use crate::geometry::{LatticePoint, PlanePoint, Tolerance, LATTICE_DIRECTIONS};
use crate::planegraph::{validate, EmbeddedGraph, MatchstickGraph};

fn lattice(points: &[(i64, i64)], edges: Option<&[(usize, usize)]>) -> MatchstickGraph {
    let pts: Vec<LatticePoint> = points.iter().map(|&(a, b)| LatticePoint::new(a, b)).collect();
    let edges = match edges {
        Some(e) => e.to_vec(),
        None => unit_pairs(&pts).expect("fixture points are distinct"),
    };
    validate(EmbeddedGraph::from_lattice(&pts, edges).unwrap(), Tolerance::default()).expect("fixtures are valid")
}

fn regular_polygon(k: usize) -> MatchstickGraph {
    // Circumradius for unit sides.
    let r = 0.5 / (std::f64::consts::PI / k as f64).sin();
    let vertices = (0..k)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / k as f64;
            PlanePoint::new(r * t.cos(), r * t.sin())
        })
        .collect();
    let edges = (0..k).map(|i| (i.min((i + 1) % k), i.max((i + 1) % k)));
    validate(EmbeddedGraph::new(vertices, edges).unwrap(), Tolerance::default()).expect("regular polygons are valid")
}

const HEX: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Named hand-built drawings, each a matchstick graph.
pub fn fixtures() -> Vec<(&'static str, MatchstickGraph)> {
    let mut wheel = vec![(0, 0)];
    wheel.extend(HEX);
    let ring: Vec<(usize, usize)> = (0..6).map(|i| (i.min((i + 1) % 6), i.max((i + 1) % 6))).collect();
    vec![
        ("vertex", lattice(&[(0, 0)], None)),
        ("edge", lattice(&[(0, 0), (1, 0)], None)),
        ("triangle", lattice(&[(0, 0), (1, 0), (0, 1)], None)),
        ("rhombus", lattice(&[(0, 0), (1, 0), (0, 1), (1, 1)], None)),
        ("trapezoid", lattice(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1)], None)),
        ("wheel", lattice(&wheel, None)),
        ("hexagon", lattice(&HEX, Some(&ring))),
        ("bowtie", lattice(&[(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)], None)),
        ("path", lattice(&[(0, 0), (1, 0), (2, 0), (3, 0)], None)),
        ("triangle_with_tail", lattice(&[(0, 0), (1, 0), (0, 1), (2, 0), (3, 0)], None)),
        ("big_triangle", lattice(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)], None)),
        ("square", regular_polygon(4)),
        ("pentagon", regular_polygon(5)),
        ("heptagon", regular_polygon(7)),
        ("spiral_19", spiral_graph(19).unwrap()),
    ]
}

/// A random connected lattice subgraph on `n` vertices: a grown point set,
/// its penny graph, then edges removed at random while the graph stays
/// connected.
pub fn random_lattice_graph(rng: &mut impl Rng, n: usize, delete_fraction: f64) -> MatchstickGraph {
    assert!(n >= 1);
    let mut points = vec![LatticePoint::ORIGIN];
    let mut seen: HashSet<LatticePoint> = points.iter().copied().collect();
    while points.len() < n {
        let base = points[rng.gen_range(0..points.len())];
        let next = base.offset(LATTICE_DIRECTIONS[rng.gen_range(0..6)]);
        if seen.insert(next) {
            points.push(next);
        }
    }
    let mut edges = unit_pairs(&points).expect("distinct");
    let target = ((edges.len() as f64) * delete_fraction) as usize;
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.shuffle(rng);
    let mut keep = vec![true; edges.len()];
    let mut removed = 0;
    for i in order {
        if removed == target {
            break;
        }
        keep[i] = false;
        if connected(n, edges.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e)) {
            removed += 1;
        } else {
            keep[i] = true;
        }
    }
    edges = edges.into_iter().zip(keep).filter(|&(_, k)| k).map(|(e, _)| e).collect();
    validate(EmbeddedGraph::from_lattice(&points, edges).unwrap(), Tolerance::default()).expect("lattice subgraph")
}

fn connected(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut adj = vec![Vec::new(); n];
    for (i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// `count` random connected lattice subgraphs from a fixed seed. Every
/// third one is rotated and translated off the lattice, so its checks run
/// on floating coordinates.
pub fn random_corpus(seed: u64, count: usize) -> Vec<MatchstickGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(3..=60);
            let delete = [0.0, 0.1, 0.3][i % 3];
            let m = random_lattice_graph(&mut rng, n, delete);
            if i % 3 == 2 {
                let (angle, dx, dy) = (rng.gen_range(0.0..std::f64::consts::TAU), rng.gen_range(-50.0..50.0), rng.gen_range(-50.0..50.0));
                validate(m.graph().transformed(angle, dx, dy), Tolerance::default()).expect("rigid motions keep validity")
            } else {
                m
            }
        })
        .collect()
}

/// Spiral prefixes `1..=n_max`, fixtures, and `random` random graphs.
pub fn full_corpus(n_max: u64, random: usize, seed: u64) -> Vec<(String, MatchstickGraph)> {
    let mut out: Vec<(String, MatchstickGraph)> =
        (1..=n_max).map(|n| (format!("spiral_{n}"), spiral_graph(n).unwrap())).collect();
    out.extend(fixtures().into_iter().map(|(name, m)| (name.to_string(), m)));
    out.extend(random_corpus(seed, random).into_iter().enumerate().map(|(i, m)| (format!("random_{i}"), m)));
    out
}
