use std::collections::BTreeSet;

use serde::Serialize;

use super::graph::EmbeddedGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub cut_vertices: BTreeSet<usize>,
    /// Edge sets of the biconnected components, each sorted, ordered by
    /// their smallest edge.
    pub blocks: Vec<Vec<(usize, usize)>>,
    pub is_connected: bool,
    /// Connected, at least three vertices, and no cut vertex.
    pub is_biconnected: bool,
}

impl BlockDecomposition {
    /// Vertex sets of the blocks, in block order.
    pub fn block_vertices(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| {
                let set: BTreeSet<usize> = b.iter().flat_map(|&(i, j)| [i, j]).collect();
                set.into_iter().collect()
            })
            .collect()
    }
}

/// Cut vertices and blocks by Hopcroft–Tarjan low-point search with an
/// explicit stack.
pub fn blocks(g: &EmbeddedGraph) -> BlockDecomposition {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = BTreeSet::new();
    let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut time = 0;
    let mut roots = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        roots += 1;
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if *pos < adj[v].len() {
                let w = adj[v][*pos];
                *pos += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push((v, w));
                }
            } else {
                stack.pop();
                if parent == usize::MAX {
                    continue;
                }
                low[parent] = low[parent].min(low[v]);
                if low[v] >= disc[parent] {
                    if parent != root {
                        cut.insert(parent);
                    }
                    let mut block = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.push((a.min(b), a.max(b)));
                        if (a, b) == (parent, v) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    out.push(block);
                }
            }
        }
        if root_children > 1 {
            cut.insert(root);
        }
    }
    out.sort();

    let is_connected = roots == 1;
    BlockDecomposition {
        is_biconnected: is_connected && n >= 3 && cut.is_empty(),
        cut_vertices: cut,
        blocks: out,
        is_connected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::LatticePoint;

    fn lattice(points: &[(i64, i64)], edges: &[(usize, usize)]) -> EmbeddedGraph {
        let pts: Vec<LatticePoint> = points.iter().map(|&(a, b)| LatticePoint::new(a, b)).collect();
        EmbeddedGraph::from_lattice(&pts, edges.iter().copied()).unwrap()
    }

    #[test]
    fn bowtie() {
        let g = lattice(
            &[(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)],
            &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)],
        );
        let d = blocks(&g);
        assert_eq!(d.cut_vertices, BTreeSet::from([0]));
        assert_eq!(d.blocks.len(), 2);
        assert!(d.is_connected && !d.is_biconnected);
    }

    #[test]
    fn triangle() {
        let d = blocks(&lattice(&[(0, 0), (1, 0), (0, 1)], &[(0, 1), (1, 2), (0, 2)]));
        assert!(d.cut_vertices.is_empty());
        assert_eq!(d.blocks, vec![vec![(0, 1), (0, 2), (1, 2)]]);
        assert!(d.is_biconnected);
    }

    #[test]
    fn path() {
        let d = blocks(&lattice(&[(0, 0), (1, 0), (2, 0)], &[(0, 1), (1, 2)]));
        assert_eq!(d.cut_vertices, BTreeSet::from([1]));
        assert_eq!(d.blocks, vec![vec![(0, 1)], vec![(1, 2)]]);
    }

    #[test]
    fn single_edge_and_isolated_vertices() {
        let d = blocks(&lattice(&[(0, 0), (1, 0)], &[(0, 1)]));
        assert!(d.is_connected && !d.is_biconnected);
        let d = blocks(&lattice(&[(0, 0), (3, 0)], &[]));
        assert!(!d.is_connected && d.blocks.is_empty());
    }

    #[test]
    fn blocks_partition_edges() {
        // Two rhombi joined through a path.
        let g = lattice(
            &[(0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (3, 2), (4, 2)],
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7), (6, 8), (7, 8)],
        );
        let d = blocks(&g);
        let mut all: Vec<(usize, usize)> = d.blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        let mut expected = g.edges().to_vec();
        expected.sort_unstable();
        assert_eq!(all, expected);
        assert_eq!(d.cut_vertices, BTreeSet::from([3, 4, 5]));
        assert_eq!(d.blocks.len(), 4);
    }
}
