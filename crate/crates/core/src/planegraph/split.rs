//! The decompositions used by the induction on vertex count: splitting at a
//! cut vertex, and at a separating pair of boundary vertices (a chord when
//! the pair is adjacent, a shared face otherwise).

use std::collections::BTreeSet;

use super::graph::{validate, MatchstickGraph};
use super::PlaneGraphError;

/// Two induced sub-drawings that share only the separator vertices (and
/// the edge between them, if there is one).
#[derive(Clone, Debug)]
pub struct Split {
    pub parts: [MatchstickGraph; 2],
    /// Original index of each vertex of each part.
    pub vertex_maps: [Vec<usize>; 2],
    pub shares_edge: bool,
}

fn split_at(m: &MatchstickGraph, separator: &[usize]) -> Result<Split, PlaneGraphError> {
    let n = m.vertex_count();
    let cut: BTreeSet<usize> = separator.iter().copied().collect();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for s in (0..n).filter(|v| !cut.contains(v)) {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in m.rotation(v) {
                if !cut.contains(&w) && label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    if count < 2 {
        return Err(PlaneGraphError::NotASeparator(separator.to_vec()));
    }

    let side = |first: bool| -> Vec<usize> {
        (0..n).filter(|&v| cut.contains(&v) || (label[v] == 0) == first).collect()
    };
    let (left, right) = (side(true), side(false));
    let part = |keep: &[usize]| {
        let (g, _) = m.graph().induced(keep);
        validate(g, m.tolerance()).expect("induced sub-drawings of a valid drawing are valid")
    };
    let shares_edge = separator.len() == 2 && m.rotation(separator[0]).contains(&separator[1]);
    Ok(Split { parts: [part(&left), part(&right)], vertex_maps: [left, right], shares_edge })
}

pub fn split_at_cut_vertex(m: &MatchstickGraph, v: usize) -> Result<Split, PlaneGraphError> {
    split_at(m, &[v])
}

pub fn split_at_pair(m: &MatchstickGraph, u: usize, v: usize) -> Result<Split, PlaneGraphError> {
    split_at(m, &[u, v])
}
