use std::collections::BTreeMap;

use super::diagram::{DiagramKey, FloorDiagram, FloorProfile};
use super::{parallel_map, Execution, FloorError};
use crate::lattice::LatticePolygon;

/// All genus-0 floor diagrams of `polygon` up to isomorphism, sorted by
/// canonical key.
pub fn enumerate_floor_diagrams(polygon: &LatticePolygon) -> Result<Vec<FloorDiagram>, FloorError> {
    enumerate_floor_diagrams_with(polygon, Execution::default())
}

pub fn enumerate_floor_diagrams_with(
    polygon: &LatticePolygon,
    execution: Execution,
) -> Result<Vec<FloorDiagram>, FloorError> {
    let profile = FloorProfile::from_polygon(polygon)?;
    enumerate_profile(profile, execution)
}

pub(crate) fn enumerate_profile(
    profile: FloorProfile,
    execution: Execution,
) -> Result<Vec<FloorDiagram>, FloorError> {
    let h = profile.height;
    if h > 12 {
        return Err(FloorError::Unsupported(format!("{h} floors is beyond the enumeration limit")));
    }
    let trees = labeled_trees(h);
    let mut seeds = Vec::new();
    for b0 in 0..=profile.bottom {
        for t0 in 0..=profile.top {
            seeds.push((b0, t0));
        }
    }
    let run = |&(b0, t0): &(u64, u64)| search_seed(profile, &trees, b0, t0);
    let parts: Vec<Result<BTreeMap<DiagramKey, FloorDiagram>, FloorError>> = match execution {
        Execution::Sequential => seeds.iter().map(run).collect(),
        Execution::Parallel => parallel_map(&seeds, run),
    };
    let mut all = BTreeMap::new();
    for part in parts {
        all.extend(part?);
    }
    Ok(all.into_values().collect())
}

/// Every labeled diagram whose floor 0 carries `b0` bottom and `t0` top ends.
fn search_seed(
    profile: FloorProfile,
    trees: &[Vec<(usize, usize)>],
    b0: u64,
    t0: u64,
) -> Result<BTreeMap<DiagramKey, FloorDiagram>, FloorError> {
    let h = profile.height;
    let mut found = BTreeMap::new();
    let bottoms = compositions_with_head(profile.bottom, h, b0);
    let tops = compositions_with_head(profile.top, h, t0);
    for tree in trees {
        for b in &bottoms {
            for t in &tops {
                if let Some(d) = FloorDiagram::from_tree(profile, b.clone(), t.clone(), tree)? {
                    found.entry(d.key()).or_insert(d);
                }
            }
        }
    }
    Ok(found)
}

/// Weak compositions of `total` into `parts` parts whose first part is `head`.
fn compositions_with_head(total: u64, parts: usize, head: u64) -> Vec<Vec<u64>> {
    if head > total {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![head];
    fill(total - head, parts - 1, &mut current, &mut out);
    out
}

fn fill(rest: u64, parts: usize, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if parts == 0 {
        if rest == 0 {
            out.push(current.clone());
        }
        return;
    }
    if parts == 1 {
        current.push(rest);
        out.push(current.clone());
        current.pop();
        return;
    }
    for x in 0..=rest {
        current.push(x);
        fill(rest - x, parts - 1, current, out);
        current.pop();
    }
}

/// All labeled trees on `h` vertices, each edge written `(smaller, larger)`.
fn labeled_trees(h: usize) -> Vec<Vec<(usize, usize)>> {
    match h {
        0 => return Vec::new(),
        1 => return vec![Vec::new()],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    let mut trees = Vec::new();
    let mut seq = vec![0usize; h - 2];
    loop {
        trees.push(decode_pruefer(&seq, h));
        let mut i = seq.len();
        loop {
            if i == 0 {
                return trees;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < h {
                break;
            }
            seq[i] = 0;
        }
    }
}

fn decode_pruefer(seq: &[usize], h: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; h];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(h - 1);
    for &x in seq {
        let leaf = (0..h).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..h).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}
