use serde::{Deserialize, Serialize};

use super::FloorError;
use crate::lattice::LatticePolygon;

/// Shape data of an h-transverse polygon with horizontal top and bottom edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FloorProfile {
    /// Number of floors, the height of the polygon.
    pub height: usize,
    /// Length of the bottom edge; the number of weight-1 ends going down.
    pub bottom: u64,
    /// Length of the top edge; the number of weight-1 ends going up.
    pub top: u64,
    /// Weight below minus weight above at every floor.
    pub divergence: i64,
}

impl FloorProfile {
    pub fn from_polygon(polygon: &LatticePolygon) -> Result<Self, FloorError> {
        let height = polygon.height() as usize;
        if height == 0 {
            return Err(FloorError::EmptyClass);
        }
        let y0 = polygon.min_y();
        let mut widths = Vec::with_capacity(height + 1);
        for j in 0..=height as i64 {
            let (l, r) = polygon.slice(y0 + j).ok_or_else(|| {
                FloorError::Unsupported(format!("row {j} does not start and end at lattice points"))
            })?;
            widths.push(r - l);
        }
        let divergence = widths[0] - widths[1];
        if widths.windows(2).any(|w| w[0] - w[1] != divergence) {
            return Err(FloorError::Unsupported(
                "floors of different divergence are not supported".into(),
            ));
        }
        Ok(FloorProfile {
            height,
            bottom: widths[0] as u64,
            top: widths[height] as u64,
            divergence,
        })
    }

    /// Floors, elevators and ends: `2h - 1 + bottom + top`.
    pub fn marks(&self) -> usize {
        2 * self.height - 1 + self.bottom as usize + self.top as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Elevator {
    pub lower: usize,
    pub upper: usize,
    pub weight: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Endpoint {
    Bottom,
    Floor(usize),
    Top,
}

/// An edge directed upwards, from `source` to `target`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub source: Endpoint,
    pub target: Endpoint,
    pub weight: u64,
}

/// Lexicographically minimal encoding of a diagram over all labelings of its
/// floors compatible with the edge directions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiagramKey(pub Vec<u64>);

/// A genus-0 floor diagram. Floors are labeled `0..height` so that every
/// elevator runs from a smaller to a larger label, and the labeling is the
/// canonical one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FloorDiagram {
    profile: FloorProfile,
    bottom_ends: Vec<u64>,
    top_ends: Vec<u64>,
    elevators: Vec<Elevator>,
    automorphisms: u64,
}

impl FloorDiagram {
    /// Builds a diagram from per-floor end counts and a tree given as pairs
    /// `(lower, upper)`; weights are forced by the divergence condition.
    /// Returns `Ok(None)` when some forced weight is not positive.
    pub fn from_tree(
        profile: FloorProfile,
        bottom_ends: Vec<u64>,
        top_ends: Vec<u64>,
        tree: &[(usize, usize)],
    ) -> Result<Option<Self>, FloorError> {
        let h = profile.height;
        if bottom_ends.len() != h || top_ends.len() != h || tree.len() + 1 != h {
            return Err(FloorError::InvalidDiagram("size does not match the profile".into()));
        }
        let mut elevators = Vec::with_capacity(tree.len());
        for (i, &(lower, upper)) in tree.iter().enumerate() {
            let side = component_without_edge(h, tree, i, lower);
            let w: i64 = (0..h)
                .filter(|x| side & (1u64 << x) != 0)
                .map(|x| bottom_ends[x] as i64 - top_ends[x] as i64 - profile.divergence)
                .sum();
            if w < 1 {
                return Ok(None);
            }
            elevators.push(Elevator {
                lower,
                upper,
                weight: w as u64,
            });
        }
        let raw = FloorDiagram {
            profile,
            bottom_ends,
            top_ends,
            elevators,
            automorphisms: 1,
        };
        raw.validate()?;
        Ok(Some(raw.canonicalize().0))
    }

    pub fn profile(&self) -> &FloorProfile {
        &self.profile
    }

    pub fn height(&self) -> usize {
        self.profile.height
    }

    /// Number of bottom ends attached to each floor.
    pub fn bottom_ends(&self) -> &[u64] {
        &self.bottom_ends
    }

    /// Number of top ends attached to each floor.
    pub fn top_ends(&self) -> &[u64] {
        &self.top_ends
    }

    pub fn elevators(&self) -> &[Elevator] {
        &self.elevators
    }

    /// Order of the group of floor permutations preserving the diagram.
    pub fn automorphisms(&self) -> u64 {
        self.automorphisms
    }

    /// All edges, ends included, each directed upwards.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::new();
        for v in 0..self.height() {
            for _ in 0..self.bottom_ends[v] {
                edges.push(Edge {
                    source: Endpoint::Bottom,
                    target: Endpoint::Floor(v),
                    weight: 1,
                });
            }
        }
        for e in &self.elevators {
            edges.push(Edge {
                source: Endpoint::Floor(e.lower),
                target: Endpoint::Floor(e.upper),
                weight: e.weight,
            });
        }
        for v in 0..self.height() {
            for _ in 0..self.top_ends[v] {
                edges.push(Edge {
                    source: Endpoint::Floor(v),
                    target: Endpoint::Top,
                    weight: 1,
                });
            }
        }
        edges
    }

    pub fn key(&self) -> DiagramKey {
        self.encode(&(0..self.height()).collect::<Vec<_>>())
    }

    /// Checks the tree, divergence and end-count conditions.
    pub fn validate(&self) -> Result<(), FloorError> {
        let h = self.height();
        let bad = |m: String| Err(FloorError::InvalidDiagram(m));
        if h == 0 || h > 63 {
            return bad(format!("unsupported number of floors {h}"));
        }
        if self.elevators.len() + 1 != h {
            return bad("floors and elevators do not form a tree".into());
        }
        let mut reach = 1u64;
        let mut grew = true;
        while grew {
            grew = false;
            for e in &self.elevators {
                if e.lower >= h || e.upper >= h || e.lower >= e.upper {
                    return bad(format!("elevator {e:?} is not directed upwards"));
                }
                let (a, b) = (1u64 << e.lower, 1u64 << e.upper);
                if (reach & a != 0) != (reach & b != 0) {
                    reach |= a | b;
                    grew = true;
                }
            }
        }
        if reach.count_ones() as usize != h {
            return bad("diagram is not connected".into());
        }
        if self.elevators.iter().any(|e| e.weight == 0) {
            return bad("elevator of weight 0".into());
        }
        if self.bottom_ends.iter().sum::<u64>() != self.profile.bottom
            || self.top_ends.iter().sum::<u64>() != self.profile.top
        {
            return bad("end counts do not match the polygon".into());
        }
        for v in 0..h {
            let mut div = self.bottom_ends[v] as i64 - self.top_ends[v] as i64;
            for e in &self.elevators {
                if e.upper == v {
                    div += e.weight as i64;
                }
                if e.lower == v {
                    div -= e.weight as i64;
                }
            }
            if div != self.profile.divergence {
                return bad(format!("floor {v} has divergence {div}"));
            }
        }
        Ok(())
    }

    /// Encoding after renaming floor `perm[i]` to `i`.
    fn encode(&self, perm: &[usize]) -> DiagramKey {
        let h = self.height();
        let mut inverse = vec![0; h];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut key = Vec::with_capacity(2 * h + 3 * self.elevators.len());
        for &old in perm {
            key.push(self.bottom_ends[old]);
            key.push(self.top_ends[old]);
        }
        let mut edges: Vec<(u64, u64, u64)> = self
            .elevators
            .iter()
            .map(|e| (inverse[e.lower] as u64, inverse[e.upper] as u64, e.weight))
            .collect();
        edges.sort_unstable();
        for (a, b, w) in edges {
            key.extend([a, b, w]);
        }
        DiagramKey(key)
    }

    /// Relabels floors to the minimal encoding; also counts the labelings
    /// attaining it, which is the number of automorphisms.
    fn canonicalize(&self) -> (FloorDiagram, DiagramKey) {
        let h = self.height();
        let mut best: Option<(DiagramKey, Vec<usize>)> = None;
        let mut ties = 0u64;
        let mut perm: Vec<usize> = (0..h).collect();
        let mut position = vec![0; h];
        loop {
            for (i, &old) in perm.iter().enumerate() {
                position[old] = i;
            }
            let topological = self
                .elevators
                .iter()
                .all(|e| position[e.lower] < position[e.upper]);
            if topological {
                let key = self.encode(&perm);
                match &best {
                    Some((b, _)) if key > *b => {}
                    Some((b, _)) if key == *b => ties += 1,
                    _ => {
                        best = Some((key, perm.clone()));
                        ties = 1;
                    }
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let (key, perm) = best.expect("the identity labeling is topological");
        let mut inverse = vec![0; h];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut elevators: Vec<Elevator> = self
            .elevators
            .iter()
            .map(|e| Elevator {
                lower: inverse[e.lower],
                upper: inverse[e.upper],
                weight: e.weight,
            })
            .collect();
        elevators.sort_unstable();
        let diagram = FloorDiagram {
            profile: self.profile,
            bottom_ends: perm.iter().map(|&o| self.bottom_ends[o]).collect(),
            top_ends: perm.iter().map(|&o| self.top_ends[o]).collect(),
            elevators,
            automorphisms: ties,
        };
        (diagram, key)
    }
}

/// Vertex set (as a bitmask) of the component containing `start` after
/// deleting edge `skip` from the tree.
fn component_without_edge(h: usize, tree: &[(usize, usize)], skip: usize, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut grew = true;
    while grew {
        grew = false;
        for (i, &(a, b)) in tree.iter().enumerate() {
            if i == skip {
                continue;
            }
            let (ma, mb) = (1u64 << a, 1u64 << b);
            if (seen & ma != 0) != (seen & mb != 0) {
                seen |= ma | mb;
                grew = true;
            }
        }
    }
    debug_assert!(seen.count_ones() as usize <= h);
    seen
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SurfaceModel;

    fn profile(surface: &SurfaceModel, coords: Vec<i64>) -> FloorProfile {
        let class = surface.class(coords).unwrap();
        FloorProfile::from_polygon(&surface.newton_polygon(&class).unwrap()).unwrap()
    }

    #[test]
    fn profiles_of_builtin_polygons() {
        let p = profile(&SurfaceModel::cp2(), vec![4]);
        assert_eq!((p.height, p.bottom, p.top, p.divergence), (4, 4, 0, 1));
        assert_eq!(p.marks(), 11);
        let p = profile(&SurfaceModel::f0(), vec![2, 3]);
        assert_eq!((p.height, p.bottom, p.top, p.divergence), (2, 3, 3, 0));
        let p = profile(&SurfaceModel::f2(), vec![2, 1]);
        assert_eq!((p.height, p.bottom, p.top, p.divergence), (2, 5, 1, 2));
        assert_eq!(p.marks(), 4 * 2 + 2 - 1);
    }

    #[test]
    fn height_zero_is_empty() {
        let f2 = SurfaceModel::f2();
        let poly = f2.newton_polygon(&f2.class(vec![0, 2]).unwrap()).unwrap();
        assert_eq!(FloorProfile::from_polygon(&poly), Err(FloorError::EmptyClass));
    }

    #[test]
    fn non_uniform_sides_are_rejected() {
        let poly = LatticePolygon::from_vertices(vec![(0, 0), (3, 0), (2, 1), (0, 2)]);
        assert!(matches!(
            FloorProfile::from_polygon(&poly),
            Err(FloorError::Unsupported(_))
        ));
    }

    #[test]
    fn forced_weights_and_automorphisms() {
        // CP2 degree 3: two floors each carrying one bottom end hang below a floor with one
        let p = profile(&SurfaceModel::cp2(), vec![3]);
        let d = FloorDiagram::from_tree(p, vec![2, 1, 0], vec![0, 0, 0], &[(0, 1), (1, 2)])
            .unwrap()
            .unwrap();
        assert_eq!(
            d.elevators().iter().map(|e| e.weight).collect::<Vec<_>>(),
            vec![1, 1]
        );
        let sym = FloorDiagram::from_tree(p, vec![1, 2, 0], vec![0, 0, 0], &[(0, 2), (1, 2)]);
        assert!(sym.unwrap().is_none());
        let p = profile(&SurfaceModel::cp2(), vec![4]);
        let sym = FloorDiagram::from_tree(p, vec![2, 2, 0, 0], vec![0; 4], &[(0, 2), (1, 2), (2, 3)])
            .unwrap()
            .unwrap();
        assert_eq!(sym.automorphisms(), 2);
        sym.validate().unwrap();
    }

    #[test]
    fn canonical_key_is_labeling_independent() {
        let p = profile(&SurfaceModel::cp2(), vec![5]);
        let tree = [(0, 2), (1, 2), (2, 3), (3, 4)];
        let a = FloorDiagram::from_tree(p, vec![3, 2, 0, 0, 0], vec![0; 5], &tree)
            .unwrap()
            .unwrap();
        let b = FloorDiagram::from_tree(p, vec![2, 3, 0, 0, 0], vec![0; 5], &tree)
            .unwrap()
            .unwrap();
        assert_eq!(a.automorphisms(), 1);
        let mut weights: Vec<u64> = a.elevators().iter().map(|e| e.weight).collect();
        weights.sort_unstable();
        assert_eq!(weights, vec![1, 1, 2, 2]);
        assert_eq!(a.key(), b.key());
        assert_eq!(a, b);
    }

    #[test]
    fn edges_list_ends_and_elevators() {
        let p = profile(&SurfaceModel::f0(), vec![1, 2]);
        let d = FloorDiagram::from_tree(p, vec![2], vec![2], &[]).unwrap().unwrap();
        let edges = d.edges();
        assert_eq!(edges.len(), 4);
        assert_eq!(edges.iter().filter(|e| e.target == Endpoint::Top).count(), 2);
    }

    #[test]
    fn permutations_are_exhaustive() {
        let mut p = vec![0, 1, 2, 3];
        let mut n = 1;
        while next_permutation(&mut p) {
            n += 1;
        }
        assert_eq!(n, 24);
    }
}
