use std::collections::HashMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::diagram::FloorDiagram;
use super::FloorError;

/// A markable piece of a floor diagram. Ends attached to the same floor on the
/// same side are interchangeable and are named by their floor only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MarkElement {
    BottomEnd(usize),
    Floor(usize),
    Elevator(usize),
    TopEnd(usize),
}

/// A floor diagram together with the order in which the marked points meet it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MarkedFloorDiagram {
    pub diagram: FloorDiagram,
    pub marking: Vec<MarkElement>,
}

impl MarkedFloorDiagram {
    /// Checks that every element is used the right number of times and that
    /// the order increases along each edge.
    pub fn validate(&self) -> Result<(), FloorError> {
        let groups = Groups::of(&self.diagram);
        if self.marking.len() != groups.total {
            return Err(FloorError::MarkCountMismatch {
                expected: groups.total,
                found: self.marking.len(),
            });
        }
        let mut placed = vec![0u64; groups.sizes.len()];
        for m in &self.marking {
            let g = groups
                .index_of(*m)
                .ok_or_else(|| FloorError::InvalidDiagram(format!("unknown element {m:?}")))?;
            if placed[g] == groups.sizes[g] || !groups.ready(g, &placed) {
                return Err(FloorError::InvalidDiagram(format!(
                    "element {m:?} is out of order"
                )));
            }
            placed[g] += 1;
        }
        Ok(())
    }
}

/// Number of marked floor diagrams with underlying diagram `diagram`, that
/// is, orders of the marked pieces compatible with the edge directions, up to
/// automorphisms of the diagram.
pub fn count_markings(diagram: &FloorDiagram, n_points: usize) -> Result<BigUint, FloorError> {
    let groups = Groups::of(diagram);
    if n_points != groups.total {
        return Err(FloorError::MarkCountMismatch {
            expected: groups.total,
            found: n_points,
        });
    }
    let orders = groups.count_orders()?;
    let aut = u128::from(diagram.automorphisms());
    if aut == 0 || orders % aut != 0 {
        return Err(FloorError::InternalConsistency(format!(
            "{orders} markings are not divisible by {aut} automorphisms"
        )));
    }
    Ok(BigUint::from(orders / aut))
}

/// All markings of `diagram`, without quotienting by automorphisms.
pub fn linear_extensions(diagram: &FloorDiagram) -> Vec<MarkedFloorDiagram> {
    let groups = Groups::of(diagram);
    let mut out = Vec::new();
    let mut placed = vec![0u64; groups.sizes.len()];
    let mut prefix = Vec::with_capacity(groups.total);
    groups.extend(&mut placed, &mut prefix, &mut |marking| {
        out.push(MarkedFloorDiagram {
            diagram: diagram.clone(),
            marking: marking.to_vec(),
        })
    });
    out
}

/// Markable elements bundled into groups of interchangeable pieces.
struct Groups {
    labels: Vec<MarkElement>,
    sizes: Vec<u64>,
    /// Groups that must be completely placed first.
    requires: Vec<Vec<usize>>,
    total: usize,
}

impl Groups {
    fn of(d: &FloorDiagram) -> Self {
        let h = d.height();
        let mut labels = Vec::new();
        let mut sizes = Vec::new();
        for v in 0..h {
            labels.push(MarkElement::Floor(v));
            sizes.push(1);
        }
        for i in 0..d.elevators().len() {
            labels.push(MarkElement::Elevator(i));
            sizes.push(1);
        }
        for v in 0..h {
            labels.push(MarkElement::BottomEnd(v));
            sizes.push(d.bottom_ends()[v]);
            labels.push(MarkElement::TopEnd(v));
            sizes.push(d.top_ends()[v]);
        }
        let n_el = d.elevators().len();
        let mut requires = vec![Vec::new(); labels.len()];
        for v in 0..h {
            requires[v].push(h + n_el + 2 * v);
            requires[h + n_el + 2 * v + 1].push(v);
        }
        for (i, e) in d.elevators().iter().enumerate() {
            requires[h + i].push(e.lower);
            requires[e.upper].push(h + i);
        }
        let total = sizes.iter().sum::<u64>() as usize;
        Groups {
            labels,
            sizes,
            requires,
            total,
        }
    }

    fn index_of(&self, m: MarkElement) -> Option<usize> {
        self.labels.iter().position(|&l| l == m)
    }

    fn ready(&self, g: usize, placed: &[u64]) -> bool {
        self.requires[g].iter().all(|&r| placed[r] == self.sizes[r])
    }

    fn count_orders(&self) -> Result<u128, FloorError> {
        let mut radix = Vec::with_capacity(self.sizes.len());
        let mut span = 1u64;
        for &s in &self.sizes {
            radix.push(span);
            span = span
                .checked_mul(s + 1)
                .ok_or_else(|| FloorError::Unsupported("too many markable pieces".into()))?;
        }
        let mut layer: HashMap<u64, u128> = HashMap::from([(0, 1)]);
        let mut placed = vec![0u64; self.sizes.len()];
        for _ in 0..self.total {
            let mut next: HashMap<u64, u128> = HashMap::with_capacity(layer.len() * 2);
            for (&state, &ways) in &layer {
                let mut rest = state;
                for (g, p) in placed.iter_mut().enumerate() {
                    *p = rest % (self.sizes[g] + 1);
                    rest /= self.sizes[g] + 1;
                }
                for g in 0..self.sizes.len() {
                    if placed[g] < self.sizes[g] && self.ready(g, &placed) {
                        let slot = next.entry(state + radix[g]).or_insert(0);
                        *slot = slot.checked_add(ways).ok_or_else(|| {
                            FloorError::Unsupported("marking count exceeds 128 bits".into())
                        })?;
                    }
                }
            }
            layer = next;
        }
        Ok(layer.values().sum())
    }

    fn extend(
        &self,
        placed: &mut Vec<u64>,
        prefix: &mut Vec<MarkElement>,
        emit: &mut dyn FnMut(&[MarkElement]),
    ) {
        if prefix.len() == self.total {
            emit(prefix);
            return;
        }
        for g in 0..self.sizes.len() {
            if placed[g] < self.sizes[g] && self.ready(g, placed) {
                placed[g] += 1;
                prefix.push(self.labels[g]);
                self.extend(placed, prefix, emit);
                prefix.pop();
                placed[g] -= 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::floors::{enumerate_floor_diagrams, FloorProfile};
    use crate::lattice::SurfaceModel;

    fn diagrams(surface: &SurfaceModel, coords: Vec<i64>) -> Vec<FloorDiagram> {
        let class = surface.class(coords).unwrap();
        enumerate_floor_diagrams(&surface.newton_polygon(&class).unwrap()).unwrap()
    }

    #[test]
    fn line_has_one_marking() {
        let d = &diagrams(&SurfaceModel::cp2(), vec![1])[0];
        assert_eq!(count_markings(d, 2).unwrap(), BigUint::from(1u8));
        assert!(matches!(
            count_markings(d, 3),
            Err(FloorError::MarkCountMismatch { expected: 2, found: 3 })
        ));
        assert!(count_markings(d, 0).is_err());
    }

    #[test]
    fn explicit_extensions_match_count() {
        for d in diagrams(&SurfaceModel::cp2(), vec![3])
            .into_iter()
            .chain(diagrams(&SurfaceModel::f0(), vec![2, 2]))
        {
            let n = d.profile().marks();
            let all = linear_extensions(&d);
            for m in &all {
                m.validate().unwrap();
            }
            let quotient = all.len() as u64 / d.automorphisms();
            assert_eq!(count_markings(&d, n).unwrap(), BigUint::from(quotient));
        }
    }

    #[test]
    fn invalid_marking_is_rejected() {
        let d = diagrams(&SurfaceModel::cp2(), vec![1]).remove(0);
        let bad = MarkedFloorDiagram {
            diagram: d.clone(),
            marking: vec![MarkElement::Floor(0), MarkElement::BottomEnd(0)],
        };
        assert!(bad.validate().is_err());
        let good = MarkedFloorDiagram {
            diagram: d,
            marking: vec![MarkElement::BottomEnd(0), MarkElement::Floor(0)],
        };
        good.validate().unwrap();
    }

    #[test]
    fn chain_of_two_floors() {
        let cp2 = SurfaceModel::cp2();
        let poly = cp2.newton_polygon(&cp2.class(vec![2]).unwrap()).unwrap();
        let p = FloorProfile::from_polygon(&poly).unwrap();
        let d = FloorDiagram::from_tree(p, vec![2, 0], vec![0, 0], &[(0, 1)])
            .unwrap()
            .unwrap();
        assert_eq!(count_markings(&d, 5).unwrap(), BigUint::from(1u8));
    }
}
