use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::diagram::FloorProfile;
use super::enumerate::enumerate_profile;
use super::marking::count_markings;
use super::multiplicity::{complex_multiplicity, real_multiplicity};
use super::{parallel_map, Execution, FloorError};
use crate::lattice::{DivisorClass, LatticeError, SurfaceModel};

/// Complex and real counts of one class, with the number of diagrams used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToricCounts {
    pub complex: BigUint,
    pub real: BigInt,
    pub diagrams: usize,
}

/// Curves of class `d - kE` meeting `E` in `a` real points and `b` pairs of
/// complex conjugate points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StratumKey {
    pub k: u32,
    pub a: u64,
    pub b: u64,
}

/// Signed counts per stratum, for a class with `d.E = d_dot_e`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct StratifiedCounts {
    pub d_dot_e: i64,
    pub entries: BTreeMap<StratumKey, BigInt>,
}

impl StratifiedCounts {
    /// Checks `a + 2b = d.E + 2k` for every key.
    pub fn validate(&self) -> Result<(), FloorError> {
        for key in self.entries.keys() {
            let lhs = key.a as i128 + 2 * key.b as i128;
            let rhs = self.d_dot_e as i128 + 2 * key.k as i128;
            if lhs != rhs {
                return Err(FloorError::InternalConsistency(format!(
                    "stratum {key:?} does not meet E in {rhs} points"
                )));
            }
        }
        Ok(())
    }
}

/// Rational curves of `class` through `c1.d - 1` generic points, counted with
/// complex multiplicity and with real multiplicity when all points are real.
pub fn toric_counts(
    surface: &SurfaceModel,
    class: &DivisorClass,
    execution: Execution,
) -> Result<ToricCounts, FloorError> {
    let polygon = surface.newton_polygon(class)?;
    if polygon.height() == 0 {
        // a horizontal segment of lattice length 1 is a single fiber-type line
        return match polygon.boundary_points() {
            0 | 1 => Err(FloorError::EmptyClass),
            2 => Ok(ToricCounts {
                complex: BigUint::from(1u8),
                real: BigInt::from(1),
                diagrams: 0,
            }),
            _ => Ok(ToricCounts {
                complex: BigUint::zero(),
                real: BigInt::zero(),
                diagrams: 0,
            }),
        };
    }
    let profile = FloorProfile::from_polygon(&polygon)?;
    let points = surface.c1_dot(class)? - 1;
    if points != BigInt::from(profile.marks()) {
        return Err(FloorError::InternalConsistency(format!(
            "{} marks against {points} point constraints",
            profile.marks()
        )));
    }
    let diagrams = enumerate_profile(profile, execution)?;
    let n = profile.marks();
    let per_diagram = |d: &super::FloorDiagram| -> Result<(BigUint, BigInt), FloorError> {
        let m = count_markings(d, n)?;
        let real = BigInt::from(m.clone()) * real_multiplicity(d);
        Ok((m * complex_multiplicity(d), real))
    };
    let parts = match execution {
        Execution::Sequential => diagrams.iter().map(per_diagram).collect::<Vec<_>>(),
        Execution::Parallel => parallel_map(&diagrams, per_diagram),
    };
    let mut complex = BigUint::zero();
    let mut real = BigInt::zero();
    for part in parts {
        let (c, r) = part?;
        complex += c;
        real += r;
    }
    Ok(ToricCounts {
        complex,
        real,
        diagrams: diagrams.len(),
    })
}

/// Gromov-Witten invariant of a toric class.
pub fn gw_toric(surface: &SurfaceModel, class: &DivisorClass) -> Result<BigUint, FloorError> {
    Ok(toric_counts(surface, class, Execution::default())?.complex)
}

/// Welschinger invariant of a toric class with its standard real structure
/// and all points real.
pub fn welschinger_toric(surface: &SurfaceModel, class: &DivisorClass) -> Result<BigInt, FloorError> {
    Ok(toric_counts(surface, class, Execution::default())?.real)
}

/// Classes `d - kE` for `k <= k_max` that have a polygon, with `d.E`.
fn shifted_classes(
    d: &DivisorClass,
    k_max: Option<u32>,
) -> Result<(SurfaceModel, i64, Vec<(u32, DivisorClass)>), FloorError> {
    let f2 = SurfaceModel::f2();
    if d.surface() != f2.name() {
        return Err(LatticeError::SurfaceMismatch {
            expected: f2.name().to_string(),
            found: d.surface().to_string(),
        }
        .into());
    }
    let e = f2.distinguished("E")?;
    let d_dot_e = f2
        .intersect(d, &e)?
        .to_i64()
        .ok_or_else(|| FloorError::Unsupported("d.E out of range".into()))?;
    let a = d.coords()[0];
    // d - kE stops being effective once k exceeds the h-coordinate
    let k_max = k_max.unwrap_or(a.max(0) as u32);
    let mut classes = Vec::new();
    for k in 0..=k_max {
        let shifted = d.sub_multiple(i64::from(k), &e)?;
        if shifted.coords().iter().all(|&c| c >= 0) && shifted.coords().iter().any(|&c| c > 0) {
            classes.push((k, shifted));
        }
    }
    Ok((f2, d_dot_e, classes))
}

/// Real counts of the classes `d - kE` on F2, sorted by how they meet `E`.
/// With all points real every intersection with `E` is real, so every key has
/// `b = 0`; anything else is reported as an internal error.
pub fn relative_real_counts_f2(
    d: &DivisorClass,
    k_max: Option<u32>,
    execution: Execution,
) -> Result<StratifiedCounts, FloorError> {
    let (f2, d_dot_e, classes) = shifted_classes(d, k_max)?;
    let mut entries = BTreeMap::new();
    for (k, class) in classes {
        let meets = d_dot_e + 2 * i64::from(k);
        let polygon = f2.newton_polygon(&class)?;
        let real_meets = if polygon.height() == 0 {
            meets
        } else {
            FloorProfile::from_polygon(&polygon)?.top as i64
        };
        if (meets - real_meets) % 2 != 0 || real_meets > meets {
            return Err(FloorError::InternalConsistency(format!(
                "class {class} meets E in {meets} points but has {real_meets} top ends"
            )));
        }
        let pairs = (meets - real_meets) / 2;
        if pairs != 0 {
            return Err(FloorError::InternalConsistency(format!(
                "class {class} has {pairs} conjugate intersection pairs with E at s = 0"
            )));
        }
        let counts = toric_counts(&f2, &class, execution)?;
        entries.insert(
            StratumKey {
                k,
                a: real_meets as u64,
                b: 0,
            },
            counts.real,
        );
    }
    let strata = StratifiedCounts { d_dot_e, entries };
    strata.validate()?;
    Ok(strata)
}

/// Gromov-Witten invariants of the classes `d - kE` on F2, keyed by `k`.
pub fn relative_complex_counts_f2(
    d: &DivisorClass,
    k_max: Option<u32>,
    execution: Execution,
) -> Result<(i64, BTreeMap<u32, BigUint>), FloorError> {
    let (f2, d_dot_e, classes) = shifted_classes(d, k_max)?;
    let mut out = BTreeMap::new();
    for (k, class) in classes {
        out.insert(k, toric_counts(&f2, &class, execution)?.complex);
    }
    Ok((d_dot_e, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(surface: &SurfaceModel, coords: Vec<i64>) -> (u64, i64) {
        let c = toric_counts(surface, &surface.class(coords).unwrap(), Execution::Sequential).unwrap();
        (c.complex.to_u64().unwrap(), c.real.to_i64().unwrap())
    }

    #[test]
    fn projective_plane() {
        let cp2 = SurfaceModel::cp2();
        assert_eq!(both(&cp2, vec![1]), (1, 1));
        assert_eq!(both(&cp2, vec![2]), (1, 1));
        assert_eq!(both(&cp2, vec![3]), (12, 8));
        assert_eq!(both(&cp2, vec![4]), (620, 240));
        assert!(matches!(
            toric_counts(&cp2, &cp2.class(vec![0]).unwrap(), Execution::Sequential),
            Err(FloorError::EmptyClass)
        ));
    }

    #[test]
    fn quadric() {
        let f0 = SurfaceModel::f0();
        assert_eq!(both(&f0, vec![1, 1]), (1, 1));
        assert_eq!(both(&f0, vec![2, 2]), (12, 8));
        assert_eq!(both(&f0, vec![2, 3]), (96, 48));
        assert_eq!(both(&f0, vec![3, 2]), (96, 48));
        assert_eq!(both(&f0, vec![1, 0]), (1, 1));
        assert_eq!(both(&f0, vec![0, 1]), (1, 1));
        assert_eq!(both(&f0, vec![2, 0]), (0, 0));
        assert_eq!(both(&f0, vec![0, 3]), (0, 0));
    }

    #[test]
    fn hirzebruch() {
        let f2 = SurfaceModel::f2();
        assert_eq!(both(&f2, vec![1, 0]), (1, 1));
        assert_eq!(both(&f2, vec![2, 0]), (10, 6));
        assert_eq!(both(&f2, vec![0, 1]), (1, 1));
    }

    #[test]
    fn strata_of_small_classes() {
        let f2 = SurfaceModel::f2();
        let d = f2.class(vec![1, 0]).unwrap();
        let s = relative_real_counts_f2(&d, None, Execution::Sequential).unwrap();
        assert_eq!(s.d_dot_e, 0);
        assert_eq!(s.entries[&StratumKey { k: 0, a: 0, b: 0 }], BigInt::from(1));
        assert_eq!(s.entries[&StratumKey { k: 1, a: 2, b: 0 }], BigInt::from(0));
        let only = relative_real_counts_f2(&d, Some(0), Execution::Sequential).unwrap();
        assert_eq!(only.entries.len(), 1);
        let f0 = SurfaceModel::f0();
        assert!(relative_real_counts_f2(&f0.class(vec![1, 1]).unwrap(), None, Execution::Sequential).is_err());
    }

    #[test]
    fn strata_validation() {
        let mut s = StratifiedCounts {
            d_dot_e: 1,
            entries: BTreeMap::new(),
        };
        s.entries.insert(StratumKey { k: 1, a: 1, b: 1 }, BigInt::from(2));
        s.validate().unwrap();
        s.entries.insert(StratumKey { k: 1, a: 2, b: 1 }, BigInt::from(2));
        assert!(s.validate().is_err());
    }
}
