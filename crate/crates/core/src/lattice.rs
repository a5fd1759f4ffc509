//! Integer homology lattices of the toric surfaces CP2, F0 = CP1 x CP1 and the
//! second Hirzebruch surface F2, together with the class bookkeeping used when
//! F0 degenerates to F2 glued to a quadric along the (-2)-curve.
//!
//! Coordinates are small machine integers; every pairing is evaluated in
//! [`BigInt`] so no degree can overflow silently.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest index allowed in a [`TangencyVector`].
pub const MAX_TANGENCY_INDEX: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("class lives on `{found}` but surface `{expected}` was expected")]
    SurfaceMismatch { expected: String, found: String },
    #[error("class has {found} coordinates but surface `{surface}` has rank {rank}")]
    RankMismatch {
        surface: String,
        rank: usize,
        found: usize,
    },
    #[error("surface `{surface}` has no distinguished class `{name}`")]
    MissingClass { surface: String, name: String },
    #[error("not of rational immersed type: d^2 - c1.d + 2 = {0} is odd or negative")]
    NotRationalType(BigInt),
    #[error("overconstrained problem: c1.d - 1 - 2s = {0}")]
    Overconstrained(BigInt),
    #[error("surface `{0}` has no toric polygon")]
    NotToric(String),
    #[error("toric class {0:?} has a negative coordinate")]
    NegativeCoordinate(Vec<i64>),
    #[error("invalid surface model `{surface}`: {reason}")]
    InvalidModel { surface: String, reason: String },
    #[error("tangency index {0} exceeds {MAX_TANGENCY_INDEX}")]
    TangencyOverflow(usize),
    #[error("unknown surface `{0}`")]
    UnknownSurface(String),
}

/// A class in `H_2(X; Z)` written in the basis of its surface model.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    surface: String,
    coords: Vec<i64>,
}

impl DivisorClass {
    pub fn surface(&self) -> &str {
        &self.surface
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn add(&self, other: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        self.same_surface(other)?;
        Ok(DivisorClass {
            surface: self.surface.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, k: i64) -> DivisorClass {
        DivisorClass {
            surface: self.surface.clone(),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// `self - k * other`.
    pub fn sub_multiple(&self, k: i64, other: &DivisorClass) -> Result<DivisorClass, LatticeError> {
        self.add(&other.scale(-k))
    }

    fn same_surface(&self, other: &DivisorClass) -> Result<(), LatticeError> {
        if self.surface != other.surface {
            return Err(LatticeError::SurfaceMismatch {
                expected: self.surface.clone(),
                found: other.surface.clone(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.surface)?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// How a class of a toric model is turned into its Newton polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PolygonRule {
    /// Degree `d` gives the triangle `(0,0),(d,0),(0,d)`.
    ProjectiveTriangle,
    /// Class `(a,b)` gives the rectangle `[0,b] x [0,a]`.
    Rectangle,
    /// Class `(a,b)` gives the trapezoid `(0,0),(2a+b,0),(b,a),(0,a)`.
    HirzebruchTrapezoid,
    /// No toric polygon.
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    name: String,
    intersection: Vec<Vec<i64>>,
    c1_row: Vec<i64>,
    distinguished: BTreeMap<String, Vec<i64>>,
    polygon_rule: PolygonRule,
}

impl SurfaceModel {
    /// Builds a model after checking shapes and symmetry.
    pub fn new(
        name: impl Into<String>,
        intersection: Vec<Vec<i64>>,
        c1_row: Vec<i64>,
        distinguished: BTreeMap<String, Vec<i64>>,
        polygon_rule: PolygonRule,
    ) -> Result<Self, LatticeError> {
        let name = name.into();
        let rank = c1_row.len();
        let invalid = |reason: String| LatticeError::InvalidModel {
            surface: name.clone(),
            reason,
        };
        if rank == 0 {
            return Err(invalid("rank must be positive".into()));
        }
        if intersection.len() != rank || intersection.iter().any(|row| row.len() != rank) {
            return Err(invalid(format!("intersection matrix is not {rank}x{rank}")));
        }
        for i in 0..rank {
            for j in 0..i {
                if intersection[i][j] != intersection[j][i] {
                    return Err(invalid(format!("intersection matrix not symmetric at ({i},{j})")));
                }
            }
        }
        for (label, coords) in &distinguished {
            if coords.len() != rank {
                return Err(invalid(format!("distinguished class `{label}` has wrong length")));
            }
        }
        Ok(SurfaceModel {
            name,
            intersection,
            c1_row,
            distinguished,
            polygon_rule,
        })
    }

    /// The projective plane, basis `<line>`.
    pub fn cp2() -> Self {
        let distinguished = BTreeMap::from([("line".to_string(), vec![1])]);
        Self::new("cp2", vec![vec![1]], vec![3], distinguished, PolygonRule::ProjectiveTriangle)
            .expect("static model")
    }

    /// The quadric `CP1 x CP1`, basis `<l1, l2>`.
    pub fn f0() -> Self {
        let distinguished = BTreeMap::from([
            ("l1".to_string(), vec![1, 0]),
            ("l2".to_string(), vec![0, 1]),
        ]);
        Self::new(
            "f0",
            vec![vec![0, 1], vec![1, 0]],
            vec![2, 2],
            distinguished,
            PolygonRule::Rectangle,
        )
        .expect("static model")
    }

    /// The second Hirzebruch surface in the basis `<h, f>` of a hyperplane
    /// section of the quadratic cone and a fiber. The class `(a, b)` is the
    /// tropical class with trapezoid `(0,0),(2a+b,0),(b,a),(0,a)`, so a curve
    /// of class `(a, b)` passes through `4a + 2b - 1` points. The (-2)-curve is
    /// `E = h - 2f = (1, -2)`.
    pub fn f2() -> Self {
        let distinguished = BTreeMap::from([
            ("E".to_string(), vec![1, -2]),
            ("h".to_string(), vec![1, 0]),
            ("f".to_string(), vec![0, 1]),
        ]);
        Self::new(
            "f2",
            vec![vec![2, 1], vec![1, 0]],
            vec![4, 2],
            distinguished,
            PolygonRule::HirzebruchTrapezoid,
        )
        .expect("static model")
    }

    /// CP2 blown up at `k` points, basis `<line, e1, .., ek>`; named `cp2_k`.
    pub fn blown_up_cp2(k: usize) -> Self {
        let rank = k + 1;
        let mut intersection = vec![vec![0; rank]; rank];
        intersection[0][0] = 1;
        for (i, row) in intersection.iter_mut().enumerate().skip(1) {
            row[i] = -1;
        }
        let mut c1_row = vec![1; rank];
        c1_row[0] = 3;
        let mut distinguished = BTreeMap::new();
        let mut line = vec![0; rank];
        line[0] = 1;
        distinguished.insert("line".to_string(), line);
        for i in 1..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            distinguished.insert(format!("e{i}"), e);
        }
        Self::new(format!("cp2_{k}"), intersection, c1_row, distinguished, PolygonRule::None)
            .expect("static model")
    }

    /// Looks up one of the built-in models by name.
    pub fn builtin(name: &str) -> Result<Self, LatticeError> {
        match name {
            "cp2" => Ok(Self::cp2()),
            "f0" => Ok(Self::f0()),
            "f2" => Ok(Self::f2()),
            other => other
                .strip_prefix("cp2_")
                .and_then(|k| k.parse::<usize>().ok())
                .filter(|k| (1..=8).contains(k))
                .map(Self::blown_up_cp2)
                .ok_or_else(|| LatticeError::UnknownSurface(other.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.c1_row.len()
    }

    pub fn intersection_matrix(&self) -> &[Vec<i64>] {
        &self.intersection
    }

    pub fn c1_row(&self) -> &[i64] {
        &self.c1_row
    }

    pub fn polygon_rule(&self) -> PolygonRule {
        self.polygon_rule
    }

    pub fn class(&self, coords: Vec<i64>) -> Result<DivisorClass, LatticeError> {
        if coords.len() != self.rank() {
            return Err(LatticeError::RankMismatch {
                surface: self.name.clone(),
                rank: self.rank(),
                found: coords.len(),
            });
        }
        Ok(DivisorClass {
            surface: self.name.clone(),
            coords,
        })
    }

    pub fn distinguished(&self, label: &str) -> Result<DivisorClass, LatticeError> {
        let coords = self
            .distinguished
            .get(label)
            .ok_or_else(|| LatticeError::MissingClass {
                surface: self.name.clone(),
                name: label.to_string(),
            })?;
        self.class(coords.clone())
    }

    fn own(&self, d: &DivisorClass) -> Result<(), LatticeError> {
        if d.surface != self.name {
            return Err(LatticeError::SurfaceMismatch {
                expected: self.name.clone(),
                found: d.surface.clone(),
            });
        }
        if d.coords.len() != self.rank() {
            return Err(LatticeError::RankMismatch {
                surface: self.name.clone(),
                rank: self.rank(),
                found: d.coords.len(),
            });
        }
        Ok(())
    }

    pub fn intersect(&self, d1: &DivisorClass, d2: &DivisorClass) -> Result<BigInt, LatticeError> {
        self.own(d1)?;
        self.own(d2)?;
        let mut total = BigInt::zero();
        for (i, row) in self.intersection.iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                if *m != 0 && d1.coords[i] != 0 && d2.coords[j] != 0 {
                    total += BigInt::from(d1.coords[i]) * BigInt::from(*m) * BigInt::from(d2.coords[j]);
                }
            }
        }
        Ok(total)
    }

    pub fn square(&self, d: &DivisorClass) -> Result<BigInt, LatticeError> {
        self.intersect(d, d)
    }

    pub fn c1_dot(&self, d: &DivisorClass) -> Result<BigInt, LatticeError> {
        self.own(d)?;
        Ok(self
            .c1_row
            .iter()
            .zip(&d.coords)
            .map(|(c, x)| BigInt::from(*c) * BigInt::from(*x))
            .sum())
    }

    /// Number of nodes of an immersed rational curve in class `d`, by adjunction.
    pub fn node_count(&self, d: &DivisorClass) -> Result<BigInt, LatticeError> {
        let numerator: BigInt = self.square(d)? - self.c1_dot(d)? + 2;
        if numerator.is_negative() || numerator.is_odd() {
            return Err(LatticeError::NotRationalType(numerator));
        }
        Ok(numerator / 2)
    }

    /// Number `r` of real point constraints once `s` conjugate pairs are fixed.
    pub fn constraint_split(&self, d: &DivisorClass, s: u64) -> Result<BigInt, LatticeError> {
        let r: BigInt = self.c1_dot(d)? - 1 - BigInt::from(s) * 2;
        if r.is_negative() {
            return Err(LatticeError::Overconstrained(r));
        }
        Ok(r)
    }

    /// Splits `d` into the class `d - kE` carried by the component containing
    /// `E` and the class `k l1 + (d.E + k) l2` carried by the quadric.
    pub fn sum_decompose(
        &self,
        d: &DivisorClass,
        k: u32,
    ) -> Result<(DivisorClass, DivisorClass), LatticeError> {
        let e = self.distinguished("E")?;
        let d_e = self.intersect(d, &e)?;
        let x1 = d.sub_multiple(i64::from(k), &e)?;
        let b = d_e + i64::from(k);
        let b = i64::try_from(b).map_err(|_| LatticeError::InvalidModel {
            surface: self.name.clone(),
            reason: "d.E out of coordinate range".into(),
        })?;
        let x0 = SurfaceModel::f0().class(vec![i64::from(k), b])?;
        if self.c1_dot(&e)?.is_zero() && self.c1_dot(&x1)? != self.c1_dot(d)? {
            return Err(LatticeError::InvalidModel {
                surface: self.name.clone(),
                reason: "c1 is not preserved by d -> d - kE".into(),
            });
        }
        Ok((x1, x0))
    }

    /// Checks `nodes(d - kE) + k (d.E + k) == nodes(d)`.
    pub fn check_node_conservation(&self, d: &DivisorClass, k: u32) -> Result<bool, LatticeError> {
        let e = self.distinguished("E")?;
        if self.square(&e)? != BigInt::from(-2) || !self.c1_dot(&e)?.is_zero() {
            return Err(LatticeError::InvalidModel {
                surface: self.name.clone(),
                reason: "E must satisfy E.E = -2 and c1.E = 0".into(),
            });
        }
        let k_big = BigInt::from(k);
        let shifted = d.sub_multiple(i64::from(k), &e)?;
        let lhs = self.node_count(&shifted)? + &k_big * (self.intersect(d, &e)? + &k_big);
        Ok(lhs == self.node_count(d)?)
    }

    pub fn newton_polygon(&self, class: &DivisorClass) -> Result<LatticePolygon, LatticeError> {
        self.own(class)?;
        if class.coords.iter().any(|c| *c < 0) {
            return Err(LatticeError::NegativeCoordinate(class.coords.clone()));
        }
        let c = &class.coords;
        let vertices = match self.polygon_rule {
            PolygonRule::ProjectiveTriangle => vec![(0, 0), (c[0], 0), (0, c[0])],
            PolygonRule::Rectangle => vec![(0, 0), (c[1], 0), (c[1], c[0]), (0, c[0])],
            PolygonRule::HirzebruchTrapezoid => {
                let (a, b) = (c[0], c[1]);
                vec![(0, 0), (2 * a + b, 0), (b, a), (0, a)]
            }
            PolygonRule::None => return Err(LatticeError::NotToric(self.name.clone())),
        };
        Ok(LatticePolygon::from_vertices(vertices))
    }

    /// Checks the conventions every built-in model must satisfy.
    pub fn self_check(&self) -> Result<(), LatticeError> {
        let fail = |reason: &str| LatticeError::InvalidModel {
            surface: self.name.clone(),
            reason: reason.to_string(),
        };
        let expect = |a: &str, b: &str, value: i64| -> Result<(), LatticeError> {
            let x = self.distinguished(a)?;
            let y = self.distinguished(b)?;
            if self.intersect(&x, &y)? != BigInt::from(value) {
                return Err(fail(&format!("{a}.{b} != {value}")));
            }
            Ok(())
        };
        let expect_c1 = |a: &str, value: i64| -> Result<(), LatticeError> {
            if self.c1_dot(&self.distinguished(a)?)? != BigInt::from(value) {
                return Err(fail(&format!("c1.{a} != {value}")));
            }
            Ok(())
        };
        match self.polygon_rule {
            PolygonRule::HirzebruchTrapezoid => {
                expect("E", "E", -2)?;
                expect_c1("E", 0)?;
                expect_c1("f", 2)?;
                // a class (d, 0) passes through 4d - 1 points
                expect_c1("h", 4)?;
            }
            PolygonRule::Rectangle => {
                expect("l1", "l1", 0)?;
                expect("l2", "l2", 0)?;
                expect("l1", "l2", 1)?;
            }
            PolygonRule::ProjectiveTriangle => {
                expect("line", "line", 1)?;
                expect_c1("line", 3)?;
            }
            PolygonRule::None => {}
        }
        Ok(())
    }
}

/// Identification `H_2(F0) -> H_2(F2)` under the degeneration of the quadric:
/// `l1 + l2` goes to the hyperplane class `h` and `l1` to the fiber `f`, so the
/// (-2)-curve `E = h - 2f` corresponds to `l2 - l1`.
pub fn quadric_class_to_f2(d: &DivisorClass) -> Result<DivisorClass, LatticeError> {
    let f0 = SurfaceModel::f0();
    f0.own(d)?;
    let (p, q) = (d.coords[0], d.coords[1]);
    SurfaceModel::f2().class(vec![q, p - q])
}

/// A convex lattice polygon with vertices listed counterclockwise, starting at
/// the lowest (then leftmost) vertex. Repeated vertices are removed, so
/// degenerate classes give segments or single points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticePolygon {
    vertices: Vec<(i64, i64)>,
}

impl LatticePolygon {
    pub fn from_vertices(mut vertices: Vec<(i64, i64)>) -> Self {
        vertices.dedup();
        while vertices.len() > 1 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        // drop collinear middle points so edges are maximal
        let mut changed = true;
        while changed && vertices.len() > 2 {
            changed = false;
            for i in 0..vertices.len() {
                let n = vertices.len();
                let (a, b, c) = (vertices[(i + n - 1) % n], vertices[i], vertices[(i + 1) % n]);
                if cross(a, b, c) == 0 {
                    vertices.remove(i);
                    changed = true;
                    break;
                }
            }
        }
        if vertices.len() > 2 && signed_area2(&vertices) < 0 {
            vertices.reverse();
        }
        if let Some(start) = (0..vertices.len()).min_by_key(|&i| (vertices[i].1, vertices[i].0)) {
            vertices.rotate_left(start);
        }
        LatticePolygon { vertices }
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    /// Edges as consecutive vertex pairs; a segment yields one edge, a point none.
    pub fn edges(&self) -> Vec<((i64, i64), (i64, i64))> {
        match self.vertices.len() {
            0 | 1 => Vec::new(),
            2 => vec![(self.vertices[0], self.vertices[1])],
            n => (0..n)
                .map(|i| (self.vertices[i], self.vertices[(i + 1) % n]))
                .collect(),
        }
    }

    pub fn edge_lattice_length(edge: ((i64, i64), (i64, i64))) -> u64 {
        let (a, b) = edge;
        (b.0 - a.0).unsigned_abs().gcd(&(b.1 - a.1).unsigned_abs())
    }

    /// Number of lattice points on the boundary.
    pub fn boundary_points(&self) -> u64 {
        match self.vertices.len() {
            0 => 0,
            1 => 1,
            2 => Self::edge_lattice_length(self.edges()[0]) + 1,
            _ => self.edges().into_iter().map(Self::edge_lattice_length).sum(),
        }
    }

    pub fn min_y(&self) -> i64 {
        self.vertices.iter().map(|v| v.1).min().unwrap_or(0)
    }

    pub fn max_y(&self) -> i64 {
        self.vertices.iter().map(|v| v.1).max().unwrap_or(0)
    }

    pub fn height(&self) -> u64 {
        (self.max_y() - self.min_y()) as u64
    }

    /// The horizontal slice `[left, right]` at height `y`, if it has integral ends.
    pub fn slice(&self, y: i64) -> Option<(i64, i64)> {
        if y < self.min_y() || y > self.max_y() {
            return None;
        }
        let mut xs = Vec::new();
        for &(x, vy) in &self.vertices {
            if vy == y {
                xs.push(Some(x));
            }
        }
        for ((x1, y1), (x2, y2)) in self.edges() {
            if (y1 < y && y < y2) || (y2 < y && y < y1) {
                let num = (y - y1) * (x2 - x1);
                let den = y2 - y1;
                xs.push(if num % den == 0 { Some(x1 + num / den) } else { None });
            }
        }
        let xs: Option<Vec<i64>> = xs.into_iter().collect();
        let xs = xs?;
        Some((*xs.iter().min()?, *xs.iter().max()?))
    }

    pub fn contains(&self, p: (i64, i64)) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => self.vertices[0] == p,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                cross(a, b, p) == 0
                    && p.0 >= a.0.min(b.0)
                    && p.0 <= a.0.max(b.0)
                    && p.1 >= a.1.min(b.1)
                    && p.1 <= a.1.max(b.1)
            }
            _ => self.edges().into_iter().all(|(a, b)| cross(a, b, p) >= 0),
        }
    }

    pub fn lattice_points(&self) -> Vec<(i64, i64)> {
        let (Some(x0), Some(x1)) = (
            self.vertices.iter().map(|v| v.0).min(),
            self.vertices.iter().map(|v| v.0).max(),
        ) else {
            return Vec::new();
        };
        let mut pts = Vec::new();
        for y in self.min_y()..=self.max_y() {
            for x in x0..=x1 {
                if self.contains((x, y)) {
                    pts.push((x, y));
                }
            }
        }
        pts
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn signed_area2(v: &[(i64, i64)]) -> i64 {
    let n = v.len();
    (0..n)
        .map(|i| v[i].0 * v[(i + 1) % n].1 - v[(i + 1) % n].0 * v[i].1)
        .sum()
}

/// A finitely supported sequence `alpha = (alpha_1, alpha_2, ...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct TangencyVector {
    entries: Vec<u64>,
}

impl TangencyVector {
    /// `entries[0]` is `alpha_1`.
    pub fn new(mut entries: Vec<u64>) -> Result<Self, LatticeError> {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        if entries.len() > MAX_TANGENCY_INDEX {
            return Err(LatticeError::TangencyOverflow(entries.len()));
        }
        Ok(TangencyVector { entries })
    }

    /// The sequence with a single 1 in position `i` (1-based).
    pub fn unit(i: usize) -> Result<Self, LatticeError> {
        if i == 0 || i > MAX_TANGENCY_INDEX {
            return Err(LatticeError::TangencyOverflow(i));
        }
        let mut entries = vec![0; i];
        entries[i - 1] = 1;
        Ok(TangencyVector { entries })
    }

    pub fn get(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.entries.get(i - 1).copied().unwrap_or(0)
    }

    /// `|alpha| = sum alpha_i`.
    pub fn norm(&self) -> BigInt {
        self.entries.iter().map(|&a| BigInt::from(a)).sum()
    }

    /// `I alpha = sum i * alpha_i`.
    pub fn weighted_norm(&self) -> BigInt {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &a)| BigInt::from(i as u64 + 1) * a)
            .sum()
    }
}
