//! Slow, independent reference computations used to pin the values the main
//! engine produces. Nothing here shares code with `real-enum-core`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of rational plane curves of degree `d` through `3d - 1` points,
/// from the WDVV recursion.
pub fn kontsevich(d: u32) -> BigInt {
    let mut n: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for e in 2..=d as u64 {
        let mut total = BigInt::zero();
        for d1 in 1..e {
            let d2 = e - d1;
            let a = BigInt::from(binomial(3 * e - 4, 3 * d1 - 2)) * (d1 * d2);
            let b = BigInt::from(binomial(3 * e - 4, 3 * d1 - 1)) * (d1 * d1);
            total += &n[d1 as usize] * &n[d2 as usize] * (d1 * d2) * (a - b);
        }
        n.push(total);
    }
    n[d as usize].clone()
}

// --- lattice paths ---------------------------------------------------------

type Pt = (i64, i64);

/// A convex lattice polygon given by its vertices in counterclockwise order.
#[derive(Debug, Clone)]
pub struct Polygon {
    vertices: Vec<Pt>,
}

impl Polygon {
    pub fn new(vertices: Vec<Pt>) -> Self {
        let p = Polygon { vertices };
        assert!(p.signed_area2() > 0, "vertices must be counterclockwise");
        p
    }

    pub fn cp2(d: i64) -> Self {
        Polygon::new(vec![(0, 0), (d, 0), (0, d)])
    }

    /// Bidegree `(a, b)`: width `b`, height `a`.
    pub fn f0(a: i64, b: i64) -> Self {
        Polygon::new(vec![(0, 0), (b, 0), (b, a), (0, a)])
    }

    /// Class `a h + b f` on F2: bottom `2a + b`, top `b`, height `a`.
    pub fn f2(a: i64, b: i64) -> Self {
        if b == 0 {
            Polygon::new(vec![(0, 0), (2 * a, 0), (0, a)])
        } else {
            Polygon::new(vec![(0, 0), (2 * a + b, 0), (b, a), (0, a)])
        }
    }

    fn signed_area2(&self) -> i64 {
        let v = &self.vertices;
        (0..v.len())
            .map(|i| {
                let (a, b) = (v[i], v[(i + 1) % v.len()]);
                a.0 * b.1 - a.1 * b.0
            })
            .sum()
    }

    pub fn contains(&self, p: Pt) -> bool {
        let v = &self.vertices;
        (0..v.len()).all(|i| {
            let (a, b) = (v[i], v[(i + 1) % v.len()]);
            (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0) >= 0
        })
    }

    pub fn points(&self) -> Vec<Pt> {
        let xs = self.vertices.iter().map(|p| p.0);
        let ys = self.vertices.iter().map(|p| p.1);
        let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
        let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
        let mut out = Vec::new();
        for x in x0..=x1 {
            for y in y0..=y1 {
                if self.contains((x, y)) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn boundary_points(&self) -> u64 {
        let v = &self.vertices;
        (0..v.len())
            .map(|i| gcd((v[(i + 1) % v.len()].0 - v[i].0).abs(), (v[(i + 1) % v.len()].1 - v[i].1).abs()) as u64)
            .sum()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `lambda(x, y) = x - eps y` for a tiny irrational `eps`.
fn lambda_less(a: Pt, b: Pt) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1 > b.1)
}

fn cross(o: Pt, a: Pt, b: Pt) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

#[derive(Clone, Copy)]
enum Weight {
    Complex,
    Real,
}

impl Weight {
    fn triangle(self, a: Pt, b: Pt, c: Pt) -> BigInt {
        let area2 = cross(a, b, c).abs();
        match self {
            Weight::Complex => BigInt::from(area2),
            Weight::Real => {
                let sides = [(a, b), (b, c), (c, a)];
                let lengths: Vec<i64> = sides
                    .iter()
                    .map(|(p, q)| gcd((q.0 - p.0).abs(), (q.1 - p.1).abs()))
                    .collect();
                if lengths.iter().any(|l| l % 2 == 0) {
                    return BigInt::zero();
                }
                // Pick: 2A = 2I + B - 2
                let boundary: i64 = lengths.iter().sum();
                let interior = (area2 - boundary + 2) / 2;
                if interior % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                }
            }
        }
    }
}

struct PathCounter<'a> {
    polygon: &'a Polygon,
    weight: Weight,
    upper: Vec<Pt>,
    lower: Vec<Pt>,
    memo: HashMap<(bool, Vec<Pt>), BigInt>,
}

impl PathCounter<'_> {
    fn increasing(&self, path: &[Pt]) -> bool {
        path.windows(2).all(|w| lambda_less(w[0], w[1])) && path.iter().all(|&p| self.polygon.contains(p))
    }

    /// Mikhalkin's recursive multiplicity on the side `plus` (left turns,
    /// ending at the clockwise boundary path) or the other.
    fn side(&mut self, plus: bool, path: Vec<Pt>) -> BigInt {
        let target = if plus { &self.upper } else { &self.lower };
        if path == *target {
            return BigInt::one();
        }
        if let Some(v) = self.memo.get(&(plus, path.clone())) {
            return v.clone();
        }
        let turn = (1..path.len() - 1).find(|&j| {
            let c = cross(path[j - 1], path[j], path[j + 1]);
            if plus {
                c > 0
            } else {
                c < 0
            }
        });
        let value = match turn {
            None => BigInt::zero(),
            Some(j) => {
                let (a, b, c) = (path[j - 1], path[j], path[j + 1]);
                let mut total = BigInt::zero();
                let mut skipped = path.clone();
                skipped.remove(j);
                let w = self.weight.triangle(a, b, c);
                if !w.is_zero() && self.increasing(&skipped) {
                    total += w * self.side(plus, skipped);
                }
                let mut flipped = path.clone();
                flipped[j] = (a.0 + c.0 - b.0, a.1 + c.1 - b.1);
                if self.increasing(&flipped) {
                    total += self.side(plus, flipped);
                }
                total
            }
        };
        self.memo.insert((plus, path), value.clone());
        value
    }
}

/// Boundary path from the lambda-minimal to the lambda-maximal vertex going
/// counterclockwise (`ccw = true`, along the bottom) or clockwise.
fn boundary_path(polygon: &Polygon, ccw: bool) -> Vec<Pt> {
    let boundary = boundary_points_ccw(polygon);
    let start = min_by_lambda(&boundary);
    let end = max_by_lambda(&boundary);
    let n = boundary.len();
    let mut i = boundary.iter().position(|&p| p == start).unwrap();
    let mut out = vec![start];
    while boundary[i] != end {
        i = if ccw { (i + 1) % n } else { (i + n - 1) % n };
        out.push(boundary[i]);
    }
    out
}

fn boundary_points_ccw(polygon: &Polygon) -> Vec<Pt> {
    let v = &polygon.vertices;
    let mut out = Vec::new();
    for i in 0..v.len() {
        let (a, b) = (v[i], v[(i + 1) % v.len()]);
        let g = gcd((b.0 - a.0).abs(), (b.1 - a.1).abs());
        for t in 0..g {
            out.push((a.0 + (b.0 - a.0) / g * t, a.1 + (b.1 - a.1) / g * t));
        }
    }
    out
}

fn min_by_lambda(points: &[Pt]) -> Pt {
    *points.iter().reduce(|a, b| if lambda_less(*b, *a) { b } else { a }).unwrap()
}

fn max_by_lambda(points: &[Pt]) -> Pt {
    *points.iter().reduce(|a, b| if lambda_less(*a, *b) { b } else { a }).unwrap()
}

fn lattice_path_count(polygon: &Polygon, weight: Weight) -> BigInt {
    let mut points = polygon.points();
    points.sort_by(|a, b| {
        if lambda_less(*a, *b) {
            std::cmp::Ordering::Less
        } else if a == b {
            std::cmp::Ordering::Equal
        } else {
            std::cmp::Ordering::Greater
        }
    });
    let steps = polygon.boundary_points() as usize - 1;
    let (start, end) = (points[0], *points.last().unwrap());
    let mut counter = PathCounter {
        polygon,
        weight,
        // the clockwise path runs along the top, the counterclockwise one
        // along the bottom
        upper: boundary_path(polygon, false),
        lower: boundary_path(polygon, true),
        memo: HashMap::new(),
    };
    let inner: Vec<Pt> = points[1..points.len() - 1].to_vec();
    let mut total = BigInt::zero();
    let mut chosen = Vec::new();
    subsets(&inner, 0, steps - 1, &mut chosen, &mut |middle| {
        let mut path = vec![start];
        path.extend_from_slice(middle);
        path.push(end);
        let plus = counter.side(true, path.clone());
        if !plus.is_zero() {
            total += plus * counter.side(false, path);
        }
    });
    total
}

fn subsets(items: &[Pt], from: usize, size: usize, chosen: &mut Vec<Pt>, f: &mut impl FnMut(&[Pt])) {
    if chosen.len() == size {
        f(chosen);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < size - chosen.len() {
            break;
        }
        chosen.push(items[i]);
        subsets(items, i + 1, size, chosen, f);
        chosen.pop();
    }
}

/// Complex count of curves with Newton polygon `polygon` and the maximal
/// number of nodes, through `|boundary points| - 1` points. Reducible
/// curves are included, so this agrees with the rational count only when
/// no reducible curve can pass through that many points.
pub fn lattice_paths_complex(polygon: &Polygon) -> BigInt {
    lattice_path_count(polygon, Weight::Complex)
}

/// Real count with real points only (Welschinger signs), same caveat.
pub fn lattice_paths_real(polygon: &Polygon) -> BigInt {
    lattice_path_count(polygon, Weight::Real)
}

// --- linear extensions -----------------------------------------------------

/// Linear extensions of the poset on `0..n` generated by `relations`
/// (`(a, b)` meaning `a < b`), by dynamic programming over down-sets.
pub fn count_linear_extensions(n: usize, relations: &[(usize, usize)]) -> u128 {
    assert!(n < 26, "too many elements for the subset table");
    let mut below = vec![0u32; n];
    for &(a, b) in relations {
        below[b] |= 1 << a;
    }
    let mut ways = vec![0u128; 1 << n];
    ways[0] = 1;
    for set in 0..(1u32 << n) {
        let w = ways[set as usize];
        if w == 0 {
            continue;
        }
        for (x, &need) in below.iter().enumerate() {
            if set & (1 << x) == 0 && need & !set == 0 {
                ways[(set | (1 << x)) as usize] += w;
            }
        }
    }
    ways[(1usize << n) - 1]
}

/// The same count by trying every permutation; for tiny posets only.
pub fn count_linear_extensions_by_permutation(n: usize, relations: &[(usize, usize)]) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        let mut pos = vec![0; n];
        for (i, &x) in perm.iter().enumerate() {
            pos[x] = i;
        }
        if relations.iter().all(|&(a, b)| pos[a] < pos[b]) {
            count += 1;
        }
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return count;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

// --- floor diagrams by brute force ----------------------------------------

/// Shape of an h-transverse polygon with constant floor divergence.
#[derive(Debug, Clone, Copy)]
pub struct Shape {
    pub height: usize,
    pub bottom: u64,
    pub top: u64,
    pub divergence: i64,
}

impl Shape {
    pub fn cp2(d: usize) -> Self {
        Shape { height: d, bottom: d as u64, top: 0, divergence: 1 }
    }

    pub fn f0(a: usize, b: u64) -> Self {
        Shape { height: a, bottom: b, top: b, divergence: 0 }
    }

    pub fn f2(a: usize, b: u64) -> Self {
        Shape { height: a, bottom: 2 * a as u64 + b, top: b, divergence: 2 }
    }
}

/// Floors labeled `0..h`, with bottom and top end counts and directed
/// weighted elevators `(from, to, weight)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabeledDiagram {
    pub bottom: Vec<u64>,
    pub top: Vec<u64>,
    pub edges: Vec<(usize, usize, u64)>,
}

fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn spanning_trees(h: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..h).flat_map(|i| (i + 1..h).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        if mask.count_ones() as usize + 1 != h {
            continue;
        }
        let edges: Vec<(usize, usize)> =
            (0..pairs.len()).filter(|&i| mask & (1 << i) != 0).map(|i| pairs[i]).collect();
        let mut root: Vec<usize> = (0..h).collect();
        fn find(root: &mut Vec<usize>, x: usize) -> usize {
            if root[x] != x {
                let r = find(root, root[x]);
                root[x] = r;
            }
            root[x]
        }
        let mut acyclic = true;
        for &(a, b) in &edges {
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            if ra == rb {
                acyclic = false;
                break;
            }
            root[ra] = rb;
        }
        if acyclic {
            out.push(edges);
        }
    }
    out
}

/// Every floor diagram of the shape with labeled floors; each isomorphism
/// class appears `h! / |Aut|` times.
pub fn labeled_floor_diagrams(shape: Shape) -> Vec<LabeledDiagram> {
    let h = shape.height;
    let mut out = Vec::new();
    if h == 0 {
        return out;
    }
    let trees = spanning_trees(h);
    for bottom in compositions(shape.bottom, h) {
        for top in compositions(shape.top, h) {
            let excess: Vec<i64> =
                (0..h).map(|v| bottom[v] as i64 - top[v] as i64 - shape.divergence).collect();
            for tree in &trees {
                'orient: for bits in 0u32..(1 << tree.len()) {
                    let mut edges = Vec::new();
                    for (i, &(a, b)) in tree.iter().enumerate() {
                        let (from, to) = if bits & (1 << i) == 0 { (a, b) } else { (b, a) };
                        // flow through the edge is the excess on the `from` side
                        let side = component_without(h, tree, i, from);
                        let w: i64 = side.iter().map(|&v| excess[v]).sum();
                        if w < 1 {
                            continue 'orient;
                        }
                        edges.push((from, to, w as u64));
                    }
                    edges.sort();
                    out.push(LabeledDiagram { bottom: bottom.clone(), top: top.clone(), edges });
                }
            }
        }
    }
    out
}

fn component_without(h: usize, tree: &[(usize, usize)], cut: usize, start: usize) -> Vec<usize> {
    let mut seen = vec![false; h];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(v) = stack.pop() {
        for (i, &(a, b)) in tree.iter().enumerate() {
            if i == cut {
                continue;
            }
            let next = if a == v { b } else if b == v { a } else { continue };
            if !seen[next] {
                seen[next] = true;
                stack.push(next);
            }
        }
    }
    (0..h).filter(|&v| seen[v]).collect()
}

fn relabel(d: &LabeledDiagram, perm: &[usize]) -> LabeledDiagram {
    let h = perm.len();
    let mut bottom = vec![0; h];
    let mut top = vec![0; h];
    for v in 0..h {
        bottom[perm[v]] = d.bottom[v];
        top[perm[v]] = d.top[v];
    }
    let mut edges: Vec<_> = d.edges.iter().map(|&(a, b, w)| (perm[a], perm[b], w)).collect();
    edges.sort();
    LabeledDiagram { bottom, top, edges }
}

fn all_permutations(h: usize) -> Vec<Vec<usize>> {
    if h == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(h - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, h - 1);
            out.push(q);
        }
    }
    out
}

/// Number of floor diagrams up to isomorphism, by comparing every relabeling.
pub fn floor_diagram_classes(shape: Shape) -> usize {
    let perms = all_permutations(shape.height);
    let classes: BTreeSet<LabeledDiagram> = labeled_floor_diagrams(shape)
        .iter()
        .map(|d| perms.iter().map(|p| relabel(d, p)).min().unwrap())
        .collect();
    classes.len()
}

/// The elements to be marked, with their order relations: floors, then
/// elevators, then bottom ends, then top ends.
pub fn marking_poset(d: &LabeledDiagram) -> (usize, Vec<(usize, usize)>) {
    let h = d.bottom.len();
    let mut n = h;
    let mut rel = Vec::new();
    for &(a, b, _) in &d.edges {
        rel.push((a, n));
        rel.push((n, b));
        n += 1;
    }
    for v in 0..h {
        for _ in 0..d.bottom[v] {
            rel.push((n, v));
            n += 1;
        }
    }
    for v in 0..h {
        for _ in 0..d.top[v] {
            rel.push((v, n));
            n += 1;
        }
    }
    (n, rel)
}

fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Complex and real (all points real) counts: each labeled diagram
/// contributes its multiplicity times its markings with interchangeable
/// ends, and the floor relabelings are divided out at the end.
pub fn floor_diagram_counts(shape: Shape) -> (BigUint, BigInt) {
    let mut complex = BigUint::zero();
    let mut real = BigInt::zero();
    for d in labeled_floor_diagrams(shape) {
        let (n, rel) = marking_poset(&d);
        let extensions = BigUint::from(count_linear_extensions(n, &rel));
        let symmetric: BigUint = d.bottom.iter().chain(&d.top).map(|&k| factorial(k)).product();
        assert!((&extensions % &symmetric).is_zero());
        let markings = extensions / &symmetric;
        let weight: BigUint = d.edges.iter().map(|&(_, _, w)| BigUint::from(w * w)).product();
        complex += &weight * &markings;
        if d.edges.iter().all(|&(_, _, w)| w % 2 == 1) {
            real += BigInt::from(markings);
        }
    }
    let floors = factorial(shape.height as u64);
    assert!((&complex % &floors).is_zero());
    assert!((&real % BigInt::from(floors.clone())).is_zero());
    (complex / &floors, real / BigInt::from(floors))
}

/// The sign rule that was proposed before validation: zero with an even
/// weight, otherwise `(-1)^(sum of (w - 1) / 2)` over elevators.
pub fn provisional_real_multiplicity(elevator_weights: &[u64]) -> i64 {
    if elevator_weights.iter().any(|w| w % 2 == 0) {
        return 0;
    }
    let half: u64 = elevator_weights.iter().map(|w| (w - 1) / 2).sum();
    if half.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Real count under [`provisional_real_multiplicity`].
pub fn provisional_real_count(shape: Shape) -> BigInt {
    let mut total = BigInt::zero();
    for d in labeled_floor_diagrams(shape) {
        let (n, rel) = marking_poset(&d);
        let symmetric: BigUint = d.bottom.iter().chain(&d.top).map(|&k| factorial(k)).product();
        let markings = BigUint::from(count_linear_extensions(n, &rel)) / symmetric;
        let weights: Vec<u64> = d.edges.iter().map(|e| e.2).collect();
        total += BigInt::from(markings) * provisional_real_multiplicity(&weights);
    }
    total / BigInt::from(factorial(shape.height as u64))
}

// --- node counts and binomial sums ----------------------------------------

/// `delta(d) = (d^2 - c1.d + 2) / 2`, from the numbers alone.
pub fn nodes(d_squared: i64, c1_d: i64) -> i64 {
    (d_squared - c1_d + 2) / 2
}

/// Both sides of the node balance for `d - kE` with `E^2 = -2`, `c1.E = 0`,
/// expanding `(d - kE)^2` term by term.
pub fn node_balance(d_squared: i64, d_e: i64, c1_d: i64, k: i64) -> (i64, i64) {
    let e_squared = -2;
    let shifted_square = d_squared - 2 * k * d_e + k * k * e_squared;
    let lhs = nodes(shifted_square, c1_d) + k * (d_e + k);
    (lhs, nodes(d_squared, c1_d))
}

/// Coefficient of `x^k` in `(1 + x)^a (1 + x^2)^b`, by multiplying out.
pub fn binomial_product_coefficient(k: usize, a: usize, b: usize) -> BigUint {
    let mut poly = vec![BigUint::one()];
    let times = |poly: Vec<BigUint>, step: usize| {
        let mut out = vec![BigUint::zero(); poly.len() + step];
        for (i, c) in poly.into_iter().enumerate() {
            out[i] += &c;
            out[i + step] += c;
        }
        out
    };
    for _ in 0..a {
        poly = times(poly, 1);
    }
    for _ in 0..b {
        poly = times(poly, 2);
    }
    poly.get(k).cloned().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kontsevich_values() {
        let got: Vec<BigInt> = (1..=5).map(kontsevich).collect();
        let want = [1, 1, 12, 620, 87304].map(BigInt::from);
        assert_eq!(got, want);
    }

    #[test]
    fn lattice_paths_small_plane_curves() {
        for (d, n, w) in [(1, 1, 1), (2, 1, 1), (3, 12, 8)] {
            let p = Polygon::cp2(d);
            assert_eq!(lattice_paths_complex(&p), BigInt::from(n), "d = {d}");
            assert_eq!(lattice_paths_real(&p), BigInt::from(w), "d = {d}");
        }
    }

    #[test]
    fn extension_counters_agree() {
        let rel = [(0, 2), (1, 2), (2, 3), (2, 4), (5, 4)];
        assert_eq!(count_linear_extensions(6, &rel), count_linear_extensions_by_permutation(6, &rel) as u128);
        assert_eq!(count_linear_extensions(4, &[]), 24);
        assert_eq!(count_linear_extensions(3, &[(0, 1), (1, 2)]), 1);
    }

    #[test]
    fn brute_force_floor_counts() {
        for (d, n, w) in [(1, 1, 1), (2, 1, 1), (3, 12, 8), (4, 620, 240)] {
            let (c, r) = floor_diagram_counts(Shape::cp2(d));
            assert_eq!(c, BigUint::from(n as u32), "d = {d}");
            assert_eq!(r, BigInt::from(w), "d = {d}");
        }
    }

    #[test]
    fn provisional_rule_misses_at_degree_four() {
        assert_eq!(provisional_real_count(Shape::cp2(3)), BigInt::from(8));
        assert_eq!(provisional_real_count(Shape::cp2(4)), BigInt::from(234));
    }

    #[test]
    fn node_balance_holds_symbolically() {
        for d_e in -3..=6 {
            for k in 0..=5 {
                let (l, r) = node_balance(10, d_e, 4, k);
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn polynomial_coefficients() {
        assert_eq!(binomial_product_coefficient(2, 2, 1), BigUint::from(2u32));
        assert_eq!(binomial_product_coefficient(0, 0, 0), BigUint::one());
        assert_eq!(binomial_product_coefficient(9, 2, 1), BigUint::zero());
    }
}
