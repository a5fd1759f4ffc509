use num_bigint::BigUint;
use num_traits::One;

use super::diagram::FloorDiagram;

/// Product over elevators of the squared weight.
pub fn complex_multiplicity(diagram: &FloorDiagram) -> BigUint {
    diagram
        .elevators()
        .iter()
        .fold(BigUint::one(), |acc, e| acc * BigUint::from(e.weight) * e.weight)
}

/// Tropical Welschinger multiplicity with all points real: `0` as soon as an
/// edge has even weight, `1` otherwise. Ends always have weight 1.
pub fn real_multiplicity(diagram: &FloorDiagram) -> i64 {
    if diagram.elevators().iter().any(|e| e.weight % 2 == 0) {
        0
    } else {
        1
    }
}
