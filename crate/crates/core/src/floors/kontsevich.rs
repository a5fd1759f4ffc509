use num_bigint::BigInt;

use crate::arith::binomial;

/// Number of rational plane curves of degree `d` through `3d - 1` points,
/// from Kontsevich's recursion. Returns 0 for `d = 0`.
pub fn kontsevich_cp2(d: u32) -> BigInt {
    let d = d as usize;
    let mut n = vec![BigInt::from(0); d.max(1) + 1];
    if d == 0 {
        return n[0].clone();
    }
    n[1] = BigInt::from(1);
    for total in 2..=d {
        let mut acc = BigInt::from(0);
        let top = 3 * total as u64 - 4;
        for d1 in 1..total {
            let d2 = total - d1;
            let (a, b) = (d1 as u64, d2 as u64);
            let first = BigInt::from(a * b) * BigInt::from(binomial(top, 3 * a - 2));
            let second = BigInt::from(a * a) * BigInt::from(binomial(top, 3 * a - 1));
            acc += &n[d1] * &n[d2] * BigInt::from(a * b) * (first - second);
        }
        n[total] = acc;
    }
    n[d].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_values() {
        let values: Vec<String> = (1..=6).map(|d| kontsevich_cp2(d).to_string()).collect();
        assert_eq!(values, ["1", "1", "12", "620", "87304", "26312976"]);
        assert_eq!(kontsevich_cp2(0), BigInt::from(0));
    }
}
