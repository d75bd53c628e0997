use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::catalog::Namespace;
use crate::moebius::Matrix;

/// Sign `s` with `m ≡ s·I (mod 3)`, or `None` if `m` has non-integer
/// entries or is not congruent to `±I`.
pub fn mod3_sign(m: &Matrix) -> Option<i8> {
    let mut ints = Vec::with_capacity(4);
    for e in m.entries() {
        let q = e.as_rational()?;
        if !q.denom().is_one() {
            return None;
        }
        ints.push(q.numer().mod_floor(&BigInt::from(3)));
    }
    let [a, b, c, d] = <[BigInt; 4]>::try_from(ints).ok()?;
    if !b.is_zero() || !c.is_zero() || a != d {
        return None;
    }
    if a.is_one() {
        Some(1)
    } else if a == BigInt::from(2) {
        Some(-1)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceEntry {
    pub name: String,
    pub matrix: Matrix,
    /// `1` for `≡ I`, `-1` for `≡ -I`, absent otherwise.
    pub sign: Option<i8>,
}

/// Reductions of the one-cusped boundary parabolics `p1..p4` mod 3.
pub fn mod3_congruence_entries() -> Vec<CongruenceEntry> {
    let ns = Namespace::onecusped();
    (1..=4)
        .map(|i| {
            let name = format!("p{i}");
            let matrix = ns.get(&name).expect("catalog parabolic").clone();
            CongruenceEntry {
                sign: mod3_sign(&matrix),
                name,
                matrix,
            }
        })
        .collect()
}

/// Whether `p1..p4` all lie in the level-3 principal congruence subgroup of
/// `PSL_2(Z)`.
pub fn mod3_congruence_containment() -> bool {
    mod3_congruence_entries().iter().all(|e| e.sign.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reductions() {
        assert_eq!(mod3_sign(&Matrix::from_ints(1, 0, -3, 1)), Some(1));
        assert_eq!(mod3_sign(&Matrix::from_ints(-1, -3, 0, -1)), Some(-1));
        assert_eq!(mod3_sign(&Matrix::from_ints(-2, 3, -3, 4)), Some(1));
        assert_eq!(mod3_sign(&Matrix::from_ints(1, 1, 0, 1)), None);
        assert!(mod3_congruence_containment());
    }
}
