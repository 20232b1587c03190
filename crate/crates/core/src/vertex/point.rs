use crate::character::CharClass;
use crate::partitions::{char_of_solid, SolidPartition};

/// Axes other than `i`, increasing.
pub(crate) fn others(i: usize) -> Vec<usize> {
    (1..=4).filter(|&a| a != i).collect()
}

/// Axes other than `i` and `j`, increasing.
pub(crate) fn others2(i: usize, j: usize) -> Vec<usize> {
    (1..=4).filter(|&a| a != i && a != j).collect()
}

/// `v^i = Z - P̄_{jkl} Z Z̄` for a character `Z` of a point-like partition.
pub fn sqrt_vertex_of(z: &CharClass, i: usize) -> CharClass {
    z - &(&CharClass::p_bar(&others(i)) * &(z * &z.bar()))
}

/// Square root `v^i_π` of a point-like vertex term.
pub fn sqrt_vertex_point(p: &SolidPartition, i: usize) -> CharClass {
    assert!((1..=4).contains(&i));
    sqrt_vertex_of(&char_of_solid(p), i)
}

/// `V_π = Z + Z̄ - P̄_{1234} Z Z̄` for a point-like partition.
pub fn vertex_point(p: &SolidPartition) -> CharClass {
    let z = char_of_solid(p);
    let zb = z.bar();
    &(&z + &zb) - &(&CharClass::p_bar(&[1, 2, 3, 4]) * &(&z * &zb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::Weight;

    #[test]
    fn single_box_axis_four() {
        let p = SolidPartition::new([[0, 0, 0, 0]]).unwrap();
        let v = sqrt_vertex_point(&p, 4);
        let inv = |e: [i32; 4]| Weight::monomial(e.map(|x| -x));
        let expect = CharClass::from_terms([
            (inv([1, 0, 0, 0]), 1),
            (inv([0, 1, 0, 0]), 1),
            (inv([0, 0, 1, 0]), 1),
            (inv([1, 1, 0, 0]), -1),
            (inv([1, 0, 1, 0]), -1),
            (inv([0, 1, 1, 0]), -1),
            (inv([1, 1, 1, 0]), 1),
        ]);
        assert_eq!(v, expect);
        assert_eq!(vertex_point(&p), CharClass::from_terms([(Weight::ZERO, 2)]) - CharClass::p_bar(&[1, 2, 3, 4]));
    }
}
