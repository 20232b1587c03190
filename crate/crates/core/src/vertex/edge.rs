use crate::character::{CharClass, Weight};
use crate::partitions::{char_of_leg, NormalDegrees, PlanePartition};

/// An edge along the `x1` axis with its plane partition and normal degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeContext {
    pub lambda: PlanePartition,
    pub m: NormalDegrees,
}

impl EdgeContext {
    pub fn new(lambda: PlanePartition, m: NormalDegrees) -> Self {
        Self { lambda, m }
    }

    /// `Z_λ = Σ t2^a t3^b t4^c`.
    pub fn z(&self) -> CharClass {
        char_of_leg(&self.lambda, 1)
    }
}

fn t1(k: i32) -> Weight {
    Weight::axis(1).scale(k)
}

/// `A(k)`, the pole-free value of `(t1^{-1} - t1^{-k}) / (1 - t1^{-1})`.
#[allow(non_snake_case)]
pub fn A_k(k: i32) -> CharClass {
    match k {
        ..=0 => CharClass::from_terms((0..=-k).map(|i| (t1(i), -1))),
        1 => CharClass::zero(),
        _ => CharClass::from_terms((0..=k - 2).map(|i| (t1(-1 - i), 1))),
    }
}

/// `B(V) = Σ_ν t^ν A(m·ν)`, with `ν` read off the representative of each
/// weight that has no `t1` dependence.
#[allow(non_snake_case)]
pub fn B_op(v: &CharClass, m: NormalDegrees) -> CharClass {
    let mut out = CharClass::zero();
    for (w, mult) in v.iter() {
        let (nu, _) = w.transverse_to_t1();
        for (a, c) in A_k(m.dot(&nu)).iter() {
            out.add_term(*w + *a, c * mult);
        }
    }
    out
}

/// `F = -Z + Z̄ / (t2 t3 t4) + P̄_{234} Z Z̄`.
pub fn f_full(ctx: &EdgeContext) -> CharClass {
    let z = ctx.z();
    let zb = z.bar();
    let t234_inv = CharClass::monomial(Weight::axis(1), 1);
    &(&(&zb * &t234_inv) - &z) + &(&CharClass::p_bar(&[2, 3, 4]) * &(&z * &zb))
}

/// `f^j_λ = -Z_λ + P̄_{kl} Z_λ Z̄_λ` for `j` in `2..=4`.
pub fn f_leg(lambda: &PlanePartition, j: usize) -> CharClass {
    assert!((2..=4).contains(&j));
    let z = char_of_leg(lambda, 1);
    let kl: Vec<usize> = (2..=4).filter(|&a| a != j).collect();
    &(&CharClass::p_bar(&kl) * &(&z * &z.bar())) - &z
}

/// `E = t1^{-1} F/(1 - t1^{-1}) - F̃/(1 - t1^{-1})`.
pub fn edge_full(ctx: &EdgeContext) -> CharClass {
    B_op(&f_full(ctx), ctx.m)
}

/// `e^j = t1^{-1} f^j/(1 - t1^{-1}) - f̃^j/(1 - t1^{-1})`.
pub fn sqrt_edge(ctx: &EdgeContext, j: usize) -> CharClass {
    B_op(&f_leg(&ctx.lambda, j), ctx.m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::ratchar::times_one_minus;

    fn m(a: [i32; 3]) -> NormalDegrees {
        NormalDegrees::new(a).unwrap()
    }

    #[test]
    fn a_examples() {
        assert_eq!(A_k(0), CharClass::from_terms([(Weight::ZERO, -1)]));
        assert!(A_k(1).is_zero());
        assert_eq!(A_k(3), CharClass::from_terms([(t1(-1), 1), (t1(-2), 1)]));
    }

    #[test]
    fn a_reproduces_the_split() {
        for k in -6..=6 {
            let lhs = times_one_minus(&A_k(k), t1(-1));
            let rhs = CharClass::from_terms([(t1(-1), 1), (t1(-k), -1)]);
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }

    #[test]
    fn b_examples() {
        let mm = m([-1, -1, 0]);
        let t2 = CharClass::monomial(Weight::axis(2), 1);
        assert_eq!(
            B_op(&t2, mm),
            CharClass::from_terms([(Weight::axis(2), -1), (Weight::axis(1) + Weight::axis(2), -1)])
        );
        let w = -(Weight::axis(2) + Weight::axis(3));
        assert_eq!(
            B_op(&CharClass::monomial(w, 1), mm),
            CharClass::monomial(w - Weight::axis(1), 1)
        );
    }

    #[test]
    fn single_box_edge() {
        let l = PlanePartition::new([[0, 0, 0]]).unwrap();
        let ctx = EdgeContext::new(l.clone(), m([-1, -1, 0]));
        let inv = |a: usize| -Weight::axis(a);
        assert_eq!(
            f_leg(&l, 4),
            CharClass::from_terms([(inv(2), -1), (inv(3), -1), (inv(2) + inv(3), 1)])
        );
        let e4 = sqrt_edge(&ctx, 4);
        assert_eq!(e4, CharClass::monomial(Weight::axis(4), 1));
        assert_eq!(&e4 + &e4.bar(), edge_full(&ctx));
        assert!(edge_full(&EdgeContext::new(PlanePartition::empty(), m([0, 0, -2]))).is_zero());
    }
}
