use crate::character::{CharClass, RatSum, Weight};
use crate::error::{Error, Result};
use crate::partitions::{char_of_leg, char_of_solid, CurvePartition};

use super::point::{others, others2, sqrt_vertex_of};

/// A curve-like vertex at a fixed cut-off `N` with its derived characters.
#[derive(Clone, Debug)]
pub struct VertexContext {
    pi: CurvePartition,
    cutoff: u32,
    z_nor: CharClass,
    z_cut: [CharClass; 4],
    z_leg: [CharClass; 4],
}

fn t(a: usize, k: i32) -> CharClass {
    CharClass::monomial(Weight::axis(a).scale(k), 1)
}

fn one_over(a: usize, k: i32) -> RatSum {
    RatSum::fraction(CharClass::one(), &[Weight::axis(a).scale(k)])
}

impl VertexContext {
    /// Context at the default cut-off `2 + bound`.
    pub fn new(pi: CurvePartition) -> Self {
        let n = pi.default_cutoff();
        Self::build(pi, n)
    }

    pub fn with_cutoff(pi: CurvePartition, n: u32) -> Result<Self> {
        if n < pi.default_cutoff() {
            return Err(Error::InvalidInput(format!(
                "cut-off {n} below the admissible minimum {}",
                pi.default_cutoff()
            )));
        }
        Ok(Self::build(pi, n))
    }

    fn build(pi: CurvePartition, n: u32) -> Self {
        let z_nor = char_of_solid(&pi.truncation(n));
        let z_leg: [CharClass; 4] = std::array::from_fn(|a| char_of_leg(pi.leg(a + 1), a + 1));
        let z_cut = std::array::from_fn(|a| char_of_solid(&pi.leg_truncation(a + 1, n)));
        Self { pi, cutoff: n, z_nor, z_cut, z_leg }
    }

    pub fn partition(&self) -> &CurvePartition {
        &self.pi
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// The same partition at cut-off `N + 1`.
    pub fn next(&self) -> Self {
        Self::build(self.pi.clone(), self.cutoff + 1)
    }

    /// `Z_{π^nor}`, the character of `π ∩ [0,N]^4`.
    pub fn z_nor(&self) -> &CharClass {
        &self.z_nor
    }

    /// `Z_{π_a} = Z_{λ_a} Σ_{n=0}^N t_a^n`.
    pub fn z_cut(&self, a: usize) -> &CharClass {
        &self.z_cut[a - 1]
    }

    /// `Z_{λ_a}` in the variables transverse to `a`.
    pub fn z_leg(&self, a: usize) -> &CharClass {
        &self.z_leg[a - 1]
    }

    fn n1(&self) -> i32 {
        self.cutoff as i32 + 1
    }

    /// `Z_{λ_a} t_a^{N+1} / (1 - t_a)`.
    fn tail(&self, a: usize) -> RatSum {
        RatSum::fraction(&self.z_leg[a - 1] * &t(a, self.n1()), &[Weight::axis(a)])
    }

    /// `Z̄_{λ_a} t_a^{-(N+1)} / (1 - t_a^{-1})`.
    fn tail_bar(&self, a: usize) -> RatSum {
        RatSum::fraction(&self.z_leg[a - 1].bar() * &t(a, -self.n1()), &[-Weight::axis(a)])
    }

    /// `Z_π` as a rational character.
    pub fn z(&self) -> RatSum {
        let mut z = RatSum::poly(self.z_nor.clone());
        for a in 1..=4 {
            if !self.z_leg[a - 1].is_zero() {
                z.add(&self.tail(a));
            }
        }
        z
    }
}

fn pbar(axes: &[usize]) -> RatSum {
    RatSum::poly(CharClass::p_bar(axes))
}

/// `V_π = Z + Z̄ - P̄_{1234} Z Z̄ + Σ_i F_i / (1 - t_i)`.
pub fn vertex_full(ctx: &VertexContext) -> Result<CharClass> {
    let z = ctx.z();
    let zb = z.bar();
    let mut v = z.clone();
    v.add(&zb);
    v.sub(&pbar(&[1, 2, 3, 4]).mul(&z.mul(&zb)));
    for i in 1..=4 {
        let zl = ctx.z_leg(i);
        if zl.is_zero() {
            continue;
        }
        let zlb = zl.bar();
        let f = &(&(&zlb * &t(i, 1)) - zl) + &(&CharClass::p_bar(&others(i)) * &(zl * &zlb));
        v.add(&RatSum::fraction(f, &[Weight::axis(i)]));
    }
    v.into_class()
}

/// The square root `v^i_π` of a curve-like vertex term.
pub fn sqrt_vertex_curve(ctx: &VertexContext, i: usize) -> Result<CharClass> {
    sqrt_vertex_curve_rat(ctx, i).into_class()
}

fn sqrt_vertex_curve_rat(ctx: &VertexContext, i: usize) -> RatSum {
    assert!((1..=4).contains(&i));
    let z = ctx.z();
    let zb = z.bar();
    let p = pbar(&others(i));
    let mut v = z.clone();
    v.sub(&p.mul(&z.mul(&zb)));
    for j in others(i) {
        let zl = ctx.z_leg(j);
        if zl.is_zero() {
            continue;
        }
        let f = &(&CharClass::p_bar(&others2(i, j)) * &(zl * &zl.bar())) - zl;
        v.add(&RatSum::fraction(f, &[Weight::axis(j)]));
    }
    let zl = ctx.z_leg(i);
    if !zl.is_zero() {
        let zl_r = RatSum::poly(zl.clone());
        let zlb_r = RatSum::poly(zl.bar());
        let mut inner = zl_r.neg();
        let mut cross = zb.mul(&zl_r);
        cross.sub(&z.mul(&zlb_r));
        inner.add(&p.mul(&cross));
        inner.add(&p.mul(&zl_r.mul(&zlb_r)).mul(&one_over(i, 1)));
        v.add(&inner.mul(&one_over(i, 1)));
    }
    v
}

/// `C^i_π` with `P̄` taken over the listed axes, as a rational character.
pub fn correction_c_with(ctx: &VertexContext, i: usize, pbar_axes: &[usize]) -> RatSum {
    let zc = ctx.z_cut(i);
    if zc.is_zero() {
        return RatSum::zero();
    }
    let zc_r = RatSum::poly(zc.clone());
    let mut inner = RatSum::poly(zc * &(&ctx.z_nor().bar() - &zc.bar()));
    for a in others(i) {
        if !ctx.z_leg(a).is_zero() {
            inner.add(&ctx.tail_bar(a).mul(&zc_r));
        }
    }
    pbar(pbar_axes).mul(&inner)
}

/// `C^i_π = P̄_{jkl}( Z_{π_i}(Z̄_{π^nor} - Z̄_{π_i}) + Σ_{a≠i} Z̄_{λ_a} t_a^{-(N+1)} Z_{π_i} / (1 - t_a^{-1}) )`.
///
/// Every tail denominator `1 - t_a^{-1}` with `a ≠ i` divides `P̄_{jkl}`, so
/// the result is a Laurent polynomial.
pub fn correction_c(ctx: &VertexContext, i: usize) -> CharClass {
    correction_c_with(ctx, i, &others(i))
        .into_class()
        .expect("tail denominators divide P̄")
}

/// Parity bridge between the signs for `v` and `v'`: `rk (C^i)^mov mod 2`.
pub fn c_bridge_parity(ctx: &VertexContext, i: usize) -> i64 {
    correction_c(ctx, i).movable_part().rank().rem_euclid(2)
}

/// `v'^i = v^i - C^i + C̄^i`.
pub fn sqrt_vertex_curve_prime(ctx: &VertexContext, i: usize) -> Result<CharClass> {
    let v = sqrt_vertex_curve(ctx, i)?;
    let c = correction_c(ctx, i);
    Ok(&(&v - &c) + &c.bar())
}

/// `v^i_{π^nor} - Σ_a v^i_{π_a} + A^i + B^i + C^i - C̄^i`, evaluated independently
/// of [`sqrt_vertex_curve`].
pub fn vertex_decomposition(ctx: &VertexContext, i: usize) -> Result<CharClass> {
    let p = pbar(&others(i));
    let p4 = pbar(&[1, 2, 3, 4]);
    let legs: Vec<usize> = (1..=4).filter(|&a| !ctx.z_leg(a).is_zero()).collect();
    let nor = RatSum::poly(ctx.z_nor().clone());
    let nor_b = nor.bar();

    let mut out = RatSum::poly(sqrt_vertex_of(ctx.z_nor(), i));
    for &a in &legs {
        out.sub(&RatSum::poly(sqrt_vertex_of(ctx.z_cut(a), i)));
    }

    let mut a_term = RatSum::zero();
    for &a in legs.iter().filter(|&&a| a != i) {
        for &b in legs.iter().filter(|&&b| b != i && b != a) {
            a_term.add(&p.mul(&ctx.tail(a).mul(&ctx.tail_bar(b))));
        }
        if legs.contains(&i) {
            a_term.add(&p4.mul(&ctx.tail(a).mul(&ctx.tail_bar(i))));
        }
    }
    out.sub(&a_term);

    let mut b_term = RatSum::zero();
    for &a in legs.iter().filter(|&&a| a != i) {
        let zc = RatSum::poly(ctx.z_cut(a).clone());
        let mut d = nor_b.clone();
        d.sub(&zc.bar());
        let mut part = ctx.tail(a).mul(&d);
        let mut e = nor.clone();
        e.sub(&zc);
        part.add(&ctx.tail_bar(a).mul(&e));
        b_term.add(&p.mul(&part));
    }
    if legs.contains(&i) {
        let mut e = nor.clone();
        e.sub(&RatSum::poly(ctx.z_cut(i).clone()));
        b_term.add(&p4.mul(&ctx.tail_bar(i).mul(&e)));
    }
    out.sub(&b_term);

    let c = correction_c_with(ctx, i, &others(i));
    out.add(&c);
    out.sub(&c.bar());
    out.into_class()
}
