use serde::{Deserialize, Serialize};

use crate::character::Weight;
use crate::error::{Error, Result};
use crate::partitions::{leg_axes, NormalDegrees};

/// An invariant line joining two charts.
///
/// `m` is listed in the order of the transverse axes at `alpha` (increasing),
/// and `matching[c]` is the axis at `beta` that continues the `c`-th of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Edge {
    pub alpha: usize,
    pub axis_alpha: usize,
    pub beta: usize,
    pub axis_beta: usize,
    pub m: NormalDegrees,
    pub matching: [usize; 3],
}

impl Edge {
    /// Transverse axes at `alpha`, in the order `m` refers to.
    pub fn transverse_alpha(&self) -> [usize; 3] {
        leg_axes(self.axis_alpha)
    }
}

/// Vertices are given by frames: `frames[α][a-1]` is the global weight of the
/// local coordinate `x_a` of chart `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricGeometry {
    name: String,
    frames: Vec<[Weight; 4]>,
    edges: Vec<Edge>,
}

/// JSON description of a geometry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum GeometrySpec {
    C4 {},
    LocalCurve { m: NormalDegrees },
    KP3 {},
    #[serde(rename = "custom")]
    Custom { vertices: Vec<[Weight; 4]>, edges: Vec<Edge> },
}

fn identity_frame() -> [Weight; 4] {
    std::array::from_fn(|a| Weight::axis(a + 1))
}

impl ToricGeometry {
    pub fn c4() -> Self {
        Self { name: "C4".into(), frames: vec![identity_frame()], edges: vec![] }
    }

    /// Total space of `O(m2) + O(m3) + O(m4)` over `P^1`.
    pub fn local_curve(m: NormalDegrees) -> Self {
        let id = identity_frame();
        let t1 = id[0];
        let beta = [
            -t1,
            id[1] - t1.scale(m.get(2)),
            id[2] - t1.scale(m.get(3)),
            id[3] - t1.scale(m.get(4)),
        ];
        let edge = Edge { alpha: 0, axis_alpha: 1, beta: 1, axis_beta: 1, m, matching: [2, 3, 4] };
        Self::custom_named(format!("LocalCurve{:?}", m.as_array()), vec![id, beta], vec![edge])
            .expect("local curve data is consistent")
    }

    /// The canonical bundle of `P^3`.
    ///
    /// Chart `α` uses `z_b / z_α` with weight `u_b - u_α` (`u_0 = 0`,
    /// `u_k = t_k`) on its three base axes in increasing `b`, and the fiber
    /// coordinate on local axis 4.
    pub fn kp3() -> Self {
        let u = |k: usize| if k == 0 { Weight::ZERO } else { Weight::axis(k) };
        let base = |alpha: usize| -> Vec<usize> { (0..4).filter(|&b| b != alpha).collect() };
        let mut frames = Vec::new();
        for alpha in 0..4 {
            let b = base(alpha);
            frames.push([
                u(b[0]) - u(alpha),
                u(b[1]) - u(alpha),
                u(b[2]) - u(alpha),
                Weight::axis(4) + u(alpha).scale(4),
            ]);
        }
        let local = |alpha: usize, b: usize| base(alpha).iter().position(|&x| x == b).unwrap() + 1;
        let mut edges = Vec::new();
        for alpha in 0..4 {
            for beta in alpha + 1..4 {
                let axis_alpha = local(alpha, beta);
                let axis_beta = local(beta, alpha);
                let matching = leg_axes(axis_alpha).map(|a| {
                    if a == 4 {
                        4
                    } else {
                        local(beta, base(alpha)[a - 1])
                    }
                });
                edges.push(Edge {
                    alpha,
                    axis_alpha,
                    beta,
                    axis_beta,
                    m: NormalDegrees::new([1, 1, -4]).unwrap(),
                    matching,
                });
            }
        }
        Self::custom_named("KP3".into(), frames, edges).expect("KP3 data is consistent")
    }

    pub fn custom(frames: Vec<[Weight; 4]>, edges: Vec<Edge>) -> Result<Self> {
        Self::custom_named("custom".into(), frames, edges)
    }

    fn custom_named(name: String, frames: Vec<[Weight; 4]>, edges: Vec<Edge>) -> Result<Self> {
        let g = Self { name, frames, edges };
        g.validate()?;
        Ok(g)
    }

    pub fn from_spec(spec: &GeometrySpec) -> Result<Self> {
        Ok(match spec {
            GeometrySpec::C4 {} => Self::c4(),
            GeometrySpec::LocalCurve { m } => Self::local_curve(*m),
            GeometrySpec::KP3 {} => Self::kp3(),
            GeometrySpec::Custom { vertices, edges } => Self::custom(vertices.clone(), edges.clone())?,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn frames(&self) -> &[[Weight; 4]] {
        &self.frames
    }

    pub fn frame(&self, alpha: usize) -> &[Weight; 4] {
        &self.frames[alpha]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.frames.len()
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidGeometry(msg));
        if self.frames.is_empty() {
            return bad("no vertices".into());
        }
        for (alpha, f) in self.frames.iter().enumerate() {
            if f.iter().any(|w| w.is_fixed() || w.mass_exponent() != 0) {
                return bad(format!("chart {alpha} has a trivial or massive coordinate weight"));
            }
            if f.iter().fold(Weight::ZERO, |acc, w| acc + *w) != Weight::ZERO {
                return bad(format!("chart {alpha} does not preserve the CY form"));
            }
        }
        let mut used = std::collections::BTreeSet::new();
        for (k, e) in self.edges.iter().enumerate() {
            let nv = self.frames.len();
            if e.alpha >= nv || e.beta >= nv || e.alpha == e.beta {
                return bad(format!("edge {k} has invalid endpoints"));
            }
            if !(1..=4).contains(&e.axis_alpha) || !(1..=4).contains(&e.axis_beta) {
                return bad(format!("edge {k} has an axis out of range"));
            }
            if !used.insert((e.alpha, e.axis_alpha)) || !used.insert((e.beta, e.axis_beta)) {
                return bad(format!("edge {k} reuses a chart axis"));
            }
            let mut target = e.matching;
            target.sort_unstable();
            if target != leg_axes(e.axis_beta) {
                return bad(format!("edge {k} has an inconsistent axis matching"));
            }
            let fa = &self.frames[e.alpha];
            let fb = &self.frames[e.beta];
            let wa = fa[e.axis_alpha - 1];
            if fb[e.axis_beta - 1] != -wa {
                return bad(format!("edge {k}: axis weights at the two ends are not inverse"));
            }
            for (c, &a) in e.transverse_alpha().iter().enumerate() {
                let expect = fa[a - 1] - wa.scale(e.m.get(c + 2));
                if fb[e.matching[c] - 1] != expect {
                    return bad(format!("edge {k}: transverse axis {a} does not match its degree"));
                }
            }
        }
        Ok(())
    }
}
