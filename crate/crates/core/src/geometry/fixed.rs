use serde::{Deserialize, Serialize};

use super::toric::{Edge, ToricGeometry};
use crate::character::{CharClass, Weight};
use crate::error::{Error, Result};
use crate::partitions::{
    embed, enumerate_curve, enumerate_plane, f_m, leg_axes, project, Cell, CurvePartition,
    PlanePartition,
};
use crate::vertex::{edge_full, vertex_full, EdgeContext, VertexContext};

/// Partition data of a torus-fixed subscheme: one curve partition per chart
/// (in local coordinates) and one plane partition per edge (in the frame of
/// the edge's `alpha` end).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixedPoint {
    pub vertices: Vec<CurvePartition>,
    pub edges: Vec<PlanePartition>,
}

/// The edge partition as seen from the `beta` end, in increasing axis order.
pub fn transport_leg(lambda: &PlanePartition, e: &Edge) -> PlanePartition {
    let moved = lambda.iter().map(|tau| {
        let mut x = [0u32; 4];
        for c in 0..3 {
            x[e.matching[c] - 1] = tau[c];
        }
        project(&x, e.axis_beta)
    });
    PlanePartition::new(moved).expect("relabeled plane partition")
}

/// Legs forced on every chart by the edge partitions.
fn legs_for(g: &ToricGeometry, edges: &[PlanePartition]) -> Vec<[PlanePartition; 4]> {
    let mut legs: Vec<[PlanePartition; 4]> = vec![Default::default(); g.num_vertices()];
    for (e, lambda) in g.edges().iter().zip(edges) {
        legs[e.alpha][e.axis_alpha - 1] = lambda.clone();
        legs[e.beta][e.axis_beta - 1] = transport_leg(lambda, e);
    }
    legs
}

impl FixedPoint {
    /// `Σ_α |π_α| + Σ_e f_m(λ_e)`.
    pub fn chi(&self, g: &ToricGeometry) -> i64 {
        let v: i64 = self.vertices.iter().map(|p| p.renormalized_volume()).sum();
        let e: i64 = g.edges().iter().zip(&self.edges).map(|(e, l)| f_m(l, e.m)).sum();
        v + e
    }

    /// Independent Euler characteristic: Čech counting of truncated charts.
    ///
    /// Along an edge, `x_a^k x^τ` at `alpha` is `x_a^{-k - m·τ} x^τ` at `beta`;
    /// the two truncated windows `[0, N]` and `[-N - m·τ, -m·τ]` overlap in
    /// `1 - m·τ` sections and together cover `2N + 1 + m·τ` of them.
    pub fn chi_by_counting(&self, g: &ToricGeometry, n: u32) -> i64 {
        let raw: i64 = self.vertices.iter().map(|p| p.truncation(n).len() as i64).sum();
        let overlap: i64 = g
            .edges()
            .iter()
            .zip(&self.edges)
            .flat_map(|(e, l)| l.iter().map(move |tau| e.m.dot(&tau.map(|x| x as i32)) as i64))
            .map(|mt| 2 * n as i64 + 1 + mt)
            .sum();
        raw - overlap
    }

    /// Cut-off large enough for every chart and for the Čech windows.
    pub fn cutoff(&self, g: &ToricGeometry) -> u32 {
        let v = self.vertices.iter().map(|p| p.default_cutoff()).max().unwrap_or(2);
        let e = g
            .edges()
            .iter()
            .zip(&self.edges)
            .flat_map(|(e, l)| l.iter().map(move |tau| e.m.dot(&tau.map(|x| x as i32)).unsigned_abs()))
            .max()
            .unwrap_or(0);
        v.max(e + 2)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.edges.iter().map(|l| l.len()).collect()
    }

    /// Legs of every chart agree with the edge data and no other legs exist.
    pub fn validate(&self, g: &ToricGeometry) -> Result<()> {
        if self.vertices.len() != g.num_vertices() || self.edges.len() != g.edges().len() {
            return Err(Error::InvalidInput("fixed point does not fit the geometry".into()));
        }
        let legs = legs_for(g, &self.edges);
        for (alpha, (p, l)) in self.vertices.iter().zip(&legs).enumerate() {
            if p.legs() != l {
                return Err(Error::InvalidInput(format!("chart {alpha} legs disagree with edge data")));
            }
        }
        Ok(())
    }

    /// Whether every chart partition lies in `{x_axis = 0}`.
    pub fn in_hyperplane(&self, axis: usize) -> bool {
        self.vertices.iter().all(|p| {
            p.extra().iter().all(|x| x[axis - 1] == 0)
                && (1..=4)
                    .filter(|&a| a != axis)
                    .all(|a| p.leg(a).iter().all(|tau| embed(tau, a, 0)[axis - 1] == 0))
        })
    }
}

fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    choices.iter().fold(vec![vec![]], |acc, opts| {
        acc.iter()
            .flat_map(|prefix| {
                opts.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect()
    })
}

/// Minimal Euler characteristic over all edge data of the given degrees.
pub fn min_chi(g: &ToricGeometry, d: &[usize]) -> i64 {
    let per_edge: Vec<Vec<PlanePartition>> = d.iter().map(|&k| enumerate_plane(k)).collect();
    product(&per_edge)
        .into_iter()
        .map(|edges| {
            let legs = legs_for(g, &edges);
            let v: i64 = legs.into_iter().map(|l| CurvePartition::minimal(l).renormalized_volume()).sum();
            let e: i64 = g.edges().iter().zip(&edges).map(|(e, l)| f_m(l, e.m)).sum();
            v + e
        })
        .min()
        .unwrap_or(0)
}

/// All fixed points with Euler characteristic `n` and edge degrees `d`,
/// sorted canonically.
pub fn enumerate_fixed_points(g: &ToricGeometry, n: i64, d: &[usize]) -> Result<Vec<FixedPoint>> {
    if d.len() != g.edges().len() {
        return Err(Error::InvalidInput(format!(
            "expected {} edge degrees, got {}",
            g.edges().len(),
            d.len()
        )));
    }
    let per_edge: Vec<Vec<PlanePartition>> = d.iter().map(|&k| enumerate_plane(k)).collect();
    let mut out = Vec::new();
    for edges in product(&per_edge) {
        let legs = legs_for(g, &edges);
        let base: i64 = legs
            .iter()
            .map(|l| CurvePartition::minimal(l.clone()).renormalized_volume())
            .sum::<i64>()
            + g.edges().iter().zip(&edges).map(|(e, l)| f_m(l, e.m)).sum::<i64>();
        let budget = n - base;
        if budget < 0 {
            continue;
        }
        let budget = budget as usize;
        // by_extra[α][k]: chart partitions with exactly k extra boxes
        let by_extra: Vec<Vec<Vec<CurvePartition>>> = legs
            .iter()
            .map(|l| {
                let mut groups = vec![Vec::new(); budget + 1];
                for p in enumerate_curve(l, budget) {
                    groups[p.extra().len()].push(p);
                }
                groups
            })
            .collect();
        for split in compositions(budget, g.num_vertices()) {
            let choices: Vec<Vec<CurvePartition>> =
                split.iter().enumerate().map(|(a, &k)| by_extra[a][k].clone()).collect();
            for vertices in product(&choices) {
                out.push(FixedPoint { vertices, edges: edges.clone() });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Ordered ways of writing `total` as `parts` nonnegative summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|k| {
            compositions(total - k, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

/// Relabel a class computed in the standard edge frame (edge along `x1`,
/// transverse `x2, x3, x4`) into the local axes of the edge's `alpha` chart.
pub(crate) fn edge_to_chart(c: &CharClass, e: &Edge) -> CharClass {
    let la = leg_axes(e.axis_alpha);
    c.permute(&[e.axis_alpha, la[0], la[1], la[2]])
}

/// `T^vir = Σ_α V_α + Σ_e E_e` in global weights.
pub fn assemble_tvir(g: &ToricGeometry, fp: &FixedPoint) -> Result<CharClass> {
    fp.validate(g)?;
    let mut total = CharClass::zero();
    for (alpha, p) in fp.vertices.iter().enumerate() {
        let v = vertex_full(&VertexContext::new(p.clone()))?;
        total += &v.through_frame(g.frame(alpha));
    }
    for (e, l) in g.edges().iter().zip(&fp.edges) {
        let ex = edge_full(&EdgeContext::new(l.clone(), e.m));
        total += &edge_to_chart(&ex, e).through_frame(g.frame(e.alpha));
    }
    Ok(total)
}

/// The global weight of a local monomial of chart `alpha`.
pub fn local_weight(g: &ToricGeometry, alpha: usize, x: &Cell<4>) -> Weight {
    Weight::monomial(x.map(|c| c as i32)).through_frame(g.frame(alpha))
}
