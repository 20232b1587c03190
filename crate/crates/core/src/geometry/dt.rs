use num_rational::Rational64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::fixed::{edge_to_chart, enumerate_fixed_points, min_chi, FixedPoint};
use super::toric::ToricGeometry;
use crate::character::{class_in_mode, sum_factored, theta, CharClass, Mode, Polynomial, RationalFunction, Weight};
use crate::error::{Error, Result};
use crate::partitions::{char_of_solid, sigma_curve, sigma_edge, sigma_point, CurvePartition, SolidPartition};
use crate::vertex::{sqrt_edge, sqrt_vertex_curve_prime, sqrt_vertex_point, EdgeContext, VertexContext};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum InsertionKind {
    Unit,
    /// `t^μ ⊗ Z_π` with `μ` of mass degree 1.
    MassTautological { mu: Weight },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum DtMode {
    Cohomological,
    KTheoretic,
    /// Elliptic classes truncated at relative order `order` in `p`.
    Elliptic { order: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Insertion {
    pub kind: InsertionKind,
    pub mode: DtMode,
}

impl Insertion {
    pub fn unit(mode: DtMode) -> Self {
        Self { kind: InsertionKind::Unit, mode }
    }

    pub fn mass_tautological(mu: Weight, mode: DtMode) -> Self {
        Self { kind: InsertionKind::MassTautological { mu }, mode }
    }

    fn validate(&self, g: &ToricGeometry) -> Result<()> {
        if let InsertionKind::MassTautological { mu } = self.kind {
            if g.num_vertices() != 1 || !g.edges().is_empty() {
                return Err(Error::InvalidInput("mass-tautological insertion needs the C4 geometry".into()));
            }
            if mu.mass_exponent() != 1 {
                return Err(Error::InvalidInput(format!("insertion weight {mu} must have mass degree 1")));
            }
        }
        Ok(())
    }

    /// Polynomial variable names for the value.
    pub fn variables(&self) -> [&'static str; 4] {
        match self.mode {
            DtMode::Cohomological => ["l1", "l2", "l3", "m"],
            _ => ["s1", "s2", "s3", "sy"],
        }
    }
}

/// Square-root axis per chart (`1..=4`) and per edge (`2..=4`, edge frame).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxisChoices {
    pub vertex: Vec<usize>,
    pub edge: Vec<usize>,
}

impl AxisChoices {
    pub fn uniform(g: &ToricGeometry, i: usize, j: usize) -> Self {
        Self { vertex: vec![i; g.num_vertices()], edge: vec![j; g.edges().len()] }
    }

    pub fn default_for(g: &ToricGeometry) -> Self {
        Self::uniform(g, 4, 4)
    }
}

/// Total square root of `T^vir` at a fixed point and its sign exponent.
pub fn signed_square_root(g: &ToricGeometry, fp: &FixedPoint, axes: &AxisChoices) -> Result<(i64, CharClass)> {
    let mut sigma = 0;
    let mut v = CharClass::zero();
    for (alpha, p) in fp.vertices.iter().enumerate() {
        let i = axes.vertex[alpha];
        let (s, local) = vertex_root(p, i)?;
        sigma += s;
        v += &local.through_frame(g.frame(alpha));
    }
    for (k, (e, l)) in g.edges().iter().zip(&fp.edges).enumerate() {
        let j = axes.edge[k];
        sigma += sigma_edge(l, e.m, j);
        let local = sqrt_edge(&EdgeContext::new(l.clone(), e.m), j);
        v += &edge_to_chart(&local, e).through_frame(g.frame(e.alpha));
    }
    Ok((sigma, v))
}

/// `(σ_i, v_i)` of one chart, using `v'` for curve-like partitions.
pub fn vertex_root(p: &CurvePartition, i: usize) -> Result<(i64, CharClass)> {
    if p.is_point_like() {
        let s = SolidPartition::new(p.extra().iter().copied())?;
        Ok((sigma_point(&s, i), sqrt_vertex_point(&s, i)))
    } else {
        Ok((sigma_curve(p, i), sqrt_vertex_curve_prime(&VertexContext::new(p.clone()), i)?))
    }
}

/// One term of a series in `p`: the coefficient of `p^{exponent}`.
#[derive(Clone, Debug)]
pub struct SeriesTerm {
    pub exponent: Rational64,
    pub coefficient: RationalFunction,
}

#[derive(Clone, Debug)]
pub enum DtValue {
    Rational(RationalFunction),
    Series(Vec<SeriesTerm>),
}

impl DtValue {
    pub fn as_rational(&self) -> Option<&RationalFunction> {
        match self {
            DtValue::Rational(r) => Some(r),
            DtValue::Series(_) => None,
        }
    }

    pub fn as_series(&self) -> Option<&[SeriesTerm]> {
        match self {
            DtValue::Series(s) => Some(s),
            DtValue::Rational(_) => None,
        }
    }

    /// Exact equality of values.
    pub fn equals(&self, o: &DtValue) -> bool {
        match (self, o) {
            (DtValue::Rational(a), DtValue::Rational(b)) => a.equals(b),
            (DtValue::Series(a), DtValue::Series(b)) => {
                a.len() == b.len()
                    && a.iter().zip(b).all(|(x, y)| x.exponent == y.exponent && x.coefficient.equals(&y.coefficient))
            }
            _ => false,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            DtValue::Rational(r) => r.to_json(),
            DtValue::Series(s) => Value::Array(
                s.iter()
                    .map(|t| json!({"p": t.exponent.to_string(), "value": t.coefficient.to_json()}))
                    .collect(),
            ),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointLog {
    pub fixed_point: FixedPoint,
    pub sigma: i64,
    pub class: String,
}

#[derive(Clone, Debug)]
pub struct DtResult {
    pub n: i64,
    pub d: Vec<usize>,
    pub insertion: Insertion,
    pub value: DtValue,
    pub terms: usize,
    pub per_point: Option<Vec<PointLog>>,
}

impl DtResult {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "n": self.n,
            "d": self.d,
            "insertion": self.insertion,
            "variables": self.insertion.variables(),
            "value": self.value.to_json(),
            "terms": self.terms,
        });
        if let Some(log) = &self.per_point {
            v["per_point"] = serde_json::to_value(log).expect("serializable log");
        }
        v
    }
}

/// The class the insertion contributes at a C4 fixed point.
fn insertion_char(ins: &Insertion, fp: &FixedPoint) -> Result<CharClass> {
    Ok(match ins.kind {
        InsertionKind::Unit => CharClass::zero(),
        InsertionKind::MassTautological { mu } => {
            let p = SolidPartition::new(fp.vertices[0].extra().iter().copied())?;
            char_of_solid(&p).shift(mu)
        }
    })
}

/// Sum over given fixed points of `(-1)^σ class(-v) · insertion`.
pub fn dt_over_points(
    g: &ToricGeometry,
    points: &[FixedPoint],
    ins: &Insertion,
    axes: &AxisChoices,
    log: bool,
) -> Result<(DtValue, Option<Vec<PointLog>>)> {
    ins.validate(g)?;
    let per: Vec<(i64, CharClass)> = points
        .par_iter()
        .map(|fp| {
            let (s, v) = signed_square_root(g, fp, axes)?;
            Ok((s, &insertion_char(ins, fp)? - &v))
        })
        .collect::<Result<_>>()?;

    let mode = match ins.mode {
        DtMode::Cohomological => Mode::Cohomological,
        _ => Mode::KTheoretic,
    };
    let mut logs = Vec::new();
    let value = match ins.mode {
        DtMode::Cohomological | DtMode::KTheoretic => {
            let mut terms = Vec::with_capacity(per.len());
            for (fp, (s, w)) in points.iter().zip(&per) {
                let c = class_in_mode(w, mode)?.signed(*s);
                if log {
                    logs.push(PointLog { fixed_point: fp.clone(), sigma: *s, class: c.to_string() });
                }
                terms.push((c, Polynomial::one()));
            }
            DtValue::Rational(sum_factored(&terms, mode))
        }
        DtMode::Elliptic { order } => {
            let mut by_lead: std::collections::BTreeMap<Rational64, Vec<_>> = Default::default();
            for (fp, (s, w)) in points.iter().zip(&per) {
                let mut th = theta(w, order)?;
                if s.rem_euclid(2) == 1 {
                    th = th.neg();
                }
                if log {
                    logs.push(PointLog { fixed_point: fp.clone(), sigma: *s, class: th.base().to_string() });
                }
                by_lead.entry(th.leading_exponent()).or_default().push(th);
            }
            let mut out = Vec::new();
            for (lead, ths) in by_lead {
                for k in 0..=order {
                    let terms: Vec<_> = ths.iter().map(|t| (t.base().clone(), t.series()[k].clone())).collect();
                    out.push(SeriesTerm {
                        exponent: lead + Rational64::from_integer(k as i64),
                        coefficient: sum_factored(&terms, Mode::KTheoretic),
                    });
                }
            }
            out.sort_by_key(|t| t.exponent);
            DtValue::Series(out)
        }
    };
    Ok((value, log.then_some(logs)))
}

/// `DT_n(X, d; γ)` by localization with the given square-root axes.
pub fn dt_invariant(
    g: &ToricGeometry,
    n: i64,
    d: &[usize],
    ins: &Insertion,
    axes: &AxisChoices,
    log: bool,
) -> Result<DtResult> {
    if axes.vertex.len() != g.num_vertices() || axes.edge.len() != g.edges().len() {
        return Err(Error::InvalidInput("axis choices do not fit the geometry".into()));
    }
    if axes.vertex.iter().any(|i| !(1..=4).contains(i)) || axes.edge.iter().any(|j| !(2..=4).contains(j)) {
        return Err(Error::InvalidInput("axis choice out of range".into()));
    }
    let points = enumerate_fixed_points(g, n, d)?;
    let (value, per_point) = dt_over_points(g, &points, ins, axes, log)?;
    Ok(DtResult { n, d: d.to_vec(), insertion: *ins, value, terms: points.len(), per_point })
}

/// Smallest `n` reported by [`dt_series`]: the minimal Euler characteristic
/// for nonzero degrees, and 1 for points only.
pub fn series_start(g: &ToricGeometry, d: &[usize]) -> i64 {
    if d.iter().all(|&k| k == 0) {
        1
    } else {
        min_chi(g, d)
    }
}

pub fn dt_series(g: &ToricGeometry, ins: &Insertion, n_max: i64, d: &[usize]) -> Result<Vec<DtResult>> {
    let axes = AxisChoices::default_for(g);
    (series_start(g, d)..=n_max)
        .map(|n| dt_invariant(g, n, d, ins, &axes, false))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SignPatchReport {
    pub checked: usize,
    pub failures: Vec<FixedPoint>,
}

/// All degree vectors with the given total.
pub fn degree_vectors(edges: usize, total: usize) -> Vec<Vec<usize>> {
    if edges == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|k| {
            degree_vectors(edges - 1, total - k).into_iter().map(move |mut rest| {
                rest.insert(0, k);
                rest
            })
        })
        .collect()
}

/// For fixed points on the zero section (`x4 = 0` in every chart), compare
/// `∏(-1)^{σ_4(π_α)} ∏(-1)^{σ_4(λ_e)}` with `(-1)^{n + c1·β}`, where
/// `c1·β = -Σ_e |λ_e| m_e''` and `m''` is the degree along the fiber axis.
pub fn sign_patching_check(g: &ToricGeometry, n: i64, total_degree: usize) -> Result<SignPatchReport> {
    let mut checked = 0;
    let mut failures = Vec::new();
    for d in degree_vectors(g.edges().len(), total_degree) {
        for fp in enumerate_fixed_points(g, n, &d)? {
            if !fp.in_hyperplane(4) {
                continue;
            }
            checked += 1;
            let mut sigma: i64 = fp.vertices.iter().map(|p| sigma_curve(p, 4)).sum();
            let mut c1 = 0;
            for (e, l) in g.edges().iter().zip(&fp.edges) {
                sigma += sigma_edge(l, e.m, 4);
                c1 -= l.len() as i64 * e.m.get(4) as i64;
            }
            if (sigma - n - c1).rem_euclid(2) != 0 {
                failures.push(fp);
            }
        }
    }
    Ok(SignPatchReport { checked, failures })
}
