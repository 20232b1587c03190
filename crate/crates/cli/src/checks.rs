use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use dt4_core::character::class_in_mode;
use dt4_core::geometry::{enumerate_fixed_points, min_chi, sign_patching_check, ToricGeometry};
use dt4_core::partitions::{
    enumerate_curve, plane_up_to, sigma_curve_at, sigma_edge, sigma_point, solid_up_to, CurvePartition,
    NormalDegrees, PlanePartition,
};
use dt4_core::vertex::{sqrt_edge, sqrt_vertex_curve_prime, sqrt_vertex_point, EdgeContext, VertexContext};
use dt4_core::{euler, FactoredClass, Mode, Result};

use crate::config::{ChiArgs, ClassMode, CurveSignsArgs, EdgeSignsArgs, SignPatchingArgs, VertexSignsArgs};

/// Outcome of a sweep. Failures carry enough data to replay them.
pub struct Sweep {
    pub checked: usize,
    pub failures: Vec<Value>,
    pub details: Value,
}

const PAIRS4: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
const PAIRS3: [(usize, usize); 3] = [(2, 3), (2, 4), (3, 4)];

fn mode_of(m: ClassMode) -> Mode {
    match m {
        ClassMode::Cohomological => Mode::Cohomological,
        ClassMode::KTheoretic => Mode::KTheoretic,
    }
}

pub fn vertex_signs(a: &VertexSignsArgs) -> Result<Sweep> {
    let mode = mode_of(a.mode);
    let parts: Vec<_> = solid_up_to(a.max_size).into_iter().filter(|p| !p.is_empty()).collect();
    let per: Vec<Vec<Value>> = parts
        .par_iter()
        .map(|p| {
            let signed = (1..=4)
                .map(|i| Ok(class_in_mode(&-sqrt_vertex_point(p, i), mode)?.signed(sigma_point(p, i))))
                .collect::<Result<Vec<FactoredClass>>>()?;
            Ok(PAIRS4
                .iter()
                .filter(|(i, j)| signed[i - 1] != signed[j - 1])
                .map(|(i, j)| json!({"partition": p, "axes": [i, j]}))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(Sweep {
        checked: parts.len() * PAIRS4.len(),
        failures: per.into_iter().flatten().collect(),
        details: json!({"partitions": parts.len(), "mode": a.mode}),
    })
}

pub fn edge_signs(a: &EdgeSignsArgs, ms: &[NormalDegrees]) -> Result<Sweep> {
    let parts: Vec<_> = plane_up_to(a.max_size).into_iter().filter(|p| !p.is_empty()).collect();
    let cases: Vec<(NormalDegrees, PlanePartition)> =
        ms.iter().flat_map(|m| parts.iter().map(move |l| (*m, l.clone()))).collect();
    let per: Vec<Vec<Value>> = cases
        .par_iter()
        .map(|(m, l)| {
            let ctx = EdgeContext::new(l.clone(), *m);
            let signed = (2..=4)
                .map(|j| Ok(euler(&-sqrt_edge(&ctx, j))?.signed(sigma_edge(l, *m, j))))
                .collect::<Result<Vec<FactoredClass>>>()?;
            Ok(PAIRS3
                .iter()
                .filter(|(i, j)| signed[i - 2] != signed[j - 2])
                .map(|(i, j)| json!({"partition": l, "m": m, "axes": [i, j]}))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(Sweep {
        checked: cases.len() * PAIRS3.len(),
        failures: per.into_iter().flatten().collect(),
        details: json!({"partitions": parts.len(), "m_set": ms}),
    })
}

/// All assignments of plane partitions to the four legs with total size at
/// most `budget`.
pub fn leg_configs(budget: usize) -> Vec<[PlanePartition; 4]> {
    let planes = plane_up_to(budget);
    let mut out = vec![];
    for a in &planes {
        for b in &planes {
            for c in &planes {
                for d in &planes {
                    if a.len() + b.len() + c.len() + d.len() <= budget {
                        out.push([a.clone(), b.clone(), c.clone(), d.clone()]);
                    }
                }
            }
        }
    }
    out
}

pub fn curve_signs(a: &CurveSignsArgs) -> Result<Sweep> {
    let parts: Vec<CurvePartition> = leg_configs(a.legs_budget)
        .iter()
        .flat_map(|legs| enumerate_curve(legs, a.extra_budget))
        .filter(|p| !p.is_point_like())
        .collect();
    let per: Vec<Vec<Value>> = parts
        .par_iter()
        .map(|p| {
            let n = p.default_cutoff();
            let mut out = vec![];
            let mut reference: Option<FactoredClass> = None;
            for cut in [n, n + 1] {
                let ctx = VertexContext::with_cutoff(p.clone(), cut)?;
                let signed = (1..=4)
                    .map(|i| Ok(euler(&-sqrt_vertex_curve_prime(&ctx, i)?)?.signed(sigma_curve_at(p, i, cut))))
                    .collect::<Result<Vec<FactoredClass>>>()?;
                for (i, j) in PAIRS4 {
                    if signed[i - 1] != signed[j - 1] {
                        out.push(json!({"partition": p, "axes": [i, j], "cutoff": cut}));
                    }
                }
                match &reference {
                    Some(r) if *r != signed[0] => out.push(json!({"partition": p, "cutoffs": [n, cut]})),
                    None => reference = Some(signed[0].clone()),
                    _ => {}
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(Sweep {
        checked: parts.len() * PAIRS4.len(),
        failures: per.into_iter().flatten().collect(),
        details: json!({"partitions": parts.len(), "cutoffs": "N and N+1"}),
    })
}

/// `|π ∩ [0,N]^4| - (N+1) Σ|legs|` by scanning the cube.
fn counted_volume(p: &CurvePartition, n: u32) -> i64 {
    let mut inside = 0i64;
    for a in 0..=n {
        for b in 0..=n {
            for c in 0..=n {
                for d in 0..=n {
                    inside += p.contains(&[a, b, c, d]) as i64;
                }
            }
        }
    }
    inside - (n as i64 + 1) * p.leg_size() as i64
}

pub fn chi(a: &ChiArgs, ms: &[NormalDegrees]) -> Result<Sweep> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let configs: Vec<_> = leg_configs(3).into_iter().filter(|l| l.iter().any(|x| !x.is_empty())).collect();
    let mut failures = vec![];
    for _ in 0..a.samples {
        let legs = configs.choose(&mut rng).expect("nonempty leg list");
        let all = enumerate_curve(legs, rng.gen_range(0..=3));
        let p = all.choose(&mut rng).expect("minimal partition always present");
        let n = p.default_cutoff();
        let v = p.renormalized_volume();
        if v != counted_volume(p, n) || v != counted_volume(p, n + 1) {
            failures.push(json!({"partition": p}));
        }
    }
    let mut points = 0;
    for m in ms {
        let g = ToricGeometry::local_curve(*m);
        for d in 1..=a.max_degree {
            for n in min_chi(&g, &[d])..=a.max_n {
                let fps = enumerate_fixed_points(&g, n, &[d])?;
                points += fps.len();
                for fp in fps {
                    let c = fp.cutoff(&g);
                    if fp.chi(&g) != n || fp.chi_by_counting(&g, c) != n || fp.chi_by_counting(&g, c + 1) != n {
                        failures.push(json!({"m": m, "n": n, "fixed_point": fp}));
                    }
                }
            }
        }
    }
    Ok(Sweep {
        checked: a.samples + points,
        failures,
        details: json!({"samples": a.samples, "seed": a.seed, "fixed_points": points, "m_set": ms}),
    })
}

pub fn sign_patching(a: &SignPatchingArgs) -> Result<Sweep> {
    let g = ToricGeometry::kp3();
    let mut checked = 0;
    let mut failures = vec![];
    let mut per_case = vec![];
    for n in 1..=a.max_n {
        for d in 0..=a.max_degree {
            let r = sign_patching_check(&g, n, d)?;
            checked += r.checked;
            per_case.push(json!({"n": n, "degree": d, "checked": r.checked}));
            failures.extend(r.failures.into_iter().map(|fp| json!({"n": n, "degree": d, "fixed_point": fp})));
        }
    }
    Ok(Sweep { checked, failures, details: json!({"cases": per_case}) })
}
