mod checks;
mod config;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};

use dt4_core::geometry::{
    dt_invariant, dt_series, AxisChoices, DtMode, DtResult, DtValue, GeometrySpec, Insertion, ToricGeometry,
};
use dt4_core::partitions::{enumerate_curve, enumerate_plane, enumerate_solid, NormalDegrees, PlanePartition};
use dt4_core::{Error, Weight};

use checks::Sweep;
use config::*;

const REPORT_VERSION: u32 = 1;

enum Failure {
    /// Bad flags, config or input files: exit 2.
    Config(String),
    /// A computation failed: exit 1.
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGeometry(_) | Error::InvalidInput(_) => Failure::Config(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

/// The report text and whether every check passed.
struct Outcome {
    text: String,
    ok: bool,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

fn load_geometry(name: &str) -> Result<ToricGeometry, Failure> {
    match name {
        "C4" => return Ok(ToricGeometry::c4()),
        "KP3" => return Ok(ToricGeometry::kp3()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("LocalCurve:") {
        let m: Vec<i32> = rest
            .split(',')
            .map(|x| x.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|e| Failure::Config(format!("bad normal degrees {rest:?}: {e}")))?;
        let m: [i32; 3] = m.try_into().map_err(|_| Failure::Config("LocalCurve needs three degrees".into()))?;
        return Ok(ToricGeometry::local_curve(NormalDegrees::new(m)?));
    }
    let spec: GeometrySpec = read_json(Path::new(name))?;
    Ok(ToricGeometry::from_spec(&spec)?)
}

fn load_m_set(path: &Option<std::path::PathBuf>) -> Result<Vec<NormalDegrees>, Failure> {
    match path {
        Some(p) => read_json(p),
        None => Ok(NormalDegrees::test_set()),
    }
}

fn insertion(a: &InsertionArgs) -> Result<Insertion, Failure> {
    let mode = match a.mode {
        ModeName::Cohomological => DtMode::Cohomological,
        ModeName::KTheoretic => DtMode::KTheoretic,
        ModeName::Elliptic => DtMode::Elliptic { order: a.order },
    };
    Ok(match a.insertion {
        InsertionName::Unit => Insertion::unit(mode),
        InsertionName::MassTautological => {
            let mu: [i32; 5] =
                a.mu.clone().try_into().map_err(|_| Failure::Config("--mu needs five exponents".into()))?;
            Insertion::mass_tautological(Weight::new(mu), mode)
        }
    })
}

fn degrees(g: &ToricGeometry, d: &[usize]) -> Result<Vec<usize>, Failure> {
    if d.is_empty() {
        return Ok(vec![0; g.edges().len()]);
    }
    if d.len() != g.edges().len() {
        return Err(Failure::Config(format!("{} has {} edges, got {} degrees", g.name(), g.edges().len(), d.len())));
    }
    Ok(d.to_vec())
}

fn display(r: &DtResult) -> String {
    let names = r.insertion.variables();
    match &r.value {
        DtValue::Rational(f) => f.fmt_with(&names),
        DtValue::Series(s) => s
            .iter()
            .map(|t| format!("p^({}) * {}", t.exponent, t.coefficient.fmt_with(&names)))
            .collect::<Vec<_>>()
            .join(" + "),
    }
}

fn result_json(g: &ToricGeometry, r: &DtResult) -> Value {
    let mut v = r.to_json();
    v["geometry"] = json!(g.name());
    v["display"] = json!(display(r));
    v
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(vec![]);
    let err = |e: csv::Error| Failure::Compute(e.to_string());
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(&r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Compute(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn sweep_report(name: &str, task: &Task, s: Sweep, format: Format, started: Option<Instant>) -> Result<Outcome, Failure> {
    let ok = s.failures.is_empty();
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "report_version": REPORT_VERSION,
                "command": name,
                "config": task,
                "ordering": "canonical",
                "checked": s.checked,
                "failed": s.failures.len(),
                "failures": s.failures,
                "details": s.details,
            });
            if let Some(t) = started {
                v["wall_time_s"] = json!(t.elapsed().as_secs_f64());
            }
            pretty(&v)
        }
        Format::Csv => {
            let mut header = vec!["command", "checked", "failed", "failures"];
            let mut row = vec![
                name.to_string(),
                s.checked.to_string(),
                s.failures.len().to_string(),
                serde_json::to_string(&s.failures).expect("serializable failures"),
            ];
            if let Some(t) = started {
                header.push("wall_time_s");
                row.push(t.elapsed().as_secs_f64().to_string());
            }
            csv_text(&header, vec![row])?
        }
    };
    Ok(Outcome { text, ok })
}

fn dt_report(g: &ToricGeometry, results: &[DtResult], format: Format, started: Option<Instant>) -> Result<String, Failure> {
    Ok(match format {
        Format::Json => {
            let mut v = if results.len() == 1 {
                result_json(g, &results[0])
            } else {
                json!({"geometry": g.name(), "results": results.iter().map(|r| result_json(g, r)).collect::<Vec<_>>()})
            };
            v["report_version"] = json!(REPORT_VERSION);
            if let Some(t) = started {
                v["wall_time_s"] = json!(t.elapsed().as_secs_f64());
            }
            pretty(&v)
        }
        Format::Csv => csv_text(
            &["geometry", "n", "d", "terms", "value"],
            results
                .iter()
                .map(|r| {
                    vec![
                        g.name().to_string(),
                        r.n.to_string(),
                        r.d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
                        r.terms.to_string(),
                        display(r),
                    ]
                })
                .collect(),
        )?,
    })
}

fn enumerate(a: &EnumerateArgs, format: Format) -> Result<Outcome, Failure> {
    let need_n = || a.n.ok_or_else(|| Failure::Config("--n is required for solid and plane partitions".into()));
    let items: Vec<Value> = match a.kind {
        PartitionKind::Solid => enumerate_solid(need_n()?).iter().map(|p| json!(p)).collect(),
        PartitionKind::Plane => enumerate_plane(need_n()?).iter().map(|p| json!(p)).collect(),
        PartitionKind::Curve => {
            let path = a.legs.as_ref().ok_or_else(|| Failure::Config("--legs is required for curve partitions".into()))?;
            let legs: [PlanePartition; 4] = read_json(path)?;
            enumerate_curve(&legs, a.kmax).iter().map(|p| json!(p)).collect()
        }
    };
    let text = if a.count_only {
        format!("{}\n", items.len())
    } else {
        match format {
            Format::Json => pretty(&json!({
                "report_version": REPORT_VERSION,
                "command": "enumerate",
                "config": a,
                "count": items.len(),
                "partitions": items,
            })),
            Format::Csv => csv_text(
                &["index", "partition"],
                items.iter().enumerate().map(|(k, p)| vec![k.to_string(), p.to_string()]).collect(),
            )?,
        }
    };
    Ok(Outcome { text, ok: true })
}

fn run(cfg: &RunConfig) -> Result<Outcome, Failure> {
    let format = cfg.format.unwrap_or_default();
    let started = cfg.timing.then(Instant::now);
    match &cfg.task {
        Task::Enumerate(a) => enumerate(a, format),
        Task::Verify(v) => {
            let (name, sweep) = match v {
                Verify::VertexSigns(a) => ("verify vertex-signs", checks::vertex_signs(a)?),
                Verify::EdgeSigns(a) => ("verify edge-signs", checks::edge_signs(a, &load_m_set(&a.m_set)?)?),
                Verify::CurveSigns(a) => ("verify curve-signs", checks::curve_signs(a)?),
                Verify::Chi(a) => ("verify chi", checks::chi(a, &load_m_set(&a.m_set)?)?),
                Verify::SignPatching(a) => ("verify sign-patching", checks::sign_patching(a)?),
            };
            sweep_report(name, &cfg.task, sweep, format, started)
        }
        Task::Dt(a) => {
            let g = load_geometry(&a.geometry.geometry)?;
            let d = degrees(&g, &a.geometry.degrees)?;
            let ins = insertion(&a.insertion)?;
            let mut axes = AxisChoices::default_for(&g);
            if !a.vertex_axes.is_empty() {
                axes.vertex = a.vertex_axes.clone();
            }
            if !a.edge_axes.is_empty() {
                axes.edge = a.edge_axes.clone();
            }
            let r = dt_invariant(&g, a.n, &d, &ins, &axes, a.log)?;
            Ok(Outcome { text: dt_report(&g, &[r], format, started)?, ok: true })
        }
        Task::DtSeries(a) => {
            let g = load_geometry(&a.geometry.geometry)?;
            let d = degrees(&g, &a.geometry.degrees)?;
            let rs = dt_series(&g, &insertion(&a.insertion)?, a.n_max, &d)?;
            Ok(Outcome { text: dt_report(&g, &rs, format, started)?, ok: true })
        }
    }
}

fn execute(cli: Cli) -> Result<Outcome, Failure> {
    let cfg = match (cli.config, cli.task) {
        (Some(path), None) => {
            let mut cfg: RunConfig = read_json(&path)?;
            // flags given next to --config take precedence
            cfg.output = cli.common.output.or(cfg.output);
            cfg.format = cli.common.format.or(cfg.format);
            cfg.parallel = cli.common.parallel.or(cfg.parallel);
            cfg.timing |= cli.common.timing;
            cfg
        }
        (None, Some(task)) => RunConfig::from_cli(cli.common, task),
        _ => return Err(Failure::Config("give a subcommand or --config".into())),
    };
    if cfg.parallel == Some(0) {
        return Err(Failure::Config("--parallel must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallel.unwrap_or(0))
        .build()
        .map_err(|e| Failure::Compute(e.to_string()))?;
    let out = pool.install(|| run(&cfg))?;
    match &cfg.output {
        Some(path) => fs::write(path, &out.text).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?,
        None => std::io::stdout()
            .write_all(out.text.as_bytes())
            .map_err(|e| Failure::Compute(e.to_string()))?,
    }
    Ok(out)
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(out) if out.ok => ExitCode::SUCCESS,
        Ok(_) => {
            eprintln!("dt4: verification failures, see report");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("dt4: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("dt4: {msg}");
            ExitCode::from(1)
        }
    }
}
