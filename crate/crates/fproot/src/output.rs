//! JSON and CSV renderings of results. Rationals are strings; floats appear
//! only in uncertified estimates, and infinities are written as `"inf"`.

use std::collections::BTreeMap;

use fproot_core::fpcore::{AgcCheck, ComplexityEstimate, FpBudgets, FpCell, FpReport, GrowthEstimate};
use fproot_core::quiver::{CycleNumber, GraphClass, Quiver};
use fproot_core::spectral::SpectralValue;
use serde::Serialize;
use serde_json::Value;

use crate::TOOL_VERSION;

/// A float as a JSON number, or `"inf"`, `"-inf"`, `"nan"`.
pub fn float(x: f64) -> Value {
    if x.is_finite() {
        serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
    } else if x.is_nan() {
        Value::String("nan".into())
    } else if x > 0.0 {
        Value::String("inf".into())
    } else {
        Value::String("-inf".into())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

pub fn tool() -> Tool {
    Tool { name: "fproot", version: TOOL_VERSION }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    /// Coefficients, constant term first.
    pub poly: Vec<String>,
    pub lo: String,
    pub hi: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralJson {
    /// Exact rational, `"inf"`, or the decimal value.
    pub rho: String,
    pub value: Value,
    pub certified: bool,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateJson>,
}

impl From<&SpectralValue> for SpectralJson {
    fn from(v: &SpectralValue) -> Self {
        let rho = match &v.exact {
            _ if v.is_infinite() => String::from("inf"),
            Some(r) => r.to_string(),
            None => format!("{:.15}", v.value),
        };
        SpectralJson {
            rho,
            value: float(v.value),
            certified: v.certified,
            tolerance: v.tolerance,
            certificate: v.certificate.as_ref().map(|c| CertificateJson {
                poly: c.poly.coeffs().iter().map(ToString::to_string).collect(),
                lo: c.lo.to_string(),
                hi: c.hi.to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    pub tool: Tool,
    pub size: usize,
    #[serde(flatten)]
    pub value: SpectralJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct CyclesJson {
    pub tool: Tool,
    /// `"0"`, `"1"` or `">=2"`.
    pub global: String,
    pub per_vertex: BTreeMap<String, String>,
    pub fpdim: SpectralJson,
}

impl CyclesJson {
    pub fn new(q: &Quiver, c: &CycleNumber, fpdim: &SpectralValue) -> Self {
        CyclesJson {
            tool: tool(),
            global: c.global.to_string(),
            per_vertex: q.vertices().iter().cloned().zip(c.per_vertex.iter().map(ToString::to_string)).collect(),
            fpdim: fpdim.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassifyJson {
    pub tool: Tool,
    /// `"dynkin"`, `"extended-dynkin"` or `"other"`.
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<String>,
}

impl From<GraphClass> for ClassifyJson {
    fn from(c: GraphClass) -> Self {
        let class = match c {
            GraphClass::Dynkin(..) => "dynkin",
            GraphClass::Extended(..) => "extended-dynkin",
            GraphClass::Other => "other",
        };
        ClassifyJson { tool: tool(), class, diagram: (c != GraphClass::Other).then(|| c.to_string()) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GrowthJson {
    pub fpg: Value,
    pub fpv: Value,
    pub fpv_ratio: Option<Value>,
    pub exponential: bool,
    pub window: (usize, usize),
}

impl From<&GrowthEstimate> for GrowthJson {
    fn from(g: &GrowthEstimate) -> Self {
        GrowthJson {
            fpg: float(g.fpg),
            fpv: float(g.fpv),
            fpv_ratio: g.fpv_ratio.map(float),
            exponential: g.exponential,
            window: g.window,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BudgetsJson {
    pub max_module_dim: Option<usize>,
    pub max_set_size: usize,
    pub powers: Vec<i64>,
    pub max_sets: usize,
    pub tries: Option<usize>,
    pub seed: Option<u64>,
}

impl BudgetsJson {
    pub fn new(b: &FpBudgets, max_module_dim: Option<usize>, tries: Option<usize>, seed: Option<u64>) -> Self {
        BudgetsJson {
            max_module_dim,
            max_set_size: b.max_set_size,
            powers: b.powers.clone(),
            max_sets: b.max_sets,
            tries,
            seed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BrickJson {
    pub id: usize,
    pub name: String,
    pub dimvec: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CellJson {
    pub set_size: usize,
    pub power: i64,
    pub value: SpectralJson,
    pub witness: Option<Vec<String>>,
    pub sets_scanned: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson {
    pub tool: Tool,
    pub budgets: BudgetsJson,
    pub bricks: Vec<BrickJson>,
    pub set_counts: Vec<usize>,
    /// Brick-set enumeration stopped at the set budget.
    pub truncated: bool,
    pub grid: Vec<CellJson>,
    pub fpdim: Option<SpectralJson>,
    pub stabilization_index: Option<usize>,
    pub strict_stabilization_index: Option<usize>,
    pub growth: Option<GrowthJson>,
    pub fpgldim: Option<i64>,
    pub fpgldim_at_window_edge: bool,
}

impl ReportJson {
    pub fn new(report: &FpReport, budgets: BudgetsJson, dimvecs: &[Vec<usize>]) -> Self {
        let cell = |c: &FpCell| CellJson {
            set_size: c.set_size,
            power: c.power,
            value: (&c.value).into(),
            witness: report.witness_names(c),
            sets_scanned: c.sets_scanned,
        };
        ReportJson {
            tool: tool(),
            budgets,
            bricks: report
                .names
                .iter()
                .enumerate()
                .map(|(id, name)| BrickJson { id, name: name.clone(), dimvec: dimvecs.get(id).cloned().unwrap_or_default() })
                .collect(),
            set_counts: report.set_counts.clone(),
            truncated: report.truncated,
            grid: report.grid.iter().flatten().map(cell).collect(),
            fpdim: report.fpdim.as_ref().map(Into::into),
            stabilization_index: report.stabilization_index,
            strict_stabilization_index: report.strict_stabilization_index,
            growth: report.growth.as_ref().map(Into::into),
            fpgldim: report.fpgldim,
            fpgldim_at_window_edge: report.fpgldim_at_window_edge,
        }
    }
}

/// Grid as CSV: one line per cell.
pub fn report_csv(report: &FpReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["set_size", "power", "rho", "value", "certified", "witness", "sets_scanned"]).expect("in-memory write");
    for c in report.grid.iter().flatten() {
        let v = SpectralJson::from(&c.value);
        let witness = report.witness_names(c).map(|w| w.join(" ")).unwrap_or_default();
        w.write_record([
            c.set_size.to_string(),
            c.power.to_string(),
            v.rho,
            v.value.to_string().trim_matches('"').to_string(),
            c.value.certified.to_string(),
            witness,
            c.sets_scanned.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

/// Labelled integer grid as CSV: header `corner,c0,c1,...`, then one line
/// per row label.
pub fn grid_csv(corner: &str, cols: &[i64], rows: &[(i64, Vec<u64>)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = std::iter::once(corner.to_string()).chain(cols.iter().map(ToString::to_string)).collect();
    w.write_record(&header).expect("in-memory write");
    for (label, values) in rows {
        let rec: Vec<String> = std::iter::once(label.to_string()).chain(values.iter().map(ToString::to_string)).collect();
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

#[derive(Debug, Clone, Serialize)]
pub struct AgcJson {
    pub c: u64,
    pub d: usize,
    pub holds: bool,
    pub first_violation: Option<(usize, usize, usize)>,
}

impl From<&AgcCheck> for AgcJson {
    fn from(a: &AgcCheck) -> Self {
        AgcJson { c: a.c, d: a.d, holds: a.holds, first_violation: a.first_violation }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexityJson {
    pub cx: Value,
    /// `dim Ext^n(T, T)` for the sum `T` of the simples.
    pub totals: Vec<u64>,
    pub growth: GrowthJson,
    pub agc: AgcJson,
}

impl From<&ComplexityEstimate> for ComplexityJson {
    fn from(c: &ComplexityEstimate) -> Self {
        ComplexityJson { cx: float(c.cx), totals: c.totals.clone(), growth: (&c.growth).into(), agc: (&c.agc).into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StepJson {
    pub degree: usize,
    /// Indecomposable projectives `P_v` in this term, by vertex.
    pub multiplicities: BTreeMap<String, usize>,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResolveJson {
    pub tool: Tool,
    pub depth: usize,
    pub module: BTreeMap<String, usize>,
    pub steps: Vec<StepJson>,
    pub projective_dimension: Option<usize>,
    pub minimal: bool,
    /// `ext_to_simples[n][v] = dim Ext^n(M, S_v)`.
    pub ext_to_simples: Vec<Vec<usize>>,
    /// `simple_ext[n][a][b] = dim Ext^n(S_a, S_b)`.
    pub simple_ext: Vec<Vec<Vec<u64>>>,
    pub complexity: Option<ComplexityJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableJson {
    pub tool: Tool,
    pub surface: String,
    pub n: usize,
    pub cols: Vec<i64>,
    pub rows: Vec<(i64, Vec<u64>)>,
}
