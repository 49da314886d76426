//! Serializable reports and their human-readable table renderings.
//!
//! Reports are plain structs serialized with serde; field order is fixed,
//! there are no maps, and timings are optional, so two runs of the same
//! input with timings disabled produce byte-identical JSON.

use serde::Serialize;

use crate::checks::{CheckStatus, Regime, RingAnalysis, SweepEntry};
use crate::checks::TheoremCheck;
use crate::graph::{display_distance, Graph, INF};
use crate::solver::{self, SdimMethod};
use crate::srg;
use crate::{Caps, Error, OracleMode, Result};

/// Version stamp carried by every JSON report.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Counts {
    pub ideals: u64,
    pub vertices: u64,
    pub maximal_ideals: u64,
    pub boundary: u64,
    pub gamma_edges: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Diameters {
    pub gamma: String,
    pub srg: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SrgStats {
    pub vertices: u64,
    pub edges: u64,
    pub independence_number: u64,
    pub vertex_cover_number: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SdimReport {
    pub value: u64,
    pub method: SdimMethod,
    pub witness: Vec<String>,
    pub witness_valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<u64>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Timings {
    pub analyze_ms: u64,
}

/// Full per-ring record.
#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub ring: String,
    pub chains: Vec<u32>,
    pub regime: Regime,
    pub counts: Counts,
    pub diameters: Diameters,
    pub srg: SrgStats,
    pub sdim: SdimReport,
    pub checks: Vec<TheoremCheck>,
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

fn diameter_display(g: &Graph) -> String {
    if g.vertex_count() == 0 {
        "-".to_string()
    } else {
        display_distance(g.diameter().unwrap_or(INF))
    }
}

fn to_u64(value: u128, what: &'static str) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Overflow(what))
}

impl AnalysisReport {
    pub fn from_analysis(a: &RingAnalysis, timings: Option<Timings>) -> Result<Self> {
        let gamma = &a.derived.gamma;
        let witness: Vec<String> = a
            .sdim
            .witness
            .iter()
            .map(|&v| gamma.label(v).to_string())
            .collect();
        let witness_valid = solver::is_strong_resolving_set(gamma, &a.sdim.witness)?;
        Ok(AnalysisReport {
            schema: SCHEMA_VERSION,
            ring: a.spec.to_string(),
            chains: a.spec.lengths(),
            regime: a.regime,
            counts: Counts {
                ideals: to_u64(a.spec.ideal_count()?, "ideal count")?,
                vertices: gamma.vertex_count() as u64,
                maximal_ideals: a.spec.maximal_ideals().len() as u64,
                boundary: a.srg.base_indices.len() as u64,
                gamma_edges: gamma.edge_count() as u64,
            },
            diameters: Diameters {
                gamma: display_distance(a.gamma_diameter),
                srg: diameter_display(&a.srg.graph),
            },
            srg: SrgStats {
                vertices: a.srg.graph.vertex_count() as u64,
                edges: a.srg.graph.edge_count() as u64,
                independence_number: a.cover.alpha as u64,
                vertex_cover_number: a.cover.beta as u64,
            },
            sdim: SdimReport {
                value: a.sdim.value as u64,
                method: a.sdim.method,
                witness,
                witness_valid,
                oracle: a.oracle_sdim.as_ref().map(|o| o.value as u64),
            },
            checks: a.checks.clone(),
            all_pass: a.all_pass(),
            timings,
        })
    }

    /// Aligned plain-text table for terminals.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let row = |out: &mut String, k: &str, v: String| {
            out.push_str(&format!("{k:<14} {v}\n"));
        };
        row(&mut out, "ring", self.ring.clone());
        row(&mut out, "regime", self.regime.to_string());
        row(
            &mut out,
            "counts",
            format!(
                "{} ideals, {} vertices, {} edges, {} maximal, boundary {}",
                self.counts.ideals,
                self.counts.vertices,
                self.counts.gamma_edges,
                self.counts.maximal_ideals,
                self.counts.boundary
            ),
        );
        row(
            &mut out,
            "diameter",
            format!("base {}, strong-resolving {}", self.diameters.gamma, self.diameters.srg),
        );
        row(
            &mut out,
            "srg",
            format!(
                "{} vertices, {} edges, independence {}, cover {}",
                self.srg.vertices, self.srg.edges, self.srg.independence_number, self.srg.vertex_cover_number
            ),
        );
        let oracle = match self.sdim.oracle {
            Some(v) => format!(", oracle {v}"),
            None => String::new(),
        };
        row(
            &mut out,
            "sdim",
            format!(
                "{} via {}{oracle}; witness of {} re-validates: {}",
                self.sdim.value,
                self.sdim.method,
                self.sdim.witness.len(),
                self.sdim.witness_valid
            ),
        );
        out.push_str(&render_checks(&self.checks));
        out.push_str(&format!(
            "result         {}\n",
            if self.all_pass { "all checks pass" } else { "CHECK FAILURES" }
        ));
        if let Some(t) = self.timings {
            out.push_str(&format!("timings        analyze {} ms\n", t.analyze_ms));
        }
        out
    }
}

fn render_checks(checks: &[TheoremCheck]) -> String {
    let id_width = checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let mut out = String::from("checks\n");
    for c in checks {
        let detail = match c.status {
            CheckStatus::NotApplicable => c.evidence.clone(),
            _ => format!("expected {}; got {} ({})", c.expected, c.computed, c.evidence),
        };
        out.push_str(&format!(
            "  {:<id_width$}  {:<14}  {}\n",
            c.id,
            c.status.to_string(),
            detail
        ));
    }
    out
}

/// Aggregate record for a family sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub schema: u32,
    pub family: String,
    pub entries: Vec<SweepEntry>,
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl SweepReport {
    pub fn new(family: String, entries: Vec<SweepEntry>, timings: Option<Timings>) -> Self {
        let all_pass = entries
            .iter()
            .all(|e| e.all_pass && e.sdim == e.predicted_sdim);
        SweepReport {
            schema: SCHEMA_VERSION,
            family,
            entries,
            all_pass,
            timings,
        }
    }

    pub fn render_table(&self) -> String {
        let headers = ["ring", "regime", "vertices", "boundary", "sdim", "predicted", "oracle", "checks"];
        let rows: Vec<[String; 8]> = self
            .entries
            .iter()
            .map(|e| {
                [
                    e.ring.clone(),
                    e.regime.to_string(),
                    e.vertices.to_string(),
                    e.boundary.to_string(),
                    e.sdim.to_string(),
                    e.predicted_sdim.to_string(),
                    e.oracle_sdim.map_or("-".to_string(), |v| v.to_string()),
                    if e.all_pass {
                        "pass".to_string()
                    } else {
                        format!("FAIL: {}", e.failed_checks.join(", "))
                    },
                ]
            })
            .collect();
        let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r.iter()) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        let fmt_row = |cells: &[String]| -> String {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let header_cells: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
        out.push_str(&fmt_row(&header_cells));
        out.push('\n');
        for r in &rows {
            out.push_str(&fmt_row(r.as_slice()));
            out.push('\n');
        }
        out.push_str(&format!(
            "result: {} ({} rings)\n",
            if self.all_pass { "all pass" } else { "FAILURES" },
            self.entries.len()
        ));
        if let Some(t) = self.timings {
            out.push_str(&format!("timings: {} ms\n", t.analyze_ms));
        }
        out
    }
}

/// Record for an arbitrary input graph.
#[derive(Debug, Clone, Serialize)]
pub struct GraphReport {
    pub schema: u32,
    pub source: String,
    pub vertices: u64,
    pub edges: u64,
    pub diameter: String,
    pub boundary: u64,
    pub srg_edges: u64,
    pub sdim: SdimReport,
    /// Witness re-validates and, when the oracle ran, both methods agree.
    pub all_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl GraphReport {
    /// Run the full pipeline on a connected input graph.
    pub fn from_graph(
        g: &Graph,
        source: String,
        caps: &Caps,
        oracle: OracleMode,
        timings: Option<Timings>,
    ) -> Result<Self> {
        let sr = srg::build_srg(g)?;
        let cover = solver::max_independent_set(&sr.graph, caps)?;
        let witness_indices: Vec<usize> = cover
            .cover_witness
            .iter()
            .map(|&i| sr.base_indices[i])
            .collect();
        let witness_valid = solver::is_strong_resolving_set(g, &witness_indices)?;
        let oracle_value = if oracle.should_run(g.vertex_count(), caps)? {
            Some(solver::sdim_bruteforce(g, caps)?.value as u64)
        } else {
            None
        };
        let all_pass =
            witness_valid && oracle_value.is_none_or(|v| v == cover.beta as u64);
        Ok(GraphReport {
            schema: SCHEMA_VERSION,
            source,
            vertices: g.vertex_count() as u64,
            edges: g.edge_count() as u64,
            diameter: diameter_display(g),
            boundary: sr.base_indices.len() as u64,
            srg_edges: sr.graph.edge_count() as u64,
            sdim: SdimReport {
                value: cover.beta as u64,
                method: SdimMethod::SrgCover,
                witness: witness_indices
                    .iter()
                    .map(|&v| g.label(v).to_string())
                    .collect(),
                witness_valid,
                oracle: oracle_value,
            },
            all_pass,
            timings,
        })
    }

    pub fn render_table(&self) -> String {
        let oracle = match self.sdim.oracle {
            Some(v) if v == self.sdim.value => format!(", oracle agrees at {v}"),
            Some(v) => format!(", ORACLE DISAGREES at {v}"),
            None => String::new(),
        };
        format!(
            "graph          {}\nvertices       {}\nedges          {}\ndiameter       {}\nboundary       {}\nsrg edges      {}\nsdim           {}{oracle}\nwitness        {{{}}} valid: {}\n",
            self.source,
            self.vertices,
            self.edges,
            self.diameter,
            self.boundary,
            self.srg_edges,
            self.sdim.value,
            self.sdim.witness.join(", "),
            self.sdim.witness_valid
        )
    }
}

/// Pretty JSON with a trailing newline; deterministic for a fixed input.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports always serialize");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::analyze_ring;
    use crate::ring::RingSpec;

    fn report(lengths: &[u32], oracle: OracleMode) -> AnalysisReport {
        let spec = RingSpec::from_lengths(lengths).unwrap();
        let a = analyze_ring(&spec, &Caps::default(), oracle).unwrap();
        AnalysisReport::from_analysis(&a, None).unwrap()
    }

    #[test]
    fn analysis_report_shape() {
        let r = report(&[1, 1, 1], OracleMode::Off);
        assert_eq!(r.schema, 1);
        assert_eq!(r.ring, "F x F x F");
        assert_eq!(r.chains, vec![1, 1, 1]);
        assert_eq!(r.counts.vertices, 6);
        assert_eq!(r.counts.boundary, 3);
        assert_eq!(r.sdim.value, 2);
        assert!(r.sdim.witness_valid);
        assert!(r.all_pass);
        assert_eq!(r.sdim.witness.len(), 2);
        assert!(r.timings.is_none());
    }

    #[test]
    fn json_is_deterministic_and_omits_missing_timings() {
        let a = report(&[2, 1], OracleMode::Off);
        let b = report(&[2, 1], OracleMode::Off);
        let ja = to_json(&a);
        assert_eq!(ja, to_json(&b));
        assert!(ja.contains("\"schema\": 1"));
        assert!(!ja.contains("\"timings\""));
        assert!(!ja.contains("\"oracle\""));
        let with_oracle = report(&[2, 1], OracleMode::Require);
        assert!(to_json(&with_oracle).contains("\"oracle\": 1"));
    }

    #[test]
    fn table_mentions_key_facts() {
        let r = report(&[1, 1, 1], OracleMode::Off);
        let table = r.render_table();
        assert!(table.contains("F x F x F"));
        assert!(table.contains("reduced-many"));
        assert!(table.contains("all checks pass"));
        assert!(table.contains("gamma-diameter"));
    }

    #[test]
    fn sweep_report_rolls_up() {
        let specs: Vec<RingSpec> = [&[1u32, 1][..], &[2, 1]]
            .iter()
            .map(|l| RingSpec::from_lengths(l).unwrap())
            .collect();
        let entries = crate::checks::sweep(&specs, &Caps::default(), OracleMode::Off).unwrap();
        let report = SweepReport::new("list:F x F,C2 x F".into(), entries, None);
        assert!(report.all_pass);
        let table = report.render_table();
        assert!(table.lines().count() >= 4);
        assert!(table.contains("all pass"));
        let json = to_json(&report);
        assert!(json.contains("\"family\""));
    }

    #[test]
    fn graph_report_runs_pipeline() {
        let g = Graph::path(3);
        let r = GraphReport::from_graph(&g, "p3".into(), &Caps::default(), OracleMode::Require, None)
            .unwrap();
        assert_eq!(r.sdim.value, 1);
        assert_eq!(r.sdim.oracle, Some(1));
        assert_eq!(r.boundary, 2);
        assert!(r.sdim.witness_valid);
        let k5 = Graph::complete(5);
        let r = GraphReport::from_graph(&k5, "k5".into(), &Caps::default(), OracleMode::Off, None)
            .unwrap();
        assert_eq!(r.sdim.value, 4);
        assert!(r.render_table().contains("sdim           4"));
    }
}
