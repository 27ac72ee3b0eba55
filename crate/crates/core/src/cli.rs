//! Command implementations behind the `tipcount` binary.
//!
//! Every command produces an [`OutputDocument`] (rendered as JSON with sorted
//! keys) and a plain-text rendering. Big integers are always written as full
//! decimal strings and rationals as `num/den` with their floor.

use std::fmt::Write as _;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::counting::{overcount_audit, CountKind, TreeCounter};
use crate::curve_bounds::{
    b1_from_incidence, bounds_affine, bounds_irreducible, bounds_projective, build_incidence_graph,
    cusp_bound_inequality1, cusp_bound_projective, euler_complement, pa_from_betti,
    sing_bound_projective, sing_from_cusp, AffineCurveTopology, CurveTopology, IncidenceGraph,
    RationalBound, SingularityStats,
};
use crate::treegen::{serialize, serialize_unrooted, Enumerator};
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_GUARD: i32 = 4;

/// Environment variable overriding the enumeration guard.
pub const ENUMERATION_LIMIT_ENV: &str = "TIPCOUNT_ENUMERATION_LIMIT";

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain { .. } => EXIT_USAGE,
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::Parse(_) | Error::InvalidTree(_) | Error::InvalidCurve(_) => EXIT_INVALID,
    }
}

/// Machine-readable result of one invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputDocument {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub provenance: Option<String>,
    pub warnings: Vec<String>,
}

impl OutputDocument {
    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
        });
        if let Some(p) = &self.provenance {
            v["provenance"] = json!(p);
        }
        if !self.warnings.is_empty() {
            v["warnings"] = json!(self.warnings);
        }
        v
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
        s.push('\n');
        s
    }
}

/// A document plus its human-readable form.
#[derive(Debug, Clone)]
pub struct CommandOutput {
    pub document: OutputDocument,
    pub text: String,
}

pub fn cmd_count(kind: CountKind, n: usize) -> Result<CommandOutput> {
    let value = TreeCounter::new().count(kind, n)?;
    let provenance = match kind {
        CountKind::VertexPointed | CountKind::EdgePair => {
            "paper-variant term: may count a tree more than once"
        }
        CountKind::UnrootedExact => "exact-variant: one count per homeomorphism class",
        CountKind::Rooted => "rooted series-reduced trees",
    };
    let document = OutputDocument {
        command: "count".into(),
        inputs: json!({ "kind": kind.name(), "n": n }),
        results: json!({ "count": value.to_string() }),
        provenance: Some(provenance.into()),
        warnings: Vec::new(),
    };
    Ok(CommandOutput {
        text: format!("{value}\n"),
        document,
    })
}

pub fn cmd_paper(max_tips: usize) -> Result<CommandOutput> {
    let mut counter = TreeCounter::new();
    let totals = counter.paper_total(max_tips)?;
    let exact = counter.homeomorphism_classes_upto(max_tips)?;
    let audit = overcount_audit(max_tips)?;

    let mut rows = Vec::new();
    let mut text = String::new();
    writeln!(
        text,
        "{:>3}  {:>12}  {:>12}  {:>12}  {:>12}  {:>12}",
        "n", "T", "P", "Q", "exact", "P-overlap"
    )
    .unwrap();
    for row in &audit {
        let n = row.n;
        let t = counter.rooted(n)?;
        let q = (n <= max_tips / 2)
            .then(|| counter.edge_pair(n))
            .transpose()?;
        let q_text = q
            .as_ref()
            .map_or_else(|| "-".to_owned(), ToString::to_string);
        writeln!(
            text,
            "{n:>3}  {t:>12}  {:>12}  {q_text:>12}  {:>12}  {:>12}",
            row.vertex_pointed, row.unrooted_exact, row.difference
        )
        .unwrap();
        let mut r = json!({
            "n": n,
            "T": t.to_string(),
            "P": row.vertex_pointed.to_string(),
            "exact": row.unrooted_exact.to_string(),
            "exact_vertex_centroid": row.vertex_centroid.to_string(),
            "exact_edge_centroid": row.edge_centroid.to_string(),
            "overlap": row.difference.to_string(),
        });
        if let Some(q) = q {
            r["Q"] = json!(q.to_string());
        }
        rows.push(r);
    }
    let gap = &totals.s1 - &exact;
    writeln!(text, "S     = {}", totals.s).unwrap();
    writeln!(text, "S1    = {}", totals.s1).unwrap();
    writeln!(text, "exact = {exact}").unwrap();
    writeln!(text, "S1 - exact = {gap}").unwrap();

    let document = OutputDocument {
        command: "paper".into(),
        inputs: json!({ "max_tips": max_tips }),
        results: json!({
            "rows": rows,
            "S": totals.s.to_string(),
            "S1": totals.s1.to_string(),
            "exact_total": exact.to_string(),
            "S1_minus_exact": gap.to_string(),
        }),
        provenance: Some(
            "S and S1 follow the paper-variant sums (P without a largest-part limit, Q up to max_tips/2); \
             exact_total counts each homeomorphism class once via its leaf-centroid"
                .into(),
        ),
        warnings: Vec::new(),
    };
    Ok(CommandOutput { document, text })
}

/// Canonical codes of all trees with `n` tips (or leaves, when `rooted`), sorted.
pub fn enumerate_codes(n: usize, rooted: bool, limit: usize) -> Result<Vec<String>> {
    let mut e = Enumerator::new(limit);
    if rooted {
        Ok(e.rooted(n)?.iter().map(serialize).collect())
    } else {
        Ok(e.unrooted(n)?.iter().map(serialize_unrooted).collect())
    }
}

pub fn cmd_enumerate(n: usize, rooted: bool, limit: usize) -> Result<CommandOutput> {
    let codes = enumerate_codes(n, rooted, limit)?;
    let mut text = String::with_capacity(codes.iter().map(|c| c.len() + 1).sum());
    for c in &codes {
        text.push_str(c);
        text.push('\n');
    }
    let document = OutputDocument {
        command: "enumerate".into(),
        inputs: json!({ "n": n, "rooted": rooted, "limit": limit }),
        results: json!({ "count": codes.len(), "codes": codes }),
        provenance: None,
        warnings: Vec::new(),
    };
    Ok(CommandOutput { document, text })
}

/// Singularity data: branch counts per point, or the component of every branch.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum BranchData {
    Counts(Vec<u32>),
    Assignments(Vec<Vec<usize>>),
}

impl BranchData {
    /// Parses `0,1;0;0` (points separated by `;`, component indices by `,`)
    /// as assignments.
    pub fn parse_assignments(text: &str) -> std::result::Result<Self, String> {
        text.split(';')
            .map(|point| {
                point
                    .split(',')
                    .map(|c| {
                        c.trim()
                            .parse::<usize>()
                            .map_err(|e| format!("bad component index {c:?}: {e}"))
                    })
                    .collect()
            })
            .collect::<std::result::Result<Vec<Vec<usize>>, _>>()
            .map(BranchData::Assignments)
    }
}

/// Input document for `bounds`. Field names match the JSON keys.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundsInput {
    pub b1: Option<u64>,
    pub b2: Option<u64>,
    pub g: Option<u64>,
    pub branches: Option<BranchData>,
    pub b0_aff: Option<u64>,
    pub b1_aff: Option<u64>,
    pub p: Option<u64>,
}

impl BoundsInput {
    fn echo(&self) -> Value {
        let mut v = json!({});
        for (key, val) in [
            ("b1", self.b1),
            ("b2", self.b2),
            ("g", self.g),
            ("b0_aff", self.b0_aff),
            ("b1_aff", self.b1_aff),
            ("p", self.p),
        ] {
            if let Some(x) = val {
                v[key] = json!(x);
            }
        }
        match &self.branches {
            Some(BranchData::Counts(c)) => v["branches"] = json!(c),
            Some(BranchData::Assignments(a)) => v["branches"] = json!(a),
            None => {}
        }
        v
    }

    fn affine(&self, b2: u64, g: u64) -> Result<Option<AffineCurveTopology>> {
        match (self.b0_aff, self.b1_aff, self.p) {
            (None, None, None) => Ok(None),
            (Some(b0_aff), Some(b1_aff), Some(p)) => Ok(Some(AffineCurveTopology {
                b0_aff,
                b1_aff,
                p,
                b2,
                g,
                b1: self.b1,
            })),
            _ => Err(Error::InvalidCurve(
                "affine data needs all of b0_aff, b1_aff and p".into(),
            )),
        }
    }
}

fn bound_line(text: &mut String, label: &str, b: &RationalBound) {
    writeln!(text, "  {label:<34} <= {b}").unwrap();
}

pub fn cmd_bounds(input: &BoundsInput) -> Result<CommandOutput> {
    let b2 = input.b2.ok_or_else(|| {
        Error::InvalidCurve("missing b2 (number of irreducible components)".into())
    })?;
    let g = input
        .g
        .ok_or_else(|| Error::InvalidCurve("missing g (total genus)".into()))?;
    let affine = input.affine(b2, g)?;
    let mut topology = match &affine {
        Some(a) => a.projective()?,
        None => {
            let b1 = input.b1.ok_or_else(|| {
                Error::InvalidCurve("missing b1 (or the affine data b0_aff, b1_aff, p)".into())
            })?;
            CurveTopology::new(b1, g, b2)
        }
    };
    let graph: Option<IncidenceGraph> = match &input.branches {
        Some(BranchData::Counts(c)) => {
            topology.singularities = Some(c.clone());
            None
        }
        Some(BranchData::Assignments(rows)) => {
            let graph = build_incidence_graph(b2 as usize, rows)?;
            topology.singularities = Some(graph.branch_counts());
            Some(graph)
        }
        None => None,
    };
    let mut warnings = topology.validate()?;

    let b1 = topology.b1;
    let e = euler_complement(b1 as i64, b2 as i64);
    let pa = pa_from_betti(b1 as i64, g as i64);
    let projective = bounds_projective(&topology);
    let via_inequality = cusp_bound_inequality1(e, pa);
    let via_cusps = sing_from_cusp(&projective.cusps, &topology);
    let identities = json!({
        "euler_complement": e,
        "p_a": pa,
        "cusps_via_inequality": via_inequality,
        "cusps_identity_holds": via_inequality == cusp_bound_projective(&topology),
        "singular_points_via_cusps": via_cusps,
        "singular_points_identity_holds": via_cusps == sing_bound_projective(&topology),
    });

    let mut text = String::new();
    writeln!(text, "curve: b1 = {b1}, b2 = {b2}, g = {g}").unwrap();
    writeln!(text, "  e(CP^2 - C) = {e}, p_a = {pa}").unwrap();
    writeln!(text, "projective bounds:").unwrap();
    bound_line(&mut text, "cusps c", &projective.cusps);
    bound_line(&mut text, "singular points s", &projective.singular_points);
    writeln!(text, "  note: {}", projective.caveat).unwrap();

    let mut results = json!({
        "b1": b1,
        "projective": projective,
        "identities": identities,
    });

    if b2 == 1 {
        let irr = bounds_irreducible(b1, g);
        writeln!(text, "irreducible curve bounds:").unwrap();
        bound_line(&mut text, "cusps c", &irr.cusps);
        bound_line(&mut text, "cusps c (genus-free)", &irr.cusps_genus_free);
        bound_line(&mut text, "singular points s", &irr.singular_points);
        bound_line(
            &mut text,
            "singular points s (genus-free)",
            &irr.singular_points_genus_free,
        );
        writeln!(text, "  note: {}", irr.note).unwrap();
        results["irreducible"] = serde_json::to_value(&irr).expect("serializable");
    }

    if let Some(a) = &affine {
        let ab = bounds_affine(a)?;
        writeln!(
            text,
            "affine part: b0_aff = {}, b1_aff = {}, p = {} (projective b1 = {})",
            a.b0_aff, a.b1_aff, a.p, ab.bridged_b1
        )
        .unwrap();
        bound_line(&mut text, "affine cusps c_aff", &ab.cusps);
        bound_line(
            &mut text,
            "affine singular points s_aff",
            &ab.singular_points,
        );
        if let Some(irr) = &ab.irreducible {
            bound_line(&mut text, "c_aff (irreducible)", &irr.cusps);
            bound_line(
                &mut text,
                "c_aff (irreducible, without p)",
                &irr.cusps_without_p,
            );
            bound_line(
                &mut text,
                "c_aff (irreducible, linear in b1_aff)",
                &irr.cusps_linear,
            );
            bound_line(&mut text, "s_aff (irreducible)", &irr.singular_points);
            bound_line(
                &mut text,
                "s_aff (irreducible, without p)",
                &irr.singular_points_without_p,
            );
        }
        results["affine"] = serde_json::to_value(&ab).expect("serializable");
    }

    if let Some(stats) = topology.singularity_stats().transpose()? {
        let SingularityStats { s, c, d } = stats;
        writeln!(text, "singularities: s = {s}, c = {c}, d = {d}").unwrap();
        let mut sing = json!({
            "s": s,
            "c": c,
            "d": d,
            "cusps_within_bound": RationalBound::integer(c) <= projective.cusps,
            "singular_points_within_bound": RationalBound::integer(s) <= projective.singular_points,
        });
        if let Some(graph) = &graph {
            let implied = b1_from_incidence(g, graph);
            writeln!(
                text,
                "incidence graph: {} vertices, {} edges, euler characteristic {}, b1 implied = {implied}",
                graph.vertex_count(),
                graph.edge_count(),
                graph.euler_characteristic()
            )
            .unwrap();
            if !graph.is_connected() {
                warnings.push("incidence graph is disconnected; plane curves are connected".into());
            }
            if implied != b1 as i64 {
                warnings.push(format!(
                    "branch data implies b1 = 2g + 1 - e(incidence graph) = {implied}, but b1 = {b1}"
                ));
            }
            sing["incidence_graph"] = json!({
                "vertices": graph.vertex_count(),
                "edges": graph.edge_count(),
                "euler_characteristic": graph.euler_characteristic(),
                "connected": graph.is_connected(),
                "implied_b1": implied,
            });
        }
        results["singularities"] = sing;
    }

    for w in &warnings {
        writeln!(text, "warning: {w}").unwrap();
    }

    let document = OutputDocument {
        command: "bounds".into(),
        inputs: input.echo(),
        results,
        provenance: None,
        warnings,
    };
    Ok(CommandOutput { document, text })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn count_outputs() {
        let out = cmd_count(CountKind::Rooted, 4).unwrap();
        assert_eq!(out.text, "5\n");
        assert_eq!(out.document.results["count"], "5");
        assert_eq!(cmd_count(CountKind::VertexPointed, 2).unwrap().text, "0\n");
        assert_eq!(cmd_count(CountKind::UnrootedExact, 5).unwrap().text, "3\n");
        let err = cmd_count(CountKind::Rooted, 0).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_USAGE);
    }

    #[test]
    fn paper_outputs() {
        let doc = cmd_paper(17).unwrap().document;
        assert_eq!(doc.results["S1"], "3901520");
        let doc = cmd_paper(1).unwrap().document;
        assert_eq!(doc.results["S1"], "1");
        let doc = cmd_paper(4).unwrap().document;
        assert_eq!(doc.results["S1"], "6");
        assert_eq!(doc.results["exact_total"], "5");
    }

    #[test]
    fn enumerate_outputs() {
        assert_eq!(cmd_enumerate(2, true, 10).unwrap().text, "(**)\n");
        assert_eq!(cmd_enumerate(4, false, 10).unwrap().text.lines().count(), 2);
        let err = cmd_enumerate(11, false, 10).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_GUARD);
    }

    #[test]
    fn bounds_outputs() {
        let input = BoundsInput {
            b1: Some(0),
            b2: Some(1),
            g: Some(0),
            ..Default::default()
        };
        let doc = cmd_bounds(&input).unwrap().document;
        assert_eq!(doc.results["projective"]["cusps"]["rational"], "17/2");
        assert_eq!(doc.results["projective"]["cusps"]["floor"], "8");
        assert_eq!(doc.results["identities"]["cusps_identity_holds"], true);

        let input = BoundsInput {
            b1: Some(2),
            b2: Some(1),
            g: Some(1),
            ..Default::default()
        };
        let doc = cmd_bounds(&input).unwrap().document;
        assert_eq!(doc.results["projective"]["cusps"]["rational"], "19/1");

        let affine = BoundsInput {
            b2: Some(1),
            g: Some(0),
            b0_aff: Some(1),
            b1_aff: Some(0),
            p: Some(1),
            ..Default::default()
        };
        let doc = cmd_bounds(&affine).unwrap().document;
        assert_eq!(doc.results["b1"], 0);
        assert_eq!(doc.results["projective"]["cusps"]["rational"], "17/2");
    }

    #[test]
    fn bounds_errors() {
        let bad = BoundsInput {
            b1: Some(4),
            b2: Some(1),
            g: Some(0),
            b0_aff: Some(1),
            b1_aff: Some(0),
            p: Some(1),
            ..Default::default()
        };
        assert_eq!(exit_code(&cmd_bounds(&bad).unwrap_err()), EXIT_INVALID);
        let partial = BoundsInput {
            b2: Some(1),
            g: Some(0),
            p: Some(1),
            ..Default::default()
        };
        assert!(cmd_bounds(&partial).is_err());
        let missing = BoundsInput {
            b2: Some(1),
            g: Some(0),
            ..Default::default()
        };
        assert!(cmd_bounds(&missing).is_err());
    }

    #[test]
    fn branch_documents() {
        let input: BoundsInput =
            serde_json::from_str(r#"{"b1": 1, "b2": 1, "g": 0, "branches": [[0, 0]]}"#).unwrap();
        let doc = cmd_bounds(&input).unwrap().document;
        assert_eq!(
            doc.results["singularities"]["incidence_graph"]["implied_b1"],
            1
        );
        assert!(doc.warnings.is_empty());
        let input: BoundsInput =
            serde_json::from_str(r#"{"b1": 0, "b2": 1, "g": 0, "branches": [1, 1, 1]}"#).unwrap();
        let doc = cmd_bounds(&input).unwrap().document;
        assert_eq!(doc.results["singularities"]["c"], 3);
        assert!(serde_json::from_str::<BoundsInput>(r#"{"b9": 1}"#).is_err());
        assert_eq!(
            BranchData::parse_assignments("0,1;0").unwrap(),
            BranchData::Assignments(vec![vec![0, 1], vec![0]])
        );
    }
}
