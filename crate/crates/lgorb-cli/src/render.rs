//! Rendering of reports: deterministic text tables and the JSON schemas
//! (rationals as "p/q" strings, sector elements as monomial + sector pairs,
//! graded dimensions as a sorted list of bidegree/dim rows).

use lgorb::groups::Diagonal;
use lgorb::mirror::{DscReport, MirrorReport, PhiOutcome, Verdict};
use lgorb::orbits::FiberKey;
use lgorb::rat::format_rational;
use lgorb::sectors::SectorBasisElement;
use lgorb::GradedDimensions;

pub fn diag_json(d: &Diagonal) -> serde_json::Value {
    serde_json::Value::Array(
        d.entries
            .iter()
            .map(|e| serde_json::Value::String(format_rational(&e.rep())))
            .collect(),
    )
}

pub fn sector_element_json(b: &SectorBasisElement) -> serde_json::Value {
    serde_json::json!({
        "monomial": b.exponents,
        "sector": {
            "perm": b.sector.perm.format(),
            "diag": diag_json(&b.sector.diag),
        },
    })
}

pub fn graded_json(dims: &GradedDimensions) -> serde_json::Value {
    serde_json::Value::Array(
        dims.0
            .iter()
            .map(|(bd, dim)| {
                serde_json::json!({
                    "bidegree": [format_rational(&bd.left), format_rational(&bd.right)],
                    "dim": dim,
                })
            })
            .collect(),
    )
}

pub fn fiber_json(key: &FiberKey) -> serde_json::Value {
    serde_json::json!({
        "sigma": key.sigma.format(),
        "alpha": diag_json(&key.alpha),
        "monomial": key.monomial,
    })
}

pub fn dsc_json(report: &DscReport) -> serde_json::Value {
    serde_json::json!({
        "pass": report.pass,
        "failures": report.failures.iter().map(|f| serde_json::json!({
            "side": if f.on_a_side { "A" } else { "B" },
            "fiber": fiber_json(&f.fiber),
            "scaler": f.scaler.format(),
            "scalar": format_rational(&f.scalar.rep()),
        })).collect::<Vec<_>>(),
    })
}

pub fn mirror_json(report: &MirrorReport) -> serde_json::Value {
    let phi = match &report.phi {
        PhiOutcome::Equivariant { matched_orbits } => serde_json::json!({
            "status": "found",
            "matched_orbits": matched_orbits,
        }),
        PhiOutcome::Failed(w) => serde_json::json!({
            "status": "not_found",
            "fiber_a": w.block.a_keys.iter().map(fiber_json).collect::<Vec<_>>(),
            "fiber_b": w.block.b_keys.iter().map(fiber_json).collect::<Vec<_>>(),
            "a_orbits": w.a_orbit_count,
            "b_orbits": w.b_orbit_count,
            "reason": w.reason,
        }),
        PhiOutcome::LimitExceeded => serde_json::json!({"status": "limit_exceeded"}),
    };
    let verdict = match &report.verdict {
        Verdict::Isomorphic => serde_json::json!({"status": "isomorphic"}),
        Verdict::Mismatch { at, dim_a, dim_b } => serde_json::json!({
            "status": "mismatch",
            "bidegree": [format_rational(&at.left), format_rational(&at.right)],
            "dim_a": dim_a,
            "dim_b": dim_b,
        }),
    };
    serde_json::json!({
        "w": report.w.format(),
        "w_dual": report.w_dual.format(),
        "s_generators": report.s_generators.iter().map(|p| p.format()).collect::<Vec<_>>(),
        "h_generators": report.h_generators.iter().map(diag_json).collect::<Vec<_>>(),
        "h_order": report.h_order as u64,
        "h_dual_generators": report.h_dual_generators.iter().map(diag_json).collect::<Vec<_>>(),
        "h_dual_order": report.h_dual_order as u64,
        "prime_order_shortcut": report.prime_order_shortcut,
        "dsc": dsc_json(&report.dsc),
        "orbit_counts": {
            "pass": report.counts.pass,
            "entries": report.counts.entries.iter().map(|e| serde_json::json!({
                "fiber_a": e.block.a_keys.iter().map(fiber_json).collect::<Vec<_>>(),
                "fiber_b": e.block.b_keys.iter().map(fiber_json).collect::<Vec<_>>(),
                "r_orbits_a": e.r_orbits_a,
                "r_orbits_b": e.r_orbits_b,
                "ambiguous_block": e.block.ambiguous,
            })).collect::<Vec<_>>(),
        },
        "phi": phi,
        "table_a": graded_json(&report.table_a),
        "table_b": graded_json(&report.table_b),
        "verdict": verdict,
    })
}

pub fn mirror_text(report: &MirrorReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("W      = {}\n", report.w.format()));
    out.push_str(&format!("W^T    = {}\n", report.w_dual.format()));
    let s_gens: Vec<String> = report.s_generators.iter().map(|p| p.format()).collect();
    out.push_str(&format!(
        "S      = <{}>\n",
        if s_gens.is_empty() {
            "id".to_string()
        } else {
            s_gens.join(", ")
        }
    ));
    let h_gens: Vec<String> = report.h_generators.iter().map(|d| d.format()).collect();
    out.push_str(&format!(
        "H      = <{}>  order {}\n",
        h_gens.join(", "),
        report.h_order
    ));
    let ht_gens: Vec<String> = report
        .h_dual_generators
        .iter()
        .map(|d| d.format())
        .collect();
    out.push_str(&format!(
        "H^T    = <{}>  order {}\n",
        ht_gens.join(", "),
        report.h_dual_order
    ));
    out.push_str(&format!(
        "prime-order shortcut: {}\n",
        if report.prime_order_shortcut {
            "yes"
        } else {
            "no"
        }
    ));
    if report.dsc.pass {
        out.push_str("DSC: pass\n");
    } else {
        out.push_str("DSC: fail\n");
        for f in &report.dsc.failures {
            out.push_str(&format!(
                "  side {}: fiber {} scaled by {} (scalar {}) with no diagonal counterpart\n",
                if f.on_a_side { "A" } else { "B" },
                f.fiber.format(),
                f.scaler.format(),
                f.scalar
            ));
        }
    }
    if report.counts.pass {
        out.push_str("orbit counts: pass\n");
    } else {
        out.push_str("orbit counts: fail\n");
        for e in report
            .counts
            .entries
            .iter()
            .filter(|e| e.r_orbits_a != e.r_orbits_b)
        {
            let a: Vec<String> = e.block.a_keys.iter().map(|k| k.format()).collect();
            out.push_str(&format!(
                "  {} : {} vs {}\n",
                a.join(" + "),
                e.r_orbits_a,
                e.r_orbits_b
            ));
        }
    }
    match &report.phi {
        PhiOutcome::Equivariant { matched_orbits } => {
            out.push_str(&format!(
                "equivariant bijection: found ({matched_orbits} orbits matched)\n"
            ));
        }
        PhiOutcome::Failed(w) => {
            let a: Vec<String> = w.block.a_keys.iter().map(|k| k.format()).collect();
            out.push_str(&format!(
                "equivariant bijection: not found at {} ({} vs {} orbits; {})\n",
                a.join(" + "),
                w.a_orbit_count,
                w.b_orbit_count,
                w.reason
            ));
        }
        PhiOutcome::LimitExceeded => {
            out.push_str("equivariant bijection: search limit exceeded\n");
        }
    }
    out.push_str("A-model table:\n");
    out.push_str(&indent(&report.table_a.format()));
    out.push_str("B-model table:\n");
    out.push_str(&indent(&report.table_b.format()));
    match &report.verdict {
        Verdict::Isomorphic => out.push_str("verdict: isomorphic\n"),
        Verdict::Mismatch { at, dim_a, dim_b } => out.push_str(&format!(
            "verdict: mismatch at {}: {} vs {}\n",
            at.format(),
            dim_a,
            dim_b
        )),
    }
    out
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}
