//! Deterministic rendering of results: canonical text and JSON with sorted
//! keys, a trailing newline, and no timestamps or machine-specific content.

use crate::formats;
use serde_json::{Map, Value};
use sloop_core::morph::{AutotopismSet, IsotopyVerdict, PermGroup};
use sloop_core::subs::{format_subset, SubStructure};
use sloop_core::table::{CayleyTable, StructureClass};
use sloop_core::theorem::{
    CorollaryReport, PairingWitness, SearchOutcome, TheoremReport,
};
use sloop_core::variety::ProfileEntry;
use sloop_core::{HolomorphTable, Perm};
use std::collections::BTreeSet;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn class_json(c: &StructureClass) -> Value {
    let mut obj = Map::new();
    obj.insert("is_quasigroup".into(), c.is_quasigroup.into());
    obj.insert("is_semigroup".into(), c.is_semigroup.into());
    obj.insert("is_loop".into(), c.is_loop.into());
    obj.insert("is_group".into(), c.is_group.into());
    obj.insert(
        "identity".into(),
        c.identity.map_or(Value::Null, Value::from),
    );
    Value::Object(obj)
}

pub fn check_text(c: &StructureClass, witness: &Option<BTreeSet<usize>>) -> String {
    let identity = match c.identity {
        Some(e) => e.to_string(),
        None => "none".into(),
    };
    let mut line = format!(
        "quasigroup: {}, semigroup: {}, loop: {}, group: {}, identity: {}",
        yes_no(c.is_quasigroup),
        yes_no(c.is_semigroup),
        yes_no(c.is_loop),
        yes_no(c.is_group),
        identity
    );
    match witness {
        Some(w) => {
            line.push_str(&format!(
                ", smarandache: yes, witness {}",
                format_subset(w)
            ));
        }
        None => line.push_str(", smarandache: no"),
    }
    line.push('\n');
    line
}

pub fn check_json(c: &StructureClass, witness: &Option<BTreeSet<usize>>) -> Value {
    let mut obj = match class_json(c) {
        Value::Object(o) => o,
        _ => unreachable!(),
    };
    obj.insert("smarandache".into(), witness.is_some().into());
    obj.insert(
        "witness".into(),
        witness
            .as_ref()
            .map_or(Value::Null, subset_json),
    );
    Value::Object(obj)
}

pub fn subset_json(s: &BTreeSet<usize>) -> Value {
    Value::from(s.iter().copied().collect::<Vec<usize>>())
}

pub fn substructures_text(subs: &[SubStructure]) -> String {
    let mut out = String::new();
    for s in subs {
        out.push_str(&format!(
            "{}: {}\n",
            format_subset(&s.elements),
            s.class.name()
        ));
    }
    if subs.is_empty() {
        out.push_str("none\n");
    }
    out
}

pub fn substructures_json(subs: &[SubStructure]) -> Value {
    Value::from(
        subs.iter()
            .map(|s| {
                let mut obj = Map::new();
                obj.insert("elements".into(), subset_json(&s.elements));
                obj.insert("class".into(), Value::from(s.class.name()));
                Value::Object(obj)
            })
            .collect::<Vec<Value>>(),
    )
}

pub fn perm_group_text(g: &PermGroup) -> String {
    let mut out = String::new();
    for p in g.elements() {
        out.push_str(&format!("{p}\n"));
    }
    out
}

pub fn perm_group_json(g: &PermGroup) -> Value {
    Value::from(
        g.elements()
            .iter()
            .map(formats::perm_json)
            .collect::<Vec<Value>>(),
    )
}

pub fn autotopisms_text(a: &AutotopismSet) -> String {
    let mut out = String::new();
    for t in a.triples() {
        out.push_str(&format!("U= {}  V= {}  W= {}\n", t.u(), t.v(), t.w()));
    }
    out
}

pub fn autotopisms_json(a: &AutotopismSet) -> Value {
    Value::from(
        a.triples()
            .iter()
            .map(formats::isotopism_json)
            .collect::<Vec<Value>>(),
    )
}

pub fn verdict_text(v: &IsotopyVerdict) -> String {
    let mut out = format!("isotopism: {}\n", yes_no(v.is_isotopism));
    for cell in &v.failing_cells {
        out.push_str(&format!(
            "cell ({}, {}): target gives {}, W maps product to {}\n",
            cell.x, cell.y, cell.lhs, cell.rhs
        ));
    }
    if let Some(s) = &v.smarandache {
        out.push_str(&format!("S-isotopism: {}\n", yes_no(s.is_s_isotopism)));
        for c in &s.failing_components {
            out.push_str(&format!(
                "component {}: maps subset to {}, expected {}\n",
                c.component,
                format_subset(&c.image),
                format_subset(&c.expected)
            ));
        }
    }
    out
}

pub fn verdict_json(v: &IsotopyVerdict) -> Value {
    let mut obj = Map::new();
    obj.insert("isotopism".into(), v.is_isotopism.into());
    obj.insert(
        "failing_cells".into(),
        Value::from(
            v.failing_cells
                .iter()
                .map(|c| {
                    let mut cell = Map::new();
                    cell.insert("x".into(), c.x.into());
                    cell.insert("y".into(), c.y.into());
                    cell.insert("lhs".into(), c.lhs.into());
                    cell.insert("rhs".into(), c.rhs.into());
                    Value::Object(cell)
                })
                .collect::<Vec<Value>>(),
        ),
    );
    if let Some(s) = &v.smarandache {
        obj.insert("s_isotopism".into(), s.is_s_isotopism.into());
        obj.insert(
            "failing_components".into(),
            Value::from(
                s.failing_components
                    .iter()
                    .map(|c| {
                        let mut comp = Map::new();
                        comp.insert("component".into(), Value::from(c.component));
                        comp.insert("image".into(), subset_json(&c.image));
                        comp.insert("expected".into(), subset_json(&c.expected));
                        Value::Object(comp)
                    })
                    .collect::<Vec<Value>>(),
            ),
        );
    }
    Value::Object(obj)
}

pub fn isomorphism_text(label: &str, p: &Option<Perm>) -> String {
    match p {
        Some(p) => format!("{label}: {p}\n"),
        None => format!("{label}: none\n"),
    }
}

pub fn isomorphism_json(p: &Option<Perm>) -> Value {
    let mut obj = Map::new();
    obj.insert("found".into(), p.is_some().into());
    obj.insert(
        "isomorphism".into(),
        p.as_ref().map_or(Value::Null, formats::perm_json),
    );
    Value::Object(obj)
}

pub fn holomorph_text(h: &HolomorphTable) -> String {
    let mut out = formats::render_table_text(h.table());
    out.push_str("encoding:\n");
    for index in 0..h.table().order() {
        let (a, x) = h.decode(index);
        out.push_str(&format!("{index}: ({a}, {x})\n"));
    }
    out.push_str("group:\n");
    for p in h.group().elements() {
        out.push_str(&format!("{p}\n"));
    }
    if let Some(d) = h.designated() {
        out.push_str(&format!("s-subset: {}\n", format_subset(d)));
    }
    out
}

pub fn holomorph_json(h: &HolomorphTable) -> Value {
    let mut obj = match formats::table_json(h.table(), h.designated()) {
        Value::Object(o) => o,
        _ => unreachable!(),
    };
    obj.insert(
        "encoding".into(),
        Value::from(
            (0..h.table().order())
                .map(|i| {
                    let (a, x) = h.decode(i);
                    Value::from(vec![a, x])
                })
                .collect::<Vec<Value>>(),
        ),
    );
    obj.insert("group".into(), perm_group_json(h.group()));
    Value::Object(obj)
}

pub fn profile_entry_text(e: &ProfileEntry) -> String {
    match e {
        ProfileEntry::Holds => "holds".into(),
        ProfileEntry::Fails {
            assignment,
            lhs,
            rhs,
        } => {
            let vars: Vec<String> = assignment.iter().map(usize::to_string).collect();
            format!("fails at ({}): {} != {}", vars.join(","), lhs, rhs)
        }
        ProfileEntry::NotApplicable => "not_applicable".into(),
    }
}

pub fn profile_text(profile: &[(String, ProfileEntry)]) -> String {
    let mut out = String::new();
    for (name, entry) in profile {
        out.push_str(&format!("{name}: {}\n", profile_entry_text(entry)));
    }
    out
}

pub fn profile_json(profile: &[(String, ProfileEntry)]) -> Value {
    let mut obj = Map::new();
    for (name, entry) in profile {
        let v = match entry {
            ProfileEntry::Holds => Value::from("holds"),
            ProfileEntry::Fails {
                assignment,
                lhs,
                rhs,
            } => {
                let mut fail = Map::new();
                fail.insert("assignment".into(), Value::from(assignment.clone()));
                fail.insert("lhs".into(), (*lhs).into());
                fail.insert("rhs".into(), (*rhs).into());
                let mut wrap = Map::new();
                wrap.insert("fails".into(), Value::Object(fail));
                Value::Object(wrap)
            }
            ProfileEntry::NotApplicable => Value::from("not_applicable"),
        };
        obj.insert(name.clone(), v);
    }
    Value::Object(obj)
}

fn witness_json(w: &PairingWitness) -> Value {
    let mut obj = Map::new();
    obj.insert("beta".into(), formats::perm_json(&w.beta));
    obj.insert("delta".into(), formats::perm_json(&w.delta));
    obj.insert("gamma".into(), formats::perm_json(&w.gamma));
    obj.insert(
        "psi".into(),
        w.psi.as_ref().map_or(Value::Null, formats::perm_json),
    );
    obj.insert("satisfied".into(), w.satisfied.into());
    Value::Object(obj)
}

fn search_outcome_json(s: &SearchOutcome) -> Value {
    match s {
        SearchOutcome::NotAttempted => Value::from("not_attempted"),
        SearchOutcome::NotFound => Value::from("not_found"),
        SearchOutcome::Found(p) => formats::perm_json(p),
    }
}

pub fn theorem_json(r: &TheoremReport) -> Value {
    let mut hyp = Map::new();
    hyp.insert("saum_u_order".into(), r.hypothesis.saum_u_order.into());
    hyp.insert("saum_v_order".into(), r.hypothesis.saum_v_order.into());
    hyp.insert(
        "sags_nontrivial".into(),
        r.hypothesis.sags_nontrivial.into(),
    );
    hyp.insert(
        "conjugator".into(),
        r.hypothesis
            .conjugator
            .as_ref()
            .map_or(Value::Null, formats::perm_json),
    );
    if let Some(v) = r.hypothesis.valid_spair {
        hyp.insert("valid_spair".into(), v.into());
    }
    if let Some(v) = r.hypothesis.gamma_delta_in_saum_v {
        hyp.insert("gamma_delta_in_saum_v".into(), v.into());
    }
    hyp.insert("satisfied".into(), r.hypothesis.satisfied.into());
    hyp.insert(
        "notes".into(),
        Value::from(r.hypothesis.notes.clone()),
    );

    let conclusion = match &r.conclusion {
        None => Value::Null,
        Some(c) => {
            let mut obj = Map::new();
            if let Some(v) = c.pairing_per_beta {
                obj.insert("pairing_per_beta".into(), v.into());
            }
            if let Some(v) = c.pairing_proof_form {
                obj.insert("pairing_proof_form".into(), v.into());
            }
            if !matches!(c.holomorph_s_isomorphism, SearchOutcome::NotAttempted) {
                obj.insert(
                    "holomorph_s_isomorphism".into(),
                    search_outcome_json(&c.holomorph_s_isomorphism),
                );
            }
            if let Some(v) = c.proof_form_map_is_s_isomorphism {
                obj.insert("proof_form_map_is_s_isomorphism".into(), v.into());
            }
            if let Some(vs) = &c.varieties {
                obj.insert(
                    "varieties".into(),
                    Value::from(
                        vs.iter()
                            .map(|cmp| {
                                let mut m = Map::new();
                                m.insert("name".into(), Value::from(cmp.name.clone()));
                                m.insert("u".into(), Value::from(cmp.u_verdict.clone()));
                                m.insert("v".into(), Value::from(cmp.v_verdict.clone()));
                                m.insert("agree".into(), cmp.agree.into());
                                Value::Object(m)
                            })
                            .collect::<Vec<Value>>(),
                    ),
                );
            }
            if let Some(v) = c.varieties_agree {
                obj.insert("varieties_agree".into(), v.into());
            }
            Value::Object(obj)
        }
    };

    let mut obj = Map::new();
    obj.insert("hypothesis".into(), Value::Object(hyp));
    obj.insert(
        "witnesses".into(),
        Value::from(r.witnesses.iter().map(witness_json).collect::<Vec<Value>>()),
    );
    obj.insert("conclusion".into(), conclusion);
    obj.insert(
        "discrepancies".into(),
        Value::from(r.discrepancies.clone()),
    );
    Value::Object(obj)
}

pub fn theorem_text(r: &TheoremReport) -> String {
    let mut out = String::from("hypothesis:\n");
    out.push_str(&format!(
        "  |SAUM(U)| = {}, |SAUM(V)| = {}, nontrivial: {}\n",
        r.hypothesis.saum_u_order,
        r.hypothesis.saum_v_order,
        yes_no(r.hypothesis.sags_nontrivial)
    ));
    match &r.hypothesis.conjugator {
        Some(p) => out.push_str(&format!("  conjugator: {p}\n")),
        None => out.push_str("  conjugator: none\n"),
    }
    if let Some(v) = r.hypothesis.valid_spair {
        out.push_str(&format!("  isotope designates a valid S-subset: {}\n", yes_no(v)));
    }
    if let Some(v) = r.hypothesis.gamma_delta_in_saum_v {
        out.push_str(&format!("  gamma, delta in SAUM(V): {}\n", yes_no(v)));
    }
    out.push_str(&format!("  satisfied: {}\n", yes_no(r.hypothesis.satisfied)));
    for note in &r.hypothesis.notes {
        out.push_str(&format!("  note: {note}\n"));
    }
    out.push_str("witnesses:\n");
    if r.witnesses.is_empty() {
        out.push_str("  none\n");
    }
    for w in &r.witnesses {
        out.push_str(&format!(
            "  beta= {}  delta= {}  gamma= {}  satisfied: {}",
            w.beta,
            w.delta,
            w.gamma,
            yes_no(w.satisfied)
        ));
        if let Some(psi) = &w.psi {
            out.push_str(&format!("  (proof form, psi= {psi})"));
        }
        out.push('\n');
    }
    out.push_str("conclusion:\n");
    match &r.conclusion {
        None => out.push_str("  not attempted\n"),
        Some(c) => {
            if let Some(v) = c.pairing_per_beta {
                out.push_str(&format!("  pairing (per-beta search): {}\n", yes_no(v)));
            }
            if let Some(v) = c.pairing_proof_form {
                out.push_str(&format!("  pairing (proof-form): {}\n", yes_no(v)));
            }
            match &c.holomorph_s_isomorphism {
                SearchOutcome::NotAttempted => {}
                SearchOutcome::NotFound => {
                    out.push_str("  holomorph S-isomorphism: none\n");
                }
                SearchOutcome::Found(p) => {
                    out.push_str(&format!("  holomorph S-isomorphism: {p}\n"));
                }
            }
            if let Some(v) = c.proof_form_map_is_s_isomorphism {
                out.push_str(&format!("  proof-form map is S-isomorphism: {}\n", yes_no(v)));
            }
            if let Some(vs) = &c.varieties {
                for cmp in vs {
                    out.push_str(&format!(
                        "  {}: U {} / V {} ({})\n",
                        cmp.name,
                        cmp.u_verdict,
                        cmp.v_verdict,
                        if cmp.agree { "agree" } else { "DISAGREE" }
                    ));
                }
            }
            if let Some(v) = c.varieties_agree {
                out.push_str(&format!("  varieties agree: {}\n", yes_no(v)));
            }
        }
    }
    out.push_str("discrepancies:\n");
    if r.discrepancies.is_empty() {
        out.push_str("  none\n");
    }
    for d in &r.discrepancies {
        out.push_str(&format!("  {d}\n"));
    }
    out
}

pub fn corollaries_text(r: &CorollaryReport) -> String {
    let mut out = String::from("corollaries:\n");
    for item in &r.items {
        let tag = match item.matches_claim {
            Some(true) => "ok",
            Some(false) => "MISMATCH",
            None => "info",
        };
        out.push_str(&format!("  {} [{}]: {}\n", item.name, tag, item.observed));
    }
    for d in &r.discrepancies {
        out.push_str(&format!("  discrepancy: {d}\n"));
    }
    out
}

pub fn corollaries_json(r: &CorollaryReport) -> Value {
    let mut obj = Map::new();
    obj.insert(
        "items".into(),
        Value::from(
            r.items
                .iter()
                .map(|i| {
                    let mut m = Map::new();
                    m.insert("name".into(), Value::from(i.name.clone()));
                    m.insert("observed".into(), Value::from(i.observed.clone()));
                    m.insert(
                        "matches_claim".into(),
                        i.matches_claim.map_or(Value::Null, Value::from),
                    );
                    Value::Object(m)
                })
                .collect::<Vec<Value>>(),
        ),
    );
    obj.insert("discrepancies".into(), Value::from(r.discrepancies.clone()));
    Value::Object(obj)
}

/// Canonical JSON emission: compact, sorted keys (the map type is ordered),
/// one trailing newline.
pub fn emit_json(v: &Value) -> String {
    let mut s = v.to_string();
    s.push('\n');
    s
}

pub fn table_text_or_json(t: &CayleyTable, s: Option<&BTreeSet<usize>>, json: bool) -> String {
    if json {
        emit_json(&formats::table_json(t, s))
    } else {
        formats::render_table_text(t)
    }
}
