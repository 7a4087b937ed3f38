//! JSON report shapes. Field order here is the field order on stdout.

use std::str::FromStr;

use gia_core::ktheory::KGroups;
use gia_core::primitive::{PrimitiveIdeal, PrimitiveSource};
use gia_core::{AbelianGroup, EGraph, IdealSpec, VertexSet};
use serde::Serialize;
use serde_json::Number;

pub const K_BANNER: &str =
    "Condition (K) holds: every ideal of C*(E) is gauge-invariant, so this list is complete";
pub const PRIMITIVE_LABEL: &str = "gauge-invariant primitive ideals";
pub const COMPLETE_LABEL: &str = "gauge-invariant primitive ideals; complete primitive-ideal list";

pub fn names(g: &EGraph, x: &VertexSet) -> Vec<String> {
    x.iter().map(|v| g.name(v).to_owned()).collect()
}

#[derive(Debug, Serialize)]
pub struct CheckReport {
    pub row_finite: bool,
    #[serde(rename = "condition_K")]
    pub condition_k: bool,
    #[serde(rename = "condition_L")]
    pub condition_l: bool,
    pub simple: bool,
    pub primitive: bool,
}

#[derive(Debug, Serialize)]
pub struct HereditaryEntry {
    pub h: Vec<String>,
    pub fin_inf: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Closure {
    pub of: Vec<String>,
    pub closure: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct HereditaryReport {
    pub count: usize,
    pub sets: Vec<HereditaryEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<Closure>,
}

#[derive(Debug, Serialize)]
pub struct IdealEntry {
    pub label: String,
    pub h: Vec<String>,
    pub b: Vec<String>,
}

impl IdealEntry {
    pub fn new(g: &EGraph, j: &IdealSpec) -> Self {
        Self {
            label: j.label(g),
            h: names(g, j.h()),
            b: names(g, j.b()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct IdealsReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub banner: Option<&'static str>,
    /// True when the list contains every closed ideal, not just the
    /// gauge-invariant ones.
    pub complete: bool,
    pub count: usize,
    pub ideals: Vec<IdealEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dot_file: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct TailEntry {
    pub vertices: Vec<String>,
    pub loops_have_exits: bool,
}

#[derive(Debug, Serialize)]
pub struct PrimitiveEntry {
    pub label: String,
    pub h: Vec<String>,
    pub b: Vec<String>,
    /// `"tail"` or `"breaking_vertex"`.
    pub source: &'static str,
    pub from: Vec<String>,
}

impl PrimitiveEntry {
    pub fn new(g: &EGraph, p: &PrimitiveIdeal) -> Self {
        let (source, from) = match &p.source {
            PrimitiveSource::Tail(m) => ("tail", names(g, m)),
            PrimitiveSource::BreakingVertex(v) => ("breaking_vertex", vec![g.name(*v).to_owned()]),
        };
        let IdealEntry { label, h, b } = IdealEntry::new(g, &p.spec);
        Self {
            label,
            h,
            b,
            source,
            from,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct PrimitiveReport {
    pub tails: Vec<TailEntry>,
    pub breaking_vertices: Vec<String>,
    pub label: &'static str,
    pub complete: bool,
    pub primitive_ideals: Vec<PrimitiveEntry>,
}

#[derive(Debug, PartialEq, Eq, Serialize)]
pub struct GroupReport {
    pub torsion: Vec<Number>,
    pub free_rank: usize,
}

impl From<&AbelianGroup> for GroupReport {
    fn from(a: &AbelianGroup) -> Self {
        let torsion = a
            .torsion()
            .iter()
            .map(|d| Number::from_str(&d.to_string()).expect("decimal integers are JSON numbers"))
            .collect();
        Self {
            torsion,
            free_rank: a.free_rank(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct KTheoryReport {
    /// `"algebra"`, `"ideal"` or `"quotient"`.
    pub target: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Vec<String>>,
    pub k0: GroupReport,
    pub k1: GroupReport,
}

impl KTheoryReport {
    pub fn new(target: &'static str, k: &KGroups) -> Self {
        Self {
            target,
            h: None,
            b: None,
            k0: (&k.k0).into(),
            k1: (&k.k1).into(),
        }
    }
}
