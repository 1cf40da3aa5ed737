//! Serializable case report and its plain-text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::arthur::{self, UnitarityReport};
use crate::case::AbelianCase;
use crate::error::Result;
use crate::microlocal::{self, Discrepancy};
use crate::orbits::{self, ConnectednessCheck};
use crate::rootsys::{Kind, RootId, RootSystem};

pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Coords {
    #[default]
    Simple,
    Epsilon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    pub simple: Vec<i64>,
    pub epsilon: String,
}

impl Root {
    fn new(rs: &RootSystem, id: RootId) -> Self {
        let simple = rs.root(id).to_vec();
        Root {
            epsilon: rs.epsilon_coords(&simple).to_string(),
            simple,
        }
    }

    pub fn render(&self, coords: Coords) -> String {
        match coords {
            Coords::Simple => format!(
                "[{}]",
                self.simple.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
            ),
            Coords::Epsilon => self.epsilon.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Input {
    #[serde(rename = "type")]
    pub kind: Kind,
    pub rank: usize,
    pub node: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandReport {
    pub shape_node: usize,
    pub highest_weight: Root,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicReport {
    pub system: String,
    pub lambda: Vec<i64>,
    pub levi_nodes: Vec<usize>,
    pub m_label: String,
    pub module_label: String,
    pub dim_v: usize,
    pub abelian: bool,
    pub summands: Vec<SummandReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCosetReport {
    pub word: String,
    pub length: usize,
    pub k_nodes: Vec<usize>,
    pub prime_length_by_difference: usize,
    pub prime_length_by_inversions: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub word: String,
    pub minimal: bool,
    pub same_double_coset: bool,
    pub length: usize,
    pub k_nodes: Vec<usize>,
    pub dim_formula: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub index: usize,
    pub representative: Vec<Root>,
    pub dim: usize,
    pub dim_tangent: usize,
    pub double_coset: DoubleCosetReport,
    pub published_word: Option<FixtureReport>,
    pub dual_index: usize,
    pub component_group: String,
    pub g_orbit_label: Option<String>,
    pub weighted_dynkin: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub index: usize,
    pub h_1: Vec<i64>,
    pub h_2: Vec<i64>,
    pub h_sum: Vec<i64>,
    pub h_sum_equals_2lambda: bool,
    pub cross_brackets_zero: bool,
    pub sum_is_triple: Option<bool>,
    pub valid: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArthurReport {
    pub certificates: Vec<CertificateReport>,
    pub unitarity: UnitarityReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleObjectReport {
    pub label: String,
    pub index: usize,
    pub character: microlocal::Character,
    pub cc: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PacketReport {
    pub orbit: usize,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverReport {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub isolated: Vec<String>,
    pub relations: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MicrolocalReport {
    pub simple_objects: Vec<SimpleObjectReport>,
    pub packets: Vec<PacketReport>,
    pub discrepancies: Vec<Discrepancy>,
    pub fourier: Vec<[String; 2]>,
    pub fourier_solutions: usize,
    pub quiver: QuiverReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub schema_version: String,
    pub input: Input,
    pub parabolic: ParabolicReport,
    pub canonical_string: Vec<Root>,
    pub orbits: Vec<OrbitReport>,
    pub connectedness_checks: Vec<ConnectednessCheck>,
    pub regular: bool,
    pub arthur: ArthurReport,
    pub microlocal: MicrolocalReport,
    /// Field path → "computed" or "fixture".
    pub provenance: BTreeMap<String, String>,
}

fn provenance() -> BTreeMap<String, String> {
    let computed = [
        "parabolic",
        "canonical_string",
        "orbits.representative",
        "orbits.dim",
        "orbits.dim_tangent",
        "orbits.double_coset",
        "orbits.dual_index",
        "orbits.weighted_dynkin",
        "connectedness_checks",
        "regular",
        "arthur",
        "microlocal.packets",
        "microlocal.fourier",
        "microlocal.discrepancies",
    ];
    let fixture = [
        "parabolic.m_label",
        "parabolic.module_label",
        "orbits.published_word",
        "orbits.component_group",
        "orbits.g_orbit_label",
        "arthur.unitarity.residual_note",
        "microlocal.simple_objects",
        "microlocal.quiver",
    ];
    computed
        .iter()
        .map(|k| (k.to_string(), "computed".to_string()))
        .chain(fixture.iter().map(|k| (k.to_string(), "fixture".to_string())))
        .collect()
}

pub fn case_report(case: &AbelianCase) -> Result<CaseReport> {
    let rs = case.root_system();
    let datum = &case.datum;
    let root = |id: RootId| Root::new(rs, id);
    let summands = datum
        .module_decomposition()?
        .into_iter()
        .map(|s| SummandReport {
            shape_node: s.shape_node,
            highest_weight: root(s.highest_weight),
            dim: s.dim,
        })
        .collect();
    let table = orbits::orbit_table(case)?;
    let orbit_reports = table
        .iter()
        .map(|o| OrbitReport {
            index: o.index,
            representative: o.representative.iter().map(|&g| root(g)).collect(),
            dim: o.dim,
            dim_tangent: o.dim_tangent,
            double_coset: DoubleCosetReport {
                word: o.double_coset.word.to_nodes_string(),
                length: o.double_coset.length,
                k_nodes: o.double_coset.prime.k_nodes.clone(),
                prime_length_by_difference: o.double_coset.prime.by_difference,
                prime_length_by_inversions: o.double_coset.prime.by_inversions,
                dim: o.double_coset.dim,
            },
            published_word: o.fixture.as_ref().map(|f| FixtureReport {
                word: f.word.to_nodes_string(),
                minimal: f.minimal,
                same_double_coset: f.same_double_coset,
                length: f.length,
                k_nodes: f.prime.k_nodes.clone(),
                dim_formula: f.dim_formula,
            }),
            dual_index: o.dual_index,
            component_group: o.component_group.to_string(),
            g_orbit_label: o.g_orbit.label.clone(),
            weighted_dynkin: o.g_orbit.weighted_dynkin.clone(),
        })
        .collect();
    let certificates = (0..=case.r())
        .map(|i| {
            arthur::arthur_pair_check(case, i).map(|c| CertificateReport {
                index: c.index,
                h_1: c.triple_1.h.0.clone(),
                h_2: c.triple_2.h.0.clone(),
                h_sum: c.h_sum.0.clone(),
                h_sum_equals_2lambda: c.h_sum_equals_2lambda,
                cross_brackets_zero: c.cross_brackets_zero,
                sum_is_triple: c.sum_is_triple,
                valid: c.is_valid(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let objs = microlocal::simple_objects(case);
    let simple_objects = objs
        .iter()
        .map(|&s| {
            microlocal::characteristic_cycle(case, s).map(|cc| SimpleObjectReport {
                label: s.label(),
                index: s.index,
                character: s.character,
                cc: cc.multiplicities,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let packets = microlocal::microlocal_packets(case)?
        .iter()
        .enumerate()
        .map(|(o, p)| PacketReport {
            orbit: o,
            members: p.iter().map(|s| s.label()).collect(),
        })
        .collect();
    let fourier = microlocal::fourier_involution(case)?;
    let q = microlocal::quiver(case);
    Ok(CaseReport {
        schema_version: SCHEMA_VERSION.to_string(),
        input: Input {
            kind: rs.kind(),
            rank: rs.rank(),
            node: datum.node(),
        },
        parabolic: ParabolicReport {
            system: rs.name(),
            lambda: datum.lambda().0.clone(),
            levi_nodes: datum.levi_nodes().to_vec(),
            m_label: datum.m_label().to_string(),
            module_label: case.family.module_label(),
            dim_v: datum.dim_v(),
            abelian: datum.is_abelian_radical(),
            summands,
        },
        canonical_string: case.string.roots.iter().map(|&g| root(g)).collect(),
        connectedness_checks: orbits::connectedness_checks(case, &table),
        regular: orbits::is_regular(case, &table),
        orbits: orbit_reports,
        arthur: ArthurReport {
            certificates,
            unitarity: arthur::unitarity_report(case)?,
        },
        microlocal: MicrolocalReport {
            simple_objects,
            packets,
            discrepancies: microlocal::compare_with_printed(case)?,
            fourier: fourier.images.iter().map(|(a, b)| [a.label(), b.label()]).collect(),
            fourier_solutions: fourier.solutions,
            quiver: QuiverReport {
                vertices: q.vertices.iter().map(|s| s.label()).collect(),
                edges: q.edges.iter().map(|(a, b)| [a.label(), b.label()]).collect(),
                isolated: q.isolated().iter().map(|s| s.label()).collect(),
                relations: q.relations.clone(),
            },
        },
        provenance: provenance(),
    })
}

impl CaseReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_table(&self, coords: Coords) -> String {
        let mut s = String::new();
        let p = &self.parabolic;
        let join = |v: &[String], sep: &str| v.join(sep);
        let _ = writeln!(s, "{} node {}", p.system, self.input.node);
        let _ = writeln!(s, "  M = {}   V = {}   dim V = {}", p.m_label, p.module_label, p.dim_v);
        let string: Vec<String> = self.canonical_string.iter().map(|r| r.render(coords)).collect();
        let _ = writeln!(s, "  canonical string: {}", join(&string, ", "));
        let _ = writeln!(s, "  regular: {}", if self.regular { "yes" } else { "no" });
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "  {:>2}  {:>4}  {:>4}  {:<18} {:>4}  {:<5} {:<14} weighted Dynkin",
            "i", "dim", "dual", "w (minimal)", "l(w')", "A_M", "G-orbit"
        );
        for o in &self.orbits {
            let wdd: Vec<String> = o.weighted_dynkin.iter().map(i64::to_string).collect();
            let _ = writeln!(
                s,
                "  {:>2}  {:>4}  {:>4}  {:<18} {:>4}  {:<5} {:<14} {}",
                o.index,
                o.dim,
                o.dual_index,
                truncate(&o.double_coset.word, 18),
                o.double_coset.prime_length_by_difference,
                o.component_group,
                o.g_orbit_label.as_deref().unwrap_or("?"),
                wdd.join("")
            );
        }
        for o in &self.orbits {
            if let Some(f) = &o.published_word {
                if !f.minimal || !f.same_double_coset {
                    let _ = writeln!(
                        s,
                        "  note: published element for O{} is {}minimal{} (l(w)+l(w') on it = {})",
                        o.index,
                        if f.minimal { "" } else { "not " },
                        if f.same_double_coset { "" } else { " and in another double coset" },
                        f.dim_formula
                    );
                }
            }
        }
        let u = &self.arthur.unitarity;
        let _ = writeln!(s);
        let _ = writeln!(
            s,
            "  w0 lambda = -lambda: {}   Arthur pairs: {}   verdict: {}",
            u.w0_negates_lambda,
            if u.certificates_valid.iter().all(|&v| v) { "all" } else { "none" },
            u.verdict
        );
        if let Some(note) = &u.residual_note {
            let _ = writeln!(s, "  note: {note}");
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "  {:<6} {:<24} F~", "object", "CC");
        for (o, f) in self.microlocal.simple_objects.iter().zip(&self.microlocal.fourier) {
            let cc: Vec<String> = o
                .cc
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, &m)| m > 0)
                .map(|(k, _)| format!("O{k}"))
                .collect();
            let _ = writeln!(s, "  {:<6} {:<24} {}", o.label, join(&cc, " + "), f[1]);
        }
        let _ = writeln!(s);
        for p in &self.microlocal.packets {
            let _ = writeln!(s, "  A(O{}) = {{{}}}", p.orbit, join(&p.members, ", "));
        }
        let q = &self.microlocal.quiver;
        let edges: Vec<String> = q.edges.iter().map(|[a, b]| format!("{a}<->{b}")).collect();
        let _ = writeln!(
            s,
            "  quiver: {}; isolated: {}; {}",
            if edges.is_empty() { "no arrows".to_string() } else { join(&edges, ", ") },
            if q.isolated.is_empty() { "none".to_string() } else { join(&q.isolated, ", ") },
            q.relations
        );
        for d in &self.microlocal.discrepancies {
            let _ = writeln!(
                s,
                "  differs from published table ({}): {} printed {} derived {}",
                serde_json::to_value(d.kind).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default(),
                d.subject,
                d.printed,
                d.derived
            );
        }
        s
    }
}

fn truncate(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let head: String = s.chars().take(width - 3).collect();
        format!("{head}...")
    }
}
