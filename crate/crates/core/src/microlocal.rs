//! Simple equivariant objects on V, their characteristic cycles, microlocal
//! packets, the quiver of the category and the twisted Fourier involution.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::case::AbelianCase;
use crate::error::{Error, Result};
use crate::orbits::{component_group, ComponentGroup};
use crate::parabolic::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Character {
    Triv,
    Sgn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleObject {
    pub index: usize,
    pub character: Character,
}

impl SimpleObject {
    pub fn triv(index: usize) -> Self {
        SimpleObject {
            index,
            character: Character::Triv,
        }
    }

    pub fn sgn(index: usize) -> Self {
        SimpleObject {
            index,
            character: Character::Sgn,
        }
    }

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SimpleObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.character {
            Character::Triv => write!(f, "({})", self.index),
            Character::Sgn => write!(f, "({})'", self.index),
        }
    }
}

/// Multiplicity of each conormal bundle closure, indexed by orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharacteristicCycle {
    pub multiplicities: Vec<u32>,
}

impl CharacteristicCycle {
    fn from_orbits(r: usize, orbits: &[usize]) -> Self {
        let mut multiplicities = vec![0; r + 1];
        for &o in orbits {
            multiplicities[o] += 1;
        }
        CharacteristicCycle { multiplicities }
    }

    pub fn contains(&self, orbit: usize) -> bool {
        self.multiplicities.get(orbit).is_some_and(|&m| m > 0)
    }

    pub fn orbits(&self) -> Vec<usize> {
        (0..self.multiplicities.len()).filter(|&o| self.contains(o)).collect()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.multiplicities.iter().all(|&m| m <= 1)
    }

    /// Orbit O_i replaced by O_{r−i}.
    pub fn dual(&self) -> Self {
        let mut multiplicities = self.multiplicities.clone();
        multiplicities.reverse();
        CharacteristicCycle { multiplicities }
    }

    /// Largest orbit occurring, which is the support of the object.
    pub fn top(&self) -> Option<usize> {
        self.orbits().last().copied()
    }
}

impl fmt::Display for CharacteristicCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .multiplicities
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &m)| m > 0)
            .map(|(o, &m)| if m == 1 { format!("T*O{o}") } else { format!("{m}T*O{o}") })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

pub fn simple_objects(case: &AbelianCase) -> Vec<SimpleObject> {
    let mut out = Vec::new();
    for i in 0..=case.r() {
        out.push(SimpleObject::triv(i));
        if component_group(case.family, i) == ComponentGroup::Z2 {
            out.push(SimpleObject::sgn(i));
        }
    }
    out
}

fn validate(case: &AbelianCase, s: SimpleObject) -> Result<()> {
    if simple_objects(case).contains(&s) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{s} is not a simple object of this case")))
    }
}

/// Characteristic cycle by per-family dispatch. For E₇ the cuspidal object
/// carries every conormal.
pub fn characteristic_cycle(case: &AbelianCase, s: SimpleObject) -> Result<CharacteristicCycle> {
    validate(case, s)?;
    let r = case.r();
    let i = s.index;
    let sgn = s.character == Character::Sgn;
    let orbits: Vec<usize> = match case.family {
        Family::Symmetric { n } => {
            let same_parity = n % 2 == i % 2;
            // (i) is a single conormal when n ≡ i, and (i)′ when n ≢ i.
            if same_parity != sgn || i == 0 {
                vec![i]
            } else {
                vec![i, i - 1]
            }
        }
        Family::OddQuadric { .. } => match (i, sgn) {
            (1, false) => vec![0, 1],
            (2, true) => vec![1, 2],
            _ => vec![i],
        },
        Family::EvenQuadric { .. } => match (i, sgn) {
            (2, true) => vec![0, 1, 2],
            _ => vec![i],
        },
        Family::Albert => match (i, sgn) {
            (3, true) => vec![0, 1, 2, 3],
            _ => vec![i],
        },
        Family::Matrices { .. } | Family::Skew { .. } | Family::HalfSpin { .. } => vec![i],
    };
    Ok(CharacteristicCycle::from_orbits(r, &orbits))
}

/// Characteristic cycle exactly as the published case formulas display it.
pub fn printed_characteristic_cycle(case: &AbelianCase, s: SimpleObject) -> Result<CharacteristicCycle> {
    if case.family == Family::Albert && s == SimpleObject::sgn(3) {
        return Ok(CharacteristicCycle::from_orbits(3, &[3, 3, 1, 0]));
    }
    characteristic_cycle(case, s)
}

/// A(O_i) = objects whose cycle contains the conormal to O_i.
pub fn microlocal_packets(case: &AbelianCase) -> Result<Vec<Vec<SimpleObject>>> {
    let objs = simple_objects(case);
    let ccs = objs
        .iter()
        .map(|&s| characteristic_cycle(case, s))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..=case.r())
        .map(|o| {
            objs.iter()
                .zip(&ccs)
                .filter(|(_, cc)| cc.contains(o))
                .map(|(&s, _)| s)
                .collect()
        })
        .collect())
}

/// Packets as published, as labels since some
/// printed members do not exist.
pub fn printed_packets(case: &AbelianCase) -> Vec<Vec<String>> {
    let r = case.r();
    let l = |s: &str| s.to_string();
    (0..=r)
        .map(|i| match case.family {
            Family::Symmetric { n } if i == n => vec![format!("({n})"), format!("({n})'")],
            Family::Symmetric { .. } if i == 0 => vec![l("(0)"), l("(1)")],
            Family::Symmetric { .. } => vec![format!("({i})"), format!("({i})'"), format!("({})", i + 1)],
            Family::OddQuadric { .. } => match i {
                0 => vec![l("(0)"), l("(1)")],
                1 => vec![l("(1)"), l("(2)'")],
                _ => vec![l("(2)"), l("(2)'")],
            },
            Family::EvenQuadric { .. } | Family::Albert => vec![format!("({i})"), l("(2)'")],
            _ => vec![format!("({i})")],
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscrepancyKind {
    /// Printed E₇ cycle repeats O₃ and omits O₂.
    PrintedCycleTypo,
    /// Printed E₇ packets name an object (2)′ that does not exist.
    PrintedPacketTypo,
    /// Printed type C packet has the wrong prime on its third member.
    PrimeAmbiguity,
    Unexpected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub kind: DiscrepancyKind,
    pub subject: String,
    pub printed: String,
    pub derived: String,
}

/// Differences between the derived tables and the published ones.
pub fn compare_with_printed(case: &AbelianCase) -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    for s in simple_objects(case) {
        let derived = characteristic_cycle(case, s)?;
        let printed = printed_characteristic_cycle(case, s)?;
        if derived != printed {
            out.push(Discrepancy {
                kind: if case.family == Family::Albert {
                    DiscrepancyKind::PrintedCycleTypo
                } else {
                    DiscrepancyKind::Unexpected
                },
                subject: format!("CC{s}"),
                printed: printed.to_string(),
                derived: derived.to_string(),
            });
        }
    }
    let derived = microlocal_packets(case)?;
    for (o, (d, p)) in derived.iter().zip(printed_packets(case)).enumerate() {
        let d: BTreeSet<String> = d.iter().map(SimpleObject::label).collect();
        let p: BTreeSet<String> = p.into_iter().collect();
        if d == p {
            continue;
        }
        let unprime = |set: &BTreeSet<String>| -> BTreeSet<String> {
            set.iter().map(|x| x.trim_end_matches('\'').to_string()).collect()
        };
        let kind = match case.family {
            Family::Symmetric { .. } if unprime(&d) == unprime(&p) => DiscrepancyKind::PrimeAmbiguity,
            Family::Albert => DiscrepancyKind::PrintedPacketTypo,
            _ => DiscrepancyKind::Unexpected,
        };
        let show = |set: &BTreeSet<String>| format!("{{{}}}", set.iter().cloned().collect::<Vec<_>>().join(","));
        out.push(Discrepancy {
            kind,
            subject: format!("A(O{o})"),
            printed: show(&p),
            derived: show(&d),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<SimpleObject>,
    /// Pairs of vertices joined by arrows in both directions.
    pub edges: Vec<(SimpleObject, SimpleObject)>,
    pub relations: String,
}

impl Quiver {
    pub fn isolated(&self) -> Vec<SimpleObject> {
        self.vertices
            .iter()
            .copied()
            .filter(|v| self.edges.iter().all(|(a, b)| a != v && b != v))
            .collect()
    }

    pub fn has_edge(&self, a: SimpleObject, b: SimpleObject) -> bool {
        self.edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    /// Connected components, each in vertex order.
    pub fn components(&self) -> Vec<Vec<SimpleObject>> {
        let mut seen: BTreeSet<SimpleObject> = BTreeSet::new();
        let mut out = Vec::new();
        for &v in &self.vertices {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = vec![v];
            seen.insert(v);
            let mut k = 0;
            while k < comp.len() {
                let x = comp[k];
                for &u in &self.vertices {
                    if !seen.contains(&u) && self.has_edge(x, u) {
                        seen.insert(u);
                        comp.push(u);
                    }
                }
                k += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out
    }
}

fn chain(objs: &[SimpleObject]) -> Vec<(SimpleObject, SimpleObject)> {
    objs.windows(2).map(|w| (w[0], w[1])).collect()
}

/// The quiver of the equivariant category, per family.
pub fn quiver(case: &AbelianCase) -> Quiver {
    let r = case.r();
    let t = SimpleObject::triv;
    let s = SimpleObject::sgn;
    let all_triv: Vec<SimpleObject> = (0..=r).map(t).collect();
    let edges = match case.family {
        Family::Matrices { n, l } if n == 2 * l => chain(&all_triv),
        Family::Matrices { .. } | Family::HalfSpin { .. } => Vec::new(),
        Family::Skew { n, .. } if n % 2 == 0 => chain(&all_triv),
        Family::Skew { .. } => Vec::new(),
        Family::Symmetric { n } => {
            let eps = n % 2;
            // (1−ε), (3−ε), …, (n−1), (n) and (ε)′, (ε+2)′, …, (n−2)′, (n)′
            // with (0)′ read as (0).
            let mut first: Vec<SimpleObject> = (1 - eps..n).step_by(2).map(t).collect();
            first.push(t(n));
            let mut second: Vec<SimpleObject> = (eps..n.saturating_sub(1))
                .step_by(2)
                .map(|j| if j == 0 { t(0) } else { s(j) })
                .collect();
            second.push(s(n));
            let mut e = chain(&first);
            e.extend(chain(&second));
            e
        }
        Family::OddQuadric { .. } => vec![(t(1), t(2)), (t(0), s(2))],
        Family::EvenQuadric { .. } => chain(&[t(0), t(1), t(2)]),
        Family::Albert => chain(&all_triv),
    };
    Quiver {
        vertices: simple_objects(case),
        edges,
        relations: "all 2-cycles are zero".to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourierInvolution {
    /// Pairs (S, F̃(S)) in the order of the simple objects.
    pub images: Vec<(SimpleObject, SimpleObject)>,
    /// Number of permutations meeting every constraint; 1 when unique.
    pub solutions: usize,
}

impl FourierInvolution {
    pub fn apply(&self, s: SimpleObject) -> Option<SimpleObject> {
        self.images.iter().find(|(a, _)| *a == s).map(|&(_, b)| b)
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().all(|&(a, b)| self.apply(b) == Some(a))
    }

    pub fn fixed_points(&self) -> Vec<SimpleObject> {
        self.images.iter().filter(|(a, b)| a == b).map(|&(a, _)| a).collect()
    }
}

/// Searches all permutations F of the simple objects with
/// CC(F(S)) = dual CC(S), F(F(S)) = S, F((0)) = (r), and F an automorphism of
/// the quiver. The support of F(S) then automatically is the dual of the
/// smallest orbit in CC(S).
pub fn fourier_involution(case: &AbelianCase) -> Result<FourierInvolution> {
    let objs = simple_objects(case);
    let ccs = objs
        .iter()
        .map(|&s| characteristic_cycle(case, s))
        .collect::<Result<Vec<_>>>()?;
    let q = quiver(case);
    let n = objs.len();
    let open = objs
        .iter()
        .position(|&s| s == SimpleObject::triv(case.r()))
        .expect("open orbit object");
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| ccs[b] == ccs[a].dual())
                .filter(|&b| a != 0 || b == open)
                .collect()
        })
        .collect();

    struct Search<'a> {
        objs: &'a [SimpleObject],
        candidates: &'a [Vec<usize>],
        quiver: &'a Quiver,
        assign: Vec<Option<usize>>,
        found: Vec<Vec<usize>>,
    }

    impl Search<'_> {
        fn edge(&self, a: usize, b: usize) -> bool {
            self.quiver.has_edge(self.objs[a], self.objs[b])
        }

        fn consistent(&self) -> bool {
            let n = self.objs.len();
            for a in 0..n {
                let Some(fa) = self.assign[a] else { continue };
                if self.assign[fa].is_some_and(|x| x != a) {
                    return false;
                }
                for b in 0..n {
                    let Some(fb) = self.assign[b] else { continue };
                    if a != b && fa == fb {
                        return false;
                    }
                    if self.edge(a, b) != self.edge(fa, fb) {
                        return false;
                    }
                }
            }
            true
        }

        fn run(&mut self, k: usize) {
            if self.found.len() > 1 {
                return;
            }
            if k == self.objs.len() {
                self.found.push(self.assign.iter().map(|x| x.unwrap()).collect());
                return;
            }
            if self.assign[k].is_some() {
                self.run(k + 1);
                return;
            }
            for &b in &self.candidates[k] {
                if self.assign[b].is_some_and(|x| x != k) {
                    continue;
                }
                let prev_b = self.assign[b];
                self.assign[k] = Some(b);
                self.assign[b] = Some(k);
                if self.consistent() {
                    self.run(k + 1);
                }
                self.assign[k] = None;
                self.assign[b] = prev_b;
            }
        }
    }

    let mut search = Search {
        objs: &objs,
        candidates: &candidates,
        quiver: &q,
        assign: vec![None; n],
        found: Vec::new(),
    };
    search.run(0);
    match search.found.len() {
        0 => Err(Error::Consistency(format!(
            "no involution of the {} simple objects dualizes every characteristic cycle",
            n
        ))),
        1 => Ok(FourierInvolution {
            images: search.found[0].iter().enumerate().map(|(a, &b)| (objs[a], objs[b])).collect(),
            solutions: 1,
        }),
        k => Err(Error::Consistency(format!("the Fourier involution is not unique ({k} or more solutions)"))),
    }
}

/// Sign-character objects on the open orbit, which carry the cuspidal local
/// systems in the two cases where they exist.
pub fn cuspidal_objects(case: &AbelianCase) -> Vec<SimpleObject> {
    match case.family {
        Family::EvenQuadric { .. } | Family::Albert => vec![SimpleObject::sgn(case.r())],
        _ => Vec::new(),
    }
}
