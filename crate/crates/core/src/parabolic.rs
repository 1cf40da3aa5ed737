//! The parabolic datum of a single node: λ = ω^∨, the level grading, the
//! degree-one module V = g₁ and the abelian-radical test.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Coweight, Kind, RootId, RootSystem};

/// The maximal parabolics with abelian unipotent radical, one variant per
/// row of the classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum Family {
    /// GL(l) × GL(n−l) on ℂ^l ⊗ ℂ^{n−l}, inside A_{n−1}.
    Matrices { n: usize, l: usize },
    /// GL(n) on S²ℂⁿ, inside C_n at node n.
    Symmetric { n: usize },
    /// GL(1) × Spin(2n−1) on ℂ^{2n−1}, inside B_n at node 1.
    OddQuadric { n: usize },
    /// GL(1) × Spin(2n−2) on ℂ^{2n−2}, inside D_n at node 1.
    EvenQuadric { n: usize },
    /// GL(n) on ∧²ℂⁿ, inside D_n at node n−1 or n.
    Skew { n: usize, node: usize },
    /// GL(1) × Spin(10) on a half-spin module, inside E₆ at node 1 or 6.
    HalfSpin { node: usize },
    /// E₆ × GL(1) on the 27-dimensional module, inside E₇ at node 7.
    Albert,
}

impl Family {
    /// Table lookup of the abelian-radical cases. `rank` is the rank of the
    /// root system, so type A_{n−1} has rank n − 1.
    pub fn classify(kind: Kind, rank: usize, node: usize) -> Option<Family> {
        match kind {
            Kind::A if (1..=rank).contains(&node) => Some(Family::Matrices { n: rank + 1, l: node }),
            Kind::C if node == rank => Some(Family::Symmetric { n: rank }),
            Kind::B if node == 1 => Some(Family::OddQuadric { n: rank }),
            Kind::D if node == 1 => Some(Family::EvenQuadric { n: rank }),
            Kind::D if node + 1 == rank || node == rank => Some(Family::Skew { n: rank, node }),
            Kind::E if rank == 6 && (node == 1 || node == 6) => Some(Family::HalfSpin { node }),
            Kind::E if rank == 7 && node == 7 => Some(Family::Albert),
            _ => None,
        }
    }

    /// Levi factor as printed in the classification table.
    pub fn levi_label(&self) -> String {
        match *self {
            Family::Matrices { n, l } => format!("GL({l})×GL({})", n - l),
            Family::Symmetric { n } => format!("GL({n})"),
            Family::OddQuadric { n } => format!("GL(1)×Spin({})", 2 * n - 1),
            Family::EvenQuadric { n } => format!("GL(1)×Spin({})", 2 * n - 2),
            Family::Skew { n, .. } => format!("GL({n})"),
            Family::HalfSpin { .. } => "GL(1)×Spin(10)".to_string(),
            Family::Albert => "E6×GL(1)".to_string(),
        }
    }

    /// The module V as printed in the classification table.
    pub fn module_label(&self) -> String {
        match *self {
            Family::Matrices { n, l } => format!("C^{l}⊗C^{}", n - l),
            Family::Symmetric { n } => format!("S^2C^{n}"),
            Family::OddQuadric { n } => format!("C⊗C^{}", 2 * n - 1),
            Family::EvenQuadric { n } => format!("C⊗C^{}", 2 * n - 2),
            Family::Skew { n, .. } => format!("∧^2C^{n}"),
            Family::HalfSpin { .. } => "C⊗S (half-spin)".to_string(),
            Family::Albert => "V(27)⊗C".to_string(),
        }
    }

    pub fn module_dim(&self) -> usize {
        match *self {
            Family::Matrices { n, l } => l * (n - l),
            Family::Symmetric { n } => n * (n + 1) / 2,
            Family::OddQuadric { n } => 2 * n - 1,
            Family::EvenQuadric { n } => 2 * n - 2,
            Family::Skew { n, .. } => n * (n - 1) / 2,
            Family::HalfSpin { .. } => 16,
            Family::Albert => 27,
        }
    }

    /// Number of M-orbits on V according to the classification table.
    pub fn orbit_count(&self) -> usize {
        match *self {
            Family::Matrices { n, l } => l.min(n - l) + 1,
            Family::Symmetric { n } => n + 1,
            Family::OddQuadric { .. } | Family::EvenQuadric { .. } | Family::HalfSpin { .. } => 3,
            Family::Skew { n, .. } => n / 2 + 1,
            Family::Albert => 4,
        }
    }

    /// Dimension m of the quadric family's standard module.
    pub fn quadric_dim(&self) -> Option<usize> {
        match *self {
            Family::OddQuadric { n } => Some(2 * n - 1),
            Family::EvenQuadric { n } => Some(2 * n - 2),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Matrices { n, l } => write!(f, "A{} node {l}", n - 1),
            Family::Symmetric { n } => write!(f, "C{n} node {n}"),
            Family::OddQuadric { n } => write!(f, "B{n} node 1"),
            Family::EvenQuadric { n } => write!(f, "D{n} node 1"),
            Family::Skew { n, node } => write!(f, "D{n} node {node}"),
            Family::HalfSpin { node } => write!(f, "E6 node {node}"),
            Family::Albert => write!(f, "E7 node 7"),
        }
    }
}

/// One irreducible summand V_α of V.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    /// 1-based node α of Δ∖J.
    pub shape_node: usize,
    /// Highest weight: the unique coefficientwise-maximal root of shape α.
    pub highest_weight: RootId,
    pub dim: usize,
}

#[derive(Debug, Clone)]
pub struct ParabolicDatum {
    rs: RootSystem,
    node: usize,
    lambda: Coweight,
    levels: Vec<i64>,
    v_weights: Vec<RootId>,
    levi_nodes: Vec<usize>,
    m_label: String,
}

impl ParabolicDatum {
    /// Datum for λ = ω^∨ of a 1-based node.
    pub fn from_node(rs: &RootSystem, node: usize) -> Result<Self> {
        if node == 0 || node > rs.rank() {
            return Err(Error::InvalidNode {
                system: rs.name(),
                node,
                rank: rs.rank(),
            });
        }
        let lambda = Coweight::fundamental(rs.rank(), node);
        let levels: Vec<i64> = rs.positive_roots().map(|b| rs.pairing(&lambda, b)).collect();
        let v_weights = rs.positive_roots().filter(|&b| levels[b] == 1).collect();
        let levi_nodes: Vec<usize> = (1..=rs.rank()).filter(|&k| k != node).collect();
        let m_label = levi_label(rs, &levi_nodes);
        Ok(ParabolicDatum {
            rs: rs.clone(),
            node,
            lambda,
            levels,
            v_weights,
            levi_nodes,
            m_label,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn lambda(&self) -> &Coweight {
        &self.lambda
    }

    /// J as 1-based nodes.
    pub fn levi_nodes(&self) -> &[usize] {
        &self.levi_nodes
    }

    /// J as 0-based simple indices.
    pub fn levi_indices(&self) -> Vec<usize> {
        self.levi_nodes.iter().map(|k| k - 1).collect()
    }

    /// Level of any root (negative roots have negative level).
    pub fn level(&self, beta: RootId) -> i64 {
        self.rs.pairing(&self.lambda, beta)
    }

    /// Positive roots of level one, the weights of V.
    pub fn v_weights(&self) -> &[RootId] {
        &self.v_weights
    }

    pub fn dim_v(&self) -> usize {
        self.v_weights.len()
    }

    pub fn m_label(&self) -> &str {
        &self.m_label
    }

    pub fn family(&self) -> Option<Family> {
        Family::classify(self.rs.kind(), self.rs.rank(), self.node)
    }

    pub fn higher_levels_empty(&self) -> bool {
        self.levels.iter().all(|&l| l <= 1)
    }

    pub fn is_abelian_radical(&self) -> bool {
        self.higher_levels_empty()
    }

    /// Lowest root of level at least two, if any.
    pub fn non_abelian_witness(&self) -> Option<RootId> {
        self.rs.positive_roots().find(|&b| self.levels[b] >= 2)
    }

    /// Errors with [`Error::NonAbelian`] naming a witness root.
    pub fn require_abelian(&self) -> Result<()> {
        match self.non_abelian_witness() {
            None => Ok(()),
            Some(w) => Err(Error::NonAbelian {
                system: self.rs.name(),
                node: self.node,
                witness: format!("{:?} = {}", self.rs.root(w), self.rs.epsilon_coords(self.rs.root(w))),
                level: self.levels[w],
            }),
        }
    }

    /// Splits the level-one roots by shape and finds the highest weight of
    /// each summand.
    pub fn module_decomposition(&self) -> Result<Vec<Summand>> {
        let mut shapes: Vec<usize> = self
            .v_weights
            .iter()
            .map(|&b| {
                (0..self.rs.rank())
                    .find(|&i| !self.levi_nodes.contains(&(i + 1)) && self.rs.root(b)[i] == 1)
                    .expect("level-one root has a shape node")
                    + 1
            })
            .collect();
        let weights = self.v_weights.clone();
        let mut out = Vec::new();
        let mut distinct = shapes.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for shape in distinct {
            let members: Vec<RootId> = weights
                .iter()
                .zip(&shapes)
                .filter(|(_, &s)| s == shape)
                .map(|(&b, _)| b)
                .collect();
            let maxima: Vec<RootId> = members
                .iter()
                .copied()
                .filter(|&a| {
                    members
                        .iter()
                        .all(|&b| self.rs.root(a).iter().zip(self.rs.root(b)).all(|(x, y)| x >= y))
                })
                .collect();
            if maxima.len() != 1 {
                return Err(Error::Consistency(format!(
                    "shape α{shape} has {} coefficientwise-maximal roots",
                    maxima.len()
                )));
            }
            out.push(Summand {
                shape_node: shape,
                highest_weight: maxima[0],
                dim: members.len(),
            });
        }
        shapes.clear();
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Component {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
}

/// Levi label generated from the sub-diagram on J plus a one-dimensional
/// centre.
pub fn levi_label(rs: &RootSystem, levi_nodes: &[usize]) -> String {
    let rank = rs.rank();
    if rs.kind() == Kind::A {
        // M = S(GL(a) × GL(b) × ⋯) · centre; for one node this is GL × GL.
        let mut sizes = Vec::new();
        let mut run = 1;
        for k in 1..=rank {
            if levi_nodes.contains(&k) {
                run += 1;
            } else {
                sizes.push(run);
                run = 1;
            }
        }
        sizes.push(run);
        return sizes.iter().map(|s| format!("GL({s})")).collect::<Vec<_>>().join("×");
    }
    let comps = components(rs, levi_nodes);
    if let [Component::A(m)] = comps.as_slice() {
        return format!("GL({})", m + 1);
    }
    let mut names: Vec<String> = Vec::new();
    let mut exceptional: Vec<String> = Vec::new();
    for c in &comps {
        match *c {
            Component::A(m) => names.push(format!("SL({})", m + 1)),
            Component::B(m) => names.push(format!("Spin({})", 2 * m + 1)),
            Component::C(m) => names.push(format!("Sp({})", 2 * m)),
            Component::D(m) => names.push(format!("Spin({})", 2 * m)),
            Component::E(m) => exceptional.push(format!("E{m}")),
        }
    }
    let center = "GL(1)".to_string();
    if !exceptional.is_empty() {
        let mut parts = exceptional;
        parts.extend(names);
        parts.push(center);
        return parts.join("×");
    }
    let mut parts = vec![center];
    parts.extend(names);
    parts.join("×")
}

fn components(rs: &RootSystem, nodes: &[usize]) -> Vec<Component> {
    let rank = rs.rank();
    let cartan = rs.cartan();
    let adjacent = |a: usize, b: usize| a != b && cartan[a - 1][b - 1] != 0;
    let mut seen = vec![false; rank + 1];
    let mut out = Vec::new();
    for &start in nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for &u in nodes {
                if !seen[u] && adjacent(u, v) {
                    seen[u] = true;
                    comp.push(u);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        let size = comp.len();
        let ty = match rs.kind() {
            Kind::B if comp.contains(&rank) => Component::B(size),
            Kind::C if comp.contains(&rank) => Component::C(size),
            Kind::D if comp.contains(&(rank - 1)) && comp.contains(&rank) && size >= 3 => Component::D(size),
            Kind::E => {
                let degree = |v: usize| comp.iter().filter(|&&u| adjacent(u, v)).count();
                match comp.iter().find(|&&v| degree(v) == 3) {
                    Some(_) => {
                        let leaves = comp.iter().filter(|&&v| degree(v) == 1).count();
                        debug_assert_eq!(leaves, 3);
                        // Branch at node 4: arm through node 2 has length 1.
                        let left = comp.iter().filter(|&&v| v == 1 || v == 3).count();
                        let right = comp.iter().filter(|&&v| v >= 5).count();
                        match (left.min(right), left.max(right)) {
                            (1, r) => Component::D(r + 3),
                            (2, 2) => Component::E(6),
                            (2, 3) => Component::E(7),
                            _ => Component::A(size),
                        }
                    }
                    None => Component::A(size),
                }
            }
            _ => Component::A(size),
        };
        out.push(ty);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(k: Kind, n: usize, node: usize) -> ParabolicDatum {
        ParabolicDatum::from_node(&RootSystem::build(k, n).unwrap(), node).unwrap()
    }

    #[test]
    fn module_dimensions() {
        assert_eq!(datum(Kind::A, 3, 2).dim_v(), 4);
        assert_eq!(datum(Kind::E, 7, 7).dim_v(), 27);
        assert_eq!(datum(Kind::C, 2, 2).dim_v(), 3);
    }

    #[test]
    fn abelian_detection() {
        for n in 2..=6 {
            assert!(datum(Kind::C, n, n).is_abelian_radical());
            let d = datum(Kind::C, n, 1);
            assert!(!d.is_abelian_radical());
            let w = d.non_abelian_witness().unwrap();
            // 2e1 = 2α1 + ⋯ + 2α_{n−1} + α_n
            let mut expect = vec![2; n];
            expect[n - 1] = 1;
            assert_eq!(d.root_system().root(w), expect.as_slice());
            assert_eq!(d.require_abelian().unwrap_err().code(), 3);
        }
        assert!(datum(Kind::E, 7, 7).is_abelian_radical());
        assert!(!datum(Kind::E, 7, 1).is_abelian_radical());
    }

    #[test]
    fn invalid_node() {
        let rs = RootSystem::build(Kind::A, 3).unwrap();
        assert_eq!(ParabolicDatum::from_node(&rs, 4).unwrap_err().code(), 2);
        assert_eq!(ParabolicDatum::from_node(&rs, 0).unwrap_err().code(), 2);
    }

    #[test]
    fn single_summand() {
        let d = datum(Kind::E, 6, 1);
        let s = d.module_decomposition().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].dim, 16);
        assert_eq!(s[0].highest_weight, d.root_system().highest_root());
        let b = datum(Kind::B, 5, 1).module_decomposition().unwrap();
        assert_eq!((b.len(), b[0].dim), (1, 9));
    }

    #[test]
    fn levi_labels_match_table() {
        assert_eq!(datum(Kind::A, 5, 2).m_label(), "GL(2)×GL(4)");
        assert_eq!(datum(Kind::A, 5, 1).m_label(), "GL(1)×GL(5)");
        assert_eq!(datum(Kind::C, 4, 4).m_label(), "GL(4)");
        assert_eq!(datum(Kind::B, 2, 1).m_label(), "GL(1)×Spin(3)");
        assert_eq!(datum(Kind::B, 5, 1).m_label(), "GL(1)×Spin(9)");
        assert_eq!(datum(Kind::D, 4, 1).m_label(), "GL(1)×Spin(6)");
        assert_eq!(datum(Kind::D, 6, 5).m_label(), "GL(6)");
        assert_eq!(datum(Kind::E, 6, 6).m_label(), "GL(1)×Spin(10)");
        assert_eq!(datum(Kind::E, 7, 7).m_label(), "E6×GL(1)");
    }

    #[test]
    fn levels_match_pairing() {
        let d = datum(Kind::D, 5, 4);
        let rs = d.root_system();
        for b in rs.positive_roots() {
            assert_eq!(d.level(b), rs.root(b)[3]);
        }
    }
}
