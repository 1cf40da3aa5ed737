//! M-orbits on V: the upper canonical string, orbit dimensions by two
//! independent routes, Piasetskii duals, component groups and the nilpotent
//! G-orbits the M-orbits sit in.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::case::AbelianCase;
use crate::chevalley::AlgebraElement;
use crate::error::{Error, Result};
use crate::parabolic::{Family, ParabolicDatum};
use crate::rootsys::{Coweight, Kind, RootId, RootSystem};
use crate::weyl::{self, PrimeLength, WeylWord};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalString {
    pub roots: Vec<RootId>,
}

/// Greedy string: γ₁ is the highest root, and each next γ is the
/// coefficientwise-maximal level-one root orthogonal to all earlier ones.
pub fn canonical_string(datum: &ParabolicDatum) -> Result<CanonicalString> {
    if !datum.is_abelian_radical() {
        return Err(Error::Precondition(format!(
            "canonical string requires an abelian radical ({} node {})",
            datum.root_system().name(),
            datum.node()
        )));
    }
    let rs = datum.root_system();
    let mut picked: Vec<RootId> = Vec::new();
    loop {
        let candidates: Vec<RootId> = datum
            .v_weights()
            .iter()
            .copied()
            .filter(|&b| picked.iter().all(|&g| rs.inner(b, g) == 0))
            .collect();
        if candidates.is_empty() {
            break;
        }
        let dominates = |a: RootId, b: RootId| rs.root(a).iter().zip(rs.root(b)).all(|(x, y)| x >= y);
        let maxima: Vec<RootId> = candidates
            .iter()
            .copied()
            .filter(|&a| candidates.iter().all(|&b| dominates(a, b)))
            .collect();
        if maxima.len() != 1 {
            return Err(Error::Consistency(format!(
                "no unique highest root after {} steps of the canonical string",
                picked.len()
            )));
        }
        picked.push(maxima[0]);
    }
    for (k, &a) in picked.iter().enumerate() {
        if !rs.is_long(a) {
            return Err(Error::Consistency(format!("canonical root {a} is not long")));
        }
        for &b in &picked[k + 1..] {
            if !rs.strongly_orthogonal(a, b) {
                return Err(Error::Consistency(format!("canonical roots {a} and {b} are not strongly orthogonal")));
            }
        }
    }
    Ok(CanonicalString { roots: picked })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentGroup {
    Trivial,
    Z2,
}

impl fmt::Display for ComponentGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentGroup::Trivial => f.write_str("1"),
            ComponentGroup::Z2 => f.write_str("Z/2"),
        }
    }
}

/// Per-family table of A_M(x_i).
pub fn component_group(family: Family, i: usize) -> ComponentGroup {
    let z2 = match family {
        Family::Matrices { .. } | Family::Skew { .. } | Family::HalfSpin { .. } => false,
        Family::Symmetric { .. } => i >= 1,
        Family::OddQuadric { .. } | Family::EvenQuadric { .. } => i == 2,
        Family::Albert => i == 3,
    };
    if z2 {
        ComponentGroup::Z2
    } else {
        ComponentGroup::Trivial
    }
}

/// Length data for the minimal double coset representative of an orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCosetDimension {
    pub word: WeylWord,
    pub length: usize,
    pub prime: PrimeLength,
    pub dim: usize,
}

/// Check of a published Weyl group element against the computed orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordFixtureCheck {
    pub word: WeylWord,
    pub minimal: bool,
    pub same_double_coset: bool,
    pub length: usize,
    pub prime: PrimeLength,
    /// ℓ(w) + ℓ(w′) evaluated on the fixture word as given.
    pub dim_formula: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GOrbitLabel {
    pub weighted_dynkin: Vec<i64>,
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDatum {
    pub index: usize,
    pub representative: Vec<RootId>,
    pub dim: usize,
    pub dim_tangent: usize,
    pub double_coset: DoubleCosetDimension,
    pub fixture: Option<WordFixtureCheck>,
    pub dual_index: usize,
    pub component_group: ComponentGroup,
    pub g_orbit: GOrbitLabel,
}

/// h_i = γ₁^∨ + ⋯ + γ_i^∨.
pub fn h_sum(rs: &RootSystem, roots: &[RootId]) -> Coweight {
    roots
        .iter()
        .fold(Coweight::zero(rs.rank()), |acc, &g| acc.add(&rs.coroot(g)))
}

/// Element of the W_J-orbit of `v` that is dominant for J, with a word `w`
/// satisfying `w · v` = that element.
pub fn j_dominant(rs: &RootSystem, subset: &[usize], v: &Coweight) -> (Coweight, WeylWord) {
    let mut cur = v.clone();
    let mut applied = Vec::new();
    while let Some(&j) = subset.iter().find(|&&j| cur.0[j] < 0) {
        rs.simple_reflect_coweight(j, &mut cur);
        applied.push(j);
    }
    applied.reverse();
    (cur, WeylWord(applied))
}

/// Minimal double coset representative u attached to orbit i: u·λ is the
/// J-dominant point of the W_J-orbit of λ − h_i.
pub fn double_coset_dimension(case: &AbelianCase, i: usize) -> Result<DoubleCosetDimension> {
    case.check_index(i)?;
    let rs = case.root_system();
    let lam = case.datum.lambda();
    let j = case.datum.levi_indices();
    let mu = lam.sub(&h_sum(rs, &case.string.roots[..i]));
    let (mu_plus, _) = j_dominant(rs, &j, &mu);
    let (dom, w) = weyl::dominant_representative(rs, &mu_plus);
    if &dom != lam {
        return Err(Error::Consistency(format!("λ − h_{i} is not in the W-orbit of λ")));
    }
    let u = w.inverse();
    if u.act_on_coweight(rs, lam) != mu_plus {
        return Err(Error::Consistency("representative word does not carry λ to μ".into()));
    }
    if !weyl::is_minimal_double_coset_rep(rs, &j, &u) {
        return Err(Error::Consistency(format!("word {} is not minimal in its double coset", u.to_nodes_string())));
    }
    let length = weyl::inversion_length(rs, &u);
    if length != u.len() || length != weyl::min_coset_length(rs, &mu_plus) {
        return Err(Error::Consistency(format!("word {} is not reduced", u.to_nodes_string())));
    }
    let prime = weyl::prime_length(rs, &j, &u);
    if prime.by_difference != prime.by_inversions {
        return Err(Error::Consistency(format!(
            "ℓ(w′) disagrees: {} by difference, {} by inversions",
            prime.by_difference, prime.by_inversions
        )));
    }
    let dim = length + prime.by_difference;
    Ok(DoubleCosetDimension {
        word: u,
        length,
        prime,
        dim,
    })
}

/// Weyl group elements published for the exceptional cases, one per orbit.
pub fn word_fixtures(case: &AbelianCase) -> Option<Vec<WeylWord>> {
    let rs = case.root_system();
    let j = case.datum.levi_indices();
    let all: Vec<usize> = (0..rs.rank()).collect();
    let open = weyl::longest_word(rs, &all).then(&weyl::longest_word(rs, &j));
    match case.family {
        Family::HalfSpin { node: 1 } => Some(vec![WeylWord::identity(), WeylWord::from_nodes(&[1]), open]),
        Family::Albert => Some(vec![
            WeylWord::identity(),
            WeylWord::from_nodes(&[7]),
            WeylWord::from_nodes(&[7, 6, 5, 4, 2, 3, 4, 5, 6, 7]),
            open,
        ]),
        _ => None,
    }
}

fn check_fixture(case: &AbelianCase, i: usize, word: &WeylWord) -> WordFixtureCheck {
    let rs = case.root_system();
    let lam = case.datum.lambda();
    let j = case.datum.levi_indices();
    let mu = lam.sub(&h_sum(rs, &case.string.roots[..i]));
    let target = j_dominant(rs, &j, &mu).0;
    let image = j_dominant(rs, &j, &word.act_on_coweight(rs, lam)).0;
    let length = weyl::inversion_length(rs, word);
    let prime = weyl::prime_length(rs, &j, word);
    WordFixtureCheck {
        word: word.clone(),
        minimal: weyl::is_minimal_double_coset_rep(rs, &j, word),
        same_double_coset: image == target,
        length,
        dim_formula: length + prime.by_difference,
        prime,
    }
}

pub fn orbit_dimension_tangent(case: &AbelianCase, i: usize) -> Result<usize> {
    case.check_index(i)?;
    let rank = case.root_system().rank();
    let x = case.string.roots[..i]
        .iter()
        .fold(AlgebraElement::zero(rank), |acc, &g| acc.add(&AlgebraElement::root_vector(rank, g)));
    case.basis.orbit_dimension_tangent(&x, case.datum.lambda())
}

/// Weighted Dynkin diagram of h_i together with its lookup label.
pub fn g_orbit_label(case: &AbelianCase, i: usize) -> Result<GOrbitLabel> {
    case.check_index(i)?;
    let rs = case.root_system();
    let h = h_sum(rs, &case.string.roots[..i]);
    let (dom, _) = weyl::dominant_representative(rs, &h);
    Ok(GOrbitLabel {
        weighted_dynkin: dom.0,
        label: orbit_label(case.family, i),
    })
}

/// A partition as (part, multiplicity) pairs with parts descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition(pub Vec<(usize, usize)>);

impl Partition {
    pub fn parts(&self) -> Vec<usize> {
        self.0
            .iter()
            .flat_map(|&(p, m)| std::iter::repeat_n(p, m))
            .collect()
    }

    fn new(pairs: &[(usize, usize)]) -> Self {
        Partition(pairs.iter().copied().filter(|&(_, m)| m > 0).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .0
            .iter()
            .map(|&(p, m)| if m == 1 { p.to_string() } else { format!("{p}^{m}") })
            .collect();
        write!(f, "({})", body.join(","))
    }
}

/// Jordan type of the nilpotent G-orbit through x_i in the classical
/// families.
pub fn orbit_partition(family: Family, i: usize) -> Option<Partition> {
    let p = match family {
        Family::Matrices { n, l } if 2 * i <= n && i <= l.min(n - l) => Partition::new(&[(2, i), (1, n - 2 * i)]),
        Family::Symmetric { n } if i <= n => Partition::new(&[(2, i), (1, 2 * (n - i))]),
        Family::OddQuadric { .. } | Family::EvenQuadric { .. } => {
            let m = family.quadric_dim()?;
            match i {
                0 => Partition::new(&[(1, m + 2)]),
                1 => Partition::new(&[(2, 2), (1, m - 2)]),
                2 => Partition::new(&[(3, 1), (1, m - 1)]),
                _ => return None,
            }
        }
        Family::Skew { n, .. } if 2 * i <= n => Partition::new(&[(2, 2 * i), (1, 2 * n - 4 * i)]),
        _ => return None,
    };
    Some(p)
}

pub fn orbit_label(family: Family, i: usize) -> Option<String> {
    match family {
        Family::HalfSpin { .. } => ["1", "A1", "2A1"].get(i).map(|s| s.to_string()),
        Family::Albert => ["1", "A1", "2A1", "(3A1)''"].get(i).map(|s| s.to_string()),
        _ => orbit_partition(family, i).map(|p| p.to_string()),
    }
}

/// Weighted Dynkin diagram of a classical nilpotent orbit from its Jordan
/// type, via the eigenvalues of a neutral element in the natural module.
/// For very even orbits in type D the two classes differ by swapping the
/// last two entries; this returns the one with the larger last entry.
pub fn classical_weighted_dynkin(kind: Kind, rank: usize, parts: &[usize]) -> Option<Vec<i64>> {
    let mut eig: Vec<i64> = parts
        .iter()
        .flat_map(|&p| (0..p).map(move |k| p as i64 - 1 - 2 * k as i64))
        .collect();
    eig.sort_unstable_by(|a, b| b.cmp(a));
    let n = rank;
    match kind {
        Kind::A => {
            if eig.len() != n + 1 {
                return None;
            }
            Some((0..n).map(|k| eig[k] - eig[k + 1]).collect())
        }
        Kind::B | Kind::C | Kind::D => {
            let expected = if kind == Kind::B { 2 * n + 1 } else { 2 * n };
            if eig.len() != expected {
                return None;
            }
            let h = &eig[..n];
            let mut w: Vec<i64> = (0..n - 1).map(|k| h[k] - h[k + 1]).collect();
            w.push(match kind {
                Kind::B => h[n - 1],
                Kind::C => 2 * h[n - 1],
                _ => h[n - 2] + h[n - 1],
            });
            Some(w)
        }
        Kind::E => None,
    }
}

/// Known weighted Dynkin diagrams of the E-type labels used here.
pub fn exceptional_weighted_dynkin(rank: usize, label: &str) -> Option<Vec<i64>> {
    let v: &[i64] = match (rank, label) {
        (6, "1") => &[0, 0, 0, 0, 0, 0],
        (6, "A1") => &[0, 1, 0, 0, 0, 0],
        (6, "2A1") => &[1, 0, 0, 0, 0, 1],
        (7, "1") => &[0, 0, 0, 0, 0, 0, 0],
        (7, "A1") => &[1, 0, 0, 0, 0, 0, 0],
        (7, "2A1") => &[0, 0, 0, 0, 0, 1, 0],
        (7, "(3A1)''") => &[0, 0, 0, 0, 0, 0, 2],
        _ => return None,
    };
    Some(v.to_vec())
}

pub fn orbit_table(case: &AbelianCase) -> Result<Vec<OrbitDatum>> {
    let r = case.r();
    let fixtures = word_fixtures(case);
    let mut out = Vec::with_capacity(r + 1);
    for i in 0..=r {
        let dim_tangent = orbit_dimension_tangent(case, i)?;
        let double_coset = double_coset_dimension(case, i)?;
        if double_coset.dim != dim_tangent {
            return Err(Error::Consistency(format!(
                "orbit {i}: tangent rank {dim_tangent} but ℓ(w)+ℓ(w′) = {}",
                double_coset.dim
            )));
        }
        let fixture = fixtures.as_ref().map(|f| check_fixture(case, i, &f[i]));
        out.push(OrbitDatum {
            index: i,
            representative: case.string.roots[..i].to_vec(),
            dim: dim_tangent,
            dim_tangent,
            double_coset,
            fixture,
            dual_index: r - i,
            component_group: component_group(case.family, i),
            g_orbit: g_orbit_label(case, i)?,
        });
    }
    Ok(out)
}

/// Outcome of one corroborating check on the component group table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectednessCheck {
    pub index: usize,
    pub criterion: String,
    pub consistent: bool,
}

/// Applies the two connectedness criteria wherever their hypotheses hold:
/// the highest-weight line when M = GL(1) × H, and codimension at least two
/// of the boundary of the open orbit.
pub fn connectedness_checks(case: &AbelianCase, table: &[OrbitDatum]) -> Vec<ConnectednessCheck> {
    let mut out = Vec::new();
    let label = case.datum.m_label();
    let r = case.r();
    if r >= 1 && (label.starts_with("GL(1)×") || label.ends_with("×GL(1)")) {
        out.push(ConnectednessCheck {
            index: 1,
            criterion: "highest weight vector".into(),
            consistent: table[1].component_group == ComponentGroup::Trivial,
        });
    }
    if r >= 1 && case.datum.dim_v() - table[r - 1].dim >= 2 {
        out.push(ConnectednessCheck {
            index: r,
            criterion: "boundary of codimension ≥ 2".into(),
            consistent: table[r].component_group == ComponentGroup::Trivial,
        });
    }
    out
}

/// V is regular exactly when the boundary of the open orbit is a
/// hypersurface.
pub fn is_regular(case: &AbelianCase, table: &[OrbitDatum]) -> bool {
    let r = case.r();
    r >= 1 && case.datum.dim_v() - table[r - 1].dim == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(k: Kind, n: usize, node: usize) -> AbelianCase {
        AbelianCase::new(k, n, node).unwrap()
    }

    fn eps(c: &AbelianCase) -> Vec<String> {
        let rs = c.root_system();
        c.string.roots.iter().map(|&g| rs.epsilon_coords(rs.root(g)).to_string()).collect()
    }

    #[test]
    fn type_c_string() {
        assert_eq!(eps(&case(Kind::C, 4, 4)), ["2e1", "2e2", "2e3", "2e4"]);
    }

    #[test]
    fn e7_string() {
        assert_eq!(eps(&case(Kind::E, 7, 7)), ["-e7+e8", "e5+e6", "-e5+e6"]);
    }

    #[test]
    fn b_string() {
        assert_eq!(eps(&case(Kind::B, 4, 1)), ["e1+e2", "e1-e2"]);
    }

    #[test]
    fn non_abelian_is_precondition() {
        let rs = RootSystem::build(Kind::C, 3).unwrap();
        let d = ParabolicDatum::from_node(&rs, 1).unwrap();
        assert_eq!(canonical_string(&d).unwrap_err().code(), 4);
    }

    fn dims(c: &AbelianCase) -> Vec<usize> {
        orbit_table(c).unwrap().iter().map(|o| o.dim).collect()
    }

    #[test]
    fn exceptional_dims() {
        assert_eq!(dims(&case(Kind::E, 6, 1)), [0, 11, 16]);
        assert_eq!(dims(&case(Kind::E, 7, 7)), [0, 17, 26, 27]);
    }

    #[test]
    fn rank_matrices() {
        for n in 2..=6 {
            for l in 1..n {
                let k = n - l;
                let expect: Vec<usize> = (0..=l.min(k)).map(|i| i * (l + k - i)).collect();
                assert_eq!(dims(&case(Kind::A, n - 1, l)), expect);
            }
        }
    }

    #[test]
    fn symmetric_dims() {
        for n in 2..=5 {
            let expect: Vec<usize> = (0..=n).map(|i| i * (2 * n + 1 - i) / 2).collect();
            assert_eq!(dims(&case(Kind::C, n, n)), expect);
        }
    }

    #[test]
    fn e7_prime_lengths() {
        let t = orbit_table(&case(Kind::E, 7, 7)).unwrap();
        assert_eq!(t[1].double_coset.word.to_nodes_string(), "s7");
        assert_eq!(t[1].double_coset.prime.k_nodes, [1, 2, 3, 4, 5]);
        assert_eq!(t[1].double_coset.prime.by_difference, 16);
        assert_eq!(t[2].double_coset.length, 10);
        assert_eq!(t[2].double_coset.prime.k_nodes, [2, 3, 4, 5, 6]);
        for o in &t {
            let f = o.fixture.as_ref().unwrap();
            assert!(f.minimal && f.same_double_coset, "orbit {}", o.index);
            assert_eq!(f.dim_formula, o.dim);
        }
    }

    #[test]
    fn e6_open_orbit_fixture_is_not_minimal() {
        let t = orbit_table(&case(Kind::E, 6, 1)).unwrap();
        assert_eq!(t[1].double_coset.prime.k_nodes, [2, 4, 5, 6]);
        let f = t[2].fixture.as_ref().unwrap();
        assert!(f.same_double_coset);
        assert!(!f.minimal);
        assert_eq!(f.prime.k_nodes, [2, 3, 4, 5]);
        assert_eq!((f.length, f.dim_formula), (16, 24));
        let u = &t[2].double_coset;
        assert_eq!((u.length, u.prime.by_difference, u.dim), (8, 8, 16));
    }

    #[test]
    fn component_groups() {
        let c3 = Family::Symmetric { n: 3 };
        assert_eq!(component_group(c3, 2), ComponentGroup::Z2);
        assert_eq!(component_group(c3, 0), ComponentGroup::Trivial);
        assert_eq!(component_group(Family::Albert, 2), ComponentGroup::Trivial);
        assert_eq!(component_group(Family::Albert, 3), ComponentGroup::Z2);
    }

    #[test]
    fn labels() {
        let t = orbit_table(&case(Kind::B, 3, 1)).unwrap();
        assert_eq!(t[2].g_orbit.label.as_deref(), Some("(3,1^4)"));
        let t = orbit_table(&case(Kind::E, 6, 1)).unwrap();
        let l: Vec<_> = t.iter().map(|o| o.g_orbit.label.clone().unwrap()).collect();
        assert_eq!(l, ["1", "A1", "2A1"]);
        let t = orbit_table(&case(Kind::E, 7, 7)).unwrap();
        assert_eq!(t[3].g_orbit.weighted_dynkin, [0, 0, 0, 0, 0, 0, 2]);
    }

    #[test]
    fn partition_display() {
        assert_eq!(Partition::new(&[(2, 2), (1, 1)]).to_string(), "(2^2,1)");
        assert_eq!(Partition::new(&[(2, 0), (1, 4)]).to_string(), "(1^4)");
    }

    #[test]
    fn classical_wdd_oracle() {
        // Minimal orbit of sl3 and the regular orbit of sp4.
        assert_eq!(classical_weighted_dynkin(Kind::A, 2, &[2, 1]).unwrap(), [1, 1]);
        assert_eq!(classical_weighted_dynkin(Kind::C, 2, &[4]).unwrap(), [2, 2]);
        assert_eq!(classical_weighted_dynkin(Kind::B, 2, &[5]).unwrap(), [2, 2]);
        assert_eq!(classical_weighted_dynkin(Kind::D, 4, &[3, 1, 1, 1, 1, 1]).unwrap(), [2, 0, 0, 0]);
    }
}
