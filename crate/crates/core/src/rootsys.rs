//! Irreducible root systems of types A, B, C, D, E₆ and E₇ in exact integer
//! coordinates.
//!
//! Roots are stored by their coefficients over the simple roots, and
//! coweights by their coefficients over the fundamental coweights, so the
//! pairing ⟨ω, β⟩ is a plain dot product. Simple roots use Bourbaki numbering;
//! public node numbers are 1-based, internal indices 0-based.

use std::cmp::Reverse;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank accepted by [`RootSystem::build`].
pub const MAX_RANK: usize = 12;

/// Identifier of a root: positive roots are `0..num_positive()`, and the
/// negative of positive root `k` is `k + num_positive()`.
pub type RootId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
            Kind::D => "D",
            Kind::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Kind::A),
            "B" => Ok(Kind::B),
            "C" => Ok(Kind::C),
            "D" => Ok(Kind::D),
            "E" => Ok(Kind::E),
            other => Err(Error::InvalidInput(format!("unknown root system type '{other}'"))),
        }
    }
}

/// Element of the Cartan subalgebra in fundamental-coweight coordinates:
/// coordinate `j` is the pairing with simple root `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    /// Fundamental coweight for a 1-based node.
    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut c = vec![0; rank];
        c[node - 1] = 1;
        Coweight(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Coweight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Coweight) -> Self {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Self {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        self.scaled(-1)
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    kind: Kind,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Invariant form on simple roots, normalized so the shortest roots have
    /// squared length 1 (types B) or 2 (all other types).
    gram: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    num_positive: usize,
    index: HashMap<Vec<i64>, RootId>,
}

impl RootSystem {
    /// Builds the root system of `kind` with the given rank. Positive roots
    /// are generated by closing the simple roots under simple reflections,
    /// ordered by height and then by descending coefficient vector.
    pub fn build(kind: Kind, rank: usize) -> Result<Self> {
        let unsupported = |reason: &str| Error::UnsupportedType {
            kind: kind.to_string(),
            rank,
            reason: reason.to_string(),
        };
        if rank > MAX_RANK {
            return Err(unsupported("rank exceeds the configured maximum"));
        }
        let (cartan, sq_len) = match kind {
            Kind::A if rank >= 1 => chain_cartan(rank, None),
            Kind::B if rank >= 2 => chain_cartan(rank, Some(Kind::B)),
            Kind::C if rank >= 2 => chain_cartan(rank, Some(Kind::C)),
            Kind::D if rank >= 4 => d_cartan(rank),
            Kind::E if rank == 6 || rank == 7 => e_cartan(rank),
            Kind::A => return Err(unsupported("type A needs rank >= 1")),
            Kind::B | Kind::C => return Err(unsupported("types B and C need rank >= 2")),
            Kind::D => return Err(unsupported("type D needs rank >= 4")),
            Kind::E => return Err(unsupported("only E6 and E7 are supported")),
        };
        let gram: Vec<Vec<i64>> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[i][j] * sq_len[i] / 2).collect())
            .collect();

        let mut positive: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut v = vec![0; rank];
            v[i] = 1;
            seen.insert(v.clone(), ());
            queue.push_back(v);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..rank {
                let mut img = beta.clone();
                simple_reflect_root_with(&cartan, i, &mut img);
                if img.iter().all(|&c| c >= 0) && !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push_back(img);
                }
            }
            positive.push(beta);
        }
        positive.sort_by_key(|b| (b.iter().sum::<i64>(), Reverse(b.clone())));

        let expected = match kind {
            Kind::A => rank * (rank + 1) / 2,
            Kind::B | Kind::C => rank * rank,
            Kind::D => rank * (rank - 1),
            Kind::E if rank == 6 => 36,
            Kind::E => 63,
        };
        if positive.len() != expected {
            return Err(Error::Consistency(format!(
                "{kind}{rank}: generated {} positive roots, expected {expected}",
                positive.len()
            )));
        }

        let num_positive = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|b| b.iter().map(|c| -c).collect::<Vec<_>>()));
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        Ok(RootSystem {
            kind,
            rank,
            cartan,
            gram,
            roots,
            num_positive,
            index,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    /// Cartan matrix with entries ⟨α_i^∨, α_j⟩.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = RootId> {
        0..self.num_positive
    }

    pub fn all_roots(&self) -> impl Iterator<Item = RootId> {
        0..self.roots.len()
    }

    /// Coefficients of a root over the simple roots.
    pub fn root(&self, id: RootId) -> &[i64] {
        &self.roots[id]
    }

    pub fn root_id(&self, coeffs: &[i64]) -> Option<RootId> {
        self.index.get(coeffs).copied()
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        id < self.num_positive
    }

    pub fn negate(&self, id: RootId) -> RootId {
        if id < self.num_positive {
            id + self.num_positive
        } else {
            id - self.num_positive
        }
    }

    /// Simple root for a 0-based index.
    pub fn simple_root(&self, i: usize) -> RootId {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        self.index[&v]
    }

    pub fn height(&self, id: RootId) -> i64 {
        self.roots[id].iter().sum()
    }

    /// The unique positive root that is maximal in the coefficientwise order.
    pub fn highest_root(&self) -> RootId {
        self.num_positive - 1
    }

    /// Id of `a + b` if it is a root.
    pub fn sum(&self, a: RootId, b: RootId) -> Option<RootId> {
        let v: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.root_id(&v)
    }

    /// Invariant form on coefficient vectors.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn inner(&self, a: RootId, b: RootId) -> i64 {
        self.form(&self.roots[a], &self.roots[b])
    }

    pub fn sq_len(&self, id: RootId) -> i64 {
        self.inner(id, id)
    }

    pub fn max_sq_len(&self) -> i64 {
        self.positive_roots().map(|b| self.sq_len(b)).max().unwrap_or(0)
    }

    pub fn is_long(&self, id: RootId) -> bool {
        self.sq_len(id) == self.max_sq_len()
    }

    /// ⟨ω, β⟩ for a coweight in fundamental-coweight coordinates.
    pub fn pairing(&self, w: &Coweight, beta: RootId) -> i64 {
        w.0.iter().zip(&self.roots[beta]).map(|(c, b)| c * b).sum()
    }

    /// Coroot β^∨ = 2β/(β,β) as a coweight.
    pub fn coroot(&self, beta: RootId) -> Coweight {
        let b = &self.roots[beta];
        let len = self.form(b, b);
        Coweight(
            (0..self.rank)
                .map(|j| {
                    let ip: i64 = (0..self.rank).map(|i| b[i] * self.gram[i][j]).sum();
                    debug_assert_eq!((2 * ip) % len, 0);
                    2 * ip / len
                })
                .collect(),
        )
    }

    /// s_β(v) = v − ⟨v, β⟩ β^∨.
    pub fn reflect(&self, beta: RootId, v: &Coweight) -> Coweight {
        let p = self.pairing(v, beta);
        if p == 0 {
            return v.clone();
        }
        v.sub(&self.coroot(beta).scaled(p))
    }

    /// Applies the simple reflection s_i (0-based) to a coefficient vector.
    pub fn simple_reflect_root(&self, i: usize, beta: &mut [i64]) {
        simple_reflect_root_with(&self.cartan, i, beta);
    }

    /// Applies s_i (0-based) to a coweight: v − v_i α_i^∨.
    pub fn simple_reflect_coweight(&self, i: usize, v: &mut Coweight) {
        let c = v.0[i];
        if c != 0 {
            for j in 0..self.rank {
                v.0[j] -= c * self.cartan[i][j];
            }
        }
    }

    /// Strongly orthogonal: neither a + b nor a − b is a root or zero.
    pub fn strongly_orthogonal(&self, a: RootId, b: RootId) -> bool {
        if a == b || a == self.negate(b) {
            return false;
        }
        self.sum(a, b).is_none() && self.sum(a, self.negate(b)).is_none()
    }

    /// Bourbaki ε-coordinates of a coefficient vector.
    pub fn epsilon_coords(&self, coeffs: &[i64]) -> EpsilonVector {
        let basis = self.epsilon_basis();
        let dim = basis[0].len();
        let mut doubled = vec![0; dim];
        for (c, row) in coeffs.iter().zip(&basis) {
            for k in 0..dim {
                doubled[k] += c * row[k];
            }
        }
        EpsilonVector { doubled }
    }

    /// Simple roots in ε-coordinates, doubled so that E-type half-integers
    /// stay integral.
    fn epsilon_basis(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let unit = |dim: usize, k: usize, s: i64| {
            let mut v = vec![0; dim];
            v[k] = 2 * s;
            v
        };
        let diff = |dim: usize, a: usize, b: usize| {
            let mut v = vec![0; dim];
            v[a] += 2;
            v[b] -= 2;
            v
        };
        match self.kind {
            Kind::A => (0..n).map(|i| diff(n + 1, i, i + 1)).collect(),
            Kind::B | Kind::C | Kind::D => {
                let mut rows: Vec<Vec<i64>> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
                rows.push(match self.kind {
                    Kind::B => unit(n, n - 1, 1),
                    Kind::C => unit(n, n - 1, 2),
                    _ => {
                        let mut v = vec![0; n];
                        v[n - 2] = 2;
                        v[n - 1] = 2;
                        v
                    }
                });
                rows
            }
            Kind::E => {
                let mut rows = Vec::with_capacity(n);
                rows.push(vec![1, -1, -1, -1, -1, -1, -1, 1]);
                let mut a2 = vec![0; 8];
                a2[0] = 2;
                a2[1] = 2;
                rows.push(a2);
                for k in 2..n {
                    rows.push(diff(8, k - 1, k - 2));
                }
                rows
            }
        }
    }
}

fn simple_reflect_root_with(cartan: &[Vec<i64>], i: usize, beta: &mut [i64]) {
    let p: i64 = cartan[i].iter().zip(beta.iter()).map(|(a, b)| a * b).sum();
    beta[i] -= p;
}

/// Cartan matrix and squared lengths for the linear diagrams A, B, C.
fn chain_cartan(rank: usize, double: Option<Kind>) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut a = vec![vec![0; rank]; rank];
    for i in 0..rank {
        a[i][i] = 2;
        if i + 1 < rank {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    let mut sq = vec![2; rank];
    match double {
        Some(Kind::B) => {
            a[rank - 1][rank - 2] = -2;
            sq[rank - 1] = 1;
        }
        Some(Kind::C) => {
            a[rank - 2][rank - 1] = -2;
            sq[rank - 1] = 4;
        }
        _ => {}
    }
    (a, sq)
}

fn from_edges(rank: usize, edges: &[(usize, usize)]) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut a = vec![vec![0; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(i, j) in edges {
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    }
    (a, vec![2; rank])
}

fn d_cartan(rank: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut edges: Vec<(usize, usize)> = (1..rank - 1).map(|i| (i, i + 1)).collect();
    edges.push((rank - 2, rank));
    from_edges(rank, &edges)
}

fn e_cartan(rank: usize) -> (Vec<Vec<i64>>, Vec<i64>) {
    let mut edges = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
    if rank == 7 {
        edges.push((6, 7));
    }
    from_edges(rank, &edges)
}

/// A vector in Bourbaki ε-coordinates, stored doubled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonVector {
    pub doubled: Vec<i64>,
}

impl fmt::Display for EpsilonVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled.iter().any(|c| c % 2 != 0) {
            write!(f, "1/2(")?;
            for (k, c) in self.doubled.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            return write!(f, ")");
        }
        let mut first = true;
        for (k, &c) in self.doubled.iter().enumerate() {
            let c = c / 2;
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}e{}", k + 1)?;
            } else {
                write!(f, "{sign}{mag}e{}", k + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        assert_eq!(RootSystem::build(Kind::A, 3).unwrap().num_positive(), 6);
        assert_eq!(RootSystem::build(Kind::B, 4).unwrap().num_positive(), 16);
        assert_eq!(RootSystem::build(Kind::C, 5).unwrap().num_positive(), 25);
        assert_eq!(RootSystem::build(Kind::D, 6).unwrap().num_positive(), 30);
        assert_eq!(RootSystem::build(Kind::E, 6).unwrap().num_positive(), 36);
        assert_eq!(RootSystem::build(Kind::E, 7).unwrap().num_positive(), 63);
    }

    #[test]
    fn unsupported_types_rejected() {
        for (k, r) in [(Kind::E, 8), (Kind::D, 3), (Kind::B, 1), (Kind::A, 0), (Kind::A, 40)] {
            let err = RootSystem::build(k, r).unwrap_err();
            assert_eq!(err.code(), 2, "{k}{r}");
        }
    }

    /// Brute-force maximum over all positive roots in the coefficientwise order.
    fn brute_force_max(r: &RootSystem) -> Vec<RootId> {
        r.positive_roots()
            .filter(|&a| {
                r.positive_roots()
                    .all(|b| r.root(a).iter().zip(r.root(b)).all(|(x, y)| x >= y))
            })
            .collect()
    }

    #[test]
    fn highest_root_is_unique_coefficientwise_max() {
        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        assert_eq!(c3.root(c3.highest_root()), &[2, 2, 1]);
        for (k, n) in [(Kind::A, 5), (Kind::B, 4), (Kind::C, 4), (Kind::D, 5), (Kind::E, 6), (Kind::E, 7)] {
            let r = RootSystem::build(k, n).unwrap();
            assert_eq!(brute_force_max(&r), vec![r.highest_root()], "{k}{n}");
        }
        let e7 = RootSystem::build(Kind::E, 7).unwrap();
        assert_eq!(e7.root(e7.highest_root()), &[2, 2, 3, 4, 3, 2, 1]);
    }

    #[test]
    fn pairing_examples() {
        let a4 = RootSystem::build(Kind::A, 4).unwrap();
        let lam = Coweight::fundamental(4, 2);
        assert_eq!(a4.pairing(&lam, a4.highest_root()), 1);
        let c4 = RootSystem::build(Kind::C, 4).unwrap();
        assert_eq!(c4.pairing(&Coweight::fundamental(4, 4), c4.highest_root()), 1);
        assert_eq!(c4.pairing(&Coweight::zero(4), 3), 0);
    }

    #[test]
    fn closed_under_simple_reflections() {
        for (k, n) in [(Kind::B, 5), (Kind::C, 3), (Kind::E, 7)] {
            let r = RootSystem::build(k, n).unwrap();
            for b in r.all_roots() {
                for i in 0..n {
                    let mut v = r.root(b).to_vec();
                    r.simple_reflect_root(i, &mut v);
                    assert!(r.root_id(&v).is_some());
                }
            }
        }
    }

    #[test]
    fn coroot_pairs_to_two() {
        for (k, n) in [(Kind::A, 4), (Kind::B, 4), (Kind::C, 4), (Kind::D, 5), (Kind::E, 6)] {
            let r = RootSystem::build(k, n).unwrap();
            for b in r.all_roots() {
                assert_eq!(r.pairing(&r.coroot(b), b), 2);
                let cv = r.coroot(b);
                assert_eq!(r.reflect(b, &cv), cv.neg());
            }
        }
    }

    #[test]
    fn c_type_coroot_matches_cartan_solve() {
        // Coroot of 2e_i in C_n is e_i; solving ⟨x, α_j⟩ against the simple
        // roots e_j - e_{j+1}, 2e_n gives x = (0,..,1,-1,..,0) pattern with
        // last entry 1 when i = n.
        let n = 4;
        let c = RootSystem::build(Kind::C, n).unwrap();
        for i in 0..n {
            let mut eps = vec![0i64; n];
            eps[i] = 1;
            // coordinates ⟨e_i, α_j⟩ with α_j = e_j - e_{j+1}, α_n = 2e_n.
            let expected: Vec<i64> = (0..n)
                .map(|j| if j + 1 < n { eps[j] - eps[j + 1] } else { 2 * eps[n - 1] })
                .collect();
            let mut coeffs = vec![0i64; n];
            for (j, slot) in coeffs.iter_mut().enumerate().skip(i) {
                *slot = if j + 1 < n { 2 } else { 1 };
            }
            let id = c.root_id(&coeffs).expect("2e_i is a root");
            assert_eq!(c.coroot(id).0, expected);
        }
    }

    #[test]
    fn epsilon_rendering() {
        let e7 = RootSystem::build(Kind::E, 7).unwrap();
        assert_eq!(e7.epsilon_coords(e7.root(e7.highest_root())).to_string(), "-e7+e8");
        let e6 = RootSystem::build(Kind::E, 6).unwrap();
        assert_eq!(
            e6.epsilon_coords(e6.root(e6.highest_root())).to_string(),
            "1/2(1,1,1,1,1,-1,-1,1)"
        );
        let c3 = RootSystem::build(Kind::C, 3).unwrap();
        assert_eq!(c3.epsilon_coords(c3.root(c3.highest_root())).to_string(), "2e1");
    }
}
