//! Chevalley basis of the simple Lie algebra attached to a root system.
//!
//! Structure constants N(α, β), defined by [X_α, X_β] = N(α, β) X_{α+β},
//! are fixed by declaring N = +(p+1) on extraspecial pairs and propagating
//! through the standard identities between triples and quadruples of roots.
//! [X_α, X_{−α}] = H_α is the coroot and [H, X_β] = ⟨H, β⟩ X_β.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{Coweight, RootId, RootSystem};

/// Ordering of positive roots used to pick extraspecial pairs. Ties in
/// height are broken by comparing coefficient vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignConvention {
    /// Descending coefficient vectors, so α₁ precedes α₂.
    HeightLex,
    /// Ascending coefficient vectors, so α₂ precedes α₁.
    HeightRevLex,
}

#[derive(Debug, Clone)]
pub struct ChevalleyBasis {
    rs: RootSystem,
    convention: SignConvention,
    /// Dense table over all root pairs; 0 where α + β is not a root.
    table: Vec<i64>,
    coroots: Vec<Coweight>,
}

/// Sparse element of g: a Cartan part plus root-vector coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AlgebraElement {
    pub cartan: Vec<i64>,
    pub roots: BTreeMap<RootId, i64>,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Self {
        AlgebraElement {
            cartan: vec![0; rank],
            roots: BTreeMap::new(),
        }
    }

    pub fn root_vector(rank: usize, beta: RootId) -> Self {
        let mut x = Self::zero(rank);
        x.roots.insert(beta, 1);
        x
    }

    pub fn from_cartan(h: &Coweight) -> Self {
        AlgebraElement {
            cartan: h.0.clone(),
            roots: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.iter().all(|&c| c == 0) && self.roots.is_empty()
    }

    pub fn cartan_part(&self) -> Coweight {
        Coweight(self.cartan.clone())
    }

    fn add_root(&mut self, beta: RootId, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.roots.entry(beta).or_insert(0);
        *e += c;
        if *e == 0 {
            self.roots.remove(&beta);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for (a, b) in out.cartan.iter_mut().zip(&other.cartan) {
            *a += b;
        }
        for (&beta, &c) in &other.roots {
            out.add_root(beta, c);
        }
        out
    }

    pub fn scaled(&self, k: i64) -> AlgebraElement {
        if k == 0 {
            return AlgebraElement::zero(self.cartan.len());
        }
        AlgebraElement {
            cartan: self.cartan.iter().map(|c| c * k).collect(),
            roots: self.roots.iter().map(|(&b, &c)| (b, c * k)).collect(),
        }
    }

    /// Whether every root in the support has the given λ-degree.
    pub fn is_homogeneous(&self, rs: &RootSystem, lam: &Coweight, degree: i64) -> bool {
        let cartan_ok = degree == 0 || self.cartan.iter().all(|&c| c == 0);
        cartan_ok && self.roots.keys().all(|&b| rs.pairing(lam, b) == degree)
    }
}

/// An sl₂-triple {e, h, f} with h kept in the Cartan subalgebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieTriple {
    pub e: AlgebraElement,
    pub h: Coweight,
    pub f: AlgebraElement,
}

impl LieTriple {
    /// [h,e] = 2e, [h,f] = −2f, [e,f] = h.
    pub fn satisfies_relations(&self, basis: &ChevalleyBasis) -> bool {
        let h = AlgebraElement::from_cartan(&self.h);
        basis.bracket(&h, &self.e) == self.e.scaled(2)
            && basis.bracket(&h, &self.f) == self.f.scaled(-2)
            && basis.bracket(&self.e, &self.f) == h
    }

    pub fn sum(&self, other: &LieTriple) -> LieTriple {
        LieTriple {
            e: self.e.add(&other.e),
            h: self.h.add(&other.h),
            f: self.f.add(&other.f),
        }
    }

    /// The nine brackets between components of two triples all vanish.
    pub fn commutes_with(&self, other: &LieTriple, basis: &ChevalleyBasis) -> bool {
        let mine = [self.e.clone(), AlgebraElement::from_cartan(&self.h), self.f.clone()];
        let theirs = [other.e.clone(), AlgebraElement::from_cartan(&other.h), other.f.clone()];
        mine.iter()
            .all(|x| theirs.iter().all(|y| basis.bracket(x, y).is_zero()))
    }
}

impl ChevalleyBasis {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        Self::build_with(rs, SignConvention::HeightLex)
    }

    pub fn build_with(rs: &RootSystem, convention: SignConvention) -> Result<Self> {
        let nroots = rs.num_roots();
        let npos = rs.num_positive();
        let mut order: Vec<RootId> = rs.positive_roots().collect();
        order.sort_by(|&a, &b| {
            rs.height(a).cmp(&rs.height(b)).then_with(|| match convention {
                SignConvention::HeightLex => rs.root(b).cmp(rs.root(a)),
                SignConvention::HeightRevLex => rs.root(a).cmp(rs.root(b)),
            })
        });
        let mut position = vec![0usize; npos];
        for (k, &r) in order.iter().enumerate() {
            position[r] = k;
        }

        let mut basis = ChevalleyBasis {
            rs: rs.clone(),
            convention,
            table: vec![0; nroots * nroots],
            coroots: rs.all_roots().map(|b| rs.coroot(b)).collect(),
        };

        // Special pairs (α, β) with α ≺ β, filled in order of increasing
        // height of α + β so every lookup below refers to a smaller sum.
        let mut by_height: Vec<RootId> = rs.positive_roots().collect();
        by_height.sort_by_key(|&x| (rs.height(x), position[x]));
        for xi in by_height {
            let mut pairs: Vec<(RootId, RootId)> = order
                .iter()
                .filter_map(|&a| {
                    let diff: Vec<i64> = rs.root(xi).iter().zip(rs.root(a)).map(|(x, y)| x - y).collect();
                    let b = rs.root_id(&diff)?;
                    (rs.is_positive(b) && position[a] < position[b]).then_some((a, b))
                })
                .collect();
            if pairs.is_empty() {
                continue;
            }
            pairs.sort_by_key(|&(a, _)| position[a]);
            let (a0, b0) = pairs[0];
            let n0 = basis.string_p(a0, b0) + 1;
            basis.set_pair(a0, b0, n0);
            let xi_len = Rational64::from_integer(rs.sq_len(xi));
            for &(a, b) in &pairs[1..] {
                let mut acc = Rational64::from_integer(0);
                let neg_a0 = rs.negate(a0);
                let neg_b0 = rs.negate(b0);
                if let Some(d) = rs.sum(b, neg_a0) {
                    let t = basis.lookup(b, neg_a0)? * basis.lookup(a, neg_b0)?;
                    acc += Rational64::new(t, rs.sq_len(d));
                }
                if let Some(d) = rs.sum(a, neg_a0) {
                    let t = basis.lookup(neg_a0, a)? * basis.lookup(b, neg_b0)?;
                    acc += Rational64::new(t, rs.sq_len(d));
                }
                let val = xi_len * acc / Rational64::from_integer(n0);
                if !val.is_integer() {
                    return Err(Error::Consistency(format!(
                        "non-integral structure constant {val} for roots {a},{b}"
                    )));
                }
                basis.set_pair(a, b, *val.numer());
            }
        }

        // Extend to all pairs of roots.
        for a in rs.all_roots() {
            for b in rs.all_roots() {
                if rs.sum(a, b).is_some() {
                    let v = basis.lookup(a, b)?;
                    basis.table[a * nroots + b] = v;
                }
            }
        }
        basis.check_magnitudes()?;
        Ok(basis)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    fn set_pair(&mut self, a: RootId, b: RootId, v: i64) {
        let n = self.rs.num_roots();
        self.table[a * n + b] = v;
        self.table[b * n + a] = -v;
    }

    /// Largest p with β − pα a root.
    fn string_p(&self, a: RootId, b: RootId) -> i64 {
        let rs = &self.rs;
        let mut p = 0;
        let mut cur: Vec<i64> = rs.root(b).to_vec();
        loop {
            for (c, x) in cur.iter_mut().zip(rs.root(a)) {
                *c -= x;
            }
            if rs.root_id(&cur).is_none() {
                return p;
            }
            p += 1;
        }
    }

    /// N(x, y) derived from the table of positive special pairs.
    fn lookup(&self, x: RootId, y: RootId) -> Result<i64> {
        let rs = &self.rs;
        let n = rs.num_roots();
        let Some(z) = rs.sum(x, y) else {
            return Ok(0);
        };
        let (px, py) = (rs.is_positive(x), rs.is_positive(y));
        if px && py {
            return Ok(self.table[x * n + y]);
        }
        if !px && !py {
            return Ok(-self.lookup(rs.negate(x), rs.negate(y))?);
        }
        // x + y + γ = 0 with γ = −z; rotate to a same-sign pair.
        let gamma = rs.negate(z);
        let zz = rs.sq_len(z);
        let (num, den) = if rs.is_positive(y) == rs.is_positive(gamma) {
            (zz * self.lookup(y, gamma)?, rs.sq_len(x))
        } else {
            (zz * self.lookup(gamma, x)?, rs.sq_len(y))
        };
        if num % den != 0 {
            return Err(Error::Consistency(format!("non-integral rotation for roots {x},{y}")));
        }
        Ok(num / den)
    }

    fn check_magnitudes(&self) -> Result<()> {
        for a in self.rs.all_roots() {
            for b in self.rs.all_roots() {
                if self.rs.sum(a, b).is_some() && self.n(a, b).abs() != self.string_p(a, b) + 1 {
                    return Err(Error::Consistency(format!(
                        "|N({a},{b})| = {} but the root string gives {}",
                        self.n(a, b).abs(),
                        self.string_p(a, b) + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// Structure constant N(α, β); 0 when α + β is not a root.
    pub fn n(&self, a: RootId, b: RootId) -> i64 {
        self.table[a * self.rs.num_roots() + b]
    }

    /// Flips the sign of a single structure constant pair (keeping
    /// antisymmetry). Only useful for exercising the Jacobi check.
    pub fn with_flipped_sign(&self, a: RootId, b: RootId) -> Self {
        let mut out = self.clone();
        let v = out.n(a, b);
        out.set_pair(a, b, -v);
        out
    }

    pub fn coroot(&self, beta: RootId) -> &Coweight {
        &self.coroots[beta]
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let rs = &self.rs;
        let rank = rs.rank();
        let mut out = AlgebraElement::zero(rank);
        for (&a, &ca) in &x.roots {
            for (&b, &cb) in &y.roots {
                if b == rs.negate(a) {
                    for (slot, h) in out.cartan.iter_mut().zip(&self.coroots[a].0) {
                        *slot += ca * cb * h;
                    }
                } else if let Some(s) = rs.sum(a, b) {
                    out.add_root(s, ca * cb * self.n(a, b));
                }
            }
        }
        let hx = Coweight(x.cartan.clone());
        let hy = Coweight(y.cartan.clone());
        for (&b, &cb) in &y.roots {
            out.add_root(b, rs.pairing(&hx, b) * cb);
        }
        for (&a, &ca) in &x.roots {
            out.add_root(a, -rs.pairing(&hy, a) * ca);
        }
        out
    }

    /// Dimension of g: rank plus number of roots.
    pub fn dim(&self) -> usize {
        self.rs.rank() + self.rs.num_roots()
    }

    /// Bracket of two basis vectors as a sparse list of (basis index,
    /// coefficient). Indices below the rank are fundamental coweights;
    /// index `rank + β` is X_β.
    fn basis_bracket(&self, u: usize, v: usize, out: &mut Vec<(usize, i64)>) {
        out.clear();
        let rank = self.rs.rank();
        match (u < rank, v < rank) {
            (true, true) => {}
            (true, false) => {
                let c = self.rs.root(v - rank)[u];
                if c != 0 {
                    out.push((v, c));
                }
            }
            (false, true) => {
                let c = self.rs.root(u - rank)[v];
                if c != 0 {
                    out.push((u, -c));
                }
            }
            (false, false) => {
                let (a, b) = (u - rank, v - rank);
                if b == self.rs.negate(a) {
                    out.extend(
                        self.coroots[a]
                            .0
                            .iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(j, &c)| (j, c)),
                    );
                } else {
                    let c = self.n(a, b);
                    if c != 0 {
                        let s = self.rs.sum(a, b).expect("nonzero constant implies root sum");
                        out.push((rank + s, c));
                    }
                }
            }
        }
    }

    /// Checks the Jacobi identity on every triple of distinct basis vectors
    /// and antisymmetry of the table. Returns the number of failing triples.
    pub fn jacobi_failures(&self) -> usize {
        let dim = self.dim();
        let nr = self.rs.num_roots();
        let mut failures = 0;
        for a in 0..nr {
            for b in 0..nr {
                if self.n(a, b) != -self.n(b, a) {
                    failures += 1;
                }
            }
        }
        let mut acc = vec![0i64; dim];
        let mut touched: Vec<usize> = Vec::new();
        let mut inner = Vec::new();
        let mut outer = Vec::new();
        let mut jacobiator = |x: usize, y: usize, z: usize, acc: &mut Vec<i64>, touched: &mut Vec<usize>| {
            // [x, [y, z]]
            self.basis_bracket(y, z, &mut inner);
            let pieces = inner.clone();
            for (w, c) in pieces {
                self.basis_bracket(x, w, &mut outer);
                for &(t, d) in &outer {
                    if acc[t] == 0 {
                        touched.push(t);
                    }
                    acc[t] += c * d;
                }
            }
        };
        for x in 0..dim {
            for y in x + 1..dim {
                for z in y + 1..dim {
                    jacobiator(x, y, z, &mut acc, &mut touched);
                    jacobiator(y, z, x, &mut acc, &mut touched);
                    jacobiator(z, x, y, &mut acc, &mut touched);
                    let mut bad = false;
                    for &t in &touched {
                        if acc[t] != 0 {
                            bad = true;
                        }
                        acc[t] = 0;
                    }
                    touched.clear();
                    if bad {
                        failures += 1;
                    }
                }
            }
        }
        failures
    }

    /// e = Σ X_γ, h = Σ γ^∨, f = Σ X_{−γ} over a set of pairwise strongly
    /// orthogonal positive long roots.
    pub fn adapted_triple(&self, roots: &[RootId]) -> Result<LieTriple> {
        let rs = &self.rs;
        for (k, &a) in roots.iter().enumerate() {
            if !rs.is_positive(a) || !rs.is_long(a) {
                return Err(Error::Precondition(format!("root {a} is not a positive long root")));
            }
            for &b in &roots[k + 1..] {
                if !rs.strongly_orthogonal(a, b) {
                    return Err(Error::Precondition(format!(
                        "roots {a} and {b} are not strongly orthogonal"
                    )));
                }
            }
        }
        let rank = rs.rank();
        let mut e = AlgebraElement::zero(rank);
        let mut f = AlgebraElement::zero(rank);
        let mut h = Coweight::zero(rank);
        for &g in roots {
            e.add_root(g, 1);
            f.add_root(rs.negate(g), 1);
            h = h.add(&self.coroots[g]);
        }
        Ok(LieTriple { e, h, f })
    }

    /// Dimension of the orbit of `x ∈ g₁` under the Levi subgroup of the
    /// grading by `lam`: the rank of m → g₁, m ↦ [m, x].
    pub fn orbit_dimension_tangent(&self, x: &AlgebraElement, lam: &Coweight) -> Result<usize> {
        let rs = &self.rs;
        if !x.is_homogeneous(rs, lam, 1) {
            return Err(Error::Precondition("element is not supported in degree 1".into()));
        }
        let targets: Vec<RootId> = rs.all_roots().filter(|&b| rs.pairing(lam, b) == 1).collect();
        let column: BTreeMap<RootId, usize> = targets.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let rank = rs.rank();
        let mut generators: Vec<AlgebraElement> =
            (1..=rank).map(|i| AlgebraElement::from_cartan(&Coweight::fundamental(rank, i))).collect();
        generators.extend(
            rs.all_roots()
                .filter(|&b| rs.pairing(lam, b) == 0)
                .map(|b| AlgebraElement::root_vector(rank, b)),
        );
        let rows: Vec<Vec<i64>> = generators
            .iter()
            .map(|m| {
                let img = self.bracket(m, x);
                let mut row = vec![0; targets.len()];
                for (b, c) in img.roots {
                    row[column[&b]] = c;
                }
                row
            })
            .collect();
        Ok(linalg::rank(&rows))
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignConvention::HeightLex => f.write_str("height-lex"),
            SignConvention::HeightRevLex => f.write_str("height-revlex"),
        }
    }
}
