//! Weyl group computations that never enumerate the group itself.
//!
//! Elements are handled as words in simple reflections and act on root
//! coefficient vectors or coweights. Double cosets W_J \ W / W_J are counted
//! as W_J-orbits on the W-orbit of a coweight whose stabilizer is W_J.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Coweight, RootSystem};

/// Default cap on the size of a Weyl orbit explored by breadth-first search.
pub const DEFAULT_ORBIT_BOUND: usize = 100_000;

/// A word `[i1, .., ik]` (0-based simple indices) for the element
/// s_{i1} ⋯ s_{ik}; the rightmost letter acts first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    /// Word from 1-based letters, the way they are written by hand.
    pub fn from_nodes(nodes: &[usize]) -> Self {
        WeylWord(nodes.iter().map(|n| n - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// Product `self · other`.
    pub fn then(&self, other: &WeylWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        WeylWord(v)
    }

    pub fn act_on_root(&self, r: &RootSystem, beta: &[i64]) -> Vec<i64> {
        let mut v = beta.to_vec();
        for &i in self.0.iter().rev() {
            r.simple_reflect_root(i, &mut v);
        }
        v
    }

    pub fn act_on_coweight(&self, r: &RootSystem, w: &Coweight) -> Coweight {
        let mut v = w.clone();
        for &i in self.0.iter().rev() {
            r.simple_reflect_coweight(i, &mut v);
        }
        v
    }

    /// 1-based rendering such as `s7s6s5`.
    pub fn to_nodes_string(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0.iter().map(|i| format!("s{}", i + 1)).collect()
    }
}

/// Returns the dominant coweight in the orbit of `v` together with a word
/// `w` such that `w · v` is that coweight.
pub fn dominant_representative(r: &RootSystem, v: &Coweight) -> (Coweight, WeylWord) {
    let mut cur = v.clone();
    let mut applied = Vec::new();
    while let Some(i) = cur.0.iter().position(|&c| c < 0) {
        r.simple_reflect_coweight(i, &mut cur);
        applied.push(i);
    }
    applied.reverse();
    (cur, WeylWord(applied))
}

/// Whether w₀ · λ = −λ, tested as: the dominant representative of −λ is λ.
pub fn w0_negates(r: &RootSystem, lam: &Coweight) -> bool {
    let (dom, _) = dominant_representative(r, lam);
    let (neg_dom, _) = dominant_representative(r, &lam.neg());
    neg_dom == dom
}

/// Length of the longest element of W_J, i.e. |Φ_J⁺|. `subset` holds
/// 0-based simple indices.
pub fn parabolic_longest_length(r: &RootSystem, subset: &[usize]) -> usize {
    r.positive_roots()
        .filter(|&b| {
            r.root(b)
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || subset.contains(&i))
        })
        .count()
}

/// Reduced word for the longest element of W_J, obtained by driving a
/// J-regular coweight to its J-antidominant image.
pub fn longest_word(r: &RootSystem, subset: &[usize]) -> WeylWord {
    let mut v = Coweight(
        (0..r.rank())
            .map(|i| i64::from(subset.contains(&i)))
            .collect(),
    );
    let mut applied = Vec::new();
    while let Some(&i) = subset.iter().find(|&&i| v.0[i] > 0) {
        r.simple_reflect_coweight(i, &mut v);
        applied.push(i);
    }
    applied.reverse();
    WeylWord(applied)
}

/// Number of positive roots sent to negative roots by the word.
pub fn inversion_length(r: &RootSystem, word: &WeylWord) -> usize {
    r.positive_roots()
        .filter(|&b| word.act_on_root(r, r.root(b)).iter().any(|&c| c < 0))
        .count()
}

/// W-orbit of `lam` by breadth-first search over simple reflections.
pub fn weyl_orbit(r: &RootSystem, lam: &Coweight, bound: usize) -> Result<Vec<Coweight>> {
    let mut seen: HashMap<Coweight, usize> = HashMap::new();
    let mut order = vec![lam.clone()];
    seen.insert(lam.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for i in 0..r.rank() {
            if order[k].0[i] == 0 {
                continue;
            }
            let mut img = order[k].clone();
            r.simple_reflect_coweight(i, &mut img);
            if !seen.contains_key(&img) {
                if order.len() >= bound {
                    return Err(Error::OrbitOverflow(bound));
                }
                seen.insert(img.clone(), order.len());
                order.push(img);
                queue.push_back(order.len() - 1);
            }
        }
    }
    Ok(order)
}

/// Partition of the W-orbit of `lam` into W_J-orbits (`subset` 0-based).
pub fn subgroup_orbits(
    r: &RootSystem,
    subset: &[usize],
    lam: &Coweight,
    bound: usize,
) -> Result<Vec<Vec<Coweight>>> {
    let orbit = weyl_orbit(r, lam, bound)?;
    let pos: HashMap<&Coweight, usize> = orbit.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let mut comp = vec![usize::MAX; orbit.len()];
    let mut classes = Vec::new();
    for start in 0..orbit.len() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        comp[start] = id;
        let mut members = vec![orbit[start].clone()];
        let mut stack = vec![start];
        while let Some(k) = stack.pop() {
            for &j in subset {
                let mut img = orbit[k].clone();
                r.simple_reflect_coweight(j, &mut img);
                let t = pos[&img];
                if comp[t] == usize::MAX {
                    comp[t] = id;
                    members.push(img);
                    stack.push(t);
                }
            }
        }
        classes.push(members);
    }
    Ok(classes)
}

/// Number of (W_J, W_J) double cosets, where J is the set of simple roots
/// orthogonal to `lam`.
pub fn double_coset_count(r: &RootSystem, subset: &[usize], lam: &Coweight) -> Result<usize> {
    let expected: Vec<usize> = (0..r.rank()).filter(|&i| lam.0[i] == 0).collect();
    let mut given = subset.to_vec();
    given.sort_unstable();
    if given != expected || !lam.is_dominant() {
        return Err(Error::Precondition(
            "double cosets need a dominant coweight whose stabilizer is W_J".into(),
        ));
    }
    Ok(subgroup_orbits(r, subset, lam, DEFAULT_ORBIT_BOUND)?.len())
}

/// Length of the minimal-length element u with u·λ = μ (λ dominant), namely
/// the number of positive roots pairing negatively with μ.
pub fn min_coset_length(r: &RootSystem, mu: &Coweight) -> usize {
    r.positive_roots().filter(|&b| r.pairing(mu, b) < 0).count()
}

/// Simple roots of J that lie in w(J), as 0-based indices.
pub fn intersect_with_image(r: &RootSystem, subset: &[usize], word: &WeylWord) -> Vec<usize> {
    let image: Vec<Vec<i64>> = subset
        .iter()
        .map(|&j| {
            let mut e = vec![0; r.rank()];
            e[j] = 1;
            word.act_on_root(r, &e)
        })
        .collect();
    subset
        .iter()
        .copied()
        .filter(|&k| {
            image
                .iter()
                .any(|v| v.iter().enumerate().all(|(i, &c)| c == i64::from(i == k)))
        })
        .collect()
}

/// Both routes to ℓ(w′) for w′ = w_J⁰ w_K⁰ with K = J ∩ w(J).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeLength {
    /// K as 1-based nodes.
    pub k_nodes: Vec<usize>,
    /// ℓ(w_J⁰) − ℓ(w_K⁰).
    pub by_difference: usize,
    /// Inversion count of the concatenated word for w_J⁰ w_K⁰.
    pub by_inversions: usize,
}

pub fn prime_length(r: &RootSystem, subset: &[usize], word: &WeylWord) -> PrimeLength {
    let k = intersect_with_image(r, subset, word);
    let by_difference = parabolic_longest_length(r, subset) - parabolic_longest_length(r, &k);
    let w_prime = longest_word(r, subset).then(&longest_word(r, &k));
    PrimeLength {
        k_nodes: k.iter().map(|i| i + 1).collect(),
        by_difference,
        by_inversions: inversion_length(r, &w_prime),
    }
}

/// Whether `word` is the minimal-length element of its (W_J, W_J) double
/// coset: neither w nor w⁻¹ sends a simple root of J to a negative root.
pub fn is_minimal_double_coset_rep(r: &RootSystem, subset: &[usize], word: &WeylWord) -> bool {
    let inv = word.inverse();
    subset.iter().all(|&j| {
        let mut e = vec![0; r.rank()];
        e[j] = 1;
        word.act_on_root(r, &e).iter().all(|&c| c >= 0)
            && inv.act_on_root(r, &e).iter().all(|&c| c >= 0)
    })
}
