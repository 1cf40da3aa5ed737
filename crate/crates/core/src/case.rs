//! Everything the orbit, Arthur and microlocal stages share for one
//! abelian case.

use crate::chevalley::{ChevalleyBasis, SignConvention};
use crate::error::{Error, Result};
use crate::orbits::{canonical_string, CanonicalString};
use crate::parabolic::{Family, ParabolicDatum};
use crate::rootsys::{Kind, RootSystem};

#[derive(Debug, Clone)]
pub struct AbelianCase {
    pub datum: ParabolicDatum,
    pub basis: ChevalleyBasis,
    pub family: Family,
    pub string: CanonicalString,
}

impl AbelianCase {
    pub fn new(kind: Kind, rank: usize, node: usize) -> Result<Self> {
        Self::with_convention(kind, rank, node, SignConvention::HeightLex)
    }

    pub fn with_convention(kind: Kind, rank: usize, node: usize, convention: SignConvention) -> Result<Self> {
        let rs = RootSystem::build(kind, rank)?;
        let datum = ParabolicDatum::from_node(&rs, node)?;
        datum.require_abelian()?;
        let family = datum.family().ok_or_else(|| {
            Error::Consistency(format!(
                "{} node {node} has abelian radical but is missing from the classification table",
                rs.name()
            ))
        })?;
        let basis = ChevalleyBasis::build_with(&rs, convention)?;
        let string = canonical_string(&datum)?;
        Ok(AbelianCase {
            datum,
            basis,
            family,
            string,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.datum.root_system()
    }

    /// Number of nonzero orbits; the orbits are indexed 0..=r.
    pub fn r(&self) -> usize {
        self.string.roots.len()
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i > self.r() {
            return Err(Error::Precondition(format!("orbit index {i} exceeds r = {}", self.r())));
        }
        Ok(())
    }
}

/// Every (type, rank, node) with abelian radical up to the given rank.
pub fn abelian_grid(max_rank: usize) -> Vec<(Kind, usize, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for l in 1..=n {
            out.push((Kind::A, n, l));
        }
    }
    for n in 2..=max_rank {
        out.push((Kind::B, n, 1));
    }
    for n in 2..=max_rank {
        out.push((Kind::C, n, n));
    }
    for n in 4..=max_rank {
        out.extend([(Kind::D, n, 1), (Kind::D, n, n - 1), (Kind::D, n, n)]);
    }
    if max_rank >= 6 {
        out.extend([(Kind::E, 6, 1), (Kind::E, 6, 6)]);
    }
    if max_rank >= 7 {
        out.push((Kind::E, 7, 7));
    }
    out
}
