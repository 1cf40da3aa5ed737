//! Arthur pairs (O_i, O_i^∨) certified by commuting adapted triples, and the
//! resulting unitarity verdict.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::case::AbelianCase;
use crate::chevalley::LieTriple;
use crate::error::Result;
use crate::parabolic::Family;
use crate::rootsys::Coweight;
use crate::weyl;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArthurCertificate {
    pub index: usize,
    /// Triple through x_i = X_{γ₁} + ⋯ + X_{γ_i}.
    pub triple_1: LieTriple,
    /// Triple through x_{r−i}^∨ = X_{γ_{i+1}} + ⋯ + X_{γ_r}.
    pub triple_2: LieTriple,
    pub h_sum: Coweight,
    pub h_sum_equals_2lambda: bool,
    pub cross_brackets_zero: bool,
    /// Relations of the summed triple, checked only for valid certificates.
    pub sum_is_triple: Option<bool>,
}

impl ArthurCertificate {
    pub fn is_valid(&self) -> bool {
        self.h_sum_equals_2lambda && self.cross_brackets_zero
    }
}

pub fn arthur_pair_check(case: &AbelianCase, i: usize) -> Result<ArthurCertificate> {
    case.check_index(i)?;
    let (left, right) = case.string.roots.split_at(i);
    let triple_1 = case.basis.adapted_triple(left)?;
    let triple_2 = case.basis.adapted_triple(right)?;
    let h_sum = triple_1.h.add(&triple_2.h);
    let h_sum_equals_2lambda = h_sum == case.datum.lambda().scaled(2);
    let cross_brackets_zero = triple_1.commutes_with(&triple_2, &case.basis);
    let sum_is_triple = (h_sum_equals_2lambda && cross_brackets_zero)
        .then(|| triple_1.sum(&triple_2).satisfies_relations(&case.basis));
    Ok(ArthurCertificate {
        index: i,
        triple_1,
        triple_2,
        h_sum,
        h_sum_equals_2lambda,
        cross_brackets_zero,
        sum_is_triple,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    NoHermitianRepresentations,
    AllUnitary,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::NoHermitianRepresentations => f.write_str("no-hermitian-representations"),
            Verdict::AllUnitary => f.write_str("all-unitary"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitarityReport {
    pub w0_negates_lambda: bool,
    pub certificates_valid: Vec<bool>,
    pub verdict: Verdict,
    /// Weighted Dynkin diagram of 2λ, recorded when 2λ is a middle element.
    pub two_lambda_weighted_dynkin: Option<Vec<i64>>,
    pub two_lambda_even: Option<bool>,
    pub residual_note: Option<String>,
}

impl UnitarityReport {
    /// Either every pair is an Arthur pair or none is, and that matches
    /// w₀λ = −λ.
    pub fn is_consistent(&self) -> bool {
        self.certificates_valid.iter().all(|&v| v == self.w0_negates_lambda)
            && (self.verdict == Verdict::AllUnitary) == self.w0_negates_lambda
            && self.two_lambda_even.unwrap_or(true)
    }
}

/// Langlands-quotient descriptions for the two unitary families where w₀ is
/// not central. Rendered as documentation only.
pub fn residual_note(family: Family) -> Option<String> {
    match family {
        Family::Matrices { n, l } if n == 2 * l && l >= 2 => Some(format!(
            "GL({n}): orbit of rank k gives the Langlands quotient of \
             Ind[GL(1)^{{{l}-k}} x GL(2)^k x GL(1)^{{{l}-k}}](St (x) |det|^nu), \
             nu = (1/2^{{{l}-k}}, 0^k, -1/2^{{{l}-k}}), k = 0..{l}"
        )),
        Family::EvenQuadric { n } if n % 2 == 1 => Some(format!(
            "Spin({}): O_2 tempered; O_0 spherical; O_1 gives the Langlands quotient of \
             Ind[GL(2) x GL(1)^{}](St (x) |det|^nu) on PSO({}), nu = (1/2, 1/2, 0^{})",
            2 * n,
            n - 2,
            2 * n,
            n - 2
        )),
        _ => None,
    }
}

pub fn unitarity_report(case: &AbelianCase) -> Result<UnitarityReport> {
    let rs = case.root_system();
    let lam = case.datum.lambda();
    let w0_negates_lambda = weyl::w0_negates(rs, lam);
    let certificates_valid = (0..=case.r())
        .map(|i| arthur_pair_check(case, i).map(|c| c.is_valid() && c.sum_is_triple == Some(true)))
        .collect::<Result<Vec<_>>>()?;
    let verdict = if w0_negates_lambda {
        Verdict::AllUnitary
    } else {
        Verdict::NoHermitianRepresentations
    };
    let wdd = certificates_valid
        .first()
        .copied()
        .unwrap_or(false)
        .then(|| weyl::dominant_representative(rs, &lam.scaled(2)).0 .0);
    let two_lambda_even = wdd.as_ref().map(|v| v.iter().all(|&c| c == 0 || c == 2));
    Ok(UnitarityReport {
        w0_negates_lambda,
        certificates_valid,
        verdict,
        two_lambda_weighted_dynkin: wdd,
        two_lambda_even,
        residual_note: if w0_negates_lambda { residual_note(case.family) } else { None },
    })
}
