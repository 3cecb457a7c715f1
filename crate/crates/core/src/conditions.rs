//! Necessary conditions for edge gracefulness.
//!
//! A `(p, q)` graph can only be edge graceful when `p` divides
//! `q^2 + q - p(p-1)/2`. For a 2r-regular graph (`q = rp`) this forces `p`
//! odd, and a disjoint union `kG` of such graphs additionally needs `k` odd.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result, Violation};
use crate::graph::{regularity, MultiGraph};

/// Outcome of one parity requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Requirement {
    Satisfied,
    Violated,
    NotApplicable,
}

impl Requirement {
    fn from_odd(n: u64) -> Self {
        if n % 2 == 1 {
            Requirement::Satisfied
        } else {
            Requirement::Violated
        }
    }

    pub fn is_violated(self) -> bool {
        self == Requirement::Violated
    }
}

impl fmt::Display for Requirement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Requirement::Satisfied => "ok",
            Requirement::Violated => "violated",
            Requirement::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    /// Vertex and edge counts the divisibility test was evaluated at.
    pub p: u64,
    pub q: u64,
    /// `q^2 + q - p(p-1)/2`, exact.
    pub quantity: BigInt,
    /// `quantity mod p`, in `0..p`.
    pub remainder: BigInt,
    pub lo_divides: bool,
    pub p_odd_required: Requirement,
    pub k_odd_required: Requirement,
}

impl ConditionReport {
    /// No evaluated condition rules the graph out.
    pub fn feasible(&self) -> bool {
        self.lo_divides && !self.p_odd_required.is_violated() && !self.k_odd_required.is_violated()
    }

    /// Remainder as a machine integer; it is below `p` so always fits.
    pub fn remainder_u64(&self) -> u64 {
        self.remainder.to_u64().expect("remainder < p fits u64")
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "divisibility: p={} q={} q^2+q-p(p-1)/2={} remainder={} {}",
            self.p,
            self.q,
            self.quantity,
            self.remainder,
            if self.lo_divides { "ok" } else { "violated" }
        )?;
        writeln!(f, "p odd: {}", self.p_odd_required)?;
        writeln!(f, "k odd: {}", self.k_odd_required)?;
        write!(
            f,
            "feasible: {}",
            if self.feasible() { "yes" } else { "no" }
        )
    }
}

/// Evaluates `p | q^2 + q - p(p-1)/2` in exact integer arithmetic.
pub fn lo_condition(p: u64, q: u64) -> Result<ConditionReport> {
    if p == 0 {
        return Err(Error::DegenerateInput(
            "divisibility test needs p >= 1".into(),
        ));
    }
    let (bp, bq) = (BigInt::from(p), BigInt::from(q));
    let quantity: BigInt = &bq * &bq + &bq - &bp * (&bp - 1u32) / 2u32;
    let remainder = quantity.mod_floor(&bp);
    Ok(ConditionReport {
        p,
        q,
        lo_divides: remainder.is_zero(),
        quantity,
        remainder,
        p_odd_required: Requirement::NotApplicable,
        k_odd_required: Requirement::NotApplicable,
    })
}

/// Screens `kG` for a 2r-regular `g`: `p` odd, `k` odd, and the divisibility
/// test at `(kp, krp)`.
pub fn union_feasibility(g: &MultiGraph, k: u64) -> Result<ConditionReport> {
    let r = regularity(g)
        .two_r()
        .ok_or(Error::PreconditionViolated(Violation::NotTwoRRegular))?;
    if k == 0 {
        return Err(Error::DegenerateInput(
            "copy count k must be at least 1".into(),
        ));
    }
    let p = g.vertex_count() as u64;
    let overflow = || Error::DegenerateInput("kp or krp overflows u64".into());
    let kp = k.checked_mul(p).ok_or_else(overflow)?;
    let krp = kp.checked_mul(r as u64).ok_or_else(overflow)?;
    let mut report = lo_condition(kp, krp)?;
    report.p_odd_required = Requirement::from_odd(p);
    report.k_odd_required = Requirement::from_odd(k);
    Ok(report)
}

/// Parity screen for a single graph: the divisibility test at its own
/// `(p, q)`, plus `p` odd when it is 2r-regular.
pub fn graph_conditions(g: &MultiGraph) -> Result<ConditionReport> {
    let mut report = lo_condition(g.vertex_count() as u64, g.edge_count() as u64)?;
    if regularity(g).two_r().is_some() {
        report.p_odd_required = Requirement::from_odd(g.vertex_count() as u64);
    }
    Ok(report)
}
