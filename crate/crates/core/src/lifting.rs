//! Lifting an edge-graceful labeling of a 2r-regular graph `G` to one of the
//! disjoint union `kG`, for odd `k`.
//!
//! Two constructions:
//!
//! * [`lift_theorem2`] shifts every label of copy `j` by `(j - 1) q`. Each
//!   vertex then gains `2r (j - 1) q = 2r^2 (j - 1) p`, and the copies stay
//!   apart modulo `kp` as long as `gcd(r, kp) = 1`.
//! * [`lift_striaeform`] starts from a striation. Every stria owns a block of
//!   `kp` consecutive labels and walks through it one copy at a time, with
//!   steps chosen so each vertex gains exactly `2p` per copy. Since `2p` has
//!   order `k` modulo `kp`, no coprimality condition is needed.
//!
//! Both lifts verify their output before returning it.

use num_integer::Integer;

use crate::error::{Error, Result, Violation};
use crate::graph::{disjoint_union, regularity, MultiGraph, UnionIndex};
use crate::label::{add_mod, checked_add, checked_mul, Label};
use crate::labeling::{induced_unchecked, verify_edge_graceful, EdgeLabeling};
use crate::striation::{extract_stria_bases, residue_rep, Striation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftMethod {
    Theorem2,
    Striaeform,
}

/// Parameters of one lift, validated against the base graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LiftPlan {
    pub method: LiftMethod,
    pub k: usize,
    pub r: usize,
    pub p: usize,
    pub q: usize,
    pub kp: usize,
    pub kq: usize,
}

impl LiftPlan {
    /// Checks the parameters shared by both lifts (`k` odd, `g` 2r-regular)
    /// and, for [`LiftMethod::Theorem2`], `gcd(r, kp) = 1`.
    pub fn new(g: &MultiGraph, k: usize, method: LiftMethod) -> Result<Self> {
        if k == 0 {
            return Err(Error::DegenerateInput(
                "copy count k must be at least 1".into(),
            ));
        }
        if k.is_multiple_of(2) {
            return Err(Error::PreconditionViolated(Violation::EvenCopyCount {
                k: k as u64,
            }));
        }
        let r = regularity(g)
            .two_r()
            .ok_or(Error::PreconditionViolated(Violation::NotTwoRRegular))?;
        let (p, q) = (g.vertex_count(), g.edge_count());
        let overflow = || Error::LabelOverflow("k * q overflows usize".into());
        let kp = k.checked_mul(p).ok_or_else(overflow)?;
        let kq = k.checked_mul(q).ok_or_else(overflow)?;
        if method == LiftMethod::Theorem2 {
            let gcd = r.gcd(&kp);
            if gcd != 1 {
                return Err(Error::PreconditionViolated(Violation::NotCoprime {
                    r: r as u64,
                    kp: kp as u64,
                    gcd: gcd as u64,
                }));
            }
        }
        Ok(Self {
            method,
            k,
            r,
            p,
            q,
            kp,
            kq,
        })
    }

    /// `t` with `r = 2t + 1` (odd `r`) or `r = 2t` (even `r`).
    pub fn t(&self) -> usize {
        self.r / 2
    }
}

/// A lifted labeling together with the union graph it labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifted<L> {
    pub plan: LiftPlan,
    pub union: MultiGraph,
    pub labeling: EdgeLabeling<L>,
}

/// Copy `j` (1-based) of edge `e_i` gets label `l_i + (j - 1) q`.
pub fn lift_theorem2<L: Label>(
    g: &MultiGraph,
    base: &EdgeLabeling<L>,
    k: usize,
) -> Result<Lifted<L>> {
    let plan = LiftPlan::new(g, k, LiftMethod::Theorem2)?;
    check_base_labeling(g, base)?;
    let index = UnionIndex::new(g, k);
    let q = L::from_usize(plan.q)?;
    let mut labels = vec![L::zero(); plan.kq];
    let mut shift = L::zero();
    for copy in 0..k {
        for (e, &label) in base.labels().iter().enumerate() {
            labels[index.edge(copy, e)] = checked_add(label, shift)?;
        }
        if copy + 1 < k {
            shift = checked_add(shift, q)?;
        }
    }
    finish(g, plan, labels)
}

/// Per-copy movement of one stria's labels inside its block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Walk {
    /// `+p` per copy from the block bottom.
    Up,
    /// `-p` per copy from the block top.
    Down,
    /// `+2p` per copy, wrapping inside the block.
    DoubleUp,
}

/// Block (1-based, `1..=r`) and walk of stria `j` (1-based).
fn stria_schedule(r: usize, j: usize) -> (usize, Walk) {
    let t = r / 2;
    if r % 2 == 1 {
        if j <= t + 1 {
            (j, Walk::Up)
        } else {
            (3 * t + 3 - j, Walk::Down)
        }
    } else if j == 1 {
        (1, Walk::DoubleUp)
    } else if j <= t {
        (j, Walk::Up)
    } else {
        (3 * t + 1 - j, Walk::Down)
    }
}

/// Lift from a striation.
///
/// Stria `j` occupies block `m` = labels `(m - 1) kp + 1 ..= m kp`. With
/// `r = 2t + 1`, striæ `1..=t+1` use blocks `1..=t+1` and climb by `p` per
/// copy from the bottom; striæ `t+2..=2t+1` use blocks `3t+3-j` and descend
/// by `p` from the top. With `r = 2t`, striæ `2..=t` climb, `t+1..=2t`
/// descend from blocks `3t+1-j`, and stria 1 climbs by `2p` per copy inside
/// block 1, wrapping modulo `kp` to stay in `1..=kp`.
///
/// The climbing and descending walks never leave their blocks; this is
/// checked rather than assumed, and a violation surfaces as
/// [`Error::TheoremViolationWitness`].
pub fn lift_striaeform<L: Label>(g: &MultiGraph, s: &Striation<L>, k: usize) -> Result<Lifted<L>> {
    let plan = LiftPlan::new(g, k, LiftMethod::Striaeform)?;
    let bases = extract_stria_bases(g, s)?;
    let index = UnionIndex::new(g, k);
    let p = L::from_usize(plan.p)?;
    let kp = L::from_usize(plan.kp)?;
    let two_p = checked_mul(p, L::one() + L::one())?;
    let mut labels = vec![L::zero(); plan.kq];

    for (j0, row) in bases.rows.iter().enumerate() {
        let (block, walk) = stria_schedule(plan.r, j0 + 1);
        let block_floor = checked_mul(kp, L::from_usize(block - 1)?)?;
        let block_top = checked_add(block_floor, kp)?;
        for entry in row {
            // Offset within the block, in 1..=kp.
            let mut offset = match walk {
                Walk::Up | Walk::DoubleUp => entry.base,
                Walk::Down => checked_add(entry.base, kp - p)?,
            };
            for copy in 0..k {
                if copy > 0 {
                    offset = match walk {
                        Walk::Up => checked_add(offset, p)?,
                        Walk::Down => offset.checked_sub(&p).unwrap_or_else(L::zero),
                        Walk::DoubleUp => residue_rep(add_mod(offset % kp, two_p % kp, kp), kp),
                    };
                }
                let label = checked_add(block_floor, offset)?;
                if offset.is_zero() || label > block_top {
                    return Err(Error::TheoremViolationWitness(format!(
                        "stria {} edge {} copy {} left block {block}",
                        j0 + 1,
                        entry.edge + 1,
                        copy + 1
                    )));
                }
                labels[index.edge(copy, entry.edge)] = label;
            }
        }
    }
    finish(g, plan, labels)
}

/// True iff every vertex's induced label in copy `s + 1` is its label in copy
/// `s` plus `2p`, modulo `kp`.
pub fn induced_shift_check<L: Label>(
    g: &MultiGraph,
    s: &Striation<L>,
    k: usize,
    lifted: &EdgeLabeling<L>,
) -> Result<bool> {
    s.labeling.check_pairs_with(g)?;
    if k == 0 {
        return Err(Error::DegenerateInput(
            "copy count k must be at least 1".into(),
        ));
    }
    let union = disjoint_union(g, k)?;
    lifted.check_pairs_with(&union)?;
    let index = UnionIndex::new(g, k);
    let kp = lifted.modulus();
    let two_p = (L::from_usize(2 * g.vertex_count())?) % kp;
    let induced = induced_unchecked(&union, lifted.labels(), kp).values;
    Ok((1..k).all(|copy| {
        (0..g.vertex_count()).all(|v| {
            let before = induced[index.vertex(copy - 1, v)];
            induced[index.vertex(copy, v)] == add_mod(before, two_p, kp)
        })
    }))
}

fn check_base_labeling<L: Label>(g: &MultiGraph, base: &EdgeLabeling<L>) -> Result<()> {
    base.check_pairs_with(g)?;
    let verdict = verify_edge_graceful(g, base)?;
    if !verdict.is_valid() {
        return Err(Error::PreconditionViolated(Violation::InvalidBaseLabeling(
            verdict.to_string(),
        )));
    }
    Ok(())
}

/// Builds the union, wraps the labels and verifies them.
fn finish<L: Label>(g: &MultiGraph, plan: LiftPlan, labels: Vec<L>) -> Result<Lifted<L>> {
    let union = disjoint_union(g, plan.k)?;
    let labeling = EdgeLabeling::for_graph(&union, labels)?;
    let verdict = verify_edge_graceful(&union, &labeling)?;
    if !verdict.is_valid() {
        return Err(Error::TheoremViolationWitness(format!(
            "{:?} lift with k = {} is not edge graceful: {verdict}",
            plan.method, plan.k
        )));
    }
    Ok(Lifted {
        plan,
        union,
        labeling,
    })
}
