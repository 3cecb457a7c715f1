//! Integer label types.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{NumCast, PrimInt, Unsigned};

use crate::error::{Error, Result};

/// Unsigned integer type used for edge labels, vertex residues and moduli.
///
/// Implemented for every primitive unsigned integer; `u64` is the default
/// used by the crate-root aliases.
pub trait Label:
    PrimInt + Unsigned + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
    fn from_usize(n: usize) -> Result<Self> {
        <Self as NumCast>::from(n)
            .ok_or_else(|| Error::LabelOverflow(format!("{n} does not fit the label type")))
    }

    /// Panics only if the value does not fit `usize`, which cannot happen for
    /// values that index into in-memory tables.
    fn to_index(self) -> usize {
        self.to_usize().expect("label value exceeds usize")
    }
}

impl<T> Label for T where
    T: PrimInt + Unsigned + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
}

pub(crate) fn checked_mul<L: Label>(a: L, b: L) -> Result<L> {
    a.checked_mul(&b)
        .ok_or_else(|| Error::LabelOverflow(format!("{a} * {b}")))
}

pub(crate) fn checked_add<L: Label>(a: L, b: L) -> Result<L> {
    a.checked_add(&b)
        .ok_or_else(|| Error::LabelOverflow(format!("{a} + {b}")))
}

/// `(a + b) mod m` for `a, b < m` without intermediate overflow.
pub(crate) fn add_mod<L: Label>(a: L, b: L, m: L) -> L {
    debug_assert!(a < m && b < m);
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}
