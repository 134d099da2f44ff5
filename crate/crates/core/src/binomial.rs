//! Binomial coefficients, Macaulay expansions and O-sequences.
//!
//! Every `h ≥ 1` has a unique `i`-binomial expansion
//! `h = C(m_i, i) + C(m_{i-1}, i-1) + … + C(m_j, j)` with
//! `m_i > m_{i-1} > … > m_j ≥ j ≥ 1`, and the growth bound
//! `h^<i> = Σ C(m_t + 1, t + 1)` caps the next value of any Hilbert function
//! of a standard graded algebra. A finite sequence obeying that cap in every
//! degree is an O-sequence.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc *= n - t;
        acc /= t + 1;
    }
    acc
}

/// `C(n, k)` when it fits in a `u64`.
pub fn binom_u64(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k as u128 {
        acc = acc.checked_mul(n as u128 - t)? / (t + 1);
    }
    u64::try_from(acc).ok()
}

/// One summand `C(top, bottom)` of a Macaulay expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BinomialTerm {
    pub top: u64,
    pub bottom: u32,
}

/// The `degree`-binomial expansion of `value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinomialExpansion {
    pub value: u64,
    pub degree: u32,
    /// Terms with strictly decreasing `top` and `bottom` counting down from
    /// `degree`. Empty for `value == 0`.
    pub terms: Vec<BinomialTerm>,
}

impl BinomialExpansion {
    /// The growth bound `value^<degree>` induced by this expansion.
    pub fn growth(&self) -> BigUint {
        self.terms
            .iter()
            .map(|t| binom(t.top + 1, t.bottom as u64 + 1))
            .sum()
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({},{})", t.top, t.bottom)?;
        }
        Ok(())
    }
}

/// Greedy `i`-binomial expansion of `h`.
///
/// Panics if `i == 0`. For `h == 0` the expansion has no terms.
pub fn macaulay_expand(h: u64, i: u32) -> BinomialExpansion {
    assert!(i >= 1, "binomial expansion needs a positive degree");
    let mut terms = Vec::new();
    let mut rest = h as u128;
    let mut t = i as u128;
    while rest > 0 {
        // t never reaches 0: at t = 1 the remainder is taken whole.
        if t == 1 {
            terms.push(BinomialTerm {
                top: rest as u64,
                bottom: 1,
            });
            break;
        }
        let mut m = t;
        let mut c: u128 = 1; // C(m, t)
                             // C(m+1, t) = C(m, t) * (m+1) / (m+1-t)
        while let Some(p) = c.checked_mul(m + 1) {
            let next = p / (m + 1 - t);
            if next > rest {
                break;
            }
            c = next;
            m += 1;
        }
        terms.push(BinomialTerm {
            top: m as u64,
            bottom: t as u32,
        });
        rest -= c;
        t -= 1;
    }
    BinomialExpansion {
        value: h,
        degree: i,
        terms,
    }
}

/// Macaulay's bound `h^<i>`, with `0^<i> = 0`.
pub fn macaulay_growth(h: u64, i: u32) -> BigUint {
    macaulay_expand(h, i).growth()
}

/// `h^<i>` clamped into `u64`, for enumeration bounds.
pub(crate) fn macaulay_growth_saturating(h: u64, i: u32) -> u64 {
    u64::try_from(macaulay_growth(h, i)).unwrap_or(u64::MAX)
}

/// A finite Hilbert function `h_0, h_1, …, h_s` with `h_0 = 1` and no zero
/// before the end. Trailing zeros are trimmed, so `s` is the socle degree.
///
/// Structural invariants only; use [`is_o_sequence`] for Macaulay's bound.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OSequence {
    values: Vec<u64>,
}

impl OSequence {
    pub fn new(mut values: Vec<u64>) -> Result<Self> {
        while values.len() > 1 && *values.last().unwrap() == 0 {
            values.pop();
        }
        match values.first() {
            None => return Err(Error::MalformedSequence("empty sequence".into())),
            Some(&h0) if h0 != 1 => {
                return Err(Error::MalformedSequence(format!("h_0 must be 1, got {h0}")))
            }
            _ => {}
        }
        if let Some(t) = values.iter().position(|&v| v == 0) {
            return Err(Error::MalformedSequence(format!(
                "interior zero at degree {t}"
            )));
        }
        Ok(OSequence { values })
    }

    /// Structural construction followed by the Macaulay check.
    pub fn validated(values: Vec<u64>) -> Result<Self> {
        let h = Self::new(values)?;
        match is_o_sequence(&h).violation {
            None => Ok(h),
            Some(v) => Err(Error::NotOSequence {
                degree: v.degree,
                value: v.value,
                bound: v.bound.to_string(),
            }),
        }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `h_t`, zero past the socle degree.
    pub fn get(&self, t: usize) -> u64 {
        self.values.get(t).copied().unwrap_or(0)
    }

    /// `h_1`, the embedding codimension (0 for the field itself).
    pub fn codim(&self) -> u64 {
        self.get(1)
    }

    pub fn socle_degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Keeps degrees `0..=last`.
    pub fn truncated(&self, last: usize) -> OSequence {
        let end = (last + 1).min(self.values.len());
        OSequence {
            values: self.values[..end].to_vec(),
        }
    }

    /// Appends one value; fails if it would create an interior zero.
    pub fn extended(&self, value: u64) -> Result<OSequence> {
        let mut v = self.values.clone();
        v.push(value);
        OSequence::new(v)
    }
}

impl fmt::Display for OSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.values.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for OSequence {
    type Err = Error;

    /// Parses `1,3,6,8` (spaces allowed, optional surrounding parentheses).
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let values = body
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>()
                    .map_err(|_| Error::MalformedSequence(format!("bad entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        OSequence::new(values)
    }
}

impl Serialize for OSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.values.serialize(s)
    }
}

/// The first degree where Macaulay's bound fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Degree of the offending value: `h_degree > h_{degree-1}^<degree-1>`.
    pub degree: usize,
    pub value: u64,
    pub bound: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OSequenceCheck {
    pub violation: Option<Violation>,
}

impl OSequenceCheck {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `h_{t+1} ≤ h_t^<t>` for every `t ≥ 1`, reporting the least failure.
pub fn is_o_sequence(h: &OSequence) -> OSequenceCheck {
    let v = h.values();
    for t in 1..v.len().saturating_sub(1) {
        let bound = macaulay_growth(v[t], t as u32);
        if BigUint::from(v[t + 1]) > bound {
            return OSequenceCheck {
                violation: Some(Violation {
                    degree: t + 1,
                    value: v[t + 1],
                    bound,
                }),
            };
        }
    }
    OSequenceCheck { violation: None }
}

/// `(h_0, h_1 - h_0, h_2 - h_1, …)`; entries may be negative.
pub fn first_difference(h: &OSequence) -> Vec<i64> {
    let v = h.values();
    let mut out = Vec::with_capacity(v.len());
    out.push(v[0] as i64);
    for w in v.windows(2) {
        out.push(w[1] as i64 - w[0] as i64);
    }
    out
}
