//! Graded Betti numbers of stable monomial ideals.
//!
//! Rows are indexed the Eliahou–Kervaire way: row `q` of the table of an
//! ideal `I` is the `q`-th syzygy module, so row 0 counts minimal
//! generators. Row `q` here is the module `F_{q+1}` in a resolution of
//! `R/I` that starts `F_1 -> R -> R/I`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::binomial::binom_u64;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

/// One nonzero graded Betti number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BettiEntry {
    pub q: usize,
    pub shift: usize,
    pub mult: u64,
}

/// Multiplicities `β_{q,j}` of a monomial ideal in `n` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    artinian: bool,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(n: usize, artinian: bool) -> Self {
        BettiTable {
            n,
            artinian,
            entries: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_artinian(&self) -> bool {
        self.artinian
    }

    /// Adds `mult` to `β_{q,shift}`. Zero multiplicities are not stored.
    pub fn add(&mut self, q: usize, shift: usize, mult: u64) {
        assert!(q < self.n, "homological index {q} out of range");
        if mult > 0 {
            *self.entries.entry((q, shift)).or_insert(0) += mult;
        }
    }

    pub fn get(&self, q: usize, shift: usize) -> u64 {
        self.entries.get(&(q, shift)).copied().unwrap_or(0)
    }

    /// Entries sorted by `(q, shift)`.
    pub fn entries(&self) -> Vec<BettiEntry> {
        self.entries
            .iter()
            .map(|(&(q, shift), &mult)| BettiEntry { q, shift, mult })
            .collect()
    }

    pub fn row_total(&self, q: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((r, _), _)| *r == q)
            .map(|(_, m)| m)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

/// Macaulay2-style diagram: column `q`, row `shift - q`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero table)");
        }
        let rows: Vec<usize> = {
            let mut r: Vec<_> = self.entries.keys().map(|&(q, j)| j - q).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let totals: Vec<String> = (0..self.n).map(|q| self.row_total(q).to_string()).collect();
        let width = self
            .entries
            .values()
            .map(|m| m.to_string().len())
            .chain(totals.iter().map(String::len))
            .max()
            .unwrap_or(1);
        let label = rows
            .iter()
            .map(|r| r.to_string().len() + 1)
            .max()
            .unwrap_or(2)
            .max("total:".len());
        write!(f, "{:>label$}", "")?;
        for q in 0..self.n {
            write!(f, " {q:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for t in &totals {
            write!(f, " {t:>width$}")?;
        }
        writeln!(f)?;
        for &r in &rows {
            write!(f, "{:>label$}", format!("{r}:"))?;
            for q in 0..self.n {
                let m = self.get(q, q + r);
                if m == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {m:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Eliahou–Kervaire: `β_{q,i} = Σ_{T ∈ G(I)_{i-q}} C(m(T) - 1, q)`.
pub fn ek_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    if !ideal.is_stable() {
        return Err(Error::NotStable(
            "the Eliahou-Kervaire formula needs a stable ideal".into(),
        ));
    }
    let n = ideal.nvars();
    let mut table = BettiTable::new(n, ideal.is_artinian());
    for (deg, gens) in ideal.minimal_generators() {
        for t in gens {
            let m = t.m_index()? as u64;
            for q in 0..n {
                table.add(q, deg + q, binom_u64(m - 1, q as u64).unwrap());
            }
        }
    }
    Ok(table)
}

/// Closed-form `β_{1,d+2}` and `β_{2,d+2}` for the lex ideal of a
/// codimension-3 sequence with `h_{d-1} = d+i+j` and `h_d = h_{d+1} = d+i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedBetti {
    pub d: usize,
    pub i: usize,
    pub j: usize,
    /// `None` when zero or several branches of the `k`-range test apply.
    pub beta1: Option<u64>,
    /// `None` when zero or several `l`-ranges apply.
    pub beta2: Option<u64>,
    /// Which branch produced each value, e.g. `"beta1: 2k with k=2"`.
    pub branches: Vec<String>,
    /// Branch-overlap or branch-gap reports. Empty on the clean path.
    pub diagnostics: Vec<String>,
}

/// Closed form for the two Betti numbers at shift `d + 2`.
///
/// `β_{1,d+2}` is `2k-1` when
/// `(k-1)d - k(k-3)/2 ≤ i ≤ (k-1)d - k(k-3)/2 + (k-1)` and `2k` when
/// `(k-1)d - k(k-3)/2 + k ≤ i ≤ kd - (k-1)k/2`. `β_{2,d+2} = j + l` for
/// `(l-1)d - (l-2)(l-1)/2 < i ≤ ld - (l-1)l/2`. The finer split by `i + j`
/// (which generator of `I_d` comes first) is also classified and any
/// position matched by no sub-case, or by more than one, lands in
/// `diagnostics`.
pub fn closed_betti_codim3(d: usize, i: usize, j: usize) -> Result<ClosedBetti> {
    let top = (d * d + d) / 2;
    if d == 0 || i == 0 || i > top {
        return Err(Error::OutOfRange(format!(
            "need 1 <= i <= (d^2+d)/2 = {top}, got d = {d}, i = {i}"
        )));
    }
    if j == 0 {
        return Err(Error::OutOfRange(
            "the drop j = h_(d-1) - h_d must be positive".into(),
        ));
    }
    // h_{d-1} = d+i+j must fit in R_{d-1} = C(d+1, 2).
    let room = (d + 1) * d / 2;
    if d + i + j > room {
        return Err(Error::OutOfRange(format!(
            "h_(d-1) = {} exceeds dim R_(d-1) = {room}; no such O-sequence",
            d + i + j
        )));
    }
    let (d_, i_, j_) = (d as i64, i as i64, j as i64);
    let mut branches = Vec::new();
    let mut diagnostics = Vec::new();

    let mut b1_hits = Vec::new();
    for k in 1..=d_ {
        let lo = (k - 1) * d_ - k * (k - 3) / 2;
        if lo <= i_ && i_ < lo + k {
            b1_hits.push((2 * k - 1, format!("beta1: 2k-1 with k={k}")));
        }
        if lo + k <= i_ && i_ <= k * d_ - (k - 1) * k / 2 {
            b1_hits.push((2 * k, format!("beta1: 2k with k={k}")));
        }
    }
    let beta1 = match b1_hits.as_slice() {
        [(v, why)] => {
            branches.push(why.clone());
            Some(*v as u64)
        }
        [] => {
            diagnostics.push(format!("beta1: no k-range contains i = {i}"));
            None
        }
        many => {
            let list: Vec<_> = many.iter().map(|(_, w)| w.as_str()).collect();
            diagnostics.push(format!("beta1: overlapping branches {}", list.join("; ")));
            None
        }
    };

    let upper = |l: i64| l * d_ - (l - 1) * l / 2;
    let ls: Vec<i64> = (1..=d_)
        .filter(|&l| (l - 1) * d_ - (l - 2) * (l - 1) / 2 < i_ && i_ <= upper(l))
        .collect();
    let beta2 = match ls.as_slice() {
        [l] => {
            let l = *l;
            branches.push(format!("beta2: j+l with l={l}"));
            // Sub-case by where the first generator of I_d sits.
            let at_top = i_ == upper(l);
            let k_min = if at_top { l + 1 } else { l };
            let s = i_ + j_;
            let mut subs = Vec::new();
            for k in k_min..=d_ {
                if (k - 1) * d_ - (k - 1) * k / 2 < s && s < k * d_ - k * (k + 1) / 2 {
                    subs.push(format!("i+j inside band k={k}"));
                }
                if k > l && s == (k - 1) * d_ - (k - 1) * k / 2 {
                    subs.push(format!("i+j on band edge k={k}"));
                }
            }
            let case = if at_top {
                "i at top of l-range"
            } else {
                "i inside l-range"
            };
            match subs.len() {
                1 => branches.push(format!("beta2: {case}, {}", subs[0])),
                0 => diagnostics.push(format!("beta2: {case}, no band for i+j = {s}")),
                _ => diagnostics.push(format!(
                    "beta2: {case}, bands overlap for i+j = {s}: {}",
                    subs.join(", ")
                )),
            }
            Some((j_ + l) as u64)
        }
        [] => {
            diagnostics.push(format!("beta2: no l-range contains i = {i}"));
            None
        }
        many => {
            diagnostics.push(format!("beta2: overlapping l-ranges {many:?}"));
            None
        }
    };

    Ok(ClosedBetti {
        d,
        i,
        j,
        beta1,
        beta2,
        branches,
        diagnostics,
    })
}

/// Lower bound on the last-module multiplicity at `shift` that survives any
/// consecutive cancellation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CancellationBound {
    pub shift: usize,
    pub lower_bound: u64,
    /// `shift - n`: the socle degree this shift accounts for.
    pub socle_degree: usize,
}

/// `max(0, β_{n-1,j} - β_{n-2,j})` for each shift `j` of the last row.
///
/// Applied to an extremal (lex) table, a positive bound at `j` forces a
/// socle element of degree `j - n` in every algebra with the same Hilbert
/// function. Only Artinian tables are accepted.
pub fn cancellation_bounds(table: &BettiTable) -> Result<Vec<CancellationBound>> {
    if !table.is_artinian() {
        return Err(Error::NotArtinian);
    }
    let n = table.nvars();
    let last = n - 1;
    Ok(table
        .entries()
        .into_iter()
        .filter(|e| e.q == last)
        .map(|e| {
            let below = last.checked_sub(1).map_or(0, |p| table.get(p, e.shift));
            CancellationBound {
                shift: e.shift,
                lower_bound: e.mult.saturating_sub(below),
                socle_degree: e.shift - n,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::OSequence;

    fn lex(v: &[u64]) -> MonomialIdeal {
        MonomialIdeal::lex(&OSequence::new(v.to_vec()).unwrap(), 3).unwrap()
    }

    #[test]
    fn ek_on_example_with_inconclusive_betti() {
        let t = ek_betti(&lex(&[1, 3, 6, 10, 15, 21, 18, 17, 17])).unwrap();
        assert_eq!(t.get(1, 9), 4);
        assert_eq!(t.get(2, 9), 3);
    }

    #[test]
    fn ek_on_maximal_ideal_is_koszul() {
        let t = ek_betti(&MonomialIdeal::maximal(3)).unwrap();
        let e: Vec<_> = t.entries().iter().map(|e| (e.q, e.shift, e.mult)).collect();
        assert_eq!(e, vec![(0, 1, 3), (1, 2, 3), (2, 3, 1)]);
    }

    #[test]
    fn ek_small_table() {
        // Generators: x1^2, x1x2, x1x3, x2^2 in degree 2; x2x3^3, x3^4 in degree 4.
        let t = ek_betti(&lex(&[1, 3, 2, 2])).unwrap();
        let e: Vec<_> = t.entries().iter().map(|e| (e.q, e.shift, e.mult)).collect();
        assert_eq!(
            e,
            vec![
                (0, 2, 4),
                (0, 4, 2),
                (1, 3, 4),
                (1, 5, 4),
                (2, 4, 1),
                (2, 6, 2)
            ]
        );
    }

    #[test]
    fn ek_rejects_unstable() {
        let m = crate::monomial::Monomial::parse("x2^2", 3).unwrap();
        let i = MonomialIdeal::from_generators(3, &[m], 4).unwrap();
        assert!(matches!(ek_betti(&i), Err(Error::NotStable(_))));
    }

    #[test]
    fn closed_form_examples() {
        let c = closed_betti_codim3(7, 10, 1).unwrap();
        assert_eq!((c.beta1, c.beta2), (Some(4), Some(3)));
        let c = closed_betti_codim3(7, 9, 1).unwrap();
        assert_eq!((c.beta1, c.beta2), (Some(3), Some(3)));
        let c = closed_betti_codim3(7, 5, 2).unwrap();
        assert_eq!((c.beta1, c.beta2), (Some(2), Some(3)));
        assert!(c.diagnostics.is_empty());
        let c = closed_betti_codim3(7, 7, 2).unwrap();
        assert_eq!((c.beta1, c.beta2), (Some(2), Some(3)));
    }

    #[test]
    fn closed_form_range_errors() {
        assert!(closed_betti_codim3(7, 0, 1).is_err());
        assert!(closed_betti_codim3(7, 29, 1).is_err());
        assert!(closed_betti_codim3(7, 5, 0).is_err());
        // h_(d-1) = 7 + 20 + 2 = 29 > C(8, 2) = 28
        assert!(closed_betti_codim3(7, 20, 2).is_err());
    }

    #[test]
    fn k_range_boundaries_differ_by_one() {
        for d in 2..12usize {
            let d_ = d as i64;
            for k in 1..=d_ {
                let lo = (k - 1) * d_ - k * (k - 3) / 2;
                let last_odd = lo + k - 1;
                let first_even = lo + k;
                let last_even = k * d_ - (k - 1) * k / 2;
                assert_eq!(first_even, last_odd + 1);
                if k < d_ {
                    let next_lo = k * d_ - (k + 1) * (k - 2) / 2;
                    assert_eq!(next_lo, last_even + 1, "d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn cancellation_examples() {
        let t = ek_betti(&lex(&[1, 3, 6, 10, 15, 21, 18, 17, 17])).unwrap();
        let b = cancellation_bounds(&t).unwrap();
        let at9 = b.iter().find(|c| c.shift == 9).unwrap();
        assert_eq!(at9.lower_bound, 0);

        let t = ek_betti(&lex(&[1, 3, 6, 8, 9, 9, 9, 10])).unwrap();
        let b = cancellation_bounds(&t).unwrap();
        let at8 = b.iter().find(|c| c.shift == 8).unwrap();
        assert_eq!((at8.lower_bound, at8.socle_degree), (1, 5));

        let t = ek_betti(&MonomialIdeal::maximal(3)).unwrap();
        let b = cancellation_bounds(&t).unwrap();
        assert_eq!(b.len(), 1);
        // β_{1,3} = 0, so the field's own socle in degree 0 survives.
        assert_eq!((b[0].shift, b[0].lower_bound, b[0].socle_degree), (3, 1, 0));
    }

    #[test]
    fn cancellation_refuses_non_artinian() {
        let m = crate::monomial::Monomial::parse("x1", 3).unwrap();
        let i = MonomialIdeal::from_generators(3, &[m], 3).unwrap();
        let t = ek_betti(&i).unwrap();
        assert_eq!(cancellation_bounds(&t), Err(Error::NotArtinian));
    }

    #[test]
    fn diagram_layout() {
        let t = ek_betti(&MonomialIdeal::maximal(3)).unwrap();
        let s = t.to_string();
        assert_eq!(s, "       0 1 2\ntotal: 3 3 1\n    1: 3 3 1\n");
    }
}
