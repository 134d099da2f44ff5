//! Non-levelness certificates for O-sequences.
//!
//! Each criterion scans the sequence for a pattern that forces a socle
//! element below the socle degree in every Artinian algebra with that
//! Hilbert function. The engine never claims a sequence is level: the only
//! outcomes are a certificate or `Unknown`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::binomial::{is_o_sequence, macaulay_growth, OSequence};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::resolution::{cancellation_bounds, closed_betti_codim3, ek_betti};
use crate::typevector::{flat_run_typevectors, shift_report_p3, typevector_from_hf};

/// The certificates, in the order [`level_check`] tries them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Criterion {
    /// `h_{d-1} > h_d = h_{d+1} ≤ d+1`, any codimension.
    #[serde(rename = "P006")]
    DropFlatLow,
    /// `h_{d-1} > h_d = h_{d+1} ≤ 2d+2`, codimension at most 3.
    #[serde(rename = "T014")]
    DropFlat,
    /// `h_{d-1} > h_d ≤ h_{d+1}`, `h_d ≤ 2d+2`: reduced to [`Criterion::DropFlat`]
    /// on the flat truncation.
    #[serde(rename = "C510")]
    DropRise,
    /// A flat run of length at least 2 followed by a rise.
    #[serde(rename = "T062")]
    PlateauJump,
    /// Positive cancellation lower bound in the lex Betti table.
    BettiBound,
    /// Noncancelable shift read off the extracted 3-type vector.
    TypeVectorShift,
}

impl Criterion {
    pub const ALL: [Criterion; 6] = [
        Criterion::DropFlatLow,
        Criterion::DropFlat,
        Criterion::DropRise,
        Criterion::PlateauJump,
        Criterion::BettiBound,
        Criterion::TypeVectorShift,
    ];

    /// Stable identifier used in JSON output and census keys.
    pub fn code(self) -> &'static str {
        match self {
            Criterion::DropFlatLow => "P006",
            Criterion::DropFlat => "T014",
            Criterion::DropRise => "C510",
            Criterion::PlateauJump => "T062",
            Criterion::BettiBound => "BettiBound",
            Criterion::TypeVectorShift => "TypeVectorShift",
        }
    }

    /// Runs this criterion alone on `h`.
    pub fn check(self, h: &OSequence) -> Result<CriterionReport> {
        match self {
            Criterion::DropFlatLow => Ok(check_drop_flat_low(h)),
            Criterion::DropFlat => Ok(check_drop_flat(h)),
            Criterion::DropRise => Ok(check_drop_rise(h)),
            Criterion::PlateauJump => Ok(check_plateau_jump(h)),
            Criterion::BettiBound => check_betti_bound(h),
            Criterion::TypeVectorShift => Ok(check_typevector_shift(h)),
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A fired criterion with its parameters.
///
/// `d` is the scan position for the pattern criteria, the lowest witnessing
/// shift for [`Criterion::BettiBound`] and [`Criterion::TypeVectorShift`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub criterion: Criterion,
    pub d: usize,
    pub s: Option<usize>,
    pub i: Option<i64>,
    pub j: Option<u64>,
    pub socle_degrees: BTreeSet<usize>,
    pub evidence: Vec<String>,
}

impl Finding {
    /// Re-runs the named criterion at the stored position and checks that it
    /// reproduces the parameters and socle degrees (evidence text aside).
    pub fn revalidate(&self, h: &OSequence) -> bool {
        finding_at(self.criterion, h, self.d).is_some_and(|f| {
            (f.criterion, f.d, f.s, f.i, f.j, &f.socle_degrees)
                == (
                    self.criterion,
                    self.d,
                    self.s,
                    self.i,
                    self.j,
                    &self.socle_degrees,
                )
        })
    }
}

/// The finding of `criterion` at position `d`, if it fires there. For the
/// whole-sequence criteria `d` must equal the reported shift.
pub fn finding_at(criterion: Criterion, h: &OSequence, d: usize) -> Option<Finding> {
    let f = match criterion {
        Criterion::DropFlatLow => drop_flat_low_at(h, d),
        Criterion::DropFlat => drop_flat_at(h, d),
        Criterion::DropRise => drop_rise_at(h, d),
        Criterion::PlateauJump => plateau_jump_at(h, d).ok(),
        Criterion::BettiBound | Criterion::TypeVectorShift => {
            criterion.check(h).ok().and_then(|r| r.finding)
        }
    }?;
    (f.d == d).then_some(f)
}

/// Every position where `criterion` fires, in increasing order.
pub fn firing_positions(criterion: Criterion, h: &OSequence) -> Vec<usize> {
    match criterion {
        Criterion::PlateauJump => plateau_positions(h)
            .into_iter()
            .filter(|&(d, _)| plateau_jump_at(h, d).is_ok())
            .map(|(d, _)| d)
            .collect(),
        Criterion::BettiBound | Criterion::TypeVectorShift => criterion
            .check(h)
            .ok()
            .and_then(|r| r.finding)
            .map(|f| vec![f.d])
            .unwrap_or_default(),
        _ => drops(h)
            .filter(|&d| finding_at(criterion, h, d).is_some())
            .collect(),
    }
}

/// Outcome of one criterion: the finding at the least firing position, or
/// notes on why nothing fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub criterion: Criterion,
    pub finding: Option<Finding>,
    pub notes: Vec<String>,
}

fn codim_at_most_3(h: &OSequence) -> bool {
    h.codim() <= 3
}

/// Positions `d ≥ 1` with `h_{d-1} > h_d`.
fn drops(h: &OSequence) -> impl Iterator<Item = usize> + '_ {
    (1..h.len()).filter(move |&d| h.get(d - 1) > h.get(d))
}

fn scan(
    criterion: Criterion,
    h: &OSequence,
    at: impl Fn(&OSequence, usize) -> Option<Finding>,
    guard: Option<&str>,
) -> CriterionReport {
    let mut notes = Vec::new();
    if let Some(why) = guard {
        notes.push(why.to_string());
        return CriterionReport {
            criterion,
            finding: None,
            notes,
        };
    }
    let hits: Vec<Finding> = drops(h).filter_map(|d| at(h, d)).collect();
    if hits.is_empty() {
        notes.push(format!("{criterion}: no position matches"));
    }
    let mut it = hits.into_iter();
    let mut finding = it.next();
    let others: Vec<String> = it.map(|f| f.d.to_string()).collect();
    if let (Some(f), false) = (finding.as_mut(), others.is_empty()) {
        f.evidence.push(format!(
            "{criterion} also fires at d = {}",
            others.join(", ")
        ));
    }
    CriterionReport {
        criterion,
        finding,
        notes,
    }
}

fn drop_flat_low_at(h: &OSequence, d: usize) -> Option<Finding> {
    let (prev, hd, next) = (h.get(d.checked_sub(1)?), h.get(d), h.get(d + 1));
    if !(d >= 1 && prev > hd && hd == next && hd >= 1 && hd <= d as u64 + 1) {
        return None;
    }
    Some(Finding {
        criterion: Criterion::DropFlatLow,
        d,
        s: None,
        i: Some(hd as i64 - d as i64),
        j: Some(prev - hd),
        socle_degrees: BTreeSet::from([d - 1]),
        evidence: vec![format!(
            "h_{} = {prev} > h_{d} = {hd} = h_{} <= d+1 = {}: socle in degree {}",
            d - 1,
            d + 1,
            d + 1,
            d - 1
        )],
    })
}

pub fn check_drop_flat_low(h: &OSequence) -> CriterionReport {
    scan(Criterion::DropFlatLow, h, drop_flat_low_at, None)
}

fn drop_flat_at(h: &OSequence, d: usize) -> Option<Finding> {
    if !codim_at_most_3(h) || d == 0 {
        return None;
    }
    let (prev, hd, next) = (h.get(d - 1), h.get(d), h.get(d + 1));
    if !(prev > hd && hd == next && hd >= 1 && hd <= 2 * d as u64 + 2) {
        return None;
    }
    let i = hd as i64 - d as i64;
    let j = prev - hd;
    let mut evidence = vec![format!(
        "h_{} = {prev} > h_{d} = {hd} = h_{} <= 2d+2 = {} with i = {i}, j = {j}: socle in degree {}",
        d - 1,
        d + 1,
        2 * d + 2,
        d - 1
    )];
    if i <= 1 {
        evidence.push(format!("i = {i} <= 1: the low band h_d <= d+1"));
    }
    if i >= 1 {
        match closed_betti_codim3(d, i as usize, j as usize) {
            Ok(cb) => match (cb.beta1, cb.beta2) {
                (Some(b1), Some(b2)) if b2 > b1 => evidence.push(format!(
                    "Betti route: beta_(2,{0}) = {b2} > beta_(1,{0}) = {b1} in the lex resolution",
                    d + 2
                )),
                (b1, b2) => evidence.push(format!(
                    "Betti route inconclusive: beta_(1,{0}) = {b1:?}, beta_(2,{0}) = {b2:?}",
                    d + 2
                )),
            },
            Err(e) => evidence.push(format!("Betti route unavailable: {e}")),
        }
    }
    if j == 1 && i >= 2 {
        let g = macaulay_growth(d as u64 + i as u64, d as u32 + 1);
        let shown = d as u64 + i as u64 + 1;
        let agree = g == shown.into();
        evidence.push(format!(
            "maximal-growth route: (d+i)^<d+1> = {g}, truncation shows d+i+1 = {shown} ({})",
            if agree { "agree" } else { "differ" }
        ));
    }
    Some(Finding {
        criterion: Criterion::DropFlat,
        d,
        s: None,
        i: Some(i),
        j: Some(j),
        socle_degrees: BTreeSet::from([d - 1]),
        evidence,
    })
}

pub fn check_drop_flat(h: &OSequence) -> CriterionReport {
    let guard = (!codim_at_most_3(h)).then_some("T014: needs h_1 <= 3");
    scan(Criterion::DropFlat, h, drop_flat_at, guard)
}

fn drop_rise_at(h: &OSequence, d: usize) -> Option<Finding> {
    if !codim_at_most_3(h) || d == 0 {
        return None;
    }
    let (prev, hd, next) = (h.get(d - 1), h.get(d), h.get(d + 1));
    if !(prev > hd && next >= hd && hd >= 1 && hd <= 2 * d as u64 + 2) {
        return None;
    }
    let flat = h.truncated(d).extended(hd).ok()?;
    if !is_o_sequence(&flat).is_valid() {
        return None;
    }
    let base = drop_flat_at(&flat, d)?;
    let mut evidence = vec![format!(
        "h_{d} = {hd} <= h_{} = {next}; the truncation ({flat}) agrees with h through degree {d}",
        d + 1
    )];
    evidence.extend(base.evidence.iter().map(|e| format!("truncation: {e}")));
    Some(Finding {
        criterion: Criterion::DropRise,
        evidence,
        ..base
    })
}

pub fn check_drop_rise(h: &OSequence) -> CriterionReport {
    let guard = (!codim_at_most_3(h)).then_some("C510: needs h_1 <= 3");
    scan(Criterion::DropRise, h, drop_rise_at, guard)
}

/// Maximal flat runs `(d, s)` with `s ≥ 2` and `h_{d+s} > h_d`.
pub fn plateau_positions(h: &OSequence) -> Vec<(usize, usize)> {
    let v = h.values();
    let mut out = Vec::new();
    let mut d = 1;
    while d < v.len() {
        let mut e = d;
        while e + 1 < v.len() && v[e + 1] == v[d] {
            e += 1;
        }
        let s = e - d + 1;
        if s >= 2 && e + 1 < v.len() && v[e + 1] > v[d] {
            out.push((d, s));
        }
        d = e + 1;
    }
    out
}

/// The flat-run criterion at a run starting in degree `d`. `Err` carries
/// the reason it does not apply.
fn plateau_jump_at(h: &OSequence, d: usize) -> std::result::Result<Finding, String> {
    if !codim_at_most_3(h) {
        return Err("needs h_1 <= 3".into());
    }
    let Some(&(_, s)) = plateau_positions(h).iter().find(|p| p.0 == d) else {
        return Err(format!(
            "no flat run of length >= 2 followed by a rise starts at d = {d}"
        ));
    };
    let hd = h.get(d);
    let i = hd as i64 - (d + s - 1) as i64;
    if i < 1 {
        return Err(format!("run at d = {d}, s = {s}: i = {i} < 1"));
    }
    let trunc = h
        .truncated(d + s - 1)
        .extended(hd + 1)
        .map_err(|e| e.to_string())?;
    if !is_o_sequence(&trunc).is_valid() {
        return Err(format!(
            "run at d = {d}: truncation ({trunc}) is not an O-sequence"
        ));
    }
    let tv = typevector_from_hf(&trunc)
        .map_err(|e| format!("run at d = {d}, s = {s}: extraction failed on ({trunc}): {e}"))?;
    let parts = tv.children();
    if parts.len() < 2 {
        return Err(format!(
            "run at d = {d}, s = {s}: {tv} has fewer than two parts"
        ));
    }
    let a_prev = parts[parts.len() - 2].alpha();
    if i > a_prev {
        return Err(format!(
            "run at d = {d}, s = {s}: i = {i} exceeds alpha(T_alpha-1) = {a_prev} for {tv}"
        ));
    }
    let mut evidence = vec![format!(
        "h_{d} = … = h_{} = {hd} < h_{} = {}; i = {i} <= alpha(T_alpha-1) = {a_prev}; socle in degree {}",
        d + s - 1,
        d + s,
        h.get(d + s),
        d + s - 2
    )];
    evidence.push(format!("type vector of ({trunc}): {tv}"));
    match flat_run_typevectors(d, s, i as usize) {
        Ok(closed) => {
            let top = parts[parts.len() - 1].entries().unwrap_or_default();
            let prev = parts[parts.len() - 2].entries().unwrap_or_default();
            let agree = top == closed.top && prev.ends_with(&closed.tail);
            evidence.push(format!(
                "closed form: {closed} ({})",
                if agree {
                    "matches extraction"
                } else {
                    "differs from extraction"
                }
            ));
        }
        Err(e) => evidence.push(format!("closed form unavailable: {e}")),
    }
    Ok(Finding {
        criterion: Criterion::PlateauJump,
        d,
        s: Some(s),
        i: Some(i),
        j: None,
        socle_degrees: BTreeSet::from([d + s - 2]),
        evidence,
    })
}

pub fn check_plateau_jump(h: &OSequence) -> CriterionReport {
    let criterion = Criterion::PlateauJump;
    if !codim_at_most_3(h) {
        return CriterionReport {
            criterion,
            finding: None,
            notes: vec!["T062: needs h_1 <= 3".into()],
        };
    }
    let mut notes = Vec::new();
    let mut hits = Vec::new();
    for (d, _) in plateau_positions(h) {
        match plateau_jump_at(h, d) {
            Ok(f) => hits.push(f),
            Err(why) => notes.push(format!("T062: {why}")),
        }
    }
    if hits.is_empty() && notes.is_empty() {
        notes.push("T062: no flat run of length >= 2 followed by a rise".into());
    }
    let mut it = hits.into_iter();
    let mut finding = it.next();
    let others: Vec<String> = it.map(|f| f.d.to_string()).collect();
    if let (Some(f), false) = (finding.as_mut(), others.is_empty()) {
        f.evidence
            .push(format!("T062 also fires at d = {}", others.join(", ")));
    }
    CriterionReport {
        criterion,
        finding,
        notes,
    }
}

pub fn check_betti_bound(h: &OSequence) -> Result<CriterionReport> {
    let criterion = Criterion::BettiBound;
    let n = (h.codim() as usize).max(3);
    let ideal = MonomialIdeal::lex(h, n)?;
    let table = ek_betti(&ideal)?;
    let bounds = cancellation_bounds(&table)?;
    let top = h.socle_degree();
    let hits: Vec<_> = bounds
        .iter()
        .filter(|b| b.lower_bound > 0 && b.socle_degree < top)
        .collect();
    if hits.is_empty() {
        let shown: Vec<String> = bounds
            .iter()
            .map(|b| format!("shift {}: {}", b.shift, b.lower_bound))
            .collect();
        return Ok(CriterionReport {
            criterion,
            finding: None,
            notes: vec![format!(
                "BettiBound: no positive bound below the top degree ({})",
                shown.join(", ")
            )],
        });
    }
    let evidence = hits
        .iter()
        .map(|b| {
            format!(
                "beta_({0},{1}) - beta_({2},{1}) = {3} > 0 in the lex resolution over {n} variables: socle in degree {4}",
                n - 1,
                b.shift,
                n - 2,
                b.lower_bound,
                b.socle_degree
            )
        })
        .collect();
    Ok(CriterionReport {
        criterion,
        finding: Some(Finding {
            criterion,
            d: hits[0].shift,
            s: None,
            i: None,
            j: None,
            socle_degrees: hits.iter().map(|b| b.socle_degree).collect(),
            evidence,
        }),
        notes: Vec::new(),
    })
}

pub fn check_typevector_shift(h: &OSequence) -> CriterionReport {
    let criterion = Criterion::TypeVectorShift;
    let fail = |why: String| CriterionReport {
        criterion,
        finding: None,
        notes: vec![format!("TypeVectorShift: {why}")],
    };
    if !codim_at_most_3(h) {
        return fail("needs h_1 <= 3".into());
    }
    let tv = match typevector_from_hf(h) {
        Ok(t) => t,
        Err(e) => return fail(e.to_string()),
    };
    let report = match shift_report_p3(&tv) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let witnesses = report.witnesses();
    if witnesses.is_empty() {
        return fail(format!(
            "{tv} has no noncancelable shift below the top degree"
        ));
    }
    let flagged: Vec<_> = report
        .noncancelable
        .iter()
        .filter(|f| f.socle_degree >= 0 && (f.socle_degree as usize) < report.top_degree)
        .collect();
    let mut evidence = vec![format!("type vector {tv}")];
    evidence.extend(flagged.iter().map(|f| {
        format!(
            "shift {} ({}): socle in degree {}",
            f.shift, f.rule, f.socle_degree
        )
    }));
    CriterionReport {
        criterion,
        finding: Some(Finding {
            criterion,
            d: flagged.iter().map(|f| f.shift as usize).min().unwrap(),
            s: None,
            i: None,
            j: None,
            socle_degrees: witnesses.into_iter().collect(),
            evidence,
        }),
        notes: Vec::new(),
    }
}

/// Either a certificate or the reasons none was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LevelVerdict {
    NotLevel(Finding),
    Unknown { diagnostics: Vec<String> },
}

impl LevelVerdict {
    pub fn is_not_level(&self) -> bool {
        matches!(self, LevelVerdict::NotLevel(_))
    }

    pub fn finding(&self) -> Option<&Finding> {
        match self {
            LevelVerdict::NotLevel(f) => Some(f),
            LevelVerdict::Unknown { .. } => None,
        }
    }
}

#[derive(Serialize)]
struct VerdictJson<'a> {
    verdict: &'static str,
    criterion: Option<Criterion>,
    d: Option<usize>,
    s: Option<usize>,
    i: Option<i64>,
    j: Option<u64>,
    socle_degrees: Vec<usize>,
    evidence: &'a [String],
}

impl Serialize for LevelVerdict {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let v = match self {
            LevelVerdict::NotLevel(f) => VerdictJson {
                verdict: "NotLevel",
                criterion: Some(f.criterion),
                d: Some(f.d),
                s: f.s,
                i: f.i,
                j: f.j,
                socle_degrees: f.socle_degrees.iter().copied().collect(),
                evidence: &f.evidence,
            },
            LevelVerdict::Unknown { diagnostics } => VerdictJson {
                verdict: "Unknown",
                criterion: None,
                d: None,
                s: None,
                i: None,
                j: None,
                socle_degrees: Vec::new(),
                evidence: diagnostics,
            },
        };
        v.serialize(ser)
    }
}

/// Runs every criterion and returns the first certificate in
/// [`Criterion::ALL`] order; all other fired criteria are appended to its
/// evidence.
pub fn level_check(h: &OSequence) -> Result<LevelVerdict> {
    if let Some(v) = is_o_sequence(h).violation {
        return Err(Error::NotOSequence {
            degree: v.degree,
            value: v.value,
            bound: v.bound.to_string(),
        });
    }
    let reports = Criterion::ALL
        .iter()
        .map(|c| c.check(h))
        .collect::<Result<Vec<_>>>()?;
    let mut fired = reports.iter().filter_map(|r| r.finding.as_ref());
    let Some(first) = fired.next() else {
        return Ok(LevelVerdict::Unknown {
            diagnostics: reports.into_iter().flat_map(|r| r.notes).collect(),
        });
    };
    let mut f = first.clone();
    let top = h.socle_degree();
    if f.socle_degrees.is_empty() || f.socle_degrees.iter().all(|&s| s >= top) {
        return Err(Error::Internal(format!(
            "{} produced no socle degree below {top} for ({h})",
            f.criterion
        )));
    }
    for other in fired {
        let degs: Vec<String> = other.socle_degrees.iter().map(usize::to_string).collect();
        f.evidence.push(format!(
            "also fired: {} at d = {}, socle degrees {{{}}}",
            other.criterion,
            other.d,
            degs.join(",")
        ));
    }
    Ok(LevelVerdict::NotLevel(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u64]) -> OSequence {
        OSequence::validated(v.to_vec()).unwrap()
    }

    fn fires(c: Criterion, v: &[u64]) -> Option<Finding> {
        c.check(&seq(v)).unwrap().finding
    }

    #[test]
    fn drop_flat_low_examples() {
        let f = fires(Criterion::DropFlatLow, &[1, 3, 2, 2]).unwrap();
        assert_eq!((f.d, f.socle_degrees.clone()), (2, BTreeSet::from([1])));
        assert!(fires(Criterion::DropFlatLow, &[1, 3, 3, 3]).is_none());
        assert!(fires(Criterion::DropFlatLow, &[1, 3, 6, 10, 15, 21, 17, 16, 16]).is_none());
        // any codimension
        assert!(fires(Criterion::DropFlatLow, &[1, 5, 3, 3]).is_some());
    }

    #[test]
    fn drop_flat_examples() {
        let f = fires(Criterion::DropFlat, &[1, 3, 6, 10, 15, 21, 17, 16, 16]).unwrap();
        assert_eq!((f.d, f.i, f.j), (7, Some(9), Some(1)));
        assert_eq!(f.socle_degrees, BTreeSet::from([6]));
        assert!(fires(Criterion::DropFlat, &[1, 3, 6, 10, 15, 21, 18, 17, 17]).is_none());

        let f = fires(Criterion::DropFlat, &[1, 3, 6, 10, 14, 18, 16, 14, 14]).unwrap();
        assert_eq!((f.d, f.i, f.j), (7, Some(7), Some(2)));
        assert!(f
            .evidence
            .iter()
            .any(|e| e.contains("beta_(2,9) = 3 > beta_(1,9) = 2")));
        assert!(fires(Criterion::DropFlat, &[1, 5, 3, 3]).is_none());
    }

    #[test]
    fn maximal_growth_note() {
        let f = fires(Criterion::DropFlat, &[1, 3, 6, 10, 15, 21, 17, 16, 16]).unwrap();
        assert!(f.evidence.iter().any(|e| e.contains("(agree)")));
    }

    #[test]
    fn drop_rise_examples() {
        for last in [16, 17, 18] {
            let f = fires(Criterion::DropRise, &[1, 3, 6, 10, 14, 18, 17, 16, last]).unwrap();
            assert_eq!((f.d, f.socle_degrees.clone()), (7, BTreeSet::from([6])));
        }
        let h = [1, 3, 6, 10, 14, 18, 17, 16, 15];
        assert!(drop_rise_at(&seq(&h), 7).is_none());
    }

    #[test]
    fn plateau_examples() {
        let f = fires(Criterion::PlateauJump, &[1, 3, 6, 8, 9, 9, 9, 10]).unwrap();
        assert_eq!((f.d, f.s, f.i), (4, Some(3), Some(3)));
        assert_eq!(f.socle_degrees, BTreeSet::from([5]));
        assert!(f.evidence.iter().any(|e| e.contains("matches extraction")));
        assert!(fires(Criterion::PlateauJump, &[1, 3, 6, 8, 9, 9, 9, 9]).is_none());

        let f = fires(Criterion::PlateauJump, &[1, 3, 5, 6, 6, 7]).unwrap();
        assert_eq!((f.d, f.s, f.i), (3, Some(2), Some(2)));
        assert_eq!(f.socle_degrees, BTreeSet::from([3]));
    }

    #[test]
    fn plateau_positions_are_maximal_runs() {
        assert_eq!(
            plateau_positions(&seq(&[1, 3, 6, 8, 9, 9, 9, 10])),
            vec![(4, 3)]
        );
        let two_runs = OSequence::new(vec![1, 2, 2, 3, 3, 4]).unwrap();
        assert_eq!(plateau_positions(&two_runs), vec![(1, 2), (3, 2)]);
        assert!(plateau_positions(&seq(&[1, 3, 3])).is_empty());
    }

    #[test]
    fn verdicts() {
        let v = level_check(&seq(&[1, 3, 6, 10, 15, 21, 18, 17, 17])).unwrap();
        assert!(!v.is_not_level());
        let v = level_check(&seq(&[1, 3, 6, 8, 9, 9, 9, 10])).unwrap();
        let f = v.finding().unwrap();
        assert_eq!(f.criterion, Criterion::PlateauJump);
        assert!(f
            .evidence
            .iter()
            .any(|e| e.starts_with("also fired: BettiBound")));
        assert!(!level_check(&seq(&[1, 3, 3, 1])).unwrap().is_not_level());
        assert!(matches!(
            level_check(&OSequence::new(vec![1, 3, 6, 11]).unwrap()),
            Err(Error::NotOSequence { degree: 3, .. })
        ));
    }

    #[test]
    fn findings_revalidate() {
        for v in [
            &[1u64, 3, 2, 2][..],
            &[1, 3, 6, 10, 15, 21, 17, 16, 16],
            &[1, 3, 6, 10, 14, 18, 17, 16, 18],
            &[1, 3, 6, 8, 9, 9, 9, 10],
        ] {
            let h = seq(v);
            for c in Criterion::ALL {
                if let Some(f) = c.check(&h).unwrap().finding {
                    assert!(f.revalidate(&h), "{c} on {h}");
                }
            }
        }
    }

    #[test]
    fn verdict_json_shape() {
        let v = level_check(&seq(&[1, 3, 2, 2])).unwrap();
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.contains("\"verdict\":\"NotLevel\""));
        assert!(s.contains("\"criterion\":\"P006\""));
        assert!(s.contains("\"socle_degrees\":[1]"));
    }
}
