//! Type vectors of k-configurations, their Hilbert functions, and the
//! resolution shifts that cannot cancel.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::binomial::OSequence;
use crate::error::{Error, Result};

/// An n-type vector. `Unit` is the 0-type vector, `Leaf(d)` the 1-type
/// vector `(d)`, and `Node` an ordered list of (n-1)-type vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeVector {
    Unit,
    Leaf(u32),
    Node(Vec<TypeVector>),
}

impl TypeVector {
    /// 2-type vector from its entries.
    pub fn two(ds: &[u32]) -> TypeVector {
        TypeVector::Node(ds.iter().map(|&d| TypeVector::Leaf(d)).collect())
    }

    /// 3-type vector from the entries of its 2-type parts.
    pub fn three(parts: &[&[u32]]) -> TypeVector {
        TypeVector::Node(parts.iter().map(|p| TypeVector::two(p)).collect())
    }

    pub fn level(&self) -> usize {
        match self {
            TypeVector::Unit => 0,
            TypeVector::Leaf(_) => 1,
            TypeVector::Node(ch) => 1 + ch.first().map_or(1, TypeVector::level),
        }
    }

    pub fn alpha(&self) -> i64 {
        match self {
            TypeVector::Unit => -1,
            TypeVector::Leaf(d) => *d as i64,
            TypeVector::Node(ch) => ch.len() as i64,
        }
    }

    pub fn sigma(&self) -> i64 {
        match self {
            TypeVector::Unit => 1,
            TypeVector::Leaf(d) => *d as i64,
            TypeVector::Node(ch) => ch.last().map_or(0, TypeVector::sigma),
        }
    }

    pub fn children(&self) -> &[TypeVector] {
        match self {
            TypeVector::Node(ch) => ch,
            _ => &[],
        }
    }

    /// Entries `d_1 < … < d_m` of a 2-type vector.
    pub fn entries(&self) -> Option<Vec<u32>> {
        match self {
            TypeVector::Node(ch) => ch
                .iter()
                .map(|c| match c {
                    TypeVector::Leaf(d) => Some(*d),
                    _ => None,
                })
                .collect(),
            _ => None,
        }
    }

    /// Checks positivity, uniform nesting and `σ(T_i) < α(T_{i+1})` at every
    /// level, reporting the first violation.
    pub fn validate(&self) -> Result<()> {
        match self {
            TypeVector::Unit => Ok(()),
            TypeVector::Leaf(0) => Err(Error::InvalidTypeVector("1-type vector (0)".into())),
            TypeVector::Leaf(_) => Ok(()),
            TypeVector::Node(ch) => {
                if ch.is_empty() {
                    return Err(Error::InvalidTypeVector("empty type vector".into()));
                }
                let lvl = ch[0].level();
                for c in ch {
                    if matches!(c, TypeVector::Unit) {
                        return Err(Error::InvalidTypeVector(
                            "the 0-type vector cannot be a part".into(),
                        ));
                    }
                    if c.level() != lvl {
                        return Err(Error::InvalidTypeVector(format!(
                            "parts of mixed level in {self}"
                        )));
                    }
                    c.validate()?;
                }
                for (k, w) in ch.windows(2).enumerate() {
                    if w[0].sigma() >= w[1].alpha() {
                        return Err(Error::InvalidTypeVector(format!(
                            "part {}: sigma {} is not below alpha {} of the next part",
                            k + 1,
                            w[0].sigma(),
                            w[1].alpha()
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeVector::Unit => write!(f, "()"),
            TypeVector::Leaf(d) => write!(f, "{d}"),
            TypeVector::Node(ch) => {
                write!(f, "(")?;
                for (k, c) in ch.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl Serialize for TypeVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for TypeVector {
    type Err = Error;

    /// Nested parentheses: `5` is a leaf, `(2,5)` a 2-type vector,
    /// `((2),(1,3,6,7))` a 3-type vector, `()` the 0-type vector.
    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<char> = s.chars().collect();
        let mut pos = 0;
        let tv = parse_tv(&toks, &mut pos)?;
        skip_ws(&toks, &mut pos);
        if pos != toks.len() {
            return Err(Error::MalformedTypeVector(format!(
                "trailing input at position {pos} in {s:?}"
            )));
        }
        Ok(tv)
    }
}

fn skip_ws(t: &[char], pos: &mut usize) {
    while t.get(*pos).is_some_and(|c| c.is_whitespace()) {
        *pos += 1;
    }
}

fn parse_tv(t: &[char], pos: &mut usize) -> Result<TypeVector> {
    let bad = |msg: &str, at: usize| Error::MalformedTypeVector(format!("{msg} at position {at}"));
    skip_ws(t, pos);
    match t.get(*pos) {
        Some('(') => {
            *pos += 1;
            skip_ws(t, pos);
            if t.get(*pos) == Some(&')') {
                *pos += 1;
                return Ok(TypeVector::Unit);
            }
            let mut ch = vec![parse_tv(t, pos)?];
            loop {
                skip_ws(t, pos);
                match t.get(*pos) {
                    Some(',') => {
                        *pos += 1;
                        ch.push(parse_tv(t, pos)?);
                    }
                    Some(')') => {
                        *pos += 1;
                        return Ok(TypeVector::Node(ch));
                    }
                    _ => return Err(bad("expected ',' or ')'", *pos)),
                }
            }
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while t.get(*pos).is_some_and(|c| c.is_ascii_digit()) {
                *pos += 1;
            }
            let s: String = t[start..*pos].iter().collect();
            s.parse()
                .map(TypeVector::Leaf)
                .map_err(|_| bad("integer out of range", start))
        }
        _ => Err(bad("expected '(' or a digit", *pos)),
    }
}

/// Level-2 count `H(t) = #{j : m-j ≤ t ≤ m-j+d_j-1}`.
fn hf_two(ds: &[u32]) -> Vec<u64> {
    let m = ds.len();
    let len = ds
        .iter()
        .enumerate()
        .map(|(k, &d)| m - (k + 1) + d as usize)
        .max()
        .unwrap_or(0);
    let mut h = vec![0u64; len];
    for (k, &d) in ds.iter().enumerate() {
        let start = m - (k + 1);
        for v in &mut h[start..start + d as usize] {
            *v += 1;
        }
    }
    h
}

fn hf_values(t: &TypeVector) -> Result<Vec<u64>> {
    t.validate()?;
    match t {
        TypeVector::Unit => Ok(vec![1]),
        TypeVector::Leaf(d) => Ok(vec![1; *d as usize]),
        TypeVector::Node(ch) => match t.level() {
            2 => Ok(hf_two(&t.entries().unwrap())),
            3 => {
                let a = ch.len();
                let mut h: Vec<u64> = Vec::new();
                for (k, c) in ch.iter().enumerate() {
                    let shift = a - (k + 1);
                    let part = hf_two(&c.entries().unwrap());
                    if h.len() < shift + part.len() {
                        h.resize(shift + part.len(), 0);
                    }
                    for (t, v) in part.into_iter().enumerate() {
                        h[t + shift] += v;
                    }
                }
                Ok(h)
            }
            l => Err(Error::OutOfRange(format!(
                "Hilbert functions are supported through level 3, got level {l}"
            ))),
        },
    }
}

/// The Artinian (first-difference) Hilbert function of a k-configuration of
/// the given type.
pub fn hf_from_typevector(t: &TypeVector) -> Result<OSequence> {
    OSequence::new(hf_values(t)?)
}

/// Inverse of the level-2 count: `row` must read `1,2,…,m` followed by a
/// nonincreasing tail.
fn decode_row(row: &[u64]) -> Result<Vec<u32>> {
    let m = row
        .iter()
        .enumerate()
        .take_while(|&(t, &v)| v == t as u64 + 1)
        .count();
    if m == 0 {
        return Err(Error::NotDecomposable(
            "peeled row does not start at 1".into(),
        ));
    }
    if row[m - 1..].windows(2).any(|w| w[1] > w[0]) {
        return Err(Error::NotDecomposable(format!(
            "peeled row {row:?} increases after its initial run"
        )));
    }
    Ok((1..=m)
        .map(|j| {
            let need = (m - j + 1) as u64;
            let end = row.iter().rposition(|&v| v >= need).unwrap();
            (end + j + 1 - m) as u32
        })
        .collect())
}

/// Level-3 type vector whose Hilbert function is `h`, by greedy peeling of
/// the top row `min(t+1, remainder(t))`.
///
/// The result is always checked to reproduce `h`; anything else is reported
/// as [`Error::NotDecomposable`].
pub fn typevector_from_hf(h: &OSequence) -> Result<TypeVector> {
    if h.codim() > 3 {
        return Err(Error::OutOfRange(format!(
            "extraction needs h_1 <= 3, got {}",
            h.codim()
        )));
    }
    let mut rem: Vec<u64> = h.values().to_vec();
    let mut parts = Vec::new();
    while !rem.is_empty() {
        let row: Vec<u64> = rem
            .iter()
            .enumerate()
            .map(|(t, &v)| v.min(t as u64 + 1))
            .collect();
        let end = row.iter().rposition(|&v| v > 0).map_or(0, |p| p + 1);
        parts.push(TypeVector::two(&decode_row(&row[..end])?));
        for (r, v) in rem.iter_mut().zip(&row) {
            *r -= v;
        }
        if rem[0] != 0 {
            return Err(Error::NotDecomposable(format!(
                "{} points left in degree 0 after peeling",
                rem[0]
            )));
        }
        rem.remove(0);
        while rem.last() == Some(&0) {
            rem.pop();
        }
    }
    parts.reverse();
    let tv = TypeVector::Node(parts);
    tv.validate()
        .map_err(|e| Error::NotDecomposable(format!("peeled {tv}: {e}")))?;
    if hf_values(&tv)? != h.values() {
        return Err(Error::NotDecomposable(format!(
            "{tv} does not reproduce {h}"
        )));
    }
    Ok(tv)
}

/// The two parts of the 3-type vector forced by a flat run of length `s`
/// starting in degree `d` whose successor rises by one, with
/// `i = h_d - (d+s-1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatRunTypes {
    /// `T_α = (1, 2, …, d+s+1)`.
    pub top: Vec<u32>,
    /// Last entries of `T_{α-1}`.
    pub tail: Vec<u32>,
}

impl fmt::Display for FlatRunTypes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "T_alpha = ({}), T_alpha-1 = (…,{})",
            join(&self.top),
            join(&self.tail)
        )
    }
}

pub fn flat_run_typevectors(d: usize, s: usize, i: usize) -> Result<FlatRunTypes> {
    if s < 2 || i < 1 || d < 1 {
        return Err(Error::OutOfRange(format!(
            "need d >= 1, s >= 2, i >= 1; got ({d},{s},{i})"
        )));
    }
    let n = (d + s) as u32;
    let i = i as u32;
    let tail = if i == 1 {
        vec![n - 2]
    } else {
        if n < i + 2 {
            return Err(Error::OutOfRange(format!(
                "i = {i} leaves a nonpositive entry d+s-(i+1)"
            )));
        }
        std::iter::once(n - (i + 1)).chain(n + 2 - i..=n).collect()
    };
    Ok(FlatRunTypes {
        top: (1..=n + 1).collect(),
        tail,
    })
}

/// A resolution shift that cannot cancel, with the rule that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlaggedShift {
    pub shift: i64,
    pub socle_degree: i64,
    pub rule: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ShiftReport {
    /// `ε_i = α(T_i) - i + α` (empty for 2-type vectors).
    pub epsilon: Vec<i64>,
    /// `((i, j), d_ij - j)`.
    pub dbar: Vec<((usize, usize), i64)>,
    pub noncancelable: Vec<FlaggedShift>,
    /// Socle degree of the associated Artinian sequence.
    pub top_degree: usize,
}

impl ShiftReport {
    pub fn noncancelable_shifts(&self) -> Vec<i64> {
        self.noncancelable.iter().map(|f| f.shift).collect()
    }

    pub fn socle_degrees(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.noncancelable.iter().map(|f| f.socle_degree).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Socle degrees strictly below the top one: these rule out levelness.
    pub fn witnesses(&self) -> Vec<usize> {
        self.socle_degrees()
            .into_iter()
            .filter(|&s| s >= 0 && (s as usize) < self.top_degree)
            .map(|s| s as usize)
            .collect()
    }
}

fn two_type_entries(t: &TypeVector) -> Result<Vec<u32>> {
    t.validate()?;
    match t.entries() {
        Some(e) if t.level() == 2 => Ok(e),
        _ => Err(Error::InvalidTypeVector(format!(
            "{t} is not a 2-type vector"
        ))),
    }
}

/// Shifts of the resolution of a k-configuration in the plane: the last
/// module has `d_i + α - i + 1`, the middle one `α` and `d_i + α - i`; a last
/// shift with no partner in the middle is noncancelable.
pub fn shift_report_p2(t: &TypeVector) -> Result<ShiftReport> {
    let ds = two_type_entries(t)?;
    let a = ds.len() as i64;
    let mut middle: Vec<i64> = std::iter::once(a)
        .chain(
            ds.iter()
                .enumerate()
                .map(|(k, &d)| d as i64 + a - (k as i64 + 1)),
        )
        .collect();
    let mut report = ShiftReport {
        top_degree: hf_values(t)?.len() - 1,
        dbar: ds
            .iter()
            .enumerate()
            .map(|(k, &d)| ((1, k + 1), d as i64 - (k as i64 + 1)))
            .collect(),
        ..Default::default()
    };
    for (k, &d) in ds.iter().enumerate() {
        let shift = d as i64 + a - k as i64;
        if let Some(p) = middle.iter().position(|&m| m == shift) {
            middle.swap_remove(p);
            continue;
        }
        let gap = ds.get(k + 1).is_some_and(|&e| e >= d + 3);
        report.noncancelable.push(FlaggedShift {
            shift,
            socle_degree: shift - 2,
            rule: if gap {
                format!("gap d_{} - d_{} >= 3", k + 2, k + 1)
            } else {
                "no matching middle shift".into()
            },
        });
    }
    Ok(report)
}

/// Noncancelable last-module shifts of a k-configuration in 3-space that
/// follow from gaps between and inside the parts of `t`.
pub fn shift_report_p3(t: &TypeVector) -> Result<ShiftReport> {
    t.validate()?;
    if t.level() != 3 {
        return Err(Error::InvalidTypeVector(format!(
            "{t} is not a 3-type vector"
        )));
    }
    let parts: Vec<Vec<u32>> = t.children().iter().map(|c| c.entries().unwrap()).collect();
    let a = parts.len() as i64;
    let mut report = ShiftReport {
        top_degree: hf_values(t)?.len() - 1,
        ..Default::default()
    };
    for (k, p) in parts.iter().enumerate() {
        let i = k as i64 + 1;
        let eps = p.len() as i64 - i + a;
        let sigma = *p.last().unwrap() as i64;
        report.epsilon.push(eps);
        for (jj, &d) in p.iter().enumerate() {
            report
                .dbar
                .push(((k + 1, jj + 1), d as i64 - (jj as i64 + 1)));
        }
        let mut flag = |shift: i64, rule: String| {
            report.noncancelable.push(FlaggedShift {
                shift,
                socle_degree: shift - 3,
                rule,
            })
        };
        for (jj, w) in p.windows(2).enumerate() {
            if w[1] >= w[0] + 3 {
                flag(
                    eps + 2 + w[0] as i64 - (jj as i64 + 1),
                    format!("gap inside part {}: d_{} - d_{} >= 3", i, jj + 2, jj + 1),
                );
            }
        }
        if let Some(next) = parts.get(k + 1) {
            if sigma + 2 < next.len() as i64 {
                flag(
                    sigma - i + a + 2,
                    format!("sigma(T_{i}) + 2 < alpha(T_{})", i + 1),
                );
            }
        }
        if k >= 1 {
            let prev_sigma = *parts[k - 1].last().unwrap() as i64;
            if p.len() as i64 == prev_sigma + 1 && p[0] >= 3 {
                flag(
                    prev_sigma - (i - 1) + a + 2,
                    format!("alpha(T_{i}) = sigma(T_{}) + 1 and d_{i}1 >= 3", i - 1),
                );
            }
        }
    }
    Ok(report)
}

/// All valid 3-type vectors with `σ ≤ max_sigma`.
pub fn enumerate_type_vectors3(max_sigma: u32) -> Vec<TypeVector> {
    let twos: Vec<Vec<u32>> = (1..=max_sigma)
        .flat_map(|sig| {
            (0u32..1 << (sig - 1)).map(move |mask| {
                let mut v: Vec<u32> = (1..sig).filter(|b| mask & (1 << (b - 1)) != 0).collect();
                v.push(sig);
                v
            })
        })
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..twos.len()).map(|k| vec![k]).collect();
    while let Some(suffix) = stack.pop() {
        let a = twos[suffix[0]].len() as u32;
        for (k, t) in twos.iter().enumerate() {
            if *t.last().unwrap() < a {
                let mut longer = vec![k];
                longer.extend(&suffix);
                stack.push(longer);
            }
        }
        out.push(TypeVector::Node(
            suffix.iter().map(|&k| TypeVector::two(&twos[k])).collect(),
        ));
    }
    out.sort();
    out
}
