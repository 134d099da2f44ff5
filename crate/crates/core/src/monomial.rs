//! Monomials under descending lex order (`x1 > x2 > … > xn`) and
//! degree-sliced monomial ideals, lex-segment ideals in particular.

use std::collections::BTreeMap;
use std::fmt;

use crate::binomial::{binom_u64, is_o_sequence, OSequence};
use crate::error::{Error, Result};

/// `x1^e1 * … * xn^en`. Ordering is lexicographic on the exponent vector,
/// which is lex order with `x1` largest when degrees agree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    /// Largest (1-based) index of a variable dividing the monomial.
    pub fn m_index(&self) -> Result<usize> {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|p| p + 1)
            .ok_or_else(|| Error::OutOfRange("m(T) is undefined for the monomial 1".into()))
    }

    /// Multiplies by `x_{var+1}` (0-based `var`).
    pub fn times_var(&self, var: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[var] += 1;
        Monomial { exps }
    }

    /// Divides by `x_{var+1}` if it divides.
    pub fn div_var(&self, var: usize) -> Option<Monomial> {
        if self.exps[var] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[var] -= 1;
        Some(Monomial { exps })
    }

    /// Parses `x1^2*x3`, `x2`, or `1` in `n` variables.
    pub fn parse(s: &str, n: usize) -> Result<Monomial> {
        let s = s.trim();
        let mut exps = vec![0u32; n];
        if s == "1" {
            return Ok(Monomial { exps });
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let bad = || Error::MalformedMonomial(format!("bad factor {factor:?}"));
            let rest = factor.strip_prefix('x').ok_or_else(bad)?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let var: usize = var.parse().map_err(|_| bad())?;
            if var == 0 || var > n {
                return Err(Error::MalformedMonomial(format!(
                    "variable x{var} outside x1..x{n}"
                )));
            }
            exps[var - 1] += exp;
        }
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `n` variables, in descending lex order.
pub fn all_monomials(n: usize, d: usize) -> Vec<Monomial> {
    assert!(n >= 1, "need at least one variable");
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill(&mut cur, 0, d as u32, &mut out);
    out
}

fn fill(cur: &mut [u32], pos: usize, rest: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(Monomial::new(cur.to_vec()));
        return;
    }
    for e in (0..=rest).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, rest - e, out);
    }
}

/// `dim R_d = C(d + n - 1, n - 1)`.
pub fn count_monomials(n: usize, d: usize) -> u64 {
    binom_u64((d + n - 1) as u64, (n - 1) as u64).expect("monomial count overflow")
}

/// A monomial ideal stored slice by slice up to `max_degree`.
///
/// Each stored slice is sorted in descending lex order. When `artinian` is
/// set, every monomial of degree above `max_degree` belongs to the ideal;
/// otherwise nothing is known past `max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    slices: Vec<Vec<Monomial>>,
    artinian: bool,
}

impl MonomialIdeal {
    /// The lex-segment ideal whose quotient has Hilbert function `h`.
    ///
    /// Slice `d` is the first `dim R_d - h_d` monomials of degree `d`.
    /// Slices are stored through `socle degree + 2`; above that the ideal is
    /// everything.
    pub fn lex(h: &OSequence, n: usize) -> Result<MonomialIdeal> {
        if let Some(v) = is_o_sequence(h).violation {
            return Err(Error::NotOSequence {
                degree: v.degree,
                value: v.value,
                bound: v.bound.to_string(),
            });
        }
        if n == 0 || h.codim() > n as u64 {
            return Err(Error::TooFewVariables {
                codim: h.codim(),
                vars: n,
            });
        }
        let max_degree = h.socle_degree() + 2;
        let slices = (0..=max_degree)
            .map(|d| {
                let mut all = all_monomials(n, d);
                let keep = all.len() - h.get(d) as usize;
                all.truncate(keep);
                all
            })
            .collect();
        Ok(MonomialIdeal {
            n,
            slices,
            artinian: true,
        })
    }

    /// The maximal ideal `(x1, …, xn)`.
    pub fn maximal(n: usize) -> MonomialIdeal {
        MonomialIdeal::lex(&OSequence::new(vec![1]).unwrap(), n).unwrap()
    }

    /// The ideal generated by `gens`, stored through `max_degree` and not
    /// treated as Artinian.
    pub fn from_generators(n: usize, gens: &[Monomial], max_degree: usize) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::MalformedMonomial(format!(
                "{g} does not live in {n} variables"
            )));
        }
        let slices = (0..=max_degree)
            .map(|d| {
                all_monomials(n, d)
                    .into_iter()
                    .filter(|m| gens.iter().any(|g| divides(g, m)))
                    .collect()
            })
            .collect();
        Ok(MonomialIdeal {
            n,
            slices,
            artinian: false,
        })
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.slices.len() - 1
    }

    pub fn is_artinian(&self) -> bool {
        self.artinian
    }

    /// The stored slice `I_d`. For an Artinian ideal and `d > max_degree`
    /// this is all of `R_d`; otherwise it is empty past the stored range.
    pub fn slice(&self, d: usize) -> Vec<Monomial> {
        match self.slices.get(d) {
            Some(s) => s.clone(),
            None if self.artinian => all_monomials(self.n, d),
            None => Vec::new(),
        }
    }

    pub fn stored_slice(&self, d: usize) -> &[Monomial] {
        self.slices.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        match self.slices.get(m.degree()) {
            Some(s) => s.binary_search_by(|p| m.cmp(p)).is_ok(),
            None => self.artinian,
        }
    }

    /// Monomials of degree `d` outside the ideal (a basis of `(R/I)_d`).
    pub fn standard_monomials(&self, d: usize) -> Vec<Monomial> {
        if d > self.max_degree() && self.artinian {
            return Vec::new();
        }
        all_monomials(self.n, d)
            .into_iter()
            .filter(|m| !self.contains(m))
            .collect()
    }

    /// `G(I)_d = I_d \ R_1 I_{d-1}` for each stored degree with generators.
    pub fn minimal_generators(&self) -> BTreeMap<usize, Vec<Monomial>> {
        let mut out = BTreeMap::new();
        for (d, slice) in self.slices.iter().enumerate() {
            let gens: Vec<_> = slice
                .iter()
                .filter(|m| {
                    d == 0
                        || !(0..self.n)
                            .filter_map(|v| m.div_var(v))
                            .any(|q| self.contains(&q))
                })
                .cloned()
                .collect();
            if !gens.is_empty() {
                out.insert(d, gens);
            }
        }
        out
    }

    /// Strong stability: `x_i T / x_{m(T)} ∈ I` for each stored `T` and
    /// each `i < m(T)`.
    pub fn is_stable(&self) -> bool {
        self.slices.iter().flatten().all(|t| {
            let Ok(m) = t.m_index() else { return true };
            let base = t.div_var(m - 1).unwrap();
            (0..m - 1).all(|i| self.contains(&base.times_var(i)))
        })
    }
}

fn divides(a: &Monomial, b: &Monomial) -> bool {
    a.exps.iter().zip(&b.exps).all(|(x, y)| x <= y)
}

/// Closed form for the lex-smallest monomial of `I_d` in three variables,
/// where the lex-segment ideal has `h_d = d + i`.
///
/// With `U_l = l*d - l*(l-1)/2` and `l` the least index with `i ≤ U_l`, the
/// answer is `x1^l * x2^(i - U_{l-1} - 1) * x3^(U_l - i)`.
pub fn last_monomial_of_slice(d: usize, i: usize) -> Result<Monomial> {
    let top = (d * d + d) / 2;
    if d == 0 || i == 0 || i > top {
        return Err(Error::OutOfRange(format!(
            "need 1 <= i <= (d^2+d)/2 = {top}, got d = {d}, i = {i}"
        )));
    }
    let upper = |l: usize| l * d - l * (l.saturating_sub(1)) / 2;
    let l = (1..=d).find(|&l| i <= upper(l)).unwrap();
    let lower = upper(l - 1) + 1;
    Ok(Monomial::new(vec![
        l as u32,
        (i - lower) as u32,
        (upper(l) - i) as u32,
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> Monomial {
        Monomial::parse(s, 3).unwrap()
    }

    fn seq(v: &[u64]) -> OSequence {
        OSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_in_descending_lex() {
        let d1: Vec<String> = all_monomials(3, 1).iter().map(|m| m.to_string()).collect();
        assert_eq!(d1, ["x1", "x2", "x3"]);
        let d2: Vec<String> = all_monomials(3, 2).iter().map(|m| m.to_string()).collect();
        assert_eq!(d2, ["x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        assert_eq!(all_monomials(3, 7).len(), 36);
        let d5 = all_monomials(4, 5);
        assert_eq!(d5.len() as u64, count_monomials(4, 5));
        assert!(d5.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn m_index_values() {
        assert_eq!(mono("x1*x2*x3^4").m_index().unwrap(), 3);
        assert_eq!(mono("x1^7").m_index().unwrap(), 1);
        assert_eq!(mono("x1^2*x2").m_index().unwrap(), 2);
        assert!(Monomial::one(3).m_index().is_err());
    }

    #[test]
    fn text_format() {
        assert_eq!(mono("x1^2*x2*x3^3").to_string(), "x1^2*x2*x3^3");
        assert_eq!(mono("x2^1").to_string(), "x2");
        assert_eq!(Monomial::one(3).to_string(), "1");
        assert_eq!(mono("1"), Monomial::one(3));
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("y1", 3).is_err());
        assert!(Monomial::parse("x1^", 3).is_err());
    }

    #[test]
    fn lex_ideal_small() {
        let i = MonomialIdeal::lex(&seq(&[1, 3, 2, 2]), 3).unwrap();
        let i2: Vec<String> = i.stored_slice(2).iter().map(|m| m.to_string()).collect();
        assert_eq!(i2, ["x1^2", "x1*x2", "x1*x3", "x2^2"]);
        assert_eq!(i.stored_slice(3).len(), 8);
        assert!(!i.contains(&mono("x2*x3^2")));
        assert!(!i.contains(&mono("x3^3")));
        assert!(i.contains(&mono("x2^2*x3")));
        assert_eq!(i.max_degree(), 5);
        assert!(i.contains(&mono("x3^9")));
    }

    #[test]
    fn lex_ideal_slice_sizes() {
        let i = MonomialIdeal::lex(&seq(&[1, 3, 6, 10, 15, 21, 17, 16, 16]), 3).unwrap();
        assert_eq!(i.stored_slice(6).len(), 11);
        assert!(i.stored_slice(5).is_empty());
        let g = i.minimal_generators();
        assert_eq!(g[&6].len(), 11);
        assert!(!g.contains_key(&5));
    }

    #[test]
    fn lex_ideal_rejects_bad_input() {
        assert!(MonomialIdeal::lex(&seq(&[1, 3, 6, 11]), 3).is_err());
        assert!(matches!(
            MonomialIdeal::lex(&seq(&[1, 4, 2]), 3),
            Err(Error::TooFewVariables { .. })
        ));
    }

    #[test]
    fn maximal_ideal() {
        let m = MonomialIdeal::maximal(3);
        let g = m.minimal_generators();
        assert_eq!(g.len(), 1);
        let g1: Vec<String> = g[&1].iter().map(|m| m.to_string()).collect();
        assert_eq!(g1, ["x1", "x2", "x3"]);
        assert!(m.is_stable());
    }

    #[test]
    fn generators_of_small_lex_ideal() {
        let i = MonomialIdeal::lex(&seq(&[1, 3, 2, 2]), 3).unwrap();
        let g = i.minimal_generators();
        let show = |d: usize| -> Vec<String> { g[&d].iter().map(|m| m.to_string()).collect() };
        assert_eq!(show(2), ["x1^2", "x1*x2", "x1*x3", "x2^2"]);
        assert!(!g.contains_key(&3));
        assert_eq!(show(4), ["x2*x3^3", "x3^4"]);
        assert_eq!(g.keys().copied().collect::<Vec<_>>(), vec![2, 4]);
    }

    #[test]
    fn stability() {
        let i = MonomialIdeal::from_generators(3, &[mono("x2^2")], 4).unwrap();
        assert!(!i.is_stable());
        assert!(!i.is_artinian());
        let lex = MonomialIdeal::lex(&seq(&[1, 3, 5, 6, 6, 7]), 3).unwrap();
        assert!(lex.is_stable());
    }

    #[test]
    fn last_monomial_closed_form() {
        assert_eq!(last_monomial_of_slice(7, 9).unwrap(), mono("x1^2*x2*x3^4"));
        for d in 1..8 {
            let expect = Monomial::new(vec![1, d as u32 - 1, 0]);
            assert_eq!(last_monomial_of_slice(d, d).unwrap(), expect);
        }
        assert_eq!(last_monomial_of_slice(4, 10).unwrap(), mono("x1^4"));
        assert!(last_monomial_of_slice(4, 11).is_err());
        assert!(last_monomial_of_slice(4, 0).is_err());
    }
}
