//! Brute-force ground truth for monomial quotients.
//!
//! Nothing here uses lex structure or generator formulas: Hilbert functions
//! come from counting standard monomials, socles from membership tests, and
//! Betti numbers from ranks of Koszul boundary maps over a prime field.

use std::collections::{BTreeMap, HashMap};

use crate::binomial::OSequence;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::resolution::BettiTable;
use crate::sweep;

pub const DEFAULT_PRIME: u64 = 32003;

/// `h_d = #{degree-d monomials outside I}` for `d ≤ maxdeg`.
pub fn hilbert_function(ideal: &MonomialIdeal, maxdeg: usize) -> Result<OSequence> {
    let values = (0..=maxdeg)
        .map(|d| ideal.standard_monomials(d).len() as u64)
        .collect();
    OSequence::new(values)
}

/// Monomials `m ∉ I` with `x_i m ∈ I` for every variable, by degree.
pub fn socle_monomials(ideal: &MonomialIdeal) -> Result<BTreeMap<usize, Vec<Monomial>>> {
    if !ideal.is_artinian() {
        return Err(Error::NotArtinian);
    }
    let mut out = BTreeMap::new();
    for d in 0..=ideal.max_degree() {
        let soc: Vec<_> = ideal
            .standard_monomials(d)
            .into_iter()
            .filter(|m| (0..ideal.nvars()).all(|v| ideal.contains(&m.times_var(v))))
            .collect();
        if !soc.is_empty() {
            out.insert(d, soc);
        }
    }
    Ok(out)
}

/// Dense matrix over GF(p) representing one graded piece of a map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Internal degree of the piece.
    pub degree: usize,
    pub prime: u64,
    data: Vec<u64>,
}

impl GradedMatrix {
    pub fn zeros(rows: usize, cols: usize, degree: usize, prime: u64) -> Self {
        GradedMatrix {
            rows,
            cols,
            degree,
            prime,
            data: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    /// Adds a signed unit to entry `(r, c)`.
    fn add_sign(&mut self, r: usize, c: usize, negative: bool) {
        let p = self.prime;
        let e = &mut self.data[r * self.cols + c];
        *e = if negative {
            (*e + p - 1) % p
        } else {
            (*e + 1) % p
        };
    }

    pub fn mul(&self, rhs: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let p = self.prime;
        let mut out = GradedMatrix::zeros(self.rows, rhs.cols, self.degree, p);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols {
                    let idx = r * out.cols + c;
                    out.data[idx] = (out.data[idx] + a * rhs.get(k, c)) % p;
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank by Gaussian elimination mod `prime`.
    pub fn rank(&self) -> usize {
        let p = self.prime;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| m[r * cols + col] != 0) else {
                continue;
            };
            if piv != rank {
                for c in 0..cols {
                    m.swap(piv * cols + c, rank * cols + c);
                }
            }
            let inv = mod_pow(m[rank * cols + col], p - 2, p);
            for c in col..cols {
                m[rank * cols + c] = m[rank * cols + c] * inv % p;
            }
            for r in 0..rows {
                if r == rank {
                    continue;
                }
                let f = m[r * cols + col];
                if f == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = f * m[rank * cols + c] % p;
                    m[r * cols + c] = (m[r * cols + c] + p - sub) % p;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Basis of the degree-`j` piece of `K_p = (R/I)(-p) ⊗ Λ^p k^n`:
/// pairs (subset mask of size p, standard monomial of degree j - p).
struct KoszulPiece {
    basis: Vec<(u32, Monomial)>,
    index: HashMap<(u32, Monomial), usize>,
}

impl KoszulPiece {
    fn new(ideal: &MonomialIdeal, p: usize, j: usize, std: &[Vec<Monomial>]) -> Self {
        let n = ideal.nvars();
        let mut basis = Vec::new();
        if j >= p {
            let mons = std.get(j - p).map(Vec::as_slice).unwrap_or(&[]);
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != p {
                    continue;
                }
                basis.extend(mons.iter().map(|m| (mask, m.clone())));
            }
        }
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, b)| (b, k))
            .collect();
        KoszulPiece { basis, index }
    }
}

/// Matrix of `∂: K_p -> K_{p-1}` in degree `j`, columns indexed by the source.
fn boundary(
    ideal: &MonomialIdeal,
    src: &KoszulPiece,
    dst: &KoszulPiece,
    j: usize,
    prime: u64,
) -> GradedMatrix {
    let n = ideal.nvars();
    let mut mat = GradedMatrix::zeros(dst.basis.len(), src.basis.len(), j, prime);
    for (col, (mask, m)) in src.basis.iter().enumerate() {
        let mut pos = 0;
        for v in 0..n {
            if mask & (1 << v) == 0 {
                continue;
            }
            let target = m.times_var(v);
            if !ideal.contains(&target) {
                let row = dst.index[&(mask & !(1 << v), target)];
                mat.add_sign(row, col, pos % 2 == 1);
            }
            pos += 1;
        }
    }
    mat
}

/// Betti table of `I` from Koszul homology of `R/I` over GF(32003).
///
/// `β_{q,j}(I) = dim H_{q+1}(K(x; R/I))_j` for shifts `j ≤ maxshift`.
pub fn koszul_betti(ideal: &MonomialIdeal, maxshift: usize) -> Result<BettiTable> {
    koszul_betti_mod(ideal, maxshift, DEFAULT_PRIME)
}

/// [`koszul_betti`] over GF(`prime`).
pub fn koszul_betti_mod(ideal: &MonomialIdeal, maxshift: usize, prime: u64) -> Result<BettiTable> {
    if !ideal.is_artinian() && maxshift > ideal.max_degree() {
        return Err(Error::OutOfRange(format!(
            "shift {maxshift} needs slices past the stored degree {}",
            ideal.max_degree()
        )));
    }
    if prime < 2
        || prime > u32::MAX as u64
        || !(2..prime)
            .take_while(|f| f * f <= prime)
            .all(|f| !prime.is_multiple_of(f))
    {
        return Err(Error::OutOfRange(format!("{prime} is not a usable prime")));
    }
    let n = ideal.nvars();
    let std: Vec<Vec<Monomial>> = (0..=maxshift)
        .map(|d| ideal.standard_monomials(d))
        .collect();

    let per_shift = sweep::map(&(0..=maxshift).collect::<Vec<_>>(), |&j| {
        homology_at_shift(ideal, &std, j, prime)
    });

    let mut table = BettiTable::new(n, ideal.is_artinian());
    for (j, dims) in per_shift.into_iter().enumerate() {
        let dims = dims?;
        for (p, &dim) in dims.iter().enumerate().skip(1) {
            table.add(p - 1, j, dim as u64);
        }
    }
    Ok(table)
}

/// `dim H_p` in degree `j` for `p = 0..=n`, checking `∂∘∂ = 0`.
fn homology_at_shift(
    ideal: &MonomialIdeal,
    std: &[Vec<Monomial>],
    j: usize,
    prime: u64,
) -> Result<Vec<usize>> {
    let n = ideal.nvars();
    let pieces: Vec<KoszulPiece> = (0..=n)
        .map(|p| KoszulPiece::new(ideal, p, j, std))
        .collect();
    // maps[p] = ∂_p : K_p -> K_{p-1}, for p = 1..=n
    let maps: Vec<GradedMatrix> = (1..=n)
        .map(|p| boundary(ideal, &pieces[p], &pieces[p - 1], j, prime))
        .collect();
    for w in maps.windows(2) {
        if !w[0].mul(&w[1]).is_zero() {
            return Err(Error::Internal(format!(
                "Koszul boundary does not square to zero in degree {j}"
            )));
        }
    }
    let ranks: Vec<usize> = maps.iter().map(GradedMatrix::rank).collect();
    Ok((0..=n)
        .map(|p| {
            let out_rank = if p >= 1 { ranks[p - 1] } else { 0 };
            let in_rank = if p < n { ranks[p] } else { 0 };
            pieces[p].basis.len() - out_rank - in_rank
        })
        .collect())
}

/// Euler characteristic `Σ (-1)^p dim K_{p,j}` of the Koszul complex.
pub fn koszul_euler_characteristic(ideal: &MonomialIdeal, j: usize) -> i64 {
    let n = ideal.nvars();
    (0..=n.min(j))
        .map(|p| {
            let dim = crate::binomial::binom_u64(n as u64, p as u64).unwrap() as i64
                * ideal.standard_monomials(j - p).len() as i64;
            if p % 2 == 0 {
                dim
            } else {
                -dim
            }
        })
        .sum()
}
