//! Exhaustive enumeration of O-sequences and the data-parallel map used by
//! every sweep. Without the `parallel` feature everything runs on the
//! calling thread.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::binomial::{macaulay_growth_saturating, OSequence};
use crate::error::Result;
use crate::levelness::{level_check, LevelVerdict};

/// Every O-sequence with `h_1 ≤ max_codim`, socle degree `≤ max_socle` and
/// all values `≤ max_value`, in lexicographic order.
pub fn enumerate_o_sequences(max_codim: u64, max_socle: usize, max_value: u64) -> Vec<OSequence> {
    let mut out = vec![OSequence::new(vec![1]).unwrap()];
    let mut prefix = vec![1u64];
    for h1 in 1..=max_codim.min(max_value) {
        prefix.push(h1);
        extend(&mut prefix, max_socle, max_value, &mut out);
        prefix.pop();
    }
    out
}

fn extend(prefix: &mut Vec<u64>, max_socle: usize, max_value: u64, out: &mut Vec<OSequence>) {
    out.push(OSequence::new(prefix.clone()).unwrap());
    let t = prefix.len() - 1;
    if t == max_socle {
        return;
    }
    let cap = macaulay_growth_saturating(prefix[t], t as u32).min(max_value);
    for v in 1..=cap {
        prefix.push(v);
        extend(prefix, max_socle, max_value, out);
        prefix.pop();
    }
}

/// Sequential map, kept callable even when `parallel` is on so the two can
/// be compared.
pub fn map_seq<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn map_par<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

/// Order-preserving map over `items`, parallel when the feature is enabled.
pub fn map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
    #[cfg(feature = "parallel")]
    {
        map_par(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seq(items, f)
    }
}

/// Runs `op` on a pool of `jobs` threads (`0` means the default pool).
#[cfg(feature = "parallel")]
pub fn with_jobs<R: Send>(jobs: usize, op: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        return op();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(op),
        Err(_) => op(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_jobs<R: Send>(_jobs: usize, op: impl FnOnce() -> R + Send) -> R {
    op()
}

/// Verdict counts of a sweep, keyed by criterion code or `"Unknown"`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Census {
    pub total: usize,
    pub not_level: usize,
    pub unknown: usize,
    pub by_criterion: BTreeMap<String, usize>,
}

impl Census {
    pub fn tally(verdicts: &[LevelVerdict]) -> Census {
        let mut c = Census {
            total: verdicts.len(),
            ..Default::default()
        };
        for v in verdicts {
            let key = match v {
                LevelVerdict::NotLevel(f) => {
                    c.not_level += 1;
                    f.criterion.code().to_string()
                }
                LevelVerdict::Unknown { .. } => {
                    c.unknown += 1;
                    "Unknown".to_string()
                }
            };
            *c.by_criterion.entry(key).or_default() += 1;
        }
        c
    }
}

/// Runs [`level_check`] on every sequence, keeping input order.
pub fn classify(seqs: &[OSequence]) -> Result<Vec<LevelVerdict>> {
    map(seqs, level_check).into_iter().collect()
}

/// [`classify`] forced onto the calling thread.
pub fn classify_seq(seqs: &[OSequence]) -> Result<Vec<LevelVerdict>> {
    map_seq(seqs, level_check).into_iter().collect()
}
