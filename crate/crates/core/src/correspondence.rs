//! The bijection between permutations and pairs of same-shape standard
//! tableaux assembled from an insertion scheme, its inverse, and a few
//! permutation statistics.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bumping::BumpingScheme;
use crate::error::{Error, Result};
use crate::insertion::{insert, uninsert};
use crate::report::Report;
use crate::shapes::{skew_square, Shape};
use crate::tableaux::{count_standard, Tableau};

/// Default size limit for exhaustive checks over all of `S_n`.
pub const BIJECTION_BOUND: usize = 6;

/// A rearrangement of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &x in &letters {
            let x = x as usize;
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{letters:?}")));
            }
        }
        Ok(Permutation(letters))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn reversed(n: usize) -> Self {
        Permutation((1..=n as u32).rev().collect())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().zip(1..).all(|(&x, k)| x == k)
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u32> = (1..=n as u32).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Digit string for `n <= 9`, comma-separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() <= 9 {
            for x in &self.0 {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters: Option<Vec<u32>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10)).collect()
        };
        let letters = letters.ok_or_else(|| Error::InvalidPermutation(s.to_string()))?;
        Permutation::new(letters).map_err(|_| Error::InvalidPermutation(s.to_string()))
    }
}

/// Insertion tableau `P` and recording tableau `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableauPair {
    #[serde(rename = "P")]
    pub p: Tableau,
    #[serde(rename = "Q")]
    pub q: Tableau,
}

impl TableauPair {
    pub fn shape(&self) -> Shape {
        self.p.shape()
    }

    /// Checks that both tableaux are standard and of the same shape.
    pub fn validate(&self) -> Result<()> {
        if self.p.shape() != self.q.shape() {
            return Err(Error::InconsistentPair(format!(
                "P has shape ({}) but Q has shape ({})",
                self.p.shape(),
                self.q.shape()
            )));
        }
        if !self.q.is_standard() {
            return Err(Error::InconsistentPair("Q is not standard".into()));
        }
        if !self.p.is_standard() {
            return Err(Error::InconsistentPair("P is not standard".into()));
        }
        Ok(())
    }
}

/// Inserts the letters of `perm` one at a time, recording in `Q` the step
/// at which each square appeared. Also returns `P` after every letter.
pub fn rs_forward_with_steps<S: BumpingScheme + ?Sized>(
    scheme: &S,
    perm: &Permutation,
) -> Result<(TableauPair, Vec<Tableau>)> {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    let mut history = Vec::with_capacity(perm.len());
    for (k, &letter) in (1u32..).zip(perm.letters()) {
        let next = insert(scheme, &p, letter)?.tableau;
        let grown = skew_square(&next.shape(), &p.shape())?;
        q.push_unchecked(grown, k);
        p = next;
        history.push(p.clone());
    }
    Ok((TableauPair { p, q }, history))
}

pub fn rs_forward<S: BumpingScheme + ?Sized>(scheme: &S, perm: &Permutation) -> Result<TableauPair> {
    rs_forward_with_steps(scheme, perm).map(|(pair, _)| pair)
}

/// Recovers the permutation from `(P, Q)`: for `k = n, …, 1`, the square
/// holding `k` in `Q` names the target shape `sh(Q_{≤k-1})`, and
/// uninsertion toward that shape releases the k-th letter.
pub fn rs_inverse<S: BumpingScheme + ?Sized>(scheme: &S, pair: &TableauPair) -> Result<Permutation> {
    pair.validate()?;
    let n = pair.q.size();
    let mut p = pair.p.clone();
    let mut letters = vec![0u32; n];
    for k in (1..=n as u32).rev() {
        let target = pair.q.restrict_below(k - 1).shape();
        let (rest, letter) = uninsert(scheme, &p, &target)?;
        letters[k as usize - 1] = letter;
        p = rest;
    }
    Permutation::new(letters)
}

/// Length of a longest increasing subsequence, by quadratic dynamic
/// programming.
pub fn lis_statistic(perm: &Permutation) -> usize {
    let xs = perm.letters();
    let mut best = vec![1usize; xs.len()];
    for j in 0..xs.len() {
        for i in 0..j {
            if xs[i] < xs[j] {
                best[j] = best[j].max(best[i] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Length of the bottom row of `P`.
pub fn first_row_length<S: BumpingScheme + ?Sized>(scheme: &S, perm: &Permutation) -> Result<usize> {
    Ok(rs_forward(scheme, perm)?.p.shape().row_len(1))
}

/// Encodes with one correspondence and decodes with another.
pub fn scramble<A, B>(perm: &Permutation, encode: &A, decode: &B) -> Result<Permutation>
where
    A: BumpingScheme + ?Sized,
    B: BumpingScheme + ?Sized,
{
    rs_inverse(decode, &rs_forward(encode, perm)?)
}

pub fn verify_bijection<S: BumpingScheme + ?Sized>(scheme: &S, n: usize) -> Result<Report> {
    verify_bijection_bounded(scheme, n, BIJECTION_BOUND)
}

/// Runs the correspondence over all of `S_n` and checks that every image is
/// a same-shape standard pair, that no two permutations collide, that each
/// shape λ is hit exactly `f_λ²` times, and that inversion recovers every
/// permutation.
pub fn verify_bijection_bounded<S: BumpingScheme + ?Sized>(
    scheme: &S,
    n: usize,
    bound: usize,
) -> Result<Report> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let mut report = Report::new(format!("bijection for `{}`, n = {n}", scheme.name()));
    let perms = Permutation::all(n);
    let results: Vec<(Permutation, Result<TableauPair>, Result<Permutation>)> = perms
        .into_par_iter()
        .map(|perm| {
            let pair = rs_forward(scheme, &perm);
            let back = match &pair {
                Ok(pair) => rs_inverse(scheme, pair),
                Err(e) => Err(e.clone()),
            };
            (perm, pair, back)
        })
        .collect();

    let mut seen = HashSet::new();
    let mut per_shape: HashMap<Shape, u64> = HashMap::new();
    for (perm, pair, back) in results {
        let pair = match pair {
            Ok(pair) => pair,
            Err(e) => {
                report.check(false, || format!("{perm}: {e}"));
                continue;
            }
        };
        report.check(pair.validate().is_ok(), || format!("{perm}: image is not a standard pair"));
        report.check(seen.insert(pair.clone()), || format!("{perm}: image already produced"));
        report.check(back.as_ref() == Ok(&perm), || format!("{perm}: inverse gave {back:?}"));
        *per_shape.entry(pair.shape()).or_default() += 1;
    }
    for shape in crate::shapes::all_partitions(n) {
        let f = count_standard(&shape);
        let hits = BigUint::from(per_shape.get(&shape).copied().unwrap_or(0));
        report.check(hits == &f * &f, || format!("({shape}): {hits} images, expected f_λ² = {}", &f * &f));
    }
    Ok(report)
}
