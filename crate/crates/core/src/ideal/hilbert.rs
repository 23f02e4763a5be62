//! Weighted Hilbert functions of monomial quotients.
//!
//! The numerator of the Hilbert series of `k[x]/M` is computed by the pivot
//! recursion `N(M) = N(M + (x)) + t^w(x) N(M : x)`, then divided by
//! `prod (1 - t^w_i)` as a truncated power series.

use serde::Serialize;

use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertTable {
    /// `(degree, dimension)` for every degree from 0 up to the bound.
    pub entries: Vec<(u64, u64)>,
}

impl HilbertTable {
    pub fn values(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.1).collect()
    }

    pub fn get(&self, d: u64) -> Option<u64> {
        self.entries.iter().find(|e| e.0 == d).map(|e| e.1)
    }

    /// Iterated finite differences: the first order `r` whose last three
    /// entries agree, with that constant. For a Hilbert function of a
    /// standard graded ring this is the degree of the Hilbert polynomial and
    /// `r!` times its leading coefficient.
    pub fn growth(&self) -> Option<(usize, i64)> {
        let mut seq: Vec<i64> = self.entries.iter().map(|e| e.1 as i64).collect();
        for r in 0.. {
            if seq.len() < 3 {
                return None;
            }
            let tail = &seq[seq.len() - 3..];
            if tail[0] == tail[1] && tail[1] == tail[2] {
                return Some((r, tail[2]));
            }
            seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
        }
        None
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add_shifted(a: &mut Vec<i64>, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn one_minus_t_pow(d: usize) -> Vec<i64> {
    let mut v = vec![0; d + 1];
    v[0] = 1;
    v[d] -= 1;
    v
}

/// Hilbert series numerator of `k[x]/(gens)` with the given weights, as
/// coefficients of increasing powers of `t`.
pub fn series_numerator(gens: &[Monomial], weights: &[u32]) -> Vec<i64> {
    let gens = minimalize(gens.to_vec());
    numerator(gens, weights)
}

fn numerator(gens: Vec<Monomial>, weights: &[u32]) -> Vec<i64> {
    let deg = |m: &Monomial| -> usize {
        m.exponents()
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as usize * w as usize)
            .sum()
    };
    if gens.is_empty() {
        return vec![1];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens
            .iter()
            .fold(vec![1], |acc, g| poly_mul(&acc, &one_minus_t_pow(deg(g))));
    }
    // pivot on the variable occurring in the most non-linear generators
    let n = weights.len();
    let mut counts = vec![0usize; n];
    for g in &gens {
        if g.total_degree() > 1 {
            for v in g.support() {
                counts[v] += 1;
            }
        }
    }
    let pivot = (0..n)
        .max_by_key(|&v| (counts[v], std::cmp::Reverse(v)))
        .unwrap();
    let x = Monomial::var(n, pivot);

    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponent(pivot) == 0)
        .cloned()
        .collect();
    plus.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exponent(pivot) > 0 {
                g.div(&x).unwrap()
            } else {
                g.clone()
            }
        })
        .collect();

    let mut out = numerator(minimalize(plus), weights);
    let rest = numerator(minimalize(colon), weights);
    poly_add_shifted(&mut out, &rest, weights[pivot] as usize);
    out
}

/// Dimensions of the graded pieces of `k[x]/(gens)` in degrees `0..=up_to`.
pub fn hilbert_from_monomials(gens: &[Monomial], weights: &[u32], up_to: u64) -> HilbertTable {
    let len = up_to as usize + 1;
    let mut series: Vec<i64> = series_numerator(gens, weights);
    series.resize(len.max(series.len()), 0);
    series.truncate(len);
    for &w in weights {
        let w = w as usize;
        for d in w..len {
            series[d] += series[d - w];
        }
    }
    HilbertTable {
        entries: series
            .into_iter()
            .enumerate()
            .map(|(d, v)| {
                assert!(v >= 0, "negative Hilbert function value");
                (d as u64, v as u64)
            })
            .collect(),
    }
}
