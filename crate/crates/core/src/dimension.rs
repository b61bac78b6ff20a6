//! Krull dimension of a quotient by a monomial (leading-term) ideal, by two
//! independent routes: maximal independent variable sets, and the pole order
//! of the Hilbert series at 1. Tests hold the two equal on fuzzed inputs.

use crate::monomial::Monomial;

/// Dimension as the largest variable subset that meets no generator's
/// support. `lt` must be the leading-term monomials of a Groebner basis;
/// a constant generator marks the unit ideal (dimension -1).
pub fn independent_set_dimension(lt: &[Monomial], nvars: usize) -> i64 {
    if lt.iter().any(|m| m.is_one()) {
        return -1;
    }
    let minimal = minimalize(lt);
    let mut best = 0i64;
    for mask in 0u64..(1u64 << nvars) {
        let allowed: Vec<bool> = (0..nvars).map(|i| mask >> i & 1 == 1).collect();
        let size = allowed.iter().filter(|&&b| b).count() as i64;
        if size <= best {
            continue;
        }
        if minimal.iter().all(|m| !m.supported_on(&allowed)) {
            best = size;
        }
    }
    best
}

/// Dimension read off the Hilbert series: writes the numerator of
/// `HS(R/M) = N(t)/(1-t)^n` and returns `n` minus the multiplicity of the
/// root 1 in `N`. Returns -1 for the unit ideal.
pub fn hilbert_series_dimension(lt: &[Monomial], nvars: usize) -> i64 {
    let numerator = hilbert_numerator(&minimalize(lt));
    if numerator.iter().all(|&c| c == 0) {
        return -1;
    }
    let mut n = numerator;
    let mut multiplicity = 0i64;
    while eval_at_one(&n) == 0 {
        n = divide_by_one_minus_t(&n);
        multiplicity += 1;
    }
    nvars as i64 - multiplicity
}

/// Numerator of the Hilbert series of `R/M` over `(1-t)^n`, as coefficient
/// vector indexed by degree. Standard splitting recursion: for a pivot
/// variable x, `N(M) = N(M + (x)) + t * N(M : x)`; pairwise coprime
/// generators give the product formula directly.
pub fn hilbert_numerator(gens: &[Monomial]) -> Vec<i128> {
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    if gens.is_empty() {
        return vec![1];
    }
    if pairwise_coprime(gens) {
        let mut acc = vec![1i128];
        for m in gens {
            // multiply by (1 - t^deg)
            let d = m.total_degree() as usize;
            let mut next = vec![0i128; acc.len() + d];
            for (i, &c) in acc.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    }

    let pivot = pick_pivot(gens);
    let nvars = gens[0].nvars();
    let x = Monomial::var(nvars, pivot);

    // M + (x): generators not involving x, plus x itself
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.degree_of(pivot) == 0)
        .cloned()
        .collect();
    plus.push(x.clone());

    // M : x: divide the pivot out of each generator once
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.degree_of(pivot) > 0 {
                m.try_div(&x).expect("divisible")
            } else {
                m.clone()
            }
        })
        .collect();

    let a = hilbert_numerator(&minimalize(&plus));
    let b = hilbert_numerator(&minimalize(&colon));
    // N = a + t * b
    let mut out = vec![0i128; a.len().max(b.len() + 1)];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    out
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !gens[i].gcd(&gens[j]).is_one() {
                return false;
            }
        }
    }
    true
}

/// The variable occurring in the most generators, smallest index on ties.
fn pick_pivot(gens: &[Monomial]) -> usize {
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for m in gens {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    counts
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.cmp(b).then(j.cmp(i)))
        .map(|(i, _)| i)
        .expect("nonempty")
}

/// Removes generators divisible by another generator.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.retain(|g| !m.divides(g));
            out.push(m);
        }
    }
    out.sort();
    out
}

fn eval_at_one(poly: &[i128]) -> i128 {
    poly.iter().sum()
}

fn divide_by_one_minus_t(poly: &[i128]) -> Vec<i128> {
    // synthetic division by (1 - t); valid when poly(1) == 0
    let n = poly.len();
    if n <= 1 {
        return vec![0];
    }
    let mut q = vec![0i128; n - 1];
    let mut carry = 0i128;
    for i in 0..n - 1 {
        q[i] = poly[i] + carry;
        carry = q[i];
    }
    debug_assert_eq!(poly[n - 1] + carry, 0, "not divisible by (1-t)");
    q
}
