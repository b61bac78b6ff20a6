//! Buchberger's algorithm with the two classical pair-elimination criteria,
//! normal-strategy pair selection, and fully reduced output.
//!
//! Every selection point is deterministic: pairs are chosen by smallest lcm
//! in the active order with index tie-breaks, reducers by position in the
//! basis. A configurable reduction budget turns runaway computations into a
//! distinguishable resource error instead of a hang.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

/// Default ceiling on single reduction steps per basis computation.
pub const DEFAULT_REDUCTION_LIMIT: u64 = 1_000_000;

/// Counts division steps and aborts past the configured ceiling.
#[derive(Debug)]
pub struct ReductionBudget {
    used: u64,
    limit: u64,
}

impl ReductionBudget {
    pub fn new(limit: u64) -> Self {
        ReductionBudget { used: 0, limit }
    }

    fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::ResourceExhausted { steps: self.used })
        } else {
            Ok(())
        }
    }
}

impl Default for ReductionBudget {
    fn default() -> Self {
        ReductionBudget::new(DEFAULT_REDUCTION_LIMIT)
    }
}

/// A reduced Groebner basis: monic elements, no term of any element is
/// divisible by another element's leading monomial, sorted by ascending
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// The basis of the unit ideal is the single constant 1.
    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant() && !self.polys[0].is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_monomial(&self.order).expect("nonzero").clone())
            .collect()
    }

    /// Unique remainder of `f` modulo the basis; zero exactly when `f` lies
    /// in the ideal.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !crate::poly::same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch(
                "normal form of a polynomial from another ring".into(),
            ));
        }
        let mut budget = ReductionBudget::default();
        reduce_full(f, &self.polys, &self.order, &mut budget)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero. Used to
    /// double-check bases before they enter an ideal's cache.
    pub fn verify(&self) -> Result<bool> {
        let mut budget = ReductionBudget::default();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let s = s_polynomial(&self.polys[i], &self.polys[j], &self.order);
                if !reduce_full(&s, &self.polys, &self.order, &mut budget)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Full normal form: reduces every term, largest first, choosing the first
/// listed reducer whose leading monomial divides it.
fn reduce_full(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
    budget: &mut ReductionBudget,
) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let mut work = f.clone();
    let mut remainder = Polynomial::zero(&ring);
    let leads: Vec<(Monomial, Polynomial)> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.leading_monomial(order).expect("nonzero").clone(), g.clone()))
        .collect();
    'outer: while !work.is_zero() {
        let (m, c) = {
            let (m, c) = work.leading_term(order).expect("nonzero");
            (m.clone(), c.clone())
        };
        for (lm, g) in &leads {
            if let Some(q) = m.try_div(lm) {
                budget.spend()?;
                let lc = g.leading_term(order).expect("nonzero").1.clone();
                let factor = c.div(&lc)?;
                work = work.checked_sub(&g.mul_term(&q, &factor))?;
                continue 'outer;
            }
        }
        // no reducer: the leading term moves to the remainder
        let lead = Polynomial::from_terms(&ring, [(m, c)]);
        remainder = remainder.checked_add(&lead)?;
        work = work.checked_sub(&lead)?;
    }
    Ok(remainder)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let fq = lcm.try_div(fm).expect("lcm divisible");
    let gq = lcm.try_div(gm).expect("lcm divisible");
    let a = f.mul_term(&fq, &fc.inv().expect("nonzero lead"));
    let b = g.mul_term(&gq, &gc.inv().expect("nonzero lead"));
    a.checked_sub(&b).expect("same ring")
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Computes the reduced Groebner basis of the given generators.
pub fn buchberger(
    ring: &Ring,
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &mut ReductionBudget,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), polys: vec![] });
    }

    let lm = |p: &Polynomial| -> Monomial { p.leading_monomial(order).expect("nonzero").clone() };

    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: std::collections::BTreeSet<(usize, usize)> = Default::default();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push(Pair { lcm: lm(&basis[i]).lcm(&lm(&basis[j])), i, j });
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm in the active order, then index order
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                order
                    .cmp_monomials(&a.lcm, &b.lcm)
                    .then_with(|| a.i.cmp(&b.i))
                    .then_with(|| a.j.cmp(&b.j))
            })
            .map(|(k, _)| k)
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let (i, j) = (pair.i, pair.j);
        done.insert((i, j));

        let lmi = lm(&basis[i]);
        let lmj = lm(&basis[j]);

        // product criterion: coprime leading monomials
        if lmi.mul(&lmj) == pair.lcm {
            continue;
        }
        // chain criterion: an already-settled third element divides the lcm
        let chained = (0..basis.len()).any(|k| {
            if k == i || k == j {
                return false;
            }
            if !lm(&basis[k]).divides(&pair.lcm) {
                return false;
            }
            let a = (i.min(k), i.max(k));
            let b = (j.min(k), j.max(k));
            done.contains(&a) && done.contains(&b)
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order, budget)?;
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order);
        let new_index = basis.len();
        basis.push(r);
        for k in 0..new_index {
            pairs.push(Pair { lcm: lm(&basis[k]).lcm(&lm(&basis[new_index])), i: k, j: new_index });
        }
    }

    // minimize: drop elements whose lead is divisible by another's lead
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if lm(&basis[j]).divides(&lm(&basis[i])) && (lm(&basis[j]) != lm(&basis[i]) || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect();

    // interreduce tails
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let r = reduce_full(&minimal[i], &others, order, budget)?.monic(order);
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|p| !p.is_zero());
    minimal.sort_by(|a, b| {
        let la = a.leading_monomial(order).expect("nonzero");
        let lb = b.leading_monomial(order).expect("nonzero");
        match order.cmp_monomials(la, lb) {
            Ordering::Equal => format!("{a}").cmp(&format!("{b}")),
            o => o,
        }
    });

    Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), polys: minimal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::RingContext;

    fn ring_xy() -> Ring {
        RingContext::new(vec!["x".into(), "y".into()], FieldSpec::Rational).unwrap()
    }

    fn gb(ring: &Ring, gens: &[Polynomial], order: MonomialOrder) -> GroebnerBasis {
        buchberger(ring, gens, &order, &mut ReductionBudget::default()).unwrap()
    }

    #[test]
    fn principal_already_reduced() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let basis = gb(&r, &[x.clone()], MonomialOrder::GrevLex);
        assert_eq!(basis.polys(), &[x]);
    }

    #[test]
    fn two_step_hand_elimination() {
        // (x+y, x-y) under lex x>y reduces to {x, y}
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let basis = gb(
            &r,
            &[
                x.checked_add(&y).unwrap(),
                x.checked_sub(&y).unwrap(),
            ],
            MonomialOrder::Lex,
        );
        assert_eq!(basis.polys(), &[y.clone(), x.clone()]);
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let basis = gb(&r, &[Polynomial::one(&r), x], MonomialOrder::GrevLex);
        assert!(basis.is_unit());
        assert_eq!(basis.polys(), &[Polynomial::one(&r)]);
    }

    #[test]
    fn zero_ideal_empty_basis() {
        let r = ring_xy();
        let basis = gb(&r, &[], MonomialOrder::GrevLex);
        assert!(basis.is_empty());
        assert!(!basis.is_unit());
    }

    #[test]
    fn normal_form_cases() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // NF(x^2, {x}) = 0
        let basis = gb(&r, &[x.clone()], MonomialOrder::GrevLex);
        assert!(basis.normal_form(&x.pow(2)).unwrap().is_zero());
        // NF(z, {x,y}) = z needs a third variable
        let r3 = RingContext::new(
            vec!["x".into(), "y".into(), "z".into()],
            FieldSpec::Rational,
        )
        .unwrap();
        let x3 = Polynomial::var(&r3, 0);
        let y3 = Polynomial::var(&r3, 1);
        let z3 = Polynomial::var(&r3, 2);
        let basis3 = gb(&r3, &[x3, y3], MonomialOrder::GrevLex);
        assert_eq!(basis3.normal_form(&z3).unwrap(), z3);
        // one division step by hand: NF(x^2+y, {x^2-y}) = 2y
        let f = x.pow(2).checked_add(&y).unwrap();
        let g = x.pow(2).checked_sub(&y).unwrap();
        let basis2 = gb(&r, &[g], MonomialOrder::GrevLex);
        assert_eq!(
            basis2.normal_form(&f).unwrap(),
            y.scale(&r.field().from_i64(2))
        );
    }

    #[test]
    fn textbook_lex_basis() {
        // (x^2 - 1, xy - 1) under lex: reduced basis {y^2 - 1, x - y}
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let one = Polynomial::one(&r);
        let f = x.pow(2).checked_sub(&one).unwrap();
        let g = x.checked_mul(&y).unwrap().checked_sub(&one).unwrap();
        let basis = gb(&r, &[f, g], MonomialOrder::Lex);
        let expected_1 = y.pow(2).checked_sub(&one).unwrap();
        let expected_2 = x.checked_sub(&y).unwrap();
        assert_eq!(basis.polys(), &[expected_1, expected_2]);
        assert!(basis.verify().unwrap());
    }

    #[test]
    fn normal_form_idempotent_fuzz() {
        use rand::Rng;
        use rand::SeedableRng;
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let basis = gb(
            &r,
            &[
                x.pow(2).checked_sub(&y.pow(2)).unwrap(),
                x.checked_mul(&y).unwrap().checked_add(&y.pow(2)).unwrap(),
            ],
            MonomialOrder::GrevLex,
        );
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(3);
        for _ in 0..100 {
            let mut f = Polynomial::zero(&r);
            for _ in 0..5 {
                let exps: Vec<u32> = (0..2).map(|_| rng.gen_range(0..4)).collect();
                let c = r.field().from_i64(rng.gen_range(-9..=9));
                f = f
                    .checked_add(&Polynomial::from_terms(
                        &r,
                        [(crate::monomial::Monomial::new(exps), c)],
                    ))
                    .unwrap();
            }
            let nf = basis.normal_form(&f).unwrap();
            assert_eq!(basis.normal_form(&nf).unwrap(), nf);
        }
    }

    #[test]
    fn budget_abort_is_distinguishable() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let mut tiny = ReductionBudget::new(0);
        let err = buchberger(
            &r,
            &[
                x.pow(3).checked_sub(&y.pow(2)).unwrap(),
                x.checked_mul(&y).unwrap().checked_sub(&x).unwrap(),
            ],
            &MonomialOrder::GrevLex,
            &mut tiny,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ResourceExhausted { .. }));
    }
}
