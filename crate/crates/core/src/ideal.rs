//! Ideals with per-order Groebner basis caches and the derived algorithms:
//! membership, elimination, intersection, quotient, saturation, radical
//! membership, and the three dimension computations.
//!
//! Canonical form convention: two ideals are equal when their reduced
//! grevlex bases coincide. All certificate comparisons go through that form.

use std::collections::BTreeMap;
use std::sync::{Arc, RwLock};

use crate::dimension;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, ReductionBudget};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{same_ring, Polynomial, Ring};

#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    homogeneous: bool,
    cache: RwLock<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            homogeneous: self.homogeneous,
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl Ideal {
    /// Normalizes the generator list: zero polynomials are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch(
                    "ideal generator from another ring".into(),
                ));
            }
        }
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let homogeneous = gens.iter().all(|g| g.homogeneity().is_homogeneous());
        Ok(Ideal { ring: ring.clone(), gens, homogeneous, cache: RwLock::new(BTreeMap::new()) })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![]).expect("empty list")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("constant")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced Groebner basis for the order, from the cache when available.
    /// Fresh bases are checked against the Buchberger criterion before they
    /// are cached.
    pub fn basis(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(b) = self.cache.read().expect("cache lock").get(order) {
            return Ok(b.clone());
        }
        let mut budget = ReductionBudget::default();
        let basis = buchberger(&self.ring, &self.gens, order, &mut budget)?;
        if !basis.verify()? {
            // cannot happen for a correct implementation; kept as a hard guard
            return Err(Error::Certificate(
                "computed basis failed the S-pair criterion".into(),
            ));
        }
        let arc = Arc::new(basis);
        self.cache
            .write()
            .expect("cache lock")
            .insert(order.clone(), arc.clone());
        Ok(arc)
    }

    /// The canonical (reduced grevlex) basis.
    pub fn canonical_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.basis(&MonomialOrder::GrevLex)
    }

    /// Canonical generators: the reduced grevlex basis elements.
    pub fn canonical_gens(&self) -> Result<Vec<Polynomial>> {
        Ok(self.canonical_basis()?.polys().to_vec())
    }

    /// Ideal equality through canonical forms.
    pub fn canonical_eq(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Ok(false);
        }
        Ok(self.canonical_basis()?.polys() == other.canonical_basis()?.polys())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.canonical_basis()?.contains(f)
    }

    /// `true` iff the ideal is the whole ring.
    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.canonical_basis()?.is_unit())
    }

    /// Sum of ideals: concatenated generators.
    pub fn plus(&self, extra: &[Polynomial]) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("ideal sum across rings".into()));
        }
        self.plus(&other.gens)
    }

    /// Product of ideals: pairwise generator products. The vanishing locus
    /// is the union of the two loci.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("ideal product across rings".into()));
        }
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_mul(b)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Maximum total degree among canonical basis elements.
    pub fn max_basis_degree(&self) -> Result<u32> {
        let basis = self.canonical_basis()?;
        basis
            .polys()
            .iter()
            .filter_map(|p| p.total_degree())
            .max()
            .ok_or(Error::ZeroIdeal)
    }

    /// Restriction to the subring on the kept variables: `I intersect k[keep]`.
    /// The result lives in the smaller ring.
    pub fn eliminate(&self, keep: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        for &i in keep {
            if i >= n {
                return Err(Error::InvalidRing(format!("variable index {i} out of range")));
            }
        }
        // permuted ring: kept variables first, the rest are eliminated
        let mut perm: Vec<usize> = keep.to_vec();
        for i in 0..n {
            if !keep.contains(&i) {
                perm.push(i);
            }
        }
        let permuted_ring = self.ring.restricted(&perm)?;
        let inverse: Vec<usize> = {
            let mut inv = vec![0usize; n];
            for (new_pos, &old) in perm.iter().enumerate() {
                inv[old] = new_pos;
            }
            inv
        };
        let permuted_gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| {
                Polynomial::from_terms(
                    &permuted_ring,
                    g.terms().map(|(m, c)| {
                        let mut exps = vec![0u32; n];
                        for (old, &e) in m.exponents().iter().enumerate() {
                            exps[inverse[old]] = e;
                        }
                        (Monomial::new(exps), c.clone())
                    }),
                )
            })
            .collect();
        let split = keep.len();
        let order = MonomialOrder::Elimination { split };
        let permuted = Ideal::new(&permuted_ring, permuted_gens)?;
        let basis = permuted.basis(&order)?;
        let target = self.ring.restricted(keep)?;
        let head: Vec<bool> = (0..n).map(|i| i < split).collect();
        let kept: Vec<Polynomial> = basis
            .polys()
            .iter()
            .filter(|p| p.terms().all(|(m, _)| m.supported_on(&head)))
            .map(|p| p.project(&target, &(0..split).collect::<Vec<_>>()))
            .collect();
        Ideal::new(&target, kept)
    }

    /// Elimination of trailing auxiliary variables, keeping the ideal inside
    /// the original ring `target` (the first `target.nvars()` variables).
    fn eliminate_tail(extended: &Ideal, target: &Ring) -> Result<Ideal> {
        let split = target.nvars();
        let order = MonomialOrder::Elimination { split };
        let basis = extended.basis(&order)?;
        let n = extended.ring.nvars();
        let head: Vec<bool> = (0..n).map(|i| i < split).collect();
        let kept: Vec<Polynomial> = basis
            .polys()
            .iter()
            .filter(|p| p.terms().all(|(m, _)| m.supported_on(&head)))
            .map(|p| p.project(target, &(0..split).collect::<Vec<_>>()))
            .collect();
        Ideal::new(target, kept)
    }

    /// Intersection by the single-tag construction: eliminate t from
    /// `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("intersection across rings".into()));
        }
        let ext = self.ring.extended(1);
        let t = Polynomial::var(&ext, ext.nvars() - 1);
        let one_minus_t = Polynomial::one(&ext).checked_sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(t.checked_mul(&g.lift(&ext))?);
        }
        for g in &other.gens {
            gens.push(one_minus_t.checked_mul(&g.lift(&ext))?);
        }
        let extended = Ideal::new(&ext, gens)?;
        Self::eliminate_tail(&extended, &self.ring)
    }

    /// Colon ideal `I : (g)`, computed as `(I meet (g))` with every
    /// generator divided exactly by `g`.
    pub fn quotient(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::ZeroArgument("quotient divisor"));
        }
        if !same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch("quotient divisor from another ring".into()));
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::new();
        for h in meet.gens() {
            let q = divide_exact(h, g)?.ok_or_else(|| {
                Error::Certificate("intersection generator not divisible".into())
            })?;
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// Saturation `I : g^infinity` by iterating the colon ideal to a fixed
    /// point of canonical forms.
    pub fn saturation(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::ZeroArgument("saturation divisor"));
        }
        let mut current = self.clone();
        for _ in 0..10_000 {
            let next = current.quotient(g)?;
            if next.canonical_eq(&current)? {
                return Ok(current);
            }
            current = next;
        }
        Err(Error::ResourceExhausted { steps: 10_000 })
    }

    /// Saturation with respect to the irrelevant ideal: intersection of the
    /// saturations by each variable. Projective hygiene for ingestion.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        if self.gens.is_empty() {
            return Ok(self.clone());
        }
        let mut acc: Option<Ideal> = None;
        for i in 0..self.ring.nvars() {
            let xi = Polynomial::var(&self.ring, i);
            let sat = self.saturation(&xi)?;
            acc = Some(match acc {
                None => sat,
                Some(a) => a.intersect(&sat)?,
            });
        }
        let out = acc.expect("at least one variable");
        // canonical generators keep downstream comparisons stable
        let gens = out.canonical_gens()?;
        Ideal::new(&self.ring, gens)
    }

    /// Radical membership through the auxiliary-variable trick:
    /// `f` lies in the radical iff `1` lies in `I + (1 - t*f)`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch("radical test across rings".into()));
        }
        let ext = self.ring.extended(1);
        let t = Polynomial::var(&ext, ext.nvars() - 1);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.lift(&ext)).collect();
        gens.push(Polynomial::one(&ext).checked_sub(&t.checked_mul(&f.lift(&ext))?)?);
        let extended = Ideal::new(&ext, gens)?;
        extended.is_unit()
    }

    /// Krull dimension of the affine coordinate ring `k[x]/I`; -1 for the
    /// unit ideal.
    pub fn affine_dimension(&self) -> Result<i64> {
        let basis = self.canonical_basis()?;
        Ok(dimension::independent_set_dimension(
            &basis.leading_monomials(),
            self.ring.nvars(),
        ))
    }

    /// Dimension of the projective scheme; -1 encodes empty. Requires a
    /// homogeneous ideal.
    pub fn projective_dimension(&self) -> Result<i64> {
        if !self.homogeneous {
            return Err(Error::NonHomogeneous("projective dimension input".into()));
        }
        Ok((self.affine_dimension()? - 1).max(-1))
    }

    /// Affine dimension by the independent Hilbert-series route.
    pub fn hilbert_dimension(&self) -> Result<i64> {
        if !self.homogeneous {
            return Err(Error::NonHomogeneous("Hilbert dimension input".into()));
        }
        let basis = self.canonical_basis()?;
        Ok(dimension::hilbert_series_dimension(
            &basis.leading_monomials(),
            self.ring.nvars(),
        ))
    }
}

/// Exact division by a single polynomial: `Some(q)` with `f = q*g`, or
/// `None` when `f` is not a multiple.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Result<Option<Polynomial>> {
    if g.is_zero() {
        return Err(Error::ZeroArgument("division by zero polynomial"));
    }
    let ord = MonomialOrder::GrevLex;
    let ring = f.ring().clone();
    let (gm, gc) = {
        let (m, c) = g.leading_term(&ord).expect("nonzero");
        (m.clone(), c.clone())
    };
    let mut work = f.clone();
    let mut quotient = Polynomial::zero(&ring);
    while !work.is_zero() {
        let (m, c) = {
            let (m, c) = work.leading_term(&ord).expect("nonzero");
            (m.clone(), c.clone())
        };
        let Some(qm) = m.try_div(&gm) else {
            return Ok(None);
        };
        let qc = c.div(&gc)?;
        let term = Polynomial::from_terms(&ring, [(qm.clone(), qc.clone())]);
        quotient = quotient.checked_add(&term)?;
        work = work.checked_sub(&g.mul_term(&qm, &qc))?;
    }
    Ok(Some(quotient))
}
