//! Construction of the boundary for a given center: embed the center in a
//! reduced complete intersection by verified random degree-d combinations,
//! take the chosen hypersurfaces as the boundary divisors, and derive the
//! per-component discrepancy by exact arithmetic.
//!
//! Genericity is sample-then-verify: coefficients are drawn from a bounded
//! integer box (or uniformly over F_p), every candidate is checked, and
//! failures are retried up to a configured cap. Nothing unverified is ever
//! certified; the open-set argument only guarantees retries terminate fast.

use rand_chacha::ChaCha20Rng;

use crate::certificate::{
    ideal_to_repr, poly_to_repr, BoundaryRepr, Certificate, CoCertifiedCenter, CombinationRepr,
    Conclusion, ConfigRepr, DiscrepancyRecord, HypothesisSet, RingRepr, SingAmbientMode,
    SingAmbientRepr, StepVerdictsRepr, WitnessRepr, FORMAT_VERSION, POTENTIAL_LC_REQUIRED,
};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::ideal::Ideal;
use crate::linalg::graded_piece_basis;
use crate::poly::{jacobian_matrix, minors_ideal, Polynomial};
use crate::predicates::{
    is_component, is_generically_reduced, is_non_zerodivisor, singular_locus_ideal,
    variety_containment, PredicateVerdict,
};

#[derive(Clone, Debug)]
pub struct BuildConfig {
    /// Rational coefficients are drawn from `{-sample_bound, ..., sample_bound}`.
    pub sample_bound: i64,
    /// Per-combination verification retries before giving up.
    pub max_retries: u32,
    /// Cap on the codimension of the subset sweep in the special pipeline.
    pub max_r: usize,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig { sample_bound: 20, max_retries: 10, max_r: 6 }
    }
}

/// Ambient singular locus with a record of how it was obtained.
#[derive(Clone, Debug)]
pub struct SingAmbient {
    pub mode: SingAmbientMode,
    pub ideal: Ideal,
}

impl SingAmbient {
    /// Resolution order: a declared ideal wins; a zero ambient ideal means
    /// projective space, which is smooth; otherwise the ambient is treated
    /// as a declared complete intersection and its non-smooth locus is
    /// computed by the Jacobian criterion.
    pub fn resolve(ambient: &Ideal, declared: Option<Ideal>) -> Result<SingAmbient> {
        if let Some(ideal) = declared {
            return Ok(SingAmbient { mode: SingAmbientMode::Declared, ideal });
        }
        if ambient.is_zero_ideal() {
            return Ok(SingAmbient {
                mode: SingAmbientMode::SmoothAmbient,
                ideal: Ideal::unit(ambient.ring()),
            });
        }
        Ok(SingAmbient {
            mode: SingAmbientMode::ComputedJacobian,
            ideal: singular_locus_ideal(ambient)?,
        })
    }

    pub fn to_repr(&self) -> SingAmbientRepr {
        SingAmbientRepr { mode: self.mode, ideal: ideal_to_repr(&self.ideal) }
    }
}

/// One verified random combination `g = sum of coefficients times basis`.
#[derive(Clone, Debug)]
pub struct GenericCombination {
    pub coefficients: Vec<FieldElement>,
    pub basis_size: usize,
    pub retries: u32,
    pub poly: Polynomial,
}

#[derive(Clone, Debug)]
pub struct StepVerdicts {
    pub non_zerodivisor: PredicateVerdict,
    pub generically_reduced: PredicateVerdict,
    pub dimension_after: i64,
}

/// The full embedding trace: the chosen combinations, the per-step verdicts,
/// componenthood of the center, and the transversality verdict.
#[derive(Clone, Debug)]
pub struct CompleteIntersectionWitness {
    pub ambient: Ideal,
    pub center: Ideal,
    pub sing_ambient: SingAmbient,
    pub codimension: u32,
    pub degree: u32,
    pub dimension_chain: Vec<i64>,
    pub combinations: Vec<GenericCombination>,
    pub step_verdicts: Vec<StepVerdicts>,
    pub component: PredicateVerdict,
    pub snc: PredicateVerdict,
    pub witness_ideal: Ideal,
}

impl CompleteIntersectionWitness {
    /// Every recorded verdict passed.
    pub fn verified(&self) -> bool {
        self.step_verdicts
            .iter()
            .all(|s| s.non_zerodivisor.pass && s.generically_reduced.pass)
            && self.component.pass
            && self.snc.pass
    }

    pub fn chosen_polys(&self) -> Vec<Polynomial> {
        self.combinations.iter().map(|c| c.poly.clone()).collect()
    }
}

/// The degree at which the center's graded pieces stabilize as a module
/// over the coordinate ring: the maximum generator degree of the canonical
/// basis. Every higher graded piece is spanned by multiples of this one.
pub fn degree_bound(center: &Ideal) -> Result<u32> {
    if center.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    center.max_basis_degree()
}

fn sample_combination(
    basis: &[Polynomial],
    rng: &mut ChaCha20Rng,
    config: &BuildConfig,
) -> (Vec<FieldElement>, Polynomial) {
    let ring = basis[0].ring().clone();
    let coeffs: Vec<FieldElement> = (0..basis.len())
        .map(|_| ring.field().sample(rng, config.sample_bound))
        .collect();
    let mut g = Polynomial::zero(&ring);
    for (c, b) in coeffs.iter().zip(basis) {
        g = g.checked_add(&b.scale(c)).expect("same ring");
    }
    (coeffs, g)
}

pub struct PickOutcome {
    pub combination: GenericCombination,
    pub verdicts: StepVerdicts,
    pub extended: Ideal,
}

/// Samples combinations until one passes all checks: nonzero, a
/// non-zerodivisor modulo the current ideal, exact dimension drop, and
/// generic reducedness of the extended ideal. Exhausted retries return a
/// genericity failure carrying everything that failed.
pub fn pick_generic_combination(
    basis: &[Polynomial],
    current: &Ideal,
    sing_ambient: &Ideal,
    rng: &mut ChaCha20Rng,
    config: &BuildConfig,
) -> Result<PickOutcome> {
    if basis.is_empty() {
        return Err(Error::GenericityFailure {
            stage: "generic-combination".into(),
            attempts: 0,
            failed_verdicts: vec![],
        });
    }
    let current_dim = current.affine_dimension()?;
    let mut failed: Vec<PredicateVerdict> = Vec::new();
    for attempt in 0..config.max_retries {
        let (coefficients, g) = sample_combination(basis, rng, config);
        if g.is_zero() {
            continue;
        }
        let ndz = is_non_zerodivisor(&g, current)?;
        if !ndz.pass {
            failed.push(ndz);
            continue;
        }
        let extended = current.plus(std::slice::from_ref(&g))?;
        let dimension_after = extended.affine_dimension()?;
        if dimension_after != current_dim - 1 {
            failed.push(PredicateVerdict {
                name: "dimension_drop".into(),
                rule: "dimension-chain".into(),
                pass: false,
                evidence: crate::predicates::Evidence::DimensionChain {
                    start: current_dim,
                    chain: vec![dimension_after],
                },
            });
            continue;
        }
        let gr = is_generically_reduced(&extended, sing_ambient)?;
        if !gr.pass {
            failed.push(gr);
            continue;
        }
        return Ok(PickOutcome {
            combination: GenericCombination {
                coefficients,
                basis_size: basis.len(),
                retries: attempt,
                poly: g,
            },
            verdicts: StepVerdicts {
                non_zerodivisor: ndz,
                generically_reduced: gr,
                dimension_after,
            },
            extended,
        });
    }
    Err(Error::GenericityFailure {
        stage: "generic-combination".into(),
        attempts: config.max_retries,
        failed_verdicts: failed,
    })
}

/// Transversality along the witness: the locus where the chosen forms fail
/// to cut transversely (their Jacobian drops below full rank on the
/// intersection) must sit inside the union of the singular loci of the
/// intersection and the ambient.
pub fn snc_locus_verdict(
    witness_ideal: &Ideal,
    chosen: &[Polynomial],
    sing_ambient: &Ideal,
) -> Result<PredicateVerdict> {
    let ring = witness_ideal.ring();
    let jac = jacobian_matrix(chosen)?;
    let minors = minors_ideal(&jac, chosen.len(), ring)?;
    let non_transversality = witness_ideal.plus(&minors)?;
    let sing_w = singular_locus_ideal(witness_ideal)?;
    let target = sing_w.product(sing_ambient)?;
    let mut verdict = variety_containment(&non_transversality, &target)?;
    verdict.name = "snc_transversality".into();
    Ok(verdict)
}

/// Embeds the center in a reduced complete intersection of the same
/// codimension inside the ambient, one verified combination per step.
pub fn embed_in_ci(
    ambient: &Ideal,
    center: &Ideal,
    sing_ambient: SingAmbient,
    rng: &mut ChaCha20Rng,
    config: &BuildConfig,
) -> Result<CompleteIntersectionWitness> {
    if !ambient.is_homogeneous() || !center.is_homogeneous() {
        return Err(Error::NonHomogeneous("pipeline input ideals".into()));
    }
    if center.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    for g in ambient.gens() {
        if !center.contains(g)? {
            return Err(Error::CenterNotInAmbient);
        }
    }
    // the center must not sit inside the ambient singular locus
    if variety_containment(center, &sing_ambient.ideal)?.pass {
        return Err(Error::CenterInSingularLocus);
    }
    let r = ambient.projective_dimension()? - center.projective_dimension()?;
    if r <= 0 {
        return Err(Error::CodimensionZero);
    }
    let r = r as u32;
    let degree = degree_bound(center)?;
    let basis = graded_piece_basis(&center.canonical_gens()?, degree)?;

    let mut current = ambient.clone();
    let mut dimension_chain = vec![ambient.affine_dimension()?];
    let mut combinations = Vec::with_capacity(r as usize);
    let mut step_verdicts = Vec::with_capacity(r as usize);
    for _ in 0..r {
        let outcome =
            pick_generic_combination(&basis, &current, &sing_ambient.ideal, rng, config)?;
        dimension_chain.push(outcome.verdicts.dimension_after);
        combinations.push(outcome.combination);
        step_verdicts.push(outcome.verdicts);
        current = outcome.extended;
    }

    let component = is_component(center, &current)?;
    if !component.pass {
        return Err(Error::GenericityFailure {
            stage: "componenthood".into(),
            attempts: config.max_retries,
            failed_verdicts: vec![component],
        });
    }
    let chosen: Vec<Polynomial> = combinations.iter().map(|c| c.poly.clone()).collect();
    let snc = snc_locus_verdict(&current, &chosen, &sing_ambient.ideal)?;

    Ok(CompleteIntersectionWitness {
        ambient: ambient.clone(),
        center: center.clone(),
        sing_ambient,
        codimension: r,
        degree,
        dimension_chain,
        combinations,
        step_verdicts,
        component,
        snc,
        witness_ideal: current,
    })
}

/// Exact discrepancy arithmetic for a fully verified witness.
pub fn discrepancy_certificate(witness: &CompleteIntersectionWitness) -> Result<DiscrepancyRecord> {
    if !witness.verified() {
        return Err(Error::SncFailure { verdict: Box::new(witness.snc.clone()) });
    }
    Ok(DiscrepancyRecord::from_codimension(witness.codimension))
}

/// Componenthood check for an additional candidate center against the
/// witness intersection; the construction certifies every component.
pub fn co_certify_center(
    witness: &CompleteIntersectionWitness,
    candidate: &Ideal,
) -> Result<PredicateVerdict> {
    is_component(candidate, &witness.witness_ideal)
}

#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    pub config: BuildConfig,
    pub declared_sing_ambient: Option<Ideal>,
    /// Extra candidate centers to co-certify against the same witness.
    pub co_center_candidates: Vec<Ideal>,
}

/// The end-to-end pipeline: embed, verify transversality, derive the
/// discrepancies, and assemble the certificate. The conclusion is asserted
/// only when all checks passed and all required hypotheses are declared.
pub fn build_boundary(
    ambient: &Ideal,
    center: &Ideal,
    declared: &HypothesisSet,
    seed: u64,
    options: &BuildOptions,
) -> Result<Certificate> {
    use rand::SeedableRng;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let sing = SingAmbient::resolve(ambient, options.declared_sing_ambient.clone())?;
    let witness = embed_in_ci(ambient, center, sing, &mut rng, &options.config)?;
    if !witness.snc.pass {
        return Err(Error::SncFailure { verdict: Box::new(witness.snc.clone()) });
    }
    let discrepancy = discrepancy_certificate(&witness)?;

    let mut co_certified = Vec::new();
    for cand in &options.co_center_candidates {
        let verdict = co_certify_center(&witness, cand)?;
        co_certified.push(CoCertifiedCenter { ideal: ideal_to_repr(cand), verdict });
    }

    let ring = ambient.ring();
    let failed_checks = if witness.verified() {
        vec![]
    } else {
        vec!["witness verification".into()]
    };
    let conclusion = Conclusion::derive(
        "The center is a log canonical center for the pair formed by the \
         ambient variety and the constructed boundary, conditional on the \
         declared hypotheses. The pair is not claimed to be log canonical \
         away from the center; every component of the witness intersection \
         is co-certified by the same construction.",
        &POTENTIAL_LC_REQUIRED,
        declared,
        failed_checks,
    );

    let boundary = BoundaryRepr {
        divisors: witness
            .combinations
            .iter()
            .map(|c| crate::certificate::DivisorRepr {
                equation: poly_to_repr(&c.poly),
                coefficient: ring.field().one().canonical_string(),
            })
            .collect(),
    };

    Ok(Certificate {
        version: FORMAT_VERSION.into(),
        ring: RingRepr::from_ring(ring),
        ambient_ideal: ideal_to_repr(ambient),
        center_ideal: ideal_to_repr(center),
        witness: WitnessRepr::CompleteIntersection {
            codimension: witness.codimension,
            degree: witness.degree,
            dimension_chain: witness.dimension_chain.clone(),
            combinations: witness
                .combinations
                .iter()
                .map(|c| CombinationRepr {
                    coefficients: c.coefficients.iter().map(|x| x.canonical_string()).collect(),
                    basis_size: c.basis_size,
                    retries: c.retries,
                    polynomial: poly_to_repr(&c.poly),
                })
                .collect(),
            step_verdicts: witness
                .step_verdicts
                .iter()
                .map(|s| StepVerdictsRepr {
                    non_zerodivisor: s.non_zerodivisor.clone(),
                    generically_reduced: s.generically_reduced.clone(),
                    dimension_after: s.dimension_after,
                })
                .collect(),
            component: witness.component.clone(),
            snc: witness.snc.clone(),
            sing_ambient: witness.sing_ambient.to_repr(),
            co_certified_centers: co_certified,
            conclusion,
        },
        boundary,
        discrepancy,
        hypotheses: declared.clone(),
        cited_steps: crate::certificate::potential_lc_cited_steps(),
        seed,
        config: ConfigRepr {
            mode: "potential-lc".into(),
            sample_bound: options.config.sample_bound,
            max_retries: options.config.max_retries,
            max_r: options.config.max_r,
            char_caveat: ring.field().is_prime_field(),
        },
    })
}
