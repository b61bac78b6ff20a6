//! Certificate data model, canonical serialization, and the independent
//! re-verifier.
//!
//! A certificate is a self-contained record: the inputs, every chosen
//! coefficient, every verdict with its evidence, the discrepancy arithmetic,
//! the declared hypotheses, and the cited logical steps that consume them.
//! Serialization is canonical JSON with struct-ordered keys and no floating
//! point anywhere; numbers that are not plain integers travel as exact
//! strings. `reverify` recomputes everything recomputable from the stored
//! inputs, without randomness, and reports the first disagreements.

use serde::{Deserialize, Serialize};

use crate::builder;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::{Polynomial, Ring, RingContext};
use crate::predicates::{Evidence, PredicateVerdict};

pub const FORMAT_VERSION: &str = "1";

// ---------------------------------------------------------------------------
// hypotheses

/// The declarable hypotheses. They are inputs, never computed; conclusions
/// reference only declared names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HypothesisName {
    XNormal,
    XQGorenstein,
    KxCartier,
    XCm,
    XLc,
    ZPrime,
    WLc,
    WIrreducible,
    NotInSingX,
}

impl HypothesisName {
    pub const ALL: [HypothesisName; 9] = [
        HypothesisName::XNormal,
        HypothesisName::XQGorenstein,
        HypothesisName::KxCartier,
        HypothesisName::XCm,
        HypothesisName::XLc,
        HypothesisName::ZPrime,
        HypothesisName::WLc,
        HypothesisName::WIrreducible,
        HypothesisName::NotInSingX,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            HypothesisName::XNormal => "x_normal",
            HypothesisName::XQGorenstein => "x_q_gorenstein",
            HypothesisName::KxCartier => "kx_cartier",
            HypothesisName::XCm => "x_cm",
            HypothesisName::XLc => "x_lc",
            HypothesisName::ZPrime => "z_prime",
            HypothesisName::WLc => "w_lc",
            HypothesisName::WIrreducible => "w_irreducible",
            HypothesisName::NotInSingX => "not_in_sing_x",
        }
    }

    pub fn parse(s: &str) -> Option<HypothesisName> {
        Self::ALL.iter().copied().find(|h| h.as_str() == s)
    }
}

/// Declared hypotheses with free-text provenance per declaration.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisSet {
    pub entries: std::collections::BTreeMap<HypothesisName, String>,
}

impl HypothesisSet {
    pub fn declare(&mut self, name: HypothesisName, provenance: impl Into<String>) {
        self.entries.insert(name, provenance.into());
    }

    pub fn with(mut self, name: HypothesisName) -> Self {
        self.declare(name, "");
        self
    }

    pub fn is_declared(&self, name: HypothesisName) -> bool {
        self.entries.contains_key(&name)
    }

    pub fn missing_of(&self, required: &[HypothesisName]) -> Vec<HypothesisName> {
        required
            .iter()
            .copied()
            .filter(|h| !self.is_declared(*h))
            .collect()
    }
}

/// Hypotheses the potential-lc pipeline consumes.
pub const POTENTIAL_LC_REQUIRED: [HypothesisName; 5] = [
    HypothesisName::XNormal,
    HypothesisName::XQGorenstein,
    HypothesisName::XCm,
    HypothesisName::ZPrime,
    HypothesisName::NotInSingX,
];

/// Hypotheses the special-lc pipeline consumes.
pub const SPECIAL_LC_REQUIRED: [HypothesisName; 6] = [
    HypothesisName::XNormal,
    HypothesisName::XLc,
    HypothesisName::KxCartier,
    HypothesisName::WLc,
    HypothesisName::WIrreducible,
    HypothesisName::NotInSingX,
];

// ---------------------------------------------------------------------------
// cited steps and conclusions

/// A logical step the certificate cites instead of computing, with the
/// declared hypotheses it consumes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitedStep {
    pub key: String,
    pub statement: String,
    pub consumes: Vec<HypothesisName>,
}

fn step(key: &str, statement: &str, consumes: &[HypothesisName]) -> CitedStep {
    CitedStep {
        key: key.into(),
        statement: statement.into(),
        consumes: consumes.to_vec(),
    }
}

/// The cited-step ledger for the potential-lc pipeline.
pub fn potential_lc_cited_steps() -> Vec<CitedStep> {
    vec![
        step(
            "generic-reduction-to-cohen-macaulay",
            "Being a log canonical center is decided on a dense open subset, \
             so the construction may assume the ambient coordinate ring is \
             Cohen-Macaulay on the relevant locus.",
            &[HypothesisName::XCm],
        ),
        step(
            "serre-depth-half",
            "The depth half (S2) of the reducedness and normality criteria \
             for the constructed complete intersections follows from the \
             declared Cohen-Macaulay hypothesis; only the smoothness half is \
             computed.",
            &[HypothesisName::XCm],
        ),
        step(
            "blowup-discrepancy-arithmetic",
            "On the normalization of the blow-up along the complete \
             intersection, the canonical class picks up each exceptional \
             component with coefficient codimension minus one, and each \
             boundary divisor pulls back with multiplicity one on every \
             exceptional component; the per-component discrepancy follows by \
             exact integer arithmetic.",
            &[HypothesisName::XNormal, HypothesisName::XQGorenstein],
        ),
        step(
            "lc-center-conclusion",
            "Granting the declared hypotheses, the center is a log canonical \
             center for the pair formed with the constructed boundary. The \
             pair is not claimed to be log canonical away from the center.",
            &POTENTIAL_LC_REQUIRED,
        ),
    ]
}

/// The cited-step ledger for the special-lc pipeline.
pub fn special_lc_cited_steps() -> Vec<CitedStep> {
    vec![
        step(
            "partial-intersection-du-bois-pairs",
            "Each consecutive pair of partial intersections is a Du Bois \
             pair, by descending induction from the declared log canonicity \
             of the full intersection, deforming Du Bois singularities along \
             reduced Cartier divisors and using the two-of-three property of \
             Du Bois pairs.",
            &[HypothesisName::WLc],
        ),
        step(
            "du-bois-union-excision",
            "The ambient together with the union of the boundary divisors is \
             a Du Bois pair, by induction on the number of divisors through \
             the excision property, using the verified reducedness of every \
             partial intersection.",
            &[HypothesisName::XLc],
        ),
        step(
            "lc-pair-from-du-bois-pair",
            "A Du Bois pair whose reduced boundary is supported in the \
             divisor, with Cartier log canonical class, is a log canonical \
             pair; applied with the declared Cartier hypothesis.",
            &[HypothesisName::KxCartier, HypothesisName::XNormal],
        ),
        step(
            "lc-center-conclusion",
            "Granting the declared hypotheses and all verified subset \
             reports, the pair with the constructed boundary has log \
             canonical singularities and the given subvariety is one of its \
             log canonical centers.",
            &SPECIAL_LC_REQUIRED,
        ),
    ]
}

/// A conclusion is asserted only when every computable verdict passed and
/// every required hypothesis is declared; otherwise it is withheld with the
/// reasons on record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conclusion {
    pub asserted: bool,
    pub statement: String,
    pub missing_hypotheses: Vec<HypothesisName>,
    pub failed_checks: Vec<String>,
}

impl Conclusion {
    pub fn derive(
        statement: &str,
        required: &[HypothesisName],
        declared: &HypothesisSet,
        failed_checks: Vec<String>,
    ) -> Conclusion {
        let missing = declared.missing_of(required);
        Conclusion {
            asserted: missing.is_empty() && failed_checks.is_empty(),
            statement: statement.into(),
            missing_hypotheses: missing,
            failed_checks,
        }
    }
}

// ---------------------------------------------------------------------------
// discrepancy arithmetic

/// Exact divisor arithmetic on the normalized blow-up: with `r` the
/// codimension, the canonical class carries each exceptional component with
/// coefficient `r - 1`, each of the `r` boundary divisors pulls back with
/// multiplicity one, and the boundary coefficients are one, so every
/// exceptional component has discrepancy `(r - 1) - r = -1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyRecord {
    pub codimension: u32,
    pub canonical_pullback_coefficient: i64,
    pub pullback_multiplicity: i64,
    pub boundary_coefficient: i64,
    pub discrepancy_per_component: i64,
}

impl DiscrepancyRecord {
    pub fn from_codimension(r: u32) -> DiscrepancyRecord {
        let canonical = r as i64 - 1;
        let mult = 1i64;
        let coeff = 1i64;
        DiscrepancyRecord {
            codimension: r,
            canonical_pullback_coefficient: canonical,
            pullback_multiplicity: mult,
            boundary_coefficient: coeff,
            discrepancy_per_component: canonical - (r as i64) * coeff * mult,
        }
    }

    /// Re-derives the arithmetic and checks internal consistency.
    pub fn verify(&self) -> bool {
        *self == DiscrepancyRecord::from_codimension(self.codimension)
    }
}

// ---------------------------------------------------------------------------
// structural representations

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum FieldRepr {
    Rational,
    Prime { modulus: u64 },
}

impl FieldRepr {
    pub fn from_spec(spec: &FieldSpec) -> FieldRepr {
        match spec {
            FieldSpec::Rational => FieldRepr::Rational,
            FieldSpec::Prime(p) => FieldRepr::Prime { modulus: *p },
        }
    }

    pub fn to_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldRepr::Rational => Ok(FieldSpec::Rational),
            FieldRepr::Prime { modulus } => FieldSpec::prime(*modulus),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingRepr {
    pub field: FieldRepr,
    pub variables: Vec<String>,
}

impl RingRepr {
    pub fn from_ring(ring: &Ring) -> RingRepr {
        RingRepr {
            field: FieldRepr::from_spec(ring.field()),
            variables: ring.vars().to_vec(),
        }
    }

    pub fn to_ring(&self) -> Result<Ring> {
        RingContext::new(self.variables.clone(), self.field.to_spec()?)
    }
}

/// One term: explicit exponent vector plus exact coefficient string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

/// Degree-sorted term list (descending canonical order).
pub type PolyRepr = Vec<TermRepr>;

pub fn poly_to_repr(p: &Polynomial) -> PolyRepr {
    p.terms()
        .rev()
        .map(|(m, c)| TermRepr {
            exponents: m.exponents().to_vec(),
            coefficient: c.canonical_string(),
        })
        .collect()
}

pub fn poly_from_repr(ring: &Ring, repr: &PolyRepr) -> Result<Polynomial> {
    let mut terms = Vec::with_capacity(repr.len());
    for t in repr {
        if t.exponents.len() != ring.nvars() {
            return Err(Error::Certificate(format!(
                "exponent vector of length {} in a ring with {} variables",
                t.exponents.len(),
                ring.nvars()
            )));
        }
        let c = FieldElement::from_canonical_string(ring.field(), &t.coefficient)?;
        if c.is_zero() {
            return Err(Error::Certificate("stored zero coefficient".into()));
        }
        terms.push((Monomial::new(t.exponents.clone()), c));
    }
    let p = Polynomial::from_terms(ring, terms.clone());
    if p.num_terms() != terms.len() {
        return Err(Error::Certificate(
            "duplicate monomials in stored polynomial".into(),
        ));
    }
    Ok(p)
}

pub fn ideal_to_repr(i: &Ideal) -> Vec<PolyRepr> {
    i.gens().iter().map(poly_to_repr).collect()
}

pub fn ideal_from_repr(ring: &Ring, repr: &[PolyRepr]) -> Result<Ideal> {
    let gens = repr
        .iter()
        .map(|p| poly_from_repr(ring, p))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// How the singular locus of the ambient entered the run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingAmbientMode {
    Declared,
    SmoothAmbient,
    ComputedJacobian,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingAmbientRepr {
    pub mode: SingAmbientMode,
    pub ideal: Vec<PolyRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinationRepr {
    pub coefficients: Vec<String>,
    pub basis_size: usize,
    pub retries: u32,
    pub polynomial: PolyRepr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepVerdictsRepr {
    pub non_zerodivisor: PredicateVerdict,
    pub generically_reduced: PredicateVerdict,
    pub dimension_after: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoCertifiedCenter {
    pub ideal: Vec<PolyRepr>,
    pub verdict: PredicateVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetReportRepr {
    pub subset: Vec<usize>,
    pub ideal: Vec<PolyRepr>,
    pub reduced: PredicateVerdict,
    pub normal: PredicateVerdict,
    pub smooth_away: PredicateVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessRepr {
    /// Trace of the generic-combination embedding pipeline.
    CompleteIntersection {
        codimension: u32,
        degree: u32,
        dimension_chain: Vec<i64>,
        combinations: Vec<CombinationRepr>,
        step_verdicts: Vec<StepVerdictsRepr>,
        component: PredicateVerdict,
        snc: PredicateVerdict,
        sing_ambient: SingAmbientRepr,
        co_certified_centers: Vec<CoCertifiedCenter>,
        conclusion: Conclusion,
    },
    /// Trace of the same-degree remixing pipeline with its subset lattice.
    SpecialMix {
        codimension: u32,
        degree: u32,
        matrix: Vec<Vec<String>>,
        determinant: String,
        mixed_generators: Vec<PolyRepr>,
        ideal_equality: PredicateVerdict,
        regular_sequence: PredicateVerdict,
        subset_reports: Vec<SubsetReportRepr>,
        sing_ambient: SingAmbientRepr,
        conclusion: Conclusion,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorRepr {
    pub equation: PolyRepr,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryRepr {
    pub divisors: Vec<DivisorRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigRepr {
    pub mode: String,
    pub sample_bound: i64,
    pub max_retries: u32,
    pub max_r: usize,
    pub char_caveat: bool,
}

/// Top-level certificate file. Field order here is the canonical key order
/// of the serialized form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub version: String,
    pub ring: RingRepr,
    pub ambient_ideal: Vec<PolyRepr>,
    pub center_ideal: Vec<PolyRepr>,
    pub witness: WitnessRepr,
    pub boundary: BoundaryRepr,
    pub discrepancy: DiscrepancyRecord,
    pub hypotheses: HypothesisSet,
    pub cited_steps: Vec<CitedStep>,
    pub seed: u64,
    pub config: ConfigRepr,
}

impl Certificate {
    /// Canonical bytes: pretty JSON with struct-ordered keys and a trailing
    /// newline. Identical certificates serialize to identical bytes.
    pub fn to_canonical_bytes(&self) -> Result<Vec<u8>> {
        let mut s =
            serde_json::to_string_pretty(self).map_err(|e| Error::Certificate(e.to_string()))?;
        s.push('\n');
        Ok(s.into_bytes())
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Certificate> {
        let text = std::str::from_utf8(bytes)
            .map_err(|e| Error::Certificate(format!("not utf-8: {e}")))?;
        // version gate before the full structural parse
        let envelope: serde_json::Value = serde_json::from_str(text).map_err(|e| {
            Error::Certificate(format!(
                "malformed JSON at line {}, column {}: {e}",
                e.line(),
                e.column()
            ))
        })?;
        match envelope.get("version").and_then(|v| v.as_str()) {
            Some(FORMAT_VERSION) => {}
            Some(other) => return Err(Error::CertificateVersion(other.to_string())),
            None => return Err(Error::Certificate("missing version field".into())),
        }
        serde_json::from_value(envelope).map_err(|e| Error::Certificate(e.to_string()))
    }

    pub fn conclusion(&self) -> &Conclusion {
        match &self.witness {
            WitnessRepr::CompleteIntersection { conclusion, .. } => conclusion,
            WitnessRepr::SpecialMix { conclusion, .. } => conclusion,
        }
    }
}

// ---------------------------------------------------------------------------
// re-verification

/// Original inputs, for exact comparison against what the certificate
/// stores. Optional: without them the re-verifier still re-derives all
/// internal consistency.
pub struct VerifyInputs {
    pub ring: Ring,
    pub ambient_gens: Vec<Polynomial>,
    pub center_gens: Vec<Polynomial>,
    pub hypotheses: HypothesisSet,
}

/// Re-runs every predicate from the stored inputs (no randomness), re-derives
/// the discrepancy arithmetic and the conclusion, and compares with what the
/// certificate claims. The verdict lists every disagreement found.
pub fn reverify(cert: &Certificate, inputs: Option<&VerifyInputs>) -> Result<PredicateVerdict> {
    let mut diffs: Vec<String> = Vec::new();

    if cert.version != FORMAT_VERSION {
        diffs.push(format!("unsupported version {}", cert.version));
    }

    let ring = cert.ring.to_ring()?;
    let ambient = ideal_from_repr(&ring, &cert.ambient_ideal)?;
    let center = ideal_from_repr(&ring, &cert.center_ideal)?;

    if let Some(inp) = inputs {
        if !crate::poly::same_ring(&ring, &inp.ring) {
            diffs.push("ring differs from the problem input".into());
        } else {
            if ambient.gens() != &inp.ambient_gens[..] {
                diffs.push("ambient generators differ from the problem input".into());
            }
            if center.gens() != &inp.center_gens[..] {
                diffs.push("center generators differ from the problem input".into());
            }
        }
        if cert.hypotheses != inp.hypotheses {
            diffs.push("declared hypotheses differ from the problem input".into());
        }
    }

    if !cert.discrepancy.verify() {
        diffs.push(format!(
            "discrepancy record is not the exact arithmetic for codimension {}",
            cert.discrepancy.codimension
        ));
    }

    match &cert.witness {
        WitnessRepr::CompleteIntersection { .. } => {
            reverify_complete_intersection(cert, &ring, &ambient, &center, &mut diffs)?;
        }
        WitnessRepr::SpecialMix { .. } => {
            crate::special::reverify_special_mix(cert, &ring, &ambient, &center, &mut diffs)?;
        }
    }

    let pass = diffs.is_empty();
    Ok(PredicateVerdict {
        name: "certificate_reverification".into(),
        rule: "replay-from-stored-evidence".into(),
        pass,
        evidence: Evidence::RadicalMemberships {
            memberships: diffs.into_iter().map(|d| (d, false)).collect(),
        },
    })
}

fn reverify_complete_intersection(
    cert: &Certificate,
    ring: &Ring,
    ambient: &Ideal,
    center: &Ideal,
    diffs: &mut Vec<String>,
) -> Result<()> {
    let WitnessRepr::CompleteIntersection {
        codimension,
        degree,
        dimension_chain,
        combinations,
        step_verdicts,
        component,
        snc,
        sing_ambient,
        co_certified_centers,
        conclusion,
    } = &cert.witness
    else {
        unreachable!("checked by caller");
    };

    if cert.config.mode != "potential-lc" {
        diffs.push(format!(
            "mode `{}` does not match the witness type",
            cert.config.mode
        ));
    }
    if cert.config.char_caveat != ring.field().is_prime_field() {
        diffs.push("characteristic caveat flag does not match the ring field".into());
    }

    // codimension and degree re-derivation
    let r = ambient.projective_dimension()? - center.projective_dimension()?;
    if r <= 0 || r as u32 != *codimension {
        diffs.push(format!(
            "stored codimension {} but ideals give {}",
            codimension, r
        ));
    }
    match builder::degree_bound(center) {
        Ok(d) if d == *degree => {}
        Ok(d) => diffs.push(format!("stored degree {degree} but the center gives {d}")),
        Err(e) => diffs.push(format!("degree bound replay failed: {e}")),
    }

    // the singular ambient locus: recompute in the stored mode
    let sing_ideal = ideal_from_repr(ring, &sing_ambient.ideal)?;
    match sing_ambient.mode {
        SingAmbientMode::SmoothAmbient => {
            if !sing_ideal.is_unit()? {
                diffs.push("smooth-ambient mode with a non-unit singular locus".into());
            }
        }
        SingAmbientMode::ComputedJacobian => {
            let recomputed = crate::predicates::singular_locus_ideal(ambient)?;
            if !recomputed.canonical_eq(&sing_ideal)? {
                diffs.push(
                    "stored ambient singular locus disagrees with the Jacobian computation"
                        .into(),
                );
            }
        }
        SingAmbientMode::Declared => {}
    }

    // replay the combination chain
    let basis = crate::linalg::graded_piece_basis(&center.canonical_gens()?, *degree)?;
    let mut current = ambient.clone();
    let mut chain = vec![ambient.affine_dimension()?];
    if combinations.len() != *codimension as usize {
        diffs.push(format!(
            "{} combinations stored for codimension {}",
            combinations.len(),
            codimension
        ));
    }
    if step_verdicts.len() != combinations.len() {
        diffs.push("one verdict block per combination is required".into());
    }
    for (i, comb) in combinations.iter().enumerate() {
        if comb.basis_size != basis.len() {
            diffs.push(format!(
                "step {}: stored basis size {} but the degree-{degree} piece has {}",
                i + 1,
                comb.basis_size,
                basis.len()
            ));
        }
        if comb.coefficients.len() != basis.len() {
            diffs.push(format!("step {}: coefficient count mismatch", i + 1));
            break;
        }
        let mut g = Polynomial::zero(ring);
        for (c, b) in comb.coefficients.iter().zip(&basis) {
            let c = FieldElement::from_canonical_string(ring.field(), c)?;
            g = g.checked_add(&b.scale(&c))?;
        }
        let stored = poly_from_repr(ring, &comb.polynomial)?;
        if g != stored {
            diffs.push(format!(
                "step {}: stored combination does not equal the coefficient expansion",
                i + 1
            ));
        }
        if !center.contains(&stored)? {
            diffs.push(format!(
                "step {}: combination is not in the center ideal",
                i + 1
            ));
        }
        let Some(sv) = step_verdicts.get(i) else { continue };
        let ndz = crate::predicates::is_non_zerodivisor(&stored, &current)?;
        if ndz != sv.non_zerodivisor {
            diffs.push(format!(
                "step {}: non-zerodivisor verdict replays differently",
                i + 1
            ));
        }
        current = current.plus(std::slice::from_ref(&stored))?;
        let dim = current.affine_dimension()?;
        chain.push(dim);
        if dim != sv.dimension_after {
            diffs.push(format!("step {}: stored dimension after step differs", i + 1));
        }
        let gr = crate::predicates::is_generically_reduced(&current, &sing_ideal)?;
        if gr != sv.generically_reduced {
            diffs.push(format!(
                "step {}: reducedness verdict replays differently",
                i + 1
            ));
        }
    }
    if &chain != dimension_chain {
        diffs.push("dimension chain replays differently".into());
    }

    // componenthood, transversality, boundary
    let witness_ideal = current;
    match crate::predicates::is_component(center, &witness_ideal) {
        Ok(comp) => {
            if &comp != component {
                diffs.push("componenthood verdict replays differently".into());
            }
        }
        Err(e) => diffs.push(format!("componenthood replay failed: {e}")),
    }
    let gs: Vec<Polynomial> = combinations
        .iter()
        .map(|c| poly_from_repr(ring, &c.polynomial))
        .collect::<Result<Vec<_>>>()?;
    match builder::snc_locus_verdict(&witness_ideal, &gs, &sing_ideal) {
        Ok(v) => {
            if &v != snc {
                diffs.push("transversality verdict replays differently".into());
            }
        }
        Err(e) => diffs.push(format!("transversality replay failed: {e}")),
    }

    if cert.boundary.divisors.len() != gs.len() {
        diffs.push("boundary needs one divisor per combination".into());
    }
    for (i, div) in cert.boundary.divisors.iter().enumerate() {
        if div.coefficient != ring.field().one().canonical_string() {
            diffs.push(format!(
                "divisor {}: boundary coefficient must be one",
                i + 1
            ));
        }
        if let Some(g) = gs.get(i) {
            if &poly_from_repr(ring, &div.equation)? != g {
                diffs.push(format!(
                    "divisor {}: equation differs from the combination",
                    i + 1
                ));
            }
        }
    }

    if cert.discrepancy.codimension != *codimension {
        diffs.push("discrepancy record codimension differs from the witness".into());
    }

    for (i, co) in co_certified_centers.iter().enumerate() {
        let cand = ideal_from_repr(ring, &co.ideal)?;
        match crate::predicates::is_component(&cand, &witness_ideal) {
            Ok(v) => {
                if v != co.verdict {
                    diffs.push(format!(
                        "co-certified center {}: verdict replays differently",
                        i + 1
                    ));
                }
            }
            Err(e) => diffs.push(format!("co-certified center {}: replay failed: {e}", i + 1)),
        }
    }

    if cert.cited_steps != potential_lc_cited_steps() {
        diffs.push("cited-step ledger differs from the fixed ledger".into());
    }

    // conclusion: asserted iff hypotheses complete and everything passed
    let mut failed = Vec::new();
    for (i, sv) in step_verdicts.iter().enumerate() {
        if !sv.non_zerodivisor.pass {
            failed.push(format!("step {}: non_zerodivisor", i + 1));
        }
        if !sv.generically_reduced.pass {
            failed.push(format!("step {}: generically_reduced", i + 1));
        }
    }
    if !component.pass {
        failed.push("componenthood".into());
    }
    if !snc.pass {
        failed.push("snc_transversality".into());
    }
    let expected = Conclusion::derive(
        &conclusion.statement,
        &POTENTIAL_LC_REQUIRED,
        &cert.hypotheses,
        failed,
    );
    if &expected != conclusion {
        diffs.push("conclusion does not follow from the stored verdicts and declarations".into());
    }
    Ok(())
}
