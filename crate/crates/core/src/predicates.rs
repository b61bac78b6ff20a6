//! The checkable hypotheses of the construction, as verdicts with evidence.
//!
//! Each predicate compares canonical data (reduced bases, dimensions) and
//! records enough of it to re-run the check deterministically from the
//! certificate alone. A failed check is data, not an error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::{jacobian_matrix, minors_ideal, Polynomial};

/// Evidence attached to a verdict; canonical bases are stored in display
/// form, which round-trips through the expression parser.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    QuotientComparison {
        ideal: Vec<String>,
        quotient: Vec<String>,
    },
    DimensionChain {
        start: i64,
        chain: Vec<i64>,
    },
    DimensionCompare {
        locus: Vec<String>,
        locus_dimension: i64,
        variety_dimension: i64,
    },
    CodimensionCompare {
        locus: Vec<String>,
        locus_dimension: i64,
        variety_dimension: i64,
        required_codimension: i64,
    },
    RadicalMemberships {
        memberships: Vec<(String, bool)>,
    },
    Componenthood {
        generators_contained: bool,
        center_dimension: i64,
        intersection_dimension: i64,
    },
    Declared {
        names: Vec<String>,
    },
    Vacuous,
}

/// Outcome of one named check: the rule that ran, whether it passed, and
/// the data it compared.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateVerdict {
    pub name: String,
    pub rule: String,
    pub pass: bool,
    pub evidence: Evidence,
}

impl PredicateVerdict {
    fn new(name: &str, rule: &str, pass: bool, evidence: Evidence) -> Self {
        PredicateVerdict { name: name.into(), rule: rule.into(), pass, evidence }
    }

    pub fn declared(name: &str, names: Vec<String>) -> Self {
        PredicateVerdict::new(name, "declared-hypotheses", true, Evidence::Declared { names })
    }

    pub fn vacuous(name: &str) -> Self {
        PredicateVerdict::new(name, "vacuously-true", true, Evidence::Vacuous)
    }
}

fn canonical_strings(i: &Ideal) -> Result<Vec<String>> {
    Ok(i.canonical_gens()?.iter().map(|p| p.to_string()).collect())
}

/// Non-zerodivisor test: `g` is a non-zerodivisor modulo `I` exactly when
/// the colon ideal `I : (g)` equals `I`.
pub fn is_non_zerodivisor(g: &Polynomial, i: &Ideal) -> Result<PredicateVerdict> {
    if g.is_zero() {
        return Err(Error::ZeroArgument("non-zerodivisor candidate"));
    }
    let quotient = i.quotient(g)?;
    let pass = quotient.canonical_eq(i)?;
    Ok(PredicateVerdict::new(
        "non_zerodivisor",
        "colon-ideal-stability",
        pass,
        Evidence::QuotientComparison {
            ideal: canonical_strings(i)?,
            quotient: canonical_strings(&quotient)?,
        },
    ))
}

/// Regular-sequence test by exact dimension drops: appending each element
/// must lower the affine dimension by exactly one.
pub fn is_regular_sequence(gs: &[Polynomial], ambient: &Ideal) -> Result<PredicateVerdict> {
    if ambient.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    let start = ambient.affine_dimension()?;
    let mut chain = Vec::with_capacity(gs.len());
    let mut current = ambient.clone();
    let mut pass = true;
    for (step, g) in gs.iter().enumerate() {
        if g.is_zero() {
            return Err(Error::ZeroArgument("regular sequence entry"));
        }
        current = current.plus(std::slice::from_ref(g))?;
        let d = current.affine_dimension()?;
        chain.push(d);
        if d != start - (step as i64 + 1) {
            pass = false;
            break;
        }
    }
    Ok(PredicateVerdict::new(
        "regular_sequence",
        "dimension-chain",
        pass,
        Evidence::DimensionChain { start, chain },
    ))
}

/// Ideal of the non-smooth locus: the input ideal plus all c-by-c minors of
/// the Jacobian of its canonical generating set, where c is the codimension
/// of the vanishing locus in projective space. Result is returned in
/// canonical form. The input must contain the ambient relations already.
pub fn singular_locus_ideal(i: &Ideal) -> Result<Ideal> {
    if i.is_unit()? {
        return Err(Error::UnitIdeal);
    }
    if i.is_zero_ideal() {
        // projective space is smooth
        return Ok(Ideal::unit(i.ring()));
    }
    let n = i.ring().nvars() as i64;
    let c = n - i.affine_dimension()?;
    let gens = i.canonical_gens()?;
    let jac = jacobian_matrix(&gens)?;
    let minors = minors_ideal(&jac, c as usize, i.ring())?;
    let sing = i.plus(&minors)?;
    Ideal::new(i.ring(), sing.canonical_gens()?)
}

fn union_with_ambient_sing(
    sing: &Ideal,
    i: &Ideal,
    ambient_sing: &Ideal,
) -> Result<Ideal> {
    // V(sing) united with V(ambient_sing) meet V(i); the union of loci is
    // cut out by the ideal product
    let ambient_part = ambient_sing.sum(i)?;
    sing.product(&ambient_part)
}

/// Generic reducedness: the non-smooth locus (together with the ambient
/// singular contribution) has strictly smaller dimension than the variety,
/// so every generic point is a smooth point. For complete intersections in
/// a Cohen-Macaulay ambient this certifies reducedness.
pub fn is_generically_reduced(
    i: &Ideal,
    ambient_sing: &Ideal,
) -> Result<PredicateVerdict> {
    let sing = singular_locus_ideal(i)?;
    let bad = union_with_ambient_sing(&sing, i, ambient_sing)?;
    let locus_dimension = bad.affine_dimension()?;
    let variety_dimension = i.affine_dimension()?;
    let pass = locus_dimension < variety_dimension;
    Ok(PredicateVerdict::new(
        "generically_reduced",
        "smooth-generic-points",
        pass,
        Evidence::DimensionCompare {
            locus: canonical_strings(&bad)?,
            locus_dimension,
            variety_dimension,
        },
    ))
}

/// Normality for complete intersections: the non-smooth locus must have
/// codimension at least two inside the variety. The depth half of the
/// criterion rides on the declared Cohen-Macaulay hypothesis and is
/// recorded, not computed.
pub fn is_normal_ci(i: &Ideal, ambient_sing: &Ideal) -> Result<PredicateVerdict> {
    let sing = singular_locus_ideal(i)?;
    let bad = union_with_ambient_sing(&sing, i, ambient_sing)?;
    let locus_dimension = bad.affine_dimension()?;
    let variety_dimension = i.affine_dimension()?;
    let pass = variety_dimension - locus_dimension >= 2;
    Ok(PredicateVerdict::new(
        "normal_complete_intersection",
        "singular-locus-codimension-two",
        pass,
        Evidence::CodimensionCompare {
            locus: canonical_strings(&bad)?,
            locus_dimension,
            variety_dimension,
            required_codimension: 2,
        },
    ))
}

/// Containment of vanishing loci: `V(a)` lies inside `V(b)` exactly when
/// every generator of `b` is in the radical of `a`.
pub fn variety_containment(a: &Ideal, b: &Ideal) -> Result<PredicateVerdict> {
    let mut memberships = Vec::new();
    let mut pass = true;
    for g in b.gens() {
        let m = a.radical_contains(g)?;
        pass &= m;
        memberships.push((g.to_string(), m));
    }
    Ok(PredicateVerdict::new(
        "variety_containment",
        "radical-membership",
        pass,
        Evidence::RadicalMemberships { memberships },
    ))
}

/// Componenthood of `V(z)` inside `V(j)` for a declared-prime `z` and an
/// unmixed complete intersection `j`: generator containment plus equality
/// of projective dimensions.
pub fn is_component(z: &Ideal, j: &Ideal) -> Result<PredicateVerdict> {
    let mut contained = true;
    for g in j.gens() {
        contained &= z.contains(g)?;
    }
    let dz = z.projective_dimension()?;
    let dj = j.projective_dimension()?;
    let pass = contained && dz == dj;
    Ok(PredicateVerdict::new(
        "componenthood",
        "containment-and-dimension-match",
        pass,
        Evidence::Componenthood {
            generators_contained: contained,
            center_dimension: dz,
            intersection_dimension: dj,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_polynomial;
    use crate::field::FieldSpec;
    use crate::poly::{Ring, RingContext};

    fn ring(names: &[&str]) -> Ring {
        RingContext::new(
            names.iter().map(|s| s.to_string()).collect(),
            FieldSpec::Rational,
        )
        .unwrap()
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(
            r,
            gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn non_zerodivisor_cases() {
        let r = ring(&["x", "y"]);
        // y is a non-zerodivisor mod (x)
        let v = is_non_zerodivisor(
            &parse_polynomial(&r, "y").unwrap(),
            &ideal(&r, &["x"]),
        )
        .unwrap();
        assert!(v.pass);
        // x is a zerodivisor mod (xy): witness y in the colon ideal
        let v2 = is_non_zerodivisor(
            &parse_polynomial(&r, "x").unwrap(),
            &ideal(&r, &["x*y"]),
        )
        .unwrap();
        assert!(!v2.pass);
        match &v2.evidence {
            Evidence::QuotientComparison { quotient, .. } => {
                assert_eq!(quotient, &vec!["y".to_string()]);
            }
            other => panic!("unexpected evidence {other:?}"),
        }
        // units are non-zerodivisors
        let v3 = is_non_zerodivisor(
            &parse_polynomial(&r, "1").unwrap(),
            &ideal(&r, &["x"]),
        )
        .unwrap();
        assert!(v3.pass);
        // zero is rejected
        assert!(is_non_zerodivisor(
            &crate::poly::Polynomial::zero(&r),
            &ideal(&r, &["x"])
        )
        .is_err());
    }

    #[test]
    fn element_of_ideal_is_zerodivisor() {
        let r = ring(&["x", "y"]);
        let v = is_non_zerodivisor(
            &parse_polynomial(&r, "x").unwrap(),
            &ideal(&r, &["x"]),
        )
        .unwrap();
        assert!(!v.pass);
    }

    #[test]
    fn regular_sequence_chain() {
        let r = ring(&["x", "y", "z"]);
        let ambient = Ideal::zero(&r);
        let v = is_regular_sequence(
            &[
                parse_polynomial(&r, "x").unwrap(),
                parse_polynomial(&r, "y").unwrap(),
            ],
            &ambient,
        )
        .unwrap();
        assert!(v.pass);
        assert_eq!(
            v.evidence,
            Evidence::DimensionChain { start: 3, chain: vec![2, 1] }
        );
        // (x, xy) stalls at dimension 2
        let v2 = is_regular_sequence(
            &[
                parse_polynomial(&r, "x").unwrap(),
                parse_polynomial(&r, "x*y").unwrap(),
            ],
            &ambient,
        )
        .unwrap();
        assert!(!v2.pass);
        assert_eq!(
            v2.evidence,
            Evidence::DimensionChain { start: 3, chain: vec![2, 2] }
        );
        // the empty sequence passes vacuously
        let v3 = is_regular_sequence(&[], &ambient).unwrap();
        assert!(v3.pass);
        // unit ambient is rejected
        assert!(is_regular_sequence(&[], &Ideal::unit(&r)).is_err());
    }

    #[test]
    fn regular_sequence_permutation_invariance() {
        let r = ring(&["x", "y", "z", "w"]);
        let ambient = Ideal::zero(&r);
        let seqs = [
            vec!["x", "y", "z"],
            vec!["x*z - y^2", "y*w - z^2"],
        ];
        for gens in seqs {
            let polys: Vec<_> = gens
                .iter()
                .map(|s| parse_polynomial(&r, s).unwrap())
                .collect();
            assert!(is_regular_sequence(&polys, &ambient).unwrap().pass);
            // every permutation of a passing homogeneous sequence passes
            let perms: Vec<Vec<usize>> = match polys.len() {
                2 => vec![vec![0, 1], vec![1, 0]],
                3 => vec![
                    vec![0, 1, 2],
                    vec![0, 2, 1],
                    vec![1, 0, 2],
                    vec![1, 2, 0],
                    vec![2, 0, 1],
                    vec![2, 1, 0],
                ],
                _ => unreachable!(),
            };
            for perm in perms {
                let permuted: Vec<_> = perm.iter().map(|&i| polys[i].clone()).collect();
                assert!(
                    is_regular_sequence(&permuted, &ambient).unwrap().pass,
                    "permutation {perm:?} of {gens:?} failed"
                );
            }
        }
    }

    #[test]
    fn singular_locus_examples() {
        // double line: the whole component is singular
        let r2 = ring(&["x", "y"]);
        let s = singular_locus_ideal(&ideal(&r2, &["x^2"])).unwrap();
        assert!(s.canonical_eq(&ideal(&r2, &["x"])).unwrap());
        // node of two crossing lines
        let s2 = singular_locus_ideal(&ideal(&r2, &["x*y"])).unwrap();
        assert!(s2.canonical_eq(&ideal(&r2, &["x", "y"])).unwrap());
        // cone vertex
        let r4 = ring(&["x", "y", "z", "w"]);
        let s3 = singular_locus_ideal(&ideal(&r4, &["x^2 + y^2 + z^2"])).unwrap();
        assert!(s3.canonical_eq(&ideal(&r4, &["x", "y", "z"])).unwrap());
        // projective space is smooth
        let s4 = singular_locus_ideal(&Ideal::zero(&r4)).unwrap();
        assert!(s4.is_unit().unwrap());
        // the unit ideal is rejected
        assert!(singular_locus_ideal(&Ideal::unit(&r4)).is_err());
    }

    #[test]
    fn generic_reducedness() {
        let r2 = ring(&["x", "y"]);
        let smooth_ambient = Ideal::unit(&r2);
        // x^2 fails: singular along the whole component
        let v = is_generically_reduced(&ideal(&r2, &["x^2"]), &smooth_ambient).unwrap();
        assert!(!v.pass);
        // xy passes: the node is a point inside a curve
        let v2 = is_generically_reduced(&ideal(&r2, &["x*y"]), &smooth_ambient).unwrap();
        assert!(v2.pass);
        match v2.evidence {
            Evidence::DimensionCompare { locus_dimension, variety_dimension, .. } => {
                assert_eq!((locus_dimension, variety_dimension), (0, 1));
            }
            ref other => panic!("unexpected evidence {other:?}"),
        }
        // quadric cone passes: vertex line inside a threefold cone
        let r4 = ring(&["x", "y", "z", "w"]);
        let v3 = is_generically_reduced(
            &ideal(&r4, &["x^2 + y^2 + z^2"]),
            &Ideal::unit(&r4),
        )
        .unwrap();
        assert!(v3.pass);
    }

    #[test]
    fn normality_cases() {
        // quadric cone in projective 3-space: an isolated vertex in a surface
        let r4 = ring(&["x", "y", "z", "w"]);
        let v = is_normal_ci(&ideal(&r4, &["x^2 + y^2 + z^2"]), &Ideal::unit(&r4)).unwrap();
        assert!(v.pass);
        // two crossing lines in the projective plane: node has codimension one
        let r3 = ring(&["x", "y", "z"]);
        let v2 = is_normal_ci(&ideal(&r3, &["x*y"]), &Ideal::unit(&r3)).unwrap();
        assert!(!v2.pass);
        // a line is smooth
        let v3 = is_normal_ci(&ideal(&r3, &["x"]), &Ideal::unit(&r3)).unwrap();
        assert!(v3.pass);
    }

    #[test]
    fn containment_cases() {
        let r = ring(&["x", "y", "z"]);
        let point = ideal(&r, &["x", "y"]);
        let line = ideal(&r, &["x"]);
        assert!(variety_containment(&point, &line).unwrap().pass);
        assert!(!variety_containment(&line, &point).unwrap().pass);
        // radical containment: V(x^2, xy) is the line V(x)
        let thick = ideal(&r, &["x^2", "x*y"]);
        assert!(variety_containment(&thick, &line).unwrap().pass);
    }

    #[test]
    fn containment_reflexive_transitive_fuzz() {
        let r = ring(&["x", "y", "z"]);
        let ideals = vec![
            ideal(&r, &["x"]),
            ideal(&r, &["x", "y"]),
            ideal(&r, &["x*y"]),
            ideal(&r, &["x^2"]),
            ideal(&r, &["x*y", "x*z"]),
            Ideal::zero(&r),
        ];
        for a in &ideals {
            assert!(variety_containment(a, a).unwrap().pass, "reflexivity");
        }
        for a in &ideals {
            for b in &ideals {
                for c in &ideals {
                    let ab = variety_containment(a, b).unwrap().pass;
                    let bc = variety_containment(b, c).unwrap().pass;
                    if ab && bc {
                        assert!(
                            variety_containment(a, c).unwrap().pass,
                            "transitivity failed"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn componenthood_twisted_cubic() {
        let r = ring(&["x", "y", "z", "w"]);
        let cubic = ideal(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let two_quadrics = ideal(&r, &["x*z - y^2", "y*w - z^2"]);
        // the curve itself is a component
        let v = is_component(&cubic, &two_quadrics).unwrap();
        assert!(v.pass);
        // the residual line of the classical decomposition is one too
        let line = ideal(&r, &["y", "z"]);
        assert!(is_component(&line, &two_quadrics).unwrap().pass);
        // a point is not: dimension mismatch
        let point = ideal(&r, &["x", "y", "z"]);
        let v3 = is_component(&point, &two_quadrics).unwrap();
        assert!(!v3.pass);
    }

    #[test]
    fn component_dimensions_agree_exactly() {
        let r = ring(&["x", "y", "z", "w"]);
        let two_quadrics = ideal(&r, &["x*z - y^2", "y*w - z^2"]);
        for z in [ideal(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]), ideal(&r, &["y", "z"])] {
            if is_component(&z, &two_quadrics).unwrap().pass {
                assert_eq!(
                    z.affine_dimension().unwrap(),
                    two_quadrics.affine_dimension().unwrap()
                );
            }
        }
    }
}
