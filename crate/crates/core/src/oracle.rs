//! Brute-force verifiers over small prime fields: point enumeration on
//! projective space, zerodivisor detection by exact linear algebra on
//! truncated quotients, and point-set containment. These cross-examine the
//! basis engine in tests and in certificate tooling; enumeration bounds are
//! hard limits.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::ideal::Ideal;
use crate::linalg::{coordinates_in_degree, graded_piece_basis, Matrix};
use crate::monomial::monomials_of_degree;
use crate::poly::Polynomial;

pub const MAX_VARS: usize = 5;
pub const MAX_PRIME: u64 = 11;

/// Normalized projective points over F_p: first nonzero coordinate is 1,
/// no duplicates, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub prime: u64,
    pub points: Vec<Vec<u64>>,
}

impl PointSet {
    pub fn contains_all(&self, other: &PointSet) -> bool {
        other.points.iter().all(|p| self.points.binary_search(p).is_ok())
    }
}

fn prime_of(i: &Ideal) -> Result<u64> {
    match i.ring().field() {
        FieldSpec::Prime(p) => Ok(*p),
        FieldSpec::Rational => Err(Error::BoundExceeded(
            "point enumeration needs a prime field".into(),
        )),
    }
}

fn check_bounds(i: &Ideal) -> Result<u64> {
    let p = prime_of(i)?;
    if p > MAX_PRIME {
        return Err(Error::BoundExceeded(format!("prime {p} exceeds {MAX_PRIME}")));
    }
    if i.ring().nvars() > MAX_VARS {
        return Err(Error::BoundExceeded(format!(
            "{} variables exceed {MAX_VARS}",
            i.ring().nvars()
        )));
    }
    Ok(p)
}

/// All points of projective space over F_p where every generator vanishes.
pub fn brute_force_points(i: &Ideal) -> Result<PointSet> {
    let p = check_bounds(i)?;
    let n = i.ring().nvars();
    let mut points = Vec::new();
    let mut coords = vec![0u64; n];
    enumerate_normalized(&mut coords, 0, p, &mut |point| {
        let values: Vec<FieldElement> = point
            .iter()
            .map(|&v| FieldElement::Prime { value: v, modulus: p })
            .collect();
        if i.gens().iter().all(|g| g.evaluate(&values).is_zero()) {
            points.push(point.to_vec());
        }
    });
    points.sort();
    points.dedup();
    Ok(PointSet { prime: p, points })
}

/// Enumerates normalized representatives: leading zeros, then a 1, then
/// arbitrary residues.
fn enumerate_normalized(coords: &mut Vec<u64>, pos: usize, p: u64, f: &mut impl FnMut(&[u64])) {
    let n = coords.len();
    if pos == n {
        return;
    }
    // this position is the first nonzero coordinate
    coords[pos] = 1;
    fill_tail(coords, pos + 1, p, f);
    coords[pos] = 0;
    enumerate_normalized(coords, pos + 1, p, f);
}

fn fill_tail(coords: &mut Vec<u64>, pos: usize, p: u64, f: &mut impl FnMut(&[u64])) {
    let n = coords.len();
    if pos == n {
        f(coords);
        return;
    }
    for v in 0..p {
        coords[pos] = v;
        fill_tail(coords, pos + 1, p, f);
    }
    coords[pos] = 0;
}

/// Zerodivisor detection without the basis engine: multiplication by `g`
/// on the degree-truncated quotient ring, one graded piece at a time, has
/// a nontrivial kernel iff `g` is a zerodivisor on the truncation.
///
/// Every graded piece is handled with row reduction only: the degree-e
/// piece of the ideal comes from multiplying generators by complementary
/// monomials, and the induced multiplication map is checked for kernel
/// vectors outside the ideal.
pub fn brute_force_zerodivisor(g: &Polynomial, i: &Ideal, deg_bound: u32) -> Result<bool> {
    check_bounds(i)?;
    if g.is_zero() {
        return Ok(true);
    }
    let ring = i.ring().clone();
    let field = *ring.field();
    let d = match g.homogeneity() {
        crate::poly::Homogeneity::Homogeneous(d) => d,
        _ => return Err(Error::NonHomogeneous(g.to_string())),
    };
    if d > deg_bound {
        return Ok(false);
    }
    for e in 0..=deg_bound - d {
        let source_cols = monomials_of_degree(ring.nvars(), e);
        let target_cols = monomials_of_degree(ring.nvars(), e + d);
        // rows spanning the degree (e+d) piece of the ideal
        let ideal_rows: Vec<Vec<FieldElement>> = graded_piece_basis(i.gens(), e + d)?
            .iter()
            .map(|p| coordinates_in_degree(p, e + d, &target_cols))
            .collect();
        let ideal_rank = if ideal_rows.is_empty() {
            0
        } else {
            Matrix::from_rows(&field, ideal_rows.clone()).rank()
        };
        // likewise in the source degree, to quotient the domain
        let source_ideal_rows: Vec<Vec<FieldElement>> = graded_piece_basis(i.gens(), e)?
            .iter()
            .map(|p| coordinates_in_degree(p, e, &source_cols))
            .collect();
        let source_ideal_rank = if source_ideal_rows.is_empty() {
            0
        } else {
            Matrix::from_rows(&field, source_ideal_rows.clone()).rank()
        };

        // kernel of (quotient source) -> (quotient target): a monomial basis
        // vector v maps to g*v; v is in the kernel iff g*v falls in the
        // ideal piece. Stack [ideal rows | g*source columns] and compare
        // ranks: rank increase below source quotient dimension means kernel.
        let mut stacked = ideal_rows.clone();
        for m in &source_cols {
            let image = g.mul_term(m, &field.one());
            stacked.push(coordinates_in_degree(&image, e + d, &target_cols));
        }
        let image_rank = Matrix::from_rows(&field, stacked).rank() - ideal_rank;
        let source_quotient_dim = source_cols.len() - source_ideal_rank;
        // rank-nullity on the quotient map
        if image_rank < source_quotient_dim {
            return Ok(true);
        }
    }
    Ok(false)
}

/// One-directional containment oracle: point-set inclusion
/// `V(a) subset of V(b)` over F_p. Agreement with radical-based
/// containment is only guaranteed when the rational points witness every
/// component.
pub fn containment_oracle(a: &Ideal, b: &Ideal) -> Result<bool> {
    let pa = brute_force_points(a)?;
    let pb = brute_force_points(b)?;
    Ok(pb.contains_all(&pa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_polynomial;
    use crate::poly::{Ring, RingContext};

    fn ring_f(names: &[&str], p: u64) -> Ring {
        RingContext::new(
            names.iter().map(|s| s.to_string()).collect(),
            FieldSpec::prime(p).unwrap(),
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
    fn point_counts() {
        let r = ring_f(&["x", "y", "z"], 3);
        // a single point of the projective plane
        let i = ideal(&r, &["x", "y"]);
        let pts = brute_force_points(&i).unwrap();
        assert_eq!(pts.points, vec![vec![0, 0, 1]]);
        // the unit ideal has no points
        let u = Ideal::unit(&r);
        assert!(brute_force_points(&u).unwrap().points.is_empty());
        // the projective plane over F_3 has 13 points
        let all = brute_force_points(&Ideal::zero(&r)).unwrap();
        assert_eq!(all.points.len(), 13);
    }

    #[test]
    fn twisted_cubic_over_f2() {
        // enumerate the 15 points of projective 3-space over F_2 by hand:
        // the curve is the image of (s:t) -> (s^3 : s^2 t : s t^2 : t^3),
        // so it has exactly |P^1(F_2)| = 3 points
        let r = ring_f(&["x", "y", "z", "w"], 2);
        let i = ideal(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]);
        let pts = brute_force_points(&i).unwrap();
        assert_eq!(pts.points.len(), 3);
        assert!(pts.points.contains(&vec![1, 0, 0, 0]));
        assert!(pts.points.contains(&vec![0, 0, 0, 1]));
        assert!(pts.points.contains(&vec![1, 1, 1, 1]));
    }

    #[test]
    fn bounds_are_hard() {
        let r = ring_f(&["a", "b", "c", "d", "e", "f"], 3);
        assert!(brute_force_points(&Ideal::zero(&r)).is_err());
        let r13 = RingContext::new(vec!["x".into()], FieldSpec::prime(13).unwrap()).unwrap();
        assert!(brute_force_points(&Ideal::zero(&r13)).is_err());
    }

    #[test]
    fn zerodivisor_linear_algebra() {
        let r = ring_f(&["x", "y"], 7);
        // x kills y modulo (xy)
        let i = ideal(&r, &["x*y"]);
        assert!(brute_force_zerodivisor(
            &parse_polynomial(&r, "x").unwrap(),
            &i,
            3
        )
        .unwrap());
        // y is regular modulo (x)
        let j = ideal(&r, &["x"]);
        assert!(!brute_force_zerodivisor(
            &parse_polynomial(&r, "y").unwrap(),
            &j,
            3
        )
        .unwrap());
        // constants are never zerodivisors
        assert!(!brute_force_zerodivisor(
            &parse_polynomial(&r, "1").unwrap(),
            &j,
            3
        )
        .unwrap());
    }

    #[test]
    fn containment_points() {
        let r = ring_f(&["x", "y", "z"], 3);
        let a = ideal(&r, &["x", "y"]);
        let b = ideal(&r, &["x"]);
        assert!(containment_oracle(&a, &b).unwrap());
        // the line has points like (0:1:c) outside the point
        assert!(!containment_oracle(&b, &a).unwrap());
        assert!(containment_oracle(&a, &a).unwrap());
    }
}
