//! Sparse multivariate polynomials over an exact field, in a shared ring
//! context, plus the formal Jacobian/minor calculus built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial ring: ordered variable names over a fixed field, standard
/// grading (every variable has weight one).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    vars: Vec<String>,
    field: FieldSpec,
}

pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new(vars: Vec<String>, field: FieldSpec) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable required".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(RingContext { vars, field }))
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// The same variables plus `extra` fresh auxiliary variables at the tail.
    /// Auxiliary names are chosen to avoid collisions.
    pub fn extended(&self, extra: usize) -> Ring {
        let mut vars = self.vars.clone();
        for k in 0..extra {
            let mut name = format!("t#{k}");
            while vars.contains(&name) {
                name.push('#');
            }
            vars.push(name);
        }
        Arc::new(RingContext { vars, field: self.field })
    }

    /// Ring on a subset of the variables (indices into this ring, in order).
    pub fn restricted(&self, keep: &[usize]) -> Result<Ring> {
        let vars: Vec<String> = keep.iter().map(|&i| self.vars[i].clone()).collect();
        RingContext::new(vars, self.field)
    }
}

pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn require_same_ring(a: &Ring, b: &Ring) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch(format!(
            "[{}] over {} vs [{}] over {}",
            a.vars().join(","),
            a.field(),
            b.vars().join(","),
            b.field()
        )))
    }
}

/// Homogeneity report: the zero polynomial is homogeneous of undefined degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

impl Homogeneity {
    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::Inhomogeneous)
    }

    pub fn degree(&self) -> Option<u32> {
        match self {
            Homogeneity::Homogeneous(d) => Some(*d),
            _ => None,
        }
    }
}

/// Sparse term map keyed by monomial in grevlex position order; zero
/// coefficients are never stored.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.nvars()), c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(ring.nvars(), i), ring.field().one());
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_terms<I>(ring: &Ring, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, FieldElement)>,
    {
        let mut p = Polynomial::zero(ring);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        require_same_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        require_same_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.neg());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        require_same_ring(&self.ring, &other.ring)?;
        let mut out = Polynomial::zero(&self.ring);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ring);
        for _ in 0..n {
            out = out.checked_mul(self).expect("same ring");
        }
        out
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => Homogeneity::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Homogeneity::Homogeneous(d)
                } else {
                    Homogeneity::Inhomogeneous
                }
            }
        }
    }

    /// Leading term for the given order.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp_monomials(a, b))
    }

    pub fn leading_monomial(&self, ord: &MonomialOrder) -> Option<&Monomial> {
        self.leading_term(ord).map(|(m, _)| m)
    }

    /// Scales so the leading coefficient for `ord` becomes one.
    pub fn monic(&self, ord: &MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("leading coefficient nonzero")),
        }
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in self.terms() {
            let e = m.degree_of(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] = e - 1;
            let factor = self.ring.field().from_i64(e as i64);
            out.add_term(Monomial::new(exps), c.mul(&factor));
        }
        out
    }

    /// Evaluation at a point, coordinates in the ring's field.
    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = self.ring.field().zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Reinterprets the polynomial in an extension of its ring obtained by
    /// appending auxiliary variables.
    pub fn lift(&self, target: &Ring) -> Polynomial {
        let extra = target.nvars() - self.ring.nvars();
        debug_assert!(target.vars()[..self.ring.nvars()] == *self.ring.vars());
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend(extra), c.clone()))
                .collect(),
        }
    }

    /// Projects onto a sub-ring; every term must be supported on `positions`.
    pub fn project(&self, target: &Ring, positions: &[usize]) -> Polynomial {
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.project(positions), c.clone()))
                .collect(),
        }
    }
}

/// The four exact arithmetic operations of the kernel, dispatched by tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Scale,
}

/// Front door for exact polynomial arithmetic; `Scale` takes the scalar as
/// the constant term of `g`.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: PolyOp) -> Result<Polynomial> {
    match op {
        PolyOp::Add => f.checked_add(g),
        PolyOp::Sub => f.checked_sub(g),
        PolyOp::Mul => f.checked_mul(g),
        PolyOp::Scale => {
            require_same_ring(f.ring(), g.ring())?;
            if !g.is_constant() {
                return Err(Error::RingMismatch("scale expects a constant".into()));
            }
            let c = g.coefficient(&Monomial::one(f.ring().nvars()));
            Ok(f.scale(&c))
        }
    }
}

/// Common total degree when every polynomial is homogeneous of one degree.
pub fn common_degree(polys: &[Polynomial]) -> Result<u32> {
    let mut degs = Vec::new();
    for p in polys {
        match p.homogeneity() {
            Homogeneity::Homogeneous(d) => degs.push(d),
            Homogeneity::Zero => return Err(Error::ZeroArgument("generator")),
            Homogeneity::Inhomogeneous => {
                return Err(Error::NonHomogeneous(p.to_string()));
            }
        }
    }
    if degs.is_empty() {
        return Err(Error::ZeroArgument("generator list"));
    }
    let d0 = degs[0];
    if degs.iter().any(|&d| d != d0) {
        return Err(Error::MixedDegrees(degs));
    }
    Ok(d0)
}

/// Matrix of formal partials: row `i` is the gradient of `fs[i]`.
pub fn jacobian_matrix(fs: &[Polynomial]) -> Result<Vec<Vec<Polynomial>>> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring();
    for f in fs {
        require_same_ring(ring, f.ring())?;
    }
    Ok(fs
        .iter()
        .map(|f| (0..ring.nvars()).map(|j| f.partial_derivative(j)).collect())
        .collect())
}

/// All `k`-by-`k` minors of a polynomial matrix, by Laplace expansion.
/// `k = 0` yields the single constant 1.
pub fn minors_ideal(matrix: &[Vec<Polynomial>], k: usize, ring: &Ring) -> Result<Vec<Polynomial>> {
    let rows = matrix.len();
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    if k == 0 {
        return Ok(vec![Polynomial::one(ring)]);
    }
    if k > rows || k > cols {
        return Err(Error::BoundExceeded(format!(
            "minor size {k} exceeds matrix shape {rows}x{cols}"
        )));
    }
    let mut out = Vec::new();
    for ri in combinations(rows, k) {
        for ci in combinations(cols, k) {
            let minor = determinant(matrix, &ri, &ci, ring)?;
            if !minor.is_zero() {
                out.push(minor);
            }
        }
    }
    Ok(out)
}

fn determinant(
    matrix: &[Vec<Polynomial>],
    rows: &[usize],
    cols: &[usize],
    ring: &Ring,
) -> Result<Polynomial> {
    if rows.len() == 1 {
        return Ok(matrix[rows[0]][cols[0]].clone());
    }
    let mut acc = Polynomial::zero(ring);
    let rest: Vec<usize> = rows[1..].to_vec();
    for (j, &c) in cols.iter().enumerate() {
        let entry = &matrix[rows[0]][c];
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols
            .iter()
            .enumerate()
            .filter(|(jj, _)| *jj != j)
            .map(|(_, &cc)| cc)
            .collect();
        let sub = determinant(matrix, &rest, &sub_cols, ring)?;
        let term = entry.checked_mul(&sub)?;
        acc = if j % 2 == 0 {
            acc.checked_add(&term)?
        } else {
            acc.checked_sub(&term)?
        };
    }
    Ok(acc)
}

/// Index subsets of `{0..n}` of size `k`, in ascending lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>, start: usize, n: usize, k: usize) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(out, cur, i + 1, n, k);
            cur.pop();
        }
    }
    rec(&mut out, &mut cur, 0, n, k);
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // descending grevlex
        for (m, c) in self.terms.iter().rev() {
            let (sign, mag) = match c {
                FieldElement::Rational(r) if r < &num_rational::BigRational::from_integer(0.into()) => {
                    ("-", c.neg())
                }
                _ => ("+", c.clone()),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            let coeff_is_one = mag.is_one();
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else {
                if !coeff_is_one {
                    write!(f, "{}*", mag)?;
                }
                let mut first_var = true;
                for (i, &e) in m.exponents().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    if !first_var {
                        write!(f, "*")?;
                    }
                    first_var = false;
                    if e == 1 {
                        write!(f, "{}", self.ring.var_name(i))?;
                    } else {
                        write!(f, "{}^{}", self.ring.var_name(i), e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ring_xy() -> Ring {
        RingContext::new(vec!["x".into(), "y".into()], FieldSpec::Rational).unwrap()
    }

    fn ring_xyz() -> Ring {
        RingContext::new(
            vec!["x".into(), "y".into(), "z".into()],
            FieldSpec::Rational,
        )
        .unwrap()
    }

    #[test]
    fn cancellation_and_annihilator() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // (x+y) + (x-y) = 2x
        let sum = poly_arith(
            &x.checked_add(&y).unwrap(),
            &x.checked_sub(&y).unwrap(),
            PolyOp::Add,
        )
        .unwrap();
        assert_eq!(sum, x.scale(&r.field().from_i64(2)));
        // x * 0 = 0
        let z = poly_arith(&x, &Polynomial::zero(&r), PolyOp::Mul).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn difference_of_squares() {
        // hand expansion: (x+y)(x-y) = x^2 - y^2
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let prod = poly_arith(
            &x.checked_add(&y).unwrap(),
            &x.checked_sub(&y).unwrap(),
            PolyOp::Mul,
        )
        .unwrap();
        let expected = x.pow(2).checked_sub(&y.pow(2)).unwrap();
        assert_eq!(prod, expected);
    }

    #[test]
    fn ring_mismatch_rejected() {
        let a = Polynomial::var(&ring_xy(), 0);
        let b = Polynomial::var(&ring_xyz(), 0);
        assert!(poly_arith(&a, &b, PolyOp::Add).is_err());
    }

    #[test]
    fn homogeneity_reports() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let h = x.pow(2).checked_add(&x.checked_mul(&y).unwrap()).unwrap();
        assert_eq!(h.homogeneity(), Homogeneity::Homogeneous(2));
        let nh = x.pow(2).checked_add(&y).unwrap();
        assert_eq!(nh.homogeneity(), Homogeneity::Inhomogeneous);
        assert_eq!(Polynomial::zero(&r).homogeneity(), Homogeneity::Zero);
        assert!(Polynomial::zero(&r).homogeneity().is_homogeneous());
        assert_eq!(Polynomial::zero(&r).homogeneity().degree(), None);
    }

    #[test]
    fn jacobian_single_square() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let j = jacobian_matrix(&[x.pow(2)]).unwrap();
        assert_eq!(j.len(), 1);
        assert_eq!(j[0][0], x.scale(&r.field().from_i64(2)));
        assert!(j[0][1].is_zero());
    }

    #[test]
    fn jacobian_hand_differentiation() {
        // d(xy - z^2) = (y, x, -2z)
        let r = ring_xyz();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let p = x.checked_mul(&y).unwrap().checked_sub(&z.pow(2)).unwrap();
        let j = jacobian_matrix(&[p]).unwrap();
        assert_eq!(j[0][0], y);
        assert_eq!(j[0][1], x);
        assert_eq!(j[0][2], z.scale(&r.field().from_i64(-2)));
    }

    #[test]
    fn jacobian_coordinate_block() {
        let r = ring_xyz();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let j = jacobian_matrix(&[x.clone(), y.clone()]).unwrap();
        let one = Polynomial::one(&r);
        assert_eq!(j[0][0], one);
        assert!(j[0][1].is_zero() && j[0][2].is_zero());
        assert_eq!(j[1][1], one);
        assert!(j[1][0].is_zero() && j[1][2].is_zero());
    }

    #[test]
    fn minors_identity_and_row() {
        let r = ring_xy();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        // 1x1 minors of [[y, x]]
        let m = minors_ideal(&[vec![y.clone(), x.clone()]], 1, &r).unwrap();
        assert_eq!(m, vec![y.clone(), x.clone()]);
        // 2x2 minor of the identity
        let one = Polynomial::one(&r);
        let zero = Polynomial::zero(&r);
        let id = vec![vec![one.clone(), zero.clone()], vec![zero, one.clone()]];
        assert_eq!(minors_ideal(&id, 2, &r).unwrap(), vec![one.clone()]);
        // 0x0 minor is the constant 1
        assert_eq!(minors_ideal(&id, 0, &r).unwrap(), vec![one]);
    }

    #[test]
    fn minors_hand_expansion() {
        // 2x2 minors of [[y,x,0],[0,w,z]] are {yw, yz, xz}
        let r = RingContext::new(
            vec!["x".into(), "y".into(), "z".into(), "w".into()],
            FieldSpec::Rational,
        )
        .unwrap();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let z = Polynomial::var(&r, 2);
        let w = Polynomial::var(&r, 3);
        let zero = Polynomial::zero(&r);
        let m = vec![
            vec![y.clone(), x.clone(), zero.clone()],
            vec![zero, w.clone(), z.clone()],
        ];
        let minors = minors_ideal(&m, 2, &r).unwrap();
        let yw = y.checked_mul(&w).unwrap();
        let yz = y.checked_mul(&z).unwrap();
        let xz = x.checked_mul(&z).unwrap();
        assert_eq!(minors, vec![yw, yz, xz]);
    }

    #[test]
    fn leibniz_rule_fuzzed() {
        use rand::Rng;
        use rand::SeedableRng;
        let r = ring_xyz();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(11);
        let random_poly = |rng: &mut rand_chacha::ChaCha20Rng| {
            let mut p = Polynomial::zero(&r);
            for _ in 0..4 {
                let exps: Vec<u32> = (0..3).map(|_| rng.gen_range(0..3)).collect();
                let c = r.field().from_i64(rng.gen_range(-5..=5));
                p = p
                    .checked_add(&Polynomial::from_terms(
                        &r,
                        [(Monomial::new(exps), c)],
                    ))
                    .unwrap();
            }
            p
        };
        for _ in 0..50 {
            let f = random_poly(&mut rng);
            let g = random_poly(&mut rng);
            let fg = f.checked_mul(&g).unwrap();
            for v in 0..3 {
                let lhs = fg.partial_derivative(v);
                let rhs = f
                    .checked_mul(&g.partial_derivative(v))
                    .unwrap()
                    .checked_add(&g.checked_mul(&f.partial_derivative(v)).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn display_round_shape() {
        let r = ring_xyz();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let p = x
            .pow(2)
            .checked_sub(&y.scale(&r.field().from_i64(3)))
            .unwrap();
        assert_eq!(p.to_string(), "x^2 - 3*y");
    }
}
