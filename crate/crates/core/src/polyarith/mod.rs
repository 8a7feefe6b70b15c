//! Exact scalar and commutative multivariate polynomial arithmetic over the
//! rationals and prime fields, with graded-reverse-lex and lex monomial orders.

mod scalar;

pub use scalar::{FieldSpec, Scalar};

use crate::error::Error;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// Exponent vector of a commutative monomial in the even variables.
///
/// The derived `Ord` is a structural order used only for canonical map keys;
/// ranking under a monomial order goes through [`MonomialOrder::cmp_monomials`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EvenMonomial(Vec<u32>);

impl EvenMonomial {
    pub fn one(nvars: usize) -> Self {
        EvenMonomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        EvenMonomial(exps)
    }

    /// The single variable `x_i` (zero-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        EvenMonomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        EvenMonomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Quotient `other / self`; caller guarantees divisibility.
    pub fn div_into(&self, other: &Self) -> Self {
        debug_assert!(self.divides(other));
        EvenMonomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Self) -> Self {
        EvenMonomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// True iff every variable in the support lies in `vars` (given as a bitmask).
    pub fn supported_on(&self, vars: u64) -> bool {
        self.support().all(|i| vars & (1 << i) != 0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum OrderKind {
    GradedRevLex,
    Lex,
}

/// A monomial order: total, multiplicative and a well-order (1 is minimal).
///
/// `priority` is a permutation of the variables; `priority[0]` is the most
/// significant variable. The default is the identity permutation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GradedRevLex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..nvars).collect(),
        }
    }

    pub fn with_priority(kind: OrderKind, priority: Vec<usize>) -> Self {
        let mut seen = vec![false; priority.len()];
        for &v in &priority {
            assert!(v < priority.len() && !seen[v], "priority must be a permutation");
            seen[v] = true;
        }
        MonomialOrder { kind, priority }
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn cmp_monomials(&self, a: &EvenMonomial, b: &EvenMonomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.priority.len());
        debug_assert_eq!(b.nvars(), self.priority.len());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.priority {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GradedRevLex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // Equal degree: the last position (least significant variable)
                // where exponents differ decides, smaller exponent wins.
                for &v in self.priority.iter().rev() {
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are keyed by exponent vector; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    field: FieldSpec,
    terms: BTreeMap<EvenMonomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, nvars: usize) -> Self {
        Polynomial {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec, nvars: usize) -> Self {
        Polynomial::constant(Scalar::one(field), nvars)
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(EvenMonomial::one(nvars), c);
        }
        Polynomial { nvars, field, terms }
    }

    /// The variable `x_i` (zero-based).
    pub fn var(field: FieldSpec, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut terms = BTreeMap::new();
        terms.insert(EvenMonomial::var(nvars, i), Scalar::one(field));
        Polynomial { nvars, field, terms }
    }

    pub fn from_terms(
        field: FieldSpec,
        nvars: usize,
        terms: impl IntoIterator<Item = (EvenMonomial, Scalar)>,
    ) -> Result<Self, Error> {
        let mut poly = Polynomial::zero(field, nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            poly.add_term(m, c);
        }
        Ok(poly)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    /// True iff the polynomial is a (possibly zero) constant.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_coefficient(&self) -> Scalar {
        self.terms
            .get(&EvenMonomial::one(self.nvars))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EvenMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &EvenMonomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.field))
    }

    fn add_term(&mut self, m: EvenMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), Error> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        assert_eq!(c.field(), self.field, "scalar field mismatch");
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms,
        }
    }

    pub fn mul_monomial(&self, m: &EvenMonomial, c: &Scalar) -> Self {
        assert_eq!(c.field(), self.field, "scalar field mismatch");
        if c.is_zero() {
            return Polynomial::zero(self.field, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(mm, a)| (mm.mul(m), a.clone() * c.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms,
        }
    }

    /// Exact evaluation at a point with one coordinate per variable.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        assert_eq!(point.len(), self.nvars, "point arity mismatch");
        let mut acc = Scalar::zero(self.field);
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term * point[i].pow(e);
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Maximal term under `ord`. Errors on the zero polynomial.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Result<(&EvenMonomial, &Scalar), Error> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp_monomials(a, b))
            .ok_or(Error::ZeroInput("polynomial"))
    }

    /// Terms sorted descending under `ord`.
    pub fn terms_sorted(&self, ord: &MonomialOrder) -> Vec<(&EvenMonomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| ord.cmp_monomials(b, a));
        v
    }

    /// Divide by the leading coefficient under `ord`; zero stays zero.
    pub fn make_monic(&self, ord: &MonomialOrder) -> Self {
        match self.leading_term(ord) {
            Ok((_, c)) => {
                let inv = c.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            Err(_) => self.clone(),
        }
    }

    /// Canonical string form, terms descending under `ord`, variables `x1..xm`.
    pub fn to_canonical_string(&self, ord: &MonomialOrder) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let parts: Vec<(Scalar, String)> = self
            .terms_sorted(ord)
            .into_iter()
            .map(|(m, c)| (c.clone(), even_monomial_factors(m)))
            .collect();
        join_signed_terms(&parts)
    }
}

pub(crate) fn even_monomial_factors(m: &EvenMonomial) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        if e == 1 {
            let _ = write!(s, "x{}", i + 1);
        } else {
            let _ = write!(s, "x{}^{}", i + 1, e);
        }
    }
    s
}

/// Render `coeff * factors` terms joined by ` + ` / ` - `, eliding unit
/// coefficients next to nontrivial monomial factors.
pub(crate) fn join_signed_terms(parts: &[(Scalar, String)]) -> String {
    let mut out = String::new();
    for (i, (c, factors)) in parts.iter().enumerate() {
        let (neg, abs) = c.sign_split();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_str = abs.to_display_string();
        if factors.is_empty() {
            out.push_str(&coeff_str);
        } else if coeff_str == "1" {
            out.push_str(factors);
        } else {
            out.push_str(&coeff_str);
            out.push('*');
            out.push_str(factors);
        }
    }
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, other: &Polynomial) -> Polynomial {
        self.checked_add(other).expect("incompatible polynomials")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, other: &Polynomial) -> Polynomial {
        self.checked_sub(other).expect("incompatible polynomials")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, other: &Polynomial) -> Polynomial {
        self.checked_mul(other).expect("incompatible polynomials")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms,
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string(&MonomialOrder::grevlex(self.nvars)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn sc(n: i64) -> Scalar {
        Scalar::from_i64(q(), n)
    }

    #[test]
    fn add_cancels() {
        // (x+1) + (-x) = 1
        let x = Polynomial::var(q(), 2, 0);
        let f = &x + &Polynomial::one(q(), 2);
        let g = -&x;
        assert_eq!(&f + &g, Polynomial::one(q(), 2));
    }

    #[test]
    fn add_identity() {
        let x = Polynomial::var(q(), 2, 0);
        let f = &x + &Polynomial::constant(sc(7), 2);
        assert_eq!(&f + &Polynomial::zero(q(), 2), f);
    }

    #[test]
    fn add_characteristic_three() {
        let gf3 = FieldSpec::prime_field(3).unwrap();
        let x = Polynomial::var(gf3, 1, 0);
        let two_x = x.scale(&Scalar::from_i64(gf3, 2));
        assert!((&two_x + &x).is_zero());
    }

    #[test]
    fn mul_difference_of_squares() {
        let x = Polynomial::var(q(), 2, 0);
        let y = Polynomial::var(q(), 2, 1);
        let lhs = &(&x + &y) * &(&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mul_identity() {
        let x = Polynomial::var(q(), 2, 0);
        let f = &(&x * &x) + &Polynomial::constant(sc(-3), 2);
        assert_eq!(&f * &Polynomial::one(q(), 2), f);
    }

    #[test]
    fn frobenius_gf2() {
        let gf2 = FieldSpec::prime_field(2).unwrap();
        let x = Polynomial::var(gf2, 1, 0);
        let f = &x + &Polynomial::one(gf2, 1);
        let sq = &f * &f;
        let expected = &(&x * &x) + &Polynomial::one(gf2, 1);
        assert_eq!(sq, expected);
    }

    #[test]
    fn leading_term_grevlex_tie() {
        // x^2 y + x y^2 under grevlex(x > y): leading term x^2 y.
        let ord = MonomialOrder::grevlex(2);
        let x = Polynomial::var(q(), 2, 0);
        let y = Polynomial::var(q(), 2, 1);
        let f = &(&(&x * &x) * &y) + &(&x * &(&y * &y));
        let (m, c) = f.leading_term(&ord).unwrap();
        assert_eq!(m.exponents(), &[2, 1]);
        assert!(c.is_one());
    }

    #[test]
    fn leading_term_constant_and_zero() {
        let ord = MonomialOrder::grevlex(2);
        let f = Polynomial::constant(sc(5), 2);
        let (m, c) = f.leading_term(&ord).unwrap();
        assert!(m.is_one());
        assert_eq!(c.clone(), sc(5));
        assert!(Polynomial::zero(q(), 2).leading_term(&ord).is_err());
    }

    #[test]
    fn leading_term_lex() {
        let ord = MonomialOrder::lex(2);
        let x = Polynomial::var(q(), 2, 0);
        let y = Polynomial::var(q(), 2, 1);
        let f = &x + &y;
        let (m, _) = f.leading_term(&ord).unwrap();
        assert_eq!(m.exponents(), &[1, 0]);
    }

    #[test]
    fn field_mismatch_rejected() {
        let gf5 = FieldSpec::prime_field(5).unwrap();
        let f = Polynomial::one(q(), 1);
        let g = Polynomial::one(gf5, 1);
        assert_eq!(f.checked_add(&g), Err(Error::FieldMismatch));
        let h = Polynomial::one(q(), 2);
        assert!(matches!(
            f.checked_mul(&h),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn canonical_string() {
        let x1 = Polynomial::var(q(), 2, 0);
        let x2 = Polynomial::var(q(), 2, 1);
        let half = Scalar::parse(q(), "1/2").unwrap();
        // 3*x1^2*x2 - 1/2
        let f = &(&(&x1 * &x1) * &x2).scale(&sc(3)) - &Polynomial::constant(half, 2);
        assert_eq!(
            f.to_canonical_string(&MonomialOrder::grevlex(2)),
            "3*x1^2*x2 - 1/2"
        );
    }

    #[test]
    fn grevlex_is_well_order_on_samples() {
        let ord = MonomialOrder::grevlex(3);
        let one = EvenMonomial::one(3);
        for exps in [[1, 0, 0], [0, 2, 1], [5, 5, 5]] {
            let m = EvenMonomial::from_exponents(exps.to_vec());
            assert_eq!(ord.cmp_monomials(&one, &m), Ordering::Less);
        }
    }
}
