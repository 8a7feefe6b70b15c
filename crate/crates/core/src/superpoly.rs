//! Elements of the polynomial superalgebra `K[X|Y]` with Koszul-sign
//! multiplication, parity grading, and free-module coordinates over `K[X]`.

use crate::error::Error;
use crate::polyarith::{
    even_monomial_factors, join_signed_terms, EvenMonomial, FieldSpec, MonomialOrder, Polynomial,
    Scalar,
};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// Largest supported number of odd generators: the free module over `K[X]`
/// has rank `2^n`, so this is a hard desk-scale guarantee.
pub const MAX_ODD_VARS: usize = 24;

/// A square-free product of odd generators, stored as a bitmask over
/// `{0, .., n-1}`; the empty set denotes 1. Canonical factor order is
/// ascending indices.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct OddMonomial(u32);

impl OddMonomial {
    pub const EMPTY: OddMonomial = OddMonomial(0);

    pub fn from_mask(mask: u32) -> Self {
        OddMonomial(mask)
    }

    /// From zero-based generator indices.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut mask = 0u32;
        for &i in indices {
            debug_assert!(i < MAX_ODD_VARS);
            mask |= 1 << i;
        }
        OddMonomial(mask)
    }

    pub fn singleton(i: usize) -> Self {
        OddMonomial(1 << i)
    }

    pub fn mask(&self) -> u32 {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_subset(&self, other: &OddMonomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(&self, other: &OddMonomial) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(&self, other: &OddMonomial) -> Self {
        OddMonomial(self.0 | other.0)
    }

    pub fn intersection(&self, other: &OddMonomial) -> Self {
        OddMonomial(self.0 & other.0)
    }

    pub fn difference(&self, other: &OddMonomial) -> Self {
        OddMonomial(self.0 & !other.0)
    }

    pub fn complement(&self, n: usize) -> Self {
        OddMonomial(!self.0 & ((1u32 << n) - 1))
    }

    /// Zero-based indices in ascending order.
    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|&i| self.0 & (1 << i) != 0).collect()
    }

    /// One-based indices, the external display convention.
    pub fn indices_one_based(&self) -> Vec<usize> {
        self.indices().iter().map(|i| i + 1).collect()
    }

    /// Koszul sign of `y^I * y^J` for disjoint `I`, `J`: `(-1)^k` where `k`
    /// counts pairs `(i, j)` in `I x J` with `i > j`.
    pub fn koszul_sign(&self, other: &OddMonomial) -> i8 {
        debug_assert!(!self.intersects(other));
        let mut inversions = 0u32;
        for i in self.indices() {
            inversions += (other.0 & ((1u32 << i) - 1)).count_ones();
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Compare as sets by `(cardinality, lexicographic on ascending index lists)`.
    pub fn set_lex_cmp(&self, other: &OddMonomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mut a = self.0;
        let mut b = other.0;
        while a != 0 && b != 0 {
            let ia = a.trailing_zeros();
            let ib = b.trailing_zeros();
            match ia.cmp(&ib) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub fn to_factor_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for i in self.indices() {
            if !s.is_empty() {
                s.push('*');
            }
            let _ = write!(s, "y{}", i + 1);
        }
        s
    }
}

impl fmt::Display for OddMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", self.to_factor_string())
        }
    }
}

/// Parity classification of a superpolynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
    Zero,
}

/// Element of `K[X1..Xm | Y1..Yn]`: a finite sum of terms
/// `c * x^alpha * y^I` with exact coefficients and `y^I` square-free.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperPolynomial {
    m: usize,
    n: usize,
    field: FieldSpec,
    terms: BTreeMap<(OddMonomial, EvenMonomial), Scalar>,
}

impl SuperPolynomial {
    pub fn zero(field: FieldSpec, m: usize, n: usize) -> Self {
        assert!(n <= MAX_ODD_VARS, "odd variable cap exceeded");
        SuperPolynomial {
            m,
            n,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: FieldSpec, m: usize, n: usize) -> Self {
        Self::constant(Scalar::one(field), m, n)
    }

    pub fn constant(c: Scalar, m: usize, n: usize) -> Self {
        let mut p = Self::zero(c.field(), m, n);
        p.add_term(OddMonomial::EMPTY, EvenMonomial::one(m), c);
        p
    }

    /// The even variable `x_i` (zero-based).
    pub fn even_var(field: FieldSpec, m: usize, n: usize, i: usize) -> Self {
        assert!(i < m);
        let mut p = Self::zero(field, m, n);
        p.add_term(
            OddMonomial::EMPTY,
            EvenMonomial::var(m, i),
            Scalar::one(field),
        );
        p
    }

    /// The odd variable `y_j` (zero-based).
    pub fn odd_var(field: FieldSpec, m: usize, n: usize, j: usize) -> Self {
        assert!(j < n);
        let mut p = Self::zero(field, m, n);
        p.add_term(
            OddMonomial::singleton(j),
            EvenMonomial::one(m),
            Scalar::one(field),
        );
        p
    }

    /// Embed an element of `K[X]`.
    pub fn from_polynomial(p: &Polynomial, n: usize) -> Self {
        let mut out = Self::zero(p.field(), p.nvars(), n);
        for (mono, c) in p.terms() {
            out.add_term(OddMonomial::EMPTY, mono.clone(), c.clone());
        }
        out
    }

    pub fn from_terms(
        field: FieldSpec,
        m: usize,
        n: usize,
        terms: impl IntoIterator<Item = (OddMonomial, EvenMonomial, Scalar)>,
    ) -> Result<Self, Error> {
        let mut out = Self::zero(field, m, n);
        for (odd, even, c) in terms {
            if even.nvars() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    found: even.nvars(),
                });
            }
            if c.field() != field {
                return Err(Error::FieldMismatch);
            }
            if odd.mask() >> n != 0 {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: 32 - odd.mask().leading_zeros() as usize,
                });
            }
            out.add_term(odd, even, c);
        }
        Ok(out)
    }

    /// A single term `c * y^I` with trivial even part.
    pub fn odd_term(c: Scalar, m: usize, n: usize, odd: OddMonomial) -> Self {
        let mut p = Self::zero(c.field(), m, n);
        p.add_term(odd, EvenMonomial::one(m), c);
        p
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn even_vars(&self) -> usize {
        self.m
    }

    pub fn odd_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OddMonomial, &EvenMonomial, &Scalar)> {
        self.terms.iter().map(|((o, e), c)| (o, e, c))
    }

    fn add_term(&mut self, odd: OddMonomial, even: EvenMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((odd, even)) {
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
        if self.m != other.m || self.n != other.n {
            return Err(Error::ArityMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for ((o, e), c) in &other.terms {
            out.add_term(*o, e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for ((o, e), c) in &other.terms {
            out.add_term(*o, e.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Bilinear product with the super-commutative sign rule:
    /// `y^I * y^J = 0` when the supports meet, otherwise
    /// `sgn(I, J) * y^{I u J}` with the inversion-count sign.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field, self.m, self.n);
        for ((oa, ea), ca) in &self.terms {
            for ((ob, eb), cb) in &other.terms {
                if oa.intersects(ob) {
                    continue;
                }
                let sign = oa.koszul_sign(ob);
                let mut c = ca.clone() * cb.clone();
                if sign < 0 {
                    c = -c;
                }
                out.add_term(oa.union(ob), ea.mul(eb), c);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        assert_eq!(c.field(), self.field, "scalar field mismatch");
        let mut out = Self::zero(self.field, self.m, self.n);
        if c.is_zero() {
            return out;
        }
        for ((o, e), a) in &self.terms {
            out.terms.insert((*o, e.clone()), a.clone() * c.clone());
        }
        out
    }

    /// Left multiplication by `y^I`.
    pub fn mul_odd_monomial(&self, odd: &OddMonomial) -> Self {
        let mut out = Self::zero(self.field, self.m, self.n);
        for ((o, e), c) in &self.terms {
            if odd.intersects(o) {
                continue;
            }
            let sign = odd.koszul_sign(o);
            let c = if sign < 0 { -c.clone() } else { c.clone() };
            out.add_term(odd.union(o), e.clone(), c);
        }
        out
    }

    /// Parity classification: even iff all terms have even `|I|`, odd iff all
    /// odd, mixed otherwise.
    pub fn parity(&self) -> Parity {
        let mut saw_even = false;
        let mut saw_odd = false;
        for (o, _) in self.terms.keys() {
            if o.degree() % 2 == 0 {
                saw_even = true;
            } else {
                saw_odd = true;
            }
        }
        match (saw_even, saw_odd) {
            (false, false) => Parity::Zero,
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.parity(), Parity::Mixed)
    }

    /// Image under `Y -> 0`: the coefficient of the empty odd monomial.
    pub fn bar(&self) -> Polynomial {
        let terms: Vec<(EvenMonomial, Scalar)> = self
            .terms
            .iter()
            .filter(|((o, _), _)| o.is_empty())
            .map(|((_, e), c)| (e.clone(), c.clone()))
            .collect();
        Polynomial::from_terms(self.field, self.m, terms).expect("terms are compatible")
    }

    /// Coordinates in the free `K[X]`-module with basis `{y^I}`.
    pub fn to_vector(&self) -> ModuleVector {
        let mut grouped: BTreeMap<OddMonomial, Vec<(EvenMonomial, Scalar)>> = BTreeMap::new();
        for ((o, e), c) in &self.terms {
            grouped.entry(*o).or_default().push((e.clone(), c.clone()));
        }
        let coords = grouped
            .into_iter()
            .map(|(o, terms)| {
                (
                    o,
                    Polynomial::from_terms(self.field, self.m, terms)
                        .expect("terms are compatible"),
                )
            })
            .collect();
        ModuleVector {
            m: self.m,
            n: self.n,
            field: self.field,
            coords,
        }
    }

    /// Canonical string form with variables `x1..xm`, `y1..yn`.
    pub fn to_canonical_string(&self, ord: &MonomialOrder) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut sorted: Vec<(&OddMonomial, &EvenMonomial, &Scalar)> = self.terms().collect();
        sorted.sort_by(|(oa, ea, _), (ob, eb, _)| {
            ord.cmp_monomials(eb, ea).then_with(|| oa.set_lex_cmp(ob))
        });
        let parts: Vec<(Scalar, String)> = sorted
            .into_iter()
            .map(|(o, e, c)| {
                let mut factors = even_monomial_factors(e);
                let odd = o.to_factor_string();
                if !odd.is_empty() {
                    if !factors.is_empty() {
                        factors.push('*');
                    }
                    factors.push_str(&odd);
                }
                (c.clone(), factors)
            })
            .collect();
        join_signed_terms(&parts)
    }
}

impl Add for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn add(self, other: &SuperPolynomial) -> SuperPolynomial {
        self.checked_add(other).expect("incompatible superpolynomials")
    }
}

impl Sub for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn sub(self, other: &SuperPolynomial) -> SuperPolynomial {
        self.checked_sub(other).expect("incompatible superpolynomials")
    }
}

impl Mul for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn mul(self, other: &SuperPolynomial) -> SuperPolynomial {
        self.checked_mul(other).expect("incompatible superpolynomials")
    }
}

impl Neg for &SuperPolynomial {
    type Output = SuperPolynomial;
    fn neg(self) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero(self.field, self.m, self.n);
        for ((o, e), c) in &self.terms {
            out.terms.insert((*o, e.clone()), -c.clone());
        }
        out
    }
}

impl fmt::Display for SuperPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string(&MonomialOrder::grevlex(self.m)))
    }
}

/// Element of the free `K[X]`-module of rank `2^n` with basis `{y^I}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleVector {
    m: usize,
    n: usize,
    field: FieldSpec,
    coords: BTreeMap<OddMonomial, Polynomial>,
}

impl ModuleVector {
    pub fn zero(field: FieldSpec, m: usize, n: usize) -> Self {
        ModuleVector {
            m,
            n,
            field,
            coords: BTreeMap::new(),
        }
    }

    /// The unit vector `e_I`.
    pub fn unit(field: FieldSpec, m: usize, n: usize, pos: OddMonomial) -> Self {
        let mut v = Self::zero(field, m, n);
        v.coords.insert(pos, Polynomial::one(field, m));
        v
    }

    pub fn from_coords(
        field: FieldSpec,
        m: usize,
        n: usize,
        coords: impl IntoIterator<Item = (OddMonomial, Polynomial)>,
    ) -> Self {
        let mut v = Self::zero(field, m, n);
        for (pos, p) in coords {
            assert_eq!(p.field(), field);
            assert_eq!(p.nvars(), m);
            v.add_coord(pos, p);
        }
        v
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn even_vars(&self) -> usize {
        self.m
    }

    pub fn odd_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> impl Iterator<Item = (&OddMonomial, &Polynomial)> {
        self.coords.iter()
    }

    pub fn coord(&self, pos: &OddMonomial) -> Polynomial {
        self.coords
            .get(pos)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.field, self.m))
    }

    pub fn support(&self) -> impl Iterator<Item = &OddMonomial> {
        self.coords.keys()
    }

    fn add_coord(&mut self, pos: OddMonomial, p: Polynomial) {
        if p.is_zero() {
            return;
        }
        match self.coords.entry(pos) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().checked_add(&p).expect("same ring");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, Error> {
        if self.field != other.field || self.m != other.m || self.n != other.n {
            return Err(Error::FieldMismatch);
        }
        let mut out = self.clone();
        for (pos, p) in &other.coords {
            out.add_coord(*pos, p.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, Error> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let coords = self.coords.iter().map(|(pos, p)| (*pos, -p)).collect();
        ModuleVector {
            m: self.m,
            n: self.n,
            field: self.field,
            coords,
        }
    }

    /// `K[X]`-action.
    pub fn scale_poly(&self, p: &Polynomial) -> Self {
        let mut out = Self::zero(self.field, self.m, self.n);
        for (pos, q) in &self.coords {
            out.add_coord(*pos, q.checked_mul(p).expect("same ring"));
        }
        out
    }

    pub fn mul_term(&self, mono: &EvenMonomial, c: &Scalar) -> Self {
        let mut out = Self::zero(self.field, self.m, self.n);
        for (pos, q) in &self.coords {
            out.add_coord(*pos, q.mul_monomial(mono, c));
        }
        out
    }

    /// Inverse of [`SuperPolynomial::to_vector`].
    pub fn assemble(&self) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero(self.field, self.m, self.n);
        for (pos, p) in &self.coords {
            for (mono, c) in p.terms() {
                out.add_term(*pos, mono.clone(), c.clone());
            }
        }
        out
    }

    pub fn to_canonical_string(&self, ord: &MonomialOrder) -> String {
        self.assemble().to_canonical_string(ord)
    }
}

/// The `K[X]`-module generators `{y^L * g_k}` of the super-ideal spanned by
/// homogeneous `gens`, zero products removed.
///
/// A super-ideal is closed under multiplication by each `y_j`, so the
/// `K[X]`-span of this finite set equals the super-ideal as a submodule of
/// the free module with basis `{y^I}`.
pub fn superideal_module_generators(
    gens: &[SuperPolynomial],
) -> Result<Vec<ModuleVector>, Error> {
    let mut out = Vec::new();
    for g in gens {
        if !g.is_homogeneous() {
            return Err(Error::Inhomogeneous(g.to_canonical_string(
                &MonomialOrder::grevlex(g.even_vars()),
            )));
        }
        let n = g.odd_vars();
        for mask in 0..(1u32 << n) {
            let prod = g.mul_odd_monomial(&OddMonomial::from_mask(mask));
            if !prod.is_zero() {
                out.push(prod.to_vector());
            }
        }
    }
    Ok(out)
}

/// Inverse of a unit whose image under `Y -> 0` is a nonzero scalar `c`:
/// the finite geometric series `c^-1 * sum_k (-(u - c)/c)^k`, which
/// terminates because `u - c` is nilpotent.
pub fn unit_inverse(u: &SuperPolynomial) -> Result<SuperPolynomial, Error> {
    let barred = u.bar();
    if !barred.is_constant() || barred.is_zero() {
        return Err(Error::NotInvertible(u.to_canonical_string(
            &MonomialOrder::grevlex(u.even_vars()),
        )));
    }
    let c = barred.constant_coefficient();
    let c_inv = c.inv().expect("nonzero constant");
    let m = u.even_vars();
    let n = u.odd_vars();
    // w = -(u - c)/c, nilpotent.
    let w = (-&(u - &SuperPolynomial::constant(c, m, n))).scale(&c_inv);
    let mut acc = SuperPolynomial::one(u.field(), m, n);
    let mut pow = w.clone();
    while !pow.is_zero() {
        acc = &acc + &pow;
        pow = &pow * &w;
    }
    Ok(acc.scale(&c_inv))
}
