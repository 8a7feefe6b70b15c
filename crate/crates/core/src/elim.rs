//! Fraction-free row elimination over `K[X]`, decided in the fraction field
//! `K(X)`: rank, membership and pivot bookkeeping for sparse rows of
//! polynomial entries. Rows are combined by cross-multiplication only, with
//! integer and monomial content stripped to keep entries small; no division
//! and no multivariate gcd.

use crate::polyarith::{EvenMonomial, FieldSpec, Polynomial, Scalar};
use crate::superpoly::OddMonomial;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Column key ordering odd monomials by `(degree, lexicographic index list)`,
/// so echelon pivots group by exterior degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct DegLexPos(pub OddMonomial);

impl PartialOrd for DegLexPos {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegLexPos {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.set_lex_cmp(&other.0)
    }
}

pub(crate) type PolyRow<C> = BTreeMap<C, Polynomial>;

/// A row-echelon accumulation of sparse polynomial rows. Each stored row is
/// pivoted at its minimal column; pivots are unique per column.
#[derive(Clone, Debug)]
pub(crate) struct Echelon<C: Ord + Clone> {
    field: FieldSpec,
    pivots: BTreeMap<C, PolyRow<C>>,
}

impl<C: Ord + Clone> Echelon<C> {
    pub(crate) fn new(field: FieldSpec) -> Self {
        Echelon {
            field,
            pivots: BTreeMap::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn pivot_cols(&self) -> impl Iterator<Item = &C> {
        self.pivots.keys()
    }

    pub(crate) fn rows(&self) -> impl Iterator<Item = (&C, &PolyRow<C>)> {
        self.pivots.iter()
    }

    /// Reduce `row` against the stored pivots by cross-multiplication.
    /// The result is empty iff `row` lies in the `K(X)`-span of the rows
    /// inserted so far.
    pub(crate) fn reduce(&self, mut row: PolyRow<C>) -> PolyRow<C> {
        loop {
            row.retain(|_, p| !p.is_zero());
            let Some(col) = row.keys().next().cloned() else {
                return row;
            };
            let Some(pivot_row) = self.pivots.get(&col) else {
                return row;
            };
            let a = pivot_row.get(&col).expect("pivot entry present").clone();
            let b = row.remove(&col).expect("leading entry present");
            // row := a*row - b*pivot_row (the `col` entry cancels exactly).
            for (c, p) in row.iter_mut() {
                debug_assert!(*c != col);
                *p = p.checked_mul(&a).expect("same ring");
            }
            for (c, p) in pivot_row {
                if *c == col {
                    continue;
                }
                let delta = p.checked_mul(&b).expect("same ring");
                match row.entry(c.clone()) {
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-&delta);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        let diff = e.get().checked_sub(&delta).expect("same ring");
                        if diff.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = diff;
                        }
                    }
                }
            }
            row = strip_content(self.field, row);
        }
    }

    /// Insert a row; returns true when the rank grows.
    pub(crate) fn insert(&mut self, row: PolyRow<C>) -> bool {
        let reduced = self.reduce(row);
        if reduced.is_empty() {
            return false;
        }
        let normalized = strip_content(self.field, reduced);
        let col = normalized.keys().next().cloned().expect("nonempty row");
        self.pivots.insert(col, normalized);
        true
    }

    pub(crate) fn contains(&self, row: PolyRow<C>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Remove the common integer and monomial content of a row; over GF(p) the
/// row is scaled so that its first entry has a unit leading coefficient.
pub(crate) fn strip_content<C: Ord + Clone>(
    field: FieldSpec,
    mut row: PolyRow<C>,
) -> PolyRow<C> {
    row.retain(|_, p| !p.is_zero());
    if row.is_empty() {
        return row;
    }
    // Common monomial factor across every term of every entry.
    let mut min_exps: Option<Vec<u32>> = None;
    for p in row.values() {
        for (m, _) in p.terms() {
            match &mut min_exps {
                None => min_exps = Some(m.exponents().to_vec()),
                Some(mins) => {
                    for (lo, e) in mins.iter_mut().zip(m.exponents()) {
                        *lo = (*lo).min(*e);
                    }
                }
            }
        }
    }
    let mono_content = min_exps
        .filter(|m| m.iter().any(|&e| e > 0))
        .map(EvenMonomial::from_exponents);

    match field {
        FieldSpec::Rationals => {
            let mut den_lcm = BigInt::one();
            let mut num_gcd = BigInt::zero();
            for p in row.values() {
                for (_, c) in p.terms() {
                    let Scalar::Rat(r) = c else { unreachable!() };
                    den_lcm = den_lcm.lcm(r.denom());
                    num_gcd = num_gcd.gcd(r.numer());
                }
            }
            // Sign convention: first entry's structurally-first coefficient positive.
            let first_neg = row
                .values()
                .next()
                .and_then(|p| p.terms().next().map(|(_, c)| matches!(c, Scalar::Rat(r) if r.is_negative())))
                .unwrap_or(false);
            if first_neg {
                num_gcd = -num_gcd;
            }
            let factor = Scalar::from_rational(den_lcm, num_gcd).expect("gcd is nonzero");
            rebuild(row, mono_content.as_ref(), &factor)
        }
        FieldSpec::PrimeField(_) => {
            let lead = row
                .values()
                .next()
                .and_then(|p| p.terms().next().map(|(_, c)| c.clone()))
                .expect("nonempty row");
            let factor = lead.inv().expect("nonzero leading coefficient");
            rebuild(row, mono_content.as_ref(), &factor)
        }
    }
}

fn rebuild<C: Ord + Clone>(
    row: PolyRow<C>,
    mono: Option<&EvenMonomial>,
    factor: &Scalar,
) -> PolyRow<C> {
    row.into_iter()
        .map(|(c, p)| {
            let p = match mono {
                Some(m) => {
                    let field = p.field();
                    let nvars = p.nvars();
                    Polynomial::from_terms(
                        field,
                        nvars,
                        p.terms()
                            .map(|(mm, cc)| (m.div_into(mm), cc.clone() * factor.clone())),
                    )
                    .expect("terms compatible")
                }
                None => p.scale(factor),
            };
            (c, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn row1(entries: &[(u32, i64)]) -> PolyRow<DegLexPos> {
        entries
            .iter()
            .map(|&(mask, c)| {
                (
                    DegLexPos(OddMonomial::from_mask(mask)),
                    Polynomial::constant(Scalar::from_i64(q(), c), 0),
                )
            })
            .collect()
    }

    #[test]
    fn rank_and_membership_over_constants() {
        let mut e = Echelon::new(q());
        assert!(e.insert(row1(&[(0b01, 1), (0b10, 2)])));
        assert!(e.insert(row1(&[(0b01, 1), (0b10, 3)])));
        // Third row is the difference of the first two.
        assert!(!e.insert(row1(&[(0b10, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row1(&[(0b01, 5)])));
        assert!(!e.contains(row1(&[(0b11, 1)])));
    }

    #[test]
    fn polynomial_entries_rank_in_fraction_field() {
        let x = Polynomial::var(q(), 1, 0);
        let one = Polynomial::one(q(), 1);
        let mut e = Echelon::new(q());
        let mk = |a: &Polynomial, b: &Polynomial| -> PolyRow<DegLexPos> {
            let mut r = PolyRow::new();
            if !a.is_zero() {
                r.insert(DegLexPos(OddMonomial::from_mask(0b01)), a.clone());
            }
            if !b.is_zero() {
                r.insert(DegLexPos(OddMonomial::from_mask(0b10)), b.clone());
            }
            r
        };
        assert!(e.insert(mk(&x, &(&x + &one))));
        // (x^2, x^2 + x) = x * (x, x + 1): dependent over K(x).
        assert!(!e.insert(mk(&(&x * &x), &(&(&x * &x) + &x))));
        // (x^2, x^2 + 1) is not a K(x)-multiple of (x, x + 1).
        assert!(e.insert(mk(&(&x * &x), &(&(&x * &x) + &one))));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(mk(&(&x * &x), &(&x * &(&x + &one)))));
    }

    #[test]
    fn content_stripping_keeps_entries_reduced() {
        let half = Scalar::parse(q(), "1/2").unwrap();
        let x = Polynomial::var(q(), 1, 0);
        let mut row = PolyRow::new();
        row.insert(DegLexPos(OddMonomial::from_mask(1)), (&x * &x).scale(&half));
        row.insert(DegLexPos(OddMonomial::from_mask(2)), x.scale(&Scalar::from_i64(q(), 3)));
        let stripped = strip_content(q(), row);
        // Common monomial x and denominator 2 removed: entries x and 6.
        let a = stripped
            .get(&DegLexPos(OddMonomial::from_mask(1)))
            .unwrap();
        let b = stripped
            .get(&DegLexPos(OddMonomial::from_mask(2)))
            .unwrap();
        assert_eq!(*a, Polynomial::var(q(), 1, 0));
        assert_eq!(*b, Polynomial::constant(Scalar::from_i64(q(), 6), 1));
    }
}
