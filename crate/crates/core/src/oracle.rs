//! Independent brute-force verifier: exact linear algebra on the
//! `2^n`-dimensional exterior module over `K(X)` (or `K` when `m = 0`),
//! providing ground truth for odd dimensions, memberships and annihilators.
//!
//! This path shares no reduction code with the Gröbner engine; it reduces
//! everything to fraction-free row elimination.

use crate::elim::{DegLexPos, Echelon, PolyRow};
use crate::error::Error;
use crate::ksdim::{combinations, SuperPresentation};
use crate::polyarith::FieldSpec;
use crate::superpoly::{ModuleVector, OddMonomial, SuperPolynomial};
use alloc::vec::Vec;

/// Row-reduced `K(X)`-span of the localized super-ideal `J'` inside the
/// exterior algebra on `y_1..y_n`, closed under multiplication by each `y_j`.
#[derive(Clone, Debug)]
pub struct ExteriorSpan {
    n: usize,
    m: usize,
    field: FieldSpec,
    ech: Echelon<DegLexPos>,
}

impl ExteriorSpan {
    pub fn dimension(&self) -> usize {
        self.ech.rank()
    }

    pub fn odd_vars(&self) -> usize {
        self.n
    }

    /// Pivot positions of the reduced span, ascending by `(degree, lex)`.
    pub fn pivot_supports(&self) -> Vec<OddMonomial> {
        self.ech.pivot_cols().map(|c| c.0).collect()
    }
}

fn vector_row(v: &ModuleVector) -> PolyRow<DegLexPos> {
    v.coords()
        .map(|(pos, p)| (DegLexPos(*pos), p.clone()))
        .collect()
}

/// The span of `{y^L * g_k}` over `K(X)`, fraction-free reduced.
/// Requires `J-bar = 0` so that localization at `K[X] \ 0` is legitimate
/// (the nil radical is then the prime super-ideal of all odd-supported
/// elements).
pub fn exterior_span(p: &SuperPresentation) -> Result<ExteriorSpan, Error> {
    if !p.has_zero_even_ideal() {
        return Err(Error::EvenIdealNonzero);
    }
    let mut ech = Echelon::new(p.field());
    for v in p.module_generators() {
        ech.insert(vector_row(&v));
    }
    Ok(ExteriorSpan {
        n: p.odd_vars(),
        m: p.even_vars(),
        field: p.field(),
        ech,
    })
}

/// Linear-solve membership of an exterior element in the span.
pub fn oracle_membership(span: &ExteriorSpan, v: &SuperPolynomial) -> bool {
    span.ech.contains(vector_row(&v.to_vector()))
}

/// Membership of the monomial `y^I`.
pub fn oracle_monomial_membership(span: &ExteriorSpan, i: &OddMonomial) -> bool {
    let v = ModuleVector::unit(span.field, span.m, span.n, *i);
    span.ech.contains(vector_row(&v))
}

/// `max{ |I| : y^I not in J' }`, the odd Krull dimension of the localized
/// algebra; 0 when every nonempty product lies in `J'`.
pub fn oracle_odd_dim(p: &SuperPresentation) -> Result<usize, Error> {
    let span = exterior_span(p)?;
    Ok(odd_dim_of_span(&span))
}

pub fn odd_dim_of_span(span: &ExteriorSpan) -> usize {
    let n = span.n;
    let all: Vec<usize> = (0..n).collect();
    for k in (1..=n).rev() {
        for subset in combinations(&all, k) {
            let i = OddMonomial::from_indices(&subset);
            if !oracle_monomial_membership(span, &i) {
                return k;
            }
        }
    }
    0
}

/// Odd dimension together with the lexicographically smallest witness
/// monomial outside the span at the top cardinality.
pub fn oracle_odd_dim_with_witness(p: &SuperPresentation) -> Result<(usize, OddMonomial), Error> {
    let span = exterior_span(p)?;
    let n = span.n;
    let all: Vec<usize> = (0..n).collect();
    for k in (1..=n).rev() {
        for subset in combinations(&all, k) {
            let i = OddMonomial::from_indices(&subset);
            if !oracle_monomial_membership(&span, &i) {
                return Ok((k, i));
            }
        }
    }
    Ok((0, OddMonomial::EMPTY))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::Scalar;
    use alloc::vec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn y(m: usize, n: usize, j: usize) -> SuperPolynomial {
        SuperPolynomial::odd_var(q(), m, n, j)
    }

    fn present(m: usize, n: usize, rels: Vec<SuperPolynomial>) -> SuperPresentation {
        SuperPresentation::new(q(), m, n, rels).unwrap()
    }

    #[test]
    fn span_examples() {
        // J = (y1 y2), n = 2: span {y1y2}.
        let p = present(0, 2, vec![&y(0, 2, 0) * &y(0, 2, 1)]);
        let s = exterior_span(&p).unwrap();
        assert_eq!(s.dimension(), 1);
        assert_eq!(s.pivot_supports(), vec![OddMonomial::from_indices(&[0, 1])]);

        // J = (y1), n = 2: closure adds y1y2.
        let p = present(0, 2, vec![y(0, 2, 0)]);
        let s = exterior_span(&p).unwrap();
        assert_eq!(s.dimension(), 2);

        // J = (0): empty span.
        let p = present(0, 2, vec![]);
        assert_eq!(exterior_span(&p).unwrap().dimension(), 0);
    }

    #[test]
    fn span_requires_zero_even_ideal() {
        let x = SuperPolynomial::even_var(q(), 1, 1, 0);
        let p = present(1, 1, vec![x]);
        assert!(matches!(exterior_span(&p), Err(Error::EvenIdealNonzero)));
    }

    #[test]
    fn membership_examples() {
        let p = present(0, 2, vec![&y(0, 2, 0) * &y(0, 2, 1)]);
        let s = exterior_span(&p).unwrap();
        // 0 is in any span.
        assert!(oracle_membership(&s, &SuperPolynomial::zero(q(), 0, 2)));
        // y1 is not in span{y1y2}.
        assert!(!oracle_membership(&s, &y(0, 2, 0)));
        // y1y2 of course is.
        assert!(oracle_monomial_membership(&s, &OddMonomial::from_indices(&[0, 1])));

        // Closure: y1y2 = -(y2 * y1) lies in the span of J = (y1).
        let p = present(0, 2, vec![y(0, 2, 0)]);
        let s = exterior_span(&p).unwrap();
        assert!(oracle_monomial_membership(&s, &OddMonomial::from_indices(&[0, 1])));
    }

    #[test]
    fn odd_dim_examples() {
        // Free algebra, n = 3.
        let p = present(0, 3, vec![]);
        assert_eq!(oracle_odd_dim(&p).unwrap(), 3);

        // J = (y1y2 + y2y3), n = 3: dimension 2.
        let f = &(&y(0, 3, 0) * &y(0, 3, 1)) + &(&y(0, 3, 1) * &y(0, 3, 2));
        let p = present(0, 3, vec![f]);
        assert_eq!(oracle_odd_dim(&p).unwrap(), 2);

        // strangeodd m=1, n=2, l=1: J = (x1 y1), localized span contains y1.
        let x1 = SuperPolynomial::even_var(q(), 1, 2, 0);
        let p = present(1, 2, vec![&x1 * &y(1, 2, 0)]);
        assert_eq!(oracle_odd_dim(&p).unwrap(), 1);
    }

    #[test]
    fn span_dimension_invariant_under_generator_order() {
        let f = &(&y(0, 3, 0) * &y(0, 3, 1)) + &(&y(0, 3, 1) * &y(0, 3, 2));
        let g = &y(0, 3, 0) * &y(0, 3, 2);
        let p1 = present(0, 3, vec![f.clone(), g.clone()]);
        let p2 = present(0, 3, vec![g, f]);
        assert_eq!(
            exterior_span(&p1).unwrap().dimension(),
            exterior_span(&p2).unwrap().dimension()
        );
    }

    #[test]
    fn worstestimate_shape() {
        // Basement {1,2,3},{4,5,6},{7,8,9} with unit coefficients: odd dim 6.
        let n = 9;
        let term = |idx: &[usize]| {
            SuperPolynomial::odd_term(Scalar::one(q()), 0, n, OddMonomial::from_indices(idx))
        };
        let f = &(&term(&[0, 1, 2]) + &term(&[3, 4, 5])) + &term(&[6, 7, 8]);
        let p = present(0, n, vec![f]);
        assert_eq!(oracle_odd_dim(&p).unwrap(), 6);
    }
}
