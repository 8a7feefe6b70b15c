//! Krull super-dimension of a presented superalgebra: even dimension through
//! the purely even quotient, odd dimension through contraction ideals and a
//! pruned subset search, with witnesses.

use crate::error::Error;
use crate::groebner::{self, IdealBasis, IdealDim, ModuleBasis};
use crate::polyarith::{FieldSpec, MonomialOrder, Polynomial};
use crate::superpoly::{
    superideal_module_generators, ModuleVector, OddMonomial, SuperPolynomial, MAX_ODD_VARS,
};
use alloc::vec::Vec;

/// Cap on even generators; variable-subset enumeration is exponential in `m`.
pub const MAX_EVEN_VARS: usize = 16;

/// A finitely presented superalgebra `A = K[X1..Xm | Y1..Yn]/J` with `J`
/// generated by nonzero parity-homogeneous relations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperPresentation {
    field: FieldSpec,
    m: usize,
    n: usize,
    relations: Vec<SuperPolynomial>,
}

impl SuperPresentation {
    pub fn new(
        field: FieldSpec,
        m: usize,
        n: usize,
        relations: Vec<SuperPolynomial>,
    ) -> Result<Self, Error> {
        if n > MAX_ODD_VARS {
            return Err(Error::TooManyOddVariables {
                n,
                cap: MAX_ODD_VARS,
            });
        }
        if m > MAX_EVEN_VARS {
            return Err(Error::TooManyOddVariables {
                n: m,
                cap: MAX_EVEN_VARS,
            });
        }
        for g in &relations {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            if g.even_vars() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    found: g.even_vars(),
                });
            }
            if g.odd_vars() != n {
                return Err(Error::ArityMismatch {
                    expected: n,
                    found: g.odd_vars(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroInput("relation"));
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous(
                    g.to_canonical_string(&MonomialOrder::grevlex(m)),
                ));
            }
        }
        Ok(SuperPresentation {
            field,
            m,
            n,
            relations,
        })
    }

    /// The free polynomial superalgebra `K[X|Y]` (no relations).
    pub fn free(field: FieldSpec, m: usize, n: usize) -> Self {
        SuperPresentation::new(field, m, n, Vec::new()).expect("free presentation is valid")
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

    pub fn relations(&self) -> &[SuperPolynomial] {
        &self.relations
    }

    /// Generators of the even quotient ideal `J-bar` in `K[X]`.
    pub fn even_ideal_generators(&self) -> Vec<Polynomial> {
        self.relations
            .iter()
            .map(|g| g.bar())
            .filter(|p| !p.is_zero())
            .collect()
    }

    /// True iff every relation dies under `Y -> 0`, i.e. `J-bar = 0`.
    pub fn has_zero_even_ideal(&self) -> bool {
        self.relations.iter().all(|g| g.bar().is_zero())
    }

    /// `K[X]`-module generators `{y^L * g_k}` of `J`.
    pub fn module_generators(&self) -> Vec<ModuleVector> {
        superideal_module_generators(&self.relations).expect("relations are homogeneous")
    }

    /// Presentation with `extra` adjoined to the relations
    /// (the quotient by the super-ideal they generate).
    pub fn quotient(&self, extra: &[SuperPolynomial]) -> Result<Self, Error> {
        let mut relations = self.relations.clone();
        relations.extend_from_slice(extra);
        SuperPresentation::new(self.field, self.m, self.n, relations)
    }
}

/// The Krull super-dimension `r|s` together with an odd-parameter witness of
/// maximal cardinality (empty when `s = 0`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SuperDim {
    pub even: usize,
    pub odd: usize,
    pub witness: OddMonomial,
}

/// Shared state for the odd-dimension search over one presentation:
/// the even dimension and the module generators of `J` are computed once.
pub(crate) struct DimContext {
    pub(crate) even_dim: usize,
    pub(crate) module_gens: Vec<ModuleVector>,
    field: FieldSpec,
    m: usize,
    n: usize,
    ord: MonomialOrder,
}

impl DimContext {
    pub(crate) fn new(p: &SuperPresentation, ord: &MonomialOrder) -> Result<Self, Error> {
        let even_basis =
            groebner::buchberger(p.field(), p.even_vars(), &p.even_ideal_generators(), ord);
        let even_dim = match groebner::ideal_dimension(&even_basis) {
            IdealDim::Empty => return Err(Error::ZeroSuperalgebra),
            IdealDim::Dim(d) => d,
        };
        Ok(DimContext {
            even_dim,
            module_gens: p.module_generators(),
            field: p.field(),
            m: p.even_vars(),
            n: p.odd_vars(),
            ord: ord.clone(),
        })
    }

    /// Groebner basis of the contraction ideal `q_I = {a in K[X] : a y^I in J}`.
    pub(crate) fn contraction(&self, i: &OddMonomial) -> IdealBasis {
        let basis = groebner::module_buchberger_eliminating(
            &self.module_gens,
            self.field,
            self.m,
            self.n,
            &self.ord,
            i,
        );
        groebner::contraction_from_eliminated(&basis, i, self.field, self.m, &self.ord)
    }

    /// True iff `y^I` is a system of odd parameters: the contraction ideal
    /// leaves the even dimension untouched.
    pub(crate) fn is_system(&self, i: &OddMonomial) -> bool {
        match groebner::ideal_dimension(&self.contraction(i)) {
            IdealDim::Empty => false,
            IdealDim::Dim(d) => d == self.even_dim,
        }
    }

    /// `(s, witness)`: descending-cardinality search with singleton
    /// pre-filtering and superset pruning; the sub-system property makes a
    /// failed subset fatal for all of its supersets.
    pub(crate) fn odd_dim(&self) -> (usize, OddMonomial) {
        let n = self.n;
        // Singletons that fail can never appear in a successful set.
        let good: Vec<usize> = (0..n)
            .filter(|&j| self.is_system(&OddMonomial::singleton(j)))
            .collect();
        let mut failed: Vec<OddMonomial> = Vec::new();
        for k in (1..=good.len()).rev() {
            for subset in combinations(&good, k) {
                let cand = OddMonomial::from_indices(&subset);
                if failed.iter().any(|f| f.is_subset(&cand)) {
                    continue;
                }
                if self.is_system(&cand) {
                    return (k, cand);
                }
                failed.push(cand);
            }
        }
        (0, OddMonomial::EMPTY)
    }
}

/// All `k`-element subsets of `items` in lexicographic order.
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for i in start..=items.len().saturating_sub(needed) {
            current.push(items[i]);
            rec(items, k, i + 1, current, out);
            current.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut current, &mut out);
    }
    out
}

/// Even Krull dimension: the dimension of `K[X]/J-bar`.
pub fn even_dim(p: &SuperPresentation) -> Result<usize, Error> {
    even_dim_with(p, &MonomialOrder::grevlex(p.even_vars()))
}

pub fn even_dim_with(p: &SuperPresentation, ord: &MonomialOrder) -> Result<usize, Error> {
    DimContext::new(p, ord).map(|c| c.even_dim)
}

/// True iff the residues `{y_i : i in I}` form a system of odd parameters.
pub fn is_odd_parameter_system(p: &SuperPresentation, i: &OddMonomial) -> Result<bool, Error> {
    let ctx = DimContext::new(p, &MonomialOrder::grevlex(p.even_vars()))?;
    Ok(ctx.is_system(i))
}

/// Maximal size of an odd-parameter system drawn from the generators, with
/// the lexicographically smallest witness of that size.
pub fn odd_dim(p: &SuperPresentation) -> Result<(usize, OddMonomial), Error> {
    let ctx = DimContext::new(p, &MonomialOrder::grevlex(p.even_vars()))?;
    Ok(ctx.odd_dim())
}

/// The Krull super-dimension `r|s` with witness.
pub fn ksdim(p: &SuperPresentation) -> Result<SuperDim, Error> {
    ksdim_with(p, &MonomialOrder::grevlex(p.even_vars()))
}

pub fn ksdim_with(p: &SuperPresentation, ord: &MonomialOrder) -> Result<SuperDim, Error> {
    let ctx = DimContext::new(p, ord)?;
    let (odd, witness) = ctx.odd_dim();
    Ok(SuperDim {
        even: ctx.even_dim,
        odd,
        witness,
    })
}

/// Gröbner basis of the contraction ideal `q_I`.
pub fn contraction_ideal(p: &SuperPresentation, i: &OddMonomial) -> Result<IdealBasis, Error> {
    let ctx = DimContext::new(p, &MonomialOrder::grevlex(p.even_vars()))?;
    Ok(ctx.contraction(i))
}

/// Checks the injectivity criterion behind the super Noether normalization:
/// with `J-bar = 0` the map `K[X][Y_i : i in I] -> A` is injective iff
/// `q_{I'} = 0` for every `I' <= I`; by monotonicity of annihilators the top
/// set decides.
pub fn verify_noether_witness(p: &SuperPresentation, i: &OddMonomial) -> Result<bool, Error> {
    if !p.has_zero_even_ideal() {
        return Err(Error::EvenIdealNonzero);
    }
    let ctx = DimContext::new(p, &MonomialOrder::grevlex(p.even_vars()))?;
    Ok(ctx.contraction(i).polys().is_empty())
}

/// Super-dimension of a supermodule presented by annihilator generators:
/// `sdim(M) = Ksdim(A / Ann(M))`.
pub fn supermodule_sdim(
    p: &SuperPresentation,
    ann_gens: &[SuperPolynomial],
) -> Result<SuperDim, Error> {
    ksdim(&p.quotient(ann_gens)?)
}

/// A reduced module basis for the super-ideal of `p`, under the default
/// term-over-position order.
pub fn superideal_basis(p: &SuperPresentation) -> ModuleBasis {
    groebner::module_buchberger(
        &p.module_generators(),
        p.field(),
        p.even_vars(),
        p.odd_vars(),
        &MonomialOrder::grevlex(p.even_vars()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyarith::Scalar;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    /// `strangeodd` with parameters (m, n, l): J is the super-ideal
    /// generated by `x1*y1, .., x1*yl`.
    pub(crate) fn strangeodd(m: usize, n: usize, l: usize) -> SuperPresentation {
        let x1 = SuperPolynomial::even_var(q(), m, n, 0);
        let rels: Vec<SuperPolynomial> = (0..l)
            .map(|j| &x1 * &SuperPolynomial::odd_var(q(), m, n, j))
            .collect();
        SuperPresentation::new(q(), m, n, rels).unwrap()
    }

    #[test]
    fn even_dim_examples() {
        // Free K[x1,x2 | y1]: even dimension 2.
        assert_eq!(even_dim(&SuperPresentation::free(q(), 2, 1)).unwrap(), 2);
        // strangeodd m=2, n=3, l=1: J-bar = 0, so still 2.
        assert_eq!(even_dim(&strangeodd(2, 3, 1)).unwrap(), 2);
        // K[x | y1]/(x): J-bar = (x).
        let x = SuperPolynomial::even_var(q(), 1, 1, 0);
        let p = SuperPresentation::new(q(), 1, 1, alloc::vec![x]).unwrap();
        assert_eq!(even_dim(&p).unwrap(), 0);
    }

    #[test]
    fn zero_superalgebra_rejected() {
        let one_rel = SuperPolynomial::constant(Scalar::from_i64(q(), 1), 1, 1);
        let p = SuperPresentation::new(q(), 1, 1, alloc::vec![one_rel]).unwrap();
        assert_eq!(even_dim(&p), Err(Error::ZeroSuperalgebra));
    }

    #[test]
    fn odd_parameter_system_examples() {
        // Free K[x | y1]: {y1} is a system.
        let free = SuperPresentation::free(q(), 1, 1);
        assert!(is_odd_parameter_system(&free, &OddMonomial::singleton(0)).unwrap());

        // K[x1 | y1]/(x1 y1): q_{1} = (x1) has dimension 0 < 1.
        let p = strangeodd(1, 1, 1);
        assert!(!is_odd_parameter_system(&p, &OddMonomial::singleton(0)).unwrap());

        // strangeodd m=1, n=2, l=1: {y2} is a system.
        let p = strangeodd(1, 2, 1);
        assert!(is_odd_parameter_system(&p, &OddMonomial::singleton(1)).unwrap());
    }

    #[test]
    fn odd_dim_free_algebra() {
        let p = SuperPresentation::free(q(), 2, 3);
        let (s, w) = odd_dim(&p).unwrap();
        assert_eq!(s, 3);
        assert_eq!(w, OddMonomial::from_indices(&[0, 1, 2]));
    }

    #[test]
    fn odd_dim_strangeodd() {
        let p = strangeodd(2, 3, 1);
        let (s, w) = odd_dim(&p).unwrap();
        assert_eq!(s, 2);
        assert_eq!(w, OddMonomial::from_indices(&[1, 2]));

        // Its quotient C by x1 has larger odd dimension: 3.
        let x1 = SuperPolynomial::even_var(q(), 2, 3, 0);
        let c = p.quotient(&[x1]).unwrap();
        let dim = ksdim(&c).unwrap();
        assert_eq!((dim.even, dim.odd), (1, 3));
        assert_eq!(dim.witness, OddMonomial::from_indices(&[0, 1, 2]));
    }

    #[test]
    fn ksdim_examples() {
        let free = ksdim(&SuperPresentation::free(q(), 2, 3)).unwrap();
        assert_eq!((free.even, free.odd), (2, 3));

        let a = ksdim(&strangeodd(2, 3, 1)).unwrap();
        assert_eq!((a.even, a.odd), (2, 2));

        // K[x | y1, y2]/(y1 y2) has super-dimension 1|1.
        let y1 = SuperPolynomial::odd_var(q(), 1, 2, 0);
        let y2 = SuperPolynomial::odd_var(q(), 1, 2, 1);
        let p = SuperPresentation::new(q(), 1, 2, alloc::vec![&y1 * &y2]).unwrap();
        let d = ksdim(&p).unwrap();
        assert_eq!((d.even, d.odd), (1, 1));
        assert_eq!(d.witness, OddMonomial::singleton(0));
    }

    #[test]
    fn noether_witness() {
        let free = SuperPresentation::free(q(), 1, 2);
        assert!(verify_noether_witness(&free, &OddMonomial::from_indices(&[0, 1])).unwrap());

        let p = strangeodd(1, 2, 1);
        assert!(verify_noether_witness(&p, &OddMonomial::singleton(1)).unwrap());
        assert!(!verify_noether_witness(&p, &OddMonomial::singleton(0)).unwrap());

        // Witness check agrees with the exhaustive subset sweep.
        let ctx = DimContext::new(&p, &MonomialOrder::grevlex(1)).unwrap();
        for mask in 0..4u32 {
            let i = OddMonomial::from_mask(mask);
            let sweep_all_zero = (0..4u32)
                .map(OddMonomial::from_mask)
                .filter(|sub| sub.is_subset(&i))
                .all(|sub| ctx.contraction(&sub).polys().is_empty());
            assert_eq!(
                verify_noether_witness(&p, &i).unwrap(),
                sweep_all_zero,
                "witness vs sweep at mask {mask}"
            );
        }

        // J-bar != 0 is out of scope.
        let x = SuperPolynomial::even_var(q(), 1, 1, 0);
        let bad = SuperPresentation::new(q(), 1, 1, alloc::vec![x]).unwrap();
        assert_eq!(
            verify_noether_witness(&bad, &OddMonomial::EMPTY),
            Err(Error::EvenIdealNonzero)
        );
    }

    #[test]
    fn quotient_presentation_rules() {
        let free = SuperPresentation::free(q(), 1, 2);
        let y1 = SuperPolynomial::odd_var(q(), 1, 2, 0);
        let p = free.quotient(&[y1]).unwrap();
        assert_eq!(p.relations().len(), 1);

        let zero = SuperPolynomial::zero(q(), 1, 2);
        assert_eq!(free.quotient(&[zero]), Err(Error::ZeroInput("relation")));

        let mixed = &SuperPolynomial::even_var(q(), 1, 2, 0)
            + &SuperPolynomial::odd_var(q(), 1, 2, 0);
        assert!(matches!(
            free.quotient(&[mixed]),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn supermodule_sdim_examples() {
        // Ann(M) = 0: sdim(A) itself.
        let p = strangeodd(2, 3, 1);
        let d = supermodule_sdim(&p, &[]).unwrap();
        assert_eq!((d.even, d.odd), (2, 2));

        // Ann(M) = (y1..yn): the purely even quotient, r|0.
        let free = SuperPresentation::free(q(), 2, 3);
        let ys: Vec<_> = (0..3)
            .map(|j| SuperPolynomial::odd_var(q(), 2, 3, j))
            .collect();
        let d = supermodule_sdim(&free, &ys).unwrap();
        assert_eq!((d.even, d.odd), (2, 0));
        assert_eq!(d.witness, OddMonomial::EMPTY);

        // Free K[x|y1] with Ann = (x): K[y1] over K, sdim 0|1.
        let free = SuperPresentation::free(q(), 1, 1);
        let x = SuperPolynomial::even_var(q(), 1, 1, 0);
        let d = supermodule_sdim(&free, &[x]).unwrap();
        assert_eq!((d.even, d.odd), (0, 1));
    }

    #[test]
    fn decreasing_quotients_of_free_algebra() {
        // Quotient of free K[X|Y] (m=2, n=4) by {y1..yt}: 2|(4-t).
        let free = SuperPresentation::free(q(), 2, 4);
        for t in 0..=4usize {
            let ys: Vec<_> = (0..t)
                .map(|j| SuperPolynomial::odd_var(q(), 2, 4, j))
                .collect();
            let d = supermodule_sdim(&free, &ys).unwrap();
            assert_eq!((d.even, d.odd), (2, 4 - t), "t = {t}");
        }
    }

    #[test]
    fn combinations_lexicographic() {
        let c = combinations(&[0, 1, 2, 3], 2);
        assert_eq!(
            c,
            alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![0, 2],
                alloc::vec![0, 3],
                alloc::vec![1, 2],
                alloc::vec![1, 3],
                alloc::vec![2, 3]
            ]
        );
        assert_eq!(combinations(&[0, 1], 3), Vec::<Vec<usize>>::new());
        assert_eq!(combinations(&[], 0), alloc::vec![Vec::<usize>::new()]);
    }
}
