//! Buchberger engine for ideals of `K[X]` and `K[X]`-submodules of the free
//! module with basis `{y^I}`: normal forms, membership, contraction ideals
//! and Krull dimension.

use crate::polyarith::{EvenMonomial, FieldSpec, MonomialOrder, Polynomial, Scalar};
use crate::superpoly::{ModuleVector, OddMonomial};
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Reduced Gröbner basis of an ideal of `K[X]`: auto-reduced, monic leading
/// coefficients, sorted ascending by leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealBasis {
    field: FieldSpec,
    nvars: usize,
    ord: MonomialOrder,
    polys: Vec<Polynomial>,
}

impl IdealBasis {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.ord
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_one()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self).is_zero()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(
    field: FieldSpec,
    nvars: usize,
    gens: &[Polynomial],
    ord: &MonomialOrder,
) -> IdealBasis {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        assert_eq!(g.field(), field, "generator field mismatch");
        assert_eq!(g.nvars(), nvars, "generator arity mismatch");
        if !g.is_zero() {
            basis.push(g.make_monic(ord));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (lm_i, _) = basis[i].leading_term(ord).expect("basis elements nonzero");
        let (lm_j, _) = basis[j].leading_term(ord).expect("basis elements nonzero");
        // Buchberger's product criterion: coprime leading monomials reduce to zero.
        if lm_i.lcm(lm_j) == lm_i.mul(lm_j) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = reduce_fully(&s, &basis, ord);
        if !r.is_zero() {
            let r = r.make_monic(ord);
            let new = basis.len();
            for k in 0..new {
                pairs.push((k, new));
            }
            basis.push(r);
        }
    }
    reduce_basis(field, nvars, basis, ord)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &MonomialOrder) -> Polynomial {
    let (lm_f, lc_f) = f.leading_term(ord).expect("nonzero");
    let (lm_g, lc_g) = g.leading_term(ord).expect("nonzero");
    let lcm = lm_f.lcm(lm_g);
    let a = f.mul_monomial(&lm_f.div_into(&lcm), &lc_f.inv().expect("unit"));
    let b = g.mul_monomial(&lm_g.div_into(&lcm), &lc_g.inv().expect("unit"));
    &a - &b
}

fn reduce_fully(f: &Polynomial, basis: &[Polynomial], ord: &MonomialOrder) -> Polynomial {
    let leads: Vec<(EvenMonomial, Scalar)> = basis
        .iter()
        .map(|b| {
            let (m, c) = b.leading_term(ord).expect("nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut rem = Polynomial::zero(f.field(), f.nvars());
    let mut p = f.clone();
    'outer: while !p.is_zero() {
        let (lm, lc) = {
            let (m, c) = p.leading_term(ord).expect("nonzero");
            (m.clone(), c.clone())
        };
        for (k, (blm, blc)) in leads.iter().enumerate() {
            if blm.divides(&lm) {
                let q = blm.div_into(&lm);
                let factor = lc.clone() * blc.inv().expect("unit");
                p = &p - &basis[k].mul_monomial(&q, &factor);
                continue 'outer;
            }
        }
        let term = Polynomial::from_terms(p.field(), p.nvars(), [(lm.clone(), lc.clone())])
            .expect("term compatible");
        rem = &rem + &term;
        p = &p - &term;
    }
    rem
}

/// Minimalize and inter-reduce a Gröbner basis into the reduced basis.
fn reduce_basis(
    field: FieldSpec,
    nvars: usize,
    mut basis: Vec<Polynomial>,
    ord: &MonomialOrder,
) -> IdealBasis {
    basis.retain(|p| !p.is_zero());
    // Minimalize: drop elements whose leading monomial is divisible by
    // another element's leading monomial.
    let mut keep: Vec<Polynomial> = Vec::new();
    'next: for i in 0..basis.len() {
        let (lm_i, _) = basis[i].leading_term(ord).expect("nonzero");
        for j in 0..basis.len() {
            if i == j {
                continue;
            }
            let (lm_j, _) = basis[j].leading_term(ord).expect("nonzero");
            if lm_j.divides(lm_i) && (lm_j != lm_i || j < i) {
                continue 'next;
            }
        }
        keep.push(basis[i].clone());
    }
    // Inter-reduce tails.
    let mut reduced: Vec<Polynomial> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        let r = reduce_fully(&keep[i], &others, ord);
        if !r.is_zero() {
            reduced.push(r.make_monic(ord));
        }
    }
    reduced.sort_by(|a, b| {
        let (la, _) = a.leading_term(ord).expect("nonzero");
        let (lb, _) = b.leading_term(ord).expect("nonzero");
        ord.cmp_monomials(la, lb)
    });
    IdealBasis {
        field,
        nvars,
        ord: ord.clone(),
        polys: reduced,
    }
}

/// Unique remainder of `f` modulo the reduced basis; zero iff `f` lies in
/// the ideal.
pub fn normal_form(f: &Polynomial, basis: &IdealBasis) -> Polynomial {
    reduce_fully(f, &basis.polys, &basis.ord)
}

/// Krull dimension of `K[X]/I`, or the distinguished empty value for the
/// unit ideal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealDim {
    /// `I = (1)`: the quotient ring is zero.
    Empty,
    Dim(usize),
}

impl IdealDim {
    pub fn as_dim(&self) -> Option<usize> {
        match self {
            IdealDim::Empty => None,
            IdealDim::Dim(d) => Some(*d),
        }
    }
}

/// Krull dimension via maximal independent variable sets modulo the
/// leading-term ideal: the largest `S` such that no leading monomial is
/// supported inside `S`.
pub fn ideal_dimension(basis: &IdealBasis) -> IdealDim {
    if basis.is_unit_ideal() {
        return IdealDim::Empty;
    }
    let m = basis.nvars;
    let lms: Vec<EvenMonomial> = basis
        .polys
        .iter()
        .map(|p| basis_leading(p, &basis.ord))
        .collect();
    let mut best = 0usize;
    for mask in 0..(1u64 << m) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if lms.iter().all(|lm| !lm.supported_on(mask)) {
            best = size;
        }
    }
    IdealDim::Dim(best)
}

fn basis_leading(p: &Polynomial, ord: &MonomialOrder) -> EvenMonomial {
    p.leading_term(ord).expect("basis elements nonzero").0.clone()
}

// ---------------------------------------------------------------------------
// Module Gröbner bases
// ---------------------------------------------------------------------------

/// Position ranking for module term orders over the free module with basis
/// `{e_I}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum ModOrder {
    /// Term-over-position; ties broken by position rank `(|I|, lex)`, low
    /// rank leading.
    Top,
    /// Position-over-term with the target position ranked strictly below all
    /// others: an elimination order for the free summand at the target.
    EliminateAllBut(OddMonomial),
    /// Position-over-term with low exterior degree ranked highest: an
    /// elimination order for every degree truncation `F_{>= d}` at once.
    DegreeAscending,
}

impl ModOrder {
    /// Total order on module terms `(position, monomial)`; greater = leading.
    fn cmp(
        &self,
        ord: &MonomialOrder,
        a: (&OddMonomial, &EvenMonomial),
        b: (&OddMonomial, &EvenMonomial),
    ) -> Ordering {
        match self {
            ModOrder::Top => ord
                .cmp_monomials(a.1, b.1)
                .then_with(|| b.0.set_lex_cmp(a.0)),
            ModOrder::EliminateAllBut(target) => {
                let pos = match (a.0 == target, b.0 == target) {
                    (true, true) => Ordering::Equal,
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    (false, false) => a.0.set_lex_cmp(b.0),
                };
                pos.then_with(|| ord.cmp_monomials(a.1, b.1))
            }
            ModOrder::DegreeAscending => b
                .0
                .set_lex_cmp(a.0)
                .then_with(|| ord.cmp_monomials(a.1, b.1)),
        }
    }
}

/// Reduced Gröbner basis of a `K[X]`-submodule of the free module with basis
/// `{y^I}`.
#[derive(Clone, Debug)]
pub struct ModuleBasis {
    field: FieldSpec,
    m: usize,
    n: usize,
    ord: MonomialOrder,
    morder: ModOrder,
    vectors: Vec<ModuleVector>,
}

impl ModuleBasis {
    pub fn vectors(&self) -> &[ModuleVector] {
        &self.vectors
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.ord
    }

    pub fn is_zero_module(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &ModuleVector) -> bool {
        module_normal_form(v, self).is_zero()
    }
}

/// Leading `(position, monomial, coefficient)` of a nonzero vector.
fn module_leading<'a>(
    v: &'a ModuleVector,
    ord: &MonomialOrder,
    morder: &ModOrder,
) -> (&'a OddMonomial, &'a EvenMonomial, &'a Scalar) {
    v.coords()
        .map(|(pos, p)| {
            let (m, c) = p.leading_term(ord).expect("coordinates nonzero");
            (pos, m, c)
        })
        .max_by(|a, b| morder.cmp(ord, (a.0, a.1), (b.0, b.1)))
        .expect("vector nonzero")
}

fn module_reduce_fully(
    v: &ModuleVector,
    basis: &[ModuleVector],
    ord: &MonomialOrder,
    morder: &ModOrder,
) -> ModuleVector {
    struct Lead {
        pos: OddMonomial,
        mono: EvenMonomial,
        coeff: Scalar,
    }
    let leads: Vec<Lead> = basis
        .iter()
        .map(|b| {
            let (pos, mono, coeff) = module_leading(b, ord, morder);
            Lead {
                pos: *pos,
                mono: mono.clone(),
                coeff: coeff.clone(),
            }
        })
        .collect();
    let field = v.field();
    let m = v.even_vars();
    let n = v.odd_vars();
    let mut rem = ModuleVector::zero(field, m, n);
    let mut p = v.clone();
    'outer: while !p.is_zero() {
        let (pos, lm, lc) = {
            let (pos, mono, coeff) = module_leading(&p, ord, morder);
            (*pos, mono.clone(), coeff.clone())
        };
        for (k, lead) in leads.iter().enumerate() {
            if lead.pos == pos && lead.mono.divides(&lm) {
                let q = lead.mono.div_into(&lm);
                let factor = lc.clone() * lead.coeff.inv().expect("unit");
                p = p
                    .checked_sub(&basis[k].mul_term(&q, &factor))
                    .expect("same module");
                continue 'outer;
            }
        }
        let term = ModuleVector::from_coords(
            field,
            m,
            n,
            [(
                pos,
                Polynomial::from_terms(field, m, [(lm.clone(), lc.clone())])
                    .expect("term compatible"),
            )],
        );
        rem = rem.checked_add(&term).expect("same module");
        p = p.checked_sub(&term).expect("same module");
    }
    rem
}

fn module_s_vector(
    a: &ModuleVector,
    b: &ModuleVector,
    ord: &MonomialOrder,
    morder: &ModOrder,
) -> Option<ModuleVector> {
    let (pos_a, lm_a, lc_a) = module_leading(a, ord, morder);
    let (pos_b, lm_b, lc_b) = module_leading(b, ord, morder);
    if pos_a != pos_b {
        return None;
    }
    let lcm = lm_a.lcm(lm_b);
    let left = a.mul_term(&lm_a.div_into(&lcm), &lc_a.inv().expect("unit"));
    let right = b.mul_term(&lm_b.div_into(&lcm), &lc_b.inv().expect("unit"));
    Some(left.checked_sub(&right).expect("same module"))
}

fn module_buchberger_with(
    gens: &[ModuleVector],
    field: FieldSpec,
    m: usize,
    n: usize,
    ord: &MonomialOrder,
    morder: ModOrder,
) -> ModuleBasis {
    let mut basis: Vec<ModuleVector> = gens.iter().filter(|v| !v.is_zero()).cloned().collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let Some(s) = module_s_vector(&basis[i], &basis[j], ord, &morder) else {
            continue;
        };
        let r = module_reduce_fully(&s, &basis, ord, &morder);
        if !r.is_zero() {
            let new = basis.len();
            for k in 0..new {
                pairs.push((k, new));
            }
            basis.push(r);
        }
    }
    module_reduce_basis(basis, field, m, n, ord, morder)
}

fn module_reduce_basis(
    basis: Vec<ModuleVector>,
    field: FieldSpec,
    m: usize,
    n: usize,
    ord: &MonomialOrder,
    morder: ModOrder,
) -> ModuleBasis {
    // Minimalize on leading terms (same position, dividing monomial).
    let mut keep: Vec<ModuleVector> = Vec::new();
    'next: for i in 0..basis.len() {
        let (pos_i, lm_i, _) = module_leading(&basis[i], ord, &morder);
        for j in 0..basis.len() {
            if i == j {
                continue;
            }
            let (pos_j, lm_j, _) = module_leading(&basis[j], ord, &morder);
            if pos_j == pos_i && lm_j.divides(lm_i) && (lm_j != lm_i || j < i) {
                continue 'next;
            }
        }
        keep.push(basis[i].clone());
    }
    let mut reduced: Vec<ModuleVector> = Vec::new();
    for i in 0..keep.len() {
        let others: Vec<ModuleVector> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, v)| v.clone())
            .collect();
        let r = module_reduce_fully(&keep[i], &others, ord, &morder);
        if !r.is_zero() {
            let (_, _, lc) = module_leading(&r, ord, &morder);
            let inv = lc.inv().expect("unit");
            reduced.push(r.mul_term(&EvenMonomial::one(m), &inv));
        }
    }
    reduced.sort_by(|a, b| {
        let (pa, ma, _) = module_leading(a, ord, &morder);
        let (pb, mb, _) = module_leading(b, ord, &morder);
        morder.cmp(ord, (pa, ma), (pb, mb))
    });
    ModuleBasis {
        field,
        m,
        n,
        ord: ord.clone(),
        morder,
        vectors: reduced,
    }
}

/// Reduced module Gröbner basis under the default term-over-position order.
pub fn module_buchberger(
    gens: &[ModuleVector],
    field: FieldSpec,
    m: usize,
    n: usize,
    ord: &MonomialOrder,
) -> ModuleBasis {
    module_buchberger_with(gens, field, m, n, ord, ModOrder::Top)
}

/// Module basis under the elimination order isolating the free summand at
/// `target`.
pub(crate) fn module_buchberger_eliminating(
    gens: &[ModuleVector],
    field: FieldSpec,
    m: usize,
    n: usize,
    ord: &MonomialOrder,
    target: &OddMonomial,
) -> ModuleBasis {
    module_buchberger_with(gens, field, m, n, ord, ModOrder::EliminateAllBut(*target))
}

/// Module basis under the exterior-degree elimination order (low-degree
/// positions greatest), suitable for all degree truncations at once.
pub(crate) fn module_buchberger_degree_order(
    gens: &[ModuleVector],
    field: FieldSpec,
    m: usize,
    n: usize,
    ord: &MonomialOrder,
) -> ModuleBasis {
    module_buchberger_with(gens, field, m, n, ord, ModOrder::DegreeAscending)
}

/// Unique remainder of `v` modulo the reduced module basis.
pub fn module_normal_form(v: &ModuleVector, basis: &ModuleBasis) -> ModuleVector {
    module_reduce_fully(v, &basis.vectors, &basis.ord, &basis.morder)
}

/// True iff `v` lies in the `K[X]`-span of the basis.
pub fn module_membership(v: &ModuleVector, basis: &ModuleBasis) -> bool {
    module_normal_form(v, basis).is_zero()
}

/// Gröbner basis of the contraction ideal
/// `q_I = { a in K[X] : a e_I in span(B) }`, computed by re-running the
/// module engine under the elimination order for `I` and collecting the
/// basis elements wholly supported at that position.
pub fn contraction_ideal(basis: &ModuleBasis, target: &OddMonomial) -> IdealBasis {
    let eliminated = module_buchberger_eliminating(
        &basis.vectors,
        basis.field,
        basis.m,
        basis.n,
        &basis.ord,
        target,
    );
    contraction_from_eliminated(&eliminated, target, basis.field, basis.m, &basis.ord)
}

/// Extract `q_I` from a basis already computed under `EliminateAllBut(I)`:
/// with the target position strictly smallest, a basis vector leads at the
/// target iff it is wholly supported there, and those components form a
/// Gröbner basis of the contraction.
pub(crate) fn contraction_from_eliminated(
    basis: &ModuleBasis,
    target: &OddMonomial,
    field: FieldSpec,
    m: usize,
    ord: &MonomialOrder,
) -> IdealBasis {
    debug_assert_eq!(basis.morder, ModOrder::EliminateAllBut(*target));
    let polys: Vec<Polynomial> = basis
        .vectors
        .iter()
        .filter(|v| v.coords().all(|(pos, _)| pos == target))
        .map(|v| v.coord(target))
        .collect();
    reduce_basis(field, m, polys, ord)
}
