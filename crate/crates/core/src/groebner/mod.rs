//! Commutative Groebner bases over Q: normal forms with cofactors, ideal
//! quotients, syzygy modules, Krull dimension and regular sequences.

pub(crate) mod engine;
mod order;

use engine::{Engine, RingKind};
pub use order::MonomialOrder;

use crate::algebra::{Monomial, Poly};

/// Reduced Groebner basis of an ideal, generators sorted by ascending
/// leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    generators: Vec<Poly>,
}

/// `p = sum cofactors[i] * generators[i] + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub remainder: Poly,
    pub cofactors: Vec<Poly>,
}

impl GroebnerBasis {
    fn engine(&self) -> Engine {
        Engine::new(RingKind::Commutative, self.order.clone(), true, self.nvars)
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        let e = self.engine();
        self.generators
            .iter()
            .map(|g| Monomial(e.vector_from_polys(std::slice::from_ref(g), 0)[0].mono.clone()))
            .collect()
    }

    pub fn normal_form(&self, p: &Poly) -> NormalForm {
        let e = self.engine();
        let basis = self.vectors(&e);
        let mut quot = vec![Poly::zero(self.nvars); basis.len()];
        let r = e.reduce(e.vector_from_polys(std::slice::from_ref(p), 0), &basis, true, Some(&mut quot));
        NormalForm { remainder: e.polys_from_vector(&r, 0, 1).pop().unwrap(), cofactors: quot }
    }

    /// Remainder only.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let e = self.engine();
        let basis = self.vectors(&e);
        let r = e.reduce(e.vector_from_polys(std::slice::from_ref(p), 0), &basis, true, None);
        e.polys_from_vector(&r, 0, 1).pop().unwrap()
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    fn vectors(&self, e: &Engine) -> Vec<engine::Vector> {
        self.generators.iter().map(|g| e.vector_from_polys(std::slice::from_ref(g), 0)).collect()
    }
}

fn nvars_of(gens: &[Poly]) -> usize {
    gens.first().map(Poly::nvars).expect("at least one generator")
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[Poly], order: &MonomialOrder) -> GroebnerBasis {
    let nvars = nvars_of(gens);
    let e = Engine::new(RingKind::Commutative, order.clone(), true, nvars);
    let vs = gens.iter().map(|g| e.vector_from_polys(std::slice::from_ref(g), 0)).collect();
    let generators = e.groebner(vs).iter().map(|v| e.polys_from_vector(v, 0, 1).pop().unwrap()).collect();
    GroebnerBasis { nvars, order: order.clone(), generators }
}

/// Groebner basis together with, for each basis element `g_k`, cofactors
/// `c_k` with `g_k = sum_i c_k[i] * gens[i]`.
pub fn groebner_basis_with_cofactors(gens: &[Poly], order: &MonomialOrder) -> (GroebnerBasis, Vec<Vec<Poly>>) {
    let nvars = nvars_of(gens);
    let e = Engine::new(RingKind::Commutative, order.clone(), true, nvars);
    let rows: Vec<Vec<Poly>> = gens.iter().map(|g| vec![g.clone()]).collect();
    let (generators, cofactors): (Vec<Poly>, Vec<Vec<Poly>>) = e
        .groebner_with_cofactors(&rows, 1)
        .into_iter()
        .map(|(mut g, c)| (g.pop().unwrap(), c))
        .unzip();
    (GroebnerBasis { nvars, order: order.clone(), generators }, cofactors)
}

/// Generators (a reduced grevlex Groebner basis) of `(I : p)`.
pub fn ideal_quotient(gens: &[Poly], p: &Poly) -> Vec<Poly> {
    assert!(!p.is_zero(), "ideal quotient by zero");
    let nvars = p.nvars();
    let e = Engine::new(RingKind::Commutative, MonomialOrder::GrevLex, true, nvars);
    let one = Poly::one(nvars);
    let mut rows = vec![e.vector_from_polys(&[p.clone(), one], 0)];
    rows.extend(gens.iter().filter(|g| !g.is_zero()).map(|g| e.vector_from_polys(std::slice::from_ref(g), 0)));
    e.groebner(rows)
        .into_iter()
        .filter(|v| v[0].pos == 1)
        .map(|v| e.polys_from_vector(&v, 1, 1).pop().unwrap())
        .collect()
}

/// Generating set of the syzygies of a list of polynomials or vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyModule {
    /// Number of input generators, i.e. the length of every syzygy.
    pub rank: usize,
    pub generators: Vec<Vec<Poly>>,
}

impl SyzygyModule {
    /// `sum_i v[i] * gens[i]` for every generator `v`; all zero when sound.
    pub fn annihilates(&self, gens: &[Poly]) -> bool {
        self.generators.iter().all(|v| v.iter().zip(gens).map(|(a, b)| a * b).sum::<Poly>().is_zero())
    }
}

/// Syzygies of `gens`, a Groebner basis of the syzygy module for the
/// position-over-grevlex order.
pub fn syzygy_module(gens: &[Poly]) -> SyzygyModule {
    let rows: Vec<Vec<Poly>> = gens.iter().map(|g| vec![g.clone()]).collect();
    module_syzygies(&rows)
}

/// Syzygies of vectors in `R^r`.
pub fn module_syzygies(gens: &[Vec<Poly>]) -> SyzygyModule {
    let rank = gens[0].len();
    let nvars = gens[0][0].nvars();
    let e = Engine::new(RingKind::Commutative, MonomialOrder::GrevLex, true, nvars);
    SyzygyModule { rank: gens.len(), generators: e.syzygies(gens, rank) }
}

/// Groebner basis of a submodule of `R^rank` (position over grevlex).
#[derive(Clone, Debug)]
pub struct ModuleGroebnerBasis {
    engine: Engine,
    rank: usize,
    basis: Vec<engine::Vector>,
}

impl ModuleGroebnerBasis {
    pub fn new(gens: &[Vec<Poly>], rank: usize, nvars: usize) -> Self {
        let engine = Engine::new(RingKind::Commutative, MonomialOrder::GrevLex, true, nvars);
        let vs = gens.iter().map(|g| engine.vector_from_polys(g, 0)).collect();
        let basis = engine.groebner(vs);
        ModuleGroebnerBasis { engine, rank, basis }
    }

    pub fn generators(&self) -> Vec<Vec<Poly>> {
        self.basis.iter().map(|v| self.engine.polys_from_vector(v, 0, self.rank)).collect()
    }

    pub fn reduce(&self, v: &[Poly]) -> Vec<Poly> {
        let r = self.engine.reduce(self.engine.vector_from_polys(v, 0), &self.basis, true, None);
        self.engine.polys_from_vector(&r, 0, self.rank)
    }

    pub fn contains(&self, v: &[Poly]) -> bool {
        self.reduce(v).iter().all(Poly::is_zero)
    }
}

/// Krull dimension of `Q[x_1..x_nvars] / I`, from the leading monomials of
/// a Groebner basis: the size of a largest set of variables containing the
/// support of no leading monomial. `None` for the unit ideal.
pub fn hilbert_dimension(nvars: usize, gens: &[Poly]) -> Option<usize> {
    let gens: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Some(nvars);
    }
    let gb = groebner_basis(&gens, &MonomialOrder::GrevLex);
    if gb.is_unit() {
        return None;
    }
    Some(dimension_from_leading(nvars, &gb.leading_monomials()))
}

pub(crate) fn dimension_from_leading(nvars: usize, leads: &[Monomial]) -> usize {
    assert!(nvars < 32, "too many variables for subset enumeration");
    let supports: Vec<u32> = leads
        .iter()
        .map(|m| m.exps().iter().enumerate().filter(|(_, &e)| e > 0).fold(0u32, |acc, (i, _)| acc | (1 << i)))
        .collect();
    (0u32..(1 << nvars))
        .filter(|&s| supports.iter().all(|&sup| sup & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Outcome of [`is_regular_sequence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularSequence {
    pub regular: bool,
    /// Index `i` of the first element that is a zero divisor modulo the
    /// ideal of its predecessors.
    pub failure_index: Option<usize>,
    /// An element `q` with `q * seq[i]` in the ideal of `seq[..i]` but `q`
    /// itself outside it, reduced modulo that ideal.
    pub witness: Option<Poly>,
}

/// Tests whether each `seq[i]` is a nonzerodivisor modulo `(seq[..i])`, by
/// comparing `(seq[..i]) : seq[i]` with `(seq[..i])`.
pub fn is_regular_sequence(seq: &[Poly]) -> RegularSequence {
    assert!(seq.iter().all(|p| !p.is_zero()), "regular-sequence elements must be nonzero");
    for i in 1..seq.len() {
        let gb = groebner_basis(&seq[..i], &MonomialOrder::GrevLex);
        for q in ideal_quotient(&seq[..i], &seq[i]) {
            let r = gb.reduce(&q);
            if !r.is_zero() {
                return RegularSequence { regular: false, failure_index: Some(i), witness: Some(r) };
            }
        }
    }
    RegularSequence { regular: true, failure_index: None, witness: None }
}
