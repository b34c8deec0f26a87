//! Left Groebner bases, left syzygies and characteristic dimension in the
//! Weyl algebra.

use super::WeylOp;
use crate::algebra::Poly;
use crate::error::{Error, Result};
use crate::groebner::engine::{Engine, RingKind, Vector};
use crate::groebner::{dimension_from_leading, hilbert_dimension, MonomialOrder};

/// Reduced left Groebner basis of a left ideal of the Weyl algebra.
#[derive(Clone, Debug)]
pub struct LeftIdealGB {
    n: usize,
    order: MonomialOrder,
    generators: Vec<WeylOp>,
}

/// `P = sum cofactors[i] * generators[i] + remainder` (left multiples).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftNormalForm {
    pub remainder: WeylOp,
    pub cofactors: Vec<WeylOp>,
}

fn engine(n: usize, order: &MonomialOrder) -> Engine {
    Engine::new(RingKind::Weyl(n), order.clone(), true, 2 * n)
}

fn to_vector(e: &Engine, ops: &[WeylOp]) -> Vector {
    let polys: Vec<Poly> = ops.iter().map(|o| o.as_poly().clone()).collect();
    e.vector_from_polys(&polys, 0)
}

fn from_vector(e: &Engine, n: usize, v: &[crate::groebner::engine::Term], offset: usize, rank: usize) -> Vec<WeylOp> {
    e.polys_from_vector(v, offset, rank).into_iter().map(|p| WeylOp::from_normal_ordered(n, p)).collect()
}

impl LeftIdealGB {
    pub fn generators(&self) -> &[WeylOp] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    fn basis(&self, e: &Engine) -> Vec<Vector> {
        self.generators.iter().map(|g| to_vector(e, std::slice::from_ref(g))).collect()
    }

    pub fn normal_form(&self, p: &WeylOp) -> LeftNormalForm {
        let e = engine(self.n, &self.order);
        let basis = self.basis(&e);
        let mut quot = vec![Poly::zero(2 * self.n); basis.len()];
        let r = e.reduce(to_vector(&e, std::slice::from_ref(p)), &basis, true, Some(&mut quot));
        LeftNormalForm {
            remainder: from_vector(&e, self.n, &r, 0, 1).pop().unwrap(),
            cofactors: quot.into_iter().map(|q| WeylOp::from_normal_ordered(self.n, q)).collect(),
        }
    }

    pub fn reduce(&self, p: &WeylOp) -> WeylOp {
        let e = engine(self.n, &self.order);
        let r = e.reduce(to_vector(&e, std::slice::from_ref(p)), &self.basis(&e), true, None);
        from_vector(&e, self.n, &r, 0, 1).pop().unwrap()
    }

    pub fn contains(&self, p: &WeylOp) -> bool {
        self.reduce(p).is_zero()
    }
}

/// Left Groebner basis of `D * gens`. Only orders refining total degree, or
/// weight orders tie-broken by one, are accepted.
pub fn weyl_groebner(gens: &[WeylOp], order: &MonomialOrder) -> Result<LeftIdealGB> {
    let n = gens.first().ok_or_else(|| Error::Precondition("no generators".into()))?.nvars();
    if !order.is_degree_compatible() {
        return Err(Error::InadmissibleOrder(format!("{order:?}")));
    }
    if let MonomialOrder::Weighted { weights, .. } = order {
        if weights.len() != 2 * n {
            return Err(Error::InadmissibleOrder(format!("expected {} weights, got {}", 2 * n, weights.len())));
        }
    }
    let e = engine(n, order);
    let vs = gens.iter().map(|g| to_vector(&e, std::slice::from_ref(g))).collect();
    let generators = e.groebner(vs).iter().map(|v| from_vector(&e, n, v, 0, 1).pop().unwrap()).collect();
    Ok(LeftIdealGB { n, order: order.clone(), generators })
}

/// Left syzygies `v` with `sum v_i * gens_i = 0`.
pub fn weyl_syzygies(gens: &[WeylOp]) -> Vec<Vec<WeylOp>> {
    let rows: Vec<Vec<WeylOp>> = gens.iter().map(|g| vec![g.clone()]).collect();
    weyl_module_syzygies(&rows)
}

/// Left syzygies of vectors in `D^r`: `v` with `sum v_i * gens_i = 0`,
/// returned as a reduced, monic Groebner basis of the syzygy module.
pub fn weyl_module_syzygies(gens: &[Vec<WeylOp>]) -> Vec<Vec<WeylOp>> {
    let n = gens[0][0].nvars();
    let rank = gens[0].len();
    let e = engine(n, &MonomialOrder::GrevLex);
    let rows: Vec<Vec<Poly>> = gens.iter().map(|g| g.iter().map(|o| o.as_poly().clone()).collect()).collect();
    e.syzygies(&rows, rank)
        .into_iter()
        .map(|v| v.into_iter().map(|p| WeylOp::from_normal_ordered(n, p)).collect())
        .collect()
}

/// Left Groebner basis of a submodule of `D^rank` (position over grevlex).
#[derive(Clone, Debug)]
pub struct LeftModuleGB {
    n: usize,
    rank: usize,
    engine: Engine,
    basis: Vec<Vector>,
}

impl LeftModuleGB {
    pub fn new(gens: &[Vec<WeylOp>], n: usize, rank: usize) -> Self {
        let engine = engine(n, &MonomialOrder::GrevLex);
        let vs = gens.iter().map(|g| to_vector(&engine, g)).collect();
        let basis = engine.groebner(vs);
        LeftModuleGB { n, rank, engine, basis }
    }

    pub fn generators(&self) -> Vec<Vec<WeylOp>> {
        self.basis.iter().map(|v| from_vector(&self.engine, self.n, v, 0, self.rank)).collect()
    }

    pub fn reduce(&self, v: &[WeylOp]) -> Vec<WeylOp> {
        let r = self.engine.reduce(to_vector(&self.engine, v), &self.basis, true, None);
        from_vector(&self.engine, self.n, &r, 0, self.rank)
    }

    pub fn contains(&self, v: &[WeylOp]) -> bool {
        self.reduce(v).iter().all(WeylOp::is_zero)
    }
}

/// Dimension of the characteristic variety of `D / D*gens`: a left basis
/// under the derivative-weight order has principal symbols generating
/// `gr(I)`, whose Krull dimension in the `2n` variables `(x, xi)` is
/// returned. `None` when the ideal is the whole ring.
pub fn graded_ideal_dimension(gens: &[WeylOp]) -> Option<usize> {
    let n = gens.first().expect("at least one generator").nvars();
    let nonzero: Vec<WeylOp> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Some(2 * n);
    }
    let gb = weyl_groebner(&nonzero, &MonomialOrder::derivative_weighted(n)).expect("admissible order");
    let symbols: Vec<Poly> = gb.generators().iter().map(|g| g.principal_symbol().expect("nonzero")).collect();
    if symbols.iter().any(|s| s.is_constant()) {
        return None;
    }
    // symbols of a basis under a weight-refining order already form a
    // Groebner basis of gr(I) for the tie-break order
    let leads: Vec<crate::algebra::Monomial> = symbols
        .iter()
        .map(|s| {
            s.terms()
                .map(|(m, _)| m.clone())
                .max_by(|a, b| MonomialOrder::GrevLex.cmp(a.exps(), b.exps()))
                .unwrap()
        })
        .collect();
    let fast = dimension_from_leading(2 * n, &leads);
    debug_assert_eq!(Some(fast), hilbert_dimension(2 * n, &symbols));
    Some(fast)
}
