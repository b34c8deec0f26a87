//! Property bodies shared by the proptest suites and the acceptance runner.

use freediv::algebra::linalg::kernel_basis;
use freediv::divisor::LogBasis;
use freediv::duality::spencer_complex;
use freediv::groebner::{
    groebner_basis, groebner_basis_with_cofactors, syzygy_module, ModuleGroebnerBasis, MonomialOrder,
};
use freediv::weyl::weyl_syzygies;
use freediv::{Poly, Rational, WeylOp};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{act, change_basis, fixtures, poly_strategy, random_unimodular, same_action, weyl_strategy};

type Outcome = Result<(), TestCaseError>;

pub fn weyl_associativity(a: &WeylOp, b: &WeylOp, c: &WeylOp) -> Outcome {
    let ab_c = &(a * b) * c;
    prop_assert_eq!(&ab_c, &(a * &(b * c)));
    // and the product agrees with composition of actions
    let ab = a * b;
    let n = a.nvars();
    let order = ab.order().unwrap_or(0);
    prop_assert!(same_action(&|g| act(&ab, g), &|g| act(a, &act(b, g)), n, order));
    Ok(())
}

pub fn adjoint_laws(a: &WeylOp, b: &WeylOp) -> Outcome {
    prop_assert_eq!(&a.adjoint().adjoint(), a);
    prop_assert_eq!((a * b).adjoint(), &b.adjoint() * &a.adjoint());
    prop_assert_eq!((a + b).adjoint(), &a.adjoint() + &b.adjoint());
    Ok(())
}

pub fn symbol_multiplicativity(a: &WeylOp, b: &WeylOp) -> Outcome {
    if a.is_zero() || b.is_zero() {
        return Ok(());
    }
    let ab = a * b;
    prop_assert_eq!(ab.principal_symbol().unwrap(), &a.principal_symbol().unwrap() * &b.principal_symbol().unwrap());
    prop_assert_eq!(ab.order(), Some(a.order().unwrap() + b.order().unwrap()));
    Ok(())
}

/// Members built from cofactors reduce to zero; normal forms and basis
/// cofactors re-multiply exactly.
pub fn groebner_soundness(gens: &[Poly], mult: &[Poly], p: &Poly) -> Outcome {
    let gens: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(());
    }
    let n = p.nvars();
    let (gb, cof) = groebner_basis_with_cofactors(&gens, &MonomialOrder::GrevLex);
    for (g, c) in gb.generators().iter().zip(&cof) {
        let s = c.iter().zip(&gens).fold(Poly::zero(n), |acc, (a, b)| &acc + &(a * b));
        prop_assert_eq!(&s, g);
    }
    let member = mult.iter().zip(&gens).fold(Poly::zero(n), |acc, (a, b)| &acc + &(a * b));
    prop_assert!(gb.contains(&member));
    let nf = gb.normal_form(p);
    let back = nf.cofactors.iter().zip(gb.generators()).fold(nf.remainder.clone(), |acc, (a, b)| &acc + &(a * b));
    prop_assert_eq!(&back, p);
    // no term of the remainder is divisible by a leading monomial
    let leads = gb.leading_monomials();
    prop_assert!(nf.remainder.terms().all(|(m, _)| leads.iter().all(|l| !l.divides(m))));
    // linearity of the normal form
    let twice = gb.reduce(&(p + &member));
    prop_assert_eq!(twice, nf.remainder);
    // independent of the input order
    let mut rev = gens.clone();
    rev.reverse();
    let again = groebner_basis(&rev, &MonomialOrder::GrevLex);
    prop_assert_eq!(again.generators(), gb.generators());
    Ok(())
}

/// Monomials of degree at most `d` in `n` variables.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    super::probes(n, d).iter().map(|p| p.terms().next().unwrap().0.exps().to_vec()).collect()
}

/// Syzygies annihilate, and every syzygy with coefficient degree at most 2
/// found by linear algebra lies in the computed module.
pub fn syzygy_soundness(gens: &[Poly]) -> Outcome {
    if gens.iter().any(Poly::is_zero) || gens.is_empty() {
        return Ok(());
    }
    let n = gens[0].nvars();
    let syz = syzygy_module(gens);
    prop_assert!(syz.annihilates(gens));
    let d = 2;
    let monos = monomials(n, d);
    // unknowns: coefficient of monomial u in h_i
    let unknowns: Vec<(usize, &Vec<u32>)> = (0..gens.len()).flat_map(|i| monos.iter().map(move |m| (i, m))).collect();
    let images: Vec<Poly> = unknowns
        .iter()
        .map(|(i, m)| &gens[*i] * &Poly::from_terms(n, [((*m).clone(), Rational::from_integer(1.into()))]))
        .collect();
    let mut rows_keys: Vec<Vec<u32>> = images.iter().flat_map(|p| p.terms().map(|(m, _)| m.exps().to_vec())).collect();
    rows_keys.sort();
    rows_keys.dedup();
    let matrix: Vec<Vec<Rational>> = rows_keys
        .iter()
        .map(|k| images.iter().map(|p| p.coeff(&freediv::Monomial(k.clone()))).collect())
        .collect();
    let kernel = kernel_basis(&matrix, unknowns.len());
    let module = ModuleGroebnerBasis::new(&syz.generators, gens.len(), n);
    for v in kernel {
        let mut h = vec![Poly::zero(n); gens.len()];
        for ((i, m), c) in unknowns.iter().zip(&v) {
            if !c.is_zero() {
                h[*i] = &h[*i] + &Poly::from_terms(n, [((*m).clone(), c.clone())]);
            }
        }
        prop_assert!(module.contains(&h), "syzygy {:?} missing", h);
    }
    Ok(())
}

pub fn weyl_syzygy_annihilation(gens: &[WeylOp]) -> Outcome {
    if gens.iter().any(WeylOp::is_zero) || gens.is_empty() {
        return Ok(());
    }
    let n = gens[0].nvars();
    for v in weyl_syzygies(gens) {
        let s = v.iter().zip(gens).fold(WeylOp::zero(n), |acc, (a, b)| &acc + &(a * b));
        prop_assert!(s.is_zero());
    }
    Ok(())
}

/// Spencer complexes of randomly re-based fixtures square to zero.
pub fn spencer_d2(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fx = fixtures();
    let fixture = &fx[(seed as usize) % fx.len()];
    let base = fixture.basis();
    let n = base.n();
    let u = random_unimodular(&mut rng, n);
    let fields = change_basis(&u, &base.fields);
    let b = LogBasis::certify(&fields, &base.f).map_err(|e| TestCaseError::fail(e.to_string()))?;
    let c = spencer_complex(&b).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert!(c.d_squared_zero());
    Ok(())
}

fn run<S: Strategy>(cases: u32, s: S, body: impl Fn(S::Value) -> Outcome) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&s, body).map_err(|e| e.to_string())
}

/// Every suite with `cases` random cases each.
pub fn run_all(cases: u32) -> Vec<(&'static str, Result<(), String>)> {
    let w = || weyl_strategy(2, 2, 4);
    vec![
        ("Weyl associativity", run(cases, (w(), w(), w()), |(a, b, c)| weyl_associativity(&a, &b, &c))),
        ("adjoint anti-automorphism and involution", run(cases, (w(), w()), |(a, b)| adjoint_laws(&a, &b))),
        ("symbol multiplicativity", run(cases, (w(), w()), |(a, b)| symbol_multiplicativity(&a, &b))),
        (
            "GB membership soundness with cofactors",
            run(
                cases,
                (
                    prop::collection::vec(poly_strategy(2, 3, 3), 1..=3),
                    prop::collection::vec(poly_strategy(2, 2, 2), 3),
                    poly_strategy(2, 4, 5),
                ),
                |(g, m, p)| groebner_soundness(&g, &m, &p),
            ),
        ),
        (
            "syzygy annihilation and completeness",
            run(cases, prop::collection::vec(poly_strategy(2, 2, 3), 1..=3), |g| syzygy_soundness(&g)),
        ),
        (
            "Weyl syzygy annihilation",
            run(cases, prop::collection::vec(weyl_strategy(1, 2, 3), 1..=3), |g| weyl_syzygy_annihilation(&g)),
        ),
        ("Spencer d^2 = 0", run(cases, any::<u64>(), spencer_d2)),
    ]
}
