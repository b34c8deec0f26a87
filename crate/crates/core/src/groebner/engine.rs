//! Buchberger's algorithm for left submodules of free modules over either a
//! commutative polynomial ring or a Weyl algebra.
//!
//! A module element is a list of [`Term`]s sorted descending under a
//! position-over-term or term-over-position extension of a monomial order.
//! Weyl elements use exponent vectors `(x_1..x_n, d_1..d_n)` in normal
//! order. Every term order satisfies `lm(m * g) = m + lm(g)` in both rings,
//! so division and S-pairs look the same; only the product of a term with
//! an element differs.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::MonomialOrder;
use crate::algebra::{Monomial, Poly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RingKind {
    Commutative,
    /// Weyl algebra in `n` variables; exponent vectors have length `2n`.
    Weyl(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mono: Vec<u32>,
    pub pos: usize,
    pub coeff: Rational,
}

pub(crate) type Vector = Vec<Term>;

/// Left quotient accumulated during division: coefficient polynomial per
/// basis element.
pub(crate) type Quotients = Vec<Poly>;

#[derive(Clone, Debug)]
pub(crate) struct Engine {
    pub kind: RingKind,
    pub order: MonomialOrder,
    /// Position over term (lower positions are larger) when true.
    pub pot: bool,
    pub nvars: usize,
}

/// Normal-ordered expansion of `x^a d^b * x^c d^d` for one Weyl monomial
/// pair, as `(exponents, integer coefficient)`.
pub(crate) fn weyl_monomial_product(n: usize, a: &[u32], b: &[u32]) -> Vec<(Vec<u32>, BigInt)> {
    // per variable i: d_i^p x_i^q = sum_k C(p,k) q!/(q-k)! x_i^(q-k) d_i^(p-k)
    let mut acc: Vec<(Vec<u32>, BigInt)> = vec![(vec![0; 2 * n], BigInt::one())];
    for i in 0..n {
        let p = a[n + i];
        let q = b[i];
        let kmax = p.min(q);
        let mut next = Vec::with_capacity(acc.len() * (kmax as usize + 1));
        let mut c = BigInt::one();
        for k in 0..=kmax {
            if k > 0 {
                // C(p,k) q!/(q-k)! from the k-1 value
                c = c * BigInt::from(p - k + 1) * BigInt::from(q - k + 1) / BigInt::from(k);
            }
            for (e, coef) in &acc {
                let mut e = e.clone();
                e[i] = a[i] + q - k;
                e[n + i] = p - k + b[n + i];
                next.push((e, coef * &c));
            }
        }
        acc = next;
    }
    acc
}

impl Engine {
    pub fn new(kind: RingKind, order: MonomialOrder, pot: bool, nvars: usize) -> Self {
        Engine { kind, order, pot, nvars }
    }

    pub fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        if self.pot {
            b.pos.cmp(&a.pos).then_with(|| self.order.cmp(&a.mono, &b.mono))
        } else {
            self.order.cmp(&a.mono, &b.mono).then_with(|| b.pos.cmp(&a.pos))
        }
    }

    /// Sorts descending, merges equal monomials, drops zeros.
    pub fn normalize(&self, mut v: Vec<Term>) -> Vector {
        v.sort_by(|a, b| self.cmp(b, a));
        let mut out: Vector = Vec::with_capacity(v.len());
        for t in v {
            if let Some(last) = out.last_mut() {
                if last.pos == t.pos && last.mono == t.mono {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !t.coeff.is_zero() {
                out.push(t);
            }
        }
        out
    }

    /// `a + c * b` for sorted inputs.
    pub fn axpy(&self, a: &[Term], c: &Rational, b: &[Term]) -> Vector {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.cmp(&a[i], &b[j]) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { mono: b[j].mono.clone(), pos: b[j].pos, coeff: &b[j].coeff * c });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].coeff + &b[j].coeff * c;
                    if !s.is_zero() {
                        out.push(Term { mono: a[i].mono.clone(), pos: a[i].pos, coeff: s });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| Term { mono: t.mono.clone(), pos: t.pos, coeff: &t.coeff * c }));
        out
    }

    /// Left product `(c * m) * v`.
    pub fn mul_term(&self, m: &[u32], c: &Rational, v: &[Term]) -> Vector {
        match self.kind {
            RingKind::Commutative => v
                .iter()
                .map(|t| Term {
                    mono: t.mono.iter().zip(m).map(|(a, b)| a + b).collect(),
                    pos: t.pos,
                    coeff: &t.coeff * c,
                })
                .collect(),
            RingKind::Weyl(n) => {
                let mut out = Vec::new();
                for t in v {
                    for (e, k) in weyl_monomial_product(n, m, &t.mono) {
                        out.push(Term { mono: e, pos: t.pos, coeff: &t.coeff * c * Rational::from_integer(k) });
                    }
                }
                self.normalize(out)
            }
        }
    }

    fn divides(a: &Term, b: &Term) -> bool {
        a.pos == b.pos && a.mono.iter().zip(&b.mono).all(|(x, y)| x <= y)
    }

    /// Division by `basis`. With `full`, every term is reduced; otherwise
    /// only the leading term. Quotients are accumulated into `quot` when
    /// given (one polynomial per basis element).
    pub fn reduce(&self, mut p: Vector, basis: &[Vector], full: bool, mut quot: Option<&mut Quotients>) -> Vector {
        let mut start = 0;
        while start < p.len() {
            let t = &p[start];
            let hit = basis.iter().position(|g| Self::divides(&g[0], t));
            let Some(gi) = hit else {
                if !full {
                    break;
                }
                start += 1;
                continue;
            };
            let g = &basis[gi];
            let m: Vec<u32> = t.mono.iter().zip(&g[0].mono).map(|(a, b)| a - b).collect();
            let c = &t.coeff / &g[0].coeff;
            let prod = self.mul_term(&m, &c, g);
            if let Some(q) = quot.as_deref_mut() {
                q[gi].add_term(Monomial(m), c.clone());
            }
            let tail = self.axpy(&p[start..], &-Rational::one(), &prod);
            p.truncate(start);
            p.extend(tail);
        }
        p
    }

    fn monic(v: Vector) -> Vector {
        let inv = v[0].coeff.recip();
        v.into_iter().map(|t| Term { coeff: t.coeff * &inv, ..t }).collect()
    }

    fn single_position(v: &[Term]) -> bool {
        v.iter().all(|t| t.pos == v[0].pos)
    }

    /// Reduced, monic Groebner basis sorted by ascending leading term.
    pub fn groebner(&self, gens: Vec<Vector>) -> Vec<Vector> {
        let mut basis: Vec<Vector> = Vec::new();
        // (sugar degree, j, i) with i < j
        let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();

        let mut sugar: Vec<u32> = Vec::new();
        let add = |h: Vector,
                   s: u32,
                   basis: &mut Vec<Vector>,
                   sugar: &mut Vec<u32>,
                   queue: &mut BTreeSet<(u32, usize, usize)>,
                   pending: &mut HashSet<(usize, usize)>| {
            let h = Self::monic(h);
            let j = basis.len();
            for (i, g) in basis.iter().enumerate() {
                if g[0].pos != h[0].pos {
                    continue;
                }
                let coprime = g[0].mono.iter().zip(&h[0].mono).all(|(a, b)| *a == 0 || *b == 0);
                if coprime
                    && self.kind == RingKind::Commutative
                    && Self::single_position(g)
                    && Self::single_position(&h)
                {
                    continue;
                }
                let lcm: u32 = g[0].mono.iter().zip(&h[0].mono).map(|(a, b)| *a.max(b)).sum();
                let gd: u32 = g[0].mono.iter().sum();
                let hd: u32 = h[0].mono.iter().sum();
                let deg = (sugar[i] + lcm - gd).max(s + lcm - hd);
                queue.insert((deg, j, i));
                pending.insert((i, j));
            }
            basis.push(h);
            sugar.push(s);
        };

        for g in gens {
            if g.is_empty() {
                continue;
            }
            let s = g.iter().map(|t| t.mono.iter().sum::<u32>()).max().unwrap_or(0);
            let h = self.reduce(g, &basis, true, None);
            if !h.is_empty() {
                add(h, s, &mut basis, &mut sugar, &mut queue, &mut pending);
            }
        }

        while let Some(key) = queue.pop_first() {
            let (deg, j, i) = key;
            pending.remove(&(i, j));
            let (gi, gj) = (&basis[i], &basis[j]);
            let lcm: Vec<u32> = gi[0].mono.iter().zip(&gj[0].mono).map(|(a, b)| *a.max(b)).collect();
            let pos = gi[0].pos;
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k][0].pos == pos
                    && basis[k][0].mono.iter().zip(&lcm).all(|(a, b)| a <= b)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let mi: Vec<u32> = lcm.iter().zip(&gi[0].mono).map(|(a, b)| a - b).collect();
            let mj: Vec<u32> = lcm.iter().zip(&gj[0].mono).map(|(a, b)| a - b).collect();
            let si = self.mul_term(&mi, &Rational::one(), gi);
            let sj = self.mul_term(&mj, &Rational::one(), gj);
            let s = self.axpy(&si, &-Rational::one(), &sj);
            let h = self.reduce(s, &basis, true, None);
            if !h.is_empty() {
                add(h, deg, &mut basis, &mut sugar, &mut queue, &mut pending);
            }
        }
        self.interreduce(basis)
    }

    pub fn interreduce(&self, basis: Vec<Vector>) -> Vec<Vector> {
        let mut keep: Vec<Vector> = Vec::new();
        for (k, g) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(l, h)| {
                l != k && Self::divides(&h[0], &g[0]) && (h[0].mono != g[0].mono || l < k)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        keep.sort_by(|a, b| self.cmp(&a[0], &b[0]));
        for k in 0..keep.len() {
            let others: Vec<Vector> =
                keep.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, g)| g.clone()).collect();
            let g = std::mem::take(&mut keep[k]);
            let r = self.reduce(g, &others, true, None);
            keep[k] = Self::monic(r);
        }
        keep
    }

    pub fn vector_from_polys(&self, comps: &[Poly], offset: usize) -> Vector {
        let mut terms = Vec::new();
        for (i, p) in comps.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push(Term { mono: m.exps().to_vec(), pos: offset + i, coeff: c.clone() });
            }
        }
        self.normalize(terms)
    }

    /// Components `offset..offset + rank` as polynomials.
    pub fn polys_from_vector(&self, v: &[Term], offset: usize, rank: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(self.nvars); rank];
        for t in v {
            if t.pos >= offset && t.pos < offset + rank {
                out[t.pos - offset].add_term(Monomial(t.mono.clone()), t.coeff.clone());
            }
        }
        out
    }

    /// Left syzygies of `gens` (each of length `rank`), as a Groebner basis
    /// of the syzygy module under the induced position-over-term order.
    /// Computed by elimination in the augmented module `R^(rank + m)`.
    pub fn syzygies(&self, gens: &[Vec<Poly>], rank: usize) -> Vec<Vec<Poly>> {
        assert!(self.pot, "syzygy elimination needs a position-over-term order");
        let m = gens.len();
        let aug: Vec<Vector> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut v = self.vector_from_polys(g, 0);
                v.push(Term { mono: vec![0; self.nvars], pos: rank + i, coeff: Rational::one() });
                self.normalize(v)
            })
            .collect();
        self.groebner(aug)
            .into_iter()
            .filter(|v| v[0].pos >= rank)
            .map(|v| self.polys_from_vector(&v, rank, m))
            .collect()
    }

    /// Reduced Groebner basis of the submodule generated by `gens`, paired
    /// with cofactors expressing each basis element in the generators.
    pub fn groebner_with_cofactors(&self, gens: &[Vec<Poly>], rank: usize) -> Vec<(Vec<Poly>, Vec<Poly>)> {
        assert!(self.pot, "cofactor tracking needs a position-over-term order");
        let m = gens.len();
        let aug: Vec<Vector> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let mut v = self.vector_from_polys(g, 0);
                v.push(Term { mono: vec![0; self.nvars], pos: rank + i, coeff: Rational::one() });
                self.normalize(v)
            })
            .collect();
        self.groebner(aug)
            .into_iter()
            .filter(|v| v[0].pos < rank)
            .map(|v| (self.polys_from_vector(&v, 0, rank), self.polys_from_vector(&v, rank, m)))
            .collect()
    }
}
