use crate::divisor::{combinations, LogBasis};
use crate::error::{Error, Result};
use crate::weyl::{weyl_module_syzygies, weyl_syzygies, LeftModuleGB, WeylOp};

/// The logarithmic Spencer complex `D (x) /\^p Der(log f)`, `p = n..0`.
///
/// `differentials[p - 1]` is the matrix of `d_p`: rows indexed by the
/// `p`-subsets of `0..n`, columns by the `(p-1)`-subsets, both in
/// lexicographic order. An element `sum_I P_I e_I` maps to
/// `sum_J (sum_I P_I * M[I][J]) e_J`.
#[derive(Clone, Debug)]
pub struct SpencerComplex {
    pub n: usize,
    pub subsets: Vec<Vec<Vec<usize>>>,
    pub differentials: Vec<Vec<Vec<WeylOp>>>,
}

fn position(list: &[Vec<usize>], key: &[usize]) -> usize {
    list.iter().position(|s| s == key).expect("subset present")
}

/// Builds the complex from the certified basis, bracket terms expanded with
/// the structure constants.
pub fn spencer_complex(basis: &LogBasis) -> Result<SpencerComplex> {
    let n = basis.n();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|p| combinations(n, p)).collect();
    let mut differentials = Vec::with_capacity(n);
    for p in 1..=n {
        let rows = &subsets[p];
        let cols = &subsets[p - 1];
        let mut m = vec![vec![WeylOp::zero(n); cols.len()]; rows.len()];
        for (r, set) in rows.iter().enumerate() {
            for k in 0..p {
                let mut rest = set.clone();
                let i = rest.remove(k);
                let c = position(cols, &rest);
                let term = &basis.fields[i];
                m[r][c] = if k % 2 == 0 { &m[r][c] + term } else { &m[r][c] - term };
            }
            for k in 0..p {
                for l in (k + 1)..p {
                    let (i, j) = (set[k], set[l]);
                    let rest: Vec<usize> = set.iter().copied().filter(|&x| x != i && x != j).collect();
                    // (-1)^(k+l) with one-based positions
                    let outer_neg = (k + l) % 2 == 1;
                    for (t, a) in basis.alpha[i][j].iter().enumerate() {
                        if a.is_zero() || rest.contains(&t) {
                            continue;
                        }
                        let below = rest.iter().filter(|&&x| x < t).count();
                        let mut target = rest.clone();
                        target.insert(below, t);
                        let c = position(cols, &target);
                        let coef = WeylOp::from_coefficient(a);
                        m[r][c] = if outer_neg ^ (below % 2 == 1) { &m[r][c] - &coef } else { &m[r][c] + &coef };
                    }
                }
            }
        }
        differentials.push(m);
    }
    let complex = SpencerComplex { n, subsets, differentials };
    if !complex.d_squared_zero() {
        return Err(Error::Invariant("Spencer differential does not square to zero".into()));
    }
    Ok(complex)
}

fn mat_mul(a: &[Vec<WeylOp>], b: &[Vec<WeylOp>], n: usize) -> Vec<Vec<WeylOp>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).fold(WeylOp::zero(n), |acc, (x, brow)| &acc + &(x * &brow[j])))
                .collect()
        })
        .collect()
}

impl SpencerComplex {
    /// `d_p` as a matrix.
    pub fn differential(&self, p: usize) -> &[Vec<WeylOp>] {
        &self.differentials[p - 1]
    }

    /// `M_p * M_(p-1) = 0` for every `p >= 2`.
    pub fn d_squared_zero(&self) -> bool {
        (2..=self.n).all(|p| {
            mat_mul(self.differential(p), self.differential(p - 1), self.n).iter().flatten().all(WeylOp::is_zero)
        })
    }

    /// Entries of the single row of `d_n`, reindexed so that entry `i` sits
    /// on the basis element omitting `delta_i`.
    pub fn last_map_components(&self) -> Vec<WeylOp> {
        let n = self.n;
        let row = &self.differential(n)[0];
        let cols = &self.subsets[n - 1];
        (0..n)
            .map(|i| {
                let omit: Vec<usize> = (0..n).filter(|&x| x != i).collect();
                row[position(cols, &omit)].clone()
            })
            .collect()
    }
}

fn same_module(a: &[Vec<WeylOp>], b: &[Vec<WeylOp>], n: usize, rank: usize) -> bool {
    let nonzero = |v: &[Vec<WeylOp>]| -> Vec<Vec<WeylOp>> {
        v.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect()
    };
    let (a, b) = (nonzero(a), nonzero(b));
    match (a.is_empty(), b.is_empty()) {
        (true, true) => true,
        (true, false) | (false, true) => false,
        _ => {
            let ga = LeftModuleGB::new(&a, n, rank);
            let gb = LeftModuleGB::new(&b, n, rank);
            b.iter().all(|v| ga.contains(v)) && a.iter().all(|v| gb.contains(v))
        }
    }
}

/// Compares the Spencer differentials with the Weyl syzygies: the rows of
/// `d_2` against the syzygies of `(delta_1..delta_n)`, and for `n = 3` the
/// row of `d_3` against the syzygies of the rows of `d_2`. Only `n <= 3`.
pub fn spencer_vs_syzygies(basis: &LogBasis, complex: &SpencerComplex) -> Result<bool> {
    let n = basis.n();
    if n > 3 {
        return Err(Error::Precondition("syzygy comparison limited to three variables".into()));
    }
    let first = weyl_syzygies(&basis.fields);
    if n == 1 {
        return Ok(first.iter().flatten().all(WeylOp::is_zero));
    }
    let d2 = complex.differential(2);
    if !same_module(d2, &first, n, n) {
        return Ok(false);
    }
    let second = weyl_module_syzygies(d2);
    let expected: Vec<Vec<WeylOp>> = if n == 3 { complex.differential(3).to_vec() } else { Vec::new() };
    Ok(same_module(&expected, &second, n, d2.len()))
}
