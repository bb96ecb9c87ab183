//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// `M = U · S · V` with `U`, `V` unimodular and `S` diagonal with
/// `d_1 | d_2 | ... | d_min(rows, cols)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of `s`: non-negative, zeros only in a suffix.
    pub factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.factors.iter().take_while(|d| !d.is_zero()).count()
    }
}

/// Smith decomposition by row/column reduction, always pivoting on the
/// smallest nonzero entry in absolute value, with a divisibility repair pass
/// before each pivot is accepted.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut s = m.clone();
    // invariant: u * s * v == m
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let k = rows.min(cols);
    let mut t = 0;
    while t < k {
        let Some((pi, pj)) = smallest_entry(&s, t, (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)))) else {
            break;
        };
        move_to_pivot(&mut s, &mut u, &mut v, t, pi, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = s.get(i, t).div_floor(s.get(t, t));
                s.add_row_multiple(i, t, &-&q);
                u.add_col_multiple(t, i, &q);
                clean &= s.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = s.get(t, j).div_floor(s.get(t, t));
                s.add_col_multiple(j, t, &-&q);
                v.add_row_multiple(t, j, &q);
                clean &= s.get(t, j).is_zero();
            }
            if !clean {
                let line = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = smallest_entry(&s, t, line).expect("nonzero remainder exists");
                move_to_pivot(&mut s, &mut u, &mut v, t, pi, pj);
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s.get(i, j).is_multiple_of(s.get(t, t)));
            match offender {
                Some((i, _)) => {
                    s.add_row_multiple(t, i, &BigInt::one());
                    u.add_col_multiple(i, t, &-BigInt::one());
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_col(t);
        }
        t += 1;
    }
    let factors = (0..k).map(|i| s.get(i, i).clone()).collect();
    SmithDecomposition { u, s, v, factors }
}

fn smallest_entry(
    s: &IntMatrix,
    _t: usize,
    positions: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    positions
        .filter(|&(i, j)| !s.get(i, j).is_zero())
        .min_by(|&(a, b), &(c, d)| s.get(a, b).abs().cmp(&s.get(c, d).abs()))
}

fn move_to_pivot(s: &mut IntMatrix, u: &mut IntMatrix, v: &mut IntMatrix, t: usize, pi: usize, pj: usize) {
    s.swap_rows(t, pi);
    u.swap_cols(t, pi);
    s.swap_cols(t, pj);
    v.swap_rows(t, pj);
}

/// `d_rows` of a matrix with `rows <= cols`; zero exactly when the rows are
/// linearly dependent.
///
/// Builds a triangular basis of the column lattice one column at a time with
/// extended-gcd row steps. Once the basis has full rank its determinant `D`
/// satisfies `D·Z^n ⊆ lattice`, so later arithmetic is reduced modulo `D`,
/// and the modulus only shrinks. The last factor is the exponent of
/// `Z^n / lattice`, i.e. the level of the inverse basis.
pub fn last_invariant_factor(m: &IntMatrix) -> Result<BigInt> {
    let n = m.rows();
    if n > m.cols() {
        return Err(Error::Shape(format!(
            "last invariant factor needs rows <= cols, got {}x{}",
            n,
            m.cols()
        )));
    }
    let mut lattice = ColumnLattice::new(n);
    for j in 0..m.cols() {
        lattice.insert(m.column(j));
        if lattice.modulus.as_ref().is_some_and(One::is_one) {
            return Ok(BigInt::one());
        }
    }
    Ok(lattice.exponent())
}

/// Lower-triangular basis of a sublattice of `Z^n`: `basis[i]` has zeros above
/// row `i` and a positive entry at row `i`.
struct ColumnLattice {
    n: usize,
    basis: Vec<Option<Vec<BigInt>>>,
    /// `Some(M)` once full rank; the true lattice is `span(basis) + M·Z^n`.
    modulus: Option<BigInt>,
}

impl ColumnLattice {
    fn new(n: usize) -> Self {
        ColumnLattice {
            n,
            basis: vec![None; n],
            modulus: if n == 0 { Some(BigInt::one()) } else { None },
        }
    }

    fn reduce_tail(&self, v: &mut [BigInt], from: usize) {
        if let Some(m) = &self.modulus {
            for x in &mut v[from..] {
                if !x.is_zero() {
                    *x = x.mod_floor(m);
                }
            }
        }
    }

    fn insert(&mut self, mut v: Vec<BigInt>) {
        self.reduce_tail(&mut v, 0);
        for i in 0..self.n {
            if v[i].is_zero() {
                continue;
            }
            let Some(b) = self.basis[i].take() else {
                if v[i].is_negative() {
                    v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    self.reduce_tail(&mut v, i + 1);
                }
                self.basis[i] = Some(v);
                self.refresh_modulus();
                return;
            };
            let ext = b[i].extended_gcd(&v[i]);
            let (g, x, y) = (ext.gcd, ext.x, ext.y);
            let a = &b[i] / &g;
            let c = &v[i] / &g;
            let mut nb: Vec<BigInt> = Vec::with_capacity(self.n);
            let mut nv: Vec<BigInt> = Vec::with_capacity(self.n);
            for k in 0..self.n {
                if k < i {
                    nb.push(BigInt::zero());
                    nv.push(BigInt::zero());
                } else {
                    nb.push(&x * &b[k] + &y * &v[k]);
                    nv.push(&a * &v[k] - &c * &b[k]);
                }
            }
            debug_assert!(nv[i].is_zero());
            if nb[i].is_negative() {
                nb.iter_mut().for_each(|x| *x = -std::mem::take(x));
            }
            self.reduce_tail(&mut nb, i + 1);
            self.reduce_tail(&mut nv, i + 1);
            self.basis[i] = Some(nb);
            v = nv;
        }
        self.refresh_modulus();
    }

    fn refresh_modulus(&mut self) {
        if self.basis.iter().any(Option::is_none) {
            return;
        }
        let det: BigInt = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, b)| b.as_ref().unwrap()[i].clone())
            .product();
        self.modulus = Some(match self.modulus.take() {
            Some(m) => m.gcd(&det),
            None => det,
        });
    }

    /// Exponent of `Z^n / lattice`; zero when the lattice is not full rank.
    fn exponent(mut self) -> BigInt {
        let Some(modulus) = self.modulus.clone() else {
            return BigInt::zero();
        };
        // fold the implicit generators M·e_k back into the explicit basis
        self.modulus = None;
        for k in (0..self.n).rev() {
            let mut e = vec![BigInt::zero(); self.n];
            e[k] = modulus.clone();
            self.insert(e);
        }
        let n = self.n;
        let col = |i: usize| self.basis[i].as_ref().unwrap();
        // forward substitution for the columns of the inverse
        let mut level = BigInt::one();
        for j in 0..n {
            let mut x: Vec<BigRational> = vec![BigRational::zero(); n];
            for k in j..n {
                let mut rhs = if k == j { BigRational::one() } else { BigRational::zero() };
                for (i, xi) in x.iter().enumerate().take(k).skip(j) {
                    let lki = &col(i)[k];
                    if !lki.is_zero() && !xi.is_zero() {
                        rhs -= xi * BigRational::from_integer(lki.clone());
                    }
                }
                x[k] = rhs / BigRational::from_integer(col(k)[k].clone());
            }
            for xi in &x {
                level = level.lcm(xi.denom());
            }
        }
        level
    }
}
