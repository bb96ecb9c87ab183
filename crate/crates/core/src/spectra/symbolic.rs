use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Pencil;
use crate::error::{Error, Result};
use crate::linalg::IntPolynomial;

pub const MAX_SYMBOLIC_ORDER: usize = 8;
pub const MAX_SYMBOLIC_BLOCKS: usize = 5;

/// Polynomial in `s_0, ..., s_{k-1}, t`; exponent vectors have length `k + 1`
/// with the exponent of `t` last.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: usize, c: BigInt) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    /// `c · x_var`.
    pub fn variable(vars: usize, var: usize, c: BigInt) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            let mut e = vec![0; vars];
            e[var] = 1;
            p.terms.insert(e, c);
        }
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Substitutes the `s` variables, leaving a polynomial in `t`.
    pub fn eval_s(&self, s: &[BigInt]) -> IntPolynomial {
        assert_eq!(s.len() + 1, self.vars);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in &self.terms {
            let (t_exp, s_exp) = e.split_last().expect("at least the t variable");
            let mut value = c.clone();
            for (x, &k) in s.iter().zip(s_exp) {
                value *= num_traits::pow(x.clone(), k as usize);
            }
            let k = *t_exp as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += value;
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending powers of t, then descending s-exponents
        let mut ordered: Vec<(&Vec<u32>, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| (b.last(), b).cmp(&(a.last(), a)));
        for (idx, (e, c)) in ordered.into_iter().enumerate() {
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let name = if i + 1 == self.vars { "t".to_string() } else { format!("s{i}") };
                    if k == 1 { name } else { format!("{name}^{k}") }
                })
                .collect();
            let a = c.abs();
            if monomial.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{a}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Full expansion of `det(tI - W(s))` by Laplace expansion along rows,
/// memoized on the set of remaining columns.
pub fn symbolic_char_poly(pencil: &Pencil) -> Result<MultiPoly> {
    let n = pencil.order();
    if n > MAX_SYMBOLIC_ORDER || pencil.blocks.len() > MAX_SYMBOLIC_BLOCKS {
        return Err(Error::Unsupported(format!(
            "symbolic expansion needs n <= {MAX_SYMBOLIC_ORDER} and at most {MAX_SYMBOLIC_BLOCKS} blocks, got n = {n} with {} blocks",
            pencil.blocks.len()
        )));
    }
    let vars = pencil.arity() + 1;
    let cell = pencil.partition.cell_of();
    let entry = |u: usize, v: usize| -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        for k in 0..pencil.arity() {
            if pencil.term_entry(k, u, v, &cell) {
                p = p.add(&MultiPoly::variable(vars, k, -BigInt::one()));
            }
        }
        if u == v {
            p = p.add(&MultiPoly::variable(vars, vars - 1, BigInt::one()));
        }
        p
    };
    let matrix: Vec<Vec<MultiPoly>> = (0..n).map(|u| (0..n).map(|v| entry(u, v)).collect()).collect();
    let mut memo: HashMap<u32, MultiPoly> = HashMap::new();
    Ok(minor(&matrix, 0, (1u32 << n) - 1, vars, &mut memo))
}

fn minor(m: &[Vec<MultiPoly>], row: usize, cols: u32, vars: usize, memo: &mut HashMap<u32, MultiPoly>) -> MultiPoly {
    if cols == 0 {
        return MultiPoly::constant(vars, BigInt::one());
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut total = MultiPoly::zero(vars);
    let mut sign_positive = true;
    for c in 0..m.len() {
        if cols >> c & 1 == 0 {
            continue;
        }
        let e = &m[row][c];
        if !e.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << c), vars, memo);
            let term = e.mul(&sub);
            total = total.add(&if sign_positive { term } else { term.neg() });
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, total.clone());
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, Graph};
    use crate::spectra::{eval_char_poly, pencil_for, Variant};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn complete_graph_on_two_vertices() {
        let p = symbolic_char_poly(&pencil_for(&families::complete(2), Variant::Gbls)).unwrap();
        // t^2 - 2 s1 t - s0^2 - 2 s0 s1
        let mut want = MultiPoly::zero(3);
        want.add_term(vec![0, 0, 2], BigInt::one());
        want.add_term(vec![0, 1, 1], BigInt::from(-2));
        want.add_term(vec![2, 0, 0], BigInt::from(-1));
        want.add_term(vec![1, 1, 0], BigInt::from(-2));
        assert_eq!(p, want);
        assert_eq!(p.to_string(), "t^2 - 2*s1*t - s0^2 - 2*s0*s1");
    }

    #[test]
    fn empty_graph() {
        let p = symbolic_char_poly(&pencil_for(&Graph::empty(4), Variant::Spectrum)).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.coefficient(&[0, 4]), BigInt::one());
    }

    #[test]
    fn guard() {
        assert!(symbolic_char_poly(&pencil_for(&Graph::empty(9), Variant::Spectrum)).is_err());
        // three degree cells give nine blocks
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 2), (4, 5)]).unwrap();
        assert_eq!(pencil_for(&g, Variant::Gbls).blocks.len(), 9);
        assert!(matches!(symbolic_char_poly(&pencil_for(&g, Variant::Gbls)), Err(Error::Unsupported(_))));
    }

    #[test]
    fn matches_numeric_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..40 {
            let n = rng.random_range(1..=6);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            for variant in Variant::ALL {
                let pen = pencil_for(&g, variant);
                if pen.blocks.len() > MAX_SYMBOLIC_BLOCKS {
                    continue;
                }
                let sym = symbolic_char_poly(&pen).unwrap();
                let s: Vec<BigInt> = (0..pen.arity()).map(|_| BigInt::from(rng.random_range(-5..=5))).collect();
                assert_eq!(sym.eval_s(&s), eval_char_poly(&pen, &s, None).unwrap());
            }
        }
    }
}
