use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

/// Effort limits for [`factorize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorBudget {
    /// Trial division covers primes below this bound.
    pub trial_bound: u64,
    /// Pollard rho restarts (fresh polynomial constants) per composite.
    pub rho_rounds: u32,
    /// Iteration cap of a single rho run.
    pub rho_iterations: u64,
}

impl Default for FactorBudget {
    fn default() -> Self {
        FactorBudget {
            trial_bound: 1_000_000,
            rho_rounds: 64,
            rho_iterations: 1 << 18,
        }
    }
}

/// `|d| = ∏ p^e · cofactor`; `complete` iff `cofactor == 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Ascending primes with multiplicities.
    pub factors: Vec<(BigUint, u32)>,
    pub cofactor: BigUint,
    pub complete: bool,
}

impl Factorization {
    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(p, _)| p)
    }
}

const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller–Rabin with the first thirteen prime bases: deterministic below
/// `3.3 · 10^24`, probabilistic beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return super::modular::is_prime_u64(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Factors `d` by trial division, then Miller–Rabin and Pollard rho (Brent)
/// within `budget`. Whatever is left unsplit lands in `cofactor`.
///
/// `d = 0` has no factorization and is returned as an incomplete cofactor.
pub fn factorize(d: &BigUint, budget: &FactorBudget) -> Factorization {
    let mut factors: Vec<(BigUint, u32)> = Vec::new();
    if d.is_zero() {
        return Factorization {
            factors,
            cofactor: BigUint::zero(),
            complete: false,
        };
    }
    let mut rest = d.clone();
    let mut p: u64 = 2;
    while p < budget.trial_bound {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            e += 1;
        }
        if e > 0 {
            factors.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut leftover = BigUint::one();
    let mut stack = vec![rest];
    let mut found: Vec<BigUint> = Vec::new();
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            found.push(m);
            continue;
        }
        match split(&m, budget) {
            Some(f) => {
                stack.push(&m / &f);
                stack.push(f);
            }
            None => leftover *= m,
        }
    }
    found.sort();
    for q in found {
        match factors.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => factors.push((q, 1)),
        }
    }
    factors.sort();
    let complete = leftover.is_one();
    Factorization {
        factors,
        cofactor: leftover,
        complete,
    }
}

/// A nontrivial divisor of the composite `m`, if rho finds one in budget.
fn split(m: &BigUint, budget: &FactorBudget) -> Option<BigUint> {
    if m.is_even() {
        return Some(BigUint::from(2u32));
    }
    for round in 0..budget.rho_rounds {
        let c = BigUint::from(round + 1);
        if let Some(f) = brent(m, &c, budget.rho_iterations) {
            return Some(f);
        }
    }
    None
}

fn brent(m: &BigUint, c: &BigUint, max_iter: u64) -> Option<BigUint> {
    let f = |x: &BigUint| (x * x + c) % m;
    let mut y = BigUint::from(2u32);
    let mut x;
    let mut ys;
    let mut q = BigUint::one();
    let mut r: u64 = 1;
    let mut iterations: u64 = 0;
    const BATCH: u64 = 64;
    loop {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r {
            ys = y.clone();
            let steps = BATCH.min(r - k);
            for _ in 0..steps {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = q * diff % m;
            }
            iterations += steps;
            let g = q.gcd(m);
            if !g.is_one() {
                if &g != m {
                    return Some(g);
                }
                // batch overshot: replay one step at a time
                loop {
                    ys = f(&ys);
                    let diff = if x > ys { &x - &ys } else { &ys - &x };
                    let g = diff.gcd(m);
                    if !g.is_one() {
                        return if &g != m { Some(g) } else { None };
                    }
                }
            }
            k += steps;
        }
        if iterations >= max_iter {
            return None;
        }
        r *= 2;
    }
}
