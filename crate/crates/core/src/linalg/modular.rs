//! Word-sized arithmetic modulo primes below `2^62`.

use rand::Rng;

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse of a nonzero `a` modulo the prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Lower end of the evaluation prime window `[2^60, 2^61)`.
pub const PRIME_WINDOW_LOW: u64 = 1 << 60;

/// A uniformly drawn prime in `[2^60, 2^61)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.random_range(PRIME_WINDOW_LOW..2 * PRIME_WINDOW_LOW) | 1;
        if is_prime_u64(candidate) {
            return candidate;
        }
    }
}

/// Characteristic polynomial `det(tI - M)` modulo the prime `p`, ascending
/// coefficients. `m` is row-major `n x n` with entries already reduced.
///
/// Reduces to upper Hessenberg form by similarity, then expands along the
/// subdiagonal.
pub fn char_poly_mod(m: &[u64], n: usize, p: u64) -> Vec<u64> {
    assert_eq!(m.len(), n * n);
    let mut h = m.to_vec();
    let at = |i: usize, j: usize| i * n + j;
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| h[at(i, j)] != 0) else {
            continue;
        };
        if piv != j + 1 {
            for c in 0..n {
                h.swap(at(piv, c), at(j + 1, c));
            }
            for r in 0..n {
                h.swap(at(r, piv), at(r, j + 1));
            }
        }
        let inv = inv_mod(h[at(j + 1, j)], p);
        for k in j + 2..n {
            if h[at(k, j)] == 0 {
                continue;
            }
            let u = mul_mod(h[at(k, j)], inv, p);
            // row_k -= u row_{j+1}, then col_{j+1} += u col_k
            for c in 0..n {
                let v = mul_mod(u, h[at(j + 1, c)], p);
                h[at(k, c)] = sub_mod(h[at(k, c)], v, p);
            }
            for r in 0..n {
                let v = mul_mod(u, h[at(r, k)], p);
                h[at(r, j + 1)] = add_mod(h[at(r, j + 1)], v, p);
            }
        }
    }
    // polys[k] = char poly of the leading k x k block
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // (t - h_kk) * polys[k]
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = add_mod(next[d + 1], c, p);
            next[d] = sub_mod(next[d], mul_mod(h[at(k, k)], c, p), p);
        }
        let mut prod = 1u64;
        for i in (0..k).rev() {
            prod = mul_mod(prod, h[at(i + 1, i)], p);
            if prod == 0 {
                break;
            }
            let f = mul_mod(prod, h[at(i, k)], p);
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub_mod(next[d], mul_mod(f, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{char_poly, IntMatrix};
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn primes() {
        assert!(is_prime_u64(2));
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64((1 << 61) - 1));
        assert!(!is_prime_u64(3_215_031_751));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = random_prime(&mut rng);
        assert!((PRIME_WINDOW_LOW..2 * PRIME_WINDOW_LOW).contains(&p));
        assert_eq!(mul_mod(inv_mod(12345, p), 12345, p), 1);
    }

    #[test]
    fn matches_exact_char_poly() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in 0..=9 {
            for _ in 0..10 {
                let p = random_prime(&mut rng);
                let vals: Vec<i64> = (0..n * n).map(|_| rng.random_range(-20..=20)).collect();
                let exact = char_poly(&IntMatrix::from_i64(n, n, &vals)).unwrap();
                let pb = BigInt::from(p);
                let reduced: Vec<u64> = vals.iter().map(|&v| BigInt::from(v).mod_floor(&pb).to_u64().unwrap()).collect();
                let got = char_poly_mod(&reduced, n, p);
                let want: Vec<u64> = (0..=n).map(|k| exact.coeff(k).mod_floor(&pb).to_u64().unwrap()).collect();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn sparse_matrices_need_row_swaps() {
        let p = (1 << 61) - 1;
        // zeros on the subdiagonal force the pivot search
        let m = [0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0];
        let exact = char_poly(&IntMatrix::from_i64(4, 4, &m)).unwrap();
        let got = char_poly_mod(&m.map(|v: i64| v as u64), 4, p);
        let want: Vec<u64> = (0..=4).map(|k| exact.coeff(k).mod_floor(&BigInt::from(p)).to_u64().unwrap()).collect();
        assert_eq!(got, want);
    }
}
