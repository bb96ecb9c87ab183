//! The walk-matrix and discriminant test for identification by the
//! generalized block Laplacian spectrum.
//!
//! A graph passes when `d_n` of its walk matrix is odd and no odd prime `q`
//! dividing `d_n` has `q^2 | Δ`. Such a graph is isomorphic to every graph it
//! is 2-WL-equivalent to, and hence to every graph sharing its generalized
//! block Laplacian spectrum.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{find_isomorphism, Graph};
use crate::linalg::{discriminant, factorize, FactorBudget};
use crate::walk::{last_factor, WalkKind};
use crate::wl::wl2_equivalent;

/// Largest order accepted by [`criterion_semantics_check`].
pub const MAX_SEMANTICS_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    Certified,
    /// `d_n = 0`.
    RankDeficient,
    /// `d_n` is even and positive.
    InconclusiveEven,
    /// An odd prime `q | d_n` with `q^2 | Δ`. `None` only when `Δ = 0` and no
    /// prime of `d_n` was found within the factoring budget.
    InconclusiveSquare(Option<BigInt>),
    /// Part of `gcd(d_n, Δ)` could not be factored and might hide such a `q`.
    Unknown,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Certified => "Certified",
            Verdict::RankDeficient => "RankDeficient",
            Verdict::InconclusiveEven => "InconclusiveEven",
            Verdict::InconclusiveSquare(_) => "InconclusiveSquare",
            Verdict::Unknown => "Unknown",
        }
    }

    pub fn is_certified(&self) -> bool {
        *self == Verdict::Certified
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::InconclusiveSquare(Some(q)) => write!(f, "InconclusiveSquare({q})"),
            other => f.write_str(other.name()),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

fn decimal<S: Serializer>(x: &BigInt, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_str(&x.to_string())
}

fn decimal_opt<S: Serializer>(x: &Option<BigInt>, serializer: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => serializer.serialize_some(&v.to_string()),
        None => serializer.serialize_none(),
    }
}

/// An odd prime dividing `gcd(d_n, Δ)` and whether its square divides `Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeEvidence {
    #[serde(serialize_with = "decimal")]
    pub q: BigInt,
    pub square_divides_delta: bool,
}

/// Outcome of [`run_criterion`]; big integers serialize as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub n: usize,
    pub truncated: bool,
    #[serde(serialize_with = "decimal")]
    pub d_n: BigInt,
    pub d_n_digits: usize,
    #[serde(serialize_with = "decimal")]
    pub delta: BigInt,
    pub delta_digits: usize,
    #[serde(serialize_with = "decimal")]
    pub gcd_dn_delta: BigInt,
    pub offending_primes: Vec<PrimeEvidence>,
    pub verdict: Verdict,
    /// The prime carried by an `InconclusiveSquare` verdict.
    #[serde(serialize_with = "decimal_opt")]
    pub square_prime: Option<BigInt>,
    /// False when a factorization ran out of budget.
    pub factorization_complete: bool,
}

fn digits(x: &BigInt) -> usize {
    if x.is_zero() {
        1
    } else {
        x.magnitude().to_str_radix(10).len()
    }
}

fn to_unsigned(x: &BigInt) -> BigUint {
    x.magnitude().clone()
}

fn from_unsigned(x: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, x.clone())
}

/// Runs the test on `g` over the full (or truncated) degree partition.
pub fn run_criterion(g: &Graph, truncated: bool, budget: &FactorBudget) -> Result<CriterionReport> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Contract("the criterion needs at least one vertex".into()));
    }
    let kind = if truncated { WalkKind::Truncated } else { WalkKind::Full };
    let d_n = last_factor(g, kind)?;
    let delta = discriminant(&g.adjacency_matrix())?;
    let gcd = d_n.gcd(&delta);
    let mut offending_primes = Vec::new();
    let mut factorization_complete = true;
    let verdict = if d_n.is_zero() {
        Verdict::RankDeficient
    } else if d_n.is_one() {
        Verdict::Certified
    } else if d_n.is_even() {
        Verdict::InconclusiveEven
    } else if gcd.is_one() {
        Verdict::Certified
    } else if delta.is_zero() {
        let f = factorize(&to_unsigned(&d_n), budget);
        factorization_complete = f.complete;
        let q = f.primes().next().map(from_unsigned);
        if let Some(q) = &q {
            offending_primes.push(PrimeEvidence {
                q: q.clone(),
                square_divides_delta: true,
            });
        }
        Verdict::InconclusiveSquare(q)
    } else {
        let f = factorize(&to_unsigned(&gcd), budget);
        factorization_complete = f.complete;
        for q in f.primes().map(from_unsigned) {
            let square_divides_delta = delta.is_multiple_of(&(&q * &q));
            offending_primes.push(PrimeEvidence { q, square_divides_delta });
        }
        match offending_primes.iter().find(|e| e.square_divides_delta) {
            Some(e) => Verdict::InconclusiveSquare(Some(e.q.clone())),
            None if !f.complete => Verdict::Unknown,
            None => Verdict::Certified,
        }
    };
    let square_prime = match &verdict {
        Verdict::InconclusiveSquare(q) => q.clone(),
        _ => None,
    };
    Ok(CriterionReport {
        n,
        truncated,
        d_n_digits: digits(&d_n),
        d_n,
        delta_digits: digits(&delta),
        delta,
        gcd_dn_delta: gcd,
        offending_primes,
        verdict,
        square_prime,
        factorization_complete,
    })
}

/// Test oracle for a certified `g`: if `h` is 2-WL-equivalent to `g` then an
/// explicit isomorphism must exist.
pub fn criterion_semantics_check(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.order().max(h.order());
    if n > MAX_SEMANTICS_ORDER {
        return Err(Error::Unsupported(format!(
            "semantics check needs n <= {MAX_SEMANTICS_ORDER}, got {n}"
        )));
    }
    if !run_criterion(g, false, &FactorBudget::default())?.verdict.is_certified() {
        return Err(Error::Contract("semantics check needs a certified first graph".into()));
    }
    if !wl2_equivalent(g, h) {
        return Ok(true);
    }
    Ok(find_isomorphism(g, h)?.is_some())
}
