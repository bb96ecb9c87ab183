use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{eval_char_poly, pencil_for, reconstruct_q_over, OrthogonalCertificate, Pencil, Variant};
use crate::error::Error;
use crate::graph::Graph;
use crate::linalg::modular::{random_prime, PRIME_WINDOW_LOW};
use crate::walk::WalkKind;

/// Knobs for the randomized parts of [`compare_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompareOptions {
    /// Independent evaluations behind an `EqualProbabilistic` verdict.
    pub trials: usize,
    /// Attempts at exhibiting a separating point once a certificate fails.
    pub separation_tries: usize,
    pub seed: u64,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            trials: 8,
            separation_tries: 64,
            seed: 0x005e_ed0f_5bec,
        }
    }
}

/// Concrete evidence that two pencils have different characteristic
/// polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Orders { g: usize, h: usize },
    DegreeSequences { g: Vec<usize>, h: Vec<usize> },
    /// The two polynomials differ after evaluating `s = point` modulo `modulus`.
    Evaluation { point: Vec<u64>, modulus: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SpectralVerdict {
    EqualCertified { certificate: OrthogonalCertificate },
    /// Every random evaluation agreed; the chance of this happening for
    /// different polynomials is at most `2^log2_error_bound`.
    EqualProbabilistic { trials: usize, log2_error_bound: f64 },
    NotEqual { witness: Witness },
    Incomparable { reason: String },
}

impl SpectralVerdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, SpectralVerdict::EqualCertified { .. } | SpectralVerdict::EqualProbabilistic { .. })
    }

    pub fn is_not_equal(&self) -> bool {
        matches!(self, SpectralVerdict::NotEqual { .. })
    }
}

fn differs_at<R: Rng>(pg: &Pencil, ph: &Pencil, rng: &mut R) -> Option<Witness> {
    let p = random_prime(rng);
    let point: Vec<u64> = (0..pg.arity()).map(|_| rng.random_range(0..p)).collect();
    let s: Vec<BigInt> = point.iter().map(|&x| BigInt::from(x)).collect();
    let a = eval_char_poly(pg, &s, Some(p)).expect("arity and prime are valid");
    let b = eval_char_poly(ph, &s, Some(p)).expect("arity and prime are valid");
    (a != b).then_some(Witness::Evaluation { point, modulus: p })
}

/// Random modular points until the two pencils evaluate differently.
pub fn find_separating_point<R: Rng>(pg: &Pencil, ph: &Pencil, rng: &mut R, tries: usize) -> Option<Witness> {
    (0..tries).find_map(|_| differs_at(pg, ph, rng))
}

/// [`compare_with`] under default options.
pub fn compare(g: &Graph, h: &Graph, variant: Variant) -> SpectralVerdict {
    compare_with(g, h, variant, &CompareOptions::default())
}

/// Decides whether two graphs share the multivariate spectrum of `variant`.
///
/// Structural mismatches come first, then an exact orthogonal certificate
/// when the walk matrix has full rank, then random modular evaluation.
pub fn compare_with(g: &Graph, h: &Graph, variant: Variant, opts: &CompareOptions) -> SpectralVerdict {
    let n = g.order();
    if n != h.order() {
        return SpectralVerdict::NotEqual {
            witness: Witness::Orders { g: n, h: h.order() },
        };
    }
    let (pg, ph) = (pencil_for(g, variant), pencil_for(h, variant));
    let shapes_match = pg.partition.shape() == ph.partition.shape();
    if variant.uses_cells() && !shapes_match {
        return SpectralVerdict::NotEqual {
            witness: Witness::DegreeSequences {
                g: g.degree_sequence(),
                h: h.degree_sequence(),
            },
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    // Q^T D_i Q = D_i does not follow from the certificate identities
    if variant != Variant::Gdls && shapes_match && n > 0 {
        let kind = if variant.is_truncated() { WalkKind::Truncated } else { WalkKind::Full };
        match reconstruct_q_over(g, h, kind) {
            Ok(Some(certificate)) => return SpectralVerdict::EqualCertified { certificate },
            Ok(None) if matches!(variant, Variant::Gbls | Variant::GblsTruncated) => {
                return match find_separating_point(&pg, &ph, &mut rng, opts.separation_tries) {
                    Some(witness) => SpectralVerdict::NotEqual { witness },
                    None => SpectralVerdict::Incomparable {
                        reason: "no orthogonal certificate exists, but no separating point was found".into(),
                    },
                };
            }
            Ok(None) | Err(Error::Unsupported(_)) => {}
            Err(e) => return SpectralVerdict::Incomparable { reason: e.to_string() },
        }
    }
    for _ in 0..opts.trials {
        if let Some(witness) = differs_at(&pg, &ph, &mut rng) {
            return SpectralVerdict::NotEqual { witness };
        }
    }
    // each trial errs with probability at most n / p, p >= 2^60
    let per_trial = (n.max(1) as f64).log2() - (PRIME_WINDOW_LOW as f64).log2();
    SpectralVerdict::EqualProbabilistic {
        trials: opts.trials,
        log2_error_bound: opts.trials as f64 * per_trial,
    }
}
