//! Seeded random instances: the two union identities and projection centers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::span_rank;
use crate::error::Result;
use crate::ideals::Ideal;
use crate::par::Exec;
use crate::polyring::{Field, PolyRing, Polynomial, Scalar};

/// Generator for instance `index` of a batch; independent of scheduling.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_linear_form<R: Rng + ?Sized>(ring: &PolyRing, rng: &mut R) -> Polynomial {
    let coeffs: Vec<Scalar> = (0..ring.nvars())
        .map(|_| ring.field().random(rng))
        .collect();
    Polynomial::linear_form(ring, &coeffs)
}

/// `k` linear forms with independent coefficient vectors.
fn independent_forms<R: Rng + ?Sized>(ring: &PolyRing, k: usize, rng: &mut R) -> Vec<Polynomial> {
    loop {
        let forms: Vec<_> = (0..k).map(|_| random_linear_form(ring, rng)).collect();
        if span_rank(&forms) == k {
            return forms;
        }
    }
}

/// A random element of `(gens)` of degree one more than the generators.
fn random_combination<R: Rng + ?Sized>(
    ring: &PolyRing,
    gens: &[Polynomial],
    rng: &mut R,
) -> Polynomial {
    gens.iter().fold(Polynomial::zero(ring), |acc, g| {
        &acc + &(g * &random_linear_form(ring, rng))
    })
}

fn ideal(ring: &PolyRing, gens: Vec<Polynomial>) -> Ideal {
    Ideal::new(ring, gens).expect("same ring")
}

/// One instance of `(L,Q1,Q2,Q3) ∩ (L1,L2,L3) = (LL1,LL2,LL3,Q1,Q2,Q3)` with
/// `L, L1, L2, L3` independent and `Q_i ∈ (L1,L2,L3)`.
pub fn check_line_union<R: Rng + ?Sized>(ring: &PolyRing, rng: &mut R) -> Result<bool> {
    let forms = independent_forms(ring, 4, rng);
    let (l, ls) = (&forms[0], &forms[1..]);
    let qs: Vec<_> = (0..3).map(|_| random_combination(ring, ls, rng)).collect();
    let mut left = vec![l.clone()];
    left.extend(qs.iter().cloned());
    let meet = ideal(ring, left).intersect(&ideal(ring, ls.to_vec()))?;
    let mut right: Vec<_> = ls.iter().map(|li| l * li).collect();
    right.extend(qs);
    meet.equals(&ideal(ring, right))
}

/// One instance of `(L,M,Q) ∩ (L',M',Q') = (L,M)(L',M') + (Q,Q')` with
/// `L, M, L', M'` independent, `Q ∈ (L',M')` and `Q' ∈ (L,M)`.
pub fn check_conic_union<R: Rng + ?Sized>(ring: &PolyRing, rng: &mut R) -> Result<bool> {
    let f = independent_forms(ring, 4, rng);
    let (lm, lm2) = (&f[0..2], &f[2..4]);
    let q = random_combination(ring, lm2, rng);
    let q2 = random_combination(ring, lm, rng);
    let mut a = lm.to_vec();
    a.push(q.clone());
    let mut b = lm2.to_vec();
    b.push(q2.clone());
    let meet = ideal(ring, a).intersect(&ideal(ring, b))?;
    let rhs = ideal(ring, lm.to_vec())
        .product(&ideal(ring, lm2.to_vec()))?
        .sum(&ideal(ring, vec![q, q2]))?;
    meet.equals(&rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityBatch {
    pub instances: usize,
    pub failures: usize,
    pub errors: usize,
}

impl IdentityBatch {
    pub fn passes(&self) -> bool {
        self.failures == 0 && self.errors == 0
    }
}

/// Which identity a batch checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RandomInstances {
    LineUnion,
    ConicUnion,
}

impl RandomInstances {
    /// Runs `count` seeded instances in `P⁴` over `field`.
    pub fn run(self, field: Field, seed: u64, count: usize, exec: Exec) -> IdentityBatch {
        let ring = PolyRing::projective(4, field);
        let results = exec.map_range(count, |i| {
            let mut rng = instance_rng(seed, i as u64);
            match self {
                RandomInstances::LineUnion => check_line_union(&ring, &mut rng),
                RandomInstances::ConicUnion => check_conic_union(&ring, &mut rng),
            }
        });
        IdentityBatch {
            instances: count,
            failures: results.iter().filter(|r| matches!(r, Ok(false))).count(),
            errors: results.iter().filter(|r| r.is_err()).count(),
        }
    }
}

/// A random point off `V(ideal)` at which none of `avoid` vanish.
pub fn random_center<R: Rng + ?Sized>(
    ideal: &Ideal,
    avoid: &[Polynomial],
    rng: &mut R,
) -> Result<Vec<Scalar>> {
    let field = ideal.ring().field();
    loop {
        let p: Vec<Scalar> = (0..ideal.ring().nvars())
            .map(|_| field.random(rng))
            .collect();
        if p.iter().all(Scalar::is_zero) {
            continue;
        }
        let mut off = false;
        for g in ideal.generators() {
            if !g.evaluate(&p)?.is_zero() {
                off = true;
                break;
            }
        }
        let mut clear = true;
        for a in avoid {
            if a.evaluate(&p)?.is_zero() {
                clear = false;
                break;
            }
        }
        if off && clear {
            return Ok(p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold_on_small_batches() {
        let f = Field::Prime(32003);
        for kind in [RandomInstances::LineUnion, RandomInstances::ConicUnion] {
            let b = kind.run(f, 11, 5, Exec::Parallel);
            assert!(b.passes(), "{kind:?}: {b:?}");
            assert_eq!(b, kind.run(f, 11, 5, Exec::Sequential));
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let a: u64 = instance_rng(5, 3).gen();
        let b: u64 = instance_rng(5, 3).gen();
        let c: u64 = instance_rng(5, 4).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
