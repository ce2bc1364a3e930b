//! Random instances and the property checks run over them. Proptest suites
//! feed seeds in; the acceptance run draws its own seeds.

#![allow(dead_code)]

use acm_core::deform::hilb_tangent_with;
use acm_core::gallery::fixture_ideal;
use acm_core::groebner::{buchberger, s_polynomial};
use acm_core::ideals::Ideal;
use acm_core::par::Exec;
use acm_core::polyring::{Field, PolyRing, Polynomial, Scalar};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{elimination_dim, monomials, rank, Graded};

pub const FP: Field = Field::Prime(32003);

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_scalar<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    match field {
        Field::Rational => loop {
            let v = rng.gen_range(-3i64..=3);
            if v != 0 {
                return field.from_i64(v);
            }
        },
        Field::Prime(_) => loop {
            let s = field.random(rng);
            if !s.is_zero() {
                return s;
            }
        },
    }
}

/// A homogeneous polynomial of degree `d` with at most `terms` terms.
pub fn random_form<R: Rng>(ring: &PolyRing, d: u32, terms: usize, rng: &mut R) -> Polynomial {
    let all = monomials(ring.nvars(), d);
    let picked: Vec<_> = all
        .choose_multiple(rng, terms.min(all.len()))
        .cloned()
        .collect();
    let terms = picked
        .into_iter()
        .map(|m| (m, small_scalar(ring.field(), rng)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// A small homogeneous ideal: 2 or 3 generators of degree 1 to 3.
pub fn random_ideal<R: Rng>(ring: &PolyRing, rng: &mut R) -> Ideal {
    let k = rng.gen_range(2..=3);
    let gens = (0..k)
        .map(|_| {
            let d = rng.gen_range(1..=3);
            let t = rng.gen_range(1..=3);
            random_form(ring, d, t, rng)
        })
        .collect();
    Ideal::new(ring, gens).unwrap()
}

/// Every S-polynomial of the reduced basis reduces to zero.
pub fn spairs_reduce_to_zero(seed: u64) -> bool {
    let mut r = rng(seed);
    let field = if seed.is_multiple_of(4) {
        Field::Rational
    } else {
        FP
    };
    let ring = PolyRing::standard(r.gen_range(3..=4), field);
    let i = random_ideal(&ring, &mut r);
    let gb = i.groebner_basis();
    let g = gb.generators();
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            if !gb
                .normal_form(&s_polynomial(&g[a], &g[b]))
                .unwrap()
                .is_zero()
            {
                return false;
            }
        }
    }
    i.generators().iter().all(|f| gb.contains(f).unwrap())
}

/// Shuffling, rescaling and adding combinations of generators leave the
/// reduced basis unchanged.
pub fn reduced_basis_is_unique(seed: u64) -> bool {
    let mut r = rng(seed);
    let ring = PolyRing::standard(r.gen_range(3..=4), FP);
    let i = random_ideal(&ring, &mut r);
    let mut gens = i.generators().to_vec();
    gens.shuffle(&mut r);
    for g in gens.iter_mut() {
        *g = g.scale(&small_scalar(FP, &mut r));
    }
    // one redundant element of the ideal
    let extra = gens.iter().fold(Polynomial::zero(&ring), |acc, g| {
        let d = g.degree().unwrap();
        let top = gens.iter().filter_map(Polynomial::degree).max().unwrap();
        &acc + &(g * &random_form(&ring, top - d, 2, &mut r))
    });
    gens.push(extra);
    let a = buchberger(&ring, i.generators()).unwrap();
    let b = buchberger(&ring, &gens).unwrap();
    a.generators() == b.generators()
}

/// Commutativity of sum and intersection, `IJ ⊆ I ∩ J ⊆ I ⊆ I + J`,
/// `(I : J) J ⊆ I ⊆ (I : J)`, `I ⊆ I^sat`.
pub fn algebra_laws_hold(seed: u64) -> bool {
    let mut r = rng(seed);
    let ring = PolyRing::standard(3, FP);
    let i = random_ideal(&ring, &mut r);
    let j = random_ideal(&ring, &mut r);
    let meet = i.intersect(&j).unwrap();
    let sum = i.sum(&j).unwrap();
    let prod = i.product(&j).unwrap();
    let colon = i.colon(&j).unwrap();
    let sat = i.saturate_irrelevant().unwrap();
    meet.equals(&j.intersect(&i).unwrap()).unwrap()
        && sum.equals(&j.sum(&i).unwrap()).unwrap()
        && meet.contains_ideal(&prod).unwrap()
        && i.contains_ideal(&meet).unwrap()
        && j.contains_ideal(&meet).unwrap()
        && sum.contains_ideal(&i).unwrap()
        && i.contains_ideal(&colon.product(&j).unwrap()).unwrap()
        && colon.contains_ideal(&i).unwrap()
        && sat.contains_ideal(&i).unwrap()
}

/// The elimination ideal agrees degree by degree with the linear-algebra
/// computation of `I_d ∩ k[kept]_d`, for `d ≤ 4`.
pub fn elimination_matches_oracle(seed: u64) -> bool {
    let mut r = rng(seed);
    let n = 4;
    let ring = PolyRing::standard(n, FP);
    let i = random_ideal(&ring, &mut r);
    let k = r.gen_range(1..=2);
    let mut vars: Vec<usize> = (0..n).collect();
    vars.shuffle(&mut r);
    let (gone, keep) = vars.split_at(k);
    let e = i.eliminate(gone).unwrap();
    if e.generators()
        .iter()
        .any(|g| gone.iter().any(|&v| g.involves(v)))
    {
        return false;
    }
    (0..=4).all(|d| {
        let g = Graded::new(FP, n, d);
        // span of (monomials in the kept variables) · generators
        let mut rows = Vec::new();
        for f in e.generators() {
            let fd = f.degree().unwrap();
            if fd > d {
                continue;
            }
            for m in monomials(n, d - fd) {
                if gone.iter().all(|&v| m.exponents()[v] == 0) {
                    rows.push(g.vector(&f.mul_term(&m, &FP.one())));
                }
            }
        }
        rank(&rows) == elimination_dim(FP, n, i.generators(), keep, d)
    })
}

const TANGENT_FIXTURES: [&str; 5] = ["rn3", "lines2", "lemma37:1", "lemma39:a=1", "lemma38:2"];

/// A random invertible linear substitution.
pub fn random_coordinates<R: Rng>(ring: &PolyRing, rng: &mut R) -> Vec<Polynomial> {
    let n = ring.nvars();
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n)
            .map(|_| (0..n).map(|_| ring.field().random(rng)).collect())
            .collect();
        if rank(&rows) == n {
            return rows
                .iter()
                .map(|c| Polynomial::linear_form(ring, c))
                .collect();
        }
    }
}

/// The Hilbert-scheme tangent dimension does not see a change of
/// coordinates.
pub fn tangent_invariant(seed: u64) -> bool {
    let mut r = rng(seed);
    let id = TANGENT_FIXTURES[(seed % TANGENT_FIXTURES.len() as u64) as usize];
    let i = fixture_ideal(id, FP).unwrap();
    let images = random_coordinates(i.ring(), &mut r);
    let moved = i.map(&images, i.ring());
    let a = hilb_tangent_with(&i, Exec::Sequential).unwrap().tangent_dim;
    let b = hilb_tangent_with(&moved, Exec::Sequential)
        .unwrap()
        .tangent_dim;
    a == b
}
