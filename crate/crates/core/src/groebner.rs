//! Normal forms and Buchberger's algorithm producing reduced Gröbner bases.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::polyring::{Monomial, PolyRing, Polynomial};

/// A reduced Gröbner basis: monic, interreduced, sorted by increasing
/// leading monomial. Unique for a given ideal and monomial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    basis: Vec<Polynomial>,
}

/// Result of dividing a polynomial by a Gröbner basis:
/// `f = Σ quotients[i]·basis[i] + remainder`.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Whether the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|g| g.leading_monomial().unwrap())
    }

    /// Whether `m` lies outside the leading-term ideal.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading_monomials().any(|lm| lm.divides(m))
    }

    fn check_ring(&self, f: &Polynomial) -> Result<()> {
        if *f.ring() != self.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_ring(f)?;
        Ok(reduce(f, &self.basis))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Division with quotients, using the same divisor rule as
    /// [`normal_form`](Self::normal_form).
    pub fn division(&self, f: &Polynomial) -> Result<Division> {
        self.check_ring(f)?;
        let mut quotients = vec![Polynomial::zero(&self.ring); self.basis.len()];
        let mut p = f.clone();
        let mut rem = Vec::new();
        while let Some((m, c)) = p.leading_term().cloned() {
            match smallest_divisor(&m, &self.basis) {
                Some(k) => {
                    let g = &self.basis[k];
                    let q = g.leading_monomial().unwrap().quotient_of(&m);
                    let qc = c.div(g.leading_coeff().unwrap()).unwrap();
                    p = p.sub_mul_term(&qc, &q, g);
                    quotients[k] = &quotients[k] + &Polynomial::term(&self.ring, q, qc);
                }
                None => {
                    rem.push((m, c));
                    p = p.tail();
                }
            }
        }
        Ok(Division {
            quotients,
            remainder: Polynomial::from_sorted_terms(&self.ring, rem),
        })
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let b = &self.basis;
        (0..b.len())
            .all(|i| ((i + 1)..b.len()).all(|j| reduce(&s_polynomial(&b[i], &b[j]), b).is_zero()))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.basis.iter().all(Polynomial::is_homogeneous)
    }
}

fn smallest_divisor(m: &Monomial, basis: &[Polynomial]) -> Option<usize> {
    let order = basis.first()?.ring().order();
    let mut best: Option<usize> = None;
    for (k, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        if lm.divides(m) {
            best = match best {
                Some(b)
                    if order.compare(basis[b].leading_monomial().unwrap(), lm)
                        != Ordering::Greater =>
                {
                    Some(b)
                }
                _ => Some(k),
            };
        }
    }
    best
}

/// Full reduction of `f` by `basis` (any nonzero polynomials). Among the
/// elements whose leading monomial divides the current term, the one with
/// the smallest leading monomial is used.
pub(crate) fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut p = f.clone();
    // irreducible terms move to `rem`; p keeps the unprocessed part
    let mut rem = Vec::new();
    loop {
        let Some((m, c)) = p.leading_term().cloned() else {
            break;
        };
        match smallest_divisor(&m, basis) {
            Some(k) => {
                let g = &basis[k];
                let q = g.leading_monomial().unwrap().quotient_of(&m);
                let qc = c.div(g.leading_coeff().unwrap()).unwrap();
                p = p.sub_mul_term(&qc, &q, g);
            }
            None => {
                rem.push((m, c));
                p = p.tail();
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l), &cf.inv().unwrap());
    a.sub_mul_term(&cg.inv().unwrap(), &mg.quotient_of(&l), g)
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`'s order.
///
/// Pairs are processed by the normal strategy (smallest lcm first, degree
/// before order); the coprime-leading-term criterion and the chain
/// criterion discard pairs.
pub fn buchberger(ring: &PolyRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    let order = ring.order();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    let add =
        |basis: &mut Vec<Polynomial>, pending: &mut HashSet<(usize, usize)>, h: Polynomial| {
            let k = basis.len();
            basis.push(h.monic());
            for i in 0..k {
                pending.insert((i, k));
            }
        };

    for g in gens {
        let h = reduce(g, &basis);
        if !h.is_zero() {
            if h.is_unit() {
                return Ok(unit_basis(ring));
            }
            add(&mut basis, &mut pending, h);
        }
    }

    while let Some(&(i, j)) = pending.iter().min_by(|a, b| {
        let la = lcm_of(&basis, a);
        let lb = lcm_of(&basis, b);
        la.degree()
            .cmp(&lb.degree())
            .then_with(|| order.compare(&la, &lb))
            .then_with(|| a.cmp(b))
    }) {
        pending.remove(&(i, j));
        let li = basis[i].leading_monomial().unwrap();
        let lj = basis[j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&l)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        let h = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !h.is_zero() {
            if h.is_unit() {
                return Ok(unit_basis(ring));
            }
            add(&mut basis, &mut pending, h);
        }
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        basis: interreduce(basis),
    })
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn lcm_of(basis: &[Polynomial], &(i, j): &(usize, usize)) -> Monomial {
    basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap())
}

fn unit_basis(ring: &PolyRing) -> GroebnerBasis {
    GroebnerBasis {
        ring: ring.clone(),
        basis: vec![Polynomial::one(ring)],
    }
}

fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let Some(first) = basis.first() else {
        return basis;
    };
    let order = first.ring().order();
    basis.sort_by(|a, b| {
        order.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal
            .iter()
            .any(|h| h.leading_monomial().unwrap().divides(lm))
        {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let g = &minimal[k];
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, h)| h.clone())
            .collect();
        let lead = Polynomial::from_sorted_terms(g.ring(), vec![g.leading_term().unwrap().clone()]);
        let tail = reduce(&g.tail(), &others);
        out.push((&lead + &tail).monic());
    }
    out
}
