use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Monomial, PolyRing, Scalar};
use crate::error::{Error, Result};

/// A sparse polynomial: nonzero terms sorted by decreasing monomial in the
/// ring's order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: Scalar) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &PolyRing) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn term(ring: &PolyRing, m: Monomial, c: Scalar) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &PolyRing, exps: &[u16]) -> Self {
        Self::term(ring, Monomial::from_exponents(exps), ring.field().one())
    }

    pub fn var(ring: &PolyRing, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), ring.field().one())
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(ring: &PolyRing, mut terms: Vec<(Monomial, Scalar)>) -> Self {
        let order = ring.order();
        terms.sort_by(|a, b| order.compare(&b.0, &a.0));
        let mut out: Vec<(Monomial, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = &last.1 + &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Terms must already be nonzero and strictly decreasing.
    pub(crate) fn from_sorted_terms(ring: &PolyRing, terms: Vec<(Monomial, Scalar)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// The polynomial without its leading term.
    pub fn tail(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.get(1..).unwrap_or_default().to_vec(),
        }
    }

    /// Linear form `Σ coeffs[i]·X_i`.
    pub fn linear_form(ring: &PolyRing, coeffs: &[Scalar]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(ring.nvars(), i), c.clone()))
            .collect();
        Self::from_terms(ring, terms)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// Whether the polynomial is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Maximum total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Whether variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[i] > 0)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `c·m·self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// `self - c·m·g`, merged in one pass.
    pub fn sub_mul_term(&self, c: &Scalar, m: &Monomial, g: &Polynomial) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut i = 0;
        let mut j = 0;
        let neg_c = -c;
        while i < self.terms.len() || j < g.terms.len() {
            let gm = g.terms.get(j).map(|(t, _)| t.mul(m));
            let ord = match (self.terms.get(i), &gm) {
                (Some((a, _)), Some(b)) => order.compare(a, b),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm.unwrap(), &g.terms[j].1 * &neg_c));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &self.terms[i].1 + &(&g.terms[j].1 * &neg_c);
                    if !s.is_zero() {
                        out.push((gm.unwrap(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.ring.nvars() {
            return Err(Error::PointLength {
                expected: self.ring.nvars(),
                found: point.len(),
            });
        }
        let field = self.ring.field();
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (e, x) in m.exponents().iter().zip(point) {
                for _ in 0..*e {
                    t = &t * x;
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    pub fn derivative(&self, i: usize) -> Polynomial {
        let field = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[i] > 0)
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                let k = e[i];
                e[i] -= 1;
                (Monomial::from_exponents(&e), c * &field.from_i64(k as i64))
            })
            .collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Substitutes `images[i]` for variable `i`; the images live in `target`.
    pub fn compose(&self, images: &[Polynomial], target: &PolyRing) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (e, img) in m.exponents().iter().zip(images) {
                for _ in 0..*e {
                    t = &t * img;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Moves the polynomial to `target`, sending variable `i` to `var_map[i]`.
    pub fn map_vars(&self, target: &PolyRing, var_map: &[usize]) -> Polynomial {
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u16; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Re-sorts the terms for a ring with the same variables but another order.
    pub fn reorder(&self, target: &PolyRing) -> Polynomial {
        debug_assert!(self.ring.same_space(target));
        if self.ring == *target {
            return self.clone();
        }
        Polynomial::from_terms(target, self.terms.clone())
    }

    /// Exact quotient `self / g`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Polynomial> {
        let (lm, lc) = g.leading_term().ok_or(Error::DivisionByZero)?;
        let inv = lc.inv().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(Error::NotDivisible);
            }
            let q = lm.quotient_of(m);
            let qc = c * &inv;
            rem = rem.sub_mul_term(&qc, &q, g);
            quot.push((q, qc));
        }
        Ok(Polynomial::from_terms(&self.ring, quot))
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(self.ring == other.ring, "polynomial ring mismatch");
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let one = Monomial::one(self.ring.nvars());
        self.sub_mul_term(&-&self.ring.field().one(), &one, rhs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let one = Monomial::one(self.ring.nvars());
        self.sub_mul_term(&self.ring.field().one(), &one, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.sub_mul_term(&-c, m, big);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = &self.ring.vars()[i];
                    if e == 1 {
                        name.clone()
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
