//! Ideals and the ideal calculus: sum, product, intersection, colon,
//! saturation, elimination, equality and minimal generators.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis};
use crate::polyring::{parse_polynomial, MonomialOrder, PolyRing, Polynomial};

/// Step limit for saturation; every saturation met in practice settles in a
/// handful of steps.
const SATURATION_LIMIT: usize = 64;

/// An ideal given by generators, with its reduced Gröbner basis in the
/// ring's order computed on first use.
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb,
        }
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &PolyRing, generators: Vec<Polynomial>) -> Result<Ideal> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::new_unchecked(ring, generators))
    }

    fn new_unchecked(ring: &PolyRing, mut generators: Vec<Polynomial>) -> Ideal {
        generators.retain(|g| !g.is_zero());
        Ideal {
            ring: ring.clone(),
            generators,
            gb: OnceLock::new(),
        }
    }

    pub fn parse(ring: &PolyRing, gens: &[&str]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(s, ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Self::new_unchecked(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        Self::new_unchecked(ring, vec![Polynomial::one(ring)])
    }

    /// The irrelevant ideal `(X0, …, Xn)`.
    pub fn irrelevant(ring: &PolyRing) -> Ideal {
        Self::new_unchecked(
            ring,
            (0..ring.nvars())
                .map(|i| Polynomial::var(ring, i))
                .collect(),
        )
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| {
            buchberger(&self.ring, &self.generators).expect("generators share the ring")
        })
    }

    /// Reduced Gröbner basis for another order; not cached.
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> GroebnerBasis {
        if order == self.ring.order() {
            return self.groebner_basis().clone();
        }
        let ring = self.ring.reordered(order);
        let gens: Vec<_> = self.generators.iter().map(|g| g.reorder(&ring)).collect();
        buchberger(&ring, &gens).expect("same ring")
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.groebner_basis().contains(f)
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality, decided by comparing reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.groebner_basis() == other.groebner_basis())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ok(Self::new_unchecked(&self.ring, gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|f| other.generators.iter().map(move |g| f * g))
            .collect();
        Ok(Self::new_unchecked(&self.ring, gens))
    }

    /// `I + (f)`.
    pub fn with(&self, f: &Polynomial) -> Result<Ideal> {
        self.sum(&Ideal::new(&self.ring, vec![f.clone()])?)
    }

    /// `I ∩ J`: eliminate an auxiliary `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let n = self.ring.nvars();
        let mut names = vec![aux_name(&self.ring)];
        names.extend(self.ring.vars().iter().cloned());
        let big = PolyRing::new(names, self.ring.field(), MonomialOrder::Block { elim: 1 })?;
        let up: Vec<usize> = (1..=n).collect();
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::new();
        for f in &self.generators {
            gens.push(&t * &f.map_vars(&big, &up));
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.map_vars(&big, &up));
        }
        let gb = buchberger(&big, &gens)?;
        let mut down = vec![0usize];
        down.extend(0..n);
        let kept = gb
            .generators()
            .iter()
            .filter(|g| !g.involves(0))
            .map(|g| g.map_vars(&self.ring, &down))
            .collect();
        Ok(Self::new_unchecked(&self.ring, kept))
    }

    /// `(I : (g))` via `(I ∩ (g)) / g`.
    pub fn colon_poly(&self, g: &Polynomial) -> Result<Ideal> {
        if g.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if g.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let principal = Ideal::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .generators
            .iter()
            .map(|f| f.exact_div(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new_unchecked(&self.ring, gens))
    }

    /// `(I : J) = ⋂_g (I : g)` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let c = self.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `(I : J^∞)`, iterating the colon until it stabilizes.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut cur = self.clone();
        for _ in 0..SATURATION_LIMIT {
            let next = cur.colon(other)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
        Err(Error::SaturationDiverged(SATURATION_LIMIT))
    }

    /// Saturation with respect to the irrelevant ideal.
    pub fn saturate_irrelevant(&self) -> Result<Ideal> {
        self.saturate(&Ideal::irrelevant(&self.ring))
    }

    pub fn is_saturated(&self) -> Result<bool> {
        self.saturate_irrelevant()?.equals(self)
    }

    /// `I ∩ k[other variables]`, kept in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        let mut perm: Vec<usize> = vars.to_vec();
        perm.sort_unstable();
        perm.dedup();
        if perm.iter().any(|&v| v >= n) {
            return Err(Error::InvalidRing("variable index out of range".into()));
        }
        let k = perm.len();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        // old index -> new index
        let mut to_new = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            to_new[old] = new;
        }
        let names = perm.iter().map(|&i| self.ring.vars()[i].clone()).collect();
        let big = PolyRing::new(names, self.ring.field(), MonomialOrder::Block { elim: k })?;
        let gens: Vec<_> = self
            .generators
            .iter()
            .map(|g| g.map_vars(&big, &to_new))
            .collect();
        let gb = buchberger(&big, &gens)?;
        let kept = gb
            .generators()
            .iter()
            .filter(|g| (0..k).all(|i| !g.involves(i)))
            .map(|g| g.map_vars(&self.ring, &perm))
            .collect();
        Ok(Self::new_unchecked(&self.ring, kept))
    }

    /// A minimal homogeneous generating set extracted from the generators:
    /// degree-ascending (ties by leading monomial, then input position),
    /// keeping each generator not already in the ideal of those kept.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let order = self.ring.order();
        let mut idx: Vec<usize> = (0..self.generators.len()).collect();
        idx.sort_by(|&a, &b| {
            let (fa, fb) = (&self.generators[a], &self.generators[b]);
            fa.degree()
                .cmp(&fb.degree())
                .then_with(|| {
                    order.compare(
                        fa.leading_monomial().unwrap(),
                        fb.leading_monomial().unwrap(),
                    )
                })
                .then(a.cmp(&b))
        });
        let mut kept: Vec<Polynomial> = Vec::new();
        let mut gb: Option<GroebnerBasis> = None;
        for i in idx {
            let g = &self.generators[i];
            let redundant = match &gb {
                Some(b) => b.contains(g)?,
                None => false,
            };
            if !redundant {
                kept.push(g.clone());
                gb = Some(buchberger(&self.ring, &kept)?);
            }
        }
        Ok(kept)
    }

    /// Applies the ring map `X_i ↦ images[i]`, landing in `target`.
    pub fn map(&self, images: &[Polynomial], target: &PolyRing) -> Ideal {
        let gens = self
            .generators
            .iter()
            .map(|g| g.compose(images, target))
            .collect();
        Self::new_unchecked(target, gens)
    }

    /// Same generators in another ring with identical variables and field.
    pub fn reorder(&self, target: &PolyRing) -> Result<Ideal> {
        if !self.ring.same_space(target) {
            return Err(Error::RingMismatch);
        }
        Ok(Self::new_unchecked(
            target,
            self.generators.iter().map(|g| g.reorder(target)).collect(),
        ))
    }
}

fn aux_name(ring: &PolyRing) -> String {
    let mut name = "T".to_string();
    while ring.var_index(&name).is_some() {
        name.push('T');
    }
    name
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other).unwrap_or(false)
    }
}

/// Serialized as the list of generators.
impl serde::Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.generators)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Field;

    fn ring(n: usize) -> PolyRing {
        PolyRing::standard(n, Field::Rational)
    }

    fn ideal(r: &PolyRing, g: &[&str]) -> Ideal {
        Ideal::parse(r, g).unwrap()
    }

    #[test]
    fn sum_and_product() {
        let r = ring(5);
        let s = ideal(&r, &["X0"]).sum(&ideal(&r, &["X1"])).unwrap();
        assert_eq!(s, ideal(&r, &["X0", "X1"]));
        let p = ideal(&r, &["X0", "X1"])
            .product(&ideal(&r, &["X2", "X3"]))
            .unwrap();
        assert_eq!(p.generators().len(), 4);
        assert_eq!(p, ideal(&r, &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]));
        let m = ideal(&r, &["X0", "X1"]);
        assert_eq!(
            m.product(&m).unwrap(),
            ideal(&r, &["X0^2", "X0*X1", "X1^2"])
        );
    }

    #[test]
    fn intersection() {
        let r = ring(5);
        let i = ideal(&r, &["X0"]).intersect(&ideal(&r, &["X1"])).unwrap();
        assert_eq!(i, ideal(&r, &["X0*X1"]));
        assert_eq!(i.generators().len(), 1);
    }

    #[test]
    fn colons() {
        let r = ring(4);
        let c = ideal(&r, &["X1^2", "X2^2"])
            .colon(&ideal(&r, &["X1", "X2"]))
            .unwrap();
        assert_eq!(c, ideal(&r, &["X1^2", "X1*X2", "X2^2"]));
        let c = ideal(&r, &["X1*X2"]).colon(&ideal(&r, &["X1"])).unwrap();
        assert_eq!(c, ideal(&r, &["X2"]));
        let c = ideal(&r, &["X1^2", "X2^2 + X1*X3"])
            .colon(&ideal(&r, &["X1", "X2"]))
            .unwrap();
        assert_eq!(c, ideal(&r, &["X1^2", "X1*X2", "X2^2 + X1*X3"]));
    }

    #[test]
    fn saturations() {
        let r = ring(2);
        let i = ideal(&r, &["X0^2", "X0*X1"]);
        assert_eq!(i.saturate_irrelevant().unwrap(), ideal(&r, &["X0"]));
        assert!(i.saturate(&i).unwrap().is_unit());
        assert!(!i.is_saturated().unwrap());
        assert!(ideal(&r, &["X0"]).is_saturated().unwrap());
    }

    #[test]
    fn elimination() {
        let r = ring(5);
        let e = ideal(&r, &["X1^2", "X1*X2", "X1*X3", "X2^2", "X2*X3", "X3^2"])
            .eliminate(&[3])
            .unwrap();
        assert_eq!(e, ideal(&r, &["X1^2", "X1*X2", "X2^2"]));
        assert!(e.generators().iter().all(|g| !g.involves(3)));
    }

    #[test]
    fn minimal_generator_counts() {
        let r = ring(5);
        let mut gens = vec!["X1^2", "X1*X2", "X1*X3", "X2^2", "X2*X3", "X3^2"];
        gens.push("X1^2*X4 + X2*X3*X0");
        gens.push("X1^2 + X2^2");
        let i = ideal(&r, &gens);
        assert_eq!(i.minimal_generators().unwrap().len(), 6);
        assert_eq!(
            ideal(&r, &["X0 + 1"]).minimal_generators(),
            Err(Error::NotHomogeneous)
        );
    }

    #[test]
    fn ring_mismatch_errors() {
        let a = ideal(&ring(3), &["X0"]);
        let b = ideal(&ring(4), &["X0"]);
        assert_eq!(a.intersect(&b).unwrap_err(), Error::RingMismatch);
        assert_eq!(a.sum(&b).unwrap_err(), Error::RingMismatch);
        assert_eq!(a.colon(&b).unwrap_err(), Error::RingMismatch);
        assert!(a != b);
    }
}
