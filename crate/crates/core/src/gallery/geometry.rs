use serde::Serialize;

use super::{degree_genus, span_rank};
use crate::error::{Error, Result};
use crate::hilbert::{acm_report, hilbert_polynomial, AcmReport, DegreeBound};
use crate::ideals::Ideal;
use crate::par::Exec;
use crate::polyring::{PolyRing, Polynomial, Scalar};

#[derive(Clone, Debug, Serialize)]
pub struct SplitReport {
    /// `(I_C : L)`.
    pub gamma: Ideal,
    /// Saturation of `I_C + (L)`.
    pub c_prime: Ideal,
    pub curve_degree: i64,
    pub gamma_degree: i64,
    pub gamma_genus: i64,
    pub c_prime_degree: i64,
    pub c_prime_genus: i64,
    /// `deg C' + deg Γ = deg C`.
    pub degrees_ok: bool,
    /// `g(C') + g(Γ) ≥ 1 − deg Γ`.
    pub genus_ok: bool,
}

/// Splits a curve along the hyperplane `L = 0` into the residual curve
/// `Γ = (I_C : L)` and the part `C'` inside the hyperplane.
pub fn hyperplane_split(ic: &Ideal, l: &Polynomial) -> Result<SplitReport> {
    if l.ring() != ic.ring() {
        return Err(Error::RingMismatch);
    }
    if !(l.is_homogeneous() && l.degree() == Some(1)) {
        return Err(Error::Hypothesis("L must be a linear form".into()));
    }
    let (curve_degree, _) = degree_genus(ic)?;
    let gamma = ic.colon_poly(l)?;
    if gamma.equals(ic)? {
        return Err(Error::SectionFinite);
    }
    let c_prime = ic.with(l)?.saturate_irrelevant()?;
    let (gamma_degree, gamma_genus) = degree_genus(&gamma)?;
    let (c_prime_degree, c_prime_genus) = degree_genus(&c_prime)?;
    Ok(SplitReport {
        degrees_ok: c_prime_degree + gamma_degree == curve_degree,
        genus_ok: c_prime_genus + gamma_genus >= 1 - gamma_degree,
        gamma,
        c_prime,
        curve_degree,
        gamma_degree,
        gamma_genus,
        c_prime_degree,
        c_prime_genus,
    })
}

/// Projection from `point` to a hyperplane: coordinates are changed so the
/// center becomes `(0 : … : 0 : 1)`, then the last variable is eliminated.
///
/// The new basis is the standard one with the pivot vector replaced by the
/// center, moved last. The pivot is the entry of largest magnitude over ℚ
/// and the first nonzero entry over a prime field.
pub fn project(ideal: &Ideal, point: &[Scalar]) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if point.len() != n {
        return Err(Error::PointLength {
            expected: n,
            found: point.len(),
        });
    }
    let Some(pivot) = pivot_index(point) else {
        return Err(Error::Hypothesis(
            "the zero vector is not a projective point".into(),
        ));
    };
    let mut on_scheme = true;
    for g in ideal.generators() {
        if !g.evaluate(point)?.is_zero() {
            on_scheme = false;
            break;
        }
    }
    if on_scheme {
        return Err(Error::CenterOnScheme);
    }
    // X_i = Y_pos(i) + p_i Y_{n-1} for i != pivot, X_pivot = p_pivot Y_{n-1}
    let y = |i| Polynomial::var(ring, i);
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let last = y(n - 1).scale(&point[i]);
            match i.cmp(&pivot) {
                std::cmp::Ordering::Less => &y(i) + &last,
                std::cmp::Ordering::Greater => &y(i - 1) + &last,
                std::cmp::Ordering::Equal => last,
            }
        })
        .collect();
    let moved = ideal.map(&images, ring);
    let image = moved.eliminate(&[n - 1])?;
    let target = PolyRing::with_order(n - 1, ring.field(), ring.order());
    let mut down: Vec<usize> = (0..n - 1).collect();
    down.push(0);
    let gens = image
        .generators()
        .iter()
        .map(|g| g.map_vars(&target, &down))
        .collect();
    Ideal::new(&target, gens)
}

fn pivot_index(point: &[Scalar]) -> Option<usize> {
    let nonzero = (0..point.len()).filter(|&i| !point[i].is_zero());
    match point.first()?.field() {
        crate::polyring::Field::Rational => {
            // first index attaining the largest magnitude
            nonzero.fold(None, |best: Option<usize>, i| match best {
                Some(b) if point[b].magnitude() >= point[i].magnitude() => Some(b),
                _ => Some(i),
            })
        }
        crate::polyring::Field::Prime(_) => nonzero.into_iter().next(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LinkReport {
    pub complete_intersection: Ideal,
    pub input: Ideal,
    /// `(I_X : I_A)`.
    pub residual: Ideal,
    pub residual_degree: i64,
    pub residual_genus: i64,
    /// `(I_X : residual)`.
    pub double_link: Ideal,
    /// The double link equals the saturation of the input.
    pub double_link_matches: bool,
    /// `deg residual = deg X − deg A`.
    pub degree_additive: bool,
}

/// Links `I_A` through the complete intersection `I_X ⊆ I_A`.
pub fn link(ix: &Ideal, ia: &Ideal) -> Result<LinkReport> {
    if ix.ring() != ia.ring() {
        return Err(Error::RingMismatch);
    }
    if !ia.contains_ideal(ix)? {
        return Err(Error::NotContained);
    }
    let hx = hilbert_polynomial(ix)?;
    let codim = ix.ring().nvars() as i64 - 1 - hx.dim;
    let ngens = ix.minimal_generators()?.len() as i64;
    if ngens != codim {
        return Err(Error::NotCompleteIntersection(format!(
            "{ngens} minimal generators, codimension {codim}"
        )));
    }
    let residual = ix.colon(ia)?;
    let (residual_degree, residual_genus) = degree_genus(&residual)?;
    let (input_degree, _) = degree_genus(ia)?;
    let double_link = ix.colon(&residual)?;
    let double_link_matches = double_link.equals(&ia.saturate_irrelevant()?)?;
    Ok(LinkReport {
        complete_intersection: ix.clone(),
        input: ia.clone(),
        residual,
        residual_degree,
        residual_genus,
        double_link,
        double_link_matches,
        degree_additive: residual_degree == hx.degree - input_degree,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Lemma43Report {
    /// `((Q1,Q2,Q3) : L) ⊆ (L1,L2,L3)`.
    pub holds: bool,
    pub colon: Ideal,
    /// The union `(LL1, LL2, LL3, Q1, Q2, Q3)`.
    pub union: Ideal,
    pub union_report: AcmReport,
}

fn linear(p: &Polynomial) -> bool {
    p.is_homogeneous() && p.degree() == Some(1)
}

fn quadratic(p: &Polynomial) -> bool {
    p.is_homogeneous() && p.degree() == Some(2)
}

pub(crate) fn check_lemma43_hypotheses(
    l: &Polynomial,
    ls: &[Polynomial; 3],
    qs: &[Polynomial; 3],
) -> Result<()> {
    let hyp = |m: &str| Err(Error::Hypothesis(m.to_string()));
    let ring = l.ring();
    if ls.iter().chain(qs).any(|p| p.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    if !linear(l) || !ls.iter().all(linear) {
        return hyp("L, L1, L2, L3 must be linear forms");
    }
    if !qs.iter().all(quadratic) {
        return hyp("Q1, Q2, Q3 must be quadratic forms");
    }
    if span_rank(ls) != 3 {
        return hyp("L1, L2, L3 must be independent");
    }
    if span_rank(qs) != 3 {
        return hyp("Q1, Q2, Q3 must be independent");
    }
    let d = Ideal::new(ring, ls.to_vec())?;
    for q in qs {
        if !d.contains(q)? {
            return hyp("Q1, Q2, Q3 must lie in (L1, L2, L3)");
        }
    }
    let mut section = vec![l.clone()];
    section.extend(qs.iter().cloned());
    let h = hilbert_polynomial(&Ideal::new(ring, section)?)?;
    if !h.is_curve(3, 0) {
        return hyp("(L, Q1, Q2, Q3) must define a curve of degree 3 and genus 0");
    }
    Ok(())
}

/// Tests `((Q1,Q2,Q3) : L) ⊆ (L1,L2,L3)` and reports whether the union
/// `(LL1, LL2, LL3, Q1, Q2, Q3)` is ACM.
pub fn check_lemma43(
    l: &Polynomial,
    ls: &[Polynomial; 3],
    qs: &[Polynomial; 3],
) -> Result<Lemma43Report> {
    check_lemma43_hypotheses(l, ls, qs)?;
    let ring = l.ring();
    let d = Ideal::new(ring, ls.to_vec())?;
    let colon = Ideal::new(ring, qs.to_vec())?.colon_poly(l)?;
    let holds = d.contains_ideal(&colon)?;
    let mut gens: Vec<Polynomial> = ls.iter().map(|li| l * li).collect();
    gens.extend(qs.iter().cloned());
    let union = Ideal::new(ring, gens)?;
    let union_report = acm_report(&union, DegreeBound::default(), Exec::Sequential)?;
    Ok(Lemma43Report {
        holds,
        colon,
        union,
        union_report,
    })
}
