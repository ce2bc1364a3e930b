//! Hilbert functions and polynomials of graded quotients `S/I`, degree and
//! genus extraction, and the ACM test for curves.

use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::par::Exec;
use crate::polyring::Monomial;

pub const DEFAULT_DEGREE_BOUND: u32 = 8;
pub const MAX_DEGREE_BOUND: u32 = 16;
/// Minimum number of consecutive degrees on which `hf` and `hp` must agree.
pub const TAIL_WINDOW: usize = 4;

/// How far `hf` is tabulated: start at `start`, raise up to `max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    pub start: u32,
    pub max: u32,
}

impl Default for DegreeBound {
    fn default() -> Self {
        DegreeBound {
            start: DEFAULT_DEGREE_BOUND,
            max: MAX_DEGREE_BOUND,
        }
    }
}

impl DegreeBound {
    /// A hard cap: no automatic raising.
    pub fn fixed(d: u32) -> Self {
        DegreeBound { start: d, max: d }
    }
}

/// Polynomial in `m` with rational coefficients, `coeffs[k]` on `m^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coeffs: Vec<Rational64>,
}

impl HilbertPolynomial {
    pub fn new(mut coeffs: Vec<Rational64>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HilbertPolynomial { coeffs }
    }

    /// `d·m + 1 − g`.
    pub fn curve(degree: i64, genus: i64) -> Self {
        Self::new(vec![Rational64::from(1 - genus), Rational64::from(degree)])
    }

    pub fn coeffs(&self) -> &[Rational64] {
        &self.coeffs
    }

    /// Degree as a polynomial; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn eval(&self, m: i64) -> Rational64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational64::zero(), |acc, c| acc * m + c)
    }

    /// Integer value at `m` (Hilbert polynomials are integer valued).
    pub fn eval_int(&self, m: i64) -> i64 {
        self.eval(m).to_integer()
    }

    /// Interpolates the values `ys` at `x0, x0+1, …` (Newton forward form).
    pub fn interpolate(x0: i64, ys: &[i64]) -> Self {
        let mut diffs: Vec<Rational64> = ys.iter().map(|&y| Rational64::from(y)).collect();
        let mut acc = vec![Rational64::zero()];
        // basis = C(m - x0, j) as a coefficient vector
        let mut basis = vec![Rational64::one()];
        for j in 0..ys.len() {
            let d = diffs[0];
            add_scaled(&mut acc, &basis, d);
            for i in 0..diffs.len() - 1 {
                diffs[i] = diffs[i + 1] - diffs[i];
            }
            diffs.pop();
            // basis *= (m - x0 - j) / (j + 1)
            let shift = Rational64::from(-(x0 + j as i64));
            let den = Rational64::from(j as i64 + 1);
            let mut next = vec![Rational64::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c / den;
                next[k] += c * shift / den;
            }
            basis = next;
        }
        Self::new(acc)
    }
}

fn add_scaled(acc: &mut Vec<Rational64>, v: &[Rational64], s: Rational64) {
    if acc.len() < v.len() {
        acc.resize(v.len(), Rational64::zero());
    }
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b * s;
    }
}

fn fmt_coeff(c: &Rational64) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for HilbertPolynomial {
    /// `4*m + 1`, `2*m + 2`, `1/2*m^2 + 3/2*m + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = fmt_coeff(&c.abs());
            let body = match k {
                0 => mag,
                1 => format!("{mag}*m"),
                _ => format!("{mag}*m^{k}"),
            };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
                f.write_str(&body)?;
                first = false;
            } else {
                write!(f, " {} {body}", if c.is_negative() { "-" } else { "+" })?;
            }
        }
        Ok(())
    }
}

impl Serialize for HilbertPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// `hf[m] = dim_k (S/I)_m` for `m = 0..=bound`.
    pub hf: Vec<i64>,
    pub hp: HilbertPolynomial,
    /// Leading coefficient times `dim!`.
    pub degree: i64,
    /// Arithmetic genus `(-1)^dim (hp(0) - 1)`; `1 - hp(0)` for curves.
    pub genus: i64,
    /// Dimension of the projective scheme; `-1` when empty.
    pub dim: i64,
    pub bound: u32,
}

/// Number of degree-`m` monomials in `nvars` variables outside the monomial
/// ideal generated by `lms`.
pub fn count_standard(lms: &[Monomial], nvars: usize, m: u32) -> i64 {
    Monomial::all_of_degree(nvars, m)
        .iter()
        .filter(|x| !lms.iter().any(|l| l.divides(x)))
        .count() as i64
}

/// `dim_k (S/I)_m`, counting standard monomials of the reduced Gröbner basis.
pub fn hilbert_function(ideal: &Ideal, m: u32) -> Result<i64> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let lms: Vec<Monomial> = ideal
        .groebner_basis()
        .leading_monomials()
        .cloned()
        .collect();
    Ok(count_standard(&lms, ideal.ring().nvars(), m))
}

/// `hf(0..=d)`.
pub fn hilbert_table(ideal: &Ideal, d: u32, exec: Exec) -> Result<Vec<i64>> {
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let lms: Vec<Monomial> = ideal
        .groebner_basis()
        .leading_monomials()
        .cloned()
        .collect();
    let n = ideal.ring().nvars();
    Ok(exec.map_range(d as usize + 1, |m| count_standard(&lms, n, m as u32)))
}

pub fn hilbert_polynomial(ideal: &Ideal) -> Result<HilbertData> {
    hilbert_data(ideal, DegreeBound::default(), Exec::default())
}

/// Tabulates `hf` up to the bound and fits `hp` on the tail, raising the
/// bound while no polynomial of degree `< nvars` matches a window of
/// `TAIL_WINDOW` consecutive values.
pub fn hilbert_data(ideal: &Ideal, bound: DegreeBound, exec: Exec) -> Result<HilbertData> {
    let n = ideal.ring().nvars();
    let mut d = bound.start;
    loop {
        let hf = hilbert_table(ideal, d, exec)?;
        if let Some(hp) = fit_tail(&hf, n) {
            return Ok(build(hf, hp, d));
        }
        if d >= bound.max {
            return Err(Error::TailNotStabilized(d));
        }
        d = (d + 4).min(bound.max);
    }
}

fn fit_tail(hf: &[i64], nvars: usize) -> Option<HilbertPolynomial> {
    let len = hf.len();
    for k in 0..nvars.max(1) {
        let window = TAIL_WINDOW.max(k + 2);
        if window > len {
            return None;
        }
        let start = len - (k + 1);
        let hp = HilbertPolynomial::interpolate(start as i64, &hf[start..]);
        if (len - window..len).all(|m| hp.eval(m as i64) == Rational64::from(hf[m])) {
            return Some(hp);
        }
    }
    None
}

fn build(hf: Vec<i64>, hp: HilbertPolynomial, bound: u32) -> HilbertData {
    let dim = hp.degree();
    let (degree, genus) = if dim < 0 {
        (0, 0)
    } else {
        let fact: i64 = (1..=dim).product();
        let lead = hp.coeffs().last().copied().unwrap() * fact;
        let p0 = hp.eval_int(0);
        let sign = if dim % 2 == 0 { 1 } else { -1 };
        (lead.to_integer(), sign * (p0 - 1))
    };
    HilbertData {
        hf,
        hp,
        degree,
        genus,
        dim,
        bound,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcmReport {
    pub hf: Vec<i64>,
    pub hp: HilbertPolynomial,
    pub degree: i64,
    pub genus: i64,
    pub saturated: bool,
    pub acm: bool,
    /// `hp(m) - hf(m)` for `m = 0..=bound`.
    pub deficiency: Vec<i64>,
}

impl AcmReport {
    pub fn total_deficiency(&self) -> i64 {
        self.deficiency.iter().sum()
    }

    /// Degrees with nonzero deficiency.
    pub fn deficient_degrees(&self) -> Vec<usize> {
        (0..self.deficiency.len())
            .filter(|&m| self.deficiency[m] != 0)
            .collect()
    }
}

pub fn is_acm_curve(ideal: &Ideal) -> Result<AcmReport> {
    acm_report(ideal, DegreeBound::default(), Exec::default())
}

/// ACM test: `I` saturated and `hf(m) = hp(m)` for all `0 ≤ m ≤ bound`.
pub fn acm_report(ideal: &Ideal, bound: DegreeBound, exec: Exec) -> Result<AcmReport> {
    let data = hilbert_data(ideal, bound, exec)?;
    if data.dim != 1 {
        return Err(Error::NotACurve(data.dim));
    }
    let saturated = ideal.is_saturated()?;
    let deficiency: Vec<i64> = data
        .hf
        .iter()
        .enumerate()
        .map(|(m, &h)| data.hp.eval_int(m as i64) - h)
        .collect();
    let acm = saturated && deficiency.iter().all(|&x| x == 0);
    Ok(AcmReport {
        hf: data.hf,
        hp: data.hp,
        degree: data.degree,
        genus: data.genus,
        saturated,
        acm,
        deficiency,
    })
}

impl HilbertData {
    pub fn is_curve(&self, degree: i64, genus: i64) -> bool {
        self.dim == 1 && self.degree == degree && self.genus == genus
    }

    pub fn hp_value(&self, m: i64) -> i64 {
        self.hp.eval(m).to_i64().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Field, PolyRing};

    fn ideal(n: usize, g: &[&str]) -> Ideal {
        Ideal::parse(&PolyRing::standard(n, Field::Rational), g).unwrap()
    }

    fn rn4() -> Ideal {
        ideal(
            5,
            &[
                "X0*X2 - X1^2",
                "X0*X3 - X1*X2",
                "X0*X4 - X1*X3",
                "X1*X3 - X2^2",
                "X1*X4 - X2*X3",
                "X2*X4 - X3^2",
            ],
        )
    }

    #[test]
    fn interpolation_and_display() {
        let p = HilbertPolynomial::interpolate(3, &[13, 17, 21]);
        assert_eq!(p, HilbertPolynomial::curve(4, 0));
        assert_eq!(p.to_string(), "4*m + 1");
        let q = HilbertPolynomial::interpolate(0, &[1, 3, 6, 10]);
        assert_eq!(q.to_string(), "1/2*m^2 + 3/2*m + 1");
        assert_eq!(HilbertPolynomial::curve(2, 3).to_string(), "2*m - 2");
        assert_eq!(HilbertPolynomial::new(vec![]).to_string(), "0");
    }

    #[test]
    fn function_values() {
        assert_eq!(hilbert_function(&ideal(5, &[]), 2).unwrap(), 15);
        assert_eq!(hilbert_function(&rn4(), 2).unwrap(), 9);
        let l4 = ideal(5, &["X1^2", "X1*X2", "X1*X3", "X2^2", "X2*X3", "X3^2"]);
        let t = hilbert_table(&l4, 6, Exec::Sequential).unwrap();
        assert_eq!(t, vec![1, 5, 9, 13, 17, 21, 25]);
    }

    #[test]
    fn polynomial_examples() {
        let cubic = ideal(4, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]);
        let h = hilbert_polynomial(&cubic).unwrap();
        assert_eq!(h.hp, HilbertPolynomial::curve(3, 0));
        assert!(h.is_curve(3, 0));
        let h = hilbert_polynomial(&ideal(4, &["X1^2", "X2^2"])).unwrap();
        assert!(h.is_curve(4, 1));
        assert_eq!(h.hp.to_string(), "4*m");
        let lines = ideal(4, &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]);
        let h = hilbert_polynomial(&lines).unwrap();
        assert!(h.is_curve(2, -1));
        let plane = hilbert_polynomial(&ideal(4, &["X0"])).unwrap();
        assert_eq!(plane.dim, 2);
        assert_eq!(plane.degree, 1);
        assert_eq!(plane.genus, 0);
    }

    #[test]
    fn acm_examples() {
        let l4 = ideal(5, &["X1^2", "X1*X2", "X1*X3", "X2^2", "X2*X3", "X3^2"]);
        assert!(is_acm_curve(&l4).unwrap().acm);
        let r = is_acm_curve(&ideal(4, &["X1^2", "X1*X2", "X2^2 + X1*X3"])).unwrap();
        assert!(r.acm);
        assert_eq!((r.degree, r.genus), (3, 0));
        let lines = ideal(4, &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]);
        let r = is_acm_curve(&lines).unwrap();
        assert!(!r.acm && r.saturated);
        assert_eq!(r.deficient_degrees(), vec![0]);
        assert_eq!(r.total_deficiency(), 1);
        assert_eq!(is_acm_curve(&ideal(4, &["X0"])), Err(Error::NotACurve(2)));
    }

    #[test]
    fn fixed_bound_too_small() {
        let r = hilbert_data(&rn4(), DegreeBound::fixed(2), Exec::Sequential);
        assert_eq!(r, Err(Error::TailNotStabilized(2)));
    }
}
