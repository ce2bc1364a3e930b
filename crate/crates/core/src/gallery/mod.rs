//! Explicit curves and families: constructors with hypothesis checks, the
//! named fixture catalogue, and the geometric operations built on them
//! (hyperplane sections, projection, linkage, the union criterion).

mod geometry;
mod random;
mod verify;

pub use geometry::{
    check_lemma43, hyperplane_split, link, project, Lemma43Report, LinkReport, SplitReport,
};
pub use random::{
    check_conic_union, check_line_union, instance_rng, random_center, random_linear_form,
    IdentityBatch, RandomInstances,
};
pub use verify::{checklist_ids, verify_paper, VerifyItem, VerifyOptions};

use crate::deform::Family;
use crate::error::{Error, Result};
use crate::hilbert::{hilbert_polynomial, HilbertPolynomial};
use crate::ideals::Ideal;
use crate::linalg::Matrix;
use crate::polyring::{parse_polynomial, Field, Monomial, PolyRing, Polynomial, Scalar};

/// The explicit constructions, in the coordinates they are usually written
/// in. Polynomial parameters live in the ambient ring passed to
/// [`make_curve`].
#[derive(Clone, Debug)]
pub enum CurveSpec {
    /// 2×2 minors of the 2×n Hankel matrix in `P^n`.
    Rn { n: usize },
    /// `(X1, …, X{n-1})²` in `P^n`.
    NfoldLine { n: usize },
    /// Minors of `[[0, X1, …, X{n-1}], [X1, …, X{n-1}, αXn]]`.
    Remark310 { n: usize, alpha: Scalar },
    /// `(X0,X1)(X2,X3) + (Q, Q')` in `P⁴`.
    TypeII { q: Polynomial, q2: Polynomial },
    /// `(X0², X0X1, X1², X0L + X1M, X0L' + X1M', AX0 + BX1 + ML' − M'L)`.
    TypeIII {
        a: Polynomial,
        b: Polynomial,
        l: Polynomial,
        m: Polynomial,
        l2: Polynomial,
        m2: Polynomial,
    },
    /// `(LL1, LL2, LL3, Q1, Q2, Q3)`.
    TypeIV {
        l: Polynomial,
        ls: [Polynomial; 3],
        qs: [Polynomial; 3],
    },
    /// Degree 4, genus 1 curves in `P³` on a triple line plus a line.
    Lemma37 { case: u8, q: Option<Polynomial> },
    /// Degree 4, genus 1 quadruple lines in `P³`.
    Lemma38 { case: u8, q: Option<Polynomial> },
    /// `(X1², X1X2, X2² + αX1X3)` in `P³`.
    Lemma39 { alpha: Scalar },
}

fn hyp(msg: &str) -> Error {
    Error::Hypothesis(msg.to_string())
}

fn x(ring: &PolyRing, i: usize) -> Polynomial {
    Polynomial::var(ring, i)
}

fn parse_all(ring: &PolyRing, gens: &[&str]) -> Vec<Polynomial> {
    gens.iter()
        .map(|s| parse_polynomial(s, ring).expect("fixture polynomial"))
        .collect()
}

/// All 2×2 minors of a 2-row matrix, column pairs in lex order.
pub fn minors(top: &[Polynomial], bottom: &[Polynomial]) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for i in 0..top.len() {
        for j in i + 1..top.len() {
            out.push(&(&top[i] * &bottom[j]) - &(&top[j] * &bottom[i]));
        }
    }
    out
}

/// Rank of the coefficient vectors of `polys`.
pub fn span_rank(polys: &[Polynomial]) -> usize {
    let Some(first) = polys.first() else {
        return 0;
    };
    let mut mons: Vec<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().iter().map(|(m, _)| m.clone()))
        .collect();
    mons.sort_by(|a, b| first.ring().order().compare(a, b));
    mons.dedup();
    let rows = polys
        .iter()
        .map(|p| mons.iter().map(|m| p.coeff(m)).collect())
        .collect();
    Matrix::from_rows(first.ring().field(), mons.len(), rows).rank()
}

fn is_form_of_degree(p: &Polynomial, d: u32) -> bool {
    p.is_homogeneous() && p.degree() == Some(d)
}

/// Linear forms in `X2, X3, X4` only (zero allowed).
fn in_last_three(p: &Polynomial) -> bool {
    p.is_zero() || (is_form_of_degree(p, 1) && !p.involves(0) && !p.involves(1))
}

fn ideal_of(ring: &PolyRing, vars: &[usize]) -> Ideal {
    Ideal::new(ring, vars.iter().map(|&i| x(ring, i)).collect()).expect("same ring")
}

fn check_ring(ring: &PolyRing, nvars: usize, polys: &[&Polynomial]) -> Result<()> {
    if ring.nvars() != nvars {
        return Err(Error::InvalidRing(format!(
            "construction needs {nvars} variables, ring has {}",
            ring.nvars()
        )));
    }
    if polys.iter().any(|p| p.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Builds the ideal of `spec` in `ring`, after checking its hypotheses.
pub fn make_curve(spec: &CurveSpec, ring: &PolyRing) -> Result<Ideal> {
    let gens = match spec {
        CurveSpec::Rn { n } => {
            check_ring(ring, n + 1, &[])?;
            let top: Vec<_> = (0..*n).map(|i| x(ring, i)).collect();
            let bottom: Vec<_> = (1..=*n).map(|i| x(ring, i)).collect();
            minors(&top, &bottom)
        }
        CurveSpec::NfoldLine { n } => {
            check_ring(ring, n + 1, &[])?;
            let mut out = Vec::new();
            for i in 1..*n {
                for j in i..*n {
                    out.push(&x(ring, i) * &x(ring, j));
                }
            }
            out
        }
        CurveSpec::Remark310 { n, alpha } => {
            check_ring(ring, n + 1, &[])?;
            if *n < 2 {
                return Err(hyp("n must be at least 2"));
            }
            let mut top = vec![Polynomial::zero(ring)];
            top.extend((1..*n).map(|i| x(ring, i)));
            let mut bottom: Vec<_> = (1..*n).map(|i| x(ring, i)).collect();
            bottom.push(x(ring, *n).scale(alpha));
            minors(&top, &bottom)
        }
        CurveSpec::TypeII { q, q2 } => {
            check_ring(ring, 5, &[q, q2])?;
            if !is_form_of_degree(q, 2) || !is_form_of_degree(q2, 2) {
                return Err(hyp("Q and Q' must be quadratic forms"));
            }
            let a = ideal_of(ring, &[0, 1]);
            let b = ideal_of(ring, &[2, 3]);
            if !b.contains(q)? {
                return Err(hyp("Q must lie in (X2,X3)"));
            }
            if a.contains(q)? {
                return Err(hyp("Q must not lie in (X0,X1)"));
            }
            if !a.contains(q2)? {
                return Err(hyp("Q' must lie in (X0,X1)"));
            }
            if b.contains(q2)? {
                return Err(hyp("Q' must not lie in (X2,X3)"));
            }
            let mut out = a.product(&b)?.generators().to_vec();
            out.push(q.clone());
            out.push(q2.clone());
            out
        }
        CurveSpec::TypeIII { a, b, l, m, l2, m2 } => {
            check_ring(ring, 5, &[a, b, l, m, l2, m2])?;
            if ![a, b, l, m, l2, m2].iter().all(|p| in_last_three(p)) {
                return Err(hyp("A, B, L, M, L', M' must be linear forms in X2, X3, X4"));
            }
            let det = &(m * l2) - &(m2 * l);
            if det.is_zero() {
                return Err(hyp("ML' - M'L must be nonzero"));
            }
            let (x0, x1) = (x(ring, 0), x(ring, 1));
            vec![
                &x0 * &x0,
                &x0 * &x1,
                &x1 * &x1,
                &(&x0 * l) + &(&x1 * m),
                &(&x0 * l2) + &(&x1 * m2),
                &(&(a * &x0) + &(b * &x1)) + &det,
            ]
        }
        CurveSpec::TypeIV { l, ls, qs } => {
            let refs: Vec<&Polynomial> = std::iter::once(l).chain(ls).chain(qs).collect();
            check_ring(ring, 5, &refs)?;
            geometry::check_lemma43_hypotheses(l, ls, qs)?;
            let mut out: Vec<Polynomial> = ls.iter().map(|li| l * li).collect();
            out.extend(qs.iter().cloned());
            out
        }
        CurveSpec::Lemma37 { case, q } => {
            check_ring(ring, 4, &q.iter().collect::<Vec<_>>())?;
            match (case, q) {
                (1, None) => parse_all(ring, &["X1*X2", "X1^2 + X2*X3"]),
                (2, None) => parse_all(ring, &["X1*X2", "X2*X3", "X1^3"]),
                (3, Some(q)) => {
                    if !q.is_zero() {
                        if !is_form_of_degree(q, 2) {
                            return Err(hyp("Q must be a quadratic form"));
                        }
                        if ideal_of(ring, &[1, 2]).contains(q)? {
                            return Err(hyp("Q must be independent of X1, X2"));
                        }
                    }
                    let mut g = parse_all(ring, &["X1^2", "X1*X2", "X2^2*X3"]);
                    g[2] = &g[2] + &(&x(ring, 1) * q);
                    g
                }
                _ => return Err(hyp("case must be 1 or 2 without Q, or 3 with Q")),
            }
        }
        CurveSpec::Lemma38 { case, q } => {
            check_ring(ring, 4, &q.iter().collect::<Vec<_>>())?;
            match (case, q) {
                (1, None) => parse_all(ring, &["X1^2", "X2^2"]),
                (2, None) => parse_all(ring, &["X1^2", "X2^2 + X1*X3"]),
                (3, Some(q)) => {
                    if !q.is_zero() && !is_form_of_degree(q, 2) {
                        return Err(hyp("Q must be a quadratic form"));
                    }
                    let mut g = parse_all(ring, &["X1^2", "X1*X2", "X2^3"]);
                    g[2] = &g[2] + &(&x(ring, 1) * q);
                    g
                }
                _ => return Err(hyp("case must be 1 or 2 without Q, or 3 with Q")),
            }
        }
        CurveSpec::Lemma39 { alpha } => {
            check_ring(ring, 4, &[])?;
            let mut g = parse_all(ring, &["X1^2", "X1*X2", "X2^2"]);
            g[2] = &g[2] + &(&x(ring, 1) * &x(ring, 3)).scale(alpha);
            g
        }
    };
    let ideal = Ideal::new(ring, gens)?;
    if let CurveSpec::TypeIII { .. } = spec {
        // admissibility beyond ML' - M'L != 0 is checked on the result
        match crate::hilbert::is_acm_curve(&ideal) {
            Ok(r) if r.acm && r.hp == HilbertPolynomial::curve(4, 0) => {}
            Ok(r) => {
                return Err(Error::Hypothesis(format!(
                    "forms give hp = {} (acm: {}), not an ACM quartic of genus 0",
                    r.hp, r.acm
                )))
            }
            Err(Error::NotACurve(d)) => {
                return Err(Error::Hypothesis(format!(
                    "forms give a scheme of dimension {d}"
                )))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(ideal)
}

// ---------------------------------------------------------------------------
// fixtures

/// A family fixture: generators in the ring variables and `t`, the limit
/// it is declared to specialize to, and optionally one more fiber to match.
#[derive(Clone, Debug)]
pub struct FamilyFixture {
    pub family: Family,
    pub limit: Ideal,
    pub fiber_check: Option<(Scalar, Ideal)>,
}

#[derive(Clone, Debug)]
pub enum Fixture {
    Curve(Ideal),
    Family(FamilyFixture),
}

impl Fixture {
    /// The curve, or the declared limit of a family.
    pub fn ideal(&self) -> &Ideal {
        match self {
            Fixture::Curve(i) => i,
            Fixture::Family(f) => &f.limit,
        }
    }
}

/// Stable fixture identifiers, in catalogue order.
pub const FIXTURE_IDS: &[&str] = &[
    "rn3",
    "rn4",
    "l4",
    "rem310:a=0",
    "rem310:a=1",
    "lines2",
    "p3quartic",
    "lemma37:1",
    "lemma37:2",
    "lemma37:3",
    "lemma37:3:q0",
    "lemma38:1",
    "lemma38:2",
    "lemma38:3",
    "lemma38:3:q0",
    "lemma39:a=0",
    "lemma39:a=1",
    "type2",
    "type3",
    "type3:r1",
    "type4",
    "type4:c1",
    "type4:c2",
    "lemma43:witness",
    "family:sec12",
    "family:p22c1",
    "family:p22c2",
    "family:p25r2",
    "family:p25r1",
];

/// Fixtures that are ACM curves of degree 4 and genus 0 in `P⁴`.
pub const ACM_QUARTICS: &[&str] = &[
    "rn4",
    "l4",
    "rem310:a=1",
    "type2",
    "type3",
    "type3:r1",
    "type4",
    "type4:c1",
    "type4:c2",
];

pub fn describe(id: &str) -> &'static str {
    match id.split(':').next().unwrap_or("") {
        "rn3" => "twisted cubic in P3",
        "rn4" => "rational normal quartic in P4",
        "l4" => "4-fold line (X1,X2,X3)^2 in P4",
        "rem310" => "4-fold line from the minors with alpha*X4",
        "lines2" => "two disjoint lines in P3",
        "p3quartic" => "smooth rational quartic in P3",
        "lemma37" => "(4,1) curve: triple line plus a line in P3",
        "lemma38" => "(4,1) quadruple line in P3",
        "lemma39" => "(3,0) triple line in P3",
        "type2" => "two conics meeting in a point",
        "type3" => "double conic",
        "type4" => "twisted cubic in a hyperplane plus a line",
        "lemma43" => "line plus cubic failing the colon condition",
        "family" => match id {
            "family:sec12" => "minors family from the 4-fold line to the rational normal curve",
            "family:p22c1" => "line plus cubic family, line off the hyperplane",
            "family:p22c2" => "line plus cubic family, line inside the hyperplane",
            "family:p25r2" => "double conic to two conics, rank 2",
            "family:p25r1" => "double conic to two conics, rank 1",
            _ => "family",
        },
        _ => "unknown",
    }
}

fn p(n: usize, field: Field) -> PolyRing {
    PolyRing::projective(n, field)
}

fn ideal(ring: &PolyRing, gens: &[&str]) -> Ideal {
    Ideal::new(ring, parse_all(ring, gens)).expect("same ring")
}

fn family(ring: &PolyRing, gens: &[&str]) -> Family {
    Family::parse(ring, gens).expect("fixture family")
}

/// The value after `a=` in ids like `rem310:a=1`.
fn alpha_param(id: &str, ring: &PolyRing) -> Result<Scalar> {
    let raw = id
        .split_once(":a=")
        .map(|(_, v)| v)
        .ok_or_else(|| Error::UnknownFixture(id.to_string()))?;
    let c = parse_polynomial(raw, ring).map_err(|_| Error::UnknownFixture(id.to_string()))?;
    if c.is_zero() {
        Ok(ring.field().zero())
    } else if c.is_unit() {
        Ok(c.leading_coeff().unwrap().clone())
    } else {
        Err(Error::UnknownFixture(id.to_string()))
    }
}

const RN4: [&str; 6] = [
    "X0*X2 - X1^2",
    "X0*X3 - X1*X2",
    "X0*X4 - X1*X3",
    "X1*X3 - X2^2",
    "X1*X4 - X2*X3",
    "X2*X4 - X3^2",
];
const L4: [&str; 6] = ["X1^2", "X1*X2", "X1*X3", "X2^2", "X2*X3", "X3^2"];

/// Looks up a fixture over `field`.
pub fn fixture(id: &str, field: Field) -> Result<Fixture> {
    let p3 = p(3, field);
    let p4 = p(4, field);
    let curve = |spec: CurveSpec, ring: &PolyRing| make_curve(&spec, ring).map(Fixture::Curve);
    let fixed = |ring: &PolyRing, gens: &[&str]| Ok(Fixture::Curve(ideal(ring, gens)));
    let q3 = |s: &str| parse_polynomial(s, &p3).expect("fixture polynomial");
    let q4 = |s: &str| parse_polynomial(s, &p4).expect("fixture polynomial");
    match id {
        "rn3" => curve(CurveSpec::Rn { n: 3 }, &p3),
        "rn4" => curve(CurveSpec::Rn { n: 4 }, &p4),
        "l4" => curve(CurveSpec::NfoldLine { n: 4 }, &p4),
        _ if id.starts_with("rem310:a=") => curve(
            CurveSpec::Remark310 {
                n: 4,
                alpha: alpha_param(id, &p4)?,
            },
            &p4,
        ),
        "lines2" => fixed(&p3, &["X0*X2", "X0*X3", "X1*X2", "X1*X3"]),
        // image of the rational normal quartic from (0:0:1:0:0)
        "p3quartic" => fixed(
            &p3,
            &[
                "X0*X3 - X1*X2",
                "X1^3 - X0^2*X2",
                "X2^3 - X1*X3^2",
                "X0*X2^2 - X1^2*X3",
            ],
        ),
        "lemma37:1" => curve(CurveSpec::Lemma37 { case: 1, q: None }, &p3),
        "lemma37:2" => curve(CurveSpec::Lemma37 { case: 2, q: None }, &p3),
        "lemma37:3" => curve(
            CurveSpec::Lemma37 {
                case: 3,
                q: Some(q3("X0*X3")),
            },
            &p3,
        ),
        "lemma37:3:q0" => curve(
            CurveSpec::Lemma37 {
                case: 3,
                q: Some(Polynomial::zero(&p3)),
            },
            &p3,
        ),
        "lemma38:1" => curve(CurveSpec::Lemma38 { case: 1, q: None }, &p3),
        "lemma38:2" => curve(CurveSpec::Lemma38 { case: 2, q: None }, &p3),
        "lemma38:3" => curve(
            CurveSpec::Lemma38 {
                case: 3,
                q: Some(q3("X0*X3")),
            },
            &p3,
        ),
        "lemma38:3:q0" => curve(
            CurveSpec::Lemma38 {
                case: 3,
                q: Some(Polynomial::zero(&p3)),
            },
            &p3,
        ),
        _ if id.starts_with("lemma39:a=") => curve(
            CurveSpec::Lemma39 {
                alpha: alpha_param(id, &p3)?,
            },
            &p3,
        ),
        "type2" => curve(
            CurveSpec::TypeII {
                q: q4("X2*X4 + X3^2"),
                q2: q4("X0*X4 + X1^2"),
            },
            &p4,
        ),
        "type3" => curve(
            CurveSpec::TypeIII {
                a: q4("X4"),
                b: q4("X2"),
                l: q4("X2"),
                m: q4("X3"),
                l2: q4("X3"),
                m2: q4("X4"),
            },
            &p4,
        ),
        // rank one: M = L' = 0
        "type3:r1" => curve(
            CurveSpec::TypeIII {
                a: q4("X4"),
                b: q4("X2"),
                l: q4("X2"),
                m: Polynomial::zero(&p4),
                l2: Polynomial::zero(&p4),
                m2: q4("X3"),
            },
            &p4,
        ),
        "type4" => curve(
            CurveSpec::TypeIV {
                l: q4("X4"),
                ls: [q4("X1"), q4("X2"), q4("X3")],
                qs: [q4("X0*X2 - X1^2"), q4("X0*X3 - X1*X2"), q4("X1*X3 - X2^2")],
            },
            &p4,
        ),
        "type4:c1" => curve(
            CurveSpec::TypeIV {
                l: q4("X4"),
                ls: [q4("X1"), q4("X2"), q4("X3")],
                qs: [q4("X1^2"), q4("X1*X2"), q4("X2^2 - X1*X3")],
            },
            &p4,
        ),
        // the line X1 = X2 = X4 = 0 lies in the hyperplane X4 = 0; the cubic is
        // the t = 0 member of the minors of [[X0, X1, X2], [X1, X2, t*X3]]
        "type4:c2" => fixed(
            &p4,
            &[
                "X1*X4",
                "X2*X4",
                "X4^2",
                "X0*X2 - X1^2",
                "X0*X4 - X1*X2",
                "X1*X4 - X2^2",
            ],
        ),
        "lemma43:witness" => fixed(
            &p4,
            &[
                "X1^2",
                "X1*X2",
                "X1*X3",
                "X2*X4 + X0*X1",
                "X3*X4",
                "X0*X2 + X3^2",
            ],
        ),
        "family:sec12" => Ok(Fixture::Family(FamilyFixture {
            family: family(
                &p4,
                &[
                    "t*X0*X2 - X1^2",
                    "t*X0*X3 - X1*X2",
                    "t^2*X0*X4 - X1*X3",
                    "X1*X3 - X2^2",
                    "t*X1*X4 - X2*X3",
                    "t*X2*X4 - X3^2",
                ],
            ),
            limit: ideal(&p4, &L4),
            fiber_check: Some((field.one(), ideal(&p4, &RN4))),
        })),
        "family:p22c1" => Ok(Fixture::Family(FamilyFixture {
            family: family(
                &p4,
                &[
                    "X4*X1",
                    "X4*X2",
                    "X4*X3",
                    "t*X0*X2 - X1^2",
                    "t*X0*X3 - X1*X2",
                    "X1*X3 - X2^2",
                ],
            ),
            limit: fixture("type4:c1", field)?.ideal().clone(),
            fiber_check: None,
        })),
        "family:p22c2" => Ok(Fixture::Family(FamilyFixture {
            family: family(
                &p4,
                &[
                    "X4*X1",
                    "X4*X2",
                    "X4^2 + t*X3*X4",
                    "X0*X2 - X1^2",
                    "X0*X4 - X1*X2 + t*X0*X3",
                    "X1*X4 - X2^2 + t*X1*X3",
                ],
            ),
            limit: fixture("type4:c2", field)?.ideal().clone(),
            fiber_check: None,
        })),
        // L = X2, M = X3, L' = X3, M' = X4, A = X4, B = X2
        "family:p25r2" => Ok(Fixture::Family(FamilyFixture {
            family: family(
                &p4,
                &[
                    "X0^2 - t*X0*X3",
                    "X0*X1 + t*X0*X2",
                    "X0*X1 - t*X1*X3",
                    "X1^2 + t*X1*X2",
                    "X4*X0 + X2*X1 + X3*X3 - X4*X2",
                    "X0*X2 + X1*X3",
                    "X0*X3 - t*X3^2 + X1*X4 + t*X2*X4",
                ],
            ),
            limit: fixture("type3", field)?.ideal().clone(),
            fiber_check: None,
        })),
        // L = X2, M' = X3, L'' = X4, A = X4, B = X2
        "family:p25r1" => Ok(Fixture::Family(FamilyFixture {
            family: family(
                &p4,
                &[
                    "X0^2",
                    "X0*X1",
                    "X1^2",
                    "X4*X0 + X2*X1 - X3*X2",
                    "X0*X2",
                    "t*X0*X4 + X1*X3",
                ],
            ),
            limit: fixture("type3:r1", field)?.ideal().clone(),
            fiber_check: None,
        })),
        _ => Err(Error::UnknownFixture(id.to_string())),
    }
}

/// A fixture that must be a single ideal.
pub fn fixture_ideal(id: &str, field: Field) -> Result<Ideal> {
    Ok(fixture(id, field)?.ideal().clone())
}

/// Degree and genus of a curve ideal via its Hilbert polynomial.
pub(crate) fn degree_genus(i: &Ideal) -> Result<(i64, i64)> {
    let h = hilbert_polynomial(i)?;
    if h.dim != 1 {
        return Err(Error::NotACurve(h.dim));
    }
    Ok((h.degree, h.genus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::is_acm_curve;

    #[test]
    fn all_fixtures_build() {
        for id in FIXTURE_IDS {
            assert!(fixture(id, Field::Rational).is_ok(), "{id}");
            assert!(fixture(id, Field::Prime(32003)).is_ok(), "{id}");
            assert_ne!(describe(id), "unknown");
        }
        assert!(matches!(
            fixture("rn5", Field::Rational),
            Err(Error::UnknownFixture(_))
        ));
        assert!(fixture("rem310:a=1/2", Field::Rational).is_ok());
    }

    #[test]
    fn catalogue_examples() {
        let f = Field::Rational;
        let l4 = fixture_ideal("l4", f).unwrap();
        assert_eq!(l4, ideal(&p(4, f), &L4));
        let a0 = fixture_ideal("rem310:a=0", f).unwrap();
        assert_eq!(a0, l4);
        let r = is_acm_curve(&fixture_ideal("lemma39:a=1", f).unwrap()).unwrap();
        assert!(r.acm);
        assert_eq!((r.degree, r.genus), (3, 0));
    }

    #[test]
    fn hypotheses_are_checked() {
        let p4 = p(4, Field::Rational);
        let q = |s: &str| parse_polynomial(s, &p4).unwrap();
        let bad = CurveSpec::TypeII {
            q: q("X0*X2"),
            q2: q("X0*X4 + X1^2"),
        };
        assert_eq!(
            make_curve(&bad, &p4).unwrap_err(),
            Error::Hypothesis("Q must not lie in (X0,X1)".into())
        );
        let bad = CurveSpec::TypeIII {
            a: q("X4"),
            b: q("X2"),
            l: q("X2"),
            m: q("X3"),
            l2: q("2*X2"),
            m2: q("2*X3"),
        };
        assert_eq!(
            make_curve(&bad, &p4).unwrap_err(),
            Error::Hypothesis("ML' - M'L must be nonzero".into())
        );
        let bad = CurveSpec::TypeIII {
            a: q("X0"),
            b: q("X2"),
            l: q("X2"),
            m: q("X3"),
            l2: q("X3"),
            m2: q("X4"),
        };
        assert!(make_curve(&bad, &p4).is_err());
        let p3 = p(3, Field::Rational);
        assert!(make_curve(&CurveSpec::Rn { n: 4 }, &p3).is_err());
    }

    #[test]
    fn random_double_conics_are_acm_quartics() {
        use rand::Rng;
        let p4 = p(4, Field::Prime(32003));
        let mut failures = Vec::new();
        for k in 0..20 {
            let mut rng = instance_rng(99, k);
            let mut form = || {
                let mut c = vec![p4.field().zero(); 2];
                c.extend((0..3).map(|_| p4.field().from_i64(rng.gen_range(-5..=5))));
                Polynomial::linear_form(&p4, &c)
            };
            let spec = CurveSpec::TypeIII {
                a: form(),
                b: form(),
                l: form(),
                m: form(),
                l2: form(),
                m2: form(),
            };
            match make_curve(&spec, &p4) {
                Ok(i) => assert_eq!(i.minimal_generators().unwrap().len(), 6),
                Err(Error::Hypothesis(m)) if m.starts_with("ML'") => {}
                Err(e) => failures.push((k, e)),
            }
        }
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn span_rank_counts() {
        let p4 = p(4, Field::Rational);
        let v = parse_all(&p4, &["X0 + X1", "X0 - X1", "X1"]);
        assert_eq!(span_rank(&v), 2);
    }
}
