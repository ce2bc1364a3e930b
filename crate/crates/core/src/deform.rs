//! Syzygies, the Hilbert-scheme tangent space `Hom(I/I², S/I)_0`, Jacobian
//! tangent spaces at points, and flat-family checks by sampling.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{hilbert_data, DegreeBound, HilbertPolynomial};
use crate::ideals::Ideal;
use crate::linalg::Matrix;
use crate::par::Exec;
use crate::polyring::{parse_polynomial, Monomial, MonomialOrder, PolyRing, Polynomial, Scalar};

// ---------------------------------------------------------------------------
// module Gröbner bases (position over term, component 0 highest)

type ModVec = Vec<Polynomial>;

fn lead(v: &[Polynomial]) -> Option<(usize, &Monomial, &Scalar)> {
    v.iter()
        .enumerate()
        .find_map(|(k, p)| p.leading_term().map(|(m, c)| (k, m, c)))
}

fn is_zero_vec(v: &[Polynomial]) -> bool {
    v.iter().all(Polynomial::is_zero)
}

/// `v - c·m·w`, componentwise.
fn sub_mul(v: &[Polynomial], c: &Scalar, m: &Monomial, w: &[Polynomial]) -> ModVec {
    v.iter()
        .zip(w)
        .map(|(a, b)| a.sub_mul_term(c, m, b))
        .collect()
}

/// Top-reduces `v` until its leading term is not divisible by a basis lead.
fn top_reduce(mut v: ModVec, basis: &[ModVec], order: MonomialOrder) -> ModVec {
    loop {
        let Some((k, m, c)) = lead(&v) else {
            return v;
        };
        let mut best: Option<(&ModVec, &Monomial, &Scalar)> = None;
        for b in basis {
            let (kb, mb, cb) = lead(b).unwrap();
            if kb == k
                && mb.divides(m)
                && best.is_none_or(|(_, bm, _)| order.compare(mb, bm) == Ordering::Less)
            {
                best = Some((b, mb, cb));
            }
        }
        let Some((b, mb, cb)) = best else {
            return v;
        };
        let q = mb.quotient_of(m);
        let qc = c.div(cb).unwrap();
        v = sub_mul(&v, &qc, &q, b);
    }
}

fn shifted_degree(k: usize, m: &Monomial, shifts: &[u32]) -> u32 {
    m.degree() + shifts[k]
}

/// Gröbner basis of the submodule generated by `gens`. `shifts[k]` is the
/// degree of the `k`-th basis vector, used for pair selection.
fn module_groebner(gens: Vec<ModVec>, shifts: &[u32], order: MonomialOrder) -> Vec<ModVec> {
    let mut basis: Vec<ModVec> = Vec::new();
    let mut pending: Vec<(usize, usize, u32, Monomial)> = Vec::new();
    let add =
        |basis: &mut Vec<ModVec>, pending: &mut Vec<(usize, usize, u32, Monomial)>, h: ModVec| {
            let (kh, mh, _) = lead(&h).unwrap();
            let (kh, mh) = (kh, mh.clone());
            // drop pairs whose lcm the new lead divides strictly inside the chain
            pending.retain(|(i, j, _, l)| {
                let (ki, mi, _) = lead(&basis[*i]).unwrap();
                let (_, mj, _) = lead(&basis[*j]).unwrap();
                !(ki == kh && mh.divides(l) && mi.lcm(&mh) != *l && mj.lcm(&mh) != *l)
            });
            let n = basis.len();
            for (i, b) in basis.iter().enumerate() {
                let (kb, mb, _) = lead(b).unwrap();
                if kb == kh {
                    let l = mb.lcm(&mh);
                    pending.push((i, n, shifted_degree(kh, &l, shifts), l));
                }
            }
            basis.push(h);
        };
    for g in gens {
        let h = top_reduce(g, &basis, order);
        if !is_zero_vec(&h) {
            add(&mut basis, &mut pending, h);
        }
    }
    while !pending.is_empty() {
        let best = (0..pending.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pending[a], &pending[b]);
                pa.2.cmp(&pb.2)
                    .then_with(|| order.compare(&pa.3, &pb.3))
                    .then_with(|| (pa.0, pa.1).cmp(&(pb.0, pb.1)))
            })
            .unwrap();
        let (i, j, _, l) = pending.swap_remove(best);
        let (_, mi, ci) = lead(&basis[i]).unwrap();
        let (_, mj, cj) = lead(&basis[j]).unwrap();
        let zero: ModVec = basis[i]
            .iter()
            .map(|p| Polynomial::zero(p.ring()))
            .collect();
        let a = sub_mul(&zero, &-&ci.inv().unwrap(), &mi.quotient_of(&l), &basis[i]);
        let s = sub_mul(&a, &cj.inv().unwrap(), &mj.quotient_of(&l), &basis[j]);
        let h = top_reduce(s, &basis, order);
        if !is_zero_vec(&h) {
            add(&mut basis, &mut pending, h);
        }
    }
    basis
}

// ---------------------------------------------------------------------------
// syzygies

/// Rows `(a_1, …, a_r)` with `Σ a_i f_i = 0`, generating the first syzygy
/// module of the generator tuple.
#[derive(Clone, Debug)]
pub struct SyzygyMatrix {
    pub generators: Vec<Polynomial>,
    pub rows: Vec<Vec<Polynomial>>,
    /// Degree of each row: `deg a_i + deg f_i` for any nonzero entry.
    pub degrees: Vec<u32>,
}

impl SyzygyMatrix {
    /// Number of rows in each degree.
    pub fn degree_counts(&self) -> Vec<(u32, usize)> {
        let mut counts: Vec<(u32, usize)> = Vec::new();
        for &d in &self.degrees {
            match counts.iter_mut().find(|(e, _)| *e == d) {
                Some(c) => c.1 += 1,
                None => counts.push((d, 1)),
            }
        }
        counts.sort_unstable();
        counts
    }

    pub fn annihilates(&self) -> bool {
        self.rows
            .iter()
            .all(|row| annihilates(&self.generators, row))
    }
}

fn annihilates(gens: &[Polynomial], row: &[Polynomial]) -> bool {
    let ring = gens[0].ring();
    row.iter()
        .zip(gens)
        .fold(Polynomial::zero(ring), |acc, (a, f)| &acc + &(a * f))
        .is_zero()
}

fn row_degree(row: &[Polynomial], shifts: &[u32]) -> u32 {
    row.iter()
        .zip(shifts)
        .filter_map(|(a, s)| a.degree().map(|d| d + s))
        .max()
        .unwrap_or(0)
}

/// First syzygies of `gens` via a module Gröbner basis of the vectors
/// `(f_i, e_i)`; the basis elements with vanishing first component generate
/// the syzygy module. The rows are then trimmed greedily in increasing
/// degree to a non-redundant generating set.
pub fn syzygies(gens: &[Polynomial]) -> Result<SyzygyMatrix> {
    let Some(first) = gens.first() else {
        return Ok(SyzygyMatrix {
            generators: Vec::new(),
            rows: Vec::new(),
            degrees: Vec::new(),
        });
    };
    let ring = first.ring().clone();
    if gens.iter().any(|g| g.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    if gens.iter().any(Polynomial::is_zero) {
        return Err(Error::Hypothesis("syzygies of a zero generator".into()));
    }
    let order = ring.order();
    let r = gens.len();
    let fdeg: Vec<u32> = gens.iter().map(|g| g.degree().unwrap()).collect();
    let mut shifts = vec![0u32];
    shifts.extend(&fdeg);
    let elems: Vec<ModVec> = (0..r)
        .map(|i| {
            let mut v = vec![gens[i].clone()];
            v.extend((0..r).map(|j| {
                if i == j {
                    Polynomial::one(&ring)
                } else {
                    Polynomial::zero(&ring)
                }
            }));
            v
        })
        .collect();
    let gb = module_groebner(elems, &shifts, order);
    let mut rows: Vec<Vec<Polynomial>> = gb
        .into_iter()
        .filter(|v| v[0].is_zero())
        .map(|mut v| {
            v.remove(0);
            v
        })
        .collect();
    rows.sort_by_key(|row| row_degree(row, &fdeg));

    // greedy trim: keep a row only if it is not in the span of those kept
    let mut kept: Vec<Vec<Polynomial>> = Vec::new();
    let mut span: Vec<ModVec> = Vec::new();
    for row in rows {
        if !span.is_empty() && is_zero_vec(&top_reduce(row.clone(), &span, order)) {
            continue;
        }
        kept.push(row);
        span = module_groebner(kept.clone(), &fdeg, order);
    }
    for row in &kept {
        assert!(annihilates(gens, row), "syzygy row does not annihilate");
    }
    let degrees = kept.iter().map(|row| row_degree(row, &fdeg)).collect();
    Ok(SyzygyMatrix {
        generators: gens.to_vec(),
        rows: kept,
        degrees,
    })
}

// ---------------------------------------------------------------------------
// Hom(I/I², S/I)_0

/// Degree-0 homomorphisms `I → S/I`, solved as a linear system over the
/// field. Unknowns are, for each minimal generator `f_i`, the coefficients
/// of its image on the standard monomials of degree `deg f_i`; each syzygy
/// row `a` imposes `NF(Σ a_i g_i) = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct HomSolution {
    pub tangent_dim: usize,
    pub generators: usize,
    pub syzygy_rows: usize,
    pub unknowns: usize,
    pub equations: usize,
    #[serde(skip)]
    pub minimal_generators: Vec<Polynomial>,
    /// Standard monomials per generator, in unknown order.
    #[serde(skip)]
    pub layout: Vec<Vec<Monomial>>,
    /// Basis of the solution space, one row per solution.
    #[serde(skip)]
    pub solutions: Matrix,
}

impl HomSolution {
    /// The images `(g_1, …, g_r)` encoded by a solution row.
    pub fn images(&self, solution: &[Scalar]) -> Vec<Polynomial> {
        let ring = self.minimal_generators[0].ring();
        let mut k = 0;
        self.layout
            .iter()
            .map(|mons| {
                let terms = mons
                    .iter()
                    .map(|m| {
                        let t = (m.clone(), solution[k].clone());
                        k += 1;
                        t
                    })
                    .collect();
                Polynomial::from_terms(ring, terms)
            })
            .collect()
    }
}

pub fn hilb_tangent_dim(ideal: &Ideal) -> Result<HomSolution> {
    hilb_tangent_with(ideal, Exec::default())
}

pub fn hilb_tangent_with(ideal: &Ideal, exec: Exec) -> Result<HomSolution> {
    if !ideal.is_saturated()? {
        return Err(Error::NotSaturated);
    }
    hom_tangent_unchecked(ideal, exec)
}

/// The Hom computation without the saturation precondition.
pub fn hom_tangent_unchecked(ideal: &Ideal, exec: Exec) -> Result<HomSolution> {
    let ring = ideal.ring();
    let gens = ideal.minimal_generators()?;
    let syz = syzygies(&gens)?;
    let gb = ideal.groebner_basis();
    let layout: Vec<Vec<Monomial>> = gens
        .iter()
        .map(|f| {
            Monomial::all_of_degree(ring.nvars(), f.degree().unwrap())
                .into_iter()
                .filter(|m| gb.is_standard(m))
                .collect()
        })
        .collect();
    let offsets: Vec<usize> = layout
        .iter()
        .scan(0, |acc, l| {
            let o = *acc;
            *acc += l.len();
            Some(o)
        })
        .collect();
    let unknowns: usize = layout.iter().map(Vec::len).sum();
    let field = ring.field();

    // each syzygy row contributes one equation per standard monomial
    let blocks: Vec<Vec<Vec<Scalar>>> = exec.map(&syz.rows, |row| {
        let mut nf_cache: HashMap<Monomial, Polynomial> = HashMap::new();
        // column -> NF(a_i · b)
        let mut columns: Vec<(usize, Polynomial)> = Vec::new();
        for (i, a) in row.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in layout[i].iter().enumerate() {
                let mut acc = Polynomial::zero(ring);
                for (m, c) in a.terms() {
                    let mb = m.mul(b);
                    let nf = nf_cache.entry(mb.clone()).or_insert_with(|| {
                        gb.normal_form(&Polynomial::monomial(ring, mb.exponents()))
                            .unwrap()
                    });
                    acc = &acc + &nf.scale(c);
                }
                columns.push((offsets[i] + j, acc));
            }
        }
        let mut mons: Vec<Monomial> = columns
            .iter()
            .flat_map(|(_, p)| p.terms().iter().map(|(m, _)| m.clone()))
            .collect();
        mons.sort_by(|a, b| ring.order().compare(a, b));
        mons.dedup();
        mons.iter()
            .map(|m| {
                let mut eq = vec![field.zero(); unknowns];
                for (col, p) in &columns {
                    eq[*col] = &eq[*col] + &p.coeff(m);
                }
                eq
            })
            .collect()
    });
    let mut system = Matrix::new(field, unknowns);
    for eq in blocks.into_iter().flatten() {
        if eq.iter().any(|x| !x.is_zero()) {
            system.push_row(eq);
        }
    }
    let solutions = system.kernel();
    Ok(HomSolution {
        tangent_dim: solutions.nrows(),
        generators: gens.len(),
        syzygy_rows: syz.rows.len(),
        unknowns,
        equations: system.nrows(),
        minimal_generators: gens,
        layout,
        solutions,
    })
}

// ---------------------------------------------------------------------------
// Jacobian tangent spaces

#[derive(Clone, Debug)]
pub struct JacobianTangent {
    /// Projective dimension of the Zariski tangent space.
    pub tangent_dim: i64,
    pub rank: usize,
    /// Null space of the Jacobian in reduced row echelon form.
    pub kernel: Matrix,
}

/// Zariski tangent space of `V(gens)` at the projective point `point`:
/// `n − rank J(point)` with `n = nvars − 1`.
pub fn jacobian_tangent_dim(gens: &[Polynomial], point: &[Scalar]) -> Result<JacobianTangent> {
    let Some(first) = gens.first() else {
        return Err(Error::Hypothesis("no equations".into()));
    };
    let ring = first.ring();
    if point.iter().all(Scalar::is_zero) {
        return Err(Error::Hypothesis(
            "the zero vector is not a projective point".into(),
        ));
    }
    for g in gens {
        if !g.evaluate(point)?.is_zero() {
            return Err(Error::PointNotOnScheme);
        }
    }
    let n = ring.nvars();
    let rows = gens
        .iter()
        .map(|g| {
            (0..n)
                .map(|i| g.derivative(i).evaluate(point))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let jac = Matrix::from_rows(ring.field(), n, rows);
    let rank = jac.rank();
    Ok(JacobianTangent {
        tangent_dim: n as i64 - 1 - rank as i64,
        rank,
        kernel: jac.kernel(),
    })
}

// ---------------------------------------------------------------------------
// one-parameter families

/// Generators in the ring variables and one parameter `t`.
#[derive(Clone, Debug)]
pub struct Family {
    base: PolyRing,
    gens: Vec<Polynomial>,
}

impl Family {
    /// The base ring extended by a trailing parameter variable.
    pub fn parameter_ring(base: &PolyRing) -> PolyRing {
        let mut name = "t".to_string();
        while base.var_index(&name).is_some() {
            name.push('t');
        }
        let mut vars = base.vars().to_vec();
        vars.push(name);
        PolyRing::new(vars, base.field(), MonomialOrder::Grevlex).expect("valid ring")
    }

    pub fn new(base: &PolyRing, gens: Vec<Polynomial>) -> Result<Family> {
        let ring = Self::parameter_ring(base);
        if gens.iter().any(|g| !g.ring().same_space(&ring)) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.iter().map(|g| g.reorder(&ring)).collect();
        Ok(Family {
            base: base.clone(),
            gens,
        })
    }

    /// Parses generators written in the base variables and `t`.
    pub fn parse(base: &PolyRing, gens: &[&str]) -> Result<Family> {
        let ring = Self::parameter_ring(base);
        let gens = gens
            .iter()
            .map(|s| parse_polynomial(s, &ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, gens)
    }

    /// A family with no parameter dependence.
    pub fn constant(ideal: &Ideal) -> Family {
        let base = ideal.ring().clone();
        let ring = Self::parameter_ring(&base);
        let up: Vec<usize> = (0..base.nvars()).collect();
        let gens = ideal
            .generators()
            .iter()
            .map(|g| g.map_vars(&ring, &up))
            .collect();
        Family { base, gens }
    }

    pub fn base(&self) -> &PolyRing {
        &self.base
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The fiber at `t`.
    pub fn fiber(&self, t: &Scalar) -> Ideal {
        let mut images: Vec<Polynomial> = (0..self.base.nvars())
            .map(|i| Polynomial::var(&self.base, i))
            .collect();
        images.push(Polynomial::constant(&self.base, t.clone()));
        let gens = self
            .gens
            .iter()
            .map(|g| g.compose(&images, &self.base))
            .collect();
        Ideal::new(&self.base, gens).expect("same ring")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FiberReport {
    pub t: String,
    pub hf: Option<Vec<i64>>,
    pub hp: Option<HilbertPolynomial>,
    pub degree: Option<i64>,
    pub genus: Option<i64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub samples: Vec<String>,
    pub fibers: Vec<FiberReport>,
    /// All fibers valid with identical Hilbert functions.
    pub constant: bool,
    /// The fiber at `t = 0` equals the declared limit.
    pub limit_matches: bool,
}

impl FamilyReport {
    pub fn passes(&self) -> bool {
        self.constant && self.limit_matches
    }
}

fn fiber_report(family: &Family, t: &Scalar, bound: DegreeBound) -> FiberReport {
    let ideal = family.fiber(t);
    let mut rep = FiberReport {
        t: t.to_string(),
        hf: None,
        hp: None,
        degree: None,
        genus: None,
        error: None,
    };
    if ideal.is_unit() {
        rep.error = Some("fiber is the unit ideal".into());
        return rep;
    }
    match hilbert_data(&ideal, bound, Exec::Sequential) {
        Ok(d) => {
            rep.hf = Some(d.hf);
            rep.hp = Some(d.hp);
            rep.degree = Some(d.degree);
            rep.genus = Some(d.genus);
        }
        Err(e) => rep.error = Some(e.to_string()),
    }
    rep
}

/// Samples the family at each `t` in `samples`: Hilbert functions must agree
/// and the fiber at `0` must equal `limit`. Degenerate fibers are reported,
/// not raised.
pub fn family_check(
    family: &Family,
    samples: &[Scalar],
    limit: &Ideal,
    bound: DegreeBound,
    exec: Exec,
) -> Result<FamilyReport> {
    if limit.ring() != family.base() {
        return Err(Error::RingMismatch);
    }
    let fibers = exec.map(samples, |t| fiber_report(family, t, bound));
    let constant = fibers.iter().all(|f| f.error.is_none() && f.hf.is_some())
        && fibers.windows(2).all(|w| w[0].hf == w[1].hf);
    let zero = family.base().field().zero();
    let limit_matches = family.fiber(&zero).equals(limit)?;
    Ok(FamilyReport {
        samples: samples.iter().map(Scalar::to_string).collect(),
        fibers,
        constant,
        limit_matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_point, Field};

    fn ring(n: usize) -> PolyRing {
        PolyRing::standard(n, Field::Rational)
    }

    fn polys(r: &PolyRing, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|x| parse_polynomial(x, r).unwrap()).collect()
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

    #[test]
    fn koszul_rows() {
        let r = ring(3);
        let s = syzygies(&polys(&r, &["X0", "X1"])).unwrap();
        assert_eq!(s.rows.len(), 1);
        let row = &s.rows[0];
        let expected = polys(&r, &["X1", "-X0"]);
        assert!(row == &expected || row == &expected.iter().map(|p| -p).collect::<Vec<_>>());
        let s = syzygies(&polys(&r, &["X0*X1", "X0*X2"])).unwrap();
        assert_eq!(s.rows.len(), 1);
        assert_eq!(s.degrees, vec![3]);
    }

    #[test]
    fn rn_quartic_linear_syzygies() {
        let r = ring(5);
        let s = syzygies(&polys(&r, &RN4)).unwrap();
        assert!(s.annihilates());
        assert_eq!(s.degree_counts()[0], (3, 8));
    }

    #[test]
    fn tangent_dimensions() {
        let r = ring(3);
        let pt = Ideal::parse(&r, &["X0", "X1"]).unwrap();
        assert_eq!(hilb_tangent_dim(&pt).unwrap().tangent_dim, 2);
        let r4 = ring(4);
        let cubic = Ideal::parse(&r4, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]).unwrap();
        assert_eq!(hilb_tangent_dim(&cubic).unwrap().tangent_dim, 12);
        let r5 = ring(5);
        let h = hilb_tangent_dim(&Ideal::parse(&r5, &RN4).unwrap()).unwrap();
        assert_eq!(h.tangent_dim, 21);
        assert_eq!(h.generators, 6);
        let l4 = Ideal::parse(&r5, &L4).unwrap();
        assert_eq!(hilb_tangent_dim(&l4).unwrap().tangent_dim, 36);
        let bad = Ideal::parse(&ring(2), &["X0^2", "X0*X1"]).unwrap();
        assert_eq!(hilb_tangent_dim(&bad).unwrap_err(), Error::NotSaturated);
    }

    #[test]
    fn solutions_satisfy_the_system() {
        let r4 = ring(4);
        let cubic = Ideal::parse(&r4, &["X0*X2 - X1^2", "X0*X3 - X1*X2", "X1*X3 - X2^2"]).unwrap();
        let h = hilb_tangent_dim(&cubic).unwrap();
        let syz = syzygies(&h.minimal_generators).unwrap();
        let gb = cubic.groebner_basis();
        for sol in h.solutions.rows() {
            let g = h.images(sol);
            for row in &syz.rows {
                let s = row
                    .iter()
                    .zip(&g)
                    .fold(Polynomial::zero(&r4), |acc, (a, b)| &acc + &(a * b));
                assert!(gb.normal_form(&s).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn jacobian_examples() {
        let r = ring(5);
        let p = parse_point("1,0,0,0,0", &r).unwrap();
        assert_eq!(
            jacobian_tangent_dim(&polys(&r, &L4), &p)
                .unwrap()
                .tangent_dim,
            4
        );
        assert_eq!(
            jacobian_tangent_dim(&polys(&r, &RN4), &p)
                .unwrap()
                .tangent_dim,
            1
        );
        let off = parse_point("0,1,0,0,0", &r).unwrap();
        assert_eq!(
            jacobian_tangent_dim(&polys(&r, &L4), &off).unwrap_err(),
            Error::PointNotOnScheme
        );
        // representative independence
        let p2 = parse_point("3,0,0,0,0", &r).unwrap();
        assert_eq!(jacobian_tangent_dim(&polys(&r, &RN4), &p2).unwrap().rank, 3);
    }

    #[test]
    fn matrix_family() {
        let r = ring(5);
        let fam = Family::parse(
            &r,
            &[
                "t*X0*X2 - X1^2",
                "t*X0*X3 - X1*X2",
                "t^2*X0*X4 - X1*X3",
                "X1*X3 - X2^2",
                "t*X1*X4 - X2*X3",
                "t*X2*X4 - X3^2",
            ],
        )
        .unwrap();
        let samples: Vec<Scalar> = [0, 1, 2, 5]
            .iter()
            .map(|&v| Field::Rational.from_i64(v))
            .collect();
        let limit = Ideal::parse(&r, &L4).unwrap();
        let rep = family_check(
            &fam,
            &samples,
            &limit,
            DegreeBound::default(),
            Exec::Sequential,
        )
        .unwrap();
        assert!(rep.passes(), "{rep:?}");
        assert_eq!(&rep.fibers[0].hf.as_ref().unwrap()[..4], &[1, 5, 9, 13]);
        assert_eq!(
            fam.fiber(&Field::Rational.one()),
            Ideal::parse(&r, &RN4).unwrap()
        );

        let c = Family::constant(&limit);
        let rep =
            family_check(&c, &samples, &limit, DegreeBound::default(), Exec::Parallel).unwrap();
        assert!(rep.passes());
    }
}
