//! Graded linear-algebra oracle. Everything here works degree by degree on
//! coefficient vectors and never touches Gröbner bases, so it can check the
//! library's answers independently.

#![allow(dead_code)]

pub mod props;

use std::collections::HashMap;

use acm_core::polyring::{Field, Monomial, Polynomial, Scalar};

pub fn monomials(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == nvars {
            cur[i] = left as u16;
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e as u16;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(nvars, 0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Row rank by plain Gaussian elimination.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] * &inv;
                let pivot = m[r].clone();
                for (x, y) in m[i][c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        r += 1;
    }
    r
}

pub struct Graded {
    pub field: Field,
    pub nvars: usize,
    pub d: u32,
    pub basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Graded {
    pub fn new(field: Field, nvars: usize, d: u32) -> Graded {
        let basis = monomials(nvars, d);
        let index = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        Graded {
            field,
            nvars,
            d,
            basis,
            index,
        }
    }

    pub fn vector(&self, f: &Polynomial) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.basis.len()];
        for (m, c) in f.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    /// Spanning rows of `I_d` for homogeneous generators.
    pub fn ideal_rows(&self, gens: &[Polynomial]) -> Vec<Vec<Scalar>> {
        let mut rows = Vec::new();
        for g in gens {
            let Some(e) = g.degree() else { continue };
            if e > self.d {
                continue;
            }
            for m in monomials(self.nvars, self.d - e) {
                rows.push(self.vector(&g.mul_term(&m, &self.field.one())));
            }
        }
        rows
    }

    pub fn ideal_dim(&self, gens: &[Polynomial]) -> usize {
        rank(&self.ideal_rows(gens))
    }
}

/// `dim (S/I)_d`.
pub fn hf(field: Field, nvars: usize, gens: &[Polynomial], d: u32) -> i64 {
    let g = Graded::new(field, nvars, d);
    (g.basis.len() - g.ideal_dim(gens)) as i64
}

/// Membership of a homogeneous `f` in `(gens)`.
pub fn member(field: Field, nvars: usize, gens: &[Polynomial], f: &Polynomial) -> bool {
    let Some(d) = f.degree() else { return true };
    let g = Graded::new(field, nvars, d);
    let mut rows = g.ideal_rows(gens);
    let before = rank(&rows);
    rows.push(g.vector(f));
    rank(&rows) == before
}

/// `dim (I ∩ k[kept])_d`: the part of `I_d` with no eliminated variable.
pub fn elimination_dim(
    field: Field,
    nvars: usize,
    gens: &[Polynomial],
    keep: &[usize],
    d: u32,
) -> usize {
    let g = Graded::new(field, nvars, d);
    let rows = g.ideal_rows(gens);
    let full = rank(&rows);
    let outside: Vec<usize> = g
        .basis
        .iter()
        .enumerate()
        .filter(|(_, m)| (0..nvars).any(|i| m.exponents()[i] > 0 && !keep.contains(&i)))
        .map(|(i, _)| i)
        .collect();
    let projected: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| outside.iter().map(|&i| r[i].clone()).collect())
        .collect();
    full - rank(&projected)
}

/// Dimension of the degree-`d` part of the module spanned by `rows` inside
/// `⊕ S(-shift_i)`.
pub fn module_dim(
    field: Field,
    nvars: usize,
    shifts: &[u32],
    rows: &[Vec<Polynomial>],
    d: u32,
) -> usize {
    let blocks: Vec<Option<Graded>> = shifts
        .iter()
        .map(|&s| (s <= d).then(|| Graded::new(field, nvars, d - s)))
        .collect();
    let mut vecs = Vec::new();
    for row in rows {
        let Some(rd) = row
            .iter()
            .zip(shifts)
            .filter_map(|(a, s)| a.degree().map(|e| e + s))
            .max()
        else {
            continue;
        };
        if rd > d {
            continue;
        }
        for m in monomials(nvars, d - rd) {
            let mut v = Vec::new();
            for (a, b) in row.iter().zip(&blocks) {
                if let Some(b) = b {
                    v.extend(b.vector(&a.mul_term(&m, &field.one())));
                }
            }
            vecs.push(v);
        }
    }
    rank(&vecs)
}

/// `dim Syz_d`: kernel of `⊕ S_{d - deg f_i} → S_d`.
pub fn syzygy_kernel_dim(field: Field, nvars: usize, gens: &[Polynomial], d: u32) -> usize {
    let g = Graded::new(field, nvars, d);
    let domain: usize = gens
        .iter()
        .filter_map(|f| f.degree())
        .filter(|&e| e <= d)
        .map(|e| monomials(nvars, d - e).len())
        .sum();
    domain - rank(&g.ideal_rows(gens))
}
