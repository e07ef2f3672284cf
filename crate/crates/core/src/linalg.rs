//! Exact linear algebra: matrices over the central base field (`Q` or
//! `F_p`) and square matrices over the division ring itself.

use crate::error::{Error, Result};
use crate::ring::{BaseField, Elem, OreContext};

/// A dense matrix of base-field scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseMatrix {
    field: BaseField,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl BaseMatrix {
    pub fn zeros(field: BaseField, rows: usize, cols: usize) -> Self {
        BaseMatrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_columns(field: BaseField, rows: usize, columns: &[Vec<Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged column");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> BaseField {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(&inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), &f.mul(&factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Elem>> {
        let f = self.field;
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Some `x` with `M x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Elem]) -> Option<Vec<Elem>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field;
        let mut aug = Self::zeros(f, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (m, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = m.get(r, self.cols).clone();
        }
        Some(x)
    }

    pub fn mul_vec(&self, v: &[Elem]) -> Vec<Elem> {
        let f = self.field;
        (0..self.rows)
            .map(|i| (0..self.cols).fold(f.zero(), |acc, j| f.add(&acc, &f.mul(self.get(i, j), &v[j]))))
            .collect()
    }
}

/// Matrix of a base-linear map `K -> K` in the standard basis: column `j`
/// holds the coordinates of the image of the `j`-th basis element.
pub fn linear_map_matrix(ctx: &OreContext, map: impl Fn(&Elem) -> Elem) -> Result<BaseMatrix> {
    let b = ctx.backend();
    let (field, basis) = match (b.base_field(), b.base_basis()) {
        (Some(f), Some(basis)) => (f, basis),
        _ => return Err(Error::CapabilityMissing(format!("{} is not finite-dimensional over its center", b.tag()))),
    };
    let cols: Vec<Vec<Elem>> = basis.iter().map(|e| b.coordinates(&map(e)).expect("element of K")).collect();
    Ok(BaseMatrix::from_columns(field, basis.len(), &cols))
}

/// Reduces a spanning set of a `K`-subspace to a basis over the base field.
pub fn base_independent(ctx: &OreContext, vectors: &[Elem]) -> Result<Vec<Elem>> {
    let b = ctx.backend();
    let field = b.base_field().ok_or_else(|| Error::CapabilityMissing("no base field".into()))?;
    let n = b.base_dimension().unwrap();
    let mut out: Vec<Elem> = Vec::new();
    for v in vectors {
        let mut cols: Vec<Vec<Elem>> = out.iter().map(|x| b.coordinates(x).unwrap()).collect();
        cols.push(b.coordinates(v).unwrap());
        if BaseMatrix::from_columns(field, n, &cols).rank() == cols.len() {
            out.push(v.clone());
        }
    }
    Ok(out)
}

/// A square matrix with entries in the division ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMatrix {
    n: usize,
    data: Vec<Elem>,
}

impl KMatrix {
    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        KMatrix { n, data: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Elem>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn map(&self, f: impl Fn(&Elem) -> Elem) -> Self {
        KMatrix { n: self.n, data: self.data.iter().map(f).collect() }
    }

    pub fn mul(&self, ctx: &OreContext, o: &Self) -> Self {
        let n = self.n;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push((0..n).fold(ctx.zero(), |acc, k| ctx.add(&acc, &ctx.mul(self.get(i, k), o.get(k, j)))));
            }
        }
        KMatrix { n, data }
    }

    pub fn add(&self, ctx: &OreContext, o: &Self) -> Self {
        KMatrix { n: self.n, data: self.data.iter().zip(&o.data).map(|(a, b)| ctx.add(a, b)).collect() }
    }

    /// Multiplies column `j` on the right by `d[j]`.
    pub fn scale_columns(&self, ctx: &OreContext, d: &[Elem]) -> Self {
        let n = self.n;
        let data = (0..n * n).map(|idx| ctx.mul(&self.data[idx], &d[idx % n])).collect();
        KMatrix { n, data }
    }

    /// Invertibility by row reduction with left scalar multiples of rows,
    /// valid over a noncommutative division ring.
    pub fn is_invertible(&self, ctx: &OreContext) -> bool {
        let n = self.n;
        let mut m = self.rows();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !ctx.is_zero(&m[i][c])) else {
                return false;
            };
            m.swap(p, c);
            let inv = ctx.inv(&m[c][c]);
            for i in c + 1..n {
                if ctx.is_zero(&m[i][c]) {
                    continue;
                }
                let factor = ctx.mul(&m[i][c], &inv);
                for j in c..n {
                    m[i][j] = ctx.sub(&m[i][j], &ctx.mul(&factor, &m[c][j]));
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Backend;

    fn q(n: i64) -> Elem {
        BaseField::Rationals.from_i64(n)
    }

    #[test]
    fn kernel_and_solve() {
        // [[1, 2, 3], [2, 4, 6]] has a two-dimensional kernel
        let m = BaseMatrix::from_columns(BaseField::Rationals, 2, &[vec![q(1), q(2)], vec![q(2), q(4)], vec![q(3), q(6)]]);
        assert_eq!(m.rank(), 1);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(m.mul_vec(v).iter().all(|x| BaseField::Rationals.is_zero(x)));
        }
        assert!(m.solve(&[q(1), q(3)]).is_none());
        let x = m.solve(&[q(1), q(2)]).unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(1), q(2)]);
    }

    #[test]
    fn prime_field_rank() {
        let f = BaseField::Prime(2);
        let one = f.one();
        let m = BaseMatrix::from_columns(f, 2, &[vec![one.clone(), one.clone()], vec![one.clone(), one]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn quaternion_matrix_invertibility() {
        let ctx = OreContext::classical(Backend::Quaternions);
        let e = |s: &str| ctx.elem(s).unwrap();
        assert!(KMatrix::from_rows(vec![vec![e("1"), e("1")], vec![e("i"), e("j")]]).is_invertible(&ctx));
        assert!(!KMatrix::from_rows(vec![vec![e("1"), e("1")], vec![e("i"), e("i")]]).is_invertible(&ctx));
        // rows (1, j) and (i, k) are left-dependent: i*(1, j) = (i, k)
        assert!(!KMatrix::from_rows(vec![vec![e("1"), e("j")], vec![e("i"), e("k")]]).is_invertible(&ctx));
    }
}
