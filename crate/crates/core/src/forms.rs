//! Cartan and Euler forms on dimension vectors.
//!
//! The pairing is `⟨d, d'⟩ = d · E · d'ᵀ` with row dimension vectors and
//! `E` the inverse of the Cartan matrix.

use crate::error::{Error, Result};
use crate::linrep::{Matrix, Q};
use crate::presentation::AlgebraPresentation;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix(pub Vec<Vec<i64>>);

impl IntMatrix {
    pub fn identity(n: usize) -> IntMatrix {
        IntMatrix((0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect())
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.size();
        let m = self.0.first().map_or(0, Vec::len);
        IntMatrix((0..m).map(|j| (0..n).map(|i| self.0[i][j]).collect()).collect())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let k = other.0.len();
        let m = other.0.first().map_or(0, Vec::len);
        IntMatrix(
            self.0.iter().map(|row| (0..m).map(|j| (0..k).map(|t| row[t] * other.0[t][j]).sum()).collect()).collect(),
        )
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_ints(&self.0)
    }

    /// Bilinear value `x · self · yᵀ`.
    pub fn pair(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.0[i][j] * yj;
            }
        }
        s
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .0
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Entry `(i, j)` counts basis paths from `i` to `j`.
pub fn cartan_matrix(p: &AlgebraPresentation) -> Result<IntMatrix> {
    let basis = p.path_basis()?;
    let n = p.vertex_count();
    let mut c = vec![vec![0i64; n]; n];
    for path in &basis.paths {
        c[path.source][path.target] += 1;
    }
    Ok(IntMatrix(c))
}

pub fn euler_matrix(p: &AlgebraPresentation) -> Result<IntMatrix> {
    let c = cartan_matrix(p)?.to_matrix();
    let det = c.determinant();
    if det != Q::int(1) && det != Q::int(-1) {
        return Err(Error::NotUnimodular);
    }
    let inv = c.solve(&Matrix::identity(c.rows())).ok_or(Error::NotUnimodular)?;
    inv.to_ints().map(IntMatrix).ok_or(Error::NotUnimodular)
}

/// Rank over the rationals of `E + Eᵀ`.
pub fn symmetrized_rank(p: &AlgebraPresentation) -> Result<usize> {
    let e = euler_matrix(p)?.to_matrix();
    Ok(e.add(&e.transpose()).rank())
}

/// Exact check of `Bᵀ · e1 · B = e2`.
pub fn congruent_by(e1: &IntMatrix, e2: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    let n = e1.size();
    if e2.size() != n || b.size() != n || [e1, e2, b].iter().any(|m| m.0.iter().any(|r| r.len() != n)) {
        return Err(Error::SizeMismatch);
    }
    Ok(b.transpose().mul(e1).mul(b) == *e2)
}

/// The Euler form restricted to `{x : ⟨d, x⟩ = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerpForm {
    /// Integral basis of the sublattice, one vector per entry.
    pub basis: Vec<Vec<i64>>,
    pub gram: IntMatrix,
    pub antisymmetric: bool,
}

/// Gram matrix of `e` on the given vectors.
pub fn restricted_form(e: &IntMatrix, basis: &[Vec<i64>]) -> IntMatrix {
    IntMatrix(basis.iter().map(|x| basis.iter().map(|y| e.pair(x, y)).collect()).collect())
}

/// Integral basis of the kernel of an integer row vector, by unimodular column operations.
pub fn integer_kernel(c: &[i64]) -> Vec<Vec<i64>> {
    let n = c.len();
    let mut row: Vec<i64> = c.to_vec();
    // Columns of u; row · u stays equal to the current `row`.
    let mut u: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| i64::from(i == j)).collect()).collect();
    loop {
        let nonzero: Vec<usize> = (0..n).filter(|&j| row[j] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let p = *nonzero.iter().min_by_key(|&&j| (row[j].abs(), j)).unwrap();
        for &j in &nonzero {
            if j == p {
                continue;
            }
            let q = row[j].div_euclid(row[p]);
            row[j] -= q * row[p];
            let (up, uj) = (u[p].clone(), &mut u[j]);
            for (a, b) in uj.iter_mut().zip(up) {
                *a -= q * b;
            }
        }
    }
    let mut kernel: Vec<Vec<i64>> = (0..n).filter(|&j| row[j] == 0).map(|j| u[j].clone()).collect();
    // Echelon shape with positive leading entries.
    for v in kernel.iter_mut() {
        if let Some(&lead) = v.iter().find(|&&x| x != 0) {
            if lead < 0 {
                v.iter_mut().for_each(|x| *x = -*x);
            }
        }
    }
    kernel.sort_by(|a, b| b.cmp(a));
    kernel
}

pub fn perp_euler(p: &AlgebraPresentation, d: &[i64]) -> Result<PerpForm> {
    let e = euler_matrix(p)?;
    if d.len() != e.size() {
        return Err(Error::SizeMismatch);
    }
    if d.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    let c: Vec<i64> = (0..e.size()).map(|j| d.iter().enumerate().map(|(i, di)| di * e.0[i][j]).sum()).collect();
    let basis = integer_kernel(&c);
    let gram = restricted_form(&e, &basis);
    let antisymmetric = gram.transpose().0.iter().flatten().zip(gram.0.iter().flatten()).all(|(a, b)| *a == -*b);
    Ok(PerpForm { basis, gram, antisymmetric })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{family, FamilyParams};

    fn fam(name: &str) -> AlgebraPresentation {
        family(name, &FamilyParams::default()).unwrap()
    }

    fn im(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn cartan_and_euler() {
        assert_eq!(cartan_matrix(&fam("A1")).unwrap(), im(&[&[1, 2, 2], &[0, 1, 2], &[0, 0, 1]]));
        assert_eq!(cartan_matrix(&fam("A2")).unwrap(), im(&[&[1, 1, 0], &[1, 1, 1], &[2, 1, 1]]));
        assert_eq!(cartan_matrix(&fam("field")).unwrap(), im(&[&[1]]));
        assert_eq!(euler_matrix(&fam("field")).unwrap(), im(&[&[1]]));
        for name in ["A1", "A2", "A2p", "A3"] {
            let p = fam(name);
            let prod = euler_matrix(&p).unwrap().mul(&cartan_matrix(&p).unwrap());
            assert_eq!(prod, IntMatrix::identity(3));
        }
    }

    #[test]
    fn infinite_gldim_is_not_unimodular() {
        let p = AlgebraPresentation::build("x", &["1"], &[("x", "1", "1")], &["x*x"]).unwrap();
        assert_eq!(euler_matrix(&p).unwrap_err(), Error::NotUnimodular);
    }

    #[test]
    fn symmetrized_ranks() {
        assert_eq!(symmetrized_rank(&fam("A1")).unwrap(), 1);
        assert_eq!(symmetrized_rank(&fam("A2")).unwrap(), 1);
        assert_eq!(symmetrized_rank(&fam("A2p")).unwrap(), 2);
        for p in 1..=5 {
            assert_eq!(symmetrized_rank(&family("Apq", &FamilyParams::p(p)).unwrap()).unwrap(), p);
            for r in 0..=p {
                let want = if r % 2 == 0 { p + 1 } else { p };
                assert_eq!(symmetrized_rank(&family("Bpr", &FamilyParams::pr(p, r)).unwrap()).unwrap(), want);
            }
        }
    }

    #[test]
    fn congruence() {
        let e = euler_matrix(&fam("A2")).unwrap();
        assert!(congruent_by(&e, &e, &IntMatrix::identity(3)).unwrap());
        assert!(congruent_by(&e, &IntMatrix::identity(2), &IntMatrix::identity(3)).is_err());
    }

    #[test]
    fn integer_kernel_is_unimodular_completion() {
        let k = integer_kernel(&[6, 10, 15]);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(6 * v[0] + 10 * v[1] + 15 * v[2], 0);
        }
        assert!(integer_kernel(&[1]).is_empty());
    }

    #[test]
    fn perp_forms() {
        let a1 = fam("A1");
        let f = perp_euler(&a1, &[1, 1, 1]).unwrap();
        assert!(f.antisymmetric);
        let e = euler_matrix(&a1).unwrap();
        let hand = vec![vec![1, 1, 0], vec![0, 1, 1]];
        assert_eq!(restricted_form(&e, &hand), im(&[&[0, -1], &[1, 0]]));
        // Same lattice: each basis expresses the other integrally.
        let g = Matrix::from_ints(&f.basis).transpose();
        for h in &hand {
            let x = g.solve(&Matrix::from_ints(&[h.clone()]).transpose()).unwrap();
            assert!(x.to_ints().is_some());
        }
        assert_eq!(perp_euler(&a1, &[1, 0, 0]).unwrap().antisymmetric, false);
        let k = perp_euler(&fam("field"), &[1]).unwrap();
        assert!(k.basis.is_empty() && k.antisymmetric);
        assert_eq!(perp_euler(&a1, &[0, 0, 0]).unwrap_err(), Error::ZeroVector);
    }
}
