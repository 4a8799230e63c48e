//! (Quasi-)representations of a noncommutative Poisson algebra, their duals,
//! the tensor quasi-representation on `P ⊗ P`, and semidirect products.

use crate::algebra::{BilinearMap, PoissonAlgebra};
use crate::error::{Error, Result};
use crate::law::{Report, Violation};
use crate::linalg::{Matrix, Vector};

/// Strongest structure a quasi-representation carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepKind {
    Quasi,
    /// Also `ρ(x·y) = L_x ρ(y) + R_y ρ(x)`.
    Full,
    /// Also `ρ(x·y) = ρ(x) L_y + ρ(y) R_x`.
    FullCoherent,
}

/// Actions `L`, `R`, `ρ` of each basis element of `base` on an `m`-dimensional
/// space, as `m × m` matrices acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonRep {
    base: PoissonAlgebra,
    vdim: usize,
    l: Vec<Matrix>,
    r: Vec<Matrix>,
    rho: Vec<Matrix>,
}

impl PoissonRep {
    /// Validates shapes and the quasi-representation laws.
    pub fn new(base: PoissonAlgebra, vdim: usize, l: Vec<Matrix>, r: Vec<Matrix>, rho: Vec<Matrix>) -> Result<Self> {
        let rep = Self::from_actions(base, vdim, l, r, rho)?;
        if let Some(v) = rep.quasi_violations().into_iter().next() {
            return Err(Error::NotQuasiRep(v.to_string()));
        }
        Ok(rep)
    }

    /// Shape checks only; the laws are left to [`PoissonRep::quasi_violations`].
    pub fn from_actions(base: PoissonAlgebra, vdim: usize, l: Vec<Matrix>, r: Vec<Matrix>, rho: Vec<Matrix>) -> Result<Self> {
        let n = base.dim();
        for (name, ms) in [("L", &l), ("R", &r), ("rho", &rho)] {
            if ms.len() != n {
                return Err(Error::DimensionMismatch(format!("{name} has {} matrices, expected {n}", ms.len())));
            }
            if ms.iter().any(|m| m.rows() != vdim || m.cols() != vdim) {
                return Err(Error::DimensionMismatch(format!("{name} matrices must be {vdim}x{vdim}")));
            }
        }
        Ok(PoissonRep { base, vdim, l, r, rho })
    }

    pub fn zero(base: PoissonAlgebra, vdim: usize) -> Self {
        let n = base.dim();
        let z = vec![Matrix::zeros(vdim, vdim); n];
        PoissonRep { base, vdim, l: z.clone(), r: z.clone(), rho: z }
    }

    pub fn base(&self) -> &PoissonAlgebra {
        &self.base
    }

    pub fn vdim(&self) -> usize {
        self.vdim
    }

    pub fn l(&self, i: usize) -> &Matrix {
        &self.l[i]
    }

    pub fn r(&self, i: usize) -> &Matrix {
        &self.r[i]
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn l_of(&self, x: &Vector) -> Matrix {
        combine(&self.l, x, self.vdim)
    }

    pub fn r_of(&self, x: &Vector) -> Matrix {
        combine(&self.r, x, self.vdim)
    }

    pub fn rho_of(&self, x: &Vector) -> Matrix {
        combine(&self.rho, x, self.vdim)
    }

    /// Associative and Lie representation laws plus the two mixed identities
    /// `L_{x,y} = [ρ(x), L_y]` and `R_{x,y} = [ρ(x), R_y]` (braces inside).
    pub fn quasi_violations(&self) -> Vec<Violation> {
        let n = self.base.dim();
        let dot = self.base.dot();
        let br = self.base.bracket();
        let mut rep = Report::default();
        for x in 0..n {
            for y in 0..n {
                let xy = dot.product(x, y);
                let at = [x, y];
                rep.eq("L_{xy} = L_x L_y", &at, self.l_of(xy).flatten(), (&self.l[x] * &self.l[y]).flatten());
                rep.eq("R_{xy} = R_y R_x", &at, self.r_of(xy).flatten(), (&self.r[y] * &self.r[x]).flatten());
                rep.eq("L_x R_y = R_y L_x", &at, (&self.l[x] * &self.r[y]).flatten(), (&self.r[y] * &self.l[x]).flatten());
                let b = br.product(x, y);
                rep.eq("rho({x,y}) = [rho(x), rho(y)]", &at, self.rho_of(b).flatten(), commutator(&self.rho[x], &self.rho[y]).flatten());
                rep.eq("L_{x,y} = [rho(x), L_y]", &at, self.l_of(b).flatten(), commutator(&self.rho[x], &self.l[y]).flatten());
                rep.eq("R_{x,y} = [rho(x), R_y]", &at, self.r_of(b).flatten(), commutator(&self.rho[x], &self.r[y]).flatten());
            }
        }
        rep.finish()
    }

    /// `ρ(x·y) = L_x ρ(y) + R_y ρ(x)`.
    pub fn con_rep_violations(&self) -> Vec<Violation> {
        let n = self.base.dim();
        let mut rep = Report::default();
        for x in 0..n {
            for y in 0..n {
                let lhs = self.rho_of(self.base.dot().product(x, y));
                let rhs = &(&self.l[x] * &self.rho[y]) + &(&self.r[y] * &self.rho[x]);
                rep.eq("rho(xy) = L_x rho(y) + R_y rho(x)", &[x, y], lhs.flatten(), rhs.flatten());
            }
        }
        rep.finish()
    }

    /// `ρ(x·y) = ρ(x) L_y + ρ(y) R_x`.
    pub fn coherent_condition_violations(&self) -> Vec<Violation> {
        let n = self.base.dim();
        let mut rep = Report::default();
        for x in 0..n {
            for y in 0..n {
                let lhs = self.rho_of(self.base.dot().product(x, y));
                let rhs = &(&self.rho[x] * &self.l[y]) + &(&self.rho[y] * &self.r[x]);
                rep.eq("rho(xy) = rho(x) L_y + rho(y) R_x", &[x, y], lhs.flatten(), rhs.flatten());
            }
        }
        rep.finish()
    }

    /// Strongest kind; `NotQuasiRep` when the quasi laws fail.
    pub fn classify(&self) -> Result<RepKind> {
        if let Some(v) = self.quasi_violations().into_iter().next() {
            return Err(Error::NotQuasiRep(v.to_string()));
        }
        if !self.con_rep_violations().is_empty() {
            return Ok(RepKind::Quasi);
        }
        if !self.coherent_condition_violations().is_empty() {
            return Ok(RepKind::Full);
        }
        Ok(RepKind::FullCoherent)
    }
}

fn combine(ms: &[Matrix], x: &Vector, m: usize) -> Matrix {
    let mut out = Matrix::zeros(m, m);
    for (i, a) in x.nonzero() {
        out.axpy(a, &ms[i]);
    }
    out
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    &(a * b) - &(b * a)
}

/// `(P; L, R, ad)`.
pub fn regular_rep(p: &PoissonAlgebra) -> PoissonRep {
    let n = p.dim();
    PoissonRep {
        base: p.clone(),
        vdim: n,
        l: (0..n).map(|i| p.l(i)).collect(),
        r: (0..n).map(|i| p.r(i)).collect(),
        rho: (0..n).map(|i| p.ad(i)).collect(),
    }
}

/// `(V*; −R*, −L*, ρ*)` in the dual basis. A starred action is the negative
/// transpose, so the new left action is `R_xᵀ`, the new right action `L_xᵀ`,
/// and the new Lie action `−ρ(x)ᵀ`.
pub fn dualize(rep: &PoissonRep) -> PoissonRep {
    PoissonRep {
        base: rep.base.clone(),
        vdim: rep.vdim,
        l: rep.r.iter().map(Matrix::transpose).collect(),
        r: rep.l.iter().map(Matrix::transpose).collect(),
        rho: rep.rho.iter().map(|m| -&m.transpose()).collect(),
    }
}

/// `(P ⊗ P; 1 ⊗ L, R ⊗ 1, ad ⊗ 1 + 1 ⊗ ad)`, with `e_i ⊗ e_j` at index `i·n + j`.
pub fn tensor_quasi_rep(p: &PoissonAlgebra) -> PoissonRep {
    let n = p.dim();
    let id = Matrix::identity(n);
    PoissonRep {
        base: p.clone(),
        vdim: n * n,
        l: (0..n).map(|i| id.kron(&p.l(i))).collect(),
        r: (0..n).map(|i| p.r(i).kron(&id)).collect(),
        rho: (0..n).map(|i| &p.ad(i).kron(&id) + &id.kron(&p.ad(i))).collect(),
    }
}

/// `P ⋉ V`: `P` on coordinates `0..n`, `V` on `n..n+m`, with
/// `(x₁+v₁)(x₂+v₂) = x₁x₂ + L_{x₁}v₂ + R_{x₂}v₁` and
/// `{x₁+v₁, x₂+v₂} = {x₁,x₂} + ρ(x₁)v₂ − ρ(x₂)v₁`.
pub fn semidirect(rep: &PoissonRep) -> Result<PoissonAlgebra> {
    if rep.classify()? < RepKind::Full {
        return Err(Error::RepNotFull);
    }
    let (dot, bracket) = semidirect_maps(rep);
    PoissonAlgebra::new(dot, bracket)
}

pub(crate) fn semidirect_maps(rep: &PoissonRep) -> (BilinearMap, BilinearMap) {
    let n = rep.base.dim();
    let m = rep.vdim;
    let total = n + m;
    let mut dot = BilinearMap::zero(total);
    let mut bracket = BilinearMap::zero(total);
    for (k, i, j, c) in rep.base.dot().entries() {
        dot.add_entry(k, i, j, &c);
    }
    for (k, i, j, c) in rep.base.bracket().entries() {
        bracket.add_entry(k, i, j, &c);
    }
    for x in 0..n {
        for v in 0..m {
            for w in 0..m {
                let l = &rep.l[x][(w, v)];
                let r = &rep.r[x][(w, v)];
                let rho = &rep.rho[x][(w, v)];
                dot.add_entry(n + w, x, n + v, l);
                dot.add_entry(n + w, n + v, x, r);
                bracket.add_entry(n + w, x, n + v, rho);
                bracket.add_entry(n + w, n + v, x, &-rho);
            }
        }
    }
    (dot, bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::unit_algebra;
    use crate::fixtures::{example_3d, example_4d};
    use crate::scalar::int;

    #[test]
    fn regular_rep_kinds() {
        let p = example_3d(&int(1), &int(1), &int(1));
        assert!(p.is_coherent());
        assert_eq!(regular_rep(&p).classify(), Ok(RepKind::FullCoherent));
        let z = PoissonRep::zero(p.clone(), 2);
        assert_eq!(z.classify(), Ok(RepKind::FullCoherent));
    }

    #[test]
    fn regular_rep_matrices() {
        let p = example_3d(&int(0), &int(0), &int(0));
        let reg = regular_rep(&p);
        assert!((0..3).all(|i| reg.rho(i).is_zero()));
        let p = example_3d(&int(1), &int(0), &int(0));
        let l1 = regular_rep(&p).l(0).clone();
        let mut expect = Matrix::zeros(3, 3);
        expect[(2, 1)] = int(1);
        assert_eq!(l1, expect);
        let u = regular_rep(&unit_algebra());
        assert_eq!(u.l(0), &Matrix::identity(1));
        assert_eq!(u.r(0), &Matrix::identity(1));
    }

    #[test]
    fn dual_of_regular() {
        let p = example_3d(&int(1), &int(1), &int(1));
        let d = dualize(&regular_rep(&p));
        assert!(d.quasi_violations().is_empty());
        assert!(d.classify().unwrap() >= RepKind::Full);
        assert_eq!(dualize(&d), regular_rep(&p));
        let z = PoissonRep::zero(p, 2);
        assert_eq!(dualize(&z), z);
    }

    #[test]
    fn semidirect_products() {
        let p = example_3d(&int(1), &int(1), &int(1));
        let s = semidirect(&regular_rep(&p)).unwrap();
        assert_eq!(s.dim(), 6);
        assert_eq!(s.block(0, 3).unwrap(), p);
        assert!(s.dot().block(3, 3).unwrap().is_zero());
        let s = semidirect(&PoissonRep::zero(p.clone(), 1)).unwrap();
        assert_eq!(s.dim(), 4);
        let p = example_3d(&int(1), &int(2), &int(3));
        assert!(semidirect(&dualize(&regular_rep(&p))).unwrap().is_coherent());
    }

    #[test]
    fn tensor_rep() {
        let p = example_3d(&int(1), &int(1), &int(1));
        let t = tensor_quasi_rep(&p);
        assert_eq!(t.classify(), Ok(RepKind::Quasi));
        // (1 ⊗ L_{e1})(e1 ⊗ e2) = e1 ⊗ e3
        let v = t.l(0).mul_vec(&Vector::basis(9, 1));
        assert_eq!(v, Vector::basis(9, 2));
        let z = tensor_quasi_rep(&PoissonAlgebra::zero(2));
        assert_eq!(z.classify(), Ok(RepKind::FullCoherent));
        let q = example_4d(&int(1), &int(2), &int(3));
        assert!(tensor_quasi_rep(&q).quasi_violations().is_empty());
    }

    #[test]
    fn constructor_rejects_non_quasi() {
        let p = unit_algebra();
        let bad = PoissonRep::new(p, 1, vec![Matrix::from_rows(vec![vec![int(2)]])], vec![Matrix::zeros(1, 1)], vec![Matrix::zeros(1, 1)]);
        assert!(matches!(bad, Err(Error::NotQuasiRep(_))));
    }
}
