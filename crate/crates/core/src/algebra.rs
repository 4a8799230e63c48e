//! Structure-constant algebras and the axiom checkers for associative, Lie,
//! noncommutative Poisson, coherent and compatible structures.

use crate::error::{Error, Result};
use crate::law::{Report, Violation};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{one, Scalar};

/// A bilinear product on `K^n`; `c[k][i][j]` is the `e_k` coefficient of `e_i ∘ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearMap {
    dim: usize,
    table: Vec<Vector>,
}

impl BilinearMap {
    pub fn zero(dim: usize) -> Self {
        BilinearMap {
            dim,
            table: vec![Vector::zeros(dim); dim * dim],
        }
    }

    /// Builds from `(k, i, j, c)` entries; repeated entries accumulate.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>) -> Self {
        let mut m = Self::zero(dim);
        for (k, i, j, c) in entries {
            m.add_entry(k, i, j, &c);
        }
        m
    }

    /// `e_i ∘ e_j = f(i, j)`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "product has wrong length");
                table.push(v);
            }
        }
        BilinearMap { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_entry(&mut self, k: usize, i: usize, j: usize, c: &Scalar) {
        let n = self.dim;
        assert!(k < n && i < n && j < n, "structure constant index out of range");
        self.table[i * n + j][k] += c;
    }

    pub fn coeff(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.table[i * self.dim + j][k]
    }

    /// `e_i ∘ e_j`.
    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, a) in x.nonzero() {
            for (j, b) in y.nonzero() {
                out.axpy(&(a * b), self.product(i, j));
            }
        }
        out
    }

    /// Nonzero structure constants as `(k, i, j, c)`, in lexicographic `(i, j, k)` order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j).nonzero() {
                    out.push((k, i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(Vector::is_zero)
    }

    /// Matrix of `y ↦ e_i ∘ y`.
    pub fn left(&self, i: usize) -> Matrix {
        Matrix::from_columns(self.dim, &(0..self.dim).map(|j| self.product(i, j).clone()).collect::<Vec<_>>())
    }

    /// Matrix of `y ↦ y ∘ e_i`.
    pub fn right(&self, i: usize) -> Matrix {
        Matrix::from_columns(self.dim, &(0..self.dim).map(|j| self.product(j, i).clone()).collect::<Vec<_>>())
    }

    pub fn left_of(&self, x: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, a) in x.nonzero() {
            m.axpy(a, &self.left(i));
        }
        m
    }

    pub fn right_of(&self, x: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, a) in x.nonzero() {
            m.axpy(a, &self.right(i));
        }
        m
    }

    pub fn scale(&self, c: &Scalar) -> BilinearMap {
        BilinearMap {
            dim: self.dim,
            table: self.table.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &BilinearMap) -> BilinearMap {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        BilinearMap {
            dim: self.dim,
            table: self.table.iter().zip(&other.table).map(|(a, b)| a + b).collect(),
        }
    }

    /// `x ∘' y = y ∘ x`.
    pub fn opposite(&self) -> BilinearMap {
        Self::from_fn(self.dim, |i, j| self.product(j, i).clone())
    }

    /// `[x, y] = x ∘ y − y ∘ x`.
    pub fn commutator(&self) -> BilinearMap {
        Self::from_fn(self.dim, |i, j| self.product(i, j) - self.product(j, i))
    }

    /// Restriction to the coordinate block `start..start + len`, or `None` if
    /// the block is not closed under the product.
    pub fn block(&self, start: usize, len: usize) -> Option<BilinearMap> {
        let inside = |v: &Vector| v.nonzero().all(|(k, _)| (start..start + len).contains(&k));
        let mut out = BilinearMap::zero(len);
        for i in 0..len {
            for j in 0..len {
                let p = self.product(start + i, start + j);
                if !inside(p) {
                    return None;
                }
                out.table[i * len + j] = p.slice(start, start + len);
            }
        }
        Some(out)
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

pub fn associative_violations(m: &BilinearMap) -> Vec<Violation> {
    let rights: Vec<Matrix> = (0..m.dim).map(|k| m.right(k)).collect();
    let lefts: Vec<Matrix> = (0..m.dim).map(|i| m.left(i)).collect();
    let mut r = Report::default();
    for (i, j, k) in triples(m.dim) {
        let lhs = rights[k].mul_vec(m.product(i, j));
        let rhs = lefts[i].mul_vec(m.product(j, k));
        r.eq("associativity", &[i, j, k], lhs, rhs);
    }
    r.finish()
}

pub fn check_associative(m: &BilinearMap) -> bool {
    associative_violations(m).is_empty()
}

pub fn lie_violations(m: &BilinearMap) -> Vec<Violation> {
    let n = m.dim;
    let mut r = Report::default();
    for i in 0..n {
        for j in i..n {
            r.zero("antisymmetry", &[i, j], m.product(i, j) + m.product(j, i));
        }
    }
    let lefts: Vec<Matrix> = (0..n).map(|i| m.left(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let v = &(&lefts[i].mul_vec(m.product(j, k)) + &lefts[j].mul_vec(m.product(k, i)))
                    + &lefts[k].mul_vec(m.product(i, j));
                r.zero("jacobi", &[i, j, k], v);
            }
        }
    }
    r.finish()
}

pub fn check_lie(m: &BilinearMap) -> bool {
    lie_violations(m).is_empty()
}

/// `{x, y·z} = {x, y}·z + y·{x, z}`.
pub fn leibniz_violations(dot: &BilinearMap, bracket: &BilinearMap) -> Vec<Violation> {
    if dot.dim != bracket.dim {
        return vec![dim_violation()];
    }
    let n = dot.dim;
    let ad: Vec<Matrix> = (0..n).map(|i| bracket.left(i)).collect();
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        let lhs = ad[x].mul_vec(dot.product(y, z));
        let rhs = &dot.apply(bracket.product(x, y), &Vector::basis(n, z))
            + &dot.apply(&Vector::basis(n, y), bracket.product(x, z));
        r.eq("leibniz", &[x, y, z], lhs, rhs);
    }
    r.finish()
}

pub fn check_leibniz(dot: &BilinearMap, bracket: &BilinearMap) -> bool {
    leibniz_violations(dot, bracket).is_empty()
}

fn dim_violation() -> Violation {
    Violation::new("dimension", vec![], Vector::zeros(0), Vector::zeros(0))
}

/// `{x, y·z} + {y, z·x} + {z, x·y} = 0`.
pub fn coherence_violations(dot: &BilinearMap, bracket: &BilinearMap) -> Vec<Violation> {
    if dot.dim != bracket.dim {
        return vec![dim_violation()];
    }
    let n = dot.dim;
    let ad: Vec<Matrix> = (0..n).map(|i| bracket.left(i)).collect();
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        let v = &(&ad[x].mul_vec(dot.product(y, z)) + &ad[y].mul_vec(dot.product(z, x)))
            + &ad[z].mul_vec(dot.product(x, y));
        r.zero("coherence", &[x, y, z], v);
    }
    r.finish()
}

/// `[{x,y}, z] + [{z,x}, y] + [{y,z}, x] = 0` with `[,]` the commutator of `dot`.
pub fn commutator_cyclic_violations(dot: &BilinearMap, bracket: &BilinearMap) -> Vec<Violation> {
    let n = dot.dim;
    let comm = dot.commutator();
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        let e = |i| Vector::basis(n, i);
        let v = &(&comm.apply(bracket.product(x, y), &e(z)) + &comm.apply(bracket.product(z, x), &e(y)))
            + &comm.apply(bracket.product(y, z), &e(x));
        r.zero("commutator-cyclic", &[x, y, z], v);
    }
    r.finish()
}

/// `{[x,y], z} + {[z,x], y} + {[y,z], x} = 0` with `[,]` the commutator of `dot`.
pub fn dual_cyclic_violations(dot: &BilinearMap, bracket: &BilinearMap) -> Vec<Violation> {
    commutator_cyclic_violations(bracket, &dot.commutator())
        .into_iter()
        .map(|v| Violation { identity: "dual-cyclic", ..v })
        .collect()
}

/// Mixed Jacobi identity `Σ_cyc [[x,y]₁,z]₂ + [[x,y]₂,z]₁ = 0`.
pub fn compatible_lie_violations(b1: &BilinearMap, b2: &BilinearMap) -> Vec<Violation> {
    if b1.dim != b2.dim {
        return vec![dim_violation()];
    }
    let n = b1.dim;
    let ad1: Vec<Matrix> = (0..n).map(|i| b1.right(i)).collect();
    let ad2: Vec<Matrix> = (0..n).map(|i| b2.right(i)).collect();
    let mut r = Report::default();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut v = Vector::zeros(n);
                for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                    v = &v + &ad2[z].mul_vec(b1.product(x, y));
                    v = &v + &ad1[z].mul_vec(b2.product(x, y));
                }
                r.zero("compatible-jacobi", &[i, j, k], v);
            }
        }
    }
    r.finish()
}

/// Both inputs must be Lie brackets.
pub fn check_compatible_lie(b1: &BilinearMap, b2: &BilinearMap) -> Result<bool> {
    if !check_lie(b1) || !check_lie(b2) {
        return Err(Error::NotLie);
    }
    Ok(compatible_lie_violations(b1, b2).is_empty())
}

/// A noncommutative Poisson algebra: associative `dot`, Lie `bracket`, and
/// the bracket a derivation of the product. Validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonAlgebra {
    dot: BilinearMap,
    bracket: BilinearMap,
    coherent: bool,
}

impl PoissonAlgebra {
    pub fn new(dot: BilinearMap, bracket: BilinearMap) -> Result<Self> {
        if dot.dim != bracket.dim {
            return Err(Error::DimensionMismatch(format!(
                "product has dimension {}, bracket {}",
                dot.dim, bracket.dim
            )));
        }
        if !check_associative(&dot) {
            return Err(Error::NotAssociative);
        }
        if !check_lie(&bracket) {
            return Err(Error::NotLie);
        }
        if !check_leibniz(&dot, &bracket) {
            return Err(Error::NotLeibniz);
        }
        let coherent = coherence_violations(&dot, &bracket).is_empty();
        Ok(PoissonAlgebra { dot, bracket, coherent })
    }

    pub fn zero(dim: usize) -> Self {
        PoissonAlgebra {
            dot: BilinearMap::zero(dim),
            bracket: BilinearMap::zero(dim),
            coherent: true,
        }
    }

    pub fn dim(&self) -> usize {
        self.dot.dim
    }

    pub fn dot(&self) -> &BilinearMap {
        &self.dot
    }

    pub fn bracket(&self) -> &BilinearMap {
        &self.bracket
    }

    pub fn is_coherent(&self) -> bool {
        self.coherent
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.dot.apply(x, y)
    }

    pub fn br(&self, x: &Vector, y: &Vector) -> Vector {
        self.bracket.apply(x, y)
    }

    /// Left multiplication `L_{e_i}`.
    pub fn l(&self, i: usize) -> Matrix {
        self.dot.left(i)
    }

    /// Right multiplication `R_{e_i}`.
    pub fn r(&self, i: usize) -> Matrix {
        self.dot.right(i)
    }

    /// `ad_{e_i} = {e_i, -}`.
    pub fn ad(&self, i: usize) -> Matrix {
        self.bracket.left(i)
    }

    /// Restriction to a coordinate block closed under both operations.
    pub fn block(&self, start: usize, len: usize) -> Option<PoissonAlgebra> {
        let dot = self.dot.block(start, len)?;
        let bracket = self.bracket.block(start, len)?;
        PoissonAlgebra::new(dot, bracket).ok()
    }

    /// The structure on the span of the (independent) columns of `basis`,
    /// in that basis, or `None` if the span is not closed under both
    /// operations.
    pub fn subalgebra(&self, basis: &Matrix) -> Option<PoissonAlgebra> {
        let cols = basis.columns();
        let k = cols.len();
        if basis.rows() != self.dim() || basis.rank() != k {
            return None;
        }
        let restrict = |m: &BilinearMap| -> Option<BilinearMap> {
            let mut out = BilinearMap::zero(k);
            for i in 0..k {
                for j in 0..k {
                    let c = basis.solve(&m.apply(&cols[i], &cols[j]))?;
                    for (t, v) in c.nonzero() {
                        out.add_entry(t, i, j, v);
                    }
                }
            }
            Some(out)
        };
        PoissonAlgebra::new(restrict(&self.dot)?, restrict(&self.bracket)?).ok()
    }
}

pub fn check_coherent(p: &PoissonAlgebra) -> bool {
    p.coherent
}

pub fn commutator(dot: &BilinearMap) -> BilinearMap {
    dot.commutator()
}

/// Bracket `ħ(x·y − y·x)` on an associative algebra.
pub fn standard_poisson(dot: &BilinearMap, hbar: &Scalar) -> Result<PoissonAlgebra> {
    if !check_associative(dot) {
        return Err(Error::NotAssociative);
    }
    PoissonAlgebra::new(dot.clone(), dot.commutator().scale(hbar))
}

/// `e_0 · e_0 = e_0`.
pub fn unit_algebra() -> PoissonAlgebra {
    PoissonAlgebra::new(BilinearMap::from_entries(1, [(0, 0, 0, one())]), BilinearMap::zero(1))
        .expect("one-dimensional unital algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_3d, example_4d};
    use crate::scalar::{int, rat};

    fn bm(n: usize, e: &[(usize, usize, usize, i64)]) -> BilinearMap {
        BilinearMap::from_entries(n, e.iter().map(|&(k, i, j, c)| (k, i, j, int(c))))
    }

    #[test]
    fn associativity_examples() {
        let p = example_3d(&int(1), &int(2), &int(3));
        assert!(check_associative(p.dot()));
        assert!(check_associative(&BilinearMap::zero(3)));
        let mut bad = p.dot().clone();
        bad.add_entry(0, 2, 0, &int(1));
        let v = associative_violations(&bad);
        assert!(v.iter().any(|v| v.at == vec![0, 1, 0]));
    }

    #[test]
    fn lie_examples() {
        let p = example_3d(&int(1), &int(2), &int(3));
        assert!(check_lie(p.bracket()));
        assert!(check_lie(&BilinearMap::zero(3)));
        // {e2,e3} = +a e3 instead of -a e3, a = 1
        let mut bad = p.bracket().clone();
        bad.add_entry(2, 1, 2, &int(2));
        bad.add_entry(2, 2, 1, &int(-2));
        assert!(!check_lie(&bad));
    }

    #[test]
    fn leibniz_examples() {
        let p = example_3d(&int(1), &int(0), &int(2));
        assert!(check_leibniz(p.dot(), p.bracket()));
        assert!(check_leibniz(p.dot(), &BilinearMap::zero(3)));
        // {e1,e3} = b e1 with b = 1
        let dot = example_3d(&int(0), &int(1), &int(0)).dot().clone();
        let br = bm(3, &[(1, 0, 1, 1), (1, 1, 0, -1), (0, 0, 2, 1), (0, 2, 0, -1)]);
        let v = leibniz_violations(&dot, &br);
        assert!(v.iter().any(|v| v.at == vec![0, 0, 1]));
    }

    #[test]
    fn fixtures_coherent() {
        for (a, b, c) in [(1, 2, 3), (-4, 0, 7), (0, 0, 0)] {
            assert!(example_3d(&int(a), &int(b), &int(c)).is_coherent());
            assert!(example_4d(&int(a), &int(b), &int(c)).is_coherent());
        }
    }

    #[test]
    fn commutator_examples() {
        let p = example_3d(&int(1), &int(1), &int(1));
        let c = commutator(p.dot());
        assert_eq!(c.entries(), vec![(2, 0, 1, int(2)), (2, 1, 0, int(-2))]);
        assert!(commutator(&bm(2, &[(0, 0, 1, 1), (0, 1, 0, 1)])).is_zero());
    }

    #[test]
    fn standard_poisson_examples() {
        let p3 = example_3d(&int(0), &int(0), &int(0));
        let s = standard_poisson(p3.dot(), &int(1)).unwrap();
        assert_eq!(s.bracket().product(0, 1), &Vector::from_vec(vec![int(0), int(0), int(2)]));
        assert!(s.is_coherent());
        assert!(standard_poisson(p3.dot(), &int(0)).unwrap().bracket().is_zero());
        let p4 = example_4d(&int(0), &int(0), &int(0));
        let s = standard_poisson(p4.dot(), &rat(1, 2)).unwrap();
        assert_eq!(s.bracket().coeff(3, 0, 1), &rat(1, 2));
        let nonassoc = bm(2, &[(1, 0, 0, 1)]).add(&bm(2, &[(0, 1, 0, 1)]));
        assert_eq!(standard_poisson(&nonassoc, &int(1)), Err(Error::NotAssociative));
    }

    #[test]
    fn compatible_lie_examples() {
        let p = example_3d(&int(1), &int(1), &int(1));
        assert_eq!(check_compatible_lie(p.bracket(), &commutator(p.dot())), Ok(true));
        assert_eq!(check_compatible_lie(p.bracket(), &BilinearMap::zero(3)), Ok(true));
        assert_eq!(check_compatible_lie(&bm(1, &[(0, 0, 0, 1)]), &BilinearMap::zero(1)), Err(Error::NotLie));
    }

    #[test]
    fn block_restriction() {
        let p = example_3d(&int(1), &int(1), &int(1));
        assert!(p.dot().block(0, 2).is_none());
        assert_eq!(p.dot().block(2, 1), Some(BilinearMap::zero(1)));
    }
}
