//! The bicomplex `C^{i,j}(P,V) = Hom(P^{⊗i} ⊗ ∧^j P, V)` of a noncommutative
//! Poisson algebra with coefficients in a quasi-representation.
//!
//! `δ̂` is the Hochschild-type differential in the tensor slots and `δ̄` the
//! Chevalley–Eilenberg-type differential in the wedge slots, where the Lie
//! action also reaches into the tensor slots through `{x, a}`. The total
//! differential on `C^n` is `Σ_{i+j=n} δ̂ + (−1)^i δ̄`.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{Error, Result};
use crate::law::{Report, Violation};
use crate::linalg::{Matrix, Vector};
use crate::rep::PoissonRep;
use crate::scalar::{one, random_scalar, Scalar};

/// Largest total degree accepted as input to the differentials.
pub const MAX_INPUT_DEGREE: usize = 3;

type Key = (Vec<usize>, Vec<usize>);

/// An element of `C^{i,j}(P,V)`, stored by its values on basis arguments:
/// every `i`-tuple in the tensor slots and every strictly increasing
/// `j`-tuple in the wedge slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    i: usize,
    j: usize,
    n: usize,
    m: usize,
    values: BTreeMap<Key, Vector>,
}

impl Cochain {
    pub fn zero(i: usize, j: usize, n: usize, m: usize) -> Self {
        Self::from_fn(i, j, n, m, |_, _| Vector::zeros(m))
    }

    /// `f(a, x)` gives the value on `e_{a_1} ⊗ … ⊗ e_{x_1} ∧ …` with `x` increasing.
    pub fn from_fn(i: usize, j: usize, n: usize, m: usize, mut f: impl FnMut(&[usize], &[usize]) -> Vector) -> Self {
        let mut values = BTreeMap::new();
        for a in tuples(n, i) {
            for x in increasing(n, j) {
                let v = f(&a, &x);
                assert_eq!(v.len(), m, "cochain value has wrong length");
                values.insert((a.clone(), x), v);
            }
        }
        Cochain { i, j, n, m, values }
    }

    pub fn random<R: Rng + ?Sized>(i: usize, j: usize, n: usize, m: usize, rng: &mut R) -> Self {
        Self::from_fn(i, j, n, m, |_, _| Vector::from_vec((0..m).map(|_| random_scalar(rng)).collect()))
    }

    /// A `(1,0)` or `(0,1)` cochain whose value on `e_k` is column `k` of `values`.
    pub fn linear(i: usize, j: usize, values: &Matrix) -> Self {
        assert_eq!(i + j, 1, "linear cochains have degree 1");
        let (n, m) = (values.cols(), values.rows());
        Self::from_fn(i, j, n, m, |a, x| values.column(a.first().or(x.first()).copied().unwrap()))
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Vector::is_zero)
    }

    /// Value on basis arguments; wedge arguments may come in any order.
    pub fn eval_basis(&self, a: &[usize], x: &[usize]) -> Vector {
        assert_eq!((a.len(), x.len()), (self.i, self.j), "wrong number of arguments");
        let mut sorted = x.to_vec();
        let Some(sign) = sort_sign(&mut sorted) else {
            return Vector::zeros(self.m);
        };
        let v = &self.values[&(a.to_vec(), sorted)];
        if sign {
            v.clone()
        } else {
            -v
        }
    }

    /// Multilinear extension of [`Cochain::eval_basis`].
    pub fn eval(&self, a: &[Vector], x: &[Vector]) -> Vector {
        let args: Vec<&Vector> = a.iter().chain(x).collect();
        let mut out = Vector::zeros(self.m);
        let mut idx = Vec::with_capacity(args.len());
        self.expand(&args, &mut idx, one(), &mut out);
        out
    }

    fn expand(&self, args: &[&Vector], idx: &mut Vec<usize>, coef: Scalar, out: &mut Vector) {
        if idx.len() == args.len() {
            let v = self.eval_basis(&idx[..self.i], &idx[self.i..]);
            out.axpy(&coef, &v);
            return;
        }
        for (k, c) in args[idx.len()].nonzero() {
            idx.push(k);
            self.expand(args, idx, &coef * c, out);
            idx.pop();
        }
    }
}

/// Sorts in place; `None` on a repeated index, otherwise whether the
/// permutation was even.
fn sort_sign(x: &mut [usize]) -> Option<bool> {
    let mut inversions = 0;
    for p in 0..x.len() {
        for q in p + 1..x.len() {
            if x[p] == x[q] {
                return None;
            }
            if x[p] > x[q] {
                inversions += 1;
            }
        }
    }
    x.sort_unstable();
    Some(inversions % 2 == 0)
}

fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

fn increasing(n: usize, len: usize) -> Vec<Vec<usize>> {
    tuples(n, len)
        .into_iter()
        .filter(|t| t.windows(2).all(|w| w[0] < w[1]))
        .collect()
}

fn basis_args(n: usize, idx: &[usize]) -> Vec<Vector> {
    idx.iter().map(|&k| Vector::basis(n, k)).collect()
}

fn check_degree(phi: &Cochain) -> Result<()> {
    if phi.i + phi.j > MAX_INPUT_DEGREE {
        return Err(Error::DegreeUnsupported { i: phi.i, j: phi.j });
    }
    Ok(())
}

fn check_shape(rep: &PoissonRep, phi: &Cochain) -> Result<()> {
    if phi.n != rep.base().dim() || phi.m != rep.vdim() {
        return Err(Error::DimensionMismatch(format!(
            "cochain on ({}, {}) but representation on ({}, {})",
            phi.n,
            phi.m,
            rep.base().dim(),
            rep.vdim()
        )));
    }
    Ok(())
}

/// `δ̂ φ (a_1..a_{i+1}; x) = L_{a_1} φ(a_2..) + Σ_k (−1)^k φ(..a_k·a_{k+1}..) + (−1)^{i+1} R_{a_{i+1}} φ(a_1..a_i)`.
pub fn dhat(rep: &PoissonRep, phi: &Cochain) -> Result<Cochain> {
    check_degree(phi)?;
    check_shape(rep, phi)?;
    let (n, m, i) = (phi.n, phi.m, phi.i);
    let dot = rep.base().dot();
    Ok(Cochain::from_fn(i + 1, phi.j, n, m, |a, x| {
        let xs = basis_args(n, x);
        let mut out = rep.l(a[0]).mul_vec(&phi.eval(&basis_args(n, &a[1..]), &xs));
        for k in 0..i {
            let mut args = basis_args(n, a);
            let prod = dot.product(a[k], a[k + 1]).clone();
            args.splice(k..k + 2, [prod]);
            let sign = if (k + 1) % 2 == 0 { one() } else { -one() };
            out.axpy(&sign, &phi.eval(&args, &xs));
        }
        let last = rep.r(a[i]).mul_vec(&phi.eval(&basis_args(n, &a[..i]), &xs));
        let sign = if (i + 1) % 2 == 0 { one() } else { -one() };
        out.axpy(&sign, &last);
        out
    }))
}

/// `δ̄ φ (a; x_1..x_{j+1}) = Σ_l (−1)^{l+1} (ρ(x_l) φ(a; x̂_l) − Σ_k φ(..{x_l,a_k}..; x̂_l))
///  + Σ_{p<q} (−1)^{p+q} φ(a; {x_p,x_q} ∧ x̂_p x̂_q)`.
///
/// The diagonal `p = q` contributes `{x_p, x_p} = 0`, so only `p < q` is summed.
pub fn dbar(rep: &PoissonRep, phi: &Cochain) -> Result<Cochain> {
    check_degree(phi)?;
    check_shape(rep, phi)?;
    let (n, m, i, j) = (phi.n, phi.m, phi.i, phi.j);
    let br = rep.base().bracket();
    Ok(Cochain::from_fn(i, j + 1, n, m, |a, x| {
        let args = basis_args(n, a);
        let mut out = Vector::zeros(m);
        for l in 0..=j {
            let sign = if l % 2 == 0 { one() } else { -one() };
            let mut rest = x.to_vec();
            rest.remove(l);
            let rest = basis_args(n, &rest);
            let mut term = rep.rho(x[l]).mul_vec(&phi.eval(&args, &rest));
            for k in 0..i {
                let mut moved = args.clone();
                moved[k] = br.product(x[l], a[k]).clone();
                term = &term - &phi.eval(&moved, &rest);
            }
            out.axpy(&sign, &term);
        }
        for p in 0..=j {
            for q in p + 1..=j {
                let sign = if (p + q) % 2 == 0 { one() } else { -one() };
                let mut wedge = vec![br.product(x[p], x[q]).clone()];
                wedge.extend(x.iter().enumerate().filter(|&(t, _)| t != p && t != q).map(|(_, &k)| Vector::basis(n, k)));
                out.axpy(&sign, &phi.eval(&args, &wedge));
            }
        }
        out
    }))
}

/// An element of `C^n = ⊕_{i+j=n} C^{i,j}`; `parts[i]` has bidegree `(i, n − i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedCochain {
    degree: usize,
    parts: Vec<Cochain>,
}

impl MixedCochain {
    pub fn new(parts: Vec<Cochain>) -> Result<Self> {
        let degree = parts.len().checked_sub(1).ok_or_else(|| Error::DimensionMismatch("no components".into()))?;
        for (i, c) in parts.iter().enumerate() {
            if c.bidegree() != (i, degree - i) {
                return Err(Error::DimensionMismatch(format!(
                    "component {i} has bidegree {:?}, expected ({i}, {})",
                    c.bidegree(),
                    degree - i
                )));
            }
        }
        Ok(MixedCochain { degree, parts })
    }

    pub fn random<R: Rng + ?Sized>(degree: usize, n: usize, m: usize, rng: &mut R) -> Self {
        MixedCochain {
            degree,
            parts: (0..=degree).map(|i| Cochain::random(i, degree - i, n, m, rng)).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn parts(&self) -> &[Cochain] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(Cochain::is_zero)
    }
}

/// `δ^n`; the `(i, j)` output component is `δ̂(part (i−1, j)) + (−1)^i δ̄(part (i, j−1))`.
pub fn delta(rep: &PoissonRep, c: &MixedCochain) -> Result<MixedCochain> {
    if c.degree > MAX_INPUT_DEGREE {
        return Err(Error::DegreeUnsupported { i: c.degree, j: 0 });
    }
    let (n, m) = (rep.base().dim(), rep.vdim());
    let d = c.degree + 1;
    let hats = c.parts.iter().map(|p| dhat(rep, p)).collect::<Result<Vec<_>>>()?;
    let bars = c.parts.iter().map(|p| dbar(rep, p)).collect::<Result<Vec<_>>>()?;
    let parts = (0..=d)
        .map(|i| {
            Cochain::from_fn(i, d - i, n, m, |a, x| {
                let mut v = Vector::zeros(m);
                if i >= 1 {
                    v = &v + &hats[i - 1].eval_basis(a, x);
                }
                if i < d {
                    let b = bars[i].eval_basis(a, x);
                    v = if i % 2 == 0 { &v + &b } else { &v - &b };
                }
                v
            })
        })
        .collect();
    Ok(MixedCochain { degree: d, parts })
}

/// The three 1-cocycle identities for `φ ∈ C^{1,0}`, `ψ ∈ C^{0,1}`:
/// `φ(a·b) = L_a φ(b) + R_b φ(a)`,
/// `φ({x,a}) = ρ(x) φ(a) − L_a ψ(x) + R_a ψ(x)`,
/// `ψ({x,y}) = ρ(x) ψ(y) − ρ(y) ψ(x)`.
pub fn one_cocycle_violations(rep: &PoissonRep, phi: &Cochain, psi: &Cochain) -> Vec<Violation> {
    assert_eq!(phi.bidegree(), (1, 0), "phi must have bidegree (1,0)");
    assert_eq!(psi.bidegree(), (0, 1), "psi must have bidegree (0,1)");
    let p = rep.base();
    let n = p.dim();
    let ph = |k: usize| phi.eval_basis(&[k], &[]);
    let ps = |k: usize| psi.eval_basis(&[], &[k]);
    let mut r = Report::default();
    for a in 0..n {
        for b in 0..n {
            let lhs = phi.eval(&[p.dot().product(a, b).clone()], &[]);
            let rhs = &rep.l(a).mul_vec(&ph(b)) + &rep.r(b).mul_vec(&ph(a));
            r.eq("phi(ab) = L_a phi(b) + R_b phi(a)", &[a, b], lhs, rhs);
        }
    }
    for x in 0..n {
        for a in 0..n {
            let lhs = phi.eval(&[p.bracket().product(x, a).clone()], &[]);
            let rhs = &(&rep.rho(x).mul_vec(&ph(a)) - &rep.l(a).mul_vec(&ps(x))) + &rep.r(a).mul_vec(&ps(x));
            r.eq("phi({x,a}) = rho(x) phi(a) - L_a psi(x) + R_a psi(x)", &[x, a], lhs, rhs);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let lhs = psi.eval(&[], &[p.bracket().product(x, y).clone()]);
            let rhs = &rep.rho(x).mul_vec(&ps(y)) - &rep.rho(y).mul_vec(&ps(x));
            r.eq("psi({x,y}) = rho(x) psi(y) - rho(y) psi(x)", &[x, y], lhs, rhs);
        }
    }
    r.finish()
}

pub fn is_one_cocycle(rep: &PoissonRep, phi: &Cochain, psi: &Cochain) -> bool {
    one_cocycle_violations(rep, phi, psi).is_empty()
}

/// `φ(a) = L_a u − R_a u`, `ψ(x) = ρ(x) u`.
pub fn one_coboundary_from(rep: &PoissonRep, u: &Vector) -> (Cochain, Cochain) {
    let (n, m) = (rep.base().dim(), rep.vdim());
    assert_eq!(u.len(), m, "u must lie in V");
    let phi = Cochain::from_fn(1, 0, n, m, |a, _| &rep.l(a[0]).mul_vec(u) - &rep.r(a[0]).mul_vec(u));
    let psi = Cochain::from_fn(0, 1, n, m, |_, x| rep.rho(x[0]).mul_vec(u));
    (phi, psi)
}
