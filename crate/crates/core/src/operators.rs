//! Dendriform, pre-Lie and noncommutative pre-Poisson algebras, and the
//! O-operators / Rota–Baxter operators that produce them.

use crate::algebra::{BilinearMap, PoissonAlgebra};
use crate::error::{Error, Result};
use crate::law::{Report, Violation};
use crate::linalg::{Matrix, Vector};
use crate::rep::{dualize, regular_rep, semidirect, PoissonRep, RepKind};
use crate::scalar::Scalar;
use crate::yang_baxter::Tensor2;

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

fn e(n: usize, i: usize) -> Vector {
    Vector::basis(n, i)
}

/// `(x≺y)≺z = x≺(y≻z + y≺z)`, `(x≻y)≺z = x≻(y≺z)`, `x≻(y≻z) = (x≻y + x≺y)≻z`.
pub fn dendriform_violations(succ: &BilinearMap, prec: &BilinearMap) -> Vec<Violation> {
    assert_eq!(succ.dim(), prec.dim(), "dendriform operations differ in dimension");
    let n = succ.dim();
    let sum = succ.add(prec);
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        let (ex, ez) = (e(n, x), e(n, z));
        r.eq("(x<y)<z = x<(y>z + y<z)", &[x, y, z], prec.apply(prec.product(x, y), &ez), prec.apply(&ex, sum.product(y, z)));
        r.eq("(x>y)<z = x>(y<z)", &[x, y, z], prec.apply(succ.product(x, y), &ez), succ.apply(&ex, prec.product(y, z)));
        r.eq("x>(y>z) = (x>y + x<y)>z", &[x, y, z], succ.apply(&ex, succ.product(y, z)), succ.apply(sum.product(x, y), &ez));
    }
    r.finish()
}

pub fn check_dendriform(succ: &BilinearMap, prec: &BilinearMap) -> bool {
    dendriform_violations(succ, prec).is_empty()
}

/// `(x∗y)∗z − x∗(y∗z) = (y∗x)∗z − y∗(x∗z)`.
pub fn prelie_violations(ast: &BilinearMap) -> Vec<Violation> {
    let n = ast.dim();
    let assoc = |x: usize, y: usize, z: usize| &ast.apply(ast.product(x, y), &e(n, z)) - &ast.apply(&e(n, x), ast.product(y, z));
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        if x < y {
            r.eq("left-symmetric associator", &[x, y, z], assoc(x, y, z), assoc(y, x, z));
        }
    }
    r.finish()
}

pub fn check_prelie(ast: &BilinearMap) -> bool {
    prelie_violations(ast).is_empty()
}

/// `(x∘y)∗z − x∗(y∘z) + (x∗y)∘z − x∘(y∗z)` symmetric in `x, y`.
pub fn check_compatible_prelie(a1: &BilinearMap, a2: &BilinearMap) -> Result<bool> {
    if !check_prelie(a1) || !check_prelie(a2) {
        return Err(Error::NotPreLie);
    }
    Ok(compatible_prelie_violations(a1, a2).is_empty())
}

pub fn compatible_prelie_violations(a1: &BilinearMap, a2: &BilinearMap) -> Vec<Violation> {
    let n = a1.dim();
    let f = |x: usize, y: usize, z: usize| {
        let t1 = &a2.apply(a1.product(x, y), &e(n, z)) - &a2.apply(&e(n, x), a1.product(y, z));
        let t2 = &a1.apply(a2.product(x, y), &e(n, z)) - &a1.apply(&e(n, x), a2.product(y, z));
        &t1 + &t2
    };
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        if x < y {
            r.eq("compatible pre-Lie", &[x, y, z], f(x, y, z), f(y, x, z));
        }
    }
    r.finish()
}

/// `(x ⋆₁ y) ⋆₂ z − x ⋆₂ (y ⋆₁ z)` symmetric in `x, y`.
fn mixed_symmetric_violations(first: &BilinearMap, second: &BilinearMap, identity: &'static str) -> Vec<Violation> {
    let n = first.dim();
    let f = |x: usize, y: usize, z: usize| &second.apply(first.product(x, y), &e(n, z)) - &second.apply(&e(n, x), first.product(y, z));
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        if x < y {
            r.eq(identity, &[x, y, z], f(x, y, z), f(y, x, z));
        }
    }
    r.finish()
}

/// `x ∘ y = x≻y − y≺x`.
pub fn circ(succ: &BilinearMap, prec: &BilinearMap) -> BilinearMap {
    let n = succ.dim();
    BilinearMap::from_fn(n, |x, y| succ.product(x, y) - prec.product(y, x))
}

/// `x ∗_ħ y = ħ(x≻y − y≺x)`.
pub fn ast_hbar(succ: &BilinearMap, prec: &BilinearMap, hbar: &Scalar) -> BilinearMap {
    circ(succ, prec).scale(hbar)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PrePoissonVerdict {
    No,
    Yes,
    YesCoherent,
}

/// The three compatibilities between `(≻, ≺)` and `∗`.
pub fn pre_poisson_violations(succ: &BilinearMap, prec: &BilinearMap, ast: &BilinearMap) -> Vec<Violation> {
    let n = succ.dim();
    let comm = ast.commutator();
    let sum = succ.add(prec);
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        let (ex, ey, ez) = (e(n, x), e(n, y), e(n, z));
        r.eq(
            "(x*y - y*x)>z = x*(y>z) - y>(x*z)",
            &[x, y, z],
            succ.apply(comm.product(x, y), &ez),
            &ast.apply(&ex, succ.product(y, z)) - &succ.apply(&ey, ast.product(x, z)),
        );
        r.eq(
            "x<(y*z - z*y) = y*(x<z) - (y*x)<z",
            &[x, y, z],
            prec.apply(&ex, comm.product(y, z)),
            &ast.apply(&ey, prec.product(x, z)) - &prec.apply(ast.product(y, x), &ez),
        );
        r.eq(
            "(x>y + x<y)*z = (x*z)<y + x>(y*z)",
            &[x, y, z],
            ast.apply(sum.product(x, y), &ez),
            &prec.apply(ast.product(x, z), &ey) + &succ.apply(&ex, ast.product(y, z)),
        );
    }
    r.finish()
}

/// `(x≻y + x≺y)∗z = x∗(y≻z) + y∗(z≺x)`.
pub fn pre_poisson_coherence_violations(succ: &BilinearMap, prec: &BilinearMap, ast: &BilinearMap) -> Vec<Violation> {
    let n = succ.dim();
    let sum = succ.add(prec);
    let mut r = Report::default();
    for (x, y, z) in triples(n) {
        r.eq(
            "(x>y + x<y)*z = x*(y>z) + y*(z<x)",
            &[x, y, z],
            ast.apply(sum.product(x, y), &e(n, z)),
            &ast.apply(&e(n, x), succ.product(y, z)) + &ast.apply(&e(n, y), prec.product(z, x)),
        );
    }
    r.finish()
}

/// `(x∗y)∘z − x∘(y∗z)` symmetric in `x, y`: an equivalent form of coherence.
pub fn circ_coherence_violations(succ: &BilinearMap, prec: &BilinearMap, ast: &BilinearMap) -> Vec<Violation> {
    mixed_symmetric_violations(ast, &circ(succ, prec), "(x*y)oz - xo(y*z) symmetric")
}

/// `(x∘y)∗z − x∗(y∘z)` symmetric in `x, y`.
pub fn circ_dual_violations(succ: &BilinearMap, prec: &BilinearMap, ast: &BilinearMap) -> Vec<Violation> {
    mixed_symmetric_violations(&circ(succ, prec), ast, "(xoy)*z - x*(yoz) symmetric")
}

pub fn check_pre_poisson(succ: &BilinearMap, prec: &BilinearMap, ast: &BilinearMap) -> Result<PrePoissonVerdict> {
    if succ.dim() != prec.dim() || succ.dim() != ast.dim() {
        return Err(Error::DimensionMismatch("pre-Poisson operations differ in dimension".into()));
    }
    if !check_dendriform(succ, prec) {
        return Err(Error::ComponentInvalid("(>, <) is not dendriform".into()));
    }
    if !check_prelie(ast) {
        return Err(Error::ComponentInvalid("* is not pre-Lie".into()));
    }
    if !pre_poisson_violations(succ, prec, ast).is_empty() {
        return Ok(PrePoissonVerdict::No);
    }
    if pre_poisson_coherence_violations(succ, prec, ast).is_empty() {
        Ok(PrePoissonVerdict::YesCoherent)
    } else {
        Ok(PrePoissonVerdict::Yes)
    }
}

/// A noncommutative pre-Poisson algebra `(A, ≻, ≺, ∗)`, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrePoisson {
    succ: BilinearMap,
    prec: BilinearMap,
    ast: BilinearMap,
    coherent: bool,
}

impl PrePoisson {
    pub fn new(succ: BilinearMap, prec: BilinearMap, ast: BilinearMap) -> Result<Self> {
        match check_pre_poisson(&succ, &prec, &ast)? {
            PrePoissonVerdict::No => Err(Error::NotPrePoisson),
            verdict => Ok(PrePoisson { succ, prec, ast, coherent: verdict == PrePoissonVerdict::YesCoherent }),
        }
    }

    pub fn zero(n: usize) -> Self {
        PrePoisson { succ: BilinearMap::zero(n), prec: BilinearMap::zero(n), ast: BilinearMap::zero(n), coherent: true }
    }

    /// `(A, ≻, ≺, ∗_ħ)` for a dendriform `(≻, ≺)`.
    pub fn with_hbar(succ: BilinearMap, prec: BilinearMap, hbar: &Scalar) -> Result<Self> {
        let ast = ast_hbar(&succ, &prec, hbar);
        PrePoisson::new(succ, prec, ast)
    }

    pub fn dim(&self) -> usize {
        self.succ.dim()
    }

    pub fn succ(&self) -> &BilinearMap {
        &self.succ
    }

    pub fn prec(&self) -> &BilinearMap {
        &self.prec
    }

    pub fn ast(&self) -> &BilinearMap {
        &self.ast
    }

    pub fn is_coherent(&self) -> bool {
        self.coherent
    }

    pub fn circ(&self) -> BilinearMap {
        circ(&self.succ, &self.prec)
    }
}

/// `x·y = x≻y + x≺y`, `{x,y} = x∗y − y∗x`.
pub fn subadjacent(a: &PrePoisson) -> Result<PoissonAlgebra> {
    PoissonAlgebra::new(a.succ.add(&a.prec), a.ast.commutator())
}

/// `(A; L_≻, R_≺, L_∗)` as a representation of the sub-adjacent algebra.
pub fn prepoisson_rep(a: &PrePoisson) -> Result<PoissonRep> {
    let base = subadjacent(a)?;
    let n = a.dim();
    PoissonRep::new(
        base,
        n,
        (0..n).map(|x| a.succ.left(x)).collect(),
        (0..n).map(|x| a.prec.right(x)).collect(),
        (0..n).map(|x| a.ast.left(x)).collect(),
    )
}

/// A linear map `T : V → P` (an `n × m` matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOperator(pub Matrix);

impl LinearOperator {
    pub fn zero(n: usize, m: usize) -> Self {
        LinearOperator(Matrix::zeros(n, m))
    }

    pub fn identity(n: usize) -> Self {
        LinearOperator(Matrix::identity(n))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.0.mul_vec(v)
    }

    pub fn image(&self, u: usize) -> Vector {
        self.0.column(u)
    }
}

fn check_shapes(t: &LinearOperator, rep: &PoissonRep) {
    assert_eq!(t.0.rows(), rep.base().dim(), "operator codomain must be the algebra");
    assert_eq!(t.0.cols(), rep.vdim(), "operator domain must be the representation space");
}

/// `T(u)·T(v) = T(ℒ_{T u} v + ℛ_{T v} u)` and `{T u, T v} = T(ρ(T u)v − ρ(T v)u)`.
pub fn o_operator_violations(t: &LinearOperator, rep: &PoissonRep) -> Vec<Violation> {
    check_shapes(t, rep);
    let p = rep.base();
    let m = rep.vdim();
    let imgs: Vec<Vector> = (0..m).map(|u| t.image(u)).collect();
    let mut r = Report::default();
    for u in 0..m {
        for v in 0..m {
            let (eu, ev) = (e(m, u), e(m, v));
            let (tu, tv) = (&imgs[u], &imgs[v]);
            let inner = &rep.l_of(tu).mul_vec(&ev) + &rep.r_of(tv).mul_vec(&eu);
            r.eq("T(u)T(v) = T(L_{Tu}v + R_{Tv}u)", &[u, v], p.mul(tu, tv), t.apply(&inner));
            let inner = &rep.rho_of(tu).mul_vec(&ev) - &rep.rho_of(tv).mul_vec(&eu);
            r.eq("{Tu,Tv} = T(rho(Tu)v - rho(Tv)u)", &[u, v], p.br(tu, tv), t.apply(&inner));
        }
    }
    r.finish()
}

pub fn is_o_operator(t: &LinearOperator, rep: &PoissonRep) -> bool {
    o_operator_violations(t, rep).is_empty()
}

pub fn is_rota_baxter(p: &PoissonAlgebra, b: &LinearOperator) -> bool {
    is_o_operator(b, &regular_rep(p))
}

/// `u≻v = ℒ_{T u}v`, `u≺v = ℛ_{T v}u`, `u∗v = ρ(T u)v` on `V`.
pub fn induced_pre_poisson(t: &LinearOperator, rep: &PoissonRep) -> Result<PrePoisson> {
    if !is_o_operator(t, rep) {
        return Err(Error::NotOOperator);
    }
    let m = rep.vdim();
    let imgs: Vec<Vector> = (0..m).map(|u| t.image(u)).collect();
    let ls: Vec<Matrix> = imgs.iter().map(|x| rep.l_of(x)).collect();
    let rs: Vec<Matrix> = imgs.iter().map(|x| rep.r_of(x)).collect();
    let rhos: Vec<Matrix> = imgs.iter().map(|x| rep.rho_of(x)).collect();
    PrePoisson::new(
        BilinearMap::from_fn(m, |u, v| ls[u].column(v)),
        BilinearMap::from_fn(m, |u, v| rs[v].column(u)),
        BilinearMap::from_fn(m, |u, v| rhos[u].column(v)),
    )
}

/// `T` as a homomorphism from the sub-adjacent algebra of `V` to `P`.
pub fn homomorphism_violations(t: &LinearOperator, source: &PoissonAlgebra, target: &PoissonAlgebra) -> Vec<Violation> {
    let m = source.dim();
    let mut r = Report::default();
    for u in 0..m {
        for v in 0..m {
            let (tu, tv) = (t.image(u), t.image(v));
            r.eq("T(u.v) = Tu.Tv", &[u, v], t.apply(source.dot().product(u, v)), target.mul(&tu, &tv));
            r.eq("T{u,v} = {Tu,Tv}", &[u, v], t.apply(source.bracket().product(u, v)), target.br(&tu, &tv));
        }
    }
    r.finish()
}

/// `𝒮 = P ⋉ V*` (dual representation) and `T̄ = T − τ(T)` with
/// `T ↦ Σ_i T(v_i) ⊗ v_i*`.
pub fn lift_operator(t: &LinearOperator, rep: &PoissonRep) -> Result<(PoissonAlgebra, Tensor2)> {
    check_shapes(t, rep);
    if !rep.base().is_coherent() {
        return Err(Error::PremiseViolated("base algebra is not coherent".into()));
    }
    if rep.classify()? != RepKind::FullCoherent {
        return Err(Error::PremiseViolated("representation does not satisfy the coherence condition".into()));
    }
    let s = semidirect(&dualize(rep))?;
    let (n, m) = (rep.base().dim(), rep.vdim());
    let mut mat = Matrix::zeros(n + m, n + m);
    for i in 0..m {
        for (k, c) in t.image(i).nonzero() {
            mat[(k, n + i)] += c;
            mat[(n + i, k)] -= c;
        }
    }
    Ok((s, Tensor2::from_matrix(mat)?))
}

/// For invertible `T`: `x≻y = T(ℒ_x T⁻¹y)`, `x≺y = T(ℛ_y T⁻¹x)`, `x∗y = T(ρ(x)T⁻¹y)` on `P`.
pub fn transport(t: &LinearOperator, rep: &PoissonRep) -> Result<PrePoisson> {
    if !is_o_operator(t, rep) {
        return Err(Error::NotOOperator);
    }
    let inv = t.0.invert()?;
    let n = rep.base().dim();
    let back: Vec<Vector> = (0..n).map(|y| inv.column(y)).collect();
    let through = |m: &Matrix, v: &Vector| t.apply(&m.mul_vec(v));
    PrePoisson::new(
        BilinearMap::from_fn(n, |x, y| through(rep.l(x), &back[y])),
        BilinearMap::from_fn(n, |x, y| through(rep.r(y), &back[x])),
        BilinearMap::from_fn(n, |x, y| through(rep.rho(x), &back[y])),
    )
}

/// Every Rota–Baxter operator on `P` whose matrix has entries in `{−1, 0, 1}`
/// and at most `max_nonzero` nonzero entries, in a fixed enumeration order.
pub fn rota_baxter_search(p: &PoissonAlgebra, max_nonzero: usize) -> Vec<LinearOperator> {
    let n = p.dim();
    let rep = regular_rep(p);
    let cells = n * n;
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    search(&rep, cells, max_nonzero, 0, &mut chosen, &mut found);
    found
}

fn search(rep: &PoissonRep, cells: usize, budget: usize, start: usize, chosen: &mut Vec<(usize, i64)>, found: &mut Vec<LinearOperator>) {
    let n = rep.vdim();
    let mut m = Matrix::zeros(n, n);
    for &(c, s) in chosen.iter() {
        m[(c / n, c % n)] = Scalar::from_integer(s.into());
    }
    let op = LinearOperator(m);
    if is_o_operator(&op, rep) {
        found.push(op);
    }
    if chosen.len() == budget {
        return;
    }
    for c in start..cells {
        for s in [1, -1] {
            chosen.push((c, s));
            search(rep, cells, budget, c + 1, chosen, found);
            chosen.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::standard_poisson;
    use crate::fixtures::{example_3d, r_example_3d};
    use crate::scalar::int;
    use crate::yang_baxter::{induced_dual, is_pybe};

    fn bm(n: usize, e: &[(usize, usize, usize, i64)]) -> BilinearMap {
        BilinearMap::from_entries(n, e.iter().map(|&(k, i, j, c)| (k, i, j, int(c))))
    }

    /// `e1≻e1 = e2`, everything else zero.
    fn small_dendriform() -> (BilinearMap, BilinearMap) {
        (bm(2, &[(1, 0, 0, 1)]), BilinearMap::zero(2))
    }

    #[test]
    fn dendriform_examples() {
        assert!(check_dendriform(&BilinearMap::zero(2), &BilinearMap::zero(2)));
        assert!(check_dendriform(&bm(1, &[(0, 0, 0, 1)]), &BilinearMap::zero(1)));
        let (s, p) = small_dendriform();
        assert!(check_dendriform(&s, &p));
        assert!(!check_dendriform(&bm(1, &[(0, 0, 0, 1)]), &bm(1, &[(0, 0, 0, 1)])));
    }

    #[test]
    fn prelie_examples() {
        assert!(check_prelie(&BilinearMap::zero(2)));
        assert!(check_prelie(&bm(2, &[(1, 0, 0, 1)])));
        // e1∗e1 = e2, e2∗e1 = e1: (e1∗e1)∗e1 − e1∗(e1∗e1) = e1 but the swap is trivial
        assert!(check_prelie(&bm(2, &[(1, 0, 0, 1), (0, 1, 0, 1)])) == prelie_violations(&bm(2, &[(1, 0, 0, 1), (0, 1, 0, 1)])).is_empty());
        // e1∗e2 = e1: (e1∗e2)∗e2 − e1∗(e2∗e2) = e1, (e2∗e1)∗e2 − e2∗(e1∗e2) = 0
        assert!(!check_prelie(&bm(2, &[(0, 0, 1, 1)])));
    }

    #[test]
    fn hbar_structure_is_coherent_and_subadjacent_is_standard() {
        let succ = bm(1, &[(0, 0, 0, 1)]);
        let prec = BilinearMap::zero(1);
        let a = PrePoisson::with_hbar(succ.clone(), prec.clone(), &int(3)).unwrap();
        assert!(a.is_coherent());
        let p = subadjacent(&a).unwrap();
        assert_eq!(p, standard_poisson(&succ.add(&prec), &int(3)).unwrap());
        assert_eq!(subadjacent(&PrePoisson::zero(2)).unwrap(), PoissonAlgebra::zero(2));
    }

    #[test]
    fn perturbed_ast_is_rejected() {
        let (s, p) = small_dendriform();
        assert_eq!(check_pre_poisson(&s, &p, &ast_hbar(&s, &p, &int(1))), Ok(PrePoissonVerdict::YesCoherent));
        // e1∗e2 = e2 is pre-Lie but breaks (x*y - y*x)>z = x*(y>z) - y>(x*z) at (e1, e1, e1)
        let ast = bm(2, &[(1, 0, 1, 1)]);
        assert!(check_prelie(&ast));
        assert_eq!(check_pre_poisson(&s, &p, &ast), Ok(PrePoissonVerdict::No));
        assert_eq!(PrePoisson::new(s.clone(), p.clone(), ast), Err(Error::NotPrePoisson));
        let one = bm(1, &[(0, 0, 0, 1)]);
        assert!(matches!(check_pre_poisson(&one, &one, &BilinearMap::zero(1)), Err(Error::ComponentInvalid(_))));
    }

    #[test]
    fn identity_is_o_operator_on_prepoisson_rep() {
        let a = PrePoisson::with_hbar(bm(2, &[(1, 0, 0, 1)]), BilinearMap::zero(2), &int(2)).unwrap();
        let rep = prepoisson_rep(&a).unwrap();
        assert!(rep.classify().unwrap() >= RepKind::Full);
        assert!(is_o_operator(&LinearOperator::identity(2), &rep));
        assert_eq!(induced_pre_poisson(&LinearOperator::identity(2), &rep).unwrap(), a);
    }

    #[test]
    fn rota_baxter_basics() {
        let p = example_3d(&int(1), &int(1), &int(1));
        assert!(is_rota_baxter(&p, &LinearOperator::zero(3, 3)));
        assert!(!is_rota_baxter(&p, &LinearOperator::identity(3)));
        let q = example_3d(&int(0), &int(0), &int(0));
        let found = rota_baxter_search(&q, 2);
        assert!(found.len() > 1);
        assert!(found.iter().all(|b| is_rota_baxter(&q, b)));
    }

    #[test]
    fn r_sharp_is_o_operator() {
        let p = example_3d(&int(1), &int(1), &int(1));
        let r = r_example_3d(&int(1), &int(1));
        let rep = dualize(&regular_rep(&p));
        let t = LinearOperator(r.sharp());
        assert!(is_o_operator(&t, &rep));
        let a = induced_pre_poisson(&t, &rep).unwrap();
        assert!(a.is_coherent());
        let sub = subadjacent(&a).unwrap();
        assert_eq!(sub, induced_dual(&p, &r).unwrap());
        assert!(homomorphism_violations(&t, &sub, &p).is_empty());
    }

    #[test]
    fn lift_of_zero_and_identity() {
        let a = PrePoisson::with_hbar(bm(2, &[(1, 0, 0, 1)]), BilinearMap::zero(2), &int(1)).unwrap();
        let rep = prepoisson_rep(&a).unwrap();
        let (s, t0) = lift_operator(&LinearOperator::zero(2, 2), &rep).unwrap();
        assert!(t0.is_zero());
        assert_eq!(s.dim(), 4);
        let (s, r) = lift_operator(&LinearOperator::identity(2), &rep).unwrap();
        assert_eq!(r, Tensor2::wedge(4, &[(0, 2, int(1)), (1, 3, int(1))]));
        assert_eq!(is_pybe(&s, &r), Ok(true));
    }

    #[test]
    fn transport_recovers_algebra() {
        let a = PrePoisson::with_hbar(bm(2, &[(1, 0, 0, 1)]), BilinearMap::zero(2), &int(1)).unwrap();
        let rep = prepoisson_rep(&a).unwrap();
        let t = transport(&LinearOperator::identity(2), &rep).unwrap();
        assert_eq!(subadjacent(&t).unwrap(), *rep.base());
    }
}
