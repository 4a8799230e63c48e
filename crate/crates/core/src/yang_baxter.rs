//! Two-tensors `r ∈ P ⊗ P`, the associative, classical and Poisson
//! Yang–Baxter equations, and the coboundary bialgebras they produce.

use crate::algebra::{BilinearMap, PoissonAlgebra};
use crate::bialgebra::{manin_from_bialgebra, BilinForm, Bialgebra, Comult};
use crate::error::{Error, Result};
use crate::law::{Report, Violation};
use crate::linalg::{Matrix, Tensor3, Vector};
use crate::scalar::{rat, Scalar};

/// `Σ r[i][j] e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor2 {
    m: Matrix,
}

impl Tensor2 {
    pub fn zero(n: usize) -> Self {
        Tensor2 { m: Matrix::zeros(n, n) }
    }

    pub fn from_matrix(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch(format!("a two-tensor needs a square matrix, got {}x{}", m.rows(), m.cols())));
        }
        Ok(Tensor2 { m })
    }

    /// Row-major `i·n + j` layout, as used for `P ⊗ P` elsewhere.
    pub fn from_vector(n: usize, v: &Vector) -> Self {
        assert_eq!(v.len(), n * n, "tensor length mismatch");
        Tensor2 { m: Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()) }
    }

    /// `Σ c (e_i ⊗ e_j − e_j ⊗ e_i)` over the given `(i, j, c)`.
    pub fn wedge(n: usize, terms: &[(usize, usize, Scalar)]) -> Self {
        let mut m = Matrix::zeros(n, n);
        for (i, j, c) in terms {
            m[(*i, *j)] += c;
            m[(*j, *i)] -= c;
        }
        Tensor2 { m }
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn coeff(&self, i: usize, j: usize) -> &Scalar {
        &self.m[(i, j)]
    }

    pub fn to_vector(&self) -> Vector {
        self.m.flatten()
    }

    pub fn tau(&self) -> Tensor2 {
        Tensor2 { m: self.m.transpose() }
    }

    pub fn skew_part(&self) -> Tensor2 {
        Tensor2 { m: (&self.m - &self.m.transpose()).scale(&rat(1, 2)) }
    }

    pub fn sym_part(&self) -> Tensor2 {
        Tensor2 { m: (&self.m + &self.m.transpose()).scale(&rat(1, 2)) }
    }

    pub fn is_skew(&self) -> bool {
        (&self.m + &self.m.transpose()).is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        self.m == self.m.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    /// `r♯ : P* → P` with `⟨r♯(α), β⟩ = r(α, β)`; its matrix is `rᵀ`.
    pub fn sharp(&self) -> Matrix {
        self.m.transpose()
    }

    fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        self.m.entries().filter(|(_, _, c)| !num_traits::Zero::is_zero(*c)).map(|(i, j, c)| (i, j, c.clone())).collect()
    }
}

impl std::ops::Add for &Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        Tensor2 { m: &self.m + &rhs.m }
    }
}

impl std::ops::Sub for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        Tensor2 { m: &self.m - &rhs.m }
    }
}

pub fn tau(r: &Tensor2) -> Tensor2 {
    r.tau()
}

/// `A(r)` or `C(r)` in `P ⊗ P ⊗ P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YbResidual(pub Tensor3);

impl YbResidual {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn tensor(&self) -> &Tensor3 {
        &self.0
    }
}

fn check_dims(p: &PoissonAlgebra, r: &Tensor2) {
    assert_eq!(p.dim(), r.dim(), "tensor and algebra dimensions differ");
}

/// `A(r) = r₁₂·r₁₃ + r₁₃·r₂₃ − r₂₃·r₁₂`.
pub fn aybe(p: &PoissonAlgebra, r: &Tensor2) -> YbResidual {
    check_dims(p, r);
    YbResidual(a_of(p.dot(), r))
}

/// `C(r) = [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃]`.
pub fn cybe(p: &PoissonAlgebra, r: &Tensor2) -> YbResidual {
    check_dims(p, r);
    YbResidual(c_of(p.bracket(), r))
}

/// With `r = Σ a_i ⊗ b_i`: `Σ a_i a_j ⊗ b_i ⊗ b_j + Σ a_i ⊗ a_j ⊗ b_i b_j − Σ a_j ⊗ a_i b_j ⊗ b_i`.
pub fn a_of(dot: &BilinearMap, r: &Tensor2) -> Tensor3 {
    let mut t = Tensor3::zeros(r.dim());
    let terms = r.terms();
    for (p, q, u) in &terms {
        for (s, w, v) in &terms {
            let uv = u * v;
            for (k, c) in dot.product(*p, *s).nonzero() {
                t.add_at((k, *q, *w), &(&uv * c));
            }
            for (k, c) in dot.product(*q, *w).nonzero() {
                t.add_at((*p, *s, k), &(&uv * c));
            }
            for (k, c) in dot.product(*p, *w).nonzero() {
                t.add_at((*s, k, *q), &-(&uv * c));
            }
        }
    }
    t
}

/// With `r = Σ a_i ⊗ b_i`: `Σ [a_i,a_j] ⊗ b_i ⊗ b_j + Σ a_i ⊗ [b_i,a_j] ⊗ b_j + Σ a_i ⊗ a_j ⊗ [b_i,b_j]`.
pub fn c_of(bracket: &BilinearMap, r: &Tensor2) -> Tensor3 {
    let mut t = Tensor3::zeros(r.dim());
    let terms = r.terms();
    for (p, q, u) in &terms {
        for (s, w, v) in &terms {
            let uv = u * v;
            for (k, c) in bracket.product(*p, *s).nonzero() {
                t.add_at((k, *q, *w), &(&uv * c));
            }
            for (k, c) in bracket.product(*q, *s).nonzero() {
                t.add_at((*p, k, *w), &(&uv * c));
            }
            for (k, c) in bracket.product(*q, *w).nonzero() {
                t.add_at((*p, *s, k), &(&uv * c));
            }
        }
    }
    t
}

pub fn is_pybe(p: &PoissonAlgebra, r: &Tensor2) -> Result<bool> {
    if !p.is_coherent() {
        return Err(Error::NotCoherent);
    }
    Ok(aybe(p, r).is_zero() && cybe(p, r).is_zero())
}

/// `Δ(x) = (1⊗L_x − R_x⊗1) r` and `δ(x) = (ad_x⊗1 + 1⊗ad_x) r`.
pub fn coboundary_comults(p: &PoissonAlgebra, r: &Tensor2) -> (Comult, Comult) {
    check_dims(p, r);
    let n = p.dim();
    let id = Matrix::identity(n);
    let rv = r.to_vector();
    let coproduct = Comult::from_fn(n, |x| (&id.kron(&p.l(x)) - &p.r(x).kron(&id)).mul_vec(&rv));
    let cobracket = Comult::from_fn(n, |x| (&p.ad(x).kron(&id) + &id.kron(&p.ad(x))).mul_vec(&rv));
    (coproduct, cobracket)
}

/// Residual tensors for the six conditions under which the coboundary
/// `(Δ, δ)` of `r` is a pseudo-Poisson bialgebra.
pub fn coboundary_condition_violations(p: &PoissonAlgebra, r: &Tensor2) -> Result<[Vec<Violation>; 6]> {
    if !p.is_coherent() {
        return Err(Error::NotCoherent);
    }
    check_dims(p, r);
    let n = p.dim();
    let id = Matrix::identity(n);
    let s = (r + &r.tau()).to_vector();
    let a = a_of(p.dot(), r);
    let c = c_of(p.bracket(), r);
    let lr = |x: usize| &id.kron(&p.l(x)) - &p.r(x).kron(&id);
    let rl = |x: usize| &p.l(x).kron(&id) - &id.kron(&p.r(x));
    let ad2 = |x: usize| &p.ad(x).kron(&id) + &id.kron(&p.ad(x));
    let mut out: [Report; 6] = Default::default();
    for x in 0..n {
        out[1].zero("(ad_x⊗1 + 1⊗ad_x)(r + τr) = 0", &[x], ad2(x).mul_vec(&s));
        for y in 0..n {
            out[0].zero("(L_x⊗1 − 1⊗R_x)(1⊗L_y − R_y⊗1)(r + τr) = 0", &[x, y], rl(x).mul_vec(&lr(y).mul_vec(&s)));
            out[2].zero("(ad_x⊗1)(1⊗L_y − R_y⊗1)(r + τr) = 0", &[x, y], p.ad(x).kron(&id).mul_vec(&lr(y).mul_vec(&s)));
        }
        let iv = &a.apply_leg(2, &p.l(x)) - &a.apply_leg(0, &p.r(x));
        out[3].zero("(1⊗1⊗L_x − R_x⊗1⊗1)A(r) = 0", &[x], Vector::from_vec(iv.as_slice().to_vec()));
        let ad = p.ad(x);
        let v = &(&c.apply_leg(0, &ad) + &c.apply_leg(1, &ad)) + &c.apply_leg(2, &ad);
        out[4].zero("(ad_x⊗1⊗1 + 1⊗ad_x⊗1 + 1⊗1⊗ad_x)C(r) = 0", &[x], Vector::from_vec(v.as_slice().to_vec()));
        let mut vi = &a.apply_leg(0, &ad) + &(&c.apply_leg(2, &p.l(x)) - &c.apply_leg(1, &p.r(x)));
        let m = lr(x).mul_vec(&s);
        for (pp, q, coef) in r.terms() {
            let w = id.kron(&p.ad(pp)).mul_vec(&m);
            for (k, val) in w.nonzero() {
                // τ(e_i ⊗ e_j) ⊗ e_q = e_j ⊗ e_i ⊗ e_q
                let (i, j) = (k / n, k % n);
                vi.add_at((j, i, q), &(&coef * val));
            }
        }
        out[5].zero("sixth coboundary condition", &[x], Vector::from_vec(vi.as_slice().to_vec()));
    }
    Ok(out.map(Report::finish))
}

pub fn coboundary_conditions(p: &PoissonAlgebra, r: &Tensor2) -> Result<[bool; 6]> {
    Ok(coboundary_condition_violations(p, r)?.map(|v| v.is_empty()))
}

pub fn r_sharp(r: &Tensor2) -> Matrix {
    r.sharp()
}

/// `α·β = −R*_{r♯α}β − L*_{r♯β}α`, `[α,β] = ad*_{r♯α}β − ad*_{r♯β}α` on `P*`.
pub fn induced_dual(p: &PoissonAlgebra, r: &Tensor2) -> Result<PoissonAlgebra> {
    if !r.is_skew() {
        return Err(Error::NotSkew);
    }
    if !is_pybe(p, r)? {
        return Err(Error::NotPybe);
    }
    let n = p.dim();
    let sharp = r.sharp();
    let img: Vec<Vector> = sharp.columns();
    // with X* = −Xᵀ: −R*_u β = R_uᵀ β and ad*_u β = −ad_uᵀ β
    let rt: Vec<Matrix> = img.iter().map(|u| p.dot().right_of(u).transpose()).collect();
    let lt: Vec<Matrix> = img.iter().map(|u| p.dot().left_of(u).transpose()).collect();
    let adt: Vec<Matrix> = img.iter().map(|u| p.bracket().left_of(u).transpose()).collect();
    let dot = BilinearMap::from_fn(n, |a, b| &rt[a].column(b) + &lt[b].column(a));
    let bracket = BilinearMap::from_fn(n, |a, b| &adt[b].column(a) - &adt[a].column(b));
    PoissonAlgebra::new(dot, bracket)
}

/// `(1⊗L_x − R_x⊗1)s = 0` and `(ad_x⊗1 + 1⊗ad_x)s = 0` for every basis `x`.
pub fn lrad_violations(p: &PoissonAlgebra, s: &Tensor2) -> Vec<Violation> {
    check_dims(p, s);
    let n = p.dim();
    let id = Matrix::identity(n);
    let v = s.to_vector();
    let mut rep = Report::default();
    for x in 0..n {
        rep.zero("(1⊗L_x − R_x⊗1)s = 0", &[x], (&id.kron(&p.l(x)) - &p.r(x).kron(&id)).mul_vec(&v));
        rep.zero("(ad_x⊗1 + 1⊗ad_x)s = 0", &[x], (&p.ad(x).kron(&id) + &id.kron(&p.ad(x))).mul_vec(&v));
    }
    rep.finish()
}

pub fn check_lrad_invariant(p: &PoissonAlgebra, s: &Tensor2) -> bool {
    lrad_violations(p, s).is_empty()
}

/// `ad*_{s♯α·s♯β}γ + ad*_{s♯γ·s♯α}β + ad*_{s♯β·s♯γ}α = 0` on dual basis triples.
pub fn check_sym_condition(p: &PoissonAlgebra, s: &Tensor2) -> Result<bool> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    check_dims(p, s);
    let n = p.dim();
    let img = s.sharp().columns();
    let co_ad = |x: &Vector, g: usize| -&p.bracket().left_of(x).transpose().column(g);
    for a in 0..n {
        for b in 0..n {
            for g in 0..n {
                let t1 = co_ad(&p.mul(&img[a], &img[b]), g);
                let t2 = co_ad(&p.mul(&img[g], &img[a]), b);
                let t3 = co_ad(&p.mul(&img[b], &img[g]), a);
                if !(&(&t1 + &t2) + &t3).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `ω(x, y) = ⟨(r♯)⁻¹x, y⟩`; as a matrix this is `r⁻¹`.
pub fn omega_from_r(r: &Tensor2) -> Result<BilinForm> {
    if !r.is_skew() {
        return Err(Error::NotSkew);
    }
    let inv = r.sharp().invert()?;
    Ok(BilinForm(inv.transpose()))
}

/// Inverse of [`omega_from_r`].
pub fn r_from_omega(omega: &BilinForm) -> Result<Tensor2> {
    if !omega.is_skew() {
        return Err(Error::NotSkew);
    }
    Tensor2::from_matrix(omega.0.invert()?)
}

fn cyclic_form_violations(m: &BilinearMap, omega: &BilinForm, identity: &'static str) -> Vec<Violation> {
    let n = m.dim();
    let e = |i| Vector::basis(n, i);
    let mut rep = Report::default();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let v = omega.eval(m.product(x, y), &e(z)) + omega.eval(m.product(y, z), &e(x)) + omega.eval(m.product(z, x), &e(y));
                rep.zero(identity, &[x, y, z], Vector::from_vec(vec![v]));
            }
        }
    }
    rep.finish()
}

/// `ω(xy,z) + ω(yz,x) + ω(zx,y) = 0`.
pub fn connes_violations(p: &PoissonAlgebra, omega: &BilinForm) -> Vec<Violation> {
    cyclic_form_violations(p.dot(), omega, "ω(xy,z) + ω(yz,x) + ω(zx,y) = 0")
}

pub fn check_connes(p: &PoissonAlgebra, omega: &BilinForm) -> bool {
    connes_violations(p, omega).is_empty()
}

/// `ω({x,y},z) + ω({y,z},x) + ω({z,x},y) = 0`.
pub fn symplectic_violations(p: &PoissonAlgebra, omega: &BilinForm) -> Vec<Violation> {
    cyclic_form_violations(p.bracket(), omega, "ω({x,y},z) + ω({y,z},x) + ω({z,x},y) = 0")
}

pub fn check_symplectic(p: &PoissonAlgebra, omega: &BilinForm) -> bool {
    symplectic_violations(p, omega).is_empty()
}

/// The double `𝒟 = P ⊕ P*` of a full bialgebra with `r = Σ e_i ⊗ e_i*`.
pub fn drinfeld_double_r(b: &Bialgebra) -> Result<(PoissonAlgebra, Tensor2)> {
    let (d, _) = manin_from_bialgebra(b)?;
    let n = b.base.dim();
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        m[(i, n + i)] = Scalar::from_integer(1.into());
    }
    Ok((d, Tensor2 { m }))
}

/// The structure on `𝒟* = P* ⊕ P` as usually displayed,
/// `(x+α)∗(y+β) = x·y − α·β` and `{x+α, y+β} = {x,y} − {α,β}`, with the dual
/// of `e_i` (an element of `P*`) at index `i` and the dual of `e_i*` (an element of `P`) at `n + i`.
pub fn drinfeld_dual_display(p: &PoissonAlgebra, pstar: &PoissonAlgebra) -> Result<PoissonAlgebra> {
    let n = p.dim();
    let embed = |on_p: &BilinearMap, on_dual: &BilinearMap| {
        let mut m = BilinearMap::zero(2 * n);
        for (k, i, j, c) in on_p.entries() {
            m.add_entry(n + k, n + i, n + j, &c);
        }
        for (k, i, j, c) in on_dual.entries() {
            m.add_entry(k, i, j, &-c);
        }
        m
    };
    PoissonAlgebra::new(embed(p.dot(), pstar.dot()), embed(p.bracket(), pstar.bracket()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{check_bialgebra, dual_algebra, BialgebraVerdict};
    use crate::fixtures::{example_3d, example_4d, r_example_3d, r_example_4d_second};
    use crate::scalar::int;

    fn p3() -> PoissonAlgebra {
        example_3d(&int(1), &int(1), &int(1))
    }

    #[test]
    fn tau_and_parts() {
        let r = Tensor2::from_matrix(Matrix::from_fn(3, 3, |i, j| int((i * 3 + j) as i64))).unwrap();
        assert_eq!(r.tau().tau(), r);
        assert_eq!(&r.skew_part() + &r.sym_part(), r);
        assert_eq!(r.tau().skew_part(), &Tensor2::zero(3) - &r.skew_part());
        let w = Tensor2::wedge(3, &[(0, 1, int(1))]);
        assert_eq!(w.tau(), &Tensor2::zero(3) - &w);
        let mut single = Tensor2::zero(3);
        single.m[(0, 1)] = int(1);
        assert_eq!(single.tau().coeff(1, 0), &int(1));
    }

    #[test]
    fn fixture_solutions() {
        let p = p3();
        let r = r_example_3d(&int(2), &int(-3));
        assert!(aybe(&p, &r).is_zero());
        assert!(cybe(&p, &r).is_zero());
        assert_eq!(is_pybe(&p, &Tensor2::zero(3)), Ok(true));
        let extra = &r + &Tensor2::wedge(3, &[(0, 1, int(1))]);
        assert_eq!(is_pybe(&p, &extra), Ok(false));
        let q = example_4d(&int(1), &int(2), &int(3));
        assert_eq!(is_pybe(&q, &r_example_4d_second(&int(1), &int(5))), Ok(true));
    }

    /// `C(r)` with the middle term taken as `Σ a_i ⊗ [a_j, b_i] ⊗ b_j`.
    fn c_swapped(bracket: &BilinearMap, r: &Tensor2) -> Tensor3 {
        let mut t = c_of(bracket, r);
        let terms = r.terms();
        for (p, q, u) in &terms {
            for (s, w, v) in &terms {
                let uv = u * v;
                for (k, c) in bracket.product(*q, *s).nonzero() {
                    t.add_at((*p, k, *w), &(int(-2) * &uv * c));
                }
            }
        }
        t
    }

    #[test]
    fn leg_swap_breaks_a_solution() {
        let (p, r) = (p3(), r_example_3d(&int(1), &int(2)));
        assert!(cybe(&p, &r).is_zero());
        assert!(!c_swapped(p.bracket(), &r).is_zero());
    }

    #[test]
    fn coboundary_shapes() {
        let p = p3();
        let (d, dl) = coboundary_comults(&p, &Tensor2::zero(3));
        assert!(d.is_zero() && dl.is_zero());
        let r = r_example_3d(&int(1), &int(1));
        let (d, dl) = coboundary_comults(&p, &r);
        assert!(dl.is_antisymmetric());
        assert!(d.of(2).is_zero());
    }

    #[test]
    fn conditions_for_fixture_and_zero() {
        let p = p3();
        assert_eq!(coboundary_conditions(&p, &r_example_3d(&int(1), &int(2))), Ok([true; 6]));
        assert_eq!(coboundary_conditions(&p, &Tensor2::zero(3)), Ok([true; 6]));
    }

    #[test]
    fn induced_dual_matches_coboundary_dual() {
        let p = p3();
        let r = r_example_3d(&int(1), &int(1));
        let (d, dl) = coboundary_comults(&p, &r);
        let two_ways = induced_dual(&p, &r).unwrap();
        assert_eq!(two_ways, dual_algebra(&d, &dl).unwrap());
        assert!(two_ways.is_coherent());
        let sharp = r_sharp(&r);
        for a in 0..3 {
            for b in 0..3 {
                let (ea, eb) = (Vector::basis(3, a), Vector::basis(3, b));
                let (sa, sb) = (sharp.mul_vec(&ea), sharp.mul_vec(&eb));
                assert_eq!(sharp.mul_vec(&two_ways.mul(&ea, &eb)), p.mul(&sa, &sb));
                assert_eq!(sharp.mul_vec(&two_ways.br(&ea, &eb)), p.br(&sa, &sb));
            }
        }
        assert_eq!(induced_dual(&p, &Tensor2::zero(3)).unwrap(), PoissonAlgebra::zero(3));
        let sym = Tensor2::from_matrix(Matrix::identity(3)).unwrap();
        assert_eq!(induced_dual(&p, &sym), Err(Error::NotSkew));
        assert_eq!(induced_dual(&p, &Tensor2::wedge(3, &[(0, 1, int(1))])), Err(Error::NotPybe));
    }

    #[test]
    fn invariance_and_symmetric_condition() {
        let p = p3();
        assert!(check_lrad_invariant(&p, &Tensor2::zero(3)));
        let mut s = Tensor2::zero(3);
        s.m[(0, 0)] = int(1);
        assert!(!check_lrad_invariant(&p, &s));
        assert_eq!(check_sym_condition(&p, &Tensor2::zero(3)), Ok(true));
        assert_eq!(check_sym_condition(&p, &Tensor2::wedge(3, &[(0, 1, int(1))])), Err(Error::NotSymmetric));
        // s♯ hits e1 and e2, whose product e3 is not central for the bracket
        let mut s = Tensor2::zero(3);
        s.m[(0, 0)] = int(1);
        s.m[(1, 1)] = int(1);
        assert_eq!(check_sym_condition(&p, &s), Ok(false));
    }

    #[test]
    fn omega_round_trip() {
        let abelian = PoissonAlgebra::zero(2);
        let r = Tensor2::wedge(2, &[(0, 1, int(3))]);
        let w = omega_from_r(&r).unwrap();
        assert!(w.is_skew());
        assert_eq!(r_from_omega(&w).unwrap(), r);
        assert!(check_connes(&abelian, &w) && check_symplectic(&abelian, &w));
        assert_eq!(omega_from_r(&Tensor2::wedge(2, &[])), Err(Error::SingularMatrix));
    }

    #[test]
    fn drinfeld_double_of_fixture() {
        let p = p3();
        let r = r_example_3d(&int(1), &int(1));
        let (d, dl) = coboundary_comults(&p, &r);
        let b = Bialgebra::new(p, d, dl).unwrap();
        let (dd, rr) = drinfeld_double_r(&b).unwrap();
        assert_eq!(is_pybe(&dd, &rr), Ok(true));
        assert!(check_lrad_invariant(&dd, &rr.sym_part()));
        assert_eq!(check_sym_condition(&dd, &rr.sym_part()), Ok(true));
        let (d2, dl2) = coboundary_comults(&dd, &rr);
        let computed = dual_algebra(&d2, &dl2).unwrap();
        let display = drinfeld_dual_display(&b.base, &b.dual().unwrap()).unwrap();
        assert_ne!(computed, display);
        // −id is an isomorphism from the display to the computed structure
        let negated = PoissonAlgebra::new(display.dot().scale(&int(-1)), display.bracket().scale(&int(-1))).unwrap();
        assert_eq!(computed, negated);
        assert!(display.is_coherent());
        let b2 = Bialgebra::new(dd, d2, dl2).unwrap();
        assert_eq!(check_bialgebra(&b2), BialgebraVerdict::Full);
    }
}
