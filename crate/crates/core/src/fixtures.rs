//! Structure constants of the reference algebras and r-matrices,
//! transcribed with 0-based basis indices (`e1` is index 0).

use crate::algebra::{BilinearMap, PoissonAlgebra};
use crate::scalar::{int, Scalar};
use crate::yang_baxter::Tensor2;

/// Three-dimensional coherent algebra with `e1·e2 = e3`, `e2·e1 = −e3` and
/// `{e1,e2} = a e1 + b e2 + c e3`, `{e1,e3} = b e3`, `{e2,e3} = −a e3`.
pub fn example_3d(a: &Scalar, b: &Scalar, c: &Scalar) -> PoissonAlgebra {
    PoissonAlgebra::new(example_3d_dot(), example_3d_bracket(a, b, c)).expect("three-dimensional example is Poisson")
}

pub fn example_3d_dot() -> BilinearMap {
    BilinearMap::from_entries(3, [(2, 0, 1, int(1)), (2, 1, 0, int(-1))])
}

pub fn example_3d_bracket(a: &Scalar, b: &Scalar, c: &Scalar) -> BilinearMap {
    antisymmetric(3, &[(0, 0, 1, a.clone()), (1, 0, 1, b.clone()), (2, 0, 1, c.clone()), (2, 0, 2, b.clone()), (2, 1, 2, -a)])
}

/// Four-dimensional coherent algebra with `e1·e1 = e1·e2 = e3·e2 = e4`,
/// `e3·e3 = −e4` and `{e1,e2} = a e4`, `{e1,e3} = b e4`, `{e2,e3} = c e4`.
pub fn example_4d(a: &Scalar, b: &Scalar, c: &Scalar) -> PoissonAlgebra {
    PoissonAlgebra::new(example_4d_dot(), example_4d_bracket(a, b, c)).expect("four-dimensional example is Poisson")
}

pub fn example_4d_dot() -> BilinearMap {
    BilinearMap::from_entries(4, [(3, 0, 0, int(1)), (3, 0, 1, int(1)), (3, 2, 1, int(1)), (3, 2, 2, int(-1))])
}

pub fn example_4d_bracket(a: &Scalar, b: &Scalar, c: &Scalar) -> BilinearMap {
    antisymmetric(4, &[(3, 0, 1, a.clone()), (3, 0, 2, b.clone()), (3, 1, 2, c.clone())])
}

/// `κ₁₃ e1∧e3 + κ₂₃ e2∧e3`, a solution in [`example_3d`] for all parameters.
pub fn r_example_3d(k13: &Scalar, k23: &Scalar) -> Tensor2 {
    Tensor2::wedge(3, &[(0, 2, k13.clone()), (1, 2, k23.clone())])
}

/// `κ₁₂ e1∧e2 + κ₁₄ e1∧e4 + κ₁₂ e2∧e3 + κ₂₄ e2∧e4 − κ₁₄ e3∧e4` in
/// [`example_4d`]. The classical residual is `±κ₁₂²(a + c)`, so this is a
/// solution only when `κ₁₂ = 0` or `a = −c`.
pub fn r_example_4d_first(k12: &Scalar, k14: &Scalar, k24: &Scalar) -> Tensor2 {
    Tensor2::wedge(4, &[(0, 1, k12.clone()), (0, 3, k14.clone()), (1, 2, k12.clone()), (1, 3, k24.clone()), (2, 3, -k14)])
}

/// `κ₁₄ e1∧e4 + κ₂₄ e2∧e4 + (κ₁₄ + κ₂₄) e3∧e4` in [`example_4d`].
pub fn r_example_4d_second(k14: &Scalar, k24: &Scalar) -> Tensor2 {
    Tensor2::wedge(4, &[(0, 3, k14.clone()), (1, 3, k24.clone()), (2, 3, k14 + k24)])
}

/// Path algebra of the Kronecker quiver (`e1, e2` idempotents, arrows `a, b`
/// with `e1·a = a = a·e2`, `e1·b = b = b·e2`) with `{a, b} = −a`. It is Poisson
/// but not coherent.
pub fn kronecker() -> PoissonAlgebra {
    let dot = BilinearMap::from_entries(
        4,
        [(0, 0, 0), (1, 1, 1), (2, 0, 2), (2, 2, 1), (3, 0, 3), (3, 3, 1)].map(|(k, i, j)| (k, i, j, int(1))),
    );
    PoissonAlgebra::new(dot, antisymmetric(4, &[(2, 2, 3, int(-1))])).expect("Kronecker algebra is Poisson")
}

/// Bracket with `{e_i, e_j} = Σ c e_k` for each `(k, i, j, c)` with `i < j`.
fn antisymmetric(n: usize, upper: &[(usize, usize, usize, Scalar)]) -> BilinearMap {
    BilinearMap::from_entries(
        n,
        upper
            .iter()
            .flat_map(|(k, i, j, c)| [(*k, *i, *j, c.clone()), (*k, *j, *i, -c)]),
    )
}
