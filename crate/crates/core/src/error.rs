use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("product is not associative")]
    NotAssociative,
    #[error("bracket is not a Lie bracket")]
    NotLie,
    #[error("bracket is not a derivation of the product (Leibniz rule fails)")]
    NotLeibniz,
    #[error("algebra is not coherent")]
    NotCoherent,
    #[error("not a quasi-representation: {0}")]
    NotQuasiRep(String),
    #[error("representation does not satisfy rho(x.y) = L_x rho(y) + R_y rho(x)")]
    RepNotFull,
    #[error("cochain degree ({i},{j}) unsupported")]
    DegreeUnsupported { i: usize, j: usize },
    #[error("dual structure is not a noncommutative Poisson algebra: {0}")]
    DualNotPoisson(String),
    #[error("not a matched pair of noncommutative Poisson algebras")]
    NotMatchedPair,
    #[error("subspaces do not split the algebra: {0}")]
    BadSplit(String),
    #[error("not a full noncommutative Poisson bialgebra: {0}")]
    NotFullBialgebra(String),
    #[error("tensor is not skew-symmetric")]
    NotSkew,
    #[error("tensor is not symmetric")]
    NotSymmetric,
    #[error("tensor is not a solution of the Poisson Yang-Baxter equation")]
    NotPybe,
    #[error("component structure invalid: {0}")]
    ComponentInvalid(String),
    #[error("product is not pre-Lie")]
    NotPreLie,
    #[error("not a noncommutative pre-Poisson algebra")]
    NotPrePoisson,
    #[error("operator is not an O-operator")]
    NotOOperator,
    #[error("premise violated: {0}")]
    PremiseViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
