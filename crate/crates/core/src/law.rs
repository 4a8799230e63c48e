use std::fmt;

use crate::linalg::Vector;

/// One failed instance of an identity: the basis tuple it was evaluated at and
/// the two sides that should have agreed. Identities of the form `expr = 0`
/// report `expr` as `lhs` and the zero vector as `rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub identity: &'static str,
    pub at: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Violation {
    pub fn new(identity: &'static str, at: Vec<usize>, lhs: Vector, rhs: Vector) -> Self {
        Violation { identity, at, lhs, rhs }
    }

    pub fn nonzero(identity: &'static str, at: Vec<usize>, value: Vector) -> Self {
        let n = value.len();
        Violation { identity, at, lhs: value, rhs: Vector::zeros(n) }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: {} != {}", self.identity, self.at, self.lhs, self.rhs)
    }
}

/// Collects violations of `lhs = rhs`.
#[derive(Default, Debug)]
pub(crate) struct Report(pub Vec<Violation>);

impl Report {
    pub fn eq(&mut self, identity: &'static str, at: &[usize], lhs: Vector, rhs: Vector) {
        if lhs != rhs {
            self.0.push(Violation::new(identity, at.to_vec(), lhs, rhs));
        }
    }

    pub fn zero(&mut self, identity: &'static str, at: &[usize], value: Vector) {
        if !value.is_zero() {
            self.0.push(Violation::nonzero(identity, at.to_vec(), value));
        }
    }

    pub fn finish(self) -> Vec<Violation> {
        self.0
    }
}
