//! Sparse JSON manifests for every structure the tools read or write.
//!
//! ```text
//! {
//!   "kind": "algebra",
//!   "dim": 3,
//!   "params": {"a": [1, 2]},
//!   "dot": [
//!     [2, 0, 1, 1, 1]
//!   ],
//!   "bracket": [
//!     [2, 0, 1, "a"]
//!   ]
//! }
//! ```
//!
//! Each component is a list of entries: indices followed by either `num, den`
//! or one string coefficient written in terms of the parameters. Omitted
//! entries are zero. Parameters in `params` are defaults that `--param`
//! bindings override.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ncpoisson::algebra::{BilinearMap, PoissonAlgebra};
use ncpoisson::bialgebra::{BilinForm, Bialgebra, Comult};
use ncpoisson::linalg::Matrix;
use ncpoisson::operators::{LinearOperator, PrePoisson};
use ncpoisson::rep::PoissonRep;
use ncpoisson::scalar::Scalar;
use ncpoisson::yang_baxter::Tensor2;
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::Value;

use crate::error::CliError;
use crate::expr::{self, Bindings};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Algebra,
    Rep,
    Tensor2,
    Comult,
    Operator,
    Bialgebra,
    PrePoisson,
    Form,
}

impl Kind {
    pub const ALL: [Kind; 8] = [Kind::Algebra, Kind::Rep, Kind::Tensor2, Kind::Comult, Kind::Operator, Kind::Bialgebra, Kind::PrePoisson, Kind::Form];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Rep => "rep",
            Kind::Tensor2 => "tensor2",
            Kind::Comult => "comult",
            Kind::Operator => "operator",
            Kind::Bialgebra => "bialgebra",
            Kind::PrePoisson => "prepoisson",
            Kind::Form => "form",
        }
    }

    fn parse(name: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.name() == name)
    }

    /// Whether the manifest carries a second dimension `vdim`.
    pub fn has_vdim(self) -> bool {
        matches!(self, Kind::Rep | Kind::Operator)
    }

    /// Component names in file order, with their index shapes.
    pub fn components(self) -> &'static [(&'static str, Shape)] {
        use Shape::*;
        const ALGEBRA: [(&str, Shape); 2] = [("dot", Bilinear), ("bracket", Bilinear)];
        match self {
            Kind::Algebra => &ALGEBRA,
            Kind::Rep => &[("dot", Bilinear), ("bracket", Bilinear), ("L", Actions), ("R", Actions), ("rho", Actions)],
            Kind::Tensor2 => &[("dot", Bilinear), ("bracket", Bilinear), ("r", Square)],
            Kind::Comult => &[("coproduct", Coproduct), ("cobracket", Coproduct)],
            Kind::Operator => &[("dot", Bilinear), ("bracket", Bilinear), ("L", Actions), ("R", Actions), ("rho", Actions), ("T", Map)],
            Kind::Bialgebra => &[("dot", Bilinear), ("bracket", Bilinear), ("coproduct", Coproduct), ("cobracket", Coproduct)],
            Kind::PrePoisson => &[("succ", Bilinear), ("prec", Bilinear), ("ast", Bilinear)],
            Kind::Form => &[("dot", Bilinear), ("bracket", Bilinear), ("form", Square)],
        }
    }
}

/// Index layout of one component's entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `[k, i, j]`: coefficient of `e_k` in `e_i ⋆ e_j`.
    Bilinear,
    /// `[x, a, b]`: entry `(a, b)` of the action matrix of `e_x` on `V`.
    Actions,
    /// `[x, a, b]`: coefficient of `e_a ⊗ e_b` in the image of `e_x`.
    Coproduct,
    /// `[i, j]` with both indices below `dim`.
    Square,
    /// `[i, j]`: row below `dim`, column below `vdim`.
    Map,
}

impl Shape {
    fn bounds(self, dim: usize, vdim: usize) -> Vec<usize> {
        match self {
            Shape::Bilinear | Shape::Coproduct => vec![dim; 3],
            Shape::Actions => vec![dim, vdim, vdim],
            Shape::Square => vec![dim; 2],
            Shape::Map => vec![dim, vdim],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coef {
    Exact(Scalar),
    Expr(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub index: Vec<usize>,
    pub coef: Coef,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifest {
    pub kind: Kind,
    pub dim: usize,
    pub vdim: Option<usize>,
    pub params: Bindings,
    /// Every component of `kind`, possibly empty.
    pub components: BTreeMap<&'static str, Vec<Entry>>,
}

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn as_index(v: &Value, what: &str) -> Result<usize, CliError> {
    v.as_u64().map(|u| u as usize).ok_or_else(|| parse_err(format!("{what}: expected a nonnegative integer, got {v}")))
}

fn as_bigint(v: &Value, what: &str) -> Result<BigInt, CliError> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from).ok_or_else(|| parse_err(format!("{what}: {n} is not an integer"))),
        Value::String(s) => s.parse().map_err(|_| parse_err(format!("{what}: {s:?} is not an integer"))),
        _ => Err(parse_err(format!("{what}: expected an integer, got {v}"))),
    }
}

fn rational(num: &Value, den: &Value, what: &str) -> Result<Scalar, CliError> {
    let (n, d) = (as_bigint(num, what)?, as_bigint(den, what)?);
    if d.is_zero() {
        return Err(parse_err(format!("{what}: zero denominator")));
    }
    Ok(Scalar::new(n, d))
}

fn int_json(n: &BigInt) -> String {
    match n.to_i64() {
        Some(v) => v.to_string(),
        None => format!("\"{n}\""),
    }
}

fn scalar_json(s: &Scalar) -> String {
    format!("{}, {}", int_json(s.numer()), int_json(s.denom()))
}

impl Manifest {
    pub fn new(kind: Kind, dim: usize, vdim: Option<usize>) -> Self {
        let components = kind.components().iter().map(|(name, _)| (*name, Vec::new())).collect();
        Manifest { kind, dim, vdim: if kind.has_vdim() { vdim.or(Some(dim)) } else { None }, params: Bindings::new(), components }
    }

    pub fn parse(text: &str) -> Result<Manifest, CliError> {
        let root: Value = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
        let obj = root.as_object().ok_or_else(|| parse_err("manifest must be a JSON object"))?;
        let kind_name = obj.get("kind").and_then(Value::as_str).ok_or_else(|| parse_err("missing \"kind\""))?;
        let kind = Kind::parse(kind_name).ok_or_else(|| parse_err(format!("unknown kind {kind_name:?}")))?;
        let dim = as_index(obj.get("dim").ok_or_else(|| parse_err("missing \"dim\""))?, "dim")?;
        let vdim = match (kind.has_vdim(), obj.get("vdim")) {
            (true, Some(v)) => Some(as_index(v, "vdim")?),
            (true, None) => return Err(parse_err(format!("{kind_name} manifest needs \"vdim\""))),
            (false, Some(_)) => return Err(parse_err(format!("{kind_name} manifest takes no \"vdim\""))),
            (false, None) => None,
        };
        let mut m = Manifest::new(kind, dim, vdim);
        for (key, value) in obj {
            match key.as_str() {
                "kind" | "dim" | "vdim" => {}
                "params" => {
                    let ps = value.as_object().ok_or_else(|| parse_err("\"params\" must be an object"))?;
                    for (name, v) in ps {
                        if !expr::is_name(name) {
                            return Err(parse_err(format!("parameter name {name:?}")));
                        }
                        let pair = v.as_array().filter(|a| a.len() == 2).ok_or_else(|| parse_err(format!("parameter {name}: expected [num, den]")))?;
                        m.params.insert(name.clone(), rational(&pair[0], &pair[1], name)?);
                    }
                }
                other => {
                    let (name, shape) = kind
                        .components()
                        .iter()
                        .find(|(n, _)| *n == other)
                        .ok_or_else(|| parse_err(format!("{kind_name} manifest has no component {other:?}")))?;
                    let entries = value.as_array().ok_or_else(|| parse_err(format!("{other}: expected a list of entries")))?;
                    let bounds = shape.bounds(dim, m.vdim.unwrap_or(dim));
                    let mut seen = std::collections::BTreeSet::new();
                    let list = m.components.get_mut(name).expect("component registered");
                    for (t, e) in entries.iter().enumerate() {
                        let what = format!("{other}[{t}]");
                        let e = e.as_array().ok_or_else(|| parse_err(format!("{what}: expected a list")))?;
                        let arity = bounds.len();
                        let coef = match e.len() - arity.min(e.len()) {
                            1 if e[arity].is_string() => Coef::Expr(e[arity].as_str().unwrap_or_default().to_string()),
                            2 => Coef::Exact(rational(&e[arity], &e[arity + 1], &what)?),
                            _ => return Err(parse_err(format!("{what}: expected {arity} indices then num, den or one string"))),
                        };
                        let index = e[..arity].iter().map(|v| as_index(v, &what)).collect::<Result<Vec<_>, _>>()?;
                        if let Some((pos, (&i, &b))) = index.iter().zip(&bounds).enumerate().find(|(_, (i, b))| i >= b) {
                            return Err(parse_err(format!("{what}: index {pos} is {i}, must be below {b}")));
                        }
                        if !seen.insert(index.clone()) {
                            return Err(parse_err(format!("{what}: duplicate index {index:?}")));
                        }
                        list.push(Entry { index, coef });
                    }
                }
            }
        }
        Ok(m)
    }

    /// Line-oriented JSON; identical manifests always give identical text.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{{\n  \"kind\": \"{}\",\n  \"dim\": {}", self.kind.name(), self.dim);
        if let Some(v) = self.vdim {
            let _ = write!(s, ",\n  \"vdim\": {v}");
        }
        if !self.params.is_empty() {
            let body: Vec<String> = self.params.iter().map(|(k, v)| format!("\"{k}\": [{}]", scalar_json(v))).collect();
            let _ = write!(s, ",\n  \"params\": {{{}}}", body.join(", "));
        }
        for (name, _) in self.kind.components() {
            let entries = &self.components[name];
            let _ = write!(s, ",\n  \"{name}\": [");
            let lines: Vec<String> = entries
                .iter()
                .map(|e| {
                    let idx: Vec<String> = e.index.iter().map(ToString::to_string).collect();
                    let coef = match &e.coef {
                        Coef::Exact(c) => scalar_json(c),
                        Coef::Expr(x) => serde_json::to_string(x).expect("string serializes"),
                    };
                    format!("    [{}, {coef}]", idx.join(", "))
                })
                .collect();
            if !lines.is_empty() {
                let _ = write!(s, "\n{}\n  ", lines.join(",\n"));
            }
            s.push(']');
        }
        s.push_str("\n}\n");
        s
    }

    /// Evaluates every coefficient; `overrides` take precedence over `params`.
    pub fn resolve(&self, overrides: &Bindings) -> Result<Resolved, CliError> {
        let mut env = self.params.clone();
        env.extend(overrides.iter().map(|(k, v)| (k.clone(), v.clone())));
        let mut comps = BTreeMap::new();
        for (name, entries) in &self.components {
            let mut out = Vec::with_capacity(entries.len());
            for e in entries {
                let c = match &e.coef {
                    Coef::Exact(c) => c.clone(),
                    Coef::Expr(x) => expr::eval(x, &env)?,
                };
                out.push((e.index.clone(), c));
            }
            comps.insert(*name, out);
        }
        Ok(Resolved { kind: self.kind, dim: self.dim, vdim: self.vdim.unwrap_or(self.dim), comps })
    }

    fn put(&mut self, name: &'static str, entries: impl IntoIterator<Item = (Vec<usize>, Scalar)>) {
        let mut list: Vec<Entry> = entries.into_iter().filter(|(_, c)| !c.is_zero()).map(|(index, c)| Entry { index, coef: Coef::Exact(c) }).collect();
        list.sort_by(|a, b| a.index.cmp(&b.index));
        self.components.insert(name, list);
    }

    fn put_bilinear(&mut self, name: &'static str, m: &BilinearMap) {
        self.put(name, m.entries().into_iter().map(|(k, i, j, c)| (vec![k, i, j], c)));
    }

    fn put_algebra(&mut self, p: &PoissonAlgebra) {
        self.put_bilinear("dot", p.dot());
        self.put_bilinear("bracket", p.bracket());
    }

    fn put_matrix(&mut self, name: &'static str, m: &Matrix) {
        self.put(name, m.entries().map(|(i, j, c)| (vec![i, j], c.clone())).collect::<Vec<_>>());
    }

    fn put_actions(&mut self, rep: &PoissonRep) {
        let n = rep.base().dim();
        for (name, get) in [("L", PoissonRep::l as fn(&PoissonRep, usize) -> &Matrix), ("R", PoissonRep::r), ("rho", PoissonRep::rho)] {
            let entries: Vec<_> = (0..n).flat_map(|x| get(rep, x).entries().map(move |(a, b, c)| (vec![x, a, b], c.clone())).collect::<Vec<_>>()).collect();
            self.put(name, entries);
        }
    }

    fn put_comult(&mut self, name: &'static str, c: &Comult) {
        let n = c.dim();
        self.put(name, c.matrix().entries().map(|(ab, x, v)| (vec![x, ab / n, ab % n], v.clone())).collect::<Vec<_>>());
    }

    pub fn algebra(p: &PoissonAlgebra) -> Self {
        let mut m = Manifest::new(Kind::Algebra, p.dim(), None);
        m.put_algebra(p);
        m
    }

    /// An algebra manifest from raw operations, without validation.
    pub fn algebra_maps(dot: &BilinearMap, bracket: &BilinearMap) -> Self {
        let mut m = Manifest::new(Kind::Algebra, dot.dim(), None);
        m.put_bilinear("dot", dot);
        m.put_bilinear("bracket", bracket);
        m
    }

    pub fn rep(rep: &PoissonRep) -> Self {
        let mut m = Manifest::new(Kind::Rep, rep.base().dim(), Some(rep.vdim()));
        m.put_algebra(rep.base());
        m.put_actions(rep);
        m
    }

    pub fn tensor2(p: &PoissonAlgebra, r: &Tensor2) -> Self {
        let mut m = Manifest::new(Kind::Tensor2, p.dim(), None);
        m.put_algebra(p);
        m.put_matrix("r", r.matrix());
        m
    }

    pub fn comult(coproduct: &Comult, cobracket: &Comult) -> Self {
        let mut m = Manifest::new(Kind::Comult, coproduct.dim(), None);
        m.put_comult("coproduct", coproduct);
        m.put_comult("cobracket", cobracket);
        m
    }

    pub fn bialgebra(b: &Bialgebra) -> Self {
        let mut m = Manifest::new(Kind::Bialgebra, b.base.dim(), None);
        m.put_algebra(&b.base);
        m.put_comult("coproduct", &b.coproduct);
        m.put_comult("cobracket", &b.cobracket);
        m
    }

    pub fn operator(t: &LinearOperator, rep: &PoissonRep) -> Self {
        let mut m = Manifest::new(Kind::Operator, rep.base().dim(), Some(rep.vdim()));
        m.put_algebra(rep.base());
        m.put_actions(rep);
        m.put_matrix("T", t.matrix());
        m
    }

    pub fn prepoisson(a: &PrePoisson) -> Self {
        Manifest::prepoisson_maps(a.succ(), a.prec(), a.ast())
    }

    pub fn prepoisson_maps(succ: &BilinearMap, prec: &BilinearMap, ast: &BilinearMap) -> Self {
        let mut m = Manifest::new(Kind::PrePoisson, succ.dim(), None);
        m.put_bilinear("succ", succ);
        m.put_bilinear("prec", prec);
        m.put_bilinear("ast", ast);
        m
    }

    pub fn form(p: &PoissonAlgebra, form: &BilinForm) -> Self {
        let mut m = Manifest::new(Kind::Form, p.dim(), None);
        m.put_algebra(p);
        m.put_matrix("form", &form.0);
        m
    }
}

/// A manifest with every coefficient evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolved {
    pub kind: Kind,
    pub dim: usize,
    pub vdim: usize,
    comps: BTreeMap<&'static str, Vec<(Vec<usize>, Scalar)>>,
}

impl Resolved {
    fn entries(&self, name: &str) -> &[(Vec<usize>, Scalar)] {
        self.comps.get(name).map(Vec::as_slice).unwrap_or_default()
    }

    pub fn has(&self, name: &str) -> bool {
        self.comps.contains_key(name)
    }

    pub fn bilinear(&self, name: &str) -> BilinearMap {
        BilinearMap::from_entries(self.dim, self.entries(name).iter().map(|(ix, c)| (ix[0], ix[1], ix[2], c.clone())))
    }

    pub fn matrix(&self, name: &str, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, cols);
        for (ix, c) in self.entries(name) {
            m[(ix[0], ix[1])] = c.clone();
        }
        m
    }

    pub fn actions(&self, name: &str) -> Vec<Matrix> {
        let mut ms = vec![Matrix::zeros(self.vdim, self.vdim); self.dim];
        for (ix, c) in self.entries(name) {
            ms[ix[0]][(ix[1], ix[2])] = c.clone();
        }
        ms
    }

    pub fn comult(&self, name: &str) -> Comult {
        let n = self.dim;
        let mut m = Matrix::zeros(n * n, n);
        for (ix, c) in self.entries(name) {
            m[(ix[1] * n + ix[2], ix[0])] = c.clone();
        }
        Comult::from_matrix(n, m).expect("shape fixed by dim")
    }

    pub fn dot(&self) -> BilinearMap {
        self.bilinear("dot")
    }

    pub fn bracket(&self) -> BilinearMap {
        self.bilinear("bracket")
    }

    pub fn algebra(&self) -> Result<PoissonAlgebra, ncpoisson::error::Error> {
        PoissonAlgebra::new(self.dot(), self.bracket())
    }

    /// Actions as given, with only shape checks.
    pub fn rep_unchecked(&self) -> Result<PoissonRep, ncpoisson::error::Error> {
        PoissonRep::from_actions(self.algebra()?, self.vdim, self.actions("L"), self.actions("R"), self.actions("rho"))
    }

    pub fn rep(&self) -> Result<PoissonRep, ncpoisson::error::Error> {
        PoissonRep::new(self.algebra()?, self.vdim, self.actions("L"), self.actions("R"), self.actions("rho"))
    }

    pub fn tensor(&self) -> Tensor2 {
        Tensor2::from_matrix(self.matrix("r", self.dim)).expect("square")
    }

    pub fn operator(&self) -> LinearOperator {
        LinearOperator(self.matrix("T", self.vdim))
    }

    pub fn form(&self) -> BilinForm {
        BilinForm(self.matrix("form", self.dim))
    }

    pub fn bialgebra(&self) -> Result<Bialgebra, ncpoisson::error::Error> {
        Bialgebra::new(self.algebra()?, self.comult("coproduct"), self.comult("cobracket"))
    }

    pub fn prepoisson(&self) -> Result<PrePoisson, ncpoisson::error::Error> {
        PrePoisson::new(self.bilinear("succ"), self.bilinear("prec"), self.bilinear("ast"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ncpoisson::fixtures::{example_3d, r_example_3d};
    use ncpoisson::rep::regular_rep;
    use ncpoisson::scalar::{int, rat};

    #[test]
    fn text_round_trip() {
        let p = example_3d(&rat(1, 2), &int(-3), &int(7));
        let m = Manifest::tensor2(&p, &r_example_3d(&int(1), &rat(5, 3)));
        let text = m.to_text();
        assert_eq!(Manifest::parse(&text).unwrap(), m);
        let r = Manifest::parse(&text).unwrap().resolve(&Bindings::new()).unwrap();
        assert_eq!(r.algebra().unwrap(), p);
        let rep = regular_rep(&p);
        assert_eq!(Manifest::parse(&Manifest::rep(&rep).to_text()).unwrap().resolve(&Bindings::new()).unwrap().rep().unwrap(), rep);
    }

    #[test]
    fn symbolic_coefficients_resolve() {
        let text = r#"{"kind": "algebra", "dim": 2, "params": {"a": [1, 2]}, "bracket": [[0, 0, 1, "a"], [0, 1, 0, "-a"]]}"#;
        let m = Manifest::parse(text).unwrap();
        assert_eq!(m.resolve(&Bindings::new()).unwrap().bracket().coeff(0, 0, 1), &rat(1, 2));
        let over: Bindings = [("a".to_string(), int(4))].into();
        assert_eq!(m.resolve(&over).unwrap().bracket().coeff(0, 1, 0), &int(-4));
    }

    #[test]
    fn malformed_manifests_are_rejected() {
        for bad in [
            "[]",
            r#"{"kind": "lattice", "dim": 1}"#,
            r#"{"kind": "algebra"}"#,
            r#"{"kind": "algebra", "dim": 2, "dot": [[0, 0, 2, 1, 1]]}"#,
            r#"{"kind": "algebra", "dim": 2, "dot": [[0, 0, 1, 1, 0]]}"#,
            r#"{"kind": "algebra", "dim": 2, "dot": [[0, 0, 1, 1, 1], [0, 0, 1, 2, 1]]}"#,
            r#"{"kind": "algebra", "dim": 2, "r": []}"#,
            r#"{"kind": "rep", "dim": 2}"#,
            r#"{"kind": "algebra", "dim": 2, "dot": [[0, 0, 1, 1]]}"#,
        ] {
            assert!(matches!(Manifest::parse(bad), Err(CliError::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn large_integers_survive() {
        let big = Scalar::new(BigInt::from(i64::MAX) * 3, BigInt::from(7));
        let mut m = Manifest::new(Kind::Tensor2, 1, None);
        m.put("r", [(vec![0, 0], big.clone())]);
        let back = Manifest::parse(&m.to_text()).unwrap();
        assert_eq!(back.resolve(&Bindings::new()).unwrap().tensor().coeff(0, 0), &big);
    }
}
