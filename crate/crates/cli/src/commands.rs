use std::time::Instant;

use ncpoisson::algebra::{associative_violations, coherence_violations, commutator, leibniz_violations, lie_violations, standard_poisson, BilinearMap};
use ncpoisson::bialgebra::{
    check_bialgebra, check_manin_triple, cobracket_cocycle_violations, cobracket_product_violations, coproduct_balance_violations,
    coproduct_bracket_violations, coproduct_derivation_violations, double, dual_algebra, matched_pair_from_bialgebra,
    matched_pair_poisson_violations, quadratic_violations, standard_split, BialgebraVerdict,
};
use ncpoisson::law::Violation;
use ncpoisson::linalg::Vector;
use ncpoisson::operators::{
    check_pre_poisson, dendriform_violations, induced_pre_poisson, lift_operator, o_operator_violations, pre_poisson_violations, prelie_violations,
    subadjacent, PrePoissonVerdict,
};
use ncpoisson::rep::{dualize, regular_rep, semidirect};
use ncpoisson::scalar::{one, Scalar};
use ncpoisson::suites::{self, Config};
use ncpoisson::yang_baxter::{aybe, coboundary_comults, connes_violations, cybe, drinfeld_double_r, symplectic_violations, YbResidual};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::manifest::{Kind, Manifest, Resolved};

pub const LAWS: [&str; 16] = [
    "associative",
    "lie",
    "leibniz",
    "coherent",
    "quasi-rep",
    "matched-pair",
    "manin",
    "bialgebra",
    "pybe",
    "dendriform",
    "prelie",
    "prepoisson",
    "o-operator",
    "rota-baxter",
    "connes",
    "symplectic",
];

pub const CONSTRUCTIONS: [&str; 10] = [
    "semidirect",
    "double",
    "dual",
    "coboundary-comults",
    "drinfeld-double-r",
    "subadjacent",
    "induced-prepoisson",
    "lift-operator",
    "standard-poisson",
    "commutator",
];

/// Outcome of checking one law on one manifest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub law: String,
    pub pass: bool,
    pub detail: Option<String>,
    pub violations: Vec<Violation>,
}

impl Report {
    fn from_violations(law: &str, violations: Vec<Violation>) -> Self {
        Report { law: law.to_string(), pass: violations.is_empty(), detail: None, violations }
    }

    fn failed(law: &str, detail: impl Into<String>, violations: Vec<Violation>) -> Self {
        Report { law: law.to_string(), pass: false, detail: Some(detail.into()), violations }
    }

    pub fn to_json(&self, file: &str) -> Value {
        let vec = |v: &Vector| v.iter().map(ToString::to_string).collect::<Vec<_>>();
        json!({
            "file": file,
            "law": self.law,
            "pass": self.pass,
            "detail": self.detail,
            "violations": self.violations.iter().map(|v| json!({
                "identity": v.identity,
                "at": v.at,
                "lhs": vec(&v.lhs),
                "rhs": vec(&v.rhs),
            })).collect::<Vec<_>>(),
        })
    }
}

fn expect_kind(what: &str, r: &Resolved, kinds: &[Kind]) -> Result<(), CliError> {
    if kinds.contains(&r.kind) {
        return Ok(());
    }
    Err(CliError::WrongKind {
        what: what.to_string(),
        expected: kinds.iter().map(|k| k.name()).collect::<Vec<_>>().join(" or "),
        got: r.kind.name().to_string(),
    })
}

const WITH_ALGEBRA: [Kind; 6] = [Kind::Algebra, Kind::Rep, Kind::Tensor2, Kind::Operator, Kind::Bialgebra, Kind::Form];

fn residual_violations(identity: &'static str, r: &YbResidual) -> Vec<Violation> {
    r.tensor().nonzero().map(|((a, b, c), v)| Violation::nonzero(identity, vec![a, b, c], Vector::from_vec(vec![v.clone()]))).collect()
}

/// Checks `law` on `r`. Any kind of manifest is accepted; components it does
/// not carry read as zero. Structures that fail their own axioms make the law
/// fail; only unusable input is an error.
pub fn verify(law: &str, r: &Resolved) -> Result<Report, CliError> {
    if !LAWS.contains(&law) {
        return Err(CliError::UnknownLaw(law.to_string()));
    }
    let (dot, bracket) = (r.dot(), r.bracket());
    let report = match law {
        "associative" | "lie" | "leibniz" | "coherent" => {
            let v = match law {
                "associative" => associative_violations(&dot),
                "lie" => lie_violations(&bracket),
                "leibniz" => leibniz_violations(&dot, &bracket),
                _ => [associative_violations(&dot), lie_violations(&bracket), leibniz_violations(&dot, &bracket), coherence_violations(&dot, &bracket)].concat(),
            };
            Report::from_violations(law, v)
        }
        "quasi-rep" => {
            match r.rep_unchecked() {
                Ok(rep) => Report::from_violations(law, rep.quasi_violations()),
                Err(e) => Report::failed(law, e.to_string(), Vec::new()),
            }
        }
        "matched-pair" => {
            match r.bialgebra().and_then(|b| matched_pair_from_bialgebra(&b)) {
                Ok(mp) => Report::from_violations(law, matched_pair_poisson_violations(&mp)),
                Err(e) => Report::failed(law, e.to_string(), Vec::new()),
            }
        }
        "manin" => {
            match r.algebra() {
                Ok(_) if !r.dim.is_multiple_of(2) => Report::failed(law, "odd dimension has no half-and-half split", Vec::new()),
                Ok(p) => {
                    let (p1, p2) = standard_split(r.dim / 2);
                    let form = r.form();
                    match check_manin_triple(&p, &form, &p1, &p2) {
                        Ok(true) => Report::from_violations(law, Vec::new()),
                        Ok(false) => Report::failed(law, "not a Manin triple for the split into the first and second halves", quadratic_violations(&p, &form)),
                        Err(e) => Report::failed(law, e.to_string(), Vec::new()),
                    }
                }
                Err(e) => Report::failed(law, e.to_string(), Vec::new()),
            }
        }
        "bialgebra" => {
            match r.bialgebra() {
                Ok(b) => match check_bialgebra(&b) {
                    BialgebraVerdict::Full => Report::from_violations(law, Vec::new()),
                    BialgebraVerdict::Pseudo => Report::failed(law, "pseudo-bialgebra only: the dual algebra is not coherent", Vec::new()),
                    BialgebraVerdict::Invalid(why) => {
                        let p = &b.base;
                        let v = [
                            coproduct_derivation_violations(p.dot(), &b.coproduct),
                            coproduct_bracket_violations(p, &b.coproduct, &b.cobracket),
                            cobracket_cocycle_violations(p.bracket(), &b.cobracket),
                            coproduct_balance_violations(p.dot(), &b.coproduct),
                            cobracket_product_violations(p, &b.coproduct, &b.cobracket),
                        ]
                        .concat();
                        Report::failed(law, why, v)
                    }
                },
                Err(e) => Report::failed(law, e.to_string(), Vec::new()),
            }
        }
        "pybe" => {
            match r.algebra() {
                Ok(p) if !p.is_coherent() => Report::failed(law, "algebra is not coherent", coherence_violations(&dot, &bracket)),
                Ok(p) => {
                    let t = r.tensor();
                    Report::from_violations(law, [residual_violations("A(r) = 0", &aybe(&p, &t)), residual_violations("C(r) = 0", &cybe(&p, &t))].concat())
                }
                Err(e) => Report::failed(law, e.to_string(), Vec::new()),
            }
        }
        "dendriform" | "prelie" | "prepoisson" => {
            let (succ, prec, ast) = (r.bilinear("succ"), r.bilinear("prec"), r.bilinear("ast"));
            match law {
                "dendriform" => Report::from_violations(law, dendriform_violations(&succ, &prec)),
                "prelie" => Report::from_violations(law, prelie_violations(&ast)),
                _ => match check_pre_poisson(&succ, &prec, &ast) {
                    Ok(PrePoissonVerdict::YesCoherent) => Report { detail: Some("coherent".into()), ..Report::from_violations(law, Vec::new()) },
                    Ok(PrePoissonVerdict::Yes) => Report { detail: Some("not coherent".into()), ..Report::from_violations(law, Vec::new()) },
                    Ok(PrePoissonVerdict::No) => Report::from_violations(law, pre_poisson_violations(&succ, &prec, &ast)),
                    Err(e) => Report::failed(law, e.to_string(), [dendriform_violations(&succ, &prec), prelie_violations(&ast)].concat()),
                },
            }
        }
        "o-operator" | "rota-baxter" => {
            let rep = if law == "rota-baxter" {
                if r.vdim != r.dim {
                    return Err(CliError::Parse("a Rota-Baxter operator needs vdim = dim".into()));
                }
                r.algebra().map(|p| regular_rep(&p))
            } else {
                r.rep_unchecked()
            };
            match rep {
                Ok(rep) => Report::from_violations(law, o_operator_violations(&r.operator(), &rep)),
                Err(e) => Report::failed(law, e.to_string(), Vec::new()),
            }
        }
        "connes" | "symplectic" => {
            let form = r.form();
            match r.algebra() {
                Ok(_) if !form.is_skew() => Report::failed(law, "form is not skew-symmetric", Vec::new()),
                Ok(p) if law == "connes" => Report::from_violations(law, connes_violations(&p, &form)),
                Ok(p) => Report::from_violations(law, symplectic_violations(&p, &form)),
                Err(e) => Report::failed(law, e.to_string(), Vec::new()),
            }
        }
        _ => unreachable!("law list checked above"),
    };
    Ok(report)
}

/// Runs `construction` on its single input.
pub fn build(construction: &str, input: &Resolved, hbar: Option<&Scalar>) -> Result<Manifest, CliError> {
    if !CONSTRUCTIONS.contains(&construction) {
        return Err(CliError::UnknownConstruction(construction.to_string()));
    }
    let e = CliError::construction;
    let manifest = match construction {
        "semidirect" => {
            expect_kind(construction, input, &[Kind::Rep])?;
            Manifest::algebra(&semidirect(&input.rep().map_err(e)?).map_err(e)?)
        }
        "double" => {
            expect_kind(construction, input, &[Kind::Bialgebra])?;
            let mp = matched_pair_from_bialgebra(&input.bialgebra().map_err(e)?).map_err(e)?;
            Manifest::algebra(&double(&mp).map_err(e)?)
        }
        "dual" => {
            expect_kind(construction, input, &[Kind::Rep, Kind::Bialgebra, Kind::Comult])?;
            match input.kind {
                Kind::Rep => Manifest::rep(&dualize(&input.rep().map_err(e)?)),
                _ => Manifest::algebra(&dual_algebra(&input.comult("coproduct"), &input.comult("cobracket")).map_err(e)?),
            }
        }
        "coboundary-comults" => {
            expect_kind(construction, input, &[Kind::Tensor2])?;
            let p = input.algebra().map_err(e)?;
            let (d, dl) = coboundary_comults(&p, &input.tensor());
            Manifest::bialgebra(&ncpoisson::bialgebra::Bialgebra::new(p, d, dl).map_err(e)?)
        }
        "drinfeld-double-r" => {
            expect_kind(construction, input, &[Kind::Bialgebra])?;
            let (d, r) = drinfeld_double_r(&input.bialgebra().map_err(e)?).map_err(e)?;
            Manifest::tensor2(&d, &r)
        }
        "subadjacent" => {
            expect_kind(construction, input, &[Kind::PrePoisson])?;
            Manifest::algebra(&subadjacent(&input.prepoisson().map_err(e)?).map_err(e)?)
        }
        "induced-prepoisson" => {
            expect_kind(construction, input, &[Kind::Operator])?;
            Manifest::prepoisson(&induced_pre_poisson(&input.operator(), &input.rep().map_err(e)?).map_err(e)?)
        }
        "lift-operator" => {
            expect_kind(construction, input, &[Kind::Operator])?;
            let (s, t) = lift_operator(&input.operator(), &input.rep().map_err(e)?).map_err(e)?;
            Manifest::tensor2(&s, &t)
        }
        "standard-poisson" => {
            expect_kind(construction, input, &WITH_ALGEBRA)?;
            let hbar = hbar.cloned().unwrap_or_else(one);
            Manifest::algebra(&standard_poisson(&input.dot(), &hbar).map_err(e)?)
        }
        "commutator" => {
            expect_kind(construction, input, &WITH_ALGEBRA)?;
            let dot = input.dot();
            if !ncpoisson::algebra::check_associative(&dot) {
                return Err(e(ncpoisson::error::Error::NotAssociative));
            }
            Manifest::algebra_maps(&BilinearMap::zero(dot.dim()), &commutator(&dot))
        }
        _ => unreachable!("construction list checked above"),
    };
    Ok(manifest)
}

/// Runs the criteria of suite `name`; the summary and whether all passed.
pub fn suite(name: &str, cfg: &Config) -> Result<(Value, bool), CliError> {
    let criteria = suites::suite(name).ok_or_else(|| CliError::UnknownSuite(name.to_string()))?;
    let mut rows = Vec::new();
    let mut passed = 0;
    let total = Instant::now();
    for &n in criteria {
        let start = Instant::now();
        let out = suites::run(n, cfg).expect("suite lists known criteria");
        passed += out.passed() as usize;
        rows.push(json!({
            "criterion": n,
            "title": out.title,
            "pass": out.passed(),
            "checks": out.checks,
            "failed": out.failed,
            "millis": start.elapsed().as_millis() as u64,
            "failures": out.failures,
            "notes": out.notes,
        }));
    }
    let all = passed == criteria.len();
    let summary = json!({
        "suite": name,
        "seed": cfg.seed,
        "samples": cfg.samples,
        "passed": passed,
        "failed": criteria.len() - passed,
        "millis": total.elapsed().as_millis() as u64,
        "criteria": rows,
    });
    Ok((summary, all))
}
