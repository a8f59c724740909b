//! Law ids and report builders shared by the command line and the C interface.

use serde_json::json;

use crate::algebra::{check_higher_identities, check_law, check_law_with, check_morphism, AlgebraLaw, HomAlgebra};
use crate::bialgebra::{check_bialgebra, HomBialgebra};
use crate::coalgebra::{check_coalgebra_law, verify_structural_identities, CoalgebraLaw, HomCoalgebra};
use crate::error::{Error, Result};
use crate::homdef::Definition;
use crate::law::{CheckOptions, LawReport};
use crate::linear::{LinearMap, Subgroup};
use crate::report::{LawResult, Report};
use crate::scalar::{Extension, ParamSet, Scalar};
use crate::sigma::{
    check_q_witt_relations, check_six_term_laurent, ehf_relations, find_delta_laurent, parse_coefficients, sl2_truncated_build, virasoro_window_check,
    witt_window_relations, LaurentSigma, TruncatedSigma,
};

pub const LAW_IDS: &[&str] = &[
    "hom-assoc",
    "unital",
    "hom-lie",
    "hom-leibniz",
    "hom-poisson",
    "g1..g6",
    "quasi-hom-lie",
    "beta-twisting",
    "multiplicative",
    "pentagon",
    "higher:<n>",
    "hom-coassoc",
    "counital",
    "cog1..cog6",
    "vinberg",
    "prelie",
    "hom-lie-admissible",
    "bialgebra",
    "structural-identities",
    "morphism",
];

pub fn as_algebra(d: &Definition) -> Result<HomAlgebra> {
    match d {
        Definition::Algebra(a) => Ok(a.clone()),
        Definition::Bialgebra(b) => Ok(b.algebra()),
        d => Err(Error::Structure(format!("law applies to algebras, input is a {}", d.kind()))),
    }
}

pub fn as_coalgebra(d: &Definition) -> Result<HomCoalgebra> {
    match d {
        Definition::Coalgebra(c) => Ok(c.clone()),
        Definition::Bialgebra(b) => Ok(b.coalgebra()),
        d => Err(Error::Structure(format!("law applies to coalgebras, input is a {}", d.kind()))),
    }
}

pub fn as_bialgebra(d: &Definition) -> Result<HomBialgebra> {
    match d {
        Definition::Bialgebra(b) => Ok(b.clone()),
        d => Err(Error::Structure(format!("expected a bialgebra, input is a {}", d.kind()))),
    }
}

fn subgroup(s: &str) -> Option<Subgroup> {
    s.parse().ok().and_then(Subgroup::from_index)
}

pub fn algebra_law(id: &str) -> Option<AlgebraLaw> {
    Some(match id {
        "hom-assoc" => AlgebraLaw::HomAssociative,
        "unital" => AlgebraLaw::Unital,
        "hom-lie" => AlgebraLaw::HomLie,
        "hom-leibniz" => AlgebraLaw::HomLeibniz,
        "hom-poisson" => AlgebraLaw::HomPoisson,
        "quasi-hom-lie" => AlgebraLaw::QuasiHomLie,
        "beta-twisting" => AlgebraLaw::BetaTwisting,
        "multiplicative" => AlgebraLaw::Multiplicative,
        "pentagon" => AlgebraLaw::Pentagon,
        _ => AlgebraLaw::GHomAssociative(subgroup(id.strip_prefix('g')?)?),
    })
}

pub fn coalgebra_law(id: &str) -> Option<CoalgebraLaw> {
    Some(match id {
        "hom-coassoc" => CoalgebraLaw::HomCoassociative,
        "counital" => CoalgebraLaw::Counital,
        "hom-lie-admissible" => CoalgebraLaw::HomLieAdmissible,
        "vinberg" => CoalgebraLaw::GHomCoalgebra(Subgroup::G2),
        "prelie" => CoalgebraLaw::GHomCoalgebra(Subgroup::G3),
        _ => CoalgebraLaw::GHomCoalgebra(subgroup(id.strip_prefix("cog")?)?),
    })
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Ignore a declared deformation order.
    pub exact: bool,
    /// Add the twist-compatibility laws to `bialgebra`.
    pub strict: bool,
    /// Map and codomain for `morphism`.
    pub morphism: Option<(LinearMap, HomAlgebra)>,
}

/// Runs one law id; `higher:<n>` and `bialgebra` yield several reports.
pub fn run_law(def: &Definition, id: &str, opts: &RunOptions) -> Result<Vec<LawReport>> {
    if let Some(n) = id.strip_prefix("higher:") {
        let n: usize = n.parse().map_err(|_| Error::Unknown { kind: "law", name: id.into() })?;
        if n < 2 {
            return Err(Error::condition("higher:<n> needs n >= 2"));
        }
        return check_higher_identities(&as_algebra(def)?, n);
    }
    match id {
        "bialgebra" => return check_bialgebra(&as_bialgebra(def)?, opts.strict),
        "structural-identities" => return Ok(verify_structural_identities(&as_coalgebra(def)?)),
        "morphism" => {
            let (f, target) = opts.morphism.as_ref().ok_or_else(|| Error::condition("morphism needs a map"))?;
            return Ok(vec![check_morphism(f, &as_algebra(def)?, target)?]);
        }
        _ => {}
    }
    if let Some(law) = algebra_law(id) {
        let a = as_algebra(def)?;
        let r = if opts.exact { check_law_with(&a, &law, &CheckOptions::exact())? } else { check_law(&a, &law)? };
        return Ok(vec![r]);
    }
    if let Some(law) = coalgebra_law(id) {
        return Ok(vec![check_coalgebra_law(&as_coalgebra(def)?, &law)?]);
    }
    Err(Error::Unknown { kind: "law", name: id.into() })
}

pub fn check_report(def: &Definition, input: &[u8], laws: &[&str], opts: &RunOptions) -> Result<Report> {
    let mut rep = Report::new(input);
    for id in laws {
        for r in run_law(def, id, opts)? {
            rep.push(&r);
        }
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaurentCheck {
    /// `δ`, the six-term identity, and for `s = 1` the q-Witt relations.
    Jacobi,
    /// The four-case expansion of the bracket and its prefactor.
    Witt,
    /// `δ` and its closed form.
    Delta,
}

impl std::str::FromStr for LaurentCheck {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jacobi" => Ok(LaurentCheck::Jacobi),
            "witt" => Ok(LaurentCheck::Witt),
            "delta" => Ok(LaurentCheck::Delta),
            _ => Err(Error::Unknown { kind: "laurent check", name: s.into() }),
        }
    }
}

pub fn laurent_report(q: &str, s: i64, k: i64, eta: &str, window: i64, check: LaurentCheck) -> Result<Report> {
    if window < 0 {
        return Err(Error::condition("window must be nonnegative"));
    }
    let mut ps = ParamSet::new();
    let v = parse_coefficients(&[q, eta], &mut ps)?;
    let r = LaurentSigma::new(v[0].clone(), s, k, v[1].clone())?;
    let mut rep = Report::new(format!("laurent q={} s={s} k={k} eta={} window={window}", r.q, r.eta).as_bytes());
    match check {
        LaurentCheck::Delta => {
            let d = find_delta_laurent(&r, window)?;
            let mut closed = LawReport::new("delta-closed-form");
            closed.checked = 1;
            match d.closed_form {
                Some(false) => closed.fail("delta differs from the closed form"),
                None => closed.note("no closed form applies"),
                Some(true) => {}
            }
            rep.push_with(&d.report, json!({ "delta": d.delta.to_string() }));
            rep.push(&closed);
        }
        LaurentCheck::Jacobi => {
            let d = find_delta_laurent(&r, window)?;
            rep.push_with(&d.report, json!({ "delta": d.delta.to_string() }));
            rep.push(&check_six_term_laurent(&r, &d.delta, window));
            if s == 1 {
                rep.push(&check_q_witt_relations(&r, window));
            }
        }
        LaurentCheck::Witt => {
            let w = witt_window_relations(&r, window);
            rep.push_with(&w.report, json!({ "prefactor": w.prefactor.as_ref().map(|p| p.to_string()) }));
        }
    }
    Ok(rep)
}

pub type TruncatedInput = (Vec<Scalar>, Vec<Scalar>, Option<Vec<Scalar>>);

/// Comma-separated coefficient lists; `zeta` is a primitive `N`-th root of unity.
pub fn truncated_coeffs(n: usize, sigma: &str, psi: &str, scaling: Option<&str>) -> Result<TruncatedInput> {
    let split = |s: &str| -> Vec<String> { s.split(',').map(|x| x.trim().to_string()).collect() };
    let uses_zeta = |v: &[String]| v.iter().any(|x| x.split(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).any(|w| w == "zeta"));
    let mut parts = vec![split(sigma), split(psi)];
    if let Some(s) = scaling {
        parts.push(split(s));
    }
    let mut ps = ParamSet::new();
    if parts.iter().any(|p| uses_zeta(p)) {
        match n {
            0 | 1 => return Err(Error::condition("zeta needs N >= 2")),
            // The second cyclotomic polynomial is linear.
            2 => parts.iter_mut().flatten().for_each(|x| *x = x.replace("zeta", "(-1)")),
            _ => ps.ext = Some(Extension::cyclotomic("zeta", n as u32)),
        }
    }
    let mut out = Vec::new();
    for p in &parts {
        let refs: Vec<&str> = p.iter().map(String::as_str).collect();
        out.push(parse_coefficients(&refs, &mut ps)?);
    }
    let mut it = out.into_iter();
    let sigma = it.next().unwrap_or_default();
    let psi = it.next().unwrap_or_default();
    Ok((sigma, psi, it.next()))
}

/// Full build with all ring gates, or only the e, h, f relations with the gates skipped.
pub fn truncated_report(n: usize, sigma: &str, psi: &str, scaling: Option<&str>, ehf_only: bool) -> Result<Report> {
    let (s, p, sc) = truncated_coeffs(n, sigma, psi, scaling)?;
    let mut rep = Report::new(format!("truncated n={n} sigma={sigma} psi={psi} scaling={scaling:?}").as_bytes());
    if ehf_only {
        let ring = TruncatedSigma::unchecked(n, s, p)?;
        rep.push(&ehf_relations(&ring));
        return Ok(rep);
    }
    let b = sl2_truncated_build(n, s, p, sc)?;
    for r in &b.reports {
        rep.push(r);
    }
    if let Some(first) = rep.results.first_mut() {
        first.data = Some(json!({ "annihilator_dim": b.annihilator_dim, "bracket_dim": b.algebra.dim() }));
    }
    Ok(rep)
}

/// Candidate lines are informational; the verdict is "some candidate passes" plus the classical limit.
pub fn virasoro_report(window: i64) -> Result<Report> {
    if window < 1 {
        return Err(Error::condition("window must be positive"));
    }
    let v = virasoro_window_check(window)?;
    let mut rep = Report::new(format!("virasoro window={window}").as_bytes());
    let mut any = LawReport::new("hom-lie[some candidate]");
    any.checked = v.candidates.len();
    if !v.candidates.iter().any(|(_, r)| r.holds) {
        any.fail("no candidate twist on the central element passes");
    }
    for (_, r) in &v.candidates {
        let mut x: LawResult = r.into();
        x.informational = true;
        rep.results.push(x);
    }
    rep.push(&any);
    rep.push(&v.classical);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn every_listed_id_dispatches() {
        let a = catalog::load("hom_assoc_3d").unwrap();
        for id in ["hom-assoc", "hom-lie", "hom-leibniz", "g1", "g6", "multiplicative", "higher:3"] {
            assert!(run_law(&a, id, &RunOptions::default()).is_ok(), "{id}");
        }
        let b = catalog::load("group_z3").unwrap();
        for id in ["hom-coassoc", "counital", "cog2", "vinberg", "prelie", "hom-lie-admissible", "bialgebra", "structural-identities", "unital"] {
            assert!(run_law(&b, id, &RunOptions::default()).is_ok(), "{id}");
        }
        assert!(matches!(run_law(&a, "g7", &RunOptions::default()), Err(Error::Unknown { .. })));
        assert!(matches!(run_law(&a, "hom-coassoc", &RunOptions::default()), Err(Error::Structure(_))));
    }

    #[test]
    fn zeta_binds_to_a_root_of_unity() {
        let (s, _, _) = truncated_coeffs(2, "0, zeta", "1", None).unwrap();
        assert_eq!(s[1], Scalar::int(-1));
        let (s, _, _) = truncated_coeffs(3, "0, zeta", "1", None).unwrap();
        assert_eq!(s[1].pow(3).unwrap(), Scalar::one());
        assert!(!s[1].is_one());
    }
}
