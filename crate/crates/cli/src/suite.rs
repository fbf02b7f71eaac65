use std::collections::BTreeMap;

use lorentz_core::certify::characteristic_polynomial;
use lorentz_core::certify::univariate::sturm_real_root_count;
use lorentz_core::poly::text::format_polynomial;
use lorentz_core::poly::ExponentVector;
use lorentz_core::schubert::{grassmannian_for, key_polynomial, schubert, Permutation};
use lorentz_core::symmetric::{complement_partition, schur};
use lorentz_core::{
    corpus, lorentzian_certify, quadratic_form_matrix, Failure, Partition, Polynomial, Rational, Substitution,
};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<SuiteCheck>,
    pub version: &'static str,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {}: {}\n", c.name, c.detail));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
        out
    }
}

type Outcome = Result<String, String>;

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn lambda(s: &str) -> Partition {
    Partition::parse(s).expect("fixed partition")
}

fn s20_refuted() -> Outcome {
    let s20 = schur(&lambda("2"), 2);
    let cert = lorentzian_certify(&s20);
    match &cert.failure {
        Some(Failure::HessianFailure { multiset, inertia }) if multiset.is_empty() && inertia.positive == 2 => {}
        other => return Err(format!("unexpected outcome {other:?}")),
    }
    let m = quadratic_form_matrix(&s20).map_err(|e| e.to_string())?;
    let c = characteristic_polynomial(&m);
    // (t - 3/2)(t - 1/2)
    if c != vec![Rational::new(3.into(), 4.into()), int(-2), int(1)] {
        return Err(format!("characteristic polynomial {c:?}"));
    }
    Ok(format!("witness {m} has eigenvalues 3/2 and 1/2"))
}

fn s20_normalized() -> Outcome {
    let n = schur(&lambda("2"), 2).normalize();
    if lorentzian_certify(&n).is_lorentzian() {
        Ok(format!("{} is Lorentzian", format_polynomial(&n)))
    } else {
        Err("N(s_(2,0)) refuted".into())
    }
}

fn corpus_schur_display() -> Outcome {
    let displayed = corpus::load("n-schur-31111").map_err(|e| e.to_string())?;
    let generated = schur(&lambda("3,1,1,1,1"), 5).normalize();
    if displayed != generated {
        return Err(format!("generator gives {}", format_polynomial(&generated)));
    }
    if !lorentzian_certify(&displayed).is_lorentzian() {
        return Err("not Lorentzian".into());
    }
    Ok(format!("{} terms match the display and certify", displayed.len()))
}

fn stability() -> Outcome {
    let h = schur(&lambda("3,1,1,1,1"), 5).normalize();
    let ones: BTreeMap<usize, Substitution> = (1..5).map(|v| (v, Substitution::Value(int(1)))).collect();
    let spec = h.specialize(&ones).map_err(|e| e.to_string())?.scale(&int(6));
    let x = Polynomial::variable(5, 0);
    let quadratic = &(&(&x * &x) + &x.scale(&int(6))) + &Polynomial::constant(5, int(13));
    if spec != &x * &quadratic {
        return Err(format!("6 * specialization = {}", format_polynomial(&spec)));
    }
    let roots = sturm_real_root_count(&[int(13), int(6), int(1)]).map_err(|e| e.to_string())?;
    if roots != 0 {
        return Err(format!("x^2 + 6x + 13 has {roots} real roots"));
    }
    Ok("6 N(s_31111)(x,1,1,1,1) = x(x^2 + 6x + 13), no real roots".into())
}

fn duality() -> Outcome {
    let l = lambda("2,1");
    let dual = schur(&l, 2)
        .dualize(&ExponentVector::new(vec![3, 3]))
        .map_err(|e| e.to_string())?;
    let kappa = complement_partition(&l, 2, 3).map_err(|e| e.to_string())?;
    if dual != schur(&kappa, 2) {
        return Err(format!("dual is {}", format_polynomial(&dual)));
    }
    Ok(format!("x1^3 x2^3 s_21(1/x) = s_{kappa}"))
}

fn grassmannian() -> Outcome {
    let kappa = lambda("2,1");
    let w = grassmannian_for(&kappa, 2, 4).map_err(|e| e.to_string())?;
    let s = schubert(&w);
    let target = schur(&kappa, 2).embed(s.arity()).map_err(|e| e.to_string())?;
    if s != target {
        return Err(format!("S_{w} = {}", format_polynomial(&s)));
    }
    Ok(format!("S_{w} = s_21(x1,x2)"))
}

fn schubert_refutations() -> Outcome {
    for w in ["1423", "1432"] {
        let p = schubert(&Permutation::parse(w).expect("fixed permutation"));
        let cert = lorentzian_certify(&p);
        if cert.is_lorentzian() || !cert.recheck(&p) {
            return Err(format!("S_{w} not refuted with a valid witness"));
        }
    }
    Ok("S_1423 and S_1432 are not Lorentzian".into())
}

fn verma_display() -> Outcome {
    let p = corpus::load("ch-m4-example").map_err(|e| e.to_string())?;
    if lorentzian_certify(&p).is_lorentzian() {
        Ok(format!("{} terms, Lorentzian", p.len()))
    } else {
        Err("refuted".into())
    }
}

fn monomials() -> Outcome {
    let s = schubert(&Permutation::parse("321").expect("fixed permutation"));
    let k = key_polynomial(&ExponentVector::new(vec![2, 1]));
    let (a, b) = (format_polynomial(&s), format_polynomial(&k));
    if a != "x1^2 x2" || b != "x1^2 x2" {
        return Err(format!("S_321 = {a}, key_21 = {b}"));
    }
    Ok("S_321 = key_21 = x1^2 x2".into())
}

fn corpus_integrity() -> Outcome {
    let checks = corpus::verify();
    let bad: Vec<&str> = checks.iter().filter(|c| !c.ok()).map(|c| c.name).collect();
    if bad.is_empty() {
        Ok(format!("{} files match their hashes", checks.len()))
    } else {
        Err(format!("mismatched: {bad:?}"))
    }
}

/// Runs the fixed list of reference computations.
pub fn paper_suite() -> SuiteReport {
    let list: [(&'static str, fn() -> Outcome); 10] = [
        ("schur_20_refuted", s20_refuted),
        ("schur_20_normalized", s20_normalized),
        ("normalized_schur_31111", corpus_schur_display),
        ("stability_specialization", stability),
        ("dual_schur_duality", duality),
        ("grassmannian_identity", grassmannian),
        ("schubert_refutations", schubert_refutations),
        ("verma_m4_display", verma_display),
        ("monomial_cases", monomials),
        ("corpus_integrity", corpus_integrity),
    ];
    let checks = list
        .into_iter()
        .map(|(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            SuiteCheck { name, passed, detail }
        })
        .collect();
    SuiteReport {
        checks,
        version: env!("CARGO_PKG_VERSION"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_reference_check_passes() {
        let report = paper_suite();
        assert!(report.passed(), "{}", report.to_text());
    }
}
