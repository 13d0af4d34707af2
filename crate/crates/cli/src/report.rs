//! Report structures, their JSON schema, and the text rendering.
//!
//! The JSON layout is stable: field order is fixed, terms are sorted in
//! graded lexicographic order, and every number that may exceed machine
//! precision (coefficients, ranks, group orders, the scaled limit) is an
//! exact decimal-free fraction string "p" or "p/q". Identical configurations
//! produce byte-identical JSON.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use molien_core::molien::QuotientResult;
use molien_core::polyring::{coeff_string, graded_lex, monomial_string, parse_coeff, MultiPoly};
use molien_core::GroupSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupReport {
    pub family: String,
    #[serde(rename = "N")]
    pub modulus: u32,
    pub n: usize,
    #[serde(rename = "orderH")]
    pub order_h: String,
    #[serde(rename = "orderG")]
    pub order_g: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermReport {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// One denominator factor. Binomial factors 1 - h_var^m keep the compact
/// {var, m} form; anything else carries its ascending coefficient strings.
/// Variables are 1-based here, matching the h1, h2, ... display names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DenominatorReport {
    Binomial { var: usize, m: u32 },
    Univariate { var: usize, coeffs: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientReport {
    pub polynomial: bool,
    pub terms: Vec<TermReport>,
    pub denominator: Vec<DenominatorReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub checked: bool,
    pub depth: u32,
    pub agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: GroupReport,
    pub k: usize,
    #[serde(rename = "Q")]
    pub quotient: QuotientReport,
    pub rank: Option<String>,
    pub expected_rank: String,
    pub separable: Option<bool>,
    pub scaled_limit: String,
    pub oracle: OracleReport,
}

impl Report {
    pub fn build(
        quotient: &QuotientResult,
        scaled_limit: &BigRational,
        oracle: OracleReport,
    ) -> Report {
        let spec = quotient.group();
        Report {
            group: group_report(spec),
            k: quotient.copies(),
            quotient: quotient_report(quotient),
            rank: quotient.rank().map(coeff_string),
            expected_rank: quotient.expected_rank().to_string(),
            separable: quotient.separable(),
            scaled_limit: coeff_string(scaled_limit),
            oracle,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let g = &self.group;
        out.push_str(&format!(
            "group: {} (N = {}, n = {}, |H| = {}, |G| = {})\n",
            g.family, g.modulus, g.n, g.order_h, g.order_g
        ));
        out.push_str(&format!("k = {}\n", self.k));
        let q_text = render_quotient(&self.quotient);
        if self.quotient.polynomial {
            out.push_str(&format!("Q = {}\n", q_text));
            match (&self.rank, &self.expected_rank) {
                (Some(rank), expected) if rank == expected => out.push_str(&format!(
                    "rank {} = |G|^{} (as expected)\n",
                    rank,
                    self.k - 1
                )),
                (Some(rank), expected) => out.push_str(&format!(
                    "rank {} DIFFERS from expected |G|^{} = {}\n",
                    rank,
                    self.k - 1,
                    expected
                )),
                (None, _) => {}
            }
            if let Some(separable) = self.separable {
                out.push_str(&format!("separable: {}\n", separable));
            }
        } else {
            out.push_str("Q is NOT a polynomial\n");
            out.push_str(&format!("Q = {}\n", q_text));
        }
        out.push_str(&format!("scaled limit: {} (1/|G|)\n", self.scaled_limit));
        if self.oracle.checked {
            out.push_str(&format!(
                "oracle check (depth {}): {}\n",
                self.oracle.depth,
                match self.oracle.agrees {
                    Some(true) => "agrees",
                    Some(false) => "DISAGREES",
                    None => "not run",
                }
            ));
        }
        out
    }

    /// Identities that must hold; any entry is an internal inconsistency.
    pub fn consistency_failures(&self) -> Vec<String> {
        let mut failures = Vec::new();
        if self.quotient.polynomial {
            if let Some(rank) = &self.rank {
                if rank != &self.expected_rank {
                    failures.push(format!(
                        "rank {} != expected rank {}",
                        rank, self.expected_rank
                    ));
                }
            }
        }
        let expected_limit = if self.group.order_g == "1" {
            "1".to_string()
        } else {
            format!("1/{}", self.group.order_g)
        };
        if self.scaled_limit != expected_limit {
            failures.push(format!(
                "scaled limit {} != 1/|G| = {}",
                self.scaled_limit, expected_limit
            ));
        }
        if self.oracle.agrees == Some(false) {
            failures.push(format!(
                "truncated series disagrees with the oracle at depth {}",
                self.oracle.depth
            ));
        }
        failures
    }
}

fn group_report(spec: &GroupSpec) -> GroupReport {
    GroupReport {
        family: spec.family().tag().to_string(),
        modulus: spec.modulus(),
        n: spec.rank(),
        order_h: spec.subgroup_order().to_string(),
        order_g: spec.group_order().to_string(),
    }
}

fn quotient_report(quotient: &QuotientResult) -> QuotientReport {
    let mut denominator: Vec<DenominatorReport> = quotient
        .binomial_denominator()
        .iter()
        .map(|f| DenominatorReport::Binomial { var: f.var + 1, m: f.exponent })
        .collect();
    for residual in quotient.residual_denominator() {
        denominator.push(DenominatorReport::Univariate {
            var: residual.var + 1,
            coeffs: residual.poly.coeffs().iter().map(coeff_string).collect(),
        });
    }
    QuotientReport {
        polynomial: quotient.is_polynomial(),
        terms: terms_of(quotient.numerator()),
        denominator,
    }
}

pub fn terms_of(p: &MultiPoly) -> Vec<TermReport> {
    p.terms_sorted()
        .into_iter()
        .map(|(exponents, coeff)| TermReport { exponents, coeff: coeff_string(&coeff) })
        .collect()
}

/// Rebuilds the polynomial (or the quotient numerator) from its term list.
pub fn multipoly_of(terms: &[TermReport], vars: usize) -> Option<MultiPoly> {
    let mut p = MultiPoly::zero(vars);
    for term in terms {
        if term.exponents.len() != vars {
            return None;
        }
        let coeff = parse_coeff(&term.coeff)?;
        p = p.add(&MultiPoly::monomial(vars, term.exponents.clone(), coeff));
    }
    Some(p)
}

fn render_quotient(q: &QuotientReport) -> String {
    let numerator = render_terms(&q.terms);
    if q.denominator.is_empty() {
        return numerator;
    }
    let mut parts = Vec::new();
    for d in &q.denominator {
        match d {
            DenominatorReport::Binomial { var, m } => {
                if *m == 1 {
                    parts.push(format!("(1 - h{})", var));
                } else {
                    parts.push(format!("(1 - h{}^{})", var, m));
                }
            }
            DenominatorReport::Univariate { var, coeffs } => {
                parts.push(format!("({})", render_univariate(coeffs, *var)));
            }
        }
    }
    format!("({}) / ({})", numerator, parts.join(" "))
}

fn render_terms(terms: &[TermReport]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut sorted: Vec<&TermReport> = terms.iter().collect();
    sorted.sort_by(|a, b| graded_lex(&a.exponents, &b.exponents));
    let mut out = String::new();
    for (i, term) in sorted.iter().enumerate() {
        let coeff = parse_coeff(&term.coeff).unwrap_or_else(BigRational::zero);
        let mono = monomial_string(&term.exponents);
        let body = if mono.is_empty() {
            coeff_string(&coeff.abs())
        } else if coeff.abs().is_one() {
            mono
        } else {
            format!("{}*{}", coeff_string(&coeff.abs()), mono)
        };
        if i == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else if coeff.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

fn render_univariate(coeffs: &[String], var: usize) -> String {
    let mut parts = Vec::new();
    for (i, c) in coeffs.iter().enumerate() {
        let coeff = match parse_coeff(c) {
            Some(v) if !v.is_zero() => v,
            _ => continue,
        };
        let mono = match i {
            0 => String::new(),
            1 => format!("h{}", var),
            _ => format!("h{}^{}", var, i),
        };
        let body = if mono.is_empty() {
            coeff_string(&coeff.abs())
        } else if coeff.abs().is_one() {
            mono
        } else {
            format!("{}*{}", coeff_string(&coeff.abs()), mono)
        };
        let sign = if coeff.is_negative() {
            if parts.is_empty() { "-" } else { " - " }
        } else if parts.is_empty() {
            ""
        } else {
            " + "
        };
        parts.push(format!("{}{}", sign, body));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.concat()
    }
}
