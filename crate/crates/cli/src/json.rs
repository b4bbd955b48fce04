//! Serializable forms of reports, certificates and matrices.

use serde::Serialize;
use sl2hahn::freealg::MembershipCertificate;
use sl2hahn::linalg::SparseMatrix;
use sl2hahn::report::{CheckItem, Report, Status};
use sl2hahn::terwilliger::CubeSummary;

/// Identifier written into every report document.
pub const SCHEMA_ID: &str = "sl2hahn-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub schema: &'static str,
    pub command: String,
    pub config: ConfigRecord,
    pub suites: Vec<SuiteRecord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cube: Vec<CubeRecord>,
    pub summary: Summary,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ConfigRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repr_n_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_min: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_max: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_vertex: Option<String>,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteRecord {
    pub name: String,
    pub status: &'static str,
    pub items: Vec<ItemRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ItemRecord {
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    pub alphabet: String,
    pub terms: Vec<CertificateTermRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateTermRecord {
    pub left: String,
    pub generator: usize,
    pub right: String,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CubeRecord {
    #[serde(rename = "D")]
    pub d: usize,
    pub base_vertex: String,
    pub standard_decomposition: Vec<StandardSummand>,
    pub halved_decomposition: Vec<HalvedSummand>,
    pub te_dimension: Option<usize>,
    pub formula_value: usize,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StandardSummand {
    pub n: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct HalvedSummand {
    pub label: String,
    pub family: u8,
    pub n: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub status: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub unresolved: usize,
}

fn status_str(s: Status) -> &'static str {
    s.as_str()
}

pub fn certificate_record(cert: &MembershipCertificate) -> CertificateRecord {
    CertificateRecord {
        alphabet: cert.alphabet.iter().collect(),
        terms: cert
            .terms
            .iter()
            .map(|t| CertificateTermRecord {
                left: t.left.render(&cert.alphabet),
                generator: t.generator,
                right: t.right.render(&cert.alphabet),
                coeff: t.coeff.to_string(),
            })
            .collect(),
    }
}

pub fn item_record(item: &CheckItem) -> ItemRecord {
    ItemRecord {
        name: item.name.clone(),
        status: status_str(item.status),
        detail: item.detail.clone(),
        bound: item.bound,
        certificate: item.certificate.as_ref().map(certificate_record),
    }
}

/// Items sorted by name, so the record does not depend on check order.
pub fn suite_record(report: &Report) -> SuiteRecord {
    let mut items: Vec<ItemRecord> = report.items.iter().map(item_record).collect();
    items.sort_by(|a, b| a.name.cmp(&b.name));
    let status = if report.all_passed() {
        "pass"
    } else if report.items.iter().any(|i| i.status == Status::Fail) {
        "fail"
    } else {
        "unresolved-at-bound"
    };
    SuiteRecord { name: report.suite.clone(), status, items }
}

pub fn cube_record(summary: &CubeSummary) -> CubeRecord {
    CubeRecord {
        d: summary.d,
        base_vertex: summary.base_vertex.clone(),
        standard_decomposition: summary
            .standard
            .iter()
            .map(|&(n, multiplicity)| StandardSummand { n, multiplicity })
            .collect(),
        halved_decomposition: summary
            .halved
            .iter()
            .map(|(label, multiplicity)| HalvedSummand {
                label: label.to_string(),
                family: label.family_index(),
                n: label.n,
                multiplicity: *multiplicity,
            })
            .collect(),
        te_dimension: summary.te_dimension,
        formula_value: summary.formula_value,
        matches: summary.matches(),
    }
}

pub fn summarize(suites: &[SuiteRecord]) -> Summary {
    let mut summary = Summary { status: "pass", pass: 0, fail: 0, unresolved: 0 };
    for item in suites.iter().flat_map(|s| &s.items) {
        match item.status {
            "pass" => summary.pass += 1,
            "fail" => summary.fail += 1,
            _ => summary.unresolved += 1,
        }
    }
    if summary.fail > 0 {
        summary.status = "fail";
    } else if summary.unresolved > 0 {
        summary.status = "unresolved-at-bound";
    }
    summary
}

/// Dense rows of rational strings.
pub fn matrix_record(m: &SparseMatrix) -> Vec<Vec<String>> {
    m.to_dense().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
}
