//! Worked instances with known parameters, rebuilt end to end and checked
//! against their expected values.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::construct::{build_subfield_chain_code, build_subgroup_code, ConstructedCode, SubfieldChainParams, SubgroupConstructionParams};
use crate::error::Error;
use crate::field::{GaloisField, MultiplicativeSubgroup};
use crate::report::{analyze_with, AnalysisReport, AnalyzeOptions, MdsCheck};
use crate::schur::Determination;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GoldenExample {
    /// Subfield chain `F_7 < F_49 < F_2401`, hook 0, `k = 3`.
    F7x4,
    /// Subgroup of order 11 in `F_23`, over `F_529`, hook 0, `k = 4`.
    F23x2,
    /// Subgroup of order 8 in `F_17` with `eta` in `F_17^*`, `k = 4`.
    F17,
    /// Subgroup of order 14 in `F_29`, over `F_841`, hook 3, `k = 4`.
    F29x2,
}

impl GoldenExample {
    pub const ALL: [GoldenExample; 4] = [GoldenExample::F7x4, GoldenExample::F23x2, GoldenExample::F17, GoldenExample::F29x2];

    pub fn id(self) -> &'static str {
        match self {
            GoldenExample::F7x4 => "7_4",
            GoldenExample::F23x2 => "23_2",
            GoldenExample::F17 => "17",
            GoldenExample::F29x2 => "29_2",
        }
    }

    /// The codes of this example with their expected values.
    pub fn cases(self) -> Result<Vec<GoldenCase>, Error> {
        let mut out = Vec::new();
        match self {
            GoldenExample::F7x4 => {
                let f = GaloisField::new(7, 4)?;
                let gamma = f.subfield_view(2)?.primitive_element();
                for (extended, d, dim) in [(false, 5, Some(6)), (true, 6, None)] {
                    let built = build_subfield_chain_code(&SubfieldChainParams {
                        ambient: f.clone(),
                        q0_degree: 1,
                        q1_degree: 2,
                        alphas: (0..6).map(|i| f.from_int(i)).collect(),
                        b: f.from_int(6),
                        c: f.from_int(5),
                        lambda: gamma.clone(),
                        eta: f.primitive_element(),
                        k: 3,
                        extended,
                    })?;
                    let n = 7 + usize::from(extended);
                    let expect = Expectation {
                        params: (n, 3, d),
                        schur_dim: dim,
                        non_rs: Some(true),
                        ctrs_incompatible: None,
                    };
                    out.push(GoldenCase {
                        label: label(self, extended),
                        built,
                        expect,
                    });
                }
            }
            GoldenExample::F23x2 => {
                let f = GaloisField::new(23, 2)?;
                for (extended, n, d) in [(false, 11, 8), (true, 12, 9)] {
                    let mut built = build_subgroup_code(&SubgroupConstructionParams {
                        eta: f.primitive_element(),
                        b: f.from_int(12),
                        c: f.from_int(7),
                        lambda: f.from_int(5),
                        ambient: f.clone(),
                        base_subfield_degree: 1,
                        group_order: 11,
                        subgroup: None,
                        h: 0,
                        k: 4,
                        extended,
                        unguaranteed: false,
                    })?;
                    built.spec.alphas.sort_by_key(|a| a.index());
                    let expect = Expectation {
                        params: (n, 4, d),
                        schur_dim: None,
                        non_rs: Some(true),
                        ctrs_incompatible: None,
                    };
                    out.push(GoldenCase {
                        label: label(self, extended),
                        built,
                        expect,
                    });
                }
            }
            GoldenExample::F17 => {
                let f = GaloisField::new(17, 1)?;
                let mut built = build_subgroup_code(&SubgroupConstructionParams {
                    eta: f.from_int(4),
                    b: f.from_int(1),
                    c: f.from_int(2),
                    lambda: f.from_int(10),
                    ambient: f.clone(),
                    base_subfield_degree: 1,
                    group_order: 8,
                    subgroup: None,
                    h: 0,
                    k: 4,
                    extended: false,
                    unguaranteed: true,
                })?;
                built.spec.alphas.sort_by_key(|a| a.index());
                let expect = Expectation {
                    params: (8, 4, 5),
                    schur_dim: Some(8),
                    non_rs: Some(true),
                    ctrs_incompatible: None,
                };
                out.push(GoldenCase {
                    label: label(self, false),
                    built,
                    expect,
                });
            }
            GoldenExample::F29x2 => {
                let f = GaloisField::new(29, 2)?;
                let listing = [1, 20, 4, 5, 22, 6, 23, 24, 7, 25, 9, 28, 13, 16]
                    .iter()
                    .map(|&x| f.from_int(x))
                    .collect();
                let group = MultiplicativeSubgroup::from_elements(listing)?;
                for (extended, n, d) in [(false, 14, 11), (true, 15, 12)] {
                    let built = build_subgroup_code(&SubgroupConstructionParams {
                        eta: f.primitive_element(),
                        b: f.from_int(12),
                        c: f.from_int(7),
                        lambda: f.from_int(15),
                        ambient: f.clone(),
                        base_subfield_degree: 1,
                        group_order: 14,
                        subgroup: Some(group.clone()),
                        h: 3,
                        k: 4,
                        extended,
                        unguaranteed: false,
                    })?;
                    let expect = Expectation {
                        params: (n, 4, d),
                        schur_dim: Some(9),
                        non_rs: Some(true),
                        ctrs_incompatible: Some(true),
                    };
                    out.push(GoldenCase {
                        label: label(self, extended),
                        built,
                        expect,
                    });
                }
            }
        }
        Ok(out)
    }
}

fn label(ex: GoldenExample, extended: bool) -> String {
    if extended {
        format!("{}/extended", ex.id())
    } else {
        ex.id().to_string()
    }
}

impl fmt::Display for GoldenExample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for GoldenExample {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GoldenExample::ALL
            .into_iter()
            .find(|e| e.id() == s)
            .ok_or_else(|| format!("unknown example {s:?}; expected one of 7_4, 23_2, 17, 29_2"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    /// `[N, k, d]`
    pub params: (usize, usize, usize),
    pub schur_dim: Option<usize>,
    pub non_rs: Option<bool>,
    pub ctrs_incompatible: Option<bool>,
}

#[derive(Debug, Clone)]
pub struct GoldenCase {
    pub label: String,
    pub built: ConstructedCode,
    pub expect: Expectation,
}

#[derive(Debug, Clone)]
pub struct GoldenOutcome {
    pub label: String,
    pub report: AnalysisReport,
    pub mismatches: Vec<String>,
}

impl GoldenOutcome {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn render(&self, verbose: bool) -> String {
        let mut s = format!("example={}\n", self.label);
        s.push_str(&self.report.render(verbose));
        for m in &self.mismatches {
            let _ = writeln!(s, "mismatch={m}");
        }
        let _ = writeln!(s, "status={}", if self.passed() { "ok" } else { "FAILED" });
        s
    }
}

fn determination_matches(got: Determination, want: Option<bool>) -> bool {
    match want {
        None => true,
        Some(true) => got == Determination::Yes,
        Some(false) => got == Determination::No,
    }
}

/// Analyzes one case, cross-checking closed form against minors.
pub fn run_case(case: &GoldenCase, budget: u128) -> Result<GoldenOutcome, Error> {
    let opts = AnalyzeOptions {
        budget,
        mds: MdsCheck::Auto,
    };
    let report = analyze_with(
        &case.built.spec,
        &opts,
        case.built.guarantees.provenance(),
        case.built.warnings.clone(),
    )?;
    let e = &case.expect;
    let mut mismatches = Vec::new();
    let (n, k, d) = e.params;
    if (report.length, report.dimension, report.distance.value()) != (n, k, Some(d)) {
        mismatches.push(format!("expected params [{n},{k},{d}], got {}", report.parameters()));
    }
    if !report.mds.is_mds {
        mismatches.push(format!("expected an MDS code, got {}", report.mds));
    }
    if let Some(dim) = e.schur_dim {
        if report.schur.dim != dim {
            mismatches.push(format!("expected schur_dim={dim}, got {}", report.schur.dim));
        }
    }
    if !determination_matches(report.schur.non_rs, e.non_rs) {
        mismatches.push(format!(
            "expected non_rs={}, got {}",
            e.non_rs.unwrap_or_default(),
            report.schur.non_rs
        ));
    }
    if !determination_matches(report.schur.ctrs_incompatible, e.ctrs_incompatible) {
        mismatches.push(format!(
            "expected ctrs_incompatible={}, got {}",
            e.ctrs_incompatible.unwrap_or_default(),
            report.schur.ctrs_incompatible
        ));
    }
    Ok(GoldenOutcome {
        label: case.label.clone(),
        report,
        mismatches,
    })
}

pub fn reproduce(example: GoldenExample, budget: u128) -> Result<Vec<GoldenOutcome>, Error> {
    example.cases()?.iter().map(|c| run_case(c, budget)).collect()
}
