//! Full analysis of a code spec, rendered as `key=value` lines.

use std::fmt::Write as _;

use crate::code::{generator_matrix, CodeSpec, GeneratorMatrix};
use crate::error::Error;
use crate::mds::{
    closed_form_available, mds_both, mds_by_minors, mds_closed_form, min_distance_given, Distance, MdsVerdict, DEFAULT_BUDGET,
};
use crate::schur::SchurReport;

/// How the MDS verdict is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MdsCheck {
    Minors,
    ClosedForm,
    /// Both, failing on disagreement.
    Both,
    /// Both when a closed form applies, minors otherwise.
    Auto,
}

pub fn check_mds(g: &GeneratorMatrix, how: MdsCheck) -> Result<MdsVerdict, Error> {
    Ok(match how {
        MdsCheck::Minors => mds_by_minors(&g.matrix),
        MdsCheck::ClosedForm => mds_closed_form(&g.spec)?,
        MdsCheck::Both => mds_both(g)?,
        MdsCheck::Auto if closed_form_available(&g.spec) => mds_both(g)?,
        MdsCheck::Auto => mds_by_minors(&g.matrix),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub spec: CodeSpec,
    pub generator: GeneratorMatrix,
    pub length: usize,
    pub dimension: usize,
    pub distance: Distance,
    pub mds: MdsVerdict,
    pub schur: SchurReport,
    pub provenance: Vec<String>,
    pub warnings: Vec<String>,
}

impl AnalysisReport {
    /// `[N,k,d]`, or `[N,k]` when the distance is unknown.
    pub fn parameters(&self) -> String {
        match self.distance.value() {
            Some(d) => format!("[{},{},{}]", self.length, self.dimension, d),
            None => format!("[{},{}]", self.length, self.dimension),
        }
    }

    pub fn render(&self, verbose: bool) -> String {
        let s = &self.spec;
        let mut out = String::new();
        let _ = writeln!(out, "family={}", s.family);
        let _ = writeln!(out, "field={}", s.field.descriptor());
        let _ = writeln!(out, "hook={} twist={} extended={}", s.h, s.t, s.extended);
        let _ = writeln!(out, "params={}", self.parameters());
        let _ = writeln!(out, "distance={}", self.distance);
        let _ = writeln!(out, "{}", self.mds);
        let _ = writeln!(out, "{}", self.schur);
        for p in &self.provenance {
            let _ = writeln!(out, "guarantee={p}");
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning={w}");
        }
        if verbose {
            let alphas: Vec<String> = s.alphas.iter().map(|a| a.index().to_string()).collect();
            let _ = writeln!(out, "alphas=[{}]", alphas.join(","));
            let _ = writeln!(out, "b={} c={} lambda={} eta={}", s.b, s.c, s.lambda, s.eta);
            if let Some(w) = &self.mds.witness {
                let minor = self.generator.matrix.select_columns(w);
                let _ = writeln!(out, "witness_rank={}", minor.rank());
            }
            let _ = write!(out, "matrix={}", self.generator.matrix.to_text());
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AnalyzeOptions {
    pub budget: u128,
    pub mds: MdsCheck,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            mds: MdsCheck::Auto,
        }
    }
}

pub fn analyze(spec: &CodeSpec, opts: &AnalyzeOptions) -> Result<AnalysisReport, Error> {
    analyze_with(spec, opts, Vec::new(), Vec::new())
}

/// [`analyze`] with extra provenance and warnings from a builder.
pub fn analyze_with(
    spec: &CodeSpec,
    opts: &AnalyzeOptions,
    provenance: Vec<String>,
    extra_warnings: Vec<String>,
) -> Result<AnalysisReport, Error> {
    let generator = generator_matrix(spec)?;
    let mds = check_mds(&generator, opts.mds)?;
    let distance = min_distance_given(&generator.matrix, opts.budget, &mds);
    let schur = SchurReport::new(&generator.matrix, &mds);
    let mut warnings = spec.warnings();
    for w in extra_warnings {
        if !warnings.contains(&w) {
            warnings.push(w);
        }
    }
    Ok(AnalysisReport {
        spec: spec.clone(),
        length: generator.length(),
        dimension: generator.dimension(),
        generator,
        distance,
        mds,
        schur,
        provenance,
        warnings,
    })
}
