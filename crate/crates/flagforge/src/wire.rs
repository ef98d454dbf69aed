//! JSON serialization: the `flagforge/1` flag-code document, verification
//! reports, and rank-metric code dumps.
//!
//! A flag-code document records the field (p, e, and the modulus as
//! constant-term-first coefficients), the parameters (n, k), the type, and
//! one generator matrix per flag together with its provenance label.
//! Serialization is deterministic, so identical codes yield identical
//! bytes. Parsing revalidates everything through the library constructors
//! and accepts any valid modulus, not just the canonical one the
//! construction emits.

use serde::{Deserialize, Serialize};

use crate::analysis::{Optimality, VerificationReport};
use crate::error::{Error, Result};
use crate::flag::{CodeParams, Family, Flag, FlagCode, FlagType, Provenance};
use crate::galois::Field;
use crate::matrix::MatGF;
use crate::rankmetric::MrdCode;

/// Format tag for flag-code documents.
pub const FORMAT: &str = "flagforge/1";

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u64>>,
}

impl MatrixDoc {
    fn of(m: &MatGF) -> MatrixDoc {
        MatrixDoc {
            rows: m.rows(),
            cols: m.cols(),
            data: m.row_codes(),
        }
    }

    fn build(&self, field: &Field) -> Result<MatGF> {
        if self.data.len() != self.rows || self.data.iter().any(|r| r.len() != self.cols) {
            return Err(Error::Format("matrix data does not match its shape".into()));
        }
        MatGF::from_rows(field.clone(), &self.data)
    }
}

#[derive(Serialize, Deserialize)]
struct ProvenanceDoc {
    family: String,
    index: u64,
}

#[derive(Serialize, Deserialize)]
struct FlagDoc {
    generator: MatrixDoc,
    provenance: ProvenanceDoc,
}

#[derive(Serialize, Deserialize)]
struct FlagCodeDoc {
    format: String,
    q: u64,
    p: u64,
    e: u32,
    modulus: Vec<u64>,
    n: usize,
    k: usize,
    #[serde(rename = "type")]
    ticks: Vec<usize>,
    flags: Vec<FlagDoc>,
}

/// Serialize a flag code. Every flag must carry its generator matrix,
/// which all construction and parsing paths guarantee.
pub fn flag_code_to_json(code: &FlagCode) -> Result<String> {
    let field = code.field();
    let mut flags = Vec::with_capacity(code.len());
    for (flag, prov) in code.flags().iter().zip(code.provenance()) {
        let gen = flag.generator().ok_or_else(|| {
            Error::Format("flag without a generator matrix cannot be serialized".into())
        })?;
        flags.push(FlagDoc {
            generator: MatrixDoc::of(gen),
            provenance: ProvenanceDoc {
                family: prov.family.label(),
                index: prov.index,
            },
        });
    }
    let doc = FlagCodeDoc {
        format: FORMAT.to_string(),
        q: field.order(),
        p: field.p(),
        e: field.e(),
        modulus: field.modulus().iter().map(|&c| c as u64).collect(),
        n: code.params().n,
        k: code.params().k,
        ticks: code.flag_type().ticks().to_vec(),
        flags,
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Format(e.to_string()))
}

/// Parse and fully validate a flag-code document.
pub fn flag_code_from_json(text: &str) -> Result<FlagCode> {
    let doc: FlagCodeDoc =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    if doc.format != FORMAT {
        return Err(Error::Format(format!(
            "unsupported format tag {:?}, expected {FORMAT:?}",
            doc.format
        )));
    }
    let field = Field::with_modulus(doc.p, doc.e, &doc.modulus)?;
    if field.order() != doc.q {
        return Err(Error::Format(format!(
            "declared order {} does not match p^e = {}",
            doc.q,
            field.order()
        )));
    }
    let params = CodeParams::derive(doc.q, doc.n, doc.k)?;
    let ty = FlagType::new(doc.n, doc.ticks)?;
    let mut flags = Vec::with_capacity(doc.flags.len());
    let mut provenance = Vec::with_capacity(doc.flags.len());
    for fd in &doc.flags {
        let gen = fd.generator.build(&field)?;
        flags.push(Flag::from_matrix(&gen, &ty)?);
        provenance.push(Provenance {
            family: Family::parse(&fd.provenance.family)?,
            index: fd.provenance.index,
        });
    }
    FlagCode::from_parts(field, params, ty, flags, provenance)
}

#[derive(Serialize, Deserialize)]
struct TickDoc {
    tick: usize,
    size: usize,
    min_distance: usize,
    target: usize,
    attains: bool,
}

#[derive(Serialize, Deserialize)]
struct ReportDoc {
    q: u64,
    n: usize,
    k: usize,
    #[serde(rename = "type")]
    ticks: Vec<usize>,
    size: usize,
    min_flag_distance: usize,
    max_distance_bound: usize,
    disjoint: bool,
    per_tick: Vec<TickDoc>,
    is_odfc: bool,
    size_formula: String,
    upper_bound: Option<String>,
    bound_exact: bool,
    optimality: String,
}

/// Stable string label for an optimality verdict.
pub fn optimality_label(o: Optimality) -> &'static str {
    match o {
        Optimality::Optimal => "optimal",
        Optimality::NotProvenOptimal => "not-proven-optimal",
        Optimality::BoundInapplicable => "bound-inapplicable",
    }
}

/// Serialize a verification report; unbounded integers become decimal
/// strings.
pub fn report_to_json(report: &VerificationReport) -> Result<String> {
    let doc = ReportDoc {
        q: report.q,
        n: report.n,
        k: report.k,
        ticks: report.ticks.clone(),
        size: report.size,
        min_flag_distance: report.min_flag_distance,
        max_distance_bound: report.max_distance_bound,
        disjoint: report.disjoint,
        per_tick: report
            .per_tick
            .iter()
            .map(|t| TickDoc {
                tick: t.tick,
                size: t.size,
                min_distance: t.min_distance,
                target: t.target,
                attains: t.attains,
            })
            .collect(),
        is_odfc: report.is_odfc,
        size_formula: report.size_formula.to_string(),
        upper_bound: report.upper_bound.as_ref().map(|b| b.to_string()),
        bound_exact: report.bound_exact,
        optimality: optimality_label(report.optimality).to_string(),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Format(e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct MrdDoc {
    q: u64,
    m: usize,
    delta: usize,
    dimension: usize,
    ext_modulus: Vec<u64>,
    codeword_count: u64,
    min_rank_distance: Option<usize>,
    is_mrd: bool,
    codewords: Vec<MatrixDoc>,
}

/// Serialize a rank-metric code with its verified minimum distance.
pub fn mrd_to_json(
    code: &MrdCode,
    words: &[MatGF],
    min_distance: Option<usize>,
    is_mrd: bool,
) -> Result<String> {
    let doc = MrdDoc {
        q: code.field().order(),
        m: code.m(),
        delta: code.delta(),
        dimension: code.dimension(),
        ext_modulus: code.ext_modulus(),
        codeword_count: code.codeword_count(),
        min_rank_distance: min_distance,
        is_mrd,
        codewords: words.iter().map(MatrixDoc::of).collect(),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Format(e.to_string()))
}
