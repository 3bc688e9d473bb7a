//! JSON wire formats.
//!
//! Scalars serialize as four `[numerator-decimal-string, denom_exp]` pairs in
//! basis order (1, ω, ω², ω³); matrices as row-major entry lists with an
//! optional `float_entries` shadow of `[re, im]` pairs that is informative
//! only and never parsed back. Struct field order is fixed, so equal inputs
//! produce byte-identical output.

use std::str::FromStr;

use braidrep_core::braid::{RepFamily, RepHandle, RepSpec};
use braidrep_core::pfaffian::{BasisState, PfaffRep};
use braidrep_core::spinor::SpinorRep;
use braidrep_core::{CycloNum, Dyadic, ExactMatrix, Parity};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CycloDto(pub [(String, u32); 4]);

pub fn cyclo_to_dto(c: &CycloNum) -> CycloDto {
    let [c0, c1, c2, c3] = c.coeffs();
    let pair = |d: &Dyadic| (d.numer().to_string(), d.denom_exp());
    CycloDto([pair(c0), pair(c1), pair(c2), pair(c3)])
}

pub fn cyclo_from_dto(dto: &CycloDto) -> Result<CycloNum, String> {
    let mut coeffs = Vec::with_capacity(4);
    for (numer, exp) in &dto.0 {
        let n = BigInt::from_str(numer).map_err(|e| format!("bad numerator {numer:?}: {e}"))?;
        coeffs.push(Dyadic::new(n, *exp));
    }
    let arr: [Dyadic; 4] = coeffs.try_into().expect("four coefficients");
    Ok(CycloNum::new(arr))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<CycloDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub float_entries: Option<Vec<[f64; 2]>>,
}

pub fn matrix_to_dto(m: &ExactMatrix, with_floats: bool) -> MatrixDto {
    MatrixDto {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.entries().iter().map(cyclo_to_dto).collect(),
        float_entries: with_floats.then(|| {
            m.entries()
                .iter()
                .map(|e| {
                    let (re, im) = e.to_complex();
                    [re, im]
                })
                .collect()
        }),
    }
}

pub fn matrix_from_dto(dto: &MatrixDto) -> Result<ExactMatrix, String> {
    let entries: Result<Vec<CycloNum>, String> = dto.entries.iter().map(cyclo_from_dto).collect();
    ExactMatrix::new(dto.rows, dto.cols, entries?).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepSpecDto {
    pub family: String,
    pub anyons: usize,
    pub parity: String,
}

pub fn spec_to_dto(spec: &RepSpec) -> RepSpecDto {
    RepSpecDto {
        family: spec.family.name().to_string(),
        anyons: spec.anyons,
        parity: spec.parity.symbol().to_string(),
    }
}

pub fn parse_parity(text: &str) -> Result<Parity, String> {
    match text {
        "+" | "plus" => Ok(Parity::Plus),
        "-" | "minus" => Ok(Parity::Minus),
        other => Err(format!("parity must be + or -, got {other:?}")),
    }
}

pub fn parse_family(text: &str) -> Result<RepFamily, String> {
    match text {
        "pfaffian" => Ok(RepFamily::Pfaffian),
        "spinor" => Ok(RepFamily::Spinor),
        other => Err(format!("family must be pfaffian or spinor, got {other:?}")),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisStateDto {
    pub signs: String,
    pub completion: String,
}

fn basis_to_dto(state: &BasisState) -> BasisStateDto {
    BasisStateDto {
        signs: state.signs().iter().map(|s| s.symbol()).collect(),
        completion: state.completion().symbol().to_string(),
    }
}

/// Dump of one built representation: spec fields, dimension, generators,
/// plus the basis listing (wave-function side) or the kept eigenspace
/// indices (spinor side).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepDto {
    pub family: String,
    pub anyons: usize,
    pub parity: String,
    pub dimension: usize,
    pub generators: Vec<MatrixDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub basis: Option<Vec<BasisStateDto>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eigenbasis: Option<Vec<usize>>,
}

pub fn pfaffian_to_dto(rep: &PfaffRep) -> RepDto {
    RepDto {
        family: "pfaffian".to_string(),
        anyons: rep.anyons(),
        parity: rep.parity().symbol().to_string(),
        dimension: rep.dimension(),
        generators: rep
            .generators()
            .iter()
            .map(|g| matrix_to_dto(g, true))
            .collect(),
        basis: Some(rep.basis().iter().map(basis_to_dto).collect()),
        eigenbasis: None,
    }
}

pub fn spinor_to_dto(rep: &SpinorRep) -> RepDto {
    RepDto {
        family: "spinor".to_string(),
        anyons: rep.strands(),
        parity: rep.parity().symbol().to_string(),
        dimension: rep.dimension(),
        generators: rep
            .generators()
            .iter()
            .map(|g| matrix_to_dto(g, true))
            .collect(),
        basis: None,
        eigenbasis: Some(rep.eigenbasis().to_vec()),
    }
}

/// Rebuilds an evaluation handle from a dump; float shadows are ignored.
pub fn handle_from_dto(dto: &RepDto) -> Result<RepHandle, String> {
    let family = parse_family(&dto.family)?;
    let parity = parse_parity(&dto.parity)?;
    if dto.generators.len() + 1 != dto.anyons {
        return Err(format!(
            "expected {} generators for {} anyons, found {}",
            dto.anyons - 1,
            dto.anyons,
            dto.generators.len()
        ));
    }
    let generators: Result<Vec<ExactMatrix>, String> =
        dto.generators.iter().map(matrix_from_dto).collect();
    Ok(RepHandle {
        spec: RepSpec {
            family,
            anyons: dto.anyons,
            parity,
        },
        dimension: dto.dimension,
        generators: generators?,
    })
}

/// Flat pass/fail report shared by the verification commands.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReportDto {
    pub check: String,
    pub size: usize,
    pub parity: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SynthReportDto {
    pub target: String,
    pub rep: RepSpecDto,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub phase: Option<CycloDto>,
    pub explored: usize,
    pub max_depth: usize,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub conjugation: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub retries: Vec<SynthReportDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnumerateReportDto {
    pub rep: RepSpecDto,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diameter: Option<usize>,
    pub explored: usize,
    pub budget: usize,
}

/// Canonical output encoding: pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}
