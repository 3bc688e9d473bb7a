//! Batch command-line front end with JSON outputs.
//!
//! Exit codes are a stable contract: 0 success/pass, 1 verification failure,
//! 2 usage or input error, 3 search exhausted within its depth or budget.
//! Outputs go to `--output` (written once, atomically) or stdout, and carry
//! no timing or environment data, so identical invocations produce
//! byte-identical results.

use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::json::{
    cyclo_to_dto, handle_from_dto, matrix_from_dto, matrix_to_dto, parse_family, parse_parity,
    pfaffian_to_dto, spec_to_dto, spinor_to_dto, to_json_string, CheckReportDto,
    EnumerateReportDto, MatrixDto, RepDto, SynthReportDto,
};
use braidrep_core::braid::{
    braid_relations_check, build_handle_with_cap, four_anyon_z_conjugation_check,
    spinor_equivalence_check_on, word_eval, BraidWord, RepFamily, RepSpec,
};
use braidrep_core::pfaffian::{
    build_explicit_with_cap, build_recursive_with_cap, build_unprojected_even,
    fusion_intertwine_check, MAX_ANYONS,
};
use braidrep_core::spinor::{build_gammas, build_spinor_rep_with_cap, eigenbasis, MAX_SLOTS};
use braidrep_core::synth::{
    builtin_targets, group_enumerate, synth_bfs, verify_word, EnumerateOutcome, GateTarget,
    MatchMode, SynthOutcome,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_FOUND: i32 = 3;

const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Parser)]
#[command(
    name = "braidrep",
    version,
    about = "Exact braid-group representations for Ising anyons: build, verify, evaluate, synthesize"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON result here instead of stdout
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Args)]
pub struct RepArgs {
    /// Representation family: pfaffian or spinor
    #[arg(long, default_value = "pfaffian")]
    pub family: String,
    /// Anyon count (even, at least 4)
    #[arg(long)]
    pub anyons: usize,
    /// Fermion parity: + or -
    #[arg(long, allow_hyphen_values = true)]
    pub parity: String,
}

#[derive(Subcommand)]
pub enum Command {
    /// Build a representation and dump its generators
    Gen {
        #[command(flatten)]
        rep: RepArgs,
        /// Construction route for the pfaffian family: recursive or explicit
        #[arg(long, default_value = "recursive")]
        method: String,
    },
    /// Run the construction, relation and fusion check suites
    Verify {
        #[arg(long)]
        anyons: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        parity: Option<String>,
        /// Check a previously dumped representation file instead of building
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Verify the equivalence between the two representation families
    Equiv {
        #[arg(long)]
        anyons: usize,
        #[arg(long, allow_hyphen_values = true)]
        parity: String,
        /// Deliberately use the wrong eigenspace ordering (negative control)
        #[arg(long, hide = true)]
        debug_wrong_basis: bool,
    },
    /// Evaluate a braid word to its exact matrix
    Eval {
        #[command(flatten)]
        rep: RepArgs,
        /// Whitespace-separated signed generator indices, e.g. "1 2 -3"
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        word: String,
    },
    /// Compile a target gate into a braid word by breadth-first search
    Synth {
        #[command(flatten)]
        rep: RepArgs,
        /// Built-in target name: z, x or cnot
        #[arg(long)]
        target: Option<String>,
        /// JSON matrix file to use as the target
        #[arg(long)]
        target_file: Option<PathBuf>,
        #[arg(long, default_value_t = 9)]
        max_depth: usize,
        /// State budget (default 10^7, or BRAIDREP_BUDGET)
        #[arg(long)]
        budget: Option<usize>,
        /// Match exactly instead of up to global phase
        #[arg(long)]
        exact: bool,
    },
    /// Enumerate the image group of a representation modulo phase
    Enumerate {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long)]
        budget: Option<usize>,
    },
}

struct Failure {
    message: String,
    exit: i32,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            exit: EXIT_USAGE,
        }
    }
}

impl From<braidrep_core::Error> for Failure {
    fn from(e: braidrep_core::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

fn max_anyons_cap() -> usize {
    std::env::var("BRAIDREP_MAX_ANYONS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(MAX_ANYONS)
}

fn default_budget() -> usize {
    std::env::var("BRAIDREP_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

fn parse_rep_args(rep: &RepArgs) -> Result<RepSpec, Failure> {
    let family = parse_family(&rep.family).map_err(Failure::usage)?;
    let parity = parse_parity(&rep.parity).map_err(Failure::usage)?;
    let cap = max_anyons_cap();
    validate_anyons(rep.anyons, family, cap)?;
    Ok(RepSpec {
        family,
        anyons: rep.anyons,
        parity,
    })
}

fn validate_anyons(anyons: usize, family: RepFamily, cap: usize) -> Result<(), Failure> {
    if anyons < 4 || anyons % 2 != 0 {
        return Err(Failure::usage(format!(
            "anyon count must be even and at least 4, got {anyons}"
        )));
    }
    let family_cap = match family {
        RepFamily::Pfaffian => cap,
        RepFamily::Spinor => {
            if cap == MAX_ANYONS {
                2 * MAX_SLOTS
            } else {
                cap
            }
        }
    };
    if anyons > family_cap {
        return Err(Failure::usage(format!(
            "anyon count {anyons} exceeds the capacity {family_cap} for the {} family",
            family.name()
        )));
    }
    Ok(())
}

fn cmd_gen(rep: &RepArgs, method: &str) -> Result<(String, i32), Failure> {
    let spec = parse_rep_args(rep)?;
    let cap = max_anyons_cap();
    let dto: RepDto = match spec.family {
        RepFamily::Pfaffian => {
            let built = match method {
                "recursive" => build_recursive_with_cap(spec.anyons, spec.parity, cap)?,
                "explicit" => build_explicit_with_cap(spec.anyons, spec.parity, cap)?,
                other => {
                    return Err(Failure::usage(format!(
                        "method must be recursive or explicit, got {other:?}"
                    )))
                }
            };
            pfaffian_to_dto(&built)
        }
        RepFamily::Spinor => {
            let slots = spec.anyons / 2;
            let slot_cap = if cap == MAX_ANYONS {
                MAX_SLOTS
            } else {
                cap / 2
            };
            spinor_to_dto(&build_spinor_rep_with_cap(slots, spec.parity, slot_cap)?)
        }
    };
    Ok((to_json_string(&dto), EXIT_OK))
}

fn cmd_verify(
    anyons: Option<usize>,
    parity: Option<&str>,
    input: Option<&Path>,
) -> Result<(String, i32), Failure> {
    if let Some(path) = input {
        return verify_input_file(path);
    }
    let anyons = anyons.ok_or_else(|| Failure::usage("verify needs --anyons (or --input)"))?;
    let parity =
        parse_parity(parity.ok_or_else(|| Failure::usage("verify needs --parity (or --input)"))?)
            .map_err(Failure::usage)?;
    validate_anyons(anyons, RepFamily::Pfaffian, max_anyons_cap())?;
    let cap = max_anyons_cap();

    let mut failures: Vec<String> = Vec::new();

    let recursive = build_recursive_with_cap(anyons, parity, cap)?;
    let explicit = build_explicit_with_cap(anyons, parity, cap)?;
    for j in 1..=anyons - 1 {
        if recursive.generator(j)? != explicit.generator(j)? {
            failures.push(format!(
                "construction: recursive != explicit at generator {j}"
            ));
        }
    }

    let other = build_recursive_with_cap(anyons, parity.flip(), cap)?;
    for j in 1..=anyons - 2 {
        if recursive.generator(j)? != other.generator(j)? {
            failures.push(format!(
                "cross-parity: generator {j} differs between parities"
            ));
        }
    }
    if recursive.generator(anyons - 1)? == other.generator(anyons - 1)? {
        failures.push("cross-parity: final generators must differ".to_string());
    }

    let handle = build_handle_with_cap(
        &RepSpec {
            family: RepFamily::Pfaffian,
            anyons,
            parity,
        },
        cap,
    )?;
    for f in braid_relations_check(&handle)?.failures {
        failures.push(format!("pfaffian relations: {f:?}"));
    }
    if anyons / 2 <= MAX_SLOTS {
        let spin = build_handle_with_cap(
            &RepSpec {
                family: RepFamily::Spinor,
                anyons,
                parity,
            },
            cap,
        )?;
        for f in braid_relations_check(&spin)?.failures {
            failures.push(format!("spinor relations: {f:?}"));
        }
    }

    let slots = anyons / 2;
    if slots <= MAX_SLOTS {
        let gammas = build_gammas(slots)?;
        let proj = gammas.projector(parity);
        let basis = eigenbasis(slots, parity);
        for j in (2..=anyons - 2).step_by(2) {
            let pipeline = build_unprojected_even(anyons, j)?
                .mul(&proj)?
                .compress(&basis)?;
            if &pipeline != explicit.generator(j)? {
                failures.push(format!("projection pipeline: mismatch at generator {j}"));
            }
        }
    }

    if anyons >= 6 {
        let report = fusion_intertwine_check(anyons, parity)?;
        for f in report.failures {
            failures.push(format!(
                "fusion intertwiner: {:?} at generator {}",
                f.kind, f.j
            ));
        }
    }

    let passed = failures.is_empty();
    let report = CheckReportDto {
        check: "verify".to_string(),
        size: anyons,
        parity: parity.symbol().to_string(),
        passed,
        failures,
    };
    Ok((
        to_json_string(&report),
        if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
    ))
}

fn verify_input_file(path: &Path) -> Result<(String, i32), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    let dto: RepDto = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("cannot parse {}: {e}", path.display())))?;
    let handle = handle_from_dto(&dto).map_err(Failure::usage)?;
    let mut failures = Vec::new();
    for (k, g) in handle.generators.iter().enumerate() {
        if !g.is_unitary() {
            failures.push(format!("generator {} is not unitary", k + 1));
        }
    }
    for f in braid_relations_check(&handle)?.failures {
        failures.push(format!("relations: {f:?}"));
    }
    let passed = failures.is_empty();
    let report = CheckReportDto {
        check: "verify".to_string(),
        size: handle.spec.anyons,
        parity: handle.spec.parity.symbol().to_string(),
        passed,
        failures,
    };
    Ok((
        to_json_string(&report),
        if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
    ))
}

fn cmd_equiv(anyons: usize, parity: &str, wrong_basis: bool) -> Result<(String, i32), Failure> {
    let parity = parse_parity(parity).map_err(Failure::usage)?;
    validate_anyons(anyons, RepFamily::Spinor, max_anyons_cap())?;
    let mut failures = Vec::new();
    let report = spinor_equivalence_check_on(anyons, parity, wrong_basis)?;
    for f in report.failures {
        failures.push(format!("generator {}: {}", f.j, f.check));
    }
    if anyons == 4 {
        for f in four_anyon_z_conjugation_check()?.failures {
            failures.push(format!("four-anyon generator {}: {}", f.j, f.check));
        }
    }
    let passed = failures.is_empty();
    let dto = CheckReportDto {
        check: "equiv".to_string(),
        size: anyons,
        parity: parity.symbol().to_string(),
        passed,
        failures,
    };
    Ok((
        to_json_string(&dto),
        if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
    ))
}

fn cmd_eval(rep: &RepArgs, word: &str) -> Result<(String, i32), Failure> {
    let spec = parse_rep_args(rep)?;
    let handle = build_handle_with_cap(&spec, max_anyons_cap())?;
    let parsed = BraidWord::parse(spec.anyons, word)?;
    let matrix = word_eval(&handle, &parsed)?;
    Ok((to_json_string(&matrix_to_dto(&matrix, true)), EXIT_OK))
}

fn resolve_target(
    spec: &RepSpec,
    dimension: usize,
    name: Option<&str>,
    file: Option<&Path>,
    exact: bool,
) -> Result<GateTarget, Failure> {
    let mode = if exact {
        MatchMode::Exact
    } else {
        MatchMode::UpToGlobalPhase
    };
    match (name, file) {
        (Some(name), None) => {
            let qubits = spec.anyons / 2 - 1;
            let mut targets = builtin_targets(qubits);
            let found = targets.iter().position(|t| t.name == name).ok_or_else(|| {
                Failure::usage(format!(
                    "unknown target {name:?} for {qubits} qubit(s); available: z, x{}",
                    if qubits >= 2 { ", cnot" } else { "" }
                ))
            })?;
            let mut t = targets.swap_remove(found);
            t.match_mode = mode;
            Ok(t)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            let dto: MatrixDto = serde_json::from_str(&text)
                .map_err(|e| Failure::usage(format!("cannot parse {}: {e}", path.display())))?;
            let matrix = matrix_from_dto(&dto).map_err(Failure::usage)?;
            if matrix.rows() != dimension {
                return Err(Failure::usage(format!(
                    "target is {}x{} but the representation has dimension {dimension}",
                    matrix.rows(),
                    matrix.cols()
                )));
            }
            GateTarget::new(&path.display().to_string(), matrix, mode)
                .map_err(|_| Failure::usage("target matrix must be unitary"))
        }
        _ => Err(Failure::usage(
            "give exactly one of --target or --target-file",
        )),
    }
}

fn synth_attempt(
    handle: &braidrep_core::braid::RepHandle,
    target: &GateTarget,
    max_depth: usize,
    budget: usize,
    conjugation: Option<&str>,
) -> Result<SynthReportDto, Failure> {
    let outcome = synth_bfs(handle, target, max_depth, budget)?;
    let mut dto = SynthReportDto {
        target: target.name.clone(),
        rep: spec_to_dto(&handle.spec),
        found: false,
        word: None,
        length: None,
        phase: None,
        explored: 0,
        max_depth,
        outcome: String::new(),
        conjugation: conjugation.map(str::to_string),
        retries: Vec::new(),
    };
    match outcome {
        SynthOutcome::Found(r) => {
            // round-trip: the reported word must re-verify against the target
            let (ok, _) = verify_word(handle, &r.word, target)?;
            if !ok {
                return Err(Failure::usage(
                    "internal: synthesized word failed verification",
                ));
            }
            dto.found = true;
            dto.word = Some(r.word.to_text());
            dto.length = Some(r.word.len());
            dto.phase = Some(cyclo_to_dto(&r.phase));
            dto.explored = r.explored;
            dto.outcome = "found".to_string();
        }
        SynthOutcome::Exhausted { explored, .. } => {
            dto.explored = explored;
            dto.outcome = "exhausted".to_string();
        }
        SynthOutcome::BudgetExceeded { explored, .. } => {
            dto.explored = explored;
            dto.outcome = "budget_exceeded".to_string();
        }
    }
    Ok(dto)
}

fn cmd_synth(
    rep: &RepArgs,
    target_name: Option<&str>,
    target_file: Option<&Path>,
    max_depth: usize,
    budget: Option<usize>,
    exact: bool,
) -> Result<(String, i32), Failure> {
    let spec = parse_rep_args(rep)?;
    let handle = build_handle_with_cap(&spec, max_anyons_cap())?;
    let target = resolve_target(&spec, handle.dimension, target_name, target_file, exact)?;
    let budget = budget.unwrap_or_else(default_budget);

    let mut report = synth_attempt(&handle, &target, max_depth, budget, None)?;

    // The cited braiding construction for cnot uses a different inert-pair
    // convention; when the direct search comes up empty, retry against the
    // target conjugated by the convention-change word B4 B3 B5 B4.
    if !report.found && target.name == "cnot" && spec.anyons == 6 {
        let u = word_eval(&handle, &BraidWord::parse(6, "4 3 5 4")?)?;
        let u_inv = u.dagger();
        for (label, conjugated) in [
            ("u * target * u^-1", u.mul(&target.matrix)?.mul(&u_inv)?),
            ("u^-1 * target * u", u_inv.mul(&target.matrix)?.mul(&u)?),
        ] {
            let retry_target = GateTarget::new(&target.name, conjugated, target.match_mode)
                .map_err(Failure::from)?;
            report.retries.push(synth_attempt(
                &handle,
                &retry_target,
                max_depth,
                budget,
                Some(label),
            )?);
        }
    }

    let any_found = report.found || report.retries.iter().any(|r| r.found);
    let exit = if any_found { EXIT_OK } else { EXIT_NOT_FOUND };
    Ok((to_json_string(&report), exit))
}

fn cmd_enumerate(rep: &RepArgs, budget: Option<usize>) -> Result<(String, i32), Failure> {
    let spec = parse_rep_args(rep)?;
    let handle = build_handle_with_cap(&spec, max_anyons_cap())?;
    let budget = budget.unwrap_or_else(default_budget);
    let (dto, exit) = match group_enumerate(&handle, budget)? {
        EnumerateOutcome::Complete { order, diameter } => (
            EnumerateReportDto {
                rep: spec_to_dto(&spec),
                outcome: "complete".to_string(),
                order: Some(order),
                diameter: Some(diameter),
                explored: order,
                budget,
            },
            EXIT_OK,
        ),
        EnumerateOutcome::BudgetExceeded { explored, .. } => (
            EnumerateReportDto {
                rep: spec_to_dto(&spec),
                outcome: "budget_exceeded".to_string(),
                order: None,
                diameter: None,
                explored,
                budget,
            },
            EXIT_NOT_FOUND,
        ),
    };
    Ok((to_json_string(&dto), exit))
}

fn execute(cli: &Cli) -> Result<(String, i32), Failure> {
    match &cli.command {
        Command::Gen { rep, method } => cmd_gen(rep, method),
        Command::Verify {
            anyons,
            parity,
            input,
        } => cmd_verify(*anyons, parity.as_deref(), input.as_deref()),
        Command::Equiv {
            anyons,
            parity,
            debug_wrong_basis,
        } => cmd_equiv(*anyons, parity, *debug_wrong_basis),
        Command::Eval { rep, word } => cmd_eval(rep, word),
        Command::Synth {
            rep,
            target,
            target_file,
            max_depth,
            budget,
            exact,
        } => cmd_synth(
            rep,
            target.as_deref(),
            target_file.as_deref(),
            *max_depth,
            *budget,
            *exact,
        ),
        Command::Enumerate { rep, budget } => cmd_enumerate(rep, *budget),
    }
}

fn write_output(path: Option<&Path>, contents: &str) -> Result<(), Failure> {
    match path {
        None => {
            print!("{contents}");
            Ok(())
        }
        Some(path) => {
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, contents)
                .and_then(|()| fs::rename(&tmp, path))
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
        }
    };
    match execute(&cli) {
        Ok((contents, exit)) => match write_output(cli.output.as_deref(), &contents) {
            Ok(()) => exit,
            Err(f) => {
                eprintln!("error: {}", f.message);
                f.exit
            }
        },
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.exit
        }
    }
}
