//! `sp`: analysis and construction of semiprimitive permutation groups.
//!
//! Reports are plain `key: value` lines in a documented fixed order, so runs
//! with identical inputs and configuration are byte-identical. Exit codes:
//! 0 analysis completed (negative answers live in the report), 1 usage or
//! parse error, 2 capacity exceeded.

mod files;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use semiprim::action::{make_action, TransitiveAction};
use semiprim::analysis;
use semiprim::config::Caps;
use semiprim::corpus;
use semiprim::error::Error as SpError;
use semiprim::glue;
use semiprim::group::PermGroup;
use semiprim::hom::Homomorphism;
use semiprim::iso;
use semiprim::perm::Permutation;
use semiprim::triple;
use semiprim::wreath::{self, WreathMode, WreathSpec};

#[derive(Parser)]
#[command(name = "sp", version, about = "Semiprimitive permutation group toolkit")]
struct Cli {
    /// Largest degree for realized coset actions.
    #[arg(long, global = true, default_value_t = 100_000)]
    degree_cap: usize,
    /// Largest group order for element-enumeration algorithms.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    order_cap: u128,
    /// Largest group order for the isomorphism search.
    #[arg(long, global = true, default_value_t = 100_000)]
    effort_cap: u128,
    /// Emit the frozen machine-readable format (adds a format line).
    #[arg(long, global = true)]
    porcelain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Semiprimitivity and the related predicates of a group file.
    Check { file: PathBuf },
    /// Plinths, the superplinth and the radical.
    Plinths { file: PathBuf },
    /// The radical alone.
    Rad { file: PathBuf },
    /// Structure classification (case, quotient types, glue witness).
    Classify { file: PathBuf },
    /// The quotient action by a normal subgroup given by generators.
    Quotient {
        file: PathBuf,
        /// Generators of the normal subgroup, in cycle notation.
        #[arg(long, required = true, num_args = 1..)]
        normal: Vec<String>,
    },
    /// Triple operations.
    Triple {
        #[command(subcommand)]
        cmd: TripleCmd,
    },
    /// Glue two semiprimitive actions along a stabilizer isomorphism.
    Glue {
        file1: PathBuf,
        file2: PathBuf,
        /// Images of the first stabilizer's generators in the second group
        /// (cycle notation); searched when omitted.
        #[arg(long, num_args = 1..)]
        iso: Option<Vec<String>>,
    },
    /// Wreath product of a group file action by a top group.
    Wreath {
        file_m: PathBuf,
        file_t: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
    },
    /// Permutational isomorphism test between two actions.
    Isocheck { file1: PathBuf, file2: PathBuf },
    /// Corpus operations.
    Corpus {
        #[command(subcommand)]
        cmd: CorpusCmd,
    },
}

#[derive(Subcommand)]
enum TripleCmd {
    /// Check the defining conditions of a triple file.
    Validate { file: PathBuf },
    /// Build the semiprimitive action of a triple file.
    Build { file: PathBuf },
    /// Extract the triple of a group file action at its plinth, printing a
    /// triple file.
    Extract { file: PathBuf },
}

#[derive(Subcommand)]
enum CorpusCmd {
    /// Run every manifest assertion, printing a pass/fail table.
    Run {
        #[arg(long)]
        filter: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Product,
    Imprimitive,
}

enum CliError {
    Usage(String),
    Capacity(String),
}

impl From<files::ParseError> for CliError {
    fn from(e: files::ParseError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SpError> for CliError {
    fn from(e: SpError) -> Self {
        match e {
            SpError::CapacityExceeded { .. } => CliError::Capacity(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    fn new(porcelain: bool) -> Report {
        let mut r = Report { lines: Vec::new() };
        if porcelain {
            r.push("format", "1");
        }
        r
    }
    fn push(&mut self, key: &str, value: impl ToString) {
        self.lines.push((key.to_string(), value.to_string()));
    }
    fn print(&self) {
        let mut out = String::new();
        for (k, v) in &self.lines {
            let _ = writeln!(out, "{k}: {v}");
        }
        print!("{out}");
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let caps = Caps {
        degree_cap: cli.degree_cap,
        order_cap: cli.order_cap,
        effort_cap: cli.effort_cap,
        ..Caps::default()
    };
    match run(&cli, caps) {
        Ok(report) => {
            report.print();
            ExitCode::SUCCESS
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load_action(
    path: &PathBuf,
    caps: Caps,
) -> Result<(files::GroupFile, TransitiveAction), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let gf = files::parse_group_file(&text)?;
    let stab = gf
        .stab
        .clone()
        .unwrap_or_else(|| PermGroup::trivial(gf.group.degree()));
    let action = make_action(&gf.group, &stab, caps)?;
    Ok((gf, action))
}

fn push_name(report: &mut Report, gf: &files::GroupFile) {
    if let Some(name) = &gf.name {
        report.push("name", name);
    }
}

fn run(cli: &Cli, caps: Caps) -> Result<Report, CliError> {
    let mut report = Report::new(cli.porcelain);
    match &cli.command {
        Command::Check { file } => {
            let (gf, action) = load_action(file, caps)?;
            push_name(&mut report, &gf);
            report.push("degree", action.degree());
            report.push("group_order", action.group_order());
            report.push("stabilizer_order", action.stab_order());
            let p = analysis::sp_predicates(&action)?;
            report.push("semiprimitive", yesno(p.is_semiprimitive));
            if let Some(witness) = &p.witness {
                report.push("witness_order", witness.order());
                for (i, g) in witness.generators().iter().enumerate() {
                    report.push(&format!("witness_gen_{i}"), g);
                }
            }
            report.push("quasiprimitive", yesno(p.is_quasiprimitive));
            report.push("innately_transitive", yesno(p.is_innately_transitive));
            report.push(
                "primitive",
                match p.is_primitive {
                    Some(b) => yesno(b),
                    None => "undecided",
                },
            );
            let r = analysis::plinth_report(&action)?;
            report.push("plinth_count", r.plinths.len());
            let mut orders: Vec<u128> = r.plinths.iter().map(|p| p.order()).collect();
            orders.sort_unstable();
            report.push(
                "plinth_orders",
                orders
                    .iter()
                    .map(|o| o.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            report.push("superplinth_order", r.superplinth.order());
            report.push("rad_order", r.rad.order());
        }
        Command::Plinths { file } => {
            let (gf, action) = load_action(file, caps)?;
            push_name(&mut report, &gf);
            let r = analysis::plinth_report(&action)?;
            report.push("plinth_count", r.plinths.len());
            for (i, (k, f)) in r.plinths.iter().zip(&r.flags).enumerate() {
                report.push(&format!("plinth_{i}_order"), k.order());
                report.push(&format!("plinth_{i}_regular"), yesno(f.regular));
                report.push(&format!("plinth_{i}_perfect"), yesno(f.perfect));
                report.push(&format!("plinth_{i}_soluble"), yesno(f.soluble));
            }
            report.push("superplinth_order", r.superplinth.order());
            report.push("rad_order", r.rad.order());
        }
        Command::Rad { file } => {
            let (gf, action) = load_action(file, caps)?;
            push_name(&mut report, &gf);
            let r = analysis::plinth_report(&action)?;
            report.push("rad_order", r.rad.order());
            for (i, g) in r.rad.generators().iter().enumerate() {
                report.push(&format!("rad_gen_{i}"), g);
            }
        }
        Command::Classify { file } => {
            let (gf, action) = load_action(file, caps)?;
            push_name(&mut report, &gf);
            let r = analysis::classify_structure(&action)?;
            report.push("case", r.case.label());
            report.push("s_order", r.s.order());
            report.push(
                "quotient_types",
                r.quotient_types
                    .iter()
                    .map(|c| {
                        if c.derived_rule {
                            format!("{}*", c.ty.label())
                        } else {
                            c.ty.label().to_string()
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(","),
            );
            report.push("glue_witness", r.glue_witness.label());
            if let Ok(cls) = analysis::classify_it_type(&action) {
                report.push("it_type", cls.ty.label());
                if let Some(rr) = cls.dq_r {
                    report.push("dq_r", rr);
                }
            }
        }
        Command::Quotient { file, normal } => {
            let (gf, action) = load_action(file, caps)?;
            push_name(&mut report, &gf);
            let degree = gf.group.degree();
            let gens: Vec<Permutation> = normal
                .iter()
                .flat_map(|s| files::split_elements(s))
                .map(|s| Permutation::parse(&s, degree))
                .collect::<Result<_, _>>()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let n = PermGroup::new(degree, gens);
            let (qa, _hom) = analysis::quotient_action(&action, &n)?;
            report.push("normal_order", n.order());
            report.push("degree", qa.degree());
            report.push("group_order", qa.group_order());
            report.push("stabilizer_order", qa.stab_order());
            let p = analysis::sp_predicates(&qa)?;
            report.push("semiprimitive", yesno(p.is_semiprimitive));
        }
        Command::Triple { cmd } => run_triple(cmd, caps, &mut report)?,
        Command::Glue { file1, file2, iso } => {
            let (_gf1, a1) = load_action(file1, caps)?;
            let (_gf2, a2) = load_action(file2, caps)?;
            let r1 = analysis::plinth_report(&a1)?;
            let r2 = analysis::plinth_report(&a2)?;
            let k1 = r1.plinths[0].clone();
            let k2 = r2.plinths[0].clone();
            let mu: Homomorphism = match iso {
                Some(images) => {
                    let degree2 = a2.ambient().degree();
                    let imgs: Vec<Permutation> = images
                        .iter()
                        .flat_map(|s| files::split_elements(s))
                        .map(|s| Permutation::parse(&s, degree2))
                        .collect::<Result<_, _>>()
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    Homomorphism::from_images(a1.stab(), a2.stab(), imgs)?
                }
                None => corpus::find_action_gluing(&a1, &k1, &a2, &k2, caps.effort_cap)?
                    .ok_or_else(|| CliError::Usage("no gluing isomorphism exists".to_string()))?,
            };
            let glued = glue::glue_actions(&a1, &k1, &a2, &k2, &mu)?;
            report.push("order", glued.group_order());
            report.push("degree", glued.degree());
            report.push("stabilizer_order", glued.stab_order());
            report.push("realization_degree", glued.ambient().degree());
            // When the glued action has dihedral shape, settle the
            // comparison explicitly.
            if glued.degree() % 2 == 1
                && glued.degree() >= 3
                && glued.group_order() == 2 * glued.degree()
            {
                let n = glued.degree() as usize;
                let d = semiprim::groups::dihedral(n);
                let db = make_action(&d, &d.point_stabilizer(0)?, caps)?;
                let outcome = iso::is_perm_isomorphic(&glued, &db, caps.effort_cap)?;
                report.push("isomorphic_to_dihedral", outcome.label());
            }
        }
        Command::Wreath {
            file_m,
            file_t,
            mode,
        } => {
            let (_gfm, m) = load_action(file_m, caps)?;
            let tf_text = std::fs::read_to_string(file_t)
                .map_err(|e| CliError::Usage(format!("{}: {e}", file_t.display())))?;
            let tf = files::parse_group_file(&tf_text)?;
            let mode = match mode {
                ModeArg::Product => WreathMode::Product,
                ModeArg::Imprimitive => WreathMode::Imprimitive,
            };
            let spec = WreathSpec::new(m, tf.group, mode)?;
            if matches!(mode, WreathMode::Product) {
                let criterion = wreath::wreath_sp_criterion(&spec)?;
                report.push("criterion_semiprimitive", yesno(criterion));
            }
            let built = wreath::wreath_build(&spec)?;
            report.push("degree", built.degree());
            report.push("order", built.group_order());
            report.push("stabilizer_order", built.stab_order());
            match analysis::sp_predicates(&built) {
                Ok(p) => report.push("semiprimitive", yesno(p.is_semiprimitive)),
                Err(SpError::CapacityExceeded { .. }) => {
                    report.push("semiprimitive", "capacity")
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Isocheck { file1, file2 } => {
            let (_gf1, a1) = load_action(file1, caps)?;
            let (_gf2, a2) = load_action(file2, caps)?;
            let outcome = iso::is_perm_isomorphic(&a1, &a2, caps.effort_cap)?;
            report.push("outcome", outcome.label());
        }
        Command::Corpus { cmd } => {
            let CorpusCmd::Run { filter } = cmd;
            let entries = corpus::corpus(caps)?;
            let mut all_pass = true;
            let mut total = 0usize;
            for entry in &entries {
                if let Some(f) = filter {
                    if !entry.tag.contains(f.as_str()) {
                        continue;
                    }
                }
                total += 1;
                let checks = corpus::verify_entry(entry);
                let failed: Vec<&corpus::CheckResult> =
                    checks.iter().filter(|c| !c.pass).collect();
                report.push(
                    &format!("entry_{}", entry.tag),
                    if failed.is_empty() {
                        format!("PASS ({} checks)", checks.len())
                    } else {
                        all_pass = false;
                        format!("FAIL ({}/{} checks)", failed.len(), checks.len())
                    },
                );
                for c in failed {
                    report.push(&format!("entry_{}_{}", entry.tag, c.name), &c.detail);
                }
            }
            report.push("entries", total);
            report.push("result", if all_pass { "PASS" } else { "FAIL" });
        }
    }
    Ok(report)
}

fn run_triple(cmd: &TripleCmd, caps: Caps, report: &mut Report) -> Result<(), CliError> {
    match cmd {
        TripleCmd::Validate { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            let tf = files::parse_triple_file(&text, &caps)?;
            let v = triple::validate_triple(&tf.triple, &caps)?;
            report.push("valid", yesno(v.valid));
            if let Some((condition, witness)) = &v.failure {
                report.push("failed_condition", condition);
                report.push("witness", witness);
            }
        }
        TripleCmd::Build { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            let tf = files::parse_triple_file(&text, &caps)?;
            let action = triple::build_from_triple(&tf.triple, &caps)?;
            report.push("degree", action.degree());
            report.push("order", action.group_order());
            report.push("stabilizer_order", action.stab_order());
        }
        TripleCmd::Extract { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| CliError::Usage(format!("{}: {e}", file.display())))?;
            let gf = files::parse_group_file(&text)?;
            let stab = gf
                .stab
                .clone()
                .unwrap_or_else(|| PermGroup::trivial(gf.group.degree()));
            let action = make_action(&gf.group, &stab, caps)?;
            let r = analysis::plinth_report(&action)?;
            let t = triple::extract_triple(&action, &r.plinths[0], &caps)?;
            print!("{}", files::render_triple(&t));
        }
    }
    Ok(())
}
