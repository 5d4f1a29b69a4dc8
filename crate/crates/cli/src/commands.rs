use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use hurwitz_core::braid::{
    adjacent_square_orbits, full_braid_orbits, pure_braid_orbits, OrbitReport,
};
use hurwitz_core::degeneration::{
    connect_bfs, connect_sequences, enumerate_sequences, DegenConfig, NodeIndexSequence,
};
use hurwitz_core::enumerate::{enumerate_classes, genus_zero_problems, hurwitz_number, EnumConfig};
use hurwitz_core::explicit::{
    four_point_classify, four_point_enumerate, four_point_path, Case, FourPointParams,
    FourPointProblem,
};
use hurwitz_core::factorization::parse_tuple;
use hurwitz_core::groupid::generated_group_with;
use hurwitz_core::perm::parse_cycles;
use hurwitz_core::{Factorization, HurwitzProblem};

use crate::config::Settings;
use crate::error::CliError;
use crate::report::{
    sigma_json, FourPointEntryJson, FourPointListJson, OrbitReportJson, TableJson, TableRow,
    FOURPOINT_SCHEMA, TABLE_SCHEMA,
};
use crate::{
    DegenerateAction, Format, FourpointAction, GeneratorSet, MaybeProblemArgs, ProblemArgs,
};

/// `println!` that reports a closed stdout as an error instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {
        writeln!(io::stdout().lock(), $($arg)*)?
    };
}

/// Sorts `e` ascending unless told not to, noting the reordering on stderr.
fn normalize_e(e: Vec<usize>, no_sort: bool) -> Vec<usize> {
    if no_sort || e.is_sorted() {
        return e;
    }
    let mut order: Vec<usize> = (0..e.len()).collect();
    order.sort_by_key(|&i| (e[i], i));
    let sorted: Vec<usize> = order.iter().map(|&i| e[i]).collect();
    eprintln!(
        "note: sorted e to {} (input positions {})",
        join(&sorted),
        join(&order.iter().map(|i| i + 1).collect::<Vec<_>>())
    );
    sorted
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn problem_of(args: &ProblemArgs) -> Result<HurwitzProblem, CliError> {
    let e = normalize_e(args.e.clone(), args.no_sort);
    Ok(HurwitzProblem::new(args.d, e, args.genus, args.simple)?)
}

fn genus_zero_of(args: &MaybeProblemArgs) -> Result<HurwitzProblem, CliError> {
    let (Some(d), Some(e)) = (args.d, args.e.clone()) else {
        return Err(CliError::Input("this action needs -d and -e".into()));
    };
    Ok(HurwitzProblem::genus_zero(d, normalize_e(e, args.no_sort))?)
}

/// The closed-form count, where one applies: 1 for two or three cycles, the
/// minimum of `e_i(d+1-e_i)` for four.
pub fn formula(problem: &HurwitzProblem) -> Option<usize> {
    if problem.genus() != 0 || problem.simple_count() != 0 {
        return None;
    }
    let d = problem.d();
    match problem.r() {
        2 | 3 => Some(1),
        4 => problem.e().iter().map(|&e| e * (d + 1 - e)).min(),
        _ => None,
    }
}

fn count(problem: &HurwitzProblem, config: &EnumConfig) -> Result<usize, CliError> {
    Ok(config.install(|| hurwitz_number(problem, config))?)
}

pub fn number(settings: &Settings, args: &ProblemArgs, check: bool) -> Result<(), CliError> {
    let problem = problem_of(args)?;
    let config = settings.enum_config();
    let f = formula(&problem);
    if check {
        let f = f.ok_or_else(|| CliError::Input(format!("no closed formula for {problem}")))?;
        let h = count(&problem, &config)?;
        out!("{f} {h}");
        if f != h {
            return Err(CliError::Check(format!(
                "formula {f} but enumeration {h} for {problem}"
            )));
        }
        return Ok(());
    }
    let h = match f {
        Some(f) => f,
        None => count(&problem, &config)?,
    };
    out!("{h}");
    Ok(())
}

fn orbit_report(
    settings: &Settings,
    problem: &HurwitzProblem,
    generators: GeneratorSet,
    witnesses: bool,
) -> Result<(usize, OrbitReport), CliError> {
    let config = settings.enum_config();
    let mut orbit_config = settings.orbit_config();
    orbit_config.record_witnesses = witnesses;
    let classes = config.install(|| enumerate_classes(problem, &config))?;
    let report = match generators {
        GeneratorSet::Pure => pure_braid_orbits(&classes, &orbit_config)?,
        GeneratorSet::Adjacent => adjacent_square_orbits(&classes, &orbit_config)?,
        GeneratorSet::Braid => full_braid_orbits(&classes, &orbit_config)?,
    };
    Ok((classes.len(), report))
}

pub fn orbits(
    settings: &Settings,
    args: &ProblemArgs,
    generators: GeneratorSet,
    expect_single: bool,
    json: bool,
    witnesses: bool,
) -> Result<(), CliError> {
    let problem = problem_of(args)?;
    let (class_count, report) = orbit_report(settings, &problem, generators, witnesses)?;
    let name = match generators {
        GeneratorSet::Pure => "pure",
        GeneratorSet::Adjacent => "adjacent",
        GeneratorSet::Braid => "braid",
    };
    if json {
        let out = OrbitReportJson::new(&problem, name, class_count, &report);
        out!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        print_orbits(&problem, name, class_count, &report)?;
    }
    if report.orbit_count == 1 {
        return Ok(());
    }
    if problem.genus() > 0 {
        // conditional statement: report, never fail
        eprintln!(
            "!!! MULTIPLE ORBITS: {problem} has {} orbits",
            report.orbit_count
        );
        eprintln!("!!! this bears on the higher-genus single-orbit question; recorded, exit 0");
        return Ok(());
    }
    if expect_single {
        return Err(CliError::Check(format!(
            "{problem}: expected one orbit, found {}",
            report.orbit_count
        )));
    }
    Ok(())
}

fn print_orbits(
    problem: &HurwitzProblem,
    generators: &str,
    class_count: usize,
    report: &OrbitReport,
) -> Result<(), CliError> {
    out!("problem: {problem}");
    out!("generators: {generators}");
    out!("classes: {class_count}");
    out!("orbits: {}", report.orbit_count);
    out!("sizes: {}", join(&report.orbit_sizes));
    out!("applications: {}", report.generator_applications);
    for (n, orbit) in report.orbits.iter().enumerate() {
        out!("orbit {} ({} classes)", n + 1, orbit.len());
        for class in orbit {
            match &report.witness_paths {
                Some(paths) => {
                    let word: Vec<String> = paths[class].iter().map(ToString::to_string).collect();
                    out!(
                        "  {class}  <- {}",
                        if word.is_empty() {
                            "base".into()
                        } else {
                            word.join(" ")
                        }
                    );
                }
                None => out!("  {class}"),
            }
        }
    }
    Ok(())
}

/// One table row, with the invariants that tie the columns together checked.
pub fn table_row(settings: &Settings, problem: &HurwitzProblem) -> Result<TableRow, CliError> {
    let config = settings.enum_config();
    config.check(problem)?;
    let classes = config.install(|| enumerate_classes(problem, &config))?;
    let h_formula = if problem.r() == 4 {
        formula(problem)
    } else {
        None
    };
    if let Some(f) = formula(problem) {
        if f != classes.len() {
            return Err(CliError::Invariant(format!(
                "{problem}: formula {f}, enumeration {}",
                classes.len()
            )));
        }
    }
    let report = pure_braid_orbits(&classes, &settings.orbit_config())?;
    let group_config = settings.group_config();
    let mut tag = None;
    for class in &classes {
        let g = generated_group_with(class.sigma(), problem.d(), &group_config)?;
        match &tag {
            None => tag = Some(g.tag),
            Some(t) if *t != g.tag => {
                return Err(CliError::Invariant(format!(
                    "{problem}: classes generate {t} and {}",
                    g.tag
                )))
            }
            Some(_) => {}
        }
    }
    let degen = enumerate_sequences(problem, DegenConfig::default())?;
    Ok(TableRow {
        d: problem.d(),
        e: problem.e().to_vec(),
        h_formula,
        h_enum: classes.len(),
        orbit_count: report.orbit_count,
        group_tag: tag.map(|t| t.name().to_string()).unwrap_or_default(),
        degen_count: degen.len(),
    })
}

pub fn table(
    settings: &Settings,
    dmax: usize,
    r: usize,
    out: Option<&Path>,
    format: Format,
) -> Result<(), CliError> {
    if r < 2 {
        return Err(CliError::Input(format!("r must be at least 2, got {r}")));
    }
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(
            File::create(path)
                .map_err(|e| CliError::Io(format!("creating {}: {e}", path.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut rows = Vec::new();
    for d in 1..=dmax {
        for problem in genus_zero_problems(d, r) {
            rows.push(table_row(settings, &problem)?);
        }
    }
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(TableRow::csv_header(r))?;
            for row in &rows {
                w.write_record(row.csv_record())?;
            }
            w.flush()?;
        }
        Format::Json => {
            let mut sink = sink;
            let doc = TableJson {
                schema: TABLE_SCHEMA,
                r,
                dmax,
                rows,
            };
            serde_json::to_writer_pretty(&mut sink, &doc)?;
            writeln!(sink)?;
            sink.flush()?;
        }
    }
    Ok(())
}

/// Reads a tuple, taking `d` as the largest point mentioned unless given.
fn tuple_problem(sigma: &str, args: &MaybeProblemArgs) -> Result<Factorization, CliError> {
    let max_point = sigma
        .split(';')
        .map(parse_cycles)
        .collect::<Result<Vec<_>, _>>()?
        .iter()
        .flatten()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0);
    let d = args.d.unwrap_or(max_point);
    let tuple = parse_tuple(sigma, d)?;
    let lengths: Vec<usize> = tuple.iter().map(|p| p.support().len()).collect();
    if let Some(e) = &args.e {
        if *e != lengths {
            return Err(CliError::Input(format!(
                "tuple has cycle lengths {} but -e gives {}",
                join(&lengths),
                join(e)
            )));
        }
    }
    let problem = HurwitzProblem::genus_zero(d, lengths)?;
    Ok(Factorization::new(problem, tuple)?)
}

fn describe(p: FourPointParams) -> String {
    match p.case {
        Case::I => format!("case I, k={}, l={}", p.k, p.second),
        Case::II => format!("case II, k={}, m={}", p.k, p.second),
    }
}

pub fn fourpoint(args: &MaybeProblemArgs, action: &FourpointAction) -> Result<(), CliError> {
    match action {
        FourpointAction::List { json } => {
            let problem = FourPointProblem::from_problem(&genus_zero_of(args)?)?;
            let entries = four_point_enumerate(&problem)?;
            if *json {
                let doc = FourPointListJson {
                    schema: FOURPOINT_SCHEMA,
                    problem: (&problem.hurwitz_problem()).into(),
                    count: entries.len(),
                    entries: entries
                        .iter()
                        .map(|(p, f)| FourPointEntryJson {
                            params: p.to_string(),
                            sigma: sigma_json(f.sigma()),
                        })
                        .collect(),
                };
                out!("{}", serde_json::to_string_pretty(&doc)?);
            } else {
                for (p, f) in &entries {
                    out!("{p}\t{f}");
                }
            }
        }
        FourpointAction::Classify { sigma } => {
            let f = tuple_problem(sigma, args)?;
            let p = four_point_classify(&f)?;
            out!("{p}\t{}", describe(p));
        }
        FourpointAction::Path { from } => {
            let problem = FourPointProblem::from_problem(&genus_zero_of(args)?)?;
            let from: FourPointParams = from.parse()?;
            let steps = four_point_path(&problem, from)?;
            for s in &steps {
                out!("{}\t{} -> {}\t{}", s.mv, s.from, s.to, s.mv.letter());
            }
            let word: Vec<String> = steps.iter().map(|s| s.mv.letter().to_string()).collect();
            out!("base: {}", problem.base_params());
            out!(
                "word: {}",
                if word.is_empty() {
                    "(empty)".into()
                } else {
                    word.join(" ")
                }
            );
        }
    }
    Ok(())
}

pub fn degenerate(
    args: &MaybeProblemArgs,
    degree_bound: bool,
    action: &DegenerateAction,
) -> Result<(), CliError> {
    let problem = genus_zero_of(args)?;
    let config = DegenConfig { degree_bound };
    match action {
        DegenerateAction::List => {
            for s in enumerate_sequences(&problem, config)? {
                out!("{s}");
            }
        }
        DegenerateAction::Connect { from, to, bfs } => {
            let from = NodeIndexSequence::new(from.clone());
            let to = NodeIndexSequence::new(to.clone());
            let path = if *bfs {
                connect_bfs(&problem, &from, &to, config)?.ok_or_else(|| {
                    CliError::Invariant(format!("{from} and {to} are not connected"))
                })?
            } else {
                connect_sequences(&problem, &from, &to, config)?
            };
            out!("{from}");
            for s in &path {
                out!("{s}");
            }
            out!("length: {}", path.len());
        }
    }
    Ok(())
}
