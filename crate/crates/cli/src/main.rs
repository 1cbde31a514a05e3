use std::fmt;
use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use corado::bergman::{
    bergman_fan, is_strict_gammoid_with, is_transversal_with, stable_intersection_with_hyperplanes,
    BergmanFan, StableIntersection,
};
use corado::chow::{
    degree, degree_via_intersection, dhr_witness, monomial_basis, product_class,
    relative_nested_quotient, BergmanClass,
};
use corado::io::{
    matroid_to_value, parse_graph, parse_matroid, parse_monomial, parse_standalone_system,
    parse_subset, parse_system, render_matroid, SpecError,
};
use corado::ops::{intersect_all, principal_truncation, union};
use corado::rado::{corado, rado_matroid, transversal_matroid, transversal_matroid_on_ground};
use corado::verify::{
    dhr_sweep, gammoid_routes_sweep, identities_sweep, nested_quotient_sweep, rado_sweep,
    theorem_sweep, SweepOptions, SweepReport,
};
use corado::{Matroid, SetSystem, Subset};

/// Exact finite matroid constructions: unions, intersections, Rado and coRado
/// matroids, Bergman fans and Chow ring products.
///
/// Matroid, system, graph and monomial arguments are JSON: inline when they
/// start with `{` or `[`, `-` for stdin, otherwise a file path.
#[derive(Parser)]
#[command(name = "corado", version)]
struct Cli {
    /// Print {result, witnesses, timings} as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WithSystem {
    matroid: String,
    /// Members as `[[...], ...]` or `{"members": [...]}` over the matroid's ground.
    #[arg(long)]
    system: String,
}

#[derive(Subcommand)]
enum Command {
    /// Bases, rank, flats, circuits and loops.
    Show {
        matroid: String,
    },
    Dual {
        matroid: String,
    },
    Union {
        first: String,
        second: String,
    },
    /// Intersection of two or more matroids on the same ground.
    Intersect {
        #[arg(required = true, num_args = 2..)]
        matroids: Vec<String>,
    },
    /// Principal truncation at a flat.
    Truncate {
        matroid: String,
        #[arg(long)]
        flat: String,
    },
    /// The coRado matroid, i.e. the intersection with the hyperplane matroids.
    Corado {
        #[command(flatten)]
        input: WithSystem,
        /// Fold intersections with hyperplane matroids instead.
        #[arg(long, conflicts_with = "check")]
        via_intersection: bool,
        /// Compute both routes and compare.
        #[arg(long)]
        check: bool,
    },
    /// Rado matroid of a bipartite graph and a matroid on its right part.
    Rado {
        graph: String,
        matroid: String,
    },
    /// Transversal matroid of a system carrying its own ground.
    Transversal {
        system: String,
        /// Put the matroid on the ground set (partial transversals) instead of
        /// the members.
        #[arg(long)]
        on_ground: bool,
    },
    Bergman {
        matroid: String,
    },
    StableIntersect(WithSystem),
    #[command(subcommand)]
    Chow(ChowCommand),
    /// The Dragon-Hall-Rado condition, with the first failing subfamily.
    Dhr(WithSystem),
    /// Degree of a top-degree product of simplicial generators.
    Degree {
        #[command(flatten)]
        input: WithSystem,
        #[arg(long)]
        check: bool,
    },
    /// Strict gammoid recognition (both routes).
    Gammoid {
        matroid: String,
        #[arg(long)]
        force: bool,
    },
    TransversalCheck {
        matroid: String,
        #[arg(long)]
        force: bool,
    },
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand)]
enum ChowCommand {
    /// Class of h_{A_1} ... h_{A_m}.
    Product(WithSystem),
    /// Monomial basis in degree c.
    Basis {
        matroid: String,
        #[arg(long)]
        degree: usize,
    },
    /// Relative nested quotient of a monomial `[{"flat": [...], "power": a}, ...]`.
    Quotient {
        matroid: String,
        #[arg(long)]
        monomial: String,
    },
}

#[derive(Args, Clone, Copy)]
struct SweepFlags {
    /// Allow ground sets past the sweep limit.
    #[arg(long)]
    force: bool,
    /// Sweep one matroid per isomorphism class.
    #[arg(long)]
    up_to_iso: bool,
}

impl From<SweepFlags> for SweepOptions {
    fn from(f: SweepFlags) -> Self {
        SweepOptions {
            up_to_iso: f.up_to_iso,
            force: f.force,
        }
    }
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// coRado construction against iterated intersection.
    Theorem {
        #[arg(long, default_value_t = 4)]
        max_elements: usize,
        #[arg(long, default_value_t = 2)]
        max_sets: usize,
        /// Sweep ordered member sequences rather than multisets.
        #[arg(long)]
        ordered: bool,
        #[command(flatten)]
        flags: SweepFlags,
    },
    /// Degree, the DHR condition and transversal characterizations.
    Dhr {
        #[arg(long, default_value_t = 4)]
        max_elements: usize,
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
        #[command(flatten)]
        flags: SweepFlags,
    },
    /// Rado's criterion against matching search.
    Rado {
        #[arg(long, default_value_t = 5)]
        max_left: usize,
        #[arg(long, default_value_t = 6)]
        max_right: usize,
        #[arg(long, default_value_t = 50)]
        graphs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Relative nested quotients are loopless of the expected rank.
    Quotients {
        #[arg(long, default_value_t = 4)]
        max_elements: usize,
        #[command(flatten)]
        flags: SweepFlags,
    },
    /// The two strict gammoid recognition routes agree.
    Gammoid {
        #[arg(long, default_value_t = 4)]
        max_elements: usize,
        #[command(flatten)]
        flags: SweepFlags,
    },
    /// Duality, De Morgan, commutativity, associativity and truncation.
    Identities {
        #[arg(long, default_value_t = 4)]
        max_elements: usize,
        #[arg(long, default_value_t = 3)]
        triple_elements: usize,
        #[command(flatten)]
        flags: SweepFlags,
    },
}

enum CliError {
    Input(String),
    Spec(SpecError),
    Domain(corado::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => f.write_str(m),
            CliError::Spec(e) => write!(f, "{e}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<SpecError> for CliError {
    fn from(e: SpecError) -> Self {
        CliError::Spec(e)
    }
}

impl From<corado::Error> for CliError {
    fn from(e: corado::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

/// What a command produced. `ok = false` means a check or sweep found a
/// discrepancy; the output is still printed.
struct Output {
    lines: Vec<String>,
    result: Value,
    witnesses: Option<Value>,
    ok: bool,
}

impl Output {
    fn new(lines: Vec<String>, result: Value) -> Self {
        Output {
            lines,
            result,
            witnesses: None,
            ok: true,
        }
    }

    fn witnesses(mut self, w: Value) -> Self {
        self.witnesses = Some(w);
        self
    }
}

fn read_arg(arg: &str) -> CliResult<String> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::Input(format!("cannot read `{arg}`: {e}")))
}

fn matroid(arg: &str) -> CliResult<Matroid> {
    Ok(parse_matroid(&read_arg(arg)?)?)
}

fn with_system(input: &WithSystem) -> CliResult<(Matroid, SetSystem)> {
    let m = matroid(&input.matroid)?;
    let a = parse_system(&read_arg(&input.system)?, m.ground())?;
    Ok((m, a))
}

fn family(m: &Matroid, sets: &[Subset]) -> String {
    let parts: Vec<String> = sets.iter().map(|&s| m.ground().format(s)).collect();
    parts.join(" ")
}

fn labels_value(m: &Matroid, s: Subset) -> Value {
    json!(m.ground().labels_of(s))
}

fn family_value(m: &Matroid, sets: &[Subset]) -> Value {
    Value::Array(sets.iter().map(|&s| labels_value(m, s)).collect())
}

fn matroid_output(m: &Matroid) -> Output {
    Output::new(
        vec![
            render_matroid(m),
            format!("rank {}, bases: {}", m.rank(), family(m, m.bases())),
        ],
        matroid_to_value(m),
    )
}

fn system_value(a: &SetSystem) -> Value {
    Value::Array(
        a.members()
            .iter()
            .map(|&s| json!(a.ground().labels_of(s)))
            .collect(),
    )
}

fn fan_lines(fan: &BergmanFan, m: &Matroid) -> (Vec<String>, Value) {
    let rays = fan.rays();
    let maximal = fan.maximal_cones();
    let mut lines = vec![
        format!("dimension {}", fan.dimension()),
        format!("rays ({}):", rays.len()),
    ];
    for (flat, v) in &rays {
        lines.push(format!("  {} {:?}", m.ground().format(*flat), v));
    }
    lines.push(format!("maximal cones ({}):", maximal.len()));
    for cone in &maximal {
        if cone.is_empty() {
            lines.push("  apex".into());
        } else {
            let flats: Vec<String> = cone.flats().iter().map(|&f| m.ground().format(f)).collect();
            lines.push(format!("  {}", flats.join(" < ")));
        }
    }
    let value = json!({
        "dimension": fan.dimension(),
        "rays": rays
            .iter()
            .map(|(f, v)| json!({"flat": labels_value(m, *f), "vector": v}))
            .collect::<Vec<_>>(),
        "maximal_cones": maximal
            .iter()
            .map(|c| family_value(m, c.flats()))
            .collect::<Vec<_>>(),
    });
    (lines, value)
}

fn sweep_output(r: SweepReport) -> Output {
    let mut out = Output::new(
        vec![r.to_string()],
        json!({
            "sweep": r.name,
            "instances": r.instances,
            "passed": r.passed(),
        }),
    );
    out.ok = r.passed();
    if let Some(c) = r.counterexample {
        out = out.witnesses(json!({ "counterexample": c }));
    }
    out
}

fn run(command: Command) -> CliResult<Output> {
    Ok(match command {
        Command::Show { matroid: arg } => {
            let m = matroid(&arg)?;
            let flats = m.flats();
            let circuits = m.circuits();
            let loops = m.loops();
            let lines = vec![
                format!("ground: {}", m.ground().format(m.ground().full())),
                format!("rank: {}", m.rank()),
                format!("bases ({}): {}", m.bases().len(), family(&m, m.bases())),
                format!("flats ({}): {}", flats.len(), family(&m, &flats)),
                format!("circuits ({}): {}", circuits.len(), family(&m, &circuits)),
                format!("loops: {}", m.ground().format(loops)),
            ];
            Output::new(
                lines,
                json!({
                    "matroid": matroid_to_value(&m),
                    "rank": m.rank(),
                    "bases": family_value(&m, m.bases()),
                    "flats": family_value(&m, &flats),
                    "circuits": family_value(&m, &circuits),
                    "loops": labels_value(&m, loops),
                }),
            )
        }
        Command::Dual { matroid: arg } => matroid_output(&matroid(&arg)?.dual()),
        Command::Union { first, second } => {
            matroid_output(&union(&matroid(&first)?, &matroid(&second)?)?)
        }
        Command::Intersect { matroids } => {
            let ms = matroids
                .iter()
                .map(|a| matroid(a))
                .collect::<CliResult<Vec<_>>>()?;
            matroid_output(&intersect_all(&ms[0], &ms[1..])?)
        }
        Command::Truncate { matroid: arg, flat } => {
            let m = matroid(&arg)?;
            let f = parse_subset(&read_arg(&flat)?, m.ground())?;
            matroid_output(&principal_truncation(&m, f)?)
        }
        Command::Corado {
            input,
            via_intersection,
            check,
        } => {
            let (m, a) = with_system(&input)?;
            let hyperplanes = || -> CliResult<Matroid> {
                let hs = a
                    .members()
                    .iter()
                    .map(|&s| Matroid::hyperplane(m.ground().clone(), s))
                    .collect::<corado::Result<Vec<_>>>()?;
                Ok(intersect_all(&m, &hs)?)
            };
            if via_intersection {
                matroid_output(&hyperplanes()?)
            } else if check {
                let p = corado(&m, &a)?;
                let q = hyperplanes()?;
                let agree = p == q;
                let mut out = matroid_output(&p);
                out.lines.push(if agree {
                    "routes agree".into()
                } else {
                    format!("routes disagree: intersection gives {}", render_matroid(&q))
                });
                out.result = json!({"matroid": out.result, "routes_agree": agree});
                out.ok = agree;
                out
            } else {
                matroid_output(&corado(&m, &a)?)
            }
        }
        Command::Rado {
            graph,
            matroid: arg,
        } => {
            let g = parse_graph(&read_arg(&graph)?)?;
            matroid_output(&rado_matroid(&g, &matroid(&arg)?)?)
        }
        Command::Transversal { system, on_ground } => {
            let a = parse_standalone_system(&read_arg(&system)?)?;
            if on_ground {
                matroid_output(&transversal_matroid_on_ground(&a)?)
            } else {
                matroid_output(&transversal_matroid(&a)?)
            }
        }
        Command::Bergman { matroid: arg } => {
            let m = matroid(&arg)?;
            let (lines, value) = fan_lines(&bergman_fan(&m)?, &m);
            Output::new(lines, value)
        }
        Command::StableIntersect(input) => {
            let (m, a) = with_system(&input)?;
            match stable_intersection_with_hyperplanes(&m, &a)? {
                StableIntersection::Vanished => Output::new(
                    vec!["vanished: the intersection matroid has a loop".into()],
                    json!({"vanished": true}),
                ),
                StableIntersection::Fan(fan) => {
                    let p = corado(&m, &a)?;
                    let (mut lines, value) = fan_lines(&fan, &p);
                    lines.insert(0, format!("fan of {}", render_matroid(&p)));
                    Output::new(
                        lines,
                        json!({"vanished": false, "matroid": matroid_to_value(&p), "fan": value}),
                    )
                }
            }
        }
        Command::Chow(ChowCommand::Product(input)) => {
            let (m, a) = with_system(&input)?;
            match product_class(&m, &a)? {
                BergmanClass::Zero => Output::new(vec!["0".into()], json!({"zero": true})),
                BergmanClass::Matroid(p) => {
                    let mut out = matroid_output(&p);
                    out.result = json!({"zero": false, "matroid": out.result});
                    out
                }
            }
        }
        Command::Chow(ChowCommand::Basis {
            matroid: arg,
            degree,
        }) => {
            let m = matroid(&arg)?;
            let basis = monomial_basis(&m, degree)?;
            let shown: Vec<String> = basis.iter().map(|b| b.format(m.ground())).collect();
            let noun = if basis.len() == 1 {
                "monomial"
            } else {
                "monomials"
            };
            let mut lines = vec![format!("{} {noun} in degree {degree}", basis.len())];
            lines.extend(shown.iter().map(|s| format!("  {s}")));
            Output::new(lines, json!({"count": basis.len(), "monomials": shown}))
        }
        Command::Chow(ChowCommand::Quotient {
            matroid: arg,
            monomial,
        }) => {
            let m = matroid(&arg)?;
            let mono = parse_monomial(&read_arg(&monomial)?, &m)?;
            matroid_output(&relative_nested_quotient(&m, &mono)?)
        }
        Command::Dhr(input) => {
            let (m, a) = with_system(&input)?;
            match dhr_witness(&m, &a) {
                None => Output::new(vec!["true".into()], json!(true)),
                Some(j) => {
                    let one_based: Vec<usize> = j.iter().map(|i| i + 1).collect();
                    let shown: Vec<String> = one_based.iter().map(|i| i.to_string()).collect();
                    Output::new(
                        vec![format!("false, witness J={{{}}}", shown.join(","))],
                        json!(false),
                    )
                    .witnesses(json!({ "J": one_based }))
                }
            }
        }
        Command::Degree { input, check } => {
            let (m, a) = with_system(&input)?;
            let d = degree(&m, &a)?;
            let mut out = Output::new(vec![d.to_string()], json!(d));
            if check {
                let e = degree_via_intersection(&m, &a)?;
                out.ok = d == e;
                out.lines.push(if out.ok {
                    "routes agree".into()
                } else {
                    format!("routes disagree: intersection gives {e}")
                });
                out.result = json!({"degree": d, "routes_agree": out.ok});
            }
            out
        }
        Command::Gammoid {
            matroid: arg,
            force,
        } => {
            let m = matroid(&arg)?;
            presentation_output(&m, is_strict_gammoid_with(&m, force)?, "hyperplane system")
        }
        Command::TransversalCheck {
            matroid: arg,
            force,
        } => {
            let m = matroid(&arg)?;
            presentation_output(&m, is_transversal_with(&m, force)?, "presentation")
        }
        Command::Verify(v) => sweep_output(match v {
            VerifyCommand::Theorem {
                max_elements,
                max_sets,
                ordered,
                flags,
            } => theorem_sweep(max_elements, max_sets, ordered, flags.into())?,
            VerifyCommand::Dhr {
                max_elements,
                max_rank,
                flags,
            } => dhr_sweep(max_elements, max_rank, flags.into())?,
            VerifyCommand::Rado {
                max_left,
                max_right,
                graphs,
                seed,
            } => rado_sweep(max_left, max_right, graphs, seed)?,
            VerifyCommand::Quotients {
                max_elements,
                flags,
            } => nested_quotient_sweep(max_elements, flags.into())?,
            VerifyCommand::Gammoid {
                max_elements,
                flags,
            } => gammoid_routes_sweep(max_elements, flags.into())?,
            VerifyCommand::Identities {
                max_elements,
                triple_elements,
                flags,
            } => identities_sweep(max_elements, triple_elements, flags.into())?,
        }),
    })
}

fn presentation_output(m: &Matroid, found: Option<SetSystem>, what: &str) -> Output {
    match found {
        None => Output::new(vec!["false".into()], json!(false)),
        Some(a) => Output::new(
            vec![format!("true, {what} {}", family(m, a.members()))],
            json!(true),
        )
        .witnesses(json!({ "system": system_value(&a) })),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(cli.command);
    let ms = start.elapsed().as_secs_f64() * 1e3;
    match outcome {
        Ok(out) => {
            if cli.json {
                let mut v = json!({"result": out.result, "timings": {"total_ms": ms}});
                if let Some(w) = out.witnesses {
                    v["witnesses"] = w;
                }
                println!("{v}");
            } else {
                for line in &out.lines {
                    println!("{line}");
                }
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                println!(
                    "{}",
                    json!({"error": e.to_string(), "timings": {"total_ms": ms}})
                );
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
