//! Command-line front end.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::catalog::{self, Tier};
use crate::chartab::{character_table_with_seed, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::invariants::report;
use crate::permcore::{group_from_text, PermGroup, DEFAULT_ORDER_BOUND};
use crate::symchar::{mn_value, Partition};
use crate::verify::{self, parse_predicates, Status, Subject, Theorem, Verdict};

#[derive(Debug, Parser)]
#[command(name = "charval", version, about = "Exact character tables and character-value invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the eigenspace-splitting random choices.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Refuse groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_BOUND)]
    pub max_order: usize,
    /// Include the optional catalog tier.
    #[arg(long, global = true)]
    pub optional_tier: bool,
    /// Worker threads for catalog-wide commands (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the character table of a group.
    Table {
        /// Catalog name or path to a group file.
        #[arg(long)]
        group: String,
    },
    /// Print the value-set invariants of a group.
    Invariants {
        #[arg(long)]
        group: String,
    },
    /// Run theorem checkers.
    Verify {
        /// a, b, c, d, e, cd2, lemmas or all.
        #[arg(long)]
        theorem: String,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        group: Option<String>,
        /// Every catalog entry.
        #[arg(long)]
        all: bool,
    },
    /// List catalog entries matching a property such as `cdc=2` or `ncv<=3&nonsolvable`.
    Scan {
        #[arg(long)]
        property: String,
    },
    /// Symmetric-group character value by the Murnaghan–Nakayama rule.
    Mn {
        #[arg(long)]
        partition: String,
        #[arg(long)]
        cycle_type: String,
    },
    /// Catalog operations.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Names, orders and descriptions.
    List,
    /// Check every entry against its recorded properties.
    Check,
}

/// Process exit status.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.opts.jobs)
        .build();
    // output is buffered so the worker pool never touches the caller's stream
    let mut buf: Vec<u8> = Vec::new();
    let result = match pool {
        Ok(pool) => pool.install(|| execute(&cli, &mut buf)),
        Err(e) => Err(Error::Invalid(e.to_string())),
    };
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        let _ = writeln!(err, "error: write failed: {e}");
        return EXIT_ERROR;
    }
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

/// Resolves a catalog name or a group file.
pub fn load_group(selector: &str, max_order: usize) -> Result<PermGroup> {
    let g = match catalog::build(selector) {
        Ok(g) => g,
        Err(Error::UnknownName(_)) if Path::new(selector).is_file() => {
            let text = std::fs::read_to_string(selector)
                .map_err(|e| Error::Invalid(format!("{selector}: {e}")))?;
            return group_from_text(&text, max_order);
        }
        Err(e) => return Err(e),
    };
    if g.order() > max_order {
        return Err(Error::OrderBoundExceeded(max_order));
    }
    Ok(g)
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Invalid(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn io(e: std::io::Error) -> Error {
    Error::Invalid(format!("write failed: {e}"))
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn entries_in_scope(optional: bool) -> Vec<catalog::CatalogEntry> {
    catalog::scan_entries(optional)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let o = &cli.opts;
    match &cli.command {
        Command::Table { group } => {
            let g = load_group(group, o.max_order)?;
            let t = character_table_with_seed(&g, o.seed)?;
            if o.json {
                json_line(out, &t.to_json())?;
                return Ok(EXIT_OK);
            }
            let j = t.to_json();
            writeln!(out, "order {}, {} classes, Dixon prime {}", j.order, j.classes.len(), j.dixon_prime)
                .map_err(io)?;
            for (i, c) in j.classes.iter().enumerate() {
                writeln!(
                    out,
                    "class {i}: size {}, element order {}, representative {}",
                    c.size, c.element_order, c.representative
                )
                .map_err(io)?;
            }
            for (i, r) in j.rows.iter().enumerate() {
                writeln!(out, "chi{i} (degree {}): {}", r.degree, r.values.join(", ")).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Invariants { group } => {
            let g = load_group(group, o.max_order)?;
            let r = report(&character_table_with_seed(&g, o.seed)?)?;
            if o.json {
                json_line(out, &r)?;
                return Ok(EXIT_OK);
            }
            let lines = [
                format!("order: {}", r.order),
                format!("classes: {}", r.class_count),
                format!("cv ({}): {}", r.cv.len(), join(&r.cv)),
                format!("cd: {}", join(&r.cd)),
                format!("cdc ({}): {}", r.cdc.len(), join(&r.cdc)),
                format!("ncv ({}): {}", r.ncv.len(), join(&r.ncv)),
                format!("values per character: {}", join(&r.per_char_cv_sizes)),
                format!("codegrees: {}", join(&r.cod)),
                format!("largest degree: {}", r.b),
                format!("derived length: {}", r.dl),
                format!("rational: {}", r.is_rational_group),
                format!("root-of-unity classes: {}", join(&r.root_of_unity_elements)),
                format!(
                    "flags: abelian {}, nilpotent {}, p-group {}, extraspecial {}, Frobenius {}",
                    r.flags.is_abelian,
                    r.flags.is_nilpotent,
                    r.flags.p_group_prime.map_or("no".into(), |p| p.to_string()),
                    r.flags.is_extraspecial,
                    match (r.flags.frobenius_kernel_order, r.flags.frobenius_complement_order) {
                        (Some(k), Some(h)) => format!("{k}:{h}"),
                        _ => "no".into(),
                    }
                ),
            ];
            for l in lines {
                writeln!(out, "{l}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            theorem,
            group,
            all,
        } => {
            let theorem: Theorem = theorem.parse()?;
            let subjects = if *all {
                verify::analyze_entries(&entries_in_scope(o.optional_tier), o.seed)?
            } else {
                let name = group.as_deref().unwrap_or_default();
                vec![Subject::new(name, &load_group(name, o.max_order)?, o.seed)?]
            };
            let verdicts = verify::run_all(theorem, &subjects, o.seed)?;
            print_verdicts(out, &verdicts, o.json)?;
            Ok(if verdicts.iter().any(Verdict::is_fail) {
                EXIT_FAIL
            } else {
                EXIT_OK
            })
        }
        Command::Scan { property } => {
            let predicates = parse_predicates(property)?;
            let subjects = verify::analyze_entries(&entries_in_scope(o.optional_tier), o.seed)?;
            let r = verify::scan(&subjects, &predicates, property);
            if o.json {
                json_line(out, &r)?;
            } else {
                writeln!(out, "{}: {} of {} groups", r.predicate, r.matches.len(), r.scanned)
                    .map_err(io)?;
                for m in &r.matches {
                    writeln!(out, "  {m}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Mn {
            partition,
            cycle_type,
        } => {
            let lambda: Partition = partition.parse()?;
            let rho = Partition::from_unsorted(parse_parts(cycle_type)?);
            let v = mn_value(&lambda, &rho)?;
            if o.json {
                #[derive(Serialize)]
                struct Mn {
                    partition: String,
                    cycle_type: String,
                    value: String,
                }
                json_line(
                    out,
                    &Mn {
                        partition: lambda.to_string(),
                        cycle_type: rho.to_string(),
                        value: v.to_string(),
                    },
                )?;
            } else {
                writeln!(out, "{v}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let entries = catalog::entries();
                if o.json {
                    #[derive(Serialize)]
                    struct Item<'a> {
                        name: &'a str,
                        order: usize,
                        tier: Tier,
                        alias_of: Option<&'a str>,
                        source: &'a str,
                    }
                    let items: Vec<Item> = entries
                        .iter()
                        .map(|e| Item {
                            name: &e.name,
                            order: e.order(),
                            tier: e.tier,
                            alias_of: e.alias_of,
                            source: e.source,
                        })
                        .collect();
                    json_line(out, &items)?;
                } else {
                    for e in &entries {
                        let mut note = String::new();
                        if e.tier == Tier::Optional {
                            note.push_str(" [optional]");
                        }
                        if let Some(a) = e.alias_of {
                            note.push_str(&format!(" [= {a}]"));
                        }
                        writeln!(out, "{:<24} {:>4}  {}{note}", e.name, e.order(), e.source)
                            .map_err(io)?;
                    }
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Check => {
                let entries: Vec<_> = catalog::entries()
                    .into_iter()
                    .filter(|e| o.optional_tier || e.tier == Tier::Core)
                    .collect();
                let subjects = verify::analyze_entries(&entries, o.seed)?;
                let checks: Vec<_> = entries
                    .iter()
                    .zip(&subjects)
                    .map(|(e, s)| catalog::check_entry_with(e, &s.analysis))
                    .collect();
                if o.json {
                    json_line(out, &checks)?;
                } else {
                    for c in &checks {
                        let status = if c.passed() { "pass" } else { "FAIL" };
                        writeln!(out, "{:<24} {status} {}", c.name, c.failures.join("; "))
                            .map_err(io)?;
                    }
                }
                Ok(if checks.iter().all(catalog::EntryCheck::passed) {
                    EXIT_OK
                } else {
                    EXIT_FAIL
                })
            }
        },
    }
}

/// Positive parts in any order, e.g. `2,9,4`.
fn parse_parts(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .ok()
                .filter(|&p| p > 0)
                .ok_or_else(|| Error::InvalidPartition(format!("`{t}` is not a part")))
        })
        .collect()
}

fn print_verdicts(out: &mut dyn Write, verdicts: &[Verdict], json: bool) -> Result<()> {
    if json {
        return json_line(out, &verdicts);
    }
    for v in verdicts {
        writeln!(out, "{v}").map_err(io)?;
    }
    let count = |s: Status| verdicts.iter().filter(|v| v.status == s).count();
    writeln!(
        out,
        "{} verdicts: {} pass, {} vacuous, {} FAIL",
        verdicts.len(),
        count(Status::Pass),
        count(Status::Vacuous),
        count(Status::Fail)
    )
    .map_err(io)
}
