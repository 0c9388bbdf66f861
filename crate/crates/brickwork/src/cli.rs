//! Command-line front end. Every computation in the library is
//! reachable from a subcommand, outputs are byte-stable per format,
//! and exit codes follow one contract: 0 for success, 1 when a
//! verification suite reports failures, 2 for usage, parse, and
//! resource errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::charpoly::{charpoly_hook, charpoly_row, evaluate_at_class};
use crate::classfn::{
    character_table, doubilet_shapes, irreducible_character, kostka_matrix, kronecker,
};
use crate::config::{parse_config_file, resolve, FileSettings, Settings, FORMAT_ENV, MAX_SERIES_CAP};
use crate::cycleindex::gamma_series;
use crate::error::{Error, Result};
use crate::homology::{build_tiling_poset, verify_alternating_identity};
use crate::partition::{partitions_of, Composition, Partition};
use crate::permutation::Permutation;
use crate::poly::BinomialExpansion;
use crate::render::{
    homology_csv, homology_json, homology_plain, polynomial_json, poset_dot, poset_json, pretty,
    series_json, tilings_csv, tilings_json, tilings_plain, verification_csv, verification_json,
    verification_plain, OutputFormat, Table, TilingListing,
};
use crate::rosas::{rosas_pipeline, StableTable};
use crate::tiling::{
    bricks_of, crackless_count, enumerate_ordered_tilings, enumerate_unordered_tilings,
    ordered_count, ordered_count_for_type, ordered_in_crackless_basis, unordered_count,
};
use crate::verify::{run_suite, tally, DEFAULT_ROSAS_K};

/// Parsed invocation: global settings plus one subcommand.
#[derive(Parser, Debug)]
#[command(
    name = "brickwork",
    version,
    about = "Brick tilings of Young diagrams, symmetric group characters, and the identities connecting them"
)]
pub struct RunConfig {
    /// Output format: plain, json, or csv. Defaults to BRICKWORK_FORMAT,
    /// then the config file, then plain.
    #[arg(long, global = true)]
    format: Option<String>,

    /// Worker threads for verification fan-out (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Truncation degree for series pipelines.
    #[arg(long, global = true)]
    series_cap: Option<usize>,

    /// Consecutive equal coefficients required to call a tail stable.
    #[arg(long, global = true)]
    window: Option<usize>,

    /// Optional key=value config file (keys: format, jobs, series-cap, window).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List ordered, unordered, and crackless tilings of a shape and
    /// the three counts.
    Tilings {
        /// Row shape as comma-separated parts, e.g. 2,2,1.
        #[arg(long)]
        shape: String,
        /// Permutation: cycle notation "(3,1)(4)(5,2)" or a word.
        #[arg(long)]
        perm: String,
    },

    /// Values of the three tiling class functions on every class of
    /// S_n, or the expansion of the ordered count in the crackless
    /// basis.
    Classfn {
        /// Row shape as comma-separated parts; order matters.
        #[arg(long)]
        shape: String,
        /// Expand the ordered count in the crackless basis instead of
        /// tabulating values.
        #[arg(long)]
        eta_basis: bool,
    },

    /// Character table of S_n.
    Character {
        #[arg(long)]
        n: u32,
    },

    /// Kostka matrix of S_n: rows are irreducibles, columns are shapes.
    Kostka {
        #[arg(long)]
        n: u32,
    },

    /// Signed permutation-character expansion of one irreducible
    /// character, checked per class against the table row.
    Doubilet {
        /// Partition as comma-separated parts, e.g. 2,2,1.
        #[arg(long)]
        lambda: String,
        /// Print the signed shape list instead of the per-class values.
        #[arg(long)]
        shapes: bool,
    },

    /// Two-row and hook character polynomials, or the cycle-index
    /// generating series.
    Charpoly {
        /// Polynomial index; row k means the shape (n-k, k), hook k
        /// means (n-k, 1^k).
        #[arg(long, required_unless_present = "gamma")]
        k: Option<usize>,
        /// Family: row or hook.
        #[arg(long, default_value = "row")]
        family: String,
        /// Render in the raw monomial basis instead of binomials.
        #[arg(long)]
        monomial: bool,
        /// Evaluate on every class of S_n instead of printing the
        /// polynomial.
        #[arg(long)]
        eval_n: Option<u32>,
        /// Print the cycle-index generating series instead; each
        /// coefficient is a class polynomial.
        #[arg(long)]
        gamma: bool,
        /// Truncation degree for --gamma (default: the series cap).
        #[arg(long)]
        max_degree: Option<usize>,
    },

    /// Homology report for one tiling poset, or the poset itself as a
    /// graph.
    Homology {
        /// Permutation: cycle notation or a word.
        #[arg(long)]
        perm: String,
        /// Brick weight to tile.
        #[arg(long)]
        j: u32,
        /// Export the poset instead of the report: dot or json.
        #[arg(long)]
        poset: Option<String>,
    },

    /// One Kronecker coefficient.
    Kronecker {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },

    /// Stable Kronecker coefficients of hook triples with leg lengths
    /// up to a cap, with each entry's stabilization point.
    Rosas {
        #[arg(long, default_value_t = DEFAULT_ROSAS_K)]
        max_k: usize,
    },

    /// Run an identity suite; exits 1 if any instance fails.
    Verify {
        /// alternating, doubilet, young, charpoly, rosas,
        /// permutohedron, or all.
        suite: String,
        /// Sweep bound for suites indexed by n.
        #[arg(long)]
        max_n: Option<u32>,
        /// Sweep bound for suites indexed by k.
        #[arg(long)]
        max_k: Option<usize>,
    },

    /// Batch tables: character, kostka, or reduced-kronecker.
    Table {
        /// Table kind: character, kostka, or reduced-kronecker.
        kind: String,
        /// Symmetric group size for character and kostka tables.
        #[arg(long)]
        n: Option<u32>,
        /// Leg-length cap for reduced-kronecker tables.
        #[arg(long)]
        max_k: Option<usize>,
    },
}

/// Finished command output and whether verification failures occurred.
#[derive(Debug)]
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, failed: false }
    }
}

/// Entry point for the binary: parses arguments, runs, prints, and
/// returns the process exit code.
pub fn main_entry() -> i32 {
    let cfg = RunConfig::parse();
    match execute(cfg) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            i32::from(outcome.failed)
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_env_format() -> Option<String> {
    std::env::var(FORMAT_ENV).ok().filter(|s| !s.is_empty())
}

fn execute(cfg: RunConfig) -> Result<Outcome> {
    let file_settings = match &cfg.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::InvalidInput(format!("cannot read config file {}: {e}", path.display()))
            })?;
            parse_config_file(&text)?
        }
        None => FileSettings::default(),
    };
    let cli_format = match &cfg.format {
        Some(s) => Some(s.parse::<OutputFormat>()?),
        None => None,
    };
    let settings = resolve(
        cli_format,
        cfg.jobs,
        cfg.series_cap,
        cfg.window,
        read_env_format().as_deref(),
        &file_settings,
    )?;
    if let Some(jobs) = settings.jobs {
        // Ignore the error: the global pool can only be built once,
        // and a second initialization means it is already sized.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match cfg.command {
        Command::Tilings { shape, perm } => cmd_tilings(&settings, &shape, &perm),
        Command::Classfn { shape, eta_basis } => cmd_classfn(&settings, &shape, eta_basis),
        Command::Character { n } => cmd_character(&settings, n),
        Command::Kostka { n } => cmd_kostka(&settings, n),
        Command::Doubilet { lambda, shapes } => cmd_doubilet(&settings, &lambda, shapes),
        Command::Charpoly { k, family, monomial, eval_n, gamma, max_degree } => {
            cmd_charpoly(&settings, k, &family, monomial, eval_n, gamma, max_degree)
        }
        Command::Homology { perm, j, poset } => cmd_homology(&settings, &perm, j, poset.as_deref()),
        Command::Kronecker { lambda, mu, nu } => cmd_kronecker(&settings, &lambda, &mu, &nu),
        Command::Rosas { max_k } => cmd_rosas(&settings, max_k),
        Command::Verify { suite, max_n, max_k } => cmd_verify(&settings, &suite, max_n, max_k),
        Command::Table { kind, n, max_k } => cmd_table(&settings, &kind, n, max_k),
    }
}

fn cmd_tilings(settings: &Settings, shape: &str, perm: &str) -> Result<Outcome> {
    let shape: Composition = shape.parse()?;
    let w: Permutation = perm.parse()?;
    let bs = bricks_of(&w);
    let ordered: Vec<String> = enumerate_ordered_tilings(&bs, shape.parts())
        .iter()
        .map(|t| t.render(&bs))
        .collect();
    let unordered_tilings = enumerate_unordered_tilings(&bs, shape.parts());
    let unordered: Vec<String> = unordered_tilings.iter().map(|t| t.render(&bs)).collect();
    let crackless: Vec<String> = unordered_tilings
        .iter()
        .filter(|t| t.crack_count() == 0)
        .map(|t| t.render(&bs))
        .collect();
    let listing = TilingListing {
        n: w.n(),
        shape: shape.parts().to_vec(),
        perm: w.to_string(),
        zeta: ordered_count(shape.parts(), &w),
        xi: unordered_count(shape.parts(), &w),
        eta: crackless_count(shape.parts(), &w),
        ordered,
        unordered,
        crackless,
    };
    let text = match settings.format {
        OutputFormat::Plain => tilings_plain(&listing),
        OutputFormat::Csv => tilings_csv(&listing),
        OutputFormat::Json => pretty(&tilings_json(&listing)),
    };
    Ok(Outcome::ok(text))
}

fn cmd_classfn(settings: &Settings, shape: &str, eta_basis: bool) -> Result<Outcome> {
    let shape: Composition = shape.parse()?;
    let table = if eta_basis {
        let mut t = Table::new(
            format!("ordered count of shape {shape} in the crackless basis"),
            vec!["lambda".into(), "coefficient".into()],
        );
        for (lam, coeff) in ordered_in_crackless_basis(&shape) {
            t.push(vec![lam.to_string(), coeff.to_string()]);
        }
        t
    } else {
        let mut t = Table::new(
            format!("tiling class functions of shape {shape}"),
            vec!["class".into(), "zeta".into(), "xi".into(), "eta".into()],
        );
        for class in partitions_of(shape.weight()) {
            let w = Permutation::from_cycle_type(&class);
            t.push(vec![
                class.to_string(),
                ordered_count_for_type(shape.parts(), &class).to_string(),
                unordered_count(shape.parts(), &w).to_string(),
                crackless_count(shape.parts(), &w).to_string(),
            ]);
        }
        t
    };
    Ok(Outcome::ok(table.render(settings.format)))
}

fn cmd_character(settings: &Settings, n: u32) -> Result<Outcome> {
    let ct = character_table(n)?;
    let mut headers = vec!["lambda".to_string()];
    headers.extend(ct.classes().iter().map(Partition::to_string));
    let mut t = Table::new(format!("character table of S_{n}"), headers);
    for (lam, row) in ct.classes().iter().zip(ct.rows()) {
        let mut cells = vec![lam.to_string()];
        cells.extend(row.iter().map(i64::to_string));
        t.push(cells);
    }
    Ok(Outcome::ok(t.render(settings.format)))
}

fn cmd_kostka(settings: &Settings, n: u32) -> Result<Outcome> {
    let k = kostka_matrix(n)?;
    let mut headers = vec!["mu".to_string()];
    headers.extend(k.partitions().iter().map(Partition::to_string));
    let mut t = Table::new(format!("Kostka matrix of S_{n}"), headers);
    for (mu, row) in k.partitions().iter().zip(k.entries()) {
        let mut cells = vec![mu.to_string()];
        cells.extend(row.iter().map(u64::to_string));
        t.push(cells);
    }
    Ok(Outcome::ok(t.render(settings.format)))
}

fn cmd_doubilet(settings: &Settings, lambda: &str, shapes_only: bool) -> Result<Outcome> {
    let lambda: Partition = lambda.parse()?;
    let table = if shapes_only {
        let mut t = Table::new(
            format!("signed shapes for lambda = {lambda}"),
            vec!["sign".into(), "shape".into()],
        );
        for (sign, shape) in doubilet_shapes(&lambda) {
            t.push(vec![format!("{sign:+}"), shape.to_string()]);
        }
        t
    } else {
        let chi = irreducible_character(&lambda)?;
        let reconstructed = crate::classfn::ClassFunction::from_fn(lambda.weight(), |class| {
            let mut acc = num::BigRational::from_integer(0.into());
            for (sign, shape) in doubilet_shapes(&lambda) {
                let count = ordered_count_for_type(shape.parts(), class);
                acc += num::BigRational::from_integer(num::BigInt::from(sign) * count);
            }
            acc
        });
        let mut t = Table::new(
            format!("doubilet inversion for lambda = {lambda}"),
            vec!["class".into(), "signed sum".into(), "table row".into()],
        );
        for (class, (got, want)) in chi
            .classes()
            .iter()
            .zip(reconstructed.values().iter().zip(chi.values()))
        {
            t.push(vec![class.to_string(), got.to_string(), want.to_string()]);
        }
        t
    };
    Ok(Outcome::ok(table.render(settings.format)))
}

fn charpoly_guard(k: usize) -> Result<()> {
    if k > 8 {
        return Err(Error::ResourceLimit(format!(
            "character polynomials are computed up to k = 8, requested {k}"
        )));
    }
    Ok(())
}

fn cmd_charpoly(
    settings: &Settings,
    k: Option<usize>,
    family: &str,
    monomial: bool,
    eval_n: Option<u32>,
    gamma: bool,
    max_degree: Option<usize>,
) -> Result<Outcome> {
    if gamma {
        let cap = max_degree.unwrap_or(settings.series_cap);
        if cap > MAX_SERIES_CAP {
            return Err(Error::ResourceLimit(format!(
                "series degrees are capped at {MAX_SERIES_CAP}, requested {cap}"
            )));
        }
        let series = gamma_series(cap);
        let coefficients: Vec<(usize, String)> = (0..=cap)
            .map(|d| (d, series.coeff(d).render("c")))
            .collect();
        let text = match settings.format {
            OutputFormat::Plain => {
                let mut out = String::new();
                for (d, value) in &coefficients {
                    out.push_str(&format!("t^{d}: {value}\n"));
                }
                out
            }
            OutputFormat::Csv => {
                let mut out = String::from("degree,value\n");
                for (d, value) in &coefficients {
                    out.push_str(&format!("{d},{}\n", crate::render::csv_field(value)));
                }
                out
            }
            OutputFormat::Json => pretty(&series_json("gamma", coefficients)),
        };
        return Ok(Outcome::ok(text));
    }
    let k = k.expect("clap requires k unless --gamma");
    charpoly_guard(k)?;
    let poly: BinomialExpansion = match family {
        "row" => charpoly_row(k),
        "hook" => charpoly_hook(k),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown family {other:?}, expected row or hook"
            )));
        }
    };
    if let Some(n) = eval_n {
        if n > crate::classfn::MAX_CHARACTER_N {
            return Err(Error::ResourceLimit(format!(
                "class sweeps are capped at n = {}, requested {n}",
                crate::classfn::MAX_CHARACTER_N
            )));
        }
        let mut t = Table::new(
            format!("{family} polynomial k = {k} on classes of S_{n}"),
            vec!["class".into(), "value".into()],
        );
        for class in partitions_of(n) {
            t.push(vec![class.to_string(), evaluate_at_class(&poly, &class).to_string()]);
        }
        return Ok(Outcome::ok(t.render(settings.format)));
    }
    let (basis, rendered, terms) = if monomial {
        let p = poly.to_class_polynomial();
        let terms: Vec<(Vec<u16>, String)> =
            p.terms().map(|(key, c)| (key.to_vec(), c.to_string())).collect();
        ("monomial", p.render("c"), terms)
    } else {
        let terms: Vec<(Vec<u16>, String)> =
            poly.terms().map(|(key, c)| (key.to_vec(), c.to_string())).collect();
        ("binomial", poly.render("c"), terms)
    };
    let text = match settings.format {
        OutputFormat::Plain => format!("{rendered}\n"),
        OutputFormat::Csv => {
            let mut out = String::from("key,coeff\n");
            for (key, coeff) in &terms {
                let key_str: Vec<String> = key.iter().map(u16::to_string).collect();
                out.push_str(&format!(
                    "{},{}\n",
                    crate::render::csv_field(&key_str.join(" ")),
                    crate::render::csv_field(coeff)
                ));
            }
            out
        }
        OutputFormat::Json => pretty(&polynomial_json(family, k, basis, &rendered, terms)),
    };
    Ok(Outcome::ok(text))
}

fn cmd_homology(settings: &Settings, perm: &str, j: u32, poset: Option<&str>) -> Result<Outcome> {
    let w: Permutation = perm.parse()?;
    match poset {
        Some("dot") => {
            let p = build_tiling_poset(&w, j)?;
            Ok(Outcome::ok(poset_dot(&p, &bricks_of(&w))))
        }
        Some("json") => {
            let p = build_tiling_poset(&w, j)?;
            Ok(Outcome::ok(pretty(&poset_json(&p, &bricks_of(&w)))))
        }
        Some(other) => Err(Error::InvalidInput(format!(
            "unknown poset export {other:?}, expected dot or json"
        ))),
        None => {
            let rep = verify_alternating_identity(&w, j)?;
            let text = match settings.format {
                OutputFormat::Plain => homology_plain(&rep),
                OutputFormat::Csv => homology_csv(&rep),
                OutputFormat::Json => pretty(&homology_json(&rep)),
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn cmd_kronecker(settings: &Settings, lambda: &str, mu: &str, nu: &str) -> Result<Outcome> {
    let lambda: Partition = lambda.parse()?;
    let mu: Partition = mu.parse()?;
    let nu: Partition = nu.parse()?;
    let g = kronecker(&lambda, &mu, &nu)?;
    let mut t = Table::new(
        "Kronecker coefficient",
        vec!["lambda".into(), "mu".into(), "nu".into(), "g".into()],
    );
    t.push(vec![lambda.to_string(), mu.to_string(), nu.to_string(), g.to_string()]);
    Ok(Outcome::ok(t.render(settings.format)))
}

fn stable_table_output(settings: &Settings, stable: &StableTable) -> String {
    let mut t = Table::new(
        format!(
            "stable Kronecker coefficients of hook triples, legs <= {}",
            stable.caps[0]
        ),
        vec!["k1".into(), "k2".into(), "k3".into(), "point".into(), "value".into()],
    );
    for e in &stable.entries {
        t.push(vec![
            e.ks[0].to_string(),
            e.ks[1].to_string(),
            e.ks[2].to_string(),
            e.point.to_string(),
            e.value.to_string(),
        ]);
    }
    t.render(settings.format)
}

fn rosas_guard(max_k: usize) -> Result<()> {
    if max_k > 5 {
        return Err(Error::ResourceLimit(format!(
            "stable Kronecker tables are capped at leg length 5, requested {max_k}"
        )));
    }
    Ok(())
}

fn cmd_rosas(settings: &Settings, max_k: usize) -> Result<Outcome> {
    rosas_guard(max_k)?;
    let stable = rosas_pipeline([max_k; 3], settings.series_cap, settings.window)?;
    Ok(Outcome::ok(stable_table_output(settings, &stable)))
}

fn cmd_verify(
    settings: &Settings,
    suite: &str,
    max_n: Option<u32>,
    max_k: Option<usize>,
) -> Result<Outcome> {
    let reports = run_suite(suite, max_n, max_k)?;
    let (_, failed) = tally(&reports);
    let text = match settings.format {
        OutputFormat::Plain => verification_plain(suite, &reports),
        OutputFormat::Csv => verification_csv(&reports),
        OutputFormat::Json => pretty(&verification_json(suite, &reports)),
    };
    Ok(Outcome { text, failed: failed > 0 })
}

fn cmd_table(
    settings: &Settings,
    kind: &str,
    n: Option<u32>,
    max_k: Option<usize>,
) -> Result<Outcome> {
    match kind {
        "character" => {
            let n = n.ok_or_else(|| {
                Error::InvalidInput("table character needs --n".into())
            })?;
            cmd_character(settings, n)
        }
        "kostka" => {
            let n = n.ok_or_else(|| Error::InvalidInput("table kostka needs --n".into()))?;
            cmd_kostka(settings, n)
        }
        "reduced-kronecker" => {
            let max_k = max_k.unwrap_or(DEFAULT_ROSAS_K);
            cmd_rosas(settings, max_k)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown table kind {other:?}, expected character, kostka, or reduced-kronecker"
        ))),
    }
}
