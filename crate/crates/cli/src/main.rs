use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use bfusion::bmwdual::duality_report;
use bfusion::qchar::{positive_character, QuantumParams};
use bfusion::rootdata::{format_weight, parse_weight};
use bfusion::suite::{run_suite, DEFAULT_GRID};
use bfusion::unitarity::{audit, format_significant};
use bfusion::{AlcoveParams, Family, FusionTable, Weight};

#[derive(Parser)]
#[command(
    name = "bfusion",
    version,
    about = "Fusion rules and dimensions for type B and C quantum groups at odd roots of unity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the labels of the alcove
    Alcove(Common),
    /// Decompose lhs ⊗ rhs
    Fuse(Common),
    /// Print the fusion matrix of lhs
    Matrix(Common),
    /// Print the positive character, quantum dimensions and spin dimensions at z
    Chars(Common),
    /// Run the invariant suite
    Verify(Common),
    /// Emit the BMW-side duality report
    Duality(Common),
    /// Audit h(z) against Dim(□) for every admissible z
    Unitarity(Common),
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value = "B")]
    family: String,
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long)]
    ell: Option<i64>,
    #[arg(long)]
    z: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    lhs: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    rhs: Option<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Comma separated k:ell pairs, e.g. 2:9,3:13
    #[arg(long)]
    grid: Option<String>,
}

/// Errors in the configuration (exit 2), as opposed to failed checks (exit 1).
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

impl Common {
    fn family(&self) -> anyhow::Result<Family> {
        Ok(self.family.parse()?)
    }

    fn rank_ell(&self) -> anyhow::Result<(usize, i64)> {
        match (self.rank, self.ell) {
            (Some(k), Some(ell)) => Ok((k, ell)),
            _ => bail!("--rank and --ell are required"),
        }
    }

    fn alcove(&self) -> anyhow::Result<AlcoveParams> {
        let (k, ell) = self.rank_ell()?;
        Ok(AlcoveParams::from_family(self.family()?, k, ell)?)
    }

    fn grid(&self) -> anyhow::Result<Vec<(usize, i64)>> {
        if let Some(text) = &self.grid {
            return text
                .split(',')
                .map(|cell| {
                    let (k, ell) = cell.split_once(':').context("grid cells look like k:ell")?;
                    Ok((k.trim().parse()?, ell.trim().parse()?))
                })
                .collect();
        }
        match (self.rank, self.ell) {
            (Some(k), Some(ell)) => Ok(vec![(k, ell)]),
            (None, None) => Ok(DEFAULT_GRID.to_vec()),
            _ => bail!("give both --rank and --ell, or --grid"),
        }
    }

    fn require_b(&self) -> anyhow::Result<()> {
        if self.family()? != Family::B {
            bail!("this command is defined for family B");
        }
        Ok(())
    }

    fn weight(&self, text: &Option<String>, flag: &str) -> anyhow::Result<Weight> {
        let text = text.as_ref().with_context(|| format!("--{flag} is required"))?;
        Ok(parse_weight(text)?)
    }
}

fn label_json(w: &Weight) -> Value {
    json!({ "label": format_weight(w), "doubled": w.doubled() })
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> anyhow::Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(header)?;
    for row in rows {
        writer.write_record(row)?;
    }
    Ok(String::from_utf8(writer.into_inner()?)?)
}

fn table_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = line(header.iter().map(|h| h.to_string()).collect());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

/// Pretty JSON with every float rounded to 12 significant digits.
fn json_text<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    fn round(v: &mut Value) {
        match v {
            Value::Number(n) if n.is_f64() => {
                let x = n.as_f64().unwrap_or(f64::NAN);
                if let Some(r) = format!("{x:.11e}")
                    .parse::<f64>()
                    .ok()
                    .and_then(serde_json::Number::from_f64)
                {
                    *n = r;
                }
            }
            Value::Array(items) => items.iter_mut().for_each(round),
            Value::Object(map) => map.values_mut().for_each(round),
            _ => {}
        }
    }
    let mut value = serde_json::to_value(value)?;
    round(&mut value);
    Ok(serde_json::to_string_pretty(&value)? + "\n")
}

fn render(format: Format, json_value: Value, header: &[&str], rows: Vec<Vec<String>>) -> anyhow::Result<String> {
    Ok(match format {
        Format::Json => json_text(&json_value)?,
        Format::Csv => csv_text(header, rows)?,
        Format::Table => table_text(header, rows),
    })
}

fn alcove_cmd(args: &Common) -> Result<String, Usage> {
    let alcove = args.alcove()?;
    let labels = alcove.alcove_enumerate();
    let value = json!({
        "family": alcove.datum().family().to_string(),
        "rank": alcove.rank(),
        "ell": alcove.ell(),
        "labels": labels.iter().map(label_json).collect::<Vec<_>>(),
    });
    let rows = labels
        .iter()
        .enumerate()
        .map(|(i, w)| vec![i.to_string(), format_weight(w), format!("{:?}", w.doubled())])
        .collect();
    Ok(render(args.format, value, &["index", "label", "doubled"], rows)?)
}

fn fuse_cmd(args: &Common) -> Result<String, Usage> {
    let alcove = args.alcove()?;
    let lhs = args.weight(&args.lhs, "lhs")?;
    let rhs = args.weight(&args.rhs, "rhs")?;
    let product = alcove.fuse(&lhs, &rhs)?;
    let mut entries: Vec<(Weight, u64)> = product.into_iter().collect();
    entries.sort_by(|a, b| b.0.graded_cmp(&a.0));
    let mut map = Map::new();
    for (w, m) in &entries {
        map.insert(format_weight(w), json!(m));
    }
    let rows = entries
        .iter()
        .map(|(w, m)| vec![format_weight(w), m.to_string()])
        .collect();
    Ok(render(
        args.format,
        Value::Object(map),
        &["label", "multiplicity"],
        rows,
    )?)
}

fn matrix_cmd(args: &Common) -> Result<String, Usage> {
    let alcove = args.alcove()?;
    let lambda = args.weight(&args.lhs, "lhs")?;
    let table = FusionTable::build(&alcove)?;
    let m = table.fusion_matrix(&lambda)?;
    let labels: Vec<String> = table.labels().iter().map(format_weight).collect();
    let matrix: Vec<Vec<i64>> = (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect();
    let value = json!({
        "label": format_weight(&lambda),
        "labels": labels,
        "matrix": matrix,
    });
    let mut header = vec!["label"];
    header.extend(labels.iter().map(String::as_str));
    let rows = matrix
        .iter()
        .zip(&labels)
        .map(|(row, l)| {
            std::iter::once(l.clone())
                .chain(row.iter().map(i64::to_string))
                .collect()
        })
        .collect();
    Ok(render(args.format, value, &header, rows)?)
}

fn chars_cmd(args: &Common) -> Result<String, Usage> {
    let alcove = args.alcove()?;
    let params = QuantumParams::new(alcove.clone(), args.z.unwrap_or(1))?;
    let dim = positive_character(&alcove);
    let spin = alcove.datum().spin_weight().ok();
    let mut records = Vec::new();
    let mut rows = Vec::new();
    for (w, d) in dim.labels.iter().zip(&dim.values) {
        let qdim = params.qdim(w);
        let spin_dim = match &spin {
            Some(s) => Some(params.dim_mu(s, w)?),
            None => None,
        };
        records.push(json!({
            "label": format_weight(w),
            "doubled": w.doubled(),
            "Dim": d,
            "qdim": qdim,
            "dim_spin": spin_dim,
        }));
        rows.push(vec![
            format_weight(w),
            format_significant(*d),
            format_significant(qdim),
            spin_dim.map_or_else(|| "-".into(), format_significant),
        ]);
    }
    let value = json!({
        "family": alcove.datum().family().to_string(),
        "rank": alcove.rank(),
        "ell": alcove.ell(),
        "z": params.z(),
        "characters": records,
    });
    Ok(render(args.format, value, &["label", "Dim", "qdim", "dim_spin"], rows)?)
}

fn verify_cmd(args: &Common) -> Result<(String, bool), Usage> {
    args.require_b()?;
    let mut reports = Vec::new();
    for (k, ell) in args.grid()? {
        reports.push(run_suite(k, ell)?);
    }
    let passed = reports.iter().all(|r| r.passed);
    let text = if args.format == Format::Json {
        json_text(&reports)?
    } else {
        let header = ["k", "ell", "check", "result", "detail"];
        let rows = reports
            .iter()
            .flat_map(|r| {
                r.checks.iter().map(move |c| {
                    vec![
                        r.k.to_string(),
                        r.ell.to_string(),
                        c.name.clone(),
                        if c.passed { "PASS" } else { "FAIL" }.to_string(),
                        c.detail.clone(),
                    ]
                })
            })
            .collect();
        if args.format == Format::Csv {
            csv_text(&header, rows)?
        } else {
            table_text(&header, rows)
        }
    };
    Ok((text, passed))
}

fn duality_cmd(args: &Common) -> Result<String, Usage> {
    args.require_b()?;
    let table = FusionTable::build(&args.alcove()?)?;
    let report = duality_report(&table)?;
    Ok(json_text(&report)?)
}

fn unitarity_cmd(args: &Common) -> Result<String, Usage> {
    args.require_b()?;
    let mut reports = Vec::new();
    for (k, ell) in args.grid()? {
        reports.push(audit(k, ell)?);
    }
    Ok(match args.format {
        Format::Json => json_text(&reports)?,
        Format::Table => reports.iter().map(|r| r.to_table()).collect::<Vec<_>>().join("\n"),
        Format::Csv => {
            let rows = reports
                .iter()
                .flat_map(|r| {
                    r.per_z.iter().map(move |e| {
                        vec![
                            r.k.to_string(),
                            r.ell.to_string(),
                            e.z.to_string(),
                            format_significant(e.h),
                            format_significant(e.dim_box),
                            format_significant(e.margin),
                            e.negative_even_witness
                                .as_ref()
                                .map_or_else(|| "-".into(), |d| d.to_string()),
                        ]
                    })
                })
                .collect();
            csv_text(&["k", "ell", "z", "h", "dim_box", "margin", "witness"], rows)?
        }
    })
}

fn run(cli: &Cli) -> Result<(String, bool, Option<PathBuf>), Usage> {
    let (args, text, passed) = match &cli.command {
        Command::Alcove(a) => (a, alcove_cmd(a)?, true),
        Command::Fuse(a) => (a, fuse_cmd(a)?, true),
        Command::Matrix(a) => (a, matrix_cmd(a)?, true),
        Command::Chars(a) => (a, chars_cmd(a)?, true),
        Command::Verify(a) => {
            let (text, passed) = verify_cmd(a)?;
            (a, text, passed)
        }
        Command::Duality(a) => (a, duality_cmd(a)?, true),
        Command::Unitarity(a) => (a, unitarity_cmd(a)?, true),
    };
    Ok((text, passed, args.output.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, passed, output) = match run(&cli) {
        Ok(v) => v,
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let written = match output {
        Some(path) => File::create(&path).and_then(|mut f| f.write_all(text.as_bytes())),
        None => io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
