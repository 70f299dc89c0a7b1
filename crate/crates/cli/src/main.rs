use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fusionkit::catalog::{self, parse_module, ModuleId};
use fusionkit::errata::Ledger;
use fusionkit::fusion::{self, FusionVector};
use fusionkit::lattice::{contragredient, coset_weight, LatticeData, LatticeSMatrix};
use fusionkit::notation::{render_latex, render_latex_over_sqrt18, render_over_sqrt18, render_value};
use fusionkit::smatrix::{self, PartialSMatrix};
use fusionkit::verify::{run_suite, Status, Suite};
use fusionkit::verlinde::VerlindeEngine;

#[derive(Parser)]
#[command(name = "fusionkit", version, about = "Modular data and fusion rules of V_{L2}^{A4}")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// List the 21 irreducible modules.
    Catalog,
    /// Print the known part of the S-matrix (√18·S unless --normalized).
    Smatrix {
        #[arg(long)]
        normalized: bool,
    },
    /// Fusion product from the closed-form table.
    Fuse {
        #[arg(value_parser = module_arg)]
        a: ModuleId,
        #[arg(value_parser = module_arg)]
        b: ModuleId,
    },
    /// Exact Verlinde coefficient N_{i,j}^k, or the whole product when k is omitted.
    Verlinde {
        #[arg(value_parser = module_arg)]
        i: ModuleId,
        #[arg(value_parser = module_arg)]
        j: ModuleId,
        #[arg(value_parser = module_arg)]
        k: Option<ModuleId>,
    },
    /// Modular data of the rank-one lattice theory with (γ,γ) = 2k.
    Lattice {
        #[arg(long, default_value_t = 9, value_parser = clap::value_parser!(u32).range(1..))]
        half_norm: u32,
    },
    /// Run a verification suite against the errata ledger.
    Verify {
        #[arg(long, default_value = "all", value_parser = suite_arg)]
        suite: Suite,
    },
}

fn module_arg(text: &str) -> Result<ModuleId, String> {
    parse_module(text).ok_or_else(|| format!("unknown module {text:?}; use an id 0-20 or a name such as V- or W_s1^0"))
}

fn suite_arg(text: &str) -> Result<Suite, String> {
    Suite::from_name(text).ok_or_else(|| {
        let names: Vec<&str> = std::iter::once(Suite::All).chain(Suite::EACH).map(Suite::name).collect();
        format!("unknown suite {text:?}; expected one of {}", names.join(", "))
    })
}

/// What a command prints and how it exits.
struct Output {
    text: String,
    code: u8,
}

fn ok(text: String) -> Result<Output, String> {
    Ok(Output { text, code: 0 })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.code)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, String> {
    let f = cli.format;
    match &cli.command {
        Command::Catalog => ok(catalog_cmd(f)),
        Command::Smatrix { normalized } => ok(smatrix_cmd(f, *normalized)?),
        Command::Fuse { a, b } => ok(product_out(f, *a, *b, &fusion::fuse(*a, *b))),
        Command::Verlinde { i, j, k } => verlinde_cmd(f, *i, *j, *k),
        Command::Lattice { half_norm } => ok(lattice_cmd(f, *half_norm)?),
        Command::Verify { suite } => verify_cmd(f, *suite),
    }
}

fn catalog_cmd(f: Format) -> String {
    let entries = catalog::catalog();
    match f {
        Format::Json => pretty(&Value::Array(
            entries
                .iter()
                .map(|e| {
                    json!({
                        "id": e.id.index(),
                        "name": e.name,
                        "label": e.label,
                        "latex": e.latex,
                        "sector": e.sector.as_str(),
                        "weight": e.weight().to_string(),
                        "qdim": e.qdim,
                        "dual": e.dual.index(),
                        "cosets": e.cosets,
                    })
                })
                .collect(),
        )),
        Format::Text => {
            let mut out = format!("{:>2}  {:<8} {:<14} {:<10} {:>6} {:>4} {:>4}  cosets\n", "id", "name", "label", "sector", "weight", "qdim", "dual");
            for e in entries {
                let cosets: Vec<String> = e.cosets.iter().map(u8::to_string).collect();
                out.push_str(&format!(
                    "{:>2}  {:<8} {:<14} {:<10} {:>6} {:>4} {:>4}  {}\n",
                    e.id.index(),
                    e.name,
                    e.label,
                    e.sector.as_str(),
                    e.weight().to_string(),
                    e.qdim,
                    e.dual.index(),
                    if cosets.is_empty() { "-".into() } else { cosets.join(",") }
                ));
            }
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{rlrrr}\n$i$ & module & $h$ & $\\dim_q$ & $i'$ \\\\\n\\hline\n");
            for e in entries {
                let w = e.weight();
                let h = if w.is_integer() { w.to_string() } else { format!("\\frac{{{}}}{{{}}}", w.numer(), w.denom()) };
                out.push_str(&format!("{} & ${}$ & ${h}$ & {} & {} \\\\\n", e.id.index(), e.latex, e.qdim, e.dual.index()));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    }
}

fn build_s() -> Result<PartialSMatrix, String> {
    smatrix::build_partial_s().map_err(|e| e.to_string())
}

fn smatrix_cmd(f: Format, normalized: bool) -> Result<String, String> {
    let s = build_s()?;
    let cell = |i: ModuleId, j: ModuleId, latex: bool| -> String {
        match (s.scaled(i, j), latex, normalized) {
            (None, false, _) => "?".into(),
            (None, true, _) => "\\ast".into(),
            (Some(t), false, false) => render_value(t),
            (Some(t), false, true) => render_over_sqrt18(t),
            (Some(t), true, false) => render_latex(t),
            (Some(t), true, true) => render_latex_over_sqrt18(t),
        }
    };
    Ok(match f {
        // JSON always carries the exact S together with the √18·S rendering.
        Format::Json => {
            let mut doc = serde_json::to_value(&s).map_err(|e| e.to_string())?;
            doc["normalization"] = json!(if normalized { "S" } else { "sqrt18_s" });
            pretty(&doc)
        }
        Format::Text => {
            let mut out = String::from(if normalized { "# S; ? = not determined\n" } else { "# √18·S; ? = not determined\n" });
            for i in ModuleId::all() {
                let row: Vec<String> = ModuleId::all().map(|j| cell(i, j, false)).collect();
                out.push_str(&format!("{:>2}: {}\n", i.index(), row.join("  ")));
            }
            out
        }
        Format::Latex => {
            let mut out = String::from(if normalized { "S = \\begin{pmatrix}\n" } else { "\\sqrt{18}\\,S = \\begin{pmatrix}\n" });
            for i in ModuleId::all() {
                let row: Vec<String> = ModuleId::all().map(|j| cell(i, j, true)).collect();
                out.push_str(&row.join(" & "));
                out.push_str(" \\\\\n");
            }
            out.push_str("\\end{pmatrix}\n");
            out
        }
    })
}

fn product_out(f: Format, a: ModuleId, b: ModuleId, v: &FusionVector) -> String {
    match f {
        Format::Text => format!("{v}\n"),
        Format::Latex => format!("{} \\boxtimes {} = {}\n", a.entry().latex, b.entry().latex, v.to_latex()),
        Format::Json => pretty(&json!({
            "left": a.index(),
            "right": b.index(),
            "product": v,
            "terms": v.iter().filter(|&(_, n)| n > 0).map(|(k, n)| json!({ "id": k.index(), "name": k.name(), "mult": n })).collect::<Vec<_>>(),
            "display": v.to_string(),
        })),
    }
}

fn verlinde_cmd(f: Format, i: ModuleId, j: ModuleId, k: Option<ModuleId>) -> Result<Output, String> {
    let engine = VerlindeEngine::new(&build_s()?);
    match k {
        Some(k) => {
            let n = engine.fusion_coefficient(i, j, k).map_err(|e| e.to_string())?;
            ok(match f {
                Format::Text => format!("{n}\n"),
                Format::Latex => format!("N_{{{},{}}}^{{{}}} = {n}\n", i.index(), j.index(), k.index()),
                Format::Json => pretty(&json!({ "i": i.index(), "j": j.index(), "k": k.index(), "value": n })),
            })
        }
        None => {
            let v = engine.complete_product(i, j).map_err(|e| e.to_string())?;
            ok(product_out(f, i, j, &v))
        }
    }
}

fn lattice_cmd(f: Format, half_norm: u32) -> Result<String, String> {
    let data = LatticeData::new(half_norm).map_err(|e| e.to_string())?;
    let s = LatticeSMatrix::new(data).map_err(|e| e.to_string())?;
    let two_k = data.module_count();
    Ok(match f {
        Format::Json => pretty(&json!({
            "two_k": two_k,
            "modules": data.labels().map(|a| json!({
                "residue": a.residue(),
                "weight": coset_weight(&data, a).to_string(),
                "dual": contragredient(&data, a).residue(),
            })).collect::<Vec<_>>(),
            "s_matrix": data.labels().map(|a| data.labels().map(|b| json!(s.entry(a, b))).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "scaled_s": data.labels().map(|a| data.labels().map(|b| render_value(s.phase(a, b))).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut out = format!("# V_Zγ, (γ,γ) = {two_k}: {two_k} modules\n# j  weight  dual\n");
            for a in data.labels() {
                out.push_str(&format!("{:>3}  {:>6}  {:>4}\n", a.residue(), coset_weight(&data, a).to_string(), contragredient(&data, a).residue()));
            }
            out.push_str(&format!("# √{two_k}·S\n"));
            for a in data.labels() {
                let row: Vec<String> = data.labels().map(|b| render_value(s.phase(a, b))).collect();
                out.push_str(&format!("{:>3}: {}\n", a.residue(), row.join("  ")));
            }
            out
        }
        Format::Latex => {
            let mut out = format!("\\sqrt{{{two_k}}}\\,S = \\begin{{pmatrix}}\n");
            for a in data.labels() {
                let row: Vec<String> = data.labels().map(|b| render_latex(s.phase(a, b))).collect();
                out.push_str(&row.join(" & "));
                out.push_str(" \\\\\n");
            }
            out.push_str("\\end{pmatrix}\n");
            out
        }
    })
}

fn verify_cmd(f: Format, suite: Suite) -> Result<Output, String> {
    let ledger = Ledger::load().map_err(|e| e.to_string())?;
    let report = run_suite(suite, &ledger);
    let text = match f {
        Format::Text => report.to_text(),
        Format::Json => serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?,
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{ll}\ncheck & status \\\\\n\\hline\n");
            for c in &report.checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "\\textbf{fail}",
                    Status::ExpectedDiscrepancy => "\\textit{expected discrepancy}",
                };
                out.push_str(&format!("\\texttt{{{}}} & {status} \\\\\n", c.id.replace('_', "\\_")));
            }
            out.push_str("\\end{tabular}\n");
            out
        }
    };
    Ok(Output { text, code: report.exit_status as u8 })
}
