//! Command-line front end. Every subcommand parses its flags, calls into
//! `trinuclear-core` and formats the result; nothing is computed here.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use trinuclear_core::group_algebra::{
    character_table, cycle_eigenbasis, projectors, regular_rep, ClassLabel, Irrep, Permutation, RepMatrix,
};
use trinuclear_core::molecule::{resolve, shipped, shipped_molecules, MoleculeSpec};
use trinuclear_core::output::{format_g, to_json, write_csv};
use trinuclear_core::spectrum_engine::{energy_grid, intensity_totals, line_list, ThermalEnsemble, ViolationModel};
use trinuclear_core::symmetry_classifier::{
    classify, spin_statistical_weight, InversionSpecies, RotationalState, TotalSpin,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "trinuclear",
    version,
    about = "Permutation symmetry and forbidden lines of molecules with three identical nuclei"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print S3 artifacts: multiplication/character tables, matrices, eigenbasis or projectors.
    Group {
        #[arg(long, value_enum, default_value_t = GroupView::Table)]
        show: GroupView,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify a rotational state into symmetric/antisymmetric/mixed subspaces.
    Classify {
        /// Shipped molecule name or path to a config file.
        #[arg(long)]
        molecule: String,
        #[arg(long = "J")]
        j: u32,
        #[arg(long = "K", allow_negative_numbers = true)]
        k: i32,
        /// Total nuclear spin, "1/2" or "3/2" (spin-1/2 nuclei only).
        #[arg(long = "I", value_parser = parse_total_spin)]
        total_spin: Option<TotalSpin>,
        /// Inversion species, "s" or "a" (C3v molecules only).
        #[arg(long, value_parser = parse_species)]
        species: Option<InversionSpecies>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the rotational energy grid E(J, K).
    Energies {
        #[arg(long)]
        molecule: String,
        #[arg(long)]
        jmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a band line list.
    Linelist {
        #[arg(long)]
        molecule: String,
        #[arg(long)]
        band: String,
        #[arg(long, default_value_t = 30)]
        jmax: u32,
        /// Temperature in kelvin.
        #[arg(long, default_value_t = 296.0, value_parser = parse_temperature)]
        temp: f64,
        /// Population fraction of symmetry-violating molecules, in [0, 1].
        #[arg(long, default_value_t = 0.0, value_parser = parse_beta)]
        beta: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output file; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the shipped molecule configs.
    Molecules {
        /// Print the config of one molecule instead.
        #[arg(long, value_name = "NAME")]
        dump: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupView {
    Table,
    Matrices,
    Eigenbasis,
    Projectors,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

fn parse_total_spin(s: &str) -> Result<TotalSpin, String> {
    s.parse().map_err(|e: trinuclear_core::symmetry_classifier::ClassifyError| e.to_string())
}

fn parse_species(s: &str) -> Result<InversionSpecies, String> {
    s.parse().map_err(|e: trinuclear_core::symmetry_classifier::ClassifyError| e.to_string())
}

fn parse_temperature(s: &str) -> Result<f64, String> {
    let t: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if t.is_finite() && t > 0.0 {
        Ok(t)
    } else {
        Err(format!("temperature must be positive, got {s}"))
    }
}

fn parse_beta(s: &str) -> Result<f64, String> {
    let b: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    ViolationModel::new(b).map(|v| v.beta()).map_err(|e| e.to_string())
}

/// Runs the CLI with `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(err, "error: {}", msg.replace('\n', " "));
            EXIT_FAILURE
        }
    }
}

type CmdResult = Result<(), String>;

fn io_err(e: std::io::Error) -> String {
    format!("write failed: {e}")
}

fn load(name: &str) -> Result<MoleculeSpec, String> {
    resolve(name).map_err(|e| e.to_string())
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match command {
        Command::Group { show, format } => group(show, format, out),
        Command::Classify { molecule, j, k, total_spin, species, format } => {
            let m = load(&molecule)?;
            let mut state = RotationalState::new(j, k);
            state.total_spin = total_spin;
            if let Some(s) = species {
                state.species = s;
            }
            classify_cmd(&m, &state, format, out)
        }
        Command::Energies { molecule, jmax, format } => energies(&load(&molecule)?, jmax, format, out),
        Command::Linelist { molecule, band, jmax, temp, beta, format, out: path } => {
            let m = load(&molecule)?;
            linelist(&m, &band, jmax, temp, beta, format, path, out, err)
        }
        Command::Molecules { dump } => molecules(dump, out),
    }
}

/// Complex numbers as `(re, im)` pairs; tiny parts print as zero.
mod complex_fmt {
    use super::format_g;

    pub type C = (f64, f64);

    fn clean(x: f64) -> f64 {
        if x.abs() < 1e-12 {
            0.0
        } else {
            x
        }
    }

    pub fn text((re, im): C) -> String {
        let (re, im) = (clean(re), clean(im));
        match (re == 0.0, im == 0.0) {
            (_, true) => format_g(re, 6),
            (true, false) => format!("{}i", format_g(im, 6)),
            (false, false) => {
                let sign = if im < 0.0 { '-' } else { '+' };
                format!("{}{sign}{}i", format_g(re, 6), format_g(im.abs(), 6))
            }
        }
    }

    pub fn json((re, im): C) -> serde_json::Value {
        serde_json::json!([clean(re), clean(im)])
    }
}

fn matrix_rows(m: &RepMatrix) -> Vec<Vec<(f64, f64)>> {
    (0..6).map(|r| (0..6).map(|c| (m.entry(r, c).re, m.entry(r, c).im)).collect()).collect()
}

fn matrix_text(m: &RepMatrix) -> String {
    let rows = matrix_rows(m);
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(|&z| complex_fmt::text(z)).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    cells
        .iter()
        .map(|r| {
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            format!("  [ {} ]", line.join("  "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn matrix_json(m: &RepMatrix) -> Value {
    match m.to_integer() {
        Some(ints) => json!(ints),
        None => Value::Array(
            matrix_rows(m).into_iter().map(|r| Value::Array(r.into_iter().map(complex_fmt::json).collect())).collect(),
        ),
    }
}

fn group(show: GroupView, format: Format, out: &mut dyn Write) -> CmdResult {
    if format == Format::Csv {
        return Err("`group` supports --format text or json".into());
    }
    let json_mode = format == Format::Json;
    let text: String;
    let value: Value;
    match show {
        GroupView::Table => {
            let elems = Permutation::ALL;
            let table: Vec<Vec<String>> =
                elems.iter().map(|&p| elems.iter().map(|&q| p.compose(q).to_string()).collect()).collect();
            let chars = character_table();
            let char_rows: Vec<(String, [i32; 3])> =
                Irrep::ALL.iter().map(|&ir| (format!("{ir:?}"), chars.row(ir))).collect();
            value = json!({
                "elements": elems.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "multiplication": table,
                "classes": ClassLabel::ALL.iter().map(|c| json!({"class": format!("{c:?}"), "size": c.size()})).collect::<Vec<_>>(),
                "characters": char_rows.iter().map(|(n, r)| json!({"irrep": n, "chi": r})).collect::<Vec<_>>(),
            });
            let mut s = String::from("multiplication (row p, column q: p*q = apply q, then p)\n");
            s += &format!("{:>9}", "");
            for q in elems {
                s += &format!("{:>9}", q.to_string());
            }
            s.push('\n');
            for (p, row) in elems.iter().zip(&table) {
                s += &format!("{:>9}", p.to_string());
                for cell in row {
                    s += &format!("{cell:>9}");
                }
                s.push('\n');
            }
            s += "\ncharacters  identity  transposition  three-cycle\n";
            for (name, r) in &char_rows {
                s += &format!("{name:>10}  {:>8}  {:>13}  {:>11}\n", r[0], r[1], r[2]);
            }
            text = s;
        }
        GroupView::Matrices => {
            value = Value::Array(
                Permutation::ALL
                    .iter()
                    .map(|&p| json!({"element": p.to_string(), "matrix": matrix_json(&regular_rep(p))}))
                    .collect(),
            );
            text = Permutation::ALL
                .iter()
                .map(|&p| format!("{p}\n{}\n", matrix_text(&regular_rep(p))))
                .collect::<Vec<_>>()
                .join("\n");
        }
        GroupView::Eigenbasis => {
            let basis = cycle_eigenbasis();
            let comps = |v: &trinuclear_core::SymVector| -> Vec<(f64, f64)> {
                v.components().iter().map(|z| (z.re, z.im)).collect()
            };
            value = Value::Array(
                basis
                    .iter()
                    .map(|e| {
                        let l = e.eigenvalue.value();
                        let x = e.eigenvalue.exchanged().value();
                        json!({
                            "name": e.name,
                            "vector": comps(&e.vector).into_iter().map(complex_fmt::json).collect::<Vec<_>>(),
                            "eigenvalue_P123": complex_fmt::json((l.re, l.im)),
                            "eigenvalue_P321": complex_fmt::json((x.re, x.im)),
                        })
                    })
                    .collect(),
            );
            let mut s = String::from("name  eigenvalue P(1,2,3)  eigenvalue P(3,2,1)  components |1>..|6>\n");
            for e in &basis {
                let l = e.eigenvalue.value();
                let x = e.eigenvalue.exchanged().value();
                let cs: Vec<String> = comps(&e.vector).into_iter().map(complex_fmt::text).collect();
                s += &format!(
                    "{:<4}  {:>19}  {:>19}  ({})\n",
                    e.name,
                    complex_fmt::text((l.re, l.im)),
                    complex_fmt::text((x.re, x.im)),
                    cs.join(", ")
                );
            }
            text = s;
        }
        GroupView::Projectors => {
            let ps = projectors();
            value = Value::Array(
                ps.iter().map(|(l, m)| json!({"subspace": l.to_string(), "matrix": matrix_json(m)})).collect(),
            );
            text = ps
                .iter()
                .map(|(l, m)| format!("{l} (rank {})\n{}\n", m.rank(1e-9), matrix_text(m)))
                .collect::<Vec<_>>()
                .join("\n");
        }
    }
    if json_mode {
        writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json")).map_err(io_err)
    } else {
        write!(out, "{text}").map_err(io_err)
    }
}

fn classify_cmd(m: &MoleculeSpec, state: &RotationalState, format: Format, out: &mut dyn Write) -> CmdResult {
    let assignment = classify(state, m.point_group, m.nuclear_spin).map_err(|e| e.to_string())?;
    let weight = spin_statistical_weight(state, m.point_group, m.nuclear_spin).map_err(|e| e.to_string())?;
    match format {
        Format::Text => {
            writeln!(out, "{assignment}").map_err(io_err)?;
            let breakdown = if state.total_spin.is_none() { &assignment.spin_components[..] } else { &[] };
            for c in breakdown {
                let labels: Vec<String> = c.subspaces.iter().map(|s| s.to_string()).collect();
                writeln!(
                    out,
                    "  I={}: {}; forbidden by: {}",
                    spin_text(c.total_spin),
                    labels.join(", "),
                    c.forbidden_by
                )
                .map_err(io_err)?;
            }
            writeln!(out, "statistical weight: {weight}").map_err(io_err)
        }
        Format::Json => {
            let v = json!({
                "molecule": m.name,
                "J": state.j,
                "K": state.k,
                "I": state.total_spin.map(spin_text),
                "species": state.species.label(),
                "subspaces": assignment.subspaces.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "forbidden_by": assignment.forbidden_by.to_string(),
                "spin_components": assignment.spin_components.iter().map(|c| json!({
                    "I": spin_text(c.total_spin),
                    "subspaces": c.subspaces.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                    "forbidden_by": c.forbidden_by.to_string(),
                })).collect::<Vec<_>>(),
                "statistical_weight": weight,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io_err)
        }
        Format::Csv => Err("`classify` supports --format text or json".into()),
    }
}

fn spin_text(i: TotalSpin) -> &'static str {
    match i {
        TotalSpin::Half => "1/2",
        TotalSpin::ThreeHalves => "3/2",
    }
}

fn energies(m: &MoleculeSpec, jmax: u32, format: Format, out: &mut dyn Write) -> CmdResult {
    let grid = energy_grid(m, jmax);
    match format {
        Format::Text => {
            writeln!(out, "{:>4} {:>4} {:>7} {:>16}", "J", "K", "species", "E_cm1").map_err(io_err)?;
            for e in &grid {
                writeln!(out, "{:>4} {:>4} {:>7} {:>16}", e.j, e.k, e.species.label(), format_g(e.energy, 10))
                    .map_err(io_err)?;
            }
        }
        Format::Csv => {
            writeln!(out, "J,K,species,E_cm1").map_err(io_err)?;
            for e in &grid {
                writeln!(out, "{},{},{},{}", e.j, e.k, e.species.label(), format_g(e.energy, 10)).map_err(io_err)?;
            }
        }
        Format::Json => {
            let v: Vec<Value> = grid
                .iter()
                .map(|e| json!({"J": e.j, "K": e.k, "species": e.species.label(), "E_cm1": e.energy}))
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io_err)?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn linelist(
    m: &MoleculeSpec,
    band: &str,
    jmax: u32,
    temp: f64,
    beta: f64,
    format: Format,
    path: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let violation = ViolationModel::new(beta).map_err(|e| e.to_string())?;
    if m.band(band).is_none() {
        let names: Vec<&str> = m.bands.iter().map(|b| b.name.as_str()).collect();
        return Err(format!("unknown band `{band}` for molecule `{}` (bands: {})", m.name, names.join(", ")));
    }
    let ensemble = ThermalEnsemble::new(m, temp, jmax, &violation).map_err(|e| e.to_string())?;
    let lines = line_list(m, band, &ensemble, &violation).map_err(|e| e.to_string())?;

    let mut buf: Vec<u8> = Vec::new();
    match format {
        Format::Csv => write_csv(&mut buf, &lines).map_err(io_err)?,
        Format::Json => {
            buf.extend_from_slice(to_json(&lines).as_bytes());
            buf.push(b'\n');
        }
        Format::Text => {
            writeln!(
                buf,
                "{:>14} {:>14}  {:>3} {:>3} {:>2}  {:>3} {:>3} {:>2}  forbidden",
                "freq_cm1", "intensity", "J\"", "K\"", "", "J'", "K'", ""
            )
            .map_err(io_err)?;
            for l in &lines {
                writeln!(
                    buf,
                    "{:>14} {:>14}  {:>3} {:>3} {:>2}  {:>3} {:>3} {:>2}  {}",
                    format_g(l.frequency, 10),
                    format_g(l.relative_intensity, 10),
                    l.lower.j,
                    l.lower.k,
                    l.lower.species.label(),
                    l.upper.j,
                    l.upper.k,
                    l.upper.species.label(),
                    l.forbidden_by()
                )
                .map_err(io_err)?;
            }
        }
    }
    match path {
        Some(p) => fs::write(&p, &buf).map_err(|e| format!("cannot write `{}`: {e}", p.display()))?,
        None => out.write_all(&buf).map_err(io_err)?,
    }

    let t = intensity_totals(&lines);
    let forbidden = lines.iter().filter(|l| l.sp_forbidden || l.ss_forbidden).count();
    writeln!(
        err,
        "{} lines ({forbidden} forbidden); summed intensity: allowed {}, SP {}, SS {}, SP+SS {}; Z = {}",
        lines.len(),
        format_g(t.allowed, 10),
        format_g(t.sp, 10),
        format_g(t.ss, 10),
        format_g(t.sp_and_ss, 10),
        format_g(ensemble.partition_function, 10),
    )
    .map_err(io_err)?;
    Ok(())
}

fn molecules(dump: Option<String>, out: &mut dyn Write) -> CmdResult {
    if let Some(name) = dump {
        let m = shipped(&name).map_err(|e| e.to_string())?;
        return write!(out, "{}", m.to_toml_string()).map_err(io_err);
    }
    for m in shipped_molecules() {
        let bands: Vec<String> =
            m.bands.iter().map(|b| format!("{} {} ({})", b.name, format_g(b.origin, 10), b.band_type)).collect();
        writeln!(
            out,
            "{:<8} {:?} spin {}  B={} C={}  bands: {}",
            m.name,
            m.point_group,
            match m.nuclear_spin {
                trinuclear_core::NuclearSpin::Zero => "0",
                trinuclear_core::NuclearSpin::Half => "1/2",
            },
            format_g(m.b, 10),
            format_g(m.c, 10),
            bands.join(", ")
        )
        .map_err(io_err)?;
    }
    Ok(())
}
