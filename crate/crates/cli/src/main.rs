use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use wurst::bisset::{cut, dec, diag, j_object, partition_check};
use wurst::coherent::{
    coherent_nerve, f_category, face_intersection_check, frak_c_directed, nullhomotopy_check, q,
    q_coefficients, rho, sigma_w, tau, w, EnrichedCategory,
};
use wurst::homology::{contractibility_evidence, homology};
use wurst::monotone::Monotone;
use wurst::quasicat::{hom_space, op_symmetry_check, tautological_iso_check, Variant};
use wurst::realize::{
    delta_box, join_coefficients, pullback_table, realize_bi, reedy_boundary_check,
    BiCosimplicialSSet, Face,
};
use wurst::sset::constructions::{
    boundary, horn, join, product, standard_simplex, suspension, suspension_left, suspension_right,
};
use wurst::sset::enumerate::Budget;
use wurst::{Error, PointedDirected, SimplicialSet};

mod report;

use report::{Check, Report};

#[derive(Parser)]
#[command(
    name = "wurst",
    version,
    about = "Finite simplicial sets, coherent nerves and their mapping spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Allow bounds beyond the safe defaults.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build an object and print it as JSON.
    Build {
        #[command(subcommand)]
        what: Build,
        #[command(flatten)]
        output: Output,
    },
    /// Run a named verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
        #[command(flatten)]
        output: Output,
    },
    /// Integer homology table of a simplicial set.
    Homology {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        upto: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Decide whether two simplicial sets are isomorphic.
    Iso {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Mapping space between two vertices (same as `build hom`).
    Hom {
        #[command(flatten)]
        req: HomArgs,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Clone)]
struct HomArgs {
    #[arg(long)]
    space: PathBuf,
    /// Vertex index or label, optionally written `v3`.
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
    #[arg(long, default_value = "middle")]
    variant: String,
    #[arg(long, default_value_t = 2)]
    cap: usize,
}

#[derive(Subcommand)]
enum Build {
    Simplex {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    Boundary {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    Horn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    Join {
        left: PathBuf,
        right: PathBuf,
    },
    Product {
        left: PathBuf,
        right: PathBuf,
    },
    Suspension {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// The mapping complex `Q(i,j)`.
    Q {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// The term `W_n`.
    W {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// The bisimplicial set `Cut^n`.
    Cut {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        cap: usize,
    },
    /// The pointed simplicial set `J_{i,j}`.
    J {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// Coherent nerve of an enriched category (or of `F(K)` for a simplicial set `K`).
    Nerve {
        #[arg(long)]
        cat: PathBuf,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    Hom(HomArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Both,
    Left,
    Right,
}

#[derive(Subcommand)]
enum Suite {
    /// Pullback squares and face-intersection lists of `Q`.
    ReedyQ {
        #[arg(long, default_value_t = 4)]
        max: usize,
        #[arg(long, default_value_t = 3)]
        cap: usize,
    },
    /// `|∂Δ^n|_W → W_n` injective.
    ReedyW {
        #[arg(long, default_value_t = 3)]
        max: usize,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
    /// Pullback squares of a chosen bicosimplicial object.
    Pullback {
        #[arg(long, value_enum, default_value_t = Coefficients::Q)]
        coeff: Coefficients,
        #[arg(long, default_value_t = 3)]
        max: usize,
        #[arg(long, default_value_t = 2)]
        cap: usize,
    },
    Tautological {
        #[arg(long)]
        cat: PathBuf,
        #[arg(long, default_value_t = 2)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        x: usize,
        #[arg(long, default_value_t = 1)]
        y: usize,
    },
    OpSymmetry {
        #[arg(long)]
        cat: PathBuf,
        #[arg(long, default_value_t = 2)]
        cap: usize,
        #[arg(long, default_value_t = 0)]
        x: usize,
        #[arg(long, default_value_t = 1)]
        y: usize,
    },
    /// `σ: W → Δ` is a natural transformation.
    Sigma {
        #[arg(long, default_value_t = 3)]
        max: usize,
        #[arg(long, default_value_t = 2)]
        cap: usize,
    },
    Nullhomotopy {
        #[arg(long, default_value_t = 4)]
        max: usize,
        #[arg(long, default_value_t = 2)]
        cap: usize,
    },
    /// `|K_n| = 2 + Σ |Hom(J_{i,j}, K)|` for a directed `K`.
    Partition {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        /// Highest level checked; defaults to the cap of the input.
        #[arg(long)]
        max: Option<usize>,
    },
    /// `dec(SΔ^n) ≅ Cut^n`, `𝔠(SΔ^n) ≅ W_n` and `|Cut^n|_J ≅ Δ^n × Δ^1`.
    DecEquivalence {
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Naturality of the flip `τ` and `W^rev ≅ W`.
    Flip {
        #[arg(long, default_value_t = 3)]
        max: usize,
        #[arg(long, default_value_t = 2)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Coefficients {
    Q,
    DeltaBox,
    Joins,
}

/// Failure modes with their exit codes.
enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn bound(name: &str, value: usize, safe: usize, output: &Output) -> Run<()> {
    if value > safe && !output.force {
        return Err(Failure::Input(format!(
            "{name} = {value} exceeds the safe default {safe}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn read(path: &Path) -> Run<serde_json::Value> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// A simplicial set document, or `{"space": …, "zero": z, "one": o}` for a pointed one.
fn load_space(path: &Path) -> Run<(SimplicialSet, Option<(usize, usize)>)> {
    let v = read(path)?;
    if let Some(inner) = v.get("space") {
        let s = SimplicialSet::from_json_value(inner.clone())?;
        let pts = match (
            v.get("zero").and_then(|z| z.as_u64()),
            v.get("one").and_then(|o| o.as_u64()),
        ) {
            (Some(z), Some(o)) => Some((z as usize, o as usize)),
            _ => None,
        };
        return Ok((s, pts));
    }
    Ok((SimplicialSet::from_json_value(v)?, None))
}

/// An enriched category document, or a simplicial set `K` read as `F(K)`.
fn load_category(path: &Path) -> Run<EnrichedCategory> {
    let v = read(path)?;
    if v.get("objects").is_some() {
        return Ok(EnrichedCategory::from_json(&v.to_string())?);
    }
    let (k, _) = load_space(path)?;
    Ok(f_category(&k))
}

fn vertex(x: &SimplicialSet, name: &str) -> Run<usize> {
    if let Some(p) = (0..x.count(0)).find(|&v| x.label(0, v) == name) {
        return Ok(p);
    }
    let digits = name.strip_prefix('v').unwrap_or(name);
    match digits.parse::<usize>() {
        Ok(v) if v < x.count(0) => Ok(v),
        _ => Err(Failure::Input(format!("no vertex {name:?}"))),
    }
}

fn pointed_json(p: &PointedDirected) -> serde_json::Value {
    json!({ "space": p.carrier().to_json_value(), "zero": p.zero(), "one": p.one() })
}

fn emit(output: &Output, text: String) -> Run<()> {
    match &output.out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn space_summary(x: &SimplicialSet) -> String {
    format!(
        "cap {}\ncounts {:?}\nnondegenerate {:?}\n",
        x.cap(),
        x.counts(),
        x.nondegenerate_counts()
    )
}

fn emit_value(output: &Output, value: serde_json::Value, table: String) -> Run<()> {
    match output.format {
        Format::Json => emit(output, format!("{value}\n")),
        Format::Table => emit(output, table),
    }
}

fn emit_space(output: &Output, x: &SimplicialSet) -> Run<()> {
    emit_value(output, x.to_json_value(), space_summary(x))
}

fn build(what: Build, output: &Output, budget: &Budget) -> Run<()> {
    match what {
        Build::Simplex { n, cap } => emit_space(output, &standard_simplex(n, cap)),
        Build::Boundary { n, cap } => emit_space(output, &boundary(n, cap)),
        Build::Horn { n, k, cap } => emit_space(output, &horn(n, k, cap)?),
        Build::Join { left, right } => emit_space(
            output,
            &join(&load_space(&left)?.0, &load_space(&right)?.0)?,
        ),
        Build::Product { left, right } => emit_space(
            output,
            &product(&load_space(&left)?.0, &load_space(&right)?.0)?,
        ),
        Build::Suspension { space, side } => {
            let (k, _) = load_space(&space)?;
            let s = match side {
                Side::Both => suspension(&k)?,
                Side::Left => suspension_left(&k)?,
                Side::Right => suspension_right(&k)?,
            };
            emit_value(
                output,
                pointed_json(&s),
                format!(
                    "zero {} one {}\n{}",
                    s.zero(),
                    s.one(),
                    space_summary(s.carrier())
                ),
            )
        }
        Build::Q { i, j, cap } => {
            bound("i + j", i + j, 5, output)?;
            emit_space(output, &q(i, j, cap))
        }
        Build::W { n, cap } => {
            bound("n", n, 3, output)?;
            let wo = w(n, cap)?;
            emit_space(output, wo.term(n))
        }
        Build::Cut { n, cap } => {
            let c = cut(n, (cap, cap));
            let table = format!(
                "cap ({cap},{cap})\nnondegenerate {:?}\n",
                c.nondegenerate_counts()
            );
            let value: serde_json::Value = serde_json::from_str(&c.to_json()).expect("valid json");
            emit_value(output, value, table)
        }
        Build::J { i, j, cap } => {
            let p = j_object(i, j, cap)?;
            emit_value(
                output,
                pointed_json(&p),
                format!(
                    "zero {} one {}\n{}",
                    p.zero(),
                    p.one(),
                    space_summary(p.carrier())
                ),
            )
        }
        Build::Nerve { cat, cap } => {
            bound("cap", cap, 4, output)?;
            let c = load_category(&cat)?;
            emit_space(output, &coherent_nerve(&c, cap, budget)?.set)
        }
        Build::Hom(req) => hom(req, output, budget),
    }
}

fn hom(req: HomArgs, output: &Output, budget: &Budget) -> Run<()> {
    bound("cap", req.cap, 3, output)?;
    let (x, _) = load_space(&req.space)?;
    let (a, b) = (vertex(&x, &req.x)?, vertex(&x, &req.y)?);
    let variant: Variant = req.variant.parse()?;
    let h = hom_space(&x, a, b, variant, req.cap, budget)?;
    emit_space(output, &h.set)
}

fn faces(i: usize, j: usize) -> Vec<Face> {
    let mut f: Vec<Face> = (0..=i)
        .filter(|_| i > 0)
        .map(|index| Face { dir: 0, index })
        .collect();
    f.extend(
        (0..=j)
            .filter(|_| j > 0)
            .map(|index| Face { dir: 1, index }),
    );
    f
}

fn pullback_checks(name: &str, coeff: &BiCosimplicialSSet, max: usize) -> Run<Vec<Check>> {
    Ok(pullback_table(coeff, max)?
        .into_iter()
        .map(|r| {
            let (a, b) = r.faces;
            Check::new(
                format!(
                    "{name} pullback ({},{}) {}{} {}{}",
                    r.degree.0,
                    r.degree.1,
                    dir(a),
                    a.index,
                    dir(b),
                    b.index
                ),
                r.bijective,
                "",
            )
        })
        .collect())
}

fn dir(f: Face) -> &'static str {
    if f.dir == 0 {
        "h"
    } else {
        "v"
    }
}

fn verify(suite: Suite, output: &Output, budget: &Budget) -> Run<Report> {
    let mut report = Report::default();
    match suite {
        Suite::ReedyQ { max, cap } => {
            bound("max", max, 4, output)?;
            bound("cap", cap, 3, output)?;
            let qo = q_coefficients(max, cap);
            report.extend(pullback_checks("Q", &qo.coeff, max)?);
            for t in 1..=max {
                for i in 0..=t {
                    let j = t - i;
                    for &a in &faces(i, j) {
                        for &b in &faces(i, j) {
                            let ok = face_intersection_check(&qo, i, j, a, b, cap)?;
                            report.push(Check::new(
                                format!(
                                    "Q face lists ({i},{j}) {}{} {}{}",
                                    dir(a),
                                    a.index,
                                    dir(b),
                                    b.index
                                ),
                                ok,
                                "",
                            ));
                        }
                    }
                }
            }
        }
        Suite::ReedyW { max, cap } => {
            bound("max", max, 3, output)?;
            bound("cap", cap, 4, output)?;
            let wo = w(max, cap)?;
            for n in 0..=max {
                report.push(Check::new(
                    format!("|∂Δ^{n}|_W → W_{n} injective"),
                    reedy_boundary_check(&wo.coeff, n)?,
                    "",
                ));
            }
        }
        Suite::Pullback { coeff, max, cap } => {
            bound("max", max, 4, output)?;
            let (name, c) = match coeff {
                Coefficients::Q => ("Q", q_coefficients(max, cap).coeff),
                Coefficients::DeltaBox => ("Δ⊠Δ", delta_box(max, cap)),
                Coefficients::Joins => ("Δ∗Δ", join_coefficients(max, cap)),
            };
            report.extend(pullback_checks(name, &c, max)?);
        }
        Suite::Tautological { cat, cap, x, y } => {
            bound("cap", cap, 2, output)?;
            let c = load_category(&cat)?;
            let r = tautological_iso_check(&c, x, y, cap, budget)?;
            for (v, bij, nat) in &r.rows {
                report.push(Check::new(format!("tautological {v} bijective"), *bij, ""));
                report.push(Check::new(format!("tautological {v} natural"), *nat, ""));
            }
            report.push(Check::new("comparison squares", r.squares, ""));
        }
        Suite::OpSymmetry { cat, cap, x, y } => {
            bound("cap", cap, 2, output)?;
            let c = load_category(&cat)?;
            let r = op_symmetry_check(&c, x, y, cap, budget)?;
            report.push(Check::new("Hom^R ≅ (Hom^L)^op", r.one_sided, ""));
            report.push(Check::new("Hom ≅ Hom^op", r.middle, ""));
            report.push(Check::new("symmetry square", r.square, ""));
            report.note(format!(
                "middle symmetry is the identity: {}",
                r.middle_is_identity
            ));
        }
        Suite::Sigma { max, cap } => {
            bound("max", max, 3, output)?;
            let wo = w(max, cap)?;
            let ok = sigma_w(&wo).is_ok();
            report.push(Check::new(
                format!("σ: W → Δ natural for n ≤ {max}"),
                ok,
                "",
            ));
        }
        Suite::Nullhomotopy { max, cap } => {
            bound("max", max, 4, output)?;
            bound("cap", cap, 2, output)?;
            for t in 0..=max {
                for i in 0..=t {
                    report.push(Check::new(
                        format!("nullhomotopy Q({i},{})", t - i),
                        nullhomotopy_check(i, t - i, cap)?,
                        "",
                    ));
                }
            }
        }
        Suite::Partition { space, x, y, max } => {
            let (k, pts) = load_space(&space)?;
            let (z, o) = match (x, y, pts) {
                (Some(a), Some(b), _) => (vertex(&k, &a)?, vertex(&k, &b)?),
                (None, None, Some(p)) => p,
                _ => {
                    return Err(Failure::Input(
                        "partition needs --x and --y or a pointed document".into(),
                    ))
                }
            };
            let pd = PointedDirected::new(k, z, o)?;
            let max = max.unwrap_or(pd.cap());
            for r in partition_check(&pd, max, budget)? {
                report.push(Check::new(
                    format!("partition level {}", r.level),
                    r.simplices == r.predicted,
                    format!("{} = {}", r.simplices, r.predicted),
                ));
            }
        }
        Suite::DecEquivalence { max } => {
            bound("max", max, 2, output)?;
            let qo = q_coefficients(max, 3);
            let wo = w(max, 3)?;
            let joins = join_coefficients(max + 2, 3);
            for n in 0..=max {
                let s = suspension(&standard_simplex(n, 2 * max + 1))?;
                let d = dec(&s, (max, max))?
                    .is_isomorphic(&cut(n, (max, max)))
                    .is_some();
                report.push(Check::new(format!("dec SΔ^{n} ≅ Cut^{n}"), d, ""));
                let c = frak_c_directed(&s, &qo)?
                    .is_isomorphic(wo.term(n))
                    .is_some();
                report.push(Check::new(format!("𝔠(SΔ^{n}) ≅ W_{n}"), c, ""));
                let prism = product(&standard_simplex(n, 3), &standard_simplex(1, 3))?;
                let p = realize_bi(&cut(n, (n, n)), &joins)?
                    .is_isomorphic(&prism)
                    .is_some();
                report.push(Check::new(format!("|Cut^{n}|_J ≅ Δ^{n} × Δ^1"), p, ""));
                let contractible = contractibility_evidence(&diag(&cut(n, (3, 3))), 2)?.passed();
                report.push(Check::new(
                    format!("diag Cut^{n} acyclic through H_2"),
                    contractible,
                    "evidence",
                ));
            }
        }
        Suite::Flip { max, cap } => {
            bound("max", max, 3, output)?;
            let qo = q_coefficients(max, cap);
            for t in 0..=max {
                for i in 0..=t {
                    let j = t - i;
                    let fwd = tau(qo.model(i, j), qo.model(j, i));
                    let mut ok = true;
                    for (phi, psi) in generators(i, j, max) {
                        let lhs = qo.map(&phi, &psi).then(&tau(
                            qo.model(phi.target, psi.target),
                            qo.model(psi.target, phi.target),
                        ));
                        ok &= lhs == fwd.then(&qo.map(&psi.reversed(), &phi.reversed()));
                    }
                    report.push(Check::new(format!("τ natural at ({i},{j})"), ok, ""));
                }
            }
            let wo = w(max, cap)?;
            let r = rho(&wo)?;
            for n in 0..=max {
                report.push(Check::new(
                    format!("W^rev_{n} ≅ W_{n}"),
                    r.components[n].is_bijective(wo.term(n)),
                    "",
                ));
            }
        }
    }
    Ok(report)
}

/// Generating cofaces and codegeneracies out of bidegree `(i, j)`.
fn generators(i: usize, j: usize, total: usize) -> Vec<(Monotone, Monotone)> {
    let mut out = Vec::new();
    let (idi, idj) = (Monotone::identity(i), Monotone::identity(j));
    if i + j < total {
        out.extend((0..=i + 1).map(|k| (Monotone::coface(i + 1, k), idj.clone())));
        out.extend((0..=j + 1).map(|k| (idi.clone(), Monotone::coface(j + 1, k))));
    }
    out.extend((0..i).map(|k| (Monotone::codegeneracy(i - 1, k), idj.clone())));
    out.extend((0..j).map(|k| (idi.clone(), Monotone::codegeneracy(j - 1, k))));
    out
}

#[derive(Serialize)]
struct Row {
    degree: usize,
    betti: usize,
    torsion: Vec<String>,
}

fn run(cli: Cli) -> Run<bool> {
    let budget = Budget::from_env();
    match cli.command {
        Command::Build { what, output } => build(what, &output, &budget).map(|_| true),
        Command::Hom { req, output } => hom(req, &output, &budget).map(|_| true),
        Command::Verify { suite, output } => {
            let report = verify(suite, &output, &budget)?;
            let text = match output.format {
                Format::Table => report.table(),
                Format::Json => report.json(),
            };
            emit(&output, text)?;
            Ok(report.passed())
        }
        Command::Homology {
            space,
            upto,
            output,
        } => {
            let (x, _) = load_space(&space)?;
            let mut rows = Vec::new();
            for k in 0..=upto {
                let g = homology(&x, k)?;
                rows.push(Row {
                    degree: k,
                    betti: g.betti,
                    torsion: g.torsion.iter().map(|t| t.to_string()).collect(),
                });
            }
            let mut table = String::from("k\tbetti\ttorsion\n");
            for r in &rows {
                let t = if r.torsion.is_empty() {
                    "-".to_string()
                } else {
                    r.torsion.join(",")
                };
                table.push_str(&format!("{}\t{}\t{}\n", r.degree, r.betti, t));
            }
            emit_value(
                &output,
                serde_json::to_value(&rows).expect("serializable"),
                table,
            )?;
            Ok(true)
        }
        Command::Iso {
            left,
            right,
            output,
        } => {
            let (a, b) = (load_space(&left)?.0, load_space(&right)?.0);
            let iso = a.cap() == b.cap() && a.is_isomorphic(&b).is_some();
            let text = if iso {
                "isomorphic\n"
            } else {
                "not isomorphic\n"
            };
            emit_value(&output, json!({ "isomorphic": iso }), text.to_string())?;
            Ok(iso)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
