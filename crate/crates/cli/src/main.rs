//! Command-line interface: bounds, SDP generation, constructions,
//! verification, oracles and dual analysis behind one binary.

mod output;

use clap::{Args, Parser, Subcommand};
use codebounds::bounds::{classical, delsarte};
use codebounds::circular;
use codebounds::code::{verify_code, Metric};
use codebounds::codefile;
use codebounds::constructions::{coset20, golay, lee_codes, net};
use codebounds::oracle::{self, SearchBudget};
use codebounds::sdp::cw::{gen_cw, CwLevel};
use codebounds::sdp::dual::{analyze_dual, DualSolution};
use codebounds::sdp::hamming::gen_hamming_quadruple;
use codebounds::sdp::lee::gen_lee_triple;
use codebounds::sdp::program::{Family, SdpProgram};
use codebounds::sdp::sdpa;
use output::Report;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "codebounds",
    version,
    about = "Bounds, constructions and SDP generators for error-correcting codes"
)]
struct Cli {
    /// Emit a single JSON object instead of text lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Upper bounds on code sizes.
    Bound {
        #[command(subcommand)]
        which: BoundCommand,
    },
    /// Emit a symmetry-reduced semidefinite program in SDPA sparse format.
    Sdpgen(SdpgenArgs),
    /// Build one of the library codes and print it in the code file format.
    Construct {
        #[command(subcommand)]
        which: ConstructCommand,
    },
    /// Check a code file against a distance (and optional weight) claim.
    Verify(VerifyArgs),
    /// Exact brute-force searches on small instances.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Orbit bookkeeping for the SDP generators.
    Orbits {
        #[command(subcommand)]
        which: OrbitsCommand,
    },
    /// Flag orbits that a dual solution proves absent from optimal codes.
    AnalyzeDual(AnalyzeDualArgs),
}

#[derive(Subcommand)]
enum BoundCommand {
    /// The q-ary Plotkin bound.
    Plotkin {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// The pair-counting slack h(q,n,d,M).
    H {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long = "M")]
        m: u64,
    },
    /// The divisibility bound with its (m, r) certificate.
    Divisibility {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Exact Delsarte linear programming bounds.
    Delsarte {
        #[arg(long)]
        scheme: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        w: Option<u32>,
    },
    /// Lovász theta of the circular graph C_{d,q}.
    Theta {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: u32,
    },
}

#[derive(Args)]
struct SdpgenArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    w: Option<usize>,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// The extended (or punctured binary) Golay code.
    Golay {
        #[arg(long, default_value = "extended")]
        variant: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Shortenings of the Golay codes.
    GolayShortened {
        #[arg(long)]
        times: usize,
        #[arg(long, default_value = "extended")]
        base: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A weight class of the Golay family.
    GolayWeight {
        #[arg(long)]
        w: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The equidistant 15-word (7,9)_5 Lee code.
    #[command(name = "lee-5-7-9")]
    Lee579 {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The 18-word (4,6)_6 Lee code.
    #[command(name = "lee-6-4-6")]
    Lee646 {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// A (20,8) coset-flip code of size 256.
    Coset20 {
        /// Hex mask; bit i complements coset i.
        #[arg(long, default_value = "0")]
        flips: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The symmetric net of an extremal code, printed as a 0/1 matrix.
    Net {
        #[arg(long)]
        from: PathBuf,
    },
    /// The cyclic power construction over Z_{q_n}.
    Circular {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The 367-word independent set in the fifth power of the 7-cycle.
    #[command(name = "c7-367")]
    C7_367 {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The shift/divide/remove/extend pipeline with the published inputs.
    #[command(name = "c7-pipeline")]
    C7Pipeline {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    metric: String,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    w: Option<usize>,
    file: PathBuf,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exact maximum code size with a witness.
    MaxCode {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "hamming")]
        metric: String,
        #[arg(long)]
        w: Option<usize>,
    },
    /// Independence number of a strong power of a circular graph.
    AlphaCircular {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum OrbitsCommand {
    /// Number of variables (orbits) of a generated program.
    Count {
        #[arg(long)]
        family: String,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        w: Option<usize>,
    },
}

#[derive(Args)]
struct AnalyzeDualArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    #[arg(long)]
    w: Option<usize>,
    /// JSON file: {"blocks": [[[..]]], "var_duals": [..]}.
    #[arg(long)]
    dual: PathBuf,
    /// Least value a nonzero invariant z can take (e.g. 1/|H|).
    #[arg(long)]
    lower_bound: f64,
    /// Known optimal objective value.
    #[arg(long)]
    attained: f64,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CODEBOUNDS_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli.command, cli.json) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn build_program(
    family: &str,
    q: Option<u32>,
    n: usize,
    d: u32,
    w: Option<usize>,
) -> Result<SdpProgram, codebounds::Error> {
    let family = Family::parse(family)
        .ok_or_else(|| codebounds::Error::Domain(format!("unknown family `{family}`")))?;
    let need_q = || q.ok_or_else(|| codebounds::Error::Domain("--q required".into()));
    match family {
        Family::Hamming4 => gen_hamming_quadruple(need_q()?, n, d),
        Family::CwA3 | Family::CwA4 | Family::CwB4 => {
            let w = w.ok_or_else(|| codebounds::Error::Domain("--w required".into()))?;
            let level = match family {
                Family::CwA3 => CwLevel::A3,
                Family::CwA4 => CwLevel::A4,
                _ => CwLevel::B4,
            };
            gen_cw(n, d, w, level)
        }
        Family::Lee3 => gen_lee_triple(need_q()?, n, d, Metric::Lee),
        Family::LeeInf3 => gen_lee_triple(need_q()?, n, d, Metric::LeeInf),
        Family::Delsarte2 => {
            codebounds::sdp::delsarte_red::gen_delsarte_pair_sdp(need_q()?, n, d)
        }
    }
}

fn emit_code(
    code: &codebounds::Code,
    output: Option<&PathBuf>,
    report: &mut Report,
) -> Result<(), codebounds::Error> {
    report.line(format!("size {}", code.len()));
    report.set("result", json!(code.len()));
    match output {
        Some(path) => {
            codefile::write(code, path)?;
            report.line(format!("wrote {}", path.display()));
            report.set("path", json!(path.display().to_string()));
        }
        None => report.line(codefile::render(code).trim_end().to_string()),
    }
    Ok(())
}

fn run(command: Command, as_json: bool) -> Result<(), codebounds::Error> {
    let mut report;
    match command {
        Command::Bound { which } => match which {
            BoundCommand::Plotkin { q, n, d } => {
                report = Report::new("bound plotkin", json!({"q": q, "n": n, "d": d}));
                match classical::plotkin(q, n, d) {
                    Some(b) => {
                        report.line(format!("plotkin {}", b.value));
                        report.set("result", json!(b.value.to_string()));
                    }
                    None => {
                        report.line("not-applicable".into());
                        report.set("result", json!("not-applicable"));
                    }
                }
            }
            BoundCommand::H { q, n, d, m } => {
                report = Report::new("bound h", json!({"q": q, "n": n, "d": d, "M": m}));
                let h = classical::h_value(q, n, d, m);
                report.line(format!("h {h}"));
                report.set("result", json!(h.to_string()));
            }
            BoundCommand::Divisibility { q, n, d } => {
                report = Report::new("bound divisibility", json!({"q": q, "n": n, "d": d}));
                match classical::divisibility_bound(q, n, d) {
                    Some(b) => {
                        let classical::BoundMethod::Divisibility { m, r } = &b.method else {
                            unreachable!()
                        };
                        report.line(format!("divisibility {} (m={m}, r={r})", b.value));
                        report.set("result", json!(b.value.to_string()));
                        report.set("certificate", json!({"m": m.to_string(), "r": r}));
                    }
                    None => {
                        report.line("not-applicable".into());
                        report.set("result", json!("not-applicable"));
                    }
                }
            }
            BoundCommand::Delsarte { scheme, q, n, d, w } => {
                report = Report::new(
                    "bound delsarte",
                    json!({"scheme": scheme, "q": q, "n": n, "d": d, "w": w}),
                );
                match scheme.as_str() {
                    "hamming" => {
                        let q = q.ok_or_else(|| {
                            codebounds::Error::Domain("--q required for the Hamming scheme".into())
                        })?;
                        let sol = delsarte::delsarte_hamming(q, n, d)?;
                        report.line(format!(
                            "delsarte hamming {} (floor {})",
                            sol.optimum,
                            sol.optimum.floor().to_integer()
                        ));
                        report.set("result", json!(sol.optimum.to_string()));
                        report
                            .set("floor", json!(sol.optimum.floor().to_integer().to_string()));
                    }
                    "johnson" => {
                        let w = w.ok_or_else(|| {
                            codebounds::Error::Domain("--w required for the Johnson scheme".into())
                        })?;
                        let b = delsarte::delsarte_johnson(n, d, w)?;
                        report.line(format!(
                            "delsarte johnson {} (floor {}, d normalized to {})",
                            b.optimum, b.floor, b.normalized_d
                        ));
                        report.set("result", json!(b.optimum.to_string()));
                        report.set("floor", json!(b.floor.to_string()));
                        report.set("normalized_d", json!(b.normalized_d));
                    }
                    other => {
                        return Err(codebounds::Error::Domain(format!(
                            "unknown scheme `{other}`"
                        )))
                    }
                }
            }
            BoundCommand::Theta { d, q } => {
                report = Report::new("bound theta", json!({"d": d, "q": q}));
                let t = circular::theta_circular(d, q)?;
                report.line(format!("theta {t:.12}"));
                report.set("result", json!(t));
            }
        },
        Command::Sdpgen(args) => {
            report = Report::new(
                "sdpgen",
                json!({"family": args.family, "q": args.q, "n": args.n, "d": args.d, "w": args.w}),
            );
            let program = build_program(&args.family, args.q, args.n, args.d, args.w)?;
            std::fs::write(&args.output, sdpa::emit(&program))?;
            report.line(format!(
                "wrote {} ({} variables, {} blocks)",
                args.output.display(),
                program.num_vars(),
                program.blocks.len() + 1
            ));
            report.set("result", json!(program.num_vars()));
            report.set("blocks", json!(program.blocks.len() + 1));
            report.set("path", json!(args.output.display().to_string()));
        }
        Command::Construct { which } => match which {
            ConstructCommand::Golay { variant, output } => {
                report = Report::new("construct golay", json!({"variant": variant}));
                let v = match variant.as_str() {
                    "extended" => golay::GolayVariant::Extended,
                    "binary" => golay::GolayVariant::Binary,
                    other => {
                        return Err(codebounds::Error::Domain(format!(
                            "unknown variant `{other}`"
                        )))
                    }
                };
                emit_code(&golay::golay(v)?, output.as_ref(), &mut report)?;
            }
            ConstructCommand::GolayShortened { times, base, output } => {
                report = Report::new(
                    "construct golay-shortened",
                    json!({"times": times, "base": base}),
                );
                let v = match base.as_str() {
                    "extended" => golay::GolayVariant::Shortened { times },
                    "binary" => golay::GolayVariant::ShortenedBinary { times },
                    other => {
                        return Err(codebounds::Error::Domain(format!("unknown base `{other}`")))
                    }
                };
                emit_code(&golay::golay(v)?, output.as_ref(), &mut report)?;
            }
            ConstructCommand::GolayWeight { w, output } => {
                report = Report::new("construct golay-weight", json!({"w": w}));
                let c = golay::golay(golay::GolayVariant::WeightClass { w })?;
                emit_code(&c, output.as_ref(), &mut report)?;
            }
            ConstructCommand::Lee579 { output } => {
                report = Report::new("construct lee-5-7-9", json!({}));
                emit_code(&lee_codes::lee_5_7_9(), output.as_ref(), &mut report)?;
            }
            ConstructCommand::Lee646 { output } => {
                report = Report::new("construct lee-6-4-6", json!({}));
                emit_code(&lee_codes::lee_6_4_6(), output.as_ref(), &mut report)?;
            }
            ConstructCommand::Coset20 { flips, output } => {
                report = Report::new("construct coset20", json!({"flips": flips}));
                let mask = u16::from_str_radix(flips.trim_start_matches("0x"), 16)
                    .map_err(|e| codebounds::Error::Parse(format!("bad mask: {e}")))?;
                emit_code(&coset20::coset20(mask)?, output.as_ref(), &mut report)?;
            }
            ConstructCommand::Net { from } => {
                report =
                    Report::new("construct net", json!({"from": from.display().to_string()}));
                let code = codefile::read(&from)?;
                let sym_net = net::net_from_code(&code)?;
                sym_net.verify_axioms()?;
                report.line(format!("symmetric ({}, {})-net", sym_net.mu, sym_net.q));
                for row in &sym_net.incidence {
                    report.line(row.iter().map(u8::to_string).collect::<String>());
                }
                report.set("result", json!({"mu": sym_net.mu, "q": sym_net.q}));
            }
            ConstructCommand::Circular { r, n, output } => {
                report = Report::new("construct circular", json!({"r": r, "n": n}));
                emit_code(
                    &circular::circular_construction(r, n)?,
                    output.as_ref(),
                    &mut report,
                )?;
            }
            ConstructCommand::C7_367 { output } => {
                report = Report::new("construct c7-367", json!({}));
                emit_code(&circular::c7_367(), output.as_ref(), &mut report)?;
            }
            ConstructCommand::C7Pipeline { output } => {
                report = Report::new("construct c7-pipeline", json!({}));
                let (code, stages) =
                    circular::c7_pipeline(&circular::paper_shift(), &circular::paper_divisor())?;
                report.line(format!(
                    "projected {} retained {} residual {}v/{}e extension {} total {}",
                    stages.projected,
                    stages.after_removal,
                    stages.residual_vertices,
                    stages.residual_edges,
                    stages.extension,
                    stages.total
                ));
                report.set(
                    "certificate",
                    json!({
                        "projected": stages.projected,
                        "after_removal": stages.after_removal,
                        "residual_vertices": stages.residual_vertices,
                        "residual_edges": stages.residual_edges,
                        "extension": stages.extension,
                    }),
                );
                emit_code(&code, output.as_ref(), &mut report)?;
            }
        },
        Command::Verify(args) => {
            report = Report::new(
                "verify",
                json!({
                    "metric": args.metric,
                    "d": args.d,
                    "w": args.w,
                    "file": args.file.display().to_string()
                }),
            );
            let metric = Metric::parse(&args.metric)?;
            let code = codefile::read(&args.file)?;
            let v = verify_code(&code, metric, args.d, args.w);
            let dmin = v
                .min_distance
                .map(|m| m.to_string())
                .unwrap_or_else(|| "inf".into());
            report.line(
                format!(
                    "{} size {} d_min {}{}",
                    if v.pass { "pass" } else { "fail" },
                    v.size,
                    dmin,
                    v.weight_uniform
                        .map(|u| format!(" weight-uniform {u}"))
                        .unwrap_or_default()
                ),
            );
            report.set("result", json!(if v.pass { "pass" } else { "fail" }));
            report.set(
                "certificate",
                json!({"size": v.size, "d_min": dmin, "weight_uniform": v.weight_uniform}),
            );
            let pass = v.pass;
            report.finish(as_json);
            if !pass {
                return Err(codebounds::Error::Domain("verification failed".into()));
            }
            return Ok(());
        }
        Command::Oracle { which } => match which {
            OracleCommand::MaxCode { q, n, d, metric, w } => {
                report = Report::new(
                    "oracle max-code",
                    json!({"q": q, "n": n, "d": d, "metric": metric, "w": w}),
                );
                let metric = Metric::parse(&metric)?;
                let r = oracle::max_code(q, n, d, metric, w, SearchBudget::default())?;
                report.line(format!("max {} exact {}", r.size, r.exact));
                for word in r.witness.words() {
                    report.line(format!("  {word}"));
                }
                report.set("result", json!(r.size));
                report.set("exact", json!(r.exact));
                report.set(
                    "certificate",
                    json!(r
                        .witness
                        .words()
                        .iter()
                        .map(|w| w.to_string())
                        .collect::<Vec<_>>()),
                );
            }
            OracleCommand::AlphaCircular { q, d, n } => {
                report = Report::new("oracle alpha-circular", json!({"q": q, "d": d, "n": n}));
                let r = oracle::alpha_circular(d, q, n, SearchBudget::default())?;
                report.line(format!("alpha {} exact {}", r.size, r.exact));
                report.set("result", json!(r.size));
                report.set("exact", json!(r.exact));
            }
        },
        Command::Orbits { which } => match which {
            OrbitsCommand::Count { family, q, n, d, w } => {
                report = Report::new(
                    "orbits count",
                    json!({"family": family, "q": q, "n": n, "d": d, "w": w}),
                );
                let program = build_program(&family, q, n, d, w)?;
                report.line(format!("variables {}", program.num_vars()));
                report.set("result", json!(program.num_vars()));
            }
        },
        Command::AnalyzeDual(args) => {
            report = Report::new(
                "analyze-dual",
                json!({"family": args.family, "q": args.q, "n": args.n, "d": args.d, "w": args.w}),
            );
            let program = build_program(&args.family, args.q, args.n, args.d, args.w)?;
            let text = std::fs::read_to_string(&args.dual)?;
            let parsed: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| codebounds::Error::Parse(format!("bad dual file: {e}")))?;
            let blocks: Vec<Vec<Vec<f64>>> = serde_json::from_value(
                parsed
                    .get("blocks")
                    .cloned()
                    .ok_or_else(|| codebounds::Error::Parse("missing `blocks`".into()))?,
            )
            .map_err(|e| codebounds::Error::Parse(format!("bad blocks: {e}")))?;
            let var_duals: Vec<f64> = serde_json::from_value(
                parsed
                    .get("var_duals")
                    .cloned()
                    .ok_or_else(|| codebounds::Error::Parse("missing `var_duals`".into()))?,
            )
            .map_err(|e| codebounds::Error::Parse(format!("bad var_duals: {e}")))?;
            let dual = DualSolution { block_mats: blocks, var_duals };
            let forbidden = analyze_dual(&program, &dual, args.lower_bound, args.attained)?;
            report.line(format!("forbidden {}", forbidden.len()));
            let mut list = Vec::new();
            for f in &forbidden {
                let rep = f.key.representative();
                let words: Vec<String> = rep.words().iter().map(|w| w.to_string()).collect();
                report.line(format!(
                    "  var {} z<= {:.3e} [{}]",
                    f.var,
                    f.z_bound,
                    words.join(", ")
                ));
                list.push(json!({"var": f.var, "z_bound": f.z_bound, "words": words}));
            }
            report.set("result", json!(forbidden.len()));
            report.set("certificate", json!(list));
        }
    }
    report.finish(as_json);
    Ok(())
}
