use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use olevel::binomial::{is_o_sequence, macaulay_expand};
use olevel::levelness::{level_check, LevelVerdict};
use olevel::monomial::MonomialIdeal;
use olevel::oracle::{koszul_betti_mod, socle_monomials, DEFAULT_PRIME};
use olevel::resolution::{cancellation_bounds, closed_betti_codim3, ek_betti, BettiTable};
use olevel::sweep::{enumerate_o_sequences, map, with_jobs, Census};
use olevel::typevector::{
    hf_from_typevector, shift_report_p2, shift_report_p3, typevector_from_hf, TypeVector,
};
use olevel::{Error, OSequence};
use serde_json::{json, Value};

const SCHEMA_VERSION: u32 = 1;

const EXIT_NOT_O_SEQUENCE: u8 = 1;
const EXIT_BAD_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_NOT_LEVEL: u8 = 10;

/// Non-levelness certificates, lex ideals and Betti tables for O-sequences.
#[derive(Parser)]
#[command(name = "olevel", version)]
struct Cli {
    /// Emit JSON (one object per line) instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Comma-separated h-vector starting with h_0 = 1.
    #[arg(long)]
    seq: Option<String>,
    /// File with one sequence per line; `#` starts a comment.
    #[arg(long)]
    corpus: Option<PathBuf>,
}

#[derive(Args)]
struct SeqArg {
    /// Comma-separated h-vector starting with h_0 = 1.
    #[arg(long)]
    seq: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Ek,
    Closed,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Check Macaulay's bound in every degree.
    Validate(Input),
    /// Binomial expansion of a value and its growth bound.
    Growth {
        #[arg(long)]
        value: u64,
        #[arg(long)]
        degree: u32,
    },
    /// Lex-segment ideal of a sequence.
    LexIdeal {
        #[command(flatten)]
        seq: SeqArg,
        /// Number of variables (default max(3, h_1)).
        #[arg(long)]
        vars: Option<usize>,
        /// Print only minimal generators.
        #[arg(long)]
        gens_only: bool,
    },
    /// Graded Betti numbers of the lex ideal.
    Betti {
        #[command(flatten)]
        seq: SeqArg,
        #[arg(long, value_enum, default_value = "ek")]
        method: Method,
        /// Prime for the Koszul oracle.
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
        #[arg(long)]
        vars: Option<usize>,
    },
    /// Certificate of non-levelness, or Unknown.
    LevelCheck(Input),
    /// Extract a 3-type vector from a sequence, or synthesize the sequence of
    /// a type vector.
    Typevector {
        #[arg(long, conflicts_with = "tv", required_unless_present = "tv")]
        seq: Option<String>,
        /// Type vector in nested-parenthesis form, e.g. ((3,6,7),(1,2,3,4,5,6,7,8)).
        #[arg(long)]
        tv: Option<String>,
        /// With --tv: print the Hilbert function.
        #[arg(long, requires = "tv")]
        to_hf: bool,
    },
    /// Socle monomials of the lex algebra and cancellation lower bounds.
    Socle {
        #[command(flatten)]
        seq: SeqArg,
    },
    /// Every O-sequence within the bounds, with its verdict.
    Enumerate {
        /// Largest h_1.
        #[arg(long, default_value_t = 3)]
        codim: u64,
        #[arg(long, default_value_t = 6)]
        max_socle_degree: usize,
        #[arg(long, default_value_t = 12)]
        max_value: u64,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// A failure with its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if e.is_internal() {
            EXIT_INTERNAL
        } else {
            EXIT_BAD_INPUT
        };
        Fail(code, e.to_string())
    }
}

struct Out {
    json: bool,
    buf: io::BufWriter<io::Stdout>,
}

impl Out {
    fn emit(&mut self, mut value: Value, text: impl FnOnce() -> String) {
        let line = if self.json {
            if let Value::Object(m) = &mut value {
                m.insert("schema_version".into(), json!(SCHEMA_VERSION));
            }
            value.to_string()
        } else {
            text()
        };
        let _ = writeln!(self.buf, "{line}");
    }
}

fn parse_seq(s: &str) -> Result<OSequence, Fail> {
    Ok(s.parse::<OSequence>()?)
}

fn read_inputs(input: &Input) -> Result<Vec<OSequence>, Fail> {
    if let Some(s) = &input.seq {
        return Ok(vec![parse_seq(s)?]);
    }
    let path = input.corpus.as_ref().expect("clap enforces one input");
    let text = fs::read_to_string(path)
        .map_err(|e| Fail(EXIT_BAD_INPUT, format!("{}: {e}", path.display())))?;
    text.lines()
        .enumerate()
        .map(|(k, l)| (k, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(k, l)| {
            parse_seq(l).map_err(|Fail(c, m)| Fail(c, format!("{}:{}: {m}", path.display(), k + 1)))
        })
        .collect()
}

fn require_o_sequence(h: &OSequence) -> Result<(), Fail> {
    match is_o_sequence(h).violation {
        None => Ok(()),
        Some(v) => Err(Error::NotOSequence {
            degree: v.degree,
            value: v.value,
            bound: v.bound.to_string(),
        }
        .into()),
    }
}

fn lex_for(h: &OSequence, vars: Option<usize>) -> Result<MonomialIdeal, Fail> {
    require_o_sequence(h)?;
    let n = vars.unwrap_or((h.codim() as usize).max(3));
    Ok(MonomialIdeal::lex(h, n)?)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn verdict_text(h: &OSequence, v: &LevelVerdict) -> String {
    match v {
        LevelVerdict::NotLevel(f) => {
            let mut s = format!(
                "({h}): NotLevel via {} at d = {}; socle degrees {{{}}}",
                f.criterion,
                f.d,
                join(&f.socle_degrees, ",")
            );
            for e in &f.evidence {
                s.push_str("\n  ");
                s.push_str(e);
            }
            s
        }
        LevelVerdict::Unknown { diagnostics } => {
            let mut s = format!("({h}): Unknown");
            for e in diagnostics {
                s.push_str("\n  ");
                s.push_str(e);
            }
            s
        }
    }
}

fn verdict_json(h: &OSequence, v: &LevelVerdict) -> Value {
    let mut val = serde_json::to_value(v).expect("verdict serializes");
    val["sequence"] = json!(h);
    val
}

fn table_json(t: &BettiTable) -> Value {
    json!({ "nvars": t.nvars(), "entries": t })
}

fn run(cli: Cli, out: &mut Out) -> Result<u8, Fail> {
    match cli.command {
        Command::Validate(input) => {
            let mut code = 0;
            for h in read_inputs(&input)? {
                let chk = is_o_sequence(&h);
                match &chk.violation {
                    None => out.emit(json!({"sequence": h, "valid": true}), || {
                        format!("({h}): O-sequence")
                    }),
                    Some(v) => {
                        code = EXIT_NOT_O_SEQUENCE;
                        out.emit(
                            json!({"sequence": h, "valid": false, "violation": {
                                "degree": v.degree, "value": v.value, "bound": v.bound.to_string()
                            }}),
                            || {
                                format!(
                                    "({h}): not an O-sequence: h_{} = {} exceeds h_{}^<{}> = {}",
                                    v.degree,
                                    v.value,
                                    v.degree - 1,
                                    v.degree - 1,
                                    v.bound
                                )
                            },
                        )
                    }
                }
            }
            Ok(code)
        }
        Command::Growth { value, degree } => {
            if degree == 0 {
                return Err(Fail(EXIT_BAD_INPUT, "degree must be at least 1".into()));
            }
            let e = macaulay_expand(value, degree);
            let g = e.growth();
            out.emit(
                json!({"value": value, "degree": degree, "expansion": e, "growth": g.to_string()}),
                || format!("{value} = {e}\n{value}^<{degree}> = {g}"),
            );
            Ok(0)
        }
        Command::LexIdeal {
            seq,
            vars,
            gens_only,
        } => {
            let h = parse_seq(&seq.seq)?;
            let ideal = lex_for(&h, vars)?;
            let by_degree: Vec<(usize, Vec<String>)> = if gens_only {
                ideal
                    .minimal_generators()
                    .into_iter()
                    .map(|(d, g)| (d, g.iter().map(ToString::to_string).collect()))
                    .collect()
            } else {
                (0..=ideal.max_degree())
                    .map(|d| {
                        (
                            d,
                            ideal
                                .stored_slice(d)
                                .iter()
                                .map(ToString::to_string)
                                .collect(),
                        )
                    })
                    .filter(|(_, v): &(usize, Vec<String>)| !v.is_empty())
                    .collect()
            };
            let degrees: Vec<Value> = by_degree
                .iter()
                .map(|(d, m)| json!({"degree": d, "monomials": m}))
                .collect();
            out.emit(
                json!({"sequence": h, "nvars": ideal.nvars(), "generators_only": gens_only, "degrees": degrees}),
                || {
                    by_degree
                        .iter()
                        .map(|(d, m)| format!("{d}: {}", m.join(" ")))
                        .collect::<Vec<_>>()
                        .join("\n")
                },
            );
            Ok(0)
        }
        Command::Betti {
            seq,
            method,
            prime,
            vars,
        } => {
            let h = parse_seq(&seq.seq)?;
            match method {
                Method::Ek | Method::Oracle => {
                    let ideal = lex_for(&h, vars)?;
                    let t = match method {
                        Method::Ek => ek_betti(&ideal)?,
                        _ => koszul_betti_mod(&ideal, h.socle_degree() + ideal.nvars() + 1, prime)?,
                    };
                    out.emit(table_json(&t), || t.to_string());
                }
                Method::Closed => {
                    require_o_sequence(&h)?;
                    let d = (1..h.len())
                        .find(|&d| h.get(d - 1) > h.get(d) && h.get(d) == h.get(d + 1))
                        .filter(|_| h.codim() <= 3)
                        .ok_or_else(|| {
                            Fail(
                                EXIT_BAD_INPUT,
                                "closed form needs h_1 <= 3 and some h_(d-1) > h_d = h_(d+1)"
                                    .into(),
                            )
                        })?;
                    let i = h.get(d) as i64 - d as i64;
                    let j = h.get(d - 1) - h.get(d);
                    if i < 1 {
                        return Err(Fail(
                            EXIT_BAD_INPUT,
                            format!("closed form needs i = h_d - d >= 1, got {i}"),
                        ));
                    }
                    let cb = closed_betti_codim3(d, i as usize, j as usize)?;
                    out.emit(serde_json::to_value(&cb).unwrap(), || {
                        let show =
                            |b: Option<u64>| b.map_or("undetermined".into(), |v| v.to_string());
                        let mut s = format!(
                            "d = {d}, i = {i}, j = {j}\nbeta_(1,{0}) = {1}\nbeta_(2,{0}) = {2}",
                            d + 2,
                            show(cb.beta1),
                            show(cb.beta2)
                        );
                        for line in cb.branches.iter().chain(&cb.diagnostics) {
                            s.push_str("\n  ");
                            s.push_str(line);
                        }
                        s
                    });
                }
            }
            Ok(0)
        }
        Command::LevelCheck(input) => {
            let seqs = read_inputs(&input)?;
            let mut code = 0;
            for h in &seqs {
                let v = level_check(h)?;
                if v.is_not_level() {
                    code = EXIT_NOT_LEVEL;
                }
                out.emit(verdict_json(h, &v), || verdict_text(h, &v));
            }
            Ok(code)
        }
        Command::Typevector { seq, tv, to_hf } => {
            let t = match (seq, tv) {
                (Some(s), _) => {
                    let h = parse_seq(&s)?;
                    require_o_sequence(&h)?;
                    typevector_from_hf(&h)?
                }
                (None, Some(t)) => {
                    let t: TypeVector = t.parse()?;
                    t.validate()?;
                    t
                }
                (None, None) => unreachable!("clap requires one of --seq, --tv"),
            };
            let hf = hf_from_typevector(&t)?;
            let report = match t.level() {
                2 => Some(shift_report_p2(&t)?),
                3 => Some(shift_report_p3(&t)?),
                _ => None,
            };
            out.emit(
                json!({"type_vector": t, "alpha": t.alpha(), "sigma": t.sigma(),
                       "hilbert_function": hf, "shifts": report}),
                || {
                    let mut s = if to_hf {
                        format!("{hf}")
                    } else {
                        format!(
                            "{t}  (alpha {}, sigma {})\nH = ({hf})",
                            t.alpha(),
                            t.sigma()
                        )
                    };
                    if let (Some(r), false) = (&report, to_hf) {
                        for f in &r.noncancelable {
                            s.push_str(&format!(
                                "\n  noncancelable shift {} ({}): socle degree {}",
                                f.shift, f.rule, f.socle_degree
                            ));
                        }
                    }
                    s
                },
            );
            Ok(0)
        }
        Command::Socle { seq } => {
            let h = parse_seq(&seq.seq)?;
            let ideal = lex_for(&h, None)?;
            let soc = socle_monomials(&ideal)?;
            let bounds = cancellation_bounds(&ek_betti(&ideal)?)?;
            let socle: Vec<Value> = soc
                .iter()
                .map(|(d, m)| json!({"degree": d, "monomials": m.iter().map(ToString::to_string).collect::<Vec<_>>()}))
                .collect();
            out.emit(
                json!({"sequence": h, "socle": socle, "cancellation_bounds": bounds}),
                || {
                    let mut s = String::from("socle:");
                    for (d, m) in &soc {
                        s.push_str(&format!("\n  {d}: {}", join(m, " ")));
                    }
                    s.push_str("\ncancellation lower bounds:");
                    for b in &bounds {
                        s.push_str(&format!(
                            "\n  shift {}: {} (socle degree {})",
                            b.shift, b.lower_bound, b.socle_degree
                        ));
                    }
                    s
                },
            );
            Ok(0)
        }
        Command::Enumerate {
            codim,
            max_socle_degree,
            max_value,
            jobs,
        } => {
            let seqs = enumerate_o_sequences(codim, max_socle_degree, max_value);
            let verdicts = with_jobs(jobs, || map(&seqs, level_check))
                .into_iter()
                .collect::<Result<Vec<_>, _>>()?;
            for (h, v) in seqs.iter().zip(&verdicts) {
                out.emit(verdict_json(h, v), || match v {
                    LevelVerdict::NotLevel(f) => format!(
                        "{h}\tNotLevel\t{}\t{{{}}}",
                        f.criterion,
                        join(&f.socle_degrees, ",")
                    ),
                    LevelVerdict::Unknown { .. } => format!("{h}\tUnknown"),
                });
            }
            let census = Census::tally(&verdicts);
            out.emit(json!({"census": census}), || {
                format!(
                    "total {}, NotLevel {}, Unknown {}; {}",
                    census.total,
                    census.not_level,
                    census.unknown,
                    join(
                        census.by_criterion.iter().map(|(k, v)| format!("{k} {v}")),
                        ", "
                    )
                )
            });
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        json: cli.json,
        buf: io::BufWriter::new(io::stdout()),
    };
    let code = match run(cli, &mut out) {
        Ok(c) => c,
        Err(Fail(c, msg)) => {
            let _ = out.buf.flush();
            eprintln!("olevel: {msg}");
            c
        }
    };
    let _ = out.buf.flush();
    ExitCode::from(code)
}
