//! The `vpb` command line.
//!
//! Strands are 1-indexed (`l[1,2]`, `--k`, `--l`); simplicial indices `--i`
//! are 0-indexed. Every subcommand writes one document to the output stream:
//! plain text by default, or a single JSON value with `--format json`.
//!
//! Exit codes: 0 pass, 1 refuted, 2 Unknown under `--strict`, 64 usage
//! error, 65 domain error.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::brunnian::{is_brunnian, verify_brunnian_samples, BrunnianReport, BrunnianStatus};
use crate::cabling::{
    a_closed, a_elem, b_closed, b_elem, c_elem, cabled_relators, verify_cabled_relators, verify_cabling,
    verify_lemma_commuting,
};
use crate::error::{Error, Result};
use crate::milnor::{check_theta_simplicial, milnor_basis, theta, MilnorBasisElement, WedgeCopy};
use crate::oracle::{equal, triviality, verify_rep_welldef, Budget, Verdict, Witness};
use crate::presentation::vp_presentation;
use crate::simplicial::{degeneracy, face, verify_relator_images, verify_simplicial_identities, MapKind};
use crate::suite::{verdict_json, ReportOptions, SuiteReport, EXIT_REFUTED, EXIT_UNKNOWN};
use crate::word::{Alphabet, Word};

pub const EXIT_USAGE: i32 = 64;
pub const EXIT_DOMAIN: i32 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "vpb",
    version,
    about = "Virtual pure braid groups and their simplicial structure"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Same as `--format`.
    #[arg(long, global = true, value_enum)]
    report: Option<Format>,
    /// Treat Unknown verdicts as failures (exit 2).
    #[arg(long, global = true)]
    strict: bool,
    /// Prover cap on explored states.
    #[arg(long, global = true)]
    budget_states: Option<usize>,
    /// Prover cap on word length.
    #[arg(long, global = true)]
    budget_len: Option<usize>,
    /// Include full derivation traces.
    #[arg(long, global = true)]
    emit_trace: bool,
    /// Include wall-clock timings.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The standard presentation of VP_n.
    Present {
        #[arg(long)]
        n: usize,
    },
    /// The face d_i of a word in VP_n.
    Face(MapArgs),
    /// The degeneracy s_i of a word in VP_n.
    Degen(MapArgs),
    /// Cabling elements a, b, c.
    Cabling {
        #[command(subcommand)]
        family: CablingCmd,
    },
    /// Relators of VP_{n+1} obtained from VP_n by cabling.
    GenRelations {
        #[arg(long)]
        n: usize,
    },
    /// Decide whether a word is trivial in VP_n.
    Trivial {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Decide whether two words are equal in VP_n.
    Equal {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lhs: String,
        #[arg(long, allow_hyphen_values = true)]
        rhs: String,
    },
    /// Brunnian test, or sampling of symmetric commutators.
    #[command(args_conflicts_with_subcommands = true)]
    Brunnian {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        #[command(subcommand)]
        sample: Option<BrunnianCmd>,
    },
    /// Milnor construction on the circle wedge S^1 v S^1.
    Milnor {
        #[command(subcommand)]
        cmd: MilnorCmd,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifyCmd,
    },
}

#[derive(Args, Debug)]
struct MapArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    i: usize,
    #[arg(long, allow_hyphen_values = true)]
    word: String,
}

#[derive(Args, Debug)]
struct KlArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
}

#[derive(Subcommand, Debug)]
enum CablingCmd {
    /// a_{k,l} in VP_{k+l}.
    A {
        #[command(flatten)]
        kl: KlArgs,
        /// Use the closed recursive formula instead of the degeneracy program.
        #[arg(long)]
        closed: bool,
    },
    /// b_{k,l} in VP_{k+l}.
    B {
        #[command(flatten)]
        kl: KlArgs,
        #[arg(long)]
        closed: bool,
    },
    /// c_{k,l} in VP_{k+l}.
    C {
        #[command(flatten)]
        kl: KlArgs,
    },
}

#[derive(Subcommand, Debug)]
enum BrunnianCmd {
    /// Sample symmetric commutators and test their faces.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, default_value_t = 4)]
        max_conj: usize,
    },
}

#[derive(Subcommand, Debug)]
enum MilnorCmd {
    /// Nondegenerate generators in dimension n.
    Basis {
        #[arg(long)]
        n: usize,
    },
    /// The image of a basis element in VP_{n+1}.
    Theta {
        #[arg(long)]
        n: usize,
        /// Wedge summand, 1 or 2.
        #[arg(long)]
        copy: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Args, Debug)]
struct MaxN {
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Simplicial identities on all generators.
    Simplicial(MaxN),
    /// Degeneracy images of the defining relators.
    RelatorImages(MaxN),
    /// Cabling closed forms and lambda reconstruction.
    Cabling(MaxN),
    /// Commuting rules among cabling elements.
    LemmaCommuting(MaxN),
    /// Cabled relators of VP_{n+1} are trivial.
    CabledRelators {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Simpliciality of the Milnor map.
    Theta(MaxN),
    /// The representation respects the VP and VB relators.
    RepWelldef(MaxN),
    /// Faces and abelianization of sampled symmetric commutators.
    BrunnianSamples {
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, default_value_t = 4)]
        max_conj: usize,
    },
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    format: Format,
    strict: bool,
    budget: Budget,
    traces: bool,
    timings: bool,
    started: Instant,
}

impl Ctx<'_> {
    fn json(&mut self) -> bool {
        self.format == Format::Json
    }

    fn emit_json(&mut self, v: &Value) -> Result<()> {
        let s = serde_json::to_string_pretty(v).map_err(|e| Error::Invalid(e.to_string()))?;
        writeln!(self.out, "{s}").map_err(io_err)
    }

    fn line(&mut self, s: impl AsRef<str>) -> Result<()> {
        writeln!(self.out, "{}", s.as_ref()).map_err(io_err)
    }

    fn word(&mut self, w: &Word) -> Result<i32> {
        if self.json() {
            self.emit_json(&serde_json::to_value(w).expect("words serialize"))?;
        } else {
            self.line(w.to_string())?;
        }
        Ok(0)
    }

    fn elapsed_ms(&self) -> f64 {
        self.started.elapsed().as_secs_f64() * 1e3
    }

    fn verdict_exit(&self, v: &Verdict) -> i32 {
        if v.is_nontrivial() {
            EXIT_REFUTED
        } else if v.is_unknown() && self.strict {
            EXIT_UNKNOWN
        } else {
            0
        }
    }

    fn suite(&mut self, report: &SuiteReport, extra: Option<(&str, Value)>) -> Result<i32> {
        let opts = ReportOptions {
            timings: self.timings,
            traces: self.traces,
        };
        if self.json() {
            let mut v = report.to_json(opts);
            let obj = v.as_object_mut().expect("reports are objects");
            if let Some((k, e)) = extra {
                obj.insert(k.into(), e);
            }
            if self.timings {
                obj.insert("wall_ms".into(), json!(self.elapsed_ms()));
            }
            self.emit_json(&v)?;
        } else {
            let text = report.render_text();
            self.out.write_all(text.as_bytes()).map_err(io_err)?;
            if self.timings {
                let ms = self.elapsed_ms();
                self.line(format!("wall time: {ms:.1} ms"))?;
            }
        }
        Ok(report.exit_status(self.strict))
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Invalid(format!("write failed: {e}"))
}

fn lambda_word(n: usize, text: &str) -> Result<Word> {
    vp_presentation(n)?;
    Word::parse(Alphabet::Lambda(n), text)
}

/// Human-readable one-line verdict, followed by trace steps if requested.
pub fn verdict_text(v: &Verdict, traces: bool) -> String {
    let mut s = match v {
        Verdict::ProvenTrivial { trace, .. } => format!("proven_trivial ({} relator insertions)", trace.len()),
        Verdict::ProvenNontrivial { oracle, witness, .. } => match witness {
            Witness::ExponentSum {
                generator,
                exponent_sum,
            } => format!(
                "proven_nontrivial by {oracle}: exponent sum of l[{},{}] is {exponent_sum}",
                generator[0], generator[1]
            ),
            Witness::BasisImage { basis, image } => {
                format!("proven_nontrivial by {oracle}: x[{basis}] maps to {image}")
            }
        },
        Verdict::Unknown { diagnostics, .. } => format!(
            "unknown: {} ({} states, shortest length {})",
            diagnostics.reason, diagnostics.states, diagnostics.shortest_len
        ),
    };
    if traces {
        if let Some(t) = v.trace() {
            for step in &t.steps {
                s.push_str(&format!(
                    "\n  at {}: insert ({}) ({}) ({})^-1",
                    step.position, step.conjugator, step.relator, step.conjugator
                ));
            }
        }
    }
    s
}

fn brunnian_json(r: &BrunnianReport, traces: bool) -> Value {
    let faces: Vec<Value> = r
        .faces
        .iter()
        .map(|(i, v)| {
            let mut j = verdict_json(v, traces);
            j.as_object_mut()
                .expect("verdict object")
                .insert("face".into(), json!(i));
            j
        })
        .collect();
    json!({
        "n": r.n,
        "labeling": r.labeling,
        "dimension": r.dimension,
        "word": r.word,
        "faces": faces,
        "overall": r.overall,
    })
}

fn status_text(s: &BrunnianStatus) -> String {
    match s {
        BrunnianStatus::Brunnian => "brunnian".into(),
        BrunnianStatus::NotBrunnian { witness_face } => format!("not brunnian (face d{witness_face} is nontrivial)"),
        BrunnianStatus::Unknown => "unknown".into(),
    }
}

fn milnor_json(e: &MilnorBasisElement) -> Result<Value> {
    Ok(json!({
        "n": e.n,
        "copy": e.copy.index(),
        "k": e.k,
        "sequence": e.sequence(),
        "program": e.program().to_string(),
        "theta": theta(e)?,
    }))
}

fn dispatch(cmd: Command, cx: &mut Ctx<'_>) -> Result<i32> {
    match cmd {
        Command::Present { n } => {
            let p = vp_presentation(n)?;
            if cx.json() {
                cx.emit_json(&serde_json::to_value(&p).expect("presentations serialize"))?;
            } else {
                cx.line(format!(
                    "VP_{n}: {} generators, {} relators",
                    p.generators.len(),
                    p.relators.len()
                ))?;
                let gens: Vec<String> = p.generators.iter().map(|[i, j]| format!("l[{i},{j}]")).collect();
                cx.line(format!("generators: {}", gens.join(" ")))?;
                for r in &p.relators {
                    cx.line(r.to_string())?;
                }
            }
            Ok(0)
        }
        Command::Face(a) => {
            let w = face(a.i, &lambda_word(a.n, &a.word)?)?;
            cx.word(&w)
        }
        Command::Degen(a) => {
            let w = degeneracy(a.i, &lambda_word(a.n, &a.word)?)?;
            cx.word(&w)
        }
        Command::Cabling { family } => {
            let w = match family {
                CablingCmd::A { kl, closed } => {
                    if closed {
                        a_closed(kl.k, kl.l)?
                    } else {
                        a_elem(kl.k, kl.l)?
                    }
                }
                CablingCmd::B { kl, closed } => {
                    if closed {
                        b_closed(kl.k, kl.l)?
                    } else {
                        b_elem(kl.k, kl.l)?
                    }
                }
                CablingCmd::C { kl } => c_elem(kl.k, kl.l)?,
            };
            cx.word(&w)
        }
        Command::GenRelations { n } => {
            let c = cabled_relators(n)?;
            if cx.json() {
                cx.emit_json(&serde_json::to_value(&c).expect("relators serialize"))?;
            } else {
                cx.line(format!(
                    "VP_{}: {} cabled relators ({} before deduplication)",
                    n + 1,
                    c.relators.len(),
                    c.raw_count
                ))?;
                if c.below_hypothesis {
                    cx.line("note: n < 4, the list need not present VP_{n+1}")?;
                }
                for r in &c.relators {
                    cx.line(r.to_string())?;
                }
            }
            Ok(0)
        }
        Command::Trivial { n, word } => {
            let v = triviality(&lambda_word(n, &word)?, cx.budget)?;
            verdict_out(cx, &v)
        }
        Command::Equal { n, lhs, rhs } => {
            let v = equal(&lambda_word(n, &lhs)?, &lambda_word(n, &rhs)?, cx.budget)?;
            verdict_out(cx, &v)
        }
        Command::Brunnian { n, word, sample } => match sample {
            Some(BrunnianCmd::Sample { n, seeds, max_conj }) => brunnian_samples(cx, &[n], seeds, max_conj),
            None => {
                let (Some(n), Some(word)) = (n, word) else {
                    return Err(Error::Invalid(
                        "brunnian needs --n and --word, or the sample subcommand".into(),
                    ));
                };
                let r = is_brunnian(&lambda_word(n, &word)?, cx.budget)?;
                if cx.json() {
                    cx.emit_json(&brunnian_json(&r, cx.traces))?;
                } else {
                    for (i, v) in &r.faces {
                        cx.line(format!("d{i}: {}", verdict_text(v, cx.traces)))?;
                    }
                    cx.line(status_text(&r.overall))?;
                }
                Ok(match r.overall {
                    BrunnianStatus::Brunnian => 0,
                    BrunnianStatus::NotBrunnian { .. } => EXIT_REFUTED,
                    BrunnianStatus::Unknown if cx.strict => EXIT_UNKNOWN,
                    BrunnianStatus::Unknown => 0,
                })
            }
        },
        Command::Milnor { cmd } => match cmd {
            MilnorCmd::Basis { n } => {
                let basis = milnor_basis(n)?;
                if cx.json() {
                    let items = basis.iter().map(milnor_json).collect::<Result<Vec<_>>>()?;
                    cx.emit_json(&json!({ "n": n, "basis": items }))?;
                } else {
                    for e in &basis {
                        let seq: String = e.sequence().iter().map(|d| d.to_string()).collect();
                        cx.line(format!(
                            "copy {} k={} {seq} {} -> {}",
                            e.copy.index(),
                            e.k,
                            e.program(),
                            theta(e)?
                        ))?;
                    }
                }
                Ok(0)
            }
            MilnorCmd::Theta { n, copy, k } => {
                let e = MilnorBasisElement::new(n, WedgeCopy::from_index(copy)?, k)?;
                cx.word(&theta(&e)?)
            }
        },
        Command::Verify { suite } => {
            let b = cx.budget;
            let report = match suite {
                VerifyCmd::Simplicial(m) => verify_simplicial_identities(m.max_n.unwrap_or(5), b)?,
                VerifyCmd::RelatorImages(m) => verify_relator_images(m.max_n.unwrap_or(4), &[MapKind::Degeneracy], b)?,
                VerifyCmd::Cabling(m) => verify_cabling(m.max_n.unwrap_or(6), b)?,
                VerifyCmd::LemmaCommuting(m) => verify_lemma_commuting(m.max_n.unwrap_or(6), b)?,
                VerifyCmd::CabledRelators { n } => verify_cabled_relators(n, b)?,
                VerifyCmd::Theta(m) => check_theta_simplicial(m.max_n.unwrap_or(4), b)?,
                VerifyCmd::RepWelldef(m) => verify_rep_welldef(m.max_n.unwrap_or(6))?,
                VerifyCmd::BrunnianSamples { max_n, seeds, max_conj } => {
                    let ns: Vec<usize> = (3..=max_n.unwrap_or(4)).collect();
                    return brunnian_samples(cx, &ns, seeds, max_conj);
                }
            };
            cx.suite(&report, None)
        }
    }
}

fn verdict_out(cx: &mut Ctx<'_>, v: &Verdict) -> Result<i32> {
    if cx.json() {
        let j = verdict_json(v, cx.traces);
        cx.emit_json(&j)?;
    } else {
        let s = verdict_text(v, cx.traces);
        cx.line(s)?;
    }
    Ok(cx.verdict_exit(v))
}

fn brunnian_samples(cx: &mut Ctx<'_>, ns: &[usize], seeds: u64, max_conj: usize) -> Result<i32> {
    let run = verify_brunnian_samples(ns, seeds, max_conj, cx.budget)?;
    let samples = serde_json::to_value(&run.samples).expect("samples serialize");
    if !cx.json() {
        for s in &run.samples {
            cx.line(format!(
                "VP{} seed {}: length {}, abelianization {}, {}",
                s.n,
                s.seed,
                s.length,
                if s.abelianization_zero { "zero" } else { "NONZERO" },
                status_text(&s.status)
            ))?;
        }
    }
    let code = cx.suite(&run.report, Some(("samples", samples)))?;
    Ok(if run.samples.iter().any(|s| !s.abelianization_zero) {
        EXIT_REFUTED
    } else {
        code
    })
}

/// Run `vpb` with `args` (including the program name), writing the document
/// to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let (code, sink): (i32, &mut dyn Write) = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, out),
                _ => (EXIT_USAGE, err),
            };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let g = cli.global;
    let mut budget = Budget::default();
    if let Some(s) = g.budget_states {
        budget.max_states = s;
    }
    if let Some(l) = g.budget_len {
        budget.max_len = l;
    }
    let mut cx = Ctx {
        out,
        format: g.report.unwrap_or(g.format),
        strict: g.strict,
        budget,
        traces: g.emit_trace,
        timings: g.timings,
        started: Instant::now(),
    };
    match dispatch(cli.command, &mut cx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DOMAIN
        }
    }
}
