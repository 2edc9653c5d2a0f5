//! The `sgp` command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on input
//! errors. With `--json` every record is one JSON object per line, either
//! `{x, value, method}` or `{check, status, witness}`; integers are decimal
//! strings.

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::formulas::{mobius_unique_betti, ClosedEvaluator, ClosedForm, DenumerantBasis};
use crate::mobius::{chain_counts_up_to, mobius_oracle, mobius_range, mobius_recursive, Method, MobiusTable};
use crate::parse::{parse_integer, parse_lattice, parse_semigroup, parse_vector, parse_vector_list};
use crate::recognition::{classical_mobius, fragment_consistency_check, recognize, round_trip_check, FragmentFile};
use crate::semigroup::{degree_bound, detect_family, Family, Pointedness, Semigroup};
use crate::series::{
    ci_rational_form_check, hilbert_series, mobius_series, verify_chido, verify_genfunmob, IdentityReport,
};
use crate::vector::{IntVec, JsonInt};

pub const DEFAULT_BOUND: u64 = 100;
pub const MAX_DEGREE_VAR: &str = "SGP_MAX_DEGREE";

#[derive(Parser, Debug)]
#[command(name = "sgp", version, about = "Möbius functions of semigroup posets (Z^m, <=_S)")]
pub struct Cli {
    /// Emit JSON lines instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Möbius values on the degree slab, or at one point
    Mobius(MobiusArgs),
    /// Truncated Hilbert or Möbius series
    Series(SeriesArgs),
    /// Check an identity up to a degree bound
    Verify(VerifyArgs),
    /// Count representations in a tuple of vectors
    Denumerant(DenumerantArgs),
    /// Evaluate the closed form of the detected family
    Closed(ClosedArgs),
    /// Pointedness, grading, relations and family of a semigroup
    Analyze(AnalyzeArgs),
    /// Decide whether a relation lattice comes from a semigroup
    Recognize(RecognizeArgs),
    /// Möbius function of the divisor lattice
    ClassicalMobius(ClassicalArgs),
    /// Check an assignment of a poset fragment into a semigroup
    FragmentCheck(FragmentArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Oracle,
    Recursion,
    Series,
    Closed,
}

#[derive(Args, Debug)]
pub struct MobiusArgs {
    /// Semigroup, e.g. "1; 2|3" or "2; 1,0 | 0,1"
    #[arg(long)]
    pub gens: String,
    /// Degree bound (default 100)
    #[arg(long)]
    pub upto: Option<u64>,
    /// Single point, comma-separated
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<String>,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    Hilbert,
    Mobius,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    #[arg(long)]
    pub gens: String,
    #[arg(long)]
    pub upto: Option<u64>,
    #[arg(long, value_enum, default_value_t = SeriesKind::Hilbert)]
    pub kind: SeriesKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// `H_S · G_S = 1`
    Genfunmob,
    /// `Σ f_b μ(x - b) = 0` off the subset sums of --cs
    Chido,
    /// `H_S · Π(1 - t^a) = Π(1 - t^b)` for the Betti degrees
    Ciform,
    /// `Σ_{b ∈ [0,x]} μ(b) = δ_{x,0}`
    Convolution,
    /// Rebuild S from its relation lattice and compare
    Roundtrip,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub gens: String,
    #[arg(long, value_enum)]
    pub identity: Identity,
    #[arg(long)]
    pub upto: Option<u64>,
    /// Factor exponents for chido, separated by ';'
    #[arg(long, allow_hyphen_values = true)]
    pub cs: Option<String>,
    /// Betti degrees for ciform, separated by ';'
    #[arg(long, allow_hyphen_values = true)]
    pub betti: Option<String>,
}

#[derive(Args, Debug)]
pub struct DenumerantArgs {
    /// Basis tuple, separated by ';'
    #[arg(long)]
    pub basis: String,
    #[arg(long, allow_hyphen_values = true)]
    pub value: Option<String>,
    #[arg(long)]
    pub upto: Option<u64>,
}

#[derive(Args, Debug)]
pub struct ClosedArgs {
    #[arg(long)]
    pub gens: String,
    #[arg(long, allow_hyphen_values = true)]
    pub at: String,
    /// Unique Betti element, asserted by the caller
    #[arg(long, allow_hyphen_values = true)]
    pub betti: Option<String>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub gens: String,
}

#[derive(Args, Debug)]
pub struct RecognizeArgs {
    /// One generator row per line, or a JSON matrix
    #[arg(long)]
    pub lattice: PathBuf,
}

#[derive(Args, Debug)]
pub struct ClassicalArgs {
    #[arg(allow_hyphen_values = true)]
    pub a: String,
    #[arg(allow_hyphen_values = true)]
    pub b: String,
}

#[derive(Args, Debug)]
pub struct FragmentArgs {
    /// JSON {elements, covers, root, assignments}
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub gens: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueRecord {
    pub x: IntVec,
    pub value: JsonInt,
    pub method: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub check: String,
    pub status: String,
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Success,
    Failed,
}

struct Output<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn line(&mut self, text: impl std::fmt::Display) -> Result<()> {
        writeln!(self.out, "{text}").map_err(|e| Error::Io(e.to_string()))
    }

    fn object(&mut self, value: &impl Serialize) -> Result<()> {
        let text = serde_json::to_string(value).map_err(|e| Error::Io(e.to_string()))?;
        self.line(text)
    }

    fn value(&mut self, x: &IntVec, value: &BigInt, method: &str) -> Result<()> {
        if self.json {
            self.object(&ValueRecord { x: x.clone(), value: JsonInt(value.clone()), method: method.to_string() })
        } else {
            self.line(format_args!("{x}\t{value}\t{method}"))
        }
    }

    fn check(&mut self, name: &str, passed: bool, witness: Option<String>) -> Result<Outcome> {
        let status = if passed { "pass" } else { "fail" };
        if self.json {
            self.object(&CheckRecord { check: name.to_string(), status: status.to_string(), witness })?;
        } else {
            match witness {
                Some(w) => self.line(format_args!("{name}\t{status}\t{w}"))?,
                None => self.line(format_args!("{name}\t{status}"))?,
            }
        }
        Ok(if passed { Outcome::Success } else { Outcome::Failed })
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(Outcome::Success) => 0,
        Ok(Outcome::Failed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn bound(requested: Option<u64>, err: &mut dyn Write) -> Result<u64> {
    let d = requested.unwrap_or(DEFAULT_BOUND);
    let Ok(raw) = std::env::var(MAX_DEGREE_VAR) else {
        return Ok(d);
    };
    let cap: u64 = raw
        .trim()
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("{MAX_DEGREE_VAR}={raw:?} is not a degree")))?;
    if d > cap {
        let _ = writeln!(err, "warning: degree bound {d} capped at {cap} by {MAX_DEGREE_VAR}");
        return Ok(cap);
    }
    Ok(d)
}

fn point(s: &Semigroup, text: &str) -> Result<IntVec> {
    let x = parse_vector(text, 0)?;
    if x.dim() != s.dim() {
        return Err(Error::DimensionMismatch { expected: s.dim(), found: x.dim() });
    }
    Ok(x)
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome> {
    let mut o = Output { json: cli.json, out };
    match &cli.command {
        Command::Mobius(a) => mobius_cmd(a, &mut o, err),
        Command::Series(a) => series_cmd(a, &mut o, err),
        Command::Verify(a) => verify_cmd(a, &mut o, err),
        Command::Denumerant(a) => denumerant_cmd(a, &mut o, err),
        Command::Closed(a) => closed_cmd(a, &mut o, err),
        Command::Analyze(a) => analyze_cmd(a, &mut o),
        Command::Recognize(a) => recognize_cmd(a, &mut o),
        Command::ClassicalMobius(a) => classical_cmd(a, &mut o),
        Command::FragmentCheck(a) => fragment_cmd(a, &mut o),
    }
}

/// μ at a single point by the chosen route; points below degree 0 give 0.
fn mobius_at(s: &Semigroup, x: &IntVec, method: MethodArg) -> Result<(BigInt, Method)> {
    let deg = s.degree(x)?;
    let fallback = match method {
        MethodArg::Oracle => Method::Oracle,
        MethodArg::Series => Method::Series,
        _ => Method::Recursion,
    };
    if deg.is_negative() {
        return Ok((BigInt::zero(), fallback));
    }
    match method {
        MethodArg::Oracle => Ok((mobius_oracle(s, x)?, Method::Oracle)),
        MethodArg::Recursion => Ok((mobius_recursive(s, x, &mut MobiusTable::new(s))?, Method::Recursion)),
        MethodArg::Series => {
            Ok((mobius_series(s, degree_bound(&deg)?)?.coefficient(x), Method::Series))
        }
        MethodArg::Closed | MethodArg::Auto => match ClosedEvaluator::new(s).eval(x)? {
            ClosedForm::Value { value, family } => Ok((value, Method::Closed(family))),
            ClosedForm::Unsupported if method == MethodArg::Auto => {
                Ok((mobius_recursive(s, x, &mut MobiusTable::new(s))?, Method::Recursion))
            }
            ClosedForm::Unsupported => Err(Error::InvalidArgument(format!("no closed form is known for {s}"))),
        },
    }
}

/// μ on every element of the degree-`d` slab, ascending by degree then
/// lexicographically.
pub fn mobius_table(s: &Semigroup, d: u64, method: MethodArg) -> Result<Vec<(IntVec, BigInt, Method)>> {
    let slab = s.slab(d)?;
    let values: HashMap<IntVec, (BigInt, Method)> = match method {
        MethodArg::Oracle => chain_counts_up_to(s, d)?
            .into_iter()
            .map(|p| {
                let v = p.alternating_sum();
                (p.x, (v, Method::Oracle))
            })
            .collect(),
        MethodArg::Recursion => range_values(s, d)?,
        MethodArg::Series => {
            let g = mobius_series(s, d)?;
            slab.elements().iter().map(|x| (x.clone(), (g.coefficient(x), Method::Series))).collect()
        }
        MethodArg::Closed | MethodArg::Auto => {
            let eval = ClosedEvaluator::new(s);
            if eval.is_supported() {
                let mut map = HashMap::new();
                for x in slab.elements() {
                    if let ClosedForm::Value { value, family } = eval.eval(x)? {
                        map.insert(x.clone(), (value, Method::Closed(family)));
                    }
                }
                map
            } else if method == MethodArg::Auto {
                range_values(s, d)?
            } else {
                return Err(Error::InvalidArgument(format!("no closed form is known for {s}")));
            }
        }
    };
    Ok(slab
        .elements()
        .iter()
        .map(|x| {
            let (v, m) = values.get(x).cloned().unwrap_or((BigInt::zero(), Method::Recursion));
            (x.clone(), v, m)
        })
        .collect())
}

fn range_values(s: &Semigroup, d: u64) -> Result<HashMap<IntVec, (BigInt, Method)>> {
    Ok(mobius_range(s, d)?.sorted_entries()?.into_iter().map(|(x, v, m)| (x, (v, m))).collect())
}

fn mobius_cmd(a: &MobiusArgs, o: &mut Output, err: &mut dyn Write) -> Result<Outcome> {
    let s = parse_semigroup(&a.gens)?;
    s.grading()?;
    if let Some(at) = &a.at {
        let x = point(&s, at)?;
        let (value, method) = mobius_at(&s, &x, a.method)?;
        o.value(&x, &value, &method.to_string())?;
        return Ok(Outcome::Success);
    }
    let d = bound(a.upto, err)?;
    for (x, value, method) in mobius_table(&s, d, a.method)? {
        o.value(&x, &value, &method.to_string())?;
    }
    Ok(Outcome::Success)
}

fn series_cmd(a: &SeriesArgs, o: &mut Output, err: &mut dyn Write) -> Result<Outcome> {
    let s = parse_semigroup(&a.gens)?;
    let d = bound(a.upto, err)?;
    let (series, label) = match a.kind {
        SeriesKind::Hilbert => (hilbert_series(&s, d)?, "hilbert"),
        SeriesKind::Mobius => (mobius_series(&s, d)?, "series"),
    };
    for (x, c) in series.terms() {
        o.value(&x, &c, label)?;
    }
    Ok(Outcome::Success)
}

fn identity_witness(r: &IdentityReport) -> Option<String> {
    r.violations.first().map(|(x, v)| format!("x={x} value={v} ({} of {} checked)", r.violations.len(), r.checked))
}

/// Betti degrees of the detected family, for the rational-form check.
fn detected_betti_degrees(s: &Semigroup) -> Option<Vec<IntVec>> {
    match detect_family(s) {
        Family::FreeCommutative => Some(Vec::new()),
        Family::TwoGenNumerical { a, b } => Some(vec![IntVec::scalar(a * b)]),
        Family::UniqueBetti(ub) => Some(vec![IntVec::scalar(ub.betti); ub.factors.len() - 1]),
        Family::ThreeGenCi(ci) => Some(vec![IntVec::scalar(ci.betti_degrees.0), IntVec::scalar(ci.betti_degrees.1)]),
        Family::None => None,
    }
}

/// First `x` in the slab where `Σ_{b ∈ [0,x]} μ(b) ≠ δ_{x,0}`, with μ from
/// chain counting.
pub fn convolution_violation(s: &Semigroup, d: u64) -> Result<Option<(IntVec, BigInt)>> {
    let slab = s.slab(d)?;
    let mu: HashMap<IntVec, BigInt> =
        chain_counts_up_to(s, d)?.into_iter().map(|p| (p.x.clone(), p.alternating_sum())).collect();
    for x in slab.elements() {
        let sum: BigInt = slab.interval(x).iter().map(|b| mu.get(b).cloned().unwrap_or_default()).sum();
        let expected = if x.is_zero() { BigInt::one() } else { BigInt::zero() };
        if sum != expected {
            return Ok(Some((x.clone(), sum)));
        }
    }
    Ok(None)
}

fn verify_cmd(a: &VerifyArgs, o: &mut Output, err: &mut dyn Write) -> Result<Outcome> {
    let s = parse_semigroup(&a.gens)?;
    s.grading()?;
    let d = bound(a.upto, err)?;
    match a.identity {
        Identity::Genfunmob => {
            let r = verify_genfunmob(&s, d)?;
            o.check("genfunmob", r.passed(), identity_witness(&r))
        }
        Identity::Chido => {
            let cs = parse_vector_list(a.cs.as_deref().unwrap_or(""))?;
            let r = verify_chido(&s, &cs, d)?;
            o.check("chido", r.passed(), identity_witness(&r))
        }
        Identity::Ciform => {
            let betti = match &a.betti {
                Some(text) => parse_vector_list(text)?,
                None => detected_betti_degrees(&s).ok_or_else(|| {
                    Error::InvalidArgument(format!("no family detected for {s}; pass --betti"))
                })?,
            };
            let r = ci_rational_form_check(&s, &betti, d)?;
            o.check("ciform", r.passed(), identity_witness(&r))
        }
        Identity::Convolution => {
            let v = convolution_violation(&s, d)?;
            o.check("convolution", v.is_none(), v.map(|(x, sum)| format!("x={x} sum={sum}")))
        }
        Identity::Roundtrip => {
            let r = round_trip_check(&s, d)?;
            let witness = (!r.passed()).then(|| {
                r.mismatch.clone().unwrap_or_else(|| {
                    format!(
                        "counts_match={} mobius_match={} image_pointed={}",
                        r.counts_match, r.mobius_match, r.image_pointed
                    )
                })
            });
            o.check("roundtrip", r.passed(), witness)
        }
    }
}

fn denumerant_cmd(a: &DenumerantArgs, o: &mut Output, err: &mut dyn Write) -> Result<Outcome> {
    let basis = parse_vector_list(&a.basis)?;
    let dim = basis.first().map(IntVec::dim).ok_or_else(|| Error::InvalidArgument("empty basis".into()))?;
    let basis = DenumerantBasis::new(dim, basis)?;
    if let Some(text) = &a.value {
        let b = parse_vector(text, 0)?;
        let count = basis.denumerant(&b)?;
        if o.json {
            o.value(&b, &count, "denumerant")?;
        } else {
            o.line(count)?;
        }
        return Ok(Outcome::Success);
    }
    let d = bound(a.upto, err)?;
    for (b, count) in basis.denumerant_table(d)?.terms() {
        o.value(&b, &count, "denumerant")?;
    }
    Ok(Outcome::Success)
}

fn closed_cmd(a: &ClosedArgs, o: &mut Output, err: &mut dyn Write) -> Result<Outcome> {
    let s = parse_semigroup(&a.gens)?;
    s.grading()?;
    let x = point(&s, &a.at)?;
    if let Some(betti) = &a.betti {
        let betti = point(&s, betti)?;
        let value = mobius_unique_betti(&s, &betti, &x)?;
        o.value(&x, &value, &Method::Closed("unique-betti").to_string())?;
        return Ok(Outcome::Success);
    }
    let (value, method) = match mobius_at(&s, &x, MethodArg::Auto)? {
        (v, Method::Closed(f)) => (v, Method::Closed(f)),
        (v, m) => {
            let _ = writeln!(err, "note: no closed form for {s}; used {m}");
            (v, m)
        }
    };
    o.value(&x, &value, &method.to_string())?;
    Ok(Outcome::Success)
}

fn family_json(f: &Family) -> serde_json::Value {
    let s = |v: &BigInt| v.to_string();
    match f {
        Family::TwoGenNumerical { a, b } => json!({"name": f.name(), "a": s(a), "b": s(b)}),
        Family::UniqueBetti(ub) => json!({
            "name": f.name(),
            "factors": ub.factors.iter().map(s).collect::<Vec<_>>(),
            "betti": s(&ub.betti),
        }),
        Family::ThreeGenCi(ci) => json!({
            "name": f.name(),
            "generators": ci.generators.iter().map(s).collect::<Vec<_>>(),
            "d": s(&ci.d),
            "gammas": [s(&ci.gammas.0), s(&ci.gammas.1)],
            "betti_degrees": [s(&ci.betti_degrees.0), s(&ci.betti_degrees.1)],
        }),
        _ => json!({"name": f.name()}),
    }
}

fn family_text(f: &Family) -> String {
    match f {
        Family::FreeCommutative => "free (N^m)".into(),
        Family::TwoGenNumerical { a, b } => format!("two-generated numerical <{a},{b}>"),
        Family::UniqueBetti(ub) => {
            let factors: Vec<String> = ub.factors.iter().map(BigInt::to_string).collect();
            format!("unique Betti element {} (factors {})", ub.betti, factors.join(","))
        }
        Family::ThreeGenCi(ci) => format!(
            "three-generated complete intersection (a1={}, d={}, gammas {},{}, Betti degrees {},{})",
            ci.generators[0], ci.d, ci.gammas.0, ci.gammas.1, ci.betti_degrees.0, ci.betti_degrees.1
        ),
        Family::None => "none".into(),
    }
}

fn analyze_cmd(a: &AnalyzeArgs, o: &mut Output) -> Result<Outcome> {
    let s = parse_semigroup(&a.gens)?;
    let relations = s.lattice_of_relations().generators().row_vecs();
    let family = detect_family(&s);
    let (grading, witness) = match s.certify_pointed() {
        Pointedness::Pointed(g) => (Some(g.w().clone()), None),
        Pointedness::NotPointed(w) => (None, Some(IntVec::new(w.coefficients.clone()))),
    };
    if o.json {
        o.object(&json!({
            "semigroup": s.to_string(),
            "pointed": grading.is_some(),
            "grading": grading,
            "witness": witness,
            "rank": s.rank(),
            "relations": relations,
            "family": family_json(&family),
        }))?;
        return Ok(Outcome::Success);
    }
    o.line(format_args!("semigroup\t{s}"))?;
    match (&grading, &witness) {
        (Some(w), _) => o.line(format_args!("pointed\tyes, grading w = ({w})"))?,
        (_, Some(c)) => o.line(format_args!("pointed\tno, generators combine to 0 with coefficients ({c})"))?,
        _ => unreachable!("one of grading and witness is present"),
    }
    o.line(format_args!("rank\t{}", s.rank()))?;
    if relations.is_empty() {
        o.line("relations\tnone")?;
    }
    for r in &relations {
        o.line(format_args!("relation\t{r}"))?;
    }
    o.line(format_args!("family\t{}", family_text(&family)))?;
    Ok(Outcome::Success)
}

fn recognize_cmd(a: &RecognizeArgs, o: &mut Output) -> Result<Outcome> {
    let l = parse_lattice(&read_file(&a.lattice)?)?;
    let r = recognize(&l);
    let generators: Option<Vec<IntVec>> = r.semigroup.as_ref().map(|s| s.generators().to_vec());
    let map = r.generator_map.as_ref().map(|m| m.row_vecs());
    if o.json {
        o.object(&json!({
            "saturated": r.saturated,
            "elementary_divisors": r.elementary_divisors.iter().map(BigInt::to_string).collect::<Vec<_>>(),
            "ambient_dim": r.ambient_dim,
            "generators": generators,
            "generator_map": map,
            "pointed": r.pointed,
        }))?;
        return Ok(Outcome::Success);
    }
    o.line(format_args!("saturated\t{}", r.saturated))?;
    let divisors: Vec<String> = r.elementary_divisors.iter().map(BigInt::to_string).collect();
    o.line(format_args!("elementary divisors\t{}", divisors.join(",")))?;
    o.line(format_args!("dimension\t{}", r.ambient_dim))?;
    match &r.semigroup {
        Some(s) => o.line(format_args!("semigroup\t{s}"))?,
        None => o.line("semigroup\tnone")?,
    }
    if let Some(rows) = map {
        for row in rows {
            o.line(format_args!("map row\t{row}"))?;
        }
    }
    if let Some(p) = r.pointed {
        o.line(format_args!("pointed\t{}", if p { "yes" } else { "no" }))?;
    }
    Ok(Outcome::Success)
}

fn classical_cmd(a: &ClassicalArgs, o: &mut Output) -> Result<Outcome> {
    let x = parse_integer(&a.a, 0)?;
    let y = parse_integer(&a.b, 0)?;
    let value = classical_mobius(&x, &y)?;
    if o.json {
        o.value(&IntVec::new(vec![x, y]), &value, "divisibility")?;
    } else {
        o.line(value)?;
    }
    Ok(Outcome::Success)
}

fn fragment_cmd(a: &FragmentArgs, o: &mut Output) -> Result<Outcome> {
    let file = FragmentFile::from_json(&read_file(&a.file)?)?;
    let s = parse_semigroup(&a.gens)?;
    let assignments: HashMap<String, IntVec> = match file.assignments {
        Some(map) => map.into_iter().collect(),
        None => {
            let first = file.fragment.elements.first().cloned().unwrap_or_default();
            return Err(Error::IncompleteAssignment(first));
        }
    };
    let r = fragment_consistency_check(&file.fragment, &assignments, &s)?;
    if !o.json {
        o.line(format_args!("elements\t{}", r.elements))?;
        o.line(format_args!("pairs checked\t{}", r.pairs_checked))?;
        o.line(format_args!("root covers\t{} (generators {})", r.root_covers, r.generators))?;
    }
    let witness = if !r.root_is_zero {
        Some(format!("root {} is not mapped to 0", file.fragment.root))
    } else if let Some(e) = r.outside.first() {
        Some(format!("image of {e} is not in the semigroup"))
    } else {
        r.order_violations.first().map(|(u, v)| format!("order disagrees on ({u}, {v})"))
    };
    o.check("fragment", r.passed(), witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("sgp").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn mobius_table_two_three() {
        let (code, out, _) = run_capture(&["mobius", "--gens", "1; 2|3", "--upto", "7"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "0\t1\tclosed:deddens");
        assert_eq!(lines[1], "2\t-1\tclosed:deddens");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["verify", "--gens", "1; 2|3", "--identity", "genfunmob", "--upto", "50"]).0, 0);
        let (code, _, err) = run_capture(&["mobius", "--gens", "1; 2|x"]);
        assert_eq!(code, 2);
        assert!(err.contains("offset 5"));
        let (code, _, err) = run_capture(&["mobius", "--gens", "1; 1|-1"]);
        assert_eq!(code, 2);
        assert!(err.contains("(1, 1)"));
        assert_eq!(run_capture(&["verify", "--gens", "3|5|7", "--identity", "ciform", "--betti", "15;21"]).0, 1);
        assert_eq!(run_capture(&["nonsense"]).0, 2);
    }

    #[test]
    fn negative_points_are_zero() {
        let (code, out, _) = run_capture(&["mobius", "--gens", "1; 2|3", "--at", "-4", "--method", "oracle"]);
        assert_eq!(code, 0);
        assert_eq!(out, "-4\t0\toracle\n");
    }
}
