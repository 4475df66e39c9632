//! Command-line front end. Machine output is JSON on stdout; `--pretty`
//! adds a human summary on stderr.
//!
//! Exit codes: 0 success, 1 invariant violation or failed suite, 2 usage or
//! input error, 3 budget exceeded.

use crate::error::{Error, Result};
use crate::exactfield::{parse_scalar, FieldSpec};
use crate::forms::{TitsForm, DEFAULT_SEARCH_CAP};
use crate::geometry::{
    closure_membership, closure_system, ext_epi_check, homdeg_counterexample, maximality_check, orbit_dim,
};
use crate::oracle::{self, Budget, Predicate};
use crate::par::Exec;
use crate::quiver::{catalog, catalog_degenerate, BoundQuiver, CatalogId, DimVector};
use crate::rep::{end_dim, ext, hom_dim, matrices_from_json, tau, Representation};
use crate::semiinv::{differential, distinguished, evaluate, semi_invariant, weight_of};
use crate::suites;
use crate::tubes::Family;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::path::Path;
use std::sync::Arc;

#[derive(Parser, Debug)]
#[command(name = "qrt", about = "Exact representation theory of bound quivers", version)]
pub struct Cli {
    /// Ground field: `Q` or a prime `p`.
    #[arg(long, global = true, default_value = "Q")]
    field: String,
    /// Human-readable summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    /// Run enumerations on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct QuiverArg {
    /// Quiver JSON file, or a catalog id such as `canonical(2,2,2,2;2)`.
    #[arg(long)]
    quiver: String,
}

#[derive(Args, Debug)]
struct FamilyArg {
    /// Catalog id such as `kronecker` or `canonical(2,2,2)`.
    #[arg(long)]
    family: String,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct FormWhich {
    #[arg(long)]
    bilinear: bool,
    #[arg(long)]
    quadratic: bool,
    #[arg(long)]
    a: bool,
}

#[derive(Args, Debug)]
#[group(required = false, multiple = false)]
struct SemiWhich {
    #[arg(long, value_name = "M.json")]
    eval: Option<String>,
    #[arg(long)]
    weight: bool,
    /// JSON `{"m": <representation>, "z": {arrow: matrix}}`.
    #[arg(long, value_name = "Z.json")]
    differential: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct OrbitWhich {
    #[arg(long)]
    dim: bool,
    #[arg(long)]
    tangent: bool,
    #[arg(long)]
    maximal: bool,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ClosureWhich {
    #[arg(long)]
    emit: bool,
    #[arg(long, value_name = "N.json")]
    member: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and check a quiver JSON file.
    Validate { file: String },
    /// Tits form values.
    Form {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        d: String,
        #[arg(long)]
        e: Option<String>,
        #[command(flatten)]
        which: FormWhich,
    },
    /// `dim Hom(M, N)` (or `dim End(M)`).
    Hom {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: Option<String>,
    },
    /// `dim Ext^1` and `dim Ext^2` of `(M, N)` (or `(M, M)`).
    Ext {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: Option<String>,
    },
    /// Auslander-Reiten translate of `M`.
    Tau {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        m: String,
    },
    /// Singularity of a dimension vector.
    Singular {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        d: String,
    },
    /// Catalog bound quiver as JSON.
    Catalog {
        #[arg(long)]
        name: String,
        /// Parameters `lambda_4, ..` (comma separated) for canonical ids.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// A tube module `{"lambda": .., "i": .., "n": ..}`.
    Tube {
        #[command(flatten)]
        fam: FamilyArg,
        #[arg(long)]
        id: String,
    },
    /// Decomposition `d = p h + sum p_{lambda,i} e_{lambda,i}`.
    DecomposeVector {
        #[command(flatten)]
        fam: FamilyArg,
        #[arg(long)]
        d: String,
    },
    /// Semi-invariants `c^V` (or the distinguished ones) at `d`.
    Semiinv {
        #[command(flatten)]
        fam: FamilyArg,
        #[arg(long)]
        d: String,
        #[arg(long, value_name = "V.json")]
        v: Option<String>,
        #[command(flatten)]
        which: SemiWhich,
    },
    /// Orbit data of `M`.
    Orbit {
        #[command(flatten)]
        fam: FamilyArg,
        #[arg(long)]
        m: String,
        #[command(flatten)]
        which: OrbitWhich,
    },
    /// Equations of the closure of the maximal orbit of `M`.
    Closure {
        #[command(flatten)]
        fam: FamilyArg,
        #[arg(long)]
        m: String,
        #[command(flatten)]
        which: ClosureWhich,
    },
    /// Finite-field enumeration.
    Oracle {
        #[command(subcommand)]
        op: OracleOp,
    },
    /// Run the acceptance suites.
    Verify {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The singular vector `(3;2,2,2,2;1)` and the hom-order example.
    #[command(name = "paper-2222")]
    Paper2222,
}

#[derive(Args, Debug)]
struct OracleCommon {
    /// Quiver JSON file or catalog id.
    #[arg(long, default_value = "kronecker")]
    quiver: String,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    d: String,
    /// Allow catalog parameters that collapse modulo `q`.
    #[arg(long)]
    degenerate: bool,
    /// Point budget; overrides `QRT_BUDGET`.
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(Subcommand, Debug)]
enum OracleOp {
    /// Count points of `rep(d)(F_q)`.
    Count {
        #[command(flatten)]
        c: OracleCommon,
        /// Continue a partial count from this cursor.
        #[arg(long)]
        resume: Option<u128>,
    },
    /// Orbits with sizes and automorphism counts.
    Census {
        #[command(flatten)]
        c: OracleCommon,
    },
    /// Indecomposables up to isomorphism.
    Search {
        #[command(flatten)]
        c: OracleCommon,
        /// `any`, `p`, `r`, `q` or `periodic:N`.
        #[arg(long, default_value = "any")]
        predicate: String,
    },
}

/// Outcome of a command: JSON lines then a final JSON value for stdout, a
/// stderr summary and a success flag (false maps to exit code 1).
struct Output {
    lines: Vec<Value>,
    json: Value,
    summary: String,
    ok: bool,
}

impl Output {
    fn ok(json: Value) -> Self {
        let summary = serde_json::to_string_pretty(&json).unwrap_or_default();
        Output { lines: Vec::new(), json, summary, ok: true }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Invariant { .. } | Error::Inconclusive(_) => 1,
        Error::Budget(_) => 3,
        _ => 2,
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code, writing to the given streams.
pub fn run_with<W: std::io::Write, E: std::io::Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let pretty = cli.pretty;
    match execute(cli) {
        Ok(o) => {
            for l in &o.lines {
                let _ = writeln!(out, "{l}");
            }
            let _ = writeln!(out, "{}", o.json);
            if pretty {
                let _ = writeln!(err, "{}", o.summary);
            }
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(out, "{}", json!({"error": e.to_string(), "exit": exit_code(&e)}));
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout(), &mut std::io::stderr())
}

fn field_of(s: &str) -> Result<FieldSpec> {
    match s.trim() {
        "Q" | "q" | "QQ" => Ok(FieldSpec::Rationals),
        p => FieldSpec::prime(p.parse().map_err(|_| Error::Usage(format!("bad field {p:?}")))?),
    }
}

/// Inline JSON, or the contents of a file.
fn load_json(arg: &str) -> Result<Value> {
    if let Ok(v) = serde_json::from_str(arg) {
        return Ok(v);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

fn load_quiver(arg: &str, field: FieldSpec, degenerate: bool) -> Result<Arc<BoundQuiver>> {
    if Path::new(arg).is_file() {
        return Ok(Arc::new(BoundQuiver::from_json(&load_json(arg)?)?));
    }
    let id = CatalogId::parse(arg, field)?;
    Ok(if degenerate { catalog_degenerate(&id, field)?.0 } else { catalog(&id, field)?.0 })
}

fn load_family(arg: &str, field: FieldSpec) -> Result<Family> {
    Family::new(&CatalogId::parse(arg, field)?, field)
}

/// A `{vertex: n}` object or a list.
fn load_dims(bq: &BoundQuiver, arg: &str) -> Result<DimVector> {
    let v = load_json(arg)?;
    match &v {
        Value::Array(xs) => {
            let d: Vec<i64> = xs
                .iter()
                .map(|x| x.as_i64().filter(|n| *n >= 0).ok_or_else(|| Error::Parse("bad dimension entry".into())))
                .collect::<Result<_>>()?;
            if d.len() != bq.n_vertices() {
                return Err(Error::Parse(format!("{} entries for {} vertices", d.len(), bq.n_vertices())));
            }
            Ok(d)
        }
        _ => bq.dims_from_json(&v),
    }
}

fn load_rep(bq: &Arc<BoundQuiver>, arg: &str) -> Result<Representation> {
    Representation::from_json(bq.clone(), &load_json(arg)?)
}

fn mode(cli: &Cli) -> Exec {
    if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default_mode()
    }
}

fn execute(cli: Cli) -> Result<Output> {
    let field = field_of(&cli.field)?;
    let mode = mode(&cli);
    match cli.command {
        Command::Validate { file } => {
            let bq = BoundQuiver::from_json(&load_json(&file)?)?;
            Ok(Output::ok(json!({
                "valid": true,
                "field": bq.field().label(),
                "vertices": bq.n_vertices(),
                "arrows": bq.n_arrows(),
                "relations": bq.relations().len(),
                "minimal_relations": bq.check_minimal(),
            })))
        }
        Command::Form { q, d, e, which } => {
            let bq = load_quiver(&q.quiver, field, false)?;
            let form = TitsForm::new(&bq);
            let d = load_dims(&bq, &d)?;
            let value = if which.bilinear {
                let e = e.ok_or_else(|| Error::Usage("--bilinear needs --e".into()))?;
                form.bilinear(&d, &load_dims(&bq, &e)?)
            } else if which.quadratic {
                form.quadratic(&d)
            } else {
                form.a_const(&d)
            };
            Ok(Output::ok(json!(value)))
        }
        Command::Hom { q, m, n } => {
            let bq = load_quiver(&q.quiver, field, false)?;
            let m = load_rep(&bq, &m)?;
            Ok(Output::ok(match n {
                Some(n) => json!({"hom": hom_dim(&m, &load_rep(&bq, &n)?)?}),
                None => json!({"end": end_dim(&m)}),
            }))
        }
        Command::Ext { q, m, n } => {
            let bq = load_quiver(&q.quiver, field, false)?;
            let m = load_rep(&bq, &m)?;
            let n = match n {
                Some(n) => load_rep(&bq, &n)?,
                None => m.clone(),
            };
            let (e1, e2) = ext(&m, &n)?;
            Ok(Output::ok(json!({"ext1": e1, "ext2": e2})))
        }
        Command::Tau { q, m } => {
            let bq = load_quiver(&q.quiver, field, false)?;
            let t = tau(&load_rep(&bq, &m)?)?;
            Ok(Output::ok(json!({"tau": t.to_json()})))
        }
        Command::Singular { q, d } => {
            let bq = load_quiver(&q.quiver, field, false)?;
            let form = TitsForm::new(&bq);
            let d = load_dims(&bq, &d)?;
            let cert = form.classify_singular(&d, DEFAULT_SEARCH_CAP)?;
            Ok(Output::ok(json!({
                "singular": cert.singular,
                "witness": cert.witness.as_ref().map(|w| bq.dims_to_json(w)),
                "q": form.quadratic(&d),
                "pairing": cert.witness.as_ref().map(|w| form.bilinear(w, &d)),
                "candidates_checked": cert.candidates_checked.to_string(),
                "note": cert.note,
            })))
        }
        Command::Catalog { name, lambda } => {
            let mut id = CatalogId::parse(&name, field)?;
            if let Some(l) = lambda {
                match &mut id {
                    CatalogId::Canonical { lambdas, .. } => {
                        *lambdas = l.split(',').map(|x| parse_scalar(x.trim(), field)).collect::<Result<_>>()?;
                    }
                    _ => return Err(Error::Usage("--lambda applies to canonical algebras".into())),
                }
            }
            let (bq, _) = catalog(&id, field)?;
            Ok(Output::ok(json!({"id": id.to_string(), "quiver": bq.to_json()})))
        }
        Command::Tube { fam, id } => {
            let fam = load_family(&fam.family, field)?;
            let id = fam.id_from_json(&load_json(&id)?)?;
            let m = fam.tube_module(&id)?;
            Ok(Output::ok(json!({"id": fam.id_to_json(&id), "module": m.to_json()})))
        }
        Command::DecomposeVector { fam, d } => {
            let fam = load_family(&fam.family, field)?;
            let d = load_dims(&fam.bq, &d)?;
            Ok(Output::ok(match fam.decompose_vector(&d) {
                None => json!({"regular_cone": false}),
                Some(dec) => {
                    let coords: serde_json::Map<String, Value> = fam
                        .exceptional
                        .iter()
                        .zip(&dec.coords)
                        .map(|(t, c)| (t.label.clone(), json!(c)))
                        .collect();
                    json!({"regular_cone": true, "p": dec.p, "coords": coords, "h": fam.bq.dims_to_json(&fam.h)})
                }
            }))
        }
        Command::Semiinv { fam, d, v, which } => semiinv_cmd(field, &fam.family, &d, v, which),
        Command::Orbit { fam, m, which } => {
            let fam = load_family(&fam.family, field)?;
            let m = load_rep(&fam.bq, &m)?;
            Ok(Output::ok(if which.dim {
                json!({"orbit_dim": orbit_dim(&m)})
            } else if which.tangent {
                let r = ext_epi_check(&fam, &m)?;
                json!({"tangent": r.tangent, "orbit_dim": r.orbit, "ext1": r.ext1, "identity_holds": r.holds})
            } else {
                json!({"maximal": maximality_check(&fam, &m)?, "orbit_dim": orbit_dim(&m), "a": fam.form.a_const(&m.dim_vector())})
            }))
        }
        Command::Closure { fam, m, which } => {
            let fam = load_family(&fam.family, field)?;
            let m = load_rep(&fam.bq, &m)?;
            let sys = closure_system(&fam, &m)?;
            Ok(Output::ok(match which.member {
                None => sys.to_json(),
                Some(n) => {
                    let n = load_rep(&fam.bq, &n)?;
                    let values: Vec<String> = sys.evaluate(&n)?.iter().map(|s| s.render()).collect();
                    json!({"member": closure_membership(&sys, &n)?, "values": values})
                }
            }))
        }
        Command::Oracle { op } => oracle_cmd(op, mode),
        Command::Verify { suite, seed } => {
            let reports = match suite {
                Some(s) => vec![suites::run_suite(&s, seed, mode)
                    .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}; known: {}", suites::suite_names().join(", "))))?],
                None => suites::run_all(seed, mode),
            };
            let ok = reports.iter().all(|r| r.passed);
            let summary = reports.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n");
            Ok(Output {
                lines: Vec::new(),
                json: json!({"seed": seed, "passed": ok, "suites": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>()}),
                summary,
                ok,
            })
        }
        Command::Paper2222 => paper_2222(mode),
    }
}

fn semiinv_cmd(field: FieldSpec, family: &str, d: &str, v: Option<String>, which: SemiWhich) -> Result<Output> {
    let fam = load_family(family, field)?;
    let d = load_dims(&fam.bq, d)?;
    let m_for = |arg: &str| load_rep(&fam.bq, arg);
    match v {
        Some(v) => {
            let v = load_rep(&fam.bq, &v)?;
            let c = semi_invariant(&v, &d)?;
            if which.weight {
                return Ok(Output::ok(json!({"weight": weight_of(&v)?})));
            }
            if let Some(m) = which.eval {
                return Ok(Output::ok(json!({"value": evaluate(&c, &m_for(&m)?)?.render()})));
            }
            if let Some(z) = which.differential {
                let zv = load_json(&z)?;
                let m = Representation::from_json(fam.bq.clone(), zv.get("m").unwrap_or(&Value::Null))?;
                let zm = matrices_from_json(&fam.bq, m.dims(), zv.get("z").unwrap_or(&Value::Null))?;
                return Ok(Output::ok(json!({"differential": differential(&c, &m, &zm)?.render()})));
            }
            Ok(Output::ok(json!({"weight": c.weight, "rows": c.pres.p1(), "cols": c.pres.p0()})))
        }
        None => {
            if which.differential.is_some() {
                return Err(Error::Usage("--differential needs --v".into()));
            }
            let table = distinguished(&fam, &d, &fam.available_homogeneous(2))?;
            let m = which.eval.as_deref().map(m_for).transpose()?;
            let mut rows = Vec::new();
            for e in &table.entries {
                let mut row = json!({"lambda": e.label, "i": e.i, "n": e.n});
                if which.weight {
                    row["weight"] = json!(e.c.weight);
                }
                if let Some(m) = &m {
                    row["value"] = json!(evaluate(&e.c, m)?.render());
                }
                rows.push(row);
            }
            Ok(Output::ok(json!({"distinguished": rows})))
        }
    }
}

fn oracle_cmd(op: OracleOp, mode: Exec) -> Result<Output> {
    let common = match &op {
        OracleOp::Count { c, .. } | OracleOp::Census { c } | OracleOp::Search { c, .. } => c,
    };
    let budget = match common.budget {
        Some(b) => Budget { max_points: b },
        None => Budget::from_env()?,
    };
    let f = FieldSpec::prime(common.q as u64)?;
    let bq = load_quiver(&common.quiver, f, common.degenerate)?;
    let d = load_dims(&bq, &common.d)?;
    match &op {
        OracleOp::Count { resume, .. } => {
            let c = match *resume {
                Some(start) => oracle::count_points_from(&bq, &d, start, budget, mode)?,
                None => oracle::count_points(&bq, &d, budget, mode)?,
            };
            let complete = c.start == 0 && c.next.is_none();
            Ok(Output::ok(json!({
                "q": c.q, "ambient": c.ambient, "scanned": c.total.to_string(), "valid": c.valid.to_string(),
                "start": c.start.to_string(), "next": c.next.map(|n| n.to_string()), "complete": complete,
                "a": c.a_const,
                "ratio": complete.then_some(c.ratio),
                "within_heuristic_window": complete.then_some(c.within_window),
            })))
        }
        OracleOp::Census { .. } => {
            let census = oracle::orbit_census(&bq, &d, budget, mode)?;
            let ok = census.entries.iter().all(|e| e.stabilizer_ok);
            let orbits: Vec<Value> = census
                .entries
                .iter()
                .map(|e| {
                    json!({"size": e.orbit.size.to_string(), "aut": e.aut.to_string(), "stabilizer_ok": e.stabilizer_ok,
                        "representative": e.orbit.representative.to_json()})
                })
                .collect();
            Ok(Output {
                lines: orbits,
                json: json!({"orbits": census.entries.len(), "gl_order": census.gl_order.to_string(), "valid": census.valid.to_string(), "stabilizers_ok": ok}),
                summary: format!("{} orbits, {} points", census.entries.len(), census.valid),
                ok,
            })
        }
        OracleOp::Search { predicate, .. } => {
            let pred = Predicate::parse(predicate)?;
            let fam = match &pred {
                Predicate::Class(_) => Some(Family::new(&CatalogId::parse(&common.quiver, f)?, f)?),
                _ => None,
            };
            let r = oracle::search_indecomposable(&bq, &d, &pred, fam.as_ref(), budget, mode)?;
            Ok(Output::ok(json!({
                "found": r.found.iter().map(|m| m.to_json()).collect::<Vec<_>>(),
                "orbits": r.orbits, "valid": r.valid.to_string(), "searched": r.searched.to_string(),
            })))
        }
    }
}

fn paper_2222(mode: Exec) -> Result<Output> {
    let f = FieldSpec::Rationals;
    let fam = Family::new(&CatalogId::Canonical { arms: vec![2; 4], lambdas: vec![f.int(2)] }, f)?;
    let d: DimVector = vec![3, 2, 2, 2, 2, 1];
    let cert = fam.form.classify_singular(&d, DEFAULT_SEARCH_CAP)?;
    let witnesses: Vec<Value> = [vec![1i64; 6], vec![2, 1, 1, 1, 1, 0]]
        .iter()
        .map(|x| {
            json!({
                "x": fam.bq.dims_to_json(x),
                "q": fam.form.quadratic(x),
                "pairing": fam.form.bilinear(x, &d),
                "below_d": x.iter().zip(&d).all(|(a, b)| a <= b),
            })
        })
        .collect();
    let mut runs = Vec::new();
    let mut ok = cert.singular;
    for field in [FieldSpec::Prime(3), f] {
        let r = homdeg_counterexample(field, Budget::from_env()?, mode)?;
        ok &= r.holds;
        runs.push(r.to_json());
    }
    let json = json!({
        "d": fam.bq.dims_to_json(&d),
        "singular": cert.singular,
        "witnesses": witnesses,
        "a": fam.form.a_const(&d),
        "counterexample": runs,
    });
    let summary = format!("singular: {}; counterexample holds: {ok}", cert.singular);
    Ok(Output { lines: Vec::new(), json, summary, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let argv: Vec<String> = std::iter::once("qrt").chain(args.iter().copied()).map(String::from).collect();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(&argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn form_and_singular() {
        let (c, o) = call(&["form", "--quiver", "kronecker", "--d", r#"{"1":1,"2":1}"#, "--quadratic"]);
        assert_eq!((c, o.trim()), (0, "0"));
        let d = r#"{"sink":3,"a1":2,"b1":2,"c1":2,"d1":2,"source":1}"#;
        let (c, o) = call(&["singular", "--quiver", "canonical(2,2,2,2;2)", "--d", d]);
        assert_eq!(c, 0);
        let v: Value = serde_json::from_str(&o).unwrap();
        assert_eq!(v["singular"], true);
        assert_eq!(v["pairing"], -2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["form", "--quiver", "kronecker", "--d", "[1,1]"]).0, 2);
        assert_eq!(call(&["nonsense"]).0, 2);
        assert_eq!(call(&["verify", "--suite", "nope"]).0, 2);
        assert_eq!(call(&["oracle", "count", "--q", "3", "--d", "[9,9]"]).0, 3);
        assert_eq!(call(&["form", "--quiver", "kronecker", "--d", "[1,1]", "--a"]).1.trim(), "2");
    }

    #[test]
    fn closure_and_tube() {
        let (c, o) = call(&["tube", "--family", "kronecker", "--id", r#"{"lambda":"0","i":0,"n":1}"#]);
        assert_eq!(c, 0, "{o}");
        let r0: Value = serde_json::from_str(&o).unwrap();
        let m = r0["module"].to_string();
        assert!(call(&["orbit", "--family", "kronecker", "--m", &m, "--maximal"]).1.contains("true"));
        let (c, o) = call(&["closure", "--family", "kronecker", "--m", &m, "--emit"]);
        assert_eq!(c, 0, "{o}");
        assert!(o.contains("\"codim\":1"));
    }

    #[test]
    fn oracle_resume_and_determinism() {
        let a = call(&["oracle", "census", "--q", "2", "--d", "[1,1]"]);
        assert_eq!(a, call(&["oracle", "census", "--q", "2", "--d", "[1,1]", "--sequential"]));
        assert_eq!(a.0, 0);
        let (c, o) = call(&["oracle", "count", "--q", "2", "--d", "[2,2]", "--resume", "0", "--budget", "10"]);
        assert_eq!(c, 0);
        let v: Value = serde_json::from_str(&o).unwrap();
        assert_eq!(v["next"], "10");
        assert_eq!(v["complete"], false);
    }
}
