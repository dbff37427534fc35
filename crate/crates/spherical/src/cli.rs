//! Command-line front end. Tables are CSV, structured results JSON.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::charring::{decompose_into_irreducibles, exterior_power, symmetric_power, u_p_graded_pieces, GradedPiece, WeightFunction};
use crate::cones::{check_dual_cone, check_pos_u_intersection, check_pos_u_levi_clause, cone_member, langlands_retraction, retraction_report, ConeId};
use crate::error::{Error, Result};
use crate::global_sl2::{explain_conventions as global_conventions, Domain, GroupoidFunction, Sl2P1};
use crate::hecke::{gk_mu, nu, satake_report, Basis};
use crate::intertwining::{apply_r_inverse_k, apply_r_k, round_trip, SphericalFunction};
use crate::linalg::Q;
use crate::padic::{default_precision, mu_oracle, Group};
use crate::qfield::{parse_ratfunc, QValue, RatFunc};
use crate::root_datum::{resolve_datum, Coweight, Parabolic, RootDatum, PRESET_NAMES};
use crate::verify::{global_round_trip, run_all, Scope};
use crate::weyl_identities::{coset_reports, verify_vanishing_a, verify_vanishing_b};

const LOCAL_CONVENTIONS: &str = "\
Coweights are integer vectors in the basis of the datum config; parabolic indices on the command line are 1-based.
Heights: ht_P(x) = <2 rho_P, x>.  Indicator basis: e^x = q^(ht_P(x)/2) 1_x, so levels may be half-integral.
delta_P(x) = q^(-ht_P(x)).
R phi(m)    = delta_P(m)^-1 sum_x phi(x+m) mu(x)         (indicator coefficients of mu).
R^-1 phi(m) = sum_x delta_P(x+m) phi(x+m) nu(x).
For A1 and J empty: R 1_0 at -n alpha equals q^(-2n) mu(n alpha).
p-adic oracle: U upper unipotent, ord(u) read off the minors on the last columns; diag(t^-1, t) has ord -alpha.
";

#[derive(Parser, Debug)]
#[command(name = "spherical", version, about = "Exact spherical Hecke algebra computations")]
pub struct Cli {
    /// Value of q: `sym`, an integer, or `p/r`.
    #[arg(long, global = true, default_value = "sym")]
    pub q: String,
    /// Print the sign and normalization conventions in use.
    #[arg(long, global = true)]
    pub explain_conventions: bool,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct DatumArgs {
    #[arg(long, default_value = "A1")]
    pub datum: String,
    /// Comma-separated 1-based simple indices of the Levi.
    #[arg(long, default_value = "")]
    pub parabolic: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Gindikin–Karpelevich measure as a (coweight, coefficient) table.
    Gk(SeriesArgs),
    /// Convolution inverse of the Gindikin–Karpelevich measure.
    Nu(SeriesArgs),
    /// Character-ring identities for the measure and its inverse.
    SatakeCheck(SeriesArgs),
    /// Langlands retraction of a rational coweight.
    Retract {
        #[arg(long, default_value = "A1")]
        datum: String,
        /// Comma-separated rationals, e.g. `1/2,-1`.
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
    },
    /// Cone certificates, or membership of a point in a named cone.
    ConeCheck {
        #[command(flatten)]
        d: DatumArgs,
        /// pos_G, neg_pos_G, pos_U, neg_pos_U, dom_M, pos_GP, neg_pos_GP.
        #[arg(long)]
        cone: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Graded pieces of Lie(U_P) and their exterior/symmetric powers.
    Char {
        #[command(subcommand)]
        op: CharOp,
    },
    /// Apply the K-invariant intertwining operator or its inverse.
    Intertwine {
        #[command(flatten)]
        d: DatumArgs,
        #[arg(long, default_value_t = 6)]
        height: i64,
        /// JSON list of [coweight, value], e.g. `[[[0],"1"],[[1],"q"]]`.
        #[arg(long)]
        input: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Brute-force p-adic measure of {u : ord(u) = λ}.
    OracleMu {
        #[arg(long, default_value = "SL2")]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        coweight: String,
        #[arg(long)]
        precision: Option<i64>,
    },
    /// Alternating-sum vanishing identities and double-coset counts.
    WeylIdentities {
        #[arg(long, default_value = "A1")]
        datum: String,
    },
    /// The SL2 model over the projective line.
    GlobalSl2 {
        #[command(subcommand)]
        op: GlobalOp,
    },
    /// Run the acceptance suite and print a determinism manifest.
    VerifyAll {
        /// Restrict the suite to one datum.
        #[arg(long)]
        datum: Option<String>,
    },
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct SeriesArgs {
    #[command(flatten)]
    pub d: DatumArgs,
    #[arg(long, default_value_t = 6)]
    pub height: i64,
    /// `e` or `indicator`.
    #[arg(long, default_value = "indicator")]
    pub basis: String,
}

#[derive(Subcommand, Debug)]
pub enum CharOp {
    Pieces(DatumArgs),
    Lambda(PowerArgs),
    Sym(PowerArgs),
    /// Decompose an exterior or symmetric power into M-irreducibles.
    Decompose {
        #[command(flatten)]
        a: PowerArgs,
        /// `lambda` or `sym`.
        #[arg(long, default_value = "lambda")]
        kind: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PowerArgs {
    #[command(flatten)]
    pub d: DatumArgs,
    /// 1-based index of the graded piece.
    #[arg(long, default_value_t = 1)]
    pub piece: usize,
    #[arg(long, default_value_t = 1)]
    pub power: usize,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    #[arg(long, default_value_t = 6)]
    pub window: i64,
    /// JSON list of [point, value], e.g. `[[2,"1"],[0,"-q"]]`.
    #[arg(long, default_value = "[]")]
    pub input: String,
}

#[derive(Subcommand, Debug)]
pub enum GlobalOp {
    /// Constant term of a function on Bun_G.
    Ct {
        #[command(flatten)]
        g: GlobalArgs,
        /// Use the pull-push normalization.
        #[arg(long)]
        pullpush: bool,
    },
    /// Eisenstein series of a function on Bun_T.
    Eis {
        #[command(flatten)]
        g: GlobalArgs,
        /// Use the opposite Borel.
        #[arg(long)]
        minus: bool,
    },
    #[command(name = "L")]
    L(GlobalArgs),
    #[command(name = "Linv")]
    Linv(GlobalArgs),
    #[command(name = "B")]
    B {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
    },
    Roundtrip {
        #[arg(long, default_value_t = 5)]
        nmax: i64,
    },
}

/// What a run prints and how it exits.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn ok(stdout: String) -> Result<Outcome> {
    Ok(Outcome { stdout, code: 0 })
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    t.split(',').map(|x| x.trim().parse().map_err(|_| usage(format!("not an integer: `{x}`")))).collect()
}

pub fn parse_rationals(s: &str) -> Result<Vec<Q>> {
    let t = s.trim().trim_start_matches(['[', '(']).trim_end_matches([']', ')']);
    t.split(',').map(|x| x.trim().parse().map_err(|_| usage(format!("not a rational: `{x}`")))).collect()
}

fn parabolic(rd: &RootDatum, s: &str) -> Result<Parabolic> {
    let j: Vec<usize> = parse_ints(s)?.into_iter().map(|i| usize::try_from(i).map_err(|_| usage("negative index"))).collect::<Result<_>>()?;
    rd.parabolic_one_based(&j)
}

fn one_based(j: &[usize]) -> Vec<usize> {
    j.iter().map(|i| i + 1).collect()
}

fn value_from_json(v: &Value) -> Result<RatFunc> {
    match v {
        Value::String(s) => parse_ratfunc(s),
        Value::Number(n) => parse_ratfunc(&n.to_string()),
        _ => Err(usage(format!("value must be a string or number, got {v}"))),
    }
}

fn pairs(input: &str) -> Result<Vec<(Value, RatFunc)>> {
    let v: Vec<(Value, Value)> = serde_json::from_str(input).map_err(|e| usage(format!("input: {e}")))?;
    v.into_iter().map(|(k, x)| Ok((k, value_from_json(&x)?))).collect()
}

fn local_input(rd: &RootDatum, p: &Parabolic, input: &str) -> Result<SphericalFunction> {
    let terms = pairs(input)?
        .into_iter()
        .map(|(k, c)| {
            let x: Coweight = serde_json::from_value(k).map_err(|e| usage(format!("coweight: {e}")))?;
            if x.len() != rd.rank {
                return Err(usage(format!("coweight {x:?} should have {} coordinates", rd.rank)));
            }
            Ok((x, c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SphericalFunction::finite(p, terms))
}

fn global_input(domain: Domain, input: &str) -> Result<GroupoidFunction> {
    let terms = pairs(input)?
        .into_iter()
        .map(|(k, c)| Ok((k.as_i64().ok_or_else(|| usage(format!("point must be an integer, got {k}")))?, c)))
        .collect::<Result<Vec<_>>>()?;
    GroupoidFunction::finite(domain, terms)
}

fn show(c: &RatFunc, qv: &QValue) -> Result<String> {
    Ok(c.specialize(qv)?.to_string())
}

fn coweight_str(x: &[i64]) -> String {
    serde_json::to_string(x).expect("integers serialize")
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(vec![]);
    let err = |e: csv::Error| Error::Computation(format!("csv: {e}"));
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(&r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Computation(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn weights_json(f: &WeightFunction) -> Value {
    Value::Array(f.mult.iter().map(|(w, m)| json!([w, m])).collect())
}

fn piece_json(i: usize, g: &GradedPiece) -> Value {
    json!({ "piece": i + 1, "level": g.level.to_string(), "weights": g.weights })
}

fn pick_piece(rd: &RootDatum, p: &Parabolic, i: usize) -> Result<GradedPiece> {
    let mut pieces = u_p_graded_pieces(rd, p)?;
    if i == 0 || i > pieces.len() {
        return Err(usage(format!("piece must be in 1..={}", pieces.len())));
    }
    Ok(pieces.swap_remove(i - 1))
}

fn series_table(a: &SeriesArgs, qv: &QValue, inverse: bool) -> Result<String> {
    let rd = resolve_datum(&a.d.datum)?;
    let p = parabolic(&rd, &a.d.parabolic)?;
    let basis: Basis = a.basis.parse()?;
    let s = if inverse { nu(&rd, &p, a.height)? } else { gk_mu(&rd, &p, a.height)? };
    let rows = s.terms(basis).iter().map(|(x, c)| Ok(vec![coweight_str(x), show(c, qv)?])).collect::<Result<Vec<_>>>()?;
    csv_table(&["coweight", "coefficient"], rows)
}

fn function_json(f: &SphericalFunction, qv: &QValue) -> Result<Value> {
    let vals = f.values.iter().map(|(x, c)| Ok(json!([x, show(c, qv)?]))).collect::<Result<Vec<_>>>()?;
    Ok(json!({ "values": vals, "tops": f.tops, "window": f.window }))
}

fn global_table(f: &GroupoidFunction, lo: i64, hi: i64, qv: &QValue, col: &str) -> Result<String> {
    let rows = (lo..=hi).map(|x| Ok(vec![x.to_string(), show(&f.get(x)?, qv)?])).collect::<Result<Vec<_>>>()?;
    csv_table(&[col, "value"], rows)
}

fn global(op: &GlobalOp, qv: &QValue) -> Result<String> {
    let m = Sl2P1::new(qv.clone());
    match op {
        GlobalOp::Ct { g, pullpush } => {
            let f = global_input(Domain::BunG, &g.input)?;
            let top = f.max_support().unwrap_or(0);
            let range = Some((-g.window, top));
            let ct = if *pullpush { m.ct_b_pullpush(&f, range)? } else { m.ct_b(&f, range)? };
            global_table(&ct, -g.window, top, qv, "degree")
        }
        GlobalOp::Eis { g, minus } => {
            let phi = global_input(Domain::BunT, &g.input)?;
            let e = if *minus { m.eis_bminus(&phi, Some(g.window))? } else { m.eis_b(&phi, Some(g.window))? };
            global_table(&e, 0, g.window, qv, "n")
        }
        GlobalOp::L(g) => {
            let f = global_input(Domain::BunG, &g.input)?;
            global_table(&m.op_l(&f, g.window)?, 0, g.window, qv, "n")
        }
        GlobalOp::Linv(g) => {
            let f = m.certify_finite(&global_input(Domain::BunG, &g.input)?)?;
            let h = m.op_l_inverse(&f)?;
            let top = h.max_support().unwrap_or(0).max(g.window);
            global_table(&h, 0, top, qv, "n")
        }
        GlobalOp::B { f1, f2 } => {
            let f1 = global_input(Domain::BunG, f1)?;
            let f2 = global_input(Domain::BunG, f2)?;
            let b12 = m.form_b(&f1, &f2)?;
            let b21 = m.form_b(&f2, &f1)?;
            let w = f2.max_support().unwrap_or(0).max(0);
            let via_l = m.naive_pairing(&m.op_l(&f1, w)?, &f2)?;
            Ok(pretty(&json!({
                "B": show(&b12, qv)?,
                "B_swapped": show(&b21, qv)?,
                "B_naive_L": show(&via_l, qv)?,
                "B_naive": show(&m.naive_pairing(&f1, &f2)?, qv)?,
                "symmetric": b12 == b21,
                "equals_naive_of_L": b12 == via_l,
                "signs": Sl2P1::form_b_signs(),
            })))
        }
        GlobalOp::Roundtrip { nmax } => {
            let pass = global_round_trip(&m, *nmax)?;
            Ok(pretty(&json!({ "q": qv.to_string(), "nmax": nmax, "pass": pass })))
        }
    }
}

#[derive(Serialize)]
struct DatumHash {
    name: String,
    hash: String,
}

#[derive(Serialize)]
struct Manifest {
    subcommand: &'static str,
    flags: Value,
    data: Vec<DatumHash>,
    version: &'static str,
    checks: Vec<crate::verify::Criterion>,
    output_sha256: String,
    pass: bool,
}

fn verify_all(datum: &Option<String>, qv: &QValue) -> Result<Outcome> {
    let (scope, names) = match datum {
        None => (Scope::all(), PRESET_NAMES.iter().map(|s| s.to_string()).collect::<Vec<_>>()),
        Some(d) => {
            let rd = resolve_datum(d)?;
            (Scope { data: Some(vec![rd.config.name.clone()]) }, vec![d.clone()])
        }
    };
    let data = names.iter().map(|n| Ok(DatumHash { name: n.clone(), hash: resolve_datum(n)?.hash() })).collect::<Result<Vec<_>>>()?;
    let checks = run_all(&scope);
    let body = serde_json::to_string(&checks).expect("serializable");
    let pass = checks.iter().all(|c| c.pass);
    let m = Manifest {
        subcommand: "verify-all",
        flags: json!({ "datum": datum, "q": qv.to_string() }),
        data,
        version: env!("CARGO_PKG_VERSION"),
        checks,
        output_sha256: format!("{:x}", Sha256::digest(body.as_bytes())),
        pass,
    };
    Ok(Outcome { stdout: pretty(&m), code: if pass { 0 } else { 1 } })
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let qv = QValue::parse(&cli.q)?;
    if cli.explain_conventions {
        return ok(format!("{LOCAL_CONVENTIONS}\n{}", global_conventions()));
    }
    let Some(cmd) = &cli.command else {
        return Err(usage("a subcommand is required (try --help)"));
    };
    match cmd {
        Command::Gk(a) => ok(series_table(a, &qv, false)?),
        Command::Nu(a) => ok(series_table(a, &qv, true)?),
        Command::SatakeCheck(a) => {
            let rd = resolve_datum(&a.d.datum)?;
            let p = parabolic(&rd, &a.d.parabolic)?;
            let r = satake_report(&rd, &p, a.height)?;
            let code = if r.all() { 0 } else { 1 };
            Ok(Outcome { stdout: pretty(&json!({ "parabolic": one_based(&p.j), "height": a.height, "report": r, "pass": r.all() })), code })
        }
        Command::Retract { datum, coweight } => {
            let rd = resolve_datum(datum)?;
            let lambda = parse_rationals(coweight)?;
            if lambda.len() != rd.rank {
                return Err(usage(format!("coweight should have {} coordinates", rd.rank)));
            }
            let (l, j) = langlands_retraction(&rd, &lambda)?;
            let r = retraction_report(&rd, &lambda)?;
            let strs = |v: &[Q]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
            ok(pretty(&json!({
                "coweight": strs(&lambda),
                "retraction": strs(&l),
                "J": one_based(&j),
                "dominant": r.dominant,
                "majorizes": r.majorizes,
                "minimal": r.minimal,
                "idempotent": r.idempotent,
            })))
        }
        Command::ConeCheck { d, cone, point } => {
            let rd = resolve_datum(&d.datum)?;
            match (cone, point) {
                (Some(c), Some(x)) => {
                    let p = parabolic(&rd, &d.parabolic)?;
                    let id = ConeId::parse(c, p.j.clone())?;
                    let x = parse_rationals(x)?;
                    if x.len() != rd.rank {
                        return Err(usage(format!("point should have {} coordinates", rd.rank)));
                    }
                    ok(pretty(&json!({ "cone": id.to_string(), "member": cone_member(&rd, &id, &x)? })))
                }
                (None, None) => {
                    let js = if d.parabolic.is_empty() { rd.all_parabolic_subsets() } else { vec![parabolic(&rd, &d.parabolic)?.j] };
                    let mut rows = vec![];
                    let mut all = true;
                    for j in js {
                        let a = check_pos_u_intersection(&rd, &j)?;
                        let b = check_pos_u_levi_clause(&rd, &j)?;
                        let c = check_dual_cone(&rd, &j)?;
                        all &= a && b && c;
                        rows.push(json!({ "J": one_based(&j), "pos_u_intersection": a, "pos_u_levi_clause": b, "dual_cone": c }));
                    }
                    Ok(Outcome { stdout: pretty(&json!({ "datum": rd.config.name, "checks": rows, "pass": all })), code: if all { 0 } else { 1 } })
                }
                _ => Err(usage("--cone and --point go together")),
            }
        }
        Command::Char { op } => match op {
            CharOp::Pieces(d) => {
                let rd = resolve_datum(&d.datum)?;
                let p = parabolic(&rd, &d.parabolic)?;
                let v: Vec<Value> = u_p_graded_pieces(&rd, &p)?.iter().enumerate().map(|(i, g)| piece_json(i, g)).collect();
                ok(pretty(&v))
            }
            CharOp::Lambda(a) | CharOp::Sym(a) => {
                let rd = resolve_datum(&a.d.datum)?;
                let p = parabolic(&rd, &a.d.parabolic)?;
                let g = pick_piece(&rd, &p, a.piece)?;
                let f = match op {
                    CharOp::Lambda(_) => exterior_power(&g, a.power, rd.rank),
                    _ => symmetric_power(&g, a.power, rd.rank),
                };
                ok(pretty(&json!({ "piece": a.piece, "level": g.level.to_string(), "power": a.power, "weights": weights_json(&f) })))
            }
            CharOp::Decompose { a, kind } => {
                let rd = resolve_datum(&a.d.datum)?;
                let p = parabolic(&rd, &a.d.parabolic)?;
                let g = pick_piece(&rd, &p, a.piece)?;
                let f = match kind.as_str() {
                    "lambda" => exterior_power(&g, a.power, rd.rank),
                    "sym" => symmetric_power(&g, a.power, rd.rank),
                    _ => return Err(usage(format!("unknown kind `{kind}` (expected lambda or sym)"))),
                };
                let d = decompose_into_irreducibles(&rd, &p, &f)?;
                ok(pretty(&json!({ "highest_weights": d.terms, "virtual": d.is_virtual })))
            }
        },
        Command::Intertwine { d, height, input, inverse } => {
            let rd = resolve_datum(&d.datum)?;
            let p = parabolic(&rd, &d.parabolic)?;
            let phi = local_input(&rd, &p, input)?;
            let mu = gk_mu(&rd, &p, *height)?;
            let nv = nu(&rd, &p, *height)?;
            let out = if *inverse { apply_r_inverse_k(&rd, &p, &nv, &phi, None)? } else { apply_r_k(&rd, &p, &mu, &phi, None)? };
            let rt = round_trip(&rd, &p, &mu, &nv, &phi)?;
            let pass = rt.inverse_after_r && rt.r_after_inverse;
            Ok(Outcome {
                stdout: pretty(&json!({
                    "operator": if *inverse { "R_inverse" } else { "R" },
                    "parabolic": one_based(&p.j),
                    "output": function_json(&out, &qv)?,
                    "round_trip": rt,
                })),
                code: if pass { 0 } else { 1 },
            })
        }
        Command::OracleMu { group, coweight, precision } => {
            let g: Group = group.parse()?;
            let q = qv.as_int().ok_or_else(|| usage("oracle-mu needs an integer prime --q"))?;
            let lambda = parse_ints(coweight)?;
            let window: i64 = lambda.iter().sum::<i64>().max(0);
            let n = precision.unwrap_or_else(|| default_precision(g, window));
            let m = mu_oracle(g, &lambda, q, n)?;
            let rd = resolve_datum(g.datum_name())?;
            let b = rd.parabolic(&[])?;
            let want = if lambda.iter().all(|&c| c >= 0) {
                let mu = gk_mu(&rd, &b, 2 * window)?;
                mu.indicator_coeff(&lambda).eval(&num_rational::BigRational::from_integer(q.into()))?
            } else {
                Default::default()
            };
            let agree = m == want;
            Ok(Outcome {
                stdout: pretty(&json!({
                    "group": group, "coweight": lambda, "q": q, "precision": n,
                    "measure": m.to_string(), "gk": want.to_string(), "agree": agree,
                })),
                code: if agree { 0 } else { 1 },
            })
        }
        Command::WeylIdentities { datum } => {
            let rd = resolve_datum(datum)?;
            let a = verify_vanishing_a(&rd)?;
            let b = verify_vanishing_b(&rd)?;
            let cosets = coset_reports(&rd)?;
            let bad: Vec<_> = cosets.iter().filter(|c| !(c.representatives && c.conditions && c.w_bullet == c.double_cosets)).collect();
            let mut rows = vec![];
            for r in [&a, &b] {
                rows.push(vec![r.identity.clone(), r.checked.to_string(), r.nonvanishing.to_string(), r.pass().to_string(), r.failures.join(" | ")]);
            }
            let witnesses = bad.iter().map(|c| format!("J={:?} J'={:?}", one_based(&c.j), one_based(&c.jp))).collect::<Vec<_>>().join(" | ");
            rows.push(vec!["double_cosets".into(), cosets.len().to_string(), String::new(), bad.is_empty().to_string(), witnesses]);
            let pass = a.pass() && b.pass() && bad.is_empty();
            Ok(Outcome { stdout: csv_table(&["identity", "checked", "nonvanishing", "pass", "witnesses"], rows)?, code: if pass { 0 } else { 1 } })
        }
        Command::GlobalSl2 { op } => ok(global(op, &qv)?),
        Command::VerifyAll { datum } => verify_all(datum, &qv),
    }
}

/// Parse `argv`, run, and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(o) => {
            print!("{}", o.stdout);
            o.code
        }
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": e.to_string(), "kind": format!("{e:?}").split('(').next().unwrap_or("") }));
            e.exit_code()
        }
    }
}
