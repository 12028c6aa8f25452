//! The `kas3` command line: argument parsing, dispatch, and the JSON payload
//! schema of every subcommand.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use kas3::algebra::{fold_enumerator, weight_enumerator, BinaryCode, Polynomial};
use kas3::complex::{
    check_edge_tripartition, cycle_space_weight_enumerator, find_edge_tripartition, ConfigDocument,
    EdgeTripartition,
};
use kas3::gadgets::{self, Certificate, Gadget};
use kas3::json::BigIntValue;
use kas3::kasteleyn_construct::{
    build_t, certify_trivial_signing, strong_matching_bijection_check, BijectionReport, SigningReport,
    SquareMatrix,
};
use kas3::lattice::{cubic_lattice, dimer_polynomial, embed_t, lattice_t};
use kas3::tensor3::{
    binet_cauchy_c, binet_cauchy_rhs, determinant3, kasteleyn_sign_via_k1, permanent2, permanent3, triadjacency,
    AnyTensor, EdgeSigning, JsonValue, RectMatrixTriple, Ring, Tensor3,
};
use kas3::{Error, Exec};

#[derive(Parser, Debug)]
#[command(name = "kas3", version, about = "Exact matchings, 3-matrix permanents and Kasteleyn constructions")]
pub struct Cli {
    /// Worker threads; 1 runs every kernel sequentially.
    #[arg(long, global = true, env = "KAS3_THREADS", default_value_t = 1)]
    pub threads: usize,

    /// Print the JSON payload instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a reference gadget.
    Gadget {
        kind: GadgetArg,
        /// Re-run and report the certification suite.
        #[arg(long)]
        certify: bool,
    },
    /// Weight-preserving reduction to a tripartite configuration.
    Reduce { config: PathBuf },
    /// Permanent of a 3-matrix.
    Per3 { tensor: PathBuf },
    /// Determinant of a 3-matrix.
    Det3 { tensor: PathBuf },
    /// Triadjacency 3-matrix of a tripartite weighted configuration.
    Triadj { config: PathBuf },
    /// Kasteleyn 3-matrix constructions.
    Kasteleyn {
        #[command(subcommand)]
        action: KasteleynCommand,
    },
    /// Sign a 3-matrix through Pfaffian signings of its projection graphs.
    SignK1 { tensor: PathBuf },
    /// Cubic a × b × c lattice.
    Lattice {
        a: usize,
        b: usize,
        c: usize,
        /// Dimer generating function, computed by two independent pipelines.
        #[arg(long, conflicts_with = "export_off")]
        dimers: bool,
        /// Write a 3D realization of T(Q) in OFF format.
        #[arg(long, value_name = "PATH")]
        export_off: Option<PathBuf>,
    },
    /// Binary linear codes.
    Code {
        #[command(subcommand)]
        action: CodeCommand,
    },
    /// Collapse exponents modulo e, halving the residues.
    Fold {
        poly: String,
        #[arg(long)]
        e: u64,
    },
    /// Weight enumerator of the cycle space of a configuration over GF(p).
    KernelWenum {
        config: PathBuf,
        #[arg(long)]
        p: u64,
    },
    /// Compare both sides of the 3-matrix Binet-Cauchy identity on random
    /// integer matrices.
    BcCheck {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum KasteleynCommand {
    /// Build T(G) from a square matrix.
    Build {
        matrix: PathBuf,
        /// Check the trivial signing and the strong-matching bijection.
        #[arg(long)]
        certify: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum CodeCommand {
    /// Weight enumerator.
    Wenum { code: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GadgetArg {
    Tunnel,
    S5,
    Mtt,
}

/// Outcome of one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: i32,
    /// Payload on success, `{"error": {...}}` otherwise.
    pub payload: Value,
    pub summary: String,
    pub json: bool,
}

impl CommandResult {
    /// Text for stdout and stderr.
    pub fn render(&self) -> (String, String) {
        let pretty = |v: &Value| serde_json::to_string_pretty(v).expect("json value") + "\n";
        match (self.status, self.json) {
            (0, true) => (pretty(&self.payload), String::new()),
            (0, false) => (self.summary.clone(), String::new()),
            _ => (String::new(), pretty(&self.payload)),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn status(&self) -> i32 {
        match self {
            Failure::Core(Error::Parse(_)) => 2,
            _ => 1,
        }
    }

    fn object(&self) -> Value {
        let (kind, message) = match self {
            Failure::Core(e) => (e.kind(), e.to_string()),
            Failure::Io(m) => ("io", m.clone()),
        };
        json!({ "error": { "kind": kind, "message": message } })
    }
}

type Outcome = std::result::Result<(Value, String), Failure>;

pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            return CommandResult {
                status: if informational { 0 } else { 2 },
                payload: json!({ "error": { "kind": "usage", "message": e.to_string() } }),
                summary: e.to_string(),
                json: false,
            };
        }
    };
    let json = cli.json;
    match with_threads(cli.threads, || dispatch(&cli.command, Exec::for_threads(cli.threads))) {
        Ok((payload, summary)) => CommandResult {
            status: 0,
            payload,
            summary,
            json,
        },
        Err(f) => CommandResult {
            status: f.status(),
            payload: f.object(),
            summary: String::new(),
            json,
        },
    }
}

#[cfg(feature = "parallel")]
fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_threads<T: Send>(_threads: usize, f: impl FnOnce() -> T + Send) -> T {
    f()
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> std::result::Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Core(Error::Parse(e.to_string())))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("payload serializes")
}

fn dispatch(cmd: &Command, exec: Exec) -> Outcome {
    match cmd {
        Command::Gadget { kind, certify } => gadget(*kind, *certify, exec),
        Command::Reduce { config } => reduce(config, exec),
        Command::Per3 { tensor } => per_det(tensor, true, exec),
        Command::Det3 { tensor } => per_det(tensor, false, exec),
        Command::Triadj { config } => triadj(config),
        Command::Kasteleyn {
            action: KasteleynCommand::Build { matrix, certify },
        } => kasteleyn_build(matrix, *certify, exec),
        Command::SignK1 { tensor } => sign_k1(tensor, exec),
        Command::Lattice {
            a,
            b,
            c,
            dimers,
            export_off,
        } => lattice(*a, *b, *c, *dimers, export_off.as_deref(), exec),
        Command::Code {
            action: CodeCommand::Wenum { code },
        } => code_wenum(code, exec),
        Command::Fold { poly, e } => fold(poly, *e),
        Command::KernelWenum { config, p } => kernel_wenum(config, *p, exec),
        Command::BcCheck { r, n, seed, trials } => bc_check(*r, *n, *seed, *trials),
    }
}

/// `gadget` payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GadgetPayload {
    pub kind: String,
    pub config: ConfigDocument,
    pub matchings: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
}

fn gadget(kind: GadgetArg, certify: bool, exec: Exec) -> Outcome {
    let g: Gadget = match kind {
        GadgetArg::Tunnel => gadgets::make_tunnel(exec)?,
        GadgetArg::S5 => gadgets::make_s5(exec)?,
        GadgetArg::Mtt => gadgets::make_matching_triangular_triangle(exec)?,
    };
    let cfg = g.config();
    let mut summary = format!(
        "{}: {} vertices, {} edges, {} triangles, edge classes {:?}\n",
        g.kind(),
        cfg.n_vertices(),
        cfg.n_edges(),
        cfg.n_triangles(),
        g.tripartition().sizes()
    );
    for end in g.ends() {
        summary += &format!("end {}: {}\n", end.label, end.edges.join(" "));
    }
    for (name, m) in g.named_matchings() {
        summary += &format!("{name}: {} triangles\n", m.len());
    }
    let certificate = certify.then(|| g.certify(exec));
    if let Some(c) = &certificate {
        for check in &c.checks {
            let tag = if check.passed { "ok" } else { "FAILED" };
            summary += &format!("[{tag}] {}: {}\n", check.name, check.detail);
        }
        summary += &format!(
            "certificate: {} ({} checks)\n",
            if c.all_passed() { "passed" } else { "failed" },
            c.checks.len()
        );
    }
    let payload = GadgetPayload {
        kind: g.kind().to_string(),
        config: g.to_document(),
        matchings: g
            .named_matchings()
            .iter()
            .map(|(k, m)| (k.clone(), m.triangles().map(str::to_string).collect()))
            .collect(),
        certificate,
    };
    if payload.certificate.as_ref().is_some_and(|c| !c.all_passed()) {
        return Err(Error::Certification(format!("{} failed its suite", g.kind())).into());
    }
    Ok((to_value(&payload), summary))
}

fn load_document(path: &Path) -> std::result::Result<ConfigDocument, Failure> {
    Ok(ConfigDocument::from_json(&read(path)?)?)
}

/// `reduce` payload: the reduced configuration with its weights and edge
/// classes, readable by `triadj`.
fn reduce(path: &Path, exec: Exec) -> Outcome {
    let doc = load_document(path)?;
    let cfg = doc.to_config()?;
    let r = gadgets::tripartite_reduction(&cfg, &doc.weighting(), exec)?;
    let out = ConfigDocument::from_config(&r.config)
        .with_weights(&r.weights)
        .with_edge_classes(&r.tripartition)
        .canonical();
    let summary = format!(
        "reduced {} triangles to {} triangles, {} edges, edge classes {:?}\n",
        cfg.n_triangles(),
        r.config.n_triangles(),
        r.config.n_edges(),
        r.tripartition.sizes()
    );
    Ok((to_value(&out), summary))
}

/// `per3` / `det3` payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValuePayload {
    /// An integer, or `{"poly": {...}}`.
    pub value: Value,
}

fn value_outcome<R: JsonValue + std::fmt::Display>(v: R) -> Outcome {
    let summary = format!("{v}\n");
    Ok((to_value(&ValuePayload { value: v.to_value() }), summary))
}

fn per_det(path: &Path, per: bool, exec: Exec) -> Outcome {
    fn go<R: Ring + JsonValue + std::fmt::Display>(t: &Tensor3<R>, per: bool, exec: Exec) -> Outcome {
        value_outcome(if per { permanent3(t, exec) } else { determinant3(t, exec) })
    }
    match AnyTensor::from_json(&read(path)?)? {
        AnyTensor::Int(t) => go(&t, per, exec),
        AnyTensor::Poly(t) => go(&t, per, exec),
    }
}

/// `triadj` payload: the tensor document, readable by `per3` and `det3`.
fn triadj(path: &Path) -> Outcome {
    let doc = load_document(path)?;
    let cfg = doc.to_config()?;
    let trip: EdgeTripartition = match &doc.edge_classes {
        Some(t) => {
            check_edge_tripartition(&cfg, t)?;
            t.clone()
        }
        None => find_edge_tripartition(&cfg, &EdgeTripartition::new())?
            .ok_or_else(|| Error::InvalidTripartition("the configuration has no edge tripartition".into()))?,
    };
    let t = triadjacency(&cfg, &trip, &doc.weighting())?;
    let summary = format!(
        "triadjacency {}×{}×{}, {} nonzero entries, edge classes {:?}\n",
        t.dims()[0],
        t.dims()[1],
        t.dims()[2],
        t.nnz(),
        trip.sizes()
    );
    Ok((t.to_json_value(), summary))
}

/// `kasteleyn build` payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KasteleynPayload {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<[usize; 2]>,
    pub config: ConfigDocument,
    pub tensor: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<KasteleynCertificate>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KasteleynCertificate {
    pub per2: BigIntValue,
    pub per3: BigIntValue,
    pub det3: BigIntValue,
    pub trivial_signing: SigningReport,
    pub bijection: BijectionReport,
    pub passed: bool,
}

fn kasteleyn_build(path: &Path, certify: bool, exec: Exec) -> Outcome {
    let m: SquareMatrix = parse_json(&read(path)?)?;
    let tc = build_t(&m)?;
    let mut summary = format!(
        "T(G): n = {}, |E| = {}, m = {}, {} triangles\n",
        m.n(),
        tc.edges().len(),
        tc.side(),
        tc.config().n_triangles()
    );
    let certificate = if certify {
        let per2 = permanent2(m.rows())?;
        let per3 = permanent3(tc.tensor(), exec);
        let det3 = determinant3(tc.tensor(), exec);
        let trivial_signing = certify_trivial_signing(&tc, exec)?;
        let bijection = strong_matching_bijection_check(&tc, exec)?;
        let passed = per2 == per3 && per3 == det3 && trivial_signing.passed && bijection.passed;
        summary += &format!("Per(M) = {per2}, Per(A) = {per3}, det(A) = {det3}\n");
        summary += &format!(
            "trivial signing: {} ({} contributing pairs)\n",
            if trivial_signing.passed { "passed" } else { "failed" },
            trivial_signing.contributing
        );
        summary += &format!(
            "strong matching bijection: {} ({})\n",
            if bijection.passed { "passed" } else { "failed" },
            bijection.detail
        );
        if !passed {
            return Err(Error::Certification(summary).into());
        }
        Some(KasteleynCertificate {
            per2: BigIntValue(per2),
            per3: BigIntValue(per3),
            det3: BigIntValue(det3),
            trivial_signing,
            bijection,
            passed,
        })
    } else {
        None
    };
    let payload = KasteleynPayload {
        n: m.n(),
        m: tc.side(),
        edges: tc.edges().iter().map(|&(a, b)| [a, b]).collect(),
        config: ConfigDocument::from_config(tc.config()).with_vertex_classes(tc.classes()),
        tensor: tc.tensor().to_json_value(),
        certificate,
    };
    Ok((to_value(&payload), summary))
}

/// `sign-k1` payload; `signing` is null when a projection graph has no
/// Pfaffian signing.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignK1Payload {
    pub signing: Option<SignK1Result>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignK1Result {
    pub signed: Value,
    pub s1: EdgeSigning,
    pub s2: EdgeSigning,
    pub value: Value,
}

fn sign_k1(path: &Path, exec: Exec) -> Outcome {
    fn go<R: Ring + JsonValue + std::fmt::Display>(t: &Tensor3<R>, exec: Exec) -> Outcome {
        let Some(k) = kasteleyn_sign_via_k1(t, exec)? else {
            return Ok((
                to_value(&SignK1Payload { signing: None }),
                "no Pfaffian signing of a projection graph\n".into(),
            ));
        };
        let summary = format!(
            "det(A') = Per(A) = {}; {} and {} negative projection edges\n",
            k.value,
            k.s1.negatives(),
            k.s2.negatives()
        );
        let payload = SignK1Payload {
            signing: Some(SignK1Result {
                signed: k.signed.to_json_value(),
                s1: k.s1,
                s2: k.s2,
                value: k.value.to_value(),
            }),
        };
        Ok((to_value(&payload), summary))
    }
    match AnyTensor::from_json(&read(path)?)? {
        AnyTensor::Int(t) => go(&t, exec),
        AnyTensor::Poly(t) => go(&t, exec),
    }
}

/// `lattice` payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticePayload {
    pub dims: [usize; 3],
    pub vertices: usize,
    pub edges: usize,
    /// Side of the tensor of `T(Q)`; absent when the parity classes differ.
    pub side: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimers: Option<DimerPayload>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub off: Option<OffPayload>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimerPayload {
    pub odd: bool,
    pub polynomial: Polynomial,
    pub count: BigIntValue,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OffPayload {
    pub path: String,
    pub vertices: usize,
    pub faces: usize,
}

fn lattice(a: usize, b: usize, c: usize, dimers: bool, off: Option<&Path>, exec: Exec) -> Outcome {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Dimension("lattice dimensions must be positive".into()).into());
    }
    let q = cubic_lattice(a, b, c);
    let side = (q.even().len() == q.odd().len()).then(|| 2 * q.even().len() + q.graph().n_edges());
    let mut payload = LatticePayload {
        dims: [a, b, c],
        vertices: q.n_vertices(),
        edges: q.graph().n_edges(),
        side,
        dimers: None,
        off: None,
    };
    let summary: String;
    if dimers {
        let d = dimer_polynomial(&q, None, exec)?;
        summary = if d.odd {
            format!("{}\nodd vertex count: no perfect matchings\n", d.polynomial)
        } else {
            format!("{}\n", d.polynomial)
        };
        payload.dimers = Some(DimerPayload {
            odd: d.odd,
            count: BigIntValue(d.count()),
            polynomial: d.polynomial,
        });
    } else if let Some(path) = off {
        let emb = embed_t(&q)?;
        std::fs::write(path, emb.to_off()).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
        summary = format!(
            "wrote {} vertices and {} faces to {}\n",
            emb.coords.len(),
            emb.config.n_triangles(),
            path.display()
        );
        payload.off = Some(OffPayload {
            path: path.display().to_string(),
            vertices: emb.coords.len(),
            faces: emb.config.n_triangles(),
        });
    } else {
        let head = format!("{a}×{b}×{c} lattice: {} vertices, {} edges", payload.vertices, payload.edges);
        summary = match side {
            Some(m) => format!("{head}, T(Q) has side {m} and {} triangles\n", lattice_t(&q)?.config().n_triangles()),
            None => format!("{head}, unbalanced parity classes\n"),
        };
    }
    Ok((to_value(&payload), summary))
}

/// Payload of the enumerator commands.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialPayload {
    pub polynomial: Polynomial,
    pub text: String,
}

fn poly_outcome(p: Polynomial) -> Outcome {
    let text = p.to_string();
    let summary = format!("{text}\n");
    Ok((to_value(&PolynomialPayload { polynomial: p, text }), summary))
}

fn code_wenum(path: &Path, exec: Exec) -> Outcome {
    let code: BinaryCode = parse_json(&read(path)?)?;
    poly_outcome(weight_enumerator(&code, exec)?)
}

fn fold(poly: &str, e: u64) -> Outcome {
    let p: Polynomial = poly.parse()?;
    poly_outcome(fold_enumerator(&p, e)?)
}

fn kernel_wenum(path: &Path, p: u64, exec: Exec) -> Outcome {
    let cfg = load_document(path)?.to_config()?;
    poly_outcome(cycle_space_weight_enumerator(&cfg, p, exec)?)
}

/// `bc-check` payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BcPayload {
    pub r: usize,
    pub n: usize,
    pub seed: u64,
    pub trials: Vec<BcTrial>,
    pub all_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BcTrial {
    pub matrices: RectMatrixTriple,
    pub det3_c: BigIntValue,
    pub rhs: BigIntValue,
    pub agree: bool,
}

/// Entries are drawn uniformly from `[-3, 3]`.
pub fn random_triple(rng: &mut ChaCha8Rng, r: usize, n: usize) -> kas3::Result<RectMatrixTriple> {
    let mut mat = || -> Vec<Vec<BigInt>> {
        (0..r)
            .map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect())
            .collect()
    };
    let (a1, a2, a3) = (mat(), mat(), mat());
    RectMatrixTriple::new(a1, a2, a3)
}

fn bc_check(r: usize, n: usize, seed: u64, trials: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    let mut summary = String::new();
    for i in 0..trials {
        let t = random_triple(&mut rng, r, n)?;
        // The exponential side is evaluated sequentially so the seed alone
        // fixes the output.
        let lhs = determinant3(&binet_cauchy_c(&t), Exec::Sequential);
        let rhs = binet_cauchy_rhs(&t)?;
        let agree = lhs == rhs;
        summary += &format!(
            "trial {i}: det(C) = {lhs}, Σ Per·det·det = {rhs}{}\n",
            if agree { "" } else { "  MISMATCH" }
        );
        out.push(BcTrial {
            matrices: t,
            det3_c: BigIntValue(lhs),
            rhs: BigIntValue(rhs),
            agree,
        });
    }
    let all_agree = out.iter().all(|t| t.agree);
    summary += &format!(
        "{} of {trials} trials agree (r = {r}, n = {n}, seed = {seed})\n",
        out.iter().filter(|t| t.agree).count()
    );
    if !all_agree {
        return Err(Error::Certification(summary).into());
    }
    let payload = BcPayload {
        r,
        n,
        seed,
        trials: out,
        all_agree,
    };
    Ok((to_value(&payload), summary))
}
