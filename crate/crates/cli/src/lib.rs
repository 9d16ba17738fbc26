//! `quadloc` command line. [`run`] takes the argument vector and returns the
//! exit code with the report, so the binary and the tests share one path.
//!
//! Exit codes: 0 verified or found, 1 property fails or NONE, 2 malformed
//! input, 3 node budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use quadloc::constructions::{
    build_g0, build_g0_prime, build_g1, build_g1_prime, build_high_genus_family, build_k4_projective,
    build_u_embedding, DiagonalQuad, HexQuad,
};
use quadloc::localcolor::{local_chromatic_number, local_coloring_violation, search_local_coloring, Coloring, SearchOutcome};
use quadloc::quadform::{
    classify_phi_type, cycle_parity_profile, excess_report, identify_face_diagonal, phi3_certificate, quad_parity,
    refine_3x3, crosscap_hexagon,
};
use quadloc::semifree::{kneser_graph, label_group, parse_word_file, verify_table, walk_label, CommutationGraph, GroupWord};
use quadloc::surface::{classify_surface, parse_embedding, write_embedding, EmbeddedGraph};
use quadloc::trisub::{face_subdivision, fisk_check, tq_lower_bound_check, Triangulation};
use quadloc::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "quadloc", about = "Odd quadrangulations, local colorings and semi-free group checks")]
struct Cli {
    /// Embedded graph file (rotation format, optional inline coloring).
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// Where to write graphs and certificates instead of standard output.
    #[arg(short, long, global = true)]
    out: Option<PathBuf>,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one of the named constructions.
    Build {
        #[command(subcommand)]
        what: Build,
    },
    /// Check a property of the input graph.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Phi type of the signature, with a certificate.
    Classify {
        #[command(subcommand)]
        what: Classify,
    },
    /// Exhaustive search for a local coloring.
    Search {
        #[command(subcommand)]
        what: Search,
    },
    /// Local chromatic number of the input graph.
    Psi,
    /// Semi-free group words, the two tables and walk labels.
    Group {
        #[command(subcommand)]
        what: Group,
    },
    /// Crosscap, 3x3 refinement and diagonal identification.
    Surgery {
        #[command(subcommand)]
        what: Surgery,
    },
    /// Triangulations: subdivision, the two-odd-vertex check, psi(T(Q)).
    Tri {
        #[command(subcommand)]
        what: Tri,
    },
}

#[derive(Debug, Subcommand)]
enum Build {
    G0,
    G1,
    G0p,
    G1p,
    K4p,
    /// Kneser-type graph U(m, r).
    U { m: usize, r: usize },
    /// `k` crosscap steps on `g0p` or `g1p`.
    Family { base: String, k: usize },
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Euler characteristic, orientability and genus.
    Surface,
    QuadParity {
        /// Fail unless the parity is this one.
        #[arg(long)]
        expect: Option<String>,
    },
    /// Excess of the auxiliary graph against 4(g - 2).
    Excess,
    /// The inline coloring is a local r-coloring.
    LocalColoring { r: usize },
    /// Negative-edge certificate: lines `edge <id>` or `pair <a> <b>`.
    Phi3Cert { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum Classify {
    PhiType,
}

#[derive(Debug, Subcommand)]
enum Search {
    /// Local r-coloring with colors 1..=m, or a NONE certificate.
    LocalColoring { r: usize, m: usize },
}

#[derive(Debug, Subcommand)]
enum Group {
    /// Reduce each word of a word file, or one inline word.
    Reduce(WordArgs),
    /// Exit 0 iff every word is the identity.
    IsIdentity(WordArgs),
    /// Verify table 1 or 2.
    Table { which: u8 },
    /// Label of a closed walk given by comma-separated colors.
    WalkLabel {
        colors: String,
        #[arg(long)]
        kneser: Option<usize>,
    },
}

#[derive(Debug, clap::Args)]
struct WordArgs {
    /// Word file with a `kneser m 2` header.
    file: Option<PathBuf>,
    /// Inline word over KG(M, 2), e.g. `--kneser 5 --word "1.2 -3.4"`.
    #[arg(long, requires = "word")]
    kneser: Option<usize>,
    #[arg(long, requires = "kneser")]
    word: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Surgery {
    Crosscap { edge: usize },
    Refine3,
    DiagIdentify { face: usize },
}

#[derive(Debug, Subcommand)]
enum Tri {
    /// Face subdivision; hubs get one fresh color if the input is colored.
    Subdivide,
    /// Parity table and windings for a triangulation with two odd vertices.
    FiskCheck,
    /// Subdivide a quadrangulation and decide whether it has a local 4-coloring.
    TqBound,
}

struct Ctx {
    input: Option<PathBuf>,
    out: Option<PathBuf>,
    budget: Option<u64>,
    report: String,
}

/// Failure that maps onto an exit code.
struct Exit(i32, String);

impl From<Error> for Exit {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Input(_) | Error::UnknownGenerator(_) | Error::OutOfRange(_) => EXIT_MALFORMED,
            _ => EXIT_FAIL,
        };
        Exit(code, format!("error: {e}"))
    }
}

type Res = std::result::Result<i32, Exit>;

fn malformed(msg: impl Into<String>) -> Exit {
    Exit(EXIT_MALFORMED, format!("error: {}", msg.into()))
}

fn read(path: &Path) -> std::result::Result<String, Exit> {
    fs::read_to_string(path).map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))
}

impl Ctx {
    fn say(&mut self, line: impl AsRef<str>) {
        self.report.push_str(line.as_ref());
        self.report.push('\n');
    }

    fn graph(&self) -> std::result::Result<(EmbeddedGraph, Option<Coloring>), Exit> {
        let path = self.input.as_ref().ok_or_else(|| malformed("this command needs --input FILE"))?;
        Ok(parse_embedding(&read(path)?)?)
    }

    fn colored(&self) -> std::result::Result<(EmbeddedGraph, Coloring), Exit> {
        match self.graph()? {
            (g, Some(c)) => Ok((g, c)),
            (_, None) => Err(malformed("the input file carries no coloring")),
        }
    }

    /// Writes `text` to `--out` (noting it in the report) or into the report.
    fn emit(&mut self, text: &str) -> std::result::Result<(), Exit> {
        match &self.out {
            Some(p) => {
                fs::write(p, text).map_err(|e| malformed(format!("cannot write {}: {e}", p.display())))?;
                let note = format!("wrote {}", p.display());
                self.say(note);
            }
            None => self.report.push_str(text),
        }
        Ok(())
    }

    fn emit_graph(&mut self, g: &EmbeddedGraph, c: Option<&Coloring>) -> std::result::Result<(), Exit> {
        let s = classify_surface(g);
        self.say(format!(
            "# V {} E {} F {} {s}",
            g.vertex_count(),
            g.edge_count(),
            g.face_count()
        ));
        self.emit(&write_embedding(g, c))
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    if let Some(p) = &cli.input {
        if !p.is_file() {
            return (EXIT_MALFORMED, format!("error: input {} is not a readable file\n", p.display()));
        }
    }
    let mut ctx = Ctx { input: cli.input, out: cli.out, budget: cli.budget, report: String::new() };
    let result = match cli.command {
        Command::Build { what } => build(&mut ctx, what),
        Command::Verify { what } => verify(&mut ctx, what),
        Command::Classify { what: Classify::PhiType } => phi_type(&mut ctx),
        Command::Search { what: Search::LocalColoring { r, m } } => search(&mut ctx, r, m),
        Command::Psi => psi(&mut ctx),
        Command::Group { what } => group(&mut ctx, what),
        Command::Surgery { what } => surgery(&mut ctx, what),
        Command::Tri { what } => tri(&mut ctx, what),
    };
    match result {
        Ok(code) => (code, ctx.report),
        Err(Exit(code, msg)) => {
            ctx.say(msg);
            (code, ctx.report)
        }
    }
}

fn diagonal(q: DiagonalQuad) -> (EmbeddedGraph, Coloring) {
    (q.graph, q.coloring)
}

fn hex(q: HexQuad) -> (EmbeddedGraph, Coloring) {
    (q.graph, q.coloring)
}

fn build(ctx: &mut Ctx, what: Build) -> Res {
    let (g, c) = match what {
        Build::G0 => hex(build_g0()?),
        Build::G1 => hex(build_g1()?),
        Build::G0p => diagonal(build_g0_prime()?),
        Build::G1p => diagonal(build_g1_prime()?),
        Build::K4p => build_k4_projective()?,
        Build::U { m, r } => build_u_embedding(m, r)?,
        Build::Family { base, k } => {
            let b = match base.as_str() {
                "g0p" => build_g0_prime()?,
                "g1p" => build_g1_prime()?,
                other => return Err(malformed(format!("family base `{other}`, expected g0p or g1p"))),
            };
            build_high_genus_family(&b, k)?
        }
    };
    ctx.emit_graph(&g, Some(&c))?;
    Ok(EXIT_OK)
}

fn verify(ctx: &mut Ctx, what: Verify) -> Res {
    match what {
        Verify::Surface => {
            let (g, _) = ctx.graph()?;
            let s = classify_surface(&g);
            ctx.say(format!("V {} E {} F {}", g.vertex_count(), g.edge_count(), g.face_count()));
            ctx.say(s.to_string());
            Ok(EXIT_OK)
        }
        Verify::QuadParity { expect } => {
            let (g, _) = ctx.graph()?;
            let p = quad_parity(&g)?;
            ctx.say(p.to_string());
            match expect.as_deref() {
                None => Ok(EXIT_OK),
                Some(want @ ("odd" | "even")) => {
                    let ok = (want == "odd") == p.is_odd();
                    if !ok {
                        ctx.say(format!("expected {want}"));
                    }
                    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
                }
                Some(other) => Err(malformed(format!("--expect {other}, use odd or even"))),
            }
        }
        Verify::Excess => {
            let (g, _) = ctx.graph()?;
            let r = excess_report(&g)?;
            ctx.say(format!("total excess {} = 4(g-2) with g = {}", r.total, r.genus));
            Ok(EXIT_OK)
        }
        Verify::LocalColoring { r } => {
            let (g, c) = ctx.colored()?;
            match local_coloring_violation(&g.underlying(), &c, r) {
                None => {
                    ctx.say(format!("local {r}-coloring with {} colors", c.used_colors().len()));
                    Ok(EXIT_OK)
                }
                Some(v) => {
                    ctx.say(format!("not a local {r}-coloring: {v}"));
                    Ok(EXIT_FAIL)
                }
            }
        }
        Verify::Phi3Cert { file } => {
            let (g, _) = ctx.graph()?;
            let edges = parse_edge_list(&g, &read(&file)?)?;
            match phi3_certificate(&g, &edges) {
                Ok(true) => {
                    ctx.say(format!("certificate passes ({} negative edges)", edges.len()));
                    Ok(EXIT_OK)
                }
                Ok(false) => {
                    ctx.say("switching matches but the remaining graph is not bipartite as required");
                    Ok(EXIT_FAIL)
                }
                Err(Error::CertificateMismatch(m)) => {
                    ctx.say(format!("certificate mismatch: {m}"));
                    Ok(EXIT_FAIL)
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

/// Lines `edge <id>` or `pair <a> <b>`; a pair must name a unique edge.
fn parse_edge_list(g: &EmbeddedGraph, text: &str) -> std::result::Result<Vec<usize>, Exit> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let t: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: String| malformed(format!("line {}: {msg}", i + 1));
        match t[..] {
            ["edge", id] => out.push(id.parse().map_err(|_| bad(format!("bad edge id `{id}`")))?),
            ["pair", a, b] => {
                let va = g.find_vertex(a).ok_or_else(|| bad(format!("unknown vertex `{a}`")))?;
                let vb = g.find_vertex(b).ok_or_else(|| bad(format!("unknown vertex `{b}`")))?;
                match g.edges_between(va, vb)[..] {
                    [e] => out.push(e),
                    [] => return Err(bad(format!("no edge {a}-{b}"))),
                    _ => return Err(bad(format!("{a}-{b} names parallel edges; use `edge <id>`"))),
                }
            }
            _ => return Err(bad("expected `edge <id>` or `pair <a> <b>`".into())),
        }
    }
    Ok(out)
}

fn phi_type(ctx: &mut Ctx) -> Res {
    let (g, _) = ctx.graph()?;
    let parity = quad_parity(&g)?;
    let profile = cycle_parity_profile(&g)?;
    if ctx.out.is_some() {
        ctx.emit(&profile.certificate(&g, parity))?;
    }
    match classify_phi_type(&profile, parity) {
        Ok(t) => {
            ctx.say(format!("{t} ({parity})"));
            Ok(EXIT_OK)
        }
        Err(e) => {
            ctx.say(format!("{parity}; {e}"));
            Ok(EXIT_FAIL)
        }
    }
}

fn search(ctx: &mut Ctx, r: usize, m: usize) -> Res {
    let (g, _) = ctx.graph()?;
    let sg = g.underlying();
    let outcome = search_local_coloring(&sg, r, m, ctx.budget)?;
    ctx.emit(&outcome.certificate(&sg, r, m))?;
    Ok(match outcome {
        SearchOutcome::Found { .. } => EXIT_OK,
        SearchOutcome::None(_) => EXIT_FAIL,
        SearchOutcome::BudgetExceeded { .. } => EXIT_BUDGET,
    })
}

fn psi(ctx: &mut Ctx) -> Res {
    let (g, _) = ctx.graph()?;
    let r = local_chromatic_number(&g.underlying(), ctx.budget)?;
    match r.exact() {
        Some(k) => {
            ctx.say(format!("psi = {k} ({} nodes)", r.nodes));
            ctx.say(format!("witness {}", r.witness));
            Ok(EXIT_OK)
        }
        None => {
            ctx.say(format!("{} <= psi <= {} (budget exhausted after {} nodes)", r.lower, r.upper, r.nodes));
            Ok(EXIT_BUDGET)
        }
    }
}

fn words(args: WordArgs) -> std::result::Result<(CommutationGraph, Vec<GroupWord>), Exit> {
    match (args.file, args.kneser, args.word) {
        (Some(f), None, None) => Ok(parse_word_file(&read(&f)?)?),
        (None, Some(m), Some(w)) => {
            let h = kneser_graph(m, 2)?;
            let word = h.parse_kneser_word(&w)?;
            Ok((h, vec![word]))
        }
        _ => Err(malformed("give a word file or --kneser M --word W")),
    }
}

fn group(ctx: &mut Ctx, what: Group) -> Res {
    match what {
        Group::Reduce(args) => {
            let (h, ws) = words(args)?;
            for w in &ws {
                let line = h.format_kneser(&h.reduce(w)?);
                ctx.say(line);
            }
            Ok(EXIT_OK)
        }
        Group::IsIdentity(args) => {
            let (h, ws) = words(args)?;
            let mut all = true;
            for w in &ws {
                let id = h.is_identity(w)?;
                all &= id;
                ctx.say(if id { "identity" } else { "not identity" });
            }
            Ok(if all { EXIT_OK } else { EXIT_FAIL })
        }
        Group::Table { which } => {
            let r = verify_table(which)?;
            ctx.say(format!("table {which}"));
            ctx.say(format!("product of squares is identity: {}", r.squares_identity));
            ctx.say(format!(
                "product is identity: {} (reduced length {})",
                r.product_identity, r.product_reduced_len
            ));
            ctx.say(format!("product equals displayed word: {}", r.product_matches_displayed));
            match r.expected_generators {
                Some(n) => ctx.say(format!("generators used: {} (expected {n})", r.generators_used)),
                None => ctx.say(format!("generators used: {}", r.generators_used)),
            }
            for fix in &r.repaired {
                ctx.say(format!("repaired token: {fix}"));
            }
            ctx.say(if r.pass { "PASS" } else { "FAIL" });
            Ok(if r.pass { EXIT_OK } else { EXIT_FAIL })
        }
        Group::WalkLabel { colors, kneser } => {
            let cols = colors
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| malformed(format!("bad color `{t}`"))))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let top = cols.iter().copied().max().unwrap_or(0);
            let h = match kneser {
                Some(m) => kneser_graph(m, 2)?,
                None => label_group(top)?,
            };
            let w = walk_label(&h, &cols)?;
            let reduced = h.reduce(&w)?;
            let abelian_zero = h.abelianize(&w)?.iter().all(|&x| x == 0);
            ctx.say(format!("label {}", h.format_kneser(&w)));
            ctx.say(format!("reduced {}", h.format_kneser(&reduced)));
            ctx.say(format!("identity {}", reduced.is_empty()));
            ctx.say(format!("abelianization zero {abelian_zero}"));
            Ok(EXIT_OK)
        }
    }
}

fn surgery(ctx: &mut Ctx, what: Surgery) -> Res {
    let (g, c) = ctx.colored()?;
    let (out, oc) = match what {
        Surgery::Crosscap { edge } => crosscap_hexagon(&g, &c, edge)?,
        Surgery::Refine3 => refine_3x3(&g, &c)?,
        Surgery::DiagIdentify { face } => identify_face_diagonal(&g, &c, face)?,
    };
    ctx.emit_graph(&out, Some(&oc))?;
    Ok(EXIT_OK)
}

fn tri(ctx: &mut Ctx, what: Tri) -> Res {
    match what {
        Tri::Subdivide => {
            let (q, c) = ctx.graph()?;
            let (t, origin) = face_subdivision(&q)?;
            let tc = c.map(|c| quadloc::trisub::extend_with_hub_color(&c, &origin)).transpose()?;
            ctx.emit_graph(t.graph(), tc.as_ref())?;
            Ok(EXIT_OK)
        }
        Tri::FiskCheck => {
            let (g, c) = ctx.colored()?;
            let t = Triangulation::new(g)?;
            let r = fisk_check(&t, &c)?;
            ctx.say(r.to_string());
            Ok(EXIT_OK)
        }
        Tri::TqBound => {
            let (q, _) = ctx.graph()?;
            let r = tq_lower_bound_check(&q, ctx.budget)?;
            let tg = r.triangulation.graph().underlying();
            let n = tg.vertex_count();
            ctx.emit(&r.outcome.certificate(&tg, 4, n.max(4)))?;
            match &r.outcome {
                SearchOutcome::None(_) => {
                    ctx.say("T(Q) has no local 4-coloring");
                    match r.exact_psi() {
                        Some(k) => ctx.say(format!("psi(T(Q)) = {k}")),
                        None => ctx.say(format!("psi(T(Q)) <= {}", r.quad_psi.upper + 1)),
                    }
                    Ok(EXIT_OK)
                }
                SearchOutcome::Found { .. } => {
                    ctx.say("T(Q) has a local 4-coloring");
                    Ok(EXIT_FAIL)
                }
                SearchOutcome::BudgetExceeded { .. } => Ok(EXIT_BUDGET),
            }
        }
    }
}
