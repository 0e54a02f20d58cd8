use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use convexica::colattice::{co_lattice, is_completely_si};
use convexica::corpus::{corpus, run_corpus};
use convexica::experiment::{run_growth, Reconstruction};
use convexica::lattice::{
    from_colattice, lattice_from_join_presentation, FinLattice, Presentation,
};
use convexica::poset::Poset;
use convexica::terms::{
    build_identity, check_identity_with, has_bi_stirlitz, has_stirlitz_track, CheckOptions,
    Identity, IdentityKind, DEFAULT_BUDGET,
};
use convexica::variety::{
    check_structural_preconditions, decide_sub, decide_sub2, decide_subn, gamma_embedding,
    sub2_canonical_form, DecideOptions, MembershipReport, Method, NamedTrack, Preconditions,
    Variety, Witness,
};
use convexica::Error;

#[derive(Parser)]
#[command(
    name = "convexica",
    version,
    about = "Order-convex set lattices and the varieties SUB(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Poset,
    Lattice,
    Presentation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Naive,
    Structural,
    /// Naive when the assignment space fits the budget, structural otherwise.
    Auto,
}

#[derive(clap::Args)]
struct Input {
    /// Poset, lattice or presentation file.
    file: PathBuf,
    /// File kind; guessed from its keys when omitted.
    #[arg(long, value_enum)]
    target: Option<Target>,
}

#[derive(clap::Args)]
struct Budget {
    /// Largest assignment space searched naively (default: $CONVEXICA_BUDGET or 1e9).
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(Subcommand)]
enum Command {
    /// Size, covers, length, tree-likeness and complete subdirect irreducibility of a poset.
    PosetInfo {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Checks one identity; for posets the lattice checked is Co(P).
    Check {
        #[command(flatten)]
        input: Input,
        /// S, U, B, L2, D2D, H:n, Hmn:m,n or a path to an identity file.
        #[arg(long)]
        identity: String,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        json: bool,
        /// A JSON report printed earlier by `check --json`; its witness is re-validated.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Membership in SUB.
    Sub {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        json: bool,
    },
    /// Membership in SUB2.
    Sub2 {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "structural")]
        method: MethodArg,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        json: bool,
    },
    /// Membership in SUB(n).
    Subn {
        #[command(flatten)]
        input: Input,
        n: usize,
        #[arg(long, value_enum, default_value = "structural")]
        method: MethodArg,
        #[command(flatten)]
        budget: Budget,
        #[arg(long)]
        json: bool,
        /// A JSON report printed earlier by `subn --json`; its witness is re-validated.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Embeds a SUB2 member into Co(G) for a tree-like poset G of length at most 2.
    EmbedSub2 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Embeds a SUB2 member into a product of Co(P(I,J)) with |I|+|J| <= 2^m - 1.
    Canonical {
        #[command(flatten)]
        input: Input,
        /// Generator labels.
        #[arg(long, num_args = 1.., required = true)]
        gens: Vec<String>,
    },
    /// Prints Co(P) in the lattice format.
    CoExport { file: PathBuf },
    /// Re-derives the facts of the built-in examples.
    Corpus {
        /// Only entries whose name contains this string.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Growth of the sublattice generated by A, B, C in truncations of a length-3 poset.
    Experiment {
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        /// Cover template; the shipped candidate is used when omitted.
        #[arg(long)]
        reconstruction: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Input(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn guess_target(text: &str) -> Target {
    let keys: Vec<&str> = text
        .lines()
        .filter_map(|l| l.split('#').next()?.split_once(':').map(|(k, _)| k.trim()))
        .collect();
    if keys.contains(&"generators") {
        Target::Presentation
    } else if keys
        .iter()
        .any(|k| matches!(*k, "leq" | "jointable" | "meettable"))
    {
        Target::Lattice
    } else {
        Target::Poset
    }
}

struct Loaded {
    lattice: FinLattice,
    target: Target,
}

fn load(input: &Input) -> std::result::Result<Loaded, Failure> {
    let text = read(&input.file)?;
    let target = input.target.unwrap_or_else(|| guess_target(&text));
    let lattice = match target {
        Target::Poset => from_colattice(&co_lattice(&Poset::parse(&text)?)?),
        Target::Lattice => FinLattice::parse(&text)?,
        Target::Presentation => lattice_from_join_presentation(&Presentation::parse(&text)?)?,
    };
    Ok(Loaded { lattice, target })
}

fn budget_of(b: &Budget) -> std::result::Result<u128, Failure> {
    if let Some(v) = b.budget {
        return Ok(v);
    }
    match std::env::var("CONVEXICA_BUDGET") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("CONVEXICA_BUDGET is not a number: `{s}`"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn print_json<T: Serialize>(v: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("serializable report")
    );
}

fn poset_info(file: &Path, json: bool) -> Outcome {
    let p = Poset::parse(&read(file)?)?;
    let length = p.length()?;
    let csi = is_completely_si(&p)?;
    let witness: Vec<String> = csi.witness.iter().map(|d| p.set_name(d.members)).collect();
    if json {
        print_json(&serde_json::json!({
            "elements": p.len(),
            "covers": p.covers().iter().map(|&(x, y)| format!("{}<{}", p.label(x), p.label(y))).collect::<Vec<_>>(),
            "length": length,
            "tree_like": p.is_tree_like(),
            "completely_si": csi.holds,
            "witness": witness,
        }));
    } else {
        print!("{}", p.to_text());
        println!("size: {}", p.len());
        println!("length: {length}");
        println!("tree-like: {}", p.is_tree_like());
        if csi.holds {
            println!(
                "completely subdirectly irreducible: true (least nonempty D-closed set {})",
                witness[0]
            );
        } else {
            println!(
                "completely subdirectly irreducible: false (minimal nonempty D-closed sets {})",
                witness.join(" ")
            );
        }
    }
    Ok(true)
}

#[derive(Serialize, Deserialize)]
struct CheckReport {
    identity: String,
    method: Method,
    holds: bool,
    witness: Option<Witness>,
}

enum Spec {
    Kind(IdentityKind),
    Custom(Identity),
}

fn identity_spec(s: &str) -> std::result::Result<Spec, Failure> {
    if let Ok(kind) = s.parse::<IdentityKind>() {
        return Ok(Spec::Kind(kind));
    }
    let path = Path::new(s);
    if path.exists() {
        return Ok(Spec::Custom(Identity::parse(&read(path)?)?));
    }
    Err(Failure::Input(format!(
        "`{s}` is neither a known identity nor a file"
    )))
}

/// The variety whose witnesses match the identity's structural form.
fn variety_of(spec: &Spec) -> Variety {
    match spec {
        Spec::Kind(IdentityKind::H(n)) => Variety::SubN(*n),
        Spec::Kind(IdentityKind::Hmn(m, n)) => Variety::SubN(m + n - 1),
        Spec::Kind(IdentityKind::L2) => Variety::Sub2,
        _ => Variety::Sub,
    }
}

fn check_naive(
    l: &FinLattice,
    id: &Identity,
    budget: u128,
) -> std::result::Result<Option<Witness>, Failure> {
    let v = check_identity_with(
        l,
        id,
        &CheckOptions {
            budget,
            prune: true,
        },
    )?;
    Ok(v.witness.map(|w| Witness::from_counterexample(l, id, &w)))
}

fn check_structural(
    loaded: &Loaded,
    spec: &Spec,
    budget: u128,
) -> std::result::Result<Option<Witness>, Failure> {
    let l = &loaded.lattice;
    let kind = match spec {
        Spec::Kind(k @ (IdentityKind::H(_) | IdentityKind::Hmn(..) | IdentityKind::L2)) => *k,
        _ => {
            return Err(Error::StructuralInapplicable(
                "only L2, H:n and Hmn:m,n have a structural form".into(),
            )
            .into())
        }
    };
    if loaded.target != Target::Poset {
        if let Some(w) = check_structural_preconditions(l, budget)? {
            return Err(Error::StructuralInapplicable(format!("precondition fails: {w}")).into());
        }
    }
    let ji = l.join_irreducibles();
    Ok(match kind {
        IdentityKind::H(n) => {
            has_stirlitz_track(l, n, &ji).map(|t| Witness::Track(NamedTrack::of(l, &t)))
        }
        IdentityKind::Hmn(m, n) => has_bi_stirlitz(l, m, n).map(|bi| Witness::BiTrack {
            sigma: NamedTrack::of(l, &bi.sigma),
            tau: NamedTrack::of(l, &bi.tau),
        }),
        _ => l.d_chain3().map(|(a, b, c)| Witness::DChain {
            a: l.label(a).to_string(),
            b: l.label(b).to_string(),
            c: l.label(c).to_string(),
        }),
    })
}

fn replay(l: &FinLattice, report: &Path, variety: Variety) -> Outcome {
    #[derive(Deserialize)]
    struct AnyReport {
        witness: Option<Witness>,
    }
    let text = read(report)?;
    let r: AnyReport = serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", report.display())))?;
    match r.witness {
        None => {
            println!("replay: report has no witness");
            Ok(true)
        }
        Some(w) => {
            if w.validate(l, variety)? {
                println!("replay: witness confirmed: {w}");
                Ok(false)
            } else {
                Err(Failure::Input(format!(
                    "replay: witness does not hold: {w}"
                )))
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn check(
    input: &Input,
    identity: &str,
    method: MethodArg,
    budget: u128,
    json: bool,
    replay_file: Option<&Path>,
) -> Outcome {
    let loaded = load(input)?;
    let l = &loaded.lattice;
    let spec = identity_spec(identity)?;
    if let Some(r) = replay_file {
        return replay(l, r, variety_of(&spec));
    }
    let id = match &spec {
        Spec::Kind(k) => build_identity(*k)?,
        Spec::Custom(id) => id.clone(),
    };
    let (used, witness) = match method {
        MethodArg::Naive => (Method::Naive, check_naive(l, &id, budget)?),
        MethodArg::Structural => (
            Method::Structural,
            check_structural(&loaded, &spec, budget)?,
        ),
        MethodArg::Auto => match check_naive(l, &id, budget) {
            Ok(w) => (Method::Naive, w),
            Err(Failure::Core(Error::BudgetExceeded { .. })) if matches!(spec, Spec::Kind(_)) => (
                Method::Structural,
                check_structural(&loaded, &spec, budget)?,
            ),
            Err(e) => return Err(e),
        },
    };
    let report = CheckReport {
        identity: id.name.clone(),
        method: used,
        holds: witness.is_none(),
        witness,
    };
    if json {
        print_json(&report);
    } else {
        println!(
            "{}: {} ({})",
            report.identity,
            if report.holds { "holds" } else { "fails" },
            report.method
        );
        if let Some(w) = &report.witness {
            println!("witness: {w}");
        }
    }
    Ok(report.holds)
}

fn print_membership(r: &MembershipReport, json: bool) {
    if json {
        print_json(r);
    } else {
        println!(
            "{}: {} ({})",
            r.variety,
            if r.member { "member" } else { "not a member" },
            r.method
        );
        if let Some(w) = &r.witness {
            println!("witness: {w}");
        }
    }
}

fn decide_options(loaded: &Loaded, method: MethodArg, budget: u128) -> DecideOptions {
    DecideOptions {
        method: if method == MethodArg::Naive {
            Method::Naive
        } else {
            Method::Structural
        },
        preconditions: if loaded.target == Target::Poset {
            Preconditions::Assume
        } else {
            Preconditions::Verify
        },
        budget,
    }
}

/// Runs `decide`, falling back from naive to structural under `auto`.
fn decide_with<F>(
    loaded: &Loaded,
    method: MethodArg,
    budget: u128,
    decide: F,
) -> std::result::Result<MembershipReport, Failure>
where
    F: Fn(&FinLattice, &DecideOptions) -> convexica::Result<MembershipReport>,
{
    let l = &loaded.lattice;
    if method == MethodArg::Auto {
        let naive = decide_options(loaded, MethodArg::Naive, budget);
        match decide(l, &naive) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => return Ok(other?),
        }
    }
    Ok(decide(l, &decide_options(loaded, method, budget))?)
}

fn embed_sub2(input: &Input, json: bool) -> Outcome {
    let loaded = load(input)?;
    let g = match gamma_embedding(&loaded.lattice) {
        Ok(g) => g,
        Err(Error::NotInSub2(w)) => {
            println!("not in SUB2: {w}");
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    let report = g.report();
    if json {
        print_json(&report);
    } else {
        print!("{}", report.gamma);
        for (x, s) in &report.phi {
            println!("phi({x}) = {s}");
        }
        let f = report.flags;
        println!("embedding: {}", f.is_embedding);
        println!("bounds preserved: {}", f.bounds_preserved);
        println!("length <= 2: {}", f.length_le_2);
        println!("tree-like: {}", f.tree_like);
        match f.atom_preserving {
            Some(b) => println!("atom preserving: {b}"),
            None => println!("atom preserving: not checked (not subdirectly irreducible)"),
        }
    }
    let f = report.flags;
    Ok(f.is_embedding && f.bounds_preserved && f.length_le_2 && f.tree_like)
}

fn canonical(input: &Input, gens: &[String]) -> Outcome {
    let loaded = load(input)?;
    let l = &loaded.lattice;
    let idx = gens
        .iter()
        .map(|g| l.element(g))
        .collect::<convexica::Result<Vec<_>>>()?;
    let cf = match sub2_canonical_form(l, &idx) {
        Err(Error::NotInSub2(w)) => {
            println!("not in SUB2: {w}");
            return Ok(false);
        }
        other => other?,
    };
    println!(
        "generators: {} (bound 2^{} - 1 = {})",
        gens.len(),
        gens.len(),
        cf.bound
    );
    for (i, f) in cf.factors.iter().enumerate() {
        println!(
            "factor {i}: removed {}, {:?}, |I'|+|J'| = {}",
            cf.gamma.gamma.set_name(f.removed),
            f.class,
            f.size
        );
        for line in f.poset.to_text().lines() {
            println!("  {line}");
        }
    }
    println!("within bound: {}", cf.within_bound);
    println!("diagonal injective: {}", cf.diagonal_injective);
    Ok(cf.within_bound && cf.diagonal_injective)
}

fn corpus_cmd(filter: Option<&str>, json: bool) -> Outcome {
    let run = run_corpus(&corpus(), filter);
    for w in &run.warnings {
        eprintln!("warning: {w}");
    }
    if json {
        print_json(&run);
    } else {
        for r in &run.results {
            let status = if r.pass { "PASS" } else { "FAIL" };
            match &r.detail {
                Some(d) if !r.pass => println!("{status} {:<14} {}  [got {d}]", r.entry, r.fact),
                _ => println!("{status} {:<14} {}", r.entry, r.fact),
            }
        }
    }
    Ok(run.all_pass())
}

fn experiment(k_max: usize, file: Option<&Path>, json: bool) -> Outcome {
    let rec = match file {
        Some(f) => Reconstruction::parse(&read(f)?)?,
        None => Reconstruction::candidate(),
    };
    let report = match run_growth(&rec, k_max) {
        Ok(r) => r,
        Err(Error::InvalidReconstruction(msg)) => {
            println!("reconstruction {}: INVALID ({msg})", rec.name);
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    if json {
        print_json(&report);
    } else {
        let tag = if file.is_none() { " [CANDIDATE]" } else { "" };
        println!("reconstruction: {}{tag}", report.reconstruction);
        for row in &report.rows {
            let entries: Vec<String> = row
                .entries
                .iter()
                .map(|e| format!("n={}:{}", e.n, if e.holds { "ok" } else { "FAIL" }))
                .collect();
            println!(
                "k={} |P|={} generated={} |A_n|={:?} c_n,d_n in A_(2n+1)\\A_(2n): {}",
                row.k,
                row.poset_size,
                row.generated_size,
                row.a_sizes,
                entries.join(" ")
            );
        }
        if report.valid() {
            println!("valid: sizes strictly increasing, all entry checks hold");
        } else {
            for e in &report.evidence {
                println!("INVALID: {e}");
            }
        }
    }
    Ok(report.valid())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::PosetInfo { file, json } => poset_info(&file, json),
        Command::Check {
            input,
            identity,
            method,
            budget,
            json,
            replay,
        } => check(
            &input,
            &identity,
            method,
            budget_of(&budget)?,
            json,
            replay.as_deref(),
        ),
        Command::Sub {
            input,
            budget,
            json,
        } => {
            let loaded = load(&input)?;
            let r = decide_sub(&loaded.lattice, budget_of(&budget)?)?;
            print_membership(&r, json);
            Ok(r.member)
        }
        Command::Sub2 {
            input,
            method,
            budget,
            json,
        } => {
            let loaded = load(&input)?;
            let r = decide_with(&loaded, method, budget_of(&budget)?, decide_sub2)?;
            print_membership(&r, json);
            Ok(r.member)
        }
        Command::Subn {
            input,
            n,
            method,
            budget,
            json,
            replay: replay_file,
        } => {
            let loaded = load(&input)?;
            if let Some(r) = replay_file {
                return replay(&loaded.lattice, &r, Variety::SubN(n));
            }
            let r = decide_with(&loaded, method, budget_of(&budget)?, |l, o| {
                decide_subn(l, n, o)
            })?;
            print_membership(&r, json);
            Ok(r.member)
        }
        Command::EmbedSub2 { input, json } => embed_sub2(&input, json),
        Command::Canonical { input, gens } => canonical(&input, &gens),
        Command::CoExport { file } => {
            let p = Poset::parse(&read(&file)?)?;
            print!("{}", from_colattice(&co_lattice(&p)?).to_text());
            Ok(true)
        }
        Command::Corpus { filter, json } => corpus_cmd(filter.as_deref(), json),
        Command::Experiment {
            k_max,
            reconstruction,
            json,
        } => experiment(k_max, reconstruction.as_deref(), json),
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
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
