//! `semiexp`: analyze a finite monoid, verify its wreath-product embedding,
//! and draw its trees.

mod dot;
mod input;

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use semiexp::elliptic::{chiswell_build, minimal_representation, ChiswellTree};
use semiexp::embed::zeiger_embed;
use semiexp::green::is_stable;
use semiexp::holonomy::{h_table, holonomy_table};
use semiexp::length::{
    check_length_axioms, dedekind_forward, dedekind_inverse, on_elements, ClassPoset,
};
use semiexp::rhodes::burnside_identity_check;
use semiexp::tree::build_uniform_tree;
use semiexp::{AdjoinedMonoid, ExpansionError, LengthTable, Phi3Monoid, RhodesMonoid};
use serde::Serialize;

const DEFAULT_SEED: u64 = 0x5eed;
const SAMPLE: usize = 25;

#[derive(Parser)]
#[command(name = "semiexp", version, about = "Expansions, length functions and Zeiger embeddings of finite monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Green structure, J-heights, W and the sizes of the expansions.
    Analyze(AnalyzeArgs),
    /// Build the wreath-product embedding of Rh_Y and check it.
    EmbedVerify(EmbedArgs),
    /// Write a tree in Graphviz DOT format.
    ExportDot(DotArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Also build the cut-down Phi3 expansion.
    #[arg(long)]
    phi3: bool,
    /// Print the monoid as a table-kind input file and stop.
    #[arg(long)]
    dump_table: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Weights {
    /// One on every J-class below the top, giving the J-height.
    Height,
    Zero,
}

#[derive(Args)]
struct EmbedArgs {
    file: PathBuf,
    #[arg(long)]
    skip_recover: bool,
    /// Seed for the sample of random weight functions.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Weights of the holonomy length function checked alongside.
    #[arg(long, value_enum, default_value_t = Weights::Height)]
    weights: Weights,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TreeKind {
    /// The tree of the refined length function `H`.
    H,
    Height,
    Zero,
}

#[derive(Args)]
struct DotArgs {
    /// Monoid file; not needed with --uniform.
    #[arg(required_unless_present = "uniform")]
    file: Option<PathBuf>,
    #[arg(long)]
    labels: bool,
    #[arg(long)]
    depth_cap: Option<usize>,
    /// Draw `T(n_l, ..., n_1)` instead; the root has `n_1` sons.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    uniform: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = TreeKind::H)]
    weights: TreeKind,
}

enum Failure {
    Input(String),
    Verify(String),
}

type Outcome = Result<(), Failure>;

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn verify_err(e: impl std::fmt::Display) -> Failure {
    Failure::Verify(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::EmbedVerify(a) => embed_verify(a),
        Command::ExportDot(a) => export_dot(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn adjoined(path: &PathBuf) -> Result<(input::Loaded, AdjoinedMonoid), Failure> {
    let loaded = input::load(path).map_err(input_err)?;
    let b = AdjoinedMonoid::new(&loaded.monoid).map_err(verify_err)?;
    Ok((loaded, b))
}

#[derive(Serialize)]
struct JClassSummary {
    id: usize,
    height: usize,
    members: Vec<String>,
    r_classes: usize,
    l_classes: usize,
    group_order: usize,
    in_w: bool,
}

#[derive(Serialize)]
struct AnalyzeReport {
    size: usize,
    adjoined_size: usize,
    j_classes: Vec<JClassSummary>,
    max_height: usize,
    w: Vec<String>,
    stable: bool,
    rhodes: usize,
    rhodes_cut: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi3_cut: Option<usize>,
}

fn analyze(args: AnalyzeArgs) -> Outcome {
    let (loaded, b) = adjoined(&args.file)?;
    if args.dump_table {
        let text = serde_json::to_string_pretty(&input::dump(&loaded.monoid)).map_err(input_err)?;
        println!("{text}");
        return Ok(());
    }
    let (m, green) = (b.monoid(), b.green());
    let mut classes: Vec<usize> = (0..green.j_count()).collect();
    classes.sort_by_key(|&j| (green.class_height(j), j));
    let j_classes = classes
        .into_iter()
        .map(|j| {
            let members = green.j_members(j);
            let count = |f: &dyn Fn(usize) -> usize| members.iter().map(|&x| f(x)).collect::<BTreeSet<_>>().len();
            JClassSummary {
                id: j,
                height: green.class_height(j),
                members: members.iter().map(|&x| m.name(x).to_string()).collect(),
                r_classes: count(&|x| green.r_class(x)),
                l_classes: count(&|x| green.l_class(x)),
                group_order: b.rees().view(j).group_order(),
                in_w: b.in_w(members[0]),
            }
        })
        .collect();
    let rh = RhodesMonoid::full(&b).map_err(verify_err)?;
    let report = AnalyzeReport {
        size: loaded.monoid.size(),
        adjoined_size: m.size(),
        j_classes,
        max_height: b.max_height(),
        w: b.w_set().into_iter().map(|x| m.name(x).to_string()).collect(),
        stable: is_stable(m, green),
        rhodes: rh.len(),
        rhodes_cut: RhodesMonoid::cut_to_generators(&b).len(),
        phi3_cut: args.phi3.then(|| Phi3Monoid::cut_to_generators(&loaded.monoid).len()),
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).map_err(input_err)?);
        return Ok(());
    }
    println!("|M| = {}, |M^I| = {}", report.size, report.adjoined_size);
    println!("J-classes of M^I, top first:");
    for j in &report.j_classes {
        println!(
            "  J{} h_J={} {{{}}} R-classes {} L-classes {} |G| {}{}",
            j.id,
            j.height,
            j.members.join(", "),
            j.r_classes,
            j.l_classes,
            j.group_order,
            if j.in_w { " in W" } else { "" }
        );
    }
    println!("max h_J = {}", report.max_height);
    println!("W(M^I) = {{{}}}", report.w.join(", "));
    println!("stable: {}", if report.stable { "yes" } else { "no" });
    println!("|Rh| = {}", report.rhodes);
    println!("|Rh_Y| = {}", report.rhodes_cut);
    if let Some(n) = report.phi3_cut {
        println!("|Phi3_Y| = {n}");
    }
    Ok(())
}

#[derive(Serialize)]
struct Line {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct EmbedReport {
    seed: u64,
    rhodes_cut: usize,
    alphabet_sizes: Vec<usize>,
    checks: Vec<Line>,
    /// `(level, non-identity permutations)` in each local monoid.
    permutations: Vec<(usize, usize)>,
    local_monoid_sizes: Vec<usize>,
}

fn line(name: impl Into<String>, result: Result<(), String>) -> Line {
    Line {
        name: name.into(),
        passed: result.is_ok(),
        witness: result.err(),
    }
}

fn weight_vector(poset: &ClassPoset, weights: Weights) -> Vec<u64> {
    (0..poset.len())
        .map(|c| u64::from(weights == Weights::Height && c != poset.top()))
        .collect()
}

/// The holonomy table of the J-preserving function with Dedekind weights `w`,
/// checked against the axioms and rebuilt from its tree.
fn holonomy_round_trip(b: &AdjoinedMonoid, rh: &RhodesMonoid, poset: &ClassPoset, w: &[u64]) -> Result<(), String> {
    let h = dedekind_forward(poset, w).map_err(|e| e.to_string())?;
    if dedekind_inverse(poset, &h).map_err(|e| e.to_string())? != w {
        return Err(format!("weights {w:?} not recovered"));
    }
    let d = holonomy_table(rh, b, &on_elements(b.green(), &h)).map_err(|e| e.to_string())?;
    let report = check_length_axioms(&d, rh.monoid(), false);
    if let Some((axiom, at)) = report.failures.first() {
        return Err(format!("weights {w:?}: {} fails at {at:?}", axiom.name()));
    }
    let ch = chiswell_build(rh.monoid(), &d).map_err(|e| e.to_string())?;
    if ch.chi().d_chi() != d {
        return Err(format!("weights {w:?}: tree does not give back the length function"));
    }
    Ok(())
}

fn embed_verify(args: EmbedArgs) -> Outcome {
    let (loaded, b) = adjoined(&args.file)?;
    let rh = RhodesMonoid::cut_to_generators(&b);
    let mut checks = Vec::new();
    if let Some((p, q)) = loaded.burnside {
        match burnside_identity_check(&b, &rh, p, q) {
            Err(ExpansionError::BurnsideBase { witness }) => {
                return Err(Failure::Input(format!(
                    "precondition x^{} = x^{p} fails at x = {}",
                    p + q,
                    b.monoid().name(witness)
                )));
            }
            Err(e) => return Err(verify_err(e)),
            Ok(r) => checks.push(line(
                format!("Burnside x^{} = x^{p}", p + q),
                r.witness.map_or(Ok(()), |s| Err(format!("fails at {}", rh.chain(s).display(b.monoid())))),
            )),
        }
    }

    let poset = ClassPoset::from_green(b.green());
    let name = match args.weights {
        Weights::Height => "holonomy (height weights)",
        Weights::Zero => "holonomy (zero weights)",
    };
    checks.push(line(name, holonomy_round_trip(&b, &rh, &poset, &weight_vector(&poset, args.weights))));
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let sample = (0..SAMPLE).try_for_each(|_| {
        let w: Vec<u64> = (0..poset.len())
            .map(|c| if c == poset.top() { 0 } else { rng.gen_range(0..4) })
            .collect();
        holonomy_round_trip(&b, &rh, &poset, &w)
    });
    checks.push(line(format!("Dedekind sample ({SAMPLE} weight functions)"), sample));

    let z = zeiger_embed(&b).map_err(verify_err)?;
    let verified = z.verify(!args.skip_recover);
    checks.extend(verified.checks.iter().map(|(n, c)| line(*n, c.clone())));
    let report = EmbedReport {
        seed: args.seed,
        rhodes_cut: rh.len(),
        alphabet_sizes: z.sizes(),
        checks,
        permutations: verified.permutation_counts.clone(),
        local_monoid_sizes: verified.local_monoid_sizes.clone(),
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).map_err(input_err)?);
    } else {
        println!("seed: {}", report.seed);
        println!("|Rh_Y| = {}, depth {}", report.rhodes_cut, report.alphabet_sizes.len());
        println!("alphabet sizes: {:?}", report.alphabet_sizes);
        for l in &report.checks {
            match &l.witness {
                None => println!("{}: PASS", l.name),
                Some(w) => println!("{}: FAIL: {w}", l.name),
            }
        }
        println!("local monoid sizes: {:?}", report.local_monoid_sizes);
        if report.permutations.is_empty() {
            println!("permutation components: none");
        }
        for (level, count) in &report.permutations {
            println!("permutation component at level {level}: {count} non-identity permutations");
        }
    }
    match report.checks.iter().find(|l| !l.passed) {
        None => Ok(()),
        Some(l) => Err(Failure::Verify(format!("{} check", l.name))),
    }
}

fn chain_label(ch: &ChiswellTree, rh: &RhodesMonoid, b: &AdjoinedMonoid, v: usize) -> String {
    let k = ch.tree().depth(v);
    let chain = minimal_representation(ch, rh, k, ch.rep(v)).unwrap_or_else(|_| rh.chain(ch.rep(v)).clone());
    format!("[{k}, {}]", chain.display(b.monoid()))
}

fn export_dot(args: DotArgs) -> Outcome {
    if let Some(branching) = &args.uniform {
        let ut = build_uniform_tree(branching).map_err(input_err)?;
        let label = |v: usize| {
            let t: Vec<String> = ut.tuple(v).iter().rev().map(u16::to_string).collect();
            format!("[{}, ({})]", t.len(), t.join(", "))
        };
        print!("{}", dot::render(ut.tree(), label, args.labels, args.depth_cap));
        return Ok(());
    }
    let path = args.file.as_ref().ok_or_else(|| input_err("no input file"))?;
    let (_, b) = adjoined(path)?;
    let rh = RhodesMonoid::full(&b).map_err(verify_err)?;
    let d: LengthTable = match args.weights {
        TreeKind::H => h_table(&rh, &b),
        TreeKind::Height | TreeKind::Zero => {
            let poset = ClassPoset::from_green(b.green());
            let weights = if args.weights == TreeKind::Height { Weights::Height } else { Weights::Zero };
            let h = dedekind_forward(&poset, &weight_vector(&poset, weights)).map_err(verify_err)?;
            holonomy_table(&rh, &b, &on_elements(b.green(), &h)).map_err(verify_err)?
        }
    };
    let ch = chiswell_build(rh.monoid(), &d).map_err(verify_err)?;
    let text = dot::render(ch.tree(), |v| chain_label(&ch, &rh, &b, v), args.labels, args.depth_cap);
    print!("{text}");
    Ok(())
}
