use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use subdeg::coprime::{all_subgroups_small, coprime_factorizations, mu_from_lattice, mu_prime_bound};
use subdeg::corpus::{
    analyze_full, load_group, verify_corpus, CoprimeReport, GroupFile, VerifyOptions, EXIT_OK, EXIT_USAGE,
    EXIT_VIOLATION,
};
use subdeg::subdegree::{max_coprime_subset, sylow_divisibility_check, Verdict};
use subdeg::{constructions, Caps, Error, Result};

#[derive(Parser)]
#[command(name = "subdeg", version, about = "Subdegrees of permutation groups and coprime subdegree checks")]
struct Cli {
    #[command(flatten)]
    caps: CapArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Largest group order enumerated element by element
    #[arg(long, global = true, default_value_t = 200_000)]
    elements_cap: usize,
    /// Largest group order for subgroup-lattice enumeration
    #[arg(long, global = true, default_value_t = 2_000)]
    subgroup_cap: usize,
    /// Largest index for coset actions
    #[arg(long, global = true, default_value_t = 100_000)]
    coset_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Report subdegrees and coprime checks for a group file
    Analyze {
        file: PathBuf,
        /// Base point, 1-based
        #[arg(long, default_value_t = 1)]
        point: usize,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Also test Sylow-normalizer divisibility for this prime
        #[arg(long)]
        sylow: Option<u64>,
    },
    /// Build a group from a family: alt, sym, ksubsets, partitions, agl, psl2, dihedral, cyclic
    Construct {
        family: String,
        params: Vec<usize>,
        /// Write the group file here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON report instead of the group file
        #[arg(long)]
        analyze: bool,
    },
    /// Analyze a directory of group files and/or the built-in corpus
    VerifyCorpus {
        #[arg(long)]
        dir: Option<PathBuf>,
        /// Include the built-in constructions (the default when --dir is absent)
        #[arg(long)]
        builtin: bool,
        /// Worker threads; 0 uses all cores
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the aggregate JSON here instead of stdout
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Largest set of maximal subgroups with pairwise coprime indices
    Mu { file: PathBuf },
    /// Pairs of proper subgroups with coprime indices
    Factorizations { file: PathBuf },
    /// Action on the right cosets of a subgroup, written as a group file
    Cosets {
        file: PathBuf,
        subgroup: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_or_print(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict_code(report: &CoprimeReport) -> i32 {
    if report.is_violation() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    }
}

fn print_text(a: &subdeg::corpus::Analysis) {
    let r = &a.report;
    let opt = |x: &Option<bool>| x.map_or("n/a".to_string(), |b| b.to_string());
    println!("name: {}", r.name);
    println!("degree: {}", r.degree);
    println!("order: {}", r.order);
    println!("transitive: {}", r.transitive);
    println!("primitive: {}", r.primitive);
    if let (Some(profile), Some(clique)) = (&a.profile, &a.clique) {
        println!("rank: {}", profile.rank());
        println!("subdegrees: {}", join(&profile.subdegrees()));
        let reps: Vec<usize> = profile.suborbits.iter().map(|s| s.representative + 1).collect();
        println!("representatives: {}", join(&reps));
        println!("max coprime clique: {{{}}} size {}, {} maximum set(s)", join(&clique.values), clique.size(), clique.maximum_count);
    }
    println!("weiss: {}", r.weiss_ok.as_str());
    println!("neumann: {}", opt(&r.neumann_ok));
    println!("theorem: {}", opt(&r.theorem_ok));
    if !r.skipped_checks.is_empty() {
        println!("skipped: {}", join(&r.skipped_checks));
    }
}

fn run(cli: Cli) -> Result<i32> {
    let caps = Caps {
        elements: cli.caps.elements_cap,
        subgroups: cli.caps.subgroup_cap,
        cosets: cli.caps.coset_cap,
    };
    match cli.command {
        Command::Analyze { file, point, json, csv, sylow } => {
            let group = load_group(&file)?;
            let point = point
                .checked_sub(1)
                .filter(|&p| p < group.degree())
                .ok_or(Error::PointOutOfRange { point, degree: group.degree() })?;
            let analysis = analyze_full(&group, point);
            if json {
                print!("{}", analysis.report.to_json());
            } else if csv {
                print!("{}", CoprimeReport::to_csv(std::slice::from_ref(&analysis.report)));
            } else {
                print_text(&analysis);
            }
            if let Some(p) = sylow {
                match sylow_divisibility_check(&group, point, p, &caps)? {
                    Verdict::NotApplicable => eprintln!("sylow {p}: not-applicable"),
                    Verdict::Checked { holds, detail } => eprintln!(
                        "sylow {p}: {} (|P| = {}, |N(P)| = {}, offending: {})",
                        if holds { "pass" } else { "fail" },
                        detail.sylow_order,
                        detail.normalizer_order,
                        join(&detail.offending)
                    ),
                }
            }
            Ok(verdict_code(&analysis.report))
        }
        Command::Construct { family, params, out, analyze } => {
            let group = constructions::construct(&family, &params)?;
            let name = group.label().unwrap_or(&family).to_string();
            let file = GroupFile::from_group(&name, &group, Some("subdeg construct".into()));
            if let Some(path) = &out {
                write_or_print(Some(path), &file.to_json())?;
            }
            if analyze {
                let report = analyze_full(&group, 0).report;
                print!("{}", report.to_json());
                Ok(verdict_code(&report))
            } else {
                if out.is_none() {
                    print!("{}", file.to_json());
                }
                Ok(EXIT_OK)
            }
        }
        Command::VerifyCorpus { dir, builtin, jobs, json } => {
            let options = VerifyOptions {
                builtin: builtin || dir.is_none(),
                dir,
                jobs,
            };
            let agg = verify_corpus(&options)?;
            write_or_print(json.as_ref(), &agg.to_json())?;
            let primitive = agg.groups.iter().filter(|r| r.primitive).count();
            eprintln!(
                "{} groups ({} primitive), {} failed to load, {} violations",
                agg.groups.len(),
                primitive,
                agg.load_failures.len(),
                agg.violations.len()
            );
            for f in &agg.load_failures {
                eprintln!("failed to load {}: {}", f.name, f.error);
            }
            for v in &agg.violations {
                eprintln!("violation: {v}");
            }
            Ok(agg.exit_code())
        }
        Command::Mu { file } => {
            let group = load_group(&file)?;
            let lattice = all_subgroups_small(&group, caps.subgroups)?;
            let maximal = lattice.maximal_indices();
            let mut indices: Vec<u64> = maximal.iter().map(|&i| lattice.index_of(i)).collect();
            indices.sort();
            let clique = max_coprime_subset(&indices);
            println!("order: {}", group.order());
            println!("subgroups: {}", lattice.len());
            println!("maximal subgroup indices: {}", join(&indices));
            println!("mu: {}", mu_from_lattice(&lattice));
            println!("witness indices: {}", join(&clique.values));
            println!("prime bound: {}", mu_prime_bound(&group.order()));
            Ok(EXIT_OK)
        }
        Command::Factorizations { file } => {
            let group = load_group(&file)?;
            let lattice = all_subgroups_small(&group, caps.subgroups)?;
            let fs = coprime_factorizations(&group, &lattice)?;
            println!("index_a index_b order_a order_b order_intersection maximal");
            for f in &fs {
                println!(
                    "{} {} {} {} {} {}",
                    f.index_a,
                    f.index_b,
                    lattice.subgroups[f.a].order,
                    lattice.subgroups[f.b].order,
                    f.intersection_order,
                    f.maximal
                );
            }
            eprintln!("{} coprime factorizations", fs.len());
            Ok(EXIT_OK)
        }
        Command::Cosets { file, subgroup, out } => {
            let group = load_group(&file)?;
            let sub = load_group(&subgroup)?;
            let action = group.coset_action(&sub, caps.cosets)?;
            let name = format!("{} on cosets of {}", group.label().unwrap_or("G"), sub.label().unwrap_or("H"));
            write_or_print(out.as_ref(), &GroupFile::from_group(&name, &action, None).to_json())?;
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
