use std::fmt::Write;

use serde::{Deserialize, Serialize};
use simplex_walk::{
    clique_complex, detect_communities, finite_time_average, long_time_average_spectral,
    parse_edge_list, simplicial_modularity, spectrum, verify_chain_identities, verify_symmetry,
    ChainIdentityReport, CommunityPartition, DetectOptions, Error, Estimator, Simplex,
    SimplicialComplex, Spectrum, Threshold, Walk, WalkSpace, DEFAULT_PHASE_TOLERANCE,
    KARATE_EDGE_LIST,
};

use crate::args::{Cli, Command, Common, Format, Method, ThresholdMode, WalkArgs};
use crate::error::CliError;
use crate::render::{csv_simplex, dot, json, round12};

pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let common = cli.common();
    let complex = load(common)?;
    match &cli.command {
        Command::Build { list, .. } => build(&complex, common, *list),
        Command::Spectrum { dim, tolerance, .. } => {
            spectrum_cmd(&complex, common, *dim, *tolerance)
        }
        Command::Walk {
            dim, source, walk, ..
        } => walk_cmd(&complex, common, *dim, source, walk),
        Command::Detect {
            dim,
            walk,
            threshold,
            ..
        } => detect(&complex, common, *dim, walk, *threshold),
        Command::Modularity { dim, partition, .. } => modularity(&complex, common, *dim, partition),
        Command::Verify { dim, .. } => verify(&complex, common, *dim),
    }
}

fn load(common: &Common) -> Result<SimplicialComplex, CliError> {
    let text = match &common.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(path.display().to_string(), e))?,
        None => KARATE_EDGE_LIST.to_owned(),
    };
    let edges = parse_edge_list(&text)?;
    Ok(clique_complex(&edges, common.max_dim)?)
}

fn unsupported(format: Format, command: &str) -> CliError {
    CliError::Usage(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn require_dim(complex: &SimplicialComplex, dim: usize, min: usize) -> Result<(), CliError> {
    if dim < min || dim >= complex.num_levels() {
        return Err(CliError::Usage(format!(
            "--dim must be between {min} and {} (raise --max-dim for higher dimensions)",
            complex.num_levels() - 1
        )));
    }
    Ok(())
}

fn estimator(walk: &WalkArgs) -> Result<Estimator, CliError> {
    match walk.method {
        Method::Finite if walk.time_steps == 0 => {
            Err(CliError::Usage("--time-steps must be at least 1".into()))
        }
        Method::Finite => Ok(Estimator::FiniteTime {
            time_steps: walk.time_steps,
        }),
        Method::Spectral => Ok(Estimator::Spectral),
    }
}

#[derive(Serialize)]
struct BuildReport {
    max_dim: usize,
    counts: Vec<usize>,
    /// `m_n` per dimension; absent for vertices.
    lower_pair_counts: Vec<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    simplices: Option<Vec<Vec<Simplex>>>,
}

fn build(complex: &SimplicialComplex, common: &Common, list: bool) -> Result<String, CliError> {
    let counts = complex.counts();
    let lower: Vec<Option<usize>> = (0..counts.len())
        .map(|n| {
            if n == 0 {
                None
            } else {
                complex.lower_pair_count(n).ok()
            }
        })
        .collect();
    match common.format {
        Format::Json => Ok(json(&BuildReport {
            max_dim: common.max_dim,
            counts,
            lower_pair_counts: lower,
            simplices: list.then(|| {
                (0..complex.num_levels())
                    .map(|n| complex.simplices(n).to_vec())
                    .collect()
            }),
        })),
        Format::Csv => {
            let mut out = String::from("dim,count,lower_pairs\n");
            for (n, (c, m)) in counts.iter().zip(&lower).enumerate() {
                let m = m.map(|m| m.to_string()).unwrap_or_default();
                writeln!(out, "{n},{c},{m}").unwrap();
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported(common.format, "build")),
    }
}

fn spectrum_cmd(
    complex: &SimplicialComplex,
    common: &Common,
    dim: usize,
    tolerance: f64,
) -> Result<String, CliError> {
    require_dim(complex, dim, 0)?;
    let mut report = spectrum::<f64>(complex, dim, tolerance)?;
    for x in &mut report.eigenvalues {
        *x = round12(*x);
    }
    match common.format {
        Format::Json => Ok(json(&report)),
        Format::Csv => {
            let mut out = String::from("index,eigenvalue\n");
            for (i, x) in report.eigenvalues.iter().enumerate() {
                writeln!(out, "{i},{x}").unwrap();
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported(common.format, "spectrum")),
    }
}

fn parse_simplex(text: &str) -> Result<Simplex, CliError> {
    let ids = text
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<u32>, _>>()
        .map_err(|_| {
            CliError::Usage(format!(
                "--source `{text}` is not a comma-joined list of vertex ids"
            ))
        })?;
    Ok(Simplex::from_ids(&ids)?)
}

#[derive(Serialize)]
struct Entry {
    target: Simplex,
    q: f64,
}

#[derive(Serialize)]
struct WalkReport {
    dim: usize,
    source: Simplex,
    estimator: Estimator,
    table: Vec<Entry>,
}

fn walk_cmd(
    complex: &SimplicialComplex,
    common: &Common,
    dim: usize,
    source: &str,
    args: &WalkArgs,
) -> Result<String, CliError> {
    require_dim(complex, dim, 1)?;
    let estimator = estimator(args)?;
    let source = parse_simplex(source)?;
    if source.dim() != dim {
        return Err(CliError::Usage(format!(
            "--source {source} is not a {dim}-simplex"
        )));
    }
    let walk = Walk::new(WalkSpace::new(complex, dim)?);
    walk.space().active_index_of(&source)?;
    let table = match estimator {
        Estimator::FiniteTime { time_steps } => finite_time_average(&walk, &source, time_steps)?,
        Estimator::Spectral => {
            let spectrum = Spectrum::compute(&walk, DEFAULT_PHASE_TOLERANCE)?;
            long_time_average_spectral(&walk, &spectrum, &source)?
        }
    };
    let entries: Vec<Entry> = table
        .values
        .into_iter()
        .map(|(target, q)| Entry {
            target,
            q: round12(q),
        })
        .collect();
    match common.format {
        Format::Json => Ok(json(&WalkReport {
            dim,
            source,
            estimator,
            table: entries,
        })),
        Format::Csv => {
            let mut out = String::from("target,q\n");
            for e in &entries {
                writeln!(out, "{},{}", csv_simplex(&e.target), e.q).unwrap();
            }
            Ok(out)
        }
        Format::Dot => Err(unsupported(common.format, "walk")),
    }
}

#[derive(Serialize)]
struct DetectReport<'a> {
    dim: usize,
    estimator: Estimator,
    threshold: Threshold,
    communities: &'a [Vec<Simplex>],
    /// Absent when no two simplices are lower adjacent.
    modularity: Option<f64>,
}

fn detect(
    complex: &SimplicialComplex,
    common: &Common,
    dim: usize,
    args: &WalkArgs,
    threshold: ThresholdMode,
) -> Result<String, CliError> {
    require_dim(complex, dim, 1)?;
    let options = DetectOptions {
        estimator: estimator(args)?,
        threshold: match threshold {
            ThresholdMode::Strict => Threshold::Strict,
            ThresholdMode::Geq => Threshold::AtLeast,
        },
        ..Default::default()
    };
    let detection = detect_communities::<f64>(complex, dim, &options)?;
    let partition = &detection.partition;
    let modularity = match simplicial_modularity::<f64>(complex, dim, partition) {
        Ok(report) => Some(round12(report.q)),
        Err(Error::NoAdjacency(_)) => None,
        Err(e) => return Err(e.into()),
    };
    match common.format {
        Format::Json => Ok(json(&DetectReport {
            dim,
            estimator: options.estimator,
            threshold: options.threshold,
            communities: partition.communities(),
            modularity,
        })),
        Format::Csv => {
            let mut out = String::from("community,simplex\n");
            for (c, members) in partition.communities().iter().enumerate() {
                for s in members {
                    writeln!(out, "{c},{}", csv_simplex(s)).unwrap();
                }
            }
            Ok(out)
        }
        Format::Dot => Ok(dot(complex, partition)),
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum PartitionFile {
    Tagged {
        dim: Option<usize>,
        communities: Vec<Vec<Simplex>>,
    },
    Bare(Vec<Vec<Simplex>>),
}

#[derive(Serialize)]
struct ModularityOutput {
    dim: usize,
    q: f64,
    m_n: usize,
    contributions: Vec<f64>,
}

fn modularity(
    complex: &SimplicialComplex,
    common: &Common,
    dim: Option<usize>,
    path: &std::path::Path,
) -> Result<String, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let parsed: PartitionFile =
        serde_json::from_str(&text).map_err(|e| CliError::Partition(e.to_string()))?;
    let (file_dim, communities) = match parsed {
        PartitionFile::Tagged { dim, communities } => (dim, communities),
        PartitionFile::Bare(communities) => (None, communities),
    };
    let inferred = communities.iter().flatten().next().map(Simplex::dim);
    let dim = dim.or(file_dim).or(inferred).ok_or_else(|| {
        CliError::Partition("cannot tell the dimension of an empty partition".into())
    })?;
    require_dim(complex, dim, 1)?;
    let partition = CommunityPartition::new(complex, dim, communities)?;
    let report = simplicial_modularity::<f64>(complex, dim, &partition)?;
    let output = ModularityOutput {
        dim,
        q: round12(report.q),
        m_n: report.m_n,
        contributions: report.contributions.iter().map(|&x| round12(x)).collect(),
    };
    match common.format {
        Format::Json => Ok(json(&output)),
        Format::Csv => {
            let mut out = String::from("community,contribution\n");
            for (c, x) in output.contributions.iter().enumerate() {
                writeln!(out, "{c},{x}").unwrap();
            }
            writeln!(out, "total,{}", output.q).unwrap();
            Ok(out)
        }
        Format::Dot => Err(unsupported(common.format, "modularity")),
    }
}

#[derive(Serialize)]
struct VerifyEntry {
    dim: usize,
    chain: ChainIdentityReport,
    /// `None` when there are no (dim+1)-simplices to compare against.
    symmetry: Option<bool>,
}

#[derive(Serialize)]
struct VerifyReport {
    all_hold: bool,
    checks: Vec<VerifyEntry>,
}

fn verify(
    complex: &SimplicialComplex,
    common: &Common,
    dim: Option<usize>,
) -> Result<String, CliError> {
    let dims: Vec<usize> = match dim {
        Some(n) => {
            require_dim(complex, n, 0)?;
            vec![n]
        }
        None => (0..complex.num_levels()).collect(),
    };
    let mut checks = Vec::new();
    for n in dims {
        let chain = verify_chain_identities(complex, n)?;
        let symmetry = if complex.count(n + 1) > 0 {
            Some(verify_symmetry(complex, n)?.holds)
        } else {
            None
        };
        checks.push(VerifyEntry {
            dim: n,
            chain,
            symmetry,
        });
    }
    let all_hold = checks
        .iter()
        .all(|c| c.chain.all_hold() && c.symmetry != Some(false));
    let report = VerifyReport { all_hold, checks };
    let text = match common.format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut out = String::from("dim,boundary_of_boundary,up_down,down_up,symmetry\n");
            for c in &report.checks {
                let sym = c.symmetry.map(|b| b.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{sym}",
                    c.dim, c.chain.boundary_of_boundary, c.chain.up_down, c.chain.down_up
                )
                .unwrap();
            }
            out
        }
        Format::Dot => return Err(unsupported(common.format, "verify")),
    };
    if !report.all_hold {
        eprint!("{text}");
        return Err(CliError::Usage("identity check failed".into()));
    }
    Ok(text)
}
