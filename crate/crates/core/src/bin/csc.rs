//! `csc`: command-line front end for the solvers.
//!
//! Every subcommand reads its instance from `--in FILE` (standard input when
//! omitted) and prints one JSON object. Exit codes: 0 solved, 1 no solution,
//! 2 bad input or usage, 3 instance beyond a capacity limit.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use csc_core::bribery::{self, BriberyBudget, Goal, ShiftPrices, SwapPrices, VoterAction};
use csc_core::cake::{self, Density, Division, Q};
use csc_core::circuit::{self, Circuit, MabInstance};
use csc_core::control::{self, ControlInstance};
use csc_core::gen::{self, GeneratorSpec, Model};
use csc_core::structure::{self, DeletionMode};
use csc_core::{dodgson, io, kemeny, scoring_winners, Election, Error, Rule, WinnerMode};

#[derive(Parser)]
#[command(name = "csc", version, about = "Exact solvers for voting, structure, circuit and cake-cutting problems")]
struct Cli {
    /// Print the JSON schema of the subcommand's output and exit.
    #[arg(long, global = true)]
    json_schema: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Plurality,
    Borda,
    Approval,
}

#[derive(Clone, Copy, ValueEnum)]
enum Flavor {
    Unit,
    Priced,
    Swap,
    Shift,
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    /// single-peaked
    Sp,
    /// single-crossing along the file's voter order
    Sc,
    /// group-separable
    Gs,
    /// voters to delete until single-peaked
    VoterDeletion,
    /// alternatives to delete until single-peaked
    AlternativeDeletion,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    ImpartialCulture,
    SinglePeaked,
    #[value(name = "euclidean-1d")]
    Euclidean1d,
}

#[derive(Clone, Copy, ValueEnum)]
enum Protocol {
    CutAndChoose,
    LastDiminisher,
}

#[derive(clap::Args)]
struct Input {
    /// Instance file; standard input when omitted.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<String>,
}

#[derive(clap::Args)]
struct RuleArgs {
    #[arg(long, value_enum, default_value = "plurality")]
    rule: RuleArg,
    /// Approval depth for `--rule approval`.
    #[arg(long, default_value_t = 1)]
    d: usize,
}

impl RuleArgs {
    fn rule(&self) -> Rule {
        match self.rule {
            RuleArg::Plurality => Rule::Plurality,
            RuleArg::Borda => Rule::Borda,
            RuleArg::Approval => Rule::Approval(self.d),
        }
    }
}

fn mode(unique: bool) -> WinnerMode {
    if unique {
        WinnerMode::Unique
    } else {
        WinnerMode::CoWinner
    }
}

#[derive(Subcommand)]
enum Command {
    /// Scores and winners under a scoring rule.
    Winners {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rule: RuleArgs,
    },
    /// Optimal Kemeny ranking.
    Kemeny {
        #[command(flatten)]
        input: Input,
        /// Reject elections with more alternatives.
        #[arg(long)]
        limit_m: Option<usize>,
        /// Enumerate all rankings instead of the dynamic program.
        #[arg(long)]
        brute_force: bool,
    },
    /// Dodgson score of an alternative.
    Dodgson {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: usize,
    },
    /// Make `--target` win d-Approval by deleting at most `--budget` voters.
    Ccdv {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        unique_winner: bool,
        /// Use the exhaustive oracle instead of the class-based search.
        #[arg(long)]
        brute_force: bool,
    },
    /// Cheapest bribery making `--target` win.
    Bribe {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rule: RuleArgs,
        #[arg(long, value_enum, default_value = "unit")]
        flavor: Flavor,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        budget: u64,
        /// Comma-separated price per voter for `--flavor priced`.
        #[arg(long, value_delimiter = ',')]
        prices: Vec<u64>,
        #[arg(long)]
        unique_winner: bool,
        #[arg(long)]
        limit_m: Option<usize>,
    },
    /// Structural properties of an election.
    Structure {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        check: Check,
    },
    /// Majoritywise accepted ballot.
    Mab {
        #[command(flatten)]
        input: Input,
        /// Exact ballot size; any size when omitted.
        #[arg(long)]
        size: Option<usize>,
        /// Require every voter to accept.
        #[arg(long)]
        unanimous: bool,
        #[arg(long)]
        limit_m: Option<usize>,
        /// Print the majority-circuit encoding for this size instead of solving.
        #[arg(long)]
        encode: bool,
    },
    /// Weight-k satisfying assignment of a circuit.
    Wcs {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Run a cake-cutting protocol and report fairness.
    Cake {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "last-diminisher")]
        protocol: Protocol,
        /// Generate this many random densities from `--seed` instead of reading a file.
        #[arg(long)]
        random_players: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate a random election.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Input(String),
    Capacity(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_capacity() {
            Failure::Capacity(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

/// What to print and whether a solution was found.
struct Outcome {
    text: String,
    found: bool,
}

fn json(v: &impl Serialize, found: bool) -> Outcome {
    Outcome {
        text: serde_json::to_string(v).expect("serializable"),
        found,
    }
}

fn read_input(input: &Input) -> Result<String, Failure> {
    let mut s = String::new();
    match &input.input {
        Some(path) => s = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))?,
        None => {
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Input(format!("standard input: {e}")))?;
        }
    }
    Ok(s)
}

fn election(input: &Input) -> Result<Election, Failure> {
    Ok(io::parse_election(&read_input(input)?)?)
}

fn capacity(what: &str, actual: usize, limit: usize) -> Failure {
    Failure::Capacity(format!("capacity exceeded: {what} is {actual}, limit is {limit}"))
}

fn rational(x: &Q) -> String {
    x.to_string()
}

#[derive(Serialize)]
struct WinnersOut {
    scores: Vec<u64>,
    winners: Vec<usize>,
    unique_winner: Option<usize>,
}

#[derive(Serialize)]
struct KemenyOut {
    score: u64,
    ranking: Vec<usize>,
}

#[derive(Serialize)]
struct DodgsonOut {
    score: u64,
}

#[derive(Serialize)]
struct CcdvOut {
    deleted: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct BribeOut {
    cost: Option<u64>,
    bribed: Option<Vec<usize>>,
    election: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct SpOut {
    single_peaked: bool,
    axis: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ScOut {
    single_crossing: bool,
    max_crossings: usize,
}

#[derive(Serialize)]
struct GsOut {
    group_separable: bool,
    split: Option<(Vec<usize>, Vec<usize>)>,
}

#[derive(Serialize)]
struct DeletionOut {
    distance: usize,
    deleted: Vec<usize>,
}

#[derive(Serialize)]
struct MabOut {
    ballot: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct WcsOut {
    assignment: Option<Vec<usize>>,
    weft: usize,
    depth: usize,
}

#[derive(Serialize)]
struct CakeOut {
    pieces: Vec<Vec<(String, String)>>,
    values: Vec<Vec<String>>,
    proportional: bool,
    envy_free: bool,
    equitable: bool,
    equal_values: bool,
    exact: bool,
}

fn schema(command: &Command) -> &'static str {
    match command {
        Command::Winners { .. } => {
            r#"{"type":"object","required":["scores","winners","unique_winner"],"properties":{"scores":{"type":"array","items":{"type":"integer"}},"winners":{"type":"array","items":{"type":"integer"}},"unique_winner":{"type":["integer","null"]}}}"#
        }
        Command::Kemeny { .. } => {
            r#"{"type":"object","required":["score","ranking"],"properties":{"score":{"type":"integer"},"ranking":{"type":"array","items":{"type":"integer"}}}}"#
        }
        Command::Dodgson { .. } => r#"{"type":"object","required":["score"],"properties":{"score":{"type":"integer"}}}"#,
        Command::Ccdv { .. } => {
            r#"{"type":"object","required":["deleted"],"properties":{"deleted":{"type":["array","null"],"items":{"type":"integer"}}}}"#
        }
        Command::Bribe { .. } => {
            r#"{"type":"object","required":["cost","bribed","election"],"properties":{"cost":{"type":["integer","null"]},"bribed":{"type":["array","null"],"items":{"type":"integer"}},"election":{"type":["array","null"],"items":{"type":"array","items":{"type":"integer"}}}}}"#
        }
        Command::Structure { check, .. } => match check {
            Check::Sp => {
                r#"{"type":"object","required":["single_peaked","axis"],"properties":{"single_peaked":{"type":"boolean"},"axis":{"type":["array","null"],"items":{"type":"integer"}}}}"#
            }
            Check::Sc => {
                r#"{"type":"object","required":["single_crossing","max_crossings"],"properties":{"single_crossing":{"type":"boolean"},"max_crossings":{"type":"integer"}}}"#
            }
            Check::Gs => {
                r#"{"type":"object","required":["group_separable","split"],"properties":{"group_separable":{"type":"boolean"},"split":{"type":["array","null"],"items":{"type":"array","items":{"type":"integer"}}}}}"#
            }
            Check::VoterDeletion | Check::AlternativeDeletion => {
                r#"{"type":"object","required":["distance","deleted"],"properties":{"distance":{"type":"integer"},"deleted":{"type":"array","items":{"type":"integer"}}}}"#
            }
        },
        Command::Mab { .. } => {
            r#"{"type":"object","required":["ballot"],"properties":{"ballot":{"type":["array","null"],"items":{"type":"integer"}}}}"#
        }
        Command::Wcs { .. } => {
            r#"{"type":"object","required":["assignment","weft","depth"],"properties":{"assignment":{"type":["array","null"],"items":{"type":"integer"}},"weft":{"type":"integer"},"depth":{"type":"integer"}}}"#
        }
        Command::Cake { .. } => {
            r#"{"type":"object","required":["pieces","values","proportional","envy_free","equitable","equal_values","exact"],"properties":{"pieces":{"type":"array","items":{"type":"array","items":{"type":"array","items":{"type":"string"}}}},"values":{"type":"array","items":{"type":"array","items":{"type":"string"}}},"proportional":{"type":"boolean"},"envy_free":{"type":"boolean"},"equitable":{"type":"boolean"},"equal_values":{"type":"boolean"},"exact":{"type":"boolean"}}}"#
        }
        Command::Gen { .. } => r#"{"type":"string","description":"election text format"}"#,
    }
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Winners { input, rule } => {
            let e = election(&input)?;
            let out = scoring_winners(&e, &rule.rule().scoring_vector(e.m())?)?;
            let unique_winner = out.unique_winner();
            Ok(json(
                &WinnersOut {
                    scores: out.scores,
                    winners: out.winners,
                    unique_winner,
                },
                true,
            ))
        }
        Command::Kemeny {
            input,
            limit_m,
            brute_force,
        } => {
            let e = election(&input)?;
            let r = if brute_force {
                kemeny::kemeny_brute_force_with_limit(&e, limit_m.unwrap_or(kemeny::DEFAULT_BRUTE_FORCE_LIMIT))?
            } else {
                if let Some(l) = limit_m.filter(|&l| e.m() > l) {
                    return Err(capacity("number of alternatives", e.m(), l));
                }
                kemeny::kemeny_dp(&e)?
            };
            Ok(json(
                &KemenyOut {
                    score: r.score,
                    ranking: r.ranking.ranking().to_vec(),
                },
                true,
            ))
        }
        Command::Dodgson { input, target } => {
            let e = election(&input)?;
            let (score, _) = dodgson::dodgson_score(&e, target)?;
            Ok(json(&DodgsonOut { score }, true))
        }
        Command::Ccdv {
            input,
            target,
            d,
            budget,
            unique_winner,
            brute_force,
        } => {
            let e = election(&input)?;
            let inst = ControlInstance::new(e, d, target, budget)?.with_mode(mode(unique_winner));
            let deleted = if brute_force {
                control::ccdv_bruteforce(&inst)?
            } else {
                control::ccdv_fpt(&inst)?
            };
            let found = deleted.is_some();
            Ok(json(&CcdvOut { deleted }, found))
        }
        Command::Bribe {
            input,
            rule,
            flavor,
            target,
            budget,
            prices,
            unique_winner,
            limit_m,
        } => {
            let e = election(&input)?;
            let goal = Goal::new(rule.rule(), target).with_mode(mode(unique_winner));
            let limit = limit_m.unwrap_or(bribery::DEFAULT_ORDER_LIMIT);
            if target >= e.m() {
                return Err(Failure::Input(format!("alternative {target} out of range")));
            }
            let plan = match flavor {
                Flavor::Unit => bribery::unit_or_priced_bribery_with_limits(
                    &e,
                    goal,
                    &BriberyBudget::unit(budget),
                    limit,
                    bribery::DEFAULT_SUBSET_LIMIT,
                )?,
                Flavor::Priced => bribery::unit_or_priced_bribery_with_limits(
                    &e,
                    goal,
                    &BriberyBudget::priced(budget, prices),
                    limit,
                    bribery::DEFAULT_SUBSET_LIMIT,
                )?,
                Flavor::Swap => {
                    let p = vec![SwapPrices::unit(e.m()); e.n()];
                    bribery::swap_bribery_with_limit(&e, goal, &p, budget, limit)?
                }
                Flavor::Shift => {
                    let p: Vec<ShiftPrices> = e.voters().iter().map(|v| ShiftPrices::linear(v.position(target))).collect();
                    bribery::shift_bribery(&e, goal, &p, budget)?
                }
            };
            let found = plan.is_some();
            let out = match plan {
                Some(plan) => BribeOut {
                    cost: Some(plan.cost),
                    bribed: Some(
                        (0..e.n())
                            .filter(|&v| plan.actions[v] != VoterAction::Unchanged)
                            .collect(),
                    ),
                    election: Some(plan.election.voters().iter().map(|v| v.ranking().to_vec()).collect()),
                },
                None => BribeOut {
                    cost: None,
                    bribed: None,
                    election: None,
                },
            };
            Ok(json(&out, found))
        }
        Command::Structure { input, check } => {
            let e = election(&input)?;
            Ok(match check {
                Check::Sp => {
                    let axis = structure::find_single_peaked_axis(&e)?;
                    json(
                        &SpOut {
                            single_peaked: axis.is_some(),
                            axis: axis.map(|a| a.ranking().to_vec()),
                        },
                        true,
                    )
                }
                Check::Sc => {
                    let order: Vec<usize> = (0..e.n()).collect();
                    let r = structure::single_crossing_report(&e, &order)?;
                    json(
                        &ScOut {
                            single_crossing: r.single_crossing,
                            max_crossings: r.max_crossings,
                        },
                        true,
                    )
                }
                Check::Gs => {
                    let split = structure::group_separable_split(&e)?;
                    json(
                        &GsOut {
                            group_separable: split.is_some(),
                            split,
                        },
                        true,
                    )
                }
                Check::VoterDeletion | Check::AlternativeDeletion => {
                    let m = if matches!(check, Check::VoterDeletion) {
                        DeletionMode::Voters
                    } else {
                        DeletionMode::Alternatives
                    };
                    let (distance, deleted) = structure::sp_deletion_distance(&e, m)?;
                    json(&DeletionOut { distance, deleted }, true)
                }
            })
        }
        Command::Mab {
            input,
            size,
            unanimous,
            limit_m,
            encode,
        } => {
            let inst = MabInstance::parse(&read_input(&input)?)?;
            if encode {
                let k = size.ok_or_else(|| Failure::Input("--encode needs --size".into()))?;
                let c = circuit::mab_to_majority_circuit(&inst, k, unanimous)?;
                return Ok(Outcome {
                    text: c.to_text().trim_end().to_string(),
                    found: true,
                });
            }
            let ballot = circuit::mab_solve_with_limit(
                &inst,
                size,
                unanimous,
                limit_m.unwrap_or(circuit::DEFAULT_MAB_LIMIT),
            )?;
            let found = ballot.is_some();
            Ok(json(&MabOut { ballot }, found))
        }
        Command::Wcs { input, k } => {
            let c = Circuit::parse(&read_input(&input)?)?;
            let assignment = circuit::wcs_solve(&c, k)?;
            let m = c.metrics();
            let found = assignment.is_some();
            Ok(json(
                &WcsOut {
                    assignment,
                    weft: m.weft,
                    depth: m.depth,
                },
                found,
            ))
        }
        Command::Cake {
            input,
            protocol,
            random_players,
            seed,
        } => {
            let densities: Vec<Density> = match random_players {
                Some(n) => {
                    let mut r = gen::rng(seed);
                    (0..n).map(|i| gen::random_density(&mut r, 1 + i % 4, i % 2 == 1)).collect()
                }
                None => cake::parse_densities(&read_input(&input)?)?,
            };
            let div: Division = match protocol {
                Protocol::CutAndChoose => {
                    if densities.len() != 2 {
                        return Err(Failure::Input("cut-and-choose needs exactly two players".into()));
                    }
                    cake::cut_and_choose(&densities[0], &densities[1])?
                }
                Protocol::LastDiminisher => cake::last_diminisher(&densities)?,
            };
            let r = cake::check_fairness(&div, &densities)?;
            Ok(json(
                &CakeOut {
                    pieces: div
                        .pieces
                        .iter()
                        .map(|p| p.intervals().iter().map(|(l, h)| (rational(l), rational(h))).collect())
                        .collect(),
                    values: r.values.iter().map(|row| row.iter().map(rational).collect()).collect(),
                    proportional: r.proportional,
                    envy_free: r.envy_free,
                    equitable: r.equitable,
                    equal_values: r.equal_values,
                    exact: div.exact,
                },
                true,
            ))
        }
        Command::Gen { model, m, n, seed } => {
            let model = match model {
                ModelArg::ImpartialCulture => Model::ImpartialCulture,
                ModelArg::SinglePeaked => Model::SinglePeaked(None),
                ModelArg::Euclidean1d => Model::Euclidean1d,
            };
            let g = gen::generate(&GeneratorSpec { model, m, n, seed })?;
            Ok(Outcome {
                text: io::write_election(&g.election).trim_end().to_string(),
                found: true,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.json_schema {
        println!("{}", schema(&cli.command));
        return ExitCode::SUCCESS;
    }
    match run(cli.command) {
        Ok(out) => {
            println!("{}", out.text);
            if out.found {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
