//! Command-line front end for the naming-space kernel.

use baire_cli::{expr, render};

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num::Signed;

use baire::hyper::{
    always_zero_candidate, choice_adversary, scan_candidate, AdversaryError, ChoiceOutcome,
};
use baire::machines::OperatorMachine;
use baire::metric::{baire_dist, BaireDistance};
use baire::name::Name;
use baire::reals::Rat;
use baire::spaces::{discrete_name, seq_to_fun};
use baire::universal::{u_eval_traced, Reply};

const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "baire",
    about = "Exact computation on names of infinite objects",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an arithmetic expression to a guaranteed precision
    Eval {
        /// Expression, e.g. "1/3 + 1/6" or "lim(geom2) - 2"
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Precision exponent: the output is within 2^-PREC of the value
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(0..=256))]
        prec: u32,
    },
    /// Print the rounds of a dialogue evaluation
    Trace {
        #[command(subcommand)]
        dialogue: TraceKind,
    },
    /// Distance between two builtin names under the identity enumeration
    Dist {
        /// Scan depth; beyond it the distance is only certified
        #[arg(long, default_value_t = 32)]
        cutoff: u64,
        left: BuiltinName,
        right: BuiltinName,
    },
    /// Run the closed-choice adversary against a naive candidate realizer
    ChoiceDemo {
        #[arg(long, default_value_t = 64)]
        budget: u64,
        /// "always-zero" or "scan-K" for a scan depth K
        #[arg(long)]
        candidate: Candidate,
    },
}

#[derive(Subcommand)]
enum TraceKind {
    /// Dialogue of the sequence-as-function strategy for the sequence
    /// x_i = i, evaluated at index --i and accuracy --q
    Seq2fun {
        #[arg(long)]
        i: u64,
        /// Accuracy question, a positive rational such as "1/100"
        #[arg(long)]
        q: String,
        #[arg(long, default_value_t = 8)]
        loops: u64,
    },
}

/// Total names of Baire space for the distance command.
#[derive(Debug, Clone, Copy, ValueEnum)]
enum BuiltinName {
    /// n -> 0
    Zero,
    /// n -> 1
    One,
    /// n -> n
    Id,
    /// n -> n + 1
    Succ,
    /// 0 below 3, then 1
    Step3,
}

impl BuiltinName {
    fn name(self) -> Name<u64, u64> {
        match self {
            BuiltinName::Zero => Name::constant(0),
            BuiltinName::One => Name::constant(1),
            BuiltinName::Id => Name::new(|q: &u64| *q),
            BuiltinName::Succ => Name::new(|q: &u64| q + 1),
            BuiltinName::Step3 => Name::new(|q: &u64| u64::from(*q >= 3)),
        }
    }
}

#[derive(Debug, Clone)]
enum Candidate {
    AlwaysZero,
    Scan(u64),
}

impl FromStr for Candidate {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text == "always-zero" {
            return Ok(Candidate::AlwaysZero);
        }
        if let Some(depth) = text.strip_prefix("scan-") {
            return depth
                .parse()
                .map(Candidate::Scan)
                .map_err(|_| format!("bad scan depth '{depth}'"));
        }
        Err(format!(
            "unknown candidate '{text}', expected always-zero or scan-K"
        ))
    }
}

impl Candidate {
    fn machine(&self) -> OperatorMachine<u64, u64, (), u64> {
        match self {
            Candidate::AlwaysZero => always_zero_candidate(),
            Candidate::Scan(k) => scan_candidate(*k),
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval { expr, prec } => run_eval(&expr, prec),
        Command::Trace { dialogue } => match dialogue {
            TraceKind::Seq2fun { i, q, loops } => run_trace(i, &q, loops),
        },
        Command::Dist {
            cutoff,
            left,
            right,
        } => run_dist(cutoff, left, right),
        Command::ChoiceDemo { budget, candidate } => run_choice_demo(budget, &candidate),
    }
}

fn run_eval(text: &str, prec: u32) -> ExitCode {
    let parsed = match expr::parse_expr(text) {
        Ok(parsed) => parsed,
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let value = expr::eval_expr(&parsed, prec);
    println!("{}", render::rational_line(&value));
    println!("{}", render::decimal_line(&value, prec));
    ExitCode::SUCCESS
}

fn run_trace(index: u64, accuracy: &str, loops: u64) -> ExitCode {
    let accuracy = match expr::parse_rational(accuracy) {
        Ok(q) if q.is_positive() => q,
        Ok(_) => {
            eprintln!("accuracy must be a positive rational");
            return ExitCode::from(EXIT_PARSE);
        }
        Err(err) => {
            eprintln!("{err}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    // name of the sequence x_i = i: every slice answers i at any accuracy
    let sequence: Name<(u64, Rat), Rat> = Name::new(|q: &(u64, Rat)| Rat::from_integer(q.0.into()));
    let strategy = seq_to_fun(&sequence);
    let trace = u_eval_traced(&strategy, &discrete_name(index), &accuracy, loops);
    for (k, round) in trace.rounds.iter().enumerate() {
        match &round.reply {
            Reply::Ask(batch) => {
                let items: Vec<String> = batch.iter().map(|()| "*".to_string()).collect();
                println!("round {}: ? ({})", k + 1, items.join(", "));
            }
            Reply::Answer(a) => println!("round {}: ! {}", k + 1, render::rational_line(a)),
        }
    }
    if trace.outcome.is_none() {
        eprintln!("no answer within {loops} loops");
        return ExitCode::from(EXIT_BUDGET);
    }
    ExitCode::SUCCESS
}

fn run_dist(cutoff: u64, left: BuiltinName, right: BuiltinName) -> ExitCode {
    match baire_dist(&left.name(), &right.name(), |n| n, cutoff) {
        BaireDistance::Exact { exponent } => println!("2^-{exponent} (exact)"),
        BaireDistance::ZeroCertifiedUpTo { cutoff } => println!("<= 2^-{cutoff} (certified)"),
    }
    ExitCode::SUCCESS
}

fn run_choice_demo(budget: u64, candidate: &Candidate) -> ExitCode {
    match choice_adversary(&candidate.machine(), budget) {
        Ok(ChoiceOutcome::Fooled(report)) => {
            let prefix: Vec<String> = report.name_prefix.iter().map(u64::to_string).collect();
            println!("fooling name prefix: {}", prefix.join(" "));
            println!("candidate answer on {{0}}: {}", report.first_answer);
            println!("candidate answer on fooling set: {}", report.second_answer);
            println!(
                "verdict: fooled (fooling set contains {} but not the answer {})",
                report.witness_member, report.second_answer
            );
            ExitCode::SUCCESS
        }
        Ok(ChoiceOutcome::Survived { second_answer }) => {
            println!("verdict: survived (changed answer to {second_answer})");
            ExitCode::SUCCESS
        }
        Err(AdversaryError::NotARealizer { answer }) => {
            eprintln!("not a realizer: answered {answer} on a name of {{0}}");
            ExitCode::FAILURE
        }
        Err(AdversaryError::BudgetExhausted) => {
            eprintln!("budget exhausted");
            ExitCode::from(EXIT_BUDGET)
        }
    }
}
