//! Command-line front end. [`run`] parses arguments and returns the exit code with the output text.
//!
//! Exit codes: 0 success, 1 when `member` decides false, 2 on input errors,
//! 3 when a validation fails or decision procedures disagree.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructibility::{construct_hook, construct_two_col, construct_two_row, ConstructionTrace};
use crate::diagrams::YoungDiagram;
use crate::jdt::schuetzenberger;
use crate::meanders::{intersect, intersection_2row, meander, render_svg};
use crate::membership::{dominance_member, hook_a, two_col_a, two_row_a};
use crate::oracle::{
    cross_validate, enumerate_row_standard, enumerate_standard, family_shapes, intersection_graph, k_pairs, run_batch,
};
use crate::tableaux::{RowStandardTableau, StandardTableau};
use crate::vogan::vogan_set;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "springer", version, about = "Membership and intersections of Springer fiber components")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the flag of τ lies in the component of T.
    Member {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value_t = CriterionArg::Dominance)]
        criterion: CriterionArg,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Run the insertion algorithm of the shape's family.
    Construct {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Meander of two standard two-row tableaux.
    Meander {
        #[arg(long = "T")]
        t: String,
        #[arg(long = "S")]
        s: String,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Classify the intersection of two components.
    Intersect {
        #[arg(long = "T")]
        t: String,
        #[arg(long = "S")]
        s: String,
    },
    /// Codimension-one pairs generated by the Vogan transformations.
    Vogan {
        #[arg(long)]
        shape: String,
    },
    /// List tableaux or member pairs of a shape.
    Enumerate {
        #[arg(long)]
        shape: String,
        #[arg(long, group = "what")]
        standard: bool,
        #[arg(long = "row-standard", group = "what")]
        row_standard: bool,
        #[arg(long = "k-pairs", group = "what")]
        k_pairs: bool,
    },
    /// Check every equivalence on all pairs of the given shapes.
    CrossValidate {
        #[arg(long, conflicts_with = "max_boxes", required_unless_present = "max_boxes")]
        shape: Option<String>,
        #[arg(long = "max-boxes")]
        max_boxes: Option<usize>,
        /// key=value lines instead of a table.
        #[arg(long)]
        structured: bool,
    },
    /// The Schützenberger involution of T.
    Schuetzenberger {
        #[arg(long = "T")]
        t: String,
    },
    /// Decide every "τ|T" line of a file.
    Batch {
        #[arg(long)]
        file: PathBuf,
    },
    /// Intersection graph of the components of a shape.
    Graph {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    tau: String,
    #[arg(long = "T")]
    t: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CriterionArg {
    Dominance,
    Inductive,
    Construct,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    Hook,
    TwoRow,
    TwoColumn,
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::Hook => "hook",
            FamilyArg::TwoRow => "two_row",
            FamilyArg::TwoColumn => "two_col",
        }
    }
}

enum Failure {
    Input(String),
    Validation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) => Failure::Validation(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(i32, String), Failure>;

/// Runs the command line `argv`, which excludes the program name.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("springer".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(r) => r,
        Err(Failure::Input(m)) => (EXIT_INPUT, format!("error: {m}\n")),
        Err(Failure::Validation(m)) => (EXIT_VALIDATION, format!("validation failed: {m}\n")),
    }
}

fn shape(s: &str) -> std::result::Result<YoungDiagram, Failure> {
    s.parse().map_err(|e: Error| Failure::Input(format!("--shape {s:?}: {e}")))
}

fn row_standard(flag: &str, s: &str) -> std::result::Result<RowStandardTableau, Failure> {
    s.parse().map_err(|e: Error| Failure::Input(format!("{flag} {s:?}: {e}")))
}

fn standard(flag: &str, s: &str) -> std::result::Result<StandardTableau, Failure> {
    s.parse().map_err(|e: Error| Failure::Input(format!("{flag} {s:?}: {e}")))
}

fn family_shape(y: &YoungDiagram) -> std::result::Result<(), Failure> {
    if y.classify().is_general() {
        return Err(Error::GeneralShape(y.to_string()).into());
    }
    Ok(())
}

fn write_file(path: &PathBuf, text: &str) -> std::result::Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Families to run: the override if given (and valid), else all that apply.
fn families(t: &StandardTableau, family: Option<FamilyArg>) -> std::result::Result<Vec<FamilyArg>, Failure> {
    let fam = t.shape().classify();
    let applicable: Vec<FamilyArg> = [
        (fam.hook, FamilyArg::Hook),
        (fam.two_row, FamilyArg::TwoRow),
        (fam.two_column, FamilyArg::TwoColumn),
    ]
    .into_iter()
    .filter_map(|(ok, f)| ok.then_some(f))
    .collect();
    match family {
        Some(f) if applicable.contains(&f) => Ok(vec![f]),
        Some(f) => Err(Failure::Input(format!("shape {} is not {}", t.shape(), f.name()))),
        None if applicable.is_empty() => Err(Error::GeneralShape(t.shape().to_string()).into()),
        None => Ok(applicable),
    }
}

fn inductive(tau: &RowStandardTableau, t: &StandardTableau, f: FamilyArg) -> crate::Result<bool> {
    match f {
        FamilyArg::Hook => hook_a(tau, t),
        FamilyArg::TwoRow => two_row_a(tau, t),
        FamilyArg::TwoColumn => two_col_a(tau, t),
    }
}

fn construction(tau: &RowStandardTableau, t: &StandardTableau, f: FamilyArg) -> crate::Result<ConstructionTrace> {
    match f {
        FamilyArg::Hook => construct_hook(tau, t),
        FamilyArg::TwoRow => construct_two_row(tau, t),
        FamilyArg::TwoColumn => construct_two_col(tau, t),
    }
}

fn member_cmd(pair: &PairArgs, criterion: CriterionArg, family: Option<FamilyArg>) -> Outcome {
    let tau = row_standard("--tau", &pair.tau)?;
    let t = standard("--T", &pair.t)?;
    if tau.shape() != t.shape() {
        return Err(Error::ShapeMismatch(tau.shape().to_string(), t.shape().to_string()).into());
    }
    let fams = families(&t, family)?;
    let mut verdicts: Vec<(String, bool)> = Vec::new();
    let mut witness = None;
    if matches!(criterion, CriterionArg::Dominance | CriterionArg::All) {
        let v = dominance_member(&tau, &t)?;
        witness = v.witness.map(|w| w.to_string());
        verdicts.push(("dominance".into(), v.member));
    }
    if matches!(criterion, CriterionArg::Inductive | CriterionArg::All) {
        for &f in &fams {
            let label = match f {
                FamilyArg::Hook => "hook_A",
                FamilyArg::TwoRow => "two_row_A",
                FamilyArg::TwoColumn => "two_col_A",
            };
            verdicts.push((label.into(), inductive(&tau, &t, f)?));
        }
    }
    if matches!(criterion, CriterionArg::Construct | CriterionArg::All) {
        for &f in &fams {
            let trace = construction(&tau, &t, f)?;
            if witness.is_none() {
                witness = trace.failure().map(|x| x.to_string());
            }
            let label = if fams.len() > 1 { format!("constructible_{}", f.name()) } else { "constructible".into() };
            verdicts.push((label, trace.succeeded()));
        }
    }
    let first = verdicts[0].1;
    if verdicts.iter().any(|(_, v)| *v != first) {
        let detail: Vec<String> = verdicts.iter().map(|(l, v)| format!("{l}={v}")).collect();
        return Ok((EXIT_VALIDATION, format!("disagreement: {}\n", detail.join(" "))));
    }
    let labels: Vec<&str> = verdicts.iter().map(|(l, _)| l.as_str()).collect();
    let mut out = format!("{first} ({})", labels.join("="));
    if let (false, Some(w)) = (first, witness) {
        let _ = write!(out, ": {w}");
    }
    out.push('\n');
    Ok((if first { EXIT_OK } else { EXIT_FALSE }, out))
}

fn construct_cmd(pair: &PairArgs, trace: bool, family: Option<FamilyArg>) -> Outcome {
    let tau = row_standard("--tau", &pair.tau)?;
    let t = standard("--T", &pair.t)?;
    let fams = families(&t, family)?;
    let mut out = String::new();
    let mut results = Vec::new();
    for &f in &fams {
        let tr = construction(&tau, &t, f)?;
        if fams.len() > 1 {
            let _ = writeln!(out, "[{}]", tr.algorithm);
        }
        if trace {
            out.push_str(&tr.render());
        } else {
            match tr.failure() {
                None => out.push_str("constructible\n"),
                Some(x) => {
                    let _ = writeln!(out, "{x}");
                }
            }
        }
        results.push(tr.succeeded());
    }
    if results.windows(2).any(|w| w[0] != w[1]) {
        return Ok((EXIT_VALIDATION, format!("{out}disagreement between algorithms\n")));
    }
    Ok((EXIT_OK, out))
}

fn meander_cmd(t: &str, s: &str, svg: Option<&PathBuf>) -> Outcome {
    let t = standard("--T", t)?;
    let s = standard("--S", s)?;
    let m = meander(&t, &s)?;
    let x = intersection_2row(&t, &s)?;
    if let Some(p) = svg {
        write_file(p, &render_svg(&m))?;
    }
    Ok((EXIT_OK, format!("{m}, codim1={}\n", x.codim_one)))
}

fn dispatch(cmd: Command) -> Outcome {
    match cmd {
        Command::Member { pair, criterion, family } => member_cmd(&pair, criterion, family),
        Command::Construct { pair, trace, family } => construct_cmd(&pair, trace, family),
        Command::Meander { t, s, svg } => meander_cmd(&t, &s, svg.as_ref()),
        Command::Intersect { t, s } => {
            let t = standard("--T", &t)?;
            let s = standard("--S", &s)?;
            let r = intersect(&t, &s)?;
            Ok((EXIT_OK, format!("family={}, {r}\n", r.family)))
        }
        Command::Vogan { shape: sh } => {
            let y = shape(&sh)?;
            family_shape(&y)?;
            let mut out = String::new();
            for p in vogan_set(&y) {
                let (a, b) = p.key();
                let path: Vec<String> = p.provenance.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{a} | {b}  seed={} swap={} path=[{}]", p.seed, p.seed_swap, path.join(" "));
            }
            Ok((EXIT_OK, out))
        }
        Command::Enumerate { shape: sh, standard: _, row_standard: rows, k_pairs: kp } => {
            let y = shape(&sh)?;
            let mut out = String::new();
            if kp {
                for (tau, t) in k_pairs(&y)? {
                    let _ = writeln!(out, "{tau}|{t}");
                }
            } else if rows {
                for t in enumerate_row_standard(&y) {
                    let _ = writeln!(out, "{t}");
                }
            } else {
                for t in enumerate_standard(&y) {
                    let _ = writeln!(out, "{t}");
                }
            }
            Ok((EXIT_OK, out))
        }
        Command::CrossValidate { shape: sh, max_boxes, structured } => {
            let shapes = match (sh, max_boxes) {
                (Some(s), _) => vec![shape(&s)?],
                (None, Some(m)) => family_shapes(m),
                (None, None) => return Err(Failure::Input("give --shape or --max-boxes".into())),
            };
            let mut out = String::new();
            let mut failures = 0;
            for y in &shapes {
                let r = cross_validate(y)?;
                failures += r.failure_count();
                out.push_str(&if structured { r.structured() } else { r.to_string() });
            }
            let _ = writeln!(out, "{} shapes, {failures} failures", shapes.len());
            Ok((if failures == 0 { EXIT_OK } else { EXIT_VALIDATION }, out))
        }
        Command::Schuetzenberger { t } => {
            let t = standard("--T", &t)?;
            Ok((EXIT_OK, format!("{}\n", schuetzenberger(&t))))
        }
        Command::Batch { file } => {
            let text = std::fs::read_to_string(&file).map_err(|e| Failure::Input(format!("{}: {e}", file.display())))?;
            let lines = run_batch(&text);
            let mut out = String::new();
            for l in &lines {
                let _ = writeln!(out, "{l}");
            }
            let code = if lines.iter().any(|l| l.result.is_err()) { EXIT_INPUT } else { EXIT_OK };
            Ok((code, out))
        }
        Command::Graph { shape: sh, dot } => {
            let y = shape(&sh)?;
            let g = intersection_graph(&y)?;
            if let Some(p) = dot {
                write_file(&p, &g.to_dot())?;
            }
            Ok((EXIT_OK, g.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn member_all_example() {
        let (code, out) = run(["member", "--tau", "2,3,5/4/1", "--T", "1,3,4/2/5", "--criterion", "all"]);
        assert_eq!(code, 0);
        assert_eq!(out, "true (dominance=hook_A=constructible)\n");
    }

    #[test]
    fn member_false_exit() {
        let (code, out) = run(["member", "--tau", "2,3/1", "--T", "1,2/3"]);
        assert_eq!(code, EXIT_FALSE);
        assert!(out.starts_with("false (dominance)"), "{out}");
    }

    #[test]
    fn meander_example() {
        let (code, out) = run(["meander", "--T", "1,2,4,6,7/3,5,8,9", "--S", "1,2,5,6,7/3,4,8,9"]);
        assert_eq!(code, 0);
        assert_eq!(out, "even, loops=3, intervals=[2], codim1=true\n");
    }

    #[test]
    fn input_errors() {
        assert_eq!(run(["frobnicate"]).0, EXIT_INPUT);
        assert_eq!(run(["member", "--tau", "1,1/2", "--T", "1,2/3"]).0, EXIT_INPUT);
        assert_eq!(run(["member", "--tau", "1,2,5/4,6/3", "--T", "1,2,5/3,4/6"]).0, EXIT_INPUT);
        assert_eq!(run(["member", "--tau", "1,2,3/4", "--T", "1,2/3", "--criterion", "all"]).0, EXIT_INPUT);
        assert_eq!(run(["member", "--tau", "1,2,3/4", "--T", "1,2,3/4", "--family", "two-column"]).0, EXIT_INPUT);
    }

    #[test]
    fn cross_validate_small() {
        let (code, out) = run(["cross-validate", "--max-boxes", "4"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("0 failures\n"));
    }

    #[test]
    fn deterministic_output() {
        let a = run(["vogan", "--shape", "3,3"]);
        let b = run(["vogan", "--shape", "3,3"]);
        assert_eq!(a, b);
        assert_eq!(run(["enumerate", "--shape", "2,1", "--k-pairs"]).1.lines().count(), 4);
    }
}
