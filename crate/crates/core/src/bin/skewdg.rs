use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use skewdg::classify::{classify, crosscheck};
use skewdg::cohomology::Cohomology;
use skewdg::config::{FieldSetting, JobConfig, JobFile};
use skewdg::resolution::{gorenstein_certificate, predicted_vs_certified, GorensteinVerdict};
use skewdg::suite::run_suite;
use skewdg::transform::{apply_transform, invariance_check};
use skewdg::{AlgebraPresentation, DgSpec, Error, Field};

#[derive(Parser)]
#[command(name = "skewdg", version, about = "Cohomology and Gorenstein checks for DG skew polynomial algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cohomology dimensions and basis cocycles.
    Cohomology(Job),
    /// Case, predicted presentation and Gorenstein verdict.
    Classify(Job),
    /// Every prediction checked against computed cohomology.
    Crosscheck(Job),
    /// Gorenstein certificates for the predicted presentation, or for `--presentation`.
    Gorenstein {
        #[command(flatten)]
        job: Job,
        /// Certify this presentation instead, e.g. "gen x:1, y:1; rel y*y".
        #[arg(long)]
        presentation: Option<String>,
    },
    /// Apply a monomial substitution and compare both sides.
    Transform(Job),
    /// Run all acceptance criteria.
    #[command(name = "acceptance", visible_alias = "paper-suite")]
    Acceptance(Job),
}

#[derive(Args)]
struct Job {
    /// 3x3 matrix as JSON, entries integers or "p/q".
    #[arg(long)]
    matrix: Option<String>,
    /// Q or Fp:<prime>.
    #[arg(long, env = "SKEWDG_FIELD")]
    field: Option<String>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    hom_bound: Option<usize>,
    #[arg(long)]
    int_bound: Option<u32>,
    /// Monomial matrix C as JSON.
    #[arg(long)]
    transform: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Job settings as JSON; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Job {
    fn resolve(&self) -> Result<JobConfig, Error> {
        let base = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                JobFile::from_json(&text)?
            }
            None => JobFile::default(),
        };
        let json = |flag: &str, text: &Option<String>| -> Result<Option<Value>, Error> {
            text.as_ref().map(|t| serde_json::from_str(t).map_err(|e| Error::Parse(format!("--{flag}: {e}")))).transpose()
        };
        let flags = JobFile {
            matrix: json("matrix", &self.matrix)?,
            field: self.field.clone().map(FieldSetting::Text),
            max_degree: self.max_degree,
            hom_bound: self.hom_bound,
            int_bound: self.int_bound,
            transform: json("transform", &self.transform)?,
            seed: self.seed,
        };
        base.overlay(flags).resolve(Field::Rational)
    }
}

struct Outcome {
    summary: String,
    json: Value,
    passed: bool,
}

fn outcome<T: Serialize>(summary: String, report: &T, passed: bool) -> Result<Outcome, Error> {
    let json = serde_json::to_value(report).map_err(|e| Error::Config(format!("serializing report: {e}")))?;
    Ok(Outcome { summary, json, passed })
}

fn verdict(v: &GorensteinVerdict) -> String {
    match v {
        GorensteinVerdict::NonGorenstein { witness } => {
            let at: Vec<String> = witness.iter().map(|w| format!("(i={}, t={})", w.homological_degree, w.internal_degree)).collect();
            format!("non-Gorenstein, witness at {}", at.join(" and "))
        }
        GorensteinVerdict::ConsistentUpToCutoff { .. } => "consistent with Gorenstein up to the cutoff".into(),
    }
}

fn run(command: &Command) -> Result<(Outcome, Option<PathBuf>), Error> {
    let (job, out) = match command {
        Command::Cohomology(j) | Command::Classify(j) | Command::Crosscheck(j) | Command::Transform(j) | Command::Acceptance(j) => (j, &j.out),
        Command::Gorenstein { job, .. } => (job, &job.out),
    };
    let cfg = job.resolve()?;
    let result = match command {
        Command::Cohomology(_) => {
            let m = cfg.require_matrix()?;
            let h = Cohomology::compute(&DgSpec::new(m.clone())?, cfg.max_degree);
            let mut summary = format!("dims H^0..H^{}: {:?}\n", cfg.max_degree, h.dims());
            for d in 0..=cfg.max_degree {
                let basis: Vec<String> = h.basis(d).iter().map(ToString::to_string).collect();
                if !basis.is_empty() {
                    summary.push_str(&format!("H^{d}: {}\n", basis.join(" | ")));
                }
            }
            outcome(summary, &h.report(), true)?
        }
        Command::Classify(_) => {
            let c = classify(cfg.require_matrix()?)?;
            let summary = format!("rank {}, case {}\npresentation: {}\nprediction: {:?}\n", c.rank, c.case, c.presentation, c.predicted_gorenstein);
            outcome(summary, &c, true)?
        }
        Command::Crosscheck(_) => {
            let r = crosscheck(cfg.require_matrix()?, cfg.max_degree)?;
            let mut summary = format!(
                "case {}\ncomputed dims  {:?}\npredicted dims {:?}\nprobes passed {}/{}\n",
                r.classification.case,
                r.computed_dims,
                r.predicted_dims,
                r.probes.iter().filter(|p| p.passed()).count(),
                r.probes.len()
            );
            if !r.missing_relations.is_empty() {
                summary.push_str(&format!("relations missing from the prediction: {}\n", r.missing_relations.join(", ")));
            }
            for f in &r.falsifications {
                summary.push_str(&format!("FALSIFIED: {f}\n"));
            }
            outcome(summary, &r, r.passed())?
        }
        Command::Gorenstein { presentation: Some(text), .. } => {
            let p = AlgebraPresentation::parse(cfg.field, text)?;
            let left = gorenstein_certificate(&p, cfg.hom_bound, cfg.int_bound)?;
            let right = gorenstein_certificate(&p.opposite(), cfg.hom_bound, cfg.int_bound)?;
            let summary = format!("{p}\nleft: {}\nright: {}\n", verdict(&left), verdict(&right));
            let report = serde_json::json!({ "presentation": p, "left": left, "right": right });
            outcome(summary, &report, true)?
        }
        Command::Gorenstein { .. } => {
            let r = predicted_vs_certified(cfg.require_matrix()?, cfg.hom_bound, cfg.int_bound)?;
            let c = &r.classification;
            let mut summary = format!(
                "case {}, prediction {:?}\npresentation: {}\nleft: {}\nright: {}\n",
                c.case,
                c.predicted_gorenstein,
                c.presentation,
                verdict(&r.left),
                verdict(&r.right)
            );
            if let Some(o) = &r.observed {
                summary.push_str(&format!(
                    "cohomology also satisfies {}\nobserved presentation: {}\nleft: {}\nright: {}\n",
                    o.missing_relations.join(", "),
                    o.presentation,
                    verdict(&o.left),
                    verdict(&o.right)
                ));
            }
            for f in &r.falsifications {
                summary.push_str(&format!("FALSIFIED: {f}\n"));
            }
            outcome(summary, &r, r.passed())?
        }
        Command::Transform(_) => {
            let (m, c) = (cfg.require_matrix()?, cfg.require_transform()?);
            let r = invariance_check(m, c, cfg.max_degree)?;
            let mut summary = format!(
                "N = {}\ndims M {:?}\ndims N {:?}\nrank {} / {}, prediction {:?} / {:?}\n",
                apply_transform(c, m)?,
                r.dims_original,
                r.dims_transformed,
                r.rank_original,
                r.rank_transformed,
                r.verdict_original,
                r.verdict_transformed
            );
            for f in &r.falsifications {
                summary.push_str(&format!("FALSIFIED: {f}\n"));
            }
            outcome(summary, &r, r.passed())?
        }
        Command::Acceptance(_) => {
            let r = run_suite(cfg.seed);
            outcome(r.table(), &r, r.passed())?
        }
    };
    Ok((result, out.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((o, out)) => {
            print!("{}", o.summary);
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&o.json).expect("JSON values serialize");
                if let Err(e) = std::fs::write(&path, text + "\n") {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if o.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
