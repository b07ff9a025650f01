use std::fs;
use std::path::{Path, PathBuf};

use exactcat::category::{classify, induced_strict_map, is_iso, pullback, pushout, Category};
use exactcat::engine::{
    decide_semistable_cokernel, decide_semistable_kernel, in_maximal_exact, is_kernel_cokernel_pair, is_split_exact,
    pullback_to_json, pushout_to_json, run_suite_with, verdict_to_json, DecisionPolicy, ExactPair,
    Status as ReportStatus, Verdict, VerdictOf,
};
use exactcat::instances::{finvectq, latticez, MonoPairsQ};
use serde_json::{json, Value};
use thiserror::Error;

use crate::render;
use crate::{CategoryName, Cli, Status, Verb};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed JSON: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{path}: field `{field}`: {message}")]
    Field { path: PathBuf, field: String, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] exactcat::Error),
}

pub struct Output {
    pub json: Value,
    pub text: String,
    pub status: Status,
}

struct Input {
    path: PathBuf,
    doc: Value,
}

impl Input {
    fn read(path: &Path) -> Result<Self, CliError> {
        let raw = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
        let doc = serde_json::from_str(&raw).map_err(|source| CliError::Json { path: path.into(), source })?;
        Ok(Input { path: path.into(), doc })
    }

    /// The category tag of a morphism document, or of the first morphism in
    /// a two-morphism document.
    fn tag(&self) -> Option<&str> {
        let direct = self.doc.get("category").and_then(Value::as_str);
        direct.or_else(|| ["f", "g", "t"].iter().find_map(|k| self.doc.get(k)?.get("category")?.as_str()))
    }

    fn morphism<C: Category>(&self, cat: &C, key: Option<&str>) -> Result<C::Mor, CliError> {
        let v = match key {
            None => &self.doc,
            Some(k) => self.doc.get(k).ok_or_else(|| {
                self.field_error(k, exactcat::Error::Parse { field: k.into(), message: "missing".into() })
            })?,
        };
        cat.morphism_from_json(v).map_err(|e| {
            let field = match (&e, key) {
                (exactcat::Error::Parse { field, .. }, Some(k)) => format!("{k}.{field}"),
                (exactcat::Error::Parse { field, .. }, None) => field.clone(),
                (_, Some(k)) => k.to_string(),
                (_, None) => "matrix".to_string(),
            };
            self.field_error(&field, e)
        })
    }

    fn field_error(&self, field: &str, source: exactcat::Error) -> CliError {
        let message = match source {
            exactcat::Error::Parse { message, .. } => message,
            other => other.to_string(),
        };
        CliError::Field { path: self.path.clone(), field: field.into(), message }
    }
}

pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let cfg = cli.probe_config();
    cfg.validate()?;
    let (name, input) = match &cli.verb {
        Verb::Suite { .. } => {
            let name = cli.category.ok_or_else(|| CliError::Usage("suite requires --category".into()))?;
            (name, None)
        }
        Verb::Kernel { file }
        | Verb::Cokernel { file }
        | Verb::Pullback { file }
        | Verb::Pushout { file }
        | Verb::Classify { file }
        | Verb::Strict { file }
        | Verb::SemistableKernel { file }
        | Verb::SemistableCokernel { file }
        | Verb::PairCheck { file }
        | Verb::SplitCheck { file } => {
            let input = Input::read(file)?;
            let tagged = match input.tag() {
                Some(t) => Some(CategoryName::parse_tag(t).ok_or_else(|| {
                    input.field_error(
                        "category",
                        exactcat::Error::Parse { field: "category".into(), message: format!("unknown category {t:?}") },
                    )
                })?),
                None => None,
            };
            let name = match (cli.category, tagged) {
                (Some(a), Some(b)) if a != b => {
                    return Err(CliError::Usage(format!(
                        "--category {} disagrees with the file's tag {}",
                        a.as_str(),
                        b.as_str()
                    )))
                }
                (Some(a), _) | (None, Some(a)) => a,
                (None, None) => return Err(CliError::Usage("no category tag in the input; pass --category".into())),
            };
            (name, Some(input))
        }
    };
    match name {
        CategoryName::FinVectQ => run(&finvectq(), cli, input.as_ref()),
        CategoryName::LatticeZ => run(&latticez(), cli, input.as_ref()),
        CategoryName::MonoPairsQ => run(&MonoPairsQ::with_rules(!cli.no_instance_rules), cli, input.as_ref()),
    }
}

fn run<C: Category>(cat: &C, cli: &Cli, input: Option<&Input>) -> Result<Output, CliError> {
    let cfg = cli.probe_config();
    let policy = if cli.probe_only {
        DecisionPolicy::probe_only(cfg)
    } else {
        DecisionPolicy { structural_rules: true, instance_rules: !cli.no_instance_rules, probe: Some(cfg) }
    };
    let input = || input.expect("verb takes a file");
    let one = || input().morphism(cat, None);
    let two = |a: &str, b: &str| -> Result<_, CliError> {
        let i = input();
        Ok((i.morphism(cat, Some(a))?, i.morphism(cat, Some(b))?))
    };
    let pair = || -> Result<_, CliError> {
        let (f, g) = two("f", "g")?;
        Ok(ExactPair::new(cat, f, g)?)
    };
    let done = |json: Value, status: Status| Output { text: render::document(&json), json, status };

    Ok(match &cli.verb {
        Verb::Kernel { .. } => {
            let k = cat.kernel(&one()?);
            done(
                json!({ "kernel": cat.object_to_json(&k.obj), "inclusion": cat.morphism_to_json(&k.inclusion) }),
                Status::Ok,
            )
        }
        Verb::Cokernel { .. } => {
            let c = cat.cokernel(&one()?);
            done(
                json!({ "cokernel": cat.object_to_json(&c.obj), "projection": cat.morphism_to_json(&c.projection) }),
                Status::Ok,
            )
        }
        Verb::Pullback { .. } => {
            let (g, t) = two("g", "t")?;
            done(pullback_to_json(cat, &pullback(cat, &g, &t)?), Status::Ok)
        }
        Verb::Pushout { .. } => {
            let (f, t) = two("f", "t")?;
            done(pushout_to_json(cat, &pushout(cat, &f, &t)?), Status::Ok)
        }
        Verb::Classify { .. } => {
            let profile = classify(cat, &one()?);
            done(serde_json::to_value(profile).expect("serializable"), Status::Ok)
        }
        Verb::Strict { .. } => {
            let s = induced_strict_map(cat, &one()?)?;
            let strict = is_iso(cat, &s.fbar);
            let json = json!({
                "strict": strict,
                "fbar": cat.morphism_to_json(&s.fbar),
                "coimage": cat.morphism_to_json(&s.coimage),
                "image": cat.morphism_to_json(&s.image),
            });
            done(json, if strict { Status::Ok } else { Status::No })
        }
        Verb::SemistableKernel { .. } => verdict(cat, decide_semistable_kernel(cat, &one()?, &policy), &done)?,
        Verb::SemistableCokernel { .. } => verdict(cat, decide_semistable_cokernel(cat, &one()?, &policy), &done)?,
        Verb::PairCheck { .. } => {
            let p = pair()?;
            let mut v = verdict_to_json(cat, &in_maximal_exact(cat, &p, &policy));
            v["kernel_cokernel_pair"] = is_kernel_cokernel_pair(cat, &p).into();
            let status = verdict_status(v["verdict"].as_str());
            done(v, status)
        }
        Verb::SplitCheck { .. } => {
            let split = is_split_exact(cat, &pair()?);
            done(json!({ "split": split }), if split { Status::Ok } else { Status::No })
        }
        Verb::Suite { name } => {
            let report = run_suite_with(cat, *name, &cfg, !cli.no_instance_rules);
            let status = match report.status {
                ReportStatus::Ok => Status::Ok,
                _ => Status::No,
            };
            Output { text: render::report(&report), json: report.to_json(), status }
        }
    })
}

fn verdict<C: Category>(
    cat: &C,
    v: exactcat::Result<VerdictOf<C>>,
    done: &dyn Fn(Value, Status) -> Output,
) -> Result<Output, CliError> {
    Ok(match v {
        Ok(v) => {
            let status = match &v {
                Verdict::Yes(_) => Status::Ok,
                Verdict::No(_) => Status::No,
                Verdict::Unknown { .. } => Status::Unknown,
            };
            done(verdict_to_json(cat, &v), status)
        }
        Err(e @ (exactcat::Error::NotACokernel | exactcat::Error::NotAKernel)) => {
            done(json!({ "verdict": "inapplicable", "reason": e.to_string() }), Status::No)
        }
        Err(e) => return Err(e.into()),
    })
}

fn verdict_status(v: Option<&str>) -> Status {
    match v {
        Some("yes") => Status::Ok,
        Some("unknown") => Status::Unknown,
        _ => Status::No,
    }
}
