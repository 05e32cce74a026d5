use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::{Error, Rational};

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&r.to_string()),
        None => s.serialize_none(),
    }
}

pub fn ser_display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn ser_point<S: Serializer>(p: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(p.iter().map(|c| c.to_string()))
}

pub fn ser_points<S: Serializer>(ps: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ps.iter().map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>()))
}

/// Version tag of the machine-readable report.
pub const SCHEMA: &str = "centralnorm.report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verdicts,
    Undecided,
    InputError,
    ResourceLimit,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verdicts => 0,
            Status::Undecided => 1,
            Status::InputError => 2,
            Status::ResourceLimit => 3,
        }
    }

    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::ResourceLimit { .. } => Status::ResourceLimit,
            Error::NonGenericSpecialization(_)
            | Error::ShapePosition { .. }
            | Error::UnsupportedIrrational(_)
            | Error::NotZeroDimensional(_) => Status::Undecided,
            _ => Status::InputError,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: Option<String>,
    pub seed: u64,
    pub max_steps: u64,
    pub steps_used: u64,
    pub elapsed_ms: u64,
    pub status: Status,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub certificates: Value,
    #[serde(skip)]
    pub text: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "centralnorm {} {}{}\n",
            self.version,
            self.command,
            self.input.as_deref().map(|i| format!(" {i}")).unwrap_or_default()
        );
        out.push_str(&self.text);
        if let Some(e) = &self.error {
            out.push_str(&format!("error: {e}\n"));
        }
        out.push_str(&format!(
            "status: {} (exit {}); seed {}, {} steps, {} ms\n",
            serde_json::to_value(self.status).unwrap().as_str().unwrap(),
            self.exit_code,
            self.seed,
            self.steps_used,
            self.elapsed_ms
        ));
        out
    }
}
