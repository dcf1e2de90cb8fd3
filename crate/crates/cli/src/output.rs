use serde::Serialize;
use serde_json::{json, Value};

use crate::Format;

/// A result rendered both ways from the same data.
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(text: String, data: &impl Serialize) -> Self {
        Report { text, json: serde_json::to_value(data).expect("reports serialize") }
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Text => print!("{}", self.text),
            Format::Json => println!("{}", serde_json::to_string_pretty(&self.json).expect("json")),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input or I/O: exit code 2.
    Input(String),
    /// Input understood but the analysis does not apply: exit code 1.
    Refused { code: &'static str, message: String },
}

impl CliError {
    pub fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Refused { .. } => 1,
        }
    }

    pub fn print(&self, format: Format) {
        let (code, message) = match self {
            CliError::Input(m) => ("INPUT_ERROR", m.as_str()),
            CliError::Refused { code, message } => (*code, message.as_str()),
        };
        match format {
            Format::Text => eprintln!("error [{code}]: {message}"),
            Format::Json => println!("{}", json!({ "error": { "code": code, "message": message } })),
        }
    }
}

pub fn set(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}
