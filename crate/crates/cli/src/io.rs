// zxopt - T-count reduction for quantum circuits using the ZX-calculus
// Copyright (C) 2026 - The zxopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Reading and writing circuit files.

use std::fmt;
use std::path::{Path, PathBuf};

use zxopt::circuit::qasm::{parse_qasm, write_qasm};
use zxopt::circuit::qc::{parse_qc, write_qc};
use zxopt::circuit::{Circuit, ParseError};
use zxopt::semantics::SemanticsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Qc,
    Qasm,
}

impl Format {
    /// `.qasm` is QASM and `.qc` is `.qc`; anything else is unknown.
    pub fn from_path(p: &Path) -> Option<Format> {
        match p.extension()?.to_str()? {
            "qasm" => Some(Format::Qasm),
            "qc" => Some(Format::Qc),
            _ => None,
        }
    }

    pub fn render(self, c: &Circuit) -> String {
        match self {
            Format::Qc => write_qc(c),
            Format::Qasm => write_qasm(c),
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Parse(PathBuf, ParseError),
    Io(PathBuf, std::io::Error),
    Usage(SemanticsError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(..) | CliError::Usage(_) => 1,
            CliError::Io(..) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(p, e) => write!(f, "{}: {}", p.display(), e),
            CliError::Io(p, e) => write!(f, "{}: {}", p.display(), e),
            CliError::Usage(e) => write!(f, "{}", e),
        }
    }
}

/// Parses a circuit file, choosing the reader by extension (`.qc` when
/// unknown).
pub fn read_circuit(path: &Path) -> Result<(Circuit, Format), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    let format = Format::from_path(path).unwrap_or(Format::Qc);
    let parsed = match format {
        Format::Qc => parse_qc(&text),
        Format::Qasm => parse_qasm(&text),
    };
    parsed
        .map(|c| (c, format))
        .map_err(|e| CliError::Parse(path.to_path_buf(), e))
}

pub fn write_circuit(path: &Path, c: &Circuit, format: Format) -> Result<(), CliError> {
    std::fs::write(path, format.render(c)).map_err(|e| CliError::Io(path.to_path_buf(), e))
}
