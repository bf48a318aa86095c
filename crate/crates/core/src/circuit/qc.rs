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

//! Reader and writer for the `.qc` circuit format.
//!
//! ```text
//! .v a b c
//! .i a b
//! .o c
//! BEGIN
//! H c
//! tof a b c
//! T* c
//! END
//! ```
//!
//! Besides the standard gate names, two extensions are understood so that
//! every circuit this crate produces can be written and read back exactly:
//! `swap a b`, and `RZ(r) a` / `RX(r) a` for a phase of `r·π` where `r` is
//! `p/q`, a variable `a3`, or a combination such as `-a3+1/2`.

use std::collections::HashMap;
use std::fmt::Write;

use num_rational::Rational64;

use super::{Circuit, Gate, ParseError, Qubit};
use crate::phase::{Angle, Phase, SignedVar, VarId};

pub fn parse_qc(text: &str) -> Result<Circuit, ParseError> {
    let mut names: Option<Vec<String>> = None;
    let mut index: HashMap<String, Qubit> = HashMap::new();
    let mut circuit: Option<Circuit> = None;
    let mut in_body = false;
    let mut ended = false;

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if ended {
            return Err(syntax(line_no, "content after END"));
        }
        if !in_body {
            if let Some(rest) = line.strip_prefix('.') {
                let mut parts = rest.split(|c: char| c.is_whitespace() || c == ',');
                let directive = parts.next().unwrap_or("");
                let args: Vec<String> = parts.filter(|s| !s.is_empty()).map(String::from).collect();
                match directive {
                    "v" => {
                        if names.is_some() {
                            return Err(syntax(line_no, "duplicate .v line"));
                        }
                        for (k, n) in args.iter().enumerate() {
                            if index.insert(n.clone(), k).is_some() {
                                return Err(syntax(line_no, &format!("qubit `{}` declared twice", n)));
                            }
                        }
                        names = Some(args);
                    }
                    "i" | "o" | "c" | "ol" => {}
                    _ => return Err(syntax(line_no, &format!("unknown directive .{}", directive))),
                }
            } else if line.eq_ignore_ascii_case("BEGIN") {
                let n = names.clone().ok_or_else(|| syntax(line_no, "BEGIN before .v"))?;
                circuit = Some(Circuit::with_names(n));
                in_body = true;
            } else {
                return Err(syntax(line_no, &format!("unexpected `{}` before BEGIN", line)));
            }
            continue;
        }
        if line.eq_ignore_ascii_case("END") {
            in_body = false;
            ended = true;
            continue;
        }
        let c = circuit.as_mut().expect("body implies circuit");
        for g in parse_gate_line(line, line_no, &index)? {
            c.push(g).map_err(|source| ParseError::Circuit {
                line: line_no,
                source,
            })?;
        }
    }
    if in_body {
        return Err(syntax(text.lines().count(), "missing END"));
    }
    circuit.ok_or_else(|| syntax(text.lines().count().max(1), "missing BEGIN"))
}

fn syntax(line: usize, message: &str) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.to_string(),
    }
}

fn parse_gate_line(line: &str, line_no: usize, index: &HashMap<String, Qubit>) -> Result<Vec<Gate>, ParseError> {
    let mut parts = line.split_whitespace();
    let name = parts.next().expect("non-empty line");
    let mut qs = Vec::new();
    for arg in parts.flat_map(|p| p.split(',')).filter(|s| !s.is_empty()) {
        let q = index.get(arg).ok_or_else(|| ParseError::UndeclaredQubit {
            line: line_no,
            name: arg.to_string(),
        })?;
        qs.push(*q);
    }
    let arity = |expected: &str, ok: bool| {
        if ok {
            Ok(())
        } else {
            Err(ParseError::Arity {
                line: line_no,
                gate: name.to_string(),
                expected: expected.to_string(),
                found: qs.len(),
            })
        }
    };

    if let Some(arg) = rotation_arg(name, "RZ").or_else(|| rotation_arg(name, "RX")) {
        arity("1", qs.len() == 1)?;
        let p = parse_phase_expr(arg).ok_or_else(|| ParseError::NonRationalAngle {
            line: line_no,
            text: arg.to_string(),
        })?;
        let is_z = name[..2].eq_ignore_ascii_case("RZ");
        return Ok(vec![if is_z {
            Gate::ZPhase(qs[0], p)
        } else {
            Gate::XPhase(qs[0], p)
        }]);
    }

    let one = |a: Angle| -> Result<Vec<Gate>, ParseError> {
        arity("1", qs.len() == 1)?;
        Ok(vec![Gate::z(qs[0], a)])
    };
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "h" => {
            arity("1", qs.len() == 1)?;
            Ok(vec![Gate::H(qs[0])])
        }
        "t" => one(Angle::QUARTER_PI),
        "t*" => one(Angle::new(7, 4)),
        "s" | "p" => one(Angle::HALF_PI),
        "s*" | "p*" => one(Angle::new(3, 2)),
        "z" => match qs.len() {
            1 => Ok(vec![Gate::z(qs[0], Angle::PI)]),
            2 => Ok(vec![Gate::Cz(qs[0], qs[1])]),
            3 => Ok(vec![Gate::Ccz(qs[0], qs[1], qs[2])]),
            _ => arity("1, 2 or 3", false).map(|_| vec![]),
        },
        "y" => {
            arity("1", qs.len() == 1)?;
            Ok(vec![Gate::z(qs[0], Angle::PI), Gate::x(qs[0], Angle::PI)])
        }
        "x" | "not" | "tof" => match qs.len() {
            1 => Ok(vec![Gate::x(qs[0], Angle::PI)]),
            2 => Ok(vec![Gate::cnot(qs[0], qs[1])]),
            3 => Ok(vec![Gate::tof(qs[0], qs[1], qs[2])]),
            _ => arity("1, 2 or 3", false).map(|_| vec![]),
        },
        "t1" => {
            arity("1", qs.len() == 1)?;
            Ok(vec![Gate::x(qs[0], Angle::PI)])
        }
        "t2" | "cnot" => {
            arity("2", qs.len() == 2)?;
            Ok(vec![Gate::cnot(qs[0], qs[1])])
        }
        "t3" => {
            arity("3", qs.len() == 3)?;
            Ok(vec![Gate::tof(qs[0], qs[1], qs[2])])
        }
        "swap" => {
            arity("2", qs.len() == 2)?;
            Ok(vec![Gate::Swap(qs[0], qs[1])])
        }
        _ => Err(ParseError::UnsupportedGate {
            line: line_no,
            name: name.to_string(),
        }),
    }
}

fn rotation_arg<'a>(name: &'a str, prefix: &str) -> Option<&'a str> {
    if name.len() > prefix.len() + 2 && name[..prefix.len()].eq_ignore_ascii_case(prefix) {
        name[prefix.len()..].strip_prefix('(')?.strip_suffix(')')
    } else {
        None
    }
}

/// Parses `p/q`, `p`, `a3`, `-a3`, `a3+1/2`, `-a3-1/4` (units of π).
pub(crate) fn parse_phase_expr(s: &str) -> Option<Phase> {
    let s = s.trim();
    let (negated, body) = match s.strip_prefix('-') {
        Some(rest) if rest.starts_with('a') => (true, rest),
        _ => (false, s),
    };
    if let Some(rest) = body.strip_prefix('a') {
        let split = rest.find(['+', '-']).unwrap_or(rest.len());
        let id: u32 = rest[..split].parse().ok()?;
        let constant = if split < rest.len() {
            let tail = &rest[split..];
            let tail = tail.strip_prefix('+').unwrap_or(tail);
            parse_ratio(tail)?
        } else {
            Angle::ZERO
        };
        return Some(Phase {
            constant,
            var: Some(SignedVar {
                negated,
                id: VarId(id),
            }),
        });
    }
    parse_ratio(body).map(Phase::constant)
}

fn parse_ratio(s: &str) -> Option<Angle> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<i64>().ok()?, d.trim().parse::<i64>().ok()?),
        None => (s.trim().parse::<i64>().ok()?, 1),
    };
    if d == 0 {
        return None;
    }
    Some(Angle::from_ratio(Rational64::new(n, d)))
}

pub(crate) fn phase_expr(p: &Phase) -> String {
    let c = p.constant.to_ratio_string();
    match p.var {
        None => c,
        Some(v) => {
            let s = if v.negated { "-" } else { "" };
            if p.constant.is_zero() {
                format!("{}a{}", s, v.id.0)
            } else {
                format!("{}a{}+{}", s, v.id.0, c)
            }
        }
    }
}

pub fn write_qc(c: &Circuit) -> String {
    let mut out = String::new();
    let names = c.names().join(" ");
    writeln!(out, ".v {}", names).unwrap();
    writeln!(out, ".i {}", names).unwrap();
    writeln!(out, ".o {}", names).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "BEGIN").unwrap();
    let n = |q: Qubit| c.names()[q].as_str();
    for g in c.gates() {
        let line = match *g {
            Gate::Cnot { control, target } => format!("tof {} {}", n(control), n(target)),
            Gate::Cz(a, b) => format!("Z {} {}", n(a), n(b)),
            Gate::H(q) => format!("H {}", n(q)),
            Gate::ZPhase(q, p) => {
                let name = match p.var {
                    Some(_) => None,
                    None => match (p.constant.numer(), p.constant.denom()) {
                        (1, 4) => Some("T"),
                        (7, 4) => Some("T*"),
                        (1, 2) => Some("S"),
                        (3, 2) => Some("S*"),
                        (1, 1) => Some("Z"),
                        _ => None,
                    },
                };
                match name {
                    Some(name) => format!("{} {}", name, n(q)),
                    None => format!("RZ({}) {}", phase_expr(&p), n(q)),
                }
            }
            Gate::XPhase(q, p) => {
                if p == Phase::constant(Angle::PI) {
                    format!("X {}", n(q))
                } else {
                    format!("RX({}) {}", phase_expr(&p), n(q))
                }
            }
            Gate::Tof { c1, c2, target } => format!("tof {} {} {}", n(c1), n(c2), n(target)),
            Gate::Ccz(a, b, d) => format!("Z {} {} {}", n(a), n(b), n(d)),
            Gate::Swap(a, b) => format!("swap {} {}", n(a), n(b)),
        };
        writeln!(out, "{}", line).unwrap();
    }
    writeln!(out, "END").unwrap();
    out
}
