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

//! Reader and writer for a small subset of OpenQASM 2.0.
//!
//! One `qreg`, and the gates `h x z s sdg t tdg rz rx cx cz ccx ccz swap`.
//! Rotation angles must evaluate to a rational multiple of `pi`;
//! `rz(3*pi/4)`, `rz(-0.25*pi)` and `rz(pi/2 + pi/4)` are all accepted,
//! `rz(0.785)` is not.

use std::fmt::Write;

use num_rational::Rational64;
use num_traits::{One, Zero};

use super::{Circuit, Gate, ParseError, Qubit};
use crate::phase::{Angle, Phase, SignedVar, VarId};

pub fn parse_qasm(text: &str) -> Result<Circuit, ParseError> {
    let mut reg: Option<(String, usize)> = None;
    let mut circuit: Option<Circuit> = None;

    for (line_no, stmt) in statements(text) {
        let (head, rest) = split_head(&stmt);
        match head.as_str() {
            "OPENQASM" | "include" | "creg" | "barrier" => continue,
            "qreg" => {
                if reg.is_some() {
                    return Err(ParseError::MultipleRegisters { line: line_no });
                }
                let (name, size) = parse_reg(rest).ok_or_else(|| syntax(line_no, "malformed qreg"))?;
                circuit = Some(Circuit::with_names(
                    (0..size).map(|i| format!("{}[{}]", name, i)).collect(),
                ));
                reg = Some((name, size));
                continue;
            }
            _ => {}
        }
        let (reg_name, size) = reg
            .as_ref()
            .ok_or_else(|| syntax(line_no, "gate before qreg declaration"))?;
        let (name, param) = match head.find('(') {
            Some(i) => {
                let p = head[i + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| syntax(line_no, "unbalanced parenthesis"))?;
                (&head[..i], Some(p))
            }
            None => (head.as_str(), None),
        };
        let mut qs = Vec::new();
        for a in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            qs.push(parse_operand(a, reg_name, *size, line_no)?);
        }
        let arity = |n: usize| {
            if qs.len() == n {
                Ok(())
            } else {
                Err(ParseError::Arity {
                    line: line_no,
                    gate: name.to_string(),
                    expected: n.to_string(),
                    found: qs.len(),
                })
            }
        };
        let fixed = |a: Angle| -> Result<Gate, ParseError> {
            arity(1)?;
            Ok(Gate::z(qs[0], a))
        };
        let gate = match (name, param) {
            ("h", None) => {
                arity(1)?;
                Gate::H(qs[0])
            }
            ("x", None) => {
                arity(1)?;
                Gate::x(qs[0], Angle::PI)
            }
            ("z", None) => fixed(Angle::PI)?,
            ("s", None) => fixed(Angle::HALF_PI)?,
            ("sdg", None) => fixed(Angle::new(3, 2))?,
            ("t", None) => fixed(Angle::QUARTER_PI)?,
            ("tdg", None) => fixed(Angle::new(7, 4))?,
            ("rz", Some(p)) | ("rx", Some(p)) => {
                arity(1)?;
                let phase = parse_angle(p).ok_or_else(|| ParseError::NonRationalAngle {
                    line: line_no,
                    text: p.to_string(),
                })?;
                if name == "rz" {
                    Gate::ZPhase(qs[0], phase)
                } else {
                    Gate::XPhase(qs[0], phase)
                }
            }
            ("cx", None) => {
                arity(2)?;
                Gate::cnot(qs[0], qs[1])
            }
            ("cz", None) => {
                arity(2)?;
                Gate::Cz(qs[0], qs[1])
            }
            ("swap", None) => {
                arity(2)?;
                Gate::Swap(qs[0], qs[1])
            }
            ("ccx", None) => {
                arity(3)?;
                Gate::tof(qs[0], qs[1], qs[2])
            }
            ("ccz", None) => {
                arity(3)?;
                Gate::Ccz(qs[0], qs[1], qs[2])
            }
            _ => {
                return Err(ParseError::UnsupportedGate {
                    line: line_no,
                    name: head.clone(),
                })
            }
        };
        circuit
            .as_mut()
            .expect("qreg seen")
            .push(gate)
            .map_err(|source| ParseError::Circuit {
                line: line_no,
                source,
            })?;
    }
    circuit.ok_or_else(|| syntax(1, "no qreg declared"))
}

fn syntax(line: usize, message: &str) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.to_string(),
    }
}

/// Splits the source into `;`-terminated statements, tagged with the line
/// each starts on. Comments are stripped.
fn statements(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split("//").next().unwrap_or("");
        for ch in line.chars() {
            if ch == ';' {
                let s = cur.trim().to_string();
                if !s.is_empty() {
                    out.push((start.unwrap_or(i + 1), s));
                }
                cur.clear();
                start = None;
            } else {
                if start.is_none() && !ch.is_whitespace() {
                    start = Some(i + 1);
                }
                cur.push(ch);
            }
        }
        cur.push(' ');
    }
    let s = cur.trim().to_string();
    if !s.is_empty() {
        out.push((start.unwrap_or(1), s));
    }
    out
}

/// Separates the gate name (with any parenthesised parameter) from operands.
fn split_head(stmt: &str) -> (String, &str) {
    let mut depth = 0;
    for (i, ch) in stmt.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c.is_whitespace() && depth == 0 => {
                let head: String = stmt[..i].chars().filter(|c| !c.is_whitespace()).collect();
                return (head, stmt[i..].trim());
            }
            _ => {}
        }
    }
    (stmt.chars().filter(|c| !c.is_whitespace()).collect(), "")
}

fn parse_reg(s: &str) -> Option<(String, usize)> {
    let (name, rest) = s.trim().split_once('[')?;
    let size = rest.strip_suffix(']')?.trim().parse().ok()?;
    Some((name.trim().to_string(), size))
}

fn parse_operand(a: &str, reg: &str, size: usize, line: usize) -> Result<Qubit, ParseError> {
    let bad = || ParseError::UndeclaredQubit {
        line,
        name: a.to_string(),
    };
    let (name, rest) = a.split_once('[').ok_or_else(bad)?;
    if name.trim() != reg {
        return Err(if name.trim().is_empty() { bad() } else { ParseError::MultipleRegisters { line } });
    }
    let idx: usize = rest.strip_suffix(']').and_then(|s| s.trim().parse().ok()).ok_or_else(bad)?;
    if idx >= size {
        return Err(bad());
    }
    Ok(idx)
}

/// `pi_coeff·π + constant + var`, with exact rational coefficients.
#[derive(Clone, Copy, Debug)]
struct Linear {
    pi: Rational64,
    constant: Rational64,
    var: Option<(u32, Rational64)>,
}

impl Linear {
    fn number(r: Rational64) -> Linear {
        Linear {
            pi: Rational64::zero(),
            constant: r,
            var: None,
        }
    }

    fn is_number(&self) -> bool {
        self.pi.is_zero() && self.var.is_none()
    }

    fn scale(self, k: Rational64) -> Linear {
        Linear {
            pi: self.pi * k,
            constant: self.constant * k,
            var: self.var.map(|(v, c)| (v, c * k)),
        }
    }

    fn add(self, o: Linear) -> Option<Linear> {
        let var = match (self.var, o.var) {
            (Some((a, x)), Some((b, y))) if a == b => Some((a, x + y)).filter(|(_, c)| !c.is_zero()),
            (Some(_), Some(_)) => return None,
            (a, b) => a.or(b),
        };
        Some(Linear {
            pi: self.pi + o.pi,
            constant: self.constant + o.constant,
            var,
        })
    }
}

struct AngleParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl AngleParser<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Option<Linear> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            let t = if c == b'-' { t.scale(-Rational64::one()) } else { t };
            acc = acc.add(t)?;
        }
        Some(acc)
    }

    fn term(&mut self) -> Option<Linear> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let f = self.unary()?;
            acc = if c == b'*' {
                if acc.is_number() {
                    f.scale(acc.constant)
                } else if f.is_number() {
                    acc.scale(f.constant)
                } else {
                    return None;
                }
            } else {
                if !f.is_number() || f.constant.is_zero() {
                    return None;
                }
                acc.scale(f.constant.recip())
            };
        }
        Some(acc)
    }

    fn unary(&mut self) -> Option<Linear> {
        match self.peek()? {
            b'-' => {
                self.pos += 1;
                Some(self.unary()?.scale(-Rational64::one()))
            }
            b'+' => {
                self.pos += 1;
                self.unary()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Option<Linear> {
        let c = self.peek()?;
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if self.peek()? != b')' {
                return None;
            }
            self.pos += 1;
            return Some(e);
        }
        if c.is_ascii_digit() || c == b'.' {
            let start = self.pos;
            while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'.') {
                self.pos += 1;
            }
            let lit = std::str::from_utf8(&self.s[start..self.pos]).ok()?;
            return decimal(lit).map(Linear::number);
        }
        if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                self.pos += 1;
            }
            let word = std::str::from_utf8(&self.s[start..self.pos]).ok()?;
            if word == "pi" {
                return Some(Linear {
                    pi: Rational64::one(),
                    constant: Rational64::zero(),
                    var: None,
                });
            }
            let id: u32 = word.strip_prefix('a')?.parse().ok()?;
            return Some(Linear {
                pi: Rational64::zero(),
                constant: Rational64::zero(),
                var: Some((id, Rational64::one())),
            });
        }
        None
    }
}

fn decimal(lit: &str) -> Option<Rational64> {
    let (int, frac) = lit.split_once('.').unwrap_or((lit, ""));
    if int.is_empty() && frac.is_empty() || frac.len() > 15 {
        return None;
    }
    let digits = format!("{}{}", int, frac);
    let n: i64 = digits.parse().ok()?;
    Some(Rational64::new(n, 10i64.checked_pow(frac.len() as u32)?))
}

/// Evaluates an angle expression to an exact phase, if it is a rational
/// multiple of π (optionally plus `±a<n>`).
pub(crate) fn parse_angle(text: &str) -> Option<Phase> {
    let mut p = AngleParser {
        s: text.as_bytes(),
        pos: 0,
    };
    let lin = p.expr()?;
    if p.peek().is_some() || !lin.constant.is_zero() {
        return None;
    }
    let var = match lin.var {
        None => None,
        Some((id, c)) if c == Rational64::one() => Some(SignedVar::plus(VarId(id))),
        Some((id, c)) if c == -Rational64::one() => Some(-SignedVar::plus(VarId(id))),
        Some(_) => return None,
    };
    Some(Phase {
        constant: Angle::from_ratio(lin.pi),
        var,
    })
}

fn angle_expr(p: &Phase) -> String {
    let (n, d) = (p.constant.numer(), p.constant.denom());
    let c = match (n, d) {
        (0, _) => "0".to_string(),
        (1, 1) => "pi".to_string(),
        (n, 1) => format!("{}*pi", n),
        (1, d) => format!("pi/{}", d),
        (n, d) => format!("{}*pi/{}", n, d),
    };
    match p.var {
        None => c,
        Some(v) => {
            let s = if v.negated { "-" } else { "" };
            if n == 0 {
                format!("{}a{}", s, v.id.0)
            } else {
                format!("{}a{}+{}", s, v.id.0, c)
            }
        }
    }
}

pub fn write_qasm(c: &Circuit) -> String {
    let mut out = String::new();
    writeln!(out, "OPENQASM 2.0;").unwrap();
    writeln!(out, "include \"qelib1.inc\";").unwrap();
    writeln!(out, "qreg q[{}];", c.width()).unwrap();
    for g in c.gates() {
        let line = match *g {
            Gate::Cnot { control, target } => format!("cx q[{}],q[{}];", control, target),
            Gate::Cz(a, b) => format!("cz q[{}],q[{}];", a, b),
            Gate::Swap(a, b) => format!("swap q[{}],q[{}];", a, b),
            Gate::H(q) => format!("h q[{}];", q),
            Gate::ZPhase(q, p) => {
                let name = match p.var {
                    Some(_) => None,
                    None => match (p.constant.numer(), p.constant.denom()) {
                        (1, 4) => Some("t"),
                        (7, 4) => Some("tdg"),
                        (1, 2) => Some("s"),
                        (3, 2) => Some("sdg"),
                        (1, 1) => Some("z"),
                        _ => None,
                    },
                };
                match name {
                    Some(name) => format!("{} q[{}];", name, q),
                    None => format!("rz({}) q[{}];", angle_expr(&p), q),
                }
            }
            Gate::XPhase(q, p) => {
                if p == Phase::constant(Angle::PI) {
                    format!("x q[{}];", q)
                } else {
                    format!("rx({}) q[{}];", angle_expr(&p), q)
                }
            }
            Gate::Tof { c1, c2, target } => format!("ccx q[{}],q[{}],q[{}];", c1, c2, target),
            Gate::Ccz(a, b, d) => format!("ccz q[{}],q[{}],q[{}];", a, b, d),
        };
        writeln!(out, "{}", line).unwrap();
    }
    out
}
