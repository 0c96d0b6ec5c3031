//! A small expression language for user-defined means and weight functions.
//!
//! Grammar (precedence: unary minus, then `*` `/`, then `+` `-`):
//!
//! ```text
//! expr    := "if" arith cmp arith "then" expr "else" expr | arith
//! cmp     := "<" | "<=" | ">" | ">="
//! arith   := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | primary
//! primary := number | "x" | "y" | "(" expr ")"
//!          | ("sqrt" | "abs") "(" expr ")"
//!          | ("min" | "max") "(" expr ("," expr)+ ")"
//!          | "pow" "(" expr "," ["-"] number ")"
//! ```
//!
//! Numeric literals are decimal (optionally with fraction and exponent) and
//! parse to the nearest binary double. Guard comparisons are exact floating
//! comparisons — piecewise means branch on bit values, deliberately, so that
//! discontinuous means round-trip through text without smoothing.
//!
//! Parsing never panics: unknown characters, malformed literals and overly
//! deep nesting all come back as [`ParseError`] with line/column positions.
//! Evaluation is checked too — division by zero, square roots of negative
//! numbers, undefined powers and overflow report the failing node's position.

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::interval::Interval;
use crate::mean::{Mean, PropertySet};
use std::fmt;

/// Hard cap on expression nesting. Keeps recursive parsing, evaluation and
/// printing well inside stack limits for arbitrary input.
const MAX_DEPTH: usize = 200;

/// Source position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: u32,
    pub col: u32,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

/// Syntax error with position and, where useful, what was expected.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at {pos}: {message}")]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

/// Runtime evaluation error, pinned to the failing node.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("division by zero at {pos}")]
    DivisionByZero { pos: Pos },
    #[error("square root of negative value {arg} at {pos}")]
    NegativeSqrt { arg: f64, pos: Pos },
    #[error("pow({base}, {exponent}) undefined at {pos}")]
    PowDomain { base: f64, exponent: f64, pos: Pos },
    #[error("non-finite result (overflow) at {pos}")]
    Overflow { pos: Pos },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOp {
    Neg,
    Sqrt,
    Abs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Lt,
    Le,
    Gt,
    Ge,
}

impl Cmp {
    fn holds(self, a: f64, b: f64) -> bool {
        match self {
            Cmp::Lt => a < b,
            Cmp::Le => a <= b,
            Cmp::Gt => a > b,
            Cmp::Ge => a >= b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Cmp::Lt => "<",
            Cmp::Le => "<=",
            Cmp::Gt => ">",
            Cmp::Ge => ">=",
        }
    }
}

/// Expression tree. Operator nodes carry their source position for runtime
/// error reporting; positions are ignored by equality so that a parsed tree
/// compares equal to its pretty-printed-and-reparsed self.
#[derive(Debug, Clone)]
pub enum Expr {
    Const(f64),
    Var(Var),
    Unary {
        op: UnaryOp,
        arg: Box<Expr>,
        pos: Pos,
    },
    Binary {
        op: BinOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
        pos: Pos,
    },
    /// n-ary min/max, at least two arguments.
    Fold {
        max: bool,
        args: Vec<Expr>,
        pos: Pos,
    },
    /// Power with a constant exponent.
    Pow {
        base: Box<Expr>,
        exponent: f64,
        pos: Pos,
    },
    If {
        lhs: Box<Expr>,
        cmp: Cmp,
        rhs: Box<Expr>,
        then_branch: Box<Expr>,
        else_branch: Box<Expr>,
    },
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        use Expr::*;
        match (self, other) {
            (Const(a), Const(b)) => a == b || (a.is_nan() && b.is_nan()),
            (Var(a), Var(b)) => a == b,
            (
                Unary {
                    op: o1, arg: a1, ..
                },
                Unary {
                    op: o2, arg: a2, ..
                },
            ) => o1 == o2 && a1 == a2,
            (
                Binary {
                    op: o1,
                    lhs: l1,
                    rhs: r1,
                    ..
                },
                Binary {
                    op: o2,
                    lhs: l2,
                    rhs: r2,
                    ..
                },
            ) => o1 == o2 && l1 == l2 && r1 == r2,
            (
                Fold {
                    max: m1, args: a1, ..
                },
                Fold {
                    max: m2, args: a2, ..
                },
            ) => m1 == m2 && a1 == a2,
            (
                Pow {
                    base: b1,
                    exponent: e1,
                    ..
                },
                Pow {
                    base: b2,
                    exponent: e2,
                    ..
                },
            ) => b1 == b2 && e1 == e2,
            (
                If {
                    lhs: l1,
                    cmp: c1,
                    rhs: r1,
                    then_branch: t1,
                    else_branch: e1,
                },
                If {
                    lhs: l2,
                    cmp: c2,
                    rhs: r2,
                    then_branch: t2,
                    else_branch: e2,
                },
            ) => c1 == c2 && l1 == l2 && r1 == r2 && t1 == t2 && e1 == e2,
            _ => false,
        }
    }
}

impl Expr {
    /// Evaluate at (x, y). Only the taken branch of a conditional is
    /// evaluated, so guarded expressions like `if y > 0 then x/y else x`
    /// are total.
    pub fn eval(&self, x: f64, y: f64) -> std::result::Result<f64, EvalError> {
        match self {
            Expr::Const(v) => Ok(*v),
            Expr::Var(Var::X) => Ok(x),
            Expr::Var(Var::Y) => Ok(y),
            Expr::Unary { op, arg, pos } => {
                let v = arg.eval(x, y)?;
                match op {
                    UnaryOp::Neg => Ok(-v),
                    UnaryOp::Abs => Ok(v.abs()),
                    UnaryOp::Sqrt => {
                        if v < 0.0 {
                            Err(EvalError::NegativeSqrt { arg: v, pos: *pos })
                        } else {
                            Ok(v.sqrt())
                        }
                    }
                }
            }
            Expr::Binary { op, lhs, rhs, pos } => {
                let a = lhs.eval(x, y)?;
                let b = rhs.eval(x, y)?;
                let v = match op {
                    BinOp::Add => a + b,
                    BinOp::Sub => a - b,
                    BinOp::Mul => a * b,
                    BinOp::Div => {
                        if b == 0.0 {
                            return Err(EvalError::DivisionByZero { pos: *pos });
                        }
                        a / b
                    }
                };
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(EvalError::Overflow { pos: *pos })
                }
            }
            Expr::Fold { max, args, .. } => {
                let mut acc = args[0].eval(x, y)?;
                for arg in &args[1..] {
                    let v = arg.eval(x, y)?;
                    acc = if *max { acc.max(v) } else { acc.min(v) };
                }
                Ok(acc)
            }
            Expr::Pow {
                base,
                exponent,
                pos,
            } => {
                let b = base.eval(x, y)?;
                let v = b.powf(*exponent);
                if v.is_nan() {
                    Err(EvalError::PowDomain {
                        base: b,
                        exponent: *exponent,
                        pos: *pos,
                    })
                } else if v.is_infinite() {
                    Err(EvalError::Overflow { pos: *pos })
                } else {
                    Ok(v)
                }
            }
            Expr::If {
                lhs,
                cmp,
                rhs,
                then_branch,
                else_branch,
            } => {
                let a = lhs.eval(x, y)?;
                let b = rhs.eval(x, y)?;
                if cmp.holds(a, b) {
                    then_branch.eval(x, y)
                } else {
                    else_branch.eval(x, y)
                }
            }
        }
    }

    /// Does the tree mention the variable y anywhere?
    pub fn references_y(&self) -> bool {
        match self {
            Expr::Const(_) => false,
            Expr::Var(v) => *v == Var::Y,
            Expr::Unary { arg, .. } => arg.references_y(),
            Expr::Binary { lhs, rhs, .. } => lhs.references_y() || rhs.references_y(),
            Expr::Fold { args, .. } => args.iter().any(Expr::references_y),
            Expr::Pow { base, .. } => base.references_y(),
            Expr::If {
                lhs,
                rhs,
                then_branch,
                else_branch,
                ..
            } => {
                lhs.references_y()
                    || rhs.references_y()
                    || then_branch.references_y()
                    || else_branch.references_y()
            }
        }
    }

    // Precedence levels for printing: 0 conditional, 1 additive,
    // 2 multiplicative, 3 unary minus, 4 atoms and calls.
    fn prec(&self) -> u8 {
        match self {
            Expr::If { .. } => 0,
            Expr::Binary {
                op: BinOp::Add | BinOp::Sub,
                ..
            } => 1,
            Expr::Binary {
                op: BinOp::Mul | BinOp::Div,
                ..
            } => 2,
            Expr::Unary {
                op: UnaryOp::Neg, ..
            } => 3,
            _ => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let needs_parens = self.prec() < min_prec;
        if needs_parens {
            write!(f, "(")?;
        }
        match self {
            Expr::Const(v) => write!(f, "{v}")?,
            Expr::Var(Var::X) => write!(f, "x")?,
            Expr::Var(Var::Y) => write!(f, "y")?,
            Expr::Unary {
                op: UnaryOp::Neg,
                arg,
                ..
            } => {
                write!(f, "-")?;
                arg.fmt_prec(f, 4)?;
            }
            Expr::Unary { op, arg, .. } => {
                let name = if *op == UnaryOp::Sqrt { "sqrt" } else { "abs" };
                write!(f, "{name}(")?;
                arg.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
            Expr::Binary { op, lhs, rhs, .. } => {
                let own = self.prec();
                let sym = match op {
                    BinOp::Add => "+",
                    BinOp::Sub => "-",
                    BinOp::Mul => "*",
                    BinOp::Div => "/",
                };
                lhs.fmt_prec(f, own)?;
                write!(f, " {sym} ")?;
                rhs.fmt_prec(f, own + 1)?;
            }
            Expr::Fold { max, args, .. } => {
                write!(f, "{}(", if *max { "max" } else { "min" })?;
                for (i, arg) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    arg.fmt_prec(f, 0)?;
                }
                write!(f, ")")?;
            }
            Expr::Pow { base, exponent, .. } => {
                write!(f, "pow(")?;
                base.fmt_prec(f, 0)?;
                write!(f, ", {exponent})")?;
            }
            Expr::If {
                lhs,
                cmp,
                rhs,
                then_branch,
                else_branch,
            } => {
                write!(f, "if ")?;
                lhs.fmt_prec(f, 1)?;
                write!(f, " {} ", cmp.symbol())?;
                rhs.fmt_prec(f, 1)?;
                write!(f, " then ")?;
                then_branch.fmt_prec(f, 0)?;
                write!(f, " else ")?;
                else_branch.fmt_prec(f, 0)?;
            }
        }
        if needs_parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    /// Canonical form: re-parsing the output yields an equal tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

// ---------------------------------------------------------------------------
// Lexing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    X,
    Y,
    If,
    Then,
    Else,
    Sqrt,
    Abs,
    Min,
    Max,
    Pow,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
    Cmp(Cmp),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(v) => format!("number {v}"),
            Tok::X => "x".into(),
            Tok::Y => "y".into(),
            Tok::If => "`if`".into(),
            Tok::Then => "`then`".into(),
            Tok::Else => "`else`".into(),
            Tok::Sqrt => "`sqrt`".into(),
            Tok::Abs => "`abs`".into(),
            Tok::Min => "`min`".into(),
            Tok::Max => "`max`".into(),
            Tok::Pow => "`pow`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Cmp(c) => format!("`{}`", c.symbol()),
            Tok::Eof => "end of input".into(),
        }
    }
}

struct Spanned {
    tok: Tok,
    pos: Pos,
}

fn lex(src: &str) -> std::result::Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0usize;
    let mut line = 1u32;
    let mut col = 1u32;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        let advance = |i: &mut usize, col: &mut u32| {
            *i += 1;
            *col += 1;
        };
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(&mut i, &mut col),
            '+' => {
                out.push(Spanned {
                    tok: Tok::Plus,
                    pos,
                });
                advance(&mut i, &mut col);
            }
            '-' => {
                out.push(Spanned {
                    tok: Tok::Minus,
                    pos,
                });
                advance(&mut i, &mut col);
            }
            '*' => {
                out.push(Spanned {
                    tok: Tok::Star,
                    pos,
                });
                advance(&mut i, &mut col);
            }
            '/' => {
                out.push(Spanned {
                    tok: Tok::Slash,
                    pos,
                });
                advance(&mut i, &mut col);
            }
            '(' => {
                out.push(Spanned {
                    tok: Tok::LParen,
                    pos,
                });
                advance(&mut i, &mut col);
            }
            ')' => {
                out.push(Spanned {
                    tok: Tok::RParen,
                    pos,
                });
                advance(&mut i, &mut col);
            }
            ',' => {
                out.push(Spanned {
                    tok: Tok::Comma,
                    pos,
                });
                advance(&mut i, &mut col);
            }
            '<' | '>' => {
                let mut len = 1;
                let cmp = if i + 1 < chars.len() && chars[i + 1] == '=' {
                    len = 2;
                    if c == '<' {
                        Cmp::Le
                    } else {
                        Cmp::Ge
                    }
                } else if c == '<' {
                    Cmp::Lt
                } else {
                    Cmp::Gt
                };
                out.push(Spanned {
                    tok: Tok::Cmp(cmp),
                    pos,
                });
                i += len;
                col += len as u32;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                if i < chars.len() && chars[i] == '.' {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                    let mut j = i + 1;
                    if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                        j += 1;
                    }
                    if j < chars.len() && chars[j].is_ascii_digit() {
                        i = j;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                    } else {
                        return Err(ParseError {
                            pos: Pos {
                                line,
                                col: col + (i - start) as u32,
                            },
                            message: "malformed exponent in numeric literal".into(),
                        });
                    }
                }
                let text: String = chars[start..i].iter().collect();
                let value: f64 = text.parse().map_err(|_| ParseError {
                    pos,
                    message: format!("invalid numeric literal `{text}`"),
                })?;
                if !value.is_finite() {
                    return Err(ParseError {
                        pos,
                        message: format!("numeric literal `{text}` out of range"),
                    });
                }
                col += (i - start) as u32;
                out.push(Spanned {
                    tok: Tok::Num(value),
                    pos,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                col += (i - start) as u32;
                let tok = match word.as_str() {
                    "x" => Tok::X,
                    "y" => Tok::Y,
                    "if" => Tok::If,
                    "then" => Tok::Then,
                    "else" => Tok::Else,
                    "sqrt" => Tok::Sqrt,
                    "abs" => Tok::Abs,
                    "min" => Tok::Min,
                    "max" => Tok::Max,
                    "pow" => Tok::Pow,
                    _ => {
                        return Err(ParseError {
                            pos,
                            message: format!(
                                "unknown identifier `{word}` (variables are x and y; functions are sqrt, abs, min, max, pow)"
                            ),
                        })
                    }
                };
                out.push(Spanned { tok, pos });
            }
            other => {
                return Err(ParseError {
                    pos,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser {
    toks: Vec<Spanned>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.at.min(self.toks.len() - 1)]
    }

    fn bump(&mut self) -> &Spanned {
        let s = &self.toks[self.at.min(self.toks.len() - 1)];
        if self.at < self.toks.len() - 1 {
            self.at += 1;
        }
        s
    }

    fn err_here(&self, expected: &str) -> ParseError {
        let here = self.peek();
        ParseError {
            pos: here.pos,
            message: format!("unexpected {} (expected {expected})", here.tok.describe()),
        }
    }

    fn expect(&mut self, want: Tok, expected: &str) -> std::result::Result<Pos, ParseError> {
        if self.peek().tok == want {
            Ok(self.bump().pos)
        } else {
            Err(self.err_here(expected))
        }
    }

    fn guard_depth(&self, depth: usize) -> std::result::Result<(), ParseError> {
        if depth > MAX_DEPTH {
            Err(ParseError {
                pos: self.peek().pos,
                message: format!("expression nested deeper than {MAX_DEPTH} levels"),
            })
        } else {
            Ok(())
        }
    }

    fn expr(&mut self, depth: usize) -> std::result::Result<Expr, ParseError> {
        self.guard_depth(depth)?;
        if self.peek().tok == Tok::If {
            self.bump();
            let lhs = self.arith(depth + 1)?;
            let cmp = match &self.peek().tok {
                Tok::Cmp(c) => {
                    let c = *c;
                    self.bump();
                    c
                }
                _ => return Err(self.err_here("a comparison: <, <=, > or >=")),
            };
            let rhs = self.arith(depth + 1)?;
            self.expect(Tok::Then, "`then`")?;
            let then_branch = self.expr(depth + 1)?;
            self.expect(Tok::Else, "`else`")?;
            let else_branch = self.expr(depth + 1)?;
            Ok(Expr::If {
                lhs: Box::new(lhs),
                cmp,
                rhs: Box::new(rhs),
                then_branch: Box::new(then_branch),
                else_branch: Box::new(else_branch),
            })
        } else {
            self.arith(depth)
        }
    }

    fn arith(&mut self, depth: usize) -> std::result::Result<Expr, ParseError> {
        self.guard_depth(depth)?;
        let mut lhs = self.term(depth + 1)?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => break,
            };
            let pos = self.bump().pos;
            let rhs = self.term(depth + 1)?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
        Ok(lhs)
    }

    fn term(&mut self, depth: usize) -> std::result::Result<Expr, ParseError> {
        self.guard_depth(depth)?;
        let mut lhs = self.unary(depth + 1)?;
        loop {
            let op = match self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => break,
            };
            let pos = self.bump().pos;
            let rhs = self.unary(depth + 1)?;
            lhs = Expr::Binary {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self, depth: usize) -> std::result::Result<Expr, ParseError> {
        self.guard_depth(depth)?;
        if self.peek().tok == Tok::Minus {
            let pos = self.bump().pos;
            let arg = self.unary(depth + 1)?;
            Ok(Expr::Unary {
                op: UnaryOp::Neg,
                arg: Box::new(arg),
                pos,
            })
        } else {
            self.primary(depth + 1)
        }
    }

    fn primary(&mut self, depth: usize) -> std::result::Result<Expr, ParseError> {
        self.guard_depth(depth)?;
        let pos = self.peek().pos;
        let tok = self.peek().tok.clone();
        match tok {
            Tok::Num(v) => {
                self.bump();
                Ok(Expr::Const(v))
            }
            Tok::X => {
                self.bump();
                Ok(Expr::Var(Var::X))
            }
            Tok::Y => {
                self.bump();
                Ok(Expr::Var(Var::Y))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr(depth + 1)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Sqrt | Tok::Abs => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let arg = self.expr(depth + 1)?;
                self.expect(Tok::RParen, "`)`")?;
                let op = if tok == Tok::Sqrt {
                    UnaryOp::Sqrt
                } else {
                    UnaryOp::Abs
                };
                Ok(Expr::Unary {
                    op,
                    arg: Box::new(arg),
                    pos,
                })
            }
            Tok::Min | Tok::Max => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let mut args = vec![self.expr(depth + 1)?];
                self.expect(Tok::Comma, "`,` (min/max take at least two arguments)")?;
                args.push(self.expr(depth + 1)?);
                while self.peek().tok == Tok::Comma {
                    self.bump();
                    args.push(self.expr(depth + 1)?);
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Fold {
                    max: tok == Tok::Max,
                    args,
                    pos,
                })
            }
            Tok::Pow => {
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let base = self.expr(depth + 1)?;
                self.expect(Tok::Comma, "`,`")?;
                let negative = if self.peek().tok == Tok::Minus {
                    self.bump();
                    true
                } else {
                    false
                };
                let exponent = match self.peek().tok {
                    Tok::Num(v) => {
                        self.bump();
                        if negative {
                            -v
                        } else {
                            v
                        }
                    }
                    _ => {
                        return Err(self.err_here("a numeric literal (pow exponents are constants)"))
                    }
                };
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Pow {
                    base: Box::new(base),
                    exponent,
                    pos,
                })
            }
            _ => Err(self.err_here("an expression")),
        }
    }
}

/// Parse source text into an expression tree.
///
/// # Example
/// ```
/// use meanlab::expr;
/// let e = expr::parse("(x + y) / 2").unwrap();
/// assert_eq!(e.eval(2.0, 4.0).unwrap(), 3.0);
/// assert!(expr::parse("x +").is_err());
/// ```
pub fn parse(src: &str) -> std::result::Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0 };
    let e = p.expr(0)?;
    if p.peek().tok != Tok::Eof {
        return Err(p.err_here("end of input"));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Lifting expressions to means
// ---------------------------------------------------------------------------

/// Validate an expression as a mean on `domain` and wrap it as a [`Mean`].
///
/// The gate evaluates the expression at every grid sample and requires
/// min(x, y) <= value <= max(x, y) exactly; any evaluation error or bounds
/// violation is rejected with the witness point. Symmetry and strictness are
/// measured on the same samples and recorded as declared properties. Passing
/// the grid is necessary, not sufficient — a function can behave off-grid.
///
/// # Example
/// ```
/// use meanlab::{expr, GridSpec, Interval};
/// let d = Interval::new(1.0, 10.0).unwrap();
/// let g = GridSpec::lattice(41);
/// let m = expr::lift_to_mean(&expr::parse("(x + y) / 2").unwrap(), d, &g).unwrap();
/// assert!(m.properties().symmetric && m.properties().strict);
/// // the first projection is a mean, but not a strict one
/// let p = expr::lift_to_mean(&expr::parse("x").unwrap(), d, &g).unwrap();
/// assert!(!p.properties().strict);
/// // x + y escapes [min, max] and is rejected
/// assert!(expr::lift_to_mean(&expr::parse("x + y").unwrap(), d, &g).is_err());
/// ```
pub fn lift_to_mean(expr: &Expr, domain: Interval, grid: &GridSpec) -> Result<Mean> {
    let name = expr.to_string();
    let mut symmetric = true;
    let mut strict = true;
    for (x, y) in grid.pairs(&domain)? {
        let v = expr
            .eval(x, y)
            .map_err(|source| Error::Eval { x, y, source })?;
        let (lo, hi) = (x.min(y), x.max(y));
        if !(lo <= v && v <= hi) {
            return Err(Error::MeanBounds {
                name,
                x,
                y,
                value: v,
                lo,
                hi,
            });
        }
        if symmetric {
            let w = expr
                .eval(y, x)
                .map_err(|source| Error::Eval { x: y, y: x, source })?;
            symmetric = v == w;
        }
        if strict && x != y && (v == lo || v == hi) {
            strict = false;
        }
    }
    let properties = PropertySet {
        symmetric,
        strict,
        ..PropertySet::default()
    };
    let tree = expr.clone();
    Ok(Mean::from_fn(name, domain, properties, move |x, y| {
        tree.eval(x, y)
            .map_err(|source| Error::Eval { x, y, source })
    }))
}

/// Parse-and-lift convenience used by the CLI and examples.
pub fn mean_from_source(src: &str, domain: Interval, grid: &GridSpec) -> Result<Mean> {
    let e = parse(src)?;
    lift_to_mean(&e, domain, grid)
}

// ---------------------------------------------------------------------------
// Weight functions
// ---------------------------------------------------------------------------

/// A single-variable map w: [0, 1] -> [0, 1] written in the expression
/// language over `x`. Outputs are range-checked on every call, because a
/// stray weight silently breaks the sandwich property of tail functionals.
#[derive(Debug, Clone)]
pub struct WeightFn {
    expr: Expr,
    source: String,
}

impl WeightFn {
    pub fn parse(src: &str) -> Result<WeightFn> {
        let expr = parse(src)?;
        if expr.references_y() {
            return Err(Error::WeightUsesY);
        }
        Ok(WeightFn {
            source: expr.to_string(),
            expr,
        })
    }

    /// Evaluate at t in [0, 1]; errors if the output leaves [0, 1].
    pub fn eval(&self, t: f64) -> Result<f64> {
        let v = self
            .expr
            .eval(t, t)
            .map_err(|source| Error::Eval { x: t, y: t, source })?;
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::WeightRange { arg: t, value: v });
        }
        Ok(v)
    }

    pub fn source(&self) -> &str {
        &self.source
    }
}
