//! Arithmetic expressions for angles, arguments and custom integrands.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum     = product (('+' | '-') product)*
//! product = unary (('*' | '/') unary | unary)*      juxtaposition multiplies
//! unary   = '-' unary | '+' unary | power
//! power   = atom ('^' unary)?
//! atom    = number | name | name '(' sum ')' | '(' sum ')'
//! ```
//!
//! Names are `t` (the integration variable), the constants `pi`, `phi7`
//! and `e`, and the functions `log`/`ln`, `exp`, `sin`, `cos`, `tan`, `cot`,
//! `atan`, `acot`, `sqrt` and `abs`. Juxtaposition lets `2pi/7` and `6phi7`
//! be written as in print. Nothing else is evaluated.

use std::fmt;

use rug::ops::Pow;
use rug::Float;

use dilogint::specfun::arccot;
use dilogint::PrecisionContext;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError(pub String);

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ExprError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ExprError> {
    Err(ExprError(msg.into()))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Name(String),
    Op(char),
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            // Exponent only when digits follow, so `2e` stays 2·e.
            if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
                let mut j = i + 1;
                if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
                    j += 1;
                }
                if j < chars.len() && chars[j].is_ascii_digit() {
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    i = j;
                }
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Name(chars[start..i].iter().collect()));
        } else if "+-*/^".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else if c == '(' {
            out.push(Token::Open);
            i += 1;
        } else if c == ')' {
            out.push(Token::Close);
            i += 1;
        } else {
            return err(format!("unexpected character `{c}` in `{src}`"));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Func {
    Log,
    Exp,
    Sin,
    Cos,
    Tan,
    Cot,
    Atan,
    Acot,
    Sqrt,
    Abs,
}

impl Func {
    fn lookup(name: &str) -> Option<Func> {
        Some(match name {
            "log" | "ln" => Func::Log,
            "exp" => Func::Exp,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "tan" => Func::Tan,
            "cot" => Func::Cot,
            "atan" | "arctan" => Func::Atan,
            "acot" | "arccot" => Func::Acot,
            "sqrt" => Func::Sqrt,
            "abs" => Func::Abs,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone)]
enum Node {
    Num(Float),
    Var,
    Neg(Box<Node>),
    Bin(char, Box<Node>, Box<Node>),
    Call(Func, Box<Node>),
}

/// A parsed expression with its constants already at working precision.
#[derive(Debug, Clone)]
pub struct Expr {
    root: Node,
    uses_t: bool,
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ctx: &'a PrecisionContext,
    uses_t: bool,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn sum(&mut self) -> Result<Node, ExprError> {
        let mut left = self.product()?;
        while let Some(Token::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let right = self.product()?;
            left = Node::Bin(op, Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<Node, ExprError> {
        let mut left = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Op(op @ ('*' | '/'))) => {
                    let op = *op;
                    self.pos += 1;
                    let right = self.unary()?;
                    left = Node::Bin(op, Box::new(left), Box::new(right));
                }
                Some(Token::Num(_) | Token::Name(_) | Token::Open) => {
                    let right = self.unary()?;
                    left = Node::Bin('*', Box::new(left), Box::new(right));
                }
                _ => return Ok(left),
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        match self.peek() {
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(Node::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let base = self.atom()?;
        if let Some(Token::Op('^')) = self.peek() {
            self.pos += 1;
            let exponent = self.unary()?;
            return Ok(Node::Bin('^', Box::new(base), Box::new(exponent)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        let prec = self.ctx.prec();
        match self.next() {
            Some(Token::Num(s)) => match Float::parse(&s) {
                Ok(v) => Ok(Node::Num(Float::with_val(prec, v))),
                Err(_) => err(format!("malformed number `{s}` in `{}`", self.src)),
            },
            Some(Token::Open) => {
                let inner = self.sum()?;
                match self.next() {
                    Some(Token::Close) => Ok(inner),
                    _ => err(format!("missing `)` in `{}`", self.src)),
                }
            }
            Some(Token::Name(name)) => {
                if let Some(func) = Func::lookup(&name) {
                    if self.next() != Some(Token::Open) {
                        return err(format!("function `{name}` needs parentheses in `{}`", self.src));
                    }
                    let arg = self.sum()?;
                    if self.next() != Some(Token::Close) {
                        return err(format!("missing `)` after `{name}(` in `{}`", self.src));
                    }
                    return Ok(Node::Call(func, Box::new(arg)));
                }
                match name.as_str() {
                    "t" => {
                        self.uses_t = true;
                        Ok(Node::Var)
                    }
                    "pi" => Ok(Node::Num(self.ctx.pi().clone())),
                    "phi7" => Ok(Node::Num(self.ctx.phi7().clone())),
                    "e" => Ok(Node::Num(Float::with_val(prec, 1).exp())),
                    _ => err(format!("unknown name `{name}` in `{}`", self.src)),
                }
            }
            Some(tok) => err(format!("unexpected {tok:?} in `{}`", self.src)),
            None => err(format!("unexpected end of `{}`", self.src)),
        }
    }
}

impl Expr {
    pub fn parse(src: &str, ctx: &PrecisionContext) -> Result<Expr, ExprError> {
        let tokens = tokenize(src)?;
        if tokens.is_empty() {
            return err("empty expression");
        }
        let mut p = Parser { tokens, pos: 0, ctx, uses_t: false, src };
        let root = p.sum()?;
        if p.pos < p.tokens.len() {
            return err(format!("trailing input in `{src}`"));
        }
        Ok(Expr { root, uses_t: p.uses_t })
    }

    /// Value at `t` (ignored for constant expressions), at working precision.
    pub fn eval(&self, t: &Float, ctx: &PrecisionContext) -> Float {
        eval(&self.root, t, ctx)
    }

    /// Value of a constant expression; rejects `t` and non-finite results.
    pub fn constant(src: &str, ctx: &PrecisionContext) -> Result<Float, ExprError> {
        let e = Expr::parse(src, ctx)?;
        if e.uses_t {
            return err(format!("`{src}` must not mention t"));
        }
        let v = e.eval(&Float::new(ctx.prec()), ctx);
        if !v.is_finite() {
            return err(format!("`{src}` does not evaluate to a finite number"));
        }
        Ok(v)
    }
}

fn eval(node: &Node, t: &Float, ctx: &PrecisionContext) -> Float {
    let prec = ctx.prec();
    match node {
        Node::Num(v) => v.clone(),
        Node::Var => Float::with_val(prec, t),
        Node::Neg(a) => -eval(a, t, ctx),
        Node::Bin(op, a, b) => {
            let a = eval(a, t, ctx);
            let b = eval(b, t, ctx);
            match op {
                '+' => a + b,
                '-' => a - b,
                '*' => a * b,
                '/' => a / b,
                '^' => Float::with_val(prec, a.pow(&b)),
                _ => unreachable!("operator set is closed"),
            }
        }
        Node::Call(f, a) => {
            let a = eval(a, t, ctx);
            match f {
                Func::Log => a.ln(),
                Func::Exp => a.exp(),
                Func::Sin => a.sin(),
                Func::Cos => a.cos(),
                Func::Tan => a.tan(),
                Func::Cot => a.tan().recip(),
                Func::Atan => a.atan(),
                Func::Acot => arccot(&a, ctx),
                Func::Sqrt => a.sqrt(),
                Func::Abs => a.abs(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use dilogint::make_context;

    use super::*;

    fn value(src: &str) -> f64 {
        let ctx = make_context(30).unwrap();
        Expr::constant(src, &ctx).unwrap().to_f64()
    }

    #[test]
    fn rational_multiples_of_pi() {
        let pi = std::f64::consts::PI;
        assert!((value("2pi/7") - 2.0 * pi / 7.0).abs() < 1e-15);
        assert!((value("-pi/3") + pi / 3.0).abs() < 1e-15);
        assert!((value("pi") - pi).abs() < 1e-15);
        assert!((value("3*pi/2") - 1.5 * pi).abs() < 1e-15);
    }

    #[test]
    fn phi7_token() {
        assert!((value("6phi7") - 6.0 * 1.209_429_202_888_189).abs() < 1e-14);
        assert!((value("tan(phi7)^2") - 7.0).abs() < 1e-13);
    }

    #[test]
    fn precedence_and_functions() {
        assert_eq!(value("1 + 2 * 3"), 7.0);
        assert_eq!(value("2^3^2"), 512.0);
        assert_eq!(value("-2^2"), -4.0);
        assert_eq!(value("(1+1)(2+1)"), 6.0);
        assert!((value("sqrt(7)") - 7f64.sqrt()).abs() < 1e-15);
        assert!((value("acot(-1)") + std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!((value("log(e)") - 1.0).abs() < 1e-15);
        assert_eq!(value("1.5e2"), 150.0);
        assert!((value("2e") - 2.0 * std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn decimals_are_parsed_at_full_precision() {
        let ctx = make_context(40).unwrap();
        let tenth = Expr::constant("0.1", &ctx).unwrap();
        assert_eq!(tenth, Float::with_val(ctx.prec(), Float::parse("0.1").unwrap()));
    }

    #[test]
    fn variable_and_rejections() {
        let ctx = make_context(20).unwrap();
        let e = Expr::parse("log(t)", &ctx).unwrap();
        assert!(e.uses_t);
        assert!((e.eval(&ctx.float(2), &ctx).to_f64() - 2f64.ln()).abs() < 1e-15);
        for bad in ["", "2+", "foo", "sin 2", "(1", "1)", "system(1)", "1;2", "t"] {
            assert!(Expr::constant(bad, &ctx).is_err(), "{bad}");
        }
        assert!(Expr::constant("1/0", &ctx).is_err());
    }
}
