//! Expression grammar for current-algebra elements, spinors and matrices.
//!
//! ```text
//! expr    := term (('+'|'-') term)*
//! term    := [coef '*'] atom
//! atom    := 'ten(' spinor ',' matrix ')' | 'a0' | 'a1' | 'a2' | 'nv'
//!          | '[' expr ',' expr ']' | matatom
//! spinor  := [coef '*'] satom (('+'|'-') [coef '*'] satom)*
//! satom   := 'phi(' ('+'|'-') ',' m ',' l ',' k ')' | 'I' | 'Jq' | 'kappa' | 'lambda'
//!          | 'kappa_st' | 'lambda_st' | 'spinor(' poly ';' poly ')' | '(' spinor ')'
//! matrix  := [coef '*'] matatom (('+'|'-') [coef '*'] matatom)*
//! matatom := 'E(' i ',' j ')' | 'h(' i ')' | 'x(' i ')' | 'y(' i ')' | 'Jm(' matrix ')' | '(' matrix ')'
//! ```
//! Coefficients multiply from the right. A bare matrix atom stands for ten(I, ·), and
//! ten(φ, A + Jm(B)) = φ⊗A + (jφ)⊗B.

use s3ca::current::{cur_bracket_with, CentralMode, CurrentElement};
use s3ca::matquat::{chevalley_data, CMatrix, QuatMatrix};
use s3ca::parse::{Parser, Tok};
use s3ca::spinor::{phi_basis, BasisIndex, Sign, Spinor};
use s3ca::{MathError, ParseError, Scalar};

use crate::CliError;

/// Matrix expression, evaluated once the dimension is known.
#[derive(Clone, Debug)]
pub enum MatAst {
    E(usize, usize),
    H(usize),
    X(usize),
    Y(usize),
    J(Box<MatAst>),
    Lin(Vec<(Scalar, MatAst)>),
}

impl MatAst {
    /// Smallest n in which every index makes sense.
    pub fn min_n(&self) -> usize {
        match self {
            MatAst::E(i, j) => (*i).max(*j),
            MatAst::H(i) | MatAst::X(i) | MatAst::Y(i) => i + 1,
            MatAst::J(m) => m.min_n(),
            MatAst::Lin(v) => v.iter().map(|(_, m)| m.min_n()).max().unwrap_or(1),
        }
    }

    pub fn eval(&self, n: usize) -> Result<QuatMatrix, MathError> {
        let check = |i: usize| {
            if i == 0 || i >= n {
                Err(MathError::IndexOutOfRange(format!("generator index {i} in sl({n})")))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            MatAst::E(i, j) => QuatMatrix::complex(CMatrix::e(n, *i, *j)?),
            MatAst::H(i) => {
                check(*i)?;
                QuatMatrix::complex(chevalley_data(n)?.h(*i).clone())
            }
            MatAst::X(i) => {
                check(*i)?;
                QuatMatrix::complex(chevalley_data(n)?.x(*i).clone())
            }
            MatAst::Y(i) => {
                check(*i)?;
                QuatMatrix::complex(chevalley_data(n)?.y(*i).clone())
            }
            MatAst::J(m) => {
                // J(A + JB) = −B + JA
                let q = m.eval(n)?;
                QuatMatrix::new(q.b.scale(&Scalar::from_int(-1)), q.a)?
            }
            MatAst::Lin(v) => {
                let mut acc = QuatMatrix::complex(CMatrix::zero(n));
                for (c, m) in v {
                    acc = acc.add(&m.eval(n)?.scale(c))?;
                }
                acc
            }
        })
    }
}

/// Current-algebra expression.
#[derive(Clone, Debug)]
pub enum Ast {
    Ten(Spinor, MatAst),
    Central(usize),
    Nv,
    Bracket(Box<Ast>, Box<Ast>),
    Lin(Vec<(Scalar, Ast)>),
}

impl Ast {
    pub fn min_n(&self) -> usize {
        match self {
            Ast::Ten(_, m) => m.min_n(),
            Ast::Central(_) | Ast::Nv => 1,
            Ast::Bracket(a, b) => a.min_n().max(b.min_n()),
            Ast::Lin(v) => v.iter().map(|(_, a)| a.min_n()).max().unwrap_or(1),
        }
    }

    pub fn eval(&self, n: usize, mode: CentralMode) -> Result<CurrentElement, MathError> {
        Ok(match self {
            Ast::Ten(phi, m) => {
                let q = m.eval(n)?;
                let jphi = Spinor::j_unit().mul(phi);
                CurrentElement::tensor(phi, &q.a).add(&CurrentElement::tensor(&jphi, &q.b))?
            }
            Ast::Central(k) => CurrentElement::central_unit(n, *k)?,
            Ast::Nv => CurrentElement::nv(n),
            Ast::Bracket(a, b) => cur_bracket_with(&a.eval(n, mode)?, &b.eval(n, mode)?, mode)?,
            Ast::Lin(v) => {
                let mut acc = CurrentElement::zero(n);
                for (c, a) in v {
                    acc = acc.add(&a.eval(n, mode)?.scale(c))?;
                }
                acc
            }
        })
    }
}

struct ExprParser {
    p: Parser,
}

fn starts_scalar(t: Option<&Tok>) -> bool {
    match t {
        Some(Tok::Int(_)) | Some(Tok::Sym('(')) => true,
        Some(Tok::Ident(s)) => s == "im" || s == "sqrt",
        _ => false,
    }
}

impl ExprParser {
    fn new(s: &str) -> Result<Self, ParseError> {
        Ok(ExprParser { p: Parser::new(s)? })
    }

    /// Constant factors joined by '*' or '/', stopping before a non-scalar atom.
    fn coef(&mut self) -> Result<Scalar, ParseError> {
        let pos = self.p.pos();
        let to_const = |x: s3ca::LaurentPoly, pos: usize| {
            x.as_constant()
                .ok_or_else(|| ParseError::new(pos, "expected a constant coefficient"))
        };
        let mut c = to_const(self.p.power()?, pos)?;
        loop {
            if self.p.at_sym('*') && starts_scalar(self.p.peek_at(1)) {
                self.p.eat_sym('*');
                let pos = self.p.pos();
                c = &c * &to_const(self.p.power()?, pos)?;
            } else if self.p.at_sym('/') {
                self.p.eat_sym('/');
                let pos = self.p.pos();
                let d = to_const(self.p.power()?, pos)?;
                c = c
                    .checked_div(&d)
                    .map_err(|_| ParseError::new(pos, "division by zero"))?;
            } else {
                return Ok(c);
            }
        }
    }

    /// Optional "coef *" prefix, with a leading sign already folded in.
    fn signed_coef(&mut self, sign: i64) -> Result<Scalar, ParseError> {
        let s = Scalar::from_int(sign);
        if starts_scalar(self.p.peek()) && !self.paren_is_structural() {
            let c = self.coef()?;
            self.p.expect_sym('*')?;
            Ok(&s * &c)
        } else {
            Ok(s)
        }
    }

    /// A '(' opening a grouped spinor or matrix rather than a scalar.
    fn paren_is_structural(&self) -> bool {
        if !self.p.at_sym('(') {
            return false;
        }
        matches!(
            self.p.peek_at(1),
            Some(Tok::Ident(s)) if matches!(
                s.as_str(),
                "phi" | "I" | "Jq" | "kappa" | "lambda" | "kappa_st" | "lambda_st" | "spinor"
                    | "E" | "h" | "x" | "y" | "Jm"
            )
        )
    }

    fn lin<T>(
        &mut self,
        atom: fn(&mut Self) -> Result<T, ParseError>,
    ) -> Result<Vec<(Scalar, T)>, ParseError> {
        let mut out = Vec::new();
        let mut sign = if self.p.eat_sym('-') {
            -1
        } else {
            self.p.eat_sym('+');
            1
        };
        loop {
            let c = self.signed_coef(sign)?;
            out.push((c, atom(self)?));
            if self.p.eat_sym('+') {
                sign = 1;
            } else if self.p.eat_sym('-') {
                sign = -1;
            } else {
                return Ok(out);
            }
        }
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let pos = self.p.pos();
        let v = self.p.small_int()?;
        usize::try_from(v).map_err(|_| ParseError::new(pos, "index must be nonnegative"))
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let terms = self.lin(Self::atom)?;
        Ok(simplify(terms, Ast::Lin))
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        if self.p.eat_sym('[') {
            let a = self.expr()?;
            self.p.expect_sym(',')?;
            let b = self.expr()?;
            self.p.expect_sym(']')?;
            return Ok(Ast::Bracket(Box::new(a), Box::new(b)));
        }
        let pos = self.p.pos();
        match self.p.peek() {
            Some(Tok::Ident(s)) => match s.as_str() {
                "ten" => {
                    self.p.ident()?;
                    self.p.expect_sym('(')?;
                    let phi = self.spinor()?;
                    self.p.expect_sym(',')?;
                    let m = self.matrix()?;
                    self.p.expect_sym(')')?;
                    Ok(Ast::Ten(phi, m))
                }
                "a0" | "a1" | "a2" => {
                    let k = s[1..].parse().expect("digit");
                    self.p.ident()?;
                    Ok(Ast::Central(k))
                }
                "nv" => {
                    self.p.ident()?;
                    Ok(Ast::Nv)
                }
                "E" | "h" | "x" | "y" | "Jm" => Ok(Ast::Ten(Spinor::unit(), self.mat_atom()?)),
                other => Err(ParseError::new(pos, format!("unknown atom `{other}`"))),
            },
            _ => Err(ParseError::new(pos, "expected an atom")),
        }
    }

    pub fn spinor(&mut self) -> Result<Spinor, ParseError> {
        let terms = self.lin(Self::spinor_atom)?;
        let mut acc = Spinor::zero();
        for (c, s) in terms {
            acc = &acc + &s.scale(&c);
        }
        Ok(acc)
    }

    fn spinor_atom(&mut self) -> Result<Spinor, ParseError> {
        let pos = self.p.pos();
        if self.p.eat_sym('(') {
            let s = self.spinor()?;
            self.p.expect_sym(')')?;
            return Ok(s);
        }
        let name = self.p.ident()?;
        match name.as_str() {
            "I" => Ok(Spinor::unit()),
            "Jq" => Ok(Spinor::jq()),
            "kappa" => Ok(Spinor::kappa()),
            "lambda" => Ok(Spinor::lambda()),
            "kappa_st" => Ok(Spinor::kappa_star()),
            "lambda_st" => Ok(Spinor::lambda_star()),
            "phi" => {
                self.p.expect_sym('(')?;
                let sign = if self.p.eat_sym('+') {
                    Sign::Plus
                } else if self.p.eat_sym('-') {
                    Sign::Minus
                } else {
                    return Err(self.p.err("expected `+` or `-`"));
                };
                let mut v = [0i64; 3];
                for slot in &mut v {
                    self.p.expect_sym(',')?;
                    *slot = self.p.small_int()?;
                }
                self.p.expect_sym(')')?;
                let idx = BasisIndex::from_ints(sign, v[0], v[1], v[2])
                    .map_err(|e| ParseError::new(pos, e.to_string()))?;
                Ok(phi_basis(&idx))
            }
            "spinor" => {
                self.p.expect_sym('(')?;
                let u = self.p.poly()?;
                self.p.expect_sym(';')?;
                let v = self.p.poly()?;
                self.p.expect_sym(')')?;
                Ok(Spinor::new(u, v))
            }
            other => Err(ParseError::new(pos, format!("unknown spinor `{other}`"))),
        }
    }

    fn matrix(&mut self) -> Result<MatAst, ParseError> {
        let terms = self.lin(Self::mat_atom)?;
        Ok(simplify(terms, MatAst::Lin))
    }

    fn mat_atom(&mut self) -> Result<MatAst, ParseError> {
        let pos = self.p.pos();
        if self.p.eat_sym('(') {
            let m = self.matrix()?;
            self.p.expect_sym(')')?;
            return Ok(m);
        }
        let name = self.p.ident()?;
        self.p.expect_sym('(')?;
        let out = match name.as_str() {
            "E" => {
                let i = self.index()?;
                self.p.expect_sym(',')?;
                let j = self.index()?;
                MatAst::E(i, j)
            }
            "h" => MatAst::H(self.index()?),
            "x" => MatAst::X(self.index()?),
            "y" => MatAst::Y(self.index()?),
            "Jm" => MatAst::J(Box::new(self.matrix()?)),
            other => return Err(ParseError::new(pos, format!("unknown matrix `{other}`"))),
        };
        self.p.expect_sym(')')?;
        Ok(out)
    }
}

fn simplify<T>(mut terms: Vec<(Scalar, T)>, wrap: fn(Vec<(Scalar, T)>) -> T) -> T {
    if terms.len() == 1 && terms[0].0.is_one() {
        terms.pop().expect("one term").1
    } else {
        wrap(terms)
    }
}

/// Parses a current-algebra expression to its syntax tree.
pub fn parse_ast(s: &str) -> Result<Ast, ParseError> {
    let mut ep = ExprParser::new(s)?;
    let a = ep.expr()?;
    ep.p.expect_end()?;
    Ok(a)
}

/// Parses and evaluates; n defaults to the smallest size the indices allow (at least 2).
pub fn parse_current(s: &str, n: Option<usize>, mode: CentralMode) -> Result<CurrentElement, CliError> {
    let ast = parse_ast(s)?;
    let n = n.unwrap_or_else(|| ast.min_n().max(2));
    Ok(ast.eval(n, mode)?)
}

pub fn parse_spinor(s: &str) -> Result<Spinor, ParseError> {
    let mut ep = ExprParser::new(s)?;
    let out = ep.spinor()?;
    ep.p.expect_end()?;
    Ok(out)
}

/// Parses a matrix expression to a quaternionic matrix of size n (default: inferred, at least 2).
pub fn parse_quat_matrix(s: &str, n: Option<usize>) -> Result<QuatMatrix, CliError> {
    let mut ep = ExprParser::new(s)?;
    let m = ep.matrix()?;
    ep.p.expect_end()?;
    let n = n.unwrap_or_else(|| m.min_n().max(2));
    Ok(m.eval(n)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spinor_forms() {
        assert_eq!(parse_spinor("kappa").unwrap(), Spinor::kappa());
        assert_eq!(parse_spinor("phi(+,1,0,1)").unwrap(), Spinor::kappa());
        let s = parse_spinor("2*I - im*Jq").unwrap();
        assert_eq!(s, &Spinor::unit().scale(&Scalar::from_int(2)) - &Spinor::jq().scale(&Scalar::i()));
        assert_eq!(parse_spinor("spinor(z2; -z1c)").unwrap(), Spinor::kappa());
        assert!(parse_spinor("phi(+,1,2,0)").is_err());
    }

    #[test]
    fn current_forms() {
        let a = parse_current("[x(1), y(1)]", None, CentralMode::Graded).unwrap();
        let b = parse_current("h(1)", None, CentralMode::Graded).unwrap();
        assert_eq!(a, b);
        let c = parse_current("(1/2)*a0 - nv + 3*ten(kappa, E(1,2))", Some(3), CentralMode::Graded).unwrap();
        let back = parse_current(&c.to_string(), Some(3), CentralMode::Graded).unwrap();
        assert_eq!(c, back);
    }

    #[test]
    fn j_matrices() {
        let q = parse_quat_matrix("Jm(h(1))", None).unwrap();
        assert_eq!(q.to_string(), "Jm(E(1,1) + (-1)*E(2,2))");
        let jj = parse_quat_matrix("Jm(Jm(E(1,1)))", None).unwrap();
        assert_eq!(jj.to_string(), "(-1)*E(1,1)");
    }

    #[test]
    fn errors() {
        assert!(parse_ast("ten(kappa E(1,2))").is_err());
        assert!(parse_ast("foo").is_err());
        assert!(parse_current("x(3)", Some(3), CentralMode::Graded).is_err());
    }
}
