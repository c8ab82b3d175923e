//! Lexer and recursive-descent parser for session scripts.

use num_bigint::BigInt;

use super::ast::*;
use super::FrontendError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    span: Span,
}

fn lex(src: &str) -> Result<Vec<Token>, FrontendError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1u32, 1u32);
    while i < chars.len() {
        let c = chars[i];
        let span = Span { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        // comments run to end of line
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += (i - start) as u32;
            out.push(Token {
                tok: Tok::Int(s.parse().unwrap()),
                span,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += (i - start) as u32;
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                span,
            });
            continue;
        }
        if "()[]{},;:=+-*/^".contains(c) {
            out.push(Token {
                tok: Tok::Sym(c),
                span,
            });
            i += 1;
            col += 1;
            continue;
        }
        return Err(FrontendError::Syntax {
            span,
            msg: format!("unexpected character '{c}'"),
        });
    }
    out.push(Token {
        tok: Tok::Eof,
        span: Span { line, col },
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

type PResult<T> = Result<T, FrontendError>;

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Int(n) => format!("'{n}'"),
        Tok::Sym(c) => format!("'{c}'"),
        Tok::Eof => "end of input".into(),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn span(&self) -> Span {
        self.toks[self.pos].span
    }

    fn err<T>(&self, expected: &str) -> PResult<T> {
        Err(FrontendError::Syntax {
            span: self.span(),
            msg: format!("expected {expected}, found {}", describe(self.peek())),
        })
    }

    fn at(&self, c: char) -> bool {
        *self.peek() == Tok::Sym(c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.at(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(&format!("'{c}'"))
        }
    }

    fn ident(&mut self) -> PResult<(String, Span)> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let sp = self.span();
                self.pos += 1;
                Ok((s, sp))
            }
            _ => self.err("an identifier"),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Tok::Ident(s) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => self.err(&format!("'{kw}'")),
        }
    }

    fn small_int(&mut self) -> PResult<u32> {
        match self.peek().clone() {
            Tok::Int(n) => match u32::try_from(&n) {
                Ok(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                Err(_) => Err(FrontendError::Syntax {
                    span: self.span(),
                    msg: format!("integer {n} is too large"),
                }),
            },
            _ => self.err("an integer"),
        }
    }

    fn script(&mut self) -> PResult<Script> {
        let mut stmts = Vec::new();
        while *self.peek() != Tok::Eof {
            stmts.push(self.stmt()?);
        }
        Ok(Script { stmts })
    }

    fn stmt(&mut self) -> PResult<Stmt> {
        let span = self.span();
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.err("a statement"),
        };
        self.pos += 1;
        let stmt = match kw.as_str() {
            "field" => {
                self.keyword("cyclotomic")?;
                self.expect('(')?;
                let conductor = self.small_int()?;
                self.expect(')')?;
                Stmt::Field { conductor, span }
            }
            "algebra" => {
                let (name, _) = self.ident()?;
                self.expect('=')?;
                let def = self.algebra_def()?;
                Stmt::Algebra { name, def, span }
            }
            "group" => {
                let (name, _) = self.ident()?;
                self.expect('=')?;
                self.keyword("matrices")?;
                self.expect('{')?;
                let mut gens = Vec::new();
                while !self.at('}') {
                    let (g, _) = self.ident()?;
                    self.expect(':')?;
                    gens.push((g, self.matrix_expr()?));
                    self.expect(';')?;
                }
                self.expect('}')?;
                Stmt::Group { name, gens, span }
            }
            "pair" => {
                let (name, _) = self.ident()?;
                self.expect('=')?;
                self.expect('(')?;
                let left = self.expr_list()?;
                self.expect(',')?;
                let right = self.expr_list()?;
                self.expect(')')?;
                Stmt::Pair {
                    name,
                    left,
                    right,
                    span,
                }
            }
            "element" => {
                let (name, _) = self.ident()?;
                self.expect('=')?;
                let expr = self.expr()?;
                Stmt::Element { name, expr, span }
            }
            "task" => Stmt::Task(self.task(span)?),
            other => {
                return Err(FrontendError::Syntax {
                    span,
                    msg: format!("unknown statement '{other}'"),
                })
            }
        };
        self.expect(';')?;
        Ok(stmt)
    }

    fn algebra_def(&mut self) -> PResult<AlgebraDef> {
        let (kind, sp) = self.ident()?;
        match kind.as_str() {
            "commutative" => {
                self.expect('(')?;
                let n = self.small_int()?;
                self.expect(')')?;
                Ok(AlgebraDef::Commutative(n))
            }
            "quantum_affine" => {
                self.expect('(')?;
                let q = self.matrix()?;
                self.expect(')')?;
                Ok(AlgebraDef::QuantumAffine(q))
            }
            "downup" => {
                self.expect('(')?;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(AlgebraDef::Downup(a, b))
            }
            "presentation" => {
                self.expect('{')?;
                self.keyword("gens")?;
                self.expect(':')?;
                let mut gens = Vec::new();
                loop {
                    let (g, _) = self.ident()?;
                    let d = if self.eat(':') { self.small_int()? } else { 1 };
                    gens.push((g, d));
                    if !self.eat(',') {
                        break;
                    }
                }
                self.expect(';')?;
                self.keyword("rels")?;
                self.expect(':')?;
                let mut rels = Vec::new();
                if !self.at(';') {
                    rels.push(self.expr()?);
                    while self.eat(',') {
                        rels.push(self.expr()?);
                    }
                }
                self.expect(';')?;
                let mut gkdim = None;
                if !self.at('}') {
                    self.keyword("gkdim")?;
                    self.expect(':')?;
                    gkdim = Some(self.small_int()?);
                    self.expect(';')?;
                }
                self.expect('}')?;
                Ok(AlgebraDef::Presentation { gens, rels, gkdim })
            }
            "quotient" => {
                self.expect('(')?;
                let (base, base_span) = self.ident()?;
                self.expect(',')?;
                let gens = self.expr_list()?;
                self.expect(')')?;
                Ok(AlgebraDef::Quotient {
                    base,
                    base_span,
                    gens,
                })
            }
            other => Err(FrontendError::Syntax {
                span: sp,
                msg: format!("unknown algebra constructor '{other}'"),
            }),
        }
    }

    fn matrix_expr(&mut self) -> PResult<MatrixExpr> {
        match self.peek() {
            Tok::Ident(s) if s == "diag" => {
                self.pos += 1;
                self.expect('(')?;
                let d = self.comma_exprs(')')?;
                Ok(MatrixExpr::Diag(d))
            }
            Tok::Ident(s) if s == "perm" => {
                self.pos += 1;
                self.expect('(')?;
                let mut p = vec![self.small_int()?];
                while self.eat(',') {
                    p.push(self.small_int()?);
                }
                self.expect(')')?;
                Ok(MatrixExpr::Perm(p))
            }
            _ => Ok(MatrixExpr::Rows(self.matrix()?)),
        }
    }

    fn matrix(&mut self) -> PResult<Vec<Vec<Expr>>> {
        self.expect('[')?;
        let mut rows = vec![self.expr_list()?];
        while self.eat(',') {
            rows.push(self.expr_list()?);
        }
        self.expect(']')?;
        Ok(rows)
    }

    /// `[e, e, ...]`, possibly empty.
    fn expr_list(&mut self) -> PResult<Vec<Expr>> {
        self.expect('[')?;
        self.comma_exprs(']')
    }

    fn comma_exprs(&mut self, close: char) -> PResult<Vec<Expr>> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.expr()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn task(&mut self, span: Span) -> PResult<TaskStmt> {
        let (k, ksp) = self.ident()?;
        let kind = TaskKind::parse(&k).ok_or_else(|| FrontendError::Syntax {
            span: ksp,
            msg: format!("unknown task '{k}'"),
        })?;
        self.expect('(')?;
        let mut args = Vec::new();
        if !self.eat(')') {
            loop {
                if self.at('[') {
                    args.push(Arg::List(self.expr_list()?));
                } else {
                    args.push(Arg::Expr(self.expr()?));
                }
                if self.eat(')') {
                    break;
                }
                self.expect(',')?;
            }
        }
        let mut options = Vec::new();
        while !self.at(';') {
            let (key, _) = self.ident()?;
            self.expect('=')?;
            let v = match self.peek().clone() {
                Tok::Int(n) => {
                    let sp = self.span();
                    self.pos += 1;
                    OptValue::Int(i64::try_from(&n).map_err(|_| FrontendError::Syntax {
                        span: sp,
                        msg: format!("integer {n} is too large"),
                    })?)
                }
                Tok::Ident(s) => {
                    self.pos += 1;
                    OptValue::Ident(s)
                }
                Tok::Sym('[') => {
                    self.pos += 1;
                    let mut xs = Vec::new();
                    if !self.eat(']') {
                        loop {
                            xs.push(self.ident()?.0);
                            if self.eat(']') {
                                break;
                            }
                            self.expect(',')?;
                        }
                    }
                    OptValue::List(xs)
                }
                _ => return self.err("an option value"),
            };
            options.push((key, v));
        }
        Ok(TaskStmt {
            kind,
            args,
            options,
            span,
        })
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    // term := unary (('*'|'/') unary)*
    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            let k = self.small_int()?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> PResult<Expr> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Tok::Ident(s) => {
                let sp = self.span();
                self.pos += 1;
                Ok(Expr::Ident(s, sp))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            _ => self.err("an expression"),
        }
    }
}

pub fn parse(src: &str) -> Result<Script, FrontendError> {
    let toks = lex(src)?;
    Parser { toks, pos: 0 }.script()
}

/// A single expression, for use outside scripts.
pub fn parse_expr(src: &str) -> Result<Expr, FrontendError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::Eof {
        return p.err("end of input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_expr("-x^2 + 3*y*z - (x - y)/2").unwrap();
        assert_eq!(e.to_string(), "-x^2 + 3*y*z - (x - y)/2");
        let f = parse_expr("x - (y - z)").unwrap();
        assert_eq!(parse_expr(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn positions() {
        let err = parse("field cyclotomic(3);\nalgebra R = commutative(2)\ntask hilbert(R);").unwrap_err();
        match err {
            FrontendError::Syntax { span, .. } => assert_eq!((span.line, span.col), (3, 1)),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn statements() {
        let s = parse(
            "algebra R = presentation { gens: x, t:2; rels: t*x - x*t; gkdim: 2; };\n\
             group G = matrices { s: perm(2,1); h: diag(-1, z4); m: [[0, 1], [1, 0]]; };\n\
             pair P = ([x, y], [x, -y]);\n\
             task cofinality(R, G) s_max=3 strategies=[determinant];",
        )
        .unwrap();
        assert_eq!(s.stmts.len(), 4);
        assert_eq!(parse(&s.to_string()).unwrap(), s);
    }
}
