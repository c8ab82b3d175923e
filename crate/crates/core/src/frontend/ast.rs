//! Syntax tree of session scripts. Spans never take part in equality.

use std::fmt;

use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, Default)]
pub struct Span {
    pub line: u32,
    pub col: u32,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl Eq for Span {}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Ident(String, Span),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Every identifier, in source order.
    pub fn idents(&self) -> Vec<(&str, Span)> {
        let mut out = Vec::new();
        self.collect_idents(&mut out);
        out
    }

    fn collect_idents<'a>(&'a self, out: &mut Vec<(&'a str, Span)>) {
        match self {
            Expr::Int(_) => {}
            Expr::Ident(s, sp) => out.push((s, *sp)),
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_idents(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_idents(out);
                b.collect_idents(out);
            }
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(_) | Expr::Ident(..) => 5,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.prec() < min;
        if paren {
            write!(f, "(")?;
        }
        match self {
            Expr::Int(n) => write!(f, "{n}")?,
            Expr::Ident(s, _) => write!(f, "{s}")?,
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.fmt_prec(f, 3)?;
            }
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "*")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Div(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, "/")?;
                b.fmt_prec(f, 3)?;
            }
            Expr::Pow(a, k) => {
                a.fmt_prec(f, 5)?;
                write!(f, "^{k}")?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraDef {
    Commutative(u32),
    QuantumAffine(Vec<Vec<Expr>>),
    Downup(Expr, Expr),
    Presentation {
        gens: Vec<(String, u32)>,
        rels: Vec<Expr>,
        gkdim: Option<u32>,
    },
    Quotient {
        base: String,
        base_span: Span,
        gens: Vec<Expr>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixExpr {
    Rows(Vec<Vec<Expr>>),
    Diag(Vec<Expr>),
    /// One-based images of the generators.
    Perm(Vec<u32>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TaskKind {
    Radical,
    Pertinency,
    Invariants,
    Cofinality,
    Verify,
    Semisimple,
    Normality,
    Hilbert,
    Gb,
    Soundness,
}

impl TaskKind {
    pub const ALL: [TaskKind; 10] = [
        TaskKind::Radical,
        TaskKind::Pertinency,
        TaskKind::Invariants,
        TaskKind::Cofinality,
        TaskKind::Verify,
        TaskKind::Semisimple,
        TaskKind::Normality,
        TaskKind::Hilbert,
        TaskKind::Gb,
        TaskKind::Soundness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TaskKind::Radical => "radical",
            TaskKind::Pertinency => "pertinency",
            TaskKind::Invariants => "invariants",
            TaskKind::Cofinality => "cofinality",
            TaskKind::Verify => "verify",
            TaskKind::Semisimple => "semisimple",
            TaskKind::Normality => "normality",
            TaskKind::Hilbert => "hilbert",
            TaskKind::Gb => "gb",
            TaskKind::Soundness => "soundness",
        }
    }

    pub fn parse(s: &str) -> Option<TaskKind> {
        TaskKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Arg {
    Expr(Expr),
    List(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OptValue {
    Int(i64),
    Ident(String),
    List(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskStmt {
    pub kind: TaskKind,
    pub args: Vec<Arg>,
    pub options: Vec<(String, OptValue)>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Field { conductor: u32, span: Span },
    Algebra { name: String, def: AlgebraDef, span: Span },
    Group { name: String, gens: Vec<(String, MatrixExpr)>, span: Span },
    Pair { name: String, left: Vec<Expr>, right: Vec<Expr>, span: Span },
    Element { name: String, expr: Expr, span: Span },
    Task(TaskStmt),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

impl Script {
    pub fn tasks(&self) -> impl Iterator<Item = &TaskStmt> {
        self.stmts.iter().filter_map(|s| match s {
            Stmt::Task(t) => Some(t),
            _ => None,
        })
    }
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn rows(m: &[Vec<Expr>]) -> String {
    let r: Vec<String> = m.iter().map(|r| format!("[{}]", join(r))).collect();
    format!("[{}]", r.join(", "))
}

impl fmt::Display for OptValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OptValue::Int(n) => write!(f, "{n}"),
            OptValue::Ident(s) => write!(f, "{s}"),
            OptValue::List(xs) => write!(f, "[{}]", xs.join(", ")),
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Field { conductor, .. } => write!(f, "field cyclotomic({conductor});"),
            Stmt::Algebra { name, def, .. } => {
                write!(f, "algebra {name} = ")?;
                match def {
                    AlgebraDef::Commutative(n) => write!(f, "commutative({n});"),
                    AlgebraDef::QuantumAffine(q) => write!(f, "quantum_affine({});", rows(q)),
                    AlgebraDef::Downup(a, b) => write!(f, "downup({a}, {b});"),
                    AlgebraDef::Presentation { gens, rels, gkdim } => {
                        let g: Vec<String> = gens
                            .iter()
                            .map(|(n, d)| if *d == 1 { n.clone() } else { format!("{n}:{d}") })
                            .collect();
                        write!(f, "presentation {{ gens: {}; rels: {};", g.join(", "), join(rels))?;
                        if let Some(k) = gkdim {
                            write!(f, " gkdim: {k};")?;
                        }
                        write!(f, " }};")
                    }
                    AlgebraDef::Quotient { base, gens, .. } => {
                        write!(f, "quotient({base}, [{}]);", join(gens))
                    }
                }
            }
            Stmt::Group { name, gens, .. } => {
                write!(f, "group {name} = matrices {{")?;
                for (g, m) in gens {
                    match m {
                        MatrixExpr::Rows(r) => write!(f, " {g}: {};", rows(r))?,
                        MatrixExpr::Diag(d) => write!(f, " {g}: diag({});", join(d))?,
                        MatrixExpr::Perm(p) => write!(f, " {g}: perm({});", join(p))?,
                    }
                }
                write!(f, " }};")
            }
            Stmt::Pair { name, left, right, .. } => {
                write!(f, "pair {name} = ([{}], [{}]);", join(left), join(right))
            }
            Stmt::Element { name, expr, .. } => write!(f, "element {name} = {expr};"),
            Stmt::Task(t) => {
                let args: Vec<String> = t
                    .args
                    .iter()
                    .map(|a| match a {
                        Arg::Expr(e) => e.to_string(),
                        Arg::List(xs) => format!("[{}]", join(xs)),
                    })
                    .collect();
                write!(f, "task {}({})", t.kind.name(), args.join(", "))?;
                for (k, v) in &t.options {
                    write!(f, " {k}={v}")?;
                }
                write!(f, ";")
            }
        }
    }
}

impl fmt::Display for Script {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stmts {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}
