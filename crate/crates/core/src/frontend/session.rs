//! Declarations, validation, and binding of script expressions to algebras.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::action::{group_generate, FiniteGroup, LinearAuto, DEFAULT_MAX_ORDER};
use crate::algebra::{
    make_commutative, make_downup, make_quantum_affine, quotient_by_ideal, AlgElement,
    GradedAlgebra,
};
use crate::error::Error;
use crate::free::{Alphabet, FreePoly, Word};
use crate::radical::Strategy;
use crate::scalar::{Conductor, Scalar};

use super::ast::*;
use super::FrontendError;

type FResult<T> = Result<T, FrontendError>;

/// `zN` names a primitive `N`-th root of unity.
pub(crate) fn root_order(name: &str) -> Option<u32> {
    let digits = name.strip_prefix('z')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn invalid<T>(span: Span, msg: impl Into<String>) -> FResult<T> {
    Err(FrontendError::Invalid {
        span,
        msg: msg.into(),
    })
}

fn math(span: Span) -> impl Fn(Error) -> FrontendError {
    move |error| FrontendError::Math { span, error }
}

/// Positional arguments of a task, resolved by shape.
#[derive(Clone, Copy, Debug)]
pub(crate) struct TaskArgs<'s> {
    pub algebra: &'s str,
    pub group: Option<&'s str>,
    pub pair: Option<&'s str>,
    pub list: Option<&'s [Expr]>,
}

fn name_arg<'a>(a: &'a Arg, span: Span, what: &str) -> FResult<(&'a str, Span)> {
    match a {
        Arg::Expr(Expr::Ident(s, sp)) => Ok((s, *sp)),
        _ => invalid(span, format!("expected {what} name")),
    }
}

pub(crate) fn task_args(t: &TaskStmt) -> FResult<TaskArgs<'_>> {
    use TaskKind::*;
    let sp = t.span;
    let n = t.args.len();
    let arity = |want: &str| -> FResult<TaskArgs<'_>> {
        invalid(sp, format!("task {} takes ({want}), got {n} arguments", t.kind.name()))
    };
    let alg = |i: usize| name_arg(&t.args[i], sp, "an algebra").map(|x| x.0);
    match t.kind {
        Hilbert | Gb => {
            if n != 1 {
                return arity("algebra");
            }
            Ok(TaskArgs { algebra: alg(0)?, group: None, pair: None, list: None })
        }
        Radical | Pertinency | Invariants | Cofinality | Semisimple | Soundness => {
            if n != 2 {
                return arity("algebra, group");
            }
            Ok(TaskArgs {
                algebra: alg(0)?,
                group: Some(name_arg(&t.args[1], sp, "a group")?.0),
                pair: None,
                list: None,
            })
        }
        Verify => {
            if n != 3 {
                return arity("algebra, group, pair");
            }
            Ok(TaskArgs {
                algebra: alg(0)?,
                group: Some(name_arg(&t.args[1], sp, "a group")?.0),
                pair: Some(name_arg(&t.args[2], sp, "a pair")?.0),
                list: None,
            })
        }
        Normality => {
            let list = match t.args.last() {
                Some(Arg::List(xs)) => xs.as_slice(),
                _ => return arity("algebra, [group,] [elements]"),
            };
            let group = match n {
                2 => None,
                3 => Some(name_arg(&t.args[1], sp, "a group")?.0),
                _ => return arity("algebra, [group,] [elements]"),
            };
            Ok(TaskArgs { algebra: alg(0)?, group, pair: None, list: Some(list) })
        }
    }
}

fn allowed_options(kind: TaskKind, has_group: bool) -> Vec<&'static str> {
    let mut v = vec!["maxdeg"];
    if has_group {
        v.push("max_order");
    }
    match kind {
        TaskKind::Radical => v.extend(["source", "strategies", "max_tuples", "pairs"]),
        TaskKind::Pertinency => v.extend(["source", "strategies", "max_tuples", "pairs", "window"]),
        TaskKind::Cofinality => v.extend(["s_max", "n_cap"]),
        TaskKind::Soundness => v.extend(["strategies", "max_tuples", "samples"]),
        _ => {}
    }
    v
}

pub struct Session<'s> {
    script: &'s Script,
    conductor: Conductor,
    algebras: HashMap<&'s str, &'s AlgebraDef>,
    groups: HashMap<&'s str, &'s [(String, MatrixExpr)]>,
    pairs: HashMap<&'s str, (&'s [Expr], &'s [Expr])>,
    elements: HashMap<&'s str, &'s Expr>,
    alg_cache: HashMap<(String, u32), Arc<GradedAlgebra>>,
    group_cache: HashMap<(String, String, u32, usize), Arc<FiniteGroup>>,
}

impl<'s> Session<'s> {
    /// Collect declarations. Names share one namespace; `field` may appear
    /// once, before anything else.
    pub fn new(script: &'s Script) -> FResult<Self> {
        let mut s = Session {
            script,
            conductor: Conductor::new(1).unwrap(),
            algebras: HashMap::new(),
            groups: HashMap::new(),
            pairs: HashMap::new(),
            elements: HashMap::new(),
            alg_cache: HashMap::new(),
            group_cache: HashMap::new(),
        };
        let mut names: HashSet<&str> = HashSet::new();
        for (i, st) in script.stmts.iter().enumerate() {
            let (name, span) = match st {
                Stmt::Field { conductor, span } => {
                    if i != 0 {
                        return invalid(*span, "field declaration must come first");
                    }
                    s.conductor = Conductor::new(*conductor).map_err(math(*span))?;
                    continue;
                }
                Stmt::Task(_) => continue,
                Stmt::Algebra { name, def, span } => {
                    s.algebras.insert(name, def);
                    (name, span)
                }
                Stmt::Group { name, gens, span } => {
                    s.groups.insert(name, gens);
                    (name, span)
                }
                Stmt::Pair { name, left, right, span } => {
                    s.pairs.insert(name, (left, right));
                    (name, span)
                }
                Stmt::Element { name, expr, span } => {
                    s.elements.insert(name, expr);
                    (name, span)
                }
            };
            if root_order(name).is_some() {
                return invalid(*span, format!("'{name}' is reserved for roots of unity"));
            }
            if !names.insert(name) {
                return invalid(*span, format!("'{name}' is declared twice"));
            }
        }
        Ok(s)
    }

    pub fn conductor(&self) -> Conductor {
        self.conductor
    }

    pub fn script(&self) -> &'s Script {
        self.script
    }

    /// Evaluate in the free algebra on `alphabet` (constants only when
    /// `None`). Generators shadow element names, which shadow roots.
    fn eval(&self, e: &Expr, alphabet: Option<&Alphabet>, ctx: Span) -> FResult<FreePoly> {
        Ok(match e {
            Expr::Int(n) => FreePoly::constant(Scalar::from_bigint(n.clone())),
            Expr::Ident(name, sp) => {
                if let Some(l) = alphabet.and_then(|a| a.index_of(name)) {
                    alphabet.unwrap().gen(l)
                } else if let Some(body) = self.elements.get(name.as_str()) {
                    self.eval(body, alphabet, *sp)?
                } else if let Some(n) = root_order(name) {
                    FreePoly::constant(self.conductor.primitive_root(n).map_err(math(*sp))?)
                } else {
                    return Err(FrontendError::Undeclared {
                        span: *sp,
                        name: name.clone(),
                    });
                }
            }
            Expr::Neg(a) => self.eval(a, alphabet, ctx)?.neg(),
            Expr::Add(a, b) => self.eval(a, alphabet, ctx)?.add(&self.eval(b, alphabet, ctx)?),
            Expr::Sub(a, b) => self.eval(a, alphabet, ctx)?.sub(&self.eval(b, alphabet, ctx)?),
            Expr::Mul(a, b) => self.eval(a, alphabet, ctx)?.mul(&self.eval(b, alphabet, ctx)?),
            Expr::Div(a, b) => {
                let sp = b.idents().first().map_or(ctx, |x| x.1);
                let d = self.eval(b, alphabet, ctx)?;
                if d.degree() > 0 {
                    return invalid(sp, format!("division by non-constant {b}"));
                }
                let inv = d.coeff(&Word::empty()).inv().map_err(math(sp))?;
                self.eval(a, alphabet, ctx)?.scale(&inv)
            }
            Expr::Pow(a, k) => {
                let base = self.eval(a, alphabet, ctx)?;
                let mut acc = FreePoly::one();
                for _ in 0..*k {
                    acc = acc.mul(&base);
                }
                acc
            }
        })
    }

    fn scalar(&self, e: &Expr, ctx: Span) -> FResult<Scalar> {
        let p = self.eval(e, None, ctx)?;
        if p.degree() > 0 {
            return invalid(ctx, format!("expected a constant, found {e}"));
        }
        Ok(p.coeff(&Word::empty()))
    }

    /// Generators of a declared algebra, without building it.
    fn alphabet_of(&self, name: &str, span: Span) -> FResult<Alphabet> {
        let def = self.algebras.get(name).ok_or_else(|| FrontendError::Undeclared {
            span,
            name: name.into(),
        })?;
        let r = match def {
            AlgebraDef::Commutative(n) => Alphabet::standard(*n as usize),
            AlgebraDef::QuantumAffine(q) => Alphabet::standard(q.len()),
            AlgebraDef::Downup(..) => Alphabet::uniform(["x", "y"]),
            AlgebraDef::Presentation { gens, .. } => Alphabet::new(
                gens.iter().map(|g| g.0.clone()).collect(),
                gens.iter().map(|g| g.1).collect(),
            ),
            AlgebraDef::Quotient { base, base_span, .. } => return self.alphabet_of(base, *base_span),
        };
        r.map_err(math(span))
    }

    fn matrices(&self, gens: &[(String, MatrixExpr)], span: Span) -> FResult<Vec<Vec<Vec<Scalar>>>> {
        let mut out = Vec::new();
        for (g, m) in gens {
            let rows: Vec<Vec<Scalar>> = match m {
                MatrixExpr::Rows(r) => r
                    .iter()
                    .map(|row| row.iter().map(|e| self.scalar(e, span)).collect::<FResult<_>>())
                    .collect::<FResult<_>>()?,
                MatrixExpr::Diag(d) => {
                    let d: Vec<Scalar> = d.iter().map(|e| self.scalar(e, span)).collect::<FResult<_>>()?;
                    LinearAuto::diagonal(d).matrix().to_vec()
                }
                MatrixExpr::Perm(p) => {
                    let n = p.len();
                    let mut seen = vec![false; n];
                    for &i in p {
                        if i == 0 || i as usize > n || seen[i as usize - 1] {
                            return invalid(span, format!("{g}: perm({}) is not a permutation of 1..{n}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")));
                        }
                        seen[i as usize - 1] = true;
                    }
                    let p0: Vec<usize> = p.iter().map(|&i| i as usize - 1).collect();
                    LinearAuto::permutation(&p0).matrix().to_vec()
                }
            };
            let n = rows.len();
            if n == 0 || rows.iter().any(|r| r.len() != n) {
                return invalid(span, format!("{g}: matrix is not square"));
            }
            out.push(rows);
        }
        Ok(out)
    }

    /// Check the whole script without building any algebra.
    pub fn validate(&self) -> FResult<()> {
        let mut declared: HashSet<&str> = HashSet::new();
        let all_gens: HashSet<String> = self
            .script
            .stmts
            .iter()
            .filter_map(|st| match st {
                Stmt::Algebra { name, span, .. } => self.alphabet_of(name, *span).ok(),
                _ => None,
            })
            .flat_map(|a| a.names().to_vec())
            .collect();
        // identifiers in free-standing declarations: generators of some
        // algebra, earlier elements, or roots
        let loose = |e: &Expr, declared: &HashSet<&str>| -> FResult<()> {
            for (name, sp) in e.idents() {
                if all_gens.contains(name) || (declared.contains(name) && self.elements.contains_key(name)) {
                    continue;
                }
                match root_order(name) {
                    Some(n) => {
                        self.conductor.primitive_root(n).map_err(math(sp))?;
                    }
                    None => {
                        return Err(FrontendError::Undeclared {
                            span: sp,
                            name: name.into(),
                        })
                    }
                }
            }
            Ok(())
        };
        for st in &self.script.stmts {
            match st {
                Stmt::Field { .. } => {}
                Stmt::Algebra { name, def, span } => {
                    let sp = *span;
                    match def {
                        AlgebraDef::Commutative(n) => {
                            if *n == 0 {
                                return invalid(sp, "commutative(0) has no generators");
                            }
                        }
                        AlgebraDef::QuantumAffine(q) => {
                            for row in q {
                                if row.len() != q.len() {
                                    return invalid(sp, "q-matrix is not square");
                                }
                                for e in row {
                                    self.scalar(e, sp)?;
                                }
                            }
                        }
                        AlgebraDef::Downup(a, b) => {
                            self.scalar(a, sp)?;
                            self.scalar(b, sp)?;
                        }
                        AlgebraDef::Presentation { rels, .. } => {
                            let alpha = self.alphabet_of(name, sp)?;
                            for r in rels {
                                self.eval(r, Some(&alpha), sp)?;
                            }
                        }
                        AlgebraDef::Quotient { base, base_span, gens } => {
                            if !declared.contains(base.as_str()) || !self.algebras.contains_key(base.as_str()) {
                                return Err(FrontendError::Undeclared {
                                    span: *base_span,
                                    name: base.clone(),
                                });
                            }
                            let alpha = self.alphabet_of(base, *base_span)?;
                            for g in gens {
                                self.eval(g, Some(&alpha), sp)?;
                            }
                        }
                    }
                    declared.insert(name);
                }
                Stmt::Group { name, gens, span } => {
                    if gens.is_empty() {
                        return invalid(*span, "group needs at least one generator");
                    }
                    let ms = self.matrices(gens, *span)?;
                    if ms.iter().any(|m| m.len() != ms[0].len()) {
                        return invalid(*span, "generators have different sizes");
                    }
                    declared.insert(name);
                }
                Stmt::Pair { name, left, right, span } => {
                    if left.len() != right.len() || left.is_empty() {
                        return invalid(*span, format!("pair sides have lengths {} and {}", left.len(), right.len()));
                    }
                    for e in left.iter().chain(right) {
                        loose(e, &declared)?;
                    }
                    declared.insert(name);
                }
                Stmt::Element { name, expr, .. } => {
                    loose(expr, &declared)?;
                    declared.insert(name);
                }
                Stmt::Task(t) => self.validate_task(t, &declared)?,
            }
        }
        Ok(())
    }

    fn validate_task(&self, t: &TaskStmt, declared: &HashSet<&str>) -> FResult<()> {
        let sp = t.span;
        let args = task_args(t)?;
        let need = |name: &str, map_has: bool| -> FResult<()> {
            if map_has && declared.contains(name) {
                Ok(())
            } else {
                let span = t.args.iter().find_map(|a| match a {
                    Arg::Expr(Expr::Ident(s, s2)) if s == name => Some(*s2),
                    _ => None,
                });
                Err(FrontendError::Undeclared {
                    span: span.unwrap_or(sp),
                    name: name.into(),
                })
            }
        };
        need(args.algebra, self.algebras.contains_key(args.algebra))?;
        let alpha = self.alphabet_of(args.algebra, sp)?;
        if let Some(g) = args.group {
            need(g, self.groups.contains_key(g))?;
            let ms = self.matrices(self.groups[g], sp)?;
            if ms[0].len() != alpha.len() {
                return invalid(sp, format!(
                    "group {g} acts on {} generators but {} has {}",
                    ms[0].len(),
                    args.algebra,
                    alpha.len()
                ));
            }
        }
        if let Some(p) = args.pair {
            need(p, self.pairs.contains_key(p))?;
            self.pair_polys(p, &alpha, sp)?;
        }
        if let Some(xs) = args.list {
            for e in xs {
                self.eval(e, Some(&alpha), sp)?;
            }
        }
        let allowed = allowed_options(t.kind, args.group.is_some());
        let mut seen = HashSet::new();
        for (k, v) in &t.options {
            if !allowed.contains(&k.as_str()) {
                return invalid(sp, format!("task {} has no option '{k}' (allowed: {})", t.kind.name(), allowed.join(", ")));
            }
            if !seen.insert(k) {
                return invalid(sp, format!("option '{k}' given twice"));
            }
            let int_in = |lo: i64, hi: i64| -> FResult<()> {
                match v {
                    OptValue::Int(n) if (lo..=hi).contains(n) => Ok(()),
                    _ => invalid(sp, format!("option {k} expects an integer in {lo}..={hi}")),
                }
            };
            match k.as_str() {
                "maxdeg" => int_in(0, 64)?,
                "max_order" => int_in(1, 100_000)?,
                "max_tuples" | "window" | "s_max" | "n_cap" => int_in(1, 1_000_000)?,
                "samples" => int_in(0, 1_000_000)?,
                "source" => match v {
                    OptValue::Ident(s) if s == "oracle" || s == "constructive" => {}
                    _ => return invalid(sp, "option source expects oracle or constructive"),
                },
                "strategies" => match v {
                    OptValue::List(xs) => {
                        for x in xs {
                            if Strategy::parse(x).is_none() {
                                return invalid(sp, format!("unknown strategy '{x}'"));
                            }
                        }
                    }
                    _ => return invalid(sp, "option strategies expects a list"),
                },
                "pairs" => match v {
                    OptValue::List(xs) => {
                        for x in xs {
                            need(x, self.pairs.contains_key(x.as_str()))?;
                            self.pair_polys(x, &alpha, sp)?;
                        }
                    }
                    _ => return invalid(sp, "option pairs expects a list"),
                },
                _ => unreachable!(),
            }
        }
        Ok(())
    }

    fn pair_polys(&self, name: &str, alpha: &Alphabet, sp: Span) -> FResult<(Vec<FreePoly>, Vec<FreePoly>)> {
        let (l, r) = self.pairs[name];
        let l = l.iter().map(|e| self.eval(e, Some(alpha), sp)).collect::<FResult<_>>()?;
        let r = r.iter().map(|e| self.eval(e, Some(alpha), sp)).collect::<FResult<_>>()?;
        Ok((l, r))
    }

    /// Build (or fetch) an algebra truncated at `d`.
    pub fn algebra(&mut self, name: &str, d: u32) -> Result<Arc<GradedAlgebra>, Error> {
        if let Some(a) = self.alg_cache.get(&(name.to_string(), d)) {
            return Ok(a.clone());
        }
        let bad = |e: FrontendError| Error::BadInput(e.to_string());
        let sp = Span::default();
        let alg = match self.algebras[name] {
            AlgebraDef::Commutative(n) => make_commutative(*n as usize, d)?,
            AlgebraDef::QuantumAffine(q) => {
                let q: Vec<Vec<Scalar>> = q
                    .iter()
                    .map(|row| row.iter().map(|e| self.scalar(e, sp)).collect::<FResult<_>>())
                    .collect::<FResult<_>>()
                    .map_err(bad)?;
                make_quantum_affine(&q, d)?
            }
            AlgebraDef::Downup(a, b) => {
                let a = self.scalar(a, sp).map_err(bad)?;
                let b = self.scalar(b, sp).map_err(bad)?;
                make_downup(&a, &b, d)?
            }
            AlgebraDef::Presentation { rels, gkdim, .. } => {
                let alpha = self.alphabet_of(name, sp).map_err(bad)?;
                let rels: Vec<FreePoly> = rels
                    .iter()
                    .map(|r| self.eval(r, Some(&alpha), sp))
                    .collect::<FResult<_>>()
                    .map_err(bad)?;
                let a = GradedAlgebra::from_presentation(alpha, rels, d)?;
                match gkdim {
                    Some(k) => a.with_known_gkdim(*k),
                    None => a,
                }
            }
            AlgebraDef::Quotient { base, gens, .. } => {
                let r = self.algebra(base, d)?;
                let gens: Vec<AlgElement> = gens
                    .iter()
                    .map(|g| self.eval(g, Some(r.alphabet()), sp).map_err(bad).and_then(|f| r.element(&f)))
                    .collect::<Result<_, Error>>()?;
                quotient_by_ideal(&r, &gens, d)?
            }
        };
        let alg = Arc::new(alg);
        self.alg_cache.insert((name.to_string(), d), alg.clone());
        Ok(alg)
    }

    /// The group generated by the named matrices, acting on `alg_name` at `d`.
    pub fn group(&mut self, name: &str, alg_name: &str, d: u32, max_order: Option<usize>) -> Result<Arc<FiniteGroup>, Error> {
        let bound = max_order.unwrap_or(DEFAULT_MAX_ORDER);
        let key = (name.to_string(), alg_name.to_string(), d, bound);
        if let Some(g) = self.group_cache.get(&key) {
            return Ok(g.clone());
        }
        let alg = self.algebra(alg_name, d)?;
        let ms = self
            .matrices(self.groups[name], Span::default())
            .map_err(|e| Error::BadInput(e.to_string()))?;
        let gens: Vec<LinearAuto> = ms.into_iter().map(LinearAuto::new).collect::<Result<_, Error>>()?;
        let g = Arc::new(group_generate(&alg, &gens, bound)?);
        self.group_cache.insert(key, g.clone());
        Ok(g)
    }

    /// Normal form of a script expression in `alg`.
    pub fn element(&self, alg: &GradedAlgebra, e: &Expr) -> Result<AlgElement, Error> {
        let f = self
            .eval(e, Some(alg.alphabet()), Span::default())
            .map_err(|e| Error::BadInput(e.to_string()))?;
        alg.element(&f)
    }

    pub fn pair_elements(&self, alg: &GradedAlgebra, name: &str) -> Result<(Vec<AlgElement>, Vec<AlgElement>), Error> {
        let (l, r) = self.pairs[name];
        let l = l.iter().map(|e| self.element(alg, e)).collect::<Result<_, Error>>()?;
        let r = r.iter().map(|e| self.element(alg, e)).collect::<Result<_, Error>>()?;
        Ok((l, r))
    }
}

/// Check a parsed script: declarations before use, arities, option names
/// and values, and every root of unity against the conductor.
pub fn validate(script: &Script) -> FResult<()> {
    Session::new(script)?.validate()
}
