//! Task execution.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::action::FiniteGroup;
use crate::algebra::{AlgElement, GradedAlgebra, DEFAULT_MAX_DEGREE};
use crate::dimension::{pertinency, RadicalSource, DEFAULT_WINDOW};
use crate::error::{Error, Result};
use crate::invariant::{cofinality_check, invariants_basis, molien_count, normality_check, CofinalityEntry};
use crate::radical::{
    constructive_values, is_semisimple_upto, radical_constructive, random_pair, verify_pertinent,
    ConstructiveOptions, PertinentPair, Strategy,
};
use crate::scalar::Scalar;
use crate::skew::oracle_radical;
use crate::table::GradedIdealTable;

use super::ast::{Arg, OptValue, TaskKind, TaskStmt};
use super::report::{Report, TaskFailure, TaskReport};
use super::session::{task_args, Session, TaskArgs};
use super::RunOptions;

fn opt<'a>(t: &'a TaskStmt, key: &str) -> Option<&'a OptValue> {
    t.options.iter().find(|(k, _)| k == key).map(|(_, v)| v)
}

fn opt_int(t: &TaskStmt, key: &str) -> Option<i64> {
    match opt(t, key) {
        Some(OptValue::Int(n)) => Some(*n),
        _ => None,
    }
}

fn opt_list<'a>(t: &'a TaskStmt, key: &str) -> Option<&'a [String]> {
    match opt(t, key) {
        Some(OptValue::List(xs)) => Some(xs),
        _ => None,
    }
}

fn opt_json(v: &OptValue) -> Value {
    match v {
        OptValue::Int(n) => json!(n),
        OptValue::Ident(s) => json!(s),
        OptValue::List(xs) => json!(xs),
    }
}

fn echo(t: &TaskStmt, args: &TaskArgs, d: u32) -> Value {
    let mut m = Map::new();
    m.insert("algebra".into(), json!(args.algebra));
    if let Some(g) = args.group {
        m.insert("group".into(), json!(g));
    }
    if let Some(p) = args.pair {
        m.insert("pair".into(), json!(p));
    }
    if let Some(Arg::List(xs)) = t.args.last() {
        let xs: Vec<String> = xs.iter().map(|e| e.to_string()).collect();
        m.insert("elements".into(), json!(xs));
    }
    m.insert("maxdeg".into(), json!(d));
    let opts: Map<String, Value> = t
        .options
        .iter()
        .filter(|(k, _)| k != "maxdeg")
        .map(|(k, v)| (k.clone(), opt_json(v)))
        .collect();
    m.insert("options".into(), Value::Object(opts));
    Value::Object(m)
}

fn polys(alg: &GradedAlgebra, xs: &[AlgElement]) -> Value {
    Value::Array(
        xs.iter()
            .map(|x| json!({"poly": alg.render(x), "degree": x.degree()}))
            .collect(),
    )
}

fn truncation_note(d: u32) -> String {
    format!("subspaces are exact in degrees 0..={d}; nothing is claimed above")
}

/// Every translate of every spanning element stays in the table.
pub(crate) fn g_stable(alg: &GradedAlgebra, group: &FiniteGroup, t: &GradedIdealTable) -> bool {
    (0..=t.max_degree()).all(|d| {
        t.elements(alg, d)
            .iter()
            .all(|a| (1..group.order()).all(|g| t.contains(alg, &group.act(g, a))))
    })
}

type Outcome = Result<(Value, Vec<String>)>;

impl<'s> Session<'s> {
    /// Run every task in order. Failures are recorded per task.
    pub fn run(&mut self, opts: &RunOptions) -> Report {
        let script = self.script();
        let mut tasks = Vec::new();
        for (index, t) in script.tasks().enumerate() {
            let start = Instant::now();
            let args = task_args(t).expect("script was validated");
            let d = opt_int(t, "maxdeg")
                .map(|x| x as u32)
                .or(opts.maxdeg)
                .unwrap_or(DEFAULT_MAX_DEGREE);
            let inputs = echo(t, &args, d);
            let (outcome, caveats) = match self.run_task(t, &args, d, opts) {
                Ok((v, c)) => (Ok(v), c),
                Err(e) => (
                    Err(TaskFailure {
                        kind: e.kind().into(),
                        message: e.to_string(),
                    }),
                    Vec::new(),
                ),
            };
            tasks.push(TaskReport {
                index,
                task: t.kind.name().into(),
                line: t.span.line,
                inputs,
                outcome,
                caveats,
                timing_ms: start.elapsed().as_millis() as u64,
            });
        }
        Report {
            conductor: self.conductor().m(),
            tasks,
        }
    }

    fn user_pairs(&self, alg: &GradedAlgebra, group: &FiniteGroup, t: &TaskStmt) -> Result<Vec<PertinentPair>> {
        opt_list(t, "pairs")
            .unwrap_or(&[])
            .iter()
            .map(|p| {
                let (l, r) = self.pair_elements(alg, p)?;
                verify_pertinent(alg, group, l, r)
            })
            .collect()
    }

    fn constructive_options(&self, alg: &GradedAlgebra, group: &FiniteGroup, t: &TaskStmt) -> Result<ConstructiveOptions> {
        let mut o = ConstructiveOptions {
            conductor: self.conductor(),
            pairs: self.user_pairs(alg, group, t)?,
            ..Default::default()
        };
        if let Some(xs) = opt_list(t, "strategies") {
            o.strategies = xs.iter().filter_map(|x| Strategy::parse(x)).collect();
        }
        if let Some(n) = opt_int(t, "max_tuples") {
            o.max_tuples = n as usize;
        }
        Ok(o)
    }

    fn run_task(&mut self, t: &TaskStmt, args: &TaskArgs, d: u32, opts: &RunOptions) -> Outcome {
        let alg = self.algebra(args.algebra, d)?;
        let alg = alg.as_ref();
        let group = match args.group {
            Some(g) => Some(self.group(g, args.algebra, d, opt_int(t, "max_order").map(|x| x as usize))?),
            None => None,
        };
        let group = group.as_deref();
        let note = truncation_note(d);
        match t.kind {
            TaskKind::Hilbert => Ok((
                json!({"hilbert_R": alg.dims(), "known_gkdim": alg.known_gkdim()}),
                vec![note],
            )),
            TaskKind::Gb => {
                let gb = alg.gb();
                Ok((
                    json!({
                        "relations": gb.dump(),
                        "complete_upto": gb.complete_upto(),
                        "hilbert_R": alg.dims(),
                    }),
                    vec![format!("basis is complete up to degree {}", gb.complete_upto())],
                ))
            }
            TaskKind::Radical => {
                let group = group.unwrap();
                let constructive = matches!(opt(t, "source"), Some(OptValue::Ident(s)) if s == "constructive");
                let table = if constructive {
                    radical_constructive(alg, group, d, &self.constructive_options(alg, group, t)?)?
                } else {
                    oracle_radical(alg, group, d)?
                };
                let mut caveats = vec![note];
                if constructive {
                    caveats.push("constructive table is contained in the radical; equality is not certified".into());
                }
                Ok((
                    json!({
                        "source": if constructive { "constructive" } else { "oracle" },
                        "hilbert_R": alg.dims(),
                        "hilbert_quotient": table.quotient_dims(),
                        "radical_dims": table.dims(),
                        "radical_generators": polys(alg, &table.minimal_generators(alg)),
                        "ideal_closed": table.two_sided_closure(alg).same_subspaces(&table),
                        "g_stable": g_stable(alg, group, &table),
                    }),
                    caveats,
                ))
            }
            TaskKind::Pertinency => {
                let group = group.unwrap();
                let source = match opt(t, "source") {
                    Some(OptValue::Ident(s)) if s == "constructive" => {
                        RadicalSource::Constructive(self.constructive_options(alg, group, t)?)
                    }
                    _ => RadicalSource::Oracle,
                };
                let window = opt_int(t, "window").map_or(DEFAULT_WINDOW, |w| w as usize);
                let p = pertinency(alg, group, d, &source, window)?;
                let mut caveats = vec![note];
                match &p.gk_quotient.window {
                    Some(w) if !p.gk_quotient.exact => caveats.push(format!(
                        "GK dimension of the quotient estimated from degrees {}..={} (difference of order {} vanishes)",
                        w.from_degree, w.to_degree, w.order
                    )),
                    _ => {}
                }
                Ok((
                    json!({
                        "hilbert_R": p.hilbert_r.dims,
                        "hilbert_quotient": p.hilbert_quotient.dims,
                        "known_gkdim": alg.known_gkdim(),
                        "gk_quotient": serde_json::to_value(&p.gk_quotient).unwrap(),
                        "pertinency": {"value": p.value, "kind": serde_json::to_value(p.kind).unwrap()},
                    }),
                    caveats,
                ))
            }
            TaskKind::Invariants => {
                let group = group.unwrap();
                let inv = invariants_basis(alg, group, d);
                let molien = (0..=d).all(|k| molien_count(alg, group, k) == Scalar::from_int(inv.basis.dim(k) as i64));
                Ok((
                    json!({
                        "invariant_dims": inv.basis.dims(),
                        "invariant_generators": polys(alg, &inv.generators),
                        "molien_agrees": molien,
                    }),
                    vec![note, format!("generators are minimal among invariants of degree <= {d}")],
                ))
            }
            TaskKind::Cofinality => {
                let group = group.unwrap();
                let s_max = opt_int(t, "s_max").unwrap_or(3) as u32;
                let n_cap = opt_int(t, "n_cap").unwrap_or(8) as u32;
                let c = cofinality_check(alg, group, d, s_max, n_cap)?;
                let table: Vec<Value> = c
                    .certificate
                    .table
                    .iter()
                    .map(|(s, e)| match e {
                        CofinalityEntry::Found(n) => json!({"s": s, "n": n, "status": "found"}),
                        CofinalityEntry::NotFound => json!({"s": s, "n": null, "status": "not_found"}),
                        CofinalityEntry::Inconclusive => json!({"s": s, "n": null, "status": "inconclusive"}),
                    })
                    .collect();
                Ok((
                    json!({
                        "radical_generators": polys(alg, &c.radical.minimal_generators(alg)),
                        "invariant_generators": polys(alg, &c.invariants.generators),
                        "a_dims": c.a.dims(),
                        "cofinality": {
                            "aR_eq_Ra": c.certificate.a_r_eq_r_a,
                            "table": table,
                            "checked_upto": c.certificate.checked_upto,
                            "n_cap": c.certificate.n_cap,
                        },
                    }),
                    vec![note, "containments r^n in a^s R are checked degree-wise up to the truncation".into()],
                ))
            }
            TaskKind::Verify => {
                let group = group.unwrap();
                let (l, r) = self.pair_elements(alg, args.pair.unwrap())?;
                let p = verify_pertinent(alg, group, l, r)?;
                let v = p.value(alg)?;
                let oracle = oracle_radical(alg, group, d.min(alg.max_degree()))?;
                Ok((
                    json!({
                        "pertinent": true,
                        "length": p.len(),
                        "value": alg.render(&v),
                        "value_degree": v.degree(),
                        "in_radical": oracle.contains(alg, &v),
                    }),
                    vec![note],
                ))
            }
            TaskKind::Semisimple => {
                let r = is_semisimple_upto(alg, group.unwrap(), d)?;
                Ok((
                    json!({
                        "semisimple": r.semisimple,
                        "checked_upto": r.checked_upto,
                        "witness": r.witness.as_ref().map(|w| alg.render(w)),
                    }),
                    vec![note],
                ))
            }
            TaskKind::Normality => {
                let elems: Vec<AlgElement> = args
                    .list
                    .unwrap()
                    .iter()
                    .map(|e| self.element(alg, e))
                    .collect::<Result<_>>()?;
                let v = normality_check(alg, group, &elems, d);
                let rows: Vec<Value> = v
                    .iter()
                    .map(|n| json!({"poly": n.poly, "in_R": n.in_r, "in_A": n.in_a}))
                    .collect();
                Ok((json!({"normality": rows}), vec![note]))
            }
            TaskKind::Soundness => {
                let group = group.unwrap();
                let copts = self.constructive_options(alg, group, t)?;
                let oracle = oracle_radical(alg, group, d)?;
                let values = constructive_values(alg, group, d, &copts)?;
                let mut failures = 0usize;
                let vals: Vec<Value> = values
                    .iter()
                    .map(|v| {
                        let ok = oracle.contains(alg, &v.value);
                        failures += usize::from(!ok);
                        json!({
                            "strategy": v.strategy.map(|s| s.name()),
                            "poly": alg.render(&v.value),
                            "degree": v.value.degree(),
                            "in_radical": ok,
                        })
                    })
                    .collect();
                let table = radical_constructive(alg, group, d, &copts)?;
                let contained = table.is_subset(&oracle);
                failures += usize::from(!contained);
                let samples = opt_int(t, "samples").unwrap_or(0) as usize;
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                let (mut tested, mut skipped, mut random_failures) = (0usize, 0usize, 0usize);
                for _ in 0..samples {
                    let Some((_, p)) = random_pair(alg, group, self.conductor(), &mut rng)? else {
                        skipped += 1;
                        continue;
                    };
                    let rechecked = match verify_pertinent(alg, group, p.left().to_vec(), p.right().to_vec()) {
                        Err(Error::TruncationExceeded { .. }) => {
                            skipped += 1;
                            continue;
                        }
                        r => r,
                    };
                    match p.value(alg) {
                        Ok(v) => {
                            tested += 1;
                            if rechecked.is_err() || !oracle.contains(alg, &v) {
                                random_failures += 1;
                            }
                        }
                        Err(Error::TruncationExceeded { .. }) => skipped += 1,
                        Err(e) => return Err(e),
                    }
                }
                failures += random_failures;
                Ok((
                    json!({
                        "values": vals,
                        "constructive_dims": table.dims(),
                        "oracle_dims": oracle.dims(),
                        "contained": contained,
                        "gap_degrees": table.differing_degrees(&oracle),
                        "random_pairs": {"tested": tested, "skipped": skipped, "failures": random_failures, "seed": opts.seed},
                        "failures": failures,
                    }),
                    vec![note],
                ))
            }
        }
    }
}
