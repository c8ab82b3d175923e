//! Acceptance criteria 1-10, one PASS/FAIL line each.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use pertinax::action::{group_generate, FiniteGroup};
use pertinax::algebra::{make_commutative, make_quantum_affine, quotient_by_ideal, AlgElement, GradedAlgebra};
use pertinax::dimension::{pertinency, PertinencyKind, RadicalSource};
use pertinax::free::FreePoly;
use pertinax::frontend::{run_source, RunOptions};
use pertinax::invariant::{cofinality_check, fixed_space, invariants_basis, molien_count, CofinalityEntry};
use pertinax::radical::{
    constructive_values, is_semisimple_upto, radical_constructive, random_pair, verify_pertinent,
    ConstructiveOptions,
};
use pertinax::scalar::Scalar;
use pertinax::skew::oracle_radical;
use pertinax::table::{GradedIdealTable, Provenance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn elem(alg: &GradedAlgebra, src: &str) -> AlgElement {
    let e = pertinax::frontend::parse_expr(src).unwrap();
    // tiny evaluator: sums of products of generators with integer coefficients
    fn go(alg: &GradedAlgebra, e: &pertinax::frontend::ast::Expr) -> FreePoly {
        use pertinax::frontend::ast::Expr::*;
        match e {
            Int(n) => FreePoly::constant(Scalar::from_bigint(n.clone())),
            Ident(s, _) => alg.alphabet().gen(alg.alphabet().index_of(s).unwrap()),
            Neg(a) => go(alg, a).neg(),
            Add(a, b) => go(alg, a).add(&go(alg, b)),
            Sub(a, b) => go(alg, a).sub(&go(alg, b)),
            Mul(a, b) => go(alg, a).mul(&go(alg, b)),
            Pow(a, k) => (0..*k).fold(FreePoly::one(), |acc, _| acc.mul(&go(alg, a))),
            Div(..) => unreachable!(),
        }
    }
    alg.element(&go(alg, &e)).unwrap()
}

fn elems(alg: &GradedAlgebra, xs: &[&str]) -> Vec<AlgElement> {
    xs.iter().map(|s| elem(alg, s)).collect()
}

/// Span of all products of `gens`, degree by degree.
fn subalgebra(alg: &GradedAlgebra, gens: &[AlgElement], d: u32) -> GradedIdealTable {
    let mut spans: Vec<Vec<AlgElement>> = vec![vec![alg.one()]];
    for k in 1..=d {
        let mut out = Vec::new();
        for g in gens {
            let gd = g.degree();
            if gd <= k {
                for s in &spans[(k - gd) as usize] {
                    out.push(alg.mul(s, g).unwrap());
                }
            }
        }
        let t = GradedIdealTable::span_of(alg, &out, d, Provenance::Derived);
        spans.push(t.elements(alg, k));
    }
    let all: Vec<AlgElement> = spans.into_iter().flatten().collect();
    GradedIdealTable::span_of(alg, &all, d, Provenance::Derived)
}

fn g_stable(alg: &GradedAlgebra, g: &FiniteGroup, t: &GradedIdealTable) -> bool {
    (0..=t.max_degree()).all(|d| {
        t.elements(alg, d)
            .iter()
            .all(|a| (1..g.order()).all(|h| t.contains(alg, &g.act(h, a))))
    })
}

fn c1() -> Check {
    let f = &fixtures(10)[0];
    let t = oracle_radical(&f.alg, &f.group, 10).map_err(|e| e.to_string())?;
    ensure!(t.quotient_dims() == vec![1; 11], "Hilbert(R/r) = {:?}", t.quotient_dims());
    let p = pertinency(&f.alg, &f.group, 10, &RadicalSource::Oracle, 4).unwrap();
    ensure!(p.value == 1, "pertinency {}", p.value);
    Ok(format!("Hilbert(R/r) = 1 x 11, p = {} ({:?})", p.value, p.kind))
}

fn c2() -> Check {
    let f = &fixtures(10)[1];
    let t = oracle_radical(&f.alg, &f.group, 10).unwrap();
    let mut want = vec![0; 11];
    want[0] = 1;
    want[1] = 1;
    ensure!(t.quotient_dims() == want, "Hilbert(R/r) = {:?}", t.quotient_dims());
    let p = pertinency(&f.alg, &f.group, 10, &RadicalSource::Oracle, 4).unwrap();
    ensure!(p.value == 2, "pertinency {}", p.value);
    Ok(format!("dim R/r = 2, p = {} ({:?})", p.value, p.kind))
}

fn c3() -> Check {
    let fx = fixtures(10);
    // (a)
    let a = &fx[2];
    let t = oracle_radical(&a.alg, &a.group, 10).unwrap();
    let gens = elems(&a.alg, &["x", "y"]);
    ensure!(t.same_subspaces(&GradedIdealTable::ideal_closure(&a.alg, &gens, 10, Provenance::User)), "(a) r != (x,y)");
    let inv = invariants_basis(&a.alg, &a.group, 10);
    let aa = t.intersect(&inv.basis);
    let quad = GradedIdealTable::span_of(&a.alg, &elems(&a.alg, &["x^2", "x*y", "y^2"]), 2, Provenance::User);
    ensure!(aa.rows(2) == quad.rows(2), "(a) a_2 differs");
    ensure!(aa.dim(2) == 3 && aa.dim(1) == 0, "(a) a dims {:?}", aa.dims());

    // (b) at D = 8
    let fx8 = fixtures(8);
    let b = &fx8[3];
    let t = oracle_radical(&b.alg, &b.group, 8).unwrap();
    let gens = elems(&b.alg, &["y", "z"]);
    ensure!(t.same_subspaces(&GradedIdealTable::ideal_closure(&b.alg, &gens, 8, Provenance::User)), "(b) r != (y,z)");
    let inv = invariants_basis(&b.alg, &b.group, 8);
    let want = elems(&b.alg, &["x", "y^2", "z^2", "y*z"]);
    ensure!(subalgebra(&b.alg, &want, 8).same_subspaces(&inv.basis), "(b) invariants not generated by x, y^2, z^2, yz");
    ensure!(inv.generators.len() == 4, "(b) {} minimal generators", inv.generators.len());

    // (c)
    let c = &fx[4];
    let t = oracle_radical(&c.alg, &c.group, 10).unwrap();
    let gens = elems(&c.alg, &["y^2", "z^2", "y*z"]);
    ensure!(t.same_subspaces(&GradedIdealTable::ideal_closure(&c.alg, &gens, 10, Provenance::User)), "(c) r != (y^2,z^2,yz)");
    let inv = invariants_basis(&c.alg, &c.group, 10);
    let want = elems(&c.alg, &["x", "y^3", "z^3", "y*z"]);
    ensure!(subalgebra(&c.alg, &want, 10).same_subspaces(&inv.basis), "(c) invariants not generated by x, y^3, z^3, yz");
    ensure!(inv.generators.len() == 4, "(c) {} minimal generators", inv.generators.len());
    let q = quotient_by_ideal(&c.alg, &gens, 10).unwrap();
    let gq = group_generate(&q, &c.group.elements()[1..], 64).unwrap();
    let s = is_semisimple_upto(&q, &gq, 10).unwrap();
    ensure!(s.semisimple, "(c) R/r not semisimple");
    Ok("(a) r=(x,y), a_2=<x^2,xy,y^2>; (b) r=(y,z), A=<x,y^2,z^2,yz>; (c) r=(y^2,z^2,yz), A=<x,y^3,z^3,yz>, R/r semisimple to 10".into())
}

fn c4() -> Check {
    let fx = fixtures(10);
    let mut out = Vec::new();
    for f in &fx[2..5] {
        let c = cofinality_check(&f.alg, &f.group, 10, 3, 8).unwrap();
        ensure!(c.certificate.a_r_eq_r_a, "{}: aR != Ra", f.name);
        let ns: Vec<u32> = c
            .certificate
            .table
            .iter()
            .map(|(_, e)| match e {
                CofinalityEntry::Found(n) => Ok(*n),
                other => Err(format!("{}: {other:?}", f.name)),
            })
            .collect::<Result<_, _>>()?;
        ensure!(ns.len() == 3, "{}: table {:?}", f.name, ns);
        out.push(format!("{} n={:?}", f.name, ns));
    }
    Ok(out.join("; "))
}

fn c5() -> Check {
    let f = cyclic3_fixture(8);
    let (alg, g) = (&f.alg, &f.group);
    let t = oracle_radical(alg, g, 8).unwrap();
    let w = omega();
    let w2 = &w * &w;
    let (x, y, z) = (alg.gen(0), alg.gen(1), alg.gen(2));
    // eigenvectors of x -> y -> z -> x for w and w^2
    let y1 = x.add(&y.scale(&w2)).add(&z.scale(&w));
    let y2 = x.add(&y.scale(&w)).add(&z.scale(&w2));
    for (j, v) in [(1, &y1), (2, &y2)] {
        let v2 = alg.mul(v, v).unwrap();
        let v3 = alg.mul(&v2, v).unwrap();
        let p = verify_pertinent(alg, g, vec![alg.one(), v.clone(), v2.clone()], vec![v3.clone(), v2.clone(), v.clone()])
            .map_err(|e| format!("y{j}: {e}"))?;
        ensure!(p.value(alg).unwrap() == v3.scale(&Scalar::from_int(3)), "y{j}: value");
        ensure!(t.contains(alg, &v3), "y{j}^3 not in oracle table");
    }
    let p = pertinency(alg, g, 8, &RadicalSource::Oracle, 4).unwrap();
    ensure!(p.value >= 2, "n=3 estimate {}", p.value);
    let s = &fixtures(10)[1];
    let p2 = pertinency(&s.alg, &s.group, 10, &RadicalSource::Oracle, 4).unwrap();
    ensure!(p2.value >= 1, "n=2 p = {}", p2.value);
    Ok(format!("y1^3, y2^3 in r; n=3 estimate p = {} >= 2 ({:?}); n=2 p = {} >= 1", p.value, p.kind, p2.value))
}

fn c6() -> Check {
    let f = downup_fixture(8);
    ensure!(f.alg.dims() == downup_dims_bruteforce(1, -1, 8), "down-up dims disagree with brute force");
    let p = pertinency(&f.alg, &f.group, 8, &RadicalSource::Oracle, 4).unwrap();
    ensure!(p.gk_quotient.exact && p.gk_quotient.value == 0, "quotient not certified finite: {:?}", p.hilbert_quotient.dims);
    ensure!(p.value == 3 && p.kind == PertinencyKind::Exact, "p = {} {:?}", p.value, p.kind);
    Ok(format!("Hilbert(R/r) = {:?}, p = 3 exact", p.hilbert_quotient.dims))
}

fn c7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut values, mut pairs, mut user_pairs) = (0, 0, 0);
    for i in 0..200 {
        let inst = random_instance(&mut rng);
        let (alg, g, d) = (&inst.alg, &inst.group, inst.max_degree);
        ensure!(g.order() <= 6, "order {}", g.order());
        let oracle = oracle_radical(alg, g, d).unwrap();
        let opts = ConstructiveOptions {
            conductor: inst.conductor,
            max_tuples: 32,
            ..Default::default()
        };
        for v in constructive_values(alg, g, d, &opts).map_err(|e| format!("#{i} {}: {e}", inst.label))? {
            values += 1;
            ensure!(oracle.contains(alg, &v.value), "#{i} {}: {:?} value {} not in oracle", inst.label, v.strategy, alg.render(&v.value));
        }
        let ctab = radical_constructive(alg, g, d, &opts).unwrap();
        ensure!(ctab.is_subset(&oracle), "#{i} {}: constructive table exceeds oracle", inst.label);
        for _ in 0..3 {
            if let Some((s, p)) = random_pair(alg, g, inst.conductor, &mut rng).unwrap() {
                if let Ok(v) = p.value(alg) {
                    pairs += 1;
                    ensure!(verify_pertinent(alg, g, p.left().to_vec(), p.right().to_vec()).is_ok(), "#{i}: moved pair not pertinent");
                    ensure!(oracle.contains(alg, &v), "#{i} {}: {s:?} pair value {} not in oracle", inst.label, alg.render(&v));
                }
            }
        }
        // arbitrary pairs of degree-one elements: members whenever pertinent
        let lin = |rng: &mut ChaCha8Rng| {
            (0..alg.ngens()).fold(AlgElement::zero(), |acc, k| acc.add(&alg.gen(k).scale(&Scalar::from_int(rng.gen_range(-1..=1)))))
        };
        for _ in 0..4 {
            let a: Vec<AlgElement> = (0..2).map(|_| lin(&mut rng)).collect();
            let b: Vec<AlgElement> = (0..2).map(|_| lin(&mut rng)).collect();
            if let Ok(p) = verify_pertinent(alg, g, a, b) {
                user_pairs += 1;
                ensure!(oracle.contains(alg, &p.value(alg).unwrap()), "#{i}: pertinent pair value outside oracle");
            }
        }
    }
    Ok(format!("200 instances, {values} constructive values, {pairs} random pairs, {user_pairs} pertinent linear pairs, 0 failures"))
}

fn c8() -> Check {
    let mut fx = fixtures(10);
    fx.push(downup_fixture(8));
    fx.push(cyclic3_fixture(8));
    for (i, f) in fx.iter().enumerate() {
        let d = f.alg.max_degree();
        let t = oracle_radical(&f.alg, &f.group, d).unwrap();
        ensure!(t.two_sided_closure(&f.alg).same_subspaces(&t), "{}: not an ideal", f.name);
        ensure!(g_stable(&f.alg, &f.group, &t), "{}: not G-stable", f.name);
        if i < 5 {
            let q = quotient_by_ideal(&f.alg, &t.minimal_generators(&f.alg), d).unwrap();
            let gq = group_generate(&q, &f.group.elements()[1..], 64).unwrap();
            let s = is_semisimple_upto(&q, &gq, d).unwrap();
            ensure!(s.semisimple, "{}: pertinency algebra has radical", f.name);
        }
    }
    Ok("closure and G-stability on 7 fixtures; R/r G-semisimple on the 5 finite fixtures".into())
}

fn c9() -> Check {
    for n in 1..=4 {
        let r = make_commutative(n, 10).unwrap();
        for d in 0..=10usize {
            ensure!(r.dim(d as u32) == binom(d + n - 1, n - 1), "k[{n}] degree {d}");
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let vals = [Scalar::from_int(2), Scalar::from_int(-1), Scalar::from_ratio(1, 3), omega()];
    let mut words = 0;
    while words < 500 {
        let n = rng.gen_range(2..=4usize);
        let mut q = vec![vec![Scalar::one(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = vals[rng.gen_range(0..vals.len())].clone();
                q[j][i] = c.inv().unwrap();
                q[i][j] = c;
            }
        }
        let alg = make_quantum_affine(&q, 8).unwrap();
        for _ in 0..25 {
            let len = rng.gen_range(0..=8);
            let w: Vec<u8> = (0..len).map(|_| rng.gen_range(0..n as u8)).collect();
            let (sorted, c) = straighten(&w, &q);
            let a = alg.alphabet();
            let got = alg.element(&FreePoly::monomial(a.word(&w), Scalar::one())).unwrap();
            let want = FreePoly::monomial(a.word(&sorted), c);
            ensure!(*got.poly() == want, "word {:?}: {} vs {}", w, got.poly().render(a), want.render(a));
            words += 1;
        }
    }
    let mut fx = fixtures(10);
    fx.push(downup_fixture(8));
    fx.push(cyclic3_fixture(8));
    for f in &fx {
        for d in 0..=f.alg.max_degree() {
            let m = molien_count(&f.alg, &f.group, d);
            let k = fixed_space(&f.alg, &f.group, d).len();
            ensure!(m == Scalar::from_int(k as i64), "{} degree {d}: Molien {m} vs {k}", f.name);
        }
    }
    Ok(format!("binomial dims n<=4 D=10; {words} words straightened; Molien on {} groups", fx.len()))
}

fn c10() -> Check {
    let names = fixture_names();
    for n in &names {
        let src = fixture(n);
        let a = run_source(&src, &RunOptions::default()).map_err(|e| format!("{n}: {e}"))?;
        let b = run_source(&src, &RunOptions::default()).unwrap();
        ensure!(a.to_json_string(false) == b.to_json_string(false), "{n}: reports differ");
    }
    Ok(format!("{} fixtures byte-identical across runs", names.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("swap on k[x,y]: R/r = k[x], p = 1", c1),
        ("swap on k_-1[x,y]: dim R/r = 2, p = 2", c2),
        ("radical and invariants of the three finite fixtures", c3),
        ("cofinality certificates", c4),
        ("totient bound at n = 3 (and n = 2)", c5),
        ("down-up algebra: p = 3", c6),
        ("constructive soundness on 200 random instances", c7),
        ("oracle self-consistency", c8),
        ("engine suites: binomial dims, q-straightening, Molien", c9),
        ("report determinism", c10),
    ];
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {:>2} PASS  {title}: {msg} [{secs:.1}s]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {title}: {msg} [{secs:.1}s]", i + 1)
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
