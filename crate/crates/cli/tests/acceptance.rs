//! Acceptance suite: twelve criteria, one pass/fail line each.
//!
//! Expected modules are written down by hand as matrices and compared with
//! the library output up to isomorphism. Criterion 10 cannot hold as
//! stated (see the analysis it prints); the suite reports that and fails.

use std::path::PathBuf;
use std::sync::Arc;

use pwt_cli::{parse_field, RunReport};
use pwt_core::homology::{ext_dim, ext_vanishes_all_positive, projective_dimension, DEFAULT_SYZYGY_CAP as CAP};
use pwt_core::modrep::{
    describe, enumerate_indecomposables, hom_basis, is_isomorphic, sum_of, Bounds, EnumerationStrategy, ModCategory,
    Representation,
};
use pwt_core::opext::{
    bijection_report, enumerate_triple_indecomposables, extend, lift_pwt, verify_lift_mutation, ExtensionContext,
    TripleStrategy,
};
use pwt_core::quivalg::BoundQuiverAlgebra;
use pwt_core::tilting::{
    complement_of, enumerate_pwt, enumerate_pwt_indices, is_pwt, is_self_orthogonal, is_wakamatsu_tilting,
    left_mutation, MutationStatus, PwtMode,
};
use pwt_core::{Field, Matrix};

type Verdict = Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn field_arg(f: Field) -> String {
    match f {
        Field::Prime(p) => p.to_string(),
        Field::Rational => "Q".into(),
    }
}

fn load(name: &str, f: Field) -> BoundQuiverAlgebra {
    let text = std::fs::read_to_string(fixture(name)).unwrap();
    pwt_cli::algfile::parse_alg(&text, f, 0).unwrap().algebra
}

/// Runs the binary's entry point and reads back its JSON report.
fn cli(args: &[&str], f: Field) -> (i32, RunReport) {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("out.json");
    let mut argv: Vec<String> = vec!["pwt".into()];
    argv.push(args[0].into());
    argv.push(fixture(args[1]).display().to_string());
    argv.extend(args[2..].iter().map(|s| s.to_string()));
    argv.extend(["--field".into(), field_arg(f), "--json".into(), json.display().to_string()]);
    let code = pwt_cli::run_to(argv, &mut std::io::sink());
    let report = RunReport::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    (code, report)
}

/// A representation from integer matrices; an empty list is the zero map.
fn rep(cat: &Arc<ModCategory>, dims: &[usize], maps: &[Vec<Vec<i64>>]) -> Representation {
    let f = cat.field();
    let ms = cat
        .links()
        .iter()
        .zip(maps)
        .map(|(l, m)| {
            if m.is_empty() {
                Matrix::zeros(f, dims[l.target], dims[l.source] * l.coeff_dim)
            } else {
                Matrix::from_rows(f, m)
            }
        })
        .collect();
    Representation::new(cat, dims.to_vec(), ms).unwrap()
}

fn e() -> Vec<Vec<i64>> {
    Vec::new()
}

fn one() -> Vec<Vec<i64>> {
    vec![vec![1]]
}

/// Λ₀ modules by hand, vertex order 2, 3, 4 and arrows a: 2→3, b: 3→4.
struct Lambda0 {
    alg: BoundQuiverAlgebra,
    s2: Representation,
    s3: Representation,
    s4: Representation,
    p2: Representation,
    p3: Representation,
}

impl Lambda0 {
    fn new(f: Field) -> Self {
        let alg = load("lambda0.alg", f);
        let c = alg.category().clone();
        Lambda0 {
            s2: rep(&c, &[1, 0, 0], &[e(), e()]),
            s3: rep(&c, &[0, 1, 0], &[e(), e()]),
            s4: rep(&c, &[0, 0, 1], &[e(), e()]),
            p2: rep(&c, &[1, 1, 0], &[one(), e()]),
            p3: rep(&c, &[0, 1, 1], &[e(), one()]),
            alg,
        }
    }

    fn sum(&self, parts: &[&Representation]) -> Representation {
        let v: Vec<Representation> = parts.iter().map(|x| (*x).clone()).collect();
        sum_of(self.alg.category(), &v)
    }

    fn u1(&self) -> Representation {
        self.sum(&[&self.p2, &self.p3, &self.s4])
    }

    fn u2(&self) -> Representation {
        self.sum(&[&self.p2, &self.p3, &self.s3])
    }

    fn u3(&self) -> Representation {
        self.sum(&[&self.p2, &self.p3, &self.s2])
    }

    fn indecs(&self) -> Vec<Representation> {
        enumerate_indecomposables(self.alg.category(), EnumerationStrategy::Auto, Bounds::default()).unwrap()
    }

    fn gamma0(&self) -> ExtensionContext {
        extend(&self.alg, &self.s2, "1").unwrap()
    }
}

/// Γ₀ triples by hand: slots 2, 3, 4, 1 and links a, b, φ: 1→2.
fn triple(ctx: &ExtensionContext, dims: &[usize], maps: &[Vec<Vec<i64>>]) -> Representation {
    rep(ctx.gamma(), dims, maps)
}

fn triple_strategy(f: Field) -> (TripleStrategy, Bounds) {
    match f.order() {
        Some(2 | 3) => (TripleStrategy::Brute, Bounds::with_entry(1)),
        _ => (TripleStrategy::Structural, Bounds::default()),
    }
}

fn gamma_indecs(ctx: &ExtensionContext, lambda_indecs: &[Representation], f: Field) -> Vec<Representation> {
    let (s, b) = triple_strategy(f);
    enumerate_triple_indecomposables(ctx, s, b, lambda_indecs).unwrap()
}

fn iso_match(found: &[Representation], expected: &[Representation]) -> Result<(), String> {
    if found.len() != expected.len() {
        return Err(format!("{} found, {} expected", found.len(), expected.len()));
    }
    for x in expected {
        let hits = found.iter().filter(|y| is_isomorphic(x, y).unwrap()).count();
        if hits != 1 {
            return Err(format!("{} matched {hits} times", describe(x).unwrap()));
        }
    }
    Ok(())
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn c1(f: Field) -> Verdict {
    let l = Lambda0::new(f);
    let (code, r) = cli(&["indecs", "lambda0.alg"], f);
    ensure!(code == 0, "indecs exit {code}");
    let mut dims: Vec<Vec<usize>> = r.results["indecomposables"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| serde_json::from_value(v["dims"].clone()).unwrap())
        .collect();
    dims.sort();
    let expected = vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![1, 0, 0], vec![1, 1, 0]];
    ensure!(dims == expected, "dimension vectors {dims:?}");
    iso_match(&l.indecs(), &[l.s2.clone(), l.s3.clone(), l.s4.clone(), l.p2.clone(), l.p3.clone()])?;
    let (code, r) = cli(&["pwt", "lambda0.alg"], f);
    ensure!(code == 0 && r.results["count"] == 3, "pwt exit {code}, count {}", r.results["count"]);
    let pwts = enumerate_pwt(l.alg.category(), &l.indecs(), CAP).unwrap();
    iso_match(&pwts, &[l.u1(), l.u2(), l.u3()])?;
    Ok("5 indecomposables; PWT = {U1, U2, U3}".into())
}

fn c2(f: Field) -> Verdict {
    let l = Lambda0::new(f);
    let (code, r) = cli(&["extend-bijection", "lambda0.alg", "--at", "2"], f);
    ensure!(code == 0, "extend-bijection exit {code}");
    let count = |k: &str| r.results[k].as_array().map_or(0, Vec::len);
    ensure!(
        (count("pwt_lambda"), count("rpwt"), count("pwt_gamma")) == (3, 1, 4),
        "counts {} {} {}",
        count("pwt_lambda"),
        count("rpwt"),
        count("pwt_gamma")
    );
    let ctx = l.gamma0();
    let pa = triple(&ctx, &[1, 0, 0, 1], &[e(), e(), one()]);
    let sa = triple(&ctx, &[0, 0, 0, 1], &[e(), e(), e()]);
    let lift = |u: &Representation| ctx.e_gamma(u);
    let g = |parts: &[Representation]| sum_of(ctx.gamma(), parts);
    let expected = [
        g(&[lift(&l.u1()), pa.clone()]),
        g(&[lift(&l.u2()), pa.clone()]),
        g(&[lift(&l.u3()), pa.clone()]),
        g(&[lift(&l.p2), lift(&l.p3), pa.clone(), sa.clone()]),
    ];
    let indecs = l.indecs();
    let rep = bijection_report(&ctx, &indecs, &gamma_indecs(&ctx, &indecs, f), CAP).map_err(|e| e.to_string())?;
    iso_match(&rep.lifted_modules, &expected)?;
    iso_match(&rep.pwt_gamma_modules, &expected)?;
    ensure!(pa.layer_descriptor() == "1/2" && sa.layer_descriptor() == "1", "P_a, S_a shapes");
    ensure!(rep.lifted_source == vec![describe(&expected[3]).unwrap()], "Ũ4 = {:?}", rep.lifted_source);
    // the extension written out as a bound quiver gives the same PWT list
    let flat = load("gamma0.alg", f);
    let flat_indecs =
        enumerate_indecomposables(flat.category(), EnumerationStrategy::Auto, Bounds::default()).unwrap();
    let mut a: Vec<String> = enumerate_pwt(flat.category(), &flat_indecs, CAP)
        .unwrap()
        .iter()
        .map(|x| describe(x).unwrap())
        .collect();
    let mut b = rep.pwt_gamma.clone();
    a.sort();
    b.sort();
    ensure!(a == b, "bound quiver Γ₀ gives {a:?}, triples give {b:?}");
    Ok("3 + 1 = 4; lifts are Ũ1..Ũ4 with summands 1/2 and 1".into())
}

fn c3(f: Field) -> Verdict {
    let l = Lambda0::new(f);
    let m = left_mutation(&l.u1(), &l.s4, None, CAP).map_err(|e| e.to_string())?;
    ensure!(m.status == MutationStatus::Ok, "status {:?}", m.status);
    ensure!(is_isomorphic(m.output.as_ref().unwrap(), &l.u2()).unwrap(), "output is not U2");
    ensure!(is_isomorphic(&m.approximation.object, &l.p3).unwrap(), "middle term is not P3");
    ensure!(is_isomorphic(&m.cokernel, &l.s3).unwrap(), "cokernel is not S3");
    let ctx = l.gamma0();
    let report = verify_lift_mutation(&ctx, &l.u1(), &l.u2(), None, CAP).map_err(|e| e.to_string())?;
    let failed: Vec<_> = report.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
    ensure!(failed.is_empty(), "failed sub-checks {failed:?}");
    ensure!(
        report.checks.iter().any(|c| c.name.contains("zero component into P_a")),
        "monomorphism check missing"
    );
    ensure!(report.lifted_approximation.as_deref() == Some("3/4"), "approximation {:?}", report.lifted_approximation);
    Ok(format!("0→S4→P3→S3→0; {} lift sub-checks pass", report.checks.len()))
}

/// Every subset of `indecs` summed; clique, direct and Wakamatsu sets agree.
fn three_way(cat: &Arc<ModCategory>, indecs: &[Representation]) -> Result<usize, String> {
    let mut cliques = enumerate_pwt_indices(cat, indecs, CAP).map_err(|e| e.to_string())?;
    for c in &mut cliques {
        c.sort_unstable();
    }
    cliques.sort();
    let n = indecs.len();
    let mut direct = Vec::new();
    let mut wakamatsu = Vec::new();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let t = sum_of(cat, &idx.iter().map(|&i| indecs[i].clone()).collect::<Vec<_>>());
        if !is_self_orthogonal(&t, CAP).unwrap().vanishes {
            continue;
        }
        if is_pwt(&t, PwtMode::Direct, indecs, CAP).unwrap().positive {
            direct.push(idx.clone());
        }
        if is_wakamatsu_tilting(&t, CAP).unwrap().positive {
            wakamatsu.push(idx);
        }
    }
    if cliques != direct || direct != wakamatsu {
        return Err(format!("{}: cliques {cliques:?}, direct {direct:?}, wakamatsu {wakamatsu:?}", cat.name()));
    }
    Ok(cliques.len())
}

fn a2_context(f: Field) -> (BoundQuiverAlgebra, ExtensionContext) {
    let a2 = load("a2.alg", f);
    let ctx = extend(&a2, &a2.simple(0), "3").unwrap();
    (a2, ctx)
}

fn c4(f: Field) -> Verdict {
    let mut counts = Vec::new();
    for name in ["lambda0.alg", "a2.alg", "c3.alg"] {
        let alg = load(name, f);
        let indecs = enumerate_indecomposables(alg.category(), EnumerationStrategy::Auto, Bounds::default())
            .map_err(|e| e.to_string())?;
        counts.push(three_way(alg.category(), &indecs)?);
    }
    let (a2, ctx) = a2_context(f);
    let li = enumerate_indecomposables(a2.category(), EnumerationStrategy::Auto, Bounds::default()).unwrap();
    counts.push(three_way(ctx.gamma(), &gamma_indecs(&ctx, &li, f))?);
    ensure!(counts == vec![3, 2, 1, 3], "PWT counts {counts:?}");
    Ok(format!("identical sets on Λ₀, A2, C3, A2[S1] (sizes {counts:?})"))
}

fn c5(f: Field) -> Verdict {
    let l = Lambda0::new(f);
    let ctx = l.gamma0();
    let indecs = l.indecs();
    let triples = gamma_indecs(&ctx, &indecs, f);
    let pa = ctx.proj_a();
    let mut n = 0;
    for x in &indecs {
        let ex = ctx.e_gamma(x);
        for i in 0..=8 {
            for y in &indecs {
                let (g, a) = (ext_dim(&ex, &ctx.e_gamma(y), i).unwrap(), ext_dim(x, y, i).unwrap());
                ensure!(g == a, "Ext^{i}(E{0}, E{1}) = {g} but Ext^{i}({0}, {1}) = {a}", describe(x).unwrap(), describe(y).unwrap());
                n += 1;
            }
            let (g, a) = (ext_dim(&ex, &pa, i).unwrap(), ext_dim(x, ctx.m(), i).unwrap());
            ensure!(g == a, "Ext^{i}(E{}, P_a) = {g}, Ext^{i}(-, M) = {a}", describe(x).unwrap());
        }
        for t in &triples {
            let g = hom_basis(&ex, t).unwrap().len();
            let a = hom_basis(x, &ctx.r_gamma(t)).unwrap().len();
            ensure!(g == a, "adjunction fails for {} and {}", describe(x).unwrap(), describe(t).unwrap());
        }
    }
    for t in &triples {
        for i in 1..=8 {
            ensure!(ext_dim(&pa, t, i).unwrap() == 0, "Ext^{i}(P_a, {}) ≠ 0", describe(t).unwrap());
        }
    }
    Ok(format!("{n} Ext comparisons, adjunction on {} triples", triples.len()))
}

fn c6(f: Field) -> Verdict {
    let l = Lambda0::new(f);
    let ctx = l.gamma0();
    let indecs = l.indecs();
    let u1 = l.u1();
    let lifted = lift_pwt(&ctx, &u1, CAP).map_err(|e| e.to_string())?;
    let triples = gamma_indecs(&ctx, &indecs, f);
    for t in &triples {
        let left = ext_vanishes_all_positive(&lifted, t, CAP).unwrap().vanishes;
        let right = ext_vanishes_all_positive(&u1, &ctx.r_gamma(t), CAP).unwrap().vanishes;
        ensure!(left == right, "{}: {left} over Γ, {right} over Λ", describe(t).unwrap());
    }
    Ok(format!("{} triples", triples.len()))
}

fn c7(f: Field) -> Verdict {
    let l = Lambda0::new(f);
    let ctx = l.gamma0();
    let indecs = l.indecs();
    let triples = gamma_indecs(&ctx, &indecs, f);
    let pwts = enumerate_pwt(l.alg.category(), &indecs, CAP).unwrap();
    for u in &pwts {
        let lifted = lift_pwt(&ctx, u, CAP).map_err(|e| e.to_string())?;
        let cert = is_pwt(&lifted, PwtMode::Direct, &triples, CAP).unwrap();
        ensure!(cert.positive, "{}: {:?}", describe(&lifted).unwrap(), cert.failure);
    }
    Ok(format!("{} lifts pass the direct check", pwts.len()))
}

fn c8(f: Field) -> Verdict {
    let (a2, ctx) = a2_context(f);
    let li = enumerate_indecomposables(a2.category(), EnumerationStrategy::Auto, Bounds::default()).unwrap();
    let triples = gamma_indecs(&ctx, &li, f);
    // brute-force oracle over GF(2), entry bound 1
    let (_, ctxb) = a2_context(Field::Prime(2));
    let brute = enumerate_triple_indecomposables(&ctxb, TripleStrategy::Brute, Bounds::with_entry(1), &[])
        .map_err(|e| e.to_string())?;
    ensure!(brute.len() == 5 && triples.len() == 5, "{} brute, {} on this field", brute.len(), triples.len());
    let r = bijection_report(&ctx, &li, &triples, CAP).map_err(|e| e.to_string())?;
    ensure!(
        (r.pwt_lambda.len(), r.rpwt.len(), r.pwt_gamma.len()) == (2, 1, 3),
        "{} + {} vs {}",
        r.pwt_lambda.len(),
        r.rpwt.len(),
        r.pwt_gamma.len()
    );
    let failed: Vec<_> = r.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
    ensure!(failed.is_empty(), "{failed:?}");
    ensure!(r.rpwt == vec!["1/2".to_string()], "RPWT {:?}", r.rpwt);
    Ok("2 + 1 = 3; 5 triple indecomposables by brute force".into())
}

/// Projectives `P` with `Ext¹(T, P) = 0` for every listed `T`.
fn projective_injectives(cat: &Arc<ModCategory>, indecs: &[Representation]) -> Vec<Representation> {
    (0..cat.slot_count())
        .map(|v| Representation::projective(cat, v))
        .filter(|p| indecs.iter().all(|t| ext_dim(t, p, 1).unwrap() == 0))
        .collect()
}

fn c9(f: Field) -> Verdict {
    let l = Lambda0::new(f);
    let mut cases: Vec<(String, Arc<ModCategory>, Vec<Representation>)> = Vec::new();
    for name in ["lambda0.alg", "a2.alg", "c3.alg", "gamma0.alg"] {
        let alg = load(name, f);
        let indecs = enumerate_indecomposables(alg.category(), EnumerationStrategy::Auto, Bounds::default()).unwrap();
        cases.push((name.into(), alg.category().clone(), indecs));
    }
    let ctx = l.gamma0();
    cases.push(("Γ₀ triples".into(), ctx.gamma().clone(), gamma_indecs(&ctx, &l.indecs(), f)));
    let (a2, actx) = a2_context(f);
    let li = enumerate_indecomposables(a2.category(), EnumerationStrategy::Auto, Bounds::default()).unwrap();
    cases.push(("A2[S1] triples".into(), actx.gamma().clone(), gamma_indecs(&actx, &li, f)));
    let mut total = 0;
    for (name, cat, indecs) in &cases {
        let pi = projective_injectives(cat, indecs);
        if name == "lambda0.alg" {
            iso_match(&pi, &[l.p2.clone(), l.p3.clone()])?;
        }
        if name == "Γ₀ triples" {
            ensure!(pi.iter().any(|p| is_isomorphic(p, &ctx.proj_a()).unwrap()), "P_a not projective-injective");
        }
        for u in enumerate_pwt(cat, indecs, CAP).unwrap() {
            for p in &pi {
                ensure!(complement_of(&u, p).is_ok(), "{name}: {} lacks {}", describe(&u).unwrap(), describe(p).unwrap());
            }
            total += 1;
        }
    }
    Ok(format!("{total} PWT modules over {} fixtures", cases.len()))
}

/// Tilting in the sense of finite projective dimension, by an independent
/// route: for algebras of finite global dimension a self-orthogonal module
/// of finite projective dimension with `|Λ|` summands is tilting.
fn oracle_tilting(cat: &Arc<ModCategory>, t: &Representation) -> (bool, Option<usize>) {
    let pd = projective_dimension(t, CAP).unwrap();
    let so = is_self_orthogonal(t, CAP).unwrap().vanishes;
    let count = pwt_core::modrep::decompose(t).unwrap().distinct();
    (pd.is_some() && so && count == cat.slot_count(), pd)
}

fn c10_counts(f: Field) -> Result<(usize, usize, usize, usize, usize), String> {
    let l = Lambda0::new(f);
    let ctx = l.gamma0();
    let indecs = l.indecs();
    let lam = enumerate_pwt(l.alg.category(), &indecs, CAP).unwrap();
    let gam = enumerate_pwt(ctx.gamma(), &gamma_indecs(&ctx, &indecs, f), CAP).unwrap();
    let count = |cat: &Arc<ModCategory>, list: &[Representation], bound: Option<usize>| {
        list.iter()
            .filter(|t| {
                let (ok, pd) = oracle_tilting(cat, t);
                ok && bound.map_or(true, |b| pd.unwrap_or(usize::MAX) <= b)
            })
            .count()
    };
    let lifts: Vec<Representation> = lam.iter().map(|u| lift_pwt(&ctx, u, CAP).unwrap()).collect();
    Ok((
        count(l.alg.category(), &lam, None),
        count(ctx.gamma(), &gam, None),
        count(l.alg.category(), &lam, Some(1)),
        count(ctx.gamma(), &gam, Some(1)),
        count(ctx.gamma(), &lifts, None),
    ))
}

fn c10(f: Field) -> Verdict {
    let (lt, gt, lc, gc, lifted) = c10_counts(f)?;
    let (code, r) = cli(&["tilt-count", "lambda0.alg", "--at", "2"], f);
    ensure!(
        r.results["lambda"]["finite_pd"] == lt && r.results["gamma"]["finite_pd"] == gt,
        "tool and oracle disagree: {}",
        r.results
    );
    ensure!(code == 0, "tilt-count exit {code}");
    ensure!(
        lt == 3 && gt == 3,
        "|tilt Λ₀| = {lt}, |tilt Γ₀| = {gt} (finite pd); {lc} and {gc} with pd ≤ 1; {lifted} among the lifts of PWT(Λ₀)"
    );
    Ok("3 = 3".into())
}

fn criteria_1_to_10(f: Field) -> Vec<(usize, Verdict)> {
    let list: [fn(Field) -> Verdict; 10] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10];
    list.iter().enumerate().map(|(k, c)| (k + 1, c(f))).collect()
}

fn c11(base: &[(usize, Verdict)]) -> Verdict {
    let mut lines = Vec::new();
    let mut all = true;
    let outcome = |v: &[(usize, Verdict)]| v.iter().map(|(_, r)| r.is_ok()).collect::<Vec<_>>();
    let reference = outcome(base);
    let mut identical = true;
    for f in ["2", "3", "Q"] {
        let field = parse_field(f).unwrap();
        let res = criteria_1_to_10(field);
        let failed: Vec<usize> = res.iter().filter(|(_, r)| r.is_err()).map(|(k, _)| *k).collect();
        identical &= outcome(&res) == reference;
        all &= failed.is_empty();
        lines.push(format!("{field}: failed {failed:?}"));
    }
    let base_failed: Vec<usize> = base.iter().filter(|(_, r)| r.is_err()).map(|(k, _)| *k).collect();
    all &= base_failed.is_empty();
    lines.push(format!("GF(101): failed {base_failed:?}"));
    let summary = format!("{}; outcomes identical across backends: {identical}", lines.join("; "));
    if all {
        Ok(summary)
    } else {
        Err(summary)
    }
}

/// `⟨x, y⟩ = Σ x_i y_i − Σ_arrows x_s y_t + Σ_relations x_s y_t`, valid for
/// Λ₀ whose ideal is generated by one path of length two.
fn quiver_euler(alg: &BoundQuiverAlgebra, x: &[usize], y: &[usize]) -> i64 {
    let (x, y): (Vec<i64>, Vec<i64>) =
        (x.iter().map(|&v| v as i64).collect(), y.iter().map(|&v| v as i64).collect());
    let mut s: i64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
    for a in alg.quiver().arrows() {
        s -= x[a.source] * y[a.target];
    }
    for r in alg.relations() {
        s += x[r.source] * y[r.target];
    }
    s
}

fn c12(f: Field) -> Verdict {
    let l = Lambda0::new(f);
    let indecs = l.indecs();
    let mut pairs = 0;
    for x in &indecs {
        let pd = projective_dimension(x, CAP).unwrap().ok_or("infinite projective dimension")?;
        for y in &indecs {
            let h: i64 = (0..=pd)
                .map(|i| ext_dim(x, y, i).unwrap() as i64 * if i % 2 == 0 { 1 } else { -1 })
                .sum();
            let q = quiver_euler(&l.alg, x.dims(), y.dims());
            let c = l.alg.euler_pairing(x.dims(), y.dims());
            ensure!(h == q && c == Some(q), "({}, {}): {h} vs {q} vs {c:?}", describe(x).unwrap(), describe(y).unwrap());
            pairs += 1;
        }
    }
    ensure!(pairs == 25, "{pairs} pairs");
    Ok("25 pairs".into())
}

#[test]
fn acceptance() {
    let f = Field::Prime(101);
    let mut results = criteria_1_to_10(f);
    let c11v = c11(&results);
    results.push((11, c11v));
    results.push((12, c12(f)));
    let mut failed = Vec::new();
    for (k, v) in &results {
        match v {
            Ok(msg) => println!("criterion {k:>2}: PASS  {msg}"),
            Err(msg) => {
                println!("criterion {k:>2}: FAIL  {msg}");
                failed.push(*k);
            }
        }
    }
    if failed.contains(&10) {
        if let Ok((lt, gt, lc, gc, lifted)) = c10_counts(f) {
            println!("analysis of criterion 10:");
            println!("  finite projective dimension: |tilt Λ₀| = {lt}, |tilt Γ₀| = {gt}");
            println!("    Γ₀ has finite global dimension, so ℰ(P2⊕P3) ⊕ P_a ⊕ S_a (pd S_a = 3) is tilting as well");
            println!("  projective dimension at most one: |tilt Λ₀| = {lc}, |tilt Γ₀| = {gc}");
            println!("  lifts ℰU ⊕ P_a of the three PWT Λ₀-modules that are tilting: {lifted}");
            println!("  3 = 3 only if Γ₀ is restricted to those lifts, which leaves out the tilting module Ũ4");
            println!("  so |tilt Γ₀| = |tilt Λ₀| = 3 fails under both definitions; equality of counts holds with pd ≤ 1 (2 = 2)");
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
