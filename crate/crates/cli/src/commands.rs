use serde_json::{json, Value};

use pwt_core::homology::{euler_characteristic, ext_dim, ext_vanishes_all_positive, projective_dimension};
use pwt_core::modrep::{
    decompose, describe, enumerate_indecomposables, indecomposables_isomorphic, is_indecomposable, Bounds,
    EnumerationStrategy, Representation,
};
use pwt_core::opext::{
    bijection_report, enumerate_triple_indecomposables, extend_category, lift_pwt, lift_pwt_source,
    verify_lift_mutation, Check, ExtensionContext, TripleStrategy,
};
use pwt_core::tilting::{
    complement_of, enumerate_pwt, is_pwt, is_tilting, left_mutation, mutation_graph, MutationStatus, PwtMode,
};
use pwt_core::{Error, Field, Result};

use crate::algfile::Parsed;
use crate::{Command, Common, StrategyArg};

pub struct Session {
    pub parsed: Parsed,
    pub field: Field,
    pub cap: usize,
    pub bounds: Bounds,
    pub strategy: StrategyArg,
    pub options: Common,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub lines: Vec<String>,
    pub results: Value,
    pub checks: Vec<Check>,
    pub dot: Option<String>,
}

impl Session {
    pub fn new(parsed: Parsed, field: Field, options: &Common) -> Self {
        Session {
            parsed,
            field,
            cap: options.syzygy_cap,
            bounds: Bounds::with_entry(options.dim_bound),
            strategy: options.strategy,
            options: options.clone(),
        }
    }

    fn lambda_indecs(&self) -> Result<Vec<Representation>> {
        let s = match self.strategy {
            StrategyArg::Auto => EnumerationStrategy::Auto,
            StrategyArg::Brute => EnumerationStrategy::Brute,
            StrategyArg::Structural => EnumerationStrategy::Nakayama,
        };
        enumerate_indecomposables(self.parsed.algebra.category(), s, self.bounds)
    }

    fn gamma_indecs(&self, ctx: &ExtensionContext, lambda_indecs: &[Representation]) -> Result<Vec<Representation>> {
        let s = match self.strategy {
            StrategyArg::Auto => TripleStrategy::Auto,
            StrategyArg::Brute => TripleStrategy::Brute,
            StrategyArg::Structural => TripleStrategy::Structural,
        };
        enumerate_triple_indecomposables(ctx, s, self.bounds, lambda_indecs)
    }

    fn named(&self, name: &str) -> Result<&Representation> {
        self.parsed
            .module(name)
            .ok_or_else(|| Error::MalformedId(format!("no module named `{name}` in the file")))
    }

    /// `Λ[M]` from `--at` or `--extend-by`, if either was given.
    fn context(&self) -> Result<Option<ExtensionContext>> {
        let alg = &self.parsed.algebra;
        let m = if let Some(v) = &self.options.at {
            alg.simple_rep(v)?
        } else if let Some(name) = &self.options.extend_by {
            self.named(name)?.clone()
        } else {
            return Ok(None);
        };
        let names = alg.quiver().vertices();
        let label = (1..)
            .map(|k: usize| k.to_string())
            .find(|l| !names.contains(l))
            .expect("some label is free");
        Ok(Some(extend_category(alg.category(), &m, &label)?))
    }

    fn require_context(&self) -> Result<ExtensionContext> {
        self.context()?
            .ok_or_else(|| Error::MalformedId("this command needs --at VERTEX or --extend-by MODULE".into()))
    }
}

fn render(x: &Representation) -> Result<Value> {
    Ok(json!({ "module": describe(x)?, "dims": x.dims() }))
}

fn show(x: &Representation) -> Result<String> {
    Ok(format!("{}  {:?}", describe(x)?, x.dims()))
}

pub fn dispatch(command: &Command, s: &Session) -> Result<Outcome> {
    match command {
        Command::Indecs(_) => indecs(s),
        Command::ExtTable(_) => ext_table(s),
        Command::Pwt(_) => pwt(s),
        Command::Mutate(_) => mutate(s),
        Command::MutationGraph(_) => graph(s),
        Command::ExtendVerifyA(_) => verify_a(s),
        Command::ExtendVerifyB(_) => verify_b(s),
        Command::ExtendBijection(_) => bijection(s),
        Command::TiltCount(_) => tilt_count(s),
    }
}

fn indecs(s: &Session) -> Result<Outcome> {
    let list = s.lambda_indecs()?;
    let mut out = Outcome::default();
    out.lines.push(format!("{} indecomposables", list.len()));
    let mut rendered = Vec::new();
    for (k, x) in list.iter().enumerate() {
        out.lines.push(format!("  X{k}  {}", show(x)?));
        rendered.push(render(x)?);
    }
    let mut bad = Vec::new();
    for x in &list {
        if !is_indecomposable(x)? {
            bad.push(describe(x)?);
        }
    }
    out.checks.push(Check::new(
        "listed modules are indecomposable",
        bad.is_empty(),
        if bad.is_empty() { format!("{} checked", list.len()) } else { bad.join(", ") },
    ));
    let dup = (0..list.len())
        .flat_map(|i| (i + 1..list.len()).map(move |j| (i, j)))
        .find(|&(i, j)| indecomposables_isomorphic(&list[i], &list[j]));
    out.checks.push(Check::new(
        "listed modules are pairwise non-isomorphic",
        dup.is_none(),
        dup.map_or("no repeats".into(), |(i, j)| format!("X{i} ≅ X{j}")),
    ));
    out.results = json!({ "count": list.len(), "indecomposables": rendered });
    Ok(out)
}

fn ext_table(s: &Session) -> Result<Outcome> {
    let list = s.lambda_indecs()?;
    let n = list.len();
    let top = s.options.max_degree.max(1);
    let mut out = Outcome::default();
    let mut pds = Vec::new();
    for x in &list {
        pds.push(projective_dimension(x, s.cap)?);
    }
    let mut table = vec![vec![Vec::new(); n]; n];
    let mut vanish = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            for d in 1..=top {
                table[i][j].push(ext_dim(&list[i], &list[j], d)?);
            }
            vanish[i][j] = ext_vanishes_all_positive(&list[i], &list[j], s.cap)?.vanishes;
        }
    }
    for (k, x) in list.iter().enumerate() {
        let pd = pds[k].map_or("inf".to_string(), |d| d.to_string());
        out.lines.push(format!("X{k}  {}  pd {pd}", show(x)?));
    }
    for d in 1..=top {
        out.lines.push(format!("Ext^{d}(Xi, Xj):"));
        for row in &table {
            let cells: Vec<String> = row.iter().map(|c| c[d - 1].to_string()).collect();
            out.lines.push(format!("  {}", cells.join(" ")));
        }
    }
    let alg = &s.parsed.algebra;
    let mut euler_bad = Vec::new();
    let mut euler_checked = 0;
    for i in 0..n {
        for j in 0..n {
            let (Some(h), Some(c)) = (
                euler_characteristic(&list[i], &list[j], s.cap)?,
                alg.euler_pairing(list[i].dims(), list[j].dims()),
            ) else {
                continue;
            };
            euler_checked += 1;
            if h != c {
                euler_bad.push(format!("(X{i}, X{j}): {h} vs {c}"));
            }
        }
    }
    out.checks.push(Check::new(
        "Euler characteristic matches the Cartan pairing",
        euler_bad.is_empty(),
        if euler_bad.is_empty() {
            format!("{euler_checked} pairs with finite projective dimension")
        } else {
            euler_bad.join("; ")
        },
    ));
    let rendered: Vec<Value> = list.iter().map(render).collect::<Result<_>>()?;
    out.results = json!({
        "indecomposables": rendered,
        "projective_dimension": pds,
        "degrees": (1..=top).collect::<Vec<_>>(),
        "ext": table,
        "ext_positive_vanishes": vanish,
    });
    Ok(out)
}

fn pwt(s: &Session) -> Result<Outcome> {
    let alg = &s.parsed.algebra;
    let indecs = s.lambda_indecs()?;
    let list = enumerate_pwt(alg.category(), &indecs, s.cap)?;
    let proj_inj: Vec<Representation> =
        alg.projective_injective_vertices().into_iter().map(|v| alg.projective(v)).collect();
    let mut out = Outcome::default();
    out.lines.push(format!("{} basic PWT modules", list.len()));
    let mut rendered = Vec::new();
    let mut not_direct = Vec::new();
    let mut missing_pi = Vec::new();
    for (k, u) in list.iter().enumerate() {
        let tilt = is_tilting(u, s.cap)?;
        let pd = projective_dimension(u, s.cap)?;
        out.lines.push(format!(
            "  U{}  {}  pd {}{}",
            k + 1,
            show(u)?,
            pd.map_or("inf".into(), |d| d.to_string()),
            if tilt.positive { "  tilting" } else { "" }
        ));
        let mut v = render(u)?;
        v["projective_dimension"] = json!(pd);
        v["tilting"] = json!(tilt.positive);
        v["tilting_pd_at_most_one"] = json!(tilt.classical());
        rendered.push(v);
        if !is_pwt(u, PwtMode::Direct, &indecs, s.cap)?.positive {
            not_direct.push(describe(u)?);
        }
        for p in &proj_inj {
            if complement_of(u, p).is_err() {
                missing_pi.push(format!("{} lacks {}", describe(u)?, describe(p)?));
            }
        }
    }
    out.checks.push(Check::new(
        "each module passes the direct Ext-progenerator check",
        not_direct.is_empty(),
        if not_direct.is_empty() { format!("{} checked", list.len()) } else { not_direct.join(", ") },
    ));
    out.checks.push(Check::new(
        "each module contains every projective-injective indecomposable",
        missing_pi.is_empty(),
        if missing_pi.is_empty() {
            format!("{} projective-injectives", proj_inj.len())
        } else {
            missing_pi.join("; ")
        },
    ));
    out.results = json!({ "count": list.len(), "modules": rendered });
    Ok(out)
}

fn mutation_entry(u: &Representation, x: &Representation, s: &Session) -> Result<(String, Value)> {
    let m = left_mutation(u, x, None, s.cap)?;
    let status = serde_json::to_value(m.status).expect("status serializes");
    let seq = format!(
        "0 -> {} -> {} -> {} -> 0",
        describe(x)?,
        describe(&m.approximation.object)?,
        describe(&m.cokernel)?
    );
    let output = m.output.as_ref().map(describe).transpose()?;
    let line = match m.status {
        MutationStatus::Ok => format!("  {} at {}: {}  gives {}", describe(u)?, describe(x)?, seq, output.clone().unwrap_or_default()),
        _ => format!("  {} at {}: {:?}", describe(u)?, describe(x)?, m.status),
    };
    Ok((
        line,
        json!({
            "from": describe(u)?,
            "at": describe(x)?,
            "status": status,
            "approximation": describe(&m.approximation.object)?,
            "approximation_injective": m.approximation.is_injective,
            "cokernel": describe(&m.cokernel)?,
            "output": output,
        }),
    ))
}

fn mutate(s: &Session) -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut entries = Vec::new();
    if let (Some(mname), Some(xname)) = (&s.options.module, &s.options.summand) {
        let (line, v) = mutation_entry(s.named(mname)?, s.named(xname)?, s)?;
        out.lines.push(line);
        entries.push(v);
    } else {
        let indecs = s.lambda_indecs()?;
        for u in enumerate_pwt(s.parsed.algebra.category(), &indecs, s.cap)? {
            for x in decompose(&u)?.indecomposables() {
                let (line, v) = mutation_entry(&u, &x, s)?;
                out.lines.push(line);
                entries.push(v);
            }
        }
    }
    out.results = json!({ "mutations": entries });
    Ok(out)
}

fn graph(s: &Session) -> Result<Outcome> {
    let indecs = s.lambda_indecs()?;
    let pwts = enumerate_pwt(s.parsed.algebra.category(), &indecs, s.cap)?;
    let g = mutation_graph(&pwts, None, s.cap)?;
    let mut out = Outcome::default();
    out.lines.push(format!("{} nodes, {} left-mutation edges", g.labels.len(), g.edges.len()));
    for e in &g.edges {
        out.lines.push(format!("  {} -> {}  at {}", g.labels[e.from], g.labels[e.to], e.at));
    }
    out.results = json!({ "nodes": g.labels, "edges": g.edges, "right_edges": g.right_mutation_edges() });
    out.dot = Some(g.to_dot());
    Ok(out)
}

/// Triple indecomposables when they can be listed, otherwise `None`.
fn optional_gamma_indecs(
    s: &Session,
    ctx: &ExtensionContext,
    lambda_indecs: &[Representation],
) -> Result<Option<Vec<Representation>>> {
    match s.gamma_indecs(ctx, lambda_indecs) {
        Ok(v) => Ok(Some(v)),
        Err(Error::NotSourceExtension(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn verify_a(s: &Session) -> Result<Outcome> {
    let ctx = s.require_context()?;
    let indecs = s.lambda_indecs()?;
    let gamma = optional_gamma_indecs(s, &ctx, &indecs)?;
    let (mode, list) = match &gamma {
        Some(g) => (PwtMode::Direct, g.as_slice()),
        None => (PwtMode::Maximal, &[][..]),
    };
    let pwts = enumerate_pwt(ctx.lambda(), &indecs, s.cap)?;
    let mut out = Outcome::default();
    let mut entries = Vec::new();
    for u in &pwts {
        let name = describe(u)?;
        match lift_pwt(&ctx, u, s.cap) {
            Ok(lifted) => {
                let cert = is_pwt(&lifted, mode, list, s.cap)?;
                out.lines.push(format!("  {name}  lifts to {}", describe(&lifted)?));
                out.checks.push(Check::new(
                    format!("lift of {name} is PWT over the extension"),
                    cert.positive,
                    cert.failure.clone().unwrap_or_else(|| format!("{} ({mode:?} mode)", describe(&lifted).unwrap_or_default())),
                ));
                entries.push(json!({ "module": name, "lift": describe(&lifted)?, "pwt": cert.positive }));
            }
            Err(Error::HypothesisViolated(msg)) => {
                out.lines.push(format!("  {name}  HypothesisViolated: {msg}"));
                entries.push(json!({ "module": name, "hypothesis_violated": msg }));
            }
            Err(e) => return Err(e),
        }
        if ctx.source_vertex().is_some() {
            if let Ok(lifted) = lift_pwt_source(&ctx, u) {
                let cert = is_pwt(&lifted, mode, list, s.cap)?;
                out.lines.push(format!("  {name}  source lift {}", describe(&lifted)?));
                out.checks.push(Check::new(
                    format!("source lift of {name} is PWT over the extension"),
                    cert.positive,
                    cert.failure.clone().unwrap_or_else(|| describe(&lifted).unwrap_or_default()),
                ));
                entries.push(json!({ "module": name, "source_lift": describe(&lifted)?, "pwt": cert.positive }));
            }
        }
    }
    out.results = json!({
        "extension_vertex": ctx.label(),
        "m": render(ctx.m())?,
        "mode": format!("{mode:?}").to_lowercase(),
        "lifts": entries,
    });
    Ok(out)
}

fn verify_b(s: &Session) -> Result<Outcome> {
    let ctx = s.require_context()?;
    let indecs = s.lambda_indecs()?;
    let gamma = optional_gamma_indecs(s, &ctx, &indecs)?;
    let pwts = enumerate_pwt(ctx.lambda(), &indecs, s.cap)?;
    let g = mutation_graph(&pwts, None, s.cap)?;
    let mut out = Outcome::default();
    let mut entries = Vec::new();
    for e in &g.edges {
        let (u, v) = (&pwts[e.from], &pwts[e.to]);
        let label = format!("{} -> {}", g.labels[e.from], g.labels[e.to]);
        let report = verify_lift_mutation(&ctx, u, v, gamma.as_deref(), s.cap)?;
        if report.hypothesis_holds {
            out.lines.push(format!("  {label}: hypothesis holds"));
            for c in &report.checks {
                out.checks.push(Check::new(format!("{label}: {}", c.name), c.pass, c.witness.clone()));
            }
        } else {
            out.lines.push(format!("  {label}: HypothesisViolated"));
            for c in report.checks.iter().filter(|c| !c.pass) {
                out.lines.push(format!("    {}: {}", c.name, c.witness));
            }
        }
        entries.push(json!({ "edge": label, "report": report }));
    }
    out.results = json!({ "extension_vertex": ctx.label(), "m": render(ctx.m())?, "edges": entries });
    Ok(out)
}

fn bijection(s: &Session) -> Result<Outcome> {
    let ctx = s.require_context()?;
    let indecs = s.lambda_indecs()?;
    let gamma = s.gamma_indecs(&ctx, &indecs)?;
    let r = bijection_report(&ctx, &indecs, &gamma, s.cap)?;
    let mut out = Outcome::default();
    out.lines.push(format!(
        "|PWT(Γ)| = {} = {} + {} = |PWT(Λ)| + |RPWT(Λ, S_{})|",
        r.pwt_gamma.len(),
        r.pwt_lambda.len(),
        r.rpwt.len(),
        s.options.at.as_deref().unwrap_or("?"),
    ));
    for (k, l) in r.lifted.iter().chain(&r.lifted_source).enumerate() {
        out.lines.push(format!("  lift {}: {l}", k + 1));
    }
    let t = &r.tilting;
    out.lines.push(format!(
        "tilting (finite pd): Λ {} Γ {}; tilting (pd ≤ 1): Λ {} Γ {}",
        t.lambda_finite_pd, t.gamma_finite_pd, t.lambda_pd_at_most_one, t.gamma_pd_at_most_one
    ));
    out.checks = r.checks.clone();
    out.results = serde_json::to_value(&r).expect("report serializes");
    Ok(out)
}

fn tilt_count(s: &Session) -> Result<Outcome> {
    let indecs = s.lambda_indecs()?;
    let alg = &s.parsed.algebra;
    let mut out = Outcome::default();
    let count = |list: &[Representation]| -> Result<(usize, usize, Vec<Value>)> {
        let (mut any, mut classical, mut rows) = (0, 0, Vec::new());
        for u in list {
            let c = is_tilting(u, s.cap)?;
            any += usize::from(c.positive);
            classical += usize::from(c.classical());
            rows.push(json!({
                "module": describe(u)?,
                "projective_dimension": c.projective_dimension,
                "tilting": c.positive,
                "tilting_pd_at_most_one": c.classical(),
            }));
        }
        Ok((any, classical, rows))
    };
    let pwts = enumerate_pwt(alg.category(), &indecs, s.cap)?;
    let (la, lc, lrows) = count(&pwts)?;
    out.lines.push(format!("Λ: {la} tilting (finite pd), {lc} with pd ≤ 1"));
    let mut results = json!({ "lambda": { "finite_pd": la, "pd_at_most_one": lc, "modules": lrows } });
    if let Some(ctx) = s.context()? {
        let gamma = s.gamma_indecs(&ctx, &indecs)?;
        let gpwts = enumerate_pwt(ctx.gamma(), &gamma, s.cap)?;
        let (ga, gc, grows) = count(&gpwts)?;
        out.lines.push(format!("Γ: {ga} tilting (finite pd), {gc} with pd ≤ 1"));
        if la != ga {
            out.lines.push(format!("note: counts differ without the bound pd ≤ 1 ({la} vs {ga})"));
        }
        results["gamma"] = json!({ "finite_pd": ga, "pd_at_most_one": gc, "modules": grows });
        results["discrepancy_finite_pd"] = json!(la != ga);
        out.checks.push(Check::new(
            "tilting counts with pd ≤ 1 agree on Λ and Γ",
            lc == gc,
            format!("{lc} vs {gc}"),
        ));
    }
    out.results = results;
    Ok(out)
}
