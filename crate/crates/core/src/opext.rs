//! One-point extensions `Γ = Λ[M]` as the category of triples `(X, V, φ)`
//! with `φ: V ⊗ M → X` a Λ-map, and the lifting of PWT modules.
//!
//! A triple is stored as a representation of a [`ModCategory`] with one
//! extra slot `a` (holding `V`) and, for every vertex `u` with `M_u ≠ 0`, a
//! link `a → u` of coefficient dimension `dim M_u` (holding `φ_u`).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{ext_dim, ext_vanishes_all_positive, minimal_left_approximation, projective_cover};
use crate::modrep::{
    decompose, describe, direct_sum, enumerate_indecomposables, hom_basis_unchecked, indecomposables_isomorphic,
    is_isomorphic, span_rank_vectors, sum_of, Bounds, Constraint, EnumerationStrategy, Link, ModCategory,
    Morphism, ProjectiveSpec, Representation,
};
use crate::quivalg::BoundQuiverAlgebra;
use crate::tilting::{
    complement_of, enumerate_pwt, is_pwt, is_self_orthogonal, is_tilting, left_mutation, MutationStatus,
    PwtMode,
};
use crate::xfield::Matrix;

/// `(X, V, φ)` with `φ` a Λ-morphism `M^{⊕V} → X`.
#[derive(Debug, Clone, PartialEq)]
pub struct Triple {
    pub x: Representation,
    pub v: usize,
    pub phi: Morphism,
}

/// `(f, g)` with `f ∘ φ = φ' ∘ (g ⊗ M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TripleMorphism {
    pub f: Morphism,
    pub g: Matrix,
}

pub struct ExtensionContext {
    lambda: Arc<ModCategory>,
    m: Representation,
    label: String,
    gamma: Arc<ModCategory>,
    phi_links: Vec<Option<usize>>,
    source_vertex: Option<usize>,
}

impl std::fmt::Debug for ExtensionContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ExtensionContext")
            .field("label", &self.label)
            .field("m", &self.m.dims())
            .finish()
    }
}

/// `Λ[M]` with extension vertex `label`.
pub fn extend(lambda: &BoundQuiverAlgebra, m: &Representation, label: &str) -> Result<ExtensionContext> {
    extend_category(lambda.category(), m, label)
}

pub fn extend_category(lambda: &Arc<ModCategory>, m: &Representation, label: &str) -> Result<ExtensionContext> {
    if m.field() != lambda.field() {
        return Err(crate::xfield::FieldError::FieldMismatch(m.field(), lambda.field()).into());
    }
    m.check_same(&Representation::zero(lambda))?;
    if label.is_empty() || lambda.slot_index(label).is_some() {
        return Err(Error::MalformedId(format!("extension vertex `{label}` clashes with Λ")));
    }
    let n = lambda.slot_count();
    let a = n;
    let f = lambda.field();
    let mut slots = lambda.slots().to_vec();
    slots.push(label.to_string());
    let mut links: Vec<Link> = lambda.links().to_vec();
    let mut phi_links = vec![None; n];
    for u in 0..n {
        if m.dims()[u] > 0 {
            phi_links[u] = Some(links.len());
            links.push(Link {
                name: format!("{label}>{}", lambda.slots()[u]),
                source: a,
                target: u,
                coeff_dim: m.dims()[u],
            });
        }
    }
    let mut constraints: Vec<Constraint> = lambda.constraints().to_vec();
    for (li, l) in lambda.links().iter().enumerate() {
        constraints.push(Constraint::Commutes {
            arrow: li,
            from: phi_links[l.source],
            to: phi_links[l.target],
            ext_slot: a,
            coeff: m.map(li).clone(),
        });
    }
    let mut projectives: Vec<ProjectiveSpec> = (0..n)
        .map(|v| {
            let p = lambda.projective_spec(v);
            let mut dims = p.dims.clone();
            dims.push(0);
            let mut maps = p.maps.clone();
            for u in 0..n {
                if phi_links[u].is_some() {
                    maps.push(Matrix::zeros(f, dims[u], 0));
                }
            }
            ProjectiveSpec {
                dims,
                maps,
                generator: p.generator,
            }
        })
        .collect();
    let mut pa_dims = m.dims().to_vec();
    pa_dims.push(1);
    let mut pa_maps = m.maps().to_vec();
    for u in 0..n {
        if phi_links[u].is_some() {
            pa_maps.push(Matrix::identity(f, m.dims()[u]));
        }
    }
    projectives.push(ProjectiveSpec {
        dims: pa_dims,
        maps: pa_maps,
        generator: 0,
    });
    let gamma = ModCategory::new(
        format!("{}[M]", lambda.name()),
        f,
        lambda.seed(),
        slots,
        links,
        constraints,
        projectives,
    )?;
    let source_vertex = if m.total_dim() == 1 {
        let i = m.dims().iter().position(|&d| d == 1).expect("one-dimensional");
        let is_source = !lambda.links().iter().any(|l| l.target == i);
        is_source.then_some(i)
    } else {
        None
    };
    Ok(ExtensionContext {
        lambda: lambda.clone(),
        m: m.clone(),
        label: label.to_string(),
        gamma,
        phi_links,
        source_vertex,
    })
}

impl ExtensionContext {
    pub fn lambda(&self) -> &Arc<ModCategory> {
        &self.lambda
    }

    pub fn gamma(&self) -> &Arc<ModCategory> {
        &self.gamma
    }

    pub fn m(&self) -> &Representation {
        &self.m
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `|Γ| = |Λ| + 1`.
    pub fn rank(&self) -> usize {
        self.gamma.slot_count()
    }

    pub fn a_slot(&self) -> usize {
        self.lambda.slot_count()
    }

    /// The vertex `i` when `M = S_i` with `i` a source of Λ.
    pub fn source_vertex(&self) -> Option<usize> {
        self.source_vertex
    }

    fn require_source(&self) -> Result<usize> {
        self.source_vertex.ok_or_else(|| {
            Error::NotSourceExtension(format!(
                "M has dimension vector {:?}; a simple module at a source vertex is required",
                self.m.dims()
            ))
        })
    }

    pub fn to_gamma(&self, t: &Triple) -> Result<Representation> {
        t.x.check_same(&self.m)?;
        let mut dims = t.x.dims().to_vec();
        dims.push(t.v);
        let mut maps = t.x.maps().to_vec();
        for (u, l) in self.phi_links.iter().enumerate() {
            if l.is_some() {
                maps.push(t.phi.components[u].clone());
            }
        }
        Representation::new(&self.gamma, dims, maps)
    }

    pub fn from_gamma(&self, y: &Representation) -> Triple {
        let n = self.lambda.slot_count();
        let f = self.lambda.field();
        let x = self.r_gamma(y);
        let v = y.dims()[n];
        let phi = Morphism {
            components: (0..n)
                .map(|u| match self.phi_links[u] {
                    Some(l) => y.map(l).clone(),
                    None => Matrix::zeros(f, y.dims()[u], 0),
                })
                .collect(),
        };
        Triple { x, v, phi }
    }

    /// `ℛ` on Γ-modules: forget `V` and `φ`.
    pub fn r_gamma(&self, y: &Representation) -> Representation {
        let n = self.lambda.slot_count();
        let k = self.lambda.links().len();
        Representation::new(&self.lambda, y.dims()[..n].to_vec(), y.maps()[..k].to_vec())
            .expect("restriction of a triple is a Λ-module")
    }

    /// `ℰ` into Γ-modules: `X ↦ (X, 0, 0)`.
    pub fn e_gamma(&self, x: &Representation) -> Representation {
        let f = self.lambda.field();
        let mut dims = x.dims().to_vec();
        dims.push(0);
        let mut maps = x.maps().to_vec();
        for (u, l) in self.phi_links.iter().enumerate() {
            if l.is_some() {
                maps.push(Matrix::zeros(f, x.dims()[u], 0));
            }
        }
        Representation::new(&self.gamma, dims, maps).expect("extension by zero is a triple")
    }

    pub fn e_functor(&self, x: &Representation) -> Triple {
        self.from_gamma(&self.e_gamma(x))
    }

    pub fn r_functor(&self, t: &Triple) -> Representation {
        t.x.clone()
    }

    /// `P_a = (M, 1, id)`.
    pub fn proj_a(&self) -> Representation {
        Representation::projective(&self.gamma, self.a_slot())
    }

    /// `S_a = (0, 1, 0)`.
    pub fn simple_a(&self) -> Representation {
        Representation::simple(&self.gamma, self.a_slot())
    }

    pub fn triple_hom_basis(&self, s: &Triple, t: &Triple) -> Result<Vec<TripleMorphism>> {
        let (gs, gt) = (self.to_gamma(s)?, self.to_gamma(t)?);
        Ok(hom_basis_unchecked(&gs, &gt)
            .into_iter()
            .map(|h| self.split_morphism(&h))
            .collect())
    }

    fn split_morphism(&self, h: &Morphism) -> TripleMorphism {
        let n = self.a_slot();
        TripleMorphism {
            f: Morphism {
                components: h.components[..n].to_vec(),
            },
            g: h.components[n].clone(),
        }
    }

    pub fn triple_projective_cover(&self, t: &Triple) -> Result<(Triple, TripleMorphism)> {
        let (p, pi) = projective_cover(&self.to_gamma(t)?);
        Ok((self.from_gamma(&p), self.split_morphism(&pi)))
    }

    pub fn triple_ext_dim(&self, s: &Triple, t: &Triple, i: usize) -> Result<usize> {
        ext_dim(&self.to_gamma(s)?, &self.to_gamma(t)?, i)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleStrategy {
    /// `ℰ(ind Λ) ∪ {P_a, S_a}`, valid for source extensions.
    Structural,
    Brute,
    /// Brute force over GF(2) and GF(3), structural otherwise.
    Auto,
}

/// Indecomposable Γ-modules. `lambda_indecs` is used by the structural
/// strategy and must be the complete list for Λ.
pub fn enumerate_triple_indecomposables(
    ctx: &ExtensionContext,
    strategy: TripleStrategy,
    bounds: Bounds,
    lambda_indecs: &[Representation],
) -> Result<Vec<Representation>> {
    let strategy = match strategy {
        TripleStrategy::Auto => match ctx.gamma.field().order() {
            Some(2 | 3) => TripleStrategy::Brute,
            _ => TripleStrategy::Structural,
        },
        s => s,
    };
    match strategy {
        TripleStrategy::Brute => enumerate_indecomposables(&ctx.gamma, EnumerationStrategy::Brute, bounds),
        _ => {
            if !ctx.m.is_zero() {
                ctx.require_source()?;
            }
            let mut out: Vec<Representation> = lambda_indecs.iter().map(|x| ctx.e_gamma(x)).collect();
            for extra in [ctx.proj_a(), ctx.simple_a()] {
                if !out.iter().any(|y| indecomposables_isomorphic(y, &extra)) {
                    out.push(extra);
                }
            }
            Ok(out)
        }
    }
}

/// `ℰU ⊕ P_a`, provided `Ext^{>0}(U, M) = 0`.
pub fn lift_pwt(ctx: &ExtensionContext, u: &Representation, cap: usize) -> Result<Representation> {
    let cert = ext_vanishes_all_positive(u, &ctx.m, cap)?;
    if !cert.vanishes {
        let (i, d) = cert.witness.unwrap_or((0, 0));
        return Err(Error::HypothesisViolated(format!(
            "Ext^{i}(U, M) has dimension {d}, so M is not in the perpendicular category of U"
        )));
    }
    Ok(lift_unchecked(ctx, u))
}

fn lift_unchecked(ctx: &ExtensionContext, u: &Representation) -> Representation {
    let eu = ctx.e_gamma(u);
    let pa = ctx.proj_a();
    direct_sum(&ctx.gamma, &[&eu, &pa]).module
}

/// `ℰU′ ⊕ P_a ⊕ S_a` for `U = U′ ⊕ S_i`.
pub fn lift_pwt_source(ctx: &ExtensionContext, u: &Representation) -> Result<Representation> {
    let i = ctx.require_source()?;
    let si = Representation::simple(&ctx.lambda, i);
    let rest = complement_of(u, &si)?;
    let u_prime = sum_of(&ctx.lambda, &rest);
    let parts = [ctx.e_gamma(&u_prime), ctx.proj_a(), ctx.simple_a()];
    Ok(sum_of(&ctx.gamma, &parts))
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            witness: witness.into(),
        }
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftMutationReport {
    /// Descriptor of the summand `X` replaced by the Λ-mutation.
    pub mutated_at: Option<String>,
    /// Descriptor of the middle term of the Γ-side approximation of `ℰX`.
    pub lifted_approximation: Option<String>,
    pub hypothesis_holds: bool,
    pub checks: Vec<Check>,
}

fn ext_witness(x: &Representation, y: &Representation, cap: usize, what: &str) -> Result<Check> {
    let cert = ext_vanishes_all_positive(x, y, cap)?;
    let witness = match cert.witness {
        Some((i, d)) => format!("HypothesisViolated: Ext^{i}({what}) has dimension {d}"),
        None => format!("Ext^>0({what}) = 0"),
    };
    Ok(Check::new(format!("hypothesis: Ext^>0({what}) = 0"), cert.vanishes, witness))
}

/// Checks that the lift of a Λ-mutation `u → u_prime` is the Γ-mutation of
/// the lifts. `gamma_indecs`, when given, switches PWT checks on the Γ side
/// to direct mode.
pub fn verify_lift_mutation(
    ctx: &ExtensionContext,
    u: &Representation,
    u_prime: &Representation,
    gamma_indecs: Option<&[Representation]>,
    cap: usize,
) -> Result<LiftMutationReport> {
    let mut checks = Vec::new();
    let mut found = None;
    for x in decompose(u)?.indecomposables() {
        let m = left_mutation(u, &x, None, cap)?;
        if m.status == MutationStatus::Ok {
            let out = m.output.clone().expect("ok mutation has output");
            if out.dims() == u_prime.dims() && is_isomorphic(&out, u_prime)? {
                found = Some((x, m));
                break;
            }
        }
    }
    let Some((x, mutation)) = found else {
        checks.push(Check::new(
            "U' is a left mutation of U",
            false,
            format!("no summand of {} mutates to {}", describe(u)?, describe(u_prime)?),
        ));
        return Ok(LiftMutationReport {
            mutated_at: None,
            lifted_approximation: None,
            hypothesis_holds: false,
            checks,
        });
    };
    checks.push(Check::new(
        "U' is a left mutation of U",
        true,
        format!("mutate at {}: 0 -> {} -> {} -> {} -> 0", describe(&x)?, describe(&x)?, describe(&mutation.approximation.object)?, describe(&mutation.cokernel)?),
    ));
    let h1 = ext_witness(u, &ctx.m, cap, "U, M")?;
    let h2 = ext_witness(u_prime, &ctx.m, cap, "U', M")?;
    let hypothesis = h1.pass && h2.pass;
    checks.push(h1);
    checks.push(h2);
    if !hypothesis {
        let lifted = lift_unchecked(ctx, u_prime);
        let so = is_self_orthogonal(&lifted, cap)?;
        let witness = match so.witness {
            Some((i, d)) => format!("Ext^{i}_Γ(EU' + P_a, EU' + P_a) has dimension {d}"),
            None => "self-orthogonal".into(),
        };
        checks.push(Check::new("lifted U' is self-orthogonal", so.vanishes, witness));
        return Ok(LiftMutationReport {
            mutated_at: Some(describe(&x)?),
            lifted_approximation: None,
            hypothesis_holds: false,
            checks,
        });
    }
    // Lemma 3.3: Hom(E, M) → Hom(X, M) is onto
    let f = &mutation.approximation.map;
    let e = &mutation.approximation.object;
    let restricted: Vec<Vec<_>> = hom_basis_unchecked(e, &ctx.m)
        .iter()
        .map(|h| h.after(f).flatten())
        .collect();
    let target = hom_basis_unchecked(&x, &ctx.m).len();
    let rank = span_rank_vectors(&restricted);
    checks.push(Check::new(
        "Hom(E, M) -> Hom(X, M) is surjective",
        rank == target,
        format!("rank {rank} of {target}"),
    ));
    let ex = ctx.e_gamma(&x);
    let ubar = sum_of(&ctx.lambda, &mutation.complement);
    let lifted_ubar = lift_unchecked(ctx, &ubar);
    let approx = minimal_left_approximation(&ex, &lifted_ubar)?;
    let pa = ctx.proj_a();
    let into_pa = decompose(&approx.object)?
        .summands
        .iter()
        .any(|s| indecomposables_isomorphic(&s.module, &pa));
    let same_middle = is_isomorphic(&approx.object, &ctx.e_gamma(e))?;
    let lifted_approximation = describe(&approx.object)?;
    checks.push(Check::new(
        "approximation of EX has zero component into P_a",
        !into_pa,
        format!("EX -> {lifted_approximation}"),
    ));
    checks.push(Check::new(
        "Ef is the minimal left add(EUbar + P_a)-approximation",
        same_middle && approx.is_injective,
        format!("middle term {lifted_approximation}, injective = {}", approx.is_injective),
    ));
    let lifted_u = lift_unchecked(ctx, u);
    let lifted_u_prime = lift_unchecked(ctx, u_prime);
    let gm = left_mutation(&lifted_u, &ex, gamma_indecs, cap)?;
    let matches = gm.status == MutationStatus::Ok
        && gm
            .output
            .as_ref()
            .map(|o| is_isomorphic(o, &lifted_u_prime))
            .transpose()?
            .unwrap_or(false);
    checks.push(Check::new(
        "EU' + P_a is the left mutation of EU + P_a",
        matches,
        format!("{:?}", gm.status),
    ));
    Ok(LiftMutationReport {
        mutated_at: Some(describe(&x)?),
        lifted_approximation: Some(lifted_approximation),
        hypothesis_holds: true,
        checks,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TiltingCounts {
    pub lambda_finite_pd: usize,
    pub gamma_finite_pd: usize,
    pub lambda_pd_at_most_one: usize,
    pub gamma_pd_at_most_one: usize,
    pub discrepancy_finite_pd: bool,
    pub discrepancy_pd_at_most_one: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BijectionReport {
    pub pwt_lambda: Vec<String>,
    pub pwt_lambda_with_si: Vec<String>,
    pub rpwt: Vec<String>,
    pub pwt_gamma: Vec<String>,
    /// `ℰU ⊕ P_a` for `U ∈ PWT(Λ)`.
    pub lifted: Vec<String>,
    /// `ℰU′ ⊕ P_a ⊕ S_a` for `U′ ∈ RPWT(Λ, S_i)`.
    pub lifted_source: Vec<String>,
    pub tilting: TiltingCounts,
    pub checks: Vec<Check>,
    #[serde(skip)]
    pub lifted_modules: Vec<Representation>,
    #[serde(skip)]
    pub pwt_gamma_modules: Vec<Representation>,
}

fn describe_all(list: &[Representation]) -> Result<Vec<String>> {
    list.iter().map(describe).collect()
}

fn count_tilting(list: &[Representation], cap: usize) -> Result<(usize, usize)> {
    let mut any = 0;
    let mut classical = 0;
    for t in list {
        let c = is_tilting(t, cap)?;
        any += usize::from(c.positive);
        classical += usize::from(c.classical());
    }
    Ok((any, classical))
}

/// Compares `PWT(Γ)` with the two lifts of `PWT(Λ)` and `RPWT(Λ, S_i)`.
pub fn bijection_report(
    ctx: &ExtensionContext,
    lambda_indecs: &[Representation],
    gamma_indecs: &[Representation],
    cap: usize,
) -> Result<BijectionReport> {
    let i = ctx.require_source()?;
    let si = Representation::simple(&ctx.lambda, i);
    let pwt_lambda = enumerate_pwt(&ctx.lambda, lambda_indecs, cap)?;
    let mut with_si = Vec::new();
    let mut rpwt = Vec::new();
    for u in &pwt_lambda {
        if let Ok(rest) = complement_of(u, &si) {
            with_si.push(u.clone());
            rpwt.push(sum_of(&ctx.lambda, &rest));
        }
    }
    let lifted: Vec<Representation> = pwt_lambda
        .iter()
        .map(|u| lift_pwt(ctx, u, cap))
        .collect::<Result<_>>()?;
    let lifted_source: Vec<Representation> = with_si
        .iter()
        .map(|u| lift_pwt_source(ctx, u))
        .collect::<Result<_>>()?;
    let pwt_gamma = enumerate_pwt(&ctx.gamma, gamma_indecs, cap)?;

    let mut checks = Vec::new();
    let all_lifts: Vec<Representation> = lifted.iter().chain(&lifted_source).cloned().collect();
    let mut matched = vec![None; all_lifts.len()];
    for (k, l) in all_lifts.iter().enumerate() {
        for (j, g) in pwt_gamma.iter().enumerate() {
            if g.dims() == l.dims() && is_isomorphic(g, l)? {
                matched[k] = Some(j);
                break;
            }
        }
    }
    let unmatched: Vec<String> = all_lifts
        .iter()
        .zip(&matched)
        .filter(|(_, m)| m.is_none())
        .map(|(l, _)| describe(l))
        .collect::<Result<_>>()?;
    checks.push(Check::new(
        "every lift is a PWT Γ-module",
        unmatched.is_empty(),
        if unmatched.is_empty() {
            format!("{} lifts found in PWT(Γ)", all_lifts.len())
        } else {
            format!("not in PWT(Γ): {}", unmatched.join(", "))
        },
    ));
    let mut hit: Vec<usize> = matched.iter().flatten().copied().collect();
    hit.sort_unstable();
    let before = hit.len();
    hit.dedup();
    checks.push(Check::new(
        "lifts are pairwise non-isomorphic",
        hit.len() == before,
        format!("{} distinct of {}", hit.len(), before),
    ));
    let missing: Vec<String> = (0..pwt_gamma.len())
        .filter(|j| !hit.contains(j))
        .map(|j| describe(&pwt_gamma[j]))
        .collect::<Result<_>>()?;
    checks.push(Check::new(
        "lifts exhaust PWT(Γ)",
        missing.is_empty(),
        if missing.is_empty() {
            "every PWT Γ-module is a lift".to_string()
        } else {
            format!("not hit: {}", missing.join(", "))
        },
    ));
    let identity = pwt_gamma.len() == pwt_lambda.len() + rpwt.len();
    checks.push(Check::new(
        "|PWT(Γ)| = |PWT(Λ)| + |RPWT(Λ, S_i)|",
        identity,
        format!("{} = {} + {}", pwt_gamma.len(), pwt_lambda.len(), rpwt.len()),
    ));
    for l in &all_lifts {
        let cert = is_pwt(l, PwtMode::Direct, gamma_indecs, cap)?;
        if !cert.positive {
            checks.push(Check::new(
                "lift passes direct PWT check",
                false,
                format!("{}: {}", describe(l)?, cert.failure.unwrap_or_default()),
            ));
        }
    }

    let (lt, lc) = count_tilting(&pwt_lambda, cap)?;
    let (gt, gc) = count_tilting(&pwt_gamma, cap)?;
    let tilting = TiltingCounts {
        lambda_finite_pd: lt,
        gamma_finite_pd: gt,
        lambda_pd_at_most_one: lc,
        gamma_pd_at_most_one: gc,
        discrepancy_finite_pd: lt != gt,
        discrepancy_pd_at_most_one: lc != gc,
    };
    Ok(BijectionReport {
        pwt_lambda: describe_all(&pwt_lambda)?,
        pwt_lambda_with_si: describe_all(&with_si)?,
        rpwt: describe_all(&rpwt)?,
        pwt_gamma: describe_all(&pwt_gamma)?,
        lifted: describe_all(&lifted)?,
        lifted_source: describe_all(&lifted_source)?,
        tilting,
        checks,
        lifted_modules: all_lifts,
        pwt_gamma_modules: pwt_gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::DEFAULT_SYZYGY_CAP as CAP;
    use crate::quivalg::Quiver;
    use crate::xfield::Field;

    fn lambda0(field: Field) -> BoundQuiverAlgebra {
        let q = Quiver::new(&["2", "3", "4"], &[("a", "2", "3"), ("b", "3", "4")]).unwrap();
        BoundQuiverAlgebra::new(q, &[vec!["a", "b"]], field, 0).unwrap()
    }

    #[test]
    fn gamma0_basics() {
        let a = lambda0(Field::Prime(101));
        let ctx = extend(&a, &a.simple(0), "1").unwrap();
        assert_eq!(ctx.rank(), 4);
        assert_eq!(ctx.source_vertex(), Some(0));
        let pa = ctx.proj_a();
        assert_eq!(pa.dims(), &[1, 0, 0, 1]);
        assert_eq!(pa.layer_descriptor(), "1/2");
        assert!(is_isomorphic(&ctx.r_gamma(&pa), &a.simple(0)).unwrap());
        assert!(ctx.r_gamma(&ctx.simple_a()).is_zero());
        let t = ctx.e_functor(&a.projective(1));
        assert_eq!(ctx.r_functor(&t), a.projective(1));
        // Ext¹_Γ(S_a, ℰS₂) = 1
        assert_eq!(ext_dim(&ctx.simple_a(), &ctx.e_gamma(&a.simple(0)), 1).unwrap(), 1);
    }

    #[test]
    fn extension_by_zero() {
        let a = lambda0(Field::Prime(3));
        let ctx = extend(&a, &Representation::zero(a.category()), "z").unwrap();
        assert!(is_isomorphic(&ctx.proj_a(), &ctx.simple_a()).unwrap());
        assert!(matches!(
            lift_pwt_source(&ctx, &a.regular_module()),
            Err(Error::NotSourceExtension(_))
        ));
    }

    #[test]
    fn lifting_hypothesis() {
        let a = lambda0(Field::Prime(101));
        let cat = a.category();
        let ctx = extend(&a, &a.simple(1), "1").unwrap();
        let u3 = sum_of(cat, &[a.projective(0), a.projective(1), a.simple(0)]);
        assert!(matches!(lift_pwt(&ctx, &u3, CAP), Err(Error::HypothesisViolated(_))));
    }
}
