//! Self-orthogonality, perpendicular categories, (projectively) Wakamatsu
//! tilting certification, enumeration of PWT modules and left mutation.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{
    ext_vanishes_all_positive, minimal_left_approximation, minimal_right_approximation, syzygy_orbit,
    ApproximationResult, ExtCertificate, OrbitStatus,
};
use crate::modrep::{
    basic_part, decompose, describe, indecomposables_isomorphic, is_isomorphic, sum_of, ModCategory,
    Representation,
};

/// The regular module of a category: the sum of its indecomposable projectives.
pub fn regular(cat: &Arc<ModCategory>) -> Representation {
    let parts: Vec<Representation> = (0..cat.slot_count())
        .map(|v| Representation::projective(cat, v))
        .collect();
    sum_of(cat, &parts)
}

pub fn is_self_orthogonal(t: &Representation, cap: usize) -> Result<ExtCertificate> {
    ext_vanishes_all_positive(t, t, cap)
}

pub fn perp_category(t: &Representation, indecs: &[Representation], cap: usize) -> Result<Vec<Representation>> {
    let flags: Vec<Result<bool>> = indecs
        .par_iter()
        .map(|x| Ok(ext_vanishes_all_positive(t, x, cap)?.vanishes))
        .collect();
    let mut out = Vec::new();
    for (x, keep) in indecs.iter().zip(flags) {
        if keep? {
            out.push(x.clone());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PwtMode {
    Maximal,
    Direct,
}

/// `0 → K → T_0 → X → 0` for one object `X` of `T^⊥`.
#[derive(Debug, Clone)]
pub struct ProgeneratorWitness {
    pub object: Representation,
    pub approximation: Representation,
    pub kernel: Representation,
    pub surjective: bool,
    pub kernel_in_perp: bool,
}

impl ProgeneratorWitness {
    pub fn holds(&self) -> bool {
        self.surjective && self.kernel_in_perp
    }
}

#[derive(Debug, Clone)]
pub struct PwtCertificate {
    pub module: Representation,
    pub mode: PwtMode,
    pub positive: bool,
    pub basic: bool,
    /// `|T|`, the number of non-isomorphic indecomposable summands.
    pub summand_count: usize,
    /// `|Λ|`, the number of simples.
    pub rank: usize,
    pub self_orthogonality: ExtCertificate,
    pub witnesses: Vec<ProgeneratorWitness>,
    pub failure: Option<String>,
}

/// Direct check of the Ext-progenerator condition on a self-orthogonal `t`.
pub fn is_ext_progenerator(t: &Representation, indecs: &[Representation], cap: usize) -> Result<PwtCertificate> {
    let so = is_self_orthogonal(t, cap)?;
    if !so.vanishes {
        return Err(Error::NotSelfOrthogonal(match so.witness {
            Some((i, d)) => format!("Ext^{i} has dimension {d}"),
            None => "Ext does not vanish".into(),
        }));
    }
    progenerator_certificate(t, indecs, cap, so)
}

fn progenerator_certificate(
    t: &Representation,
    indecs: &[Representation],
    cap: usize,
    so: ExtCertificate,
) -> Result<PwtCertificate> {
    let report = decompose(t)?;
    report.require_split()?;
    let perp = perp_category(t, indecs, cap)?;
    let witnesses: Vec<Result<ProgeneratorWitness>> = perp
        .par_iter()
        .map(|x| {
            let approx = minimal_right_approximation(t, x)?;
            let (k, _) = approx.kernel();
            let kernel_in_perp = approx.is_surjective && ext_vanishes_all_positive(t, &k, cap)?.vanishes;
            Ok(ProgeneratorWitness {
                object: x.clone(),
                approximation: approx.object.clone(),
                kernel: k,
                surjective: approx.is_surjective,
                kernel_in_perp,
            })
        })
        .collect();
    let witnesses: Vec<ProgeneratorWitness> = witnesses.into_iter().collect::<Result<_>>()?;
    let failure = witnesses.iter().find(|w| !w.holds()).map(|w| {
        if w.surjective {
            format!("kernel of the approximation of {} leaves the perpendicular category", describe_or_dims(&w.object))
        } else {
            format!("no surjection from add T onto {}", describe_or_dims(&w.object))
        }
    });
    Ok(PwtCertificate {
        module: t.clone(),
        mode: PwtMode::Direct,
        positive: failure.is_none(),
        basic: report.is_basic(),
        summand_count: report.distinct(),
        rank: t.category().slot_count(),
        self_orthogonality: so,
        witnesses,
        failure,
    })
}

fn describe_or_dims(x: &Representation) -> String {
    describe(x).unwrap_or_else(|_| format!("{:?}", x.dims()))
}

/// PWT test; `indecs` must be the complete indecomposable list in direct mode.
pub fn is_pwt(t: &Representation, mode: PwtMode, indecs: &[Representation], cap: usize) -> Result<PwtCertificate> {
    let so = is_self_orthogonal(t, cap)?;
    let report = decompose(t)?;
    report.require_split()?;
    let rank = t.category().slot_count();
    if !so.vanishes {
        let failure = Some(match so.witness {
            Some((i, d)) => format!("not self-orthogonal: Ext^{i}(T, T) has dimension {d}"),
            None => "not self-orthogonal".into(),
        });
        return Ok(PwtCertificate {
            module: t.clone(),
            mode,
            positive: false,
            basic: report.is_basic(),
            summand_count: report.distinct(),
            rank,
            self_orthogonality: so,
            witnesses: Vec::new(),
            failure,
        });
    }
    match mode {
        PwtMode::Direct => {
            let mut cert = progenerator_certificate(t, indecs, cap, so)?;
            cert.mode = PwtMode::Direct;
            Ok(cert)
        }
        PwtMode::Maximal => {
            let basic = report.is_basic();
            let count = report.distinct();
            let failure = if !basic {
                Some("module is not basic".to_string())
            } else if count != rank {
                Some(format!("|T| = {count} but |Λ| = {rank}"))
            } else {
                None
            };
            Ok(PwtCertificate {
                module: t.clone(),
                mode,
                positive: failure.is_none(),
                basic,
                summand_count: count,
                rank,
                self_orthogonality: so,
                witnesses: Vec::new(),
                failure,
            })
        }
    }
}

/// Pairwise orthogonality data over a list of indecomposables.
pub struct OrthogonalityTable {
    /// `self_orthogonal[i]`: `Ext^{>0}(X_i, X_i) = 0`.
    pub self_orthogonal: Vec<bool>,
    /// `vanishes[i][j]`: `Ext^{>0}(X_i, X_j) = 0`.
    pub vanishes: Vec<Vec<bool>>,
}

pub fn orthogonality_table(indecs: &[Representation], cap: usize) -> Result<OrthogonalityTable> {
    let n = indecs.len();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let values: Vec<Result<bool>> = cells
        .par_iter()
        .map(|&(i, j)| Ok(ext_vanishes_all_positive(&indecs[i], &indecs[j], cap)?.vanishes))
        .collect();
    let mut vanishes = vec![vec![false; n]; n];
    for (&(i, j), v) in cells.iter().zip(values) {
        vanishes[i][j] = v?;
    }
    let self_orthogonal = (0..n).map(|i| vanishes[i][i]).collect();
    Ok(OrthogonalityTable {
        self_orthogonal,
        vanishes,
    })
}

/// Index sets of the basic PWT modules: cliques of size `|Λ|` in the
/// orthogonality graph on self-orthogonal indecomposables.
pub fn enumerate_pwt_indices(cat: &ModCategory, indecs: &[Representation], cap: usize) -> Result<Vec<Vec<usize>>> {
    for x in indecs {
        decompose(x)?.require_split()?;
    }
    let table = orthogonality_table(indecs, cap)?;
    let nodes: Vec<usize> = (0..indecs.len()).filter(|&i| table.self_orthogonal[i]).collect();
    let adjacent = |i: usize, j: usize| table.vanishes[i][j] && table.vanishes[j][i];
    let size = cat.slot_count();
    let mut out = Vec::new();
    let mut current = Vec::new();
    cliques(&nodes, 0, size, &adjacent, &mut current, &mut out);
    Ok(out)
}

fn cliques(
    nodes: &[usize],
    start: usize,
    size: usize,
    adjacent: &dyn Fn(usize, usize) -> bool,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == size {
        out.push(current.clone());
        return;
    }
    for k in start..nodes.len() {
        let v = nodes[k];
        if current.iter().all(|&u| adjacent(u, v)) {
            current.push(v);
            cliques(nodes, k + 1, size, adjacent, current, out);
            current.pop();
        }
    }
}

pub fn enumerate_pwt(cat: &Arc<ModCategory>, indecs: &[Representation], cap: usize) -> Result<Vec<Representation>> {
    Ok(enumerate_pwt_indices(cat, indecs, cap)?
        .into_iter()
        .map(|idx| {
            let parts: Vec<Representation> = idx.iter().map(|&i| indecs[i].clone()).collect();
            sum_of(cat, &parts)
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum CoresolutionStatus {
    /// `0 → Λ → T_0 → … → T_{length-1} → 0`.
    ReachedZero { length: usize },
    /// Cokernel classes repeat, so the sequence continues periodically.
    Cycles { entry: usize, period: usize },
    NotInjective { step: usize },
    ImageNotOrthogonal { step: usize },
    NotSelfOrthogonal,
}

#[derive(Debug, Clone)]
pub struct Coresolution {
    pub terms: Vec<Representation>,
    /// `C_0 = Λ, C_1, …`: the cokernels, which are also the images.
    pub cokernels: Vec<Representation>,
    pub status: CoresolutionStatus,
}

/// Coresolves the regular module by minimal left `add t`-approximations.
pub fn coresolve_regular(t: &Representation, cap: usize) -> Result<Coresolution> {
    let cat = t.category();
    let mut cokernels = vec![regular(cat)];
    let mut basics = vec![basic_part(&cokernels[0])?];
    let mut terms = Vec::new();
    for step in 0..cap.max(1) {
        let c = cokernels[step].clone();
        let approx: ApproximationResult = minimal_left_approximation(&c, t)?;
        terms.push(approx.object.clone());
        if !approx.is_injective {
            return Ok(Coresolution {
                terms,
                cokernels,
                status: CoresolutionStatus::NotInjective { step },
            });
        }
        let (next, _) = approx.cokernel();
        if next.is_zero() {
            return Ok(Coresolution {
                terms,
                cokernels,
                status: CoresolutionStatus::ReachedZero { length: step + 1 },
            });
        }
        if !ext_vanishes_all_positive(&next, t, cap)?.vanishes {
            cokernels.push(next);
            return Ok(Coresolution {
                terms,
                cokernels,
                status: CoresolutionStatus::ImageNotOrthogonal { step: step + 1 },
            });
        }
        let basic = basic_part(&next)?;
        for (j, b) in basics.iter().enumerate() {
            if b.dims() == basic.dims() && is_isomorphic(b, &basic)? {
                cokernels.push(next);
                return Ok(Coresolution {
                    terms,
                    cokernels,
                    status: CoresolutionStatus::Cycles {
                        entry: j,
                        period: step + 1 - j,
                    },
                });
            }
        }
        cokernels.push(next);
        basics.push(basic);
    }
    Err(Error::CertificationFailed(format!(
        "add-T coresolution of the regular module did not settle within {cap} steps"
    )))
}

#[derive(Debug, Clone)]
pub struct WakamatsuCertificate {
    pub positive: bool,
    pub self_orthogonality: ExtCertificate,
    pub coresolution: Option<Coresolution>,
}

pub fn is_wakamatsu_tilting(t: &Representation, cap: usize) -> Result<WakamatsuCertificate> {
    let so = is_self_orthogonal(t, cap)?;
    if !so.vanishes {
        return Ok(WakamatsuCertificate {
            positive: false,
            self_orthogonality: so,
            coresolution: None,
        });
    }
    let co = coresolve_regular(t, cap)?;
    let positive = matches!(
        co.status,
        CoresolutionStatus::ReachedZero { .. } | CoresolutionStatus::Cycles { .. }
    );
    Ok(WakamatsuCertificate {
        positive,
        self_orthogonality: so,
        coresolution: Some(co),
    })
}

#[derive(Debug, Clone)]
pub struct TiltingCertificate {
    pub positive: bool,
    pub projective_dimension: Option<usize>,
    pub self_orthogonal: bool,
    pub coresolution: Option<CoresolutionStatus>,
}

impl TiltingCertificate {
    /// Classical tilting: additionally `pd T ≤ 1`.
    pub fn classical(&self) -> bool {
        self.positive && self.projective_dimension.is_some_and(|d| d <= 1)
    }
}

pub fn is_tilting(t: &Representation, cap: usize) -> Result<TiltingCertificate> {
    let orbit = syzygy_orbit(t, cap)?;
    let pd = match orbit.status {
        OrbitStatus::TerminatesAtZero { pd } => Some(pd),
        OrbitStatus::Cycles { .. } => None,
        OrbitStatus::CapExceeded { cap } => {
            return Err(Error::CertificationFailed(format!(
                "projective dimension not decided within {cap} syzygies"
            )))
        }
    };
    let so = is_self_orthogonal(t, cap)?.vanishes;
    let coresolution = if so {
        Some(coresolve_regular(t, cap)?.status)
    } else {
        None
    };
    let positive = pd.is_some() && so && matches!(coresolution, Some(CoresolutionStatus::ReachedZero { .. }));
    Ok(TiltingCertificate {
        positive,
        projective_dimension: pd,
        self_orthogonal: so,
        coresolution,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MutationStatus {
    Ok,
    UndefinedNotInjective,
    OutputNotPwt,
}

#[derive(Debug, Clone)]
pub struct MutationResult {
    pub status: MutationStatus,
    pub input: Representation,
    pub removed: Representation,
    /// The complement `Ū` of the removed summand.
    pub complement: Vec<Representation>,
    /// `X → E`, the minimal left `add Ū`-approximation.
    pub approximation: ApproximationResult,
    /// `Y = coker(X → E)`.
    pub cokernel: Representation,
    pub output: Option<Representation>,
    pub output_summands: Vec<Representation>,
}

/// Summands of `u` other than (one copy of) `x`; `SummandMissing` if `x`
/// is not a summand.
pub fn complement_of(u: &Representation, x: &Representation) -> Result<Vec<Representation>> {
    let report = decompose(u)?;
    report.require_split()?;
    let mut parts = Vec::new();
    let mut removed = false;
    for s in &report.summands {
        let mut copies = s.multiplicity;
        if !removed && indecomposables_isomorphic(&s.module, x) {
            removed = true;
            copies -= 1;
        }
        for _ in 0..copies {
            parts.push(s.module.clone());
        }
    }
    if removed {
        Ok(parts)
    } else {
        Err(Error::SummandMissing(format!("{} is not a summand", describe_or_dims(x))))
    }
}

/// Left mutation of the basic PWT module `u` at its summand `x`. The output
/// is certified PWT in direct mode when `indecs` is given, otherwise by
/// maximality.
pub fn left_mutation(
    u: &Representation,
    x: &Representation,
    indecs: Option<&[Representation]>,
    cap: usize,
) -> Result<MutationResult> {
    let cat = u.category();
    let complement = complement_of(u, x)?;
    let ubar = sum_of(cat, &complement);
    let approximation = minimal_left_approximation(x, &ubar)?;
    let (y, _) = approximation.cokernel();
    let mut result = MutationResult {
        status: MutationStatus::UndefinedNotInjective,
        input: u.clone(),
        removed: x.clone(),
        complement: complement.clone(),
        approximation,
        cokernel: y.clone(),
        output: None,
        output_summands: Vec::new(),
    };
    if !result.approximation.is_injective {
        return Ok(result);
    }
    let y_parts = if y.is_zero() {
        Vec::new()
    } else {
        decompose(&y)?.indecomposables()
    };
    let mut summands = complement;
    summands.extend(y_parts.iter().cloned());
    let output = sum_of(cat, &summands);
    let differs = !(y_parts.len() == 1 && indecomposables_isomorphic(&y_parts[0], x));
    let pwt = match indecs {
        Some(list) => is_pwt(&output, PwtMode::Direct, list, cap)?.positive,
        None => is_pwt(&output, PwtMode::Maximal, &[], cap)?.positive,
    };
    result.status = if pwt && differs && y_parts.len() == 1 {
        MutationStatus::Ok
    } else {
        MutationStatus::OutputNotPwt
    };
    result.output = Some(output);
    result.output_summands = summands;
    Ok(result)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationEdge {
    pub from: usize,
    pub to: usize,
    /// Descriptor of the summand that was replaced.
    pub at: String,
}

#[derive(Debug, Clone)]
pub struct MutationGraph {
    pub nodes: Vec<Representation>,
    pub labels: Vec<String>,
    pub edges: Vec<MutationEdge>,
}

impl MutationGraph {
    /// Right mutations, read off as reversed left-mutation edges.
    pub fn right_mutation_edges(&self) -> Vec<MutationEdge> {
        self.edges
            .iter()
            .map(|e| MutationEdge {
                from: e.to,
                to: e.from,
                at: e.at.clone(),
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph mutations {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{l}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, e.at);
        }
        s.push_str("}\n");
        s
    }
}

pub fn mutation_graph(
    pwts: &[Representation],
    indecs: Option<&[Representation]>,
    cap: usize,
) -> Result<MutationGraph> {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for u in pwts {
        labels.push(describe(u)?);
    }
    for (i, u) in pwts.iter().enumerate() {
        for x in decompose(u)?.indecomposables() {
            let m = left_mutation(u, &x, indecs, cap)?;
            if m.status != MutationStatus::Ok {
                continue;
            }
            let out = m.output.expect("ok mutation has output");
            let mut target = None;
            for (j, v) in pwts.iter().enumerate() {
                if v.dims() == out.dims() && is_isomorphic(v, &out)? {
                    target = Some(j);
                    break;
                }
            }
            let to = target.ok_or_else(|| {
                Error::CertificationFailed("mutation left the enumerated PWT list".into())
            })?;
            edges.push(MutationEdge {
                from: i,
                to,
                at: describe(&x)?,
            });
        }
    }
    Ok(MutationGraph {
        nodes: pwts.to_vec(),
        labels,
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::DEFAULT_SYZYGY_CAP as CAP;
    use crate::modrep::{enumerate_indecomposables, Bounds, EnumerationStrategy};
    use crate::quivalg::{BoundQuiverAlgebra, Quiver};
    use crate::xfield::Field;

    fn lambda0() -> BoundQuiverAlgebra {
        let q = Quiver::new(&["2", "3", "4"], &[("a", "2", "3"), ("b", "3", "4")]).unwrap();
        BoundQuiverAlgebra::new(q, &[vec!["a", "b"]], Field::Prime(2), 0).unwrap()
    }

    #[test]
    fn lambda0_pwt_and_mutations() {
        let a = lambda0();
        let cat = a.category();
        let indecs = enumerate_indecomposables(cat, EnumerationStrategy::Brute, Bounds::default()).unwrap();
        assert_eq!(indecs.len(), 5);
        let pwt = enumerate_pwt(cat, &indecs, CAP).unwrap();
        assert_eq!(pwt.len(), 3);
        for u in &pwt {
            assert!(is_pwt(u, PwtMode::Direct, &indecs, CAP).unwrap().positive);
            assert!(is_wakamatsu_tilting(u, CAP).unwrap().positive);
        }
        let (p2, p3, p4, s2, s3) = (a.projective(0), a.projective(1), a.projective(2), a.simple(0), a.simple(1));
        let u1 = sum_of(cat, &[p2.clone(), p3.clone(), p4.clone()]);
        let m = left_mutation(&u1, &p4, Some(&indecs), CAP).unwrap();
        assert_eq!(m.status, MutationStatus::Ok);
        assert!(is_isomorphic(&m.cokernel, &s3).unwrap());
        let u3 = sum_of(cat, &[p2.clone(), p3.clone(), s2.clone()]);
        let m = left_mutation(&u3, &s2, Some(&indecs), CAP).unwrap();
        assert_eq!(m.status, MutationStatus::UndefinedNotInjective);
        let so = sum_of(cat, &[s2, s3]);
        assert!(!is_self_orthogonal(&so, CAP).unwrap().vanishes);
        assert!(matches!(is_ext_progenerator(&so, &indecs, CAP), Err(Error::NotSelfOrthogonal(_))));
        let g = mutation_graph(&pwt, Some(&indecs), CAP).unwrap();
        assert_eq!(g.edges.len(), 2);
    }
}
