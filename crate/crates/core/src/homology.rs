//! Projective covers, syzygy orbits, Ext dimensions and add-C approximations.
//!
//! Everything here works over any [`ModCategory`](crate::modrep::ModCategory),
//! so the same code serves a bound quiver algebra and the triple category of
//! a one-point extension.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::modrep::{
    basic_part, cokernel, decompose, direct_sum, hom_basis_unchecked, indecomposables_isomorphic,
    is_isomorphic, kernel, morphism_from_sum, morphism_into_sum, span_rank_vectors, sum_of, yoneda,
    Morphism, Representation,
};
use crate::xfield::{Matrix, Scalar};

pub const DEFAULT_SYZYGY_CAP: usize = 64;

/// Projective cover `P → x` built from Yoneda maps on a basis of the top.
pub fn projective_cover(x: &Representation) -> (Representation, Morphism) {
    let cat = x.category();
    let f = x.field();
    let mut covers = Vec::new();
    let mut maps = Vec::new();
    for (j, rad) in x.radical_bases().iter().enumerate() {
        let complement = if rad.cols() == 0 {
            (0..x.dims()[j]).collect()
        } else {
            rad.complement_indices()
        };
        for c in complement {
            let e = Matrix::from_fn(f, x.dims()[j], 1, |r, _| if r == c { f.one() } else { f.zero() });
            covers.push(Representation::projective(cat, j));
            maps.push(yoneda(x, j, &e));
        }
    }
    let refs: Vec<&Representation> = covers.iter().collect();
    let p = direct_sum(cat, &refs).module;
    let map_refs: Vec<&Morphism> = maps.iter().collect();
    let pi = morphism_from_sum(&map_refs, cat.slot_count(), f, x.dims());
    (p, pi)
}

struct Cover {
    p: Representation,
    kernel: Representation,
    inclusion: Morphism,
}

fn cover_with_kernel(x: &Representation) -> Cover {
    let cat = x.category();
    let key = (x.dims().to_vec(), x.maps().to_vec());
    if let Some((pk, kk, incl)) = cat.caches.syzygy.lock().unwrap().get(&key) {
        return Cover {
            p: Representation::from_key(cat, pk),
            kernel: Representation::from_key(cat, kk),
            inclusion: Morphism {
                components: incl.clone(),
            },
        };
    }
    let (p, pi) = projective_cover(x);
    let (k, inclusion) = kernel(&p, &pi);
    cat.caches.syzygy.lock().unwrap().insert(
        key,
        (
            (p.dims().to_vec(), p.maps().to_vec()),
            (k.dims().to_vec(), k.maps().to_vec()),
            inclusion.components.clone(),
        ),
    );
    Cover {
        p,
        kernel: k,
        inclusion,
    }
}

/// First syzygy `Ω x`, the kernel of the projective cover.
pub fn syzygy(x: &Representation) -> Representation {
    cover_with_kernel(x).kernel
}

pub fn is_projective_indecomposable(x: &Representation) -> bool {
    let cat = x.category();
    (0..cat.slot_count()).any(|v| {
        let p = Representation::projective(cat, v);
        p.dims() == x.dims() && indecomposables_isomorphic(&p, x)
    })
}

/// `x` with all projective summands deleted (multiplicities kept).
pub fn strip_projectives(x: &Representation) -> Result<Representation> {
    if x.is_zero() {
        return Ok(x.clone());
    }
    let report = decompose(x)?;
    let mut parts = Vec::new();
    for s in &report.summands {
        if !is_projective_indecomposable(&s.module) {
            for _ in 0..s.multiplicity {
                parts.push(s.module.clone());
            }
        }
    }
    if parts.len() == report.total_multiplicity() {
        return Ok(x.clone());
    }
    Ok(sum_of(x.category(), &parts))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum OrbitStatus {
    TerminatesAtZero { pd: usize },
    Cycles { entry: usize, period: usize },
    CapExceeded { cap: usize },
}

#[derive(Debug, Clone)]
pub struct SyzygyOrbit {
    /// `Ω^0, Ω^1, …` with projective summands removed.
    pub terms: Vec<Representation>,
    pub status: OrbitStatus,
}

pub fn syzygy_orbit(x: &Representation, cap: usize) -> Result<SyzygyOrbit> {
    let cap = cap.max(1);
    let mut terms = vec![strip_projectives(x)?];
    let mut basics = vec![basic_part(&terms[0])?];
    loop {
        let i = terms.len() - 1;
        if terms[i].is_zero() {
            return Ok(SyzygyOrbit {
                terms,
                status: OrbitStatus::TerminatesAtZero { pd: i },
            });
        }
        if i >= cap {
            return Ok(SyzygyOrbit {
                terms,
                status: OrbitStatus::CapExceeded { cap },
            });
        }
        let next = strip_projectives(&syzygy(&terms[i]))?;
        let basic = basic_part(&next)?;
        if !next.is_zero() {
            for (j, b) in basics.iter().enumerate() {
                if b.dims() == basic.dims() && is_isomorphic(b, &basic)? {
                    terms.push(next);
                    return Ok(SyzygyOrbit {
                        terms,
                        status: OrbitStatus::Cycles {
                            entry: j,
                            period: i + 1 - j,
                        },
                    });
                }
            }
        }
        terms.push(next);
        basics.push(basic);
    }
}

pub fn projective_dimension(x: &Representation, cap: usize) -> Result<Option<usize>> {
    Ok(match syzygy_orbit(x, cap)?.status {
        OrbitStatus::TerminatesAtZero { pd } => Some(pd),
        _ => None,
    })
}

fn flatten_all(ms: &[Morphism]) -> Vec<Vec<Scalar>> {
    ms.iter().map(Morphism::flatten).collect()
}

/// `dim Ext¹(z, y)` from the cover `0 → K → P → z → 0`.
pub fn ext1(z: &Representation, y: &Representation) -> usize {
    if z.is_zero() || y.is_zero() {
        return 0;
    }
    let cover = cover_with_kernel(z);
    if cover.kernel.is_zero() {
        return 0;
    }
    let hom_k = hom_basis_unchecked(&cover.kernel, y).len();
    if hom_k == 0 {
        return 0;
    }
    let restricted: Vec<Morphism> = hom_basis_unchecked(&cover.p, y)
        .iter()
        .map(|h| h.after(&cover.inclusion))
        .collect();
    hom_k - span_rank_vectors(&flatten_all(&restricted))
}

pub fn ext_dim(x: &Representation, y: &Representation, i: usize) -> Result<usize> {
    x.check_same(y)?;
    if i == 0 {
        return Ok(hom_basis_unchecked(x, y).len());
    }
    let mut z = strip_projectives(x)?;
    for _ in 1..i {
        if z.is_zero() {
            return Ok(0);
        }
        z = strip_projectives(&syzygy(&z))?;
    }
    Ok(ext1(&z, y))
}

/// `Σ_i (−1)^i dim Ext^i(x, y)`, or `None` if `pd x` is infinite.
pub fn euler_characteristic(x: &Representation, y: &Representation, cap: usize) -> Result<Option<i64>> {
    let Some(pd) = projective_dimension(x, cap)? else {
        return Ok(None);
    };
    let mut sum = 0i64;
    for i in 0..=pd {
        let d = ext_dim(x, y, i)? as i64;
        sum += if i % 2 == 0 { d } else { -d };
    }
    Ok(Some(sum))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtCertificate {
    pub vanishes: bool,
    pub orbit: OrbitStatus,
    /// Degrees `1..=checked_degrees` were examined.
    pub checked_degrees: usize,
    /// First nonvanishing degree and its dimension.
    pub witness: Option<(usize, usize)>,
}

/// Certified decision of `Ext^{>0}(x, y) = 0` via the syzygy orbit of `x`.
pub fn ext_vanishes_all_positive(x: &Representation, y: &Representation, cap: usize) -> Result<ExtCertificate> {
    x.check_same(y)?;
    let orbit = syzygy_orbit(x, cap)?;
    let degrees = match orbit.status {
        OrbitStatus::TerminatesAtZero { pd } => pd,
        OrbitStatus::Cycles { entry, period } => entry + period,
        OrbitStatus::CapExceeded { cap } => {
            return Err(Error::CertificationFailed(format!(
                "syzygy orbit did not resolve within {cap} steps"
            )))
        }
    };
    for n in 0..degrees {
        let d = ext1(&orbit.terms[n], y);
        if d != 0 {
            return Ok(ExtCertificate {
                vanishes: false,
                orbit: orbit.status,
                checked_degrees: n + 1,
                witness: Some((n + 1, d)),
            });
        }
    }
    Ok(ExtCertificate {
        vanishes: true,
        orbit: orbit.status,
        checked_degrees: degrees,
        witness: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct ApproximationResult {
    pub direction: Direction,
    /// The approximating object in `add C`.
    pub object: Representation,
    /// Its indecomposable summands, in block order.
    pub summands: Vec<Representation>,
    /// `x → object` for left, `object → x` for right approximations.
    pub map: Morphism,
    pub minimal: bool,
    pub is_injective: bool,
    pub is_surjective: bool,
}

impl ApproximationResult {
    fn build(
        direction: Direction,
        x: &Representation,
        summands: Vec<Representation>,
        pieces: Vec<Morphism>,
        minimal: bool,
    ) -> Self {
        let cat = x.category();
        let f = x.field();
        let refs: Vec<&Representation> = summands.iter().collect();
        let object = direct_sum(cat, &refs).module;
        let piece_refs: Vec<&Morphism> = pieces.iter().collect();
        let map = match direction {
            Direction::Left => morphism_into_sum(&piece_refs, cat.slot_count(), f, x.dims()),
            Direction::Right => morphism_from_sum(&piece_refs, cat.slot_count(), f, x.dims()),
        };
        ApproximationResult {
            direction,
            is_injective: map.is_injective(),
            is_surjective: map.is_surjective(),
            object,
            summands,
            map,
            minimal,
        }
    }

    /// Cokernel of a left approximation `x → E`.
    pub fn cokernel(&self) -> (Representation, Morphism) {
        cokernel(&self.object, &self.map)
    }

    /// Kernel of a right approximation `E → x`.
    pub fn kernel(&self) -> (Representation, Morphism) {
        kernel(&self.object, &self.map)
    }
}

struct Copy {
    class: usize,
    map: Morphism,
}

/// Keeps a copy list minimal for the factoring property, which holds when
/// for every class `j` the composites through the kept copies span all of
/// `Hom(x, C_j)` (left) or `Hom(C_j, x)` (right).
fn greedy_minimize(copies: Vec<Copy>, targets: &[usize], composites: &dyn Fn(&Copy, usize) -> Vec<Vec<Scalar>>) -> Vec<Copy> {
    let classes = targets.len();
    let table: Vec<Vec<Vec<Vec<Scalar>>>> = copies
        .iter()
        .map(|c| (0..classes).map(|j| composites(c, j)).collect())
        .collect();
    let holds = |keep: &[bool]| {
        (0..classes).all(|j| {
            let vectors: Vec<Vec<Scalar>> = table
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .flat_map(|(t, _)| t[j].iter().cloned())
                .collect();
            span_rank_vectors(&vectors) == targets[j]
        })
    };
    let mut keep = vec![true; copies.len()];
    for i in 0..copies.len() {
        keep[i] = false;
        if !holds(&keep) {
            keep[i] = true;
        }
    }
    copies
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(c, _)| c)
        .collect()
}

fn basic_summands(c: &Representation) -> Result<Vec<Representation>> {
    Ok(decompose(c)?.indecomposables())
}

/// Minimal left `add c`-approximation of `x`.
pub fn minimal_left_approximation(x: &Representation, c: &Representation) -> Result<ApproximationResult> {
    x.check_same(c)?;
    let classes = basic_summands(c)?;
    let mut copies = Vec::new();
    let mut targets = Vec::new();
    for (j, cj) in classes.iter().enumerate() {
        let basis = hom_basis_unchecked(x, cj);
        targets.push(basis.len());
        copies.extend(basis.into_iter().map(|map| Copy { class: j, map }));
    }
    let homs: Vec<Vec<Vec<Morphism>>> = classes
        .iter()
        .map(|ci| classes.iter().map(|cj| hom_basis_unchecked(ci, cj)).collect())
        .collect();
    let kept = greedy_minimize(copies, &targets, &|copy, j| {
        homs[copy.class][j].iter().map(|g| g.after(&copy.map).flatten()).collect()
    });
    let summands = kept.iter().map(|k| classes[k.class].clone()).collect();
    let pieces = kept.into_iter().map(|k| k.map).collect();
    Ok(ApproximationResult::build(Direction::Left, x, summands, pieces, true))
}

/// Right `add t`-approximation `T_0 → x` by evaluation on a Hom basis.
pub fn right_approximation(t: &Representation, x: &Representation) -> Result<ApproximationResult> {
    x.check_same(t)?;
    let mut summands = Vec::new();
    let mut pieces = Vec::new();
    for tj in basic_summands(t)? {
        for h in hom_basis_unchecked(&tj, x) {
            summands.push(tj.clone());
            pieces.push(h);
        }
    }
    Ok(ApproximationResult::build(Direction::Right, x, summands, pieces, false))
}

/// The right approximation with redundant summands deleted greedily.
pub fn minimal_right_approximation(t: &Representation, x: &Representation) -> Result<ApproximationResult> {
    x.check_same(t)?;
    let classes = basic_summands(t)?;
    let mut copies = Vec::new();
    let mut targets = Vec::new();
    for (j, tj) in classes.iter().enumerate() {
        let basis = hom_basis_unchecked(tj, x);
        targets.push(basis.len());
        copies.extend(basis.into_iter().map(|map| Copy { class: j, map }));
    }
    let homs: Vec<Vec<Vec<Morphism>>> = classes
        .iter()
        .map(|ci| classes.iter().map(|cj| hom_basis_unchecked(cj, ci)).collect())
        .collect();
    let kept = greedy_minimize(copies, &targets, &|copy, j| {
        homs[copy.class][j].iter().map(|g| copy.map.after(g).flatten()).collect()
    });
    let summands = kept.iter().map(|k| classes[k.class].clone()).collect();
    let pieces = kept.into_iter().map(|k| k.map).collect();
    Ok(ApproximationResult::build(Direction::Right, x, summands, pieces, true))
}

/// Whether every map from `x` to a summand of `c` factors through `approx`.
pub fn left_factoring_holds(approx: &ApproximationResult, x: &Representation, c: &Representation) -> Result<bool> {
    for cj in basic_summands(c)? {
        let through: Vec<Vec<Scalar>> = hom_basis_unchecked(&approx.object, &cj)
            .iter()
            .map(|h| h.after(&approx.map).flatten())
            .collect();
        let all = hom_basis_unchecked(x, &cj);
        let mut with = through.clone();
        with.extend(all.iter().map(Morphism::flatten));
        if span_rank_vectors(&through) != span_rank_vectors(&with) || span_rank_vectors(&with) != all.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivalg::{BoundQuiverAlgebra, Quiver};
    use crate::xfield::Field;

    fn lambda0() -> BoundQuiverAlgebra {
        let q = Quiver::new(&["2", "3", "4"], &[("a", "2", "3"), ("b", "3", "4")]).unwrap();
        BoundQuiverAlgebra::new(q, &[vec!["a", "b"]], Field::Prime(101), 0).unwrap()
    }

    fn c3() -> BoundQuiverAlgebra {
        let q = Quiver::new(&["1", "2", "3"], &[("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")]).unwrap();
        BoundQuiverAlgebra::new(q, &[vec!["x", "y"], vec!["y", "z"], vec!["z", "x"]], Field::Prime(3), 0).unwrap()
    }

    #[test]
    fn covers() {
        let a = lambda0();
        let (p, _) = projective_cover(&a.simple(0));
        assert!(is_isomorphic(&p, &a.projective(0)).unwrap());
        assert!(is_isomorphic(&syzygy(&a.simple(0)), &a.simple(1)).unwrap());
        assert!(is_isomorphic(&syzygy(&a.simple(1)), &a.projective(2)).unwrap());
        assert!(syzygy(&a.projective(0)).is_zero());
    }

    #[test]
    fn orbits() {
        let a = lambda0();
        let o = syzygy_orbit(&a.simple(0), 16).unwrap();
        assert_eq!(o.status, OrbitStatus::TerminatesAtZero { pd: 2 });
        let o = syzygy_orbit(&a.projective(1), 16).unwrap();
        assert_eq!(o.status, OrbitStatus::TerminatesAtZero { pd: 0 });
        let c = c3();
        let o = syzygy_orbit(&c.simple(0), 16).unwrap();
        assert_eq!(o.status, OrbitStatus::Cycles { entry: 0, period: 3 });
        let o = syzygy_orbit(&c.simple(0), 2).unwrap();
        assert_eq!(o.status, OrbitStatus::CapExceeded { cap: 2 });
    }

    #[test]
    fn ext_examples() {
        let a = lambda0();
        assert_eq!(ext_dim(&a.simple(0), &a.simple(1), 1).unwrap(), 1);
        assert_eq!(ext_dim(&a.simple(0), &a.simple(2), 2).unwrap(), 1);
        assert_eq!(ext_dim(&a.projective(0), &a.simple(1), 1).unwrap(), 0);
        let c = c3();
        let cert = ext_vanishes_all_positive(&c.simple(0), &c.simple(0), 16).unwrap();
        assert!(!cert.vanishes);
        assert_eq!(cert.witness, Some((3, 1)));
        assert!(matches!(
            ext_vanishes_all_positive(&c.simple(0), &c.simple(0), 1),
            Err(Error::CertificationFailed(_))
        ));
    }

    #[test]
    fn left_approximations() {
        let a = lambda0();
        let cat = a.category();
        let c = sum_of(cat, &[a.projective(0), a.projective(1)]);
        let r = minimal_left_approximation(&a.simple(2), &c).unwrap();
        assert!(r.is_injective);
        assert!(is_isomorphic(&r.object, &a.projective(1)).unwrap());
        let r = minimal_left_approximation(&a.simple(1), &c).unwrap();
        assert!(r.is_injective);
        assert!(is_isomorphic(&r.object, &a.projective(0)).unwrap());
        let r = minimal_left_approximation(&a.simple(0), &c).unwrap();
        assert!(r.object.is_zero());
        assert!(!r.is_injective);
        assert!(left_factoring_holds(&r, &a.simple(0), &c).unwrap());
    }

    #[test]
    fn right_approximations() {
        let a = lambda0();
        let cat = a.category();
        let u1 = a.regular_module();
        let r = minimal_right_approximation(&u1, &a.simple(1)).unwrap();
        assert!(r.is_surjective);
        assert!(is_isomorphic(&r.object, &a.projective(1)).unwrap());
        assert!(is_isomorphic(&r.kernel().0, &a.projective(2)).unwrap());
        let u2 = sum_of(cat, &[a.projective(0), a.projective(1), a.simple(1)]);
        let r = right_approximation(&u2, &a.simple(2)).unwrap();
        assert!(r.object.is_zero());
        assert!(!r.is_surjective);
    }
}
