//! Krull–Schmidt decomposition by Fitting splitting, and isomorphism tests.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{hom_basis_unchecked, submodule, sum_of, Morphism, Representation};
use crate::error::{Error, Result};
use crate::xfield::{Field, Matrix, Scalar};

const FITTING_BUDGET: usize = 512;
const EXHAUST_LIMIT: u64 = 100_000;
const ISO_SAMPLES: usize = 256;

#[derive(Debug, Clone)]
pub struct Summand {
    pub module: Representation,
    pub multiplicity: usize,
    /// Dimension of `End / rad End` over the ground field.
    pub residue_dim: usize,
}

#[derive(Debug, Clone)]
pub struct DecompositionReport {
    pub summands: Vec<Summand>,
}

impl DecompositionReport {
    /// Number of pairwise non-isomorphic summands, `|T|`.
    pub fn distinct(&self) -> usize {
        self.summands.len()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    pub fn is_basic(&self) -> bool {
        self.summands.iter().all(|s| s.multiplicity == 1)
    }

    /// Fails on the first summand whose residue ring is larger than the field.
    pub fn require_split(&self) -> Result<()> {
        match self.summands.iter().find(|s| s.residue_dim != 1) {
            Some(s) => Err(Error::NonSplitResidue(s.residue_dim)),
            None => Ok(()),
        }
    }

    pub fn indecomposables(&self) -> Vec<Representation> {
        self.summands.iter().map(|s| s.module.clone()).collect()
    }
}

fn field_sample(field: Field, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        Field::Prime(p) => field.from_i64(rng.gen_range(0..i64::from(p))),
        Field::Rational => field.from_i64(rng.gen_range(-3..=3)),
    }
}

fn endo_pow(phi: &Morphism, n: usize) -> Morphism {
    Morphism {
        components: phi.components.iter().map(|m| m.pow(n)).collect(),
    }
}

/// Splits `x` along the Fitting decomposition of `phi` if it is neither
/// nilpotent nor invertible.
fn fitting_split(x: &Representation, phi: &Morphism) -> Option<(Representation, Representation)> {
    let n = x.total_dim();
    let power = endo_pow(phi, n);
    let kers: Vec<Matrix> = power.components.iter().map(Matrix::kernel).collect();
    let ker_dim: usize = kers.iter().map(Matrix::cols).sum();
    if ker_dim == 0 || ker_dim == n {
        return None;
    }
    let ims: Vec<Matrix> = power
        .components
        .iter()
        .zip(x.dims())
        .map(|(m, &d)| {
            if m.cols() == 0 {
                Matrix::zeros(x.field(), d, 0)
            } else {
                m.column_basis()
            }
        })
        .collect();
    Some((submodule(x, &kers).0, submodule(x, &ims).0))
}

fn is_nilpotent(phi: &Morphism, n: usize) -> bool {
    endo_pow(phi, n).is_zero()
}

/// Dimension of `End(x)/rad` when `End(x)` is certified local, `None` when
/// the certificate cannot be produced.
fn certify_local(x: &Representation, basis: &[Morphism]) -> Option<usize> {
    let field = x.field();
    let n = x.total_dim();
    let d = basis.len();
    let id = Morphism::identity(x);
    let mut shifted = Vec::with_capacity(d);
    'outer: for e in basis {
        let trace = e
            .components
            .iter()
            .fold(field.zero(), |acc, m| &acc + &m.trace());
        let candidates: Vec<Scalar> = match field {
            Field::Prime(p) if n as u64 % u64::from(p) == 0 => field.elements().unwrap_or_default(),
            _ => {
                let inv_n = field.from_i64(n as i64).inv().expect("dimension invertible");
                vec![&trace * &inv_n]
            }
        };
        for lambda in candidates {
            let shifted_e = e.add(&id.scale(&-&lambda));
            if is_nilpotent(&shifted_e, n) {
                shifted.push(shifted_e);
                continue 'outer;
            }
        }
        return exhaustive_local(x, basis);
    }
    // N = span of the shifted basis; need codim 1, two-sided ideal, nilpotent.
    let vectors: Vec<Vec<Scalar>> = shifted.iter().map(Morphism::flatten).collect();
    let span = super::span_rank_vectors(&vectors);
    if span + 1 != d {
        return exhaustive_local(x, basis);
    }
    let ideal = reduce_span(&shifted);
    for a in basis {
        for m in &ideal {
            for prod in [a.after(m), m.after(a)] {
                if !in_span(&ideal, &prod) {
                    return exhaustive_local(x, basis);
                }
            }
        }
    }
    let mut power = ideal.clone();
    for _ in 0..=n {
        if power.is_empty() {
            return Some(1);
        }
        let products: Vec<Morphism> = power
            .iter()
            .flat_map(|p| ideal.iter().map(move |m| p.after(m)))
            .collect();
        power = reduce_span(&products);
    }
    exhaustive_local(x, basis)
}

fn reduce_span(family: &[Morphism]) -> Vec<Morphism> {
    let mut kept: Vec<Morphism> = Vec::new();
    let mut rank = 0;
    for m in family {
        if m.is_zero() {
            continue;
        }
        kept.push(m.clone());
        let r = super::span_rank(&kept);
        if r > rank {
            rank = r;
        } else {
            kept.pop();
        }
    }
    kept
}

fn in_span(family: &[Morphism], m: &Morphism) -> bool {
    if m.is_zero() {
        return true;
    }
    let mut with = family.to_vec();
    with.push(m.clone());
    super::span_rank(&with) == super::span_rank(family)
}

/// Enumerates all of `End(x)` when it is small: local iff every element is
/// nilpotent or invertible; the nilpotent ones then form the radical.
fn exhaustive_local(x: &Representation, basis: &[Morphism]) -> Option<usize> {
    let field = x.field();
    let elements = field.elements()?;
    let p = elements.len() as u64;
    let d = basis.len();
    if p.checked_pow(d as u32).map_or(true, |t| t > EXHAUST_LIMIT) {
        return None;
    }
    let n = x.total_dim();
    let mut nilpotent = 0u64;
    let mut digits = vec![0usize; d];
    loop {
        let coeffs: Vec<Scalar> = digits.iter().map(|&i| elements[i].clone()).collect();
        let phi = Morphism::combination(basis, &coeffs, x, x);
        if is_nilpotent(&phi, n) {
            nilpotent += 1;
        } else if !phi.is_isomorphism() {
            return None;
        }
        if !increment(&mut digits, elements.len()) {
            break;
        }
    }
    let rad_dim = (nilpotent as f64).log(p as f64).round() as usize;
    Some(d - rad_dim)
}

pub(crate) fn increment(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

/// Indecomposable summands (with repetition) and their residue dimensions.
fn split_all(x: &Representation) -> Result<Vec<(Representation, usize)>> {
    if x.is_zero() {
        return Ok(Vec::new());
    }
    let key = x.key();
    let cat = x.category().clone();
    if let Some(hit) = cat.caches.decomposition.lock().unwrap().get(&key) {
        return Ok(hit
            .iter()
            .map(|(k, r)| (Representation::from_key(&cat, k), *r))
            .collect());
    }
    let basis = hom_basis_unchecked(x, x);
    let result = if basis.len() == 1 {
        vec![(x.clone(), 1)]
    } else {
        let mut found = None;
        for phi in &basis {
            if let Some(split) = fitting_split(x, phi) {
                found = Some(split);
                break;
            }
        }
        if found.is_none() {
            let mut rng = cat.rng_for(0xF177, x.dims(), x.maps());
            for _ in 0..FITTING_BUDGET {
                let coeffs: Vec<Scalar> = basis.iter().map(|_| field_sample(x.field(), &mut rng)).collect();
                let phi = Morphism::combination(&basis, &coeffs, x, x);
                if let Some(split) = fitting_split(x, &phi) {
                    found = Some(split);
                    break;
                }
            }
        }
        match found {
            Some((a, b)) => {
                let mut out = split_all(&a)?;
                out.extend(split_all(&b)?);
                out
            }
            None => match certify_local(x, &basis) {
                Some(residue) => vec![(x.clone(), residue)],
                None => {
                    return Err(Error::DecompositionInconclusive(format!(
                        "no splitting endomorphism among {FITTING_BUDGET} trials and locality not certified for dimension vector {:?}",
                        x.dims()
                    )))
                }
            },
        }
    };
    cat.caches.decomposition.lock().unwrap().insert(
        key,
        result.iter().map(|(m, r)| (m.key(), *r)).collect(),
    );
    Ok(result)
}

pub fn decompose(x: &Representation) -> Result<DecompositionReport> {
    let parts = split_all(x)?;
    let mut summands: Vec<Summand> = Vec::new();
    for (module, residue_dim) in parts {
        match summands
            .iter_mut()
            .find(|s| indecomposables_isomorphic(&s.module, &module))
        {
            Some(s) => s.multiplicity += 1,
            None => summands.push(Summand {
                module,
                multiplicity: 1,
                residue_dim,
            }),
        }
    }
    Ok(DecompositionReport { summands })
}

pub fn is_indecomposable(x: &Representation) -> Result<bool> {
    Ok(!x.is_zero() && split_all(x)?.len() == 1)
}

/// One copy of each indecomposable summand.
pub fn basic_part(x: &Representation) -> Result<Representation> {
    let report = decompose(x)?;
    Ok(sum_of(x.category(), &report.indecomposables()))
}

/// `⊕`-joined radical-layer descriptors of the summands, e.g. `2/3⊕3/4⊕4`.
pub fn describe(x: &Representation) -> Result<String> {
    if x.is_zero() {
        return Ok("0".into());
    }
    let mut parts = Vec::new();
    for s in decompose(x)?.summands {
        for _ in 0..s.multiplicity {
            parts.push(s.module.layer_descriptor());
        }
    }
    parts.sort();
    Ok(parts.join("⊕"))
}

/// Exact test for two modules already known to be indecomposable.
pub fn indecomposables_isomorphic(x: &Representation, y: &Representation) -> bool {
    if x.dims() != y.dims() {
        return false;
    }
    if x == y {
        return true;
    }
    let fs = hom_basis_unchecked(x, y);
    if fs.is_empty() {
        return false;
    }
    let gs = hom_basis_unchecked(y, x);
    fs.iter()
        .any(|f| gs.iter().any(|g| g.after(f).is_isomorphism()))
}

pub fn is_isomorphic(x: &Representation, y: &Representation) -> Result<bool> {
    x.check_same(y)?;
    if x.dims() != y.dims() {
        return Ok(false);
    }
    if x == y {
        return Ok(true);
    }
    let basis = hom_basis_unchecked(x, y);
    if basis.is_empty() {
        return Ok(x.is_zero());
    }
    let field = x.field();
    if let Some(elements) = field.elements() {
        let p = elements.len() as u64;
        if p.checked_pow(basis.len() as u32).is_some_and(|t| t <= EXHAUST_LIMIT) {
            let mut digits = vec![0usize; basis.len()];
            loop {
                let coeffs: Vec<Scalar> = digits.iter().map(|&i| elements[i].clone()).collect();
                if Morphism::combination(&basis, &coeffs, x, y).is_isomorphism() {
                    return Ok(true);
                }
                if !increment(&mut digits, elements.len()) {
                    return Ok(false);
                }
            }
        }
    }
    let mut rng = x.category().rng_for(0x150, x.dims(), x.maps());
    for _ in 0..ISO_SAMPLES {
        let coeffs: Vec<Scalar> = basis.iter().map(|_| field_sample(field, &mut rng)).collect();
        if Morphism::combination(&basis, &coeffs, x, y).is_isomorphism() {
            return Ok(true);
        }
    }
    same_decomposition(x, y)
}

fn same_decomposition(x: &Representation, y: &Representation) -> Result<bool> {
    let dx = decompose(x)?;
    let dy = decompose(y)?;
    if dx.distinct() != dy.distinct() {
        return Ok(false);
    }
    Ok(dx.summands.iter().all(|s| {
        dy.summands.iter().any(|t| {
            s.multiplicity == t.multiplicity && indecomposables_isomorphic(&s.module, &t.module)
        })
    }))
}
