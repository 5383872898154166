//! Enumeration of indecomposables: exhaustive search over a finite field,
//! or interval modules for Nakayama shapes.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use rayon::prelude::*;

use super::decompose::{decompose, increment, indecomposables_isomorphic};
use super::{quotient, Constraint, ModCategory, Morphism, Representation};
use crate::error::{Error, Result};
use crate::xfield::{Field, Matrix, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationStrategy {
    Brute,
    Nakayama,
    /// Brute force over GF(2) and GF(3), interval modules otherwise.
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest allowed entry of a dimension vector.
    pub entry: usize,
    /// Maximum number of complete structure-map tuples examined.
    pub budget: usize,
    /// Re-run at `entry + 1` and fail if anything new shows up.
    pub check_stability: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            entry: 2,
            budget: 5_000_000,
            check_stability: true,
        }
    }
}

impl Bounds {
    pub fn with_entry(entry: usize) -> Self {
        Bounds {
            entry,
            ..Bounds::default()
        }
    }
}

pub fn enumerate_indecomposables(
    cat: &Arc<ModCategory>,
    strategy: EnumerationStrategy,
    bounds: Bounds,
) -> Result<Vec<Representation>> {
    match strategy {
        EnumerationStrategy::Nakayama => nakayama(cat),
        EnumerationStrategy::Brute => brute(cat, bounds),
        EnumerationStrategy::Auto => match cat.field().order() {
            Some(2 | 3) => brute(cat, bounds),
            _ => nakayama(cat),
        },
    }
}

fn nakayama(cat: &Arc<ModCategory>) -> Result<Vec<Representation>> {
    for (s, name) in cat.slots().iter().enumerate() {
        let outgoing = cat.links().iter().filter(|l| l.source == s).count();
        let incoming = cat.links().iter().filter(|l| l.target == s).count();
        if outgoing > 1 || incoming > 1 {
            return Err(Error::NotNakayama(format!(
                "vertex `{name}` has {incoming} incoming and {outgoing} outgoing arrows"
            )));
        }
    }
    if let Some(l) = cat.links().iter().find(|l| l.coeff_dim != 1) {
        return Err(Error::NotNakayama(format!("link `{}` is not a single arrow", l.name)));
    }
    let mut found: Vec<Representation> = Vec::new();
    for v in 0..cat.slot_count() {
        let p = Representation::projective(cat, v);
        // successive radical powers, tracked inside P_v
        let mut layers = Vec::new();
        let mut current = p.clone();
        let mut incl = Morphism::identity(&p);
        while !current.is_zero() {
            layers.push(incl.clone());
            let (rad, i) = current.radical();
            if rad.total_dim() == current.total_dim() {
                break;
            }
            incl = incl.after(&i);
            current = rad;
        }
        layers.push(incl);
        for k in 1..layers.len() {
            let bases: Vec<Matrix> = layers[k].components.clone();
            let (q, _) = quotient(&p, &bases);
            if !found.iter().any(|m| indecomposables_isomorphic(m, &q)) {
                found.push(q);
            }
        }
    }
    sort_modules(&mut found);
    Ok(found)
}

fn sort_modules(list: &mut [Representation]) {
    list.sort_by(|a, b| {
        (a.total_dim(), a.dims())
            .cmp(&(b.total_dim(), b.dims()))
    });
}

fn brute(cat: &Arc<ModCategory>, bounds: Bounds) -> Result<Vec<Representation>> {
    if cat.field().order().is_none() {
        return Err(Error::BruteNeedsPrimeField);
    }
    let counter = AtomicUsize::new(0);
    let vectors = dim_vectors(cat, bounds.entry, false);
    let per_vector: Vec<Result<Vec<Representation>>> = vectors
        .par_iter()
        .map(|dims| indecomposables_with_dims(cat, dims, &counter, bounds.budget))
        .collect();
    let mut found = Vec::new();
    for r in per_vector {
        found.extend(r?);
    }
    if bounds.check_stability {
        let next = dim_vectors(cat, bounds.entry + 1, true);
        let extra: Vec<Result<Option<Vec<usize>>>> = next
            .par_iter()
            .map(|dims| {
                let list = indecomposables_with_dims(cat, dims, &counter, bounds.budget)?;
                Ok(list.first().map(|m| m.dims().to_vec()))
            })
            .collect();
        for r in extra {
            if let Some(dims) = r? {
                return Err(Error::NotRepresentationFiniteWithinBounds {
                    bound: bounds.entry,
                    dims,
                });
            }
        }
    }
    sort_modules(&mut found);
    Ok(found)
}

/// Nonzero dimension vectors with connected support; with `top_only`, only
/// those attaining the bound somewhere.
fn dim_vectors(cat: &ModCategory, bound: usize, top_only: bool) -> Vec<Vec<usize>> {
    let n = cat.slot_count();
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    while increment(&mut digits, bound + 1) {
        if top_only && !digits.contains(&bound) {
            continue;
        }
        if support_connected(cat, &digits) {
            out.push(digits.clone());
        }
    }
    out.sort_by(|a, b| (a.iter().sum::<usize>(), a).cmp(&(b.iter().sum::<usize>(), b)));
    out
}

fn support_connected(cat: &ModCategory, dims: &[usize]) -> bool {
    let support: Vec<usize> = (0..dims.len()).filter(|&i| dims[i] > 0).collect();
    let Some(&start) = support.first() else {
        return false;
    };
    let mut seen = vec![false; dims.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for l in cat.links() {
            let other = if l.source == v {
                l.target
            } else if l.target == v {
                l.source
            } else {
                continue;
            };
            if dims[other] > 0 && !seen[other] {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    support.iter().all(|&i| seen[i])
}

#[derive(Debug, Clone, Copy)]
enum Form {
    Rank,
    RowEchelon,
    ColumnEchelon,
    Full,
}

struct Plan {
    order: Vec<usize>,
    forms: Vec<Form>,
    /// Constraints whose last link is assigned at each position.
    completes: Vec<Vec<usize>>,
}

fn plan(cat: &ModCategory, dims: &[usize]) -> Plan {
    let links = cat.links();
    let shape_empty = |li: usize| {
        let l = &links[li];
        dims[l.target] == 0 || dims[l.source] * l.coeff_dim == 0
    };
    let mut fresh = vec![true; dims.len()];
    let mut remaining: Vec<usize> = (0..links.len()).collect();
    let mut order = Vec::new();
    let mut forms = Vec::new();
    // trivially shaped links first: they neither consume nor need freedom
    remaining.retain(|&li| {
        if shape_empty(li) {
            order.push(li);
            forms.push(Form::Full);
            false
        } else {
            true
        }
    });
    while !remaining.is_empty() {
        let score = |li: usize| {
            let l = &links[li];
            match (l.source != l.target && fresh[l.source], fresh[l.target]) {
                (true, false) | (false, true) => 2,
                (true, true) => 1,
                (false, false) => 0,
            }
        };
        let (pos, _) = remaining
            .iter()
            .enumerate()
            .max_by_key(|(i, &li)| (score(li), std::cmp::Reverse(*i)))
            .expect("nonempty");
        let li = remaining.remove(pos);
        let l = &links[li];
        let s_fresh = l.source != l.target && fresh[l.source];
        let t_fresh = l.source != l.target && fresh[l.target];
        let form = match (s_fresh, t_fresh) {
            (true, true) if l.coeff_dim == 1 => Form::Rank,
            (_, true) => Form::RowEchelon,
            (true, false) if l.coeff_dim == 1 => Form::ColumnEchelon,
            _ => Form::Full,
        };
        fresh[l.source] = false;
        fresh[l.target] = false;
        order.push(li);
        forms.push(form);
    }
    let mut position = vec![0; links.len()];
    for (i, &li) in order.iter().enumerate() {
        position[li] = i;
    }
    let mut completes = vec![Vec::new(); order.len()];
    for (ci, c) in cat.constraints().iter().enumerate() {
        let last = c.links().iter().map(|&l| position[l]).max().unwrap_or(0);
        completes[last].push(ci);
    }
    Plan {
        order,
        forms,
        completes,
    }
}

fn indecomposables_with_dims(
    cat: &Arc<ModCategory>,
    dims: &[usize],
    counter: &AtomicUsize,
    budget: usize,
) -> Result<Vec<Representation>> {
    let plan = plan(cat, dims);
    let mut assigned: Vec<Option<Matrix>> = vec![None; cat.links().len()];
    let mut found: Vec<Representation> = Vec::new();
    search(cat, dims, &plan, 0, &mut assigned, &mut found, counter, budget)?;
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn search(
    cat: &Arc<ModCategory>,
    dims: &[usize],
    plan: &Plan,
    depth: usize,
    assigned: &mut Vec<Option<Matrix>>,
    found: &mut Vec<Representation>,
    counter: &AtomicUsize,
    budget: usize,
) -> Result<()> {
    if depth == plan.order.len() {
        if counter.fetch_add(1, Ordering::Relaxed) >= budget {
            return Err(Error::EnumerationBudgetExceeded { budget });
        }
        let maps: Vec<Matrix> = assigned.iter().map(|m| m.clone().expect("assigned")).collect();
        let x = Representation::from_parts(cat, dims.to_vec(), maps);
        if found.iter().any(|m| indecomposables_isomorphic(m, &x)) {
            return Ok(());
        }
        let report = decompose(&x)?;
        if report.total_multiplicity() == 1 {
            report.require_split()?;
            found.push(x);
        }
        return Ok(());
    }
    let li = plan.order[depth];
    for m in candidates(cat, dims, li, plan.forms[depth], assigned) {
        assigned[li] = Some(m);
        let ok = plan.completes[depth].iter().all(|&ci| {
            let c = &cat.constraints()[ci];
            let maps: Vec<Matrix> = assigned
                .iter()
                .enumerate()
                .map(|(i, m)| m.clone().unwrap_or_else(|| placeholder(cat, dims, i)))
                .collect();
            cat.constraint_holds(c, dims, &maps)
        });
        if ok {
            search(cat, dims, plan, depth + 1, assigned, found, counter, budget)?;
        }
    }
    assigned[li] = None;
    Ok(())
}

fn placeholder(cat: &ModCategory, dims: &[usize], li: usize) -> Matrix {
    let l = &cat.links()[li];
    Matrix::zeros(cat.field(), dims[l.target], dims[l.source] * l.coeff_dim)
}

fn candidates(
    cat: &ModCategory,
    dims: &[usize],
    li: usize,
    form: Form,
    assigned: &[Option<Matrix>],
) -> Vec<Matrix> {
    let l = &cat.links()[li];
    let f = cat.field();
    let (rows, cols) = (dims[l.target], dims[l.source] * l.coeff_dim);
    if rows == 0 || cols == 0 {
        return vec![Matrix::zeros(f, rows, cols)];
    }
    match form {
        Form::Rank => (0..=rows.min(cols))
            .map(|r| Matrix::from_fn(f, rows, cols, |i, j| if i == j && i < r { f.one() } else { f.zero() }))
            .collect(),
        Form::RowEchelon => row_echelon_forms(f, rows, cols),
        Form::ColumnEchelon => row_echelon_forms(f, cols, rows)
            .into_iter()
            .map(|m| m.transpose())
            .collect(),
        Form::Full => affine_solutions(cat, dims, li, assigned),
    }
}

/// All matrices in reduced row echelon form of the given shape.
fn row_echelon_forms(f: Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let elements = f.elements().expect("finite field");
    let mut out = Vec::new();
    for k in 0..=rows.min(cols) {
        for pivots in combinations(cols, k) {
            let mut free = Vec::new();
            for (i, &p) in pivots.iter().enumerate() {
                for c in p + 1..cols {
                    if !pivots.contains(&c) {
                        free.push((i, c));
                    }
                }
            }
            let mut digits = vec![0usize; free.len()];
            loop {
                let mut m = Matrix::zeros(f, rows, cols);
                for (i, &p) in pivots.iter().enumerate() {
                    m.set(i, p, f.one());
                }
                for (&(i, c), &d) in free.iter().zip(&digits) {
                    m.set(i, c, elements[d].clone());
                }
                out.push(m);
                if !increment(&mut digits, elements.len()) {
                    break;
                }
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// An affine equation `A · L · B = C` on the unknown link matrix `L`.
struct Affine {
    a: Matrix,
    b: Matrix,
    c: Matrix,
}

fn product_along(cat: &ModCategory, dims: &[usize], path: &[usize], assigned: &[Option<Matrix>]) -> Option<Matrix> {
    let f = cat.field();
    let first = &cat.links()[*path.first()?];
    let mut acc = Matrix::identity(f, dims[first.source]);
    for &l in path {
        acc = assigned[l].as_ref()? * &acc;
    }
    Some(acc)
}

/// Linear conditions on link `li` coming from constraints whose other links
/// are already fixed.
fn affine_conditions(cat: &ModCategory, dims: &[usize], li: usize, assigned: &[Option<Matrix>]) -> Vec<Affine> {
    let f = cat.field();
    let links = cat.links();
    let l = &links[li];
    let mut out = Vec::new();
    for c in cat.constraints() {
        match c {
            Constraint::ZeroPath(path) => {
                let hits: Vec<usize> = path.iter().enumerate().filter(|(_, &x)| x == li).map(|(i, _)| i).collect();
                if hits.len() != 1 {
                    continue;
                }
                let i = hits[0];
                let before = if i == 0 {
                    Some(Matrix::identity(f, dims[l.source]))
                } else {
                    product_along(cat, dims, &path[..i], assigned)
                };
                let after = if i + 1 == path.len() {
                    Some(Matrix::identity(f, dims[l.target]))
                } else {
                    product_along(cat, dims, &path[i + 1..], assigned)
                };
                if let (Some(b), Some(a)) = (before, after) {
                    let zero = Matrix::zeros(f, a.rows(), b.cols());
                    out.push(Affine { a, b, c: zero });
                }
            }
            Constraint::Commutes {
                arrow,
                from,
                to,
                ext_slot,
                coeff,
            } => {
                let roles = [Some(*arrow), *from, *to].iter().filter(|x| **x == Some(li)).count();
                if roles != 1 {
                    continue;
                }
                let v = dims[*ext_slot];
                let kron = Matrix::identity(f, v).kron(coeff);
                let w = links[*arrow].target;
                let rhs_known = match to {
                    Some(t) => assigned[*t].as_ref().map(|m| m * &kron),
                    None => Some(Matrix::zeros(f, dims[w], kron.cols())),
                };
                if *arrow == li {
                    if let (Some(fr), Some(rhs)) = (from, rhs_known) {
                        if let Some(mf) = &assigned[*fr] {
                            out.push(Affine {
                                a: Matrix::identity(f, dims[w]),
                                b: mf.clone(),
                                c: rhs,
                            });
                        }
                    }
                } else if *from == Some(li) {
                    if let (Some(ma), Some(rhs)) = (&assigned[*arrow], rhs_known) {
                        out.push(Affine {
                            a: ma.clone(),
                            b: Matrix::identity(f, l.source_cols(dims)),
                            c: rhs,
                        });
                    }
                } else {
                    let lhs = match from {
                        Some(fr) => match (&assigned[*arrow], &assigned[*fr]) {
                            (Some(ma), Some(mf)) => Some(ma * mf),
                            _ => None,
                        },
                        None => Some(Matrix::zeros(f, dims[w], kron.cols())),
                    };
                    if let Some(lhs) = lhs {
                        out.push(Affine {
                            a: Matrix::identity(f, dims[w]),
                            b: kron,
                            c: lhs,
                        });
                    }
                }
            }
        }
    }
    out
}

trait SourceCols {
    fn source_cols(&self, dims: &[usize]) -> usize;
}

impl SourceCols for super::Link {
    fn source_cols(&self, dims: &[usize]) -> usize {
        dims[self.source] * self.coeff_dim
    }
}

/// Every link matrix satisfying the currently determined linear conditions.
fn affine_solutions(cat: &ModCategory, dims: &[usize], li: usize, assigned: &[Option<Matrix>]) -> Vec<Matrix> {
    let f = cat.field();
    let l = &cat.links()[li];
    let (rows, cols) = (dims[l.target], l.source_cols(dims));
    let unknowns = rows * cols;
    let conditions = affine_conditions(cat, dims, li, assigned);
    let mut eq: Vec<Scalar> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    let mut n_eq = 0;
    for Affine { a, b, c } in &conditions {
        // vec(A L B) = (A ⊗ Bᵀ) vec(L), row-major
        let k = a.kron(&b.transpose());
        for r in 0..k.rows() {
            for col in 0..k.cols() {
                eq.push(k.get(r, col).clone());
            }
            rhs.push(c.get(r / c.cols(), r % c.cols()).clone());
            n_eq += 1;
        }
    }
    let system = Matrix::from_vec(f, n_eq, unknowns, eq);
    let target = Matrix::from_vec(f, n_eq, 1, rhs);
    let Some(particular) = system.solve(&target).expect("shapes agree") else {
        return Vec::new();
    };
    let kernel = system.kernel();
    let elements = f.elements().expect("finite field");
    let mut out = Vec::new();
    let mut digits = vec![0usize; kernel.cols()];
    loop {
        let mut v = particular.col(0);
        for (j, &d) in digits.iter().enumerate() {
            if d != 0 {
                for (i, entry) in v.iter_mut().enumerate() {
                    *entry = &*entry + &(&elements[d] * kernel.get(i, j));
                }
            }
        }
        out.push(Matrix::from_vec(f, rows, cols, v));
        if !increment(&mut digits, elements.len()) {
            break;
        }
    }
    out
}
