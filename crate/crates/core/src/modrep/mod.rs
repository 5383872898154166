//! Finite-dimensional representations and the linear algebra of their
//! morphisms.
//!
//! A [`ModCategory`] describes a module category by *slots* (one vector space
//! per vertex), *links* (structure maps between slot spaces) and constraints
//! the links satisfy. A link from slot `s` to slot `t` with coefficient
//! dimension `m` is a matrix `X_t × (X_s ⊗ k^m)`; morphisms act on its source
//! by `f_s ⊗ id_m`. With `m = 1` everywhere this is a quiver representation;
//! the triple category of a one-point extension uses `m = dim M_u` for the
//! links `V ⊗ M_u → X_u`.

mod decompose;
mod enumerate;

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::xfield::{Field, Matrix, Scalar};

pub use decompose::{
    basic_part, decompose, describe, indecomposables_isomorphic, is_indecomposable, is_isomorphic,
    DecompositionReport, Summand,
};
pub use enumerate::{enumerate_indecomposables, Bounds, EnumerationStrategy};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Link {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub coeff_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// The composite of the listed links (first link applied first) vanishes.
    ZeroPath(Vec<usize>),
    /// `L_arrow · L_from = L_to · (id_V ⊗ coeff)` where `from`/`to` are links
    /// out of `ext_slot` (absent links contribute zero).
    Commutes {
        arrow: usize,
        from: Option<usize>,
        to: Option<usize>,
        ext_slot: usize,
        coeff: Matrix,
    },
}

impl Constraint {
    pub fn links(&self) -> Vec<usize> {
        match self {
            Constraint::ZeroPath(p) => p.clone(),
            Constraint::Commutes { arrow, from, to, .. } => {
                let mut v = vec![*arrow];
                v.extend(from.iter().copied());
                v.extend(to.iter().copied());
                v
            }
        }
    }
}

/// An indecomposable projective given by raw data, with the index of its
/// top generator inside its own slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveSpec {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
    pub generator: usize,
}

type RepKey = (Vec<usize>, Vec<Matrix>);

#[derive(Default)]
pub(crate) struct Caches {
    pub(crate) decomposition: Mutex<HashMap<RepKey, Vec<(RepKey, usize)>>>,
    pub(crate) syzygy: Mutex<HashMap<RepKey, (RepKey, RepKey, Vec<Matrix>)>>,
}

/// The shape of a module category together with its indecomposable projectives.
pub struct ModCategory {
    name: String,
    field: Field,
    seed: u64,
    slots: Vec<String>,
    links: Vec<Link>,
    constraints: Vec<Constraint>,
    projectives: Vec<ProjectiveSpec>,
    pub(crate) caches: Caches,
}

impl PartialEq for ModCategory {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.field == other.field
            && self.seed == other.seed
            && self.slots == other.slots
            && self.links == other.links
            && self.constraints == other.constraints
            && self.projectives == other.projectives
    }
}

impl fmt::Debug for ModCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModCategory")
            .field("name", &self.name)
            .field("field", &self.field)
            .field("slots", &self.slots)
            .field("links", &self.links.iter().map(|l| &l.name).collect::<Vec<_>>())
            .finish()
    }
}

impl ModCategory {
    pub fn new(
        name: impl Into<String>,
        field: Field,
        seed: u64,
        slots: Vec<String>,
        links: Vec<Link>,
        constraints: Vec<Constraint>,
        projectives: Vec<ProjectiveSpec>,
    ) -> Result<Arc<Self>> {
        for l in &links {
            if l.source >= slots.len() || l.target >= slots.len() {
                return Err(Error::MalformedId(format!("link `{}` has a bad endpoint", l.name)));
            }
        }
        for c in &constraints {
            if c.links().iter().any(|&l| l >= links.len()) {
                return Err(Error::InvalidRelation("constraint names an unknown link".into()));
            }
        }
        if projectives.len() != slots.len() {
            return Err(Error::InvalidRepresentation(
                "one indecomposable projective per slot is required".into(),
            ));
        }
        let cat = ModCategory {
            name: name.into(),
            field,
            seed,
            slots,
            links,
            constraints,
            projectives,
            caches: Caches::default(),
        };
        for (j, p) in cat.projectives.iter().enumerate() {
            cat.check_data(&p.dims, &p.maps)?;
            if p.generator >= p.dims[j] {
                return Err(Error::InvalidRepresentation(format!(
                    "projective at `{}` has no generator",
                    cat.slots[j]
                )));
            }
        }
        Ok(Arc::new(cat))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn slots(&self) -> &[String] {
        &self.slots
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }

    pub fn slot_index(&self, name: &str) -> Option<usize> {
        self.slots.iter().position(|s| s == name)
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn projective_spec(&self, slot: usize) -> &ProjectiveSpec {
        &self.projectives[slot]
    }

    fn link_shape(&self, dims: &[usize], l: &Link) -> (usize, usize) {
        (dims[l.target], dims[l.source] * l.coeff_dim)
    }

    /// Validates dimension data and all constraints.
    pub fn check_data(&self, dims: &[usize], maps: &[Matrix]) -> Result<()> {
        if dims.len() != self.slots.len() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} slot dimensions, got {}",
                self.slots.len(),
                dims.len()
            )));
        }
        if maps.len() != self.links.len() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} structure maps, got {}",
                self.links.len(),
                maps.len()
            )));
        }
        for (l, m) in self.links.iter().zip(maps) {
            if m.field() != self.field {
                return Err(Error::Field(crate::xfield::FieldError::FieldMismatch(
                    m.field(),
                    self.field,
                )));
            }
            if m.shape() != self.link_shape(dims, l) {
                return Err(Error::InvalidRepresentation(format!(
                    "map `{}` has shape {:?}, expected {:?}",
                    l.name,
                    m.shape(),
                    self.link_shape(dims, l)
                )));
            }
        }
        for c in &self.constraints {
            if !self.constraint_holds(c, dims, maps) {
                return Err(Error::InvalidRepresentation(format!(
                    "constraint violated: {}",
                    self.describe_constraint(c)
                )));
            }
        }
        Ok(())
    }

    pub(crate) fn constraint_holds(&self, c: &Constraint, dims: &[usize], maps: &[Matrix]) -> bool {
        match c {
            Constraint::ZeroPath(path) => {
                let first = &self.links[path[0]];
                let mut acc = Matrix::identity(self.field, dims[first.source]);
                for &l in path {
                    acc = &maps[l] * &acc;
                    if acc.is_zero() {
                        return true;
                    }
                }
                acc.is_zero()
            }
            Constraint::Commutes {
                arrow,
                from,
                to,
                ext_slot,
                coeff,
            } => {
                let w = self.links[*arrow].target;
                let v = dims[*ext_slot];
                let cols = v * coeff.cols();
                let lhs = match from {
                    Some(f) => &maps[*arrow] * &maps[*f],
                    None => Matrix::zeros(self.field, dims[w], cols),
                };
                let rhs = match to {
                    Some(t) => &maps[*t] * &Matrix::identity(self.field, v).kron(coeff),
                    None => Matrix::zeros(self.field, dims[w], cols),
                };
                lhs == rhs
            }
        }
    }

    fn describe_constraint(&self, c: &Constraint) -> String {
        match c {
            Constraint::ZeroPath(p) => {
                let names: Vec<&str> = p.iter().map(|&l| self.links[l].name.as_str()).collect();
                format!("path {} is zero", names.join(" "))
            }
            Constraint::Commutes { arrow, .. } => {
                format!("structure map commutes with `{}`", self.links[*arrow].name)
            }
        }
    }

    pub(crate) fn rng_for(&self, salt: u64, dims: &[usize], maps: &[Matrix]) -> rand_chacha::ChaCha8Rng {
        use rand::SeedableRng;
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.seed.hash(&mut h);
        salt.hash(&mut h);
        dims.hash(&mut h);
        maps.hash(&mut h);
        rand_chacha::ChaCha8Rng::seed_from_u64(h.finish())
    }
}

/// A finite-dimensional module given by slot dimensions and structure maps.
#[derive(Clone)]
pub struct Representation {
    cat: Arc<ModCategory>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_category(&self.cat, &other.cat) && self.dims == other.dims && self.maps == other.maps
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({:?}", self.dims)?;
        for (l, m) in self.cat.links.iter().zip(&self.maps) {
            if m.rows() > 0 && m.cols() > 0 {
                write!(f, " {}={}", l.name, m)?;
            }
        }
        write!(f, ")")
    }
}

pub(crate) fn same_category(a: &Arc<ModCategory>, b: &Arc<ModCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    pub fn new(cat: &Arc<ModCategory>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        cat.check_data(&dims, &maps)?;
        Ok(Representation {
            cat: cat.clone(),
            dims,
            maps,
        })
    }

    pub(crate) fn from_parts(cat: &Arc<ModCategory>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        debug_assert!(cat.check_data(&dims, &maps).is_ok());
        Representation {
            cat: cat.clone(),
            dims,
            maps,
        }
    }

    pub(crate) fn from_key(cat: &Arc<ModCategory>, key: &RepKey) -> Self {
        Representation::from_parts(cat, key.0.clone(), key.1.clone())
    }

    pub(crate) fn key(&self) -> RepKey {
        (self.dims.clone(), self.maps.clone())
    }

    pub fn zero(cat: &Arc<ModCategory>) -> Self {
        let dims = vec![0; cat.slot_count()];
        let maps = cat
            .links
            .iter()
            .map(|l| {
                let (r, c) = cat.link_shape(&dims, l);
                Matrix::zeros(cat.field, r, c)
            })
            .collect();
        Representation::from_parts(cat, dims, maps)
    }

    pub fn simple(cat: &Arc<ModCategory>, slot: usize) -> Self {
        let mut dims = vec![0; cat.slot_count()];
        dims[slot] = 1;
        let maps = cat
            .links
            .iter()
            .map(|l| {
                let (r, c) = cat.link_shape(&dims, l);
                Matrix::zeros(cat.field, r, c)
            })
            .collect();
        Representation::from_parts(cat, dims, maps)
    }

    pub fn projective(cat: &Arc<ModCategory>, slot: usize) -> Self {
        let p = &cat.projectives[slot];
        Representation::from_parts(cat, p.dims.clone(), p.maps.clone())
    }

    pub fn category(&self) -> &Arc<ModCategory> {
        &self.cat
    }

    pub fn field(&self) -> Field {
        self.cat.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, link: usize) -> &Matrix {
        &self.maps[link]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub(crate) fn check_same(&self, other: &Representation) -> Result<()> {
        if same_category(&self.cat, &other.cat) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Basis (as columns) of the radical at every slot: the span of all
    /// structure-map images landing there.
    pub fn radical_bases(&self) -> Vec<Matrix> {
        let f = self.field();
        (0..self.cat.slot_count())
            .map(|t| {
                let incoming: Vec<&Matrix> = self
                    .cat
                    .links
                    .iter()
                    .zip(&self.maps)
                    .filter(|(l, _)| l.target == t)
                    .map(|(_, m)| m)
                    .collect();
                Matrix::hstack(f, self.dims[t], &incoming).column_basis()
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_bases()
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.cols())
            .collect()
    }

    pub fn radical(&self) -> (Representation, Morphism) {
        submodule(self, &self.radical_bases())
    }

    /// Dimension vectors of the radical layers `rad^k / rad^(k+1)`.
    pub fn radical_layers(&self) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut current = self.clone();
        while !current.is_zero() {
            let top = current.top_dims();
            let (rad, _) = current.radical();
            layers.push(top);
            if rad.total_dim() == current.total_dim() {
                // only possible without admissibility; stop instead of looping
                break;
            }
            current = rad;
        }
        layers
    }

    /// `top/rad-layers` descriptor, e.g. `2/3` for the projective at 2.
    pub fn layer_descriptor(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.radical_layers()
            .iter()
            .map(|layer| {
                let mut parts = Vec::new();
                for (s, &d) in layer.iter().enumerate() {
                    for _ in 0..d {
                        parts.push(self.cat.slots[s].clone());
                    }
                }
                parts.join("+")
            })
            .collect::<Vec<_>>()
            .join("/")
    }
}

/// Vertex-indexed matrices; component `j` maps slot `j` of the source to
/// slot `j` of the target.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub components: Vec<Matrix>,
}

impl Morphism {
    pub fn identity(x: &Representation) -> Self {
        Morphism {
            components: x.dims.iter().map(|&d| Matrix::identity(x.field(), d)).collect(),
        }
    }

    pub fn zero(x: &Representation, y: &Representation) -> Self {
        Morphism {
            components: x
                .dims
                .iter()
                .zip(&y.dims)
                .map(|(&dx, &dy)| Matrix::zeros(x.field(), dy, dx))
                .collect(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        Morphism {
            components: self
                .components
                .iter()
                .zip(&first.components)
                .map(|(g, f)| g * f)
                .collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        Morphism {
            components: self.components.iter().map(|m| m.scale(s)).collect(),
        }
    }

    pub fn combination(basis: &[Morphism], coeffs: &[Scalar], x: &Representation, y: &Representation) -> Morphism {
        let mut acc = Morphism::zero(x, y);
        for (b, c) in basis.iter().zip(coeffs) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.components.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.components.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    pub fn flatten(&self) -> Vec<Scalar> {
        let mut out = Vec::new();
        for m in &self.components {
            m.flatten_into(&mut out);
        }
        out
    }

    /// Whether `self` intertwines the structure maps of `x` and `y`.
    pub fn is_morphism(&self, x: &Representation, y: &Representation) -> bool {
        if self.components.len() != x.dims.len() {
            return false;
        }
        for (j, m) in self.components.iter().enumerate() {
            if m.shape() != (y.dims[j], x.dims[j]) {
                return false;
            }
        }
        x.cat.links.iter().enumerate().all(|(li, l)| {
            let id = Matrix::identity(x.field(), l.coeff_dim);
            let lhs = &self.components[l.target] * &x.maps[li];
            let rhs = &y.maps[li] * &self.components[l.source].kron(&id);
            lhs == rhs
        })
    }
}

/// Rank of a family of equally-shaped morphisms viewed as vectors.
pub fn span_rank(family: &[Morphism]) -> usize {
    let rows: Vec<Vec<Scalar>> = family.iter().map(Morphism::flatten).collect();
    span_rank_vectors(&rows)
}

pub(crate) fn span_rank_vectors(rows: &[Vec<Scalar>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    if first.is_empty() {
        return 0;
    }
    let field = first[0].field();
    let n = first.len();
    let data: Vec<Scalar> = rows.iter().flat_map(|r| r.iter().cloned()).collect();
    Matrix::from_vec(field, rows.len(), n, data).rank()
}

/// Basis of `Hom(x, y)`.
pub fn hom_basis(x: &Representation, y: &Representation) -> Result<Vec<Morphism>> {
    x.check_same(y)?;
    Ok(hom_basis_unchecked(x, y))
}

pub(crate) fn hom_basis_unchecked(x: &Representation, y: &Representation) -> Vec<Morphism> {
    let cat = &x.cat;
    let f = cat.field;
    let n = cat.slot_count();
    let mut offsets = Vec::with_capacity(n);
    let mut unknowns = 0;
    for j in 0..n {
        offsets.push(unknowns);
        unknowns += y.dims[j] * x.dims[j];
    }
    if unknowns == 0 {
        return Vec::new();
    }
    let mut eq_rows: Vec<Vec<Scalar>> = Vec::new();
    for (li, l) in cat.links.iter().enumerate() {
        let (s, t, m) = (l.source, l.target, l.coeff_dim);
        let xl = &x.maps[li];
        let yl = &y.maps[li];
        let cols = x.dims[s] * m;
        for r in 0..y.dims[t] {
            for c in 0..cols {
                let mut row = vec![f.zero(); unknowns];
                // f_t[r, k] * X_l[k, c]
                for k in 0..x.dims[t] {
                    let v = xl.get(k, c);
                    if !v.is_zero() {
                        let idx = offsets[t] + r * x.dims[t] + k;
                        row[idx] = &row[idx] + v;
                    }
                }
                // - Y_l[r, a*m + j] f_s[a, b] with c = b*m + j
                let (b, jj) = (c / m, c % m);
                for a in 0..y.dims[s] {
                    let v = yl.get(r, a * m + jj);
                    if !v.is_zero() {
                        let idx = offsets[s] + a * x.dims[s] + b;
                        row[idx] = &row[idx] - v;
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    eq_rows.push(row);
                }
            }
        }
    }
    let system = if eq_rows.is_empty() {
        Matrix::zeros(f, 0, unknowns)
    } else {
        let n_rows = eq_rows.len();
        let data: Vec<Scalar> = eq_rows.into_iter().flatten().collect();
        Matrix::from_vec(f, n_rows, unknowns, data)
    };
    let kernel = system.kernel();
    (0..kernel.cols())
        .map(|col| {
            let v = kernel.col(col);
            Morphism {
                components: (0..n)
                    .map(|j| {
                        Matrix::from_fn(f, y.dims[j], x.dims[j], |r, c| {
                            v[offsets[j] + r * x.dims[j] + c].clone()
                        })
                    })
                    .collect(),
            }
        })
        .collect()
}

/// Direct sum with its canonical injections and projections.
pub struct DirectSum {
    pub module: Representation,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(cat: &Arc<ModCategory>, parts: &[&Representation]) -> DirectSum {
    let f = cat.field;
    let n = cat.slot_count();
    let dims: Vec<usize> = (0..n).map(|j| parts.iter().map(|p| p.dims[j]).sum()).collect();
    let maps = cat
        .links
        .iter()
        .enumerate()
        .map(|(li, _)| {
            // source columns are ordered slot-basis-major, so summand blocks stay contiguous
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[li]).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let module = Representation::from_parts(cat, dims.clone(), maps);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offsets = vec![0; n];
    for p in parts {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for j in 0..n {
            let mut i = Matrix::zeros(f, dims[j], p.dims[j]);
            i.paste(offsets[j], 0, &Matrix::identity(f, p.dims[j]));
            proj.push(i.transpose());
            inj.push(i);
            offsets[j] += p.dims[j];
        }
        injections.push(Morphism { components: inj });
        projections.push(Morphism { components: proj });
    }
    DirectSum {
        module,
        injections,
        projections,
    }
}

pub fn sum_of(cat: &Arc<ModCategory>, parts: &[Representation]) -> Representation {
    let refs: Vec<&Representation> = parts.iter().collect();
    direct_sum(cat, &refs).module
}

/// Morphism `⊕ sources → target` assembled from columns.
pub fn morphism_from_sum(parts: &[&Morphism], n_slots: usize, field: Field, target_dims: &[usize]) -> Morphism {
    Morphism {
        components: (0..n_slots)
            .map(|j| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.components[j]).collect();
                Matrix::hstack(field, target_dims[j], &blocks)
            })
            .collect(),
    }
}

/// Morphism `source → ⊕ targets` assembled from rows.
pub fn morphism_into_sum(parts: &[&Morphism], n_slots: usize, field: Field, source_dims: &[usize]) -> Morphism {
    Morphism {
        components: (0..n_slots)
            .map(|j| {
                let blocks: Vec<&Matrix> = parts.iter().map(|m| &m.components[j]).collect();
                Matrix::vstack(field, source_dims[j], &blocks)
            })
            .collect(),
    }
}

/// Submodule spanned per slot by the columns of `bases` (which must be
/// linearly independent and invariant), with its inclusion.
pub fn submodule(x: &Representation, bases: &[Matrix]) -> (Representation, Morphism) {
    let cat = &x.cat;
    let f = cat.field;
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = cat
        .links
        .iter()
        .enumerate()
        .map(|(li, l)| {
            let id = Matrix::identity(f, l.coeff_dim);
            let image = &x.maps[li] * &bases[l.source].kron(&id);
            bases[l.target]
                .solve(&image)
                .expect("shapes agree")
                .expect("submodule must be invariant under structure maps")
        })
        .collect();
    let sub = Representation::from_parts(cat, dims, maps);
    (
        sub,
        Morphism {
            components: bases.to_vec(),
        },
    )
}

/// Quotient of `x` by the invariant subspaces spanned by `bases`, with the
/// canonical projection.
pub fn quotient(x: &Representation, bases: &[Matrix]) -> (Representation, Morphism) {
    let cat = &x.cat;
    let f = cat.field;
    let n = cat.slot_count();
    let mut sections = Vec::with_capacity(n);
    let mut projections = Vec::with_capacity(n);
    for j in 0..n {
        let comp = bases[j].complement_indices_in(x.dims[j]);
        let section = Matrix::from_fn(f, x.dims[j], comp.len(), |r, c| {
            if r == comp[c] {
                f.one()
            } else {
                f.zero()
            }
        });
        let change = Matrix::hstack(f, x.dims[j], &[&bases[j], &section]);
        let inv = change.inverse().expect("basis plus complement is invertible");
        let k = bases[j].cols();
        let proj = inv.block(k, 0, comp.len(), x.dims[j]);
        sections.push(section);
        projections.push(proj);
    }
    let maps = cat
        .links
        .iter()
        .enumerate()
        .map(|(li, l)| {
            let id = Matrix::identity(f, l.coeff_dim);
            &(&projections[l.target] * &x.maps[li]) * &sections[l.source].kron(&id)
        })
        .collect();
    let dims = sections.iter().map(Matrix::cols).collect();
    (
        Representation::from_parts(cat, dims, maps),
        Morphism {
            components: projections,
        },
    )
}

trait ComplementIn {
    fn complement_indices_in(&self, ambient: usize) -> Vec<usize>;
}

impl ComplementIn for Matrix {
    fn complement_indices_in(&self, ambient: usize) -> Vec<usize> {
        if self.cols() == 0 {
            return (0..ambient).collect();
        }
        self.complement_indices()
    }
}

pub fn kernel(x: &Representation, f: &Morphism) -> (Representation, Morphism) {
    let bases: Vec<Matrix> = f.components.iter().map(Matrix::kernel).collect();
    submodule(x, &bases)
}

pub fn image(y: &Representation, f: &Morphism) -> (Representation, Morphism) {
    let bases: Vec<Matrix> = f
        .components
        .iter()
        .zip(&y.dims)
        .map(|(m, &d)| {
            if m.cols() == 0 {
                Matrix::zeros(m.field(), d, 0)
            } else {
                m.column_basis()
            }
        })
        .collect();
    submodule(y, &bases)
}

pub fn cokernel(y: &Representation, f: &Morphism) -> (Representation, Morphism) {
    let bases: Vec<Matrix> = f
        .components
        .iter()
        .zip(&y.dims)
        .map(|(m, &d)| {
            if m.cols() == 0 {
                Matrix::zeros(m.field(), d, 0)
            } else {
                m.column_basis()
            }
        })
        .collect();
    quotient(y, &bases)
}

/// The morphism `P_slot → x` sending the top generator to `vector ∈ x_slot`.
pub fn yoneda(x: &Representation, slot: usize, vector: &Matrix) -> Morphism {
    let cat = &x.cat;
    let p = Representation::projective(cat, slot);
    let gen = cat.projectives[slot].generator;
    let basis = hom_basis_unchecked(&p, x);
    let f = cat.field;
    let eval = Matrix::from_fn(f, x.dims[slot], basis.len(), |r, c| {
        basis[c].components[slot].get(r, gen).clone()
    });
    let coeffs = eval
        .solve(vector)
        .expect("shapes agree")
        .expect("evaluation at the generator is onto x_slot");
    Morphism::combination(&basis, &coeffs.col(0), &p, x)
}

#[cfg(test)]
pub(crate) mod test_support {
    use super::*;

    /// A_n linear quiver 0 → 1 → … with optional monomial relations, built
    /// directly on `ModCategory` without the quiver layer.
    pub fn linear(field: Field, n: usize, zero_paths: &[Vec<usize>]) -> Arc<ModCategory> {
        let slots: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let links: Vec<Link> = (0..n.saturating_sub(1))
            .map(|i| Link {
                name: format!("a{i}"),
                source: i,
                target: i + 1,
                coeff_dim: 1,
            })
            .collect();
        // projective at i: paths i → j not containing a relation
        let nonzero = |i: usize, j: usize| {
            !zero_paths
                .iter()
                .any(|p| p[0] >= i && *p.last().unwrap() < j)
        };
        let projectives = (0..n)
            .map(|i| {
                let dims: Vec<usize> = (0..n).map(|j| usize::from(j >= i && nonzero(i, j))).collect();
                let maps = links
                    .iter()
                    .map(|l| {
                        let v = i64::from(dims[l.source] == 1 && dims[l.target] == 1);
                        let rows: Vec<Vec<i64>> = (0..dims[l.target])
                            .map(|_| vec![v; dims[l.source]])
                            .collect();
                        if rows.is_empty() {
                            Matrix::zeros(field, 0, dims[l.source])
                        } else {
                            Matrix::from_rows(field, &rows)
                        }
                    })
                    .collect();
                ProjectiveSpec {
                    dims,
                    maps,
                    generator: 0,
                }
            })
            .collect();
        let constraints = zero_paths.iter().map(|p| Constraint::ZeroPath(p.clone())).collect();
        ModCategory::new("linear", field, 0, slots, links, constraints, projectives).unwrap()
    }
}
