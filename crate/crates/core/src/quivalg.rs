//! Bound quiver algebras `kQ/I` with monomial relations.
//!
//! Modules are right modules: an arrow `δ: u → v` acts as a map `X_u → X_v`
//! and the indecomposable projective `P_v` has the paths starting at `v` as
//! its basis. Paths compose left to right, so the relation `a b` kills the
//! path "first `a`, then `b`".

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::modrep::{direct_sum, Constraint, Link, ModCategory, ProjectiveSpec, Representation};
use crate::xfield::{Field, Matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

fn check_id(id: &str) -> Result<()> {
    let ok = !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '\'' | '-'));
    if ok {
        Ok(())
    } else {
        Err(Error::MalformedId(id.to_string()))
    }
}

impl Quiver {
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        for v in vertices {
            let v = v.as_ref();
            check_id(v)?;
            if names.iter().any(|n| n == v) {
                return Err(Error::MalformedId(format!("duplicate vertex `{v}`")));
            }
            names.push(v.to_string());
        }
        let mut out = Vec::new();
        for (a, s, t) in arrows {
            let a = a.as_ref();
            check_id(a)?;
            if out.iter().any(|x: &Arrow| x.name == a) {
                return Err(Error::MalformedId(format!("duplicate arrow `{a}`")));
            }
            let find = |v: &str| {
                names
                    .iter()
                    .position(|n| n == v)
                    .ok_or_else(|| Error::UnknownVertex(v.to_string()))
            };
            out.push(Arrow {
                name: a.to_string(),
                source: find(s.as_ref())?,
                target: find(t.as_ref())?,
            });
        }
        Ok(Quiver {
            vertices: names,
            arrows: out,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, v: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|n| n == v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn arrow_index(&self, a: &str) -> Option<usize> {
        self.arrows.iter().position(|x| x.name == a)
    }
}

/// A path given by its endpoints and arrows in composition order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    fn contains_word(&self, word: &[usize]) -> bool {
        word.len() <= self.arrows.len() && self.arrows.windows(word.len()).any(|w| w == word)
    }
}

pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<Path>,
    path_basis: Vec<Path>,
    cat: Arc<ModCategory>,
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("vertices", &self.quiver.vertices)
            .field("arrows", &self.quiver.arrows.len())
            .field("relations", &self.relations.len())
            .field("dim", &self.path_basis.len())
            .finish()
    }
}

/// Path length beyond which a nonzero path proves the ideal is not admissible.
pub fn admissibility_cap(q: &Quiver) -> usize {
    2 * q.arrows.len() * q.vertices.len() + 16
}

impl BoundQuiverAlgebra {
    /// Builds `kQ/I` from relations given as arrow-name sequences.
    pub fn new<S: AsRef<str>>(quiver: Quiver, relations: &[Vec<S>], field: Field, seed: u64) -> Result<Self> {
        let mut rels = Vec::new();
        for r in relations {
            if r.len() < 2 {
                return Err(Error::InvalidRelation(format!(
                    "relation of length {} (admissible relations have length at least 2)",
                    r.len()
                )));
            }
            let mut arrows = Vec::new();
            for a in r {
                let a = a.as_ref();
                arrows.push(
                    quiver
                        .arrow_index(a)
                        .ok_or_else(|| Error::InvalidRelation(format!("unknown arrow `{a}`")))?,
                );
            }
            for w in arrows.windows(2) {
                if quiver.arrows[w[0]].target != quiver.arrows[w[1]].source {
                    return Err(Error::InvalidRelation(format!(
                        "`{}` then `{}` does not compose",
                        quiver.arrows[w[0]].name, quiver.arrows[w[1]].name
                    )));
                }
            }
            rels.push(Path {
                source: quiver.arrows[arrows[0]].source,
                target: quiver.arrows[*arrows.last().expect("nonempty")].target,
                arrows,
            });
        }
        let path_basis = saturate(&quiver, &rels)?;
        let cat = make_category(&quiver, &rels, &path_basis, field, seed)?;
        Ok(BoundQuiverAlgebra {
            quiver,
            relations: rels,
            path_basis,
            cat,
        })
    }

    /// The same quiver and relations over another field or seed.
    pub fn rebuild(&self, field: Field, seed: u64) -> Result<Self> {
        let rels: Vec<Vec<String>> = self
            .relations
            .iter()
            .map(|r| r.arrows.iter().map(|&a| self.quiver.arrows[a].name.clone()).collect())
            .collect();
        BoundQuiverAlgebra::new(self.quiver.clone(), &rels, field, seed)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Path] {
        &self.relations
    }

    pub fn path_basis(&self) -> &[Path] {
        &self.path_basis
    }

    pub fn dim(&self) -> usize {
        self.path_basis.len()
    }

    pub fn field(&self) -> Field {
        self.cat.field()
    }

    /// Number of simple modules, `|Λ|`.
    pub fn rank(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn category(&self) -> &Arc<ModCategory> {
        &self.cat
    }

    pub fn vertex_index(&self, v: &str) -> Result<usize> {
        self.quiver.vertex_index(v)
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.quiver.vertices[i]
    }

    pub fn projective_rep(&self, v: &str) -> Result<Representation> {
        Ok(self.projective(self.vertex_index(v)?))
    }

    pub fn injective_rep(&self, v: &str) -> Result<Representation> {
        Ok(self.injective(self.vertex_index(v)?))
    }

    pub fn simple_rep(&self, v: &str) -> Result<Representation> {
        Ok(self.simple(self.vertex_index(v)?))
    }

    pub fn is_source_vertex(&self, v: &str) -> Result<bool> {
        let i = self.vertex_index(v)?;
        Ok(self.is_source(i))
    }

    pub fn projective(&self, v: usize) -> Representation {
        Representation::projective(&self.cat, v)
    }

    pub fn simple(&self, v: usize) -> Representation {
        Representation::simple(&self.cat, v)
    }

    pub fn is_source(&self, v: usize) -> bool {
        !self.quiver.arrows.iter().any(|a| a.target == v)
    }

    /// `I_v`: the dual of the paths ending at `v`.
    pub fn injective(&self, v: usize) -> Representation {
        let f = self.field();
        let n = self.rank();
        let mut index: HashMap<&Path, usize> = HashMap::new();
        let mut dims = vec![0; n];
        for p in self.path_basis.iter().filter(|p| p.target == v) {
            index.insert(p, dims[p.source]);
            dims[p.source] += 1;
        }
        let maps = self
            .quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                // p* ↦ q* whenever p = a·q
                for p in self.path_basis.iter().filter(|p| p.target == v && p.source == a.source) {
                    if p.arrows.first() == Some(&ai) {
                        let q = Path {
                            source: a.target,
                            target: v,
                            arrows: p.arrows[1..].to_vec(),
                        };
                        if let Some(&qi) = index.get(&q) {
                            m.set(qi, index[p], f.one());
                        }
                    }
                }
                m
            })
            .collect();
        Representation::new(&self.cat, dims, maps).expect("injective module is a representation")
    }

    /// `Λ_Λ = ⊕ P_v`, whose total dimension is `dim Λ`.
    pub fn regular_module(&self) -> Representation {
        let parts: Vec<Representation> = (0..self.rank()).map(|v| self.projective(v)).collect();
        let refs: Vec<&Representation> = parts.iter().collect();
        direct_sum(&self.cat, &refs).module
    }

    /// At most one arrow in and one arrow out at each vertex.
    pub fn is_nakayama(&self) -> bool {
        (0..self.rank()).all(|v| {
            self.quiver.arrows.iter().filter(|a| a.source == v).count() <= 1
                && self.quiver.arrows.iter().filter(|a| a.target == v).count() <= 1
        })
    }

    /// Projective-injective indecomposables, as vertices `v` with `P_v ≅ I_w`
    /// for some `w`.
    pub fn projective_injective_vertices(&self) -> Vec<usize> {
        (0..self.rank())
            .filter(|&v| {
                let p = self.projective(v);
                (0..self.rank()).any(|w| {
                    let i = self.injective(w);
                    crate::modrep::indecomposables_isomorphic(&p, &i)
                })
            })
            .collect()
    }

    /// `c[v][w] = dim (P_w)_v`, the number of nonzero paths from `w` to `v`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for p in &self.path_basis {
            c[p.target][p.source] += 1;
        }
        c
    }

    /// `⟨x, y⟩ = xᵀ C^{-T} y` for dimension vectors, computed over `Q`.
    /// `None` if the Cartan matrix is singular or the value is not integral.
    pub fn euler_pairing(&self, x: &[usize], y: &[usize]) -> Option<i64> {
        let n = self.rank();
        let c = self.cartan_matrix();
        let q = Field::Rational;
        let ct = Matrix::from_fn(q, n, n, |i, j| q.from_i64(c[j][i]));
        let e = ct.inverse()?;
        let xv = Matrix::from_fn(q, 1, n, |_, j| q.from_i64(x[j] as i64));
        let yv = Matrix::from_fn(q, n, 1, |i, _| q.from_i64(y[i] as i64));
        let v = &(&xv * &e) * &yv;
        v.get(0, 0).to_string_compact().parse().ok()
    }
}

fn saturate(q: &Quiver, rels: &[Path]) -> Result<Vec<Path>> {
    let cap = admissibility_cap(q);
    let mut basis: Vec<Path> = (0..q.vertices.len()).map(Path::trivial).collect();
    let mut frontier = basis.clone();
    let mut length = 0;
    while !frontier.is_empty() {
        length += 1;
        if length > cap {
            return Err(Error::AdmissibilityViolation { cap });
        }
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source != p.target {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                let candidate = Path {
                    source: p.source,
                    target: a.target,
                    arrows,
                };
                if !rels.iter().any(|r| candidate.contains_word(&r.arrows)) {
                    next.push(candidate);
                }
            }
        }
        basis.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(basis)
}

fn make_category(
    q: &Quiver,
    rels: &[Path],
    basis: &[Path],
    field: Field,
    seed: u64,
) -> Result<Arc<ModCategory>> {
    let n = q.vertices.len();
    let links: Vec<Link> = q
        .arrows
        .iter()
        .map(|a| Link {
            name: a.name.clone(),
            source: a.source,
            target: a.target,
            coeff_dim: 1,
        })
        .collect();
    let constraints = rels.iter().map(|r| Constraint::ZeroPath(r.arrows.clone())).collect();
    let projectives = (0..n)
        .map(|v| {
            let mut index: HashMap<&Path, usize> = HashMap::new();
            let mut dims = vec![0; n];
            for p in basis.iter().filter(|p| p.source == v) {
                index.insert(p, dims[p.target]);
                dims[p.target] += 1;
            }
            let maps = q
                .arrows
                .iter()
                .enumerate()
                .map(|(ai, a)| {
                    let mut m = Matrix::zeros(field, dims[a.target], dims[a.source]);
                    for p in basis.iter().filter(|p| p.source == v && p.target == a.source) {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        let longer = Path {
                            source: v,
                            target: a.target,
                            arrows,
                        };
                        if let Some(&j) = index.get(&longer) {
                            m.set(j, index[p], field.one());
                        }
                    }
                    m
                })
                .collect();
            ProjectiveSpec {
                dims,
                maps,
                // the trivial path comes first in the saturation order
                generator: 0,
            }
        })
        .collect();
    ModCategory::new("algebra", field, seed, q.vertices.clone(), links, constraints, projectives)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::is_isomorphic;

    fn lambda0(field: Field) -> BoundQuiverAlgebra {
        let q = Quiver::new(&["2", "3", "4"], &[("a", "2", "3"), ("b", "3", "4")]).unwrap();
        BoundQuiverAlgebra::new(q, &[vec!["a", "b"]], field, 0).unwrap()
    }

    fn c3(field: Field) -> BoundQuiverAlgebra {
        let q = Quiver::new(&["1", "2", "3"], &[("x", "1", "2"), ("y", "2", "3"), ("z", "3", "1")]).unwrap();
        BoundQuiverAlgebra::new(q, &[vec!["x", "y"], vec!["y", "z"], vec!["z", "x"]], field, 0).unwrap()
    }

    #[test]
    fn path_basis_sizes() {
        assert_eq!(lambda0(Field::Prime(2)).dim(), 5);
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a2 = BoundQuiverAlgebra::new::<&str>(q, &[], Field::Prime(2), 0).unwrap();
        assert_eq!(a2.dim(), 3);
        assert_eq!(c3(Field::Prime(2)).dim(), 6);
    }

    #[test]
    fn unbounded_cycle_is_not_admissible() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let err = BoundQuiverAlgebra::new::<&str>(q, &[], Field::Prime(2), 0).unwrap_err();
        assert!(matches!(err, Error::AdmissibilityViolation { .. }));
    }

    #[test]
    fn relation_checks() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        assert!(matches!(
            BoundQuiverAlgebra::new(q.clone(), &[vec!["a", "b"]], Field::Prime(2), 0),
            Err(Error::InvalidRelation(_))
        ));
        assert!(matches!(
            BoundQuiverAlgebra::new(q, &[vec!["a"]], Field::Prime(2), 0),
            Err(Error::InvalidRelation(_))
        ));
        assert!(matches!(
            Quiver::new(&["1"], &[("a", "1", "9")]),
            Err(Error::UnknownVertex(_))
        ));
        assert!(matches!(Quiver::new(&["1", "1"], &[]), Err(Error::MalformedId(_))));
    }

    #[test]
    fn lambda0_modules() {
        let a = lambda0(Field::Prime(101));
        assert_eq!(a.projective_rep("2").unwrap().dims(), &[1, 1, 0]);
        assert_eq!(a.projective_rep("4").unwrap().dims(), &[0, 0, 1]);
        assert_eq!(a.injective_rep("2").unwrap().dims(), &[1, 0, 0]);
        assert_eq!(a.injective_rep("3").unwrap().dims(), &[1, 1, 0]);
        assert_eq!(a.injective_rep("4").unwrap().dims(), &[0, 1, 1]);
        assert!(is_isomorphic(&a.injective_rep("3").unwrap(), &a.projective_rep("2").unwrap()).unwrap());
        assert!(is_isomorphic(&a.injective_rep("4").unwrap(), &a.projective_rep("3").unwrap()).unwrap());
        assert_eq!(a.simple_rep("3").unwrap().dims(), &[0, 1, 0]);
        assert_eq!(a.regular_module().dims(), &[1, 2, 2]);
        assert!(a.projective_rep("9").is_err());
    }

    #[test]
    fn source_vertices_have_injective_simples() {
        for alg in [lambda0(Field::Prime(3)), c3(Field::Prime(3))] {
            for v in 0..alg.rank() {
                let iso = is_isomorphic(&alg.simple(v), &alg.injective(v)).unwrap();
                assert_eq!(alg.is_source(v), iso);
            }
        }
        assert!(lambda0(Field::Rational).is_source_vertex("2").unwrap());
        assert!(!lambda0(Field::Rational).is_source_vertex("3").unwrap());
        assert!(!c3(Field::Rational).is_source_vertex("1").unwrap());
    }

    #[test]
    fn projective_dims_count_paths() {
        let a = c3(Field::Prime(5));
        let total: usize = (0..a.rank()).map(|v| a.projective(v).total_dim()).sum();
        assert_eq!(total, a.dim());
        assert_eq!(a.projective_injective_vertices(), vec![0, 1, 2]);
        assert_eq!(lambda0(Field::Prime(5)).projective_injective_vertices(), vec![0, 1]);
    }
}
