use std::fmt;

use super::repr::Module;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace, Vector};

/// A module homomorphism given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    source: Module,
    target: Module,
    maps: Vec<Matrix>,
}

/// A subobject or quotient presented by its structure map.
#[derive(Clone, Debug)]
pub struct Embedded {
    pub object: Module,
    pub map: Morphism,
}

impl Morphism {
    /// Checks shapes and the intertwining condition.
    pub fn new(source: Module, target: Module, maps: Vec<Matrix>) -> Result<Self> {
        source.ensure_same_algebra(&target)?;
        let m = Morphism { source, target, maps };
        if m.maps.len() != m.source.dims().len() {
            return Err(Error::InvalidMorphism(format!("{} vertex maps for {} vertices", m.maps.len(), m.source.dims().len())));
        }
        for (v, f) in m.maps.iter().enumerate() {
            if f.rows() != m.target.dim_at(v) || f.cols() != m.source.dim_at(v) {
                return Err(Error::InvalidMorphism(format!(
                    "vertex {} needs a {}x{} matrix, got {}x{}",
                    m.source.algebra().vertices()[v],
                    m.target.dim_at(v),
                    m.source.dim_at(v),
                    f.rows(),
                    f.cols()
                )));
            }
        }
        for (ai, a) in m.source.algebra().arrows().iter().enumerate() {
            let lhs = m.maps[a.target].mul(m.source.action(ai))?;
            let rhs = m.target.action(ai).mul(&m.maps[a.source])?;
            if lhs != rhs {
                return Err(Error::InvalidMorphism(format!("does not commute with arrow {}", a.label)));
            }
        }
        Ok(m)
    }

    pub(crate) fn assemble(source: Module, target: Module, maps: Vec<Matrix>) -> Self {
        Morphism { source, target, maps }
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        let f = source.field();
        let maps = (0..source.dims().len()).map(|v| Matrix::zeros(f, target.dim_at(v), source.dim_at(v))).collect();
        Morphism { source: source.clone(), target: target.clone(), maps }
    }

    pub fn identity(m: &Module) -> Self {
        let f = m.field();
        let maps = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        Morphism { source: m.clone(), target: m.clone(), maps }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn field(&self) -> FieldSpec {
        self.source.field()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Morphism) -> Result<Morphism> {
        compose(self, f)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Morphism) -> Result<Morphism> {
        compose(g, self)
    }

    fn same_shape(&self, other: &Morphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ComposabilityMismatch(format!(
                "{}->{} vs {}->{}",
                self.source.label(),
                self.target.label(),
                other.source.label(),
                other.target.label()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        self.same_shape(other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Morphism { maps, ..self.clone() })
    }

    pub fn sub(&self, other: &Morphism) -> Result<Morphism> {
        self.same_shape(other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
        Ok(Morphism { maps, ..self.clone() })
    }

    pub fn neg(&self) -> Morphism {
        Morphism { maps: self.maps.iter().map(Matrix::neg).collect(), ..self.clone() }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism { maps: self.maps.iter().map(|m| m.scale(c)).collect(), ..self.clone() }
    }

    /// Same matrices, reinterpreted between equal modules (names may differ).
    pub fn retarget(&self, source: &Module, target: &Module) -> Result<Morphism> {
        if source != &self.source || target != &self.target {
            return Err(Error::ComposabilityMismatch("retarget between unequal modules".into()));
        }
        Ok(Morphism { source: source.clone(), target: target.clone(), maps: self.maps.clone() })
    }

    /// Entries flattened vertex by vertex, row-major within each vertex.
    pub fn to_vector(&self) -> Vector {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    pub fn from_vector(source: &Module, target: &Module, v: &[Scalar]) -> Result<Morphism> {
        let f = source.field();
        let mut maps = Vec::with_capacity(source.dims().len());
        let mut offset = 0;
        for (s, t) in source.dims().iter().zip(target.dims()) {
            let n = s * t;
            if offset + n > v.len() {
                return Err(Error::DimensionMismatch("morphism vector too short".into()));
            }
            maps.push(Matrix::from_scalars(f, *t, *s, v[offset..offset + n].to_vec())?);
            offset += n;
        }
        if offset != v.len() {
            return Err(Error::DimensionMismatch("morphism vector too long".into()));
        }
        Ok(Morphism { source: source.clone(), target: target.clone(), maps })
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<Morphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(Morphism { source: self.target.clone(), target: self.source.clone(), maps })
    }

    /// Per-vertex kernel subspaces of the source.
    pub fn kernel_spaces(&self) -> Vec<Subspace> {
        self.maps
            .iter()
            .enumerate()
            .map(|(v, m)| Subspace::span(self.field(), self.source.dim_at(v), &m.kernel_basis()))
            .collect()
    }

    /// Per-vertex image subspaces of the target.
    pub fn image_spaces(&self) -> Vec<Subspace> {
        self.maps
            .iter()
            .enumerate()
            .map(|(v, m)| Subspace::span(self.field(), self.target.dim_at(v), &m.columns()))
            .collect()
    }

    pub fn kernel(&self) -> Embedded {
        submodule(&self.source, &self.kernel_spaces())
    }

    pub fn cokernel(&self) -> Embedded {
        quotient(&self.target, &self.image_spaces())
    }

    pub fn image(&self) -> Embedded {
        submodule(&self.target, &self.image_spaces())
    }

    /// Factors `self` through an injective map `sub.map` whose image contains it.
    pub fn corestrict(&self, sub: &Embedded) -> Result<Morphism> {
        let f = self.field();
        let mut maps = Vec::new();
        for v in 0..self.source.dims().len() {
            let inc = sub.map.at(v);
            let mut m = Matrix::zeros(f, sub.object.dim_at(v), self.source.dim_at(v));
            for j in 0..self.source.dim_at(v) {
                let sol = crate::linalg::solve_linear(inc, &self.at(v).column(j))?;
                let x = sol.particular.ok_or_else(|| Error::LiftUnsolvable("image not contained in submodule".into()))?;
                for (i, c) in x.into_iter().enumerate() {
                    m.set(i, j, c);
                }
            }
            maps.push(m);
        }
        Ok(Morphism { source: self.source.clone(), target: sub.object.clone(), maps })
    }
}

/// `g ∘ f`.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    if f.target != g.source {
        return Err(Error::ComposabilityMismatch(format!(
            "cannot compose {}->{} after {}->{}",
            g.source.label(),
            g.target.label(),
            f.source.label(),
            f.target.label()
        )));
    }
    let maps = g.maps.iter().zip(&f.maps).map(|(b, a)| b.mul(a)).collect::<Result<_>>()?;
    Ok(Morphism { source: f.source.clone(), target: g.target.clone(), maps })
}

/// Submodule spanned by per-vertex subspaces closed under the arrows, with its inclusion.
/// Basis at each vertex: the echelon basis of the subspace.
pub fn submodule(m: &Module, spaces: &[Subspace]) -> Embedded {
    let f = m.field();
    let alg = m.algebra().clone();
    let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
    let incl: Vec<Matrix> = spaces
        .iter()
        .map(|s| Matrix::from_columns(f, s.ambient(), &s.basis_vectors()))
        .collect();
    let actions = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let image = m.action(ai).mul(&incl[a.source]).expect("shapes");
            // Coordinates in an echelon basis are the entries at its pivots.
            let piv = spaces[a.target].pivots();
            let mut out = Matrix::zeros(f, dims[a.target], dims[a.source]);
            for j in 0..dims[a.source] {
                debug_assert!(spaces[a.target].contains(&image.column(j)), "subspaces must be arrow-closed");
                for (i, &p) in piv.iter().enumerate() {
                    out.set(i, j, image.get(p, j).clone());
                }
            }
            out
        })
        .collect();
    let object = Module::assemble(alg, dims, actions);
    let map = Morphism::assemble(object.clone(), m.clone(), incl);
    Embedded { object, map }
}

/// Quotient by per-vertex arrow-closed subspaces, with its projection.
/// Coordinates of the quotient are the complement (non-pivot) coordinates.
pub fn quotient(m: &Module, spaces: &[Subspace]) -> Embedded {
    let f = m.field();
    let alg = m.algebra().clone();
    let dims: Vec<usize> = spaces.iter().map(Subspace::codim).collect();
    let proj: Vec<Matrix> = spaces
        .iter()
        .map(|s| {
            let cols: Vec<Vector> = (0..s.ambient()).map(|j| s.quotient_coords(&unit(f, s.ambient(), j))).collect();
            Matrix::from_columns(f, s.codim(), &cols)
        })
        .collect();
    let sections: Vec<Matrix> = spaces.iter().map(|s| section(f, s)).collect();
    let actions = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            proj[a.target]
                .mul(&m.action(ai).mul(&sections[a.source]).expect("shapes"))
                .expect("shapes")
        })
        .collect();
    let object = Module::assemble(alg, dims, actions);
    let map = Morphism::assemble(m.clone(), object.clone(), proj);
    Embedded { object, map }
}

/// Linear section of the projection onto the complement coordinates.
pub(crate) fn section(f: FieldSpec, s: &Subspace) -> Matrix {
    let cols: Vec<Vector> = s.complement_indices().into_iter().map(|c| unit(f, s.ambient(), c)).collect();
    Matrix::from_columns(f, s.ambient(), &cols)
}

pub(crate) fn unit(f: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub object: Module,
    pub injections: Vec<Morphism>,
    pub projections: Vec<Morphism>,
}

pub fn direct_sum(alg: &std::sync::Arc<crate::module::Algebra>, summands: &[Module]) -> Result<DirectSum> {
    let f = alg.field();
    for s in summands {
        if !(std::sync::Arc::ptr_eq(s.algebra(), alg) || **s.algebra() == **alg) {
            return Err(Error::AlgebraMismatch(s.label()));
        }
    }
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| summands.iter().map(|s| s.dim_at(v)).sum()).collect();
    let actions = (0..alg.arrows().len())
        .map(|ai| {
            let blocks: Vec<&Matrix> = summands.iter().map(|s| s.action(ai)).collect();
            Matrix::block_diag(f, &blocks)
        })
        .collect();
    let object = Module::assemble(alg.clone(), dims.clone(), actions);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offsets = vec![0usize; n];
    for s in summands {
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        for v in 0..n {
            let mut i = Matrix::zeros(f, dims[v], s.dim_at(v));
            for k in 0..s.dim_at(v) {
                i.set(offsets[v] + k, k, f.one());
            }
            proj.push(i.transpose());
            inj.push(i);
            offsets[v] += s.dim_at(v);
        }
        injections.push(Morphism::assemble(s.clone(), object.clone(), inj));
        projections.push(Morphism::assemble(object.clone(), s.clone(), proj));
    }
    Ok(DirectSum { object, injections, projections })
}

/// `(f_1, ..., f_k)ᵗ : M → ⊕ N_i` into an already-built sum.
pub fn column_map(source: &Module, sum: &DirectSum, parts: &[Morphism]) -> Result<Morphism> {
    let mut acc = Morphism::zero(source, &sum.object);
    for (p, inj) in parts.iter().zip(&sum.injections) {
        acc = acc.add(&compose(inj, p)?)?;
    }
    Ok(acc)
}

/// `(f_1, ..., f_k) : ⊕ M_i → N` out of an already-built sum.
pub fn row_map(sum: &DirectSum, target: &Module, parts: &[Morphism]) -> Result<Morphism> {
    let mut acc = Morphism::zero(&sum.object, target);
    for (p, proj) in parts.iter().zip(&sum.projections) {
        acc = acc.add(&compose(p, proj)?)?;
    }
    Ok(acc)
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}:", self.source.label(), self.target.label())?;
        for (v, m) in self.maps.iter().enumerate() {
            write!(f, " {}={}", self.source.algebra().vertices()[v], m)?;
        }
        Ok(())
    }
}
