use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar, Vector};

/// Content hash of a module's dimension vector and arrow matrices. Names do not
/// participate, so isomorphic-but-unequal modules have different identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleId(pub u64);

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:016x}", self.0)
    }
}

#[derive(Debug)]
struct ModuleData {
    algebra: Arc<Algebra>,
    dims: Vec<usize>,
    actions: Vec<Matrix>,
    name: Option<String>,
    id: ModuleId,
}

/// A finite-dimensional representation of the quiver satisfying the relations.
/// Cheap to clone.
#[derive(Clone, Debug)]
pub struct Module(Arc<ModuleData>);

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.0.id == other.0.id && self.0.dims == other.0.dims && self.0.actions == other.0.actions
    }
}

impl Eq for Module {}

impl Module {
    /// Validates shapes and relations.
    pub fn new(algebra: Arc<Algebra>, dims: Vec<usize>, actions: Vec<Matrix>) -> Result<Self> {
        if dims.len() != algebra.vertex_count() {
            return Err(Error::InvalidModule(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                algebra.vertex_count()
            )));
        }
        if actions.len() != algebra.arrows().len() {
            return Err(Error::InvalidModule(format!(
                "{} matrices for {} arrows",
                actions.len(),
                algebra.arrows().len()
            )));
        }
        for (a, m) in algebra.arrows().iter().zip(&actions) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] || m.field() != algebra.field() {
                return Err(Error::InvalidModule(format!(
                    "arrow {} needs a {}x{} matrix over {}, got {}x{}",
                    a.label,
                    dims[a.target],
                    dims[a.source],
                    algebra.field(),
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let module = Self::assemble(algebra, dims, actions);
        for r in module.algebra().relations() {
            let (u, w) = {
                let p = &r.terms[0].1;
                (p.start, module.algebra().end(p))
            };
            let f = module.field();
            let mut total = Matrix::zeros(f, module.dim_at(w), module.dim_at(u));
            for (c, p) in &r.terms {
                total = total.add(&module.path_matrix(p).scale(c))?;
            }
            if !total.is_zero() {
                let text: Vec<String> = r.terms.iter().map(|(c, p)| format!("{c}*{}", module.algebra().path_label(p))).collect();
                return Err(Error::InvalidModule(format!("relation {} does not vanish", text.join(" + "))));
            }
        }
        Ok(module)
    }

    /// Builds without checking relations; callers construct modules that satisfy them.
    pub(crate) fn assemble(algebra: Arc<Algebra>, dims: Vec<usize>, actions: Vec<Matrix>) -> Self {
        let mut h = DefaultHasher::new();
        algebra.field().hash(&mut h);
        dims.hash(&mut h);
        actions.hash(&mut h);
        let id = ModuleId(h.finish());
        Module(Arc::new(ModuleData { algebra, dims, actions, name: None, id }))
    }

    pub fn zero(algebra: Arc<Algebra>) -> Self {
        let f = algebra.field();
        let actions = algebra.arrows().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        let dims = vec![0; algebra.vertex_count()];
        Self::assemble(algebra, dims, actions)
    }

    /// The simple module at vertex `v`.
    pub fn simple(algebra: Arc<Algebra>, v: usize) -> Self {
        let f = algebra.field();
        let dims: Vec<usize> = (0..algebra.vertex_count()).map(|i| usize::from(i == v)).collect();
        let actions = algebra.arrows().iter().map(|a| Matrix::zeros(f, dims[a.target], dims[a.source])).collect();
        Self::assemble(algebra, dims, actions)
    }

    /// The indecomposable projective at `i`: classes of paths starting at `i`,
    /// an arrow acting by right multiplication.
    pub fn projective(algebra: Arc<Algebra>, i: usize) -> Self {
        let f = algebra.field();
        let n = algebra.vertex_count();
        let at: Vec<Vec<(usize, Path)>> = (0..n)
            .map(|v| algebra.basis_paths_between(i, v).into_iter().map(|(k, p)| (k, p.clone())).collect())
            .collect();
        let dims: Vec<usize> = at.iter().map(Vec::len).collect();
        let actions = algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                let step = Path { start: a.source, arrows: vec![ai] };
                for (col, (_, p)) in at[a.source].iter().enumerate() {
                    let nf = algebra.multiply_paths(p, &step);
                    for (row, (k, _)) in at[a.target].iter().enumerate() {
                        m.set(row, col, nf[*k].clone());
                    }
                }
                m
            })
            .collect();
        Self::assemble(algebra, dims, actions)
    }

    /// The indecomposable injective at `i`: the dual of classes of paths ending at `i`.
    pub fn injective(algebra: Arc<Algebra>, i: usize) -> Self {
        let f = algebra.field();
        let n = algebra.vertex_count();
        let at: Vec<Vec<(usize, Path)>> = (0..n)
            .map(|v| algebra.basis_paths_between(v, i).into_iter().map(|(k, p)| (k, p.clone())).collect())
            .collect();
        let dims: Vec<usize> = at.iter().map(Vec::len).collect();
        let actions = algebra
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                let step = Path { start: a.source, arrows: vec![ai] };
                for (row, (_, q_out)) in at[a.target].iter().enumerate() {
                    let nf = algebra.multiply_paths(&step, q_out);
                    for (col, (k, _)) in at[a.source].iter().enumerate() {
                        m.set(row, col, nf[*k].clone());
                    }
                }
                m
            })
            .collect();
        Self::assemble(algebra, dims, actions)
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        let d = &self.0;
        Module(Arc::new(ModuleData {
            algebra: d.algebra.clone(),
            dims: d.dims.clone(),
            actions: d.actions.clone(),
            name: Some(name.into()),
            id: d.id,
        }))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.0.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.0.algebra.field()
    }

    pub fn id(&self) -> ModuleId {
        self.0.id
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    /// Name if known, otherwise a dimension-vector description.
    pub fn label(&self) -> String {
        match &self.0.name {
            Some(n) => n.clone(),
            None => format!("M{:?}#{}", self.0.dims, &self.0.id.to_string()[..6]),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.0.actions
    }

    pub fn action(&self, arrow: usize) -> &Matrix {
        &self.0.actions[arrow]
    }

    /// Matrix of a path acting from the start vertex space to the end vertex space.
    pub fn path_matrix(&self, p: &Path) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dim_at(p.start));
        for &a in &p.arrows {
            m = self.action(a).mul(&m).expect("arrow shapes are validated");
        }
        m
    }

    pub fn act(&self, p: &Path, v: &[Scalar]) -> Vector {
        self.path_matrix(p).mul_vec(v).expect("vector sits at the path start")
    }

    pub fn same_algebra(&self, other: &Module) -> bool {
        Arc::ptr_eq(self.algebra(), other.algebra()) || **self.algebra() == **other.algebra()
    }

    pub(crate) fn ensure_same_algebra(&self, other: &Module) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(format!("{} and {}", self.label(), other.label())))
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} dims {:?}", self.label(), self.dims())?;
        for (a, m) in self.algebra().arrows().iter().zip(self.actions()) {
            write!(f, " {}={}", a.label, m)?;
        }
        Ok(())
    }
}
