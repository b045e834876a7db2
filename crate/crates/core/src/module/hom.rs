use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::morphism::Morphism;
use super::repr::{Module, ModuleId};
use crate::error::Result;
use crate::linalg::{Matrix, Scalar, Subspace, Vector};

/// A basis of `Hom(source, target)`. Basis element `k` is the unique intertwiner
/// whose flattened entries equal `1` at free coordinate `k` and `0` at the others.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Module,
    target: Module,
    basis: Vec<Morphism>,
    free: Vec<usize>,
}

impl HomSpace {
    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn basis(&self) -> &[Morphism] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an intertwiner in the basis.
    pub fn coordinates(&self, f: &Morphism) -> Vector {
        let v = f.to_vector();
        self.free.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Morphism {
        let fld = self.source.field();
        let mut acc = Morphism::zero(&self.source, &self.target);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !fld.is_zero(c) {
                acc = acc.add(&b.scale(c)).expect("same hom space");
            }
        }
        acc
    }

    /// The span of the basis inside the flattened morphism space.
    pub fn ambient_dim(&self) -> usize {
        self.source.dims().iter().zip(self.target.dims()).map(|(a, b)| a * b).sum()
    }

    pub fn as_subspace(&self) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(Morphism::to_vector).collect();
        Subspace::span(self.source.field(), self.ambient_dim(), &vs)
    }
}

/// Solves the intertwiner equations `f_t M_a = N_a f_s` as one linear system.
pub fn hom_basis(m: &Module, n: &Module) -> Result<HomSpace> {
    m.ensure_same_algebra(n)?;
    let fld = m.field();
    let alg = m.algebra();
    let nv = alg.vertex_count();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim_at(v) * m.dim_at(v);
    }
    let unknowns = offset[nv];
    let idx = |v: usize, r: usize, c: usize| offset[v] + r * m.dim_at(v) + c;
    let mut rows: Vec<Vector> = Vec::new();
    for (ai, a) in alg.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = m.action(ai);
        let na = n.action(ai);
        for r in 0..n.dim_at(t) {
            for c in 0..m.dim_at(s) {
                let mut row = vec![fld.zero(); unknowns];
                for k in 0..m.dim_at(t) {
                    let i = idx(t, r, k);
                    row[i] = fld.add(&row[i], ma.get(k, c));
                }
                for k in 0..n.dim_at(s) {
                    let i = idx(s, k, c);
                    row[i] = fld.sub(&row[i], na.get(r, k));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_row_vectors(fld, unknowns, &rows);
    let ech = system.rref();
    let mut is_pivot = vec![false; unknowns];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..unknowns).filter(|&c| !is_pivot[c]).collect();
    let basis = system
        .kernel_basis()
        .iter()
        .map(|v| Morphism::from_vector(m, n, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomSpace { source: m.clone(), target: n.clone(), basis, free })
}

/// Memo table of hom spaces keyed by module identity. Concurrent population is
/// idempotent: racing writers compute identical values.
#[derive(Debug, Default)]
pub struct HomCache {
    table: RwLock<HashMap<(ModuleId, ModuleId), Arc<HomSpace>>>,
}

impl HomCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, m: &Module, n: &Module) -> Result<Arc<HomSpace>> {
        let key = (m.id(), n.id());
        if let Some(h) = self.table.read().expect("hom cache poisoned").get(&key) {
            return Ok(h.clone());
        }
        let h = Arc::new(hom_basis(m, n)?);
        let mut table = self.table.write().expect("hom cache poisoned");
        Ok(table.entry(key).or_insert(h).clone())
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("hom cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
