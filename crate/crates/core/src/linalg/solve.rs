use super::field::{FieldSpec, Scalar};
use super::matrix::{kernel_from_echelon, Matrix, Vector};
use crate::error::{Error, Result};

/// Solution set of an affine system: `particular + span(kernel_basis)`, or empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Option<Vector>,
    pub kernel_basis: Vec<Vector>,
}

impl AffineSolution {
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

/// One constraint `L x - c ∈ V` of an affine membership problem.
#[derive(Clone, Debug)]
pub struct AffineConstraint {
    pub linear: Matrix,
    pub offset: Vector,
    /// Spanning vectors of `V`, each of length `linear.rows()`; need not be independent.
    pub subspace: Vec<Vector>,
}

impl AffineConstraint {
    /// `L x = c` exactly.
    pub fn equation(linear: Matrix, offset: Vector) -> Self {
        AffineConstraint { linear, offset, subspace: Vec::new() }
    }
}

/// Solves `M x = b`.
pub fn solve_linear(m: &Matrix, b: &[Scalar]) -> Result<AffineSolution> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} equations",
            b.len(),
            m.rows()
        )));
    }
    let f = m.field();
    let rhs = Matrix::from_columns(f, m.rows(), &[b.to_vec()]);
    let aug = Matrix::hstack(f, m.rows(), &[m, &rhs])?;
    let ech = aug.rref();
    let n = m.cols();
    if ech.pivots.last() == Some(&n) {
        let mut trimmed = ech.clone();
        trimmed.pivots.pop();
        return Ok(AffineSolution {
            particular: None,
            kernel_basis: kernel_from_echelon(&trimmed, n, f),
        });
    }
    let mut particular = vec![f.zero(); n];
    for (r, &p) in ech.pivots.iter().enumerate() {
        particular[p] = ech.reduced.get(r, n).clone();
    }
    Ok(AffineSolution { particular: Some(particular), kernel_basis: kernel_from_echelon(&ech, n, f) })
}

/// Finds `x` (of length `unknowns`) with `L_i x - c_i ∈ V_i` for every constraint.
///
/// Each subspace contributes auxiliary unknowns `y_i`, giving the stacked system
/// `L_i x - B_i y_i = c_i`; the answer is its projection onto `x`.
pub fn solve_affine_membership(
    field: FieldSpec,
    unknowns: usize,
    constraints: &[AffineConstraint],
) -> Result<AffineSolution> {
    for c in constraints {
        if c.linear.cols() != unknowns || c.offset.len() != c.linear.rows() {
            return Err(Error::DimensionMismatch(format!(
                "constraint {}x{} with offset {} for {unknowns} unknowns",
                c.linear.rows(),
                c.linear.cols(),
                c.offset.len()
            )));
        }
        if c.subspace.iter().any(|v| v.len() != c.linear.rows()) {
            return Err(Error::DimensionMismatch("subspace vector length".into()));
        }
    }
    let aux: usize = constraints.iter().map(|c| c.subspace.len()).sum();
    let rows: usize = constraints.iter().map(|c| c.linear.rows()).sum();
    let total = unknowns + aux;
    let mut system = Matrix::zeros(field, rows, total);
    let mut rhs = Vec::with_capacity(rows);
    let (mut r0, mut a0) = (0, unknowns);
    for c in constraints {
        for i in 0..c.linear.rows() {
            for j in 0..unknowns {
                system.set(r0 + i, j, c.linear.get(i, j).clone());
            }
            for (k, v) in c.subspace.iter().enumerate() {
                system.set(r0 + i, a0 + k, field.neg(&v[i]));
            }
        }
        rhs.extend(c.offset.iter().cloned());
        r0 += c.linear.rows();
        a0 += c.subspace.len();
    }
    let full = solve_linear(&system, &rhs)?;
    let project = |v: &Vector| v[..unknowns].to_vec();
    let projected: Vec<Vector> = full.kernel_basis.iter().map(project).collect();
    let kernel = Subspace::span(field, unknowns, &projected);
    // Reducing modulo the homogeneous solutions makes the witness canonical.
    let particular = full.particular.as_ref().map(|p| kernel.reduce(&project(p)));
    Ok(AffineSolution { particular, kernel_basis: kernel.basis_vectors() })
}

/// A subspace of `field^ambient`, stored as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: FieldSpec, ambient: usize, vectors: &[Vector]) -> Self {
        let m = Matrix::from_row_vectors(field, ambient, vectors);
        let ech = m.rref();
        let k = ech.pivots.len();
        Subspace { field, ambient, basis: ech.reduced.row_block(0, k), pivots: ech.pivots }
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Self::span(field, ambient, &[])
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Self::span(field, ambient, &Matrix::identity(field, ambient).columns())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient - self.dim()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.basis.rows()).map(|i| self.basis.row(i).to_vec()).collect()
    }

    /// Coordinates outside the pivot set; they index a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Canonical coset representative: the unique `v - u` (u in the subspace)
    /// vanishing on every pivot coordinate.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient, "vector length");
        let f = self.field;
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (j, b) in self.basis.row(r).iter().enumerate() {
                out[j] = f.sub(&out[j], &f.mul(&c, b));
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates of the coset of `v` in the quotient, read on the complement.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vector {
        let r = self.reduce(v);
        self.complement_indices().into_iter().map(|c| r[c].clone()).collect()
    }

    pub fn is_within(&self, other: &Subspace) -> bool {
        self.basis_vectors().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.field, self.ambient, &vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    fn v(xs: &[u32]) -> Vector {
        xs.iter().map(|&x| Scalar::Mod(x)).collect()
    }

    #[test]
    fn solve_identity() {
        let s = solve_linear(&Matrix::identity(gf2(), 2), &v(&[1, 0])).unwrap();
        assert_eq!(s.particular, Some(v(&[1, 0])));
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn solve_zero_map_inconsistent() {
        let m = Matrix::from_rows(gf2(), &[vec![0]]).unwrap();
        let s = solve_linear(&m, &v(&[1])).unwrap();
        assert_eq!(s.particular, None);
        assert_eq!(s.kernel_basis, vec![v(&[1])]);
    }

    #[test]
    fn solve_row_of_ones() {
        let m = Matrix::from_rows(gf2(), &[vec![1, 1]]).unwrap();
        let s = solve_linear(&m, &v(&[0])).unwrap();
        assert_eq!(s.particular, Some(v(&[0, 0])));
        assert_eq!(s.kernel_basis, vec![v(&[1, 1])]);
    }

    #[test]
    fn solve_rejects_bad_rhs() {
        let m = Matrix::identity(gf2(), 2);
        assert!(solve_linear(&m, &v(&[1])).is_err());
    }

    #[test]
    fn membership_vacuous_and_forced() {
        let id = Matrix::identity(gf2(), 2);
        let whole = AffineConstraint {
            linear: id.clone(),
            offset: v(&[1, 1]),
            subspace: id.columns(),
        };
        let s = solve_affine_membership(gf2(), 2, &[whole]).unwrap();
        assert_eq!(s.particular, Some(v(&[0, 0])));
        assert_eq!(s.kernel_basis.len(), 2);

        let forced = AffineConstraint::equation(id, v(&[0, 1]));
        let s = solve_affine_membership(gf2(), 2, &[forced]).unwrap();
        assert_eq!(s.particular, Some(v(&[0, 1])));
        assert!(s.kernel_basis.is_empty());
    }

    #[test]
    fn subspace_reduction() {
        let s = Subspace::span(gf2(), 3, &[v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 0, 1])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[1, 0, 1])));
        assert!(!s.contains(&v(&[1, 0, 0])));
        assert_eq!(s.complement_indices(), vec![2]);
        assert_eq!(s.quotient_coords(&v(&[1, 0, 0])), v(&[1]));
    }
}
