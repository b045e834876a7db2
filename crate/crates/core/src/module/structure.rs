use super::hom::hom_basis;
use super::morphism::{column_map, compose, direct_sum, quotient, row_map, submodule, Embedded, Morphism};
use super::repr::Module;
use crate::error::Result;
use crate::linalg::{solve_linear, Matrix, Subspace, Vector};

/// Sum of the images of all arrow actions.
pub fn radical(m: &Module) -> Embedded {
    submodule(m, &radical_spaces(m))
}

fn radical_spaces(m: &Module) -> Vec<Subspace> {
    let f = m.field();
    let alg = m.algebra();
    (0..alg.vertex_count())
        .map(|v| {
            let cols: Vec<Vector> = alg
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.target == v)
                .flat_map(|(ai, _)| m.action(ai).columns())
                .collect();
            Subspace::span(f, m.dim_at(v), &cols)
        })
        .collect()
}

/// Joint kernel of all arrow actions.
pub fn socle(m: &Module) -> Embedded {
    submodule(m, &socle_spaces(m))
}

fn socle_spaces(m: &Module) -> Vec<Subspace> {
    let f = m.field();
    let alg = m.algebra();
    (0..alg.vertex_count())
        .map(|v| {
            let outgoing: Vec<&Matrix> = alg
                .arrows()
                .iter()
                .enumerate()
                .filter(|(_, a)| a.source == v)
                .map(|(ai, _)| m.action(ai))
                .collect();
            let stacked = Matrix::vstack(f, m.dim_at(v), &outgoing).expect("shared column count");
            Subspace::span(f, m.dim_at(v), &stacked.kernel_basis())
        })
        .collect()
}

/// `M / rad M` with the quotient map.
pub fn top(m: &Module) -> Embedded {
    quotient(m, &radical_spaces(m))
}

/// `⊕ P(i)^{t_i} ↠ M` where `t_i` is the multiplicity of the simple at `i` in the top.
pub fn projective_cover(m: &Module) -> Morphism {
    let f = m.field();
    let alg = m.algebra().clone();
    let rad = radical_spaces(m);
    let mut summands = Vec::new();
    let mut parts = Vec::new();
    for (i, space) in rad.iter().enumerate() {
        let p = Module::projective(alg.clone(), i).with_name(format!("P({})", alg.vertices()[i]));
        for c in space.complement_indices() {
            let mut gen = vec![f.zero(); m.dim_at(i)];
            gen[c] = f.one();
            let maps = (0..alg.vertex_count())
                .map(|v| {
                    let paths = alg.basis_paths_between(i, v);
                    let cols: Vec<Vector> = paths.iter().map(|(_, path)| m.act(path, &gen)).collect();
                    Matrix::from_columns(f, m.dim_at(v), &cols)
                })
                .collect();
            parts.push(Morphism::assemble(p.clone(), m.clone(), maps));
            summands.push(p.clone());
        }
    }
    let sum = direct_sum(&alg, &summands).expect("same algebra");
    let object = named_sum(&sum.object, &summands);
    let map = row_map(&sum, m, &parts).expect("shapes");
    Morphism::assemble(object, m.clone(), map.maps().to_vec())
}

/// `M ↪ ⊕ I(i)^{s_i}` where `s_i` is the multiplicity of the simple at `i` in the socle.
pub fn injective_envelope(m: &Module) -> Morphism {
    let f = m.field();
    let alg = m.algebra().clone();
    let soc = socle_spaces(m);
    let mut summands = Vec::new();
    let mut parts = Vec::new();
    for (i, space) in soc.iter().enumerate() {
        let inj = Module::injective(alg.clone(), i).with_name(format!("I({})", alg.vertices()[i]));
        // Coordinate functionals at the echelon pivots restrict to a dual basis of the socle.
        for &p in space.pivots() {
            let maps = (0..alg.vertex_count())
                .map(|v| {
                    let paths = alg.basis_paths_between(v, i);
                    let rows: Vec<Vector> =
                        paths.iter().map(|(_, q)| m.path_matrix(q).row(p).to_vec()).collect();
                    Matrix::from_row_vectors(f, m.dim_at(v), &rows)
                })
                .collect();
            parts.push(Morphism::assemble(m.clone(), inj.clone(), maps));
            summands.push(inj.clone());
        }
    }
    let sum = direct_sum(&alg, &summands).expect("same algebra");
    let object = named_sum(&sum.object, &summands);
    let map = column_map(m, &sum, &parts).expect("shapes");
    Morphism::assemble(m.clone(), object, map.maps().to_vec())
}

fn named_sum(object: &Module, summands: &[Module]) -> Module {
    if summands.is_empty() {
        return object.with_name("0");
    }
    let names: Vec<String> = summands.iter().map(Module::label).collect();
    object.with_name(names.join("+"))
}

/// Section `g` with `f ∘ g = id`, when one exists.
pub fn is_split_epi(f: &Morphism) -> Result<Option<Morphism>> {
    let hom = hom_basis(f.target(), f.source())?;
    solve_in_hom(&hom, |g| compose(f, g), &Morphism::identity(f.target()))
}

/// Retraction `g` with `g ∘ f = id`, when one exists.
pub fn is_split_mono(f: &Morphism) -> Result<Option<Morphism>> {
    let hom = hom_basis(f.target(), f.source())?;
    solve_in_hom(&hom, |g| compose(g, f), &Morphism::identity(f.source()))
}

/// Finds `x` in the hom space with `op(x) = want`, for a linear `op`.
pub(crate) fn solve_in_hom(
    hom: &super::hom::HomSpace,
    op: impl Fn(&Morphism) -> Result<Morphism>,
    want: &Morphism,
) -> Result<Option<Morphism>> {
    let fld = want.field();
    let images: Vec<Vector> = hom.basis().iter().map(|b| op(b).map(|m| m.to_vector())).collect::<Result<_>>()?;
    let rows = want.to_vector().len();
    let system = Matrix::from_columns(fld, rows, &images);
    let sol = solve_linear(&system, &want.to_vector())?;
    Ok(sol.particular.map(|c| hom.combine(&c)))
}

pub fn is_projective(m: &Module) -> bool {
    projective_cover(m).source().total_dim() == m.total_dim()
}

pub fn is_injective(m: &Module) -> bool {
    injective_envelope(m).target().total_dim() == m.total_dim()
}
