use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Scalar, Subspace, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A path in traversal order: `arrows[0]` is walked first. No arrows means the
/// trivial path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Formal linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

/// Path algebra of a finite quiver modulo an admissible ideal, presented by a
/// normal-form basis of path classes.
#[derive(Debug)]
pub struct Algebra {
    field: FieldSpec,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    cap: usize,
    basis: Vec<Path>,
    normal_forms: HashMap<Path, Vector>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vertices == other.vertices
            && self.arrows == other.arrows
            && self.relations == other.relations
            && self.cap == other.cap
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Enumerates path classes up to length `cap`, succeeding only when every
    /// path of length `cap` already lies in the ideal.
    pub fn build(
        field: FieldSpec,
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Relation>,
        cap: usize,
    ) -> Result<Self> {
        if cap == 0 {
            return Err(Error::InfiniteDimensionalSuspected("path cap must be at least 1".into()));
        }
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::MalformedRelation(format!("arrow {} has an unknown endpoint", a.label)));
            }
        }
        let mut shell = Algebra {
            field,
            vertices,
            arrows,
            relations: Vec::new(),
            cap,
            basis: Vec::new(),
            normal_forms: HashMap::new(),
        };
        for r in &relations {
            shell.validate_relation(r)?;
        }
        shell.relations = relations;

        let mut paths = shell.enumerate_paths();
        // Longest paths first so that pivots, and hence eliminated paths, are long.
        paths.sort_by(|p, q| q.len().cmp(&p.len()).then_with(|| p.cmp(q)));
        let position: HashMap<Path, usize> = paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

        let mut generators = Vec::new();
        for r in &shell.relations {
            let (u, w) = shell.relation_ends(r);
            let min_len = r.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
            for p in paths.iter().filter(|p| shell.end(p) == u && p.len() + min_len <= cap) {
                for q in paths.iter().filter(|q| q.start == w && p.len() + q.len() + min_len <= cap) {
                    let mut v = vec![field.zero(); paths.len()];
                    for (c, t) in &r.terms {
                        let full = shell.concat(&shell.concat(p, t), q);
                        if let Some(&i) = position.get(&full) {
                            v[i] = field.add(&v[i], c);
                        }
                    }
                    generators.push(v);
                }
            }
        }
        let ideal = Subspace::span(field, paths.len(), &generators);

        if let Some(p) = paths.iter().find(|p| p.len() == cap && !ideal.contains(&unit(field, paths.len(), position[*p]))) {
            return Err(Error::InfiniteDimensionalSuspected(format!(
                "path {} of length {cap} survives the relations",
                shell.path_label(p)
            )));
        }

        let complement = ideal.complement_indices();
        let mut basis: Vec<Path> = complement.iter().map(|&i| paths[i].clone()).collect();
        basis.sort_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
        let basis_index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let to_basis: Vec<usize> = complement.iter().map(|&i| basis_index[&paths[i]]).collect();

        let mut normal_forms = HashMap::new();
        for p in &paths {
            let coords = ideal.quotient_coords(&unit(field, paths.len(), position[p]));
            let mut nf = vec![field.zero(); basis.len()];
            for (k, c) in coords.into_iter().enumerate() {
                nf[to_basis[k]] = c;
            }
            normal_forms.insert(p.clone(), nf);
        }
        shell.basis = basis;
        shell.normal_forms = normal_forms;
        if let Some((i, j, k)) = shell.associativity_failure() {
            return Err(Error::MalformedRelation(format!(
                "multiplication is not associative on ({}, {}, {})",
                shell.path_label(&shell.basis[i]),
                shell.path_label(&shell.basis[j]),
                shell.path_label(&shell.basis[k])
            )));
        }
        Ok(shell)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn path_cap(&self) -> usize {
        self.cap
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn end(&self, p: &Path) -> usize {
        p.arrows.last().map_or(p.start, |&a| self.arrows[a].target)
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e{}", self.vertices[p.start])
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].label.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    /// Concatenation `p` then `q`; the caller guarantees composability.
    fn concat(&self, p: &Path, q: &Path) -> Path {
        debug_assert_eq!(self.end(p), q.start);
        let mut arrows = p.arrows.clone();
        arrows.extend(&q.arrows);
        Path { start: p.start, arrows }
    }

    /// Coordinates of the class of `p` in the basis. Paths longer than the cap
    /// lie in the ideal and give zero.
    pub fn normal_form(&self, p: &Path) -> Vector {
        self.normal_forms.get(p).cloned().unwrap_or_else(|| vec![self.field.zero(); self.dimension()])
    }

    /// Normal form of `p` followed by `q`, or zero when they do not compose.
    pub fn multiply_paths(&self, p: &Path, q: &Path) -> Vector {
        if self.end(p) != q.start {
            return vec![self.field.zero(); self.dimension()];
        }
        self.normal_form(&self.concat(p, q))
    }

    /// Basis paths from `from` to `to`, with their basis indices.
    pub fn basis_paths_between(&self, from: usize, to: usize) -> Vec<(usize, &Path)> {
        self.basis.iter().enumerate().filter(|(_, p)| p.start == from && self.end(p) == to).collect()
    }

    fn multiply_vectors(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let f = self.field;
        let mut out = vec![f.zero(); self.dimension()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !f.is_zero(a)) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !f.is_zero(b)) {
                let c = f.mul(a, b);
                for (k, v) in self.multiply_paths(&self.basis[i], &self.basis[j]).iter().enumerate() {
                    if !f.is_zero(v) {
                        out[k] = f.add(&out[k], &f.mul(&c, v));
                    }
                }
            }
        }
        out
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dimension();
        let e = |i: usize| unit(self.field, n, i);
        for i in 0..n {
            for j in 0..n {
                let ij = self.multiply_paths(&self.basis[i], &self.basis[j]);
                for k in 0..n {
                    let left = self.multiply_vectors(&ij, &e(k));
                    let jk = self.multiply_paths(&self.basis[j], &self.basis[k]);
                    let right = self.multiply_vectors(&e(i), &jk);
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    fn enumerate_paths(&self) -> Vec<Path> {
        let mut all: Vec<Path> = (0..self.vertices.len()).map(Path::trivial).collect();
        let mut frontier = all.clone();
        for _ in 0..self.cap {
            let mut next = Vec::new();
            for p in &frontier {
                let e = self.end(p);
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.source == e {
                        let mut q = p.clone();
                        q.arrows.push(i);
                        next.push(q);
                    }
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all
    }

    fn relation_ends(&self, r: &Relation) -> (usize, usize) {
        let p = &r.terms[0].1;
        (p.start, self.end(p))
    }

    fn validate_relation(&self, r: &Relation) -> Result<()> {
        let Some((_, first)) = r.terms.first() else {
            return Err(Error::MalformedRelation("empty relation".into()));
        };
        let ends = (first.start, self.end(first));
        for (_, p) in &r.terms {
            if p.len() < 2 {
                return Err(Error::MalformedRelation(format!(
                    "term {} has length below 2; relations must be admissible",
                    self.path_label(p)
                )));
            }
            for w in p.arrows.windows(2) {
                if self.arrows[w[0]].target != self.arrows[w[1]].source {
                    return Err(Error::MalformedRelation(format!(
                        "arrows {} and {} do not compose",
                        self.arrows[w[0]].label, self.arrows[w[1]].label
                    )));
                }
            }
            if (p.start, self.end(p)) != ends {
                return Err(Error::MalformedRelation("terms are not parallel paths".into()));
            }
        }
        Ok(())
    }
}

fn unit(field: FieldSpec, n: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Parses a relation such as `x*x`, `a*b - c*d` or `2*a*b + 1/2*c*d`.
/// A leading numeric factor is the coefficient; the remaining factors are arrow
/// labels in traversal order.
pub fn parse_relation(field: FieldSpec, arrows: &[Arrow], text: &str) -> Result<Relation> {
    let mut terms: Vec<(Scalar, Path)> = Vec::new();
    let mut sign = 1i64;
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::MalformedRelation("empty relation".into()));
    }
    loop {
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
            continue;
        }
        if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
            continue;
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (term, tail) = rest.split_at(end);
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::MalformedRelation(format!("missing term in `{text}`")));
        }
        let mut coeff = field.from_i64(sign);
        let mut path: Option<Path> = None;
        for (k, factor) in term.split('*').map(str::trim).enumerate() {
            if factor.is_empty() {
                return Err(Error::MalformedRelation(format!("empty factor in `{term}`")));
            }
            if k == 0 && factor.starts_with(|c: char| c.is_ascii_digit()) {
                let c = parse_coefficient(field, factor)?;
                coeff = field.mul(&coeff, &c);
                continue;
            }
            let a = arrows
                .iter()
                .position(|a| a.label == factor)
                .ok_or_else(|| Error::MalformedRelation(format!("unknown arrow `{factor}`")))?;
            match &mut path {
                None => path = Some(Path { start: arrows[a].source, arrows: vec![a] }),
                Some(p) => p.arrows.push(a),
            }
        }
        let path = path.ok_or_else(|| Error::MalformedRelation(format!("term `{term}` has no arrows")))?;
        match terms.iter_mut().find(|(_, p)| *p == path) {
            Some((c, _)) => *c = field.add(c, &coeff),
            None => terms.push((coeff, path)),
        }
        sign = 1;
        rest = tail.trim_start();
        if rest.is_empty() {
            break;
        }
    }
    terms.retain(|(c, _)| !field.is_zero(c));
    if terms.is_empty() {
        return Err(Error::MalformedRelation(format!("`{text}` is identically zero")));
    }
    Ok(Relation { terms })
}

fn parse_coefficient(field: FieldSpec, s: &str) -> Result<Scalar> {
    let bad = || Error::MalformedRelation(format!("bad coefficient `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            field.from_fraction(n, d)
        }
        None => Ok(field.from_i64(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "algebra over {} with {} vertices, {} arrows, dimension {}", self.field, self.vertices.len(), self.arrows.len(), self.dimension())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    pub(crate) fn d2() -> Algebra {
        let arrows = vec![Arrow { label: "x".into(), source: 0, target: 0 }];
        let rel = parse_relation(gf2(), &arrows, "x*x").unwrap();
        Algebra::build(gf2(), vec!["v".into()], arrows, vec![rel], 4).unwrap()
    }

    #[test]
    fn d2_has_basis_e_x() {
        let a = d2();
        assert_eq!(a.dimension(), 2);
        let labels: Vec<_> = a.basis().iter().map(|p| a.path_label(p)).collect();
        assert_eq!(labels, vec!["ev", "x"]);
    }

    #[test]
    fn n2_has_dimension_four() {
        let arrows = vec![
            Arrow { label: "a".into(), source: 0, target: 1 },
            Arrow { label: "b".into(), source: 1, target: 0 },
        ];
        let rels = vec![
            parse_relation(gf2(), &arrows, "a*b").unwrap(),
            parse_relation(gf2(), &arrows, "b*a").unwrap(),
        ];
        let a = Algebra::build(gf2(), vec!["1".into(), "2".into()], arrows, rels, 4).unwrap();
        let labels: Vec<_> = a.basis().iter().map(|p| a.path_label(p)).collect();
        assert_eq!(labels, vec!["e1", "e2", "a", "b"]);
    }

    #[test]
    fn semisimple_is_one_dimensional() {
        let a = Algebra::build(gf2(), vec!["v".into()], vec![], vec![], 1).unwrap();
        assert_eq!(a.dimension(), 1);
    }

    #[test]
    fn free_loop_is_rejected() {
        let arrows = vec![Arrow { label: "x".into(), source: 0, target: 0 }];
        let err = Algebra::build(gf2(), vec!["v".into()], arrows, vec![], 3).unwrap_err();
        assert!(matches!(err, Error::InfiniteDimensionalSuspected(_)));
    }

    #[test]
    fn commutativity_relation_over_rationals() {
        // Square a*c = b*d with all length-2 paths otherwise free: dimension 4 + 4 - 1.
        let q = FieldSpec::Rationals;
        let arrows = vec![
            Arrow { label: "a".into(), source: 0, target: 1 },
            Arrow { label: "b".into(), source: 0, target: 2 },
            Arrow { label: "c".into(), source: 1, target: 3 },
            Arrow { label: "d".into(), source: 2, target: 3 },
        ];
        let rel = parse_relation(q, &arrows, "a*c - 1/2*b*d").unwrap();
        let verts = ["1", "2", "3", "4"].iter().map(|s| s.to_string()).collect();
        let alg = Algebra::build(q, verts, arrows, vec![rel], 3).unwrap();
        assert_eq!(alg.dimension(), 9);
    }

    #[test]
    fn relation_errors() {
        let arrows = vec![Arrow { label: "x".into(), source: 0, target: 0 }];
        assert!(matches!(parse_relation(gf2(), &arrows, "x*y"), Err(Error::MalformedRelation(_))));
        assert!(parse_relation(gf2(), &arrows, "x*x - x*x").is_err());
        let short = parse_relation(gf2(), &arrows, "x").unwrap();
        assert!(Algebra::build(gf2(), vec!["v".into()], arrows, vec![short], 3).is_err());
    }
}
