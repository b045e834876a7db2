//! Exhaustive GF(2) oracles. Everything here enumerates bit patterns and
//! never calls the library's elimination routines.

#![allow(dead_code)]

use std::collections::BTreeSet;

use stabcat::linalg::{FieldSpec, Matrix, Scalar};
use stabcat::{Module, Morphism};

pub const GF2: FieldSpec = FieldSpec::Prime(2);

pub fn bit(s: &Scalar) -> u8 {
    match s {
        Scalar::Mod(v) => (*v & 1) as u8,
        Scalar::Rat(_) => panic!("oracles run over GF(2)"),
    }
}

/// Row-major 0/1 entries.
pub fn bits_of(m: &Matrix) -> Vec<Vec<u8>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| bit(m.get(i, j))).collect()).collect()
}

pub fn to_matrix(rows: usize, cols: usize, data: &[Vec<u8>]) -> Matrix {
    if rows == 0 {
        return Matrix::zeros(GF2, 0, cols);
    }
    let rows: Vec<Vec<i64>> = data.iter().map(|r| r.iter().map(|b| *b as i64).collect()).collect();
    Matrix::from_rows(GF2, &rows).unwrap()
}

pub fn apply(m: &[Vec<u8>], x: u64) -> u64 {
    let mut out = 0u64;
    for (i, row) in m.iter().enumerate() {
        let mut acc = 0u8;
        for (j, b) in row.iter().enumerate() {
            acc ^= b & ((x >> j) & 1) as u8;
        }
        out |= (acc as u64) << i;
    }
    out
}

/// Size of the image of `m` acting on all `2^cols` vectors.
pub fn image_size(m: &[Vec<u8>], cols: usize) -> usize {
    (0..1u64 << cols).map(|x| apply(m, x)).collect::<BTreeSet<_>>().len()
}

pub fn kernel_size(m: &[Vec<u8>], cols: usize) -> usize {
    (0..1u64 << cols).filter(|x| apply(m, *x) == 0).count()
}

pub fn log2_exact(n: usize) -> usize {
    assert!(n.is_power_of_two(), "{n} is not a power of two");
    n.trailing_zeros() as usize
}

/// All `x` with `m x = b`.
pub fn solutions(m: &[Vec<u8>], cols: usize, b: u64) -> Vec<u64> {
    (0..1u64 << cols).filter(|x| apply(m, *x) == b).collect()
}

/// Every `u64` reachable as a sum of elements of `gens`.
pub fn closure(gens: &[u64]) -> BTreeSet<u64> {
    let mut set = BTreeSet::from([0u64]);
    for g in gens {
        let add: Vec<u64> = set.iter().map(|s| s ^ g).collect();
        set.extend(add);
    }
    set
}

/// A linear map between modules packed as one bit string, vertex by vertex,
/// each vertex block row-major.
pub struct Packed {
    pub blocks: Vec<(usize, usize)>,
}

impl Packed {
    pub fn new(a: &Module, b: &Module) -> Self {
        Packed { blocks: a.dims().iter().zip(b.dims()).map(|(s, t)| (*t, *s)).collect() }
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|(r, c)| r * c).sum()
    }

    pub fn unpack(&self, x: u64) -> Vec<Vec<Vec<u8>>> {
        let mut off = 0;
        let mut out = Vec::new();
        for (r, c) in &self.blocks {
            let mut m = vec![vec![0u8; *c]; *r];
            for (i, row) in m.iter_mut().enumerate() {
                for (j, e) in row.iter_mut().enumerate() {
                    *e = ((x >> (off + i * c + j)) & 1) as u8;
                }
            }
            off += r * c;
            out.push(m);
        }
        out
    }

    pub fn pack(&self, maps: &[Vec<Vec<u8>>]) -> u64 {
        let mut off = 0;
        let mut x = 0u64;
        for ((r, c), m) in self.blocks.iter().zip(maps) {
            for i in 0..*r {
                for j in 0..*c {
                    x |= (m[i][j] as u64) << (off + i * c + j);
                }
            }
            off += r * c;
        }
        x
    }

    pub fn pack_morphism(&self, f: &Morphism) -> u64 {
        self.pack(&f.maps().iter().map(bits_of).collect::<Vec<_>>())
    }
}

fn mat_mul(a: &[Vec<u8>], b: &[Vec<u8>], inner: usize, cols: usize) -> Vec<Vec<u8>> {
    a.iter()
        .map(|row| (0..cols).map(|j| (0..inner).fold(0u8, |acc, k| acc ^ (row[k] & b[k][j]))).collect())
        .collect()
}

/// All intertwiners `a → b`, packed.
pub fn intertwiners(a: &Module, b: &Module) -> Vec<u64> {
    let p = Packed::new(a, b);
    let n = p.len();
    assert!(n <= 24, "brute force over {n} bits");
    let arrows = a.algebra().arrows().to_vec();
    let acts_a: Vec<_> = a.actions().iter().map(bits_of).collect();
    let acts_b: Vec<_> = b.actions().iter().map(bits_of).collect();
    (0..1u64 << n)
        .filter(|x| {
            let maps = p.unpack(*x);
            arrows.iter().enumerate().all(|(k, ar)| {
                let (s, t) = (ar.source, ar.target);
                let lhs = mat_mul(&maps[t], &acts_a[k], a.dim_at(t), a.dim_at(s));
                let rhs = mat_mul(&acts_b[k], &maps[s], b.dim_at(s), a.dim_at(s));
                lhs == rhs
            })
        })
        .collect()
}

/// Packed composites `g ∘ h` over all `h : a → x` and `g : x → b`.
pub fn composites_through(a: &Module, x: &Module, b: &Module) -> Vec<u64> {
    let (pa, pb, pab) = (Packed::new(a, x), Packed::new(x, b), Packed::new(a, b));
    let hs = intertwiners(a, x);
    let gs = intertwiners(x, b);
    let mut out = BTreeSet::new();
    for h in &hs {
        let hm = pa.unpack(*h);
        for g in &gs {
            let gm = pb.unpack(*g);
            let maps: Vec<_> = (0..a.dims().len()).map(|v| mat_mul(&gm[v], &hm[v], x.dim_at(v), a.dim_at(v))).collect();
            out.insert(pab.pack(&maps));
        }
    }
    out.into_iter().collect()
}

/// Maps `a → b` factoring through `add(generators)`.
pub fn ideal_brute(a: &Module, b: &Module, generators: &[Module]) -> BTreeSet<u64> {
    let mut gens = Vec::new();
    for g in generators {
        gens.extend(composites_through(a, g, b));
    }
    closure(&gens)
}

pub fn sum(parts: &[&Module], name: &str) -> Module {
    let owned: Vec<Module> = parts.iter().map(|m| (*m).clone()).collect();
    stabcat::module::direct_sum(parts[0].algebra(), &owned).unwrap().object.with_name(name)
}

/// Indecomposables and small sums over `k[x]/(x²)`.
pub fn d2_modules(d: &stabcat::fixtures::DualNumbers) -> Vec<Module> {
    vec![d.s.clone(), d.a.clone(), sum(&[&d.s, &d.s], "S+S"), sum(&[&d.s, &d.a], "S+A"), sum(&[&d.a, &d.a], "A+A")]
}

/// Indecomposables and small sums over the two-cycle.
pub fn n2_modules(c: &stabcat::fixtures::TwoCycle) -> Vec<Module> {
    vec![
        c.s1.clone(),
        c.s2.clone(),
        c.p1.clone(),
        c.p2.clone(),
        sum(&[&c.s1, &c.s2], "S1+S2"),
        sum(&[&c.p1, &c.s2], "P1+S2"),
        sum(&[&c.p1, &c.p2], "P1+P2"),
    ]
}
