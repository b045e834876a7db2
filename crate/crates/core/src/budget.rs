//! Instance budgets for enumerating morphisms and diagrams.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::linalg::{FieldSpec, Scalar, Vector};

/// How exhaustively quantified checks enumerate their instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Enumerate every vector of a space instead of zero plus basis vectors.
    pub full: bool,
    /// Largest space dimension enumerated in full.
    pub dim_cap: usize,
    /// Seed for sampled checks.
    pub seed: u64,
    /// Largest number of instances any single check visits before sampling.
    pub instance_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { full: false, dim_cap: 10, seed: 0, instance_cap: 4096 }
    }
}

impl Budget {
    pub fn full() -> Self {
        Budget { full: true, ..Budget::default() }
    }

    /// Coefficient vectors of a `dim`-dimensional space: everything in full mode
    /// over a finite field within the cap, otherwise zero and the unit vectors.
    /// The flag reports a fallback from full enumeration.
    pub fn vectors(&self, field: FieldSpec, dim: usize) -> (Vec<Vector>, bool) {
        let order = field.order();
        if self.full {
            if let Some(q) = order {
                if dim <= self.dim_cap && (q as u128).pow(dim as u32) <= 1u128 << 20 {
                    return (all_vectors(field, q, dim), false);
                }
            }
        }
        let mut out = vec![vec![field.zero(); dim]];
        for i in 0..dim {
            let mut v = vec![field.zero(); dim];
            v[i] = field.one();
            out.push(v);
        }
        (out, self.full)
    }

    /// Keeps at most `instance_cap` items, sampled by seed. The flag reports sampling.
    pub fn sample<T: Clone>(&self, items: Vec<T>) -> (Vec<T>, bool) {
        if items.len() <= self.instance_cap {
            return (items, false);
        }
        let mut rng = StdRng::seed_from_u64(self.seed);
        let mut idx: Vec<usize> = (0..items.len()).collect();
        idx.shuffle(&mut rng);
        idx.truncate(self.instance_cap);
        idx.sort_unstable();
        (idx.into_iter().map(|i| items[i].clone()).collect(), true)
    }
}

fn all_vectors(field: FieldSpec, q: u64, dim: usize) -> Vec<Vector> {
    let total = q.pow(dim as u32);
    (0..total)
        .map(|mut k| {
            (0..dim)
                .map(|_| {
                    let digit = k % q;
                    k /= q;
                    field.nth_element(digit)
                })
                .collect::<Vec<Scalar>>()
        })
        .collect()
}

/// Cartesian product of candidate lists.
pub fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for prefix in &out {
            for item in list {
                let mut p = prefix.clone();
                p.push(item.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_modes() {
        let f = FieldSpec::Prime(2);
        let (v, fell_back) = Budget::default().vectors(f, 3);
        assert_eq!(v.len(), 4);
        assert!(!fell_back);
        let (v, fell_back) = Budget::full().vectors(f, 3);
        assert_eq!(v.len(), 8);
        assert!(!fell_back);
        let (v, fell_back) = Budget::full().vectors(f, 11);
        assert_eq!(v.len(), 12);
        assert!(fell_back);
        let (v, _) = Budget::full().vectors(FieldSpec::Rationals, 2);
        assert_eq!(v.len(), 3);
    }

    #[test]
    fn sampling_is_deterministic() {
        let b = Budget { instance_cap: 5, ..Budget::default() };
        let items: Vec<usize> = (0..100).collect();
        let (a, sampled) = b.sample(items.clone());
        assert!(sampled);
        assert_eq!(a.len(), 5);
        assert_eq!(a, b.sample(items).0);
        assert_eq!(product(&[vec![1, 2], vec![3, 4, 5]]).len(), 6);
    }
}
