//! Seeded random k-trees and the book and path 2-tree families.
//!
//! Random traces use ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `SeedableRng::seed_from_u64(seed)`. Each new vertex draws two indices with
//! `Rng::gen_range`: first a `(k + 1)`-clique from the list of cliques built
//! so far, then the position of the vertex to drop from it. The remaining k
//! vertices are the attach set. The sampler is reproducible, not uniform over
//! k-trees.

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ktree::{Addition, KTreeTrace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Random,
    /// Every triangle shares the edge (0, 1).
    Book,
    /// Vertex j attaches to {j - 2, j - 1}.
    Path,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::Book => "book",
            Family::Path => "path",
        }
    }
}

impl core::str::FromStr for Family {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "random" => Ok(Family::Random),
            "book" => Ok(Family::Book),
            "path" => Ok(Family::Path),
            other => Err(alloc::format!("unknown family `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub family: Family,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenError {
    InvalidK {
        k: usize,
    },
    TooFewVertices {
        n: usize,
        min: usize,
    },
    /// Book and path families are 2-trees.
    FamilyNeedsK2 {
        family: Family,
        k: usize,
    },
}

impl fmt::Display for GenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenError::InvalidK { k } => write!(f, "k must be at least 1, got {k}"),
            GenError::TooFewVertices { n, min } => write!(f, "n={n} is below the minimum {min}"),
            GenError::FamilyNeedsK2 { family, k } => {
                write!(
                    f,
                    "the {} family is only defined for k=2, got k={k}",
                    family.as_str()
                )
            }
        }
    }
}

impl core::error::Error for GenError {}

/// Dispatches on `spec.family`. The seed only matters for
/// [`Family::Random`].
pub fn generate(spec: &GenSpec) -> Result<KTreeTrace, GenError> {
    match spec.family {
        Family::Random => random_ktree(spec),
        family => {
            if spec.k != 2 {
                return Err(GenError::FamilyNeedsK2 { family, k: spec.k });
            }
            match family {
                Family::Book => book_two_tree(spec.n),
                _ => path_two_tree(spec.n),
            }
        }
    }
}

pub fn random_ktree(spec: &GenSpec) -> Result<KTreeTrace, GenError> {
    let GenSpec { n, k, seed, .. } = *spec;
    if k == 0 {
        return Err(GenError::InvalidK { k });
    }
    if n < k + 1 {
        return Err(GenError::TooFewVertices { n, min: k + 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base: Vec<usize> = (0..=k).collect();
    let mut cliques: Vec<Vec<usize>> = Vec::with_capacity(n - k);
    cliques.push(base.clone());
    let mut additions = Vec::with_capacity(n - k - 1);
    for vertex in k + 1..n {
        let pick = rng.gen_range(0..cliques.len());
        let drop = rng.gen_range(0..k + 1);
        let mut attach = cliques[pick].clone();
        attach.remove(drop);
        let mut grown = attach.clone();
        grown.push(vertex);
        cliques.push(grown);
        additions.push(Addition { vertex, attach });
    }
    Ok(KTreeTrace::new(k, base, additions))
}

pub fn book_two_tree(n: usize) -> Result<KTreeTrace, GenError> {
    if n < 3 {
        return Err(GenError::TooFewVertices { n, min: 3 });
    }
    let additions = (3..n)
        .map(|vertex| Addition {
            vertex,
            attach: alloc::vec![0, 1],
        })
        .collect();
    Ok(KTreeTrace::new(2, alloc::vec![0, 1, 2], additions))
}

pub fn path_two_tree(n: usize) -> Result<KTreeTrace, GenError> {
    if n < 3 {
        return Err(GenError::TooFewVertices { n, min: 3 });
    }
    let additions = (3..n)
        .map(|vertex| Addition {
            vertex,
            attach: alloc::vec![vertex - 2, vertex - 1],
        })
        .collect();
    Ok(KTreeTrace::new(2, alloc::vec![0, 1, 2], additions))
}
