use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., N}`, stored 0-based.
///
/// Acts on polynomials by `w(x^α) = x^{wα}` with `(wα)_{w(k)} = α_k`, so that
/// `permute(v, permute(w, f)) = permute(v.compose(w), f)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images `w(1), ..., w(N)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (pos, &w) in images.iter().enumerate() {
            if w == 0 || w > n || seen[w - 1] {
                return Err(Error::Parse {
                    pos,
                    msg: format!("{images:?} is not a permutation of 1..={n}"),
                });
            }
            seen[w - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|w| w - 1).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition `(i, j)`, 1-based.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        for idx in [i, j] {
            if idx == 0 || idx > n {
                return Err(Error::Index {
                    index: idx,
                    nvars: n,
                });
            }
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, j - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `k`.
    pub fn image0(&self, k: usize) -> usize {
        self.images[k]
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|w| w + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (k, &w) in self.images.iter().enumerate() {
            images[w] = k;
        }
        Permutation { images }
    }

    /// All `n!` permutations in lexicographic order of their images.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, w) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", w + 1)?;
        }
        write!(f, "]")
    }
}
