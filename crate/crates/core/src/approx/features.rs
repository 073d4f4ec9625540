//! Feature maps: one-hot, tile coding, and (normalized) identity.

use crate::error::Error;
use crate::Result;

/// A feature vector. Sparse features carry active indices whose values are
/// all 1.0; dense features carry the full vector.
#[derive(Debug, Clone, PartialEq)]
pub enum Features {
    Sparse { indices: Vec<usize>, dim: usize },
    Dense(Vec<f64>),
}

impl Features {
    pub fn dim(&self) -> usize {
        match self {
            Features::Sparse { dim, .. } => *dim,
            Features::Dense(v) => v.len(),
        }
    }

    /// Number of active (nonzero) units for sparse features.
    pub fn active_count(&self) -> usize {
        match self {
            Features::Sparse { indices, .. } => indices.len(),
            Features::Dense(v) => v.iter().filter(|x| **x != 0.0).count(),
        }
    }

    pub fn to_dense(&self) -> Vec<f64> {
        match self {
            Features::Dense(v) => v.clone(),
            Features::Sparse { indices, dim } => {
                let mut v = vec![0.0; *dim];
                for &i in indices {
                    v[i] += 1.0;
                }
                v
            }
        }
    }
}

/// One-hot encoding of a state index.
pub fn one_hot(state_index: usize, dim: usize) -> Result<Features> {
    if state_index >= dim {
        return Err(Error::InvalidParameter(format!(
            "one_hot index {state_index} out of range for dim {dim}"
        )));
    }
    Ok(Features::Sparse {
        indices: vec![state_index],
        dim,
    })
}

/// Tile coding over a box, with `tilings` uniformly offset grids of
/// `tiles` cells per dimension. Tiling `i` is shifted by `i/tilings` of a
/// tile width. Flattened indices that exceed the declared budget wrap
/// around (hashing by modulus).
#[derive(Debug, Clone)]
pub struct TileCoding {
    lo: Vec<f64>,
    hi: Vec<f64>,
    tiles: usize,
    tilings: usize,
    output_dim: usize,
}

impl TileCoding {
    pub fn new(
        lo: Vec<f64>,
        hi: Vec<f64>,
        tiles: usize,
        tilings: usize,
        output_dim: usize,
    ) -> Result<Self> {
        if lo.len() != hi.len() || lo.is_empty() {
            return Err(Error::InvalidParameter("tile coding box is malformed".into()));
        }
        if tiles == 0 || tilings == 0 || output_dim == 0 {
            return Err(Error::InvalidParameter(
                "tiles, tilings and output_dim must be positive".into(),
            ));
        }
        Ok(TileCoding { lo, hi, tiles, tilings, output_dim })
    }

    pub fn output_dim(&self) -> usize {
        self.output_dim
    }

    pub fn tilings(&self) -> usize {
        self.tilings
    }

    /// Encode an observation. Observations outside the box are clipped first.
    pub fn encode(&self, obs: &[f64]) -> Features {
        debug_assert_eq!(obs.len(), self.lo.len());
        let dims = self.lo.len();
        let width = 1.0 / self.tiles as f64;
        let mut indices = Vec::with_capacity(self.tilings);
        for t in 0..self.tilings {
            let shift = t as f64 * width / self.tilings as f64;
            let mut flat = 0usize;
            let mut stride = 1usize;
            for d in 0..dims {
                let span = self.hi[d] - self.lo[d];
                let x = ((obs[d] - self.lo[d]) / span).clamp(0.0, 1.0);
                let cell = (((x + shift) * self.tiles as f64).floor() as usize)
                    .min(self.tiles - 1);
                flat += cell * stride;
                stride *= self.tiles;
            }
            indices.push((t * stride + flat) % self.output_dim);
        }
        Features::Sparse { indices, dim: self.output_dim }
    }
}

/// Observation-to-feature pipeline, chosen per feature regime.
#[derive(Debug, Clone)]
pub enum FeatureMap {
    /// Observation is a single state index; out-of-range indices (terminal
    /// padding states) encode as the all-zero vector.
    OneHot { dim: usize },
    Tile(TileCoding),
    /// Dense passthrough, normalized to the unit box.
    Identity { lo: Vec<f64>, hi: Vec<f64> },
}

impl FeatureMap {
    pub fn dim(&self) -> usize {
        match self {
            FeatureMap::OneHot { dim } => *dim,
            FeatureMap::Tile(tc) => tc.output_dim(),
            FeatureMap::Identity { lo, .. } => lo.len(),
        }
    }

    pub fn featurize(&self, obs: &[f64]) -> Features {
        match self {
            FeatureMap::OneHot { dim } => {
                let idx = obs[0].round() as i64;
                if idx >= 0 && (idx as usize) < *dim {
                    Features::Sparse { indices: vec![idx as usize], dim: *dim }
                } else {
                    Features::Sparse { indices: vec![], dim: *dim }
                }
            }
            FeatureMap::Tile(tc) => tc.encode(obs),
            FeatureMap::Identity { lo, hi } => {
                let v = obs
                    .iter()
                    .zip(lo.iter().zip(hi.iter()))
                    .map(|(x, (l, h))| ((x - l) / (h - l)).clamp(0.0, 1.0))
                    .collect();
                Features::Dense(v)
            }
        }
    }
}
