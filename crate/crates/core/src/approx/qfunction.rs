//! State-action value approximators with a uniform forward/gradient surface.

use super::features::Features;
use super::mlp::{init_value, Mlp};
use crate::seeding::Prng;

/// Weight initialization families.
///
/// `GaussianOverN` samples every weight iid from `N(0, 1/n)` with `n` the
/// fan-in feature dimension (biases zero). `UniformFanIn` is the usual
/// `U(-1/sqrt(n), 1/sqrt(n))` default.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitScheme {
    Zeros,
    UniformFanIn,
    GaussianOverN,
}

/// Linear state-action values: one weight vector per output, optional bias.
/// Layout: all weights output-major, then the biases.
#[derive(Debug, Clone)]
pub struct LinearQ {
    n_features: usize,
    n_outputs: usize,
    has_bias: bool,
    params: Vec<f64>,
}

impl LinearQ {
    pub fn new(
        n_features: usize,
        n_outputs: usize,
        has_bias: bool,
        init: &InitScheme,
        rng: &mut Prng,
    ) -> Self {
        let n = n_outputs * n_features + if has_bias { n_outputs } else { 0 };
        let mut params = Vec::with_capacity(n);
        for _ in 0..n_outputs * n_features {
            params.push(init_value(init, n_features, false, rng));
        }
        if has_bias {
            for _ in 0..n_outputs {
                params.push(init_value(init, n_features, true, rng));
            }
        }
        LinearQ { n_features, n_outputs, has_bias, params }
    }

    pub fn n_params(&self) -> usize {
        self.params.len()
    }

    pub fn value(&self, f: &Features, output: usize) -> f64 {
        debug_assert!(output < self.n_outputs);
        let w = &self.params[output * self.n_features..(output + 1) * self.n_features];
        let mut v = if self.has_bias {
            self.params[self.n_outputs * self.n_features + output]
        } else {
            0.0
        };
        match f {
            Features::Sparse { indices, .. } => {
                for &i in indices {
                    v += w[i];
                }
            }
            Features::Dense(x) => {
                v += w.iter().zip(x.iter()).map(|(a, b)| a * b).sum::<f64>();
            }
        }
        v
    }

    pub fn values(&self, f: &Features) -> Vec<f64> {
        (0..self.n_outputs).map(|o| self.value(f, o)).collect()
    }

    pub fn accumulate_grad(&self, f: &Features, output: usize, coeff: f64, grad: &mut [f64]) {
        debug_assert_eq!(grad.len(), self.params.len());
        let base = output * self.n_features;
        match f {
            Features::Sparse { indices, .. } => {
                for &i in indices {
                    grad[base + i] += coeff;
                }
            }
            Features::Dense(x) => {
                for (i, xv) in x.iter().enumerate() {
                    grad[base + i] += coeff * xv;
                }
            }
        }
        if self.has_bias {
            grad[self.n_outputs * self.n_features + output] += coeff;
        }
    }
}

/// A parameterized state-action value function: linear over (possibly
/// sparse) features, or a small MLP.
#[derive(Debug, Clone)]
pub enum QFunction {
    Linear(LinearQ),
    Mlp(Mlp),
}

impl QFunction {
    pub fn linear(
        n_features: usize,
        n_outputs: usize,
        has_bias: bool,
        init: &InitScheme,
        rng: &mut Prng,
    ) -> Self {
        QFunction::Linear(LinearQ::new(n_features, n_outputs, has_bias, init, rng))
    }

    pub fn mlp(sizes: Vec<usize>, init: &InitScheme, rng: &mut Prng) -> Self {
        QFunction::Mlp(Mlp::new(sizes, init, rng))
    }

    pub fn n_outputs(&self) -> usize {
        match self {
            QFunction::Linear(l) => l.n_outputs,
            QFunction::Mlp(m) => m.n_outputs(),
        }
    }

    pub fn n_params(&self) -> usize {
        match self {
            QFunction::Linear(l) => l.n_params(),
            QFunction::Mlp(m) => m.n_params(),
        }
    }

    pub fn params(&self) -> &[f64] {
        match self {
            QFunction::Linear(l) => &l.params,
            QFunction::Mlp(m) => m.params(),
        }
    }

    pub fn params_mut(&mut self) -> &mut [f64] {
        match self {
            QFunction::Linear(l) => &mut l.params,
            QFunction::Mlp(m) => m.params_mut(),
        }
    }

    pub fn value(&self, f: &Features, output: usize) -> f64 {
        match self {
            QFunction::Linear(l) => l.value(f, output),
            QFunction::Mlp(m) => m.forward(f)[output],
        }
    }

    pub fn values(&self, f: &Features) -> Vec<f64> {
        match self {
            QFunction::Linear(l) => l.values(f),
            QFunction::Mlp(m) => m.forward(f),
        }
    }

    /// Add `coeff * d value(f, output) / d params` into `grad`.
    pub fn accumulate_grad(&self, f: &Features, output: usize, coeff: f64, grad: &mut [f64]) {
        match self {
            QFunction::Linear(l) => l.accumulate_grad(f, output, coeff, grad),
            QFunction::Mlp(m) => {
                let mut og = vec![0.0; m.n_outputs()];
                og[output] = coeff;
                m.backward(f, &og, grad);
            }
        }
    }

    /// Copy parameters from an identically-shaped function.
    pub fn sync_from(&mut self, other: &QFunction) {
        let dst = self.params_mut();
        let src = other.params();
        assert_eq!(dst.len(), src.len(), "cannot sync differently shaped functions");
        dst.copy_from_slice(src);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeding::derive_rng;

    #[test]
    fn linear_value_and_grad() {
        let mut rng = derive_rng(0, 0, 0);
        let mut q = LinearQ::new(3, 2, true, &InitScheme::Zeros, &mut rng);
        q.params.copy_from_slice(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 0.5, -0.5]);
        let f = Features::Sparse { indices: vec![0, 2], dim: 3 };
        assert_eq!(q.value(&f, 0), 1.0 + 3.0 + 0.5);
        assert_eq!(q.value(&f, 1), 4.0 + 6.0 - 0.5);
        let mut grad = vec![0.0; q.n_params()];
        q.accumulate_grad(&f, 1, 2.0, &mut grad);
        assert_eq!(grad, vec![0.0, 0.0, 0.0, 2.0, 0.0, 2.0, 0.0, 2.0]);
    }

    #[test]
    fn gaussian_over_n_variance_within_five_percent() {
        let mut rng = derive_rng(11, 0, 0);
        let n = 200;
        // 500 outputs x 200 features = 1e5 weights.
        let q = LinearQ::new(n, 500, false, &InitScheme::GaussianOverN, &mut rng);
        let samples = &q.params;
        let mean: f64 = samples.iter().sum::<f64>() / samples.len() as f64;
        let var: f64 =
            samples.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / samples.len() as f64;
        let target = 1.0 / n as f64;
        assert!(
            (var - target).abs() < 0.05 * target,
            "empirical variance {var} vs 1/n = {target}"
        );
    }

    #[test]
    fn sync_copies_bitwise() {
        let mut rng = derive_rng(3, 0, 0);
        let a = QFunction::linear(4, 2, false, &InitScheme::UniformFanIn, &mut rng);
        let mut b = QFunction::linear(4, 2, false, &InitScheme::UniformFanIn, &mut rng);
        b.sync_from(&a);
        assert_eq!(a.params(), b.params());
    }
}
