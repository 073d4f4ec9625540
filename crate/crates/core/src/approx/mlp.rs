//! A small fully-connected network with rectifier hidden layers, a linear
//! output layer, and a hand-written backward pass.

use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::features::Features;
use super::qfunction::InitScheme;
use crate::seeding::Prng;

/// Parameters are stored in one flat vector, layer by layer: the weight
/// matrix (row-major, `out x in`) followed by the bias vector.
#[derive(Debug, Clone)]
pub struct Mlp {
    sizes: Vec<usize>,
    params: Vec<f64>,
}

fn layer_param_count(inp: usize, out: usize) -> usize {
    out * inp + out
}

pub(crate) fn init_value(scheme: &InitScheme, fan_in: usize, is_bias: bool, rng: &mut Prng) -> f64 {
    match scheme {
        InitScheme::Zeros => 0.0,
        InitScheme::UniformFanIn => {
            let bound = 1.0 / (fan_in as f64).sqrt();
            rng.gen_range(-bound..bound)
        }
        InitScheme::GaussianOverN => {
            if is_bias {
                0.0
            } else {
                Normal::new(0.0, (1.0 / fan_in as f64).sqrt())
                    .unwrap()
                    .sample(rng)
            }
        }
    }
}

impl Mlp {
    /// `sizes` lists input, hidden and output widths, e.g. `[n, 50, 50, |A|]`.
    /// `[n, |A|]` degenerates to a plain linear layer.
    pub fn new(sizes: Vec<usize>, init: &InitScheme, rng: &mut Prng) -> Self {
        assert!(sizes.len() >= 2, "an MLP needs at least input and output sizes");
        let n_params: usize = sizes
            .windows(2)
            .map(|w| layer_param_count(w[0], w[1]))
            .sum();
        let mut params = Vec::with_capacity(n_params);
        for w in sizes.windows(2) {
            let (inp, out) = (w[0], w[1]);
            for _ in 0..out * inp {
                params.push(init_value(init, inp, false, rng));
            }
            for _ in 0..out {
                params.push(init_value(init, inp, true, rng));
            }
        }
        Mlp { sizes, params }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn n_outputs(&self) -> usize {
        *self.sizes.last().unwrap()
    }

    pub fn n_params(&self) -> usize {
        self.params.len()
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn params_mut(&mut self) -> &mut [f64] {
        &mut self.params
    }

    fn layer_offsets(&self) -> Vec<usize> {
        let mut offs = Vec::with_capacity(self.sizes.len());
        let mut acc = 0;
        for w in self.sizes.windows(2) {
            offs.push(acc);
            acc += layer_param_count(w[0], w[1]);
        }
        offs
    }

    /// First-layer pre-activation, exploiting sparse inputs.
    fn first_layer(&self, x: &Features, off: usize, inp: usize, out: usize) -> Vec<f64> {
        let w = &self.params[off..off + out * inp];
        let b = &self.params[off + out * inp..off + out * inp + out];
        let mut z = b.to_vec();
        match x {
            Features::Sparse { indices, .. } => {
                for &i in indices {
                    for (j, zj) in z.iter_mut().enumerate() {
                        *zj += w[j * inp + i];
                    }
                }
            }
            Features::Dense(v) => {
                for (j, zj) in z.iter_mut().enumerate() {
                    let row = &w[j * inp..(j + 1) * inp];
                    *zj += row.iter().zip(v.iter()).map(|(a, b)| a * b).sum::<f64>();
                }
            }
        }
        z
    }

    /// Post-activation of every layer; the last entry is the linear output.
    fn activations(&self, x: &Features) -> Vec<Vec<f64>> {
        debug_assert_eq!(x.dim(), self.sizes[0]);
        let offs = self.layer_offsets();
        let n_layers = self.sizes.len() - 1;
        let mut acts: Vec<Vec<f64>> = Vec::with_capacity(n_layers);
        for l in 0..n_layers {
            let (inp, out) = (self.sizes[l], self.sizes[l + 1]);
            let mut z = if l == 0 {
                self.first_layer(x, offs[0], inp, out)
            } else {
                let w = &self.params[offs[l]..offs[l] + out * inp];
                let b = &self.params[offs[l] + out * inp..offs[l] + out * inp + out];
                let prev = &acts[l - 1];
                let mut z = b.to_vec();
                for (j, zj) in z.iter_mut().enumerate() {
                    let row = &w[j * inp..(j + 1) * inp];
                    *zj += row.iter().zip(prev.iter()).map(|(a, b)| a * b).sum::<f64>();
                }
                z
            };
            if l + 1 < n_layers {
                for zj in z.iter_mut() {
                    if *zj < 0.0 {
                        *zj = 0.0;
                    }
                }
            }
            acts.push(z);
        }
        acts
    }

    pub fn forward(&self, x: &Features) -> Vec<f64> {
        self.activations(x).pop().unwrap()
    }

    /// Accumulate parameter gradients for `output_grad` (the gradient of the
    /// loss with respect to each output) into `grad`.
    pub fn backward(&self, x: &Features, output_grad: &[f64], grad: &mut [f64]) {
        debug_assert_eq!(grad.len(), self.params.len());
        debug_assert_eq!(output_grad.len(), self.n_outputs());
        let acts = self.activations(x);
        let offs = self.layer_offsets();
        let n_layers = self.sizes.len() - 1;

        let mut delta = output_grad.to_vec();
        for l in (0..n_layers).rev() {
            let (inp, out) = (self.sizes[l], self.sizes[l + 1]);
            let w_off = offs[l];
            let b_off = w_off + out * inp;
            // Bias gradients.
            for j in 0..out {
                grad[b_off + j] += delta[j];
            }
            // Weight gradients.
            if l == 0 {
                match x {
                    Features::Sparse { indices, .. } => {
                        for &i in indices {
                            for (j, dj) in delta.iter().enumerate() {
                                grad[w_off + j * inp + i] += dj;
                            }
                        }
                    }
                    Features::Dense(v) => {
                        for (j, dj) in delta.iter().enumerate() {
                            let row = &mut grad[w_off + j * inp..w_off + (j + 1) * inp];
                            for (g, xv) in row.iter_mut().zip(v.iter()) {
                                *g += dj * xv;
                            }
                        }
                    }
                }
            } else {
                let prev = &acts[l - 1];
                for (j, dj) in delta.iter().enumerate() {
                    let row = &mut grad[w_off + j * inp..w_off + (j + 1) * inp];
                    for (g, a) in row.iter_mut().zip(prev.iter()) {
                        *g += dj * a;
                    }
                }
            }
            // Propagate to the previous hidden layer through the rectifier.
            if l > 0 {
                let w = &self.params[w_off..w_off + out * inp];
                let prev = &acts[l - 1];
                let mut next_delta = vec![0.0; inp];
                for (j, dj) in delta.iter().enumerate() {
                    if *dj == 0.0 {
                        continue;
                    }
                    let row = &w[j * inp..(j + 1) * inp];
                    for (nd, wv) in next_delta.iter_mut().zip(row.iter()) {
                        *nd += dj * wv;
                    }
                }
                for (nd, a) in next_delta.iter_mut().zip(prev.iter()) {
                    if *a <= 0.0 {
                        *nd = 0.0;
                    }
                }
                delta = next_delta;
            }
        }
    }
}
