//! SGD and Adam over flat parameter vectors.

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OptimizerKind {
    Sgd,
    Adam { beta1: f64, beta2: f64, eps: f64 },
}

impl OptimizerKind {
    pub fn adam_default() -> Self {
        OptimizerKind::Adam { beta1: 0.9, beta2: 0.999, eps: 1e-8 }
    }
}

#[derive(Debug, Clone)]
pub struct Optimizer {
    kind: OptimizerKind,
    lr: f64,
    t: u64,
    m: Vec<f64>,
    v: Vec<f64>,
}

impl Optimizer {
    pub fn new(kind: OptimizerKind, lr: f64, n_params: usize) -> Self {
        let state = match kind {
            OptimizerKind::Sgd => 0,
            OptimizerKind::Adam { .. } => n_params,
        };
        Optimizer { kind, lr, t: 0, m: vec![0.0; state], v: vec![0.0; state] }
    }

    pub fn sgd(lr: f64) -> Self {
        Optimizer::new(OptimizerKind::Sgd, lr, 0)
    }

    pub fn adam(lr: f64, n_params: usize) -> Self {
        Optimizer::new(OptimizerKind::adam_default(), lr, n_params)
    }

    pub fn learning_rate(&self) -> f64 {
        self.lr
    }

    /// One descent step on `params` along `grads` (gradients of the loss).
    pub fn step(&mut self, params: &mut [f64], grads: &[f64]) {
        assert_eq!(params.len(), grads.len(), "parameter/gradient shape mismatch");
        match self.kind {
            OptimizerKind::Sgd => {
                for (p, g) in params.iter_mut().zip(grads.iter()) {
                    *p -= self.lr * g;
                }
            }
            OptimizerKind::Adam { beta1, beta2, eps } => {
                assert_eq!(self.m.len(), params.len(), "optimizer sized for another net");
                self.t += 1;
                let bc1 = 1.0 - beta1.powi(self.t as i32);
                let bc2 = 1.0 - beta2.powi(self.t as i32);
                for i in 0..params.len() {
                    let g = grads[i];
                    self.m[i] = beta1 * self.m[i] + (1.0 - beta1) * g;
                    self.v[i] = beta2 * self.v[i] + (1.0 - beta2) * g * g;
                    let m_hat = self.m[i] / bc1;
                    let v_hat = self.v[i] / bc2;
                    params[i] -= self.lr * m_hat / (v_hat.sqrt() + eps);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sgd_descends() {
        let mut opt = Optimizer::sgd(0.1);
        let mut p = vec![0.0];
        opt.step(&mut p, &[1.0]);
        assert_eq!(p[0], -0.1);
    }

    #[test]
    fn zero_gradient_leaves_params_unchanged() {
        for mut opt in [Optimizer::sgd(0.5), Optimizer::adam(0.5, 3)] {
            let mut p = vec![1.0, -2.0, 0.25];
            opt.step(&mut p, &[0.0, 0.0, 0.0]);
            assert_eq!(p, vec![1.0, -2.0, 0.25]);
        }
    }

    #[test]
    fn adam_first_step_closed_form() {
        // With bias correction, the first step is -lr * g / (|g| + eps).
        let lr = 0.01;
        let eps = 1e-8;
        for g in [3.0, -0.2, 1e-3] {
            let mut opt = Optimizer::adam(lr, 1);
            let mut p = vec![0.0];
            opt.step(&mut p, &[g]);
            let expect = -lr * g / (g.abs() + eps);
            assert!((p[0] - expect).abs() < 1e-15);
            assert!((p[0].abs() - lr).abs() < 1e-6, "first step magnitude ~ lr");
        }
    }

    #[test]
    #[should_panic(expected = "shape mismatch")]
    fn shape_mismatch_panics() {
        let mut opt = Optimizer::sgd(0.1);
        let mut p = vec![0.0, 1.0];
        opt.step(&mut p, &[1.0]);
    }
}
