//! Uniform replay over a fixed-capacity ring buffer.

use rand::Rng;

use crate::error::Error;
use crate::seeding::Prng;
use crate::Result;

/// One stored interaction. The discount is the transition's effective
/// bootstrap factor: 0 on termination, the agent's discount otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct Transition {
    pub obs: Vec<f64>,
    pub action: usize,
    pub reward: f64,
    pub next_obs: Vec<f64>,
    pub discount: f64,
}

#[derive(Debug, Clone)]
pub struct ReplayBuffer {
    capacity: usize,
    data: Vec<Transition>,
    next: usize,
}

impl ReplayBuffer {
    pub fn new(capacity: usize) -> Self {
        assert!(capacity > 0, "replay capacity must be positive");
        ReplayBuffer { capacity, data: Vec::new(), next: 0 }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Append, evicting the oldest transition once at capacity.
    pub fn add(&mut self, t: Transition) {
        if self.data.len() < self.capacity {
            self.data.push(t);
        } else {
            self.data[self.next] = t;
            self.next = (self.next + 1) % self.capacity;
        }
    }

    /// `m` uniform draws with replacement over current contents.
    pub fn sample(&self, m: usize, rng: &mut Prng) -> Result<Vec<&Transition>> {
        if self.data.is_empty() {
            return Err(Error::CannotSample);
        }
        Ok((0..m)
            .map(|_| &self.data[rng.gen_range(0..self.data.len())])
            .collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = &Transition> {
        self.data.iter()
    }
}
