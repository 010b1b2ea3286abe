//! Truncated power series around 0.

use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, PartialEq)]
pub struct Taylor(pub Vec<f64>);

impl Taylor {
    pub fn zero(order: usize) -> Self {
        Taylor(vec![0.0; order + 1])
    }

    pub fn constant(c: f64, order: usize) -> Self {
        let mut t = Self::zero(order);
        t.0[0] = c;
        t
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> f64) -> Self {
        Taylor((0..=order).map(f).collect())
    }

    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn scale(&self, c: f64) -> Self {
        Taylor(self.0.iter().map(|v| v * c).collect())
    }

    pub fn abs(&self) -> Self {
        Taylor(self.0.iter().map(|v| v.abs()).collect())
    }

    /// `exp(f)` by `g' = f' g`.
    pub fn exp(&self) -> Self {
        let n = self.order();
        let mut g = vec![0.0; n + 1];
        g[0] = self.0[0].exp();
        for m in 1..=n {
            let mut s = 0.0;
            for k in 1..=m {
                s += k as f64 * self.0[k] * g[m - k];
            }
            g[m] = s / m as f64;
        }
        Taylor(g)
    }
}

impl Add for &Taylor {
    type Output = Taylor;
    fn add(self, o: &Taylor) -> Taylor {
        Taylor(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Taylor {
    type Output = Taylor;
    fn sub(self, o: &Taylor) -> Taylor {
        Taylor(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Mul for &Taylor {
    type Output = Taylor;
    fn mul(self, o: &Taylor) -> Taylor {
        let n = self.order().min(o.order());
        Taylor::from_fn(n, |m| (0..=m).map(|k| self.0[k] * o.0[m - k]).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_linear() {
        let e = Taylor(vec![0.0, 1.0, 0.0, 0.0]).exp();
        assert_eq!(e.0, vec![1.0, 1.0, 0.5, 1.0 / 6.0]);
    }

    #[test]
    fn product() {
        let a = Taylor(vec![1.0, 1.0, 0.0]);
        assert_eq!((&a * &a).0, vec![1.0, 2.0, 1.0]);
    }
}
