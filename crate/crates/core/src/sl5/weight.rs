use std::fmt;
use std::str::FromStr;

/// Weight in fundamental coordinates `(n_1, n_2, n_3, n_4)`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub [i64; 4]);

impl Weight {
    pub const ZERO: Weight = Weight([0; 4]);

    pub fn new(n1: i64, n2: i64, n3: i64, n4: i64) -> Self {
        Weight([n1, n2, n3, n4])
    }

    /// From ε-coordinates: `n_i = μ_i − μ_{i+1}`.
    pub fn from_epsilon(mu: [i64; 5]) -> Self {
        Weight([mu[0] - mu[1], mu[1] - mu[2], mu[2] - mu[3], mu[3] - mu[4]])
    }

    /// ε-representative with `μ_5 = 0`.
    pub fn to_epsilon(self) -> [i64; 5] {
        let n = self.0;
        [
            n[0] + n[1] + n[2] + n[3],
            n[1] + n[2] + n[3],
            n[2] + n[3],
            n[3],
            0,
        ]
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&n| n >= 0)
    }

    pub fn level(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(self, o: Weight) -> Weight {
        Weight(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn sub(self, o: Weight) -> Weight {
        Weight(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }

    /// Weight of the dual module's highest weight: `(n_4, n_3, n_2, n_1)`.
    pub fn dual(self) -> Weight {
        let n = self.0;
        Weight([n[3], n[2], n[1], n[0]])
    }

    /// Image under the longest Weyl group element: `−dual`.
    pub fn longest_element(self) -> Weight {
        let d = self.dual();
        Weight(d.0.map(|x| -x))
    }

    /// Simple root `α_i` (0-based) in fundamental coordinates (a Cartan matrix row).
    pub fn simple_root(i: usize) -> Weight {
        let mut n = [0; 4];
        n[i] = 2;
        if i > 0 {
            n[i - 1] = -1;
        }
        if i < 3 {
            n[i + 1] = -1;
        }
        Weight(n)
    }

    /// Height of `λ − μ` in simple roots, when `λ − μ` is in the root lattice.
    pub fn depth_below(self, top: Weight) -> Option<i64> {
        let a = top.to_epsilon();
        let b = self.to_epsilon();
        let d: [i64; 5] = std::array::from_fn(|i| a[i] - b[i]);
        let total: i64 = d.iter().sum();
        if total % 5 != 0 {
            return None;
        }
        let shift = total / 5;
        // coefficients c_i of α_i = ε_i − ε_{i+1}: c_i = Σ_{k≤i} (d_k − shift)
        let mut c = 0;
        let mut h = 0;
        for k in 0..4 {
            c += d[k] - shift;
            h += c;
        }
        Some(h)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0;
        write!(f, "({},{},{},{})", n[0], n[1], n[2], n[3])
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("expected four comma-separated integers, got {0:?}")]
pub struct ParseWeightError(pub String);

impl FromStr for Weight {
    type Err = ParseWeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Vec<i64> = t
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| ParseWeightError(s.to_string()))?;
        <[i64; 4]>::try_from(parts)
            .map(Weight)
            .map_err(|_| ParseWeightError(s.to_string()))
    }
}

/// Weyl dimension formula `Π_{i≤j} (Σ_{k=i..j} (n_k + 1)) / (j − i + 1)`.
pub fn weyl_dim(lambda: Weight) -> u64 {
    assert!(lambda.is_dominant(), "weyl_dim needs a dominant weight");
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..4 {
        for j in i..4 {
            let s: i64 = (i..=j).map(|k| lambda.0[k] + 1).sum();
            num *= s as u128;
            den *= (j - i + 1) as u128;
        }
    }
    (num / den) as u64
}

/// All dominant weights with `Σ n_i ≤ bound`, by level then lexicographically.
pub fn dominant_weights(bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    for a in 0..=bound {
        for b in 0..=bound - a {
            for c in 0..=bound - a - b {
                for d in 0..=bound - a - b - c {
                    out.push(Weight([a, b, c, d]));
                }
            }
        }
    }
    out.sort_by_key(|w| (w.level(), w.0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        assert_eq!(weyl_dim(Weight::ZERO), 1);
        assert_eq!(weyl_dim(Weight::new(1, 0, 0, 1)), 24);
        assert_eq!(weyl_dim(Weight::new(1, 1, 0, 0)), 40);
        assert_eq!(weyl_dim(Weight::new(0, 1, 0, 0)), 10);
        assert_eq!(weyl_dim(Weight::new(3, 0, 0, 0)), 35);
    }

    #[test]
    fn epsilon_roundtrip() {
        let w = Weight::new(2, 0, 1, 3);
        assert_eq!(Weight::from_epsilon(w.to_epsilon()), w);
        assert_eq!(Weight::from_epsilon([1, 1, 1, 1, 1]), Weight::ZERO);
    }

    #[test]
    fn parse() {
        assert_eq!(
            "1,0,0,2".parse::<Weight>().unwrap(),
            Weight::new(1, 0, 0, 2)
        );
        assert!("1,0".parse::<Weight>().is_err());
    }

    #[test]
    fn depth() {
        let top = Weight::new(1, 0, 0, 0);
        assert_eq!(Weight::new(-1, 1, 0, 0).depth_below(top), Some(1));
        assert_eq!(Weight::new(0, 0, 0, -1).depth_below(top), Some(4));
        assert_eq!(Weight::new(0, 0, 0, 0).depth_below(top), None);
    }

    #[test]
    fn dominant_count() {
        assert_eq!(dominant_weights(4).len(), 70);
    }
}
