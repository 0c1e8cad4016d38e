use std::fmt;

/// Number of even coordinates `x_1..x_5`.
pub const N: usize = 5;

/// Monomial `x^α = x_1^{α_1} ··· x_5^{α_5}` (indices are 0-based in code).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial5(pub [u8; N]);

impl Monomial5 {
    pub const ONE: Monomial5 = Monomial5([0; N]);

    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Monomial5(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial5) -> Monomial5 {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial5(e)
    }

    /// `∂_i x^α = α_i x^{α - e_i}`.
    pub fn derivative(&self, i: usize) -> Option<(i64, Monomial5)> {
        if self.0[i] == 0 {
            return None;
        }
        let mut e = self.0;
        e[i] -= 1;
        Some((self.0[i] as i64, Monomial5(e)))
    }

    /// All monomials of total degree `d`, in lexicographic order of exponents.
    pub fn of_degree(d: u32) -> Vec<Monomial5> {
        let mut out = Vec::new();
        let mut cur = [0u8; N];
        fn rec(pos: usize, left: u32, cur: &mut [u8; N], out: &mut Vec<Monomial5>) {
            if pos == N - 1 {
                cur[pos] = left as u8;
                out.push(Monomial5(*cur));
                return;
            }
            for e in 0..=left {
                cur[pos] = e as u8;
                rec(pos + 1, left - e, cur, out);
            }
        }
        rec(0, d, &mut cur, &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Monomial5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == Monomial5::ONE {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The ten unordered index pairs `i < j`, in lexicographic order.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Position of the pair `{i, j}` (`i != j`) in [`PAIRS`], with the sign of
/// the reordering: `d_{ji} = -d_{ij}`.
pub fn pair_index(i: usize, j: usize) -> Option<(usize, i64)> {
    if i == j {
        return None;
    }
    let (a, b, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
    let idx = PAIRS.iter().position(|&p| p == (a, b)).unwrap();
    Some((idx, s))
}

/// Sign of the permutation sorting `idx`, or 0 when an index repeats.
pub fn permutation_sign(idx: &[usize]) -> i64 {
    let mut inversions = 0;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] == idx[b] {
                return 0;
            }
            if idx[a] > idx[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Lookup table for `ε_{ijklm}` over `{0..5}^5`, indexed by base-5 digits.
pub struct EpsilonTable {
    table: Vec<i8>,
}

impl EpsilonTable {
    pub fn build() -> Self {
        let mut table = vec![0i8; 5usize.pow(5)];
        let mut perm = [0usize, 1, 2, 3, 4];
        // Heap's algorithm, sign tracked by swap parity.
        fn heap(k: usize, perm: &mut [usize; 5], sign: &mut i8, table: &mut [i8]) {
            if k == 1 {
                let key = perm.iter().fold(0, |acc, &d| acc * 5 + d);
                table[key] = *sign;
                return;
            }
            heap(k - 1, perm, sign, table);
            for i in 0..k - 1 {
                if k % 2 == 0 {
                    perm.swap(i, k - 1);
                } else {
                    perm.swap(0, k - 1);
                }
                *sign = -*sign;
                heap(k - 1, perm, sign, table);
            }
        }
        let mut sign = 1i8;
        heap(5, &mut perm, &mut sign, &mut table);
        Self { table }
    }

    pub fn get(&self, idx: [usize; 5]) -> i64 {
        let key = idx.iter().fold(0, |acc, &d| acc * 5 + d);
        self.table[key] as i64
    }
}

/// `ε_{ijklm}` from the precomputed table.
pub fn epsilon(idx: [usize; 5]) -> i64 {
    use std::sync::OnceLock;
    static TABLE: OnceLock<EpsilonTable> = OnceLock::new();
    TABLE.get_or_init(EpsilonTable::build).get(idx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_table_matches_inversion_count() {
        let table = EpsilonTable::build();
        let mut nonzero = 0;
        for key in 0..5usize.pow(5) {
            let mut idx = [0usize; 5];
            let mut k = key;
            for slot in idx.iter_mut().rev() {
                *slot = k % 5;
                k /= 5;
            }
            let expect = permutation_sign(&idx);
            assert_eq!(table.get(idx), expect, "{idx:?}");
            if expect != 0 {
                nonzero += 1;
            }
        }
        assert_eq!(nonzero, 120);
    }

    #[test]
    fn sample_epsilons() {
        // ε_{51234} = +1, ε_{41235} = -1, ε_{34512} = +1 (1-based)
        assert_eq!(epsilon([4, 0, 1, 2, 3]), 1);
        assert_eq!(epsilon([3, 0, 1, 2, 4]), -1);
        assert_eq!(epsilon([2, 3, 4, 0, 1]), 1);
        assert_eq!(epsilon([0, 0, 1, 2, 3]), 0);
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial5::of_degree(0).len(), 1);
        assert_eq!(Monomial5::of_degree(1).len(), 5);
        assert_eq!(Monomial5::of_degree(3).len(), 35);
    }
}
