use std::collections::BTreeMap;
use std::fmt;

use super::Rational;

/// Finite formal linear combination `Σ c_k · k` with nonzero rational
/// coefficients, keyed by an ordered basis label.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, Rational::ONE)
    }

    pub fn term(k: K, c: Rational) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(terms: I) -> Self {
        let mut out = Self::new();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, Rational)> {
        self.terms.into_iter()
    }

    pub fn get(&self, k: &K) -> Rational {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, k: K, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &LinComb<K>) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), c * v);
        }
    }

    pub fn add_assign(&mut self, other: &LinComb<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &LinComb<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), -v);
        }
    }

    pub fn plus(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn minus(&self, other: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn scale(&self, c: &Rational) -> LinComb<K> {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn neg(&self) -> LinComb<K> {
        self.scale(&-Rational::ONE)
    }

    /// Applies a linear map given on basis labels.
    pub fn map_linear<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<J>) -> LinComb<J> {
        let mut out = LinComb::new();
        for (k, c) in &self.terms {
            out.add_scaled(c, &f(k));
        }
        out
    }

    /// Keeps only terms whose label satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> LinComb<K> {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})·{k:?}")?;
        }
        Ok(())
    }
}
