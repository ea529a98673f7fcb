//! Finite formal linear combinations with coefficients in Q(v,t).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ratfield::RatFunc;

/// A finite sum `Σ c_k k` with nonzero coefficients.
#[derive(Clone, Debug)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, RatFunc>,
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn single(k: K, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn basis(k: K) -> Self {
        Self::single(k, RatFunc::one())
    }

    pub fn add_term(&mut self, k: K, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
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

    pub fn coeff(&self, k: &K) -> RatFunc {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &RatFunc)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Extend a map on basis elements linearly.
    pub fn apply<L: Ord + Clone>(&self, f: impl Fn(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            for (l, d) in f(k).terms {
                out.add_term(l, c * &d);
            }
        }
        out
    }

    /// Extend a map `basis -> scalar` linearly.
    pub fn eval(&self, f: impl Fn(&K) -> RatFunc) -> RatFunc {
        self.terms.iter().map(|(k, c)| c * &f(k)).sum()
    }
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> FromIterator<(K, RatFunc)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, RatFunc)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + Clone> PartialEq for LinComb<K> {
    fn eq(&self, o: &Self) -> bool {
        self.terms.len() == o.terms.len() && self.terms.iter().all(|(k, c)| o.terms.get(k).is_some_and(|d| c == d))
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, o: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, o: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        self.scale(&RatFunc::from_int(-1))
    }
}

impl<K: Ord + Clone> Mul<&RatFunc> for &LinComb<K> {
    type Output = LinComb<K>;
    fn mul(self, c: &RatFunc) -> LinComb<K> {
        self.scale(c)
    }
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {k}")?;
        }
        Ok(())
    }
}
