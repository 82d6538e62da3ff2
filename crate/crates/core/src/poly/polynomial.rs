use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, Monomial, MonomialOrder, OracleError};

/// A polynomial in `nvars` variables with coefficients in `F`.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial<F: Field> {
    field: F,
    nvars: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> SparsePolynomial<F> {
    pub fn zero(field: F, nvars: usize) -> Self {
        Self { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: F, nvars: usize, c: F::Elem) -> Self {
        Self::monomial(field, Monomial::one(nvars), c)
    }

    pub fn one(field: F, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(field: F, nvars: usize, i: usize) -> Self {
        Self::monomial(field, Monomial::var(nvars, i, 1), field.one())
    }

    pub fn monomial(field: F, m: Monomial, c: F::Elem) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        if !field.is_zero(&c) {
            terms.insert(m, c);
        }
        Self { field, nvars, terms }
    }

    /// Sums like terms and drops zeros.
    pub fn from_terms(field: F, nvars: usize, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "exponent vector length");
            p.add_term(m, &c);
        }
        p
    }

    /// `x^plus - x^minus`.
    pub fn binomial(field: F, plus: &[u32], minus: &[u32]) -> Self {
        let n = plus.len();
        Self::from_terms(
            field,
            n,
            [
                (Monomial::new(plus.iter().copied()), field.one()),
                (Monomial::new(minus.iter().copied()), field.neg(&field.one())),
            ],
        )
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order (lexicographic ascending on exponent vectors).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, F::Elem)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &F::Elem)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has the same weighted degree.
    pub fn is_homogeneous(&self, weights: &[u64]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    fn add_term(&mut self, m: Monomial, c: &F::Elem) {
        if self.field.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = self.field.add(v, c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<(), OracleError> {
        if self.field != other.field {
            return Err(OracleError::FieldMismatch(self.field.tag(), other.field.tag()));
        }
        if self.nvars != other.nvars {
            return Err(OracleError::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, OracleError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, OracleError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, OracleError> {
        self.check_compatible(other)?;
        let f = self.field;
        let mut out = Self::zero(f, self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &f.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = self.field;
        if f.is_zero(c) {
            return Self::zero(f, self.nvars);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), f.mul(v, c))).collect();
        Self { field: f, nvars: self.nvars, terms }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        let terms = self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect();
        Self { field: self.field, nvars: self.nvars, terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.field, self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => {
                let inv = self.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Substitutes `x_i ↦ images[i]`; the result lives in the images' ring.
    pub fn substitute(&self, images: &[Self]) -> Result<Self, OracleError> {
        if images.len() != self.nvars {
            return Err(OracleError::ArityMismatch(self.nvars, images.len()));
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => 0,
        };
        for img in images {
            if img.field != self.field {
                return Err(OracleError::FieldMismatch(self.field.tag(), img.field.tag()));
            }
            if img.nvars != target {
                return Err(OracleError::ArityMismatch(target, img.nvars));
            }
        }
        let mut out = Self::zero(self.field, target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.field, target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = &t * &images[i].pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Same polynomial with `k` new variables placed before the existing ones.
    pub fn extend_front(&self, k: usize) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.extend_front(k), c.clone())).collect();
        Self { field: self.field, nvars: self.nvars + k, terms }
    }

    /// Drops the first `k` variables, or `None` if any of them occurs.
    pub fn drop_front(&self, k: usize) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.drop_front(k)?, c.clone());
        }
        Some(Self { field: self.field, nvars: self.nvars - k, terms })
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        if g.is_zero() || self.check_compatible(g).is_err() {
            return None;
        }
        let order = MonomialOrder::DegRevLex;
        let (lm, lc) = g.leading_term(&order)?;
        let (lm, lc_inv) = (lm.clone(), self.field.inv(lc)?);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.field, self.nvars);
        while let Some((m, c)) = rem.leading_term(&order) {
            let q_m = m.div(&lm)?;
            let q_c = self.field.mul(c, &lc_inv);
            let step = g.mul_monomial(&q_m).scale(&q_c);
            rem = &rem - &step;
            quot.add_term(q_m, &q_c);
        }
        Some(quot)
    }

    /// Wire form: field tag, `|`, then terms descending under `order`.
    pub fn to_wire(&self, order: &MonomialOrder) -> String {
        let body = if self.is_zero() {
            "0".to_string()
        } else {
            self.sorted_terms(order)
                .iter()
                .map(|(m, c)| format!("{} {:?}", self.field.format_elem(c), m))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("{}|{}", self.field.tag(), body)
    }

    pub fn from_wire(field: F, nvars: usize, s: &str) -> Result<Self, OracleError> {
        let (tag, body) = s.split_once('|').ok_or_else(|| OracleError::Parse(format!("missing field tag in {s:?}")))?;
        if tag != field.tag() {
            return Err(OracleError::FieldMismatch(tag.to_string(), field.tag()));
        }
        let body = body.trim();
        if body == "0" {
            return Ok(Self::zero(field, nvars));
        }
        let mut p = Self::zero(field, nvars);
        let mut rest = body;
        while !rest.is_empty() {
            let (coef, tail) =
                rest.split_once(' ').ok_or_else(|| OracleError::Parse(format!("dangling coefficient in {s:?}")))?;
            let c = field.parse_elem(coef).ok_or_else(|| OracleError::Parse(format!("bad coefficient {coef:?}")))?;
            let tail = tail.trim_start();
            let close = tail
                .find(']')
                .filter(|_| tail.starts_with('['))
                .ok_or_else(|| OracleError::Parse(format!("bad exponent vector in {s:?}")))?;
            let exps = tail[1..close]
                .split(',')
                .map(|e| e.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| OracleError::Parse(e.to_string()))?;
            if exps.len() != nvars {
                return Err(OracleError::ArityMismatch(nvars, exps.len()));
            }
            p.add_term(Monomial::new(exps), &c);
            rest = tail[close + 1..].trim_start();
        }
        Ok(p)
    }
}

impl<F: Field> fmt::Display for SparsePolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_wire(&MonomialOrder::Lex))
    }
}

impl<F: Field> fmt::Debug for SparsePolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<F: Field> Add for &SparsePolynomial<F> {
    type Output = SparsePolynomial<F>;
    fn add(self, rhs: Self) -> SparsePolynomial<F> {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Sub for &SparsePolynomial<F> {
    type Output = SparsePolynomial<F>;
    fn sub(self, rhs: Self) -> SparsePolynomial<F> {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Mul for &SparsePolynomial<F> {
    type Output = SparsePolynomial<F>;
    fn mul(self, rhs: Self) -> SparsePolynomial<F> {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Neg for &SparsePolynomial<F> {
    type Output = SparsePolynomial<F>;
    fn neg(self) -> SparsePolynomial<F> {
        let f = self.field;
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f.neg(c))).collect();
        SparsePolynomial { field: f, nvars: self.nvars, terms }
    }
}
