use std::sync::{Arc, RwLock};

use super::groebner::groebner_basis;
use super::{Field, GroebnerBasis, Monomial, MonomialOrder, OracleError, SparsePolynomial, Tiebreak};

/// An ideal given by generators, with reduced Gröbner bases cached per order.
pub struct IdealHandle<F: Field> {
    field: F,
    nvars: usize,
    generators: Vec<SparsePolynomial<F>>,
    default_order: MonomialOrder,
    cache: RwLock<Vec<(MonomialOrder, Arc<GroebnerBasis<F>>)>>,
}

impl<F: Field> Clone for IdealHandle<F> {
    fn clone(&self) -> Self {
        Self {
            field: self.field,
            nvars: self.nvars,
            generators: self.generators.clone(),
            default_order: self.default_order.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl<F: Field> std::fmt::Debug for IdealHandle<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdealHandle").field("nvars", &self.nvars).field("generators", &self.generators).finish()
    }
}

impl<F: Field> IdealHandle<F> {
    /// Ideal generated by `generators`; zero polynomials are dropped. The
    /// default order is degrevlex.
    pub fn new(field: F, nvars: usize, generators: Vec<SparsePolynomial<F>>) -> Result<Self, OracleError> {
        for g in &generators {
            if g.field() != field {
                return Err(OracleError::FieldMismatch(field.tag(), g.field().tag()));
            }
            if g.nvars() != nvars {
                return Err(OracleError::ArityMismatch(nvars, g.nvars()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self { field, nvars, generators, default_order: MonomialOrder::DegRevLex, cache: RwLock::new(Vec::new()) })
    }

    /// Replaces the order used by membership and equality tests.
    pub fn with_order(mut self, order: MonomialOrder) -> Result<Self, OracleError> {
        order.check_arity(self.nvars).map_err(OracleError::OrderMismatch)?;
        self.default_order = normalize(order);
        Ok(self)
    }

    pub fn field(&self) -> F {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[SparsePolynomial<F>] {
        &self.generators
    }

    pub fn default_order(&self) -> &MonomialOrder {
        &self.default_order
    }

    /// Reduced Gröbner basis under `order`, computed at most once per order.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis<F>>, OracleError> {
        if let Some(gb) = self.cached(order) {
            return Ok(gb);
        }
        let gb = Arc::new(groebner_basis(self.field, self.nvars, &self.generators, order)?);
        let mut cache = self.cache.write().expect("cache lock");
        if let Some((_, hit)) = cache.iter().find(|(o, _)| o == order) {
            return Ok(hit.clone());
        }
        cache.push((order.clone(), gb.clone()));
        Ok(gb)
    }

    pub fn basis(&self) -> Result<Arc<GroebnerBasis<F>>, OracleError> {
        self.groebner(&self.default_order.clone())
    }

    fn cached(&self, order: &MonomialOrder) -> Option<Arc<GroebnerBasis<F>>> {
        let cache = self.cache.read().expect("cache lock");
        cache.iter().find(|(o, _)| o == order).map(|(_, gb)| gb.clone())
    }

    fn seed(&self, gb: GroebnerBasis<F>) {
        let mut cache = self.cache.write().expect("cache lock");
        if !cache.iter().any(|(o, _)| o == gb.order()) {
            cache.push((gb.order().clone(), Arc::new(gb)));
        }
    }

    fn check(&self, other: &Self) -> Result<(), OracleError> {
        if self.field != other.field {
            return Err(OracleError::FieldMismatch(self.field.tag(), other.field.tag()));
        }
        if self.nvars != other.nvars {
            return Err(OracleError::ArityMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn contains(&self, f: &SparsePolynomial<F>) -> Result<bool, OracleError> {
        self.basis()?.contains(f)
    }

    pub fn contains_under(&self, f: &SparsePolynomial<F>, order: &MonomialOrder) -> Result<bool, OracleError> {
        self.groebner(order)?.contains(f)
    }

    pub fn is_subset_of(&self, other: &Self) -> Result<bool, OracleError> {
        self.check(other)?;
        let gb = other.basis()?;
        for g in &self.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality by comparing reduced bases under this handle's order.
    pub fn same_ideal(&self, other: &Self) -> Result<bool, OracleError> {
        self.check(other)?;
        let order = self.default_order.clone();
        Ok(*self.groebner(&order)? == *other.groebner(&order)?)
    }

    pub fn is_unit(&self) -> Result<bool, OracleError> {
        Ok(self.basis()?.is_unit())
    }

    fn derived(&self, generators: Vec<SparsePolynomial<F>>) -> Self {
        Self {
            field: self.field,
            nvars: self.nvars,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            default_order: self.default_order.clone(),
            cache: RwLock::new(Vec::new()),
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self, OracleError> {
        self.check(other)?;
        Ok(self.derived(self.generators.iter().chain(&other.generators).cloned().collect()))
    }

    /// `self + (extra)`.
    pub fn with_generators(&self, extra: &[SparsePolynomial<F>]) -> Result<Self, OracleError> {
        let other = Self::new(self.field, self.nvars, extra.to_vec())?;
        self.sum(&other)
    }

    pub fn product(&self, other: &Self) -> Result<Self, OracleError> {
        self.check(other)?;
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a * b);
            }
        }
        Ok(self.derived(gens))
    }

    pub fn pow(&self, e: u32) -> Result<Self, OracleError> {
        let mut acc = self.derived(vec![SparsePolynomial::one(self.field, self.nvars)]);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ k[x_{k+1}, …]` under the block order with the first `k` variables
    /// lex-first and the rest graded by this handle's weights.
    pub fn eliminate(&self, k: usize) -> Result<Self, OracleError> {
        if k > self.nvars {
            return Err(OracleError::OrderMismatch(format!("cannot eliminate {k} of {} variables", self.nvars)));
        }
        let mut weights = vec![1; k];
        weights.extend_from_slice(&self.default_order.grading_weights(self.nvars)[k..]);
        self.eliminate_with(&MonomialOrder::Elimination { block: k, weights })
    }

    /// Elimination under an explicit block order; its block must be the
    /// eliminated prefix.
    pub fn eliminate_with(&self, order: &MonomialOrder) -> Result<Self, OracleError> {
        let (k, weights) = match order {
            MonomialOrder::Elimination { block, weights } => (*block, weights),
            other => return Err(OracleError::OrderMismatch(format!("{other:?} is not a block elimination order"))),
        };
        order.check_arity(self.nvars).map_err(OracleError::OrderMismatch)?;
        let gb = self.groebner(order)?;
        let kept: Vec<SparsePolynomial<F>> = gb.polynomials().iter().filter_map(|g| g.drop_front(k)).collect();
        let tail = normalize(MonomialOrder::weighted(weights[k..].to_vec()));
        let out = Self {
            field: self.field,
            nvars: self.nvars - k,
            generators: kept.clone(),
            default_order: tail.clone(),
            cache: RwLock::new(Vec::new()),
        };
        out.seed(GroebnerBasis::from_reduced(self.field, out.nvars, tail, kept));
        Ok(out)
    }

    /// `I ∩ J` as the elimination of `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Self) -> Result<Self, OracleError> {
        self.check(other)?;
        let (f, n) = (self.field, self.nvars);
        let t = SparsePolynomial::var(f, n + 1, 0);
        let one_minus_t = &SparsePolynomial::one(f, n + 1) - &t;
        let mut gens = Vec::new();
        for g in self.basis()?.polynomials() {
            gens.push(&t * &g.extend_front(1));
        }
        for g in other.basis()?.polynomials() {
            gens.push(&one_minus_t * &g.extend_front(1));
        }
        let mut weights = vec![0];
        weights.extend(self.default_order.grading_weights(n));
        let lifted = Self::new(f, n + 1, gens)?;
        let out = lifted.eliminate_with(&MonomialOrder::Elimination { block: 1, weights })?;
        Ok(self.adopt(out))
    }

    /// Moves a derived ideal onto this handle's default order, keeping any
    /// basis already known under that order.
    fn adopt(&self, mut out: Self) -> Self {
        out.default_order = self.default_order.clone();
        out
    }

    /// `I : f`, computed as `(I ∩ (f)) / f`.
    pub fn colon(&self, f: &SparsePolynomial<F>) -> Result<Self, OracleError> {
        if f.is_zero() {
            return Err(OracleError::ZeroDivisor);
        }
        let principal = Self::new(self.field, self.nvars, vec![f.clone()])?;
        if f.is_constant() {
            return Ok(self.clone());
        }
        let meet = self.intersect(&principal)?;
        let gens =
            meet.generators.iter().map(|g| g.div_exact(f).expect("generator of I ∩ (f) is a multiple of f")).collect();
        Ok(self.derived(gens))
    }

    /// `I : f^∞` together with the least `N` with `I : f^N = I : f^{N+1}`.
    pub fn saturate(&self, f: &SparsePolynomial<F>) -> Result<(Self, u32), OracleError> {
        let mut cur = self.clone();
        let mut n = 0;
        loop {
            let next = cur.colon(f)?;
            if next.same_ideal(&cur)? {
                return Ok((cur, n));
            }
            cur = next;
            n += 1;
        }
    }
}

/// Degrevlex is the all-ones weighted order; keep one spelling so cache keys
/// line up.
fn normalize(order: MonomialOrder) -> MonomialOrder {
    match order {
        MonomialOrder::Weighted { weights, tiebreak: Tiebreak::DegRevLex } if weights.iter().all(|&w| w == 1) => {
            MonomialOrder::DegRevLex
        }
        other => other,
    }
}

/// Kernel of `x_i ↦ images[i]`, each image a single term `c·t^w` in one
/// variable `t`. The result is graded by the image exponents.
pub fn ring_map_kernel<F: Field>(field: F, images: &[SparsePolynomial<F>]) -> Result<IdealHandle<F>, OracleError> {
    let n = images.len();
    let mut weights = vec![1];
    let mut gens = Vec::with_capacity(n);
    for (i, img) in images.iter().enumerate() {
        if img.field() != field {
            return Err(OracleError::FieldMismatch(field.tag(), img.field().tag()));
        }
        if img.nvars() != 1 || img.len() != 1 {
            return Err(OracleError::NonTermImage(i));
        }
        let (m, c) = img.terms().next().expect("one term");
        let w = m.exps()[0];
        weights.push(w as u64);
        let mut e = vec![0; n + 1];
        e[0] = w;
        let x = SparsePolynomial::var(field, n + 1, i + 1);
        let image = SparsePolynomial::monomial(field, Monomial::new(e), c.clone());
        gens.push(&x - &image);
    }
    IdealHandle::new(field, n + 1, gens)?.eliminate_with(&MonomialOrder::Elimination { block: 1, weights })
}
