//! Buchberger's algorithm with the Gebauer–Möller pair update and the normal
//! selection strategy.

use std::cmp::Ordering;

use super::{Field, Monomial, MonomialOrder, OracleError, SparsePolynomial};

/// Terms sorted descending under the active order.
type Terms<F> = Vec<(Monomial, <F as Field>::Elem)>;

/// A reduced Gröbner basis: monic, auto-reduced, sorted by leading monomial
/// (largest first).
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<Terms<F>>,
}

impl<F: Field> std::fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.polynomials()).finish()
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn field(&self) -> F {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0][0].0.is_one()
    }

    pub fn polynomials(&self) -> Vec<SparsePolynomial<F>> {
        self.terms.iter().map(|t| to_poly(self.field, self.nvars, t)).collect()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t[0].0)
    }

    /// Normal form of `f`.
    pub fn reduce(&self, f: &SparsePolynomial<F>) -> Result<SparsePolynomial<F>, OracleError> {
        self.check(f)?;
        let refs: Vec<&Terms<F>> = self.terms.iter().collect();
        let r = reduce(self.field, &self.order, f.sorted_terms(&self.order), &refs);
        Ok(to_poly(self.field, self.nvars, &r))
    }

    pub fn contains(&self, f: &SparsePolynomial<F>) -> Result<bool, OracleError> {
        Ok(self.reduce(f)?.is_zero())
    }

    fn check(&self, f: &SparsePolynomial<F>) -> Result<(), OracleError> {
        if f.field() != self.field {
            return Err(OracleError::FieldMismatch(self.field.tag(), f.field().tag()));
        }
        if f.nvars() != self.nvars {
            return Err(OracleError::ArityMismatch(self.nvars, f.nvars()));
        }
        Ok(())
    }

    /// Reduced basis from polynomials already known to form one.
    pub(crate) fn from_reduced(field: F, nvars: usize, order: MonomialOrder, polys: Vec<SparsePolynomial<F>>) -> Self {
        let mut terms: Vec<Terms<F>> = polys.iter().map(|p| p.sorted_terms(&order)).collect();
        terms.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
        Self { field, nvars, order, terms }
    }
}

/// `S(f, g)` for nonzero `f`, `g`, each scaled monic first.
pub fn s_polynomial<F: Field>(
    f: &SparsePolynomial<F>,
    g: &SparsePolynomial<F>,
    order: &MonomialOrder,
) -> SparsePolynomial<F> {
    let field = f.field();
    let a = f.monic(order).sorted_terms(order);
    let b = g.monic(order).sorted_terms(order);
    to_poly(field, f.nvars(), &spoly(field, order, &a, &b))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis<F: Field>(
    field: F,
    nvars: usize,
    gens: &[SparsePolynomial<F>],
    order: &MonomialOrder,
) -> Result<GroebnerBasis<F>, OracleError> {
    buchberger(field, nvars, gens, order, None)
}

pub(crate) fn buchberger<F: Field>(
    field: F,
    nvars: usize,
    gens: &[SparsePolynomial<F>],
    order: &MonomialOrder,
    pick: Option<&mut dyn FnMut(usize) -> usize>,
) -> Result<GroebnerBasis<F>, OracleError> {
    order.check_arity(nvars).map_err(OracleError::OrderMismatch)?;
    for g in gens {
        if g.field() != field {
            return Err(OracleError::FieldMismatch(field.tag(), g.field().tag()));
        }
        if g.nvars() != nvars {
            return Err(OracleError::ArityMismatch(nvars, g.nvars()));
        }
    }
    let mut engine = Engine { field, order, polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let unit = engine.run(gens, pick);
    let terms = if unit { vec![vec![(Monomial::one(nvars), field.one())]] } else { engine.finish() };
    Ok(GroebnerBasis { field, nvars, order: order.clone(), terms })
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sdeg: u64,
}

struct Engine<'a, F: Field> {
    field: F,
    order: &'a MonomialOrder,
    polys: Vec<Terms<F>>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl<F: Field> Engine<'_, F> {
    fn lm(&self, i: usize) -> &Monomial {
        &self.polys[i][0].0
    }

    fn reducers(&self) -> Vec<&Terms<F>> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p).collect()
    }

    /// Returns true as soon as the ideal is seen to be the unit ideal.
    fn run(&mut self, gens: &[SparsePolynomial<F>], mut pick: Option<&mut dyn FnMut(usize) -> usize>) -> bool {
        for g in gens {
            let r = reduce(self.field, self.order, g.sorted_terms(self.order), &self.reducers());
            if self.add(r) {
                return true;
            }
        }
        while !self.pairs.is_empty() {
            let idx = match pick.as_mut() {
                Some(f) => f(self.pairs.len()) % self.pairs.len(),
                None => self.select(),
            };
            let pair = self.pairs.swap_remove(idx);
            let s = spoly(self.field, self.order, &self.polys[pair.i], &self.polys[pair.j]);
            let r = reduce(self.field, self.order, s, &self.reducers());
            if self.add(r) {
                return true;
            }
        }
        false
    }

    /// Normal strategy: least selection degree of the lcm, then least lcm,
    /// then lowest indices.
    fn select(&self) -> usize {
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let c = a
                .sdeg
                .cmp(&b.sdeg)
                .then_with(|| self.order.cmp(&a.lcm, &b.lcm))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if c == Ordering::Less {
                best = k;
            }
        }
        best
    }

    fn add(&mut self, r: Terms<F>) -> bool {
        if r.is_empty() {
            return false;
        }
        if r[0].0.is_one() {
            return true;
        }
        let inv = self.field.inv(&r[0].1).expect("nonzero leading coefficient");
        let r = r.into_iter().map(|(m, c)| (m, self.field.mul(&c, &inv))).collect();
        self.polys.push(r);
        self.active.push(false);
        self.update(self.polys.len() - 1);
        false
    }

    fn update(&mut self, h: usize) {
        let lh = self.lm(h).clone();
        let cand: Vec<(usize, Monomial)> =
            (0..h).filter(|&g| self.active[g]).map(|g| (g, lh.lcm(self.lm(g)))).collect();

        // chain criterion among the new pairs; coprime pairs stay as blockers
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (k, (g, l)) in cand.iter().enumerate() {
            let coprime = lh.is_coprime(self.lm(*g));
            let blocked = cand[k + 1..].iter().any(|(_, l2)| l2.divides(l)) || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !blocked {
                kept.push((*g, l.clone()));
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lh.is_coprime(self.lm(*g)))
            .map(|(g, lcm)| Pair { i: g, j: h, sdeg: self.order.selection_degree(&lcm), lcm })
            .collect();

        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| !(lh.divides(&p.lcm) && lh.lcm(self.lm(p.i)) != p.lcm && lh.lcm(self.lm(p.j)) != p.lcm))
            .collect();
        self.pairs.extend(new_pairs);

        for g in 0..h {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn finish(self) -> Vec<Terms<F>> {
        let mut basis: Vec<Terms<F>> =
            self.polys.into_iter().zip(self.active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
        basis.sort_by(|a, b| self.order.cmp(&b[0].0, &a[0].0));
        let mut out = Vec::with_capacity(basis.len());
        for k in 0..basis.len() {
            let others: Vec<&Terms<F>> = basis.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p).collect();
            let head = basis[k][0].clone();
            let tail = reduce(self.field, self.order, basis[k][1..].to_vec(), &others);
            let mut p = Vec::with_capacity(tail.len() + 1);
            p.push(head);
            p.extend(tail);
            out.push(p);
        }
        out
    }
}

fn to_poly<F: Field>(field: F, nvars: usize, t: &Terms<F>) -> SparsePolynomial<F> {
    SparsePolynomial::from_terms(field, nvars, t.iter().cloned())
}

/// `f - c·m·g`, with `f` and `g` descending.
fn sub_mul<F: Field>(
    field: F,
    order: &MonomialOrder,
    f: &[(Monomial, F::Elem)],
    c: &F::Elem,
    m: &Monomial,
    g: &[(Monomial, F::Elem)],
) -> Terms<F> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut fi = f.iter().peekable();
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), field.mul(gc, c))).peekable();
    loop {
        match (fi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(fi.next().unwrap().clone()),
            (None, Some(_)) => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, field.neg(&gc)));
            }
            (Some((fm, _)), Some((gm, _))) => match order.cmp(fm, gm) {
                Ordering::Greater => out.push(fi.next().unwrap().clone()),
                Ordering::Less => {
                    let (gm, gc) = gi.next().unwrap();
                    out.push((gm, field.neg(&gc)));
                }
                Ordering::Equal => {
                    let (fm, fc) = fi.next().unwrap();
                    let (_, gc) = gi.next().unwrap();
                    let v = field.sub(fc, &gc);
                    if !field.is_zero(&v) {
                        out.push((fm.clone(), v));
                    }
                }
            },
        }
    }
    out
}

/// Full reduction of `f` by monic `reducers`.
fn reduce<F: Field>(field: F, order: &MonomialOrder, mut f: Terms<F>, reducers: &[&Terms<F>]) -> Terms<F> {
    let mut rem = Vec::new();
    let mut start = 0;
    while start < f.len() {
        let m = &f[start].0;
        match reducers.iter().find(|g| g[0].0.divides(m)) {
            Some(g) => {
                let q = m.div(&g[0].0).expect("divisible");
                let c = f[start].1.clone();
                f = sub_mul(field, order, &f[start + 1..], &c, &q, &g[1..]);
                start = 0;
            }
            None => {
                rem.push(f[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn spoly<F: Field>(field: F, order: &MonomialOrder, a: &Terms<F>, b: &Terms<F>) -> Terms<F> {
    let l = a[0].0.lcm(&b[0].0);
    let qa = l.div(&a[0].0).expect("lcm");
    let qb = l.div(&b[0].0).expect("lcm");
    let left: Terms<F> = a[1..].iter().map(|(m, c)| (m.mul(&qa), c.clone())).collect();
    sub_mul(field, order, &left, &field.one(), &qb, &b[1..])
}
