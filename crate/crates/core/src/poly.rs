//! Sparse multivariate polynomial arithmetic over the integers, with the
//! degree-lexicographic order and Groebner-basis machinery over Z.
//!
//! Variables are indexed by positive integers (one per tree vertex); a lower
//! index is an earlier, hence larger, variable under deglex.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Var = u32;
pub type Coeff = BigInt;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("no leading term: zero polynomial")]
    ZeroPolynomial,
    #[error("variable x{0} has no assigned value")]
    MissingVariable(Var),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompletionError {
    #[error(
        "completion budget exhausted after {pairs_processed} pairs ({basis_len} basis elements)"
    )]
    BudgetExhausted {
        pairs_processed: usize,
        basis_len: usize,
    },
    #[error("completion memory cap of {cap_bytes} bytes exceeded")]
    MemoryCapExceeded { cap_bytes: usize },
}

/// A power product x_{v1}^{e1} * ... * x_{vk}^{ek} with all exponents
/// positive and variables strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Builds a monomial from (variable, exponent) pairs in any order;
    /// repeated variables accumulate and zero exponents are dropped.
    pub fn from_pairs(pairs: &[(Var, u32)]) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for &(v, e) in pairs {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        Monomial {
            exps: map.into_iter().collect(),
        }
    }

    /// Squarefree product of the given variables.
    pub fn from_vars(vars: &[Var]) -> Self {
        let pairs: Vec<(Var, u32)> = vars.iter().map(|&v| (v, 1)).collect();
        Monomial::from_pairs(&pairs)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// Exact quotient self / other, when other divides self.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps = self
            .exps
            .iter()
            .filter_map(|&(v, e)| {
                let q = e - other.exponent(v);
                (q > 0).then_some((v, q))
            })
            .collect();
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((va, ea.max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }
}

/// Degree-lexicographic comparison: total degree first, then the first
/// variable (smallest index) where the exponents differ, larger exponent
/// winning.
pub fn deglex_compare(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let (mut i, mut j) = (0, 0);
    while i < a.exps.len() && j < b.exps.len() {
        let (va, ea) = a.exps[i];
        let (vb, eb) = b.exps[j];
        match va.cmp(&vb) {
            // a has a positive exponent at an earlier variable.
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
            Ordering::Equal => {
                match ea.cmp(&eb) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                i += 1;
                j += 1;
            }
        }
    }
    // Equal total degree rules out one side having leftover exponents.
    debug_assert!(i == a.exps.len() && j == b.exps.len());
    Ordering::Equal
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(v, e) in &self.exps {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{v}")?;
            } else {
                write!(f, "x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Integer-coefficient polynomial in canonical form: terms strictly
/// descending under deglex, no zero coefficients, no duplicate monomials.
/// The empty term list is the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Coeff, Monomial)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    pub fn constant<C: Into<Coeff>>(c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(c, Monomial::one())],
            }
        }
    }

    pub fn variable(v: Var) -> Self {
        Polynomial {
            terms: vec![(BigInt::one(), Monomial::var(v))],
        }
    }

    pub fn monomial<C: Into<Coeff>>(c: C, m: Monomial) -> Self {
        let c = c.into();
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![(c, m)],
            }
        }
    }

    /// Canonicalizes an arbitrary term list: merge duplicates, drop zeros,
    /// sort descending. Re-normalizing a canonical polynomial is the identity.
    pub fn from_terms(terms: Vec<(Coeff, Monomial)>) -> Self {
        let mut map: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (c, m) in terms {
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        let mut out: Vec<(Coeff, Monomial)> = map.into_iter().map(|(m, c)| (c, m)).collect();
        out.sort_by(|(_, ma), (_, mb)| deglex_compare(mb, ma));
        Polynomial { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one() && self.terms[0].0.is_one()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coeff, &Monomial)> {
        self.terms.iter().map(|(c, m)| (c, m))
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.first().map(|(_, m)| m.degree())
    }

    /// Leading term under deglex: (coefficient, power product).
    pub fn leading(&self) -> Result<(&Coeff, &Monomial), PolyError> {
        self.terms
            .first()
            .map(|(c, m)| (c, m))
            .ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(c, _)| c)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ca, ma) = &self.terms[i];
            let (cb, mb) = &other.terms[j];
            match deglex_compare(ma, mb) {
                Ordering::Greater => {
                    out.push((ca.clone(), ma.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((cb.clone(), mb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((c, ma.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().cloned());
        Polynomial { terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(c, m)| (-c, m.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ca, ma) in &self.terms {
            for (cb, mb) in &other.terms {
                terms.push((ca * cb, ma.mul(mb)));
            }
        }
        Polynomial::from_terms(terms)
    }

    /// Multiplies by the single term c * m.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(ci, mi)| (ci * c, mi.mul(m)))
                .collect(),
        }
    }

    pub fn scale<C: Into<Coeff>>(&self, c: C) -> Polynomial {
        let c = c.into();
        self.mul_term(&c, &Monomial::one())
    }

    /// Flips the sign if the leading coefficient is negative, so the result
    /// has a positive leading coefficient. Zero stays zero.
    pub fn normalize_sign(&self) -> Polynomial {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn eval(&self, assignment: &BTreeMap<Var, BigInt>) -> Result<BigInt, PolyError> {
        let mut total = BigInt::zero();
        for (c, m) in &self.terms {
            let mut prod = c.clone();
            for &(v, e) in &m.exps {
                let val = assignment.get(&v).ok_or(PolyError::MissingVariable(v))?;
                prod *= val.pow(e);
            }
            total += prod;
        }
        Ok(total)
    }

    /// Total order on canonical polynomials: termwise (monomial, coefficient),
    /// shorter prefix losing. Used to pin deterministic set orders.
    pub fn canonical_cmp(&self, other: &Polynomial) -> Ordering {
        for ((ca, ma), (cb, mb)) in self.terms.iter().zip(other.terms.iter()) {
            match deglex_compare(ma, mb) {
                Ordering::Equal => {}
                ord => return ord,
            }
            match ca.cmp(cb) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }

    /// Rough heap footprint, used for the completion memory cap.
    fn approx_bytes(&self) -> usize {
        self.terms
            .iter()
            .map(|(c, m)| 48 + c.bits() as usize / 8 + m.exps.len() * 8)
            .sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (c, m)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

/// A deduplicated set of nonzero canonical polynomials, kept sorted
/// descending by leading monomial with ties broken by the full canonical
/// comparison. Reduction always scans members in this order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    polys: Vec<Polynomial>,
}

impl GeneratorSet {
    pub fn new<I: IntoIterator<Item = Polynomial>>(polys: I) -> Self {
        let mut set = GeneratorSet { polys: Vec::new() };
        for p in polys {
            set.insert(p);
        }
        set
    }

    fn sort_key_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
        let la = a.leading_monomial().expect("nonzero member");
        let lb = b.leading_monomial().expect("nonzero member");
        deglex_compare(lb, la).then_with(|| b.canonical_cmp(a))
    }

    /// Inserts a nonzero polynomial; returns false if it was already present
    /// (or zero).
    pub fn insert(&mut self, p: Polynomial) -> bool {
        if p.is_zero() {
            return false;
        }
        match self.polys.binary_search_by(|q| Self::sort_key_cmp(q, &p)) {
            Ok(_) => false,
            Err(pos) => {
                self.polys.insert(pos, p);
                true
            }
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        !p.is_zero()
            && self
                .polys
                .binary_search_by(|q| Self::sort_key_cmp(q, p))
                .is_ok()
    }

    pub fn contains_one(&self) -> bool {
        self.polys.iter().any(|p| p.is_one())
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Polynomial> {
        self.polys.iter()
    }

    pub fn as_slice(&self) -> &[Polynomial] {
        &self.polys
    }
}

impl FromIterator<Polynomial> for GeneratorSet {
    fn from_iter<I: IntoIterator<Item = Polynomial>>(iter: I) -> Self {
        GeneratorSet::new(iter)
    }
}

/// S(f, g) = (c/c_f)(X/X_f) f - (c/c_g)(X/X_g) g, with X the lcm of the
/// leading powers and c the positive lcm of the leading coefficients.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    let (cf, mf) = f.leading()?;
    let (cg, mg) = g.leading()?;
    let x = mf.lcm(mg);
    let c = cf.lcm(cg);
    let left = f.mul_term(&(&c / cf), &x.div(mf).expect("lcm divisible"));
    let right = g.mul_term(&(&c / cg), &x.div(mg).expect("lcm divisible"));
    Ok(left.sub(&right))
}

/// One eligible head-reduction step exists when some b in B has lp(b)
/// dividing lp(f) and lc(b) dividing lc(f) in Z; the step subtracts the exact
/// term multiple of b that cancels the leading term, so the leading term
/// strictly decreases. Repeats until stuck or zero.
pub fn strong_reduce(f: &Polynomial, basis: &GeneratorSet) -> (Polynomial, bool) {
    let mut cur = f.clone();
    'outer: while !cur.is_zero() {
        let (cf, mf) = {
            let (c, m) = cur.leading().expect("nonzero");
            (c.clone(), m.clone())
        };
        for b in basis.iter() {
            let (cb, mb) = b.leading().expect("basis members nonzero");
            if mb.divides(&mf) && (&cf % cb).is_zero() {
                let q = &cf / cb;
                let m = mf.div(mb).expect("divides");
                let next = cur.sub(&b.mul_term(&q, &m));
                debug_assert!(
                    next.is_zero()
                        || deglex_compare(
                            next.leading_monomial().unwrap(),
                            cur.leading_monomial().unwrap()
                        ) == Ordering::Less
                );
                cur = next;
                continue 'outer;
            }
        }
        break;
    }
    let zero = cur.is_zero();
    (cur, zero)
}

/// Buchberger criterion over a PID: every pairwise S-polynomial must
/// strong-reduce to zero modulo the set itself.
pub fn is_groebner_basis(basis: &GeneratorSet) -> bool {
    let polys = basis.as_slice();
    for i in 0..polys.len() {
        for j in (i + 1)..polys.len() {
            let s = s_polynomial(&polys[i], &polys[j]).expect("members nonzero");
            let (_, zero) = strong_reduce(&s, basis);
            if !zero {
                return false;
            }
        }
    }
    true
}

/// Reducedness conditions only: unit leading coefficients and no term of one
/// member divisible by the leading power of another. Callers check the
/// Groebner property separately.
pub fn is_reduced_groebner_basis(basis: &GeneratorSet) -> bool {
    let polys = basis.as_slice();
    for p in polys {
        if !p.leading_coeff().expect("nonzero").is_one() {
            return false;
        }
    }
    for (i, p) in polys.iter().enumerate() {
        for (j, q) in polys.iter().enumerate() {
            if i == j {
                continue;
            }
            let lp = q.leading_monomial().expect("nonzero");
            if p.terms().any(|(_, m)| lp.divides(m)) {
                return false;
            }
        }
    }
    true
}

/// Resource limits for completion. `max_mem_bytes` is an approximate cap on
/// the basis plus queued work.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_pairs: usize,
    pub max_mem_bytes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 500_000,
            max_mem_bytes: 512 << 20,
        }
    }
}

impl Limits {
    pub fn with_cap_mb(mb: usize) -> Self {
        Limits {
            max_mem_bytes: mb << 20,
            ..Limits::default()
        }
    }
}

/// Extended gcd with g > 0 and |u| minimal among all Bezout coefficients.
fn bezout_min_u(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let ext = a.extended_gcd(b);
    let (mut g, mut u) = (ext.gcd, ext.x);
    if g.is_negative() {
        g = -g;
        u = -u;
    }
    // Solutions form u + k*(b/g); pull u into the centered residue range.
    let step = (b / &g).abs();
    if !step.is_zero() {
        u = u.mod_floor(&step);
        let twice = &u * 2;
        if twice > step {
            u -= &step;
        }
    }
    let v = (&g - &u * a) / b;
    (g, u, v)
}

/// Completes a generating set to a basis over Z on which head reduction
/// decides ideal membership. The pair queue processes both S-polynomials and,
/// where neither leading coefficient divides the other, the gcd combination
/// u(X/X_f)f + v(X/X_g)g with u c_f + v c_g = gcd(c_f, c_g).
pub fn groebner_complete(
    basis: &GeneratorSet,
    limits: &Limits,
) -> Result<GeneratorSet, CompletionError> {
    let mut polys: Vec<Polynomial> = basis.iter().map(|p| p.normalize_sign()).collect();
    polys.dedup();
    let mut mem: usize = polys.iter().map(|p| p.approx_bytes()).sum();
    if mem > limits.max_mem_bytes {
        return Err(CompletionError::MemoryCapExceeded {
            cap_bytes: limits.max_mem_bytes,
        });
    }

    let mut queue: std::collections::VecDeque<(usize, usize)> = std::collections::VecDeque::new();
    for i in 0..polys.len() {
        for j in (i + 1)..polys.len() {
            queue.push_back((i, j));
        }
    }

    let mut processed = 0usize;
    while let Some((i, j)) = queue.pop_front() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(CompletionError::BudgetExhausted {
                pairs_processed: processed,
                basis_len: polys.len(),
            });
        }

        let mut candidates: Vec<Polynomial> = Vec::with_capacity(2);
        candidates.push(s_polynomial(&polys[i], &polys[j]).expect("nonzero members"));
        {
            let (ci, mi) = polys[i].leading().expect("nonzero");
            let (cj, mj) = polys[j].leading().expect("nonzero");
            if !(ci % cj).is_zero() && !(cj % ci).is_zero() {
                let (_, u, v) = bezout_min_u(ci, cj);
                let x = mi.lcm(mj);
                let left = polys[i].mul_term(&u, &x.div(mi).expect("lcm divisible"));
                let right = polys[j].mul_term(&v, &x.div(mj).expect("lcm divisible"));
                candidates.push(left.add(&right));
            }
        }

        for cand in candidates {
            let view = GeneratorSet::new(polys.iter().cloned());
            let (nf, zero) = strong_reduce(&cand, &view);
            if zero {
                continue;
            }
            let nf = nf.normalize_sign();
            if polys.contains(&nf) {
                continue;
            }
            mem += nf.approx_bytes();
            if mem > limits.max_mem_bytes {
                return Err(CompletionError::MemoryCapExceeded {
                    cap_bytes: limits.max_mem_bytes,
                });
            }
            let k = polys.len();
            polys.push(nf);
            for i in 0..k {
                queue.push_back((i, k));
            }
        }
    }

    Ok(GeneratorSet::new(polys))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(Var, u32)]) -> Monomial {
        Monomial::from_pairs(pairs)
    }

    fn x(v: Var) -> Polynomial {
        Polynomial::variable(v)
    }

    #[test]
    fn deglex_earlier_variable_wins() {
        assert_eq!(
            deglex_compare(&m(&[(1, 1)]), &m(&[(2, 1)])),
            Ordering::Greater
        );
    }

    #[test]
    fn deglex_degree_first() {
        assert_eq!(
            deglex_compare(&m(&[(1, 1), (2, 1)]), &m(&[(3, 1)])),
            Ordering::Greater
        );
    }

    #[test]
    fn deglex_first_difference() {
        // x1*x3 < x1*x2
        assert_eq!(
            deglex_compare(&m(&[(1, 1), (3, 1)]), &m(&[(1, 1), (2, 1)])),
            Ordering::Less
        );
    }

    #[test]
    fn arith_examples() {
        let f = x(1).mul(&x(2)).sub(&Polynomial::one());
        assert_eq!(f.add(&Polynomial::one()), x(1).mul(&x(2)));

        let lhs = x(1).sub(&x(2)).mul(&x(1).add(&x(2)));
        let rhs = x(1).mul(&x(1)).sub(&x(2).mul(&x(2)));
        assert_eq!(lhs, rhs);

        assert!(Polynomial::zero().mul(&f).is_zero());
    }

    #[test]
    fn leading_parts() {
        // x1*x2*x3 - x1 - x3
        let p = Polynomial::from_terms(vec![
            (BigInt::from(1), m(&[(1, 1), (2, 1), (3, 1)])),
            (BigInt::from(-1), m(&[(1, 1)])),
            (BigInt::from(-1), m(&[(3, 1)])),
        ]);
        let (lc, lp) = p.leading().unwrap();
        assert_eq!(lc, &BigInt::from(1));
        assert_eq!(lp, &m(&[(1, 1), (2, 1), (3, 1)]));

        let q = x(2).scale(2).sub(&x(3).scale(3));
        let (lc, lp) = q.leading().unwrap();
        assert_eq!(lc, &BigInt::from(2));
        assert_eq!(lp, &Monomial::var(2));

        assert_eq!(
            Polynomial::zero().leading().unwrap_err(),
            PolyError::ZeroPolynomial
        );
    }

    #[test]
    fn s_polynomial_examples() {
        let f = x(1).mul(&x(2)).sub(&Polynomial::one());
        let g = x(2).mul(&x(3)).sub(&Polynomial::one());
        assert_eq!(s_polynomial(&f, &g).unwrap(), x(1).sub(&x(3)));

        let f = x(1).scale(2).sub(&Polynomial::one());
        let g = x(2).scale(3).sub(&Polynomial::one());
        assert_eq!(
            s_polynomial(&f, &g).unwrap(),
            x(1).scale(2).sub(&x(2).scale(3))
        );

        assert!(s_polynomial(&f, &f).unwrap().is_zero());
    }

    #[test]
    fn strong_reduce_examples() {
        let b = GeneratorSet::new([x(1).mul(&x(2)).sub(&Polynomial::one())]);
        let f = x(1).mul(&x(2)).mul(&x(3));
        let (nf, zero) = strong_reduce(&f, &b);
        assert!(!zero);
        assert_eq!(nf, x(3));

        let g = x(1).sub(&x(3));
        let (nf, zero) = strong_reduce(&g, &b);
        assert!(!zero);
        assert_eq!(nf, g);
    }

    #[test]
    fn strong_reduce_coefficient_eligibility() {
        // 2x1 is not reducible by 3x1 alone, but is by x1.
        let b = GeneratorSet::new([x(1).scale(3)]);
        let (nf, zero) = strong_reduce(&x(1).scale(2), &b);
        assert!(!zero);
        assert_eq!(nf, x(1).scale(2));

        let b = GeneratorSet::new([x(1)]);
        let (_, zero) = strong_reduce(&x(1).scale(2), &b);
        assert!(zero);
    }

    #[test]
    fn groebner_checks() {
        let b = GeneratorSet::new([x(1), x(2)]);
        assert!(is_groebner_basis(&b));
        assert!(is_reduced_groebner_basis(&b));

        let b = GeneratorSet::new([
            x(1).mul(&x(2)).sub(&Polynomial::one()),
            x(1).mul(&x(3)).sub(&Polynomial::one()),
        ]);
        assert!(!is_groebner_basis(&b));

        let b = GeneratorSet::new([x(1), x(1).mul(&x(2)).add(&x(2))]);
        assert!(!is_reduced_groebner_basis(&b));
    }

    #[test]
    fn completion_gcd_pair() {
        let b = GeneratorSet::new([x(1).scale(2), x(1).scale(3)]);
        let done = groebner_complete(&b, &Limits::default()).unwrap();
        assert!(done.contains(&x(1)));

        let b = GeneratorSet::new([x(1), x(2)]);
        let done = groebner_complete(&b, &Limits::default()).unwrap();
        assert_eq!(done, b);
    }

    #[test]
    fn completion_budget_error() {
        let b = GeneratorSet::new([
            x(1).mul(&x(2)).sub(&Polynomial::one()),
            x(1).mul(&x(3)).sub(&x(2)),
        ]);
        let tight = Limits {
            max_pairs: 0,
            ..Limits::default()
        };
        assert!(matches!(
            groebner_complete(&b, &tight),
            Err(CompletionError::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn display_grammar() {
        let p = Polynomial::from_terms(vec![
            (BigInt::from(1), m(&[(1, 1), (2, 1), (3, 1)])),
            (BigInt::from(-1), m(&[(1, 1)])),
            (BigInt::from(-1), m(&[(3, 1)])),
        ]);
        assert_eq!(p.to_string(), "x1*x2*x3 - x1 - x3");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(x(2).scale(2).sub(&x(3).scale(3)).to_string(), "2*x2 - 3*x3");
        assert_eq!(
            Polynomial::monomial(1, m(&[(1, 2)]))
                .sub(&Polynomial::one())
                .to_string(),
            "x1^2 - 1"
        );
        assert_eq!(Polynomial::constant(-1).to_string(), "-1");
    }

    #[test]
    fn eval_with_missing_variable() {
        let p = x(1).mul(&x(2));
        let mut assignment = BTreeMap::new();
        assignment.insert(1, BigInt::from(3));
        assert_eq!(p.eval(&assignment), Err(PolyError::MissingVariable(2)));
        assignment.insert(2, BigInt::from(5));
        assert_eq!(p.eval(&assignment).unwrap(), BigInt::from(15));
    }

    #[test]
    fn bezout_minimal_u() {
        let (g, u, v) = bezout_min_u(&BigInt::from(2), &BigInt::from(3));
        assert_eq!(g, BigInt::from(1));
        assert_eq!(&u * 2 + &v * 3, BigInt::from(1));
        assert!(u.abs() <= BigInt::from(1));
    }
}
