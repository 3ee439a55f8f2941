//! Rational expressions: a polynomial numerator over a factored denominator.
//!
//! The denominator is kept as a multiset of monic polynomial factors, never
//! multiplied out. Normalization cancels the numerator against each factor by
//! trial division and rationalizes any factor containing an adjoined root by
//! multiplying through with its root conjugate. There is no general
//! multivariate gcd: a value can be unreduced without being wrong, and the
//! zero test (numerator identically zero) stays exact either way.

use super::poly::{Poly, Q};
use super::vars::{Var, A1, PARAMS, ROOTS, S, T, U, UM, V, VM};
use num::One;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Errors surfaced by exact-algebra operations.
#[derive(thiserror::Error, Debug, Clone, PartialEq)]
pub enum AlgError {
    #[error("substitution makes a denominator factor vanish: {0}")]
    DenominatorVanishes(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator depends on bucket variables: {0}")]
    BucketDenominator(String),
    #[error("{0}")]
    Unsupported(String),
}

/// Canonical total order on polynomials, used only to sort factor lists.
fn cmp_poly(a: &Poly, b: &Poly) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| a.num_terms().cmp(&b.num_terms()))
        .then_with(|| {
            let mut ita = a.terms().rev();
            let mut itb = b.terms().rev();
            loop {
                match (ita.next(), itb.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some((ma, ca)), Some((mb, cb))) => {
                        let ord = ma.cmp(mb).then_with(|| ca.cmp(cb));
                        if ord != Ordering::Equal {
                            return ord;
                        }
                    }
                }
            }
        })
}

/// A rational expression `num / prod(factor_i ^ mult_i)`.
#[derive(Clone, PartialEq, Eq)]
pub struct RatExpr {
    num: Poly,
    den: Vec<(Poly, u32)>,
}

impl RatExpr {
    pub fn zero() -> RatExpr {
        RatExpr { num: Poly::zero(), den: Vec::new() }
    }

    pub fn one() -> RatExpr {
        RatExpr::from_poly(Poly::one())
    }

    pub fn int(n: i64) -> RatExpr {
        RatExpr::from_poly(Poly::int(n))
    }

    pub fn constant(c: Q) -> RatExpr {
        RatExpr::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> RatExpr {
        RatExpr::from_poly(Poly::var(v))
    }

    pub fn from_poly(num: Poly) -> RatExpr {
        RatExpr { num, den: Vec::new() }
    }

    /// Build and normalize from parts.
    pub fn new(num: Poly, den: Vec<(Poly, u32)>) -> RatExpr {
        let mut e = RatExpr { num, den };
        e.normalize();
        e
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator_factors(&self) -> &[(Poly, u32)] {
        &self.den
    }

    /// Denominator multiplied out (for printing and numeric evaluation).
    pub fn denominator_poly(&self) -> Poly {
        let mut d = Poly::one();
        for (f, k) in &self.den {
            d = &d * &f.pow(*k);
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Sound equality as functions: the difference has zero numerator.
    pub fn eq_fn(&self, other: &RatExpr) -> bool {
        (self.clone() - other.clone()).is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        // Rationalize root-bearing factors, make factors monic, fold scalars.
        let mut scale = Q::one();
        let mut work: Vec<(Poly, u32)> = std::mem::take(&mut self.den);
        let mut clean: Vec<(Poly, u32)> = Vec::new();
        while let Some((mut f, k)) = work.pop() {
            if f.is_zero() {
                panic!("zero denominator factor");
            }
            let mut conj_acc = Poly::one();
            for r in ROOTS {
                if f.mentions_any(&[r]) {
                    let c = f.conjugate_root(r);
                    conj_acc = &conj_acc * &c;
                    f = &f * &c;
                }
            }
            if !conj_acc.is_constant() || !conj_acc.constant_coeff().is_one() {
                self.num = &self.num * &conj_acc.pow(k);
            }
            if f.is_constant() {
                let c = f.constant_coeff();
                let mut inv = Q::one();
                for _ in 0..k {
                    inv = inv / &c;
                }
                scale = scale * inv;
                continue;
            }
            let (monic, lead) = f.monic();
            let mut inv = Q::one();
            for _ in 0..k {
                inv = inv / &lead;
            }
            scale = scale * inv;
            clean.push((monic, k));
        }
        if !scale.is_one() {
            self.num = &self.num * &scale;
        }
        // Merge equal factors and sort canonically.
        clean.sort_by(|a, b| cmp_poly(&a.0, &b.0));
        let mut merged: Vec<(Poly, u32)> = Vec::new();
        for (f, k) in clean {
            match merged.last_mut() {
                Some((g, m)) if *g == f => *m += k,
                _ => merged.push((f, k)),
            }
        }
        // Cancel numerator content against each factor by trial division.
        for (f, k) in merged.iter_mut() {
            while *k > 0 {
                match self.num.exact_div(f) {
                    Some(q) => {
                        self.num = q;
                        *k -= 1;
                    }
                    None => break,
                }
            }
        }
        merged.retain(|&(_, k)| k > 0);
        self.den = merged;
    }

    /// Reciprocal; error on zero.
    pub fn recip(&self) -> Result<RatExpr, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let mut num = Poly::one();
        for (f, k) in &self.den {
            num = &num * &f.pow(*k);
        }
        Ok(RatExpr::new(num, vec![(self.num.clone(), 1)]))
    }

    pub fn pow(&self, e: i32) -> Result<RatExpr, AlgError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut num = base.num.pow(e.unsigned_abs());
        let mut den = Vec::new();
        for (f, k) in &base.den {
            den.push((f.clone(), k * e.unsigned_abs()));
        }
        if e == 0 {
            num = Poly::one();
            den.clear();
        }
        Ok(RatExpr::new(num, den))
    }

    /// Total degree in the given variables: degree of the numerator minus
    /// degree of the denominator, each summed over `vars`.
    pub fn degree_in(&self, vars: &[Var]) -> i64 {
        let nd = self.num.degree_in(vars) as i64;
        let dd: i64 = self
            .den
            .iter()
            .map(|(f, k)| f.degree_in(vars) as i64 * *k as i64)
            .sum();
        nd - dd
    }

    pub fn mentions_any(&self, vars: &[Var]) -> bool {
        self.num.mentions_any(vars) || self.den.iter().any(|(f, _)| f.mentions_any(vars))
    }

    /// Partial derivative with every symbol independent.
    pub fn diff(&self, v: Var) -> RatExpr {
        let mut out = RatExpr::new(self.num.diff_var(v), self.den.clone());
        for (i, (f, k)) in self.den.iter().enumerate() {
            let df = f.diff_var(v);
            if df.is_zero() {
                continue;
            }
            let mut den = self.den.clone();
            den[i].1 += 1;
            let piece = RatExpr::new(&(&self.num * &df) * &Poly::int(*k as i64), den);
            out = out - piece;
        }
        out
    }

    /// Total derivative with respect to t: partial plus the chain rule through
    /// the adjoined roots du/dt = u/(2t), d(um)/dt = um/(2(t-1)).
    pub fn diff_total_t(&self) -> RatExpr {
        let mut out = self.diff(T);
        if self.mentions_any(&[U]) {
            let du = RatExpr::new(Poly::var(U), vec![(&Poly::var(T) * &Poly::int(2), 1)]);
            out = out + self.diff(U) * du;
        }
        if self.mentions_any(&[UM]) {
            let dum = RatExpr::new(
                Poly::var(UM),
                vec![(&(Poly::var(T) - Poly::one()) * &Poly::int(2), 1)],
            );
            out = out + self.diff(UM) * dum;
        }
        out
    }

    /// Total derivative with respect to s (chain rule through v, vm).
    pub fn diff_total_s(&self) -> RatExpr {
        let mut out = self.diff(S);
        if self.mentions_any(&[V]) {
            let dv = RatExpr::new(Poly::var(V), vec![(&Poly::var(S) * &Poly::int(2), 1)]);
            out = out + self.diff(V) * dv;
        }
        if self.mentions_any(&[VM]) {
            let dvm = RatExpr::new(
                Poly::var(VM),
                vec![(&(Poly::var(S) - Poly::one()) * &Poly::int(2), 1)],
            );
            out = out + self.diff(VM) * dvm;
        }
        out
    }

    /// Simultaneous substitution. Variables absent from the map are unchanged.
    ///
    /// Fails if a denominator factor maps to the zero function.
    pub fn substitute(&self, map: &BTreeMap<Var, RatExpr>) -> Result<RatExpr, AlgError> {
        let num = eval_poly(&self.num, map);
        let mut out = num;
        for (f, k) in &self.den {
            let fs = eval_poly(f, map);
            if fs.is_zero() {
                return Err(AlgError::DenominatorVanishes(crate::exactalg::print_poly(f)));
            }
            out = out * fs.pow(-(*k as i32))?;
        }
        Ok(out)
    }

    /// Substitute a single variable by a polynomial (no denominators involved).
    pub fn substitute_poly(&self, v: Var, by: &Poly) -> Result<RatExpr, AlgError> {
        let num = self.num.substitute_var(v, by);
        let mut den = Vec::new();
        for (f, k) in &self.den {
            let fs = f.substitute_var(v, by);
            if fs.is_zero() {
                return Err(AlgError::DenominatorVanishes(crate::exactalg::print_poly(f)));
            }
            den.push((fs, *k));
        }
        Ok(RatExpr::new(num, den))
    }
}

/// Evaluate a polynomial at `RatExpr` values by lifting everything over the
/// common denominator of the substituted variables, then normalizing once.
fn eval_poly(p: &Poly, map: &BTreeMap<Var, RatExpr>) -> RatExpr {
    if p.is_zero() {
        return RatExpr::zero();
    }
    let used: Vec<Var> = p
        .support()
        .into_iter()
        .filter(|v| map.contains_key(v))
        .collect();
    if used.is_empty() {
        return RatExpr::from_poly(p.clone());
    }
    // Common denominator D over the used values as a factor multiset.
    let mut common: Vec<(Poly, u32)> = Vec::new();
    for v in &used {
        for (f, k) in &map[v].den {
            match common.iter_mut().find(|(g, _)| g == f) {
                Some((_, m)) => *m = (*m).max(*k),
                None => common.push((f.clone(), *k)),
            }
        }
    }
    // Lifted numerators: value_i * D, expanded.
    let mut lifted: BTreeMap<Var, Poly> = BTreeMap::new();
    for v in &used {
        let val = &map[v];
        let mut n = val.num.clone();
        for (f, k) in &common {
            let have = val.den.iter().find(|(g, _)| g == f).map_or(0, |&(_, m)| m);
            if *k > have {
                n = &n * &f.pow(k - have);
            }
        }
        lifted.insert(*v, n);
    }
    let dexp = {
        let mut d = Poly::one();
        for (f, k) in &common {
            d = &d * &f.pow(*k);
        }
        d
    };
    // Each term of total degree g in used vars becomes
    //   coeff * prod(lifted^e) * D^(gmax - g)  over  D^gmax.
    let gmax = p.degree_in(&used);
    let mut dpows: Vec<Poly> = Vec::with_capacity(gmax as usize + 1);
    dpows.push(Poly::one());
    for _ in 0..gmax {
        let next = &dpows[dpows.len() - 1] * &dexp;
        dpows.push(next);
    }
    let mut num = Poly::zero();
    for (m, c) in p.terms() {
        let mut piece = Poly::constant(c.clone());
        let mut g = 0u32;
        for (v, e) in m.vars() {
            if let Some(n) = lifted.get(&v) {
                piece = &piece * &n.pow(e as u32);
                g += e as u32;
            } else {
                piece = &piece * &Poly::var(v).pow(e as u32);
            }
        }
        piece = &piece * &dpows[(gmax - g) as usize];
        num = num + piece;
    }
    let mut den = Vec::new();
    for (f, k) in common {
        den.push((f, k * gmax));
    }
    RatExpr::new(num, den)
}

impl std::ops::Add for RatExpr {
    type Output = RatExpr;
    fn add(self, rhs: RatExpr) -> RatExpr {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        // Common denominator: factor-wise max multiplicity.
        let mut common: Vec<(Poly, u32)> = self.den.clone();
        for (f, k) in &rhs.den {
            match common.iter_mut().find(|(g, _)| g == f) {
                Some((_, m)) => *m = (*m).max(*k),
                None => common.push((f.clone(), *k)),
            }
        }
        let lift = |e: &RatExpr| -> Poly {
            let mut n = e.num.clone();
            for (f, k) in &common {
                let have = e.den.iter().find(|(g, _)| g == f).map_or(0, |&(_, m)| m);
                if *k > have {
                    n = &n * &f.pow(k - have);
                }
            }
            n
        };
        let num = lift(&self) + lift(&rhs);
        RatExpr::new(num, common)
    }
}

impl std::ops::Sub for RatExpr {
    type Output = RatExpr;
    fn sub(self, rhs: RatExpr) -> RatExpr {
        self + (-rhs)
    }
}

impl std::ops::Neg for RatExpr {
    type Output = RatExpr;
    fn neg(mut self) -> RatExpr {
        self.num = -self.num;
        self
    }
}

impl std::ops::Mul for RatExpr {
    type Output = RatExpr;
    fn mul(self, rhs: RatExpr) -> RatExpr {
        if self.is_zero() || rhs.is_zero() {
            return RatExpr::zero();
        }
        let num = &self.num * &rhs.num;
        let mut den = self.den;
        den.extend(rhs.den);
        RatExpr::new(num, den)
    }
}

impl std::ops::Div for RatExpr {
    type Output = RatExpr;
    fn div(self, rhs: RatExpr) -> RatExpr {
        let r = rhs.recip().expect("division by zero rational expression");
        self * r
    }
}

impl fmt::Debug for RatExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatExpr({})", crate::exactalg::print_ratexpr(self))
    }
}

/// How the Fuchs relation is used during zero tests.
#[derive(Clone, Debug, PartialEq)]
pub enum FuchsMode {
    /// Test literal identity.
    Off,
    /// Substitute the relation, eliminating the named parameter.
    Eliminate(Var),
}

/// Zero-test policy: a linear parameter relation (as `relation = 0`) plus the
/// elimination mode.
#[derive(Clone, Debug, PartialEq)]
pub struct FuchsPolicy {
    pub relation: Poly,
    pub mode: FuchsMode,
}

impl FuchsPolicy {
    /// No relation applied.
    pub fn off() -> FuchsPolicy {
        FuchsPolicy { relation: Poly::zero(), mode: FuchsMode::Off }
    }

    /// The Garnier-family relation 2*a1 + a2 + a3 + a4 + a5 + a6 - 1 = 0,
    /// eliminating the given parameter.
    pub fn garnier(eliminate: Var) -> FuchsPolicy {
        let mut rel = Poly::int(-1) + &Poly::var(A1) * &Poly::int(2);
        for v in [PARAMS[1], PARAMS[2], PARAMS[3], PARAMS[4], PARAMS[5]] {
            rel = rel + Poly::var(v);
        }
        FuchsPolicy { relation: rel, mode: FuchsMode::Eliminate(eliminate) }
    }

    /// The degenerate-slot relation a1 + a2 + 2*a3 + a4 + a5 - 1 = 0 used by
    /// the sixth Painleve family (parameter slots alpha0..alpha4 = a1..a5).
    pub fn pvi(eliminate: Var) -> FuchsPolicy {
        let mut rel = Poly::int(-1) + &Poly::var(PARAMS[2]) * &Poly::int(2);
        for v in [PARAMS[0], PARAMS[1], PARAMS[3], PARAMS[4]] {
            rel = rel + Poly::var(v);
        }
        FuchsPolicy { relation: rel, mode: FuchsMode::Eliminate(eliminate) }
    }

    /// Solve the relation for the eliminated parameter: `var -> poly`.
    pub fn elimination(&self) -> Option<(Var, Poly)> {
        match &self.mode {
            FuchsMode::Off => None,
            FuchsMode::Eliminate(v) => {
                // relation = c*v + rest = 0  =>  v = -rest/c
                let c = self.relation.diff_var(*v);
                assert!(c.is_constant() && !c.is_zero(), "relation must be linear in {v:?}");
                let c = c.constant_coeff();
                let rest = self.relation.substitute_var(*v, &Poly::zero());
                let mut sol = -rest;
                let inv = Q::one() / c;
                sol = &sol * &inv;
                Some((*v, sol))
            }
        }
    }

    /// Apply the elimination to an expression (identity when mode is off).
    pub fn apply(&self, e: &RatExpr) -> Result<RatExpr, AlgError> {
        match self.elimination() {
            None => Ok(e.clone()),
            Some((v, by)) => e.substitute_poly(v, &by),
        }
    }
}

/// Is the expression identically zero under the policy?
pub fn zero_test(e: &RatExpr, policy: &FuchsPolicy) -> Result<bool, AlgError> {
    Ok(policy.apply(e)?.is_zero())
}

/// Equality as functions under the policy.
pub fn eq_under(a: &RatExpr, b: &RatExpr, policy: &FuchsPolicy) -> Result<bool, AlgError> {
    zero_test(&(a.clone() - b.clone()), policy)
}

/// Does the expression depend on any of `vars`, under the policy?
///
/// Uses derivative tests, so unreduced representations cannot fool it.
pub fn is_free_of(e: &RatExpr, vars: &[Var], policy: &FuchsPolicy) -> Result<bool, AlgError> {
    let r = policy.apply(e)?;
    for &v in vars {
        if !r.diff(v).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Group an expression's numerator terms by their monomial part in `vars`.
///
/// The denominator must be free of `vars`; each bucket maps the projected
/// monomial to its rational-function coefficient.
pub fn collect_buckets(
    e: &RatExpr,
    vars: &[Var],
) -> Result<BTreeMap<super::poly::Mono, RatExpr>, AlgError> {
    for (f, _) in &e.den {
        if f.mentions_any(vars) {
            return Err(AlgError::BucketDenominator(crate::exactalg::print_poly(f)));
        }
    }
    let mut groups: BTreeMap<super::poly::Mono, Poly> = BTreeMap::new();
    for (m, c) in e.num.terms() {
        let mut key = super::poly::Mono::one();
        let mut rest = super::poly::Mono::one();
        for (v, k) in m.vars() {
            let piece = super::poly::Mono::var_pow(v, k);
            if vars.contains(&v) {
                key = key.mul(&piece);
            } else {
                rest = rest.mul(&piece);
            }
        }
        let entry = groups.entry(key).or_insert_with(Poly::zero);
        *entry = entry.clone() + Poly::term(c.clone(), rest);
    }
    let mut out = BTreeMap::new();
    for (k, p) in groups {
        let e = RatExpr::new(p, e.den.clone());
        if !e.is_zero() {
            out.insert(k, e);
        }
    }
    Ok(out)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars::*;

    fn v(x: Var) -> RatExpr {
        RatExpr::var(x)
    }

    #[test]
    fn cancellation_by_trial_division() {
        // (t^2 - t) / t = t - 1
        let num = &Poly::var(T) * &Poly::var(T) - Poly::var(T);
        let e = RatExpr::new(num, vec![(Poly::var(T), 1)]);
        assert!(e.is_polynomial());
        assert_eq!(e.numerator(), &(Poly::var(T) - Poly::one()));
    }

    #[test]
    fn addition_common_denominator() {
        // 1/t + 1/(t-1) = (2t - 1)/(t(t-1))
        let a = RatExpr::new(Poly::one(), vec![(Poly::var(T), 1)]);
        let b = RatExpr::new(Poly::one(), vec![(Poly::var(T) - Poly::one(), 1)]);
        let sum = a + b;
        let expect = RatExpr::new(
            &Poly::var(T) * &Poly::int(2) - Poly::one(),
            vec![(Poly::var(T), 1), (Poly::var(T) - Poly::one(), 1)],
        );
        assert!(sum.eq_fn(&expect));
    }

    #[test]
    fn root_denominator_rationalizes() {
        // 1/u = u/t
        let e = v(Q1) * RatExpr::new(Poly::one(), vec![(Poly::var(U), 1)]);
        let expect = RatExpr::new(&Poly::var(Q1) * &Poly::var(U), vec![(Poly::var(T), 1)]);
        assert!(e.eq_fn(&expect));
        assert_eq!(e.denominator_factors().len(), 1);
        assert!(!e.denominator_factors()[0].0.mentions_any(&[U, UM, V, VM]));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dt (q1/t) = -q1/t^2
        let e = RatExpr::new(Poly::var(Q1), vec![(Poly::var(T), 1)]);
        let d = e.diff(T);
        let expect = RatExpr::new(-Poly::var(Q1), vec![(Poly::var(T), 2)]);
        assert!(d.eq_fn(&expect));
    }

    #[test]
    fn total_derivative_of_root() {
        // d/dt u = u/(2t); d/dt (u*um) = u*um/(2t) + u*um/(2(t-1))
        let du = v(U).diff_total_t();
        let expect = RatExpr::new(Poly::var(U), vec![(&Poly::var(T) * &Poly::int(2), 1)]);
        assert!(du.eq_fn(&expect));
        let w = v(U) * v(UM);
        let dw = w.clone().diff_total_t();
        let half = |den: Poly| RatExpr::new(Poly::one(), vec![(&den * &Poly::int(2), 1)]);
        let expect2 = w.clone() * half(Poly::var(T)) + w * half(Poly::var(T) - Poly::one());
        assert!(dw.eq_fn(&expect2));
    }

    #[test]
    fn substitution_with_denominators() {
        // q1 -> 1/x in q1^2 + t gives (1 + t*x^2)/x^2
        let e = v(Q1).pow(2).unwrap() + v(T);
        let mut map = BTreeMap::new();
        map.insert(Q1, RatExpr::new(Poly::one(), vec![(Poly::var(X), 1)]));
        let r = e.substitute(&map).unwrap();
        let expect = RatExpr::new(
            Poly::one() + &(&Poly::var(T) * &Poly::var(X)) * &Poly::var(X),
            vec![(Poly::var(X), 2)],
        );
        assert!(r.eq_fn(&expect));
    }

    #[test]
    fn substitution_denominator_vanishes() {
        let e = RatExpr::new(Poly::one(), vec![(Poly::var(Q1), 1)]);
        let mut map = BTreeMap::new();
        map.insert(Q1, RatExpr::zero());
        assert!(matches!(
            e.substitute(&map),
            Err(AlgError::DenominatorVanishes(_))
        ));
    }

    #[test]
    fn fuchs_elimination() {
        // 2a1 + a2 + a3 + a4 + a5 + a6 - 1 vanishes under the Garnier policy.
        let policy = FuchsPolicy::garnier(A6);
        let rel = policy.relation.clone();
        assert!(zero_test(&RatExpr::from_poly(rel), &policy).unwrap());
        let not_zero = RatExpr::var(A1);
        assert!(!zero_test(&not_zero, &policy).unwrap());
    }

    #[test]
    fn bucket_collection() {
        // q1^2*t + q1*p1 + q1*s + 3 over (t) groups into 4 buckets.
        let num = &(&Poly::var(Q1) * &Poly::var(Q1)) * &Poly::var(T)
            + &Poly::var(Q1) * &Poly::var(P1)
            + &Poly::var(Q1) * &Poly::var(S)
            + Poly::int(3);
        let e = RatExpr::new(num, vec![(Poly::var(T), 1)]);
        let buckets = collect_buckets(&e, &PHASE).unwrap();
        assert_eq!(buckets.len(), 4);
    }

    #[test]
    fn freeness_is_not_fooled_by_unreduced_forms() {
        // (q1*t)/(q1) is free of q1 as a function.
        let e = RatExpr {
            num: &Poly::var(Q1) * &Poly::var(T),
            den: vec![(Poly::var(Q1), 1)],
        };
        assert!(is_free_of(&e, &[Q1], &FuchsPolicy::off()).unwrap());
    }
}
