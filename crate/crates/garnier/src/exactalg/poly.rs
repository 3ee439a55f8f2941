//! Sparse multivariate polynomials over arbitrary-precision rationals.
//!
//! Terms are kept in a `BTreeMap` keyed by monomial under the graded-lex
//! order, so every polynomial has exactly one representation and iteration
//! order is deterministic. Exponents of the adjoined roots u, um, v, vm are
//! reduced to 0 or 1 after every product using u^2 = t, um^2 = t - 1,
//! v^2 = s, vm^2 = s - 1.

use super::vars::{Var, S, T, UM, VM};
use num::{BigInt, BigRational, One, Signed, Zero};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational scalar.
pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.
pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A monomial: sparse list of (variable, exponent) pairs, sorted by variable,
/// all exponents nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono {
    pairs: SmallVec<[(Var, u16); 6]>,
}

impl Mono {
    pub fn one() -> Mono {
        Mono::default()
    }

    pub fn var(v: Var) -> Mono {
        Mono::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Mono {
        let mut pairs = SmallVec::new();
        if e > 0 {
            pairs.push((v, e));
        }
        Mono { pairs }
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.pairs.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.pairs
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn contains_any(&self, vars: &[Var]) -> bool {
        self.pairs.iter().any(|&(v, _)| vars.contains(&v))
    }

    /// Degree summed over the given variables.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        self.pairs
            .iter()
            .filter(|&&(v, _)| vars.contains(&v))
            .map(|&(_, e)| e as u32)
            .sum()
    }

    /// Product of two monomials (no root reduction; the caller reduces).
    pub fn mul(&self, other: &Mono) -> Mono {
        let mut pairs = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.pairs.len() && j < other.pairs.len() {
            let (va, ea) = self.pairs[i];
            let (vb, eb) = other.pairs[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    pairs.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    pairs.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    pairs.push((va, ea.checked_add(eb).expect("exponent overflow")));
                    i += 1;
                    j += 1;
                }
            }
        }
        pairs.extend_from_slice(&self.pairs[i..]);
        pairs.extend_from_slice(&other.pairs[j..]);
        Mono { pairs }
    }

    /// Exact monomial quotient, `None` if any exponent would go negative.
    fn div(&self, other: &Mono) -> Option<Mono> {
        let mut pairs = SmallVec::new();
        let mut i = 0;
        for &(vb, eb) in &other.pairs {
            while i < self.pairs.len() && self.pairs[i].0 < vb {
                pairs.push(self.pairs[i]);
                i += 1;
            }
            if i >= self.pairs.len() || self.pairs[i].0 != vb || self.pairs[i].1 < eb {
                return None;
            }
            let rem = self.pairs[i].1 - eb;
            if rem > 0 {
                pairs.push((vb, rem));
            }
            i += 1;
        }
        pairs.extend_from_slice(&self.pairs[i..]);
        Some(Mono { pairs })
    }

    /// Remove one variable entirely, returning its exponent.
    fn strip(&self, v: Var) -> (Mono, u16) {
        let mut pairs = self.pairs.clone();
        if let Some(pos) = pairs.iter().position(|&(w, _)| w == v) {
            let e = pairs[pos].1;
            pairs.remove(pos);
            (Mono { pairs }, e)
        } else {
            (Mono { pairs }, 0)
        }
    }
}

/// Graded-lex: compare total degree first, then exponents along the canonical
/// variable order (a higher exponent on an earlier variable is larger).
impl Ord for Mono {
    fn cmp(&self, other: &Mono) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                let (mut i, mut j) = (0, 0);
                loop {
                    match (self.pairs.get(i), other.pairs.get(j)) {
                        (None, None) => return Ordering::Equal,
                        // Remaining vars in `other` only: `other` has positive
                        // exponent on an earlier slot self lacks, so self is smaller.
                        (None, Some(_)) => return Ordering::Less,
                        (Some(_), None) => return Ordering::Greater,
                        (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                            Ordering::Equal => match ea.cmp(&eb) {
                                Ordering::Equal => {
                                    i += 1;
                                    j += 1;
                                }
                                ord => return ord,
                            },
                        },
                    }
                }
            })
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Mono) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; invariant: no zero coefficients, root exponents < 2.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(qi(n))
    }

    pub fn var(v: Var) -> Poly {
        Poly::term(Q::one(), Mono::var(v))
    }

    pub fn term(c: Q, m: Mono) -> Poly {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p.reduce_roots();
        p
    }

    fn add_term(&mut self, m: Mono, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Mono::is_one)
    }

    /// The constant term's coefficient.
    pub fn constant_coeff(&self) -> Q {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, Mono, Q> {
        self.terms.iter()
    }

    /// Leading term under graded-lex.
    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    /// Maximum degree summed over the given variables.
    pub fn degree_in(&self, vars: &[Var]) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(vars))
            .max()
            .unwrap_or(0)
    }

    /// Does any term mention any of these variables?
    pub fn mentions_any(&self, vars: &[Var]) -> bool {
        self.terms.keys().any(|m| m.contains_any(vars))
    }

    /// All variables occurring, sorted.
    pub fn support(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.vars() {
                if let Err(pos) = vs.binary_search(&v) {
                    vs.insert(pos, v);
                }
            }
        }
        vs
    }

    /// Apply the root reduction rules until all root exponents are 0 or 1.
    fn reduce_roots(&mut self) {
        // u^2 -> t and v^2 -> s swap a root exponent for a time exponent
        // (monomial to monomial); um^2 -> t - 1 and vm^2 -> s - 1 expand into
        // binomial powers. Handle both by rebuilding offending terms.
        loop {
            let offender = self
                .terms
                .keys()
                .find(|m| {
                    m.vars()
                        .any(|(v, e)| v.is_root() && e >= 2)
                })
                .cloned();
            let Some(m) = offender else { break };
            let c = self.terms.remove(&m).expect("term present");
            let (v, _) = m.vars().find(|&(v, e)| v.is_root() && e >= 2).unwrap();
            let (rest, e) = m.strip(v);
            let (half, parity) = (e / 2, e % 2);
            let base = rest.mul(&Mono::var_pow(v, parity));
            // replacement polynomial for v^2, raised to `half`
            let sq: Poly = if v == super::vars::U {
                Poly::var(T)
            } else if v == UM {
                Poly::var(T) - Poly::one()
            } else if v == super::vars::V {
                Poly::var(S)
            } else {
                debug_assert_eq!(v, VM);
                Poly::var(S) - Poly::one()
            };
            let repl = sq.pow_raw(half as u32);
            for (rm, rc) in repl.terms {
                self.add_term(base.mul(&rm), &c * &rc);
            }
        }
    }

    /// Power without root reduction on intermediate squarings (the factors
    /// are already reduced; products of reduced values reduce at the end).
    fn pow_raw(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul_raw(self);
        }
        acc
    }

    fn mul_raw(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
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

    /// Partial derivative treating every variable as independent (roots are
    /// handled by the total-derivative layer in `RatExpr`).
    pub fn diff_var(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let (rest, _) = m.strip(v);
            let lowered = rest.mul(&Mono::var_pow(v, e - 1));
            out.add_term(lowered, c * qi(e as i64));
        }
        out
    }

    /// Exact polynomial division: `self = q * d` with no remainder.
    ///
    /// Returns `None` when `d` does not divide `self` (a value, not an error).
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dm, dc) = d.leading().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            let t = Poly::term(qc, qm);
            rem = rem - &t * d;
            quot = quot + t;
        }
        Some(quot)
    }

    /// Substitute `v` by a polynomial (used for Fuchs elimination and cycle
    /// locus substitution; general substitution lives in `RatExpr`).
    pub fn substitute_var(&self, v: Var, by: &Poly) -> Poly {
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.strip(v);
            while powers.len() <= e as usize {
                let next = &powers[powers.len() - 1] * by;
                powers.push(next);
            }
            out = out + &Poly::term(c.clone(), rest) * &powers[e as usize];
        }
        out
    }

    /// Scale so the leading coefficient is 1 (for factor canonicalization).
    pub fn monic(&self) -> (Poly, Q) {
        match self.leading() {
            None => (Poly::zero(), Q::one()),
            Some((_, c)) => {
                let c = c.clone();
                let mut out = self.clone();
                for coef in out.terms.values_mut() {
                    *coef = &*coef / &c;
                }
                (out, c)
            }
        }
    }

    /// Flip the sign of one root variable (the conjugation automorphism used
    /// to rationalize denominators containing that root).
    pub fn conjugate_root(&self, v: Var) -> Poly {
        debug_assert!(v.is_root());
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) % 2 == 1 {
                out.add_term(m.clone(), -c.clone());
            } else {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add<&Poly> for Poly {
    type Output = Poly;
    fn add(mut self, rhs: &Poly) -> Poly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Sub<&Poly> for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: &Poly) -> Poly {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
        self
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = self.mul_raw(rhs);
        out.reduce_roots();
        out
    }
}

impl Mul<&Q> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Q) -> Poly {
        if rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * rhs;
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", crate::exactalg::print_poly(self))
    }
}

/// Format a rational for display: integers bare, fractions as (n/d).
pub fn format_q(c: &Q) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

/// Sign of a rational.
pub fn q_is_negative(c: &Q) -> bool {
    c.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars::*;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }

    #[test]
    fn grlex_ordering() {
        // q1^2 > q1*p1 > p1^2 > q1 > p1 > 1
        let q1q1 = Mono::var_pow(Q1, 2);
        let q1p1 = Mono::var(Q1).mul(&Mono::var(P1));
        let p1p1 = Mono::var_pow(P1, 2);
        assert!(q1q1 > q1p1);
        assert!(q1p1 > p1p1);
        assert!(p1p1 > Mono::var(Q1));
        assert!(Mono::var(Q1) > Mono::var(P1));
        assert!(Mono::var(P1) > Mono::one());
    }

    #[test]
    fn arithmetic_basics() {
        let p = (v(Q1) + v(P1)).pow(2);
        let expanded = &v(Q1) * &v(Q1) + &(&v(Q1) * &v(P1)) * &Poly::int(2) + &v(P1) * &v(P1);
        assert_eq!(p, expanded);
        assert!((p.clone() - expanded).is_zero());
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn root_reduction() {
        // u^2 = t, u^3 = t*u
        assert_eq!(&v(U) * &v(U), v(T));
        assert_eq!(v(U).pow(3), &v(T) * &v(U));
        // um^2 = t - 1
        assert_eq!(&v(UM) * &v(UM), v(T) - Poly::one());
        // (u*um)^2 = t^2 - t
        let w = &v(U) * &v(UM);
        assert_eq!(&w * &w, &v(T) * &(v(T) - Poly::one()));
        // v^2 = s, vm^2 = s - 1
        assert_eq!(&v(V) * &v(V), v(S));
        assert_eq!(&v(VM) * &v(VM), v(S) - Poly::one());
    }

    #[test]
    fn exact_division() {
        let a = (v(Q1) + v(T)).pow(3);
        let b = (v(Q1) + v(T)).pow(2);
        assert_eq!(a.exact_div(&b), Some(v(Q1) + v(T)));
        let c = v(Q1) + Poly::one();
        assert_eq!(a.exact_div(&c), None);
        assert_eq!(Poly::zero().exact_div(&b), Some(Poly::zero()));
        assert_eq!(a.exact_div(&Poly::zero()), None);
    }

    #[test]
    fn derivative() {
        let p = &(&v(Q1) * &v(Q1)) * &v(T) + v(P1);
        let d = p.diff_var(Q1);
        assert_eq!(d, &(&Poly::int(2) * &v(Q1)) * &v(T));
        assert_eq!(p.diff_var(S), Poly::zero());
    }

    #[test]
    fn substitution() {
        let p = &v(A6) * &v(A6) + v(A1);
        let by = Poly::one() - &Poly::int(2) * &v(A1);
        let q = p.substitute_var(A6, &by);
        assert_eq!(q, &by * &by + v(A1));
    }

    #[test]
    fn conjugation() {
        let p = v(T) + &v(U) * &Poly::int(3);
        let c = p.conjugate_root(U);
        // (t + 3u)(t - 3u) = t^2 - 9t
        assert_eq!(&p * &c, &v(T) * &v(T) - &v(T) * &Poly::int(9));
    }
}
