//! Two-forms, Poisson brackets, and canonicity checks.
//!
//! Two-forms live on the total space spanned by the four phase variables
//! and the two deformation times; a form is a table of coefficients on the
//! ordered basis `dv_i ^ dv_j` with `i < j`. Differentials of expressions
//! involving the adjoined square roots pick up the chain-rule terms through
//! the total time derivatives.

use std::collections::BTreeMap;

use crate::exactalg::vars::{S, T};
use crate::exactalg::{zero_test, AlgError, FuchsPolicy, RatExpr, Var};

use super::map::BirationalMap;

/// Derivative of `e` with respect to `v`, total in the time variables so
/// the square-root symbols are carried along.
pub fn ddv(e: &RatExpr, v: Var) -> RatExpr {
    if v == T {
        e.diff_total_t()
    } else if v == S {
        e.diff_total_s()
    } else {
        e.diff(v)
    }
}

/// An antisymmetric two-form with rational-expression coefficients.
#[derive(Clone, Default)]
pub struct TwoForm {
    coeffs: BTreeMap<(Var, Var), RatExpr>,
}

impl TwoForm {
    pub fn zero() -> TwoForm {
        TwoForm::default()
    }

    /// Adds `c * dv_i ^ dv_j`, normalizing the orientation.
    pub fn add_term(&mut self, i: Var, j: Var, c: RatExpr) {
        if i == j || c.is_zero() {
            return;
        }
        let (key, c) = if i < j { ((i, j), c) } else { ((j, i), -c) };
        let entry = self.coeffs.remove(&key).unwrap_or_else(RatExpr::zero);
        let sum = entry + c;
        if !sum.is_zero() {
            self.coeffs.insert(key, sum);
        }
    }

    pub fn coefficient(&self, i: Var, j: Var) -> RatExpr {
        if i < j {
            self.coeffs.get(&(i, j)).cloned().unwrap_or_else(RatExpr::zero)
        } else {
            -self.coefficient(j, i)
        }
    }

    pub fn is_zero_under(&self, policy: &FuchsPolicy) -> Result<bool, AlgError> {
        for c in self.coeffs.values() {
            if !zero_test(c, policy)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sub(&self, other: &TwoForm) -> TwoForm {
        let mut out = self.clone();
        for (&(i, j), c) in &other.coeffs {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl std::fmt::Debug for TwoForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for ((i, j), c) in &self.coeffs {
            writeln!(f, "d{} ^ d{}: {:?}", i, j, c)?;
        }
        Ok(())
    }
}

/// The wedge `dF ^ dG` expanded over the given base variables.
pub fn wedge(fe: &RatExpr, g: &RatExpr, vars: &[Var]) -> TwoForm {
    let df: Vec<RatExpr> = vars.iter().map(|&v| ddv(fe, v)).collect();
    let dg: Vec<RatExpr> = vars.iter().map(|&v| ddv(g, v)).collect();
    let mut out = TwoForm::zero();
    for i in 0..vars.len() {
        for j in (i + 1)..vars.len() {
            let c = df[i].clone() * dg[j].clone() - df[j].clone() * dg[i].clone();
            out.add_term(vars[i], vars[j], c);
        }
    }
    out
}

/// Pullback of `sum dq ^ dp` (over `dst_pairs`) through the map, expanded
/// over `vars`.
pub fn pullback_canonical(map: &BirationalMap, dst_pairs: &[(Var, Var)], vars: &[Var]) -> TwoForm {
    let mut out = TwoForm::zero();
    for &(q, p) in dst_pairs {
        let w = wedge(&map.image(q), &map.image(p), vars);
        for ((i, j), c) in w.coeffs {
            out.add_term(i, j, c);
        }
    }
    out
}

/// Poisson bracket with respect to the given conjugate pairs. Derivatives
/// are partial in the phase variables only.
pub fn poisson(f: &RatExpr, g: &RatExpr, pairs: &[(Var, Var)]) -> RatExpr {
    let mut out = RatExpr::zero();
    for &(q, p) in pairs {
        out = out + f.diff(q) * g.diff(p) - f.diff(p) * g.diff(q);
    }
    out
}

/// Checks that the image coordinates of `dst_pairs` satisfy the canonical
/// bracket relations in the source bracket: conjugate pairs bracket to 1,
/// everything else to 0. Times are held fixed.
pub fn is_canonical(
    map: &BirationalMap,
    src_pairs: &[(Var, Var)],
    dst_pairs: &[(Var, Var)],
    policy: &FuchsPolicy,
) -> Result<bool, AlgError> {
    let mut coords = Vec::new();
    for &(q, p) in dst_pairs {
        coords.push(map.image(q));
        coords.push(map.image(p));
    }
    for i in 0..coords.len() {
        for j in (i + 1)..coords.len() {
            let b = poisson(&coords[i], &coords[j], src_pairs);
            // Coordinates i, i+1 with even i are a conjugate pair.
            let expect = if i % 2 == 0 && j == i + 1 {
                RatExpr::one()
            } else {
                RatExpr::zero()
            };
            if !zero_test(&(b - expect), policy)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the total-space identity
/// `sum dX_i ^ dY_i = sum dq_i ^ dp_i + d(corr_t) ^ dt + d(corr_s) ^ ds`
/// over the six base variables, where `X_i, Y_i` are the images of
/// `dst_pairs`. A map with zero corrections is canonical in the strong
/// sense; `corr_t, corr_s` are exactly the terms subtracted from the
/// Hamiltonians before transport, `K_i = (H_i - corr_i) o inverse`.
pub fn two_form_identity(
    map: &BirationalMap,
    src_pairs: &[(Var, Var)],
    dst_pairs: &[(Var, Var)],
    corr_t: &RatExpr,
    corr_s: &RatExpr,
    policy: &FuchsPolicy,
) -> Result<bool, AlgError> {
    let mut vars: Vec<Var> = Vec::new();
    for &(q, p) in src_pairs {
        vars.push(q);
        vars.push(p);
    }
    vars.push(T);
    vars.push(S);
    let lhs = pullback_canonical(map, dst_pairs, &vars);
    let mut rhs = pullback_canonical(&BirationalMap::identity("id"), src_pairs, &vars);
    for ((i, j), c) in wedge(corr_t, &RatExpr::var(T), &vars).coeffs {
        rhs.add_term(i, j, c);
    }
    for ((i, j), c) in wedge(corr_s, &RatExpr::var(S), &vars).coeffs {
        rhs.add_term(i, j, c);
    }
    lhs.sub(&rhs).is_zero_under(policy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse;
    use crate::exactalg::vars::{P1, P2, Q1, Q2};
    use std::collections::BTreeMap;

    const PAIRS: [(Var, Var); 2] = [(Q1, P1), (Q2, P2)];

    fn map_of(pairs: &[(Var, &str)]) -> BirationalMap {
        let mut images = BTreeMap::new();
        for (v, src) in pairs {
            images.insert(*v, parse(src).unwrap());
        }
        BirationalMap::new("m", images)
    }

    #[test]
    fn poisson_of_conjugate_pair() {
        let b = poisson(&RatExpr::var(Q1), &RatExpr::var(P1), &PAIRS);
        assert!((b - RatExpr::one()).is_zero());
    }

    #[test]
    fn canonical_point_transformation_passes() {
        // q1 -> 1/q1, p1 -> -q1*(q1*p1 + a1) preserves dq ^ dp.
        let m = map_of(&[(Q1, "1/q1"), (P1, "-q1*(q1*p1 + a1)")]);
        let policy = FuchsPolicy::off();
        assert!(is_canonical(&m, &PAIRS, &PAIRS, &policy).unwrap());
        assert!(two_form_identity(&m, &PAIRS, &PAIRS, &RatExpr::zero(), &RatExpr::zero(), &policy)
            .unwrap());
    }

    #[test]
    fn shear_fails_canonicity() {
        let m = map_of(&[(Q1, "q1"), (P1, "p1 + q1*p2")]);
        let policy = FuchsPolicy::off();
        assert!(!is_canonical(&m, &PAIRS, &PAIRS, &policy).unwrap());
    }

    #[test]
    fn time_dependent_map_needs_correction_term() {
        // q1 -> q1, p1 -> p1 + t has dq1 ^ dt excess, so the transported
        // Hamiltonian is (H - q1) o inverse.
        let m = map_of(&[(P1, "p1 + t")]);
        let policy = FuchsPolicy::off();
        // Fixed-time brackets still canonical.
        assert!(is_canonical(&m, &PAIRS, &PAIRS, &policy).unwrap());
        // Total-space identity fails without the correction, passes with it.
        assert!(!two_form_identity(&m, &PAIRS, &PAIRS, &RatExpr::zero(), &RatExpr::zero(), &policy)
            .unwrap());
        let corr = parse("q1").unwrap();
        assert!(two_form_identity(&m, &PAIRS, &PAIRS, &corr, &RatExpr::zero(), &policy).unwrap());
    }

    #[test]
    fn wedge_sees_root_chain_rule() {
        // d(u) ^ dt vanishes since du is proportional to dt.
        let u = RatExpr::var(crate::exactalg::vars::U);
        let w = wedge(&u, &RatExpr::var(T), &[Q1, P1, T, S]);
        let policy = FuchsPolicy::off();
        assert!(w.is_zero_under(&policy).unwrap());
    }
}
