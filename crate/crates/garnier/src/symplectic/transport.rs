//! Hamiltonian systems, flow transport, and integrability.
//!
//! A [`HamSystem`] is a compatible pair of Hamiltonians generating the
//! flows in the two deformation times. The transport check certifies that
//! a map sends solutions of a source pair to solutions of a target pair by
//! verifying the eight chain-rule flow identities exactly; the derivation
//! helper produces the transported Hamiltonians from the time-change
//! Jacobian instead, for comparison against a stated target.

use crate::exactalg::vars::{S, T};
use crate::exactalg::{is_free_of, zero_test, AlgError, FuchsPolicy, RatExpr, Var};

use super::map::BirationalMap;
use super::twoform::{ddv, poisson};

/// A pair of Hamiltonians: `h[0]` generates the flow in `t`, `h[1]` the
/// flow in `s`.
#[derive(Clone, Debug)]
pub struct HamSystem {
    pub name: String,
    pub h: [RatExpr; 2],
}

impl HamSystem {
    pub fn new(name: &str, h1: RatExpr, h2: RatExpr) -> HamSystem {
        HamSystem {
            name: name.to_string(),
            h: [h1, h2],
        }
    }

    /// The velocity of coordinate `v` under the flow of `h[k]`:
    /// `dq/dtau = dH/dp`, `dp/dtau = -dH/dq`.
    pub fn velocity(&self, k: usize, v: Var, pairs: &[(Var, Var)]) -> RatExpr {
        for &(q, p) in pairs {
            if v == q {
                return self.h[k].diff(p);
            }
            if v == p {
                return -self.h[k].diff(q);
            }
        }
        RatExpr::zero()
    }
}

/// The eight transport residuals for `map` sending solutions of `src`
/// (phase pairs `src_pairs`) to solutions of `dst` (phase pairs
/// `dst_pairs`): for each target coordinate image F and each source time,
/// the derivative of F along the source flow minus the target velocity at
/// the image times the time-change Jacobian. All residuals zero means the
/// map transports solutions exactly.
pub fn flow_residuals(
    src: &HamSystem,
    dst: &HamSystem,
    map: &BirationalMap,
    src_pairs: &[(Var, Var)],
    dst_pairs: &[(Var, Var)],
) -> Result<Vec<RatExpr>, AlgError> {
    let times = [T, S];
    let t_img = [map.image(T), map.image(S)];
    let mut out = Vec::new();
    for &(xq, xp) in dst_pairs {
        for coord in [xq, xp] {
            let f = map.image(coord);
            for (ti, &tau) in times.iter().enumerate() {
                // d/dtau of the image along the source flow.
                let mut lhs = ddv(&f, tau);
                for &(q, p) in src_pairs {
                    lhs = lhs
                        + f.diff(q) * src.velocity(ti, q, src_pairs)
                        + f.diff(p) * src.velocity(ti, p, src_pairs);
                }
                // Target velocity at the image, through the time change.
                let mut rhs = RatExpr::zero();
                for k in 0..2 {
                    let vel = dst.velocity(k, coord, dst_pairs);
                    let vel = map.apply(&vel)?;
                    rhs = rhs + vel * ddv(&t_img[k], tau);
                }
                out.push(lhs - rhs);
            }
        }
    }
    Ok(out)
}

/// Checks that all transport residuals vanish under the policy.
pub fn transports(
    src: &HamSystem,
    dst: &HamSystem,
    map: &BirationalMap,
    src_pairs: &[(Var, Var)],
    dst_pairs: &[(Var, Var)],
    policy: &FuchsPolicy,
) -> Result<bool, AlgError> {
    for r in flow_residuals(src, dst, map, src_pairs, dst_pairs)? {
        if !zero_test(&r, policy)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Derives the transported Hamiltonian pair of `map` from the time-change
/// Jacobian: `K_1 = ((H_1 - c_t) dt/dT + (H_2 - c_s) ds/dT) o inverse` and
/// likewise for `K_2`, where `c_t, c_s` are the subtracted corrections
/// (zero for strongly canonical maps). The result is exact up to additive
/// functions of the new times.
pub fn transported_hamiltonians(
    src: &HamSystem,
    map: &BirationalMap,
    inverse: &BirationalMap,
    corr: (&RatExpr, &RatExpr),
) -> Result<[RatExpr; 2], AlgError> {
    let t_img = map.image(T);
    let s_img = map.image(S);
    let tt = ddv(&t_img, T);
    let ts = ddv(&t_img, S);
    let st = ddv(&s_img, T);
    let ss = ddv(&s_img, S);
    let det = tt.clone() * ss.clone() - ts.clone() * st.clone();
    if det.is_zero() {
        return Err(AlgError::Unsupported(format!(
            "map {} has a degenerate time change",
            map.name
        )));
    }
    // Inverse Jacobian entries d(t,s)/d(T,S) as functions of (t,s).
    let dt_dt = ss / det.clone();
    let ds_dt = -st / det.clone();
    let dt_ds = -ts / det.clone();
    let ds_ds = tt / det;
    let g1 = src.h[0].clone() - corr.0.clone();
    let g2 = src.h[1].clone() - corr.1.clone();
    let k1 = inverse.apply(&(g1.clone() * dt_dt + g2.clone() * ds_dt))?;
    let k2 = inverse.apply(&(g1 * dt_ds + g2 * ds_ds))?;
    Ok([k1, k2])
}

/// How a derived Hamiltonian compares against a stated one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    /// Identical as rational expressions.
    Exact,
    /// Differ by a function of the times and parameters only, which is the
    /// intrinsic ambiguity of a transported Hamiltonian.
    ModuloTimeFunctions,
    /// Differ in a way involving the phase variables.
    Mismatch,
}

/// Compares a derived Hamiltonian with a stated target.
pub fn compare_hamiltonians(
    candidate: &RatExpr,
    target: &RatExpr,
    phase: &[Var],
    policy: &FuchsPolicy,
) -> Result<Exactness, AlgError> {
    let diff = candidate.clone() - target.clone();
    if zero_test(&diff, policy)? {
        return Ok(Exactness::Exact);
    }
    if is_free_of(&diff, phase, policy)? {
        return Ok(Exactness::ModuloTimeFunctions);
    }
    Ok(Exactness::Mismatch)
}

/// Which sign of the compatibility identity
/// `dH1/ds - dH2/dt +- {H1, H2} = 0` holds for a Hamiltonian pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompatibilitySign {
    Plus,
    Minus,
    BothVanish,
    Neither,
}

/// Tests the compatibility (complete integrability) of the pair under both
/// bracket signs. For a genuine commuting pair with nontrivial bracket,
/// exactly one sign vanishes.
pub fn compatibility(
    sys: &HamSystem,
    pairs: &[(Var, Var)],
    policy: &FuchsPolicy,
) -> Result<CompatibilitySign, AlgError> {
    let base = sys.h[0].diff_total_s() - sys.h[1].diff_total_t();
    let bracket = poisson(&sys.h[0], &sys.h[1], pairs);
    let plus = zero_test(&(base.clone() + bracket.clone()), policy)?;
    let minus = zero_test(&(base - bracket), policy)?;
    Ok(match (plus, minus) {
        (true, true) => CompatibilitySign::BothVanish,
        (true, false) => CompatibilitySign::Plus,
        (false, true) => CompatibilitySign::Minus,
        (false, false) => CompatibilitySign::Neither,
    })
}

/// Rewrites a system in chart coordinates: `K_j = (H_j - corr_j) o inverse`
/// where `inverse` expresses the old phase variables in the chart ones.
/// Returns the rewritten pair together with, per Hamiltonian, whether its
/// denominator is free of the chart phase variables (the holomorphy
/// verdict).
pub fn chart_hamiltonians(
    src: &HamSystem,
    inverse: &BirationalMap,
    corr: (&RatExpr, &RatExpr),
    chart_phase: &[Var],
) -> Result<([RatExpr; 2], [bool; 2]), AlgError> {
    let k1 = inverse.apply(&(src.h[0].clone() - corr.0.clone()))?;
    let k2 = inverse.apply(&(src.h[1].clone() - corr.1.clone()))?;
    let ok1 = !k1
        .denominator_factors()
        .iter()
        .any(|(f, _)| f.mentions_any(chart_phase));
    let ok2 = !k2
        .denominator_factors()
        .iter()
        .any(|(f, _)| f.mentions_any(chart_phase));
    Ok(([k1, k2], [ok1, ok2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse;
    use crate::exactalg::vars::{P1, P2, Q1, Q2};
    use std::collections::BTreeMap;

    const PAIRS: [(Var, Var); 2] = [(Q1, P1), (Q2, P2)];

    fn sys(h1: &str, h2: &str) -> HamSystem {
        HamSystem::new("sys", parse(h1).unwrap(), parse(h2).unwrap())
    }

    fn map_of(pairs: &[(Var, &str)]) -> BirationalMap {
        let mut images = BTreeMap::new();
        for (v, src) in pairs {
            images.insert(*v, parse(src).unwrap());
        }
        BirationalMap::new("m", images)
    }

    #[test]
    fn identity_transports_any_system_to_itself() {
        let h = sys("q1^2*p1 + t*p2", "q2*p2^2 + s*q1");
        let id = BirationalMap::identity("id");
        let policy = FuchsPolicy::off();
        assert!(transports(&h, &h, &id, &PAIRS, &PAIRS, &policy).unwrap());
    }

    #[test]
    fn momentum_shift_transports_with_shifted_hamiltonian() {
        // p1 -> p1 + t sends the flow of H to the flow of (H - q1) o inv.
        let h = sys("p1^2 + q1*p1", "0");
        let m = map_of(&[(P1, "p1 + t")]);
        let inv = m.invert_auto().unwrap();
        let corr0 = parse("q1").unwrap();
        let zero = RatExpr::zero();
        let ks = transported_hamiltonians(&h, &m, &inv, (&corr0, &zero)).unwrap();
        let k = HamSystem::new("k", ks[0].clone(), ks[1].clone());
        let policy = FuchsPolicy::off();
        assert!(transports(&h, &k, &m, &PAIRS, &PAIRS, &policy).unwrap());
        // Without the correction the transported flow equations fail.
        let bad = transported_hamiltonians(&h, &m, &inv, (&zero, &zero)).unwrap();
        let bad = HamSystem::new("bad", bad[0].clone(), bad[1].clone());
        assert!(!transports(&h, &bad, &m, &PAIRS, &PAIRS, &policy).unwrap());
    }

    #[test]
    fn time_inversion_rescales_hamiltonian() {
        // t -> 1/t with identity phase: K1 = -t^2 H1 o inv expressed in new time.
        let h = sys("q1*p1", "0");
        let m = map_of(&[(T, "1/t")]);
        let inv = m.invert_auto().unwrap();
        let zero = RatExpr::zero();
        let ks = transported_hamiltonians(&h, &m, &inv, (&zero, &zero)).unwrap();
        // dt/dT at T = 1/t is -1/T^2; inverse substitutes t = 1/T.
        let expect = parse("-q1*p1/t^2").unwrap();
        assert!((ks[0].clone() - expect).is_zero());
        let k = HamSystem::new("k", ks[0].clone(), ks[1].clone());
        let policy = FuchsPolicy::off();
        assert!(transports(&h, &k, &m, &PAIRS, &PAIRS, &policy).unwrap());
    }

    #[test]
    fn compatibility_sign_detection() {
        // H1 = p1, H2 = q1 + t: the time part is -1 and {H1, H2} = -1, so
        // only the minus sign vanishes.
        let h = sys("p1", "q1 + t");
        let policy = FuchsPolicy::off();
        assert_eq!(
            compatibility(&h, &PAIRS, &policy).unwrap(),
            CompatibilitySign::Minus
        );
        let flipped = sys("q1", "p1 + t");
        assert_eq!(
            compatibility(&flipped, &PAIRS, &policy).unwrap(),
            CompatibilitySign::Plus
        );
        let commuting = sys("p1^2", "q2");
        assert_eq!(
            compatibility(&commuting, &PAIRS, &policy).unwrap(),
            CompatibilitySign::BothVanish
        );
    }

    #[test]
    fn chart_rewrite_detects_holomorphy() {
        // H = p1 is regular in the chart q1 = 1/x, p1 = -x*(x*y): K = -x^2*y.
        let h = sys("p1", "0");
        let inv = map_of(&[(Q1, "1/x"), (P1, "-x^2*y")]);
        let zero = RatExpr::zero();
        let chart = [crate::exactalg::vars::X, crate::exactalg::vars::Y];
        let (ks, ok) = chart_hamiltonians(&h, &inv, (&zero, &zero), &chart).unwrap();
        assert!(ok[0] && ok[1]);
        assert!((ks[0].clone() - parse("-x^2*y").unwrap()).is_zero());
        // H = q1 becomes 1/x: not holomorphic.
        let h2 = sys("q1", "0");
        let (_, ok2) = chart_hamiltonians(&h2, &inv, (&zero, &zero), &chart).unwrap();
        assert!(!ok2[0]);
    }
}
