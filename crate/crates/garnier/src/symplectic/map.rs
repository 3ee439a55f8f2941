//! Birational maps between coordinate systems.
//!
//! A [`BirationalMap`] stores, for each variable it moves, the image
//! coordinate as a rational expression in the source variables. Variables
//! without an entry are fixed. Pulling a function back through the map is
//! substitution of the image table; composition substitutes one table into
//! another. Inverses are computed by triangular elimination: the forward
//! equations are solved one variable at a time, accepting a variable only
//! when its equation is linear in it with coefficients free of the
//! remaining unknowns.

use std::collections::BTreeMap;

use crate::exactalg::{AlgError, FuchsPolicy, Poly, RatExpr, Var};

/// Base index for the fresh symbols used during inversion. Kept far above
/// the range used by undetermined-coefficient solving so the two can never
/// collide.
const FRESH_BASE: u16 = 900;

/// A birational change of coordinates, stored as an image table.
#[derive(Clone, PartialEq, Eq)]
pub struct BirationalMap {
    pub name: String,
    images: BTreeMap<Var, RatExpr>,
}

impl BirationalMap {
    /// The identity map.
    pub fn identity(name: &str) -> BirationalMap {
        BirationalMap {
            name: name.to_string(),
            images: BTreeMap::new(),
        }
    }

    /// Builds a map from an image table, dropping entries that fix their
    /// variable.
    pub fn new(name: &str, images: BTreeMap<Var, RatExpr>) -> BirationalMap {
        let mut m = BirationalMap::identity(name);
        for (v, e) in images {
            m.set(v, e);
        }
        m
    }

    /// Sets the image of one variable.
    pub fn set(&mut self, v: Var, e: RatExpr) {
        if e == RatExpr::var(v) {
            self.images.remove(&v);
        } else {
            self.images.insert(v, e);
        }
    }

    /// The image of a variable (the variable itself when not moved).
    pub fn image(&self, v: Var) -> RatExpr {
        self.images.get(&v).cloned().unwrap_or_else(|| RatExpr::var(v))
    }

    /// Variables this map moves.
    pub fn moved(&self) -> Vec<Var> {
        self.images.keys().copied().collect()
    }

    /// The raw image table.
    pub fn table(&self) -> &BTreeMap<Var, RatExpr> {
        &self.images
    }

    /// Pulls a function back through the map: `e` composed with this map.
    ///
    /// Errors when `e` mentions a square-root symbol whose base time the
    /// map moves without specifying the root's own image; substituting
    /// such an expression would silently treat the root as constant.
    pub fn apply(&self, e: &RatExpr) -> Result<RatExpr, AlgError> {
        for (root, base) in root_definitions() {
            if !e.mentions_any(&[root]) || self.images.contains_key(&root) {
                continue;
            }
            if base.support().iter().any(|v| self.images.contains_key(v)) {
                return Err(AlgError::Unsupported(format!(
                    "map {} moves the base of {} but gives it no image",
                    self.name, root
                )));
            }
        }
        e.substitute(&self.images)
    }

    /// Composition `f.compose(g)`: apply `g` first, then `f`. The image of
    /// each coordinate is `f`'s image with `g`'s table substituted in, so
    /// parameter actions compose along with the phase action.
    pub fn compose(&self, g: &BirationalMap) -> Result<BirationalMap, AlgError> {
        let mut images = BTreeMap::new();
        let mut keys: Vec<Var> = self.images.keys().copied().collect();
        for k in g.images.keys() {
            if !keys.contains(k) {
                keys.push(*k);
            }
        }
        for v in keys {
            images.insert(v, g.apply(&self.image(v))?);
        }
        Ok(BirationalMap::new(
            &format!("{}*{}", self.name, g.name),
            images,
        ))
    }

    /// Composes a chain of maps, rightmost applied first.
    pub fn compose_chain(maps: &[&BirationalMap]) -> Result<BirationalMap, AlgError> {
        let mut acc = BirationalMap::identity("id");
        for m in maps.iter().rev() {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Tests whether two maps agree on the given variables under the policy.
    pub fn agrees_with(
        &self,
        other: &BirationalMap,
        vars: &[Var],
        policy: &FuchsPolicy,
    ) -> Result<bool, AlgError> {
        for &v in vars {
            if !crate::exactalg::eq_under(&self.image(v), &other.image(v), policy)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Tests whether the map fixes the given variables under the policy.
    pub fn is_identity_on(&self, vars: &[Var], policy: &FuchsPolicy) -> Result<bool, AlgError> {
        self.agrees_with(&BirationalMap::identity("id"), vars, policy)
    }

    /// Inverts the map by solving the forward equations for `unknowns`.
    ///
    /// Every image is equated with a fresh symbol; the system is swept
    /// repeatedly, extracting any unknown whose (denominator-cleared)
    /// equation is linear in it with coefficients already known. Returns
    /// the inverse image table with the fresh symbols renamed back to the
    /// image keys.
    pub fn invert(&self, unknowns: &[Var]) -> Result<BirationalMap, AlgError> {
        // Fresh symbol per image key.
        let keys: Vec<Var> = self.images.keys().copied().collect();
        let fresh: BTreeMap<Var, Var> = keys
            .iter()
            .enumerate()
            .map(|(i, &k)| (k, Var::c(FRESH_BASE as usize + i)))
            .collect();
        let mut equations: Vec<RatExpr> = keys
            .iter()
            .map(|k| self.image(*k) - RatExpr::var(fresh[k]))
            .collect();
        let mut used = vec![false; equations.len()];
        let mut solved: BTreeMap<Var, RatExpr> = BTreeMap::new();
        let mut pending: Vec<Var> = unknowns.to_vec();

        while !pending.is_empty() {
            let mut progress = false;
            'scan: for i in 0..equations.len() {
                if used[i] {
                    continue;
                }
                let num = equations[i].numerator().clone();
                for (pi, &v) in pending.iter().enumerate() {
                    if num.degree_in(&[v]) != 1 {
                        continue;
                    }
                    let a = num.diff_var(v);
                    let b = num.substitute_var(v, &Poly::zero());
                    let others: Vec<Var> =
                        pending.iter().copied().filter(|&w| w != v).collect();
                    if a.mentions_any(&others) || b.mentions_any(&others) {
                        continue;
                    }
                    let value = RatExpr::new(-b, vec![(a, 1)]);
                    solved.insert(v, value.clone());
                    pending.remove(pi);
                    used[i] = true;
                    let mut one = BTreeMap::new();
                    one.insert(v, value);
                    for (j, eq) in equations.iter_mut().enumerate() {
                        if !used[j] {
                            *eq = eq.substitute(&one)?;
                        }
                    }
                    progress = true;
                    break 'scan;
                }
            }
            if !progress {
                return Err(AlgError::Unsupported(format!(
                    "map {} is not triangular over {:?}",
                    self.name, pending
                )));
            }
        }

        // Rename fresh symbols back to the coordinate names and check that
        // nothing else leaked in.
        let rename: BTreeMap<Var, RatExpr> = fresh
            .iter()
            .map(|(&k, &f)| (f, RatExpr::var(k)))
            .collect();
        let mut images = BTreeMap::new();
        for (&v, e) in &solved {
            images.insert(v, e.substitute(&rename)?);
        }
        Ok(BirationalMap::new(&format!("{}^-1", self.name), images))
    }

    /// Inverts over the moved variables (the usual case for self-maps of
    /// phase space).
    pub fn invert_auto(&self) -> Result<BirationalMap, AlgError> {
        self.invert(&self.moved())
    }

    /// Checks that every square-root symbol the map moves squares to the
    /// image of its defining polynomial. Roots the map leaves alone are
    /// not checked here; [`BirationalMap::apply`] rejects uses that would
    /// need them.
    pub fn validate_roots(&self) -> Result<(), AlgError> {
        for (root, base) in root_definitions() {
            if !self.images.contains_key(&root) {
                continue;
            }
            let lhs = self.image(root).clone() * self.image(root);
            let rhs = RatExpr::from_poly(base).substitute(&self.images)?;
            if !(lhs - rhs).is_zero() {
                return Err(AlgError::Unsupported(format!(
                    "map {} moves {} inconsistently with its square",
                    self.name, root
                )));
            }
        }
        Ok(())
    }
}

/// The adjoined square roots with their defining polynomials.
fn root_definitions() -> [(Var, Poly); 4] {
    use crate::exactalg::vars::{S, T, U, UM, V, VM};
    [
        (U, Poly::var(T)),
        (UM, Poly::var(T) - Poly::one()),
        (V, Poly::var(S)),
        (VM, Poly::var(S) - Poly::one()),
    ]
}

impl std::fmt::Debug for BirationalMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "map {}:", self.name)?;
        for (v, e) in &self.images {
            writeln!(f, "  {} -> {:?}", v, e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars::{A1, A2, P1, Q1, T};
    use crate::exactalg::parse;

    fn map_of(pairs: &[(Var, &str)]) -> BirationalMap {
        let mut images = BTreeMap::new();
        for (v, src) in pairs {
            images.insert(*v, parse(src).unwrap());
        }
        BirationalMap::new("m", images)
    }

    #[test]
    fn compose_applies_right_map_first() {
        // f: q1 -> q1 + t, g: q1 -> 1/q1. (f.compose(g)): q1 -> 1/q1 + t.
        let f = map_of(&[(Q1, "q1 + t")]);
        let g = map_of(&[(Q1, "1/q1")]);
        let fg = f.compose(&g).unwrap();
        let expect = parse("1/q1 + t").unwrap();
        assert!((fg.image(Q1) - expect).is_zero());
    }

    #[test]
    fn compose_substitutes_parameters_into_phase_images() {
        let f = map_of(&[(Q1, "q1 + a1")]);
        let g = map_of(&[(A1, "a1 + a2")]);
        let fg = f.compose(&g).unwrap();
        let expect = parse("q1 + a1 + a2").unwrap();
        assert!((fg.image(Q1) - expect).is_zero());
        assert!((fg.image(A1) - parse("a1 + a2").unwrap()).is_zero());
    }

    #[test]
    fn invert_triangular_map() {
        // q1 -> 1/q1, p1 -> -q1*(q1*p1 + a1): solvable one variable at a time.
        let m = map_of(&[(Q1, "1/q1"), (P1, "-q1*(q1*p1 + a1)")]);
        let inv = m.invert_auto().unwrap();
        let round = m.compose(&inv).unwrap();
        let policy = FuchsPolicy::off();
        assert!(round.is_identity_on(&[Q1, P1, A1, T], &policy).unwrap());
        let round2 = inv.compose(&m).unwrap();
        assert!(round2.is_identity_on(&[Q1, P1, A1, T], &policy).unwrap());
    }

    #[test]
    fn invert_affine_parameter_action() {
        let m = map_of(&[(A1, "-a1"), (A2, "a2 + a1")]);
        let inv = m.invert_auto().unwrap();
        assert!((inv.image(A1) - parse("-a1").unwrap()).is_zero());
        assert!((inv.image(A2) - parse("a2 + a1").unwrap()).is_zero());
    }

    #[test]
    fn invert_rejects_non_triangular_system() {
        // Images collapse onto a single function: not invertible.
        let m = map_of(&[(Q1, "q1 + p1"), (P1, "q1 + p1 + 1")]);
        assert!(m.invert_auto().is_err());
    }

    #[test]
    fn root_validation_catches_bad_square() {
        let good = map_of(&[(T, "1/t"), (crate::exactalg::vars::U, "u/t")]);
        assert!(good.validate_roots().is_ok());
        let bad = map_of(&[(T, "1/t"), (crate::exactalg::vars::U, "u/(t - 1)")]);
        assert!(bad.validate_roots().is_err());
    }

    #[test]
    fn apply_rejects_unspecified_root_images() {
        // Moving t without saying what happens to u is fine until an
        // expression actually mentions u.
        let m = map_of(&[(T, "1/t")]);
        assert!(m.apply(&parse("q1 + t").unwrap()).is_ok());
        assert!(m.apply(&parse("u*q1").unwrap()).is_err());
        let full = map_of(&[(T, "1/t"), (crate::exactalg::vars::U, "u/t")]);
        assert!(full.apply(&parse("u*q1").unwrap()).is_ok());
    }
}
