//! Variable registry: the fixed set of indeterminates every expression is built from.
//!
//! The order of the `FIXED` table is the canonical variable order used by the
//! graded-lexicographic term order and by the printer. Ansatz coefficients
//! `c0, c1, ...` form an open-ended range appended after the fixed symbols.
//!
//! Four adjoined square roots are supported: `u^2 = t`, `um^2 = t - 1`,
//! `v^2 = s`, `vm^2 = s - 1`. Polynomial arithmetic reduces root exponents to
//! 0 or 1, so every value lives in the quotient ring where those relations hold.

use std::fmt;

/// Index into the variable registry.
///
/// Values `0..FIXED.len()` are the fixed symbols; `C_BASE + k` is the ansatz
/// coefficient `ck`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub u16);

/// Fixed symbol names in canonical order.
pub const FIXED: [&str; 26] = [
    "q1", "p1", "q2", "p2", // phase coordinates
    "x", "y", "z", "w", // chart coordinates
    "t", "s", // independent (time) variables
    "a1", "a2", "a3", "a4", "a5", "a6", // parameters
    "u", "um", "v", "vm", // adjoined roots
    "g0", "g1", "g2", "g3", "g4", "g5", // alternate parameter basis
];

/// First index of the ansatz coefficient range.
pub const C_BASE: u16 = FIXED.len() as u16;

pub const Q1: Var = Var(0);
pub const P1: Var = Var(1);
pub const Q2: Var = Var(2);
pub const P2: Var = Var(3);
pub const X: Var = Var(4);
pub const Y: Var = Var(5);
pub const Z: Var = Var(6);
pub const W: Var = Var(7);
pub const T: Var = Var(8);
pub const S: Var = Var(9);
pub const A1: Var = Var(10);
pub const A2: Var = Var(11);
pub const A3: Var = Var(12);
pub const A4: Var = Var(13);
pub const A5: Var = Var(14);
pub const A6: Var = Var(15);
pub const U: Var = Var(16);
pub const UM: Var = Var(17);
pub const V: Var = Var(18);
pub const VM: Var = Var(19);
pub const G0: Var = Var(20);
pub const G1: Var = Var(21);
pub const G2: Var = Var(22);
pub const G3: Var = Var(23);
pub const G4: Var = Var(24);
pub const G5: Var = Var(25);

/// The four phase coordinates, in order.
pub const PHASE: [Var; 4] = [Q1, P1, Q2, P2];
/// The four chart coordinates, in order.
pub const CHART: [Var; 4] = [X, Y, Z, W];
/// The six parameters, in order.
pub const PARAMS: [Var; 6] = [A1, A2, A3, A4, A5, A6];
/// The adjoined roots, in order.
pub const ROOTS: [Var; 4] = [U, UM, V, VM];
/// The alternate parameter basis, in order.
pub const GAMMAS: [Var; 6] = [G0, G1, G2, G3, G4, G5];

impl Var {
    /// Ansatz coefficient `ck`.
    pub fn c(k: usize) -> Var {
        Var(C_BASE + u16::try_from(k).expect("ansatz coefficient index fits in u16"))
    }

    /// Is this an ansatz coefficient symbol?
    pub fn is_c(self) -> bool {
        self.0 >= C_BASE
    }

    /// Is this one of the adjoined roots u, um, v, vm?
    pub fn is_root(self) -> bool {
        ROOTS.contains(&self)
    }

    /// Symbol name as written in catalog files and reports.
    pub fn name(self) -> String {
        if self.is_c() {
            format!("c{}", self.0 - C_BASE)
        } else {
            FIXED[self.0 as usize].to_string()
        }
    }

    /// Look up a symbol name; `None` for names outside the registry.
    pub fn lookup(name: &str) -> Option<Var> {
        if let Some(pos) = FIXED.iter().position(|n| *n == name) {
            return Some(Var(pos as u16));
        }
        let rest = name.strip_prefix('c')?;
        if rest.is_empty() || rest.len() > 1 && rest.starts_with('0') {
            return None;
        }
        let k: u16 = rest.parse().ok()?;
        Some(Var(C_BASE + k))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_fixed_names() {
        for (i, name) in FIXED.iter().enumerate() {
            assert_eq!(Var::lookup(name), Some(Var(i as u16)));
            assert_eq!(Var(i as u16).name(), *name);
        }
    }

    #[test]
    fn coefficient_range() {
        assert_eq!(Var::lookup("c0"), Some(Var::c(0)));
        assert_eq!(Var::lookup("c125"), Some(Var::c(125)));
        assert_eq!(Var::c(7).name(), "c7");
        assert!(Var::c(3).is_c());
        assert!(!T.is_c());
    }

    #[test]
    fn rejects_unknown_names() {
        for bad in ["q3", "alpha", "c", "c01", "C1", "tt", ""] {
            assert_eq!(Var::lookup(bad), None, "{bad:?} should not resolve");
        }
    }
}
