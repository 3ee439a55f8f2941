//! The claim suites: each suite loads objects from the catalog, checks a
//! family of algebraic statements exactly, and returns [`Claim`]s.
//!
//! Suites run independently and merge deterministically in registry order.
//! A claim about a display stored verbatim despite being a suspected
//! misprint carries `expected_failure`, so the refutation is the
//! anticipated verdict and the corrected companion entry carries the
//! proof.

pub mod ansatz;
pub mod backlund;
pub mod blowup;
pub mod correspondence;
pub mod cycles;
pub mod holomorphy;
pub mod integrability;
pub mod relations;
pub mod seeds;
pub mod symplectic;
pub mod translations;
pub mod words;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::catalog::{Catalog, CatalogError};
use crate::exactalg::vars::{G0, GAMMAS};
use crate::exactalg::{FuchsMode, FuchsPolicy, Poly, RatExpr, Var};
use crate::report::{Claim, Status};
use crate::symplectic::HamSystem;

/// Order in which words are turned into compositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// The rightmost factor of a word acts first.
    RightFirst,
    /// The leftmost factor of a word acts first.
    LeftFirst,
}

impl Convention {
    pub fn label(self) -> &'static str {
        match self {
            Convention::RightFirst => "apply-right-first",
            Convention::LeftFirst => "apply-left-first",
        }
    }

    pub fn opposite(self) -> Convention {
        match self {
            Convention::RightFirst => Convention::LeftFirst,
            Convention::LeftFirst => Convention::RightFirst,
        }
    }

    pub fn parse(s: &str) -> Option<Convention> {
        match s {
            "apply-right-first" => Some(Convention::RightFirst),
            "apply-left-first" => Some(Convention::LeftFirst),
            _ => None,
        }
    }
}

/// Which parameter normalization the zero tests may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fuchs {
    Off,
    /// Eliminate a1 by the parameter-sum relation.
    A1,
    /// Eliminate a6 by the parameter-sum relation.
    A6,
}

impl Fuchs {
    pub fn label(self) -> &'static str {
        match self {
            Fuchs::Off => "off",
            Fuchs::A1 => "a1",
            Fuchs::A6 => "a6",
        }
    }

    pub fn parse(s: &str) -> Option<Fuchs> {
        match s {
            "off" => Some(Fuchs::Off),
            "a1" => Some(Fuchs::A1),
            "a6" => Some(Fuchs::A6),
            _ => None,
        }
    }
}

/// Shared state for a verification run.
pub struct Context {
    pub catalog: Catalog,
    pub fuchs: Fuchs,
    pub convention: Convention,
    policy: FuchsPolicy,
    deadline: Option<Instant>,
}

impl Context {
    pub fn new(fuchs: Fuchs, convention: Convention) -> Result<Context, CatalogError> {
        let policy = match fuchs {
            Fuchs::Off => FuchsPolicy::off(),
            Fuchs::A1 => FuchsPolicy::garnier(crate::exactalg::vars::A1),
            Fuchs::A6 => FuchsPolicy::garnier(crate::exactalg::vars::A6),
        };
        Ok(Context {
            catalog: Catalog::load()?,
            fuchs,
            convention,
            policy,
            deadline: None,
        })
    }

    /// Installs a wall-clock budget; claims started after it expires are
    /// skipped.
    pub fn with_budget(mut self, budget: Duration) -> Context {
        self.deadline = Some(Instant::now() + budget);
        self
    }

    /// The parameter policy for the six-parameter family.
    pub fn policy(&self) -> &FuchsPolicy {
        &self.policy
    }

    /// The matching policy for the five-parameter family: slot three is
    /// the doubled node, and the analogue of the configured elimination is
    /// used.
    pub fn pvi_policy(&self) -> FuchsPolicy {
        match self.fuchs {
            Fuchs::Off => FuchsPolicy::off(),
            Fuchs::A1 => FuchsPolicy::pvi(crate::exactalg::vars::A1),
            Fuchs::A6 => FuchsPolicy::pvi(crate::exactalg::vars::A5),
        }
    }

    /// The matching policy on the root parameters: the normalization
    /// g0 + g1 + 2*(g2 + g3 + g4 + g5) = 1, eliminating g0.
    pub fn gamma_policy(&self) -> FuchsPolicy {
        if self.fuchs == Fuchs::Off {
            return FuchsPolicy::off();
        }
        let mut rel = Poly::int(-1) + Poly::var(GAMMAS[0]) + Poly::var(GAMMAS[1]);
        for g in &GAMMAS[2..] {
            rel = rel + &Poly::var(*g) * &Poly::int(2);
        }
        FuchsPolicy {
            relation: rel,
            mode: FuchsMode::Eliminate(G0),
        }
    }

    /// A system as a Hamiltonian pair plus its canonical pairs.
    pub fn ham(&self, name: &str) -> Result<(HamSystem, Vec<(Var, Var)>), String> {
        let sys = self.catalog.system(name).map_err(|e| e.to_string())?;
        Ok((
            HamSystem::new(name, sys.h[0].clone(), sys.h[1].clone()),
            sys.pairs,
        ))
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Runs one named claim, timing it and folding errors into a skip.
pub(crate) fn check(
    ctx: &Context,
    suite: &str,
    subject: &str,
    statement: &str,
    expected_failure: bool,
    f: impl FnOnce() -> Result<(bool, String), String>,
) -> Claim {
    let id = format!("{suite}/{subject}");
    if ctx.expired() {
        return Claim {
            id,
            suite: suite.to_string(),
            statement: statement.to_string(),
            status: Status::Skipped,
            detail: "budget exhausted".to_string(),
            expected_failure,
            elapsed_ms: 0,
        };
    }
    let started = Instant::now();
    let (status, detail) = match f() {
        Ok((true, detail)) => (Status::Proved, detail),
        Ok((false, detail)) => (Status::Refuted, detail),
        Err(e) => (Status::Skipped, e),
    };
    Claim {
        id,
        suite: suite.to_string(),
        statement: statement.to_string(),
        status,
        detail,
        expected_failure,
        elapsed_ms: started.elapsed().as_millis() as u64,
    }
}

/// Suite registry, in report order.
pub const SUITES: &[&str] = &[
    "symplectic",
    "holomorphy",
    "backlund",
    "relations",
    "correspondence",
    "cycles",
    "seeds",
    "translations",
    "blowup",
    "integrability",
    "ansatz",
];

/// Runs one suite by name.
pub fn run_suite(ctx: &Context, name: &str) -> Result<Vec<Claim>, String> {
    match name {
        "symplectic" => Ok(symplectic::run(ctx)),
        "holomorphy" => Ok(holomorphy::run(ctx)),
        "backlund" => Ok(backlund::run(ctx)),
        "relations" => Ok(relations::run(ctx)),
        "correspondence" => Ok(correspondence::run(ctx)),
        "cycles" => Ok(cycles::run(ctx)),
        "seeds" => Ok(seeds::run(ctx)),
        "translations" => Ok(translations::run(ctx)),
        "blowup" => Ok(blowup::run(ctx)),
        "integrability" => Ok(integrability::run(ctx)),
        "ansatz" => Ok(ansatz::run(ctx)),
        _ => Err(format!("unknown suite {name:?}")),
    }
}

/// Runs the selected suites (`all` for every one), in parallel, merging
/// claims in registry order.
pub fn run(ctx: &Context, selector: &str) -> Result<Vec<Claim>, String> {
    if selector != "all" {
        return run_suite(ctx, selector);
    }
    let results: Vec<Result<Vec<Claim>, String>> = SUITES
        .par_iter()
        .map(|name| run_suite(ctx, name))
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Renders an equality verdict with a uniform detail line: either the
/// identity holds literally, or only under the policy, or fails.
pub(crate) fn eq_detail(
    literal: bool,
    normalized: bool,
    fuchs: Fuchs,
) -> (bool, String) {
    if literal {
        (true, "holds literally".to_string())
    } else if normalized && fuchs != Fuchs::Off {
        (
            true,
            "holds under the parameter normalization".to_string(),
        )
    } else {
        (false, "fails".to_string())
    }
}

pub(crate) fn se(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Pretty-print helper for claim details.
pub(crate) fn short(e: &RatExpr) -> String {
    let s = crate::exactalg::print_ratexpr(e);
    if s.len() > 160 {
        format!("{}...", &s[..157])
    } else {
        s
    }
}
