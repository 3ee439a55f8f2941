//! Word machinery: resolving tokens to maps, composing under a convention,
//! and transporting root-parameter reflections to the system parameters.

use crate::catalog::Catalog;
use crate::exactalg::vars::{self, PARAMS, PHASE, S, T};
use crate::exactalg::{RatExpr, Var};
use crate::symplectic::BirationalMap;

use super::Convention;

/// True for bare reflection tokens `s0`..`s9`.
pub fn is_reflection_token(t: &str) -> bool {
    t.len() == 2 && t.starts_with('s') && t.as_bytes()[1].is_ascii_digit()
}

/// Composes already-resolved maps under the convention.
pub fn compose_resolved(
    maps: &[BirationalMap],
    conv: Convention,
) -> Result<BirationalMap, String> {
    let refs: Vec<&BirationalMap> = match conv {
        Convention::RightFirst => maps.iter().collect(),
        Convention::LeftFirst => maps.iter().rev().collect(),
    };
    BirationalMap::compose_chain(&refs).map_err(|e| e.to_string())
}

/// Resolves a word whose tokens are plain catalog map names, with bare
/// reflection tokens mapped through the given prefix (`b5_` or `pvi_`),
/// then composes it.
pub fn compose_word(
    cat: &Catalog,
    tokens: &[String],
    prefix: &str,
    conv: Convention,
) -> Result<BirationalMap, String> {
    let mut maps = Vec::new();
    for tok in tokens {
        let name = if is_reflection_token(tok) {
            format!("{prefix}{tok}")
        } else {
            tok.clone()
        };
        maps.push(cat.map(&name).map_err(|e| e.to_string())?);
    }
    compose_resolved(&maps, conv)
}

/// A dictionary file as a substitution map.
pub fn dictionary_map(cat: &Catalog, file: &str) -> Result<BirationalMap, String> {
    let table = cat.dictionary(file).map_err(|e| e.to_string())?;
    Ok(BirationalMap::new(file, table))
}

/// The restriction of a map to the system parameter slots; slots the map
/// fixes are left out of the table.
pub fn param_part(m: &BirationalMap) -> BirationalMap {
    let mut out = BirationalMap::identity(&format!("{}|params", m.name));
    for a in PARAMS {
        let img = m.image(a);
        if !img.eq_fn(&RatExpr::var(a)) {
            out.set(a, img);
        }
    }
    out
}

/// Rewrites a root-parameter reflection as a map in the system parameters:
/// the forward dictionary is substituted into the phase and time images,
/// and the parameter action is conjugated through the dictionary pair
/// (forward, then the reflection, then the repaired reverse table).
pub fn alpha_translated(
    cat: &Catalog,
    gamma_map: &BirationalMap,
) -> Result<BirationalMap, String> {
    let fwd = dictionary_map(cat, "gamma_of_alpha")?;
    let back = dictionary_map(cat, "alpha_of_gamma")?;
    let conjugated = back
        .compose(gamma_map)
        .and_then(|m| m.compose(&fwd))
        .map_err(|e| e.to_string())?;
    let mut out = BirationalMap::identity(&format!("{}^alpha", gamma_map.name));
    for a in PARAMS {
        let img = conjugated.image(a);
        if !img.eq_fn(&RatExpr::var(a)) {
            out.set(a, img);
        }
    }
    for v in PHASE.into_iter().chain([T, S]) {
        let img = gamma_map.image(v);
        if !img.eq_fn(&RatExpr::var(v)) {
            out.set(v, fwd.apply(&img).map_err(|e| e.to_string())?);
        }
    }
    Ok(out)
}

/// Resolves a token for identities in the system-parameter world: plain
/// names load directly, bare reflection tokens are the root reflections
/// translated by [`alpha_translated`].
pub fn resolve_alpha(cat: &Catalog, token: &str) -> Result<BirationalMap, String> {
    if is_reflection_token(token) {
        let g = cat
            .map(&format!("b5_{token}"))
            .map_err(|e| e.to_string())?;
        alpha_translated(cat, &g)
    } else {
        cat.map(token).map_err(|e| e.to_string())
    }
}

/// Composes a word in the system-parameter world.
pub fn compose_alpha_word(
    cat: &Catalog,
    tokens: &[String],
    conv: Convention,
) -> Result<BirationalMap, String> {
    let mut maps = Vec::new();
    for tok in tokens {
        maps.push(resolve_alpha(cat, tok)?);
    }
    compose_resolved(&maps, conv)
}

/// The parameter action of a word: each factor contributes only its
/// parameter slots (reflection tokens through the dictionary transport),
/// composed under the convention.
pub fn word_param_action(
    cat: &Catalog,
    tokens: &[String],
    conv: Convention,
) -> Result<BirationalMap, String> {
    let mut maps = Vec::new();
    for tok in tokens {
        maps.push(param_part(&resolve_alpha(cat, tok)?));
    }
    compose_resolved(&maps, conv)
}

/// The variables on which two maps must agree to be considered equal as
/// transformations of a system with the given phase pairs.
pub fn comparison_vars(pairs: &[(Var, Var)]) -> Vec<Var> {
    let mut out = Vec::new();
    for &(q, p) in pairs {
        out.push(q);
        out.push(p);
    }
    out.push(T);
    out.push(S);
    out.extend(PARAMS);
    out
}

/// Comparison variables for the root-parameter world.
pub fn gamma_comparison_vars() -> Vec<Var> {
    let mut out = Vec::new();
    for &(q, p) in &[(vars::Q1, vars::P1), (vars::Q2, vars::P2)] {
        out.push(q);
        out.push(p);
    }
    out.push(T);
    out.push(S);
    out.extend(vars::GAMMAS);
    out
}
