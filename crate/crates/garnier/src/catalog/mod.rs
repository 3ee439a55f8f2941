//! Catalog of every Hamiltonian pair, holomorphy chart, birational map,
//! invariant cycle, dictionary, group word, translation, seed solution, and
//! blow-up construction, stored as embedded text files and parsed on load.
//!
//! Data that is derived by the engine rather than stated (chart inverses,
//! the transported fourth pair, translation parameter actions) lives under
//! `derived/` and is frozen by running the regeneration test with
//! `GARNIER_REGEN=1`; the files ship with the sources so ordinary builds
//! never recompute them.

pub mod data;
pub mod format;

use std::collections::BTreeMap;
use std::path::PathBuf;

pub use format::{CatalogError, CatalogFile};

use crate::exactalg::{vars, RatExpr, Var};
use crate::symplectic::BirationalMap;

/// A polynomial Hamiltonian pair in canonical coordinates.
#[derive(Clone, Debug)]
pub struct System {
    pub name: String,
    /// Canonical pairs, e.g. `[(q1,p1),(q2,p2)]`.
    pub pairs: Vec<(Var, Var)>,
    /// Independent variables matching the Hamiltonians, e.g. `[t, s]`.
    pub times: Vec<Var>,
    /// One Hamiltonian per time; a one-time system stores zero in slot 1.
    pub h: [RatExpr; 2],
    /// Expected total degree of the numerators in the phase variables.
    pub degree: i64,
}

/// A coordinate chart in which the transported pair must be polynomial.
#[derive(Clone, Debug)]
pub struct Chart {
    pub name: String,
    /// Name of the system the chart belongs to.
    pub system: String,
    /// Images of the chart letters x,y(,z,w) in the phase variables.
    pub forward: BirationalMap,
    /// Chart letters in use: `[x,y]` or `[x,y,z,w]`.
    pub letters: Vec<Var>,
    /// Corrections subtracted from the Hamiltonians when the chart moves
    /// with the times: `[corr_t, corr_s]`, zero when absent.
    pub corr: [RatExpr; 2],
}

impl Chart {
    /// Canonical pairs formed by the chart letters.
    pub fn pairs(&self) -> Vec<(Var, Var)> {
        self.letters
            .chunks(2)
            .map(|c| (c[0], c[1]))
            .collect()
    }
}

/// One invariant cycle: equations that cut it out and the parameter value
/// at which it is invariant.
#[derive(Clone, Debug)]
pub struct Cycle {
    pub vanish: Vec<RatExpr>,
    pub condition: RatExpr,
}

/// A group relation `lhs == rhs` between words in named maps; an empty
/// right-hand side means the identity.
#[derive(Clone, Debug)]
pub struct Relation {
    pub label: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

/// A seed solution: a point fixed by a map under parameter constraints.
#[derive(Clone, Debug)]
pub struct Seed {
    pub name: String,
    /// Name of the fixing map.
    pub map: String,
    /// Expressions that must vanish on the parameters.
    pub constraints: Vec<RatExpr>,
    /// Phase variable values, possibly involving the adjoined roots.
    pub point: Vec<(Var, RatExpr)>,
    /// Optional word whose action produces a new solution from the seed.
    pub word: Option<Vec<String>>,
}

/// A translation word on the parameter lattice with its stated shift.
#[derive(Clone, Debug)]
pub struct Translation {
    pub name: String,
    pub word: Vec<String>,
    pub shift: [i64; 6],
}

/// A blow-up construction: ambient coordinates followed by substitution
/// stages in the chart letters, ending at a named chart.
#[derive(Clone, Debug)]
pub struct Replay {
    pub name: String,
    pub chart: String,
    /// Images of the chart letters in the phase variables at the start.
    pub ambient: BirationalMap,
    /// Substitution stages in the chart letters, applied in order.
    pub stages: Vec<BirationalMap>,
}

/// A stated inverse of a chart: phase variables in the chart letters.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub name: String,
    pub chart: String,
    pub images: BirationalMap,
}

/// The loaded catalog: every embedded file, parsed and keyed by name.
pub struct Catalog {
    files: BTreeMap<String, CatalogFile>,
}

fn var_key(file: &CatalogFile, key: &str) -> Result<Var, CatalogError> {
    Var::lookup(key).ok_or_else(|| CatalogError::BadValue {
        file: file.name.clone(),
        key: key.to_string(),
        expected: "variable name".to_string(),
        got: key.to_string(),
    })
}

impl Catalog {
    /// Parses every embedded file. Fails on the first malformed one.
    pub fn load() -> Result<Catalog, CatalogError> {
        let mut files = BTreeMap::new();
        for (name, text) in data::FILES {
            files.insert(name.to_string(), CatalogFile::parse(name, text)?);
        }
        Ok(Catalog { files })
    }

    /// The parsed file of the given directory-qualified name.
    pub fn file(&self, name: &str) -> Result<&CatalogFile, CatalogError> {
        self.files
            .get(name)
            .ok_or_else(|| CatalogError::UnknownFile(name.to_string()))
    }

    /// Names under a directory, e.g. `names_under("charts")`, sorted.
    pub fn names_under(&self, dir: &str) -> Vec<String> {
        let prefix = format!("{dir}/");
        self.files
            .keys()
            .filter_map(|k| k.strip_prefix(&prefix))
            .filter(|rest| !rest.contains('/'))
            .map(|rest| rest.to_string())
            .collect()
    }

    /// A birational map from `maps/<name>`: every entry moves one variable.
    pub fn map(&self, name: &str) -> Result<BirationalMap, CatalogError> {
        let f = self.file(&format!("maps/{name}"))?;
        let mut m = BirationalMap::identity(name);
        for key in f.keys() {
            m.set(var_key(f, key)?, f.expr(key)?);
        }
        Ok(m)
    }

    /// A Hamiltonian system from `systems/<name>`, or from
    /// `derived/<name>_system` for the transported pair.
    pub fn system(&self, name: &str) -> Result<System, CatalogError> {
        let f = match self.file(&format!("systems/{name}")) {
            Ok(f) => f,
            Err(CatalogError::UnknownFile(_)) => self.file(&format!("derived/{name}_system"))?,
            Err(e) => return Err(e),
        };
        let mut pairs = Vec::new();
        for c in f.tokens("pairs")?.chunks(2) {
            pairs.push((var_key(f, &c[0])?, var_key(f, &c[1])?));
        }
        let times: Result<Vec<Var>, _> =
            f.tokens("times")?.iter().map(|t| var_key(f, t)).collect();
        let [degree] = f.ints::<1>("degree")?;
        let h1 = f.expr("h1")?;
        let h2 = if let Some(map_name) = f.get("h2.map") {
            self.map(map_name)?
                .apply(&h1)
                .map_err(CatalogError::Algebra)?
        } else {
            f.expr_opt("h2")?.unwrap_or_else(RatExpr::zero)
        };
        Ok(System {
            name: name.to_string(),
            pairs,
            times: times?,
            h: [h1, h2],
            degree,
        })
    }

    /// A holomorphy chart from `charts/<name>`.
    pub fn chart(&self, name: &str) -> Result<Chart, CatalogError> {
        let f = self.file(&format!("charts/{name}"))?;
        let system = f.require("system")?.to_string();
        let mut forward = BirationalMap::identity(name);
        let mut letters = Vec::new();
        for (letter, var) in [
            ("x", vars::X),
            ("y", vars::Y),
            ("z", vars::Z),
            ("w", vars::W),
        ] {
            if let Some(e) = f.expr_opt(letter)? {
                forward.set(var, e);
                letters.push(var);
            }
        }
        let corr_t = f.expr_opt("corr.t")?.unwrap_or_else(RatExpr::zero);
        let corr_s = f.expr_opt("corr.s")?.unwrap_or_else(RatExpr::zero);
        Ok(Chart {
            name: name.to_string(),
            system,
            forward,
            letters,
            corr: [corr_t, corr_s],
        })
    }

    /// The frozen inverse of a chart from `derived/inverses/<name>`:
    /// phase variables expressed in the chart letters.
    pub fn chart_inverse(&self, name: &str) -> Result<BirationalMap, CatalogError> {
        let f = self.file(&format!("derived/inverses/{name}"))?;
        let mut m = BirationalMap::identity(name);
        let mut any = false;
        for key in f.keys() {
            m.set(var_key(f, key)?, f.expr(key)?);
            any = true;
        }
        if !any {
            return Err(CatalogError::MissingKey {
                file: f.name.clone(),
                key: "q1 (run the regeneration test with GARNIER_REGEN=1)".to_string(),
            });
        }
        Ok(m)
    }

    /// The invariant cycles of a system from `cycles/<name>`.
    pub fn cycles(&self, name: &str) -> Result<Vec<Cycle>, CatalogError> {
        let f = self.file(&format!("cycles/{name}"))?;
        let mut out = Vec::new();
        for n in 1.. {
            let vanish_key = format!("cycle.{n}.vanish");
            if f.get(&vanish_key).is_none() {
                break;
            }
            let mut vanish = Vec::new();
            for tok in f.tokens(&vanish_key)? {
                vanish.push(parse_token(f, &vanish_key, &tok)?);
            }
            out.push(Cycle {
                vanish,
                condition: f.expr(&format!("cycle.{n}.condition"))?,
            });
        }
        Ok(out)
    }

    /// The relations of a named family from `dictionaries/relations_<name>`.
    pub fn relations(&self, name: &str) -> Result<Vec<Relation>, CatalogError> {
        let f = self.file(&format!("dictionaries/relations_{name}"))?;
        let mut out = Vec::new();
        for key in f.keys() {
            let value = f.require(key)?;
            let Some((lhs, rhs)) = value.split_once("==") else {
                return Err(CatalogError::BadValue {
                    file: f.name.clone(),
                    key: key.to_string(),
                    expected: "`lhs == rhs`".to_string(),
                    got: value.to_string(),
                });
            };
            let rhs = rhs.trim();
            out.push(Relation {
                label: key.to_string(),
                lhs: lhs.split_whitespace().map(str::to_string).collect(),
                rhs: if rhs == "id" {
                    Vec::new()
                } else {
                    rhs.split_whitespace().map(str::to_string).collect()
                },
            });
        }
        Ok(out)
    }

    /// Named words from a dictionary file: every entry `name = tokens`.
    pub fn words(&self, file: &str) -> Result<Vec<(String, Vec<String>)>, CatalogError> {
        let f = self.file(&format!("dictionaries/{file}"))?;
        let mut out = Vec::new();
        for key in f.keys() {
            out.push((key.to_string(), f.tokens(key)?));
        }
        Ok(out)
    }

    /// A substitution dictionary: every entry maps a variable to an
    /// expression, e.g. the parameter change between root systems.
    pub fn dictionary(&self, file: &str) -> Result<BTreeMap<Var, RatExpr>, CatalogError> {
        let f = self.file(&format!("dictionaries/{file}"))?;
        let mut out = BTreeMap::new();
        for key in f.keys() {
            out.insert(var_key(f, key)?, f.expr(key)?);
        }
        Ok(out)
    }

    /// A seed solution from `seeds/<name>`.
    pub fn seed(&self, name: &str) -> Result<Seed, CatalogError> {
        let f = self.file(&format!("seeds/{name}"))?;
        let map = f.require("map")?.to_string();
        let mut constraints = Vec::new();
        for tok in f.tokens("constraints")? {
            constraints.push(parse_token(f, "constraints", &tok)?);
        }
        let mut point = Vec::new();
        for key in f.keys() {
            if matches!(key, "map" | "constraints" | "word") {
                continue;
            }
            point.push((var_key(f, key)?, f.expr(key)?));
        }
        let word = match f.get("word") {
            Some(_) => Some(f.tokens("word")?),
            None => None,
        };
        Ok(Seed {
            name: name.to_string(),
            map,
            constraints,
            point,
            word,
        })
    }

    /// A translation word from `translations/<name>`.
    pub fn translation(&self, name: &str) -> Result<Translation, CatalogError> {
        let f = self.file(&format!("translations/{name}"))?;
        Ok(Translation {
            name: name.to_string(),
            word: f.tokens("word")?,
            shift: f.ints::<6>("shift")?,
        })
    }

    /// A blow-up construction from `blowup/<name>`.
    pub fn replay(&self, name: &str) -> Result<Replay, CatalogError> {
        let f = self.file(&format!("blowup/{name}"))?;
        let chart = f.require("chart")?.to_string();
        let mut ambient = BirationalMap::identity(&format!("{name}.ambient"));
        for key in f.keys_under("ambient").collect::<Vec<_>>() {
            ambient.set(var_key(f, key)?, f.expr(&format!("ambient.{key}"))?);
        }
        let mut stages: BTreeMap<u32, BirationalMap> = BTreeMap::new();
        for rest in f.keys_under("stage").collect::<Vec<_>>() {
            let Some((n, letter)) = rest.split_once('.') else {
                return Err(CatalogError::BadValue {
                    file: f.name.clone(),
                    key: format!("stage.{rest}"),
                    expected: "stage.<number>.<letter>".to_string(),
                    got: rest.to_string(),
                });
            };
            let n: u32 = n.parse().map_err(|_| CatalogError::BadValue {
                file: f.name.clone(),
                key: format!("stage.{rest}"),
                expected: "numbered stage".to_string(),
                got: rest.to_string(),
            })?;
            stages
                .entry(n)
                .or_insert_with(|| BirationalMap::identity(&format!("{name}.stage.{n}")))
                .set(var_key(f, letter)?, f.expr(&format!("stage.{n}.{letter}"))?);
        }
        Ok(Replay {
            name: name.to_string(),
            chart,
            ambient,
            stages: stages.into_values().collect(),
        })
    }

    /// A stated chart inverse from `blowup/resolution_<chart>`.
    pub fn resolution(&self, name: &str) -> Result<Resolution, CatalogError> {
        let f = self.file(&format!("blowup/resolution_{name}"))?;
        let chart = f.require("chart")?.to_string();
        let mut images = BirationalMap::identity(&format!("resolution_{name}"));
        for key in f.keys() {
            if key == "chart" {
                continue;
            }
            images.set(var_key(f, key)?, f.expr(key)?);
        }
        Ok(Resolution {
            name: name.to_string(),
            chart,
            images,
        })
    }

    /// The frozen parameter action of a translation word, if regenerated:
    /// images of a1..a6 under the given composition order (`right` applies
    /// the rightmost factor first).
    pub fn translation_action(
        &self,
        name: &str,
        side: &str,
    ) -> Result<Option<[RatExpr; 6]>, CatalogError> {
        let f = self.file("derived/translation_actions")?;
        if f.get(&format!("{name}.{side}.a1")).is_none() {
            return Ok(None);
        }
        let mut out = Vec::new();
        for a in vars::PARAMS {
            out.push(f.expr(&format!("{name}.{side}.{}", a.name()))?);
        }
        Ok(Some(out.try_into().unwrap()))
    }
}

fn parse_token(f: &CatalogFile, key: &str, tok: &str) -> Result<RatExpr, CatalogError> {
    crate::exactalg::parse(tok).map_err(|source| CatalogError::BadExpression {
        file: f.name.clone(),
        key: key.to_string(),
        source,
    })
}

/// Absolute path of a file under the catalog directory in the source tree,
/// used by the regeneration test to freeze derived data.
pub fn source_path(rel: &str) -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/catalog")).join(rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::vars;

    #[test]
    fn loads_every_embedded_file() {
        let cat = Catalog::load().unwrap();
        assert_eq!(cat.names_under("charts").len(), 29);
        assert_eq!(cat.names_under("maps").len(), 55);
        assert_eq!(cat.names_under("systems").len(), 4);
        assert_eq!(cat.names_under("translations").len(), 9);
        assert_eq!(cat.names_under("seeds").len(), 4);
        assert_eq!(cat.names_under("cycles").len(), 3);
        assert_eq!(cat.names_under("blowup").len(), 8);
    }

    #[test]
    fn garnier_system_has_swapped_second_hamiltonian() {
        let cat = Catalog::load().unwrap();
        let sys = cat.system("garnier").unwrap();
        assert_eq!(sys.pairs, vec![(vars::Q1, vars::P1), (vars::Q2, vars::P2)]);
        assert_eq!(sys.times, vec![vars::T, vars::S]);
        assert_eq!(sys.degree, 5);
        assert!(!sys.h[0].is_zero());
        assert!(!sys.h[1].is_zero());
        assert!(!sys.h[0].eq_fn(&sys.h[1]));
        let swap = cat.map("pi6").unwrap();
        let back = swap.apply(&sys.h[1]).unwrap();
        assert!(back.eq_fn(&sys.h[0]));
    }

    #[test]
    fn pvi_system_is_one_time() {
        let cat = Catalog::load().unwrap();
        let sys = cat.system("pvi").unwrap();
        assert_eq!(sys.pairs.len(), 1);
        assert_eq!(sys.times, vec![vars::T]);
        assert!(sys.h[1].is_zero());
    }

    #[test]
    fn charts_expose_letters_and_corrections() {
        let cat = Catalog::load().unwrap();
        let full = cat.chart("garnier_r6").unwrap();
        assert_eq!(full.letters.len(), 4);
        assert!(!full.corr[0].is_zero());
        assert!(!full.corr[1].is_zero());
        assert_eq!(full.pairs().len(), 2);
        let small = cat.chart("pvi_r1").unwrap();
        assert_eq!(small.letters.len(), 2);
        assert!(small.corr[0].is_zero());
    }

    #[test]
    fn relations_split_sides() {
        let cat = Catalog::load().unwrap();
        let rels = cat.relations("garnier").unwrap();
        assert_eq!(rels.len(), 51);
        assert!(rels.iter().any(|r| r.rhs.is_empty()));
        assert!(rels.iter().all(|r| !r.lhs.is_empty()));
        assert_eq!(cat.relations("b5").unwrap().len(), 21);
        assert_eq!(cat.relations("pvi").unwrap().len(), 15);
    }

    #[test]
    fn seeds_and_translations_parse() {
        let cat = Catalog::load().unwrap();
        let seed = cat.seed("phi7_fixed").unwrap();
        assert_eq!(seed.map, "phi7");
        assert_eq!(seed.constraints.len(), 2);
        assert_eq!(seed.point.len(), 4);
        assert_eq!(seed.word.as_ref().unwrap().len(), 6);
        let t1 = cat.translation("t1").unwrap();
        assert_eq!(t1.word, vec!["phi4", "s4", "phi1", "s4"]);
        assert_eq!(t1.shift, [0, 0, 0, 0, -1, 1]);
    }

    #[test]
    fn replay_orders_stages() {
        let cat = Catalog::load().unwrap();
        let replay = cat.replay("garnier_r6").unwrap();
        assert_eq!(replay.chart, "garnier_r6");
        assert_eq!(replay.stages.len(), 5);
        assert_eq!(replay.ambient.moved().len(), 4);
        let res = cat.resolution("garnier_r1").unwrap();
        assert_eq!(res.images.moved().len(), 4);
    }

    #[test]
    fn cycles_carry_conditions() {
        let cat = Catalog::load().unwrap();
        let garnier = cat.cycles("garnier").unwrap();
        assert_eq!(garnier.len(), 6);
        let ura = cat.cycles("ura").unwrap();
        assert_eq!(ura.len(), 6);
        assert!(garnier.iter().all(|c| !c.vanish.is_empty()));
    }

    #[test]
    fn dictionaries_key_by_variable() {
        let cat = Catalog::load().unwrap();
        let fwd = cat.dictionary("gamma_of_alpha").unwrap();
        assert_eq!(fwd.len(), 6);
        assert!(fwd.contains_key(&vars::G0));
        let back = cat.dictionary("alpha_of_gamma").unwrap();
        assert!(back.contains_key(&vars::A1));
        let corr = cat.words("correspondence").unwrap();
        assert_eq!(corr.len(), 17);
    }

    #[test]
    fn missing_inverse_reports_regeneration_hint() {
        let cat = Catalog::load().unwrap();
        match cat.chart_inverse("garnier_r1") {
            Ok(m) => assert!(!m.moved().is_empty()),
            Err(e) => assert!(e.to_string().contains("GARNIER_REGEN")),
        }
    }
}
