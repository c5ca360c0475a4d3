use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

/// A commuting generator, identified by its global index in a [`Registry`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Var(pub u32);

/// A family of anticommuting generators (primal `f̂_i` and dual `f̂^i_*` for each index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OddFamily(pub u16);

impl OddFamily {
    /// Family ids at the top of the range are reserved for contraction internals.
    pub const FIRST_RESERVED: u16 = u16::MAX - 15;

    pub fn is_reserved(self) -> bool {
        self.0 >= Self::FIRST_RESERVED
    }
}

/// A contiguous block of commuting generators registered together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingFamily {
    pub name: String,
    pub vars: Vec<Var>,
}

impl CommutingFamily {
    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var(&self, k: usize) -> Var {
        self.vars[k]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct OddInfo {
    name: String,
    arity: usize,
}

/// Names and arities for every generator used in one computation.
///
/// Values ([`crate::ring::Poly`], [`crate::grassmann::Element`]) only carry
/// indices; the registry supplies the names for parsing and rendering. The global
/// order of generators is the registration order and never changes.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    var_names: Vec<String>,
    by_name: BTreeMap<String, Var>,
    families: Vec<CommutingFamily>,
    odd: Vec<OddInfo>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers a commuting family `name` with generators `name1..name{arity}`.
    pub fn add_commuting(&mut self, name: &str, arity: usize) -> Result<CommutingFamily> {
        let names: Vec<String> = (1..=arity).map(|k| format!("{name}{k}")).collect();
        self.add_commuting_named(name, &names)
    }

    /// Registers a commuting family whose generators carry explicit names.
    pub fn add_commuting_named(&mut self, name: &str, var_names: &[String]) -> Result<CommutingFamily> {
        if var_names.is_empty() {
            return Err(Error::usage(format!("family {name} must have arity >= 1")));
        }
        if self.families.iter().any(|f| f.name == name) {
            return Err(Error::usage(format!("duplicate commuting family {name}")));
        }
        let mut vars = Vec::with_capacity(var_names.len());
        for vn in var_names {
            if self.by_name.contains_key(vn) {
                return Err(Error::usage(format!("duplicate variable name {vn}")));
            }
            let v = Var(self.var_names.len() as u32);
            self.var_names.push(vn.clone());
            self.by_name.insert(vn.clone(), v);
            vars.push(v);
        }
        let fam = CommutingFamily {
            name: name.to_string(),
            vars,
        };
        self.families.push(fam.clone());
        Ok(fam)
    }

    pub fn add_odd(&mut self, name: &str, arity: usize) -> Result<OddFamily> {
        if arity == 0 {
            return Err(Error::usage(format!("odd family {name} must have arity >= 1")));
        }
        if self.odd.iter().any(|o| o.name == name) {
            return Err(Error::usage(format!("duplicate odd family {name}")));
        }
        if self.odd.len() >= OddFamily::FIRST_RESERVED as usize {
            return Err(Error::usage("too many odd families"));
        }
        let fam = OddFamily(self.odd.len() as u16);
        self.odd.push(OddInfo {
            name: name.to_string(),
            arity,
        });
        Ok(fam)
    }

    pub fn lookup(&self, name: &str) -> Option<Var> {
        self.by_name.get(name).copied()
    }

    pub fn var_name(&self, v: Var) -> String {
        self.var_names
            .get(v.0 as usize)
            .cloned()
            .unwrap_or_else(|| format!("v{}", v.0))
    }

    pub fn odd_name(&self, f: OddFamily) -> String {
        self.odd
            .get(f.0 as usize)
            .map(|o| o.name.clone())
            .unwrap_or_else(|| format!("o{}", f.0))
    }

    pub fn odd_arity(&self, f: OddFamily) -> Option<usize> {
        self.odd.get(f.0 as usize).map(|o| o.arity)
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn families(&self) -> &[CommutingFamily] {
        &self.families
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let mut r = Registry::new();
        let x = r.add_commuting("x", 2).unwrap();
        assert_eq!(x.vars, vec![Var(0), Var(1)]);
        assert!(r.add_commuting("x", 1).is_err());
        assert!(r.add_commuting_named("z", &["x1".to_string()]).is_err());
        assert!(r.add_commuting("w", 0).is_err());
        let f = r.add_odd("f", 3).unwrap();
        assert!(r.add_odd("f", 1).is_err());
        assert_eq!(r.odd_arity(f), Some(3));
        assert_eq!(r.lookup("x2"), Some(Var(1)));
        assert_eq!(r.var_name(Var(0)), "x1");
    }
}
