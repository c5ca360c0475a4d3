//! Standard generator layout for a system in `n` variables.
//!
//! Commuting families `x` and `y` (its copy), plus odd families created on demand by name:
//! `fx`, `fy` for the system's generators at `x` and `y`, `Fx`, `Fy` for a second system,
//! primed copies `fx'`, …, and the auxiliary `u` used by transgression determinants.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::grassmann::{transgression_det, Element, TransgressionColumn};
use crate::ring::{divided_differences, OddFamily, Poly, Registry, Var};

#[derive(Debug, Clone)]
pub struct Context {
    pub registry: Registry,
    pub x: Vec<Var>,
    pub y: Vec<Var>,
    odd: BTreeMap<String, OddFamily>,
}

impl Context {
    /// `x1..xn` and `y1..yn`.
    pub fn new(n: usize) -> Result<Self> {
        let names: Vec<String> = (1..=n).map(|k| format!("x{k}")).collect();
        Self::with_names(&names)
    }

    /// Uses the given names for the `x` family. The `y` copies are `y<k>` for names of the form
    /// `x<k>` and `y_<name>` otherwise.
    pub fn with_names(names: &[String]) -> Result<Self> {
        let mut registry = Registry::new();
        let x = registry.add_commuting_named("x", names)?.vars;
        let mut ynames: Vec<String> = names
            .iter()
            .map(|nm| match nm.strip_prefix('x') {
                Some(rest) if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) => format!("y{rest}"),
                _ => format!("y_{nm}"),
            })
            .collect();
        if ynames.iter().any(|y| names.contains(y)) {
            ynames = names.iter().map(|nm| format!("y_{nm}")).collect();
        }
        let y = registry.add_commuting_named("y", &ynames)?.vars;
        Ok(Context {
            registry,
            x,
            y,
            odd: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// Returns the odd family `name`, registering it on first use.
    pub fn odd(&mut self, name: &str, arity: usize) -> OddFamily {
        if let Some(f) = self.odd.get(name) {
            return *f;
        }
        let f = self
            .registry
            .add_odd(name, arity.max(1))
            .expect("context family names are unique");
        self.odd.insert(name.to_string(), f);
        f
    }

    pub fn xv(&self, k: usize) -> Poly {
        Poly::var(self.x[k])
    }

    pub fn yv(&self, k: usize) -> Poly {
        Poly::var(self.y[k])
    }

    pub fn x_to_y(&self) -> BTreeMap<Var, Var> {
        self.x.iter().copied().zip(self.y.iter().copied()).collect()
    }

    pub fn y_to_x(&self) -> BTreeMap<Var, Var> {
        self.y.iter().copied().zip(self.x.iter().copied()).collect()
    }

    /// `p(x) ↦ p(y)`.
    pub fn at_y(&self, p: &Poly) -> Poly {
        p.rename(&self.x_to_y())
    }

    pub fn all_at_y(&self, ps: &[Poly]) -> Vec<Poly> {
        ps.iter().map(|p| self.at_y(p)).collect()
    }

    /// Transgression columns for `polys`, with odd entries `ox_j − oy_j` (either side optional).
    pub fn columns(
        &self,
        polys: &[Poly],
        ox: Option<OddFamily>,
        oy: Option<OddFamily>,
    ) -> Result<Vec<TransgressionColumn>> {
        polys
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let mut odd = Element::zero();
                if let Some(f) = ox {
                    odd += &Element::primal(f, j);
                }
                if let Some(f) = oy {
                    odd -= &Element::primal(f, j);
                }
                Ok(TransgressionColumn {
                    odd,
                    grad: divided_differences(p, &self.x, &self.y)?,
                })
            })
            .collect()
    }

    /// `det‖[∇F ∇f …; F̂_x−F̂_y f̂_x−f̂_y …]‖` for the listed blocks, in column order.
    pub fn transgression(&mut self, blocks: &[(&[Poly], Option<OddFamily>, Option<OddFamily>)]) -> Result<Element> {
        let mut cols = Vec::new();
        for (polys, ox, oy) in blocks {
            cols.extend(self.columns(polys, *ox, *oy)?);
        }
        let n = self.n();
        let u = self.odd("u", n);
        transgression_det(&cols, u, n)
    }
}
