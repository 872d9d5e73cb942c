//! Parameter grids such as `N=2..5:odd,k=0..3,l=0..k,r=k-1|k`.
//!
//! Axes are resolved in the order N, k, l, r, so a bound may name any axis
//! that comes earlier. An axis is a `|`-separated list of items; an item is
//! a value or an inclusive range `a..b`, optionally followed by `:odd` or
//! `:even`. Values are integers or `var`, `var+c`, `var-c`.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, ensure, Context, Result};

const AXES: [&str; 4] = ["N", "k", "l", "r"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Atom {
    Int(i64),
    Var(String, i64),
}

impl Atom {
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Ok(v) = s.parse() {
            return Ok(Atom::Int(v));
        }
        let split = s.find(['+', '-']).unwrap_or(s.len());
        let (name, rest) = s.split_at(split);
        ensure!(AXES.contains(&name), "unknown value `{s}`");
        let offset = if rest.is_empty() {
            0
        } else {
            rest.parse().with_context(|| format!("bad offset in `{s}`"))?
        };
        Ok(Atom::Var(name.to_string(), offset))
    }

    fn eval(&self, env: &BTreeMap<&str, i64>) -> Result<i64> {
        match self {
            Atom::Int(v) => Ok(*v),
            Atom::Var(name, off) => env
                .get(name.as_str())
                .map(|v| v + off)
                .ok_or_else(|| anyhow!("`{name}` used before it is defined")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Filter {
    Odd,
    Even,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Item {
    lo: Atom,
    hi: Atom,
    filter: Option<Filter>,
}

impl Item {
    fn parse(s: &str) -> Result<Self> {
        let (body, filter) = match s.split_once(':') {
            Some((b, "odd")) => (b, Some(Filter::Odd)),
            Some((b, "even")) => (b, Some(Filter::Even)),
            Some((_, f)) => bail!("unknown filter `:{f}`"),
            None => (s, None),
        };
        let (lo, hi) = match body.split_once("..") {
            Some((a, b)) => (Atom::parse(a)?, Atom::parse(b)?),
            None => {
                let a = Atom::parse(body)?;
                (a.clone(), a)
            }
        };
        Ok(Item { lo, hi, filter })
    }

    fn values(&self, env: &BTreeMap<&str, i64>, out: &mut Vec<i64>) -> Result<()> {
        let (lo, hi) = (self.lo.eval(env)?, self.hi.eval(env)?);
        out.extend((lo..=hi).filter(|v| match self.filter {
            Some(Filter::Odd) => v.rem_euclid(2) == 1,
            Some(Filter::Even) => v.rem_euclid(2) == 0,
            None => true,
        }));
        Ok(())
    }
}

/// A parsed grid. Missing axes take the supplied defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    axes: BTreeMap<String, Vec<Item>>,
}

impl Grid {
    pub fn parse(spec: &str) -> Result<Self> {
        let mut axes = BTreeMap::new();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, body) = part
                .split_once('=')
                .ok_or_else(|| anyhow!("expected `axis=values`, got `{part}`"))?;
            let name = name.trim();
            ensure!(AXES.contains(&name), "unknown axis `{name}`");
            let items = body.split('|').map(Item::parse).collect::<Result<Vec<_>>>()?;
            ensure!(
                axes.insert(name.to_string(), items).is_none(),
                "axis `{name}` given twice"
            );
        }
        ensure!(axes.contains_key("N"), "grid must set N");
        Ok(Grid { axes })
    }

    /// Fills in axes that were not given.
    pub fn with_default(mut self, axis: &str, spec: &str) -> Result<Self> {
        if !self.axes.contains_key(axis) {
            let items = spec.split('|').map(Item::parse).collect::<Result<Vec<_>>>()?;
            self.axes.insert(axis.to_string(), items);
        }
        Ok(self)
    }

    /// All points `[N, k, l, r]` in lexicographic order, deduplicated.
    pub fn points(&self) -> Result<Vec<[i64; 4]>> {
        let mut out = Vec::new();
        let mut env = BTreeMap::new();
        self.walk(0, &mut env, &mut out)?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    fn walk<'a>(
        &'a self,
        depth: usize,
        env: &mut BTreeMap<&'a str, i64>,
        out: &mut Vec<[i64; 4]>,
    ) -> Result<()> {
        if depth == AXES.len() {
            out.push(AXES.map(|a| env[a]));
            return Ok(());
        }
        let axis = AXES[depth];
        let items = self
            .axes
            .get(axis)
            .ok_or_else(|| anyhow!("grid must set `{axis}`"))?;
        let mut values = Vec::new();
        for item in items {
            item.values(env, &mut values)?;
        }
        for v in values {
            env.insert(axis, v);
            self.walk(depth + 1, env, out)?;
        }
        env.remove(axis);
        Ok(())
    }
}
