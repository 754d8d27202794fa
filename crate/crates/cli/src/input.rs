use std::path::Path;
use std::sync::Arc;

use eqorient::bredon::{self, GCWComplex};
use eqorient::group::{builtin::named, FiniteGroup, GroupSpec, SubgroupTable, DEFAULT_ORDER_CAP};
use eqorient::reps::{parse_product_rep_json, parse_rep, ProductRep};
use eqorient::{Error, Int, Result};

fn read_file(path: &str) -> Option<Result<String>> {
    let p = Path::new(path);
    p.is_file()
        .then(|| std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{path}: {e}"))))
}

pub fn group(spec: &str) -> Result<Arc<FiniteGroup>> {
    match read_file(spec) {
        Some(text) => {
            let spec: GroupSpec = serde_json::from_str(&text?).map_err(|e| Error::Parse(e.to_string()))?;
            Ok(Arc::new(FiniteGroup::from_spec(&spec, DEFAULT_ORDER_CAP)?))
        }
        None => Ok(Arc::new(named(spec)?)),
    }
}

pub fn table(spec: &str) -> Result<Arc<SubgroupTable>> {
    Ok(Arc::new(SubgroupTable::new(group(spec)?)?))
}

pub fn subgroup(table: &SubgroupTable, s: Option<usize>) -> Result<usize> {
    match s {
        None => Ok(table.whole()),
        Some(s) if s < table.len() => Ok(s),
        Some(s) => Err(Error::NotASubgroup(format!(
            "subgroup index {s} out of range (the group has {} subgroups)",
            table.len()
        ))),
    }
}

/// Comma-separated integer coefficients, e.g. `1,0,-2`.
pub fn coefficients(text: &str) -> Result<Vec<Int>> {
    text.split(',')
        .map(|c| {
            c.trim()
                .parse::<Int>()
                .map_err(|_| Error::Parse(format!("`{}` is not an integer", c.trim())))
        })
        .collect()
}

pub fn product_rep(text: &str, structure: Arc<FiniteGroup>, group: Arc<FiniteGroup>) -> Result<ProductRep> {
    match read_file(text) {
        Some(json) => parse_product_rep_json(&json?, structure, group),
        None => ProductRep::new(structure, group, parse_rep(text)?),
    }
}

pub fn complex(text: &str, table: &Arc<SubgroupTable>) -> Result<GCWComplex> {
    match read_file(text) {
        Some(json) => GCWComplex::from_json(table.clone(), &json?),
        None => bredon::by_name(text, table),
    }
}
