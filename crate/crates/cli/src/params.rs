//! `name=value` arguments of `verify`, with inclusive ranges.

use std::collections::BTreeMap;

/// Largest number of jobs one `verify` invocation may expand into.
const MAX_EXPANSION: usize = 1_000_000;

/// Values of one argument: `n=7`, `n=6..100` or `n=6..=100` (both inclusive).
fn values(text: &str) -> Result<(String, Vec<i64>), String> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got {text:?}"))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(format!("missing parameter name in {text:?}"));
    }
    let int = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("{name}: {s:?} is not an integer"))
    };
    let list = match value.split_once("..") {
        None => vec![int(value)?],
        Some((lo, hi)) => {
            let (lo, hi) = (int(lo)?, int(hi.strip_prefix('=').unwrap_or(hi))?);
            if lo > hi {
                return Err(format!("{name}: empty range {lo}..{hi}"));
            }
            if (hi - lo) as u128 >= MAX_EXPANSION as u128 {
                return Err(format!("{name}: range {lo}..{hi} is too long"));
            }
            (lo..=hi).collect()
        }
    };
    Ok((name.to_string(), list))
}

/// Cartesian product of all arguments, first argument varying slowest.
pub fn expand(args: &[String]) -> Result<Vec<BTreeMap<String, i64>>, String> {
    let mut out = vec![BTreeMap::new()];
    for arg in args {
        let (name, vals) = values(arg)?;
        if out[0].contains_key(&name) {
            return Err(format!("parameter {name} given twice"));
        }
        if out.len().saturating_mul(vals.len()) > MAX_EXPANSION {
            return Err("parameter ranges expand into too many runs".to_string());
        }
        let (name, vals) = (name.as_str(), &vals);
        out = out
            .into_iter()
            .flat_map(|m| {
                vals.iter().map(move |&v| {
                    let mut m = m.clone();
                    m.insert(name.to_string(), v);
                    m
                })
            })
            .collect();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn scalars_and_ranges() {
        assert_eq!(expand(&[]).unwrap(), vec![BTreeMap::new()]);
        let one = expand(&s(&["n=7"])).unwrap();
        assert_eq!(one, vec![BTreeMap::from([("n".to_string(), 7)])]);
        assert_eq!(expand(&s(&["n=6..100"])).unwrap().len(), 95);
        assert_eq!(expand(&s(&["n=6..=100"])).unwrap().len(), 95);
        let grid = expand(&s(&["a=1..2", "b=1..3"])).unwrap();
        assert_eq!(grid.len(), 6);
        assert_eq!(grid[1], BTreeMap::from([("a".to_string(), 1), ("b".to_string(), 2)]));
    }

    #[test]
    fn malformed_arguments() {
        for bad in ["n", "=3", "n=x", "n=5..3", "n=1..2..3"] {
            assert!(expand(&s(&[bad])).is_err(), "{bad}");
        }
        assert!(expand(&s(&["n=1", "n=2"])).is_err());
        assert!(expand(&s(&["a=1..1000", "b=1..1000", "c=1..2"])).is_err());
    }
}
