use super::{mirror, ArcId, Diagram};
use crate::error::{Error, Result};

// Chirality of the raw constructions below, fixed by the published invariant values.
const MIRROR_TWIST: bool = false;
const MIRROR_3_1: bool = true;
const MIRROR_5_1: bool = true;

const THETA_3_1: ([[ArcId; 3]; 2], &[[ArcId; 4]]) = (
    [[12, 14, 5], [14, 13, 2]],
    &[[11, 10, 13, 12], [7, 11, 5, 6], [10, 7, 6, 2]],
);

const THETA_5_1: ([[ArcId; 3]; 2], &[[ArcId; 4]]) = (
    [[1, 2, 3], [4, 5, 6]],
    &[[7, 8, 1, 9], [10, 7, 11, 4], [6, 2, 8, 10], [12, 11, 9, 13], [5, 12, 13, 3]],
);

/// Catalog entries with fixed names; `T(k)` for odd `k >= 1` is also accepted.
pub fn catalog_names() -> Vec<&'static str> {
    vec!["trivial", "theta_3_1", "theta_5_1", "T(1)", "T(3)", "T(5)", "T(7)", "T(9)"]
}

fn from_table(name: &str, table: ([[ArcId; 3]; 2], &[[ArcId; 4]]), flip: bool) -> Result<Diagram> {
    let (vertices, crossings) = table;
    let d = Diagram::from_records(name, vertices, crossings.to_vec(), vertices[0])?;
    Ok(if flip { mirror(&d).with_name(name) } else { d })
}

pub fn catalog(name: &str) -> Result<Diagram> {
    let name = name.trim();
    match name {
        "trivial" => Diagram::from_records("trivial", [[1, 2, 3], [3, 2, 1]], vec![], [1, 2, 3]),
        "theta_3_1" => from_table(name, THETA_3_1, MIRROR_3_1),
        "theta_5_1" => from_table(name, THETA_5_1, MIRROR_5_1),
        _ => {
            let inner = name
                .strip_prefix("T(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::UnknownName(name.to_string()))?;
            let k: i64 = inner
                .trim()
                .parse()
                .map_err(|_| Error::BadParameter(format!("`{inner}` is not an integer")))?;
            twist_theta(k)
        }
    }
}

/// The (2, k) torus-knot diagram of a `k`-crossing twist region closed by a
/// top and a bottom arc, with both vertices placed on the top arc. E1 is the
/// long edge through the twist region, E2 the short piece of the top arc and
/// E3 a crossing-free arc running beside E2.
pub fn twist_theta(k: i64) -> Result<Diagram> {
    if k < 1 || k % 2 == 0 {
        return Err(Error::BadParameter(format!("T(k) needs an odd k >= 1, got {k}")));
    }
    let k = k as u32;
    let (e3, top_left, mid, top_right, bottom) = (1, 2, 3, 4, 5);
    let upper = |i: u32| 4 + 2 * i;
    let lower = |i: u32| 5 + 2 * i;
    let mut crossings = Vec::new();
    for i in 1..=k {
        let nw = if i == 1 { top_left } else { upper(i - 1) };
        let sw = if i == 1 { bottom } else { lower(i - 1) };
        let ne = if i == k { top_right } else { upper(i) };
        let se = if i == k { bottom } else { lower(i) };
        crossings.push(if i % 2 == 1 { [ne, nw, sw, se] } else { [sw, se, ne, nw] });
    }
    let name = format!("T({k})");
    let d = Diagram::from_records(
        name.clone(),
        [[top_left, mid, e3], [mid, top_right, e3]],
        crossings,
        [top_left, mid, e3],
    )?;
    Ok(if MIRROR_TWIST { mirror(&d).with_name(name) } else { d })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        for name in catalog_names() {
            let d = catalog(name).unwrap();
            assert!(d.is_theta(), "{name}");
            assert_eq!(Diagram::parse(&d.render()).unwrap(), d, "{name}");
        }
    }

    #[test]
    fn bad_names() {
        assert!(matches!(catalog("nope"), Err(Error::UnknownName(_))));
        assert!(matches!(catalog("T(4)"), Err(Error::BadParameter(_))));
        assert!(matches!(catalog("T(-1)"), Err(Error::BadParameter(_))));
        assert!(matches!(catalog("T(x)"), Err(Error::BadParameter(_))));
    }

    #[test]
    fn twist_region_signs_agree() {
        for k in [1, 3, 5, 7] {
            let d = twist_theta(k).unwrap();
            let signs: Vec<i8> = d.crossings().iter().map(|c| c.sign).collect();
            assert!(signs.windows(2).all(|w| w[0] == w[1]), "T({k}): {signs:?}");
            let (s, n) = d.writhe_sums().unwrap();
            assert_eq!((s.unsigned_abs(), n), (k as u32, 0));
        }
    }
}
