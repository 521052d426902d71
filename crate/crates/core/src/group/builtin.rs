//! Named groups with the element labels used in reports.

use super::{BuildOptions, GroupError, GroupTable};

fn names(list: &[&str]) -> Option<Vec<String>> {
    Some(list.iter().map(|s| s.to_string()).collect())
}

fn build(degree: usize, generators: &[Vec<usize>], gen_names: &[&str]) -> GroupTable {
    let options = BuildOptions {
        order_bound: usize::MAX,
        generator_names: names(gen_names),
    };
    GroupTable::from_permutations(degree, generators, &options).expect("builtin generators are valid")
}

/// `S3` generated by the transpositions `u = (01)` and `v = (12)`.
/// Elements are `e, u, v, uv, vu, uvu` in that order.
pub fn symmetric3() -> GroupTable {
    build(3, &[vec![1, 0, 2], vec![0, 2, 1]], &["u", "v"])
}

/// `S4` generated by the adjacent transpositions `a = (01)`, `b = (12)`,
/// `c = (23)`.
pub fn symmetric4() -> GroupTable {
    build(
        4,
        &[vec![1, 0, 2, 3], vec![0, 2, 1, 3], vec![0, 1, 3, 2]],
        &["a", "b", "c"],
    )
}

/// Cyclic group `Z_n`; element `k` is `g^k`.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let gens = if n == 1 { Vec::new() } else { vec![rot] };
    let mut g = build(n, &gens, &["g"]);
    let labels = (0..n)
        .map(|k| match k {
            0 => "e".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{k}"),
        })
        .collect();
    g.labels = labels;
    g
}

/// Dihedral group of order `2n` (symmetries of an `n`-gon), generated by
/// the rotation `r` and the reflection `s`.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n >= 3, "dihedral_n needs n ≥ 3");
    let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    build(n, &[r, s], &["r", "s"])
}

fn parse_suffix(name: &str, prefixes: &[&str]) -> Option<usize> {
    prefixes
        .iter()
        .find_map(|p| name.strip_prefix(p))
        .and_then(|rest| rest.parse().ok())
}

/// Resolves `s3`, `s4`, `z_n` (or `zn`), `dihedral_n` (or `dn`).
pub fn builtin(name: &str) -> Result<GroupTable, GroupError> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "s3" => return Ok(symmetric3()),
        "s4" => return Ok(symmetric4()),
        _ => {}
    }
    if let Some(n) = parse_suffix(&lower, &["z_", "z"]).filter(|&n| n >= 1) {
        return Ok(cyclic(n));
    }
    if let Some(n) = parse_suffix(&lower, &["dihedral_", "d_", "d"]).filter(|&n| n >= 3) {
        return Ok(dihedral(n));
    }
    Err(GroupError::UnknownBuiltin(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric4().order(), 24);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(cyclic(5).order(), 5);
        assert_eq!(builtin("z_4").unwrap().label(3), "g^3");
        assert_eq!(builtin("dihedral_5").unwrap().order(), 10);
        assert!(builtin("q8").is_err());
    }

    #[test]
    fn cyclic_indices_are_powers() {
        let g = cyclic(6);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(g.mul(a, b), (a + b) % 6);
            }
        }
    }
}
