//! Golden copies of the printed tables and their comparison with computed values.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use spingrass_core::dims::dim;
use spingrass_core::spinor::{Chirality, Decomposition};
use spingrass_core::{AlgebraId, Error, Result, Weight};

const TABLE1: &str = include_str!("../golden/table1.txt");
const TABLE2: &str = include_str!("../golden/table2.txt");
const TABLE3: &str = include_str!("../golden/table3.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub chirality: Option<Chirality>,
    pub factor1: Weight,
    pub factor2: Option<Weight>,
    #[serde(with = "spingrass_core::bigjson::nat")]
    pub expected: BigUint,
    /// `None` when the computation has no such summand.
    #[serde(with = "opt_nat")]
    pub computed: Option<BigUint>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    pub table: u8,
    pub rows: Vec<TableRow>,
    /// Computed summands that the table does not list.
    pub unlisted: Vec<String>,
    pub pass: bool,
}

mod opt_nat {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Wrap(#[serde(with = "spingrass_core::bigjson::nat")] BigUint);

    pub fn serialize<S: Serializer>(x: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        x.clone().map(Wrap).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
    }
}

fn bad(line: &str) -> Error {
    Error::Inconsistent(format!("malformed golden line {line:?}"))
}

/// `2,2±` → both signs of the last entry.
fn expand(tok: &str, a: AlgebraId) -> Result<Vec<Weight>> {
    let (body, pm) = match tok.strip_suffix('±') {
        Some(b) => (b, true),
        None => (tok, false),
    };
    let w = Weight::parse(&format!("[{body}]"), a)?;
    if !pm {
        return Ok(vec![w]);
    }
    let mut flipped = w.doubled().to_vec();
    *flipped.last_mut().ok_or_else(|| bad(tok))? *= -1;
    Ok(vec![w, Weight::from_doubled(flipped, a)?])
}

fn lines(src: &str) -> impl Iterator<Item = &str> {
    src.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_u(tok: &str, line: &str) -> Result<BigUint> {
    tok.parse().map_err(|_| bad(line))
}

pub fn table1() -> Result<TableReport> {
    let so4 = AlgebraId::so_even(2);
    let mut rows = Vec::new();
    for line in lines(TABLE1) {
        let (w, d) = line.split_once(' ').ok_or_else(|| bad(line))?;
        let expected = parse_u(d.trim(), line)?;
        for w in expand(w, so4)? {
            let got = dim(&w)?;
            rows.push(TableRow {
                chirality: None,
                factor1: w,
                factor2: None,
                pass: got == expected,
                computed: Some(got),
                expected: expected.clone(),
            });
        }
    }
    Ok(finish(1, rows, Vec::new()))
}

/// Compares a computed decomposition with table 2 or 3.
pub fn product_table(n: u8, d: &Decomposition) -> Result<TableReport> {
    let (src, a1, a2) = match n {
        2 => (TABLE2, AlgebraId::so_even(4), AlgebraId::so_even(2)),
        3 => (TABLE3, AlgebraId::so_even(3), AlgebraId::so_even(3)),
        _ => return Err(Error::Precondition(format!("no product table {n}"))),
    };
    let mut rows = Vec::new();
    for line in lines(src) {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [c, mu, "|", nu, each] = toks[..] else {
            return Err(bad(line));
        };
        let chirality = match c {
            "+" => Chirality::Plus,
            "-" => Chirality::Minus,
            _ => return Err(bad(line)),
        };
        let expected = parse_u(each, line)?;
        for m in expand(mu, a1)? {
            for v in expand(nu, a2)? {
                let got = d
                    .summands
                    .iter()
                    .find(|s| s.chirality == chirality && s.mu == m && s.nu.as_ref() == Some(&v))
                    .map(|s| s.dim());
                rows.push(TableRow {
                    chirality: Some(chirality),
                    factor1: m.clone(),
                    factor2: Some(v),
                    pass: got.as_ref() == Some(&expected),
                    computed: got,
                    expected: expected.clone(),
                });
            }
        }
    }
    let unlisted = d
        .summands
        .iter()
        .filter(|s| {
            !rows.iter().any(|r| {
                r.chirality == Some(s.chirality) && r.factor1 == s.mu && r.factor2 == s.nu
            })
        })
        .map(|s| format!("{} {s}", s.chirality))
        .collect();
    Ok(finish(n, rows, unlisted))
}

fn finish(table: u8, rows: Vec<TableRow>, unlisted: Vec<String>) -> TableReport {
    let pass = unlisted.is_empty() && rows.iter().all(|r| r.pass);
    TableReport {
        table,
        rows,
        unlisted,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_files_parse() {
        assert_eq!(lines(TABLE1).count(), 6);
        assert_eq!(lines(TABLE2).count(), 15);
        assert_eq!(lines(TABLE3).count(), 20);
        let t = table1().unwrap();
        assert_eq!(t.rows.len(), 9);
        assert!(t.pass);
    }
}
