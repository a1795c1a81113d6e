//! Text, CSV and JSON renderings of rank tables and group invariants.

use std::fmt::Write;
use std::str::FromStr;

use serde_json::json;

use crate::assembly::RankTable;
use crate::error::Error;
use crate::invariants::KRankFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "text" => Ok(Self::Text),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::ParameterOutOfRange(format!(
                "unknown format {other:?}; expected text, csv or json"
            ))),
        }
    }
}

pub fn render_table(table: &RankTable, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("n,rank\n");
            for (n, r, _) in table.rows() {
                writeln!(out, "{n},{r}").unwrap();
            }
            out
        }
        Format::Json => {
            let rows: Vec<_> = table
                .rows()
                .map(|(n, r, note)| json!({"n": n, "rank": r, "note": note}))
                .collect();
            let doc = json!({
                "model": table.label,
                "range": [table.n_lo, table.n_hi],
                "rows": rows,
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
        Format::Text => {
            let mut out = format!("rank K_n for {}\n", table.label);
            writeln!(out, "{:>5}  {:>6}  assembly", "n", "rank").unwrap();
            for (n, r, note) in table.rows() {
                writeln!(out, "{n:>5}  {r:>6}  {note}").unwrap();
            }
            out
        }
    }
}

/// The invariants of a finite group and the shape of its rank function.
pub fn render_invariants(f: &KRankFunction, format: Format) -> String {
    let inv = &f.invariants;
    let minus1 = f.rank_minus1.map_or("unknown".to_string(), |r| r.to_string());
    match format {
        Format::Csv => format!(
            "group,k,m,r,c,q,rank_minus1\n{},{},{},{},{},{},{}\n",
            f.label, inv.k, inv.m, inv.r, inv.c, inv.q, minus1
        ),
        Format::Json => {
            let doc = json!({
                "group": f.label,
                "invariants": inv,
                "rank_minus1": f.rank_minus1,
                "pattern": {
                    "n<=-2": 0,
                    "n=-1": f.rank_minus1,
                    "n=0": 1,
                    "n=1": inv.r - inv.q,
                    "n=1 mod 4, n>1": inv.r,
                    "n=3 mod 4, n>1": inv.c,
                    "n even, n>1": 0,
                },
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
        Format::Text => {
            let mut out = format!("group {}\n", f.label);
            writeln!(out, "  conjugacy classes         k = {}", inv.k).unwrap();
            writeln!(out, "  inverse-closed classes    m = {}", inv.m).unwrap();
            writeln!(out, "  real classes              r = {}", inv.r).unwrap();
            writeln!(out, "  complex-type real classes c = {}", inv.c).unwrap();
            writeln!(out, "  cyclic subgroup classes   q = {}", inv.q).unwrap();
            writeln!(out, "rank K_n(Z[{}]):", f.label).unwrap();
            writeln!(out, "  n <= -2          0").unwrap();
            writeln!(out, "  n = -1           {minus1}").unwrap();
            writeln!(out, "  n = 0            1").unwrap();
            writeln!(out, "  n = 1            {}", inv.r - inv.q).unwrap();
            writeln!(out, "  n = 1 mod 4, >1  {}", inv.r).unwrap();
            writeln!(out, "  n = 3 mod 4, >1  {}", inv.c).unwrap();
            writeln!(out, "  n even, >1       0").unwrap();
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> RankTable {
        RankTable {
            label: "t".into(),
            n_lo: -1,
            n_hi: 1,
            ranks: vec![0, 1, 2],
            notes: vec!["a".into(), "b".into(), "c".into()],
        }
    }

    #[test]
    fn csv_layout() {
        assert_eq!(render_table(&table(), Format::Csv), "n,rank\n-1,0\n0,1\n1,2\n");
    }

    #[test]
    fn json_layout() {
        let v: serde_json::Value = serde_json::from_str(&render_table(&table(), Format::Json)).unwrap();
        assert_eq!(v["range"], json!([-1, 1]));
        assert_eq!(v["rows"][2]["rank"], 2);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
