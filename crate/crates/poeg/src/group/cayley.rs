//! Cayley-table file parsing and group-axiom validation.
//!
//! Format: a line `order N`, a line `table`, then N rows of N space- or
//! comma-separated 0-based indices; row g, column h gives g∘h. Index 0 must
//! be the identity. Blank lines and `#` comments are skipped. Tables are
//! capped at order 512 so validation (O(n^3) associativity) stays fast.

use crate::error::{Error, Result};

pub const MAX_TABLE_ORDER: usize = 512;

#[derive(Clone, Debug)]
pub struct CayleyTable {
    n: usize,
    table: Vec<u16>,
    inverse: Vec<u16>,
}

impl CayleyTable {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn parse_and_validate(text: &str) -> Result<CayleyTable> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));

        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidSpec("empty Cayley table file".into()))?;
        let n: usize = header
            .strip_prefix("order")
            .map(str::trim)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| {
                Error::InvalidSpec(format!("expected `order N` header, got: {header}"))
            })?;
        if n == 0 {
            return Err(Error::InvalidSpec("table order must be >= 1".into()));
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::InvalidSpec(format!(
                "table order {n} exceeds the cap {MAX_TABLE_ORDER}"
            )));
        }
        let marker = lines
            .next()
            .ok_or_else(|| Error::InvalidSpec("missing `table` marker".into()))?;
        if marker != "table" {
            return Err(Error::InvalidSpec(format!(
                "expected `table` marker, got: {marker}"
            )));
        }

        let mut table = Vec::with_capacity(n * n);
        for row in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::InvalidSpec(format!("missing table row {row}")))?;
            let entries: Vec<&str> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect();
            if entries.len() != n {
                return Err(Error::InvalidSpec(format!(
                    "row {row} has {} entries, expected {n}",
                    entries.len()
                )));
            }
            for (col, tok) in entries.iter().enumerate() {
                let v: usize = tok.parse().map_err(|_| {
                    Error::InvalidSpec(format!("row {row} col {col}: bad token `{tok}`"))
                })?;
                if v >= n {
                    return Err(Error::InvalidTable {
                        axiom: "closure",
                        witness: format!("entry {v} at row {row} col {col} is out of range"),
                    });
                }
                table.push(v as u16);
            }
        }

        Self::validate(n, table)
    }

    fn validate(n: usize, table: Vec<u16>) -> Result<CayleyTable> {
        let op = |a: usize, b: usize| table[a * n + b] as usize;

        // identity at index 0
        for g in 0..n {
            if op(0, g) != g || op(g, 0) != g {
                return Err(Error::InvalidTable {
                    axiom: "identity",
                    witness: format!("0∘{g} = {}, {g}∘0 = {}", op(0, g), op(g, 0)),
                });
            }
        }

        // two-sided inverses
        let mut inverse = vec![u16::MAX; n];
        for (g, inv) in inverse.iter_mut().enumerate() {
            match (0..n).find(|&h| op(g, h) == 0 && op(h, g) == 0) {
                Some(h) => *inv = h as u16,
                None => {
                    return Err(Error::InvalidTable {
                        axiom: "inverses",
                        witness: format!("element {g} has no two-sided inverse"),
                    })
                }
            }
        }

        // associativity
        for a in 0..n {
            for b in 0..n {
                let ab = op(a, b);
                for c in 0..n {
                    if op(ab, c) != op(a, op(b, c)) {
                        return Err(Error::InvalidTable {
                            axiom: "associativity",
                            witness: format!(
                                "({a}∘{b})∘{c} = {} but {a}∘({b}∘{c}) = {}",
                                op(ab, c),
                                op(a, op(b, c))
                            ),
                        });
                    }
                }
            }
        }

        Ok(CayleyTable { n, table, inverse })
    }
}
