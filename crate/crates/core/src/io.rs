//! Election text format and a PrefLib SOC import.
//!
//! ```text
//! # comments run to the end of the line
//! 4 3
//! labels a1 a2 a3 a4
//! 0 1 2 3
//! 1 0 2 3
//! 3 0 1 2
//! ```
//!
//! The first line gives `m n`. An optional `labels` line names the
//! alternatives; without it they are called `a1 .. am`. Each of the `n`
//! following rows lists `0..m` from most to least preferred.

use std::fmt::Write as _;

use crate::circuit::tokens;
use crate::election::{Election, PreferenceOrder};
use crate::error::{Error, Result};

fn perr(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_election(text: &str) -> Result<Election> {
    let mut header: Option<(usize, usize)> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut rows: Vec<PreferenceOrder> = Vec::new();
    let mut last_line = 0;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        last_line = line;
        let toks = tokens(raw.split('#').next().unwrap());
        if toks.is_empty() {
            continue;
        }
        let Some((m, n)) = header else {
            if toks.len() != 2 {
                return Err(perr(line, toks[0].0, "expected header `m n`"));
            }
            let num = |(c, t): (usize, &str)| {
                t.parse::<usize>()
                    .map_err(|_| perr(line, c, format!("expected a number, found `{t}`")))
            };
            let (m, n) = (num(toks[0])?, num(toks[1])?);
            if m == 0 {
                return Err(perr(line, toks[0].0, "m must be at least 1"));
            }
            if n == 0 {
                return Err(perr(line, toks[1].0, "n must be at least 1"));
            }
            header = Some((m, n));
            continue;
        };
        if toks[0].1 == "labels" {
            if labels.is_some() || !rows.is_empty() {
                return Err(perr(line, toks[0].0, "labels must directly follow the header"));
            }
            if toks.len() != m + 1 {
                return Err(perr(line, toks[0].0, format!("expected {m} labels, found {}", toks.len() - 1)));
            }
            let names: Vec<String> = toks[1..].iter().map(|t| t.1.to_string()).collect();
            for (i, (c, t)) in toks[1..].iter().enumerate() {
                if names[..i].contains(&t.to_string()) {
                    return Err(perr(line, *c, format!("duplicate label `{t}`")));
                }
            }
            labels = Some(names);
            continue;
        }
        let row = rows.len() + 1;
        if row > n {
            return Err(perr(line, toks[0].0, format!("more than {n} voter rows")));
        }
        if toks.len() != m {
            return Err(perr(line, toks[0].0, format!("row {row}: expected {m} alternatives, found {}", toks.len())));
        }
        let mut seen = vec![false; m];
        let mut ranking = Vec::with_capacity(m);
        for &(c, t) in &toks {
            let a: usize = t
                .parse()
                .map_err(|_| perr(line, c, format!("row {row}: `{t}` is not an alternative")))?;
            if a >= m {
                return Err(perr(line, c, format!("row {row}: alternative {a} outside 0..{m}")));
            }
            if seen[a] {
                return Err(perr(line, c, format!("row {row}: duplicate alternative {a}")));
            }
            seen[a] = true;
            ranking.push(a);
        }
        rows.push(PreferenceOrder::new(ranking)?);
    }
    let Some((m, n)) = header else {
        return Err(perr(last_line.max(1), 1, "missing header `m n`"));
    };
    if rows.len() != n {
        return Err(perr(
            last_line.max(1),
            1,
            format!("expected {n} voter rows, found {}", rows.len()),
        ));
    }
    match labels {
        Some(l) => Election::with_labels(l, rows),
        None => Election::new(m, rows),
    }
}

/// Canonical text: header, labels only when not the defaults, one row per voter.
pub fn write_election(e: &Election) -> String {
    let mut s = format!("{} {}\n", e.m(), e.n());
    if !e.has_default_labels() {
        writeln!(s, "labels {}", e.labels().join(" ")).unwrap();
    }
    for v in e.voters() {
        let row: Vec<String> = v.ranking().iter().map(|a| a.to_string()).collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}

/// Reads a PrefLib strict-complete-order file. Alternatives are numbered from
/// 1 in PrefLib and from 0 here; data lines read `count: a,b,c`.
pub fn parse_preflib_soc(text: &str) -> Result<Election> {
    let mut m: Option<usize> = None;
    let mut voters = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.trim();
        if body.is_empty() {
            continue;
        }
        if let Some(meta) = body.strip_prefix('#') {
            if let Some(v) = meta.trim().strip_prefix("NUMBER ALTERNATIVES:") {
                m = Some(
                    v.trim()
                        .parse()
                        .map_err(|_| perr(line, 1, "bad NUMBER ALTERNATIVES value"))?,
                );
            }
            continue;
        }
        let m = m.ok_or_else(|| perr(line, 1, "data before `# NUMBER ALTERNATIVES:`"))?;
        let (count, order) = body
            .split_once(':')
            .ok_or_else(|| perr(line, 1, "expected `count: a,b,...`"))?;
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| perr(line, 1, format!("bad multiplicity `{}`", count.trim())))?;
        let ranking = order
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(a) if (1..=m).contains(&a) => Ok(a - 1),
                _ => Err(perr(line, 1, format!("`{}` is not an alternative of 1..{m}", t.trim()))),
            })
            .collect::<Result<Vec<_>>>()?;
        if ranking.len() != m {
            return Err(perr(line, 1, "order is not complete"));
        }
        let order = PreferenceOrder::new(ranking).map_err(|e| perr(line, 1, e.to_string()))?;
        voters.extend(std::iter::repeat_n(order, count));
    }
    let m = m.ok_or_else(|| perr(1, 1, "missing `# NUMBER ALTERNATIVES:`"))?;
    Election::new(m, voters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn figure_one_file() {
        let text = "# figure 1\n4 3\n0 1 2 3\n0 1 3 2\n2 1 0 3\n";
        let e = parse_election(text).unwrap();
        assert_eq!(e, fixtures::kemeny_example());
        let canon = write_election(&e);
        assert_eq!(canon, "4 3\n0 1 2 3\n0 1 3 2\n2 1 0 3\n");
        assert_eq!(write_election(&parse_election(&canon).unwrap()), canon);
    }

    #[test]
    fn labels_round_trip() {
        let text = "3 1\nlabels x y z\n2 0 1\n";
        let e = parse_election(text).unwrap();
        assert_eq!(e.label(2), "z");
        assert_eq!(write_election(&e), text);
    }

    #[test]
    fn diagnostics() {
        assert_eq!(
            parse_election("4 1\n0 0 1 2\n").unwrap_err(),
            perr(2, 3, "row 1: duplicate alternative 0")
        );
        assert!(matches!(parse_election("4 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_election("4 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_election("4 2\n0 1 2 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_election(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_election("2 1\n0 1\n1 0\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn preflib_import() {
        let text = "# FILE NAME: x.soc\n# NUMBER ALTERNATIVES: 3\n# ALTERNATIVE NAME 1: A\n2: 1,2,3\n1: 3,1,2\n";
        let e = parse_preflib_soc(text).unwrap();
        assert_eq!(e.n(), 3);
        assert_eq!(e.voter(2).ranking(), &[2, 0, 1]);
        assert!(parse_preflib_soc("# NUMBER ALTERNATIVES: 3\n1: 1,2\n").is_err());
    }
}
