//! ```text
//! matroid 3
//! elements: a b c
//! circuits:
//! a b c
//! ```
//!
//! The section header is one of `independents:`, `bases:`, `circuits:`,
//! `closure:` or `rank:`. Set systems list one subset per line, `-` being the
//! empty set. A closure table has lines `X -> cl(X)`; a rank table has lines
//! `A | B = r` for nested `B ⊆ A`, with `r` a number or `inf`.

use std::collections::BTreeMap;

use super::{eof, label_line, lines, Line, Tok};
use crate::axioms::{ClosureTable, Presentation, RankInput, SystemKind};
use crate::error::Result;
use crate::matroid::{RankValue, RelRankTable};
use crate::set::{GroundSet, Mask, SetFamily};
use crate::FiniteMatroid;

const RESERVED: [&str; 4] = ["-", "->", "|", "="];

fn parse_set(ground: &GroundSet, toks: &[Tok]) -> Result<Mask> {
    if let [t] = toks {
        if t.text == "-" {
            return Ok(0);
        }
    }
    let mut m = 0;
    for t in toks {
        let i = ground.position(t.text).map_err(|_| t.err(format!("unknown element {:?}", t.text)))?;
        if m & (1 << i) != 0 {
            return Err(t.err(format!("element {:?} repeated", t.text)));
        }
        m |= 1 << i;
    }
    Ok(m)
}

fn show_set(ground: &GroundSet, m: Mask) -> String {
    if m == 0 {
        "-".into()
    } else {
        ground.labels_of(m).join(" ")
    }
}

fn split_at<'a, 'b>(line: &'b Line<'a>, sep: &str, shape: &str) -> Result<(&'b [Tok<'a>], &'b [Tok<'a>])> {
    let k = line.toks.iter().position(|t| t.text == sep).ok_or_else(|| line.err_end(format!("expected `{shape}`")))?;
    let (l, r) = (&line.toks[..k], &line.toks[k + 1..]);
    if l.is_empty() {
        return Err(line.toks[k].err("missing set before separator"));
    }
    if r.is_empty() {
        return Err(line.err_end("missing set after separator"));
    }
    Ok((l, r))
}

pub fn parse_presentation(src: &str) -> Result<Presentation> {
    let ls = lines(src);
    let mut it = ls.iter();
    let header = it.next().ok_or_else(|| eof(src, "expected `matroid <n>`"))?;
    if header.head() != "matroid" {
        return Err(header.toks[0].err("expected `matroid <n>`"));
    }
    header.expect_len(2, "matroid <n>")?;
    let n: usize = header.toks[1].parse("an element count")?;

    let el = it.next().ok_or_else(|| eof(src, "expected `elements:`"))?;
    if el.head() != "elements:" {
        return Err(el.toks[0].err("expected `elements: <labels>`"));
    }
    let labels = &el.toks[1..];
    if let Some(t) = labels.iter().find(|t| RESERVED.contains(&t.text)) {
        return Err(t.err(format!("{:?} cannot be an element label", t.text)));
    }
    if labels.len() != n {
        return Err(el.err_end(format!("header announces {n} elements, found {}", labels.len())));
    }
    let ground = GroundSet::new(labels.iter().map(|t| t.text)).map_err(|e| el.err(e.to_string()))?;

    let sec = it.next().ok_or_else(|| eof(src, "expected a section header"))?;
    sec.expect_len(1, "<section>:")?;
    let kind = sec
        .head()
        .strip_suffix(':')
        .and_then(SystemKind::parse)
        .ok_or_else(|| sec.toks[0].err("expected independents:, bases:, circuits:, closure: or rank:"))?;
    let body: Vec<&Line> = it.collect();

    Ok(match kind {
        SystemKind::Independence | SystemKind::Basis | SystemKind::Circuit => {
            let sets = body.iter().map(|l| parse_set(&ground, &l.toks)).collect::<Result<Vec<_>>>()?;
            let fam = SetFamily::new(ground, sets)?;
            match kind {
                SystemKind::Independence => Presentation::Independents(fam),
                SystemKind::Basis => Presentation::Bases(fam),
                _ => Presentation::Circuits(fam),
            }
        }
        SystemKind::Closure => {
            let mut map = BTreeMap::new();
            for l in body {
                let (x, c) = split_at(l, "->", "X -> cl(X)")?;
                let x = parse_set(&ground, x)?;
                if map.insert(x, parse_set(&ground, c)?).is_some() {
                    return Err(l.err("closure of this set given twice"));
                }
            }
            Presentation::Closure(ClosureTable { ground, map })
        }
        SystemKind::Rank => {
            let mut entries = BTreeMap::new();
            for l in body {
                let (lhs, rhs) = split_at(l, "=", "A | B = r")?;
                let (a, b) = {
                    let k = lhs.iter().position(|t| t.text == "|").ok_or_else(|| lhs[0].err("expected `A | B`"))?;
                    if k == 0 || k + 1 == lhs.len() {
                        return Err(lhs[k].err("expected sets on both sides of `|`"));
                    }
                    (parse_set(&ground, &lhs[..k])?, parse_set(&ground, &lhs[k + 1..])?)
                };
                if b & !a != 0 {
                    return Err(lhs[0].err("rank entries need B ⊆ A"));
                }
                let [v] = rhs else { return Err(rhs[1].err("expected a single rank value")) };
                let v = match v.text {
                    "inf" => RankValue::Infinite,
                    _ => RankValue::Finite(v.parse("a rank value")?),
                };
                if entries.insert((a, b), v).is_some() {
                    return Err(l.err("rank of this pair given twice"));
                }
            }
            Presentation::Rank(RankInput::new(RelRankTable { ground, entries }))
        }
    })
}

pub fn print_presentation(p: &Presentation) -> String {
    let g = p.ground();
    let mut s = format!("matroid {}\n{}", g.len(), label_line("elements", g.labels()));
    let section = match p.kind() {
        SystemKind::Independence => "independents",
        k => k.name(),
    };
    s += &format!("{section}:\n");
    match p {
        Presentation::Independents(f) | Presentation::Bases(f) | Presentation::Circuits(f) => {
            for &m in f.members() {
                s += &show_set(g, m);
                s.push('\n');
            }
        }
        Presentation::Closure(t) => {
            for (&x, &c) in &t.map {
                s += &format!("{} -> {}\n", show_set(g, x), show_set(g, c));
            }
        }
        Presentation::Rank(r) => {
            for (&(a, b), v) in &r.table.entries {
                let v = match v {
                    RankValue::Finite(n) => n.to_string(),
                    RankValue::Infinite => "inf".into(),
                };
                s += &format!("{} | {} = {v}\n", show_set(g, a), show_set(g, b));
            }
        }
    }
    s
}

/// Parse any presentation and build the matroid it describes, checking the
/// presentation's own axioms first.
pub fn parse_matroid(src: &str) -> Result<FiniteMatroid> {
    let p = parse_presentation(src)?;
    let report = p.verify()?;
    if !report.passed() {
        return Err(crate::Error::AxiomsFailed(Box::new(report)));
    }
    FiniteMatroid::from_independents(&p.independents())
}

/// Print a matroid as its independent sets.
pub fn print_matroid(m: &FiniteMatroid) -> String {
    print_presentation(&Presentation::Independents(m.independents()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    #[test]
    fn circuits_roundtrip() {
        let src = "matroid 3\nelements: a b c\ncircuits:\na b c\n";
        let p = parse_presentation(src).unwrap();
        assert_eq!(print_presentation(&p), src);
    }

    #[test]
    fn every_system_roundtrips() {
        let m = FiniteMatroid::uniform(2, GroundSet::indexed("e", 3));
        for k in SystemKind::ALL {
            let p = Presentation::of_matroid(&m, k);
            assert_eq!(parse_presentation(&print_presentation(&p)).unwrap(), p, "{k:?}");
        }
    }

    #[test]
    fn empty_set_marker() {
        let p = parse_presentation("matroid 1\nelements: x\nindependents:\n-\n").unwrap();
        let Presentation::Independents(f) = p else { panic!() };
        assert_eq!(f.members(), &[0]);
    }

    #[test]
    fn errors_point_at_token() {
        let e = parse_presentation("matroid 2\nelements: a b\nbases:\na  q\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, col: 4, .. }), "{e}");
        let e = parse_presentation("matroid 3\nelements: a b\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse_presentation("matroid 1\nelements: a\nflats:\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, col: 1, .. }), "{e}");
    }

    #[test]
    fn parse_matroid_checks_axioms() {
        let bad = "matroid 2\nelements: a b\nindependents:\n-\na b\n";
        assert!(matches!(parse_matroid(bad), Err(Error::AxiomsFailed(_))));
    }
}
