//! ```text
//! report independence
//! elements: a b c
//! I1 pass
//! I3 fail witness: {a} {b,c}
//! ```
//!
//! One line per axiom. A witness lists its sets as `{x,y}` (`∅` for the empty
//! set) followed by its elements as bare labels.

use super::{eof, label_line, lines};
use crate::axioms::{AxiomReport, AxiomResult, SystemKind, Witness};
use crate::error::Result;
use crate::set::GroundSet;

const NAMES: [&str; 22] = [
    "I1", "I2", "I3", "IM", "B1", "B2", "BM", "C1", "C2", "C3", "CE", "CM", "CL1", "CL2", "CL3", "CL4", "CLM", "R1",
    "R2", "R3", "R4", "RM",
];

pub fn print_report(r: &AxiomReport) -> String {
    format!("report {}\n{}{r}", r.system.name(), label_line("elements", r.ground.labels()))
}

pub fn parse_report(src: &str) -> Result<AxiomReport> {
    let ls = lines(src);
    let h = ls.first().ok_or_else(|| eof(src, "expected `report <system>`"))?;
    if h.head() != "report" {
        return Err(h.toks[0].err("expected `report <system>`"));
    }
    h.expect_len(2, "report <system>")?;
    let system = SystemKind::parse(h.toks[1].text).ok_or_else(|| h.toks[1].err("unknown axiom system"))?;
    let el = ls.get(1).ok_or_else(|| eof(src, "expected `elements:`"))?;
    if el.head() != "elements:" {
        return Err(el.toks[0].err("expected `elements: <labels>`"));
    }
    let ground = GroundSet::new(el.toks[1..].iter().map(|t| t.text)).map_err(|e| el.err(e.to_string()))?;

    let mut results = Vec::new();
    for l in &ls[2..] {
        let t = &l.toks;
        let name = NAMES.iter().find(|&&n| n == t[0].text).ok_or_else(|| t[0].err("unknown axiom name"))?;
        let verdict = t.get(1).ok_or_else(|| l.err_end("expected pass or fail"))?;
        let witness = match verdict.text {
            "pass" => {
                l.expect_len(2, "<axiom> pass")?;
                None
            }
            "fail" => {
                let mut w = Witness::default();
                if let Some(k) = t.get(2) {
                    if k.text != "witness:" {
                        return Err(k.err("expected `witness:`"));
                    }
                    for tok in &t[3..] {
                        if tok.text == "∅" {
                            w.sets.push(0);
                        } else if let Some(inner) = tok.text.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
                            let m = ground
                                .mask_of(inner.split(',').filter(|s| !s.is_empty()))
                                .map_err(|e| tok.err(e.to_string()))?;
                            w.sets.push(m);
                        } else {
                            w.elements.push(ground.position(tok.text).map_err(|e| tok.err(e.to_string()))?);
                        }
                    }
                }
                Some(w)
            }
            _ => return Err(verdict.err("expected pass or fail")),
        };
        results.push(AxiomResult { name, witness });
    }
    Ok(AxiomReport { system, ground, results })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{verify_circuits, verify_independence};
    use crate::set::SetFamily;

    #[test]
    fn failing_report_roundtrips() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let f = SetFamily::new(g, [0, 0b001, 0b100, 0b110]).unwrap();
        let r = verify_independence(&f);
        assert!(!r.passed());
        assert_eq!(parse_report(&print_report(&r)).unwrap(), r);
    }

    #[test]
    fn passing_report_lines() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let r = verify_circuits(&SetFamily::new(g, [0b111]).unwrap());
        let text = print_report(&r);
        assert!(text.contains("C1 pass\nC2 pass\nC3 pass\n"), "{text}");
        assert_eq!(parse_report(&text).unwrap(), r);
    }
}
