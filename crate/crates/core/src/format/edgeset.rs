//! ```text
//! finite: e1 e2
//! word rail:a 0 - 1
//! word cross:0 2 1 10
//! ```
//!
//! `finite:` lists finite edges by label (`-` or nothing for none); single
//! family edges may also be given as `@<family>:<index>`. Each `word` line
//! gives the edges of one family as `<start> <preperiod-bits> <period-bits>`:
//! `start` zeros, then the preperiod, then the period repeated.

use super::{lines, parse_bits, show_bits};
use crate::error::Result;
use crate::infinite::{EdgeSetExpr, StructuredGraph, UpWord};

pub fn parse_edgeset(g: &StructuredGraph, src: &str) -> Result<EdgeSetExpr> {
    let mut d = EdgeSetExpr::empty();
    let mut seen_finite = false;
    let mut seen_words = Vec::new();
    for l in lines(src) {
        let t = &l.toks;
        match l.head() {
            "finite:" => {
                if seen_finite {
                    return Err(t[0].err("second `finite:` line"));
                }
                seen_finite = true;
                let items = if t.len() == 2 && t[1].text == "-" { &t[2..] } else { &t[1..] };
                for tok in items {
                    let e = g.parse_edge(tok.text).map_err(|e| tok.err(e.to_string()))?;
                    if !g.has_edge(&e) {
                        return Err(tok.err(format!("{:?} is not an edge of the graph", tok.text)));
                    }
                    d.insert(&e);
                }
            }
            "word" => {
                l.expect_len(5, "word <family> <start> <pre> <period>")?;
                let f = g.parse_family(t[1].text).map_err(|e| t[1].err(e.to_string()))?;
                if seen_words.contains(&f) {
                    return Err(t[1].err("family given twice"));
                }
                seen_words.push(f);
                let start: usize = t[2].parse("a start index")?;
                let pre = parse_bits(&t[3])?;
                let period = parse_bits(&t[4])?;
                if period.is_empty() {
                    return Err(t[4].err("period must be non-empty"));
                }
                let w = UpWord::with_start(start, &pre, &period);
                if !w.difference(&g.family_word(f)).is_empty() {
                    return Err(t[0].err(format!("word names edges missing from {}", t[1].text)));
                }
                let rest = d.word(f);
                d.set_word(f, w.union(&rest));
            }
            _ => return Err(t[0].err("expected `finite:` or `word`")),
        }
    }
    Ok(d)
}

pub fn print_edgeset(g: &StructuredGraph, d: &EdgeSetExpr) -> String {
    let labels: Vec<&str> = d.finite_part().iter().map(String::as_str).collect();
    let mut s = if labels.is_empty() { "finite: -\n".to_string() } else { format!("finite: {}\n", labels.join(" ")) };
    for (f, w) in d.words() {
        let start = w.pre().iter().take_while(|&&b| !b).count();
        s += &format!(
            "word {} {start} {} {}\n",
            g.family_name(*f),
            show_bits(&w.pre()[start..]),
            show_bits(w.period())
        );
    }
    s
}
