//! ```text
//! thinfam p=3 dim=4
//! vec x 0:1 3:2
//! vec zero
//! pvec y 1 - 1,2
//! ```
//!
//! `vec` lists the non-zero `coordinate:value` pairs of a finitely supported
//! function. `pvec <name> <start> <preperiod> <period>` describes a function
//! on ℕ: `start` zeros, then the preperiod, then the period repeated, both
//! comma-separated (`-` for an empty preperiod). `dim=<n>` fixes the domain to
//! `{0..n-1}` and `dim=nat` to ℕ; without it the domain is ℕ when a `pvec` is
//! present and otherwise the smallest `{0..n-1}` that fits.

use super::{eof, lines, parse_list, show_list};
use crate::error::Result;
use crate::thin::{Domain, Field, FnVec, ThinFamily};

pub fn parse_thinfam(src: &str) -> Result<ThinFamily> {
    let ls = lines(src);
    let h = ls.first().ok_or_else(|| eof(src, "expected `thinfam p=<prime>`"))?;
    if h.head() != "thinfam" {
        return Err(h.toks[0].err("expected `thinfam p=<prime>`"));
    }
    let mut field = None;
    let mut domain = None;
    for t in &h.toks[1..] {
        if let Some(p) = t.text.strip_prefix("p=") {
            let p: u32 = p.parse().map_err(|_| t.err("expected p=<prime>"))?;
            field = Some(Field::new(p).map_err(|e| t.err(e.to_string()))?);
        } else if let Some(d) = t.text.strip_prefix("dim=") {
            domain = Some(match d {
                "nat" => Domain::Naturals,
                _ => Domain::Finite(d.parse().map_err(|_| t.err("expected dim=<n> or dim=nat"))?),
            });
        } else {
            return Err(t.err("expected p=<prime> or dim=<n>"));
        }
    }
    let field = field.ok_or_else(|| h.err_end("missing p=<prime>"))?;

    let mut members = Vec::new();
    for l in &ls[1..] {
        let t = &l.toks;
        let name = t.get(1).ok_or_else(|| l.err_end("expected a member name"))?.text.to_string();
        let v = match l.head() {
            "vec" => {
                let mut vals = Vec::new();
                for tok in &t[2..] {
                    let (a, v) = tok.text.split_once(':').ok_or_else(|| tok.err("expected coordinate:value"))?;
                    let a: usize = a.parse().map_err(|_| tok.err("bad coordinate"))?;
                    let v: u32 = v.parse().map_err(|_| tok.err("bad value"))?;
                    if v >= field.p() {
                        return Err(tok.err(format!("value {v} is not in F_{}", field.p())));
                    }
                    if vals.iter().any(|&(b, _)| b == a) {
                        return Err(tok.err("coordinate given twice"));
                    }
                    vals.push((a, v));
                }
                FnVec::finite(vals)
            }
            "pvec" => {
                l.expect_len(5, "pvec <name> <start> <preperiod> <period>")?;
                let start: usize = t[2].parse("a start coordinate")?;
                let pre: Vec<u32> = parse_list(&t[3], "values")?;
                let period: Vec<u32> = parse_list(&t[4], "values")?;
                if period.is_empty() {
                    return Err(t[4].err("period must be non-empty"));
                }
                for (tok, vals) in [(&t[3], &pre), (&t[4], &period)] {
                    if vals.iter().any(|&v| v >= field.p()) {
                        return Err(tok.err(format!("value out of range for F_{}", field.p())));
                    }
                }
                FnVec::periodic(start, &pre, &period)?
            }
            _ => return Err(t[0].err("expected `vec` or `pvec`")),
        };
        members.push((name, v, l.no));
    }
    let domain = domain.unwrap_or_else(|| {
        if members.iter().any(|(_, v, _)| !v.has_finite_support()) {
            Domain::Naturals
        } else {
            Domain::Finite(members.iter().map(|(_, v, _)| v.horizon()).max().unwrap_or(0))
        }
    });
    let at = |no: usize| ls.iter().find(|l| l.no == no).expect("line exists");
    for (name, v, no) in &members {
        if let Domain::Finite(n) = domain {
            if !v.has_finite_support() || v.horizon() > n {
                return Err(at(*no).toks[1].err(format!("{name} does not fit dim={n}")));
            }
        }
    }
    ThinFamily::new(field, domain, members.into_iter().map(|(n, v, _)| (n, v)))
        .map_err(|e| h.err(e.to_string()))
}

pub fn print_thinfam(f: &ThinFamily) -> String {
    let dim = match f.domain() {
        Domain::Finite(n) => n.to_string(),
        Domain::Naturals => "nat".into(),
    };
    let mut s = format!("thinfam p={} dim={dim}\n", f.field().p());
    for (name, v) in f.names().iter().zip(f.members()) {
        match v {
            FnVec::Finite(m) => {
                s += &format!("vec {name}");
                for (a, x) in m {
                    s += &format!(" {a}:{x}");
                }
                s.push('\n');
            }
            FnVec::Periodic { pre, period } => {
                let start = pre.iter().take_while(|&&x| x == 0).count();
                s += &format!("pvec {name} {start} {} {}\n", show_list(&pre[start..]), show_list(period));
            }
        }
    }
    s
}
