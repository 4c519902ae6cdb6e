use std::fmt::Write as _;
use std::path::Path;

use matroid_lab::axioms::{
    convert, count_by_down_closed_filter, enumerate_matroids_with, verify_circuits_classic, Presentation, SystemKind,
};
use matroid_lab::format::{
    parse_edgeset, parse_graph, parse_matroid, parse_presentation, parse_sgraph, parse_thinfam, print_edgeset,
    print_matroid, print_presentation, print_report, print_sgraph,
};
use matroid_lab::graph::{bonds, check_theorem1, finite_bond_matroid, finite_cycle_matroid, MultiGraph};
use matroid_lab::infinite::{
    bean_check, ends, is_base, is_circle, is_circuit, is_independent, standard_sample, topological_spanning_tree,
    tree_criteria, verify_mac_duality, EdgeSetExpr, MatroidKind, StructuredGraph,
};
use matroid_lab::thin::{
    dependence_certificate, i3_counterexample_demo, mac_thin_equivalence, span_coefficients, structured_incidence,
    theorem8_sweep, thin_basis_extend, verify_theorem8, ThinFamily,
};
use matroid_lab::{catalog, Error, Exec, FiniteMatroid, Mask};

use crate::{CatalogOp, Command, GraphOp, SetArgs, SgraphOp, ThinOp};

pub struct Out {
    pub text: String,
    pub holds: bool,
}

impl Out {
    fn ok(text: String) -> Self {
        Out { text, holds: true }
    }

    fn verdict(holds: bool, text: String) -> Self {
        Out { text, holds }
    }

    fn answer(holds: bool) -> Self {
        Out { text: format!("{holds}\n"), holds }
    }
}

type Res<T> = std::result::Result<T, String>;

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Attach the file name; parse errors become `file:line:col: msg`.
fn at(path: &Path) -> impl Fn(Error) -> String + '_ {
    move |e| match e {
        Error::Parse { line, col, msg } => format!("{}:{line}:{col}: {msg}", path.display()),
        other => format!("{}: {other}", path.display()),
    }
}

fn plain(e: Error) -> String {
    e.to_string()
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> matroid_lab::Result<T>) -> Res<T> {
    parse(&read(path)?).map_err(at(path))
}

fn system(name: &str) -> Res<SystemKind> {
    SystemKind::parse(name).ok_or_else(|| {
        format!("unknown system {name:?}, expected independents, bases, circuits, closure or rank")
    })
}

fn kind(name: &str) -> Res<MatroidKind> {
    MatroidKind::parse(name).ok_or_else(|| format!("unknown matroid kind {name:?}, expected fc, b, fb, c or ac"))
}

fn split(list: &str) -> impl Iterator<Item = &str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn mask(m: &FiniteMatroid, list: &str) -> Res<Mask> {
    m.ground().mask_of(split(list)).map_err(plain)
}

fn present(m: &FiniteMatroid, to: &str) -> Res<String> {
    Ok(print_presentation(&Presentation::of_matroid(m, system(to)?)))
}

pub fn run(cmd: Command) -> Res<Out> {
    match cmd {
        Command::Verify { system: expected, classic, file } => {
            let p = load(&file, parse_presentation)?;
            if let Some(name) = expected {
                let k = system(&name)?;
                if k != p.kind() {
                    return Err(format!("{}: file holds a {} presentation, not {}", file.display(), p.kind().name(), k.name()));
                }
            }
            let report = match (&p, classic) {
                (Presentation::Circuits(f), true) => verify_circuits_classic(f),
                (_, true) => return Err("--classic applies to circuit presentations only".into()),
                _ => p.verify().map_err(at(&file))?,
            };
            Ok(Out::verdict(report.passed(), print_report(&report)))
        }
        Command::Convert { to, file } => {
            let p = load(&file, parse_presentation)?;
            let q = convert(&p, system(&to)?).map_err(at(&file))?;
            Ok(Out::ok(print_presentation(&q)))
        }
        Command::Dual { to, file } => {
            let m = load(&file, parse_matroid)?;
            Ok(Out::ok(present(&m.dual(), &to)?))
        }
        Command::Minor { delete, contract, to, file } => {
            let m = load(&file, parse_matroid)?;
            let minor = m.minor(mask(&m, &delete)?, mask(&m, &contract)?).map_err(plain)?;
            Ok(Out::ok(present(&minor, &to)?))
        }
        Command::Graph { op } => graph(op),
        Command::Sgraph { op } => sgraph(op),
        Command::Thinsum { op } => thinsum(op),
        Command::Enumerate { n, list, cross_check, sequential } => {
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let all = enumerate_matroids_with(n, exec).map_err(plain)?;
            let mut text = String::new();
            if list {
                for m in &all {
                    text += &print_matroid(m);
                    text += "\n";
                }
            }
            let _ = writeln!(text, "matroids on {n} elements: {}", all.len());
            let mut holds = true;
            if cross_check {
                let filtered = count_by_down_closed_filter(n, exec).map_err(plain)?;
                let _ = writeln!(text, "down-closed families passing the independence axioms: {filtered}");
                holds = filtered == all.len();
            }
            Ok(Out::verdict(holds, text))
        }
        Command::Catalog { op } => catalog_cmd(op),
    }
}

fn graph(op: GraphOp) -> Res<Out> {
    let g = |f: &Path| load(f, parse_graph);
    match op {
        GraphOp::Cycle { file } => {
            let m = finite_cycle_matroid(&g(&file)?).map_err(at(&file))?;
            Ok(Out::ok(present(&m, "circuits")?))
        }
        GraphOp::BondMatroid { file } => {
            let m = finite_bond_matroid(&g(&file)?).map_err(at(&file))?;
            Ok(Out::ok(present(&m, "circuits")?))
        }
        GraphOp::Bonds { file } => {
            let b = bonds(&g(&file)?).map_err(at(&file))?;
            let text = b.members().iter().map(|&s| format!("{}\n", b.ground().show(s))).collect();
            Ok(Out::ok(text))
        }
        GraphOp::Theorem1 { file } => {
            let c = check_theorem1(&g(&file)?).map_err(at(&file))?;
            let text = format!(
                "circuits of the dual cycle matroid are the bonds: {}\nminimal spanning-tree transversals are the bonds: {}\n",
                c.dual_circuits_are_bonds, c.transversals_are_bonds
            );
            Ok(Out::verdict(c.holds(), text))
        }
        GraphOp::Thin { file } => {
            let mg: MultiGraph = g(&file)?;
            if mg.edges().len() > 20 {
                return Err(format!("{}: at most 20 edges for the exhaustive check", file.display()));
            }
            let ok = mac_thin_equivalence(&mg);
            let text = format!(
                "thin independence of incidence vectors equals acyclicity on all {} edge sets: {ok}\n",
                1u64 << mg.edges().len()
            );
            Ok(Out::verdict(ok, text))
        }
    }
}

fn with_set(s: &SetArgs) -> Res<(StructuredGraph, EdgeSetExpr)> {
    let g = load(&s.graph, parse_sgraph)?;
    let d = parse_edgeset(&g, &read(&s.set)?).map_err(at(&s.set))?;
    Ok((g, d))
}

fn sgraph(op: SgraphOp) -> Res<Out> {
    match op {
        SgraphOp::Show { graph } => Ok(Out::ok(print_sgraph(&load(&graph, parse_sgraph)?))),
        SgraphOp::Ends { graph } => {
            let g = load(&graph, parse_sgraph)?;
            let mut text = String::new();
            for (i, e) in ends(&g).iter().enumerate() {
                let tails: Vec<&str> = e.tails.iter().map(|&t| g.tails()[t].as_str()).collect();
                let doms: Vec<&str> = e.dominators.iter().map(|&u| g.core().vertices()[u].as_str()).collect();
                let doms = if doms.is_empty() { "-".to_string() } else { doms.join(" ") };
                let _ = writeln!(text, "end {i}: tails {} dominated-by {doms}", tails.join(" "));
            }
            Ok(Out::ok(text))
        }
        SgraphOp::Bean { graph } => {
            let b = bean_check(&load(&graph, parse_sgraph)?);
            Ok(Out::verdict(b, format!("contains a subdivided bean graph: {b}\n")))
        }
        SgraphOp::Independent { kind: k, s } => {
            let (g, d) = with_set(&s)?;
            Ok(Out::answer(is_independent(&g, kind(&k)?, &d).map_err(at(&s.set))?))
        }
        SgraphOp::Circuit { kind: k, s } => {
            let (g, d) = with_set(&s)?;
            Ok(Out::answer(is_circuit(&g, kind(&k)?, &d).map_err(at(&s.set))?))
        }
        SgraphOp::Base { kind: k, s } => {
            let (g, d) = with_set(&s)?;
            Ok(Out::answer(is_base(&g, kind(&k)?, &d).map_err(at(&s.set))?))
        }
        SgraphOp::Circle { s } => {
            let (g, d) = with_set(&s)?;
            Ok(Out::answer(is_circle(&g, &d).map_err(at(&s.set))?))
        }
        SgraphOp::Tree { s } => {
            let (g, d) = with_set(&s)?;
            let c = tree_criteria(&g, &d).map_err(at(&s.set))?;
            let text = format!(
                "maximal acirclic: {}\nminimal finite-bond transversal: {}\n",
                c.maximal_acirclic, c.minimal_bond_transversal
            );
            Ok(Out::verdict(c.minimal_bond_transversal && c.maximal_acirclic, text))
        }
        SgraphOp::Extend { s } => {
            let (g, d) = with_set(&s)?;
            let t = topological_spanning_tree(&g, &d).map_err(at(&s.set))?;
            Ok(Out::ok(print_edgeset(&g, &t)))
        }
        SgraphOp::Thin { s } => {
            let (g, d) = with_set(&s)?;
            Ok(Out::answer(structured_incidence(&g).thinly_independent(&d).map_err(at(&s.set))?))
        }
        SgraphOp::Duality { graph, seed, count } => {
            let g = load(&graph, parse_sgraph)?;
            let r = verify_mac_duality(&g, &standard_sample(&g, seed, count)).map_err(at(&graph))?;
            let text = format!(
                "finite samples checked: {}\nskew-cut disagreements: {}\ncircuit/cut pairs: {}\nsingle-edge meetings: {}\n",
                r.checked,
                r.disagreements.len(),
                r.circuit_cut_pairs,
                r.singleton_meetings.len()
            );
            Ok(Out::verdict(r.holds(), text))
        }
    }
}

fn members(fam: &ThinFamily, list: &str) -> Res<Vec<usize>> {
    split(list).map(|n| fam.position(n).map_err(plain)).collect()
}

fn relation(fam: &ThinFamily, coeffs: &[(usize, u32)]) -> String {
    let terms: Vec<String> = coeffs.iter().map(|&(i, c)| format!("{c}*{}", fam.names()[i])).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn thinsum(op: ThinOp) -> Res<Out> {
    match op {
        ThinOp::Verify { file } => {
            let fam = load(&file, parse_thinfam)?;
            let r = verify_theorem8(&fam).map_err(at(&file))?;
            Ok(Out::verdict(r.passed(), print_report(&r)))
        }
        ThinOp::Independent { file, members: list } => {
            let fam = load(&file, parse_thinfam)?;
            let idx = members(&fam, &list)?;
            Ok(match dependence_certificate(&fam, &idx).map_err(at(&file))? {
                None => Out::verdict(true, "independent\n".into()),
                Some(c) => Out::verdict(false, format!("dependent: {} = 0\n", relation(&fam, &c))),
            })
        }
        ThinOp::Span { file, target, members: list } => {
            let fam = load(&file, parse_thinfam)?;
            let y = fam.member(fam.position(&target).map_err(plain)?).clone();
            let idx = members(&fam, &list)?;
            Ok(match span_coefficients(&y, &fam, &idx).map_err(at(&file))? {
                Some(c) => Out::verdict(true, format!("{target} = {}\n", relation(&fam, &c))),
                None => Out::verdict(false, format!("{target} is not in the span\n")),
            })
        }
        ThinOp::Extend { file, base, within, order } => {
            let fam = load(&file, parse_thinfam)?;
            let i = members(&fam, &base)?;
            let x = match within {
                Some(w) => members(&fam, &w)?,
                None => (0..fam.len()).collect(),
            };
            let order = order.map(|o| members(&fam, &o)).transpose()?;
            let b = thin_basis_extend(&fam, &i, &x, order.as_deref()).map_err(at(&file))?;
            let names: Vec<&str> = b.iter().map(|&k| fam.names()[k].as_str()).collect();
            Ok(Out::ok(format!("{}\n", if names.is_empty() { "-".into() } else { names.join(" ") })))
        }
        ThinOp::Sweep { seed, count, sequential } => {
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let s = theorem8_sweep(seed, count, exec);
            let seeds = |v: &[u64]| {
                if v.is_empty() {
                    "-".to_string()
                } else {
                    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
                }
            };
            let text = format!(
                "families: {}\naxiom failures: {}\nelimination/brute-force disagreements: {}\n",
                s.families,
                seeds(&s.axiom_failures),
                seeds(&s.rank_disagreements)
            );
            Ok(Out::verdict(s.holds(), text))
        }
        ThinOp::Demo { n } => {
            let d = i3_counterexample_demo(n).map_err(plain)?;
            Ok(Out::verdict(d.key_dependences_hold(), d.render()))
        }
    }
}

fn catalog_cmd(op: CatalogOp) -> Res<Out> {
    match op {
        CatalogOp::List => {
            let text = catalog::catalog_list()
                .iter()
                .map(|e| format!("{:<14} {}\n", e.name, e.description))
                .collect();
            Ok(Out::ok(text))
        }
        CatalogOp::Run { name } => {
            let entries =
                if name == "all" { catalog::catalog_list() } else { vec![catalog::find(&name).map_err(plain)?] };
            let outcomes: Vec<_> = Exec::default().map(&entries, catalog::run).into_iter().flatten().collect();
            let mut text = String::new();
            for o in &outcomes {
                let verdict = match &o.outcome {
                    Ok(true) => "pass".to_string(),
                    Ok(false) => "fail".to_string(),
                    Err(e) => format!("error: {e}"),
                };
                let _ = writeln!(text, "{} {} {verdict}", o.entry, o.fact);
            }
            Ok(Out::verdict(outcomes.iter().all(|o| o.passed()), text))
        }
    }
}
