use std::io::Read;

use combkit::coloring::{self, Circle, PlanarVerdict, POLYHEDRA};
use combkit::counting::{self, CatalanMethod, DerangementMethod, DivisorProfile, PokerHand, SelectionMode};
use combkit::genfunc::{self, CoinLimit, CoinSpec, PartialFractions, RationalGF, TruncatedSeries};
use combkit::graph::{self, AdjacencyMatrix, EulerClass, Graph, NatMatrix, TwoColoring};
use combkit::graphopt;
use combkit::num::{format_complex, format_f64, format_rational, parse_rational, parse_rational_list, rat_to_nat};
use combkit::sequences::{self, LinearRecurrence, StairRule};
use combkit::{Error, Polynomial, Rational};
use serde_json::{json, Value};

use crate::input::{read_graph_arg, read_text, read_weighted_arg};
use crate::report::{int, ints, join, rational, rationals, Report};
use crate::{CliError, Command, CountCmd, DerangeMethod, GraphCmd, PartitionKind, RecArgs, SeqCmd, SeriesArgs, SeriesCmd, TreeCmd};

type Out = Result<Report, CliError>;

pub fn dispatch(cmd: &Command, stdin: &mut dyn Read) -> Out {
    match cmd {
        Command::Count { what } => count(what),
        Command::Pascal { rows, modulus } => pascal(*rows, *modulus),
        Command::Derange { n, method } => {
            let method = match method {
                DerangeMethod::Product => DerangementMethod::ProductRecurrence,
                DerangeMethod::Affine => DerangementMethod::AffineRecurrence,
                DerangeMethod::Closed => DerangementMethod::ClosedForm,
            };
            Ok(Report::integer(counting::derangement(*n, method)))
        }
        Command::Catalan { n, table } => {
            if *table {
                let t = counting::catalan_table(*n as usize);
                Ok(Report::new(join(&t, " "), ints(&t)))
            } else {
                Ok(Report::integer(counting::catalan(*n, CatalanMethod::ClosedForm)))
            }
        }
        Command::Divisors { n } => divisors(*n),
        Command::Poker { hand } => poker(hand.as_deref()),
        Command::Seq { what } => seq(what),
        Command::SolveRec { rec, terms } => solve_rec(rec, *terms),
        Command::Series { what } => series(what),
        Command::Change { coins, amount, order } => change(coins, *amount, *order),
        Command::Partitions { n, kind } => {
            let s = match kind {
                PartitionKind::All => genfunc::partition_series(*n),
                PartitionKind::Distinct => genfunc::distinct_parts_series(*n),
                PartitionKind::Odd => genfunc::odd_parts_series(*n),
            };
            Ok(Report::integer(rat_to_nat(s.coeff(*n)).expect("partition counts are natural")))
        }
        Command::Graph { what } => graph_cmd(what, stdin),
        Command::Walks { graph, len, from, to } => walks(&read_graph_arg(graph, stdin)?, *len, *from, *to),
        Command::Tree { what } => tree(what, stdin),
        Command::Mst { graph } => mst(graph, stdin),
        Command::Tsp { graph, start, exact, workers } => tsp(graph, *start, *exact, *workers, stdin),
        Command::Match { graph, greedy, hall } => matching(&read_graph_arg(graph, stdin)?, *greedy, hall.as_deref()),
        Command::Ramsey { m0, m1, cap, n, workers } => ramsey(*m0, *m1, *cap, *n, *workers),
        Command::Color { graph, k, degeneracy, circles, point } => match (circles, point) {
            (Some(c), Some(p)) => circle_color(c, p),
            _ => {
                let arg = graph.as_deref().ok_or_else(|| CliError::Usage("a graph is required".into()))?;
                color(&read_graph_arg(arg, stdin)?, *k, *degeneracy)
            }
        },
        Command::Chrompoly { graph, at } => chrompoly(&read_graph_arg(graph, stdin)?, *at),
        Command::Planarity { graph } => planarity(&read_graph_arg(graph, stdin)?),
        Command::Euler { name, v, e, f } => euler(name.as_deref(), *v, *e, *f),
    }
}

fn count(what: &CountCmd) -> Out {
    let sel = |n, k, mode| Ok(Report::integer(counting::selection_count(n, k, mode)));
    match *what {
        CountCmd::Choose { n, k } => sel(n, k, SelectionMode::SUBSETS),
        CountCmd::Sequences { n, k } => sel(n, k, SelectionMode::SEQUENCES),
        CountCmd::Ordered { n, k } => sel(n, k, SelectionMode::ORDERED_SUBSETS),
        CountCmd::Multisets { n, k } => sel(n, k, SelectionMode::MULTISETS),
        CountCmd::Table { n, k } => {
            let cells = [
                ("sequences", SelectionMode::SEQUENCES),
                ("ordered", SelectionMode::ORDERED_SUBSETS),
                ("subsets", SelectionMode::SUBSETS),
                ("multisets", SelectionMode::MULTISETS),
            ];
            let mut text = Vec::new();
            let mut obj = serde_json::Map::new();
            for (name, mode) in cells {
                let c = counting::selection_count(n, k, mode);
                text.push(format!("{name}: {c}"));
                obj.insert(name.to_string(), int(&c));
            }
            Ok(Report::new(text.join("\n"), Value::Object(obj)))
        }
        CountCmd::Factorial { n } => Ok(Report::integer(counting::factorial(n))),
        CountCmd::Multinomial { ref parts } => Ok(Report::integer(counting::multinomial(parts))),
        CountCmd::Anagrams { ref word } => Ok(Report::integer(counting::anagram_count(word)?)),
        CountCmd::Subsets { n, even } => {
            Ok(Report::integer(if even { counting::even_subset_count(n) } else { counting::subset_count(n) }))
        }
        CountCmd::Lattice { right, up } => Ok(Report::integer(counting::lattice_path_count(right, up))),
        CountCmd::Union { ref sizes } => match sizes[..] {
            [a, b, ab] => Ok(Report::integer(counting::union_count_2(a, b, ab)?)),
            [a, b, c, ab, ac, bc, abc] => Ok(Report::integer(counting::union_count_3(a, b, c, ab, ac, bc, abc)?)),
            _ => Err(CliError::Usage("union takes 3 sizes (a b ab) or 7 (a b c ab ac bc abc)".into())),
        },
        CountCmd::Coprime { n, ref primes } => Ok(Report::integer(counting::coprime_count(n, primes)?)),
    }
}

fn pascal(rows: usize, modulus: Option<u64>) -> Out {
    let table: Vec<Vec<String>> = match modulus {
        None => counting::pascal_rows(rows).iter().map(|r| r.iter().map(ToString::to_string).collect()).collect(),
        Some(m) => (0..=rows)
            .map(|n| Ok(counting::pascal_row_mod(n, m)?.iter().map(ToString::to_string).collect()))
            .collect::<Result<_, Error>>()?,
    };
    let text = table.iter().map(|r| r.join(" ")).collect::<Vec<_>>().join("\n");
    Ok(Report::new(text, Value::Array(table.iter().map(ints).collect())))
}

fn divisors(n: u64) -> Out {
    let p = DivisorProfile::new(n)?;
    let ds = counting::divisors(n);
    let (s0, s1, mu) = (counting::sigma0(&p), counting::sigma1(&p), counting::mobius(&p));
    let text = format!("divisors: {}\nsigma0: {s0}\nsigma1: {s1}\nmobius: {mu}", join(&ds, " "));
    Ok(Report::new(text, json!({ "divisors": ints(&ds), "sigma0": int(&s0), "sigma1": int(&s1), "mobius": mu })))
}

fn poker(hand: Option<&str>) -> Out {
    if let Some(name) = hand {
        let h = PokerHand::from_name(name).ok_or_else(|| CliError::Usage(format!("unknown hand {name:?}")))?;
        return Ok(Report::integer(counting::poker_count(h)));
    }
    let mut lines = Vec::new();
    let mut obj = serde_json::Map::new();
    let mut total = combkit::Natural::from(0u8);
    for h in PokerHand::ALL {
        let c = counting::poker_count(h);
        lines.push(format!("{}: {c}", h.name()));
        obj.insert(h.name().to_string(), int(&c));
        total += c;
    }
    lines.push(format!("total: {total}"));
    obj.insert("total".into(), int(&total));
    Ok(Report::new(lines.join("\n"), Value::Object(obj)))
}

fn parse_u64_list(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| CliError::Usage(format!("expected a natural number, got {t:?}"))))
        .collect()
}

fn seq(what: &SeqCmd) -> Out {
    Ok(match *what {
        SeqCmd::Fib { n } => Report::integer(sequences::fibonacci(n)),
        SeqCmd::Lucas { n } => Report::integer(sequences::lucas(n)),
        SeqCmd::Binet { n } => {
            let x = sequences::fibonacci_binet(n)?;
            Report::new(format_f64(x), json!(x))
        }
        SeqCmd::Stairs { n, ref steps } => {
            let rule = StairRule::new(parse_u64_list(steps)?)?;
            Report::integer(sequences::stair_ways(n, &rule))
        }
        SeqCmd::Hanoi { n, moves } => {
            let count = sequences::hanoi_count(n);
            if !moves {
                return Ok(Report::integer(count));
            }
            let n = u32::try_from(n).map_err(|_| Error::TooLarge { what: "disk count", limit: u32::MAX as u64 })?;
            let list = sequences::hanoi_moves(n)?;
            let mut text = vec![count.to_string()];
            text.extend(list.iter().map(|m| format!("disk {}: {} -> {}", m.disk, m.from, m.to)));
            let js: Vec<Value> = list.iter().map(|m| json!([m.disk, m.from, m.to])).collect();
            Report::new(text.join("\n"), json!({ "count": int(&count), "moves": js }))
        }
        SeqCmd::Plane { n } => Report::integer(sequences::plane_regions(n)),
        SeqCmd::Circles { n } => Report::integer(sequences::circle_regions(n)?),
    })
}

fn recurrence(rec: &RecArgs) -> Result<LinearRecurrence, CliError> {
    Ok(LinearRecurrence::with_start(parse_rational_list(&rec.coeffs)?, parse_rational_list(&rec.init)?, rec.start)?)
}

fn solve_rec(args: &RecArgs, terms: Option<u64>) -> Out {
    let rec = recurrence(args)?;
    let cf = sequences::solve_recurrence(&rec)?;
    let mut text = vec![format!("characteristic polynomial: {}", rec.characteristic_polynomial())];
    let mut pairs = Vec::new();
    for (r, w) in cf.roots.iter().zip(&cf.weights) {
        text.push(format!("root {}  weight {}", format_complex(*r), format_complex(*w)));
        pairs.push(json!({ "root": format_complex(*r), "weight": format_complex(*w) }));
    }
    let mut result = json!({ "start": cf.start, "terms": pairs });
    if let Some(last) = terms {
        let exact = rec.terms(last)?;
        let mut rows = Vec::new();
        for (i, a) in exact.iter().enumerate() {
            let n = rec.start() + i as u64;
            text.push(format!("a_{n} = {}  closed form {}", format_rational(a), format_f64(cf.eval(n))));
            rows.push(json!({ "n": n, "exact": rational(a), "closed": cf.eval(n) }));
        }
        result["values"] = Value::Array(rows);
    }
    Ok(Report::new(text.join("\n"), result))
}

fn series_report(s: &TruncatedSeries) -> Report {
    Report::new(s.to_string(), json!({ "order": s.order(), "coeffs": rationals(s.coeffs()) }))
}

fn parse_series(a: &SeriesArgs) -> Result<TruncatedSeries, CliError> {
    Ok(TruncatedSeries::new(parse_rational_list(&a.coeffs)?, a.order))
}

fn fraction(num: &str, den: &str) -> Result<RationalGF, CliError> {
    Ok(RationalGF::new(Polynomial::new(parse_rational_list(num)?), Polynomial::new(parse_rational_list(den)?))?)
}

fn series(what: &SeriesCmd) -> Out {
    let binary = |a: &SeriesArgs, with: &str, op: fn(&TruncatedSeries, &TruncatedSeries) -> combkit::Result<TruncatedSeries>| {
        let b = TruncatedSeries::new(parse_rational_list(with)?, a.order);
        Ok(series_report(&op(&parse_series(a)?, &b)?))
    };
    match what {
        SeriesCmd::Show(a) => Ok(series_report(&parse_series(a)?)),
        SeriesCmd::Inverse(a) => Ok(series_report(&parse_series(a)?.inverse()?)),
        SeriesCmd::Sqrt(a) => Ok(series_report(&parse_series(a)?.sqrt()?)),
        SeriesCmd::Derivative(a) => Ok(series_report(&parse_series(a)?.derivative()?)),
        SeriesCmd::Subst { series, c, m } => {
            Ok(series_report(&parse_series(series)?.substitute_monomial(&parse_rational(c)?, *m)?))
        }
        SeriesCmd::Add { a, with } => binary(a, with, genfunc::series_add),
        SeriesCmd::Sub { a, with } => binary(a, with, genfunc::series_sub),
        SeriesCmd::Mul { a, with } => binary(a, with, genfunc::series_mul),
        SeriesCmd::Catalan { order } => Ok(series_report(&genfunc::catalan_gf(*order))),
        SeriesCmd::Binomial { alpha, order } => {
            let alpha = parse_rational(alpha)?;
            let coeffs = (0..=*order as u64).map(|k| counting::generalized_binomial(&alpha, k)).collect();
            Ok(series_report(&TruncatedSeries::new(coeffs, *order)))
        }
        SeriesCmd::Rational(f) => Ok(series_report(&fraction(&f.num, &f.den)?.expand(f.order))),
        SeriesCmd::Partial(f) => {
            let pf = genfunc::partial_fractions(&fraction(&f.num, &f.den)?)?;
            let terms: Vec<Value> = match &pf {
                PartialFractions::Exact(t) => {
                    t.iter().map(|(z, r)| json!({ "weight": rational(z), "root": rational(r) })).collect()
                }
                PartialFractions::Numeric(t) => t
                    .iter()
                    .map(|(z, r)| json!({ "weight": format_complex(*z), "root": format_complex(*r) }))
                    .collect(),
            };
            let (coeff_text, coeff_json) = match pf.exact_coefficients(f.order) {
                Some(s) => (join(s.coeffs().iter().map(format_rational), " "), rationals(s.coeffs())),
                None => {
                    let cs = pf.coefficients(f.order);
                    (join(cs.iter().map(|z| format_complex(*z)), " "), json!(cs.iter().map(|z| format_complex(*z)).collect::<Vec<_>>()))
                }
            };
            let text = format!("{pf}\ncoefficients: {coeff_text}");
            Ok(Report::new(text, json!({ "terms": terms, "coefficients": coeff_json })))
        }
        SeriesCmd::FromRec { rec, order } => {
            let gf = genfunc::recurrence_to_gf(&recurrence(rec)?);
            let s = gf.expand(*order);
            let text = format!("{gf}\n{s}");
            Ok(Report::new(
                text,
                json!({
                    "numerator": rationals(gf.numerator().coeffs()),
                    "denominator": rationals(gf.denominator().coeffs()),
                    "coeffs": rationals(s.coeffs()),
                }),
            ))
        }
    }
}

fn change(coins: &str, amount: Option<usize>, order: Option<usize>) -> Out {
    let coins: Vec<CoinSpec> = coins.split(',').map(|c| c.trim().parse()).collect::<Result<_, Error>>()?;
    let unlimited = coins.iter().any(|c| c.limit() == CoinLimit::Unlimited);
    if unlimited && order.is_none() {
        return Err(CliError::Usage("unlimited coins need --order".into()));
    }
    if let (Some(a), Some(o)) = (amount, order) {
        if a > o {
            return Err(CliError::Usage(format!("--amount {a} is beyond --order {o}")));
        }
    }
    match (amount, order) {
        (Some(a), _) => Ok(Report::integer(genfunc::ways_to_pay(&coins, a))),
        (None, Some(o)) => Ok(series_report(&genfunc::coin_change_series(&coins, o))),
        (None, None) => {
            let p = genfunc::coin_change_poly(&coins)?;
            Ok(Report::new(p.to_string(), json!({ "coeffs": rationals(p.coeffs()) })))
        }
    }
}

fn kind_name(g: &Graph) -> &'static str {
    match (g.kind().multi, g.kind().loops) {
        (false, false) => "simple",
        (_, false) => "multi",
        _ => "pseudo",
    }
}

fn euler_text(g: &Graph) -> (String, Value) {
    match graph::euler_classify(g) {
        Ok(EulerClass::ClosedWalk) => ("closed walk".into(), json!("closed")),
        Ok(EulerClass::OpenWalk(u, v)) => (format!("open walk {u}-{v}"), json!({ "open": [u, v] })),
        Ok(EulerClass::NoEulerianWalk) => ("none".into(), Value::Null),
        Err(_) => ("none (edges in more than one component)".into(), Value::Null),
    }
}

fn two_color_report(g: &Graph) -> (String, Value) {
    match graph::two_coloring(g) {
        TwoColoring::Coloring(c) => (format!("yes ({})", join(&c, " ")), json!({ "coloring": c })),
        TwoColoring::OddCycle(c) => (format!("no (odd cycle {})", join(&c, " ")), json!({ "odd_cycle": c })),
    }
}

fn graph_cmd(what: &GraphCmd, stdin: &mut dyn Read) -> Out {
    match what {
        GraphCmd::Info { graph } => {
            let g = read_graph_arg(graph, stdin)?;
            let degrees = g.degree_sequence();
            let comps = g.connected_components().len();
            let (bip, bip_json) = two_color_report(&g);
            let (eul, eul_json) = euler_text(&g);
            let text = format!(
                "vertices: {}\nedges: {}\nkind: {}\ndegrees: {}\ncomponents: {comps}\nconnected: {}\nbipartite: {bip}\neulerian: {eul}",
                g.n(),
                g.edge_count(),
                kind_name(&g),
                join(&degrees, " "),
                g.is_connected()
            );
            Ok(Report::new(
                text,
                json!({
                    "vertices": g.n(),
                    "edges": g.edge_count(),
                    "kind": kind_name(&g),
                    "degrees": degrees,
                    "components": comps,
                    "connected": g.is_connected(),
                    "bipartite": bip_json,
                    "eulerian": eul_json,
                }),
            ))
        }
        GraphCmd::Show { graph } => Ok(graph_text_report(&read_graph_arg(graph, stdin)?)),
        GraphCmd::Named { name } => {
            let g = crate::input::named_graph(name.trim_start_matches('@'))?;
            Ok(graph_text_report(&g))
        }
        GraphCmd::Euler { graph } => {
            let g = read_graph_arg(graph, stdin)?;
            match graph::euler_walk(&g) {
                Ok(w) => {
                    let kind = if w.is_closed() { "closed" } else { "open" };
                    let text = format!("{kind} walk: {}\nedge ids: {}", join(&w.vertices, " "), join(&w.edges, " "));
                    Ok(Report::new(text, json!({ "closed": w.is_closed(), "vertices": w.vertices, "edges": w.edges })))
                }
                Err(Error::NoEulerianWalk(odd)) => {
                    Ok(Report::new(format!("none ({odd} vertices of odd degree)"), Value::Null))
                }
                Err(Error::Disconnected) => Ok(Report::new("none (edges in more than one component)", Value::Null)),
                Err(e) => Err(e.into()),
            }
        }
        GraphCmd::Hamilton { graph } => {
            let g = read_graph_arg(graph, stdin)?;
            Ok(match graph::hamiltonian_cycle(&g)? {
                Some(c) => Report::new(join(&c, " "), json!(c)),
                None => Report::new("none", Value::Null),
            })
        }
        GraphCmd::Complement { graph } => Ok(graph_text_report(&read_graph_arg(graph, stdin)?.complement()?)),
        GraphCmd::Matrix { graph } => {
            let m = AdjacencyMatrix::of(&read_graph_arg(graph, stdin)?);
            Ok(Report::new(m.to_string(), json!(m.rows())))
        }
        GraphCmd::FromMatrix { input } => {
            let text = read_text(input, stdin)?;
            let rows = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty())
                .map(|(i, l)| {
                    l.split_whitespace()
                        .map(|t| t.parse::<u64>().map_err(|_| Error::Parse { line: i + 1, msg: format!("bad entry {t:?}") }))
                        .collect::<Result<Vec<u64>, Error>>()
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(graph_text_report(&graph::from_adjacency(&AdjacencyMatrix::from_rows(&rows)?)))
        }
        GraphCmd::TwoColor { graph } => {
            let g = read_graph_arg(graph, stdin)?;
            let (text, js) = two_color_report(&g);
            Ok(Report::new(text, js))
        }
    }
}

fn graph_text_report(g: &Graph) -> Report {
    let text = graph::write_graph_text(g);
    let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
    Report::new(text, json!({ "n": g.n(), "kind": kind_name(g), "edges": edges }))
}

fn matrix_json(m: &NatMatrix) -> Value {
    Value::Array((0..m.n()).map(|i| ints((0..m.n()).map(|j| m.get(i, j)))).collect())
}

fn walks(g: &Graph, len: u64, from: Option<usize>, to: Option<usize>) -> Out {
    match (from, to) {
        (Some(i), Some(j)) => Ok(Report::integer(graph::count_walks(g, i, j, len)?)),
        (None, None) => {
            let m = graph::walk_matrix(g, len);
            Ok(Report::new(m.to_string(), matrix_json(&m)))
        }
        _ => Err(CliError::Usage("--from and --to go together".into())),
    }
}

fn tree(what: &TreeCmd, stdin: &mut dyn Read) -> Out {
    Ok(match what {
        TreeCmd::Cayley { n } => Report::integer(graph::cayley_count(*n)?),
        TreeCmd::List { n } => {
            let trees = graph::enumerate_labeled_trees(*n)?;
            let lines: Vec<String> = trees.iter().map(|t| join(t.edges().iter().map(|(u, v)| format!("{u}-{v}")), " ")).collect();
            let js: Vec<Value> = trees.iter().map(|t| json!(t.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())).collect();
            Report::new(format!("{}\n{}", trees.len(), lines.join("\n")), json!({ "count": trees.len(), "trees": js }))
        }
        TreeCmd::Binary { leaves } => Report::integer(graph::binary_tree_count(*leaves)?),
        TreeCmd::AtMostBinary { n } => Report::integer(graph::at_most_binary_count(*n)),
        TreeCmd::Tournament { n } => Report::integer(graph::tournament_count(*n)?),
        TreeCmd::Bst { keys } => {
            let t = graph::bst_from_keys(keys)?;
            let order = t.in_order();
            Report::new(format!("{t}\nin order: {}", join(&order, " ")), json!({ "tree": t.to_string(), "in_order": order }))
        }
        TreeCmd::Increasing { perm } => {
            let t = graph::increasing_tree_from_permutation(perm)?;
            let back = graph::permutation_from_increasing_tree(&t)?;
            Report::new(format!("{t}\nread back: {}", join(&back, " ")), json!({ "tree": t.to_string(), "permutation": back }))
        }
        TreeCmd::Check { graph } => {
            let g = read_graph_arg(graph, stdin)?;
            let is_tree = graph::is_tree(&g);
            match graph::spanning_tree(&g) {
                Ok(t) => {
                    let edges: Vec<[usize; 2]> = t.edges().iter().map(|&(u, v)| [u, v]).collect();
                    let text = format!("tree: {is_tree}\nspanning tree: {}", join(edges.iter().map(|[u, v]| format!("{u}-{v}")), " "));
                    Report::new(text, json!({ "tree": is_tree, "spanning_tree": edges }))
                }
                Err(Error::Disconnected) => {
                    Report::new(format!("tree: {is_tree}\nspanning tree: none (disconnected)"), json!({ "tree": is_tree, "spanning_tree": null }))
                }
                Err(e) => return Err(e.into()),
            }
        }
    })
}

fn mst(arg: &str, stdin: &mut dyn Read) -> Out {
    let g = read_weighted_arg(arg, stdin)?;
    let t = graphopt::kruskal_mst(&g)?;
    let mut lines = vec![format!("cost: {}", format_rational(&t.cost))];
    let mut edges = Vec::new();
    for &id in &t.edge_ids {
        let (u, v) = g.graph().edges()[id];
        let w = &g.weights()[id];
        lines.push(format!("{u} {v} {}", format_rational(w)));
        edges.push(json!([u, v, rational(w)]));
    }
    Ok(Report::new(lines.join("\n"), json!({ "cost": rational(&t.cost), "edges": edges })))
}

fn tsp(arg: &str, start: usize, exact: bool, workers: usize, stdin: &mut dyn Read) -> Out {
    let g = read_weighted_arg(arg, stdin)?;
    let tour = if exact { graphopt::brute_force_tour_with_workers(&g, workers)? } else { graphopt::tsp_tree_shortcut(&g, start)? };
    Ok(Report::new(tour.to_string(), json!({ "tour": tour.vertices, "cost": rational(&tour.cost) })))
}

fn matching(g: &Graph, greedy: bool, hall: Option<&str>) -> Out {
    if let Some(left) = hall {
        let left: Vec<usize> = parse_u64_list(left)?.into_iter().map(|v| v as usize).collect();
        return Ok(match graphopt::hall_violator(g, &left)? {
            Some(x) => Report::new(format!("violator: {}", join(&x, " ")), json!({ "violator": x })),
            None => Report::new("none", json!({ "violator": null })),
        });
    }
    let m = if greedy { graphopt::greedy_maximal_matching(g) } else { graphopt::maximum_matching_bipartite(g)? };
    let edges: Vec<[usize; 2]> = m.edges().iter().map(|&(u, v)| [u, v]).collect();
    Ok(Report::new(format!("size: {}\n{m}", m.len()), json!({ "size": m.len(), "edges": edges })))
}

fn ramsey(m0: usize, m1: usize, cap: usize, n: Option<usize>, workers: usize) -> Out {
    match n {
        None => Ok(Report::integer(graphopt::ramsey_number(m0, m1, cap, workers)?)),
        Some(n) => Ok(match graphopt::ramsey_counterexample(n, m0, m1, workers)? {
            None => Report::new("holds", json!({ "holds": true })),
            Some(c) => Report::new(
                format!("fails\nwitness: {c}"),
                json!({ "holds": false, "witness": c.colors() }),
            ),
        }),
    }
}

fn color(g: &Graph, k: Option<usize>, degeneracy: bool) -> Out {
    if degeneracy {
        let c = coloring::degeneracy_coloring(g);
        let (_, d) = coloring::degeneracy_order(g);
        let text = format!("colors: {}\ndegeneracy: {d}\ncoloring: {c}", c.num_colors());
        return Ok(Report::new(text, json!({ "colors": c.num_colors(), "degeneracy": d, "coloring": c.colors() })));
    }
    if let Some(k) = k {
        return Ok(match coloring::is_k_colorable(g, k)? {
            Some(c) => Report::new(format!("coloring: {c}"), json!({ "coloring": c.colors() })),
            None => Report::new("none", json!({ "coloring": null })),
        });
    }
    let chi = coloring::chromatic_number(g)?;
    let c = coloring::is_k_colorable(g, chi)?.expect("chromatic number admits a coloring");
    Ok(Report::new(format!("chromatic number: {chi}\ncoloring: {c}"), json!({ "chromatic_number": chi, "coloring": c.colors() })))
}

fn rational_pair(s: &str) -> Result<(Rational, Rational), CliError> {
    match parse_rational_list(s)?[..] {
        [ref x, ref y] => Ok((x.clone(), y.clone())),
        _ => Err(CliError::Usage(format!("expected x,y, got {s:?}"))),
    }
}

fn circle_color(circles: &str, point: &str) -> Out {
    let circles: Vec<Circle> = circles
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| match parse_rational_list(s)?[..] {
            [ref x, ref y, ref r] => Ok(Circle::new(x.clone(), y.clone(), r.clone())?),
            _ => Err(CliError::Usage(format!("expected x,y,r for a circle, got {s:?}"))),
        })
        .collect::<Result<_, _>>()?;
    let (x, y) = rational_pair(point)?;
    Ok(Report::integer(coloring::circle_region_color(&x, &y, &circles)?))
}

fn chrompoly(g: &Graph, at: Option<u64>) -> Out {
    let p = coloring::chromatic_polynomial(g)?;
    let mut text = format!("{p}\n{}", p.expression());
    let mut result = json!({ "coeffs": ints(p.coeffs()), "expression": p.expression() });
    if let Some(k) = at {
        let v = p.eval_u64(k);
        text.push_str(&format!("\nP({k}) = {v}"));
        result["value"] = int(&v);
        if let Ok(b) = coloring::count_colorings(g, k) {
            text.push_str(&format!("\nbrute force: {b}"));
            result["brute_force"] = int(&b);
        }
    }
    Ok(Report::new(text, result))
}

fn planarity(g: &Graph) -> Out {
    let a = coloring::planar_edge_bound(g);
    let b = coloring::bipartite_planar_bound(g);
    let verdict = if a == PlanarVerdict::ViolatesBound || b == PlanarVerdict::ViolatesBound { "not planar" } else { "inconclusive" };
    let text = format!("edge bound: {a}\nbipartite bound: {b}\nverdict: {verdict}");
    Ok(Report::new(text, json!({ "edge_bound": a.to_string(), "bipartite_bound": b.to_string(), "verdict": verdict })))
}

fn euler(name: Option<&str>, v: Option<u64>, e: Option<u64>, f: Option<u64>) -> Out {
    if let (Some(v), Some(e), Some(f)) = (v, e, f) {
        return Ok(Report::integer(coloring::euler_characteristic(v, e, f)));
    }
    let list: Vec<_> = match name {
        Some(n) => vec![coloring::polyhedron(n).ok_or_else(|| CliError::Usage(format!("unknown polyhedron {n:?}")))?],
        None => POLYHEDRA.to_vec(),
    };
    let lines: Vec<String> = list.iter().map(|p| format!("{p} chi={}", coloring::euler_characteristic(p.v, p.e, p.f))).collect();
    let js: Vec<Value> = list
        .iter()
        .map(|p| json!({ "name": p.name, "v": p.v, "e": p.e, "f": p.f, "chi": coloring::euler_characteristic(p.v, p.e, p.f) as i64 }))
        .collect();
    Ok(Report::new(lines.join("\n"), Value::Array(js)))
}
