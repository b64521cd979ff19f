//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use chromasym::csf::{chromatic_count_check, csf, pendant_twin_sides, triple_deletion_check};
use chromasym::families::{self as fam, FamilyError, FamilyTag, Method};
use chromasym::graphs::path;
use chromasym::partitions::{binomial, epsilon, partitions_up_to};
use chromasym::powerseries::Series;
use chromasym::verify::{self, Suite, VerifyConfig};
use chromasym::{Graph, Partition, SymE};
use num_bigint::BigInt;

struct Outcome {
    problems: Vec<String>,
    note: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            problems: Vec::new(),
            note: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(what());
        }
    }
}

fn criterion(num: u32, title: &str, limit: Option<Duration>, body: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut out = Outcome::new();
    body(&mut out);
    let took = start.elapsed();
    if let Some(limit) = limit {
        out.check(took <= limit, || format!("took {took:.2?}, limit {limit:?}"));
    }
    let ok = out.problems.is_empty();
    println!(
        "criterion {num} [PRIMARY] {title}: {} ({:.2?}{}{})",
        if ok { "PASS" } else { "FAIL" },
        took,
        if out.note.is_empty() { "" } else { "; " },
        out.note
    );
    for p in out.problems.iter().take(10) {
        println!("    {p}");
    }
    if out.problems.len() > 10 {
        println!("    ... and {} more", out.problems.len() - 10);
    }
    ok
}

fn sym(s: &str) -> SymE {
    s.parse().unwrap()
}

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn graph(s: &str) -> Graph {
    s.parse().unwrap()
}

/// The printed expansions, keyed by the graph they describe.
const PRINTED: &[(&str, &str, &str)] = &[
    ("X_P1", "path:1", "e[1]"),
    ("X_P2", "path:2", "2*e[2]"),
    ("X_P3", "path:3", "e[2,1] + 3*e[3]"),
    ("X_C2", "path:2", "2*e[2]"),
    ("X_C3", "cycle:3", "6*e[3]"),
    ("X_P1,v", "twin(path:1,0)", "2*e[2]"),
    ("X_P2,v", "twin(path:2,1)", "6*e[3]"),
    ("X_P3,v", "twin(path:3,2)", "4*e[3,1] + 8*e[4]"),
    ("X_P4,v", "twin(path:4,3)", "8*e[3,2] + 6*e[4,1] + 10*e[5]"),
    ("X_P2,v,w", "twin(twin(path:2,0),1)", "24*e[4]"),
    ("X_P3,v,w", "twin(twin(path:3,0),2)", "4*e[3,2] + 12*e[4,1] + 20*e[5]"),
    ("X_P4,v,w", "twin(twin(path:4,0),3)", "24*e[3,3] + 8*e[4,2] + 16*e[5,1] + 24*e[6]"),
    (
        "X_P5,v,w",
        "twin(twin(path:5,0),4)",
        "16*e[3,3,1] + 68*e[4,3] + 12*e[5,2] + 20*e[6,1] + 28*e[7]",
    ),
    ("X_C1,v", "twin(path:1,0)", "2*e[2]"),
    ("X_C2,v", "twin(path:2,0)", "6*e[3]"),
    ("X_C3,v", "twin(cycle:3,0)", "24*e[4]"),
    ("X_C4,v", "twin(cycle:4,0)", "4*e[3,2] + 6*e[4,1] + 50*e[5]"),
    ("X_A4", "path:4", "2*e[2,2] + 2*e[3,1] + 4*e[4]"),
    ("X_A5", "moose:3", "2*e[3,1,1] + 2*e[3,2] + 10*e[4,1] + 10*e[5]"),
    (
        "X_A6",
        "moose:4",
        "2*e[2,2,2] + 2*e[3,2,1] + 6*e[4,1,1] + 6*e[4,2] + 22*e[5,1] + 18*e[6]",
    ),
];

/// Every family graph with at most nine vertices, with all of its values.
struct SweepRow {
    tag: FamilyTag,
    label: String,
    graph: Graph,
    oracle: SymE,
    methods: Vec<(Method, SymE)>,
}

fn sweep() -> Result<Vec<SweepRow>, String> {
    let mut rows = Vec::new();
    for tag in FamilyTag::ALL {
        for (n, ell) in tag.parameters(9) {
            if tag.vertex_count(n) > 9 {
                continue;
            }
            let Some(g) = tag.graph(n, ell).map_err(|e| e.to_string())? else {
                continue;
            };
            let oracle = csf(&g).map_err(|e| e.to_string())?;
            let mut methods = Vec::new();
            for &m in tag.methods() {
                match fam::compute(tag, n, ell, m) {
                    Ok(x) => methods.push((m, x)),
                    Err(FamilyError::MethodUnavailable { .. }) => {}
                    Err(e) => return Err(format!("{tag}({n},{ell}) {m}: {e}")),
                }
            }
            rows.push(SweepRow {
                tag,
                label: format!("{tag}(n={n}, ell={ell})"),
                graph: g,
                oracle,
                methods,
            });
        }
    }
    Ok(rows)
}

fn main() {
    let mut all = true;

    all &= criterion(1, "epsilon table", Some(Duration::from_secs(1)), |o| {
        let table: [(&str, i64); 21] = [
            ("2", 1),
            ("3", 2),
            ("4", 3),
            ("2,2", 1),
            ("5", 4),
            ("3,2", 4),
            ("6", 5),
            ("4,2", 6),
            ("3,3", 4),
            ("2,2,2", 1),
            ("7", 6),
            ("5,2", 8),
            ("4,3", 12),
            ("3,2,2", 6),
            ("8", 7),
            ("6,2", 10),
            ("5,3", 16),
            ("4,4", 9),
            ("4,2,2", 9),
            ("3,3,2", 12),
            ("2,2,2,2", 1),
        ];
        for (l, v) in table {
            let got = epsilon(&part(l));
            o.check(got == BigInt::from(v), || format!("epsilon({l}) = {got}, expected {v}"));
        }
        // the table lists exactly the 1-free partitions of 2..=8
        let listed = partitions_up_to(8)
            .into_iter()
            .filter(|l| !l.is_empty() && !l.contains(1))
            .count();
        o.check(listed == table.len(), || format!("{listed} 1-free partitions, table has {}", table.len()));
        o.note = format!("{} values", table.len());
    });

    all &= criterion(2, "printed expansions vs oracle", Some(Duration::from_secs(5)), |o| {
        for &(name, spec, value) in PRINTED {
            let g = graph(spec);
            match csf(&g) {
                Ok(x) => {
                    o.check(x == sym(value), || format!("{name}: oracle {x}, printed {value}"));
                    o.check(common::matches_graph(&g, &x), || format!("{name}: oracle disagrees with test-side evaluation"));
                }
                Err(e) => o.check(false, || format!("{name}: {e}")),
            }
        }
        o.note = format!("{} expansions", PRINTED.len());
    });

    let mut rows: Vec<SweepRow> = Vec::new();
    all &= criterion(3, "every method vs oracle on graphs up to 9 vertices", Some(Duration::from_secs(60)), |o| {
        match sweep() {
            Ok(r) => rows = r,
            Err(e) => {
                o.check(false, || e);
                return;
            }
        }
        let mut compared = 0;
        for row in &rows {
            o.check(common::matches_graph(&row.graph, &row.oracle), || {
                format!("{}: oracle disagrees with test-side evaluation", row.label)
            });
            for (m, x) in &row.methods {
                compared += 1;
                o.check(*x == row.oracle, || format!("{} {m}: {x} vs oracle {}", row.label, row.oracle));
            }
        }
        o.note = format!("{} graphs, {compared} method values", rows.len());
    });

    all &= criterion(4, "generating-function identities at N = 12", Some(Duration::from_secs(30)), |o| {
        let report = verify::run_suite(Suite::Series, VerifyConfig { max_n: 8, max_deg: 12 });
        for r in report.failures() {
            o.check(false, || r.to_string());
        }
        o.check(report.records.len() > 200, || format!("only {} series checks", report.records.len()));
        o.note = format!("{} checks", report.records.len());
    });

    all &= criterion(5, "coefficient formulas vs extraction", Some(Duration::from_secs(30)), |o| {
        let report = verify::run_suite(Suite::Families, VerifyConfig { max_n: 8, max_deg: 12 });
        let coeff_cases = report
            .records
            .iter()
            .filter(|r| r.case.contains("coefficient") || r.case.contains("special") || r.case.starts_with("[e_"))
            .count();
        for r in report.failures() {
            o.check(false, || r.to_string());
        }
        // every partition of size <= 9 in each formula's domain
        for size in 1..=9 {
            for lambda in chromasym::partitions_of(size) {
                if size >= 3 {
                    o.check(fam::twin_cycle_coeff(&lambda).is_ok(), || format!("twinned cycle ({lambda}) not computed"));
                }
                if size >= 2 {
                    o.check(fam::twin_path_leaf_coeff(&lambda).is_ok(), || format!("leaf twin ({lambda}) not computed"));
                }
            }
        }
        o.check(coeff_cases > 300, || format!("only {coeff_cases} coefficient checks"));
        o.note = format!("{coeff_cases} coefficient checks");
    });

    all &= criterion(6, "e-positivity", None, |o| {
        let mut count = 0;
        let mut positive = |label: &str, x: &SymE, o: &mut Outcome| {
            count += 1;
            o.check(x.is_e_positive(), || format!("{label}: negative term {:?}", x.negative_witness()));
        };
        for &(name, _, value) in PRINTED {
            positive(name, &sym(value), o);
        }
        for row in &rows {
            if !verify::claims_positivity(row.tag) {
                continue;
            }
            positive(&row.label, &row.oracle, o);
            for (m, x) in &row.methods {
                positive(&format!("{} {m}", row.label), x, o);
            }
        }
        let n = 12;
        let mut gfs: Vec<(String, Series)> = vec![
            ("twinned cycle gf".into(), fam::twin_cycle_gf_half(n)),
            ("both-leaves gf".into(), fam::both_leaves_gf_quarter(n)),
            ("both-leaves gf, path form".into(), fam::both_leaves_gf_quarter_path(n)),
            ("leaf twin gf".into(), fam::leaf_gf_half(n)),
        ];
        for ell in 2..=10 {
            gfs.push((format!("interior gf ell={ell}"), fam::interior_gf_half_positive(ell, n)));
        }
        for (name, s) in &gfs {
            for d in 0..=n {
                positive(&format!("{name} [z^{d}]"), &s.coeff(d), o);
            }
        }
        o.note = format!("{count} values");
    });

    all &= criterion(7, "structural properties", None, |o| {
        let mut count = 0;
        // part-removal ratio, ε recursion and ε of a union
        for l in partitions_up_to(12).into_iter().filter(|l| !l.is_empty()) {
            let e = epsilon(&l);
            let rec: BigInt = l
                .support()
                .into_iter()
                .map(|j| BigInt::from(j - 1) * epsilon(&l.remove_part(j).unwrap()))
                .sum();
            o.check(rec == e, || format!("epsilon recursion at ({l})"));
            if !l.contains(1) {
                for (j, m) in l.multiplicities() {
                    let lhs = BigInt::from(j - 1) * epsilon(&l.remove_part(j).unwrap()) * l.len();
                    o.check(lhs == BigInt::from(m) * &e, || format!("part removal at ({l}), {j}"));
                }
            }
            count += 1;
        }
        let small = partitions_up_to(10);
        for a in &small {
            for b in &small {
                if a.size() + b.size() > 10 {
                    continue;
                }
                let u = a.union(b);
                let lhs = epsilon(a) * epsilon(b) * binomial(u.len(), a.len());
                let rhs = epsilon(&u)
                    * u.multiplicities()
                        .into_iter()
                        .map(|(j, m)| binomial(m, a.multiplicity(j)))
                        .product::<BigInt>();
                o.check(lhs == rhs, || format!("epsilon of union ({a}) ({b})"));
                count += 1;
            }
        }
        for row in &rows {
            for t in row.graph.triangles() {
                o.check(triple_deletion_check(&row.graph, t).unwrap_or(false), || {
                    format!("triple deletion on {} at {t:?}", row.label)
                });
                count += 1;
            }
            o.check(row.oracle.is_homogeneous_of(row.graph.vertex_count()), || {
                format!("{} not homogeneous", row.label)
            });
            if row.graph.vertex_count() <= 8 {
                for k in 1..=5 {
                    o.check(chromatic_count_check(&row.graph, k).unwrap_or(false), || {
                        format!("{} colorings k={k}", row.label)
                    });
                    count += 1;
                }
            }
        }
        for n in 1..=6 {
            let h = path(n);
            for u in 0..n {
                match pendant_twin_sides(&h, u) {
                    Ok((l, r)) => o.check(l == r, || format!("pendant twin on path:{n} at {u}")),
                    Err(e) => o.check(false, || e.to_string()),
                }
                count += 1;
            }
        }
        let pieces: Vec<&SweepRow> = rows.iter().filter(|r| r.graph.vertex_count() <= 5).collect();
        for a in &pieces {
            for b in pieces.iter().take(6) {
                let u = csf(&a.graph.disjoint_union(&b.graph)).unwrap();
                o.check(u == &a.oracle * &b.oracle, || format!("{} + {} not multiplicative", a.label, b.label));
                count += 1;
            }
        }
        o.note = format!("{count} checks");
    });

    if !all {
        std::process::exit(1);
    }
}
