//! Self-checks: every identity the library relies on, evaluated on a bounded
//! grid and reported case by case.
//!
//! Suites are independent of each other; cases inside a suite are fanned out
//! over the rayon pool and sorted afterwards, so reports are deterministic.

use std::fmt::{self, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::csf::{almost_triangle_check, chromatic_count_check, csf, pendant_twin_sides, triple_deletion_check};
use crate::families::{self as fam, FamilyError, FamilyTag, Method};
use crate::graphs::{self, Graph};
use crate::partitions::{binomial, epsilon, partitions_of, partitions_up_to, Partition};
use crate::powerseries::{cycle_gf, inverse_d, named, path_gf, z2_e_double_prime, z_e_prime, Named, Series};
use crate::symfun::SymE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Partitions,
    Series,
    Families,
    Oracle,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Partitions, Suite::Series, Suite::Families, Suite::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Partitions => "partitions",
            Suite::Series => "series",
            Suite::Families => "families",
            Suite::Oracle => "oracle",
        }
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `all` or one suite name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection(pub Option<Suite>);

impl Selection {
    pub fn suites(self) -> Vec<Suite> {
        match self.0 {
            Some(s) => vec![s],
            None => Suite::ALL.to_vec(),
        }
    }
}

impl FromStr for Selection {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        if key == "all" {
            return Ok(Selection(None));
        }
        Suite::ALL
            .into_iter()
            .find(|t| t.name() == key)
            .map(|t| Selection(Some(t)))
            .ok_or_else(|| format!("unknown suite {s:?}; expected partitions, series, families, oracle or all"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One line of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: Suite,
    pub case: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl Record {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn compare<T: PartialEq + Display>(suite: Suite, case: impl Into<String>, expected: &T, actual: &T) -> Record {
        Record {
            suite,
            case: case.into(),
            status: if expected == actual { Status::Pass } else { Status::Fail },
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    fn holds(suite: Suite, case: impl Into<String>, ok: bool) -> Record {
        Record::compare(suite, case, &true, &ok)
    }

    fn error(suite: Suite, case: impl Into<String>, expected: &str, err: impl Display) -> Record {
        Record {
            suite,
            case: case.into(),
            status: Status::Fail,
            expected: expected.to_string(),
            actual: format!("error: {err}"),
        }
    }
}

impl Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "ok  " } else { "FAIL" };
        write!(f, "{tag} [{}] {}", self.suite, self.case)?;
        if !self.passed() {
            write!(f, ": expected {}, got {}", self.expected, self.actual)?;
        }
        Ok(())
    }
}

/// Grid bounds. `max_n` bounds family indices (oracle graphs get one more
/// vertex), `max_deg` is the series truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub max_deg: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 8, max_deg: 12 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.records.iter().all(Record::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.passed())
    }

    pub fn count(&self) -> (usize, usize) {
        let bad = self.failures().count();
        (self.records.len() - bad, bad)
    }
}

type Job = Box<dyn Fn() -> Vec<Record> + Send + Sync>;

pub fn run(selection: Selection, cfg: VerifyConfig) -> Report {
    let jobs: Vec<Job> = selection.suites().into_iter().flat_map(|s| jobs(s, cfg)).collect();
    let mut records: Vec<Record> = jobs.par_iter().flat_map_iter(|j| j()).collect();
    records.sort_by(|a, b| (a.suite, &a.case).cmp(&(b.suite, &b.case)));
    Report { records }
}

pub fn run_suite(suite: Suite, cfg: VerifyConfig) -> Report {
    run(Selection(Some(suite)), cfg)
}

fn jobs(suite: Suite, cfg: VerifyConfig) -> Vec<Job> {
    match suite {
        Suite::Partitions => vec![Box::new(epsilon_table), Box::new(move || epsilon_identities(cfg))],
        Suite::Series => vec![
            Box::new(move || series_basics(cfg.max_deg)),
            Box::new(move || series_families(cfg.max_deg)),
            Box::new(move || series_positivity(cfg.max_deg)),
        ],
        Suite::Families => {
            let mut v: Vec<Job> = FamilyTag::ALL
                .into_iter()
                .map(|t| Box::new(move || method_agreement(t, cfg.max_n)) as Job)
                .collect();
            v.push(Box::new(move || coefficient_formulas(cfg.max_n + 1, cfg.max_deg)));
            v.push(Box::new(move || closed_special_values(cfg.max_n.max(10))));
            v
        }
        Suite::Oracle => {
            let mut v: Vec<Job> = FamilyTag::ALL
                .into_iter()
                .map(|t| Box::new(move || oracle_sweep(t, cfg.max_n + 1)) as Job)
                .collect();
            v.push(Box::new(fixture_records));
            v.push(Box::new(move || structure(cfg.max_n + 1)));
            v
        }
    }
}

fn sym(s: &str) -> SymE {
    s.parse().expect("literal expansion")
}

fn part(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

// ---------------------------------------------------------------- partitions

/// Printed values of ε for every partition of 2..=8 without a part 1.
pub const EPSILON_TABLE: [(&str, i64); 21] = [
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

fn epsilon_table() -> Vec<Record> {
    EPSILON_TABLE
        .iter()
        .map(|&(l, v)| Record::compare(Suite::Partitions, format!("epsilon({l})"), &BigInt::from(v), &epsilon(&part(l))))
        .collect()
}

fn epsilon_identities(cfg: VerifyConfig) -> Vec<Record> {
    let s = Suite::Partitions;
    let mut out = Vec::new();
    for lambda in partitions_up_to(cfg.max_deg) {
        if lambda.is_empty() {
            continue;
        }
        let e = epsilon(&lambda);
        out.push(Record::holds(
            s,
            format!("epsilon({lambda}) vanishes iff a part is 1"),
            (e == BigInt::from(0)) == lambda.contains(1),
        ));
        let sum: BigInt = lambda
            .support()
            .into_iter()
            .map(|j| BigInt::from(j - 1) * epsilon(&lambda.remove_part(j).unwrap()))
            .sum();
        out.push(Record::compare(s, format!("epsilon({lambda}) = sum (j-1) epsilon(lambda-j)"), &e, &sum));
        if !lambda.contains(1) {
            for (j, m) in lambda.multiplicities() {
                let lhs = BigInt::from(j - 1) * epsilon(&lambda.remove_part(j).unwrap()) * lambda.len();
                let rhs = BigInt::from(m) * &e;
                out.push(Record::compare(s, format!("part-removal ratio ({lambda}, {j})"), &rhs, &lhs));
            }
        }
    }
    let small = partitions_up_to(cfg.max_deg.min(10));
    for lambda in &small {
        for mu in &small {
            if lambda.size() + mu.size() > cfg.max_deg.min(10) {
                continue;
            }
            let nu = lambda.union(mu);
            let lhs = epsilon(lambda) * epsilon(mu) * binomial(nu.len(), lambda.len());
            let rhs = nu
                .multiplicities()
                .into_iter()
                .map(|(j, m)| binomial(m, lambda.multiplicity(j)))
                .product::<BigInt>()
                * epsilon(&nu);
            out.push(Record::compare(s, format!("epsilon of union ({lambda}) ({mu})"), &rhs, &lhs));
        }
    }
    out
}

// ---------------------------------------------------------------- series

fn series_eq(case: impl Into<String>, lhs: &Series, rhs: &Series) -> Record {
    let case = case.into();
    if lhs == rhs {
        return Record::holds(Suite::Series, case, true);
    }
    let d = (0..=lhs.trunc().min(rhs.trunc()))
        .find(|&d| lhs.coeff(d) != rhs.coeff(d))
        .unwrap_or(0);
    Record {
        suite: Suite::Series,
        case: format!("{case} (first difference at z^{d})"),
        status: Status::Fail,
        expected: lhs.coeff(d).to_string(),
        actual: rhs.coeff(d).to_string(),
    }
}

fn mono(c: SymE, d: usize, n: usize) -> Series {
    Series::monomial(c, d, n)
}

fn series_basics(n: usize) -> Vec<Record> {
    let inv = inverse_d(n);
    let e = named(Named::E, n);
    let one = Series::one(n);
    let e1z = mono(SymE::e(1), 1, n);
    let e2z2 = mono(SymE::e(2), 2, n);
    let zep = z_e_prime(n);
    let z2epp = z2_e_double_prime(n);
    let d = named(Named::D, n);
    let mut out = vec![
        series_eq("D * (1/D) = 1", &(&d * &inv), &one),
        series_eq("path gf = E/D", &path_gf(n), &(&e * &inv)),
        series_eq("cycle gf = z^2 E''/D", &cycle_gf(n), &(&z2epp * &inv)),
        series_eq("path gf split form", &path_gf(n), &fam::path_gf_split(n)),
        series_eq(
            "z^2E'' - zE' = -e1 z + F1",
            &(&z2epp - &zep),
            &(&named(Named::F1, n) - &e1z),
        ),
        series_eq(
            "2z^2E'' - 3zE' = -3e1 z - 2e2 z^2 + F2",
            &(&z2epp.scale(2) - &zep.scale(3)),
            &(&(&named(Named::F2, n) - &e1z.scale(3)) - &e2z2.scale(2)),
        ),
        series_eq(
            "z^2E'' - 3zE' + 3E = 3 - e2 z^2 + F3",
            &(&(&z2epp - &zep.scale(3)) + &e.scale(3)),
            &(&(&one.scale(3) - &e2z2) + &named(Named::F3, n)),
        ),
        series_eq(
            "path gf - 1 - e1 z = (K + e1 z G)/D",
            &(&(&path_gf(n) - &one) - &e1z),
            &(&(&named(Named::K, n) + &(&e1z * &named(Named::G, n))) * &inv),
        ),
        series_eq(
            "(1 + e1 z) cycle gf - path gf + 1 + e1 z as a fraction over D",
            &(&(&(&(&one + &e1z) * &cycle_gf(n)) - &path_gf(n)) + &(&one + &e1z)),
            &(&(&(&(&one + &e1z) * &named(Named::F1, n)) + &(&e1z * &(&(&e - &one) - &e1z))) * &inv),
        ),
    ];
    for k in 1..=n {
        let xp = path_gf(n).coeff(k);
        let xc = cycle_gf(n).coeff(k);
        out.push(Record::compare(Suite::Series, format!("[z^{k}] path gf = X_P{k}"), &fam::path_seq(k), &xp));
        out.push(Record::compare(Suite::Series, format!("[z^{k}] cycle gf = X_C{k}"), &fam::cycle_seq(k), &xc));
    }
    for lambda in partitions_up_to(n.min(10)) {
        let c = inv.coeff(lambda.size()).coefficient(&lambda);
        out.push(Record::compare(Suite::Series, format!("[e_({lambda})] 1/D = epsilon"), &epsilon(&lambda), &c));
    }
    for k in 2..=4u32 {
        let le = named(Named::GLeq(k), n);
        let ge = named(Named::GGeq(k + 1), n);
        out.push(series_eq(
            format!("(1 - G<={k})/D = 1 + G>={}/D", k + 1),
            &(&(&one - &le) * &inv),
            &(&one + &(&ge * &inv)),
        ));
        out.push(series_eq(
            format!("path gf (1 - G<={k}) = E + path gf G>={}", k + 1),
            &(&path_gf(n) * &(&one - &le)),
            &(&e + &(&path_gf(n) * &ge)),
        ));
    }
    out
}

fn series_families(n: usize) -> Vec<Record> {
    let mut out = vec![
        series_eq(
            "leaf twin gf: half form x2 = from path gf",
            &fam::leaf_gf_half(n).scale(2),
            &fam::leaf_gf_from_path(n),
        ),
        series_eq(
            "leaf twin gf: positive form = half form",
            &fam::leaf_gf_half_path(n),
            &fam::leaf_gf_half(n),
        ),
        series_eq(
            "both-leaves gf: two expansions agree",
            &fam::both_leaves_gf_quarter(n),
            &fam::both_leaves_gf_quarter_path(n),
        ),
        // the low-order correction enters with a minus sign
        series_eq(
            "both-leaves gf: 4Q - 2 alpha = 2(1 - e2 z^2) leaf gf",
            &(&fam::both_leaves_gf_quarter(n).scale(4) - &fam::alpha(n).scale(2)),
            &(&(&Series::one(n) - &mono(SymE::e(2), 2, n)) * &fam::leaf_gf_from_path(n)).scale(2),
        ),
        series_eq(
            "twinned cycle gf: rewritten half = half",
            &fam::twin_cycle_gf_half_rewritten(n),
            &fam::twin_cycle_gf_half(n),
        ),
        series_eq(
            "twinned cycle gf: from cycle and path gfs = 2 half",
            &fam::twin_cycle_gf_from_cycles(n),
            &fam::twin_cycle_gf_half(n).scale(2),
        ),
    ];
    for k in 3..n {
        if k + 2 <= n {
            out.push(Record::compare(
                Suite::Series,
                format!("[z^{}] 4Q = X_P{k},v,w", k + 2),
                &fam::twin_path_both(k, Method::Identity).unwrap(),
                &fam::both_leaves_gf_quarter(n).coeff(k + 2).scale(4),
            ));
        }
        if k < n {
            out.push(Record::compare(
                Suite::Series,
                format!("[z^{}] twinned cycle gf = X_C{k},v", k + 1),
                &fam::twin_cycle(k, Method::Identity).unwrap(),
                &fam::twin_cycle_gf_from_cycles(n).coeff(k + 1),
            ));
        }
    }
    for ell in 2..=8usize {
        let m = ell + 2;
        out.push(series_eq(
            format!("f_{ell}: definition = expanded form (N = {m})"),
            &fam::f_ell(ell, m),
            &fam::f_ell_expanded(ell, m),
        ));
        out.push(series_eq(
            format!("f_{ell}: definition = expanded form (N = {n})"),
            &fam::f_ell(ell, n),
            &fam::f_ell_expanded(ell, n),
        ));
        out.push(series_eq(
            format!("path gf f_{ell} = expanded product"),
            &(&path_gf(n) * &fam::f_ell(ell, n)),
            &fam::interior_path_times_f_ell(ell, n),
        ));
        out.push(series_eq(
            format!("interior gf (ell = {ell}) = 2x positive expansion"),
            &fam::interior_gf(ell, n),
            &fam::interior_gf_half_positive(ell, n).scale(2),
        ));
        let prod = (&path_gf(n) * &fam::f_ell(ell, n)).scale(2);
        let g = fam::g_ell(ell, n).scale(-2);
        for d in 0..=(ell + 1).min(n) {
            out.push(Record::compare(
                Suite::Series,
                format!("[z^{d}] 2 path gf f_{ell} = -2 g_{ell}"),
                &g.coeff(d),
                &prod.coeff(d),
            ));
        }
        for k in ell + 1..n {
            out.push(Record::compare(
                Suite::Series,
                format!("[z^{}] interior gf = X_P{k},{ell}", k + 1),
                &fam::twin_path_interior(k, ell, Method::Identity).unwrap(),
                &fam::interior_gf(ell, n).coeff(k + 1),
            ));
        }
    }
    out
}

fn series_positivity(n: usize) -> Vec<Record> {
    let mut named_series: Vec<(String, Series)> = vec![
        ("twinned cycle half gf".into(), fam::twin_cycle_gf_half(n)),
        ("both-leaves quarter gf".into(), fam::both_leaves_gf_quarter(n)),
        ("both-leaves quarter gf, path form".into(), fam::both_leaves_gf_quarter_path(n)),
        ("leaf twin half gf".into(), fam::leaf_gf_half(n)),
        ("leaf twin half gf, path form".into(), fam::leaf_gf_half_path(n)),
    ];
    for ell in 2..=8 {
        named_series.push((format!("interior positive gf (ell = {ell})"), fam::interior_gf_half_positive(ell, n)));
    }
    let mut out = Vec::new();
    for (name, s) in named_series {
        for d in 0..=n {
            let c = s.coeff(d);
            let case = format!("{name}: [z^{d}] e-positive");
            out.push(match c.negative_witness() {
                None => Record::holds(Suite::Series, case, true),
                Some((l, v)) => Record::compare(Suite::Series, case, &"e-positive".to_string(), &format!("e_({l}) has {v}")),
            });
        }
    }
    out
}

// ---------------------------------------------------------------- families

fn method_agreement(tag: FamilyTag, max_n: usize) -> Vec<Record> {
    let s = Suite::Families;
    let mut out = Vec::new();
    for (n, ell) in tag.parameters(max_n) {
        let label = label(tag, n, ell);
        let mut reference: Option<(Method, SymE)> = None;
        for &m in tag.methods() {
            match fam::compute(tag, n, ell, m) {
                Ok(x) => match &reference {
                    None => {
                        if claims_positivity(tag) {
                            out.push(Record::holds(s, format!("{label} e-positive"), x.is_e_positive()));
                        }
                        reference = Some((m, x));
                    }
                    Some((m0, x0)) => out.push(Record::compare(s, format!("{label}: {m} = {m0}"), x0, &x)),
                },
                Err(FamilyError::MethodUnavailable { .. }) => {}
                Err(e) => out.push(Record::error(s, format!("{label}: {m}"), "a value", e)),
            }
        }
    }
    out
}

/// Flagpoles and the other intermediate graphs can contain a claw, so only
/// the main families are expected to be e-positive.
pub fn claims_positivity(tag: FamilyTag) -> bool {
    !matches!(
        tag,
        FamilyTag::Flagpole | FamilyTag::TrianglePath | FamilyTag::DGraph | FamilyTag::Tadpole
    )
}

fn label(tag: FamilyTag, n: usize, ell: usize) -> String {
    if tag.takes_ell() {
        format!("{tag}({n},{ell})")
    } else {
        format!("{tag}({n})")
    }
}

fn coefficient_formulas(max_size: usize, trunc: usize) -> Vec<Record> {
    let s = Suite::Families;
    let trunc = trunc.max(max_size + 1);
    let mut out = Vec::new();
    let leaf = fam::leaf_gf_half(trunc).scale(2);
    let both = fam::both_leaves_gf_quarter(trunc).scale(4);
    let cyc = fam::twin_cycle_gf_half(trunc);
    let (pg, cg) = (path_gf(trunc), cycle_gf(trunc));
    let mut push = |case: String, formula: Result<BigInt, FamilyError>, gf: BigInt| match formula {
        Ok(c) => out.push(Record::compare(s, case, &gf, &c)),
        Err(FamilyError::NotCovered(_)) => {}
        Err(e) => out.push(Record::error(s, case, &gf.to_string(), e)),
    };
    for size in 1..=max_size {
        for lambda in partitions_of(size) {
            let at = |x: &Series| x.coeff(size).coefficient(&lambda);
            push(format!("path coefficient ({lambda})"), fam::path_cycle_coeff(FamilyTag::Path, &lambda), at(&pg));
            push(format!("cycle coefficient ({lambda})"), fam::path_cycle_coeff(FamilyTag::Cycle, &lambda), at(&cg));
            if size >= 2 {
                push(format!("leaf twin coefficient ({lambda})"), fam::twin_path_leaf_coeff(&lambda), at(&leaf));
            }
            if size >= 5 {
                push(format!("both-leaves coefficient ({lambda})"), fam::twin_path_both_coeff(&lambda), at(&both));
            }
            if size >= 4 {
                push(format!("twinned cycle coefficient ({lambda})"), fam::twin_cycle_coeff(&lambda), at(&cyc));
            } else if size == 3 {
                // below the range of the series: half of X_{C_2,v} = 3e_3
                let half = fam::twin_cycle(2, Method::Identity).unwrap().coefficient(&lambda) / 2;
                push(format!("twinned cycle coefficient ({lambda})"), fam::twin_cycle_coeff(&lambda), half);
            }
        }
    }
    out
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// The closed special values of the leaf and both-leaves coefficients, and
/// the path/cycle coefficient list, on a grid up to `max`.
fn closed_special_values(max: usize) -> Vec<Record> {
    let s = Suite::Families;
    let mut out: Vec<Record> = fam::coeff_specials_check(max, max)
        .into_iter()
        .map(|c| Record::compare(s, c.case, &c.expected, &c.actual))
        .collect();
    let mut leaf = |l: Partition, v: i64, tag: &str| match fam::twin_path_leaf_coeff(&l) {
        Ok(c) => out.push(Record::compare(s, format!("leaf twin special {tag} ({l})"), &int(v), &c)),
        Err(e) => out.push(Record::error(s, format!("leaf twin special {tag} ({l})"), &v.to_string(), e)),
    };
    let m = max as u32;
    leaf(part("2"), 2, "(a)");
    for k in 3..=m {
        leaf(Partition::single(k), 2 * i64::from(k), "(a)");
    }
    for k in 4..=m {
        leaf(Partition::from_parts(vec![k - 1, 1]), 2 * (i64::from(k) - 2), "(b)");
    }
    for k in 5..=m {
        leaf(Partition::from_parts(vec![k - 2, 2]), 4 * (i64::from(k) - 3), "(c)");
    }
    for i in 3..=m {
        for j in 3..=i {
            if i + j > m {
                continue;
            }
            let (a, b) = (i64::from(i), i64::from(j));
            let v = if i == j { 2 * a * (a - 1) } else { 2 * (2 * a * b - a - b) };
            leaf(Partition::from_parts(vec![i, j]), v, if i == j { "(e)" } else { "(d)" });
        }
    }
    for k in 2..=(m.saturating_sub(3) / 2) as usize {
        let twos = Partition::repeated(2, k);
        leaf(twos.with_part(3), 8, "(f)");
        if 3 + 2 * k < max {
            leaf(twos.with_part(3).with_part(1), 4, "(f)");
        }
    }
    for k in 1..=max / 2 {
        leaf(Partition::repeated(2, k), if k == 1 { 2 } else { 0 }, "(h)");
        if 2 * k < max && k >= 2 {
            leaf(Partition::repeated(2, k).with_part(1), 0, "(g)");
        }
    }
    // every both-leaves case occurs in the grid
    let mut both = |l: &str, v: i64| match fam::twin_path_both_coeff(&part(l)) {
        Ok(c) => out.push(Record::compare(s, format!("both-leaves special ({l})"), &int(v), &c)),
        Err(e) => out.push(Record::error(s, format!("both-leaves special ({l})"), &v.to_string(), e)),
    };
    both("5", 20);
    both("3,2", 4);
    both("4,1", 12);
    both("3,3", 24);
    both("4,3", 4 * 2 * 4 + 4 * 3 * 3);
    both("3,3,1", 16);
    both("4,3,1", 48);
    both("3,2,1", 0);
    both("3,3,2", 32);
    both("3,3,2,1", 16);
    both("3,3,2,2", 32);
    out
}

// ---------------------------------------------------------------- oracle

/// Every expansion printed alongside the closed forms, with the graph it belongs to.
pub fn fixtures() -> Vec<(&'static str, &'static str, &'static str)> {
    vec![
        ("X_P1", "path:1", "e[1]"),
        ("X_P2", "path:2", "2*e[2]"),
        ("X_P3", "path:3", "e[2,1] + 3*e[3]"),
        ("X_C2", "path:2", "2*e[2]"),
        ("X_C3", "cycle:3", "6*e[3]"),
        ("X_P1,v", "twin-path-leaf:1", "2*e[2]"),
        ("X_P2,v", "twin-path-leaf:2", "6*e[3]"),
        ("X_P3,v", "twin-path-leaf:3", "4*e[3,1] + 8*e[4]"),
        ("X_P4,v", "twin-path-leaf:4", "8*e[3,2] + 6*e[4,1] + 10*e[5]"),
        ("X_P2,v,w", "twin-path-both:2", "24*e[4]"),
        ("X_P3,v,w", "twin-path-both:3", "4*e[3,2] + 12*e[4,1] + 20*e[5]"),
        ("X_P4,v,w", "twin-path-both:4", "24*e[3,3] + 8*e[4,2] + 16*e[5,1] + 24*e[6]"),
        (
            "X_P5,v,w",
            "twin-path-both:5",
            "16*e[3,3,1] + 68*e[4,3] + 12*e[5,2] + 20*e[6,1] + 28*e[7]",
        ),
        ("X_C1,v", "twin(path:1,0)", "2*e[2]"),
        ("X_C2,v", "twin(path:2,0)", "6*e[3]"),
        ("X_C3,v", "twin-cycle:3", "24*e[4]"),
        ("X_C4,v", "twin-cycle:4", "4*e[3,2] + 6*e[4,1] + 50*e[5]"),
        ("X_A4", "moose:2", "2*e[2,2] + 2*e[3,1] + 4*e[4]"),
        ("X_A5", "moose:3", "2*e[3,1,1] + 2*e[3,2] + 10*e[4,1] + 10*e[5]"),
        (
            "X_A6",
            "moose:4",
            "2*e[2,2,2] + 2*e[3,2,1] + 6*e[4,1,1] + 6*e[4,2] + 22*e[5,1] + 18*e[6]",
        ),
    ]
}

fn fixture_records() -> Vec<Record> {
    fixtures()
        .into_iter()
        .map(|(name, spec, value)| {
            let case = format!("printed {name} = oracle on {spec}");
            match spec.parse::<Graph>().map_err(|e| e.to_string()).and_then(|g| csf(&g).map_err(|e| e.to_string())) {
                Ok(x) => Record::compare(Suite::Oracle, case, &sym(value), &x),
                Err(e) => Record::error(Suite::Oracle, case, value, e),
            }
        })
        .collect()
}

fn oracle_sweep(tag: FamilyTag, max_vertices: usize) -> Vec<Record> {
    let s = Suite::Oracle;
    let mut out = Vec::new();
    for (n, ell) in tag.parameters(max_vertices) {
        if tag.vertex_count(n) > max_vertices {
            continue;
        }
        let label = label(tag, n, ell);
        let g = match tag.graph(n, ell) {
            Ok(Some(g)) => g,
            Ok(None) => continue,
            Err(e) => {
                out.push(Record::error(s, label, "a graph", e));
                continue;
            }
        };
        let truth = match csf(&g) {
            Ok(x) => x,
            Err(e) => {
                out.push(Record::error(s, label, "an oracle value", e));
                continue;
            }
        };
        if claims_positivity(tag) {
            out.push(Record::holds(s, format!("{label} oracle e-positive"), truth.is_e_positive()));
        }
        for &m in tag.methods() {
            match fam::compute(tag, n, ell, m) {
                Ok(x) => out.push(Record::compare(s, format!("{label}: {m} = oracle"), &truth, &x)),
                Err(FamilyError::MethodUnavailable { .. }) => {}
                Err(e) => out.push(Record::error(s, format!("{label}: {m}"), &truth.to_string(), e)),
            }
        }
        // the alternative closed forms that are not methods in their own right
        let extra: Vec<(&str, Result<SymE, FamilyError>)> = match tag {
            FamilyTag::TwinPathLeaf if n >= 2 => vec![("expansion", fam::twin_path_leaf_expansion(n))],
            FamilyTag::TwinPathBoth if n >= 3 => vec![("from leaf twins", fam::both_leaves_from_leaf_twins(n))],
            FamilyTag::TwinPathInterior => vec![("via triangles", fam::twin_path_interior_via_triangles(n, ell))],
            FamilyTag::TrianglePath => vec![("right shift", fam::triangle_path_right_shift(n, ell))],
            _ => vec![],
        };
        for (name, v) in extra {
            match v {
                Ok(x) => out.push(Record::compare(s, format!("{label}: {name} = oracle"), &truth, &x)),
                Err(e) => out.push(Record::error(s, format!("{label}: {name}"), &truth.to_string(), e)),
            }
        }
    }
    out
}

/// Every family graph with at most `max_vertices` vertices.
pub fn family_graphs(max_vertices: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for tag in FamilyTag::ALL {
        for (n, ell) in tag.parameters(max_vertices) {
            if tag.vertex_count(n) > max_vertices {
                continue;
            }
            if let Ok(Some(g)) = tag.graph(n, ell) {
                out.push((label(tag, n, ell), g));
            }
        }
    }
    out
}

fn structure(max_vertices: usize) -> Vec<Record> {
    let s = Suite::Oracle;
    let mut out = Vec::new();
    let graphs = family_graphs(max_vertices);
    for (name, g) in &graphs {
        for t in g.triangles() {
            let case = format!("triple deletion on {name} at {t:?}");
            out.push(match triple_deletion_check(g, t) {
                Ok(ok) => Record::holds(s, case, ok),
                Err(e) => Record::error(s, case, "true", e),
            });
        }
        if let Ok(x) = csf(g) {
            out.push(Record::holds(
                s,
                format!("{name} homogeneous of degree {}", g.vertex_count()),
                x.is_homogeneous_of(g.vertex_count()),
            ));
        }
        if g.vertex_count() <= 8 {
            for k in 1..=5 {
                let case = format!("{name}: X_G(1^{k}) counts proper {k}-colorings");
                out.push(match chromatic_count_check(g, k) {
                    Ok(ok) => Record::holds(s, case, ok),
                    Err(e) => Record::error(s, case, "true", e),
                });
            }
        }
    }
    // almost-triangles: consecutive path vertices with a missing chord
    for n in 3..=max_vertices.min(8) {
        let p = graphs::path(n);
        for v in 1..n - 1 {
            let case = format!("almost-triangle on path:{n} at {v}");
            out.push(match almost_triangle_check(&p, v, v - 1, v + 1) {
                Ok(ok) => Record::holds(s, case, ok),
                Err(e) => Record::error(s, case, "true", e),
            });
        }
    }
    for n in 1..=6 {
        let h = graphs::path(n);
        for u in [0, n - 1] {
            let case = format!("pendant twin on path:{n} at {u}");
            out.push(match pendant_twin_sides(&h, u) {
                Ok((l, r)) => Record::compare(s, case, &r, &l),
                Err(e) => Record::error(s, case, "equal sides", e),
            });
            if n == 1 {
                break;
            }
        }
    }
    let small: Vec<&(String, Graph)> = graphs.iter().filter(|(_, g)| g.vertex_count() <= 5).collect();
    for (i, (na, a)) in small.iter().enumerate() {
        for (nb, b) in small.iter().skip(i).take(4) {
            let case = format!("X of {na} + {nb} is the product");
            let got = csf(&a.disjoint_union(b)).and_then(|u| Ok((u, &csf(a)? * &csf(b)?)));
            out.push(match got {
                Ok((u, prod)) => Record::compare(s, case, &prod, &u),
                Err(e) => Record::error(s, case, "the product", e),
            });
        }
    }
    out
}
