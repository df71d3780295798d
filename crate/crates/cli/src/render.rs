//! Table, TSV and JSON renderings of command results.

use serde::Serialize;
use serde_json::Value;

use regpart::{BigInt, IdentityReport, MapTrace, PairTable, Partition};

/// Exact integers go out as JSON numbers when they fit in i64 and as
/// decimal strings otherwise.
pub fn int(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => Value::from(small),
        Err(_) => Value::from(v.to_string()),
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            let pad = widths[i] - cell.chars().count();
            line.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Tab-separated with a header row and LF line endings.
pub fn tsv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = headers.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

pub fn yes_no(pass: bool) -> String {
    if pass { "yes" } else { "no" }.to_string()
}

#[derive(Serialize)]
struct ReportJson<'a> {
    identity: &'a str,
    param_name: &'a str,
    param: u64,
    rows: Vec<RowJson>,
    summary: Summary,
}

#[derive(Serialize)]
struct RowJson {
    n: u64,
    lhs: Value,
    rhs: Value,
    series: Value,
    pass: bool,
}

#[derive(Serialize)]
struct Summary {
    rows: usize,
    failures: usize,
    pass: bool,
}

pub fn param_name(report: &IdentityReport) -> &'static str {
    use regpart::IdentityTag::*;
    match report.identity {
        T1 | T2 | ParityCor => "ell",
        T3 | Euler | Hickerson => "r",
    }
}

pub fn report_json(report: &IdentityReport) -> String {
    json(&ReportJson {
        identity: report.identity.name(),
        param_name: param_name(report),
        param: report.param,
        rows: report
            .rows
            .iter()
            .map(|r| RowJson {
                n: r.n,
                lhs: int(&r.lhs),
                rhs: int(&r.rhs),
                series: int(&r.series),
                pass: r.pass,
            })
            .collect(),
        summary: Summary {
            rows: report.rows.len(),
            failures: report.failures().count(),
            pass: report.pass,
        },
    })
}

pub fn report_rows(report: &IdentityReport, pass_word: fn(bool) -> String) -> Vec<Vec<String>> {
    report
        .rows
        .iter()
        .map(|r| vec![r.n.to_string(), r.lhs.to_string(), r.rhs.to_string(), pass_word(r.pass)])
        .collect()
}

pub fn report_table(report: &IdentityReport) -> String {
    let mut out = format!(
        "identity {} ({}={}), n = 1..{}\n",
        report.identity.name(),
        param_name(report),
        report.param,
        report.rows.len()
    );
    out.push_str(&table(&["n", "lhs", "rhs", "pass"], &report_rows(report, yes_no)));
    let passed = report.rows.len() - report.failures().count();
    out.push_str(&format!(
        "summary: {passed}/{} rows pass{}\n",
        report.rows.len(),
        if report.pass { "" } else { " (FAILED)" }
    ));
    out
}

#[derive(Serialize)]
struct PairsJson<'a> {
    ell: u64,
    n: u64,
    pairs: &'a [(Partition, Partition)],
    fixed_points: &'a [Partition],
    summary: PairSummary,
}

#[derive(Serialize)]
struct PairSummary {
    pairs: usize,
    fixed_points: usize,
}

pub fn pairs_json(t: &PairTable) -> String {
    json(&PairsJson {
        ell: t.ell,
        n: t.n,
        pairs: &t.pairs,
        fixed_points: &t.fixed_points,
        summary: PairSummary {
            pairs: t.pairs.len(),
            fixed_points: t.fixed_points.len(),
        },
    })
}

pub fn pairs_table(t: &PairTable) -> String {
    let mut out = format!(
        "ψ_{} on the {}-regular partitions of {}: {} pairs, {} fixed points\n",
        t.ell,
        t.ell,
        t.n,
        t.pairs.len(),
        t.fixed_points.len()
    );
    let left: Vec<String> = t.pairs.iter().map(|(a, _)| format!("({a})")).collect();
    let width = left.iter().map(String::len).max().unwrap_or(0);
    for (a, (_, b)) in left.iter().zip(&t.pairs) {
        out.push_str(&format!("{a:<width$}  <->  ({b})\n"));
    }
    if !t.fixed_points.is_empty() {
        out.push_str("fixed points:\n");
        for f in &t.fixed_points {
            out.push_str(&format!("({f})\n"));
        }
    }
    out
}

pub fn pairs_tsv(t: &PairTable) -> String {
    let mut rows: Vec<Vec<String>> = t
        .pairs
        .iter()
        .map(|(a, b)| vec!["pair".into(), a.to_string(), b.to_string()])
        .collect();
    rows.extend(
        t.fixed_points
            .iter()
            .map(|f| vec!["fixed".into(), f.to_string(), String::new()]),
    );
    tsv(&["kind", "first", "second"], &rows)
}

/// Everything the trace command prints, whichever map produced it.
#[derive(Serialize)]
pub struct TraceView {
    pub map: &'static str,
    pub param_name: &'static str,
    pub param: u64,
    pub input: Partition,
    pub output: Partition,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub statistics: Option<Statistics>,
    pub steps: Vec<regpart::Step>,
    pub chain: Vec<Partition>,
}

#[derive(Serialize)]
pub struct Statistics {
    pub e: u64,
    pub t: u64,
}

impl TraceView {
    pub fn from_trace(map: &'static str, param_name: &'static str, param: u64, trace: MapTrace) -> Self {
        Self {
            map,
            param_name,
            param,
            input: trace.initial,
            output: trace.output,
            case: None,
            statistics: None,
            steps: trace.steps,
            chain: trace.rounds,
        }
    }

    fn step_rows(&self) -> Vec<Vec<String>> {
        self.steps
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let action = match s.action {
                    regpart::Action::Merge => "merge",
                    regpart::Action::Split => "split",
                };
                vec![(i + 1).to_string(), action.into(), s.part.to_string(), s.result.to_string()]
            })
            .collect()
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "{}_{}: ({}) -> ({})\n",
            self.map, self.param, self.input, self.output
        );
        if let (Some(case), Some(stats)) = (self.case, &self.statistics) {
            out.push_str(&format!("case: {case} (e = {}, t = {})\n", stats.e, stats.t));
        }
        let chain: Vec<String> = self.chain.iter().map(|p| format!("({p})")).collect();
        out.push_str(&format!("chain: {}\n", chain.join(" -> ")));
        if !self.steps.is_empty() {
            out.push_str("steps:\n");
            out.push_str(&table(&["step", "action", "part", "result"], &self.step_rows()));
        }
        out
    }

    pub fn tsv(&self) -> String {
        tsv(&["step", "action", "part", "result"], &self.step_rows())
    }
}
