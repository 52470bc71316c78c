//! Integer-program export of the strong and doubly resolving formulations
//! in LP file format, a reader for the same dialect, and a small exhaustive
//! 0/1 evaluator for validating models without an external solver.
//!
//! Variables are `y_<i>` (vertex `i` chosen, 1-indexed) and `x_<i>_<j>`
//! (both `i < j` chosen). Pairs are always listed in colex order.

use std::collections::{HashMap, HashSet};

use crate::error::{parse_err, Error, Result};
use crate::graph::DistanceMatrix;
use crate::resolving::{build_constraint_system, colex_pairs, CoverMode};

/// Longest line `write_lp` emits.
pub const MAX_LINE_LEN: usize = 255;

/// Largest model [`solve_exhaustive`] accepts.
pub const MAX_EXHAUSTIVE_VARS: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Ge,
    Le,
}

impl Sense {
    fn as_str(self) -> &'static str {
        match self {
            Sense::Ge => ">=",
            Sense::Le => "<=",
        }
    }
}

pub type Term = (i64, String);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub terms: Vec<Term>,
    pub sense: Sense,
    pub rhs: i64,
}

impl Constraint {
    pub fn new(name: impl Into<String>, terms: Vec<Term>, sense: Sense, rhs: i64) -> Self {
        Constraint {
            name: name.into(),
            terms,
            sense,
            rhs,
        }
    }

    pub fn is_satisfied(&self, value: &dyn Fn(&str) -> bool) -> bool {
        let lhs: i64 = self.terms.iter().map(|(c, v)| if value(v) { *c } else { 0 }).sum();
        match self.sense {
            Sense::Ge => lhs >= self.rhs,
            Sense::Le => lhs <= self.rhs,
        }
    }
}

/// A minimization model over binary variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IlpModel {
    objective: Vec<Term>,
    constraints: Vec<Constraint>,
    binaries: Vec<String>,
}

/// Parsed form of a variable name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    Vertex(usize),
    Pair(usize, usize),
}

impl Variable {
    /// Accepts `y_<i>` and `x_<i>_<j>` with `1 ≤ i < j`.
    pub fn parse(name: &str) -> Option<Variable> {
        fn index(s: &str) -> Option<usize> {
            if s.is_empty() || s.starts_with('0') || !s.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            s.parse().ok()
        }
        if let Some(rest) = name.strip_prefix("y_") {
            return index(rest).map(Variable::Vertex);
        }
        let (i, j) = name.strip_prefix("x_")?.split_once('_')?;
        let (i, j) = (index(i)?, index(j)?);
        (i < j).then_some(Variable::Pair(i, j))
    }

    pub fn vertex(i: usize) -> String {
        format!("y_{}", i + 1)
    }

    pub fn pair(i: usize, j: usize) -> String {
        format!("x_{}_{}", i + 1, j + 1)
    }
}

fn valid_row_name(name: &str) -> bool {
    !name.is_empty()
        && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
        && !name.as_bytes()[0].is_ascii_digit()
}

impl IlpModel {
    /// Validates and assembles a model. Rejects an empty constraint list,
    /// empty or duplicate rows, duplicate binaries, malformed names and
    /// variables not declared binary.
    pub fn new(objective: Vec<Term>, constraints: Vec<Constraint>, binaries: Vec<String>) -> Result<Self> {
        if constraints.is_empty() {
            return Err(Error::InvalidModel("model has no constraints".into()));
        }
        let mut declared = HashSet::new();
        for b in &binaries {
            if Variable::parse(b).is_none() {
                return Err(Error::InvalidModel(format!("malformed variable name `{b}`")));
            }
            if !declared.insert(b.as_str()) {
                return Err(Error::InvalidModel(format!("variable `{b}` declared twice")));
            }
        }
        let check_terms = |row: &str, terms: &[Term]| -> Result<()> {
            for (_, v) in terms {
                if !declared.contains(v.as_str()) {
                    return Err(Error::InvalidModel(format!("`{row}` uses undeclared variable `{v}`")));
                }
            }
            Ok(())
        };
        check_terms("obj", &objective)?;
        let mut names = HashSet::new();
        for c in &constraints {
            if !valid_row_name(&c.name) || c.name == "obj" {
                return Err(Error::InvalidModel(format!("invalid constraint name `{}`", c.name)));
            }
            if !names.insert(c.name.as_str()) {
                return Err(Error::InvalidModel(format!("duplicate constraint name `{}`", c.name)));
            }
            if c.terms.is_empty() {
                return Err(Error::InvalidModel(format!("constraint `{}` has no terms", c.name)));
            }
            check_terms(&c.name, &c.terms)?;
        }
        Ok(IlpModel {
            objective,
            constraints,
            binaries,
        })
    }

    pub fn objective(&self) -> &[Term] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn binaries(&self) -> &[String] {
        &self.binaries
    }

    pub fn constraint(&self, name: &str) -> Option<&Constraint> {
        self.constraints.iter().find(|c| c.name == name)
    }
}

fn cover_name(u: usize, v: usize) -> String {
    format!("cover_{}_{}", u + 1, v + 1)
}

/// One `cover_<u>_<v>` row per vertex pair: some chosen vertex must
/// strongly resolve the pair.
pub fn build_strong_ilp(dm: &DistanceMatrix) -> Result<IlpModel> {
    let n = dm.n();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, actual: n });
    }
    let cs = build_constraint_system(dm, CoverMode::Strong)?;
    let mut constraints = Vec::with_capacity(cs.items.len());
    for (&(u, v), cov) in cs.items.iter().zip(&cs.coverers) {
        if cov.is_empty() {
            return Err(Error::InvalidModel(format!("pair ({}, {}) has no resolver", u + 1, v + 1)));
        }
        let terms = cov.iter().map(|i| (1, Variable::vertex(i))).collect();
        constraints.push(Constraint::new(cover_name(u, v), terms, Sense::Ge, 1));
    }
    let binaries: Vec<String> = (0..n).map(Variable::vertex).collect();
    let objective = binaries.iter().map(|b| (1, b.clone())).collect();
    IlpModel::new(objective, constraints, binaries)
}

/// Cover rows over pair variables, then for each pair `i < j` the rows
/// `2 x_ij − y_i − y_j ≤ 0` and `x_ij − y_i − y_j ≥ −1` forcing
/// `x_ij = y_i ∧ y_j`.
pub fn build_doubly_ilp(dm: &DistanceMatrix) -> Result<IlpModel> {
    let n = dm.n();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, actual: n });
    }
    let cs = build_constraint_system(dm, CoverMode::Doubly)?;
    let pairs: Vec<(usize, usize)> = colex_pairs(n).collect();
    let mut constraints = Vec::with_capacity(3 * pairs.len());
    for (&(u, v), cov) in cs.items.iter().zip(&cs.coverers) {
        if cov.is_empty() {
            return Err(Error::InvalidModel(format!("pair ({}, {}) has no resolver", u + 1, v + 1)));
        }
        // coverer bits are colex pair ranks
        let terms = cov
            .iter()
            .map(|r| {
                let (i, j) = pairs[r];
                (1, Variable::pair(i, j))
            })
            .collect();
        constraints.push(Constraint::new(cover_name(u, v), terms, Sense::Ge, 1));
    }
    for &(i, j) in &pairs {
        let (x, yi, yj) = (Variable::pair(i, j), Variable::vertex(i), Variable::vertex(j));
        constraints.push(Constraint::new(
            format!("link_ub_{}_{}", i + 1, j + 1),
            vec![(2, x.clone()), (-1, yi.clone()), (-1, yj.clone())],
            Sense::Le,
            0,
        ));
        constraints.push(Constraint::new(
            format!("link_lb_{}_{}", i + 1, j + 1),
            vec![(1, x), (-1, yi), (-1, yj)],
            Sense::Ge,
            -1,
        ));
    }
    let mut binaries: Vec<String> = (0..n).map(Variable::vertex).collect();
    let objective = binaries.iter().map(|b| (1, b.clone())).collect();
    binaries.extend(pairs.iter().map(|&(i, j)| Variable::pair(i, j)));
    IlpModel::new(objective, constraints, binaries)
}

fn term_chunks(terms: &[Term]) -> Vec<String> {
    terms
        .iter()
        .enumerate()
        .map(|(idx, (c, v))| {
            let sign = if *c < 0 { "- " } else if idx > 0 { "+ " } else { "" };
            match c.unsigned_abs() {
                1 => format!("{sign}{v}"),
                a => format!("{sign}{a} {v}"),
            }
        })
        .collect()
}

/// Appends `chunks` as space-separated lines, each starting with a space and
/// kept within [`MAX_LINE_LEN`] where possible.
fn push_wrapped(out: &mut String, chunks: &[String]) {
    let mut line = String::new();
    for chunk in chunks {
        if !line.is_empty() && line.len() + 1 + chunk.len() > MAX_LINE_LEN {
            out.push_str(&line);
            out.push('\n');
            line.clear();
        }
        line.push(' ');
        line.push_str(chunk);
    }
    if !line.is_empty() {
        out.push_str(&line);
        out.push('\n');
    }
}

pub fn write_lp(model: &IlpModel) -> String {
    let mut out = String::from("Minimize\n");
    let mut chunks = vec!["obj:".to_string()];
    if model.objective.is_empty() {
        // an empty objective still needs a row; zero times any variable
        chunks.push(format!("0 {}", model.binaries[0]));
    } else {
        chunks.extend(term_chunks(&model.objective));
    }
    push_wrapped(&mut out, &chunks);
    out.push_str("Subject To\n");
    for c in &model.constraints {
        let mut chunks = vec![format!("{}:", c.name)];
        chunks.extend(term_chunks(&c.terms));
        chunks.push(c.sense.as_str().to_string());
        chunks.push(c.rhs.to_string());
        push_wrapped(&mut out, &chunks);
    }
    out.push_str("Binaries\n");
    push_wrapped(&mut out, &model.binaries);
    out.push_str("End\n");
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Section {
    Start,
    Objective,
    Constraints,
    Binaries,
    Done,
}

struct Row {
    line: usize,
    tokens: Vec<String>,
}

/// Parses the dialect produced by [`write_lp`].
pub fn read_lp(text: &str) -> Result<IlpModel> {
    let mut section = Section::Start;
    let mut objective_rows: Vec<Row> = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut binaries: Vec<(usize, String)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('\\') {
            continue;
        }
        if section == Section::Done {
            return Err(parse_err(line_no, "content after `End`"));
        }
        let header = match trimmed.to_ascii_lowercase().as_str() {
            "minimize" => Some(Section::Objective),
            "subject to" => Some(Section::Constraints),
            "binaries" => Some(Section::Binaries),
            "end" => Some(Section::Done),
            _ => None,
        };
        if let Some(next) = header {
            let expected = match section {
                Section::Start => Section::Objective,
                Section::Objective => Section::Constraints,
                Section::Constraints => Section::Binaries,
                Section::Binaries => Section::Done,
                Section::Done => unreachable!(),
            };
            if next != expected {
                return Err(parse_err(
                    line_no,
                    format!("unexpected section header `{trimmed}`, expected {}", section_title(expected)),
                ));
            }
            section = next;
            continue;
        }
        let tokens: Vec<String> = trimmed.split_whitespace().map(str::to_string).collect();
        match section {
            Section::Start => {
                return Err(parse_err(line_no, "expected `Minimize`"));
            }
            Section::Objective | Section::Constraints => {
                let target = if section == Section::Objective {
                    &mut objective_rows
                } else {
                    &mut rows
                };
                if tokens[0].ends_with(':') {
                    target.push(Row { line: line_no, tokens });
                } else if let Some(row) = target.last_mut() {
                    row.tokens.extend(tokens);
                } else {
                    return Err(parse_err(line_no, "expected a row name ending in `:`"));
                }
            }
            Section::Binaries => {
                binaries.extend(tokens.into_iter().map(|t| (line_no, t)));
            }
            Section::Done => unreachable!(),
        }
    }
    if section != Section::Done {
        return Err(parse_err(last_line + 1, "expected `End`"));
    }

    let mut declared = HashSet::new();
    for (line, b) in &binaries {
        if Variable::parse(b).is_none() {
            return Err(parse_err(*line, format!("malformed variable name `{b}`")));
        }
        if !declared.insert(b.as_str()) {
            return Err(parse_err(*line, format!("variable `{b}` declared twice")));
        }
    }
    let objective = match objective_rows.as_slice() {
        [row] => {
            let (name, terms, tail) = parse_row(row, &declared)?;
            if name != "obj" || !tail.is_empty() {
                return Err(parse_err(row.line, "expected ` obj: <terms>`"));
            }
            terms.into_iter().filter(|(c, _)| *c != 0).collect()
        }
        [] => return Err(parse_err(last_line, "missing objective row")),
        [_, extra, ..] => return Err(parse_err(extra.line, "more than one objective row")),
    };
    let mut names: HashMap<String, usize> = HashMap::new();
    let mut constraints = Vec::with_capacity(rows.len());
    for row in &rows {
        let (name, terms, tail) = parse_row(row, &declared)?;
        if let Some(prev) = names.insert(name.clone(), row.line) {
            return Err(parse_err(
                row.line,
                format!("duplicate constraint name `{name}` (first on line {prev})"),
            ));
        }
        let [sense, rhs] = tail.as_slice() else {
            return Err(parse_err(row.line, format!("`{name}` needs `<sense> <rhs>`")));
        };
        let sense = match sense.as_str() {
            ">=" | "=>" => Sense::Ge,
            "<=" | "=<" => Sense::Le,
            s => return Err(parse_err(row.line, format!("unknown sense `{s}`"))),
        };
        let rhs = rhs
            .parse()
            .map_err(|_| parse_err(row.line, format!("invalid right-hand side `{rhs}`")))?;
        constraints.push(Constraint::new(name, terms, sense, rhs));
    }
    IlpModel::new(objective, constraints, binaries.into_iter().map(|(_, b)| b).collect())
        .map_err(|e| parse_err(last_line, e.to_string()))
}

fn section_title(s: Section) -> &'static str {
    match s {
        Section::Start | Section::Objective => "`Minimize`",
        Section::Constraints => "`Subject To`",
        Section::Binaries => "`Binaries`",
        Section::Done => "`End`",
    }
}

/// Splits a row into its name, its terms and the tokens after the last term.
fn parse_row(row: &Row, declared: &HashSet<&str>) -> Result<(String, Vec<Term>, Vec<String>)> {
    let name = row.tokens[0].trim_end_matches(':').to_string();
    if !valid_row_name(&name) {
        return Err(parse_err(row.line, format!("invalid row name `{name}`")));
    }
    let mut terms = Vec::new();
    let mut rest = row.tokens[1..].iter().peekable();
    let mut first = true;
    while let Some(&tok) = rest.peek() {
        if tok.starts_with('<') || tok.starts_with('>') || tok.starts_with('=') {
            break;
        }
        let mut sign = 1;
        if tok == "+" || tok == "-" {
            if tok == "-" {
                sign = -1;
            }
            rest.next();
        } else if !first {
            return Err(parse_err(row.line, format!("expected `+` or `-` before `{tok}`")));
        }
        let mut coef = 1;
        let Some(tok) = rest.next() else {
            return Err(parse_err(row.line, "dangling sign"));
        };
        let var = if let Ok(c) = tok.parse::<i64>() {
            coef = c;
            rest.next()
                .ok_or_else(|| parse_err(row.line, "coefficient without variable"))?
        } else {
            tok
        };
        if Variable::parse(var).is_none() {
            return Err(parse_err(row.line, format!("malformed variable name `{var}`")));
        }
        if !declared.contains(var.as_str()) {
            return Err(parse_err(row.line, format!("unknown variable `{var}`")));
        }
        terms.push((sign * coef, var.clone()));
        first = false;
    }
    Ok((name, terms, rest.cloned().collect()))
}

/// Optimal objective value and assignment (in `binaries` order) of a model,
/// or `None` when infeasible. Depth-first over the binaries with pruning on
/// row activity bounds and the objective.
pub fn solve_exhaustive(model: &IlpModel) -> Result<Option<(i64, Vec<bool>)>> {
    let nv = model.binaries.len();
    if nv > MAX_EXHAUSTIVE_VARS {
        return Err(Error::InvalidParameters(format!(
            "exhaustive evaluation is limited to {MAX_EXHAUSTIVE_VARS} variables, model has {nv}"
        )));
    }
    let index: HashMap<&str, usize> =
        model.binaries.iter().enumerate().map(|(i, b)| (b.as_str(), i)).collect();
    let mut cost = vec![0i64; nv];
    for (c, v) in &model.objective {
        cost[index[v.as_str()]] += c;
    }
    let mut occurs: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nv];
    let mut lo = Vec::with_capacity(model.constraints.len());
    let mut hi = Vec::with_capacity(model.constraints.len());
    for (r, c) in model.constraints.iter().enumerate() {
        let (mut l, mut h) = (0, 0);
        for (a, v) in &c.terms {
            occurs[index[v.as_str()]].push((r, *a));
            l += (*a).min(0);
            h += (*a).max(0);
        }
        lo.push(l);
        hi.push(h);
    }
    let rest_min: Vec<i64> = (0..=nv).map(|i| cost[i..].iter().map(|&c| c.min(0)).sum()).collect();
    let mut ev = Exhaustive {
        rows: &model.constraints,
        cost: &cost,
        occurs: &occurs,
        rest_min: &rest_min,
        lo,
        hi,
        assignment: vec![false; nv],
        best: None,
    };
    if ev.feasible_so_far() {
        ev.dfs(0, 0);
    }
    Ok(ev.best)
}

struct Exhaustive<'a> {
    rows: &'a [Constraint],
    cost: &'a [i64],
    occurs: &'a [Vec<(usize, i64)>],
    rest_min: &'a [i64],
    // reachable activity range of each row given the fixed prefix
    lo: Vec<i64>,
    hi: Vec<i64>,
    assignment: Vec<bool>,
    best: Option<(i64, Vec<bool>)>,
}

impl Exhaustive<'_> {
    fn feasible_so_far(&self) -> bool {
        self.rows.iter().enumerate().all(|(r, c)| match c.sense {
            Sense::Ge => self.hi[r] >= c.rhs,
            Sense::Le => self.lo[r] <= c.rhs,
        })
    }

    fn row_ok(&self, r: usize) -> bool {
        match self.rows[r].sense {
            Sense::Ge => self.hi[r] >= self.rows[r].rhs,
            Sense::Le => self.lo[r] <= self.rows[r].rhs,
        }
    }

    fn dfs(&mut self, var: usize, obj: i64) {
        if let Some((b, _)) = &self.best {
            if obj + self.rest_min[var] >= *b {
                return;
            }
        }
        if var == self.assignment.len() {
            self.best = Some((obj, self.assignment.clone()));
            return;
        }
        let order = if self.cost[var] > 0 { [false, true] } else { [true, false] };
        for value in order {
            let mut ok = true;
            for &(r, a) in &self.occurs[var] {
                // fixing the variable collapses its contribution to one value
                let fixed = if value { a } else { 0 };
                self.lo[r] += fixed - a.min(0);
                self.hi[r] += fixed - a.max(0);
                ok &= self.row_ok(r);
            }
            if ok {
                self.assignment[var] = value;
                self.dfs(var + 1, obj + if value { self.cost[var] } else { 0 });
                self.assignment[var] = false;
            }
            for &(r, a) in &self.occurs[var] {
                let fixed = if value { a } else { 0 };
                self.lo[r] -= fixed - a.min(0);
                self.hi[r] -= fixed - a.max(0);
            }
        }
    }
}

/// Vertices set to 1 in an assignment of a model built by this module.
pub fn chosen_vertices(model: &IlpModel, assignment: &[bool]) -> Vec<usize> {
    let mut out: Vec<usize> = model
        .binaries
        .iter()
        .zip(assignment)
        .filter(|(_, &on)| on)
        .filter_map(|(b, _)| match Variable::parse(b) {
            Some(Variable::Vertex(i)) => Some(i - 1),
            _ => None,
        })
        .collect();
    out.sort_unstable();
    out
}

/// Short human-readable summary used in CLI output.
pub fn describe(model: &IlpModel) -> String {
    format!(
        "{} variables, {} constraints",
        model.binaries.len(),
        model.constraints.len()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_pairs_distances, Graph};

    fn names(c: &Constraint) -> Vec<&str> {
        c.terms.iter().map(|(_, v)| v.as_str()).collect()
    }

    #[test]
    fn path_strong_model() {
        let m = build_strong_ilp(&all_pairs_distances(&Graph::path(3))).unwrap();
        assert_eq!(m.binaries().len(), 3);
        assert_eq!(m.constraints().len(), 3);
        assert_eq!(names(m.constraint("cover_2_3").unwrap()), ["y_1", "y_2", "y_3"]);
        assert_eq!(solve_exhaustive(&m).unwrap().unwrap().0, 1);
    }

    #[test]
    fn triangle_strong_model() {
        let m = build_strong_ilp(&all_pairs_distances(&Graph::complete(3))).unwrap();
        let names: Vec<_> = m.constraints().iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, ["cover_1_2", "cover_1_3", "cover_2_3"]);
        assert_eq!(self::names(m.constraint("cover_1_3").unwrap()), ["y_1", "y_3"]);
        assert_eq!(solve_exhaustive(&m).unwrap().unwrap().0, 2);
    }

    #[test]
    fn path_doubly_model() {
        let m = build_doubly_ilp(&all_pairs_distances(&Graph::path(3))).unwrap();
        assert_eq!(m.binaries().len(), 6);
        assert_eq!(m.constraints().len(), 9);
        let (value, assignment) = solve_exhaustive(&m).unwrap().unwrap();
        assert_eq!(value, 2);
        assert_eq!(chosen_vertices(&m, &assignment).len(), 2);
    }

    #[test]
    fn rejects_bad_models() {
        assert!(IlpModel::new(vec![], vec![], vec!["y_1".into()]).is_err());
        let row = |n: &str, v: &str| Constraint::new(n, vec![(1, v.to_string())], Sense::Ge, 1);
        let bins = vec!["y_1".to_string()];
        assert!(IlpModel::new(vec![], vec![row("a", "y_2")], bins.clone()).is_err());
        assert!(IlpModel::new(vec![], vec![row("a", "y_1"), row("a", "y_1")], bins.clone()).is_err());
        assert!(IlpModel::new(vec![], vec![row("a", "y_1")], vec!["y_0".into()]).is_err());
        assert!(IlpModel::new(vec![], vec![row("a", "y_1")], bins).is_ok());
        assert!(build_strong_ilp(&all_pairs_distances(&Graph::empty(1))).is_err());
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(build_strong_ilp(&all_pairs_distances(&split)), Err(Error::Disconnected));
    }

    #[test]
    fn variable_names() {
        assert_eq!(Variable::parse("y_3"), Some(Variable::Vertex(3)));
        assert_eq!(Variable::parse("x_2_7"), Some(Variable::Pair(2, 7)));
        for bad in ["y_0", "y_", "x_3_2", "x_1_1", "y_01", "z_1", "x_1"] {
            assert_eq!(Variable::parse(bad), None, "{bad}");
        }
    }

    #[test]
    fn round_trip_and_wrapping() {
        let g = Graph::complete(40);
        let m = build_doubly_ilp(&all_pairs_distances(&Graph::path(6))).unwrap();
        let text = write_lp(&m);
        assert_eq!(read_lp(&text).unwrap(), m);
        let big = build_strong_ilp(&all_pairs_distances(&g)).unwrap();
        let text = write_lp(&big);
        assert!(text.lines().all(|l| l.len() <= MAX_LINE_LEN));
        assert!(text.lines().count() > 40 * 39 / 2 + 5);
        assert_eq!(read_lp(&text).unwrap(), big);
    }

    #[test]
    fn reader_errors() {
        let m = build_strong_ilp(&all_pairs_distances(&Graph::path(3))).unwrap();
        let text = write_lp(&m);
        let no_end = text.replace("End\n", "");
        let e = read_lp(&no_end).unwrap_err().to_string();
        assert!(e.contains("End"), "{e}");

        let zero = text.replace(" cover_1_2: y_1", " cover_1_2: y_0");
        assert!(matches!(read_lp(&zero), Err(Error::Parse { line: 4, .. })));

        let dup = text.replace("cover_1_3", "cover_1_2");
        assert!(matches!(read_lp(&dup), Err(Error::Parse { line: 5, .. })));

        let unknown = text.replace(" y_1 y_2 y_3", " y_1 y_2");
        assert!(read_lp(&unknown).is_err());

        let header = text.replace("Subject To", "Subject");
        assert!(read_lp(&header).is_err());
    }
}
