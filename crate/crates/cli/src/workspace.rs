//! Line-oriented workspace documents.
//!
//! ```text
//! # comment
//! algebra UT2 dim 3
//! c 1 1 1 = -1            e1∘e1 = −e1 (1-based, unspecified constants are 0)
//! coalgebra D on UT2
//! d 2 1 2 = 1/2           Δ(e2) has 1/2 on e1⊗e2
//! map R from UT2 rows:    endomorphism of UT2
//!   1 0 0
//!   0 0 0
//!   0 0 1
//! map T from UT2 dim 2 rows:   a map out of a 2-dim module, into UT2 (3 rows)
//! form W on UT2 rows: ...
//! rtensor r on UT2 rows: ...   row i holds the coefficients r^{ij}
//! rep V of UT2 on dim 2
//! rho[1]:
//!   ...
//! phi[3]:
//!   ...
//! run check_averaging UT2 R
//! ```
//!
//! All names share one namespace. Objects must be declared before they are
//! referenced. `run` lines are suite steps, resolved only when executed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;
use plab_core::{
    Algebra, BilinearForm, Coalgebra, Error, Matrix, RTensor, Rational, Representation, Result,
    Scalar, Tensor3,
};

use crate::suite::Step;

#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Algebra(Algebra),
    Coalgebra { on: String, co: Coalgebra },
    Map { on: String, matrix: Matrix },
    Form { on: String, form: BilinearForm },
    RTensor { on: String, r: RTensor },
    Rep { of: String, rep: Representation },
}

impl Object {
    pub fn kind_name(&self) -> &'static str {
        match self {
            Object::Algebra(_) => "algebra",
            Object::Coalgebra { .. } => "coalgebra",
            Object::Map { .. } => "map",
            Object::Form { .. } => "form",
            Object::RTensor { .. } => "rtensor",
            Object::Rep { .. } => "rep",
        }
    }

    fn order(&self) -> u8 {
        match self {
            Object::Algebra(_) => 0,
            Object::Coalgebra { .. } => 1,
            Object::Map { .. } => 2,
            Object::Form { .. } => 3,
            Object::RTensor { .. } => 4,
            Object::Rep { .. } => 5,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Workspace {
    objects: BTreeMap<String, Object>,
    pub steps: Vec<Step>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, name: &str) -> Result<&Object> {
        self.objects
            .get(name)
            .ok_or_else(|| Error::UnknownObject(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.objects.contains_key(name)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.objects.keys().map(String::as_str)
    }

    /// Inserts or replaces. Algebras and coalgebras are stored untagged so that
    /// derived objects print and re-parse to the same value.
    pub fn insert(&mut self, name: impl Into<String>, obj: Object) {
        let name = name.into();
        let obj = match obj {
            Object::Algebra(a) => Object::Algebra(a.with_label(name.clone()).unchecked()),
            Object::Coalgebra { on, co } => Object::Coalgebra {
                on,
                co: Coalgebra::new(name.clone(), co.coproduct().clone()).expect("cubic"),
            },
            other => other,
        };
        self.objects.insert(name, obj);
    }

    pub fn algebra(&self, name: &str) -> Result<&Algebra> {
        match self.get(name)? {
            Object::Algebra(a) => Ok(a),
            other => Err(wrong_kind(name, "algebra", other)),
        }
    }

    pub fn map(&self, name: &str) -> Result<&Matrix> {
        match self.get(name)? {
            Object::Map { matrix, .. } => Ok(matrix),
            other => Err(wrong_kind(name, "map", other)),
        }
    }

    pub fn coalgebra(&self, name: &str) -> Result<&Coalgebra> {
        match self.get(name)? {
            Object::Coalgebra { co, .. } => Ok(co),
            other => Err(wrong_kind(name, "coalgebra", other)),
        }
    }

    pub fn form(&self, name: &str) -> Result<&BilinearForm> {
        match self.get(name)? {
            Object::Form { form, .. } => Ok(form),
            other => Err(wrong_kind(name, "form", other)),
        }
    }

    pub fn rtensor(&self, name: &str) -> Result<&RTensor> {
        match self.get(name)? {
            Object::RTensor { r, .. } => Ok(r),
            other => Err(wrong_kind(name, "rtensor", other)),
        }
    }

    pub fn rep(&self, name: &str) -> Result<&Representation> {
        match self.get(name)? {
            Object::Rep { rep, .. } => Ok(rep),
            other => Err(wrong_kind(name, "rep", other)),
        }
    }
}

fn wrong_kind(name: &str, want: &str, got: &Object) -> Error {
    Error::Kind(format!(
        "`{name}` is a {}, expected a {want}",
        got.kind_name()
    ))
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// One whitespace token with its 1-based column.
#[derive(Clone, Copy)]
pub(crate) struct Tok<'a> {
    pub text: &'a str,
    pub col: usize,
}

pub(crate) fn tokenize(line: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Tok {
                    text: &line[s..i],
                    col: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

fn parse_rational(tok: Tok<'_>, line: usize) -> Result<Rational> {
    Rational::parse_literal(tok.text).ok_or_else(|| {
        parse_err(
            line,
            tok.col,
            format!("`{}` is not a rational literal", tok.text),
        )
    })
}

fn parse_index(tok: Tok<'_>, line: usize, dim: usize) -> Result<usize> {
    let i: usize = tok
        .text
        .parse()
        .map_err(|_| parse_err(line, tok.col, format!("`{}` is not an index", tok.text)))?;
    if i == 0 || i > dim {
        return Err(parse_err(
            line,
            tok.col,
            format!("index {i} out of range 1..={dim}"),
        ));
    }
    Ok(i - 1)
}

fn parse_dim(tok: Tok<'_>, line: usize) -> Result<usize> {
    tok.text
        .parse()
        .map_err(|_| parse_err(line, tok.col, format!("`{}` is not a dimension", tok.text)))
}

fn looks_numeric(line: &str) -> bool {
    line.trim_start()
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_digit() || c == '-' || c == '+')
}

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, strip_comment(l)))
            .filter(|(_, l)| !l.trim().is_empty())
            .collect();
        Lines { lines, pos: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let l = self.lines.get(self.pos).copied();
        self.pos += 1;
        l
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    /// Consumes `rows` numeric lines of `cols` entries each.
    fn matrix(&mut self, header_line: usize, rows: usize, cols: usize) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows);
        for _ in 0..rows {
            let Some((ln, text)) = self.peek().filter(|(_, t)| looks_numeric(t)) else {
                return Err(parse_err(
                    header_line,
                    1,
                    format!("expected {rows} rows, found {}", data.len()),
                ));
            };
            self.pos += 1;
            data.push(self.row(ln, text, cols)?);
        }
        Ok(Matrix::from_rows(data).expect("rectangular"))
    }

    /// Consumes all following numeric lines; each must have `cols` entries.
    fn open_matrix(&mut self, cols: usize) -> Result<Vec<Vec<Rational>>> {
        let mut data = Vec::new();
        while let Some((ln, text)) = self.peek().filter(|(_, t)| looks_numeric(t)) {
            self.pos += 1;
            data.push(self.row(ln, text, cols)?);
        }
        Ok(data)
    }

    fn row(&self, ln: usize, text: &str, cols: usize) -> Result<Vec<Rational>> {
        let toks = tokenize(text);
        if toks.len() != cols {
            let col = toks.get(cols).map_or(1, |t| t.col);
            return Err(parse_err(
                ln,
                col,
                format!("expected {cols} entries, found {}", toks.len()),
            ));
        }
        toks.into_iter().map(|t| parse_rational(t, ln)).collect()
    }
}

fn expect_word(toks: &[Tok<'_>], i: usize, word: &str, line: usize) -> Result<()> {
    match toks.get(i) {
        Some(t) if t.text == word => Ok(()),
        Some(t) => Err(parse_err(
            line,
            t.col,
            format!("expected `{word}`, found `{}`", t.text),
        )),
        None => Err(parse_err(line, 1, format!("expected `{word}`"))),
    }
}

fn tok_at<'a>(toks: &[Tok<'a>], i: usize, line: usize, what: &str) -> Result<Tok<'a>> {
    toks.get(i)
        .copied()
        .ok_or_else(|| parse_err(line, 1, format!("missing {what}")))
}

fn check_arity(toks: &[Tok<'_>], n: usize, line: usize) -> Result<()> {
    match toks.get(n) {
        Some(t) => Err(parse_err(line, t.col, format!("unexpected `{}`", t.text))),
        None => Ok(()),
    }
}

fn declare_name(ws: &Workspace, tok: Tok<'_>, line: usize) -> Result<String> {
    if ws.contains(tok.text) {
        return Err(parse_err(
            line,
            tok.col,
            format!("`{}` is already declared", tok.text),
        ));
    }
    if !tok
        .text
        .chars()
        .all(|c| c.is_alphanumeric() || c == '_' || c == '.' || c == '-')
    {
        return Err(parse_err(
            line,
            tok.col,
            format!("invalid name `{}`", tok.text),
        ));
    }
    Ok(tok.text.to_string())
}

fn algebra_dim(ws: &Workspace, tok: Tok<'_>, line: usize) -> Result<usize> {
    match ws.get(tok.text) {
        Ok(Object::Algebra(a)) => Ok(a.dim()),
        Ok(other) => Err(parse_err(
            line,
            tok.col,
            format!("`{}` is a {}, not an algebra", tok.text, other.kind_name()),
        )),
        Err(_) => Err(parse_err(
            line,
            tok.col,
            format!("unknown algebra `{}`", tok.text),
        )),
    }
}

/// Parses a workspace document.
pub fn parse_workspace(text: &str) -> Result<Workspace> {
    let mut ws = Workspace::new();
    let mut lines = Lines::new(text);
    while let Some((ln, line)) = lines.next() {
        let toks = tokenize(line);
        let head = toks[0];
        match head.text {
            "algebra" => {
                let name = declare_name(&ws, tok_at(&toks, 1, ln, "name")?, ln)?;
                expect_word(&toks, 2, "dim", ln)?;
                let dim = parse_dim(tok_at(&toks, 3, ln, "dimension")?, ln)?;
                check_arity(&toks, 4, ln)?;
                let t = constants(&mut lines, "c", dim)?;
                let alg = Algebra::new(name.clone(), t)?;
                ws.insert(name, Object::Algebra(alg));
            }
            "coalgebra" => {
                let name = declare_name(&ws, tok_at(&toks, 1, ln, "name")?, ln)?;
                expect_word(&toks, 2, "on", ln)?;
                let on = tok_at(&toks, 3, ln, "algebra")?;
                let dim = algebra_dim(&ws, on, ln)?;
                check_arity(&toks, 4, ln)?;
                let t = constants(&mut lines, "d", dim)?;
                let co = Coalgebra::new(name.clone(), t)?;
                ws.insert(
                    name,
                    Object::Coalgebra {
                        on: on.text.into(),
                        co,
                    },
                );
            }
            "map" => {
                let name = declare_name(&ws, tok_at(&toks, 1, ln, "name")?, ln)?;
                expect_word(&toks, 2, "from", ln)?;
                let on = tok_at(&toks, 3, ln, "algebra")?;
                let n = algebra_dim(&ws, on, ln)?;
                let (cols, rest) = if toks.get(4).map(|t| t.text) == Some("dim") {
                    (parse_dim(tok_at(&toks, 5, ln, "dimension")?, ln)?, 6)
                } else {
                    (n, 4)
                };
                expect_word(&toks, rest, "rows:", ln)?;
                check_arity(&toks, rest + 1, ln)?;
                let rows = lines.open_matrix(cols)?;
                if rows.len() != n && rows.len() != cols {
                    return Err(parse_err(
                        ln,
                        1,
                        format!("map needs {n} or {cols} rows, found {}", rows.len()),
                    ));
                }
                let matrix = if rows.is_empty() {
                    Matrix::zeros(0, cols)
                } else {
                    Matrix::from_rows(rows)?
                };
                ws.insert(
                    name,
                    Object::Map {
                        on: on.text.into(),
                        matrix,
                    },
                );
            }
            "form" | "rtensor" => {
                let name = declare_name(&ws, tok_at(&toks, 1, ln, "name")?, ln)?;
                expect_word(&toks, 2, "on", ln)?;
                let on = tok_at(&toks, 3, ln, "algebra")?;
                let n = algebra_dim(&ws, on, ln)?;
                expect_word(&toks, 4, "rows:", ln)?;
                check_arity(&toks, 5, ln)?;
                let m = lines.matrix(ln, n, n)?;
                let obj = if head.text == "form" {
                    Object::Form {
                        on: on.text.into(),
                        form: BilinearForm::new(m)?,
                    }
                } else {
                    Object::RTensor {
                        on: on.text.into(),
                        r: RTensor::new(m)?,
                    }
                };
                ws.insert(name, obj);
            }
            "rep" => {
                let name = declare_name(&ws, tok_at(&toks, 1, ln, "name")?, ln)?;
                expect_word(&toks, 2, "of", ln)?;
                let of = tok_at(&toks, 3, ln, "algebra")?;
                let n = algebra_dim(&ws, of, ln)?;
                expect_word(&toks, 4, "on", ln)?;
                expect_word(&toks, 5, "dim", ln)?;
                let m = parse_dim(tok_at(&toks, 6, ln, "dimension")?, ln)?;
                check_arity(&toks, 7, ln)?;
                let mut rho = vec![Matrix::zeros(m, m); n];
                let mut phi = vec![Matrix::zeros(m, m); n];
                while let Some((hl, h)) = lines.peek() {
                    let h = h.trim();
                    let (slot, rest) = if let Some(rest) = h.strip_prefix("rho[") {
                        (&mut rho, rest)
                    } else if let Some(rest) = h.strip_prefix("phi[") {
                        (&mut phi, rest)
                    } else {
                        break;
                    };
                    lines.pos += 1;
                    let Some(idx) = rest.strip_suffix("]:") else {
                        return Err(parse_err(hl, 1, "expected `rho[i]:` or `phi[i]:`"));
                    };
                    let col = line_col(lines.lines[lines.pos - 1].1, idx);
                    let i = parse_index(Tok { text: idx, col }, hl, n)?;
                    slot[i] = lines.matrix(hl, m, m)?;
                }
                let alg = ws.algebra(of.text)?.clone();
                let rep = Representation::new(&alg, rho, phi)?;
                ws.insert(
                    name,
                    Object::Rep {
                        of: of.text.into(),
                        rep,
                    },
                );
            }
            "run" => {
                let rest = &line[head.col - 1 + 3..];
                let step = Step::parse(rest).map_err(|e| match e {
                    Error::Parse {
                        column, message, ..
                    } => parse_err(ln, head.col + 2 + column, message),
                    other => other,
                })?;
                ws.steps.push(step);
            }
            other => {
                return Err(parse_err(
                    ln,
                    head.col,
                    format!("unknown declaration `{other}`"),
                ));
            }
        }
    }
    Ok(ws)
}

fn line_col(line: &str, sub: &str) -> usize {
    let offset = sub.as_ptr() as usize - line.as_ptr() as usize;
    line[..offset].chars().count() + 1
}

/// Reads `<tag> i j k = v` lines following a declaration.
fn constants(lines: &mut Lines<'_>, tag: &str, dim: usize) -> Result<Tensor3> {
    let mut t = Tensor3::cube(dim);
    while let Some((ln, text)) = lines.peek() {
        let toks = tokenize(text);
        if toks[0].text != tag {
            break;
        }
        lines.pos += 1;
        let i = parse_index(tok_at(&toks, 1, ln, "index")?, ln, dim)?;
        let j = parse_index(tok_at(&toks, 2, ln, "index")?, ln, dim)?;
        let k = parse_index(tok_at(&toks, 3, ln, "index")?, ln, dim)?;
        expect_word(&toks, 4, "=", ln)?;
        let v = parse_rational(tok_at(&toks, 5, ln, "value")?, ln)?;
        check_arity(&toks, 6, ln)?;
        t[(i, j, k)] = v;
    }
    Ok(t)
}

fn write_rows(out: &mut String, m: &Matrix) {
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "  {}", cells.join(" "));
    }
}

fn write_constants(out: &mut String, tag: &str, t: &Tensor3) {
    let [n, _, _] = t.dims();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = &t[(i, j, k)];
                if !v.is_zero() {
                    let _ = writeln!(out, "{tag} {} {} {} = {v}", i + 1, j + 1, k + 1);
                }
            }
        }
    }
}

/// One `map` declaration; `n` is the dimension of the algebra `on`.
pub fn emit_map(name: &str, on: &str, n: usize, matrix: &Matrix) -> String {
    let mut out = String::new();
    if matrix.rows() == n && matrix.cols() == n {
        let _ = writeln!(out, "map {name} from {on} rows:");
    } else {
        let _ = writeln!(out, "map {name} from {on} dim {} rows:", matrix.cols());
    }
    write_rows(&mut out, matrix);
    out
}

/// Canonical text: algebras, coalgebras, maps, forms, r-tensors,
/// representations (each sorted by name), then the steps in order.
pub fn emit_workspace(ws: &Workspace) -> String {
    let mut out = String::new();
    let mut objs: Vec<(&String, &Object)> = ws.objects.iter().collect();
    objs.sort_by_key(|(name, obj)| (obj.order(), (*name).clone()));
    for (name, obj) in objs {
        match obj {
            Object::Algebra(a) => {
                let _ = writeln!(out, "algebra {name} dim {}", a.dim());
                write_constants(&mut out, "c", a.product());
            }
            Object::Coalgebra { on, co } => {
                let _ = writeln!(out, "coalgebra {name} on {on}");
                write_constants(&mut out, "d", co.coproduct());
            }
            Object::Map { on, matrix } => {
                let n = ws.algebra(on).map(|a| a.dim()).unwrap_or(0);
                out.push_str(&emit_map(name, on, n, matrix));
            }
            Object::Form { on, form } => {
                let _ = writeln!(out, "form {name} on {on} rows:");
                write_rows(&mut out, form.matrix());
            }
            Object::RTensor { on, r } => {
                let _ = writeln!(out, "rtensor {name} on {on} rows:");
                write_rows(&mut out, r.coeff());
            }
            Object::Rep { of, rep } => {
                let _ = writeln!(out, "rep {name} of {of} on dim {}", rep.module_dim());
                for (tag, mats) in [("rho", rep.rhos()), ("phi", rep.phis())] {
                    for (i, m) in mats.iter().enumerate() {
                        if !m.is_zero() {
                            let _ = writeln!(out, "{tag}[{}]:", i + 1);
                            write_rows(&mut out, m);
                        }
                    }
                }
            }
        }
        out.push('\n');
    }
    for step in &ws.steps {
        let _ = writeln!(out, "run {step}");
    }
    out
}
