//! Steps, presets and the suite runner.
//!
//! A step is one `run` line: an operation name, its arguments (object names or
//! rational literals) and, for constructions, `as NAME`. Constructions put
//! their results back into the workspace, so later steps can refer to them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use plab_core::algebra::{
    check_averaging, check_leibniz, check_lie, check_pre_lie, induced_leibniz, sub_adjacent_lie,
};
use plab_core::bialgebra::{
    check_avg_lie_bialgebra, check_avg_prelie_bialgebra, check_balanced, check_prelie_bialgebra,
    induced_lie_bialgebra,
};
use plab_core::coalgebra::check_prelie_coalgebra;
use plab_core::manin::{bialgebra_to_manin, check_quadratic, verify_rep_isomorphism};
use plab_core::representation::{
    check_S_admissible, check_avg_representation, check_beta_admissible,
    check_prelie_representation, coregular_representation, regular_representation,
    semidirect_product,
};
use plab_core::rota_baxter::{
    avg_bialgebra_from_qrb, build_r_from_qrb, check_avg_on_qrb, check_equiva3, check_qrb, check_rb,
    check_relative_rb, descendent_product, lift_T_to_bialgebra, lift_T_to_r, lift_tensor,
    rrb_equiv_rb0,
};
use plab_core::yang_baxter::{
    build_coboundary_avg_bialgebra, check_S_equation, check_admissible_cybe,
    check_combined_conditions, check_factorizable, check_quasi_triangular,
};
use plab_core::{
    Algebra, AveragingAlgebra, AvgBialgebra, AvgRepresentation, CheckReport, Error, QuadraticRB,
    RBOperator, Rational, Result, Scalar,
};

use crate::report::{Record, Report, Status};
use crate::workspace::{tokenize, Object, Workspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub op: String,
    pub args: Vec<String>,
    pub output: Option<String>,
}

impl Step {
    pub fn new(op: impl Into<String>, args: &[&str], output: Option<&str>) -> Self {
        Step {
            op: op.into(),
            args: args.iter().map(|s| s.to_string()).collect(),
            output: output.map(str::to_string),
        }
    }

    /// Parses `OP ARG... [as NAME]`. Parse errors carry line 1 and a column
    /// within `text`.
    pub fn parse(text: &str) -> Result<Step> {
        let toks = tokenize(text);
        let Some(op) = toks.first() else {
            return Err(Error::Parse {
                line: 1,
                column: 1,
                message: "missing operation".into(),
            });
        };
        let mut args: Vec<String> = toks[1..].iter().map(|t| t.text.to_string()).collect();
        let mut output = None;
        if let Some(pos) = args.iter().position(|a| a == "as") {
            let as_tok = toks[pos + 1];
            if pos + 2 != args.len() {
                return Err(Error::Parse {
                    line: 1,
                    column: as_tok.col,
                    message: "`as` must be followed by exactly one name".into(),
                });
            }
            output = args.pop();
            args.pop();
        }
        Ok(Step {
            op: op.text.to_string(),
            args,
            output,
        })
    }
}

impl FromStr for Step {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Step::parse(s)
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.op)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        if let Some(o) = &self.output {
            write!(f, " as {o}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Category {
    PreLie,
    Averaging,
    Bialgebra,
    Cybe,
    RotaBaxter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    PreLie,
    Averaging,
    Bialgebra,
    Cybe,
    RotaBaxter,
    All,
}

impl Preset {
    pub const NAMES: [&'static str; 6] = [
        "preLie",
        "averaging",
        "bialgebra",
        "cybe",
        "rota-baxter",
        "all",
    ];

    fn covers(self, c: Category) -> bool {
        matches!(
            (self, c),
            (Preset::All, _)
                | (Preset::PreLie, Category::PreLie)
                | (Preset::Averaging, Category::Averaging)
                | (Preset::Bialgebra, Category::Bialgebra)
                | (Preset::Cybe, Category::Cybe)
                | (Preset::RotaBaxter, Category::RotaBaxter)
        )
    }

    /// The steps of this preset together with the earlier constructions they
    /// depend on, in document order.
    pub fn select(self, steps: &[Step]) -> Result<Vec<Step>> {
        let mut producer: BTreeMap<String, usize> = BTreeMap::new();
        let mut deps: Vec<Vec<usize>> = Vec::with_capacity(steps.len());
        let mut wanted = Vec::with_capacity(steps.len());
        for (i, step) in steps.iter().enumerate() {
            let def = def_of(&step.op)?;
            deps.push(
                step.args
                    .iter()
                    .filter_map(|a| producer.get(a).copied())
                    .collect(),
            );
            wanted.push(self.covers(def.category));
            for name in output_names(def, step) {
                producer.insert(name, i);
            }
        }
        for i in (0..steps.len()).rev() {
            if wanted[i] {
                for &d in &deps[i] {
                    wanted[d] = true;
                }
            }
        }
        Ok(steps
            .iter()
            .zip(wanted)
            .filter(|(_, w)| *w)
            .map(|(s, _)| s.clone())
            .collect())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "preLie" => Preset::PreLie,
            "averaging" => Preset::Averaging,
            "bialgebra" => Preset::Bialgebra,
            "cybe" => Preset::Cybe,
            "rota-baxter" => Preset::RotaBaxter,
            "all" => Preset::All,
            other => return Err(Error::UnknownCheck(format!("suite {other}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Arg {
    Alg,
    Map,
    Co,
    Form,
    RTensor,
    Rep,
    Weight,
}

impl Arg {
    fn name(self) -> &'static str {
        match self {
            Arg::Alg => "algebra",
            Arg::Map => "map",
            Arg::Co => "coalgebra",
            Arg::Form => "form",
            Arg::RTensor => "rtensor",
            Arg::Rep => "rep",
            Arg::Weight => "rational literal",
        }
    }

    fn of(obj: &Object) -> Arg {
        match obj {
            Object::Algebra(_) => Arg::Alg,
            Object::Map { .. } => Arg::Map,
            Object::Coalgebra { .. } => Arg::Co,
            Object::Form { .. } => Arg::Form,
            Object::RTensor { .. } => Arg::RTensor,
            Object::Rep { .. } => Arg::Rep,
        }
    }
}

pub struct OpDef {
    pub name: &'static str,
    pub category: Category,
    args: &'static [Arg],
    /// Trailing arguments that may be left out.
    optional: usize,
    /// Suffixes appended to the `as` name, with the kind of object registered.
    outputs: &'static [(&'static str, Arg)],
    pub tag: &'static str,
}

use Arg::*;
use Category as C;

const fn op(
    name: &'static str,
    category: Category,
    args: &'static [Arg],
    outputs: &'static [(&'static str, Arg)],
    tag: &'static str,
) -> OpDef {
    OpDef {
        name,
        category,
        args,
        optional: 0,
        outputs,
        tag,
    }
}

pub static OPS: &[OpDef] = &[
    op("check_pre_lie", C::PreLie, &[Alg], &[], "pre-Lie identity"),
    op("check_lie", C::PreLie, &[Alg], &[], "Lie bracket axioms"),
    op(
        "check_leibniz",
        C::PreLie,
        &[Alg],
        &[],
        "left Leibniz identity",
    ),
    op(
        "sub_adjacent",
        C::PreLie,
        &[Alg],
        &[("", Alg)],
        "sub-adjacent Lie algebra",
    ),
    op(
        "check_representation",
        C::PreLie,
        &[Alg, Rep],
        &[],
        "pre-Lie representation",
    ),
    op(
        "check_averaging",
        C::Averaging,
        &[Alg, Map],
        &[],
        "averaging operator",
    ),
    op(
        "induced_leibniz",
        C::Averaging,
        &[Alg, Map],
        &[("", Alg)],
        "induced Leibniz bracket",
    ),
    op(
        "check_avg_representation",
        C::Averaging,
        &[Alg, Map, Rep, Map],
        &[],
        "averaging representation",
    ),
    op(
        "check_S_admissible",
        C::Averaging,
        &[Alg, Map, Map],
        &[],
        "S-admissibility",
    ),
    op(
        "check_beta_admissible",
        C::Averaging,
        &[Alg, Map, Rep, Map],
        &[],
        "beta-admissibility",
    ),
    op(
        "semidirect",
        C::Averaging,
        &[Alg, Map, Rep, Map],
        &[("", Alg), ("_op", Map)],
        "semidirect product",
    ),
    op(
        "regular",
        C::Averaging,
        &[Alg, Map],
        &[("", Rep), ("_alpha", Map)],
        "regular representation",
    ),
    op(
        "coregular",
        C::Averaging,
        &[Alg, Map, Map],
        &[("", Rep), ("_alpha", Map)],
        "coregular representation",
    ),
    op(
        "check_prelie_coalgebra",
        C::Bialgebra,
        &[Co],
        &[],
        "pre-Lie coalgebra",
    ),
    op(
        "check_prelie_bialgebra",
        C::Bialgebra,
        &[Alg, Co],
        &[],
        "pre-Lie bialgebra compatibility",
    ),
    op(
        "check_avg_prelie_bialgebra",
        C::Bialgebra,
        &[Alg, Map, Co, Map],
        &[],
        "averaging pre-Lie bialgebra",
    ),
    op(
        "check_balanced",
        C::Bialgebra,
        &[Alg, Co],
        &[],
        "balanced bialgebra",
    ),
    op(
        "double",
        C::Bialgebra,
        &[Alg, Map, Co, Map],
        &[("", Alg), ("_op", Map), ("_form", Form)],
        "Manin double",
    ),
    OpDef {
        optional: 1,
        ..op(
            "check_quadratic",
            C::Bialgebra,
            &[Alg, Form, Map],
            &[],
            "invariant skew form",
        )
    },
    op(
        "verify_rep_isomorphism",
        C::Bialgebra,
        &[Alg, Map, Form],
        &[],
        "form as representation isomorphism",
    ),
    op(
        "induced_lie_bialgebra",
        C::Bialgebra,
        &[Alg, Map, Co, Map],
        &[("", Alg), ("_delta", Co)],
        "induced Lie bialgebra",
    ),
    op(
        "check_avg_lie_bialgebra",
        C::Bialgebra,
        &[Alg, Co, Map, Map],
        &[],
        "averaging Lie bialgebra",
    ),
    op(
        "check_S_equation",
        C::Cybe,
        &[Alg, RTensor],
        &[],
        "S-equation",
    ),
    op(
        "check_quasi_triangular",
        C::Cybe,
        &[Alg, RTensor],
        &[],
        "quasi-triangular",
    ),
    op(
        "check_factorizable",
        C::Cybe,
        &[Alg, RTensor],
        &[],
        "factorizable",
    ),
    op(
        "check_admissible_cybe",
        C::Cybe,
        &[Alg, Map, Map, RTensor],
        &[],
        "admissible Yang-Baxter equation",
    ),
    op(
        "check_combined_conditions",
        C::Cybe,
        &[Alg, Map, Map, RTensor],
        &[],
        "coboundary bialgebra conditions",
    ),
    op(
        "coboundary",
        C::Cybe,
        &[Alg, Map, Map, RTensor],
        &[("", Co)],
        "coboundary bialgebra",
    ),
    op(
        "check_rb",
        C::RotaBaxter,
        &[Alg, Map, Weight],
        &[],
        "Rota-Baxter identity",
    ),
    op(
        "descendent",
        C::RotaBaxter,
        &[Alg, Map, Weight],
        &[("", Alg)],
        "descendent product",
    ),
    op(
        "check_qrb",
        C::RotaBaxter,
        &[Alg, Map, Weight, Form],
        &[],
        "quadratic Rota-Baxter",
    ),
    op(
        "check_avg_on_qrb",
        C::RotaBaxter,
        &[Alg, Map, Weight, Form, Map],
        &[],
        "averaging on quadratic Rota-Baxter",
    ),
    op(
        "r_from_qrb",
        C::RotaBaxter,
        &[Alg, Map, Weight, Form],
        &[("", RTensor)],
        "r-matrix of a quadratic Rota-Baxter",
    ),
    op(
        "avg_bialgebra_from_qrb",
        C::RotaBaxter,
        &[Alg, Map, Weight, Form, Map],
        &[("", Co), ("_S", Map)],
        "bialgebra of a quadratic Rota-Baxter",
    ),
    op(
        "check_relative_rb",
        C::RotaBaxter,
        &[Alg, Map, Rep, Map, Map],
        &[],
        "relative Rota-Baxter",
    ),
    op(
        "rrb_equiv_rb0",
        C::RotaBaxter,
        &[Alg, Map, Form, Map],
        &[],
        "relative vs weight-zero Rota-Baxter",
    ),
    op(
        "check_equiva3",
        C::RotaBaxter,
        &[Alg, Map, Rep, Map, Map, Map],
        &[],
        "semidirect admissibility equivalence",
    ),
    op(
        "check_lift",
        C::RotaBaxter,
        &[Alg, Map, Rep, Map, Map, Map, Map],
        &[],
        "relative Rota-Baxter lift",
    ),
    op(
        "lift",
        C::RotaBaxter,
        &[Alg, Map, Rep, Map, Map, Map, Map],
        &[
            ("", Alg),
            ("_op", Map),
            ("_delta", Co),
            ("_S", Map),
            ("_r", RTensor),
        ],
        "bialgebra of a relative Rota-Baxter",
    ),
];

pub fn def_of(op: &str) -> Result<&'static OpDef> {
    OPS.iter()
        .find(|s| s.name == op)
        .ok_or_else(|| Error::UnknownCheck(op.to_string()))
}

fn output_names(def: &OpDef, step: &Step) -> Vec<String> {
    match &step.output {
        Some(base) => def
            .outputs
            .iter()
            .map(|(suffix, _)| format!("{base}{suffix}"))
            .collect(),
        None => Vec::new(),
    }
}

/// Static checks: known operation, arity, `as` usage, and that every name
/// exists with the right kind by the time the step runs.
pub fn validate(ws: &Workspace, steps: &[Step]) -> Result<()> {
    let mut known: BTreeMap<String, Arg> = ws
        .names()
        .map(|n| (n.to_string(), Arg::of(ws.get(n).expect("listed"))))
        .collect();
    for step in steps {
        let def = def_of(&step.op)?;
        let (min, max) = (def.args.len() - def.optional, def.args.len());
        if step.args.len() < min || step.args.len() > max {
            return Err(Error::Kind(format!(
                "`{}` takes {} arguments, got {}",
                step.op,
                if min == max {
                    min.to_string()
                } else {
                    format!("{min} to {max}")
                },
                step.args.len()
            )));
        }
        for (arg, want) in step.args.iter().zip(def.args) {
            if *want == Arg::Weight {
                if Rational::parse_literal(arg).is_none() {
                    return Err(Error::Kind(format!("`{arg}` is not a rational literal")));
                }
                continue;
            }
            match known.get(arg) {
                None => return Err(Error::UnknownObject(arg.clone())),
                Some(k) if k != want => {
                    return Err(Error::Kind(format!(
                        "`{arg}` is a {}, expected a {}",
                        k.name(),
                        want.name()
                    )));
                }
                _ => {}
            }
        }
        match (&step.output, def.outputs.is_empty()) {
            (Some(_), true) => {
                return Err(Error::Kind(format!(
                    "`{}` does not build anything",
                    step.op
                )))
            }
            (None, false) => return Err(Error::Kind(format!("`{}` needs `as NAME`", step.op))),
            _ => {}
        }
        for ((suffix, kind), name) in def.outputs.iter().zip(output_names(def, step)) {
            let _ = suffix;
            if known.insert(name.clone(), *kind).is_some() {
                return Err(Error::Kind(format!("`{name}` is already defined")));
            }
        }
    }
    Ok(())
}

/// Runs the preset's steps from the workspace.
pub fn run_preset(ws: &mut Workspace, preset: Preset) -> Result<Report> {
    let steps = preset.select(&ws.steps)?;
    run_suite(ws, &steps)
}

/// Validates, then executes the steps in order. Derived objects are added to
/// `ws`. A step whose inputs come from a failed construction is skipped.
pub fn run_suite(ws: &mut Workspace, steps: &[Step]) -> Result<Report> {
    validate(ws, steps)?;
    let mut missing: BTreeSet<String> = BTreeSet::new();
    let mut records = Vec::with_capacity(steps.len());
    for step in steps {
        let def = def_of(&step.op)?;
        let mut rec = Record {
            check: step.op.clone(),
            args: step.args.clone(),
            output: step.output.clone(),
            tag: def.tag.to_string(),
            status: Status::Pass,
            witness: None,
            message: None,
        };
        if let Some(dep) = step.args.iter().find(|a| missing.contains(*a)) {
            rec.status = Status::Skipped;
            rec.message = Some(format!("`{dep}` was not built"));
            missing.extend(output_names(def, step));
            records.push(rec);
            continue;
        }
        match execute(ws, def, step) {
            Ok(Outcome::Checked(report)) => rec.set_report(&report),
            Ok(Outcome::Built(objects)) => {
                for (name, obj) in objects {
                    ws.insert(name, obj);
                }
            }
            Err(e) => {
                rec.set_error(&e);
                missing.extend(output_names(def, step));
            }
        }
        records.push(rec);
    }
    Ok(Report { records })
}

pub enum Outcome {
    Checked(CheckReport),
    Built(Vec<(String, Object)>),
}

/// Typed access to the arguments of one step.
struct Args<'a> {
    ws: &'a Workspace,
    step: &'a Step,
}

impl Args<'_> {
    fn name(&self, i: usize) -> &str {
        &self.step.args[i]
    }

    /// The algebra, promoted to pre-Lie when it satisfies the identity.
    fn alg(&self, i: usize) -> Result<Algebra> {
        let a = self.ws.algebra(self.name(i))?.clone();
        Ok(a.clone().into_pre_lie().unwrap_or(a))
    }

    fn prelie(&self, i: usize) -> Result<Algebra> {
        self.ws.algebra(self.name(i))?.clone().into_pre_lie()
    }

    fn avg(&self, i: usize) -> Result<AveragingAlgebra> {
        AveragingAlgebra::new(self.ws.algebra(self.name(i))?.clone(), self.map(i + 1)?)
    }

    fn map(&self, i: usize) -> Result<plab_core::Matrix> {
        self.ws.map(self.name(i)).cloned()
    }

    fn co(&self, i: usize) -> Result<plab_core::Coalgebra> {
        let c = self.ws.coalgebra(self.name(i))?.clone();
        Ok(c.clone().into_pre_lie().unwrap_or(c))
    }

    fn form(&self, i: usize) -> Result<plab_core::BilinearForm> {
        self.ws.form(self.name(i)).cloned()
    }

    fn r(&self, i: usize) -> Result<plab_core::RTensor> {
        self.ws.rtensor(self.name(i)).cloned()
    }

    fn rep(&self, i: usize) -> Result<plab_core::Representation> {
        self.ws.rep(self.name(i)).cloned()
    }

    fn weight(&self, i: usize) -> Result<Rational> {
        Rational::parse_literal(self.name(i))
            .ok_or_else(|| Error::Kind(format!("`{}` is not a rational literal", self.name(i))))
    }

    fn avgrep(&self, i: usize) -> Result<AvgRepresentation> {
        Ok(AvgRepresentation {
            rep: self.rep(i)?,
            alpha: self.map(i + 1)?,
        })
    }

    fn bialgebra(&self) -> Result<AvgBialgebra> {
        AvgBialgebra::unchecked(self.alg(0)?, self.map(1)?, self.co(2)?, self.map(3)?)
    }

    fn rb(&self) -> Result<RBOperator> {
        RBOperator::new(self.alg(0)?, self.map(1)?, self.weight(2)?)
    }

    fn qrb(&self) -> Result<QuadraticRB> {
        QuadraticRB::new(self.rb()?, self.form(3)?)
    }
}

/// Runs one step. Errors become failed records.
pub fn execute(ws: &Workspace, def: &OpDef, step: &Step) -> Result<Outcome> {
    let a = Args { ws, step };
    let out = step.output.clone().unwrap_or_default();
    let base = || step.args[0].clone();
    let named = |suffix: &str| format!("{out}{suffix}");
    let checked = |r: Result<CheckReport>| r.map(Outcome::Checked);
    match def.name {
        "check_pre_lie" => checked(Ok(check_pre_lie(&a.alg(0)?))),
        "check_lie" => checked(Ok(check_lie(&a.alg(0)?))),
        "check_leibniz" => checked(Ok(check_leibniz(&a.alg(0)?))),
        "sub_adjacent" => Ok(Outcome::Built(vec![(
            out.clone(),
            Object::Algebra(sub_adjacent_lie(&a.prelie(0)?)?),
        )])),
        "check_representation" => checked(check_prelie_representation(&a.alg(0)?, &a.rep(1)?)),

        "check_averaging" => checked(check_averaging(&a.alg(0)?, &a.map(1)?)),
        "induced_leibniz" => Ok(Outcome::Built(vec![(
            out.clone(),
            Object::Algebra(induced_leibniz(&a.avg(0)?)?),
        )])),
        "check_avg_representation" => {
            let avg = a.avg(0)?;
            checked(check_avg_representation(&avg, &a.avgrep(2)?))
        }
        "check_S_admissible" => checked(check_S_admissible(&a.avg(0)?, &a.map(2)?)),
        "check_beta_admissible" => {
            checked(check_beta_admissible(&a.avg(0)?, &a.rep(2)?, &a.map(3)?))
        }
        "semidirect" => {
            let avg = a.avg(0)?;
            let (alg, op) = semidirect_product(&avg, &a.avgrep(2)?)?.into_parts();
            Ok(Outcome::Built(vec![
                (out.clone(), Object::Algebra(alg)),
                (
                    named("_op"),
                    Object::Map {
                        on: out.clone(),
                        matrix: op,
                    },
                ),
            ]))
        }
        "regular" | "coregular" => {
            let avg = a.avg(0)?;
            let ar = if def.name == "regular" {
                regular_representation(&avg)
            } else {
                coregular_representation(&avg, &a.map(2)?)?
            };
            Ok(Outcome::Built(vec![
                (
                    out.clone(),
                    Object::Rep {
                        of: base(),
                        rep: ar.rep,
                    },
                ),
                (
                    named("_alpha"),
                    Object::Map {
                        on: base(),
                        matrix: ar.alpha,
                    },
                ),
            ]))
        }

        "check_prelie_coalgebra" => checked(Ok(check_prelie_coalgebra(&a.co(0)?))),
        "check_prelie_bialgebra" => checked(check_prelie_bialgebra(
            &a.prelie(0)?,
            &a.co(1)?.into_pre_lie()?,
        )),
        "check_avg_prelie_bialgebra" => checked(check_avg_prelie_bialgebra(&a.bialgebra()?)),
        "check_balanced" => checked(check_balanced(&a.alg(0)?, &a.co(1)?)),
        "double" => {
            let mt = bialgebra_to_manin(&a.bialgebra()?)?;
            let (alg, op) = mt.total.into_parts();
            Ok(Outcome::Built(vec![
                (out.clone(), Object::Algebra(alg)),
                (
                    named("_op"),
                    Object::Map {
                        on: out.clone(),
                        matrix: op,
                    },
                ),
                (
                    named("_form"),
                    Object::Form {
                        on: out.clone(),
                        form: mt.omega,
                    },
                ),
            ]))
        }
        "check_quadratic" => {
            let p = if step.args.len() > 2 {
                Some(a.map(2)?)
            } else {
                None
            };
            checked(check_quadratic(&a.prelie(0)?, &a.form(1)?, p.as_ref()))
        }
        "verify_rep_isomorphism" => checked(verify_rep_isomorphism(&a.avg(0)?, &a.form(2)?)),
        "induced_lie_bialgebra" => {
            let lb = induced_lie_bialgebra(&a.bialgebra()?)?;
            Ok(Outcome::Built(vec![
                (out.clone(), Object::Algebra(lb.lie)),
                (
                    named("_delta"),
                    Object::Coalgebra {
                        on: out.clone(),
                        co: lb.delta,
                    },
                ),
            ]))
        }
        "check_avg_lie_bialgebra" => {
            let lie = ws.algebra(a.name(0))?.clone();
            checked(check_avg_lie_bialgebra(
                &lie,
                ws.coalgebra(a.name(1))?,
                &a.map(2)?,
                &a.map(3)?,
            ))
        }

        "check_S_equation" => checked(check_S_equation(&a.alg(0)?, &a.r(1)?)),
        "check_quasi_triangular" => checked(check_quasi_triangular(&a.alg(0)?, &a.r(1)?)),
        "check_factorizable" => checked(check_factorizable(&a.alg(0)?, &a.r(1)?)),
        "check_admissible_cybe" => checked(check_admissible_cybe(&a.avg(0)?, &a.map(2)?, &a.r(3)?)),
        "check_combined_conditions" => {
            checked(check_combined_conditions(&a.avg(0)?, &a.map(2)?, &a.r(3)?))
        }
        "coboundary" => {
            let bi = build_coboundary_avg_bialgebra(&a.avg(0)?, &a.map(2)?, &a.r(3)?)?;
            Ok(Outcome::Built(vec![(
                out.clone(),
                Object::Coalgebra {
                    on: base(),
                    co: bi.co,
                },
            )]))
        }

        "check_rb" => checked(check_rb(&a.alg(0)?, &a.map(1)?, &a.weight(2)?)),
        "descendent" => Ok(Outcome::Built(vec![(
            out.clone(),
            Object::Algebra(descendent_product(&a.rb()?)?),
        )])),
        "check_qrb" => checked(check_qrb(
            &RBOperator {
                alg: a.alg(0)?,
                b: a.map(1)?,
                weight: a.weight(2)?,
            },
            &a.form(3)?,
        )),
        "check_avg_on_qrb" => checked(check_avg_on_qrb(&a.qrb()?, &a.map(4)?)),
        "r_from_qrb" => Ok(Outcome::Built(vec![(
            out.clone(),
            Object::RTensor {
                on: base(),
                r: build_r_from_qrb(&a.qrb()?)?,
            },
        )])),
        "avg_bialgebra_from_qrb" => {
            let bi = avg_bialgebra_from_qrb(&a.qrb()?, &a.map(4)?)?;
            Ok(Outcome::Built(vec![
                (
                    out.clone(),
                    Object::Coalgebra {
                        on: base(),
                        co: bi.co,
                    },
                ),
                (
                    named("_S"),
                    Object::Map {
                        on: base(),
                        matrix: bi.s,
                    },
                ),
            ]))
        }
        "check_relative_rb" => {
            let avg = a.avg(0)?;
            checked(check_relative_rb(&avg, &a.avgrep(2)?, &a.map(4)?))
        }
        "rrb_equiv_rb0" => checked(rrb_equiv_rb0(&a.avg(0)?, &a.form(2)?, &a.map(3)?)),
        "check_equiva3" => checked(check_equiva3(
            &a.avg(0)?,
            &a.rep(2)?,
            &a.map(3)?,
            &a.map(4)?,
            &a.map(5)?,
        )),
        "check_lift" => {
            let avg = a.avg(0)?;
            let (_, report) = lift_T_to_r(&avg, &a.avgrep(2)?, &a.map(4)?, &a.map(5)?, &a.map(6)?)?;
            checked(Ok(report))
        }
        "lift" => {
            let avg = a.avg(0)?;
            let t = a.map(4)?;
            let bi = lift_T_to_bialgebra(&avg, &a.avgrep(2)?, &t, &a.map(5)?, &a.map(6)?)?;
            Ok(Outcome::Built(vec![
                (out.clone(), Object::Algebra(bi.alg)),
                (
                    named("_op"),
                    Object::Map {
                        on: out.clone(),
                        matrix: bi.p,
                    },
                ),
                (
                    named("_delta"),
                    Object::Coalgebra {
                        on: out.clone(),
                        co: bi.co,
                    },
                ),
                (
                    named("_S"),
                    Object::Map {
                        on: out.clone(),
                        matrix: bi.s,
                    },
                ),
                (
                    named("_r"),
                    Object::RTensor {
                        on: out.clone(),
                        r: lift_tensor(&t),
                    },
                ),
            ]))
        }
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Runs a single construction against `ws` and registers its results;
/// dependencies must already be present.
pub fn derive(ws: &mut Workspace, step: &Step) -> Result<Vec<String>> {
    validate(ws, std::slice::from_ref(step))?;
    let def = def_of(&step.op)?;
    if def.outputs.is_empty() {
        return Err(Error::Kind(format!(
            "`{}` is a check, not a construction",
            step.op
        )));
    }
    let Outcome::Built(objects) = execute(ws, def, step)? else {
        unreachable!("constructions build objects")
    };
    let names = objects.iter().map(|(n, _)| n.clone()).collect();
    for (name, obj) in objects {
        ws.insert(name, obj);
    }
    Ok(names)
}
