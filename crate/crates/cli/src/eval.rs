use expratio::{
    eval_f, eval_g, eval_h, eval_p, eval_q, FParams, GParams, HParams, PParams, QParams,
};
use serde::Serialize;

use crate::output::{exact, sig};
use crate::{Failure, Format, Function};

#[derive(Debug, clap::Args)]
#[command(group = clap::ArgGroup::new("points").required(true).args(["t", "range"]))]
pub struct Args {
    #[arg(value_enum, ignore_case = true)]
    function: Function,

    /// Parameters: a b (G, F), α β (Q), α β λ μ (H), r s u v (P)
    #[arg(required = true, allow_negative_numbers = true)]
    params: Vec<f64>,

    /// Single evaluation point
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,

    /// COUNT points from START to STOP inclusive
    #[arg(long, num_args = 3, value_names = ["START", "STOP", "COUNT"], allow_negative_numbers = true)]
    range: Option<Vec<f64>>,

    /// Log-spaced magnitudes START..STOP, mirrored to negative t
    #[arg(long, requires = "range")]
    log: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Evaluator {
    G(GParams),
    F(FParams),
    Q(QParams),
    H(HParams),
    P(PParams),
}

impl Evaluator {
    fn new(function: Function, p: &[f64]) -> Result<Self, Failure> {
        if p.len() != function.arity() {
            return Err(Failure::Usage(format!(
                "{} takes {} parameters, got {}",
                function.name(),
                function.arity(),
                p.len()
            )));
        }
        Ok(match function {
            Function::G => Self::G(GParams::new(p[0], p[1])?),
            Function::F => Self::F(FParams::new(p[0], p[1])?),
            Function::Q => Self::Q(QParams::new(p[0], p[1])?),
            Function::H => Self::H(HParams::new(p[0], p[1], p[2], p[3])?),
            Function::P => Self::P(PParams::new(p[0], p[1], p[2], p[3])?),
        })
    }

    fn at(&self, t: f64) -> expratio::Result<f64> {
        match self {
            Self::G(p) => eval_g(p, t),
            Self::F(p) => eval_f(p, t),
            Self::Q(p) => eval_q(p, t),
            Self::H(p) => eval_h(p, t),
            Self::P(p) => eval_p(p, t),
        }
    }
}

fn count_of(x: f64) -> Result<usize, Failure> {
    if x >= 1.0 && x.fract() == 0.0 && x <= 1e7 {
        Ok(x as usize)
    } else {
        Err(Failure::Usage(format!(
            "range COUNT must be a positive integer (got {x})"
        )))
    }
}

/// The evaluation points requested on the command line, ascending for ranges.
fn points(args: &Args) -> Result<Vec<f64>, Failure> {
    if let Some(t) = args.t {
        if !t.is_finite() {
            return Err(Failure::Usage(format!("t must be finite (got {t})")));
        }
        return Ok(vec![t]);
    }
    let r = args.range.as_deref().expect("clap enforces --t or --range");
    let (start, stop, count) = (r[0], r[1], count_of(r[2])?);
    if !(start.is_finite() && stop.is_finite()) {
        return Err(Failure::Usage("range bounds must be finite".into()));
    }
    let lerp = |a: f64, b: f64, i: usize| match count {
        1 => a,
        _ if i == count - 1 => b,
        _ => a + (b - a) * i as f64 / (count - 1) as f64,
    };
    if !args.log {
        return Ok((0..count).map(|i| lerp(start, stop, i)).collect());
    }
    if !(start > 0.0 && stop > start) {
        return Err(Failure::Usage("--log needs 0 < START < STOP".into()));
    }
    let mags: Vec<f64> = (0..count)
        .map(|i| match i {
            0 => start,
            _ if i == count - 1 => stop,
            _ => lerp(start.ln(), stop.ln(), i).exp(),
        })
        .collect();
    Ok(mags
        .iter()
        .rev()
        .map(|m| -m)
        .chain(mags.iter().copied())
        .collect())
}

#[derive(Serialize)]
struct Row {
    t: f64,
    value: f64,
}

#[derive(Serialize)]
struct Document<'a> {
    function: &'a str,
    params: &'a [f64],
    rows: Vec<Row>,
}

pub fn run(args: Args) -> Result<String, Failure> {
    let f = Evaluator::new(args.function, &args.params)?;
    let rows = points(&args)?
        .into_iter()
        .map(|t| Ok(Row { t, value: f.at(t)? }))
        .collect::<Result<Vec<_>, Failure>>()?;
    let mut out = String::new();
    match args.format {
        Format::Text => {
            for r in &rows {
                out += &format!("{:>13} {:>13}\n", sig(r.t, 6), sig(r.value, 6));
            }
        }
        Format::Csv => {
            out += "t,value\n";
            for r in &rows {
                out += &format!("{},{}\n", exact(r.t), exact(r.value));
            }
        }
        Format::Json => {
            let doc = Document {
                function: args.function.name(),
                params: &args.params,
                rows,
            };
            out = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
        }
    }
    Ok(out)
}
