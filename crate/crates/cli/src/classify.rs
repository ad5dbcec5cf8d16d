use expratio::classify::{Condition, InvariantName, ThirdOrderKind};
use expratio::{
    classify_h, classify_p, classify_q_report, ClassificationReport, ConvexityKind, HParams,
    Interval, LambdaOrder, Monotonicity, PParams, QParams,
};
use serde::Serialize;

use crate::output::{exact, sig, Style};
use crate::{Failure, Format, Function};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// H, P or Q
    #[arg(value_enum, ignore_case = true)]
    function: Function,

    /// Parameters: α β λ μ (H), r s u v (P), α β (Q)
    #[arg(required = true, allow_negative_numbers = true)]
    params: Vec<f64>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize)]
struct Document<'a> {
    function: &'a str,
    params: &'a [f64],
    report: &'a ClassificationReport,
}

fn report_for(function: Function, p: &[f64]) -> Result<ClassificationReport, Failure> {
    if !matches!(function, Function::H | Function::P | Function::Q) {
        return Err(Failure::Usage(format!(
            "classify supports H, P and Q, not {}",
            function.name()
        )));
    }
    if p.len() != function.arity() {
        return Err(Failure::Usage(format!(
            "{} takes {} parameters, got {}",
            function.name(),
            function.arity(),
            p.len()
        )));
    }
    Ok(match function {
        Function::H => classify_h(&HParams::new(p[0], p[1], p[2], p[3])?),
        Function::P => classify_p(&PParams::new(p[0], p[1], p[2], p[3])?),
        _ => classify_q_report(&QParams::new(p[0], p[1])?),
    })
}

fn conditions(cs: &[Condition]) -> String {
    cs.iter()
        .map(|c| format!("{}{}", c.invariant.as_str(), c.sign.symbol()))
        .collect::<Vec<_>>()
        .join(", ")
}

fn order_label(function: Function, order: LambdaOrder) -> &'static str {
    match (function, order) {
        (Function::P, LambdaOrder::LambdaGreater) => "u>v",
        (Function::P, LambdaOrder::LambdaLess) => "u<v",
        (_, o) => o.symbol(),
    }
}

fn text(function: Function, params: &[f64], r: &ClassificationReport) -> String {
    let style = Style::detect();
    let shown: Vec<String> = params.iter().map(|&x| sig(x, 6)).collect();
    let mut out = style.bold(&format!("{}({})", function.name(), shown.join(", "))) + "\n";

    // Q is classified through an image of H with λ > μ, which only reads A, C and E
    let relevant = |name: InvariantName| {
        function != Function::Q || !matches!(name, InvariantName::B | InvariantName::D)
    };
    out += "invariants:";
    for (name, x) in r.invariants.iter().filter(|(n, _)| relevant(*n)) {
        out += &format!("  {} = {}", name.as_str(), sig(x, 6));
    }
    out += "\n";

    match function {
        Function::Q => out += "monotonicity:\n",
        _ => {
            let order = r.monotonicity.whole_line.order;
            out += &format!("monotonicity ({}):\n", order_label(function, order));
        }
    }
    for interval in Interval::ALL {
        let v = r.monotonicity.get(interval);
        let kind = match v.kind {
            Monotonicity::NonMonotonic => style.bad(v.kind.as_str()),
            _ => style.good(v.kind.as_str()),
        };
        let why = match v.item {
            Some(item) => format!("item {item}: {}", conditions(&v.fired_conditions)),
            None => format!("fails {}", conditions(&v.blocked_by)),
        };
        // pad on the plain word so colour codes do not skew the columns
        let pad = " ".repeat(14usize.saturating_sub(v.kind.as_str().len()));
        out += &format!("  {:<7} {kind}{pad}{why}\n", interval.symbol());
    }

    let c = &r.convexity;
    let convexity = match c.kind {
        ConvexityKind::LogConvex => "log-convex on (−∞,∞)".to_string(),
        ConvexityKind::LogConcave => "log-concave on (−∞,∞)".to_string(),
        ConvexityKind::LogAffine => {
            format!(
                "log-affine: H(t) = e^({}·t)",
                sig(c.exponent.unwrap_or(f64::NAN), 6)
            )
        }
        ConvexityKind::NotCovered => "not covered".to_string(),
    };
    out += &format!("log-convexity: {convexity} (ratio {})\n", sig(c.ratio, 6));

    let third = match r.third_order.kind {
        ThirdOrderKind::ConvexPosConcaveNeg => "3-log-convex on (0,∞), 3-log-concave on (−∞,0)",
        ThirdOrderKind::ConcavePosConvexNeg => "3-log-concave on (0,∞), 3-log-convex on (−∞,0)",
        ThirdOrderKind::NotCovered => "not covered",
    };
    out += &format!("third order: {third} (sufficient condition)\n");

    if r.zero_band_hits.iter().any(|n| relevant(*n)) {
        let hits: Vec<&str> = r
            .zero_band_hits
            .iter()
            .filter(|n| relevant(**n))
            .map(|n| n.as_str())
            .collect();
        let (noun, pronoun) = if hits.len() == 1 {
            ("is", "it")
        } else {
            ("are", "them")
        };
        out += &style.bad(&format!(
            "warning: {} {noun} inside the zero band; verdicts testing {pronoun} sit on a boundary",
            hits.join(", ")
        ));
        out += "\n";
    }
    out
}

/// The name a unit variant has in the JSON encoding.
fn snake<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        _ => String::new(),
    }
}

fn csv(r: &ClassificationReport) -> String {
    let mut out = String::from("field,value\n");
    for (name, x) in r.invariants.iter() {
        out += &format!("{},{}\n", name.as_str(), exact(x));
    }
    for interval in Interval::ALL {
        out += &format!(
            "{},{}\n",
            interval.ascii(),
            r.monotonicity.get(interval).kind.as_str()
        );
    }
    out += &format!("ordering,{}\n", r.monotonicity.whole_line.order.ascii());
    out += &format!("convexity,{}\n", snake(&r.convexity.kind));
    out += &format!("ratio,{}\n", exact(r.convexity.ratio));
    out += &format!("third_order,{}\n", snake(&r.third_order.kind));
    let hits: Vec<&str> = r.zero_band_hits.iter().map(|n| n.as_str()).collect();
    out += &format!("zero_band_hits,{}\n", hits.join(" "));
    out
}

pub fn run(args: Args) -> Result<String, Failure> {
    let report = report_for(args.function, &args.params)?;
    Ok(match args.format {
        Format::Text => text(args.function, &args.params, &report),
        Format::Csv => csv(&report),
        Format::Json => {
            let doc = Document {
                function: args.function.name(),
                params: &args.params,
                report: &report,
            };
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
    })
}
