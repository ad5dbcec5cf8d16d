use expratio::oracle::{cross_validate, Claim, CrossValidationReport};

use crate::output::{exact, sig, Style};
use crate::{Failure, Format};

#[derive(Debug, clap::Args)]
pub struct Args {
    /// Number of random parameter draws
    #[arg(long, default_value_t = 1000)]
    draws: usize,

    #[arg(long, default_value_t = 42)]
    seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn claim(c: &Claim) -> String {
    match serde_json::to_value(c) {
        Ok(serde_json::Value::Object(m)) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or_default()))
            .collect(),
        _ => String::new(),
    }
}

fn text(r: &CrossValidationReport) -> String {
    let style = Style::detect();
    let mut out = format!(
        "draws {}  seed {}\nagreements {}  boundary skips {}  contradictions {}\n",
        r.draws,
        r.seed,
        r.agreements,
        r.boundary_skips,
        r.contradictions.len()
    );
    for c in &r.contradictions {
        let p: Vec<String> = c.params.iter().map(|&x| exact(x)).collect();
        let w: Vec<String> = c.oracle.witness_points.iter().map(|&x| sig(x, 6)).collect();
        out += &style.bad(&format!(
            "draw {}: H({}) on {}: classifier {} but oracle {:?} (witnesses {})",
            c.draw,
            p.join(", "),
            c.interval.symbol(),
            claim(&c.claim),
            c.oracle.direction,
            w.join(", ")
        ));
        out += "\n";
    }
    if r.contradictions.is_empty() {
        out += &style.good("no contradictions");
        out += "\n";
    }
    out
}

fn csv(r: &CrossValidationReport) -> String {
    let mut out = String::from("draw,alpha,beta,lambda,mu,interval,claim,oracle,max_violation\n");
    for c in &r.contradictions {
        let p: Vec<String> = c.params.iter().map(|&x| exact(x)).collect();
        let oracle = serde_json::to_value(c.oracle.direction).unwrap_or_default();
        out += &format!(
            "{},{},{},{},{},{}\n",
            c.draw,
            p.join(","),
            c.interval.ascii(),
            claim(&c.claim),
            oracle.as_str().unwrap_or_default(),
            exact(c.oracle.max_violation)
        );
    }
    out
}

pub fn run(args: Args) -> Result<String, Failure> {
    let report = cross_validate(args.draws, args.seed)?;
    let out = match args.format {
        Format::Text => text(&report),
        Format::Csv => csv(&report),
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
    };
    if report.contradictions.is_empty() {
        Ok(out)
    } else {
        Err(Failure::Contradictions(out))
    }
}
