use expratio::classify::TableRow;
use expratio::{decision_table, InvariantName};
use serde::Serialize;

use crate::Format;

#[derive(Debug, clap::Args)]
pub struct Args {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Serialize)]
struct JsonRow {
    interval: &'static str,
    direction: &'static str,
    #[serde(rename = "A")]
    a: Option<&'static str>,
    #[serde(rename = "B")]
    b: Option<&'static str>,
    #[serde(rename = "C")]
    c: Option<&'static str>,
    #[serde(rename = "D")]
    d: Option<&'static str>,
    #[serde(rename = "E")]
    e: Option<&'static str>,
    ordering: &'static str,
}

fn json_row(r: &TableRow) -> JsonRow {
    let c = |i: usize| r.constraints[i].map(|s| s.ascii());
    JsonRow {
        interval: r.interval.ascii(),
        direction: r.direction.as_str(),
        a: c(0),
        b: c(1),
        c: c(2),
        d: c(3),
        e: c(4),
        ordering: r.order.ascii(),
    }
}

pub fn run(args: Args) -> String {
    let rows = decision_table();
    match args.format {
        Format::Csv => {
            let mut out = String::from("interval,direction,A,B,C,D,E,ordering\n");
            for r in &rows {
                let cells: Vec<&str> = r
                    .constraints
                    .iter()
                    .map(|c| c.map_or("", |s| s.ascii()))
                    .collect();
                out += &format!(
                    "{},{},{},{}\n",
                    r.interval.ascii(),
                    r.direction.as_str(),
                    cells.join(","),
                    r.order.ascii()
                );
            }
            out
        }
        Format::Json => {
            let doc: Vec<JsonRow> = rows.iter().map(json_row).collect();
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut out = format!("{:<9} {:<11}", "Interval", "Direction");
            for n in InvariantName::ALL {
                out += &format!(" {:<3}", n.as_str());
            }
            out += " Ordering\n";
            for r in &rows {
                out += &format!("{:<9} {:<11}", r.interval.symbol(), r.direction.as_str());
                for c in r.constraints {
                    out += &format!(" {:<3}", c.map_or("", |s| s.symbol()));
                }
                out += &format!(" {} or {}\n", r.order.symbol(), p_order(r.order));
            }
            out
        }
    }
}

fn p_order(order: expratio::LambdaOrder) -> &'static str {
    match order {
        expratio::LambdaOrder::LambdaGreater => "u>v",
        expratio::LambdaOrder::LambdaLess => "u<v",
    }
}
