//! Canonical formatting of input scripts; `parse_spec(&print(s)) == s`.

use std::fmt::Write;

use qlinalg::Rational;

use crate::ast::{AlgebraDef, Command, DualKind, InvolutionDef, SpecFile, Stmt};

fn rows<'a>(rows: impl Iterator<Item = Vec<&'a Rational>>) -> String {
    let mut out = String::from("{");
    for row in rows {
        out.push(' ');
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push(';');
    }
    out.push_str(" }");
    out
}

pub fn print_stmt(stmt: &Stmt) -> String {
    match stmt {
        Stmt::Algebra { name, def } => {
            let d = match def {
                AlgebraDef::So(p, q) => format!("so({p},{q})"),
                AlgebraDef::Sl2R => "sl2R".into(),
                AlgebraDef::Su2 => "su2".into(),
                AlgebraDef::Sl2C => "sl2C".into(),
                AlgebraDef::Sum(a, b) => format!("sum({a}, {b})"),
                AlgebraDef::Constants(bs) => {
                    let idx: Vec<[Rational; 3]> = bs
                        .iter()
                        .map(|b| [b.i, b.j, b.k].map(|x| Rational::from_integer(x.into())))
                        .collect();
                    let body = rows(
                        bs.iter()
                            .zip(&idx)
                            .map(|(b, ix)| vec![&ix[0], &ix[1], &ix[2], &b.c]),
                    );
                    format!("constants {body}")
                }
            };
            format!("algebra {name} = {d}")
        }
        Stmt::Involution { name, on, def } => {
            let d = match def {
                InvolutionDef::Reflect(j) => format!("reflect {j}"),
                InvolutionDef::Signs(s) => {
                    let body: String = s.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect();
                    format!("signs({body})")
                }
                InvolutionDef::Flip => "flip".into(),
                InvolutionDef::SwapTwist(s) => format!("swap_twist({s})"),
                InvolutionDef::Matrix(m) => format!("matrix {}", rows(m.iter().map(|r| r.iter().collect()))),
            };
            format!("involution {name} on {on} = {d}")
        }
        Stmt::Command(c) => match c {
            Command::CheckDissecting { tau, sigma } => format!("check dissecting {tau} {sigma}"),
            Command::Dual { kind, algebra, with } => {
                let mut s = format!(
                    "dual {} {algebra}",
                    match kind {
                        DualKind::Cartan => "cartan",
                        DualKind::Compact => "compact",
                    }
                );
                for w in with {
                    let _ = write!(s, " with {w}");
                }
                s
            }
            Command::Classify { p, q } => format!("classify so({p},{q})"),
            Command::VerifyPaper { max_n } => format!("verify paper {max_n}"),
        },
    }
}

/// One statement per line.
pub fn print_spec(spec: &SpecFile) -> String {
    spec.stmts.iter().map(|s| print_stmt(s) + "\n").collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_spec;

    #[test]
    fn canonical_text() {
        let text = "algebra g = so(2,3)\ninvolution t on g = reflect 1\ninvolution s on g = signs(++--+)\ncheck dissecting t s\ndual cartan g with t with s\n";
        let spec = parse_spec(text).unwrap();
        assert_eq!(print_spec(&spec), text);
    }

    #[test]
    fn blocks_round_trip() {
        let text = "algebra a = constants { 1 2 3 2; 2 3 1 -1/2; }\ninvolution m on a = matrix { 1 0 0; 0 -1 0; 0 0 -1; }\n";
        let spec = parse_spec(text).unwrap();
        assert_eq!(print_spec(&spec), text);
        assert_eq!(parse_spec(&print_spec(&spec)).unwrap(), spec);
    }
}
