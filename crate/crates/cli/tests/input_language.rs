use dissect_cli::ast::{AlgebraDef, Bracket, Command, DualKind, InvolutionDef, SpecFile, Stmt, KEYWORDS};
use dissect_cli::{parse_spec, print_spec};
use proptest::prelude::*;
use qlinalg::Rational;

/// One generator step: a selector and a few free parameters.
type Op = (u8, u8, u8, u8, i8, u8);

struct Builder {
    stmts: Vec<Stmt>,
    /// (name, dim, def)
    algebras: Vec<(String, usize, AlgebraDef)>,
    /// (name, algebra)
    involutions: Vec<(String, String)>,
    names: Vec<String>,
}

impl Builder {
    fn name(&mut self) -> String {
        let i = self.stmts.len();
        let base = self.names.get(i % self.names.len().max(1)).cloned().unwrap_or_else(|| "x".into());
        format!("{base}{i}")
    }

    fn rational(n: i8, d: u8) -> Rational {
        let n = if n == 0 { 1 } else { n };
        Rational::new((n as i64).into(), ((d % 5) as i64 + 1).into())
    }

    fn algebra(&mut self, (kind, a, b, c, n, d): Op) {
        let def = match kind % 6 {
            0 => {
                let total = 2 + (a % 5) as usize;
                let q = (b as usize) % (total + 1);
                AlgebraDef::So(total - q, q)
            }
            1 => AlgebraDef::Sl2R,
            2 => AlgebraDef::Su2,
            3 => AlgebraDef::Sl2C,
            4 if !self.algebras.is_empty() => {
                let x = self.algebras[a as usize % self.algebras.len()].0.clone();
                let y = self.algebras[b as usize % self.algebras.len()].0.clone();
                AlgebraDef::Sum(x, y)
            }
            _ => {
                let rows = (0..1 + (c % 3) as usize)
                    .map(|r| {
                        let i = 1 + (a as usize + r) % 4;
                        let j = 1 + (i + (b as usize % 3)) % 4;
                        Bracket {
                            i,
                            j,
                            k: 1 + (c as usize + r) % 4,
                            c: Self::rational(n.wrapping_add(r as i8), d),
                        }
                    })
                    .collect();
                AlgebraDef::Constants(rows)
            }
        };
        let dim = self.dim(&def);
        let name = self.name();
        self.algebras.push((name.clone(), dim, def.clone()));
        self.stmts.push(Stmt::Algebra { name, def });
    }

    fn dim(&self, def: &AlgebraDef) -> usize {
        let of = |n: &str| self.algebras.iter().find(|a| a.0 == n).map(|a| a.1).unwrap_or(0);
        match def {
            AlgebraDef::So(p, q) => (p + q) * (p + q - 1) / 2,
            AlgebraDef::Sl2R | AlgebraDef::Su2 => 3,
            AlgebraDef::Sl2C => 6,
            AlgebraDef::Sum(a, b) => of(a) + of(b),
            AlgebraDef::Constants(rows) => rows.iter().map(|b| b.i.max(b.j).max(b.k)).max().unwrap_or(0),
        }
    }

    fn involution(&mut self, (_, a, b, c, n, d): Op) {
        if self.algebras.is_empty() {
            return;
        }
        let (on, dim, def) = self.algebras[a as usize % self.algebras.len()].clone();
        let inv = match def {
            AlgebraDef::So(p, q) if b % 2 == 0 => InvolutionDef::Reflect(1 + c as usize % (p + q)),
            AlgebraDef::So(p, q) => {
                let mut s: Vec<i8> = (0..p + q).map(|i| if (c >> (i % 8)) & 1 == 1 { -1 } else { 1 }).collect();
                if s.iter().all(|&x| x == s[0]) {
                    s[0] = -s[0];
                }
                InvolutionDef::Signs(s)
            }
            AlgebraDef::Sum(x, _) => {
                let base = self.involutions.iter().find(|(_, o)| *o == x).map(|(n, _)| n.clone());
                match base {
                    Some(s) if b % 2 == 0 => InvolutionDef::SwapTwist(s),
                    _ => InvolutionDef::Flip,
                }
            }
            _ => InvolutionDef::Matrix(
                (0..dim)
                    .map(|i| (0..dim).map(|j| if i == j { Self::rational(n, d) } else { Rational::from_integer(((i + j) as i64 % 3).into()) }).collect())
                    .collect(),
            ),
        };
        let name = self.name();
        self.involutions.push((name.clone(), on.clone()));
        self.stmts.push(Stmt::Involution { name, on, def: inv });
    }

    fn on(&self, g: &str) -> Vec<String> {
        self.involutions.iter().filter(|(_, o)| o == g).map(|(n, _)| n.clone()).collect()
    }

    fn command(&mut self, (kind, a, b, c, _, _): Op) {
        let cmd = match kind % 5 {
            0 | 1 if !self.algebras.is_empty() => {
                let g = self.algebras[a as usize % self.algebras.len()].0.clone();
                let invs = self.on(&g);
                let take = (b as usize % 3).min(invs.len());
                let with: Vec<String> = invs.iter().cycle().skip(c as usize).take(take).cloned().collect();
                let kind = if kind % 5 == 0 && !with.is_empty() { DualKind::Cartan } else { DualKind::Compact };
                Command::Dual { kind, algebra: g, with }
            }
            2 if !self.involutions.is_empty() => {
                let (tau, on) = self.involutions[a as usize % self.involutions.len()].clone();
                let invs = self.on(&on);
                let sigma = invs[b as usize % invs.len()].clone();
                Command::CheckDissecting { tau, sigma }
            }
            3 => {
                let total = 2 + (a % 6) as usize;
                let q = b as usize % (total + 1);
                Command::Classify { p: total - q, q }
            }
            _ => Command::VerifyPaper { max_n: c as usize % 8 },
        };
        self.stmts.push(Stmt::Command(cmd));
    }
}

fn build(names: Vec<String>, ops: Vec<Op>) -> SpecFile {
    let mut b = Builder {
        stmts: Vec::new(),
        algebras: Vec::new(),
        involutions: Vec::new(),
        names,
    };
    for op in ops {
        match op.0 % 3 {
            0 => b.algebra((op.1, op.2, op.3, op.4 as u8, op.4, op.5)),
            1 => b.involution(op),
            _ => b.command((op.1, op.2, op.3, op.5, op.4, op.5)),
        }
    }
    SpecFile { stmts: b.stmts }
}

fn spec_strategy() -> impl Strategy<Value = SpecFile> {
    let name = "[a-zA-Z_][a-zA-Z0-9_]{0,6}".prop_filter("not a keyword", |s| !KEYWORDS.contains(&s.as_str()));
    (
        prop::collection::vec(name, 1..4),
        prop::collection::vec(any::<Op>(), 0..24),
    )
        .prop_map(|(names, ops)| build(names, ops))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parse_inverts_print(spec in spec_strategy()) {
        let text = print_spec(&spec);
        let back = parse_spec(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(print_spec(&back), text);
    }

    #[test]
    fn whitespace_and_comments_do_not_matter(spec in spec_strategy()) {
        let text = print_spec(&spec);
        let noisy: String = text
            .lines()
            .map(|l| format!("  {}   # note\n\n", l.replace(' ', "  ")))
            .collect();
        prop_assert_eq!(parse_spec(&noisy).map_err(|e| TestCaseError::fail(e.to_string()))?, spec);
    }
}

#[test]
fn keywords_are_rejected_as_names() {
    for kw in KEYWORDS {
        let text = format!("algebra {kw} = sl2R\n");
        assert!(parse_spec(&text).is_err(), "'{kw}' accepted as a name");
    }
}

#[test]
fn diagnostics_carry_positions() {
    let e = parse_spec("algebra g = so(2,3)\ninvolution t on g = reflect 9\n").unwrap_err();
    assert_eq!(e.pos.map(|p| (p.line, p.col)), Some((2, 1)));
    assert!(e.message.contains("axis 9"), "{e}");

    let e = parse_spec("algebra g = so(2,3)\ncheck dissecting t s\n").unwrap_err();
    assert!(e.to_string().starts_with("2:"), "{e}");
    assert!(e.message.contains("unbound name 't'"), "{e}");

    let e = parse_spec("algebra g = so(2,3").unwrap_err();
    assert_eq!(e.pos, None);
    assert_eq!(e.to_string(), "end of input: expected ')'");
}

#[test]
fn generator_reaches_every_statement_form() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..400 {
        let spec = spec_strategy().new_tree(&mut runner).unwrap().current();
        for s in &spec.stmts {
            let form = match s {
                Stmt::Algebra { def, .. } => format!("{def:?}").split(['(', ' ']).next().unwrap().to_string(),
                Stmt::Involution { def, .. } => format!("{def:?}").split(['(', ' ']).next().unwrap().to_string(),
                Stmt::Command(c) => format!("{c:?}").split(['(', ' ']).next().unwrap().to_string(),
            };
            seen.insert(form);
        }
    }
    for form in [
        "So", "Sl2R", "Su2", "Sl2C", "Sum", "Constants", "Reflect", "Signs", "Flip", "SwapTwist", "Matrix",
        "CheckDissecting", "Dual", "Classify", "VerifyPaper",
    ] {
        assert!(seen.contains(form), "{form} never generated: {seen:?}");
    }
}
