//! Recursive-descent parser and semantic validation for input scripts.

use std::collections::HashMap;

use qlinalg::{parse_rational, Rational};

use crate::ast::{is_keyword, AlgebraDef, Bracket, Command, DualKind, InvolutionDef, SpecFile, Stmt};
use crate::error::Diagnostic;
use crate::lexer::{tokenize, Pos, Tok, Token};

/// Parses and validates an input script.
pub fn parse_spec(text: &str) -> Result<SpecFile, Diagnostic> {
    let located = parse_syntax(text)?;
    validate(&located)?;
    Ok(SpecFile {
        stmts: located.into_iter().map(|(_, s)| s).collect(),
    })
}

/// Syntax only: statements with their starting positions.
pub fn parse_syntax(text: &str) -> Result<Vec<(Pos, Stmt)>, Diagnostic> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, at: 0 };
    let mut out = Vec::new();
    while let Some(t) = p.peek() {
        let pos = t.pos;
        out.push((pos, p.stmt()?));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn next(&mut self, expected: &str) -> Result<Token, Diagnostic> {
        let t = self
            .tokens
            .get(self.at)
            .cloned()
            .ok_or_else(|| Diagnostic::eof(format!("expected {expected}")))?;
        self.at += 1;
        Ok(t)
    }

    fn unexpected(t: &Token, expected: &str) -> Diagnostic {
        Diagnostic::at(t.pos, format!("expected {expected}, found {}", t.tok))
    }

    fn keyword(&mut self, word: &str) -> Result<Pos, Diagnostic> {
        let t = self.next(&format!("'{word}'"))?;
        match &t.tok {
            Tok::Word(w) if w == word => Ok(t.pos),
            _ => Err(Self::unexpected(&t, &format!("'{word}'"))),
        }
    }

    fn sym(&mut self, c: char) -> Result<(), Diagnostic> {
        let t = self.next(&format!("'{c}'"))?;
        match t.tok {
            Tok::Sym(s) if s == c => Ok(()),
            _ => Err(Self::unexpected(&t, &format!("'{c}'"))),
        }
    }

    fn at_sym(&self, c: char) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == c)
    }

    fn at_word(&self, word: &str) -> bool {
        matches!(self.peek(), Some(Token { tok: Tok::Word(w), .. }) if w == word)
    }

    fn word(&mut self, expected: &str) -> Result<(String, Pos), Diagnostic> {
        let t = self.next(expected)?;
        match t.tok {
            Tok::Word(w) => Ok((w, t.pos)),
            _ => Err(Self::unexpected(&t, expected)),
        }
    }

    fn name(&mut self) -> Result<String, Diagnostic> {
        let (w, pos) = self.word("a name")?;
        if is_keyword(&w) {
            return Err(Diagnostic::at(pos, format!("'{w}' is a keyword and cannot be used as a name")));
        }
        Ok(w)
    }

    fn nat(&mut self) -> Result<usize, Diagnostic> {
        let t = self.next("a natural number")?;
        match &t.tok {
            Tok::Number(n) if n.bytes().all(|b| b.is_ascii_digit()) => n
                .parse()
                .map_err(|_| Diagnostic::at(t.pos, format!("number {n} is too large"))),
            _ => Err(Self::unexpected(&t, "a natural number")),
        }
    }

    fn rational(&mut self) -> Result<Rational, Diagnostic> {
        let t = self.next("a rational number")?;
        match &t.tok {
            Tok::Number(n) => parse_rational(n).map_err(|e| Diagnostic::at(t.pos, e.to_string())),
            _ => Err(Self::unexpected(&t, "a rational number")),
        }
    }

    /// `{ row ; row ; ... }` with whitespace-separated rationals in each row.
    fn rows(&mut self) -> Result<Vec<(Pos, Vec<Rational>)>, Diagnostic> {
        self.sym('{')?;
        let mut rows = Vec::new();
        while !self.at_sym('}') {
            let start = self
                .peek()
                .map(|t| t.pos)
                .ok_or_else(|| Diagnostic::eof("expected '}'"))?;
            let mut row = Vec::new();
            while !self.at_sym(';') {
                if self.at_sym('}') {
                    let t = self.next("';'")?;
                    return Err(Self::unexpected(&t, "';' to end the row"));
                }
                row.push(self.rational()?);
            }
            self.sym(';')?;
            if row.is_empty() {
                return Err(Diagnostic::at(start, "empty row"));
            }
            rows.push((start, row));
        }
        self.sym('}')?;
        Ok(rows)
    }

    fn stmt(&mut self) -> Result<Stmt, Diagnostic> {
        let (w, pos) = self.word("a statement")?;
        match w.as_str() {
            "algebra" => {
                let name = self.name()?;
                self.sym('=')?;
                let def = self.algebra_def()?;
                Ok(Stmt::Algebra { name, def })
            }
            "involution" => {
                let name = self.name()?;
                self.keyword("on")?;
                let on = self.name()?;
                self.sym('=')?;
                let def = self.involution_def()?;
                Ok(Stmt::Involution { name, on, def })
            }
            "check" => {
                self.keyword("dissecting")?;
                let tau = self.name()?;
                let sigma = self.name()?;
                Ok(Stmt::Command(Command::CheckDissecting { tau, sigma }))
            }
            "dual" => {
                let (k, kpos) = self.word("'cartan' or 'compact'")?;
                let kind = match k.as_str() {
                    "cartan" => DualKind::Cartan,
                    "compact" => DualKind::Compact,
                    _ => return Err(Diagnostic::at(kpos, format!("expected 'cartan' or 'compact', found '{k}'"))),
                };
                let algebra = self.name()?;
                let mut with = Vec::new();
                while self.at_word("with") {
                    self.at += 1;
                    with.push(self.name()?);
                }
                Ok(Stmt::Command(Command::Dual { kind, algebra, with }))
            }
            "classify" => {
                self.keyword("so")?;
                self.sym('(')?;
                let p = self.nat()?;
                self.sym(',')?;
                let q = self.nat()?;
                self.sym(')')?;
                Ok(Stmt::Command(Command::Classify { p, q }))
            }
            "verify" => {
                self.keyword("paper")?;
                let max_n = self.nat()?;
                Ok(Stmt::Command(Command::VerifyPaper { max_n }))
            }
            _ => Err(Diagnostic::at(
                pos,
                format!("expected 'algebra', 'involution', 'check', 'dual', 'classify' or 'verify', found '{w}'"),
            )),
        }
    }

    fn algebra_def(&mut self) -> Result<AlgebraDef, Diagnostic> {
        let (w, pos) = self.word("an algebra")?;
        match w.as_str() {
            "so" => {
                self.sym('(')?;
                let p = self.nat()?;
                self.sym(',')?;
                let q = self.nat()?;
                self.sym(')')?;
                Ok(AlgebraDef::So(p, q))
            }
            "sl2R" => Ok(AlgebraDef::Sl2R),
            "su2" => Ok(AlgebraDef::Su2),
            "sl2C" => Ok(AlgebraDef::Sl2C),
            "sum" => {
                self.sym('(')?;
                let a = self.name()?;
                self.sym(',')?;
                let b = self.name()?;
                self.sym(')')?;
                Ok(AlgebraDef::Sum(a, b))
            }
            "constants" => {
                let mut out = Vec::new();
                for (rpos, row) in self.rows()? {
                    let bad = || Diagnostic::at(rpos, "a constants row is 'i j k c' with 1-based indices i, j, k");
                    if row.len() != 4 {
                        return Err(bad());
                    }
                    let index = |x: &Rational| -> Option<usize> {
                        (x.is_integer() && *x >= Rational::from_integer(1.into()))
                            .then(|| x.to_integer().try_into().ok())
                            .flatten()
                    };
                    let (i, j, k) = (
                        index(&row[0]).ok_or_else(bad)?,
                        index(&row[1]).ok_or_else(bad)?,
                        index(&row[2]).ok_or_else(bad)?,
                    );
                    out.push(Bracket {
                        i,
                        j,
                        k,
                        c: row[3].clone(),
                    });
                }
                Ok(AlgebraDef::Constants(out))
            }
            _ => Err(Diagnostic::at(
                pos,
                format!("expected 'so', 'sl2R', 'su2', 'sl2C', 'sum' or 'constants', found '{w}'"),
            )),
        }
    }

    fn involution_def(&mut self) -> Result<InvolutionDef, Diagnostic> {
        let (w, pos) = self.word("an involution")?;
        match w.as_str() {
            "reflect" => Ok(InvolutionDef::Reflect(self.nat()?)),
            "signs" => {
                self.sym('(')?;
                let mut signs = Vec::new();
                while !self.at_sym(')') {
                    let t = self.next("'+' or '-'")?;
                    match t.tok {
                        Tok::Sym('+') => signs.push(1),
                        Tok::Sym('-') => signs.push(-1),
                        _ => return Err(Self::unexpected(&t, "'+' or '-'")),
                    }
                }
                self.sym(')')?;
                if signs.is_empty() {
                    return Err(Diagnostic::at(pos, "empty sign vector"));
                }
                Ok(InvolutionDef::Signs(signs))
            }
            "flip" => Ok(InvolutionDef::Flip),
            "swap_twist" => {
                self.sym('(')?;
                let s = self.name()?;
                self.sym(')')?;
                Ok(InvolutionDef::SwapTwist(s))
            }
            "matrix" => Ok(InvolutionDef::Matrix(self.rows()?.into_iter().map(|(_, r)| r).collect())),
            _ => Err(Diagnostic::at(
                pos,
                format!("expected 'reflect', 'signs', 'flip', 'swap_twist' or 'matrix', found '{w}'"),
            )),
        }
    }
}

/// What the validator knows about a bound name.
#[derive(Debug, Clone)]
enum Binding {
    Algebra { dim: usize, def: AlgebraDef },
    Involution { on: String },
}

fn algebra_dim(def: &AlgebraDef, env: &HashMap<String, Binding>) -> usize {
    match def {
        AlgebraDef::So(p, q) => (p + q) * (p + q).saturating_sub(1) / 2,
        AlgebraDef::Sl2R | AlgebraDef::Su2 => 3,
        AlgebraDef::Sl2C => 6,
        AlgebraDef::Sum(a, b) => [a, b]
            .iter()
            .map(|n| match env.get(*n) {
                Some(Binding::Algebra { dim, .. }) => *dim,
                _ => 0,
            })
            .sum(),
        AlgebraDef::Constants(rows) => rows.iter().map(|b| b.i.max(b.j).max(b.k)).max().unwrap_or(0),
    }
}

/// Names bound before use and bound once; involution forms fit their algebra.
pub fn validate(stmts: &[(Pos, Stmt)]) -> Result<(), Diagnostic> {
    let mut env: HashMap<String, Binding> = HashMap::new();
    let algebra = |env: &HashMap<String, Binding>, pos: Pos, n: &str| -> Result<(usize, AlgebraDef), Diagnostic> {
        match env.get(n) {
            Some(Binding::Algebra { dim, def }) => Ok((*dim, def.clone())),
            Some(_) => Err(Diagnostic::at(pos, format!("'{n}' is not an algebra"))),
            None => Err(Diagnostic::at(pos, format!("unbound name '{n}'"))),
        }
    };
    let involution = |env: &HashMap<String, Binding>, pos: Pos, n: &str| -> Result<String, Diagnostic> {
        match env.get(n) {
            Some(Binding::Involution { on }) => Ok(on.clone()),
            Some(_) => Err(Diagnostic::at(pos, format!("'{n}' is not an involution"))),
            None => Err(Diagnostic::at(pos, format!("unbound name '{n}'"))),
        }
    };
    for (pos, stmt) in stmts {
        let pos = *pos;
        match stmt {
            Stmt::Algebra { name, def } => {
                match def {
                    AlgebraDef::So(p, q) if p + q < 2 => {
                        return Err(Diagnostic::at(pos, "so(p,q) needs p + q >= 2"));
                    }
                    AlgebraDef::Sum(a, b) => {
                        algebra(&env, pos, a)?;
                        algebra(&env, pos, b)?;
                    }
                    AlgebraDef::Constants(rows) => {
                        if rows.is_empty() {
                            return Err(Diagnostic::at(pos, "constants block is empty"));
                        }
                        if let Some(b) = rows.iter().find(|b| b.i == b.j) {
                            return Err(Diagnostic::at(pos, format!("[e{0}, e{0}] must vanish", b.i)));
                        }
                    }
                    _ => {}
                }
                let dim = algebra_dim(def, &env);
                bind(&mut env, pos, name, Binding::Algebra { dim, def: def.clone() })?;
            }
            Stmt::Involution { name, on, def } => {
                let (dim, adef) = algebra(&env, pos, on)?;
                match def {
                    InvolutionDef::Reflect(j) => {
                        let AlgebraDef::So(p, q) = adef else {
                            return Err(Diagnostic::at(pos, format!("'reflect' needs an so(p,q) algebra, '{on}' is not")));
                        };
                        if *j == 0 || *j > p + q {
                            return Err(Diagnostic::at(pos, format!("axis {j} outside 1..={}", p + q)));
                        }
                    }
                    InvolutionDef::Signs(s) => {
                        let AlgebraDef::So(p, q) = adef else {
                            return Err(Diagnostic::at(pos, format!("'signs' needs an so(p,q) algebra, '{on}' is not")));
                        };
                        if s.len() != p + q {
                            return Err(Diagnostic::at(
                                pos,
                                format!("sign vector has length {}, expected {}", s.len(), p + q),
                            ));
                        }
                        if s.iter().all(|&x| x == s[0]) {
                            return Err(Diagnostic::at(pos, "a constant sign vector gives the identity"));
                        }
                    }
                    InvolutionDef::Flip => {
                        if !matches!(adef, AlgebraDef::Sum(..)) {
                            return Err(Diagnostic::at(pos, format!("'flip' needs a sum algebra, '{on}' is not")));
                        }
                    }
                    InvolutionDef::SwapTwist(s) => {
                        let AlgebraDef::Sum(a, _) = adef else {
                            return Err(Diagnostic::at(pos, format!("'swap_twist' needs a sum algebra, '{on}' is not")));
                        };
                        let base = involution(&env, pos, s)?;
                        if base != a {
                            return Err(Diagnostic::at(
                                pos,
                                format!("'{s}' acts on '{base}', expected an involution of '{a}'"),
                            ));
                        }
                    }
                    InvolutionDef::Matrix(rows) => {
                        if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                            return Err(Diagnostic::at(pos, format!("matrix must be {dim} x {dim} for '{on}'")));
                        }
                    }
                }
                bind(&mut env, pos, name, Binding::Involution { on: on.clone() })?;
            }
            Stmt::Command(Command::CheckDissecting { tau, sigma }) => {
                let a = involution(&env, pos, tau)?;
                let b = involution(&env, pos, sigma)?;
                if a != b {
                    return Err(Diagnostic::at(pos, format!("'{tau}' acts on '{a}' but '{sigma}' acts on '{b}'")));
                }
            }
            Stmt::Command(Command::Dual { kind, algebra: g, with }) => {
                algebra(&env, pos, g)?;
                for w in with {
                    let on = involution(&env, pos, w)?;
                    if on != *g {
                        return Err(Diagnostic::at(pos, format!("'{w}' acts on '{on}', not '{g}'")));
                    }
                }
                match kind {
                    DualKind::Cartan if with.is_empty() => {
                        return Err(Diagnostic::at(pos, "'dual cartan' needs at least one involution"));
                    }
                    DualKind::Compact if with.len() > 2 => {
                        return Err(Diagnostic::at(pos, "'dual compact' takes at most two involutions"));
                    }
                    _ => {}
                }
            }
            Stmt::Command(Command::Classify { p, q }) => {
                if p + q < 2 {
                    return Err(Diagnostic::at(pos, "classify needs p + q >= 2"));
                }
            }
            Stmt::Command(Command::VerifyPaper { .. }) => {}
        }
    }
    Ok(())
}

fn bind(env: &mut HashMap<String, Binding>, pos: Pos, name: &str, b: Binding) -> Result<(), Diagnostic> {
    if env.contains_key(name) {
        return Err(Diagnostic::at(pos, format!("'{name}' is already bound")));
    }
    env.insert(name.to_string(), b);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_statement_example() {
        let s = parse_spec("algebra g = so(2,3)\ninvolution t on g = reflect 1\ninvolution s on g = reflect 5\ncheck dissecting t s")
            .unwrap();
        assert_eq!(s.stmts.len(), 4);
        assert_eq!(
            s.stmts[3],
            Stmt::Command(Command::CheckDissecting {
                tau: "t".into(),
                sigma: "s".into()
            })
        );
    }

    #[test]
    fn unbound_name() {
        let e = parse_spec("involution t on g = reflect 1").unwrap_err();
        assert!(e.message.contains("unbound name"), "{e}");
        assert_eq!(e.pos, Some(Pos { line: 1, col: 1 }));
    }

    #[test]
    fn classify_command() {
        let s = parse_spec("classify so(1,3)").unwrap();
        assert_eq!(s.stmts, vec![Stmt::Command(Command::Classify { p: 1, q: 3 })]);
    }

    #[test]
    fn blocks() {
        let s = parse_spec(
            "algebra a = constants { 1 2 3 2; 2 3 1 2; 3 1 2 2; }\ninvolution m on a = matrix { 1 0 0; 0 -1 0; 0 0 -1/1; }",
        )
        .unwrap();
        assert_eq!(s.stmts.len(), 2);
        assert!(parse_spec("algebra a = constants { 1 2 3; }").is_err());
        assert!(parse_spec("algebra a = constants { 1 1 3 2; }").is_err());
        assert!(parse_spec("algebra a = sl2R\ninvolution m on a = matrix { 1 0; 0 1; }").is_err());
    }

    #[test]
    fn syntax_errors_have_positions() {
        let e = parse_spec("algebra g = so(2,3)\ninvolution t on g reflect 1").unwrap_err();
        assert_eq!(e.pos, Some(Pos { line: 2, col: 19 }));
        let e = parse_spec("algebra g = so(2,").unwrap_err();
        assert_eq!(e.pos, None);
        let e = parse_spec("algebra flip = sl2R").unwrap_err();
        assert!(e.message.contains("keyword"));
    }

    #[test]
    fn semantic_errors() {
        let cases = [
            "algebra g = sl2R\ninvolution t on g = reflect 1",
            "algebra g = so(2,2)\ninvolution t on g = reflect 5",
            "algebra g = so(2,2)\ninvolution t on g = signs(++++)",
            "algebra g = so(2,2)\ninvolution t on g = signs(+-+)",
            "algebra g = so(2,2)\ninvolution t on g = flip",
            "algebra g = so(2,2)\nalgebra g = so(3,0)",
            "algebra g = so(3,0)\nalgebra h = so(3,0)\ninvolution t on g = reflect 1\ninvolution s on h = reflect 2\ncheck dissecting t s",
            "algebra g = so(3,0)\ndual cartan g",
            "algebra a = sl2R\nalgebra b = sum(a, a)\ninvolution t on b = flip\ninvolution s on b = swap_twist(t)",
            "algebra g = so(1,0)",
            "classify so(1,0)",
        ];
        for c in cases {
            assert!(parse_spec(c).is_err(), "{c}");
        }
    }
}
