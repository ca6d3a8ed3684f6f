use qlinalg::Rational;

/// A parsed input script: bindings and commands in source order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpecFile {
    pub stmts: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stmt {
    Algebra { name: String, def: AlgebraDef },
    Involution { name: String, on: String, def: InvolutionDef },
    Command(Command),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraDef {
    So(usize, usize),
    Sl2R,
    Su2,
    Sl2C,
    Sum(String, String),
    /// `[e_i, e_j] = c e_k` rows, 1-based.
    Constants(Vec<Bracket>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bracket {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionDef {
    /// 1-based axis.
    Reflect(usize),
    Signs(Vec<i8>),
    Flip,
    SwapTwist(String),
    Matrix(Vec<Vec<Rational>>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualKind {
    Cartan,
    Compact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    CheckDissecting { tau: String, sigma: String },
    Dual { kind: DualKind, algebra: String, with: Vec<String> },
    Classify { p: usize, q: usize },
    VerifyPaper { max_n: usize },
}

/// Words that cannot be used as binding names.
pub const KEYWORDS: &[&str] = &[
    "algebra",
    "involution",
    "on",
    "so",
    "sl2R",
    "su2",
    "sl2C",
    "sum",
    "constants",
    "reflect",
    "signs",
    "flip",
    "swap_twist",
    "matrix",
    "check",
    "dissecting",
    "dual",
    "cartan",
    "compact",
    "with",
    "classify",
    "verify",
    "paper",
];

pub fn is_keyword(word: &str) -> bool {
    KEYWORDS.contains(&word)
}
