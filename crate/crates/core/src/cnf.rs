//! 3-CNF formulas: DIMACS parsing and exhaustive SAT / NAE-SAT oracles.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Exhaustive oracles enumerate at most 2^24 assignments.
pub const MAX_ORACLE_VARS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("clause {clause} has {len} literals, expected 3")]
    NotThreeSat { clause: usize, len: usize },
    #[error("clause {clause} uses variable {var} more than once")]
    RepeatedVar { clause: usize, var: usize },
    #[error("{0} variables exceed the exhaustive oracle limit of {MAX_ORACLE_VARS}")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    fn from_dimacs(x: i64) -> Self {
        Literal {
            var: x.unsigned_abs() as usize,
            positive: x > 0,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "u{}", self.var)
        } else {
            write!(f, "¬u{}", self.var)
        }
    }
}

pub type Clause = [Literal; 3];

/// Variables `u_1..u_n` and clauses of exactly three distinct variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: usize,
    clauses: Vec<Clause>,
}

/// Per-variable truth values; index 0 is `u_1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    /// Value of 1-based variable `var`.
    pub fn value(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    pub fn literal(&self, lit: Literal) -> bool {
        self.value(lit.var) == lit.positive
    }

    pub fn complement(&self) -> Assignment {
        Assignment(self.0.iter().map(|b| !b).collect())
    }
}

/// A precondition warning: the variable never appears in one polarity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub var: usize,
    pub missing_polarity: Polarity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (seen, missing) = match self.missing_polarity {
            Polarity::Positive => ("negated", "positive"),
            Polarity::Negative => ("positive", "negated"),
        };
        write!(
            f,
            "variable u{} occurs only {seen}; no {missing} occurrence",
            self.var
        )
    }
}

impl CnfFormula {
    /// Validates clause shape and variable range.
    pub fn new(n_vars: usize, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        for (j, clause) in clauses.iter().enumerate() {
            for (i, lit) in clause.iter().enumerate() {
                if lit.var == 0 || lit.var > n_vars {
                    return Err(CnfError::Syntax {
                        line: 0,
                        message: format!("clause {} uses variable {} of {n_vars}", j + 1, lit.var),
                    });
                }
                if clause[..i].iter().any(|l| l.var == lit.var) {
                    return Err(CnfError::RepeatedVar {
                        clause: j + 1,
                        var: lit.var,
                    });
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn n_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn satisfies(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| a.literal(l)))
    }

    pub fn nae_satisfies(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|&&l| a.literal(l)).count();
            t > 0 && t < 3
        })
    }

    /// Positive- and negative-literal masks per clause, with `u_1` at the
    /// most significant of `n_vars` bits so ascending masks run through
    /// assignments in lexicographic order (false before true).
    fn clause_masks(&self) -> Vec<(u32, u32)> {
        let bit = |var: usize| 1u32 << (self.n_vars - var);
        self.clauses
            .iter()
            .map(|c| {
                c.iter().fold((0, 0), |(p, q), l| {
                    if l.positive {
                        (p | bit(l.var), q)
                    } else {
                        (p, q | bit(l.var))
                    }
                })
            })
            .collect()
    }

    fn decode(&self, mask: u32) -> Assignment {
        Assignment(
            (1..=self.n_vars)
                .map(|var| mask >> (self.n_vars - var) & 1 == 1)
                .collect(),
        )
    }

    fn first_assignment(
        &self,
        accept: impl Fn(u32, &[(u32, u32)]) -> bool,
    ) -> Result<Option<Assignment>, CnfError> {
        if self.n_vars > MAX_ORACLE_VARS {
            return Err(CnfError::TooLarge(self.n_vars));
        }
        let masks = self.clause_masks();
        Ok((0..1u32 << self.n_vars)
            .find(|&m| accept(m, &masks))
            .map(|m| self.decode(m)))
    }

    /// Lexicographically smallest satisfying assignment, if any.
    pub fn is_satisfiable(&self) -> Result<Option<Assignment>, CnfError> {
        self.first_assignment(|m, masks| masks.iter().all(|&(p, q)| m & p != 0 || !m & q != 0))
    }

    /// Lexicographically smallest assignment giving every clause at least one
    /// true and at least one false literal, if any.
    pub fn is_nae_satisfiable(&self) -> Result<Option<Assignment>, CnfError> {
        self.first_assignment(|m, masks| {
            masks
                .iter()
                .all(|&(p, q)| (m & p != 0 || !m & q != 0) && (!m & p != 0 || m & q != 0))
        })
    }

    /// One warning per variable that occurs in exactly one polarity.
    pub fn check_reduction_preconditions(&self) -> Vec<Diagnostic> {
        let mut seen = vec![(false, false); self.n_vars + 1];
        for lit in self.clauses.iter().flatten() {
            if lit.positive {
                seen[lit.var].0 = true;
            } else {
                seen[lit.var].1 = true;
            }
        }
        (1..=self.n_vars)
            .filter_map(|var| match seen[var] {
                (true, false) => Some(Diagnostic {
                    var,
                    missing_polarity: Polarity::Negative,
                }),
                (false, true) => Some(Diagnostic {
                    var,
                    missing_polarity: Polarity::Positive,
                }),
                _ => None,
            })
            .collect()
    }

    /// DIMACS text for the formula.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let x = l.var as i64;
                out.push_str(&format!("{} ", if l.positive { x } else { -x }));
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parses DIMACS CNF. Clauses may span lines and end at `0`; `c` lines are
/// allowed anywhere.
pub fn parse_cnf(text: &str) -> Result<CnfFormula, CnfError> {
    let syntax = |line: usize, message: String| CnfError::Syntax { line, message };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<Literal>> = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(syntax(line, "duplicate header".into()));
            }
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            let parsed = match tokens.as_slice() {
                ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| syntax(line, "expected `p cnf <n> <m>`".into()))?);
            continue;
        }
        let Some((n_vars, _)) = header else {
            return Err(syntax(line, "clause before `p cnf` header".into()));
        };
        for token in trimmed.split_whitespace() {
            let x: i64 = token
                .parse()
                .map_err(|_| syntax(line, format!("invalid literal `{token}`")))?;
            if x == 0 {
                clauses.push(std::mem::take(&mut pending));
                continue;
            }
            if x.unsigned_abs() as usize > n_vars {
                return Err(syntax(line, format!("literal {x} exceeds {n_vars} variables")));
            }
            pending.push(Literal::from_dimacs(x));
        }
    }

    let (n_vars, m) = header.ok_or_else(|| syntax(last_line, "missing `p cnf` header".into()))?;
    if !pending.is_empty() {
        return Err(syntax(last_line, "last clause is not terminated by 0".into()));
    }
    if clauses.len() != m {
        return Err(syntax(
            last_line,
            format!("header declares {m} clauses but {} were given", clauses.len()),
        ));
    }
    let mut fixed = Vec::with_capacity(m);
    for (j, c) in clauses.into_iter().enumerate() {
        let clause: Clause = c
            .as_slice()
            .try_into()
            .map_err(|_| CnfError::NotThreeSat {
                clause: j + 1,
                len: c.len(),
            })?;
        fixed.push(clause);
    }
    CnfFormula::new(n_vars, fixed)
}
