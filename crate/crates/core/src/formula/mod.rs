//! MTL abstract syntax, concrete-syntax parser, and the positive normal
//! form transformation.

mod parser;

use std::fmt;

use crate::error::{Error, Result};

/// A bounded temporal interval with natural bounds `a <= b`.
///
/// The parser only produces closed intervals; open bounds can be set
/// programmatically but the evaluators reject them (for discrete time an
/// open bound is always replaceable by a closed one, and dense-time
/// modalities are restricted to closed intervals).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TimeInterval {
    lo: u32,
    hi: u32,
    lo_open: bool,
    hi_open: bool,
}

impl TimeInterval {
    pub fn closed(lo: u32, hi: u32) -> Result<Self> {
        Self::with_openness(lo, hi, false, false)
    }

    pub fn singular(a: u32) -> Self {
        Self {
            lo: a,
            hi: a,
            lo_open: false,
            hi_open: false,
        }
    }

    pub fn with_openness(lo: u32, hi: u32, lo_open: bool, hi_open: bool) -> Result<Self> {
        if lo > hi {
            return Err(Error::Interval { lo, hi });
        }
        if lo == hi && (lo_open || hi_open) {
            return Err(Error::InvalidParam(format!(
                "singular interval [{lo},{lo}] must be closed"
            )));
        }
        Ok(Self {
            lo,
            hi,
            lo_open,
            hi_open,
        })
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn is_singular(&self) -> bool {
        self.lo == self.hi
    }

    pub fn is_closed(&self) -> bool {
        !self.lo_open && !self.hi_open
    }

    /// Number of integer points, the discrete normalization `|I|`.
    pub fn count_discrete(&self) -> u32 {
        self.hi - self.lo + 1
    }

    /// Length, the continuous normalization `|I|`.
    pub fn length(&self) -> f64 {
        (self.hi - self.lo) as f64
    }
}

impl fmt::Display for TimeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_singular() {
            return write!(f, "[{}]", self.lo);
        }
        let open = (if self.lo_open { "(" } else { "[" }, if self.hi_open { ")" } else { "]" });
        write!(f, "{}{},{}{}", open.0, self.lo, self.hi, open.1)
    }
}

/// MTL abstract syntax tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    True,
    False,
    Prop(String),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Until(TimeInterval, Box<Formula>, Box<Formula>),
    Since(TimeInterval, Box<Formula>, Box<Formula>),
    Finally(TimeInterval, Box<Formula>),
    Globally(TimeInterval, Box<Formula>),
    Once(TimeInterval, Box<Formula>),
    Historically(TimeInterval, Box<Formula>),
}

impl Formula {
    /// Parses the concrete syntax
    /// `p | !f | f & f | f "|" f | f U[a,b] f | f S[a,b] f | F[a,b] f |
    /// G[a,b] f | O[a,b] f | H[a,b] f | true | false | (f)`,
    /// with `[a]` as shorthand for the singular `[a,a]`.
    pub fn parse(text: &str) -> Result<Self> {
        parser::parse(text)
    }

    pub fn prop(name: impl Into<String>) -> Self {
        Self::Prop(name.into())
    }

    /// Positive normal form: negation pushed down to sit only on atomic
    /// propositions, using the De Morgan and finally/globally,
    /// once/historically dualities. Fails with `UnsupportedNegation` when a
    /// negation sits above until/since, which have no dual in the grammar.
    pub fn to_pnf(&self) -> Result<Self> {
        Ok(match self {
            Self::Not(inner) => inner.negated_pnf()?,
            Self::Or(a, b) => Self::Or(Box::new(a.to_pnf()?), Box::new(b.to_pnf()?)),
            Self::And(a, b) => Self::And(Box::new(a.to_pnf()?), Box::new(b.to_pnf()?)),
            Self::Until(i, a, b) => {
                Self::Until(*i, Box::new(a.to_pnf()?), Box::new(b.to_pnf()?))
            }
            Self::Since(i, a, b) => {
                Self::Since(*i, Box::new(a.to_pnf()?), Box::new(b.to_pnf()?))
            }
            Self::Finally(i, a) => Self::Finally(*i, Box::new(a.to_pnf()?)),
            Self::Globally(i, a) => Self::Globally(*i, Box::new(a.to_pnf()?)),
            Self::Once(i, a) => Self::Once(*i, Box::new(a.to_pnf()?)),
            Self::Historically(i, a) => Self::Historically(*i, Box::new(a.to_pnf()?)),
            leaf => leaf.clone(),
        })
    }

    /// PNF of the negation of `self`.
    fn negated_pnf(&self) -> Result<Self> {
        Ok(match self {
            Self::True => Self::False,
            Self::False => Self::True,
            Self::Prop(_) => Self::Not(Box::new(self.clone())),
            Self::Not(inner) => inner.to_pnf()?,
            Self::Or(a, b) => Self::And(Box::new(a.negated_pnf()?), Box::new(b.negated_pnf()?)),
            Self::And(a, b) => Self::Or(Box::new(a.negated_pnf()?), Box::new(b.negated_pnf()?)),
            Self::Finally(i, a) => Self::Globally(*i, Box::new(a.negated_pnf()?)),
            Self::Globally(i, a) => Self::Finally(*i, Box::new(a.negated_pnf()?)),
            Self::Once(i, a) => Self::Historically(*i, Box::new(a.negated_pnf()?)),
            Self::Historically(i, a) => Self::Once(*i, Box::new(a.negated_pnf()?)),
            Self::Until(..) | Self::Since(..) => return Err(Error::UnsupportedNegation),
        })
    }

    /// True when negation occurs only directly above propositions.
    pub fn is_pnf(&self) -> bool {
        match self {
            Self::True | Self::False | Self::Prop(_) => true,
            Self::Not(inner) => matches!(**inner, Self::Prop(_)),
            Self::Or(a, b) | Self::And(a, b) => a.is_pnf() && b.is_pnf(),
            Self::Until(_, a, b) | Self::Since(_, a, b) => a.is_pnf() && b.is_pnf(),
            Self::Finally(_, a)
            | Self::Globally(_, a)
            | Self::Once(_, a)
            | Self::Historically(_, a) => a.is_pnf(),
        }
    }

    /// Rewrites the derived operators into the until/since core:
    /// `F_I f = true U_I f`, `G_I f = !(true U_I !f)`, `O_I f = true S_I f`,
    /// `H_I f = !(true S_I !f)`. Used by the oracle cross-check tests.
    pub fn expand_derived(&self) -> Self {
        match self {
            Self::Not(a) => Self::Not(Box::new(a.expand_derived())),
            Self::Or(a, b) => {
                Self::Or(Box::new(a.expand_derived()), Box::new(b.expand_derived()))
            }
            Self::And(a, b) => {
                Self::And(Box::new(a.expand_derived()), Box::new(b.expand_derived()))
            }
            Self::Until(i, a, b) => Self::Until(
                *i,
                Box::new(a.expand_derived()),
                Box::new(b.expand_derived()),
            ),
            Self::Since(i, a, b) => Self::Since(
                *i,
                Box::new(a.expand_derived()),
                Box::new(b.expand_derived()),
            ),
            Self::Finally(i, a) => {
                Self::Until(*i, Box::new(Self::True), Box::new(a.expand_derived()))
            }
            Self::Globally(i, a) => Self::Not(Box::new(Self::Until(
                *i,
                Box::new(Self::True),
                Box::new(Self::Not(Box::new(a.expand_derived()))),
            ))),
            Self::Once(i, a) => {
                Self::Since(*i, Box::new(Self::True), Box::new(a.expand_derived()))
            }
            Self::Historically(i, a) => Self::Not(Box::new(Self::Since(
                *i,
                Box::new(Self::True),
                Box::new(Self::Not(Box::new(a.expand_derived()))),
            ))),
            leaf => leaf.clone(),
        }
    }

    /// Every interval appearing in the tree.
    pub fn intervals(&self) -> Vec<TimeInterval> {
        let mut out = Vec::new();
        self.collect_intervals(&mut out);
        out
    }

    fn collect_intervals(&self, out: &mut Vec<TimeInterval>) {
        match self {
            Self::Not(a) => a.collect_intervals(out),
            Self::Or(a, b) | Self::And(a, b) => {
                a.collect_intervals(out);
                b.collect_intervals(out);
            }
            Self::Until(i, a, b) | Self::Since(i, a, b) => {
                out.push(*i);
                a.collect_intervals(out);
                b.collect_intervals(out);
            }
            Self::Finally(i, a)
            | Self::Globally(i, a)
            | Self::Once(i, a)
            | Self::Historically(i, a) => {
                out.push(*i);
                a.collect_intervals(out);
            }
            _ => {}
        }
    }

    /// Precedence level for printing: or < and < until/since < unary < atom.
    fn level(&self) -> u8 {
        match self {
            Self::Or(..) => 0,
            Self::And(..) => 1,
            Self::Until(..) | Self::Since(..) => 2,
            Self::Not(..)
            | Self::Finally(..)
            | Self::Globally(..)
            | Self::Once(..)
            | Self::Historically(..) => 3,
            Self::True | Self::False | Self::Prop(_) => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let level = self.level();
        if level < min {
            write!(f, "(")?;
            self.fmt_prec(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Self::True => write!(f, "true"),
            Self::False => write!(f, "false"),
            Self::Prop(p) => write!(f, "{p}"),
            Self::Not(a) => {
                write!(f, "!")?;
                a.fmt_prec(f, 3)
            }
            Self::Or(a, b) => {
                a.fmt_prec(f, 0)?;
                write!(f, " | ")?;
                b.fmt_prec(f, 1)
            }
            Self::And(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " & ")?;
                b.fmt_prec(f, 2)
            }
            Self::Until(i, a, b) => {
                a.fmt_prec(f, 3)?;
                write!(f, " U{i} ")?;
                b.fmt_prec(f, 3)
            }
            Self::Since(i, a, b) => {
                a.fmt_prec(f, 3)?;
                write!(f, " S{i} ")?;
                b.fmt_prec(f, 3)
            }
            Self::Finally(i, a) => {
                write!(f, "F{i} ")?;
                a.fmt_prec(f, 3)
            }
            Self::Globally(i, a) => {
                write!(f, "G{i} ")?;
                a.fmt_prec(f, 3)
            }
            Self::Once(i, a) => {
                write!(f, "O{i} ")?;
                a.fmt_prec(f, 3)
            }
            Self::Historically(i, a) => {
                write!(f, "H{i} ")?;
                a.fmt_prec(f, 3)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::prop("p")
    }

    fn q() -> Formula {
        Formula::prop("q")
    }

    #[test]
    fn pnf_de_morgan() {
        let f = Formula::Not(Box::new(Formula::Or(Box::new(p()), Box::new(q()))));
        let pnf = f.to_pnf().unwrap();
        assert_eq!(
            pnf,
            Formula::And(
                Box::new(Formula::Not(Box::new(p()))),
                Box::new(Formula::Not(Box::new(q())))
            )
        );
        assert!(pnf.is_pnf());
    }

    #[test]
    fn pnf_finally_dual() {
        let i = TimeInterval::closed(1, 4).unwrap();
        let f = Formula::Not(Box::new(Formula::Finally(i, Box::new(p()))));
        assert_eq!(
            f.to_pnf().unwrap(),
            Formula::Globally(i, Box::new(Formula::Not(Box::new(p()))))
        );
    }

    #[test]
    fn pnf_rejects_negated_until() {
        let i = TimeInterval::closed(1, 2).unwrap();
        let f = Formula::Not(Box::new(Formula::Until(i, Box::new(p()), Box::new(q()))));
        assert!(matches!(f.to_pnf(), Err(Error::UnsupportedNegation)));
    }

    #[test]
    fn derived_expansion_table() {
        let i = TimeInterval::closed(1, 4).unwrap();
        assert_eq!(
            Formula::Finally(i, Box::new(p())).expand_derived(),
            Formula::Until(i, Box::new(Formula::True), Box::new(p()))
        );
        let i02 = TimeInterval::closed(0, 2).unwrap();
        assert_eq!(
            Formula::Once(i02, Box::new(p())).expand_derived(),
            Formula::Since(i02, Box::new(Formula::True), Box::new(p()))
        );
        let i12 = TimeInterval::closed(1, 2).unwrap();
        assert_eq!(
            Formula::Globally(i12, Box::new(p())).expand_derived(),
            Formula::Not(Box::new(Formula::Until(
                i12,
                Box::new(Formula::True),
                Box::new(Formula::Not(Box::new(p())))
            )))
        );
    }

    #[test]
    fn display_round_trips_nesting() {
        let i = TimeInterval::closed(1, 2).unwrap();
        let f = Formula::Or(
            Box::new(p()),
            Box::new(Formula::Or(Box::new(q()), Box::new(p()))),
        );
        assert_eq!(Formula::parse(&f.to_string()).unwrap(), f);
        let g = Formula::Until(
            i,
            Box::new(Formula::And(Box::new(p()), Box::new(q()))),
            Box::new(q()),
        );
        assert_eq!(g.to_string(), "(p & q) U[1,2] q");
        assert_eq!(Formula::parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn singular_interval_must_be_closed() {
        assert!(TimeInterval::with_openness(2, 2, true, false).is_err());
        assert!(TimeInterval::with_openness(4, 2, false, false).is_err());
    }
}
