//! Rendering theta expressions as sums of q-Pochhammer products, and a
//! parser so rendered formulas can be re-evaluated exactly.
//!
//! Interior residues use the triple-product form
//! `theta_{m,b} = q^{b^2/4m} (q^{2m};q^{2m}) (-q^{m-b};q^{2m}) (-q^{m+b};q^{2m})`,
//! with each `(-q^a;q^s)` written as `(q^{2a};q^{2s})/(q^a;q^s)` so a
//! rendered term only ever uses standard Pochhammer symbols;
//! the boundary residues reduce to rescaled `theta_{1,0}` / `theta_{1,1}`
//! and render through their eta-quotient product forms. Every rendered
//! term is a flat `c * q^{p/r} * prod (q^a;q^b)^e / prod (q^a;q^b)^e`.

use std::collections::BTreeMap;
use std::fmt;

use crate::decomp::ThetaExpr;
use crate::error::{Error, Result};
use crate::exprat::ExpRat;
use crate::qseries::{pochhammer, QSeries, ThetaSymbol};

/// `(q^base; q^step)^power` with positive integer exponents.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochFactor {
    pub base: i64,
    pub step: i64,
    pub power: u32,
}

/// One flat product: `coeff * q^qpow * num / den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductTerm {
    pub coeff: i64,
    pub qpow: ExpRat,
    pub num: Vec<PochFactor>,
    pub den: Vec<PochFactor>,
}

impl ProductTerm {
    fn unit() -> Self {
        ProductTerm {
            coeff: 1,
            qpow: ExpRat::zero(),
            num: Vec::new(),
            den: Vec::new(),
        }
    }

    fn mul(&self, other: &ProductTerm) -> ProductTerm {
        let mut t = ProductTerm {
            coeff: self.coeff * other.coeff,
            qpow: self.qpow + other.qpow,
            num: self.num.clone(),
            den: self.den.clone(),
        };
        t.num.extend(other.num.iter().copied());
        t.den.extend(other.den.iter().copied());
        t.merge_factors();
        t
    }

    /// Merge repeated Pochhammer symbols and cancel across the fraction bar.
    fn merge_factors(&mut self) {
        let mut net: BTreeMap<(i64, i64), i64> = BTreeMap::new();
        for f in &self.num {
            *net.entry((f.step, f.base)).or_default() += f.power as i64;
        }
        for f in &self.den {
            *net.entry((f.step, f.base)).or_default() -= f.power as i64;
        }
        self.num.clear();
        self.den.clear();
        for ((step, base), e) in net {
            if e > 0 {
                self.num.push(PochFactor {
                    base,
                    step,
                    power: e as u32,
                });
            } else if e < 0 {
                self.den.push(PochFactor {
                    base,
                    step,
                    power: (-e) as u32,
                });
            }
        }
    }

    pub fn eval(&self, prec: ExpRat) -> Result<QSeries> {
        // pad so negative prefactor exponents cannot eat into precision
        let inner = if self.qpow < ExpRat::zero() {
            prec - self.qpow
        } else {
            prec
        };
        let mut s = QSeries::one(inner).scale(self.coeff);
        for f in &self.num {
            s = s.mul(&pochhammer(f.base.into(), f.step.into(), inner)?.pow(f.power));
        }
        let mut d = QSeries::one(inner);
        for f in &self.den {
            d = d.mul(&pochhammer(f.base.into(), f.step.into(), inner)?.pow(f.power));
        }
        Ok(s.mul(&d.inv(inner)?).shift(self.qpow).truncate(prec))
    }
}

/// A rendered formula: a sum of flat product terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFormula {
    pub terms: Vec<ProductTerm>,
}

impl ProductFormula {
    pub fn eval(&self, prec: ExpRat) -> Result<QSeries> {
        let mut acc = QSeries::zero(prec);
        for t in &self.terms {
            acc = acc.add(&t.eval(prec)?);
        }
        Ok(acc)
    }
}

/// Product form of a single nullwert atom.
fn atom_term(s: &ThetaSymbol) -> ProductTerm {
    let (m, a, scale) = (s.m, s.a, s.scale);
    debug_assert!(0 <= a && a <= m);
    if a == 0 || a == m {
        // boundary residues reduce to theta_{1,0/1}(M tau), rendered via
        // their eta-quotient products
        let big = m * scale;
        if a == 0 {
            ProductTerm {
                coeff: 1,
                qpow: ExpRat::zero(),
                num: vec![PochFactor {
                    base: 2 * big,
                    step: 2 * big,
                    power: 5,
                }],
                den: vec![
                    PochFactor {
                        base: big,
                        step: big,
                        power: 2,
                    },
                    PochFactor {
                        base: 4 * big,
                        step: 4 * big,
                        power: 2,
                    },
                ],
            }
        } else {
            ProductTerm {
                coeff: 2,
                qpow: ExpRat::new(big, 4),
                num: vec![PochFactor {
                    base: 4 * big,
                    step: 4 * big,
                    power: 2,
                }],
                den: vec![PochFactor {
                    base: 2 * big,
                    step: 2 * big,
                    power: 1,
                }],
            }
        }
    } else {
        let step = 2 * m * scale;
        let lo = (m - a) * scale;
        let hi = (m + a) * scale;
        let mut t = ProductTerm {
            coeff: 1,
            qpow: ExpRat::new(scale * a * a, 4 * m),
            num: vec![
                PochFactor {
                    base: step,
                    step,
                    power: 1,
                },
                PochFactor {
                    base: 2 * lo,
                    step: 2 * step,
                    power: 1,
                },
                PochFactor {
                    base: 2 * hi,
                    step: 2 * step,
                    power: 1,
                },
            ],
            den: vec![
                PochFactor {
                    base: lo,
                    step,
                    power: 1,
                },
                PochFactor {
                    base: hi,
                    step,
                    power: 1,
                },
            ],
        };
        t.merge_factors();
        t
    }
}

/// Render a theta expression as a product formula, optionally divided by
/// `(q;q)_infty^euler_den_power`.
pub fn to_product_formula(e: &ThetaExpr, euler_den_power: u32) -> ProductFormula {
    let terms = e
        .terms()
        .iter()
        .map(|t| {
            let mut p = ProductTerm::unit();
            p.coeff = t.coeff;
            for a in &t.atoms {
                p = p.mul(&atom_term(a));
            }
            if euler_den_power > 0 {
                p = p.mul(&ProductTerm {
                    coeff: 1,
                    qpow: ExpRat::zero(),
                    num: Vec::new(),
                    den: vec![PochFactor {
                        base: 1,
                        step: 1,
                        power: euler_den_power,
                    }],
                });
            }
            p
        })
        .collect();
    ProductFormula { terms }
}

/// Human-readable rendering of a theta expression as a sum of Pochhammer
/// products. Deterministic: terms appear in the expression's canonical
/// order.
pub fn render_products(e: &ThetaExpr) -> String {
    to_product_formula(e, 0).to_string()
}

fn write_qatom(f: &mut fmt::Formatter<'_>, e: i64) -> fmt::Result {
    if e == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{e}")
    }
}

impl fmt::Display for PochFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_qatom(f, self.base)?;
        write!(f, ";")?;
        write_qatom(f, self.step)?;
        write!(f, ")")?;
        if self.power != 1 {
            write!(f, "^{}", self.power)?;
        }
        Ok(())
    }
}

impl fmt::Display for ProductTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if self.coeff != 1 {
            write!(f, "{}", self.coeff)?;
            wrote = true;
        }
        if !self.qpow.is_zero() {
            if wrote {
                write!(f, " ")?;
            }
            if self.qpow.is_integer() && self.qpow.num() == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{{{}}}", self.qpow)?;
            }
            wrote = true;
        }
        if !self.num.is_empty() {
            if wrote {
                write!(f, " ")?;
            }
            for p in &self.num {
                write!(f, "{p}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        if !self.den.is_empty() {
            write!(f, "/")?;
            if self.den.len() == 1 && self.den[0].power == 1 {
                write!(f, "{}", self.den[0])?;
            } else {
                write!(f, "(")?;
                for p in &self.den {
                    write!(f, "{p}")?;
                }
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ProductFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Parse a formula produced by [`ProductFormula::to_string`].
pub fn parse_formula(text: &str) -> Result<ProductFormula> {
    Parser::new(text).formula()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::DomainError(format!(
            "formula parse error at offset {}: {what}",
            self.pos
        ))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let v: i64 = s.parse().map_err(|_| self.err("integer overflow"))?;
        Ok(if neg { -v } else { v })
    }

    /// `q`, `q^3`, or `q^{p/r}`; returns the exponent.
    fn q_power(&mut self) -> Result<ExpRat> {
        self.expect('q')?;
        if !self.eat('^') {
            return Ok(ExpRat::from(1));
        }
        if self.eat('{') {
            let num = self.integer()?;
            let den = if self.eat('/') { self.integer()? } else { 1 };
            self.expect('}')?;
            Ok(ExpRat::new(num, den))
        } else {
            Ok(ExpRat::from(self.integer()?))
        }
    }

    fn factor(&mut self) -> Result<PochFactor> {
        self.expect('(')?;
        let base = self.q_power()?;
        self.skip_ws();
        self.expect(';')?;
        self.skip_ws();
        let step = self.q_power()?;
        self.expect(')')?;
        let power = if self.eat('^') { self.integer()? } else { 1 };
        if !base.is_integer() || !step.is_integer() || power < 1 {
            return Err(self.err("pochhammer factor with non-integer parts"));
        }
        Ok(PochFactor {
            base: base.num(),
            step: step.num(),
            power: power as u32,
        })
    }

    fn factor_list(&mut self) -> Result<Vec<PochFactor>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            if self.peek() == Some('(') {
                out.push(self.factor()?);
            } else {
                break;
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<ProductTerm> {
        self.skip_ws();
        let start = self.pos;
        let mut t = ProductTerm::unit();
        if self.peek().is_some_and(|c| c.is_ascii_digit() || c == '-') {
            t.coeff = self.integer()?;
        }
        self.skip_ws();
        // a bare 'q...' here is the rational prefactor, not a factor
        if self.peek() == Some('q') {
            t.qpow = self.q_power()?;
        }
        t.num = self.factor_list()?;
        self.skip_ws();
        if self.eat('/') {
            self.skip_ws();
            // lookahead: '(' starts either a single factor or a
            // parenthesized group of factors
            let mark = self.pos;
            if self.eat('(') {
                if self.peek() == Some('q') {
                    // single factor "(q^a;q^b)^e"
                    self.pos = mark;
                    t.den.push(self.factor()?);
                } else {
                    // group "((..)(..)...)"
                    t.den = self.factor_list()?;
                    self.expect(')')?;
                }
            } else {
                return Err(self.err("expected denominator"));
            }
        }
        if self.pos == start {
            return Err(self.err("expected term"));
        }
        t.merge_factors();
        Ok(t)
    }

    fn formula(&mut self) -> Result<ProductFormula> {
        let mut terms = vec![self.term()?];
        loop {
            self.skip_ws();
            if self.eat('+') {
                terms.push(self.term()?);
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.chars.len() {
            return Err(self.err("trailing input"));
        }
        Ok(ProductFormula { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::{h_base, h_step_even};
    use crate::exprat::ExpRat;
    use crate::qseries::theta_series;

    fn int(n: i64) -> ExpRat {
        ExpRat::from(n)
    }

    #[test]
    fn render_theta_10() {
        let e = ThetaExpr::atom(ThetaSymbol::new(1, 0, 1));
        assert_eq!(render_products(&e), "(q^2;q^2)^5/((q;q)^2(q^4;q^4)^2)");
    }

    #[test]
    fn render_theta_11() {
        let e = ThetaExpr::atom(ThetaSymbol::new(1, 1, 1));
        assert_eq!(render_products(&e), "2 q^{1/4} (q^4;q^4)^2/(q^2;q^2)");
    }

    #[test]
    fn render_theta_21() {
        let e = ThetaExpr::atom(ThetaSymbol::new(2, 1, 1));
        assert_eq!(
            render_products(&e),
            "q^{1/8} (q^4;q^4)(q^2;q^8)(q^6;q^8)/((q;q^4)(q^3;q^4))"
        );
    }

    #[test]
    fn atom_products_evaluate_to_theta() {
        for (m, a) in [(1, 0), (1, 1), (2, 1), (6, 3), (6, 0), (6, 6), (21, 7)] {
            let e = ThetaExpr::atom(ThetaSymbol::new(m, a, 1));
            let rendered = to_product_formula(&e, 0).eval(int(20)).unwrap();
            let direct = theta_series(m, a, 1, int(20));
            assert!(
                rendered.eq_to_prec(&direct),
                "(m,a)=({m},{a}): {:?}",
                rendered.first_difference(&direct)
            );
        }
    }

    #[test]
    fn parse_roundtrip_table_entries() {
        let t = h_step_even(&h_step_even(&h_base()));
        for e in t.entries.values() {
            let text = render_products(e);
            let parsed = parse_formula(&text).unwrap();
            let a = parsed.eval(int(20)).unwrap();
            let b = e.eval(int(20));
            assert!(
                a.eq_to_prec(&b),
                "round trip failed for {text}: {:?}",
                a.first_difference(&b)
            );
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_formula("3 + ").is_err());
        assert!(parse_formula("(q;q").is_err());
        assert!(parse_formula("q^{1/}").is_err());
        assert!(parse_formula("1 extra").is_err());
    }

    #[test]
    fn determinism() {
        let t = h_step_even(&h_base());
        let a = render_products(t.entry(2));
        let b = render_products(t.entry(2));
        assert_eq!(a, b);
    }
}
