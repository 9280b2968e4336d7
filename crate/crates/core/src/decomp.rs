//! Theta decomposition of powers of the Jacobi theta function.
//!
//! The engine stores `P_k := (-theta(z+1/2; tau))^k` and computes tables
//! of coefficient functions `h_{l,c}` satisfying
//! `P_k = sum_c h_{k/2,c} vartheta_{k/2,c}(z; tau)`, starting from the
//! level-1 base case `h_{1,j} = theta_{1,j+1}` and climbing one level at
//! a time. Integer levels advance by the two-step recursion, half-integer
//! levels by the one-step recursion; both are kept in grouped and
//! ungrouped forms so that each can cross-check the other. Entries are
//! symbolic [`ThetaExpr`] sums of products of theta nullwerte, evaluable
//! to exact [`QSeries`].

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exprat::ExpRat;
use crate::jacobi::{jtheta_half, theta_component, ZetaQSeries};
use crate::qseries::{theta_series, QSeries, ThetaSymbol};
use crate::report::Report;

/// A half-integer `twice/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt {
    pub twice: i64,
}

impl HalfInt {
    pub fn new(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Integer-coefficient sum of products of theta nullwert atoms, kept in
/// canonical form: atoms sorted within a term, terms sorted and merged,
/// zero terms removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaExpr {
    terms: Vec<ThetaTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaTerm {
    pub coeff: i64,
    pub atoms: Vec<ThetaSymbol>,
}

impl ThetaExpr {
    pub fn zero() -> Self {
        ThetaExpr { terms: Vec::new() }
    }

    pub fn one() -> Self {
        ThetaExpr {
            terms: vec![ThetaTerm {
                coeff: 1,
                atoms: Vec::new(),
            }],
        }
    }

    pub fn atom(s: ThetaSymbol) -> Self {
        ThetaExpr {
            terms: vec![ThetaTerm {
                coeff: 1,
                atoms: vec![s],
            }],
        }
    }

    pub fn from_terms(terms: Vec<ThetaTerm>) -> Self {
        let mut e = ThetaExpr { terms };
        e.canonicalize();
        e
    }

    pub fn terms(&self) -> &[ThetaTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn canonicalize(&mut self) {
        for t in &mut self.terms {
            t.atoms.sort();
        }
        self.terms.sort_by(|x, y| x.atoms.cmp(&y.atoms));
        let mut merged: Vec<ThetaTerm> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.atoms == t.atoms => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        merged.retain(|t| t.coeff != 0);
        self.terms = merged;
    }

    pub fn add(&self, other: &ThetaExpr) -> ThetaExpr {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ThetaExpr::from_terms(terms)
    }

    pub fn mul(&self, other: &ThetaExpr) -> ThetaExpr {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let mut atoms = a.atoms.clone();
                atoms.extend(b.atoms.iter().copied());
                terms.push(ThetaTerm {
                    coeff: a.coeff * b.coeff,
                    atoms,
                });
            }
        }
        ThetaExpr::from_terms(terms)
    }

    pub fn scaled(&self, c: i64) -> ThetaExpr {
        ThetaExpr::from_terms(
            self.terms
                .iter()
                .map(|t| ThetaTerm {
                    coeff: t.coeff * c,
                    atoms: t.atoms.clone(),
                })
                .collect(),
        )
    }

    /// Replace every atom by its theta series and expand exactly.
    pub fn eval(&self, prec: ExpRat) -> QSeries {
        let eval_term = |t: &ThetaTerm| -> QSeries {
            let mut s = QSeries::one(prec).scale(t.coeff);
            for a in &t.atoms {
                s = s.mul(&a.eval(prec));
            }
            s
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            let parts: Vec<QSeries> = self.terms.par_iter().map(eval_term).collect();
            parts
                .into_iter()
                .reduce(|a, b| a.add(&b))
                .unwrap_or_else(|| QSeries::zero(prec))
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.terms
                .iter()
                .map(eval_term)
                .reduce(|a, b| a.add(&b))
                .unwrap_or_else(|| QSeries::zero(prec))
        }
    }
}

impl fmt::Display for ThetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if t.coeff != 1 || t.atoms.is_empty() {
                write!(f, "{}", t.coeff)?;
                if !t.atoms.is_empty() {
                    write!(f, "*")?;
                }
            }
            for (j, a) in t.atoms.iter().enumerate() {
                if j > 0 {
                    write!(f, "*")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

/// The family `{h_{l,c}}` at one level `l`, keyed by twice the residue
/// `c`, with `0 <= 2c < 2*(2l)` on the grid matching the level parity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HTable {
    pub level: HalfInt,
    pub entries: BTreeMap<i64, ThetaExpr>,
}

impl HTable {
    /// Number of residues, `2l`.
    pub fn residue_count(&self) -> i64 {
        self.level.twice
    }

    /// Entry at residue `c` given as twice its value; reduced mod `2l`.
    pub fn entry(&self, twice_c: i64) -> &ThetaExpr {
        let t = self.level.twice;
        let key = twice_c.rem_euclid(2 * t);
        assert_eq!(
            key.rem_euclid(2),
            t.rem_euclid(2),
            "residue {key}/2 off the level-{} grid",
            self.level
        );
        &self.entries[&key]
    }

    /// Whether `h_{l,c} = h_{l,2l-c}` holds as canonical expressions.
    pub fn is_symmetric(&self) -> bool {
        let t = self.level.twice;
        self.entries
            .iter()
            .all(|(&k, e)| *self.entry(2 * t - k) == *e)
    }

    pub fn eval(&self, prec: ExpRat) -> BTreeMap<i64, QSeries> {
        self.entries
            .iter()
            .map(|(&k, e)| (k, e.eval(prec)))
            .collect()
    }
}

/// `h_{1,j} = theta_{1,j+1}` (base case of the recursion).
fn h1(j: i64) -> ThetaSymbol {
    ThetaSymbol::new(1, j + 1, 1)
}

/// Level-1 table: `h_{1,0} = theta_{1,1}`, `h_{1,1} = theta_{1,0}`.
pub fn h_base() -> HTable {
    let mut entries = BTreeMap::new();
    entries.insert(0, ThetaExpr::atom(h1(0)));
    entries.insert(2, ThetaExpr::atom(h1(1)));
    HTable {
        level: HalfInt::from_int(1),
        entries,
    }
}

fn theta_atom(m: i64, a: i64) -> ThetaExpr {
    ThetaExpr::atom(ThetaSymbol::new(m, a, 1))
}

/// Integer level `l -> l+1` via the grouped three-part recursion; residues
/// beyond `l+1` are filled by the symmetry rule `h_{l,b} = h_{l,2l-b}`.
pub fn h_step_even(t: &HTable) -> HTable {
    assert!(t.level.is_integer());
    let l = t.level.twice / 2;
    let big_m = l * (l + 1);
    let mut entries = BTreeMap::new();
    for b in 0..=(l + 1) {
        let mut e = ThetaExpr::atom(h1(b))
            .mul(&theta_atom(big_m, b * l))
            .mul(t.entry(0));
        e = e.add(
            &ThetaExpr::atom(h1(b - l))
                .mul(&theta_atom(big_m, b * l - l * (l + 1)))
                .mul(t.entry(2 * l)),
        );
        for c in 1..l {
            let pair =
                theta_atom(big_m, b * l - c * (l + 1)).add(&theta_atom(big_m, b * l + c * (l + 1)));
            e = e.add(&ThetaExpr::atom(h1(b - c)).mul(&pair).mul(t.entry(2 * c)));
        }
        entries.insert(2 * b, e);
    }
    for b in (l + 2)..(2 * l + 2) {
        let mirror = entries[&(2 * (2 * l + 2 - b))].clone();
        entries.insert(2 * b, mirror);
    }
    HTable {
        level: HalfInt::from_int(l + 1),
        entries,
    }
}

/// The same step from the ungrouped single sum
/// `h_{l+1,b} = sum_c h_{1,b-c} theta_{l(l+1),bl-c(l+1)} h_{l,c}`,
/// computed directly for every residue. Cross-check for [`h_step_even`].
pub fn h_step_even_ungrouped(t: &HTable) -> HTable {
    assert!(t.level.is_integer());
    let l = t.level.twice / 2;
    let big_m = l * (l + 1);
    let mut entries = BTreeMap::new();
    for b in 0..(2 * l + 2) {
        let mut e = ThetaExpr::zero();
        for c in 0..(2 * l) {
            e = e.add(
                &ThetaExpr::atom(h1(b - c))
                    .mul(&theta_atom(big_m, b * l - c * (l + 1)))
                    .mul(t.entry(2 * c)),
            );
        }
        entries.insert(2 * b, e);
    }
    HTable {
        level: HalfInt::from_int(l + 1),
        entries,
    }
}

/// Integer level `l -> l+1/2`:
/// `h_{l+1/2,b+1/2} = sum_c h_{l,c} theta_{l(2l+1),c(2l+1)-l(2b+1)}`.
pub fn h_step_odd(t: &HTable) -> HTable {
    assert!(t.level.is_integer());
    let l = t.level.twice / 2;
    assert!(l >= 1);
    let big_m = l * (2 * l + 1);
    let mut entries = BTreeMap::new();
    for b in 0..=(2 * l) {
        let mut e = ThetaExpr::zero();
        for c in 0..(2 * l) {
            e = e.add(
                &t.entry(2 * c)
                    .mul(&theta_atom(big_m, c * (2 * l + 1) - l * (2 * b + 1))),
            );
        }
        entries.insert(2 * b + 1, e);
    }
    HTable {
        level: HalfInt::new(2 * l + 1),
        entries,
    }
}

/// Half-integer level `l+1/2 -> l+1`:
/// `h_{l+1,b} = sum_c h_{l+1/2,c+1/2} theta_{(2l+1)(l+1),(2c+1)(l+1)-(2l+1)b}`.
/// Must agree with [`h_step_even`] applied at level `l`.
pub fn h_step_half_to_int(t: &HTable) -> HTable {
    assert!(!t.level.is_integer());
    let l = (t.level.twice - 1) / 2;
    let big_m = (2 * l + 1) * (l + 1);
    let mut entries = BTreeMap::new();
    for b in 0..(2 * l + 2) {
        let mut e = ThetaExpr::zero();
        for c in 0..=(2 * l) {
            e = e.add(
                &t.entry(2 * c + 1)
                    .mul(&theta_atom(big_m, (2 * c + 1) * (l + 1) - (2 * l + 1) * b)),
            );
        }
        entries.insert(2 * b, e);
    }
    HTable {
        level: HalfInt::from_int(l + 1),
        entries,
    }
}

/// Table at level `k/2`, reached by iterating the recursion from the
/// level-1 base case (with a final half step when `k` is odd). The level
/// `1/2` needed for `k = 1` is the single constant entry `h_{1/2,1/2} = 1`,
/// which makes `CPhi_1 = 1/(q;q)_infty`.
pub fn h_table(k: u32) -> HTable {
    assert!(k >= 1);
    if k == 1 {
        let mut entries = BTreeMap::new();
        entries.insert(1, ThetaExpr::one());
        return HTable {
            level: HalfInt::new(1),
            entries,
        };
    }
    let mut t = h_base();
    let target_int_level = (k as i64) / 2;
    while t.level.twice / 2 < target_int_level {
        t = h_step_even(&t);
    }
    if k % 2 == 1 {
        t = h_step_odd(&t);
    }
    t
}

/// Check Eq-style theta decomposition of `P_k = (-theta(z+1/2))^k`
/// against the table route, coefficient by coefficient.
pub fn verify_decomposition(k: u32, qprec: ExpRat) -> Result<Report> {
    let claim = format!("(-theta(z+1/2))^{k} = sum_c h_{{{k}/2,c}} vartheta_{{{k}/2,c}}");
    let range = format!("q-precision {qprec}");
    let lhs = jtheta_half(qprec).pow(k);
    let table = h_table(k);
    let mut rhs = ZetaQSeries::zero(qprec);
    for (&key, expr) in &table.entries {
        let comp = theta_component(k as i64, key, qprec)?;
        rhs = rhs.add(&comp.scale_series(&expr.eval(qprec)));
    }
    Ok(match lhs.first_difference(&rhs) {
        None => Report::pass(claim, range),
        Some((zk, e, a, b)) => Report::fail(
            claim,
            range,
            format!("zeta^{{{zk}/2}} q^{{{e}}}: lhs {a} != rhs {b}"),
        ),
    })
}

/// Lemma-style check of
/// `-theta(z+1/2) vartheta_{l,c} = sum_a theta_{l(2l+1),c-2la-l} vartheta_{l+1/2,a+c+1/2}`.
pub fn verify_lemma_onemore(l: i64, c: i64, qprec: ExpRat) -> Result<Report> {
    assert!(l > c && c >= 0, "requires l > c >= 0");
    let claim = format!(
        "-theta(z+1/2) vartheta_{{{l},{c}}} = sum_a theta_{{{m},c-2la-l}} vartheta_{{{l}+1/2,a+{c}+1/2}}",
        m = l * (2 * l + 1)
    );
    let range = format!("q-precision {qprec}");
    let lhs = jtheta_half(qprec).mul(&theta_component(2 * l, 2 * c, qprec)?);
    let mut rhs = ZetaQSeries::zero(qprec);
    for a in 0..(2 * l + 1) {
        let nullwert = theta_series(l * (2 * l + 1), c - 2 * l * a - l, 1, qprec);
        let comp = theta_component(2 * l + 1, 2 * (a + c) + 1, qprec)?;
        rhs = rhs.add(&comp.scale_series(&nullwert));
    }
    Ok(match lhs.first_difference(&rhs) {
        None => Report::pass(claim, range),
        Some((zk, e, x, y)) => Report::fail(
            claim,
            range,
            format!("zeta^{{{zk}/2}} q^{{{e}}}: lhs {x} != rhs {y}"),
        ),
    })
}

/// Lemma-style check of
/// `vartheta_{1,eps} vartheta_{l,c} = sum_a theta_{l(l+1),(2a+eps)l-c} vartheta_{l+1,2a+c+eps}`.
pub fn verify_lemma_theta1eps(eps: i64, l: i64, c: i64, qprec: ExpRat) -> Result<Report> {
    assert!(eps == 0 || eps == 1);
    assert!(l > c && c >= 0, "requires l > c >= 0");
    let claim = format!(
        "vartheta_{{1,{eps}}} vartheta_{{{l},{c}}} = sum_a theta_{{{m},(2a+{eps}){l}-{c}}} vartheta_{{{lp},2a+{c}+{eps}}}",
        m = l * (l + 1),
        lp = l + 1
    );
    let range = format!("q-precision {qprec}");
    let lhs = theta_component(2, 2 * eps, qprec)?.mul(&theta_component(2 * l, 2 * c, qprec)?);
    let mut rhs = ZetaQSeries::zero(qprec);
    for a in 0..(l + 1) {
        let nullwert = theta_series(l * (l + 1), (2 * a + eps) * l - c, 1, qprec);
        let comp = theta_component(2 * (l + 1), 2 * (2 * a + c + eps), qprec)?;
        rhs = rhs.add(&comp.scale_series(&nullwert));
    }
    Ok(match lhs.first_difference(&rhs) {
        None => Report::pass(claim, range),
        Some((zk, e, x, y)) => Report::fail(
            claim,
            range,
            format!("zeta^{{{zk}/2}} q^{{{e}}}: lhs {x} != rhs {y}"),
        ),
    })
}

/// The two nullwert identities used to simplify `h_{3,3}`:
/// `theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} = 2 theta_{2,1}theta_{6,3}` and
/// `theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2} = theta_{2,1}(theta_{6,1}+theta_{6,5})`.
pub fn verify_lemma42(qprec: ExpRat) -> Vec<Report> {
    let range = format!("q-precision {qprec}");
    let ts = |m, a| theta_series(m, a, 1, qprec);
    let mut out = Vec::new();
    let lhs_a = ts(2, 2).mul(&ts(6, 0)).add(&ts(2, 0).mul(&ts(6, 6)));
    let rhs_a = ts(2, 1).mul(&ts(6, 3)).scale(2);
    out.push(match lhs_a.first_difference(&rhs_a) {
        None => Report::pass(
            "theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} = 2 theta_{2,1}theta_{6,3}",
            range.clone(),
        ),
        Some((e, x, y)) => Report::fail(
            "theta_{2,2}theta_{6,0} + theta_{2,0}theta_{6,6} = 2 theta_{2,1}theta_{6,3}",
            range.clone(),
            format!("q^{{{e}}}: lhs {x} != rhs {y}"),
        ),
    });
    let lhs_b = ts(2, 2).mul(&ts(6, 4)).add(&ts(2, 0).mul(&ts(6, 2)));
    let rhs_b = ts(2, 1).mul(&ts(6, 1).add(&ts(6, 5)));
    out.push(match lhs_b.first_difference(&rhs_b) {
        None => Report::pass(
            "theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2} = theta_{2,1}(theta_{6,1}+theta_{6,5})",
            range,
        ),
        Some((e, x, y)) => Report::fail(
            "theta_{2,2}theta_{6,4} + theta_{2,0}theta_{6,2} = theta_{2,1}(theta_{6,1}+theta_{6,5})",
            range,
            format!("q^{{{e}}}: lhs {x} != rhs {y}"),
        ),
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(n: i64) -> ExpRat {
        ExpRat::from(n)
    }

    fn sym(m: i64, a: i64) -> ThetaSymbol {
        ThetaSymbol::new(m, a, 1)
    }

    #[test]
    fn base_case() {
        let t = h_base();
        assert_eq!(*t.entry(0), ThetaExpr::atom(sym(1, 1)));
        assert_eq!(*t.entry(2), ThetaExpr::atom(sym(1, 0)));
        assert!(t.is_symmetric());
    }

    #[test]
    fn level2_matches_paper_display() {
        let t = h_step_even(&h_base());
        // h_{2,0} = theta_{1,1}^2 theta_{2,0} + theta_{1,0}^2 theta_{2,2}
        let h20 = ThetaExpr::from_terms(vec![
            ThetaTerm {
                coeff: 1,
                atoms: vec![sym(1, 1), sym(1, 1), sym(2, 0)],
            },
            ThetaTerm {
                coeff: 1,
                atoms: vec![sym(1, 0), sym(1, 0), sym(2, 2)],
            },
        ]);
        assert_eq!(*t.entry(0), h20);
        // h_{2,1} = 2 theta_{1,0} theta_{1,1} theta_{2,1}
        let h21 = ThetaExpr::from_terms(vec![ThetaTerm {
            coeff: 2,
            atoms: vec![sym(1, 0), sym(1, 1), sym(2, 1)],
        }]);
        assert_eq!(*t.entry(2), h21);
        // h_{2,2} = theta_{1,1}^2 theta_{2,2} + theta_{1,0}^2 theta_{2,0}
        let h22 = ThetaExpr::from_terms(vec![
            ThetaTerm {
                coeff: 1,
                atoms: vec![sym(1, 1), sym(1, 1), sym(2, 2)],
            },
            ThetaTerm {
                coeff: 1,
                atoms: vec![sym(1, 0), sym(1, 0), sym(2, 0)],
            },
        ]);
        assert_eq!(*t.entry(4), h22);
    }

    #[test]
    fn grouped_equals_ungrouped() {
        let mut t = h_base();
        for _ in 0..3 {
            let grouped = h_step_even(&t);
            let ungrouped = h_step_even_ungrouped(&t);
            assert_eq!(grouped, ungrouped, "at level {}", t.level);
            assert!(grouped.is_symmetric());
            t = grouped;
        }
    }

    #[test]
    fn level3_h33_matches_expansion() {
        // h_{3,3} = theta_{1,0}theta_{6,6}h_{2,0} + 2theta_{1,1}theta_{6,3}h_{2,1}
        //         + theta_{1,0}theta_{6,0}h_{2,2}
        let t2 = h_step_even(&h_base());
        let t3 = h_step_even(&t2);
        let expect = ThetaExpr::atom(sym(1, 0))
            .mul(&ThetaExpr::atom(sym(6, 6)))
            .mul(t2.entry(0))
            .add(
                &ThetaExpr::atom(sym(1, 1))
                    .mul(&ThetaExpr::atom(sym(6, 3)))
                    .mul(t2.entry(2))
                    .scaled(2),
            )
            .add(
                &ThetaExpr::atom(sym(1, 0))
                    .mul(&ThetaExpr::atom(sym(6, 0)))
                    .mul(t2.entry(4)),
            );
        assert_eq!(*t3.entry(6), expect);
    }

    #[test]
    fn half_step_display_k7() {
        // h_{7/2,7/2} = h_{3,0}theta_{21,21} + 2h_{3,1}theta_{21,14}
        //             + 2h_{3,2}theta_{21,7} + h_{3,3}theta_{21,0}
        let t3 = h_table(6);
        let t72 = h_step_odd(&t3);
        let expect = t3
            .entry(0)
            .mul(&ThetaExpr::atom(sym(21, 21)))
            .add(&t3.entry(2).mul(&ThetaExpr::atom(sym(21, 14))).scaled(2))
            .add(&t3.entry(4).mul(&ThetaExpr::atom(sym(21, 7))).scaled(2))
            .add(&t3.entry(6).mul(&ThetaExpr::atom(sym(21, 0))));
        assert_eq!(*t72.entry(7), expect);
    }

    #[test]
    fn route_independence_levels() {
        // h_step_half_to_int . h_step_odd = h_step_even, as evaluated tables
        let prec = int(12);
        let mut t = h_base();
        for _ in 0..3 {
            let direct = h_step_even(&t);
            let via_half = h_step_half_to_int(&h_step_odd(&t));
            assert_eq!(direct.level, via_half.level);
            for (&k, e) in &direct.entries {
                let a = e.eval(prec);
                let b = via_half.entry(k).eval(prec);
                assert!(
                    a.eq_to_prec(&b),
                    "level {} residue {}/2: {:?}",
                    direct.level,
                    k,
                    a.first_difference(&b)
                );
            }
            t = direct;
        }
    }

    #[test]
    fn symmetry_as_series() {
        for k in [2u32, 3, 4, 5, 6, 7, 8] {
            let t = h_table(k);
            let prec = int(8);
            for (&key, e) in &t.entries {
                let mirror = t.entry(2 * t.level.twice - key);
                assert!(
                    e.eval(prec).eq_to_prec(&mirror.eval(prec)),
                    "symmetry broken at level {} residue {}/2",
                    t.level,
                    key
                );
            }
        }
    }

    #[test]
    fn eval_leading_term() {
        // 2 theta_{1,0} theta_{1,1} theta_{2,1} starts 4 q^{3/8}
        let e = ThetaExpr::from_terms(vec![ThetaTerm {
            coeff: 2,
            atoms: vec![sym(1, 0), sym(1, 1), sym(2, 1)],
        }]);
        let s = e.eval(int(2));
        assert_eq!(s.val_exp(), ExpRat::new(3, 8));
        assert_eq!(s.coeff(ExpRat::new(3, 8)), BigInt::from(4));
    }

    #[test]
    fn eval_distributive() {
        let prec = int(6);
        let a = ThetaExpr::atom(sym(2, 1)).add(&ThetaExpr::atom(sym(1, 1)).scaled(3));
        let b = ThetaExpr::atom(sym(1, 0)).add(&ThetaExpr::one().scaled(-2));
        let lhs = a.mul(&b).eval(prec);
        let rhs = a.eval(prec).mul(&b.eval(prec));
        assert!(lhs.eq_to_prec(&rhs), "{:?}", lhs.first_difference(&rhs));
    }

    #[test]
    fn decomposition_small_k() {
        for k in [2u32, 3] {
            let r = verify_decomposition(k, int(15)).unwrap();
            assert!(r.is_pass(), "{r}");
        }
    }

    #[test]
    fn lemma_checks() {
        assert!(verify_lemma_onemore(1, 0, int(10)).unwrap().is_pass());
        assert!(verify_lemma_onemore(2, 1, int(10)).unwrap().is_pass());
        assert!(verify_lemma_theta1eps(0, 1, 0, int(10)).unwrap().is_pass());
        assert!(verify_lemma_theta1eps(1, 2, 1, int(10)).unwrap().is_pass());
    }

    #[test]
    fn lemma42_small() {
        for r in verify_lemma42(int(30)) {
            assert!(r.is_pass(), "{r}");
        }
    }

    #[test]
    fn serde_shape() {
        let t = h_step_even(&h_base());
        let json = serde_json::to_string(t.entry(2)).unwrap();
        assert!(json.contains("coeff") && json.contains("atoms"));
        let back: ThetaExpr = serde_json::from_str(&json).unwrap();
        assert_eq!(*t.entry(2), back);
    }
}
