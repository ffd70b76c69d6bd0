//! Words in free generators and their mixed moments, cumulants and
//! t-coefficients.
//!
//! Each algebra of a [`Scenario`] is generated by one element with known free
//! cumulants, distinct algebras are free, and a [`Letter`] is a scalar
//! multiple of a generator.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{Kind, Limits};
use crate::rational::{self, Rational};
use crate::transforms::{CumulantSequence, MomentSequence};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub algebra: String,
    pub scale: Rational,
}

impl Letter {
    pub fn new(algebra: impl Into<String>, scale: Rational) -> Self {
        Letter {
            algebra: algebra.into(),
            scale,
        }
    }

    pub fn unit(algebra: impl Into<String>) -> Self {
        Letter::new(algebra, Rational::one())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scale.is_one() {
            f.write_str(&self.algebra)
        } else {
            write!(f, "{}*{}", rational::format(&self.scale), self.algebra)
        }
    }
}

fn valid_id(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for Letter {
    type Err = Error;

    /// `X`, `2*X`, `-1/3*Y`.
    fn from_str(s: &str) -> Result<Letter> {
        let (scale, id) = match s.rsplit_once('*') {
            Some((c, id)) => (rational::parse(c)?, id.trim()),
            None => (Rational::one(), s.trim()),
        };
        if !valid_id(id) {
            return Err(Error::Parse(format!("bad algebra id {id:?}")));
        }
        Ok(Letter::new(id, scale))
    }
}

/// A nonempty sequence of letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Word> {
        if letters.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        Ok(Word(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True if the letters come from at least two algebras.
    pub fn is_mixed(&self) -> bool {
        self.0.iter().any(|l| l.algebra != self.0[0].algebra)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::new(
            s.split_whitespace()
                .map(str::parse)
                .collect::<Result<_>>()?,
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub cumulants: CumulantSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioJson {
    pub algebras: BTreeMap<String, AlgebraJson>,
}

/// Free algebras, one generator each, with memo tables for word functionals.
#[derive(Debug, Serialize, Deserialize)]
#[serde(try_from = "ScenarioJson", into = "ScenarioJson")]
pub struct Scenario {
    algebras: BTreeMap<String, CumulantSequence>,
    limits: Limits,
    moments: Mutex<HashMap<Vec<Letter>, Rational>>,
    cumulants: Mutex<HashMap<Vec<Letter>, Rational>>,
    tcoeffs: Mutex<HashMap<Vec<Letter>, Rational>>,
}

impl Clone for Scenario {
    fn clone(&self) -> Self {
        Scenario::with_limits(self.algebras.clone(), self.limits.clone())
            .expect("already validated")
    }
}

impl PartialEq for Scenario {
    fn eq(&self, other: &Self) -> bool {
        self.algebras == other.algebras
    }
}

impl TryFrom<ScenarioJson> for Scenario {
    type Error = Error;

    fn try_from(j: ScenarioJson) -> Result<Self> {
        Scenario::new(
            j.algebras
                .into_iter()
                .map(|(k, v)| (k, v.cumulants))
                .collect(),
        )
    }
}

impl From<Scenario> for ScenarioJson {
    fn from(s: Scenario) -> Self {
        ScenarioJson {
            algebras: s
                .algebras
                .into_iter()
                .map(|(k, cumulants)| (k, AlgebraJson { cumulants }))
                .collect(),
        }
    }
}

// Expansions over regroupings of the first block: `rest` is the list of
// positions after 0 that join it, in increasing order.
fn subsets_after_first(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1u64 << (n - 1)))
        .map(move |mask| (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect())
}

impl Scenario {
    pub fn new(algebras: BTreeMap<String, CumulantSequence>) -> Result<Self> {
        Scenario::with_limits(algebras, Limits::default())
    }

    pub fn with_limits(
        algebras: BTreeMap<String, CumulantSequence>,
        limits: Limits,
    ) -> Result<Self> {
        if let Some(bad) = algebras.keys().find(|k| !valid_id(k)) {
            return Err(Error::Parse(format!("bad algebra id {bad:?}")));
        }
        Ok(Scenario {
            algebras,
            limits,
            moments: Default::default(),
            cumulants: Default::default(),
            tcoeffs: Default::default(),
        })
    }

    pub fn algebras(&self) -> &BTreeMap<String, CumulantSequence> {
        &self.algebras
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    fn generator(&self, id: &str) -> Result<&CumulantSequence> {
        self.algebras
            .get(id)
            .ok_or_else(|| Error::UnknownAlgebra(id.to_string()))
    }

    fn check_word(&self, letters: &[Letter]) -> Result<()> {
        self.limits.check(Kind::Word, letters.len())?;
        for l in letters {
            self.generator(&l.algebra)?;
        }
        Ok(())
    }

    /// Cumulant of one block: zero unless every letter comes from the same
    /// algebra, otherwise multilinear in the scales.
    pub fn mixed_cumulant(&self, letters: &[Letter]) -> Result<Rational> {
        let first = letters
            .first()
            .ok_or_else(|| Error::Parse("empty block".into()))?;
        let gen = self.generator(&first.algebra)?;
        for l in letters {
            self.generator(&l.algebra)?;
        }
        if letters.iter().any(|l| l.algebra != first.algebra) {
            return Ok(Rational::zero());
        }
        let k = gen
            .values()
            .get(letters.len() - 1)
            .ok_or(Error::OrderTooLow {
                need: letters.len(),
                have: gen.order(),
            })?;
        Ok(letters.iter().fold(k.clone(), |acc, l| acc * &l.scale))
    }

    /// `phi(w)`: the sum over `NC(|w|)` of products of block cumulants.
    pub fn mixed_moment(&self, w: &Word) -> Result<Rational> {
        self.check_word(w.letters())?;
        self.moment_of(w.letters())
    }

    fn moment_of(&self, w: &[Letter]) -> Result<Rational> {
        if w.is_empty() {
            return Ok(Rational::one());
        }
        if let Some(v) = self.moments.lock().expect("memo").get(w) {
            return Ok(v.clone());
        }
        let n = w.len();
        let mut total = Rational::zero();
        for rest in subsets_after_first(n) {
            // only single-algebra first blocks contribute
            if rest.iter().any(|&i| w[i].algebra != w[0].algebra) {
                continue;
            }
            let mut block = vec![w[0].clone()];
            block.extend(rest.iter().map(|&i| w[i].clone()));
            let mut term = self.mixed_cumulant(&block)?;
            let mut bounds = vec![0];
            bounds.extend(&rest);
            bounds.push(n);
            for pair in bounds.windows(2) {
                if term.is_zero() {
                    break;
                }
                term *= self.moment_of(&w[pair[0] + 1..pair[1]])?;
            }
            total += term;
        }
        self.moments
            .lock()
            .expect("memo")
            .insert(w.to_vec(), total.clone());
        Ok(total)
    }

    /// `kappa_n(w)` recovered from the mixed moments alone, by inverting the
    /// moment-cumulant relation on the word.
    pub fn cumulant_from_moments(&self, w: &Word) -> Result<Rational> {
        self.check_word(w.letters())?;
        self.cumulant_of(w.letters())
    }

    fn cumulant_of(&self, w: &[Letter]) -> Result<Rational> {
        if let Some(v) = self.cumulants.lock().expect("memo").get(w) {
            return Ok(v.clone());
        }
        let n = w.len();
        let mut value = self.moment_of(w)?;
        for rest in subsets_after_first(n) {
            if rest.len() == n - 1 {
                continue;
            }
            let mut block = vec![w[0].clone()];
            block.extend(rest.iter().map(|&i| w[i].clone()));
            let mut term = self.cumulant_of(&block)?;
            let mut bounds = vec![0];
            bounds.extend(&rest);
            bounds.push(n);
            for pair in bounds.windows(2) {
                term *= self.moment_of(&w[pair[0] + 1..pair[1]])?;
            }
            value -= term;
        }
        self.cumulants
            .lock()
            .expect("memo")
            .insert(w.to_vec(), value.clone());
        Ok(value)
    }

    /// `t_{|w|-1}(w_1, ..., w_n)`, solved from the linked-partition expansion
    /// of `phi(w)`. Every letter must have nonzero expectation.
    pub fn mixed_tcoeff(&self, w: &Word) -> Result<Rational> {
        self.check_word(w.letters())?;
        for l in w.letters() {
            if self.moment_of(std::slice::from_ref(l))?.is_zero() {
                return Err(Error::LetterNotInDomain {
                    letter: l.to_string(),
                });
            }
        }
        self.tcoeff_of(w.letters())
    }

    // Groups NCL(n) by the block (0, a_2, ..., a_k) holding the first letter:
    // the stretch strictly between 0 and a_2, and each stretch from a_j up to
    // a_{j+1}, carry arbitrary linked partitions, whose weights sum to the
    // moment of that stretch.
    fn tcoeff_of(&self, w: &[Letter]) -> Result<Rational> {
        if let Some(v) = self.tcoeffs.lock().expect("memo").get(w) {
            return Ok(v.clone());
        }
        let n = w.len();
        let value = if n == 1 {
            self.moment_of(w)?
        } else {
            let mut rest_sum = Rational::zero();
            for rest in subsets_after_first(n) {
                if rest.len() == n - 1 {
                    continue;
                }
                let mut block = vec![w[0].clone()];
                block.extend(rest.iter().map(|&i| w[i].clone()));
                let mut term = self.tcoeff_of(&block)?;
                let head_end = rest.first().copied().unwrap_or(n);
                term *= self.moment_of(&w[1..head_end])?;
                let mut bounds = rest.clone();
                bounds.push(n);
                for pair in bounds.windows(2) {
                    if term.is_zero() {
                        break;
                    }
                    term *= self.moment_of(&w[pair[0]..pair[1]])?;
                }
                rest_sum += term;
            }
            let mut divisor = Rational::one();
            for l in &w[1..] {
                divisor *= self.moment_of(std::slice::from_ref(l))?;
            }
            (self.moment_of(w)? - rest_sum) / divisor
        };
        self.tcoeffs
            .lock()
            .expect("memo")
            .insert(w.to_vec(), value.clone());
        Ok(value)
    }

    fn expansion_cap(&self) -> usize {
        self.limits.cap(Kind::Word) / 2
    }

    /// `m_n(X + Y)` for `n <= order`, expanding `(X + Y)^n` into all words.
    pub fn sum_moments(&self, x: &str, y: &str, order: usize) -> Result<MomentSequence> {
        let cap = self.expansion_cap();
        if order > cap {
            return Err(Error::LimitExceeded {
                kind: Kind::Word,
                n: order,
                cap,
            });
        }
        self.generator(x)?;
        self.generator(y)?;
        let mut out = Vec::with_capacity(order);
        for n in 1..=order {
            let mut total = Rational::zero();
            for mask in 0u64..(1u64 << n) {
                let letters: Vec<Letter> = (0..n)
                    .map(|i| Letter::unit(if mask & (1 << i) != 0 { y } else { x }))
                    .collect();
                total += self.moment_of(&letters)?;
            }
            out.push(total);
        }
        Ok(MomentSequence::new(out))
    }

    /// `m_n(XY)` for `n <= order`, as the moment of the alternating word
    /// `X Y X Y ...` of length `2n`.
    pub fn product_moments(&self, x: &str, y: &str, order: usize) -> Result<MomentSequence> {
        self.limits.check(Kind::Word, 2 * order)?;
        self.generator(x)?;
        self.generator(y)?;
        (1..=order)
            .map(|n| {
                let letters: Vec<Letter> = (0..2 * n)
                    .map(|i| Letter::unit(if i % 2 == 0 { x } else { y }))
                    .collect();
                self.moment_of(&letters)
            })
            .collect::<Result<Vec<_>>>()
            .map(MomentSequence::new)
    }

    /// Checks that every mixed word of length `2..=max_len` over the
    /// scenario's generators has vanishing t-coefficient and vanishing
    /// cumulant (recovered from moments).
    pub fn freeness_vanishing_suite(&self, max_len: usize) -> Result<VanishingReport> {
        self.limits.check(Kind::Word, max_len)?;
        for (id, k) in &self.algebras {
            if k.values().first().is_none_or(Zero::is_zero) {
                return Err(Error::LetterNotInDomain { letter: id.clone() });
            }
        }
        let ids: Vec<&String> = self.algebras.keys().collect();
        let mut checked = 0;
        let mut counterexamples = Vec::new();
        if ids.len() >= 2 {
            for len in 2..=max_len {
                let total = ids.len().pow(len as u32);
                for code in 0..total {
                    let mut c = code;
                    let letters: Vec<Letter> = (0..len)
                        .map(|_| {
                            let l = Letter::unit(ids[c % ids.len()].as_str());
                            c /= ids.len();
                            l
                        })
                        .collect();
                    let w = Word(letters);
                    if !w.is_mixed() {
                        continue;
                    }
                    checked += 1;
                    let t = self.tcoeff_of(w.letters())?;
                    let k = self.cumulant_of(w.letters())?;
                    if !t.is_zero() || !k.is_zero() {
                        counterexamples.push(Counterexample {
                            word: w.to_string(),
                            tcoeff: t,
                            cumulant: k,
                        });
                    }
                }
            }
        }
        Ok(VanishingReport {
            max_len,
            words_checked: checked,
            passed: counterexamples.is_empty(),
            counterexamples,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub word: String,
    #[serde(with = "rational::serde_one")]
    pub tcoeff: Rational,
    #[serde(with = "rational::serde_one")]
    pub cumulant: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingReport {
    pub max_len: usize,
    pub words_checked: usize,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
}
