//! Braid words, Garside left-canonical forms, and the word problem.
//!
//! A braid on `n` strands is a word in the Artin generators σ_1, …, σ_{n−1}.
//! Words are encoded as sequences of nonzero integers: the letter `e` stands
//! for σ_{|e|} when `e > 0` and for σ_{|e|}⁻¹ when `e < 0`.
//!
//! Equality in the group is decided through the left-canonical (Garside)
//! normal form with permutation-braid factors. The internal Garside element
//! is the positive half twist; the full twist Δ_n = (σ_1 ⋯ σ_{n−1})^n that
//! generates the center is its square.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A word in the standard generators of the braid group B_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    /// Builds a word, validating that every letter indexes a generator of B_n.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        for &e in &letters {
            if e == 0 {
                return Err(Error::ZeroLetter);
            }
            if e.unsigned_abs() as usize > strands - 1 {
                return Err(Error::LetterOutOfRange { letter: e, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// The identity braid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// True when every letter is a positive generator (vacuously for the identity).
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&e| e > 0)
    }

    /// Concatenation, the group operation on words.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Group inverse: letters negated in reverse order.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&e| -e).collect(),
        }
    }

    /// Mirror braid: every letter negated, order preserved. Its closure is the
    /// mirror image of the closure of `self`.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&e| -e).collect(),
        }
    }

    /// `k`-th power; negative exponents use the inverse.
    pub fn power(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Exponent sum of the word; the homomorphism B_n → ℤ with lk(σ_i) = 1.
    pub fn linking_number(&self) -> i64 {
        self.letters.iter().map(|&e| e.signum() as i64).sum()
    }

    /// A braid word is alternating when its letters all lie in one of the two
    /// alternating generator families: σ_1, σ_2⁻¹, σ_3, σ_4⁻¹, … or its mirror.
    /// The identity word is alternating by the empty-product convention.
    pub fn is_alternating(&self) -> bool {
        let fits = |flip: bool| {
            self.letters
                .iter()
                .all(|&e| (e > 0) == ((e.unsigned_abs() % 2 == 1) ^ flip))
        };
        fits(false) || fits(true)
    }

    /// Permutation of strand positions induced by the word.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &e in &self.letters {
            p = p.then_transposition(e.unsigned_abs() as usize - 1);
        }
        p
    }

    /// Number of components of the closed braid: cycles of the induced permutation.
    pub fn closure_component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Left-canonical Garside normal form.
    pub fn normal_form(&self) -> NormalForm {
        normal_form_of(self)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses a whitespace-separated list of nonzero integers. When `strands` is
/// omitted the count is inferred as 1 + max|e|.
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let e: i32 = tok.parse().map_err(|_| Error::BadLetter(tok.to_string()))?;
        letters.push(e);
    }
    let n = match strands {
        Some(n) => n,
        None => 1 + letters.iter().map(|e| e.unsigned_abs() as usize).max().unwrap_or(0),
    };
    BraidWord::new(n, letters)
}

/// The full twist Δ_n = (σ_1 σ_2 ⋯ σ_{n−1})^n, a word of length n(n−1).
pub fn delta_braid(n: usize) -> Result<BraidWord> {
    let round: Vec<i32> = (1..n as i32).collect();
    BraidWord::new(n, round.repeat(n))
}

/// The pair (a, b) = (σ_1⋯σ_{n−1}, σ_1⋯σ_{n−1}σ_1) whose images generate
/// B_n modulo its center; a^n and b^{n−1} both equal the full twist.
pub fn torsion_generators(n: usize) -> Result<(BraidWord, BraidWord)> {
    let a: Vec<i32> = (1..n as i32).collect();
    let mut b = a.clone();
    b.push(1);
    Ok((BraidWord::new(n, a)?, BraidWord::new(n, b)?))
}

/// Word-problem oracle: true iff the words represent the same element of B_n.
pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands != b.strands {
        return Err(Error::StrandMismatch(a.strands, b.strands));
    }
    Ok(a.normal_form() == b.normal_form())
}

/// True iff a·b⁻¹ is a power of the full twist, i.e. the words agree in
/// B_n / ⟨Δ_n⟩. The candidate power is read off the linking number first,
/// so only one normal-form comparison is needed.
pub fn equal_mod_center(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands != b.strands {
        return Err(Error::StrandMismatch(a.strands, b.strands));
    }
    let n = a.strands as i64;
    let full_twist_lk = n * (n - 1);
    let diff = a.linking_number() - b.linking_number();
    if diff % full_twist_lk != 0 {
        return Ok(false);
    }
    let k = diff / full_twist_lk;
    let shifted = b.concat(&delta_braid(a.strands)?.power(k))?;
    braids_equal(a, &shifted)
}

/// A permutation of strand positions 0..n−1; `image[i]` is where the strand
/// entering at position `i` exits.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (0..n).collect() }
    }

    /// The half twist: full reversal of positions.
    pub fn half_twist(n: usize) -> Self {
        Permutation { image: (0..n).rev().collect() }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_half_twist(&self) -> bool {
        let n = self.image.len();
        self.image.iter().enumerate().all(|(i, &x)| x == n - 1 - i)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    /// One-line notation with 1-based entries, for serialization.
    pub fn one_line(&self) -> Vec<usize> {
        self.image.iter().map(|&x| x + 1).collect()
    }

    /// Post-compose with the transposition of positions s, s+1 (appending a
    /// crossing below: new(i) = t_s(old(i))).
    pub fn then_transposition(&self, s: usize) -> Permutation {
        let image = self
            .image
            .iter()
            .map(|&x| {
                if x == s {
                    s + 1
                } else if x == s + 1 {
                    s
                } else {
                    x
                }
            })
            .collect();
        Permutation { image }
    }

    /// Pre-compose with the transposition of positions s, s+1 (removing a
    /// crossing from the top: new = old ∘ t_s).
    pub fn swap_sources(&self, s: usize) -> Permutation {
        let mut image = self.image.clone();
        image.swap(s, s + 1);
        Permutation { image }
    }

    /// Conjugation by the half twist; sends σ_s to σ_{n−1−s}.
    pub fn flip(&self) -> Permutation {
        let n = self.image.len();
        let image = (0..n).map(|i| n - 1 - self.image[n - 1 - i]).collect();
        Permutation { image }
    }

    pub fn inversions(&self) -> usize {
        let n = self.image.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.image[i] > self.image[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// σ_s is a left divisor of this permutation braid iff the strands
    /// entering at s and s+1 cross.
    pub fn has_left_descent(&self, s: usize) -> bool {
        self.image[s] > self.image[s + 1]
    }

    /// σ_s is a right divisor iff the strands exiting at s and s+1 cross.
    pub fn has_right_descent(&self, s: usize) -> bool {
        let pos_s = self.image.iter().position(|&x| x == s).unwrap();
        let pos_s1 = self.image.iter().position(|&x| x == s + 1).unwrap();
        pos_s > pos_s1
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.image[i];
            }
        }
        cycles
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.image.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    /// A positive word realizing this permutation braid (length = inversions).
    pub fn positive_word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut word = Vec::with_capacity(self.inversions());
        'outer: loop {
            for s in 0..p.degree().saturating_sub(1) {
                if p.has_left_descent(s) {
                    word.push(s);
                    p = p.swap_sources(s);
                    continue 'outer;
                }
            }
            break;
        }
        word
    }
}

/// Left-canonical form: a power of the half twist followed by a left-weighted
/// sequence of permutation-braid factors. Two words are equal in B_n iff
/// their normal forms agree component-wise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Power of the positive half twist in front of the factors.
    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Exponent sum recovered from the canonical data.
    pub fn linking_number(&self) -> i64 {
        let n = self.strands as i64;
        let half = n * (n - 1) / 2;
        self.infimum * half + self.factors.iter().map(|f| f.inversions() as i64).sum::<i64>()
    }

    /// Expands the normal form back into a braid word.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters: Vec<i32> = Vec::new();
        let half = Permutation::half_twist(n);
        let half_word: Vec<usize> = half.positive_word();
        if self.infimum >= 0 {
            for _ in 0..self.infimum {
                letters.extend(half_word.iter().map(|&s| s as i32 + 1));
            }
        } else {
            for _ in 0..-self.infimum {
                letters.extend(half_word.iter().rev().map(|&s| -(s as i32 + 1)));
            }
        }
        for f in &self.factors {
            letters.extend(f.positive_word().iter().map(|&s| s as i32 + 1));
        }
        BraidWord { strands: n, letters }
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("NormalForm", 3)?;
        st.serialize_field("strands", &self.strands)?;
        st.serialize_field("infimum", &self.infimum)?;
        let factors: Vec<Vec<usize>> = self.factors.iter().map(|f| f.one_line()).collect();
        st.serialize_field("factors", &factors)?;
        st.end()
    }
}

fn normal_form_of(w: &BraidWord) -> NormalForm {
    let n = w.strands;
    let negatives = w.letters.iter().filter(|&&e| e < 0).count() as i64;

    // Rewrite w as half_twist^(−negatives) · (positive permutation braids):
    // σ_j⁻¹ = Δ⁻¹ · (Δ σ_j⁻¹), and each Δ⁻¹ is pushed to the far left through
    // the atoms before it, conjugating them. Only the parity of the twists
    // passing an atom matters.
    let mut suffix_neg = 0usize;
    let mut atoms: Vec<Permutation> = vec![Permutation::identity(n); 0];
    let mut staged: Vec<(usize, Permutation)> = Vec::with_capacity(w.letters.len());
    for (idx, &e) in w.letters.iter().enumerate().rev() {
        let s = e.unsigned_abs() as usize - 1;
        let atom = if e > 0 {
            Permutation::identity(n).then_transposition(s)
        } else {
            // Δ σ_s⁻¹ as a permutation braid.
            Permutation::half_twist(n).then_transposition(s)
        };
        let atom = if suffix_neg % 2 == 1 { atom.flip() } else { atom };
        if e < 0 {
            suffix_neg += 1;
        }
        if !atom.is_identity() {
            staged.push((idx, atom));
        }
    }
    atoms.extend(staged.into_iter().rev().map(|(_, a)| a));

    left_weight(&mut atoms, n);

    let mut infimum = -negatives;
    let mut start = 0;
    while start < atoms.len() && atoms[start].is_half_twist() {
        infimum += 1;
        start += 1;
    }
    atoms.drain(..start);

    NormalForm { strands: n, infimum, factors: atoms }
}

/// Rewrites a sequence of permutation braids into left-weighted form: for each
/// adjacent pair (A, B), every generator that divides B on the left already
/// divides A on the right.
fn left_weight(factors: &mut Vec<Permutation>, n: usize) {
    if n < 2 {
        return;
    }
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < factors.len() {
            loop {
                let s = (0..n - 1).find(|&s| {
                    factors[i + 1].has_left_descent(s) && !factors[i].has_right_descent(s)
                });
                match s {
                    Some(s) => {
                        factors[i] = factors[i].then_transposition(s);
                        factors[i + 1] = factors[i + 1].swap_sources(s);
                        changed = true;
                    }
                    None => break,
                }
            }
            i += 1;
        }
        factors.retain(|f| !f.is_identity());
        if !changed {
            break;
        }
    }
}
