//! Braid words in Artin generators and in Birman–Ko–Lee band generators,
//! with the word-level constructions the rest of the crate is built on:
//! torus-knot words, writhe, cabling, index shifts and band expansion.
//!
//! Strand counts are always stored explicitly. Inference from the letters
//! (`max|i| + 1` for Artin words, `max j` for band words) happens only when
//! parsing bare CLI text.

use crate::perm::Permutation;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("band generator a({i},{j}) is out of range for {strands} strands")]
    BandOutOfRange { i: usize, j: usize, strands: usize },
    #[error("torus parameters must satisfy p >= 1 and q >= 1, got p={p}, q={q}")]
    BadTorusParameters { p: i64, q: i64 },
    #[error("cable parameter k must be at least 1, got {0}")]
    BadCableParameter(i64),
    #[error("cable word on {0} strands does not fit the letter range")]
    CableTooWide(u64),
    #[error("shift by {offset} sends a({i},{j}) past {new_strands} strands")]
    ShiftOutOfRange { offset: usize, i: usize, j: usize, new_strands: usize },
    #[error("unable to parse `{0}` as a braid word letter")]
    BadLetter(String),
    #[error("unable to parse `{0}` as a band generator")]
    BadBandToken(String),
    #[error("malformed strands header `{0}`")]
    BadHeader(String),
}

/// Sign of a generator occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// A word in Artin generators. Letter `i > 0` is `sigma_i`, `i < 0` is
/// `sigma_{|i|}` inverted; every `|i|` is strictly below the strand count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ArtinWord {
    letters: Vec<i32>,
    strands: usize,
}

impl ArtinWord {
    pub fn new(letters: Vec<i32>, strands: usize) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(ArtinWord { letters, strands })
    }

    pub fn empty(strands: usize) -> Result<Self, BraidError> {
        Self::new(Vec::new(), strands)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sum of letter signs.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| if l > 0 { 1i64 } else { -1 }).sum()
    }

    pub fn concat(&self, other: &ArtinWord) -> Result<ArtinWord, BraidError> {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        ArtinWord::new(letters, strands)
    }

    /// Underlying permutation: the product of the letter transpositions
    /// written left to right (so the rightmost letter acts first).
    pub fn permutation(&self) -> Permutation {
        let mut acc = Permutation::identity(self.strands);
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let t = Permutation::transposition(self.strands, i, i + 1).expect("letter validated");
            acc = acc.mul(&t);
        }
        acc
    }

    /// Word text: whitespace-separated letters, optionally preceded by a
    /// `strands=<m>;` header when the strand count is not inferable.
    pub fn to_text(&self) -> String {
        let body = self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
        if self.strands == inferred_artin_strands(&self.letters) {
            body
        } else if body.is_empty() {
            format!("strands={};", self.strands)
        } else {
            format!("strands={}; {}", self.strands, body)
        }
    }

    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let (header, body) = split_header(text)?;
        let mut letters = Vec::new();
        for token in body.split_whitespace() {
            let l: i32 = token.parse().map_err(|_| BraidError::BadLetter(token.to_string()))?;
            if l == 0 {
                return Err(BraidError::BadLetter(token.to_string()));
            }
            letters.push(l);
        }
        let strands = header.unwrap_or_else(|| inferred_artin_strands(&letters));
        ArtinWord::new(letters, strands)
    }
}

impl std::fmt::Display for ArtinWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn inferred_artin_strands(letters: &[i32]) -> usize {
    letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1)
}

/// One band generator occurrence `a(i,j)^sign`, `1 <= i < j <= strands`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BandLetter {
    pub i: usize,
    pub j: usize,
    pub sign: Sign,
}

impl BandLetter {
    pub fn new(i: usize, j: usize, sign: Sign) -> BandLetter {
        BandLetter { i, j, sign }
    }
}

impl std::fmt::Display for BandLetter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.sign {
            Sign::Positive => write!(f, "a({},{})", self.i, self.j),
            Sign::Negative => write!(f, "A({},{})", self.i, self.j),
        }
    }
}

/// A word in Birman–Ko–Lee band generators on an explicit strand count.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BklWord {
    letters: Vec<BandLetter>,
    strands: usize,
}

impl BklWord {
    pub fn new(letters: Vec<BandLetter>, strands: usize) -> Result<Self, BraidError> {
        if strands < 1 {
            return Err(BraidError::NoStrands);
        }
        for l in &letters {
            if l.i < 1 || l.i >= l.j || l.j > strands {
                return Err(BraidError::BandOutOfRange { i: l.i, j: l.j, strands });
            }
        }
        Ok(BklWord { letters, strands })
    }

    pub fn empty(strands: usize) -> Result<Self, BraidError> {
        Self::new(Vec::new(), strands)
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BklWord) -> Result<BklWord, BraidError> {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BklWord::new(letters, strands)
    }

    /// Underlying permutation, same reading convention as for Artin words.
    pub fn permutation(&self) -> Permutation {
        let mut acc = Permutation::identity(self.strands);
        for l in &self.letters {
            let t = Permutation::transposition(self.strands, l.i - 1, l.j - 1).expect("letter validated");
            acc = acc.mul(&t);
        }
        acc
    }

    pub fn to_text(&self) -> String {
        let body = self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
        if self.strands == inferred_bkl_strands(&self.letters) {
            body
        } else if body.is_empty() {
            format!("strands={};", self.strands)
        } else {
            format!("strands={}; {}", self.strands, body)
        }
    }

    pub fn to_text_with_header(&self) -> String {
        let body = self.letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
        if body.is_empty() {
            format!("strands={};", self.strands)
        } else {
            format!("strands={}; {}", self.strands, body)
        }
    }

    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let (header, body) = split_header(text)?;
        let mut letters = Vec::new();
        for token in body.split_whitespace() {
            letters.push(parse_band_token(token)?);
        }
        let strands = header.unwrap_or_else(|| inferred_bkl_strands(&letters));
        BklWord::new(letters, strands)
    }
}

impl std::fmt::Display for BklWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn inferred_bkl_strands(letters: &[BandLetter]) -> usize {
    letters.iter().map(|l| l.j).max().unwrap_or(1)
}

fn parse_band_token(token: &str) -> Result<BandLetter, BraidError> {
    let bad = || BraidError::BadBandToken(token.to_string());
    let sign = match token.chars().next() {
        Some('a') => Sign::Positive,
        Some('A') => Sign::Negative,
        _ => return Err(bad()),
    };
    let rest = &token[1..];
    let inner = rest.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
    let mut parts = inner.split(',');
    let i: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let j: usize = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(BandLetter::new(i, j, sign))
}

fn split_header(text: &str) -> Result<(Option<usize>, &str), BraidError> {
    let trimmed = text.trim_start();
    if let Some(rest) = trimmed.strip_prefix("strands=") {
        let semi = rest.find(';').ok_or_else(|| BraidError::BadHeader(text.trim().to_string()))?;
        let count: usize = rest[..semi]
            .trim()
            .parse()
            .map_err(|_| BraidError::BadHeader(text.trim().to_string()))?;
        Ok((Some(count), &rest[semi + 1..]))
    } else {
        Ok((None, text))
    }
}

/// Braid word of the `(p,q)`-torus knot or link: the block
/// `1, 2, ..., p-1` repeated `q` times, on `p` strands.
pub fn torus_knot_braid_word(p: u32, q: u32) -> Result<ArtinWord, BraidError> {
    if p < 1 || q < 1 {
        return Err(BraidError::BadTorusParameters { p: p as i64, q: q as i64 });
    }
    let block: Vec<i32> = (1..p as i32).collect();
    let mut letters = Vec::with_capacity(block.len() * q as usize);
    for _ in 0..q {
        letters.extend_from_slice(&block);
    }
    ArtinWord::new(letters, p as usize)
}

/// Writhe of a braid word: the sum of its letter signs.
pub fn writhe(word: &ArtinWord) -> i64 {
    word.writhe()
}

/// Braid word of the `(k,l)`-cable of the closure of `word`.
///
/// Each letter `i` becomes `k` descending runs (`k|i|+t` down to
/// `k(|i|-1)+t+1` for `t = 0..k-1`, all with the sign of `i`), then a
/// framing tail corrects `l - k * writhe`: copies of the descending run
/// `-1..-(k-1)` when negative, of the ascending run `1..k-1` otherwise.
pub fn cable_word(word: &ArtinWord, k: u32, l: i64) -> Result<ArtinWord, BraidError> {
    if k < 1 {
        return Err(BraidError::BadCableParameter(k as i64));
    }
    let k_us = k as usize;
    let new_strands = (word.strands() as u64) * (k as u64);
    if new_strands > i32::MAX as u64 {
        return Err(BraidError::CableTooWide(new_strands));
    }
    let ki = k as i64;
    let mut letters: Vec<i32> = Vec::new();
    for &i in word.letters() {
        let a = i.unsigned_abs() as i64;
        for t in 0..ki {
            let top = ki * a + t;
            let bottom = ki * (a - 1) + t + 1;
            let mut gen = top;
            while gen >= bottom {
                letters.push(if i < 0 { -(gen as i32) } else { gen as i32 });
                gen -= 1;
            }
        }
    }
    let wr = word.writhe();
    let framing = l - ki * wr;
    if framing < 0 {
        for _ in 0..(-framing) {
            for g in 1..k_us {
                letters.push(-(g as i32));
            }
        }
    } else {
        for _ in 0..framing {
            for g in 1..k_us {
                letters.push(g as i32);
            }
        }
    }
    ArtinWord::new(letters, new_strands as usize)
}

/// Shifts every band generator `a(i,j)` to `a(i+offset, j+offset)` on a new
/// strand count. Rejects letters that would leave the strand range.
pub fn bkl_shift(word: &BklWord, offset: usize, new_strands: usize) -> Result<BklWord, BraidError> {
    let mut letters = Vec::with_capacity(word.len());
    for l in word.letters() {
        let (i, j) = (l.i + offset, l.j + offset);
        if j > new_strands {
            return Err(BraidError::ShiftOutOfRange { offset, i: l.i, j: l.j, new_strands });
        }
        letters.push(BandLetter::new(i, j, l.sign));
    }
    BklWord::new(letters, new_strands)
}

/// Expands a band word into Artin generators:
/// `a(i,j)^e = (sigma_{j-1} ... sigma_{i+1}) sigma_i^e (sigma_{i+1}^-1 ... sigma_{j-1}^-1)`.
/// The underlying permutation is preserved letterwise.
pub fn bkl_to_artin(word: &BklWord) -> ArtinWord {
    let mut letters = Vec::new();
    for l in word.letters() {
        for g in ((l.i + 1)..l.j).rev() {
            letters.push(g as i32);
        }
        letters.push(l.sign.as_i32() * l.i as i32);
        for g in (l.i + 1)..l.j {
            letters.push(-(g as i32));
        }
    }
    ArtinWord::new(letters, word.strands()).expect("band letters stay in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn artin(letters: &[i32], strands: usize) -> ArtinWord {
        ArtinWord::new(letters.to_vec(), strands).unwrap()
    }

    fn band(i: usize, j: usize) -> BandLetter {
        BandLetter::new(i, j, Sign::Positive)
    }

    #[test]
    fn torus_words() {
        assert_eq!(torus_knot_braid_word(2, 3).unwrap(), artin(&[1, 1, 1], 2));
        assert_eq!(torus_knot_braid_word(1, 5).unwrap(), artin(&[], 1));
        assert_eq!(torus_knot_braid_word(3, 2).unwrap(), artin(&[1, 2, 1, 2], 3));
        assert!(torus_knot_braid_word(0, 3).is_err());
        assert!(torus_knot_braid_word(2, 0).is_err());
    }

    #[test]
    fn torus_word_writhe() {
        for (p, q) in [(2u32, 3u32), (3, 4), (4, 5), (5, 2)] {
            let w = torus_knot_braid_word(p, q).unwrap();
            assert_eq!(w.writhe(), ((p - 1) * q) as i64);
        }
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(writhe(&artin(&[1, 1, 1], 2)), 3);
        assert_eq!(writhe(&artin(&[], 1)), 0);
        assert_eq!(writhe(&artin(&[1, -1, 2, -2], 3)), 0);
    }

    #[test]
    fn writhe_is_additive_under_concatenation() {
        let u = artin(&[1, -2, 1], 3);
        let w = artin(&[2, 2, -1], 3);
        assert_eq!(u.concat(&w).unwrap().writhe(), u.writhe() + w.writhe());
    }

    #[test]
    fn cable_of_trefoil() {
        let trefoil = artin(&[1, 1, 1], 2);
        let cabled = cable_word(&trefoil, 2, 1).unwrap();
        assert_eq!(
            cabled,
            artin(&[2, 1, 3, 2, 2, 1, 3, 2, 2, 1, 3, 2, -1, -1, -1, -1, -1], 4)
        );
    }

    #[test]
    fn one_cable_with_zero_framing_is_identity() {
        let w = artin(&[1, -2, 2, 1], 3);
        assert_eq!(cable_word(&w, 1, w.writhe()).unwrap(), w);
    }

    #[test]
    fn cable_of_empty_word_is_framing_tail() {
        let unknot = artin(&[], 1);
        assert_eq!(cable_word(&unknot, 2, 3).unwrap(), artin(&[1, 1, 1], 2));
        assert!(cable_word(&unknot, 0, 3).is_err());
    }

    #[test]
    fn cable_letter_count_formula() {
        let words = [artin(&[1, 1, 1], 2), artin(&[1, -2], 3), artin(&[], 2), artin(&[2, -1, 2, 1], 3)];
        for w in &words {
            for k in 1u32..=3 {
                for l in -4i64..=4 {
                    let c = cable_word(w, k, l).unwrap();
                    let expected = (k as i64) * (k as i64) * w.len() as i64
                        + (l - k as i64 * w.writhe()).abs() * (k as i64 - 1);
                    assert_eq!(c.len() as i64, expected, "word {w} k={k} l={l}");
                    assert_eq!(c.strands(), w.strands() * k as usize);
                }
            }
        }
    }

    #[test]
    fn word_permutations() {
        let p = artin(&[1, 1, 1], 2).permutation();
        assert_eq!(p, Permutation::transposition(2, 0, 1).unwrap());
        assert_eq!(artin(&[], 1).permutation(), Permutation::identity(1));

        let w = BklWord::new(vec![band(1, 3), band(2, 3)], 3).unwrap();
        let p = w.permutation();
        // a(1,3) a(2,3) sends 1 -> 3, 3 -> 2, 2 -> 1.
        assert_eq!(p.apply(0), 2);
        assert_eq!(p.apply(2), 1);
        assert_eq!(p.apply(1), 0);
    }

    #[test]
    fn shift_examples() {
        let w = BklWord::new(vec![band(1, 3)], 3).unwrap();
        let shifted = bkl_shift(&w, 2, 5).unwrap();
        assert_eq!(shifted, BklWord::new(vec![band(3, 5)], 5).unwrap());

        let w2 = BklWord::new(vec![band(2, 3), band(1, 2)], 3).unwrap();
        assert_eq!(bkl_shift(&w2, 0, 3).unwrap(), w2);
        assert_eq!(
            bkl_shift(&w2, 1, 4).unwrap(),
            BklWord::new(vec![band(3, 4), band(2, 3)], 4).unwrap()
        );
        assert!(bkl_shift(&w2, 2, 4).is_err());
    }

    #[test]
    fn shift_is_a_homomorphism() {
        let u = BklWord::new(vec![band(1, 2), band(2, 4)], 4).unwrap();
        let w = BklWord::new(vec![band(1, 4), band(3, 4)], 4).unwrap();
        let lhs = bkl_shift(&u.concat(&w).unwrap(), 3, 7).unwrap();
        let rhs = bkl_shift(&u, 3, 7).unwrap().concat(&bkl_shift(&w, 3, 7).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn band_expansion() {
        let w = BklWord::new(vec![band(1, 2)], 2).unwrap();
        assert_eq!(bkl_to_artin(&w), artin(&[1], 2));

        let w = BklWord::new(vec![band(1, 3)], 3).unwrap();
        let e = bkl_to_artin(&w);
        assert_eq!(e, artin(&[2, 1, -2], 3));
        assert_eq!(e.permutation(), Permutation::transposition(3, 0, 2).unwrap());

        let w = BklWord::new(vec![BandLetter::new(2, 4, Sign::Negative)], 4).unwrap();
        assert_eq!(bkl_to_artin(&w), artin(&[3, -2, -3], 4));
    }

    #[test]
    fn band_expansion_preserves_permutation_randomly() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let strands = 2 + (next() % 5) as usize;
            let len = (next() % 11) as usize;
            let mut letters = Vec::with_capacity(len);
            for _ in 0..len {
                let i = 1 + (next() as usize) % (strands - 1);
                let j = i + 1 + (next() as usize) % (strands - i);
                let sign = if next() % 2 == 0 { Sign::Positive } else { Sign::Negative };
                letters.push(BandLetter::new(i, j, sign));
            }
            let w = BklWord::new(letters, strands).unwrap();
            assert_eq!(bkl_to_artin(&w).permutation(), w.permutation());
        }
    }

    #[test]
    fn word_text_round_trip() {
        for text in ["1 1 1", "-1 2 -2", "strands=4; 1 1", "strands=3;"] {
            let w = ArtinWord::parse(text).unwrap();
            assert_eq!(w.to_text(), text);
        }
        assert_eq!(ArtinWord::parse("1 1 1").unwrap().strands(), 2);
        assert!(ArtinWord::parse("1 0 1").is_err());
        assert!(ArtinWord::parse("strands=2; 3").is_err());
        assert!(ArtinWord::parse("one two").is_err());

        for text in ["a(1,3) A(2,3)", "strands=5; a(1,2)", "strands=2;"] {
            let w = BklWord::parse(text).unwrap();
            assert_eq!(w.to_text(), text);
        }
        assert!(BklWord::parse("a(3,2)").is_err());
        assert!(BklWord::parse("b(1,2)").is_err());
        assert!(BklWord::parse("a(1 2)").is_err());
    }
}
