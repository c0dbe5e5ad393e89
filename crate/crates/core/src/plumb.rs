//! Mergers and word-level braided Stallings plumbing of band words.
//!
//! A merger of size `(l1, l2)` interleaves the index ranges `1..=l1` and
//! `l1+1..=l1+l2` into `1..=l1+l2` order-preservingly on each block. The
//! plumbing of band words `B1` on `n1` strands and `B2` on `n2` strands
//! interleaves the letters of `B1` with those of `B2` shifted by `n1 - 1`,
//! producing a word on `n1 + n2 - 1` strands.

use crate::braid::{bkl_shift, BklWord, BraidError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlumbError {
    #[error("merger map has length {found}, sizes demand {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("merger sizes ({l1},{l2}) do not match word lengths ({b1},{b2})")]
    SizeMismatch { l1: usize, l2: usize, b1: usize, b2: usize },
    #[error("plumbing needs at least 2 strands on each side, got {0} and {1}")]
    TooFewStrands(usize, usize),
    #[error("invalid merger: {0}")]
    InvalidMerger(String),
    #[error("unable to parse merger text `{0}`")]
    BadMergerText(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

/// Reasons a candidate map fails to be a merger.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergerViolation {
    NotABijection { value: usize },
    FirstBlockNotIncreasing { at: usize },
    SecondBlockNotIncreasing { at: usize },
}

impl std::fmt::Display for MergerViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MergerViolation::NotABijection { value } => {
                write!(f, "map is not a bijection near value {value}")
            }
            MergerViolation::FirstBlockNotIncreasing { at } => {
                write!(f, "first block fails to increase at index {at}")
            }
            MergerViolation::SecondBlockNotIncreasing { at } => {
                write!(f, "second block fails to increase at index {at}")
            }
        }
    }
}

/// An order-preserving interleaving `f` of `{1..l1}` and `{l1+1..l1+l2}`.
/// Stored as the explicit image list so `f^-1` lookups are O(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Merger {
    map: Vec<usize>,
    sizes: (usize, usize),
}

impl Merger {
    pub fn new(map: Vec<usize>, l1: usize, l2: usize) -> Result<Self, PlumbError> {
        let violations = validate_merger(&map, l1, l2)?;
        if let Some(first) = violations.first() {
            return Err(PlumbError::InvalidMerger(first.to_string()));
        }
        Ok(Merger { map, sizes: (l1, l2) })
    }

    pub fn identity(l1: usize, l2: usize) -> Self {
        Merger { map: (1..=l1 + l2).collect(), sizes: (l1, l2) }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn sizes(&self) -> (usize, usize) {
        self.sizes
    }

    /// Image of the 1-based index `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.map[x - 1]
    }

    /// Text form `f=2,1,3 sizes=(2,1)`.
    pub fn to_text(&self) -> String {
        let images = self.map.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        format!("f={} sizes=({},{})", images, self.sizes.0, self.sizes.1)
    }

    pub fn parse(text: &str) -> Result<Self, PlumbError> {
        let bad = || PlumbError::BadMergerText(text.trim().to_string());
        let mut map: Option<Vec<usize>> = None;
        let mut sizes: Option<(usize, usize)> = None;
        for part in text.split(|c: char| c.is_whitespace() || c == ';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if let Some(rest) = part.strip_prefix("f=") {
                let images = if rest.is_empty() {
                    Vec::new()
                } else {
                    rest.split(',')
                        .map(|tok| tok.trim().parse::<usize>().map_err(|_| bad()))
                        .collect::<Result<Vec<_>, _>>()?
                };
                map = Some(images);
            } else if let Some(rest) = part.strip_prefix("sizes=") {
                let inner = rest.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
                let mut nums = inner.split(',');
                let l1 = nums.next().ok_or_else(bad)?.trim().parse::<usize>().map_err(|_| bad())?;
                let l2 = nums.next().ok_or_else(bad)?.trim().parse::<usize>().map_err(|_| bad())?;
                if nums.next().is_some() {
                    return Err(bad());
                }
                sizes = Some((l1, l2));
            } else {
                return Err(bad());
            }
        }
        match (map, sizes) {
            (Some(map), Some((l1, l2))) => Merger::new(map, l1, l2),
            _ => Err(bad()),
        }
    }
}

impl std::fmt::Display for Merger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Checks the two merger conditions and reports every violation. The only
/// hard error is a length mismatch between the map and the sizes.
pub fn validate_merger(map: &[usize], l1: usize, l2: usize) -> Result<Vec<MergerViolation>, PlumbError> {
    let total = l1 + l2;
    if map.len() != total {
        return Err(PlumbError::LengthMismatch { expected: total, found: map.len() });
    }
    let mut violations = Vec::new();
    let mut seen = vec![false; total];
    for &v in map {
        if v < 1 || v > total || seen[v - 1] {
            violations.push(MergerViolation::NotABijection { value: v });
        } else {
            seen[v - 1] = true;
        }
    }
    for at in 1..l1 {
        if map[at - 1] >= map[at] {
            violations.push(MergerViolation::FirstBlockNotIncreasing { at: at + 1 });
        }
    }
    for at in (l1 + 1)..total {
        if map[at - 1] >= map[at] {
            violations.push(MergerViolation::SecondBlockNotIncreasing { at: at + 1 });
        }
    }
    Ok(violations)
}

/// All mergers of size `(l1, l2)` in lexicographic order of their image
/// lists; there are `binomial(l1+l2, l1)` of them.
pub fn enumerate_mergers(l1: usize, l2: usize) -> Vec<Merger> {
    let total = l1 + l2;
    let mut out = Vec::new();
    let mut first_positions: Vec<usize> = (1..=l1).collect();
    loop {
        let chosen: Vec<bool> = {
            let mut mask = vec![false; total];
            for &p in &first_positions {
                mask[p - 1] = true;
            }
            mask
        };
        let mut map = vec![0usize; total];
        let mut idx1 = 0;
        let mut idx2 = l1;
        for (pos0, &is_first) in chosen.iter().enumerate() {
            if is_first {
                map[idx1] = pos0 + 1;
                idx1 += 1;
            } else {
                map[idx2] = pos0 + 1;
                idx2 += 1;
            }
        }
        out.push(Merger { map, sizes: (l1, l2) });
        // Next l1-subset of {1..total} in lexicographic order.
        if l1 == 0 {
            break;
        }
        let mut i = l1;
        while i > 0 && first_positions[i - 1] == total - (l1 - i) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        first_positions[i - 1] += 1;
        for j in i..l1 {
            first_positions[j] = first_positions[j - 1] + 1;
        }
    }
    out
}

/// The braided Stallings plumbing of two band words along a merger: letter
/// `t` of `B1` lands at output position `f(t)`, letter `t` of `B2` shifted
/// by `n1 - 1` lands at position `f(l1 + t)`.
pub fn plumb_words(b1: &BklWord, b2: &BklWord, merger: &Merger) -> Result<BklWord, PlumbError> {
    let (l1, l2) = merger.sizes();
    if b1.len() != l1 || b2.len() != l2 {
        return Err(PlumbError::SizeMismatch { l1, l2, b1: b1.len(), b2: b2.len() });
    }
    let (n1, n2) = (b1.strands(), b2.strands());
    if n1 < 2 || n2 < 2 {
        return Err(PlumbError::TooFewStrands(n1, n2));
    }
    let n_out = n1 + n2 - 1;
    let shifted = bkl_shift(b2, n1 - 1, n_out)?;
    let mut letters = vec![None; l1 + l2];
    for (t, letter) in b1.letters().iter().enumerate() {
        letters[merger.apply(t + 1) - 1] = Some(*letter);
    }
    for (t, letter) in shifted.letters().iter().enumerate() {
        letters[merger.apply(l1 + t + 1) - 1] = Some(*letter);
    }
    let letters = letters.into_iter().map(|l| l.expect("merger is a bijection")).collect();
    Ok(BklWord::new(letters, n_out)?)
}

/// Connected-sum word: the plumbing along the identity merger, so the output
/// is `B1` followed by the shifted `B2`.
pub fn connected_sum_word(b1: &BklWord, b2: &BklWord) -> Result<BklWord, PlumbError> {
    plumb_words(b1, b2, &Merger::identity(b1.len(), b2.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{BandLetter, Sign};

    fn bkl(letters: &[(usize, usize)], strands: usize) -> BklWord {
        let letters = letters.iter().map(|&(i, j)| BandLetter::new(i, j, Sign::Positive)).collect();
        BklWord::new(letters, strands).unwrap()
    }

    fn four_band_a() -> BklWord {
        bkl(&[(1, 3), (1, 2), (1, 3), (1, 2)], 3)
    }

    fn four_band_b() -> BklWord {
        bkl(&[(1, 3), (2, 3), (1, 3), (2, 3)], 3)
    }

    #[test]
    fn merger_validation() {
        assert!(validate_merger(&[1, 2, 3], 2, 1).unwrap().is_empty());
        assert!(validate_merger(&[2, 1], 1, 1).unwrap().is_empty());
        let violations = validate_merger(&[2, 1, 3], 2, 1).unwrap();
        assert_eq!(violations, vec![MergerViolation::FirstBlockNotIncreasing { at: 2 }]);
        assert!(matches!(
            validate_merger(&[1, 2], 2, 1),
            Err(PlumbError::LengthMismatch { expected: 3, found: 2 })
        ));
        assert!(!validate_merger(&[1, 1, 3], 2, 1).unwrap().is_empty());
    }

    #[test]
    fn enumerate_counts_are_binomial() {
        fn binomial(n: usize, k: usize) -> usize {
            let mut acc = 1usize;
            for i in 0..k {
                acc = acc * (n - i) / (i + 1);
            }
            acc
        }
        for l1 in 0..=5 {
            for l2 in 0..=5 {
                let all = enumerate_mergers(l1, l2);
                assert_eq!(all.len(), binomial(l1 + l2, l1), "sizes ({l1},{l2})");
                for m in &all {
                    assert!(validate_merger(m.map(), l1, l2).unwrap().is_empty());
                }
                let mut maps: Vec<Vec<usize>> = all.iter().map(|m| m.map().to_vec()).collect();
                let mut sorted = maps.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), maps.len(), "no duplicates");
                maps.dedup();
                assert_eq!(maps, sorted, "lexicographic order");
            }
        }
        assert_eq!(enumerate_mergers(1, 1).len(), 2);
        assert_eq!(enumerate_mergers(2, 2).len(), 6);
        assert_eq!(enumerate_mergers(0, 3).len(), 1);
        assert_eq!(enumerate_mergers(0, 3)[0], Merger::identity(0, 3));
    }

    #[test]
    fn plumbing_reproduces_interleaved_word() {
        let f = Merger::new(vec![1, 3, 6, 7, 2, 4, 5, 8], 4, 4).unwrap();
        let got = plumb_words(&four_band_a(), &four_band_b(), &f).unwrap();
        let want = bkl(&[(1, 3), (3, 5), (1, 2), (4, 5), (3, 5), (1, 3), (1, 2), (4, 5)], 5);
        assert_eq!(got, want);
    }

    #[test]
    fn plumbing_with_identity_merger_concatenates() {
        let got = plumb_words(&four_band_a(), &four_band_b(), &Merger::identity(4, 4)).unwrap();
        let want = bkl(&[(1, 3), (1, 2), (1, 3), (1, 2), (3, 5), (4, 5), (3, 5), (4, 5)], 5);
        assert_eq!(got, want);
        assert_eq!(connected_sum_word(&four_band_a(), &four_band_b()).unwrap(), want);
    }

    #[test]
    fn two_hopf_bands() {
        let hopf = bkl(&[(1, 2)], 2);
        let got = connected_sum_word(&hopf, &hopf).unwrap();
        assert_eq!(got, bkl(&[(1, 2), (2, 3)], 3));
    }

    #[test]
    fn empty_second_word_keeps_first_block() {
        let b2 = BklWord::empty(2).unwrap();
        let got = connected_sum_word(&four_band_a(), &b2).unwrap();
        assert_eq!(got.strands(), 4);
        assert_eq!(got.letters(), four_band_a().letters());
    }

    #[test]
    fn plumbing_preserves_letter_multiset_and_block_order() {
        let b1 = bkl(&[(1, 2), (1, 3)], 3);
        let b2 = bkl(&[(2, 3), (1, 3), (1, 2)], 3);
        let shifted = bkl_shift(&b2, 2, 5).unwrap();
        for m in enumerate_mergers(2, 3) {
            let out = plumb_words(&b1, &b2, &m).unwrap();
            assert_eq!(out.len(), 5);
            // Block order is preserved.
            let firsts: Vec<_> = (1..=2).map(|t| m.apply(t)).collect();
            let seconds: Vec<_> = (3..=5).map(|t| m.apply(t)).collect();
            for (idx, &pos) in firsts.iter().enumerate() {
                assert_eq!(out.letters()[pos - 1], b1.letters()[idx]);
            }
            for (idx, &pos) in seconds.iter().enumerate() {
                assert_eq!(out.letters()[pos - 1], shifted.letters()[idx]);
            }
        }
    }

    #[test]
    fn size_and_strand_errors() {
        let hopf = bkl(&[(1, 2)], 2);
        assert!(matches!(
            plumb_words(&four_band_a(), &hopf, &Merger::identity(4, 4)),
            Err(PlumbError::SizeMismatch { .. })
        ));
        let one_strand = BklWord::empty(1).unwrap();
        assert!(matches!(
            plumb_words(&one_strand, &hopf, &Merger::identity(0, 1)),
            Err(PlumbError::TooFewStrands(1, 2))
        ));
    }

    #[test]
    fn commuting_adjacent_swaps_leave_closure_polynomial_unchanged() {
        use crate::braid::bkl_to_artin;
        use crate::homfly::homfly_vz;
        // Swapping two adjacent output letters that come from different
        // blocks yields another merger; when the bands commute the closures
        // have the same HOMFLY-PT polynomial.
        let b1 = bkl(&[(1, 2), (1, 3)], 3);
        let b2 = bkl(&[(1, 2), (2, 3)], 3);
        let commute = |x: &BandLetter, y: &BandLetter| x.j < y.i || y.j < x.i;
        let mut checked = 0;
        for merger in enumerate_mergers(b1.len(), b2.len()) {
            let word = plumb_words(&b1, &b2, &merger).unwrap();
            for k in 1..word.len() {
                let (x, y) = (word.letters()[k - 1], word.letters()[k]);
                let u1 = merger.map().iter().position(|&p| p == k).unwrap();
                let u2 = merger.map().iter().position(|&p| p == k + 1).unwrap();
                let cross_block = (u1 < b1.len()) != (u2 < b1.len());
                if !cross_block || !commute(&x, &y) {
                    continue;
                }
                let mut swapped = merger.map().to_vec();
                swapped[u1] = k + 1;
                swapped[u2] = k;
                let swapped = Merger::new(swapped, b1.len(), b2.len()).unwrap();
                let other = plumb_words(&b1, &b2, &swapped).unwrap();
                assert_eq!(
                    homfly_vz(&bkl_to_artin(&word)),
                    homfly_vz(&bkl_to_artin(&other)),
                    "merger {merger} vs {swapped}"
                );
                checked += 1;
            }
        }
        assert!(checked >= 3, "the suite must exercise real swaps, got {checked}");
    }

    #[test]
    fn merger_text_round_trip() {
        for text in ["f=1,3,6,7,2,4,5,8 sizes=(4,4)", "f=2,1 sizes=(1,1)", "f= sizes=(0,0)"] {
            let m = Merger::parse(text).unwrap();
            assert_eq!(m.to_text(), text);
        }
        assert!(Merger::parse("f=1,2").is_err());
        assert!(Merger::parse("sizes=(1,1)").is_err());
        assert!(Merger::parse("f=2,1,3 sizes=(2,1)").is_err()); // not increasing
    }
}
