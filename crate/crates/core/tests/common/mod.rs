//! Shared helpers for the integration suites: a deterministic RNG, random
//! word generators, and a PD-code builder for braid closures.
#![allow(dead_code)] // each integration target uses a different subset

use braidbook::braid::{ArtinWord, BandLetter, BklWord, Sign};
use braidbook::seifert::PlanarDiagram;
use std::collections::HashMap;

/// xorshift64* with fixed seeds, so every suite is reproducible.
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545f4914f6cdd1d)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }

    pub fn flip(&mut self) -> bool {
        self.next_u64() & 1 == 0
    }
}

pub fn random_artin_word(rng: &mut XorShift, max_strands: u64, max_len: u64) -> ArtinWord {
    let strands = rng.range(2, max_strands) as usize;
    let len = rng.below(max_len + 1) as usize;
    let letters: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.range(1, strands as u64 - 1) as i32;
            if rng.flip() {
                g
            } else {
                -g
            }
        })
        .collect();
    ArtinWord::new(letters, strands).expect("generated letters are in range")
}

pub fn random_bkl_word(rng: &mut XorShift, strands: usize, max_len: u64) -> BklWord {
    let len = rng.below(max_len + 1) as usize;
    let letters: Vec<BandLetter> = (0..len)
        .map(|_| {
            let i = rng.range(1, strands as u64 - 1) as usize;
            let j = rng.range(i as u64 + 1, strands as u64) as usize;
            let sign = if rng.flip() { Sign::Positive } else { Sign::Negative };
            BandLetter::new(i, j, sign)
        })
        .collect();
    BklWord::new(letters, strands).expect("generated letters are in range")
}

/// A random word that uses every generator at least once, so its closure
/// diagram is connected.
pub fn random_connected_word(rng: &mut XorShift, max_strands: u64, max_len: u64) -> ArtinWord {
    loop {
        let w = random_artin_word(rng, max_strands, max_len);
        let used: std::collections::HashSet<i32> =
            w.letters().iter().map(|l| l.abs()).collect();
        if !w.is_empty() && (1..w.strands() as i32).all(|g| used.contains(&g)) {
            return w;
        }
    }
}

struct ArcUf(Vec<usize>);

impl ArcUf {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.0[ry] = rx;
        }
    }
}

/// PD code of the closure of a braid word. Every strand position must be
/// crossed at least once (use [`random_connected_word`]).
pub fn pd_from_braid(word: &ArtinWord) -> PlanarDiagram {
    let n = word.strands();
    let c = word.len();
    assert!(c >= 1, "closure diagram needs at least one crossing");
    let mut uf = ArcUf((0..n + 2 * c).collect());
    let mut cur: Vec<usize> = (0..n).collect();
    let mut provisional: Vec<[usize; 4]> = Vec::with_capacity(c);
    // succ pairs along the orientation: the strand entering position i exits
    // at position i+1 and vice versa, independent of the crossing sign.
    let mut succ_pairs: Vec<(usize, usize)> = Vec::new();
    let mut next_id = n;
    for &l in word.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (e_lo, e_hi) = (cur[i], cur[i + 1]);
        let (f_lo, f_hi) = (next_id, next_id + 1);
        next_id += 2;
        if l > 0 {
            // The strand entering at the lower position goes over.
            provisional.push([e_hi, e_lo, f_lo, f_hi]);
        } else {
            provisional.push([e_lo, f_lo, f_hi, e_hi]);
        }
        succ_pairs.push((e_lo, f_hi));
        succ_pairs.push((e_hi, f_lo));
        cur[i] = f_lo;
        cur[i + 1] = f_hi;
    }
    for p in 0..n {
        uf.union(p, cur[p]);
    }
    let mut succ: HashMap<usize, usize> = HashMap::new();
    for (from, to) in succ_pairs {
        let (from, to) = (uf.find(from), uf.find(to));
        succ.insert(from, to);
    }
    // Number arcs 1..=2c along each component.
    let mut number: HashMap<usize, usize> = HashMap::new();
    let mut counter = 1usize;
    let classes: Vec<usize> = (0..n + 2 * c).map(|x| uf.find(x)).collect();
    for &start in &classes {
        if number.contains_key(&start) {
            continue;
        }
        let mut e = start;
        while !number.contains_key(&e) {
            number.insert(e, counter);
            counter += 1;
            e = succ[&e];
        }
    }
    assert_eq!(counter - 1, 2 * c, "arc count must be 2c");
    let crossings: Vec<[usize; 4]> = provisional
        .iter()
        .map(|t| {
            let mut out = [0usize; 4];
            for (slot, &id) in t.iter().enumerate() {
                out[slot] = number[&uf.find(id)];
            }
            out
        })
        .collect();
    PlanarDiagram::from_crossings(crossings).expect("generated PD is well-formed")
}
