//! Binary linear block codes of length at most 64.
//!
//! Words are packed into a `u64`: bit `i` is coordinate `i`, which is also
//! the coefficient of `x^i` for cyclic codes and the `i`-th character
//! (counting from the left) of the textual 0/1 form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2m::BinaryPolynomial;

/// Longest supported code.
pub const MAX_LENGTH: usize = 64;

/// Enumeration budget used by [`LinearCode::min_distance_default`].
pub const DEFAULT_CODEWORD_BUDGET: u64 = 1 << 26;

#[inline]
pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// A vector of the ambient space F_2^n.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    bits: u64,
    len: usize,
}

impl Word {
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len > MAX_LENGTH {
            return Err(Error::LengthUnsupported(len));
        }
        if bits & !low_mask(len) != 0 {
            return Err(Error::Parse(format!(
                "bits set beyond coordinate {}",
                len.saturating_sub(1)
            )));
        }
        Ok(Self { bits, len })
    }

    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!(bits & !low_mask(len) == 0);
        Self { bits, len }
    }

    pub fn zero(len: usize) -> Self {
        Self { bits: 0, len }
    }

    /// The word with a single 1 at coordinate `i`.
    pub fn unit(i: usize, len: usize) -> Self {
        assert!(i < len);
        Self { bits: 1 << i, len }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn distance(&self, other: &Word) -> usize {
        (self.bits ^ other.bits).count_ones() as usize
    }

    pub fn xor(&self, other: &Word) -> Word {
        debug_assert_eq!(self.len, other.len);
        Word {
            bits: self.bits ^ other.bits,
            len: self.len,
        }
    }

    /// Cyclic shift by one position: coordinate `i` moves to `i + 1 mod n`.
    pub fn cyclic_shift(&self) -> Word {
        if self.len == 0 {
            return *self;
        }
        let top = self.bits >> (self.len - 1) & 1;
        Word {
            bits: (self.bits << 1 | top) & low_mask(self.len),
            len: self.len,
        }
    }

    /// Key whose integer order is the lexicographic order of the 0/1 text.
    pub fn lex_key(&self) -> u64 {
        self.bits.reverse_bits()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > MAX_LENGTH {
            return Err(Error::LengthUnsupported(s.len()));
        }
        let mut bits = 0u64;
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => bits |= 1 << i,
                other => return Err(Error::Parse(format!("unexpected character {other:?} in word"))),
            }
        }
        Ok(Word { bits, len: s.len() })
    }
}

/// `H·vᵀ`, an element of F_2^(n-k). Bit `r` is the product with row `r` of H.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syndrome {
    bits: u64,
    len: usize,
}

impl Syndrome {
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len > 64 || bits & !low_mask(len) != 0 {
            return Err(Error::Parse(format!("syndrome does not fit in {len} bits")));
        }
        Ok(Self { bits, len })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.bits >> i & 1 == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({self})")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Exactness {
    Exact,
    LowerBound,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MinDistance {
    pub value: usize,
    pub exactness: Exactness,
}

impl MinDistance {
    pub fn exact(value: usize) -> Self {
        Self {
            value,
            exactness: Exactness::Exact,
        }
    }

    pub fn lower_bound(value: usize) -> Self {
        Self {
            value,
            exactness: Exactness::LowerBound,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.exactness == Exactness::Exact
    }
}

/// A binary `[n, k]` linear code with generator and parity-check matrices.
///
/// The parity-check matrix is derived from the reduced row echelon form of
/// the generator matrix and is expressed in the original coordinate order;
/// the pivot columns of that form (an information set) are kept alongside.
#[derive(Clone, Debug)]
pub struct LinearCode {
    n: usize,
    k: usize,
    generator: Vec<u64>,
    parity_check: Vec<u64>,
    h_columns: Vec<u64>,
    information_set: Vec<usize>,
    min_distance: Option<MinDistance>,
    covering_radius: Option<usize>,
    label: String,
}

impl LinearCode {
    /// Builds a code from the rows of a generator matrix, which must be
    /// linearly independent.
    pub fn from_generator_rows(n: usize, rows: Vec<u64>, label: impl Into<String>) -> Result<Self> {
        if n > MAX_LENGTH {
            return Err(Error::LengthUnsupported(n));
        }
        let k = rows.len();
        if let Some(bad) = rows.iter().find(|&&r| r & !low_mask(n) != 0) {
            return Err(Error::Parse(format!("generator row {bad:#x} longer than n = {n}")));
        }
        let (rref, pivots) = row_reduce(&rows, n);
        if pivots.len() != k {
            return Err(Error::RankDeficient { rank: pivots.len(), k });
        }
        let mut parity_check = Vec::with_capacity(n - k);
        for q in (0..n).filter(|q| !pivots.contains(q)) {
            let mut row = 1u64 << q;
            for (r, &p) in rref.iter().zip(&pivots) {
                if r >> q & 1 == 1 {
                    row |= 1 << p;
                }
            }
            parity_check.push(row);
        }
        let h_columns = (0..n)
            .map(|j| {
                parity_check
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (r, &h)| acc | (h >> j & 1) << r)
            })
            .collect();
        Ok(Self {
            n,
            k,
            generator: rows,
            parity_check,
            h_columns,
            information_set: pivots,
            min_distance: None,
            covering_radius: None,
            label: label.into(),
        })
    }

    /// The cyclic code of length `n` generated by `g(x)`; the rows of the
    /// generator matrix are the shifts `x^i g(x)`, `0 <= i < n - deg g`.
    pub fn from_generator_poly(g: &BinaryPolynomial, n: usize) -> Result<Self> {
        if n > MAX_LENGTH {
            return Err(Error::LengthUnsupported(n));
        }
        let deg = g.degree().ok_or(Error::NotCyclic { n })?;
        let xn1 = BinaryPolynomial::from_exponents(&[n, 0]);
        if deg > n || !g.divides(&xn1)? {
            return Err(Error::NotCyclic { n });
        }
        let k = n - deg;
        let gbits = g.low_bits();
        let rows = (0..k).map(|i| gbits << i).collect();
        Self::from_generator_rows(n, rows, format!("cyclic [{n},{k}]"))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_min_distance(mut self, d: MinDistance) -> Self {
        self.min_distance = Some(d);
        self
    }

    pub fn with_covering_radius(mut self, r: usize) -> Self {
        self.covering_radius = Some(r);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `n - k`.
    pub fn redundancy(&self) -> usize {
        self.n - self.k
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generator_rows(&self) -> &[u64] {
        &self.generator
    }

    pub fn parity_check_rows(&self) -> &[u64] {
        &self.parity_check
    }

    /// Column `j` of H packed as an `(n-k)`-bit integer.
    pub fn parity_check_columns(&self) -> &[u64] {
        &self.h_columns
    }

    pub fn information_set(&self) -> &[usize] {
        &self.information_set
    }

    /// The stored distance, if any.
    pub fn known_min_distance(&self) -> Option<MinDistance> {
        self.min_distance
    }

    pub fn covering_radius(&self) -> Option<usize> {
        self.covering_radius
    }

    pub fn word(&self, bits: u64) -> Result<Word> {
        let w = Word::new(bits, self.n)?;
        Ok(w)
    }

    fn check_len(&self, v: &Word) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn syndrome_bits(&self, v: u64) -> u64 {
        self.parity_check
            .iter()
            .enumerate()
            .fold(0u64, |acc, (r, &h)| acc | (((h & v).count_ones() & 1) as u64) << r)
    }

    pub fn syndrome(&self, v: &Word) -> Result<Syndrome> {
        self.check_len(v)?;
        Ok(Syndrome {
            bits: self.syndrome_bits(v.bits()),
            len: self.redundancy(),
        })
    }

    pub fn contains(&self, v: &Word) -> Result<bool> {
        Ok(self.syndrome(v)?.is_zero())
    }

    /// Message bit `i` selects generator row `i`.
    pub fn encode(&self, message: u64) -> Word {
        let bits = self
            .generator
            .iter()
            .enumerate()
            .filter(|(i, _)| message >> i & 1 == 1)
            .fold(0u64, |acc, (_, &r)| acc ^ r);
        Word::from_raw(bits, self.n)
    }

    /// A word of weight `w(e)` whose syndrome is `s`: the coset representative
    /// supported on the non-pivot columns.
    pub fn coset_representative(&self, s: &Syndrome) -> Word {
        let non_pivots = (0..self.n).filter(|q| !self.information_set.contains(q));
        let bits = non_pivots
            .enumerate()
            .filter(|(r, _)| s.bits >> r & 1 == 1)
            .fold(0u64, |acc, (_, q)| acc | 1 << q);
        Word::from_raw(bits, self.n)
    }

    /// All `2^k` codewords in Gray-code order of the message index.
    pub fn codewords(&self) -> GrayCodewords<'_> {
        self.codewords_range(0, self.message_count())
    }

    /// Codewords for message indices `start..end` of the Gray sequence.
    /// Disjoint ranges partition the code for parallel consumers.
    pub fn codewords_range(&self, start: u64, end: u64) -> GrayCodewords<'_> {
        let end = end.min(self.message_count());
        let gray = start ^ (start >> 1);
        GrayCodewords {
            rows: &self.generator,
            index: start,
            end,
            current: self.encode(gray).bits(),
            n: self.n,
        }
    }

    fn message_count(&self) -> u64 {
        assert!(self.k < 64, "2^k does not fit the enumeration counter");
        1u64 << self.k
    }

    /// Exact minimum distance by enumeration when `2^k <= budget`, otherwise
    /// the stored lower bound (1 if none is stored).
    ///
    /// A code of dimension 0 has no nonzero codeword; it is reported with
    /// the conventional exact distance `n + 1`.
    pub fn min_distance(&self, codeword_budget: u64) -> MinDistance {
        if let Some(d) = self.min_distance.filter(MinDistance::is_exact) {
            return d;
        }
        if self.k == 0 {
            return MinDistance::exact(self.n + 1);
        }
        if self.k < 64 && (1u64 << self.k) <= codeword_budget {
            let d = self.codewords().skip(1).map(|c| c.weight()).min().expect("k > 0");
            return MinDistance::exact(d);
        }
        self.min_distance.unwrap_or_else(|| MinDistance::lower_bound(1))
    }

    pub fn min_distance_default(&self) -> MinDistance {
        self.min_distance(DEFAULT_CODEWORD_BUDGET)
    }

    /// Stores the result of [`min_distance`](Self::min_distance).
    pub fn with_computed_min_distance(self, codeword_budget: u64) -> Self {
        let d = self.min_distance(codeword_budget);
        self.with_min_distance(d)
    }

    /// `⌊(d-1)/2⌋` when the distance is known exactly.
    pub fn error_capacity(&self) -> Option<usize> {
        self.min_distance
            .filter(MinDistance::is_exact)
            .map(|d| d.value.saturating_sub(1) / 2)
    }

    /// Plain-text form: a header line `n k label` followed by the `k` rows of
    /// G as 0/1 strings.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.n, self.k, self.label);
        for &row in &self.generator {
            out.push_str(&Word::from_raw(row, self.n).to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing header line".into()))?;
        let mut parts = header.trim().splitn(3, char::is_whitespace);
        let mut field = |name: &str| -> Result<usize> {
            parts
                .next()
                .ok_or_else(|| Error::Parse(format!("header is missing {name}")))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad {name} in header: {e}")))
        };
        let n = field("n")?;
        let k = field("k")?;
        let label = parts.next().unwrap_or("").trim().to_string();
        let rows = lines
            .map(|l| {
                let w: Word = l.parse()?;
                if w.len() != n {
                    return Err(Error::LengthMismatch {
                        expected: n,
                        got: w.len(),
                    });
                }
                Ok(w.bits())
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != k {
            return Err(Error::Parse(format!(
                "expected {k} generator rows, found {}",
                rows.len()
            )));
        }
        Self::from_generator_rows(n, rows, label)
    }
}

/// Codewords in Gray-code order: consecutive items differ by one row of G.
#[derive(Clone, Debug)]
pub struct GrayCodewords<'a> {
    rows: &'a [u64],
    index: u64,
    end: u64,
    current: u64,
    n: usize,
}

impl Iterator for GrayCodewords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.index >= self.end {
            return None;
        }
        let out = Word::from_raw(self.current, self.n);
        self.index += 1;
        if self.index < self.end {
            self.current ^= self.rows[self.index.trailing_zeros() as usize];
        }
        Some(out)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.index) as usize;
        (left, Some(left))
    }
}

/// Reduced row echelon form over GF(2) and the pivot column of each row.
pub(crate) fn row_reduce(rows: &[u64], n: usize) -> (Vec<u64>, Vec<usize>) {
    let mut m = rows.to_vec();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m.len()).find(|&r| m[r] >> col & 1 == 1) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank];
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && *row >> col & 1 == 1 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

pub fn rank(rows: &[u64], n: usize) -> usize {
    row_reduce(rows, n).1.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming7() -> LinearCode {
        let g = BinaryPolynomial::from_exponents(&[3, 1, 0]);
        LinearCode::from_generator_poly(&g, 7).unwrap()
    }

    #[test]
    fn hamming_from_polynomial() {
        let c = hamming7();
        assert_eq!((c.n(), c.k()), (7, 4));
        assert_eq!(c.min_distance_default(), MinDistance::exact(3));
        for &row in c.generator_rows() {
            assert!(c.contains(&Word::new(row, 7).unwrap()).unwrap());
        }
        assert_eq!(rank(c.parity_check_rows(), 7), 3);
    }

    #[test]
    fn whole_space() {
        let c = LinearCode::from_generator_poly(&BinaryPolynomial::one(), 5).unwrap();
        assert_eq!(c.k(), 5);
        assert_eq!(c.redundancy(), 0);
        assert_eq!(c.min_distance_default(), MinDistance::exact(1));
        assert!(c.contains(&"10110".parse().unwrap()).unwrap());
    }

    #[test]
    fn non_divisor_rejected() {
        let g = BinaryPolynomial::from_exponents(&[2, 0]); // (x+1)^2 does not divide x^7 - 1
        assert!(matches!(
            LinearCode::from_generator_poly(&g, 7),
            Err(Error::NotCyclic { n: 7 })
        ));
    }

    #[test]
    fn syndromes() {
        let c = hamming7();
        assert!(c.syndrome(&Word::zero(7)).unwrap().is_zero());
        for i in 0..7 {
            let s = c.syndrome(&Word::unit(i, 7)).unwrap();
            assert_eq!(s.bits(), c.parity_check_columns()[i]);
        }
        let mut cols = c.parity_check_columns().to_vec();
        cols.sort_unstable();
        assert_eq!(cols, (1..8).collect::<Vec<u64>>());
        assert!(matches!(
            c.syndrome(&Word::zero(6)),
            Err(Error::LengthMismatch { expected: 7, got: 6 })
        ));
    }

    #[test]
    fn gray_enumeration() {
        let c = hamming7();
        let words: Vec<Word> = c.codewords().collect();
        assert_eq!(words.len(), 16);
        let mut dist = [0usize; 8];
        for w in &words {
            dist[w.weight()] += 1;
        }
        assert_eq!(dist, [1, 0, 0, 7, 7, 0, 0, 1]);
        for pair in words.windows(2) {
            let diff = pair[0].xor(&pair[1]).bits();
            assert!(c.generator_rows().contains(&diff));
        }
        let mut sorted: Vec<u64> = words.iter().map(Word::bits).collect();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), 16);

        let split: Vec<Word> = c.codewords_range(0, 5).chain(c.codewords_range(5, 16)).collect();
        assert_eq!(split, words);
    }

    #[test]
    fn dimension_zero() {
        let xn1 = BinaryPolynomial::from_exponents(&[5, 0]);
        let c = LinearCode::from_generator_poly(&xn1, 5).unwrap();
        assert_eq!(c.k(), 0);
        assert_eq!(c.codewords().collect::<Vec<_>>(), vec![Word::zero(5)]);
    }

    #[test]
    fn text_round_trip() {
        let c = hamming7().with_label("BCH [7,4,3]");
        let text = c.to_text();
        assert!(text.starts_with("7 4 BCH [7,4,3]\n"));
        let back = LinearCode::from_text(&text).unwrap();
        assert_eq!(back.generator_rows(), c.generator_rows());
        assert_eq!(back.label(), "BCH [7,4,3]");
        assert!(LinearCode::from_text("7 2 x\n1100000\n1100000\n").is_err());
        assert!(LinearCode::from_text("7 1 x\n110000\n").is_err());
    }

    #[test]
    fn word_text_order() {
        let w: Word = "1101000".parse().unwrap();
        assert_eq!(w.bits(), 0b1011);
        assert_eq!(w.to_string(), "1101000");
        let a: Word = "0111".parse().unwrap();
        let b: Word = "1000".parse().unwrap();
        assert!(a < b);
        assert!("10a".parse::<Word>().is_err());
        assert_eq!("1000001".parse::<Word>().unwrap().cyclic_shift().to_string(), "1100000");
    }

    #[test]
    fn parity_check_in_original_coordinates() {
        // generator rows whose echelon form needs a column skip
        let rows = vec![0b0110, 0b1100];
        let c = LinearCode::from_generator_rows(4, rows.clone(), "t").unwrap();
        for &g in &rows {
            for &h in c.parity_check_rows() {
                assert_eq!((g & h).count_ones() % 2, 0);
            }
        }
        assert_eq!(c.information_set(), &[1, 2]);
        for s in 0..4 {
            let syn = Syndrome::new(s, 2).unwrap();
            let rep = c.coset_representative(&syn);
            assert_eq!(c.syndrome(&rep).unwrap(), syn);
        }
    }
}
