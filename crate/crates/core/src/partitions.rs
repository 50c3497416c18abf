//! Partitions in a box and their bit-string encoding.
//!
//! A partition inside an `a x b` box (a rows, b columns) corresponds to a word
//! with `b` zeros and `a` ones: walk from the north-east corner of the box to the
//! south-west corner along the partition's boundary, writing `0` for each
//! horizontal step and `1` for each vertical step.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// A word over `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn ones(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// Number of pairs `i < j` with a `1` at `i` and a `0` at `j`.
    pub fn inversions(&self) -> usize {
        let mut ones_seen = 0;
        let mut inv = 0;
        for &b in &self.0 {
            if b {
                ones_seen += 1;
            } else {
                inv += ones_seen;
            }
        }
        inv
    }

    /// All words with the given numbers of zeros and ones, in lexicographic order.
    pub fn all_with_content(zeros: usize, ones: usize) -> Vec<BitString> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(zeros + ones);
        fn rec(z: usize, o: usize, cur: &mut Vec<bool>, out: &mut Vec<BitString>) {
            if z == 0 && o == 0 {
                out.push(BitString(cur.clone()));
                return;
            }
            if z > 0 {
                cur.push(false);
                rec(z - 1, o, cur, out);
                cur.pop();
            }
            if o > 0 {
                cur.push(true);
                rec(z, o - 1, cur, out);
                cur.pop();
            }
        }
        rec(zeros, ones, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse(format!(
                    "bit strings use only 0 and 1, found {c:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitString)
    }
}

/// A partition together with the `rows x cols` box it lives in.
///
/// `parts` always has exactly `rows` entries (trailing zeros included).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoxedPartition {
    parts: Vec<usize>,
    rows: usize,
    cols: usize,
}

impl BoxedPartition {
    /// Validates and pads `parts` with zeros up to `rows` entries.
    pub fn new(parts: Vec<usize>, rows: usize, cols: usize) -> Result<Self> {
        let mut parts = parts;
        while parts.len() > rows && parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.len() > rows {
            return Err(Error::InvalidPartition(format!(
                "{} nonzero parts do not fit in {rows} rows",
                parts.len()
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if let Some(&first) = parts.first() {
            if first > cols {
                return Err(Error::InvalidPartition(format!(
                    "part {first} exceeds the box width {cols}"
                )));
            }
        }
        parts.resize(rows, 0);
        Ok(BoxedPartition { parts, rows, cols })
    }

    pub fn empty(rows: usize, cols: usize) -> Self {
        BoxedPartition {
            parts: vec![0; rows],
            rows,
            cols,
        }
    }

    /// The full `rows x cols` rectangle.
    pub fn full(rows: usize, cols: usize) -> Self {
        BoxedPartition {
            parts: vec![cols; rows],
            rows,
            cols,
        }
    }

    /// Parses the textual form used on the command line: comma-separated parts
    /// (the empty string is the empty partition).
    pub fn parse(parts: &str, rows: usize, cols: usize) -> Result<Self> {
        Self::new(parse_parts(parts)?, rows, cols)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Parts with trailing zeros dropped.
    pub fn nonzero_parts(&self) -> &[usize] {
        let len = self.parts.iter().take_while(|p| **p > 0).count();
        &self.parts[..len]
    }

    /// The bit string: the `i`-th one (1-indexed) sits at position `cols + i - parts[i]`.
    pub fn bits(&self) -> BitString {
        let n = self.rows + self.cols;
        let mut bits = vec![false; n];
        for (i, &p) in self.parts.iter().enumerate() {
            bits[self.cols + i - p] = true;
        }
        BitString(bits)
    }

    /// The bit string obtained by actually walking the boundary from the
    /// north-east corner of the box to the south-west corner.
    pub fn bits_by_walk(&self) -> BitString {
        let mut out = Vec::with_capacity(self.rows + self.cols);
        // x is the current column boundary, row the number of rows already passed.
        let mut x = self.cols;
        let mut row = 0;
        while row < self.rows || x > 0 {
            let target = if row < self.rows { self.parts[row] } else { 0 };
            if x > target {
                out.push(false);
                x -= 1;
            } else {
                out.push(true);
                row += 1;
            }
        }
        BitString(out)
    }

    /// Inverse of [`BoxedPartition::bits`]; every 0/1 word is valid.
    pub fn from_bits(bits: &BitString) -> Self {
        let cols = bits.zeros();
        let rows = bits.ones();
        let mut parts = Vec::with_capacity(rows);
        let mut zeros_seen = 0;
        for &b in bits.bits() {
            if b {
                parts.push(cols - zeros_seen);
            } else {
                zeros_seen += 1;
            }
        }
        BoxedPartition { parts, rows, cols }
    }

    /// Every partition in the box, ordered by bit string.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<BoxedPartition> {
        BitString::all_with_content(cols, rows)
            .iter()
            .map(BoxedPartition::from_bits)
            .collect()
    }

    pub fn contains(&self, other: &BoxedPartition) -> bool {
        let get = |p: &BoxedPartition, i: usize| p.parts.get(i).copied().unwrap_or(0);
        (0..self.rows.max(other.rows)).all(|i| get(other, i) <= get(self, i))
    }

    /// `"1,1"`; the empty partition is the empty string.
    pub fn parts_text(&self) -> String {
        self.nonzero_parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn to_json(&self) -> Value {
        json!({ "parts": self.parts, "box": [self.rows, self.cols] })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let parts = v
            .get("parts")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("partition needs a \"parts\" array".into()))?
            .iter()
            .map(|p| {
                p.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse(format!("bad part {p}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let dims = v
            .get("box")
            .and_then(Value::as_array)
            .filter(|b| b.len() == 2)
            .ok_or_else(|| Error::Parse("partition needs a \"box\": [rows, cols]".into()))?;
        let dim = |i: usize| {
            dims[i]
                .as_u64()
                .map(|x| x as usize)
                .ok_or_else(|| Error::Parse(format!("bad box dimension {}", dims[i])))
        };
        Self::new(parts, dim(0)?, dim(1)?)
    }
}

impl Ord for BoxedPartition {
    /// Boxes first, then bit strings.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.rows, self.cols)
            .cmp(&(other.rows, other.cols))
            .then_with(|| self.bits().cmp(&other.bits()))
    }
}

impl PartialOrd for BoxedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoxedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({}) in {}x{}", parts.join(","), self.rows, self.cols)
    }
}

impl fmt::Debug for BoxedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn inversions(bits: &BitString) -> usize {
    bits.inversions()
}

/// Parses `"2,1,0"`; blank input is the empty list.
pub fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidPartition(format!("bad part {p:?} in {s:?}")))
        })
        .collect()
}

/// Parses a box written `"AxB"` (rows x cols).
pub fn parse_box(s: &str) -> Result<(usize, usize)> {
    let (a, b) = s
        .trim()
        .split_once(['x', 'X'])
        .ok_or_else(|| Error::Parse(format!("box must look like AxB, found {s:?}")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad box dimension {t:?}")))
    };
    Ok((parse(a)?, parse(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(parts: &[usize], rows: usize, cols: usize) -> BoxedPartition {
        BoxedPartition::new(parts.to_vec(), rows, cols).unwrap()
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn bits_examples() {
        assert_eq!(BoxedPartition::empty(2, 2).bits(), bs("0011"));
        assert_eq!(bp(&[1, 1], 2, 2).bits(), bs("0110"));
        assert_eq!(bp(&[1, 0], 2, 1).bits(), bs("101"));
        assert_eq!(BoxedPartition::full(2, 2).bits(), bs("1100"));
    }

    #[test]
    fn partition_of_examples() {
        assert_eq!(
            BoxedPartition::from_bits(&bs("0101011")),
            bp(&[2, 1, 0, 0], 4, 3)
        );
        assert_eq!(
            BoxedPartition::from_bits(&bs("0011101")),
            bp(&[1, 1, 1, 0], 4, 3)
        );
        assert_eq!(
            BoxedPartition::from_bits(&bs("0011")),
            BoxedPartition::empty(2, 2)
        );
        assert_eq!(
            BoxedPartition::from_bits(&bs("")),
            BoxedPartition::empty(0, 0)
        );
    }

    #[test]
    fn inversion_examples() {
        assert_eq!(inversions(&bs("0011")), 0);
        assert_eq!(inversions(&bs("1100")), 4);
        assert_eq!(inversions(&bs("0110")), 2);
    }

    #[test]
    fn invalid_partitions() {
        assert!(BoxedPartition::new(vec![1, 2], 2, 2).is_err());
        assert!(BoxedPartition::new(vec![3], 2, 2).is_err());
        assert!(BoxedPartition::new(vec![1, 1, 1], 2, 2).is_err());
        // trailing zeros beyond the row count are harmless
        assert_eq!(
            BoxedPartition::new(vec![1, 0, 0], 1, 1).unwrap(),
            bp(&[1], 1, 1)
        );
    }

    #[test]
    fn degenerate_boxes() {
        let p = BoxedPartition::empty(0, 1);
        assert_eq!(p.bits(), bs("0"));
        assert_eq!(BoxedPartition::empty(1, 0).bits(), bs("1"));
        assert_eq!(BoxedPartition::all_in_box(0, 3).len(), 1);
        assert_eq!(BoxedPartition::all_in_box(2, 2).len(), 6);
    }

    #[test]
    fn exhaustive_roundtrip_inversions_and_walk() {
        for rows in 0..=6 {
            for cols in 0..=6 {
                for p in BoxedPartition::all_in_box(rows, cols) {
                    let bits = p.bits();
                    assert_eq!(bits.len(), rows + cols);
                    assert_eq!(bits.ones(), rows);
                    assert_eq!(BoxedPartition::from_bits(&bits), p);
                    assert_eq!(bits.inversions(), p.size(), "{p}");
                    assert_eq!(p.bits_by_walk(), bits, "{p}");
                }
            }
        }
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(parse_parts("1,1").unwrap(), vec![1, 1]);
        assert_eq!(parse_parts("").unwrap(), Vec::<usize>::new());
        assert!(parse_parts("1,a").is_err());
        assert_eq!(parse_box("2x3").unwrap(), (2, 3));
        assert!(parse_box("23").is_err());

        let p = bp(&[1, 1], 2, 2);
        assert_eq!(p.to_json(), json!({"parts": [1, 1], "box": [2, 2]}));
        assert_eq!(BoxedPartition::from_json(&p.to_json()).unwrap(), p);
        assert_eq!(p.parts_text(), "1,1");
        assert_eq!(p.to_string(), "(1,1) in 2x2");
    }

    #[test]
    fn ordering_follows_bit_strings_within_a_box() {
        let all = BoxedPartition::all_in_box(2, 2);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert!(BoxedPartition::empty(1, 1) < BoxedPartition::empty(2, 2));
    }
}
