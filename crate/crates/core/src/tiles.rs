//! Tile catalogs for DS pipe dreams.
//!
//! Lower tiles come in four kinds (crossing, dot, fusor, displacer). Each is
//! determined by a vertical word `V` and possibly a letter; its four edge labels
//! follow from those parameters. Upper tiles are the left-right mirrors of lower
//! tiles with `0` and `1` exchanged, and are named after the lower tile they
//! mirror.
//!
//! Labels on horizontal edges are single [`Letter`]s. Labels on vertical edges
//! are [`Word`]s: in the lower half either the singleton `0` or a nonempty word
//! over `{1, R, Q}` with no repeated letter and `1` only in last position; the
//! upper half uses the image of that set under `0 <-> 1`.
//!
//! [`catalog`] lists every tile of that shape. Only the [admissible] ones are
//! used for matching: with letters ranked `1 < R < Q`, words must be strictly
//! decreasing and a crossing word must outrank the letter it crosses.
//!
//! [admissible]: Tile::is_admissible

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    Zero,
    One,
    R,
    Q,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::Zero, Letter::One, Letter::R, Letter::Q];

    pub fn swap01(self) -> Letter {
        match self {
            Letter::Zero => Letter::One,
            Letter::One => Letter::Zero,
            other => other,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Letter::Zero => '0',
            Letter::One => '1',
            Letter::R => 'R',
            Letter::Q => 'Q',
        }
    }

    pub fn from_symbol(c: char) -> Result<Letter> {
        match c {
            '0' => Ok(Letter::Zero),
            '1' => Ok(Letter::One),
            'R' => Ok(Letter::R),
            'Q' => Ok(Letter::Q),
            _ => Err(Error::InvalidLabel(format!("unknown letter {c:?}"))),
        }
    }

    pub fn is_bit(self) -> bool {
        matches!(self, Letter::Zero | Letter::One)
    }

    /// Position in the order `0 < 1 < R < Q` of the lower half.
    pub fn rank(self) -> u8 {
        match self {
            Letter::Zero => 0,
            Letter::One => 1,
            Letter::R => 2,
            Letter::Q => 3,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Label of a vertical edge: a word of at most three letters.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    letters: [Letter; 3],
}

impl Word {
    pub const MAX_LEN: usize = 3;

    pub fn empty() -> Word {
        Word {
            len: 0,
            letters: [Letter::Zero; 3],
        }
    }

    pub fn single(l: Letter) -> Word {
        Word::empty().push(l).expect("a single letter fits")
    }

    pub fn from_letters(letters: &[Letter]) -> Option<Word> {
        letters.iter().try_fold(Word::empty(), |w, &l| w.push(l))
    }

    /// Appends a letter; `None` if the word is full.
    pub fn push(self, l: Letter) -> Option<Word> {
        if self.len() == Self::MAX_LEN {
            return None;
        }
        let mut w = self;
        w.letters[w.len()] = l;
        w.len += 1;
        Some(w)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters[..self.len()]
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters().last().copied()
    }

    /// The single letter, if this word has length one.
    pub fn as_letter(&self) -> Option<Letter> {
        (self.len == 1).then(|| self.letters[0])
    }

    pub fn swap01(self) -> Word {
        let mut w = self;
        for l in &mut w.letters[..self.len as usize] {
            *l = l.swap01();
        }
        w
    }

    /// Whether this is a word over the half's alphabet: `{1,R,Q}` (lower) or
    /// `{0,R,Q}` (upper), no repeats, the bit letter only in last position.
    /// The empty word counts.
    pub fn is_half_word(&self, half: Half) -> bool {
        let bit = half.word_bit();
        let ls = self.letters();
        for (i, l) in ls.iter().enumerate() {
            if *l == bit.swap01() {
                return false;
            }
            if *l == bit && i + 1 != ls.len() {
                return false;
            }
            if ls[..i].contains(l) {
                return false;
            }
        }
        true
    }

    /// Letters strictly decreasing in rank.
    pub fn is_decreasing(&self) -> bool {
        self.letters().windows(2).all(|p| p[0].rank() > p[1].rank())
    }

    /// Whether the word may label a vertical edge in the given half.
    pub fn is_vertical_label(&self, half: Half) -> bool {
        if self.is_empty() {
            return false;
        }
        *self == Word::single(half.word_bit().swap01()) || self.is_half_word(half)
    }

    /// All legal vertical labels of a half, in a fixed order.
    pub fn vertical_labels(half: Half) -> Vec<Word> {
        let mut out = vec![Word::single(half.word_bit().swap01())];
        out.extend(half_words(half).into_iter().filter(|w| !w.is_empty()));
        out
    }
}

/// All words over the half's alphabet (including the empty word), shortest first.
pub fn half_words(half: Half) -> Vec<Word> {
    let alphabet = [half.word_bit(), Letter::R, Letter::Q];
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..Word::MAX_LEN {
        let mut next = Vec::new();
        for w in &frontier {
            for &l in &alphabet {
                if let Some(v) = w.push(l).filter(|v| v.is_half_word(half)) {
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().copied());
        frontier = next;
    }
    out
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        for l in self.letters() {
            write!(f, "{l}")?;
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

    fn from_str(s: &str) -> Result<Word> {
        let s = s.trim();
        if s == "-" {
            return Ok(Word::empty());
        }
        let letters = s
            .chars()
            .map(Letter::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        Word::from_letters(&letters)
            .ok_or_else(|| Error::InvalidLabel(format!("word {s:?} is too long")))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Half {
    Lower,
    Upper,
}

impl Half {
    /// The bit letter allowed (in last position) inside multi-letter words.
    pub fn word_bit(self) -> Letter {
        match self {
            Half::Lower => Letter::One,
            Half::Upper => Letter::Zero,
        }
    }

    pub fn flip(self) -> Half {
        match self {
            Half::Lower => Half::Upper,
            Half::Upper => Half::Lower,
        }
    }
}

/// Which tile catalog is in use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Catalog {
    /// Crossings and elbows only: every vertical label is a single letter.
    H,
    /// All K-tiles, including multi-letter words, fusors and displacers.
    K,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Kind {
    Crossing,
    Dot,
    Fusor,
    Displacer,
}

/// A tile with its four edge labels.
///
/// `word` and `letter` are the parameters of the defining lower tile (for an
/// upper tile: of the lower tile it mirrors). Unused parameters are empty / `0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Tile {
    pub half: Half,
    pub kind: Kind,
    pub word: Word,
    pub letter: Letter,
    pub west: Word,
    pub east: Word,
    pub north: Letter,
    pub south: Letter,
}

impl Tile {
    /// Crossing of a vertical label `v` with a horizontal letter `b`.
    /// `v` is the singleton `0` or a nonempty lower word; `v != b` and `v = 1` forces `b = 0`.
    pub fn crossing(v: Word, b: Letter) -> Result<Tile> {
        if !v.is_vertical_label(Half::Lower) {
            return Err(Error::InvalidTile(format!(
                "CR({v};{b}): bad vertical label"
            )));
        }
        if v.as_letter() == Some(b) {
            return Err(Error::InvalidTile(format!(
                "CR({v};{b}): labels must differ"
            )));
        }
        if v.as_letter() == Some(Letter::One) && b != Letter::Zero {
            return Err(Error::InvalidTile(format!(
                "CR({v};{b}): a 1 only crosses a 0"
            )));
        }
        Ok(Tile {
            half: Half::Lower,
            kind: Kind::Crossing,
            word: v,
            letter: b,
            west: v,
            east: v,
            north: b,
            south: b,
        })
    }

    /// Elbow with `0` entering from the west and leaving north, `b` from south to east.
    pub fn dot(b: Letter) -> Tile {
        Tile {
            half: Half::Lower,
            kind: Kind::Dot,
            word: Word::empty(),
            letter: b,
            west: Word::single(Letter::Zero),
            east: Word::single(b),
            north: Letter::Zero,
            south: b,
        }
    }

    /// Fusor: word `v` enters from the west, its last letter leaves north, the
    /// remaining prefix is absorbed. With a one-letter `v` this is an ordinary elbow.
    pub fn fusor(v: Word) -> Result<Tile> {
        if v.is_empty() || !v.is_half_word(Half::Lower) {
            return Err(Error::InvalidTile(format!("FU({v}): bad word")));
        }
        Ok(Tile {
            half: Half::Lower,
            kind: Kind::Fusor,
            word: v,
            letter: Letter::Zero,
            west: v,
            east: Word::single(Letter::Zero),
            north: v.last().expect("nonempty"),
            south: Letter::Zero,
        })
    }

    /// Displacer: word `v` enters from the west, its last letter leaves north, and
    /// the letter `c` from the south is appended to the word leaving east.
    pub fn displacer(v: Word, c: Letter) -> Result<Tile> {
        if v.is_empty() || !v.is_half_word(Half::Lower) {
            return Err(Error::InvalidTile(format!("DI({v};{c}): bad word")));
        }
        let east = v
            .push(c)
            .filter(|e| e.is_half_word(Half::Lower))
            .ok_or_else(|| {
                Error::InvalidTile(format!("DI({v};{c}): {v}{c} is not a legal word"))
            })?;
        Ok(Tile {
            half: Half::Lower,
            kind: Kind::Displacer,
            word: v,
            letter: c,
            west: v,
            east,
            north: v.last().expect("nonempty"),
            south: c,
        })
    }

    /// Left-right flip with `0 <-> 1` exchanged; switches halves. An involution.
    pub fn mirror(&self) -> Tile {
        Tile {
            half: self.half.flip(),
            kind: self.kind,
            word: self.word,
            letter: self.letter,
            west: self.east.swap01(),
            east: self.west.swap01(),
            north: self.north.swap01(),
            south: self.south.swap01(),
        }
    }

    /// The all-`0` lower elbow or the all-`1` upper elbow.
    pub fn is_equivariant(&self) -> bool {
        self.kind == Kind::Dot && self.letter == Letter::Zero
    }

    /// Carries a vertical label with two or more letters.
    pub fn is_strict(&self) -> bool {
        self.west.len() >= 2 || self.east.len() >= 2
    }

    /// Size of the absorbed prefix of a fusor's word (0 for every other kind).
    pub fn fusing_letters(&self) -> usize {
        match self.kind {
            Kind::Fusor => self.word.len() - 1,
            _ => 0,
        }
    }

    /// A fusor that absorbs at least one letter.
    pub fn is_weighted_fusor(&self) -> bool {
        self.fusing_letters() >= 1
    }

    pub fn flags(&self) -> TileFlags {
        TileFlags {
            is_equivariant: self.is_equivariant(),
            is_strict: self.is_strict(),
            fusing_letters: self.fusing_letters(),
            is_weighted_fusor: self.is_weighted_fusor(),
        }
    }

    /// Canonical code, e.g. `CR(R1;0)`, `DOT(1)`, `FU(R1)`, `DI(R;1)`, and the same
    /// prefixed with `U` for upper tiles.
    pub fn code(&self) -> String {
        let body = match self.kind {
            Kind::Crossing => format!("CR({};{})", self.word, self.letter),
            Kind::Dot => format!("DOT({})", self.letter),
            Kind::Fusor => format!("FU({})", self.word),
            Kind::Displacer => format!("DI({};{})", self.word, self.letter),
        };
        match self.half {
            Half::Lower => body,
            Half::Upper => format!("U{body}"),
        }
    }

    pub fn from_code(code: &str) -> Result<Tile> {
        let code = code.trim();
        let (half, body) = match code.strip_prefix('U') {
            Some(rest) => (Half::Upper, rest),
            None => (Half::Lower, code),
        };
        let bad = || Error::InvalidTile(format!("unparseable tile code {code:?}"));
        let open = body.find('(').ok_or_else(bad)?;
        let args = body[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let letter = |s: &str| -> Result<Letter> {
            let mut cs = s.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) => Letter::from_symbol(c),
                _ => Err(bad()),
            }
        };
        let lower = match &body[..open] {
            "CR" => {
                let (v, b) = args.split_once(';').ok_or_else(bad)?;
                Tile::crossing(v.parse()?, letter(b)?)?
            }
            "DOT" => Tile::dot(letter(args)?),
            "FU" => Tile::fusor(args.parse()?)?,
            "DI" => {
                let (v, c) = args.split_once(';').ok_or_else(bad)?;
                Tile::displacer(v.parse()?, letter(c)?)?
            }
            _ => return Err(bad()),
        };
        Ok(match half {
            Half::Lower => lower,
            Half::Upper => lower.mirror(),
        })
    }

    /// Whether the tile may appear in a dream. Judged on the lower tile (an upper
    /// tile on the lower tile it mirrors): every word is decreasing, and a word
    /// crossing a nonzero letter has all its letters above it.
    pub fn is_admissible(&self) -> bool {
        let t = match self.half {
            Half::Lower => *self,
            Half::Upper => self.mirror(),
        };
        if !(t.west.is_decreasing() && t.east.is_decreasing()) {
            return false;
        }
        match t.kind {
            Kind::Crossing => {
                let b = t.letter;
                b == Letter::Zero
                    || t.word == Word::single(Letter::Zero)
                    || t.word.letters().iter().all(|l| l.rank() > b.rank())
            }
            _ => true,
        }
    }

    /// Whether the tile belongs to the H catalog (crossings and elbows).
    pub fn in_h_catalog(&self) -> bool {
        match self.kind {
            Kind::Crossing => self.word.len() == 1,
            Kind::Dot => true,
            Kind::Fusor => self.word.len() == 1,
            Kind::Displacer => false,
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TileFlags {
    pub is_equivariant: bool,
    pub is_strict: bool,
    pub fusing_letters: usize,
    pub is_weighted_fusor: bool,
}

pub fn tile_flags(t: &Tile) -> TileFlags {
    t.flags()
}

pub fn tile_mirror(t: &Tile) -> Tile {
    t.mirror()
}

fn lower_k_catalog() -> Vec<Tile> {
    let mut out = Vec::new();
    for v in Word::vertical_labels(Half::Lower) {
        for b in Letter::ALL {
            if let Ok(t) = Tile::crossing(v, b) {
                out.push(t);
            }
        }
    }
    out.extend(Letter::ALL.iter().map(|&b| Tile::dot(b)));
    for v in half_words(Half::Lower)
        .into_iter()
        .filter(|w| !w.is_empty())
    {
        out.push(Tile::fusor(v).expect("legal word"));
        for c in Letter::ALL {
            if let Ok(t) = Tile::displacer(v, c) {
                out.push(t);
            }
        }
    }
    out
}

/// The tiles of one half in one catalog, sorted by code. Includes tiles that
/// are not [admissible](Tile::is_admissible).
pub fn catalog(half: Half, mode: Catalog) -> Vec<Tile> {
    let mut tiles: Vec<Tile> = lower_k_catalog()
        .into_iter()
        .filter(|t| mode == Catalog::K || t.in_h_catalog())
        .map(|t| match half {
            Half::Lower => t,
            Half::Upper => t.mirror(),
        })
        .collect();
    tiles.sort_by_key(Tile::code);
    tiles
}

/// Per-kind tile counts for one half of one catalog.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogCounts {
    pub crossings: usize,
    pub dots: usize,
    pub fusors: usize,
    pub displacers: usize,
}

impl CatalogCounts {
    pub fn of(tiles: &[Tile]) -> Self {
        let mut c = CatalogCounts::default();
        for t in tiles {
            match t.kind {
                Kind::Crossing => c.crossings += 1,
                Kind::Dot => c.dots += 1,
                Kind::Fusor => c.fusors += 1,
                Kind::Displacer => c.displacers += 1,
            }
        }
        c
    }

    pub fn total(&self) -> usize {
        self.crossings + self.dots + self.fusors + self.displacers
    }
}

/// Admissible lower tiles of the catalog with the given west and south labels,
/// sorted by code. The equivariant tile is included only when `eq_allowed`.
pub fn match_lower(
    west: Word,
    south: Letter,
    mode: Catalog,
    eq_allowed: bool,
) -> Result<Vec<Tile>> {
    if !west.is_vertical_label(Half::Lower) {
        return Err(Error::InvalidLabel(format!(
            "{west} is not a lower vertical label"
        )));
    }
    Ok(catalog(Half::Lower, mode)
        .into_iter()
        .filter(|t| t.west == west && t.south == south && t.is_admissible())
        .filter(|t| eq_allowed || !t.is_equivariant())
        .collect())
}

/// Upper tiles with the given east and south labels: the mirror image of [`match_lower`].
pub fn match_upper(
    east: Word,
    south: Letter,
    mode: Catalog,
    eq_allowed: bool,
) -> Result<Vec<Tile>> {
    if !east.is_vertical_label(Half::Upper) {
        return Err(Error::InvalidLabel(format!(
            "{east} is not an upper vertical label"
        )));
    }
    let mut tiles: Vec<Tile> = match_lower(east.swap01(), south.swap01(), mode, eq_allowed)?
        .iter()
        .map(Tile::mirror)
        .collect();
    tiles.sort_by_key(Tile::code);
    Ok(tiles)
}

/// Precomputed candidate lists keyed by (half, incoming vertical label, south label).
///
/// The incoming vertical label is the west edge for lower tiles and the east
/// edge for upper tiles. Lists hold the admissible tiles sorted by code;
/// callers filter the equivariant tile by position.
#[derive(Clone, Debug)]
pub struct TileTable {
    mode: Catalog,
    table: HashMap<(Half, Word, Letter), Vec<(Tile, String)>>,
}

impl TileTable {
    pub fn new(mode: Catalog) -> Self {
        let mut table: HashMap<(Half, Word, Letter), Vec<(Tile, String)>> = HashMap::new();
        for half in [Half::Lower, Half::Upper] {
            for t in catalog(half, mode).into_iter().filter(Tile::is_admissible) {
                let incoming = match half {
                    Half::Lower => t.west,
                    Half::Upper => t.east,
                };
                table
                    .entry((half, incoming, t.south))
                    .or_default()
                    .push((t, t.code()));
            }
        }
        TileTable { mode, table }
    }

    pub fn mode(&self) -> Catalog {
        self.mode
    }

    pub fn candidates(&self, half: Half, incoming: Word, south: Letter) -> &[(Tile, String)] {
        self.table
            .get(&(half, incoming, south))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }
}
