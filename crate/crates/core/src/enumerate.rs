//! Backtracking enumeration of DS pipe dreams and their assembly into expansions.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::coeffs::{Coefficient, IntPoly, KInteger, LaurentPoly};
use crate::error::{Error, Result};
use crate::partitions::{BitString, BoxedPartition};
use crate::region::{Cell, Region};
use crate::ring::RingElement;
use crate::tiles::{Catalog, Half, Kind, Letter, Tile, TileTable, Word};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mode {
    /// Ordinary homology: H tiles, no equivariant tiles.
    H,
    /// Equivariant homology: H tiles, equivariant tiles in the shaded zone.
    HS,
    /// Equivariant K-homology: all K tiles, equivariant tiles in the shaded zone.
    KS,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::H, Mode::HS, Mode::KS];

    pub fn catalog(self) -> Catalog {
        match self {
            Mode::H | Mode::HS => Catalog::H,
            Mode::KS => Catalog::K,
        }
    }

    pub fn allows_equivariant(self) -> bool {
        self != Mode::H
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::H => "H",
            Mode::HS => "HS",
            Mode::KS => "KS",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s.to_ascii_lowercase().as_str() {
            "h" => Ok(Mode::H),
            "hs" => Ok(Mode::HS),
            "ks" => Ok(Mode::KS),
            _ => Err(Error::Parse(format!(
                "unknown ring {s:?} (expected h, hs or ks)"
            ))),
        }
    }
}

/// Statistics of a completed dream.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DreamStats {
    pub nu: BoxedPartition,
    /// Number of equivariant tiles.
    pub equivariant: usize,
    /// Number of fusor tiles, elbows included, inside the equivariant zone.
    pub zone_fusors: usize,
    /// Total number of letters absorbed by fusors.
    pub fusing: usize,
    /// Whether any tile carries a multi-letter word.
    pub has_strict: bool,
}

/// A complete tiling of a region.
#[derive(Clone, Debug)]
pub struct PipeDream {
    region: Arc<Region>,
    /// Tiles in scan order, paired with their cells.
    cells: Vec<(Cell, Tile)>,
    stats: DreamStats,
}

impl PartialEq for PipeDream {
    fn eq(&self, other: &Self) -> bool {
        self.region == other.region && self.cells == other.cells
    }
}

impl Eq for PipeDream {}

impl PipeDream {
    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn cells(&self) -> &[(Cell, Tile)] {
        &self.cells
    }

    pub fn tile_at(&self, cell: Cell) -> Option<&Tile> {
        self.cells.iter().find(|(c, _)| *c == cell).map(|(_, t)| t)
    }

    pub fn stats(&self) -> &DreamStats {
        &self.stats
    }

    pub fn nu(&self) -> &BoxedPartition {
        &self.stats.nu
    }

    /// Tile codes in scan order.
    pub fn codes(&self) -> Vec<String> {
        self.cells.iter().map(|(_, t)| t.code()).collect()
    }

    /// Builds a dream from an explicit tile assignment, checking every edge.
    pub fn from_tiles(region: &Region, tiles: &HashMap<Cell, Tile>) -> Result<PipeDream> {
        let plan = ScanPlan::new(region, Mode::KS);
        if tiles.len() != plan.steps.len() {
            return Err(Error::InvalidTile(format!(
                "expected {} tiles, found {}",
                plan.steps.len(),
                tiles.len()
            )));
        }
        let mut placed: Vec<Tile> = Vec::with_capacity(plan.steps.len());
        for step in &plan.steps {
            let tile = *tiles
                .get(&step.cell)
                .ok_or_else(|| Error::InvalidTile(format!("no tile at {:?}", step.cell)))?;
            if tile.is_equivariant() && !step.eq_allowed {
                return Err(Error::InvalidTile(format!(
                    "equivariant tile outside the shaded zone at {:?}",
                    step.cell
                )));
            }
            if tile.half != step.half {
                return Err(Error::InvalidTile(format!(
                    "{tile} at {:?} is in the wrong half",
                    step.cell
                )));
            }
            if plan.incoming(step, &placed) != incoming_label(&tile)
                || plan.south(step, &placed) != tile.south
            {
                return Err(Error::InvalidTile(format!(
                    "{tile} at {:?} does not match its neighbours",
                    step.cell
                )));
            }
            if let Some(exit) = step.row_exit {
                if outgoing_label(&tile) != exit {
                    return Err(Error::InvalidTile(format!(
                        "row {} does not end in {exit}",
                        step.cell.1
                    )));
                }
            }
            placed.push(tile);
        }
        let region = Arc::new(region.clone());
        finish(&region, &plan, &placed)
    }

    pub fn to_json(&self) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|((col, row), t)| json!({"col": col, "row": row, "tile": t.code()}))
            .collect();
        json!({ "cells": cells })
    }

    pub fn from_json(region: &Region, v: &Value) -> Result<PipeDream> {
        let cells = v
            .get("cells")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("dream JSON needs a \"cells\" array".into()))?;
        let mut tiles = HashMap::new();
        for c in cells {
            let field = |k: &str| {
                c.get(k)
                    .ok_or_else(|| Error::Parse(format!("cell entry without {k:?}")))
            };
            let col = field("col")?
                .as_u64()
                .ok_or_else(|| Error::Parse("bad col".into()))? as usize;
            let row = field("row")?
                .as_u64()
                .ok_or_else(|| Error::Parse("bad row".into()))? as usize;
            let code = field("tile")?
                .as_str()
                .ok_or_else(|| Error::Parse("bad tile".into()))?;
            tiles.insert((col, row), Tile::from_code(code)?);
        }
        PipeDream::from_tiles(region, &tiles)
    }
}

fn incoming_label(t: &Tile) -> Word {
    match t.half {
        Half::Lower => t.west,
        Half::Upper => t.east,
    }
}

fn outgoing_label(t: &Tile) -> Word {
    match t.half {
        Half::Lower => t.east,
        Half::Upper => t.west,
    }
}

#[derive(Clone, Copy, Debug)]
enum Source<T> {
    Fixed(T),
    /// Index of an earlier step in scan order.
    Step(usize),
}

#[derive(Clone, Debug)]
struct Step {
    cell: Cell,
    half: Half,
    incoming: Source<Word>,
    south: Source<Letter>,
    row_exit: Option<Word>,
    eq_allowed: bool,
}

/// Per-cell bookkeeping for the scan: where each cell's known labels come from.
struct ScanPlan {
    steps: Vec<Step>,
    /// Step indices of the top row, west to east.
    top: Vec<usize>,
}

impl ScanPlan {
    fn new(region: &Region, mode: Mode) -> ScanPlan {
        let order = region.scan_order();
        let index: HashMap<Cell, usize> = order.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut steps = Vec::with_capacity(order.len());
        for (i, &(col, row)) in order.iter().enumerate() {
            let half = region.half_of_row(row);
            let (lo, hi) = region.row_span(row);
            let (first, last) = match half {
                Half::Lower => (lo, hi),
                Half::Upper => (hi, lo),
            };
            let incoming = if col == first {
                Source::Fixed(region.row_entry_label(row))
            } else {
                Source::Step(i - 1)
            };
            let south = match region.fixed_south((col, row)) {
                Some(l) => Source::Fixed(l),
                None => Source::Step(index[&(col, row - 1)]),
            };
            steps.push(Step {
                cell: (col, row),
                half,
                incoming,
                south,
                row_exit: (col == last).then(|| region.row_exit_label(row)),
                eq_allowed: mode.allows_equivariant() && region.in_eq_zone((col, row)),
            });
        }
        let top = if region.height() == 0 {
            Vec::new()
        } else {
            let row = region.height();
            let (lo, hi) = region.row_span(row);
            (lo..=hi).map(|c| index[&(c, row)]).collect()
        };
        ScanPlan { steps, top }
    }

    fn incoming(&self, step: &Step, placed: &[Tile]) -> Word {
        match step.incoming {
            Source::Fixed(w) => w,
            Source::Step(j) => outgoing_label(&placed[j]),
        }
    }

    fn south(&self, step: &Step, placed: &[Tile]) -> Letter {
        match step.south {
            Source::Fixed(l) => l,
            Source::Step(j) => placed[j].north,
        }
    }
}

/// Reads ν off the north labels and collects the statistics of a completed tiling.
fn finish(region: &Arc<Region>, plan: &ScanPlan, placed: &[Tile]) -> Result<PipeDream> {
    let (a, b, c, d) = region.dims();
    let bits = if plan.top.is_empty() {
        region.mu().bits()
    } else {
        let mut bits = Vec::with_capacity(plan.top.len());
        for &i in &plan.top {
            match placed[i].north {
                Letter::Zero => bits.push(false),
                Letter::One => bits.push(true),
                other => {
                    return Err(Error::Invariant(format!(
                        "completed dream for {} x {} has north label {other} at column {}",
                        region.lambda(),
                        region.mu(),
                        plan.steps[i].cell.0
                    )))
                }
            }
        }
        BitString::new(bits)
    };
    if bits.ones() != a + c || bits.zeros() != b + d {
        return Err(Error::Invariant(format!(
            "completed dream for {} x {} has north labels {bits} of the wrong content",
            region.lambda(),
            region.mu()
        )));
    }
    let nu = BoxedPartition::from_bits(&bits);
    let mut stats = DreamStats {
        nu,
        equivariant: 0,
        zone_fusors: 0,
        fusing: 0,
        has_strict: false,
    };
    for (step, t) in plan.steps.iter().zip(placed) {
        let fl = t.flags();
        stats.equivariant += fl.is_equivariant as usize;
        stats.zone_fusors += (t.kind == Kind::Fusor && region.in_eq_zone(step.cell)) as usize;
        stats.fusing += fl.fusing_letters;
        stats.has_strict |= fl.is_strict;
    }
    let cells = plan
        .steps
        .iter()
        .map(|s| s.cell)
        .zip(placed.iter().copied())
        .collect();
    Ok(PipeDream {
        region: Arc::clone(region),
        cells,
        stats,
    })
}

/// Whether every upper displacer that pushes one lettered pipe aside is matched
/// by a crossing of the same two pipes somewhere in the upper half.
///
/// Pipes are traced through the upper rows in scan order. A displacer copies the
/// horizontal word's last letter north and carries the vertical letter on in the
/// word; the copy left in the word is absorbed by a later fusor.
fn displacements_resolved(p: &PipeDream) -> bool {
    let mut next_id = 0u32;
    let mut from_south: HashMap<usize, u32> = HashMap::new();
    let mut crossed = HashSet::new();
    let mut displaced = Vec::new();
    let mut row = None;
    let mut word: Vec<Option<u32>> = Vec::new();
    let pair = |x: u32, y: u32| (x.min(y), x.max(y));
    for &((col, r), t) in p.cells() {
        if t.half != Half::Upper {
            continue;
        }
        if row != Some(r) {
            row = Some(r);
            word = vec![None; t.east.len()];
        }
        let below = from_south.remove(&col);
        let v = (!t.south.is_bit()).then(|| {
            below.unwrap_or_else(|| {
                next_id += 1;
                next_id
            })
        });
        let up = match t.kind {
            Kind::Crossing => {
                if let Some(v) = v {
                    crossed.extend(word.iter().flatten().map(|&h| pair(h, v)));
                }
                v
            }
            Kind::Dot => {
                word = vec![v];
                None
            }
            Kind::Fusor => {
                let last = word.last().copied().flatten();
                word = vec![None];
                last
            }
            Kind::Displacer => {
                let last = word.last().copied().flatten();
                if let (Some(h), Some(v)) = (last, v) {
                    displaced.push(pair(h, v));
                }
                word.push(v);
                last
            }
        };
        if let Some(id) = up {
            from_south.insert(col, id);
        }
    }
    displaced.iter().all(|k| crossed.contains(k))
}

struct Search<'a> {
    region: Arc<Region>,
    plan: ScanPlan,
    table: &'a TileTable,
    placed: Vec<Tile>,
    out: Vec<PipeDream>,
}

impl Search<'_> {
    fn run(&mut self) -> Result<()> {
        let i = self.placed.len();
        if i == self.plan.steps.len() {
            let dream = finish(&self.region, &self.plan, &self.placed)?;
            if displacements_resolved(&dream) {
                self.out.push(dream);
            }
            return Ok(());
        }
        let step = &self.plan.steps[i];
        let incoming = self.plan.incoming(step, &self.placed);
        let south = self.plan.south(step, &self.placed);
        let (eq_allowed, row_exit) = (step.eq_allowed, step.row_exit);
        for (tile, _) in self.table.candidates(step.half, incoming, south) {
            if tile.is_equivariant() && !eq_allowed {
                continue;
            }
            if row_exit.is_some_and(|w| outgoing_label(tile) != w) {
                continue;
            }
            self.placed.push(*tile);
            self.run()?;
            self.placed.pop();
        }
        Ok(())
    }
}

/// All dreams of a region in the given mode, in lexicographic order of their
/// tile-code sequences.
pub fn enumerate_dreams(region: &Region, mode: Mode) -> Result<Vec<PipeDream>> {
    let table = tile_table(mode.catalog());
    let mut search = Search {
        region: Arc::new(region.clone()),
        plan: ScanPlan::new(region, mode),
        table,
        placed: Vec::new(),
        out: Vec::new(),
    };
    search.run()?;
    Ok(search.out)
}

fn tile_table(catalog: Catalog) -> &'static TileTable {
    use std::sync::OnceLock;
    static H: OnceLock<TileTable> = OnceLock::new();
    static K: OnceLock<TileTable> = OnceLock::new();
    match catalog {
        Catalog::H => H.get_or_init(|| TileTable::new(Catalog::H)),
        Catalog::K => K.get_or_init(|| TileTable::new(Catalog::K)),
    }
}

pub fn dream_stats(p: &PipeDream) -> &DreamStats {
    p.stats()
}

/// A coefficient ring in which dreams can be weighted.
pub trait DreamWeight: Coefficient {
    /// The enumeration mode whose dreams this ring weighs.
    const MODE: Mode;

    fn weight(stats: &DreamStats) -> Self;
}

impl DreamWeight for BigInt {
    const MODE: Mode = Mode::H;

    fn weight(_: &DreamStats) -> Self {
        BigInt::one()
    }
}

impl DreamWeight for IntPoly {
    const MODE: Mode = Mode::HS;

    /// `t^E`.
    fn weight(stats: &DreamStats) -> Self {
        IntPoly::monomial(1, stats.equivariant as u32)
    }
}

impl DreamWeight for LaurentPoly {
    const MODE: Mode = Mode::KS;

    /// `(-1)^fusing (1-q)^E q^F`.
    fn weight(stats: &DreamStats) -> Self {
        let sign = if stats.fusing.is_multiple_of(2) {
            1
        } else {
            -1
        };
        LaurentPoly::monomial(sign, stats.zone_fusors as i32)
            * LaurentPoly::one_minus_q().pow(stats.equivariant as u32)
    }
}

/// Non-equivariant K-theory: the KS weight at `q = 1`.
impl DreamWeight for KInteger {
    const MODE: Mode = Mode::KS;

    fn weight(stats: &DreamStats) -> Self {
        if stats.equivariant > 0 {
            KInteger::zero()
        } else if stats.fusing.is_multiple_of(2) {
            KInteger::one()
        } else {
            -KInteger::one()
        }
    }
}

/// Weight of a dream in the ring `C`; fails if the dream uses tiles `C`'s mode forbids.
pub fn dream_weight<C: DreamWeight>(p: &PipeDream) -> Result<C> {
    let s = p.stats();
    let mismatch = |why: &str| {
        Err(Error::RingMismatch(format!(
            "{} weight of a dream {why}",
            C::RING
        )))
    };
    match C::MODE {
        Mode::H | Mode::HS if s.has_strict => mismatch("with strict K-tiles"),
        Mode::H | Mode::HS if p.cells.iter().any(|(_, t)| !t.in_h_catalog()) => {
            mismatch("with K-tiles")
        }
        Mode::H if s.equivariant > 0 => mismatch("with equivariant tiles"),
        _ => Ok(C::weight(s)),
    }
}

/// The product `[λ]·[μ]` expanded in Schubert classes of the `(a+c)×(b+d)` box.
#[derive(Clone, Debug, PartialEq)]
pub struct Expansion<C: Coefficient> {
    pub lambda: BoxedPartition,
    pub mu: BoxedPartition,
    pub product: RingElement<C>,
}

impl<C: Coefficient> Expansion<C> {
    pub fn coeff(&self, nu: &BoxedPartition) -> C {
        self.product.coeff(nu)
    }

    pub fn terms(&self) -> &BTreeMap<BoxedPartition, C> {
        self.product.terms()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "ring": C::RING,
            "lambda": self.lambda.to_json(),
            "mu": self.mu.to_json(),
            "terms": self.product.terms_json(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let ring = v.get("ring").and_then(Value::as_str).unwrap_or_default();
        if ring != C::RING {
            return Err(Error::RingMismatch(format!(
                "expected ring {}, found {ring:?}",
                C::RING
            )));
        }
        let part = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Parse(format!("expansion JSON without {k:?}")))
                .and_then(BoxedPartition::from_json)
        };
        let terms = v
            .get("terms")
            .ok_or_else(|| Error::Parse("expansion JSON without \"terms\"".into()))?;
        Ok(Expansion {
            lambda: part("lambda")?,
            mu: part("mu")?,
            product: RingElement::from_terms_json(terms)?,
        })
    }
}

impl<C: Coefficient> fmt::Display for Expansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.product)
    }
}

/// Expands `[λ]·[μ]` in the ring `C` from the dreams of the region for `(λ, μ)`.
pub fn expand<C: DreamWeight>(
    lambda: &BoxedPartition,
    mu: &BoxedPartition,
) -> Result<Expansion<C>> {
    let dreams = enumerate_dreams(&Region::new(lambda, mu), C::MODE)?;
    expansion_from_dreams(lambda, mu, &dreams)
}

pub fn expansion_from_dreams<C: DreamWeight>(
    lambda: &BoxedPartition,
    mu: &BoxedPartition,
    dreams: &[PipeDream],
) -> Result<Expansion<C>> {
    let mut product = RingElement::zero();
    for p in dreams {
        product.add_term(p.nu().clone(), dream_weight::<C>(p)?);
    }
    Ok(Expansion {
        lambda: lambda.clone(),
        mu: mu.clone(),
        product,
    })
}

const CELL_WIDTH: usize = 18;

/// Text picture of a dream: three lines per row (north labels, `west code east`,
/// south labels), rows top to bottom.
pub fn render_dream(p: &PipeDream) -> String {
    let r = p.region();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "dream for {} x {}  nu = {}",
        r.lambda(),
        r.mu(),
        p.nu()
    );
    let tiles: HashMap<Cell, &Tile> = p.cells.iter().map(|(c, t)| (*c, t)).collect();
    for row in (1..=r.height()).rev() {
        let (mut north, mut mid, mut south) = (String::new(), String::new(), String::new());
        for col in 1..=r.width() {
            match tiles.get(&(col, row)) {
                Some(t) => {
                    let _ = write!(north, "{:^w$}", t.north.symbol(), w = CELL_WIDTH);
                    let _ = write!(
                        mid,
                        "{:>3} {:^10} {:<3}",
                        t.west.to_string(),
                        t.code(),
                        t.east.to_string()
                    );
                    let _ = write!(south, "{:^w$}", t.south.symbol(), w = CELL_WIDTH);
                }
                None => {
                    for line in [&mut north, &mut mid, &mut south] {
                        line.push_str(&" ".repeat(CELL_WIDTH));
                    }
                }
            }
        }
        let _ = writeln!(out, "    {}", north.trim_end());
        let _ = writeln!(out, "{row:>3} {}", mid.trim_end());
        let _ = writeln!(out, "    {}", south.trim_end());
    }
    out
}

/// Reads back the output of [`render_dream`] for the given region.
pub fn parse_render(region: &Region, text: &str) -> Result<PipeDream> {
    let mut tiles = HashMap::new();
    for line in text.lines() {
        let Some(head) = line.get(..4) else { continue };
        let Ok(row) = head.trim().parse::<usize>() else {
            continue;
        };
        let body: Vec<char> = line[4..].chars().collect();
        for (i, chunk) in body.chunks(CELL_WIDTH).enumerate() {
            let chunk: String = chunk.iter().collect();
            let code = chunk
                .get(4..14)
                .unwrap_or_else(|| chunk.get(4..).unwrap_or(""))
                .trim();
            if !code.is_empty() {
                tiles.insert((i + 1, row), Tile::from_code(code)?);
            }
        }
    }
    PipeDream::from_tiles(region, &tiles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::region::build_region;

    fn bp(parts: &str, r: usize, c: usize) -> BoxedPartition {
        BoxedPartition::parse(parts, r, c).unwrap()
    }

    fn example() -> Region {
        build_region(&bp("1,1", 2, 2), &bp("1,0", 2, 1))
    }

    #[test]
    fn example_dream_counts() {
        let r = example();
        let counts: Vec<usize> = Mode::ALL
            .iter()
            .map(|&m| enumerate_dreams(&r, m).unwrap().len())
            .collect();
        assert_eq!(counts, vec![2, 5, 7]);
    }

    #[test]
    fn example_stats() {
        let r = example();
        let hs = enumerate_dreams(&r, Mode::HS).unwrap();
        let mut eq: Vec<(BoxedPartition, usize)> = hs
            .iter()
            .map(|p| p.stats())
            .filter(|s| s.equivariant > 0)
            .map(|s| (s.nu.clone(), s.equivariant))
            .collect();
        eq.sort();
        assert_eq!(
            eq,
            vec![
                (bp("2,1,1,0", 4, 3), 1),
                (bp("2,2,0,0", 4, 3), 1),
                (bp("2,2,1,0", 4, 3), 2)
            ]
        );

        let ks = enumerate_dreams(&r, Mode::KS).unwrap();
        let mut strict: Vec<(BoxedPartition, usize, usize, usize)> = ks
            .iter()
            .map(|p| p.stats())
            .filter(|s| s.fusing > 0)
            .map(|s| (s.nu.clone(), s.equivariant, s.zone_fusors, s.fusing))
            .collect();
        strict.sort();
        let mut expect = vec![
            (bp("1,1,0,0", 4, 3), 0, 1, 1),
            (bp("2,1,0,0", 4, 3), 1, 1, 1),
        ];
        expect.sort();
        assert_eq!(strict, expect);
    }

    #[test]
    fn weights() {
        let r = example();
        let ks = enumerate_dreams(&r, Mode::KS).unwrap();
        let target = ks
            .iter()
            .find(|p| p.stats().equivariant == 1 && p.stats().fusing == 1)
            .unwrap();
        let w: LaurentPoly = dream_weight(target).unwrap();
        assert_eq!(w, -(LaurentPoly::one_minus_q() * LaurentPoly::q()));
        assert!(dream_weight::<BigInt>(target).is_err());
        assert!(dream_weight::<IntPoly>(target).is_err());

        let h = enumerate_dreams(&r, Mode::H).unwrap();
        assert!(h
            .iter()
            .all(|p| dream_weight::<BigInt>(p).unwrap() == BigInt::one()));
        let hs = enumerate_dreams(&r, Mode::HS).unwrap();
        let eq = hs.iter().find(|p| p.stats().equivariant == 1).unwrap();
        assert_eq!(dream_weight::<IntPoly>(eq).unwrap(), IntPoly::t());
    }

    #[test]
    fn example_expansions() {
        let (l, m) = (bp("1,1", 2, 2), bp("1,0", 2, 1));
        let nu = |s: &str| bp(s, 4, 3);
        let h = expand::<BigInt>(&l, &m).unwrap();
        assert_eq!(h.terms().len(), 2);
        assert_eq!(h.coeff(&nu("2,1")), BigInt::one());
        assert_eq!(h.coeff(&nu("1,1,1")), BigInt::one());

        let hs = expand::<IntPoly>(&l, &m).unwrap();
        let t = IntPoly::t();
        assert_eq!(hs.terms().len(), 5);
        assert_eq!(hs.coeff(&nu("2,1")), IntPoly::one());
        assert_eq!(hs.coeff(&nu("1,1,1")), IntPoly::one());
        assert_eq!(hs.coeff(&nu("2,1,1")), t);
        assert_eq!(hs.coeff(&nu("2,2")), t);
        assert_eq!(hs.coeff(&nu("2,2,1")), t.pow(2));

        let ks = expand::<LaurentPoly>(&l, &m).unwrap();
        let q = LaurentPoly::q();
        let one_q = LaurentPoly::one_minus_q();
        assert_eq!(ks.terms().len(), 6);
        assert_eq!(ks.coeff(&nu("1,1")), -q.clone());
        assert_eq!(ks.coeff(&nu("1,1,1")), q.clone());
        assert_eq!(ks.coeff(&nu("2,1")), q.pow(2));
        assert_eq!(ks.coeff(&nu("2,1,1")), &one_q * &q);
        assert_eq!(ks.coeff(&nu("2,2")), &one_q * &q);
        assert_eq!(ks.coeff(&nu("2,2,1")), one_q.pow(2));
    }

    #[test]
    fn dreams_are_sorted_and_distinct() {
        let r = example();
        let ks = enumerate_dreams(&r, Mode::KS).unwrap();
        let codes: Vec<Vec<String>> = ks.iter().map(PipeDream::codes).collect();
        let mut sorted = codes.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(codes, sorted);
        assert_eq!(ks, enumerate_dreams(&r, Mode::KS).unwrap());
    }

    #[test]
    fn render_roundtrip() {
        let r = example();
        let ks = enumerate_dreams(&r, Mode::KS).unwrap();
        let texts: Vec<String> = ks.iter().map(render_dream).collect();
        for (p, text) in ks.iter().zip(&texts) {
            let back = parse_render(&r, text).unwrap();
            assert_eq!(&back, p);
            assert_eq!(render_dream(&back), *text);
            for (_, t) in p.cells() {
                assert!(text.contains(&t.code()));
            }
        }
        let mut uniq = texts.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), texts.len());
    }

    #[test]
    fn json_roundtrip() {
        let r = example();
        for p in enumerate_dreams(&r, Mode::KS).unwrap() {
            assert_eq!(PipeDream::from_json(&r, &p.to_json()).unwrap(), p);
        }
        let e = expand::<LaurentPoly>(r.lambda(), r.mu()).unwrap();
        assert_eq!(
            Expansion::<LaurentPoly>::from_json(&e.to_json()).unwrap(),
            e
        );
        assert!(Expansion::<IntPoly>::from_json(&e.to_json()).is_err());
    }

    #[test]
    fn tampered_dream_is_rejected() {
        let r = example();
        let p = &enumerate_dreams(&r, Mode::H).unwrap()[0];
        let mut tiles: HashMap<Cell, Tile> = p.cells().iter().copied().collect();
        let (cell, _) = p.cells()[0];
        tiles.insert(cell, Tile::dot(Letter::One));
        assert!(PipeDream::from_tiles(&r, &tiles).is_err());
    }

    #[test]
    fn empty_boxes_give_the_forced_dream() {
        for (a, b, c, d) in [
            (0, 0, 0, 0),
            (0, 1, 1, 0),
            (1, 0, 0, 1),
            (2, 1, 0, 0),
            (0, 0, 1, 2),
            (1, 1, 1, 1),
        ] {
            let (l, m) = (BoxedPartition::empty(a, b), BoxedPartition::empty(c, d));
            for mode in Mode::ALL {
                let dreams = enumerate_dreams(&Region::new(&l, &m), mode).unwrap();
                let h: Vec<&PipeDream> = dreams
                    .iter()
                    .filter(|p| p.stats().equivariant == 0)
                    .collect();
                assert_eq!(h.len(), 1, "{a}{b}{c}{d} {mode}");
                assert_eq!(h[0].nu(), &BoxedPartition::empty(a + c, b + d));
            }
        }
    }
}
