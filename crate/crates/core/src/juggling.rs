//! Bounded juggling patterns, slices, and the direct-sum pattern `σ′`.
//!
//! A pattern of period `n` is stored by its window `J(1..=n)`. In the
//! permutation-matrix picture row `i` has a dot in column `J(i)`; the West
//! triangle is the part with column `<= n`, the East triangle the rest.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::{BitString, BoxedPartition};
use crate::region::Region;
use crate::tiles::Letter;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JugglingPattern {
    n: usize,
    window: Vec<i64>,
}

pub fn pattern_from_window(window: &[i64]) -> Result<JugglingPattern> {
    JugglingPattern::new(window.to_vec())
}

impl JugglingPattern {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        let mut seen = vec![false; window.len()];
        for (idx, &v) in window.iter().enumerate() {
            let i = idx as i64 + 1;
            if !(0..=n).contains(&(v - i)) {
                return Err(Error::InvalidPattern(format!(
                    "J({i}) = {v} is not in [{i}, {}]",
                    i + n
                )));
            }
            let res = v.rem_euclid(n.max(1)) as usize;
            if std::mem::replace(&mut seen[res], true) {
                return Err(Error::InvalidPattern(format!(
                    "{window:?} is not a bijection mod {n}"
                )));
            }
        }
        Ok(JugglingPattern {
            n: window.len(),
            window,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `J` on all of `Z`.
    pub fn apply(&self, i: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n);
        self.window[r as usize] + (i - 1 - r)
    }

    pub fn inverse(&self, t: i64) -> i64 {
        let n = self.n as i64;
        let r = (0..n)
            .find(|&r| (self.window[r as usize] - t).rem_euclid(n) == 0)
            .expect("bijection mod n");
        r + 1 + (t - self.window[r as usize])
    }

    pub fn ball_number(&self) -> usize {
        let total: i64 = self
            .window
            .iter()
            .enumerate()
            .map(|(i, &v)| v - i as i64 - 1)
            .sum();
        (total / self.n.max(1) as i64) as usize
    }

    /// Every bounded juggling pattern of period `n`: a permutation of residues,
    /// with a choice of `i` or `i+n` at each fixed point.
    pub fn all(n: usize) -> Vec<JugglingPattern> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |p| {
            let fixed: Vec<usize> = (0..n).filter(|&i| p[i] == i).collect();
            for mask in 0..1u32 << fixed.len() {
                let window = (0..n)
                    .map(|i| {
                        let step = (p[i] + n - i) % n;
                        let lift = fixed
                            .iter()
                            .position(|&f| f == i)
                            .is_some_and(|k| mask >> k & 1 == 1);
                        (i + 1 + step + if lift { n } else { 0 }) as i64
                    })
                    .collect();
                out.push(JugglingPattern { n, window });
            }
        });
        out
    }

    /// Rows `r` (1-based) whose dot lies in the West triangle, with its column.
    pub fn west_dots(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .filter(|&r| self.window[r - 1] <= self.n as i64)
            .map(|r| (r, self.window[r - 1] as usize))
            .collect()
    }

    /// East dots as `(row, column - n)`.
    pub fn east_dots(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .filter(|&r| self.window[r - 1] > self.n as i64)
            .map(|r| (r, self.window[r - 1] as usize - self.n))
            .collect()
    }

    pub fn is_interval(&self) -> bool {
        runs_nw_se(&self.east_dots())
    }

    /// The unique pattern with these West dots whose East dots run NW/SE.
    pub fn from_west(n: usize, west: &[(usize, usize)]) -> Result<Self> {
        let mut window = vec![0i64; n];
        let mut cols = vec![false; n + 1];
        for &(r, c) in west {
            if !(1..=n).contains(&r) || !(r..=n).contains(&c) || window[r - 1] != 0 || cols[c] {
                return Err(Error::InvalidPattern(format!(
                    "{west:?} is not an upper triangular partial permutation"
                )));
            }
            window[r - 1] = c as i64;
            cols[c] = true;
        }
        let rows: Vec<usize> = (1..=n).filter(|&r| window[r - 1] == 0).collect();
        let free: Vec<usize> = (1..=n).filter(|&c| !cols[c]).collect();
        for (r, c) in rows.into_iter().zip(free) {
            window[r - 1] = (c + n) as i64;
        }
        JugglingPattern::new(window)
    }

    /// Dot-matrix picture of the window's parallelogram, West and East
    /// triangles separated by `|`.
    pub fn render(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        for r in 1..=n {
            for col in 1..=2 * n {
                if col == n + 1 {
                    out.push('|');
                }
                out.push(if self.window[r - 1] == col as i64 {
                    '*'
                } else if (r..=r + n).contains(&col) {
                    '.'
                } else {
                    ' '
                });
            }
            out.truncate(out.trim_end().len());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for JugglingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", w.join(","))
    }
}

fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for j in k..p.len() {
        p.swap(k, j);
        permutations(p, k + 1, f);
        p.swap(k, j);
    }
}

fn runs_nw_se(dots: &[(usize, usize)]) -> bool {
    dots.windows(2).all(|w| w[0].1 < w[1].1)
}

/// `i -> J^{-1}(i+n)`; exchanges the two triangles.
pub fn dual(j: &JugglingPattern) -> JugglingPattern {
    let n = j.n as i64;
    let window = (1..=n).map(|i| j.inverse(i + n)).collect();
    JugglingPattern { n: j.n, window }
}

/// `i -> J(i-m) + m`.
pub fn rotate(j: &JugglingPattern, m: i64) -> JugglingPattern {
    let window = (1..=j.n as i64).map(|i| j.apply(i - m) + m).collect();
    JugglingPattern { n: j.n, window }
}

/// Rank bounds `r(i,j) = |[i,j] \ J([i,j])|` on honest intervals, and the
/// boxes whose condition is not implied by a neighbour's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankData {
    n: usize,
    k: usize,
    table: Vec<Vec<usize>>,
    pub essential: BTreeSet<(usize, usize)>,
}

impl RankData {
    /// `r(i, j)` for `1 <= i <= j <= n`.
    pub fn r(&self, i: usize, j: usize) -> usize {
        self.table[i - 1][j - 1]
    }

    fn trivial(&self, i: usize, j: usize) -> bool {
        self.r(i, j) >= (j + 1 - i).min(self.k)
    }

    /// The bound on `[i, j]` implied by the essential conditions alone, together
    /// with the size and ball-number bounds.
    pub fn implied(&self, i: usize, j: usize) -> usize {
        let len = j + 1 - i;
        self.essential
            .iter()
            .map(|&(ei, ej)| {
                let overlap = (j.min(ej) + 1).saturating_sub(i.max(ei));
                self.r(ei, ej) + len - overlap
            })
            .fold(len.min(self.k), usize::min)
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

pub fn rank_and_essential(j: &JugglingPattern) -> RankData {
    let n = j.n;
    let mut table = vec![vec![0; n]; n];
    for i in 1..=n {
        for jj in i..=n {
            let inside = (i..=jj).filter(|&p| j.window[p - 1] <= jj as i64).count();
            table[i - 1][jj - 1] = jj + 1 - i - inside;
        }
    }
    let mut data = RankData {
        n,
        k: j.ball_number(),
        table,
        essential: BTreeSet::new(),
    };
    for i in 1..=n {
        for jj in i..=n {
            if data.trivial(i, jj) {
                continue;
            }
            let r = data.r(i, jj);
            // A larger interval with no larger bound, or a smaller one whose bound leaves no room.
            let bigger = (i > 1 && data.r(i - 1, jj) <= r) || (jj < n && data.r(i, jj + 1) <= r);
            let smaller = i < jj && (data.r(i + 1, jj) < r || data.r(i, jj - 1) < r);
            if !(bigger || smaller) {
                data.essential.insert((i, jj));
            }
        }
    }
    data
}

/// West dots below row `i` fill rows `i+1, i+2, ...` and run NW/SE.
pub fn is_sorted(j: &JugglingPattern, i: usize) -> bool {
    let below: Vec<(usize, usize)> = j.west_dots().into_iter().filter(|&(r, _)| r > i).collect();
    below.iter().enumerate().all(|(t, &(r, _))| r == i + 1 + t) && runs_nw_se(&below)
}

/// The Schubert pattern of a bit string: the `r`-th West dot in row `r`, under the `r`-th `0`.
pub fn schubert_pattern(bits: &BitString) -> JugglingPattern {
    let zeros: Vec<usize> = bits
        .bits()
        .iter()
        .enumerate()
        .filter(|(_, b)| !**b)
        .map(|(c, _)| c + 1)
        .collect();
    let west: Vec<(usize, usize)> = zeros
        .into_iter()
        .enumerate()
        .map(|(r, c)| (r + 1, c))
        .collect();
    JugglingPattern::from_west(bits.len(), &west).expect("flush-north dots always complete")
}

/// Labels on a cut below row `i` of the West triangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slice {
    pub n: usize,
    pub i: usize,
    /// Under row `i`, columns `max(i,1)..=n`, west to east.
    pub south: Vec<Letter>,
    /// East of rows `1..=i`, top to bottom.
    pub east: Vec<Letter>,
    /// Under the diagonal squares `(r, r)` for `r` in `1..i`.
    pub diag: Vec<Letter>,
}

impl Slice {
    pub fn new(
        n: usize,
        i: usize,
        south: Vec<Letter>,
        east: Vec<Letter>,
        diag: Vec<Letter>,
    ) -> Result<Slice> {
        if i > n
            || south.len() != n + 1 - i.max(1)
            || east.len() != i
            || diag.len() != i.saturating_sub(1)
        {
            return Err(Error::InvalidLabel(format!(
                "wrong edge counts for a {i}-slice of period {n}"
            )));
        }
        Ok(Slice {
            n,
            i,
            south,
            east,
            diag,
        })
    }

    /// The 0-slice of a bit string.
    pub fn zero(bits: &BitString) -> Slice {
        let south = bits
            .bits()
            .iter()
            .map(|&b| if b { Letter::One } else { Letter::Zero })
            .collect();
        Slice {
            n: bits.len(),
            i: 0,
            south,
            east: Vec::new(),
            diag: Vec::new(),
        }
    }

    /// Horizontal edges as `(column, label)`, diagonal ones first.
    fn horizontal(&self) -> Vec<(usize, Letter)> {
        let lo = self.i.max(1);
        self.diag
            .iter()
            .enumerate()
            .map(|(r, &l)| (r + 1, l))
            .chain(self.south.iter().enumerate().map(|(k, &l)| (lo + k, l)))
            .collect()
    }

    /// The partial permutation of the slice: top-half dots with their kind, then
    /// the dots placed under South zeros.
    pub fn dots(&self) -> Result<Vec<(usize, usize, Letter)>> {
        let horiz = self.horizontal();
        let mut dots = Vec::new();
        for letter in [Letter::R, Letter::Q, Letter::One] {
            let mut cols: Vec<usize> = horiz
                .iter()
                .filter(|(_, l)| *l == letter)
                .map(|(c, _)| *c)
                .collect();
            let rows: Vec<usize> = (1..=self.i)
                .filter(|&r| self.east[r - 1] == letter)
                .collect();
            if letter == Letter::One && cols.len() > rows.len() {
                cols.drain(..cols.len() - rows.len());
            }
            if cols.len() != rows.len() {
                return Err(Error::NonViableSlice(format!(
                    "{} vertical and {} horizontal {letter} rays",
                    cols.len(),
                    rows.len()
                )));
            }
            // Rays from under a diagonal square reach only up to that square's row.
            if rows.iter().zip(&cols).any(|(r, c)| c < r) {
                return Err(Error::NonViableSlice(format!(
                    "{letter} rays meet below the diagonal"
                )));
            }
            dots.extend(rows.into_iter().zip(cols).map(|(r, c)| (r, c, letter)));
        }
        let lo = self.i.max(1);
        let zero_cols = self
            .south
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == Letter::Zero)
            .map(|(k, _)| lo + k);
        for (t, c) in zero_cols.enumerate() {
            let r = self.i + 1 + t;
            if c < r {
                return Err(Error::NonViableSlice("0 under the corner square".into()));
            }
            dots.push((r, c, Letter::Zero));
        }
        dots.sort();
        Ok(dots)
    }
}

pub fn slice_to_pattern(s: &Slice) -> Result<JugglingPattern> {
    let west: Vec<(usize, usize)> = s.dots()?.into_iter().map(|(r, c, _)| (r, c)).collect();
    JugglingPattern::from_west(s.n, &west)
}

/// Every viable `i`-slice whose pattern is `j`, by trying each labelling
/// compatible with `j`'s West dots.
pub fn pattern_to_slice(j: &JugglingPattern, i: usize) -> Vec<Slice> {
    let n = j.n;
    if i > n || !is_sorted(j, i) {
        return Vec::new();
    }
    let west = j.west_dots();
    let top: Vec<(usize, usize)> = west.iter().copied().filter(|&(r, _)| r <= i).collect();
    let below: BTreeSet<usize> = west
        .iter()
        .filter(|&&(r, _)| r > i)
        .map(|&(_, c)| c)
        .collect();
    let col_of_dot = |c: usize| top.iter().position(|&(_, cc)| cc == c);
    // Horizontal edges without a top dot: 0 if a dot sits below, otherwise 0 (diagonal only) or 1.
    let lo = i.max(1);
    let free: Vec<usize> = (1..i)
        .chain(lo..=n)
        .filter(|&c| col_of_dot(c).is_none() && !below.contains(&c))
        .collect();
    let kinds = [Letter::R, Letter::Q, Letter::One];
    let mut out = Vec::new();
    for assign in 0..3usize.pow(top.len() as u32) {
        let kind = |t: usize| kinds[assign / 3usize.pow(t as u32) % 3];
        for mask in 0..1u32 << free.len() {
            let horiz = |c: usize, diagonal: bool| -> Option<Letter> {
                if let Some(t) = col_of_dot(c) {
                    return Some(kind(t));
                }
                if below.contains(&c) {
                    return Some(Letter::Zero);
                }
                let k = free.iter().position(|&f| f == c).expect("free column");
                match (mask >> k & 1 == 1, diagonal) {
                    (true, _) => Some(Letter::One),
                    (false, true) => Some(Letter::Zero),
                    (false, false) => None,
                }
            };
            let south: Option<Vec<Letter>> = (lo..=n).map(|c| horiz(c, false)).collect();
            let diag: Option<Vec<Letter>> = (1..i).map(|c| horiz(c, true)).collect();
            let (Some(south), Some(diag)) = (south, diag) else {
                continue;
            };
            let east = (1..=i)
                .map(|r| {
                    top.iter()
                        .position(|&(rr, _)| rr == r)
                        .map_or(Letter::Zero, kind)
                })
                .collect();
            let s = Slice {
                n,
                i,
                south,
                east,
                diag,
            };
            if slice_to_pattern(&s).as_ref() == Ok(j) && !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

/// Reading a Schubert pattern's window back through the flip `i -> c - i`
/// gives the pattern of the column-reversed matrix.
fn reversed(j: &JugglingPattern) -> JugglingPattern {
    let c = j.n as i64 + 1;
    let window = (1..=j.n as i64).map(|i| c - j.inverse(c - i)).collect();
    JugglingPattern { n: j.n, window }
}

/// Block sum: each block keeps its own dots, wrapping dots skip over the other block.
fn direct_sum(x: &JugglingPattern, y: &JugglingPattern) -> JugglingPattern {
    let (n1, n2) = (x.n as i64, y.n as i64);
    let first = x.window.iter().map(|&v| if v <= n1 { v } else { v + n2 });
    let second = y
        .window
        .iter()
        .map(|&v| if v <= n2 { v + n1 } else { v + 2 * n1 });
    JugglingPattern {
        n: x.n + y.n,
        window: first.chain(second).collect(),
    }
}

/// The Richardson pattern whose West half is the flipped Schubert pattern of
/// `lambda` followed by the Schubert pattern of `mu`.
pub fn sigma_prime(lambda: &BoxedPartition, mu: &BoxedPartition) -> JugglingPattern {
    direct_sum(
        &reversed(&schubert_pattern(&lambda.bits())),
        &schubert_pattern(&mu.bits()),
    )
}

/// `σ′` rotated back by `a`, the starting positroid pattern.
pub fn sigma(lambda: &BoxedPartition, mu: &BoxedPartition) -> JugglingPattern {
    rotate(&sigma_prime(lambda, mu), -(lambda.rows() as i64))
}

/// The `(a+b)`-slice read off a region's lower boundary: the corner and
/// staircase edges carry `R`, the south edges carry `μ`, and the East edges
/// carry `λ`'s letters (upper ones with `Q` read as `0`).
pub fn region_slice(region: &Region) -> Slice {
    let (a, b, _, _) = region.dims();
    let i = a + b;
    let corner = (i > 0).then_some(if b > 0 { Letter::R } else { Letter::One });
    let south = corner
        .into_iter()
        .chain(region.south_labels().iter().copied())
        .collect();
    let upper =
        region
            .upper_west_labels()
            .iter()
            .rev()
            .map(|&l| if l == Letter::Q { Letter::Zero } else { l });
    let lower = region.lower_east_labels().iter().rev().copied();
    let east = upper.chain(lower).collect();
    let diag = (1..i)
        .map(|r| if r > a { Letter::R } else { Letter::Zero })
        .collect();
    Slice {
        n: region.width(),
        i,
        south,
        east,
        diag,
    }
}
