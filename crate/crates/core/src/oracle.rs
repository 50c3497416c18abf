//! Littlewood-Richardson numbers, computed two independent ways.
//!
//! Partitions are plain slices of parts; trailing zeros are ignored.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

fn trim(p: &[usize]) -> Vec<usize> {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn is_partition(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1])
}

fn part(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

/// Number of LR tableaux of shape `nu / lambda` and content `mu`. Zero whenever
/// the shape does not make sense.
pub fn lr_coefficient(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let (lambda, mu, nu) = (trim(lambda), trim(mu), trim(nu));
    if !(is_partition(&lambda) && is_partition(&mu) && is_partition(&nu)) {
        return 0;
    }
    let size = |p: &[usize]| p.iter().sum::<usize>();
    if size(&nu) != size(&lambda) + size(&mu) || lambda.len() > nu.len() {
        return 0;
    }
    if (0..lambda.len()).any(|i| lambda[i] > nu[i]) {
        return 0;
    }
    // Cells in reverse reading order: rows top to bottom, each right to left.
    let cells: Vec<(usize, usize)> = (0..nu.len())
        .flat_map(|r| (part(&lambda, r)..nu[r]).rev().map(move |c| (r, c)))
        .collect();
    let mut fill = vec![vec![0usize; nu.first().copied().unwrap_or(0)]; nu.len()];
    let mut used = vec![0usize; mu.len() + 1];
    let mut count = 0;
    lr_fill(&cells, 0, &lambda, &mu, &mut fill, &mut used, &mut count);
    count
}

fn lr_fill(
    cells: &[(usize, usize)],
    k: usize,
    lambda: &[usize],
    mu: &[usize],
    fill: &mut [Vec<usize>],
    used: &mut [usize],
    count: &mut u64,
) {
    let Some(&(r, c)) = cells.get(k) else {
        *count += 1;
        return;
    };
    let row_len = fill[r].len();
    // Weakly increasing rows: bounded by the entry to the right, if it is in the skew shape.
    let max = if c + 1 < row_len && fill[r][c + 1] > 0 {
        fill[r][c + 1]
    } else {
        mu.len()
    };
    // Strictly increasing columns: above the cell is either lambda or an entry.
    let min = if r > 0 && c >= part(lambda, r - 1) {
        fill[r - 1][c] + 1
    } else {
        1
    };
    for v in min..=max {
        if used[v] == mu[v - 1] || (v > 1 && used[v] == used[v - 1]) {
            continue;
        }
        fill[r][c] = v;
        used[v] += 1;
        lr_fill(cells, k + 1, lambda, mu, fill, used, count);
        used[v] -= 1;
        fill[r][c] = 0;
    }
}

/// All `nu` with a nonzero coefficient in `s_lambda * s_mu`.
pub fn lr_expansion(lambda: &[usize], mu: &[usize]) -> BTreeMap<Vec<usize>, u64> {
    let (lambda, mu) = (trim(lambda), trim(mu));
    let n = lambda.iter().sum::<usize>() + mu.iter().sum::<usize>();
    let rows = lambda.len() + mu.len();
    let width = part(&lambda, 0) + part(&mu, 0);
    partitions_of(n, rows, width)
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(&lambda, &mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// Partitions of `n` with at most `rows` parts, each at most `width`.
pub fn partitions_of(n: usize, rows: usize, width: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if rows == 0 {
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            go(n - p, rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, rows, width, &mut Vec::new(), &mut out);
    out
}

type Poly = BTreeMap<Vec<usize>, i64>;

/// The Schur polynomial in `nvars` variables, as a map from exponent vectors to
/// coefficients, by enumerating semistandard tableaux.
fn schur_poly(shape: &[usize], nvars: usize) -> Poly {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
        .collect();
    let mut fill = vec![vec![0usize; part(shape, 0)]; shape.len()];
    let mut out = Poly::new();
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        nvars: usize,
        fill: &mut [Vec<usize>],
        out: &mut Poly,
    ) {
        let Some(&(r, c)) = cells.get(k) else {
            let mut exp = vec![0; nvars];
            for row in fill.iter() {
                for &v in row.iter().filter(|&&v| v > 0) {
                    exp[v - 1] += 1;
                }
            }
            *out.entry(exp).or_insert(0) += 1;
            return;
        };
        let lo = [
            c.checked_sub(1).map(|cc| fill[r][cc]),
            r.checked_sub(1).map(|rr| fill[rr][c] + 1),
        ]
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(1)
        .max(1);
        for v in lo..=nvars {
            fill[r][c] = v;
            go(cells, k + 1, nvars, fill, out);
        }
        fill[r][c] = 0;
    }
    go(&cells, 0, nvars, &mut fill, &mut out);
    out
}

fn poly_mul(x: &Poly, y: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ex, cx) in x {
        for (ey, cy) in y {
            let e: Vec<usize> = ex.iter().zip(ey).map(|(a, b)| a + b).collect();
            *out.entry(e).or_insert(0) += cx * cy;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `s_lambda * s_mu` expanded in Schur functions by brute-force polynomial
/// multiplication in `nvars` variables. Needs `nvars >= len(lambda) + len(mu)`
/// so that no term is lost.
pub fn schur_product_bruteforce(
    lambda: &[usize],
    mu: &[usize],
    nvars: usize,
) -> Result<BTreeMap<Vec<usize>, i64>> {
    let (lambda, mu) = (trim(lambda), trim(mu));
    if !is_partition(&lambda) || !is_partition(&mu) {
        return Err(Error::InvalidPartition(format!(
            "{lambda:?} or {mu:?} is not a partition"
        )));
    }
    if nvars < lambda.len() + mu.len() {
        return Err(Error::TooFewVariables(format!(
            "{nvars} variables cannot hold every term of s{lambda:?} * s{mu:?}"
        )));
    }
    let mut rest = poly_mul(&schur_poly(&lambda, nvars), &schur_poly(&mu, nvars));
    let mut out = BTreeMap::new();
    // The lex-largest monomial of a symmetric polynomial is the leading term of a Schur function.
    while let Some((lead, &c)) = rest.iter().next_back() {
        let nu = trim(lead);
        let s = schur_poly(&nu, nvars);
        for (e, v) in s {
            *rest.entry(e).or_insert(0) -= c * v;
        }
        rest.retain(|_, v| *v != 0);
        out.insert(nu, c);
    }
    Ok(out)
}
