//! The `dsring` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coeffs::{IntPoly, LaurentPoly};
use crate::enumerate::{dream_weight, enumerate_dreams, expand, render_dream, Mode, PipeDream};
use crate::error::{Error, Result};
use crate::juggling::{self, JugglingPattern};
use crate::oracle;
use crate::partitions::{parse_parts, BitString, BoxedPartition};
use crate::region::build_region;
use crate::ring::Element;
use crate::tiles::{self, Catalog, CatalogCounts, Half, Tile};

#[derive(Parser, Debug)]
#[command(
    name = "dsring",
    version,
    about = "Products of Schubert classes under direct sum, by DS pipe dreams"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand [λ]·[μ] in Schubert classes.
    Multiply {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
    },
    /// List the pipe dreams of a pair with their weights.
    Dreams {
        #[command(flatten)]
        pair: Pair,
        /// Draw every dream tile by tile.
        #[arg(long)]
        render: bool,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
    },
    /// Draw the empty region with its boundary labels.
    Render {
        #[command(flatten)]
        pair: Pair,
    },
    /// Littlewood-Richardson numbers from tableaux.
    Lr {
        #[arg(long, default_value = "")]
        lambda: String,
        #[arg(long, default_value = "")]
        mu: String,
        /// Print one coefficient instead of the whole product.
        #[arg(long)]
        nu: Option<String>,
        #[arg(long, value_enum, default_value_t = Out::Text)]
        out: Out,
    },
    /// The tile catalog of one half.
    Tiles {
        #[arg(long, value_enum, default_value_t = HalfArg::Lower)]
        half: HalfArg,
        #[arg(long, value_enum, default_value_t = CatalogArg::K)]
        mode: CatalogArg,
    },
    /// Inspect a bounded juggling pattern.
    Pattern(PatternArgs),
    /// Run the built-in golden and property checks.
    Selftest,
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long, value_enum, default_value_t = Ring::H)]
    ring: Ring,
    /// Rows of λ's box.
    #[arg(long, default_value_t = 0)]
    a: usize,
    /// Columns of λ's box.
    #[arg(long, default_value_t = 0)]
    b: usize,
    /// Rows of μ's box.
    #[arg(long, default_value_t = 0)]
    c: usize,
    /// Columns of μ's box.
    #[arg(long, default_value_t = 0)]
    d: usize,
    /// Parts of λ, comma separated; empty for the empty partition.
    #[arg(long, default_value = "")]
    lambda: String,
    #[arg(long, default_value = "")]
    mu: String,
}

impl Pair {
    fn partitions(&self) -> Result<(BoxedPartition, BoxedPartition)> {
        let flag = |name: &str, e: Error| match e {
            Error::InvalidPartition(m) => Error::InvalidPartition(format!("{name}: {m}")),
            e => e,
        };
        let lambda =
            BoxedPartition::parse(&self.lambda, self.a, self.b).map_err(|e| flag("--lambda", e))?;
        let mu = BoxedPartition::parse(&self.mu, self.c, self.d).map_err(|e| flag("--mu", e))?;
        Ok((lambda, mu))
    }

    fn mode(&self) -> Mode {
        match self.ring {
            Ring::H => Mode::H,
            Ring::Hs => Mode::HS,
            Ring::Ks => Mode::KS,
        }
    }
}

#[derive(Args, Debug)]
struct PatternArgs {
    /// Window J(1),...,J(n), comma separated.
    #[arg(long, conflicts_with_all = ["bits", "sigma_prime"])]
    window: Option<String>,
    /// The Schubert pattern of a bit string.
    #[arg(long, conflicts_with = "sigma_prime")]
    bits: Option<String>,
    /// The pattern σ′ of the pair given by --a/--b/--c/--d/--lambda/--mu.
    #[arg(long)]
    sigma_prime: bool,
    #[command(flatten)]
    pair: Pair,
    /// Rotate by this amount first.
    #[arg(long, allow_negative_numbers = true)]
    rotate: Option<i64>,
    /// Then take the dual.
    #[arg(long)]
    dual: bool,
    #[arg(long, value_enum, default_value_t = Out::Text)]
    out: Out,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Ring {
    H,
    Hs,
    Ks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Out {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HalfArg {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CatalogArg {
    H,
    K,
}

/// Runs the command line and returns the exit status: 0 on success, 1 for bad
/// input, 2 when an internal invariant breaks.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            // A closed pipe (`dsring dreams | head`) is not worth a complaint.
            if e == Error::Output(BROKEN_PIPE.into()) {
                return 0;
            }
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Invariant(_) => 2,
                _ => 1,
            }
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}

const BROKEN_PIPE: &str = "broken pipe";

fn io(e: std::io::Error) -> Error {
    match e.kind() {
        std::io::ErrorKind::BrokenPipe => Error::Output(BROKEN_PIPE.into()),
        _ => Error::Output(e.to_string()),
    }
}

fn partition_flag(name: &str, s: &str) -> Result<Vec<usize>> {
    let parts = parse_parts(s).map_err(|e| match e {
        Error::InvalidPartition(m) => Error::InvalidPartition(format!("{name}: {m}")),
        e => e,
    })?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidPartition(format!(
            "{name}: {s:?} is not weakly decreasing"
        )));
    }
    Ok(parts)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Multiply { pair, out: format } => {
            let (lambda, mu) = pair.partitions()?;
            let mode = pair.mode();
            let product =
                Element::schubert(&lambda, mode).multiply(&Element::schubert(&mu, mode))?;
            let text = match format {
                Out::Text => product.to_string(),
                Out::Json => product.to_json().to_string(),
                Out::Latex => product.to_latex(),
            };
            writeln!(out, "{text}").map_err(io)?;
        }
        Command::Dreams {
            pair,
            render,
            out: format,
        } => {
            let (lambda, mu) = pair.partitions()?;
            let mode = pair.mode();
            let dreams = enumerate_dreams(&build_region(&lambda, &mu), mode)?;
            match format {
                Out::Text => {
                    writeln!(out, "{} dreams for {lambda} x {mu} in {mode}", dreams.len())
                        .map_err(io)?;
                    for (i, p) in dreams.iter().enumerate() {
                        let s = p.stats();
                        writeln!(
                            out,
                            "#{}: nu = {}  weight = {}  fusing = {}  equivariant = {}",
                            i + 1,
                            p.nu(),
                            weight_text(p, mode)?,
                            s.fusing,
                            s.equivariant
                        )
                        .map_err(io)?;
                        if render {
                            write!(out, "{}", render_dream(p)).map_err(io)?;
                        }
                    }
                }
                Out::Json => {
                    let list = dreams
                        .iter()
                        .map(|p| {
                            let mut v = p.to_json();
                            v["weight"] = json!(weight_text(p, mode)?);
                            Ok(v)
                        })
                        .collect::<Result<Vec<Value>>>()?;
                    let v = json!({"ring": mode.name(), "lambda": lambda.to_json(), "mu": mu.to_json(), "dreams": list});
                    writeln!(out, "{v}").map_err(io)?;
                }
                Out::Latex => {
                    return Err(Error::Parse(
                        "--out latex is only available for multiply".into(),
                    ))
                }
            }
        }
        Command::Render { pair } => {
            let (lambda, mu) = pair.partitions()?;
            write!(out, "{}", build_region(&lambda, &mu).render()).map_err(io)?;
        }
        Command::Lr {
            lambda,
            mu,
            nu,
            out: format,
        } => {
            let lambda = partition_flag("--lambda", &lambda)?;
            let mu = partition_flag("--mu", &mu)?;
            let show = |p: &[usize]| p.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            match nu {
                Some(nu) => {
                    let nu = partition_flag("--nu", &nu)?;
                    let c = oracle::lr_coefficient(&lambda, &mu, &nu);
                    match format {
                        Out::Json => writeln!(
                            out,
                            "{}",
                            json!({"lambda": lambda, "mu": mu, "nu": nu, "coefficient": c})
                        ),
                        _ => writeln!(out, "{c}"),
                    }
                    .map_err(io)?;
                }
                None => {
                    let terms = oracle::lr_expansion(&lambda, &mu);
                    let text = match format {
                        Out::Json => {
                            let list: Vec<Value> = terms
                                .iter()
                                .map(|(nu, c)| json!({"nu": nu, "coefficient": c}))
                                .collect();
                            json!({"lambda": lambda, "mu": mu, "terms": list}).to_string()
                        }
                        Out::Text | Out::Latex => {
                            let latex = format == Out::Latex;
                            let parts: Vec<String> = terms
                                .iter()
                                .rev()
                                .map(|(nu, &c)| {
                                    let coef = if c == 1 { String::new() } else { c.to_string() };
                                    if latex {
                                        format!("{coef}s_{{({})}}", show(nu))
                                    } else {
                                        format!("{coef}s({})", show(nu))
                                    }
                                })
                                .collect();
                            if parts.is_empty() {
                                "0".into()
                            } else {
                                parts.join(" + ")
                            }
                        }
                    };
                    writeln!(out, "{text}").map_err(io)?;
                }
            }
        }
        Command::Tiles { half, mode } => {
            let half = match half {
                HalfArg::Lower => Half::Lower,
                HalfArg::Upper => Half::Upper,
            };
            let catalog = match mode {
                CatalogArg::H => Catalog::H,
                CatalogArg::K => Catalog::K,
            };
            write!(out, "{}", tiles_report(half, catalog)).map_err(io)?;
        }
        Command::Pattern(args) => pattern(args, out)?,
        Command::Selftest => {
            let (passed, failed) = selftest(out)?;
            writeln!(out, "{passed} passed, {failed} failed").map_err(io)?;
            return Ok(if failed == 0 { 0 } else { 2 });
        }
    }
    Ok(0)
}

fn weight_text(p: &PipeDream, mode: Mode) -> Result<String> {
    Ok(match mode {
        Mode::H => dream_weight::<BigInt>(p)?.to_string(),
        Mode::HS => dream_weight::<IntPoly>(p)?.to_string(),
        Mode::KS => dream_weight::<LaurentPoly>(p)?.to_string(),
    })
}

fn breakdown(c: &CatalogCounts) -> String {
    format!(
        "{} crossings, {} dots, {} fusors, {} displacers",
        c.crossings, c.dots, c.fusors, c.displacers
    )
}

/// Catalog listing with per-kind counts, nominal and admissible.
pub fn tiles_report(half: Half, mode: Catalog) -> String {
    let all = tiles::catalog(half, mode);
    let admissible: Vec<Tile> = all.iter().copied().filter(Tile::is_admissible).collect();
    let mut s = String::new();
    for t in &all {
        let mark = if t.is_admissible() { ' ' } else { 'x' };
        s.push_str(&format!(
            "{mark} {}  W={} E={} N={} S={}\n",
            t.code(),
            t.west,
            t.east,
            t.north,
            t.south
        ));
    }
    let (nominal, used) = (CatalogCounts::of(&all), CatalogCounts::of(&admissible));
    s.push_str(&format!(
        "{half:?} {mode:?} catalog: {} tiles ({})\n",
        nominal.total(),
        breakdown(&nominal)
    ));
    if half == Half::Lower && mode == Catalog::K && nominal.total() != 53 {
        s.push_str(&format!(
            "expected 53 lower K-tiles, found {}\n",
            nominal.total()
        ));
    }
    s.push_str(&format!(
        "admissible: {} tiles ({}); inadmissible tiles are marked x\n",
        used.total(),
        breakdown(&used)
    ));
    s
}

fn pattern(args: PatternArgs, out: &mut dyn Write) -> Result<()> {
    let mut j = if let Some(w) = &args.window {
        let window = w
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("--window: bad entry {v:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        juggling::pattern_from_window(&window)?
    } else if let Some(b) = &args.bits {
        juggling::schubert_pattern(
            &b.parse::<BitString>()
                .map_err(|e| Error::Parse(format!("--bits: {e}")))?,
        )
    } else if args.sigma_prime {
        let (lambda, mu) = args.pair.partitions()?;
        juggling::sigma_prime(&lambda, &mu)
    } else {
        return Err(Error::Parse(
            "pattern needs one of --window, --bits or --sigma-prime".into(),
        ));
    };
    if let Some(m) = args.rotate {
        j = juggling::rotate(&j, m);
    }
    if args.dual {
        j = juggling::dual(&j);
    }
    let sorted: Vec<usize> = (0..=j.n())
        .filter(|&i| juggling::is_sorted(&j, i))
        .collect();
    let essential: Vec<(usize, usize)> = juggling::rank_and_essential(&j)
        .essential
        .into_iter()
        .collect();
    match args.out {
        Out::Json => {
            let v = json!({
                "n": j.n(),
                "window": j.window(),
                "ball_number": j.ball_number(),
                "interval": j.is_interval(),
                "sorted_levels": sorted,
                "essential": essential,
            });
            writeln!(out, "{v}").map_err(io)?;
        }
        _ => {
            let mut s = format!(
                "window {j}  n = {}  ball number {}\n",
                j.n(),
                j.ball_number()
            );
            s.push_str(&format!("East triangle NW/SE: {}\n", j.is_interval()));
            s.push_str(&format!("i-sorted for i in {sorted:?}\n"));
            s.push_str(&format!("essential boxes {essential:?}\n"));
            s.push_str(&j.render());
            write!(out, "{s}").map_err(io)?;
        }
    }
    Ok(())
}

fn bp(parts: &str, rows: usize, cols: usize) -> BoxedPartition {
    BoxedPartition::parse(parts, rows, cols).expect("built-in partition")
}

fn small_pairs(max: usize) -> Vec<(BoxedPartition, BoxedPartition)> {
    let boxes: Vec<(usize, usize)> = (0..=max)
        .flat_map(|a| (0..=max).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for &(a, b) in &boxes {
        for &(c, d) in &boxes {
            for l in BoxedPartition::all_in_box(a, b) {
                for m in BoxedPartition::all_in_box(c, d) {
                    out.push((l.clone(), m));
                }
            }
        }
    }
    out
}

type Check = (&'static str, fn() -> Result<bool>);

fn selftest(out: &mut dyn Write) -> Result<(usize, usize)> {
    let checks: [Check; 9] = [
        ("H product of (1,1) and (1)", || {
            let e = expand::<BigInt>(&bp("1,1", 2, 2), &bp("1", 2, 1))?;
            Ok(e.to_string() == "[X^(1,1,1,0)] + [X^(2,1,0,0)]")
        }),
        ("HS product of (1,1) and (1)", || {
            let e = expand::<IntPoly>(&bp("1,1", 2, 2), &bp("1", 2, 1))?;
            Ok(e.to_string() == "[X^(1,1,1,0)] + [X^(2,1,0,0)] + t[X^(2,1,1,0)] + t[X^(2,2,0,0)] + t^2[X^(2,2,1,0)]")
        }),
        ("KS product of (1,1) and (1)", || {
            let e = expand::<LaurentPoly>(&bp("1,1", 2, 2), &bp("1", 2, 1))?;
            Ok(e.product.len() == 6 && e.product.coeff(&bp("1,1", 4, 3)) == -LaurentPoly::q())
        }),
        ("H products match Littlewood-Richardson numbers", || {
            for (l, m) in small_pairs(1) {
                let e = expand::<BigInt>(&l, &m)?;
                for nu in BoxedPartition::all_in_box(l.rows() + m.rows(), l.cols() + m.cols()) {
                    let c = oracle::lr_coefficient(l.parts(), m.parts(), nu.parts());
                    if e.coeff(&nu) != BigInt::from(c) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        ("products commute", || {
            for (l, m) in small_pairs(1) {
                if expand::<LaurentPoly>(&l, &m)?.product != expand::<LaurentPoly>(&m, &l)?.product
                {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        ("tableau and polynomial oracles agree", || {
            let small: Vec<Vec<usize>> = (0..=3)
                .flat_map(|n| oracle::partitions_of(n, 3, n))
                .collect();
            for l in &small {
                for m in &small {
                    let brute = oracle::schur_product_bruteforce(l, m, l.len() + m.len())?;
                    let tab = oracle::lr_expansion(l, m);
                    if brute.len() != tab.len()
                        || tab
                            .iter()
                            .any(|(nu, &c)| brute.get(nu) != Some(&(c as i64)))
                    {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        ("duality is an involution", || {
            Ok((0..=4).flat_map(JugglingPattern::all).all(|j| {
                let k = juggling::dual(&j);
                juggling::dual(&k) == j && k.ball_number() + j.ball_number() == j.n()
            }))
        }),
        ("region boundaries are slices of σ′", || {
            for (l, m) in small_pairs(1) {
                let s = juggling::sigma_prime(&l, &m);
                let slice = juggling::region_slice(&build_region(&l, &m));
                if juggling::slice_to_pattern(&slice)? != s
                    || !juggling::is_sorted(&s, l.rows() + l.cols())
                {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        ("53 lower K-tiles", || {
            Ok(tiles::catalog(Half::Lower, Catalog::K).len() == 53)
        }),
    ];
    let (mut passed, mut failed) = (0, 0);
    for (name, check) in checks {
        let ok = check()?;
        if ok {
            passed += 1;
        } else {
            failed += 1;
        }
        writeln!(out, "{} {name}", if ok { "ok  " } else { "FAIL" }).map_err(io)?;
    }
    Ok((passed, failed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("dsring").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn lr_single() {
        assert_eq!(
            call(&["lr", "--lambda", "1,1", "--mu", "1", "--nu", "2,1"]),
            (0, "1\n".into(), String::new())
        );
        let (_, out, _) = call(&["lr", "--lambda", "1", "--mu", "1"]);
        assert_eq!(out, "s(2) + s(1,1)\n");
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["multiply", "--a", "1", "--b", "1", "--lambda", "2"]);
        assert_eq!(code, 1);
        assert!(err.contains("--lambda"), "{err}");
        assert_eq!(call(&["multiply", "--ring", "x"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["pattern", "--window", "1,1,3,4"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn multiply_formats() {
        let base = [
            "multiply", "--a", "2", "--b", "2", "--lambda", "1,1", "--c", "2", "--d", "1", "--mu",
            "1",
        ];
        let (code, out, _) = call(&base);
        assert_eq!(code, 0);
        assert_eq!(out, "[X^(1,1,1,0)] + [X^(2,1,0,0)]\n");
        let json: Value =
            serde_json::from_str(&call(&[&base[..], &["--out", "json"]].concat()).1).unwrap();
        assert_eq!(json["ring"], "H");
        let latex = call(&[&base[..], &["--ring", "ks", "--out", "latex"]].concat()).1;
        assert!(latex.contains("\\exp"), "{latex}");
    }

    #[test]
    fn dreams_and_render() {
        let base = [
            "dreams", "--a", "2", "--b", "2", "--lambda", "1,1", "--c", "2", "--d", "1", "--mu",
            "1", "--render",
        ];
        let (code, out, _) = call(&base);
        assert_eq!(code, 0);
        assert!(out.starts_with("2 dreams"), "{out}");
        assert_eq!(out.matches("dream for").count(), 2);
        let (code, out, _) = call(&["render", "--a", "1", "--b", "1", "--c", "1", "--d", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("region for"));
    }

    #[test]
    fn tiles_and_patterns() {
        let (code, out, _) = call(&["tiles"]);
        assert_eq!(code, 0);
        assert!(
            out.contains("catalog: 53 tiles (34 crossings, 4 dots, 9 fusors, 6 displacers)"),
            "{out}"
        );
        let (code, out, _) = call(&[
            "pattern", "--window", "1,2,7,8", "--rotate", "-1", "--out", "json",
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["ball_number"], 2);
        let (code, out, _) = call(&["pattern", "--bits", "0011", "--dual"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("window [5,6,3,4]"), "{out}");
    }
}
