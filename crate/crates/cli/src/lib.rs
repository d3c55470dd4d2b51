//! The `dcells` command line: conversions, enumeration, orbits, cells and
//! verification sweeps. Reports are JSON lines by default; `--format ascii`
//! prints the same records as text.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::json;

use domino_cells::cells_kl::{
    cell_intersection, equivariance_sweep, r_sigma, verify_theorem2, verify_theorem2_all, worked_example, CellPartition,
    KLTable, KL_RANK_CAP, KL_RANK_CAP_LONG,
};
use domino_cells::cycles::{cycle_report, Coloring};
use domino_cells::operators::{admissible_lefts, orbit_closure, theorem1_operators, verify_theorem1, verify_theorem1_shape, OperatorId};
use domino_cells::repr::{
    classes, columns_orthogonal, dimension_squares_sum, irreducibles, is_very_even, rows_orthonormal, shape_to_rep,
    CharacterTable,
};
use domino_cells::tableaux::{domino_rs, enumerate_tableaux, inverse_rs, DominoTableau, Shape, TableauPair};
use domino_cells::weyl_d::SignedElement;

/// Largest tableau total enumerated without `--allow-long`.
pub const TABLEAU_TOTAL_CAP: usize = 16;
/// Largest rank for orbit sweeps without `--allow-long`.
pub const ORBIT_RANK_CAP: usize = 5;
/// Largest rank for orbit sweeps with `--allow-long`.
pub const ORBIT_RANK_CAP_LONG: usize = 9;
/// Largest rank for full character table checks.
pub const FULL_CHARACTER_CAP: usize = 5;

#[derive(Parser, Debug)]
#[command(name = "dcells", version, about = "Domino tableaux and Kazhdan-Lusztig cells in type D")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Permit long runs (D_5 KL tables, large orbit sweeps).
    #[arg(long, global = true)]
    pub allow_long: bool,
    /// Directory for cached KL tables.
    #[arg(long, global = true, env = "DCELLS_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Ascii,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ColoringArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tableau pair of an element.
    Rs {
        #[arg(long)]
        rank: Option<usize>,
        /// Signed one-line notation, e.g. "[-2,-1,3]".
        #[arg(long)]
        element: String,
    },
    /// Element of a tableau pair given as {"left": .., "right": ..}.
    Unrs {
        #[arg(long)]
        pair: String,
    },
    /// Standard domino tableaux of a shape.
    Tableaux {
        #[arg(long)]
        shape: String,
    },
    /// Cycles of a tableau, or of the left tableau of an element.
    Cycles {
        #[arg(long, conflicts_with = "element")]
        tableau: Option<String>,
        #[arg(long)]
        element: Option<String>,
        #[arg(long, value_enum, default_value_t = ColoringArg::A)]
        coloring: ColoringArg,
    },
    /// Orbit of an element's tableau pair with its right tableau fixed.
    Orbit {
        #[arg(long)]
        element: String,
        /// Operator whitelist: wall, fork, chain, quasi, all, or operator names.
        #[arg(long)]
        ops: Option<String>,
    },
    /// Kazhdan-Lusztig left cells.
    Cells {
        #[arg(long)]
        rank: usize,
    },
    /// Isotypic vectors of the intersection `C ∩ R` through an element.
    Rsigma {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        element: String,
        #[arg(long)]
        shape: Option<String>,
    },
    /// Verification sweeps.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Orbits with fixed right tableau are complete.
    Theorem1 {
        #[arg(long)]
        total: usize,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        ops: Option<String>,
    },
    /// Signed sums generate the expected irreducible submodules.
    Theorem2 {
        #[arg(long)]
        rank: usize,
    },
    /// Operator maps between left cells commute with the group action.
    Equivariance {
        #[arg(long)]
        rank: usize,
    },
    /// The rank 9 cell intersection built on (5,4,4,2,2,1).
    D9Example,
    /// Character table orthogonality.
    Characters {
        #[arg(long)]
        rank: usize,
        /// Random class pairs checked when the rank is beyond the full check.
        #[arg(long, default_value_t = 100)]
        spot: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Outcome {
    Pass,
    Fail,
}

type Run = Result<Outcome, String>;

fn usage(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Parses arguments and runs; returns the exit status.
pub fn main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    run(&cli, out)
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> i32 {
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return EXIT_USAGE;
        }
        // A pool that already exists keeps its size.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
    let mut em = Emitter { format: cli.format, out };
    match dispatch(cli, &mut em) {
        Ok(Outcome::Pass) => EXIT_OK,
        Ok(Outcome::Fail) => EXIT_FAIL,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    }
}

struct Emitter<'a> {
    format: Format,
    out: &'a mut dyn Write,
}

impl Emitter<'_> {
    /// One record: JSON line or the given text.
    fn record(&mut self, value: &impl Serialize, text: impl FnOnce() -> String) -> Result<(), String> {
        let line = match self.format {
            Format::Json => serde_json::to_string(value).map_err(usage)?,
            Format::Ascii => text(),
        };
        writeln!(self.out, "{line}").map_err(usage)
    }
}

fn dispatch(cli: &Cli, em: &mut Emitter) -> Run {
    match &cli.command {
        Command::Rs { rank, element } => {
            let w = parse_element(element, *rank)?;
            let p = domino_rs(&w);
            let rec = json!({ "element": w, "shape": p.shape(), "left": p.left, "right": p.right });
            em.record(&rec, || format!("{w}  shape {}\nleft\n{}right\n{}", p.shape(), render_ascii(&p.left), render_ascii(&p.right)))?;
            Ok(Outcome::Pass)
        }
        Command::Unrs { pair } => {
            let p: TableauPair = serde_json::from_str(pair).map_err(|e| format!("pair: {e}"))?;
            let w = inverse_rs(&p).map_err(usage)?;
            em.record(&json!({ "element": w }), || w.to_string())?;
            Ok(Outcome::Pass)
        }
        Command::Tableaux { shape } => {
            let s = parse_shape(shape)?;
            let cap = if cli.allow_long { TABLEAU_TOTAL_CAP + 8 } else { TABLEAU_TOTAL_CAP };
            if s.total() > cap {
                return Err(format!("shape total {} exceeds {cap}; pass --allow-long for larger shapes", s.total()));
            }
            for t in enumerate_tableaux(&s).map_err(usage)? {
                em.record(&t, || render_ascii(&t))?;
            }
            Ok(Outcome::Pass)
        }
        Command::Cycles { tableau, element, coloring } => {
            let t = match (tableau, element) {
                (Some(t), None) => parse_tableau(t)?,
                (None, Some(e)) => domino_rs(&parse_element(e, None)?).left,
                _ => return Err("give exactly one of --tableau and --element".into()),
            };
            let c = match coloring {
                ColoringArg::A => Coloring::A,
                ColoringArg::B => Coloring::B,
            };
            let rep = cycle_report(&t, c);
            em.record(&rep, || {
                let cycles = rep["cycles"].as_array().cloned().unwrap_or_default();
                let lines: Vec<String> = cycles
                    .iter()
                    .map(|c| format!("{} {}", c["labels"], if c["open"].as_bool() == Some(true) { "open" } else { "closed" }))
                    .collect();
                format!("{}coloring {c}\n{}", render_ascii(&t), lines.join("\n"))
            })?;
            Ok(Outcome::Pass)
        }
        Command::Orbit { element, ops } => {
            let w = parse_element(element, None)?;
            check_orbit_rank(w.rank(), cli.allow_long)?;
            let ops = parse_ops(ops.as_deref(), w.rank())?;
            let seed = domino_rs(&w);
            let orbit = orbit_closure(&seed, &ops).map_err(usage)?;
            let admissible = admissible_lefts(&seed.right).map_err(usage)?.len();
            for m in &orbit {
                let names: Vec<String> = m.witness.iter().map(ToString::to_string).collect();
                let rec = json!({ "left": m.pair.left, "witness": names });
                em.record(&rec, || format!("{}via [{}]", render_ascii(&m.pair.left), names.join(" ")))?;
            }
            let complete = orbit.len() == admissible;
            let rec = json!({ "summary": true, "orbit": orbit.len(), "admissible": admissible, "complete": complete });
            em.record(&rec, || format!("orbit {} of {admissible} admissible: {}", orbit.len(), pass_word(complete)))?;
            Ok(if complete { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Cells { rank } => {
            let t = kl_table(*rank, cli)?;
            let cells = CellPartition::compute(&t);
            for (i, cell) in cells.left_cells.iter().enumerate() {
                let elements: Vec<&SignedElement> = cell.iter().map(|&w| t.element(w)).collect();
                let d = cells.double_cell_of(cell[0]);
                let rec = json!({ "cell": i, "double_cell": d, "size": cell.len(), "elements": elements });
                em.record(&rec, || {
                    let list: Vec<String> = elements.iter().map(ToString::to_string).collect();
                    format!("cell {i} (double {d}, size {}): {}", cell.len(), list.join(" "))
                })?;
            }
            Ok(Outcome::Pass)
        }
        Command::Rsigma { rank, element, shape } => {
            let t = kl_table(*rank, cli)?;
            let w = parse_element(element, Some(*rank))?;
            let cells = CellPartition::compute(&t);
            let x = t.index_of(&w).ok_or("element not in table")?;
            let (c, r) = (cells.left_cell_of(x), cells.left_cell_of(t.inverse_index(x)));
            let inter = match cell_intersection(&t, &cells, c, r) {
                Ok(i) => i,
                Err(e) => {
                    let rec = json!({ "left": c, "right": r, "error": e.to_string() });
                    em.record(&rec, || format!("C{c} ∩ R{r}: {e}"))?;
                    return Ok(Outcome::Fail);
                }
            };
            let shapes: Vec<Shape> = match shape {
                Some(s) => vec![parse_shape(s)?],
                None => inter.shapes(),
            };
            let tab = CharacterTable::new(*rank);
            let mut ok = true;
            for s in shapes {
                if is_very_even(&s).map_err(usage)? {
                    let rep = verify_theorem2(&t, &cells, &tab, c, r, &s);
                    ok &= rep.pass;
                    em.record(&json!({ "shape": s, "very_even": true, "pass": rep.pass }), || {
                        format!("{s}: very even, {}", pass_word(rep.pass))
                    })?;
                    continue;
                }
                let v = r_sigma(&inter, &s).map_err(usage)?;
                let rep = verify_theorem2(&t, &cells, &tab, c, r, &s);
                ok &= rep.pass;
                let support: Vec<&SignedElement> = v.support.iter().map(|&w| t.element(w)).collect();
                let rec = json!({
                    "shape": s, "rep": shape_to_rep(&s).map_err(usage)?.to_string(), "support": support,
                    "signs": v.signs, "dim": rep.dim, "expected_dim": rep.expected_dim, "pass": rep.pass,
                });
                em.record(&rec, || {
                    let terms: Vec<String> = support
                        .iter()
                        .zip(&v.signs)
                        .map(|(w, s)| format!("{}C{w}", if *s > 0 { "+" } else { "-" }))
                        .collect();
                    format!("R{s} = {}  dim {} of {}: {}", terms.join(" "), rep.dim, rep.expected_dim, pass_word(rep.pass))
                })?;
            }
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Command::Verify { what } => verify(what, cli, em),
    }
}

fn verify(what: &Verify, cli: &Cli, em: &mut Emitter) -> Run {
    match what {
        Verify::Theorem1 { total, shape, ops } => {
            if total % 2 == 1 || *total < 4 {
                return Err("--total must be even and at least 4".into());
            }
            let rank = total / 2;
            check_orbit_rank(rank, cli.allow_long)?;
            let ops = parse_ops(ops.as_deref(), rank)?;
            let recs = match shape {
                Some(s) => {
                    let s = parse_shape(s)?;
                    if s.total() != *total {
                        return Err(format!("shape {s} does not have total {total}"));
                    }
                    verify_theorem1_shape(&s, &ops).map_err(usage)?
                }
                None => verify_theorem1(*total, &ops).map_err(usage)?,
            };
            let mut ok = true;
            for r in &recs {
                ok &= r.pass;
                em.record(r, || format!("{} admissible {} orbits {:?}: {}", r.shape, r.admissible, r.orbits, pass_word(r.pass)))?;
            }
            summary(em, "theorem1", recs.iter().filter(|r| r.pass).count(), recs.len())?;
            Ok(if ok { Outcome::Pass } else { Outcome::Fail })
        }
        Verify::Theorem2 { rank } => {
            let t = kl_table(*rank, cli)?;
            let cells = CellPartition::compute(&t);
            let reps = verify_theorem2_all(&t, &cells);
            for r in &reps {
                em.record(r, || {
                    let s = r.shape.as_ref().map_or("-".to_string(), ToString::to_string);
                    format!("C{} R{} {s}: {} {}", r.left, r.right, pass_word(r.pass), r.detail)
                })?;
            }
            let passed = reps.iter().filter(|r| r.pass).count();
            summary(em, "theorem2", passed, reps.len())?;
            Ok(if passed == reps.len() { Outcome::Pass } else { Outcome::Fail })
        }
        Verify::Equivariance { rank } => {
            let t = kl_table(*rank, cli)?;
            let cells = CellPartition::compute(&t);
            let reps = equivariance_sweep(&t, &cells).map_err(usage)?;
            let good = |r: &domino_cells::cells_kl::EquivarianceReport| r.pass && r.preserves_right_cells;
            for r in &reps {
                em.record(r, || {
                    format!("{} on C{} -> {:?}: commutes {} ({})", r.operator, r.source, r.targets, r.commutes, pass_word(good(r)))
                })?;
            }
            let passed = reps.iter().filter(|r| good(r)).count();
            summary(em, "equivariance", passed, reps.len())?;
            Ok(if passed == reps.len() { Outcome::Pass } else { Outcome::Fail })
        }
        Verify::D9Example => {
            let r = worked_example().map_err(usage)?;
            let pass = r.shapes_match
                && r.reps_match
                && r.first_pattern_matches
                && r.second_pattern_matches
                && r.alternative.is_some()
                && r.truncated_matches;
            em.record(&r, || {
                let mut lines = vec![format!("intersection: {} elements, r = {}", r.members.len(), r.r)];
                for m in &r.members {
                    lines.push(format!("  {} rep {}{}", m.shape, m.rep, if m.special { " special" } else { "" }));
                }
                for l in r.listed.iter().filter(|l| l.misprint) {
                    let fix = l.correction.as_ref().map_or("?".into(), ToString::to_string);
                    lines.push(format!("listed {:?} sums to {}: misprint for {fix}", l.parts, l.sum));
                }
                lines.push(format!("shapes match: {}, representations match: {}", r.shapes_match, r.reps_match));
                lines.push(format!("displayed sign patterns: {} {}", r.first_pattern_matches, r.second_pattern_matches));
                lines.push(format!("alternative: {:?}, truncated induction: {}", r.alternative.map(|a| a + 1), r.truncated_matches));
                lines.join("\n")
            })?;
            Ok(if pass { Outcome::Pass } else { Outcome::Fail })
        }
        Verify::Characters { rank, spot, seed } => {
            let n = *rank;
            if n < 2 {
                return Err("--rank must be at least 2".into());
            }
            let dims = dimension_squares_sum(n);
            let (mode, ok) = if n <= FULL_CHARACTER_CAP {
                ("full", rows_orthonormal(&CharacterTable::new(n)))
            } else {
                let cls = classes(n);
                let irr = irreducibles(n);
                let mut rng = StdRng::seed_from_u64(*seed);
                let ok = (0..*spot).all(|_| {
                    let a = &cls[rng.gen_range(0..cls.len())];
                    let b = &cls[rng.gen_range(0..cls.len())];
                    columns_orthogonal(&irr, a, b)
                });
                ("spot", ok)
            };
            let pass = dims && ok;
            let rec = json!({ "rank": n, "mode": mode, "dimension_squares": dims, "orthogonality": ok, "pass": pass });
            em.record(&rec, || format!("D_{n} {mode}: sum of squares {dims}, orthogonality {ok}: {}", pass_word(pass)))?;
            Ok(if pass { Outcome::Pass } else { Outcome::Fail })
        }
    }
}

fn summary(em: &mut Emitter, what: &str, passed: usize, total: usize) -> Result<(), String> {
    let rec = json!({ "summary": what, "passed": passed, "total": total });
    em.record(&rec, || format!("{what}: {passed}/{total} pass"))
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn check_orbit_rank(rank: usize, allow_long: bool) -> Result<(), String> {
    let cap = if allow_long { ORBIT_RANK_CAP_LONG } else { ORBIT_RANK_CAP };
    if rank > cap {
        return Err(format!("rank {rank} exceeds {cap}; pass --allow-long for ranks up to {ORBIT_RANK_CAP_LONG}"));
    }
    Ok(())
}

pub fn parse_element(s: &str, rank: Option<usize>) -> Result<SignedElement, String> {
    let v: Vec<i64> = serde_json::from_str(s).map_err(|e| format!("element {s:?}: {e}"))?;
    if v.len() > 127 {
        return Err("element rank too large".into());
    }
    let w = SignedElement::new(&v).map_err(usage)?;
    if let Some(n) = rank {
        if n != w.rank() {
            return Err(format!("element has rank {} but --rank is {n}", w.rank()));
        }
    }
    Ok(w)
}

pub fn parse_shape(s: &str) -> Result<Shape, String> {
    s.parse::<Shape>().map_err(usage)
}

pub fn parse_tableau(s: &str) -> Result<DominoTableau, String> {
    serde_json::from_str(s).map_err(|e| format!("tableau: {e}"))
}

/// Operator whitelist for `rank`: comma-separated group names (`wall`,
/// `fork`, `chain`, `quasi`, `all`) or operator names such as `S_1`.
pub fn parse_ops(spec: Option<&str>, rank: usize) -> Result<Vec<OperatorId>, String> {
    let family = theorem1_operators(rank);
    let Some(spec) = spec else {
        return Ok(family);
    };
    let mut out: Vec<OperatorId> = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let picked: Vec<OperatorId> = match tok {
            "all" => family.clone(),
            "wall" => family.iter().filter(|o| matches!(o, OperatorId::WallCross { .. })).cloned().collect(),
            "fork" => family.iter().filter(|o| matches!(o, OperatorId::ForkL { .. })).cloned().collect(),
            "chain" => family.iter().filter(|o| matches!(o, OperatorId::ChainL { .. })).cloned().collect(),
            "quasi" => OperatorId::quasi_family(rank),
            name => {
                let hit: Vec<OperatorId> = family.iter().filter(|o| o.to_string() == name).cloned().collect();
                if hit.is_empty() {
                    return Err(format!("unknown operator {name:?} for rank {rank}"));
                }
                hit
            }
        };
        for op in picked {
            if !out.contains(&op) {
                out.push(op);
            }
        }
    }
    Ok(out)
}

fn kl_table(n: usize, cli: &Cli) -> Result<KLTable, String> {
    let cap = if cli.allow_long { KL_RANK_CAP_LONG } else { KL_RANK_CAP };
    if !(2..=cap).contains(&n) {
        let hint = if cli.allow_long { String::new() } else { format!("; pass --allow-long for rank {KL_RANK_CAP_LONG}") };
        return Err(format!("rank {n} outside 2..={cap}{hint}"));
    }
    let Some(dir) = &cli.cache_dir else {
        return KLTable::compute(n, cli.allow_long).map_err(usage);
    };
    let path = cache_path(dir, n);
    if let Ok(f) = fs::File::open(&path) {
        if let Ok(t) = KLTable::load(&mut io::BufReader::new(f)) {
            return Ok(t);
        }
    }
    let t = KLTable::compute(n, cli.allow_long).map_err(usage)?;
    fs::create_dir_all(dir).map_err(|e| format!("cache dir: {e}"))?;
    let mut f = io::BufWriter::new(fs::File::create(&path).map_err(|e| format!("cache file: {e}"))?);
    t.save(&mut f).map_err(|e| format!("cache write: {e}"))?;
    Ok(t)
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("kl-d{n}.v1.bin"))
}

/// Grid drawing of a tableau: each label on both of its cells, boundaries
/// between different dominoes.
pub fn render_ascii(t: &DominoTableau) -> String {
    let rows = t.rows();
    let h = rows.len();
    let w = rows.first().map_or(0, Vec::len);
    let width = t.size().to_string().len() + 1;
    let at = |r: isize, c: isize| -> Option<u8> {
        if r < 0 || c < 0 {
            return None;
        }
        rows.get(r as usize).and_then(|row| row.get(c as usize)).copied()
    };
    // Boundary between two cells (or a cell and the outside).
    let wall = |a: Option<u8>, b: Option<u8>| a != b && (a.is_some() || b.is_some());
    let mut out = String::new();
    for r in 0..=h as isize {
        // Horizontal boundary line above row r.
        let mut line = String::new();
        for c in 0..=w as isize {
            let corner = wall(at(r - 1, c - 1), at(r - 1, c))
                || wall(at(r, c - 1), at(r, c))
                || wall(at(r - 1, c - 1), at(r, c - 1))
                || wall(at(r - 1, c), at(r, c));
            line.push(if corner { '+' } else { ' ' });
            if c < w as isize {
                let fill = if wall(at(r - 1, c), at(r, c)) { '-' } else { ' ' };
                line.extend(std::iter::repeat_n(fill, width));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
        if r == h as isize {
            break;
        }
        let mut line = String::new();
        for c in 0..=w as isize {
            line.push(if wall(at(r, c - 1), at(r, c)) { '|' } else { ' ' });
            if c < w as isize {
                match at(r, c) {
                    Some(k) => line.push_str(&format!("{k:>width$}")),
                    None => line.extend(std::iter::repeat_n(' ', width)),
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Canonical JSON of a tableau.
pub fn render_json(t: &DominoTableau) -> String {
    serde_json::to_string(t).expect("tableau serializes")
}
