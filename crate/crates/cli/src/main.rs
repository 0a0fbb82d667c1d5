//! `wugsnake`: JSON-lines front end to the library.

mod parse;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use wugsnake_core::classic::{
    christoffel, cohn_tree, cohn_word, domino_continued_fraction, domino_geometry, farey_tree,
    fricke_check, markov_form, markov_numbers, markov_tree, matching_count_cells, mu_domino,
    snake_from_continued_fraction, AbWord, Cell, FareyFraction, Letter, MarkovTriple,
};
use wugsnake_core::contfrac::{companion, plls_decompose, ContinuedFraction, Plls};
use wugsnake_core::exact::IntMatrix;
use wugsnake_core::json::{int_to_json, ints_to_json, matrix_from_json, matrix_to_json};
use wugsnake_core::lattice::{
    cubes_for_vector, embed2, embed3_model, model531_word_count, representative, shift_orders,
    turtle_embedding, Embedding,
};
use wugsnake_core::render::{cells_svg, embedding2_svg, embedding3_svg, wug_svg};
use wugsnake_core::semigroup::{
    aa_bb_family, algebraic_markov, collide, farey_set_2, farey_set_3, geometric_markov_search,
    is_markov_reduced, markov_from_plls, md_form, perron_minimum, ProductOrder, Scheme,
    SemigroupWord,
};
use wugsnake_core::subtractive::{
    reconstruct, reconstruct_start, run_mcf, Strategy, TraceEntry, Triple,
};
use wugsnake_core::wugsnake::{body_for_matrix, wug_determinant, Head, WugSnake};
use wugsnake_core::Error;

#[derive(Parser)]
#[command(
    name = "wugsnake",
    version,
    about = "Markov numbers, snake graphs and wug-snakes"
)]
struct Cli {
    /// Write JSON lines here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Markov triples and numbers.
    Markov {
        #[command(subcommand)]
        cmd: MarkovCmd,
    },
    /// Farey tree, Christoffel words and domino graphs.
    Farey {
        #[command(subcommand)]
        cmd: FareyCmd,
    },
    /// Cohn matrices.
    Cohn {
        #[command(subcommand)]
        cmd: CohnCmd,
    },
    /// Continued fractions and PLLS sequences.
    Cf {
        #[command(subcommand)]
        cmd: CfCmd,
    },
    /// Wug-snake graphs.
    Wug {
        #[command(subcommand)]
        cmd: WugCmd,
    },
    /// Farey sets of matrix semigroups and their Markov numbers.
    Semigroup {
        #[command(subcommand)]
        cmd: SemigroupCmd,
    },
    /// Exact Perron minimum of a PLLS period.
    Perron {
        #[arg(long)]
        plls: String,
    },
    /// Cyclic subtractive algorithm on a triple.
    Subtract(SubtractArgs),
    /// Embeddings, tangents and cube sequences.
    Tetris {
        #[command(subcommand)]
        cmd: TetrisCmd,
    },
    /// Draw an SVG.
    Render {
        #[arg(long, value_enum)]
        kind: RenderKind,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum MarkovCmd {
    /// Tree of triples, breadth first.
    Tree {
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Sorted distinct Markov numbers of the tree.
    Numbers {
        #[arg(long, default_value_t = 5)]
        depth: usize,
    },
    /// Markov's quadratic form of a triple.
    Form {
        #[arg(long)]
        triple: String,
    },
}

#[derive(Subcommand)]
enum FareyCmd {
    Tree {
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Christoffel and Cohn words of a fraction.
    Word {
        #[arg(long)]
        fraction: String,
    },
    /// Domino graph of a fraction and its matching count.
    Domino {
        #[arg(long)]
        fraction: String,
    },
}

#[derive(Subcommand)]
enum CohnCmd {
    Tree {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 1)]
        a: i64,
    },
    /// Fricke identity on random pairs of words in A, B.
    Fricke {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Subcommand)]
enum CfCmd {
    /// Value of a continued fraction such as `[3; 2 : 1]`.
    Eval {
        #[arg(long)]
        cf: String,
    },
    /// PLLS period of a reduced 2x2 matrix.
    Plls {
        #[arg(long)]
        matrix: String,
    },
    /// Product of companion matrices, e.g. `1,1,1;1,0,1*5`.
    Companion {
        #[arg(long)]
        specs: String,
    },
}

#[derive(Subcommand)]
enum WugCmd {
    /// Matching counts three ways.
    Count {
        #[arg(long)]
        file: PathBuf,
    },
    /// Matching sequence of the filtration.
    Sequence {
        #[arg(long)]
        file: PathBuf,
    },
    /// Wug-snake determinant of a head and a companion product.
    Det {
        #[arg(long)]
        head: String,
        #[arg(long)]
        specs: String,
    },
    /// Three-way agreement on random graphs.
    Random {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_weight: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Operator,
    Juxtaposition,
}

impl From<Order> for ProductOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Operator => ProductOrder::Operator,
            Order::Juxtaposition => ProductOrder::Juxtaposition,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
}

#[derive(Subcommand)]
enum SemigroupCmd {
    /// Farey set of two or three generators given as a JSON list of matrices.
    Enum {
        #[arg(long)]
        gens: String,
        /// Subdivision for three generators.
        #[arg(long, default_value = "pairwise")]
        scheme: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Order::Operator)]
        order: Order,
        #[arg(long, value_enum, default_value_t = Format::Jsonl)]
        out: Format,
    },
    /// Markov-Davenport form of a matrix.
    Form {
        #[arg(long)]
        matrix: String,
    },
    /// Algebraic and searched geometric Markov numbers.
    Markov {
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 50)]
        radius: u64,
    },
    /// Markov numbers of the (a,a)/(b,b) family.
    Family {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Repeated values in the (a,a)/(b,b) family.
    Collide {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Markov number of the reduced matrix with this PLLS.
    Plls {
        #[arg(long)]
        plls: String,
    },
}

#[derive(Args)]
struct SubtractArgs {
    #[arg(long, conflicts_with = "random")]
    triple: Option<String>,
    #[arg(long, default_value = "max-b")]
    strategy: String,
    /// Include every trace entry.
    #[arg(long)]
    trace: bool,
    /// Check gcd and round trip on this many random triples.
    #[arg(long)]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum TetrisCmd {
    /// Cube sequence of a vector, its representative and matching count.
    Cubes {
        #[arg(long)]
        vector: String,
    },
    /// Matching count of a word over the three-generator model.
    Count {
        #[arg(long)]
        word: String,
    },
    /// Planar embedding of a word in M1, M2.
    Embed2 {
        #[arg(long)]
        word: String,
    },
    /// Embedding of a word in the three-generator model.
    Embed3 {
        #[arg(long)]
        word: String,
    },
    /// Embedding of a word in A, B, C, one cube per letter.
    Turtle {
        #[arg(long)]
        word: String,
    },
    /// Mediant law on random Farey neighbours.
    Mediant {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Snake,
    Wug,
    Embedding2,
    Embedding3,
}

/// Bad input values, as opposed to bad usage.
#[derive(Debug)]
struct Invalid(String);

impl std::fmt::Display for Invalid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for Invalid {}

fn invalid(msg: impl Into<String>) -> anyhow::Error {
    Invalid(msg.into()).into()
}

struct Out {
    lines: Vec<String>,
}

impl Out {
    fn emit(&mut self, v: Value) {
        self.lines.push(v.to_string());
    }
}

fn fraction(s: &str) -> anyhow::Result<FareyFraction> {
    Ok(s.parse::<FareyFraction>()?)
}

fn read_json(path: &PathBuf) -> anyhow::Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn embedding_json(e: &Embedding) -> anyhow::Result<Value> {
    Ok(json!({
        "dim": e.dim,
        "cells": e.cells,
        "head": e.head,
        "last": e.last,
        "translation": e.translation(),
        "tangent": e.tangent()?.to_string(),
    }))
}

fn turtle_word(s: &str) -> anyhow::Result<SemigroupWord> {
    let letters = s
        .trim()
        .chars()
        .map(|c| match c {
            'A' => Ok(0),
            'B' => Ok(1),
            'C' => Ok(2),
            _ => Err(invalid(format!("letter {c:?} not in A, B, C"))),
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(SemigroupWord::new(letters))
}

fn run(cli: Cli, out: &mut Out) -> anyhow::Result<()> {
    match cli.command {
        Command::Markov { cmd } => match cmd {
            MarkovCmd::Tree { depth } => {
                for n in markov_tree(depth) {
                    out.emit(json!({
                        "depth": n.depth,
                        "farey": n.farey.mid.to_string(),
                        "triple": ints_to_json(&n.triple.to_vec()),
                        "matrix": matrix_to_json(&cohn_word(&n.farey.mid).matrix()),
                    }));
                }
            }
            MarkovCmd::Numbers { depth } => {
                out.emit(
                    json!({ "depth": depth, "numbers": ints_to_json(&markov_numbers(depth)) }),
                );
            }
            MarkovCmd::Form { triple } => {
                let t = match &parse::ints(&triple)?[..] {
                    [a, b, c] => MarkovTriple::new(a.clone(), b.clone(), c.clone()),
                    _ => return Err(invalid("a triple needs three integers")),
                };
                if !t.is_solution() {
                    return Err(invalid(format!("{t} is not a Markov triple")));
                }
                let f = markov_form(&t)?;
                out.emit(json!({
                    "triple": ints_to_json(&t.to_vec()),
                    "form": f.to_string(),
                    "discriminant": int_to_json(&f.discriminant()),
                }));
            }
        },
        Command::Farey { cmd } => match cmd {
            FareyCmd::Tree { depth } => {
                for (d, t) in farey_tree(depth) {
                    out.emit(json!({
                        "depth": d,
                        "left": t.left.to_string(),
                        "mid": t.mid.to_string(),
                        "right": t.right.to_string(),
                    }));
                }
            }
            FareyCmd::Word { fraction: f } => {
                let t = fraction(&f)?;
                let w = cohn_word(&t);
                out.emit(json!({
                    "fraction": t.to_string(),
                    "christoffel": christoffel(&t).to_string(),
                    "cohn_word": w.to_string(),
                    "palindrome": w.palindrome_factor().map(|p| p.to_string()),
                    "markov": int_to_json(&mu_domino(&t)),
                }));
            }
            FareyCmd::Domino { fraction: f } => {
                let t = fraction(&f)?;
                let cells = domino_geometry(&t);
                let cf = domino_continued_fraction(&t);
                let brute = if cells.len() <= 24 {
                    Some(int_to_json(&matching_count_cells(&cells)))
                } else {
                    None
                };
                out.emit(json!({
                    "fraction": t.to_string(),
                    "continued_fraction": cf,
                    "cells": cells,
                    "shift_operator": int_to_json(&mu_domino(&t)),
                    "matchings": brute,
                }));
            }
        },
        Command::Cohn { cmd } => match cmd {
            CohnCmd::Tree { depth, a } => {
                for n in cohn_tree(depth, &BigInt::from(a))? {
                    out.emit(json!({
                        "depth": n.depth,
                        "farey": n.farey.mid.to_string(),
                        "matrix": matrix_to_json(n.mid.matrix()),
                        "markov": int_to_json(n.mid.markov_number()),
                    }));
                }
            }
            CohnCmd::Fricke { seed, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut passed = 0;
                for _ in 0..count {
                    let mut word = || {
                        let n = rng.gen_range(1..=6);
                        AbWord(
                            (0..n)
                                .map(|_| {
                                    if rng.gen_bool(0.5) {
                                        Letter::A
                                    } else {
                                        Letter::B
                                    }
                                })
                                .collect(),
                        )
                    };
                    let (u, v) = (word(), word());
                    if fricke_check(&u.matrix(), &v.matrix())? {
                        passed += 1;
                    } else {
                        out.emit(json!({ "failure": [u.to_string(), v.to_string()] }));
                    }
                }
                out.emit(json!({ "seed": seed, "pairs": count, "passed": passed }));
            }
        },
        Command::Cf { cmd } => match cmd {
            CfCmd::Eval { cf } => {
                let c: ContinuedFraction = cf.parse()?;
                let v = c.eval()?;
                out.emit(json!({
                    "cf": c.to_string(),
                    "p": int_to_json(v.numer()),
                    "q": int_to_json(v.denom()),
                    "value": v.to_string(),
                }));
            }
            CfCmd::Plls { matrix } => {
                let m = parse::matrix(&matrix)?;
                let p = plls_decompose(&m)?;
                out.emit(json!({
                    "matrix": matrix_to_json(&m),
                    "plls": ints_to_json(p.period()),
                    "markov": int_to_json(&algebraic_markov(&m)),
                }));
            }
            CfCmd::Companion { specs } => {
                let specs = parse::companions(&specs)?;
                let n = specs[0].arity();
                let ms: Vec<IntMatrix> = specs.iter().map(companion).collect();
                let p = IntMatrix::product(n, &ms)?;
                out.emit(json!({ "matrix": matrix_to_json(&p) }));
            }
        },
        Command::Wug { cmd } => match cmd {
            WugCmd::Count { file } => {
                let w = WugSnake::from_json(&read_json(&file)?)?;
                let brute = match w.matching_count_bruteforce() {
                    Ok(b) => int_to_json(&b),
                    Err(Error::TooLarge { .. }) => Value::Null,
                    Err(e) => return Err(e.into()),
                };
                out.emit(json!({
                    "bruteforce": brute,
                    "permanent": int_to_json(&w.matching_count_permanent()?),
                    "det": int_to_json(&w.matching_count_det()?),
                }));
            }
            WugCmd::Sequence { file } => {
                let w = WugSnake::from_json(&read_json(&file)?)?;
                out.emit(json!({ "sequence": ints_to_json(&w.matching_sequence()) }));
            }
            WugCmd::Det { head, specs } => {
                let specs = parse::companions(&specs)?;
                let n = specs[0].arity();
                let ms: Vec<IntMatrix> = specs.iter().map(companion).collect();
                let a = IntMatrix::product(n, &ms)?;
                let h = Head::new(parse::ints(&head)?)?;
                let body = body_for_matrix(&a, &specs)?;
                out.emit(json!({
                    "matrix": matrix_to_json(&a),
                    "head": ints_to_json(h.target()),
                    "wug_determinant": int_to_json(&wug_determinant(&h, &body)?),
                }));
            }
            WugCmd::Random {
                seed,
                count,
                max_n,
                max_weight,
            } => {
                if max_n == 0 || max_n > 14 || max_weight < 0 {
                    return Err(invalid("need 1 <= max-n <= 14 and max-weight >= 0"));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut passed = 0;
                for _ in 0..count {
                    let n = rng.gen_range(1..=max_n);
                    let mut w = WugSnake::new(n);
                    for j in 1..=n {
                        for i in 1..=j {
                            w.set_weight(i, j, BigInt::from(rng.gen_range(0..=max_weight)))?;
                        }
                    }
                    let b = w.matching_count_bruteforce()?;
                    if b == w.matching_count_permanent()? && b == w.matching_count_det()? {
                        passed += 1;
                    } else {
                        out.emit(json!({ "failure": w.to_json() }));
                    }
                }
                out.emit(json!({ "seed": seed, "graphs": count, "passed": passed }));
            }
        },
        Command::Semigroup { cmd } => match cmd {
            SemigroupCmd::Enum {
                gens,
                scheme,
                depth,
                order,
                out: Format::Jsonl,
            } => {
                let v: Value =
                    serde_json::from_str(&gens).map_err(|e| invalid(format!("--gens: {e}")))?;
                let ms = v
                    .as_array()
                    .ok_or_else(|| invalid("--gens must be a JSON list of matrices"))?
                    .iter()
                    .map(matrix_from_json)
                    .collect::<Result<Vec<_>, _>>()?;
                let scheme: Scheme = scheme.parse()?;
                match &ms[..] {
                    [a, b] => {
                        if scheme != Scheme::Pairwise {
                            return Err(invalid("two generators only use the pairwise scheme"));
                        }
                        for n in farey_set_2(a, b, depth, order.into())? {
                            out.emit(json!({
                                "depth": n.depth,
                                "farey": n.coordinate.to_string(),
                                "word": n.word.to_string(),
                                "matrix": matrix_to_json(&n.element),
                                "markov": int_to_json(&algebraic_markov(&n.element)),
                            }));
                        }
                    }
                    [a, b, c] => {
                        let g = [a.clone(), b.clone(), c.clone()];
                        for n in farey_set_3(&g, scheme, depth, order.into())? {
                            out.emit(json!({
                                "depth": n.depth,
                                "farey": n.coordinate,
                                "word": n.word.to_string(),
                                "matrix": matrix_to_json(&n.element),
                                "markov": int_to_json(&algebraic_markov(&n.element)),
                            }));
                        }
                    }
                    _ => return Err(invalid("--gens needs two or three matrices")),
                }
            }
            SemigroupCmd::Form { matrix } => {
                let m = parse::matrix(&matrix)?;
                let f = md_form(&m)?;
                out.emit(json!({ "matrix": matrix_to_json(&m), "form": f.to_string() }));
            }
            SemigroupCmd::Markov { matrix, radius } => {
                let m = parse::matrix(&matrix)?;
                let s = geometric_markov_search(&m, radius)?;
                let reduced = if m.dim() == 2 {
                    is_markov_reduced(&m).ok()
                } else {
                    None
                };
                out.emit(json!({
                    "matrix": matrix_to_json(&m),
                    "algebraic": int_to_json(&algebraic_markov(&m)),
                    "search_bound": int_to_json(&s.minimum),
                    "argmin": s.argmin,
                    "radius": radius,
                    "markov_reduced": reduced,
                }));
            }
            SemigroupCmd::Family { family, depth } => {
                let (a, b) = parse::pair(&family)?;
                for (f, v) in aa_bb_family(&a, &b, depth)? {
                    out.emit(json!({ "farey": f.to_string(), "markov": int_to_json(&v) }));
                }
            }
            SemigroupCmd::Collide { family, depth } => {
                let (a, b) = parse::pair(&family)?;
                for c in collide(&a, &b, depth)? {
                    let fs: Vec<String> = c.fareys.iter().map(|f| f.to_string()).collect();
                    out.emit(json!({ "farey": fs, "value": int_to_json(&c.value) }));
                }
            }
            SemigroupCmd::Plls { plls } => {
                let p = Plls::new(parse::ints(&plls)?)?;
                out.emit(json!({
                    "plls": ints_to_json(p.period()),
                    "markov": int_to_json(&markov_from_plls(&p)),
                    "matrix": matrix_to_json(&p.to_matrix()),
                }));
            }
        },
        Command::Perron { plls } => {
            let p = Plls::new(parse::ints(&plls)?)?;
            let v = perron_minimum(&p)?;
            out.emit(json!({
                "plls": ints_to_json(p.period()),
                "value": v.to_string(),
                "approx": v.to_f64(),
            }));
        }
        Command::Subtract(args) => {
            let strategy: Strategy = args.strategy.parse()?;
            if let Some(count) = args.random {
                let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
                let mut passed = 0;
                for _ in 0..count {
                    let t = Triple::new(
                        rng.gen_range(1..=200),
                        rng.gen_range(1..=200),
                        rng.gen_range(1..=200),
                    )?;
                    let tr = run_mcf(t, strategy);
                    if tr.gcd() == t.gcd() && reconstruct_start(&tr)? == t.to_bigints() {
                        passed += 1;
                    } else {
                        out.emit(json!({ "failure": t.get() }));
                    }
                }
                out.emit(json!({
                    "strategy": strategy.to_string(),
                    "seed": args.seed,
                    "runs": count,
                    "passed": passed,
                }));
                return Ok(());
            }
            let triple = args
                .triple
                .ok_or_else(|| anyhow!("either --triple or --random is required"))?;
            let t: Triple = triple.parse()?;
            let tr = run_mcf(t, strategy);
            let pairs: Vec<[u64; 2]> = tr.pairs().into_iter().map(|(a, b)| [a, b]).collect();
            let mut v = json!({
                "triple": t.get(),
                "strategy": strategy.to_string(),
                "mcf": tr.to_string(),
                "pairs": pairs,
                "euclid": tr.quotients(),
                "gcd": tr.gcd(),
                "reconstructed": ints_to_json(&reconstruct_start(&tr)?),
            });
            if args.trace {
                let entries: Vec<Value> = tr
                    .entries
                    .iter()
                    .map(|e| match *e {
                        TraceEntry::Shift(k) => json!({ "shift": k }),
                        TraceEntry::Step { alpha, beta } => json!({ "alpha": alpha, "beta": beta }),
                        TraceEntry::Euclid(q) => json!({ "euclid": q }),
                    })
                    .collect();
                v["trace"] = Value::Array(entries);
                v["matrix"] = matrix_to_json(&reconstruct(&tr)?);
            }
            out.emit(v);
        }
        Command::Tetris { cmd } => match cmd {
            TetrisCmd::Cubes { vector } => {
                let v = parse::small_ints(&vector)?;
                let s = cubes_for_vector(&v)?;
                let word = representative(&s);
                let count = if v.len() == 3 {
                    Some(int_to_json(&model531_word_count(&word)?))
                } else {
                    None
                };
                out.emit(json!({
                    "vector": v,
                    "cells": s.points(),
                    "axes": s.step_axes(),
                    "shift_orders": shift_orders(&s),
                    "word": word.to_string(),
                    "count": count,
                }));
            }
            TetrisCmd::Count { word } => {
                let w: SemigroupWord = word.parse()?;
                if w.letters().iter().any(|&l| l > 2) {
                    return Err(invalid("the model has generators A1, A2, A3"));
                }
                out.emit(json!({ "word": w.to_string(), "count": int_to_json(&model531_word_count(&w)?) }));
            }
            TetrisCmd::Embed2 { word } => {
                let w: SemigroupWord = word.parse()?;
                out.emit(embedding_json(&embed2(&w)?)?);
            }
            TetrisCmd::Embed3 { word } => {
                let w: SemigroupWord = word.parse()?;
                out.emit(embedding_json(&embed3_model(&w)?)?);
            }
            TetrisCmd::Turtle { word } => {
                out.emit(embedding_json(&turtle_embedding(&turtle_word(&word)?)?)?);
            }
            TetrisCmd::Mediant { seed, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let fs: Vec<FareyFraction> = FareyFraction::all_up_to(40)
                    .into_iter()
                    .filter(|t| t.q() > 1)
                    .collect();
                let cohn = |t: &FareyFraction| {
                    SemigroupWord::new(
                        cohn_word(t)
                            .letters()
                            .iter()
                            .map(|l| usize::from(*l == Letter::B))
                            .collect(),
                    )
                };
                let mut passed = 0;
                for _ in 0..count {
                    let t = fs[rng.gen_range(0..fs.len())];
                    let (l, r) = wugsnake_core::classic::farey_parents(&t).unwrap();
                    let tl = embed2(&cohn(&l))?.tangent()?;
                    let tr = embed2(&cohn(&r))?.tangent()?;
                    let e = embed2(&cohn(&l).concat(&cohn(&r)))?.tangent()?;
                    if e == tl.mediant(&tr)? {
                        passed += 1;
                    } else {
                        out.emit(json!({ "failure": t.to_string() }));
                    }
                }
                out.emit(json!({ "seed": seed, "pairs": count, "passed": passed }));
            }
        },
        Command::Render {
            kind,
            input,
            out: path,
        } => {
            let spec = read_json(&input)?;
            let svg = render(kind, &spec)?;
            fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?;
            out.emit(json!({ "svg": path.display().to_string() }));
        }
    }
    Ok(())
}

fn word_field(spec: &Value) -> anyhow::Result<&str> {
    spec["word"]
        .as_str()
        .ok_or_else(|| invalid("expected a \"word\" string"))
}

fn render(kind: RenderKind, spec: &Value) -> anyhow::Result<String> {
    let head = spec["head"].as_u64().unwrap_or(1) as usize;
    Ok(match kind {
        RenderKind::Snake => {
            let cells: Vec<Cell> = if let Some(f) = spec["fraction"].as_str() {
                domino_geometry(&fraction(f)?)
            } else if let Some(cf) = spec["cf"].as_array() {
                let a = cf
                    .iter()
                    .map(|x| x.as_u64().filter(|&x| x > 0))
                    .collect::<Option<Vec<u64>>>()
                    .ok_or_else(|| invalid("\"cf\" must hold positive integers"))?;
                snake_from_continued_fraction(&a)
            } else if let Some(cs) = spec["cells"].as_array() {
                cs.iter()
                    .map(|c| {
                        match c.as_array().map(|a| {
                            (
                                a.first().and_then(Value::as_i64),
                                a.get(1).and_then(Value::as_i64),
                            )
                        }) {
                            Some((Some(x), Some(y))) => Ok((x, y)),
                            _ => Err(invalid(format!("bad cell {c}"))),
                        }
                    })
                    .collect::<anyhow::Result<_>>()?
            } else {
                return Err(invalid("snake needs \"fraction\", \"cf\" or \"cells\""));
            };
            cells_svg(&cells, head)?
        }
        RenderKind::Wug => wug_svg(&WugSnake::from_json(spec)?, head)?,
        RenderKind::Embedding2 => embedding2_svg(&embed2(&word_field(spec)?.parse()?)?)?,
        RenderKind::Embedding3 => {
            let e = match spec["model"].as_str().unwrap_or("cubes") {
                "cubes" => embed3_model(&word_field(spec)?.parse()?)?,
                "turtle" => turtle_embedding(&turtle_word(word_field(spec)?)?)?,
                "vector" => {
                    let v: Vec<i64> = serde_json::from_value(spec["vector"].clone())
                        .map_err(|e| invalid(format!("\"vector\": {e}")))?;
                    let s = cubes_for_vector(&v)?;
                    if s.dim() != 3 {
                        return Err(invalid("\"vector\" must have three coordinates"));
                    }
                    Embedding {
                        dim: 3,
                        cells: s.points().to_vec(),
                        head: 0,
                        last: s.len() - 1,
                    }
                }
                m => return Err(invalid(format!("unknown model {m:?}"))),
            };
            embedding3_svg(&e)?
        }
    })
}

fn is_validation(e: &anyhow::Error) -> bool {
    e.chain().any(|c| c.is::<Error>() || c.is::<Invalid>())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let target = cli.output.clone();
    let mut out = Out { lines: Vec::new() };
    if let Err(e) = run(cli, &mut out) {
        eprintln!("error: {e:#}");
        return ExitCode::from(if is_validation(&e) { 2 } else { 1 });
    }
    let mut text = out.lines.join("\n");
    if !text.is_empty() {
        text.push('\n');
    }
    let written = match target {
        Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(Into::into),
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
