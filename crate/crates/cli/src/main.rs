use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use icircular::c1p::{find_forb_certificate, has_circular_ones};
use icircular::families::{
    gen_forb_circular, gen_forb_icircular, gen_g, gen_h, gen_q, gen_r, gen_w, FamilyKind,
};
use icircular::icirc::{find_iforb_certificate, has_i_circular};
use icircular::seqcore::enumerate_bracelets;
use icircular::splitgraph::{
    brute_force_semi_transitive, is_semi_transitive_split, max_edges_from_env, split_partition,
};
use icircular::verify::{verify_by_id, DEFAULT_K_MAX, DEFAULT_SAMPLES, DEFAULT_SEED, LEMMA_IDS};
use icircular::wordrep::{word_represents, Word};
use icircular::{
    BinaryMatrix, BinarySequence, Certificate, Error, FamilyId, Graph, QuaternarySequence, UVariant,
};

/// `println!` that stops quietly when the reader has gone away.
macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "icircular",
    version,
    about = "Circular-ones, I-circular and semi-transitive split graph tools"
)]
struct Cli {
    /// Print one JSON object instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the circular-ones property of a matrix file (`-` for stdin).
    C1p { file: String },
    /// Decide the I-circular property of a matrix file.
    Icirc { file: String },
    /// Decide semi-transitivity of a split graph through its matrix.
    Split { file: String },
    /// Search for a semi-transitive orientation by brute force.
    Orient {
        file: String,
        /// Edge-count guard; defaults to ICIRCULAR_MAX_EDGES or 40.
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// Print a family matrix, e.g. `gen MI 4`, `gen R 013102`,
    /// `gen W 2310 --variant figure`, `gen H 1 0101`, `gen Q 3 2 5`.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Variant::Literal)]
        variant: Variant,
        /// Complement the rows flagged by this binary mask.
        #[arg(long)]
        mask: Option<String>,
    },
    /// Check whether a word represents a graph.
    Word { word: String, file: String },
    /// List the mask set used for `a ⊙ MI*(k)`.
    Bracelets { k: usize },
    /// Run a verification check, or `all`; prints one JSON line per check.
    Verify {
        id: String,
        #[arg(long, default_value_t = DEFAULT_K_MAX)]
        kmax: usize,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Literal,
    Figure,
}

impl From<Variant> for UVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Literal => UVariant::Literal,
            Variant::Figure => UVariant::Figure,
        }
    }
}

enum Failure {
    Input(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Guard { .. } => Failure::Guard(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
    }
}

fn read_matrix(path: &str) -> Result<BinaryMatrix, Failure> {
    Ok(read_input(path)?.parse()?)
}

fn read_graph(path: &str) -> Result<Graph, Failure> {
    Ok(read_input(path)?.parse()?)
}

fn certificate_json(c: &Certificate) -> Value {
    let mut obj = json!({
        "family": c.family.to_string(),
        "rowMap": c.witness.row_map.images(),
        "colMap": c.witness.col_map.images(),
    });
    if let Some(k) = c.family.k {
        obj["k"] = json!(k);
    }
    if let Some(mask) = &c.family.mask {
        obj["mask"] = json!(mask.to_string());
    }
    obj
}

fn emit(json_mode: bool, value: Value, text: impl FnOnce() -> String) {
    if json_mode {
        say!("{value}");
    } else {
        say!("{}", text());
    }
}

fn matrix_decision(
    json_mode: bool,
    path: &str,
    property: &str,
    (yes, no): (&str, &str),
    decide: impl Fn(&BinaryMatrix) -> Option<Vec<usize>>,
    certify: impl Fn(&BinaryMatrix) -> Option<Certificate>,
) -> Outcome {
    let m = read_matrix(path)?;
    if let Some(order) = decide(&m) {
        let line = order.iter().map(|c| c.to_string()).collect::<Vec<_>>();
        emit(
            json_mode,
            json!({"property": property, "verdict": true, "order": order}),
            || format!("{yes} {}", line.join(" ")),
        );
        return Ok(true);
    }
    let cert = certify(&m).map(|c| certificate_json(&c));
    let mut value = json!({"property": property, "verdict": false});
    if let Some(c) = &cert {
        value["certificate"] = c.clone();
    }
    emit(json_mode, value, || match cert {
        Some(c) => format!("{no}\n{c}"),
        None => no.to_string(),
    });
    Ok(false)
}

fn parse_seq<T: std::str::FromStr<Err = Error>>(
    s: Option<&String>,
    what: &str,
) -> Result<T, Failure> {
    let s = s.ok_or_else(|| Failure::Input(format!("missing {what}")))?;
    Ok(s.parse()?)
}

fn parse_usize(s: Option<&String>, what: &str) -> Result<usize, Failure> {
    let s = s.ok_or_else(|| Failure::Input(format!("missing {what}")))?;
    s.parse()
        .map_err(|_| Failure::Input(format!("{what} must be a nonnegative integer, got '{s}'")))
}

fn generate(
    family: &str,
    params: &[String],
    variant: Variant,
) -> Result<Vec<BinaryMatrix>, Failure> {
    let p = |i: usize| params.get(i);
    let one = |m: BinaryMatrix| Ok(vec![m]);
    match family {
        "R" => one(gen_r(&parse_seq::<QuaternarySequence>(
            p(0),
            "sequence b",
        )?)?),
        "W" => one(gen_w(
            &parse_seq::<QuaternarySequence>(p(0), "sequence b")?,
            variant.into(),
        )?),
        "H" => one(gen_h(
            parse_usize(p(0), "index i")?,
            &parse_seq::<BinarySequence>(p(1), "sequence alpha")?,
        )?),
        "G" => one(gen_g(&parse_seq::<BinarySequence>(
            p(0),
            "sequence gamma",
        )?)?),
        "Q" => {
            let j = parse_usize(p(0), "block type j")?;
            let j = u8::try_from(j).map_err(|_| Failure::Input(format!("bad block type {j}")))?;
            one(gen_q(
                j,
                parse_usize(p(1), "index i")?,
                parse_usize(p(2), "size k")?,
            )?)
        }
        "Forb" | "IForb" => {
            let rows = parse_usize(p(0), "row bound")?;
            let cols = parse_usize(p(1), "column bound")?;
            let members = if family == "Forb" {
                gen_forb_circular(rows, cols)
            } else {
                gen_forb_icircular(rows, cols)
            };
            Ok(members.into_iter().map(|f| f.matrix).collect())
        }
        other => {
            let kind: FamilyKind = other.parse()?;
            let id = if kind.is_parameterized() {
                FamilyId::sized(kind, parse_usize(p(0), "size k")?)
            } else {
                FamilyId::plain(kind)
            };
            one(id.build()?)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let json_mode = cli.json;
    match cli.command {
        Command::C1p { file } => matrix_decision(
            json_mode,
            &file,
            "circular-ones",
            ("CIRCULAR", "NOT-CIRCULAR"),
            |m| has_circular_ones(m).map(|o| o.columns().to_vec()),
            find_forb_certificate,
        ),
        Command::Icirc { file } => matrix_decision(
            json_mode,
            &file,
            "i-circular",
            ("I-CIRCULAR", "NOT-I-CIRCULAR"),
            |m| has_i_circular(m).map(|o| o.columns().to_vec()),
            find_iforb_certificate,
        ),
        Command::Split { file } => {
            let g = read_graph(&file)?;
            let sg = split_partition(&g)
                .ok_or_else(|| Failure::Input(format!("{file}: not a split graph")))?;
            let cert = is_semi_transitive_split(&sg);
            let mut value = json!({
                "property": "semi-transitive",
                "verdict": cert.verdict,
                "clique": sg.clique(),
                "independent": sg.independent(),
            });
            if let Some(order) = &cert.positive {
                // Report the arrangement as clique vertices.
                let vertices: Vec<usize> = order
                    .columns()
                    .iter()
                    .map(|&c| sg.clique()[c - 1])
                    .collect();
                value["order"] = json!(vertices);
            }
            if let Some(neg) = &cert.negative {
                value["certificate"] =
                    json!({"gforbMember": neg.gforb_member, "vertexMap": neg.vertex_map});
            }
            let text = || match (&value.get("order"), &value.get("certificate")) {
                (Some(order), _) => format!("SEMI-TRANSITIVE {}", join(order)),
                (None, Some(c)) => format!("NOT-SEMI-TRANSITIVE\n{c}"),
                (None, None) => "SEMI-TRANSITIVE".to_string(),
            };
            let line = text();
            emit(json_mode, value.clone(), || line);
            Ok(cert.verdict)
        }
        Command::Orient { file, max_edges } => {
            let g = read_graph(&file)?;
            let limit = max_edges.unwrap_or_else(max_edges_from_env);
            let found = brute_force_semi_transitive(&g, limit)?;
            let arcs = found.as_ref().map(|o| o.arcs());
            let mut value = json!({"property": "semi-transitive", "verdict": found.is_some()});
            if let Some(arcs) = &arcs {
                value["arcs"] = json!(arcs);
            }
            emit(json_mode, value, || match &arcs {
                Some(arcs) => {
                    let parts: Vec<String> =
                        arcs.iter().map(|(u, v)| format!("{u}->{v}")).collect();
                    format!("SEMI-TRANSITIVE {}", parts.join(" "))
                }
                None => "NOT-SEMI-TRANSITIVE".to_string(),
            });
            Ok(found.is_some())
        }
        Command::Gen {
            family,
            params,
            variant,
            mask,
        } => {
            let mut matrices = generate(&family, &params, variant)?;
            if let Some(mask) = mask {
                let mask: BinarySequence = mask.parse()?;
                matrices = matrices
                    .iter()
                    .map(|m| m.mask_complement(&mask))
                    .collect::<icircular::Result<_>>()?;
            }
            if json_mode {
                let all: Vec<Vec<String>> = matrices.iter().map(rows_of).collect();
                let value = if all.len() == 1 {
                    json!(all[0])
                } else {
                    json!(all)
                };
                say!("{value}");
            } else {
                let blocks: Vec<String> = matrices.iter().map(|m| rows_of(m).join("\n")).collect();
                say!("{}", blocks.join("\n\n"));
            }
            Ok(true)
        }
        Command::Word { word, file } => {
            let w: Word = word.parse()?;
            let g = read_graph(&file)?;
            let verdict = word_represents(&w, &g)?;
            emit(
                json_mode,
                json!({"property": "represents", "verdict": verdict, "word": w.to_string()}),
                || {
                    if verdict {
                        "REPRESENTS"
                    } else {
                        "DOES-NOT-REPRESENT"
                    }
                    .to_string()
                },
            );
            Ok(verdict)
        }
        Command::Bracelets { k } => {
            let all: Vec<String> = enumerate_bracelets(k)?
                .iter()
                .map(|b| b.to_string())
                .collect();
            if json_mode {
                say!("{}", json!(all));
            } else {
                for b in all {
                    say!("{b}");
                }
            }
            Ok(true)
        }
        Command::Verify {
            id,
            kmax,
            samples,
            seed,
        } => {
            let ids: Vec<&str> = if id == "all" {
                LEMMA_IDS.to_vec()
            } else if LEMMA_IDS.contains(&id.as_str()) {
                vec![id.as_str()]
            } else {
                return Err(Failure::Input(format!(
                    "unknown check '{id}'; expected one of: all {}",
                    LEMMA_IDS.join(" ")
                )));
            };
            let mut ok = true;
            for id in ids {
                let report = verify_by_id(id, kmax, samples, seed).expect("known id");
                ok &= report.passed();
                say!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            }
            Ok(ok)
        }
    }
}

fn join(v: &Value) -> String {
    v.as_array()
        .map(|a| {
            a.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

fn rows_of(m: &BinaryMatrix) -> Vec<String> {
    m.to_string().lines().map(str::to_owned).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("refused: {msg}");
            ExitCode::from(3)
        }
    }
}
