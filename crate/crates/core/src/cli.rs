//! Command-line front end.
//!
//! [`run`] never touches the process streams: it returns the exit code and
//! both output streams so the binary and the tests share one code path.

use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::braidclosure::{generate_corpus, ArtinBraidWord, CorpusConfig, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::intlin::IntMatrix;
use crate::purebraid::{delta_equivalent, is_delta_trivial, LinkingMatrix};
use crate::seifert::{
    bounded_sequiv_search, validate, EnlargementKind, Invariants, SearchBudget, SearchVerdict,
    SeifertMatrix, DEFAULT_MAX_ENTRY, DEFAULT_MAX_NODES, DEFAULT_MAX_SIZE,
};
use crate::standardform::{from_disk_band, standard_form_witness, standardize, to_disk_band};
use crate::stringlink::delta_equivalent_links;
use crate::textfmt::{
    format_disk_band, format_matrix, format_string_link, parse_artin, parse_disk_band,
    parse_matrix, parse_pure_braid, parse_string_link,
};

const FORMATS: &str = "\
File formats (blank lines and lines starting with # are ignored):

  matrix        size line, then one row per line
                  2
                  -1 1
                  0 -1
                the empty matrix is the single line `0`

  pure braid    header `n <strands>`, then `i j e` per letter p(i,j)^e, e = 1 or -1
                  n 3
                  1 2 1
                  2 3 -1

  string link   header `n <n> k <k>`, a framings line, then `i.a j.b e` letters
                in double indices (strand i, pass a)
                  n 2 k 2
                  framings 0 -1
                  1.1 2.2 1

  disk band     header `g <genus>`, framings of the 2g bands, then `i j lk`
                for each nonzero band linking number
                  g 1
                  framings -1 -1
                  1 2 1

  braid word    header `n <strands>`, then one line of signed generators
                (`1 1 1` is sigma_1^3, `-2` is sigma_2^-1)
                  n 3
                  1 -2 1 -2

  polynomial    output only: `lo=<lowest exponent>; coeffs=<c_lo ... c_hi>`
                  lo=-1; coeffs=1 -1 1

Exit codes: 0 success or decided, 1 invalid input, 2 undecided search.";

#[derive(Parser, Debug)]
#[command(
    name = "sequiv",
    version,
    about = "Exact Seifert-matrix invariants, S-equivalence and delta-move equivalence",
    after_help = FORMATS
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Seifert matrices
    #[command(subcommand)]
    Mat(MatCommand),
    /// Pure braid words
    #[command(subcommand)]
    Braid(BraidCommand),
    /// Doubled string links
    #[command(subcommand)]
    Slink(SlinkCommand),
    /// Standardized Seifert matrices and disk-band forms
    #[command(subcommand)]
    Std(StdCommand),
    /// Seifert matrices of closed Artin braids
    #[command(subcommand)]
    Closure(ClosureCommand),
    /// Generated braid-word corpus
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand, Debug)]
enum MatCommand {
    /// Alexander polynomial, signature, determinant, Arf invariant, genus
    Invariants { file: PathBuf },
    /// Unimodular A with N = A M A^T standardized
    Standardize {
        file: PathBuf,
        /// Also write A to this file
        #[arg(long)]
        out_a: Option<PathBuf>,
        /// Also write N to this file
        #[arg(long)]
        out_n: Option<PathBuf>,
    },
    /// Column or row enlargement
    Enlarge {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Kind::Column)]
        kind: Kind,
        /// Comma-separated vector, one entry per row of M (e.g. --vector=1,0,-1)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        vector: Vec<i64>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        x: i64,
    },
    /// Remove enlargements until none is left
    Reduce { file: PathBuf },
    /// Bounded search for an S-equivalence witness
    Sequiv {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Column,
    Row,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Largest matrix size explored
    #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
    max_size: usize,
    /// Largest absolute entry explored
    #[arg(long, default_value_t = DEFAULT_MAX_ENTRY)]
    max_entry: u64,
    /// Number of matrices the search may visit
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    max_nodes: usize,
}

#[derive(Subcommand, Debug)]
enum BraidCommand {
    /// Pairwise linking numbers
    Lk { file: PathBuf },
    /// Whether the word is a product of conjugated delta relators
    DeltaTrivial { file: PathBuf },
    /// Whether two words are delta-move equivalent
    DeltaEquiv { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand, Debug)]
enum SlinkCommand {
    /// Pairwise linking numbers of the string-link strands
    Lk { file: PathBuf },
    /// Make the full braid linking matrix vanish by stabilizing multiplications
    Normalize { file: PathBuf },
    /// Whether two string links are delta-move equivalent
    DeltaEquiv { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand, Debug)]
enum StdCommand {
    /// Read a standardized matrix as a disk-band form
    ToDiskBand { file: PathBuf },
    /// Build the standardized matrix of a disk-band form
    FromDiskBand { file: PathBuf },
    /// Compare the disk-band data of two standardizations A1, A2 of M
    Witness { m: PathBuf, a1: PathBuf, a2: PathBuf },
}

#[derive(Subcommand, Debug)]
enum ClosureCommand {
    /// Seifert matrix of the closure
    Seifert { file: PathBuf },
    /// Alexander polynomial from the Seifert matrix and from the Burau matrix
    Alexander { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// Random knot-closure words with their invariants
    Generate {
        /// Largest strand count
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Largest word length
        #[arg(long, default_value_t = 12)]
        maxlen: usize,
        /// Number of distinct words
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Distinct,
    Equivalent,
    Unknown,
    InvalidInput,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Distinct => "distinct",
            Status::Equivalent => "equivalent",
            Status::Unknown => "unknown",
            Status::InvalidInput => "invalid-input",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok | Status::Distinct | Status::Equivalent => 0,
            Status::InvalidInput => 1,
            Status::Unknown => 2,
        }
    }
}

/// Result of one command: human-readable lines, then `key=value` lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub detail: Vec<String>,
    pub machine: Vec<(String, String)>,
}

impl Verdict {
    fn new(status: Status) -> Self {
        Verdict { status, detail: Vec::new(), machine: Vec::new() }
    }

    fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.detail.push(s.into());
        self
    }

    fn key(&mut self, k: &str, v: impl Display) -> &mut Self {
        self.machine.push((k.to_string(), v.to_string()));
        self
    }

    fn block(&mut self, title: &str, text: &str) -> &mut Self {
        self.line(format!("{title}:"));
        for l in text.lines() {
            self.line(format!("  {l}"));
        }
        self
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for l in &self.detail {
            s.push_str(l);
            s.push('\n');
        }
        s.push_str("---\n");
        s.push_str(&format!("status={}\n", self.status.as_str()));
        for (k, v) in &self.machine {
            s.push_str(&format!("{k}={v}\n"));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => Outcome { code: v.status.exit_code(), stdout: v.render(), stderr: String::new() },
        Err(e) => {
            let mut v = Verdict::new(Status::InvalidInput);
            v.key("error", &e);
            Outcome { code: 1, stdout: v.render(), stderr: format!("error: {e}\n") }
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, std::io::Error),
    Input(PathBuf, Error),
    Domain(Error),
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Input(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn load<T>(path: &Path, parse: impl Fn(&str) -> Result<T>) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    parse(&text).map_err(|e| CliError::Input(path.to_path_buf(), e))
}

fn load_seifert(path: &Path) -> CliResult<SeifertMatrix> {
    load(path, |t| validate(parse_matrix(t)?))
}

fn save(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn dispatch(cmd: Command) -> CliResult<Verdict> {
    match cmd {
        Command::Mat(c) => mat(c),
        Command::Braid(c) => braid(c),
        Command::Slink(c) => slink(c),
        Command::Std(c) => std_form(c),
        Command::Closure(c) => closure(c),
        Command::Corpus(c) => corpus(c),
    }
}

fn matrix_oneline(m: &IntMatrix) -> String {
    m.to_string()
}

fn add_invariants(v: &mut Verdict, inv: &Invariants) {
    v.line(format!("alexander: {}", inv.alexander.to_lo_coeffs()))
        .line(format!("signature: {}", inv.signature))
        .line(format!("determinant: {}", inv.determinant))
        .line(format!("arf: {}", inv.arf));
    v.key("alexander", inv.alexander.to_lo_coeffs())
        .key("signature", inv.signature)
        .key("determinant", &inv.determinant)
        .key("arf", inv.arf);
}

fn mat(cmd: MatCommand) -> CliResult<Verdict> {
    let mut v = Verdict::new(Status::Ok);
    match cmd {
        MatCommand::Invariants { file } => {
            let m = load_seifert(&file)?;
            add_invariants(&mut v, &m.invariants());
            v.line(format!("genus: {}", m.genus())).line("valid: true");
            v.key("genus", m.genus()).key("valid", true);
        }
        MatCommand::Standardize { file, out_a, out_n } => {
            let m = load_seifert(&file)?;
            let (a, n) = standardize(&m)?;
            let (ta, tn) = (format_matrix(&a), format_matrix(n.matrix()));
            if let Some(p) = out_a {
                save(&p, &ta)?;
            }
            if let Some(p) = out_n {
                save(&p, &tn)?;
            }
            v.block("A", &ta).block("N", &tn);
            v.key("a", matrix_oneline(&a)).key("n", matrix_oneline(n.matrix()));
        }
        MatCommand::Enlarge { file, kind, vector, x } => {
            let m = load_seifert(&file)?;
            let vec: Vec<BigInt> = vector.into_iter().map(BigInt::from).collect();
            let kind = match kind {
                Kind::Column => EnlargementKind::Column,
                Kind::Row => EnlargementKind::Row,
            };
            let e = m.enlarge(kind, &vec, &BigInt::from(x))?;
            v.block("enlarged", &format_matrix(e.matrix()));
            v.key("size", e.size()).key("matrix", matrix_oneline(e.matrix()));
        }
        MatCommand::Reduce { file } => {
            let mut m = load_seifert(&file)?;
            let mut steps = 0;
            while let Some(r) = m.find_reduction() {
                steps += 1;
                let kind = match r.kind {
                    EnlargementKind::Column => "column",
                    EnlargementKind::Row => "row",
                };
                v.line(format!(
                    "step {steps}: {kind} reduction at indices {} {}",
                    r.perm[m.size() - 2],
                    r.perm[m.size() - 1]
                ));
                m = r.reduced;
            }
            v.block("reduced", &format_matrix(m.matrix()));
            v.key("steps", steps).key("size", m.size()).key("matrix", matrix_oneline(m.matrix()));
        }
        MatCommand::Sequiv { first, second, budget } => {
            let m1 = load_seifert(&first)?;
            let m2 = load_seifert(&second)?;
            let budget = SearchBudget {
                max_size: budget.max_size,
                max_entry: budget.max_entry,
                max_nodes: budget.max_nodes,
            };
            match bounded_sequiv_search(&m1, &m2, budget) {
                SearchVerdict::Distinct(kind) => {
                    v.status = Status::Distinct;
                    v.line(format!("distinct ({kind} differs)"));
                    v.key("differs", kind);
                }
                SearchVerdict::Equivalent(moves) => {
                    v.status = Status::Equivalent;
                    v.line(format!("equivalent ({} move witness)", moves.len()));
                    for (i, mv) in moves.iter().enumerate() {
                        v.line(format!("  {}. {mv}", i + 1));
                    }
                    let list: Vec<String> = moves.iter().map(|m| m.to_string()).collect();
                    v.key("moves", moves.len()).key("witness", list.join("; "));
                }
                SearchVerdict::Unknown { explored } => {
                    v.status = Status::Unknown;
                    v.line(format!("unknown (explored {explored} matrices within budget)"));
                    v.key("explored", explored);
                }
            }
        }
    }
    Ok(v)
}

fn linking_lines(v: &mut Verdict, lk: &LinkingMatrix) {
    let mut any = false;
    for (i, j, x) in lk.entries() {
        if x != 0 {
            v.line(format!("lk({i},{j}) = {x}"));
            any = true;
        }
    }
    if !any {
        v.line("all pairwise linking numbers vanish");
    }
    v.key("linking", lk);
}

fn braid(cmd: BraidCommand) -> CliResult<Verdict> {
    let mut v = Verdict::new(Status::Ok);
    match cmd {
        BraidCommand::Lk { file } => {
            let w = load(&file, parse_pure_braid)?;
            linking_lines(&mut v, &w.linking_matrix());
        }
        BraidCommand::DeltaTrivial { file } => {
            let w = load(&file, parse_pure_braid)?;
            let t = is_delta_trivial(&w);
            v.line(format!("delta-trivial: {t}"));
            v.key("delta_trivial", t);
        }
        BraidCommand::DeltaEquiv { first, second } => {
            let a = load(&first, parse_pure_braid)?;
            let b = load(&second, parse_pure_braid)?;
            let eq = delta_equivalent(&a, &b)?;
            v.status = if eq { Status::Equivalent } else { Status::Distinct };
            v.line(if eq { "delta-equivalent" } else { "not delta-equivalent (linking numbers differ)" });
            v.key("delta_equivalent", eq);
        }
    }
    Ok(v)
}

fn slink(cmd: SlinkCommand) -> CliResult<Verdict> {
    let mut v = Verdict::new(Status::Ok);
    match cmd {
        SlinkCommand::Lk { file } => {
            let l = load(&file, parse_string_link)?;
            linking_lines(&mut v, &l.pairwise_linking());
        }
        SlinkCommand::Normalize { file } => {
            let l = load(&file, parse_string_link)?;
            let n = l.normalize_linking()?;
            let zero = n.braid().linking_matrix().is_zero();
            v.block("normalized", &format_string_link(&n));
            v.line(format!("braid linking matrix is zero: {zero}"));
            v.key("letters", n.braid().len()).key("braid_linking_zero", zero);
        }
        SlinkCommand::DeltaEquiv { first, second } => {
            let a = load(&first, parse_string_link)?;
            let b = load(&second, parse_string_link)?;
            let eq = delta_equivalent_links(&a, &b)?;
            v.status = if eq { Status::Equivalent } else { Status::Distinct };
            v.line(if eq {
                "delta-equivalent"
            } else {
                "not delta-equivalent (framings or linking numbers differ)"
            });
            v.key("delta_equivalent", eq);
        }
    }
    Ok(v)
}

fn std_form(cmd: StdCommand) -> CliResult<Verdict> {
    let mut v = Verdict::new(Status::Ok);
    match cmd {
        StdCommand::ToDiskBand { file } => {
            let n = load_seifert(&file)?;
            let d = to_disk_band(&n)?;
            v.block("disk band", &format_disk_band(&d));
            v.key("genus", d.genus());
        }
        StdCommand::FromDiskBand { file } => {
            let d = load(&file, parse_disk_band)?;
            let n = from_disk_band(&d);
            v.block("matrix", &format_matrix(n.matrix()));
            v.key("matrix", matrix_oneline(n.matrix()));
        }
        StdCommand::Witness { m, a1, a2 } => {
            let mm = load_seifert(&m)?;
            let a1 = load(&a1, parse_matrix)?;
            let a2 = load(&a2, parse_matrix)?;
            let w = standard_form_witness(&mm, &a1, &a2)?;
            v.block("C = A1 A2^-1", &format_matrix(&w.c));
            v.block("N1", &format_matrix(w.n1.matrix()));
            v.block("N2", &format_matrix(w.n2.matrix()));
            v.block("disk band of N1", &format_disk_band(&w.form1));
            v.block("disk band of C N2 C^T", &format_disk_band(&w.transported));
            v.line("C symplectic: true");
            v.line(format!("disk-band data agree: {}", w.forms_agree));
            v.line(format!("band string links delta-equivalent: {}", w.links_delta_equivalent));
            let framings: Vec<String> = w.framings().iter().map(|f| f.to_string()).collect();
            v.key("c", matrix_oneline(&w.c))
                .key("symplectic", true)
                .key("forms_agree", w.forms_agree)
                .key("links_delta_equivalent", w.links_delta_equivalent)
                .key("framings", framings.join(" "));
        }
    }
    Ok(v)
}

fn closure(cmd: ClosureCommand) -> CliResult<Verdict> {
    let mut v = Verdict::new(Status::Ok);
    match cmd {
        ClosureCommand::Seifert { file } => {
            let w = load(&file, parse_artin)?;
            let m = w.seifert_matrix()?;
            v.block("seifert matrix", &format_matrix(m.matrix()));
            v.key("size", m.size()).key("matrix", matrix_oneline(m.matrix()));
        }
        ClosureCommand::Alexander { file } => {
            let w = load(&file, parse_artin)?;
            let a = w.seifert_matrix()?.alexander();
            let b = w.burau_alexander()?;
            let agree = a == b;
            v.line(format!("seifert: {}", a.to_lo_coeffs()))
                .line(format!("burau: {}", b.to_lo_coeffs()))
                .line(format!("agree: {agree}"));
            v.key("seifert", a.to_lo_coeffs()).key("burau", b.to_lo_coeffs()).key("agree", agree);
        }
    }
    Ok(v)
}

fn corpus(cmd: CorpusCommand) -> CliResult<Verdict> {
    let CorpusCommand::Generate { n, maxlen, count, seed } = cmd;
    let mut v = Verdict::new(Status::Ok);
    let words: Vec<ArtinBraidWord> =
        generate_corpus(&CorpusConfig { max_strands: n, max_len: maxlen, count, seed });
    let mut disagreements = 0;
    v.line("n | word | alexander | signature | determinant | arf | burau agrees");
    for w in &words {
        let m = w.seifert_matrix()?;
        let inv = m.invariants();
        let agree = w.burau_alexander()? == inv.alexander;
        if !agree {
            disagreements += 1;
        }
        let word: Vec<String> = w.letters().iter().map(|x| x.to_string()).collect();
        v.line(format!(
            "{} | {} | {} | {} | {} | {} | {agree}",
            w.strands(),
            word.join(" "),
            inv.alexander.to_lo_coeffs(),
            inv.signature,
            inv.determinant,
            inv.arf
        ));
    }
    v.key("seed", seed).key("words", words.len()).key("disagreements", disagreements);
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn help_and_usage() {
        let o = run(["sequiv", "--help"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.contains("framings 0 -1"));
        let o = run(["sequiv", "mat"]);
        assert_eq!(o.code, 1);
        let o = run(["sequiv", "bogus"]);
        assert_eq!(o.code, 1);
        assert!(!o.stderr.is_empty());
    }

    #[test]
    fn missing_file_is_invalid_input() {
        let o = run(["sequiv", "mat", "invariants", "/nonexistent/m.mat"]);
        assert_eq!(o.code, 1);
        assert!(o.stderr.contains("/nonexistent/m.mat"));
        assert!(o.stdout.contains("status=invalid-input"));
    }

    #[test]
    fn verdict_rendering() {
        let mut v = Verdict::new(Status::Unknown);
        v.line("hello").key("x", 3);
        assert_eq!(v.render(), "hello\n---\nstatus=unknown\nx=3\n");
        assert_eq!(v.status.exit_code(), 2);
    }
}
