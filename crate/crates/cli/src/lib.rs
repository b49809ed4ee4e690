//! Command implementations behind the `foldcheck` binary.
//!
//! Every command turns one surface (or a pair of permutations for `render`)
//! into a [`Report`]: an exit status, a data document and diagnostics.
//! Nothing here touches stdout or stderr; `main` does the printing.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use foldcheck_core::circle::CircleError;
use foldcheck_core::colouring::ColouringError;
use foldcheck_core::perm::PermError;
use foldcheck_core::{
    bounded_components, builtin, colour_involutions, enumerate_foldings, find_folding,
    find_orientation, find_vertex_colourings, induced_edge_colouring, parse_surface,
    serialize_surface, validate, CircleRepresentation, Colour, CyclicOrder, FaceIndex, FoldError,
    FoldVerdict, Orientability, PairPartition, Permutation, Surface, SurfaceError,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NEGATIVE: u8 = 3;

/// File suffix picked up by batch mode.
pub const SURFACE_SUFFIX: &str = ".surface.json";

#[derive(Debug, Clone, Parser)]
#[command(name = "foldcheck", version, about = "Decide triangle-foldability of closed simplicial surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Surface file, or a directory of *.surface.json files for batch mode
    #[arg(conflicts_with = "builtin")]
    pub input: Option<PathBuf>,
    /// Use a builtin fixture: triangle, tetrahedron, octahedron, torus8
    #[arg(long)]
    pub builtin: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Write the data document here instead of stdout (a directory in batch mode)
    #[arg(long, short)]
    pub out: Option<PathBuf>,
    /// Also print a human-readable summary to stderr
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// List violated surface conditions
    Validate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Vertex colouring, induced edge colouring and colour involutions
    #[command(alias = "colour")]
    Color {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
        /// Report every colouring representative
        #[arg(long)]
        all: bool,
    },
    /// Decide foldability and print a verified witness
    Fold {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
        /// Cut the witness's cyclic order at this face
        #[arg(long)]
        base: Option<String>,
    },
    /// List folding orders with the smallest face first
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },
    /// Draw a circle representation as SVG
    Render {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
        /// Cyclic order in cycle notation, e.g. "(1,4,3,8,5,2,7,6)"
        #[arg(long, requires = "rho", conflicts_with_all = ["input", "builtin"])]
        sigma: Option<String>,
        /// Fix-point-free involution in cycle notation
        #[arg(long, requires = "sigma")]
        rho: Option<String>,
        /// Edge colour whose involution gives the chords (surface input)
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        colour: u8,
        /// Shade the bounded components
        #[arg(long)]
        components: bool,
    },
    /// Simplicial orientation or an odd cycle of faces
    Orient {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        common: Common,
    },
    /// Print a builtin fixture as a surface file
    Builtin {
        name: String,
        #[command(flatten)]
        common: Common,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Validate { common, .. }
            | Command::Color { common, .. }
            | Command::Fold { common, .. }
            | Command::Enumerate { common, .. }
            | Command::Render { common, .. }
            | Command::Orient { common, .. }
            | Command::Builtin { common, .. } => common,
        }
    }

    pub fn source(&self) -> Option<&Source> {
        match self {
            Command::Validate { source, .. }
            | Command::Color { source, .. }
            | Command::Fold { source, .. }
            | Command::Enumerate { source, .. }
            | Command::Render { source, .. }
            | Command::Orient { source, .. } => Some(source),
            Command::Builtin { .. } => None,
        }
    }

    /// Whether the input is a directory, i.e. batch mode.
    pub fn is_batch(&self) -> bool {
        self.source()
            .and_then(|s| s.input.as_deref())
            .is_some_and(Path::is_dir)
    }

    fn extension(&self) -> &'static str {
        match self {
            Command::Render { .. } => "svg",
            Command::Builtin { .. } => "surface.json",
            _ => "json",
        }
    }
}

/// A data document: JSON is pretty-printed, SVG is passed through.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Json(Value),
    Text(String),
}

impl Document {
    pub fn render(&self) -> String {
        match self {
            Document::Json(v) => {
                let mut s = serde_json::to_string_pretty(v).expect("json value");
                s.push('\n');
                s
            }
            Document::Text(t) => t.clone(),
        }
    }

    fn into_value(self) -> Value {
        match self {
            Document::Json(v) => v,
            Document::Text(t) => Value::String(t),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub exit: u8,
    pub document: Option<Document>,
    /// Lines for stderr.
    pub diagnostics: Vec<String>,
}

impl Report {
    fn data(exit: u8, value: Value) -> Report {
        Report {
            exit,
            document: Some(Document::Json(value)),
            diagnostics: Vec::new(),
        }
    }

    fn error(kind: &str, message: impl std::fmt::Display) -> Report {
        Report {
            exit: EXIT_INPUT,
            document: None,
            diagnostics: vec![format!("error: {kind}: {message}")],
        }
    }

    fn note(mut self, pretty: bool, text: String) -> Report {
        if pretty {
            self.diagnostics.extend(text.lines().map(str::to_string));
        }
        self
    }
}

fn fold_error(e: FoldError) -> Report {
    Report::error(e.kind(), e)
}

fn surface_error(e: SurfaceError) -> Report {
    Report::error(e.kind(), e)
}

fn colouring_error(e: ColouringError) -> Report {
    match e {
        ColouringError::Surface(s) => surface_error(s),
        other => Report::error("improper-colouring", other),
    }
}

fn perm_error(e: PermError) -> Report {
    Report::error("invalid-permutation", e)
}

fn circle_error(e: CircleError) -> Report {
    match e {
        CircleError::Perm(p) => perm_error(p),
        other => Report::error("invalid-circle", other),
    }
}

pub fn load_surface(path: &Path) -> Result<Surface, Report> {
    let text = fs::read_to_string(path).map_err(|e| Report::error("io", format!("{}: {e}", path.display())))?;
    parse_surface(&text).map_err(surface_error)
}

fn resolve(source: &Source) -> Result<Surface, Report> {
    match (&source.input, &source.builtin) {
        (_, Some(name)) => builtin(name).map_err(surface_error),
        (Some(path), None) => load_surface(path),
        (None, None) => Err(Report::error("usage", "give a surface file or --builtin NAME")),
    }
}

/// Runs a command on a single surface, ignoring the input source fields of
/// `command`.
pub fn run_on(command: &Command, s: &Surface) -> Report {
    let pretty = command.common().pretty;
    match command {
        Command::Validate { .. } => validate_report(s, pretty),
        Command::Color { all, .. } => colour_report(s, *all, pretty),
        Command::Fold { base, .. } => fold_report(s, base.as_deref(), pretty),
        Command::Enumerate { limit, .. } => enumerate_report(s, *limit, pretty),
        Command::Render {
            colour, components, ..
        } => render_surface(s, *colour, *components),
        Command::Orient { .. } => orient_report(s, pretty),
        Command::Builtin { .. } => Report {
            exit: EXIT_OK,
            document: Some(Document::Text(serialize_surface(s))),
            diagnostics: Vec::new(),
        },
    }
}

/// Runs a parsed command line. Directory inputs go through batch mode.
pub fn run(cli: &Cli) -> Report {
    let command = &cli.command;
    if let Command::Builtin { name, .. } = command {
        return match builtin(name) {
            Ok(s) => run_on(command, &s),
            Err(e) => surface_error(e),
        };
    }
    if let Command::Render {
        sigma: Some(sigma),
        rho: Some(rho),
        components,
        ..
    } = command
    {
        return render_permutations(sigma, rho, *components);
    }
    let source = command.source().expect("surface command");
    if let Some(dir) = source.input.as_deref().filter(|p| p.is_dir()) {
        return run_batch(command, dir, threads_from_env());
    }
    match resolve(source) {
        Ok(s) => run_on(command, &s),
        Err(r) => r,
    }
}

fn validate_report(s: &Surface, pretty: bool) -> Report {
    let violations = validate(s);
    let mut table = String::new();
    for v in &violations {
        let _ = writeln!(table, "condition {} {}: {}", v.condition, v.element, v.detail);
    }
    if violations.is_empty() {
        table.push_str("valid\n");
    }
    let exit = if violations.is_empty() { EXIT_OK } else { EXIT_NEGATIVE };
    Report::data(exit, json!({ "violations": violations })).note(pretty, table)
}

fn colour_document(s: &Surface, cv: &foldcheck_core::VertexColouring) -> Result<Value, Report> {
    let ce = induced_edge_colouring(s, cv).map_err(colouring_error)?;
    let mut doc = json!({ "vertex_colouring": cv, "edge_colouring": ce });
    if s.is_closed().map_err(surface_error)? {
        let invs = colour_involutions(s, &ce).map_err(colouring_error)?;
        let table: serde_json::Map<String, Value> = invs
            .iter()
            .map(|inv| (inv.colour.get().to_string(), json!(inv.pairs())))
            .collect();
        doc["involutions"] = Value::Object(table);
    }
    Ok(doc)
}

fn colour_report(s: &Surface, all: bool, pretty: bool) -> Report {
    let colourings = find_vertex_colourings(s);
    if colourings.is_empty() {
        return Report::data(EXIT_NEGATIVE, json!({ "reason": "no-vertex-colouring" }))
            .note(pretty, "no vertex-3-colouring\n".into());
    }
    let mut table = String::new();
    for (k, cv) in colourings.iter().enumerate() {
        let classes: Vec<String> = cv
            .classes()
            .iter()
            .map(|c| format!("{{{}}}", c.iter().cloned().collect::<Vec<_>>().join(",")))
            .collect();
        let _ = writeln!(table, "colouring {}: {}", k + 1, classes.join(" "));
    }
    let docs: Result<Vec<Value>, Report> = if all {
        colourings.iter().map(|cv| colour_document(s, cv)).collect()
    } else {
        colour_document(s, &colourings[0]).map(|d| vec![d])
    };
    match docs {
        Ok(mut docs) if !all => Report::data(EXIT_OK, docs.remove(0)).note(pretty, table),
        Ok(docs) => Report::data(EXIT_OK, json!({ "colourings": docs })).note(pretty, table),
        Err(r) => r,
    }
}

fn fold_report(s: &Surface, base: Option<&str>, pretty: bool) -> Report {
    let verdict = match find_folding(s) {
        Ok(v) => v,
        Err(e) => return fold_error(e),
    };
    let mut doc = verdict.to_json();
    let mut table = String::new();
    match &verdict {
        FoldVerdict::Foldable(f) => {
            let mut order = f.order.clone();
            if let Some(b) = base {
                match foldcheck_core::fold::rotate_order(&f.order, b) {
                    Some(rotated) => order = rotated,
                    None => return Report::error("unknown-face", format!("base face {b:?} is not a face")),
                }
                doc["witness"] = json!(order);
            }
            let _ = writeln!(table, "foldable\norder: {}\noracles: {}", order.join(" "), f.oracles);
            Report::data(EXIT_OK, doc).note(pretty, table)
        }
        FoldVerdict::Unfoldable(r) => {
            let _ = writeln!(
                table,
                "unfoldable: {}\nsearch nodes: {}",
                r.reason.as_str(),
                r.search_nodes
            );
            Report::data(EXIT_NEGATIVE, doc).note(pretty, table)
        }
    }
}

fn enumerate_report(s: &Surface, limit: usize, pretty: bool) -> Report {
    let colourings = find_vertex_colourings(s);
    let Some(cv) = colourings.first() else {
        if let Err(e) = s.require_closed() {
            return surface_error(e);
        }
        return Report::data(
            EXIT_NEGATIVE,
            json!({ "reason": "no-vertex-colouring", "witnesses": [] }),
        );
    };
    match enumerate_foldings(s, cv, limit) {
        Ok(orders) => {
            let mut table = String::new();
            for o in &orders {
                let _ = writeln!(table, "{}", o.join(" "));
            }
            let _ = writeln!(table, "{} order(s)", orders.len());
            Report::data(EXIT_OK, json!({ "colouring": cv, "witnesses": orders })).note(pretty, table)
        }
        Err(e) => fold_error(e),
    }
}

fn orient_report(s: &Surface, pretty: bool) -> Report {
    match find_orientation(s) {
        Ok(Orientability::Orientable(o)) => {
            let positive: Vec<String> = o.positive_faces().into_iter().collect();
            Report::data(EXIT_OK, json!({ "orientation": o }))
                .note(pretty, format!("orientable; positive faces: {}\n", positive.join(" ")))
        }
        Ok(Orientability::NonOrientable(cycle)) => {
            let text = format!("no orientation; odd cycle: {}\n", cycle.0.join(" "));
            Report::data(EXIT_NEGATIVE, json!({ "orientation": null, "odd_cycle": cycle }))
                .note(pretty, text)
        }
        Err(e) => surface_error(e),
    }
}

fn svg_report(cr: &CircleRepresentation, sigma: &CyclicOrder, rho: &Permutation, components: bool) -> Report {
    let report = if components {
        match bounded_components(sigma, rho) {
            Ok(r) => Some(r),
            Err(e) => return circle_error(e),
        }
    } else {
        None
    };
    Report {
        exit: EXIT_OK,
        document: Some(Document::Text(cr.to_svg(report.as_ref()))),
        diagnostics: Vec::new(),
    }
}

fn render_permutations(sigma: &str, rho: &str, components: bool) -> Report {
    let sigma_perm = match sigma.parse::<Permutation>() {
        Ok(p) => p,
        Err(e) => return perm_error(e),
    };
    let degree = sigma_perm.degree();
    let sigma = match CyclicOrder::new(sigma_perm) {
        Ok(c) => c,
        Err(e) => return perm_error(e),
    };
    let rho = match Permutation::parse_cycles(rho, degree) {
        Ok(p) => p,
        Err(e) => return perm_error(e),
    };
    let chords = match PairPartition::from_involution(&rho) {
        Ok(p) => p,
        Err(e) => return perm_error(e),
    };
    match CircleRepresentation::new(&sigma, &chords) {
        Ok(cr) => svg_report(&cr, &sigma, &rho, components),
        Err(e) => circle_error(e),
    }
}

fn render_surface(s: &Surface, colour: u8, components: bool) -> Report {
    let folding = match find_folding(s) {
        Ok(FoldVerdict::Foldable(f)) => f,
        Ok(FoldVerdict::Unfoldable(r)) => {
            return Report {
                exit: EXIT_NEGATIVE,
                document: None,
                diagnostics: vec![format!("error: unfoldable: {}", r.reason.as_str())],
            }
        }
        Err(e) => return fold_error(e),
    };
    let index = FaceIndex::new(s.face_ids());
    let invs = match induced_edge_colouring(s, &folding.colouring)
        .and_then(|ce| colour_involutions(s, &ce))
    {
        Ok(invs) => invs,
        Err(e) => return colouring_error(e),
    };
    let wanted = Colour::new(colour).expect("colour range checked by the parser");
    let inv = invs.iter().find(|i| i.colour == wanted).expect("three colours");
    let rho = inv.to_permutation(&index);
    let chords = PairPartition::from_involution(&rho).expect("colour involution");
    match CircleRepresentation::new(&folding.cyclic, &chords) {
        Ok(cr) => {
            let cr = cr.with_labels(index.ids().to_vec());
            svg_report(&cr, &folding.cyclic, &rho, components)
        }
        Err(e) => circle_error(e),
    }
}

/// Worker count from `FOLDCHECK_THREADS`; `Some(0)` means sequential and
/// `None` leaves the choice to rayon.
pub fn threads_from_env() -> Option<usize> {
    std::env::var("FOLDCHECK_THREADS").ok()?.trim().parse().ok()
}

/// Surface files in `dir`, sorted by file name.
pub fn batch_inputs(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && p.file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.ends_with(SURFACE_SUFFIX))
        })
        .collect();
    files.sort();
    Ok(files)
}

/// Writes `contents` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let name = path.file_name().and_then(|n| n.to_str()).unwrap_or("output");
    let tmp = dir.join(format!(".{name}.tmp-{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}

/// Runs `command` on every surface file in `dir`. The aggregate lists files
/// in name order regardless of completion order. With `--out DIR`, each
/// file's document is also written to `DIR/<stem>.<ext>`.
pub fn run_batch(command: &Command, dir: &Path, threads: Option<usize>) -> Report {
    let files = match batch_inputs(dir) {
        Ok(f) => f,
        Err(e) => return Report::error("io", format!("{}: {e}", dir.display())),
    };
    let out_dir = command.common().out.clone();
    if let Some(out) = &out_dir {
        if let Err(e) = fs::create_dir_all(out) {
            return Report::error("io", format!("{}: {e}", out.display()));
        }
    }
    let process = |path: &PathBuf| -> (String, Report) {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let report = match load_surface(path) {
            Ok(s) => run_on(command, &s),
            Err(r) => r,
        };
        if let (Some(out), Some(doc)) = (&out_dir, &report.document) {
            let stem = name.strip_suffix(SURFACE_SUFFIX).unwrap_or(&name);
            let target = out.join(format!("{stem}.{}", command.extension()));
            if let Err(e) = write_atomic(&target, &doc.render()) {
                return (name, Report::error("io", format!("{}: {e}", target.display())));
            }
        }
        (name, report)
    };
    let results: Vec<(String, Report)> = match threads {
        Some(0) => files.iter().map(process).collect(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| files.par_iter().map(process).collect()),
            Err(e) => return Report::error("threads", e),
        },
        None => files.par_iter().map(process).collect(),
    };

    let exit = results.iter().map(|(_, r)| r.exit).max().unwrap_or(EXIT_OK);
    let mut diagnostics = Vec::new();
    let entries: Vec<Value> = results
        .into_iter()
        .map(|(file, r)| {
            diagnostics.extend(r.diagnostics.iter().map(|d| format!("{file}: {d}")));
            let output = r.document.map(Document::into_value).unwrap_or(Value::Null);
            json!({ "file": file, "exit": r.exit, "output": output })
        })
        .collect();
    Report {
        exit,
        document: Some(Document::Json(json!({ "results": entries }))),
        diagnostics,
    }
}
