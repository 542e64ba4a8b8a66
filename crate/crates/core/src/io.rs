//! Serialization, caching and text reports.
//!
//! Every writer here is byte-deterministic: rows come out in canonical id
//! order and numbers use fixed formats.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::contextuality::{analyze, wa_symbol, ContextError, ContextSet, ProofReport, WaSymbol};
use crate::geometry::{Geometry, GeometryError, LineId, PlaneClass, PlaneId};
use crate::pauli::{Observable, ObservableType, Sign};
use crate::pentads::{
    enumerate_pentads, par_enumerate_pentads, pentad_to_config, pentad_to_pentagram, Pentad, PentadError,
};
use crate::taxonomy::{census_signatures, Census, ConfigSignature};

/// Version tag written into cache headers.
pub const CACHE_VERSION: &str = "fano-pentad-cache/1";

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Context(#[from] ContextError),
    #[error(transparent)]
    Pentad(#[from] PentadError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("thread pool: {0}")]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
    #[error("invalid cache: {0}")]
    Cache(String),
    #[error("unknown pentad id {0}")]
    UnknownPentad(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    Points,
    Lines,
    Planes,
    Pentads,
}

fn words(points: &[Observable]) -> String {
    points.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" ")
}

fn coords(points: &[Observable]) -> String {
    points.iter().map(|o| o.coords_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct PointJson {
    id: u8,
    word: Observable,
    #[serde(rename = "type")]
    kind: ObservableType,
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<String>,
}

#[derive(Serialize)]
struct LineJson<'a> {
    id: LineId,
    points: &'a [Observable],
    sign: Sign,
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<String>,
}

#[derive(Serialize)]
struct PlaneJson<'a> {
    id: PlaneId,
    points: &'a [Observable],
    sign: Sign,
    class: PlaneClass,
    b_line: LineId,
    #[serde(skip_serializing_if = "Option::is_none")]
    coords: Option<String>,
}

#[derive(Serialize)]
struct PentadJson<'a> {
    id: usize,
    planes: &'a [PlaneId; 5],
}

/// Writes one table in canonical order and returns the number of rows.
/// `pentads` is needed only for [`TableKind::Pentads`].
pub fn write_table<W: Write>(
    geom: &Geometry,
    pentads: &[Pentad],
    kind: TableKind,
    format: Format,
    with_coords: bool,
    mut out: W,
) -> Result<usize, Error> {
    let opt = |f: &dyn Fn() -> String| with_coords.then(f);
    let count = match (kind, format) {
        (TableKind::Points, Format::Json) => {
            let rows: Vec<PointJson> = Observable::all()
                .map(|o| PointJson {
                    id: o.id(),
                    word: o,
                    kind: o.observable_type(),
                    coords: opt(&|| o.coords_string()),
                })
                .collect();
            write_json_lines(&mut out, &rows)?
        }
        (TableKind::Lines, Format::Json) => {
            let rows: Vec<LineJson> = geom
                .lines()
                .iter()
                .map(|l| LineJson { id: l.id, points: &l.points, sign: l.sign, coords: opt(&|| coords(&l.points)) })
                .collect();
            write_json_lines(&mut out, &rows)?
        }
        (TableKind::Planes, Format::Json) => {
            let rows: Vec<PlaneJson> = geom
                .planes()
                .iter()
                .map(|p| PlaneJson {
                    id: p.id,
                    points: &p.points,
                    sign: p.sign,
                    class: p.class,
                    b_line: p.b_line,
                    coords: opt(&|| coords(&p.points)),
                })
                .collect();
            write_json_lines(&mut out, &rows)?
        }
        (TableKind::Pentads, Format::Json) => {
            let rows: Vec<PentadJson> =
                pentads.iter().enumerate().map(|(id, p)| PentadJson { id, planes: p.planes() }).collect();
            write_json_lines(&mut out, &rows)?
        }
        (kind, Format::Csv) => write_table_csv(geom, pentads, kind, with_coords, &mut out)?,
    };
    out.flush()?;
    Ok(count)
}

/// A JSON array with one element per line.
fn write_json_lines<W: Write, T: Serialize>(out: &mut W, rows: &[T]) -> Result<usize, Error> {
    writeln!(out, "[")?;
    for (i, row) in rows.iter().enumerate() {
        serde_json::to_writer(&mut *out, row)?;
        writeln!(out, "{}", if i + 1 < rows.len() { "," } else { "" })?;
    }
    writeln!(out, "]")?;
    Ok(rows.len())
}

fn write_table_csv<W: Write>(
    geom: &Geometry,
    pentads: &[Pentad],
    kind: TableKind,
    with_coords: bool,
    out: &mut W,
) -> Result<usize, Error> {
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = match kind {
        TableKind::Points => vec!["id", "word", "type"],
        TableKind::Lines => vec!["id", "points", "sign"],
        TableKind::Planes => vec!["id", "points", "sign", "class", "b_line"],
        TableKind::Pentads => vec!["id", "planes"],
    };
    if with_coords && kind != TableKind::Pentads {
        header.push("coords");
    }
    w.write_record(&header)?;
    let mut n = 0;
    let mut emit = |mut rec: Vec<String>, pts: &[Observable]| -> Result<(), Error> {
        if with_coords && kind != TableKind::Pentads {
            rec.push(coords(pts));
        }
        w.write_record(&rec)?;
        n += 1;
        Ok(())
    };
    match kind {
        TableKind::Points => {
            for o in Observable::all() {
                emit(vec![o.id().to_string(), o.to_string(), o.observable_type().to_string()], &[o])?;
            }
        }
        TableKind::Lines => {
            for l in geom.lines() {
                emit(vec![l.id.to_string(), words(&l.points), l.sign.to_string()], &l.points)?;
            }
        }
        TableKind::Planes => {
            for p in geom.planes() {
                emit(
                    vec![
                        p.id.to_string(),
                        words(&p.points),
                        p.sign.to_string(),
                        p.class.to_string(),
                        p.b_line.to_string(),
                    ],
                    &p.points,
                )?;
            }
        }
        TableKind::Pentads => {
            for (id, p) in pentads.iter().enumerate() {
                let planes = p.planes().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
                emit(vec![id.to_string(), planes], &[])?;
            }
        }
    }
    w.flush()?;
    Ok(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorInfo {
    pub pentads: usize,
    /// Whether records carry the derived pentagram and configuration.
    pub derived: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PentagramRecord {
    pub edges: Vec<[Observable; 4]>,
    pub negative_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub contexts: Vec<[Observable; 3]>,
    pub negative_contexts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub id: usize,
    pub planes: [PlaneId; 5],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pentagram: Option<PentagramRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigRecord>,
}

impl CacheRecord {
    pub fn new(geom: &Geometry, id: usize, pentad: &Pentad, derived: bool) -> Result<Self, Error> {
        let (pentagram, config) = if derived {
            let g = pentad_to_pentagram(pentad)?;
            let c = pentad_to_config(geom, pentad)?;
            (
                Some(PentagramRecord { edges: g.edges().to_vec(), negative_edges: g.negative_edges() }),
                Some(ConfigRecord { contexts: c.contexts().to_vec(), negative_contexts: c.negative_contexts() }),
            )
        } else {
            (None, None)
        };
        Ok(CacheRecord { id, planes: *pentad.planes(), pentagram, config })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: String,
    pub generator: GeneratorInfo,
    pub records: Vec<CacheRecord>,
}

impl CacheFile {
    pub fn build(geom: &Geometry, pentads: &[Pentad], derived: bool) -> Result<Self, Error> {
        use rayon::prelude::*;
        let records = pentads
            .par_iter()
            .enumerate()
            .map(|(id, p)| CacheRecord::new(geom, id, p, derived))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(CacheFile {
            version: CACHE_VERSION.to_string(),
            generator: GeneratorInfo { pentads: pentads.len(), derived },
            records,
        })
    }

    /// Writes the header, then one record per line.
    pub fn write<W: Write>(&self, mut out: W) -> Result<(), Error> {
        write!(out, "{{\"version\":")?;
        serde_json::to_writer(&mut out, &self.version)?;
        write!(out, ",\"generator\":")?;
        serde_json::to_writer(&mut out, &self.generator)?;
        writeln!(out, ",\"records\":[")?;
        for (i, r) in self.records.iter().enumerate() {
            serde_json::to_writer(&mut out, r)?;
            writeln!(out, "{}", if i + 1 < self.records.len() { "," } else { "" })?;
        }
        writeln!(out, "]}}")?;
        out.flush()?;
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<(), Error> {
        self.write(BufWriter::new(File::create(path)?))
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let cache: CacheFile = serde_json::from_reader(BufReader::new(File::open(path)?))?;
        if cache.version != CACHE_VERSION {
            return Err(Error::Cache(format!("version {:?}, expected {CACHE_VERSION:?}", cache.version)));
        }
        if cache.generator.pentads != cache.records.len() {
            return Err(Error::Cache(format!(
                "header announces {} records, file has {}",
                cache.generator.pentads,
                cache.records.len()
            )));
        }
        Ok(cache)
    }

    /// Rebuilds the pentads, checking ids and any derived fields.
    pub fn pentads(&self, geom: &Geometry) -> Result<Vec<Pentad>, Error> {
        use rayon::prelude::*;
        self.records
            .par_iter()
            .enumerate()
            .map(|(i, r)| {
                if r.id != i {
                    return Err(Error::Cache(format!("record {i} has id {}", r.id)));
                }
                let p = Pentad::from_planes(geom, r.planes)?;
                if r.pentagram.is_some() || r.config.is_some() {
                    let fresh = CacheRecord::new(geom, i, &p, true)?;
                    let consistent = r.pentagram.as_ref().is_none_or(|g| Some(g) == fresh.pentagram.as_ref())
                        && r.config.as_ref().is_none_or(|c| Some(c) == fresh.config.as_ref());
                    if !consistent {
                        return Err(Error::Cache(format!("record {i}: derived data does not match its planes")));
                    }
                }
                Ok(p)
            })
            .collect()
    }
}

/// Geometry, every pentad, and every pentad's signature.
#[derive(Debug, Clone)]
pub struct Pipeline {
    pub geometry: Geometry,
    pub pentads: Vec<Pentad>,
    pub signatures: Vec<ConfigSignature>,
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Error> {
    match threads {
        Some(n) => Ok(rayon::ThreadPoolBuilder::new().num_threads(n).build()?.install(f)),
        None => Ok(f()),
    }
}

impl Pipeline {
    /// Single-threaded reference run.
    pub fn compute_sequential() -> Result<Self, Error> {
        let geometry = Geometry::new()?;
        let pentads = enumerate_pentads(&geometry);
        let signatures = with_threads(Some(1), || census_signatures(&geometry, &pentads))??;
        Ok(Pipeline { geometry, pentads, signatures })
    }

    pub fn compute(threads: Option<usize>) -> Result<Self, Error> {
        with_threads(threads, || {
            let geometry = Geometry::new()?;
            let pentads = par_enumerate_pentads(&geometry);
            let signatures = census_signatures(&geometry, &pentads)?;
            Ok(Pipeline { geometry, pentads, signatures })
        })?
    }

    pub fn from_cache(cache: &CacheFile, threads: Option<usize>) -> Result<Self, Error> {
        with_threads(threads, || {
            let geometry = Geometry::new()?;
            let pentads = cache.pentads(&geometry)?;
            let signatures = census_signatures(&geometry, &pentads)?;
            Ok(Pipeline { geometry, pentads, signatures })
        })?
    }

    /// Reads the cache at `path` if it exists; otherwise computes and writes it.
    pub fn load_or_build(path: Option<&Path>, threads: Option<usize>, derived: bool) -> Result<Self, Error> {
        match path {
            Some(p) if p.exists() => Self::from_cache(&CacheFile::load(p)?, threads),
            Some(p) => {
                let run = Self::compute(threads)?;
                with_threads(threads, || run.to_cache(derived))??.save(p)?;
                Ok(run)
            }
            None => Self::compute(threads),
        }
    }

    pub fn to_cache(&self, derived: bool) -> Result<CacheFile, Error> {
        CacheFile::build(&self.geometry, &self.pentads, derived)
    }

    pub fn census(&self) -> Census {
        Census::from_signatures(&self.signatures)
    }

    pub fn pentad(&self, id: usize) -> Result<&Pentad, Error> {
        self.pentads.get(id).ok_or(Error::UnknownPentad(id))
    }
}

pub const CENSUS_CSV_HEADER: [&str; 16] = [
    "type",
    "count",
    "C-",
    "O_A",
    "O_B",
    "O_C",
    "F-",
    "Fa",
    "Fb",
    "Fc",
    "P_C-",
    "P_OA",
    "P_OB",
    "P_OC",
    "A_on_neg",
    "example_pentad",
];

pub fn write_census_csv<W: Write>(census: &Census, out: W) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CENSUS_CSV_HEADER)?;
    for r in &census.records {
        let p = &r.signature.params;
        let g = &r.signature.pentagram;
        let fields = [
            r.ordinal,
            r.multiplicity,
            p.c_minus,
            p.o_a,
            p.o_b,
            p.o_c,
            p.f_minus,
            p.f_a,
            p.f_b,
            p.f_c,
            g.negative_edges,
            g.o_a,
            g.o_b,
            g.o_c,
            g.a_on_negative,
            r.example_pentad,
        ];
        w.write_record(fields.iter().map(|n| n.to_string()))?;
    }
    w.flush()?;
    Ok(())
}

/// Context file: `{"contexts": [["XXI", "YYI", "ZZI"], …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContextFile {
    pub contexts: Vec<Vec<String>>,
}

impl ContextFile {
    pub fn parse(text: &str) -> Result<ContextSet, Error> {
        let file: ContextFile = serde_json::from_str(text)?;
        Ok(ContextSet::from_words(&file.contexts)?)
    }

    pub fn from_set(cs: &ContextSet) -> Self {
        ContextFile { contexts: cs.contexts().iter().map(|c| c.iter().map(|o| o.to_string()).collect()).collect() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verification {
    pub report: ProofReport,
    pub symbol: String,
    #[serde(skip)]
    pub wa: WaSymbol,
}

pub fn verify(cs: &ContextSet) -> Verification {
    let wa = wa_symbol(cs);
    Verification { report: analyze(cs), symbol: wa.to_string(), wa }
}

pub fn render_verification(cs: &ContextSet, v: &Verification) -> String {
    let mut s = String::new();
    for (i, (ctx, check)) in cs.contexts().iter().zip(&v.report.contexts).enumerate() {
        let sign = check.sign.map_or("?".to_string(), |s| s.to_string());
        let mut flags = Vec::new();
        if !check.commuting {
            flags.push("non-commuting");
        }
        if !check.closed {
            flags.push("not closed");
        }
        let flags = if flags.is_empty() { String::new() } else { format!("  [{}]", flags.join(", ")) };
        s.push_str(&format!("context {i:>3}  {:>2}  {}{flags}\n", sign, words(ctx)));
    }
    s.push_str(&format!("observables: {}\n", v.report.occurrences.len()));
    s.push_str(&format!("negative contexts: {}\n", v.report.negative_count));
    s.push_str(&format!("all occurrences even: {}\n", v.report.all_even));
    s.push_str(&format!("symbol: {}\n", v.symbol));
    for d in &v.report.defects {
        s.push_str(&format!("defect: {d}\n"));
    }
    s.push_str(&format!("verdict: {}\n", v.report.verdict));
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum View {
    Planes,
    Pentagram,
    Config,
}

fn show_obs(o: Observable, with_coords: bool) -> String {
    if with_coords {
        format!("{o}{}", o.coords_string())
    } else {
        o.to_string()
    }
}

fn show_list(points: &[Observable], with_coords: bool) -> String {
    points.iter().map(|&o| show_obs(o, with_coords)).collect::<Vec<_>>().join(" ")
}

/// Pretty-prints one view of a pentad.
pub fn render_pentad(
    geom: &Geometry,
    id: usize,
    pentad: &Pentad,
    view: View,
    with_coords: bool,
) -> Result<String, Error> {
    let mut s = format!("pentad {id}\n");
    match view {
        View::Planes => {
            for (k, &pid) in pentad.planes().iter().enumerate() {
                let plane = geom.plane(pid)?;
                let line = geom.line(pentad.distinguished_line(k))?;
                s.push_str(&format!(
                    "plane {:>3}  {}  class {:<8}  points {}\n           distinguished line {}  shared {}\n",
                    pid,
                    plane.sign,
                    plane.class.to_string(),
                    show_list(&plane.points, with_coords),
                    show_list(&line.points, with_coords),
                    show_list(&pentad.shared_points(k), with_coords),
                ));
            }
        }
        View::Pentagram => {
            let g = pentad_to_pentagram(pentad)?;
            for (edge, sign) in g.edges().iter().zip(g.edge_signs()) {
                s.push_str(&format!("edge  {sign}  {}\n", show_list(edge, with_coords)));
            }
            s.push_str(&format!("negative edges: {}\n", g.negative_edges()));
        }
        View::Config => {
            let c = pentad_to_config(geom, pentad)?;
            s.push_str(&format!("observables ({}):\n", c.observables().len()));
            for &o in c.observables() {
                let n = c.contexts().iter().filter(|ctx| ctx.contains(&o)).count();
                s.push_str(&format!("  {}  type {}  on {n} contexts\n", show_obs(o, with_coords), o.observable_type()));
            }
            s.push_str(&format!("contexts ({}):\n", c.contexts().len()));
            for (ctx, sign) in c.contexts().iter().zip(c.context_signs()) {
                s.push_str(&format!("  {sign}  {}\n", show_list(ctx, with_coords)));
            }
            s.push_str(&format!("negative contexts: {}\n", c.negative_contexts()));
            s.push_str(&format!("symbol: {}\n", wa_symbol(&c.to_context_set())));
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn context_file_parsing() {
        let cs = ContextFile::parse(r#"{"contexts": [["XXI","YYI","ZZI"]]}"#).unwrap();
        assert_eq!(cs.len(), 1);
        let v = verify(&cs);
        assert_eq!(v.report.negative_count, 1);
        assert!(matches!(ContextFile::parse(r#"{"contexts": [["QXI"]]}"#), Err(Error::Context(_))));
        assert!(matches!(ContextFile::parse(r#"{"ctx": []}"#), Err(Error::Json(_))));
        let round = ContextFile::parse(&serde_json::to_string(&ContextFile::from_set(&cs)).unwrap()).unwrap();
        assert_eq!(round, cs);
    }

    #[test]
    fn table_exports_have_expected_rows() {
        let g = Geometry::new().unwrap();
        let mut buf = Vec::new();
        assert_eq!(write_table(&g, &[], TableKind::Points, Format::Csv, false, &mut buf).unwrap(), 63);
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("id,word,type"));
        assert_eq!(text.lines().nth(1), Some("1,IIX,A"));
        assert_eq!(text.lines().count(), 64);

        let mut buf = Vec::new();
        assert_eq!(write_table(&g, &[], TableKind::Planes, Format::Csv, false, &mut buf).unwrap(), 135);
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("id,points,sign,class,b_line"));

        let mut buf = Vec::new();
        assert_eq!(write_table(&g, &[], TableKind::Lines, Format::Json, true, &mut buf).unwrap(), 315);
        let rows: Vec<serde_json::Value> = serde_json::from_slice(&buf).unwrap();
        assert_eq!(rows.len(), 315);
        assert_eq!(rows[0]["points"], serde_json::json!(["IIX", "IXI", "IXX"]));
        assert_eq!(rows[0]["coords"], "(0,0,0,0,0,1) (0,0,0,0,1,0) (0,0,0,0,1,1)");
    }

    #[test]
    fn cache_round_trip_small() {
        let g = Geometry::new().unwrap();
        let search = crate::pentads::PentadSearch::new(&g);
        let pentads = search.pentads_from_root(PlaneId(0));
        let cache = CacheFile::build(&g, &pentads, true).unwrap();
        let mut buf = Vec::new();
        cache.write(&mut buf).unwrap();
        let back: CacheFile = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, cache);
        assert_eq!(back.pentads(&g).unwrap(), pentads);
        let r = &back.records[0];
        assert_eq!(r.pentagram.as_ref().unwrap().edges.len(), 5);
        assert_eq!(r.config.as_ref().unwrap().contexts.len(), 30);

        let mut tampered = back.clone();
        tampered.records[0].config.as_mut().unwrap().negative_contexts += 2;
        assert!(matches!(tampered.pentads(&g), Err(Error::Cache(_))));

        let lean = CacheFile::build(&g, &pentads, false).unwrap();
        let mut buf = Vec::new();
        lean.write(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(!text.contains("pentagram"));
        assert!(text.lines().nth(1).unwrap().starts_with("{\"id\":0,\"planes\":["));
    }
}
