//! OEIS b-files: parsing, an immutable on-disk cache and an optional fetch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use riordan_core::families;
use riordan_core::{BigInt, Rational};

use crate::error::{CliError, CliResult};

pub const CACHE_ENV: &str = "RIORDAN_OEIS_CACHE";
const FETCH_TIMEOUT: Duration = Duration::from_secs(30);
/// Largest triangle (in rows) built for a comparison.
const MAX_ROWS: usize = 40;
const MAX_TERMS: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub terms: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn values(&self) -> Vec<BigInt> {
        self.terms.iter().map(|(_, v)| v.clone()).collect()
    }
}

/// `A` followed by six digits.
pub fn validate_id(id: &str) -> CliResult<()> {
    let ok = id.len() == 7 && id.starts_with('A') && id[1..].bytes().all(|b| b.is_ascii_digit());
    if ok {
        Ok(())
    } else {
        Err(CliError::Usage(format!("'{id}' is not an OEIS id (A followed by six digits)")))
    }
}

/// Lines of `index value`; blank lines and `#` comments are skipped.
pub fn parse(id: &str, text: &str) -> CliResult<BFile> {
    let mut terms: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |what: &str| CliError::Parse(format!("{id} line {}: {what}: '{line}'", lineno + 1));
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad("expected 'index value'"));
        };
        let index: i64 = index.parse().map_err(|_| bad("bad index"))?;
        let value: BigInt = value.parse().map_err(|_| bad("bad value"))?;
        if terms.last().is_some_and(|&(prev, _)| index <= prev) {
            return Err(bad("indices must increase"));
        }
        terms.push((index, value));
    }
    Ok(BFile { id: id.to_owned(), terms })
}

pub fn default_cache_dir() -> PathBuf {
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("riordan").join("oeis")
}

/// One `<id>.txt` per sequence; entries are never overwritten.
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn path(&self, id: &str) -> PathBuf {
        self.dir.join(format!("{id}.txt"))
    }

    pub fn read(&self, id: &str) -> CliResult<Option<String>> {
        match fs::read_to_string(self.path(id)) {
            Ok(text) => Ok(Some(text)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(CliError::Cache(format!("{}: {e}", self.path(id).display()))),
        }
    }

    /// Write through a temporary file and rename, unless an entry exists.
    pub fn store(&self, id: &str, text: &str) -> CliResult<()> {
        let err = |p: &Path, e: std::io::Error| CliError::Cache(format!("{}: {e}", p.display()));
        let target = self.path(id);
        if target.exists() {
            return Ok(());
        }
        fs::create_dir_all(&self.dir).map_err(|e| err(&self.dir, e))?;
        let tmp = self.dir.join(format!(".{id}.{}.tmp", std::process::id()));
        let mut file = fs::File::create(&tmp).map_err(|e| err(&tmp, e))?;
        file.write_all(text.as_bytes()).and_then(|_| file.sync_all()).map_err(|e| err(&tmp, e))?;
        if target.exists() {
            let _ = fs::remove_file(&tmp);
            return Ok(());
        }
        fs::rename(&tmp, &target).map_err(|e| err(&target, e))
    }
}

fn download(id: &str) -> CliResult<String> {
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let agent: ureq::Agent = ureq::Agent::config_builder().timeout_global(Some(FETCH_TIMEOUT)).build().into();
    let mut response = agent.get(&url).call().map_err(|e| CliError::Network(format!("{url}: {e}")))?;
    response.body_mut().read_to_string().map_err(|e| CliError::Network(format!("{url}: {e}")))
}

/// The cached b-file, downloading it first unless `offline`.
pub fn fetch(id: &str, cache: &Cache, offline: bool) -> CliResult<BFile> {
    validate_id(id)?;
    if let Some(text) = cache.read(id)? {
        return parse(id, &text);
    }
    if offline {
        return Err(CliError::CacheMiss { id: id.to_owned() });
    }
    let text = download(id)?;
    let bfile = parse(id, &text)?;
    cache.store(id, &text)?;
    Ok(bfile)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alignment {
    /// b-file term j is compared with local term j + offset.
    pub offset: usize,
    /// Length of the common prefix.
    pub matched: usize,
    pub compared: usize,
}

impl Alignment {
    pub fn is_match(&self) -> bool {
        self.compared > 0 && self.matched == self.compared
    }
}

/// Try offsets 0 and 1 and keep the longer common prefix (0 on ties).
pub fn align(bfile: &[BigInt], local: &[BigInt]) -> Alignment {
    let at = |offset: usize| {
        let local = local.get(offset..).unwrap_or(&[]);
        let compared = bfile.len().min(local.len());
        let matched = bfile.iter().zip(local).take_while(|(a, b)| a == b).count();
        Alignment { offset, matched, compared }
    };
    let (a0, a1) = (at(0), at(1));
    if a1.matched > a0.matched {
        a1
    } else {
        a0
    }
}

fn triangle_by_rows(pair: riordan_core::QPair, rows: usize) -> Vec<BigInt> {
    let m = pair.matrix(rows).expect("order covers rows");
    (0..rows).flat_map(|i| (0..=i).map(move |k| (i, k))).map(|(i, k)| integer(m.get(i, k))).collect()
}

fn integer(v: &Rational) -> BigInt {
    v.to_integer()
}

/// Rows needed for a triangle of at least `len` entries.
fn rows_for(len: usize) -> usize {
    (1..=MAX_ROWS).find(|r| r * (r + 1) / 2 >= len).unwrap_or(MAX_ROWS)
}

/// The sequences this tool can compute for a given OEIS id.
pub fn local_sequence(id: &str, len: usize) -> Option<Vec<BigInt>> {
    let len = len.max(1);
    match id {
        "A005130" => Some((0..len.min(MAX_TERMS) + 1).map(families::robbins).collect()),
        "A358069" => Some(families::reference_b20()),
        "A033184" => {
            let rows = rows_for(len);
            Some(triangle_by_rows(families::catalan_pair(rows + 1), rows))
        }
        "A361654" => {
            let rows = rows_for(len);
            Some(triangle_by_rows(families::make_a361654_embed(rows + 1), rows))
        }
        _ => None,
    }
}

pub const KNOWN: &str = "A005130, A358069, A033184, A361654";
