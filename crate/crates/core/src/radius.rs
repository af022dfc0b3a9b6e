//! Exact covering radius by weight-ordered syndrome search.
//!
//! Error patterns are visited in strata of increasing weight. Within a
//! stratum the patterns follow the revolving-door order, so the running
//! syndrome changes by two parity-check columns per step. A flat bit table
//! over all `2^(n-k)` syndromes records which cosets have been reached; the
//! weight at which a coset is first reached is its coset-leader weight, and
//! the covering radius is the weight of the stratum that reaches the last
//! coset.
//!
//! Strata are processed one at a time. Inside a stratum the work is split by
//! the two highest coordinates of the pattern and handed to a thread pool;
//! every discovery in a stratum has the same weight, so the order in which
//! workers set bits cannot change the result.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering::Relaxed};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::combinations::{ball_size, RevolvingDoor};
use crate::error::{Error, Result};
use crate::linear_code::{LinearCode, Syndrome};

/// Largest redundancy the flat syndrome table accepts.
pub const MAX_REDUNDANCY: usize = 32;

/// Guard for [`covering_radius_oracle`]: at most `2^ORACLE_LOG2_PAIRS`
/// (word, codeword) pairs.
pub const ORACLE_LOG2_PAIRS: usize = 28;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiusResult {
    pub radius: usize,
    /// Entry `w` counts the syndromes whose coset leader has weight `w`.
    pub coset_count_by_weight: Vec<u64>,
    /// The smallest syndrome (as an integer) whose coset leader weight is
    /// the radius.
    pub deepest_syndrome: Syndrome,
}

#[derive(Clone, Debug, Default)]
pub struct RadiusOptions {
    /// Highest stratum to search; `None` means `n`.
    pub weight_cap: Option<usize>,
    /// Worker threads; 0 uses rayon's default.
    pub jobs: usize,
    /// Stratum checkpoint file, resumed from when it exists.
    pub checkpoint: Option<PathBuf>,
}

/// Covering radius with default parallelism and no checkpoint.
pub fn covering_radius(code: &LinearCode, weight_cap: usize) -> Result<RadiusResult> {
    covering_radius_with(
        code,
        &RadiusOptions {
            weight_cap: Some(weight_cap),
            ..RadiusOptions::default()
        },
    )
}

pub fn covering_radius_with(code: &LinearCode, options: &RadiusOptions) -> Result<RadiusResult> {
    let r = code.redundancy();
    if r > MAX_REDUNDANCY {
        return Err(Error::RedundancyTooLarge(r));
    }
    let cap = options.weight_cap.unwrap_or(code.n()).min(code.n());
    let mut pool = rayon::ThreadPoolBuilder::new();
    if options.jobs > 0 {
        pool = pool.num_threads(options.jobs);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::Checkpoint(format!("thread pool: {e}")))?;
    pool.install(|| search(code, cap, options.checkpoint.as_deref()))
}

struct VisitedTable {
    words: Vec<AtomicU64>,
    seen: AtomicU64,
    total: u64,
}

impl VisitedTable {
    fn new(redundancy: usize) -> Self {
        let total = 1u64 << redundancy;
        let len = total.div_ceil(64) as usize;
        Self {
            words: (0..len).map(|_| AtomicU64::new(0)).collect(),
            seen: AtomicU64::new(0),
            total,
        }
    }

    fn from_words(words: Vec<u64>, redundancy: usize) -> Self {
        let seen = words.iter().map(|w| w.count_ones() as u64).sum();
        Self {
            words: words.into_iter().map(AtomicU64::new).collect(),
            seen: AtomicU64::new(seen),
            total: 1u64 << redundancy,
        }
    }

    #[inline(always)]
    fn mark(&self, syndrome: u64) {
        let word = &self.words[(syndrome >> 6) as usize];
        let bit = 1u64 << (syndrome & 63);
        if word.load(Relaxed) & bit == 0 && word.fetch_or(bit, Relaxed) & bit == 0 {
            self.seen.fetch_add(1, Relaxed);
        }
    }

    fn complete(&self) -> bool {
        self.seen.load(Relaxed) == self.total
    }

    fn snapshot(&self) -> Vec<u64> {
        self.words.iter().map(|w| w.load(Relaxed)).collect()
    }
}

/// One slice of a stratum: patterns whose top coordinates are `fixed`, with
/// the remaining `rest` coordinates drawn from `0..below`.
#[derive(Clone, Copy)]
struct Unit {
    base: u64,
    below: usize,
    rest: usize,
}

fn stratum_units(cols: &[u64], w: usize) -> Vec<Unit> {
    let n = cols.len();
    match w {
        0 => vec![Unit {
            base: 0,
            below: 0,
            rest: 0,
        }],
        1 => (0..n)
            .map(|h| Unit {
                base: cols[h],
                below: 0,
                rest: 0,
            })
            .collect(),
        _ => {
            let mut units = Vec::new();
            for h1 in (w - 1)..n {
                for h2 in (w - 2)..h1 {
                    units.push(Unit {
                        base: cols[h1] ^ cols[h2],
                        below: h2,
                        rest: w - 2,
                    });
                }
            }
            // largest slices first for better load balance
            units.reverse();
            units
        }
    }
}

fn run_unit(cols: &[u64], unit: Unit, table: &VisitedTable) {
    if table.complete() {
        return;
    }
    let mut rd = RevolvingDoor::new(unit.below, unit.rest);
    let mut syn = rd.current().iter().fold(unit.base, |s, &i| s ^ cols[i]);
    table.mark(syn);
    let mut steps: u32 = 0;
    while let Some((out, inn)) = rd.advance() {
        syn ^= cols[out] ^ cols[inn];
        table.mark(syn);
        steps = steps.wrapping_add(1);
        if steps & 0xffff == 0 && table.complete() {
            return;
        }
    }
}

fn search(code: &LinearCode, cap: usize, checkpoint: Option<&Path>) -> Result<RadiusResult> {
    let r = code.redundancy();
    let cols = code.parity_check_columns();

    let (table, mut counts, mut deepest) = match checkpoint.filter(|p| p.exists()) {
        Some(path) => {
            let state = Checkpoint::load(path, code)?;
            (
                VisitedTable::from_words(state.table, r),
                state.meta.coset_count_by_weight,
                state.meta.deepest_syndrome,
            )
        }
        None => (VisitedTable::new(r), Vec::new(), None),
    };

    let mut before_last = Vec::new();
    while !table.complete() {
        let w = counts.len();
        if w > cap {
            return Err(Error::WeightCapExceeded {
                cap,
                unseen: table.total - table.seen.load(Relaxed),
                coset_count_by_weight: counts,
            });
        }
        before_last = table.snapshot();
        let seen_before = table.seen.load(Relaxed);
        stratum_units(cols, w)
            .into_par_iter()
            .for_each(|unit| run_unit(cols, unit, &table));
        counts.push(table.seen.load(Relaxed) - seen_before);
        if table.complete() {
            deepest = Some(first_unset(&before_last, table.total));
        }
        if let Some(path) = checkpoint {
            Checkpoint::save(path, code, &table.snapshot(), &counts, deepest)?;
        }
    }
    let radius = counts.len() - 1;
    let deepest = deepest
        .or_else(|| (!before_last.is_empty()).then(|| first_unset(&before_last, table.total)))
        .unwrap_or(0);
    Ok(RadiusResult {
        radius,
        coset_count_by_weight: counts,
        deepest_syndrome: Syndrome::new(deepest, r)?,
    })
}

fn first_unset(words: &[u64], total: u64) -> u64 {
    words
        .iter()
        .enumerate()
        .find(|(_, &w)| w != u64::MAX)
        .map(|(i, &w)| i as u64 * 64 + (!w).trailing_zeros() as u64)
        .filter(|&s| s < total)
        .expect("search was incomplete before the last stratum")
}

/// Direct evaluation of `max_v min_c d(v, c)` over the whole ambient space.
pub fn covering_radius_oracle(code: &LinearCode) -> Result<usize> {
    let (n, k) = (code.n(), code.k());
    if n > 16 || n + k > ORACLE_LOG2_PAIRS {
        return Err(Error::OracleTooLarge(n + k));
    }
    let codewords: Vec<u64> = code.codewords().map(|c| c.bits()).collect();
    let radius = (0..1u64 << n)
        .map(|v| {
            codewords
                .iter()
                .map(|&c| (v ^ c).count_ones())
                .min()
                .expect("a code always contains zero")
        })
        .max()
        .expect("ambient space is nonempty");
    Ok(radius as usize)
}

/// `R = ⌊(d-1)/2⌋`, from the stored exact distance and covering radius.
pub fn is_perfect(code: &LinearCode) -> Result<bool> {
    let t = code
        .error_capacity()
        .ok_or(Error::InsufficientData("exact minimum distance unknown"))?;
    let r = code
        .covering_radius()
        .ok_or(Error::InsufficientData("covering radius unknown"))?;
    Ok(r == t)
}

/// Number of candidate patterns examined by a search that ends at `radius`,
/// without early exit inside the last stratum.
pub fn search_cost(n: usize, radius: usize) -> u128 {
    ball_size(n, radius)
}

const CHECKPOINT_FORMAT: &str = "bchcover-radius-checkpoint/1";

#[derive(Serialize, Deserialize, Debug)]
struct CheckpointMeta {
    format: String,
    n: usize,
    k: usize,
    /// Rows of H in hexadecimal; identifies the code.
    parity_check: Vec<String>,
    completed_weight: usize,
    coset_count_by_weight: Vec<u64>,
    table_sha256: String,
    deepest_syndrome: Option<u64>,
}

struct Checkpoint {
    meta: CheckpointMeta,
    table: Vec<u64>,
}

fn table_path(path: &Path) -> PathBuf {
    let mut p = path.as_os_str().to_owned();
    p.push(".table");
    PathBuf::from(p)
}

fn table_bytes(words: &[u64]) -> Vec<u8> {
    words.iter().flat_map(|w| w.to_le_bytes()).collect()
}

fn fingerprint(code: &LinearCode) -> Vec<String> {
    code.parity_check_rows().iter().map(|r| format!("{r:x}")).collect()
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    let mut f = fs::File::create(&tmp)?;
    f.write_all(bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, path)?;
    Ok(())
}

impl Checkpoint {
    fn save(path: &Path, code: &LinearCode, table: &[u64], counts: &[u64], deepest: Option<u64>) -> Result<()> {
        let bytes = table_bytes(table);
        let meta = CheckpointMeta {
            format: CHECKPOINT_FORMAT.to_string(),
            n: code.n(),
            k: code.k(),
            parity_check: fingerprint(code),
            completed_weight: counts.len() - 1,
            coset_count_by_weight: counts.to_vec(),
            table_sha256: hex_digest(&bytes),
            deepest_syndrome: deepest,
        };
        write_atomic(&table_path(path), &bytes)?;
        let json = serde_json::to_vec_pretty(&meta).map_err(|e| Error::Checkpoint(e.to_string()))?;
        write_atomic(path, &json)
    }

    fn load(path: &Path, code: &LinearCode) -> Result<Self> {
        let meta: CheckpointMeta = serde_json::from_slice(&fs::read(path)?)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        if meta.format != CHECKPOINT_FORMAT {
            return Err(Error::Checkpoint(format!("unknown format {:?}", meta.format)));
        }
        if meta.n != code.n() || meta.k != code.k() || meta.parity_check != fingerprint(code) {
            return Err(Error::Checkpoint("checkpoint belongs to a different code".into()));
        }
        if meta.coset_count_by_weight.len() != meta.completed_weight + 1 {
            return Err(Error::Checkpoint("stratum counts do not match completed weight".into()));
        }
        let bytes = fs::read(table_path(path))?;
        if hex_digest(&bytes) != meta.table_sha256 {
            return Err(Error::Checkpoint("visited table digest mismatch".into()));
        }
        let expected_words = (1u64 << code.redundancy()).div_ceil(64) as usize;
        if bytes.len() != expected_words * 8 {
            return Err(Error::Checkpoint("visited table has the wrong size".into()));
        }
        let table: Vec<u64> = bytes
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().expect("chunk of 8")))
            .collect();
        let marked: u64 = table.iter().map(|w| w.count_ones() as u64).sum();
        if marked != meta.coset_count_by_weight.iter().sum::<u64>() {
            return Err(Error::Checkpoint("visited table disagrees with stratum counts".into()));
        }
        Ok(Self { meta, table })
    }
}

fn hex_digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}
