use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;
use std::sync::Mutex;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::solve::{solve, SearchProblem, SolveError, SolveOptions, DEFAULT_CAP};
use super::{candidate_targets, conjectured_degenerate, expected_cells};
use crate::sl5::{dominant_weights, Weight};
use crate::verma::{format_vector, verify_morphism, MorphismData, VerifyOptions};

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Sources are all dominant `λ_A` with `Σ n_i ≤ bound`.
    pub bound: i64,
    pub degrees: Vec<u32>,
    pub jobs: usize,
    pub cap: usize,
    /// Append-only log; cells already present are not recomputed.
    pub log: Option<PathBuf>,
}

impl SweepConfig {
    pub fn new(bound: i64, degrees: Vec<u32>) -> Self {
        SweepConfig {
            bound,
            degrees,
            jobs: 1,
            cap: DEFAULT_CAP,
            log: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellStatus {
    /// Solved; no morphisms.
    Zero,
    /// Solved; every witness re-verified. Carries a hash of the witnesses.
    Witness(String),
    Infeasible,
    /// Solved, but some witness failed the independent verification.
    Unverified,
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellStatus::Zero => f.write_str("ok"),
            CellStatus::Witness(h) => write!(f, "ok:{h}"),
            CellStatus::Infeasible => f.write_str("infeasible"),
            CellStatus::Unverified => f.write_str("unverified"),
        }
    }
}

pub struct CellResult {
    pub problem: SearchProblem,
    /// `None` when infeasible.
    pub dim: Option<usize>,
    pub status: CellStatus,
    /// Empty for cells read back from the log.
    pub witnesses: Vec<MorphismData>,
    pub resumed: bool,
}

impl CellResult {
    pub fn log_line(&self) -> String {
        let w = |l: Weight| {
            let n = l.0;
            format!("{},{},{},{}", n[0], n[1], n[2], n[3])
        };
        let dim = self.dim.map_or("-".to_string(), |d| d.to_string());
        format!(
            "{};{};{};{};{}",
            w(self.problem.source),
            w(self.problem.target),
            self.problem.degree,
            dim,
            self.status
        )
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LogError {
    #[error("malformed log line {0:?}")]
    Malformed(String),
}

/// Parses one `λ_A;λ_B;k;dim;status` record.
pub fn parse_log_line(line: &str) -> Result<(SearchProblem, Option<usize>, CellStatus), LogError> {
    let bad = || LogError::Malformed(line.to_string());
    let parts: Vec<&str> = line.trim().split(';').collect();
    let [a, b, k, d, s] = parts[..] else {
        return Err(bad());
    };
    let problem = SearchProblem {
        source: a.parse().map_err(|_| bad())?,
        target: b.parse().map_err(|_| bad())?,
        degree: k.parse().map_err(|_| bad())?,
    };
    let dim = if d == "-" {
        None
    } else {
        Some(d.parse().map_err(|_| bad())?)
    };
    let status = match s {
        "ok" => CellStatus::Zero,
        "infeasible" => CellStatus::Infeasible,
        "unverified" => CellStatus::Unverified,
        _ => match s.strip_prefix("ok:") {
            Some(h) if !h.is_empty() => CellStatus::Witness(h.to_string()),
            _ => return Err(bad()),
        },
    };
    let consistent = match &status {
        CellStatus::Zero => dim == Some(0),
        CellStatus::Witness(_) | CellStatus::Unverified => dim.is_some_and(|d| d > 0),
        CellStatus::Infeasible => dim.is_none(),
    };
    if !consistent {
        return Err(bad());
    }
    Ok((problem, dim, status))
}

/// Short stable hash of the witnesses' highest-weight images.
pub fn witness_hash(ws: &[MorphismData]) -> String {
    let mut h = Sha256::new();
    for w in ws {
        h.update(format_vector(&w.table[0]).as_bytes());
        h.update(b"\n");
    }
    hex::encode(&h.finalize()[..8])
}

/// Result of comparing one degree of a sweep with the known morphisms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Comparison {
    pub degree: u32,
    pub expected: BTreeSet<(Weight, Weight)>,
    /// Expected cells with no solution (or not among the candidates).
    pub missing: Vec<(Weight, Weight)>,
    /// Nonzero cells that are not expected.
    pub unexpected: Vec<(Weight, Weight)>,
    /// Nonzero cells whose dimension is not 1.
    pub wrong_dim: Vec<(Weight, Weight, usize)>,
    pub infeasible: Vec<(Weight, Weight)>,
    pub unverified: Vec<(Weight, Weight)>,
    /// Targets of nonzero cells outside the conjectured degenerate list.
    pub not_degenerate: Vec<Weight>,
}

impl Comparison {
    /// No mathematical disagreement among the cells that were solved.
    pub fn matches(&self) -> bool {
        self.missing.is_empty()
            && self.unexpected.is_empty()
            && self.wrong_dim.is_empty()
            && self.unverified.is_empty()
            && self.not_degenerate.is_empty()
    }
}

pub struct SweepReport {
    pub bound: i64,
    pub degrees: Vec<u32>,
    /// Sorted by `(k, λ_A, λ_B)`.
    pub cells: Vec<CellResult>,
    pub comparisons: Vec<Comparison>,
    /// Targets of nonzero cells: modules shown to be degenerate.
    pub degenerate: BTreeSet<Weight>,
}

impl SweepReport {
    pub fn matches(&self) -> bool {
        self.comparisons.iter().all(Comparison::matches)
    }

    pub fn has_infeasible(&self) -> bool {
        self.cells
            .iter()
            .any(|c| c.status == CellStatus::Infeasible)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &CellResult> {
        self.cells.iter().filter(|c| c.dim.is_some_and(|d| d > 0))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("sweep log: {0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Log(#[from] LogError),
    #[error(transparent)]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("{0}")]
    Solve(SolveError),
}

fn run_cell(p: SearchProblem, cap: usize) -> Result<CellResult, SweepError> {
    let sol = match solve(&p, SolveOptions { cap, shuffle: None }) {
        Ok(s) => s,
        Err(SolveError::Infeasible { .. }) => {
            return Ok(CellResult {
                problem: p,
                dim: None,
                status: CellStatus::Infeasible,
                witnesses: Vec::new(),
                resumed: false,
            })
        }
        Err(e) => return Err(SweepError::Solve(e)),
    };
    let dim = sol.dim();
    let status = if dim == 0 {
        CellStatus::Zero
    } else {
        let ok = sol.morphisms.iter().all(|m| {
            verify_morphism(m, VerifyOptions::FULL).is_ok_and(|r| r.passed() && !r.is_zero)
        });
        if ok {
            CellStatus::Witness(witness_hash(&sol.morphisms))
        } else {
            CellStatus::Unverified
        }
    };
    Ok(CellResult {
        problem: p,
        dim: Some(dim),
        status,
        witnesses: sol.morphisms,
        resumed: false,
    })
}

fn read_log(path: &PathBuf) -> Result<BTreeMap<SearchProblem, CellResult>, SweepError> {
    let mut out = BTreeMap::new();
    let f = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(e.into()),
    };
    for line in BufReader::new(f).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let (problem, dim, status) = parse_log_line(&line)?;
        out.insert(
            problem,
            CellResult {
                problem,
                dim,
                status,
                witnesses: Vec::new(),
                resumed: true,
            },
        );
    }
    Ok(out)
}

/// All cells of the grid.
pub fn cells(bound: i64, degrees: &[u32]) -> Vec<SearchProblem> {
    let mut out = Vec::new();
    for &k in degrees {
        for a in dominant_weights(bound) {
            for b in candidate_targets(a, k) {
                out.push(SearchProblem {
                    source: a,
                    target: b,
                    degree: k,
                });
            }
        }
    }
    out
}

pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport, SweepError> {
    let todo = cells(cfg.bound, &cfg.degrees);
    let mut done = match &cfg.log {
        Some(p) => read_log(p)?,
        None => BTreeMap::new(),
    };
    let wanted: BTreeSet<SearchProblem> = todo.iter().copied().collect();
    done.retain(|p, _| wanted.contains(p));
    let mut pending: Vec<SearchProblem> =
        todo.into_iter().filter(|p| !done.contains_key(p)).collect();
    // big cells first, for a better schedule
    pending.sort_by_key(|p| {
        std::cmp::Reverse(crate::sl5::weyl_dim(p.target) * crate::sl5::weyl_dim(p.source))
    });
    let writer = match &cfg.log {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            Some(Mutex::new(
                OpenOptions::new().create(true).append(true).open(p)?,
            ))
        }
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()?;
    let fresh: Vec<CellResult> = pool.install(|| {
        pending
            .par_iter()
            .map(|p| {
                let r = run_cell(*p, cfg.cap)?;
                if let Some(w) = &writer {
                    let mut f = w.lock().unwrap();
                    writeln!(f, "{}", r.log_line())?;
                    f.flush()?;
                }
                Ok(r)
            })
            .collect::<Result<_, SweepError>>()
    })?;
    for r in fresh {
        done.insert(r.problem, r);
    }
    let mut cells: Vec<CellResult> = done.into_values().collect();
    cells.sort_by_key(|c| (c.problem.degree, c.problem.source, c.problem.target));
    let comparisons = cfg
        .degrees
        .iter()
        .map(|&k| compare(k, cfg.bound, &cells))
        .collect();
    let degenerate = cells
        .iter()
        .filter(|c| c.dim.is_some_and(|d| d > 0))
        .map(|c| c.problem.target)
        .collect();
    Ok(SweepReport {
        bound: cfg.bound,
        degrees: cfg.degrees.clone(),
        cells,
        comparisons,
        degenerate,
    })
}

fn compare(k: u32, bound: i64, cells: &[CellResult]) -> Comparison {
    let expected = expected_cells(k, bound);
    let mut c = Comparison {
        degree: k,
        ..Default::default()
    };
    let mut found = BTreeSet::new();
    for cell in cells.iter().filter(|c| c.problem.degree == k) {
        let key = (cell.problem.source, cell.problem.target);
        match cell.dim {
            None => c.infeasible.push(key),
            Some(0) => {}
            Some(d) => {
                found.insert(key);
                if !expected.contains(&key) {
                    c.unexpected.push(key);
                }
                if d != 1 {
                    c.wrong_dim.push((key.0, key.1, d));
                }
                if cell.status == CellStatus::Unverified {
                    c.unverified.push(key);
                }
                if !conjectured_degenerate(key.1) {
                    c.not_degenerate.push(key.1);
                }
            }
        }
    }
    c.missing = expected
        .iter()
        .filter(|e| !found.contains(*e) && !c.infeasible.contains(e))
        .copied()
        .collect();
    c.expected = expected;
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_roundtrip() {
        for line in [
            "0,0,0,0;0,0,1,0;1;1;ok:0123abcd",
            "1,0,0,0;2,0,0,0;2;0;ok",
            "4,0,0,0;1,1,1,1;3;-;infeasible",
        ] {
            let (p, d, s) = parse_log_line(line).unwrap();
            let r = CellResult {
                problem: p,
                dim: d,
                status: s,
                witnesses: Vec::new(),
                resumed: true,
            };
            assert_eq!(r.log_line(), line);
        }
    }

    #[test]
    fn log_rejects_garbage() {
        for line in [
            "",
            "1;2;3",
            "0,0,0,0;0,0,1,0;1;0;ok:ab",
            "0,0,0,0;0,0,1,0;1;1;ok",
            "a;b;c;d;e",
            "0,0,0,0;0,0,1,0;1;-;ok",
        ] {
            assert!(parse_log_line(line).is_err(), "{line}");
        }
    }
}
