use e510::exact::{Echelon, SparseVec};
use e510::search::{
    expected_cells, parse_log_line, solve, sweep, CellStatus, SearchProblem, SolveOptions,
    SweepConfig,
};
use e510::sl5::Weight;
use e510::verma::{Named, VermaVector};
use std::collections::BTreeMap;

fn in_span(v: &VermaVector, basis: &[VermaVector]) -> bool {
    let mut index = BTreeMap::new();
    let mut to_sparse = |x: &VermaVector| {
        SparseVec::from_pairs(x.iter().map(|(k, c)| {
            let len = index.len();
            (*index.entry(*k).or_insert(len), c.clone())
        }))
    };
    let rows: Vec<SparseVec> = basis.iter().map(&mut to_sparse).collect();
    let target = to_sparse(v);
    let mut ech = Echelon::new(index.len());
    for r in &rows {
        ech.insert(r);
    }
    ech.contains(&target)
}

#[test]
fn higher_degree_morphisms_are_found() {
    for name in [
        Named::NablaABC,
        Named::TAB(3),
        Named::TAB(4),
        Named::TBC(0),
        Named::TPrime,
        Named::TDoublePrime,
    ] {
        let (a, b) = name.endpoints();
        let p = SearchProblem {
            source: a,
            target: b.unwrap(),
            degree: name.degree(),
        };
        let s = solve(&p, SolveOptions::default()).unwrap();
        assert_eq!(s.dim(), 1, "{name}");
        let built = name.build().unwrap();
        assert!(in_span(&built.table[0], &s.hwv_images), "{name}");
    }
}

#[test]
fn sweep_resumes_from_its_log() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("cells.log");
    let mut cfg = SweepConfig::new(1, vec![1, 2]);
    cfg.log = Some(log.clone());
    cfg.jobs = 2;
    let first = sweep(&cfg).unwrap();
    assert!(first.matches());
    assert!(first.cells.iter().all(|c| !c.resumed));
    let text = std::fs::read_to_string(&log).unwrap();
    assert_eq!(text.lines().count(), first.cells.len());
    for l in text.lines() {
        parse_log_line(l).unwrap();
    }

    // drop one record: only that cell is recomputed
    let kept: Vec<&str> = text.lines().skip(1).collect();
    std::fs::write(&log, kept.join("\n") + "\n").unwrap();
    let second = sweep(&cfg).unwrap();
    assert_eq!(second.cells.iter().filter(|c| !c.resumed).count(), 1);
    let lines = |r: &e510::search::SweepReport| -> Vec<String> {
        r.cells.iter().map(|c| c.log_line()).collect()
    };
    assert_eq!(lines(&first), lines(&second));
    assert_eq!(second.comparisons, first.comparisons);
}

#[test]
fn sweep_witnesses_are_the_expected_cells() {
    let r = sweep(&SweepConfig::new(2, vec![1])).unwrap();
    let nonzero: Vec<(Weight, Weight)> = r
        .nonzero()
        .map(|c| (c.problem.source, c.problem.target))
        .collect();
    assert_eq!(
        nonzero
            .into_iter()
            .collect::<std::collections::BTreeSet<_>>(),
        expected_cells(1, 2)
    );
    for c in r.nonzero() {
        assert!(matches!(c.status, CellStatus::Witness(_)));
        assert_eq!(c.witnesses.len(), 1);
    }
    assert!(r
        .degenerate
        .iter()
        .all(|w| e510::search::conjectured_degenerate(*w)));
}
