mod common;

use pi_formula::formula::{floor_log_shift, ThresholdTable};
use pi_formula::prime_engine::{PiCheckpoint, SieveConfig};
use pi_formula::scanner::{
    first_attainment, read_checkpoints, scan_golomb_points, verify_theorem3, CheckpointLog, Scanner,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

use common::{golomb_naive, is_prime_trial, pi_trial};

fn pairs(report: &pi_formula::VerificationReport) -> Vec<(u64, u64)> {
    report.points.iter().map(|p| (p.n, p.pi_n)).collect()
}

#[test]
fn complete_against_naive_enumeration() {
    let want = golomb_naive(1, 100_000);
    let report = verify_theorem3(1, 100_000).unwrap();
    assert_eq!(pairs(&report), want);
    let in_domain = want.iter().filter(|&&(n, _)| n >= 67).count() as u64;
    assert_eq!(report.checked, in_domain);
    assert!(report.failures.is_empty());
}

#[test]
fn ratio_equals_floor_for_every_point() {
    let table = ThresholdTable::standard();
    let report = verify_theorem3(67, 2_000_000).unwrap();
    for p in &report.points {
        assert_eq!(
            u64::from(floor_log_shift(p.n, table).unwrap()),
            p.k,
            "n = {}",
            p.n
        );
        assert_eq!(p.theorem3_match, Some(true));
    }
}

#[test]
fn million_to_two_million() {
    let report = verify_theorem3(1_000_000, 2_000_000).unwrap();
    assert!(report.failures.is_empty());
    assert!(!report.points.is_empty());
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..3 {
        let p = &report.points[rng.gen_range(0..report.points.len())];
        assert_eq!(pi_trial(p.n), p.pi_n, "n = {}", p.n);
        assert_eq!(p.n % p.pi_n, 0);
    }
}

#[test]
fn attainment_witnesses_two_to_fourteen() {
    let table = ThresholdTable::standard();
    // ascending brute-force scan (numpy sieve) gave these witnesses
    let expected = [
        2, 27, 96, 330, 1008, 3059, 8408, 23526, 64540, 175197, 480852, 1304498, 3523884,
    ];
    for (k, want) in (2u64..=14).zip(expected) {
        let n = first_attainment(k, 10_000_000).unwrap().expect("witness");
        assert_eq!(n, want, "k = {k}");
        if n >= 67 {
            assert_eq!(u64::from(floor_log_shift(n, table).unwrap()), k);
        }
    }
}

#[test]
fn attainment_small_witnesses_by_trial_division() {
    for k in 2u64..=5 {
        let brute = (2u64..)
            .find(|&n| {
                let c = (2..=n).filter(|&m| is_prime_trial(m)).count() as u64;
                n == k * c
            })
            .unwrap();
        assert_eq!(first_attainment(k, 1000).unwrap(), Some(brute));
    }
}

#[test]
fn resume_reproduces_uninterrupted_scan() {
    let small = SieveConfig::with_segment_bits(1 << 12);
    let scanner = Scanner::new().with_shards(3).with_sieve(small);
    let dir = tempfile::tempdir().unwrap();
    let full_path = dir.path().join("full");
    let mut full_log = CheckpointLog::open(&full_path).unwrap();
    let full = scanner
        .verify_theorem3_resumable(67, 400_000, &mut full_log)
        .unwrap();
    assert_eq!(
        full.points,
        scanner.verify_theorem3(67, 400_000).unwrap().points
    );

    let text = std::fs::read_to_string(&full_path).unwrap();
    let checkpoints = read_checkpoints(text.as_bytes()).unwrap();
    assert!(checkpoints.len() > 5);

    for cut in [1, checkpoints.len() / 2, checkpoints.len() - 1] {
        // interrupted run: only the first `cut` lines made it to disk
        let path = dir.path().join(format!("cut{cut}"));
        let prefix: String = text.lines().take(cut).map(|l| format!("{l}\n")).collect();
        std::fs::write(&path, prefix).unwrap();
        let mut log = CheckpointLog::open(&path).unwrap();
        let resumed_from = log.last().unwrap();
        let tail = scanner
            .verify_theorem3_resumable(67, 400_000, &mut log)
            .unwrap();
        let head: Vec<_> = full
            .points
            .iter()
            .filter(|p| p.n <= resumed_from.n)
            .cloned()
            .collect();
        let mut joined = head;
        joined.extend(tail.points.iter().cloned());
        assert_eq!(joined, full.points, "cut after {cut} checkpoints");
        assert_eq!(tail.checkpoint, full.checkpoint);
        assert_eq!(log.last(), checkpoints.last().copied());
    }
}

#[test]
fn resume_rejects_tampered_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad");
    std::fs::write(&path, "1000\t169\n").unwrap();
    let mut log = CheckpointLog::open(&path).unwrap();
    let err = Scanner::new()
        .verify_theorem3_resumable(67, 4000, &mut log)
        .unwrap_err();
    assert!(matches!(
        err,
        pi_formula::Error::InconsistentSeed { expected: 168, .. }
    ));
}

#[test]
fn resume_of_finished_scan_is_empty() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("done");
    std::fs::write(&path, "3999\t550\n").unwrap();
    let mut log = CheckpointLog::open(&path).unwrap();
    let r = Scanner::new()
        .verify_theorem3_resumable(67, 4000, &mut log)
        .unwrap();
    assert!(r.points.is_empty());
    assert_eq!(r.checkpoint, PiCheckpoint::new(3999, 550));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shard_invariance(shards in 1usize..24, bits in 6u64..14, lo in 1u64..5000, len in 1u64..150_000) {
        let hi = lo + len;
        let reference = Scanner::new().with_shards(1).verify_theorem3(lo, hi).unwrap();
        let sharded = Scanner::new()
            .with_shards(shards)
            .with_sieve(SieveConfig::with_segment_bits(bits))
            .verify_theorem3(lo, hi)
            .unwrap();
        prop_assert_eq!(&sharded.points, &reference.points);
        prop_assert_eq!(sharded.checkpoint, reference.checkpoint);
    }

    #[test]
    fn stream_matches_naive(lo in 1u64..20_000, len in 1u64..20_000) {
        let hi = lo + len;
        let seed = PiCheckpoint::new(lo - 1, pi_trial(lo - 1));
        let streamed: Vec<(u64, u64)> = scan_golomb_points(lo, hi, seed)
            .unwrap()
            .map(|p| p.map(|p| (p.n, p.pi_n)))
            .collect::<Result<_, _>>()
            .unwrap();
        prop_assert_eq!(streamed, golomb_naive(lo, hi));
    }
}
