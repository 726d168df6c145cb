//! Exit criteria for the library. Runs every criterion, prints one line per
//! criterion, and exits nonzero if any fails.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{shapes_up_to, tab, test_schemes};
use num_bigint::BigUint;
use schensted_core::{
    all_partitions, classical_row_insert, count_standard, enumerate_standard, first_row_length,
    insert, rs_forward, rs_inverse, scramble, shift_from, uninsert, verify_dimension_formula,
    verify_row_scheme_equivalence, verify_upward_recursion, Permutation, ReversingScheme,
    RowScheme,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, elapsed: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn worked_example() -> Outcome {
    let perm: Permutation = "2641375".parse().unwrap();
    let start = Instant::now();
    let pair = rs_forward(&RowScheme, &perm).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(pair.p == tab(&[&[1, 3, 5], &[2, 4, 7], &[6]]), || format!("P = {:?}", pair.p))?;
    ensure(pair.q == tab(&[&[1, 2, 6], &[3, 5, 7], &[4]]), || format!("Q = {:?}", pair.q))?;
    within(Duration::from_millis(1), elapsed)?;
    Ok(format!("P, Q exact in {elapsed:?}"))
}

fn bump_path_example() -> Outcome {
    let before = tab(&[&[1, 2, 3, 7, 11], &[5, 6, 12, 14], &[8, 10], &[9]]);
    let (after, _) = classical_row_insert(&before, 4).map_err(|e| e.to_string())?;
    let expected = tab(&[&[1, 2, 3, 4, 11], &[5, 6, 7, 14], &[8, 10, 12], &[9]]);
    ensure(after == expected, || format!("got {:?}", after.rows()))?;
    Ok("exact".into())
}

fn row_scheme_equivalence() -> Outcome {
    let start = Instant::now();
    let report = verify_row_scheme_equivalence(5);
    let elapsed = start.elapsed();
    ensure(report.passed(), || format!("{} mismatches", report.violations.len()))?;
    within(Duration::from_secs(10), elapsed)?;
    Ok(format!("{} cases, 0 mismatches, {elapsed:?}", report.checked))
}

fn bijectivity() -> Outcome {
    let start = Instant::now();
    let mut inserts = 0usize;
    let mut perms = 0usize;
    let mut cases = Vec::new();
    for shape in shapes_up_to(6) {
        let n = shape.size() as u32;
        for t in enumerate_standard(&shape).unwrap() {
            for i in 1..=n + 1 {
                cases.push((shift_from(&t, i), i));
            }
        }
    }
    let all6 = Permutation::all(6);
    for scheme in test_schemes() {
        for (s, i) in &cases {
            let t = insert(&scheme, s, *i).map_err(|e| e.to_string())?.tableau;
            let back = uninsert(&scheme, &t, &s.shape()).map_err(|e| e.to_string())?;
            ensure(back == (s.clone(), *i), || format!("{}: uninsert failed on {s:?}, {i}", scheme.name()))?;
            inserts += 1;
        }
        for perm in &all6 {
            let pair = rs_forward(&scheme, perm).map_err(|e| e.to_string())?;
            let back = rs_inverse(&scheme, &pair).map_err(|e| e.to_string())?;
            ensure(&back == perm, || format!("{}: {perm} came back as {back}", scheme.name()))?;
            perms += 1;
        }
    }
    let elapsed = start.elapsed();
    within(Duration::from_secs(60), elapsed)?;
    Ok(format!("{inserts} insertions, {perms} permutations, 0 failures, {elapsed:?}"))
}

fn dimension_formula() -> Outcome {
    let report = verify_dimension_formula(10);
    ensure(report.passed(), || report.violations.join("; "))?;
    for n in 0..=8usize {
        let listed: BigUint = all_partitions(n)
            .iter()
            .map(|s| {
                let k = BigUint::from(enumerate_standard(s).unwrap().len());
                ensure(k == count_standard(s), || format!("({s}): recursion disagrees")).map(|_| &k * &k)
            })
            .sum::<Result<BigUint, String>>()?;
        let fact: BigUint = (1..=n).map(BigUint::from).product();
        ensure(listed == fact, || format!("n = {n}: enumerated Σ f² = {listed}"))?;
    }
    Ok("n <= 10 by recursion, n <= 8 by enumeration".into())
}

fn upward_recursion() -> Outcome {
    let start = Instant::now();
    let report = verify_upward_recursion(12);
    let elapsed = start.elapsed();
    ensure(report.passed(), || report.violations.join("; "))?;
    within(Duration::from_secs(5), elapsed)?;
    Ok(format!("{} identities, 0 violations, {elapsed:?}", report.checked))
}

fn lattice_properties() -> Outcome {
    let mut checked = 0;
    for shape in shapes_up_to(10) {
        ensure(shape.addible_squares().len() == shape.removable_squares().len() + 1, || {
            format!("({shape}): addible/removable counts")
        })?;
        checked += 1;
        if shape.is_empty() {
            continue;
        }
        let ups = shape.successors();
        let downs = shape.predecessors().unwrap();
        let mids = shape.plus_minus_shapes().unwrap();
        ensure(mids == shape.minus_plus_shapes().unwrap(), || format!("({shape}): +- != -+"))?;
        for mid in mids {
            let above = ups.iter().filter(|u| u.contains(&mid)).count();
            let below = downs.iter().filter(|d| mid.contains(d)).count();
            ensure(above == 1 && below == 1, || format!("({shape}) -> ({mid})"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} checks, 0 violations"))
}

fn row_and_reversing_insert() -> Outcome {
    let s = tab(&[&[1, 2, 6, 7, 9], &[4, 5, 8], &[10, 11]]);
    let row = insert(&RowScheme, &s, 3).unwrap().tableau;
    ensure(row == classical_row_insert(&s, 3).unwrap().0, || "row scheme differs".into())?;
    let rev = insert(&ReversingScheme, &s, 3).unwrap();
    let top = rev.tableau.rows().len();
    ensure(rev.tableau.position(6).map(|q| q.row) == Some(top), || "6 not in top row".into())?;
    ensure(rev.tableau.position(10).map(|q| q.row) == Some(2), || "10 not in second row".into())?;
    ensure(rev.trace.bumped_entries() == vec![6, 10], || {
        format!("bumped {:?}", rev.trace.bumped_entries())
    })?;
    Ok("row = row insertion; reversing bumps {6, 10}".into())
}

fn lis_property() -> Outcome {
    let mut count = 0;
    for n in 0..=7 {
        for perm in Permutation::all(n) {
            let xs = perm.letters();
            let lis = (0u32..1 << xs.len())
                .filter_map(|mask| {
                    let picked: Vec<u32> =
                        (0..xs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| xs[i]).collect();
                    picked.windows(2).all(|w| w[0] < w[1]).then_some(picked.len())
                })
                .max()
                .unwrap_or(0);
            let first = first_row_length(&RowScheme, &perm).unwrap();
            ensure(first == lis, || format!("{perm}: LIS {lis}, first row {first}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} permutations, 0 mismatches"))
}

fn identity_diagonal() -> Outcome {
    for scheme in test_schemes() {
        for n in 0..=8 {
            let pair = rs_forward(&scheme, &Permutation::identity(n)).unwrap();
            ensure(pair.p == pair.q, || format!("{} n = {n}", scheme.name()))?;
        }
    }
    Ok("5 schemes, n <= 8".into())
}

fn scrambler() -> Outcome {
    let schemes = test_schemes();
    let mut pairs = 0;
    for encode in &schemes {
        for decode in &schemes {
            for n in 0..=5 {
                let all = Permutation::all(n);
                let mut seen = HashSet::new();
                for perm in &all {
                    let out = scramble(perm, encode, decode).map_err(|e| e.to_string())?;
                    if encode.name() == decode.name() {
                        ensure(&out == perm, || format!("{} moved {perm}", encode.name()))?;
                    }
                    seen.insert(out);
                }
                ensure(seen.len() == all.len(), || {
                    format!("{} -> {} not injective at n = {n}", encode.name(), decode.name())
                })?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered scheme pairs, n <= 5"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1  worked example 2641375", worked_example),
        ("AC2  bump-path example", bump_path_example),
        ("AC3  row scheme = row insertion, n <= 5", row_scheme_equivalence),
        ("AC4  bijectivity, 5 schemes", bijectivity),
        ("AC5  n! = sum f^2", dimension_formula),
        ("AC6  upward recursion and induction identities", upward_recursion),
        ("AC7  addible/removable counts, λ+- uniqueness", lattice_properties),
        ("AC8  insertion of 3 into S, row and reversing", row_and_reversing_insert),
        ("AC9  LIS = first row length", lis_property),
        ("AC10 identity maps to (P, P)", identity_diagonal),
        ("AC11 scrambler bijectivity", scrambler),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 11 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 11 criteria failed");
        ExitCode::FAILURE
    }
}
