//! The number `f_λ` of standard tableaux of shape λ, computed by the
//! downward recursion `f_λ = Σ f_{λ⁻}` with `f_∅ = 1`, and exhaustive checks
//! of the upward recursion and of `n! = Σ_{λ⊢n} f_λ²`.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigUint;

use crate::report::Report;
use crate::shapes::{all_partitions, Shape};

/// Memo table for `f_λ`. Reads are shared; inserts take the write lock.
#[derive(Debug, Default)]
pub struct StandardCounter {
    memo: RwLock<HashMap<Shape, BigUint>>,
}

impl StandardCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self, shape: &Shape) -> BigUint {
        if shape.is_empty() {
            return BigUint::from(1u32);
        }
        if let Some(v) = self.memo.read().expect("memo poisoned").get(shape) {
            return v.clone();
        }
        let total: BigUint = shape
            .predecessors()
            .expect("nonempty shape")
            .iter()
            .map(|p| self.count(p))
            .sum();
        self.memo
            .write()
            .expect("memo poisoned")
            .entry(shape.clone())
            .or_insert(total)
            .clone()
    }
}

static GLOBAL: LazyLock<StandardCounter> = LazyLock::new(StandardCounter::new);

/// `f_λ`, memoized process-wide.
pub fn count_standard(shape: &Shape) -> BigUint {
    GLOBAL.count(shape)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Checks `(n+1) f_λ = Σ f_{λ⁺}` for every λ ⊢ n ≤ `n_max`, together with
/// the two intermediate identities used to prove it:
///
/// * `(m+1) f_λ + Σ f_{λ⁺⁻} = Σ f_{λ⁺}` (downward recursion summed over λ⁺)
/// * `m f_λ + Σ f_{λ⁺⁻} = n Σ f_{λ⁻}` (upward recursion summed over λ⁻)
///
/// where `m` is the number of removable squares of λ.
pub fn verify_upward_recursion(n_max: usize) -> Report {
    let mut report = Report::new(format!("upward recursion, n <= {n_max}"));
    for n in 0..=n_max {
        for shape in all_partitions(n) {
            let f = count_standard(&shape);
            let up: BigUint = shape.successors().iter().map(count_standard).sum();
            report.check(BigUint::from(n + 1) * &f == up, || {
                format!("({shape}): (n+1) f_λ != Σ f_λ⁺")
            });
            if n == 0 {
                continue;
            }
            let m = shape.removable_squares().len();
            let plus_minus: BigUint = shape
                .plus_minus_shapes()
                .expect("nonempty shape")
                .iter()
                .map(count_standard)
                .sum();
            let down: BigUint =
                shape.predecessors().expect("nonempty shape").iter().map(count_standard).sum();
            report.check(BigUint::from(m + 1) * &f + &plus_minus == up, || {
                format!("({shape}): (m+1) f_λ + Σ f_λ⁺⁻ != Σ f_λ⁺")
            });
            report.check(BigUint::from(m) * &f + &plus_minus == BigUint::from(n) * down, || {
                format!("({shape}): m f_λ + Σ f_λ⁺⁻ != n Σ f_λ⁻")
            });
        }
    }
    report
}

/// Checks `Σ_{λ⊢n} f_λ² = n!` for every `n <= n_max`.
pub fn verify_dimension_formula(n_max: usize) -> Report {
    let mut report = Report::new(format!("dimension formula, n <= {n_max}"));
    for n in 0..=n_max {
        let sum: BigUint = all_partitions(n)
            .iter()
            .map(|s| {
                let f = count_standard(s);
                &f * &f
            })
            .sum();
        let expected = factorial(n);
        report.check(sum == expected, || format!("n = {n}: Σ f_λ² = {sum}, n! = {expected}"));
    }
    report
}
