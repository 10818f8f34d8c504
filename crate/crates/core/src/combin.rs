//! Small exact-combinatorics helpers shared across the crate.

use alloc::vec::Vec;

/// Binomial coefficient `C(n, k)` as a `u128`.
///
/// Accumulated along a Pascal row, so no intermediate ever exceeds twice the
/// final value: every `C(n, k)` with `n <= 128` fits (the worst case is
/// `C(128, 64) ~ 2^124`), as do the small-`k` cases used by the counting
/// bounds at large `n`. A value past `u128` panics rather than wraps.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as usize;
    let mut row = alloc::vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        let hi = k.min(i as usize);
        for j in (1..=hi).rev() {
            row[j] = row[j].checked_add(row[j - 1]).expect("binomial overflow");
        }
    }
    row[k]
}

/// Calls `f` once for every `k`-subset of `{0, 1, ..., n-1}`, in
/// lexicographic order of the index vector.
///
/// The callback borrows a scratch slice that is reused between calls, so the
/// whole enumeration allocates one small vector regardless of how many
/// subsets are visited. Several hot paths (translator spheres, vertex
/// enumeration) iterate millions of subsets, which is why this is a callback
/// rather than an allocating iterator.
pub fn for_each_combination<F: FnMut(&[u32])>(n: u32, k: u32, mut f: F) {
    if k > n {
        return;
    }
    let k = k as usize;
    let mut idx: Vec<u32> = (0..k as u32).collect();
    loop {
        f(&idx);
        // Advance: find the rightmost index that can still move up.
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != n - (k - i) as u32 {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
