//! Packing numbers, constructions, and the packing-extension procedure.
//!
//! For block size `k` and point count `v`, write `D(v, k)` for the maximum
//! number of `k`-blocks on `v` points with every point pair in at most one
//! block. For `k = 3` and `k = 4` this maximum is known in closed form as a
//! quadratic depending only on the residue of `v` (mod 6 or mod 12), with
//! six exceptional `v` for `k = 4` where the quadratic overshoots by one.
//!
//! The extension procedure takes an optimal family of `(d/2 + 1)`-blocks and
//! produces, on `d/2 - 1` extra points, a family with **two** more blocks —
//! the device that turns per-length optimal codes into optimal codes two
//! lengths up. Both rounds of the procedure are implemented exactly as
//! selection + rewiring; the second round can clash with the first through
//! now-shared points, so the result is validated and the whole attempt
//! retried under a fresh seed when a clash occurs.

use core::fmt;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::packing::{Block, Packing};
use crate::Rat;

/// The `v` where the block-size-4 quadratic does not give `D(v, 4)`
/// (the true value is one less at each of these).
pub const QUADRUPLE_EXCEPTIONS: [u64; 6] = [8, 9, 10, 11, 17, 19];

/// Errors from this module's constructions and checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PackingsError {
    /// The triple-system construction needs `v ≡ 3 (mod 6)`.
    BadResidue { v: u32 },
    /// Extension of a packing whose block size does not match `d/2 + 1`.
    BlockSizeMismatch { k: u32, d: u32 },
    /// Extension requires a valid packing as input.
    InvalidPacking,
    /// The closed form for quadruples is off at this exceptional `v`.
    FormulaUndefined { v: u64 },
    /// Closed forms exist only for block sizes 3 and 4.
    UnsupportedBlockSize { k: u32 },
    /// Polynomial lower bounds are provided only for distances 4 and 6.
    UnsupportedDistance { d: u32 },
}

impl fmt::Display for PackingsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PackingsError::BadResidue { v } => {
                write!(
                    f,
                    "triple-system construction needs v = 3 (mod 6), got v={v}"
                )
            }
            PackingsError::BlockSizeMismatch { k, d } => {
                write!(
                    f,
                    "extension for distance {d} needs block size {}, got {k}",
                    d / 2 + 1
                )
            }
            PackingsError::InvalidPacking => write!(f, "input packing fails pair verification"),
            PackingsError::FormulaUndefined { v } => {
                write!(f, "closed form for quadruples is off by one at v={v}")
            }
            PackingsError::UnsupportedBlockSize { k } => {
                write!(f, "no closed form for block size {k} (only 3 and 4)")
            }
            PackingsError::UnsupportedDistance { d } => {
                write!(
                    f,
                    "no polynomial lower bound for distance {d} (only 4 and 6)"
                )
            }
        }
    }
}

impl core::error::Error for PackingsError {}

/// Maximum number of triples on `v` points with all pairs distinct:
/// a residue-dependent quadratic, exact for every `v >= 3`.
///
/// # Panics
///
/// Panics if `v < 3`.
pub fn triple_packing_number(v: u64) -> u64 {
    assert!(v >= 3, "triple packings need at least 3 points");
    let num = match v % 6 {
        1 | 3 => v * v - v,     // pairs partition perfectly
        0 | 2 => v * v - 2 * v, // one point left out of the pair cover
        4 => v * v - 2 * v - 2,
        5 => v * v - v - 8,
        _ => unreachable!(),
    };
    debug_assert_eq!(num % 6, 0, "closed form must be divisible by 6 at v={v}");
    num / 6
}

/// Maximum number of quadruples on `v` points with all pairs distinct, or
/// `None` at the six exceptional `v` where the quadratic is off by one.
///
/// # Panics
///
/// Panics if `v < 4`.
pub fn quadruple_packing_number(v: u64) -> Option<u64> {
    assert!(v >= 4, "quadruple packings need at least 4 points");
    if QUADRUPLE_EXCEPTIONS.contains(&v) {
        return None;
    }
    let num = match v % 12 {
        1 | 4 => v * v - v,
        0 | 3 => v * v - 3 * v,
        2 | 8 => v * v - 2 * v,
        5 | 11 => v * v - 2 * v - 3,
        7 | 10 => v * v - v - 18,
        6 | 9 => v * v - 3 * v - 6,
        _ => unreachable!(),
    };
    debug_assert_eq!(num % 12, 0, "closed form must be divisible by 12 at v={v}");
    Some(num / 12)
}

/// The packing number for block size `k = d/2 + 1`, routed through the right
/// closed form. `None` at the quadruple exceptions.
pub fn packing_number_formula(v: u64, k: u32) -> Result<Option<u64>, PackingsError> {
    match k {
        2 => Ok(Some(v * (v - 1) / 2)), // every pair is its own block
        3 => Ok(Some(triple_packing_number(v))),
        4 => Ok(quadruple_packing_number(v)),
        _ => Err(PackingsError::UnsupportedBlockSize { k }),
    }
}

/// Residue-free quadratic lower bound on the packing number for the block
/// size belonging to distance `d ∈ {4, 6}`:
/// `(n² - 2n - 2)/6` for `d = 4` and `(n² - 3n - 6)/12` for `d = 6`.
///
/// This undercuts (or meets) the residue quadratic in every class once
/// `n >= 6`; it is the envelope the threshold computation compares against
/// the per-weight-class caps.
pub fn polynomial_lower_bound(d: u32, n: u64) -> Result<Rat, PackingsError> {
    let n = n as i64;
    match d {
        4 => Ok(Rat::new(n * n - 2 * n - 2, 6)),
        6 => Ok(Rat::new(n * n - 3 * n - 6, 12)),
        _ => Err(PackingsError::UnsupportedDistance { d }),
    }
}

/// First-fit packing: shuffle the point labels by `seed`, then sweep all
/// `k`-subsets in lexicographic order of the shuffled labels, keeping each
/// block whose pairs are all still free. The result is maximal by inclusion
/// and deterministic per seed.
///
/// # Panics
///
/// Panics unless `2 <= k <= v`.
pub fn greedy_packing(v: u32, k: u32, seed: u64) -> Packing {
    assert!(
        k >= 2 && k <= v,
        "greedy packing needs 2 <= k <= v, got v={v} k={k}"
    );
    let mut labels: Vec<u32> = (1..=v).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    labels.shuffle(&mut rng);

    // Triangular "pair already covered" bitmap over original labels.
    let vu = v as usize;
    let mut used = alloc::vec![0u64; (vu * vu).div_ceil(64)];
    let pair_index = |a: u32, b: u32| -> usize { (a as usize - 1) * vu + (b as usize - 1) };
    let mut blocks: Vec<Block> = Vec::new();
    let mut candidate: Block = Vec::with_capacity(k as usize);
    crate::combin::for_each_combination(v, k, |idxs| {
        candidate.clear();
        candidate.extend(idxs.iter().map(|&i| labels[i as usize]));
        candidate.sort_unstable();
        let mut free = true;
        'scan: for i in 0..candidate.len() {
            for j in i + 1..candidate.len() {
                let p = pair_index(candidate[i], candidate[j]);
                if used[p / 64] >> (p % 64) & 1 == 1 {
                    free = false;
                    break 'scan;
                }
            }
        }
        if free {
            for i in 0..candidate.len() {
                for j in i + 1..candidate.len() {
                    let p = pair_index(candidate[i], candidate[j]);
                    used[p / 64] |= 1 << (p % 64);
                }
            }
            blocks.push(candidate.clone());
        }
    });
    Packing::new(v, k, blocks).expect("greedy blocks are well-shaped by construction")
}

/// The classical triple system on `v = 3m` points (`m` odd), built from the
/// cyclic group of order `m`: point `(x, i)` with `x` in `Z_m` and `i` in
/// `{0, 1, 2}` becomes `1 + x + i*m`. Blocks are the `m` "columns"
/// `{(x,0), (x,1), (x,2)}` plus, for every `x < y` and layer `i`, the triple
/// `{(x,i), (y,i), ((x+y)/2, i+1)}` — exactly `v(v-1)/6` blocks, covering
/// every pair once.
pub fn bose_triple_system(v: u32) -> Result<Packing, PackingsError> {
    if v < 3 || v % 6 != 3 {
        return Err(PackingsError::BadResidue { v });
    }
    let m = v / 3;
    let half = m.div_ceil(2); // multiplicative inverse of 2 mod m (m odd)
    let point = |x: u32, layer: u32| 1 + x + layer * m;
    let mut blocks: Vec<Block> = Vec::with_capacity((v as usize * (v as usize - 1)) / 6);
    for x in 0..m {
        blocks.push(alloc::vec![point(x, 0), point(x, 1), point(x, 2)]);
    }
    for x in 0..m {
        for y in x + 1..m {
            let z = ((x + y) * half) % m;
            for layer in 0..3 {
                let mut b =
                    alloc::vec![point(x, layer), point(y, layer), point(z, (layer + 1) % 3)];
                b.sort_unstable();
                blocks.push(b);
            }
        }
    }
    Ok(Packing::new(v, 3, blocks).expect("construction yields well-shaped distinct blocks"))
}

/// Picks a `k`-set `S` of points meeting every block in at most two points,
/// avoiding `forbidden`, by the iterative prohibition procedure: pick a
/// point, then bar every point that would give some block three picks —
/// i.e. after picking two points of a block, bar the block's remaining
/// points. Returns the sorted set, or `None` when the pool runs dry first.
///
/// Random choices come from a seeded generator, so the outcome is a
/// deterministic function of `(p, k, forbidden, seed)`.
pub fn select_transversal_set(
    p: &Packing,
    k: u32,
    forbidden: &BTreeSet<u32>,
    seed: u64,
) -> Option<Vec<u32>> {
    select_with_guard(p, k, forbidden, None, seed)
}

/// The selection loop behind [`select_transversal_set`], with an optional
/// extra rejection rule used by [`extend_packing`]'s second round.
///
/// When `hot` is given, a candidate is also rejected if, together with an
/// already picked point, it forms a pair whose covering block holds a hot
/// third-party member: rewiring that block would hand the hot point a second
/// pair with a new point. Each accepted pick marks the third-party members
/// of its covering blocks hot in turn. Rejected candidates leave the pool
/// for good — `hot` only grows, so they can never become acceptable later.
fn select_with_guard(
    p: &Packing,
    k: u32,
    forbidden: &BTreeSet<u32>,
    hot: Option<&BTreeSet<u32>>,
    seed: u64,
) -> Option<Vec<u32>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u32> = (1..=p.v()).filter(|x| !forbidden.contains(x)).collect();
    let mut picked: Vec<u32> = Vec::with_capacity(k as usize);
    let mut hot: Option<BTreeSet<u32>> = hot.cloned();
    // picks_in[b] = how many chosen points block b already contains.
    let mut picks_in = alloc::vec![0u8; p.block_count()];
    // Covering block of a picked pair, if any: the pair, its block index.
    let covering = |blocks: &[Block], a: u32, b: u32| -> Option<usize> {
        blocks
            .iter()
            .position(|blk| blk.binary_search(&a).is_ok() && blk.binary_search(&b).is_ok())
    };
    'next_pick: while picked.len() < k as usize {
        let a = 'candidate: loop {
            if pool.is_empty() {
                return None;
            }
            let a = pool.swap_remove(rng.gen_range(0..pool.len()));
            if let Some(hot) = &hot {
                for &c in &picked {
                    if let Some(bi) = covering(p.blocks(), a, c) {
                        let scheduled_heat = p.blocks()[bi]
                            .iter()
                            .any(|&x| x != a && x != c && hot.contains(&x));
                        if scheduled_heat {
                            // Dropped silently: the swap_remove above already
                            // took it out of the pool for this round.
                            continue 'candidate;
                        }
                    }
                }
            }
            break a;
        };
        if let Some(hot) = &mut hot {
            for &c in &picked {
                if let Some(bi) = covering(p.blocks(), a, c) {
                    hot.extend(p.blocks()[bi].iter().filter(|&&x| x != a && x != c));
                }
            }
        }
        picked.push(a);
        for (bi, block) in p.blocks().iter().enumerate() {
            if block.binary_search(&a).is_ok() {
                picks_in[bi] += 1;
                if picks_in[bi] == 2 {
                    // A third point of this block would break the property.
                    pool.retain(|x| block.binary_search(x).is_err());
                }
            }
        }
        continue 'next_pick;
    }
    picked.sort_unstable();
    Some(picked)
}

/// One block replacement performed by the extension procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rewire {
    /// Which of the two rounds performed it (1 or 2).
    pub round: u8,
    /// The block as it was before the replacement.
    pub before: Block,
    /// The block afterwards: one selected point swapped for a new point.
    pub after: Block,
}

/// Successful outcome of [`extend_packing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionResult {
    /// Block count of the input family.
    pub input_blocks: usize,
    /// The extended family on `v + d/2 - 1` points with two extra blocks.
    pub output: Packing,
    /// The two selected sets appended as new blocks, in round order.
    pub added: (Block, Block),
    /// Every rewired block, in application order.
    pub rewires: Vec<Rewire>,
    /// 1-based index of the attempt that succeeded.
    pub attempts_used: u32,
}

/// Extends a valid family of `(d/2 + 1)`-blocks by two blocks, enlarging the
/// point set from `v` to `v + d/2 - 1`.
///
/// Each attempt runs two rounds. A round selects a transversal set `S` of
/// size `d/2 + 1` (second round: avoiding every point that shares a block
/// with the first round's new points), then rewires the blocks covering
/// pairs of `S` so those pairs become free — pairs `{a_i, a_j}` with
/// `i <= d/2 - 2` lose `a_i` to the `i`-th new point, and the three pairs
/// among the last three selected points are freed through the final new
/// point — and appends `S` itself. The first round never clashes; the
/// second can collide with the first through non-selected members the
/// rewired blocks keep, so its selection additionally rejects picks whose
/// scheduled rewire would keep a point already paired with a new point.
/// Every attempt is still validated end-to-end; failures (including
/// selections that run out of candidates) are retried under fresh
/// sub-seeds, up to `max_attempts`. `Ok(None)`
/// means all attempts failed — for some inputs (e.g. when the enlarged
/// point count cannot hold two more blocks) that is the honest answer, not
/// a search deficiency.
pub fn extend_packing(
    p: &Packing,
    d: u32,
    max_attempts: u32,
    seed: u64,
) -> Result<Option<ExtensionResult>, PackingsError> {
    if d < 4 || !d.is_multiple_of(2) || p.k() != d / 2 + 1 {
        return Err(PackingsError::BlockSizeMismatch { k: p.k(), d });
    }
    if !p.verify().valid {
        return Err(PackingsError::InvalidPacking);
    }
    let k = p.k();
    let v = p.v();
    let v_new = v + k - 2; // d/2 - 1 = k - 2 extra points

    for attempt in 0..max_attempts {
        // Distinct, deterministic sub-seeds per attempt and round.
        let base = seed.wrapping_add((attempt as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut rewires: Vec<Rewire> = Vec::new();

        // Round 1: select over the original family and ground set.
        let Some(s1) = select_transversal_set(p, k, &BTreeSet::new(), base) else {
            continue;
        };
        let mut blocks: Vec<Block> = p.blocks().to_vec();
        apply_rewires(&mut blocks, &s1, v, 1, &mut rewires);
        blocks.push(s1.clone());
        let Ok(intermediate) = Packing::new(v_new, k, blocks) else {
            continue;
        };
        if !intermediate.verify().valid {
            continue;
        }

        // Round 2: avoid everything sharing a block with the new points.
        // Points already paired with a new point are "hot": a rewire whose
        // block keeps a hot third-party member would duplicate that pair,
        // so the selection rejects picks that would schedule one.
        let mut forbidden: BTreeSet<u32> = BTreeSet::new();
        for b in intermediate.blocks() {
            if b.iter().any(|&x| x > v) {
                forbidden.extend(b.iter().copied());
            }
        }
        let hot: BTreeSet<u32> = forbidden.iter().copied().filter(|&x| x <= v).collect();
        let Some(s2) = select_with_guard(
            &intermediate,
            k,
            &forbidden,
            Some(&hot),
            base ^ 0x5851_F42D_4C95_7F2D,
        ) else {
            continue;
        };
        let mut blocks: Vec<Block> = intermediate.blocks().to_vec();
        apply_rewires(&mut blocks, &s2, v, 2, &mut rewires);
        blocks.push(s2.clone());
        let Ok(extended) = Packing::new(v_new, k, blocks) else {
            continue;
        };
        if !extended.verify().valid {
            continue;
        }

        return Ok(Some(ExtensionResult {
            input_blocks: p.block_count(),
            output: extended,
            added: (s1, s2),
            rewires,
            attempts_used: attempt + 1,
        }));
    }
    Ok(None)
}

/// Frees every covered pair of the selected set `s` (sorted, `|s| = k`) by
/// rewiring the covering blocks onto new points `v+1 ..= v+k-2`:
/// for `i <= k-3`, a block covering `{s[i], s[j]}` trades `s[i]` for point
/// `v+i+1`; the three pairs among the last three selected points are freed
/// through point `v+k-2`, each block dropping a different member so the
/// rewired blocks stay pairwise compatible.
fn apply_rewires(blocks: &mut [Block], s: &[u32], v: u32, round: u8, rewires: &mut Vec<Rewire>) {
    let k = s.len();
    let find_pair = |blocks: &[Block], a: u32, b: u32| -> Option<usize> {
        blocks
            .iter()
            .position(|blk| blk.binary_search(&a).is_ok() && blk.binary_search(&b).is_ok())
    };
    let mut swap = |blocks: &mut [Block], bi: usize, drop: u32, add: u32| {
        let before = blocks[bi].clone();
        blocks[bi].retain(|&x| x != drop);
        blocks[bi].push(add);
        blocks[bi].sort_unstable();
        rewires.push(Rewire {
            round,
            before,
            after: blocks[bi].clone(),
        });
    };
    // Early selected points: one new point each.
    for i in 0..k.saturating_sub(3) {
        let new_point = v + i as u32 + 1;
        for j in i + 1..k {
            if let Some(bi) = find_pair(blocks, s[i], s[j]) {
                swap(blocks, bi, s[i], new_point);
            }
        }
    }
    // Last three selected points: all three pairs through one new point,
    // each covering block giving up a different member.
    let (x, y, z) = (s[k - 3], s[k - 2], s[k - 1]);
    let new_point = v + k as u32 - 2;
    if let Some(bi) = find_pair(blocks, x, y) {
        swap(blocks, bi, x, new_point);
    }
    if let Some(bi) = find_pair(blocks, x, z) {
        swap(blocks, bi, z, new_point);
    }
    if let Some(bi) = find_pair(blocks, y, z) {
        swap(blocks, bi, y, new_point);
    }
}

/// Report of the growth inequality `D(v + delta, k) >= D(v, k) + 2`: two
/// extra blocks from `delta` extra points, the step that propagates
/// optimality between lengths. The checked deltas are `1` for triples and
/// `3` for quadruples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepCheckReport {
    pub k: u32,
    pub v: u64,
    /// Point growth: 1 for `k = 3`, 3 for `k = 4`.
    pub delta: u64,
    /// `D(v + delta, k)` from the closed form.
    pub lhs: u64,
    /// `D(v, k) + 2` from the closed form.
    pub rhs: u64,
    /// `lhs >= rhs`.
    pub holds: bool,
}

/// Evaluates the growth inequality at a single `v` using the closed forms
/// only (no search). This is a *checker*: the inequality is usually quoted
/// as holding for all `v >= 7` (triples) and `v >= 19` (quadruples), but it
/// in fact fails at `v ∈ {7, 9}` for triples — callers get the evaluated
/// sides and decide. Errors at the quadruple exceptions (either endpoint),
/// where the closed form does not apply.
pub fn step_lemma_check(k: u32, v: u64) -> Result<StepCheckReport, PackingsError> {
    let delta = match k {
        3 => 1u64,
        4 => 3u64,
        _ => return Err(PackingsError::UnsupportedBlockSize { k }),
    };
    let at = |x: u64| -> Result<u64, PackingsError> {
        packing_number_formula(x, k)
            .expect("k is 3 or 4 here")
            .ok_or(PackingsError::FormulaUndefined { v: x })
    };
    let lhs = at(v + delta)?;
    let rhs = at(v)? + 2;
    Ok(StepCheckReport {
        k,
        v,
        delta,
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}
