//! Bit-packed edge codes for small mixed graphs.
//!
//! A graph on `n <= 9` vertices is encoded in a `u128` with two bits per
//! vertex pair: `00` no edge, `01` undirected, `10` arc from the smaller
//! endpoint to the larger, `11` arc in the opposite direction.  Pairs are
//! ordered lexicographically and packed most-significant-first, so comparing
//! two codes as integers is the same as comparing their pair sequences
//! lexicographically.  The canonical code of a graph is the smallest code
//! among all relabelings.
//!
//! Invariants:
//! - every code for `n` vertices fits in the low `2 * n*(n-1)/2` bits;
//! - `converse_code` is an involution and commutes with relabeling;
//! - `canonical_code` is constant on isomorphism classes and canonical codes
//!   compare equal exactly when the underlying graphs are isomorphic.

/// Largest vertex count the packed representation supports.
pub(crate) const MAX_N: usize = 9;

/// Largest number of vertex pairs: `MAX_N * (MAX_N - 1) / 2`.
pub(crate) const MAX_SLOTS: usize = 36;

/// Number of pair slots for an `n`-vertex graph.
pub(crate) fn slot_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Slot index of the pair `(u, v)` with `u < v`, both zero-based.
pub(crate) fn slot_index(u: usize, v: usize, n: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + v - u - 1
}

/// Reads the two-bit value stored in slot `s` of a code with `slots` slots.
pub(crate) fn get_slot(code: u128, s: usize, slots: usize) -> u8 {
    ((code >> (2 * (slots - 1 - s))) & 3) as u8
}

/// Returns `code` with slot `s` set to `value` (the slot must be clear).
pub(crate) fn put_slot(code: u128, s: usize, slots: usize, value: u8) -> u128 {
    debug_assert_eq!(get_slot(code, s, slots), 0);
    code | (u128::from(value) << (2 * (slots - 1 - s)))
}

/// Mask with `01` in every slot, used to flip arc directions in bulk.
fn low_bits_mask(slots: usize) -> u128 {
    let mut mask = 0u128;
    for s in 0..slots {
        mask |= 1u128 << (2 * s);
    }
    mask
}

/// Code of the converse graph: every arc reverses, undirected edges stay.
///
/// Arc values are `10` and `11`, so XOR-ing the high bit of each slot into
/// its low bit swaps them while leaving `00` and `01` untouched.
pub(crate) fn converse_code(code: u128, slots: usize) -> u128 {
    code ^ ((code >> 1) & low_bits_mask(slots))
}

// --- relabeling tables ------------------------------------------------------

/// Precomputed action of one vertex permutation on slot positions.
///
/// Entry `src[t]` is the slot of the original code that lands in target slot
/// `t` after relabeling, and bit `t` of `flip` is set when the pair's
/// endpoints swap order, which reverses any arc stored there.  Tables are
/// target-major so a relabeled code can be compared against a reference
/// most-significant slot first and abandoned at the first difference.
pub(crate) struct SlotTable {
    src: [u8; MAX_SLOTS],
    flip: u64,
}

/// All permutations of `0..n` in Heap's-algorithm order, starting with the
/// identity.
pub(crate) fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut items: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    out.push(items.clone());
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            out.push(items.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Builds the slot table for relabeling by `image` (old label -> new label).
pub(crate) fn slot_table(image: &[u8], n: usize) -> SlotTable {
    let mut inv = [0u8; MAX_N];
    for (old, &new) in image.iter().enumerate() {
        inv[new as usize] = old as u8;
    }
    let mut table = SlotTable {
        src: [0; MAX_SLOTS],
        flip: 0,
    };
    for a in 0..n {
        for b in (a + 1)..n {
            let t = slot_index(a, b, n);
            let (x, y) = (inv[a] as usize, inv[b] as usize);
            let (lo, hi, flipped) = if x < y { (x, y, false) } else { (y, x, true) };
            table.src[t] = slot_index(lo, hi, n) as u8;
            if flipped {
                table.flip |= 1 << t;
            }
        }
    }
    table
}

/// Slot tables for every permutation of `0..n`, identity first.
pub(crate) fn slot_tables(n: usize) -> Vec<SlotTable> {
    permutations(n)
        .iter()
        .map(|image| slot_table(image, n))
        .collect()
}

/// Value of target slot `t` after relabeling `code` through `table`.
fn relabeled_slot(code: u128, table: &SlotTable, t: usize, slots: usize) -> u8 {
    let mut v = get_slot(code, table.src[t] as usize, slots);
    if table.flip & (1 << t) != 0 {
        v ^= v >> 1;
    }
    v
}

/// Applies a slot table to a whole code.
pub(crate) fn relabel_code(code: u128, table: &SlotTable, slots: usize) -> u128 {
    let mut out = 0u128;
    for t in 0..slots {
        out = put_slot(out, t, slots, relabeled_slot(code, table, t, slots));
    }
    out
}

/// Compares the relabeling of `code` through `table` against `reference`
/// without materializing it, bailing out at the first differing slot.
pub(crate) fn cmp_relabeled(
    code: u128,
    table: &SlotTable,
    reference: u128,
    slots: usize,
) -> std::cmp::Ordering {
    for t in 0..slots {
        let v = relabeled_slot(code, table, t, slots);
        let w = get_slot(reference, t, slots);
        if v != w {
            return v.cmp(&w);
        }
    }
    std::cmp::Ordering::Equal
}

/// Whether `code` is the smallest code in its isomorphism class.
///
/// Scanning codes in increasing order and keeping the canonical ones
/// enumerates isomorphism classes without storing a seen-set.
pub(crate) fn is_canonical(code: u128, tables: &[SlotTable], slots: usize) -> bool {
    tables
        .iter()
        .all(|t| cmp_relabeled(code, t, code, slots) != std::cmp::Ordering::Less)
}

/// Whether some relabeling of `code` equals `other`.
pub(crate) fn is_isomorphic_code(code: u128, other: u128, tables: &[SlotTable], slots: usize) -> bool {
    tables
        .iter()
        .any(|t| cmp_relabeled(code, t, other, slots) == std::cmp::Ordering::Equal)
}

/// Smallest code among all relabelings of `code`.
pub(crate) fn canonical_code(code: u128, tables: &[SlotTable], slots: usize) -> u128 {
    let mut best = code;
    for table in tables {
        if cmp_relabeled(code, table, best, slots) == std::cmp::Ordering::Less {
            best = relabel_code(code, table, slots);
        }
    }
    best
}

// -----------------------------------------------------------------------------
