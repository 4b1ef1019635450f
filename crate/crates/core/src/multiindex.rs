//! Multi-index bookkeeping for coefficient tensors.
//!
//! Tuples over `{0, .., m-1}` are encoded big-endian: the first entry is the
//! most significant digit. Cochain coefficient tensors follow the same
//! convention with the output index appended as the least significant digit.

/// `m^n` with an overflow check.
pub fn tuple_count(m: usize, n: usize) -> usize {
    m.checked_pow(n as u32).expect("index space overflows usize")
}

/// Encodes a tuple big-endian.
pub fn encode(m: usize, tuple: &[usize]) -> usize {
    let mut idx = 0;
    for &t in tuple {
        debug_assert!(t < m);
        idx = idx * m + t;
    }
    idx
}

/// Decodes the `idx`-th tuple of length `n` (inverse of [`encode`]).
pub fn decode(m: usize, n: usize, idx: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    let mut rest = idx;
    for slot in (0..n).rev() {
        out[slot] = rest % m;
        rest /= m;
    }
    debug_assert_eq!(rest, 0);
    out
}

/// All tuples of length `n` over `m` symbols, in lexicographic order.
pub fn tuples(m: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..tuple_count(m, n)).map(move |idx| decode(m, n, idx))
}

/// All strictly increasing `k`-subsets of `{0, .., n-1}`, lexicographically.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let needed = k - current.len();
        for i in start..=(n.saturating_sub(needed)) {
            current.push(i);
            rec(n, k, i + 1, current, out);
            current.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, &mut current, &mut out);
    }
    out
}

/// All ordered `parts`-tuples of positive integers summing to `total`.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut current = Vec::with_capacity(parts);
    fn rec(total: usize, parts: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            if total >= 1 {
                current.push(total);
                out.push(current.clone());
                current.pop();
            }
            return;
        }
        for first in 1..=(total + 1).saturating_sub(parts) {
            current.push(first);
            rec(total - first, parts - 1, current, out);
            current.pop();
        }
    }
    rec(total, parts, &mut current, &mut out);
    out
}

