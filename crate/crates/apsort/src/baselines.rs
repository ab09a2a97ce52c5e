//! Reference sorts used as independent oracles and benchmark baselines.
//!
//! None of these share code with the associative permutation sort; the
//! oracle in particular is a plain hand-written merge sort so a bug in the
//! tagged-word machinery cannot hide behind a shared helper.

/// Independent correctness oracle: returns an ascending copy of `keys`.
///
/// Bottom-up merge sort over a scratch buffer. Deliberately boring.
pub fn oracle_sort(keys: &[u64]) -> Vec<u64> {
    let mut a = keys.to_vec();
    let n = a.len();
    if n < 2 {
        return a;
    }
    let mut b = a.clone();
    let mut width = 1;
    while width < n {
        let mut start = 0;
        while start < n {
            let mid = usize::min(start + width, n);
            let end = usize::min(start + 2 * width, n);
            let (mut i, mut j, mut k) = (start, mid, start);
            while i < mid && j < end {
                if a[i] <= a[j] {
                    b[k] = a[i];
                    i += 1;
                } else {
                    b[k] = a[j];
                    j += 1;
                }
                k += 1;
            }
            b[k..k + (mid - i)].copy_from_slice(&a[i..mid]);
            let k = k + (mid - i);
            b[k..k + (end - j)].copy_from_slice(&a[j..end]);
            start = end;
        }
        std::mem::swap(&mut a, &mut b);
        width *= 2;
    }
    a
}

/// Least-significant-digit radix sort with byte-wide digits (8 passes).
pub fn lsd_radix_sort(keys: &mut [u64]) {
    let n = keys.len();
    if n < 2 {
        return;
    }
    let mut scratch = vec![0u64; n];
    for pass in 0..8 {
        let shift = pass * 8;
        let mut counts = [0usize; 256];
        for &k in keys.iter() {
            counts[((k >> shift) & 0xff) as usize] += 1;
        }
        // Skip passes where every key shares the digit.
        if counts.iter().any(|&c| c == n) {
            continue;
        }
        let mut offsets = [0usize; 256];
        let mut total = 0;
        for (o, &c) in offsets.iter_mut().zip(counts.iter()) {
            *o = total;
            total += c;
        }
        for &k in keys.iter() {
            let d = ((k >> shift) & 0xff) as usize;
            scratch[offsets[d]] = k;
            offsets[d] += 1;
        }
        keys.copy_from_slice(&scratch);
    }
}

/// Bucket sort with `n` buckets, index `(key - min) * n / m`, insertion
/// sort within each bucket.
pub fn bucket_sort(keys: &mut [u64]) {
    let n = keys.len();
    if n < 2 {
        return;
    }
    let min = *keys.iter().min().expect("non-empty");
    let max = *keys.iter().max().expect("non-empty");
    let m = max - min + 1;
    let mut buckets: Vec<Vec<u64>> = vec![Vec::new(); n];
    for &k in keys.iter() {
        let index = ((k - min) as u128 * n as u128 / m as u128) as usize;
        buckets[index].push(k);
    }
    let mut out = 0;
    for bucket in buckets.iter_mut() {
        insertion_sort(bucket);
        keys[out..out + bucket.len()].copy_from_slice(bucket);
        out += bucket.len();
    }
}

fn insertion_sort(keys: &mut [u64]) {
    for i in 1..keys.len() {
        let mut j = i;
        while j > 0 && keys[j - 1] > keys[j] {
            keys.swap(j - 1, j);
            j -= 1;
        }
    }
}

/// Comparison baseline: the platform's default unstable sort.
pub fn comparison_sort(keys: &mut [u64]) {
    keys.sort_unstable();
}
