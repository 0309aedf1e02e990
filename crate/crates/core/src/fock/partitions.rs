//! Partition enumeration and counting helpers for the Fock basis.

/// Call `f` once per partition of `n`, presented as `(size, multiplicity)`
/// pairs with sizes strictly descending. The empty partition is visited
/// for `n = 0`.
pub fn for_each_partition<F: FnMut(&[(u32, u32)])>(n: u32, f: &mut F) {
    let mut acc: Vec<(u32, u32)> = Vec::new();
    rec(n, n, &mut acc, f);
}

fn rec<F: FnMut(&[(u32, u32)])>(n: u32, max_part: u32, acc: &mut Vec<(u32, u32)>, f: &mut F) {
    if n == 0 {
        f(acc);
        return;
    }
    let top = max_part.min(n);
    for size in (1..=top).rev() {
        for count in 1..=n / size {
            acc.push((size, count));
            rec(n - size * count, size - 1, acc, f);
            acc.pop();
        }
    }
}

/// `counts[k] = p(k)` for `0 <= k <= max`, by the bounded-part recurrence.
pub fn partition_counts(max: usize) -> Vec<u64> {
    let mut counts = vec![0u64; max + 1];
    counts[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            counts[n] += counts[n - part];
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_matches_counts() {
        let counts = partition_counts(12);
        assert_eq!(&counts[..8], &[1, 1, 2, 3, 5, 7, 11, 15]);
        for n in 0..=12u32 {
            let mut seen = 0u64;
            for_each_partition(n, &mut |parts| {
                let total: u32 = parts.iter().map(|(s, c)| s * c).sum();
                assert_eq!(total, n);
                seen += 1;
            });
            assert_eq!(seen, counts[n as usize]);
        }
    }
}
