use std::collections::HashMap;

use lagcorr::partitions::Partition;

/// Cycle type and inversion-parity sign of every permutation of `n`
/// letters, by Heap's algorithm.
pub fn symmetric_group_census(n: usize) -> HashMap<Partition, (u64, i32)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut census = HashMap::new();
    let mut record = |p: &[usize]| {
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for s in 0..n {
            if !seen[s] {
                let mut len = 0;
                let mut j = s;
                while !seen[j] {
                    seen[j] = true;
                    j = p[j];
                    len += 1;
                }
                cycles.push(len);
            }
        }
        let mut inversions = 0;
        for a in 0..n {
            for b in a + 1..n {
                if p[a] > p[b] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let entry = census.entry(Partition::new(cycles).unwrap()).or_insert((0, sign));
        assert_eq!(entry.1, sign, "sign is a class function");
        entry.0 += 1;
    };
    let mut c = vec![0usize; n];
    record(&perm);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            record(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    census
}
