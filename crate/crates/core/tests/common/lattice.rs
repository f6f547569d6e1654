/// Index of span(v1, v2) in its saturation, counting integer points in the
/// half-open fundamental parallelogram.
pub fn index_by_counting(v1: &[i64], v2: &[i64]) -> u64 {
    let d = v1.len();
    let (a, b, m) = (0..d)
        .flat_map(|a| (a + 1..d).map(move |b| (a, b)))
        .map(|(a, b)| (a, b, v1[a] * v2[b] - v1[b] * v2[a]))
        .find(|t| t.2 != 0)
        .expect("independent pair");
    let lo: Vec<i64> = (0..d).map(|k| v1[k].min(0) + v2[k].min(0)).collect();
    let hi: Vec<i64> = (0..d).map(|k| v1[k].max(0) + v2[k].max(0)).collect();
    let mut count = 0;
    let mut w = lo.clone();
    loop {
        // α·m and β·m by Cramer's rule on coordinates a, b
        let am = w[a] * v2[b] - w[b] * v2[a];
        let bm = v1[a] * w[b] - v1[b] * w[a];
        let inside = |t: i64| if m > 0 { (0..m).contains(&t) } else { (m + 1..=0).contains(&t) };
        if inside(am) && inside(bm) && (0..d).all(|k| m * w[k] == am * v1[k] + bm * v2[k]) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == d {
                return count;
            }
            if w[k] < hi[k] {
                w[k] += 1;
                break;
            }
            w[k] = lo[k];
            k += 1;
        }
    }
}

/// Smith normal form of an integer matrix by row and column operations;
/// returns the nonzero diagonal.
pub fn smith_diagonal(rows: &[Vec<i64>]) -> Vec<i64> {
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let (r, c) = (m.len(), m.first().map_or(0, Vec::len));
    let mut diag = Vec::new();
    for t in 0..r.min(c) {
        loop {
            // pivot: smallest nonzero entry of the trailing block
            let Some((pr, pc)) = (t..r)
                .flat_map(|i| (t..c).map(move |j| (i, j)))
                .filter(|&(i, j)| m[i][j] != 0)
                .min_by_key(|&(i, j)| m[i][j].abs())
            else {
                return diag;
            };
            m.swap(t, pr);
            for row in m.iter_mut() {
                row.swap(t, pc);
            }
            let p = m[t][t];
            let mut clean = true;
            for i in t + 1..r {
                let q = m[i][t] / p;
                for j in t..c {
                    m[i][j] -= q * m[t][j];
                }
                clean &= m[i][t] == 0;
            }
            for j in t + 1..c {
                let q = m[t][j] / p;
                for i in t..r {
                    m[i][j] -= q * m[i][t];
                }
                clean &= m[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // the pivot must divide the rest of the block
            if let Some(i) = (t + 1..r).find(|&i| (t + 1..c).any(|j| m[i][j] % p != 0)) {
                for j in t..c {
                    m[t][j] += m[i][j];
                }
                continue;
            }
            diag.push(p.abs());
            break;
        }
    }
    diag
}
