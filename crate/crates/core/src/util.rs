//! Small shared enumeration helpers.

/// Visits every k-subset of 0..n in lexicographic order. The callback
/// returns false to stop; the function reports whether enumeration ran to
/// completion.
pub(crate) fn for_each_subset_of_size(
    n: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> bool {
    if k > n {
        return true;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        if !f(&cur) {
            return false;
        }
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return true;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Σ_{i<k} C(n,i), saturating. The number of subsets a |S| < k sweep visits.
pub(crate) fn subsets_below(n: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for i in 0..k {
        total = total.saturating_add(binom);
        if i < n {
            binom = binom.saturating_mul((n - i) as u128) / (i as u128 + 1);
        } else {
            break;
        }
    }
    total
}
