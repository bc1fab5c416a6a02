//! Suffix array by prefix doubling with radix passes, and Kasai's LCP.

/// Suffix array of `text`, `O(n log n)`.
pub fn suffix_array(text: &[u8]) -> Vec<u32> {
    let n = text.len();
    if n == 0 {
        return Vec::new();
    }
    let mut sa: Vec<u32> = (0..n as u32).collect();
    sa.sort_unstable_by_key(|&i| text[i as usize]);
    let mut rank: Vec<u32> = text.iter().map(|&b| b as u32).collect();
    let mut next_rank = vec![0u32; n];
    let mut tmp = Vec::with_capacity(n);
    let mut counts = Vec::new();
    let mut classes = 256usize;
    let mut h = 1;
    loop {
        // Order by the second half: suffixes too short to have one first.
        tmp.clear();
        tmp.extend((n.saturating_sub(h)..n).map(|i| i as u32));
        tmp.extend(sa.iter().filter(|&&p| p as usize >= h).map(|&p| p - h as u32));

        // Stable counting sort by the first half.
        counts.clear();
        counts.resize(classes + 1, 0usize);
        for &p in &tmp {
            counts[rank[p as usize] as usize + 1] += 1;
        }
        for c in 1..counts.len() {
            counts[c] += counts[c - 1];
        }
        for &p in &tmp {
            let slot = &mut counts[rank[p as usize] as usize];
            sa[*slot] = p;
            *slot += 1;
        }

        let key = |p: u32| {
            let p = p as usize;
            (rank[p], if p + h < n { rank[p + h] as i64 } else { -1 })
        };
        next_rank[sa[0] as usize] = 0;
        for x in 1..n {
            let bump = (key(sa[x - 1]) != key(sa[x])) as u32;
            next_rank[sa[x] as usize] = next_rank[sa[x - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut next_rank);
        classes = rank[sa[n - 1] as usize] as usize + 1;
        if classes == n {
            break;
        }
        h *= 2;
    }
    sa
}

/// `lcp[r]` = longest common prefix of the suffixes at ranks `r - 1` and `r`;
/// `lcp[0] = 0`.
pub fn lcp_array(text: &[u8], sa: &[u32]) -> Vec<u32> {
    let n = text.len();
    let mut rank = vec![0u32; n];
    for (r, &p) in sa.iter().enumerate() {
        rank[p as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && text[i + h] == text[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
