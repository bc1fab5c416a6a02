/// Sparse table answering range-minimum position queries in `O(1)` after
/// `O(n log n)` preprocessing.
#[derive(Debug, Clone)]
pub struct SparseTable {
    values: Vec<u32>,
    // levels[e][i] = position of the minimum of values[i .. i + 2^e]
    levels: Vec<Vec<u32>>,
}

impl SparseTable {
    pub fn new(values: Vec<u32>) -> Self {
        let n = values.len();
        let mut levels: Vec<Vec<u32>> = vec![(0..n as u32).collect()];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let row = (0..=n - 2 * width)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + width]);
                    if values[b as usize] < values[a as usize] {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            levels.push(row);
            width *= 2;
        }
        SparseTable { values, levels }
    }

    /// Position of a minimum in `values[lo..=hi]`; leftmost on ties.
    #[inline]
    pub fn argmin(&self, lo: usize, hi: usize) -> usize {
        debug_assert!(lo <= hi && hi < self.values.len());
        let e = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.levels[e];
        let (a, b) = (row[lo], row[hi + 1 - (1 << e)]);
        if self.values[b as usize] < self.values[a as usize] {
            b as usize
        } else {
            a as usize
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
