/// Row-major bit matrix, one padded run of words per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        BitMatrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        let mut b = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                b.set(r, c, true);
            }
        }
        b
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.words[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.stride + c / 64];
        if bit {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn row_count(&self, r: usize) -> u32 {
        self.words[r * self.stride..(r + 1) * self.stride]
            .iter()
            .map(|w| w.count_ones())
            .sum()
    }

    pub fn col_counts(&self) -> Vec<u32> {
        let mut counts = vec![0; self.cols];
        for r in 0..self.rows {
            for (k, &word) in self.words[r * self.stride..(r + 1) * self.stride]
                .iter()
                .enumerate()
            {
                let mut w = word;
                while w != 0 {
                    let bit = w.trailing_zeros() as usize;
                    counts[k * 64 + bit] += 1;
                    w &= w - 1;
                }
            }
        }
        counts
    }
}
