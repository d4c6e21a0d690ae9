//! Dense GF(2) linear algebra on bit-packed rows.

/// Row-major matrix over GF(2), each row packed into 64-bit words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<Vec<u64>>,
    cols: usize,
}

impl BitMatrix {
    pub fn from_rows(rows: &[Vec<bool>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let words = cols.div_ceil(64);
        let packed = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols);
                let mut w = vec![0u64; words];
                for (j, &bit) in r.iter().enumerate() {
                    if bit {
                        w[j / 64] |= 1 << (j % 64);
                    }
                }
                w
            })
            .collect();
        BitMatrix { rows: packed, cols }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.eliminate(None).0
    }

    /// Solves `self * x = rhs`, scanning pivot columns left to right.
    /// Free variables are set to zero, making the solution deterministic.
    pub fn solve(&self, rhs: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(rhs.len(), self.rows.len());
        let mut m = self.clone();
        let (_, pivots) = m.eliminate(Some(rhs.to_vec()));
        let aug = self.cols; // augmented column index
        // Inconsistent row: all-zero coefficients but nonzero rhs.
        for row in &m.rows {
            let coeff_zero = (0..self.cols).all(|j| row[j / 64] >> (j % 64) & 1 == 0);
            if coeff_zero && row[aug / 64] >> (aug % 64) & 1 == 1 {
                return None;
            }
        }
        let mut x = vec![false; self.cols];
        for (row_idx, col) in pivots.iter().enumerate() {
            x[*col] = m.rows[row_idx][aug / 64] >> (aug % 64) & 1 == 1;
        }
        Some(x)
    }

    /// Basis of the right null space `{x : self * x = 0}`.
    pub fn null_space(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let (_, pivots) = m.eliminate(None);
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![false; self.cols];
            x[free] = true;
            for (row_idx, &pc) in pivots.iter().enumerate() {
                if m.rows[row_idx][free / 64] >> (free % 64) & 1 == 1 {
                    x[pc] = true;
                }
            }
            basis.push(x);
        }
        basis
    }

    /// In-place reduced row echelon form with lowest-index pivoting.
    /// Returns (rank, pivot column per echelon row). When `rhs` is given the
    /// matrix is augmented with one extra column before elimination.
    fn eliminate(&mut self, rhs: Option<Vec<bool>>) -> (usize, Vec<usize>) {
        if let Some(rhs) = rhs {
            let aug = self.cols;
            let words = (self.cols + 1).div_ceil(64);
            for (row, &bit) in self.rows.iter_mut().zip(&rhs) {
                row.resize(words, 0);
                if bit {
                    row[aug / 64] |= 1 << (aug % 64);
                }
            }
        }
        let ncols = self.cols;
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..ncols {
            let Some(pivot) = (next_row..self.rows.len())
                .find(|&r| self.rows[r][col / 64] >> (col % 64) & 1 == 1)
            else {
                continue;
            };
            self.rows.swap(next_row, pivot);
            for r in 0..self.rows.len() {
                if r != next_row && self.rows[r][col / 64] >> (col % 64) & 1 == 1 {
                    let (head, tail) = self.rows.split_at_mut(next_row.max(r));
                    let (src, dst) = if r < next_row {
                        (&tail[0], &mut head[r])
                    } else {
                        (&head[next_row], &mut tail[0])
                    };
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d ^= s;
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows.len() {
                break;
            }
        }
        (next_row, pivots)
    }
}
