//! Banded matrix storage: row-major bands, half-bandwidth `bw`.

/// General banded matrix; entry (i, j) stored iff |i - j| <= bw.
#[derive(Debug, Clone)]
pub struct Banded {
    pub n: usize,
    pub bw: usize,
    data: Vec<f64>, // row i at data[i*(2bw+1)..], column j at offset j-i+bw
}

impl Banded {
    pub fn zeros(n: usize, bw: usize) -> Self {
        Banded {
            n,
            bw,
            data: vec![0.0; n * (2 * bw + 1)],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let bw = self.bw as isize;
        let off = j as isize - i as isize;
        if off.abs() > bw {
            0.0
        } else {
            self.data[i * (2 * self.bw + 1) + (off + bw) as usize]
        }
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: f64) {
        let bw = self.bw as isize;
        let off = j as isize - i as isize;
        debug_assert!(off.abs() <= bw, "entry ({i},{j}) outside bandwidth {bw}");
        self.data[i * (2 * self.bw + 1) + (off + bw) as usize] += v;
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        let bw = self.bw as isize;
        let off = j as isize - i as isize;
        debug_assert!(off.abs() <= bw);
        self.data[i * (2 * self.bw + 1) + (off + bw) as usize] = v;
    }

    /// y = A x
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        let w = 2 * self.bw + 1;
        for i in 0..self.n {
            let lo = i.saturating_sub(self.bw);
            let hi = (i + self.bw).min(self.n - 1);
            let row = &self.data[i * w..(i + 1) * w];
            let mut acc = 0.0;
            for j in lo..=hi {
                acc += row[j + self.bw - i] * x[j];
            }
            y[i] = acc;
        }
    }

    /// y = A x where x is strided through a larger array.
    pub fn matvec_strided(&self, x: &[f64], x0: usize, stride: usize, y: &mut [f64]) {
        let w = 2 * self.bw + 1;
        for i in 0..self.n {
            let lo = i.saturating_sub(self.bw);
            let hi = (i + self.bw).min(self.n - 1);
            let row = &self.data[i * w..(i + 1) * w];
            let mut acc = 0.0;
            for j in lo..=hi {
                acc += row[j + self.bw - i] * x[x0 + j * stride];
            }
            y[i] = acc;
        }
    }

    /// x' A y for two dense vectors.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        let w = 2 * self.bw + 1;
        let mut acc = 0.0;
        for i in 0..self.n {
            let lo = i.saturating_sub(self.bw);
            let hi = (i + self.bw).min(self.n - 1);
            let row = &self.data[i * w..(i + 1) * w];
            let mut ri = 0.0;
            for j in lo..=hi {
                ri += row[j + self.bw - i] * y[j];
            }
            acc += x[i] * ri;
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Max |A_ij - A_ji|.
    pub fn asymmetry(&self) -> f64 {
        let mut m: f64 = 0.0;
        for i in 0..self.n {
            let hi = (i + self.bw).min(self.n - 1);
            for j in i + 1..=hi {
                m = m.max((self.get(i, j) - self.get(j, i)).abs());
            }
        }
        m
    }

    pub fn to_dense(&self) -> super::dense::DenseMat {
        let mut d = super::dense::DenseMat::zeros(self.n, self.n);
        for i in 0..self.n {
            let lo = i.saturating_sub(self.bw);
            let hi = (i + self.bw).min(self.n - 1);
            for j in lo..=hi {
                d.set(i, j, self.get(i, j));
            }
        }
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matvec_matches_dense() {
        let mut a = Banded::zeros(6, 2);
        for i in 0..6usize {
            for j in i.saturating_sub(2)..=(i + 2).min(5) {
                a.set(i, j, (1 + i * 7 + j * 3) as f64);
            }
        }
        let x: Vec<f64> = (0..6).map(|i| (i as f64) - 2.5).collect();
        let mut y = vec![0.0; 6];
        a.matvec(&x, &mut y);
        for i in 0..6 {
            let want: f64 = (0..6).map(|j| a.get(i, j) * x[j]).sum();
            assert!((y[i] - want).abs() < 1e-12);
        }
    }
}
