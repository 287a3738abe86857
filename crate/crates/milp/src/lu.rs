//! Sparse LU factorization of the simplex basis with product-form updates.

/// LU factors of a basis matrix, built column by column with partial pivoting.
///
/// The basis columns are given in slot order; `B = L * U` up to a row
/// permutation recorded in `pos_row`/`row_pos`. Column `k` of `L` stores the
/// eliminated entries below the pivot (unit diagonal implied), indexed by
/// original row. Column `k` of `U` stores entries at earlier pivot positions.
pub struct LuFactors {
    m: usize,
    l_cols: Vec<Vec<(u32, f64)>>,
    u_cols: Vec<Vec<(u32, f64)>>,
    u_diag: Vec<f64>,
    /// pivot (original) row of elimination position k
    pos_row: Vec<u32>,
}

const PIVOT_TOL: f64 = 1e-11;

impl LuFactors {
    /// Factorize the matrix whose k-th column is `cols[k]` (entries by
    /// original row index). Returns `None` if the matrix is numerically
    /// singular.
    pub fn factorize(m: usize, cols: &[&[(u32, f64)]]) -> Option<LuFactors> {
        assert_eq!(cols.len(), m);
        let mut l_cols: Vec<Vec<(u32, f64)>> = Vec::with_capacity(m);
        let mut u_cols: Vec<Vec<(u32, f64)>> = Vec::with_capacity(m);
        let mut u_diag: Vec<f64> = Vec::with_capacity(m);
        let mut pos_row: Vec<u32> = Vec::with_capacity(m);
        // row -> elimination position, m = not yet pivotal
        let mut row_pos: Vec<u32> = vec![m as u32; m];

        let mut work = vec![0.0f64; m];
        let mut touched: Vec<u32> = Vec::with_capacity(m);

        for k in 0..m {
            // scatter column k
            for &(r, v) in cols[k] {
                if work[r as usize] == 0.0 {
                    touched.push(r);
                }
                work[r as usize] += v;
            }
            // eliminate with earlier columns in pivot order
            let mut ucol: Vec<(u32, f64)> = Vec::new();
            for j in 0..k {
                let prow = pos_row[j] as usize;
                let val = work[prow];
                if val == 0.0 {
                    continue;
                }
                ucol.push((j as u32, val));
                work[prow] = 0.0;
                for &(r, lv) in &l_cols[j] {
                    if work[r as usize] == 0.0 {
                        touched.push(r);
                    }
                    work[r as usize] -= val * lv;
                }
            }
            // pick pivot: largest magnitude among unpivoted rows
            let mut best_row = usize::MAX;
            let mut best_val = 0.0f64;
            for &r in &touched {
                let r = r as usize;
                if row_pos[r] as usize != m {
                    continue;
                }
                let a = work[r].abs();
                if a > best_val {
                    best_val = a;
                    best_row = r;
                }
            }
            if best_val < PIVOT_TOL {
                return None;
            }
            let piv = work[best_row];
            let mut lcol: Vec<(u32, f64)> = Vec::new();
            for &r in &touched {
                let ri = r as usize;
                let v = work[ri];
                work[ri] = 0.0;
                if ri == best_row || v == 0.0 || row_pos[ri] as usize != m {
                    continue;
                }
                lcol.push((r, v / piv));
            }
            touched.clear();
            row_pos[best_row] = k as u32;
            pos_row.push(best_row as u32);
            u_diag.push(piv);
            l_cols.push(lcol);
            u_cols.push(ucol);
        }

        Some(LuFactors { m, l_cols, u_cols, u_diag, pos_row })
    }

    /// Solve `B x = rhs`. Input `rhs` is indexed by original row; the result
    /// is indexed by basis slot and written into `out`.
    pub fn ftran(&self, rhs: &mut [f64], out: &mut [f64]) {
        let m = self.m;
        // L z = rhs (z in elimination order, stored in out temporarily)
        for j in 0..m {
            let z = rhs[self.pos_row[j] as usize];
            out[j] = z;
            if z != 0.0 {
                for &(r, lv) in &self.l_cols[j] {
                    rhs[r as usize] -= z * lv;
                }
            }
        }
        for j in 0..m {
            rhs[self.pos_row[j] as usize] = 0.0;
        }
        // U x = z, backward by columns
        for k in (0..m).rev() {
            let xk = out[k] / self.u_diag[k];
            out[k] = xk;
            if xk != 0.0 {
                for &(j, uv) in &self.u_cols[k] {
                    out[j as usize] -= uv * xk;
                }
            }
        }
    }

    /// Solve `B^T y = c`. Input `c` is indexed by basis slot; the result is
    /// indexed by original row and written into `out` (fully overwritten).
    pub fn btran(&self, c: &[f64], out: &mut [f64], scratch: &mut [f64]) {
        let m = self.m;
        // U^T t = c, forward
        for k in 0..m {
            let mut acc = c[k];
            for &(j, uv) in &self.u_cols[k] {
                acc -= uv * scratch[j as usize];
            }
            scratch[k] = acc / self.u_diag[k];
        }
        // L^T y = t, backward
        for r in out.iter_mut() {
            *r = 0.0;
        }
        for j in (0..m).rev() {
            let mut acc = scratch[j];
            for &(r, lv) in &self.l_cols[j] {
                acc -= lv * out[r as usize];
            }
            out[self.pos_row[j] as usize] = acc;
        }
    }
}

/// Product-form update: after a basis change in slot `p` with FTRAN'd
/// entering column `w`, the new inverse is `E * B_old^{-1}`.
pub struct Eta {
    pub slot: usize,
    pub pivot: f64,
    /// nonzero entries (slot, value) of w excluding the pivot slot
    pub entries: Vec<(u32, f64)>,
}

impl Eta {
    pub fn from_column(slot: usize, w: &[f64]) -> Eta {
        let mut entries = Vec::new();
        for (i, &v) in w.iter().enumerate() {
            if i != slot && v.abs() > 1e-12 {
                entries.push((i as u32, v));
            }
        }
        Eta { slot, pivot: w[slot], entries }
    }

    /// Apply to an FTRAN intermediate (slot-indexed).
    pub fn apply_ftran(&self, x: &mut [f64]) {
        let xp = x[self.slot] / self.pivot;
        x[self.slot] = xp;
        if xp != 0.0 {
            for &(i, v) in &self.entries {
                x[i as usize] -= v * xp;
            }
        }
    }

    /// Apply transpose to a BTRAN intermediate (slot-indexed).
    pub fn apply_btran(&self, y: &mut [f64]) {
        let mut acc = y[self.slot];
        for &(i, v) in &self.entries {
            acc -= v * y[i as usize];
        }
        y[self.slot] = acc / self.pivot;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_cols(a: &[Vec<f64>]) -> Vec<Vec<(u32, f64)>> {
        let m = a.len();
        (0..m)
            .map(|j| {
                (0..m)
                    .filter(|&i| a[i][j] != 0.0)
                    .map(|i| (i as u32, a[i][j]))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn ftran_btran_roundtrip() {
        let a = vec![
            vec![2.0, 1.0, 0.0, 0.0],
            vec![0.0, 0.0, 3.0, 1.0],
            vec![4.0, 0.0, 1.0, 0.0],
            vec![0.0, 5.0, 0.0, 2.0],
        ];
        let cols = dense_cols(&a);
        let col_refs: Vec<&[(u32, f64)]> = cols.iter().map(|c| c.as_slice()).collect();
        let lu = LuFactors::factorize(4, &col_refs).unwrap();

        // B x = e_i for each i
        for i in 0..4 {
            let mut rhs = vec![0.0; 4];
            rhs[i] = 1.0;
            let mut x = vec![0.0; 4];
            lu.ftran(&mut rhs, &mut x);
            for r in 0..4 {
                let got: f64 = (0..4).map(|k| a[r][k] * x[k]).sum();
                let want = if r == i { 1.0 } else { 0.0 };
                assert!((got - want).abs() < 1e-10, "ftran r={r} i={i} got={got}");
            }
        }
        // B^T y = c
        let c = vec![1.0, -2.0, 0.5, 3.0];
        let mut y = vec![0.0; 4];
        let mut scratch = vec![0.0; 4];
        lu.btran(&c, &mut y, &mut scratch);
        for k in 0..4 {
            let got: f64 = (0..4).map(|r| a[r][k] * y[r]).sum();
            assert!((got - c[k]).abs() < 1e-10, "btran k={k} got={got} want={}", c[k]);
        }
    }

    #[test]
    fn singular_detected() {
        let a = vec![
            vec![1.0, 2.0, 3.0],
            vec![2.0, 4.0, 6.0],
            vec![0.0, 0.0, 1.0],
        ];
        let cols = dense_cols(&a);
        let col_refs: Vec<&[(u32, f64)]> = cols.iter().map(|c| c.as_slice()).collect();
        assert!(LuFactors::factorize(3, &col_refs).is_none());
    }
}
