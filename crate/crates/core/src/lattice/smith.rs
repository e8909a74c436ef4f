use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Smith normal form `U·M·V = S` together with the inverses of the
/// unimodular factors.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.s.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }

    /// The nonzero elementary divisors, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.s.diagonal().into_iter().take_while(|x| !x.is_zero()).collect()
    }
}

struct Reducer {
    s: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn row_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.s.add_row_multiple(dst, src, c);
        self.u.add_row_multiple(dst, src, c);
        self.u_inv.add_col_multiple(src, dst, &-c);
    }

    fn col_add(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.s.add_col_multiple(dst, src, c);
        self.v.add_col_multiple(dst, src, c);
        self.v_inv.add_row_multiple(src, dst, &-c);
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn row_negate(&mut self, i: usize) {
        self.s.negate_row(i);
        self.u.negate_row(i);
        self.u_inv.negate_col(i);
    }

    /// Position of a nonzero entry of least absolute value in the trailing
    /// block starting at `(t, t)`.
    fn smallest_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.s.rows() {
            for j in t..self.s.cols() {
                let x = &self.s[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.s[(bi, bj)].abs() <= x.abs() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }

    fn reduce(&mut self) {
        let (rows, cols) = (self.s.rows(), self.s.cols());
        for t in 0..rows.min(cols) {
            loop {
                let Some((pi, pj)) = self.smallest_pivot(t) else {
                    return;
                };
                self.row_swap(t, pi);
                self.col_swap(t, pj);
                let pivot = self.s[(t, t)].clone();

                let mut clean = true;
                for i in t + 1..rows {
                    let q = self.s[(i, t)].div_floor(&pivot);
                    self.row_add(i, t, &-q);
                    clean &= self.s[(i, t)].is_zero();
                }
                for j in t + 1..cols {
                    let q = self.s[(t, j)].div_floor(&pivot);
                    self.col_add(j, t, &-q);
                    clean &= self.s[(t, j)].is_zero();
                }
                if !clean {
                    continue;
                }

                // Enforce divisibility by folding an offending row into row t.
                let offender = (t + 1..rows).find(|&i| {
                    (t + 1..cols).any(|j| !self.s[(i, j)].is_multiple_of(&pivot))
                });
                match offender {
                    Some(i) => self.row_add(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.s[(t, t)].is_negative() {
                self.row_negate(t);
            }
        }
    }
}

/// Computes unimodular `U`, `V` and diagonal `S` with `U·M·V = S` and
/// `S[0,0] | S[1,1] | …`, all diagonal entries nonnegative.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        s: m.clone(),
        u: IntMatrix::identity(m.rows()),
        u_inv: IntMatrix::identity(m.rows()),
        v: IntMatrix::identity(m.cols()),
        v_inv: IntMatrix::identity(m.cols()),
    };
    r.reduce();
    SmithForm {
        u: r.u,
        s: r.s,
        v: r.v,
        u_inv: r.u_inv,
        v_inv: r.v_inv,
    }
}
