use super::field::Field;

/// In-place Gauss–Jordan elimination to reduced row echelon form. Zero rows
/// end up at the bottom. Returns the pivot columns.
pub fn gauss_jordan<F: Field>(field: &F, a: &mut [Vec<F::Elem>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !field.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = field.inv(&a[r][c]).expect("nonzero pivot");
        for e in a[r][c..].iter_mut() {
            if !field.is_zero(e) {
                *e = field.mul(e, &inv);
            }
        }
        let (top, rest) = a.split_at_mut(r);
        let (pivot_row, bottom) = rest.split_first_mut().expect("row r exists");
        for row in top.iter_mut().chain(bottom.iter_mut()) {
            if field.is_zero(&row[c]) {
                continue;
            }
            let factor = field.neg(&row[c]);
            for j in c..ncols {
                if !field.is_zero(&pivot_row[j]) {
                    field.add_mul_assign(&mut row[j], &factor, &pivot_row[j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Determinant by elimination.
pub fn determinant<F: Field>(field: &F, m: &[Vec<F::Elem>]) -> F::Elem {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[i][c])) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[c][c]);
        let inv = field.inv(&a[c][c]).expect("nonzero pivot");
        for i in c + 1..n {
            if field.is_zero(&a[i][c]) {
                continue;
            }
            let factor = field.neg(&field.mul(&a[i][c], &inv));
            for j in c..n {
                let t = a[c][j].clone();
                field.add_mul_assign(&mut a[i][j], &factor, &t);
            }
        }
    }
    det
}
