use super::{Complex, Matrix4};

/// λ⁴ + c3·λ³ + c2·λ² + c1·λ + c0
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonicQuartic {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl MonicQuartic {
    pub fn eval(&self, x: f64) -> f64 {
        (((x + self.c3) * x + self.c2) * x + self.c1) * x + self.c0
    }

    pub fn is_finite(&self) -> bool {
        [self.c0, self.c1, self.c2, self.c3]
            .iter()
            .all(|c| c.is_finite())
    }
}

/// Complex coefficients `[c0, c1, c2, c3]` of det(λI − m) by the
/// Faddeev–LeVerrier recurrence.
pub fn charpoly_flv_complex(m: &Matrix4) -> [Complex; 4] {
    let mut coeffs = [Complex::new(0.0, 0.0); 5];
    coeffs[4] = Complex::new(1.0, 0.0);
    let ident = Matrix4::identity();
    let mut mk = Matrix4::zeros();
    for k in 1..=4 {
        mk = *m * mk + ident * coeffs[4 - k + 1];
        coeffs[4 - k] = -(*m * mk).trace() / k as f64;
    }
    [coeffs[0], coeffs[1], coeffs[2], coeffs[3]]
}

/// Real parts of the Faddeev–LeVerrier coefficients. Matrices with a real
/// spectrum (Hermitian ones, and products such as ρ·ρ̃) have real
/// characteristic polynomials.
pub fn charpoly_flv(m: &Matrix4) -> MonicQuartic {
    let [c0, c1, c2, c3] = charpoly_flv_complex(m);
    MonicQuartic {
        c0: c0.re,
        c1: c1.re,
        c2: c2.re,
        c3: c3.re,
    }
}

/// Characteristic polynomial of the product `a·b`, from the Cauchy–Binet
/// expansion e_k(ab) = Σ_{|S|=|T|=k} det a[S,T] · det b[T,S].
///
/// When either factor is rank deficient its minors vanish individually, so
/// the coefficients that should be zero come out as products of two rounding
/// errors instead of one.
pub fn charpoly_of_product(a: &Matrix4, b: &Matrix4) -> MonicQuartic {
    let mut e = [0.0f64; 5];
    for k in 1..=4usize {
        let subsets: Vec<Vec<usize>> = (0u32..16)
            .filter(|s| s.count_ones() as usize == k)
            .map(|s| (0..4).filter(|i| s & (1 << i) != 0).collect())
            .collect();
        let mut acc = Complex::new(0.0, 0.0);
        for rows in &subsets {
            for cols in &subsets {
                acc += minor(a, rows, cols) * minor(b, cols, rows);
            }
        }
        e[k] = acc.re;
    }
    MonicQuartic {
        c0: e[4],
        c1: -e[3],
        c2: e[2],
        c3: -e[1],
    }
}

fn minor(m: &Matrix4, rows: &[usize], cols: &[usize]) -> Complex {
    match rows.len() {
        0 => Complex::new(1.0, 0.0),
        1 => m[(rows[0], cols[0])],
        _ => {
            // Laplace expansion along the first selected row.
            let mut acc = Complex::new(0.0, 0.0);
            let mut sub_cols = Vec::with_capacity(cols.len() - 1);
            for (pos, &c) in cols.iter().enumerate() {
                sub_cols.clear();
                sub_cols.extend(cols.iter().copied().filter(|&x| x != c));
                let term = m[(rows[0], c)] * minor(m, &rows[1..], &sub_cols);
                if pos % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}
