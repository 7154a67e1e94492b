//! Shared helpers for the integration suites: independent oracles that
//! recompute expected values without touching the implementation paths they
//! check.

// Each test binary compiles this module and uses its own subset.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

use twistor_deform::deformation::Configuration;
use twistor_deform::exact::{RatMatrix, Rational};

/// Laplace-expansion determinant. Exponential, fine for the small matrices
/// the oracle sees.
pub fn det_laplace(m: &RatMatrix) -> Rational {
    let n = m.rows();
    assert_eq!(n, m.cols(), "determinant needs a square matrix");
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut det = Rational::zero();
    for col in 0..n {
        if m.get(0, col).is_zero() {
            continue;
        }
        let mut rows = Vec::with_capacity(n - 1);
        for r in 1..n {
            let mut row = Vec::with_capacity(n - 1);
            for c in 0..n {
                if c != col {
                    row.push(m.get(r, c).clone());
                }
            }
            rows.push(row);
        }
        let minor = det_laplace(&RatMatrix::from_rows(rows, n - 1).unwrap());
        let term = m.get(0, col) * &minor;
        det += if col % 2 == 0 { term } else { -term };
    }
    det
}

fn submatrix(m: &RatMatrix, rows: &[usize], cols: &[usize]) -> RatMatrix {
    let data = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| m.get(r, c).clone()).collect())
        .collect();
    RatMatrix::from_rows(data, cols.len()).unwrap()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance the rightmost index that can still move
        let mut i = k;
        while i > 0 {
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return out;
            }
        }
    }
}

/// Rank as the largest k with a nonvanishing k x k minor. Independent of the
/// elimination code under test.
pub fn rank_by_minors(m: &RatMatrix) -> usize {
    let max = m.rows().min(m.cols());
    for k in (1..=max).rev() {
        for rows in combinations(m.rows(), k) {
            for cols in combinations(m.cols(), k) {
                if !det_laplace(&submatrix(m, &rows, &cols)).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

/// Random strictly increasing positive rationals via positive increments.
pub fn random_configuration(n: usize, rng: &mut StdRng) -> Configuration {
    let mut value = Rational::zero();
    let a = (0..n)
        .map(|_| {
            let num = rng.gen_range(1..=20i64);
            let den = rng.gen_range(1..=20i64);
            value = &value + &Rational::new(num, den).unwrap();
            value.clone()
        })
        .collect();
    Configuration::new(a).unwrap()
}

/// The six image vectors written out from their closed forms, per curve:
///
///   gamma_1 =  a/(1+a^2) u nu      gamma_2 = -a/(1+a^2) u^2 nu
///   gamma_3 =  a/(1+a^2) nu        gamma_4 = -a/(1+a^2) u nu
///   gamma_5 =  a^2/(1+a^2) u^2 nu  gamma_6 = -1/(1+a^2) nu
///
/// in coordinates ordered (nu_1..nu_n, u nu_1..u nu_n, u^2 nu_1..u^2 nu_n).
/// Used as the golden oracle for the vector-field derivation.
pub fn gamma_closed_forms(cfg: &Configuration) -> Vec<Vec<Rational>> {
    let n = cfg.n();
    let mut out = vec![vec![Rational::zero(); 3 * n]; 6];
    for (i, a) in cfg.a().iter().enumerate() {
        let denom = Rational::one() + a * a;
        let a_over = a / &denom;
        let a2_over = &(a * a) / &denom;
        let one_over = Rational::one() / &denom;
        out[0][n + i] = a_over.clone();
        out[1][2 * n + i] = -a_over.clone();
        out[2][i] = a_over.clone();
        out[3][n + i] = -a_over;
        out[4][2 * n + i] = a2_over;
        out[5][i] = -one_over;
    }
    out
}
