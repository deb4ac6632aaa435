use crate::error::{Error, Result};

/// Dense symmetric matrix, stored row-major in full.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    a: Vec<f64>,
}

/// Eigenpairs with eigenvectors as the columns of a row-major `n × n` array.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
}

impl Eigen {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        let n = self.values.len();
        (0..n).map(|i| self.vectors[i * n + k]).collect()
    }
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, a: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// Builds from the upper triangle of `f`; the lower triangle mirrors it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Rejects input that is not square or not symmetric up to `1e-12` relative.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::domain("matrix must be square"));
        }
        let scale = rows.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
        for i in 0..n {
            for j in 0..i {
                if (rows[i][j] - rows[j][i]).abs() > 1e-12 * scale {
                    return Err(Error::domain(format!("matrix is not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(SymMatrix::from_fn(n, |i, j| rows[i][j]))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.a[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.a[i * self.n + j] = v;
        self.a[j * self.n + i] = v;
    }

    pub fn frobenius(&self) -> f64 {
        self.a.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn sum(&self) -> f64 {
        self.a.iter().sum()
    }

    pub fn distance(&self, other: &SymMatrix) -> f64 {
        self.a.iter().zip(&other.a).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
    }

    pub(crate) fn raw(&self) -> &[f64] {
        &self.a
    }

    pub(crate) fn raw_mut(&mut self) -> &mut [f64] {
        &mut self.a
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.a[i * self.n..(i + 1) * self.n].iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    }

    /// Eigendecomposition by cyclic Jacobi rotations.
    pub fn eigh(&self) -> Eigen {
        let mut id = vec![0.0; self.n * self.n];
        for i in 0..self.n {
            id[i * self.n + i] = 1.0;
        }
        self.eigh_from(&id)
    }

    /// Cyclic Jacobi started in the orthonormal basis `basis` (columns, row-major).
    /// A basis close to the eigenvectors leaves `basisᵀ A basis` nearly diagonal,
    /// so only a few sweeps are needed.
    pub fn eigh_from(&self, basis: &[f64]) -> Eigen {
        let n = self.n;
        let mut v = basis.to_vec();
        // b = vᵀ a v
        let av = matmul(&self.a, &v, n);
        let mut b = matmul_tn(&v, &av, n);
        for i in 0..n {
            for j in 0..i {
                let s = 0.5 * (b[i * n + j] + b[j * n + i]);
                b[i * n + j] = s;
                b[j * n + i] = s;
            }
        }
        let scale = self.frobenius().max(f64::MIN_POSITIVE);
        for _sweep in 0..100 {
            let off: f64 = (0..n)
                .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| b[i * n + j] * b[i * n + j])
                .sum::<f64>()
                .sqrt();
            if off <= 1e-15 * scale {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = b[p * n + q];
                    if apq.abs() <= 1e-300 {
                        continue;
                    }
                    let app = b[p * n + p];
                    let aqq = b[q * n + q];
                    let theta = (aqq - app) / (2.0 * apq);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let t = if theta == 0.0 { 1.0 } else { t };
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    let s = t * c;
                    for k in 0..n {
                        let bkp = b[k * n + p];
                        let bkq = b[k * n + q];
                        b[k * n + p] = c * bkp - s * bkq;
                        b[k * n + q] = s * bkp + c * bkq;
                    }
                    for k in 0..n {
                        let bpk = b[p * n + k];
                        let bqk = b[q * n + k];
                        b[p * n + k] = c * bpk - s * bqk;
                        b[q * n + k] = s * bpk + c * bqk;
                    }
                    b[p * n + q] = 0.0;
                    b[q * n + p] = 0.0;
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        Eigen {
            values: (0..n).map(|i| b[i * n + i]).collect(),
            vectors: v,
        }
    }

    /// Largest `‖A v - λ v‖` over the eigenpairs.
    pub fn eigen_residual(&self, e: &Eigen) -> f64 {
        (0..self.n)
            .map(|k| {
                let v = e.vector(k);
                let av = self.mul_vec(&v);
                av.iter().zip(&v).map(|(x, y)| (x - e.values[k] * y).powi(2)).sum::<f64>().sqrt()
            })
            .fold(0.0, f64::max)
    }

    /// `Σ max(λ, 0) v vᵀ`, the nearest positive semidefinite matrix in Frobenius norm.
    pub fn psd_part(e: &Eigen) -> SymMatrix {
        let n = e.values.len();
        let mut scaled = e.vectors.clone();
        for i in 0..n {
            for k in 0..n {
                scaled[i * n + k] *= e.values[k].max(0.0);
            }
        }
        let full = matmul_nt(&scaled, &e.vectors, n);
        let mut m = SymMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, 0.5 * (full[i * n + j] + full[j * n + i]));
            }
        }
        m
    }
}

/// `a b` for row-major square matrices.
fn matmul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            let (row, brow) = (&mut c[i * n..(i + 1) * n], &b[k * n..(k + 1) * n]);
            for (x, y) in row.iter_mut().zip(brow) {
                *x += aik * y;
            }
        }
    }
    c
}

/// `aᵀ b`.
fn matmul_tn(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n * n];
    for k in 0..n {
        for i in 0..n {
            let aki = a[k * n + i];
            if aki == 0.0 {
                continue;
            }
            let (row, brow) = (&mut c[i * n..(i + 1) * n], &b[k * n..(k + 1) * n]);
            for (x, y) in row.iter_mut().zip(brow) {
                *x += aki * y;
            }
        }
    }
    c
}

/// `a bᵀ`.
fn matmul_nt(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            c[i * n + j] = a[i * n..(i + 1) * n].iter().zip(&b[j * n..(j + 1) * n]).map(|(x, y)| x * y).sum();
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(n: usize, seed: u64) -> SymMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        SymMatrix::from_fn(n, |_, _| rng.gen_range(-1.0..1.0))
    }

    #[test]
    fn symmetry_is_enforced() {
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 3.0]]).is_ok());
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0], vec![2.5, 3.0]]).is_err());
        assert!(SymMatrix::from_rows(&[vec![1.0, 2.0]]).is_err());
        let mut m = SymMatrix::zeros(3);
        m.set(0, 2, 5.0);
        assert_eq!(m.get(2, 0), 5.0);
    }

    #[test]
    fn eigen_residuals_are_small() {
        for (n, seed) in [(1, 0), (2, 1), (5, 2), (17, 3), (40, 4)] {
            let m = random(n, seed);
            let e = m.eigh();
            assert!(m.eigen_residual(&e) <= 1e-8 * m.frobenius().max(1.0), "n={n}");
            let tr: f64 = e.values.iter().sum();
            assert!((tr - m.trace()).abs() < 1e-9);
        }
    }

    #[test]
    fn warm_start_agrees() {
        let m = random(20, 9);
        let cold = m.eigh();
        let mut nearby = m.clone();
        nearby.set(3, 4, nearby.get(3, 4) + 1e-3);
        let warm = nearby.eigh_from(&cold.vectors);
        assert!(nearby.eigen_residual(&warm) <= 1e-8 * nearby.frobenius());
        let mut a = warm.values.clone();
        let mut b = nearby.eigh().values;
        a.sort_by(f64::total_cmp);
        b.sort_by(f64::total_cmp);
        assert!(a.iter().zip(&b).all(|(x, y)| (x - y).abs() < 1e-10));
    }

    #[test]
    fn known_spectrum() {
        // J_4 has eigenvalues 4, 0, 0, 0
        let j = SymMatrix::from_fn(4, |_, _| 1.0);
        let mut v = j.eigh().values;
        v.sort_by(f64::total_cmp);
        assert!((v[3] - 4.0).abs() < 1e-12 && v[..3].iter().all(|x| x.abs() < 1e-12));
        let psd = SymMatrix::psd_part(&SymMatrix::from_fn(2, |i, j| if i == j { 0.0 } else { 1.0 }).eigh());
        assert!((psd.get(0, 0) - 0.5).abs() < 1e-12 && (psd.get(0, 1) - 0.5).abs() < 1e-12);
    }
}
