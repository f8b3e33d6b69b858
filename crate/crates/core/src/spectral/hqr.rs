//! Eigenvalues of a dense real matrix in double precision: balancing,
//! reduction to upper Hessenberg form by stabilized elementary similarity
//! transformations, then the shifted QR algorithm on the Hessenberg matrix.

use alloc::vec;
use alloc::vec::Vec;

/// Square matrix stored with 1-based indices, which keeps the classical
/// formulations of these algorithms readable.
struct Mat {
    n: usize,
    a: Vec<f64>,
}

impl Mat {
    fn from_row_major(n: usize, data: &[f64]) -> Self {
        let mut a = vec![0.0; (n + 1) * (n + 1)];
        for i in 0..n {
            for j in 0..n {
                a[(i + 1) * (n + 1) + j + 1] = data[i * n + j];
            }
        }
        Mat { n, a }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.a[i * (self.n + 1) + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: f64) {
        let n = self.n;
        self.a[i * (n + 1) + j] = v;
    }

    #[inline]
    fn sub(&mut self, i: usize, j: usize, v: f64) {
        let n = self.n;
        self.a[i * (n + 1) + j] -= v;
    }

    fn swap(&mut self, i1: usize, j1: usize, i2: usize, j2: usize) {
        let n = self.n;
        self.a.swap(i1 * (n + 1) + j1, i2 * (n + 1) + j2);
    }
}

fn balance(m: &mut Mat) {
    const RADIX: f64 = 2.0;
    const SQRDX: f64 = RADIX * RADIX;
    let n = m.n;
    let mut done = false;
    while !done {
        done = true;
        for i in 1..=n {
            let (mut c, mut r) = (0.0, 0.0);
            for j in 1..=n {
                if j != i {
                    c += m.at(j, i).abs();
                    r += m.at(i, j).abs();
                }
            }
            if c != 0.0 && r != 0.0 {
                let mut g = r / RADIX;
                let mut f = 1.0;
                let s = c + r;
                while c < g {
                    f *= RADIX;
                    c *= SQRDX;
                }
                g = r * RADIX;
                while c > g {
                    f /= RADIX;
                    c /= SQRDX;
                }
                if (c + r) / f < 0.95 * s {
                    done = false;
                    let g = 1.0 / f;
                    for j in 1..=n {
                        let v = m.at(i, j) * g;
                        m.set(i, j, v);
                    }
                    for j in 1..=n {
                        let v = m.at(j, i) * f;
                        m.set(j, i, v);
                    }
                }
            }
        }
    }
}

fn hessenberg(m: &mut Mat) {
    let n = m.n;
    for col in 2..n {
        let mut x = 0.0f64;
        let mut piv = col;
        for j in col..=n {
            if m.at(j, col - 1).abs() > x.abs() {
                x = m.at(j, col - 1);
                piv = j;
            }
        }
        if piv != col {
            for j in (col - 1)..=n {
                m.swap(piv, j, col, j);
            }
            for j in 1..=n {
                m.swap(j, piv, j, col);
            }
        }
        if x != 0.0 {
            for i in (col + 1)..=n {
                let mut y = m.at(i, col - 1);
                if y != 0.0 {
                    y /= x;
                    m.set(i, col - 1, y);
                    for j in col..=n {
                        let v = y * m.at(col, j);
                        m.sub(i, j, v);
                    }
                    for j in 1..=n {
                        let v = y * m.at(j, i);
                        m.sub(j, col, -v);
                    }
                }
            }
        }
    }
    for i in 1..=n {
        for j in 1..i.saturating_sub(1) {
            m.set(i, j, 0.0);
        }
    }
}

fn sign(a: f64, b: f64) -> f64 {
    if b >= 0.0 {
        a.abs()
    } else {
        -a.abs()
    }
}

const MAX_ITERATIONS: usize = 60;

/// All eigenvalues of an upper Hessenberg matrix as (re, im) pairs, or
/// `None` when some eigenvalue fails to converge.
fn hqr(m: &mut Mat) -> Option<Vec<(f64, f64)>> {
    let n = m.n;
    let mut wr = vec![0.0; n + 1];
    let mut wi = vec![0.0; n + 1];
    let mut anorm = 0.0;
    for i in 1..=n {
        for j in i.saturating_sub(1).max(1)..=n {
            anorm += m.at(i, j).abs();
        }
    }
    let mut nn = n;
    let mut t = 0.0;
    let (mut p, mut q, mut r): (f64, f64, f64);
    let (mut x, mut y, mut z, mut w);
    while nn >= 1 {
        let mut its = 0;
        loop {
            let mut l = nn;
            while l >= 2 {
                let mut s = m.at(l - 1, l - 1).abs() + m.at(l, l).abs();
                if s == 0.0 {
                    s = anorm;
                }
                if m.at(l, l - 1).abs() + s == s {
                    m.set(l, l - 1, 0.0);
                    break;
                }
                l -= 1;
            }
            x = m.at(nn, nn);
            if l == nn {
                wr[nn] = x + t;
                wi[nn] = 0.0;
                nn -= 1;
                break;
            }
            y = m.at(nn - 1, nn - 1);
            w = m.at(nn, nn - 1) * m.at(nn - 1, nn);
            if l == nn - 1 {
                p = 0.5 * (y - x);
                q = p * p + w;
                z = libm::sqrt(q.abs());
                x += t;
                if q >= 0.0 {
                    z = p + sign(z, p);
                    wr[nn - 1] = x + z;
                    wr[nn] = x + z;
                    if z != 0.0 {
                        wr[nn] = x - w / z;
                    }
                    wi[nn - 1] = 0.0;
                    wi[nn] = 0.0;
                } else {
                    wr[nn - 1] = x + p;
                    wr[nn] = x + p;
                    wi[nn - 1] = -z;
                    wi[nn] = z;
                }
                nn -= 2;
                break;
            }
            if its == MAX_ITERATIONS {
                return None;
            }
            if its > 0 && its % 10 == 0 {
                // exceptional shift
                t += x;
                for i in 1..=nn {
                    m.sub(i, i, x);
                }
                let s = m.at(nn, nn - 1).abs() + m.at(nn - 1, nn - 2).abs();
                x = 0.75 * s;
                y = x;
                w = -0.4375 * s * s;
            }
            its += 1;
            let mut mm = nn - 2;
            loop {
                z = m.at(mm, mm);
                let r0 = x - z;
                let s0 = y - z;
                p = (r0 * s0 - w) / m.at(mm + 1, mm) + m.at(mm, mm + 1);
                q = m.at(mm + 1, mm + 1) - z - r0 - s0;
                r = m.at(mm + 2, mm + 1);
                let s = p.abs() + q.abs() + r.abs();
                p /= s;
                q /= s;
                r /= s;
                if mm == l {
                    break;
                }
                let u = m.at(mm, mm - 1).abs() * (q.abs() + r.abs());
                let v = p.abs() * (m.at(mm - 1, mm - 1).abs() + z.abs() + m.at(mm + 1, mm + 1).abs());
                if u + v == v {
                    break;
                }
                mm -= 1;
            }
            for i in (mm + 2)..=nn {
                m.set(i, i - 2, 0.0);
                if i != mm + 2 {
                    m.set(i, i - 3, 0.0);
                }
            }
            let mut k = mm;
            while k < nn {
                if k != mm {
                    p = m.at(k, k - 1);
                    q = m.at(k + 1, k - 1);
                    r = 0.0;
                    if k != nn - 1 {
                        r = m.at(k + 2, k - 1);
                    }
                    x = p.abs() + q.abs() + r.abs();
                    if x != 0.0 {
                        p /= x;
                        q /= x;
                        r /= x;
                    }
                }
                let s = sign(libm::sqrt(p * p + q * q + r * r), p);
                if s != 0.0 {
                    if k == mm {
                        if l != mm {
                            let v = -m.at(k, k - 1);
                            m.set(k, k - 1, v);
                        }
                    } else {
                        m.set(k, k - 1, -s * x);
                    }
                    p += s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q /= p;
                    r /= p;
                    for j in k..=nn {
                        p = m.at(k, j) + q * m.at(k + 1, j);
                        if k != nn - 1 {
                            p += r * m.at(k + 2, j);
                            m.sub(k + 2, j, p * z);
                        }
                        m.sub(k + 1, j, p * y);
                        m.sub(k, j, p * x);
                    }
                    let mmin = if nn < k + 3 { nn } else { k + 3 };
                    for i in l..=mmin {
                        p = x * m.at(i, k) + y * m.at(i, k + 1);
                        if k != nn - 1 {
                            p += z * m.at(i, k + 2);
                            m.sub(i, k + 2, p * r);
                        }
                        m.sub(i, k + 1, p * q);
                        m.sub(i, k, p);
                    }
                }
                k += 1;
            }
            if l >= nn - 1 {
                break;
            }
        }
    }
    Some((1..=n).map(|i| (wr[i], wi[i])).collect())
}

/// Eigenvalues of the `n x n` row-major matrix `data`.
pub fn eigenvalues(n: usize, data: &[f64]) -> Option<Vec<(f64, f64)>> {
    assert_eq!(data.len(), n * n);
    if n == 0 {
        return Some(Vec::new());
    }
    if data.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let mut m = Mat::from_row_major(n, data);
    balance(&mut m);
    hessenberg(&mut m);
    hqr(&mut m)
}

/// Largest eigenvalue modulus.
pub fn spectral_radius(n: usize, data: &[f64]) -> Option<f64> {
    eigenvalues(n, data).map(|ev| ev.iter().map(|&(re, im)| libm::hypot(re, im)).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_real(mut v: Vec<(f64, f64)>) -> Vec<f64> {
        v.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        v.into_iter().map(|(re, _)| re).collect()
    }

    #[test]
    fn diagonal() {
        let ev = sorted_real(eigenvalues(3, &[3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0]).unwrap());
        assert_eq!(ev, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn rotation_has_complex_pair() {
        let ev = eigenvalues(2, &[0.0, -1.0, 1.0, 0.0]).unwrap();
        for (re, im) in ev {
            assert!(re.abs() < 1e-14);
            assert!((im.abs() - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn companion_of_cubic() {
        // x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3)
        let c = [6.0, -11.0, 6.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0];
        let ev = sorted_real(eigenvalues(3, &c).unwrap());
        for (got, want) in ev.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "{got}");
        }
    }

    #[test]
    fn cycle_of_length_seven() {
        let n = 7;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + (i + 1) % n] = 1.0;
        }
        let ev = eigenvalues(n, &a).unwrap();
        assert_eq!(ev.len(), n);
        for (re, im) in ev {
            assert!((libm::hypot(re, im) - 1.0).abs() < 1e-12);
        }
    }
}
