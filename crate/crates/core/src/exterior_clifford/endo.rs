//! Square matrices over [`Scalar`], the `End(E)` coefficients.

use std::fmt;

use super::Scalar;

/// An `a×a` matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Endo {
    a: usize,
    entries: Vec<Scalar>,
}

impl Endo {
    pub fn zero(a: usize) -> Self {
        Endo { a, entries: vec![Scalar::zero(); a * a] }
    }

    pub fn identity(a: usize) -> Self {
        Endo::scalar(a, Scalar::one())
    }

    pub fn scalar(a: usize, s: Scalar) -> Self {
        let mut m = Endo::zero(a);
        for k in 0..a {
            m.entries[k * a + k] = s.clone();
        }
        m
    }

    /// Builds from row-major entries; panics unless `entries.len() == a*a`.
    pub fn from_entries(a: usize, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), a * a, "matrix needs a*a entries");
        Endo { a, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Option<Self> {
        let a = rows.len();
        if rows.iter().any(|r| r.len() != a) {
            return None;
        }
        Some(Endo { a, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rank(&self) -> usize {
        self.a
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.a + c]
    }

    pub fn set(&mut self, r: usize, c: usize, s: Scalar) {
        self.entries[r * self.a + c] = s;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.a.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, o: &Endo) -> Endo {
        let entries = self.entries.iter().zip(&o.entries).map(|(x, y)| x + y).collect();
        Endo { a: self.a, entries }
    }

    pub fn add_assign(&mut self, o: &Endo) {
        for (x, y) in self.entries.iter_mut().zip(&o.entries) {
            *x += y;
        }
    }

    pub fn sub(&self, o: &Endo) -> Endo {
        let entries = self.entries.iter().zip(&o.entries).map(|(x, y)| x - y).collect();
        Endo { a: self.a, entries }
    }

    pub fn neg(&self) -> Endo {
        Endo { a: self.a, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> Endo {
        Endo { a: self.a, entries: self.entries.iter().map(|x| x * s).collect() }
    }

    pub fn mul(&self, o: &Endo) -> Endo {
        let a = self.a;
        if a == 1 {
            return Endo { a, entries: vec![&self.entries[0] * &o.entries[0]] };
        }
        let mut out = Endo::zero(a);
        for r in 0..a {
            for k in 0..a {
                let x = &self.entries[r * a + k];
                if x.is_zero() {
                    continue;
                }
                for c in 0..a {
                    let y = &o.entries[k * a + c];
                    if !y.is_zero() {
                        out.entries[r * a + c] += &(x * y);
                    }
                }
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> Endo {
        let a = self.a;
        let mut out = Endo::zero(a);
        for r in 0..a {
            for c in 0..a {
                out.entries[c * a + r] = self.entries[r * a + c].conj();
            }
        }
        out
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}
