//! Seeded samplers for symbols and directions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior_clifford::{Blade, Endo, Multivector, Scalar};
use crate::symbol_poly::{Dims, PolySymbol};

/// Bidegree bookkeeping of a sampled term `h ⟨iX,ξ⟩^m ⟨iY,σ⟩^ℓ`, `h` of blade
/// degree `r`: it lies in `SC^{r+m, ℓ}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Profile {
    pub r: usize,
    pub m: usize,
    pub l: usize,
}

impl Profile {
    pub fn grading(&self) -> usize {
        self.r + self.m + self.l
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, k: usize) -> usize {
        self.rng.gen_range(0..k)
    }

    /// A direction with one or two small nonzero entries, supported on
    /// `q+1..=n` when `leafwise`.
    pub fn direction(&mut self, d: Dims, leafwise: bool) -> Vec<Scalar> {
        let lo = if leafwise { d.q } else { 0 };
        let mut idx: Vec<usize> = (lo..d.n).collect();
        idx.shuffle(&mut self.rng);
        let k = self.rng.gen_range(1..=2.min(idx.len()));
        let mut v = vec![Scalar::zero(); d.n];
        for &i in &idx[..k] {
            let mut c = 0;
            while c == 0 {
                c = self.rng.gen_range(-2..=2);
            }
            v[i] = Scalar::int(c);
        }
        v
    }

    pub fn endo(&mut self, a: usize) -> Endo {
        loop {
            let e = Endo::from_entries(
                a,
                (0..a * a)
                    .map(|_| {
                        let re = Scalar::int(self.rng.gen_range(-2..=2));
                        if self.rng.gen_bool(0.2) {
                            &re + &Scalar::i()
                        } else {
                            re
                        }
                    })
                    .collect(),
            );
            if !e.is_zero() {
                return e;
            }
        }
    }

    pub fn blade(&mut self, q: usize, r: usize) -> Blade {
        let mut idx: Vec<usize> = (0..q).collect();
        idx.shuffle(&mut self.rng);
        Blade(idx[..r].iter().fold(0u16, |m, &i| m | (1 << i)))
    }

    /// A sum of up to `terms` random blades with random matrix coefficients.
    pub fn multivector(&mut self, q: usize, a: usize, terms: usize) -> Multivector {
        let mut m = Multivector::zero(q, a);
        for _ in 0..self.rng.gen_range(1..=terms.max(1)) {
            let r = self.rng.gen_range(0..=q);
            let b = self.blade(q, r);
            let e = self.endo(a);
            m.add_term(b, e);
        }
        m
    }

    /// A profile of grading exactly `g`.
    pub fn profile(&mut self, d: Dims, g: usize) -> Profile {
        let r = self.rng.gen_range(0..=g.min(d.q));
        let rest = g - r;
        let l = if d.p_leaf() == 0 { 0 } else { self.rng.gen_range(0..=rest) };
        Profile { r, m: rest - l, l }
    }

    /// `h ⟨iX,ξ⟩^m ⟨iY,σ⟩^ℓ` with random `h`, `X`, `Y`.
    pub fn term(&mut self, d: Dims, p: Profile) -> PolySymbol {
        let b = self.blade(d.q, p.r);
        let h = Multivector::from_term(d.q, d.a, b, self.endo(d.a));
        let x = self.direction(d, false);
        let mut s = PolySymbol::pairing_xi(d, &x).pow_clifford(p.m as u32);
        if p.l > 0 {
            let y = self.direction(d, true);
            s = s.clifford_mul(&PolySymbol::pairing_sigma(d, &y).pow_clifford(p.l as u32));
        }
        s.mv_mul_left(&h)
    }

    /// A nonzero symbol, homogeneous of grading `g`, with up to `terms` terms.
    pub fn homogeneous(&mut self, d: Dims, g: usize, terms: usize) -> PolySymbol {
        loop {
            let k = self.rng.gen_range(1..=terms.max(1));
            let mut s = PolySymbol::zero(d);
            for _ in 0..k {
                let p = self.profile(d, g);
                s.add_assign(&self.term(d, p));
            }
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A nonzero symbol with every term of the same profile.
    pub fn bihomogeneous(&mut self, d: Dims, p: Profile, terms: usize) -> PolySymbol {
        loop {
            let mut s = PolySymbol::zero(d);
            for _ in 0..terms.max(1) {
                s.add_assign(&self.term(d, p));
            }
            if !s.is_zero() {
                return s;
            }
        }
    }
}
