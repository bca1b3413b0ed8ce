//! Basis blades `f_{i₁}∧…∧f_{i_k}` as bitmasks.

use std::fmt;

/// Maximum codimension representable by a blade mask.
pub const MAX_Q: usize = 16;

/// A basis blade. Bit `k-1` set means `f_k` is a factor; factors are kept in
/// ascending order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(pub u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// The generator `f_k`, `k` 1-based.
    pub fn generator(k: usize) -> Blade {
        assert!((1..=MAX_Q).contains(&k), "frame index {k} out of range");
        Blade(1 << (k - 1))
    }

    /// Wedge of the listed generators in the given order, as `(sign, blade)`.
    /// Returns `None` when an index repeats.
    pub fn from_indices(idx: &[usize]) -> Option<(i8, Blade)> {
        let mut acc = (1i8, Blade::SCALAR);
        for &k in idx {
            let (s, b) = acc.1.wedge(Blade::generator(k))?;
            acc = (acc.0 * s, b);
        }
        Some(acc)
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 1-based indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..MAX_Q).filter(|b| self.0 >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn contains(self, k: usize) -> bool {
        (1..=MAX_Q).contains(&k) && self.0 >> (k - 1) & 1 == 1
    }

    /// Number of transpositions needed to sort the concatenation `self, o`.
    fn swaps(self, o: Blade) -> u32 {
        let mut n = 0;
        let mut b = o.0;
        while b != 0 {
            let low = b.trailing_zeros();
            n += (self.0 >> (low + 1)).count_ones();
            b &= b - 1;
        }
        n
    }

    /// `self ∧ o` as `(sign, blade)`, or `None` if the supports meet.
    pub fn wedge(self, o: Blade) -> Option<(i8, Blade)> {
        if self.0 & o.0 != 0 {
            return None;
        }
        let s = if self.swaps(o).is_multiple_of(2) { 1 } else { -1 };
        Some((s, Blade(self.0 | o.0)))
    }

    /// Clifford product with `f_k·f_k = −1`.
    pub fn clifford(self, o: Blade) -> (i8, Blade) {
        let n = self.swaps(o) + (self.0 & o.0).count_ones();
        (if n.is_multiple_of(2) { 1 } else { -1 }, Blade(self.0 ^ o.0))
    }

    /// Interior product `i_{e_k}`.
    pub fn contract(self, k: usize) -> Option<(i8, Blade)> {
        if !self.contains(k) {
            return None;
        }
        let below = (self.0 & ((1u16 << (k - 1)) - 1)).count_ones();
        Some((if below.is_multiple_of(2) { 1 } else { -1 }, Blade(self.0 & !(1 << (k - 1)))))
    }

    /// Sign of reversal, `(−1)^{k(k−1)/2}`.
    pub fn reversal_sign(self) -> i8 {
        let k = self.degree();
        if (k * k.saturating_sub(1) / 2).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|k| format!("f{k}")).collect();
        write!(f, "{}", parts.join("^"))
    }
}
