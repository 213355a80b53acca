use std::fmt;

use super::Signature;

/// A basis blade stored as a bitset: bit `i-1` set means `e_i` is a factor.
///
/// Blades are always canonical (increasing indices), so `e31` is written as
/// `-e13` by the product routine rather than represented directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(u8);

const ORDER_1: [Blade; 2] = [Blade(0b0), Blade(0b1)];
const ORDER_2: [Blade; 4] = [Blade(0b00), Blade(0b01), Blade(0b10), Blade(0b11)];
// 1, e1, e2, e3, e12, e13, e23, e123
const ORDER_3: [Blade; 8] = [
    Blade(0b000),
    Blade(0b001),
    Blade(0b010),
    Blade(0b100),
    Blade(0b011),
    Blade(0b101),
    Blade(0b110),
    Blade(0b111),
];

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_bits(bits: u8) -> Blade {
        Blade(bits)
    }

    /// Blade from 1-based vector indices; `None` on repeats or indices above 3.
    pub fn from_indices(indices: &[usize]) -> Option<Blade> {
        let mut bits = 0u8;
        for &i in indices {
            if !(1..=3).contains(&i) || bits & (1 << (i - 1)) != 0 {
                return None;
            }
            bits |= 1 << (i - 1);
        }
        Some(Blade(bits))
    }

    /// The `i`-th basis vector (1-based).
    pub fn vector(i: usize) -> Blade {
        Blade(1 << (i - 1))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Highest vector index appearing in the blade, 0 for the scalar.
    pub fn max_index(self) -> usize {
        8 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (1..=3).filter(move |i| self.0 & (1 << (i - 1)) != 0)
    }

    /// Position of this blade in the canonical coefficient order of `sig`.
    pub fn index_in(self, sig: Signature) -> Option<usize> {
        canonical_order(sig).iter().position(|&b| b == self)
    }
}

/// Canonical blade order: grade first, then lexicographic by indices.
///
/// For n = 3 this is `{1, e1, e2, e3, e12, e13, e23, e123}`.
pub fn canonical_order(sig: Signature) -> &'static [Blade] {
    match sig.dim() {
        1 => &ORDER_1,
        2 => &ORDER_2,
        _ => &ORDER_3,
    }
}

/// Geometric product of two basis blades: `e_a e_b = sign * e_result`.
///
/// The sign collects one factor of -1 per transposition needed to bring the
/// concatenated index list into increasing order, times the square of every
/// basis vector that appears in both blades.
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> (f64, Blade) {
    let mut swaps = 0u32;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    let mut sign = if swaps.is_multiple_of(2) { 1.0 } else { -1.0 };
    let common = a.0 & b.0;
    for i in 1..=sig.dim() {
        if common & (1 << (i - 1)) != 0 {
            sign *= sig.vector_square(i);
        }
    }
    (sign, Blade(a.0 ^ b.0))
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}
