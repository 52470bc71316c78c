//! k-subsets of `[n] = {1, …, n}` as bit masks with colexicographic ranks.

use std::fmt;

use crate::error::{Error, Result};

/// Largest universe a [`KSubset`] can address.
pub const MAX_UNIVERSE: usize = 64;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    num_integer::binomial(n as u64, k as u64)
}

/// A k-element subset of `{1, …, n}`; element `e` is stored as bit `e − 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    n: u8,
    bits: u64,
}

impl KSubset {
    /// Builds a subset from 1-indexed elements.
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        check_universe(n)?;
        let mut bits = 0u64;
        for &e in elements {
            if e == 0 || e > n {
                return Err(Error::InvalidParameters(format!(
                    "element {e} outside [1, {n}]"
                )));
            }
            if bits >> (e - 1) & 1 == 1 {
                return Err(Error::InvalidParameters(format!("element {e} repeated")));
            }
            bits |= 1 << (e - 1);
        }
        Ok(KSubset { n: n as u8, bits })
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_universe(n)?;
        if n < 64 && bits >> n != 0 {
            return Err(Error::InvalidParameters(format!(
                "bit mask {bits:#x} has elements beyond {n}"
            )));
        }
        Ok(KSubset { n: n as u8, bits })
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.universe() && self.bits >> (e - 1) & 1 == 1
    }

    /// Ascending 1-indexed elements.
    pub fn elements(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.k());
        let mut b = self.bits;
        while b != 0 {
            out.push(b.trailing_zeros() as usize + 1);
            b &= b - 1;
        }
        out
    }

    #[inline]
    pub fn intersection_size(&self, other: &KSubset) -> usize {
        (self.bits & other.bits).count_ones() as usize
    }

    #[inline]
    pub fn is_disjoint(&self, other: &KSubset) -> bool {
        self.bits & other.bits == 0
    }

    /// `[n] ∖ self`
    pub fn complement(&self) -> KSubset {
        let mask = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        KSubset {
            n: self.n,
            bits: !self.bits & mask,
        }
    }

    /// Colexicographic combinadic rank: `Σ C(c_i, i)` over the 0-indexed
    /// elements `c_1 < … < c_k`.
    pub fn rank(&self) -> u64 {
        let mut b = self.bits;
        let mut i = 1;
        let mut r = 0;
        while b != 0 {
            let c = b.trailing_zeros() as usize;
            r += binomial(c, i);
            i += 1;
            b &= b - 1;
        }
        r
    }

    /// Inverse of [`KSubset::rank`] for k-subsets of `[n]`.
    pub fn unrank(n: usize, k: usize, rank: u64) -> Result<Self> {
        check_universe(n)?;
        if k > n || rank >= binomial(n, k) {
            return Err(Error::InvalidParameters(format!(
                "rank {rank} out of range for C({n},{k})"
            )));
        }
        let mut bits = 0u64;
        let mut r = rank;
        let mut c = n;
        for i in (1..=k).rev() {
            // largest c with C(c, i) <= r
            c -= 1;
            while binomial(c, i) > r {
                c -= 1;
            }
            r -= binomial(c, i);
            bits |= 1 << c;
        }
        Ok(KSubset { n: n as u8, bits })
    }

    /// Parses `{a,b,c}` (braces optional) over universe `n`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut elements = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let e = tok.parse::<usize>().map_err(|_| {
                Error::InvalidParameters(format!("bad subset element `{tok}` in `{s}`"))
            })?;
            elements.push(e);
        }
        KSubset::new(n, &elements)
    }
}

fn check_universe(n: usize) -> Result<()> {
    if n == 0 || n > MAX_UNIVERSE {
        return Err(Error::InvalidParameters(format!(
            "universe size {n} outside [1, {MAX_UNIVERSE}]"
        )));
    }
    Ok(())
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All k-subsets of `[n]` in colex order (ascending rank).
pub fn all_subsets(n: usize, k: usize) -> Result<Vec<KSubset>> {
    check_universe(n)?;
    if k > n {
        return Err(Error::InvalidParameters(format!("k = {k} exceeds n = {n}")));
    }
    let total = binomial(n, k) as usize;
    let mut out = Vec::with_capacity(total);
    if k == 0 {
        out.push(KSubset { n: n as u8, bits: 0 });
        return Ok(out);
    }
    // Gosper's hack visits masks in increasing numeric order, which is colex.
    let mut x: u64 = if k == 64 { !0 } else { (1u64 << k) - 1 };
    for i in 0..total {
        out.push(KSubset { n: n as u8, bits: x });
        if i + 1 == total {
            break;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
    Ok(out)
}
