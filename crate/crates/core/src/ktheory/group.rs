use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Finitely generated abelian group `ℤ/t₁ ⊕ … ⊕ ℤ/tₖ ⊕ ℤ^r` in invariant
/// factor form: every `tᵢ ≥ 2` and `tᵢ | tᵢ₊₁`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    torsion: Vec<BigUint>,
    free_rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            torsion: Vec::new(),
            free_rank: rank,
        }
    }

    /// Builds `⊕ ℤ/dᵢ ⊕ ℤ^extra_free` from a Smith diagonal; units drop out,
    /// zeros become free summands.
    pub fn from_diagonal(diag: &[BigInt], extra_free: usize) -> Self {
        let mut torsion = Vec::new();
        let mut free_rank = extra_free;
        for d in diag {
            let d = d.magnitude();
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                torsion.push(d.clone());
            }
        }
        Self::from_parts(torsion, free_rank)
    }

    /// Normalises arbitrary cyclic orders into invariant factors.
    pub fn from_parts(orders: Vec<BigUint>, free_rank: usize) -> Self {
        let mut factors: Vec<BigUint> = orders.into_iter().filter(|d| !d.is_one()).collect();
        // zero orders are free summands
        let zeros = factors.iter().filter(|d| d.is_zero()).count();
        factors.retain(|d| !d.is_zero());
        // repeatedly replace (a, b) by (gcd, lcm) until the chain divides
        let n = factors.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&factors[i], &factors[j]);
                let g = a.gcd(b);
                let l = a.lcm(b);
                factors[i] = g;
                factors[j] = l;
            }
        }
        factors.retain(|d| !d.is_one());
        Self {
            torsion: factors,
            free_rank: free_rank + zeros,
        }
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        for t in &self.torsion {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "Z/{t}")?;
            first = false;
        }
        if self.free_rank > 0 {
            if !first {
                f.write_str(" + ")?;
            }
            match self.free_rank {
                1 => f.write_str("Z")?,
                r => write!(f, "Z^{r}")?,
            }
        }
        Ok(())
    }
}
