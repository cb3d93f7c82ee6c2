//! Exact arithmetic in the cyclotomic field `Q(ζ_c)` for integer
//! combinations `Σ a_k ζ^k`.

/// Integer polynomial coefficients, lowest degree first.
fn poly_divide_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![0];
    }
    let mut quot = vec![0i128; rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "division was not exact");
    quot
}

/// The cyclotomic polynomial `Φ_c`, from `x^c − 1 = Π_{d | c} Φ_d`.
pub fn cyclotomic_polynomial(c: usize) -> Vec<i128> {
    let mut p = vec![0i128; c + 1];
    p[0] = -1;
    p[c] = 1;
    for d in 1..c {
        if c.is_multiple_of(d) {
            p = poly_divide_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

/// Element of `Z[ζ_c]` written as `Σ_{k<c} a_k ζ^k` (not a unique form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    pub coeffs: Vec<i128>,
}

impl Cyclotomic {
    pub fn zero(c: usize) -> Self {
        Cyclotomic { coeffs: vec![0; c] }
    }

    pub fn integer(c: usize, v: i128) -> Self {
        let mut z = Self::zero(c);
        z.coeffs[0] = v;
        z
    }

    pub fn conductor(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: i128) -> Self {
        Cyclotomic {
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let c = self.conductor();
        let mut out = vec![0i128; c];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[(i + j) % c] += a * b;
            }
        }
        Cyclotomic { coeffs: out }
    }

    /// Complex conjugate: `ζ^k ↦ ζ^{−k}`.
    pub fn conj(&self) -> Self {
        let c = self.conductor();
        let mut out = vec![0i128; c];
        for (k, &a) in self.coeffs.iter().enumerate() {
            out[(c - k) % c] += a;
        }
        Cyclotomic { coeffs: out }
    }

    /// Unique representative of degree below `φ(c)`.
    pub fn reduced(&self) -> Vec<i128> {
        let phi = cyclotomic_polynomial(self.conductor());
        let dd = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for i in (dd..rem.len()).rev() {
            let lead = rem[i];
            if lead == 0 {
                continue;
            }
            for (j, &d) in phi.iter().enumerate() {
                rem[i - dd + j] -= lead * d;
            }
        }
        rem.truncate(dd);
        rem
    }

    /// The value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<i128> {
        let r = self.reduced();
        if r.iter().skip(1).all(|&x| x == 0) {
            Some(r.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_integer() == Some(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(5), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn identities() {
        // 1 + ζ + ζ² = 0 for c = 3
        let z = Cyclotomic { coeffs: vec![1, 1, 1] };
        assert!(z.is_zero());
        // golden ratio: (−ζ² − ζ³)² = 1 + (−ζ² − ζ³) for c = 5
        let g = Cyclotomic { coeffs: vec![0, 0, -1, -1, 0] };
        let lhs = g.mul(&g);
        let rhs = g.add(&Cyclotomic::integer(5, 1));
        assert!(lhs.add(&rhs.scale(-1)).is_zero());
        // |ζ|² = 1
        let mut zeta = Cyclotomic::zero(7);
        zeta.coeffs[3] = 1;
        assert_eq!(zeta.mul(&zeta.conj()).as_integer(), Some(1));
        assert_eq!(g.as_integer(), None);
    }
}
