use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::cyclotomic::Cyclotomic;
use super::FusionRing;

/// A character value: an integer, or coefficients `[a_0, …, a_{c−1}]` of
/// `Σ a_k ζ^k` with `ζ = exp(2πi/c)` and `c` the table's conductor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Integer(i64),
    Coefficients(Vec<i64>),
}

/// Character table of a finite group with exact cyclotomic entries.
///
/// Class 0 must be the identity class. `characters[i][c]` is the value of
/// the `i`-th irreducible character on class `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterTable {
    pub name: String,
    /// Catalog name of the group the table belongs to, when known.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub conductor: usize,
    pub class_sizes: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub characters: Vec<Vec<Entry>>,
}

impl CharacterTable {
    fn value(&self, e: &Entry) -> Result<Cyclotomic> {
        let c = self.conductor;
        match e {
            Entry::Integer(v) => Ok(Cyclotomic::integer(c, i128::from(*v))),
            Entry::Coefficients(v) if v.len() == c => Ok(Cyclotomic {
                coeffs: v.iter().map(|&x| i128::from(x)).collect(),
            }),
            Entry::Coefficients(v) => Err(Error::validation(format!(
                "entry has {} coefficients, conductor is {c}",
                v.len()
            ))),
        }
    }

    fn values(&self) -> Result<Vec<Vec<Cyclotomic>>> {
        self.characters
            .iter()
            .map(|row| row.iter().map(|e| self.value(e)).collect())
            .collect()
    }

    pub fn group_order(&self) -> u64 {
        self.class_sizes.iter().sum()
    }

    /// `|G| · ⟨χ, ψ⟩ = Σ_c |c| χ(c) conj(ψ(c))`.
    fn scaled_inner(&self, chi: &[Cyclotomic], psi: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.conductor);
        for ((a, b), &size) in chi.iter().zip(psi).zip(&self.class_sizes) {
            acc = acc.add(&a.mul(&b.conj()).scale(i128::from(size)));
        }
        acc
    }

    /// Shape checks and exact orthonormality of the rows.
    pub fn validate(&self) -> Result<()> {
        let k = self.class_sizes.len();
        if self.conductor == 0 {
            return Err(Error::validation("conductor must be positive"));
        }
        if k == 0 || self.class_sizes[0] != 1 {
            return Err(Error::validation("class 0 must be the identity class"));
        }
        if self.characters.len() != k || self.characters.iter().any(|r| r.len() != k) {
            return Err(Error::validation("table must be square with one column per class"));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != k {
                return Err(Error::validation("one label per character is required"));
            }
        }
        let values = self.values()?;
        let order = i128::from(self.group_order());
        for i in 0..k {
            for j in 0..k {
                let ip = self.scaled_inner(&values[i], &values[j]).as_integer();
                let expected = if i == j { order } else { 0 };
                if ip != Some(expected) {
                    return Err(Error::validation(format!("characters {i} and {j} are not orthonormal")));
                }
            }
        }
        Ok(())
    }

    /// Tensor-product multiplicities `⟨χ_i χ_j, χ_k⟩`, which must be
    /// nonnegative integers.
    pub fn fusion_ring(&self) -> Result<FusionRing> {
        self.validate()?;
        let values = self.values()?;
        let k = values.len();
        let order = i128::from(self.group_order());
        let unit = (0..k)
            .find(|&i| values[i].iter().all(|v| v.as_integer() == Some(1)))
            .ok_or_else(|| Error::validation("no trivial character"))?;
        let conj: Vec<Vec<Cyclotomic>> = values.iter().map(|r| r.iter().map(Cyclotomic::conj).collect()).collect();
        let dual: Vec<usize> = (0..k)
            .map(|i| {
                (0..k)
                    .find(|&j| values[j].iter().zip(&conj[i]).all(|(a, b)| a.add(&b.scale(-1)).is_zero()))
                    .ok_or_else(|| Error::validation(format!("conjugate of character {i} is missing")))
            })
            .collect::<Result<_>>()?;
        let mut constants = vec![0u32; k * k * k];
        for i in 0..k {
            for j in 0..k {
                let prod: Vec<Cyclotomic> = values[i].iter().zip(&values[j]).map(|(a, b)| a.mul(b)).collect();
                for l in 0..k {
                    let s = self
                        .scaled_inner(&prod, &values[l])
                        .as_integer()
                        .ok_or_else(|| Error::validation(format!("multiplicity ({i}, {j}; {l}) is not rational")))?;
                    if s < 0 || s % order != 0 {
                        return Err(Error::validation(format!(
                            "multiplicity ({i}, {j}; {l}) is {s}/{order}, not a nonnegative integer"
                        )));
                    }
                    constants[(i * k + j) * k + l] = (s / order) as u32;
                }
            }
        }
        let labels = self
            .labels
            .clone()
            .unwrap_or_else(|| (0..k).map(|i| format!("chi{i}")).collect());
        FusionRing::new(unit, dual, constants, labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::fusion::maximal_fusion_subalgebras;

    fn s3() -> CharacterTable {
        CharacterTable {
            name: "S3".into(),
            group: None,
            conductor: 1,
            class_sizes: vec![1, 3, 2],
            labels: Some(vec!["trivial".into(), "sign".into(), "std".into()]),
            characters: vec![
                vec![Entry::Integer(1), Entry::Integer(1), Entry::Integer(1)],
                vec![Entry::Integer(1), Entry::Integer(-1), Entry::Integer(1)],
                vec![Entry::Integer(2), Entry::Integer(0), Entry::Integer(-1)],
            ],
        }
    }

    fn cyclic(n: usize) -> CharacterTable {
        CharacterTable {
            name: format!("C{n}"),
            group: None,
            conductor: n,
            class_sizes: vec![1; n],
            labels: None,
            characters: (0..n)
                .map(|j| {
                    (0..n)
                        .map(|k| {
                            let mut v = vec![0; n];
                            v[(j * k) % n] = 1;
                            Entry::Coefficients(v)
                        })
                        .collect()
                })
                .collect(),
        }
    }

    #[test]
    fn s3_representation_ring() {
        let f = s3().fusion_ring().unwrap();
        assert_eq!(f.get(1, 1, 0), 1);
        assert_eq!((f.get(2, 2, 0), f.get(2, 2, 1), f.get(2, 2, 2)), (1, 1, 1));
        let r = maximal_fusion_subalgebras(&f, &Caps::default()).unwrap();
        assert_eq!(r.subsets, vec![vec![0, 1]]);
        assert!(r.holds);
    }

    #[test]
    fn cyclic_tables_give_group_rings() {
        for n in [2, 3, 4, 6] {
            let f = cyclic(n).fusion_ring().unwrap();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(f.get(a, b, c), u32::from((a + b) % n == c));
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_tables() {
        let mut t = s3();
        t.characters[2][2] = Entry::Integer(1);
        assert!(t.fusion_ring().is_err());
        let mut t = s3();
        t.class_sizes = vec![1, 2, 3];
        assert!(t.validate().is_err());
        let mut t = cyclic(3);
        t.characters[1][1] = Entry::Coefficients(vec![0, 1]);
        assert!(t.validate().is_err());
    }
}
