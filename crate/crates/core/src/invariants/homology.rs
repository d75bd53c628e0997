use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::WordExpr;
use crate::error::{Error, Result};
use crate::linalg::Gf2Matrix;

/// Abelianized presentation over GF(2): one row per relation, one column per
/// generator, entries the exponent sums mod 2.
#[derive(Debug, Clone)]
pub struct Presentation2 {
    labels: Vec<String>,
    relations: Gf2Matrix,
}

/// Exponent sums of a word, by generator name.
fn exponent_sums(w: &WordExpr, sign: i64, acc: &mut BTreeMap<String, i64>) -> Result<()> {
    match w {
        WordExpr::Name(n) => *acc.entry(n.clone()).or_default() += sign,
        WordExpr::Product(fs) => {
            for f in fs {
                exponent_sums(f, sign, acc)?;
            }
        }
        WordExpr::Power(b, e) => exponent_sums(b, sign * e, acc)?,
        WordExpr::Conj(_, inner) => exponent_sums(inner, sign, acc)?,
        WordExpr::Bar(inner) => exponent_sums(inner, sign, acc)?,
        WordExpr::Literal(_) => {
            return Err(Error::Unsupported("matrix literal in a relation".into()))
        }
    }
    Ok(())
}

impl Presentation2 {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self {
            labels,
            relations: Gf2Matrix::new(n),
        }
    }

    /// Adds the relation `lhs = rhs`, both words in the generator labels.
    pub fn relate(&mut self, lhs: &str, rhs: &str) -> Result<()> {
        let mut sums = BTreeMap::new();
        exponent_sums(&WordExpr::parse(lhs)?, 1, &mut sums)?;
        exponent_sums(&WordExpr::parse(rhs)?, -1, &mut sums)?;
        let mut row = vec![false; self.labels.len()];
        for (name, e) in sums {
            let col =
                self.labels
                    .iter()
                    .position(|l| *l == name)
                    .ok_or_else(|| Error::UnknownName {
                        name: name.clone(),
                        namespace: "presentation".into(),
                    })?;
            row[col] = e.rem_euclid(2) == 1;
        }
        self.relations.push_row(&row);
        Ok(())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn relations(&self) -> &Gf2Matrix {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.relations.rank()
    }

    /// Dimension of `H_1(-; Z/2)`.
    pub fn betti_mod2(&self) -> usize {
        self.labels.len() - self.rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub n: u32,
    pub generators: usize,
    pub relations: usize,
    pub rank: usize,
    pub dimension: usize,
}

/// Presentation of the one-cusped family member `n` from its combination
/// relations: three "middle" relations per adjacent pair of blocks and six
/// "cap" relations.
pub fn onecusped_presentation(n: u32) -> Result<Presentation2> {
    if n == 0 {
        return Err(Error::InvalidN {
            what: "homology".into(),
            n: 0,
            reason: "n must be at least 1".into(),
        });
    }
    let mut labels = Vec::new();
    for i in 1..=n {
        for g in ["x", "y", "z"] {
            labels.push(format!("{g}{i}"));
        }
    }
    labels.extend(["an", "bn", "a0", "b0"].map(String::from));
    let mut p = Presentation2::new(labels);
    for i in 1..n {
        let j = i + 1;
        p.relate(&format!("x{i}*y{i}*x{i}"), &format!("x{j}*y{j}^-1*z{j}^-1"))?;
        p.relate(&format!("y{i}*z{i}*x{i}^-1"), &format!("y{j}*z{j}*x{j}^-1"))?;
        p.relate(&format!("x{i}^-2*y{i}^-1"), &format!("z{j}^2*y{j}^-1"))?;
    }
    p.relate("an*bn*an", &format!("x{n}^-2*y{n}^-1"))?;
    p.relate("bn^2*an^-1", &format!("y{n}*z{n}*x{n}^-1"))?;
    p.relate("an^-2*bn^-1", &format!("y{n}*x{n}*y{n}^-1*z{n}^-1*y{n}^-1"))?;
    p.relate("a0*b0*a0", "x1*y1^-1*z1^-1")?;
    p.relate("b0^2*a0^-1", "y1*z1*x1^-1")?;
    p.relate("a0^-2*b0^-1", "z1^2*y1^-1")?;
    Ok(p)
}

pub fn homology_report(n: u32) -> Result<HomologyReport> {
    let p = onecusped_presentation(n)?;
    Ok(HomologyReport {
        n,
        generators: p.labels().len(),
        relations: p.relations().nrows(),
        rank: p.rank(),
        dimension: p.betti_mod2(),
    })
}

/// `dim H_1(N_n; Z/2)` for the one-cusped family.
pub fn homology_mod2(n: u32) -> Result<usize> {
    Ok(onecusped_presentation(n)?.betti_mod2())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape() {
        for n in 1..6 {
            let p = onecusped_presentation(n).unwrap();
            assert_eq!(p.labels().len(), 3 * n as usize + 4);
            assert_eq!(p.relations().nrows(), 3 * (n as usize - 1) + 6);
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(homology_mod2(1).unwrap(), 2);
        assert_eq!(homology_mod2(2).unwrap(), 3);
        assert_eq!(homology_mod2(5).unwrap(), 6);
        assert!(homology_mod2(0).is_err());
    }

    #[test]
    fn exponent_rows() {
        let mut p = Presentation2::new(vec!["a".into(), "b".into()]);
        p.relate("a*b*a", "b^3").unwrap();
        assert!(!p.relations().get(0, 0));
        assert!(!p.relations().get(0, 1));
        p.relate("Conj(b, a)", "id_free").unwrap_err();
    }
}
