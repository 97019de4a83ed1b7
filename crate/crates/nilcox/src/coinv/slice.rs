//! Dense per-degree slices of the ideal `(R^W_+)`, computed by exact row
//! reduction over the cyclotomic field and cached on disk as JSON.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::{json, Value};

use super::invariant_gens;
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, CyclotomicField, Ring};
use crate::linalg::{rref, Matrix};
use crate::poly::{monomials_of_degree, Monomial, Poly, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantSlice {
    pub n: usize,
    pub m: usize,
    pub degree: usize,
    /// Monomials of `R_d` in decreasing order; these index the columns.
    pub monomials: Vec<Monomial>,
    /// Nonzero rows of the reduced row echelon form of the ideal in degree `d`.
    pub ideal_rref: Vec<Vec<Cyclotomic>>,
    pub pivots: Vec<usize>,
}

impl CoinvariantSlice {
    pub fn quotient_dim(&self) -> usize {
        self.monomials.len() - self.pivots.len()
    }

    /// Monomials not among the pivots: a basis of `C_d`.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        self.monomials
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.pivots.contains(i))
            .map(|(_, m)| m.clone())
            .collect()
    }

    /// Projects the degree-`d` part of `f` onto the span of the standard monomials.
    pub fn normal_form(&self, f: &Poly<Cyclotomic>) -> Poly<Cyclotomic> {
        let field = CyclotomicField::new(self.n, self.m);
        let pr = PolyRing::new(field.clone(), self.n);
        let mut v: Vec<Cyclotomic> = self.monomials.iter().map(|mo| pr.coeff(f, mo)).collect();
        for (row, &p) in self.ideal_rref.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    v[j] = v[j].sub(&c.mul(x));
                }
            }
        }
        let mut out = pr.zero();
        for (mo, c) in self.monomials.iter().zip(v) {
            pr.add_term(&mut out, mo.clone(), &c);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "m": self.m,
            "d": self.degree,
            "monomials": self.monomials.iter().map(|mo| mo.exps().to_vec()).collect::<Vec<_>>(),
            "pivots": self.pivots,
            "rref": self.ideal_rref.iter()
                .map(|r| r.iter().map(Cyclotomic::to_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("slice JSON: bad {what}"));
        let get_usize = |k: &str| v.get(k).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| bad(k));
        let monomials: Vec<Vec<u16>> =
            serde_json::from_value(v.get("monomials").cloned().ok_or_else(|| bad("monomials"))?)
                .map_err(|e| Error::Parse(e.to_string()))?;
        let pivots: Vec<usize> = serde_json::from_value(v.get("pivots").cloned().ok_or_else(|| bad("pivots"))?)
            .map_err(|e| Error::Parse(e.to_string()))?;
        let rows = v.get("rref").and_then(Value::as_array).ok_or_else(|| bad("rref"))?;
        let mut ideal_rref = vec![];
        for r in rows {
            let r = r.as_array().ok_or_else(|| bad("rref row"))?;
            ideal_rref.push(r.iter().map(Cyclotomic::from_json).collect::<Result<Vec<_>>>()?);
        }
        Ok(CoinvariantSlice {
            n: get_usize("n")?,
            m: get_usize("m")?,
            degree: get_usize("d")?,
            monomials: monomials.iter().map(|e| Monomial::from_exps(e)).collect(),
            ideal_rref,
            pivots,
        })
    }
}

fn cache_path(dir: &Path, n: usize, m: usize, d: usize) -> PathBuf {
    dir.join(format!("slice_n{n}_m{m}_d{d}.json"))
}

/// Writes through a temporary file in the same directory and renames it
/// into place, so readers never observe a partial file.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir)?;
    let nanos = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos())
        .unwrap_or(0);
    let tmp = dir.join(format!(
        ".{}.{}.{}.tmp",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("slice"),
        std::process::id(),
        nanos
    ));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn compute_slice(n: usize, m: usize, d: usize) -> CoinvariantSlice {
    let field = CyclotomicField::new(n, m);
    let pr = PolyRing::new(field.clone(), n);
    let monomials = monomials_of_degree(n, d);
    let col: std::collections::HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, mo)| (mo, i)).collect();
    let mut rows = vec![];
    for g in invariant_gens(&pr, m) {
        let dg = g.degree().unwrap_or(0);
        if dg > d {
            continue;
        }
        for h in monomials_of_degree(n, d - dg) {
            let prod = pr.mul_term(&g, &h, &field.one());
            let mut row = vec![field.zero(); monomials.len()];
            for (mo, c) in prod.terms {
                row[col[&mo]] = c;
            }
            rows.push(row);
        }
    }
    let cols = monomials.len();
    let mut a = Matrix::from_rows(rows, cols);
    let pivots = rref(&field, &mut a);
    let ideal_rref = (0..pivots.len()).map(|i| a.row(i).to_vec()).collect();
    CoinvariantSlice {
        n,
        m,
        degree: d,
        monomials,
        ideal_rref,
        pivots,
    }
}

/// The degree-`d` slice of the ideal, read from or written to `cache_dir`
/// when one is given. The cache only accelerates; a missing or unreadable
/// file is recomputed.
pub fn coinvariant_slice(n: usize, m: usize, d: usize, cache_dir: Option<&Path>) -> Result<CoinvariantSlice> {
    if let Some(dir) = cache_dir {
        let path = cache_path(dir, n, m, d);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(v) = serde_json::from_str::<Value>(&text) {
                if let Ok(s) = CoinvariantSlice::from_json(&v) {
                    if s.n == n && s.m == m && s.degree == d {
                        return Ok(s);
                    }
                }
            }
        }
        let s = compute_slice(n, m, d);
        write_atomic(&path, &s.to_json().to_string())?;
        return Ok(s);
    }
    Ok(compute_slice(n, m, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coinv::pi_m;

    #[test]
    fn slice_dims_match_pi() {
        let pi = pi_m(3, 2);
        for d in 0..=7 {
            let s = coinvariant_slice(3, 2, d, None).unwrap();
            assert_eq!(s.quotient_dim(), pi.get(d).copied().unwrap_or(0), "d = {d}");
        }
    }

    #[test]
    fn cache_roundtrip() {
        let dir = std::env::temp_dir().join(format!("nilcox-slice-test-{}", std::process::id()));
        let a = coinvariant_slice(3, 2, 4, Some(&dir)).unwrap();
        let b = coinvariant_slice(3, 2, 4, Some(&dir)).unwrap();
        assert_eq!(a, b);
        let _ = fs::remove_dir_all(&dir);
    }
}
