use std::io::{Read, Write};

use super::op::{Direction, QWeylOp};
use super::QWeylError;
use crate::exec::Execution;
use crate::scalars::{parse_scalar, Gen, Monomial, Scalar};

/// Scalar values on a full integer box `lo..=hi` (row-major, last index fastest).
#[derive(Clone, Debug)]
pub struct FunctionTable {
    lo: Vec<i64>,
    hi: Vec<i64>,
    values: Vec<Scalar>,
}

impl FunctionTable {
    pub fn from_fn<F>(lo: Vec<i64>, hi: Vec<i64>, f: F) -> Self
    where
        F: Fn(&[i64]) -> Scalar + Sync + Send,
    {
        Self::from_fn_with(lo, hi, f, Execution::Sequential)
    }

    pub fn from_fn_with<F>(lo: Vec<i64>, hi: Vec<i64>, f: F, exec: Execution) -> Self
    where
        F: Fn(&[i64]) -> Scalar + Sync + Send,
    {
        assert_eq!(lo.len(), hi.len());
        assert!(lo.iter().zip(&hi).all(|(l, h)| l <= h), "empty window");
        let t = FunctionTable {
            lo,
            hi,
            values: Vec::new(),
        };
        let values = exec.map_range(t.len(), |i| f(&t.point(i)));
        FunctionTable { values, ..t }
    }

    pub fn from_values(lo: Vec<i64>, hi: Vec<i64>, values: Vec<Scalar>) -> Result<Self, QWeylError> {
        let t = FunctionTable {
            lo,
            hi,
            values: Vec::new(),
        };
        if t.lo.len() != t.hi.len() || t.lo.iter().zip(&t.hi).any(|(l, h)| l > h) || t.len() != values.len() {
            return Err(QWeylError::Window("table values do not fill the window".into()));
        }
        Ok(FunctionTable { values, ..t })
    }

    pub fn rank(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn extent(&self, i: usize) -> usize {
        (self.hi[i] - self.lo[i] + 1) as usize
    }

    pub fn len(&self) -> usize {
        (0..self.rank()).map(|i| self.extent(i)).product()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn point(&self, mut idx: usize) -> Vec<i64> {
        let mut p = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            let e = self.extent(i);
            p[i] = self.lo[i] + (idx % e) as i64;
            idx /= e;
        }
        p
    }

    pub(crate) fn index(&self, p: &[i64]) -> Option<usize> {
        let mut idx = 0;
        for i in 0..self.rank() {
            if p[i] < self.lo[i] || p[i] > self.hi[i] {
                return None;
            }
            idx = idx * self.extent(i) + (p[i] - self.lo[i]) as usize;
        }
        Some(idx)
    }

    pub fn get(&self, p: &[i64]) -> Option<&Scalar> {
        self.index(p).map(|i| &self.values[i])
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vec<i64>, &Scalar)> {
        self.values.iter().enumerate().map(|(i, v)| (self.point(i), v))
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// Restricts to a sub-box.
    pub fn restrict(&self, lo: Vec<i64>, hi: Vec<i64>) -> Result<Self, QWeylError> {
        let mut vals = Vec::new();
        let shape = FunctionTable {
            lo: lo.clone(),
            hi: hi.clone(),
            values: Vec::new(),
        };
        for i in 0..shape.len() {
            let p = shape.point(i);
            vals.push(
                self.get(&p)
                    .cloned()
                    .ok_or_else(|| QWeylError::Window("sub-box outside the table".into()))?,
            );
        }
        FunctionTable::from_values(lo, hi, vals)
    }

    /// Applies a ring map to every value.
    pub fn map_values<F: Fn(&Scalar) -> Scalar + Sync + Send>(&self, f: F) -> Self {
        FunctionTable {
            lo: self.lo.clone(),
            hi: self.hi.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    /// CSV with columns `n1..nr,value`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), QWeylError> {
        let mut wr = csv::Writer::from_writer(w);
        let mut header: Vec<String> = (1..=self.rank()).map(|i| format!("n{i}")).collect();
        header.push("value".into());
        wr.write_record(&header).map_err(csv_err)?;
        for (p, v) in self.iter() {
            let mut rec: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            rec.push(v.to_string());
            wr.write_record(&rec).map_err(csv_err)?;
        }
        wr.flush().map_err(|e| QWeylError::Io(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("utf8")
    }

    pub fn read_csv<R: Read>(r: R) -> Result<Self, QWeylError> {
        let mut rd = csv::Reader::from_reader(r);
        let rank = rd.headers().map_err(csv_err)?.len().saturating_sub(1);
        if rank == 0 {
            return Err(QWeylError::Window("table has no index columns".into()));
        }
        let mut rows: Vec<(Vec<i64>, Scalar)> = Vec::new();
        for rec in rd.records() {
            let rec = rec.map_err(csv_err)?;
            let p = (0..rank)
                .map(|i| rec[i].trim().parse::<i64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| QWeylError::Window(format!("bad index: {e}")))?;
            let v = parse_scalar(&rec[rank]).map_err(|e| QWeylError::Window(e.to_string()))?;
            rows.push((p, v));
        }
        if rows.is_empty() {
            return Err(QWeylError::Window("empty table".into()));
        }
        let lo: Vec<i64> = (0..rank).map(|i| rows.iter().map(|r| r.0[i]).min().unwrap()).collect();
        let hi: Vec<i64> = (0..rank).map(|i| rows.iter().map(|r| r.0[i]).max().unwrap()).collect();
        let shape = FunctionTable {
            lo: lo.clone(),
            hi: hi.clone(),
            values: Vec::new(),
        };
        let mut vals: Vec<Option<Scalar>> = vec![None; shape.len()];
        for (p, v) in rows {
            let i = shape.index(&p).unwrap();
            vals[i] = Some(v);
        }
        let values = vals
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| QWeylError::Window("table window has holes".into()))?;
        FunctionTable::from_values(lo, hi, values)
    }

    pub fn from_csv(s: &str) -> Result<Self, QWeylError> {
        Self::read_csv(s.as_bytes())
    }
}

fn csv_err(e: csv::Error) -> QWeylError {
    QWeylError::Io(e.to_string())
}

/// `op f` on the window shrunk so every shift stays inside.
///
/// Discrete operator directions correspond, in order, to the table's
/// index directions; continuous directions act on the values through
/// `scalars::shift` (`L`) and multiplication by `x_v` (`M`).
pub fn apply(op: &QWeylOp, f: &FunctionTable) -> Result<FunctionTable, QWeylError> {
    let discrete: Vec<usize> = op
        .dirs()
        .iter()
        .enumerate()
        .filter(|(_, d)| **d == Direction::Discrete)
        .map(|(i, _)| i)
        .collect();
    if discrete.len() != f.rank() {
        return Err(QWeylError::RankMismatch(discrete.len(), f.rank()));
    }
    let mut hi = f.hi.clone();
    for (t, &i) in discrete.iter().enumerate() {
        hi[t] -= op.order(i) as i64;
        if hi[t] < f.lo[t] {
            return Err(QWeylError::Window(format!(
                "window too small in direction {} for order {}",
                t + 1,
                op.order(i)
            )));
        }
    }
    let terms: Vec<_> = op.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    let out = FunctionTable::from_fn(f.lo.clone(), hi, |p| {
        let mut acc = Scalar::zero();
        for ((alpha, beta), c) in &terms {
            let mut src = p.to_vec();
            let mut qexp = 0i64;
            let mut xpow: Vec<(Gen, i32)> = Vec::new();
            for (t, &i) in discrete.iter().enumerate() {
                src[t] += alpha[i] as i64;
                qexp += beta[i] as i64 * p[t];
            }
            let mut v = f.get(&src).expect("inside window").clone();
            for (i, d) in op.dirs().iter().enumerate() {
                if let Direction::Continuous(var) = d {
                    for _ in 0..alpha[i] {
                        v = v.shift(*var);
                    }
                    xpow.push((Gen::x(*var), beta[i]));
                }
            }
            xpow.push((Gen::Q, qexp as i32));
            let m = Scalar::monomial(Monomial::from_pairs(xpow));
            acc = acc.add(&c.mul(&m).mul(&v));
        }
        acc
    });
    Ok(out)
}

/// True iff `op f` vanishes on the shrunk window.
pub fn annihilates(op: &QWeylOp, f: &FunctionTable) -> Result<bool, QWeylError> {
    Ok(apply(op, f)?.is_zero())
}
