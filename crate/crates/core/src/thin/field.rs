use crate::error::{Error, Result};

/// The prime field `F_p`. Elements are residues `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    pub const F2: Field = Field { p: 2 };
    pub const F3: Field = Field { p: 3 };

    pub fn new(p: u32) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        if p > 65_521 {
            return Err(Error::domain(format!("characteristic {p} is too large")));
        }
        Ok(Field { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Multiplicative inverse by Fermat. `a` must be non-zero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        let (mut base, mut e, mut acc) = (a % self.p, self.p - 2, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.p
    }

    /// `acc += c * v`, coordinatewise.
    pub fn axpy(self, acc: &mut [u32], c: u32, v: &[u32]) {
        if c == 0 {
            return;
        }
        for (a, &x) in acc.iter_mut().zip(v) {
            *a = (*a + c * x) % self.p;
        }
    }

    pub fn rank(self, rows: &[Vec<u32>]) -> usize {
        Echelon::new(self, rows).rank()
    }

    /// A non-trivial combination of `rows` summing to zero, if there is one.
    pub fn dependence(self, rows: &[Vec<u32>]) -> Option<Vec<u32>> {
        Echelon::new(self, rows).dependences.into_iter().next()
    }

    /// A basis of the left null space: coefficient vectors `c` with
    /// `sum c_i rows_i = 0`.
    pub fn left_nullspace(self, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
        Echelon::new(self, rows).dependences
    }

    /// Coefficients expressing `target` in terms of `rows`.
    pub fn solve(self, rows: &[Vec<u32>], target: &[u32]) -> Option<Vec<u32>> {
        Echelon::new(self, rows).express(target)
    }
}

/// Row reduction that remembers how every reduced row arose from the input.
struct Echelon {
    field: Field,
    width: usize,
    n_rows: usize,
    /// (pivot column, reduced row, combination of inputs)
    pivots: Vec<(usize, Vec<u32>, Vec<u32>)>,
    dependences: Vec<Vec<u32>>,
}

impl Echelon {
    fn new(field: Field, rows: &[Vec<u32>]) -> Self {
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        let mut e = Echelon { field, width, n_rows: rows.len(), pivots: Vec::new(), dependences: Vec::new() };
        for (i, r) in rows.iter().enumerate() {
            let mut v = r.clone();
            v.resize(width, 0);
            let mut track = vec![0; rows.len()];
            track[i] = 1;
            e.reduce(&mut v, &mut track);
            match v.iter().position(|&x| x != 0) {
                None => e.dependences.push(track),
                Some(col) => {
                    let s = field.inv(v[col]);
                    v.iter_mut().for_each(|x| *x = field.mul(*x, s));
                    track.iter_mut().for_each(|x| *x = field.mul(*x, s));
                    e.pivots.push((col, v, track));
                }
            }
        }
        e
    }

    fn reduce(&self, v: &mut [u32], track: &mut [u32]) {
        let f = self.field;
        for (col, row, tr) in &self.pivots {
            let c = v[*col];
            if c != 0 {
                let m = f.neg(c);
                f.axpy(v, m, row);
                f.axpy(track, m, tr);
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn express(&self, target: &[u32]) -> Option<Vec<u32>> {
        if target.len() > self.width && target[self.width..].iter().any(|&x| x != 0) {
            return None;
        }
        let mut v = target.to_vec();
        v.resize(self.width, 0);
        let mut track = vec![0; self.n_rows];
        self.reduce(&mut v, &mut track);
        v.iter().all(|&x| x == 0).then(|| track.iter().map(|&x| self.field.neg(x)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_only() {
        assert!(Field::new(2).is_ok());
        assert!(Field::new(7).is_ok());
        assert!(Field::new(1).is_err());
        assert!(Field::new(9).is_err());
    }

    #[test]
    fn inverses() {
        let f = Field::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rank_and_dependence() {
        let f = Field::F2;
        let rows = vec![vec![1, 1], vec![1, 0], vec![0, 1]];
        assert_eq!(f.rank(&rows), 2);
        let c = f.dependence(&rows).unwrap();
        assert_eq!(c, vec![1, 1, 1]);
    }

    #[test]
    fn solve_reconstructs_target() {
        let f = Field::F3;
        let rows = vec![vec![1, 2, 0], vec![0, 1, 1]];
        let target = vec![2, 0, 2];
        let c = f.solve(&rows, &target).unwrap();
        let mut acc = vec![0; 3];
        for (ci, r) in c.iter().zip(&rows) {
            f.axpy(&mut acc, *ci, r);
        }
        assert_eq!(acc, target);
        assert!(f.solve(&rows, &[0, 0, 1]).is_none());
    }
}
