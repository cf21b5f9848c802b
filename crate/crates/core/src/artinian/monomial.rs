use crate::complex::{face_size, face_vertices, Face};

/// A monomial as the nondecreasing list of its variables, so `x_0² x_3`
/// is `[0, 0, 3]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u8>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_vars(mut vars: Vec<u8>) -> Self {
        vars.sort_unstable();
        Monomial(vars)
    }

    /// The squarefree monomial `x^σ`.
    pub fn of_face(face: Face) -> Self {
        Monomial(face_vertices(face).map(|v| v as u8).collect())
    }

    pub fn vars(&self) -> &[u8] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn support(&self) -> Face {
        self.0.iter().fold(0, |a, &v| a | (1u64 << v))
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn exponent(&self, v: usize) -> usize {
        self.0.iter().filter(|&&x| x as usize == v).count()
    }

    pub fn times_var(&self, v: usize) -> Self {
        let mut out = self.0.clone();
        let pos = out.partition_point(|&x| (x as usize) <= v);
        out.insert(pos, v as u8);
        Monomial(out)
    }

    pub fn times(&self, other: &Monomial) -> Self {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] <= other.0[j]) {
                out.push(self.0[i]);
                i += 1;
            } else {
                out.push(other.0[j]);
                j += 1;
            }
        }
        Monomial(out)
    }

    /// `m / x_v`, if `x_v` divides `m`.
    pub fn divide_var(&self, v: usize) -> Option<Self> {
        let pos = self.0.iter().position(|&x| x as usize == v)?;
        let mut out = self.0.clone();
        out.remove(pos);
        Some(Monomial(out))
    }
}

/// All degree-k monomials whose support is one of `supports`. Columns are
/// ordered with non-squarefree monomials first, so that elimination pivots
/// on them and the quotient basis prefers squarefree monomials.
pub fn monomials_with_support(supports: impl Iterator<Item = Face>, k: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for s in supports {
        let size = face_size(s);
        if size > k || (size == 0 && k > 0) {
            continue;
        }
        let verts: Vec<u8> = face_vertices(s).map(|v| v as u8).collect();
        distribute(&verts, k - size, 0, &mut verts.clone(), &mut out);
    }
    out.sort_by(|a, b| a.is_squarefree().cmp(&b.is_squarefree()).then_with(|| a.cmp(b)));
    out
}

fn distribute(verts: &[u8], extra: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Monomial>) {
    if extra == 0 {
        out.push(Monomial::from_vars(cur.clone()));
        return;
    }
    for i in start..verts.len() {
        cur.push(verts[i]);
        distribute(verts, extra - 1, i, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_division() {
        let m = Monomial::from_vars(vec![3, 0]);
        assert_eq!(m.times_var(1).vars(), &[0, 1, 3]);
        assert_eq!(m.times(&m).vars(), &[0, 0, 3, 3]);
        assert_eq!(m.divide_var(3).unwrap().vars(), &[0]);
        assert!(m.divide_var(2).is_none());
        assert_eq!(m.times_var(0).exponent(0), 2);
    }

    #[test]
    fn enumeration_counts() {
        // supports {0}, {0,1}: degree 3 gives x0³, x0²x1, x0x1²
        let ms = monomials_with_support([0b01u64, 0b11].into_iter(), 3);
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(|m| !m.is_squarefree()));
        let ms = monomials_with_support([0u64, 0b1, 0b11].into_iter(), 2);
        assert_eq!(ms.len(), 2);
        assert!(ms.last().unwrap().is_squarefree());
    }
}
