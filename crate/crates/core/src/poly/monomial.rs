use std::cmp::Ordering;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 16]>;

/// A power product, stored as one exponent per context variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(Exponents);

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial(SmallVec::from_elem(0, arity))
    }

    pub fn var(arity: usize, index: usize) -> Self {
        let mut m = Self::one(arity);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.0[index]
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree restricted to the given variable indices.
    pub fn degree_in(&self, indices: &[usize]) -> u32 {
        indices.iter().map(|&i| self.0[i] as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Exponents::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// True when no variable occurs in both.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i mod 64` set when variable `i` occurs; a cheap divisibility filter.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Reorders variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute(&self, perm: &[usize], new_arity: usize) -> Monomial {
        let mut out = SmallVec::from_elem(0, new_arity);
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                out[perm[i]] = e;
            }
        }
        Monomial(out)
    }

    pub(crate) fn exps_mut(&mut self) -> &mut Exponents {
        &mut self.0
    }
}

/// Inner order of a block in a block order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum InnerOrder {
    Lex,
    GrevLex,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrderBlock {
    pub len: usize,
    pub inner: InnerOrder,
}

/// Monomial orders on a fixed context. Variable `0` is the largest variable;
/// ties always follow declaration order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Contiguous variable blocks, compared block by block. Any variables
    /// past the declared blocks form a trailing grevlex block.
    Block(Vec<OrderBlock>),
    /// Weighted degree with grevlex tie-breaking. Weights must be positive.
    Weighted(Vec<u32>),
}

impl MonomialOrder {
    /// Two-block elimination order with grevlex inside each block: the first
    /// `first` variables are larger than any monomial in the rest.
    pub fn elimination(first: usize) -> Self {
        MonomialOrder::Block(vec![OrderBlock {
            len: first,
            inner: InnerOrder::GrevLex,
        }])
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex | MonomialOrder::Weighted(_))
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_exps(a.exponents(), b.exponents())
    }

    pub fn cmp_exps(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                for block in blocks {
                    let end = (start + block.len).min(a.len());
                    let ord = match block.inner {
                        InnerOrder::Lex => lex(&a[start..end], &b[start..end]),
                        InnerOrder::GrevLex => grevlex(&a[start..end], &b[start..end]),
                    };
                    if ord != Ordering::Equal {
                        return ord;
                    }
                    start = end;
                }
                grevlex(&a[start..], &b[start..])
            }
            MonomialOrder::Weighted(w) => {
                let wa: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let wb: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                wa.cmp(&wb).then_with(|| grevlex(a, b))
            }
        }
    }
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable wins
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::GrevLex;
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
        let e = MonomialOrder::elimination(1);
        assert_eq!(e.cmp(&m(&[1, 0, 0]), &m(&[0, 4, 4])), Ordering::Greater);
        assert_eq!(e.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 0])), Ordering::Greater);
    }

    #[test]
    fn divisibility_helpers() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(b.div(&a), Some(m(&[1, 0, 1])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 4, 1])));
    }
}
