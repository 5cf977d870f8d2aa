//! Permutations on `{0, .., n-1}` composed left to right: `x^(ab) = (x^a)^b`.
//! Cycle notation in text uses 1-based points, matching the data files.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u16).collect())
    }

    pub fn from_images(images: Vec<u16>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i as usize >= n || std::mem::replace(&mut seen[i as usize], true) {
                return Err(Error::InvalidArgument("images do not form a bijection".into()));
            }
        }
        Ok(Perm(images))
    }

    /// Parse 1-based cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Perm> {
        let mut images: Vec<u16> = (0..n as u16).collect();
        let mut seen = vec![false; n];
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("bad cycle syntax near {rest:?}")))?;
            rest = body.1;
            if body.0.is_empty() {
                continue;
            }
            let pts: Vec<usize> = body
                .0
                .split(',')
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {t:?}"))))
                .collect::<Result<_>>()?;
            for &p in &pts {
                if p == 0 || p > n {
                    return Err(Error::Parse(format!("point {p} outside 1..{n}")));
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::Parse(format!("point {p} repeated")));
                }
            }
            for w in 0..pts.len() {
                images[pts[w] - 1] = (pts[(w + 1) % pts.len()] - 1) as u16;
            }
        }
        Ok(Perm(images))
    }

    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Perm {
        let mut images: Vec<u16> = (0..n as u16).collect();
        for c in cycles {
            for w in 0..c.len() {
                images[c[w]] = c[(w + 1) % c.len()] as u16;
            }
        }
        Perm(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.0
    }

    pub fn mul(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inv(&self) -> Perm {
        let mut out = vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u16;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.image(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.image(x);
            }
            out.push(c);
        }
        out
    }

    /// 0 for even, 1 for odd.
    pub fn parity(&self) -> u8 {
        (self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2) as u8
    }

    /// Extend to a larger degree by fixing the new points.
    pub fn extend(&self, n: usize) -> Perm {
        let mut v = self.0.clone();
        v.extend(self.degree() as u16..n as u16);
        Perm(v)
    }

    /// Relabel: the permutation on `offset + i` acting like `self` on `i`, degree `n`.
    pub fn shifted(&self, offset: usize, n: usize) -> Perm {
        let mut v: Vec<u16> = (0..n as u16).collect();
        for (i, &x) in self.0.iter().enumerate() {
            v[offset + i] = offset as u16 + x;
        }
        Perm(v)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cs.is_empty() {
            return f.write_str("()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse_cycles(5, "(1,2,3)(4,5)").unwrap();
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.parity(), 1);
        assert!(Perm::parse_cycles(3, "(1,1)").is_err());
        assert!(Perm::parse_cycles(3, "(1,4)").is_err());
        assert!(Perm::parse_cycles(3, "()").unwrap().is_identity());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Perm::parse_cycles(3, "(1,2)").unwrap();
        let b = Perm::parse_cycles(3, "(2,3)").unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.mul(&b).image(0), 2);
        assert!(a.mul(&a.inv()).is_identity());
    }
}
