//! Permutations on `{0, …, degree-1}` and the disjoint-cycle notation used
//! for generator input.

use std::fmt;

use thiserror::Error;

/// A bijection on `{0, …, degree-1}`, stored as its image table.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`, so that
/// conjugation `g x g⁻¹` is a left action.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleParseError {
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedChar { position: usize, found: char },
    #[error("unterminated cycle starting at position {position}")]
    Unterminated { position: usize },
    #[error("point {point} at position {position} is out of range for degree {degree}")]
    OutOfRange { point: u64, position: usize, degree: usize },
    #[error("point {point} at position {position} appears more than once")]
    Repeated { point: u32, position: usize },
    #[error("point label at position {position} is too large")]
    Overflow { position: usize },
    #[error("empty input (write \"()\" for the identity)")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("images do not form a bijection on 0..{degree}")]
pub struct NotABijection {
    pub degree: usize,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, NotABijection> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &i in &images {
            let i = i as usize;
            if i >= degree || seen[i] {
                return Err(NotABijection { degree });
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint cycle notation such as `"(0 1 2)(3 4)"` at the given
    /// degree. Fixed points are omitted and the identity is written `"()"`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, CycleParseError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let bytes: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        let mut saw_cycle = false;

        let skip_ws = |i: &mut usize| {
            while *i < bytes.len() && bytes[*i].1.is_whitespace() {
                *i += 1;
            }
        };

        loop {
            skip_ws(&mut i);
            if i >= bytes.len() {
                break;
            }
            let (open_pos, c) = bytes[i];
            if c != '(' {
                return Err(CycleParseError::UnexpectedChar { position: open_pos, found: c });
            }
            i += 1;
            saw_cycle = true;
            let mut cycle: Vec<u32> = Vec::new();
            loop {
                skip_ws(&mut i);
                if i >= bytes.len() {
                    return Err(CycleParseError::Unterminated { position: open_pos });
                }
                let (pos, c) = bytes[i];
                if c == ')' {
                    i += 1;
                    break;
                }
                if !c.is_ascii_digit() {
                    return Err(CycleParseError::UnexpectedChar { position: pos, found: c });
                }
                let mut value: u64 = 0;
                while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                    let digit = bytes[i].1 as u64 - '0' as u64;
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit))
                        .filter(|&v| v <= u32::MAX as u64)
                        .ok_or(CycleParseError::Overflow { position: pos })?;
                    i += 1;
                }
                if value as usize >= degree {
                    return Err(CycleParseError::OutOfRange { point: value, position: pos, degree });
                }
                let point = value as u32;
                if used[point as usize] {
                    return Err(CycleParseError::Repeated { point, position: pos });
                }
                used[point as usize] = true;
                cycle.push(point);
                // a label must be followed by whitespace or the closing paren
                if i < bytes.len() && !bytes[i].1.is_whitespace() && bytes[i].1 != ')' {
                    return Err(CycleParseError::UnexpectedChar { position: bytes[i].0, found: bytes[i].1 });
                }
            }
            for (k, &a) in cycle.iter().enumerate() {
                images[a as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        if !saw_cycle {
            return Err(CycleParseError::Empty);
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j as u32);
                j = self.images[j] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_cycles() {
        let p = Permutation::parse_cycles("(0 1 2)(3 4)", 6).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3, 5]);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert!(Permutation::parse_cycles("()", 3).unwrap().is_identity());
        assert!(Permutation::parse_cycles("  ( )  ", 3).unwrap().is_identity());
        assert_eq!(Permutation::parse_cycles("(1)", 3).unwrap(), Permutation::identity(3));
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Permutation::parse_cycles("(0 1)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        // (0 1)(1 2): 2 -> 1 -> 0
        let ab = a.compose(&b);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab.to_string(), "(0 1 2)");
        assert!(ab.compose(&ab.inverse()).is_identity());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            Permutation::parse_cycles("(0 3)", 3),
            Err(CycleParseError::OutOfRange { point: 3, position: 3, .. })
        ));
        assert!(matches!(Permutation::parse_cycles("(0 1", 3), Err(CycleParseError::Unterminated { position: 0 })));
        assert!(matches!(Permutation::parse_cycles("(0 1)(1 2)", 3), Err(CycleParseError::Repeated { point: 1, .. })));
        assert!(matches!(
            Permutation::parse_cycles("(0,1)", 3),
            Err(CycleParseError::UnexpectedChar { found: ',', .. })
        ));
        assert!(matches!(Permutation::parse_cycles("0 1", 3), Err(CycleParseError::UnexpectedChar { .. })));
        assert!(matches!(Permutation::parse_cycles("", 3), Err(CycleParseError::Empty)));
        assert!(matches!(Permutation::parse_cycles("(99999999999)", 3), Err(CycleParseError::Overflow { .. })));
    }

    #[test]
    fn from_images_checks_bijection() {
        assert!(Permutation::from_images(vec![1, 0, 2]).is_ok());
        assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
        assert!(Permutation::from_images(vec![3, 0, 1]).is_err());
    }
}
