//! Permutations of {1..n} stored as 0-based image arrays, with disjoint-cycle
//! parsing and printing, and the `.perm` group file format.

use std::fmt;

use crate::error::ParseError;

/// A permutation of `{0, .., degree-1}`; `img[i]` is the image of point `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    img: Vec<u16>,
}

impl Perm {
    /// Builds a permutation from an image array, checking bijectivity.
    pub fn from_images(img: Vec<u16>) -> Result<Perm, ParseError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &x in &img {
            if (x as usize) >= n || seen[x as usize] {
                return Err(ParseError::new(
                    0,
                    format!("image array {:?} is not a bijection", img),
                ));
            }
            seen[x as usize] = true;
        }
        Ok(Perm { img })
    }

    pub fn identity(degree: usize) -> Perm {
        Perm {
            img: (0..degree as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.img[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.img
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut out = Perm::identity(self.degree());
        self.compose_into(other, &mut out);
        out
    }

    /// Composition without allocating; `out` must have the same degree.
    pub fn compose_into(&self, other: &Perm, out: &mut Perm) {
        debug_assert_eq!(self.degree(), other.degree());
        for i in 0..self.img.len() {
            out.img[i] = self.img[other.img[i] as usize];
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u16; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[x as usize] = i as u16;
        }
        Perm { img }
    }

    /// Builds a permutation of the given degree from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm, ParseError> {
        let mut img: Vec<u16> = (0..degree as u16).collect();
        let mut moved = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(ParseError::new(
                        0,
                        format!("point {} outside 1..={}", p, degree),
                    ));
                }
                if moved[p - 1] {
                    return Err(ParseError::new(0, format!("point {} repeated", p)));
                }
                moved[p - 1] = true;
                let q = cycle[(k + 1) % cycle.len()];
                img[p - 1] = (q - 1) as u16;
            }
        }
        Ok(Perm { img })
    }

    /// Disjoint cycles on 1-based points, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses disjoint-cycle notation like `(1 2 3)(4 5)` against a known degree.
/// `()` denotes the identity. Commas and whitespace both separate points.
pub fn parse_cycles(degree: usize, input: &str) -> Result<Perm, ParseError> {
    let bytes = input.as_bytes();
    let mut i = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i] as char).is_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    if i == bytes.len() {
        return Err(ParseError::new(i, "empty permutation"));
    }
    while i < bytes.len() {
        skip_ws(&mut i);
        if i == bytes.len() {
            break;
        }
        if bytes[i] != b'(' {
            return Err(ParseError::new(i, "expected '('"));
        }
        i += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut i);
            if i < bytes.len() && bytes[i] == b',' {
                i += 1;
                skip_ws(&mut i);
            }
            if i == bytes.len() {
                return Err(ParseError::new(i, "unterminated cycle"));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i == start {
                return Err(ParseError::new(i, "expected a point number"));
            }
            let p: usize = input[start..i]
                .parse()
                .map_err(|_| ParseError::new(start, "point number too large"))?;
            cycle.push(p);
        }
        if cycle.len() == 1 {
            return Err(ParseError::new(i, "a cycle needs at least two points"));
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Perm::from_cycles(degree, &cycles).map_err(|e| ParseError::new(0, e.message))
}

/// Parses the `.perm` file format: line 1 is `degree n`; each following
/// non-comment line is one generator in disjoint-cycle notation; `#` starts
/// a comment.
pub fn parse_perm_file(contents: &str) -> Result<(usize, Vec<Perm>), ParseError> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    for raw_line in contents.lines() {
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match degree {
            None => {
                let rest = line
                    .strip_prefix("degree")
                    .ok_or_else(|| ParseError::new(0, "first line must be `degree n`"))?;
                let n: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| ParseError::new(0, "invalid degree"))?;
                if n == 0 {
                    return Err(ParseError::new(0, "degree must be positive"));
                }
                degree = Some(n);
            }
            Some(n) => gens.push(parse_cycles(n, line)?),
        }
    }
    let degree = degree.ok_or_else(|| ParseError::new(0, "missing `degree n` line"))?;
    if gens.is_empty() {
        return Err(ParseError::new(0, "no generators"));
    }
    Ok((degree, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = parse_cycles(5, "(1 2 3 4 5)").unwrap();
        let b = parse_cycles(5, "(1 2)").unwrap();
        // a(b(1)) = a(2) = 3
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(b.compose(&b).is_identity());
    }

    #[test]
    fn cycle_round_trip() {
        let p = parse_cycles(6, "(1 2 3)(4 5)").unwrap();
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        let q = parse_cycles(6, p.to_string().as_str()).unwrap();
        assert_eq!(p, q);
        assert_eq!(Perm::identity(4).to_string(), "()");
        assert_eq!(parse_cycles(4, "()").unwrap(), Perm::identity(4));
    }

    #[test]
    fn rejects_bad_cycles() {
        assert!(parse_cycles(3, "(1 4)").is_err());
        assert!(parse_cycles(3, "(1 1)").is_err());
        assert!(parse_cycles(3, "(1 2").is_err());
        assert!(parse_cycles(3, "1 2").is_err());
        assert!(parse_cycles(3, "(1)").is_err());
        assert!(parse_cycles(3, "").is_err());
    }

    #[test]
    fn perm_file() {
        let text = "# symmetric group on 4 points\ndegree 4\n(1 2)\n(1 2 3 4)  # coxeter pair\n";
        let (degree, gens) = parse_perm_file(text).unwrap();
        assert_eq!(degree, 4);
        assert_eq!(gens.len(), 2);
        assert!(parse_perm_file("degree 3\n").is_err());
        assert!(parse_perm_file("(1 2)\n").is_err());
    }
}
