//! Permutations of the four vertex labels of a tetrahedron.

use std::fmt;
use std::str::FromStr;

/// A permutation of `{0,1,2,3}` in one-line form: `p.apply(i) == p.0[i]`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm4(pub [u8; 4]);

/// All 24 permutations in lexicographic order of their one-line form.
pub const ALL_PERMS: [Perm4; 24] = {
    let mut out = [Perm4([0, 1, 2, 3]); 24];
    let mut n = 0;
    let mut a = 0;
    while a < 4 {
        let mut b = 0;
        while b < 4 {
            let mut c = 0;
            while c < 4 {
                if a != b && b != c && a != c {
                    let d = 6 - a - b - c;
                    out[n] = Perm4([a, b, c, d]);
                    n += 1;
                }
                c += 1;
            }
            b += 1;
        }
        a += 1;
    }
    out
};

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    #[inline]
    pub fn apply(self, i: u8) -> u8 {
        self.0[i as usize]
    }

    pub fn inverse(self) -> Perm4 {
        let mut out = [0u8; 4];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Perm4(out)
    }

    /// `self.compose(other)` is the map `i -> self(other(i))`.
    pub fn compose(self, other: Perm4) -> Perm4 {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[i] = self.0[other.0[i] as usize];
        }
        Perm4(out)
    }

    /// +1 for even permutations, -1 for odd ones.
    pub fn sign(self) -> i8 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Position of this permutation in [`ALL_PERMS`].
    pub fn index(self) -> u8 {
        ALL_PERMS.iter().position(|&p| p == self).unwrap() as u8
    }

    pub fn from_index(i: u8) -> Option<Perm4> {
        ALL_PERMS.get(i as usize).copied()
    }

    /// Builds a permutation from a partial assignment `pairs` of (source, target), completing the
    /// single missing value when exactly three pairs are given.
    pub fn from_pairs(pairs: &[(u8, u8)]) -> Option<Perm4> {
        let mut out = [u8::MAX; 4];
        let mut used = [false; 4];
        for &(s, t) in pairs {
            if s > 3 || t > 3 || out[s as usize] != u8::MAX || used[t as usize] {
                return None;
            }
            out[s as usize] = t;
            used[t as usize] = true;
        }
        let free_src: Vec<usize> = (0..4).filter(|&i| out[i] == u8::MAX).collect();
        let free_dst: Vec<u8> = (0..4u8).filter(|&i| !used[i as usize]).collect();
        match (free_src.as_slice(), free_dst.as_slice()) {
            ([], []) => Some(Perm4(out)),
            ([s], [t]) => {
                out[*s] = *t;
                Some(Perm4(out))
            }
            _ => None,
        }
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}{}", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl FromStr for Perm4 {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits: Vec<u8> = s
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or(()))
            .collect::<Result<_, _>>()?;
        if digits.len() != 4 {
            return Err(());
        }
        let mut seen = [false; 4];
        for &d in &digits {
            if d > 3 || seen[d as usize] {
                return Err(());
            }
            seen[d as usize] = true;
        }
        Ok(Perm4([digits[0], digits[1], digits[2], digits[3]]))
    }
}

/// The six edges of a tetrahedron as vertex pairs; edge `k` is opposite edge `5 - k`.
pub const EDGE_VERTICES: [[u8; 2]; 6] = [[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]];

/// Index into [`EDGE_VERTICES`] of the edge joining `a` and `b`.
pub fn edge_index(a: u8, b: u8) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("not an edge: {a}{b}"),
    }
}

/// The three vertices of face `i` in increasing order.
pub fn face_vertices(i: u8) -> [u8; 3] {
    let mut out = [0u8; 3];
    let mut n = 0;
    for v in 0..4 {
        if v != i {
            out[n] = v;
            n += 1;
        }
    }
    out
}

/// Counter-clockwise vertex order of face `i` of a positively oriented tetrahedron, as seen
/// from outside the tetrahedron.
///
/// Convention: seen from outside face 3, the vertices 0, 1, 2 run counter-clockwise. The other
/// faces follow from the induced boundary orientation.
pub const CCW_OUTSIDE: [[u8; 3]; 4] = [[1, 3, 2], [0, 2, 3], [0, 3, 1], [0, 1, 2]];
