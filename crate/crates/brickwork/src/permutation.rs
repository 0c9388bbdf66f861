//! Permutations of [n] with the canonical cycle decomposition.
//!
//! Canonical form: every cycle is written with its largest element
//! first, and cycles are sorted by increasing first element. The word
//! 947213865 therefore decomposes as (4,2)(8,6,3,7)(9,5,1).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A permutation in one-line notation: `word[i]` is the image of i+1,
/// with values in 1..=n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn from_word(word: impl Into<Vec<u32>>) -> Result<Self> {
        let word = word.into();
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v == 0 || v as usize > n || seen[v as usize - 1] {
                return Err(Error::InvalidInput(format!(
                    "word {word:?} is not a bijection on 1..={n}"
                )));
            }
            seen[v as usize - 1] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: u32) -> Self {
        Self { word: (1..=n).collect() }
    }

    pub fn n(&self) -> u32 {
        self.word.len() as u32
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Image of i under the permutation; i must lie in 1..=n.
    pub fn apply(&self, i: u32) -> u32 {
        self.word[i as usize - 1]
    }

    /// Cycles in canonical form: each led by its maximum, sorted by
    /// increasing leader. Fixed points appear as singleton cycles.
    pub fn canonical_cycles(&self) -> Vec<Vec<u32>> {
        let n = self.word.len();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        for start in 1..=n as u32 {
            if visited[start as usize - 1] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            loop {
                visited[x as usize - 1] = true;
                cyc.push(x);
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            // Rotate so the maximum leads.
            let max_pos = cyc.iter().enumerate().max_by_key(|&(_, v)| v).unwrap().0;
            cyc.rotate_left(max_pos);
            cycles.push(cyc);
        }
        cycles.sort_by_key(|c| c[0]);
        cycles
    }

    /// Cycle type: the weakly decreasing list of cycle lengths.
    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(
            self.canonical_cycles().iter().map(|c| c.len() as u32).collect::<Vec<_>>(),
        )
    }

    /// Cycle counts (c_1, ..., c_n): c_i = number of i-cycles.
    pub fn cycle_counts(&self) -> Vec<u32> {
        let n = self.word.len();
        let mut c = vec![0u32; n];
        for cyc in self.canonical_cycles() {
            c[cyc.len() - 1] += 1;
        }
        c
    }

    /// Rebuilds a permutation from disjoint cycles on 1..=n. Elements
    /// not mentioned are fixed points.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut word: Vec<u32> = (1..=n).collect();
        let mut seen = vec![false; n as usize];
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::InvalidInput(format!("label {x} out of range 1..={n}")));
                }
                if seen[x as usize - 1] {
                    return Err(Error::InvalidInput(format!("label {x} repeated across cycles")));
                }
                seen[x as usize - 1] = true;
                let next = cyc[(k + 1) % cyc.len()];
                word[x as usize - 1] = next;
            }
        }
        Ok(Self { word })
    }

    /// A representative permutation with the given cycle type: cycles
    /// fill 1..=n consecutively, largest part first.
    pub fn from_cycle_type(lambda: &Partition) -> Self {
        let n = lambda.weight();
        let mut word: Vec<u32> = (1..=n).collect();
        let mut next = 1u32;
        for &p in lambda.parts() {
            // Cycle (next, next+1, ..., next+p-1).
            for k in 0..p {
                let from = next + k;
                let to = if k + 1 == p { next } else { next + k + 1 };
                word[from as usize - 1] = to;
            }
            next += p;
        }
        Self { word }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cyc in self.canonical_cycles() {
            let strs: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", strs.join(","))?;
        }
        Ok(())
    }
}

/// Accepts cycle notation "(3,1)(4)(5,2)" (n inferred from the largest
/// label; unmentioned labels are fixed points), a digit word "947213865"
/// for n <= 9, or a comma-separated word "9,4,7,2,1,3,8,6,5".
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty permutation".into()));
        }
        if s.starts_with('(') {
            return parse_cycles(s);
        }
        let word: Vec<u32> = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    tok.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad entry {tok:?} in word {s:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| Error::Parse(format!("bad digit {ch:?} in word {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::from_word(word)
    }
}

fn parse_cycles(s: &str) -> Result<Permutation> {
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in {rest:?}")))?;
        if !rest[..open].trim().is_empty() {
            return Err(Error::Parse(format!("unexpected text {:?}", &rest[..open])));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
        let inner = &rest[open + 1..close];
        let cyc: Vec<u32> = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad label {tok:?} in cycle {inner:?}")))
            })
            .collect::<Result<_>>()?;
        if cyc.is_empty() {
            return Err(Error::Parse("empty cycle".into()));
        }
        cycles.push(cyc);
        rest = &rest[close + 1..];
    }
    let n = cycles.iter().flatten().copied().max().unwrap_or(0);
    Permutation::from_cycles(n, &cycles)
}
