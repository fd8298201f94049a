//! Braid words as signed generator sequences.

use super::LinkError;
use serde::{Deserialize, Serialize};

/// A word in the braid group B_n, as a sequence of signed generator indices:
/// letter `+i` is σ_i (strand i crosses over strand i+1), `-i` is σ_i⁻¹.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    strand_count: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strand_count: usize, letters: Vec<i64>) -> Result<Self, LinkError> {
        if strand_count == 0 {
            return Err(LinkError::IndexOutOfRange {
                index: 0,
                strands: 0,
            });
        }
        for &l in &letters {
            if l == 0 {
                return Err(LinkError::ZeroIndex);
            }
            if l.unsigned_abs() as usize >= strand_count {
                return Err(LinkError::IndexOutOfRange {
                    index: l,
                    strands: strand_count,
                });
            }
        }
        Ok(BraidWord {
            strand_count,
            letters,
        })
    }

    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// Permutation of strand positions induced by the word, bottom to top.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strand_count).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        perm
    }
}

/// Parse whitespace-separated signed generator tokens, e.g. `"1 1 1"` or
/// `"-2 1"`. The strand count is inferred as max|index| + 1; the empty word
/// parses as the 1-strand identity braid.
pub fn parse_braid(text: &str) -> Result<BraidWord, LinkError> {
    parse_braid_with_strands(text, None)
}

/// Like [`parse_braid`] but with an explicit strand count override.
pub fn parse_braid_with_strands(
    text: &str,
    strands: Option<usize>,
) -> Result<BraidWord, LinkError> {
    let mut letters = Vec::new();
    for tok in text.split_whitespace() {
        let l: i64 = tok
            .parse()
            .map_err(|_| LinkError::MalformedToken(tok.to_string()))?;
        if l == 0 {
            return Err(LinkError::ZeroIndex);
        }
        letters.push(l);
    }
    let inferred = letters
        .iter()
        .map(|l| l.unsigned_abs() as usize + 1)
        .max()
        .unwrap_or(1);
    let n = strands.unwrap_or(inferred);
    BraidWord::new(n, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_is_one_strand() {
        let b = parse_braid("").unwrap();
        assert_eq!(b.strand_count(), 1);
        assert!(b.letters().is_empty());
    }

    #[test]
    fn trefoil_word() {
        let b = parse_braid("1 1 1").unwrap();
        assert_eq!(b.strand_count(), 2);
        assert_eq!(b.letters(), &[1, 1, 1]);
    }

    #[test]
    fn zero_index_rejected() {
        assert_eq!(parse_braid("1 0 1"), Err(LinkError::ZeroIndex));
    }

    #[test]
    fn malformed_token_rejected() {
        assert!(matches!(
            parse_braid("1 x"),
            Err(LinkError::MalformedToken(_))
        ));
    }

    #[test]
    fn strand_override_checked() {
        assert!(parse_braid_with_strands("2", Some(2)).is_err());
        assert!(parse_braid_with_strands("1", Some(4)).is_ok());
    }

    #[test]
    fn permutation_of_trefoil_word_is_a_transposition() {
        let b = parse_braid("1 1 1").unwrap();
        assert_eq!(b.permutation(), vec![1, 0]);
    }
}
