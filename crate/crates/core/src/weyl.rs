//! Weyl-group elements as permutations of the root set.
//!
//! Products are read the way they are written: the element of the word
//! `s_1 s_2 ... s_k` sends a root `b` to `s_1(s_2(...s_k(b)))`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsys::{CoxeterMatrix, RootSystem, RootSystemSpec};

/// Default cap for [`WeylGroup::reduced_words`].
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

/// A word in the simple reflections, stored with 0-based letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses whitespace-separated 1-based node indices, e.g. `"2 1 3 2"`.
    pub fn parse_one_based(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(x) if x >= 1 => Ok(x - 1),
                _ => Err(Error::Parse { what: "word", input: s.to_string() }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn check(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l >= rank) {
            Some(&l) => Err(Error::InvalidLetter { letter: l + 1, rank }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for Word {
    /// Whitespace-separated 1-based letters; the empty word prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| (l + 1).to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse_one_based(s)
    }
}

/// A Weyl-group element, stored as its action on all root indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    perm: Vec<u16>,
    length: usize,
}

impl WeylElement {
    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Image of root index `b`.
    pub fn apply(&self, b: usize) -> usize {
        self.perm[b] as usize
    }

    pub fn length(&self) -> usize {
        self.length
    }
}

/// Weight coordinates in the fundamental-weight basis; coordinate `a` is the
/// pairing with the coroot of simple root `a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn fundamental(rank: usize, a: usize) -> Self {
        let mut v = vec![0; rank];
        v[a] = 1;
        WeightVector(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

/// The Weyl group of a root system. Non-reduced input is replaced by its
/// nondivisible core; [`WeylGroup::label`] keeps the original type.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    label: RootSystemSpec,
    rs: RootSystem,
    simple: Vec<Vec<u16>>,
    coxeter: CoxeterMatrix,
}

impl WeylGroup {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let label = rs.spec();
        let rs = rs.reduced()?;
        let simple = (0..rs.rank())
            .map(|a| (0..rs.num_roots()).map(|b| rs.reflect_root(a, b) as u16).collect())
            .collect();
        let coxeter = rs.coxeter_matrix();
        Ok(Self { label, rs, simple, coxeter })
    }

    pub fn label(&self) -> RootSystemSpec {
        self.label
    }

    /// The reduced root system the group acts on.
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn coxeter_matrix(&self) -> &CoxeterMatrix {
        &self.coxeter
    }

    fn length_of(&self, perm: &[u16]) -> usize {
        let npos = self.rs.num_positive();
        perm[..npos].iter().filter(|&&b| b as usize >= npos).count()
    }

    fn from_perm(&self, perm: Vec<u16>) -> WeylElement {
        let length = self.length_of(&perm);
        WeylElement { perm, length }
    }

    pub fn identity(&self) -> WeylElement {
        self.from_perm((0..self.rs.num_roots() as u16).collect())
    }

    pub fn simple_reflection(&self, a: usize) -> WeylElement {
        self.from_perm(self.simple[a].clone())
    }

    /// `u * v`: first `v`, then `u`.
    pub fn mul(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        self.from_perm(v.perm.iter().map(|&b| u.perm[b as usize]).collect())
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut inv = vec![0u16; w.perm.len()];
        for (b, &img) in w.perm.iter().enumerate() {
            inv[img as usize] = b as u16;
        }
        WeylElement { perm: inv, length: w.length }
    }

    /// `s_a * w`.
    pub fn left_mul_simple(&self, a: usize, w: &WeylElement) -> WeylElement {
        let s = &self.simple[a];
        self.from_perm(w.perm.iter().map(|&b| s[b as usize]).collect())
    }

    /// `w * s_a`.
    pub fn right_mul_simple(&self, w: &WeylElement, a: usize) -> WeylElement {
        self.from_perm(self.simple[a].iter().map(|&b| w.perm[b as usize]).collect())
    }

    pub fn element_of(&self, word: &Word) -> Result<WeylElement> {
        word.check(self.rank())?;
        Ok(word.0.iter().fold(self.identity(), |w, &a| self.right_mul_simple(&w, a)))
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        w.length
    }

    /// Whether `l(s_a w) < l(w)`, i.e. `w^-1(a)` is negative.
    pub fn is_left_descent(&self, w: &WeylElement, a: usize) -> bool {
        let target = a as u16;
        let pre = w.perm.iter().position(|&x| x == target).expect("permutation");
        !self.rs.is_positive(pre)
    }

    /// Whether `l(w s_a) < l(w)`, i.e. `w(a)` is negative.
    pub fn is_right_descent(&self, w: &WeylElement, a: usize) -> bool {
        !self.rs.is_positive(w.apply(a))
    }

    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.rank()).filter(|&a| self.is_left_descent(w, a)).collect()
    }

    /// Greedy ascent from the identity: left-multiply by any simple
    /// reflection that lengthens the element until none does.
    pub fn longest_element(&self) -> WeylElement {
        let mut w = self.identity();
        while let Some(a) = (0..self.rank()).find(|&a| !self.is_left_descent(&w, a)) {
            w = self.left_mul_simple(a, &w);
        }
        assert_eq!(2 * w.length, self.rs.num_roots(), "2 l(w0) = #roots");
        assert_eq!(self.mul(&w, &w), self.identity(), "w0 is an involution");
        w
    }

    pub fn is_minus_one(&self, w: &WeylElement) -> bool {
        (0..self.rank()).all(|a| w.apply(a) == self.rs.negate(a))
    }

    /// `sigma` with `w(a_i) = -a_{sigma(i)}`, when `w` sends every simple
    /// root to a negative simple root.
    pub fn negation_map(&self, w: &WeylElement) -> Option<Vec<usize>> {
        (0..self.rank())
            .map(|a| {
                let img = self.rs.negate(w.apply(a));
                (img < self.rank()).then_some(img)
            })
            .collect()
    }

    /// The lexicographically least reduced word of `w`.
    pub fn reduced_word(&self, w: &WeylElement) -> Word {
        let mut letters = Vec::with_capacity(w.length);
        let mut cur = w.clone();
        while cur.length > 0 {
            let a = (0..self.rank()).find(|&a| self.is_left_descent(&cur, a)).expect("descent");
            letters.push(a);
            cur = self.left_mul_simple(a, &cur);
        }
        Word(letters)
    }

    /// Every reduced word of `w`, sorted, by recursion on left descents.
    /// Also asserts that the braid-move graph on the result is connected.
    pub fn reduced_words(&self, w: &WeylElement, cap: usize) -> Result<Vec<Word>> {
        let mut memo: HashMap<Vec<u16>, Vec<Vec<usize>>> = HashMap::new();
        let mut words: Vec<Word> =
            self.reduced_words_rec(w, cap, &mut memo)?.into_iter().map(Word).collect();
        words.sort();
        assert!(self.braid_graph_connected(&words), "reduced words are braid-connected");
        Ok(words)
    }

    fn reduced_words_rec(
        &self,
        w: &WeylElement,
        cap: usize,
        memo: &mut HashMap<Vec<u16>, Vec<Vec<usize>>>,
    ) -> Result<Vec<Vec<usize>>> {
        if w.length == 0 {
            return Ok(vec![Vec::new()]);
        }
        if let Some(hit) = memo.get(&w.perm) {
            return Ok(hit.clone());
        }
        let mut out = Vec::new();
        for a in self.left_descents(w) {
            let rest = self.left_mul_simple(a, w);
            for tail in self.reduced_words_rec(&rest, cap, memo)? {
                if out.len() >= cap {
                    return Err(Error::EnumerationCapExceeded { cap, partial: out.len() });
                }
                let mut word = Vec::with_capacity(w.length);
                word.push(a);
                word.extend(tail);
                out.push(word);
            }
        }
        memo.insert(w.perm.clone(), out.clone());
        Ok(out)
    }

    /// Words reachable from `word` by one braid move.
    pub fn braid_neighbors(&self, word: &Word) -> Vec<Word> {
        let letters = &word.0;
        let mut out = Vec::new();
        for i in 0..letters.len() {
            for j in i + 1..letters.len() {
                let (a, b) = (letters[i], letters[i + 1]);
                if a == b {
                    break;
                }
                let m = self.coxeter.get(a, b) as usize;
                if j + 1 - i != m {
                    continue;
                }
                let alternating = (i..=j).all(|k| letters[k] == if (k - i) % 2 == 0 { a } else { b });
                if alternating {
                    let mut next = letters.clone();
                    for k in i..=j {
                        next[k] = if (k - i) % 2 == 0 { b } else { a };
                    }
                    out.push(Word(next));
                }
            }
        }
        out
    }

    pub fn braid_graph_connected(&self, words: &[Word]) -> bool {
        let Some(first) = words.first() else { return true };
        let all: HashSet<&Word> = words.iter().collect();
        let mut seen: HashSet<Word> = HashSet::from([first.clone()]);
        let mut queue = VecDeque::from([first.clone()]);
        while let Some(w) = queue.pop_front() {
            for n in self.braid_neighbors(&w) {
                if all.contains(&n) && seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == all.len()
    }

    /// `r_a(v) = v - v[a] * (row a of the Cartan matrix)`.
    pub fn reflect_weight(&self, a: usize, v: &WeightVector) -> WeightVector {
        let c = v.0[a];
        WeightVector(v.0.iter().zip(&self.rs.cartan()[a]).map(|(x, y)| x - c * y).collect())
    }

    pub fn act_word_on_weight(&self, word: &Word, v: &WeightVector) -> WeightVector {
        word.0.iter().rev().fold(v.clone(), |acc, &a| self.reflect_weight(a, &acc))
    }

    pub fn act_on_weight(&self, w: &WeylElement, v: &WeightVector) -> WeightVector {
        self.act_word_on_weight(&self.reduced_word(w), v)
    }

    /// All elements, breadth-first from the identity.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        let id = self.identity();
        seen.insert(id.perm.clone());
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for a in 0..self.rank() {
                let x = self.right_mul_simple(&w, a);
                if seen.insert(x.perm.clone()) {
                    if out.len() >= cap {
                        return Err(Error::EnumerationCapExceeded { cap, partial: out.len() });
                    }
                    out.push(x);
                }
            }
        }
        Ok(out)
    }

    /// Order of `w` as a permutation.
    pub fn order(&self, w: &WeylElement) -> usize {
        let id = self.identity();
        let mut cur = w.clone();
        let mut k = 1;
        while cur != id {
            cur = self.mul(&cur, w);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn group(f: Family, r: usize) -> WeylGroup {
        WeylGroup::new(&RootSystem::of(f, r).unwrap()).unwrap()
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn word_parsing() {
        assert_eq!(word("2 1 3 2").0, vec![1, 0, 2, 1]);
        assert_eq!(word("").0, Vec::<usize>::new());
        assert_eq!(word("2 1 3 2").to_string(), "2 1 3 2");
        assert!("0 1".parse::<Word>().is_err());
        assert!("x".parse::<Word>().is_err());
        let a2 = group(Family::A, 2);
        assert_eq!(
            a2.element_of(&word("3")),
            Err(Error::InvalidLetter { letter: 3, rank: 2 })
        );
    }

    #[test]
    fn element_lengths() {
        let a3 = group(Family::A, 3);
        assert_eq!(a3.element_of(&Word::default()).unwrap().length(), 0);
        assert_eq!(a3.element_of(&word("2")).unwrap().length(), 1);
        assert_eq!(a3.element_of(&word("2 1 3 2")).unwrap().length(), 4);
        assert_eq!(a3.element_of(&word("1 1")).unwrap(), a3.identity());
    }

    #[test]
    fn longest_elements() {
        assert_eq!(group(Family::A, 3).longest_element().length(), 6);
        assert_eq!(group(Family::G, 2).longest_element().length(), 6);
        let a1 = group(Family::A, 1);
        assert_eq!(a1.longest_element(), a1.simple_reflection(0));
        let b2 = group(Family::B, 2);
        let w0 = b2.longest_element();
        assert_eq!(w0.length(), 4);
        assert!(b2.is_minus_one(&w0));
        let a2 = group(Family::A, 2);
        let w0 = a2.longest_element();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.apply(0), a2.root_system().negate(1));
        assert!(!a2.is_minus_one(&w0));
        assert!(!a2.is_minus_one(&a2.identity()));
    }

    #[test]
    fn reduced_word_sets() {
        let a3 = group(Family::A, 3);
        assert_eq!(a3.reduced_words(&a3.identity(), 10).unwrap(), vec![Word::default()]);
        let w = a3.element_of(&word("2 1 3 2")).unwrap();
        assert_eq!(a3.reduced_words(&w, 10).unwrap(), vec![word("2 1 3 2"), word("2 3 1 2")]);
        let a2 = group(Family::A, 2);
        let w0 = a2.longest_element();
        assert_eq!(a2.reduced_words(&w0, 10).unwrap(), vec![word("1 2 1"), word("2 1 2")]);
    }

    #[test]
    fn reduced_word_cap() {
        let a3 = group(Family::A, 3);
        let w0 = a3.longest_element();
        // w0 of A3 has 16 reduced words.
        assert_eq!(a3.reduced_words(&w0, 100).unwrap().len(), 16);
        assert!(matches!(
            a3.reduced_words(&w0, 5),
            Err(Error::EnumerationCapExceeded { cap: 5, .. })
        ));
    }

    #[test]
    fn weight_action() {
        let a3 = group(Family::A, 3);
        let w1 = WeightVector::fundamental(3, 0);
        assert_eq!(a3.reflect_weight(0, &w1).0, vec![-1, 1, 0]);
        assert_eq!(a3.reflect_weight(1, &w1), w1);
        let w0 = a3.longest_element();
        assert_eq!(a3.act_on_weight(&w0, &w1).0, vec![0, 0, -1]);
    }

    #[test]
    fn bc_routes_through_core() {
        let bc = group(Family::BC, 3);
        assert_eq!(bc.label().family, Family::BC);
        assert_eq!(bc.root_system().num_roots(), 18);
        assert_eq!(bc.longest_element().length(), 9);
    }
}
