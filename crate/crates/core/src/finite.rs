//! Exhaustive decisions over finite rings: unimodular rows, elementary
//! orbits, completability and skew completability.
//!
//! Rows are handled as index vectors into the ring's element enumeration,
//! with addition and multiplication tables, and converted back to
//! [`Elem`]s at the boundary. Rows are ordered lexicographically by
//! those indices, which is the order of every returned list.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::alternating::AlternatingMatrix;
use crate::completion::CertifiedRow;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Elem, Ring, RingKind};
use crate::witt::check_search_bounds;
use crate::word::ElementaryWord;

type Row = Vec<usize>;

/// Operation tables of a finite ring.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    ring: Ring,
    elements: Vec<Elem>,
    index: HashMap<Elem, usize>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    neg: Vec<usize>,
    unit: Vec<bool>,
}

impl FiniteRing {
    pub fn new(ring: &Ring) -> Result<Self> {
        let elements = ring.enumerate_elements()?;
        let index: HashMap<Elem, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let table = |f: &dyn Fn(&Elem, &Elem) -> Elem| -> Vec<Vec<usize>> {
            elements
                .iter()
                .map(|a| elements.iter().map(|b| index[&f(a, b)]).collect())
                .collect()
        };
        let add = table(&|a, b| a + b);
        let mul = table(&|a, b| a * b);
        let neg = elements.iter().map(|a| index[&-a]).collect();
        let one = index[&ring.one()];
        let unit = mul.iter().map(|row| row.contains(&one)).collect();
        Ok(FiniteRing {
            ring: ring.clone(),
            elements,
            index,
            add,
            mul,
            neg,
            unit,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    fn zero(&self) -> usize {
        self.index[&self.ring.zero()]
    }

    fn one(&self) -> usize {
        self.index[&self.ring.one()]
    }

    fn to_row(&self, v: &[Elem]) -> Result<Row> {
        v.iter()
            .map(|e| {
                self.index
                    .get(e)
                    .copied()
                    .ok_or_else(|| Error::RingMismatch(e.ring().spec(), self.ring.spec()))
            })
            .collect()
    }

    fn to_elems(&self, r: &[usize]) -> Vec<Elem> {
        r.iter().map(|&i| self.elements[i].clone()).collect()
    }

    /// A witness for `v`, by closing the ideal `(v_1, …, v_k)` one generator
    /// at a time and remembering how each element was reached.
    fn witness(&self, v: &[usize]) -> Option<Row> {
        let zero = self.zero();
        let mut reached: HashMap<usize, Row> = HashMap::new();
        reached.insert(zero, vec![zero; v.len()]);
        for (k, &g) in v.iter().enumerate() {
            let mut next = reached.clone();
            for (&a, coeffs) in &reached {
                for r in 0..self.size() {
                    let b = self.add[a][self.mul[r][g]];
                    next.entry(b).or_insert_with(|| {
                        let mut c = coeffs.clone();
                        c[k] = r;
                        c
                    });
                }
            }
            reached = next;
        }
        reached.remove(&self.one())
    }

    fn rows(&self, n: usize) -> impl Iterator<Item = Row> + '_ {
        let q = self.size();
        let total = q.pow(n as u32);
        (0..total).map(move |mut idx| {
            let mut r = vec![0; n];
            for slot in r.iter_mut().rev() {
                *slot = idx % q;
                idx /= q;
            }
            r
        })
    }

    fn is_unimodular(&self, v: &[usize]) -> bool {
        if let RingKind::Modular(m) = self.ring.kind() {
            // indices are residues; unimodular iff gcd(v, m) = 1
            return v.iter().fold(*m, |acc, &x| num_integer::gcd(acc, x as u64)) == 1;
        }
        self.witness(v).is_some()
    }

    /// `row · E_ij(λ)`: entry `j` gains `λ` times entry `i` (0-based).
    fn act(&self, row: &[usize], i: usize, j: usize, lambda: usize) -> Row {
        let mut out = row.to_vec();
        out[j] = self.add[row[j]][self.mul[lambda][row[i]]];
        out
    }

    fn generators(&self, n: usize) -> Vec<(usize, usize, usize)> {
        let zero = self.zero();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    for lambda in (0..self.size()).filter(|&l| l != zero) {
                        out.push((i, j, lambda));
                    }
                }
            }
        }
        out
    }

    /// BFS from `start`; each reached row maps to its parent edge.
    fn bfs(
        &self,
        start: &[usize],
        stop: Option<&[usize]>,
    ) -> HashMap<Row, Option<(Row, (usize, usize, usize))>> {
        let n = start.len();
        let gens = self.generators(n);
        let mut parent = HashMap::new();
        parent.insert(start.to_vec(), None);
        let mut queue = VecDeque::from([start.to_vec()]);
        while let Some(row) = queue.pop_front() {
            if stop == Some(row.as_slice()) {
                break;
            }
            for &(i, j, l) in &gens {
                let next = self.act(&row, i, j, l);
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((row.clone(), (i, j, l))));
                    queue.push_back(next);
                }
            }
        }
        parent
    }

    fn word_to(
        &self,
        parent: &HashMap<Row, Option<(Row, (usize, usize, usize))>>,
        target: &[usize],
    ) -> ElementaryWord {
        let mut letters = Vec::new();
        let mut cur = target.to_vec();
        while let Some(Some((prev, letter))) = parent.get(&cur) {
            letters.push(*letter);
            cur = prev.clone();
        }
        letters.reverse();
        let mut w = ElementaryWord::empty(&self.ring, target.len());
        for (i, j, l) in letters {
            w.push(i + 1, j + 1, self.elements[l].clone())
                .expect("valid letter");
        }
        w
    }

    fn pf_unit(&self, m: &AlternatingMatrix) -> Result<bool> {
        let pf = m.pfaffian()?;
        Ok(self.unit[self.index[&pf]])
    }
}

/// All rows of length `n` with a witness, in lexicographic index order.
pub fn enumerate_um(ring: &Ring, n: usize) -> Result<Vec<Vec<Elem>>> {
    let f = FiniteRing::new(ring)?;
    check_search_bounds(ring, n)?;
    if n == 0 {
        return Err(Error::Dimension("rows need length at least 1".into()));
    }
    Ok(f.rows(n)
        .filter(|r| f.is_unimodular(r))
        .map(|r| f.to_elems(&r))
        .collect())
}

/// A witness `w` with `⟨v, w⟩ = 1`, if one exists.
pub fn find_witness(ring: &Ring, v: &[Elem]) -> Result<Option<Vec<Elem>>> {
    let f = FiniteRing::new(ring)?;
    let row = f.to_row(v)?;
    Ok(f.witness(&row).map(|w| f.to_elems(&w)))
}

/// One orbit with a spanning-tree word per member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: Vec<Elem>,
    /// Members in row order, each with a word `w` such that
    /// `representative · E(w) = member`.
    pub members: Vec<(Vec<Elem>, ElementaryWord)>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn word_for(&self, row: &[Elem]) -> Option<&ElementaryWord> {
        self.members.iter().find(|(r, _)| r == row).map(|(_, w)| w)
    }
}

/// The orbit of `start` under `E_n(R)` acting on the right.
pub fn orbit_bfs(ring: &Ring, start: &[Elem]) -> Result<Orbit> {
    let f = FiniteRing::new(ring)?;
    check_search_bounds(ring, start.len())?;
    let s = f.to_row(start)?;
    if !f.is_unimodular(&s) {
        return Err(Error::NoWitness);
    }
    Ok(orbit_from(&f, &s))
}

fn orbit_from(f: &FiniteRing, s: &[usize]) -> Orbit {
    let parent = f.bfs(s, None);
    let mut rows: Vec<&Row> = parent.keys().collect();
    rows.sort();
    Orbit {
        representative: f.to_elems(s),
        members: rows
            .into_iter()
            .map(|r| (f.to_elems(r), f.word_to(&parent, r)))
            .collect(),
    }
}

/// The partition of `Um_n(R)` into orbits, each represented by its least
/// row; orbits are listed in order of their representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitTable {
    pub ring: Ring,
    pub n: usize,
    pub orbits: Vec<Orbit>,
}

impl OrbitTable {
    pub fn build(ring: &Ring, n: usize) -> Result<Self> {
        let f = FiniteRing::new(ring)?;
        check_search_bounds(ring, n)?;
        let mut assigned: HashMap<Row, usize> = HashMap::new();
        let mut orbits = Vec::new();
        for r in f.rows(n).filter(|r| f.is_unimodular(r)) {
            if assigned.contains_key(&r) {
                continue;
            }
            let parent = f.bfs(&r, None);
            for m in parent.keys() {
                assigned.insert(m.clone(), orbits.len());
            }
            let mut rows: Vec<&Row> = parent.keys().collect();
            rows.sort();
            orbits.push(Orbit {
                representative: f.to_elems(&r),
                members: rows
                    .into_iter()
                    .map(|m| (f.to_elems(m), f.word_to(&parent, m)))
                    .collect(),
            });
        }
        Ok(OrbitTable {
            ring: ring.clone(),
            n,
            orbits,
        })
    }

    pub fn orbit_of(&self, row: &[Elem]) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.word_for(row).is_some())
    }

    /// A word carrying `u` to `v` read off the spanning trees:
    /// `u · E(w_u)⁻¹ = rep` and `rep · E(w_v) = v`.
    pub fn connect(&self, u: &[Elem], v: &[Elem]) -> Option<ElementaryWord> {
        let o = self.orbit_of(u)?;
        let wv = o.word_for(v)?;
        let wu = o.word_for(u)?;
        Some(wu.inverse().concat(wv).expect("same size"))
    }

    pub fn export(&self, with_members: bool) -> OrbitExport {
        let strings = |r: &[Elem]| r.iter().map(ToString::to_string).collect::<Vec<_>>();
        OrbitExport {
            ring: self.ring.spec(),
            n: self.n,
            orbit_count: self.orbits.len(),
            sizes: self.orbits.iter().map(Orbit::len).collect(),
            representatives: self
                .orbits
                .iter()
                .map(|o| strings(&o.representative))
                .collect(),
            members: with_members.then(|| {
                self.orbits
                    .iter()
                    .map(|o| {
                        o.members
                            .iter()
                            .map(|(r, w)| MemberExport {
                                row: strings(r),
                                word: crate::io::word_letters(w),
                            })
                            .collect()
                    })
                    .collect()
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberExport {
    pub row: Vec<String>,
    pub word: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitExport {
    pub ring: String,
    pub n: usize,
    pub orbit_count: usize,
    pub sizes: Vec<usize>,
    pub representatives: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<Vec<MemberExport>>>,
}

/// A shortest word carrying `u` to `v`, or `None` when they lie in
/// different orbits.
pub fn same_orbit(ring: &Ring, u: &[Elem], v: &[Elem]) -> Result<Option<ElementaryWord>> {
    let f = FiniteRing::new(ring)?;
    if u.len() != v.len() {
        return Err(Error::Dimension("rows of different lengths".into()));
    }
    check_search_bounds(ring, u.len())?;
    let (a, b) = (f.to_row(u)?, f.to_row(v)?);
    if !f.is_unimodular(&a) || !f.is_unimodular(&b) {
        return Err(Error::NoWitness);
    }
    let parent = f.bfs(&a, Some(&b));
    Ok(parent.contains_key(&b).then(|| f.word_to(&parent, &b)))
}

/// A word carrying `e_1` to `row`, or `None` when there is none.
pub fn completable_bfs(ring: &Ring, row: &[Elem]) -> Result<Option<ElementaryWord>> {
    if row.len() < 2 {
        return Err(Error::Dimension(
            "completability needs length at least 2".into(),
        ));
    }
    let mut e1 = vec![ring.zero(); row.len()];
    e1[0] = ring.one();
    match same_orbit(ring, &e1, row) {
        Err(Error::NoWitness) => Ok(None),
        other => other,
    }
}

/// Every alternating `V` of size `len + 1` with first row `(0, v)` and a
/// unit Pfaffian, over all values of the free strictly upper entries in
/// lexicographic order.
pub fn skew_completions(ring: &Ring, row: &CertifiedRow) -> Result<Vec<AlternatingMatrix>> {
    skew_search(ring, row, false)
}

/// The first skew completion in search order, or a definitive `None`.
pub fn skew_completable_search(
    ring: &Ring,
    row: &CertifiedRow,
) -> Result<Option<AlternatingMatrix>> {
    Ok(skew_search(ring, row, true)?.into_iter().next())
}

fn skew_search(
    ring: &Ring,
    row: &CertifiedRow,
    first_only: bool,
) -> Result<Vec<AlternatingMatrix>> {
    let f = FiniteRing::new(ring)?;
    let size = row.len() + 1;
    if row.len() % 2 == 0 {
        return Err(Error::Dimension(
            "skew completion needs odd row length".into(),
        ));
    }
    check_search_bounds(ring, size)?;
    let free: Vec<(usize, usize)> = (1..size)
        .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
        .collect();
    let v = f.to_row(row.v())?;
    let mut out = Vec::new();
    for values in f.rows(free.len()) {
        let m = skew_matrix(&f, &v, &free, &values);
        if f.pf_unit(&m)? {
            out.push(m);
            if first_only {
                break;
            }
        }
    }
    Ok(out)
}

fn skew_matrix(
    f: &FiniteRing,
    v: &[usize],
    free: &[(usize, usize)],
    values: &[usize],
) -> AlternatingMatrix {
    let size = v.len() + 1;
    let mut m = Matrix::zeros(&f.ring, size, size);
    for (k, &x) in v.iter().enumerate() {
        m.set(0, k + 1, f.elements[x].clone());
        m.set(k + 1, 0, f.elements[f.neg[x]].clone());
    }
    for (&(i, j), &x) in free.iter().zip(values) {
        m.set(i, j, f.elements[x].clone());
        m.set(j, i, f.elements[f.neg[x]].clone());
    }
    AlternatingMatrix::new(m).expect("alternating by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completion::certify_row;
    use crate::ring::parse_ring;
    use crate::word::{apply_word, Side};

    fn z(m: u64) -> Ring {
        Ring::modular(m).unwrap()
    }

    fn row(ring: &Ring, xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| ring.from_i64(x)).collect()
    }

    #[test]
    fn unimodular_rows() {
        let z6 = z(6);
        assert_eq!(
            enumerate_um(&z6, 1).unwrap(),
            vec![row(&z6, &[1]), row(&z6, &[5])]
        );
        assert_eq!(enumerate_um(&z(4), 2).unwrap().len(), 12);
        assert_eq!(enumerate_um(&z(3), 2).unwrap().len(), 8);
        let dual = parse_ring("Zmod:2[x]/(x^2)").unwrap();
        // units are 1 and 1 + x; a pair is unimodular iff some entry is a unit
        assert_eq!(enumerate_um(&dual, 2).unwrap().len(), 16 - 4);
        assert!(matches!(
            enumerate_um(&Ring::rationals(), 2),
            Err(Error::InfiniteRing(_))
        ));
        assert!(matches!(enumerate_um(&z(9), 2), Err(Error::SearchBound(_))));
    }

    #[test]
    fn witnesses_are_valid() {
        let dual = parse_ring("Zmod:2[x]/(x^2)").unwrap();
        for v in enumerate_um(&dual, 3).unwrap() {
            let w = find_witness(&dual, &v).unwrap().unwrap();
            assert!(certify_row(v, w).is_ok());
        }
    }

    #[test]
    fn orbits() {
        let z2 = z(2);
        let o = orbit_bfs(&z2, &row(&z2, &[1, 0])).unwrap();
        assert_eq!(o.len(), 3);
        let z3 = z(3);
        assert_eq!(orbit_bfs(&z3, &row(&z3, &[1, 0])).unwrap().len(), 8);
        let z5 = z(5);
        assert_eq!(orbit_bfs(&z5, &row(&z5, &[2])).unwrap().len(), 1);
        for (member, w) in &o.members {
            let start = Matrix::row_vector(&z2, &o.representative).unwrap();
            assert_eq!(
                apply_word(&start, w, Side::Right, false).unwrap().row(1),
                *member
            );
        }
    }

    #[test]
    fn table_partitions() {
        let z6 = z(6);
        let t = OrbitTable::build(&z6, 2).unwrap();
        assert_eq!(t.orbits.len(), 1);
        assert_eq!(t.orbits[0].len(), enumerate_um(&z6, 2).unwrap().len());
        let t1 = OrbitTable::build(&z(5), 1).unwrap();
        assert_eq!(t1.orbits.len(), 4);
    }

    #[test]
    fn orbit_connections() {
        let z4 = z(4);
        let w = same_orbit(&z4, &row(&z4, &[1, 0, 0]), &row(&z4, &[1, 2, 0]))
            .unwrap()
            .unwrap();
        assert_eq!(w.len(), 1);
        assert!(same_orbit(&z4, &row(&z4, &[1, 0]), &row(&z4, &[1, 0]))
            .unwrap()
            .unwrap()
            .is_empty());
        let z5 = z(5);
        assert!(same_orbit(&z5, &row(&z5, &[1]), &row(&z5, &[2]))
            .unwrap()
            .is_none());
        let z6 = z(6);
        assert!(completable_bfs(&z6, &row(&z6, &[1, 2, 3]))
            .unwrap()
            .is_some());
    }

    #[test]
    fn skew_search() {
        let z2 = z(2);
        let r = certify_row(row(&z2, &[1, 0, 0]), row(&z2, &[1, 0, 0])).unwrap();
        let v = skew_completable_search(&z2, &r).unwrap().unwrap();
        assert_eq!(v.first_row(), row(&z2, &[0, 1, 0, 0]));
        let z4 = z(4);
        let r = certify_row(row(&z4, &[1, 0, 0]), row(&z4, &[1, 0, 0])).unwrap();
        for m in skew_completions(&z4, &r).unwrap() {
            let pf = m.pfaffian().unwrap();
            assert!(pf == z4.one() || pf == z4.from_i64(3));
        }
    }
}
