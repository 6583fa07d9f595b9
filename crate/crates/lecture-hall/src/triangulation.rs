//! The flag triangulation induced by pairwise-minimal multisets.
//!
//! Faces are the cliques of the compatibility graph whose vertices are the
//! degree-1 alcove points and whose edges are the minimal pairs; flagness is
//! structural. The module extracts the maximal cliques, computes f- and
//! h-vectors, verifies unimodularity by exact integer determinants in the
//! original simplex coordinates, and certifies covering by matching the
//! face-count identity
//!
//! ```text
//!   L(k) = sum over nonempty faces F of C(k - 1, dim F)
//! ```
//!
//! against independent lattice-point enumeration (for a unimodular
//! triangulation the k-th dilate has exactly that many lattice points, so
//! agreement for several k plus the volume count certifies covering at this
//! scale). Regularity is not re-verified computationally: it is inherent in
//! the construction of the basis and is reported as such.

use std::collections::BTreeSet;

use crate::alcove::{enumerate_multisets, from_alcove, AlcovePoint};
use crate::arith;
use crate::ehrhart::{ehrhart_counts, IntPolynomial};
use crate::error::{Error, Result};
use crate::groebner;
use crate::poset::LabeledPoset;
use crate::seq::SSequence;

/// Vertices of the compatibility graph are degree-1 points (lex decreasing);
/// `adjacent[i][j]` holds when {i, j} is a minimal pair, i != j.
#[derive(Debug, Clone)]
pub struct CompatibilityGraph {
    pub vertices: Vec<AlcovePoint>,
    pub adjacent: Vec<Vec<bool>>,
}

/// A pure flag simplicial complex given by its vertices and maximal faces
/// (index sets into `vertices`, each sorted; the face list is sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: Vec<AlcovePoint>,
    pub maximal_faces: Vec<Vec<usize>>,
    /// Face numbers, starting with f_{-1} = 1 for the empty face.
    pub f_vector: Vec<i64>,
}

/// Build the graph of minimal pairs over the degree-1 points.
pub fn compatibility_graph(s: &SSequence, budget: u64) -> Result<CompatibilityGraph> {
    let vertices = enumerate_multisets(s, budget)?;
    let m = vertices.len();
    let mut adjacent = vec![vec![false; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let pair =
                crate::alcove::Collection::new(vec![vertices[i].clone(), vertices[j].clone()])?;
            let minimal = groebner::minimize_pair(&vertices[i], &vertices[j], s, budget)? == pair;
            adjacent[i][j] = minimal;
            adjacent[j][i] = minimal;
        }
    }
    Ok(CompatibilityGraph { vertices, adjacent })
}

/// Bron-Kerbosch with pivoting; vertex sets are kept as sorted index vectors
/// so the output is deterministic.
fn maximal_cliques(adjacent: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn expand(
        adjacent: &[Vec<bool>],
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        // pivot: the candidate (from p or x) with the most neighbors in p
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| adjacent[u][v]).count())
            .expect("p or x is nonempty");
        let branch: Vec<usize> = p.iter().copied().filter(|&v| !adjacent[pivot][v]).collect();
        let mut p = p;
        let mut x = x;
        for v in branch {
            let np: Vec<usize> = p.iter().copied().filter(|&w| adjacent[v][w]).collect();
            let nx: Vec<usize> = x.iter().copied().filter(|&w| adjacent[v][w]).collect();
            r.push(v);
            expand(adjacent, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
            x.sort_unstable();
        }
    }

    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(
        adjacent,
        &mut r,
        (0..adjacent.len()).collect(),
        Vec::new(),
        &mut out,
    );
    for clique in &mut out {
        clique.sort_unstable();
    }
    out.sort();
    out
}

/// Build the flag complex of the compatibility graph. Every maximal face
/// must have exactly n + 1 vertices; anything else means a falsified
/// invariant and is a hard error.
pub fn build_triangulation(s: &SSequence, budget: u64) -> Result<SimplicialComplex> {
    let graph = compatibility_graph(s, budget)?;
    let maximal_faces = maximal_cliques(&graph.adjacent);
    let expected = s.n() + 1;
    for face in &maximal_faces {
        if face.len() != expected {
            return Err(Error::Internal(format!(
                "maximal face {face:?} has {} vertices, expected {expected}",
                face.len()
            )));
        }
    }

    // All faces are subsets of maximal faces; collect them once to count.
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for face in &maximal_faces {
        for mask in 1u32..(1 << face.len()) {
            let subset: Vec<usize> = face
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask & (1 << b) != 0)
                .map(|(_, &v)| v)
                .collect();
            faces.insert(subset);
        }
    }
    let mut f_vector = vec![0i64; expected + 1];
    f_vector[0] = 1;
    for face in &faces {
        f_vector[face.len()] += 1;
    }

    Ok(SimplicialComplex {
        vertices: graph.vertices,
        maximal_faces,
        f_vector,
    })
}

/// Exact determinant by fraction-free (Bareiss) elimination.
fn determinant(mut m: Vec<Vec<i64>>) -> Result<i64> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i64;
    let mut denom = 1i64;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let swap = (k + 1..n).find(|&r| m[r][k] != 0);
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = arith::mul(m[i][j], m[k][k])?;
                let b = arith::mul(m[i][k], m[k][j])?;
                m[i][j] = arith::sub(a, b)? / denom;
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

/// Check that every maximal face spans a simplex of normalized volume one:
/// pull the vertices back to simplex coordinates and test that the edge
/// matrix has determinant +-1.
pub fn verify_unimodular(complex: &SimplicialComplex, s: &SSequence) -> Result<bool> {
    for face in &complex.maximal_faces {
        let points: Vec<_> = face
            .iter()
            .map(|&v| from_alcove(s, &complex.vertices[v]))
            .collect::<Result<Vec<_>>>()?;
        let base = &points[0];
        let rows: Vec<Vec<i64>> = points[1..]
            .iter()
            .map(|point| {
                point
                    .coords()
                    .iter()
                    .zip(base.coords())
                    .map(|(&a, &b)| arith::sub(a, b))
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if determinant(rows)?.abs() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Covering certificate: the face-count identity must reproduce the lattice
/// point counts of the simplex for k = 0..=kmax, and the number of maximal
/// faces must equal the normalized volume s_1 * ... * s_n.
pub fn verify_cover(
    complex: &SimplicialComplex,
    s: &SSequence,
    kmax: i64,
    budget: u64,
) -> Result<bool> {
    let volume = s
        .entries()
        .iter()
        .try_fold(1i64, |acc, &v| arith::mul(acc, v))?;
    if complex.maximal_faces.len() as i64 != volume {
        return Ok(false);
    }
    let chain = LabeledPoset::chain(s.n());
    let counts = ehrhart_counts(&chain, s, kmax, budget)?;
    for (k, &count) in counts.iter().enumerate() {
        let mut total = 0i64;
        for (size, &f) in complex.f_vector.iter().enumerate().skip(1) {
            // a face with `size` vertices has dimension size - 1
            let b = arith::binomial(k as i64 - 1, (size - 1) as u32)?;
            total = arith::add(total, arith::mul(f, b)?)?;
        }
        if total != count {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The h-vector of a pure complex, as a polynomial:
/// `h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}` with d the vertex count of
/// the maximal faces.
pub fn h_vector(complex: &SimplicialComplex) -> Result<IntPolynomial> {
    let d = match complex.maximal_faces.first() {
        Some(face) => face.len(),
        None => return Err(Error::InvalidInput("complex has no maximal faces".into())),
    };
    if complex.maximal_faces.iter().any(|f| f.len() != d) {
        return Err(Error::InvalidInput(
            "h-vector requires a pure complex".into(),
        ));
    }
    let mut h = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut acc = 0i64;
        for i in 0..=j {
            let sign = if (j - i) % 2 == 0 { 1 } else { -1 };
            let b = arith::binomial((d - i) as i64, (j - i) as u32)?;
            let f = complex.f_vector[i];
            acc = arith::add(acc, arith::mul(sign, arith::mul(b, f)?)?)?;
        }
        h.push(acc);
    }
    Ok(IntPolynomial::new(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::hstar_from_counts;

    const B: u64 = 100_000_000;

    fn s123() -> SSequence {
        SSequence::new(vec![1, 2, 3]).unwrap()
    }

    fn vertex_index(c: &SimplicialComplex, z: &[i64]) -> usize {
        c.vertices
            .iter()
            .position(|v| v.coords() == z)
            .expect("vertex present")
    }

    #[test]
    fn graph_examples() {
        let s = s123();
        let g = compatibility_graph(&s, B).unwrap();
        let idx = |z: &[i64]| g.vertices.iter().position(|v| v.coords() == z).unwrap();
        assert!(g.adjacent[idx(&[1, 1, 1, 1])][idx(&[0, 0, 0, 4])]);
        assert!(!g.adjacent[idx(&[0, 0, 3, 1])][idx(&[0, 0, 1, 3])]);

        let s1 = SSequence::new(vec![1]).unwrap();
        let g = compatibility_graph(&s1, B).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert!(g.adjacent[0][1]);
    }

    #[test]
    fn triangulation_counts() {
        let s = s123();
        let t = build_triangulation(&s, B).unwrap();
        assert_eq!(t.maximal_faces.len(), 6);
        assert!(t.maximal_faces.iter().all(|f| f.len() == 4));

        let s1 = SSequence::new(vec![1]).unwrap();
        let t1 = build_triangulation(&s1, B).unwrap();
        assert_eq!(t1.maximal_faces.len(), 1);

        let s112 = SSequence::new(vec![1, 1, 2]).unwrap();
        let t2 = build_triangulation(&s112, B).unwrap();
        assert_eq!(t2.maximal_faces.len(), 2);
    }

    #[test]
    fn unimodularity() {
        let s = s123();
        let t = build_triangulation(&s, B).unwrap();
        assert!(verify_unimodular(&t, &s).unwrap());

        let s1 = SSequence::new(vec![1]).unwrap();
        let t1 = build_triangulation(&s1, B).unwrap();
        assert!(verify_unimodular(&t1, &s1).unwrap());

        // corrupt a vertex: replace (1,2,3)'s image by its double
        let mut bad = t.clone();
        let i = vertex_index(&bad, &[1, 1, 1, 1]);
        bad.vertices[i] = AlcovePoint::new(&s, vec![2, 2, 2, 2], 2).unwrap();
        assert!(!verify_unimodular(&bad, &s).unwrap());
    }

    #[test]
    fn covering_certificate() {
        for entries in [vec![1, 2, 3], vec![1], vec![1, 1, 2]] {
            let s = SSequence::new(entries).unwrap();
            let t = build_triangulation(&s, B).unwrap();
            assert!(verify_unimodular(&t, &s).unwrap());
            assert!(verify_cover(&t, &s, 3, B).unwrap(), "s={s}");
        }
    }

    #[test]
    fn h_vector_matches_hstar() {
        let s = s123();
        let t = build_triangulation(&s, B).unwrap();
        assert_eq!(h_vector(&t).unwrap(), IntPolynomial::new(vec![1, 4, 1]));

        let s1 = SSequence::new(vec![1]).unwrap();
        let t1 = build_triangulation(&s1, B).unwrap();
        assert_eq!(h_vector(&t1).unwrap(), IntPolynomial::new(vec![1]));

        let s112 = SSequence::new(vec![1, 1, 2]).unwrap();
        let t2 = build_triangulation(&s112, B).unwrap();
        let chain = LabeledPoset::chain(3);
        let counts = ehrhart_counts(&chain, &s112, 3, B).unwrap();
        assert_eq!(
            h_vector(&t2).unwrap(),
            hstar_from_counts(&counts, 3).unwrap()
        );
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(determinant(vec![vec![2]]).unwrap(), 2);
        assert_eq!(determinant(vec![vec![0, 1], vec![1, 0]]).unwrap(), -1);
        assert_eq!(determinant(vec![vec![1, 2], vec![2, 4]]).unwrap(), 0);
        assert_eq!(
            determinant(vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 4]]).unwrap(),
            24
        );
        // needs a row swap
        assert_eq!(
            determinant(vec![vec![0, 2, 1], vec![1, 0, 0], vec![3, 1, 1]]).unwrap(),
            -1
        );
    }

    #[test]
    fn flag_faces_are_standard_collections() {
        // cliques of distinct vertices coincide with standard square-free
        // collections, tested over all vertex subsets of size <= 4
        let s = s123();
        let t = build_triangulation(&s, B).unwrap();
        let m = t.vertices.len();
        let adj = compatibility_graph(&s, B).unwrap().adjacent;
        for mask in 1u32..(1 << m) {
            let subset: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
            if subset.len() > 4 {
                continue;
            }
            let clique = subset
                .iter()
                .enumerate()
                .all(|(a, &i)| subset[a + 1..].iter().all(|&j| adj[i][j]));
            let coll = crate::alcove::Collection::new(
                subset.iter().map(|&i| t.vertices[i].clone()).collect(),
            )
            .unwrap();
            let standard = groebner::is_standard(&coll, &s, B).unwrap();
            assert_eq!(clique, standard, "subset {subset:?}");
        }
    }
}
