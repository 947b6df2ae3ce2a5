use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::vertices::CorrelationVertex;

/// Hull enumeration is exact but brute-force; above dimension 4 the subset
/// scan would be pointless, so it is refused.
pub const HULL_DIM_LIMIT: usize = 4;

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact fraction with positive denominator. Magnitudes here come from
/// determinants of tiny ±1-ish matrices, so `i128` has headroom to spare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational {
    num: i128,
    den: i128,
}

impl Rational {
    pub fn new(num: i128, den: i128) -> Rational {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Rational {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(v: i128) -> Rational {
        Rational { num: v, den: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    fn add(&self, other: &Rational) -> Rational {
        Rational::new(
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )
    }

    fn sub(&self, other: &Rational) -> Rational {
        Rational::new(
            self.num * other.den - other.num * self.den,
            self.den * other.den,
        )
    }

    fn mul(&self, other: &Rational) -> Rational {
        Rational::new(self.num * other.num, self.den * other.den)
    }

    fn div(&self, other: &Rational) -> Rational {
        assert!(other.num != 0, "division by zero");
        Rational::new(self.num * other.den, self.den * other.num)
    }
}

/// One face-defining inequality `coefficients · v ≤ bound` with integer
/// entries, gcd 1, oriented outward (every vertex satisfies it, the tight
/// set spans the facet).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FacetInequality {
    pub coefficients: Vec<i64>,
    pub bound: i64,
}

impl FacetInequality {
    fn normalized(mut coefficients: Vec<i128>, bound: i128) -> FacetInequality {
        let mut g = 0i128;
        for &c in &coefficients {
            g = gcd(g, c);
        }
        let g = g.max(1);
        for c in &mut coefficients {
            *c /= g;
        }
        FacetInequality {
            coefficients: coefficients.iter().map(|&c| c as i64).collect(),
            bound: (bound / g) as i64,
        }
    }

    pub fn evaluate(&self, point: &[i64]) -> i64 {
        self.coefficients
            .iter()
            .zip(point)
            .map(|(c, x)| c * x)
            .sum()
    }

    pub fn satisfied_by(&self, point: &[i64]) -> bool {
        self.evaluate(point) <= self.bound
    }

    pub fn tight_on(&self, point: &[i64]) -> bool {
        self.evaluate(point) == self.bound
    }

    /// Exact check against a rational point.
    pub fn satisfied_by_rational(&self, point: &[Rational]) -> bool {
        let mut acc = Rational::from_int(0);
        for (c, x) in self.coefficients.iter().zip(point) {
            acc = acc.add(&Rational::from_int(*c as i128).mul(x));
        }
        acc <= Rational::from_int(self.bound as i128)
    }
}

fn det(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        n => {
            let mut acc = 0i128;
            for col in 0..n {
                if m[0][col] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(j, _)| *j != col)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if col % 2 == 0 { 1 } else { -1 };
                acc += sign * m[0][col] * det(&minor);
            }
            acc
        }
    }
}

/// Row-reduce the difference vectors of a point set over the rationals and
/// return the pivot columns (a coordinate subset on which the affine hull
/// projects bijectively).
fn pivot_columns(points: &[Vec<i64>]) -> Vec<usize> {
    if points.len() < 2 {
        return Vec::new();
    }
    let dim = points[0].len();
    let mut rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| {
            (0..dim)
                .map(|k| Rational::from_int((p[k] - points[0][k]) as i128))
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..dim {
        let Some(pivot_row) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pivot_row);
        let pivot = rows[row][col];
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].div(&pivot);
                for c in col..dim {
                    let scaled = rows[row][c].mul(&factor);
                    rows[r][c] = rows[r][c].sub(&scaled);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    pivots
}

/// Complete, irredundant facet list of the convex hull of integer points.
///
/// Candidates are generated from every affinely independent `r`-subset of
/// points (r = affine dimension); a candidate hyperplane survives only if
/// every point lies weakly on one side. Supporting-hyperplane tests run in
/// integer arithmetic, so no facet is ever misclassified by rounding.
///
/// Points whose affine hull is lower-dimensional than the ambient space are
/// projected onto pivot coordinates first; the returned inequalities then
/// use only those coordinates (a canonical representative within the affine
/// hull).
pub fn hull_facets_of_points(points: &[Vec<i64>]) -> Result<Vec<FacetInequality>> {
    let distinct: Vec<Vec<i64>> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if distinct.len() <= 1 {
        return Err(Error::DegenerateVertexSet);
    }
    let ambient = distinct[0].len();
    if distinct.iter().any(|p| p.len() != ambient) {
        return Err(Error::DimensionMismatch {
            left: ambient,
            right: distinct.iter().map(|p| p.len()).max().unwrap_or(0),
        });
    }

    let pivots = pivot_columns(&distinct);
    let rank = pivots.len();
    if rank == 0 {
        return Err(Error::DegenerateVertexSet);
    }
    if rank > HULL_DIM_LIMIT {
        return Err(Error::HullDimensionTooLarge {
            dim: rank,
            limit: HULL_DIM_LIMIT,
        });
    }

    let reduced: Vec<Vec<i128>> = distinct
        .iter()
        .map(|p| pivots.iter().map(|&c| p[c] as i128).collect())
        .collect();

    let mut facets: BTreeSet<FacetInequality> = BTreeSet::new();
    for subset in (0..reduced.len()).combinations(rank) {
        // Normal via cofactors of the (rank-1) x rank difference matrix.
        let base = &reduced[subset[0]];
        let diffs: Vec<Vec<i128>> = subset[1..]
            .iter()
            .map(|&i| (0..rank).map(|k| reduced[i][k] - base[k]).collect())
            .collect();
        let mut normal = vec![0i128; rank];
        for (k, slot) in normal.iter_mut().enumerate() {
            let minor: Vec<Vec<i128>> = diffs
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != k)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            *slot = sign * det(&minor);
        }
        if normal.iter().all(|&c| c == 0) {
            continue;
        }
        let bound: i128 = normal.iter().zip(base).map(|(n, x)| n * x).sum();

        let mut above = false;
        let mut below = false;
        for point in &reduced {
            let value: i128 = normal.iter().zip(point).map(|(n, x)| n * x).sum();
            if value > bound {
                above = true;
            } else if value < bound {
                below = true;
            }
            if above && below {
                break;
            }
        }
        if above && below {
            continue;
        }
        let (oriented_normal, oriented_bound) = if above {
            (normal.iter().map(|&c| -c).collect(), -bound)
        } else {
            (normal, bound)
        };

        // Lift back to ambient coordinates: zero outside the pivot columns.
        let reduced_facet = FacetInequality::normalized(oriented_normal, oriented_bound);
        let mut coefficients = vec![0i64; ambient];
        for (slot, &col) in pivots.iter().enumerate() {
            coefficients[col] = reduced_facet.coefficients[slot];
        }
        facets.insert(FacetInequality {
            coefficients,
            bound: reduced_facet.bound,
        });
    }
    Ok(facets.into_iter().collect())
}

/// Facets of the hull of correlation vertices.
pub fn hull_facets(vertices: &[CorrelationVertex]) -> Result<Vec<FacetInequality>> {
    let points: Vec<Vec<i64>> = vertices.iter().map(|v| v.as_i64()).collect();
    hull_facets_of_points(&points)
}

/// Re-enumerate the vertices of the polyhedron `{x : facets}` by exact
/// basis-intersection (the dual half of a desk-scale double-description
/// round trip). Assumes a full-dimensional inequality system in `dim`
/// coordinates and returns rational points sorted lexicographically.
pub fn enumerate_vertices_from_facets(
    facets: &[FacetInequality],
    dim: usize,
) -> Vec<Vec<Rational>> {
    let mut vertices: BTreeSet<Vec<Rational>> = BTreeSet::new();
    for subset in (0..facets.len()).combinations(dim) {
        let matrix: Vec<Vec<i128>> = subset
            .iter()
            .map(|&i| facets[i].coefficients.iter().map(|&c| c as i128).collect())
            .collect();
        let rhs: Vec<i128> = subset.iter().map(|&i| facets[i].bound as i128).collect();
        let d = det(&matrix);
        if d == 0 {
            continue;
        }
        // Cramer's rule.
        let point: Vec<Rational> = (0..dim)
            .map(|k| {
                let mut m = matrix.clone();
                for (row, &b) in m.iter_mut().zip(&rhs) {
                    row[k] = b;
                }
                Rational::new(det(&m), d)
            })
            .collect();
        if facets.iter().all(|f| f.satisfied_by_rational(&point)) {
            vertices.insert(point);
        }
    }
    vertices.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{enumerate_vertices, Scenario};

    fn facet(coefficients: Vec<i64>, bound: i64) -> FacetInequality {
        FacetInequality {
            coefficients,
            bound,
        }
    }

    /// Affine rank of the subset of `points` on which `f` is tight.
    fn tight_rank(f: &FacetInequality, points: &[Vec<i64>]) -> usize {
        let tight: Vec<Vec<i64>> = points
            .iter()
            .filter(|p| f.tight_on(p))
            .cloned()
            .collect();
        pivot_columns(&tight).len()
    }

    #[test]
    fn interval_hull() {
        let facets = hull_facets_of_points(&[vec![1], vec![-1]]).unwrap();
        assert_eq!(facets, vec![facet(vec![-1], 1), facet(vec![1], 1)]);
    }

    #[test]
    fn unit_square_fixture() {
        let points = vec![vec![1, 1], vec![1, -1], vec![-1, 1], vec![-1, -1]];
        let facets = hull_facets_of_points(&points).unwrap();
        assert_eq!(
            facets,
            vec![
                facet(vec![-1, 0], 1),
                facet(vec![0, -1], 1),
                facet(vec![0, 1], 1),
                facet(vec![1, 0], 1),
            ]
        );
    }

    #[test]
    fn degenerate_sets_are_rejected() {
        assert!(matches!(
            hull_facets_of_points(&[vec![1, 1]]),
            Err(Error::DegenerateVertexSet)
        ));
        assert!(matches!(
            hull_facets_of_points(&[vec![1, 1], vec![1, 1]]),
            Err(Error::DegenerateVertexSet)
        ));
    }

    #[test]
    fn lower_dimensional_input_reduces_to_pivot_coordinates() {
        // A segment embedded diagonally in the plane.
        let facets = hull_facets_of_points(&[vec![1, 1], vec![-1, -1]]).unwrap();
        assert_eq!(facets, vec![facet(vec![-1, 0], 1), facet(vec![1, 0], 1)]);
    }

    #[test]
    fn chsh_hull_has_box_and_chsh_facets() {
        let vertices = enumerate_vertices(&Scenario::chsh());
        let facets = hull_facets(&vertices).unwrap();
        assert_eq!(facets.len(), 16);

        let box_facets: Vec<_> = facets
            .iter()
            .filter(|f| f.coefficients.iter().filter(|&&c| c != 0).count() == 1)
            .collect();
        let chsh_facets: Vec<_> = facets
            .iter()
            .filter(|f| f.coefficients.iter().all(|&c| c.abs() == 1))
            .collect();
        assert_eq!(box_facets.len(), 8);
        assert_eq!(chsh_facets.len(), 8);

        for f in &box_facets {
            assert_eq!(f.bound, 1);
        }
        for f in &chsh_facets {
            assert_eq!(f.bound, 2);
            // CHSH sign structure: an odd number of negative coefficients.
            let product: i64 = f.coefficients.iter().product();
            assert_eq!(product, -1);
        }
    }

    #[test]
    fn every_facet_is_valid_and_tight() {
        for scenario in [
            Scenario::new(1, 1).unwrap(),
            Scenario::new(2, 1).unwrap(),
            Scenario::chsh(),
        ] {
            let vertices = enumerate_vertices(&scenario);
            let points: Vec<Vec<i64>> = vertices.iter().map(|v| v.as_i64()).collect();
            let rank = pivot_columns(&points).len();
            let facets = hull_facets(&vertices).unwrap();
            for f in &facets {
                assert!(points.iter().all(|p| f.satisfied_by(p)), "{f:?} violated");
                assert_eq!(tight_rank(f, &points), rank - 1, "{f:?} not a facet");
            }
        }
    }

    #[test]
    fn double_description_roundtrip() {
        for scenario in [
            Scenario::new(1, 1).unwrap(),
            Scenario::new(2, 1).unwrap(),
            Scenario::chsh(),
        ] {
            let vertices = enumerate_vertices(&scenario);
            let facets = hull_facets(&vertices).unwrap();
            let dim = scenario.dim();
            let recovered = enumerate_vertices_from_facets(&facets, dim);
            let expected: BTreeSet<Vec<Rational>> = vertices
                .iter()
                .map(|v| {
                    v.as_i64()
                        .iter()
                        .map(|&c| Rational::from_int(c as i128))
                        .collect()
                })
                .collect();
            let got: BTreeSet<Vec<Rational>> = recovered.into_iter().collect();
            assert_eq!(got, expected, "round trip failed for {scenario:?}");
        }
    }

    #[test]
    fn chsh_facets_alone_do_not_close_the_polytope() {
        // The eight CHSH inequalities admit points like (2,0,0,0); only
        // together with the box facets do they reproduce the vertex set.
        let vertices = enumerate_vertices(&Scenario::chsh());
        let facets = hull_facets(&vertices).unwrap();
        let chsh_only: Vec<FacetInequality> = facets
            .iter()
            .filter(|f| f.coefficients.iter().all(|&c| c.abs() == 1))
            .cloned()
            .collect();
        let spike = vec![
            Rational::from_int(2),
            Rational::from_int(0),
            Rational::from_int(0),
            Rational::from_int(0),
        ];
        assert!(chsh_only.iter().all(|f| f.satisfied_by_rational(&spike)));
        assert!(!facets.iter().all(|f| f.satisfied_by_rational(&spike)));
    }
}
