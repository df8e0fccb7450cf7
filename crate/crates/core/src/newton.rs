//! Newton polyhedra of bivariate polynomials: the convex hull of
//! `support + R^2_{>=0}`, its compact faces, principal face, Newton distance,
//! and weighted dilations. All computations are exact.

use num_traits::{Signed, Zero};

use crate::error::CoreError;
use crate::poly::{Exponent2, PuiseuxPoly};
use crate::rational::{pow_rational, Rat};

/// A positive weight `(k1, k2)`; the associated line is `k1*t1 + k2*t2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub k1: Rat,
    pub k2: Rat,
}

impl Weight {
    pub fn new(k1: Rat, k2: Rat) -> Result<Self, CoreError> {
        if !k1.is_positive() || !k2.is_positive() {
            return Err(CoreError::Domain(format!(
                "weight components must be positive, got ({k1}, {k2})"
            )));
        }
        Ok(Weight { k1, k2 })
    }

    pub fn dot(&self, e: &Exponent2) -> Rat {
        &self.k1 * e.e1() + &self.k2 * e.e2()
    }

    /// Slope ratio `m = k2/k1`; the line `k1 t1 + k2 t2 = 1` has slope `-1/m`.
    pub fn m(&self) -> Rat {
        &self.k2 / &self.k1
    }

    pub fn norm(&self) -> Rat {
        &self.k1 + &self.k2
    }
}

/// A compact edge of the boundary, ordered with `from.e1 < to.e1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyEdge {
    pub from: Exponent2,
    pub to: Exponent2,
    pub weight: Weight,
}

/// The face of the boundary met by a line; rays are the unbounded pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Face {
    Vertex(Exponent2),
    Edge(PolyEdge),
    VerticalRay { base: Exponent2 },
    HorizontalRay { base: Exponent2 },
}

/// Newton polyhedron: vertices run left to right (`e1` strictly increasing,
/// `e2` strictly decreasing); `edges[i]` joins `vertices[i]` to
/// `vertices[i+1]`. The boundary is the vertical ray above the first vertex,
/// the edges, then the horizontal ray right of the last vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    pub vertices: Vec<Exponent2>,
    pub edges: Vec<PolyEdge>,
}

impl NewtonPolyhedron {
    pub fn top_vertex(&self) -> &Exponent2 {
        &self.vertices[0]
    }

    pub fn bottom_vertex(&self) -> &Exponent2 {
        self.vertices.last().unwrap()
    }

    /// Exact membership test.
    pub fn contains(&self, t: &Exponent2) -> bool {
        if t.e1() < self.top_vertex().e1() || t.e2() < self.bottom_vertex().e2() {
            return false;
        }
        self.edges
            .iter()
            .all(|e| e.weight.dot(t) >= Rat::from_integer(1.into()))
    }

    /// Point where the line `t2 = t1 + c` meets the boundary, together with
    /// the face of minimal dimension containing it. A line of slope one
    /// crosses the monotone boundary exactly once.
    pub fn crossing_with_shifted_diagonal(&self, c: &Rat) -> (Exponent2, Face) {
        let one = Rat::from_integer(1.into());
        let top = self.top_vertex();
        // Vertical ray above the top vertex.
        if top.e1() + c >= *top.e2() {
            let pt = Exponent2::new(top.e1().clone(), top.e1() + c).unwrap();
            let face = if pt == *top {
                Face::Vertex(top.clone())
            } else {
                Face::VerticalRay { base: top.clone() }
            };
            return (pt, face);
        }
        for edge in &self.edges {
            // Solve k1 t + k2 (t + c) = 1.
            let t = (&one - &edge.weight.k2 * c) / (&edge.weight.k1 + &edge.weight.k2);
            if t >= *edge.from.e1() && t <= *edge.to.e1() {
                let pt = Exponent2::new(t.clone(), &t + c).unwrap();
                let face = if pt == edge.from {
                    Face::Vertex(edge.from.clone())
                } else if pt == edge.to {
                    Face::Vertex(edge.to.clone())
                } else {
                    Face::Edge(edge.clone())
                };
                return (pt, face);
            }
        }
        let bottom = self.bottom_vertex();
        let t1 = bottom.e2() - c;
        debug_assert!(t1 >= *bottom.e1());
        let pt = Exponent2::new(t1, bottom.e2().clone()).unwrap();
        let face = if pt == *bottom {
            Face::Vertex(bottom.clone())
        } else {
            Face::HorizontalRay {
                base: bottom.clone(),
            }
        };
        (pt, face)
    }
}

/// Lower-left convex hull of a set of exponent points plus the positive
/// quadrant. Input needs at least one point.
pub(crate) fn hull_of_points(pts: Vec<Exponent2>) -> Result<NewtonPolyhedron, CoreError> {
    if pts.is_empty() {
        return Err(CoreError::EmptyPolynomial);
    }
    // Keep the minimal antichain: drop any point dominating another.
    let mut minimal: Vec<Exponent2> = Vec::new();
    for p in &pts {
        if pts
            .iter()
            .any(|q| q != p && q.e1() <= p.e1() && q.e2() <= p.e2())
        {
            continue;
        }
        if !minimal.contains(p) {
            minimal.push(p.clone());
        }
    }
    minimal.sort();
    // Monotone chain; `e2` is strictly decreasing across `minimal`.
    let mut hull: Vec<Exponent2> = Vec::new();
    for p in minimal {
        while hull.len() >= 2 {
            let a = &hull[hull.len() - 2];
            let b = &hull[hull.len() - 1];
            // cross((b - a), (p - b)) <= 0 means b is not extreme.
            let cross = (b.e1() - a.e1()) * (p.e2() - b.e2())
                - (b.e2() - a.e2()) * (p.e1() - b.e1());
            if cross <= Rat::zero() {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut edges = Vec::with_capacity(hull.len().saturating_sub(1));
    for w in hull.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let det = a.e1() * b.e2() - a.e2() * b.e1();
        if det.is_zero() {
            return Err(CoreError::Domain(
                "edge on a line through the origin".into(),
            ));
        }
        let k1 = (b.e2() - a.e2()) / &det;
        let k2 = (a.e1() - b.e1()) / &det;
        edges.push(PolyEdge {
            from: a.clone(),
            to: b.clone(),
            weight: Weight::new(k1, k2)?,
        });
    }
    Ok(NewtonPolyhedron {
        vertices: hull,
        edges,
    })
}

/// Newton polyhedron of a nonzero polynomial.
pub fn newton_polyhedron(p: &PuiseuxPoly) -> Result<NewtonPolyhedron, CoreError> {
    if p.is_zero() {
        return Err(CoreError::EmptyPolynomial);
    }
    hull_of_points(p.support())
}

/// Newton distance: `(d, d)` is on the boundary.
pub fn newton_distance(np: &NewtonPolyhedron) -> Rat {
    let (pt, _) = np.crossing_with_shifted_diagonal(&Rat::zero());
    pt.e1().clone()
}

/// Principal face: the minimal-dimension face meeting the bisectrix.
pub fn principal_face(np: &NewtonPolyhedron) -> Face {
    np.crossing_with_shifted_diagonal(&Rat::zero()).1
}

/// Weight of the principal face; only a compact edge carries one.
pub fn principal_weight(np: &NewtonPolyhedron) -> Result<Weight, CoreError> {
    match principal_face(np) {
        Face::Edge(e) => Ok(e.weight),
        _ => Err(CoreError::NoFiniteWeight),
    }
}

/// Subsum of terms of weighted degree exactly one.
pub fn kappa_principal_part(p: &PuiseuxPoly, w: &Weight) -> PuiseuxPoly {
    let one = Rat::from_integer(1.into());
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        if w.dot(e) == one {
            terms.push((e.clone(), c.clone()));
        }
    }
    PuiseuxPoly::from_terms(terms)
}

/// Weighted dilation: each term is scaled by `r^(w . e)`. The ratio `r > 0`
/// must admit the exact rational powers the exponents call for.
pub fn dilate(p: &PuiseuxPoly, w: &Weight, r: &Rat) -> Result<PuiseuxPoly, CoreError> {
    if !r.is_positive() {
        return Err(CoreError::Domain(format!(
            "dilation ratio must be positive, got {r}"
        )));
    }
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        let deg = w.dot(e);
        let factor = pow_rational(r, &deg).ok_or_else(|| {
            CoreError::IncompatibleDilation(format!("{r}^({deg}) is not rational"))
        })?;
        terms.push((e.clone(), c * factor));
    }
    Ok(PuiseuxPoly::from_terms(terms))
}
