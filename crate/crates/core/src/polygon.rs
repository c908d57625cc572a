//! The Harder-Narasimhan polygon: the concave piecewise-linear function on
//! `[0, r]` through the lattice points `(r_i, d_i)`.

use num_rational::Ratio;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnPolygon<I> {
    vertices: Vec<(usize, I)>,
}

impl<I: Scalar> HnPolygon<I> {
    /// Builds a polygon from vertices that already satisfy the invariants
    /// (start at the origin, strictly increasing abscissae, strictly
    /// decreasing edge slopes). [`crate::HnType::polygon`] is the usual entry
    /// point.
    pub(crate) fn from_vertices(vertices: Vec<(usize, I)>) -> Self {
        debug_assert!(vertices.first().is_some_and(|(x, y)| *x == 0 && y.is_zero()));
        let polygon = HnPolygon { vertices };
        debug_assert!(polygon.is_strictly_concave());
        polygon
    }

    pub fn vertices(&self) -> &[(usize, I)] {
        &self.vertices
    }

    /// Right end point `r` of the domain.
    pub fn width(&self) -> usize {
        self.vertices.last().unwrap().0
    }

    pub fn edge_slopes(&self) -> Vec<Ratio<I>> {
        self.vertices
            .windows(2)
            .map(|e| Ratio::new(e[1].1.clone() - e[0].1.clone(), int(e[1].0 - e[0].0)))
            .collect()
    }

    pub fn is_strictly_concave(&self) -> bool {
        self.vertices.windows(2).all(|e| e[0].0 < e[1].0)
            && self.edge_slopes().windows(2).all(|w| w[0] > w[1])
    }

    /// Value of the polygon at `x`, linear between vertices.
    pub fn eval(&self, x: &Ratio<I>) -> Result<Ratio<I>> {
        let width = Ratio::from_integer(int::<I>(self.width()));
        if x.is_negative() || *x > width {
            return Err(Error::OutOfRange {
                what: "x",
                value: x.to_string(),
                range: format!("[0, {width}]"),
            });
        }
        // first vertex with abscissa >= x
        let k = self
            .vertices
            .partition_point(|(vx, _)| Ratio::from_integer(int::<I>(*vx)) < *x);
        let (right_x, right_y) = &self.vertices[k];
        let right_x = Ratio::from_integer(int::<I>(*right_x));
        let right_y = Ratio::from_integer(right_y.clone());
        if k == 0 || right_x == *x {
            return Ok(right_y);
        }
        let (left_x, left_y) = &self.vertices[k - 1];
        let left_x = Ratio::from_integer(int::<I>(*left_x));
        let left_y = Ratio::from_integer(left_y.clone());
        let slope = (right_y - left_y.clone()) / (right_x - left_x.clone());
        Ok(left_y + slope * (x - left_x))
    }

    pub fn eval_at(&self, s: usize) -> Result<Ratio<I>> {
        self.eval(&Ratio::from_integer(int(s)))
    }
}
