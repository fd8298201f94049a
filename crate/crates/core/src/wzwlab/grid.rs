//! Periodic square-torus grids and matrix-valued lattice fields.
//!
//! The torus is [0,1)², sites at (i/nx, j/ny). All derivatives are central
//! differences and all integrals are the periodic trapezoid rule (mean times
//! area), both O(h²). Reductions run in fixed row-major order so repeated
//! runs are bit-identical.

use super::mat2::Mat2;
use super::WzwError;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeGrid {
    nx: usize,
    ny: usize,
}

impl LatticeGrid {
    pub fn new(nx: usize, ny: usize) -> Result<Self, WzwError> {
        if nx < 8 || ny < 8 || nx % 2 != 0 || ny % 2 != 0 {
            return Err(WzwError::BadGrid { nx, ny });
        }
        Ok(LatticeGrid { nx, ny })
    }

    pub fn square(n: usize) -> Result<Self, WzwError> {
        Self::new(n, n)
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn site(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.nx && j < self.ny);
        j * self.nx + i
    }

    /// Coordinates of a site index.
    pub fn point(&self, idx: usize) -> (f64, f64) {
        let i = idx % self.nx;
        let j = idx / self.nx;
        (i as f64 / self.nx as f64, j as f64 / self.ny as f64)
    }

    /// Cell area h_x·h_y.
    pub fn cell_area(&self) -> f64 {
        1.0 / (self.nx as f64 * self.ny as f64)
    }
}

/// A per-site 2×2 complex matrix field on a periodic grid.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixField {
    grid: LatticeGrid,
    values: Vec<Mat2>,
}

impl MatrixField {
    pub fn new(grid: LatticeGrid, values: Vec<Mat2>) -> Self {
        assert_eq!(values.len(), grid.len());
        MatrixField { grid, values }
    }

    pub fn constant(grid: LatticeGrid, m: Mat2) -> Self {
        MatrixField {
            grid,
            values: vec![m; grid.len()],
        }
    }

    /// Build from a smooth function of torus coordinates.
    pub fn from_fn(grid: LatticeGrid, f: impl Fn(f64, f64) -> Mat2) -> Self {
        let values = (0..grid.len())
            .map(|idx| {
                let (x, y) = grid.point(idx);
                f(x, y)
            })
            .collect();
        MatrixField { grid, values }
    }

    pub fn grid(&self) -> LatticeGrid {
        self.grid
    }

    pub fn values(&self) -> &[Mat2] {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize) -> &Mat2 {
        &self.values[self.grid.site(i, j)]
    }

    pub fn map(&self, f: impl Fn(&Mat2) -> Mat2) -> Self {
        MatrixField {
            grid: self.grid,
            values: self.values.iter().map(f).collect(),
        }
    }

    pub fn zip_map(&self, rhs: &MatrixField, f: impl Fn(&Mat2, &Mat2) -> Mat2) -> Self {
        assert_eq!(self.grid, rhs.grid, "mismatched grids");
        MatrixField {
            grid: self.grid,
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Central difference in x: (f[i+1] − f[i−1])/(2h_x), periodic.
    pub fn dx(&self) -> MatrixField {
        let (nx, ny) = (self.grid.nx, self.grid.ny);
        let inv2h = nx as f64 / 2.0;
        let mut values = Vec::with_capacity(self.values.len());
        for j in 0..ny {
            for i in 0..nx {
                let p = self.get((i + 1) % nx, j);
                let m = self.get((i + nx - 1) % nx, j);
                values.push((*p - *m).scale_re(inv2h));
            }
        }
        MatrixField {
            grid: self.grid,
            values,
        }
    }

    /// Central difference in y, periodic.
    pub fn dy(&self) -> MatrixField {
        let (nx, ny) = (self.grid.nx, self.grid.ny);
        let inv2h = ny as f64 / 2.0;
        let mut values = Vec::with_capacity(self.values.len());
        for j in 0..ny {
            for i in 0..nx {
                let p = self.get(i, (j + 1) % ny);
                let m = self.get(i, (j + ny - 1) % ny);
                values.push((*p - *m).scale_re(inv2h));
            }
        }
        MatrixField {
            grid: self.grid,
            values,
        }
    }

    /// ∂_z = (∂_x − i∂_y)/2 with z = x + iy.
    pub fn dz(&self) -> MatrixField {
        let dx = self.dx();
        let dy = self.dy();
        dx.zip_map(&dy, |a, b| {
            (*a - b.scale(Complex64::new(0.0, 1.0))).scale_re(0.5)
        })
    }

    /// ∂_z̄ = (∂_x + i∂_y)/2.
    pub fn dzbar(&self) -> MatrixField {
        let dx = self.dx();
        let dy = self.dy();
        dx.zip_map(&dy, |a, b| {
            (*a + b.scale(Complex64::new(0.0, 1.0))).scale_re(0.5)
        })
    }

    /// Largest Frobenius norm over sites.
    pub fn max_norm(&self) -> f64 {
        self.values.iter().map(Mat2::norm).fold(0.0, f64::max)
    }
}

/// Periodic trapezoid quadrature of a per-site scalar, in fixed site order.
pub fn quadrature(grid: LatticeGrid, f: impl Fn(usize) -> Complex64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for idx in 0..grid.len() {
        sum += f(idx);
    }
    sum * grid.cell_area()
}

/// ∫ Tr(f·g) over the torus.
pub fn integral_trace_product(f: &MatrixField, g: &MatrixField) -> Complex64 {
    assert_eq!(f.grid(), g.grid(), "mismatched grids");
    quadrature(f.grid(), |idx| (f.values[idx] * g.values[idx]).trace())
}
