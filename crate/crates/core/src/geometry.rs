//! Array geometry and near-field line-of-sight channel construction.
//!
//! Uniform planar arrays are described by explicit element positions so that
//! steering and LOS phases always use exact per-element distances (spherical
//! wavefronts); no plane-wave approximation is made anywhere.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A point in 3-D space, meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Position {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Position {
    pub const ORIGIN: Position = Position { x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Position { x, y, z }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn distance(&self, other: &Position) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Plane containing a planar array.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Plane {
    /// Rows run along x, columns along z.
    Xz,
    /// Rows run along y, columns along z.
    Yz,
}

/// Uniform planar array with row-major element ordering, rows along the
/// first axis of the declared plane.
#[derive(Debug, Clone)]
pub struct ArrayGeometry {
    pub elements: Vec<Position>,
    pub rows: usize,
    pub cols: usize,
    pub spacing: f64,
    pub plane: Plane,
    pub center: Position,
}

impl ArrayGeometry {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Build a `rows x cols` uniform planar array centered at `center`.
///
/// Element `(r, c)` sits at offset `((r - (rows-1)/2) * spacing,
/// (c - (cols-1)/2) * spacing)` along the plane axes; ordering is row-major.
pub fn build_upa(rows: usize, cols: usize, spacing: f64, center: Position, plane: Plane) -> Result<ArrayGeometry> {
    if rows == 0 || cols == 0 {
        return Err(Error::invalid(format!("array dimensions must be positive, got {rows}x{cols}")));
    }
    if !(spacing > 0.0) || !spacing.is_finite() {
        return Err(Error::invalid(format!("element spacing must be positive, got {spacing}")));
    }
    if !center.is_finite() {
        return Err(Error::invalid("array center must be finite"));
    }
    let mut elements = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let u = (r as f64 - (rows as f64 - 1.0) / 2.0) * spacing;
        for c in 0..cols {
            let v = (c as f64 - (cols as f64 - 1.0) / 2.0) * spacing;
            let p = match plane {
                Plane::Xz => Position::new(center.x + u, center.y, center.z + v),
                Plane::Yz => Position::new(center.x, center.y + u, center.z + v),
            };
            elements.push(p);
        }
    }
    Ok(ArrayGeometry {
        elements,
        rows,
        cols,
        spacing,
        plane,
        center,
    })
}

/// Near-field array response toward `point`: entry `n = exp(j k |p_n - point|)`.
pub fn steering_vector(array: &ArrayGeometry, point: Position, wavenumber: f64) -> Result<Vec<Complex64>> {
    if !point.is_finite() {
        return Err(Error::invalid("steering point must be finite"));
    }
    array
        .elements
        .iter()
        .map(|p| {
            let d = p.distance(&point);
            if d == 0.0 {
                return Err(Error::invalid("steering point coincides with an array element"));
            }
            Ok(Complex64::from_polar(1.0, wavenumber * d))
        })
        .collect()
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> Complex64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Complex64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// `self * v` for a column vector `v` of length `cols`.
    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols, "matvec dimension mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn transpose(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c);
            }
        }
        out
    }
}

/// Near-field LOS channel from `tx` to `rx`:
/// entry `(m, n) = c0 * exp(j k |u_rx_m - u_tx_n|)`.
pub fn los_channel(tx: &ArrayGeometry, rx: &ArrayGeometry, wavenumber: f64, c0: f64) -> Result<CMatrix> {
    let mut out = CMatrix::zeros(rx.len(), tx.len());
    for (m, rp) in rx.elements.iter().enumerate() {
        for (n, tp) in tx.elements.iter().enumerate() {
            let d = rp.distance(tp);
            if d == 0.0 {
                return Err(Error::invalid(format!("tx element {n} coincides with rx element {m}")));
            }
            *out.at_mut(m, n) = Complex64::from_polar(c0, wavenumber * d);
        }
    }
    Ok(out)
}
