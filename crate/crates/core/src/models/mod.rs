//! Exact models of the spheres: rational and Gaussian-rational points,
//! Clifford matrices, the 2×2 half-liberated model and reduced words in
//! free products of order-two groups.

mod eval;
mod group;
mod matrices;
mod points;

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exact::{fmt_scalar, Matrix, Scalar};
use crate::relspan::{Field, SphereClass, SpherePresentation};

pub use eval::{evaluate, evaluate_word, independence_rank, Evaluation};
pub use group::{free_product_check, GroupAlgebra, GroupWord};
pub use matrices::{
    clifford_gammas, clifford_model, clifford_point, halflib_model, halflib_point, MAX_CLIFFORD_N,
};
pub use points::{
    complex_polygonal_point, polygonal_point, rational_sphere_point, rational_sphere_point_with,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    ClassicalPoint,
    ComplexPoint,
    Clifford,
    Halflib,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coords {
    Scalars(Vec<Scalar>),
    Matrices(Vec<Matrix<Scalar>>),
}

/// A model of a polygonal sphere: one scalar or matrix per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelPoint {
    pub kind: ModelKind,
    pub n: usize,
    pub d: usize,
    /// 1-based indices of the nonzero coordinates.
    pub support: BTreeSet<usize>,
    pub coords: Coords,
}

impl ModelPoint {
    /// Whether star letters may be evaluated.
    pub fn is_complex(&self) -> bool {
        self.kind == ModelKind::ComplexPoint
    }

    /// The presentation this model satisfies.
    pub fn presentation(&self) -> SpherePresentation {
        let (field, class) = match self.kind {
            ModelKind::ClassicalPoint => (Field::Real, SphereClass::Classical),
            ModelKind::ComplexPoint => (Field::Complex, SphereClass::Classical),
            ModelKind::Clifford => (Field::Real, SphereClass::Twisted),
            ModelKind::Halflib => (Field::Real, SphereClass::Half),
        };
        SpherePresentation::sphere(field, class, self.d, self.n)
            .expect("model parameters are valid")
    }

    pub fn describe(&self) -> String {
        let support: Vec<String> = self.support.iter().map(usize::to_string).collect();
        let kind = match self.kind {
            ModelKind::ClassicalPoint => "classical point",
            ModelKind::ComplexPoint => "complex point",
            ModelKind::Clifford => "clifford model",
            ModelKind::Halflib => "half-liberated 2x2 model",
        };
        format!(
            "{kind} N={} d={} support {{{}}}",
            self.n,
            self.d,
            support.join(",")
        )
    }
}

impl Serialize for ModelPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ModelPoint", 5)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("support", &self.support)?;
        match &self.coords {
            Coords::Scalars(v) => {
                let v: Vec<String> = v.iter().map(fmt_scalar).collect();
                st.serialize_field("coords", &v)?;
            }
            Coords::Matrices(ms) => {
                let v: Vec<Vec<Vec<String>>> = ms
                    .iter()
                    .map(|m| {
                        (0..m.rows())
                            .map(|r| m.row(r).iter().map(fmt_scalar).collect())
                            .collect()
                    })
                    .collect();
                st.serialize_field("coords", &v)?;
            }
        }
        st.end()
    }
}
