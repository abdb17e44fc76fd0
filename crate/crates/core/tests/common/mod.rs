#![allow(dead_code)]

use bihom::catalog::{catalog_names, load_catalog};
use bihom::format::{Instance, ObjectKind};
use bihom::{BiHomAlgebra, BiHomLie, Scalar};

pub enum Structure {
    Algebra(BiHomAlgebra),
    Lie(BiHomLie),
}

pub struct CatalogObject {
    pub label: String,
    pub instance: Instance,
    pub structure: Structure,
}

/// Every object of every built-in catalog entry, built with its file's R-matrix.
pub fn catalog_objects() -> Vec<CatalogObject> {
    let mut out = Vec::new();
    for entry in catalog_names() {
        let file = load_catalog(entry).unwrap();
        for obj in &file.objects {
            let instance = file.instance().unwrap();
            let structure = match obj.kind {
                ObjectKind::Associative => Structure::Algebra(file.build_algebra(&instance, &obj.name).unwrap()),
                ObjectKind::Lie => Structure::Lie(file.build_lie(&instance, &obj.name).unwrap()),
            };
            out.push(CatalogObject {
                label: format!("{entry}/{}", obj.name),
                instance,
                structure,
            });
        }
    }
    out
}

/// Applies a generic check to whichever structure the object holds.
#[macro_export]
macro_rules! with_structure {
    ($obj:expr, |$s:ident| $body:expr) => {
        match &$obj.structure {
            $crate::common::Structure::Algebra($s) => $body,
            $crate::common::Structure::Lie($s) => $body,
        }
    };
}

pub fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Scalar::from_int(x)).collect()
}
