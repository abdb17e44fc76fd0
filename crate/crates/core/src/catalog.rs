//! Built-in example files, reachable by name.

use crate::format::{parse_algebra_file, AlgebraFile, FormatError};

pub const CATALOG: &[(&str, &str)] = &[
    ("trivial-hopf", include_str!("../catalog/trivial-hopf.json")),
    ("kZ2", include_str!("../catalog/kZ2.json")),
    ("example24", include_str!("../catalog/example24.json")),
    ("example25-heisenberg", include_str!("../catalog/example25-heisenberg.json")),
    ("example25-twisted", include_str!("../catalog/example25-twisted.json")),
    ("cross-product-classical", include_str!("../catalog/cross-product-classical.json")),
];

pub fn catalog_names() -> Vec<&'static str> {
    CATALOG.iter().map(|(n, _)| *n).collect()
}

pub fn catalog_text(name: &str) -> Option<&'static str> {
    CATALOG.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn load_catalog(name: &str) -> Result<AlgebraFile, FormatError> {
    let text = catalog_text(name).ok_or_else(|| FormatError::UnknownObject(format!("catalog entry {name}")))?;
    parse_algebra_file(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::print_algebra_file;

    #[test]
    fn every_entry_round_trips() {
        for (name, text) in CATALOG {
            let f = parse_algebra_file(text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(&print_algebra_file(&f), text, "{name}");
        }
    }
}
