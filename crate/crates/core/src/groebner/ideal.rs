use super::poly::{format_monomial, Exponents};

/// A monomial ideal stored by its minimal generators, sorted lexicographically
/// by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    generators: Vec<Exponents>,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl MonomialIdeal {
    /// Ideal generated by `gens`; non-minimal generators are dropped.
    pub fn new(gens: impl IntoIterator<Item = Exponents>) -> Self {
        let mut all: Vec<Exponents> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        let minimal: Vec<Exponents> = all
            .iter()
            .filter(|g| !all.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        MonomialIdeal { generators: minimal }
    }

    pub fn generators(&self) -> &[Exponents] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    pub fn is_quadratic(&self) -> bool {
        self.generators.iter().all(|g| g.iter().sum::<u32>() == 2)
    }

    pub fn format(&self, names: &[String]) -> Vec<String> {
        self.generators.iter().map(|g| format_monomial(names, g)).collect()
    }
}
