//! The canonical library of preset-expressible groups up to isomorphism:
//! cyclic groups, dihedral groups, symmetric groups on at most four
//! letters, and finite products of these, deduplicated by isomorphism
//! search and sorted by (order, label).

use std::sync::Arc;

use crate::group::{are_isomorphic, FiniteGroup};

/// Every group of order at most `max_order` expressible by the presets,
/// one representative per isomorphism class.
pub fn group_library(max_order: usize) -> Vec<Arc<FiniteGroup>> {
    let mut atoms: Vec<Arc<FiniteGroup>> = Vec::new();
    for n in 1..=max_order {
        atoms.push(FiniteGroup::cyclic_bounded(n, max_order).unwrap());
    }
    for n in (6..=max_order).step_by(2) {
        atoms.push(FiniteGroup::dihedral_bounded(n, max_order).unwrap());
    }
    for n in 3..=4 {
        if factorial(n) <= max_order {
            atoms.push(FiniteGroup::symmetric(n).unwrap());
        }
    }
    // close under products, deduplicating as we go
    let mut library: Vec<Arc<FiniteGroup>> = Vec::new();
    let mut push_unique = |g: Arc<FiniteGroup>, library: &mut Vec<Arc<FiniteGroup>>| {
        if !library.iter().any(|h| are_isomorphic(h, &g)) {
            library.push(g);
        }
    };
    for a in &atoms {
        push_unique(a.clone(), &mut library);
    }
    let mut frontier: Vec<Arc<FiniteGroup>> = library.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for a in &atoms {
                if g.order() * a.order() > max_order {
                    continue;
                }
                let p = FiniteGroup::product_bounded(g, a, max_order).unwrap();
                if !library.iter().any(|h| are_isomorphic(h, &p)) {
                    library.push(p.clone());
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    library.sort_by(|a, b| (a.order(), a.label().to_string()).cmp(&(b.order(), b.label().to_string())));
    library
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}
