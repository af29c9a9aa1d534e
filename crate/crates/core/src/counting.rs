//! Closed-form cardinalities of `End_G(X)`, `Aut_G(X)`, the fixing
//! elementary collapsings and their types, evaluated on a
//! [`BoxDecomposition`] with exact big-integer arithmetic.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::gset::BoxDecomposition;

/// Number of points of box `[K]` that a point with stabilizer exactly
/// `H` (the representative of `h_class`) can be sent to:
/// `α_[K] · [N_G(K):K] · Σ_{C ∈ U(H,K)} |C|`.
///
/// When all `N_H`-classes in `U(H, K)` have the same size this is the
/// familiar `α_[K] [N_G(K):K] |[K]_{N_H}| |U(H,K)|`.
pub fn box_term(b: &BoxDecomposition, h_class: usize, k_class: usize) -> BigUint {
    if !b.leq(h_class, k_class) {
        return BigUint::ZERO;
    }
    let h = b.representative(h_class);
    let k = b.representative(k_class);
    let overgroups: usize = b
        .lattice()
        .u_set(b.group(), h, k)
        .iter()
        .map(|c| c.len())
        .sum();
    BigUint::from(b.alpha(k_class)) * BigUint::from(b.normalizer_index(k_class)) * BigUint::from(overgroups)
}

/// Admissible images of a point whose stabilizer is the representative of
/// `h_class`.
pub fn target_options(b: &BoxDecomposition, h_class: usize) -> BigUint {
    b.classes()
        .iter()
        .filter(|&&k| b.leq(h_class, k))
        .map(|&k| box_term(b, h_class, k))
        .sum()
}

/// `|End_G(X)| = Π_[H] target_options([H])^α_[H]`.
pub fn count_endomorphisms(b: &BoxDecomposition) -> BigUint {
    b.classes()
        .iter()
        .map(|&c| target_options(b, c).pow(b.alpha(c) as u32))
        .product()
}

/// `|Aut_G(X)| = Π_[H] α_[H]! · [N_G(H):H]^α_[H]`.
pub fn count_automorphisms(b: &BoxDecomposition) -> BigUint {
    b.classes()
        .iter()
        .map(|&c| {
            let alpha = b.alpha(c);
            let fact: BigUint = (1..=alpha).map(BigUint::from).product();
            fact * BigUint::from(b.normalizer_index(c)).pow(alpha as u32)
        })
        .product()
}

/// Number of distinct fixing elementary collapsings:
/// `Σ_[H] α_[H] (Σ_{[K] ⪈ [H]} box_term(H, K) + (α_[H] − 1)[N_G(H):H])`.
pub fn count_fixing_collapsings(b: &BoxDecomposition) -> BigUint {
    b.classes()
        .iter()
        .map(|&h| {
            let alpha = b.alpha(h);
            let above: BigUint = b
                .classes()
                .iter()
                .filter(|&&k| k != h && b.leq(h, k))
                .map(|&k| box_term(b, h, k))
                .sum();
            let same_box = BigUint::from((alpha - 1) * b.normalizer_index(h));
            BigUint::from(alpha) * (above + same_box)
        })
        .sum()
}

/// `|U(H)|` for the representative `H` of a class.
pub fn u_size(b: &BoxDecomposition, h_class: usize) -> usize {
    b.lattice()
        .u_union(b.group(), b.representative(h_class))
        .len()
}

/// Number of realizable collapsing types: pairs `(H, [K]_{N_H})` with
/// `[H] ∈ Conj_G(X)` and `[K]_{N_H} ∈ U(H)` such that `[K] ∈ Conj_G(X)`,
/// and, when `[K] = [H]`, the box of `H` has a second orbit.
pub fn count_collapsing_types(b: &BoxDecomposition) -> usize {
    let lattice = b.lattice();
    b.classes()
        .iter()
        .map(|&h| {
            lattice
                .u_union(b.group(), b.representative(h))
                .iter()
                .filter(|class| {
                    let first = class.iter().next().expect("N-classes are non-empty");
                    let k = lattice.class_id_of(first);
                    b.alpha(k) > 0 && (k != h || b.alpha(h) >= 2)
                })
                .count()
        })
        .sum()
}

/// All four counts plus the per-class ingredients they are built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CardinalityReport {
    pub end_count: BigUint,
    pub aut_count: BigUint,
    pub fixing_collapsing_count: BigUint,
    pub collapsing_type_count: usize,
    pub per_class_options: BTreeMap<usize, BigUint>,
    pub alpha: BTreeMap<usize, usize>,
    /// `[N_G(H):H]` per class.
    pub indices: BTreeMap<usize, usize>,
    /// `Σ_[H] |U(H)|` over `Conj_G(X)`.
    pub u_total: usize,
    /// `u_total − collapsing_type_count`: the correction term implied by
    /// the realizability count.
    pub kappa: usize,
}

impl CardinalityReport {
    pub fn new(b: &BoxDecomposition) -> Self {
        let collapsing_type_count = count_collapsing_types(b);
        let u_total = b.classes().iter().map(|&c| u_size(b, c)).sum();
        CardinalityReport {
            end_count: count_endomorphisms(b),
            aut_count: count_automorphisms(b),
            fixing_collapsing_count: count_fixing_collapsings(b),
            collapsing_type_count,
            per_class_options: b
                .classes()
                .iter()
                .map(|&c| (c, target_options(b, c)))
                .collect(),
            alpha: b.alphas().clone(),
            indices: b
                .classes()
                .iter()
                .map(|&c| (c, b.normalizer_index(c)))
                .collect(),
            u_total,
            kappa: u_total - collapsing_type_count,
        }
    }
}
