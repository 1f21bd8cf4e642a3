//! Cochain complexes, resolutions, and Hochschild cochains.
//!
//! Dense cochains are indexed by tuples `(x_1, ..., x_n)` of group elements
//! encoded little-endian in base m: `index = Σ_t exp(x_t) · m^(t-1)`.

mod bar;
mod cochain;
mod hochschild;
mod transfer;

pub use bar::{bar_augmentation, bar_diff, minimal_diff, BarElt};
pub use cochain::{
    coboundary_witness, cochain_diff, differential_matrix, random_cocycle, tensor_coboundary_witness, tensor_diff,
    GroupCochain, TensorCochain,
};
pub use hochschild::{
    hoch_bracket, hoch_circle, hoch_circle_i, hoch_diff, identity_cochain, multiplication_cochain, HochCochain,
};
pub use transfer::{phi, psi, verify_transfer};

use crate::group_algebra::GroupElt;

/// Index of a tuple in the dense layout.
pub fn encode(m: usize, tuple: &[GroupElt]) -> usize {
    tuple.iter().rev().fold(0, |acc, x| acc * m + x.exp())
}

/// Inverse of [`encode`], writing into `out` (its length is the degree).
pub fn decode_into(m: usize, mut index: usize, out: &mut [GroupElt]) {
    for slot in out.iter_mut() {
        *slot = GroupElt(index % m);
        index /= m;
    }
}

pub fn decode(m: usize, n: usize, index: usize) -> Vec<GroupElt> {
    let mut out = vec![GroupElt::IDENTITY; n];
    decode_into(m, index, &mut out);
    out
}

/// All `m^n` tuples of exponents in index order.
pub fn tuples(m: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let count = m.pow(n as u32);
    (0..count).map(move |mut idx| {
        let mut t = vec![0; n];
        for slot in t.iter_mut() {
            *slot = idx % m;
            idx /= m;
        }
        t
    })
}

/// All `m^n` tuples of group elements in index order.
pub fn elt_tuples(m: usize, n: usize) -> impl Iterator<Item = Vec<GroupElt>> {
    (0..m.pow(n as u32)).map(move |idx| decode(m, n, idx))
}

pub(crate) fn fmt_tuple(t: &[GroupElt]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join("|"))
}
