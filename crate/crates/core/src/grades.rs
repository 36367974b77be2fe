//! Pointwise operations on raw grade slices. Every slice holds chain numerators
//! indexed by universe position.

use alloc::vec::Vec;

pub(crate) fn leq(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub(crate) fn join(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn meet(a: &[u16], b: &[u16]) -> Vec<u16> {
    a.iter().zip(b).map(|(x, y)| *x.min(y)).collect()
}

pub(crate) fn join_into(acc: &mut [u16], b: &[u16]) {
    for (x, y) in acc.iter_mut().zip(b) {
        if *y > *x {
            *x = *y;
        }
    }
}

pub(crate) fn complement(a: &[u16], top: u16) -> Vec<u16> {
    a.iter().map(|x| top - x).collect()
}

pub(crate) fn is_zero(a: &[u16]) -> bool {
    a.iter().all(|x| *x == 0)
}

/// `a ≤ Co(b)`, i.e. `a(x) + b(x) ≤ 1` everywhere.
pub(crate) fn leq_complement(a: &[u16], b: &[u16], top: u16) -> bool {
    a.iter().zip(b).all(|(x, y)| x + y <= top)
}

/// Mixed-radix code with the first element most significant, so that code order
/// is the lexicographic order over the universe ordering.
pub(crate) fn encode(a: &[u16], radix: usize) -> usize {
    a.iter().fold(0usize, |acc, g| acc * radix + *g as usize)
}

pub(crate) fn decode_into(mut code: usize, radix: usize, out: &mut [u16]) {
    for slot in out.iter_mut().rev() {
        *slot = (code % radix) as u16;
        code /= radix;
    }
}
