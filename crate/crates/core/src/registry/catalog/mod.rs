//! Identity entries grouped by subject.

use super::Entry;

mod barnes;
mod digamma;
mod duplication;
mod kummer;
mod limits;
mod ramanujan;
mod stieltjes;
mod zeta2;

pub(super) fn build() -> Vec<Entry> {
    let mut cat = Vec::new();
    limits::register(&mut cat);
    digamma::register(&mut cat);
    duplication::register(&mut cat);
    kummer::register(&mut cat);
    barnes::register(&mut cat);
    stieltjes::register(&mut cat);
    zeta2::register(&mut cat);
    ramanujan::register(&mut cat);
    cat
}
