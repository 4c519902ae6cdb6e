use super::{check_m, AxiomReport, SystemKind, Witness};
use crate::set::{elements, Mask, SetFamily};

fn exchange(fam: &SetFamily, b1: Mask, b2: Mask, x: usize) -> bool {
    elements(b2 & !b1).any(|y| fam.contains((b1 & !(1 << x)) | (1 << y)))
}

fn b2(fam: &SetFamily) -> Result<(), Witness> {
    for &b1 in fam.members() {
        for &b2 in fam.members() {
            for x in elements(b1 & !b2) {
                if !exchange(fam, b1, b2, x) {
                    return Err(Witness::sets([b1, b2]).with_elements([x]));
                }
            }
        }
    }
    Ok(())
}

/// Check (B1), (B2) and (BM); (BM) is (M) on the down-closure.
pub fn verify_bases(family: &SetFamily) -> AxiomReport {
    let mut report = AxiomReport::new(SystemKind::Basis, family.ground().clone());
    report.record("B1", if family.is_empty() { Err(Witness::default()) } else { Ok(()) });
    report.record("B2", b2(family));
    let down = family.down_closure().table();
    report.record("BM", check_m(family.ground().len(), |m| down[m as usize]));
    report
}

pub(super) fn replay(family: &SetFamily, name: &str, w: &Witness) -> bool {
    match (name, w.sets.as_slice(), w.elements.as_slice()) {
        ("B1", _, _) => family.is_empty(),
        ("B2", &[b1, b2], &[x]) => {
            family.contains(b1) && family.contains(b2) && b1 & !b2 & (1 << x) != 0 && !exchange(family, b1, b2, x)
        }
        ("BM", &[i, x], _) => {
            let down = family.down_closure().table();
            down[i as usize] && super::maximal_between(i, x, |m| down[m as usize]).is_none()
        }
        _ => false,
    }
}
