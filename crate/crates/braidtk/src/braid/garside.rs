use super::BraidWord;

/// Returns `u` with `σ_i · u = w` in the positive braid monoid, if it exists.
pub fn left_divide(w: &[usize], i: usize) -> Option<Vec<usize>> {
    let (&j, rest) = w.split_first()?;
    if j == i {
        return Some(rest.to_vec());
    }
    if i.abs_diff(j) >= 2 {
        let mut u = left_divide(rest, i)?;
        u.insert(0, j);
        return Some(u);
    }
    // σ_i and σ_j have least common multiple σ_iσ_jσ_i = σ_jσ_iσ_j.
    let v = left_divide(rest, i)?;
    let u = left_divide(&v, j)?;
    let mut out = vec![j, i];
    out.extend(u);
    Some(out)
}

/// Whether the half twist Δ_N is a left divisor of `w`.
pub fn half_twist_divides(w: &BraidWord) -> bool {
    let n = w.strands();
    let mut rest = w.letters().to_vec();
    for k in 1..n {
        for i in (1..=k).rev() {
            match left_divide(&rest, i) {
                Some(u) => rest = u,
                None => return false,
            }
        }
    }
    true
}
