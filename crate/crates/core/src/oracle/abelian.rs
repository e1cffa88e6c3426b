use crate::word::Word;

/// Exponent-sum vector of `u`, one coordinate per generator in alphabet order.
///
/// The relators of `VP_n` all abelianize to zero, so this is an invariant of
/// the element of `VP_n` and a nonzero vector refutes triviality.
pub fn abelianization(u: &Word) -> Vec<i64> {
    let mut v = vec![0i64; u.alphabet().rank()];
    for l in u.letters() {
        v[l.gen()] += i64::from(l.exponent());
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::vp_presentation;
    use crate::word::Alphabet;

    #[test]
    fn exponent_sums() {
        let u = Word::parse(Alphabet::Lambda(2), "l[1,2] l[2,1]^-1").unwrap();
        assert_eq!(abelianization(&u), vec![1, -1]);
        let u = Word::parse(Alphabet::Lambda(3), "l[1,3] l[1,3] l[3,2]^-1").unwrap();
        assert_eq!(abelianization(&u), vec![0, 2, 0, 0, 0, -1]);
    }

    #[test]
    fn relators_abelianize_to_zero() {
        for n in 2..=6 {
            for r in vp_presentation(n).unwrap().relators {
                assert!(abelianization(&r).iter().all(|&c| c == 0));
            }
        }
    }
}
