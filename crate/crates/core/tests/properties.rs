use proptest::prelude::*;
use vpbraid::oracle::{abelianization, rep};
use vpbraid::simplicial::{degeneracy, face};
use vpbraid::{Alphabet, Letter, Word};

fn raw_letters(n: usize, max: usize) -> impl Strategy<Value = Vec<Letter>> {
    let rank = n * (n - 1);
    prop::collection::vec((0..rank, any::<bool>()), 0..max)
        .prop_map(|v| v.into_iter().map(|(g, inv)| Letter::new(g, inv)).collect())
}

fn word(n: usize, max: usize) -> impl Strategy<Value = Word> {
    raw_letters(n, max).prop_map(move |l| Word::from_letters(Alphabet::Lambda(n), l).unwrap())
}

/// Free reduction by repeatedly cancelling the leftmost adjacent pair.
fn naive_reduce(mut v: Vec<Letter>) -> Vec<Letter> {
    loop {
        let Some(p) = (1..v.len()).find(|&p| v[p] == v[p - 1].inverse()) else {
            return v;
        };
        v.drain(p - 1..=p);
    }
}

proptest! {
    #[test]
    fn reduction_is_confluent(l in raw_letters(3, 40), cut in 0usize..40) {
        let a = Alphabet::Lambda(3);
        let w = Word::from_letters(a, l.clone()).unwrap();
        prop_assert_eq!(w.letters().to_vec(), naive_reduce(l.clone()));
        let cut = cut.min(l.len());
        let left = Word::from_letters(a, l[..cut].to_vec()).unwrap();
        let right = Word::from_letters(a, l[cut..].to_vec()).unwrap();
        prop_assert_eq!(left.multiply(&right).unwrap(), w);
    }

    #[test]
    fn reduction_preserves_length_parity(l in raw_letters(4, 40)) {
        let w = Word::from_letters(Alphabet::Lambda(4), l.clone()).unwrap();
        prop_assert_eq!(w.len() % 2, l.len() % 2);
    }

    #[test]
    fn text_and_json_round_trip(w in word(4, 30)) {
        prop_assert_eq!(&Word::parse(w.alphabet(), &w.to_string()).unwrap(), &w);
        let j = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(&serde_json::from_str::<Word>(&j).unwrap(), &w);
    }

    #[test]
    fn faces_and_degeneracies_are_homomorphisms(u in word(4, 12), v in word(4, 12), i in 0usize..4) {
        let uv = u.multiply(&v).unwrap();
        prop_assert_eq!(face(i, &uv).unwrap(), face(i, &u).unwrap().multiply(&face(i, &v).unwrap()).unwrap());
        prop_assert_eq!(
            degeneracy(i, &uv).unwrap(),
            degeneracy(i, &u).unwrap().multiply(&degeneracy(i, &v).unwrap()).unwrap()
        );
        prop_assert_eq!(face(i, &u.invert()).unwrap(), face(i, &u).unwrap().invert());
    }

    #[test]
    fn representation_is_a_homomorphism(u in word(3, 10), v in word(3, 10)) {
        let uv = rep(&u.multiply(&v).unwrap()).unwrap();
        let composed = rep(&u).unwrap().compose(&rep(&v).unwrap()).unwrap();
        prop_assert_eq!(uv.images(), composed.images());
        prop_assert!(rep(&u).unwrap().compose(&rep(&u.invert()).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn abelianization_is_additive(u in word(4, 20), v in word(4, 20)) {
        let s = abelianization(&u.multiply(&v).unwrap());
        let t: Vec<i64> = abelianization(&u).iter().zip(abelianization(&v)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(s, t);
        prop_assert!(abelianization(&u.commutator(&v).unwrap()).iter().all(|&c| c == 0));
    }
}
