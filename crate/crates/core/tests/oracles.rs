//! Library results against independent reference computations written here
//! from the definitions: the Magnus expansion, Witt's formula, a direct
//! interval-matching evaluator and the permutation expansion of determinants.

use std::collections::BTreeMap;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use letterlink::fox::fox_eval;
use letterlink::lie::{lie_coordinates, lie_image_of_bracket_word, lyndon_words, BracketTree, LieElement};
use letterlink::linalg::Matrix;
use letterlink::linking::eval_symbol;
use letterlink::sample::{random_balanced_word, random_bracket_tree, random_gamma, random_symbol, random_word};
use letterlink::symbols::Symbol;
use letterlink::words::{Alphabet, Generator, Word, WordExpr};

type Poly = BTreeMap<Vec<usize>, i64>;

fn mul(p: &Poly, q: &Poly, max_deg: usize) -> Poly {
    let mut out = Poly::new();
    for (a, x) in p {
        for (b, y) in q {
            if a.len() + b.len() > max_deg {
                continue;
            }
            let mut k = a.clone();
            k.extend(b);
            *out.entry(k).or_default() += x * y;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `a ↦ 1 + X_a`, `a⁻¹ ↦ 1 − X_a + X_a² − …`, truncated above `max_deg`.
fn magnus(w: &Word, alphabet: &Alphabet, max_deg: usize) -> Poly {
    let mut acc: Poly = [(vec![], 1)].into_iter().collect();
    for l in w.letters() {
        let i = alphabet.index_of(&l.gen).unwrap();
        let factor: Poly = if l.inverse {
            (0..=max_deg).map(|n| (vec![i; n], if n % 2 == 0 { 1 } else { -1 })).collect()
        } else {
            [(vec![], 1), (vec![i], 1)].into_iter().collect()
        };
        acc = mul(&acc, &factor, max_deg);
    }
    acc
}

fn tensor_of_tree(t: &BracketTree, alphabet: &Alphabet) -> Poly {
    match t {
        BracketTree::Leaf(g) => [(vec![alphabet.index_of(g).unwrap()], 1)].into_iter().collect(),
        BracketTree::Node(l, r) => {
            let (x, y) = (tensor_of_tree(l, alphabet), tensor_of_tree(r, alphabet));
            let mut out = mul(&x, &y, usize::MAX);
            for (k, c) in mul(&y, &x, usize::MAX) {
                *out.entry(k).or_default() -= c;
            }
            out.retain(|_, c| *c != 0);
            out
        }
    }
}

fn tensor_of_lie(e: &LieElement, alphabet: &Alphabet) -> Poly {
    let mut out = Poly::new();
    for (t, c) in e.iter() {
        assert!(c.is_integer());
        let c: i64 = c.to_integer().try_into().unwrap();
        for (k, x) in tensor_of_tree(t, alphabet) {
            *out.entry(k).or_default() += c * x;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn degree_part(p: &Poly, k: usize) -> Poly {
    p.iter().filter(|(m, _)| m.len() == k).map(|(m, &c)| (m.clone(), c)).collect()
}

#[test]
fn fox_augmentation_is_the_magnus_coefficient() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    for _ in 0..200 {
        let len = rng.gen_range(0..=10);
        let w = random_word(&mut rng, &abc, len);
        let m = magnus(&w, &abc, 4);
        let k = rng.gen_range(1..=4);
        let seq: Vec<usize> = (0..k).map(|_| rng.gen_range(0..3)).collect();
        let gens: Vec<Generator> = seq.iter().map(|&i| abc.gens()[i].clone()).collect();
        assert_eq!(fox_eval(&w, &gens), m.get(&seq).copied().unwrap_or(0), "{w} at {seq:?}");
    }
}

#[test]
fn lie_image_is_the_leading_magnus_term() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    for _ in 0..60 {
        let k = rng.gen_range(2..=4);
        let t = random_bracket_tree(&mut rng, &abc, k);
        let w = t.to_word();
        let lead = degree_part(&magnus(&w, &abc, k), k);
        assert_eq!(tensor_of_tree(&t, &abc), lead, "{t}");
        let coords = lie_coordinates(&w, k, &abc).unwrap();
        assert_eq!(tensor_of_lie(&coords, &abc), lead, "coordinates of {t}");
    }
}

#[test]
fn lie_image_of_products_adds() {
    let expr = letterlink::words::parse_word_expr("[[a,b],c] [[b,c],a]^2").unwrap();
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    let lambda = lie_image_of_bracket_word(&expr).unwrap();
    let lead = degree_part(&magnus(&expr.to_word(), &abc, 3), 3);
    assert_eq!(tensor_of_lie(&lambda, &abc), lead);
    assert!(matches!(expr, WordExpr::Product(_)));
}

fn mobius(n: usize) -> i64 {
    let (mut n, mut result, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

#[test]
fn lyndon_counts_follow_witt() {
    for names in [&["a", "b"][..], &["a", "b", "c"][..]] {
        let alphabet = Alphabet::from_names(names);
        let n = names.len() as i64;
        for k in 1..=7 {
            let witt: i64 = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| mobius(d) * n.pow((k / d) as u32))
                .sum::<i64>()
                / k as i64;
            assert_eq!(lyndon_words(k, &alphabet).len() as i64, witt, "n={n}, k={k}");
        }
    }
}

/// Letter-linking number computed with a random matching of signed tokens at
/// every level, straight from the interval definition.
fn phi_by_random_matching(sigma: &Symbol, w: &Word, rng: &mut ChaCha8Rng) -> Option<i64> {
    let list = list_by_random_matching(sigma, w, rng)?;
    Some(signed_count(&list, w))
}

fn signed_count(list: &[i64], w: &Word) -> i64 {
    list.iter().zip(w.letters()).map(|(m, l)| m * l.sign()).sum()
}

fn list_by_random_matching(sigma: &Symbol, w: &Word, rng: &mut ChaCha8Rng) -> Option<Vec<i64>> {
    let mut list: Vec<i64> = w
        .letters()
        .iter()
        .map(|l| i64::from(l.gen == *sigma.free_letter()))
        .collect();
    for child in sigma.children() {
        let inner = list_by_random_matching(child, w, rng)?;
        if signed_count(&inner, w) != 0 {
            return None;
        }
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (i, (&m, l)) in inner.iter().zip(w.letters()).enumerate() {
            let t = m * l.sign();
            for _ in 0..t.abs() {
                if t > 0 {
                    pos.push(i);
                } else {
                    neg.push(i);
                }
            }
        }
        neg.shuffle(rng);
        let mut cover = vec![0i64; w.len()];
        for (&p, &q) in pos.iter().zip(&neg) {
            let (s, e) = (p.min(q), p.max(q));
            let orientation = if s == p { 1 } else { -1 };
            for c in cover.iter_mut().take(e).skip(s + 1) {
                *c += orientation;
            }
        }
        for (m, c) in list.iter_mut().zip(cover) {
            *m *= c;
        }
    }
    Some(list)
}

#[test]
fn prefix_potentials_match_random_matchings() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    let mut defined = 0;
    for i in 0..400 {
        let w = if i % 2 == 0 {
            random_balanced_word(&mut rng, &abc, 16)
        } else {
            random_gamma(&mut rng, &abc, 2, 60)
        };
        let depth = rng.gen_range(0..=3);
        let sigma = random_symbol(&mut rng, &abc, depth);
        let fast = eval_symbol(&sigma, &w).ok();
        for _ in 0..3 {
            assert_eq!(phi_by_random_matching(&sigma, &w, &mut rng), fast, "{sigma} on {w}");
        }
        defined += usize::from(fast.is_some());
    }
    assert!(defined > 200);
}

fn det_by_permutations(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0;
    loop {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        total += sign * (0..n).map(|i| m[i][perm[i]]).product::<i64>();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

#[test]
fn determinants_match_the_permutation_expansion() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-4..=4)).collect()).collect();
        let det = Matrix::from_integers(&rows).determinant().unwrap();
        assert_eq!(det, BigRational::from_integer(det_by_permutations(&rows).into()), "{rows:?}");
    }
}
