//! The acceptance suite: twelve checks, each reporting pass or fail with a short detail.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eil::{
    distinct_reduce, enumerate_distinct_vertex_graphs, eval_graph, reduce_full, SymbolGraph,
};
use crate::fox::{fox_derivative, fox_eval, iterated_fox, parse_group_ring, GroupRingElement};
use crate::lie::{
    bracketings, extended_pairing, lyndon_trees_of_multidegree,
    multidegrees, pair_graph_tree, BracketTree, LieElement,
};
use crate::linalg::Matrix;
use crate::linking::{
    enumerate_coboundings, eval_symbol, eval_symbol_sum, link_many, link_via_cobounding, LinkError,
    List,
};
use crate::sample::{
    all_eil_graphs, all_permutations, random_ambient_eil_graph, random_balanced_word,
    random_bracketing, random_gamma, random_symbol, random_symbol_graph, random_word, uc_trees,
};
use crate::symbols::{leibniz_terms, parse_symbol, Symbol};
use crate::words::{Alphabet, Generator, GeneratorMap, Word};
use crate::worked;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scale {
    Small,
    Full,
}

impl Scale {
    fn factor(self) -> usize {
        match self {
            Scale::Small => 1,
            Scale::Full => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

type Check = fn(&mut ChaCha8Rng, usize) -> Result<String, String>;

const CHECKS: [(&str, Check); 12] = [
    ("worked linking number", worked_linking),
    ("worked Fox derivative", worked_fox),
    ("four-star pairing", four_star_pairing),
    ("weight-five matrices", weight_five_matrices),
    ("surjectivity ranks", surjectivity_ranks),
    ("tree-graph duality", tree_graph_duality),
    ("reduction-order independence", order_independence),
    ("cobounding independence", cobounding_independence),
    ("lower central vanishing", lower_central_vanishing),
    ("identity suite", identity_suite),
    ("distinct-vertex reduction", distinct_reduction),
    ("Fox-linking depth two", fox_linking_depth_two),
];

pub const CHECK_COUNT: usize = CHECKS.len();

/// Run criterion `id` (1-based). Each criterion gets its own generator derived from `seed`.
pub fn run(id: usize, seed: u64, scale: Scale) -> CheckResult {
    let (name, check) = CHECKS[id - 1];
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ id as u64);
    let outcome = check(&mut rng, scale.factor());
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult {
        id,
        name,
        passed,
        detail,
    }
}

pub fn run_all(seed: u64, scale: Scale) -> Vec<CheckResult> {
    (1..=CHECK_COUNT).map(|id| run(id, seed, scale)).collect()
}

fn gens(names: &str) -> Vec<Generator> {
    names.split(',').map(Generator::new).collect()
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn symbol(text: &str) -> Symbol {
    parse_symbol(text).expect("fixed symbol")
}

fn worked_linking(_: &mut ChaCha8Rng, _: usize) -> Result<String, String> {
    let w = worked::running_word();
    let value = eval_symbol(&symbol("((a)b)a"), &w).map_err(|e| e.to_string())?;
    ensure(value == 4, || format!("expected 4, got {value}"))?;
    let a = Generator::new("a");
    let b = Generator::new("b");
    let la = List::standard(&w, &a);
    let lb = List::standard(&w, &b);
    let linked = la.link(&lb).map_err(|e| e.to_string())?;
    let got: Vec<i64> = [3, 6, 11, 14].iter().map(|&p| linked.assoc(p)).collect();
    ensure(got == [2, 3, 1, 0], || format!("b multiplicities {got:?}"))?;
    let literal = crate::words::parse_word_expr("[a a,[b,a c]]")
        .expect("fixed")
        .to_word();
    let unreduced = eval_symbol(&symbol("((a)b)a"), &literal).map_err(|e| e.to_string())?;
    ensure(unreduced == 4, || format!("unreduced word gives {unreduced}"))?;
    Ok("value 4, b multiplicities 2,3,1,0".into())
}

fn worked_fox(_: &mut ChaCha8Rng, _: usize) -> Result<String, String> {
    let w = worked::running_word();
    let expected = [
        ("a", "1+a+aab-aabacb^-1c^-1a^-1-aabacb^-1c^-1a^-1a^-1-aabacb^-1c^-1a^-1a^-1cbc^-1a^-1"),
        ("b,a", "-2aa+3aabacb^-1-aabacb^-1c^-1a^-1a^-1c"),
        ("a,b,a", "2aab+aabacb^-1c^-1a^-1+aabacb^-1c^-1a^-1a^-1"),
    ];
    for (seq, text) in expected {
        let want = parse_group_ring(text).map_err(|e| e.to_string())?;
        let got = iterated_fox(&w, &gens(seq));
        ensure(got == want, || format!("∂_{seq}: got {got}"))?;
    }
    let value = fox_eval(&w, &gens("a,b,a"));
    ensure(value == 4, || format!("value {value}"))?;
    Ok("three derivatives match term for term, value 4".into())
}

fn four_star_pairing(_: &mut ChaCha8Rng, _: usize) -> Result<String, String> {
    let g = worked::four_star();
    let t = crate::lie::parse_tree("[a,[a,[a,[a,b]]]]").expect("fixed");
    let p = pair_graph_tree(&g, &t).map_err(|e| e.to_string())?;
    ensure(p == 24, || format!("pairing {p}"))?;
    let phi = eval_graph(&g, &t.to_word()).map_err(|e| e.to_string())?;
    ensure(phi == q(24), || format!("Φ on the commutator gives {phi}"))?;
    Ok("pairing 24, Φ on the commutator 24".into())
}

fn pairing_matrix(rows: &[SymbolGraph], cols: &[BracketTree]) -> Result<Matrix, String> {
    worked::pairing_matrix(rows, cols).map_err(|e| e.to_string())
}

fn weight_five_matrices(_: &mut ChaCha8Rng, _: usize) -> Result<String, String> {
    let cases = [((3, 2), vec![vec![4, -2], vec![4, 4]]), ((2, 3), vec![vec![6, -2], vec![0, 4]])];
    for ((a, b), want) in cases {
        let (rows, cols) = worked::weight_five_block(a, b).expect("known block");
        let m = pairing_matrix(&rows, &cols)?;
        ensure(m == Matrix::from_integers(&want), || format!("({a},{b}) gives {m}"))?;
        let det = m.determinant().expect("square");
        ensure(det == q(24), || format!("({a},{b}) determinant {det}"))?;
    }
    Ok("(3,2) [[4,-2],[4,4]], (2,3) [[6,-2],[0,4]], determinants 24".into())
}

fn surjectivity_ranks(_: &mut ChaCha8Rng, _: usize) -> Result<String, String> {
    let mut blocks = 0;
    for (names, max_weight) in [(&["a", "b"][..], 5), (&["a", "b", "c"][..], 4)] {
        let alphabet = Alphabet::from_names(names);
        for k in 1..=max_weight {
            for md in multidegrees(k, &alphabet) {
                let trees = lyndon_trees_of_multidegree(&md);
                let graphs = enumerate_distinct_vertex_graphs(&md).map_err(|e| e.to_string())?;
                let rank = pairing_matrix(&graphs, &trees)?.rank();
                ensure(rank == trees.len(), || {
                    format!("multidegree {md:?}: rank {rank} of {}", trees.len())
                })?;
                blocks += 1;
            }
        }
    }
    Ok(format!("{blocks} multidegree blocks at full column rank"))
}

fn tree_graph_duality(_: &mut ChaCha8Rng, _: usize) -> Result<String, String> {
    let mut checks = 0;
    for n in 1..=4 {
        let letters = gens(&["a", "b", "c", "d"][..n].join(","));
        let trees = uc_trees(&letters);
        for g in all_eil_graphs(&letters) {
            for t in &trees {
                let phi = eval_graph(&g, &t.to_word()).map_err(|e| e.to_string())?;
                let pair = pair_graph_tree(&g, t).map_err(|e| e.to_string())?;
                ensure(phi == q(pair), || format!("{g} on {t}: Φ {phi}, pairing {pair}"))?;
                checks += 1;
            }
        }
    }
    Ok(format!("{checks} graph-tree pairs for n ≤ 4"))
}

/// Every sequence of `n - 1` distinct vertex ids.
fn all_orders(g: &SymbolGraph) -> Vec<Vec<String>> {
    let ids: Vec<String> = g.vertices().iter().map(|v| v.id().to_string()).collect();
    let mut out = Vec::new();
    for p in all_permutations(&ids) {
        let order = p[..ids.len() - 1].to_vec();
        if !out.contains(&order) {
            out.push(order);
        }
    }
    out
}

fn order_independence(rng: &mut ChaCha8Rng, scale: usize) -> Result<String, String> {
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    let (mut orders_checked, mut evaluations) = (0, 0);
    for _ in 0..25 * scale {
        let g = loop {
            let n = rng.gen_range(2..=5);
            let g = random_symbol_graph(rng, &abc, n, 0.2);
            if g.weight() <= 6 {
                break g;
            }
        };
        let mut sums = Vec::new();
        for order in all_orders(&g) {
            let refs: Vec<&str> = order.iter().map(String::as_str).collect();
            if let Ok(s) = reduce_full(&g, &refs) {
                sums.push((order, s));
            }
        }
        ensure(!sums.is_empty(), || format!("{g} has no valid order"))?;
        for _ in 0..10 {
            let w = random_gamma(rng, &abc, g.weight() - 1, 300);
            let values: Vec<BigRational> = sums
                .iter()
                .map(|(_, s)| eval_symbol_sum(s, &w).map_err(|e| format!("{g}: {e}")))
                .collect::<Result<_, _>>()?;
            if let Some(i) = values.iter().position(|v| *v != values[0]) {
                return Err(format!(
                    "{g}: order {:?} gives {} but {:?} gives {}",
                    sums[0].0, values[0], sums[i].0, values[i]
                ));
            }
            evaluations += values.len();
        }
        orders_checked += sums.len();
    }
    Ok(format!(
        "{} graphs, {orders_checked} valid orders, {evaluations} evaluations agree",
        25 * scale
    ))
}

enum OracleFailure {
    Undefined,
    TooLarge,
    Disagree(String),
}

/// Every list `Λ_σ(w)` obtainable from some choice of coboundings at each level.
fn oracle_lists<'w>(sigma: &Symbol, w: &'w Word) -> Result<Vec<List<'w>>, OracleFailure> {
    let mut lists = vec![List::standard(w, sigma.free_letter())];
    for child in sigma.children() {
        let child_lists = oracle_lists(child, w)?;
        let count = child_lists[0].count();
        if child_lists.iter().any(|l| l.count() != count) {
            return Err(OracleFailure::Disagree(format!("counts of {child} differ between choices")));
        }
        if count != 0 {
            return Err(OracleFailure::Undefined);
        }
        let mut next = Vec::new();
        for cl in &child_lists {
            let coboundings = match enumerate_coboundings(cl, 12) {
                Ok(c) => c,
                Err(LinkError::TooLarge { .. }) => return Err(OracleFailure::TooLarge),
                Err(e) => return Err(OracleFailure::Disagree(e.to_string())),
            };
            for c in &coboundings {
                for l in &lists {
                    next.push(link_via_cobounding(c, l).map_err(|e| OracleFailure::Disagree(e.to_string()))?);
                }
            }
        }
        if next.len() > 20_000 {
            return Err(OracleFailure::TooLarge);
        }
        lists = next;
    }
    Ok(lists)
}

fn cobounding_independence(rng: &mut ChaCha8Rng, scale: usize) -> Result<String, String> {
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    let (mut checked, mut defined, mut skipped, mut choices) = (0, 0, 0, 0);
    while checked < 200 * scale {
        let w = random_balanced_word(rng, &abc, 12);
        let depth = rng.gen_range(1..=2);
        let sigma = random_symbol(rng, &abc, depth);
        let fast = eval_symbol(&sigma, &w);
        match oracle_lists(&sigma, &w) {
            Err(OracleFailure::TooLarge) => skipped += 1,
            Err(OracleFailure::Disagree(d)) => return Err(format!("{sigma} on {w}: {d}")),
            Err(OracleFailure::Undefined) => {
                ensure(fast.is_err(), || format!("{sigma} on {w}: oracle undefined, fast {fast:?}"))?;
                checked += 1;
            }
            Ok(lists) => {
                let values: Vec<i64> = lists.iter().map(List::count).collect();
                ensure(values.iter().all(|&v| v == values[0]), || {
                    format!("{sigma} on {w}: choices give {values:?}")
                })?;
                ensure(fast.as_ref().ok() == Some(&values[0]), || {
                    format!("{sigma} on {w}: oracle {}, fast {fast:?}", values[0])
                })?;
                checked += 1;
                defined += 1;
                choices += lists.len();
            }
        }
    }
    Ok(format!(
        "{checked} words ({defined} defined, {choices} cobounding choices), {skipped} over the token bound"
    ))
}

fn lower_central_vanishing(rng: &mut ChaCha8Rng, scale: usize) -> Result<String, String> {
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    for _ in 0..50 * scale {
        let d = rng.gen_range(0..=3);
        let sigma = random_symbol(rng, &abc, d);
        let w = random_gamma(rng, &abc, d + 1, 400);
        let v = eval_symbol(&sigma, &w).map_err(|e| format!("{sigma} on {w}: {e}"))?;
        ensure(v == 0, || format!("{sigma} on {w} gives {v}"))?;
    }
    Ok(format!("{} pairs vanish", 50 * scale))
}

fn random_symbol_rooted(rng: &mut ChaCha8Rng, alphabet: &Alphabet, depth: usize, root: &Generator) -> Symbol {
    loop {
        let s = random_symbol(rng, alphabet, depth);
        if s.free_letter() == root {
            return s;
        }
    }
}

fn identity_suite(rng: &mut ChaCha8Rng, scale: usize) -> Result<String, String> {
    let n = 50 * scale;
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    let abcd = Alphabet::from_names(&["a", "b", "c", "d"]);
    let err = |e: crate::linking::Undefined| e.to_string();
    let mut nonzero: BTreeMap<&str, usize> = BTreeMap::new();

    for _ in 0..n {
        let d = rng.gen_range(0..=2);
        let sigma = random_symbol(rng, &abc, d);
        let u = random_gamma(rng, &abc, d, 200);
        let v = random_gamma(rng, &abc, d, 200);
        let (pu, pv) = (eval_symbol(&sigma, &u).map_err(err)?, eval_symbol(&sigma, &v).map_err(err)?);
        let puv = eval_symbol(&sigma, &u.multiply(&v)).map_err(err)?;
        ensure(puv == pu + pv, || format!("additivity: {sigma} on {u} · {v}"))?;
        let pinv = eval_symbol(&sigma, &u.invert()).map_err(err)?;
        ensure(pinv == -pu, || format!("inverse: {sigma} on {u}"))?;
    }

    for _ in 0..n {
        let (ds, dt) = (rng.gen_range(0..=1), rng.gen_range(0..=1));
        let sigma = random_symbol(rng, &abc, ds);
        let tau = loop {
            let t = random_symbol(rng, &abc, dt);
            if t.free_letter() != sigma.free_letter() {
                break t;
            }
        };
        let m = ds.max(dt);
        let v = biased_gamma(rng, &abc, &sigma.letters(), m, 150);
        let w = biased_gamma(rng, &abc, &tau.letters(), m, 150);
        let joined = tau.with_child(sigma.clone()).expect("distinct free letters");
        let lhs = eval_symbol(&joined, &Word::commutator(&v, &w)).map_err(err)?;
        let rhs = eval_symbol(&sigma, &v).map_err(err)? * eval_symbol(&tau, &w).map_err(err)?
            - eval_symbol(&tau, &v).map_err(err)? * eval_symbol(&sigma, &w).map_err(err)?;
        ensure(lhs == rhs, || format!("cobracket: ({sigma}){tau} on [{v}, {w}]: {lhs} vs {rhs}"))?;
        *nonzero.entry("cobracket").or_default() += usize::from(lhs != 0);
    }

    for k in 2..=4 {
        for _ in 0..n {
            let mut roots = abcd.gens().to_vec();
            roots.shuffle(rng);
            let depths: Vec<usize> = (0..k).map(|_| if k == 4 { 0 } else { rng.gen_range(0..=1) }).collect();
            let parts: Vec<Symbol> = (0..k)
                .map(|i| random_symbol_rooted(rng, &abcd, depths[i], &roots[i]))
                .collect();
            let sum = leibniz_terms(&parts).map_err(|e| e.to_string())?;
            let depth = depths.iter().sum::<usize>() + k - 1;
            let letters: Vec<Generator> = parts.iter().flat_map(Symbol::letters).collect();
            let w = biased_gamma(rng, &abcd, &letters, depth, 300);
            let total = eval_symbol_sum(&sum, &w).map_err(err)?;
            ensure(total.is_zero(), || format!("Leibniz k={k}: {sum} on {w} gives {total}"))?;
            let any_term = sum.iter().any(|(t, _)| eval_symbol(t, &w).is_ok_and(|x| x != 0));
            *nonzero.entry(["", "", "Leibniz-2", "Leibniz-3", "Leibniz-4"][k]).or_default() += usize::from(any_term);
        }
    }

    let (a, b, c) = (Generator::new("a"), Generator::new("b"), Generator::new("c"));
    let upper = symbol("(a(b))c");
    let lower = symbol("((a)b)c");
    for _ in 0..n {
        let w = random_gamma(rng, &abc, 2, 200);
        let (la, lb, lc) = (List::standard(&w, &a), List::standard(&w, &b), List::standard(&w, &c));
        let both = link_many(&[&la, &lb], &lc).map_err(|e| e.to_string())?;
        let x = List::from_symbol(&upper, &w).map_err(err)?;
        let y = List::from_symbol(&lower, &w).map_err(err)?;
        for p in 1..=w.len() {
            ensure(both.assoc(p) == x.assoc(p) + y.assoc(p), || {
                format!("three-list at position {p} of {w}")
            })?;
        }
    }

    for _ in 0..n {
        let len = rng.gen_range(0..=8);
        let u = random_word(rng, &abc, len);
        let len = rng.gen_range(0..=8);
        let v = random_word(rng, &abc, len);
        let g = abc.gens().choose(rng).unwrap().clone();
        let lhs = fox_derivative(&GroupRingElement::word(&u.multiply(&v)), &g);
        let du = fox_derivative(&GroupRingElement::word(&u), &g);
        let dv = fox_derivative(&GroupRingElement::word(&v), &g);
        let rhs = &du + &(&GroupRingElement::word(&u) * &dv);
        ensure(lhs == rhs, || format!("Fox product rule: {u} · {v} at {g}"))?;
        let x = random_element(rng, &abc);
        let y = random_element(rng, &abc);
        let sum = fox_derivative(&(&x + &y), &g);
        ensure(sum == &fox_derivative(&x, &g) + &fox_derivative(&y, &g), || {
            format!("Fox additivity at {g}")
        })?;
        ensure(fox_derivative(&GroupRingElement::word(&Word::generator(&g)), &g) == GroupRingElement::one(), || {
            "∂_g(g) ≠ 1".into()
        })?;
    }

    let ab = Alphabet::from_names(&["a", "b"]);
    for _ in 0..n {
        let i = rng.gen_range(1..=3);
        let j = rng.gen_range(1..=(5 - i).min(3));
        let seq: Vec<Generator> = (0..i + j).map(|_| ab.gens().choose(rng).unwrap().clone()).collect();
        let u = biased_gamma(rng, &ab, &seq[..i], i - 1, 60);
        let v = biased_gamma(rng, &ab, &seq[i..], j - 1, 60);
        let lhs = fox_eval(&Word::commutator(&u, &v), &seq);
        let rhs = fox_eval(&u, &seq[..i]) * fox_eval(&v, &seq[i..])
            - fox_eval(&u, &seq[j..]) * fox_eval(&v, &seq[..j]);
        ensure(lhs == rhs, || format!("commutator Fox formula: [{u}, {v}] at {seq:?}"))?;
        *nonzero.entry("commutator Fox").or_default() += usize::from(lhs != 0);
    }

    let mut lifted = 0;
    while lifted < n {
        if let Some(value) = lift_instance(rng)? {
            lifted += 1;
            *nonzero.entry("lifts").or_default() += usize::from(value != 0);
        }
    }

    Ok(format!(
        "{n} instances each: additivity, inverse, cobracket, Leibniz k=2,3,4, three-list, Fox rules, commutator Fox formula, lifts; nonzero instances {nonzero:?}"
    ))
}

/// An element of `γ_depth` built around `letters`: a random bracketing of them,
/// padded with random letters to weight `depth + 1`, times a random `γ_depth` word.
fn biased_gamma(
    rng: &mut ChaCha8Rng,
    alphabet: &Alphabet,
    letters: &[Generator],
    depth: usize,
    budget: usize,
) -> Word {
    let mut leaves = letters.to_vec();
    while leaves.len() < depth + 1 {
        leaves.push(alphabet.gens().choose(rng).unwrap().clone());
    }
    leaves.truncate(depth + 1);
    leaves.shuffle(rng);
    let core = random_bracketing(rng, &leaves).to_word();
    if rng.gen_bool(0.5) {
        core.multiply(&random_gamma(rng, alphabet, depth, budget))
    } else {
        core
    }
}

fn random_element(rng: &mut ChaCha8Rng, alphabet: &Alphabet) -> GroupRingElement {
    let mut x = GroupRingElement::zero();
    for _ in 0..3 {
        let len = rng.gen_range(0..=5);
        let w = random_word(rng, alphabet, len);
        x.add_term(&w, rng.gen_range(-3..=3));
    }
    x
}

/// One instance of `Φ_{f_*σ}(f_*w) = Σ_{p ∈ Σ_f} Φ_{p·σ}(w)`; `None` when the
/// pushed-forward symbol is not valid and the draw is discarded.
fn lift_instance(rng: &mut ChaCha8Rng) -> Result<Option<i64>, String> {
    let n = rng.gen_range(2..=5);
    let source: Vec<Generator> = (1..=n).map(|i| Generator::new(&format!("s{i}"))).collect();
    let targets = gens("a,b,c");
    let mut f = GeneratorMap::new();
    loop {
        for s in &source {
            f.insert(s.clone(), targets.choose(rng).unwrap().clone());
        }
        let images: std::collections::BTreeSet<_> = f.iter().map(|(_, t)| t.clone()).collect();
        if images.len() < n {
            break;
        }
    }
    let mut order = source.clone();
    order.shuffle(rng);
    let w = random_bracketing(rng, &order).to_word();
    let sigma = random_distinct_symbol(rng, &source);
    let Ok(pushed) = sigma.relabel(&f) else {
        return Ok(None);
    };
    let lhs = eval_symbol(&pushed, &w.relabel(&f).expect("total map")).map_err(|e| e.to_string())?;
    let mut rhs = 0;
    for p in all_permutations(&source) {
        let perm: BTreeMap<&Generator, &Generator> = source.iter().zip(p.iter()).collect();
        if perm.iter().any(|(s, t)| f.image(s) != f.image(t)) {
            continue;
        }
        let mut map = GeneratorMap::new();
        for (s, t) in perm {
            map.insert(s.clone(), t.clone());
        }
        let moved = sigma.relabel(&map).expect("bijection");
        rhs += eval_symbol(&moved, &w).map_err(|e| e.to_string())?;
    }
    ensure(lhs == rhs, || format!("lifts: {sigma} on {w}: {lhs} vs {rhs}"))?;
    Ok(Some(lhs))
}

/// A random symbol using each of `letters` exactly once.
fn random_distinct_symbol(rng: &mut ChaCha8Rng, letters: &[Generator]) -> Symbol {
    let mut labels = letters.to_vec();
    labels.shuffle(rng);
    let parent: Vec<usize> = (0..labels.len())
        .map(|i| if i == 0 { usize::MAX } else { rng.gen_range(0..i) })
        .collect();
    fn build(v: usize, labels: &[Generator], parent: &[usize]) -> Symbol {
        let kids = (0..labels.len())
            .filter(|&u| parent[u] == v)
            .map(|u| build(u, labels, parent))
            .collect();
        Symbol::new(labels[v].clone(), kids).expect("distinct letters")
    }
    build(0, &labels, &parent)
}

fn distinct_reduction(rng: &mut ChaCha8Rng, scale: usize) -> Result<String, String> {
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    let mut pairings = 0;
    for _ in 0..20 * scale {
        let n = rng.gen_range(2..=6);
        let g = random_ambient_eil_graph(rng, &abc, n);
        let h = distinct_reduce(&g).map_err(|e| format!("{g}: {e}"))?;
        ensure(h.iter().all(|(x, _)| x.is_distinct_vertex()), || format!("{g}: output keeps a homogeneous edge"))?;
        for t in lyndon_trees_of_multidegree(&g.multidegree()) {
            let lhs = extended_pairing(&h, &LieElement::single(t.clone())).map_err(|e| e.to_string())?;
            let rhs = pair_graph_tree(&g, &t).map_err(|e| e.to_string())?;
            ensure(lhs == q(rhs), || format!("{g} against {t}: {lhs} vs {rhs}"))?;
            pairings += 1;
        }
    }

    let g = worked::reduction_input();
    let h = distinct_reduce(&g).map_err(|e| e.to_string())?;
    let printed = worked::reduction_output();
    let leaves = gens("a,a,b,c,d");
    let mut seen = std::collections::BTreeSet::new();
    let mut trees = 0;
    for p in all_permutations(&leaves) {
        if !seen.insert(p.clone()) {
            continue;
        }
        for t in bracketings(&p) {
            let e = LieElement::single(t.clone());
            let direct = q(pair_graph_tree(&g, &t).map_err(|e| e.to_string())?);
            let ours = extended_pairing(&h, &e).map_err(|e| e.to_string())?;
            let theirs = extended_pairing(&printed, &e).map_err(|e| e.to_string())?;
            ensure(direct == ours && ours == theirs, || {
                format!("worked graph against {t}: {direct}, {ours}, {theirs}")
            })?;
            trees += 1;
        }
    }
    Ok(format!(
        "{} random graphs over {pairings} Lyndon pairings; worked example agrees on {trees} trees",
        20 * scale
    ))
}

fn fox_linking_depth_two(rng: &mut ChaCha8Rng, scale: usize) -> Result<String, String> {
    let abc = Alphabet::from_names(&["a", "b", "c"]);
    let sigma = symbol("(a)b");
    let seq = gens("a,b");
    for i in 0..50 * scale {
        let w = if i % 2 == 0 {
            random_gamma(rng, &abc, 1, 200)
        } else {
            random_balanced_word(rng, &abc, 30)
        };
        let phi = eval_symbol(&sigma, &w).map_err(|e| e.to_string())?;
        let fox = fox_eval(&w, &seq);
        ensure(phi == fox, || format!("{w}: Φ {phi}, Fox {fox}"))?;
    }
    Ok(format!("{} commutator-subgroup words agree", 50 * scale))
}
