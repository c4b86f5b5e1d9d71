use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Alphabet, Letter, Word};

/// Random elements of the lower central series `γ_i F_n`, indexed from `γ_0 = F_n`.
///
/// A depth-`i` sample is a product of conjugates of commutators `[u, v]` with
/// `u ∈ γ_p`, `v ∈ γ_q`, `p + q = i - 1`, built recursively, so membership in
/// `γ_i` holds by construction.
#[derive(Clone, Debug)]
pub struct GammaSampler {
    alphabet: Alphabet,
    budget: usize,
    max_factors: usize,
    max_conjugator: usize,
}

impl GammaSampler {
    /// `budget` bounds the word length; samples over budget are redrawn and
    /// eventually replaced by a left-normed commutator of generators.
    pub fn new(alphabet: Alphabet, budget: usize) -> Self {
        assert!(!alphabet.is_empty(), "alphabet must be nonempty");
        GammaSampler {
            alphabet,
            budget,
            max_factors: 2,
            max_conjugator: 2,
        }
    }

    pub fn with_max_factors(mut self, n: usize) -> Self {
        self.max_factors = n.max(1);
        self
    }

    pub fn with_max_conjugator(mut self, n: usize) -> Self {
        self.max_conjugator = n;
        self
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn sample<R: Rng + ?Sized>(&self, depth: usize, rng: &mut R) -> Word {
        for _ in 0..32 {
            let factors = rng.gen_range(1..=self.max_factors);
            let mut w = Word::empty();
            for _ in 0..factors {
                w = w.multiply(&self.element(depth, rng));
            }
            if w.len() <= self.budget {
                return w;
            }
        }
        self.left_normed(depth, rng)
    }

    fn random_letter<R: Rng + ?Sized>(&self, rng: &mut R) -> Letter {
        let g = self.alphabet.gens()[rng.gen_range(0..self.alphabet.len())].clone();
        Letter::new(g, rng.gen_bool(0.5))
    }

    fn random_word<R: Rng + ?Sized>(&self, min: usize, max: usize, rng: &mut R) -> Word {
        let len = rng.gen_range(min..=max.max(min));
        Word::from_letters((0..len).map(|_| self.random_letter(rng)).collect())
    }

    fn element<R: Rng + ?Sized>(&self, depth: usize, rng: &mut R) -> Word {
        if depth == 0 {
            return self.random_word(1, 3, rng);
        }
        let p = rng.gen_range(0..depth);
        let q = depth - 1 - p;
        let u = self.element(p, rng);
        let v = self.element(q, rng);
        let c = Word::commutator(&u, &v);
        let conj = self.random_word(0, self.max_conjugator, rng);
        c.conjugate_by(&conj)
    }

    fn left_normed<R: Rng + ?Sized>(&self, depth: usize, rng: &mut R) -> Word {
        let mut w = Word::single(self.random_letter(rng));
        for _ in 0..depth {
            w = Word::commutator(&w, &Word::single(self.random_letter(rng)));
        }
        w
    }
}

/// Seeded convenience wrapper around [`GammaSampler`]; the same seed always gives the same word.
pub fn random_gamma_element(depth: usize, alphabet: &Alphabet, budget: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    GammaSampler::new(alphabet.clone(), budget).sample(depth, &mut rng)
}
