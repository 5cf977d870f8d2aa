//! Base and strong generating sets by the Schreier-Sims algorithm.
//!
//! Construction runs a seeded random phase (product replacement, sifting)
//! followed, unless the caller certifies an order bound, by a deterministic
//! check of every Schreier generator. Orbits are built by breadth-first search
//! in generator order so the same input always yields the same chain.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rustc_hash::FxHashMap;

use crate::action::Action;
use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5EED;
pub const DEFAULT_DEGREE_BUDGET: usize = 1 << 24;

/// How far a known order can be trusted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnownOrder {
    None,
    /// Expected order; the chain is verified independently and must match.
    Expected(BigUint),
    /// The generators provably lie in a group of exactly this order, so
    /// reaching it certifies the chain without a Schreier generator check.
    UpperBound(BigUint),
}

#[derive(Clone, Debug)]
pub struct ChainOptions {
    pub base_prefix: Vec<usize>,
    pub known: KnownOrder,
    pub seed: u64,
    pub orbit_budget: usize,
    pub label: String,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions {
            base_prefix: Vec::new(),
            known: KnownOrder::None,
            seed: DEFAULT_SEED,
            orbit_budget: DEFAULT_DEGREE_BUDGET,
            label: String::from("group"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Level<A: Action> {
    pub base_point: A::Point,
    /// Indices into the chain's strong generators.
    pub gens: Vec<usize>,
    pub orbit: Vec<A::Point>,
    index: FxHashMap<A::Point, u32>,
    /// Schreier tree: (parent orbit index, strong generator index); the root
    /// points to itself.
    pub tree: Vec<(u32, u32)>,
    /// `reps[i]` maps the base point to `orbit[i]`.
    reps: Vec<A::Elem>,
}

impl<A: Action> Level<A> {
    pub fn position(&self, p: &A::Point) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }
    pub fn rep(&self, i: usize) -> &A::Elem {
        &self.reps[i]
    }
}

/// Statistics exposed in verification reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ChainStats {
    pub base_length: usize,
    pub strong_generators: usize,
    pub largest_orbit: usize,
    pub random_sifts: usize,
    pub schreier_checks: usize,
}

#[derive(Clone, Debug)]
pub struct BsgsChain<A: Action> {
    pub action: A,
    pub strong: Vec<A::Elem>,
    pub levels: Vec<Level<A>>,
    pub stats: ChainStats,
    budget: usize,
}

/// Breadth-first orbit with a Schreier tree over the given generators.
pub fn orbit_with_tree<A: Action>(
    action: &A,
    gens: &[&A::Elem],
    start: &A::Point,
    budget: usize,
) -> Result<(Vec<A::Point>, FxHashMap<A::Point, u32>, Vec<(u32, u32)>)> {
    let mut orbit = vec![start.clone()];
    let mut index = FxHashMap::default();
    index.insert(start.clone(), 0u32);
    let mut tree = vec![(0u32, u32::MAX)];
    let mut i = 0;
    while i < orbit.len() {
        for (gi, g) in gens.iter().enumerate() {
            let img = action.act(&orbit[i], g);
            if !index.contains_key(&img) {
                if orbit.len() >= budget {
                    return Err(Error::BudgetExceeded(format!("orbit larger than {budget} (partial size {})", orbit.len())));
                }
                index.insert(img.clone(), orbit.len() as u32);
                orbit.push(img);
                tree.push((i as u32, gi as u32));
            }
        }
        i += 1;
    }
    Ok((orbit, index, tree))
}

/// The orbit of `start` in deterministic BFS order.
pub fn orbit<A: Action>(action: &A, gens: &[A::Elem], start: &A::Point, budget: usize) -> Result<Vec<A::Point>> {
    let refs: Vec<&A::Elem> = gens.iter().collect();
    Ok(orbit_with_tree(action, &refs, start, budget)?.0)
}

/// True iff the group generated by `gens` is transitive on `points`, which
/// must be a single orbit of some overgroup.
pub fn is_transitive_on<A: Action>(action: &A, gens: &[A::Elem], points: &[A::Point]) -> Result<bool> {
    let first = points.first().ok_or(Error::PointNotInUniverse)?;
    let o = orbit(action, gens, first, points.len() + 1)?;
    if o.len() != points.len() {
        return Ok(false);
    }
    let set: rustc_hash::FxHashSet<&A::Point> = points.iter().collect();
    Ok(o.iter().all(|p| set.contains(p)))
}

/// Product-replacement random element generator.
pub struct RandomElements<A: Action> {
    action: A,
    state: Vec<A::Elem>,
    acc: A::Elem,
    rng: ChaCha8Rng,
}

impl<A: Action> RandomElements<A> {
    pub fn new(action: &A, gens: &[A::Elem], seed: u64) -> RandomElements<A> {
        let mut state: Vec<A::Elem> = gens.to_vec();
        if state.is_empty() {
            state.push(action.identity());
        }
        let base = state.clone();
        while state.len() < 10 {
            state.push(base[state.len() % base.len()].clone());
        }
        let mut r = RandomElements { action: action.clone(), acc: action.identity(), state, rng: ChaCha8Rng::seed_from_u64(seed) };
        for _ in 0..50 {
            r.next_elem();
        }
        r
    }

    pub fn next_elem(&mut self) -> A::Elem {
        let n = self.state.len();
        let i = self.rng.gen_range(0..n);
        let mut j = self.rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let other = if self.rng.gen_bool(0.5) { self.state[j].clone() } else { self.action.inv(&self.state[j]) };
        self.state[i] = if self.rng.gen_bool(0.5) {
            self.action.mul(&self.state[i], &other)
        } else {
            self.action.mul(&other, &self.state[i])
        };
        self.acc = self.action.mul(&self.acc, &self.state[i]);
        self.acc.clone()
    }
}

impl<A: Action> BsgsChain<A> {
    /// Run Schreier-Sims on `gens`, starting the base with `base_prefix`
    /// (as points) followed by faithful points as needed.
    pub fn build(action: &A, gens: &[A::Elem], base_prefix: &[A::Point], opts: &ChainOptions) -> Result<BsgsChain<A>> {
        let mut chain = BsgsChain {
            action: action.clone(),
            strong: Vec::new(),
            levels: Vec::new(),
            stats: ChainStats::default(),
            budget: opts.orbit_budget,
        };
        for p in base_prefix {
            chain.push_level(p.clone());
        }
        let gens: Vec<A::Elem> = gens.iter().filter(|g| !action.is_identity(g)).cloned().collect();
        if gens.is_empty() {
            chain.finish_stats();
            return chain.check_known(opts);
        }
        // Seed the strong generators with the input generators themselves.
        for g in &gens {
            chain.sift_and_add(g.clone())?;
        }
        let target = match &opts.known {
            KnownOrder::None => None,
            KnownOrder::Expected(n) | KnownOrder::UpperBound(n) => Some(n.clone()),
        };
        let mut rand = RandomElements::new(action, &gens, opts.seed);
        let mut quiet = 0;
        loop {
            let ord = chain.order();
            if let Some(t) = &target {
                if &ord == t {
                    break;
                }
                if &ord > t {
                    return Err(Error::OrderMismatch {
                        label: opts.label.clone(),
                        expected: t.to_string(),
                        computed: format!("at least {ord}"),
                    });
                }
            }
            if quiet >= 20 && target.is_none() {
                break;
            }
            // without a certificate, give up on reaching the target after a long quiet spell
            if quiet >= 400 {
                break;
            }
            let g = rand.next_elem();
            chain.stats.random_sifts += 1;
            if chain.sift_and_add(g)? {
                quiet = 0;
            } else {
                quiet += 1;
            }
        }
        let certified = matches!(&opts.known, KnownOrder::UpperBound(t) if *t == chain.order());
        if !certified {
            chain.verify_schreier()?;
            for g in &gens {
                chain.sift_and_add(g.clone())?;
            }
        }
        chain.finish_stats();
        chain.check_known(opts)
    }

    fn check_known(self, opts: &ChainOptions) -> Result<BsgsChain<A>> {
        let ord = self.order();
        match &opts.known {
            KnownOrder::Expected(t) | KnownOrder::UpperBound(t) if *t != ord => Err(Error::OrderMismatch {
                label: opts.label.clone(),
                expected: t.to_string(),
                computed: ord.to_string(),
            }),
            _ => Ok(self),
        }
    }

    fn finish_stats(&mut self) {
        self.stats.base_length = self.levels.len();
        self.stats.strong_generators = self.strong.len();
        self.stats.largest_orbit = self.levels.iter().map(|l| l.orbit.len()).max().unwrap_or(0);
    }

    fn push_level(&mut self, p: A::Point) {
        let mut index = FxHashMap::default();
        index.insert(p.clone(), 0);
        self.levels.push(Level {
            base_point: p.clone(),
            gens: Vec::new(),
            orbit: vec![p],
            index,
            tree: vec![(0, u32::MAX)],
            reps: vec![self.action.identity()],
        });
    }

    fn rebuild_level(&mut self, i: usize) -> Result<()> {
        let gens: Vec<usize> = (0..self.strong.len())
            .filter(|&s| self.levels[..i].iter().all(|l| self.action.act(&l.base_point, &self.strong[s]) == l.base_point))
            .collect();
        let refs: Vec<&A::Elem> = gens.iter().map(|&s| &self.strong[s]).collect();
        let (orbit, index, tree) = orbit_with_tree(&self.action, &refs, &self.levels[i].base_point, self.budget)?;
        let mut reps: Vec<A::Elem> = Vec::with_capacity(orbit.len());
        reps.push(self.action.identity());
        for j in 1..orbit.len() {
            let (parent, g) = tree[j];
            let r = self.action.mul(&reps[parent as usize], refs[g as usize]);
            reps.push(r);
        }
        let tree = tree.into_iter().map(|(p, g)| (p, if g == u32::MAX { g } else { gens[g as usize] as u32 })).collect();
        let level = &mut self.levels[i];
        level.gens = gens;
        level.orbit = orbit;
        level.index = index;
        level.tree = tree;
        level.reps = reps;
        Ok(())
    }

    /// Sift `g` from level `from`: returns the residue and the level where it
    /// dropped out (`levels.len()` if it passed every level).
    pub fn sift_from(&self, g: &A::Elem, from: usize) -> (A::Elem, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let b = self.action.act(&level.base_point, &h);
            match level.index.get(&b) {
                None => return (h, i),
                Some(&j) => {
                    if j != 0 {
                        h = self.action.mul(&h, &self.action.inv(&level.reps[j as usize]));
                    }
                }
            }
        }
        (h, self.levels.len())
    }

    pub fn sift(&self, g: &A::Elem) -> (A::Elem, usize) {
        self.sift_from(g, 0)
    }

    pub fn contains(&self, g: &A::Elem) -> bool {
        let (h, lvl) = self.sift(g);
        lvl == self.levels.len() && self.action.is_identity(&h)
    }

    /// Add the residue of `g` as a strong generator if it is nontrivial.
    fn sift_and_add(&mut self, g: A::Elem) -> Result<bool> {
        let (h, lvl) = self.sift(&g);
        if lvl == self.levels.len() && self.action.is_identity(&h) {
            return Ok(false);
        }
        self.add_strong(h, lvl)?;
        Ok(true)
    }

    fn add_strong(&mut self, h: A::Elem, lvl: usize) -> Result<()> {
        if lvl == self.levels.len() {
            let p = self
                .action
                .faithful_points()
                .into_iter()
                .find(|p| self.action.act(p, &h) != *p)
                .ok_or_else(|| Error::DataIntegrity("nonidentity element fixes every faithful point".into()))?;
            self.push_level(p);
        }
        self.strong.push(h);
        for i in 0..=lvl.min(self.levels.len() - 1) {
            self.rebuild_level(i)?;
        }
        Ok(())
    }

    /// Deterministic completion: sift every Schreier generator bottom-up.
    fn verify_schreier(&mut self) -> Result<()> {
        if self.levels.is_empty() {
            return Ok(());
        }
        let mut i = self.levels.len() - 1;
        loop {
            match self.check_level(i)? {
                Some((h, lvl)) => {
                    self.add_strong(h, lvl)?;
                    i = lvl.min(self.levels.len() - 1);
                }
                None => {
                    if i == 0 {
                        return Ok(());
                    }
                    i -= 1;
                }
            }
        }
    }

    fn check_level(&mut self, i: usize) -> Result<Option<(A::Elem, usize)>> {
        let level = &self.levels[i];
        for (bi, beta_rep) in level.reps.iter().enumerate() {
            for &s in &level.gens {
                let img = self.action.act(&level.orbit[bi], &self.strong[s]);
                let j = level.index[&img] as usize;
                if level.tree[j] == (bi as u32, s as u32) {
                    continue;
                }
                self.stats.schreier_checks += 1;
                let h = self.action.mul(&self.action.mul(beta_rep, &self.strong[s]), &self.action.inv(&level.reps[j]));
                let (res, lvl) = self.sift_from(&h, i + 1);
                if lvl < self.levels.len() || !self.action.is_identity(&res) {
                    return Ok(Some((res, lvl)));
                }
            }
        }
        Ok(None)
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<A::Point> {
        self.levels.iter().map(|l| l.base_point.clone()).collect()
    }

    /// Strong generators of the level-`i` stabilizer.
    pub fn level_generators(&self, i: usize) -> Vec<A::Elem> {
        match self.levels.get(i) {
            Some(l) => l.gens.iter().map(|&s| self.strong[s].clone()).collect(),
            None => Vec::new(),
        }
    }

    /// The chain of the stabilizer of the first base point.
    pub fn first_stabilizer(&self) -> BsgsChain<A> {
        let keep: Vec<usize> = self.levels.get(1).map(|l| l.gens.clone()).unwrap_or_default();
        let remap: FxHashMap<usize, usize> = keep.iter().enumerate().map(|(n, &o)| (o, n)).collect();
        let levels = self.levels[1.min(self.levels.len())..]
            .iter()
            .map(|l| {
                let mut l = l.clone();
                l.gens = l.gens.iter().map(|g| remap[g]).collect();
                l.tree = l.tree.iter().map(|&(p, g)| (p, if g == u32::MAX { g } else { remap[&(g as usize)] as u32 })).collect();
                l
            })
            .collect();
        let mut c = BsgsChain {
            action: self.action.clone(),
            strong: keep.iter().map(|&s| self.strong[s].clone()).collect(),
            levels,
            stats: ChainStats::default(),
            budget: self.budget,
        };
        c.finish_stats();
        c
    }

    /// Rebuild with `point` as the first base point and return the chain of
    /// its stabilizer. The order of `self` certifies the new chain.
    pub fn point_stabilizer(&self, point: &A::Point) -> Result<BsgsChain<A>> {
        let opts = ChainOptions { known: KnownOrder::UpperBound(self.order()), orbit_budget: self.budget, ..Default::default() };
        let rebased = BsgsChain::build(&self.action, &self.strong, std::slice::from_ref(point), &opts)?;
        Ok(rebased.first_stabilizer())
    }

    /// Chain for the same group with a new base prefix.
    pub fn rebase(&self, prefix: &[A::Point]) -> Result<BsgsChain<A>> {
        let opts = ChainOptions { known: KnownOrder::UpperBound(self.order()), orbit_budget: self.budget, ..Default::default() };
        BsgsChain::build(&self.action, &self.strong, prefix, &opts)
    }

    pub fn random_elements(&self, seed: u64) -> RandomElements<A> {
        RandomElements::new(&self.action, &self.strong, seed)
    }

    /// Visit every group element once, as a product of transversal elements.
    /// Stops early (returning false) when the visitor returns false.
    pub fn for_each_element(&self, mut visit: impl FnMut(&A::Elem) -> bool) -> bool {
        fn rec<A: Action>(c: &BsgsChain<A>, i: usize, cur: &A::Elem, visit: &mut dyn FnMut(&A::Elem) -> bool) -> bool {
            if i == 0 {
                return visit(cur);
            }
            let level = &c.levels[i - 1];
            for r in &level.reps {
                let next = c.action.mul(cur, r);
                if !rec(c, i - 1, &next, visit) {
                    return false;
                }
            }
            true
        }
        rec(self, self.levels.len(), &self.action.identity(), &mut visit)
    }
}

/// Generators of the kernel of a homomorphism to Z/2 given by `parity`.
pub fn index2_kernel<A: Action>(
    action: &A,
    gens: &[A::Elem],
    parity: impl Fn(&A::Elem) -> u8,
    seed: u64,
) -> Result<Vec<A::Elem>> {
    let mut rand = RandomElements::new(action, gens, seed);
    for _ in 0..32 {
        let a = rand.next_elem();
        let b = rand.next_elem();
        if parity(&action.mul(&a, &b)) != (parity(&a) + parity(&b)) % 2 {
            return Err(Error::NotAHomomorphism);
        }
    }
    let Some(h) = gens.iter().find(|g| parity(g) == 1) else { return Ok(gens.to_vec()) };
    let h_inv = action.inv(h);
    let mut out = Vec::with_capacity(2 * gens.len());
    for s in gens {
        let (a, b) = if parity(s) == 0 {
            (s.clone(), action.mul(&action.mul(h, s), &h_inv))
        } else {
            (action.mul(s, &h_inv), action.mul(h, s))
        };
        for x in [a, b] {
            if !action.is_identity(&x) {
                out.push(x);
            }
        }
    }
    Ok(out)
}

/// Exact `|H ∩ K|` by enumerating the elements of `small` and testing each
/// with `in_other`.
pub fn tiny_intersection_order<A: Action>(
    small: &BsgsChain<A>,
    in_other: impl Fn(&A::Elem) -> bool,
    budget: u64,
) -> Result<u64> {
    let n = small.order();
    if n > BigUint::from(budget) {
        return Err(Error::BudgetExceeded(format!("enumerating {n} elements exceeds {budget}")));
    }
    let mut count = 0u64;
    small.for_each_element(|g| {
        if in_other(g) {
            count += 1;
        }
        true
    });
    Ok(count)
}

/// Breadth-first enumeration of all points reachable from `start`, returning
/// the queue order; kept separate from [`orbit`] for callers that only need
/// a size.
pub fn orbit_size<A: Action>(action: &A, gens: &[A::Elem], start: &A::Point, budget: usize) -> Result<usize> {
    let mut seen = rustc_hash::FxHashSet::default();
    seen.insert(start.clone());
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let img = action.act(&p, g);
            if seen.insert(img.clone()) {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded(format!("orbit larger than {budget}")));
                }
                queue.push_back(img);
            }
        }
    }
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{PermAction, PermPoint};
    use crate::perm::Perm;

    fn a5() -> (PermAction, Vec<Perm>) {
        let a = PermAction::new(5);
        (a, vec![Perm::parse_cycles(5, "(1,2,3)").unwrap(), Perm::parse_cycles(5, "(1,2,3,4,5)").unwrap()])
    }

    #[test]
    fn alternating_five() {
        let (a, gens) = a5();
        let c = BsgsChain::build(&a, &gens, &[], &ChainOptions::default()).unwrap();
        assert_eq!(c.order(), BigUint::from(60u32));
        let stab = c.point_stabilizer(&PermPoint::Int(0)).unwrap();
        assert_eq!(stab.order(), BigUint::from(12u32));
        assert!(c.contains(&Perm::identity(5)));
        assert!(!c.contains(&Perm::parse_cycles(5, "(1,2)").unwrap()));
    }

    #[test]
    fn base_order_does_not_change_order() {
        let (a, gens) = a5();
        let c1 = BsgsChain::build(&a, &gens, &[PermPoint::Int(4), PermPoint::Int(2)], &ChainOptions::default()).unwrap();
        let c2 = BsgsChain::build(&a, &gens, &[], &ChainOptions::default()).unwrap();
        assert_eq!(c1.order(), c2.order());
        assert_eq!(c1.base()[0], PermPoint::Int(4));
    }

    #[test]
    fn expected_order_mismatch_fails_loudly() {
        let (a, gens) = a5();
        let opts = ChainOptions { known: KnownOrder::Expected(BigUint::from(120u32)), ..Default::default() };
        assert!(matches!(BsgsChain::build(&a, &gens, &[], &opts), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn identity_orbit_is_singleton() {
        let a = PermAction::new(4);
        assert_eq!(orbit(&a, &[Perm::identity(4)], &PermPoint::Int(2), 10).unwrap(), vec![PermPoint::Int(2)]);
    }

    #[test]
    fn enumeration_visits_each_element_once() {
        let (a, gens) = a5();
        let c = BsgsChain::build(&a, &gens, &[], &ChainOptions::default()).unwrap();
        let mut seen = std::collections::HashSet::new();
        c.for_each_element(|g| seen.insert(g.clone()));
        assert_eq!(seen.len(), 60);
    }

    #[test]
    fn kernel_of_sign_on_symmetric_group() {
        let a = PermAction::new(6);
        let gens = vec![Perm::parse_cycles(6, "(1,2)").unwrap(), Perm::parse_cycles(6, "(1,2,3,4,5,6)").unwrap()];
        let ker = index2_kernel(&a, &gens, Perm::parity, 1).unwrap();
        let c = BsgsChain::build(&a, &ker, &[], &ChainOptions::default()).unwrap();
        assert_eq!(c.order(), BigUint::from(360u32));
        assert!(ker.iter().all(|g| g.parity() == 0));
        // a non-homomorphism is rejected
        let bogus = |g: &Perm| (g.image(0) == 0) as u8;
        assert_eq!(index2_kernel(&a, &gens, bogus, 1), Err(Error::NotAHomomorphism));
    }

    #[test]
    fn intersection_of_a_group_with_itself() {
        let (a, gens) = a5();
        let c = BsgsChain::build(&a, &gens, &[], &ChainOptions::default()).unwrap();
        assert_eq!(tiny_intersection_order(&c, |g| c.contains(g), 1000).unwrap(), 60);
        assert!(tiny_intersection_order(&c, |_| true, 10).is_err());
    }
}
