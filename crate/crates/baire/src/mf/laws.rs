//! Exhaustive law checking over all multifunctions of a small carrier size.
//!
//! For a carrier `0..size` there are `2^(size*size)` multifunctions; for
//! `size <= 3` that is at most 512, so composition and tightening tables over
//! all pairs fit in memory and every law can be checked on every instance.
//! The tables are filled by calling the public [`MultiFn`] operations, so the
//! sweeps exercise the actual implementation rather than a shadow one.

use super::{is_choice, lift_total, MultiFn};
use crate::batch;

/// Precomputed composition/tightening tables for one carrier size.
pub struct LawTables {
    size: usize,
    count: usize,
    mf_comp: Vec<u16>,
    rel_comp: Vec<u16>,
    tight: Vec<bool>,
    total: Vec<bool>,
    singlevalued: Vec<bool>,
    /// All pairs `(f, g)` with `f` tightening `g`.
    tight_pairs: Vec<(u16, u16)>,
}

/// Encode a multifunction with equal carriers `0..size` as a bitmask:
/// bit `s*size + t` is set iff `t` is eligible at `s`.
pub fn encode(mf: &MultiFn) -> u16 {
    let size = mf.in_size();
    debug_assert_eq!(size, mf.out_size());
    debug_assert!(size * size <= 16);
    let mut code = 0u16;
    for s in 0..size {
        for &t in mf.values(s) {
            code |= 1 << (s * size + t);
        }
    }
    code
}

/// Inverse of [`encode`].
pub fn decode(size: usize, code: u16) -> MultiFn {
    MultiFn::from_fn(size, size, |s| {
        (0..size)
            .filter(|t| code & (1 << (s * size + t)) != 0)
            .collect()
    })
    .expect("decoded graph is well formed")
}

pub fn law_tables(size: usize) -> LawTables {
    assert!(
        (1..=3).contains(&size),
        "exhaustive tables are limited to carriers of size 1..=3"
    );
    let count = 1usize << (size * size);
    let all: Vec<MultiFn> = (0..count).map(|c| decode(size, c as u16)).collect();

    let rows = batch::range_map(count as u64, |f| {
        let f = f as usize;
        let mut mf_row = Vec::with_capacity(count);
        let mut rel_row = Vec::with_capacity(count);
        let mut tight_row = Vec::with_capacity(count);
        for g in 0..count {
            mf_row.push(encode(&all[f].compose(&all[g]).unwrap()));
            rel_row.push(encode(&all[f].rel_compose(&all[g]).unwrap()));
            tight_row.push(all[f].tightens(&all[g]).unwrap());
        }
        (mf_row, rel_row, tight_row)
    });

    let mut mf_comp = Vec::with_capacity(count * count);
    let mut rel_comp = Vec::with_capacity(count * count);
    let mut tight = Vec::with_capacity(count * count);
    for (mf_row, rel_row, tight_row) in rows {
        mf_comp.extend(mf_row);
        rel_comp.extend(rel_row);
        tight.extend(tight_row);
    }

    let total = all.iter().map(|m| m.is_total()).collect();
    let singlevalued = all.iter().map(|m| m.is_singlevalued()).collect();
    let mut tight_pairs = Vec::new();
    for f in 0..count {
        for g in 0..count {
            if tight[f * count + g] {
                tight_pairs.push((f as u16, g as u16));
            }
        }
    }

    LawTables {
        size,
        count,
        mf_comp,
        rel_comp,
        tight,
        total,
        singlevalued,
        tight_pairs,
    }
}

impl LawTables {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn mf_count(&self) -> usize {
        self.count
    }

    pub fn tight_pair_count(&self) -> usize {
        self.tight_pairs.len()
    }

    #[inline]
    fn comp(&self, f: usize, g: usize) -> usize {
        self.mf_comp[f * self.count + g] as usize
    }

    #[inline]
    fn rcomp(&self, f: usize, g: usize) -> usize {
        self.rel_comp[f * self.count + g] as usize
    }

    #[inline]
    fn tightens(&self, f: usize, g: usize) -> bool {
        self.tight[f * self.count + g]
    }

    fn witness(&self, codes: &[usize]) -> Vec<MultiFn> {
        codes.iter().map(|&c| decode(self.size, c as u16)).collect()
    }

    /// All triples with a fixed outermost multifunction associate.
    pub fn compose_assoc_holds_at(&self, f: usize) -> bool {
        let n = self.count;
        for g in 0..n {
            let fg = self.comp(f, g);
            for h in 0..n {
                if self.comp(fg, h) != self.comp(f, self.comp(g, h)) {
                    return false;
                }
            }
        }
        true
    }

    /// Associativity of the domain-conditioned composition on all triples.
    pub fn check_compose_assoc(&self) -> Option<Vec<MultiFn>> {
        let n = self.count;
        batch::range_find_map(n as u64, |f| {
            let f = f as usize;
            if self.compose_assoc_holds_at(f) {
                return None;
            }
            for g in 0..n {
                let fg = self.comp(f, g);
                for h in 0..n {
                    if self.comp(fg, h) != self.comp(f, self.comp(g, h)) {
                        return Some(self.witness(&[f, g, h]));
                    }
                }
            }
            None
        })
    }

    /// Associativity of the relational composition on all triples.
    pub fn check_rel_compose_assoc(&self) -> Option<Vec<MultiFn>> {
        let n = self.count;
        batch::range_find_map(n as u64, |f| {
            let f = f as usize;
            for g in 0..n {
                let fg = self.rcomp(f, g);
                for h in 0..n {
                    if self.rcomp(fg, h) != self.rcomp(f, self.rcomp(g, h)) {
                        return Some(self.witness(&[f, g, h]));
                    }
                }
            }
            None
        })
    }

    /// `(F∘G)(r) ⊆ (F∘_R G)(r)` on all pairs; the packed encodings make the
    /// rowwise inclusion a single bitmask test.
    pub fn check_compose_inclusion(&self) -> Option<Vec<MultiFn>> {
        let n = self.count;
        batch::range_find_map(n as u64, |f| {
            let f = f as usize;
            for g in 0..n {
                let mf = self.comp(f, g) as u16;
                let rel = self.rcomp(f, g) as u16;
                if mf & !rel != 0 {
                    return Some(self.witness(&[f, g]));
                }
            }
            None
        })
    }

    /// The compositions agree when the multifunction applied last is total,
    /// and when the one applied first is singlevalued.
    pub fn check_equality_conditions(&self) -> Option<Vec<MultiFn>> {
        let n = self.count;
        batch::range_find_map(n as u64, |f| {
            let f = f as usize;
            for g in 0..n {
                if (self.total[f] || self.singlevalued[g]) && self.comp(f, g) != self.rcomp(f, g) {
                    return Some(self.witness(&[f, g]));
                }
            }
            None
        })
    }

    /// Tightening is reflexive and transitive on all instances.
    pub fn check_tightens_preorder(&self) -> Option<Vec<MultiFn>> {
        let n = self.count;
        if let Some(f) = (0..n).find(|&f| !self.tightens(f, f)) {
            return Some(self.witness(&[f]));
        }
        batch::range_find_map(self.tight_pairs.len() as u64, |i| {
            let (f, g) = self.tight_pairs[i as usize];
            for &(g2, h) in &self.tight_pairs {
                if g2 == g && !self.tightens(f as usize, h as usize) {
                    return Some(self.witness(&[f as usize, g as usize, h as usize]));
                }
            }
            None
        })
    }

    /// If `F` tightens `F'` and `G` tightens `G'` then `F∘G` tightens `F'∘G'`,
    /// over all tightening pairs of pairs.
    pub fn check_tighten_compose(&self) -> Option<Vec<MultiFn>> {
        let pairs = &self.tight_pairs;
        batch::range_find_map(pairs.len() as u64, |i| {
            let (f, f2) = pairs[i as usize];
            let (f, f2) = (f as usize, f2 as usize);
            for &(g, g2) in pairs {
                let lhs = self.comp(f, g as usize);
                let rhs = self.comp(f2, g2 as usize);
                if !self.tightens(lhs, rhs) {
                    return Some(self.witness(&[f, g as usize, f2, g2 as usize]));
                }
            }
            None
        })
    }

    fn function_tables(&self) -> Vec<Vec<usize>> {
        let size = self.size;
        let count_f = size.pow(size as u32);
        (0..count_f)
            .map(|mut code| {
                (0..size)
                    .map(|_| {
                        let v = code % size;
                        code /= size;
                        v
                    })
                    .collect()
            })
            .collect()
    }

    /// Choices transport through composition: if `f` chooses through `F` and
    /// `g` through `G` then `f∘g` chooses through `F∘G`.
    pub fn check_choice_transport(&self) -> Option<(Vec<usize>, Vec<usize>, MultiFn, MultiFn)> {
        let n = self.count;
        let funcs = self.function_tables();
        let chooses: Vec<Vec<bool>> = funcs
            .iter()
            .map(|f| {
                (0..n)
                    .map(|spec| is_choice(f, &decode(self.size, spec as u16)))
                    .collect()
            })
            .collect();
        batch::range_find_map(funcs.len() as u64, |fi| {
            let fi = fi as usize;
            for (gi, g) in funcs.iter().enumerate() {
                // index of f∘g in the base-`size` function encoding
                let composed_idx: usize = (0..self.size)
                    .rev()
                    .fold(0, |acc, s| acc * self.size + funcs[fi][g[s]]);
                for capital_f in 0..n {
                    if !chooses[fi][capital_f] {
                        continue;
                    }
                    for capital_g in 0..n {
                        if !chooses[gi][capital_g] {
                            continue;
                        }
                        if !chooses[composed_idx][self.comp(capital_f, capital_g)] {
                            return Some((
                                funcs[fi].clone(),
                                g.clone(),
                                decode(self.size, capital_f as u16),
                                decode(self.size, capital_g as u16),
                            ));
                        }
                    }
                }
            }
            None
        })
    }

    /// `lift_total(f)` tightens `F` exactly when `f` is a choice for `F`.
    pub fn check_choice_tight_equiv(&self) -> Option<(Vec<usize>, MultiFn)> {
        let n = self.count;
        for f in self.function_tables() {
            let lifted = lift_total(self.size, self.size, |s| f[s]).unwrap();
            let code = encode(&lifted) as usize;
            for spec in 0..n {
                if self.tightens(code, spec) != is_choice(&f, &decode(self.size, spec as u16)) {
                    return Some((f, decode(self.size, spec as u16)));
                }
            }
        }
        None
    }
}
