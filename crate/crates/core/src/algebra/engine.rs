//! Buchberger's algorithm on exponent-difference vectors.
//!
//! A binomial `x^a - x^b` with coprime terms is stored as `u = a - b`; the
//! positive part of `u` is always the leading term. S-pairs and reductions
//! are vector additions, so coefficients never leave `{+1, -1}`. Storing
//! `u` drops common monomial factors, which is sound for ideals that are
//! saturated with respect to every variable (lattice ideals, and ideals in
//! which every variable is a unit modulo the ideal).

use std::cmp::Ordering;

use super::order::OrderKind;

/// Term order on variables `0..n`, index 0 ranked highest. When `block > 0`
/// the total degree in the first `block` variables is compared first.
#[derive(Clone, Copy, Debug)]
pub(crate) struct VecOrder {
    pub kind: OrderKind,
    pub block: usize,
}

impl VecOrder {
    pub fn new(kind: OrderKind) -> Self {
        VecOrder { kind, block: 0 }
    }

    pub fn eliminating(kind: OrderKind, block: usize) -> Self {
        VecOrder { kind, block }
    }

    /// Whether `x^{u+}` is greater than `x^{u-}`; `u` must be nonzero.
    pub fn positive_leads(&self, u: &[i32]) -> bool {
        if self.block > 0 {
            let s: i32 = u[..self.block].iter().sum();
            if s != 0 {
                return s > 0;
            }
        }
        let first = || u.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0);
        match self.kind {
            OrderKind::Lex => first(),
            OrderKind::DegLex => {
                let s: i32 = u.iter().sum();
                if s != 0 {
                    s > 0
                } else {
                    first()
                }
            }
            OrderKind::DegRevLex => {
                let s: i32 = u.iter().sum();
                if s != 0 {
                    s > 0
                } else {
                    u.iter().rev().find(|&&x| x != 0).is_some_and(|&x| x < 0)
                }
            }
        }
    }

    pub fn cmp_monomials(&self, a: &[i32], b: &[i32]) -> Ordering {
        let d: Vec<i32> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        if d.iter().all(|&x| x == 0) {
            Ordering::Equal
        } else if self.positive_leads(&d) {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

#[derive(Clone, Debug)]
struct Elem {
    u: Vec<i32>,
    lead: Vec<i32>,
    mask: u128,
    active: bool,
}

impl Elem {
    fn new(u: Vec<i32>) -> Self {
        let lead: Vec<i32> = u.iter().map(|&x| x.max(0)).collect();
        Elem {
            mask: mask_of(&lead),
            u,
            lead,
            active: true,
        }
    }
}

fn mask_of(m: &[i32]) -> u128 {
    m.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .fold(0u128, |acc, (i, _)| acc | (1u128 << (i % 128)))
}

fn divides(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[i32], b: &[i32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<i32>,
}

pub(crate) struct Buchberger {
    order: VecOrder,
    basis: Vec<Elem>,
    pairs: Vec<Pair>,
}

impl Buchberger {
    pub fn new(order: VecOrder) -> Self {
        Buchberger {
            order,
            basis: Vec::new(),
            pairs: Vec::new(),
        }
    }

    fn orient(&self, mut u: Vec<i32>) -> Vec<i32> {
        if !self.order.positive_leads(&u) {
            for x in &mut u {
                *x = -*x;
            }
        }
        u
    }

    fn find_reducer(&self, m: &[i32], skip: Option<usize>) -> Option<usize> {
        let mask = mask_of(m);
        self.basis.iter().enumerate().position(|(k, g)| {
            g.active && Some(k) != skip && g.mask & !mask == 0 && divides(&g.lead, m)
        })
    }

    /// Top-reduces `u` by the active basis; `None` when it reduces to zero.
    fn reduce(&self, mut u: Vec<i32>) -> Option<Vec<i32>> {
        loop {
            if u.iter().all(|&x| x == 0) {
                return None;
            }
            u = self.orient(u);
            let lead: Vec<i32> = u.iter().map(|&x| x.max(0)).collect();
            match self.find_reducer(&lead, None) {
                Some(k) => {
                    for (x, y) in u.iter_mut().zip(&self.basis[k].u) {
                        *x -= y;
                    }
                }
                None => return Some(u),
            }
        }
    }

    fn update(&mut self, h: Vec<i32>) {
        let hn = self.basis.len();
        let hel = Elem::new(h);
        let active: Vec<usize> = (0..hn).filter(|&k| self.basis[k].active).collect();

        let mut c: Vec<(usize, Vec<i32>)> = active
            .iter()
            .map(|&g| (g, lcm(&hel.lead, &self.basis[g].lead)))
            .collect();
        let mut d: Vec<(usize, Vec<i32>)> = Vec::new();
        while !c.is_empty() {
            let (g1, l1) = c.remove(0);
            let keep = coprime(&hel.lead, &self.basis[g1].lead)
                || !c.iter().chain(d.iter()).any(|(_, l2)| divides(l2, &l1));
            if keep {
                d.push((g1, l1));
            }
        }
        let e: Vec<Pair> = d
            .into_iter()
            .filter(|(g, _)| !coprime(&hel.lead, &self.basis[*g].lead))
            .map(|(g, l)| Pair { i: g, j: hn, lcm: l })
            .collect();

        let basis = &self.basis;
        self.pairs.retain(|p| {
            let l1h = lcm(&basis[p.i].lead, &hel.lead);
            let lh2 = lcm(&hel.lead, &basis[p.j].lead);
            !(divides(&hel.lead, &p.lcm) && l1h != p.lcm && lh2 != p.lcm)
        });
        self.pairs.extend(e);

        for &g in &active {
            if divides(&hel.lead, &self.basis[g].lead) {
                self.basis[g].active = false;
            }
        }
        self.basis.push(hel);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for k in 1..self.pairs.len() {
            let (a, b) = (&self.pairs[k], &self.pairs[best]);
            let ord = self
                .order
                .cmp_monomials(&a.lcm, &b.lcm)
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        Some(self.pairs.swap_remove(best))
    }

    pub fn add_generator(&mut self, u: Vec<i32>) {
        if let Some(h) = self.reduce(u) {
            self.update(h);
        }
    }

    /// Runs the completion and returns the reduced basis, leading term
    /// first (positive part), sorted by leading term ascending.
    pub fn run(mut self) -> Vec<Vec<i32>> {
        while let Some(p) = self.select_pair() {
            let s: Vec<i32> = self.basis[p.j]
                .u
                .iter()
                .zip(&self.basis[p.i].u)
                .map(|(x, y)| x - y)
                .collect();
            if let Some(h) = self.reduce(s) {
                self.update(h);
            }
        }
        self.interreduce()
    }

    fn interreduce(mut self) -> Vec<Vec<i32>> {
        loop {
            let mut changed = false;
            let active: Vec<usize> = (0..self.basis.len()).filter(|&k| self.basis[k].active).collect();
            for &g in &active {
                if !self.basis[g].active {
                    continue;
                }
                // drop elements whose leading term is divisible by another one
                let lead = self.basis[g].lead.clone();
                if self.find_reducer(&lead, Some(g)).is_some() {
                    self.basis[g].active = false;
                    changed = true;
                    continue;
                }
                loop {
                    let trail: Vec<i32> = self.basis[g].u.iter().map(|&x| (-x).max(0)).collect();
                    let Some(k) = self.find_reducer(&trail, Some(g)) else {
                        break;
                    };
                    let mut u = self.basis[g].u.clone();
                    for (x, y) in u.iter_mut().zip(&self.basis[k].u) {
                        *x += y;
                    }
                    let u = self.orient(u);
                    let el = Elem::new(u);
                    if el.lead != self.basis[g].lead {
                        changed = true;
                    }
                    self.basis[g] = el;
                }
            }
            if !changed {
                break;
            }
        }
        let mut out: Vec<Vec<i32>> = self
            .basis
            .into_iter()
            .filter(|e| e.active)
            .map(|e| e.u)
            .collect();
        let order = self.order;
        out.sort_by(|a, b| {
            let la: Vec<i32> = a.iter().map(|&x| x.max(0)).collect();
            let lb: Vec<i32> = b.iter().map(|&x| x.max(0)).collect();
            order.cmp_monomials(&la, &lb).then_with(|| a.cmp(b))
        });
        out
    }
}

/// Reduced Gröbner basis of the ideal generated by the given vectors.
pub(crate) fn groebner(gens: &[Vec<i32>], order: VecOrder) -> Vec<Vec<i32>> {
    let mut bb = Buchberger::new(order);
    for g in gens {
        bb.add_generator(g.clone());
    }
    bb.run()
}

/// Normal form of the monomial `m` modulo a Gröbner basis in vector form.
pub(crate) fn normal_form(basis: &[Vec<i32>], m: &[i32]) -> Vec<i32> {
    let leads: Vec<Vec<i32>> = basis.iter().map(|u| u.iter().map(|&x| x.max(0)).collect()).collect();
    let mut m = m.to_vec();
    'outer: loop {
        for (u, lead) in basis.iter().zip(&leads) {
            if divides(lead, &m) {
                for (x, y) in m.iter_mut().zip(u) {
                    *x -= y;
                }
                continue 'outer;
            }
        }
        return m;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_vector_orientation() {
        // variables x11 > x12 > x21 > x22, u = x11*x22 - x12*x21
        let o = VecOrder::new(OrderKind::DegRevLex);
        assert!(!o.positive_leads(&[1, -1, -1, 1]));
        let o = VecOrder::new(OrderKind::Lex);
        assert!(o.positive_leads(&[1, -1, -1, 1]));
    }

    #[test]
    fn elimination_block_dominates() {
        let o = VecOrder::eliminating(OrderKind::DegRevLex, 1);
        assert!(o.positive_leads(&[1, -5, -5]));
    }

    #[test]
    fn twisted_cubic_lattice() {
        // kernel of (1 1 1 1; 0 1 2 3): reduced GB of the twisted cubic
        // under degrevlex has three quadrics
        let gens = vec![vec![1, -2, 1, 0], vec![0, 1, -2, 1]];
        let mut bb = Buchberger::new(VecOrder::eliminating(OrderKind::DegRevLex, 1));
        for g in &gens {
            let mut v = vec![0];
            v.extend(g);
            bb.add_generator(v);
        }
        bb.add_generator(vec![1, 1, 1, 1, 1]);
        let gb: Vec<Vec<i32>> = bb.run().into_iter().filter(|u| u[0] == 0).map(|u| u[1..].to_vec()).collect();
        assert_eq!(gb.len(), 3);
        for u in &gb {
            assert_eq!(u.iter().filter(|&&x| x > 0).sum::<i32>(), 2);
        }
    }
}
