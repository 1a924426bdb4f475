//! The recursive strong connection on the lens-space algebra: a
//! two-legged tensor `omega(n)` for every winding number `n`, with the
//! leg-multiplication and degree identities that make the circle bundle
//! principal.

use std::sync::Arc;

use num_traits::One;

use crate::error::Result;
use crate::ncalg::{gens, NcElement, NfWord, Presentation, TensorElement};
use crate::qlaurent::{qbinom, RatQ};

/// Memoized builder for the connection tensors over `Lens(l)`.
pub struct StrongConnection {
    pres: Arc<Presentation>,
    l: u32,
    /// `pos[n]` is `omega(n)`; `pos[0] = 1 (x) 1`.
    pos: Vec<TensorElement>,
    /// `neg[n]` is `omega(-n)`.
    neg: Vec<TensorElement>,
}

/// Result of checking the connection identities for one winding number.
#[derive(Debug, Clone)]
pub struct ConnectionCheck {
    pub n: i64,
    /// Legs multiply to exactly 1.
    pub unit_product: bool,
    /// Every left leg is homogeneous of degree `-n`.
    pub left_degrees_ok: bool,
    /// Every right leg is homogeneous of degree `+n`.
    pub right_degrees_ok: bool,
    pub term_count: usize,
    /// The guaranteed bound `(l+1)^{|n|}`.
    pub term_bound: u64,
}

impl ConnectionCheck {
    pub fn passed(&self) -> bool {
        self.unit_product
            && self.left_degrees_ok
            && self.right_degrees_ok
            && (self.term_count as u64) <= self.term_bound
    }
}

impl StrongConnection {
    pub fn new(l: u32) -> Result<StrongConnection> {
        let pres = Presentation::lens(l)?;
        let unit = TensorElement::unit(&pres);
        Ok(StrongConnection { pres, l, pos: vec![unit.clone()], neg: vec![unit] })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn weight(&self) -> u32 {
        self.l
    }

    /// `omega(n)`, built recursively and cached.
    pub fn omega(&mut self, n: i64) -> TensorElement {
        if n >= 0 {
            while (self.pos.len() as i64) <= n {
                let next = self.step_up(self.pos.last().unwrap());
                self.pos.push(next);
            }
            self.pos[n as usize].clone()
        } else {
            while (self.neg.len() as i64) <= -n {
                let next = self.step_down(self.neg.last().unwrap());
                self.neg.push(next);
            }
            self.neg[(-n) as usize].clone()
        }
    }

    /// One step up:
    /// `omega(n) = cS omega(n-1) c
    ///  - sum_{m=1}^{l} (-1)^m q^{-m(m+1)} binom(l,m; q^{-2}) d^m dS^{m-1} omega(n-1) dS`.
    fn step_up(&self, prev: &TensorElement) -> TensorElement {
        let c = NcElement::generator(&self.pres, gens::C);
        let cs = NcElement::generator(&self.pres, gens::C_S);
        let ds = NcElement::generator(&self.pres, gens::D_S);
        let mut out = prev.sandwich(&cs, &c);
        for m in 1..=self.l {
            let mut poly = qbinom(self.l, m, -2).shift(-((m as i64) * (m as i64 + 1)));
            if m % 2 == 1 {
                // subtracting (-1)^m (...) adds the term for odd m
            } else {
                poly = -poly;
            }
            let left = NcElement::monomial(
                &self.pres,
                NfWord::Lens { c: 0, d: m, d_star: m - 1 },
                RatQ::from(&poly),
            );
            out = out.add(&prev.sandwich(&left, &ds));
        }
        out
    }

    /// One step down:
    /// `omega(-n) = c omega(-n+1) cS
    ///  - sum_{m=1}^{l} (-1)^m q^{m(m-1)} binom(l,m; q^2) d^{m-1} dS^m omega(-n+1) d`.
    fn step_down(&self, prev: &TensorElement) -> TensorElement {
        let c = NcElement::generator(&self.pres, gens::C);
        let cs = NcElement::generator(&self.pres, gens::C_S);
        let d = NcElement::generator(&self.pres, gens::D);
        let mut out = prev.sandwich(&c, &cs);
        for m in 1..=self.l {
            let mut poly = qbinom(self.l, m, 2).shift((m as i64) * (m as i64 - 1));
            if m % 2 == 0 {
                poly = -poly;
            }
            let left = NcElement::monomial(
                &self.pres,
                NfWord::Lens { c: 0, d: m - 1, d_star: m },
                RatQ::from(&poly),
            );
            out = out.add(&prev.sandwich(&left, &d));
        }
        out
    }

    /// Checks the connection identities for one winding number.
    pub fn check(&mut self, n: i64) -> ConnectionCheck {
        let omega = self.omega(n);
        let product = omega.multiply_legs();
        let unit_product = product == NcElement::one(&self.pres);
        let left_degrees_ok = omega.left_degrees().iter().all(|&d| d == -n);
        let right_degrees_ok = omega.right_degrees().iter().all(|&d| d == n);
        let term_bound = ((self.l + 1) as u64).pow(n.unsigned_abs().min(u32::MAX as u64) as u32);
        ConnectionCheck {
            n,
            unit_product,
            left_degrees_ok,
            right_degrees_ok,
            term_count: omega.term_count(),
            term_bound,
        }
    }
}

/// Runs [`StrongConnection::check`] for every `|n| <= n_max`.
pub fn verify_strong(conn: &mut StrongConnection, n_max: u32) -> Vec<ConnectionCheck> {
    let mut out = Vec::new();
    for n in -(n_max as i64)..=(n_max as i64) {
        out.push(conn.check(n));
    }
    out
}

/// Convenience constructor used by the one-shot callers: `omega(n)` over
/// a fresh `Lens(l)`.
pub fn strong_connection(l: u32, n: i64) -> Result<TensorElement> {
    let mut conn = StrongConnection::new(l)?;
    Ok(conn.omega(n))
}
