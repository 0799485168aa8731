//! Classical Fock modules of order `p`: the quotient of the module freely
//! generated by the creation operators `a_i^+ = e_{i0}` from a vacuum of
//! gl(n+1|m) weight `(p, 0, …, 0)` by its null vectors, truncated at a total
//! occupation cutoff.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{solve, Echelon};
use crate::presentations::AlgebraSpec;
use crate::scalar::{Rat, Scalar};

/// Occupation numbers `(r_1, …, r_{n+m})`; odd modes hold at most one quantum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FockState(pub Vec<u32>);

impl FockState {
    pub fn vacuum(modes: usize) -> Self {
        FockState(vec![0; modes])
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }
}

/// Operators acting on a Fock module; indices run over `1..=n+m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FockOp {
    Create(usize),
    Annihilate(usize),
    /// `H_i = ⟦a_i^-, a_i^+⟧ = e_00 − (−1)^{θ_i} e_ii`.
    Cartan(usize),
}

impl FockOp {
    pub fn name(self) -> String {
        match self {
            FockOp::Create(i) => format!("ap{i}"),
            FockOp::Annihilate(i) => format!("am{i}"),
            FockOp::Cartan(i) => format!("H{i}"),
        }
    }
}

/// A vector of the free (unquotiented) module, keyed by occupations.
type Free = BTreeMap<FockState, Scalar>;

fn add(v: &mut Free, s: FockState, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&s) {
        Some(x) => {
            *x += &c;
            if x.is_zero() {
                v.remove(&s);
            }
        }
        None => {
            v.insert(s, c);
        }
    }
}

/// Straightening of gl(n+1|m) matrix units against creation monomials.
struct Straightener {
    theta: Vec<u8>,
    p: Scalar,
}

impl Straightener {
    fn odd(&self, i: usize) -> bool {
        self.theta[i] == 1
    }

    fn parity(&self, a: usize, b: usize) -> bool {
        self.odd(a) != self.odd(b)
    }

    /// `e_{a0}` applied to the monomial with occupations `s`.
    fn create(&self, a: usize, s: &FockState) -> Option<(Scalar, FockState)> {
        let mut r = s.clone();
        if self.odd(a) && r.0[a - 1] == 1 {
            return None;
        }
        // moving e_{a0} past the odd creators of lower index
        let passed: u32 = (1..a).filter(|&c| self.odd(c)).map(|c| r.0[c - 1]).sum();
        let sign = if self.odd(a) && passed % 2 == 1 { -1 } else { 1 };
        r.0[a - 1] += 1;
        Some((Scalar::from_int(sign), r))
    }

    /// `e_{ab}` applied to the monomial `s`, by commuting it to the vacuum.
    fn apply(&self, a: usize, b: usize, s: &FockState) -> Free {
        let mut out = Free::new();
        if b == 0 && a >= 1 {
            if let Some((c, r)) = self.create(a, s) {
                add(&mut out, r, c);
            }
            return out;
        }
        let Some(c) = s.0.iter().position(|&x| x > 0).map(|k| k + 1) else {
            if a == 0 && b == 0 {
                add(&mut out, s.clone(), self.p.clone());
            }
            return out;
        };
        let mut rest = s.clone();
        rest.0[c - 1] -= 1;
        // ⟦e_ab, e_c0⟧ = δ_bc e_a0 − (−1)^{|e_ab||e_c0|} δ_a0 e_cb
        let swap = if self.parity(a, b) && self.odd(c) { -1 } else { 1 };
        if b == c {
            for (r, x) in self.apply(a, 0, &rest) {
                add(&mut out, r, x);
            }
        }
        if a == 0 {
            for (r, x) in self.apply(c, b, &rest) {
                add(&mut out, r, -x * Scalar::from_int(swap));
            }
        }
        for (r, x) in self.apply(a, b, &rest) {
            if let Some((y, r2)) = self.create(c, &r) {
                add(&mut out, r2, x * y * Scalar::from_int(swap));
            }
        }
        out
    }

    fn apply_vec(&self, a: usize, b: usize, v: &Free) -> Free {
        let mut out = Free::new();
        for (s, c) in v {
            for (r, x) in self.apply(a, b, s) {
                add(&mut out, r, c * &x);
            }
        }
        out
    }
}

/// One graded piece of the truncated module.
#[derive(Clone, Debug)]
struct Level {
    /// All monomials of this total occupation.
    states: Vec<FockState>,
    /// Lowering sequences `a_{i_1}^- ⋯ a_{i_d}^-` probing the vacuum component.
    probes: Vec<Vec<usize>>,
    /// Basis columns of the probe matrix, one per basis state.
    columns: Vec<Vec<Scalar>>,
}

/// Truncated Fock module of order `p`.
pub struct FockModule {
    pub spec: AlgebraSpec,
    pub p: u32,
    pub cutoff: u32,
    pub basis: Vec<FockState>,
    index: HashMap<FockState, usize>,
    levels: Vec<Level>,
    st: Straightener,
}

fn occupations(theta: &[u8], total: u32) -> Vec<FockState> {
    let modes = theta.len() - 1;
    let mut out = Vec::new();
    let mut cur = vec![0u32; modes];
    fn rec(k: usize, left: u32, theta: &[u8], cur: &mut Vec<u32>, out: &mut Vec<FockState>) {
        if k == cur.len() {
            if left == 0 {
                out.push(FockState(cur.clone()));
            }
            return;
        }
        let cap = if theta[k + 1] == 1 { left.min(1) } else { left };
        for r in 0..=cap {
            cur[k] = r;
            rec(k + 1, left - r, theta, cur, out);
        }
        cur[k] = 0;
    }
    rec(0, total, theta, &mut cur, &mut out);
    out
}

/// Nondecreasing index sequences of length `d`, odd indices used at most once.
fn probe_sequences(theta: &[u8], d: u32) -> Vec<Vec<usize>> {
    occupations(theta, d)
        .into_iter()
        .map(|s| s.0.iter().enumerate().flat_map(|(k, &r)| std::iter::repeat_n(k + 1, r as usize)).collect())
        .collect()
}

/// Number of states with total occupation at most `min(p, cutoff)`, counted
/// directly; the module dimension predicted by the supersymmetric power.
pub fn brute_force_dimension(spec: &AlgebraSpec, p: u32, cutoff: u32) -> usize {
    let modes = spec.rank();
    let odd = |i: usize| i > spec.n as usize;
    let bound = p.min(cutoff);
    let mut count = 0;
    let mut cur = vec![0u32; modes];
    loop {
        let total: u32 = cur.iter().sum();
        if total <= bound && cur.iter().enumerate().all(|(k, &r)| !odd(k + 1) || r <= 1) {
            count += 1;
        }
        // odometer over [0, bound]^modes
        let mut k = 0;
        loop {
            if k == modes {
                return count;
            }
            if cur[k] < bound {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// Energies `ε_i` of the free Hamiltonian.
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianSpec {
    pub epsilons: Vec<Rat>,
}

impl HamiltonianSpec {
    /// Checks `Σ_i (−1)^{θ_i} ε_i = 0` and the length.
    pub fn validate(&self, spec: &AlgebraSpec) -> Result<()> {
        if self.epsilons.len() != spec.rank() {
            return Err(Error::Precondition(format!(
                "expected {} energies, got {}",
                spec.rank(),
                self.epsilons.len()
            )));
        }
        let sum: Rat = self
            .epsilons
            .iter()
            .enumerate()
            .map(|(k, e)| if spec.sign(k + 1) > 0 { e.clone() } else { -e.clone() })
            .sum();
        if sum != Rat::from_integer(0.into()) {
            return Err(Error::Precondition(format!(
                "energies violate Σ (−1)^θ_i ε_i = 0 (sum is {sum})"
            )));
        }
        Ok(())
    }
}

/// Dense square matrix over the module basis; column `j` is the image of state `j`.
pub type Matrix = Vec<Vec<Scalar>>;

/// Image of an operator: entries plus, per column, whether the image left the
/// truncation (those columns are not trustworthy).
#[derive(Clone, Debug)]
pub struct OpMatrix {
    pub entries: Matrix,
    pub escapes: Vec<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LadderReport {
    pub epsilons: Vec<String>,
    /// `[H, a_i^±] = ±ε_i a_i^±` on every interior state.
    pub holds: bool,
    pub interior_states: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupercommutationReport {
    pub holds: bool,
    pub pairs_checked: usize,
    pub failures: Vec<String>,
}

pub fn build_fock(spec: &AlgebraSpec, p: u32, cutoff: i64) -> Result<FockModule> {
    if spec.deformed {
        return Err(Error::Precondition("Fock modules are built for the classical algebra".into()));
    }
    if cutoff < 0 {
        return Err(Error::Precondition(format!("cutoff must be nonnegative, got {cutoff}")));
    }
    if p == 0 {
        return Err(Error::Precondition("order p must be positive".into()));
    }
    let cutoff = cutoff as u32;
    let theta: Vec<u8> = (0..=spec.rank()).map(|i| spec.theta(i).expect("in range")).collect();
    let st = Straightener { theta: theta.clone(), p: Scalar::from_int(p as i64) };
    let mut module = FockModule {
        spec: *spec,
        p,
        cutoff,
        basis: Vec::new(),
        index: HashMap::new(),
        levels: Vec::new(),
        st,
    };
    for d in 0..=cutoff {
        let states = occupations(&theta, d);
        let probes = probe_sequences(&theta, d);
        let mut level = Level { states, probes, columns: Vec::new() };
        let mut ech = Echelon::new();
        for s in level.states.clone() {
            let mut v = Free::new();
            v.insert(s.clone(), Scalar::one());
            let col = module.probe(&level, &v);
            if ech.insert(col.clone()) {
                module.index.insert(s.clone(), module.basis.len());
                module.basis.push(s);
                level.columns.push(col);
            }
        }
        module.levels.push(level);
    }
    Ok(module)
}

impl FockModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vacuum(&self) -> FockState {
        FockState::vacuum(self.spec.rank())
    }

    /// Vacuum components of all lowering sequences applied to `v`.
    fn probe(&self, level: &Level, v: &Free) -> Vec<Scalar> {
        level
            .probes
            .iter()
            .map(|seq| {
                let mut w = v.clone();
                for &i in seq.iter().rev() {
                    w = self.st.apply_vec(0, i, &w);
                }
                w.get(&self.vacuum()).cloned().unwrap_or_else(Scalar::zero)
            })
            .collect()
    }

    /// Coordinates of a free-module vector of total occupation `d` in the
    /// quotient basis; `None` when `d` exceeds the cutoff.
    fn project(&self, d: u32, v: &Free) -> Option<Vec<(usize, Scalar)>> {
        let level = self.levels.get(d as usize)?;
        if v.is_empty() || level.columns.is_empty() {
            return Some(Vec::new());
        }
        let target = self.probe(level, v);
        let x = solve(&level.columns, &target).expect("quotient columns span the probe image");
        let first = level.states.iter().find_map(|s| self.index.get(s).copied());
        let base = first.expect("nonempty level has a basis state");
        Some(x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (base + k, c)).collect())
    }

    fn raw(&self, op: FockOp, s: &FockState) -> (i64, Free) {
        let mut v = Free::new();
        v.insert(s.clone(), Scalar::one());
        match op {
            FockOp::Create(i) => (1, self.st.apply_vec(i, 0, &v)),
            FockOp::Annihilate(i) => (-1, self.st.apply_vec(0, i, &v)),
            FockOp::Cartan(i) => {
                let a = self.st.apply_vec(0, 0, &v);
                let mut b = self.st.apply_vec(i, i, &v);
                if self.spec.sign(i) < 0 {
                    b = b.into_iter().map(|(k, c)| (k, -c)).collect();
                }
                let mut out = a;
                for (k, c) in b {
                    add(&mut out, k, -c);
                }
                (0, out)
            }
        }
    }

    /// Image of basis state `s`; `None` when it leaves the truncation.
    pub fn act(&self, op: FockOp, s: &FockState) -> Result<Option<Vec<(usize, Scalar)>>> {
        let i = match op {
            FockOp::Create(i) | FockOp::Annihilate(i) | FockOp::Cartan(i) => i,
        };
        if i == 0 || i > self.spec.rank() {
            return Err(Error::IndexOutOfRange { index: i as i64, lo: 1, hi: self.spec.rank() as i64 });
        }
        if !self.index.contains_key(s) {
            return Err(Error::StateNotInBasis);
        }
        let (shift, v) = self.raw(op, s);
        let d = s.total() as i64 + shift;
        if d < 0 {
            return Ok(Some(Vec::new()));
        }
        Ok(self.project(d as u32, &v))
    }

    pub fn matrix(&self, op: FockOp) -> Result<OpMatrix> {
        let n = self.dim();
        let mut entries = vec![vec![Scalar::zero(); n]; n];
        let mut escapes = vec![false; n];
        for (j, s) in self.basis.iter().enumerate() {
            match self.act(op, s)? {
                Some(col) => {
                    for (i, c) in col {
                        entries[i][j] = c;
                    }
                }
                None => escapes[j] = true,
            }
        }
        Ok(OpMatrix { entries, escapes })
    }

    /// `H = Σ_i ε_i ⟦a_i^+, a_i^-⟧`, straightened in the free module so that
    /// states at the cutoff are treated exactly.
    pub fn hamiltonian(&self, h: &HamiltonianSpec) -> Result<Matrix> {
        h.validate(&self.spec)?;
        let n = self.dim();
        let mut out = vec![vec![Scalar::zero(); n]; n];
        for (j, s) in self.basis.iter().enumerate() {
            let mut v = Free::new();
            v.insert(s.clone(), Scalar::one());
            let mut acc = Free::new();
            for (k, e) in h.epsilons.iter().enumerate() {
                let i = k + 1;
                let e = Scalar::from_rat(e.clone());
                // a_i^+ a_i^- − (−1)^{θ_i} a_i^- a_i^+
                let pm = self.st.apply_vec(i, 0, &self.st.apply_vec(0, i, &v));
                let mp = self.st.apply_vec(0, i, &self.st.apply_vec(i, 0, &v));
                let sign = Scalar::from_int(self.spec.sign(i));
                for (r, c) in pm {
                    add(&mut acc, r, &e * &c);
                }
                for (r, c) in mp {
                    add(&mut acc, r, -(&(&e * &sign) * &c));
                }
            }
            for (i, c) in self.project(s.total(), &acc).expect("degree preserved") {
                out[i][j] = c;
            }
        }
        Ok(out)
    }

    /// `Σ_i ε_i H_i` with `H_i = ⟦a_i^-, a_i^+⟧`, for comparison with
    /// [`FockModule::hamiltonian`].
    pub fn hamiltonian_cartan_form(&self, h: &HamiltonianSpec) -> Result<Matrix> {
        h.validate(&self.spec)?;
        let n = self.dim();
        let mut out = vec![vec![Scalar::zero(); n]; n];
        for (k, e) in h.epsilons.iter().enumerate() {
            let m = self.matrix(FockOp::Cartan(k + 1))?;
            let e = Scalar::from_rat(e.clone());
            for (row, mrow) in out.iter_mut().zip(&m.entries) {
                for (x, y) in row.iter_mut().zip(mrow) {
                    *x += &(&e * y);
                }
            }
        }
        Ok(out)
    }

    /// Checks `[H, a_i^±] = ±ε_i a_i^±` on interior states, those whose
    /// images under `a_i^±` stay within the cutoff.
    pub fn ladder_check(&self, h: &HamiltonianSpec) -> Result<LadderReport> {
        let hm = self.hamiltonian(h)?;
        let n = self.dim();
        let mut failures = Vec::new();
        let mut interior = vec![true; n];
        for i in 1..=self.spec.rank() {
            let eps = Scalar::from_rat(h.epsilons[i - 1].clone());
            for (op, sign) in [(FockOp::Create(i), 1), (FockOp::Annihilate(i), -1)] {
                let a = self.matrix(op)?;
                for j in 0..n {
                    if a.escapes[j] {
                        interior[j] = false;
                        continue;
                    }
                    // column j of H·A − A·H − sign·ε·A
                    for r in 0..n {
                        let mut x = Scalar::zero();
                        for k in 0..n {
                            x += &(&hm[r][k] * &a.entries[k][j]);
                            x -= &(&a.entries[r][k] * &hm[k][j]);
                        }
                        x -= &(&(&eps * &Scalar::from_int(sign)) * &a.entries[r][j]);
                        if !x.is_zero() {
                            failures.push(format!("{} on {:?}: row {:?} off by {x}", op.name(), self.basis[j].0, self.basis[r].0));
                        }
                    }
                }
            }
        }
        Ok(LadderReport {
            epsilons: h.epsilons.iter().map(|e| e.to_string()).collect(),
            holds: failures.is_empty(),
            interior_states: interior.iter().filter(|&&b| b).count(),
            failures,
        })
    }

    /// Checks `a_i^+ a_j^+ = (−1)^{θ_iθ_j} a_j^+ a_i^+` on states two below
    /// the cutoff.
    pub fn supercommutation_check(&self) -> Result<SupercommutationReport> {
        let r = self.spec.rank();
        let mats: Vec<OpMatrix> = (1..=r).map(|i| self.matrix(FockOp::Create(i))).collect::<Result<_>>()?;
        let n = self.dim();
        let mut failures = Vec::new();
        let mut pairs = 0;
        for i in 1..=r {
            for j in i..=r {
                pairs += 1;
                let sign = if self.spec.sign(i) < 0 && self.spec.sign(j) < 0 { -1 } else { 1 };
                let (a, b) = (&mats[i - 1], &mats[j - 1]);
                for col in 0..n {
                    if self.basis[col].total() + 2 > self.cutoff {
                        continue;
                    }
                    for row in 0..n {
                        let mut x = Scalar::zero();
                        for k in 0..n {
                            x += &(&a.entries[row][k] * &b.entries[k][col]);
                            x -= &(&(&b.entries[row][k] * &a.entries[k][col]) * &Scalar::from_int(sign));
                        }
                        if !x.is_zero() {
                            failures.push(format!("ap{i} ap{j} on {:?}", self.basis[col].0));
                        }
                    }
                }
            }
        }
        Ok(SupercommutationReport { holds: failures.is_empty(), pairs_checked: pairs, failures })
    }

    /// True when every action entry is an integer.
    pub fn entries_are_integral(&self) -> Result<bool> {
        for i in 1..=self.spec.rank() {
            for op in [FockOp::Create(i), FockOp::Annihilate(i), FockOp::Cartan(i)] {
                for row in self.matrix(op)?.entries {
                    for c in row {
                        match c.as_rat() {
                            Some(r) if r.is_integer() => {}
                            _ => return Ok(false),
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn to_json(&self, h: Option<&HamiltonianSpec>) -> Result<FockDump> {
        let mut actions = BTreeMap::new();
        for i in 1..=self.spec.rank() {
            for op in [FockOp::Create(i), FockOp::Annihilate(i), FockOp::Cartan(i)] {
                let m = self.matrix(op)?;
                actions.insert(op.name(), m.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect());
            }
        }
        let spectrum = match h {
            Some(h) => {
                let hm = self.hamiltonian(h)?;
                Some((0..self.dim()).map(|k| hm[k][k].to_string()).collect())
            }
            None => None,
        };
        Ok(FockDump {
            n: self.spec.n,
            m: self.spec.m,
            p: self.p,
            cutoff: self.cutoff,
            dimension: self.dim(),
            basis: self.basis.iter().map(|s| s.0.clone()).collect(),
            actions,
            spectrum,
        })
    }

    /// CSV of the Hamiltonian spectrum: one line per basis state.
    pub fn spectrum_csv(&self, h: &HamiltonianSpec) -> Result<String> {
        let hm = self.hamiltonian(h)?;
        let mut out = String::from("state,total,energy\n");
        for (k, s) in self.basis.iter().enumerate() {
            let occ: Vec<String> = s.0.iter().map(u32::to_string).collect();
            writeln!(out, "{},{},{}", occ.join(" "), s.total(), hm[k][k]).expect("write to string");
        }
        Ok(out)
    }
}

/// Serialized module: basis, action matrices and optional spectrum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FockDump {
    pub n: u8,
    pub m: u8,
    pub p: u32,
    pub cutoff: u32,
    pub dimension: usize,
    pub basis: Vec<Vec<u32>>,
    pub actions: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn cl(n: u8, m: u8) -> AlgebraSpec {
        AlgebraSpec::classical(n, m)
    }

    fn st(v: &[u32]) -> FockState {
        FockState(v.to_vec())
    }

    fn coeff(v: &[(usize, Scalar)], k: usize) -> Scalar {
        v.iter().find(|(i, _)| *i == k).map(|(_, c)| c.clone()).unwrap_or_else(Scalar::zero)
    }

    #[test]
    fn small_bases() {
        let f = build_fock(&cl(1, 1), 1, 1).unwrap();
        assert_eq!(f.basis, vec![st(&[0, 0]), st(&[0, 1]), st(&[1, 0])]);
        let f = build_fock(&cl(1, 0), 2, 2).unwrap();
        assert_eq!(f.dim(), 3);
        // the state (1,1) is null at p = 1
        let f = build_fock(&cl(1, 1), 1, 3).unwrap();
        assert_eq!(f.dim(), 3);
    }

    #[test]
    fn lowering_coefficients() {
        // a_1^- (a_1^+)^r |0⟩ = r(p − r + 1)(a_1^+)^{r−1}|0⟩ for an even mode
        let f = build_fock(&cl(1, 0), 4, 4).unwrap();
        for r in 1..=4u32 {
            let img = f.act(FockOp::Annihilate(1), &st(&[r])).unwrap().unwrap();
            let k = f.index[&st(&[r - 1])];
            assert_eq!(coeff(&img, k), Scalar::from_int((r * (4 - r + 1)) as i64));
        }
        let f = build_fock(&cl(1, 1), 1, 1).unwrap();
        assert!(f.act(FockOp::Annihilate(1), &f.vacuum()).unwrap().unwrap().is_empty());
        let img = f.act(FockOp::Annihilate(1), &st(&[1, 0])).unwrap().unwrap();
        assert_eq!(img, vec![(0, Scalar::one())]);
    }

    #[test]
    fn odd_creation_squares_to_zero() {
        let f = build_fock(&cl(1, 2), 2, 2).unwrap();
        let img = f.act(FockOp::Create(2), &st(&[0, 1, 0])).unwrap().unwrap();
        assert!(img.is_empty());
    }

    #[test]
    fn cartan_eigenvalues() {
        let f = build_fock(&cl(1, 1), 2, 2).unwrap();
        for (k, s) in f.basis.iter().enumerate() {
            for i in 1..=2 {
                let img = f.act(FockOp::Cartan(i), s).unwrap().unwrap();
                let total = s.total() as i64;
                let expected = 2 - total - f.spec.sign(i) * s.0[i - 1] as i64;
                assert_eq!(coeff(&img, k), Scalar::from_int(expected), "{s:?} H{i}");
            }
        }
        let h1 = |s: &FockState| coeff(&f.act(FockOp::Cartan(1), s).unwrap().unwrap(), f.index[s]);
        assert_eq!(&h1(&f.vacuum()) - &h1(&st(&[1, 0])), Scalar::from_int(2));
    }

    #[test]
    fn hamiltonian_ladder() {
        let f = build_fock(&cl(1, 1), 1, 1).unwrap();
        let h = HamiltonianSpec { epsilons: vec![rat(1, 1), rat(1, 1)] };
        let hm = f.hamiltonian(&h).unwrap();
        let k = f.index[&st(&[1, 0])];
        assert_eq!(&hm[k][k] - &hm[0][0], Scalar::one());
        assert!(f.ladder_check(&h).unwrap().holds);
        let zero = HamiltonianSpec { epsilons: vec![rat(0, 1), rat(0, 1)] };
        assert!(f.hamiltonian(&zero).unwrap().iter().flatten().all(Scalar::is_zero));
        let bad = HamiltonianSpec { epsilons: vec![rat(1, 1), rat(0, 1)] };
        assert!(matches!(f.hamiltonian(&bad), Err(Error::Precondition(_))));
    }

    #[test]
    fn dimensions_match_enumeration() {
        for (n, m) in [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (0, 2)] {
            for p in 1..=2 {
                for cutoff in 0..=3 {
                    let f = build_fock(&cl(n, m), p, cutoff).unwrap();
                    assert_eq!(f.dim(), brute_force_dimension(&cl(n, m), p, cutoff as u32), "({n},{m}) p={p} c={cutoff}");
                }
            }
        }
    }

    #[test]
    fn creators_supercommute() {
        let f = build_fock(&cl(1, 2), 2, 3).unwrap();
        assert!(f.supercommutation_check().unwrap().holds);
        assert!(f.entries_are_integral().unwrap());
    }

    #[test]
    fn errors() {
        assert!(build_fock(&cl(1, 1), 1, -1).is_err());
        assert!(build_fock(&AlgebraSpec::deformed(1, 1), 1, 1).is_err());
        let f = build_fock(&cl(1, 1), 1, 1).unwrap();
        assert!(matches!(f.act(FockOp::Create(1), &st(&[1, 1])), Err(Error::StateNotInBasis)));
    }

    #[test]
    fn dump_and_csv() {
        let f = build_fock(&cl(1, 1), 1, 1).unwrap();
        let h = HamiltonianSpec { epsilons: vec![rat(1, 1), rat(1, 1)] };
        let d = f.to_json(Some(&h)).unwrap();
        assert_eq!(d.basis.len(), 3);
        let back: FockDump = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(back, d);
        assert_eq!(f.spectrum_csv(&h).unwrap().lines().count(), 4);
    }
}
