//! The modular-data model.
//!
//! A [`ModularData`] holds the unnormalized S-matrix and the diagonal
//! T-matrix (as roots of unity) of a modular category. From it we derive
//! dimensions, the duality permutation, Gauss sums, the anomaly, the
//! Frobenius-Schur exponent, fusion rules via the Verlinde formula, and a
//! full axiom report. The duality permutation is always read off
//! s~^2 = dim * C rather than taken as input, so it cannot contradict the
//! matrix.
//!
//! Ambient field policy: inputs may declare any cyclotomic order M0; after
//! the exponent N = ord(t~) is known, everything is promoted to
//! M = lcm(M0, 12N). All the scalars appearing in liftings of the
//! projective representation (sixth roots of the anomaly, twelfth roots of
//! unity) then live in the same field.

use crate::cyclo::{CycloNum, Rational, RootOfUnity};
use crate::matrix::CMat;
use crate::nt;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

#[derive(Clone)]
pub struct ModularData {
    name: String,
    rank: usize,
    ambient: u64,
    s_tilde: CMat,
    theta: Vec<RootOfUnity>,
}

impl ModularData {
    /// Build from entries over Q_{declared_order} and T-matrix exponents
    /// theta_i = zeta_{declared_order}^{exps[i]}. Shape problems and a
    /// nontrivial theta_0 are rejected here; mathematical axioms are the
    /// business of [`ModularData::validate`].
    pub fn new(
        name: impl Into<String>,
        declared_order: u64,
        s_rows: Vec<Vec<CycloNum>>,
        theta_exps: &[u64],
    ) -> Result<Self> {
        let name = name.into();
        let rank = s_rows.len();
        if rank == 0 {
            return Err(Error::InvalidInput("rank must be positive".into()));
        }
        if declared_order == 0 {
            return Err(Error::InvalidInput("field order must be positive".into()));
        }
        for (i, row) in s_rows.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidInput(format!(
                    "s_tilde is not square: row {i} has {} entries, expected {rank}",
                    row.len()
                )));
            }
        }
        if theta_exps.len() != rank {
            return Err(Error::InvalidInput(format!(
                "theta has {} exponents, expected {rank}",
                theta_exps.len()
            )));
        }
        if theta_exps[0] % declared_order != 0 {
            return Err(Error::InvalidInput(
                "theta_0 must be 1 (exponent 0)".into(),
            ));
        }
        let theta: Vec<RootOfUnity> = theta_exps
            .iter()
            .map(|&e| RootOfUnity::new(declared_order, e))
            .collect();
        let fsexp = theta.iter().fold(1u64, |l, r| nt::lcm(l, r.order()));
        let ambient = nt::lcm(declared_order, 12 * fsexp);
        let entries: Result<Vec<CycloNum>> = s_rows
            .into_iter()
            .flatten()
            .map(|e| {
                if e.order() != declared_order {
                    Err(Error::OrderMismatch(declared_order, e.order()))
                } else {
                    e.promote(ambient)
                }
            })
            .collect();
        let s_tilde = CMat::from_entries(ambient, rank, entries?)?;
        Ok(ModularData { name, rank, ambient, s_tilde, theta })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The common cyclotomic order M = lcm(M0, 12N) everything lives in.
    pub fn ambient(&self) -> u64 {
        self.ambient
    }

    pub fn s_tilde(&self) -> &CMat {
        &self.s_tilde
    }

    pub fn theta(&self) -> &[RootOfUnity] {
        &self.theta
    }

    /// Frobenius-Schur exponent N = ord(t~) = lcm of the orders of the
    /// twists.
    pub fn fsexp(&self) -> u64 {
        self.theta.iter().fold(1u64, |l, r| nt::lcm(l, r.order()))
    }

    /// The diagonal T-matrix as a full matrix over the ambient field.
    pub fn t_matrix(&self) -> CMat {
        let mut t = CMat::identity(self.ambient, self.rank);
        for (i, r) in self.theta.iter().enumerate() {
            t.set(i, i, r.to_cyclo(self.ambient).expect("theta order divides ambient"));
        }
        t
    }

    /// Structural part of the derivation: dimensions, global dimension,
    /// duality from s~^2 = dim * C, and the two Gauss sums. Enough for the
    /// axiom checks to be evaluated independently of each other.
    fn derive_core(&self) -> Result<CoreDerived> {
        let m = self.ambient;
        let r = self.rank;
        let dims: Vec<CycloNum> = (0..r).map(|i| self.s_tilde.at(0, i).clone()).collect();
        let mut global_dim = CycloNum::zero(m);
        for d in &dims {
            global_dim = &global_dim + &(d * d);
        }
        if global_dim.is_zero() {
            return Err(Error::Degenerate);
        }
        let dim_inv = global_dim.inv()?;
        let s2 = self.s_tilde.mul(&self.s_tilde);
        let c_mat = s2.scale(&dim_inv);
        let dual = c_mat.as_permutation().ok_or_else(|| {
            Error::NotModular("s~^2 / dim is not a 0/1 permutation matrix".into())
        })?;
        if dual[0] != 0 {
            return Err(Error::NotModular(
                "charge conjugation does not fix the unit object".into(),
            ));
        }
        for i in 0..r {
            if dual[dual[i]] != i {
                return Err(Error::NotModular(
                    "charge conjugation is not an involution".into(),
                ));
            }
        }
        let mut gauss_plus = CycloNum::zero(m);
        let mut gauss_minus = CycloNum::zero(m);
        for (d, th) in dims.iter().zip(&self.theta) {
            let d2 = d * d;
            gauss_plus = &gauss_plus + &d2.mul_root(th)?;
            gauss_minus = &gauss_minus + &d2.mul_root(&th.inv())?;
        }
        Ok(CoreDerived { dims, dual, global_dim, gauss_plus, gauss_minus })
    }

    /// Derive dimensions, duality, Gauss sums, anomaly and exponent,
    /// verifying on the way that the data has a chance of being modular.
    pub fn derive(&self) -> Result<DerivedInvariants> {
        let core = self.derive_core()?;
        if &core.gauss_plus * &core.gauss_minus != core.global_dim {
            return Err(Error::NotModular(
                "Gauss sums do not multiply to the global dimension".into(),
            ));
        }
        if core.gauss_minus.is_zero() {
            return Err(Error::NotModular("vanishing Gauss sum".into()));
        }
        let alpha_num = &core.gauss_plus * &core.gauss_minus.inv()?;
        let anomaly = alpha_num.as_root_of_unity().ok_or_else(|| {
            Error::NotModular("anomaly p+/p- is not a root of unity".into())
        })?;
        Ok(DerivedInvariants {
            ambient: self.ambient,
            dims: core.dims,
            dual: core.dual,
            global_dim: core.global_dim,
            gauss_plus: core.gauss_plus,
            gauss_minus: core.gauss_minus,
            anomaly,
            fsexp: self.fsexp(),
        })
    }

    /// Fusion rules via the Verlinde formula; every coefficient must come
    /// out a non-negative rational integer or the data is not modular.
    pub fn verlinde(&self, inv: &DerivedInvariants) -> Result<FusionTensor> {
        let r = self.rank;
        let dim_inv = inv.global_dim.inv()?;
        let mut col_inv = Vec::with_capacity(r);
        for q in 0..r {
            let e = self.s_tilde.at(0, q);
            if e.is_zero() {
                return Err(Error::NotModular(format!("s~[0][{q}] vanishes")));
            }
            col_inv.push(e.inv()?);
        }
        let mut entries = vec![0u64; r * r * r];
        for i in 0..r {
            for j in i..r {
                for k in 0..r {
                    let ks = inv.dual[k];
                    let mut acc = CycloNum::zero(self.ambient);
                    for q in 0..r {
                        let prod = &(self.s_tilde.at(i, q) * self.s_tilde.at(j, q))
                            * self.s_tilde.at(ks, q);
                        acc = &acc + &(&prod * &col_inv[q]);
                    }
                    let val = &acc * &dim_inv;
                    let n = val.as_integer().ok_or_else(|| Error::VerlindeFailure {
                        i,
                        j,
                        k,
                        value: val.to_string(),
                    })?;
                    if n.is_negative() {
                        return Err(Error::VerlindeFailure { i, j, k, value: n.to_string() });
                    }
                    let n = n.to_u64().ok_or_else(|| Error::VerlindeFailure {
                        i,
                        j,
                        k,
                        value: "overflow".into(),
                    })?;
                    entries[(i * r + j) * r + k] = n;
                    entries[(j * r + i) * r + k] = n;
                }
            }
        }
        Ok(FusionTensor { rank: r, entries })
    }

    /// Run every axiom check and report pass/fail per check. Failures are
    /// report entries, never errors.
    pub fn validate(&self) -> AxiomReport {
        let mut report = AxiomReport { checks: Vec::new() };
        let r = self.rank;
        let m = self.ambient;

        let mut sym = self.s_tilde.at(0, 0).is_one();
        let mut sym_detail = if sym {
            None
        } else {
            Some("s~[0][0] != 1".to_string())
        };
        'sym: for i in 0..r {
            for j in (i + 1)..r {
                if self.s_tilde.at(i, j) != self.s_tilde.at(j, i) {
                    sym = false;
                    sym_detail = Some(format!("s~[{i}][{j}] != s~[{j}][{i}]"));
                    break 'sym;
                }
            }
        }
        report.push("s-symmetric", sym, sym_detail);

        let inv = match self.derive() {
            Ok(inv) => inv,
            Err(e) => {
                report.push("derive", false, Some(e.to_string()));
                for name in [
                    "s-dual-symmetry",
                    "s-squared",
                    "st-cubed",
                    "charge-conjugation",
                    "unitarity",
                    "dims-real-selfdual",
                    "verlinde-integral",
                ] {
                    report.push(name, false, Some("skipped: derivation failed".into()));
                }
                return report;
            }
        };
        let dual = &inv.dual;

        let mut ds = true;
        'ds: for i in 0..r {
            for j in 0..r {
                if self.s_tilde.at(i, dual[j]) != self.s_tilde.at(dual[i], j) {
                    ds = false;
                    break 'ds;
                }
            }
        }
        report.push("s-dual-symmetry", ds, None);

        let s2 = self.s_tilde.mul(&self.s_tilde);
        let dim_c = CMat::permutation(m, dual).scale(&inv.global_dim);
        report.push("s-squared", s2 == dim_c, None);

        let st = self.s_tilde.scale_cols(&self.theta).expect("theta in ambient");
        let st3 = st.mul(&st).mul(&st);
        let p_s2 = s2.map(|e| e * &inv.gauss_plus);
        report.push("st-cubed", st3 == p_s2, None);

        let cc = (0..r).all(|i| self.theta[dual[i]] == self.theta[i]);
        report.push("charge-conjugation", cc, None);

        let mut unit = true;
        let s_conj = self.s_tilde.conj();
        'unit: for i in 0..r {
            for k in 0..r {
                let mut acc = CycloNum::zero(m);
                for j in 0..r {
                    acc = &acc + &(self.s_tilde.at(i, j) * s_conj.at(k, j));
                }
                let expect = if i == k {
                    inv.global_dim.clone()
                } else {
                    CycloNum::zero(m)
                };
                if acc != expect {
                    unit = false;
                    break 'unit;
                }
            }
        }
        report.push("unitarity", unit, None);

        let dr = (0..r).all(|i| {
            inv.dims[i] == inv.dims[dual[i]] && inv.dims[i].conj() == inv.dims[i]
        });
        report.push("dims-real-selfdual", dr, None);

        match self.verlinde(&inv) {
            Ok(_) => report.push("verlinde-integral", true, None),
            Err(e) => report.push("verlinde-integral", false, Some(e.to_string())),
        }
        report
    }

    /// The central charge c (rational, reduced into [0, 8)): the anomaly
    /// pins c mod 4 exactly, and the numeric embedding of p+ / sqrt(dim)
    /// picks between the two candidates c, c + 4.
    pub fn central_charge(&self, inv: &DerivedInvariants) -> Result<Rational> {
        let dim_num = inv.global_dim.numeric();
        if !(dim_num.re > 0.0) || dim_num.im.abs() > 1e-9 {
            return Err(Error::NotApplicable(
                "central charge undefined: dim is not positive in this embedding".into(),
            ));
        }
        // alpha = exp(pi i c / 2) = zeta_ord^exp  =>  c = 4 exp / ord (mod 4)
        let ord = inv.anomaly.order();
        let exp = inv.anomaly.exponent();
        let mut c0 = Rational::new(BigInt::from(4 * exp), BigInt::from(ord));
        let four = Rational::from_integer(BigInt::from(4));
        while c0 >= four {
            c0 -= &four;
        }
        let sqrt_dim = dim_num.re.sqrt();
        let target = inv.gauss_plus.numeric() / sqrt_dim;
        for cand in [c0.clone(), &c0 + &four] {
            let ang = std::f64::consts::PI * cand.to_f64().unwrap() / 4.0;
            let w = num_complex::Complex64::new(ang.cos(), ang.sin());
            if (w - target).norm() < 1e-9 {
                return Ok(cand);
            }
        }
        Err(Error::NotModular(
            "p+ / sqrt(dim) is not the expected root of unity".into(),
        ))
    }
}

/// Invariants derived from modular data.
#[derive(Clone)]
pub struct DerivedInvariants {
    pub(crate) ambient: u64,
    /// d_i = s~[0][i].
    pub dims: Vec<CycloNum>,
    /// Duality permutation i -> i*, read off s~^2 = dim * C.
    pub dual: Vec<usize>,
    /// dim A = sum of d_i^2.
    pub global_dim: CycloNum,
    pub gauss_plus: CycloNum,
    pub gauss_minus: CycloNum,
    /// alpha = p+ / p-, always a root of unity for modular data.
    pub anomaly: RootOfUnity,
    /// N = ord(t~).
    pub fsexp: u64,
}

impl DerivedInvariants {
    /// Charge conjugation as a 0/1 matrix over the ambient field.
    pub fn charge_conj_matrix(&self) -> CMat {
        CMat::permutation(self.ambient, &self.dual)
    }
}

/// Fusion multiplicities N_{ij}^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionTensor {
    rank: usize,
    entries: Vec<u64>,
}

impl FusionTensor {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> u64 {
        self.entries[(i * self.rank + j) * self.rank + k]
    }
}

#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

/// Pass/fail per axiom; `pass()` is the conjunction.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    fn push(&mut self, name: &'static str, pass: bool, detail: Option<String>) {
        self.checks.push(AxiomCheck { name, pass, detail });
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat_int;

    fn trivial() -> ModularData {
        ModularData::new("trivial", 1, vec![vec![CycloNum::one(1)]], &[0]).unwrap()
    }

    fn toric() -> ModularData {
        let e = |n: i64| CycloNum::from_int(2, n);
        ModularData::new(
            "toric",
            2,
            vec![
                vec![e(1), e(1), e(1), e(1)],
                vec![e(1), e(1), e(-1), e(-1)],
                vec![e(1), e(-1), e(1), e(-1)],
                vec![e(1), e(-1), e(-1), e(1)],
            ],
            &[0, 0, 0, 1],
        )
        .unwrap()
    }

    fn half() -> Rational {
        Rational::new(BigInt::from(1), BigInt::from(2))
    }

    fn golden_ratio() -> CycloNum {
        CycloNum::make(
            5,
            &[
                (0, half()),
                (1, half()),
                (2, -half()),
                (3, -half()),
                (4, half()),
            ],
        )
    }

    fn fibonacci_with_theta(exp1: u64) -> ModularData {
        let phi = golden_ratio();
        ModularData::new(
            "fibonacci",
            5,
            vec![
                vec![CycloNum::one(5), phi.clone()],
                vec![phi, CycloNum::from_int(5, -1)],
            ],
            &[0, exp1],
        )
        .unwrap()
    }

    #[test]
    fn trivial_derives() {
        let d = trivial();
        assert_eq!(d.ambient(), 12);
        let inv = d.derive().unwrap();
        assert!(inv.global_dim.is_one());
        assert!(inv.gauss_plus.is_one());
        assert!(inv.gauss_minus.is_one());
        assert!(inv.anomaly.is_one());
        assert_eq!(inv.fsexp, 1);
        assert_eq!(inv.dual, vec![0]);
        assert!(d.validate().pass());
    }

    #[test]
    fn toric_derives() {
        let d = toric();
        assert_eq!(d.ambient(), 24);
        let inv = d.derive().unwrap();
        assert_eq!(inv.global_dim, CycloNum::from_int(24, 4));
        // hand sum: p+ = 1 + 1 + 1 - 1 = 2, and the same for p-
        assert_eq!(inv.gauss_plus, CycloNum::from_int(24, 2));
        assert_eq!(inv.gauss_minus, CycloNum::from_int(24, 2));
        assert!(inv.anomaly.is_one());
        assert_eq!(inv.fsexp, 2);
        assert_eq!(inv.dual, vec![0, 1, 2, 3]);
        assert!(d.validate().pass());
        assert_eq!(d.central_charge(&inv).unwrap(), rat_int(0));
    }

    #[test]
    fn toric_fusion_is_z2_squared() {
        let d = toric();
        let inv = d.derive().unwrap();
        let f = d.verlinde(&inv).unwrap();
        // labels 0,1,2,3 = (0,0),(0,1),(1,0),(1,1) under xor fusion
        for i in 0..4usize {
            for j in 0..4usize {
                for k in 0..4usize {
                    let expect = u64::from(i ^ j == k);
                    assert_eq!(f.at(i, j, k), expect, "N[{i},{j}]^{k}");
                }
            }
        }
    }

    #[test]
    fn fibonacci_derives_paper_values() {
        let d = fibonacci_with_theta(2);
        assert_eq!(d.ambient(), 60);
        let inv = d.derive().unwrap();
        let expect_dim =
            &CycloNum::from_int(60, 2) + &golden_ratio().promote(60).unwrap();
        assert_eq!(inv.global_dim, expect_dim);
        assert_eq!(inv.fsexp, 5);
        // anomaly exp(7 pi i / 5) = zeta_10^7
        assert_eq!(inv.anomaly, RootOfUnity::new(10, 7));
        assert!(d.validate().pass());
        // central charge 14/5
        assert_eq!(
            d.central_charge(&inv).unwrap(),
            Rational::new(BigInt::from(14), BigInt::from(5))
        );
        // fusion: N[1,1]^0 = N[1,1]^1 = 1
        let f = d.verlinde(&inv).unwrap();
        assert_eq!(f.at(1, 1, 0), 1);
        assert_eq!(f.at(1, 1, 1), 1);
        assert_eq!(f.at(0, 1, 1), 1);
        assert_eq!(f.at(0, 1, 0), 0);
    }

    #[test]
    fn corrupted_fibonacci_fails_st_cubed() {
        // theta_1 = zeta_5 instead of zeta_5^2
        let d = fibonacci_with_theta(1);
        let report = d.validate();
        assert!(!report.pass());
        let by_name: std::collections::HashMap<_, _> =
            report.checks.iter().map(|c| (c.name, c.pass)).collect();
        assert!(!by_name["st-cubed"]);
        assert!(by_name["s-symmetric"]);
        assert!(by_name["s-squared"]);
    }

    #[test]
    fn semion_central_charge() {
        let one = CycloNum::one(4);
        let d = ModularData::new(
            "semion",
            4,
            vec![
                vec![one.clone(), one.clone()],
                vec![one, CycloNum::from_int(4, -1)],
            ],
            &[0, 1],
        )
        .unwrap();
        let inv = d.derive().unwrap();
        assert_eq!(inv.anomaly, RootOfUnity::new(4, 1));
        assert_eq!(d.central_charge(&inv).unwrap(), rat_int(1));
        assert!(d.validate().pass());
    }

    #[test]
    fn shape_rejections() {
        let one = CycloNum::one(4);
        // non-square
        assert!(matches!(
            ModularData::new(
                "bad",
                4,
                vec![vec![one.clone()], vec![one.clone(), one.clone()]],
                &[0, 0]
            ),
            Err(Error::InvalidInput(_))
        ));
        // theta_0 != 1
        assert!(matches!(
            ModularData::new("bad", 4, vec![vec![one.clone()]], &[1]),
            Err(Error::InvalidInput(_))
        ));
        // wrong theta length
        assert!(matches!(
            ModularData::new("bad", 4, vec![vec![one]], &[0, 0]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn s_inverse_identity_from_relations() {
        // s~ * (C-permuted s~) = dim * id, i.e. s~^{-1} = C s~ / dim
        for d in [toric(), fibonacci_with_theta(2)] {
            let inv = d.derive().unwrap();
            let c = inv.charge_conj_matrix();
            let prod = d.s_tilde().mul(&c.mul(d.s_tilde()));
            let dim_id = CMat::identity(d.ambient(), d.rank()).scale(&inv.global_dim);
            assert_eq!(prod, dim_id);
        }
    }
}
