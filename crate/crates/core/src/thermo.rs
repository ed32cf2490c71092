//! Stiffened-gas thermodynamics for N = 1, 2 species in d = 2, 3 dimensions:
//! conserved/primitive conversions, physical fluxes, the entropy pair
//! (eta, q_k), entropy variables V, potentials (phi, psi_k), and the
//! parameter vector z used by the entropy conservative fluxes.
//!
//! Component layout of conserved vectors and fluxes: (rho_1..rho_N,
//! rho v_1..rho v_d, E). Entropy variables and z use the same slot order.

use crate::error::{Error, Result};
use crate::state::StateVec;

pub const MAX_SPECIES: usize = 2;

/// Per-species stiffened-gas constants. `N` is a runtime parameter so one
/// binary runs all cases; mixture quantities are recomputed from species
/// fields at every call rather than cached.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct EosSpec {
    pub nspec: usize,
    /// Adiabatic index Gamma_l > 1 per species.
    pub gamma: [f64; MAX_SPECIES],
    /// Specific heat at constant volume c_{v,l} > 0.
    pub cv: [f64; MAX_SPECIES],
    /// Pressure constant p_{inf,l} >= 0.
    pub p_inf: [f64; MAX_SPECIES],
}

impl EosSpec {
    pub fn single(gamma: f64, cv: f64, p_inf: f64) -> Self {
        let eos = Self {
            nspec: 1,
            gamma: [gamma, 0.0],
            cv: [cv, 0.0],
            p_inf: [p_inf, 0.0],
        };
        eos.validate().expect("invalid EOS constants");
        eos
    }

    pub fn two_species(gamma: [f64; 2], cv: [f64; 2], p_inf: [f64; 2]) -> Self {
        let eos = Self {
            nspec: 2,
            gamma,
            cv,
            p_inf,
        };
        eos.validate().expect("invalid EOS constants");
        eos
    }

    /// Ideal-gas two-species constructor from gas constants R_l = cv_l (Gamma_l - 1).
    pub fn two_species_from_r(gamma: [f64; 2], r: [f64; 2]) -> Self {
        Self::two_species(gamma, [r[0] / (gamma[0] - 1.0), r[1] / (gamma[1] - 1.0)], [0.0; 2])
    }

    pub fn validate(&self) -> Result<()> {
        if self.nspec == 0 || self.nspec > MAX_SPECIES {
            return Err(Error::Config(format!("species count {} not in 1..=2", self.nspec)));
        }
        for l in 0..self.nspec {
            if !(self.gamma[l] > 1.0) {
                return Err(Error::Config(format!("Gamma_{} = {} must exceed 1", l + 1, self.gamma[l])));
            }
            if !(self.cv[l] > 0.0) {
                return Err(Error::Config(format!("c_v,{} = {} must be positive", l + 1, self.cv[l])));
            }
            if !(self.p_inf[l] >= 0.0) {
                return Err(Error::Config(format!("p_inf,{} = {} must be nonnegative", l + 1, self.p_inf[l])));
            }
        }
        Ok(())
    }

    /// Gas constant R_l = c_{v,l} (Gamma_l - 1).
    #[inline]
    pub fn r(&self, l: usize) -> f64 {
        self.cv[l] * (self.gamma[l] - 1.0)
    }

    /// Total pressure constant p_inf = sum_l p_{inf,l}.
    #[inline]
    pub fn p_inf_total(&self) -> f64 {
        self.p_inf[..self.nspec].iter().sum()
    }

    /// Mixture index Gamma = (sum Gamma_l cv_l rho_l) / (sum cv_l rho_l).
    pub fn mixture_gamma(&self, rho: &[f64]) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for l in 0..self.nspec {
            num += self.gamma[l] * self.cv[l] * rho[l];
            den += self.cv[l] * rho[l];
        }
        num / den
    }

    /// Mixture gas constant R = (sum R_l rho_l) / (sum rho_l).
    pub fn mixture_r(&self, rho: &[f64]) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for l in 0..self.nspec {
            num += self.r(l) * rho[l];
            den += rho[l];
        }
        num / den
    }

    /// Number of conserved components in d dimensions.
    #[inline]
    pub fn ncomp(&self, dim: usize) -> usize {
        self.nspec + dim + 1
    }

    /// Spatial dimension implied by a state vector of this EOS.
    #[inline]
    pub fn dim_of(&self, u: &StateVec) -> usize {
        u.len() - self.nspec - 1
    }
}

/// Primitive view of a fluid state: species densities, velocity, pressure,
/// temperature. Unused trailing slots are zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Primitive {
    pub rho: [f64; MAX_SPECIES],
    pub vel: [f64; 3],
    pub p: f64,
    pub temp: f64,
}

impl Primitive {
    /// Build from (rho_l, v, p); recovers T = (p + p_inf) / sum(rho_l R_l).
    pub fn from_pressure(eos: &EosSpec, rho: &[f64], vel: &[f64], p: f64) -> Result<Self> {
        let mut pr = Primitive {
            rho: [0.0; MAX_SPECIES],
            vel: [0.0; 3],
            p,
            temp: 0.0,
        };
        let mut rr = 0.0;
        for l in 0..eos.nspec {
            if !(rho[l] > 0.0) {
                return Err(Error::inadmissible(format!("species {} density nonpositive", l + 1), rho[l]));
            }
            pr.rho[l] = rho[l];
            rr += rho[l] * eos.r(l);
        }
        pr.vel[..vel.len()].copy_from_slice(vel);
        pr.temp = (p + eos.p_inf_total()) / rr;
        if !(pr.temp > 0.0) {
            return Err(Error::inadmissible("recovered temperature nonpositive", pr.temp));
        }
        Ok(pr)
    }

    /// Build from (rho_l, v, T); sets p = sum(rho_l R_l T) - p_inf.
    pub fn from_temperature(eos: &EosSpec, rho: &[f64], vel: &[f64], temp: f64) -> Result<Self> {
        if !(temp > 0.0) {
            return Err(Error::inadmissible("temperature nonpositive", temp));
        }
        let mut pr = Primitive {
            rho: [0.0; MAX_SPECIES],
            vel: [0.0; 3],
            p: 0.0,
            temp,
        };
        let mut p = -eos.p_inf_total();
        for l in 0..eos.nspec {
            if !(rho[l] > 0.0) {
                return Err(Error::inadmissible(format!("species {} density nonpositive", l + 1), rho[l]));
            }
            pr.rho[l] = rho[l];
            p += rho[l] * eos.r(l) * temp;
        }
        pr.vel[..vel.len()].copy_from_slice(vel);
        pr.p = p;
        Ok(pr)
    }

    #[inline]
    pub fn total_density(&self, eos: &EosSpec) -> f64 {
        self.rho[..eos.nspec].iter().sum()
    }

    pub fn speed_squared(&self, dim: usize) -> f64 {
        self.vel[..dim].iter().map(|v| v * v).sum()
    }
}

/// Entropy pair, entropy variables, and potentials at one state.
#[derive(Debug, Clone, Copy)]
pub struct EntropyState {
    /// Entropy variables V = eta'(U)^T.
    pub v: StateVec,
    /// Mathematical entropy eta = -sum rho_l S_l.
    pub eta: f64,
    /// Entropy fluxes q_k = eta v_k.
    pub q: [f64; 3],
    /// Potential phi = V.U - eta = sum (R_l rho_l - p_inf_l / T).
    pub phi: f64,
    /// Potential fluxes psi_k = phi v_k.
    pub psi: [f64; 3],
    /// Species thermodynamic entropies S_l = c_v,l ln T - R_l ln rho_l.
    pub s: [f64; MAX_SPECIES],
    pub gamma_mix: f64,
    pub r_mix: f64,
}

/// prim -> U = (rho_l, rho v, E) with E = T sum(c_v,l rho_l) + p_inf + rho|v|^2/2.
pub fn prim_to_cons(prim: &Primitive, eos: &EosSpec, dim: usize) -> StateVec {
    let n = eos.nspec;
    let mut u = StateVec::zeros(eos.ncomp(dim));
    let rho = prim.total_density(eos);
    let mut cv_rho = 0.0;
    for l in 0..n {
        u[l] = prim.rho[l];
        cv_rho += eos.cv[l] * prim.rho[l];
    }
    for j in 0..dim {
        u[n + j] = rho * prim.vel[j];
    }
    u[n + dim] = cv_rho * prim.temp + eos.p_inf_total() + 0.5 * rho * prim.speed_squared(dim);
    u
}

/// U -> primitive. Errors on nonpositive species density or recovered T.
pub fn cons_to_prim(u: &StateVec, eos: &EosSpec) -> Result<Primitive> {
    let n = eos.nspec;
    let dim = eos.dim_of(u);
    let mut rho_s = [0.0; MAX_SPECIES];
    let mut rho = 0.0;
    for l in 0..n {
        if !(u[l] > 0.0) {
            return Err(Error::inadmissible(format!("species {} density nonpositive", l + 1), u[l]));
        }
        rho_s[l] = u[l];
        rho += u[l];
    }
    let mut vel = [0.0; 3];
    let mut ke = 0.0;
    for j in 0..dim {
        vel[j] = u[n + j] / rho;
        ke += vel[j] * u[n + j];
    }
    ke *= 0.5;
    let p_inf = eos.p_inf_total();
    let gamma = eos.mixture_gamma(&rho_s);
    let p = (gamma - 1.0) * (u[n + dim] - ke - p_inf) - p_inf;
    let mut rr = 0.0;
    for l in 0..n {
        rr += rho_s[l] * eos.r(l);
    }
    let temp = (p + p_inf) / rr;
    if !(temp > 0.0) {
        return Err(Error::inadmissible("recovered temperature nonpositive", temp));
    }
    Ok(Primitive {
        rho: rho_s,
        vel,
        p,
        temp,
    })
}

/// Physical flux F_k(U) = (rho_l v_k, rho v_k v^T + p e_k^T, (E + p) v_k).
pub fn physical_flux(u: &StateVec, k: usize, eos: &EosSpec) -> Result<StateVec> {
    let prim = cons_to_prim(u, eos)?;
    Ok(flux_from_prim(&prim, u, k, eos))
}

/// Physical flux when the primitive view is already available.
pub fn flux_from_prim(prim: &Primitive, u: &StateVec, k: usize, eos: &EosSpec) -> StateVec {
    let n = eos.nspec;
    let dim = eos.dim_of(u);
    debug_assert!(k < dim);
    let vk = prim.vel[k];
    let mut f = StateVec::zeros(u.len());
    for l in 0..n {
        f[l] = prim.rho[l] * vk;
    }
    for j in 0..dim {
        f[n + j] = u[n + j] * vk;
    }
    f[n + k] += prim.p;
    f[n + dim] = (u[n + dim] + prim.p) * vk;
    f
}

/// Entropy pair, entropy variables and potentials at a state.
pub fn entropy_bundle(u: &StateVec, eos: &EosSpec) -> Result<EntropyState> {
    let prim = cons_to_prim(u, eos)?;
    Ok(entropy_bundle_from_prim(&prim, eos, eos.dim_of(u)))
}

pub fn entropy_bundle_from_prim(prim: &Primitive, eos: &EosSpec, dim: usize) -> EntropyState {
    let n = eos.nspec;
    let temp = prim.temp;
    let ln_t = temp.ln();
    let v2 = prim.speed_squared(dim);
    let mut v = StateVec::zeros(eos.ncomp(dim));
    let mut s = [0.0; MAX_SPECIES];
    let mut eta = 0.0;
    let mut phi = 0.0;
    for l in 0..n {
        s[l] = eos.cv[l] * ln_t - eos.r(l) * prim.rho[l].ln();
        eta -= prim.rho[l] * s[l];
        phi += eos.r(l) * prim.rho[l] - eos.p_inf[l] / temp;
        v[l] = -s[l] - 0.5 * v2 / temp + eos.cv[l] * eos.gamma[l];
    }
    for j in 0..dim {
        v[n + j] = prim.vel[j] / temp;
    }
    v[n + dim] = -1.0 / temp;
    let mut q = [0.0; 3];
    let mut psi = [0.0; 3];
    for j in 0..dim {
        q[j] = eta * prim.vel[j];
        psi[j] = phi * prim.vel[j];
    }
    EntropyState {
        v,
        eta,
        q,
        phi,
        psi,
        s,
        gamma_mix: eos.mixture_gamma(&prim.rho),
        r_mix: eos.mixture_r(&prim.rho),
    }
}

/// Parameter vector z = (rho_1..rho_N, v, 1/T).
pub fn param_vector(u: &StateVec, eos: &EosSpec) -> Result<StateVec> {
    let prim = cons_to_prim(u, eos)?;
    let dim = eos.dim_of(u);
    let n = eos.nspec;
    let mut z = StateVec::zeros(u.len());
    for l in 0..n {
        z[l] = prim.rho[l];
    }
    for j in 0..dim {
        z[n + j] = prim.vel[j];
    }
    z[n + dim] = 1.0 / prim.temp;
    Ok(z)
}

/// Speed of sound c_s = sqrt(R Gamma T) with mixture R and Gamma.
pub fn sound_speed(prim: &Primitive, eos: &EosSpec) -> Result<f64> {
    let c2 = eos.mixture_r(&prim.rho) * eos.mixture_gamma(&prim.rho) * prim.temp;
    if !(c2 > 0.0) {
        return Err(Error::inadmissible("nonpositive sound speed squared", c2));
    }
    Ok(c2.sqrt())
}

/// Inverse of the entropy-variable map: V -> U. Used by the finite-difference
/// oracle for dU/dV and by the eigenvector scaling tests.
pub fn cons_from_entropy_vars(v: &StateVec, eos: &EosSpec) -> Result<StateVec> {
    let n = eos.nspec;
    let dim = v.len() - n - 1;
    let temp = -1.0 / v[n + dim];
    if !(temp > 0.0) {
        return Err(Error::inadmissible("entropy variables give nonpositive T", temp));
    }
    let mut vel = [0.0; 3];
    let mut v2 = 0.0;
    for j in 0..dim {
        vel[j] = v[n + j] * temp;
        v2 += vel[j] * vel[j];
    }
    let ln_t = temp.ln();
    let mut rho = [0.0; MAX_SPECIES];
    for l in 0..n {
        let s_l = -v[l] - 0.5 * v2 / temp + eos.cv[l] * eos.gamma[l];
        rho[l] = ((eos.cv[l] * ln_t - s_l) / eos.r(l)).exp();
    }
    let prim = Primitive::from_temperature(eos, &rho, &vel[..dim], temp)?;
    Ok(prim_to_cons(&prim, eos, dim))
}
