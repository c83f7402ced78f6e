//! Serializable report shapes for certificates, atomizations, and the other
//! CLI outputs. All algebraic values are rendered as their canonical display
//! strings, so serialized reports are deterministic and diffable.

use serde::Serialize;

use crate::atomizer::Atomization;
use crate::oracle::{AtomCertificate, AtomVerdict};
use crate::ring::NilCertificate;
use crate::rpoly::SurviveWitness;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Debug)]
pub struct CertificateReport {
    pub subject: String,
    pub p: u64,
    pub variables: Vec<u32>,
    pub denominator: u64,
    pub degree_bound: usize,
    pub fresh_vars: u32,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<[String; 2]>,
    pub enumerated_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_subject: Option<String>,
    pub seed: u64,
}

impl From<&AtomCertificate> for CertificateReport {
    fn from(cert: &AtomCertificate) -> CertificateReport {
        let (verdict, factors) = match &cert.verdict {
            AtomVerdict::CertifiedWithinBudget => ("CertifiedWithinBudget".to_string(), None),
            AtomVerdict::FactorFound(g, h) => (
                "FactorFound".to_string(),
                Some([g.to_string(), h.to_string()]),
            ),
            AtomVerdict::Uncertified => ("Uncertified".to_string(), None),
        };
        CertificateReport {
            subject: cert.subject.to_string(),
            p: cert.space.p.value(),
            variables: cert.space.variables.iter().copied().collect(),
            denominator: cert.space.denominator,
            degree_bound: cert.budget.max_factor_degree,
            fresh_vars: cert.budget.fresh_variables,
            verdict,
            factors,
            enumerated_count: cert.enumerated,
            reduced_subject: cert.reduced_subject.as_ref().map(|f| f.to_string()),
            seed: cert.replay_seed,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct CertificateEnvelope {
    pub schema: u32,
    #[serde(flatten)]
    pub certificate: CertificateReport,
}

impl From<&AtomCertificate> for CertificateEnvelope {
    fn from(cert: &AtomCertificate) -> CertificateEnvelope {
        CertificateEnvelope {
            schema: SCHEMA_VERSION,
            certificate: cert.into(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ReplayInfo {
    pub seed: u64,
    pub max_candidates: u64,
}

#[derive(Serialize, Clone, Debug)]
pub struct AtomizationReport {
    pub schema: u32,
    pub p: u64,
    pub input: String,
    pub case: String,
    pub factors: Vec<String>,
    pub bound: usize,
    pub certificates: Vec<CertificateReport>,
    pub replay: ReplayInfo,
}

impl From<&Atomization> for AtomizationReport {
    fn from(a: &Atomization) -> AtomizationReport {
        AtomizationReport {
            schema: SCHEMA_VERSION,
            p: a.input.prime().value(),
            input: a.input.to_string(),
            case: a.case.name().to_string(),
            factors: a.factors.iter().map(|f| f.to_string()).collect(),
            bound: a.bound,
            certificates: a.certificates.iter().map(CertificateReport::from).collect(),
            replay: ReplayInfo {
                seed: a.replay_seed,
                max_candidates: a.budget.max_candidates,
            },
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct NilIndexReport {
    pub schema: u32,
    pub p: u64,
    pub input: String,
    pub min_potential: String,
    pub n: u32,
    pub bound: String,
    pub exact_index: u64,
}

impl NilIndexReport {
    pub fn new(p: u64, input: String, cert: &NilCertificate) -> NilIndexReport {
        NilIndexReport {
            schema: SCHEMA_VERSION,
            p,
            input,
            min_potential: cert.min_potential.to_string(),
            n: cert.n,
            bound: cert.bound.to_string(),
            exact_index: cert.exact_index,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct WitnessReport {
    pub schema: u32,
    pub p: u64,
    pub f: String,
    pub g: String,
    pub j: usize,
    pub j_prime: usize,
    pub z1: String,
    pub z2: String,
    pub monomial: String,
    pub degree: usize,
    pub total_potential: String,
}

impl WitnessReport {
    pub fn new(p: u64, f: String, g: String, w: &SurviveWitness) -> WitnessReport {
        WitnessReport {
            schema: SCHEMA_VERSION,
            p,
            f,
            g,
            j: w.j,
            j_prime: w.j_prime,
            z1: w.z1.to_string(),
            z2: w.z2.to_string(),
            monomial: w.product_monomial.to_string(),
            degree: w.j + w.j_prime,
            total_potential: w.total_potential.to_string(),
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ValueReport {
    pub schema: u32,
    pub p: u64,
    pub value: String,
}

impl ValueReport {
    pub fn new(p: u64, value: String) -> ValueReport {
        ValueReport {
            schema: SCHEMA_VERSION,
            p,
            value,
        }
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct ChainReport {
    pub schema: u32,
    pub p: u64,
    pub chain: Vec<String>,
}

#[derive(Serialize, Clone, Debug)]
pub struct EnumerateReport {
    pub schema: u32,
    pub p: u64,
    pub variables: Vec<u32>,
    pub denominator: u64,
    pub count: u64,
    pub elements: Vec<String>,
}
