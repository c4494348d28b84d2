//! Real simple Lie groups: Hodge type, Hermitian type and lattice verdicts.
//!
//! The catalog is a versioned JSON table (`data/real_forms.json`, or the file
//! named by `PERIODDOMAIN_CATALOG`). Every record is checked on load: against
//! closed formulas for the classical families, against the grading when a
//! reference marking is given, and against the size of a maximal set of
//! strongly orthogonal noncompact roots for the real rank.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cohomology::KType;
use crate::error::{Error, Result};
use crate::hodge::HodgeDatum;
use crate::rootsys::{subsystem_components, CartanType, RootSystem, Series};
use crate::scalar::{ser_q, Q};

/// Environment variable naming an alternative catalog file.
pub const CATALOG_ENV: &str = "PERIODDOMAIN_CATALOG";

const BUILTIN: &str = include_str!("../data/real_forms.json");

/// Real rank at or above which Hodge-type lattices are Kähler only in the
/// Hermitian case.
pub const RANK_THRESHOLD: u32 = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealFormRecord {
    pub name: String,
    pub family: String,
    /// Type of the complexified Lie algebra, e.g. `"C4"` or `"A2+A2"`.
    pub complex_type: String,
    pub real_rank: u32,
    pub maximal_compact: String,
    pub hermitian: bool,
    /// Grading whose even part is `k_C` (equal-rank forms only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marking: Option<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct CatalogFile {
    version: u32,
    forms: Vec<RealFormRecord>,
}

/// A validated record.
#[derive(Clone, Debug)]
pub struct RealForm {
    pub record: RealFormRecord,
    pub complex: KType,
    pub compact: KType,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LatticeVerdict {
    NotKahlerLattice,
    KahlerViaHermitian,
    BelowThreshold,
    NotHodgeType,
}

/// Equal rank of `G` and its maximal compact subgroup, read from the types.
pub fn is_hodge_type(f: &RealForm) -> bool {
    f.compact.rank() == f.complex.rank()
}

pub fn is_hermitian(f: &RealForm) -> bool {
    f.record.hermitian
}

pub fn lattice_verdict(f: &RealForm) -> LatticeVerdict {
    if !is_hodge_type(f) {
        LatticeVerdict::NotHodgeType
    } else if is_hermitian(f) {
        LatticeVerdict::KahlerViaHermitian
    } else if f.record.real_rank >= RANK_THRESHOLD {
        LatticeVerdict::NotKahlerLattice
    } else {
        LatticeVerdict::BelowThreshold
    }
}

/// `rk_R G / 4 − 1`.
pub fn matsushima_bound(real_rank: u32) -> Q {
    Q::new(real_rank as i128, 4) - Q::from_integer(1)
}

/// Summary emitted by the `classify` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub name: String,
    pub complex_type: String,
    pub maximal_compact: String,
    pub rank: u32,
    pub hodge: bool,
    pub hermitian: bool,
    #[serde(serialize_with = "ser_q")]
    pub matsushima_bound: Q,
    /// Bound at least 2: `b²(Γ) = 0` for Hodge non-Hermitian `G`.
    pub b2_vanishes: bool,
    /// Bound at least 4: `b⁴(Γ) = 1` for Hodge non-Hermitian `G`.
    pub b4_is_one: bool,
    pub verdict: LatticeVerdict,
}

pub fn classify(f: &RealForm) -> Classification {
    let hodge = is_hodge_type(f);
    let herm = is_hermitian(f);
    let m = matsushima_bound(f.record.real_rank);
    let gate = |k: i128| hodge && !herm && m >= Q::from_integer(k);
    Classification {
        name: f.record.name.clone(),
        complex_type: f.complex.to_string(),
        maximal_compact: f.compact.to_string(),
        rank: f.record.real_rank,
        hodge,
        hermitian: herm,
        matsushima_bound: m,
        b2_vanishes: gate(2),
        b4_is_one: gate(4),
        verdict: lattice_verdict(f),
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub version: u32,
    pub forms: Vec<RealForm>,
}

impl Catalog {
    /// The shipped table, validated once.
    pub fn builtin() -> Arc<Catalog> {
        static CELL: OnceLock<Arc<Catalog>> = OnceLock::new();
        CELL.get_or_init(|| Arc::new(Catalog::from_json(BUILTIN).expect("shipped catalog is valid"))).clone()
    }

    /// The file named by `PERIODDOMAIN_CATALOG`, or the shipped table.
    pub fn load() -> Result<Arc<Catalog>> {
        match std::env::var_os(CATALOG_ENV) {
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Catalog(format!("{}: {e}", path.to_string_lossy())))?;
                Ok(Arc::new(Catalog::from_json(&text)?))
            }
            None => Ok(Catalog::builtin()),
        }
    }

    pub fn from_json(text: &str) -> Result<Catalog> {
        let file: CatalogFile = serde_json::from_str(text).map_err(|e| Error::Catalog(e.to_string()))?;
        if file.version != 1 {
            return Err(Error::Catalog(format!("unsupported catalog version {}", file.version)));
        }
        let mut forms = Vec::with_capacity(file.forms.len());
        for rec in file.forms {
            if forms.iter().any(|f: &RealForm| normalize(&f.record.name) == normalize(&rec.name)) {
                return Err(Error::Catalog(format!("duplicate entry {}", rec.name)));
            }
            forms.push(validate(rec)?);
        }
        Ok(Catalog { version: file.version, forms })
    }

    /// Lookup by name; `G(p,q)` and `G(q,p)` name the same group.
    pub fn get(&self, name: &str) -> Result<&RealForm> {
        let key = normalize(name);
        let swapped = swap_args(&key);
        self.forms
            .iter()
            .find(|f| {
                let n = normalize(&f.record.name);
                n == key || Some(&n) == swapped.as_ref()
            })
            .ok_or_else(|| Error::UnknownForm(name.into()))
    }

    /// Exceptional forms of Hodge type that are not Hermitian.
    pub fn exceptional_hodge_non_hermitian(&self) -> Vec<&RealForm> {
        self.forms
            .iter()
            .filter(|f| f.record.family == "exceptional" && is_hodge_type(f) && !is_hermitian(f))
            .collect()
    }
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '−' { '-' } else { c.to_ascii_uppercase() })
        .collect()
}

pub(crate) fn swap_args(key: &str) -> Option<String> {
    let open = key.find('(')?;
    let inner = key[open + 1..].strip_suffix(')')?;
    let (p, q) = inner.split_once(',')?;
    (p.parse::<u32>().is_ok() && q.parse::<u32>().is_ok()).then(|| format!("{}({q},{p})", &key[..open]))
}

fn bad(rec: &RealFormRecord, msg: impl std::fmt::Display) -> Error {
    Error::Catalog(format!("{}: {msg}", rec.name))
}

fn validate(rec: RealFormRecord) -> Result<RealForm> {
    let complex: KType = rec.complex_type.parse().map_err(|e| bad(&rec, e))?;
    let compact: KType = rec.maximal_compact.parse().map_err(|e| bad(&rec, e))?;
    if complex.factors.is_empty() || complex.torus != 0 {
        return Err(bad(&rec, "complex type must be semisimple"));
    }
    let dim_g = complex.dim();
    if compact.dim() >= dim_g || compact.rank() > complex.rank() {
        return Err(bad(&rec, "maximal compact subgroup too large"));
    }
    if rec.real_rank == 0 || rec.real_rank as usize > complex.rank().min(dim_g - compact.dim()) {
        return Err(bad(&rec, format!("real rank {} out of range", rec.real_rank)));
    }
    let simple_complex = complex.factors.len() == 1;
    let center_criterion = simple_complex && compact.rank() == complex.rank() && compact.torus > 0;
    if rec.hermitian != center_criterion {
        return Err(bad(&rec, "Hermitian flag disagrees with the centre of K"));
    }
    if let Some(expect) = family_formula(&rec.name) {
        let got = (complex.clone(), compact.clone(), rec.real_rank, rec.hermitian);
        if got != expect {
            return Err(bad(&rec, format!("expected {} / {} / rank {} / hermitian {}", expect.0, expect.1, expect.2, expect.3)));
        }
    }
    if let Some(m) = &rec.marking {
        check_marking(&rec, &complex, &compact, m)?;
    }
    Ok(RealForm { record: rec, complex, compact })
}

fn check_marking(rec: &RealFormRecord, complex: &KType, compact: &KType, m: &[i64]) -> Result<()> {
    if complex.factors.len() != 1 {
        return Err(bad(rec, "marking on a non-simple type"));
    }
    // Parsed directly: the canonical form would renumber C2 as B2.
    let ty: CartanType = rec.complex_type.parse().map_err(|e| bad(rec, e))?;
    let r = ty.rank;
    let rs = Arc::new(RootSystem::new(ty));
    let hd = HodgeDatum::from_marking(rs, m).map_err(|e| bad(rec, e))?;
    let comps = subsystem_components(hd.root_system(), &hd.compact_positive());
    let ss: usize = comps.iter().map(|c| c.rank).sum();
    let k = KType::from_components(&comps, r - ss);
    if &k != compact {
        return Err(bad(rec, format!("grading gives K = {k}")));
    }
    if hd.is_hermitian_grading() != rec.hermitian {
        return Err(bad(rec, "Hermitian flag disagrees with the grading"));
    }
    let so = strongly_orthogonal_noncompact(&hd);
    if so != rec.real_rank as usize {
        return Err(bad(rec, format!("{so} strongly orthogonal noncompact roots")));
    }
    Ok(())
}

/// Largest set of positive noncompact roots, pairwise strongly orthogonal
/// (`α ± β` neither a root nor zero). For an equal-rank form this is the
/// real rank.
pub fn strongly_orthogonal_noncompact(hd: &HodgeDatum) -> usize {
    let rs = hd.root_system();
    let nc: Vec<usize> = (0..rs.num_positive()).filter(|&i| !hd.is_compact(i)).collect();
    let n = nc.len();
    assert!(n <= 128, "too many noncompact roots for a bitset");
    let compatible = |a: usize, b: usize| {
        let (x, y) = (rs.root(a), rs.root(b));
        rs.index_of(&x.add(y)).is_none() && rs.index_of(&x.sub(y)).is_none() && x != y
    };
    let adj: Vec<u128> = (0..n)
        .map(|i| (0..n).filter(|&j| compatible(nc[i], nc[j])).fold(0u128, |m, j| m | 1 << j))
        .collect();
    let cap = rs.rank();
    let mut best = 0;
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    max_clique(&adj, all, 0, cap, &mut best);
    best
}

fn max_clique(adj: &[u128], cand: u128, size: usize, cap: usize, best: &mut usize) {
    if size > *best {
        *best = size;
    }
    if *best >= cap || size + cand.count_ones() as usize <= *best {
        return;
    }
    let mut c = cand;
    while c != 0 {
        if size + c.count_ones() as usize <= *best || *best >= cap {
            return;
        }
        let v = c.trailing_zeros() as usize;
        c &= !(1 << v);
        max_clique(adj, c & adj[v], size + 1, cap, best);
    }
}

fn parse_args(s: &str, prefix: &str) -> Option<Vec<String>> {
    let inner = s.strip_prefix(prefix)?.strip_suffix(')')?;
    Some(inner.split(',').map(|x| x.trim().to_string()).collect())
}

fn ty(s: Series, r: usize) -> KType {
    KType::new(if r == 0 { vec![] } else { vec![(s, r)] }, 0)
}

/// `(complex type, K, real rank, Hermitian)` for a classical family member.
pub fn family_formula(name: &str) -> Option<(KType, KType, u32, bool)> {
    let name = name.trim();
    let num = |x: &str| x.parse::<usize>().ok();
    if let Some(a) = parse_args(name, "SO*(") {
        let n = num(&a[0])? / 2;
        return Some((ty(Series::D, n), KType::new(vec![(Series::A, n - 1)], 1), (n / 2) as u32, true));
    }
    if let Some(a) = parse_args(name, "SU(") {
        let (p, q) = (num(&a[0])?, num(&a[1])?);
        let k = KType::new(vec![(Series::A, p - 1), (Series::A, q - 1)].into_iter().filter(|f| f.1 > 0).collect(), 1);
        return Some((ty(Series::A, p + q - 1), k, p.min(q) as u32, true));
    }
    if let Some(a) = parse_args(name, "SL(") {
        let n = num(&a[0])?;
        return match a[1].as_str() {
            "R" => Some((ty(Series::A, n - 1), KType::so(n), (n - 1) as u32, false)),
            "H" => Some((ty(Series::A, 2 * n - 1), ty(Series::C, n), (n - 1) as u32, false)),
            "C" => Some((ty(Series::A, n - 1).product(&ty(Series::A, n - 1)), ty(Series::A, n - 1), (n - 1) as u32, false)),
            _ => None,
        };
    }
    if let Some(a) = parse_args(name, "SO(") {
        let (p, q) = (num(&a[0])?, num(&a[1])?);
        let n = p + q;
        let g = if n % 2 == 1 { ty(Series::B, n / 2) } else { ty(Series::D, n / 2) };
        let herm = (p == 2 || q == 2) && n >= 5;
        return Some((g, KType::so(p).product(&KType::so(q)), p.min(q) as u32, herm));
    }
    if let Some(a) = parse_args(name, "Sp(") {
        if a[1] == "R" {
            let n = num(&a[0])?;
            return Some((ty(Series::C, n), KType::new(vec![(Series::A, n - 1)], 1), n as u32, true));
        }
        let (p, q) = (num(&a[0])?, num(&a[1])?);
        return Some((ty(Series::C, p + q), ty(Series::C, p).product(&ty(Series::C, q)), p.min(q) as u32, false));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    #[test]
    fn builtin_catalog_loads() {
        let c = Catalog::builtin();
        assert!(c.forms.len() > 100);
        for f in &c.forms {
            if is_hermitian(f) {
                assert!(is_hodge_type(f), "{}", f.record.name);
            }
        }
    }

    #[test]
    fn named_examples() {
        let c = Catalog::builtin();
        let sp31 = classify(c.get("Sp(3,1)").unwrap());
        assert!(sp31.hodge && !sp31.hermitian);
        assert_eq!(sp31.verdict, LatticeVerdict::BelowThreshold);
        assert!(!is_hodge_type(c.get("SL(3,R)").unwrap()));
        assert!(is_hermitian(c.get("SU(2,2)").unwrap()));
        assert!(is_hermitian(c.get("SO(2,7)").unwrap()));
        assert_eq!(lattice_verdict(c.get("Sp(25,25)").unwrap()), LatticeVerdict::NotKahlerLattice);
        assert_eq!(lattice_verdict(c.get("SU(3,4)").unwrap()), LatticeVerdict::KahlerViaHermitian);
        assert_eq!(matsushima_bound(20), qi(4));
        assert_eq!(matsushima_bound(12), qi(2));
        assert_eq!(matsushima_bound(4), qi(0));
        assert!(matches!(c.get("Sp(3,1,1)"), Err(Error::UnknownForm(_))));
    }

    #[test]
    fn validation_rejects_bad_records() {
        let wrong_rank = r#"{"version":1,"forms":[{"name":"Sp(2,1)","family":"Sp(p,q)","complex_type":"C3","real_rank":2,"maximal_compact":"C2+A1","hermitian":false,"marking":[0,1,0]}]}"#;
        assert!(matches!(Catalog::from_json(wrong_rank), Err(Error::Catalog(_))));
        let wrong_herm = r#"{"version":1,"forms":[{"name":"G2(2)","family":"exceptional","complex_type":"G2","real_rank":2,"maximal_compact":"A1+A1","hermitian":true}]}"#;
        assert!(matches!(Catalog::from_json(wrong_herm), Err(Error::Catalog(_))));
        let wrong_k = r#"{"version":1,"forms":[{"name":"F4(4)","family":"exceptional","complex_type":"F4","real_rank":4,"maximal_compact":"B4","hermitian":false,"marking":[1,0,0,0]}]}"#;
        assert!(matches!(Catalog::from_json(wrong_k), Err(Error::Catalog(_))));
    }

    #[test]
    fn exceptional_count() {
        let c = Catalog::builtin();
        let mut names: Vec<&str> = c.exceptional_hodge_non_hermitian().iter().map(|f| f.record.name.as_str()).collect();
        names.sort();
        assert_eq!(names, ["E6(2)", "E7(-5)", "E7(7)", "E8(-24)", "E8(8)", "F4(-20)", "F4(4)", "G2(2)"]);
    }
}
