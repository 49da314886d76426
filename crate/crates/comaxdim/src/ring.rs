//! Finite commutative rings as products of chain-type local components.
//!
//! Each component is a local ring whose ideals form a single chain
//! `0 = m^k ⊂ m^(k-1) ⊂ … ⊂ m ⊂ R_i`, so it is described by its chain
//! length `k_i ≥ 1` (`k_i = 1` is a field). An ideal of the product is a
//! vector of levels `l_i ∈ 0..=k_i`; sums take componentwise maxima and
//! intersections componentwise minima, making the ideal lattice a product
//! of chains.

use crate::{Caps, Error, Result};

/// One local factor of the ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComponent {
    /// Chain length `k ≥ 1`; the component has `k + 1` ideals.
    pub len: u32,
    /// Display name, e.g. `F`, `C3`, `Z4`.
    pub label: String,
    /// Residue characteristic when known (`Zp^k` forms); display only.
    pub base: Option<u64>,
}

impl ChainComponent {
    fn chain(len: u32) -> Self {
        ChainComponent {
            len,
            label: if len == 1 { "F".into() } else { format!("C{len}") },
            base: None,
        }
    }
}

/// A finite product of chain components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingSpec {
    components: Vec<ChainComponent>,
}

/// An ideal of a [`RingSpec`], stored as one level per component.
///
/// Level `0` is the zero ideal of the component and level `k_i` the whole
/// component. Ordering is lexicographic on levels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    levels: Vec<u32>,
}

impl Ideal {
    /// The level vector.
    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// Number of nonzero components.
    pub fn nzc(&self) -> usize {
        self.levels.iter().filter(|&&l| l > 0).count()
    }

    /// Componentwise containment `self ⊇ other` (levels all ≥).
    ///
    /// Both ideals must come from the same spec.
    pub fn contains(&self, other: &Ideal) -> bool {
        debug_assert_eq!(self.levels.len(), other.levels.len());
        self.levels.iter().zip(&other.levels).all(|(a, b)| a >= b)
    }

    /// Neither ideal contains the other.
    pub fn incomparable(&self, other: &Ideal) -> bool {
        !self.contains(other) && !other.contains(self)
    }
}

/// Nil class of a vertex: the mask of components sitting at the top level.
///
/// Two vertices are equivalent exactly when each component is either at its
/// top level in both or below the top (hence nilpotent there) in both.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NilClass {
    mask: Vec<bool>,
}

impl NilClass {
    /// True where the component sits at its top level.
    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// Number of components at the top level.
    pub fn popcount(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    /// Set of components covered by `self` or `other`.
    pub fn union(&self, other: &NilClass) -> NilClass {
        NilClass {
            mask: self
                .mask
                .iter()
                .zip(&other.mask)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Subset order on masks.
    pub fn is_subset_of(&self, other: &NilClass) -> bool {
        self.mask.iter().zip(&other.mask).all(|(a, b)| !a || *b)
    }

    pub fn is_full(&self) -> bool {
        self.mask.iter().all(|&b| b)
    }
}

impl RingSpec {
    /// Build a spec from explicit components.
    pub fn new(components: Vec<ChainComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::ParseSpec("a ring needs at least one component".into()));
        }
        if let Some(c) = components.iter().find(|c| c.len == 0) {
            return Err(Error::ParseSpec(format!(
                "chain length must be at least 1, got 0 for `{}`",
                c.label
            )));
        }
        Ok(RingSpec { components })
    }

    /// Build a spec from chain lengths; length 1 becomes a field `F`.
    pub fn from_lengths(lengths: &[u32]) -> Result<Self> {
        RingSpec::new(lengths.iter().map(|&k| ChainComponent::chain(k)).collect())
    }

    /// Parse the ring DSL, discarding any warnings.
    ///
    /// Factors are separated by `x` or `×`, case- and whitespace-insensitive:
    /// `F` (a field), `F(q)` (field order accepted and ignored), `Ck` (chain
    /// of length `k`), `Zp^k`, and `Zn` with `n` a prime power (`Z4`, `Z8`,
    /// `Z9`, ...).
    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_verbose(text).map(|(spec, _)| spec)
    }

    /// Parse the ring DSL, also returning parser warnings.
    pub fn parse_verbose(text: &str) -> Result<(Self, Vec<String>)> {
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_lowercase();
        if cleaned.is_empty() {
            return Err(Error::ParseSpec("empty spec".into()));
        }
        let mut components = Vec::new();
        let mut warnings = Vec::new();
        for token in cleaned.split(['x', '×']) {
            if token.is_empty() {
                return Err(Error::ParseSpec(format!(
                    "empty factor in `{text}` (check the separators)"
                )));
            }
            components.push(parse_atom(token, &mut warnings)?);
        }
        Ok((RingSpec { components }, warnings))
    }

    pub fn components(&self) -> &[ChainComponent] {
        &self.components
    }

    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    /// Number of non-field components (`k_i ≥ 2`).
    pub fn n_nonfields(&self) -> usize {
        self.components.iter().filter(|c| c.len >= 2).count()
    }

    /// Number of field components (`k_i = 1`).
    pub fn m_fields(&self) -> usize {
        self.components.iter().filter(|c| c.len == 1).count()
    }

    /// Every component is a field.
    pub fn is_reduced(&self) -> bool {
        self.m_fields() == self.n_components()
    }

    /// Chain lengths in component order.
    pub fn lengths(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.len).collect()
    }

    /// Total number of ideals, `∏ (k_i + 1)`.
    pub fn ideal_count(&self) -> Result<u128> {
        self.components
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.len as u128 + 1))
            .ok_or(Error::Overflow("ideal count"))
    }

    /// Number of graph vertices by closed form, `∏(k_i+1) − ∏k_i − 1`.
    pub fn vertex_count(&self) -> Result<u128> {
        let total = self.ideal_count()?;
        let radical = self
            .components
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.len as u128))
            .ok_or(Error::Overflow("vertex count"))?;
        Ok(total - radical - 1)
    }

    /// The zero ideal.
    pub fn zero_ideal(&self) -> Ideal {
        Ideal {
            levels: vec![0; self.n_components()],
        }
    }

    /// The whole ring as an ideal.
    pub fn unit_ideal(&self) -> Ideal {
        Ideal {
            levels: self.lengths(),
        }
    }

    /// The Jacobson radical: every component at level `k_i − 1`.
    pub fn jacobson_radical(&self) -> Ideal {
        Ideal {
            levels: self.components.iter().map(|c| c.len - 1).collect(),
        }
    }

    /// Validate that `ideal` belongs to this spec.
    pub fn check_ideal(&self, ideal: &Ideal) -> Result<()> {
        if ideal.levels.len() != self.n_components() {
            return Err(Error::SpecMismatch(format!(
                "expected {} components, got {}",
                self.n_components(),
                ideal.levels.len()
            )));
        }
        for (i, (&l, c)) in ideal.levels.iter().zip(&self.components).enumerate() {
            if l > c.len {
                return Err(Error::SpecMismatch(format!(
                    "level {l} exceeds chain length {} in component {i}",
                    c.len
                )));
            }
        }
        Ok(())
    }

    /// Construct an ideal after validating the levels.
    pub fn ideal(&self, levels: &[u32]) -> Result<Ideal> {
        let ideal = Ideal {
            levels: levels.to_vec(),
        };
        self.check_ideal(&ideal)?;
        Ok(ideal)
    }

    /// All ideals in ascending lexicographic level order.
    pub fn enumerate_ideals(&self, caps: &Caps) -> Result<Vec<Ideal>> {
        let count = self.ideal_count()?;
        if count > caps.enum_cap as u128 {
            return Err(Error::CapExceeded {
                what: "ideal enumeration",
                needed: count,
                cap: caps.enum_cap as u128,
            });
        }
        let n = self.n_components();
        let mut out = Vec::with_capacity(count as usize);
        let mut levels = vec![0u32; n];
        loop {
            out.push(Ideal {
                levels: levels.clone(),
            });
            let mut i = n;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                if levels[i] < self.components[i].len {
                    levels[i] += 1;
                    break;
                }
                levels[i] = 0;
            }
        }
    }

    /// Graph vertices: proper ideals not contained in the Jacobson radical,
    /// i.e. level vectors with some component at the top and some below.
    ///
    /// Single-component rings have no vertices, which is an error.
    pub fn enumerate_vertices(&self, caps: &Caps) -> Result<Vec<Ideal>> {
        if self.n_components() < 2 {
            return Err(Error::EmptyGraph(format!(
                "ring `{self}` has a single local component, so no proper ideal sits outside the radical"
            )));
        }
        Ok(self
            .enumerate_ideals(caps)?
            .into_iter()
            .filter(|i| self.is_vertex(i))
            .collect())
    }

    /// Whether `ideal` is a vertex of the co-maximal ideal graph.
    pub fn is_vertex(&self, ideal: &Ideal) -> bool {
        let mut some_top = false;
        let mut some_below = false;
        for (&l, c) in ideal.levels.iter().zip(&self.components) {
            if l == c.len {
                some_top = true;
            } else {
                some_below = true;
            }
        }
        some_top && some_below
    }

    /// Ideal sum: componentwise maximum of levels.
    pub fn ideal_sum(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        self.check_ideal(a)?;
        self.check_ideal(b)?;
        Ok(Ideal {
            levels: a
                .levels
                .iter()
                .zip(&b.levels)
                .map(|(&x, &y)| x.max(y))
                .collect(),
        })
    }

    /// Ideal intersection: componentwise minimum of levels.
    pub fn ideal_meet(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        self.check_ideal(a)?;
        self.check_ideal(b)?;
        Ok(Ideal {
            levels: a
                .levels
                .iter()
                .zip(&b.levels)
                .map(|(&x, &y)| x.min(y))
                .collect(),
        })
    }

    /// `a + b = R`, i.e. every component reaches its top level.
    ///
    /// Defined for distinct ideals; equal inputs are rejected.
    pub fn is_comaximal(&self, a: &Ideal, b: &Ideal) -> Result<bool> {
        self.check_ideal(a)?;
        self.check_ideal(b)?;
        if a == b {
            return Err(Error::InvalidArgument(
                "comaximality is asked of two distinct ideals".into(),
            ));
        }
        Ok(self.covers(a, b))
    }

    /// Unchecked comaximality test used by graph builders over distinct pairs.
    pub(crate) fn covers(&self, a: &Ideal, b: &Ideal) -> bool {
        a.levels
            .iter()
            .zip(&b.levels)
            .zip(&self.components)
            .all(|((&x, &y), c)| x.max(y) == c.len)
    }

    /// Nil class of a vertex: which components sit at their top level.
    pub fn nil_class(&self, ideal: &Ideal) -> Result<NilClass> {
        self.check_ideal(ideal)?;
        Ok(NilClass {
            mask: ideal
                .levels
                .iter()
                .zip(&self.components)
                .map(|(&l, c)| l == c.len)
                .collect(),
        })
    }

    /// Replace every nonzero nilpotent component by zero: levels strictly
    /// between 0 and the top drop to 0, top levels stay.
    pub fn prime_reduction(&self, ideal: &Ideal) -> Result<Ideal> {
        self.check_ideal(ideal)?;
        Ok(Ideal {
            levels: ideal
                .levels
                .iter()
                .zip(&self.components)
                .map(|(&l, c)| if l == c.len { l } else { 0 })
                .collect(),
        })
    }

    /// The representative of a nil class: top levels on the mask, zero off it.
    pub fn class_representative(&self, class: &NilClass) -> Ideal {
        Ideal {
            levels: class
                .mask
                .iter()
                .zip(&self.components)
                .map(|(&b, c)| if b { c.len } else { 0 })
                .collect(),
        }
    }

    /// The maximal ideals: exactly one component at level `k_i − 1`, the
    /// rest at the top. Intended for specs with at least two components.
    pub fn maximal_ideals(&self) -> Vec<Ideal> {
        (0..self.n_components())
            .map(|i| {
                let mut levels = self.lengths();
                levels[i] -= 1;
                Ideal { levels }
            })
            .collect()
    }

    /// Human-readable label for an ideal, e.g. `(Z4,0,(2))`.
    pub fn ideal_label(&self, ideal: &Ideal) -> String {
        let parts: Vec<String> = ideal
            .levels
            .iter()
            .zip(&self.components)
            .map(|(&l, c)| {
                if l == 0 {
                    "0".to_string()
                } else if l == c.len {
                    c.label.clone()
                } else {
                    let power = c.len - l;
                    match c.base.and_then(|b| b.checked_pow(power)) {
                        Some(g) => format!("({g})"),
                        None if power == 1 => "m".to_string(),
                        None => format!("m^{power}"),
                    }
                }
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

impl std::fmt::Display for RingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let labels: Vec<&str> = self.components.iter().map(|c| c.label.as_str()).collect();
        write!(f, "{}", labels.join(" x "))
    }
}

fn parse_atom(token: &str, warnings: &mut Vec<String>) -> Result<ChainComponent> {
    let bad = |msg: String| Error::ParseSpec(msg);
    if let Some(rest) = token.strip_prefix('f') {
        if rest.is_empty() {
            return Ok(ChainComponent::chain(1));
        }
        if let Some(q) = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let q: u64 = q
                .parse()
                .map_err(|_| bad(format!("field order in `{token}` must be an integer")))?;
            if q < 2 {
                return Err(bad(format!("field order in `{token}` must be at least 2")));
            }
            warnings.push(format!(
                "field order {q} is accepted but ignored: only the chain structure matters"
            ));
            return Ok(ChainComponent::chain(1));
        }
        return Err(bad(format!("unrecognized factor `{token}`")));
    }
    if let Some(rest) = token.strip_prefix('c') {
        let k: u32 = rest
            .parse()
            .map_err(|_| bad(format!("chain length in `{token}` must be an integer")))?;
        if k < 1 {
            return Err(bad(format!("chain length in `{token}` must be at least 1")));
        }
        return Ok(ChainComponent::chain(k));
    }
    if let Some(rest) = token.strip_prefix('z') {
        if let Some((p_text, k_text)) = rest.split_once('^') {
            let p: u64 = p_text
                .parse()
                .map_err(|_| bad(format!("base in `{token}` must be an integer")))?;
            let k: u32 = k_text
                .parse()
                .map_err(|_| bad(format!("exponent in `{token}` must be an integer")))?;
            if p < 2 || k < 1 {
                return Err(bad(format!(
                    "`{token}` needs a base of at least 2 and an exponent of at least 1"
                )));
            }
            let label = match p.checked_pow(k) {
                Some(n) => format!("Z{n}"),
                None => format!("Z{p}^{k}"),
            };
            return Ok(ChainComponent {
                len: k,
                label,
                base: Some(p),
            });
        }
        let n: u64 = rest
            .parse()
            .map_err(|_| bad(format!("modulus in `{token}` must be an integer")))?;
        let (p, k) = prime_power(n).ok_or_else(|| {
            bad(format!(
                "`{token}`: {n} is not a prime power, so Z{n} is not a chain ring; list its prime-power factors instead"
            ))
        })?;
        return Ok(ChainComponent {
            len: k,
            label: format!("Z{n}"),
            base: Some(p),
        });
    }
    Err(bad(format!("unrecognized factor `{token}`")))
}

/// Decompose `n ≥ 2` as `p^k` with `p` prime, if possible.
fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let mut p = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    let mut rest = n;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    if rest == 1 {
        Some((p, k))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(lengths: &[u32]) -> RingSpec {
        RingSpec::from_lengths(lengths).unwrap()
    }

    #[test]
    fn parse_fields_and_chains() {
        assert_eq!(RingSpec::parse("F x F").unwrap().lengths(), vec![1, 1]);
        assert_eq!(RingSpec::parse("C5").unwrap().lengths(), vec![5]);
        assert_eq!(
            RingSpec::parse("f X c3 × F").unwrap().lengths(),
            vec![1, 3, 1]
        );
        assert_eq!(
            RingSpec::parse("  Z4x Z4 xZ8 ").unwrap().lengths(),
            vec![2, 2, 3]
        );
    }

    #[test]
    fn parse_prime_powers() {
        assert_eq!(RingSpec::parse("Z4").unwrap().lengths(), vec![2]);
        assert_eq!(RingSpec::parse("Z8").unwrap().lengths(), vec![3]);
        assert_eq!(RingSpec::parse("Z9").unwrap().lengths(), vec![2]);
        assert_eq!(RingSpec::parse("Z2").unwrap().lengths(), vec![1]);
        assert_eq!(RingSpec::parse("Z2^3").unwrap().lengths(), vec![3]);
        let spec = RingSpec::parse("Z3^2").unwrap();
        assert_eq!(spec.components()[0].label, "Z9");
        assert_eq!(spec.components()[0].base, Some(3));
    }

    #[test]
    fn parse_field_order_warns() {
        let (spec, warnings) = RingSpec::parse_verbose("F(4) x F").unwrap();
        assert_eq!(spec.lengths(), vec![1, 1]);
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("ignored"));
    }

    #[test]
    fn parse_rejections() {
        for text in ["", "  ", "x", "F x", "x F", "F xx F", "Z6", "Z1", "C0", "Q", "F(x)", "Z4^0", "Z1^2"] {
            assert!(
                matches!(RingSpec::parse(text), Err(Error::ParseSpec(_))),
                "expected parse failure for `{text}`"
            );
        }
    }

    #[test]
    fn prime_power_decomposition() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(121), Some((11, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn ideal_counts() {
        let caps = Caps::default();
        assert_eq!(spec(&[1, 1]).enumerate_ideals(&caps).unwrap().len(), 4);
        assert_eq!(spec(&[2, 2, 3]).enumerate_ideals(&caps).unwrap().len(), 36);
        assert_eq!(spec(&[1, 1, 1]).enumerate_ideals(&caps).unwrap().len(), 8);
        assert_eq!(spec(&[2, 2, 3]).ideal_count().unwrap(), 36);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let s = spec(&[1, 2]);
        let ideals = s.enumerate_ideals(&Caps::default()).unwrap();
        let levels: Vec<&[u32]> = ideals.iter().map(|i| i.levels()).collect();
        assert_eq!(
            levels,
            vec![&[0, 0][..], &[0, 1], &[0, 2], &[1, 0], &[1, 1], &[1, 2]]
        );
        let mut sorted = ideals.clone();
        sorted.sort();
        assert_eq!(sorted, ideals);
    }

    #[test]
    fn enumeration_cap() {
        let caps = Caps {
            enum_cap: 10,
            ..Caps::default()
        };
        assert!(matches!(
            spec(&[2, 2, 3]).enumerate_ideals(&caps),
            Err(Error::CapExceeded { needed: 36, .. })
        ));
    }

    #[test]
    fn vertex_counts_match_closed_form() {
        let caps = Caps::default();
        for lengths in [
            vec![1, 1],
            vec![1, 1, 1],
            vec![1, 1, 1, 1],
            vec![2, 2, 3],
            vec![2, 1],
            vec![2, 2, 1],
            vec![3, 1, 1],
            vec![2, 2, 2],
        ] {
            let s = spec(&lengths);
            let vertices = s.enumerate_vertices(&caps).unwrap();
            assert_eq!(
                vertices.len() as u128,
                s.vertex_count().unwrap(),
                "closed form mismatch for {lengths:?}"
            );
            assert!(vertices.iter().all(|v| s.is_vertex(v)));
        }
        assert_eq!(spec(&[1, 1]).enumerate_vertices(&caps).unwrap().len(), 2);
        assert_eq!(spec(&[1, 1, 1]).enumerate_vertices(&caps).unwrap().len(), 6);
        assert_eq!(spec(&[2, 2, 3]).enumerate_vertices(&caps).unwrap().len(), 23);
    }

    #[test]
    fn single_component_has_no_vertices() {
        assert!(matches!(
            spec(&[3]).enumerate_vertices(&Caps::default()),
            Err(Error::EmptyGraph(_))
        ));
    }

    #[test]
    fn lattice_operations() {
        let s = spec(&[2, 2, 3]);
        let a = s.ideal(&[2, 0, 1]).unwrap();
        let b = s.ideal(&[1, 2, 0]).unwrap();
        assert_eq!(s.ideal_sum(&a, &b).unwrap().levels(), &[2, 2, 1]);
        assert_eq!(s.ideal_meet(&a, &b).unwrap().levels(), &[1, 0, 0]);
        let top = s.ideal(&[2, 2, 3]).unwrap();
        let m1 = s.ideal(&[1, 2, 3]).unwrap();
        assert_eq!(s.ideal_sum(&m1, &top).unwrap(), top);
    }

    #[test]
    fn comaximality() {
        let s = spec(&[1, 1, 1]);
        let a = s.ideal(&[1, 0, 0]).unwrap();
        let b = s.ideal(&[0, 1, 1]).unwrap();
        let c = s.ideal(&[1, 1, 0]).unwrap();
        assert!(s.is_comaximal(&a, &b).unwrap());
        assert!(!s.is_comaximal(&a, &c).unwrap());
        assert!(matches!(
            s.is_comaximal(&a, &a),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn mismatched_spec_is_rejected() {
        let s2 = spec(&[1, 1]);
        let s3 = spec(&[1, 1, 1]);
        let a = s3.ideal(&[1, 0, 0]).unwrap();
        assert!(matches!(
            s2.ideal_sum(&a, &a.clone()),
            Err(Error::SpecMismatch(_))
        ));
        assert!(matches!(s2.ideal(&[2, 0]), Err(Error::SpecMismatch(_))));
    }

    #[test]
    fn nzc_and_classes() {
        let s = spec(&[2, 2, 3]);
        let i = s.ideal(&[2, 0, 1]).unwrap();
        assert_eq!(i.nzc(), 2);
        assert_eq!(s.nil_class(&i).unwrap().mask(), &[true, false, false]);
        let j = s.ideal(&[2, 1, 2]).unwrap();
        assert_eq!(s.nil_class(&j).unwrap().mask(), &[true, false, false]);
        assert_eq!(s.nil_class(&i).unwrap(), s.nil_class(&j).unwrap());
    }

    #[test]
    fn prime_reduction_zeroes_nilpotents() {
        let s = spec(&[2, 2, 3]);
        let i = s.ideal(&[2, 1, 2]).unwrap();
        let r = s.prime_reduction(&i).unwrap();
        assert_eq!(r.levels(), &[2, 0, 0]);
        assert_eq!(s.prime_reduction(&r).unwrap(), r);
        assert_eq!(s.nil_class(&i).unwrap(), s.nil_class(&r).unwrap());
    }

    #[test]
    fn maximal_ideals_listed() {
        let s = spec(&[2, 2, 3]);
        let max: Vec<Vec<u32>> = s
            .maximal_ideals()
            .iter()
            .map(|m| m.levels().to_vec())
            .collect();
        assert_eq!(max, vec![vec![1, 2, 3], vec![2, 1, 3], vec![2, 2, 2]]);
        let r = spec(&[1, 1, 1]);
        let max: Vec<Vec<u32>> = r
            .maximal_ideals()
            .iter()
            .map(|m| m.levels().to_vec())
            .collect();
        assert_eq!(max, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn containment_and_incomparability() {
        let s = spec(&[2, 2]);
        let a = s.ideal(&[2, 1]).unwrap();
        let b = s.ideal(&[1, 1]).unwrap();
        let c = s.ideal(&[0, 2]).unwrap();
        assert!(a.contains(&b));
        assert!(!b.contains(&a));
        assert!(a.incomparable(&c));
        assert!(!a.incomparable(&b));
    }

    #[test]
    fn labels() {
        let s = RingSpec::parse("Z4 x Z4 x Z8").unwrap();
        let i = s.ideal(&[2, 0, 2]).unwrap();
        assert_eq!(s.ideal_label(&i), "(Z4,0,(2))");
        let j = s.ideal(&[1, 2, 1]).unwrap();
        assert_eq!(s.ideal_label(&j), "((2),Z4,(4))");
        assert_eq!(s.to_string(), "Z4 x Z4 x Z8");

        let c = RingSpec::parse("C3 x F").unwrap();
        let k = c.ideal(&[1, 1]).unwrap();
        assert_eq!(c.ideal_label(&k), "(m^2,F)");
        let l = c.ideal(&[2, 0]).unwrap();
        assert_eq!(c.ideal_label(&l), "(m,0)");
    }

    #[test]
    fn radical_and_units() {
        let s = spec(&[2, 2, 3]);
        assert_eq!(s.jacobson_radical().levels(), &[1, 1, 2]);
        assert_eq!(s.zero_ideal().levels(), &[0, 0, 0]);
        assert_eq!(s.unit_ideal().levels(), &[2, 2, 3]);
        assert!(!s.is_vertex(&s.jacobson_radical()));
        assert!(!s.is_vertex(&s.unit_ideal()));
        assert!(!s.is_vertex(&s.zero_ideal()));
    }
}
