//! The KMS inverse-temperature space of the length dynamics.
//!
//! With one-dimensional fibres and uniform weights, existence of a
//! gauge-invariant equilibrium state at inverse temperature β comes down
//! to the system of integer-polynomial inequalities `g_J(t) ≥ 0` in
//! `t = e^{-β}`, one for each finite subset `J` of the governing family
//! (atoms, or the minimal closure set). This module assembles that set
//! exactly: isolate every root of every distinct `g_J`, decide signs at
//! algebraic breakpoints and at rational samples in between, and map the
//! admissible `t`-set to β-components. Floats appear only as display
//! approximations next to the exact data.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cliques::{self, subset_polynomial};
use crate::error::{Error, Result};
use crate::poly::{isolate_roots, poly_gcd, IntPoly, RootInterval, SturmChain};
use crate::presentation::{GeneratorId, MonoidPresentation};
use crate::reversing::{self, SetLcm};
use crate::word::Word;

/// Inequality families for the reduction theorems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Atoms,
    Pinf,
}

#[derive(Debug, Clone)]
pub struct KmsOptions {
    /// Accept the atom family without a reduction guarantee.
    pub force: bool,
    /// Refuse families with more than this many base elements.
    pub family_limit: usize,
    pub step_cap: usize,
    pub pinf_iteration_cap: usize,
    /// Isolating intervals are refined below this width.
    pub refine_width: BigRational,
}

impl Default for KmsOptions {
    fn default() -> Self {
        KmsOptions {
            force: false,
            family_limit: 20,
            step_cap: reversing::DEFAULT_STEP_CAP,
            pinf_iteration_cap: cliques::DEFAULT_PINF_ITERATION_CAP,
            refine_width: BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12))),
        }
    }
}

/// An exactly described value of `t = e^{-β}`: a square-free annihilating
/// polynomial with an isolating interval, plus float approximations.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraicT {
    pub poly: IntPoly,
    pub t_lo: BigRational,
    pub t_hi: BigRational,
    pub t_approx: f64,
    pub beta_approx: f64,
}

impl AlgebraicT {
    fn from_root(root: &RootInterval) -> AlgebraicT {
        let t = root.approx();
        AlgebraicT {
            poly: root.poly.clone(),
            t_lo: root.lo.clone(),
            t_hi: root.hi.clone(),
            t_approx: t,
            beta_approx: -t.ln() + 0.0, // normalizes -0.0
        }
    }
}

/// One connected component of the β-space.
#[derive(Debug, Clone, PartialEq)]
pub enum BetaComponent {
    Point(AlgebraicT),
    Interval {
        /// Finite lower β-endpoint (the upper end in `t`).
        lower: AlgebraicT,
        lower_closed: bool,
        /// `None` encodes an interval unbounded above in β.
        upper: Option<AlgebraicT>,
        upper_closed: bool,
    },
}

impl BetaComponent {
    pub fn beta_min(&self) -> f64 {
        match self {
            BetaComponent::Point(p) => p.beta_approx,
            BetaComponent::Interval { lower, .. } => lower.beta_approx,
        }
    }
}

/// A distinct inequality polynomial, tagged with one subset producing it.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyPolynomial {
    pub witness_j: Vec<Word>,
    pub poly: IntPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TemperatureSpace {
    /// Components in increasing β order.
    pub components: Vec<BetaComponent>,
    /// Whether the space is unbounded above (reaches β = +∞).
    pub includes_plus_infinity: bool,
    /// Whether β = 0 (t = 1) satisfies every inequality, decided exactly.
    pub beta_zero_included: bool,
    /// The β values where the inequality for the full base set holds with
    /// equality — the only candidates for equilibrium states of infinite
    /// type. Reported as an annotation, not a classification.
    pub full_set_equality: Vec<AlgebraicT>,
    pub polynomials: Vec<FamilyPolynomial>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gap {
    /// β runs over the open interval (lower, upper).
    pub lower_beta: f64,
    pub upper_beta: f64,
    /// The `t`-endpoints bounding the gap: `t_upper` corresponds to
    /// `lower_beta` and `t_lower` to `upper_beta`.
    pub t_upper: AlgebraicT,
    pub t_lower: AlgebraicT,
    pub witness_j: Vec<Word>,
    pub witness_t: BigRational,
    pub witness_value: BigRational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub has_gap: bool,
    pub gaps: Vec<Gap>,
    pub space: TemperatureSpace,
}

/// Whether a reduction-to-atoms theorem covers this presentation:
/// finite type, right-angled, or an iterated free/direct product of such.
pub fn reduction_guarantee(pres: &MonoidPresentation) -> bool {
    let all: Vec<GeneratorId> = pres.atoms().collect();
    guarantee_rec(pres, &all)
}

fn guarantee_rec(pres: &MonoidPresentation, gens: &[GeneratorId]) -> bool {
    if gens.is_empty() {
        return true;
    }
    let sub = cliques::subpresentation(pres, gens);
    let cls = sub.classify();
    if cls.finite_type || cls.right_angled {
        return true;
    }
    // free factors: components of the graph with edges at finite m
    let free_parts = split(pres, gens, |m| m.is_some());
    if free_parts.len() > 1 {
        return free_parts.iter().all(|p| guarantee_rec(pres, p));
    }
    // direct factors: components of the graph with edges at m != 2
    let direct_parts = split(pres, gens, |m| m != Some(2));
    if direct_parts.len() > 1 {
        return direct_parts.iter().all(|p| guarantee_rec(pres, p));
    }
    false
}

fn split(
    pres: &MonoidPresentation,
    gens: &[GeneratorId],
    edge: impl Fn(Option<u32>) -> bool,
) -> Vec<Vec<GeneratorId>> {
    let n = gens.len();
    let mut comp = vec![usize::MAX; n];
    let mut parts: Vec<Vec<GeneratorId>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let c = parts.len();
        let mut stack = vec![start];
        comp[start] = c;
        parts.push(vec![gens[start]]);
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if comp[j] == usize::MAX && i != j && edge(pres.m(gens[i], gens[j])) {
                    comp[j] = c;
                    parts[c].push(gens[j]);
                    stack.push(j);
                }
            }
        }
    }
    parts
}

/// The base set of the inequality family, as canonical words.
pub fn family_base(
    pres: &MonoidPresentation,
    family: Family,
    opts: &KmsOptions,
) -> Result<Vec<Word>> {
    let base = match family {
        Family::Atoms => pres.atoms().map(Word::single).collect::<Vec<_>>(),
        Family::Pinf => {
            let p = cliques::pinf(pres, opts.pinf_iteration_cap, opts.step_cap)?;
            if !p.saturated {
                return Err(Error::UnsaturatedPinf);
            }
            p.elements
        }
    };
    if base.len() > opts.family_limit {
        return Err(Error::FamilyTooLarge {
            size: base.len(),
            max: opts.family_limit,
        });
    }
    Ok(base)
}

/// All distinct inequality polynomials `g_J` over nonempty `J ⊆ base`,
/// deduplicated, each with one witness subset.
pub fn family_polynomials(
    pres: &MonoidPresentation,
    family: Family,
    opts: &KmsOptions,
) -> Result<Vec<FamilyPolynomial>> {
    if !pres.uniform_weights() {
        return Err(Error::NonUniformWeights);
    }
    if family == Family::Atoms && !opts.force && !reduction_guarantee(pres) {
        return Err(Error::GuaranteeUnavailable(
            "presentation is not finite-type, right-angled, or a free/direct \
             product of such; pass force to compute from atom inequalities anyway"
                .into(),
        ));
    }
    let base = family_base(pres, family, opts)?;
    let mut seen: Vec<FamilyPolynomial> = Vec::new();
    for mask in 1u64..(1u64 << base.len()) {
        let j: Vec<Word> = (0..base.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| base[k].clone())
            .collect();
        let poly = match family {
            // atom subsets go through the parabolic criterion, so that
            // non-spherical subsets are skipped instead of diverging
            Family::Atoms => {
                let gens: Vec<GeneratorId> = j.iter().map(|w| w.letters()[0]).collect();
                cliques::atom_subset_polynomial(pres, &gens, opts.step_cap)?
            }
            Family::Pinf => subset_polynomial(pres, &j, opts.step_cap)?,
        };
        if !seen.iter().any(|f| f.poly == poly) {
            seen.push(FamilyPolynomial { witness_j: j, poly });
        }
    }
    seen.sort_by(|a, b| {
        a.poly
            .degree()
            .cmp(&b.poly.degree())
            .then_with(|| a.poly.coeffs().cmp(b.poly.coeffs()))
    });
    Ok(seen)
}

/// Sign of `g` at the algebraic point isolated by `root`, decided exactly.
fn sign_at_root(g: &IntPoly, root: &RootInterval) -> i32 {
    if root.is_exact() {
        return g.sign_at(&root.lo);
    }
    // zero test: the root annihilates g iff gcd(g, annihilator) has a
    // root in the isolating interval
    let d = poly_gcd(g, &root.poly);
    if d.degree().is_some_and(|deg| deg >= 1)
        && SturmChain::new(&d).count_roots(&root.lo, &root.hi) == 1
    {
        return 0;
    }
    let mut iv = root.clone();
    loop {
        let s_lo = g.sign_at(&iv.lo);
        let s_hi = g.sign_at(&iv.hi);
        if s_lo == s_hi && s_lo != 0 {
            return s_lo;
        }
        let target = iv.width() / BigRational::from_integer(BigInt::from(4));
        iv.refine(&target);
        if iv.is_exact() {
            return g.sign_at(&iv.lo);
        }
    }
}

struct Assembly {
    roots: Vec<RootInterval>,
    root_included: Vec<bool>,
    region_samples: Vec<BigRational>,
    region_included: Vec<bool>,
    /// For an excluded region, the index of one negative polynomial.
    region_witness: Vec<Option<usize>>,
}

fn assemble(polys: &[FamilyPolynomial], refine_width: &BigRational) -> Result<Assembly> {
    // breakpoints: all positive roots of the product of the distinct polys
    let mut product = IntPoly::one();
    for f in polys {
        product = product.mul(&f.poly);
    }
    if product.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // Cauchy-style bound: every root has |t| <= 1 + max|c_k| / |lead|
    let lead = product.coeffs().last().expect("nonzero").clone();
    let maxc = product
        .coeffs()
        .iter()
        .map(Signed::abs)
        .max()
        .expect("nonzero");
    let bound = BigRational::one() + BigRational::new(maxc, lead.abs());
    let zero = BigRational::zero();
    let mut roots = isolate_roots(&product, &zero, &bound)?;
    for r in &mut roots {
        r.refine(refine_width);
    }
    // separate neighbors so regions between roots have rational samples
    for k in 1..roots.len() {
        loop {
            let gap_ok = roots[k - 1].hi < roots[k].lo;
            if gap_ok {
                break;
            }
            let w = roots[k].width() / BigRational::from_integer(BigInt::from(4));
            if !roots[k - 1].is_exact() {
                let wl = roots[k - 1].width() / BigRational::from_integer(BigInt::from(4));
                roots[k - 1].refine(&wl);
            }
            if !roots[k].is_exact() {
                roots[k].refine(&w);
            }
            if roots[k - 1].is_exact() && roots[k].is_exact() {
                assert!(roots[k - 1].lo < roots[k].lo, "roots out of order");
                break;
            }
        }
    }

    // one rational sample strictly inside each region between breakpoints
    let mut region_samples = Vec::with_capacity(roots.len() + 1);
    if roots.is_empty() {
        region_samples.push(BigRational::one());
    } else {
        let mut first = roots[0].clone();
        while first.lo <= zero {
            let w = first.width() / BigRational::from_integer(BigInt::from(4));
            first.refine(&w);
            if first.is_exact() {
                break;
            }
        }
        // the open interval (0, first.lo) lies strictly below the first
        // root; simplest-rational samples keep reported witnesses readable
        region_samples.push(crate::poly::simplest_in_interval(&zero, &first.lo));
        roots[0] = first;
        for k in 1..roots.len() {
            region_samples.push(crate::poly::simplest_in_interval(
                &roots[k - 1].hi,
                &roots[k].lo,
            ));
        }
        let last_hi = &roots.last().unwrap().hi;
        region_samples.push(crate::poly::simplest_in_interval(
            last_hi,
            &(last_hi + BigRational::from_integer(BigInt::from(2))),
        ));
    }

    let mut region_included = Vec::with_capacity(region_samples.len());
    let mut region_witness = Vec::with_capacity(region_samples.len());
    for sample in &region_samples {
        let mut included = true;
        let mut witness = None;
        for (i, f) in polys.iter().enumerate() {
            let s = f.poly.sign_at(sample);
            debug_assert_ne!(s, 0, "sample must avoid all roots");
            if s < 0 {
                included = false;
                witness = Some(i);
                break;
            }
        }
        region_included.push(included);
        region_witness.push(witness);
    }

    let root_included = roots
        .iter()
        .map(|r| polys.iter().all(|f| sign_at_root(&f.poly, r) >= 0))
        .collect();
    Ok(Assembly {
        roots,
        root_included,
        region_samples,
        region_included,
        region_witness,
    })
}

/// Items of the t-line in increasing order: region 0, root 0, region 1, ...
#[derive(Clone, Copy, PartialEq, Eq)]
enum Item {
    Region(usize),
    Root(usize),
}

impl Assembly {
    fn items(&self) -> Vec<Item> {
        let mut items = Vec::with_capacity(2 * self.roots.len() + 1);
        for k in 0..self.roots.len() {
            items.push(Item::Region(k));
            items.push(Item::Root(k));
        }
        items.push(Item::Region(self.roots.len()));
        items
    }

    fn included(&self, item: Item) -> bool {
        match item {
            Item::Region(k) => self.region_included[k],
            Item::Root(k) => self.root_included[k],
        }
    }
}

/// Compute the β-space for the chosen inequality family.
pub fn temperature_space(
    pres: &MonoidPresentation,
    family: Family,
    opts: &KmsOptions,
) -> Result<TemperatureSpace> {
    let polys = family_polynomials(pres, family, opts)?;
    let assembly = assemble(&polys, &opts.refine_width)?;
    let one = BigRational::one();
    let beta_zero_included = polys.iter().all(|f| f.poly.sign_at(&one) >= 0);
    let full_set_equality = full_set_equality_points(pres, family, opts)?;

    // maximal runs of included items, in increasing t
    let items = assembly.items();
    let mut components = Vec::new();
    let mut includes_plus_infinity = false;
    let mut run_start: Option<usize> = None;
    for (pos, &item) in items.iter().enumerate() {
        if assembly.included(item) {
            run_start.get_or_insert(pos);
        }
        let run_ends = !assembly.included(item) || pos + 1 == items.len();
        if run_ends {
            if let Some(start) = run_start.take() {
                let end = if assembly.included(item) {
                    pos
                } else {
                    pos - 1
                };
                let last_region = items.len() - 1;
                assert!(
                    end != last_region || items.len() == 1,
                    "the region t > every root cannot satisfy 1 - t^l >= 0"
                );
                let first = items[start];
                let last = items[end];
                // t-run [first..last] maps to one β-component; the low-t
                // side is the high-β side
                let (upper, upper_closed) = match first {
                    Item::Region(0) => {
                        includes_plus_infinity = true;
                        (None, false)
                    }
                    Item::Region(k) => (Some(AlgebraicT::from_root(&assembly.roots[k - 1])), false),
                    Item::Root(k) => (Some(AlgebraicT::from_root(&assembly.roots[k])), true),
                };
                let (lower, lower_closed) = match last {
                    Item::Root(k) => (AlgebraicT::from_root(&assembly.roots[k]), true),
                    Item::Region(k) => (AlgebraicT::from_root(&assembly.roots[k]), false),
                };
                let singleton = start == end && matches!(first, Item::Root(_));
                if singleton {
                    components.push(BetaComponent::Point(lower));
                } else {
                    components.push(BetaComponent::Interval {
                        lower,
                        lower_closed,
                        upper,
                        upper_closed,
                    });
                }
            }
        }
    }
    components.reverse(); // increasing β
    Ok(TemperatureSpace {
        components,
        includes_plus_infinity,
        beta_zero_included,
        full_set_equality,
        polynomials: polys,
    })
}

/// Positive roots of the inequality polynomial of the entire base set, in
/// decreasing t (increasing β) order.
fn full_set_equality_points(
    pres: &MonoidPresentation,
    family: Family,
    opts: &KmsOptions,
) -> Result<Vec<AlgebraicT>> {
    let base = family_base(pres, family, opts)?;
    let g = match family {
        Family::Atoms => {
            let gens: Vec<GeneratorId> = base.iter().map(|w| w.letters()[0]).collect();
            cliques::atom_subset_polynomial(pres, &gens, opts.step_cap)?
        }
        Family::Pinf => subset_polynomial(pres, &base, opts.step_cap)?,
    };
    if g.is_zero() {
        return Ok(Vec::new());
    }
    let lead = g.coeffs().last().expect("nonzero").clone();
    let maxc = g.coeffs().iter().map(Signed::abs).max().expect("nonzero");
    let bound = BigRational::one() + BigRational::new(maxc, lead.abs());
    let mut roots = isolate_roots(&g, &BigRational::zero(), &bound)?;
    for r in &mut roots {
        r.refine(&opts.refine_width);
    }
    roots.reverse();
    Ok(roots.iter().map(AlgebraicT::from_root).collect())
}

/// Detect gaps: maximal excluded β-intervals between components.
pub fn detect_gap(
    pres: &MonoidPresentation,
    family: Family,
    opts: &KmsOptions,
) -> Result<GapReport> {
    let space = temperature_space(pres, family, opts)?;
    let polys = space.polynomials.clone();
    let assembly = assemble(&polys, &opts.refine_width)?;
    let items = assembly.items();

    let mut gaps = Vec::new();
    // excluded runs strictly between included items, in t
    let mut pos = 0usize;
    while pos < items.len() {
        if !assembly.included(items[pos]) {
            let start = pos;
            while pos < items.len() && !assembly.included(items[pos]) {
                pos += 1;
            }
            let end = pos - 1;
            let interior = start > 0 && pos < items.len();
            if interior {
                // find a region in the run for the witness sample
                let region = (start..=end).find_map(|i| match items[i] {
                    Item::Region(k) => Some(k),
                    Item::Root(_) => None,
                });
                let k = region.expect("an excluded run between included items contains a region");
                let witness_idx =
                    assembly.region_witness[k].expect("excluded region has a negative polynomial");
                let witness_t = assembly.region_samples[k].clone();
                let witness_value = polys[witness_idx].poly.eval(&witness_t);
                // t-run bounds: the root below start and the root above end
                let t_lower = match items[start] {
                    Item::Region(k) => &assembly.roots[k - 1],
                    Item::Root(k) => &assembly.roots[k],
                };
                let t_upper = match items[end] {
                    Item::Region(k) => &assembly.roots[k],
                    Item::Root(k) => &assembly.roots[k],
                };
                let t_lower = AlgebraicT::from_root(t_lower);
                let t_upper = AlgebraicT::from_root(t_upper);
                gaps.push(Gap {
                    lower_beta: t_upper.beta_approx,
                    upper_beta: t_lower.beta_approx,
                    t_upper,
                    t_lower,
                    witness_j: polys[witness_idx].witness_j.clone(),
                    witness_t,
                    witness_value,
                });
            }
        } else {
            pos += 1;
        }
    }
    gaps.reverse(); // increasing β
    Ok(GapReport {
        has_gap: !gaps.is_empty(),
        gaps,
        space,
    })
}

/// The critical inverse temperature: `β_c = -ln` of the smallest positive
/// root of the clique polynomial (the reciprocal of the growth series).
pub fn critical_beta(pres: &MonoidPresentation, opts: &KmsOptions) -> Result<AlgebraicT> {
    let h = cliques::clique_polynomial(pres, opts.step_cap)?;
    if h.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let lead = h.coeffs().last().expect("nonzero").clone();
    let maxc = h.coeffs().iter().map(Signed::abs).max().expect("nonzero");
    let bound = BigRational::one() + BigRational::new(maxc, lead.abs());
    let mut roots = isolate_roots(&h, &BigRational::zero(), &bound)?;
    if roots.is_empty() {
        return Err(Error::NoPositiveRoot);
    }
    roots[0].refine(&opts.refine_width);
    Ok(AlgebraicT::from_root(&roots[0]))
}

/// Where to evaluate the positivity inequalities.
#[derive(Debug, Clone)]
pub enum EvalPoint {
    /// Exact `t = e^{-β}`, must be positive.
    RationalT(BigRational),
    Beta(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum GValue {
    Exact(BigRational),
    Approx(f64),
}

impl GValue {
    pub fn is_nonnegative(&self) -> bool {
        match self {
            GValue::Exact(v) => !v.is_negative(),
            GValue::Approx(v) => *v >= 0.0,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            GValue::Exact(v) => v.to_f64().unwrap_or(f64::NAN),
            GValue::Approx(v) => *v,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JEvaluation {
    pub j: Vec<Word>,
    pub value: GValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositivityReport {
    pub t_approx: f64,
    pub beta_approx: f64,
    pub evaluations: Vec<JEvaluation>,
    pub all_nonnegative: bool,
}

/// Evaluate `g_J` for the given subsets at a point.
///
/// Exact rational values with uniform weights at rational `t`; float
/// evaluation otherwise. With explicit weights the value of an element is
/// the product of its letters' weights, well defined by the odd-component
/// constraint on the presentation.
pub fn evaluate_positivity(
    pres: &MonoidPresentation,
    point: &EvalPoint,
    js: &[Vec<Word>],
    step_cap: usize,
) -> Result<PositivityReport> {
    let (t_approx, beta_approx) = match point {
        EvalPoint::RationalT(t) => {
            if !t.is_positive() {
                return Err(Error::MalformedInput("t must be positive".into()));
            }
            let tf = t.to_f64().unwrap_or(f64::NAN);
            (tf, -tf.ln())
        }
        EvalPoint::Beta(b) => ((-b).exp(), *b),
    };
    let mut evaluations = Vec::with_capacity(js.len());
    let mut all_nonnegative = true;
    for j in js {
        let value = match (point, pres.uniform_weights()) {
            (EvalPoint::RationalT(t), true) => {
                GValue::Exact(subset_polynomial(pres, j, step_cap)?.eval(t))
            }
            _ => GValue::Approx(g_eval_f64(pres, j, beta_approx, step_cap)?),
        };
        all_nonnegative &= value.is_nonnegative();
        evaluations.push(JEvaluation {
            j: j.clone(),
            value,
        });
    }
    Ok(PositivityReport {
        t_approx,
        beta_approx,
        evaluations,
        all_nonnegative,
    })
}

/// Float evaluation of `g_J(β) = Σ_{K ∈ cl(J)} (-1)^{|K|} N(∨K)^{-β}`.
fn g_eval_f64(pres: &MonoidPresentation, j: &[Word], beta: f64, step_cap: usize) -> Result<f64> {
    let mut elems: Vec<Word> = Vec::new();
    for w in j {
        if w.is_identity() {
            return Err(Error::IdentityEntry);
        }
        let c = reversing::canonicalize(pres, w, step_cap)
            .ok_or_else(|| Error::Inconclusive("canonicalization hit the step cap".into()))?;
        if !elems.contains(&c) {
            elems.push(c);
        }
    }
    let mut total = 0.0f64;
    for mask in 0u64..(1u64 << elems.len()) {
        let sign = if mask.count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        };
        if mask == 0 {
            total += sign;
            continue;
        }
        let subset: Vec<Word> = (0..elems.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| elems[k].clone())
            .collect();
        match reversing::lcm_set(pres, &subset, step_cap) {
            SetLcm::Lcm(l) => total += sign * weight_of(pres, &l).powf(-beta),
            SetLcm::NoCommonMultiple => {}
            SetLcm::Inconclusive { steps_used } => {
                return Err(Error::Inconclusive(format!(
                    "lcm hit the step cap after {steps_used} steps"
                )))
            }
        }
    }
    Ok(total)
}

/// `N(w)`: e^length under uniform weights, otherwise the product of the
/// letters' weights.
pub fn weight_of(pres: &MonoidPresentation, w: &Word) -> f64 {
    match &pres.weights {
        None => (w.len() as f64).exp(),
        Some(ws) => w
            .letters()
            .iter()
            .map(|g| ws[g.index()].to_f64().unwrap_or(f64::NAN))
            .product(),
    }
}

/// The measure of a cell: `μ(pΩ_K) = t^{ℓ(p)} · g_K(t)`, exact.
pub fn mu_cell(
    pres: &MonoidPresentation,
    prefix: &Word,
    blockers: &[Word],
    t: &BigRational,
    step_cap: usize,
) -> Result<BigRational> {
    if !t.is_positive() {
        return Err(Error::MalformedInput("t must be positive".into()));
    }
    if !pres.uniform_weights() {
        return Err(Error::NonUniformWeights);
    }
    let g = subset_polynomial(pres, blockers, step_cap)?;
    let mut scale = BigRational::one();
    for _ in 0..prefix.len() {
        scale *= t;
    }
    Ok(scale * g.eval(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::parse_rational;

    fn opts() -> KmsOptions {
        KmsOptions::default()
    }

    fn w(pres: &MonoidPresentation, s: &str) -> Word {
        pres.parse_word(s).unwrap()
    }

    #[test]
    fn guarantee_classification() {
        assert!(reduction_guarantee(&fixtures::b3()));
        assert!(reduction_guarantee(&fixtures::b4()));
        assert!(reduction_guarantee(&fixtures::raam_rank3()));
        assert!(reduction_guarantee(&crate::presentation::free_product(
            &fixtures::b3(),
            &fixtures::free_monoid(1)
        )));
        assert!(reduction_guarantee(&crate::presentation::direct_product(
            &fixtures::b3(),
            &fixtures::b3()
        )));
        assert!(!reduction_guarantee(&fixtures::a2_tilde()));
    }

    #[test]
    fn b3_temperature_space_shape() {
        let b3 = fixtures::b3();
        let space = temperature_space(&b3, Family::Atoms, &opts()).unwrap();
        assert!(space.includes_plus_infinity);
        assert!(space.beta_zero_included);
        assert_eq!(space.components.len(), 2);
        let BetaComponent::Point(p) = &space.components[0] else {
            panic!("expected the isolated β = 0 point")
        };
        assert!(p.beta_approx.abs() < 1e-9);
        let BetaComponent::Interval {
            lower,
            lower_closed,
            upper,
            ..
        } = &space.components[1]
        else {
            panic!("expected the ray")
        };
        assert!(lower_closed);
        assert!(upper.is_none());
        let golden = 0.618_033_988_749_894_9_f64;
        assert!((lower.t_approx - golden).abs() < 1e-9);
        assert!((lower.beta_approx - 0.481_211_825_059_603_4).abs() < 1e-9);
    }

    #[test]
    fn full_set_equality_annotation() {
        // for the two-generator braid monoid the full-set inequality is the
        // clique polynomial; equality holds at β = 0 and β = a
        let b3 = fixtures::b3();
        let space = temperature_space(&b3, Family::Atoms, &opts()).unwrap();
        let betas: Vec<f64> = space
            .full_set_equality
            .iter()
            .map(|a| a.beta_approx)
            .collect();
        assert_eq!(betas.len(), 2);
        assert!(betas[0].abs() < 1e-9);
        assert!((betas[1] - 0.481_211_825).abs() < 1e-6);
    }

    #[test]
    fn single_generator_has_connected_space() {
        let n = fixtures::free_monoid(1);
        let space = temperature_space(&n, Family::Atoms, &opts()).unwrap();
        assert_eq!(space.components.len(), 1);
        let BetaComponent::Interval {
            lower,
            lower_closed,
            upper,
            ..
        } = &space.components[0]
        else {
            panic!("expected one ray")
        };
        assert!(lower_closed);
        assert!((lower.beta_approx - 0.0).abs() < 1e-12);
        assert!(upper.is_none());
        let gaps = detect_gap(&n, Family::Atoms, &opts()).unwrap();
        assert!(!gaps.has_gap);
    }

    #[test]
    fn b3_gap_with_witness() {
        let b3 = fixtures::b3();
        let report = detect_gap(&b3, Family::Atoms, &opts()).unwrap();
        assert!(report.has_gap);
        assert_eq!(report.gaps.len(), 1);
        let gap = &report.gaps[0];
        assert!(gap.lower_beta.abs() < 1e-9);
        assert!((gap.upper_beta - 0.481_211_825).abs() < 1e-6);
        assert!(gap.witness_value.is_negative());
        assert_eq!(gap.witness_j.len(), 2);
    }

    #[test]
    fn raam_space_is_one_ray_without_beta_zero() {
        let raam = fixtures::raam_rank3();
        let space = temperature_space(&raam, Family::Atoms, &opts()).unwrap();
        assert!(!space.beta_zero_included);
        assert_eq!(space.components.len(), 1);
        let BetaComponent::Interval { lower, .. } = &space.components[0] else {
            panic!("expected a ray")
        };
        // clique polynomial (1-t)(1-2t): critical root 1/2
        assert!((lower.t_approx - 0.5).abs() < 1e-9);
        let gaps = detect_gap(&raam, Family::Atoms, &opts()).unwrap();
        assert!(!gaps.has_gap);
    }

    #[test]
    fn pinf_family_agrees_with_atoms_for_b3() {
        let b3 = fixtures::b3();
        let a = temperature_space(&b3, Family::Atoms, &opts()).unwrap();
        let p = temperature_space(&b3, Family::Pinf, &opts()).unwrap();
        assert_eq!(a.components.len(), p.components.len());
        for (ca, cp) in a.components.iter().zip(&p.components) {
            assert!((ca.beta_min() - cp.beta_min()).abs() < 1e-9);
        }
    }

    #[test]
    fn guarantee_gate_and_force() {
        let a2t = fixtures::a2_tilde();
        assert!(matches!(
            temperature_space(&a2t, Family::Atoms, &opts()),
            Err(Error::GuaranteeUnavailable(_))
        ));
        let forced = KmsOptions {
            force: true,
            ..opts()
        };
        // with force, the atom inequalities are computed as stated: the
        // triple is not a clique, so its polynomial 1 - 3t + 3t^3 binds
        // first and the space is {0} ∪ [-ln r, ∞) for its smallest root r
        let space = temperature_space(&a2t, Family::Atoms, &forced).unwrap();
        assert!(space.includes_plus_infinity);
        assert!(space.beta_zero_included);
        assert_eq!(space.components.len(), 2);
        let BetaComponent::Point(zero) = &space.components[0] else {
            panic!("expected isolated β = 0")
        };
        assert!(zero.beta_approx.abs() < 1e-9);
        let BetaComponent::Interval { lower, .. } = &space.components[1] else {
            panic!("expected a ray")
        };
        let triple = IntPoly::from_i64(&[1, -3, 0, 3]);
        assert!(
            triple.eval(&lower.t_lo).is_positive() && triple.eval(&lower.t_hi).is_negative(),
            "ray endpoint must be the smallest root of the triple's polynomial"
        );
        assert!((lower.t_approx - 0.3950).abs() < 1e-3);
    }

    #[test]
    fn critical_temperatures() {
        let b3 = fixtures::b3();
        let c = critical_beta(&b3, &opts()).unwrap();
        assert!((c.beta_approx - 0.481_211_825_059_603_4).abs() < 1e-9);
        let f2 = fixtures::free_monoid(2);
        let c2 = critical_beta(&f2, &opts()).unwrap();
        assert!((c2.beta_approx - (2.0f64).ln()).abs() < 1e-12);
        let n = fixtures::free_monoid(1);
        let c3 = critical_beta(&n, &opts()).unwrap();
        assert!(c3.beta_approx.abs() < 1e-12);
    }

    #[test]
    fn positivity_evaluation_examples() {
        let b3 = fixtures::b3();
        let j = vec![w(&b3, "s1"), w(&b3, "s2")];
        let report = evaluate_positivity(
            &b3,
            &EvalPoint::RationalT(parse_rational("0.8").unwrap()),
            &[j],
            100_000,
        )
        .unwrap();
        let GValue::Exact(v) = &report.evaluations[0].value else {
            panic!("expected exact value")
        };
        assert_eq!(v, &parse_rational("-0.088").unwrap());
        assert!(!report.all_nonnegative);
    }

    #[test]
    fn weighted_evaluation_is_float() {
        let text =
            r#"{"name":"w","generators":["a","b"],"coxeter":[[1,2],[2,1]],"weights":["2","3"]}"#;
        let p = MonoidPresentation::parse(text).unwrap();
        let j = vec![w(&p, "a"), w(&p, "b")];
        let report = evaluate_positivity(&p, &EvalPoint::Beta(1.0), &[j], 100_000).unwrap();
        let GValue::Approx(v) = report.evaluations[0].value else {
            panic!("expected approximate value")
        };
        // 1 - 2^{-1} - 3^{-1} + 6^{-1}
        assert!((v - (1.0 - 0.5 - 1.0 / 3.0 + 1.0 / 6.0)).abs() < 1e-12);
        // polynomial operations refuse explicit weights
        assert!(matches!(
            cliques::clique_polynomial(&p, 100_000),
            Err(Error::NonUniformWeights)
        ));
    }

    #[test]
    fn measure_of_cells() {
        let b3 = fixtures::b3();
        let t = parse_rational("1/2").unwrap();
        // μ(P) = 1
        assert_eq!(
            mu_cell(&b3, &Word::identity(), &[], &t, 100_000).unwrap(),
            BigRational::one()
        );
        // μ(Ω_{s1,s2}) = 1 - 2t + t³
        let g = mu_cell(
            &b3,
            &Word::identity(),
            &[w(&b3, "s1"), w(&b3, "s2")],
            &t,
            100_000,
        )
        .unwrap();
        assert_eq!(g, parse_rational("1/8").unwrap()); // 1 - 1 + 1/8
                                                       // additivity: μ(P∖s1P) + μ(s1P) = 1
        let a = mu_cell(&b3, &Word::identity(), &[w(&b3, "s1")], &t, 100_000).unwrap();
        let b = mu_cell(&b3, &w(&b3, "s1"), &[], &t, 100_000).unwrap();
        assert_eq!(a + b, BigRational::one());
    }
}
