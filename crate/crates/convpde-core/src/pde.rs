//! Second-order PDE model, discriminant, and type classification.
//!
//! For an equation `a u_xx + b u_xy + c u_yy + ... = 0` the engine convolves
//! a kernel chain into the principal coefficients, forms the discriminant
//! `D = B^2 - A*C`, and classifies by the sign of `D`: positive is
//! hyperbolic, negative is elliptic, zero is parabolic. Signs are decided
//! per open quadrant; the axes are excluded (monomial discriminants vanish
//! there) and reported separately by the CLI.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::conv::{conv_chain, KernelChain};
use crate::poly::{BiPoly, Monomial};
use crate::rational::{Rational, Sign};

/// Error constructing a PDE value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PdeError {
    /// All three principal coefficients are zero.
    ZeroPrincipalPart,
}

impl fmt::Display for PdeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdeError::ZeroPrincipalPart => {
                write!(f, "principal coefficients uxx, uxy, uyy are all zero")
            }
        }
    }
}

impl core::error::Error for PdeError {}

/// `a u_xx + b u_xy + c u_yy + d u_x + e u_y + f u = rhs`.
///
/// The lower-order coefficients and the right-hand side are stored and echoed
/// in reports but never influence classification; only the principal part
/// does. Sign conventions are the caller's: for the wave form
/// `a u_tt - c u_xx` the `u_xx` coefficient is supplied already negated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondOrderPde {
    a: BiPoly,
    b: BiPoly,
    c: BiPoly,
    d: BiPoly,
    e: BiPoly,
    f: BiPoly,
    rhs_note: Option<String>,
}

impl SecondOrderPde {
    /// Builds an equation from its principal coefficients; at least one must
    /// be nonzero.
    pub fn new(a: BiPoly, b: BiPoly, c: BiPoly) -> Result<Self, PdeError> {
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(PdeError::ZeroPrincipalPart);
        }
        Ok(SecondOrderPde {
            a,
            b,
            c,
            d: BiPoly::zero(),
            e: BiPoly::zero(),
            f: BiPoly::zero(),
            rhs_note: None,
        })
    }

    pub fn with_lower_order(mut self, d: BiPoly, e: BiPoly, f: BiPoly) -> Self {
        self.d = d;
        self.e = e;
        self.f = f;
        self
    }

    pub fn with_rhs_note(mut self, note: String) -> Self {
        self.rhs_note = Some(note);
        self
    }

    pub fn a(&self) -> &BiPoly {
        &self.a
    }
    pub fn b(&self) -> &BiPoly {
        &self.b
    }
    pub fn c(&self) -> &BiPoly {
        &self.c
    }
    pub fn d(&self) -> &BiPoly {
        &self.d
    }
    pub fn e(&self) -> &BiPoly {
        &self.e
    }
    pub fn f(&self) -> &BiPoly {
        &self.f
    }
    pub fn rhs_note(&self) -> Option<&str> {
        self.rhs_note.as_deref()
    }

    /// The principal coefficients as written, before any convolution.
    pub fn principal(&self) -> PrincipalTriple {
        PrincipalTriple {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
        }
    }
}

/// The (possibly convolved) principal coefficients of an equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalTriple {
    pub a: BiPoly,
    pub b: BiPoly,
    pub c: BiPoly,
}

impl PrincipalTriple {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }
}

/// PDE type at a point or over a region where the discriminant sign is fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Hyperbolic,
    Elliptic,
    Parabolic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Hyperbolic => write!(f, "hyperbolic"),
            Classification::Elliptic => write!(f, "elliptic"),
            Classification::Parabolic => write!(f, "parabolic"),
        }
    }
}

/// One of the four open quadrants, axes excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quadrant {
    I,
    II,
    III,
    IV,
}

impl Quadrant {
    pub const ALL: [Quadrant; 4] = [Quadrant::I, Quadrant::II, Quadrant::III, Quadrant::IV];

    pub fn index(self) -> usize {
        match self {
            Quadrant::I => 0,
            Quadrant::II => 1,
            Quadrant::III => 2,
            Quadrant::IV => 3,
        }
    }

    pub fn x_negative(self) -> bool {
        matches!(self, Quadrant::II | Quadrant::III)
    }

    pub fn y_negative(self) -> bool {
        matches!(self, Quadrant::III | Quadrant::IV)
    }

    pub fn label(self) -> &'static str {
        match self {
            Quadrant::I => "I",
            Quadrant::II => "II",
            Quadrant::III => "III",
            Quadrant::IV => "IV",
        }
    }
}

/// Per-quadrant sign of the discriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignVerdict {
    Positive,
    Negative,
    /// Identically zero on the quadrant (only issued conclusively, for the
    /// zero polynomial).
    Zero,
    /// Both signs observed.
    Mixed,
    /// Sampling saw only zeros but the polynomial is not identically zero.
    Unknown,
}

impl fmt::Display for SignVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SignVerdict::Positive => "positive",
            SignVerdict::Negative => "negative",
            SignVerdict::Zero => "zero",
            SignVerdict::Mixed => "mixed",
            SignVerdict::Unknown => "unknown",
        };
        write!(f, "{}", s)
    }
}

/// How a [`SignSummary`] was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignMethod {
    /// Single-term discriminant: sign per quadrant follows from the
    /// coefficient sign and exponent parities. Conclusive.
    MonomialParity,
    /// Every term has both exponents even and all coefficients share one
    /// sign, so that sign holds everywhere off the axes. Conclusive. Also
    /// covers the identically zero polynomial.
    EvenPowersUniformSign,
    /// Grid sampling; verdicts are evidence, not proof.
    Sampling,
}

impl fmt::Display for SignMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SignMethod::MonomialParity => "monomial-parity",
            SignMethod::EvenPowersUniformSign => "even-powers-uniform-sign",
            SignMethod::Sampling => "sampling",
        };
        write!(f, "{}", s)
    }
}

/// Per-quadrant sign verdicts for a discriminant, with the method that
/// produced them. Indexed by [`Quadrant::index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignSummary {
    pub quadrants: [SignVerdict; 4],
    pub method: SignMethod,
    pub conclusive: bool,
}

impl SignSummary {
    pub fn verdict(&self, q: Quadrant) -> SignVerdict {
        self.quadrants[q.index()]
    }
}

/// PDE type verdict for a quadrant, derived from a [`SignVerdict`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TypeVerdict {
    Hyperbolic,
    Elliptic,
    Parabolic,
    Mixed,
    Unknown,
    /// All three principal coefficients are zero; there is no equation to
    /// classify. Never reported as parabolic.
    Degenerate,
}

impl TypeVerdict {
    pub fn from_sign(v: SignVerdict) -> TypeVerdict {
        match v {
            SignVerdict::Positive => TypeVerdict::Hyperbolic,
            SignVerdict::Negative => TypeVerdict::Elliptic,
            SignVerdict::Zero => TypeVerdict::Parabolic,
            SignVerdict::Mixed => TypeVerdict::Mixed,
            SignVerdict::Unknown => TypeVerdict::Unknown,
        }
    }
}

impl fmt::Display for TypeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeVerdict::Hyperbolic => "hyperbolic",
            TypeVerdict::Elliptic => "elliptic",
            TypeVerdict::Parabolic => "parabolic",
            TypeVerdict::Mixed => "mixed",
            TypeVerdict::Unknown => "unknown",
            TypeVerdict::Degenerate => "degenerate",
        };
        write!(f, "{}", s)
    }
}

/// Everything the engine can say about one principal triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleAnalysis {
    pub triple: PrincipalTriple,
    pub degenerate: bool,
    pub discriminant: BiPoly,
    pub signs: SignSummary,
    pub types: [TypeVerdict; 4],
}

/// Full classification report: the equation as written next to the convolved
/// one, so invariance of the type under convolution can be checked by eye.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub original: TripleAnalysis,
    pub convolved: TripleAnalysis,
    /// Whether per-quadrant type verdicts agree between the two; `None` when
    /// the convolved triple is degenerate.
    pub agreement: Option<bool>,
}

/// Convolves the chain into each principal coefficient.
pub fn convolved_principal(pde: &SecondOrderPde, chain: &KernelChain) -> PrincipalTriple {
    PrincipalTriple {
        a: conv_chain(chain, pde.a()),
        b: conv_chain(chain, pde.b()),
        c: conv_chain(chain, pde.c()),
    }
}

/// `D = B^2 - A*C`, exactly. Symmetric in `A` and `C`; no factor-of-2
/// adjustment is applied to the mixed coefficient.
pub fn discriminant(t: &PrincipalTriple) -> BiPoly {
    &(&t.b * &t.b) - &(&t.a * &t.c)
}

/// Sign of the exact evaluation of `D` at a point, as a classification.
pub fn classify_at_point(d: &BiPoly, x: &Rational, y: &Rational) -> Classification {
    match d.eval(x, y).sign() {
        Sign::Positive => Classification::Hyperbolic,
        Sign::Negative => Classification::Elliptic,
        Sign::Zero => Classification::Parabolic,
    }
}

fn monomial_quadrant_sign(coeff: &Rational, m: &Monomial, q: Quadrant) -> Sign {
    coeff
        .sign()
        .flipped_if(q.x_negative() && m.deg1 % 2 == 1)
        .flipped_if(q.y_negative() && m.deg2 % 2 == 1)
}

fn sign_to_verdict(s: Sign) -> SignVerdict {
    match s {
        Sign::Positive => SignVerdict::Positive,
        Sign::Negative => SignVerdict::Negative,
        Sign::Zero => SignVerdict::Zero,
    }
}

// Sample magnitudes for each coordinate; combined with quadrant signs this
// is the 36-point grid {+-1/2, +-1, +-2} x {+-1/2, +-1, +-2}.
fn sample_magnitudes() -> [Rational; 3] {
    [
        Rational::new(1, 2).unwrap(),
        Rational::integer(1),
        Rational::integer(2),
    ]
}

fn sampled_verdict(d: &BiPoly, q: Quadrant) -> SignVerdict {
    let mags = sample_magnitudes();
    let mut seen_pos = false;
    let mut seen_neg = false;
    let mut seen_zero = false;
    for mx in &mags {
        for my in &mags {
            let x = if q.x_negative() { -mx } else { mx.clone() };
            let y = if q.y_negative() { -my } else { my.clone() };
            match d.eval(&x, &y).sign() {
                Sign::Positive => seen_pos = true,
                Sign::Negative => seen_neg = true,
                Sign::Zero => seen_zero = true,
            }
        }
    }
    match (seen_pos, seen_neg, seen_zero) {
        (true, false, false) => SignVerdict::Positive,
        (false, true, false) => SignVerdict::Negative,
        (false, false, true) => SignVerdict::Unknown,
        _ => SignVerdict::Mixed,
    }
}

/// Decides the sign of `d` on each open quadrant.
///
/// Two conclusive fast paths: a single monomial (coefficient sign times
/// exponent parity) and the all-even-exponents uniform-sign case. Everything
/// else falls back to grid sampling, which is reported as non-conclusive.
pub fn sign_summary(d: &BiPoly) -> SignSummary {
    if d.is_zero() {
        return SignSummary {
            quadrants: [SignVerdict::Zero; 4],
            method: SignMethod::EvenPowersUniformSign,
            conclusive: true,
        };
    }
    if let Some((m, coeff)) = d.as_monomial() {
        let quadrants =
            Quadrant::ALL.map(|q| sign_to_verdict(monomial_quadrant_sign(coeff, &m, q)));
        return SignSummary {
            quadrants,
            method: SignMethod::MonomialParity,
            conclusive: true,
        };
    }
    let all_even = d
        .terms()
        .all(|(m, _)| m.deg1 % 2 == 0 && m.deg2 % 2 == 0);
    if all_even {
        let first_sign = d.terms().next().map(|(_, c)| c.sign()).unwrap();
        if d.terms().all(|(_, c)| c.sign() == first_sign) {
            return SignSummary {
                quadrants: [sign_to_verdict(first_sign); 4],
                method: SignMethod::EvenPowersUniformSign,
                conclusive: true,
            };
        }
    }
    SignSummary {
        quadrants: Quadrant::ALL.map(|q| sampled_verdict(d, q)),
        method: SignMethod::Sampling,
        conclusive: false,
    }
}

/// Discriminant, sign summary, and per-quadrant type verdicts for a triple.
/// An all-zero triple gets an explicit degenerate verdict, never parabolic.
pub fn analyze_triple(t: &PrincipalTriple) -> TripleAnalysis {
    let degenerate = t.is_zero();
    let d = discriminant(t);
    let signs = sign_summary(&d);
    let types = if degenerate {
        [TypeVerdict::Degenerate; 4]
    } else {
        signs.quadrants.map(TypeVerdict::from_sign)
    };
    TripleAnalysis {
        triple: t.clone(),
        degenerate,
        discriminant: d,
        signs,
        types,
    }
}

/// End-to-end classification: convolve the chain into the principal part,
/// analyze both the original and the convolved equation, and record whether
/// their per-quadrant verdicts agree. Agreement is reported, never enforced.
pub fn classify_equation(pde: &SecondOrderPde, chain: &KernelChain) -> ClassificationReport {
    let original = analyze_triple(&pde.principal());
    let convolved = analyze_triple(&convolved_principal(pde, chain));
    let agreement = if convolved.degenerate {
        None
    } else {
        Some(original.types == convolved.types)
    };
    ClassificationReport {
        original,
        convolved,
        agreement,
    }
}

/// Error from [`parity_predict_wave`] on inputs outside the wave form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WaveFormError {
    /// The named part is not a single monomial.
    NonMonomial(&'static str),
    /// The named part's coefficient is not strictly positive.
    NonPositive(&'static str),
}

impl fmt::Display for WaveFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WaveFormError::NonMonomial(part) => {
                write!(f, "unsupported form: {} must be a single monomial", part)
            }
            WaveFormError::NonPositive(part) => write!(
                f,
                "unsupported form: {} must have a positive coefficient",
                part
            ),
        }
    }
}

impl core::error::Error for WaveFormError {}

/// The four parity cases of the wave-family classification table.
///
/// A case is decided by three parities: the total degree `i_r + j_r` of each
/// kernel (all kernels must share one parity), the total degree of the `u_tt`
/// coefficient, and the total degree of the `u_xx` coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityCase {
    /// Kernel degrees odd, both target degrees odd.
    Case1,
    /// Kernel degrees even, both target degrees even.
    Case2,
    /// Kernel degrees odd, both target degrees even.
    Case3,
    /// Kernel degrees even, both target degrees odd.
    Case4,
}

impl ParityCase {
    pub fn number(self) -> u8 {
        match self {
            ParityCase::Case1 => 1,
            ParityCase::Case2 => 2,
            ParityCase::Case3 => 3,
            ParityCase::Case4 => 4,
        }
    }
}

/// Result of the wave-family parity predictor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WaveParityPrediction {
    /// Matched table case, if any combination matched.
    pub case: Option<ParityCase>,
    /// Predicted type (hyperbolic for every matched case). This is a
    /// heuristic; callers must cross-check against [`sign_summary`] of the
    /// actual discriminant, which can contradict it off the first quadrant.
    pub predicted: Option<Classification>,
}

fn single_positive_monomial(p: &BiPoly, part: &'static str) -> Result<Monomial, WaveFormError> {
    let (m, coeff) = p.as_monomial().ok_or(WaveFormError::NonMonomial(part))?;
    if !coeff.is_positive() {
        return Err(WaveFormError::NonPositive(part));
    }
    Ok(m)
}

/// Parity-case predictor for the wave form `a u_tt - c u_xx` with `b = 0`:
/// `a` and `c` are the coefficients as written (both positive; the minus is
/// part of the equation), and `kernels` are the chain monomials.
pub fn parity_predict_wave(
    a: &BiPoly,
    c: &BiPoly,
    kernels: &[BiPoly],
) -> Result<WaveParityPrediction, WaveFormError> {
    let a_mono = single_positive_monomial(a, "the u_tt coefficient")?;
    let c_mono = single_positive_monomial(c, "the u_xx coefficient")?;
    let kernel_monos = kernels
        .iter()
        .map(|k| single_positive_monomial(k, "every kernel"))
        .collect::<Result<Vec<_>, _>>()?;

    // Uniform parity of the kernel total degrees; an empty chain counts as
    // even (its degree sum is zero).
    let mut parities = kernel_monos.iter().map(|m| m.total_degree() % 2 == 1);
    let kernel_parity = match parities.next() {
        None => Some(false),
        Some(first) => parities.all(|p| p == first).then_some(first),
    };
    let a_odd = a_mono.total_degree() % 2 == 1;
    let c_odd = c_mono.total_degree() % 2 == 1;

    let case = match (kernel_parity, a_odd, c_odd) {
        (Some(true), true, true) => Some(ParityCase::Case1),
        (Some(false), false, false) => Some(ParityCase::Case2),
        (Some(true), false, false) => Some(ParityCase::Case3),
        (Some(false), true, true) => Some(ParityCase::Case4),
        _ => None,
    };
    Ok(WaveParityPrediction {
        case,
        predicted: case.map(|_| Classification::Hyperbolic),
    })
}
