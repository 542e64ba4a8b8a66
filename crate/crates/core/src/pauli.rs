//! Three-qubit Pauli observables as points of GF(2)^6.
//!
//! A word `G1 G2 G3` is stored as six bits `(x1, …, x6)` with letter `Gj`
//! carried by the pair `(xj, xj+3)`:
//!
//! | letter | pair  |
//! |--------|-------|
//! | `I`    | (0,0) |
//! | `X`    | (0,1) |
//! | `Y`    | (1,1) |
//! | `Z`    | (1,0) |
//!
//! The six bits read as a binary number (`x1` most significant) give the
//! point id `1..=63`, which is also the total order used for every
//! canonical form in this crate.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Number of qubits handled by this crate.
pub const QUBITS: usize = 3;

/// Number of non-identity three-qubit observables.
pub const OBSERVABLE_COUNT: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("invalid Pauli letter {0:?} (expected one of I, X, Y, Z)")]
    InvalidLetter(char),
    #[error("Pauli word must have exactly 3 letters, got {0}")]
    BadLength(usize),
    #[error("III is the identity and is not an observable")]
    IdentityExcluded,
    #[error("point id {0} is outside 1..=63")]
    PointOutOfRange(u8),
    #[error("context is empty")]
    EmptyContext,
    #[error("observable {0} appears more than once in the context")]
    DuplicateObservable(Observable),
    #[error("{0} and {1} do not commute")]
    NotMutuallyCommuting(Observable, Observable),
    #[error("product of the context is not ±identity")]
    NotClosed,
}

/// Single-qubit Pauli letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    /// The `(x_j, x_{j+3})` bit pair of this letter.
    pub const fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (false, true),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (true, false),
        }
    }

    pub const fn from_bits(high: bool, low: bool) -> Self {
        match (high, low) {
            (false, false) => PauliLetter::I,
            (false, true) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (true, false) => PauliLetter::Z,
        }
    }

    pub fn from_char(c: char) -> Result<Self, PauliError> {
        match c {
            'I' => Ok(PauliLetter::I),
            'X' => Ok(PauliLetter::X),
            'Y' => Ok(PauliLetter::Y),
            'Z' => Ok(PauliLetter::Z),
            other => Err(PauliError::InvalidLetter(other)),
        }
    }

    pub const fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    const fn index(self) -> usize {
        match self {
            PauliLetter::I => 0,
            PauliLetter::X => 1,
            PauliLetter::Y => 2,
            PauliLetter::Z => 3,
        }
    }

    /// Phase exponent `k` with `self · other = i^k · (self ⊕ other)`.
    pub const fn product_phase(self, other: PauliLetter) -> u8 {
        // rows/cols in I, X, Y, Z order; XY = iZ, YZ = iX, ZX = iY
        const TABLE: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 0, 1, 3], [0, 3, 0, 1], [0, 1, 3, 0]];
        TABLE[self.index()][other.index()]
    }
}

impl fmt::Display for PauliLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Count of identity letters: two for `A`, one for `B`, none for `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ObservableType {
    A,
    B,
    C,
}

impl fmt::Display for ObservableType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            ObservableType::A => "A",
            ObservableType::B => "B",
            ObservableType::C => "C",
        };
        f.write_str(c)
    }
}

/// A non-identity three-qubit Pauli word, i.e. a point of W(5,2).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Observable(u8);

impl Observable {
    /// Builds an observable from its point id (`1..=63`).
    pub fn from_id(id: u8) -> Result<Self, PauliError> {
        if id == 0 || id as usize > OBSERVABLE_COUNT {
            return Err(PauliError::PointOutOfRange(id));
        }
        Ok(Observable(id))
    }

    /// Builds an observable from the coordinate vector `(x1, …, x6)`.
    pub fn from_coords(coords: [bool; 6]) -> Result<Self, PauliError> {
        let id = coords.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
        if id == 0 {
            return Err(PauliError::IdentityExcluded);
        }
        Ok(Observable(id))
    }

    pub fn from_letters(letters: [PauliLetter; QUBITS]) -> Result<Self, PauliError> {
        let mut coords = [false; 6];
        for (j, letter) in letters.iter().enumerate() {
            let (high, low) = letter.bits();
            coords[j] = high;
            coords[j + QUBITS] = low;
        }
        Self::from_coords(coords)
    }

    /// All 63 observables in point-id order.
    pub fn all() -> impl Iterator<Item = Observable> + Clone {
        (1..=OBSERVABLE_COUNT as u8).map(Observable)
    }

    pub const fn id(self) -> u8 {
        self.0
    }

    /// Bit `1 << id` of this point, for point-set masks.
    pub const fn mask(self) -> u64 {
        1u64 << self.0
    }

    pub fn coords(self) -> [bool; 6] {
        std::array::from_fn(|i| (self.0 >> (5 - i)) & 1 == 1)
    }

    pub fn letter(self, qubit: usize) -> PauliLetter {
        assert!(qubit < QUBITS);
        let high = (self.0 >> (5 - qubit)) & 1 == 1;
        let low = (self.0 >> (2 - qubit)) & 1 == 1;
        PauliLetter::from_bits(high, low)
    }

    pub fn letters(self) -> [PauliLetter; QUBITS] {
        std::array::from_fn(|j| self.letter(j))
    }

    pub fn observable_type(self) -> ObservableType {
        match self.letters().iter().filter(|&&l| l == PauliLetter::I).count() {
            2 => ObservableType::A,
            1 => ObservableType::B,
            0 => ObservableType::C,
            _ => unreachable!("identity is not an observable"),
        }
    }

    /// Coordinate-wise sum, `None` when the two observables coincide.
    pub fn xor(self, other: Observable) -> Option<Observable> {
        let id = self.0 ^ other.0;
        (id != 0).then_some(Observable(id))
    }

    /// Renders the coordinate vector as `(x1,…,x6)`.
    pub fn coords_string(self) -> String {
        let parts: Vec<&str> = self.coords().iter().map(|&b| if b { "1" } else { "0" }).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in self.letters() {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Observable {
    type Err = PauliError;

    fn from_str(word: &str) -> Result<Self, Self::Err> {
        parse_observable(word)
    }
}

impl Serialize for Observable {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Observable {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let word = String::deserialize(deserializer)?;
        word.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a three-letter uppercase Pauli word such as `"XYZ"`.
pub fn parse_observable(word: &str) -> Result<Observable, PauliError> {
    let chars: Vec<char> = word.chars().collect();
    if chars.len() != QUBITS {
        return Err(PauliError::BadLength(chars.len()));
    }
    let mut letters = [PauliLetter::I; QUBITS];
    for (slot, &c) in letters.iter_mut().zip(&chars) {
        *slot = PauliLetter::from_char(c)?;
    }
    Observable::from_letters(letters)
}

pub fn format_observable(o: Observable) -> String {
    o.to_string()
}

/// The symplectic form `σ(a, b) = Σ_j a_j b_{j+3} + a_{j+3} b_j` over GF(2).
pub fn symplectic_form(a: Observable, b: Observable) -> bool {
    let (a_hi, a_lo) = (a.0 >> 3, a.0 & 0b111);
    let (b_hi, b_lo) = (b.0 >> 3, b.0 & 0b111);
    ((a_hi & b_lo) ^ (a_lo & b_hi)).count_ones() & 1 == 1
}

pub fn commutes(a: Observable, b: Observable) -> bool {
    !symplectic_form(a, b)
}

/// A power `i^k` of the imaginary unit, `k` taken mod 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Phase(u8);

impl Phase {
    pub const ONE: Phase = Phase(0);
    pub const I: Phase = Phase(1);
    pub const MINUS_ONE: Phase = Phase(2);
    pub const MINUS_I: Phase = Phase(3);

    pub const fn new(exponent: u8) -> Self {
        Phase(exponent % 4)
    }

    pub const fn exponent(self) -> u8 {
        self.0
    }

    pub const fn mul(self, other: Phase) -> Phase {
        Phase((self.0 + other.0) % 4)
    }

    /// `Some` for the real phases `±1`.
    pub const fn sign(self) -> Option<Sign> {
        match self.0 {
            0 => Some(Sign::Plus),
            2 => Some(Sign::Minus),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const fn is_negative(self) -> bool {
        matches!(self, Sign::Minus)
    }

    pub const fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.value())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = i64::deserialize(deserializer)?;
        Sign::from_value(v).ok_or_else(|| serde::de::Error::custom(format!("sign must be 1 or -1, got {v}")))
    }
}

/// Raw bits of a possibly-identity product: `0` stands for `III`.
pub type Coords = u8;

/// Multiplies two Pauli words slot by slot.
///
/// Returns the phase and the coordinate vector of `a · b`; the vector is
/// zero exactly when `a == b`.
pub fn multiply(a: Observable, b: Observable) -> (Phase, Coords) {
    multiply_raw(a.0, b.0)
}

fn multiply_raw(a: Coords, b: Coords) -> (Phase, Coords) {
    let mut k = 0u8;
    for q in 0..QUBITS {
        k += letter_at(a, q).product_phase(letter_at(b, q));
    }
    (Phase::new(k), a ^ b)
}

fn letter_at(raw: Coords, qubit: usize) -> PauliLetter {
    PauliLetter::from_bits((raw >> (5 - qubit)) & 1 == 1, (raw >> (2 - qubit)) & 1 == 1)
}

/// Phase and coordinates of the ordered product `o_1 · o_2 ⋯ o_n`.
pub fn product(obs: &[Observable]) -> (Phase, Coords) {
    obs.iter().fold((Phase::ONE, 0), |(phase, acc), o| {
        let (k, next) = multiply_raw(acc, o.0);
        (phase.mul(k), next)
    })
}

/// Sign of a context: `+1` if the observables multiply to `+III`, `-1` for `-III`.
///
/// The product is taken left to right; for pairwise commuting inputs the
/// order does not matter.
pub fn context_sign(obs: &[Observable]) -> Result<Sign, PauliError> {
    if obs.is_empty() {
        return Err(PauliError::EmptyContext);
    }
    let mut seen = 0u64;
    for &o in obs {
        if seen & o.mask() != 0 {
            return Err(PauliError::DuplicateObservable(o));
        }
        seen |= o.mask();
    }
    for (i, &a) in obs.iter().enumerate() {
        for &b in &obs[i + 1..] {
            if !commutes(a, b) {
                return Err(PauliError::NotMutuallyCommuting(a, b));
            }
        }
    }
    let (phase, coords) = product(obs);
    if coords != 0 {
        return Err(PauliError::NotClosed);
    }
    debug_assert_eq!(
        phase,
        product(&obs.iter().rev().copied().collect::<Vec<_>>()).0,
        "commuting product depends on order"
    );
    // commuting Hermitian factors give a Hermitian product, so the phase is real
    phase.sign().ok_or(PauliError::NotClosed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn o(word: &str) -> Observable {
        word.parse().unwrap()
    }

    #[test]
    fn letter_bits_are_a_bijection() {
        let mut pairs: Vec<_> = PauliLetter::ALL.iter().map(|l| l.bits()).collect();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 4);
        for l in PauliLetter::ALL {
            let (h, lo) = l.bits();
            assert_eq!(PauliLetter::from_bits(h, lo), l);
        }
    }

    #[test]
    fn parse_examples() {
        assert_eq!(o("XYZ").coords(), [false, true, true, true, true, false]);
        assert_eq!(o("ZII").coords(), [true, false, false, false, false, false]);
        assert_eq!(parse_observable("III"), Err(PauliError::IdentityExcluded));
        assert_eq!(parse_observable("QXI"), Err(PauliError::InvalidLetter('Q')));
        assert_eq!(parse_observable("xyz"), Err(PauliError::InvalidLetter('x')));
        assert_eq!(parse_observable("XY"), Err(PauliError::BadLength(2)));
        assert_eq!(parse_observable("XYZI"), Err(PauliError::BadLength(4)));
    }

    #[test]
    fn format_examples() {
        let xyz = Observable::from_coords([false, true, true, true, true, false]).unwrap();
        assert_eq!(format_observable(xyz), "XYZ");
        let zii = Observable::from_coords([true, false, false, false, false, false]).unwrap();
        assert_eq!(format_observable(zii), "ZII");
        assert_eq!(zii.id(), 32);
    }

    #[test]
    fn round_trip_all() {
        for ob in Observable::all() {
            assert_eq!(parse_observable(&format_observable(ob)).unwrap(), ob);
        }
        assert_eq!(Observable::all().count(), 63);
    }

    #[test]
    fn symplectic_examples() {
        assert!(symplectic_form(o("XII"), o("ZII")));
        assert!(!symplectic_form(o("XXI"), o("YYI")));
        for a in Observable::all() {
            assert!(!symplectic_form(a, a));
        }
    }

    #[test]
    fn commutation_examples() {
        assert!(commutes(o("XII"), o("IYZ")));
        assert!(!commutes(o("XII"), o("ZII")));
        assert!(commutes(o("XXI"), o("YYI")));
    }

    #[test]
    fn type_examples_and_census() {
        assert_eq!(o("XII").observable_type(), ObservableType::A);
        assert_eq!(o("XYI").observable_type(), ObservableType::B);
        assert_eq!(o("XYZ").observable_type(), ObservableType::C);
        let count = |t| Observable::all().filter(|x| x.observable_type() == t).count();
        assert_eq!((count(ObservableType::A), count(ObservableType::B), count(ObservableType::C)), (9, 27, 27));
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(multiply(o("XII"), o("YII")), (Phase::I, o("ZII").id()));
        assert_eq!(multiply(o("XYZ"), o("XYZ")), (Phase::ONE, 0));
        assert_eq!(multiply(o("XXI"), o("YYI")), (Phase::MINUS_ONE, o("ZZI").id()));
    }

    #[test]
    fn context_sign_examples() {
        let ctx = |ws: &[&str]| ws.iter().map(|w| o(w)).collect::<Vec<_>>();
        assert_eq!(context_sign(&ctx(&["XII", "IXI", "XXI"])), Ok(Sign::Plus));
        assert_eq!(context_sign(&ctx(&["XXI", "YYI", "ZZI"])), Ok(Sign::Minus));
        assert_eq!(context_sign(&ctx(&["XYY", "YXY", "YYX", "XXX"])), Ok(Sign::Minus));
        assert!(matches!(context_sign(&ctx(&["XII", "YII", "ZII"])), Err(PauliError::NotMutuallyCommuting(_, _))));
        assert_eq!(context_sign(&ctx(&["XII", "IXI"])), Err(PauliError::NotClosed));
        assert!(matches!(context_sign(&ctx(&["XII", "XII"])), Err(PauliError::DuplicateObservable(_))));
        assert_eq!(context_sign(&[]), Err(PauliError::EmptyContext));
    }

    fn any_observable() -> impl Strategy<Value = Observable> {
        (1u8..=63).prop_map(|id| Observable::from_id(id).unwrap())
    }

    proptest! {
        #[test]
        fn swapped_product_phase_differs_by_commutator(a in any_observable(), b in any_observable()) {
            let (ab, c1) = multiply(a, b);
            let (ba, c2) = multiply(b, a);
            prop_assert_eq!(c1, c2);
            let expected = if symplectic_form(a, b) { ab.mul(Phase::MINUS_ONE) } else { ab };
            prop_assert_eq!(ba, expected);
        }

        #[test]
        fn symplectic_form_is_bilinear(a in any_observable(), b in any_observable(), c in any_observable()) {
            if let Some(bc) = b.xor(c) {
                prop_assert_eq!(symplectic_form(a, bc), symplectic_form(a, b) ^ symplectic_form(a, c));
            }
            prop_assert_eq!(symplectic_form(a, b), symplectic_form(b, a));
        }

        #[test]
        fn context_sign_is_permutation_invariant(a in any_observable(), b in any_observable(), c in any_observable()) {
            // a four-element context {a, b, c, a^b^c} when everything commutes
            let Some(ab) = a.xor(b) else { return Ok(()) };
            let Some(dd) = ab.xor(c) else { return Ok(()) };
            let ctx = [a, b, c, dd];
            if let Ok(s) = context_sign(&ctx) {
                let perms = [[3, 2, 1, 0], [1, 0, 3, 2], [2, 3, 0, 1], [0, 2, 3, 1]];
                for p in perms {
                    let permuted: Vec<_> = p.iter().map(|&i| ctx[i]).collect();
                    prop_assert_eq!(context_sign(&permuted), Ok(s));
                }
            }
        }
    }
}
