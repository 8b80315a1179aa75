use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The nine orbits of non-degenerate pencils (Levy's nomenclature).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PencilOrbit {
    I,
    Ia,
    Ib,
    II,
    IIa,
    III,
    IIIa,
    IV,
    V,
}

impl PencilOrbit {
    pub const ALL: [PencilOrbit; 9] = [
        PencilOrbit::I,
        PencilOrbit::Ia,
        PencilOrbit::Ib,
        PencilOrbit::II,
        PencilOrbit::IIa,
        PencilOrbit::III,
        PencilOrbit::IIIa,
        PencilOrbit::IV,
        PencilOrbit::V,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PencilOrbit::I => "I",
            PencilOrbit::Ia => "Ia",
            PencilOrbit::Ib => "Ib",
            PencilOrbit::II => "II",
            PencilOrbit::IIa => "IIa",
            PencilOrbit::III => "III",
            PencilOrbit::IIIa => "IIIa",
            PencilOrbit::IV => "IV",
            PencilOrbit::V => "V",
        }
    }

    /// Multiplicities of the real base points, decreasing.
    pub fn real_base_points(self) -> &'static [usize] {
        match self {
            PencilOrbit::I => &[1, 1, 1, 1],
            PencilOrbit::Ia | PencilOrbit::IIIa => &[],
            PencilOrbit::Ib => &[1, 1],
            PencilOrbit::II => &[2, 1, 1],
            PencilOrbit::IIa => &[2],
            PencilOrbit::III => &[2, 2],
            PencilOrbit::IV => &[3, 1],
            PencilOrbit::V => &[4],
        }
    }

    /// Multiplicities of the imaginary base points, decreasing.
    pub fn imaginary_base_points(self) -> &'static [usize] {
        match self {
            PencilOrbit::Ia => &[1, 1, 1, 1],
            PencilOrbit::Ib | PencilOrbit::IIa => &[1, 1],
            PencilOrbit::IIIa => &[2, 2],
            _ => &[],
        }
    }

    /// Whether the orbit carries both an N and an S class of pairs.
    pub fn has_s_class(self) -> bool {
        matches!(
            self,
            PencilOrbit::I | PencilOrbit::Ia | PencilOrbit::II | PencilOrbit::IIa | PencilOrbit::III
        )
    }
}

/// The fourteen rigid isotopy classes of pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairClass {
    IN,
    IS,
    IaN,
    IaS,
    IbN,
    IIN,
    IIS,
    IIaN,
    IIaS,
    IIIN,
    IIIS,
    IIIaN,
    IVN,
    VN,
}

impl PairClass {
    pub const ALL: [PairClass; 14] = [
        PairClass::IN,
        PairClass::IS,
        PairClass::IaN,
        PairClass::IaS,
        PairClass::IbN,
        PairClass::IIN,
        PairClass::IIS,
        PairClass::IIaN,
        PairClass::IIaS,
        PairClass::IIIN,
        PairClass::IIIS,
        PairClass::IIIaN,
        PairClass::IVN,
        PairClass::VN,
    ];

    /// `n` selects the N class, otherwise S. Orbits without an S class
    /// always give N.
    pub fn from_orbit(orbit: PencilOrbit, n: bool) -> PairClass {
        use PairClass::*;
        match (orbit, n || !orbit.has_s_class()) {
            (PencilOrbit::I, true) => IN,
            (PencilOrbit::I, false) => IS,
            (PencilOrbit::Ia, true) => IaN,
            (PencilOrbit::Ia, false) => IaS,
            (PencilOrbit::Ib, _) => IbN,
            (PencilOrbit::II, true) => IIN,
            (PencilOrbit::II, false) => IIS,
            (PencilOrbit::IIa, true) => IIaN,
            (PencilOrbit::IIa, false) => IIaS,
            (PencilOrbit::III, true) => IIIN,
            (PencilOrbit::III, false) => IIIS,
            (PencilOrbit::IIIa, _) => IIIaN,
            (PencilOrbit::IV, _) => IVN,
            (PencilOrbit::V, _) => VN,
        }
    }

    pub fn orbit(self) -> PencilOrbit {
        use PairClass::*;
        match self {
            IN | IS => PencilOrbit::I,
            IaN | IaS => PencilOrbit::Ia,
            IbN => PencilOrbit::Ib,
            IIN | IIS => PencilOrbit::II,
            IIaN | IIaS => PencilOrbit::IIa,
            IIIN | IIIS => PencilOrbit::III,
            IIIaN => PencilOrbit::IIIa,
            IVN => PencilOrbit::IV,
            VN => PencilOrbit::V,
        }
    }

    pub fn is_n(self) -> bool {
        use PairClass::*;
        !matches!(self, IS | IaS | IIS | IIaS | IIIS)
    }

    /// Classes whose couples split according to which conic is inside.
    pub fn splits(self) -> bool {
        use PairClass::*;
        matches!(self, IaN | IIN | IIaN | IIIN | IIIaN | VN)
    }

    pub fn name(self) -> &'static str {
        use PairClass::*;
        match self {
            IN => "IN",
            IS => "IS",
            IaN => "IaN",
            IaS => "IaS",
            IbN => "IbN",
            IIN => "IIN",
            IIS => "IIS",
            IIaN => "IIaN",
            IIaS => "IIaS",
            IIIN => "IIIN",
            IIIS => "IIIS",
            IIIaN => "IIIaN",
            IVN => "IVN",
            VN => "VN",
        }
    }

    /// Korchagin–Weinberg code of the quartic `fg = 0`.
    pub fn quartic_code(self) -> &'static str {
        use PairClass::*;
        match self {
            IN => "17p",
            IS => "16p",
            IaS => "22p",
            IIS => "34p",
            IIaS => "44p",
            IIIS => "38p",
            IaN | IIIaN => "21p",
            IIN => "36p",
            IIaN | VN => "43p",
            IbN | IVN | IIIN => "18p",
        }
    }
}

/// Which conic lies inside the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Inside {
    FInsideG,
    GInsideF,
}

impl Inside {
    pub fn toggled(self) -> Inside {
        match self {
            Inside::FInsideG => Inside::GInsideF,
            Inside::GInsideF => Inside::FInsideG,
        }
    }

    pub fn suffix(self) -> &'static str {
        match self {
            Inside::FInsideG => "f-in",
            Inside::GInsideF => "g-in",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Inside::FInsideG => "f_inside_g",
            Inside::GInsideF => "g_inside_f",
        }
    }
}

/// A class of ordered couples: the pair class plus, for splitting classes,
/// which conic is inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoupleClass {
    pub pair: PairClass,
    pub inside: Option<Inside>,
}

impl CoupleClass {
    pub fn new(pair: PairClass, inside: Option<Inside>) -> Self {
        debug_assert_eq!(pair.splits(), inside.is_some());
        CoupleClass { pair, inside }
    }

    /// All twenty couple classes.
    pub fn all() -> Vec<CoupleClass> {
        let mut out = Vec::new();
        for p in PairClass::ALL {
            if p.splits() {
                out.push(CoupleClass::new(p, Some(Inside::FInsideG)));
                out.push(CoupleClass::new(p, Some(Inside::GInsideF)));
            } else {
                out.push(CoupleClass::new(p, None));
            }
        }
        out
    }

    /// The class of `(g, f)`.
    pub fn swapped(self) -> CoupleClass {
        CoupleClass { pair: self.pair, inside: self.inside.map(Inside::toggled) }
    }

    pub fn ambient(self) -> AmbientClass {
        use PairClass::*;
        let inside = self.inside.unwrap_or(Inside::FInsideG);
        match self.pair {
            IN => AmbientClass::IN,
            IS => AmbientClass::IS,
            IaS => AmbientClass::IaS,
            IbN | IVN => AmbientClass::IbNIVN,
            IIS => AmbientClass::IIS,
            IIaS => AmbientClass::IIaS,
            IIIS => AmbientClass::IIIS,
            IaN | IIIaN => AmbientClass::IaNIIIaN(inside),
            IIN => AmbientClass::IIN(inside),
            IIaN | VN => AmbientClass::IIaNVN(inside),
            IIIN => AmbientClass::IIIN(inside),
        }
    }
}

/// The fifteen classes of couples up to ambient isotopy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AmbientClass {
    IN,
    IS,
    IaS,
    IbNIVN,
    IIS,
    IIaS,
    IIIS,
    IaNIIIaN(Inside),
    IIN(Inside),
    IIaNVN(Inside),
    IIIN(Inside),
}

impl AmbientClass {
    pub fn base_name(self) -> &'static str {
        match self {
            AmbientClass::IN => "IN",
            AmbientClass::IS => "IS",
            AmbientClass::IaS => "IaS",
            AmbientClass::IbNIVN => "IbN∪IVN",
            AmbientClass::IIS => "IIS",
            AmbientClass::IIaS => "IIaS",
            AmbientClass::IIIS => "IIIS",
            AmbientClass::IaNIIIaN(_) => "IaN∪IIIaN",
            AmbientClass::IIN(_) => "IIN",
            AmbientClass::IIaNVN(_) => "IIaN∪VN",
            AmbientClass::IIIN(_) => "IIIN",
        }
    }

    pub fn inside(self) -> Option<Inside> {
        match self {
            AmbientClass::IaNIIIaN(i)
            | AmbientClass::IIN(i)
            | AmbientClass::IIaNVN(i)
            | AmbientClass::IIIN(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for PencilOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for CoupleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inside {
            Some(i) => write!(f, "{}/{}", self.pair, i.suffix()),
            None => write!(f, "{}", self.pair),
        }
    }
}

impl fmt::Display for AmbientClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inside() {
            Some(i) => write!(f, "{}/{}", self.base_name(), i.suffix()),
            None => f.write_str(self.base_name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown class label {0:?}")]
pub struct LabelError(pub String);

impl FromStr for PencilOrbit {
    type Err = LabelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PencilOrbit::ALL
            .into_iter()
            .find(|o| o.name() == s)
            .ok_or_else(|| LabelError(s.to_string()))
    }
}

impl FromStr for PairClass {
    type Err = LabelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PairClass::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| LabelError(s.to_string()))
    }
}

impl FromStr for CoupleClass {
    type Err = LabelError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CoupleClass::all()
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| LabelError(s.to_string()))
    }
}
