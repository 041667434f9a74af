use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SednError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Region {
    /// Closed forms for m ≤ n ≤ p ≤ m+n.
    T11,
    /// Closed forms for m ≥ 2, p ≥ m+n.
    Main,
    /// K(1,n,p), K(2,2,p) and the two isolated exceptions.
    Special,
}

macro_rules! case_tags {
    ($($variant:ident => $name:literal, $region:ident;)*) => {
        /// Which closed form (and, for constructions, which quota pattern) applies.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CaseTag {
            $($variant,)*
        }

        impl CaseTag {
            pub const ALL: &'static [CaseTag] = &[$(CaseTag::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CaseTag::$variant => $name,)*
                }
            }

            pub fn region(self) -> Region {
                match self {
                    $(CaseTag::$variant => Region::$region,)*
                }
            }
        }

        impl FromStr for CaseTag {
            type Err = SednError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($name => Ok(CaseTag::$variant),)*
                    _ => Err(SednError::Parse(format!("unknown case tag {s:?}"))),
                }
            }
        }
    };
}

case_tags! {
    T11A1 => "T11.A1", T11;
    T11A2 => "T11.A2", T11;
    T11B1 => "T11.B1", T11;
    T11B2 => "T11.B2", T11;
    T11C1 => "T11.C1", T11;
    T11C2 => "T11.C2", T11;
    T11D1 => "T11.D1", T11;
    T11D2 => "T11.D2", T11;
    T11E1 => "T11.E1", T11;
    T11E2 => "T11.E2", T11;
    MainA => "MAIN.A", Main;
    MainB => "MAIN.B", Main;
    MainC1 => "MAIN.C1", Main;
    MainC2 => "MAIN.C2", Main;
    MainD1 => "MAIN.D1", Main;
    MainD2 => "MAIN.D2", Main;
    MainE1 => "MAIN.E1", Main;
    MainE2 => "MAIN.E2", Main;
    MainF1 => "MAIN.F1", Main;
    MainF2 => "MAIN.F2", Main;
    MainG1 => "MAIN.G1", Main;
    MainG2 => "MAIN.G2", Main;
    MainH1 => "MAIN.H1", Main;
    MainH2 => "MAIN.H2", Main;
    K1np1 => "S.K1np.1", Special;
    K1np2 => "S.K1np.2", Special;
    K1np3 => "S.K1np.3", Special;
    K1np4 => "S.K1np.4", Special;
    K22p => "S.K22p", Special;
    K111 => "S.K111", Special;
    K235 => "S.K235", Special;
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CaseTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse_back() {
        for &tag in CaseTag::ALL {
            assert_eq!(tag.as_str().parse::<CaseTag>().unwrap(), tag);
        }
        assert_eq!(CaseTag::ALL.len(), 31);
        assert!("MAIN.Z".parse::<CaseTag>().is_err());
    }
}
