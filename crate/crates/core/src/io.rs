//! The map JSON file format.
//!
//! ```json
//! {"kind":"map","flags":2,"r0":[1,0],"r1":[1,0],"r2":[1,0]}
//! ```
//!
//! Generator arrays are 0-based image tables. An optional `deck` array
//! records the covering involution of a double cover.

use serde::{Deserialize, Serialize};

use crate::cover::DoubleCover;
use crate::error::{Error, Result};
use crate::flags::{FlagSystem, Kind};
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub kind: Kind,
    pub flags: usize,
    pub r0: Vec<usize>,
    pub r1: Vec<usize>,
    pub r2: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deck: Option<Vec<usize>>,
}

impl MapFile {
    pub fn from_system(fs: &FlagSystem) -> Self {
        let [r0, r1, r2] = fs.generators().clone().map(|g| g.to_vec());
        MapFile {
            kind: fs.kind(),
            flags: fs.flags(),
            r0,
            r1,
            r2,
            deck: None,
        }
    }

    pub fn from_cover(dc: &DoubleCover) -> Self {
        MapFile {
            deck: Some(dc.deck.to_vec()),
            ..Self::from_system(&dc.cover)
        }
    }

    pub fn to_system(&self) -> Result<FlagSystem> {
        for (generator, table) in [&self.r0, &self.r1, &self.r2].into_iter().enumerate() {
            if table.len() != self.flags {
                return Err(Error::FlagCountMismatch {
                    declared: self.flags,
                    generator,
                    found: table.len(),
                });
            }
        }
        FlagSystem::from_tables(
            self.kind,
            [self.r0.clone(), self.r1.clone(), self.r2.clone()],
        )
    }

    pub fn deck(&self) -> Result<Option<Permutation>> {
        self.deck.clone().map(Permutation::from_images).transpose()
    }
}

pub fn parse_map_file(text: &str) -> Result<FlagSystem> {
    let file: MapFile = serde_json::from_str(text)?;
    file.to_system()
}

pub fn serialize_map(fs: &FlagSystem) -> String {
    serde_json::to_string(&MapFile::from_system(fs)).expect("plain data serializes")
}

pub fn serialize_cover(dc: &DoubleCover) -> String {
    serde_json::to_string(&MapFile::from_cover(dc)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flags::Violation;

    #[test]
    fn sphere_file() {
        let fs =
            parse_map_file(r#"{"kind":"map","flags":2,"r0":[1,0],"r1":[1,0],"r2":[1,0]}"#).unwrap();
        assert_eq!(crate::invariants::euler_characteristic(&fs), 2);
        assert_eq!(parse_map_file(&serialize_map(&fs)).unwrap(), fs);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_map_file("{"), Err(Error::MalformedJson(_))));
        let bad = r#"{"kind":"map","flags":3,"r0":[1,2,0],"r1":[0,1,2],"r2":[0,1,2]}"#;
        match parse_map_file(bad) {
            Err(Error::InvalidFlagSystem(report)) => assert!(report
                .violations
                .iter()
                .any(|v| matches!(v, Violation::NonInvolution { generator: 0, .. }))),
            other => panic!("{other:?}"),
        }
        let short = r#"{"kind":"map","flags":3,"r0":[0,1],"r1":[0,1,2],"r2":[0,1,2]}"#;
        assert!(matches!(
            parse_map_file(short),
            Err(Error::FlagCountMismatch { generator: 0, .. })
        ));
    }
}
