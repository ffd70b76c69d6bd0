//! `{"children":[{"color":1,"tree":{...}}, ...]}`; uncolored trees omit
//! `color`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BicolorPlanarTree, Color, PlanarTree};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeJson {
    #[serde(default)]
    pub children: Vec<EdgeJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Color>,
    pub tree: TreeJson,
}

impl TreeJson {
    pub fn has_colors(&self) -> bool {
        self.children
            .iter()
            .any(|e| e.color.is_some() || e.tree.has_colors())
    }
}

impl From<&PlanarTree> for TreeJson {
    fn from(t: &PlanarTree) -> Self {
        TreeJson {
            children: t
                .children()
                .iter()
                .map(|c| EdgeJson {
                    color: None,
                    tree: c.into(),
                })
                .collect(),
        }
    }
}

impl From<&BicolorPlanarTree> for TreeJson {
    fn from(t: &BicolorPlanarTree) -> Self {
        TreeJson {
            children: t
                .children()
                .iter()
                .map(|(c, sub)| EdgeJson {
                    color: Some(*c),
                    tree: sub.into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&TreeJson> for PlanarTree {
    type Error = Error;

    fn try_from(j: &TreeJson) -> Result<Self> {
        let children = j
            .children
            .iter()
            .map(|e| match e.color {
                Some(_) => Err(Error::Parse("uncolored tree carries a color".into())),
                None => PlanarTree::try_from(&e.tree),
            })
            .collect::<Result<_>>()?;
        Ok(PlanarTree::new(children))
    }
}

impl TryFrom<&TreeJson> for BicolorPlanarTree {
    type Error = Error;

    fn try_from(j: &TreeJson) -> Result<Self> {
        let children = j
            .children
            .iter()
            .map(|e| {
                let c = e
                    .color
                    .ok_or_else(|| Error::Parse("bicolor edge without a color".into()))?;
                Ok((c, BicolorPlanarTree::try_from(&e.tree)?))
            })
            .collect::<Result<_>>()?;
        BicolorPlanarTree::new(children)
    }
}

impl Serialize for PlanarTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TreeJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlanarTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TreeJson::deserialize(d)?;
        PlanarTree::try_from(&j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for BicolorPlanarTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TreeJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for BicolorPlanarTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TreeJson::deserialize(d)?;
        BicolorPlanarTree::try_from(&j).map_err(serde::de::Error::custom)
    }
}
