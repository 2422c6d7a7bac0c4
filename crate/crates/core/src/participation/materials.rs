//! Interface dielectric layers and material presets.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LayerKind {
    /// Metal–substrate interface (MS).
    MetalSubstrate,
    /// Metal–air interface (MA).
    MetalAir,
    /// Substrate–air interface (SA).
    SubstrateAir,
}

impl LayerKind {
    pub const ALL: [LayerKind; 3] = [
        LayerKind::MetalSubstrate,
        LayerKind::MetalAir,
        LayerKind::SubstrateAir,
    ];

    pub fn short_name(&self) -> &'static str {
        match self {
            LayerKind::MetalSubstrate => "MS",
            LayerKind::MetalAir => "MA",
            LayerKind::SubstrateAir => "SA",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaterialLayer {
    pub kind: LayerKind,
    /// Relative permittivity.
    pub eps_r: f64,
    /// Thickness, nm.
    pub thickness_nm: f64,
    /// Loss tangent.
    pub tan_delta: f64,
}

impl MaterialLayer {
    pub fn thickness_um(&self) -> f64 {
        self.thickness_nm * 1e-3
    }

    pub fn thickness_m(&self) -> f64 {
        self.thickness_nm * 1e-9
    }

    fn validate(&self) -> Result<()> {
        if !(self.eps_r >= 1.0) {
            return Err(CoreError::Config(format!(
                "{} layer permittivity must be ≥ 1, got {}",
                self.kind.short_name(),
                self.eps_r
            )));
        }
        if !(self.thickness_nm > 0.0) {
            return Err(CoreError::Config(format!(
                "{} layer thickness must be positive, got {} nm",
                self.kind.short_name(),
                self.thickness_nm
            )));
        }
        if !(self.tan_delta >= 0.0) {
            return Err(CoreError::Config(format!(
                "{} layer loss tangent must be non-negative, got {}",
                self.kind.short_name(),
                self.tan_delta
            )));
        }
        Ok(())
    }
}

/// The three interface layers plus the substrate permittivity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialStack {
    pub preset_name: String,
    pub eps_substrate: f64,
    pub ms: MaterialLayer,
    pub ma: MaterialLayer,
    pub sa: MaterialLayer,
}

impl MaterialStack {
    /// Simplified setting used for optimization runs: ε_i = 10, t_i = 3 nm
    /// for every interface layer, silicon substrate, uniform unit-scale loss
    /// tangent placeholder of 1e-3.
    pub fn simplified() -> Self {
        let layer = |kind| MaterialLayer {
            kind,
            eps_r: 10.0,
            thickness_nm: 3.0,
            tan_delta: 1e-3,
        };
        Self {
            preset_name: "simplified".into(),
            eps_substrate: 11.7,
            ms: layer(LayerKind::MetalSubstrate),
            ma: layer(LayerKind::MetalAir),
            sa: layer(LayerKind::SubstrateAir),
        }
    }

    /// Measured niobium-on-silicon parameters.
    pub fn nb_on_si() -> Self {
        Self {
            preset_name: "nb-on-si".into(),
            eps_substrate: 11.7,
            ms: MaterialLayer {
                kind: LayerKind::MetalSubstrate,
                eps_r: 11.7,
                thickness_nm: 2.0,
                tan_delta: 1.3e-3,
            },
            ma: MaterialLayer {
                kind: LayerKind::MetalAir,
                eps_r: 33.0,
                thickness_nm: 5.0,
                tan_delta: 4.7e-2,
            },
            sa: MaterialLayer {
                kind: LayerKind::SubstrateAir,
                eps_r: 4.2,
                thickness_nm: 5.0,
                tan_delta: 2.1e-3,
            },
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "simplified" => Ok(Self::simplified()),
            "nb-on-si" | "nb_on_si" => Ok(Self::nb_on_si()),
            other => Err(CoreError::Usage(format!(
                "unknown material preset '{other}' (built-ins: simplified, nb-on-si)"
            ))),
        }
    }

    /// Parse a stack from a JSON or TOML config snippet. Must never panic on
    /// malformed input.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let parsed: MaterialStack = if text.trim_start().starts_with('{') {
            serde_json::from_str(text)?
        } else {
            toml::from_str(text).map_err(|e| CoreError::Serde(e.to_string()))?
        };
        parsed.validate()?;
        Ok(parsed)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps_substrate >= 1.0) {
            return Err(CoreError::Config(format!(
                "substrate permittivity must be ≥ 1, got {}",
                self.eps_substrate
            )));
        }
        let kinds = [
            (self.ms.kind, LayerKind::MetalSubstrate),
            (self.ma.kind, LayerKind::MetalAir),
            (self.sa.kind, LayerKind::SubstrateAir),
        ];
        for (got, want) in kinds {
            if got != want {
                return Err(CoreError::Config(format!(
                    "layer slot {} holds a {} layer",
                    want.short_name(),
                    got.short_name()
                )));
            }
        }
        self.ms.validate()?;
        self.ma.validate()?;
        self.sa.validate()
    }

    pub fn layer(&self, kind: LayerKind) -> &MaterialLayer {
        match kind {
            LayerKind::MetalSubstrate => &self.ms,
            LayerKind::MetalAir => &self.ma,
            LayerKind::SubstrateAir => &self.sa,
        }
    }

    pub fn layers(&self) -> [&MaterialLayer; 3] {
        [&self.ms, &self.ma, &self.sa]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_validate() {
        MaterialStack::simplified().validate().unwrap();
        MaterialStack::nb_on_si().validate().unwrap();
        assert!(MaterialStack::by_name("sapphire").is_err());
    }

    #[test]
    fn nb_preset_values() {
        let s = MaterialStack::nb_on_si();
        assert_eq!(s.ms.tan_delta, 1.3e-3);
        assert_eq!(s.sa.tan_delta, 2.1e-3);
        assert_eq!(s.ma.tan_delta, 4.7e-2);
        assert_eq!(s.ms.thickness_nm, 2.0);
        assert_eq!(s.ma.eps_r, 33.0);
        assert_eq!(s.eps_substrate, 11.7);
    }

    #[test]
    fn config_parsing_rejects_garbage() {
        for bad in [
            "",
            "{",
            "{\"preset_name\": 3}",
            "preset_name = \"x\"",
            "{\"preset_name\":\"x\",\"eps_substrate\":-2,\"ms\":{\"kind\":\"metal_substrate\",\"eps_r\":10,\"thickness_nm\":3,\"tan_delta\":0.001},\"ma\":{\"kind\":\"metal_air\",\"eps_r\":10,\"thickness_nm\":3,\"tan_delta\":0.001},\"sa\":{\"kind\":\"substrate_air\",\"eps_r\":10,\"thickness_nm\":3,\"tan_delta\":0.001}}",
        ] {
            assert!(MaterialStack::from_config_str(bad).is_err());
        }
    }

    #[test]
    fn config_roundtrip_json_and_toml() {
        let s = MaterialStack::nb_on_si();
        let json = serde_json::to_string(&s).unwrap();
        let back = MaterialStack::from_config_str(&json).unwrap();
        assert_eq!(s, back);
        let toml_text = toml::to_string(&s).unwrap();
        let back2 = MaterialStack::from_config_str(&toml_text).unwrap();
        assert_eq!(s, back2);
    }
}
