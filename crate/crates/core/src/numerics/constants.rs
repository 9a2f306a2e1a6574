//! Mathematical constants used by the closed forms.

use std::f64::consts;

pub const PI: f64 = consts::PI;
pub const LN_2: f64 = consts::LN_2;
pub const E: f64 = consts::E;
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;
/// Catalan's constant, ∑_{k≥0} (−1)^k/(2k+1)².
pub const CATALAN: f64 = 0.915_965_594_177_219_015_054_603_514_932;
pub const ZETA3: f64 = 1.202_056_903_159_594_285_399_738_161_51;
pub const ZETA5: f64 = 1.036_927_755_143_369_926_331_365_486_46;
pub const ZETA7: f64 = 1.008_349_277_381_922_826_839_797_549_85;
pub const ZETA9: f64 = 1.002_008_392_826_082_214_417_852_769_23;
pub const ZETA11: f64 = 1.000_494_188_604_119_464_558_702_282_53;
pub const ZETA13: f64 = 1.000_122_713_347_578_489_146_751_836_53;

/// The constant table as one value, for callers that want to pass it around.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    pub pi: f64,
    pub euler_gamma: f64,
    pub ln2: f64,
    pub catalan: f64,
    pub e: f64,
    pub zeta3: f64,
    pub zeta5: f64,
    pub zeta7: f64,
    pub zeta9: f64,
    pub zeta11: f64,
    pub zeta13: f64,
}

pub const CONSTANTS: Constants = Constants {
    pi: PI,
    euler_gamma: EULER_GAMMA,
    ln2: LN_2,
    catalan: CATALAN,
    e: E,
    zeta3: ZETA3,
    zeta5: ZETA5,
    zeta7: ZETA7,
    zeta9: ZETA9,
    zeta11: ZETA11,
    zeta13: ZETA13,
};

impl Constants {
    /// ζ(n) for odd n in 3..=13, if tabulated.
    pub fn odd_zeta(&self, n: u32) -> Option<f64> {
        match n {
            3 => Some(self.zeta3),
            5 => Some(self.zeta5),
            7 => Some(self.zeta7),
            9 => Some(self.zeta9),
            11 => Some(self.zeta11),
            13 => Some(self.zeta13),
            _ => None,
        }
    }
}
