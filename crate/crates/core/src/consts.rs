//! Mathematical constants not provided by `std::f64::consts`.

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `log 2π`.
pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// `log π`.
pub const LN_PI: f64 = 1.144_729_885_849_400_2;

/// `γ + log 2π`, the constant that recurs in the Fourier coefficients of `log Γ`.
pub const GAMMA_PLUS_LN_2PI: f64 = EULER_GAMMA + LN_2PI;

/// Catalan's constant `G = β(2)`.
pub const CATALAN: f64 = 0.915_965_594_177_219;
