#pragma once

// Regression pins recorded from this implementation's first run on the
// reference platform.  They guard against silent behavior drift, not against
// porting; re-record deliberately if the FFT backend or libm changes.

// l2_norm(random_field({16*pi, 256}, seed 0, amplitude 1, decay 2))
#define NLKS_GOLDEN_RANDOM_FIELD_L2 14.751716010542463

// sup_t ||u(t)|| over the chaotic reference run (l = 16*pi, N = 512,
// dt = 0.05, T = 100, alpha = 0.01, seed 1).
#define NLKS_GOLDEN_CHAOTIC_SUP_L2 15.474524916325505

// mean l2 coordinate of the attractor observable cloud (seed 1, alpha 0.01,
// transient 50, sample 100, defaults otherwise).
#define NLKS_GOLDEN_ATTRACTOR_MEAN_L2 13.250769355167005
