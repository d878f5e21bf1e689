#pragma once

#include <cmath>

#include "doctest.h"
#include "extwhit/types.hpp"

inline double rel(extwhit::Complex a, extwhit::Complex b) { return extwhit::rel_diff(a, b); }
inline double rel(const extwhit::EvalOutcome& a, extwhit::Complex b) { return extwhit::rel_diff(a.unscaled(), b); }
inline double rel(const extwhit::EvalOutcome& a, const extwhit::EvalOutcome& b) { return extwhit::rel_diff(a, b); }

inline const extwhit::Complex I(0.0, 1.0);
