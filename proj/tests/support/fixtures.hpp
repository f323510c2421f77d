#pragma once

#include "kelvin/eval_point.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace kelvin::testing {

inline constexpr double kPi = std::numbers::pi;

inline double rel_err(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

struct TablePoint {
    double x;
    double rho;
    double alpha_over_pi;
    int n;  ///< largest retained index as printed
    double printed;
};

// Same ordering as the frozen reference arrays.
inline constexpr std::array<TablePoint, 12> kTablePoints = {{
    {0.4, 0.005, 0.00, 8, 6.368e-6},  {0.4, 0.005, 0.10, 5, 3.146e-6},
    {0.4, 0.005, 0.20, 6, 3.146e-6},  {0.4, 0.005, 0.25, 5, 4.687e-3},
    {0.4, 0.005, 0.30, 3, 2.976e-3},  {0.4, 0.005, 0.40, 1, 4.326e-2},
    {1.0, 0.02, 0.00, 12, 2.613e-7},  {1.0, 0.02, 0.10, 12, 1.998e-6},
    {1.0, 0.02, 0.20, 11, 1.899e-5},  {1.0, 0.02, 0.25, 9, 1.428e-5},
    {1.0, 0.02, 0.30, 9, 2.890e-4},   {1.0, 0.02, 0.40, 8, 7.928e-4},
}};

inline EvalPoint point_of(const TablePoint& t) {
    return make_point(t.x, t.rho, t.alpha_over_pi * kPi);
}

}  // namespace kelvin::testing
