#pragma once

#include <random>
#include <vector>

#include "bergman/poly.hpp"
#include "bergman/weights.hpp"

namespace testutil {

inline bergman::WeightSpec fock(double alpha) {
    bergman::WeightSpec s = bergman::WeightSpec::fock(alpha);
    s.validate();
    return s;
}

inline bergman::WeightSpec affine21() {
    bergman::WeightSpec s = bergman::WeightSpec::affine_disc(2.0, 1.0, 1.0);
    s.validate();
    return s;
}

inline bergman::WeightSpec power2() {
    bergman::WeightSpec s = bergman::WeightSpec::power_disc(2.0, 1.0);
    s.validate();
    return s;
}

// Deterministic random polynomial with coefficients in the unit box.
inline bergman::Poly random_poly(std::mt19937& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    bergman::Poly f;
    f.c.resize(static_cast<size_t>(degree) + 1);
    for (auto& c : f.c) c = bergman::cplx(u(rng), u(rng));
    return f;
}

}  // namespace testutil
