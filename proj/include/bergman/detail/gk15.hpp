#pragma once

// Gauss-Kronrod 7-15 pair on [-1,1]: Kronrod abscissae (nonnegative half) and
// weights, plus the embedded 7-point Gauss weights at the odd-index
// abscissae.

namespace bergman::detail {

inline constexpr int kGkHalf = 8;
inline constexpr double kGkX[kGkHalf] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
inline constexpr double kGkW[kGkHalf] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
inline constexpr double kGW[4] = {0.12948496616886969327, 0.27970539148927666790,
                                  0.38183005050511894495, 0.41795918367346938776};

}  // namespace bergman::detail
